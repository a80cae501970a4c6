use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::quiver::{Arrow, ArrowId, Quiver, VertexId};

use super::labels::{DivisionLabel, LabeledQuiver, VertexLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DynkinType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DynkinType::A => "A",
            DynkinType::B => "B",
            DynkinType::C => "C",
            DynkinType::D => "D",
            DynkinType::E => "E",
            DynkinType::F => "F",
            DynkinType::G => "G",
        };
        f.write_str(s)
    }
}

/// An oriented, labelled Dynkin diagram.
///
/// Vertices are numbered `1..=rank`. `D_n` has vertices 1 and 2 attached to
/// 3 followed by the path `3 - 4 - ... - n`; `E_n` is the path `1 - ... - n-1`
/// with `n` attached to 3. In `B_n` vertex 1 is `Base` and the others `Ext`;
/// in `C_n` vertex 1 is `Ext` and the others `Base`; `F_4` is
/// `Ext, Ext, Base, Base` and `G_2` is `Ext, Base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledDynkinSpec {
    pub kind: DynkinType,
    pub rank: u32,
    /// Directed edges `(source, target)`; `None` selects the default
    /// orientation.
    pub orientation: Option<Vec<(u32, u32)>>,
    /// Number of simple blocks of `G (x) G` attached to `Ext` vertices.
    pub split_count: u32,
}

impl LabeledDynkinSpec {
    pub fn new(kind: DynkinType, rank: u32) -> Self {
        Self { kind, rank, orientation: None, split_count: 2 }
    }

    pub fn with_orientation(mut self, arrows: impl IntoIterator<Item = (u32, u32)>) -> Self {
        self.orientation = Some(arrows.into_iter().collect());
        self
    }

    pub fn with_split_count(mut self, n: u32) -> Self {
        self.split_count = n;
        self
    }

    fn check_rank(&self) -> Result<()> {
        let n = self.rank;
        let ok = match self.kind {
            DynkinType::A => n >= 1,
            DynkinType::B | DynkinType::C => n >= 2,
            DynkinType::D => n >= 4,
            DynkinType::E => (6..=8).contains(&n),
            DynkinType::F => n == 4,
            DynkinType::G => n == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Dynkin(format!("no diagram of type {}{}", self.kind, n)))
        }
    }

    /// Undirected edges of the diagram, as `(smaller, larger)`.
    pub fn edges(&self) -> Result<Vec<(u32, u32)>> {
        self.check_rank()?;
        let n = self.rank;
        let mut edges: Vec<(u32, u32)> = match self.kind {
            DynkinType::D => [(1, 3), (2, 3)].into_iter().chain((3..n).map(|i| (i, i + 1))).collect(),
            DynkinType::E => (1..n - 1).map(|i| (i, i + 1)).chain([(3, n)]).collect(),
            _ => (1..n).map(|i| (i, i + 1)).collect(),
        };
        edges.sort_unstable();
        Ok(edges)
    }

    /// `i -> i+1` along the main path, so for `D_n` both 1 and 2 point into
    /// 3. For `E_n` the path points into 3 from both ends and 3 points to `n`.
    pub fn default_orientation(&self) -> Result<Vec<(u32, u32)>> {
        let n = self.rank;
        let mut arrows: Vec<(u32, u32)> = self
            .edges()?
            .into_iter()
            .map(|(a, b)| if self.kind == DynkinType::E && a >= 3 && b != n { (b, a) } else { (a, b) })
            .collect();
        arrows.sort_unstable();
        Ok(arrows)
    }

    pub fn arrows(&self) -> Result<Vec<(u32, u32)>> {
        let edges = self.edges()?;
        let Some(orientation) = &self.orientation else {
            return self.default_orientation();
        };
        let mut seen = BTreeSet::new();
        for &(s, t) in orientation {
            let e = (s.min(t), s.max(t));
            if edges.binary_search(&e).is_err() {
                return Err(Error::Dynkin(format!("{s} - {t} is not an edge of {}{}", self.kind, self.rank)));
            }
            if !seen.insert(e) {
                return Err(Error::Dynkin(format!("edge {} - {} oriented twice", e.0, e.1)));
            }
        }
        if let Some(e) = edges.iter().find(|e| !seen.contains(e)) {
            return Err(Error::Dynkin(format!("edge {} - {} has no orientation", e.0, e.1)));
        }
        let mut arrows = orientation.clone();
        arrows.sort_unstable();
        Ok(arrows)
    }

    /// Label of vertex `i` (1-based).
    pub fn label(&self, i: u32) -> DivisionLabel {
        let ext = match self.kind {
            DynkinType::A | DynkinType::D | DynkinType::E => false,
            DynkinType::B => i != 1,
            DynkinType::C => i == 1,
            DynkinType::F => i <= 2,
            DynkinType::G => i == 1,
        };
        if ext {
            DivisionLabel::ext(self.split_count)
        } else {
            DivisionLabel::BASE
        }
    }

    /// The Nakayama permutation of the preprojective algebra, as images of
    /// `1..=rank` (index 0 holds the image of 1).
    pub fn nakayama(&self) -> Result<Vec<u32>> {
        self.check_rank()?;
        let n = self.rank;
        let mut sigma: Vec<u32> = (1..=n).collect();
        match self.kind {
            DynkinType::A => sigma.reverse(),
            DynkinType::D if n % 2 == 1 => sigma.swap(0, 1),
            DynkinType::E if n == 6 => {
                sigma.swap(0, 4);
                sigma.swap(1, 3);
            }
            _ => {}
        }
        Ok(sigma)
    }

    /// Homogeneity degree of the type, `None` for `A_n` with `n` even.
    fn l_value(&self) -> Option<u32> {
        let n = self.rank;
        match self.kind {
            DynkinType::A => (n % 2 == 1).then_some(n.div_ceil(2)),
            DynkinType::B | DynkinType::C => Some(n),
            DynkinType::D => Some(n - 1),
            DynkinType::E => Some(match n {
                6 => 6,
                7 => 9,
                _ => 15,
            }),
            DynkinType::F => Some(6),
            DynkinType::G => Some(3),
        }
    }
}

impl fmt::Display for LabeledDynkinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)?;
        if let Some(o) = &self.orientation {
            let parts: Vec<String> = o.iter().map(|(s, t)| format!("{s}>{t}")).collect();
            write!(f, ":{}", parts.join(","))?;
        }
        Ok(())
    }
}

/// Parses `TYPE RANK[:ORIENTATION]`, e.g. `A3`, `B2:2>1` or
/// `E6:1>2>3<4<5,3>6`. In an orientation chain `a>b` is an arrow `a -> b`
/// and `a<b` an arrow `b -> a`; comma separated chains describe branches.
impl FromStr for LabeledDynkinSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, orientation) = match s.split_once(':') {
            Some((h, o)) => (h.trim(), Some(o)),
            None => (s, None),
        };
        let mut chars = head.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => DynkinType::A,
            Some('B') => DynkinType::B,
            Some('C') => DynkinType::C,
            Some('D') => DynkinType::D,
            Some('E') => DynkinType::E,
            Some('F') => DynkinType::F,
            Some('G') => DynkinType::G,
            _ => return Err(Error::Dynkin(format!("unknown Dynkin type in {s:?}"))),
        };
        let rank: u32 = chars
            .as_str()
            .trim()
            .parse()
            .map_err(|_| Error::Dynkin(format!("bad rank in {s:?}")))?;
        let mut spec = LabeledDynkinSpec::new(kind, rank);
        spec.check_rank()?;
        if let Some(o) = orientation {
            spec.orientation = Some(parse_orientation(o)?);
            spec.arrows()?;
        }
        Ok(spec)
    }
}

fn parse_orientation(text: &str) -> Result<Vec<(u32, u32)>> {
    let mut arrows = Vec::new();
    for chain in text.split(',').map(str::trim).filter(|c| !c.is_empty()) {
        let mut prev: Option<u32> = None;
        let mut pending: Option<char> = None;
        let mut number = String::new();
        let flush = |number: &mut String| -> Result<u32> {
            let v = number.trim().parse().map_err(|_| Error::Dynkin(format!("bad orientation chain {chain:?}")))?;
            number.clear();
            Ok(v)
        };
        for c in chain.chars().chain(std::iter::once('\0')) {
            if c == '<' || c == '>' || c == '\0' {
                let v = flush(&mut number)?;
                if let (Some(p), Some(op)) = (prev, pending) {
                    arrows.push(if op == '>' { (p, v) } else { (v, p) });
                }
                prev = Some(v);
                pending = Some(c);
            } else {
                number.push(c);
            }
        }
        if arrows.is_empty() && prev.is_some() && !chain.contains(['<', '>']) {
            return Err(Error::Dynkin(format!("orientation chain {chain:?} has no arrow")));
        }
    }
    Ok(arrows)
}

pub(crate) fn vertex_name(i: u32) -> VertexId {
    VertexId::new(i.to_string())
}

pub(crate) fn arrow_name(s: u32, t: u32) -> ArrowId {
    ArrowId::new(format!("{s}-{t}"))
}

/// The oriented Dynkin quiver with vertex labels. Vertex ids are `"1"`..,
/// the arrow `i -> j` is named `"i-j"`.
pub fn dynkin_quiver(spec: &LabeledDynkinSpec) -> Result<LabeledQuiver> {
    if spec.split_count == 0 {
        return Err(Error::Dynkin("split count must be positive".into()));
    }
    let arrows = spec.arrows()?;
    let vertices: Vec<VertexId> = (1..=spec.rank).map(vertex_name).collect();
    let quiver = Quiver::new(
        vertices.clone(),
        arrows.iter().map(|&(s, t)| Arrow::new(arrow_name(s, t), vertex_name(s), vertex_name(t))),
    );
    let labels: BTreeMap<VertexId, VertexLabel> =
        (1..=spec.rank).map(|i| (vertex_name(i), VertexLabel::Single(spec.label(i)))).collect();
    Ok(LabeledQuiver::new(quiver, labels))
}

/// `Some(l)` when the orientation is stable under the Nakayama permutation,
/// so that the preprojective algebra is `l`-homogeneous.
pub fn l_homogeneity(spec: &LabeledDynkinSpec) -> Result<Option<u32>> {
    let arrows = spec.arrows()?;
    let sigma = spec.nakayama()?;
    let image = |i: u32| sigma[(i - 1) as usize];
    let set: BTreeSet<(u32, u32)> = arrows.iter().copied().collect();
    let stable = arrows.iter().all(|&(s, t)| set.contains(&(image(s), image(t))));
    Ok(if stable { spec.l_value() } else { None })
}
