use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{Quiver, QuiverWithCycles, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LabelKind {
    /// The base field.
    Base,
    /// A proper extension of the base field.
    Ext,
}

/// Division algebra attached to a vertex. `split_count` is the number of
/// simple blocks of `G (x) G` for an `Ext` vertex; it is 1 for `Base`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivisionLabel {
    pub kind: LabelKind,
    pub split_count: u32,
}

impl DivisionLabel {
    pub const BASE: DivisionLabel = DivisionLabel { kind: LabelKind::Base, split_count: 1 };

    pub fn ext(split_count: u32) -> Self {
        DivisionLabel { kind: LabelKind::Ext, split_count }
    }

    pub fn is_ext(&self) -> bool {
        self.kind == LabelKind::Ext
    }
}

impl Default for DivisionLabel {
    fn default() -> Self {
        Self::BASE
    }
}

impl fmt::Display for DivisionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LabelKind::Base => f.write_str("Base"),
            LabelKind::Ext if self.split_count == 1 => f.write_str("Ext"),
            LabelKind::Ext => write!(f, "Ext/{}", self.split_count),
        }
    }
}

/// Label of a vertex: either a single algebra, or the pair of factor labels
/// of a vertex of a tensor quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    Single(DivisionLabel),
    Pair(DivisionLabel, DivisionLabel),
}

impl VertexLabel {
    /// The label of the vertex algebra. `Ext (x) Ext` keeps the split count
    /// of its factors; a pair with exactly one `Ext` factor is again a
    /// division algebra of type `Ext`.
    pub fn product(&self) -> DivisionLabel {
        match *self {
            VertexLabel::Single(l) => l,
            VertexLabel::Pair(a, b) => match (a.kind, b.kind) {
                (LabelKind::Base, LabelKind::Base) => DivisionLabel::BASE,
                (LabelKind::Ext, LabelKind::Ext) => DivisionLabel::ext(a.split_count.max(b.split_count)),
                _ => DivisionLabel::ext(1),
            },
        }
    }

    /// For an `Ext (x) Ext` pair, the common number of blocks.
    pub fn split(&self) -> Result<Option<u32>> {
        match *self {
            VertexLabel::Pair(a, b) if a.is_ext() && b.is_ext() => {
                if a.split_count != b.split_count {
                    return Err(Error::InconsistentSplit(a.split_count, b.split_count));
                }
                Ok(Some(a.split_count))
            }
            _ => Ok(None),
        }
    }
}

impl Default for VertexLabel {
    fn default() -> Self {
        VertexLabel::Single(DivisionLabel::BASE)
    }
}

impl From<DivisionLabel> for VertexLabel {
    fn from(l: DivisionLabel) -> Self {
        VertexLabel::Single(l)
    }
}

/// A quiver with a label on every vertex. Missing entries read as `Base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledQuiver {
    pub quiver: Quiver,
    pub labels: BTreeMap<VertexId, VertexLabel>,
}

impl LabeledQuiver {
    pub fn new(quiver: Quiver, labels: BTreeMap<VertexId, VertexLabel>) -> Self {
        Self { quiver, labels }
    }

    /// All vertices labelled `Base`.
    pub fn unlabeled(quiver: Quiver) -> Self {
        Self { quiver, labels: BTreeMap::new() }
    }

    pub fn label(&self, v: &VertexId) -> VertexLabel {
        self.labels.get(v).copied().unwrap_or_default()
    }
}

/// The three arrow classes of a tensor quiver.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Provenance {
    pub vertical: Vec<crate::quiver::ArrowId>,
    pub horizontal: Vec<crate::quiver::ArrowId>,
    pub diagonal: Vec<crate::quiver::ArrowId>,
}

/// A quiver with cycles and vertex labels. Values produced by
/// [`tensor_qwc`](super::tensor_qwc) also remember which arrows are
/// horizontal, vertical and diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledQuiverWithCycles {
    pub qwc: QuiverWithCycles,
    pub labels: BTreeMap<VertexId, VertexLabel>,
    pub(crate) provenance: Option<Provenance>,
}

impl LabeledQuiverWithCycles {
    pub fn new(qwc: QuiverWithCycles, labels: BTreeMap<VertexId, VertexLabel>) -> Self {
        Self { qwc, labels, provenance: None }
    }

    pub fn label(&self, v: &VertexId) -> VertexLabel {
        self.labels.get(v).copied().unwrap_or_default()
    }

    pub fn is_tensor(&self) -> bool {
        self.provenance.is_some()
    }
}

impl AsRef<QuiverWithCycles> for LabeledQuiverWithCycles {
    fn as_ref(&self) -> &QuiverWithCycles {
        &self.qwc
    }
}
