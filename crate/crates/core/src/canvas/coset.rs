//! Todd-Coxeter enumeration of the cosets of the trivial subgroup, with
//! Hasselgrove-Leech-Trotter style definitions and a cap on live cosets.

const NONE: u32 = u32::MAX;

/// A word letter: generator index and exponent `1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub exponent: i8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetOutcome {
    /// The table closed; the group has this order.
    Closed(usize),
    /// More than the allowed number of live cosets would be needed.
    Exhausted(usize),
}

struct Exhausted;

struct Table {
    width: usize,
    cells: Vec<u32>,
    forward: Vec<u32>,
    live: usize,
    budget: usize,
    queue: Vec<u32>,
}

fn column(l: Letter) -> usize {
    2 * l.generator + usize::from(l.exponent < 0)
}

fn inv(x: usize) -> usize {
    x ^ 1
}

impl Table {
    fn get(&self, c: u32, x: usize) -> u32 {
        self.cells[c as usize * self.width + x]
    }

    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.cells[c as usize * self.width + x] = d;
    }

    fn is_live(&self, c: u32) -> bool {
        self.forward[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<(), Exhausted> {
        if self.live >= self.budget || self.forward.len() >= NONE as usize {
            return Err(Exhausted);
        }
        let d = self.forward.len() as u32;
        self.forward.push(d);
        self.cells.extend(std::iter::repeat_n(NONE, self.width));
        self.live += 1;
        self.set(c, x, d);
        self.set(d, inv(x), c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.forward[root as usize] != root {
            root = self.forward[root as usize];
        }
        let mut cur = c;
        while self.forward[cur as usize] != root {
            let next = self.forward[cur as usize];
            self.forward[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.forward[hi as usize] = lo;
            self.live -= 1;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.width {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                self.set(f, inv(x), NONE);
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let ex = self.get(e1, x);
                let fx = self.get(f1, inv(x));
                if ex != NONE {
                    self.merge(f1, ex);
                } else if fx != NONE {
                    self.merge(e1, fx);
                } else {
                    self.set(e1, x, f1);
                    self.set(f1, inv(x), e1);
                }
            }
        }
        self.queue.clear();
    }

    fn scan_and_fill(&mut self, c: u32, word: &[usize]) -> Result<(), Exhausted> {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0, word.len());
        loop {
            while i < j && self.get(f, word[i]) != NONE {
                f = self.get(f, word[i]);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.get(b, inv(word[j - 1])) != NONE {
                b = self.get(b, inv(word[j - 1]));
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, word[i], b);
                self.set(b, inv(word[i]), f);
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }
}

/// Enumerates the cosets of the trivial subgroup of the group with the given
/// generators and relators, keeping at most `budget` cosets alive.
pub fn enumerate_cosets(generators: usize, relators: &[Vec<Letter>], budget: usize) -> CosetOutcome {
    let width = 2 * generators;
    let mut table = Table {
        width,
        cells: vec![NONE; width],
        forward: vec![0],
        live: 1,
        budget: budget.max(1),
        queue: Vec::new(),
    };
    let words: Vec<Vec<usize>> = relators
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| r.iter().map(|&l| column(l)).collect())
        .collect();
    let mut c = 0u32;
    while (c as usize) < table.forward.len() {
        if table.is_live(c) {
            for w in &words {
                if !table.is_live(c) {
                    break;
                }
                if table.scan_and_fill(c, w).is_err() {
                    return CosetOutcome::Exhausted(table.live);
                }
            }
            for x in 0..width {
                if table.is_live(c) && table.get(c, x) == NONE && table.define(c, x).is_err() {
                    return CosetOutcome::Exhausted(table.live);
                }
            }
        }
        c += 1;
    }
    CosetOutcome::Closed(table.live)
}
