//! Spaces, Schubert indices, validation and the basic measurements on them.

mod enumerate;
pub(crate) mod parse;

pub use enumerate::{default_cap, enumerate_indices, DEFAULT_ENUM_CAP};
pub use parse::{parse_index, parse_index_unchecked, parse_space};

use std::fmt;

use crate::error::{Error, Result, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceKind {
    Grass,
    Flag,
    OrthGrass,
    OrthFlag,
    SympGrass,
    SympFlag,
}

impl SpaceKind {
    pub fn prefix(self) -> &'static str {
        match self {
            SpaceKind::Grass => "G",
            SpaceKind::Flag => "F",
            SpaceKind::OrthGrass => "OG",
            SpaceKind::OrthFlag => "OF",
            SpaceKind::SympGrass => "SG",
            SpaceKind::SympFlag => "SF",
        }
    }

    pub fn from_prefix(p: &str) -> Option<SpaceKind> {
        Some(match p {
            "G" => SpaceKind::Grass,
            "F" => SpaceKind::Flag,
            "OG" => SpaceKind::OrthGrass,
            "OF" => SpaceKind::OrthFlag,
            "SG" => SpaceKind::SympGrass,
            "SF" => SpaceKind::SympFlag,
            _ => return None,
        })
    }

    /// True for the kinds written with a `;` before the ambient dimension.
    pub fn is_flag(self) -> bool {
        matches!(
            self,
            SpaceKind::Flag | SpaceKind::OrthFlag | SpaceKind::SympFlag
        )
    }

    pub fn is_type_a(self) -> bool {
        matches!(self, SpaceKind::Grass | SpaceKind::Flag)
    }

    pub fn is_orth(self) -> bool {
        matches!(self, SpaceKind::OrthGrass | SpaceKind::OrthFlag)
    }

    pub fn is_symp(self) -> bool {
        matches!(self, SpaceKind::SympGrass | SpaceKind::SympFlag)
    }
}

/// Which variety: kind, step dimensions d_1 < ... < d_k and ambient dimension n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Space {
    pub kind: SpaceKind,
    pub steps: Vec<u32>,
    pub n: u32,
    /// Component of the maximal even orthogonal case. `None` means the
    /// component on which s has the parity of d_k.
    pub component: Option<bool>,
}

impl Space {
    pub fn new(kind: SpaceKind, steps: Vec<u32>, n: u32) -> Result<Space> {
        let s = Space {
            kind,
            steps,
            n,
            component: None,
        };
        let v = s.violations();
        if v.is_empty() {
            Ok(s)
        } else {
            Err(Error::Invalid(v))
        }
    }

    pub fn grass(k: u32, n: u32) -> Result<Space> {
        Space::new(SpaceKind::Grass, vec![k], n)
    }

    pub fn flag(steps: &[u32], n: u32) -> Result<Space> {
        Space::new(SpaceKind::Flag, steps.to_vec(), n)
    }

    pub fn orth_grass(k: u32, n: u32) -> Result<Space> {
        Space::new(SpaceKind::OrthGrass, vec![k], n)
    }

    pub fn orth_flag(steps: &[u32], n: u32) -> Result<Space> {
        Space::new(SpaceKind::OrthFlag, steps.to_vec(), n)
    }

    pub fn symp_grass(k: u32, n: u32) -> Result<Space> {
        Space::new(SpaceKind::SympGrass, vec![k], n)
    }

    pub fn symp_flag(steps: &[u32], n: u32) -> Result<Space> {
        Space::new(SpaceKind::SympFlag, steps.to_vec(), n)
    }

    /// Number of steps in the flag.
    pub fn levels(&self) -> u32 {
        self.steps.len() as u32
    }

    /// Dimension of the largest subspace, d_k.
    pub fn top(&self) -> u32 {
        self.steps.last().copied().unwrap_or(0)
    }

    /// d_t for 1-based t, with d_0 = 0.
    pub fn step(&self, t: u32) -> u32 {
        if t == 0 {
            0
        } else {
            self.steps[t as usize - 1]
        }
    }

    /// Largest isotropic dimension, floor(n/2).
    pub fn half(&self) -> u32 {
        self.n / 2
    }

    /// The Grassmannian that the t-th projection lands in.
    pub fn level_space(&self, t: u32) -> Space {
        let kind = match self.kind {
            SpaceKind::Grass | SpaceKind::Flag => SpaceKind::Grass,
            SpaceKind::OrthGrass | SpaceKind::OrthFlag => SpaceKind::OrthGrass,
            SpaceKind::SympGrass | SpaceKind::SympFlag => SpaceKind::SympGrass,
        };
        Space {
            kind,
            steps: vec![self.step(t)],
            n: self.n,
            component: self.component,
        }
    }

    /// Dimension of a type A flag variety: sum of d_i (d_{i+1} - d_i) with d_{k+1} = n.
    pub fn ambient_dimension(&self) -> Result<u64> {
        if !self.kind.is_type_a() {
            return Err(Error::UnsupportedKind(format!(
                "no dimension formula for {}",
                self.kind.prefix()
            )));
        }
        let mut total = 0u64;
        for (i, &d) in self.steps.iter().enumerate() {
            let next = self.steps.get(i + 1).copied().unwrap_or(self.n);
            total += d as u64 * (next - d) as u64;
        }
        Ok(total)
    }

    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.steps.is_empty() {
            out.push(Violation::new("space", "no step dimensions"));
            return out;
        }
        if self.steps[0] == 0 {
            out.push(Violation::new("space", "step dimensions must be positive"));
        }
        if self.steps.windows(2).any(|w| w[0] >= w[1]) {
            out.push(Violation::new(
                "space",
                "step dimensions must be strictly increasing",
            ));
        }
        if !self.kind.is_flag() && self.steps.len() != 1 {
            out.push(Violation::new(
                "space",
                format!("{} takes a single step dimension", self.kind.prefix()),
            ));
        }
        let top = self.top();
        if self.kind.is_type_a() {
            if top > self.n {
                out.push(Violation::new(
                    "space",
                    format!("d_k = {} exceeds n = {}", top, self.n),
                ));
            }
        } else {
            if top > self.n / 2 {
                out.push(Violation::new(
                    "space",
                    format!("isotropic dimension {} exceeds floor(n/2) = {}", top, self.n / 2),
                ));
            }
            if self.kind.is_symp() && !self.n.is_multiple_of(2) {
                out.push(Violation::new("space", "symplectic spaces need even n"));
            }
        }
        out
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims = self
            .steps
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",");
        if self.kind.is_flag() {
            write!(f, "{}({};{})", self.kind.prefix(), dims, self.n)
        } else {
            write!(f, "{}({},{})", self.kind.prefix(), dims, self.n)
        }
    }
}

/// A sub-index value together with its block label (upper index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub value: u32,
    pub block: u32,
}

impl Entry {
    pub fn new(value: u32, block: u32) -> Entry {
        Entry { value, block }
    }
}

pub fn entries(pairs: &[(u32, u32)]) -> Vec<Entry> {
    pairs.iter().map(|&(v, b)| Entry::new(v, b)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchubertIndex {
    Plain(Vec<u32>),
    Flagged(Vec<Entry>),
    Pair { a: Vec<u32>, b: Vec<u32> },
    FlaggedPair { a: Vec<Entry>, b: Vec<Entry> },
}

impl SchubertIndex {
    pub fn a_values(&self) -> Vec<u32> {
        match self {
            SchubertIndex::Plain(a) | SchubertIndex::Pair { a, .. } => a.clone(),
            SchubertIndex::Flagged(e) | SchubertIndex::FlaggedPair { a: e, .. } => {
                e.iter().map(|x| x.value).collect()
            }
        }
    }

    /// Block labels of the a-side; unflagged shapes report block 1 everywhere.
    pub fn a_blocks(&self) -> Vec<u32> {
        match self {
            SchubertIndex::Plain(a) | SchubertIndex::Pair { a, .. } => vec![1; a.len()],
            SchubertIndex::Flagged(e) | SchubertIndex::FlaggedPair { a: e, .. } => {
                e.iter().map(|x| x.block).collect()
            }
        }
    }

    pub fn b_values(&self) -> Vec<u32> {
        match self {
            SchubertIndex::Pair { b, .. } => b.clone(),
            SchubertIndex::FlaggedPair { b, .. } => b.iter().map(|x| x.value).collect(),
            _ => Vec::new(),
        }
    }

    pub fn b_blocks(&self) -> Vec<u32> {
        match self {
            SchubertIndex::Pair { b, .. } => vec![1; b.len()],
            SchubertIndex::FlaggedPair { b, .. } => b.iter().map(|x| x.block).collect(),
            _ => Vec::new(),
        }
    }

    pub fn a_entries(&self) -> Vec<Entry> {
        self.a_values()
            .into_iter()
            .zip(self.a_blocks())
            .map(|(v, b)| Entry::new(v, b))
            .collect()
    }

    pub fn b_entries(&self) -> Vec<Entry> {
        self.b_values()
            .into_iter()
            .zip(self.b_blocks())
            .map(|(v, b)| Entry::new(v, b))
            .collect()
    }

    pub fn is_pair(&self) -> bool {
        matches!(
            self,
            SchubertIndex::Pair { .. } | SchubertIndex::FlaggedPair { .. }
        )
    }

    pub fn is_flagged(&self) -> bool {
        matches!(
            self,
            SchubertIndex::Flagged(_) | SchubertIndex::FlaggedPair { .. }
        )
    }
}

fn join_plain(v: &[u32]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn join_flagged(v: &[Entry]) -> String {
    v.iter()
        .map(|e| format!("{}^{}", e.value, e.block))
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchubertIndex::Plain(a) => write!(f, "{}", join_plain(a)),
            SchubertIndex::Flagged(e) => write!(f, "{}", join_flagged(e)),
            SchubertIndex::Pair { a, b } => write!(f, "({}|{})", join_plain(a), join_plain(b)),
            SchubertIndex::FlaggedPair { a, b } => {
                write!(f, "({}|{})", join_flagged(a), join_flagged(b))
            }
        }
    }
}

/// An index paired with the space it lives in.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Schubert {
    pub space: Space,
    pub index: SchubertIndex,
}

impl fmt::Display for Schubert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {}", self.index, self.space)
    }
}

impl std::str::FromStr for Schubert {
    type Err = Error;
    fn from_str(s: &str) -> Result<Schubert> {
        parse_index(s)
    }
}

impl Schubert {
    /// Builds a validated pair; fails with every violated invariant.
    pub fn new(space: Space, index: SchubertIndex) -> Result<Schubert> {
        let s = Schubert { space, index };
        let v = validate(&s.space, &s.index);
        if v.is_empty() {
            Ok(s)
        } else {
            Err(Error::Invalid(v))
        }
    }

    pub fn plain(a: &[u32], k: u32, n: u32) -> Result<Schubert> {
        Schubert::new(Space::grass(k, n)?, SchubertIndex::Plain(a.to_vec()))
    }

    pub fn flagged(e: &[(u32, u32)], steps: &[u32], n: u32) -> Result<Schubert> {
        Schubert::new(Space::flag(steps, n)?, SchubertIndex::Flagged(entries(e)))
    }

    pub fn orth(a: &[u32], b: &[u32], k: u32, n: u32) -> Result<Schubert> {
        Schubert::new(
            Space::orth_grass(k, n)?,
            SchubertIndex::Pair {
                a: a.to_vec(),
                b: b.to_vec(),
            },
        )
    }

    pub fn orth_flagged(
        a: &[(u32, u32)],
        b: &[(u32, u32)],
        steps: &[u32],
        n: u32,
    ) -> Result<Schubert> {
        Schubert::new(
            Space::orth_flag(steps, n)?,
            SchubertIndex::FlaggedPair {
                a: entries(a),
                b: entries(b),
            },
        )
    }

    pub fn symp(a: &[u32], b: &[u32], k: u32, n: u32) -> Result<Schubert> {
        Schubert::new(
            Space::symp_grass(k, n)?,
            SchubertIndex::Pair {
                a: a.to_vec(),
                b: b.to_vec(),
            },
        )
    }

    /// Number of a-side entries, s.
    pub fn s(&self) -> usize {
        self.index.a_values().len()
    }
}

fn expected_shape(kind: SpaceKind) -> &'static str {
    match kind {
        SpaceKind::Grass => "a plain index",
        SpaceKind::Flag => "a flagged index",
        SpaceKind::OrthGrass | SpaceKind::SympGrass => "an (a | b) pair",
        SpaceKind::OrthFlag | SpaceKind::SympFlag => "a flagged (a | b) pair",
    }
}

fn shape_matches(kind: SpaceKind, index: &SchubertIndex) -> bool {
    matches!(
        (kind, index),
        (SpaceKind::Grass, SchubertIndex::Plain(_))
            | (SpaceKind::Flag, SchubertIndex::Flagged(_))
            | (SpaceKind::OrthGrass, SchubertIndex::Pair { .. })
            | (SpaceKind::SympGrass, SchubertIndex::Pair { .. })
            | (SpaceKind::OrthFlag, SchubertIndex::FlaggedPair { .. })
            | (SpaceKind::SympFlag, SchubertIndex::FlaggedPair { .. })
    )
}

/// Every violated invariant of `index` in `space`; empty iff valid.
pub fn validate(space: &Space, index: &SchubertIndex) -> Vec<Violation> {
    let mut out = space.violations();
    if !out.is_empty() {
        return out;
    }
    if !shape_matches(space.kind, index) {
        out.push(Violation::new(
            "shape",
            format!("{} expects {}", space, expected_shape(space.kind)),
        ));
        return out;
    }
    let a = index.a_values();
    let b = index.b_values();
    let top = space.top() as usize;

    if a.windows(2).any(|w| w[0] >= w[1]) {
        out.push(Violation::new("increasing", "a must be strictly increasing"));
    }
    if b.windows(2).any(|w| w[0] >= w[1]) {
        out.push(Violation::new("increasing", "b must be strictly increasing"));
    }
    if a.len() + b.len() != top {
        out.push(Violation::new(
            "length",
            format!(
                "index has {} entries but the top step has dimension {}",
                a.len() + b.len(),
                top
            ),
        ));
    }

    if space.kind.is_type_a() {
        if let Some(&x) = a.iter().find(|&&x| x < 1 || x > space.n) {
            out.push(Violation::new(
                "range",
                format!("entry {} outside 1..{}", x, space.n),
            ));
        }
    } else {
        let h = space.half();
        if let Some(&x) = a.iter().find(|&&x| x < 1 || x > h) {
            out.push(Violation::new(
                "range",
                format!("a entry {} outside 1..{}", x, h),
            ));
        }
        if let Some(&x) = b.iter().find(|&&x| x + 1 > h) {
            out.push(Violation::new(
                "range",
                format!("b entry {} outside 0..{}", x, h as i64 - 1),
            ));
        }
        for &x in &a {
            for &y in &b {
                if x == y + 1 {
                    out.push(Violation::new(
                        "offset",
                        format!("a entry {} equals b entry {} plus one", x, y),
                    ));
                }
            }
        }
        if space.kind.is_orth() && space.n == 2 * space.top() {
            let same = (a.len() as u32 % 2) == (space.top() % 2);
            let want_same = space.component.unwrap_or(true);
            if same != want_same {
                out.push(Violation::new(
                    "parity",
                    format!(
                        "s = {} has the wrong parity for d_k = {} in the chosen component",
                        a.len(),
                        space.top()
                    ),
                ));
            }
        }
    }

    if index.is_flagged() {
        let levels = space.levels();
        let blocks: Vec<u32> = index
            .a_blocks()
            .into_iter()
            .chain(index.b_blocks())
            .collect();
        if let Some(&x) = blocks.iter().find(|&&x| x < 1 || x > levels) {
            out.push(Violation::new(
                "block-range",
                format!("block label {} outside 1..{}", x, levels),
            ));
        } else {
            for t in 1..=levels {
                let here = blocks.iter().filter(|&&x| x == t).count() as u32;
                let want = space.step(t) - space.step(t - 1);
                if here != want {
                    let upto = blocks.iter().filter(|&&x| x <= t).count();
                    out.push(Violation::new(
                        "block-count",
                        format!(
                            "#{{labels <= {}}} = {} but d_{} = {}",
                            t,
                            upto,
                            t,
                            space.step(t)
                        ),
                    ));
                    break;
                }
            }
        }
    }
    out
}

fn require_type_a(space: &Space) -> Result<()> {
    if space.kind.is_type_a() {
        Ok(())
    } else {
        Err(Error::UnsupportedKind(format!(
            "operation is only defined for type A spaces, got {}",
            space.kind.prefix()
        )))
    }
}

fn grass_dimension(a: &[u32]) -> u64 {
    a.iter()
        .enumerate()
        .map(|(i, &x)| (x as u64) - (i as u64 + 1))
        .sum()
}

/// Dimension of a type A flag Schubert variety: the Grassmannian image at the
/// top level plus the fiber, which lives in F(d_1..d_{k-1}; d_k).
fn flag_dimension(e: &[Entry], steps: &[u32]) -> u64 {
    let k = steps.len() as u32;
    let a: Vec<u32> = e.iter().map(|x| x.value).collect();
    let base = grass_dimension(&a);
    if k <= 1 {
        return base;
    }
    let fiber: Vec<Entry> = e
        .iter()
        .enumerate()
        .filter(|(_, x)| x.block < k)
        .map(|(i, x)| Entry::new(i as u32 + 1, x.block))
        .collect();
    base + flag_dimension(&fiber, &steps[..steps.len() - 1])
}

pub fn dimension(s: &Schubert) -> Result<u64> {
    require_type_a(&s.space)?;
    Ok(match &s.index {
        SchubertIndex::Plain(a) => grass_dimension(a),
        SchubertIndex::Flagged(e) => flag_dimension(e, &s.space.steps),
        _ => unreachable!("validated type A index"),
    })
}

/// Poincare dual index.
pub fn dual(s: &Schubert) -> Result<Schubert> {
    require_type_a(&s.space)?;
    let n = s.space.n;
    let index = match &s.index {
        SchubertIndex::Plain(a) => SchubertIndex::Plain(a.iter().rev().map(|&x| n - x + 1).collect()),
        SchubertIndex::Flagged(e) => SchubertIndex::Flagged(
            e.iter()
                .rev()
                .map(|x| Entry::new(n - x.value + 1, x.block))
                .collect(),
        ),
        _ => unreachable!("validated type A index"),
    };
    Ok(Schubert {
        space: s.space.clone(),
        index,
    })
}

/// Partition form: lambda_i = n - k + i - a_i.
pub fn lambda_notation(s: &Schubert) -> Result<Vec<u32>> {
    match &s.index {
        SchubertIndex::Plain(a) if s.space.kind == SpaceKind::Grass => {
            let k = a.len() as u32;
            let n = s.space.n;
            Ok(a
                .iter()
                .enumerate()
                .map(|(i, &x)| n - k + (i as u32 + 1) - x)
                .collect())
        }
        _ => Err(Error::UnsupportedKind(
            "partition form is defined for Grassmannian indices only".into(),
        )),
    }
}

/// Inverse of [`lambda_notation`].
pub fn from_lambda(lambda: &[u32], k: u32, n: u32) -> Result<Schubert> {
    if lambda.len() as u32 != k {
        return Err(Error::InvalidArgument(format!(
            "partition has {} parts, expected {}",
            lambda.len(),
            k
        )));
    }
    let a: Vec<u32> = lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| (n + i as u32 + 1).saturating_sub(k + l))
        .collect();
    Schubert::plain(&a, k, n)
}

/// Rank bookkeeping for flagged indices.
///
/// `a_ranks[i][t-1]` counts a-entries at or below a_i with label at most t.
/// `b_ranks[j][t-1]` counts all a-entries with label at most t plus b-entries
/// at or above b_j with label at most t. `a_below_b[j]` is the number of a
/// entries at or below b_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    pub a_ranks: Vec<Vec<u32>>,
    pub b_ranks: Vec<Vec<u32>>,
    pub a_below_b: Vec<u32>,
}

pub fn rank_table(s: &Schubert) -> RankTable {
    let levels = s.space.levels();
    let a = s.index.a_entries();
    let b = s.index.b_entries();
    let a_ranks = a
        .iter()
        .map(|ai| {
            (1..=levels)
                .map(|t| {
                    a.iter()
                        .filter(|c| c.value <= ai.value && c.block <= t)
                        .count() as u32
                })
                .collect()
        })
        .collect();
    let b_ranks = b
        .iter()
        .map(|bj| {
            (1..=levels)
                .map(|t| {
                    let lower = a.iter().filter(|c| c.block <= t).count();
                    let upper = b
                        .iter()
                        .filter(|e| e.value >= bj.value && e.block <= t)
                        .count();
                    (lower + upper) as u32
                })
                .collect()
        })
        .collect();
    let a_below_b = b
        .iter()
        .map(|bj| a.iter().filter(|c| c.value <= bj.value).count() as u32)
        .collect();
    RankTable {
        a_ranks,
        b_ranks,
        a_below_b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn space_rendering() {
        assert_eq!(Space::flag(&[1, 2], 4).unwrap().to_string(), "F(1,2;4)");
        assert_eq!(Space::orth_grass(4, 11).unwrap().to_string(), "OG(4,11)");
    }

    #[test]
    fn space_invariants() {
        assert!(Space::grass(5, 4).is_err());
        assert!(Space::orth_grass(3, 5).is_err());
        assert!(Space::symp_grass(1, 5).is_err());
        assert!(Space::flag(&[2, 2], 5).is_err());
    }

    #[test]
    fn flag_block_count() {
        assert!(Schubert::flagged(&[(1, 1), (3, 2), (5, 2)], &[1, 3], 5).is_ok());
        let err = Schubert::flagged(&[(1, 1), (3, 2), (5, 2)], &[2, 3], 5).unwrap_err();
        match err {
            Error::Invalid(v) => assert!(v.iter().any(|x| x.rule == "block-count")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn orth_offset_and_parity() {
        assert!(Schubert::orth(&[2], &[1], 2, 7).is_err());
        assert!(Schubert::orth(&[], &[1, 3], 2, 11).is_ok());
        // n = 2k forces s to have the parity of k
        assert!(Schubert::orth(&[1], &[0], 2, 4).is_err());
        assert!(Schubert::orth(&[1, 2], &[], 2, 4).is_ok());
    }

    #[test]
    fn dimensions() {
        let p = Schubert::plain(&[1, 2, 3], 3, 6).unwrap();
        assert_eq!(dimension(&p).unwrap(), 0);
        let f = Schubert::plain(&[4, 5, 6], 3, 6).unwrap();
        assert_eq!(dimension(&f).unwrap(), 9);
        let x = Schubert::flagged(&[(2, 1), (4, 2)], &[1, 2], 4).unwrap();
        assert_eq!(dimension(&x).unwrap(), 3);
        let o = Schubert::orth(&[1], &[1], 2, 7).unwrap();
        assert!(matches!(dimension(&o), Err(Error::UnsupportedKind(_))));
    }

    #[test]
    fn duals() {
        let x = Schubert::plain(&[1, 3], 2, 4).unwrap();
        assert_eq!(dual(&x).unwrap().index, SchubertIndex::Plain(vec![2, 4]));
        let y = Schubert::flagged(&[(2, 1), (4, 2)], &[1, 2], 4).unwrap();
        assert_eq!(
            dual(&y).unwrap().index,
            SchubertIndex::Flagged(entries(&[(1, 2), (3, 1)]))
        );
    }

    #[test]
    fn partitions() {
        let x = Schubert::plain(&[1, 3], 2, 4).unwrap();
        assert_eq!(lambda_notation(&x).unwrap(), vec![2, 1]);
        assert_eq!(from_lambda(&[2, 1], 2, 4).unwrap(), x);
        let top = Schubert::plain(&[3, 4], 2, 4).unwrap();
        assert_eq!(lambda_notation(&top).unwrap(), vec![0, 0]);
    }

    #[test]
    fn ranks() {
        let x = Schubert::flagged(&[(2, 1), (4, 2)], &[1, 2], 4).unwrap();
        assert_eq!(rank_table(&x).a_ranks, vec![vec![1, 1], vec![1, 2]]);
        let y = Schubert::orth_flagged(&[(3, 2)], &[(0, 2), (1, 1), (3, 1)], &[2, 4], 11).unwrap();
        let t = rank_table(&y);
        assert_eq!(t.b_ranks[2][0], 1);
        assert_eq!(t.a_below_b, vec![0, 0, 1]);
    }
}
