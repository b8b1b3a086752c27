//! Multi-rigidity: sub-index criteria in G and OG, the common-span values
//! for sums of Schubert classes, and the leading term of the OG to G
//! push-forward.

use serde::Serialize;

use crate::chow::ChowClass;
use crate::error::{Error, Result};
use crate::index::{Schubert, SchubertIndex, Space, SpaceKind};
use crate::rigidity::{grass_essential, og_essential_a, og_essential_b, Side, SubIndexRef};

/// The support of an effective class in a Grassmannian, with coefficients
/// kept for reporting only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexFamily {
    pub space: Space,
    pub members: Vec<(u64, Vec<u32>)>,
}

impl IndexFamily {
    pub fn new(space: Space, members: Vec<(u64, Vec<u32>)>) -> Result<IndexFamily> {
        if space.kind != SpaceKind::Grass {
            return Err(Error::UnsupportedKind(format!(
                "families live in a Grassmannian, got {}",
                space
            )));
        }
        if members.is_empty() {
            return Err(Error::InvalidArgument("a family needs at least one member".into()));
        }
        for (c, a) in &members {
            if *c == 0 {
                return Err(Error::InvalidArgument("coefficients must be positive".into()));
            }
            Schubert::new(space.clone(), SchubertIndex::Plain(a.clone()))?;
        }
        Ok(IndexFamily { space, members })
    }

    pub fn from_terms(terms: &[(u64, Schubert)]) -> Result<IndexFamily> {
        let first = terms
            .first()
            .ok_or_else(|| Error::InvalidArgument("a family needs at least one member".into()))?;
        let space = first.1.space.clone();
        let mut members = Vec::new();
        for (c, s) in terms {
            if s.space != space {
                return Err(Error::SpaceMismatch(format!("{} vs {}", s.space, space)));
            }
            members.push((*c, s.index.a_values()));
        }
        IndexFamily::new(space, members)
    }

    pub fn from_class(class: &ChowClass) -> Result<IndexFamily> {
        IndexFamily::new(
            class.space.clone(),
            class
                .terms
                .iter()
                .map(|(x, &c)| (c, x.a_values()))
                .collect(),
        )
    }

    fn k(&self) -> usize {
        self.space.top() as usize
    }

    fn support(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.members.iter().map(|(_, a)| a)
    }
}

fn essential_position(a: &[u32], i: u32) -> Result<usize> {
    if i == 0 || i as usize > a.len() {
        return Err(Error::InvalidArgument(format!(
            "position {} outside 1..={}",
            i,
            a.len()
        )));
    }
    let p = i as usize - 1;
    if !grass_essential(a, p) {
        return Err(Error::NotEssential(format!("a{}={}", i, a[p])));
    }
    Ok(p)
}

/// Sub-index i (1-based) of a Grassmannian index: a_{i-1} + 1 = a_i <= a_{i+1} - 3,
/// or a_i = n.
pub fn multirigid_subindex_grass(s: &Schubert, i: u32) -> Result<bool> {
    if s.space.kind != SpaceKind::Grass {
        return Err(Error::UnsupportedKind(format!("expected G(k,n), got {}", s.space)));
    }
    let a = s.index.a_values();
    let p = essential_position(&a, i)?;
    Ok(grass_multirigid_at(&a, s.space.n, p))
}

/// The clause check on a 0-based position, without the essential guard.
pub fn grass_multirigid_at(a: &[u32], n: u32, p: usize) -> bool {
    let prev = if p == 0 { 0 } else { a[p - 1] };
    let next = a.get(p + 1).map(|&x| x as u64).unwrap_or(u64::MAX);
    (prev + 1 == a[p] && a[p] as u64 + 3 <= next) || a[p] == n
}

/// Largest last entry, when the largest second-to-last entry sits just below it.
pub fn gamma_top(family: &IndexFamily) -> Option<u32> {
    let k = family.k();
    let top = family.support().map(|a| a[k - 1]).max()?;
    if k == 1 {
        return None;
    }
    let below = family.support().map(|a| a[k - 2]).max()?;
    (below + 1 == top).then_some(top)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BottomSpan {
    pub d: u32,
    pub determined: bool,
}

/// Length of the initial run 1..d shared by every member, and whether a
/// member with a gap of at least three above that run pins it down.
pub fn gamma_bottom(family: &IndexFamily) -> BottomSpan {
    let run = |a: &[u32]| a.iter().enumerate().filter(|(i, &x)| x == *i as u32 + 1).count() as u32;
    let d = family.support().map(|a| run(a)).min().unwrap_or(0);
    let determined = d >= 1
        && family.support().any(|a| {
            let du = d as usize;
            a[du - 1] == d && a.get(du).map(|&x| x >= d + 3).unwrap_or(true)
        });
    BottomSpan { d, determined }
}

/// Greedy-max filtration: keep members attaining the largest a_1, then among
/// those the largest a_2, and so on up to position i.
pub fn gamma_mid(family: &IndexFamily, i: u32) -> Result<Option<u32>> {
    let k = family.k();
    if i == 0 || i as usize > k {
        return Err(Error::InvalidArgument(format!("position {} outside 1..={}", i, k)));
    }
    let p = i as usize - 1;
    let m = family.support().map(|a| a[p]).max().unwrap_or(0);
    let mut pool: Vec<&Vec<u32>> = family.support().collect();
    for q in 0..=p {
        let best = pool.iter().map(|a| a[q]).max().unwrap_or(0);
        pool.retain(|a| a[q] == best);
    }
    let top_here = pool.iter().map(|a| a[p]).max().unwrap_or(0);
    let witness = pool.iter().any(|a| {
        let prev = if p == 0 { 0 } else { a[p - 1] };
        let next = a.get(p + 1).map(|&x| x as u64).unwrap_or(u64::MAX);
        prev + 1 == m && m as u64 + 3 <= next
    });
    Ok((top_here == m && witness).then_some(m))
}

// ---------------------------------------------------------------------------
// Orthogonal side.

/// One failure of the isotropic-count hypothesis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisFailure {
    /// 1-based b position.
    pub j: usize,
    pub count: i64,
    pub required: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub limit: Option<i64>,
    pub checked: Vec<usize>,
    pub failures: Vec<HypothesisFailure>,
}

impl HypothesisReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

fn count_at_most(a: &[u32], v: u32) -> i64 {
    a.iter().filter(|&&x| x <= v).count() as i64
}

/// Stand-in for the missing a_{s+1}: n - b_{k-s} - (s - x_{k-s}) - 1.
pub fn a_sentinel(a: &[u32], b: &[u32], n: u32) -> Option<i64> {
    let last = *b.last()?;
    let s = a.len() as i64;
    Some(n as i64 - last as i64 - (s - count_at_most(a, last)) - 1)
}

/// For every b_j below `limit` (all of them when `None`):
/// x_j >= k - j + 1 - floor((n - b_j - (a_{x_j+1} - 1)) / 2), x_j = #{a <= b_j}.
pub fn maxindex_hypothesis(a: &[u32], b: &[u32], n: u32, limit: Option<i64>) -> HypothesisReport {
    let k = (a.len() + b.len()) as i64;
    let sentinel = a_sentinel(a, b, n).unwrap_or(0);
    let at = |t: i64| -> i64 {
        if t == 0 {
            0
        } else if t as usize <= a.len() {
            a[t as usize - 1] as i64
        } else {
            sentinel
        }
    };
    let mut checked = Vec::new();
    let mut failures = Vec::new();
    for (j0, &bj) in b.iter().enumerate() {
        if limit.is_some_and(|l| bj as i64 >= l) {
            continue;
        }
        let j = j0 as i64 + 1;
        let x = count_at_most(a, bj);
        let required = k - j + 1 - (n as i64 - bj as i64 - (at(x + 1) - 1)).div_euclid(2);
        checked.push(j0 + 1);
        if x < required {
            failures.push(HypothesisFailure {
                j: j0 + 1,
                count: x,
                required,
            });
        }
    }
    HypothesisReport {
        limit,
        checked,
        failures,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadingTerm {
    pub coefficient: u64,
    pub prefix: Vec<u32>,
    pub admissible: bool,
    pub hypothesis: HypothesisReport,
}

fn og_parts(s: &Schubert) -> Result<(Vec<u32>, Vec<u32>, u32)> {
    if s.space.kind != SpaceKind::OrthGrass {
        return Err(Error::UnsupportedKind(format!("expected OG(k,n), got {}", s.space)));
    }
    Ok((s.index.a_values(), s.index.b_values(), s.space.n))
}

/// Predicted leading term of the push-forward to G(k,n) anchored at the
/// essential a_i (1-based).
pub fn og_pushforward_leading(s: &Schubert, i: u32) -> Result<LeadingTerm> {
    let (a, b, n) = og_parts(s)?;
    if i == 0 || i as usize > a.len() {
        return Err(Error::InvalidArgument(format!(
            "a-side position {} outside 1..={}",
            i,
            a.len()
        )));
    }
    let p = i as usize - 1;
    if !og_essential_a(&a, &b, n, p) {
        return Err(Error::NotEssential(format!("a{}={}", i, a[p])));
    }
    let hypothesis = maxindex_hypothesis(&a, &b, n, Some(a[p] as i64));
    let prefix = if b.is_empty() { a.clone() } else { a[..=p].to_vec() };
    Ok(LeadingTerm {
        coefficient: 1u64 << b.len(),
        prefix,
        admissible: hypothesis.holds(),
        hypothesis,
    })
}

fn og_a_clause(a: &[u32], b: &[u32], n: u32, p: usize) -> bool {
    let prev = if p == 0 { 0 } else { a[p - 1] };
    if prev + 1 != a[p] {
        return false;
    }
    if p + 1 < a.len() {
        return a[p] + 3 <= a[p + 1];
    }
    // the last a entry: room below the sentinel
    match a_sentinel(a, b, n) {
        None => true,
        Some(sent) => a[p] as i64 <= sent - 3,
    }
}

fn og_a_limit(a: &[u32], b: &[u32], n: u32, p: usize) -> Option<i64> {
    if p + 1 < a.len() {
        Some(a[p + 1] as i64)
    } else {
        a_sentinel(a, b, n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiRef {
    pub sub: SubIndexRef,
    pub essential: bool,
    pub multirigid: bool,
    /// Present for orthogonal a-side entries.
    pub hypothesis: Option<HypothesisReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultirigidReport {
    pub index: String,
    pub refs: Vec<MultiRef>,
    pub class_multirigid: bool,
}

fn og_refs(a: &[u32], b: &[u32], n: u32) -> Vec<MultiRef> {
    let mut refs = Vec::new();
    for p in 0..a.len() {
        let essential = og_essential_a(a, b, n, p);
        let hyp = maxindex_hypothesis(a, b, n, og_a_limit(a, b, n, p));
        refs.push(MultiRef {
            sub: SubIndexRef {
                side: Side::A,
                position: p as u32 + 1,
                value: a[p],
                block: 1,
            },
            essential,
            multirigid: essential && hyp.holds() && og_a_clause(a, b, n, p),
            hypothesis: Some(hyp),
        });
    }
    let passing: Vec<u32> = refs
        .iter()
        .filter(|r| r.multirigid)
        .map(|r| r.sub.value)
        .collect();
    for (q, &bj) in b.iter().enumerate() {
        let essential = og_essential_b(b, q);
        refs.push(MultiRef {
            sub: SubIndexRef {
                side: Side::B,
                position: q as u32 + 1,
                value: bj,
                block: 1,
            },
            essential,
            multirigid: essential && passing.contains(&bj),
            hypothesis: None,
        });
    }
    refs
}

/// Multi-rigidity of one essential sub-index of an OG index.
pub fn multirigid_subindex_og(s: &Schubert, side: Side, position: u32) -> Result<bool> {
    let (a, b, n) = og_parts(s)?;
    let refs = og_refs(&a, &b, n);
    let r = refs
        .iter()
        .find(|r| r.sub.side == side && r.sub.position == position)
        .ok_or_else(|| Error::InvalidArgument(format!("no sub-index at position {}", position)))?;
    if !r.essential {
        return Err(Error::NotEssential(r.sub.to_string()));
    }
    Ok(r.multirigid)
}

/// Every essential a entry passes and every essential b entry is an a value.
pub fn multirigid_class_og(s: &Schubert) -> Result<MultirigidReport> {
    let (a, b, n) = og_parts(s)?;
    let refs = og_refs(&a, &b, n);
    let class_multirigid = refs.iter().all(|r| {
        !r.essential
            || match r.sub.side {
                Side::A => r.multirigid,
                Side::B => a.contains(&r.sub.value),
            }
    });
    Ok(MultirigidReport {
        index: s.to_string(),
        refs,
        class_multirigid,
    })
}

/// Per-sub-index report for Grassmannian or OG indices.
pub fn multirigid_report(s: &Schubert) -> Result<MultirigidReport> {
    match s.space.kind {
        SpaceKind::OrthGrass => multirigid_class_og(s),
        SpaceKind::Grass => {
            let a = s.index.a_values();
            let refs: Vec<MultiRef> = (0..a.len())
                .map(|p| {
                    let essential = grass_essential(&a, p);
                    MultiRef {
                        sub: SubIndexRef {
                            side: Side::A,
                            position: p as u32 + 1,
                            value: a[p],
                            block: 1,
                        },
                        essential,
                        multirigid: essential && grass_multirigid_at(&a, s.space.n, p),
                        hypothesis: None,
                    }
                })
                .collect();
            let class_multirigid = refs.iter().all(|r| !r.essential || r.multirigid);
            Ok(MultirigidReport {
                index: s.to_string(),
                refs,
                class_multirigid,
            })
        }
        _ => Err(Error::UnsupportedKind(format!(
            "multi-rigidity is decided for G(k,n) and OG(k,n) only, got {}",
            s.space
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::parse_index;

    fn fam(space: &str, members: &[&[u32]]) -> IndexFamily {
        let sp = crate::index::parse_space(space).unwrap();
        IndexFamily::new(sp, members.iter().map(|a| (1, a.to_vec())).collect()).unwrap()
    }

    #[test]
    fn grass_clauses() {
        let s = parse_index("1,5 @ G(2,7)").unwrap();
        assert!(multirigid_subindex_grass(&s, 1).unwrap());
        let t = parse_index("1,3,5 @ G(3,7)").unwrap();
        assert!(!multirigid_subindex_grass(&t, 2).unwrap());
        let u = parse_index("2,7 @ G(2,7)").unwrap();
        assert!(multirigid_subindex_grass(&u, 2).unwrap());
        let v = parse_index("1,2 @ G(2,7)").unwrap();
        assert!(matches!(multirigid_subindex_grass(&v, 1), Err(Error::NotEssential(_))));
    }

    #[test]
    fn spans() {
        assert_eq!(gamma_top(&fam("G(2,5)", &[&[1, 3], &[2, 3]])), Some(3));
        assert_eq!(gamma_top(&fam("G(2,7)", &[&[1, 5]])), None);
        assert_eq!(gamma_top(&fam("G(2,6)", &[&[2, 4], &[3, 4]])), Some(4));

        let b = gamma_bottom(&fam("G(3,7)", &[&[1, 4, 6], &[1, 2, 6]]));
        assert_eq!(b, BottomSpan { d: 1, determined: true });
        assert_eq!(gamma_bottom(&fam("G(3,7)", &[&[2, 4, 6]])).d, 0);
        assert!(!gamma_bottom(&fam("G(3,7)", &[&[1, 2, 6], &[1, 3, 6]])).determined);

        assert_eq!(gamma_mid(&fam("G(3,9)", &[&[1, 2, 8]]), 2).unwrap(), Some(2));
        assert_eq!(gamma_mid(&fam("G(3,9)", &[&[1, 2, 8], &[1, 2, 7]]), 2).unwrap(), Some(2));
        assert_eq!(gamma_mid(&fam("G(3,9)", &[&[1, 2, 8], &[2, 3, 8]]), 2).unwrap(), Some(3));
    }

    #[test]
    fn orthogonal_example() {
        let s = parse_index("(1 | 1) @ OG(2,7)").unwrap();
        assert!(multirigid_subindex_og(&s, Side::A, 1).unwrap());
        assert!(multirigid_subindex_og(&s, Side::B, 1).unwrap());
        assert!(multirigid_class_og(&s).unwrap().class_multirigid);
        let lead = og_pushforward_leading(&s, 1).unwrap();
        assert_eq!((lead.coefficient, lead.prefix.clone(), lead.admissible), (2, vec![1], true));

        let t = parse_index("(2 | 2) @ OG(2,7)").unwrap();
        assert_eq!(og_pushforward_leading(&t, 1).unwrap().coefficient, 2);

        let full = parse_index("(1,3 |) @ OG(2,7)").unwrap();
        let lead = og_pushforward_leading(&full, 1).unwrap();
        assert_eq!((lead.coefficient, lead.prefix), (1, vec![1, 3]));
    }

    #[test]
    fn b_outside_a_blocks_class() {
        let s = parse_index("(1 | 2) @ OG(2,9)").unwrap();
        assert!(!multirigid_class_og(&s).unwrap().class_multirigid);
    }
}
