//! Essential and rigid sub-indices, the compatibility relations between them,
//! and class-level rigidity verdicts for every space kind.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::index::{Entry, Schubert, SpaceKind};
use crate::projections::surviving_positions;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    A,
    B,
}

/// One sub-index: side, 1-based position in the ascending sequence, value and block label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SubIndexRef {
    pub side: Side,
    pub position: u32,
    pub value: u32,
    pub block: u32,
}

impl fmt::Display for SubIndexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::A => 'a',
            Side::B => 'b',
        };
        write!(f, "{}{}={}^{}", side, self.position, self.value, self.block)
    }
}

/// Reads a sub-index selector such as `a2` or `b1`.
pub fn parse_selector(text: &str) -> Result<(Side, u32)> {
    let t = text.trim();
    let side = match t.chars().next() {
        Some('a') | Some('A') => Side::A,
        Some('b') | Some('B') => Side::B,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "sub-index selector '{}' must look like a2 or b1",
                text
            )))
        }
    };
    let pos: u32 = t[1..].trim().parse().map_err(|_| {
        Error::InvalidArgument(format!("sub-index selector '{}' has no position", text))
    })?;
    if pos == 0 {
        return Err(Error::InvalidArgument("positions start at 1".into()));
    }
    Ok((side, pos))
}

/// Which level bound the link relations use: the larger block label, or the
/// smaller one as literally printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationMode {
    Max,
    PaperLiteral,
}

impl RelationMode {
    fn bound(self, x: u32, y: u32) -> u32 {
        match self {
            RelationMode::Max => x.max(y),
            RelationMode::PaperLiteral => x.min(y),
        }
    }

    fn other(self) -> RelationMode {
        match self {
            RelationMode::Max => RelationMode::PaperLiteral,
            RelationMode::PaperLiteral => RelationMode::Max,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// Projection levels at which the sub-index is rigid in the image class.
    Levels { levels: Vec<u32> },
    /// Implication chain ending at the sub-index; the first link is rigid at `level`.
    Chain { chain: Vec<SubIndexRef>, level: u32 },
    /// A single sufficient clause.
    Clause { clause: String },
    /// The class belongs to the rigid symplectic family.
    Family,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefVerdict {
    pub sub: SubIndexRef,
    pub essential: bool,
    /// `None` when no criterion decides the question.
    pub rigid: Option<bool>,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: SubIndexRef,
    pub to: SubIndexRef,
    /// Smallest projection level witnessing the edge, when one is involved.
    pub level: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub edges: Vec<Edge>,
    pub closure: Vec<(SubIndexRef, SubIndexRef)>,
    pub totally_ordered: bool,
    pub strict: bool,
    /// Set when the other level bound gives a different total-order verdict.
    pub discrepancy: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RigidityVerdict {
    pub index: String,
    pub mode: RelationMode,
    pub refs: Vec<RefVerdict>,
    pub class_rigid: Option<bool>,
    pub relation: Option<RelationReport>,
    /// The reflexive-transitive implication relation used for orthogonal flags.
    pub implication: Option<RelationReport>,
}

impl RigidityVerdict {
    pub fn find(&self, side: Side, position: u32) -> Option<&RefVerdict> {
        self.refs
            .iter()
            .find(|r| r.sub.side == side && r.sub.position == position)
    }

    pub fn essential_refs(&self) -> Vec<SubIndexRef> {
        self.refs.iter().filter(|r| r.essential).map(|r| r.sub).collect()
    }
}

// ---------------------------------------------------------------------------
// Grassmannian rules, on 0-based positions.

pub fn grass_essential(a: &[u32], i: usize) -> bool {
    i + 1 == a.len() || a[i] + 1 < a[i + 1]
}

pub fn grass_rigid(a: &[u32], i: usize) -> bool {
    let prev = if i == 0 { 0 } else { a[i - 1] };
    i + 1 == a.len() || a[i] == i as u32 + 1 || a[i] + 3 <= a[i + 1] || a[i] == prev + 1
}

// ---------------------------------------------------------------------------
// Type A flags.

pub fn flag_essential(e: &[Entry], i: usize) -> bool {
    i + 1 == e.len() || e[i].value + 1 < e[i + 1].value || e[i].block < e[i + 1].block
}

/// Closed-form rigidity of an essential flag sub-index, with a_0 = 0,
/// alpha_0 = 0 and a_{d_k+1} = infinity.
pub fn flag_rigid_closed(e: &[Entry], i: usize) -> bool {
    let d = e.len();
    let val = |p: isize| -> u64 {
        if p < 0 {
            0
        } else if p as usize >= d {
            u64::MAX / 4
        } else {
            e[p as usize].value as u64
        }
    };
    let lab = |p: isize| -> u32 {
        if p < 0 {
            0
        } else {
            e[p as usize].block
        }
    };
    let i = i as isize;
    let gap = val(i + 1) - val(i);
    if gap >= 3 {
        return true;
    }
    if gap == 2 {
        return val(i) - val(i - 1) == 1 || lab(i) < lab(i + 1);
    }
    val(i + 2) - val(i) >= 3
        || ((i + 2) < d as isize && lab(i + 2) > lab(i))
        || (val(i - 1) + 1 == val(i) && lab(i - 1) < lab(i + 1))
}

fn flag_push(e: &[Entry], t: u32) -> (Vec<u32>, Vec<usize>) {
    let blocks: Vec<u32> = e.iter().map(|x| x.block).collect();
    let keep = surviving_positions(&blocks, t);
    (keep.iter().map(|&p| e[p].value).collect(), keep)
}

/// Whether entry i is essential in the t-th pushforward.
pub fn flag_essential_at(e: &[Entry], i: usize, t: u32) -> bool {
    if e[i].block > t {
        return false;
    }
    let (vals, keep) = flag_push(e, t);
    let p = keep.iter().position(|&x| x == i).unwrap_or(0);
    grass_essential(&vals, p)
}

/// Levels t >= alpha_i at which entry i is essential and rigid in the pushforward.
pub fn flag_rigid_levels(e: &[Entry], levels: u32, i: usize) -> Vec<u32> {
    (e[i].block..=levels)
        .filter(|&t| {
            let (vals, keep) = flag_push(e, t);
            let p = keep.iter().position(|&x| x == i).unwrap_or(0);
            grass_essential(&vals, p) && grass_rigid(&vals, p)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Relations.

struct Graph {
    nodes: Vec<SubIndexRef>,
    edges: Vec<(usize, usize, Option<u32>)>,
}

impl Graph {
    fn reach(&self, reflexive: bool) -> Vec<Vec<bool>> {
        let m = self.nodes.len();
        let mut r = vec![vec![false; m]; m];
        for &(u, v, _) in &self.edges {
            r[u][v] = true;
        }
        if reflexive {
            for (u, row) in r.iter_mut().enumerate() {
                row[u] = true;
            }
        }
        for w in 0..m {
            for u in 0..m {
                if r[u][w] {
                    for v in 0..m {
                        if r[w][v] {
                            r[u][v] = true;
                        }
                    }
                }
            }
        }
        r
    }

    fn report(&self, reflexive: bool) -> (RelationReport, Vec<Vec<bool>>) {
        let r = self.reach(reflexive);
        let m = self.nodes.len();
        let mut closure = Vec::new();
        let mut total = true;
        let mut strict = true;
        for u in 0..m {
            for v in 0..m {
                if r[u][v] {
                    closure.push((self.nodes[u], self.nodes[v]));
                }
                if u < v {
                    if !r[u][v] && !r[v][u] {
                        total = false;
                    }
                    if r[u][v] && r[v][u] {
                        strict = false;
                    }
                }
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v, level)| Edge {
                from: self.nodes[u],
                to: self.nodes[v],
                level,
            })
            .collect();
        (
            RelationReport {
                edges,
                closure,
                totally_ordered: total,
                strict,
                discrepancy: None,
            },
            r,
        )
    }
}

fn entry_ref(side: Side, position: usize, e: &Entry) -> SubIndexRef {
    SubIndexRef {
        side,
        position: position as u32 + 1,
        value: e.value,
        block: e.block,
    }
}

fn flag_link_graph(e: &[Entry], levels: u32, mode: RelationMode) -> Graph {
    let ess: Vec<usize> = (0..e.len()).filter(|&i| flag_essential(e, i)).collect();
    let nodes = ess.iter().map(|&i| entry_ref(Side::A, i, &e[i])).collect();
    let mut edges = Vec::new();
    for (u, &i) in ess.iter().enumerate() {
        for (v, &j) in ess.iter().enumerate() {
            if i >= j {
                continue;
            }
            let lo = mode.bound(e[i].block, e[j].block);
            if let Some(t) = (lo..=levels).find(|&t| flag_essential_at(e, j, t)) {
                edges.push((u, v, Some(t)));
            }
        }
    }
    Graph { nodes, edges }
}

/// The link relation on essential sub-indices of a type A flag index.
pub fn relation_flag(e: &[Entry], levels: u32, mode: RelationMode) -> RelationReport {
    let (mut rep, _) = flag_link_graph(e, levels, mode).report(false);
    let (alt, _) = flag_link_graph(e, levels, mode.other()).report(false);
    if alt.totally_ordered != rep.totally_ordered {
        let say = |b: bool| if b { "totally ordered" } else { "not totally ordered" };
        let (max_v, min_v) = match mode {
            RelationMode::Max => (rep.totally_ordered, alt.totally_ordered),
            RelationMode::PaperLiteral => (alt.totally_ordered, rep.totally_ordered),
        };
        rep.discrepancy = Some(format!(
            "with the larger-label bound the essential set is {}; with the smaller-label bound it is {}",
            say(max_v),
            say(min_v)
        ));
    }
    rep
}

fn verdict_type_a(s: &Schubert, mode: RelationMode) -> RigidityVerdict {
    let e = s.index.a_entries();
    let levels = s.space.levels();
    let refs: Vec<RefVerdict> = e
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let essential = flag_essential(&e, i);
            let sub = entry_ref(Side::A, i, x);
            if !essential {
                return RefVerdict {
                    sub,
                    essential,
                    rigid: Some(false),
                    witness: None,
                };
            }
            let rigid = flag_rigid_closed(&e, i);
            let lv = flag_rigid_levels(&e, levels, i);
            RefVerdict {
                sub,
                essential,
                rigid: Some(rigid),
                witness: if lv.is_empty() {
                    None
                } else {
                    Some(Witness::Levels { levels: lv })
                },
            }
        })
        .collect();
    let relation = relation_flag(&e, levels, mode);
    let all_rigid = refs.iter().all(|r| !r.essential || r.rigid == Some(true));
    RigidityVerdict {
        index: s.to_string(),
        mode,
        class_rigid: Some(all_rigid && relation.totally_ordered),
        refs,
        relation: Some(relation),
        implication: None,
    }
}

// ---------------------------------------------------------------------------
// Orthogonal Grassmannians, on 0-based positions. `k` is s + (number of b).

pub fn og_essential_a(a: &[u32], b: &[u32], n: u32, i: usize) -> bool {
    let s = a.len();
    if i + 1 < s {
        return a[i] + 1 < a[i + 1];
    }
    if n % 2 == 1 || b.is_empty() {
        return true;
    }
    a[s - 1] + b[b.len() - 1] != n - 2
}

pub fn og_essential_b(b: &[u32], j: usize) -> bool {
    j == 0 || b[j] != b[j - 1] + 1
}

/// Twice the threshold k - j + b_j - (n-3)/2, for 1-based j.
fn twice_threshold(k: usize, j: usize, bj: u32, n: u32) -> i64 {
    2 * (k as i64 - j as i64 + bj as i64) - (n as i64 - 3)
}

fn count_at_most(a: &[u32], v: u32) -> usize {
    a.iter().filter(|&&x| x <= v).count()
}

/// The gap pattern that makes an a-side entry movable: a_i not in b,
/// a_i - a_{i-1} >= 2 and a_{i+1} - a_i = 2 + #{b strictly between}.
fn og_gap_pattern(a: &[u32], b: &[u32], i: usize) -> bool {
    let prev = if i == 0 { 0 } else { a[i - 1] };
    if b.contains(&a[i]) || a[i] < prev + 2 || i + 1 >= a.len() {
        return false;
    }
    let between = b.iter().filter(|&&x| a[i] < x && x < a[i + 1]).count() as u32;
    a[i + 1] - a[i] == 2 + between
}

pub fn og_rigid_a(a: &[u32], b: &[u32], n: u32, i: usize) -> bool {
    let k = a.len() + b.len();
    if og_gap_pattern(a, b, i) {
        return false;
    }
    if let Some(j) = b.iter().position(|&x| x == a[i]) {
        let lhs = 2 * count_at_most(a, b[j]) as i64;
        if lhs == twice_threshold(k, j + 1, b[j], n) {
            return false;
        }
    }
    true
}

pub fn og_rigid_b(a: &[u32], b: &[u32], n: u32, j: usize) -> bool {
    let k = a.len() + b.len();
    b[j] == 0
        || (j..b.len()).any(|jp| {
            a.contains(&b[jp])
                && 2 * count_at_most(a, b[jp]) as i64 > twice_threshold(k, jp + 1, b[jp], n)
        })
}

/// Class-level criterion on the largest essential b entry and the a-side gaps.
pub fn og_class_rigid(a: &[u32], b: &[u32], n: u32) -> bool {
    let k = a.len() + b.len();
    let top_ok = match (0..b.len()).rev().find(|&j| og_essential_b(b, j)) {
        None => true,
        Some(g) => {
            a.contains(&b[g])
                && 2 * count_at_most(a, b[g]) as i64 > twice_threshold(k, g + 1, b[g], n)
        }
    };
    top_ok && !(0..a.len()).any(|i| og_gap_pattern(a, b, i))
}

fn verdict_og(s: &Schubert, mode: RelationMode) -> RigidityVerdict {
    let a = s.index.a_values();
    let b = s.index.b_values();
    let n = s.space.n;
    let mut refs = Vec::new();
    for i in 0..a.len() {
        let essential = og_essential_a(&a, &b, n, i);
        refs.push(RefVerdict {
            sub: SubIndexRef {
                side: Side::A,
                position: i as u32 + 1,
                value: a[i],
                block: 1,
            },
            essential,
            rigid: Some(essential && og_rigid_a(&a, &b, n, i)),
            witness: None,
        });
    }
    for j in 0..b.len() {
        let essential = og_essential_b(&b, j);
        refs.push(RefVerdict {
            sub: SubIndexRef {
                side: Side::B,
                position: j as u32 + 1,
                value: b[j],
                block: 1,
            },
            essential,
            rigid: Some(essential && og_rigid_b(&a, &b, n, j)),
            witness: None,
        });
    }
    RigidityVerdict {
        index: s.to_string(),
        mode,
        refs,
        class_rigid: Some(og_class_rigid(&a, &b, n)),
        relation: None,
        implication: None,
    }
}

// ---------------------------------------------------------------------------
// Orthogonal flags.

struct OrthFlag<'a> {
    a: &'a [Entry],
    b: &'a [Entry],
    n: u32,
    levels: u32,
}

impl OrthFlag<'_> {
    /// Values of the t-th image and the 0-based position of the given entry in it.
    fn image(&self, side: Side, pos: usize, t: u32) -> Option<(Vec<u32>, Vec<u32>, usize)> {
        let entry = match side {
            Side::A => self.a[pos],
            Side::B => self.b[pos],
        };
        if entry.block > t {
            return None;
        }
        let av: Vec<u32> = self.a.iter().filter(|x| x.block <= t).map(|x| x.value).collect();
        let bv: Vec<u32> = self.b.iter().filter(|x| x.block <= t).map(|x| x.value).collect();
        let list = match side {
            Side::A => self.a,
            Side::B => self.b,
        };
        let p = list[..pos].iter().filter(|x| x.block <= t).count();
        Some((av, bv, p))
    }

    fn essential_at(&self, side: Side, pos: usize, t: u32) -> bool {
        match self.image(side, pos, t) {
            None => false,
            Some((av, bv, p)) => match side {
                Side::A => og_essential_a(&av, &bv, self.n, p),
                Side::B => og_essential_b(&bv, p),
            },
        }
    }

    fn rigid_at(&self, side: Side, pos: usize, t: u32) -> bool {
        match self.image(side, pos, t) {
            None => false,
            Some((av, bv, p)) => match side {
                Side::A => og_essential_a(&av, &bv, self.n, p) && og_rigid_a(&av, &bv, self.n, p),
                Side::B => og_essential_b(&bv, p) && og_rigid_b(&av, &bv, self.n, p),
            },
        }
    }

    fn label(&self, side: Side, pos: usize) -> u32 {
        match side {
            Side::A => self.a[pos].block,
            Side::B => self.b[pos].block,
        }
    }

    fn essential_from(&self, side: Side, pos: usize, lo: u32) -> Option<u32> {
        (lo.max(1)..=self.levels).find(|&t| self.essential_at(side, pos, t))
    }

    fn essential(&self, side: Side, pos: usize) -> bool {
        self.essential_from(side, pos, 1).is_some()
    }

    fn is_half_minus_one(&self, v: u32) -> bool {
        2 * v + 2 == self.n
    }
}

fn of_nodes(of: &OrthFlag) -> Vec<(Side, usize, SubIndexRef)> {
    let mut out = Vec::new();
    for (i, x) in of.a.iter().enumerate() {
        if of.essential(Side::A, i) {
            out.push((Side::A, i, entry_ref(Side::A, i, x)));
        }
    }
    for (j, x) in of.b.iter().enumerate() {
        if of.essential(Side::B, j) {
            out.push((Side::B, j, entry_ref(Side::B, j, x)));
        }
    }
    out
}

fn implication_graph(of: &OrthFlag, mode: RelationMode) -> Graph {
    let nodes = of_nodes(of);
    let mut edges = Vec::new();
    for (u, &(su, pu, ru)) in nodes.iter().enumerate() {
        for (v, &(sv, pv, rv)) in nodes.iter().enumerate() {
            if u == v {
                continue;
            }
            match (su, sv) {
                (Side::B, Side::B) if pv < pu && !of.is_half_minus_one(ru.value) => {
                    let lo = mode.bound(of.label(su, pu), of.label(sv, pv));
                    if let Some(t) = of.essential_from(sv, pv, lo) {
                        edges.push((u, v, Some(t)));
                    }
                }
                (Side::A, Side::B) | (Side::B, Side::A)
                    if ru.value == rv.value && !of.is_half_minus_one(ru.value) =>
                {
                    edges.push((u, v, None));
                }
                _ => {}
            }
        }
    }
    Graph {
        nodes: nodes.iter().map(|x| x.2).collect(),
        edges,
    }
}

fn compatibility_graph(of: &OrthFlag, mode: RelationMode) -> Graph {
    let nodes = of_nodes(of);
    let half = of.n.is_multiple_of(2);
    let mut edges = Vec::new();
    for (u, &(su, pu, ru)) in nodes.iter().enumerate() {
        for (v, &(sv, pv, rv)) in nodes.iter().enumerate() {
            if u == v {
                continue;
            }
            let lo = mode.bound(of.label(su, pu), of.label(sv, pv));
            let edge = match (su, sv) {
                (Side::A, Side::A) if pu < pv => {
                    if half && 2 * rv.value == of.n {
                        Some(None)
                    } else {
                        of.essential_from(sv, pv, lo).map(Some)
                    }
                }
                (Side::A, Side::B) if ru.value <= rv.value => Some(None),
                (Side::B, Side::A) if ru.value <= rv.value && !of.is_half_minus_one(ru.value) => {
                    (lo..=of.levels)
                        .find(|&t| of.essential_at(su, pu, t) && of.essential_at(sv, pv, t))
                        .map(Some)
                }
                (Side::B, Side::B) if pu < pv => of.essential_from(su, pu, lo).map(Some),
                _ => None,
            };
            if let Some(level) = edge {
                edges.push((u, v, level));
            }
        }
    }
    Graph {
        nodes: nodes.iter().map(|x| x.2).collect(),
        edges,
    }
}

fn shortest_path(edges: &[(usize, usize, Option<u32>)], from: usize, to: usize, m: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; m];
    let mut seen = vec![false; m];
    let mut queue = std::collections::VecDeque::from([from]);
    seen[from] = true;
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for &(x, y, _) in edges {
            if x == u && !seen[y] {
                seen[y] = true;
                prev[y] = u;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[cur];
        if cur == usize::MAX {
            return Vec::new();
        }
        path.push(cur);
    }
    path.reverse();
    path
}

fn verdict_of(s: &Schubert, mode: RelationMode) -> RigidityVerdict {
    let a = s.index.a_entries();
    let b = s.index.b_entries();
    let of = OrthFlag {
        a: &a,
        b: &b,
        n: s.space.n,
        levels: s.space.levels(),
    };
    let nodes = of_nodes(&of);
    let base: Vec<Option<u32>> = nodes
        .iter()
        .map(|&(side, pos, _)| (1..=of.levels).find(|&t| of.rigid_at(side, pos, t)))
        .collect();
    let imp = implication_graph(&of, mode);
    let (imp_report, reach) = imp.report(true);

    let mut refs = Vec::new();
    let all: Vec<(Side, usize, SubIndexRef)> = a
        .iter()
        .enumerate()
        .map(|(i, x)| (Side::A, i, entry_ref(Side::A, i, x)))
        .chain(b.iter().enumerate().map(|(j, x)| (Side::B, j, entry_ref(Side::B, j, x))))
        .collect();
    for (side, pos, sub) in all {
        let node = nodes.iter().position(|&(s2, p2, _)| s2 == side && p2 == pos);
        let Some(v) = node else {
            refs.push(RefVerdict {
                sub,
                essential: false,
                rigid: Some(false),
                witness: None,
            });
            continue;
        };
        let witness = if let Some(t) = base[v] {
            Some(Witness::Chain {
                chain: vec![sub],
                level: t,
            })
        } else {
            (0..nodes.len())
                .find(|&u| base[u].is_some() && reach[u][v])
                .map(|u| Witness::Chain {
                    chain: shortest_path(&imp.edges, u, v, nodes.len())
                        .into_iter()
                        .map(|w| nodes[w].2)
                        .collect(),
                    level: base[u].unwrap_or(1),
                })
        };
        refs.push(RefVerdict {
            sub,
            essential: true,
            rigid: Some(witness.is_some()),
            witness,
        });
    }

    let (mut rel, _) = compatibility_graph(&of, mode).report(false);
    let (alt, _) = compatibility_graph(&of, mode.other()).report(false);
    if alt.totally_ordered != rel.totally_ordered {
        rel.discrepancy = Some(format!(
            "the {} level bound gives totally_ordered = {}",
            match mode.other() {
                RelationMode::Max => "larger-label",
                RelationMode::PaperLiteral => "smaller-label",
            },
            alt.totally_ordered
        ));
    }
    let all_rigid = refs.iter().all(|r| !r.essential || r.rigid == Some(true));
    RigidityVerdict {
        index: s.to_string(),
        mode,
        class_rigid: Some(all_rigid && rel.totally_ordered),
        refs,
        relation: Some(rel),
        implication: Some(imp_report),
    }
}

// ---------------------------------------------------------------------------
// Symplectic spaces: sufficient conditions only.

fn symp_essential_a(a: &[u32], i: usize) -> bool {
    i + 1 == a.len() || a[i] + 1 < a[i + 1]
}

/// a_i = i together with a wide gap above it, or a_i = a_s with n >= 2k + 2.
pub fn symp_rigid_a(a: &[u32], b: &[u32], n: u32, i: usize) -> bool {
    let k = (a.len() + b.len()) as u32;
    a[i] == i as u32 + 1
        && ((i + 1 < a.len() && a[i + 1] >= a[i] + 3) || (i + 1 == a.len() && n >= 2 * k + 2))
}

/// a = (1..i), b = (i..k-1) with n >= 2k + 2.
pub fn symp_family(a: &[u32], b: &[u32], n: u32) -> bool {
    let s = a.len() as u32;
    let k = s + b.len() as u32;
    s >= 1
        && a.iter().copied().eq(1..=s)
        && b.iter().copied().eq(s..k)
        && n >= 2 * k + 2
}

fn verdict_symp(s: &Schubert, mode: RelationMode) -> RigidityVerdict {
    let a = s.index.a_entries();
    let b = s.index.b_entries();
    let n = s.space.n;
    let levels = s.space.levels();
    let image = |t: u32| -> (Vec<u32>, Vec<u32>) {
        (
            a.iter().filter(|x| x.block <= t).map(|x| x.value).collect(),
            b.iter().filter(|x| x.block <= t).map(|x| x.value).collect(),
        )
    };
    let flagged = s.space.kind == SpaceKind::SympFlag;
    let mut refs = Vec::new();
    for (side, list) in [(Side::A, &a), (Side::B, &b)] {
        for (pos, x) in list.iter().enumerate() {
            let sub = entry_ref(side, pos, x);
            let mut essential = false;
            let mut witness = None;
            for t in x.block..=levels {
                let (av, bv) = image(t);
                let p = list[..pos].iter().filter(|y| y.block <= t).count();
                let ess = match side {
                    Side::A => symp_essential_a(&av, p),
                    Side::B => og_essential_b(&bv, p),
                };
                essential |= ess;
                if !ess || witness.is_some() {
                    continue;
                }
                if symp_family(&av, &bv, n) {
                    witness = Some(if flagged {
                        Witness::Levels { levels: vec![t] }
                    } else {
                        Witness::Family
                    });
                } else if side == Side::A && symp_rigid_a(&av, &bv, n, p) {
                    witness = Some(if flagged {
                        Witness::Levels { levels: vec![t] }
                    } else {
                        Witness::Clause {
                            clause: "a_i = i with room above".into(),
                        }
                    });
                }
            }
            let rigid = if !essential {
                Some(false)
            } else if witness.is_some() {
                Some(true)
            } else {
                None
            };
            refs.push(RefVerdict {
                sub,
                essential,
                rigid,
                witness,
            });
        }
    }
    let class_rigid = if !flagged && symp_family(&image(1).0, &image(1).1, n) {
        Some(true)
    } else {
        None
    };
    RigidityVerdict {
        index: s.to_string(),
        mode,
        refs,
        class_rigid,
        relation: None,
        implication: None,
    }
}

// ---------------------------------------------------------------------------
// Entry points.

/// Full verdict for any valid index.
pub fn rigid_class(s: &Schubert, mode: RelationMode) -> RigidityVerdict {
    match s.space.kind {
        SpaceKind::Grass | SpaceKind::Flag => verdict_type_a(s, mode),
        SpaceKind::OrthGrass => verdict_og(s, mode),
        SpaceKind::OrthFlag => verdict_of(s, mode),
        SpaceKind::SympGrass | SpaceKind::SympFlag => verdict_symp(s, mode),
    }
}

/// Essentialness of every sub-index, a-side first.
pub fn essential(s: &Schubert) -> Vec<(SubIndexRef, bool)> {
    rigid_class(s, RelationMode::Max)
        .refs
        .into_iter()
        .map(|r| (r.sub, r.essential))
        .collect()
}

/// Verdict for one sub-index; fails when it is not essential.
pub fn rigid_subindex(
    s: &Schubert,
    side: Side,
    position: u32,
    mode: RelationMode,
) -> Result<RefVerdict> {
    let v = rigid_class(s, mode);
    let r = v.find(side, position).cloned().ok_or_else(|| {
        Error::InvalidArgument(format!(
            "{} has no {}-side position {}",
            s,
            if side == Side::A { "a" } else { "b" },
            position
        ))
    })?;
    if !r.essential {
        return Err(Error::NotEssential(r.sub.to_string()));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::{entries, parse_index};

    fn verdict(text: &str) -> RigidityVerdict {
        rigid_class(&parse_index(text).unwrap(), RelationMode::Max)
    }

    #[test]
    fn grass_rules() {
        assert!([0, 1, 2].iter().all(|&i| grass_essential(&[1, 3, 5], i)));
        assert!(!grass_rigid(&[1, 3, 5], 1));
        assert!(grass_rigid(&[1, 4], 0));
        assert_eq!(
            (0..3).filter(|&i| grass_essential(&[1, 2, 3], i)).collect::<Vec<_>>(),
            vec![2]
        );
    }

    #[test]
    fn flag_examples() {
        assert_eq!(verdict("2^1,4^2 @ F(1,2;4)").class_rigid, Some(true));
        assert_eq!(verdict("2^2,4^1 @ F(1,2;4)").class_rigid, Some(false));
        let e = entries(&[(2, 2), (4, 1)]);
        assert!(!flag_rigid_closed(&e, 0));
        let c = entries(&[(1, 1), (3, 2), (5, 2)]);
        assert!(flag_essential(&c, 1));
        assert!(!flag_rigid_closed(&c, 1));
    }

    #[test]
    fn link_bound_changes_total_order() {
        let s = parse_index("1^2,3^1,4^2 @ F(1,3;4)").unwrap();
        let max = rigid_class(&s, RelationMode::Max);
        let lit = rigid_class(&s, RelationMode::PaperLiteral);
        assert!(!max.relation.as_ref().unwrap().totally_ordered);
        assert!(lit.relation.as_ref().unwrap().totally_ordered);
        assert!(lit.relation.unwrap().discrepancy.is_some());
        assert_eq!(max.class_rigid, Some(false));
        // per-sub-index verdicts do not depend on the bound
        assert_eq!(max.refs, lit.refs);
    }

    #[test]
    fn orth_grass_examples() {
        let v = verdict("(3 | 0,1,3) @ OG(4,11)");
        assert_eq!(v.class_rigid, Some(true));
        let ess: Vec<u32> = v.essential_refs().iter().map(|r| r.value).collect();
        assert_eq!(ess, vec![3, 0, 3]);
        assert_eq!(verdict("(1 | 1) @ OG(2,5)").class_rigid, Some(false));
        let w = verdict("(| 1,3) @ OG(2,11)");
        assert_eq!(w.class_rigid, Some(false));
        assert_eq!(w.find(Side::B, 1).unwrap().rigid, Some(false));
    }

    #[test]
    fn orth_flag_examples() {
        let s = parse_index("(3^2 | 3^1,1^1,0^2) @ OF(2,4;11)").unwrap();
        let r = rigid_subindex(&s, Side::B, 2, RelationMode::Max).unwrap();
        match r.witness {
            Some(Witness::Chain { chain, .. }) => {
                let vals: Vec<(Side, u32)> = chain.iter().map(|c| (c.side, c.value)).collect();
                assert_eq!(vals, vec![(Side::A, 3), (Side::B, 3), (Side::B, 1)]);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(verdict("(1^1 | 1^2) @ OF(1,2;5)").class_rigid, Some(true));
    }

    #[test]
    fn symplectic_examples() {
        assert_eq!(verdict("(1 | 1) @ SG(2,8)").class_rigid, Some(true));
        assert_eq!(verdict("(1,2 | 2) @ SG(3,10)").class_rigid, Some(true));
        assert_eq!(verdict("(2 | 0) @ SG(2,8)").class_rigid, None);
    }

    #[test]
    fn non_essential_selection_fails() {
        let s = parse_index("1,2,3 @ G(3,6)").unwrap();
        assert!(matches!(
            rigid_subindex(&s, Side::A, 1, RelationMode::Max),
            Err(Error::NotEssential(_))
        ));
        assert!(parse_selector("b2").is_ok());
        assert!(parse_selector("c2").is_err());
    }
}
