//! Restriction varieties in orthogonal Grassmannians: an isotropic flag
//! inside a ladder of sub-quadrics, validated and degenerated step by step
//! into Schubert classes.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::chow::ChowClass;
use crate::error::{Error, Result, Violation};
use crate::index::parse::{parse_space_tokens, Lexer, Tok};
use crate::index::{Schubert, SchubertIndex, Space, SpaceKind};

/// A sub-quadric of dimension `dim` whose singular locus has dimension `corank`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Quadric {
    pub dim: u32,
    pub corank: u32,
}

/// Isotropic dimensions `a` and quadrics listed outermost first (dimension
/// strictly descending).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RestrictionSequence {
    pub a: Vec<u32>,
    pub quadrics: Vec<Quadric>,
    pub n: u32,
    pub k: u32,
}

impl RestrictionSequence {
    pub fn space(&self) -> Result<Space> {
        Space::orth_grass(self.k, self.n)
    }

    fn is_terminal_quadric(&self, q: &Quadric) -> bool {
        q.dim + q.corank == self.n
    }

    /// Every violated defining condition, by name.
    pub fn violations(&self) -> Vec<Violation> {
        self.violations_except(&[])
    }

    fn violations_except(&self, skip: &[&str]) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut push = |rule: &'static str, msg: String| {
            if !skip.contains(&rule) {
                out.push(Violation::new(rule, msg));
            }
        };
        let s = self.a.len() as u32;
        let m = self.quadrics.len() as u32;
        if s + m != self.k {
            push(
                "shape",
                format!("{} isotropic spaces and {} quadrics but k = {}", s, m, self.k),
            );
        }
        if self.a.windows(2).any(|w| w[0] >= w[1]) {
            push("isotropic-order", "isotropic dimensions must increase".into());
        }
        let half = self.n / 2;
        if let Some(&x) = self.a.iter().find(|&&x| x == 0 || x > half) {
            push("isotropic-range", format!("isotropic dimension {} outside 1..={}", x, half));
        }
        if self.quadrics.windows(2).any(|w| w[0].dim <= w[1].dim) {
            push("quadric-order", "quadric dimensions must strictly decrease inward".into());
        }
        for q in &self.quadrics {
            if q.dim + q.corank > self.n {
                push(
                    "quadric-bound",
                    format!("Q:{}^{} has dimension plus corank above {}", q.dim, q.corank, self.n),
                );
            }
        }
        if self.quadrics.windows(2).any(|w| w[0].corank > w[1].corank) {
            push("corank-nesting", "coranks must not decrease inward".into());
        }
        for i in 0..self.quadrics.len() {
            for t in i + 1..self.quadrics.len() {
                let gap = self.quadrics[t].corank as i64 - self.quadrics[i].corank as i64;
                if gap < (t - i) as i64 - 1 {
                    push(
                        "corank-growth",
                        format!("coranks of quadrics {} and {} are too close", i + 1, t + 1),
                    );
                }
            }
        }
        if let Some(q) = self.quadrics.last() {
            if !self.is_terminal_quadric(q) && q.corank + 3 > q.dim {
                push(
                    "innermost-corank",
                    format!("innermost Q:{}^{} needs corank at most dimension - 3", q.dim, q.corank),
                );
            }
        }
        for &x in &self.a {
            for q in &self.quadrics {
                if x == q.corank + 1 {
                    push(
                        "isotropic-offset",
                        format!("F:{} sits one above the corank of Q:{}^{}", x, q.dim, q.corank),
                    );
                }
            }
        }
        for (j0, q) in self.quadrics.iter().enumerate() {
            let x = self.a.iter().filter(|&&v| v <= q.corank).count() as i64;
            let need = self.k as i64 - j0 as i64 - ((q.dim as i64 - q.corank as i64).div_euclid(2));
            if x < need {
                push(
                    "isotropic-count",
                    format!(
                        "only {} isotropic spaces inside the singular locus of Q:{}^{}, need {}",
                        x, q.dim, q.corank, need
                    ),
                );
            }
        }
        out
    }

    pub fn is_schubert(&self) -> bool {
        self.quadrics.iter().all(|q| self.is_terminal_quadric(q))
    }

    /// The orthogonal Schubert index of a fully degenerate sequence.
    pub fn to_schubert(&self) -> Option<Schubert> {
        if !self.is_schubert() {
            return None;
        }
        let mut b: Vec<u32> = self.quadrics.iter().map(|q| q.corank).collect();
        b.sort_unstable();
        Schubert::new(
            self.space().ok()?,
            SchubertIndex::Pair {
                a: self.a.clone(),
                b,
            },
        )
        .ok()
    }
}

impl fmt::Display for RestrictionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let iso: Vec<String> = self.a.iter().map(|x| format!("F:{}", x)).collect();
        let quad: Vec<String> = self
            .quadrics
            .iter()
            .rev()
            .map(|q| format!("Q:{}^{}", q.dim, q.corank))
            .collect();
        let groups: Vec<String> = [iso.join(", "), quad.join(", ")]
            .into_iter()
            .filter(|g| !g.is_empty())
            .collect();
        write!(f, "{} @ OG({},{})", groups.join(" | "), self.k, self.n)
    }
}

impl FromStr for RestrictionSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_sequence(text)
    }
}

/// Reads `F:2 | Q:6^0 @ OG(2,7)`; items may be separated by `,` or `|`.
pub fn parse_sequence(text: &str) -> Result<RestrictionSequence> {
    let mut lx = Lexer::new(text)?;
    let mut a = Vec::new();
    let mut quadrics = Vec::new();
    if lx.peek() != Some(&Tok::Sym('@')) {
        loop {
            let at = lx.offset();
            let word = lx.word()?;
            lx.expect(':')?;
            match word.as_str() {
                "F" => a.push(lx.nat()?),
                "Q" => {
                    let dim = lx.nat()?;
                    lx.expect('^')?;
                    quadrics.push(Quadric {
                        dim,
                        corank: lx.nat()?,
                    });
                }
                _ => {
                    return Err(Error::Syntax {
                        position: at,
                        message: format!("expected F or Q, found '{}'", word),
                    })
                }
            }
            if !(lx.eat(',') || lx.eat('|')) {
                break;
            }
        }
    }
    lx.expect('@')?;
    let at = lx.offset();
    let space = parse_space_tokens(&mut lx)?;
    lx.finish()?;
    if space.kind != SpaceKind::OrthGrass {
        return Err(Error::Syntax {
            position: at,
            message: format!("restriction sequences live in OG(k,n), got {}", space),
        });
    }
    quadrics.sort_by_key(|q| std::cmp::Reverse(q.dim));
    Ok(RestrictionSequence {
        a,
        quadrics,
        n: space.n,
        k: space.top(),
    })
}

/// Schubert data (a; b) as the ladder of quadrics Q:(n - b_j)^(b_j).
pub fn schubert_to_sequence(s: &Schubert) -> Result<RestrictionSequence> {
    if s.space.kind != SpaceKind::OrthGrass {
        return Err(Error::UnsupportedKind(format!("expected OG(k,n), got {}", s.space)));
    }
    let n = s.space.n;
    Ok(RestrictionSequence {
        a: s.index.a_values(),
        quadrics: s
            .index
            .b_values()
            .into_iter()
            .map(|b| Quadric {
                dim: n - b,
                corank: b,
            })
            .collect(),
        n,
        k: s.space.top(),
    })
}

pub fn sequence_is_schubert(seq: &RestrictionSequence) -> bool {
    seq.is_schubert()
}

// ---------------------------------------------------------------------------
// Degeneration.

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "action", rename_all = "kebab-case")]
pub enum Action {
    /// Corank of quadric `quadric` (1-based, outermost first) goes up by one.
    Raise { quadric: usize, from: u32, to: u32 },
    /// F:a_i meets the singular locus; the first branch is kept only when effective.
    Split { position: usize, first_effective: bool },
    /// A quadric of corank dim - 2 becomes two linear spaces.
    Break { multiplicity: u64 },
    Terminal { multiplicity: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub step: usize,
    pub path: String,
    pub state: String,
    #[serde(flatten)]
    pub action: Action,
    pub successors: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct StepOutcome {
    pub action: Action,
    pub successors: Vec<RestrictionSequence>,
}

fn unsupported(state: &dyn fmt::Display) -> Error {
    Error::UnsupportedDegeneration {
        state: state.to_string(),
        trace: Vec::new(),
    }
}

fn with_trace(err: Error, trace: &[TraceStep]) -> Error {
    match err {
        Error::UnsupportedDegeneration { state, .. } => Error::UnsupportedDegeneration {
            state,
            trace: trace.to_vec(),
        },
        other => other,
    }
}

/// Whether the first branch of a split at 0-based position `i0` is effective.
fn first_branch_effective(i0: usize, s: usize, dim: u32, ai: u32) -> bool {
    i0 as i64 >= s as i64 + 1 - ((dim as i64 - (ai as i64 - 1)).div_euclid(2))
}

fn checked_successor(next: RestrictionSequence) -> Result<RestrictionSequence> {
    if next.violations_except(&["isotropic-offset"]).is_empty() {
        Ok(next)
    } else {
        Err(unsupported(&next))
    }
}

/// One move of the degeneration: split if an isotropic space sits one above
/// a corank, otherwise raise the innermost non-terminal quadric.
/// Returns `None` on a fully degenerate sequence.
pub fn degenerate_step(seq: &RestrictionSequence) -> Result<Option<StepOutcome>> {
    let innermost = seq.quadrics.len().wrapping_sub(1);
    for (j, q) in seq.quadrics.iter().enumerate().rev() {
        if let Some(i0) = seq.a.iter().position(|&x| x == q.corank + 1) {
            if j != innermost {
                return Err(unsupported(seq));
            }
            let ai = seq.a[i0];
            let effective = first_branch_effective(i0, seq.a.len(), q.dim, ai);
            let mut successors = Vec::new();
            if effective {
                let mut l1 = seq.clone();
                l1.quadrics[j] = Quadric {
                    dim: q.dim - 1,
                    corank: ai,
                };
                successors.push(checked_successor(l1)?);
            }
            if ai == 1 || (i0 > 0 && seq.a[i0 - 1] == ai - 1) {
                return Err(unsupported(seq));
            }
            let mut l2 = seq.clone();
            l2.a[i0] = ai - 1;
            successors.push(checked_successor(l2)?);
            return Ok(Some(StepOutcome {
                action: Action::Split {
                    position: i0 + 1,
                    first_effective: effective,
                },
                successors,
            }));
        }
    }
    let Some(j) = seq.quadrics.iter().rposition(|q| !seq.is_terminal_quadric(q)) else {
        return Ok(None);
    };
    let q = seq.quadrics[j];
    if q.dim + q.corank > seq.n {
        return Err(unsupported(seq));
    }
    let mut next = seq.clone();
    next.quadrics[j].corank += 1;
    Ok(Some(StepOutcome {
        action: Action::Raise {
            quadric: j + 1,
            from: q.corank,
            to: q.corank + 1,
        },
        successors: vec![checked_successor(next)?],
    }))
}

#[derive(Debug, Clone)]
pub struct Expansion {
    pub class: ChowClass,
    pub trace: Vec<TraceStep>,
}

fn child_path(path: &str, idx: usize, count: usize) -> String {
    if count == 1 {
        path.to_string()
    } else {
        format!("{}.{}", path, idx + 1)
    }
}

/// Degenerates a valid sequence into orthogonal Schubert classes.
pub fn expand(seq: &RestrictionSequence) -> Result<Expansion> {
    let v = seq.violations();
    if !v.is_empty() {
        return Err(Error::Invalid(v));
    }
    let mut class = ChowClass::zero(seq.space()?);
    let mut trace: Vec<TraceStep> = Vec::new();
    let mut stack = vec![("0".to_string(), seq.clone())];
    while let Some((path, cur)) = stack.pop() {
        let outcome = degenerate_step(&cur).map_err(|e| with_trace(e, &trace))?;
        match outcome {
            None => {
                let Some(x) = cur.to_schubert() else {
                    return Err(with_trace(unsupported(&cur), &trace));
                };
                class.add(x.index, 1)?;
                trace.push(TraceStep {
                    step: trace.len(),
                    path,
                    state: cur.to_string(),
                    action: Action::Terminal { multiplicity: 1 },
                    successors: Vec::new(),
                });
            }
            Some(out) => {
                let count = out.successors.len();
                trace.push(TraceStep {
                    step: trace.len(),
                    path: path.clone(),
                    state: cur.to_string(),
                    action: out.action,
                    successors: out.successors.iter().map(|x| x.to_string()).collect(),
                });
                for (idx, next) in out.successors.into_iter().enumerate().rev() {
                    stack.push((child_path(&path, idx, count), next));
                }
            }
        }
    }
    Ok(Expansion { class, trace })
}

// ---------------------------------------------------------------------------
// Push-forward to the ambient Grassmannian.

struct Linear {
    a: Vec<u32>,
    dim: u32,
    corank: u32,
    mult: u64,
}

impl fmt::Display for Linear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let iso: Vec<String> = self.a.iter().map(|x| format!("F:{}", x)).collect();
        if iso.is_empty() {
            write!(f, "Q:{}^{}", self.dim, self.corank)?;
        } else {
            write!(f, "{} | Q:{}^{}", iso.join(", "), self.dim, self.corank)?;
        }
        if self.mult > 1 {
            write!(f, " x{}", self.mult)?;
        }
        Ok(())
    }
}

/// Class of the OG Schubert variety inside G(k,n). Supports at most one
/// quadric; the quadric is degenerated until it breaks into linear spaces.
pub fn og_to_grass(s: &Schubert) -> Result<Expansion> {
    if s.space.kind != SpaceKind::OrthGrass {
        return Err(Error::UnsupportedKind(format!("expected OG(k,n), got {}", s.space)));
    }
    let n = s.space.n;
    let k = s.space.top();
    let a = s.index.a_values();
    let b = s.index.b_values();
    let target = Space::grass(k, n)?;
    let mut class = ChowClass::zero(target);
    let mut trace: Vec<TraceStep> = Vec::new();
    if b.is_empty() {
        class.add(SchubertIndex::Plain(a), 1)?;
        return Ok(Expansion { class, trace });
    }
    if b.len() > 1 {
        return Err(unsupported(&s));
    }
    let sa = a.len();
    let mut stack = vec![(
        "0".to_string(),
        Linear {
            a,
            dim: n - b[0],
            corank: b[0],
            mult: 1,
        },
    )];
    while let Some((path, cur)) = stack.pop() {
        let fail = |trace: &[TraceStep]| with_trace(unsupported(&cur), trace);
        if let Some(i0) = cur.a.iter().position(|&x| x == cur.corank + 1) {
            let ai = cur.a[i0];
            let effective = first_branch_effective(i0, sa, cur.dim, ai);
            if ai == 1 || (i0 > 0 && cur.a[i0 - 1] == ai - 1) {
                return Err(fail(&trace));
            }
            let mut next = Vec::new();
            if effective {
                next.push(Linear {
                    a: cur.a.clone(),
                    dim: cur.dim - 1,
                    corank: ai,
                    mult: cur.mult,
                });
            }
            let mut a2 = cur.a.clone();
            a2[i0] = ai - 1;
            next.push(Linear {
                a: a2,
                dim: cur.dim,
                corank: cur.corank,
                mult: cur.mult,
            });
            let count = next.len();
            trace.push(TraceStep {
                step: trace.len(),
                path: path.clone(),
                state: cur.to_string(),
                action: Action::Split {
                    position: i0 + 1,
                    first_effective: effective,
                },
                successors: next.iter().map(|x| x.to_string()).collect(),
            });
            for (idx, x) in next.into_iter().enumerate().rev() {
                stack.push((child_path(&path, idx, count), x));
            }
        } else if cur.corank + 2 == cur.dim {
            if cur.a.last().is_some_and(|&x| x + 1 >= cur.dim) {
                return Err(fail(&trace));
            }
            let mult = cur.mult.checked_mul(2).ok_or(Error::Overflow)?;
            let mut idx = cur.a.clone();
            idx.push(cur.dim - 1);
            let term = Schubert::new(class.space.clone(), SchubertIndex::Plain(idx))
                .map_err(|_| fail(&trace))?;
            trace.push(TraceStep {
                step: trace.len(),
                path,
                state: cur.to_string(),
                action: Action::Break { multiplicity: mult },
                successors: vec![term.index.to_string()],
            });
            class.add(term.index, mult)?;
        } else if cur.corank + 2 > cur.dim {
            return Err(fail(&trace));
        } else {
            let next = Linear {
                a: cur.a.clone(),
                dim: cur.dim,
                corank: cur.corank + 1,
                mult: cur.mult,
            };
            trace.push(TraceStep {
                step: trace.len(),
                path: path.clone(),
                state: cur.to_string(),
                action: Action::Raise {
                    quadric: 1,
                    from: cur.corank,
                    to: cur.corank + 1,
                },
                successors: vec![next.to_string()],
            });
            stack.push((path, next));
        }
    }
    Ok(Expansion { class, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::parse_index;

    #[test]
    fn literal_round_trip() {
        let seq = parse_sequence("F:2 | Q:6^0 @ OG(2,7)").unwrap();
        assert_eq!(seq.quadrics, vec![Quadric { dim: 6, corank: 0 }]);
        assert_eq!(seq.to_string(), "F:2 | Q:6^0 @ OG(2,7)");
        let two: RestrictionSequence = "Q:6^1, Q:5^2 @ OG(2,7)".parse().unwrap();
        assert_eq!(two.to_string(), "Q:5^2, Q:6^1 @ OG(2,7)");
        assert!(parse_sequence("F:2 | Q:6^0 @ G(2,7)").is_err());
        assert!(parse_sequence("F:2 | R:6 @ OG(2,7)").is_err());
    }

    #[test]
    fn validation_rules() {
        assert!(parse_sequence("F:2 | Q:6^0 @ OG(2,9)").unwrap().violations().is_empty());
        let rules = |t: &str| -> Vec<&str> {
            parse_sequence(t).unwrap().violations().iter().map(|v| v.rule).collect()
        };
        assert!(rules("F:2 | Q:6^4 @ OG(2,11)").contains(&"innermost-corank"));
        assert!(rules("F:2 | Q:6^1 @ OG(2,9)").contains(&"isotropic-offset"));
        assert!(rules("F:2 @ OG(2,9)").contains(&"shape"));
    }

    #[test]
    fn schubert_ladders() {
        let s = parse_index("(1 | 1) @ OG(2,7)").unwrap();
        let seq = schubert_to_sequence(&s).unwrap();
        assert_eq!(seq.to_string(), "F:1 | Q:6^1 @ OG(2,7)");
        assert!(sequence_is_schubert(&seq));
        let t = parse_index("(2 | 2) @ OG(2,7)").unwrap();
        assert_eq!(schubert_to_sequence(&t).unwrap().to_string(), "F:2 | Q:5^2 @ OG(2,7)");
    }

    #[test]
    fn expansion_of_isotropic_plane_in_quadric() {
        let seq = parse_sequence("F:2 | Q:6^0 @ OG(2,7)").unwrap();
        let out = expand(&seq).unwrap();
        assert_eq!(out.class.to_string(), "1·(1|1) + 1·(2|2)");
        assert!(matches!(out.trace[0].action, Action::Raise { .. }));
        assert!(matches!(
            out.trace[1].action,
            Action::Split { first_effective: true, .. }
        ));
    }

    #[test]
    fn push_to_grassmannian() {
        let s = parse_index("(1 | 1) @ OG(2,7)").unwrap();
        assert_eq!(og_to_grass(&s).unwrap().class.to_string(), "2·1,5");
        let t = parse_index("(2 | 2) @ OG(2,7)").unwrap();
        assert_eq!(og_to_grass(&t).unwrap().class.to_string(), "2·2,4");
        let u = parse_index("(1,3 |) @ OG(2,7)").unwrap();
        assert_eq!(og_to_grass(&u).unwrap().class.to_string(), "1·1,3");
        let w = parse_index("(| 0,1) @ OG(2,7)").unwrap();
        assert!(matches!(
            og_to_grass(&w),
            Err(Error::UnsupportedDegeneration { .. })
        ));
    }
}
