use itertools::Itertools;

use super::{validate, Entry, SchubertIndex, Space, SpaceKind};
use crate::error::{Error, Result};

pub const DEFAULT_ENUM_CAP: usize = 1_000_000;

/// Cap from `SCHUBERT_ENUM_CAP`, falling back to [`DEFAULT_ENUM_CAP`].
pub fn default_cap() -> usize {
    std::env::var("SCHUBERT_ENUM_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUM_CAP)
}

struct Sink {
    out: Vec<SchubertIndex>,
    cap: usize,
}

impl Sink {
    fn push(&mut self, x: SchubertIndex) -> Result<()> {
        if self.out.len() >= self.cap {
            return Err(Error::CapExceeded { cap: self.cap });
        }
        self.out.push(x);
        Ok(())
    }
}

/// Every arrangement of block labels with `counts[t-1]` copies of label t.
fn label_words(counts: &[u32]) -> Vec<Vec<u32>> {
    fn go(left: &mut Vec<u32>, cur: &mut Vec<u32>, total: usize, out: &mut Vec<Vec<u32>>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for t in 0..left.len() {
            if left[t] > 0 {
                left[t] -= 1;
                cur.push(t as u32 + 1);
                go(left, cur, total, out);
                cur.pop();
                left[t] += 1;
            }
        }
    }
    let total = counts.iter().sum::<u32>() as usize;
    let mut out = Vec::new();
    go(&mut counts.to_vec(), &mut Vec::new(), total, &mut out);
    out
}

fn block_counts(space: &Space) -> Vec<u32> {
    (1..=space.levels())
        .map(|t| space.step(t) - space.step(t - 1))
        .collect()
}

/// All valid indices of `space` in canonical order; fails once more than `cap` exist.
pub fn enumerate_indices(space: &Space, cap: usize) -> Result<Vec<SchubertIndex>> {
    let v = space.violations();
    if !v.is_empty() {
        return Err(Error::Invalid(v));
    }
    let mut sink = Sink {
        out: Vec::new(),
        cap,
    };
    let top = space.top() as usize;
    match space.kind {
        SpaceKind::Grass => {
            for a in (1..=space.n).combinations(top) {
                sink.push(SchubertIndex::Plain(a))?;
            }
        }
        SpaceKind::Flag => {
            let words = label_words(&block_counts(space));
            for a in (1..=space.n).combinations(top) {
                for w in &words {
                    let e = a.iter().zip(w).map(|(&v, &b)| Entry::new(v, b)).collect();
                    sink.push(SchubertIndex::Flagged(e))?;
                }
            }
        }
        _ => {
            let h = space.half();
            let flagged = space.kind.is_flag();
            let words = label_words(&block_counts(space));
            for s in 0..=top {
                for a in (1..=h).combinations(s) {
                    for b in (0..h).combinations(top - s) {
                        let plain = SchubertIndex::Pair {
                            a: a.clone(),
                            b: b.clone(),
                        };
                        if !flagged {
                            if validate(space, &plain).is_empty() {
                                sink.push(plain)?;
                            }
                            continue;
                        }
                        let probe = space.level_space(space.levels());
                        if !validate(&probe, &plain).is_empty() {
                            continue;
                        }
                        for w in &words {
                            let x = SchubertIndex::FlaggedPair {
                                a: a.iter().zip(w).map(|(&v, &l)| Entry::new(v, l)).collect(),
                                b: b.iter()
                                    .zip(&w[s..])
                                    .map(|(&v, &l)| Entry::new(v, l))
                                    .collect(),
                            };
                            if validate(space, &x).is_empty() {
                                sink.push(x)?;
                            }
                        }
                    }
                }
            }
        }
    }
    let mut out = sink.out;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(space: Space) -> usize {
        enumerate_indices(&space, DEFAULT_ENUM_CAP).unwrap().len()
    }

    #[test]
    fn small_counts() {
        let g12 = enumerate_indices(&Space::grass(1, 2).unwrap(), 10).unwrap();
        assert_eq!(g12, vec![SchubertIndex::Plain(vec![1]), SchubertIndex::Plain(vec![2])]);
        assert_eq!(count(Space::grass(2, 4).unwrap()), 6);
        // six value pairs, two label orders each
        assert_eq!(count(Space::flag(&[1, 2], 4).unwrap()), 12);
        assert_eq!(count(Space::orth_grass(1, 5).unwrap()), 4);
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_indices(&Space::grass(2, 6).unwrap(), 5).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 5 }));
    }

    #[test]
    fn output_is_sorted_and_valid() {
        let sp = Space::orth_flag(&[1, 2], 5).unwrap();
        let all = enumerate_indices(&sp, DEFAULT_ENUM_CAP).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|x| validate(&sp, x).is_empty()));
    }
}
