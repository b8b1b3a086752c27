//! Push-forward along the canonical projections and classes of general fibers.

use crate::error::{Error, Result};
use crate::index::{rank_table, Entry, Schubert, SchubertIndex, Space, SpaceKind};

fn check_level(space: &Space, t: u32) -> Result<()> {
    if t == 0 || t > space.levels() {
        return Err(Error::InvalidArgument(format!(
            "projection level {} outside 1..={} for {}",
            t,
            space.levels(),
            space
        )));
    }
    Ok(())
}

/// Image of the class under the t-th projection: drop every entry whose
/// block label exceeds t. Grassmannian inputs accept only t = 1.
pub fn pushforward(s: &Schubert, t: u32) -> Result<Schubert> {
    check_level(&s.space, t)?;
    let space = s.space.level_space(t);
    let index = match &s.index {
        SchubertIndex::Plain(_) | SchubertIndex::Pair { .. } => s.index.clone(),
        SchubertIndex::Flagged(e) => SchubertIndex::Plain(
            e.iter().filter(|x| x.block <= t).map(|x| x.value).collect(),
        ),
        SchubertIndex::FlaggedPair { a, b } => SchubertIndex::Pair {
            a: a.iter().filter(|x| x.block <= t).map(|x| x.value).collect(),
            b: b.iter().filter(|x| x.block <= t).map(|x| x.value).collect(),
        },
    };
    Ok(Schubert { space, index })
}

/// Positions (0-based) of the entries that survive the t-th projection.
pub fn surviving_positions(blocks: &[u32], t: u32) -> Vec<usize> {
    blocks
        .iter()
        .enumerate()
        .filter(|(_, &b)| b <= t)
        .map(|(i, _)| i)
        .collect()
}

fn flag_entries(s: &Schubert) -> Result<&[Entry]> {
    match &s.index {
        SchubertIndex::Flagged(e) if s.space.kind == SpaceKind::Flag => Ok(e),
        _ => Err(Error::UnsupportedKind(format!(
            "fiber classes of this shape need a type A flag index, got {}",
            s.space
        ))),
    }
}

/// Fiber of the top projection: (1^{alpha_1}, ..., d_k^{alpha_{d_k}}).
pub fn fiber_class_top(s: &Schubert) -> Result<Schubert> {
    let e = flag_entries(s)?;
    Ok(Schubert {
        space: s.space.clone(),
        index: SchubertIndex::Flagged(
            e.iter()
                .enumerate()
                .map(|(i, x)| Entry::new(i as u32 + 1, x.block))
                .collect(),
        ),
    })
}

/// Fiber of the first projection.
pub fn fiber_class_bottom(s: &Schubert) -> Result<Schubert> {
    fiber_class_mid(s, 1)
}

/// Fiber of the t-th projection. Entries with label at most t collapse to
/// 1..d_t in order; each other entry a moves up by the number of
/// collapsed entries above it.
pub fn fiber_class_mid(s: &Schubert, t: u32) -> Result<Schubert> {
    let e = flag_entries(s)?;
    check_level(&s.space, t)?;
    let mut out: Vec<Entry> = e
        .iter()
        .filter(|x| x.block <= t)
        .enumerate()
        .map(|(j, x)| Entry::new(j as u32 + 1, x.block))
        .collect();
    for x in e.iter().filter(|x| x.block > t) {
        let lifted = e
            .iter()
            .filter(|y| y.block <= t && y.value > x.value)
            .count() as u32;
        out.push(Entry::new(x.value + lifted, x.block));
    }
    Ok(Schubert {
        space: s.space.clone(),
        index: SchubertIndex::Flagged(out),
    })
}

/// Fiber of the m-th projection of an orthogonal flag class. The result is
/// returned as computed; it is not re-validated.
pub fn fiber_class_orth(s: &Schubert, m: u32) -> Result<Schubert> {
    if s.space.kind != SpaceKind::OrthFlag {
        return Err(Error::UnsupportedKind(format!(
            "orthogonal fiber classes need an OF index, got {}",
            s.space
        )));
    }
    check_level(&s.space, m)?;
    let a = s.index.a_entries();
    let b = s.index.b_entries();
    let ranks = rank_table(s);
    let col = (m - 1) as usize;
    let kept_a = a.iter().filter(|x| x.block <= m).count() as u32;

    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for (i, ai) in a.iter().enumerate() {
        let mu = ranks.a_ranks[i][col];
        if ai.block <= m {
            lower.push(Entry::new(mu, ai.block));
        } else {
            let h = b
                .iter()
                .filter(|e| e.value >= ai.value && e.block <= m)
                .count() as u32;
            lower.push(Entry::new(ai.value + kept_a - mu + h, ai.block));
        }
    }
    for (j, bj) in b.iter().enumerate() {
        if bj.block <= m {
            lower.push(Entry::new(ranks.b_ranks[j][col], bj.block));
        } else {
            let y = a
                .iter()
                .filter(|p| p.value > bj.value && p.block <= m)
                .count() as u32;
            let z = b
                .iter()
                .filter(|q| q.value >= bj.value && q.block <= m)
                .count() as u32;
            upper.push(Entry::new(bj.value + y + z, bj.block));
        }
    }
    lower.sort();
    upper.sort();
    Ok(Schubert {
        space: s.space.clone(),
        index: SchubertIndex::FlaggedPair { a: lower, b: upper },
    })
}
