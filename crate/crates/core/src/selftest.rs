//! Built-in regression and sweep checks behind `schubert selftest`.

use serde::Serialize;

use crate::chow::{is_zero_product, product_indices};
use crate::index::{dimension, enumerate_indices, parse_index, Schubert, Space, DEFAULT_ENUM_CAP};
use crate::multirigidity::{grass_multirigid_at, multirigid_class_og, og_pushforward_leading};
use crate::projections::{fiber_class_mid, pushforward};
use crate::restriction::{expand, og_to_grass, parse_sequence};
use crate::rigidity::{
    flag_essential, flag_rigid_closed, flag_rigid_levels, grass_essential, grass_rigid,
    og_essential_a, rigid_class, RelationMode,
};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Quick,
    Full,
}

pub struct Check {
    pub name: &'static str,
    pub scope: Scope,
    pub run: fn() -> std::result::Result<(), String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn class_verdict(text: &str) -> std::result::Result<Option<bool>, String> {
    Ok(rigid_class(&lift(parse_index(text))?, RelationMode::Max).class_rigid)
}

fn flag_examples() -> std::result::Result<(), String> {
    ensure(class_verdict("2^1,4^2 @ F(1,2;4)")? == Some(true), || "2^1,4^2 should be rigid".into())?;
    ensure(class_verdict("2^2,4^1 @ F(1,2;4)")? == Some(false), || "2^2,4^1 should not be rigid".into())
}

fn orthogonal_examples() -> std::result::Result<(), String> {
    ensure(class_verdict("(3 | 0,1,3) @ OG(4,11)")? == Some(true), || "(3|0,1,3) should be rigid".into())?;
    ensure(class_verdict("(1^1 | 1^2) @ OF(1,2;5)")? == Some(true), || "(1^1|1^2) should be rigid".into())?;
    ensure(class_verdict("(1 | 1) @ OG(2,5)")? == Some(false), || "(1|1) in OG(2,5) should not be rigid".into())
}

fn pushforward_examples() -> std::result::Result<(), String> {
    let cases = [
        ("1^1,3^2,5^2 @ F(1,3;5)", 2, "1,3,5 @ G(3,5)"),
        ("2^1,4^2 @ F(1,2;4)", 1, "2 @ G(1,4)"),
        ("(3^2 | 3^1,1^1,0^2) @ OF(2,4;11)", 1, "(|1,3) @ OG(2,11)"),
    ];
    for (src, t, want) in cases {
        let got = lift(pushforward(&lift(parse_index(src))?, t))?.to_string();
        ensure(got == want, || format!("push of {} at {} gave {}", src, t, got))?;
    }
    Ok(())
}

fn degeneration_examples() -> std::result::Result<(), String> {
    let seq = lift(parse_sequence("F:2 | Q:6^0 @ OG(2,7)"))?;
    let got = lift(expand(&seq))?.class.to_string();
    ensure(got == "1·(1|1) + 1·(2|2)", || format!("expansion gave {}", got))?;
    let s = lift(parse_index("(1 | 1) @ OG(2,7)"))?;
    let got = lift(og_to_grass(&s))?.class.to_string();
    ensure(got == "2·1,5", || format!("push to G(2,7) gave {}", got))?;
    ensure(lift(multirigid_class_og(&s))?.class_multirigid, || "(1|1) should be multi-rigid".into())
}

fn symplectic_family() -> std::result::Result<(), String> {
    for k in 1..=4u32 {
        for i in 1..=k {
            let a: Vec<u32> = (1..=i).collect();
            let b: Vec<u32> = (i..k).collect();
            let s = lift(Schubert::symp(&a, &b, k, 2 * k + 2))?;
            let v = rigid_class(&s, RelationMode::Max).class_rigid;
            ensure(v == Some(true), || format!("{} should be rigid", s))?;
        }
    }
    Ok(())
}

fn flag_closed_form_sweep() -> std::result::Result<(), String> {
    for n in 2..=7u32 {
        for steps in step_sets(n, 3) {
            let sp = lift(Space::flag(&steps, n))?;
            for x in lift(enumerate_indices(&sp, DEFAULT_ENUM_CAP))? {
                let e = x.a_entries();
                for i in (0..e.len()).filter(|&i| flag_essential(&e, i)) {
                    let by_levels = !flag_rigid_levels(&e, sp.levels(), i).is_empty();
                    ensure(by_levels == flag_rigid_closed(&e, i), || {
                        format!("{} @ {} position {}", x, sp, i + 1)
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn step_sets(n: u32, max_k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << (n - 1)) {
        let steps: Vec<u32> = (1..n).filter(|d| mask & (1 << (d - 1)) != 0).collect();
        if steps.len() >= 2 && *steps.last().unwrap_or(&0) <= max_k {
            out.push(steps);
        }
    }
    out
}

fn multirigid_implies_rigid() -> std::result::Result<(), String> {
    for n in 1..=10u32 {
        for k in 1..=4.min(n) {
            let sp = lift(Space::grass(k, n))?;
            for x in lift(enumerate_indices(&sp, DEFAULT_ENUM_CAP))? {
                let a = x.a_values();
                for p in (0..a.len()).filter(|&p| grass_essential(&a, p)) {
                    ensure(!grass_multirigid_at(&a, n, p) || grass_rigid(&a, p), || {
                        format!("{} @ {} position {}", x, sp, p + 1)
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn zero_product_sweep() -> std::result::Result<(), String> {
    for n in 1..=7u32 {
        for k in 1..=3.min(n) {
            let sp = lift(Space::grass(k, n))?;
            let all = lift(enumerate_indices(&sp, DEFAULT_ENUM_CAP))?;
            for x in &all {
                for y in &all {
                    let sx = Schubert { space: sp.clone(), index: x.clone() };
                    let sy = Schubert { space: sp.clone(), index: y.clone() };
                    let zero = lift(is_zero_product(&sx, &sy))?;
                    let prod = lift(product_indices(&sx, &sy))?;
                    ensure(zero == prod.is_zero(), || format!("{} * {} @ {}", x, y, sp))?;
                }
            }
        }
    }
    Ok(())
}

fn fiber_dimension_sweep() -> std::result::Result<(), String> {
    for (steps, n) in [(vec![1, 2], 4), (vec![1, 2, 3], 5)] {
        let sp = lift(Space::flag(&steps, n))?;
        for x in lift(enumerate_indices(&sp, DEFAULT_ENUM_CAP))? {
            let s = Schubert { space: sp.clone(), index: x };
            let total = lift(dimension(&s))?;
            for t in 1..=sp.levels() {
                let base = lift(dimension(&lift(pushforward(&s, t))?))?;
                let fiber = lift(dimension(&lift(fiber_class_mid(&s, t))?))?;
                ensure(total == base + fiber, || {
                    format!("{} at level {}: {} != {} + {}", s, t, total, base, fiber)
                })?;
            }
        }
    }
    Ok(())
}

fn leading_term_law() -> std::result::Result<(), String> {
    for n in [7u32, 9] {
        let sp = lift(Space::orth_grass(2, n))?;
        for x in lift(enumerate_indices(&sp, DEFAULT_ENUM_CAP))? {
            let s = Schubert { space: sp.clone(), index: x };
            let Ok(exp) = og_to_grass(&s) else { continue };
            let a = s.index.a_values();
            let b = s.index.b_values();
            for p in (0..a.len()).filter(|&p| og_essential_a(&a, &b, n, p)) {
                let lead = lift(og_pushforward_leading(&s, p as u32 + 1))?;
                if !lead.admissible {
                    continue;
                }
                let got: u64 = exp
                    .class
                    .terms
                    .iter()
                    .filter(|(t, _)| t.a_values()[..lead.prefix.len()] == lead.prefix[..])
                    .map(|(_, c)| c)
                    .sum();
                ensure(got == lead.coefficient, || {
                    format!("{} at a{}: expansion {} vs predicted {}", s, p + 1, got, lead.coefficient)
                })?;
            }
        }
    }
    Ok(())
}

pub fn checks() -> Vec<Check> {
    vec![
        Check { name: "flag examples", scope: Scope::Quick, run: flag_examples },
        Check { name: "orthogonal examples", scope: Scope::Quick, run: orthogonal_examples },
        Check { name: "push-forward examples", scope: Scope::Quick, run: pushforward_examples },
        Check { name: "degeneration examples", scope: Scope::Quick, run: degeneration_examples },
        Check { name: "symplectic family", scope: Scope::Quick, run: symplectic_family },
        Check { name: "flag closed form vs projections", scope: Scope::Full, run: flag_closed_form_sweep },
        Check { name: "multi-rigid implies rigid", scope: Scope::Full, run: multirigid_implies_rigid },
        Check { name: "zero product criterion", scope: Scope::Full, run: zero_product_sweep },
        Check { name: "fiber dimensions", scope: Scope::Full, run: fiber_dimension_sweep },
        Check { name: "push-forward leading term", scope: Scope::Full, run: leading_term_law },
    ]
}

/// Runs every check in scope; quick checks also run under the full scope.
pub fn run_checks(checks: &[Check], scope: Scope) -> Vec<CheckOutcome> {
    checks
        .iter()
        .filter(|c| scope == Scope::Full || c.scope == Scope::Quick)
        .map(|c| match (c.run)() {
            Ok(()) => CheckOutcome { name: c.name.into(), passed: true, detail: None },
            Err(d) => CheckOutcome { name: c.name.into(), passed: false, detail: Some(d) },
        })
        .collect()
}
