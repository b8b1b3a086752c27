use schubert_rigidity::index::{enumerate_indices, parse_index, Space, DEFAULT_ENUM_CAP};
use schubert_rigidity::multirigidity::og_pushforward_leading;
use schubert_rigidity::restriction::{
    degenerate_step, expand, og_to_grass, parse_sequence, schubert_to_sequence, Action,
};
use schubert_rigidity::rigidity::og_essential_a;
use schubert_rigidity::{Error, Schubert};

fn grass_dim(a: &[u32]) -> u32 {
    a.iter().enumerate().map(|(i, &v)| v - i as u32 - 1).sum()
}

#[test]
fn isotropic_plane_in_a_smooth_quadric_is_valid() {
    for n in 7..=12 {
        let seq = parse_sequence(&format!("F:2 | Q:{}^0 @ OG(2,{})", n - 1, n)).unwrap();
        assert!(seq.violations().is_empty(), "n = {}: {:?}", n, seq.violations());
    }
}

#[test]
fn named_violations() {
    let rules = |t: &str| -> Vec<&'static str> {
        parse_sequence(t).unwrap().violations().iter().map(|v| v.rule).collect()
    };
    assert!(rules("F:1 | Q:8^6 @ OG(2,15)").contains(&"innermost-corank"));
    assert!(rules("F:3 | Q:8^2 @ OG(2,15)").contains(&"isotropic-offset"));
    assert!(rules("F:1 | Q:9^3, Q:8^1 @ OG(3,15)").contains(&"corank-nesting"));
    assert!(rules("F:1 | Q:9^1, Q:9^2 @ OG(3,15)").contains(&"quadric-order"));
    assert!(rules("F:1 | Q:9^7 @ OG(2,15)").contains(&"quadric-bound"));
}

#[test]
fn first_step_raises_then_splits() {
    let seq = parse_sequence("F:2 | Q:6^0 @ OG(2,7)").unwrap();
    let one = degenerate_step(&seq).unwrap().unwrap();
    assert_eq!(one.action, Action::Raise { quadric: 1, from: 0, to: 1 });
    let two = degenerate_step(&one.successors[0]).unwrap().unwrap();
    let names: Vec<String> = two.successors.iter().map(|s| s.to_string()).collect();
    assert_eq!(names, vec!["F:2 | Q:5^2 @ OG(2,7)", "F:1 | Q:6^1 @ OG(2,7)"]);
}

#[test]
fn expanded_terms_share_one_dimension() {
    let seq = parse_sequence("F:2 | Q:6^0 @ OG(2,7)").unwrap();
    let out = expand(&seq).unwrap();
    let dims: Vec<u32> = out
        .class
        .terms
        .keys()
        .map(|x| {
            let s = Schubert::new(out.class.space.clone(), x.clone()).unwrap();
            let img = og_to_grass(&s).unwrap();
            grass_dim(&img.class.terms.keys().next().unwrap().a_values())
        })
        .collect();
    assert_eq!(dims, vec![3, 3]);
}

#[test]
fn second_worked_push_forward() {
    let s = parse_index("(2 | 2) @ OG(2,7)").unwrap();
    let out = og_to_grass(&s).unwrap();
    assert_eq!(out.class.to_string(), "2·2,4");
    assert_eq!(grass_dim(&[2, 4]), 3);
    let lead = og_pushforward_leading(&s, 1).unwrap();
    assert_eq!((lead.coefficient, lead.prefix), (2, vec![2]));
}

#[test]
fn leading_coefficient_matches_expansion() {
    let mut compared = 0;
    for n in [7u32, 9] {
        let sp = Space::orth_grass(2, n).unwrap();
        for index in enumerate_indices(&sp, DEFAULT_ENUM_CAP).unwrap() {
            let s = Schubert { space: sp.clone(), index };
            let Ok(out) = og_to_grass(&s) else { continue };
            let a = s.index.a_values();
            let b = s.index.b_values();
            for p in (0..a.len()).filter(|&p| og_essential_a(&a, &b, n, p)) {
                let lead = og_pushforward_leading(&s, p as u32 + 1).unwrap();
                if !lead.admissible {
                    continue;
                }
                let got: u64 = out
                    .class
                    .terms
                    .iter()
                    .filter(|(t, _)| t.a_values()[..lead.prefix.len()] == lead.prefix[..])
                    .map(|(_, c)| *c)
                    .sum();
                assert_eq!(got, lead.coefficient, "{} at a{}", s, p + 1);
                compared += 1;
            }
        }
    }
    assert!(compared > 10, "only {} comparisons", compared);
}

#[test]
fn ineffective_first_branch_is_dropped() {
    let mut seen = false;
    for n in 7..=11u32 {
        for k in 1..=3.min(n / 2) {
            let sp = Space::orth_grass(k, n).unwrap();
            for index in enumerate_indices(&sp, DEFAULT_ENUM_CAP).unwrap() {
                let s = Schubert { space: sp.clone(), index };
                let Ok(out) = og_to_grass(&s) else { continue };
                for st in &out.trace {
                    if let Action::Split { first_effective: false, .. } = st.action {
                        assert_eq!(st.successors.len(), 1, "{}", st.state);
                        seen = true;
                    }
                }
            }
        }
    }
    assert!(seen, "no split with an ineffective first branch in range");
}

#[test]
fn unsupported_states_are_named() {
    let s = parse_index("(| 0,1) @ OG(2,7)").unwrap();
    match og_to_grass(&s) {
        Err(Error::UnsupportedDegeneration { state, .. }) => assert!(state.contains("OG(2,7)")),
        other => panic!("{:?}", other.map(|o| o.class.to_string())),
    }
    let err = og_to_grass(&s).unwrap_err();
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn schubert_round_trip_through_ladders() {
    let sp = Space::orth_grass(3, 9).unwrap();
    for index in enumerate_indices(&sp, DEFAULT_ENUM_CAP).unwrap() {
        let s = Schubert { space: sp.clone(), index };
        let seq = schubert_to_sequence(&s).unwrap();
        assert!(seq.is_schubert());
        assert_eq!(seq.to_schubert().unwrap(), s);
        let again = parse_sequence(&seq.to_string()).unwrap();
        assert_eq!(again, seq);
    }
}
