mod common;

use proptest::prelude::*;
use proptest::sample::Index;

use schubert_rigidity::chow::is_zero_product;
use schubert_rigidity::index::{dimension, dual, enumerate_indices, parse_index, Space, DEFAULT_ENUM_CAP};
use schubert_rigidity::multirigidity::grass_multirigid_at;
use schubert_rigidity::projections::{fiber_class_mid, pushforward};
use schubert_rigidity::restriction::{expand, og_to_grass, schubert_to_sequence};
use schubert_rigidity::rigidity::{grass_essential, grass_rigid, rigid_class, RelationMode};
use schubert_rigidity::Schubert;

fn pick(space: Space, at: Index) -> Schubert {
    let all = enumerate_indices(&space, DEFAULT_ENUM_CAP).unwrap();
    Schubert { index: all[at.index(all.len())].clone(), space }
}

fn flag_space() -> impl Strategy<Value = Space> {
    (3u32..=7).prop_flat_map(|n| {
        proptest::sample::subsequence((1..n).collect::<Vec<_>>(), 1..=3usize.min(n as usize - 1))
            .prop_filter("small top step", |s| *s.last().unwrap() <= 4)
            .prop_map(move |steps| Space::flag(&steps, n).unwrap())
    })
}

fn any_space() -> impl Strategy<Value = Space> {
    prop_oneof![
        (2u32..=8).prop_flat_map(|n| (1..n).prop_map(move |k| Space::grass(k, n).unwrap())),
        flag_space(),
        (3u32..=9).prop_flat_map(|n| (1..=n / 2).prop_map(move |k| Space::orth_grass(k, n).unwrap())),
        Just(Space::orth_flag(&[1, 2], 5).unwrap()),
        Just(Space::orth_flag(&[1, 3], 7).unwrap()),
        (1u32..=4).prop_flat_map(|m| (1..=m).prop_map(move |k| Space::symp_grass(k, 2 * m).unwrap())),
        Just(Space::symp_flag(&[1, 2], 6).unwrap()),
    ]
}

fn any_index() -> impl Strategy<Value = Schubert> {
    (any_space(), any::<Index>()).prop_map(|(sp, at)| pick(sp, at))
}

fn flag_index() -> impl Strategy<Value = Schubert> {
    (flag_space(), any::<Index>()).prop_map(|(sp, at)| pick(sp, at))
}

fn og_index(n: u32) -> impl Strategy<Value = Schubert> {
    (1..=n / 2, any::<Index>()).prop_map(move |(k, at)| pick(Space::orth_grass(k, n).unwrap(), at))
}

proptest! {
    #[test]
    fn literal_round_trip(x in any_index()) {
        prop_assert_eq!(parse_index(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn dual_is_an_involution_and_complements_dimension(x in flag_index()) {
        let d = dual(&x).unwrap();
        prop_assert_eq!(dual(&d).unwrap(), x.clone());
        let total = x.space.ambient_dimension().unwrap();
        prop_assert_eq!(dimension(&x).unwrap() + dimension(&d).unwrap(), total);
    }

    #[test]
    fn push_and_fiber_dimensions_add_up(x in flag_index(), t in 1u32..=3) {
        let t = t.min(x.space.levels());
        let base = dimension(&pushforward(&x, t).unwrap()).unwrap();
        let fiber = dimension(&fiber_class_mid(&x, t).unwrap()).unwrap();
        prop_assert_eq!(dimension(&x).unwrap(), base + fiber);
    }

    #[test]
    fn rigid_refs_are_essential(x in any_index()) {
        let v = rigid_class(&x, RelationMode::Max);
        for r in &v.refs {
            prop_assert!(r.essential || r.rigid == Some(false), "{}", r.sub);
        }
        if v.class_rigid == Some(true) {
            prop_assert!(v.refs.iter().all(|r| !r.essential || r.rigid == Some(true)));
            if let Some(rel) = &v.relation {
                prop_assert!(rel.totally_ordered);
            }
        }
    }

    #[test]
    fn literal_bound_only_moves_relation_edges(x in any_index()) {
        let max = rigid_class(&x, RelationMode::Max);
        let lit = rigid_class(&x, RelationMode::PaperLiteral);
        prop_assert_eq!(max.refs, lit.refs);
    }

    #[test]
    fn multirigid_subindices_are_rigid(n in 1u32..=10, k in 1u32..=4, at in any::<Index>()) {
        prop_assume!(k <= n);
        let x = pick(Space::grass(k, n).unwrap(), at);
        let a = x.index.a_values();
        for i in (0..a.len()).filter(|&i| grass_essential(&a, i)) {
            prop_assert!(!grass_multirigid_at(&a, n, i) || grass_rigid(&a, i));
        }
    }

    #[test]
    fn zero_product_is_symmetric(n in 2u32..=7, k in 1u32..=3, i in any::<Index>(), j in any::<Index>()) {
        prop_assume!(k < n);
        let sp = Space::grass(k, n).unwrap();
        let x = pick(sp.clone(), i);
        let y = pick(sp, j);
        prop_assert_eq!(is_zero_product(&x, &y).unwrap(), is_zero_product(&y, &x).unwrap());
    }

    #[test]
    fn schubert_ladders_are_fixed_points(x in og_index(9)) {
        let seq = schubert_to_sequence(&x).unwrap();
        let out = expand(&seq).unwrap();
        prop_assert_eq!(out.class.terms.len(), 1);
        prop_assert_eq!(out.class.coefficient(&x.index), 1);
    }

    #[test]
    fn grassmannian_images_have_one_dimension(x in og_index(9)) {
        if let Ok(out) = og_to_grass(&x) {
            let dims: std::collections::BTreeSet<u64> = out
                .class
                .terms
                .keys()
                .map(|t| t.a_values().iter().enumerate().map(|(i, &v)| (v - i as u32 - 1) as u64).sum())
                .collect();
            prop_assert!(dims.len() <= 1);
            prop_assert!(out.class.terms.values().all(|&c| c > 0));
            let again = og_to_grass(&x).unwrap();
            prop_assert_eq!(again.class, out.class);
            prop_assert_eq!(again.trace, out.trace);
        }
    }
}
