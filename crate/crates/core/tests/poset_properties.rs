//! Property tests over randomly generated small posets.

use fcat_core::fincat::{
    build_poset, enumerate_cones, find_colimit, find_limit, opposite_cat, validate_category,
    FinFunctor, ObjId,
};
use fcat_core::modelstruct::{lifting_exists, LiftingSquare};
use proptest::prelude::*;
use std::rc::Rc;

/// Random upward covering relations i < j on up to 5 named elements;
/// acyclic by construction.
fn poset_strategy() -> impl Strategy<Value = Rc<fcat_core::fincat::FinCat>> {
    proptest::collection::vec((0usize..5, 0usize..5), 1..8).prop_map(|pairs| {
        let names: Vec<String> = (0..5).map(|i| format!("p{i}")).collect();
        let relations: Vec<(&str, &str)> = pairs
            .iter()
            .filter(|(i, j)| i < j)
            .map(|&(i, j)| (names[i].as_str(), names[j].as_str()))
            .collect();
        build_poset("rand", &relations).expect("upward relations are acyclic")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_posets_validate_and_are_thin(c in poset_strategy()) {
        prop_assert!(validate_category(&c).passed());
        for a in c.objects() {
            for b in c.objects() {
                prop_assert!(c.hom(a, b).len() <= 1);
            }
        }
        prop_assert!(c.is_skeletal_poset());
    }

    #[test]
    fn double_opposite_is_identity(c in poset_strategy()) {
        let back = opposite_cat(&opposite_cat(&c));
        prop_assert_eq!(c.as_ref(), back.as_ref());
    }

    #[test]
    fn colimits_factor_every_cocone_uniquely(c in poset_strategy()) {
        // Discrete two-object diagrams: when a colimit exists it factors
        // every cocone exactly once.
        let mut b = fcat_core::fincat::CatBuilder::new("pair");
        b.object_with_identity("u");
        b.object_with_identity("v");
        let shape = Rc::new(b.build().unwrap());
        for x in c.objects() {
            for y in c.objects() {
                let d = FinFunctor::new(
                    "d",
                    shape.clone(),
                    c.clone(),
                    vec![x, y],
                    vec![c.identity(x), c.identity(y)],
                )
                .unwrap();
                if let Some(colim) = find_colimit(&d) {
                    for other in enumerate_cones(&d, false) {
                        let factorings = c
                            .hom(colim.apex, other.apex)
                            .into_iter()
                            .filter(|&u| {
                                colim.legs.iter().zip(&other.legs).all(|(&cl, &ol)| {
                                    c.compose(u, cl) == Some(ol)
                                })
                            })
                            .count();
                        prop_assert_eq!(factorings, 1);
                    }
                }
            }
        }
    }

    #[test]
    fn lifting_is_self_dual(c in poset_strategy()) {
        // A lift exists for (i, p, top, bottom) iff one exists for the
        // transposed square in the opposite category.
        let op = opposite_cat(&c);
        for i in c.morphisms() {
            for p in c.morphisms() {
                for top in c.hom(c.source(i), c.source(p)) {
                    for bottom in c.hom(c.target(i), c.target(p)) {
                        if c.compose(p, top) != c.compose(bottom, i)
                            || c.compose(p, top).is_none()
                        {
                            continue;
                        }
                        let forward = lifting_exists(
                            &c,
                            LiftingSquare { i, p, top, bottom },
                        )
                        .unwrap()
                        .is_some();
                        let backward = lifting_exists(
                            &op,
                            LiftingSquare {
                                i: p,
                                p: i,
                                top: bottom,
                                bottom: top,
                            },
                        )
                        .unwrap()
                        .is_some();
                        prop_assert_eq!(forward, backward);
                    }
                }
            }
        }
    }

    #[test]
    fn limits_are_meets_in_lattices(c in poset_strategy()) {
        // When every pair has a meet-style limit, it is the greatest lower
        // bound.
        let mut b = fcat_core::fincat::CatBuilder::new("pair");
        b.object_with_identity("u");
        b.object_with_identity("v");
        let shape = Rc::new(b.build().unwrap());
        for x in c.objects() {
            for y in c.objects() {
                let d = FinFunctor::new(
                    "d",
                    shape.clone(),
                    c.clone(),
                    vec![x, y],
                    vec![c.identity(x), c.identity(y)],
                )
                .unwrap();
                if let Some(lim) = find_limit(&d) {
                    // Lower bound:
                    prop_assert!(!c.hom(lim.apex, x).is_empty());
                    prop_assert!(!c.hom(lim.apex, y).is_empty());
                    // Greatest:
                    for z in c.objects() {
                        if !c.hom(z, x).is_empty() && !c.hom(z, y).is_empty() {
                            prop_assert!(!c.hom(z, lim.apex).is_empty());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn isolated_points_survive_generation() {
    let c = build_poset("iso", &[("a", "b"), ("c", "d")]).unwrap();
    assert_eq!(c.object_count(), 4);
    let _ = ObjId(0);
}
