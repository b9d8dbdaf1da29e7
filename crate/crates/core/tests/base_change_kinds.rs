//! Both base-change kinds produce the same certified adjunction when the
//! base adjunction is the identity, and the right kind works on its own
//! over a genuine base change.

use fcat_core::adjunction::Adjunction;
use fcat_core::corpus::slice_functor;
use fcat_core::fincat::{chain, point, FinFunctor, ObjId};
use fcat_core::grothendieck::AdjCatFunctor;
use fcat_core::integral::{
    base_change, build_integral, BaseChangeFamily, BuildMode, ModCatFunctor, MorphismKind,
};
use fcat_core::modelstruct::{
    enumerate_model_structures, ModelCat, MorClass, DEFAULT_SHAPE_BOUND,
};

const BOUND: usize = DEFAULT_SHAPE_BOUND;

fn ex44() -> ModelCat {
    enumerate_model_structures(&chain(2), BOUND)
        .into_iter()
        .find(|m| {
            m.structure().describe_class(MorClass::Weq) == "all"
                && m.structure().describe_class(MorClass::Fib) == "ids"
        })
        .unwrap()
}

#[test]
fn left_and_right_kinds_agree_over_the_identity() {
    let fm = slice_functor(&ex44()).unwrap();
    let istruct = build_integral(&fm, BuildMode::RequireProperRelative, BOUND).unwrap();
    let base = fm.base().clone();
    let bc = Adjunction::identity(base.clone());
    let components: Vec<Adjunction> = base
        .objects()
        .map(|a| Adjunction::identity(fm.underlying().fiber(a).clone()))
        .collect();
    let left = base_change(
        &fm,
        &istruct,
        &fm,
        &istruct,
        &bc,
        &BaseChangeFamily {
            kind: MorphismKind::Left,
            components: components.clone(),
        },
    )
    .unwrap();
    let right = base_change(
        &fm,
        &istruct,
        &fm,
        &istruct,
        &bc,
        &BaseChangeFamily {
            kind: MorphismKind::Right,
            components,
        },
    )
    .unwrap();
    assert_eq!(left.adjunction, right.adjunction);
    assert!(left.cert.certified_equivalence());
    assert!(right.cert.certified_equivalence());
    assert!(right.family_equivalence);
}

#[test]
fn right_morphism_over_a_nonidentity_base_change() {
    // Base adjunction pt ⇄ ex44-chain picking the bottom object; the right
    // morphism family is indexed by the target base and lands in the
    // two-object scenario diagram with the weak fiber, so the induced
    // adjunction is a Quillen equivalence.
    let ex44 = ex44();
    let scenario_fm = fcat_core::corpus::example_4_4_diagram(ex44.clone()).unwrap();
    let scenario_is =
        build_integral(&scenario_fm, BuildMode::Force, BOUND).unwrap();
    let pt_model = ModelCat::trivial_point("pt");
    let pt = pt_model.base().clone();
    let base = scenario_fm.base().clone();
    let pick_bottom = FinFunctor::constant(pt.clone(), base.clone(), ObjId(0));
    let collapse = FinFunctor::constant(base.clone(), pt.clone(), ObjId(0));
    let bc = fcat_core::adjunction::complete_adjunction("bottom⊣collapse", pick_bottom, collapse)
        .unwrap();
    let point_fm = ModCatFunctor::new(
        "const[pt]",
        AdjCatFunctor::constant("const", pt.clone(), point("pt")),
        pt_model,
        vec![ModelCat::trivial_point("pt")],
    )
    .unwrap();
    let point_is = build_integral(&point_fm, BuildMode::RequireProperRelative, BOUND).unwrap();
    // Θ_B: F(R B) = pt → scenario fiber over B: over the bottom this is the
    // identity on the point, over the top the pushforward inclusion.
    let up = base.morphism_by_name("0->1").unwrap();
    let family = BaseChangeFamily {
        kind: MorphismKind::Right,
        components: vec![
            Adjunction::identity(point("pt")),
            scenario_fm.underlying().on_arrow(up).clone(),
        ],
    };
    let cert = base_change(&point_fm, &point_is, &scenario_fm, &scenario_is, &bc, &family)
        .unwrap();
    assert!(cert.cert.is_quillen);
    // The weak fiber makes the scenario relative, so the induced adjunction
    // is an equivalence; the hypothesis flags agree.
    assert!(cert.family_quillen);
    assert!(cert.cert.certified_equivalence(), "{:?}", cert.cert.witness);
}

#[test]
fn right_morphism_detects_non_equivalence_fiber() {
    // Same setup with the trivial fiber: the family component over the top
    // is not a Quillen equivalence at the fibrant top object, and the
    // induced adjunction fails the derived-counit test.
    let trivial = enumerate_model_structures(&chain(2), BOUND)
        .into_iter()
        .find(|m| m.structure().describe_class(MorClass::Weq) == "ids")
        .unwrap();
    let scenario_fm = fcat_core::corpus::example_4_4_diagram(trivial).unwrap();
    let scenario_is = build_integral(&scenario_fm, BuildMode::Force, BOUND).unwrap();
    let pt_model = ModelCat::trivial_point("pt");
    let pt = pt_model.base().clone();
    let base = scenario_fm.base().clone();
    let pick_bottom = FinFunctor::constant(pt.clone(), base.clone(), ObjId(0));
    let collapse = FinFunctor::constant(base.clone(), pt.clone(), ObjId(0));
    let bc = fcat_core::adjunction::complete_adjunction("bottom⊣collapse", pick_bottom, collapse)
        .unwrap();
    let point_fm = ModCatFunctor::new(
        "const[pt]",
        AdjCatFunctor::constant("const", pt.clone(), point("pt")),
        pt_model,
        vec![ModelCat::trivial_point("pt")],
    )
    .unwrap();
    let point_is = build_integral(&point_fm, BuildMode::RequireProperRelative, BOUND).unwrap();
    let up = base.morphism_by_name("0->1").unwrap();
    let family = BaseChangeFamily {
        kind: MorphismKind::Right,
        components: vec![
            Adjunction::identity(point("pt")),
            scenario_fm.underlying().on_arrow(up).clone(),
        ],
    };
    let cert = base_change(&point_fm, &point_is, &scenario_fm, &scenario_is, &bc, &family)
        .unwrap();
    assert!(cert.cert.is_quillen);
    assert!(!cert.family_equivalence);
    assert!(!cert.cert.certified_equivalence());
    assert!(cert.cert.witness.is_some());
}
