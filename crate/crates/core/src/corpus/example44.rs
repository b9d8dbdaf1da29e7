//! The two-object counterexample scenario: a base with every morphism a
//! trivial cofibration and only identity fibrations, a point fiber at the
//! bottom and an arbitrary fiber on top. The integral structure always
//! passes the axioms when the bottom fiber is trivial, the restriction to
//! the top is always a Quillen equivalence, and the inclusion of the bottom
//! is one exactly when the diagram is relative.

use crate::adjunction::{complete_adjunction, Adjunction};
use crate::fincat::{chain, point, FinFunctor};
use crate::grothendieck::AdjCatFunctor;
use crate::integral::{
    base_change, build_integral, check_relative, BaseChangeCert, BaseChangeFamily, BuildMode,
    IntegralStructure, ModCatFunctor, MorphismKind,
};
use crate::modelstruct::{
    check_model_axioms, AxiomReport, FunctorialFactorization, ModelCat, PreModel,
};
use crate::{Error, Result};
use std::collections::BTreeSet;

/// The 2-chain with every morphism a weak equivalence and a cofibration and
/// only the identities fibrations.
pub fn ex44_base() -> ModelCat {
    let c2 = chain(2);
    let all: BTreeSet<_> = c2.morphisms().collect();
    let ids: BTreeSet<_> = c2.objects().map(|o| c2.identity(o)).collect();
    let pm = PreModel::new(
        "I1{w:all,c:all,f:ids}",
        c2.clone(),
        all.clone(),
        all,
        ids,
    );
    let fact = FunctorialFactorization::identity_second(&c2);
    ModelCat::new(pm.name.clone(), pm, fact.clone(), fact).expect("2-chain has extremes")
}

/// The diagram over [`ex44_base`] with the trivial point below and `fiber`
/// on top; the unique non-identity arrow pushes forward to the initial
/// object of the fiber.
pub fn example_4_4_diagram(fiber: ModelCat) -> Result<ModCatFunctor> {
    let base_model = ex44_base();
    let base = base_model.base().clone();
    let pt_model = ModelCat::trivial_point("pt");
    let pt = pt_model.base().clone();
    let fiber_cat = fiber.base().clone();
    let initial = fiber_cat
        .initial_object()
        .ok_or_else(|| Error::NoInitial(fiber_cat.name().into()))?;
    let left = FinFunctor::constant(pt.clone(), fiber_cat.clone(), initial);
    let right = FinFunctor::constant(fiber_cat.clone(), pt.clone(), crate::fincat::ObjId(0));
    let adj = complete_adjunction("incl", left, right).ok_or_else(|| {
        Error::AdjunctionMismatch("initial-object inclusion into the fiber".into())
    })?;
    let on_arrow = vec![
        Adjunction::identity(pt.clone()),
        Adjunction::identity(fiber_cat.clone()),
        adj,
    ];
    let underlying = AdjCatFunctor::strict(
        format!("pointed[{}]", fiber.name),
        base,
        vec![pt, fiber_cat],
        on_arrow,
    )?;
    ModCatFunctor::new(
        format!("pointed[{}]", fiber.name),
        underlying,
        base_model,
        vec![pt_model, fiber],
    )
}

/// Everything the scenario verifies.
#[derive(Debug)]
pub struct Example44Report {
    pub diagram: ModCatFunctor,
    pub integral: IntegralStructure,
    pub axioms: AxiomReport,
    pub is_relative: bool,
    /// Restriction to the top object: always a Quillen equivalence here.
    pub top_restriction: BaseChangeCert,
    /// Inclusion of the bottom object: a Quillen equivalence iff relative.
    pub bottom_inclusion: BaseChangeCert,
}

/// Run the scenario for a given top fiber.
pub fn example_4_4(fiber: ModelCat, shape_bound: usize) -> Result<Example44Report> {
    let fm = example_4_4_diagram(fiber.clone())?;
    let istruct = build_integral(&fm, BuildMode::Force, shape_bound)?;
    let axioms = check_model_axioms(
        istruct.classes(),
        istruct.fact_cof_trivfib(),
        istruct.fact_trivcof_fib(),
        shape_bound,
    );
    let is_relative = check_relative(&fm).passed();
    let base = fm.base().clone();

    // Restriction to the top: base change along the terminal adjunction
    // M ⇄ pt (left functor collapses to the point, right adjoint picks the
    // top object). The family pushes each fiber into the top fiber.
    let pt_model = ModelCat::trivial_point("pt");
    let pt = pt_model.base().clone();
    let collapse = FinFunctor::constant(base.clone(), pt.clone(), crate::fincat::ObjId(0));
    let pick_top = FinFunctor::constant(pt.clone(), base.clone(), crate::fincat::ObjId(1));
    let bc_top = complete_adjunction("collapse⊣top", collapse, pick_top)
        .ok_or_else(|| Error::AdjunctionMismatch("terminal base adjunction".into()))?;
    let top_const = ModCatFunctor::new(
        format!("const[{}]", fm.fiber_model(crate::fincat::ObjId(1)).name),
        AdjCatFunctor::constant(
            "top-fiber",
            pt.clone(),
            fm.underlying().fiber(crate::fincat::ObjId(1)).clone(),
        ),
        pt_model.clone(),
        vec![fm.fiber_model(crate::fincat::ObjId(1)).clone()],
    )?;
    let top_integral = build_integral(&top_const, BuildMode::RequireProperRelative, shape_bound)?;
    // Family over A ∈ base: F(A) → (top fiber); at the bottom this is the
    // pushforward of the unique arrow, at the top the identity.
    let up = base.morphism_by_name("0->1").expect("2-chain arrow");
    let family_top = BaseChangeFamily {
        kind: MorphismKind::Left,
        components: vec![
            fm.underlying().on_arrow(up).clone(),
            Adjunction::identity(fm.underlying().fiber(crate::fincat::ObjId(1)).clone()),
        ],
    };
    let top_restriction = base_change(
        &fm,
        &istruct,
        &top_const,
        &top_integral,
        &bc_top,
        &family_top,
    )?;

    // Inclusion of the bottom: base change along pt ⇄ M picking the initial
    // object, with the identity family on the point fiber.
    let pick_bottom = FinFunctor::constant(pt.clone(), base.clone(), crate::fincat::ObjId(0));
    let collapse2 = FinFunctor::constant(base.clone(), pt.clone(), crate::fincat::ObjId(0));
    let bc_bottom = complete_adjunction("bottom⊣collapse", pick_bottom, collapse2)
        .ok_or_else(|| Error::AdjunctionMismatch("initial base adjunction".into()))?;
    let bottom_const = ModCatFunctor::new(
        "const[pt]".to_string(),
        AdjCatFunctor::constant("bottom-fiber", pt.clone(), point("pt")),
        pt_model,
        vec![ModelCat::trivial_point("pt")],
    )?;
    let bottom_integral =
        build_integral(&bottom_const, BuildMode::RequireProperRelative, shape_bound)?;
    let family_bottom = BaseChangeFamily {
        kind: MorphismKind::Left,
        components: vec![Adjunction::identity(point("pt"))],
    };
    let bottom_inclusion = base_change(
        &bottom_const,
        &bottom_integral,
        &fm,
        &istruct,
        &bc_bottom,
        &family_bottom,
    )?;

    Ok(Example44Report {
        diagram: fm,
        integral: istruct,
        axioms,
        is_relative,
        top_restriction,
        bottom_inclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjunction::compose_adjunctions;
    use crate::modelstruct::{enumerate_model_structures, MorClass, DEFAULT_SHAPE_BOUND};

    #[test]
    fn composite_of_scenario_adjunctions_is_the_arrow_adjunction() {
        // Including the bottom and then restricting to the top composes to
        // the pushforward adjunction of the unique base arrow, modulo the
        // pair wrapping of the one-object totals.
        let trivial = enumerate_model_structures(&chain(2), DEFAULT_SHAPE_BOUND)
            .into_iter()
            .find(|m| m.structure().describe_class(MorClass::Weq) == "ids")
            .unwrap();
        let scenario = example_4_4(trivial, DEFAULT_SHAPE_BOUND).unwrap();
        let composite = compose_adjunctions(
            &scenario.bottom_inclusion.adjunction,
            &scenario.top_restriction.adjunction,
        )
        .unwrap();
        assert!(composite.validate().passed());
        let up = scenario
            .diagram
            .base()
            .morphism_by_name("0->1")
            .expect("2-chain arrow");
        let arrow_adj = scenario.diagram.underlying().on_arrow(up);
        // Both totals are one-object wrappings of the fibers, so the object
        // maps can be compared index for index.
        assert_eq!(
            composite.left().object_map(),
            arrow_adj.left().object_map()
        );
        assert_eq!(
            composite.left().morphism_map(),
            arrow_adj.left().morphism_map()
        );
        assert_eq!(
            composite.right().object_map(),
            arrow_adj.right().object_map()
        );
    }
}
