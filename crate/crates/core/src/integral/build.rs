//! Building the integral structure: classify every total morphism and
//! construct the two functorial factorizations by factoring in the base,
//! transposing into the middle fiber, factoring there, and transposing back.

use super::{classify_integral, check_proper, check_relative, IntegralStructure, ModCatFunctor};
use crate::fincat::{MorId, ObjId};
use crate::grothendieck::{integrate_cat, GrothCat};
use crate::modelstruct::{
    arrow_squares, check_model_axioms, FunctorialFactorization, ModelCat, PreModel,
};
use crate::{Error, Result};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildMode {
    /// Demand properness and relativeness up front and assert the model
    /// axioms on the result.
    RequireProperRelative,
    /// Build the classes and factorizations regardless; verification is the
    /// caller's business.
    Force,
}

enum FactKind {
    CofThenTrivFib,
    TrivCofThenFib,
}

/// Endow the Grothendieck construction of `fm` with the integral classes.
/// Over a model base both functorial factorizations are built
/// constructively; the result then carries an assembled `ModelCat`.
pub fn build_integral(fm: &ModCatFunctor, mode: BuildMode, shape_bound: usize) -> Result<IntegralStructure> {
    let validation = fm.validate();
    if !validation.passed() {
        return Err(Error::Precondition(format!(
            "diagram invalid: {}",
            validation.first().expect("non-empty")
        )));
    }
    if mode == BuildMode::RequireProperRelative {
        let proper = check_proper(fm);
        if !proper.is_proper() {
            let w = proper
                .left_witness
                .or(proper.right_witness)
                .expect("not proper");
            return Err(Error::Precondition(format!("diagram is not proper: {w}")));
        }
        let relative = check_relative(fm);
        if !relative.passed() {
            return Err(Error::Precondition(format!(
                "diagram is not relative: {}",
                relative.first().expect("non-empty")
            )));
        }
    }
    let groth = integrate_cat(fm.underlying())?;
    let total = groth.total().clone();
    let mut weq = BTreeSet::new();
    let mut cof = BTreeSet::new();
    let mut fib = BTreeSet::new();
    for m in total.morphisms() {
        let flags = classify_integral(fm, &groth, m);
        if flags.weq {
            weq.insert(m);
        }
        if flags.cof {
            cof.insert(m);
        }
        if flags.fib {
            fib.insert(m);
        }
    }
    let name = format!("∫{}", fm.name);
    let classes = PreModel::new(name.clone(), total.clone(), weq, cof, fib);
    let (f1, f2, model) = if fm.base_model().is_some() {
        let f1 = constructive_factorization(fm, &groth, FactKind::CofThenTrivFib)?;
        let f2 = constructive_factorization(fm, &groth, FactKind::TrivCofThenFib)?;
        let model = ModelCat::new(name.clone(), classes.clone(), f1.clone(), f2.clone())?;
        (Some(f1), Some(f2), Some(model))
    } else {
        (None, None, None)
    };
    let istruct = IntegralStructure::from_parts(name, groth, classes, f1, f2, model);
    if mode == BuildMode::RequireProperRelative {
        let axioms = check_model_axioms(
            istruct.classes(),
            istruct.fact_cof_trivfib(),
            istruct.fact_trivcof_fib(),
            shape_bound,
        );
        if !axioms.passed() {
            return Err(Error::Precondition(format!(
                "integral structure fails the model axioms: {}",
                axioms.summary()
            )));
        }
    }
    Ok(istruct)
}

/// One functorial factorization on the total category. For each `(f, φ)`:
/// factor `f = f'' ∘ f'` in the base, transpose `φ` to
/// `ψ: f'_!X → (f'')^*Y` in the middle fiber, factor `ψ = ψ'' ∘ ψ'` there,
/// and transpose `ψ''` back. The middle maps are completed by the canonical
/// search (forced on skeletal posets).
fn constructive_factorization(
    fm: &ModCatFunctor,
    groth: &GrothCat,
    kind: FactKind,
) -> Result<FunctorialFactorization> {
    let base_model = fm.base_model().expect("model base");
    let total = groth.total();
    let base = fm.base();
    let mut middles: Vec<ObjId> = Vec::with_capacity(total.morphism_count());
    let mut firsts: Vec<MorId> = Vec::with_capacity(total.morphism_count());
    let mut seconds: Vec<MorId> = Vec::with_capacity(total.morphism_count());
    for m in total.morphisms() {
        let (f, phi) = groth.mor_pair(m);
        let src_total = total.source(m);
        let (a, x) = groth.obj_pair(src_total);
        let (_b, y) = groth.obj_pair(total.target(m));
        let base_fact = match kind {
            FactKind::CofThenTrivFib => base_model.fact_cof_trivfib(),
            FactKind::TrivCofThenFib => base_model.fact_trivcof_fib(),
        };
        let f_first = base_fact.first(f);
        let f_second = base_fact.second(f);
        let c_mid = base_fact.middle(f);
        debug_assert_eq!(base.source(f_first), a);
        // χ: f''_!(f'_!X) → Y, the composite of φ with the inverse coherence
        // cell (gf)_!X ≅ g_!f_!X.
        let alpha = fm
            .underlying()
            .comp_iso(f_second, f_first)
            .ok_or_else(|| Error::Coherence("missing composition cell".into()))?
            .component(x);
        let fiber_b = fm.fiber_model(base.target(f)).base().clone();
        let alpha_inv = fiber_b
            .inverse(alpha)
            .ok_or_else(|| Error::Coherence("composition cell not invertible".into()))?;
        let chi = fiber_b
            .compose(phi, alpha_inv)
            .ok_or_else(|| Error::Coherence("coherence twist does not compose".into()))?;
        // ψ: f'_!X → (f'')^*Y in the middle fiber.
        let adj_second = fm.underlying().on_arrow(f_second);
        let pushed_x = fm.underlying().push_obj(f_first, x);
        let psi = adj_second.transpose_to_right_at(pushed_x, chi)?;
        // Factor ψ in the middle fiber.
        let fiber_mid = fm.fiber_model(c_mid);
        let mid_fact = match kind {
            FactKind::CofThenTrivFib => fiber_mid.fact_cof_trivfib(),
            FactKind::TrivCofThenFib => fiber_mid.fact_trivcof_fib(),
        };
        let psi_first = mid_fact.first(psi);
        let psi_second = mid_fact.second(psi);
        let z = mid_fact.middle(psi);
        // φ'': f''_!Z → Y.
        let phi_second = adj_second.transpose_to_left_at(y, psi_second)?;
        let mid_total = groth
            .pair_obj(c_mid, z)
            .ok_or_else(|| Error::Coherence("middle pair missing in total".into()))?;
        let first_total = groth
            .pair_mor(src_total, f_first, psi_first)
            .ok_or_else(|| Error::Coherence("first leg missing in total".into()))?;
        let second_total = groth
            .pair_mor(mid_total, f_second, phi_second)
            .ok_or_else(|| Error::Coherence("second leg missing in total".into()))?;
        debug_assert_eq!(total.compose(second_total, first_total), Some(m));
        middles.push(mid_total);
        firsts.push(first_total);
        seconds.push(second_total);
    }
    let squares = arrow_squares(total);
    crate::modelstruct::factorization::complete_middle_maps(
        total, &squares, &middles, &firsts, &seconds,
    )
    .ok_or_else(|| Error::NoFactorization(format!("middle maps on {}", total.name())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::example_4_4_diagram;
    use crate::fincat::chain;
    use crate::modelstruct::{enumerate_model_structures, MorClass, DEFAULT_SHAPE_BOUND};

    #[test]
    fn forced_build_of_nonrelative_example_passes_axioms() {
        // The two-object example with a trivial fiber is not relative but
        // still carries the integral model structure.
        let c2 = chain(2);
        let structures = enumerate_model_structures(&c2, DEFAULT_SHAPE_BOUND);
        let trivial = structures
            .iter()
            .find(|m| m.structure().describe_class(MorClass::Weq) == "ids")
            .unwrap()
            .clone();
        let fm = example_4_4_diagram(trivial).unwrap();
        assert!(!super::super::check_relative(&fm).passed());
        assert!(super::super::check_proper(&fm).is_proper());
        let istruct = build_integral(&fm, BuildMode::Force, DEFAULT_SHAPE_BOUND).unwrap();
        let axioms = check_model_axioms(
            istruct.classes(),
            istruct.fact_cof_trivfib(),
            istruct.fact_trivcof_fib(),
            DEFAULT_SHAPE_BOUND,
        );
        assert!(axioms.passed(), "{}", axioms.summary());
        // Weak equivalences: identities and the bottom edge only.
        let total = istruct.total();
        let weq_names: Vec<&str> = total
            .morphisms()
            .filter(|&m| istruct.is_weq(m) && !total.is_identity(m))
            .map(|m| total.morphism_name(m))
            .collect();
        assert_eq!(weq_names.len(), 1);
    }

    #[test]
    fn constant_diagram_over_point_reproduces_fiber() {
        let pt_cat = crate::fincat::point("pt");
        let structures = enumerate_model_structures(&chain(2), DEFAULT_SHAPE_BOUND);
        for fiber in &structures {
            let underlying = crate::grothendieck::AdjCatFunctor::constant(
                format!("const[{}]", fiber.name),
                pt_cat.clone(),
                fiber.base().clone(),
            );
            let base_model = ModelCat::trivial_point("pt");
            let fm = ModCatFunctor::new(
                format!("const[{}]", fiber.name),
                underlying,
                base_model,
                vec![fiber.clone()],
            )
            .unwrap();
            let istruct =
                build_integral(&fm, BuildMode::RequireProperRelative, DEFAULT_SHAPE_BOUND)
                    .unwrap();
            // Classes transport along the pair relabeling.
            let total = istruct.total();
            assert_eq!(total.morphism_count(), fiber.base().morphism_count());
            for m in total.morphisms() {
                let (_, phi) = istruct.groth().mor_pair(m);
                assert_eq!(istruct.is_weq(m), fiber.is_weq(phi));
                assert_eq!(istruct.is_cof(m), fiber.is_cof(phi));
                assert_eq!(istruct.is_fib(m), fiber.is_fib(phi));
            }
        }
    }
}
