//! Straightening a model fibration into a diagram of model categories, and
//! the comparison machinery for the correspondence roundtrips.

use super::fibration::check_model_fibration;
use super::FibrationCandidate;
use crate::fincat::{FinCat, MorId, ObjId};
use crate::grothendieck::{straighten_cat, GrothCat};
use crate::integral::{check_proper, check_relative, IntegralStructure, ModCatFunctor};
use crate::modelstruct::{
    search_functorial_factorization, ModelCat, MorClass, PreModel,
};
use crate::report::ValidationReport;
use crate::{Error, Result};

/// The straightened diagram plus the embeddings of the fibers back into the
/// total category.
#[derive(Debug, Clone)]
pub struct StraightenedModel {
    pub diagram: ModCatFunctor,
    pub fiber_obj_to_total: Vec<Vec<ObjId>>,
    pub fiber_mor_to_total: Vec<Vec<MorId>>,
}

/// Straighten a certified model fibration: the underlying biCartesian
/// fibration is straightened, each fiber inherits the restricted classes
/// (validated as a model category by searching its factorizations), and the
/// result is checked proper and relative.
pub fn straighten_modelfib(
    fc: &FibrationCandidate,
    shape_bound: usize,
) -> Result<StraightenedModel> {
    let cert = check_model_fibration(fc, shape_bound);
    if !cert.passed() {
        return Err(Error::Precondition(format!(
            "not a model fibration: {}",
            cert.first().expect("non-empty")
        )));
    }
    let s = straighten_cat(fc.pi(), format!("straightened {}", fc.name))?;
    let mut fiber_models = Vec::new();
    for a in fc.pi().target().objects() {
        let fiber_cat = s.functor.fiber(a).clone();
        let restrict = |class: MorClass| {
            s.fiber_mor_to_total[a.0]
                .iter()
                .enumerate()
                .filter(|&(_, total)| fc.upstairs().contains(class, *total))
                .map(|(local, _)| MorId(local))
                .collect::<std::collections::BTreeSet<_>>()
        };
        let pm = PreModel::new(
            format!("{}|{}", fc.name, fc.pi().target().object_name(a)),
            fiber_cat.clone(),
            restrict(MorClass::Weq),
            restrict(MorClass::Cof),
            restrict(MorClass::Fib),
        );
        let f1 = search_functorial_factorization(
            &fiber_cat,
            pm.class(MorClass::Cof),
            &pm.triv_fib(),
        )
        .ok_or_else(|| {
            Error::NoFactorization(format!(
                "restricted fiber over {}",
                fc.pi().target().object_name(a)
            ))
        })?;
        let f2 = search_functorial_factorization(
            &fiber_cat,
            &pm.triv_cof(),
            pm.class(MorClass::Fib),
        )
        .ok_or_else(|| {
            Error::NoFactorization(format!(
                "restricted fiber over {}",
                fc.pi().target().object_name(a)
            ))
        })?;
        fiber_models.push(ModelCat::new(pm.name.clone(), pm, f1, f2)?);
    }
    let diagram = ModCatFunctor::over_pre_model(
        format!("straightened {}", fc.name),
        s.functor,
        fc.downstairs().clone(),
        fiber_models,
    )?;
    let validation = diagram.validate();
    if !validation.passed() {
        return Err(Error::Precondition(format!(
            "straightened diagram is not Quillen on arrows: {}",
            validation.first().expect("non-empty")
        )));
    }
    let proper = check_proper(&diagram);
    if !proper.is_proper() {
        return Err(Error::Precondition(format!(
            "straightened diagram is not proper: {}",
            proper.left_witness.or(proper.right_witness).expect("witness")
        )));
    }
    let relative = check_relative(&diagram);
    if !relative.passed() {
        return Err(Error::Precondition(format!(
            "straightened diagram is not relative: {}",
            relative.first().expect("non-empty")
        )));
    }
    Ok(StraightenedModel {
        diagram,
        fiber_obj_to_total: s.fiber_obj_to_total,
        fiber_mor_to_total: s.fiber_mor_to_total,
    })
}

/// Straighten the projection of an integral structure, viewed as a
/// fibration candidate with the integral classes upstairs.
pub fn straighten_integral(
    fm: &ModCatFunctor,
    istruct: &IntegralStructure,
    shape_bound: usize,
) -> Result<StraightenedModel> {
    let fc = FibrationCandidate::new(
        format!("π[{}]", istruct.name),
        istruct.groth().projection().clone(),
        istruct.classes().clone(),
        fm.base_pre().clone(),
    )?;
    straighten_modelfib(&fc, shape_bound)
}

/// Compare a diagram with the straightening of its own integral projection
/// through the pair decomposition: after relabeling, fibers must agree on
/// the nose (structure, names, classes), and so must the adjunctions.
pub fn compare_diagram_with_straightening(
    fm: &ModCatFunctor,
    groth: &GrothCat,
    straightened: &StraightenedModel,
) -> ValidationReport {
    let mut report = ValidationReport::new(format!("straightening roundtrip of {}", fm.name));
    let base = fm.base();
    for a in base.objects() {
        let fiber = straightened.diagram.underlying().fiber(a);
        let original = fm.underlying().fiber(a);
        // Relabel fiber objects and morphisms through the pair structure.
        let relabeled: FinCat = fiber.relabel(
            original.name(),
            |o| {
                let t = straightened.fiber_obj_to_total[a.0][o.0];
                let (_, x) = groth.obj_pair(t);
                original.object_name(x).to_string()
            },
            |m| {
                let t = straightened.fiber_mor_to_total[a.0][m.0];
                let (_, phi) = groth.mor_pair(t);
                original.morphism_name(phi).to_string()
            },
        );
        if relabeled != **original {
            report.push(
                "fiber-mismatch",
                format!("fiber over {}", base.object_name(a)),
            );
            continue;
        }
        // Classes must restrict to the original fiber structure.
        let model = straightened.diagram.fiber_model(a);
        let original_model = fm.fiber_model(a);
        for m in fiber.morphisms() {
            let t = straightened.fiber_mor_to_total[a.0][m.0];
            let (_, phi) = groth.mor_pair(t);
            for (label, lhs, rhs) in [
                ("weq", model.is_weq(m), original_model.is_weq(phi)),
                ("cof", model.is_cof(m), original_model.is_cof(phi)),
                ("fib", model.is_fib(m), original_model.is_fib(phi)),
            ] {
                if lhs != rhs {
                    report.push(
                        format!("fiber-class-{label}"),
                        format!(
                            "{} over {}",
                            fiber.morphism_name(m),
                            base.object_name(a)
                        ),
                    );
                }
            }
        }
    }
    // Adjunctions agree after translating through the pair bijections.
    for f in base.morphisms() {
        let (a, b) = (base.source(f), base.target(f));
        let got = straightened.diagram.underlying().on_arrow(f);
        let want = fm.underlying().on_arrow(f);
        let translate_obj = |fiber_obj: ObjId, at: ObjId| -> ObjId {
            let t = straightened.fiber_obj_to_total[at.0][fiber_obj.0];
            groth.obj_pair(t).1
        };
        let left_agrees = fm.underlying().fiber(a).objects().all(|x| {
            let local = straightened.fiber_obj_to_total[a.0]
                .iter()
                .position(|&t| groth.obj_pair(t).1 == x && groth.obj_pair(t).0 == a)
                .map(ObjId);
            match local {
                Some(lx) => translate_obj(got.left().apply_obj(lx), b) == want.left().apply_obj(x),
                None => false,
            }
        });
        if !left_agrees {
            report.push(
                "pushforward-mismatch",
                base.morphism_name(f).to_string(),
            );
        }
        let right_agrees = fm.underlying().fiber(b).objects().all(|y| {
            let local = straightened.fiber_obj_to_total[b.0]
                .iter()
                .position(|&t| groth.obj_pair(t).1 == y && groth.obj_pair(t).0 == b)
                .map(ObjId);
            match local {
                Some(ly) => {
                    translate_obj(got.right().apply_obj(ly), a) == want.right().apply_obj(y)
                }
                None => false,
            }
        });
        if !right_agrees {
            report.push("pullback-mismatch", base.morphism_name(f).to_string());
        }
    }
    report
}

/// Compare the integral structure rebuilt from a straightening with the
/// original: the canonical pairing must be a class-preserving isomorphism
/// onto the original total, over the base.
pub fn compare_rebuilt_with_original(
    original: &IntegralStructure,
    s: &StraightenedModel,
    rebuilt: &IntegralStructure,
) -> ValidationReport {
    let mut report = ValidationReport::new(format!("rebuild roundtrip of {}", original.name));
    let rebuilt_total = rebuilt.total();
    let original_total = original.total();
    if rebuilt_total.object_count() != original_total.object_count()
        || rebuilt_total.morphism_count() != original_total.morphism_count()
    {
        report.push("size", "rebuilt total has different counts");
        return report;
    }
    let p = original.groth().projection();
    let base = p.target();
    // Objects: (A, local fiber object) back to the original total object.
    let object_map: Vec<ObjId> = rebuilt_total
        .objects()
        .map(|o| {
            let (a, local) = rebuilt.groth().obj_pair(o);
            s.fiber_obj_to_total[a.0][local.0]
        })
        .collect();
    // Morphisms: compose the chosen coCartesian transport with the fiber
    // part, exactly as the rebuilt composition was defined.
    let mut morphism_map: Vec<Option<MorId>> = Vec::with_capacity(rebuilt_total.morphism_count());
    for m in rebuilt_total.morphisms() {
        let (f, phi_local) = rebuilt.groth().mor_pair(m);
        let b = base.target(f);
        let src_original = object_map[rebuilt_total.source(m).0];
        let fiber_part = s.fiber_mor_to_total[b.0][phi_local.0];
        let lift = crate::grothendieck::cocartesian_lift(p, src_original, f);
        morphism_map.push(
            lift.and_then(|l| original_total.compose(fiber_part, l)),
        );
    }
    if morphism_map.iter().any(|m| m.is_none()) {
        report.push("morphism-translation", "a rebuilt morphism has no original counterpart");
        return report;
    }
    let morphism_map: Vec<MorId> = morphism_map.into_iter().map(|m| m.expect("checked")).collect();
    let functor = match crate::fincat::FinFunctor::new(
        "rebuild≅original",
        rebuilt_total.clone(),
        original_total.clone(),
        object_map,
        morphism_map.clone(),
    ) {
        Ok(f) => f,
        Err(e) => {
            report.push("comparison-functor", e.to_string());
            return report;
        }
    };
    report.merge(functor.validate());
    let mut seen = vec![false; original_total.morphism_count()];
    for &m in &morphism_map {
        seen[m.0] = true;
    }
    if seen.iter().any(|&b| !b) {
        report.push("bijection", "morphism translation is not onto");
    }
    for m in rebuilt_total.morphisms() {
        let image = functor.apply_mor(m);
        for (label, lhs, rhs) in [
            ("weq", rebuilt.is_weq(m), original.is_weq(image)),
            ("cof", rebuilt.is_cof(m), original.is_cof(image)),
            ("fib", rebuilt.is_fib(m), original.is_fib(image)),
        ] {
            if lhs != rhs {
                report.push(
                    format!("class-mismatch-{label}"),
                    format!(
                        "{}: rebuilt={lhs}, original={rhs}",
                        rebuilt_total.morphism_name(m)
                    ),
                );
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{chain, point};
    use crate::grothendieck::AdjCatFunctor;
    use crate::integral::{build_integral, BuildMode};
    use crate::modelstruct::{enumerate_model_structures, DEFAULT_SHAPE_BOUND};

    #[test]
    fn constant_diagram_roundtrips_on_the_nose() {
        let pt = point("pt");
        for fiber in enumerate_model_structures(&chain(2), DEFAULT_SHAPE_BOUND) {
            let fm = ModCatFunctor::new(
                format!("const[{}]", fiber.name),
                AdjCatFunctor::constant("const", pt.clone(), fiber.base().clone()),
                ModelCat::trivial_point("pt"),
                vec![fiber.clone()],
            )
            .unwrap();
            let istruct =
                build_integral(&fm, BuildMode::RequireProperRelative, DEFAULT_SHAPE_BOUND)
                    .unwrap();
            let s = straighten_integral(&fm, &istruct, DEFAULT_SHAPE_BOUND).unwrap();
            let report = compare_diagram_with_straightening(&fm, istruct.groth(), &s);
            assert!(report.passed(), "{report}");
        }
    }
}
