//! Relative model categories: bicompleteness of the projection, relative
//! two-out-of-three, and the two relative weak factorization systems.

use super::wfs::{check_pi_wfs, WfsPair};
use super::FibrationCandidate;
use crate::fincat::{all_functors, subcategory_shapes, FinFunctor, MorId};
use crate::grothendieck::{
    check_bicartesian, check_bicomplete_fibers, enumerate_relative_lifts, relative_colimit,
    relative_limit, RelativeDiagram,
};
use crate::report::ValidationReport;

/// Check that `π` exhibits the upstairs category as a model category
/// relative to the downstairs one. Bicompleteness of `π` is certified via
/// fiberwise bicompleteness plus relative-lift spot checks when `π` is
/// biCartesian, and by bounded-shape search otherwise; the shape bound is
/// recorded in the report subject.
pub fn check_relative_model(fc: &FibrationCandidate, shape_bound: usize) -> ValidationReport {
    let mut report = ValidationReport::new(format!(
        "relative model category {} (shape bound {shape_bound})",
        fc.name
    ));
    report.merge(fc.validate());
    if !report.passed() {
        return report;
    }
    let n = fc.pi().source();

    // (1) Bicompleteness of the projection.
    let bicartesian = check_bicartesian(fc.pi()).passed();
    if bicartesian {
        report.merge(check_bicomplete_fibers(fc.pi(), shape_bound));
        // Spot-check relative (co)limits on the small shapes.
        relative_lift_check(fc.pi(), shape_bound.min(2), &mut report);
    } else {
        relative_lift_check(fc.pi(), shape_bound, &mut report);
    }

    // (2) Relative two-out-of-three.
    for g in n.morphisms() {
        for f in n.morphisms() {
            let Some(gf) = n.compose(g, f) else { continue };
            let members = [
                fc.upstairs().is_weq(f),
                fc.upstairs().is_weq(g),
                fc.upstairs().is_weq(gf),
            ];
            if members.iter().filter(|&&b| b).count() != 2 {
                continue;
            }
            let third = if !members[0] {
                f
            } else if !members[1] {
                g
            } else {
                gf
            };
            if fc.downstairs().is_weq(fc.pi().apply_mor(third))
                && !fc.upstairs().is_weq(third)
            {
                report.push(
                    "relative-two-out-of-three",
                    format!(
                        "f={}, g={}, third={} lies over a weak equivalence",
                        n.morphism_name(f),
                        n.morphism_name(g),
                        n.morphism_name(third)
                    ),
                );
            }
        }
    }
    // (3) The two relative weak factorization systems.
    report.merge(check_pi_wfs(fc, WfsPair::TrivCofFib));
    report.merge(check_pi_wfs(fc, WfsPair::CofTrivFib));
    report
}

/// Every relative (co)limit problem with a shape of at most `bound` objects
/// must admit a certified universal lift.
fn relative_lift_check(pi: &FinFunctor, bound: usize, report: &mut ValidationReport) {
    let n = pi.source();
    let m = pi.target();
    for shape in subcategory_shapes(n, bound) {
        for delta in all_functors(&shape, n) {
            // Enumerate base cone extensions of π ∘ δ, on both sides.
            for colimit_side in [true, false] {
                for apex in m.objects() {
                    let mut legs: Vec<Vec<MorId>> = Vec::new();
                    for i in shape.objects() {
                        let di = pi.apply_obj(delta.apply_obj(i));
                        let hom = if colimit_side {
                            m.hom(di, apex)
                        } else {
                            m.hom(apex, di)
                        };
                        legs.push(hom);
                    }
                    enumerate_leg_choices(&legs, &mut |choice| {
                        let diagram = RelativeDiagram {
                            delta: delta.clone(),
                            base_apex: apex,
                            base_legs: choice.to_vec(),
                        };
                        let outcome = if colimit_side {
                            relative_colimit(pi, &diagram)
                        } else {
                            relative_limit(pi, &diagram)
                        };
                        match outcome {
                            Ok(Some(_)) => {}
                            Ok(None) => {
                                // Only report when at least one lift exists but
                                // none is universal, or when no lift exists at
                                // all: both are bicompleteness failures.
                                let side = if colimit_side { "colimit" } else { "limit" };
                                report.push(
                                    format!("missing-relative-{side}"),
                                    format!(
                                        "shape with {} objects over apex {} ({} candidate lifts)",
                                        shape.object_count(),
                                        m.object_name(apex),
                                        enumerate_relative_lifts(pi, &diagram, colimit_side).len()
                                    ),
                                );
                            }
                            Err(_) => {}
                        }
                    });
                }
            }
        }
    }
}

fn enumerate_leg_choices(options: &[Vec<MorId>], emit: &mut impl FnMut(&[MorId])) {
    fn go(options: &[Vec<MorId>], chosen: &mut Vec<MorId>, emit: &mut impl FnMut(&[MorId])) {
        if chosen.len() == options.len() {
            emit(chosen);
            return;
        }
        for &o in &options[chosen.len()] {
            chosen.push(o);
            go(options, chosen, emit);
            chosen.pop();
        }
    }
    go(options, &mut Vec::new(), emit);
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{chain, point, FinFunctor, ObjId};
    use crate::modelstruct::{enumerate_model_structures, DEFAULT_SHAPE_BOUND};

    #[test]
    fn model_category_over_point_is_relative_model() {
        let pt = point("pt");
        for mc in enumerate_model_structures(&chain(2), DEFAULT_SHAPE_BOUND) {
            let pi = FinFunctor::constant(mc.base().clone(), pt.clone(), ObjId(0));
            let downstairs = crate::modelstruct::PreModel::discrete_all("pt", pt.clone());
            let fc = FibrationCandidate::new(
                format!("{}→pt", mc.name),
                pi,
                mc.structure().clone(),
                downstairs,
            )
            .unwrap();
            let report = check_relative_model(&fc, DEFAULT_SHAPE_BOUND);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn non_model_structure_over_point_fails() {
        // All classes everything on the 2-chain: the (trivcof, fib) system
        // has no lift for the self-square, so condition (3) fails.
        let pt = point("pt");
        let c2 = chain(2);
        let pi = FinFunctor::constant(c2.clone(), pt.clone(), ObjId(0));
        let upstairs = crate::modelstruct::PreModel::discrete_all("bad", c2.clone());
        let downstairs = crate::modelstruct::PreModel::discrete_all("pt", pt.clone());
        let fc = FibrationCandidate::new("bad→pt", pi, upstairs, downstairs).unwrap();
        let report = check_relative_model(&fc, DEFAULT_SHAPE_BOUND);
        assert!(!report.passed());
        assert!(report.violations.iter().any(|v| v.rule == "lifted-lift"));
    }
}
