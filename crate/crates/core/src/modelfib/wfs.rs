//! Weak factorization systems relative to a projection: retract closure
//! gated by the base, lifted factorizations, and lifted lifts.

use super::FibrationCandidate;
use crate::fincat::enumerate_retracts;
use crate::report::ValidationReport;

/// Which of the two factorization-system pairs to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WfsPair {
    /// `(Cof ∩ W, Fib)` upstairs relative to the same pair downstairs.
    TrivCofFib,
    /// `(Cof, Fib ∩ W)` relative to the same pair downstairs.
    CofTrivFib,
}

impl WfsPair {
    pub fn label(self) -> &'static str {
        match self {
            WfsPair::TrivCofFib => "(trivcof, fib)",
            WfsPair::CofTrivFib => "(cof, trivfib)",
        }
    }
}

/// Check the three conditions of a projection-relative weak factorization
/// system, all exhaustively:
/// 1. a retract of a left (right) morphism whose image lies in the
///    downstairs left (right) class is itself left (right);
/// 2. every downstairs factorization of the image of a morphism lifts to an
///    upstairs factorization over it;
/// 3. every downstairs lift of a (left, right) square lifts to an upstairs
///    lift over it.
pub fn check_pi_wfs(fc: &FibrationCandidate, pair: WfsPair) -> ValidationReport {
    let mut report = ValidationReport::new(format!("{} relative system of {}", pair.label(), fc.name));
    let n = fc.pi().source();
    let m = fc.pi().target();
    let pi = fc.pi();
    let l_up = fc.upstairs_left(pair);
    let r_up = fc.upstairs_right(pair);
    let l_down = fc.downstairs_left(pair);
    let r_down = fc.downstairs_right(pair);

    // (1) Relative retract closure.
    for f in n.morphisms() {
        let image_left = l_down.contains(&pi.apply_mor(f));
        let image_right = r_down.contains(&pi.apply_mor(f));
        if (l_up.contains(&f) || !image_left) && (r_up.contains(&f) || !image_right) {
            continue;
        }
        for p in enumerate_retracts(n, f) {
            if p.of == f {
                continue;
            }
            if l_up.contains(&p.of) && image_left && !l_up.contains(&f) {
                report.push(
                    "retract-closure-left",
                    format!(
                        "{} is a retract of {}",
                        n.morphism_name(f),
                        n.morphism_name(p.of)
                    ),
                );
            }
            if r_up.contains(&p.of) && image_right && !r_up.contains(&f) {
                report.push(
                    "retract-closure-right",
                    format!(
                        "{} is a retract of {}",
                        n.morphism_name(f),
                        n.morphism_name(p.of)
                    ),
                );
            }
        }
    }

    // (2) Lifted factorizations: for every φ upstairs and every downstairs
    // factorization πφ = g ∘ h with h left, g right, some φ = ψ ∘ η lies
    // over it with η left, ψ right.
    for phi in n.morphisms() {
        let image = pi.apply_mor(phi);
        for mid in m.objects() {
            for h in m.hom(m.source(image), mid) {
                if !l_down.contains(&h) {
                    continue;
                }
                for g in m.hom(mid, m.target(image)) {
                    if !r_down.contains(&g) || m.compose(g, h) != Some(image) {
                        continue;
                    }
                    let found = n.objects().any(|z| {
                        n.hom(n.source(phi), z).into_iter().any(|eta| {
                            l_up.contains(&eta)
                                && pi.apply_mor(eta) == h
                                && n.hom(z, n.target(phi)).into_iter().any(|psi| {
                                    r_up.contains(&psi)
                                        && pi.apply_mor(psi) == g
                                        && n.compose(psi, eta) == Some(phi)
                                })
                        })
                    });
                    if !found {
                        report.push(
                            "lifted-factorization",
                            format!(
                                "{} over {} = {} ∘ {}",
                                n.morphism_name(phi),
                                m.morphism_name(image),
                                m.morphism_name(g),
                                m.morphism_name(h)
                            ),
                        );
                    }
                }
            }
        }
    }

    // (3) Lifted lifts: squares with a left morphism on one side and a right
    // morphism on the other lift every downstairs diagonal.
    for psi in &l_up {
        for eta in &r_up {
            for top in n.hom(n.source(*psi), n.source(*eta)) {
                for bottom in n.hom(n.target(*psi), n.target(*eta)) {
                    if n.compose(*eta, top) != n.compose(bottom, *psi)
                        || n.compose(*eta, top).is_none()
                    {
                        continue;
                    }
                    for u in m.hom(pi.apply_obj(n.target(*psi)), pi.apply_obj(n.source(*eta))) {
                        if m.compose(u, pi.apply_mor(*psi)) != Some(pi.apply_mor(top))
                            || m.compose(pi.apply_mor(*eta), u) != Some(pi.apply_mor(bottom))
                        {
                            continue;
                        }
                        let lifted = n
                            .hom(n.target(*psi), n.source(*eta))
                            .into_iter()
                            .any(|gamma| {
                                pi.apply_mor(gamma) == u
                                    && n.compose(gamma, *psi) == Some(top)
                                    && n.compose(*eta, gamma) == Some(bottom)
                            });
                        if !lifted {
                            report.push(
                                "lifted-lift",
                                format!(
                                    "square ({}, {}) over diagonal {}",
                                    n.morphism_name(*psi),
                                    n.morphism_name(*eta),
                                    m.morphism_name(u)
                                ),
                            );
                        }
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{chain, FinFunctor};
    use crate::modelstruct::{enumerate_model_structures, DEFAULT_SHAPE_BOUND};

    #[test]
    fn identity_on_model_category_passes_both_pairs() {
        for mc in enumerate_model_structures(&chain(2), DEFAULT_SHAPE_BOUND) {
            let fc = FibrationCandidate::new(
                "id",
                FinFunctor::identity(mc.base().clone()),
                mc.structure().clone(),
                mc.structure().clone(),
            )
            .unwrap();
            assert!(fc.validate().passed());
            assert!(check_pi_wfs(&fc, WfsPair::TrivCofFib).passed());
            assert!(check_pi_wfs(&fc, WfsPair::CofTrivFib).passed());
        }
    }

    #[test]
    fn truncated_upstairs_classes_fail_factorization_lifting() {
        // Upstairs classes cut to identities over a base with a genuine
        // factorization: condition (2) must fail.
        use crate::modelstruct::PreModel;
        use std::collections::BTreeSet;
        let c2 = chain(2);
        let ids: BTreeSet<_> = c2.objects().map(|o| c2.identity(o)).collect();
        let all: BTreeSet<_> = c2.morphisms().collect();
        let upstairs = PreModel::new("upstairs", c2.clone(), ids.clone(), ids.clone(), ids);
        let downstairs = PreModel::new("downstairs", c2.clone(), all.clone(), all.clone(), all);
        let fc = FibrationCandidate::new(
            "trunc",
            FinFunctor::identity(c2.clone()),
            upstairs,
            downstairs,
        )
        .unwrap();
        let report = check_pi_wfs(&fc, WfsPair::TrivCofFib);
        assert!(report
            .violations
            .iter()
            .any(|v| v.rule == "lifted-factorization"));
    }
}
