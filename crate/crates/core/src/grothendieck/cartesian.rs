//! (co)Cartesian morphism classification and biCartesian fibration checks,
//! straight from the unique-factorization definitions.

use crate::fincat::{FinFunctor, MorId, ObjId};
use crate::report::ValidationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CartesianFlags {
    pub cocartesian: bool,
    pub cartesian: bool,
}

/// Decide both flags for one morphism of the source of `p` by exhausting all
/// factorization problems.
pub fn classify_cartesian(p: &FinFunctor, phi: MorId) -> CartesianFlags {
    CartesianFlags {
        cocartesian: is_cocartesian(p, phi),
        cartesian: is_cartesian(p, phi),
    }
}

pub(crate) fn is_cocartesian(p: &FinFunctor, phi: MorId) -> bool {
    let d = p.source();
    let c = p.target();
    let (x, y) = (d.source(phi), d.target(phi));
    for v in d.objects() {
        for psi in d.hom(x, v) {
            for g in c.hom(p.apply_obj(y), p.apply_obj(v)) {
                if c.compose(g, p.apply_mor(phi)) != Some(p.apply_mor(psi)) {
                    continue;
                }
                let count = d
                    .hom(y, v)
                    .into_iter()
                    .filter(|&gamma| {
                        d.compose(gamma, phi) == Some(psi) && p.apply_mor(gamma) == g
                    })
                    .count();
                if count != 1 {
                    return false;
                }
            }
        }
    }
    true
}

pub(crate) fn is_cartesian(p: &FinFunctor, phi: MorId) -> bool {
    let d = p.source();
    let c = p.target();
    let (x, y) = (d.source(phi), d.target(phi));
    for u in d.objects() {
        for psi in d.hom(u, y) {
            for g in c.hom(p.apply_obj(u), p.apply_obj(x)) {
                if c.compose(p.apply_mor(phi), g) != Some(p.apply_mor(psi)) {
                    continue;
                }
                let count = d
                    .hom(u, x)
                    .into_iter()
                    .filter(|&gamma| {
                        d.compose(phi, gamma) == Some(psi) && p.apply_mor(gamma) == g
                    })
                    .count();
                if count != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// First coCartesian morphism out of `x` lying over `f`, in canonical order.
pub fn cocartesian_lift(p: &FinFunctor, x: ObjId, f: MorId) -> Option<MorId> {
    let d = p.source();
    d.morphisms().find(|&phi| {
        d.source(phi) == x && p.apply_mor(phi) == f && is_cocartesian(p, phi)
    })
}

/// First Cartesian morphism into `y` lying over `f`.
pub fn cartesian_lift(p: &FinFunctor, y: ObjId, f: MorId) -> Option<MorId> {
    let d = p.source();
    d.morphisms().find(|&phi| {
        d.target(phi) == y && p.apply_mor(phi) == f && is_cartesian(p, phi)
    })
}

/// Check that `p` is a biCartesian fibration: every arrow out of the image
/// of an object has a coCartesian lift, every arrow into the image has a
/// Cartesian lift. Witnesses name the missing lifts.
pub fn check_bicartesian(p: &FinFunctor) -> ValidationReport {
    let mut report = ValidationReport::new(format!("biCartesian fibration {}", p.name));
    let d = p.source();
    let c = p.target();
    for x in d.objects() {
        for f in c.morphisms() {
            if c.source(f) == p.apply_obj(x) && cocartesian_lift(p, x, f).is_none() {
                report.push(
                    "missing-cocartesian-lift",
                    format!(
                        "no lift of {} starting at {}",
                        c.morphism_name(f),
                        d.object_name(x)
                    ),
                );
            }
            if c.target(f) == p.apply_obj(x) && cartesian_lift(p, x, f).is_none() {
                report.push(
                    "missing-cartesian-lift",
                    format!(
                        "no lift of {} ending at {}",
                        c.morphism_name(f),
                        d.object_name(x)
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
    use crate::fincat::{chain, FinFunctor, ObjId};

    #[test]
    fn identities_are_both() {
        let c2 = chain(2);
        let p = FinFunctor::identity(c2.clone());
        for m in c2.morphisms() {
            let flags = classify_cartesian(&p, m);
            assert!(flags.cocartesian && flags.cartesian);
        }
    }

    #[test]
    fn identity_functor_is_bicartesian() {
        let c3 = chain(3);
        assert!(check_bicartesian(&FinFunctor::identity(c3)).passed());
    }

    #[test]
    fn fiber_morphism_into_pushforward_is_not_cocartesian() {
        // In the total 3-chain over the 2-chain (point fiber below, 2-chain
        // above), the fiber morphism (1,0) → (1,1) over the identity fails
        // the uniqueness test: nothing factors the identity of (1,0)
        // through it.
        let c2 = chain(2);
        let pt = crate::fincat::point("pt");
        let left = FinFunctor::constant(pt.clone(), c2.clone(), ObjId(0));
        let right = FinFunctor::constant(c2.clone(), pt.clone(), ObjId(0));
        let adj = crate::adjunction::complete_adjunction("incl", left, right).unwrap();
        let f = crate::grothendieck::AdjCatFunctor::strict(
            "pointed",
            c2.clone(),
            vec![pt.clone(), c2.clone()],
            vec![
                crate::adjunction::Adjunction::identity(pt),
                crate::adjunction::Adjunction::identity(c2.clone()),
                adj,
            ],
        )
        .unwrap();
        let g = crate::grothendieck::integrate_cat(&f).unwrap();
        let one = c2.object_by_name("1").unwrap();
        let src = g.pair_obj(one, c2.object_by_name("0").unwrap()).unwrap();
        let tgt = g.pair_obj(one, one).unwrap();
        let m = g.total().hom(src, tgt)[0];
        let flags = classify_cartesian(g.projection(), m);
        assert!(!flags.cocartesian);
    }

    #[test]
    fn non_full_inclusion_fails() {
        // {0} ↪ chain2 has no lift of 0→1.
        let c2 = chain(2);
        let pt = crate::fincat::point("pt");
        let incl = FinFunctor::constant(pt, c2, ObjId(0));
        let report = check_bicartesian(&incl);
        assert!(!report.passed());
        assert!(report
            .violations
            .iter()
            .any(|v| v.rule == "missing-cocartesian-lift"));
    }
}
