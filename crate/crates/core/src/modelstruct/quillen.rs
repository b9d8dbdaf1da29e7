//! Quillen adjunctions and Quillen equivalences between model categories.

use super::{ModelCat, ReplacementKind};
use crate::adjunction::Adjunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuillenMode {
    Adjunction,
    Equivalence,
}

/// The verdict of [`check_quillen`]: whether the adjunction is Quillen, and
/// (in equivalence mode) whether the derived unit/counit conditions hold.
#[derive(Debug, Clone)]
pub struct QuillenAdjunctionCert {
    pub adjunction_name: String,
    pub is_quillen: bool,
    /// `None` unless equivalence mode ran on a Quillen adjunction.
    pub is_equivalence: Option<bool>,
    pub witness: Option<String>,
}

impl QuillenAdjunctionCert {
    pub fn certified_equivalence(&self) -> bool {
        self.is_quillen && self.is_equivalence == Some(true)
    }
}

/// The left functor of a pre-model adjunction must preserve cofibrations and
/// trivial cofibrations.
pub fn preserves_cof_trivcof(
    f: &crate::fincat::FinFunctor,
    src: &super::PreModel,
    tgt: &super::PreModel,
) -> Result<(), String> {
    let c = src.base();
    for m in c.morphisms() {
        let fm = f.apply_mor(m);
        if src.is_cof(m) && !tgt.is_cof(fm) {
            return Err(format!(
                "cofibration {} is not preserved",
                c.morphism_name(m)
            ));
        }
        if src.is_triv_cof(m) && !tgt.is_triv_cof(fm) {
            return Err(format!(
                "trivial cofibration {} is not preserved",
                c.morphism_name(m)
            ));
        }
    }
    Ok(())
}

/// Dual preservation of fibrations and trivial fibrations.
pub fn preserves_fib_trivfib(
    f: &crate::fincat::FinFunctor,
    src: &super::PreModel,
    tgt: &super::PreModel,
) -> Result<(), String> {
    let c = src.base();
    for m in c.morphisms() {
        let fm = f.apply_mor(m);
        if src.is_fib(m) && !tgt.is_fib(fm) {
            return Err(format!("fibration {} is not preserved", c.morphism_name(m)));
        }
        if src.is_triv_fib(m) && !tgt.is_triv_fib(fm) {
            return Err(format!(
                "trivial fibration {} is not preserved",
                c.morphism_name(m)
            ));
        }
    }
    Ok(())
}

/// Left criterion: the left functor preserves cofibrations and trivial
/// cofibrations.
pub fn quillen_left_criterion(
    adj: &Adjunction,
    src: &super::PreModel,
    tgt: &super::PreModel,
) -> Result<(), String> {
    preserves_cof_trivcof(adj.left(), src, tgt)
        .map_err(|e| format!("left functor: {e}"))
}

/// Right criterion: the right functor preserves fibrations and trivial
/// fibrations. Equivalent to the left criterion on genuine model categories;
/// the corpus suite asserts the agreement.
pub fn quillen_right_criterion(
    adj: &Adjunction,
    src: &super::PreModel,
    tgt: &super::PreModel,
) -> Result<(), String> {
    preserves_fib_trivfib(adj.right(), tgt, src)
        .map_err(|e| format!("right functor: {e}"))
}

/// Check an adjunction between model categories. In `Adjunction` mode only
/// the left criterion is checked; `Equivalence` mode additionally checks the
/// derived unit on every cofibrant object and the derived counit on every
/// fibrant object, using the stored replacements.
pub fn check_quillen(
    adj: &Adjunction,
    src: &ModelCat,
    tgt: &ModelCat,
    mode: QuillenMode,
) -> QuillenAdjunctionCert {
    debug_assert_eq!(adj.source(), src.base());
    debug_assert_eq!(adj.target(), tgt.base());
    if let Err(witness) = quillen_left_criterion(adj, src.structure(), tgt.structure()) {
        return QuillenAdjunctionCert {
            adjunction_name: adj.name.clone(),
            is_quillen: false,
            is_equivalence: None,
            witness: Some(witness),
        };
    }
    if mode == QuillenMode::Adjunction {
        return QuillenAdjunctionCert {
            adjunction_name: adj.name.clone(),
            is_quillen: true,
            is_equivalence: None,
            witness: None,
        };
    }
    // Derived unit: X → U F X → U((F X)^fib) must be a weak equivalence for
    // every cofibrant X.
    let (c, d) = (src.base(), tgt.base());
    for x in c.objects() {
        if !src.is_cofibrant(x) {
            continue;
        }
        let fx = adj.left().apply_obj(x);
        let (_, lambda) = tgt.replacement(fx, ReplacementKind::Fibrant);
        let composite = c
            .compose(adj.right().apply_mor(lambda), adj.unit_at(x))
            .expect("derived unit composite");
        if !src.is_weq(composite) {
            return QuillenAdjunctionCert {
                adjunction_name: adj.name.clone(),
                is_quillen: true,
                is_equivalence: Some(false),
                witness: Some(format!(
                    "derived unit at cofibrant {} is not a weak equivalence",
                    c.object_name(x)
                )),
            };
        }
    }
    // Derived counit: F((U Y)^cof) → F U Y → Y for every fibrant Y.
    for y in d.objects() {
        if !tgt.is_fibrant(y) {
            continue;
        }
        let uy = adj.right().apply_obj(y);
        let (_, rho) = src.replacement(uy, ReplacementKind::Cofibrant);
        let composite = d
            .compose(adj.counit_at(y), adj.left().apply_mor(rho))
            .expect("derived counit composite");
        if !tgt.is_weq(composite) {
            return QuillenAdjunctionCert {
                adjunction_name: adj.name.clone(),
                is_quillen: true,
                is_equivalence: Some(false),
                witness: Some(format!(
                    "derived counit at fibrant {} is not a weak equivalence",
                    d.object_name(y)
                )),
            };
        }
    }
    QuillenAdjunctionCert {
        adjunction_name: adj.name.clone(),
        is_quillen: true,
        is_equivalence: Some(true),
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjunction::{complete_adjunction};
    use crate::fincat::{chain, FinFunctor};
    use crate::modelstruct::enumerate_model_structures;
    use crate::modelstruct::DEFAULT_SHAPE_BOUND;

    #[test]
    fn identity_is_quillen_equivalence() {
        for mc in enumerate_model_structures(&chain(2), DEFAULT_SHAPE_BOUND) {
            let adj = Adjunction::identity(mc.base().clone());
            let cert = check_quillen(&adj, &mc, &mc, QuillenMode::Equivalence);
            assert!(cert.certified_equivalence(), "{:?}", cert.witness);
        }
    }

    #[test]
    fn point_into_trivial_chain_is_not_an_equivalence() {
        // L: pt → triv(chain2) picks 0. The derived counit at the fibrant
        // object 1 is 0→1, which is not a weak equivalence.
        let c2 = chain(2);
        let structures = enumerate_model_structures(&c2, DEFAULT_SHAPE_BOUND);
        let trivial = structures
            .iter()
            .find(|m| m.structure().describe_class(super::super::MorClass::Weq) == "ids")
            .unwrap();
        let pt_model = ModelCat::trivial_point("pt");
        let pt = pt_model.base().clone();
        let left = FinFunctor::constant(pt.clone(), c2.clone(), crate::fincat::ObjId(0));
        let right = FinFunctor::constant(c2.clone(), pt.clone(), crate::fincat::ObjId(0));
        let adj = complete_adjunction("pt⇄triv", left, right).unwrap();
        let cert = check_quillen(&adj, &pt_model, trivial, QuillenMode::Equivalence);
        assert!(cert.is_quillen);
        assert_eq!(cert.is_equivalence, Some(false));
        assert!(cert.witness.unwrap().contains("derived counit"));
    }

    #[test]
    fn point_into_ex44_chain_is_an_equivalence() {
        let c2 = chain(2);
        let structures = enumerate_model_structures(&c2, DEFAULT_SHAPE_BOUND);
        let ex44 = structures
            .iter()
            .find(|m| {
                m.structure().describe_class(super::super::MorClass::Weq) == "all"
                    && m.structure().describe_class(super::super::MorClass::Fib) == "ids"
            })
            .unwrap();
        let pt_model = ModelCat::trivial_point("pt");
        let pt = pt_model.base().clone();
        let left = FinFunctor::constant(pt.clone(), c2.clone(), crate::fincat::ObjId(0));
        let right = FinFunctor::constant(c2.clone(), pt.clone(), crate::fincat::ObjId(0));
        let adj = complete_adjunction("pt⇄ex44", left, right).unwrap();
        let cert = check_quillen(&adj, &pt_model, ex44, QuillenMode::Equivalence);
        assert!(cert.certified_equivalence(), "{:?}", cert.witness);
    }

    #[test]
    fn left_and_right_criteria_agree_on_corpus() {
        let c2 = chain(2);
        let structures = enumerate_model_structures(&c2, DEFAULT_SHAPE_BOUND);
        for a in &structures {
            for b in &structures {
                let adj = Adjunction::identity(c2.clone());
                let left_ok = quillen_left_criterion(&adj, a.structure(), b.structure()).is_ok();
                let right_ok = quillen_right_criterion(&adj, a.structure(), b.structure()).is_ok();
                assert_eq!(left_ok, right_ok, "{} vs {}", a.name, b.name);
            }
        }
    }
}
