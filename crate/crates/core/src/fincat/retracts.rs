//! Retract presentations of morphisms, seen as retract diagrams in the
//! arrow category.

use super::{FinCat, MorId};

/// Exhibits `f` as a retract of `of`: arrow-category morphisms
/// `incl = (i_dom, i_cod): f ⇒ of` and `retr = (r_dom, r_cod): of ⇒ f`
/// whose composite is the identity square on `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetractPresentation {
    pub f: MorId,
    pub of: MorId,
    pub incl: (MorId, MorId),
    pub retr: (MorId, MorId),
}

/// Every way of exhibiting `f` as a retract of some morphism, including the
/// trivial presentation of `f` as a retract of itself.
pub fn enumerate_retracts(c: &FinCat, f: MorId) -> Vec<RetractPresentation> {
    let mut out = Vec::new();
    let (a, b) = (c.source(f), c.target(f));
    for g in c.morphisms() {
        let (x, y) = (c.source(g), c.target(g));
        for i_dom in c.hom(a, x) {
            for i_cod in c.hom(b, y) {
                // (i_dom, i_cod): f ⇒ g must commute.
                if c.compose(g, i_dom) != c.compose(i_cod, f) || c.compose(g, i_dom).is_none() {
                    continue;
                }
                for r_dom in c.hom(x, a) {
                    if c.compose(r_dom, i_dom) != Some(c.identity(a)) {
                        continue;
                    }
                    for r_cod in c.hom(y, b) {
                        if c.compose(r_cod, i_cod) != Some(c.identity(b)) {
                            continue;
                        }
                        if c.compose(f, r_dom) != c.compose(r_cod, g)
                            || c.compose(f, r_dom).is_none()
                        {
                            continue;
                        }
                        out.push(RetractPresentation {
                            f,
                            of: g,
                            incl: (i_dom, i_cod),
                            retr: (r_dom, r_cod),
                        });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{chain, validate_category, CatBuilder};
    use std::rc::Rc;

    /// Two objects with a split idempotent: r ∘ i = id_A, i ∘ r = e.
    pub(crate) fn split_idempotent() -> Rc<super::super::FinCat> {
        let mut b = CatBuilder::new("split");
        let a = b.object_with_identity("A");
        let bb = b.object_with_identity("B");
        let ida = b.identity[&a.0];
        let i = b.morphism("i", a, bb);
        let r = b.morphism("r", bb, a);
        let e = b.morphism("e", bb, bb);
        b.close_identities();
        b.set_composite(r, i, ida);
        b.set_composite(i, r, e);
        b.set_composite(e, e, e);
        b.set_composite(e, i, i);
        b.set_composite(r, e, r);
        Rc::new(b.build().unwrap())
    }

    #[test]
    fn identity_presentation_always_listed() {
        let c = chain(2);
        let f = c.morphism_by_name("0->1").unwrap();
        let retracts = enumerate_retracts(&c, f);
        assert!(retracts.iter().any(|r| {
            r.of == f
                && r.incl == (c.identity(c.source(f)), c.identity(c.target(f)))
        }));
    }

    #[test]
    fn poset_retracts_are_degenerate() {
        // In a skeletal poset ρ∘ι = id forces equality of the two arrows.
        let c = chain(3);
        for f in c.morphisms() {
            for r in enumerate_retracts(&c, f) {
                assert_eq!(r.of, f);
            }
        }
    }

    #[test]
    fn split_idempotent_gives_nontrivial_retract() {
        let c = split_idempotent();
        assert!(validate_category(&c).passed());
        let ida = c.identity(c.object_by_name("A").unwrap());
        let e = c.morphism_by_name("e").unwrap();
        let retracts = enumerate_retracts(&c, ida);
        assert!(retracts.iter().any(|r| r.of == e));
    }
}
