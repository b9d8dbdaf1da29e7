//! Integration: from a diagram of adjunctions to its total category.

use super::{AdjCatFunctor, GrothCat};
use crate::fincat::{validate_category, CatBuilder, FinFunctor, MorId, ObjId};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::rc::Rc;

/// Build the total category of a diagram of adjunctions. Objects are pairs
/// `(A, X)` with `X` in the fiber over `A`; a morphism `(A,X) → (B,Y)` is a
/// pair `(f, φ)` with `f: A → B` in the base and `φ: f_!X → Y` in the fiber
/// over `B`. Composition twists by the coherence cells:
/// `(g,ψ) ∘ (f,φ) = (g∘f, ψ ∘ g_!(φ) ∘ α_{g,f})`.
pub fn integrate_cat(functor: &AdjCatFunctor) -> Result<GrothCat> {
    let coherence = functor.validate();
    if !coherence.passed() {
        let first = coherence.first().expect("non-empty report");
        return Err(Error::Coherence(format!("{first}")));
    }
    let base = functor.base().clone();
    let mut b = CatBuilder::new(format!("∫{}", functor.name));
    let mut obj_pairs = Vec::new();
    let mut obj_index = BTreeMap::new();
    for a in base.objects() {
        for x in functor.fiber(a).objects() {
            let o = b.object(format!(
                "({},{})",
                base.object_name(a),
                functor.fiber(a).object_name(x)
            ));
            obj_pairs.push((a, x));
            obj_index.insert((a, x), o);
        }
    }
    // Morphisms in (f, φ, X) canonical order, so that restricting to a fiber
    // (f = id) recovers that fiber's own morphism order. Names are (f;φ),
    // disambiguated with the source fiber object when the short form
    // collides.
    let mut raw: Vec<(ObjId, MorId, MorId, ObjId)> = Vec::new(); // (src_total, f, phi, tgt_total)
    for f in base.morphisms() {
        let (a, bb) = (base.source(f), base.target(f));
        let fiber_b = functor.fiber(bb);
        for phi in fiber_b.morphisms() {
            let y = fiber_b.target(phi);
            for x in functor.fiber(a).objects() {
                if functor.push_obj(f, x) != fiber_b.source(phi) {
                    continue;
                }
                raw.push((obj_index[&(a, x)], f, phi, obj_index[&(bb, y)]));
            }
        }
    }
    let mut name_count: BTreeMap<String, usize> = BTreeMap::new();
    for &(_, f, phi, _) in &raw {
        let short = short_name(functor, f, phi);
        *name_count.entry(short).or_insert(0) += 1;
    }
    let mut mor_pairs = Vec::new();
    let mut mor_index = BTreeMap::new();
    for &(src, f, phi, tgt) in &raw {
        let short = short_name(functor, f, phi);
        let name = if name_count[&short] > 1 {
            let (a, x) = obj_pairs[src.0];
            format!(
                "({};{}@{})",
                base.morphism_name(f),
                functor.fiber(base.target(f)).morphism_name(phi),
                functor.fiber(a).object_name(x)
            )
        } else {
            short
        };
        let m = b.morphism(name, src, tgt);
        mor_pairs.push((f, phi));
        mor_index.insert((src, f, phi), m);
    }
    // Identities: (id_A, inverse of the id-iso component).
    for (o, &(a, x)) in obj_pairs.iter().enumerate() {
        let iota = functor.id_iso(a).component(x);
        let phi = functor
            .fiber(a)
            .inverse(iota)
            .ok_or_else(|| Error::Coherence("id-iso component is not invertible".into()))?;
        let id = mor_index
            .get(&(ObjId(o), base.identity(a), phi))
            .copied()
            .ok_or_else(|| Error::Coherence("identity pair missing".into()))?;
        b.set_identity(ObjId(o), id);
    }
    // Composition law.
    for (m1, &(src1, f, phi, _)) in raw.iter().enumerate() {
        for (m2, &(src2, g, psi, _)) in raw.iter().enumerate() {
            let tgt1 = raw[m1].3;
            if tgt1 != src2 {
                continue;
            }
            let Some(gf) = base.compose(g, f) else { continue };
            let (a, x) = obj_pairs[src1.0];
            debug_assert_eq!(base.source(f), a);
            let fiber_c = functor.fiber(base.target(g));
            let alpha = functor
                .comp_iso(g, f)
                .expect("validated coherence")
                .component(x);
            let g_phi = functor.on_arrow(g).left().apply_mor(phi);
            let composite = fiber_c
                .compose_chain(&[alpha, g_phi, psi])
                .ok_or_else(|| Error::Coherence("composite chain undefined".into()))?;
            let m = mor_index
                .get(&(src1, gf, composite))
                .copied()
                .ok_or_else(|| Error::Coherence("composite pair missing".into()))?;
            b.set_composite(MorId(m2), MorId(m1), m);
        }
    }
    let total = Rc::new(b.build()?);
    let report = validate_category(&total);
    if !report.passed() {
        return Err(Error::Coherence(format!(
            "total category invalid: {}",
            report.first().expect("non-empty")
        )));
    }
    let projection = FinFunctor::new(
        format!("π_{}", functor.name),
        total.clone(),
        base.clone(),
        obj_pairs.iter().map(|&(a, _)| a).collect(),
        mor_pairs.iter().map(|&(f, _)| f).collect(),
    )?;
    debug_assert!(projection.validate().passed());
    Ok(GrothCat {
        functor: functor.clone(),
        total,
        projection,
        obj_pairs,
        mor_pairs,
        obj_index,
        mor_index,
    })
}

fn short_name(functor: &AdjCatFunctor, f: MorId, phi: MorId) -> String {
    let base = functor.base();
    format!(
        "({};{})",
        base.morphism_name(f),
        functor.fiber(base.target(f)).morphism_name(phi)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjunction::Adjunction;
    use crate::fincat::{are_isomorphic, chain, point, FinFunctor as FF};
    use crate::grothendieck::check_bicartesian;

    #[test]
    fn constant_point_over_chain2_is_chain2() {
        let c2 = chain(2);
        let f = AdjCatFunctor::constant("pt_over_I1", c2.clone(), point("pt"));
        let g = integrate_cat(&f).unwrap();
        assert!(are_isomorphic(g.total(), &c2).is_some());
        assert!(g.projection().validate().passed());
    }

    #[test]
    fn pushforward_functor_over_chain2_is_chain3() {
        // F(0) = pt, F(1) = chain2, f_! picks 0: total is a 3-chain.
        let c2 = chain(2);
        let pt = point("pt");
        let left = FF::constant(pt.clone(), c2.clone(), ObjId(0));
        let right = FF::constant(c2.clone(), pt.clone(), ObjId(0));
        let adj = crate::adjunction::complete_adjunction("incl", left, right).unwrap();
        let fibers = vec![pt.clone(), c2.clone()];
        let on_arrow = vec![
            Adjunction::identity(pt.clone()),
            Adjunction::identity(c2.clone()),
            adj,
        ];
        let f = AdjCatFunctor::strict("pointed", c2.clone(), fibers, on_arrow).unwrap();
        let g = integrate_cat(&f).unwrap();
        assert_eq!(g.total().object_count(), 3);
        assert!(are_isomorphic(g.total(), &chain(3)).is_some());
        assert!(check_bicartesian(g.projection()).passed());
    }

    #[test]
    fn constant_chain2_over_chain2_is_square() {
        let c2 = chain(2);
        let f = AdjCatFunctor::constant("I1_over_I1", c2.clone(), c2.clone());
        let g = integrate_cat(&f).unwrap();
        assert_eq!(g.total().object_count(), 4);
        assert!(are_isomorphic(g.total(), &crate::fincat::boolean_lattice_2()).is_some());
    }
}
