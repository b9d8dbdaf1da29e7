//! Roundtrips between diagrams of adjunctions and biCartesian fibrations,
//! plus the uniqueness consequences of (co)Cartesian factorization.

use fcat_core::adjunction::{complete_adjunction, Adjunction};
use fcat_core::fincat::{chain, point, product, CatBuilder, FinFunctor, ObjId};
use fcat_core::grothendieck::{
    check_bicartesian, classify_cartesian, integrate_cat, straighten_cat, AdjCatFunctor,
};
use std::rc::Rc;

fn pointed_functor() -> AdjCatFunctor {
    // F(0) = pt, F(1) = chain2, the arrow pushes the point to the bottom.
    let c2 = chain(2);
    let pt = point("pt");
    let left = FinFunctor::constant(pt.clone(), c2.clone(), ObjId(0));
    let right = FinFunctor::constant(c2.clone(), pt.clone(), ObjId(0));
    let adj = complete_adjunction("incl", left, right).unwrap();
    AdjCatFunctor::strict(
        "pointed",
        c2.clone(),
        vec![pt.clone(), c2.clone()],
        vec![
            Adjunction::identity(pt),
            Adjunction::identity(c2),
            adj,
        ],
    )
    .unwrap()
}

#[test]
fn straighten_after_integrate_recovers_fibers_and_arrows() {
    for functor in [
        pointed_functor(),
        AdjCatFunctor::constant("const", chain(2), chain(3)),
        AdjCatFunctor::constant("const-pt", chain(3), point("pt")),
    ] {
        let g = integrate_cat(&functor).unwrap();
        let s = straighten_cat(g.projection(), "round").unwrap();
        let base = functor.base();
        for a in base.objects() {
            let original = functor.fiber(a);
            let recovered = s.functor.fiber(a);
            // After relabeling through the pair structure, fibers agree on
            // the nose.
            let relabeled = recovered.relabel(
                original.name(),
                |o| {
                    let t = s.fiber_obj_to_total[a.0][o.0];
                    original.object_name(g.obj_pair(t).1).to_string()
                },
                |m| {
                    let t = s.fiber_mor_to_total[a.0][m.0];
                    original.morphism_name(g.mor_pair(t).1).to_string()
                },
            );
            assert_eq!(&relabeled, original.as_ref());
        }
        for f in base.morphisms() {
            // Pushforwards agree through the pair bijection.
            let want = functor.on_arrow(f).left();
            let got = s.functor.on_arrow(f).left();
            for x in functor.fiber(base.source(f)).objects() {
                let local = s.fiber_obj_to_total[base.source(f).0]
                    .iter()
                    .position(|&t| g.obj_pair(t) == (base.source(f), x))
                    .map(ObjId)
                    .unwrap();
                let image_total = s.fiber_obj_to_total[base.target(f).0][got.apply_obj(local).0];
                assert_eq!(g.obj_pair(image_total).1, want.apply_obj(x));
            }
        }
    }
}

#[test]
fn integrate_after_straighten_recovers_the_total() {
    // The product projection is a biCartesian fibration; straightening and
    // re-integrating gives a total with the same shape over the base.
    let c2 = chain(2);
    let prod = product(&c2, &c2).unwrap();
    let p = &prod.projections[0];
    assert!(check_bicartesian(p).passed());
    let s = straighten_cat(p, "strfst").unwrap();
    let g = integrate_cat(&s.functor).unwrap();
    assert_eq!(g.total().object_count(), prod.cat.object_count());
    assert_eq!(g.total().morphism_count(), prod.cat.morphism_count());
    assert!(fcat_core::fincat::are_isomorphic(g.total(), &prod.cat).is_some());
    // Projections agree under the isomorphism: both land on the same base
    // objects with the same multiplicities.
    for a in c2.objects() {
        let want = prod
            .cat
            .objects()
            .filter(|&o| p.apply_obj(o) == a)
            .count();
        let got = g
            .total()
            .objects()
            .filter(|&o| g.projection().apply_obj(o) == a)
            .count();
        assert_eq!(want, got);
    }
}

#[test]
fn cocartesian_factorization_is_unique() {
    // If φ is coCartesian, post-composition equality over equal projections
    // forces equality.
    let g = integrate_cat(&pointed_functor()).unwrap();
    let total = g.total();
    let p = g.projection();
    for phi in total.morphisms() {
        if !classify_cartesian(p, phi).cocartesian {
            continue;
        }
        let y = total.target(phi);
        for z in total.objects() {
            for g1 in total.hom(y, z) {
                for g2 in total.hom(y, z) {
                    if total.compose(g1, phi) == total.compose(g2, phi)
                        && p.apply_mor(g1) == p.apply_mor(g2)
                    {
                        assert_eq!(g1, g2);
                    }
                }
            }
        }
    }
}

#[test]
fn canonical_lifts_are_cocartesian() {
    let g = integrate_cat(&pointed_functor()).unwrap();
    let base = g.functor().base().clone();
    for o in g.total().objects() {
        let (a, _) = g.obj_pair(o);
        for f in base.morphisms() {
            if base.source(f) != a {
                continue;
            }
            let lift = g.canonical_lift(o, f);
            assert!(classify_cartesian(g.projection(), lift).cocartesian);
        }
    }
}

#[test]
fn non_poset_fiber_roundtrip() {
    // A fiber with a split idempotent: straightening the constant diagram
    // still recovers it up to the pair relabeling.
    let mut b = CatBuilder::new("split");
    let a = b.object_with_identity("A");
    let bb = b.object_with_identity("B");
    let i = b.morphism("i", a, bb);
    let r = b.morphism("r", bb, a);
    let e = b.morphism("e", bb, bb);
    b.set_composite(r, i, fcat_core::fincat::MorId(0));
    b.set_composite(i, r, e);
    b.set_composite(e, e, e);
    b.set_composite(e, i, i);
    b.set_composite(r, e, r);
    let split = Rc::new(b.build().unwrap());
    let functor = AdjCatFunctor::constant("const-split", chain(2), split.clone());
    let g = integrate_cat(&functor).unwrap();
    assert!(check_bicartesian(g.projection()).passed());
    let s = straighten_cat(g.projection(), "round").unwrap();
    for a in chain(2).objects() {
        assert_eq!(s.functor.fiber(a).morphism_count(), split.morphism_count());
    }
}
