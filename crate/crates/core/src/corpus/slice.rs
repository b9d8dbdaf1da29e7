//! Slice and coslice diagrams over a lattice model category. Pushforward is
//! (post/pre)composition, pullback is meet, pushout is join; fiber
//! structures are inherited levelwise and fiber factorizations are searched.

use crate::adjunction::{complete_adjunction, Adjunction};
use crate::fincat::{coslice, slice, FinCat, FinFunctor, MorId, MorOrigin, ObjId, ObjOrigin};
use crate::grothendieck::AdjCatFunctor;
use crate::integral::ModCatFunctor;
use crate::modelstruct::{search_functorial_factorization, ModelCat, MorClass, PreModel};
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::rc::Rc;

fn le(c: &FinCat, a: ObjId, b: ObjId) -> bool {
    !c.hom(a, b).is_empty()
}

pub(crate) fn meet(c: &FinCat, a: ObjId, b: ObjId) -> Option<ObjId> {
    let lower: Vec<ObjId> = c
        .objects()
        .filter(|&z| le(c, z, a) && le(c, z, b))
        .collect();
    lower
        .iter()
        .copied()
        .find(|&z| lower.iter().all(|&w| le(c, w, z)))
}

pub(crate) fn join(c: &FinCat, a: ObjId, b: ObjId) -> Option<ObjId> {
    let upper: Vec<ObjId> = c
        .objects()
        .filter(|&z| le(c, a, z) && le(c, b, z))
        .collect();
    upper
        .iter()
        .copied()
        .find(|&z| upper.iter().all(|&w| le(c, z, w)))
}

struct SliceFiber {
    cat: Rc<FinCat>,
    /// Fiber object → the underlying lattice object (domain of the structure
    /// morphism).
    obj_under: Vec<ObjId>,
    /// Fiber morphism → the underlying lattice morphism.
    mor_under: Vec<MorId>,
}

fn slice_fiber(base: &Rc<FinCat>, at: ObjId) -> Result<SliceFiber> {
    let derived = slice(base, at)?;
    let obj_under = derived
        .object_origin
        .iter()
        .map(|o| match o {
            ObjOrigin::Mor(f) => base.source(*f),
            _ => unreachable!("slice objects originate from morphisms"),
        })
        .collect();
    let mor_under = derived
        .morphism_origin
        .iter()
        .map(|m| match m {
            MorOrigin::Same(u) => *u,
            _ => unreachable!("slice morphisms originate from morphisms"),
        })
        .collect();
    Ok(SliceFiber {
        cat: derived.cat,
        obj_under,
        mor_under,
    })
}

fn coslice_fiber(base: &Rc<FinCat>, at: ObjId) -> Result<SliceFiber> {
    let derived = coslice(base, at)?;
    let obj_under = derived
        .object_origin
        .iter()
        .map(|o| match o {
            ObjOrigin::Mor(f) => base.target(*f),
            _ => unreachable!("coslice objects originate from morphisms"),
        })
        .collect();
    let mor_under = derived
        .morphism_origin
        .iter()
        .map(|m| match m {
            MorOrigin::Same(u) => *u,
            _ => unreachable!("coslice morphisms originate from morphisms"),
        })
        .collect();
    Ok(SliceFiber {
        cat: derived.cat,
        obj_under,
        mor_under,
    })
}

fn inherited_model(name: String, mc: &ModelCat, fiber: &SliceFiber) -> Result<ModelCat> {
    let mut weq = BTreeSet::new();
    let mut cof = BTreeSet::new();
    let mut fib = BTreeSet::new();
    for m in fiber.cat.morphisms() {
        let under = fiber.mor_under[m.0];
        if mc.is_weq(under) {
            weq.insert(m);
        }
        if mc.is_cof(under) {
            cof.insert(m);
        }
        if mc.is_fib(under) {
            fib.insert(m);
        }
    }
    let pm = PreModel::new(name.clone(), fiber.cat.clone(), weq, cof, fib);
    let f1 = search_functorial_factorization(
        &fiber.cat,
        pm.class(MorClass::Cof),
        &pm.triv_fib(),
    )
    .ok_or_else(|| Error::NoFactorization(format!("{name} (cof, trivial fib)")))?;
    let f2 = search_functorial_factorization(&fiber.cat, &pm.triv_cof(), pm.class(MorClass::Fib))
        .ok_or_else(|| Error::NoFactorization(format!("{name} (trivial cof, fib)")))?;
    ModelCat::new(name, pm, f1, f2)
}

fn unique_hom(c: &FinCat, a: ObjId, b: ObjId) -> MorId {
    let h = c.hom(a, b);
    debug_assert_eq!(h.len(), 1, "skeletal poset hom must be a singleton");
    h[0]
}

/// The slice diagram of a lattice model category: fibers are the slice
/// categories with levelwise structure, pushforward composes with the base
/// arrow, pullback is the meet.
pub fn slice_functor(mc: &ModelCat) -> Result<ModCatFunctor> {
    let base = mc.base().clone();
    if !base.is_skeletal_poset() {
        return Err(Error::Precondition(
            "slice diagrams are built over skeletal poset bases".into(),
        ));
    }
    let fibers: Vec<SliceFiber> = base
        .objects()
        .map(|a| slice_fiber(&base, a))
        .collect::<Result<Vec<_>>>()?;
    let fiber_models: Vec<ModelCat> = base
        .objects()
        .map(|a| {
            inherited_model(
                format!("{}/{}", mc.name, base.object_name(a)),
                mc,
                &fibers[a.0],
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let mut on_arrow: Vec<Adjunction> = Vec::new();
    for f in base.morphisms() {
        let (a, b) = (base.source(f), base.target(f));
        let (fa, fb) = (&fibers[a.0], &fibers[b.0]);
        // Pushforward: x over a ↦ x over b; the underlying object is
        // unchanged, so locate the fiber object of b with the same
        // underlying lattice object.
        let obj_map: Vec<ObjId> = fa
            .obj_under
            .iter()
            .map(|&x| {
                ObjId(
                    fb.obj_under
                        .iter()
                        .position(|&y| y == x)
                        .expect("x ≤ a ≤ b lies over b"),
                )
            })
            .collect();
        let mor_map: Vec<MorId> = fa
            .cat
            .morphisms()
            .map(|m| {
                let src = obj_map[fa.cat.source(m).0];
                let tgt = obj_map[fa.cat.target(m).0];
                unique_hom(&fb.cat, src, tgt)
            })
            .collect();
        let left = FinFunctor::new(
            format!("({})_!", base.morphism_name(f)),
            fa.cat.clone(),
            fb.cat.clone(),
            obj_map,
            mor_map,
        )?;
        // Pullback: y over b ↦ y ∧ a over a.
        let mut right_obj: Vec<ObjId> = Vec::with_capacity(fb.obj_under.len());
        for &y in &fb.obj_under {
            let m = meet(&base, y, a).ok_or_else(|| {
                Error::Precondition(format!(
                    "missing meet of {} and {}",
                    base.object_name(y),
                    base.object_name(a)
                ))
            })?;
            right_obj.push(ObjId(
                fa.obj_under
                    .iter()
                    .position(|&z| z == m)
                    .expect("meet lies under a"),
            ));
        }
        let right_mor: Vec<MorId> = fb
            .cat
            .morphisms()
            .map(|m| {
                let src = right_obj[fb.cat.source(m).0];
                let tgt = right_obj[fb.cat.target(m).0];
                unique_hom(&fa.cat, src, tgt)
            })
            .collect();
        let right = FinFunctor::new(
            format!("({})^*", base.morphism_name(f)),
            fb.cat.clone(),
            fa.cat.clone(),
            right_obj,
            right_mor,
        )?;
        let adj = complete_adjunction(
            format!("slice[{}]", base.morphism_name(f)),
            left,
            right,
        )
        .ok_or_else(|| {
            Error::AdjunctionMismatch(format!(
                "slice adjunction along {}",
                base.morphism_name(f)
            ))
        })?;
        on_arrow.push(adj);
    }
    let underlying = AdjCatFunctor::strict(
        format!("{}/(-)", mc.name),
        base,
        fibers.iter().map(|f| f.cat.clone()).collect(),
        on_arrow,
    )?;
    ModCatFunctor::new(
        format!("slice[{}]", mc.name),
        underlying,
        mc.clone(),
        fiber_models,
    )
}

/// The coslice diagram: fibers are coslice categories, pushforward is the
/// join, pullback forgets along the base arrow.
pub fn coslice_functor(mc: &ModelCat) -> Result<ModCatFunctor> {
    let base = mc.base().clone();
    if !base.is_skeletal_poset() {
        return Err(Error::Precondition(
            "coslice diagrams are built over skeletal poset bases".into(),
        ));
    }
    let fibers: Vec<SliceFiber> = base
        .objects()
        .map(|a| coslice_fiber(&base, a))
        .collect::<Result<Vec<_>>>()?;
    let fiber_models: Vec<ModelCat> = base
        .objects()
        .map(|a| {
            inherited_model(
                format!("{}\\{}", base.object_name(a), mc.name),
                mc,
                &fibers[a.0],
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let mut on_arrow: Vec<Adjunction> = Vec::new();
    for f in base.morphisms() {
        let (a, b) = (base.source(f), base.target(f));
        let (fa, fb) = (&fibers[a.0], &fibers[b.0]);
        // Pushforward: x under a ↦ x ∨ b under b.
        let mut left_obj: Vec<ObjId> = Vec::with_capacity(fa.obj_under.len());
        for &x in &fa.obj_under {
            let j = join(&base, x, b).ok_or_else(|| {
                Error::Precondition(format!(
                    "missing join of {} and {}",
                    base.object_name(x),
                    base.object_name(b)
                ))
            })?;
            left_obj.push(ObjId(
                fb.obj_under
                    .iter()
                    .position(|&z| z == j)
                    .expect("join lies under b"),
            ));
        }
        let left_mor: Vec<MorId> = fa
            .cat
            .morphisms()
            .map(|m| {
                let src = left_obj[fa.cat.source(m).0];
                let tgt = left_obj[fa.cat.target(m).0];
                unique_hom(&fb.cat, src, tgt)
            })
            .collect();
        let left = FinFunctor::new(
            format!("({})_!", base.morphism_name(f)),
            fa.cat.clone(),
            fb.cat.clone(),
            left_obj,
            left_mor,
        )?;
        // Forgetful right: y under b ↦ y under a.
        let right_obj: Vec<ObjId> = fb
            .obj_under
            .iter()
            .map(|&y| {
                ObjId(
                    fa.obj_under
                        .iter()
                        .position(|&z| z == y)
                        .expect("a ≤ b ≤ y lies under a"),
                )
            })
            .collect();
        let right_mor: Vec<MorId> = fb
            .cat
            .morphisms()
            .map(|m| {
                let src = right_obj[fb.cat.source(m).0];
                let tgt = right_obj[fb.cat.target(m).0];
                unique_hom(&fa.cat, src, tgt)
            })
            .collect();
        let right = FinFunctor::new(
            format!("({})^*", base.morphism_name(f)),
            fb.cat.clone(),
            fa.cat.clone(),
            right_obj,
            right_mor,
        )?;
        let adj = complete_adjunction(
            format!("coslice[{}]", base.morphism_name(f)),
            left,
            right,
        )
        .ok_or_else(|| {
            Error::AdjunctionMismatch(format!(
                "coslice adjunction along {}",
                base.morphism_name(f)
            ))
        })?;
        on_arrow.push(adj);
    }
    let underlying = AdjCatFunctor::strict(
        format!("(-)\\{}", mc.name),
        base,
        fibers.iter().map(|f| f.cat.clone()).collect(),
        on_arrow,
    )?;
    ModCatFunctor::new(
        format!("coslice[{}]", mc.name),
        underlying,
        mc.clone(),
        fiber_models,
    )
}
