//! Base change: a compatible family of adjunctions over a base adjunction
//! induces an adjunction between the integral totals. Left morphisms are
//! families `F(A) ⇄ G(L A)`, right morphisms are families `F(R B) ⇄ G(B)`;
//! both give explicitly computable total functors on strict data.

use super::{IntegralStructure, ModCatFunctor};
use crate::adjunction::{complete_adjunction, Adjunction};
use crate::fincat::{FinFunctor, MorId, ObjId};
use crate::modelstruct::{check_quillen, QuillenAdjunctionCert, QuillenMode};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismKind {
    Left,
    Right,
}

/// The per-object family of adjunctions of a left or right morphism.
#[derive(Debug, Clone)]
pub struct BaseChangeFamily {
    pub kind: MorphismKind,
    pub components: Vec<Adjunction>,
}

/// Everything the base-change construction certifies.
#[derive(Debug, Clone)]
pub struct BaseChangeCert {
    /// The induced adjunction between the integral totals.
    pub adjunction: Adjunction,
    /// Equivalence-mode Quillen check of the induced adjunction.
    pub cert: QuillenAdjunctionCert,
    /// Whether the base adjunction is a Quillen adjunction / equivalence.
    pub base_cert: QuillenAdjunctionCert,
    /// Whether every family component is a Quillen adjunction.
    pub family_quillen: bool,
    /// Whether the family is a Quillen equivalence at every cofibrant base
    /// object (left morphisms) resp. fibrant object (right morphisms).
    pub family_equivalence: bool,
}

/// Construct and certify the induced adjunction. The construction itself
/// only needs valid strict data; the certificates say whether the Quillen
/// conclusions hold for this instance.
pub fn base_change(
    fm: &ModCatFunctor,
    istruct_f: &IntegralStructure,
    gm: &ModCatFunctor,
    istruct_g: &IntegralStructure,
    bc: &Adjunction,
    family: &BaseChangeFamily,
) -> Result<BaseChangeCert> {
    let m_base = fm.base();
    let n_base = gm.base();
    if bc.source() != m_base || bc.target() != n_base {
        return Err(Error::CategoryMismatch(
            "base adjunction endpoints do not match the diagrams".into(),
        ));
    }
    validate_family(fm, gm, bc, family)?;
    let (forward, backward) = match family.kind {
        MorphismKind::Left => build_left_morphism(fm, istruct_f, gm, istruct_g, bc, family)?,
        MorphismKind::Right => build_right_morphism(fm, istruct_f, gm, istruct_g, bc, family)?,
    };
    for (functor, label) in [(&forward, "forward"), (&backward, "backward")] {
        let report = functor.validate();
        if !report.passed() {
            return Err(Error::Coherence(format!(
                "{label} base-change functor invalid: {}",
                report.first().expect("non-empty")
            )));
        }
    }
    let adjunction = complete_adjunction(
        format!("Φ[{}→{}]", fm.name, gm.name),
        forward,
        backward,
    )
    .ok_or_else(|| {
        Error::AdjunctionMismatch("induced base-change functors are not adjoint".into())
    })?;
    let model_f = istruct_f
        .model()
        .ok_or_else(|| Error::Precondition("source integral lacks factorizations".into()))?;
    let model_g = istruct_g
        .model()
        .ok_or_else(|| Error::Precondition("target integral lacks factorizations".into()))?;
    let cert = check_quillen(&adjunction, model_f, model_g, QuillenMode::Equivalence);
    let base_model_m = fm
        .base_model()
        .ok_or_else(|| Error::Precondition("source base is not a model category".into()))?;
    let base_model_n = gm
        .base_model()
        .ok_or_else(|| Error::Precondition("target base is not a model category".into()))?;
    let base_cert = check_quillen(bc, base_model_m, base_model_n, QuillenMode::Equivalence);
    let (family_quillen, family_equivalence) = family_certs(fm, gm, bc, family);
    Ok(BaseChangeCert {
        adjunction,
        cert,
        base_cert,
        family_quillen,
        family_equivalence,
    })
}

fn validate_family(
    fm: &ModCatFunctor,
    gm: &ModCatFunctor,
    bc: &Adjunction,
    family: &BaseChangeFamily,
) -> Result<()> {
    let m_base = fm.base();
    let n_base = gm.base();
    let expected = match family.kind {
        MorphismKind::Left => m_base.object_count(),
        MorphismKind::Right => n_base.object_count(),
    };
    if family.components.len() != expected {
        return Err(Error::FunctorShape);
    }
    for (i, comp) in family.components.iter().enumerate() {
        let report = comp.validate();
        if !report.passed() {
            return Err(Error::Precondition(format!(
                "family component {i} invalid: {}",
                report.first().expect("non-empty")
            )));
        }
        let (want_src, want_tgt) = match family.kind {
            MorphismKind::Left => {
                let a = ObjId(i);
                (
                    fm.underlying().fiber(a).clone(),
                    gm.underlying().fiber(bc.left().apply_obj(a)).clone(),
                )
            }
            MorphismKind::Right => {
                let b = ObjId(i);
                (
                    fm.underlying().fiber(bc.right().apply_obj(b)).clone(),
                    gm.underlying().fiber(b).clone(),
                )
            }
        };
        if comp.source() != &want_src || comp.target() != &want_tgt {
            return Err(Error::CategoryMismatch(format!(
                "family component {i} has wrong endpoints"
            )));
        }
    }
    // Strict pseudo-naturality of the family.
    match family.kind {
        MorphismKind::Left => {
            for f in m_base.morphisms() {
                let (a, a2) = (m_base.source(f), m_base.target(f));
                let lf = bc.left().apply_mor(f);
                let left_one = family.components[a2.0]
                    .left()
                    .compose(fm.underlying().on_arrow(f).left())?;
                let left_two = gm
                    .underlying()
                    .on_arrow(lf)
                    .left()
                    .compose(family.components[a.0].left())?;
                let right_one = family.components[a.0]
                    .right()
                    .compose(gm.underlying().on_arrow(lf).right())?;
                let right_two = fm
                    .underlying()
                    .on_arrow(f)
                    .right()
                    .compose(family.components[a2.0].right())?;
                if !same_maps(&left_one, &left_two) || !same_maps(&right_one, &right_two) {
                    return Err(Error::Coherence(format!(
                        "left-morphism family is not strictly natural at {}",
                        m_base.morphism_name(f)
                    )));
                }
            }
        }
        MorphismKind::Right => {
            for g in n_base.morphisms() {
                let (b, b2) = (n_base.source(g), n_base.target(g));
                let rg = bc.right().apply_mor(g);
                let left_one = family.components[b2.0]
                    .left()
                    .compose(fm.underlying().on_arrow(rg).left())?;
                let left_two = gm
                    .underlying()
                    .on_arrow(g)
                    .left()
                    .compose(family.components[b.0].left())?;
                let right_one = family.components[b.0]
                    .right()
                    .compose(gm.underlying().on_arrow(g).right())?;
                let right_two = fm
                    .underlying()
                    .on_arrow(rg)
                    .right()
                    .compose(family.components[b2.0].right())?;
                if !same_maps(&left_one, &left_two) || !same_maps(&right_one, &right_two) {
                    return Err(Error::Coherence(format!(
                        "right-morphism family is not strictly natural at {}",
                        n_base.morphism_name(g)
                    )));
                }
            }
        }
    }
    Ok(())
}

fn same_maps(a: &FinFunctor, b: &FinFunctor) -> bool {
    a.object_map() == b.object_map() && a.morphism_map() == b.morphism_map()
}

fn build_left_morphism(
    fm: &ModCatFunctor,
    istruct_f: &IntegralStructure,
    gm: &ModCatFunctor,
    istruct_g: &IntegralStructure,
    bc: &Adjunction,
    family: &BaseChangeFamily,
) -> Result<(FinFunctor, FinFunctor)> {
    let m_base = fm.base();
    let groth_f = istruct_f.groth();
    let groth_g = istruct_g.groth();
    let total_f = istruct_f.total();
    let total_g = istruct_g.total();
    // Forward: (A, X) ↦ (L A, Σ^L_A X).
    let fwd_obj: Vec<ObjId> = total_f
        .objects()
        .map(|o| {
            let (a, x) = groth_f.obj_pair(o);
            groth_g
                .pair_obj(
                    bc.left().apply_obj(a),
                    family.components[a.0].left().apply_obj(x),
                )
                .expect("image pair exists")
        })
        .collect();
    let fwd_mor: Vec<MorId> = total_f
        .morphisms()
        .map(|m| {
            let (f, phi) = groth_f.mor_pair(m);
            let a2 = m_base.target(f);
            let image = family.components[a2.0].left().apply_mor(phi);
            groth_g
                .pair_mor(fwd_obj[total_f.source(m).0], bc.left().apply_mor(f), image)
                .expect("image pair exists")
        })
        .collect();
    let forward = FinFunctor::new(
        "Φ_L",
        total_f.clone(),
        total_g.clone(),
        fwd_obj,
        fwd_mor,
    )?;
    // Backward: (B, Y) ↦ (R B, Σ^R_{RB}(ε_B^* Y)).
    let bwd_obj: Vec<ObjId> = total_g
        .objects()
        .map(|o| {
            let (b, y) = groth_g.obj_pair(o);
            let rb = bc.right().apply_obj(b);
            let eps = bc.counit_at(b);
            let pulled = gm.underlying().on_arrow(eps).right().apply_obj(y);
            groth_f
                .pair_obj(rb, family.components[rb.0].right().apply_obj(pulled))
                .expect("image pair exists")
        })
        .collect();
    let bwd_mor: Vec<MorId> = total_g
        .morphisms()
        .map(|m| {
            let (g, psi) = groth_g.mor_pair(m);
            let (b, y) = groth_g.obj_pair(total_g.source(m));
            let (b2, y2) = groth_g.obj_pair(total_g.target(m));
            let rb = bc.right().apply_obj(b);
            let rb2 = bc.right().apply_obj(b2);
            let rg = bc.right().apply_mor(g);
            let psi_ad = gm
                .underlying()
                .on_arrow(g)
                .transpose_to_right_at(y, psi)
                .expect("transposable");
            let pulled = gm
                .underlying()
                .on_arrow(bc.counit_at(b))
                .right()
                .apply_mor(psi_ad);
            let mapped = family.components[rb.0].right().apply_mor(pulled);
            let target_fiber = family.components[rb2.0].right().apply_obj(
                gm.underlying()
                    .on_arrow(bc.counit_at(b2))
                    .right()
                    .apply_obj(y2),
            );
            let chi = fm
                .underlying()
                .on_arrow(rg)
                .transpose_to_left_at(target_fiber, mapped)
                .expect("transposable back");
            groth_f
                .pair_mor(bwd_obj[total_g.source(m).0], rg, chi)
                .expect("image pair exists")
        })
        .collect();
    let backward = FinFunctor::new(
        "Φ_R",
        total_g.clone(),
        total_f.clone(),
        bwd_obj,
        bwd_mor,
    )?;
    Ok((forward, backward))
}

fn build_right_morphism(
    fm: &ModCatFunctor,
    istruct_f: &IntegralStructure,
    gm: &ModCatFunctor,
    istruct_g: &IntegralStructure,
    bc: &Adjunction,
    family: &BaseChangeFamily,
) -> Result<(FinFunctor, FinFunctor)> {
    let m_base = fm.base();
    let groth_f = istruct_f.groth();
    let groth_g = istruct_g.groth();
    let total_f = istruct_f.total();
    let total_g = istruct_g.total();
    // Forward: (A, X) ↦ (L A, Θ^L_{LA}((η_A)_! X)).
    let fwd_obj: Vec<ObjId> = total_f
        .objects()
        .map(|o| {
            let (a, x) = groth_f.obj_pair(o);
            let la = bc.left().apply_obj(a);
            let eta = bc.unit_at(a);
            let pushed = fm.underlying().on_arrow(eta).left().apply_obj(x);
            groth_g
                .pair_obj(la, family.components[la.0].left().apply_obj(pushed))
                .expect("image pair exists")
        })
        .collect();
    let fwd_mor: Vec<MorId> = total_f
        .morphisms()
        .map(|m| {
            let (f, phi) = groth_f.mor_pair(m);
            let a2 = m_base.target(f);
            let la2 = bc.left().apply_obj(a2);
            let pushed = fm
                .underlying()
                .on_arrow(bc.unit_at(a2))
                .left()
                .apply_mor(phi);
            let image = family.components[la2.0].left().apply_mor(pushed);
            groth_g
                .pair_mor(fwd_obj[total_f.source(m).0], bc.left().apply_mor(f), image)
                .expect("image pair exists")
        })
        .collect();
    let forward = FinFunctor::new(
        "Ψ_L",
        total_f.clone(),
        total_g.clone(),
        fwd_obj,
        fwd_mor,
    )?;
    // Backward: (B, Y) ↦ (R B, Θ^R_B Y).
    let bwd_obj: Vec<ObjId> = total_g
        .objects()
        .map(|o| {
            let (b, y) = groth_g.obj_pair(o);
            groth_f
                .pair_obj(
                    bc.right().apply_obj(b),
                    family.components[b.0].right().apply_obj(y),
                )
                .expect("image pair exists")
        })
        .collect();
    let bwd_mor: Vec<MorId> = total_g
        .morphisms()
        .map(|m| {
            let (g, psi) = groth_g.mor_pair(m);
            let (b, y) = groth_g.obj_pair(total_g.source(m));
            let (b2, y2) = groth_g.obj_pair(total_g.target(m));
            let rg = bc.right().apply_mor(g);
            let psi_ad = gm
                .underlying()
                .on_arrow(g)
                .transpose_to_right_at(y, psi)
                .expect("transposable");
            let mapped = family.components[b.0].right().apply_mor(psi_ad);
            let target_fiber = family.components[b2.0].right().apply_obj(y2);
            let chi = fm
                .underlying()
                .on_arrow(rg)
                .transpose_to_left_at(target_fiber, mapped)
                .expect("transposable back");
            groth_f
                .pair_mor(bwd_obj[total_g.source(m).0], rg, chi)
                .expect("image pair exists")
        })
        .collect();
    let backward = FinFunctor::new(
        "Ψ_R",
        total_g.clone(),
        total_f.clone(),
        bwd_obj,
        bwd_mor,
    )?;
    Ok((forward, backward))
}

/// Hypothesis certificates: the family is Quillen everywhere, and a Quillen
/// equivalence at every cofibrant (left kind) resp. fibrant (right kind)
/// base object.
fn family_certs(
    fm: &ModCatFunctor,
    gm: &ModCatFunctor,
    bc: &Adjunction,
    family: &BaseChangeFamily,
) -> (bool, bool) {
    let mut quillen = true;
    let mut equivalence = true;
    match family.kind {
        MorphismKind::Left => {
            let base_model = fm.base_model().expect("checked by caller");
            for (i, comp) in family.components.iter().enumerate() {
                let a = ObjId(i);
                let la = bc.left().apply_obj(a);
                let cert = check_quillen(
                    comp,
                    fm.fiber_model(a),
                    gm.fiber_model(la),
                    QuillenMode::Equivalence,
                );
                quillen &= cert.is_quillen;
                if base_model.is_cofibrant(a) {
                    equivalence &= cert.certified_equivalence();
                }
            }
        }
        MorphismKind::Right => {
            let base_model = gm.base_model().expect("checked by caller");
            for (i, comp) in family.components.iter().enumerate() {
                let b = ObjId(i);
                let rb = bc.right().apply_obj(b);
                let cert = check_quillen(
                    comp,
                    fm.fiber_model(rb),
                    gm.fiber_model(b),
                    QuillenMode::Equivalence,
                );
                quillen &= cert.is_quillen;
                if base_model.is_fibrant(b) {
                    equivalence &= cert.certified_equivalence();
                }
            }
        }
    }
    (quillen, equivalence)
}
