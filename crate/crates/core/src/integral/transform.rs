//! Integration of fiberwise Quillen transformations: a strictly natural
//! family of adjunctions between two diagrams over the same base induces an
//! adjunction between the totals, computed componentwise.

use super::{IntegralStructure, ModCatFunctor};
use crate::adjunction::Adjunction;
use crate::fincat::{FinFunctor, MorId, ObjId};
use crate::grothendieck::GrothCat;
use crate::modelstruct::{check_quillen, QuillenAdjunctionCert, QuillenMode};
use crate::{Error, Result};

/// Validate strict naturality of a family `σ_A ⊣ τ_A: F(A) ⇄ G(A)`: both
/// squares must commute on the nose for every base arrow.
pub(crate) fn validate_strict_family(
    fm: &ModCatFunctor,
    gm: &ModCatFunctor,
    family: &[Adjunction],
) -> Result<()> {
    let base = fm.base();
    if gm.base() != base {
        return Err(Error::CategoryMismatch("family bases differ".into()));
    }
    if family.len() != base.object_count() {
        return Err(Error::FunctorShape);
    }
    for (a, adj) in family.iter().enumerate() {
        let a = ObjId(a);
        if adj.source() != fm.underlying().fiber(a) || adj.target() != gm.underlying().fiber(a) {
            return Err(Error::CategoryMismatch(format!(
                "family component at {} has wrong endpoints",
                base.object_name(a)
            )));
        }
        let report = adj.validate();
        if !report.passed() {
            return Err(Error::Precondition(format!(
                "family component at {} invalid: {}",
                base.object_name(a),
                report.first().expect("non-empty")
            )));
        }
    }
    for f in base.morphisms() {
        let (a, b) = (base.source(f), base.target(f));
        let left_one = family[b.0].left().compose(fm.underlying().on_arrow(f).left())?;
        let left_two = gm.underlying().on_arrow(f).left().compose(family[a.0].left())?;
        if left_one.object_map() != left_two.object_map()
            || left_one.morphism_map() != left_two.morphism_map()
        {
            return Err(Error::Coherence(format!(
                "family is not strictly natural on the left at {}",
                base.morphism_name(f)
            )));
        }
        let right_one = family[a.0]
            .right()
            .compose(gm.underlying().on_arrow(f).right())?;
        let right_two = fm
            .underlying()
            .on_arrow(f)
            .right()
            .compose(family[b.0].right())?;
        if right_one.object_map() != right_two.object_map()
            || right_one.morphism_map() != right_two.morphism_map()
        {
            return Err(Error::Coherence(format!(
                "family is not strictly natural on the right at {}",
                base.morphism_name(f)
            )));
        }
    }
    Ok(())
}

/// Build the total adjunction `σ_* ⊣ τ_*` over the identity base:
/// `σ_*(A,X) = (A, σ_A X)` and `τ_*(A,Y) = (A, τ_A Y)`, with the action on
/// morphisms transported through the strict naturality squares.
pub(crate) fn integrate_family(
    name: impl Into<String>,
    fm: &ModCatFunctor,
    groth_f: &GrothCat,
    gm: &ModCatFunctor,
    groth_g: &GrothCat,
    family: &[Adjunction],
) -> Result<Adjunction> {
    validate_strict_family(fm, gm, family)?;
    let base = fm.base();
    let total_f = groth_f.total();
    let total_g = groth_g.total();
    let name = name.into();

    // σ_* on objects and morphisms.
    let fwd_obj: Vec<ObjId> = total_f
        .objects()
        .map(|o| {
            let (a, x) = groth_f.obj_pair(o);
            groth_g
                .pair_obj(a, family[a.0].left().apply_obj(x))
                .expect("pair exists")
        })
        .collect();
    let fwd_mor: Vec<MorId> = total_f
        .morphisms()
        .map(|m| {
            let (f, phi) = groth_f.mor_pair(m);
            let src = fwd_obj[total_f.source(m).0];
            let b = base.target(f);
            let image = family[b.0].left().apply_mor(phi);
            groth_g
                .pair_mor(src, f, image)
                .expect("image pair exists")
        })
        .collect();
    let forward = FinFunctor::new(
        format!("{name}_*"),
        total_f.clone(),
        total_g.clone(),
        fwd_obj,
        fwd_mor,
    )?;
    let fwd_report = forward.validate();
    if !fwd_report.passed() {
        return Err(Error::Coherence(format!(
            "integrated left functor invalid: {}",
            fwd_report.first().expect("non-empty")
        )));
    }

    // τ_* on objects and morphisms: transpose, apply τ, transpose back.
    let bwd_obj: Vec<ObjId> = total_g
        .objects()
        .map(|o| {
            let (a, y) = groth_g.obj_pair(o);
            groth_f
                .pair_obj(a, family[a.0].right().apply_obj(y))
                .expect("pair exists")
        })
        .collect();
    let bwd_mor: Vec<MorId> = total_g
        .morphisms()
        .map(|m| {
            let (f, psi) = groth_g.mor_pair(m);
            let (a, y) = groth_g.obj_pair(total_g.source(m));
            let (b, y2) = groth_g.obj_pair(total_g.target(m));
            let psi_ad = gm
                .underlying()
                .on_arrow(f)
                .transpose_to_right_at(y, psi)
                .expect("transposable");
            let tau_psi_ad = family[a.0].right().apply_mor(psi_ad);
            // tau_psi_ad: τ_A Y → τ_A f^{*G} Y' = f^{*F} τ_B Y'.
            let chi = fm
                .underlying()
                .on_arrow(f)
                .transpose_to_left_at(family[b.0].right().apply_obj(y2), tau_psi_ad)
                .expect("transposable back");
            let src = bwd_obj[total_g.source(m).0];
            groth_f.pair_mor(src, f, chi).expect("pair exists")
        })
        .collect();
    let backward = FinFunctor::new(
        format!("{name}^*"),
        total_g.clone(),
        total_f.clone(),
        bwd_obj,
        bwd_mor,
    )?;
    let bwd_report = backward.validate();
    if !bwd_report.passed() {
        return Err(Error::Coherence(format!(
            "integrated right functor invalid: {}",
            bwd_report.first().expect("non-empty")
        )));
    }

    // Unit and counit come from the fiberwise ones over identity base arrows.
    let unit: Vec<MorId> = total_f
        .objects()
        .map(|o| {
            let (a, x) = groth_f.obj_pair(o);
            groth_f
                .pair_mor(o, base.identity(a), family[a.0].unit_at(x))
                .expect("unit pair exists")
        })
        .collect();
    let counit: Vec<MorId> = total_g
        .objects()
        .map(|o| {
            let (a, y) = groth_g.obj_pair(o);
            let src = groth_g
                .pair_obj(a, family[a.0].left().apply_obj(family[a.0].right().apply_obj(y)))
                .expect("pair exists");
            groth_g
                .pair_mor(src, base.identity(a), family[a.0].counit_at(y))
                .expect("counit pair exists")
        })
        .collect();
    let adj = Adjunction::new(name, forward, backward, unit, counit)?;
    let report = adj.validate();
    if !report.passed() {
        return Err(Error::Coherence(format!(
            "integrated adjunction invalid: {}",
            report.first().expect("non-empty")
        )));
    }
    Ok(adj)
}

/// Integrate a Quillen transformation between two diagrams sharing a base:
/// check each component is Quillen, build the total adjunction and certify
/// it against the integral structures.
pub fn integrate_quillen_transformation(
    fm: &ModCatFunctor,
    istruct_f: &IntegralStructure,
    gm: &ModCatFunctor,
    istruct_g: &IntegralStructure,
    family: &[Adjunction],
    mode: QuillenMode,
) -> Result<(Adjunction, QuillenAdjunctionCert)> {
    let base = fm.base();
    for (a, adj) in family.iter().enumerate() {
        let a = ObjId(a);
        let cert = check_quillen(
            adj,
            fm.fiber_model(a),
            gm.fiber_model(a),
            QuillenMode::Adjunction,
        );
        if !cert.is_quillen {
            return Err(Error::Precondition(format!(
                "family component at {} is not a Quillen adjunction: {}",
                base.object_name(a),
                cert.witness.unwrap_or_default()
            )));
        }
    }
    let adj = integrate_family(
        format!("∫[{}⇒{}]", fm.name, gm.name),
        fm,
        istruct_f.groth(),
        gm,
        istruct_g.groth(),
        family,
    )?;
    let model_f = istruct_f
        .model()
        .ok_or_else(|| Error::Precondition("source integral lacks factorizations".into()))?;
    let model_g = istruct_g
        .model()
        .ok_or_else(|| Error::Precondition("target integral lacks factorizations".into()))?;
    let cert = check_quillen(&adj, model_f, model_g, mode);
    Ok((adj, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{chain, point};
    use crate::grothendieck::AdjCatFunctor;
    use crate::integral::{build_integral, BuildMode};
    use crate::modelstruct::{
        enumerate_model_structures, ModelCat, MorClass, DEFAULT_SHAPE_BOUND,
    };

    #[test]
    fn identity_transformation_integrates_to_identity() {
        let pt = point("pt");
        let fiber = enumerate_model_structures(&chain(2), DEFAULT_SHAPE_BOUND)
            .into_iter()
            .find(|m| m.structure().describe_class(MorClass::Fib) == "ids")
            .unwrap();
        let fm = ModCatFunctor::new(
            "const",
            AdjCatFunctor::constant("const", pt.clone(), fiber.base().clone()),
            ModelCat::trivial_point("pt"),
            vec![fiber.clone()],
        )
        .unwrap();
        let istruct =
            build_integral(&fm, BuildMode::RequireProperRelative, DEFAULT_SHAPE_BOUND).unwrap();
        let family = vec![Adjunction::identity(fiber.base().clone())];
        let (adj, cert) = integrate_quillen_transformation(
            &fm,
            &istruct,
            &fm,
            &istruct,
            &family,
            QuillenMode::Equivalence,
        )
        .unwrap();
        assert!(cert.certified_equivalence());
        for o in istruct.total().objects() {
            assert_eq!(adj.left().apply_obj(o), o);
        }
    }

    #[test]
    fn fiberwise_inclusion_between_chain2_structures() {
        // Identity underlying functor between the trivial and the
        // all-cofibrant structure on the same chain: a Quillen adjunction of
        // totals over the point.
        let pt = point("pt");
        let structures = enumerate_model_structures(&chain(2), DEFAULT_SHAPE_BOUND);
        let trivial = structures
            .iter()
            .find(|m| m.structure().describe_class(MorClass::Weq) == "ids")
            .unwrap();
        let ex44 = structures
            .iter()
            .find(|m| {
                m.structure().describe_class(MorClass::Weq) == "all"
                    && m.structure().describe_class(MorClass::Fib) == "ids"
            })
            .unwrap();
        let make = |fiber: &ModelCat| {
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
            (fm, istruct)
        };
        let (fm, is_f) = make(trivial);
        let (gm, is_g) = make(ex44);
        let family = vec![Adjunction::identity(trivial.base().clone())];
        let (_, cert) = integrate_quillen_transformation(
            &fm,
            &is_f,
            &gm,
            &is_g,
            &family,
            QuillenMode::Adjunction,
        )
        .unwrap();
        assert!(cert.is_quillen);
        // The reverse direction is not Quillen: trivial cofibrations of the
        // ex44 structure are everything and land outside ids ∩ all.
        let family = vec![Adjunction::identity(trivial.base().clone())];
        let err = integrate_quillen_transformation(
            &gm,
            &is_g,
            &fm,
            &is_f,
            &family,
            QuillenMode::Adjunction,
        );
        assert!(err.is_err());
    }
}
