//! Injective and projective structures on the arrow category, compared
//! class-for-class against the integrated slice and coslice diagrams
//! through the canonical isomorphism.

use super::slice::{coslice_functor, join, meet, slice_functor};
use crate::fincat::{arrow, slice, coslice, FinCat, FinFunctor, MorId, MorOrigin, ObjId, ObjOrigin};
use crate::integral::{build_integral, BuildMode, IntegralStructure};
use crate::modelstruct::{ModelCat, PreModel};
use crate::report::ValidationReport;
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::rc::Rc;

/// Pullback of a weak equivalence along a fibration stays a weak
/// equivalence. Meets realize the pullbacks.
pub fn is_right_proper(mc: &ModelCat) -> bool {
    let c = mc.base();
    for w in c.morphisms().filter(|&m| mc.is_weq(m)) {
        for p in c.morphisms().filter(|&m| mc.is_fib(m)) {
            if c.target(w) != c.target(p) {
                continue;
            }
            let (a, cc) = (c.source(w), c.source(p));
            let Some(pullback) = meet(c, a, cc) else {
                return false;
            };
            let pulled = c.hom(pullback, cc)[0];
            if !mc.is_weq(pulled) {
                return false;
            }
        }
    }
    true
}

/// Pushout of a weak equivalence along a cofibration stays a weak
/// equivalence. Joins realize the pushouts.
pub fn is_left_proper(mc: &ModelCat) -> bool {
    let c = mc.base();
    for w in c.morphisms().filter(|&m| mc.is_weq(m)) {
        for i in c.morphisms().filter(|&m| mc.is_cof(m)) {
            if c.source(w) != c.source(i) {
                continue;
            }
            let (b, cc) = (c.target(w), c.target(i));
            let Some(pushout) = join(c, b, cc) else {
                return false;
            };
            let pushed = c.hom(cc, pushout)[0];
            if !mc.is_weq(pushed) {
                return false;
            }
        }
    }
    true
}

/// Both arrow-category structures, each defined directly, together with the
/// corresponding integral structure and the class-matching certificate
/// through the canonical isomorphism.
#[derive(Debug)]
pub struct ArrowStructures {
    pub arrow_cat: Rc<FinCat>,
    pub injective: PreModel,
    pub projective: PreModel,
    pub slice_integral: IntegralStructure,
    pub coslice_integral: IntegralStructure,
    /// Functor from the slice-integral total onto the arrow category.
    pub injective_iso: FinFunctor,
    pub projective_iso: FinFunctor,
    pub injective_match: ValidationReport,
    pub projective_match: ValidationReport,
}

/// Build everything. Right properness is demanded for the injective half,
/// left properness for the projective half.
pub fn arrow_structures(mc: &ModelCat, shape_bound: usize) -> Result<ArrowStructures> {
    if !is_right_proper(mc) {
        return Err(Error::Precondition(format!(
            "{} is not right proper; the slice diagram is not relative",
            mc.name
        )));
    }
    if !is_left_proper(mc) {
        return Err(Error::Precondition(format!(
            "{} is not left proper; the coslice diagram is not relative",
            mc.name
        )));
    }
    let base = mc.base().clone();
    let derived = arrow(&base)?;
    let arrow_cat = derived.cat.clone();

    // Direct injective structure: weak equivalences and cofibrations
    // levelwise, fibrations by the matching condition.
    let mut inj_weq = BTreeSet::new();
    let mut inj_cof = BTreeSet::new();
    let mut inj_fib = BTreeSet::new();
    let mut proj_weq = BTreeSet::new();
    let mut proj_cof = BTreeSet::new();
    let mut proj_fib = BTreeSet::new();
    for m in arrow_cat.morphisms() {
        let MorOrigin::Square(u, v) = derived.morphism_origin[m.0] else {
            unreachable!("arrow morphisms originate from squares");
        };
        let ObjOrigin::Mor(f) = derived.object_origin[arrow_cat.source(m).0] else {
            unreachable!()
        };
        let ObjOrigin::Mor(g) = derived.object_origin[arrow_cat.target(m).0] else {
            unreachable!()
        };
        if mc.is_weq(u) && mc.is_weq(v) {
            inj_weq.insert(m);
            proj_weq.insert(m);
        }
        if mc.is_cof(u) && mc.is_cof(v) {
            inj_cof.insert(m);
        }
        if mc.is_fib(u) && mc.is_fib(v) {
            proj_fib.insert(m);
        }
        // Injective fibration: v ∈ Fib and dom f → dom g ×_{cod g} cod f ∈ Fib.
        if mc.is_fib(v) {
            let matching = meet(&base, base.source(g), base.target(f))
                .ok_or_else(|| Error::Precondition("missing meet".into()))?;
            let induced = base.hom(base.source(f), matching)[0];
            if mc.is_fib(induced) {
                inj_fib.insert(m);
            }
        }
        // Projective cofibration: u ∈ Cof and cod f ⊔_{dom f} dom g → cod g ∈ Cof.
        if mc.is_cof(u) {
            let latching = join(&base, base.target(f), base.source(g))
                .ok_or_else(|| Error::Precondition("missing join".into()))?;
            let induced = base.hom(latching, base.target(g))[0];
            if mc.is_cof(induced) {
                proj_cof.insert(m);
            }
        }
    }
    let injective = PreModel::new(
        format!("{}^[1]{{inj}}", mc.name),
        arrow_cat.clone(),
        inj_weq,
        inj_cof,
        inj_fib,
    );
    let projective = PreModel::new(
        format!("{}^[1]{{proj}}", mc.name),
        arrow_cat.clone(),
        proj_weq,
        proj_cof,
        proj_fib,
    );

    let slice_fm = slice_functor(mc)?;
    let slice_integral = build_integral(&slice_fm, BuildMode::RequireProperRelative, shape_bound)?;
    let coslice_fm = coslice_functor(mc)?;
    let coslice_integral =
        build_integral(&coslice_fm, BuildMode::RequireProperRelative, shape_bound)?;

    let injective_iso = slice_total_to_arrow(&slice_integral, &arrow_cat, &base, true)?;
    let projective_iso = slice_total_to_arrow(&coslice_integral, &arrow_cat, &base, false)?;
    let injective_match = match_classes(
        "injective arrow structure",
        &slice_integral,
        &injective_iso,
        &injective,
    );
    let projective_match = match_classes(
        "projective arrow structure",
        &coslice_integral,
        &projective_iso,
        &projective,
    );
    Ok(ArrowStructures {
        arrow_cat,
        injective,
        projective,
        slice_integral,
        coslice_integral,
        injective_iso,
        projective_iso,
        injective_match,
        projective_match,
    })
}

/// The canonical functor from the integrated (co)slice total onto the arrow
/// category: `(A, x→A) ↦ (x→A)` for slices, `(A, A→x) ↦ (A→x)` for
/// coslices. Verified bijective and functorial.
fn slice_total_to_arrow(
    istruct: &IntegralStructure,
    arrow_cat: &Rc<FinCat>,
    base: &Rc<FinCat>,
    slice_side: bool,
) -> Result<FinFunctor> {
    let groth = istruct.groth();
    let total = istruct.total();
    // Recover the structure morphism of every fiber object via the
    // deterministic slice/coslice construction.
    let mut struct_mor: Vec<Vec<MorId>> = Vec::new();
    for a in base.objects() {
        let d = if slice_side {
            slice(base, a)?
        } else {
            coslice(base, a)?
        };
        struct_mor.push(
            d.object_origin
                .iter()
                .map(|o| match o {
                    ObjOrigin::Mor(f) => *f,
                    _ => unreachable!(),
                })
                .collect(),
        );
    }
    let object_map: Vec<ObjId> = total
        .objects()
        .map(|o| {
            let (a, x) = groth.obj_pair(o);
            ObjId(struct_mor[a.0][x.0].0)
        })
        .collect();
    let morphism_map: Vec<MorId> = total
        .morphisms()
        .map(|m| {
            let src = object_map[total.source(m).0];
            let tgt = object_map[total.target(m).0];
            let h = arrow_cat.hom(src, tgt);
            debug_assert_eq!(h.len(), 1, "arrow category of a poset is a poset");
            h[0]
        })
        .collect();
    let functor = FinFunctor::new(
        format!("{}≅arrow", istruct.name),
        total.clone(),
        arrow_cat.clone(),
        object_map,
        morphism_map,
    )?;
    let report = functor.validate();
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "canonical comparison is not a functor: {}",
            report.first().expect("non-empty")
        )));
    }
    // Bijectivity.
    let mut seen_obj = vec![false; arrow_cat.object_count()];
    for o in total.objects() {
        seen_obj[functor.apply_obj(o).0] = true;
    }
    let mut seen_mor = vec![false; arrow_cat.morphism_count()];
    for m in total.morphisms() {
        seen_mor[functor.apply_mor(m).0] = true;
    }
    if total.object_count() != arrow_cat.object_count()
        || total.morphism_count() != arrow_cat.morphism_count()
        || seen_obj.iter().any(|&b| !b)
        || seen_mor.iter().any(|&b| !b)
    {
        return Err(Error::Precondition(
            "canonical comparison is not bijective".into(),
        ));
    }
    Ok(functor)
}

fn match_classes(
    subject: &str,
    istruct: &IntegralStructure,
    iso: &FinFunctor,
    direct: &PreModel,
) -> ValidationReport {
    let mut report = ValidationReport::new(subject.to_string());
    let total = istruct.total();
    for m in total.morphisms() {
        let image = iso.apply_mor(m);
        for (label, integral_in, direct_in) in [
            ("weq", istruct.is_weq(m), direct.is_weq(image)),
            ("cof", istruct.is_cof(m), direct.is_cof(image)),
            ("fib", istruct.is_fib(m), direct.is_fib(image)),
        ] {
            if integral_in != direct_in {
                report.push(
                    format!("class-mismatch-{label}"),
                    format!(
                        "{}: integral={integral_in}, direct={direct_in}",
                        total.morphism_name(m)
                    ),
                );
            }
        }
    }
    report
}
