//! Straightening: recover a diagram of adjunctions from a certified
//! biCartesian fibration by extracting fibers and reading the adjunctions
//! off canonically chosen lifts.

use super::cartesian::{cartesian_lift, check_bicartesian, cocartesian_lift};
use super::AdjCatFunctor;
use crate::adjunction::Adjunction;
use crate::fincat::{CatBuilder, FinCat, FinFunctor, MorId, NatTrans, ObjId};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::rc::Rc;

/// The result of straightening: the diagram of adjunctions plus the
/// embedding of each fiber back into the total category.
#[derive(Debug, Clone)]
pub struct Straightened {
    pub functor: AdjCatFunctor,
    /// Per base object: fiber object index → total object.
    pub fiber_obj_to_total: Vec<Vec<ObjId>>,
    /// Per base object: fiber morphism index → total morphism.
    pub fiber_mor_to_total: Vec<Vec<MorId>>,
}

impl Straightened {
    pub fn total_obj(&self, base_obj: ObjId, fiber_obj: ObjId) -> ObjId {
        self.fiber_obj_to_total[base_obj.0][fiber_obj.0]
    }

    pub fn total_mor(&self, base_obj: ObjId, fiber_mor: MorId) -> MorId {
        self.fiber_mor_to_total[base_obj.0][fiber_mor.0]
    }

    pub fn fiber_obj_of_total(&self, base_obj: ObjId, total: ObjId) -> Option<ObjId> {
        self.fiber_obj_to_total[base_obj.0]
            .iter()
            .position(|&t| t == total)
            .map(ObjId)
    }

    pub fn fiber_mor_of_total(&self, base_obj: ObjId, total: MorId) -> Option<MorId> {
        self.fiber_mor_to_total[base_obj.0]
            .iter()
            .position(|&t| t == total)
            .map(MorId)
    }
}

/// The unique `γ: y → v` with `γ ∘ phi = psi` and `p(γ) = g`, for a
/// coCartesian `phi: x → y`.
pub(crate) fn factor_through_cocartesian(
    p: &FinFunctor,
    phi: MorId,
    psi: MorId,
    g: MorId,
) -> Option<MorId> {
    let d = p.source();
    let y = d.target(phi);
    let v = d.target(psi);
    let mut found = None;
    for gamma in d.hom(y, v) {
        if d.compose(gamma, phi) == Some(psi) && p.apply_mor(gamma) == g {
            if found.is_some() {
                return None;
            }
            found = Some(gamma);
        }
    }
    found
}

/// The unique `γ: u → x` with `phi ∘ γ = psi` and `p(γ) = g`, for a
/// Cartesian `phi: x → y`.
pub(crate) fn factor_through_cartesian(
    p: &FinFunctor,
    phi: MorId,
    psi: MorId,
    g: MorId,
) -> Option<MorId> {
    let d = p.source();
    let x = d.source(phi);
    let u = d.source(psi);
    let mut found = None;
    for gamma in d.hom(u, x) {
        if d.compose(phi, gamma) == Some(psi) && p.apply_mor(gamma) == g {
            if found.is_some() {
                return None;
            }
            found = Some(gamma);
        }
    }
    found
}

struct FiberData {
    cat: Rc<FinCat>,
    obj_to_total: Vec<ObjId>,
    mor_to_total: Vec<MorId>,
    obj_of_total: BTreeMap<ObjId, ObjId>,
    mor_of_total: BTreeMap<MorId, MorId>,
}

fn extract_fiber(p: &FinFunctor, a: ObjId) -> Result<FiberData> {
    let d = p.source();
    let c = p.target();
    let mut b = CatBuilder::new(format!("{}|{}", d.name(), c.object_name(a)));
    let obj_to_total: Vec<ObjId> = d.objects().filter(|&x| p.apply_obj(x) == a).collect();
    let mut obj_of_total = BTreeMap::new();
    for (i, &t) in obj_to_total.iter().enumerate() {
        b.object(d.object_name(t));
        obj_of_total.insert(t, ObjId(i));
    }
    let id_a = c.identity(a);
    let mor_to_total: Vec<MorId> = d.morphisms().filter(|&m| p.apply_mor(m) == id_a).collect();
    let mut mor_of_total = BTreeMap::new();
    for (i, &t) in mor_to_total.iter().enumerate() {
        b.morphism(
            d.morphism_name(t),
            obj_of_total[&d.source(t)],
            obj_of_total[&d.target(t)],
        );
        mor_of_total.insert(t, MorId(i));
    }
    for &t in &obj_to_total {
        b.set_identity(obj_of_total[&t], mor_of_total[&d.identity(t)]);
    }
    for &g in &mor_to_total {
        for &f in &mor_to_total {
            if d.target(f) == d.source(g) {
                let gf = d.compose(g, f).ok_or_else(|| {
                    Error::CategoryMismatch("fiber composite missing".into())
                })?;
                b.set_composite(mor_of_total[&g], mor_of_total[&f], mor_of_total[&gf]);
            }
        }
    }
    Ok(FiberData {
        cat: Rc::new(b.build()?),
        obj_to_total,
        mor_to_total,
        obj_of_total,
        mor_of_total,
    })
}

/// Bicompleteness of every fiber category of `p`, at the given shape bound.
pub fn check_bicomplete_fibers(
    p: &FinFunctor,
    shape_bound: usize,
) -> crate::report::ValidationReport {
    let mut report =
        crate::report::ValidationReport::new(format!("fiber bicompleteness of {}", p.name));
    for a in p.target().objects() {
        match extract_fiber(p, a) {
            Ok(fiber) => {
                for v in crate::modelstruct::check_bicomplete(&fiber.cat, shape_bound) {
                    report.push(
                        format!("fiber-{}-{}", p.target().object_name(a), v.rule),
                        v.witness,
                    );
                }
            }
            Err(e) => report.push("fiber-extraction", e.to_string()),
        }
    }
    report
}

/// Straighten a certified biCartesian fibration. Fibers are the literal
/// fiber categories; each `f_! ⊣ f^*` is extracted from the least valid
/// lifts in canonical morphism order, and the coherence cells come from the
/// uniqueness factorizations.
pub fn straighten_cat(p: &FinFunctor, name: impl Into<String>) -> Result<Straightened> {
    let cert = check_bicartesian(p);
    if !cert.passed() {
        return Err(Error::Precondition(format!(
            "not a biCartesian fibration: {}",
            cert.first().expect("non-empty")
        )));
    }
    let d = p.source();
    let c = p.target();
    let fibers: Vec<FiberData> = c
        .objects()
        .map(|a| extract_fiber(p, a))
        .collect::<Result<Vec<_>>>()?;

    // Chosen lifts: coc[f][x-in-fiber] and car[f][y-in-fiber].
    let mut coc: Vec<Vec<MorId>> = Vec::new();
    let mut car: Vec<Vec<MorId>> = Vec::new();
    for f in c.morphisms() {
        let (a, bb) = (c.source(f), c.target(f));
        coc.push(
            fibers[a.0]
                .obj_to_total
                .iter()
                .map(|&x| cocartesian_lift(p, x, f).expect("certified"))
                .collect(),
        );
        car.push(
            fibers[bb.0]
                .obj_to_total
                .iter()
                .map(|&y| cartesian_lift(p, y, f).expect("certified"))
                .collect(),
        );
    }

    let mut on_arrow = Vec::new();
    for f in c.morphisms() {
        let (a, bb) = (c.source(f), c.target(f));
        let fib_a = &fibers[a.0];
        let fib_b = &fibers[bb.0];
        // Left functor on objects: target of the chosen coCartesian lift.
        let left_obj: Vec<ObjId> = fib_a
            .obj_to_total
            .iter()
            .enumerate()
            .map(|(x, _)| fib_b.obj_of_total[&d.target(coc[f.0][x])])
            .collect();
        // Left functor on fiber morphisms by unique factorization.
        let id_b = c.identity(bb);
        let left_mor: Vec<MorId> = fib_a
            .mor_to_total
            .iter()
            .map(|&alpha| {
                let x = fib_a.obj_of_total[&d.source(alpha)];
                let x2 = fib_a.obj_of_total[&d.target(alpha)];
                let psi = d
                    .compose(coc[f.0][x2.0], alpha)
                    .expect("lift composes with fiber morphism");
                let gamma = factor_through_cocartesian(p, coc[f.0][x.0], psi, id_b)
                    .expect("coCartesian factorization");
                fib_b.mor_of_total[&gamma]
            })
            .collect();
        let left = FinFunctor::new(
            format!("({})_!", c.morphism_name(f)),
            fib_a.cat.clone(),
            fib_b.cat.clone(),
            left_obj,
            left_mor,
        )?;
        // Right functor dually through Cartesian lifts.
        let right_obj: Vec<ObjId> = fib_b
            .obj_to_total
            .iter()
            .enumerate()
            .map(|(y, _)| fib_a.obj_of_total[&d.source(car[f.0][y])])
            .collect();
        let id_a = c.identity(a);
        let right_mor: Vec<MorId> = fib_b
            .mor_to_total
            .iter()
            .map(|&beta| {
                let y = fib_b.obj_of_total[&d.source(beta)];
                let psi = d
                    .compose(beta, car[f.0][y.0])
                    .expect("fiber morphism composes with lift");
                let y2 = fib_b.obj_of_total[&d.target(beta)];
                let gamma = factor_through_cartesian(p, car[f.0][y2.0], psi, id_a)
                    .expect("Cartesian factorization");
                fib_a.mor_of_total[&gamma]
            })
            .collect();
        let right = FinFunctor::new(
            format!("({})^*", c.morphism_name(f)),
            fib_b.cat.clone(),
            fib_a.cat.clone(),
            right_obj,
            right_mor,
        )?;
        // Unit at x: factor the coCartesian lift through the Cartesian one.
        let unit: Vec<MorId> = fib_a
            .obj_to_total
            .iter()
            .enumerate()
            .map(|(x, _)| {
                let fx = fib_b.obj_of_total[&d.target(coc[f.0][x])];
                let gamma = factor_through_cartesian(p, car[f.0][fx.0], coc[f.0][x], id_a)
                    .expect("unit factorization");
                fib_a.mor_of_total[&gamma]
            })
            .collect();
        // Counit at y: factor the Cartesian lift through the coCartesian one.
        let counit: Vec<MorId> = fib_b
            .obj_to_total
            .iter()
            .enumerate()
            .map(|(y, _)| {
                let fy = fib_a.obj_of_total[&d.source(car[f.0][y])];
                let gamma = factor_through_cocartesian(p, coc[f.0][fy.0], car[f.0][y], id_b)
                    .expect("counit factorization");
                fib_b.mor_of_total[&gamma]
            })
            .collect();
        let adj = Adjunction::new(
            format!("({})_!⊣({})^*", c.morphism_name(f), c.morphism_name(f)),
            left,
            right,
            unit,
            counit,
        )?;
        on_arrow.push(adj);
    }

    // Coherence cells by factorization.
    let mut comp_iso = BTreeMap::new();
    for g in c.morphisms() {
        for f in c.morphisms() {
            let Some(gf) = c.compose(g, f) else { continue };
            let (a, bb) = (c.source(f), c.target(f));
            let cc = c.target(g);
            let fib_a = &fibers[a.0];
            let components: Vec<MorId> = fib_a
                .obj_to_total
                .iter()
                .enumerate()
                .map(|(x, _)| {
                    // (gf)_! x → g_! f_! x over id: factor λ_{g,f_!x} ∘ λ_{f,x}
                    // through λ_{gf,x}.
                    let fx = fibers[bb.0].obj_of_total[&d.target(coc[f.0][x])];
                    let two_step = d
                        .compose(coc[g.0][fx.0], coc[f.0][x])
                        .expect("lifts compose");
                    let gamma = factor_through_cocartesian(
                        p,
                        coc[gf.0][x],
                        two_step,
                        c.identity(cc),
                    )
                    .expect("composite factorization");
                    fibers[cc.0].mor_of_total[&gamma]
                })
                .collect();
            let source = on_arrow[gf.0].left().clone();
            let target = on_arrow[g.0].left().compose(on_arrow[f.0].left())?;
            comp_iso.insert(
                (g, f),
                NatTrans::new(
                    format!("α({},{})", c.morphism_name(g), c.morphism_name(f)),
                    source,
                    target,
                    components,
                )?,
            );
        }
    }
    let mut id_iso = Vec::new();
    for a in c.objects() {
        let fib_a = &fibers[a.0];
        let components: Vec<MorId> = fib_a
            .obj_to_total
            .iter()
            .enumerate()
            .map(|(x, _)| fib_a.mor_of_total[&coc[c.identity(a).0][x]])
            .collect();
        id_iso.push(NatTrans::new(
            format!("ι({})", c.object_name(a)),
            FinFunctor::identity(fib_a.cat.clone()),
            on_arrow[c.identity(a).0].left().clone(),
            components,
        )?);
    }

    let functor = AdjCatFunctor::new(
        name,
        c.clone(),
        fibers.iter().map(|f| f.cat.clone()).collect(),
        on_arrow,
        comp_iso,
        id_iso,
    )?;
    let coherence = functor.validate();
    if !coherence.passed() {
        return Err(Error::Coherence(format!(
            "straightened data fails validation: {}",
            coherence.first().expect("non-empty")
        )));
    }
    Ok(Straightened {
        functor,
        fiber_obj_to_total: fibers.iter().map(|f| f.obj_to_total.clone()).collect(),
        fiber_mor_to_total: fibers.iter().map(|f| f.mor_to_total.clone()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{chain, product, FinFunctor};

    #[test]
    fn identity_fibration_straightens_to_points() {
        let c2 = chain(2);
        let s = straighten_cat(&FinFunctor::identity(c2.clone()), "id").unwrap();
        for a in c2.objects() {
            assert_eq!(s.functor.fiber(a).object_count(), 1);
        }
    }

    #[test]
    fn product_projection_straightens_to_constant() {
        let c2 = chain(2);
        let prod = product(&c2, &c2).unwrap();
        let s = straighten_cat(&prod.projections[0], "fst").unwrap();
        for a in c2.objects() {
            assert_eq!(s.functor.fiber(a).object_count(), 2);
        }
        // Every on-arrow adjunction is an isomorphism of fibers here.
        for f in c2.morphisms() {
            assert!(s.functor.on_arrow(f).validate().passed());
        }
    }
}
