//! Relative (co)limits: lifts of cone extensions along a functor, computed
//! constructively through (co)Cartesian pushes into one fiber and certified
//! universal by enumerating every competing lift.

use super::cartesian::{cartesian_lift, cocartesian_lift};
use super::straighten::{factor_through_cartesian, factor_through_cocartesian};
use crate::fincat::{find_colimit, find_limit, CatBuilder, Cone, FinFunctor, MorId, ObjId};
use crate::{Error, Result};
use std::rc::Rc;

/// A relative (co)limit problem: a diagram `delta` into the total category
/// and an extension of `p ∘ delta` to a (co)cone in the base.
#[derive(Debug, Clone)]
pub struct RelativeDiagram {
    pub delta: FinFunctor,
    /// Base object under (resp. over) the cone point.
    pub base_apex: ObjId,
    /// Base legs: for colimits `ε(θ_i): p(δ(i)) → base_apex`, for limits the
    /// reverse direction.
    pub base_legs: Vec<MorId>,
}

/// A lift: an apex in the total category over the base apex, with total legs
/// projecting to the base legs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeCone {
    pub apex: ObjId,
    pub legs: Vec<MorId>,
}

impl RelativeDiagram {
    fn validate(&self, p: &FinFunctor, colimit_side: bool) -> Result<()> {
        let total = p.source();
        let base = p.target();
        if self.delta.target() != total {
            return Err(Error::CategoryMismatch("diagram lands outside total".into()));
        }
        let shape = self.delta.source();
        if self.base_legs.len() != shape.object_count() {
            return Err(Error::FunctorShape);
        }
        for i in shape.objects() {
            let leg = self.base_legs[i.0];
            let (want_src, want_tgt) = if colimit_side {
                (p.apply_obj(self.delta.apply_obj(i)), self.base_apex)
            } else {
                (self.base_apex, p.apply_obj(self.delta.apply_obj(i)))
            };
            if base.source(leg) != want_src || base.target(leg) != want_tgt {
                return Err(Error::Precondition(format!(
                    "base leg {} has wrong shape",
                    base.morphism_name(leg)
                )));
            }
        }
        // Cone legs must absorb the projected diagram arrows.
        for m in shape.morphisms() {
            let (i, j) = (shape.source(m), shape.target(m));
            let pm = p.apply_mor(self.delta.apply_mor(m));
            let ok = if colimit_side {
                base.compose(self.base_legs[j.0], pm) == Some(self.base_legs[i.0])
            } else {
                base.compose(pm, self.base_legs[i.0]) == Some(self.base_legs[j.0])
            };
            if !ok {
                return Err(Error::Precondition(format!(
                    "base cone does not commute at {}",
                    shape.morphism_name(m)
                )));
            }
        }
        Ok(())
    }
}

/// All strict lifts of the relative problem: total apexes over the base apex
/// together with total legs over the base legs, natural in the shape.
pub fn enumerate_relative_lifts(
    p: &FinFunctor,
    diagram: &RelativeDiagram,
    colimit_side: bool,
) -> Vec<RelativeCone> {
    let total = p.source();
    let mut out = Vec::new();
    for apex in total.objects() {
        if p.apply_obj(apex) != diagram.base_apex {
            continue;
        }
        let mut legs = Vec::new();
        collect_lift_legs(p, diagram, colimit_side, apex, &mut legs, &mut out);
    }
    out
}

fn collect_lift_legs(
    p: &FinFunctor,
    diagram: &RelativeDiagram,
    colimit_side: bool,
    apex: ObjId,
    legs: &mut Vec<MorId>,
    out: &mut Vec<RelativeCone>,
) {
    let total = p.source();
    let shape = diagram.delta.source();
    let i = legs.len();
    if i == shape.object_count() {
        out.push(RelativeCone {
            apex,
            legs: legs.clone(),
        });
        return;
    }
    let di = diagram.delta.apply_obj(ObjId(i));
    let candidates = if colimit_side {
        total.hom(di, apex)
    } else {
        total.hom(apex, di)
    };
    'cand: for leg in candidates {
        if p.apply_mor(leg) != diagram.base_legs[i] {
            continue;
        }
        for m in shape.morphisms() {
            let (a, b) = (shape.source(m).0, shape.target(m).0);
            let get = |k: usize| if k == i { Some(leg) } else { legs.get(k).copied() };
            let (Some(la), Some(lb)) = (get(a), get(b)) else {
                continue;
            };
            let dm = diagram.delta.apply_mor(m);
            let ok = if colimit_side {
                total.compose(lb, dm) == Some(la)
            } else {
                total.compose(dm, la) == Some(lb)
            };
            if !ok {
                continue 'cand;
            }
        }
        legs.push(leg);
        collect_lift_legs(p, diagram, colimit_side, apex, legs, out);
        legs.pop();
    }
}

fn lift_morphisms(
    p: &FinFunctor,
    from: &RelativeCone,
    to: &RelativeCone,
    colimit_side: bool,
) -> Vec<MorId> {
    let total = p.source();
    let base = p.target();
    let id_apex = base.identity(p.apply_obj(from.apex));
    let (src, tgt) = if colimit_side {
        (from.apex, to.apex)
    } else {
        (to.apex, from.apex)
    };
    total
        .hom(src, tgt)
        .into_iter()
        .filter(|&t| {
            p.apply_mor(t) == id_apex
                && from.legs.iter().zip(&to.legs).all(|(&fl, &tl)| {
                    if colimit_side {
                        total.compose(t, fl) == Some(tl)
                    } else {
                        total.compose(fl, t) == Some(tl)
                    }
                })
        })
        .collect()
}

/// Relative colimit: the initial lift. When `p` has the required coCartesian
/// lifts the constructive route is taken (push the diagram into the fiber
/// over the apex, take the fiber colimit); otherwise every lift is tried.
/// The result is always certified initial against the full enumeration and
/// `None` is returned when no initial lift exists.
pub fn relative_colimit(p: &FinFunctor, diagram: &RelativeDiagram) -> Result<Option<RelativeCone>> {
    diagram.validate(p, true)?;
    let candidate = constructive_relative(p, diagram, true)
        .or_else(|| first_universal_lift(p, diagram, true));
    Ok(candidate.filter(|c| is_universal_lift(p, diagram, c, true)))
}

/// Relative limit: the terminal lift, dually.
pub fn relative_limit(p: &FinFunctor, diagram: &RelativeDiagram) -> Result<Option<RelativeCone>> {
    diagram.validate(p, false)?;
    let candidate = constructive_relative(p, diagram, false)
        .or_else(|| first_universal_lift(p, diagram, false));
    Ok(candidate.filter(|c| is_universal_lift(p, diagram, c, false)))
}

fn is_universal_lift(
    p: &FinFunctor,
    diagram: &RelativeDiagram,
    candidate: &RelativeCone,
    colimit_side: bool,
) -> bool {
    enumerate_relative_lifts(p, diagram, colimit_side)
        .iter()
        .all(|other| lift_morphisms(p, candidate, other, colimit_side).len() == 1)
}

fn first_universal_lift(
    p: &FinFunctor,
    diagram: &RelativeDiagram,
    colimit_side: bool,
) -> Option<RelativeCone> {
    let lifts = enumerate_relative_lifts(p, diagram, colimit_side);
    lifts
        .iter()
        .find(|c| {
            lifts
                .iter()
                .all(|other| lift_morphisms(p, c, other, colimit_side).len() == 1)
        })
        .cloned()
}

/// The constructive route: push every diagram vertex along its base leg via
/// the chosen (co)Cartesian lift, land in the fiber over the apex, and take
/// the fiber (co)limit there.
fn constructive_relative(
    p: &FinFunctor,
    diagram: &RelativeDiagram,
    colimit_side: bool,
) -> Option<RelativeCone> {
    let total = p.source();
    let base = p.target();
    let shape = diagram.delta.source();
    // Chosen transport of each vertex into the apex fiber.
    let mut transports: Vec<MorId> = Vec::new();
    for i in shape.objects() {
        let di = diagram.delta.apply_obj(i);
        let leg = diagram.base_legs[i.0];
        let t = if colimit_side {
            cocartesian_lift(p, di, leg)?
        } else {
            cartesian_lift(p, di, leg)?
        };
        transports.push(t);
    }
    // The pushed diagram lives in the fiber over the apex; realize the fiber
    // as a standalone category.
    let fiber_objs: Vec<ObjId> = total
        .objects()
        .filter(|&x| p.apply_obj(x) == diagram.base_apex)
        .collect();
    let id_apex = base.identity(diagram.base_apex);
    let fiber_mors: Vec<MorId> = total
        .morphisms()
        .filter(|&m| p.apply_mor(m) == id_apex)
        .collect();
    let mut b = CatBuilder::new("apex-fiber");
    for &x in &fiber_objs {
        b.object(total.object_name(x));
    }
    let obj_of = |x: ObjId| ObjId(fiber_objs.iter().position(|&y| y == x).unwrap());
    let mor_local: Vec<MorId> = fiber_mors
        .iter()
        .map(|&m| b.morphism(total.morphism_name(m), obj_of(total.source(m)), obj_of(total.target(m))))
        .collect();
    for &x in &fiber_objs {
        let idx = fiber_mors.iter().position(|&m| m == total.identity(x)).unwrap();
        b.set_identity(obj_of(x), mor_local[idx]);
    }
    for (gi, &g) in fiber_mors.iter().enumerate() {
        for (fi, &f) in fiber_mors.iter().enumerate() {
            if total.target(f) == total.source(g) {
                let gf = total.compose(g, f)?;
                let k = fiber_mors.iter().position(|&m| m == gf)?;
                b.set_composite(mor_local[gi], mor_local[fi], mor_local[k]);
            }
        }
    }
    let fiber = Rc::new(b.build().ok()?);
    // Pushed diagram on the same shape.
    let pushed_obj: Vec<ObjId> = (0..shape.object_count())
        .map(|i| {
            let t = transports[i];
            let x = if colimit_side { total.target(t) } else { total.source(t) };
            obj_of(x)
        })
        .collect();
    let pushed_mor: Vec<MorId> = shape
        .morphisms()
        .map(|m| {
            let (i, j) = (shape.source(m).0, shape.target(m).0);
            let dm = diagram.delta.apply_mor(m);
            let transported = if colimit_side {
                // Unique factorization of transports[j] ∘ δ(m) through
                // transports[i].
                let psi = total.compose(transports[j], dm)?;
                factor_through_cocartesian(p, transports[i], psi, id_apex)?
            } else {
                let psi = total.compose(dm, transports[i])?;
                factor_through_cartesian(p, transports[j], psi, id_apex)?
            };
            let local = fiber_mors.iter().position(|&m2| m2 == transported)?;
            Some(mor_local[local])
        })
        .collect::<Option<Vec<_>>>()?;
    let pushed = FinFunctor::new(
        "pushed",
        shape.clone(),
        fiber.clone(),
        pushed_obj,
        pushed_mor,
    )
    .ok()?;
    let fiber_cone: Cone = if colimit_side {
        find_colimit(&pushed)?
    } else {
        find_limit(&pushed)?
    };
    let apex_total = fiber_objs[fiber_cone.apex.0];
    let legs: Vec<MorId> = (0..shape.object_count())
        .map(|i| {
            let local_leg = fiber_cone.legs[i];
            let total_leg = fiber_mors[mor_local.iter().position(|&m| m == local_leg).unwrap()];
            if colimit_side {
                total.compose(total_leg, transports[i]).unwrap()
            } else {
                total.compose(transports[i], total_leg).unwrap()
            }
        })
        .collect();
    Some(RelativeCone {
        apex: apex_total,
        legs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{chain, point, CatBuilder, FinFunctor};
    use crate::grothendieck::{integrate_cat, AdjCatFunctor};

    fn empty_shape() -> Rc<crate::fincat::FinCat> {
        Rc::new(CatBuilder::new("empty").build().unwrap())
    }

    #[test]
    fn empty_relative_colimit_is_fiber_initial() {
        // Constant chain2 over chain2: fiber over each object is chain2;
        // the empty diagram relative to apex A lifts initially to (A, 0).
        let c2 = chain(2);
        let f = AdjCatFunctor::constant("sq", c2.clone(), c2.clone());
        let g = integrate_cat(&f).unwrap();
        let p = g.projection();
        for apex in c2.objects() {
            let diagram = RelativeDiagram {
                delta: FinFunctor::new("d", empty_shape(), g.total().clone(), vec![], vec![])
                    .unwrap(),
                base_apex: apex,
                base_legs: vec![],
            };
            let lift = relative_colimit(p, &diagram).unwrap().unwrap();
            let (a, x) = g.obj_pair(lift.apex);
            assert_eq!(a, apex);
            assert_eq!(c2.object_name(x), "0");
            let colift = relative_limit(p, &diagram).unwrap().unwrap();
            let (_, x) = g.obj_pair(colift.apex);
            assert_eq!(c2.object_name(x), "1");
        }
    }

    #[test]
    fn point_diagram_pushes_forward() {
        // 3-chain total over chain2: δ = {(1,0)}, ε(*) = 1 → apex (1,0).
        let c2 = chain(2);
        let pt = point("pt");
        let left = FinFunctor::constant(pt.clone(), c2.clone(), crate::fincat::ObjId(0));
        let right = FinFunctor::constant(c2.clone(), pt.clone(), crate::fincat::ObjId(0));
        let adj = crate::adjunction::complete_adjunction("incl", left, right).unwrap();
        let fibers = vec![pt.clone(), c2.clone()];
        let on_arrow = vec![
            crate::adjunction::Adjunction::identity(pt.clone()),
            crate::adjunction::Adjunction::identity(c2.clone()),
            adj,
        ];
        let f = AdjCatFunctor::strict("pointed", c2.clone(), fibers, on_arrow).unwrap();
        let g = integrate_cat(&f).unwrap();
        let one = c2.object_by_name("1").unwrap();
        let target_obj = g
            .pair_obj(one, c2.object_by_name("0").unwrap())
            .unwrap();
        let shape = point("shape");
        let delta = FinFunctor::new(
            "d",
            shape.clone(),
            g.total().clone(),
            vec![target_obj],
            vec![g.total().identity(target_obj)],
        )
        .unwrap();
        let diagram = RelativeDiagram {
            delta,
            base_apex: one,
            base_legs: vec![c2.identity(one)],
        };
        let lift = relative_colimit(g.projection(), &diagram).unwrap().unwrap();
        assert_eq!(lift.apex, target_obj);
    }
}
