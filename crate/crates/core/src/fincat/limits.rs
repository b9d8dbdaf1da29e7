//! Exhaustive (co)limit search: enumerate every cone over a finite diagram
//! and certify one as limiting by checking unique factorization against all
//! competitors.

use super::{FinCat, FinFunctor, MorId, ObjId};
use crate::report::ValidationReport;

/// A cone (or cocone): an apex with one leg per object of the diagram shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub apex: ObjId,
    pub legs: Vec<MorId>,
}

/// A diagram packaged with a candidate cone, validated as a unit.
#[derive(Debug, Clone)]
pub struct DiagramWithCone {
    pub diagram: FinFunctor,
    pub cone: Cone,
    /// `true` for cones (legs out of the apex), `false` for cocones.
    pub is_limit_side: bool,
}

impl DiagramWithCone {
    /// Leg shapes plus commutation with every diagram arrow.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new("diagram cone");
        let shape = self.diagram.source();
        let c = self.diagram.target();
        if self.cone.legs.len() != shape.object_count() {
            report.push("legs", "wrong number of legs");
            return report;
        }
        for i in shape.objects() {
            let leg = self.cone.legs[i.0];
            let (want_src, want_tgt) = if self.is_limit_side {
                (self.cone.apex, self.diagram.apply_obj(i))
            } else {
                (self.diagram.apply_obj(i), self.cone.apex)
            };
            if c.source(leg) != want_src || c.target(leg) != want_tgt {
                report.push("leg-shape", shape.object_name(i).to_string());
            }
        }
        for m in shape.morphisms() {
            let (i, j) = (shape.source(m), shape.target(m));
            let ok = if self.is_limit_side {
                c.compose(self.diagram.apply_mor(m), self.cone.legs[i.0])
                    == Some(self.cone.legs[j.0])
            } else {
                c.compose(self.cone.legs[j.0], self.diagram.apply_mor(m))
                    == Some(self.cone.legs[i.0])
            };
            if !ok {
                report.push("leg-commutation", shape.morphism_name(m).to_string());
            }
        }
        report
    }
}

fn all_cones(diagram: &FinFunctor, limit_side: bool) -> Vec<Cone> {
    let shape = diagram.source();
    let c = diagram.target();
    let mut out = Vec::new();
    for apex in c.objects() {
        let mut legs: Vec<MorId> = Vec::with_capacity(shape.object_count());
        collect_legs(diagram, limit_side, apex, &mut legs, &mut out);
    }
    out
}

fn collect_legs(
    diagram: &FinFunctor,
    limit_side: bool,
    apex: ObjId,
    legs: &mut Vec<MorId>,
    out: &mut Vec<Cone>,
) {
    let shape = diagram.source();
    let c = diagram.target();
    let i = legs.len();
    if i == shape.object_count() {
        out.push(Cone {
            apex,
            legs: legs.clone(),
        });
        return;
    }
    let candidates = if limit_side {
        c.hom(apex, diagram.apply_obj(ObjId(i)))
    } else {
        c.hom(diagram.apply_obj(ObjId(i)), apex)
    };
    'cand: for leg in candidates {
        // Check commutation with every shape arrow whose endpoints are both
        // already assigned.
        for m in shape.morphisms() {
            let (a, b) = (shape.source(m).0, shape.target(m).0);
            let get = |k: usize| if k == i { Some(leg) } else { legs.get(k).copied() };
            let (Some(la), Some(lb)) = (get(a), get(b)) else {
                continue;
            };
            let ok = if limit_side {
                c.compose(diagram.apply_mor(m), la) == Some(lb)
            } else {
                c.compose(lb, diagram.apply_mor(m)) == Some(la)
            };
            if !ok {
                continue 'cand;
            }
        }
        legs.push(leg);
        collect_legs(diagram, limit_side, apex, legs, out);
        legs.pop();
    }
}

fn factorizations(c: &FinCat, limit_side: bool, from: &Cone, to: &Cone) -> Vec<MorId> {
    // For limits: mediating u: from.apex → to.apex with to.legs ∘ u = from.legs.
    // For colimits: u: to.apex → from.apex with u ∘ to.legs = from.legs.
    let candidates = if limit_side {
        c.hom(from.apex, to.apex)
    } else {
        c.hom(to.apex, from.apex)
    };
    candidates
        .into_iter()
        .filter(|&u| {
            to.legs.iter().zip(&from.legs).all(|(&tl, &fl)| {
                if limit_side {
                    c.compose(tl, u) == Some(fl)
                } else {
                    c.compose(u, tl) == Some(fl)
                }
            })
        })
        .collect()
}

/// Search for a limiting cone: the first cone in canonical order through
/// which every competing cone factors uniquely.
pub fn find_limit(diagram: &FinFunctor) -> Option<Cone> {
    find_universal(diagram, true)
}

/// Dually, a colimiting cocone.
pub fn find_colimit(diagram: &FinFunctor) -> Option<Cone> {
    find_universal(diagram, false)
}

fn find_universal(diagram: &FinFunctor, limit_side: bool) -> Option<Cone> {
    let cones = all_cones(diagram, limit_side);
    let c = diagram.target();
    cones.iter().position(|candidate| {
        cones
            .iter()
            .all(|other| factorizations(c, limit_side, other, candidate).len() == 1)
    }).map(|i| cones[i].clone())
}

/// All cones over the diagram, exposed for universality cross-checks.
pub fn enumerate_cones(diagram: &FinFunctor, limit_side: bool) -> Vec<Cone> {
    all_cones(diagram, limit_side)
}
