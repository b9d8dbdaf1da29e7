//! Model fibrations: relative model categories whose projection is a
//! biCartesian fibration reflecting weak equivalences from the base at
//! relatively (co)fibrant objects.

use super::relmodel::check_relative_model;
use super::FibrationCandidate;
use crate::fincat::{find_colimit, find_limit, CatBuilder, FinCat, FinFunctor, MorId, ObjId};
use crate::grothendieck::{check_bicartesian, classify_cartesian};
use crate::report::ValidationReport;
use std::rc::Rc;

/// The fiber of `pi` over `a`, realized as a standalone category with maps
/// back to the total.
pub(crate) struct Fiber {
    pub cat: Rc<FinCat>,
    pub obj_to_total: Vec<ObjId>,
    pub mor_to_total: Vec<MorId>,
}

pub(crate) fn fiber_over(pi: &FinFunctor, a: ObjId) -> Fiber {
    let n = pi.source();
    let mut b = CatBuilder::new(format!("{}|{}", n.name(), pi.target().object_name(a)));
    let obj_to_total: Vec<ObjId> = n.objects().filter(|&x| pi.apply_obj(x) == a).collect();
    for &t in &obj_to_total {
        b.object(n.object_name(t));
    }
    let obj_of = |x: ObjId| ObjId(obj_to_total.iter().position(|&y| y == x).unwrap());
    let id_a = pi.target().identity(a);
    let mor_to_total: Vec<MorId> = n.morphisms().filter(|&m| pi.apply_mor(m) == id_a).collect();
    let mut local = std::collections::BTreeMap::new();
    for (i, &t) in mor_to_total.iter().enumerate() {
        b.morphism(n.morphism_name(t), obj_of(n.source(t)), obj_of(n.target(t)));
        local.insert(t, MorId(i));
    }
    for &t in &obj_to_total {
        b.set_identity(obj_of(t), local[&n.identity(t)]);
    }
    for &g in &mor_to_total {
        for &f in &mor_to_total {
            if n.target(f) == n.source(g) {
                if let Some(gf) = n.compose(g, f) {
                    if let Some(&lgf) = local.get(&gf) {
                        b.set_composite(local[&g], local[&f], lgf);
                    }
                }
            }
        }
    }
    Fiber {
        cat: Rc::new(b.build().expect("fiber is structurally sound")),
        obj_to_total,
        mor_to_total,
    }
}

/// An object is π-cofibrant when the unique fiber map from the fiber's
/// initial object into it is an upstairs cofibration. `None` when the fiber
/// has no initial object.
pub fn pi_cofibrant(fc: &FibrationCandidate, x: ObjId) -> Option<bool> {
    let pi = fc.pi();
    let a = pi.apply_obj(x);
    let fiber = fiber_over(pi, a);
    let empty = Rc::new(CatBuilder::new("empty").build().expect("empty builds"));
    let d = FinFunctor::new("d", empty, fiber.cat.clone(), vec![], vec![]).ok()?;
    let initial = find_colimit(&d)?;
    let local_x = ObjId(fiber.obj_to_total.iter().position(|&t| t == x)?);
    let hom = fiber.cat.hom(initial.apex, local_x);
    let map = fiber.mor_to_total[hom.first()?.0];
    Some(fc.upstairs().is_cof(map))
}

/// Dually for π-fibrant objects via the fiber's terminal object.
pub fn pi_fibrant(fc: &FibrationCandidate, x: ObjId) -> Option<bool> {
    let pi = fc.pi();
    let a = pi.apply_obj(x);
    let fiber = fiber_over(pi, a);
    let empty = Rc::new(CatBuilder::new("empty").build().expect("empty builds"));
    let d = FinFunctor::new("d", empty, fiber.cat.clone(), vec![], vec![]).ok()?;
    let terminal = find_limit(&d)?;
    let local_x = ObjId(fiber.obj_to_total.iter().position(|&t| t == x)?);
    let hom = fiber.cat.hom(local_x, terminal.apex);
    let map = fiber.mor_to_total[hom.first()?.0];
    Some(fc.upstairs().is_fib(map))
}

/// Check the model-fibration conditions: the relative-model axioms, a
/// biCartesian underlying functor, and reflection of base weak equivalences
/// along (co)Cartesian morphisms with relatively (co)fibrant ends.
pub fn check_model_fibration(fc: &FibrationCandidate, shape_bound: usize) -> ValidationReport {
    let mut report = ValidationReport::new(format!("model fibration {}", fc.name));
    report.merge(check_relative_model(fc, shape_bound));
    let bicart = check_bicartesian(fc.pi());
    if !bicart.passed() {
        for v in bicart.violations {
            report.push(format!("bicartesian-{}", v.rule), v.witness);
        }
        return report;
    }
    let n = fc.pi().source();
    for f in n.morphisms() {
        if !fc.downstairs().is_weq(fc.pi().apply_mor(f)) || fc.upstairs().is_weq(f) {
            continue;
        }
        let flags = classify_cartesian(fc.pi(), f);
        if flags.cocartesian && pi_cofibrant(fc, n.source(f)) == Some(true) {
            report.push(
                "cocartesian-weq-reflection",
                format!(
                    "{} is coCartesian from a relatively cofibrant object over a weak equivalence but is not one",
                    n.morphism_name(f)
                ),
            );
        }
        if flags.cartesian && pi_fibrant(fc, n.target(f)) == Some(true) {
            report.push(
                "cartesian-weq-reflection",
                format!(
                    "{} is Cartesian into a relatively fibrant object over a weak equivalence but is not one",
                    n.morphism_name(f)
                ),
            );
        }
    }
    report
}

/// Two consequences of (co)Cartesian factorization in a model fibration,
/// asserted exhaustively:
/// 1. when the projection is right (left) Quillen, every (co)Cartesian
///    morphism over a (trivial) cofibration (fibration) is one upstairs;
/// 2. squares with (co)Cartesian horizontal edges transfer (trivial)
///    cofibrations (fibrations) from the left edge to the right whenever
///    the right edge's image is one.
pub fn check_cartesian_lemmas(fc: &FibrationCandidate) -> ValidationReport {
    let mut report = ValidationReport::new(format!("cartesian lemmas for {}", fc.name));
    let n = fc.pi().source();
    let pi = fc.pi();
    let right_quillen = crate::modelstruct::preserves_fib_trivfib(pi, fc.upstairs(), fc.downstairs()).is_ok();
    let left_quillen = crate::modelstruct::preserves_cof_trivcof(pi, fc.upstairs(), fc.downstairs()).is_ok();
    let flags: Vec<crate::grothendieck::CartesianFlags> = n
        .morphisms()
        .map(|m| classify_cartesian(pi, m))
        .collect();
    for phi in n.morphisms() {
        if right_quillen && flags[phi.0].cocartesian {
            let image = pi.apply_mor(phi);
            if fc.downstairs().is_cof(image) && !fc.upstairs().is_cof(phi) {
                report.push("cocartesian-over-cof", n.morphism_name(phi).to_string());
            }
            if fc.downstairs().is_triv_cof(image) && !fc.upstairs().is_triv_cof(phi) {
                report.push(
                    "cocartesian-over-trivcof",
                    n.morphism_name(phi).to_string(),
                );
            }
        }
        if left_quillen && flags[phi.0].cartesian {
            let image = pi.apply_mor(phi);
            if fc.downstairs().is_fib(image) && !fc.upstairs().is_fib(phi) {
                report.push("cartesian-over-fib", n.morphism_name(phi).to_string());
            }
            if fc.downstairs().is_triv_fib(image) && !fc.upstairs().is_triv_fib(phi) {
                report.push("cartesian-over-trivfib", n.morphism_name(phi).to_string());
            }
        }
    }
    // Square transfer: ψ: X → Y, η: X' → Y' coCartesian, φ: X → X',
    // φ': Y → Y' with η ∘ φ = φ' ∘ ψ.
    for psi in n.morphisms() {
        if !flags[psi.0].cocartesian {
            continue;
        }
        for eta in n.morphisms() {
            if !flags[eta.0].cocartesian {
                continue;
            }
            for phi in n.hom(n.source(psi), n.source(eta)) {
                for phi2 in n.hom(n.target(psi), n.target(eta)) {
                    if n.compose(eta, phi) != n.compose(phi2, psi)
                        || n.compose(eta, phi).is_none()
                    {
                        continue;
                    }
                    let image2 = pi.apply_mor(phi2);
                    if fc.upstairs().is_cof(phi)
                        && fc.downstairs().is_cof(image2)
                        && !fc.upstairs().is_cof(phi2)
                    {
                        report.push(
                            "square-transfer-cof",
                            format!(
                                "ψ={}, η={}, φ={}, φ'={}",
                                n.morphism_name(psi),
                                n.morphism_name(eta),
                                n.morphism_name(phi),
                                n.morphism_name(phi2)
                            ),
                        );
                    }
                    if fc.upstairs().is_triv_cof(phi)
                        && fc.downstairs().is_triv_cof(image2)
                        && !fc.upstairs().is_triv_cof(phi2)
                    {
                        report.push(
                            "square-transfer-trivcof",
                            format!(
                                "ψ={}, η={}, φ={}, φ'={}",
                                n.morphism_name(psi),
                                n.morphism_name(eta),
                                n.morphism_name(phi),
                                n.morphism_name(phi2)
                            ),
                        );
                    }
                }
            }
        }
        // The dual square transfer runs over Cartesian edges.
    }
    for psi in n.morphisms() {
        if !flags[psi.0].cartesian {
            continue;
        }
        for eta in n.morphisms() {
            if !flags[eta.0].cartesian {
                continue;
            }
            for phi in n.hom(n.source(psi), n.source(eta)) {
                for phi2 in n.hom(n.target(psi), n.target(eta)) {
                    if n.compose(eta, phi) != n.compose(phi2, psi)
                        || n.compose(eta, phi).is_none()
                    {
                        continue;
                    }
                    let image = pi.apply_mor(phi);
                    if fc.upstairs().is_fib(phi2)
                        && fc.downstairs().is_fib(image)
                        && !fc.upstairs().is_fib(phi)
                    {
                        report.push(
                            "square-transfer-fib",
                            format!(
                                "ψ={}, η={}, φ={}, φ'={}",
                                n.morphism_name(psi),
                                n.morphism_name(eta),
                                n.morphism_name(phi),
                                n.morphism_name(phi2)
                            ),
                        );
                    }
                    if fc.upstairs().is_triv_fib(phi2)
                        && fc.downstairs().is_triv_fib(image)
                        && !fc.upstairs().is_triv_fib(phi)
                    {
                        report.push(
                            "square-transfer-trivfib",
                            format!(
                                "ψ={}, η={}, φ={}, φ'={}",
                                n.morphism_name(psi),
                                n.morphism_name(eta),
                                n.morphism_name(phi),
                                n.morphism_name(phi2)
                            ),
                        );
                    }
                }
            }
        }
    }
    report
}

/// A model fibration's projection is both left and right Quillen, with the
/// fiberwise initial and terminal objects as its adjoints.
pub fn check_projection_quillen(fc: &FibrationCandidate) -> ValidationReport {
    let mut report = ValidationReport::new(format!("projection Quillen for {}", fc.name));
    if let Err(e) =
        crate::modelstruct::preserves_cof_trivcof(fc.pi(), fc.upstairs(), fc.downstairs())
    {
        report.push("projection-left-quillen", e);
    }
    if let Err(e) =
        crate::modelstruct::preserves_fib_trivfib(fc.pi(), fc.upstairs(), fc.downstairs())
    {
        report.push("projection-right-quillen", e);
    }
    let m = fc.pi().target();
    // Left adjoint A ↦ ∅_A.
    let mut initials = Vec::new();
    let mut terminals = Vec::new();
    for a in m.objects() {
        let fiber = fiber_over(fc.pi(), a);
        let initial = fiber
            .cat
            .initial_object()
            .map(|o| fiber.obj_to_total[o.0]);
        let terminal = fiber
            .cat
            .terminal_object()
            .map(|o| fiber.obj_to_total[o.0]);
        match (initial, terminal) {
            (Some(i), Some(t)) => {
                initials.push(i);
                terminals.push(t);
            }
            _ => {
                report.push("fiber-extremes", m.object_name(a).to_string());
                return report;
            }
        }
    }
    let initial_functor = functor_from_objects(fc.pi(), &initials, "fiber-initial");
    match initial_functor {
        Some(left) => {
            if crate::adjunction::complete_adjunction("∅⊣π", left, fc.pi().clone()).is_none() {
                report.push("initial-left-adjoint", "fiberwise initials are not left adjoint to the projection");
            }
        }
        None => report.push("initial-left-adjoint", "fiberwise initials are not functorial"),
    }
    let terminal_functor = functor_from_objects(fc.pi(), &terminals, "fiber-terminal");
    match terminal_functor {
        Some(right) => {
            if crate::adjunction::complete_adjunction("π⊣*", fc.pi().clone(), right).is_none() {
                report.push("terminal-right-adjoint", "fiberwise terminals are not right adjoint to the projection");
            }
        }
        None => report.push(
            "terminal-right-adjoint",
            "fiberwise terminals are not functorial",
        ),
    }
    report
}

/// The functor `M → N` picking a chosen object over each base object, with
/// morphism action forced by unique hom-sets; `None` when some hom is not a
/// singleton.
fn functor_from_objects(
    pi: &FinFunctor,
    chosen: &[ObjId],
    name: &str,
) -> Option<FinFunctor> {
    let m = pi.target();
    let n = pi.source();
    let mor_map: Option<Vec<MorId>> = m
        .morphisms()
        .map(|f| {
            let src = chosen[m.source(f).0];
            let tgt = chosen[m.target(f).0];
            let hom: Vec<MorId> = n
                .hom(src, tgt)
                .into_iter()
                .filter(|&h| pi.apply_mor(h) == f)
                .collect();
            (hom.len() == 1).then(|| hom[0])
        })
        .collect();
    FinFunctor::new(
        name,
        m.clone(),
        n.clone(),
        chosen.to_vec(),
        mor_map?,
    )
    .ok()
    .filter(|f| f.validate().passed())
}
