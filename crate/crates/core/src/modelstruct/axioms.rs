//! The model-category axioms, checked exhaustively at desk scale.

use super::factorization::{search_functorial_factorization, FunctorialFactorization};
use super::lifting::{lifting_exists, squares_between, LiftingSquare};
use super::{MorClass, PreModel};
use crate::fincat::{all_functors, enumerate_retracts, find_colimit, find_limit, subcategory_shapes, FinCat, FinFunctor};
use crate::report::Violation;
use std::rc::Rc;

/// Shape bound for bicompleteness checks: diagram shapes are subcategories
/// of the base with at most this many objects (plus the empty shape). For
/// skeletal posets a bound of 2 already decides the lattice property; 3 adds
/// spans and cospans for good measure.
pub const DEFAULT_SHAPE_BOUND: usize = 3;

/// Per-axiom verdicts with witnesses.
#[derive(Debug, Clone, Default)]
pub struct AxiomReport {
    pub axioms: Vec<(String, Vec<Violation>)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(|(_, v)| v.is_empty())
    }

    pub fn failed_axioms(&self) -> Vec<&str> {
        self.axioms
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(a, _)| a.as_str())
            .collect()
    }

    pub fn violations_for(&self, axiom: &str) -> &[Violation] {
        self.axioms
            .iter()
            .find(|(a, _)| a == axiom)
            .map(|(_, v)| v.as_slice())
            .unwrap_or(&[])
    }

    pub fn summary(&self) -> String {
        self.axioms
            .iter()
            .map(|(a, v)| {
                if v.is_empty() {
                    format!("{a}: ok")
                } else {
                    format!("{a}: {} violation(s), first: {}", v.len(), v[0])
                }
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Bicompleteness at desk scale: limits and colimits for every diagram whose
/// shape is (isomorphic to) a subcategory of `c` with at most `shape_bound`
/// objects, plus the empty shape.
///
/// On skeletal posets the bound is clamped to 2: the empty shape and the
/// discrete pairs already decide the bounded-lattice property, which for a
/// finite poset is equivalent to bicompleteness outright.
pub fn check_bicomplete(c: &Rc<FinCat>, shape_bound: usize) -> Vec<Violation> {
    let shape_bound = if c.is_skeletal_poset() {
        shape_bound.min(2)
    } else {
        shape_bound
    };
    let mut violations = Vec::new();
    for shape in subcategory_shapes(c, shape_bound) {
        for diagram in all_functors(&shape, c) {
            if find_limit(&diagram).is_none() {
                violations.push(Violation::new(
                    "missing-limit",
                    describe_diagram(&diagram),
                ));
            }
            if find_colimit(&diagram).is_none() {
                violations.push(Violation::new(
                    "missing-colimit",
                    describe_diagram(&diagram),
                ));
            }
        }
    }
    violations
}

fn describe_diagram(d: &FinFunctor) -> String {
    let imgs: Vec<&str> = d
        .source()
        .objects()
        .map(|o| d.target().object_name(d.apply_obj(o)))
        .collect();
    if imgs.is_empty() {
        "empty diagram".to_string()
    } else {
        format!("diagram on [{}]", imgs.join(","))
    }
}

/// Check MC1–MC5 for a pre-model structure. Isomorphisms are inserted into
/// all three classes before validation and any omission is reported under
/// MC3. Factorizations may be supplied; missing ones are searched.
pub fn check_model_axioms(
    pm: &PreModel,
    fact_cof_trivfib: Option<&FunctorialFactorization>,
    fact_trivcof_fib: Option<&FunctorialFactorization>,
    shape_bound: usize,
) -> AxiomReport {
    let (completed, omissions) = pm.with_isos_inserted();
    let c = completed.base().clone();
    let mut report = AxiomReport::default();

    // MC1: bicompleteness of the underlying category.
    report
        .axioms
        .push(("MC1".into(), check_bicomplete(&c, shape_bound)));

    // MC2: two-out-of-three for weak equivalences.
    let mut mc2 = Vec::new();
    for g in c.morphisms() {
        for f in c.morphisms() {
            let Some(gf) = c.compose(g, f) else { continue };
            let (wf, wg, wgf) = (
                completed.is_weq(f),
                completed.is_weq(g),
                completed.is_weq(gf),
            );
            let in_count = [wf, wg, wgf].iter().filter(|&&b| b).count();
            if in_count == 2 {
                mc2.push(Violation::new(
                    "two-out-of-three",
                    format!(
                        "f={}, g={}, gf={}",
                        c.morphism_name(f),
                        c.morphism_name(g),
                        c.morphism_name(gf)
                    ),
                ));
            }
        }
    }
    report.axioms.push(("MC2".into(), mc2));

    // MC3: isomorphisms in every class, classes closed under retracts.
    let mut mc3 = Vec::new();
    for (class, iso) in &omissions {
        mc3.push(Violation::new(
            "isomorphism-missing",
            format!("{} not listed in {}", c.morphism_name(*iso), class.label()),
        ));
    }
    for f in c.morphisms() {
        let presentations = enumerate_retracts(&c, f);
        for class in [MorClass::Weq, MorClass::Cof, MorClass::Fib] {
            for p in &presentations {
                if completed.contains(class, p.of) && !completed.contains(class, f) {
                    mc3.push(Violation::new(
                        "retract-closure",
                        format!(
                            "{} is a retract of {} ∈ {}",
                            c.morphism_name(f),
                            c.morphism_name(p.of),
                            class.label()
                        ),
                    ));
                }
            }
        }
    }
    report.axioms.push(("MC3".into(), mc3));

    // MC4: liftings for (trivial cof, fib) and (cof, trivial fib) squares.
    let mut mc4 = Vec::new();
    for &i in completed.class(MorClass::Cof) {
        for &p in completed.class(MorClass::Fib) {
            if !completed.is_weq(i) && !completed.is_weq(p) {
                continue;
            }
            for (top, bottom) in squares_between(&c, i, p) {
                let lifted = lifting_exists(&c, LiftingSquare { i, p, top, bottom })
                    .expect("squares_between yields commuting squares");
                if lifted.is_none() {
                    mc4.push(Violation::new(
                        "missing-lift",
                        format!(
                            "i={}, p={}, top={}, bottom={}",
                            c.morphism_name(i),
                            c.morphism_name(p),
                            c.morphism_name(top),
                            c.morphism_name(bottom)
                        ),
                    ));
                }
            }
        }
    }
    report.axioms.push(("MC4".into(), mc4));

    // MC5: the two functorial factorizations, given or searched.
    let mut mc5 = Vec::new();
    let cof = completed.class(MorClass::Cof).clone();
    let fib = completed.class(MorClass::Fib).clone();
    let triv_cof = completed.triv_cof();
    let triv_fib = completed.triv_fib();
    match fact_cof_trivfib {
        Some(ff) => {
            let r = ff.validate(Some(&cof), Some(&triv_fib));
            mc5.extend(r.violations.into_iter().map(|v| Violation {
                rule: format!("(cof,trivfib) {}", v.rule),
                witness: v.witness,
            }));
        }
        None => {
            if search_functorial_factorization(&c, &cof, &triv_fib).is_none() {
                mc5.push(Violation::new(
                    "(cof,trivfib)",
                    "no functorial factorization exists",
                ));
            }
        }
    }
    match fact_trivcof_fib {
        Some(ff) => {
            let r = ff.validate(Some(&triv_cof), Some(&fib));
            mc5.extend(r.violations.into_iter().map(|v| Violation {
                rule: format!("(trivcof,fib) {}", v.rule),
                witness: v.witness,
            }));
        }
        None => {
            if search_functorial_factorization(&c, &triv_cof, &fib).is_none() {
                mc5.push(Violation::new(
                    "(trivcof,fib)",
                    "no functorial factorization exists",
                ));
            }
        }
    }
    report.axioms.push(("MC5".into(), mc5));
    report
}
