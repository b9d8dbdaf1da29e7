//! Brute-force enumeration of all model structures on a finite category.

use super::axioms::check_bicomplete;
use super::factorization::search_functorial_factorization;
use super::lifting::{lifting_exists, squares_between, LiftingSquare};
use super::{ModelCat, PreModel};
use crate::fincat::{enumerate_retracts, FinCat, MorId};
use std::collections::BTreeSet;
use std::rc::Rc;

/// All subcategories of `c` (morphism sets containing every identity and
/// closed under composition), in a canonical order.
fn subcategories(c: &FinCat) -> Vec<BTreeSet<MorId>> {
    let ids: BTreeSet<MorId> = c.objects().map(|o| c.identity(o)).collect();
    let non_id: Vec<MorId> = c.morphisms().filter(|&m| !ids.contains(&m)).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << non_id.len()) {
        let mut set = ids.clone();
        for (bit, &m) in non_id.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                set.insert(m);
            }
        }
        let closed = set.iter().all(|&g| {
            set.iter().all(|&f| match c.compose(g, f) {
                Some(gf) => set.contains(&gf),
                None => true,
            })
        });
        if closed {
            out.push(set);
        }
    }
    out
}

/// Iterate every triple of subcategories `(W, Cof, Fib)` on `c` and keep
/// those that satisfy the model-category axioms with some searched pair of
/// functorial factorizations. Deterministic order; the composition-closure
/// and lifting data are precomputed once so the triple loop stays cheap.
pub fn enumerate_model_structures(c: &Rc<FinCat>, shape_bound: usize) -> Vec<ModelCat> {
    if !check_bicomplete(c, shape_bound).is_empty() {
        return Vec::new();
    }
    let subcats = subcategories(c);
    let isos: Vec<MorId> = c.morphisms().filter(|&m| c.is_iso(m)).collect();
    // f → all g ≠ f exhibiting f as a retract.
    let retract_table: Vec<Vec<MorId>> = c
        .morphisms()
        .map(|f| {
            let mut of: Vec<MorId> = enumerate_retracts(c, f)
                .into_iter()
                .map(|p| p.of)
                .filter(|&g| g != f)
                .collect();
            of.dedup();
            of
        })
        .collect();
    // (i, p) → do all commuting squares admit lifts?
    let n = c.morphism_count();
    let mut lifts = vec![true; n * n];
    for i in c.morphisms() {
        for p in c.morphisms() {
            let all_lift = squares_between(c, i, p).into_iter().all(|(top, bottom)| {
                lifting_exists(c, LiftingSquare { i, p, top, bottom })
                    .expect("square commutes")
                    .is_some()
            });
            lifts[i.0 * n + p.0] = all_lift;
        }
    }
    let composable: Vec<(MorId, MorId, MorId)> = c
        .morphisms()
        .flat_map(|g| {
            c.morphisms()
                .filter_map(move |f| c.compose(g, f).map(|gf| (g, f, gf)))
        })
        .collect();

    let mut found = Vec::new();
    for weq in &subcats {
        // MC2 depends only on W.
        let mc2_ok = composable.iter().all(|&(g, f, gf)| {
            let count = [weq.contains(&f), weq.contains(&g), weq.contains(&gf)]
                .iter()
                .filter(|&&b| b)
                .count();
            count != 2
        });
        if !mc2_ok || !isos.iter().all(|i| weq.contains(i)) {
            continue;
        }
        if !retract_closed(weq, &retract_table) {
            continue;
        }
        for cof in &subcats {
            if !isos.iter().all(|i| cof.contains(i)) || !retract_closed(cof, &retract_table) {
                continue;
            }
            'fib: for fib in &subcats {
                if !isos.iter().all(|i| fib.contains(i)) || !retract_closed(fib, &retract_table) {
                    continue;
                }
                // MC4.
                for &i in cof {
                    for &p in fib {
                        if (weq.contains(&i) || weq.contains(&p)) && !lifts[i.0 * n + p.0] {
                            continue 'fib;
                        }
                    }
                }
                // MC5 by search.
                let triv_cof: BTreeSet<MorId> = cof.intersection(weq).copied().collect();
                let triv_fib: BTreeSet<MorId> = fib.intersection(weq).copied().collect();
                let Some(f1) = search_functorial_factorization(c, cof, &triv_fib) else {
                    continue;
                };
                let Some(f2) = search_functorial_factorization(c, &triv_cof, fib) else {
                    continue;
                };
                let pm = PreModel::new("", c.clone(), weq.clone(), cof.clone(), fib.clone());
                let name = format!(
                    "{}{{w:{},c:{},f:{}}}",
                    c.name(),
                    pm.describe_class(super::MorClass::Weq),
                    pm.describe_class(super::MorClass::Cof),
                    pm.describe_class(super::MorClass::Fib)
                );
                let pm = PreModel::new(name.clone(), c.clone(), weq.clone(), cof.clone(), fib.clone());
                let mc = ModelCat::new(name, pm, f1, f2)
                    .expect("bicompleteness gives initial and terminal objects");
                found.push(mc);
            }
        }
    }
    found
}

fn retract_closed(class: &BTreeSet<MorId>, retract_table: &[Vec<MorId>]) -> bool {
    retract_table.iter().enumerate().all(|(f, of)| {
        class.contains(&MorId(f)) || of.iter().all(|g| !class.contains(g))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{chain, point};
    use crate::modelstruct::{MorClass, DEFAULT_SHAPE_BOUND};

    #[test]
    fn point_has_exactly_one_structure() {
        let found = enumerate_model_structures(&point("pt"), DEFAULT_SHAPE_BOUND);
        assert_eq!(found.len(), 1);
    }

    #[test]
    fn chain2_has_exactly_three_structures() {
        let found = enumerate_model_structures(&chain(2), DEFAULT_SHAPE_BOUND);
        let names: Vec<(String, String, String)> = found
            .iter()
            .map(|m| {
                (
                    m.structure().describe_class(MorClass::Weq),
                    m.structure().describe_class(MorClass::Cof),
                    m.structure().describe_class(MorClass::Fib),
                )
            })
            .collect();
        assert_eq!(found.len(), 3, "{names:?}");
        assert!(names.contains(&("all".into(), "all".into(), "ids".into())));
        assert!(names.contains(&("all".into(), "ids".into(), "all".into())));
        assert!(names.contains(&("ids".into(), "all".into(), "all".into())));
    }

    #[test]
    fn discrete_pair_has_no_structures() {
        let mut b = crate::fincat::CatBuilder::new("two");
        b.object_with_identity("a");
        b.object_with_identity("b");
        let two = Rc::new(b.build().unwrap());
        assert!(enumerate_model_structures(&two, DEFAULT_SHAPE_BOUND).is_empty());
    }
}
