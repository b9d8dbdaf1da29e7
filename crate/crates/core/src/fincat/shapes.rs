//! Diagram shapes and category isomorphism search.
//!
//! Bicompleteness at desk scale is checked against every diagram shape
//! isomorphic to a subcategory of the base (plus the empty shape), with a
//! configurable bound on the number of shape objects.

use super::{CatBuilder, FinCat, MorId, ObjId};
use std::rc::Rc;

/// All subcategories of `c` with at most `max_objects` objects, deduplicated
/// up to isomorphism and always including the empty shape. Each shape is
/// returned as a standalone category.
pub fn subcategory_shapes(c: &FinCat, max_objects: usize) -> Vec<Rc<FinCat>> {
    let mut shapes: Vec<Rc<FinCat>> = vec![Rc::new(
        CatBuilder::new("shape_empty").build().expect("empty builds"),
    )];
    let objs: Vec<ObjId> = c.objects().collect();
    for subset in subsets_up_to(objs.len(), max_objects) {
        let chosen: Vec<ObjId> = subset.iter().map(|&i| objs[i]).collect();
        if chosen.is_empty() {
            continue;
        }
        // Non-identity morphisms with both endpoints inside the subset.
        let pool: Vec<MorId> = c
            .morphisms()
            .filter(|&m| {
                !c.is_identity(m)
                    && chosen.contains(&c.source(m))
                    && chosen.contains(&c.target(m))
            })
            .collect();
        for mor_subset in all_subsets(pool.len()) {
            let mors: Vec<MorId> = mor_subset.iter().map(|&i| pool[i]).collect();
            if !closed_under_composition(c, &mors) {
                continue;
            }
            let shape = realize_shape(c, &chosen, &mors);
            if !shapes.iter().any(|s| are_isomorphic(s, &shape).is_some()) {
                shapes.push(Rc::new(shape));
            }
        }
    }
    shapes
}

fn subsets_up_to(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(start: usize, n: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(current.clone());
        if current.len() == max {
            return;
        }
        for i in start..n {
            current.push(i);
            go(i + 1, n, max, current, out);
            current.pop();
        }
    }
    go(0, n, max, &mut current, &mut out);
    out
}

fn all_subsets(n: usize) -> Vec<Vec<usize>> {
    subsets_up_to(n, n)
}

fn closed_under_composition(c: &FinCat, mors: &[MorId]) -> bool {
    for &g in mors {
        for &f in mors {
            if c.target(f) == c.source(g) {
                let Some(gf) = c.compose(g, f) else {
                    return false;
                };
                if !c.is_identity(gf) && !mors.contains(&gf) {
                    return false;
                }
            }
        }
    }
    true
}

fn realize_shape(c: &FinCat, objects: &[ObjId], mors: &[MorId]) -> FinCat {
    let mut b = CatBuilder::new("shape");
    let idx = |o: ObjId| ObjId(objects.iter().position(|&p| p == o).unwrap());
    for &o in objects {
        b.object_with_identity(c.object_name(o));
    }
    let mut local = std::collections::BTreeMap::new();
    for &o in objects {
        local.insert(c.identity(o), b.identity[&idx(o).0]);
    }
    for &m in mors {
        let lm = b.morphism(c.morphism_name(m), idx(c.source(m)), idx(c.target(m)));
        local.insert(m, lm);
    }
    let all: Vec<MorId> = objects
        .iter()
        .map(|&o| c.identity(o))
        .chain(mors.iter().copied())
        .collect();
    for &g in &all {
        for &f in &all {
            if c.target(f) == c.source(g) {
                let gf = c.compose(g, f).expect("closure checked");
                b.set_composite(local[&g], local[&f], local[&gf]);
            }
        }
    }
    b.build().expect("shape is structurally sound")
}

/// Exhaustive isomorphism-of-categories search. Returns the object and
/// morphism bijections of the first isomorphism found in canonical order.
pub fn are_isomorphic(a: &FinCat, b: &FinCat) -> Option<(Vec<ObjId>, Vec<MorId>)> {
    if a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count() {
        return None;
    }
    let n = a.object_count();
    let mut object_map: Vec<Option<ObjId>> = vec![None; n];
    let mut used = vec![false; n];
    search_object_bijection(a, b, &mut object_map, &mut used, 0)
}

fn search_object_bijection(
    a: &FinCat,
    b: &FinCat,
    map: &mut Vec<Option<ObjId>>,
    used: &mut Vec<bool>,
    depth: usize,
) -> Option<(Vec<ObjId>, Vec<MorId>)> {
    let n = a.object_count();
    if depth == n {
        let objs: Vec<ObjId> = map.iter().map(|o| o.unwrap()).collect();
        return extend_to_morphisms(a, b, &objs).map(|mors| (objs, mors));
    }
    for candidate in 0..n {
        if used[candidate] {
            continue;
        }
        // Cheap degree profile pruning.
        let profile_ok = a.objects().take(depth).all(|earlier| {
            let image = map[earlier.0].unwrap();
            a.hom(ObjId(depth), earlier).len() == b.hom(ObjId(candidate), image).len()
                && a.hom(earlier, ObjId(depth)).len() == b.hom(image, ObjId(candidate)).len()
        }) && a.hom(ObjId(depth), ObjId(depth)).len()
            == b.hom(ObjId(candidate), ObjId(candidate)).len();
        if !profile_ok {
            continue;
        }
        map[depth] = Some(ObjId(candidate));
        used[candidate] = true;
        if let Some(found) = search_object_bijection(a, b, map, used, depth + 1) {
            return Some(found);
        }
        map[depth] = None;
        used[candidate] = false;
    }
    None
}

fn extend_to_morphisms(a: &FinCat, b: &FinCat, objs: &[ObjId]) -> Option<Vec<MorId>> {
    let mut map: Vec<Option<MorId>> = vec![None; a.morphism_count()];
    let mut used = vec![false; b.morphism_count()];
    // Identities are forced.
    for o in a.objects() {
        let target = b.identity(objs[o.0]);
        map[a.identity(o).0] = Some(target);
        used[target.0] = true;
    }
    search_morphism_bijection(a, b, objs, &mut map, &mut used, 0)
}

fn search_morphism_bijection(
    a: &FinCat,
    b: &FinCat,
    objs: &[ObjId],
    map: &mut Vec<Option<MorId>>,
    used: &mut Vec<bool>,
    depth: usize,
) -> Option<Vec<MorId>> {
    let n = a.morphism_count();
    if depth == n {
        let mors: Vec<MorId> = map.iter().map(|m| m.unwrap()).collect();
        // Full table comparison.
        for g in a.morphisms() {
            for f in a.morphisms() {
                let lhs = a.compose(g, f).map(|gf| mors[gf.0]);
                let rhs = b.compose(mors[g.0], mors[f.0]);
                if lhs != rhs {
                    return None;
                }
            }
        }
        return Some(mors);
    }
    let m = MorId(depth);
    if map[depth].is_some() {
        return search_morphism_bijection(a, b, objs, map, used, depth + 1);
    }
    let (src, tgt) = (objs[a.source(m).0], objs[a.target(m).0]);
    for candidate in b.hom(src, tgt) {
        if used[candidate.0] || b.is_identity(candidate) {
            continue;
        }
        map[depth] = Some(candidate);
        used[candidate.0] = true;
        if let Some(found) = search_morphism_bijection(a, b, objs, map, used, depth + 1) {
            return Some(found);
        }
        map[depth] = None;
        used[candidate.0] = false;
    }
    None
}
