//! Standard constructions on finite categories: opposite, product, arrow
//! category, slice and coslice, each with its canonical projection functors.

use super::{validate_category, CatBuilder, FinCat, FinFunctor, MorId, ObjId};
use crate::{Error, Result};
use std::rc::Rc;

/// Which construction to apply.
#[derive(Debug, Clone, PartialEq)]
pub enum Construction {
    Opposite,
    Product(Rc<FinCat>),
    Arrow,
    Slice(String),
    Coslice(String),
}

/// A derived category together with whatever canonical functors the
/// construction comes with.
#[derive(Debug, Clone)]
pub struct Derived {
    pub cat: Rc<FinCat>,
    /// Projections out of the derived category (two for products: first and
    /// second factor; domain/codomain for arrow categories; the forgetful
    /// functor for slices and coslices). Empty for `Opposite`.
    pub projections: Vec<FinFunctor>,
    /// Object of the derived category corresponding to each pair of source
    /// data, recorded so callers can translate between presentations.
    pub object_origin: Vec<ObjOrigin>,
    pub morphism_origin: Vec<MorOrigin>,
}

/// Where a derived object came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjOrigin {
    Same(ObjId),
    Pair(ObjId, ObjId),
    Mor(MorId),
}

/// Where a derived morphism came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorOrigin {
    Same(MorId),
    Pair(MorId, MorId),
    Square(MorId, MorId),
}

pub fn derive(c: &Rc<FinCat>, construction: Construction) -> Result<Derived> {
    match construction {
        Construction::Opposite => opposite(c),
        Construction::Product(d) => product(c, &d),
        Construction::Arrow => arrow(c),
        Construction::Slice(x) => {
            let o = c
                .object_by_name(&x)
                .ok_or_else(|| Error::UnknownObject(x.clone()))?;
            slice(c, o)
        }
        Construction::Coslice(x) => {
            let o = c
                .object_by_name(&x)
                .ok_or_else(|| Error::UnknownObject(x.clone()))?;
            coslice(c, o)
        }
    }
}

/// Same identifiers, arrows reversed. Applying it twice returns a category
/// identical to the input, table and all.
pub fn opposite(c: &Rc<FinCat>) -> Result<Derived> {
    let mut b = CatBuilder::new(format!("{}^op", c.name()));
    for o in c.objects() {
        b.object(c.object_name(o));
    }
    for m in c.morphisms() {
        b.morphism(c.morphism_name(m), c.target(m), c.source(m));
    }
    for o in c.objects() {
        b.set_identity(o, c.identity(o));
    }
    for g in c.morphisms() {
        for f in c.morphisms() {
            // g ∘op f  =  f ∘ g.
            if let Some(fg) = c.compose(f, g) {
                b.set_composite(g, f, fg);
            }
        }
    }
    let cat = Rc::new(b.build()?);
    debug_assert!(validate_category(&cat).passed() || !validate_category(c).passed());
    Ok(Derived {
        cat,
        projections: vec![],
        object_origin: c.objects().map(ObjOrigin::Same).collect(),
        morphism_origin: c.morphisms().map(MorOrigin::Same).collect(),
    })
}

/// Undo the name decoration of `opposite` so double-opposite is identical to
/// the original on the nose.
pub fn opposite_cat(c: &Rc<FinCat>) -> Rc<FinCat> {
    let d = opposite(c).expect("opposite never fails structurally");
    let name = c
        .name()
        .strip_suffix("^op")
        .map(|s| s.to_string())
        .unwrap_or_else(|| format!("{}^op", c.name()));
    Rc::new(d.cat.relabel(
        name,
        |o| d.cat.object_name(o).to_string(),
        |m| d.cat.morphism_name(m).to_string(),
    ))
}

pub fn product(c: &Rc<FinCat>, d: &Rc<FinCat>) -> Result<Derived> {
    let mut b = CatBuilder::new(format!("{}×{}", c.name(), d.name()));
    let mut object_origin = Vec::new();
    for a in c.objects() {
        for x in d.objects() {
            b.object(format!("({},{})", c.object_name(a), d.object_name(x)));
            object_origin.push(ObjOrigin::Pair(a, x));
        }
    }
    let pair_obj = |a: ObjId, x: ObjId| ObjId(a.0 * d.object_count() + x.0);
    let mut morphism_origin = Vec::new();
    let mut pair_mor = vec![vec![MorId(0); d.morphism_count()]; c.morphism_count()];
    for f in c.morphisms() {
        for u in d.morphisms() {
            let m = b.morphism(
                format!("({},{})", c.morphism_name(f), d.morphism_name(u)),
                pair_obj(c.source(f), d.source(u)),
                pair_obj(c.target(f), d.target(u)),
            );
            pair_mor[f.0][u.0] = m;
            morphism_origin.push(MorOrigin::Pair(f, u));
        }
    }
    for a in c.objects() {
        for x in d.objects() {
            b.set_identity(pair_obj(a, x), pair_mor[c.identity(a).0][d.identity(x).0]);
        }
    }
    for g in c.morphisms() {
        for f in c.morphisms() {
            let Some(gf) = c.compose(g, f) else { continue };
            for v in d.morphisms() {
                for u in d.morphisms() {
                    let Some(vu) = d.compose(v, u) else { continue };
                    b.set_composite(pair_mor[g.0][v.0], pair_mor[f.0][u.0], pair_mor[gf.0][vu.0]);
                }
            }
        }
    }
    let cat = Rc::new(b.build()?);
    let proj1 = FinFunctor::new(
        "fst",
        cat.clone(),
        c.clone(),
        object_origin
            .iter()
            .map(|o| match o {
                ObjOrigin::Pair(a, _) => *a,
                _ => unreachable!(),
            })
            .collect(),
        morphism_origin
            .iter()
            .map(|m| match m {
                MorOrigin::Pair(f, _) => *f,
                _ => unreachable!(),
            })
            .collect(),
    )?;
    let proj2 = FinFunctor::new(
        "snd",
        cat.clone(),
        d.clone(),
        object_origin
            .iter()
            .map(|o| match o {
                ObjOrigin::Pair(_, x) => *x,
                _ => unreachable!(),
            })
            .collect(),
        morphism_origin
            .iter()
            .map(|m| match m {
                MorOrigin::Pair(_, u) => *u,
                _ => unreachable!(),
            })
            .collect(),
    )?;
    Ok(Derived {
        cat,
        projections: vec![proj1, proj2],
        object_origin,
        morphism_origin,
    })
}

/// The arrow category: objects are morphisms of `c`, morphisms are
/// commuting squares `(u, v): f ⇒ g` with `g ∘ u = v ∘ f`.
pub fn arrow(c: &Rc<FinCat>) -> Result<Derived> {
    let mut b = CatBuilder::new(format!("{}^[1]", c.name()));
    let mut object_origin = Vec::new();
    for f in c.morphisms() {
        b.object(c.morphism_name(f).to_string());
        object_origin.push(ObjOrigin::Mor(f));
    }
    let mut morphism_origin = Vec::new();
    let mut square_index = std::collections::BTreeMap::new();
    for f in c.morphisms() {
        for g in c.morphisms() {
            for u in c.hom(c.source(f), c.source(g)) {
                for v in c.hom(c.target(f), c.target(g)) {
                    if c.compose(g, u) == c.compose(v, f) && c.compose(g, u).is_some() {
                        let m = b.morphism(
                            format!("[{};{}]", c.morphism_name(u), c.morphism_name(v)),
                            ObjId(f.0),
                            ObjId(g.0),
                        );
                        square_index.insert((f, g, u, v), m);
                        morphism_origin.push(MorOrigin::Square(u, v));
                    }
                }
            }
        }
    }
    for f in c.morphisms() {
        let id = square_index[&(f, f, c.identity(c.source(f)), c.identity(c.target(f)))];
        b.set_identity(ObjId(f.0), id);
    }
    for (&(f1, g1, u1, v1), &m1) in &square_index {
        for (&(f2, g2, u2, v2), &m2) in &square_index {
            if g1 != f2 {
                continue;
            }
            let u = c.compose(u2, u1).expect("endpoints match");
            let v = c.compose(v2, v1).expect("endpoints match");
            let m = square_index[&(f1, g2, u, v)];
            b.set_composite(m2, m1, m);
        }
    }
    let cat = Rc::new(b.build()?);
    debug_assert!(validate_category(&cat).passed());
    let dom = FinFunctor::new(
        "dom",
        cat.clone(),
        c.clone(),
        c.morphisms().map(|f| c.source(f)).collect(),
        morphism_origin
            .iter()
            .map(|m| match m {
                MorOrigin::Square(u, _) => *u,
                _ => unreachable!(),
            })
            .collect(),
    )?;
    let cod = FinFunctor::new(
        "cod",
        cat.clone(),
        c.clone(),
        c.morphisms().map(|f| c.target(f)).collect(),
        morphism_origin
            .iter()
            .map(|m| match m {
                MorOrigin::Square(_, v) => *v,
                _ => unreachable!(),
            })
            .collect(),
    )?;
    Ok(Derived {
        cat,
        projections: vec![dom, cod],
        object_origin,
        morphism_origin,
    })
}

/// Slice category over `x`: objects are morphisms `a → x`, morphisms are
/// triangles. The projection forgets the structure map.
pub fn slice(c: &Rc<FinCat>, x: ObjId) -> Result<Derived> {
    let mut b = CatBuilder::new(format!("{}/{}", c.name(), c.object_name(x)));
    let mut object_origin = Vec::new();
    let over: Vec<MorId> = c.morphisms().filter(|&f| c.target(f) == x).collect();
    for &f in &over {
        b.object(c.morphism_name(f).to_string());
        object_origin.push(ObjOrigin::Mor(f));
    }
    let obj_of = |f: MorId| ObjId(over.iter().position(|&g| g == f).unwrap());
    let mut morphism_origin = Vec::new();
    let mut tri_index = std::collections::BTreeMap::new();
    for &f in &over {
        for &g in &over {
            for u in c.hom(c.source(f), c.source(g)) {
                if c.compose(g, u) == Some(f) {
                    let m = b.morphism(c.morphism_name(u).to_string(), obj_of(f), obj_of(g));
                    tri_index.insert((f, g, u), m);
                    morphism_origin.push(MorOrigin::Same(u));
                }
            }
        }
    }
    for &f in &over {
        b.set_identity(obj_of(f), tri_index[&(f, f, c.identity(c.source(f)))]);
    }
    for (&(f1, g1, u1), &m1) in &tri_index {
        for (&(f2, g2, u2), &m2) in &tri_index {
            if g1 != f2 {
                continue;
            }
            let u = c.compose(u2, u1).expect("triangles compose");
            b.set_composite(m2, m1, tri_index[&(f1, g2, u)]);
        }
    }
    let cat = Rc::new(b.build()?);
    debug_assert!(validate_category(&cat).passed());
    let forget = FinFunctor::new(
        "forget",
        cat.clone(),
        c.clone(),
        over.iter().map(|&f| c.source(f)).collect(),
        morphism_origin
            .iter()
            .map(|m| match m {
                MorOrigin::Same(u) => *u,
                _ => unreachable!(),
            })
            .collect(),
    )?;
    Ok(Derived {
        cat,
        projections: vec![forget],
        object_origin,
        morphism_origin,
    })
}

/// Coslice category under `x`: objects are morphisms `x → a`.
pub fn coslice(c: &Rc<FinCat>, x: ObjId) -> Result<Derived> {
    let mut b = CatBuilder::new(format!("{}\\{}", c.object_name(x), c.name()));
    let mut object_origin = Vec::new();
    let under: Vec<MorId> = c.morphisms().filter(|&f| c.source(f) == x).collect();
    for &f in &under {
        b.object(c.morphism_name(f).to_string());
        object_origin.push(ObjOrigin::Mor(f));
    }
    let obj_of = |f: MorId| ObjId(under.iter().position(|&g| g == f).unwrap());
    let mut morphism_origin = Vec::new();
    let mut tri_index = std::collections::BTreeMap::new();
    for &f in &under {
        for &g in &under {
            for u in c.hom(c.target(f), c.target(g)) {
                if c.compose(u, f) == Some(g) {
                    let m = b.morphism(c.morphism_name(u).to_string(), obj_of(f), obj_of(g));
                    tri_index.insert((f, g, u), m);
                    morphism_origin.push(MorOrigin::Same(u));
                }
            }
        }
    }
    for &f in &under {
        b.set_identity(obj_of(f), tri_index[&(f, f, c.identity(c.target(f)))]);
    }
    for (&(f1, g1, u1), &m1) in &tri_index {
        for (&(f2, g2, u2), &m2) in &tri_index {
            if g1 != f2 {
                continue;
            }
            let u = c.compose(u2, u1).expect("triangles compose");
            b.set_composite(m2, m1, tri_index[&(f1, g2, u)]);
        }
    }
    let cat = Rc::new(b.build()?);
    debug_assert!(validate_category(&cat).passed());
    let forget = FinFunctor::new(
        "forget",
        cat.clone(),
        c.clone(),
        under.iter().map(|&f| c.target(f)).collect(),
        morphism_origin
            .iter()
            .map(|m| match m {
                MorOrigin::Same(u) => *u,
                _ => unreachable!(),
            })
            .collect(),
    )?;
    Ok(Derived {
        cat,
        projections: vec![forget],
        object_origin,
        morphism_origin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{are_isomorphic, boolean_lattice_2, chain};

    #[test]
    fn double_opposite_is_identity_on_the_nose() {
        for c in [chain(3), boolean_lattice_2()] {
            let once = opposite_cat(&c);
            let twice = opposite_cat(&once);
            assert_eq!(c.as_ref(), twice.as_ref());
        }
    }

    #[test]
    fn arrow_of_chain2_is_three_chain() {
        let c = chain(2);
        let d = arrow(&c).unwrap();
        // id_0 ≤ (0->1) ≤ id_1 under the square ordering.
        assert_eq!(d.cat.object_count(), 3);
        assert!(d.cat.is_skeletal_poset());
        assert!(are_isomorphic(&d.cat, &chain(3)).is_some());
        for p in &d.projections {
            assert!(p.validate().passed());
        }
    }

    #[test]
    fn slice_at_top_of_chain2_is_chain2() {
        let c = chain(2);
        let top = c.object_by_name("1").unwrap();
        let d = slice(&c, top).unwrap();
        assert!(are_isomorphic(&d.cat, &c).is_some());
        assert!(d.projections[0].validate().passed());
    }

    #[test]
    fn product_of_chains_is_b2() {
        let c = chain(2);
        let d = product(&c, &c).unwrap();
        assert_eq!(d.cat.object_count(), 4);
        assert_eq!(d.cat.morphism_count(), 9);
        assert!(are_isomorphic(&d.cat, &boolean_lattice_2()).is_some());
        for p in &d.projections {
            assert!(p.validate().passed());
        }
    }

    #[test]
    fn coslice_at_bottom_is_whole_poset() {
        let b2 = boolean_lattice_2();
        let bot = b2.object_by_name("0").unwrap();
        let d = coslice(&b2, bot).unwrap();
        assert!(are_isomorphic(&d.cat, &b2).is_some());
    }
}
