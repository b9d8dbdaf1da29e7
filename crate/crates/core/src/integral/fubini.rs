//! The Fubini comparison: integrating over a product base in one step
//! agrees, classes and all, with integrating the two variables one after the
//! other, through the canonical reassociation bijection.

use super::transform::integrate_family;
use super::{build_integral, BuildMode, IntegralStructure, ModCatFunctor};
use crate::adjunction::Adjunction;
use crate::fincat::{product, FinCat, FinFunctor, MorId, MorOrigin, ObjId, ObjOrigin};
use crate::grothendieck::AdjCatFunctor;
use crate::modelstruct::{
    arrow_squares, FunctorialFactorization, ModelCat, PreModel,
};
use crate::report::ValidationReport;
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::rc::Rc;

/// A product of two model categories with the componentwise structure and
/// the pair decomposition of the product category.
#[derive(Debug, Clone)]
pub struct ProductModel {
    pub cat: Rc<FinCat>,
    pub m: ModelCat,
    pub n: ModelCat,
    pub model: ModelCat,
    obj_pairs: Vec<(ObjId, ObjId)>,
    mor_pairs: Vec<(MorId, MorId)>,
    obj_index: BTreeMap<(ObjId, ObjId), ObjId>,
    mor_index: BTreeMap<(MorId, MorId), MorId>,
}

impl ProductModel {
    pub fn obj_pair(&self, o: ObjId) -> (ObjId, ObjId) {
        self.obj_pairs[o.0]
    }

    pub fn mor_pair(&self, m: MorId) -> (MorId, MorId) {
        self.mor_pairs[m.0]
    }

    pub fn pair_obj(&self, a: ObjId, b: ObjId) -> ObjId {
        self.obj_index[&(a, b)]
    }

    pub fn pair_mor(&self, f: MorId, u: MorId) -> MorId {
        self.mor_index[&(f, u)]
    }
}

/// Build the product model category with componentwise classes and
/// componentwise functorial factorizations.
pub fn product_model(m: &ModelCat, n: &ModelCat) -> Result<ProductModel> {
    let derived = product(m.base(), n.base())?;
    let cat = derived.cat.clone();
    let obj_pairs: Vec<(ObjId, ObjId)> = derived
        .object_origin
        .iter()
        .map(|o| match o {
            ObjOrigin::Pair(a, b) => (*a, *b),
            _ => unreachable!(),
        })
        .collect();
    let mor_pairs: Vec<(MorId, MorId)> = derived
        .morphism_origin
        .iter()
        .map(|o| match o {
            MorOrigin::Pair(f, u) => (*f, *u),
            _ => unreachable!(),
        })
        .collect();
    let obj_index: BTreeMap<(ObjId, ObjId), ObjId> = obj_pairs
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, ObjId(i)))
        .collect();
    let mor_index: BTreeMap<(MorId, MorId), MorId> = mor_pairs
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, MorId(i)))
        .collect();
    let mut weq = BTreeSet::new();
    let mut cof = BTreeSet::new();
    let mut fib = BTreeSet::new();
    for (i, &(f, u)) in mor_pairs.iter().enumerate() {
        if m.is_weq(f) && n.is_weq(u) {
            weq.insert(MorId(i));
        }
        if m.is_cof(f) && n.is_cof(u) {
            cof.insert(MorId(i));
        }
        if m.is_fib(f) && n.is_fib(u) {
            fib.insert(MorId(i));
        }
    }
    let name = format!("{}×{}", m.name, n.name);
    let pm = PreModel::new(name.clone(), cat.clone(), weq, cof, fib);
    let f1 = componentwise_factorization(
        &cat,
        &mor_pairs,
        &obj_index,
        &mor_index,
        m.fact_cof_trivfib(),
        n.fact_cof_trivfib(),
    );
    let f2 = componentwise_factorization(
        &cat,
        &mor_pairs,
        &obj_index,
        &mor_index,
        m.fact_trivcof_fib(),
        n.fact_trivcof_fib(),
    );
    let model = ModelCat::new(name, pm, f1, f2)?;
    Ok(ProductModel {
        cat,
        m: m.clone(),
        n: n.clone(),
        model,
        obj_pairs,
        mor_pairs,
        obj_index,
        mor_index,
    })
}

fn componentwise_factorization(
    cat: &Rc<FinCat>,
    mor_pairs: &[(MorId, MorId)],
    obj_index: &BTreeMap<(ObjId, ObjId), ObjId>,
    mor_index: &BTreeMap<(MorId, MorId), MorId>,
    fm: &FunctorialFactorization,
    fn_: &FunctorialFactorization,
) -> FunctorialFactorization {
    let middle: Vec<ObjId> = mor_pairs
        .iter()
        .map(|&(f, u)| obj_index[&(fm.middle(f), fn_.middle(u))])
        .collect();
    let first: Vec<MorId> = mor_pairs
        .iter()
        .map(|&(f, u)| mor_index[&(fm.first(f), fn_.first(u))])
        .collect();
    let second: Vec<MorId> = mor_pairs
        .iter()
        .map(|&(f, u)| mor_index[&(fm.second(f), fn_.second(u))])
        .collect();
    let mut middle_map = BTreeMap::new();
    for s in arrow_squares(cat) {
        let (f1, u1) = mor_pairs[s.from.0];
        let (f2, u2) = mor_pairs[s.to.0];
        let (tf, tu) = mor_pairs[s.u.0];
        let (bf, bu) = mor_pairs[s.v.0];
        let mm = fm
            .middle_map(&crate::modelstruct::ArrowSquare {
                from: f1,
                to: f2,
                u: tf,
                v: bf,
            })
            .expect("component middle map");
        let mn = fn_
            .middle_map(&crate::modelstruct::ArrowSquare {
                from: u1,
                to: u2,
                u: tu,
                v: bu,
            })
            .expect("component middle map");
        middle_map.insert((s.from, s.to, s.u, s.v), mor_index[&(mm, mn)]);
    }
    FunctorialFactorization::new(cat.clone(), middle, first, second, middle_map)
}

/// One restriction of a diagram on a product base: fix the first coordinate
/// (`FirstFixed`) or the second.
enum Fixed {
    First(ObjId),
    Second(ObjId),
}

fn restriction(fm: &ModCatFunctor, prod: &ProductModel, fixed: &Fixed) -> Result<ModCatFunctor> {
    let (base_model, label) = match fixed {
        Fixed::First(a) => (
            prod.n.clone(),
            format!("{}^{}", fm.name, prod.m.base().object_name(*a)),
        ),
        Fixed::Second(b) => (
            prod.m.clone(),
            format!("{}_{}", fm.name, prod.n.base().object_name(*b)),
        ),
    };
    let base = base_model.base().clone();
    let fibers: Vec<Rc<FinCat>> = base
        .objects()
        .map(|o| {
            let pair = match fixed {
                Fixed::First(a) => prod.pair_obj(*a, o),
                Fixed::Second(b) => prod.pair_obj(o, *b),
            };
            fm.underlying().fiber(pair).clone()
        })
        .collect();
    let fiber_models: Vec<ModelCat> = base
        .objects()
        .map(|o| {
            let pair = match fixed {
                Fixed::First(a) => prod.pair_obj(*a, o),
                Fixed::Second(b) => prod.pair_obj(o, *b),
            };
            fm.fiber_model(pair).clone()
        })
        .collect();
    let on_arrow: Vec<Adjunction> = base
        .morphisms()
        .map(|u| {
            let pair = match fixed {
                Fixed::First(a) => prod.pair_mor(prod.m.base().identity(*a), u),
                Fixed::Second(b) => prod.pair_mor(u, prod.n.base().identity(*b)),
            };
            fm.underlying().on_arrow(pair).clone()
        })
        .collect();
    let underlying = AdjCatFunctor::strict(label.clone(), base, fibers, on_arrow)?;
    ModCatFunctor::new(label, underlying, base_model, fiber_models)
}

/// Everything the Fubini comparison produces: the one-step and the two
/// iterated integral structures together with the class-matching
/// certificates through the canonical bijections.
#[derive(Debug)]
pub struct FubiniReport {
    pub combined: IntegralStructure,
    pub iterated_first: IntegralStructure,
    pub iterated_second: IntegralStructure,
    pub match_first: ValidationReport,
    pub match_second: ValidationReport,
}

impl FubiniReport {
    pub fn passed(&self) -> bool {
        self.match_first.passed() && self.match_second.passed()
    }
}

/// Run the comparison for a proper relative diagram on a product base. The
/// restrictions, the iterated outer diagrams and the combined diagram are
/// all built in `RequireProperRelative` mode, so properness and relativeness
/// of every layer is re-checked on the way.
pub fn fubini(fm: &ModCatFunctor, prod: &ProductModel, shape_bound: usize) -> Result<FubiniReport> {
    if fm.base() != &prod.cat {
        return Err(Error::CategoryMismatch(
            "diagram does not live on the given product base".into(),
        ));
    }
    let combined = build_integral(fm, BuildMode::RequireProperRelative, shape_bound)?;
    let (iterated_first, match_first) =
        iterate(fm, prod, &combined, true, shape_bound)?;
    let (iterated_second, match_second) =
        iterate(fm, prod, &combined, false, shape_bound)?;
    Ok(FubiniReport {
        combined,
        iterated_first,
        iterated_second,
        match_first,
        match_second,
    })
}

/// Build the iterated integral (outer over M when `outer_first`, otherwise
/// outer over N) and compare it with the combined structure.
fn iterate(
    fm: &ModCatFunctor,
    prod: &ProductModel,
    combined: &IntegralStructure,
    outer_first: bool,
    shape_bound: usize,
) -> Result<(IntegralStructure, ValidationReport)> {
    let (outer_model, inner_base) = if outer_first {
        (prod.m.clone(), prod.n.base().clone())
    } else {
        (prod.n.clone(), prod.m.base().clone())
    };
    let outer_base = outer_model.base().clone();
    // Inner integrals, one per outer object.
    let mut inner_fms = Vec::new();
    let mut inner_structs = Vec::new();
    for o in outer_base.objects() {
        let fixed = if outer_first {
            Fixed::First(o)
        } else {
            Fixed::Second(o)
        };
        let rest = restriction(fm, prod, &fixed)?;
        let istruct = build_integral(&rest, BuildMode::RequireProperRelative, shape_bound)?;
        inner_fms.push(rest);
        inner_structs.push(istruct);
    }
    // Outer arrows: integrate the fiberwise pushforward family.
    let mut on_arrow = Vec::new();
    for f in outer_base.morphisms() {
        let (a, a2) = (outer_base.source(f), outer_base.target(f));
        let family: Vec<Adjunction> = inner_base
            .objects()
            .map(|b| {
                let pair = if outer_first {
                    prod.pair_mor(f, inner_base.identity(b))
                } else {
                    prod.pair_mor(inner_base.identity(b), f)
                };
                fm.underlying().on_arrow(pair).clone()
            })
            .collect();
        let adj = integrate_family(
            format!("push[{}]", outer_base.morphism_name(f)),
            &inner_fms[a.0],
            inner_structs[a.0].groth(),
            &inner_fms[a2.0],
            inner_structs[a2.0].groth(),
            &family,
        )?;
        on_arrow.push(adj);
    }
    let label = if outer_first {
        format!("∫∫[{}; outer {}]", fm.name, prod.m.name)
    } else {
        format!("∫∫[{}; outer {}]", fm.name, prod.n.name)
    };
    let underlying = AdjCatFunctor::strict(
        label.clone(),
        outer_base.clone(),
        inner_structs.iter().map(|s| s.total().clone()).collect(),
        on_arrow,
    )?;
    let fiber_models: Vec<ModelCat> = inner_structs
        .iter()
        .map(|s| {
            s.model()
                .cloned()
                .ok_or_else(|| Error::Precondition("inner integral lacks factorizations".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let outer_fm = ModCatFunctor::new(label, underlying, outer_model, fiber_models)?;
    let iterated = build_integral(&outer_fm, BuildMode::RequireProperRelative, shape_bound)?;
    // Canonical reassociation onto the combined total.
    let iter_groth = iterated.groth();
    let iter_total = iterated.total();
    let object_map: Vec<ObjId> = iter_total
        .objects()
        .map(|o| {
            let (a, t) = iter_groth.obj_pair(o);
            let (b, x) = inner_structs[a.0].groth().obj_pair(t);
            let pair = if outer_first {
                prod.pair_obj(a, b)
            } else {
                prod.pair_obj(b, a)
            };
            combined
                .groth()
                .pair_obj(pair, x)
                .expect("reassociated pair exists")
        })
        .collect();
    let morphism_map: Vec<MorId> = iter_total
        .morphisms()
        .map(|m| {
            let (f, big_phi) = iter_groth.mor_pair(m);
            let (a2, _) = iter_groth.obj_pair(iter_total.target(m));
            let (u, phi) = inner_structs[a2.0].groth().mor_pair(big_phi);
            let pair = if outer_first {
                prod.pair_mor(f, u)
            } else {
                prod.pair_mor(u, f)
            };
            combined
                .groth()
                .pair_mor(object_map[iter_total.source(m).0], pair, phi)
                .expect("reassociated pair exists")
        })
        .collect();
    let iso = FinFunctor::new(
        format!("{}≅{}", iterated.name, combined.name),
        iter_total.clone(),
        combined.total().clone(),
        object_map,
        morphism_map,
    )?;
    let mut report = ValidationReport::new(format!("fubini comparison {}", iterated.name));
    report.merge(iso.validate());
    // Bijectivity on objects and morphisms.
    if iter_total.object_count() != combined.total().object_count()
        || iter_total.morphism_count() != combined.total().morphism_count()
    {
        report.push("bijection", "object/morphism counts differ");
    } else {
        let mut seen = vec![false; combined.total().morphism_count()];
        for m in iter_total.morphisms() {
            seen[iso.apply_mor(m).0] = true;
        }
        if seen.iter().any(|&b| !b) {
            report.push("bijection", "morphism map is not onto");
        }
    }
    // Class-for-class agreement.
    for m in iter_total.morphisms() {
        let image = iso.apply_mor(m);
        for (label, lhs, rhs) in [
            ("weq", iterated.is_weq(m), combined.is_weq(image)),
            ("cof", iterated.is_cof(m), combined.is_cof(image)),
            ("fib", iterated.is_fib(m), combined.is_fib(image)),
        ] {
            if lhs != rhs {
                report.push(
                    format!("class-mismatch-{label}"),
                    format!(
                        "{}: iterated={lhs}, combined={rhs}",
                        iter_total.morphism_name(m)
                    ),
                );
            }
        }
    }
    Ok((iterated, report))
}
