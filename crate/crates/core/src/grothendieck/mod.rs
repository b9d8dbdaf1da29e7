//! The Grothendieck construction for diagrams of adjunctions: integration,
//! (co)Cartesian classification, biCartesian fibration checks, straightening
//! and relative (co)limits.

mod cartesian;
mod integrate;
mod relative;
mod straighten;

pub use cartesian::{
    cartesian_lift, check_bicartesian, classify_cartesian, cocartesian_lift, CartesianFlags,
};
pub use integrate::integrate_cat;
pub use relative::{
    enumerate_relative_lifts, relative_colimit, relative_limit, RelativeCone, RelativeDiagram,
};
pub use straighten::{check_bicomplete_fibers, straighten_cat, Straightened};

use crate::adjunction::Adjunction;
use crate::fincat::{FinCat, FinFunctor, MorId, NatTrans, ObjId};
use crate::report::ValidationReport;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::rc::Rc;

/// A pseudo-functor from a finite base into adjunctions: one fiber category
/// per object, one adjunction `f_! ⊣ f^*` per arrow, and explicit coherence
/// cells for composition and identities.
#[derive(Debug, Clone)]
pub struct AdjCatFunctor {
    pub name: String,
    base: Rc<FinCat>,
    fibers: Vec<Rc<FinCat>>,
    on_arrow: Vec<Adjunction>,
    /// `(g, f) → invertible (g∘f)_! ⇒ g_! ∘ f_!` for every composable pair.
    comp_iso: BTreeMap<(MorId, MorId), NatTrans>,
    /// Per object: invertible `Id ⇒ (id_A)_!`.
    id_iso: Vec<NatTrans>,
}

impl AdjCatFunctor {
    pub fn new(
        name: impl Into<String>,
        base: Rc<FinCat>,
        fibers: Vec<Rc<FinCat>>,
        on_arrow: Vec<Adjunction>,
        comp_iso: BTreeMap<(MorId, MorId), NatTrans>,
        id_iso: Vec<NatTrans>,
    ) -> Result<Self> {
        if fibers.len() != base.object_count() || on_arrow.len() != base.morphism_count() {
            return Err(Error::FunctorShape);
        }
        Ok(AdjCatFunctor {
            name: name.into(),
            base,
            fibers,
            on_arrow,
            comp_iso,
            id_iso,
        })
    }

    /// Build a strict functor: `(g∘f)_! = g_! ∘ f_!` and `(id_A)_! = Id` must
    /// hold on the nose; all coherence cells are identities.
    pub fn strict(
        name: impl Into<String>,
        base: Rc<FinCat>,
        fibers: Vec<Rc<FinCat>>,
        on_arrow: Vec<Adjunction>,
    ) -> Result<Self> {
        let name = name.into();
        if fibers.len() != base.object_count() || on_arrow.len() != base.morphism_count() {
            return Err(Error::FunctorShape);
        }
        for o in base.objects() {
            let id_arrow = &on_arrow[base.identity(o).0];
            if id_arrow.left() != &FinFunctor::identity(fibers[o.0].clone()) {
                return Err(Error::Coherence(format!(
                    "({})_! is not the identity functor",
                    base.morphism_name(base.identity(o))
                )));
            }
        }
        for g in base.morphisms() {
            for f in base.morphisms() {
                let Some(gf) = base.compose(g, f) else { continue };
                let composite = on_arrow[g.0].left().compose(on_arrow[f.0].left())?;
                if on_arrow[gf.0].left().object_map() != composite.object_map()
                    || on_arrow[gf.0].left().morphism_map() != composite.morphism_map()
                {
                    return Err(Error::Coherence(format!(
                        "({})_! ≠ ({})_! ∘ ({})_!",
                        base.morphism_name(gf),
                        base.morphism_name(g),
                        base.morphism_name(f)
                    )));
                }
            }
        }
        let mut comp_iso = BTreeMap::new();
        for g in base.morphisms() {
            for f in base.morphisms() {
                if let Some(gf) = base.compose(g, f) {
                    let composite = on_arrow[g.0].left().compose(on_arrow[f.0].left())?;
                    let components = fibers[base.source(f).0]
                        .objects()
                        .map(|x| {
                            fibers[base.target(g).0]
                                .identity(on_arrow[gf.0].left().apply_obj(x))
                        })
                        .collect();
                    comp_iso.insert(
                        (g, f),
                        NatTrans::new(
                            format!(
                                "α({},{})",
                                base.morphism_name(g),
                                base.morphism_name(f)
                            ),
                            on_arrow[gf.0].left().clone(),
                            composite,
                            components,
                        )?,
                    );
                }
            }
        }
        let id_iso = base
            .objects()
            .map(|o| {
                let fiber = &fibers[o.0];
                NatTrans::new(
                    format!("ι({})", base.object_name(o)),
                    FinFunctor::identity(fiber.clone()),
                    on_arrow[base.identity(o).0].left().clone(),
                    fiber.objects().map(|x| fiber.identity(x)).collect(),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AdjCatFunctor {
            name,
            base,
            fibers,
            on_arrow,
            comp_iso,
            id_iso,
        })
    }

    /// Constant functor at one fiber, all arrows mapped to the identity
    /// adjunction.
    pub fn constant(name: impl Into<String>, base: Rc<FinCat>, fiber: Rc<FinCat>) -> Self {
        let fibers = vec![fiber.clone(); base.object_count()];
        let on_arrow = base
            .morphisms()
            .map(|_| Adjunction::identity(fiber.clone()))
            .collect();
        AdjCatFunctor::strict(name, base, fibers, on_arrow)
            .expect("identity adjunctions are strict")
    }

    pub fn base(&self) -> &Rc<FinCat> {
        &self.base
    }

    pub fn fiber(&self, o: ObjId) -> &Rc<FinCat> {
        &self.fibers[o.0]
    }

    pub fn fibers(&self) -> &[Rc<FinCat>] {
        &self.fibers
    }

    pub fn on_arrow(&self, f: MorId) -> &Adjunction {
        &self.on_arrow[f.0]
    }

    pub fn comp_iso(&self, g: MorId, f: MorId) -> Option<&NatTrans> {
        self.comp_iso.get(&(g, f))
    }

    pub fn id_iso(&self, o: ObjId) -> &NatTrans {
        &self.id_iso[o.0]
    }

    /// Pushforward of a fiber object along a base arrow.
    pub fn push_obj(&self, f: MorId, x: ObjId) -> ObjId {
        self.on_arrow[f.0].left().apply_obj(x)
    }

    /// Pullback of a fiber object along a base arrow.
    pub fn pull_obj(&self, f: MorId, y: ObjId) -> ObjId {
        self.on_arrow[f.0].right().apply_obj(y)
    }

    /// Validate everything: fiber categories, adjunctions, cell shapes and
    /// invertibility, the cocycle condition on composable triples and the
    /// unit laws connecting `comp_iso` with `id_iso`.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new(format!("diagram of adjunctions {}", self.name));
        let base = &self.base;
        for fiber in &self.fibers {
            report.merge(crate::fincat::validate_category(fiber));
        }
        for f in base.morphisms() {
            let adj = &self.on_arrow[f.0];
            if adj.source() != &self.fibers[base.source(f).0]
                || adj.target() != &self.fibers[base.target(f).0]
            {
                report.push("arrow-endpoints", base.morphism_name(f).to_string());
                continue;
            }
            report.merge(adj.validate());
        }
        if !report.passed() {
            return report;
        }
        // Cell shapes and invertibility.
        for g in base.morphisms() {
            for f in base.morphisms() {
                let Some(gf) = base.compose(g, f) else { continue };
                let Some(alpha) = self.comp_iso(g, f) else {
                    report.push(
                        "comp-iso-missing",
                        format!("({}, {})", base.morphism_name(g), base.morphism_name(f)),
                    );
                    continue;
                };
                report.merge(alpha.validate());
                if !alpha.is_componentwise_iso() {
                    report.push(
                        "comp-iso-invertible",
                        format!("({}, {})", base.morphism_name(g), base.morphism_name(f)),
                    );
                }
                if alpha.source() != self.on_arrow[gf.0].left() {
                    report.push(
                        "comp-iso-source",
                        format!("({}, {})", base.morphism_name(g), base.morphism_name(f)),
                    );
                }
            }
        }
        for o in base.objects() {
            let iota = &self.id_iso[o.0];
            report.merge(iota.validate());
            if !iota.is_componentwise_iso() {
                report.push("id-iso-invertible", base.object_name(o).to_string());
            }
        }
        if !report.passed() {
            return report;
        }
        // Cocycle: for h∘g∘f the two reassociation routes agree.
        for h in base.morphisms() {
            for g in base.morphisms() {
                if base.target(g) != base.source(h) {
                    continue;
                }
                let hg = base.compose(h, g).expect("composable");
                for f in base.morphisms() {
                    if base.target(f) != base.source(g) {
                        continue;
                    }
                    let gf = base.compose(g, f).expect("composable");
                    let fiber_src = &self.fibers[base.source(f).0];
                    let fiber_tgt = &self.fibers[base.target(h).0];
                    for x in fiber_src.objects() {
                        let route_a = fiber_tgt.compose(
                            self.on_arrow[h.0]
                                .left()
                                .apply_mor(self.comp_iso(g, f).unwrap().component(x)),
                            self.comp_iso(h, gf).unwrap().component(x),
                        );
                        let fx = self.push_obj(f, x);
                        let route_b = fiber_tgt.compose(
                            self.comp_iso(h, g).unwrap().component(fx),
                            self.comp_iso(hg, f).unwrap().component(x),
                        );
                        if route_a != route_b || route_a.is_none() {
                            report.push(
                                "cocycle",
                                format!(
                                    "({}, {}, {}) at {}",
                                    base.morphism_name(h),
                                    base.morphism_name(g),
                                    base.morphism_name(f),
                                    fiber_src.object_name(x)
                                ),
                            );
                        }
                    }
                }
            }
        }
        // Unit laws.
        for f in base.morphisms() {
            let (a, b) = (base.source(f), base.target(f));
            let fiber_a = &self.fibers[a.0];
            let fiber_b = &self.fibers[b.0];
            for x in fiber_a.objects() {
                let left_unit = self.comp_iso(f, base.identity(a)).unwrap().component(x);
                let expected =
                    self.on_arrow[f.0].left().apply_mor(self.id_iso[a.0].component(x));
                if left_unit != expected {
                    report.push(
                        "unit-law-right",
                        format!("{} at {}", base.morphism_name(f), fiber_a.object_name(x)),
                    );
                }
                let right_unit = self.comp_iso(base.identity(b), f).unwrap().component(x);
                let expected = self.id_iso[b.0].component(self.push_obj(f, x));
                if right_unit != expected {
                    report.push(
                        "unit-law-left",
                        format!("{} at {}", base.morphism_name(f), fiber_b.object_name(x)),
                    );
                }
            }
        }
        report
    }
}

/// A Grothendieck construction: the total category, the projection, and the
/// pair decomposition of its objects and morphisms.
#[derive(Debug, Clone)]
pub struct GrothCat {
    functor: AdjCatFunctor,
    total: Rc<FinCat>,
    projection: FinFunctor,
    /// Total object → (base object, fiber object).
    obj_pairs: Vec<(ObjId, ObjId)>,
    /// Total morphism → (base morphism f, fiber morphism φ: f_!X → Y).
    mor_pairs: Vec<(MorId, MorId)>,
    obj_index: BTreeMap<(ObjId, ObjId), ObjId>,
    /// (source total object, f, φ) → total morphism.
    mor_index: BTreeMap<(ObjId, MorId, MorId), MorId>,
}

impl GrothCat {
    pub fn functor(&self) -> &AdjCatFunctor {
        &self.functor
    }

    pub fn total(&self) -> &Rc<FinCat> {
        &self.total
    }

    pub fn projection(&self) -> &FinFunctor {
        &self.projection
    }

    pub fn obj_pair(&self, o: ObjId) -> (ObjId, ObjId) {
        self.obj_pairs[o.0]
    }

    pub fn mor_pair(&self, m: MorId) -> (MorId, MorId) {
        self.mor_pairs[m.0]
    }

    pub fn pair_obj(&self, base_obj: ObjId, fiber_obj: ObjId) -> Option<ObjId> {
        self.obj_index.get(&(base_obj, fiber_obj)).copied()
    }

    pub fn pair_mor(&self, source: ObjId, f: MorId, phi: MorId) -> Option<MorId> {
        self.mor_index.get(&(source, f, phi)).copied()
    }

    /// The canonical coCartesian lift `(f, Id)` of `f` starting at a total
    /// object over the source of `f`.
    pub fn canonical_lift(&self, total_obj: ObjId, f: MorId) -> MorId {
        let (a, x) = self.obj_pair(total_obj);
        debug_assert_eq!(self.functor.base().source(f), a);
        let fx = self.functor.push_obj(f, x);
        let phi = self.functor.fiber(self.functor.base().target(f)).identity(fx);
        self.pair_mor(total_obj, f, phi)
            .expect("canonical lift exists by construction")
    }
}
