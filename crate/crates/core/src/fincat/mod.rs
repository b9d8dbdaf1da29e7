//! Finite categories presented by explicit object/morphism lists and a total
//! composition table.
//!
//! Identifiers carry a canonical total order (their index), and every search
//! in the crate iterates in that order, so "choose a witness" operations are
//! deterministic. Values are immutable once built. A candidate that violates
//! the category axioms can still be represented: [`validate_category`]
//! reports the violations with witnesses instead of refusing to construct.

mod derive;
mod functor;
mod limits;
mod retracts;
mod shapes;

pub use derive::{arrow, coslice, derive, opposite, opposite_cat, product, slice, Construction, Derived, MorOrigin, ObjOrigin};
pub use functor::{all_functors, FinFunctor, NatTrans};
pub use limits::{enumerate_cones, find_colimit, find_limit, Cone, DiagramWithCone};
pub use retracts::{enumerate_retracts, RetractPresentation};
pub use shapes::{are_isomorphic, subcategory_shapes};

use crate::report::ValidationReport;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;

/// Index of an object in its category's canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjId(pub usize);

/// Index of a morphism in its category's canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "~{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub source: ObjId,
    pub target: ObjId,
}

/// A finite category: named objects, named morphisms, an identity assignment
/// and a composition table indexed by pairs of morphism ids.
#[derive(Clone, PartialEq, Eq)]
pub struct FinCat {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identity: Vec<MorId>,
    /// Row-major table: entry for `g ∘ f` lives at `g.0 * n + f.0`.
    compose: Vec<Option<MorId>>,
}

impl fmt::Debug for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FinCat({}: {} objects, {} morphisms)",
            self.name,
            self.objects.len(),
            self.morphisms.len()
        )
    }
}

impl FinCat {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> {
        (0..self.morphisms.len()).map(MorId)
    }

    pub fn object_name(&self, o: ObjId) -> &str {
        &self.objects[o.0]
    }

    pub fn morphism_name(&self, m: MorId) -> &str {
        &self.morphisms[m.0].name
    }

    pub fn source(&self, m: MorId) -> ObjId {
        self.morphisms[m.0].source
    }

    pub fn target(&self, m: MorId) -> ObjId {
        self.morphisms[m.0].target
    }

    pub fn identity(&self, o: ObjId) -> MorId {
        self.identity[o.0]
    }

    pub fn is_identity(&self, m: MorId) -> bool {
        self.identity[self.source(m).0] == m
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|n| n == name).map(ObjId)
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<MorId> {
        self.morphisms.iter().position(|m| m.name == name).map(MorId)
    }

    /// The composite `g ∘ f`, if the table has an entry for it.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.compose[g.0 * self.morphisms.len() + f.0]
    }

    /// Composite of a non-empty chain `[f1, f2, ..., fk]` read left to right
    /// (so the result is `fk ∘ ... ∘ f1`).
    pub fn compose_chain(&self, chain: &[MorId]) -> Option<MorId> {
        let mut acc = *chain.first()?;
        for &m in &chain[1..] {
            acc = self.compose(m, acc)?;
        }
        Some(acc)
    }

    /// Morphisms `a → b` in canonical order.
    pub fn hom(&self, a: ObjId, b: ObjId) -> Vec<MorId> {
        self.morphisms()
            .filter(|&m| self.source(m) == a && self.target(m) == b)
            .collect()
    }

    /// Two-sided inverse search.
    pub fn is_iso(&self, m: MorId) -> bool {
        self.inverse(m).is_some()
    }

    pub fn inverse(&self, m: MorId) -> Option<MorId> {
        let (a, b) = (self.source(m), self.target(m));
        self.hom(b, a).into_iter().find(|&g| {
            self.compose(g, m) == Some(self.identity(a))
                && self.compose(m, g) == Some(self.identity(b))
        })
    }

    /// A skeletal poset: every hom-set has at most one element and the only
    /// isomorphisms are identities.
    pub fn is_skeletal_poset(&self) -> bool {
        for a in self.objects() {
            for b in self.objects() {
                let h = self.hom(a, b);
                if h.len() > 1 {
                    return false;
                }
                if a != b && h.len() == 1 && !self.hom(b, a).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// First object that admits a morphism *to* every object, verified
    /// initial by uniqueness.
    pub fn initial_object(&self) -> Option<ObjId> {
        self.objects()
            .find(|&a| self.objects().all(|b| self.hom(a, b).len() == 1))
    }

    pub fn terminal_object(&self) -> Option<ObjId> {
        self.objects()
            .find(|&b| self.objects().all(|a| self.hom(a, b).len() == 1))
    }

    /// Structural equality under the identity correspondence of indices:
    /// same counts, endpoints, identities and composition table, names
    /// ignored.
    pub fn same_shape(&self, other: &FinCat) -> bool {
        self.objects.len() == other.objects.len()
            && self.morphisms.len() == other.morphisms.len()
            && self
                .morphisms
                .iter()
                .zip(&other.morphisms)
                .all(|(a, b)| a.source == b.source && a.target == b.target)
            && self.identity == other.identity
            && self.compose == other.compose
    }

    /// Rename the category wholesale; object/morphism names are replaced by
    /// the outputs of the supplied functions. Structure is untouched.
    pub fn relabel(
        &self,
        name: impl Into<String>,
        obj: impl Fn(ObjId) -> String,
        mor: impl Fn(MorId) -> String,
    ) -> FinCat {
        FinCat {
            name: name.into(),
            objects: self.objects().map(obj).collect(),
            morphisms: self
                .morphisms()
                .map(|m| Morphism {
                    name: mor(m),
                    source: self.source(m),
                    target: self.target(m),
                })
                .collect(),
            identity: self.identity.clone(),
            compose: self.compose.clone(),
        }
    }
}

/// Incremental constructor for [`FinCat`].
///
/// `build` performs structural checks only (indices in range, identities
/// total, no duplicate table entries); the category *axioms* are the business
/// of [`validate_category`] so that broken candidates can be represented and
/// reported on.
#[derive(Debug, Clone)]
pub struct CatBuilder {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identity: BTreeMap<usize, MorId>,
    compose: BTreeMap<(usize, usize), MorId>,
}

impl CatBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        CatBuilder {
            name: name.into(),
            objects: Vec::new(),
            morphisms: Vec::new(),
            identity: BTreeMap::new(),
            compose: BTreeMap::new(),
        }
    }

    pub fn object(&mut self, name: impl Into<String>) -> ObjId {
        self.objects.push(name.into());
        ObjId(self.objects.len() - 1)
    }

    /// Add an object together with its identity morphism named `id_<obj>`.
    pub fn object_with_identity(&mut self, name: impl Into<String>) -> ObjId {
        let name = name.into();
        let o = self.object(name.clone());
        let id = self.morphism(format!("id_{name}"), o, o);
        self.set_identity(o, id);
        o
    }

    pub fn morphism(&mut self, name: impl Into<String>, source: ObjId, target: ObjId) -> MorId {
        self.morphisms.push(Morphism {
            name: name.into(),
            source,
            target,
        });
        MorId(self.morphisms.len() - 1)
    }

    pub fn set_identity(&mut self, o: ObjId, m: MorId) {
        self.identity.insert(o.0, m);
    }

    pub fn set_composite(&mut self, g: MorId, f: MorId, gf: MorId) {
        self.compose.insert((g.0, f.0), gf);
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    /// Fill in every composite involving an identity on the appropriate
    /// side. `build` runs this automatically; explicitly set entries are
    /// never overwritten, so deliberately broken unit laws stay representable.
    pub fn close_identities(&mut self) {
        let n = self.morphisms.len();
        for f in 0..n {
            let (src, tgt) = (self.morphisms[f].source, self.morphisms[f].target);
            if let Some(&id) = self.identity.get(&src.0) {
                self.compose.entry((f, id.0)).or_insert(MorId(f));
            }
            if let Some(&id) = self.identity.get(&tgt.0) {
                self.compose.entry((id.0, f)).or_insert(MorId(f));
            }
        }
    }

    pub fn build(mut self) -> Result<FinCat> {
        self.close_identities();
        let n_obj = self.objects.len();
        let n_mor = self.morphisms.len();
        for m in &self.morphisms {
            if m.source.0 >= n_obj {
                return Err(Error::ObjectRange(m.source.0));
            }
            if m.target.0 >= n_obj {
                return Err(Error::ObjectRange(m.target.0));
            }
        }
        let mut identity = Vec::with_capacity(n_obj);
        for o in 0..n_obj {
            match self.identity.get(&o) {
                Some(&m) if m.0 < n_mor => identity.push(m),
                Some(&m) => return Err(Error::MorphismRange(m.0)),
                None => return Err(Error::MissingIdentity(self.objects[o].clone())),
            }
        }
        let mut table = vec![None; n_mor * n_mor];
        for (&(g, f), &gf) in &self.compose {
            if g >= n_mor {
                return Err(Error::MorphismRange(g));
            }
            if f >= n_mor {
                return Err(Error::MorphismRange(f));
            }
            if gf.0 >= n_mor {
                return Err(Error::MorphismRange(gf.0));
            }
            table[g * n_mor + f] = Some(gf);
        }
        Ok(FinCat {
            name: self.name,
            objects: self.objects,
            morphisms: self.morphisms,
            identity,
            compose: table,
        })
    }
}

/// Check the category axioms exhaustively. The report lists every violated
/// axiom with a witness pair/triple; an empty report means the candidate is
/// a category.
pub fn validate_category(c: &FinCat) -> ValidationReport {
    let mut report = ValidationReport::new(format!("category {}", c.name));
    // Identity assignment shape.
    for o in c.objects() {
        let id = c.identity(o);
        if c.source(id) != o || c.target(id) != o {
            report.push(
                "identity-shape",
                format!(
                    "identity of {} is {}: {} -> {}",
                    c.object_name(o),
                    c.morphism_name(id),
                    c.object_name(c.source(id)),
                    c.object_name(c.target(id))
                ),
            );
        }
    }
    // Closure: an entry exactly when composable, with correct endpoints.
    for g in c.morphisms() {
        for f in c.morphisms() {
            let composable = c.target(f) == c.source(g);
            match c.compose(g, f) {
                Some(gf) if !composable => report.push(
                    "non-composable-entry",
                    format!(
                        "({}, {}) has entry {}",
                        c.morphism_name(g),
                        c.morphism_name(f),
                        c.morphism_name(gf)
                    ),
                ),
                Some(gf) => {
                    if c.source(gf) != c.source(f) || c.target(gf) != c.target(g) {
                        report.push(
                            "composite-endpoints",
                            format!(
                                "({}, {}) = {} has wrong endpoints",
                                c.morphism_name(g),
                                c.morphism_name(f),
                                c.morphism_name(gf)
                            ),
                        );
                    }
                }
                None if composable => report.push(
                    "missing-composite",
                    format!("({}, {})", c.morphism_name(g), c.morphism_name(f)),
                ),
                None => {}
            }
        }
    }
    // Units.
    for f in c.morphisms() {
        let ids = c.identity(c.source(f));
        let idt = c.identity(c.target(f));
        if c.compose(f, ids) != Some(f) {
            report.push(
                "right-unit",
                format!("{} ∘ {}", c.morphism_name(f), c.morphism_name(ids)),
            );
        }
        if c.compose(idt, f) != Some(f) {
            report.push(
                "left-unit",
                format!("{} ∘ {}", c.morphism_name(idt), c.morphism_name(f)),
            );
        }
    }
    // Associativity over every composable triple.
    for h in c.morphisms() {
        for g in c.morphisms() {
            if c.target(g) != c.source(h) {
                continue;
            }
            for f in c.morphisms() {
                if c.target(f) != c.source(g) {
                    continue;
                }
                let left = c.compose(g, f).and_then(|gf| c.compose(h, gf));
                let right = c.compose(h, g).and_then(|hg| c.compose(hg, f));
                if left != right || left.is_none() {
                    report.push(
                        "associativity",
                        format!(
                            "({}, {}, {})",
                            c.morphism_name(h),
                            c.morphism_name(g),
                            c.morphism_name(f)
                        ),
                    );
                }
            }
        }
    }
    report
}

/// Build a skeletal poset category from a list of `a < b` covering
/// relations. The reflexive-transitive closure is taken; each comparable
/// pair `a ≤ b` yields the unique morphism `a->b`. Cycles are rejected.
pub fn build_poset(name: impl Into<String>, relations: &[(&str, &str)]) -> Result<Rc<FinCat>> {
    let name = name.into();
    let mut objects: Vec<String> = Vec::new();
    let mut index = BTreeMap::new();
    let intern = |objects: &mut Vec<String>, index: &mut BTreeMap<String, usize>, s: &str| {
        *index.entry(s.to_string()).or_insert_with(|| {
            objects.push(s.to_string());
            objects.len() - 1
        })
    };
    let mut edges = Vec::new();
    for &(a, b) in relations {
        let ia = intern(&mut objects, &mut index, a);
        let ib = intern(&mut objects, &mut index, b);
        edges.push((ia, ib));
    }
    let n = objects.len();
    // Reflexive-transitive closure.
    let mut le = vec![vec![false; n]; n];
    for i in 0..n {
        le[i][i] = true;
    }
    for &(a, b) in &edges {
        le[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][k] && le[k][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && le[i][j] && le[j][i] {
                return Err(Error::PosetCycle(format!(
                    "{} ≤ {} ≤ {}",
                    objects[i], objects[j], objects[i]
                )));
            }
        }
    }
    poset_from_le(name, &objects, |i, j| le[i][j])
}

/// Internal: build the poset category from a decidable `≤` on named
/// elements. Identities come first in morphism order, then the strict pairs
/// in (source, target) lexicographic index order.
pub(crate) fn poset_from_le(
    name: impl Into<String>,
    objects: &[String],
    le: impl Fn(usize, usize) -> bool,
) -> Result<Rc<FinCat>> {
    let mut b = CatBuilder::new(name);
    let ids: Vec<ObjId> = objects
        .iter()
        .map(|o| b.object_with_identity(o.clone()))
        .collect();
    let n = objects.len();
    let mut arrow = vec![vec![None; n]; n];
    for i in 0..n {
        arrow[i][i] = b.identity.get(&i).map(|m| m.0);
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && le(i, j) {
                let m = b.morphism(format!("{}->{}", objects[i], objects[j]), ids[i], ids[j]);
                arrow[i][j] = Some(m.0);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let Some(f) = arrow[i][j] else { continue };
            for k in 0..n {
                let Some(g) = arrow[j][k] else { continue };
                let gf = arrow[i][k].expect("≤ is transitive");
                b.set_composite(MorId(g), MorId(f), MorId(gf));
            }
        }
    }
    let cat = b.build()?;
    debug_assert!(validate_category(&cat).passed());
    Ok(Rc::new(cat))
}

/// The one-object category with only its identity.
pub fn point(name: impl Into<String>) -> Rc<FinCat> {
    let mut b = CatBuilder::new(name);
    b.object_with_identity("pt");
    Rc::new(b.build().expect("point category is structurally sound"))
}

/// A linear order `0 < 1 < ... < k-1` on `k` elements.
pub fn chain(k: usize) -> Rc<FinCat> {
    let objects: Vec<String> = (0..k).map(|i| i.to_string()).collect();
    poset_from_le(format!("chain{k}"), &objects, |i, j| i <= j)
        .expect("chains are cycle-free")
}

/// The boolean lattice on two generators: 0 < a, b < 1.
pub fn boolean_lattice_2() -> Rc<FinCat> {
    build_poset(
        "B2",
        &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
    )
    .expect("B2 is cycle-free")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_category_validates() {
        let pt = point("pt");
        assert!(validate_category(&pt).passed());
        assert_eq!(pt.object_count(), 1);
        assert_eq!(pt.morphism_count(), 1);
    }

    #[test]
    fn mis_targeted_composite_is_reported() {
        // 0 -> 1 with a second object 2; force compose(id_1, f) = g: 0 -> 2.
        let mut b = CatBuilder::new("broken");
        let o0 = b.object_with_identity("0");
        let o1 = b.object_with_identity("1");
        let o2 = b.object_with_identity("2");
        let f = b.morphism("f", o0, o1);
        let g = b.morphism("g", o0, o2);
        b.close_identities();
        // Overwrite a unit composite with a mis-targeted morphism.
        let id1 = b.identity[&1];
        b.set_composite(id1, f, g);
        let cat = b.build().unwrap();
        let report = validate_category(&cat);
        assert!(!report.passed());
        assert!(report
            .violations
            .iter()
            .any(|v| v.rule == "composite-endpoints" && v.witness.contains("f")));
    }

    #[test]
    fn chain_counts() {
        // `0 < 1` → 3 morphisms; 3-chain → 6; B2 → 9 (comparable pairs).
        assert_eq!(chain(2).morphism_count(), 3);
        assert_eq!(chain(3).morphism_count(), 6);
        assert_eq!(boolean_lattice_2().morphism_count(), 9);
        for c in [chain(2), chain(3), chain(4), boolean_lattice_2()] {
            assert!(validate_category(&c).passed());
            assert!(c.is_skeletal_poset());
        }
    }

    #[test]
    fn poset_cycle_rejected() {
        let err = build_poset("cyc", &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::PosetCycle(_)));
    }

    #[test]
    fn initial_terminal_on_lattices() {
        let b2 = boolean_lattice_2();
        assert_eq!(b2.initial_object().map(|o| b2.object_name(o).to_string()), Some("0".into()));
        assert_eq!(b2.terminal_object().map(|o| b2.object_name(o).to_string()), Some("1".into()));
    }

    #[test]
    fn missing_identity_is_structural_error() {
        let mut b = CatBuilder::new("noid");
        b.object("x");
        assert!(matches!(b.build(), Err(Error::MissingIdentity(_))));
    }
}
