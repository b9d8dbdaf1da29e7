//! Functors and natural transformations between finite categories.

use super::{FinCat, MorId, ObjId};
use crate::report::ValidationReport;
use crate::{Error, Result};
use std::rc::Rc;

/// A functor given by explicit object and morphism maps. Equality is
/// structural: names do not participate.
#[derive(Debug, Clone)]
pub struct FinFunctor {
    pub name: String,
    source: Rc<FinCat>,
    target: Rc<FinCat>,
    object_map: Vec<ObjId>,
    morphism_map: Vec<MorId>,
}

impl PartialEq for FinFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.object_map == other.object_map
            && self.morphism_map == other.morphism_map
    }
}

impl FinFunctor {
    pub fn new(
        name: impl Into<String>,
        source: Rc<FinCat>,
        target: Rc<FinCat>,
        object_map: Vec<ObjId>,
        morphism_map: Vec<MorId>,
    ) -> Result<Self> {
        if object_map.len() != source.object_count() || morphism_map.len() != source.morphism_count()
        {
            return Err(Error::FunctorShape);
        }
        for &o in &object_map {
            if o.0 >= target.object_count() {
                return Err(Error::ObjectRange(o.0));
            }
        }
        for &m in &morphism_map {
            if m.0 >= target.morphism_count() {
                return Err(Error::MorphismRange(m.0));
            }
        }
        Ok(FinFunctor {
            name: name.into(),
            source,
            target,
            object_map,
            morphism_map,
        })
    }

    pub fn identity(c: Rc<FinCat>) -> Self {
        FinFunctor {
            name: format!("id_{}", c.name()),
            source: c.clone(),
            object_map: c.objects().collect(),
            morphism_map: c.morphisms().collect(),
            target: c,
        }
    }

    /// Constant functor at an object of `target`.
    pub fn constant(source: Rc<FinCat>, target: Rc<FinCat>, at: ObjId) -> Self {
        FinFunctor {
            name: format!("const_{}", target.object_name(at)),
            object_map: vec![at; source.object_count()],
            morphism_map: vec![target.identity(at); source.morphism_count()],
            source,
            target,
        }
    }

    pub fn source(&self) -> &Rc<FinCat> {
        &self.source
    }

    pub fn target(&self) -> &Rc<FinCat> {
        &self.target
    }

    pub fn apply_obj(&self, o: ObjId) -> ObjId {
        self.object_map[o.0]
    }

    pub fn apply_mor(&self, m: MorId) -> MorId {
        self.morphism_map[m.0]
    }

    pub fn object_map(&self) -> &[ObjId] {
        &self.object_map
    }

    pub fn morphism_map(&self) -> &[MorId] {
        &self.morphism_map
    }

    /// `self ∘ inner`, defined when categories agree by value.
    pub fn compose(&self, inner: &FinFunctor) -> Result<FinFunctor> {
        if inner.target.as_ref() != self.source.as_ref() {
            return Err(Error::CategoryMismatch(format!(
                "{} then {}",
                inner.name, self.name
            )));
        }
        Ok(FinFunctor {
            name: format!("{}∘{}", self.name, inner.name),
            source: inner.source.clone(),
            target: self.target.clone(),
            object_map: inner.object_map.iter().map(|&o| self.apply_obj(o)).collect(),
            morphism_map: inner
                .morphism_map
                .iter()
                .map(|&m| self.apply_mor(m))
                .collect(),
        })
    }

    /// Exhaustive functoriality check: endpoints, identities, composition.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new(format!("functor {}", self.name));
        let (s, t) = (&self.source, &self.target);
        for m in s.morphisms() {
            let fm = self.apply_mor(m);
            if t.source(fm) != self.apply_obj(s.source(m))
                || t.target(fm) != self.apply_obj(s.target(m))
            {
                report.push("endpoints", s.morphism_name(m).to_string());
            }
        }
        for o in s.objects() {
            if self.apply_mor(s.identity(o)) != t.identity(self.apply_obj(o)) {
                report.push("identity", s.object_name(o).to_string());
            }
        }
        for g in s.morphisms() {
            for f in s.morphisms() {
                if let Some(gf) = s.compose(g, f) {
                    let lhs = t.compose(self.apply_mor(g), self.apply_mor(f));
                    if lhs != Some(self.apply_mor(gf)) {
                        report.push(
                            "composition",
                            format!("({}, {})", s.morphism_name(g), s.morphism_name(f)),
                        );
                    }
                }
            }
        }
        report
    }
}

/// A natural transformation between parallel functors, stored as one
/// component morphism per source object. Equality is structural.
#[derive(Debug, Clone)]
pub struct NatTrans {
    pub name: String,
    source: FinFunctor,
    target: FinFunctor,
    components: Vec<MorId>,
}

impl PartialEq for NatTrans {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.components == other.components
    }
}

impl NatTrans {
    pub fn new(
        name: impl Into<String>,
        source: FinFunctor,
        target: FinFunctor,
        components: Vec<MorId>,
    ) -> Result<Self> {
        if source.source() != target.source() || source.target() != target.target() {
            return Err(Error::CategoryMismatch(
                "natural transformation endpoints".into(),
            ));
        }
        if components.len() != source.source().object_count() {
            return Err(Error::FunctorShape);
        }
        Ok(NatTrans {
            name: name.into(),
            source,
            target,
            components,
        })
    }

    pub fn identity(f: FinFunctor) -> Self {
        let components = f
            .source()
            .objects()
            .map(|o| f.target().identity(f.apply_obj(o)))
            .collect();
        NatTrans {
            name: format!("id_{}", f.name),
            source: f.clone(),
            target: f,
            components,
        }
    }

    pub fn source(&self) -> &FinFunctor {
        &self.source
    }

    pub fn target(&self) -> &FinFunctor {
        &self.target
    }

    pub fn component(&self, o: ObjId) -> MorId {
        self.components[o.0]
    }

    pub fn components(&self) -> &[MorId] {
        &self.components
    }

    /// Component shapes plus every naturality square.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new(format!("natural transformation {}", self.name));
        let dom = self.source.source();
        let cod = self.source.target();
        for o in dom.objects() {
            let c = self.component(o);
            if cod.source(c) != self.source.apply_obj(o) || cod.target(c) != self.target.apply_obj(o)
            {
                report.push("component-shape", dom.object_name(o).to_string());
            }
        }
        for m in dom.morphisms() {
            let (a, b) = (dom.source(m), dom.target(m));
            let lhs = cod.compose(self.target.apply_mor(m), self.component(a));
            let rhs = cod.compose(self.component(b), self.source.apply_mor(m));
            if lhs != rhs || lhs.is_none() {
                report.push("naturality", dom.morphism_name(m).to_string());
            }
        }
        report
    }

    pub fn is_componentwise_iso(&self) -> bool {
        let cod = self.source.target();
        self.components.iter().all(|&c| cod.is_iso(c))
    }

    /// Vertical composite `other ∘ self` (self: F ⇒ G, other: G ⇒ H).
    pub fn then(&self, other: &NatTrans) -> Result<NatTrans> {
        if self.target != other.source {
            return Err(Error::CategoryMismatch("vertical composition".into()));
        }
        let cod = self.source.target().clone();
        let components = self
            .source
            .source()
            .objects()
            .map(|o| {
                cod.compose(other.component(o), self.component(o))
                    .ok_or_else(|| Error::CategoryMismatch("vertical composition table".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        NatTrans::new(
            format!("{}·{}", other.name, self.name),
            self.source.clone(),
            other.target.clone(),
            components,
        )
    }
}

/// Every functor `shape → target`, in canonical order (object maps vary
/// lexicographically, then morphism maps).
pub fn all_functors(shape: &Rc<FinCat>, target: &Rc<FinCat>) -> Vec<FinFunctor> {
    let mut out = Vec::new();
    let n_obj = shape.object_count();
    let mut object_map = vec![ObjId(0); n_obj];
    enumerate_object_maps(shape, target, &mut object_map, 0, &mut |objs| {
        let mut morphism_map = vec![MorId(0); shape.morphism_count()];
        enumerate_morphism_maps(shape, target, objs, &mut morphism_map, 0, &mut |mors| {
            let f = FinFunctor {
                name: String::from("diagram"),
                source: shape.clone(),
                target: target.clone(),
                object_map: objs.to_vec(),
                morphism_map: mors.to_vec(),
            };
            if f.validate().passed() {
                out.push(f);
            }
        });
    });
    out
}

fn enumerate_object_maps(
    shape: &FinCat,
    target: &FinCat,
    map: &mut Vec<ObjId>,
    depth: usize,
    emit: &mut impl FnMut(&[ObjId]),
) {
    if depth == shape.object_count() {
        emit(map);
        return;
    }
    for o in target.objects() {
        map[depth] = o;
        enumerate_object_maps(shape, target, map, depth + 1, emit);
    }
}

fn enumerate_morphism_maps(
    shape: &FinCat,
    target: &FinCat,
    objs: &[ObjId],
    map: &mut Vec<MorId>,
    depth: usize,
    emit: &mut impl FnMut(&[MorId]),
) {
    if depth == shape.morphism_count() {
        emit(map);
        return;
    }
    let m = MorId(depth);
    if shape.is_identity(m) {
        map[depth] = target.identity(objs[shape.source(m).0]);
        enumerate_morphism_maps(shape, target, objs, map, depth + 1, emit);
        return;
    }
    let (a, b) = (objs[shape.source(m).0], objs[shape.target(m).0]);
    for candidate in target.hom(a, b) {
        map[depth] = candidate;
        enumerate_morphism_maps(shape, target, objs, map, depth + 1, emit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{chain, point};

    #[test]
    fn identity_functor_validates() {
        let c = chain(3);
        assert!(FinFunctor::identity(c).validate().passed());
    }

    #[test]
    fn functor_counts_between_chains() {
        // Functors chain(2) → chain(2) = monotone maps on {0,1}: 00, 01, 11.
        let c = chain(2);
        assert_eq!(all_functors(&c, &c).len(), 3);
        // Functors pt → chain(3): one per object.
        assert_eq!(all_functors(&point("pt"), &chain(3)).len(), 3);
    }

    #[test]
    fn naturality_is_checked() {
        // Between const_0 and const_1 on chain(2) there is exactly one
        // transformation, with every component 0->1.
        let c = chain(2);
        let f = FinFunctor::constant(c.clone(), c.clone(), ObjId(0));
        let g = FinFunctor::constant(c.clone(), c.clone(), ObjId(1));
        let up = c.morphism_by_name("0->1").unwrap();
        let t = NatTrans::new("t", f.clone(), g.clone(), vec![up, up]).unwrap();
        assert!(t.validate().passed());
        let bad = NatTrans::new("bad", f, g, vec![up, c.identity(ObjId(0))]).unwrap();
        assert!(!bad.validate().passed());
    }
}
