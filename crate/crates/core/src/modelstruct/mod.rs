//! Pre-model structures, lifting problems, the model-category axioms,
//! functorial factorizations, replacements, and Quillen adjunction checks.

mod axioms;
mod enumerate;
pub(crate) mod factorization;
mod lifting;
mod quillen;

pub use axioms::{check_bicomplete, check_model_axioms, AxiomReport, DEFAULT_SHAPE_BOUND};
pub use enumerate::enumerate_model_structures;
pub use factorization::{
    arrow_squares, search_functorial_factorization, search_functorial_factorization_with,
    ArrowSquare, FunctorialFactorization,
};
pub use lifting::{lifting_exists, LiftingSquare};
pub use quillen::{
    check_quillen, preserves_cof_trivcof, preserves_fib_trivfib, quillen_left_criterion,
    quillen_right_criterion, QuillenAdjunctionCert, QuillenMode,
};

use crate::fincat::{FinCat, MorId, ObjId};
use crate::report::ValidationReport;
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::rc::Rc;

/// The three distinguished classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MorClass {
    Weq,
    Cof,
    Fib,
}

impl MorClass {
    pub fn label(self) -> &'static str {
        match self {
            MorClass::Weq => "weq",
            MorClass::Cof => "cof",
            MorClass::Fib => "fib",
        }
    }
}

/// Three morphism classes on a finite category, each required to contain
/// every identity and be closed under composition. No further axioms are
/// assumed at this level.
#[derive(Debug, Clone, PartialEq)]
pub struct PreModel {
    pub name: String,
    base: Rc<FinCat>,
    weq: BTreeSet<MorId>,
    cof: BTreeSet<MorId>,
    fib: BTreeSet<MorId>,
}

impl PreModel {
    pub fn new(
        name: impl Into<String>,
        base: Rc<FinCat>,
        weq: BTreeSet<MorId>,
        cof: BTreeSet<MorId>,
        fib: BTreeSet<MorId>,
    ) -> Self {
        PreModel {
            name: name.into(),
            base,
            weq,
            cof,
            fib,
        }
    }

    /// All three classes set to every morphism (the structure every category
    /// carries trivially on the pre-model level).
    pub fn discrete_all(name: impl Into<String>, base: Rc<FinCat>) -> Self {
        let all: BTreeSet<MorId> = base.morphisms().collect();
        PreModel::new(name, base, all.clone(), all.clone(), all)
    }

    pub fn base(&self) -> &Rc<FinCat> {
        &self.base
    }

    pub fn class(&self, class: MorClass) -> &BTreeSet<MorId> {
        match class {
            MorClass::Weq => &self.weq,
            MorClass::Cof => &self.cof,
            MorClass::Fib => &self.fib,
        }
    }

    pub fn contains(&self, class: MorClass, m: MorId) -> bool {
        self.class(class).contains(&m)
    }

    pub fn is_weq(&self, m: MorId) -> bool {
        self.weq.contains(&m)
    }

    pub fn is_cof(&self, m: MorId) -> bool {
        self.cof.contains(&m)
    }

    pub fn is_fib(&self, m: MorId) -> bool {
        self.fib.contains(&m)
    }

    /// Trivial cofibrations, always computed as the intersection `Cof ∩ W`.
    pub fn triv_cof(&self) -> BTreeSet<MorId> {
        self.cof.intersection(&self.weq).copied().collect()
    }

    /// Trivial fibrations `Fib ∩ W`.
    pub fn triv_fib(&self) -> BTreeSet<MorId> {
        self.fib.intersection(&self.weq).copied().collect()
    }

    pub fn is_triv_cof(&self, m: MorId) -> bool {
        self.is_cof(m) && self.is_weq(m)
    }

    pub fn is_triv_fib(&self, m: MorId) -> bool {
        self.is_fib(m) && self.is_weq(m)
    }

    /// Subcategory requirements: identities present, closed under composition.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new(format!("pre-model {}", self.name));
        for (class, set) in [
            (MorClass::Weq, &self.weq),
            (MorClass::Cof, &self.cof),
            (MorClass::Fib, &self.fib),
        ] {
            for &m in set {
                if m.0 >= self.base.morphism_count() {
                    report.push(class.label(), format!("morphism index {} out of range", m.0));
                }
            }
            for o in self.base.objects() {
                if !set.contains(&self.base.identity(o)) {
                    report.push(
                        format!("{}-identities", class.label()),
                        self.base.object_name(o).to_string(),
                    );
                }
            }
            for &g in set {
                for &f in set {
                    if let Some(gf) = self.base.compose(g, f) {
                        if !set.contains(&gf) {
                            report.push(
                                format!("{}-composition", class.label()),
                                format!(
                                    "({}, {})",
                                    self.base.morphism_name(g),
                                    self.base.morphism_name(f)
                                ),
                            );
                        }
                    }
                }
            }
        }
        report
    }

    /// Insert every isomorphism into every class, reporting the omissions.
    /// Validators work on the completed structure but surface what was
    /// missing from the input.
    pub fn with_isos_inserted(&self) -> (PreModel, Vec<(MorClass, MorId)>) {
        let isos: Vec<MorId> = self.base.morphisms().filter(|&m| self.base.is_iso(m)).collect();
        let mut completed = self.clone();
        let mut omissions = Vec::new();
        for &iso in &isos {
            for class in [MorClass::Weq, MorClass::Cof, MorClass::Fib] {
                let set = match class {
                    MorClass::Weq => &mut completed.weq,
                    MorClass::Cof => &mut completed.cof,
                    MorClass::Fib => &mut completed.fib,
                };
                if set.insert(iso) {
                    omissions.push((class, iso));
                }
            }
        }
        (completed, omissions)
    }

    /// Stable textual rendering of one class ("all", "ids", or the sorted
    /// list of non-identity members).
    pub fn describe_class(&self, class: MorClass) -> String {
        let set = self.class(class);
        if set.len() == self.base.morphism_count() {
            return "all".into();
        }
        let non_id: Vec<&str> = set
            .iter()
            .filter(|&&m| !self.base.is_identity(m))
            .map(|&m| self.base.morphism_name(m))
            .collect();
        if non_id.is_empty() {
            "ids".into()
        } else {
            format!("[{}]", non_id.join(","))
        }
    }
}

/// A pre-model structure plus two functorial factorizations and the cached
/// replacements they induce.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelCat {
    pub name: String,
    structure: PreModel,
    fact_cof_trivfib: FunctorialFactorization,
    fact_trivcof_fib: FunctorialFactorization,
    initial: ObjId,
    terminal: ObjId,
    /// Per object: `(X^cof, ρ_X: X^cof → X)`.
    cof_replacement: Vec<(ObjId, MorId)>,
    /// Per object: `(X^fib, λ_X: X → X^fib)`.
    fib_replacement: Vec<(ObjId, MorId)>,
}

/// Cofibrant or fibrant replacement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReplacementKind {
    Cofibrant,
    Fibrant,
}

impl ModelCat {
    /// Assemble the structure and read the replacements off the stored
    /// factorizations. Demands initial and terminal objects; the model
    /// axioms themselves are checked by [`check_model_axioms`].
    pub fn new(
        name: impl Into<String>,
        structure: PreModel,
        fact_cof_trivfib: FunctorialFactorization,
        fact_trivcof_fib: FunctorialFactorization,
    ) -> Result<Self> {
        let name = name.into();
        let base = structure.base().clone();
        let initial = base
            .initial_object()
            .ok_or_else(|| Error::NoInitial(base.name().into()))?;
        let terminal = base
            .terminal_object()
            .ok_or_else(|| Error::NoTerminal(base.name().into()))?;
        let mut cof_replacement = Vec::with_capacity(base.object_count());
        let mut fib_replacement = Vec::with_capacity(base.object_count());
        for x in base.objects() {
            let from_initial = base.hom(initial, x)[0];
            cof_replacement.push((
                fact_cof_trivfib.middle(from_initial),
                fact_cof_trivfib.second(from_initial),
            ));
            let to_terminal = base.hom(x, terminal)[0];
            fib_replacement.push((
                fact_trivcof_fib.middle(to_terminal),
                fact_trivcof_fib.first(to_terminal),
            ));
        }
        Ok(ModelCat {
            name,
            structure,
            fact_cof_trivfib,
            fact_trivcof_fib,
            initial,
            terminal,
            cof_replacement,
            fib_replacement,
        })
    }

    pub fn structure(&self) -> &PreModel {
        &self.structure
    }

    pub fn base(&self) -> &Rc<FinCat> {
        self.structure.base()
    }

    pub fn initial(&self) -> ObjId {
        self.initial
    }

    pub fn terminal(&self) -> ObjId {
        self.terminal
    }

    pub fn fact_cof_trivfib(&self) -> &FunctorialFactorization {
        &self.fact_cof_trivfib
    }

    pub fn fact_trivcof_fib(&self) -> &FunctorialFactorization {
        &self.fact_trivcof_fib
    }

    /// `(X^cof, X^cof → X)` or `(X^fib, X → X^fib)`, read off the stored
    /// factorizations.
    pub fn replacement(&self, x: ObjId, kind: ReplacementKind) -> (ObjId, MorId) {
        match kind {
            ReplacementKind::Cofibrant => self.cof_replacement[x.0],
            ReplacementKind::Fibrant => self.fib_replacement[x.0],
        }
    }

    pub fn is_cofibrant(&self, x: ObjId) -> bool {
        let m = self.base().hom(self.initial, x)[0];
        self.structure.is_cof(m)
    }

    pub fn is_fibrant(&self, x: ObjId) -> bool {
        let m = self.base().hom(x, self.terminal)[0];
        self.structure.is_fib(m)
    }

    /// The one-object model category.
    pub fn trivial_point(name: impl Into<String>) -> ModelCat {
        let pt = crate::fincat::point("pt");
        let pm = PreModel::discrete_all(name, pt.clone());
        let fact = FunctorialFactorization::identity_second(&pt);
        ModelCat::new(pm.name.clone(), pm, fact.clone(), fact).expect("point has extremes")
    }

    pub fn is_weq(&self, m: MorId) -> bool {
        self.structure.is_weq(m)
    }

    pub fn is_cof(&self, m: MorId) -> bool {
        self.structure.is_cof(m)
    }

    pub fn is_fib(&self, m: MorId) -> bool {
        self.structure.is_fib(m)
    }

    pub fn is_triv_cof(&self, m: MorId) -> bool {
        self.structure.is_triv_cof(m)
    }

    pub fn is_triv_fib(&self, m: MorId) -> bool {
        self.structure.is_triv_fib(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::chain;

    #[test]
    fn replacement_reads_off_factorizations() {
        let c2 = chain(2);
        // All classes everything: middle = codomain factorization works for
        // both pairs.
        let pm = PreModel::discrete_all("everything", c2.clone());
        let fact = FunctorialFactorization::identity_second(&c2);
        let mc = ModelCat::new("everything", pm, fact.clone(), fact).unwrap();
        for x in c2.objects() {
            // identity_second factors f as (f, id), so X^cof = X.
            let (xc, rho) = mc.replacement(x, ReplacementKind::Cofibrant);
            assert_eq!(xc, x);
            assert!(c2.is_identity(rho));
        }
        let one = c2.object_by_name("1").unwrap();
        let (xf, lambda) = mc.replacement(ObjId(0), ReplacementKind::Fibrant);
        // X^fib via (trivcof, fib) with middle = codomain: 0^fib = 1.
        assert_eq!(xf, one);
        assert_eq!(c2.morphism_name(lambda), "0->1");
    }
}
