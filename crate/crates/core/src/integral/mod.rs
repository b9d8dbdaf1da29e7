//! The integral model structure: classes on a Grothendieck construction of
//! model categories, constructive factorizations, properness/relativeness
//! checks, base change, Quillen-transformation integration, and the Fubini
//! comparison.

mod base_change;
mod build;
mod checks;
mod classify;
mod fubini;
mod transform;

pub use base_change::{base_change, BaseChangeCert, BaseChangeFamily, MorphismKind};
pub use build::{build_integral, BuildMode};
pub use checks::{check_proper, check_relative, verify_trivial_characterization, verify_weq_symmetry, ProperReport};
pub use classify::{classify_integral, IntegralFlags};
pub use fubini::{fubini, product_model, FubiniReport, ProductModel};
pub use transform::integrate_quillen_transformation;

use crate::fincat::{FinCat, MorId, ObjId};
use crate::grothendieck::{AdjCatFunctor, GrothCat};
use crate::modelstruct::{
    quillen_left_criterion, FunctorialFactorization, ModelCat, PreModel,
};
use crate::report::ValidationReport;
use crate::{Error, Result};
use std::rc::Rc;

/// A diagram of model categories: an underlying diagram of adjunctions, a
/// (pre-)model structure on the base and a model structure on every fiber.
/// Every arrow must land on a Quillen adjunction.
#[derive(Debug, Clone)]
pub struct ModCatFunctor {
    pub name: String,
    underlying: AdjCatFunctor,
    base_pre: PreModel,
    base_model: Option<ModelCat>,
    fiber_models: Vec<ModelCat>,
}

impl ModCatFunctor {
    /// A diagram over a genuine model category.
    pub fn new(
        name: impl Into<String>,
        underlying: AdjCatFunctor,
        base_model: ModelCat,
        fiber_models: Vec<ModelCat>,
    ) -> Result<Self> {
        let fm = ModCatFunctor {
            name: name.into(),
            base_pre: base_model.structure().clone(),
            base_model: Some(base_model),
            underlying,
            fiber_models,
        };
        fm.check_shape()?;
        Ok(fm)
    }

    /// A diagram over a bare pre-model category (no factorizations on the
    /// base, no integral factorizations downstream).
    pub fn over_pre_model(
        name: impl Into<String>,
        underlying: AdjCatFunctor,
        base_pre: PreModel,
        fiber_models: Vec<ModelCat>,
    ) -> Result<Self> {
        let fm = ModCatFunctor {
            name: name.into(),
            underlying,
            base_pre,
            base_model: None,
            fiber_models,
        };
        fm.check_shape()?;
        Ok(fm)
    }

    fn check_shape(&self) -> Result<()> {
        if self.fiber_models.len() != self.underlying.base().object_count() {
            return Err(Error::FunctorShape);
        }
        if self.base_pre.base() != self.underlying.base() {
            return Err(Error::CategoryMismatch(
                "base structure does not sit on the diagram base".into(),
            ));
        }
        for o in self.underlying.base().objects() {
            if self.fiber_models[o.0].base() != self.underlying.fiber(o) {
                return Err(Error::CategoryMismatch(format!(
                    "fiber model over {} sits on the wrong category",
                    self.underlying.base().object_name(o)
                )));
            }
        }
        Ok(())
    }

    pub fn underlying(&self) -> &AdjCatFunctor {
        &self.underlying
    }

    pub fn base(&self) -> &Rc<FinCat> {
        self.underlying.base()
    }

    pub fn base_pre(&self) -> &PreModel {
        &self.base_pre
    }

    pub fn base_model(&self) -> Option<&ModelCat> {
        self.base_model.as_ref()
    }

    pub fn fiber_model(&self, o: ObjId) -> &ModelCat {
        &self.fiber_models[o.0]
    }

    pub fn fiber_models(&self) -> &[ModelCat] {
        &self.fiber_models
    }

    /// Underlying coherence plus the Quillen condition on every arrow.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new(format!("diagram of model categories {}", self.name));
        report.merge(self.underlying.validate());
        report.merge(self.base_pre.validate());
        let base = self.base();
        for f in base.morphisms() {
            let adj = self.underlying.on_arrow(f);
            let src = self.fiber_models[base.source(f).0].structure();
            let tgt = self.fiber_models[base.target(f).0].structure();
            if let Err(witness) = quillen_left_criterion(adj, src, tgt) {
                report.push(
                    "arrow-not-quillen",
                    format!("{}: {}", base.morphism_name(f), witness),
                );
            }
        }
        report
    }
}

/// The integral structure on the total category: the Grothendieck
/// construction, the three classified classes, and (over a model base) the
/// two constructively built functorial factorizations assembled into a
/// `ModelCat`.
#[derive(Debug, Clone)]
pub struct IntegralStructure {
    pub name: String,
    groth: GrothCat,
    classes: PreModel,
    fact_cof_trivfib: Option<FunctorialFactorization>,
    fact_trivcof_fib: Option<FunctorialFactorization>,
    model: Option<ModelCat>,
}

impl IntegralStructure {
    pub fn groth(&self) -> &GrothCat {
        &self.groth
    }

    pub fn total(&self) -> &Rc<FinCat> {
        self.groth.total()
    }

    pub fn classes(&self) -> &PreModel {
        &self.classes
    }

    pub fn fact_cof_trivfib(&self) -> Option<&FunctorialFactorization> {
        self.fact_cof_trivfib.as_ref()
    }

    pub fn fact_trivcof_fib(&self) -> Option<&FunctorialFactorization> {
        self.fact_trivcof_fib.as_ref()
    }

    /// The assembled model category, present when the factorizations were
    /// built (model base with bicomplete total).
    pub fn model(&self) -> Option<&ModelCat> {
        self.model.as_ref()
    }

    pub fn is_weq(&self, m: MorId) -> bool {
        self.classes.is_weq(m)
    }

    pub fn is_cof(&self, m: MorId) -> bool {
        self.classes.is_cof(m)
    }

    pub fn is_fib(&self, m: MorId) -> bool {
        self.classes.is_fib(m)
    }

    pub(crate) fn from_parts(
        name: String,
        groth: GrothCat,
        classes: PreModel,
        fact_cof_trivfib: Option<FunctorialFactorization>,
        fact_trivcof_fib: Option<FunctorialFactorization>,
        model: Option<ModelCat>,
    ) -> Self {
        IntegralStructure {
            name,
            groth,
            classes,
            fact_cof_trivfib,
            fact_trivcof_fib,
            model,
        }
    }
}
