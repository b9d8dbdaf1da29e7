//! The named-entity store the CLI operates on.

use crate::parser::{ErrorKind, ParseError};
use fcat_core::adjunction::Adjunction;
use fcat_core::fincat::{FinCat, FinFunctor};
use fcat_core::integral::ModCatFunctor;
use fcat_core::modelfib::FibrationCandidate;
use fcat_core::modelstruct::{ModelCat, PreModel};
use std::collections::BTreeMap;
use std::rc::Rc;

/// A `model` block yields a pre-model structure always, and a full model
/// category whenever the base has extremes and factorizations were found.
#[derive(Debug, Clone)]
pub struct ModelEntry {
    pub pre: PreModel,
    pub model: Option<ModelCat>,
}

#[derive(Debug, Default)]
pub struct Workspace {
    categories: BTreeMap<String, Rc<FinCat>>,
    models: BTreeMap<String, ModelEntry>,
    functors: BTreeMap<String, FinFunctor>,
    adjunctions: BTreeMap<String, Adjunction>,
    modcat_functors: BTreeMap<String, ModCatFunctor>,
    fibrations: BTreeMap<String, FibrationCandidate>,
}

macro_rules! accessors {
    ($get:ident, $insert:ident, $field:ident, $ty:ty, $kind:literal) => {
        pub fn $get(&self, name: &str) -> Option<&$ty> {
            self.$field.get(name)
        }

        pub fn $insert(&mut self, name: String, value: $ty, line: usize) -> Result<(), ParseError> {
            if self.$field.contains_key(&name) {
                return Err(ParseError {
                    line,
                    col: 1,
                    message: format!(concat!("duplicate ", $kind, " `{}`"), name),
                    kind: ErrorKind::Syntax,
                });
            }
            self.$field.insert(name, value);
            Ok(())
        }
    };
}

impl Workspace {
    accessors!(category, insert_category, categories, Rc<FinCat>, "category");
    accessors!(model, insert_model, models, ModelEntry, "model");
    accessors!(functor, insert_functor, functors, FinFunctor, "functor");
    accessors!(adjunction, insert_adjunction, adjunctions, Adjunction, "adjunction");
    accessors!(
        modcat_functor,
        insert_modcat_functor,
        modcat_functors,
        ModCatFunctor,
        "modcat-functor"
    );
    accessors!(
        fibration,
        insert_fibration,
        fibrations,
        FibrationCandidate,
        "fibration"
    );

    pub fn categories(&self) -> &BTreeMap<String, Rc<FinCat>> {
        &self.categories
    }

    pub fn models(&self) -> &BTreeMap<String, ModelEntry> {
        &self.models
    }

    pub fn functors(&self) -> &BTreeMap<String, FinFunctor> {
        &self.functors
    }

    pub fn adjunctions(&self) -> &BTreeMap<String, Adjunction> {
        &self.adjunctions
    }

    pub fn modcat_functors(&self) -> &BTreeMap<String, ModCatFunctor> {
        &self.modcat_functors
    }

    pub fn fibrations(&self) -> &BTreeMap<String, FibrationCandidate> {
        &self.fibrations
    }

    /// Workspace-wide size statistics for reports.
    pub fn stats(&self) -> (usize, usize) {
        let categories = self.categories.len();
        let morphisms = self
            .categories
            .values()
            .map(|c| c.morphism_count())
            .sum();
        (categories, morphisms)
    }
}
