//! Relative model structures along a functor: weak factorization systems
//! relative to a projection, relative model categories, model fibrations,
//! and the straightening back to diagrams of model categories.

mod fibration;
mod relmodel;
mod straighten;
mod wfs;

pub use fibration::{
    check_cartesian_lemmas, check_model_fibration, check_projection_quillen, pi_cofibrant,
    pi_fibrant,
};
pub use relmodel::check_relative_model;
pub use straighten::{
    compare_diagram_with_straightening, compare_rebuilt_with_original, straighten_integral,
    straighten_modelfib, StraightenedModel,
};
pub use wfs::{check_pi_wfs, WfsPair};

use crate::fincat::{FinFunctor, MorId};
use crate::modelstruct::PreModel;
use crate::report::ValidationReport;
use crate::{Error, Result};

/// A candidate for the relative-model and model-fibration checks: a functor
/// between pre-model categories that maps each upstairs class into the
/// corresponding downstairs class.
#[derive(Debug, Clone)]
pub struct FibrationCandidate {
    pub name: String,
    pi: FinFunctor,
    upstairs: PreModel,
    downstairs: PreModel,
}

impl FibrationCandidate {
    pub fn new(
        name: impl Into<String>,
        pi: FinFunctor,
        upstairs: PreModel,
        downstairs: PreModel,
    ) -> Result<Self> {
        if upstairs.base() != pi.source() || downstairs.base() != pi.target() {
            return Err(Error::CategoryMismatch(
                "pre-model structures do not sit on the functor's endpoints".into(),
            ));
        }
        Ok(FibrationCandidate {
            name: name.into(),
            pi,
            upstairs,
            downstairs,
        })
    }

    pub fn pi(&self) -> &FinFunctor {
        &self.pi
    }

    pub fn upstairs(&self) -> &PreModel {
        &self.upstairs
    }

    pub fn downstairs(&self) -> &PreModel {
        &self.downstairs
    }

    /// Class containment under the projection, the standing precondition of
    /// every relative notion here.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new(format!("fibration candidate {}", self.name));
        report.merge(self.pi.validate());
        report.merge(self.upstairs.validate());
        report.merge(self.downstairs.validate());
        let n = self.pi.source();
        for m in n.morphisms() {
            let image = self.pi.apply_mor(m);
            for (label, up, down) in [
                ("weq", self.upstairs.is_weq(m), self.downstairs.is_weq(image)),
                ("cof", self.upstairs.is_cof(m), self.downstairs.is_cof(image)),
                ("fib", self.upstairs.is_fib(m), self.downstairs.is_fib(image)),
            ] {
                if up && !down {
                    report.push(
                        format!("class-containment-{label}"),
                        n.morphism_name(m).to_string(),
                    );
                }
            }
        }
        report
    }

    pub(crate) fn upstairs_left(&self, pair: WfsPair) -> std::collections::BTreeSet<MorId> {
        match pair {
            WfsPair::TrivCofFib => self.upstairs.triv_cof(),
            WfsPair::CofTrivFib => self.upstairs.class(crate::modelstruct::MorClass::Cof).clone(),
        }
    }

    pub(crate) fn upstairs_right(&self, pair: WfsPair) -> std::collections::BTreeSet<MorId> {
        match pair {
            WfsPair::TrivCofFib => self.upstairs.class(crate::modelstruct::MorClass::Fib).clone(),
            WfsPair::CofTrivFib => self.upstairs.triv_fib(),
        }
    }

    pub(crate) fn downstairs_left(&self, pair: WfsPair) -> std::collections::BTreeSet<MorId> {
        match pair {
            WfsPair::TrivCofFib => self.downstairs.triv_cof(),
            WfsPair::CofTrivFib => self
                .downstairs
                .class(crate::modelstruct::MorClass::Cof)
                .clone(),
        }
    }

    pub(crate) fn downstairs_right(&self, pair: WfsPair) -> std::collections::BTreeSet<MorId> {
        match pair {
            WfsPair::TrivCofFib => self
                .downstairs
                .class(crate::modelstruct::MorClass::Fib)
                .clone(),
            WfsPair::CofTrivFib => self.downstairs.triv_fib(),
        }
    }
}
