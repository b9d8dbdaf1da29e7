//! Finite categories with total composition tables, adjunctions, (pre-)model
//! structures, Grothendieck constructions and model fibrations, with every
//! check exhaustive and every search deterministic.
//!
//! The crate is organized around small immutable values: a [`fincat::FinCat`]
//! is a finite category given by an explicit composition table, a
//! [`modelstruct::ModelCat`] is such a category with three morphism classes
//! and two functorial factorizations, and an [`integral::ModCatFunctor`] is a
//! diagram of model categories indexed by a base. The heavy lifting is done
//! by brute-force searches (lifting problems, limit cones, adjoint partners)
//! that iterate in a canonical order so every result is reproducible.

pub mod adjunction;
pub mod corpus;
pub mod fincat;
pub mod grothendieck;
pub mod integral;
pub mod modelfib;
pub mod modelstruct;
pub mod report;

use thiserror::Error;

/// Errors raised by constructions whose preconditions are violated.
///
/// Failed *checks* are never errors: validators return reports with
/// witnesses instead. An `Error` means the caller handed us data that the
/// operation cannot even be stated for.
#[derive(Debug, Error)]
pub enum Error {
    #[error("object index {0} out of range")]
    ObjectRange(usize),
    #[error("morphism index {0} out of range")]
    MorphismRange(usize),
    #[error("object `{0}` has no identity morphism assigned")]
    MissingIdentity(String),
    #[error("duplicate composition entry for ({0}, {1})")]
    DuplicateComposite(String, String),
    #[error("cycle detected in poset relations: {0}")]
    PosetCycle(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("functor data does not span source category")]
    FunctorShape,
    #[error("morphism `{0}` does not have the required shape: {1}")]
    MorphismShape(String, String),
    #[error("categories do not match: {0}")]
    CategoryMismatch(String),
    #[error("adjunctions are not composable: {0}")]
    AdjunctionMismatch(String),
    #[error("coherence failure in pseudo-functor data: {0}")]
    Coherence(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no initial object in {0}")]
    NoInitial(String),
    #[error("no terminal object in {0}")]
    NoTerminal(String),
    #[error("no functorial factorization found for {0}")]
    NoFactorization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
