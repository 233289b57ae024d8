//! Intercategories over finite, computable base categories.
//!
//! An intercategory is a three-dimensional categorical structure with strict
//! transversal composition, weak horizontal and vertical compositions, and a
//! directed interchange comparison `chi` (plus degenerate comparisons `mu`,
//! `delta`, `tau`) instead of a strict interchange law. This crate realizes
//! the notion over concrete finite data — finite sets, finitely presented
//! categories, profunctors, finite Gray categories — so that every equation
//! can be evaluated and every comparison cube tested for invertibility by
//! enumeration.
//!
//! Layout:
//! - [`finset`]: finite sets and functions with canonical pullbacks/pushouts;
//! - [`fincat`]: finitely presented categories, functors, profunctors,
//!   search-based (co)limits and 2-categories;
//! - [`doublecat`]: weak double categories (spans, cospans, matrices,
//!   categories-and-profunctors) and chosen pullback/pushout structure;
//! - [`core`]: the eight-sorted intercategory interface, law engine,
//!   invertibility testing and morphism checking;
//! - [`constructions`]: duoidal, span/cospan, SC_phi and Verity-style
//!   intercategory builders with their comparison cubes;
//! - [`gray`]: finite true Gray categories and their three embeddings;
//! - [`monoids`]: endomorphism monoidal double categories, intermonads and
//!   hom functors into the intercategory of sets.

pub mod constructions;
pub mod core;
pub mod doublecat;
pub mod fincat;
pub mod finset;
pub mod gray;
pub mod monoids;

use thiserror::Error;

/// Errors shared across the crate. Law violations are not errors: they are
/// reported as data in a [`core::LawReport`].
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("boundary mismatch in {op}: {detail}")]
    Boundary { op: &'static str, detail: String },
    #[error("{0} does not exist")]
    Missing(String),
    #[error("invalid data for {op}: {detail}")]
    Invalid { op: &'static str, detail: String },
    #[error("instance is not enumerable: {0}")]
    NotEnumerable(String),
}

impl Error {
    pub fn boundary(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Boundary {
            op,
            detail: detail.into(),
        }
    }
    pub fn invalid(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Invalid {
            op,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
