//! Exact computation of non-abelian Hopf cohomology over prime fields.
//!
//! Everything is finite: Hopf algebras are given by structure constants over
//! `F_p`, cocycles are found by exhaustive search (or an exact quadratic
//! solver), and every structural statement is checked as an equality of
//! sparse linear maps. A separate group-cohomology pipeline serves as an
//! independent oracle for function-algebra instances.
//!
//! Layering, bottom up: [`scalars`], [`linalg`], [`hopf_core`], [`yd`],
//! [`radford`], [`cohomology`], [`models`], [`group_cohom`]; [`catalog`],
//! [`io`] and [`cli`] sit on top.

pub mod catalog;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod group_cohom;
pub mod hopf_core;
pub mod io;
pub mod linalg;
pub mod models;
pub mod radford;
pub mod report;
pub mod scalars;
pub mod yd;

pub use error::{Error, Result};
pub use report::{CheckReport, VerificationReport};
