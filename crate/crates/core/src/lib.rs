//! Exact computer algebra for the multiset Combinatorial Nullstellensatz.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`] - runtime prime fields and exact rationals;
//! * [`poly`], [`order`], [`parse`] - sparse multivariate polynomials, term
//!   orders, and the expression grammar;
//! * [`ideal`] - multisets, grids, reduction modulo the grid generators and
//!   ideal membership;
//! * [`divdiff`] - generalized divided differences and the linear relation
//!   among Hasse coefficients;
//! * [`certificates`] - nonvanishing witnesses and punctured decompositions;
//! * [`apps`] - hyperplane covers, multiset sumsets, value sets and
//!   Hopf-Stiefel numbers;
//! * [`json`] - the JSON instance formats shared by the CLI and web demo.

pub mod apps;
pub mod certificates;
pub mod divdiff;
pub mod error;
pub mod field;
pub mod ideal;
pub mod json;
pub mod order;
pub mod parse;
pub mod poly;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldKind, FieldSpec};
pub use ideal::{GridPoint, Membership, Multiset, MultisetGrid, ReductionResult};
pub use order::{OrderKind, TermOrder};
pub use parse::parse_poly;
pub use poly::{Degree, ExponentVector, MultiPoly};
