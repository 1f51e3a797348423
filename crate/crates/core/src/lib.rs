//! Exact symbolic engine for cluster algebras with trivial coefficients.
//!
//! The crate provides, bottom to top:
//!
//! - sparse multivariate Laurent arithmetic with arbitrary-precision integer
//!   coefficients, including exact division and rational substitution
//!   ([`laurent`]);
//! - generalized Cartan matrices, skew-symmetrizable exchange matrices, the
//!   orientation dictionary between them, and exact finite-type recognition
//!   ([`cartan`], [`quiver`], [`dynkin`]);
//! - seeds, mutation and breadth-first exchange-graph enumeration ([`seed`]);
//! - the reflection automorphisms of the ambient rational function field and
//!   their Coxeter compositions, with orbit and order computation
//!   ([`coxeter`]);
//! - finite root systems, almost positive roots, truncated reflections and
//!   the object-level model of the preprojective/preinjective component
//!   ([`roots`]);
//! - named builtins, JSON schemas and the cross-checking suites driven by the
//!   CLI `verify` subcommand ([`builtins`], [`io`], [`verify`]).
//!
//! Everything is immutable after construction and arithmetic is exact; there
//! is no floating point anywhere in the crate.

pub mod builtins;
pub mod cartan;
pub mod coxeter;
pub mod dynkin;
mod error;
pub mod io;
pub mod laurent;
pub mod quiver;
pub mod roots;
pub mod seed;
pub mod verify;

pub use cartan::{CartanMatrix, Definiteness, ExchangeMatrix, Symmetrizer};
pub use coxeter::{
    bipartite_factors, coxeter_order, orbit, BipartiteFactors, CoxeterAuto, CoxeterOrbit,
    OrderResult, ReflectionAuto,
};
pub use dynkin::DynkinType;
pub use error::Error;
pub use laurent::{ExponentVec, LaurentPoly, RationalExpr};
pub use quiver::ValuedQuiver;
pub use roots::{AlmostPositiveRoot, CoxeterSigma, PiObject, RootSystem};
pub use seed::{denominator_vector, enumerate, Budgets, DenominatorVector, Enumeration, Seed};

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_shareable_across_threads() {
        assert_send_sync::<LaurentPoly>();
        assert_send_sync::<RationalExpr>();
        assert_send_sync::<CartanMatrix>();
        assert_send_sync::<ExchangeMatrix>();
        assert_send_sync::<ValuedQuiver>();
        assert_send_sync::<Seed>();
        assert_send_sync::<CoxeterAuto>();
        assert_send_sync::<RootSystem>();
    }
}
