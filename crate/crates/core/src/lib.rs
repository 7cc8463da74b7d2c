//! Finite quasi-uniform spaces, separation axioms, an Urysohn-type function
//! construction and an exact Sorgenfrey line model.

pub mod campaigns;
pub mod error;
pub mod finmonoid;
pub mod fintop;
pub mod qtop;
pub mod quniform;
pub mod relcore;
pub mod separation;
pub mod sorgenfrey;
pub mod urysohn;

pub use error::{Error, Result};
pub use finmonoid::{CayleyTable, QuKind, TopMonoid};
pub use fintop::FinSpace;
pub use quniform::FiniteQuasiUniformity;
pub use relcore::{PointSet, Relation, MAX_POINTS};
pub use separation::{Axiom, Classification};
pub use sorgenfrey::{IntervalSet, Scalar, SorgenfreyModel};
pub use urysohn::{verify_theorem, Dyadic, EntourageChain, SetModel, UrysohnFunction, Verdict};

/// Arbitrary-precision rational, the default endpoint type.
pub type Rational = num_rational::BigRational;
/// Machine-word rational for small examples.
pub type Rational64 = num_rational::Ratio<i64>;

pub type RationalIntervalSet = IntervalSet<Rational>;
pub type RationalSorgenfrey = SorgenfreyModel<Rational>;
