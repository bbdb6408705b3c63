//! Exact combinatorics of exponent-level Langlands parameters.
//!
//! The crate decides whether the infinitesimal-character exponent of a
//! parameter lies in the fundamental parallelepiped (every simple-coroot
//! pairing at most 1), computes the Levi subgroup generated by the simple
//! roots pairing at most 1, and assembles non-unitarity certificates from
//! Hermitian Weyl witnesses and unbounded deformation families. A concrete
//! type-A layer models graded nilpotent orbits by multisegments and audits
//! the unitary dual of `GL_n`.
//!
//! All arithmetic is exact. The numeric core is generic over [`Scalar`],
//! implemented for `Ratio<i64>` ([`Q`]) and `BigRational` ([`BigQ`]).

pub mod error;
pub mod gln;
pub mod io;
pub mod linalg;
pub mod lparam;
pub mod rootdata;
pub mod sample;
pub mod scalar;
pub mod vogan_a;
pub mod weyl;

pub use error::{Error, Result};
pub use rootdata::{ExponentVector, LeviSubset, PositiveRoot, RootDatum};
pub use scalar::Scalar;
pub use weyl::WeylElement;

/// Machine-word rationals; the default scalar.
pub type Q = num_rational::Ratio<i64>;
/// Arbitrary-precision rationals.
pub type BigQ = num_rational::BigRational;

pub type Exponent = ExponentVector<Q>;



pub type InfChar = lparam::InfCharData<Q>;
pub type Param = lparam::ExponentParam<Q>;
pub type Cert = lparam::Certificate<Q>;
