//! Exact-arithmetic verification of the representation theory of the
//! binary tetrahedral group of order 24 over a 2-local coefficient ring.
//!
//! Everything is computed with exact rational arithmetic in the field
//! `Q(w)` generated by a primitive cube root of unity `w`, together with
//! the 2-adic valuation that singles out the local ring `O` inside it.
//! On top of that kernel the crate builds the group and its character
//! table, classifies the short vectors of the projective character
//! lattice, determines the full group of projective-lattice-preserving
//! self-isometries by brute force, constructs and normalizes a set of
//! quiver arrows inside the group algebra, and certifies that the
//! abstractly presented algebra on 24 spanning monomials is isomorphic
//! to the group algebra.
//!
//! The [`harness`] module exposes every verification as a
//! [`report::VerificationReport`] and drives them from the `verify` CLI.

pub mod chartab;
pub mod coeff;
pub mod group;
pub mod harness;
pub mod isometry;
pub mod linalg;
pub mod quiverpres;
pub mod report;
pub mod structure;
