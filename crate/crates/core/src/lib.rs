//! Exact splitting algebras of monic polynomials over `Z` and `Z/m`.
//!
//! The crate builds the universal algebras in which a monic polynomial
//! acquires `r` roots, performs normal-form arithmetic in them, realizes the
//! symmetric-group action on the complete splitting algebra as exact
//! matrices, and computes fixed submodules over the base ring. On top of that
//! sit the symmetric invariants of the roots (the sum-product `Ψ`, the
//! Vandermonde element and the discriminant) and a set of verifiers that
//! cross-check the structure theory of the invariants mechanically.

pub mod error;
pub mod invariants;
pub mod linalg;
pub mod perm;
pub mod poly;
pub mod report;
pub mod ring;
pub mod selftest;
pub mod split;
pub mod sweep;
pub mod symmetric;

pub use error::{Error, Result};
pub use linalg::{ExactMatrix, LinearRing};
pub use perm::{Permutation, SubgroupSpec};
pub use poly::MonicPoly;
pub use ring::{Integers, Ring, RingElem, RingSpec, ZMod};
pub use split::{Monomial, SplitContext, SplitElement};

/// Runs `$body` with `$r` bound to the statically typed ring for `$spec`.
#[macro_export]
macro_rules! with_ring {
    ($spec:expr, $r:ident => $body:expr) => {
        match $spec {
            $crate::RingSpec::Integers => {
                let $r = $crate::Integers;
                $body
            }
            $crate::RingSpec::IntegersMod(m) => {
                let $r = $crate::ZMod::new(m)?;
                $body
            }
        }
    };
}
