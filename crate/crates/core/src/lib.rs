//! Invariant rings of prime-order cyclic groups acting diagonally on
//! `C[x1, x2]`: minimal generating invariants, toric presentation ideals,
//! minimal graded free resolutions, and closed-form classification.

pub mod classify;
pub mod error;
pub mod groebner;
pub mod modarith;
pub mod oracle;
pub mod polyalg;
pub mod resolution;
pub mod semigroup;

pub use classify::{ClassKind, ClassLabel};
pub use error::{Error, Result};
pub use groebner::{DegreeMatrix, Ideal};
pub use modarith::{Action, CanonicalAction};
pub use polyalg::{Coeff, GradedRing, Monomial, MonomialOrder, Polynomial, Ring};
pub use resolution::{BettiTable, GradedFreeModule, PolyMatrix, Resolution};
pub use semigroup::{ExponentPair, InvariantSet, SlopeSet};
