//! Distribution of quadrant marked mesh pattern statistics over up-down and
//! down-up permutations, computed three ways: brute-force enumeration,
//! convolution recursions and power series solutions of linear ODEs.
//!
//! All arithmetic is exact.

pub mod algebra;
pub mod error;
pub mod family;
pub mod pattern;
pub mod perm;
pub mod published;
pub mod recurrences;
pub mod series;
pub mod theorems;

pub use algebra::{Poly, Rational};
pub use error::{Error, Result};
pub use family::{AlternatingFamily, AnyFamily, BarredFamily};
pub use pattern::{EnumerationOptions, QuadrantPattern, QuadrantSpec};
pub use perm::{AlternatingClass, Permutation};
