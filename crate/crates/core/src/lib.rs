//! Exact computational algebra for the split Cayley algebra, the Okubo
//! algebra, the Albert algebra, and their derivation Lie algebras of
//! types G2 and F4, together with a complete calculus of abelian group
//! gradings: verification, type vectors, universal groups, induced and
//! coarsened gradings, root systems and Chevalley bases.
//!
//! All arithmetic is exact: rationals with arbitrary-precision integers,
//! prime fields with 64-bit residues, and quadratic extensions of either.

pub mod albert;
pub mod algebra;
pub mod catalog;
pub mod cayley;
pub mod error;
pub mod f4;
pub mod field;
pub mod grading;
pub mod group;
pub mod linalg;
pub mod report;

pub use error::Error;
pub use field::{Field, FieldSpec, Scalar};
