//! Finite multicategories and permutative categories, the free permutative
//! category `F(M)` on a multicategory, the endomorphism multicategory
//! `End(C)` of a permutative category, and exhaustive checks of the
//! 2-adjunction `F ⊣ End` between them.
//!
//! Every infinite structure is explored up to explicit bounds (see
//! [`Bounds`]); checks report instances beyond a bound as unchecked rather
//! than passed or failed.

pub mod adjunction;
pub mod combinatorics;
pub mod endo;
pub mod error;
pub mod free;
pub mod monoid;
pub mod multicat;
pub mod permcat;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use report::{FamilyRecord, Status, VerificationReport, Witness};
pub use verify::Bounds;
