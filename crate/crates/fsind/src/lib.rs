//! Exact higher Frobenius-Schur indicators of pointed fusion categories
//! `Vec_omega(Gamma)` and of group-theoretical categories built from
//! matched pairs of groups.
//!
//! Values live in cyclotomic integers and are compared exactly. Start with
//! the runnable programs under `examples/` (`cargo run --example <name>`).

pub mod arith;
pub mod cli;
pub mod cocycle;
pub mod cyclotomic;
pub mod error;
pub mod extension;
pub mod group;
pub mod indicator;

pub use cocycle::{ThreeCocycle, VerifyMode};
pub use cyclotomic::{root, CyclotomicInteger, RootOfUnity};
pub use error::{Error, Result};
pub use extension::{GTCategory, MatchedPair};
pub use group::{FiniteGroup, GroupElement};
