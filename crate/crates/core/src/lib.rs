//! Polynomial invariants of graded posets: flag vectors, the cd-index,
//! Stanley's toric polynomials and the short toric polynomial, each computed
//! along several independent routes so that the routes can check each other.

pub mod arith;
pub mod cli;
pub mod error;
pub mod flag;
pub mod laurent;
pub mod nc;
pub mod paths;
pub mod simplicial;
pub mod poset;
pub mod toric;
pub mod verify;

pub use arith::Rational;
pub use error::{Error, Result};
pub use flag::{FlagKind, FlagVector};
pub use laurent::LaurentPoly;
pub use nc::{Alphabet, NCPoly};
pub use poset::{FVector, Poset};
pub use toric::{ShortToric, ToricPair};
