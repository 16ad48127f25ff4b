//! Check-weight parameters of stabilizer quantum codes.
//!
//! The crate computes exact code parameters `[[n,k,d;w]]`, quantum weight
//! enumerators, exact-rational linear-programming lower bounds on the
//! optimal check weight, hardware-radius bounds on connectivity graphs,
//! and verifies a catalog of low-weight constructions.

pub mod architecture;
pub mod bits;
pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod enumerator;
pub mod error;
pub mod exactlp;
pub mod pauli;
pub mod reductions;
pub mod stabilizer;

pub use error::{Error, Result};
pub use pauli::{PauliOperator, QubitSet};
pub use stabilizer::{Budget, CodeParameters, Distance, Membership, StabilizerGenerators};
