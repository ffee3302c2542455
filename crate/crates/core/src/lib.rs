//! Combinatorial crystals for `U_q(gl(m|n))`: super tableaux on hook
//! diagrams, the raising and lowering operators, bumping, and tensor product
//! decomposition.

pub mod budget;
pub mod character;
pub mod crystal;
pub mod error;
pub mod extremal;
pub mod insertion;
pub mod root;
pub mod shape;
pub mod tableau;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, Result};
pub use root::{Letter, Rank, SimpleIndex, Weight};
pub use shape::{CellPos, Partition, SkewShape};
pub use tableau::{Tableau, Word};
