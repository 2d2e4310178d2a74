//! Finite matroids given by independence oracles, the matroid union with
//! certified exchange chains, base packing and covering, and truncation
//! windows of countable constructions.

pub mod axioms;
pub mod catalog;
pub mod error;
pub mod ground;
pub mod infinitary;
pub mod matroid;
pub mod packing;
pub mod subset;
pub mod union;

pub use error::{Error, Result};
pub use ground::GroundSet;
pub use matroid::{Descriptor, Matroid};
pub use subset::Subset;
pub use union::Representation;
