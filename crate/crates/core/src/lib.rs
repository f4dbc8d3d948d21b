//! Hall-Littlewood and Macdonald polynomials over arbitrary lattice diagrams.
//!
//! Statistics on fillings, Yamanouchi words with the jamming condition,
//! Assaf graphs and dual equivalence checks, and exact Schur expansions.

pub mod checks;
pub mod cli;
pub mod degraphs;
pub mod descent_sets;
pub mod error;
pub mod fillings;
pub mod limits;
pub mod qsym_schur;
pub mod rsk_yam;
pub mod shapes;
pub mod words;

pub use error::{Error, Result};
pub use shapes::{Cell, Diagram, Partition};
pub use words::{Permutation, Signature, Word};
