//! Ground-state preparation of the 2x2 Fermi-Hubbard model with the QETU
//! algorithm, compiled onto a 9-qubit grid device through a fermionic swap
//! network, plus the simulators and measurement machinery needed to
//! reproduce the overlap, depth, Trotter-error and energy experiments.

pub mod circuit;
pub mod error;
pub mod hubbard;
pub mod oracle;
pub mod pauli;
pub mod simulator;
pub mod swap_network;

pub use error::{Error, Result};
