//! Link-pattern representations of the one- and two-boundary Temperley-Lieb
//! (blob) algebra at the semi-group point, the loop Hamiltonians built from
//! them, and their exact parameter-dependent stationary states.

pub mod basis;
pub mod generator;
pub mod hamiltonian;
pub mod pattern;
pub mod relations;
pub mod state;

pub use basis::{binomial, enumerate_basis, Basis, BasisError};
pub use generator::{
    apply_generator, compose, operator_matrix, ActionError, Generator, OperatorMatrix,
};
pub use hamiltonian::{build_hamiltonian, build_on_basis, BoundaryMode, HamiltonianError};
pub use pattern::{Attach, LinkPattern, PatternError, Sector, Symbol};
pub use relations::{
    boundary_words, check_relations, relation_words, RelationCheck, RelationError, RelationReport,
};
pub use state::{
    density_closed_form, density_rho, ground_state, normalization_z, DensityRho, GroundState,
    StateError,
};
