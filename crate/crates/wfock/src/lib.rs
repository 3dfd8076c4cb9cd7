//! Exact free-field realization of a deformed current algebra at level m,
//! with mechanical verification of its defining relations.
//!
//! All operators are normal-ordered exponentials over m Heisenberg copies
//! whose mode coefficients live in a symbolic "mode ring" (formal q^{n/4},
//! t^{n/4}), so a single exact computation covers every mode n at once.
//! Exchange relations between currents reduce to identities of rational
//! functions in one variable, which are checked by exact partial-fraction
//! and residue computations.

pub mod level;
pub mod oper;
pub mod ring;
pub mod structure;

pub use level::{build_level_m, LevelM};
pub use oper::{heisenberg_contract, OperatorSum, Slot, VertexOperator};
pub use ring::{instantiate_mode, mono_decompose, ModeMonomial};
pub use structure::{structure_log, StructureFunction, StructureKind};
