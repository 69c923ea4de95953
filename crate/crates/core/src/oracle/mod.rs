//! Exact brute-force oracle: explicit matrices over `Q(ζ₈)`.
//!
//! Every object is built from scratch (seminormal forms, Clifford modules,
//! induced Hecke modules) and every identity is checked as an exact matrix
//! equality. The kernel of the Dirac operator is computed by exact
//! elimination and identified through character pairings against
//! `σ_μ ⊗ S`.

pub mod battery;
pub mod clifford;
pub mod cyclo;
pub mod dirac;
pub mod hmodule;
pub mod kernel;
pub mod linalg;
pub mod matrix;
pub mod perm;
pub mod young;

pub use battery::{run_battery, BatteryOptions, TaskFilter, TaskRecord, VerifyTask};
pub use clifford::{build_gamma, CliffordRep, PinElement};
pub use cyclo::{Cyclo8, ExactScalar};
pub use dirac::{casimir_wtilde, dirac_operator, omega_tilde, sign_commutation_check, verify_d_squared};
pub use hmodule::{complementary_matrices, induce_module, module_matrices, speh_matrices, HModuleRep};
pub use kernel::{induction_multiplicity_check, kernel_structure, predicted_pairings, KernelStructure};
pub use linalg::{nullspace, Kernel};
pub use matrix::ExactMatrix;
pub use perm::Perm;
pub use young::young_seminormal;
