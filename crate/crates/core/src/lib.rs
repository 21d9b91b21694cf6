//! Exact Schur–Weyl computations for unitary groups.
//!
//! * [`weights`]: signed integer weights, Weyl orbits, partition pairs.
//! * [`majorization`]: `L_k` functionals, orbit-hull membership, extreme
//!   points, separation certificates.
//! * [`oracle`]: exact LP and brute-force hull geometry used as ground truth.
//! * [`tensor`]: Young symmetrizers, isotypic projectors and the
//!   decomposition of `V^{⊗k}`.
//! * [`momentum`]: matrix-level momentum sets, coadjoint orbits and the
//!   Kähler and exposure identities.
//!
//! All arithmetic is exact; no floating point enters a decision.

pub mod cli;
pub mod error;
pub mod majorization;
pub mod momentum;
pub mod oracle;
pub mod rational;
pub mod tensor;
pub mod weights;

pub use error::{Error, Result};
pub use rational::{Cq, Q};
pub use weights::{OrbitSignature, PartitionPair, Weight};
