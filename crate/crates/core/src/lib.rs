//! Symplectic minimum distance of qubit stabilizer codes.
//!
//! A code is given by its normalizer matrix `A`, an `(n + k) x 2n` binary
//! matrix whose rows generate `C^⊥s`. The distance is the least symplectic
//! weight in `C^⊥s \ C` (or of nonzero `C` when `k = 0`). Three searches based
//! on the Brouwer-Zimmermann enumeration are provided, plus an exhaustive
//! oracle for small codes.
//!
//! ```
//! use symdist::{compute, Algorithm, BitMatrix, ComputeOptions, StabilizerInstance};
//!
//! let a = BitMatrix::parse_rows(&["10|01", "01|10", "00|11"]).unwrap();
//! let inst = StabilizerInstance::new(a).unwrap();
//! let report = compute(&inst, Some(Algorithm::Saved1Gamma), &ComputeOptions::default()).unwrap();
//! assert_eq!(report.distance, 1);
//! ```

pub mod cli;
pub mod distance;
pub mod engine;
pub mod error;
pub mod gf2;
pub mod gf4;
pub mod prep;

pub use distance::{
    auto_algorithm, brute_force_distance, compute, random_stabilizer, saved_1_gamma, saved_2_gamma,
    saved_isometry, validate_normalizer, Algorithm, ComputeOptions, DistanceReport,
    StabilizerInstance,
};
pub use error::{Error, Result, Violation};
pub use gf2::{BitMatrix, BitVector, SymplecticLayout};
pub use gf4::{F4Matrix, F4};
