//! Certified upper and lower bounds for the topological complexity `TC(X)`
//! of spaces with small fundamental groups.
//!
//! `TC(X)` (unreduced: `TC(point) = 1`) is the sectional category of the
//! endpoint fibration `PX → X×X`. This crate computes certified integer
//! intervals for it from a space descriptor — dimension, fundamental-group
//! data, and optionally a finite presentation of the mod-p cohomology ring —
//! with every bound traced to the rule and inputs that produced it.
//!
//! # Modules
//!
//! - [`padic`] — base-p digits, Lucas/Kummer binomial divisibility, and the
//!   arbitrary-precision binomial oracle everything is checked against.
//! - [`groupring`] — group rings of finite cyclic groups, the augmentation
//!   ideal as a bimodule, integer invariants, tensor squares, and the
//!   wedge/symmetric decomposition used in the order-3 analysis.
//! - [`cohomology`] — graded-commutative algebras by structure constants,
//!   Künneth squares with Koszul signs, and the preset rings (projective
//!   spaces, lens-space skeleta, lens spaces, torus skeleta).
//! - [`vclass`] — the symbolic evaluator deciding when the top power of the
//!   canonical degree-one class vanishes for `pi_1 = Z/2` and `Z/3`.
//! - [`tclower`] — zero-divisor cup-length and weighted lower bounds.
//! - [`bounds`] — the rule engine aggregating everything into a certified
//!   interval with provenance, plus the registry of exactly-known families.
//! - [`descriptor`] / [`report`] — strict JSON input and deterministic JSON
//!   output, with the built-in example corpus.
//! - [`selfcheck`] — the runtime verification suite behind `tcbound verify`.
//!
//! # Runnable examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p tcbound --example binomial_divisibility
//! cargo run -p tcbound --example group_ring_algebra
//! cargo run -p tcbound --example cohomology_rings
//! cargo run -p tcbound --example vanishing_criteria
//! cargo run -p tcbound --example cup_length_bounds
//! cargo run -p tcbound --example space_reports
//! cargo run -p tcbound --example descriptor_files
//! ```
//!
//! # Quick start
//!
//! ```
//! use tcbound::bounds::{evaluate, EvalOptions};
//! use tcbound::descriptor::builtin;
//!
//! let file = builtin("lens_skeleton_n1").unwrap();
//! let space = file.to_space().unwrap();
//! let report = evaluate(&space, &EvalOptions::default()).unwrap();
//! assert_eq!((report.lower, report.upper), (5, 5));
//! ```

pub mod bounds;
pub mod cohomology;
mod error;
pub mod groupring;
pub mod matrix;
pub mod padic;
pub mod report;
pub mod selfcheck;
pub mod tclower;
pub mod vclass;

pub mod descriptor;

pub use error::{Error, Result};
