//! Exact invariants of projective product spaces
//! `P_n = (S^{n_1} × ... × S^{n_r}) / (x ~ -x)`.
//!
//! The crate computes mod-2 cohomology with its Steenrod action, integral
//! and field-coefficient cohomology, complex K-theory, the stable wedge
//! splitting into stunted projective spaces, and interval bounds on the
//! immersion dimension, span and stable span. The last group is driven by
//! [`gvfp`], an engine that composes known results on the geometric
//! dimension of multiples of the Hopf bundle over `RP^n`.
//!
//! ```
//! use ppspace::{manifold, Tuple};
//!
//! let torus: Tuple = "1,1".parse().unwrap();
//! let imm = manifold::imm_bounds(&torus).unwrap();
//! assert_eq!(imm.value(), Some(3));
//! assert!(manifold::parallelizable(&torus));
//! ```

pub mod binarith;
pub mod cli;
pub mod error;
pub mod gvfp;
pub mod intk;
pub mod manifold;
pub mod mod2;
pub mod splitting;
pub mod tuple;

pub use error::{Error, Result};
pub use gvfp::{Bound, HopfMultiple};
pub use tuple::Tuple;
