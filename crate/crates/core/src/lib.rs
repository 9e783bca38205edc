//! Low-complexity 8-point DCT approximations obtained by mapping the scaled
//! exact DCT through integer functions.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact_dct`] holds the reference transform and the cosine constants.
//! * [`integer_functions`] implements the ten rounding functions.
//! * [`matrix_lab`] does exact integer/rational algebra on 8×8 matrices.
//! * [`search`] sweeps the expansion factor and classifies every candidate.
//! * [`fast_transform`] builds multiplierless schedules for the catalog.
//! * [`codec`], [`image_io`] and [`metrics`] run the JPEG-like experiment.
//! * [`catalog_store`] persists everything as JSON.
//! * [`reference`] holds published values and the self-check suite.

// 8×8 matrix code reads better with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod catalog_store;
pub mod codec;
pub mod error;
pub mod exact_dct;
pub mod fast_transform;
pub mod image_io;
pub mod integer_functions;
pub mod known;
pub mod matrix_lab;
pub mod metrics;
pub mod reference;
pub mod search;

pub use error::{Error, Result};
pub use exact_dct::{build_exact_dct, ExactDct, GammaConstants};
pub use integer_functions::IntFuncKind;
pub use matrix_lab::{IntMatrix8, RationalMatrix8, ScalingDiagonal};
pub use search::{full_catalog, ApproximationRecord, Catalog, Classification};
