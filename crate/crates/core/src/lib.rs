//! Exact Pythagorean note lattice, tone-breaking scale families, and the
//! classification of scales by structure, type, mode and tonality.
//!
//! All pitch arithmetic is exact: a pitch is `3^a / 2^b` relative to a free
//! reference note (do), and comparisons use big integers when needed.
//!
//! ```
//! use gamme::family::family;
//! use gamme::pitch::PitchRatio;
//!
//! let f = family(5).unwrap();
//! assert_eq!(f.p, 12);
//! assert_eq!(f.theta.ratio(), PitchRatio::new(7, 11));
//! assert_eq!(f.count.to_string(), "792");
//! ```

pub mod catalog;
pub mod cli;
pub mod error;
pub mod family;
pub mod naming;
pub mod pitch;
pub mod scale;
pub mod scl;
pub mod types;
pub mod verify;

pub use error::{Error, Result};
