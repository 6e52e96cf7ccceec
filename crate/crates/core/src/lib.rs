//! Signature-based Gröbner basis computation (F5 and its variants F5R and
//! F5C) for homogeneous ideals over prime fields, with an independent
//! Buchberger implementation used as an oracle.
//!
//! ```
//! use f5_core::algebra::{MonomialOrder, PrimeField};
//! use f5_core::drivers::{f5c, VariantConfig};
//! use f5_core::system::parse_system;
//!
//! let sys = parse_system(
//!     "ring: x,y,z,t\nchar: 32003\norder: grevlex\npolys:\n\
//!      y*z^3 - x^2*t^2\nx*z^2 - y^2*t\nx^2*y - z^2*t\n",
//! )
//! .unwrap();
//! let out = f5c(&sys.ring, &sys.polys, &VariantConfig::f5c()).unwrap();
//! assert_eq!(out.basis.len(), 8);
//! ```

pub mod algebra;
pub mod bench;
pub mod drivers;
pub mod engine;
mod error;
pub mod sigcore;
pub mod stats;
pub mod system;

pub use error::Error;
