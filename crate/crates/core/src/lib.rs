//! Monogenity of Shanks' simplest cubic fields.
//!
//! For a parameter `t >= -1`, `K_t` is the cyclic cubic field generated by a
//! root `θ` of `f_t(x) = x^3 - t x^2 - (t + 3) x - 1`. This crate computes
//! `Δ_t = t^2 + 3t + 9` and the conductor of `K_t`, decides whether `K_t`
//! has a power integral basis and whether its conductor ideal is principal,
//! constructs the basis explicitly, and checks each verdict with exact
//! arithmetic in the field.
//!
//! ```
//! use simplest_cubic::monogenity::{field_monogenic, CaseLabel};
//!
//! let v = field_monogenic(12).unwrap();
//! assert_eq!(v.case_label, CaseLabel::A);
//! let cert = v.certificate.unwrap();
//! assert_eq!(cert.gamma.to_string(), "(-1 + θ)/3");
//! ```

pub mod arith;
pub mod cli;
pub mod conductor;
pub mod error;
pub mod field;
pub mod monogenity;
pub mod verify;

pub use error::{Error, Result};
