#![allow(clippy::excessive_precision)]

//! Gravitationally bound quantum states above a mirror ("quantum bouncer")
//! and their spontaneous graviton emission.
//!
//! The crate evaluates the Airy function and its zeros, builds the normalised
//! eigenstates, computes quadrupole matrix elements in closed form and by
//! quadrature, and turns them into emission rates and lifetimes.
//!
//! ```
//! use gravibounce::{bouncer, constants, emission};
//!
//! let c = constants::default_constants();
//! let s = bouncer::scales(&c);
//! let gamma = emission::rate_reduced(2, 1, &s, &c).unwrap();
//! assert!(gamma > 1e-78 && gamma < 1e-76);
//! ```

pub mod airy;
pub mod bouncer;
pub mod cli;
pub mod constants;
pub mod emission;
pub mod error;
pub mod quadrature;
pub mod quadrupole;

pub use airy::{airy_ai, airy_ai_prime, airy_zero, bs_zero, AiryZero};
pub use bouncer::{eigenstate, scales, wavefunction, BouncerScales, EigenState};
pub use constants::{default_constants, load_constants, PhysicalConstants};
pub use emission::{lifetime, omega, quadrupole_validity, rate_general, rate_reduced, TransitionRate};
pub use error::{Error, Result};
pub use quadrupole::{element_closed, element_quadrature, QuadrupoleElement};
