//! Exact construction and certification of the generator of the ring of
//! integers of a simplest cubic field `L_n` as a module over its associated
//! order.
//!
//! ```
//! use scf_core::{generator, profile, verify};
//!
//! let p = profile::profile(237).unwrap();
//! let cert = verify::certify(generator::alpha(&p).unwrap());
//! assert_eq!(cert.alpha.to_string(), "(4ρ-ρ′-237)/21");
//! assert!(cert.all_passed());
//! ```

pub mod arith;
pub mod cubicfield;
pub mod eisenstein;
pub mod error;
pub mod generator;
pub mod groupring;
pub mod lattice;
pub mod profile;
pub mod scan;
pub mod verify;

pub use cubicfield::FieldElement;
pub use eisenstein::EisensteinInteger;
pub use error::{Error, Result};
pub use generator::GeneratorCertificate;
pub use groupring::GroupRingElement;
pub use profile::{Case, FieldProfile};
