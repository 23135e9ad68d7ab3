//! Exact computation in iterated Hopf Ore extensions over finite fields.
//!
//! The crate covers finite-field arithmetic ([`gf`]), Ore-tower normal forms
//! ([`orealg`]), tensor powers ([`tensoralg`]), Hopf structures ([`hopf`]),
//! the two-generator families ([`ihoe2`]), centers ([`center`]),
//! finite-dimensional quotients ([`findim`]), degree filtrations
//! ([`filtration`]) and primitive cohomology of `k[X]` ([`primcoh`]).

pub mod error;
pub mod gf;
pub mod linalg;
pub mod orealg;

pub use error::{Error, Result};
pub mod tensoralg;
pub mod hopf;
pub mod ihoe2;
pub mod center;
pub mod findim;
pub mod filtration;
pub mod primcoh;
