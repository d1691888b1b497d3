//! Exact computation for signed graphs: switching algebra, girth vectors,
//! circular colorings with rational circumference, homomorphism search with
//! certificates, circular clique generators, and the packing/contract/3-color
//! pipeline that produces `(K_{3,3}, M)` certificates for signed bipartite
//! planar inputs of negative girth at least 6.
//!
//! Everything here is exact (no floating point) and deterministic: identical
//! inputs produce identical outputs, including which certificate a search
//! returns. The crate is `no_std` (with `alloc`); IO, file formats and the
//! command-line front end live in the companion `sigcirc-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod bits;

pub mod circular;
pub mod cliques;
pub mod coloring;
pub mod constructions;
pub mod girth;
pub mod graph;
pub mod hom;
pub mod oracle;
pub mod planar;
pub mod rational;
pub mod rng;
pub mod switching;

pub use circular::{check_circular, chi_c, Zone};
pub use girth::{girth_vector, negative_girth, GirthVector};
pub use graph::{Sign, SignedGraph, SwitchSet};
pub use hom::{esp_hom, switch_iso, switching_hom, HomCertificate};
pub use rational::Rational;
pub use switching::switching_equivalent;
