//! Finitely presented distributive lattices and Zariski lattices of
//! effective commutative rings, with decision procedures for Krull,
//! Jacobson and Heitmann dimension cross-checked against brute-force
//! prime spectra.

pub mod bits;
pub mod error;
pub mod fault;
pub mod lattice;

pub use error::{Error, Result};
pub use lattice::{Element, Lattice};
pub mod ideals;
pub mod heyting;
pub mod dimension;
pub mod spectra;
pub mod ring;
pub mod corpus;
pub mod check;
pub mod report;
pub mod commands;
