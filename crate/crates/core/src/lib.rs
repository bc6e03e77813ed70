//! Regular hypermaps whose underlying hypergraphs are simple.
//!
//! A regular hypermap is given by a finite group `G` generated by three
//! involutions `(γ0, γ1, γ2)`; its flags are the elements of `G` and its
//! hypervertices, hyperedges and hyperfaces are the right cosets of
//! `⟨γ1,γ2⟩`, `⟨γ2,γ0⟩` and `⟨γ0,γ1⟩`. This crate provides
//!
//! - [`perm`] and [`group`]: dense permutations and fully enumerated
//!   permutation groups with cosets, cores, conjugates and set products;
//! - [`hypermap`]: the hypermap model, its underlying hypergraph and Levi
//!   graph;
//! - [`simplicity`]: the flag condition, the edge-multiplicity formula and
//!   the simplicity and faithfulness tests, each with a direct check;
//! - [`field`], [`affine`], [`catalog`]: the affine groups of degree `p²`
//!   with dihedral point stabilizers and the explicit simple hypermaps on
//!   them;
//! - [`classify`] and [`verify`]: enumeration and classification of simple
//!   regular hypermaps of a given order on a given group.

pub mod affine;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod field;
pub mod group;
pub mod hypermap;
pub mod perm;
pub mod simplicity;
pub mod verify;

pub use error::{Error, Result};
