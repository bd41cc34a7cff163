//! Exact combinatorics of origamis (square-tiled surfaces).
//!
//! * [`freegroup`]: reduced words in free groups, conjugacy, automorphisms
//!   of F₂ and their action on `ℤ²`;
//! * [`origami`]: permutation pairs, cylinders, genus, curves, shears;
//! * [`subgroup`]: the finite-index subgroup `H ≤ F₂`, Schreier systems,
//!   Reidemeister–Schreier rewriting and Veech group membership;
//! * [`hss`]: horizontal Schottky cut systems;
//! * [`homology`]: cellular `H₁`, intersection form, symplectic bases and
//!   homological certificates for horizontal multi-twists;
//! * [`linalg`]: exact integer linear algebra (Smith normal form);
//! * [`moebius`]: floating-point Möbius maps and Schottky coordinates.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod freegroup;
pub mod homology;
pub mod hss;
pub mod linalg;
pub mod moebius;
pub mod origami;
pub mod subgroup;
