//! Families of edge-disjoint maximal outerplanar graphs.
//!
//! Two constructions of `t` edge-disjoint maximal outerplanar graphs on `4t`
//! vertices ([`gn`] for every `t`, [`doubling`] for powers of two), the
//! one-vertex [`extension`] that carries such a family to any larger order,
//! and independent checkers: certificates of maximal outerplanarity
//! ([`mop`]), an exact outerplanarity oracle ([`outerplanar`]), exhaustive
//! outerthickness search ([`thickness`]) and exact colouring ([`color`]).
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod bounds;
pub mod budget;
pub mod color;
pub mod doubling;
pub mod extension;
pub mod gn;
pub mod graph;
pub mod mop;
pub mod outerplanar;
pub mod thickness;
pub mod verify;

pub use budget::Budgets;
pub use graph::{complete_minus_matching, Collision, Edge, Family, Graph, GraphError, Member};
pub use mop::{certify_mop, verify_certificate, MopCertificate, MopRejection};
pub use outerplanar::is_outerplanar_small;
