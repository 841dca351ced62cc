//! Generalized graph domination.
//!
//! A set `D` of vertices dominates a graph under a demand rule `r` when every
//! vertex `v` outside `D` has at least `r(v)` neighbors inside `D`. The rule
//! may be a constant (`k`-domination), a fraction of the degree
//! (`α`-domination), a function of the degree (`f`-domination), or an explicit
//! per-vertex vector. Every rule is resolved to a per-vertex [`Demands`]
//! vector, and all solvers work on that representation.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and the
//! command-line front end live in the `domset` crate.
//!
//! [`Demands`]: demand::Demands

#![no_std]

extern crate alloc;

pub mod approx;
pub mod demand;
mod error;
pub mod exact;
pub mod gadgets;
pub mod graph;
pub mod ratio;

pub use approx::{ApproxResult, MisOrder};
pub use demand::{DemandSpec, Demands, DomWitness, FFunction};
pub use error::{Error, Result};
pub use exact::{ExactResult, SearchMethod, SearchStatus};
pub use gadgets::{Construction, GadgetReduction, ReductionCheck};
pub use graph::{Bipartition, Graph, VertexSet};
pub use ratio::Ratio;
