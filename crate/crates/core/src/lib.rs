//! Cycle convexity and P3 convexity on graphs and graph products.
//!
//! The crate provides the interval and hull operators of both convexities,
//! exact solvers for the hull number, the convexity number and the
//! independence number, the Cartesian, strong and lexicographic products,
//! the gadget constructions used in hardness reductions for the cycle hull
//! number, and a catalog of checks that verify the known product formulas on
//! small instances.

pub mod catalog;
pub mod convexity;
pub mod error;
pub mod format;
pub mod gadgets;
pub mod graph;
pub mod harness;
pub mod product;
pub mod solvers;
pub mod vertex_set;

pub use convexity::{closure, interval, is_convex, is_hull_set, ClosureResult, ConvexityKind};
pub use error::{Error, FormatError, Result};
pub use graph::{generate, Bipartiteness, FamilySpec, Graph, GraphBuilder};
pub use product::{product, Factor, ProductGraph, ProductKind};
pub use vertex_set::VertexSet;
