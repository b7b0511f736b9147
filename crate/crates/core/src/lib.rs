//! Exact eccentricity statistics for undirected graphs, finite-field
//! constructions of girth-six extremal graphs, and checkers for upper and
//! lower bounds on the average eccentricity.
//!
//! Distances and eccentricities are integers and averages are exact
//! [`Rational`]s. Code that divides or takes square roots is generic over
//! the scalar type (see [`scalar`]); the aliases below fix the common
//! instantiations.

pub mod bounds;
pub mod cycles;
pub mod distance;
pub mod error;
pub mod field;
pub mod generators;
pub mod graph;
pub mod io;
pub mod random;
pub mod replay;
pub mod scalar;
pub mod transform;

pub use bounds::{analyze, audit_balls, audit_balls_as, path_avec, BoundName, BoundReport, FamilyTag};
pub use cycles::{forbidden_cycle_scan, girth, CycleScan, Girth};
pub use distance::{
    ball, distances_from, eccentricity_profile, edge_distance, weighted_avec, DistanceVector,
    EccentricityProfile,
};
pub use error::{Error, Result};
pub use field::{make_field, FieldElement, FiniteField};
pub use generators::{chain, classic, reiman, ChainSpec, ClassicKind, LabeledGraph};
pub use graph::Graph;
pub use replay::{replay, ProofTrace, Variant};
pub use transform::{induced_subgraph, line_graph, power_graph};

/// Exact rational used for average eccentricities and rational weights.
pub type Rational = num_rational::Ratio<i64>;

/// Structural constants evaluated in double precision.
pub type StructuralConstantsF64 = bounds::StructuralConstants<f64>;

/// Structural constants evaluated in single precision.
pub type StructuralConstantsF32 = bounds::StructuralConstants<f32>;
