//! Exact construction, validation and `(d+1)`-coloring of pure `d`-simplex
//! complexes in `R^d`.
//!
//! The crate is organized bottom-up:
//!
//! - [`geometry`]: exact rational predicates (orientation, halfspace side,
//!   supporting hyperplanes, extreme points).
//! - [`complex`]: the complex data model, validation and JSON/OFF I/O.
//! - [`dual`]: the facet-adjacency (dual) graph, degree statistics, bounded
//!   degree clique search and the `K_{d+1}` configuration analyzer.
//! - [`coloring`]: exposed-simplex finders, peeling, greedy coloring,
//!   verification and an exact chromatic-number oracle.
//! - [`generators`]: deterministic test complexes.
//! - [`render`]: static SVG output for planar complexes.

pub mod coloring;
pub mod complex;
pub mod dual;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod render;

pub use coloring::{
    color, exact_chromatic, find_exposed_combinatorial, find_exposed_geometric, peel,
    peel_geometric_traced, verify_coloring, HullTrace, OracleResult, PeelCertificate, PeelMethod,
    PeelStep, Residual, DEFAULT_NODE_LIMIT,
};
pub use complex::{Coloring, Complex, Facet, Simplex, ValidationLevel, ValidationReport, Violation};
pub use dual::{CliqueReport, DualGraph, GraphStats};
pub use error::{Error, Result};
pub use generators::{generate, GeneratorKind, GeneratorSpec};
pub use render::{render_svg, RenderOptions};
pub use geometry::{Hyperplane, Point, Rational, Sign};
