//! Toolkit for treewidth obstructions and padded-string avoidance.
//!
//! The crate is organized around an immutable bitset-adjacency [`graph::Graph`]:
//!
//! - [`graph`]: construction, induced subgraphs, line graphs, subdivisions,
//!   components and basic set predicates.
//! - [`embed`]: exact induced-subgraph search with a node budget.
//! - [`iso`]: canonical codes for small graphs (isomorphism dedup).
//! - [`flow`]: internally disjoint path counts (vertex-capacity flow).
//! - [`obstructions`]: walls, the four basic obstruction families,
//!   classification and exact cleanness checking.
//! - [`tassels`]: strands, tassels, hassles, arrays and the constructive
//!   transformations between them.
//! - [`probes`]: validators for blocks, polypaths, clusters and webs.
//! - [`treewidth`]: exact solver, decomposition verifier, lower bounds.
//! - [`lang`]: binary-string avoidance engine (padded unavoidability,
//!   neck decompositions, tasselled decisions).
//! - [`io`]: PACE `.gr`/`.td` formats, JSON graphs and witnesses.
//! - [`verify`]: the acceptance battery run by tests and the CLI.
//!
//! All types are immutable after construction and all operations are pure,
//! so values can be shared freely across threads.

pub mod bitset;
pub mod embed;
pub mod error;
pub mod flow;
pub mod graph;
pub mod io;
pub mod iso;
pub mod lang;
pub mod linegraph;
pub mod obstructions;
pub mod probes;
pub mod rng;
pub mod tassels;
pub mod topo;
pub mod treewidth;
pub mod verify;

pub use error::Error;
pub use graph::Graph;
