//! Structure and spectra of bipartite outerplanar graphs.
//!
//! This crate provides the toolbox needed to work with (edge-)maximal
//! bipartite outerplanar graphs at desk scale (up to 64 vertices):
//!
//! * [`graph`] — a bitset-backed simple graph with connectivity,
//!   bipartiteness and block/cut-vertex machinery;
//! * [`canon`] — canonical codes for isomorphism rejection;
//! * [`minor`] — K4 / K2,3 minor containment tests;
//! * [`embedding`] — outerplane embeddings of 2-connected graphs
//!   (Hamilton boundary, chords, inner faces);
//! * [`recognition`] — outerplanarity, maximality, boundary adjacency
//!   and the structural decomposition of maximal graphs;
//! * [`constructions`] — the named graph families (stars, quad books,
//!   pendant families, polygon quadrangulations);
//! * [`enumeration`] — exhaustive generation with isomorphism rejection,
//!   dissection censuses, and extremal scans;
//! * [`spectra`] — dense eigensolvers, walk-count row sums, eigenvalue
//!   bound certificates, and closed-form bounds;
//! * [`io`] — JSON / DOT / graph6 interchange;
//! * [`report`] — the named verification suites behind `verify-theorems`.
//!
//! Every graph value is immutable once constructed; all operations are
//! pure functions, so the whole API is safe to drive from parallel
//! workers without extra synchronization.

pub mod canon;
pub mod cli;
pub mod constructions;
pub mod embedding;
pub mod enumeration;
pub mod graph;
pub mod io;
pub mod minor;
pub mod recognition;
pub mod report;
pub mod rng;
pub mod spectra;
pub mod tol;

pub use graph::{Bipartition, BlockTree, Graph, MAX_N};

use std::fmt;

/// Errors shared across the crate.
///
/// `TheoremViolation` is special: it marks a hard invariant that can only
/// fire when a verified structural fact fails on certified input, i.e. a
/// bug detector. The CLI maps it to exit code 2.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Vertex index outside `0..n`.
    VertexOutOfRange { v: usize, n: usize },
    /// A loop edge `(v, v)` was requested.
    LoopEdge { v: usize },
    /// Requested order outside `1..=MAX_N`.
    OrderOutOfRange { n: usize },
    /// Operation requires a connected graph.
    Disconnected,
    /// Operation requires a 2-connected graph.
    NotTwoConnected,
    /// Operation requires an outerplanar graph.
    NotOuterplanar(&'static str),
    /// Operation requires a bipartite graph.
    NotBipartite,
    /// Operation requires a maximal bipartite outerplanar graph.
    NotMaximal,
    /// The requested edge is not present.
    NonEdge { u: usize, v: usize },
    /// The requested edge is already present.
    EdgePresent { u: usize, v: usize },
    /// k-sum joints are not cliques or differ in size.
    BadJoint(String),
    /// Graph would exceed the 64-vertex capacity.
    CapacityExceeded { requested: usize },
    /// A size cap was exceeded without the explicit override.
    CapExceeded {
        what: &'static str,
        cap: usize,
        requested: usize,
    },
    /// Parameter outside the range a closed-form bound or family requires;
    /// the string names the violated hypothesis.
    HypothesisViolated(String),
    /// Malformed input (CLI values, JSON, graph6, chord plans, ...).
    BadInput(String),
    /// An eigensolver failed to reach the required residual.
    SolverDiverged { residual: f64 },
    /// A machine-checked structural fact failed on certified input.
    TheoremViolation(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { v, n } => write!(f, "vertex {v} out of range for order {n}"),
            Error::LoopEdge { v } => {
                write!(f, "loop edge at vertex {v} rejected: graphs are simple")
            }
            Error::OrderOutOfRange { n } => write!(f, "order {n} outside 1..={MAX_N}"),
            Error::Disconnected => write!(f, "graph must be connected"),
            Error::NotTwoConnected => write!(f, "graph must be 2-connected"),
            Error::NotOuterplanar(why) => write!(f, "graph must be outerplanar ({why})"),
            Error::NotBipartite => write!(f, "graph must be bipartite"),
            Error::NotMaximal => write!(f, "graph must be maximal bipartite outerplanar"),
            Error::NonEdge { u, v } => write!(f, "({u},{v}) is not an edge"),
            Error::EdgePresent { u, v } => write!(f, "({u},{v}) is already an edge"),
            Error::BadJoint(msg) => write!(f, "invalid summing joint: {msg}"),
            Error::CapacityExceeded { requested } => {
                write!(f, "requested order {requested} exceeds capacity {MAX_N}")
            }
            Error::CapExceeded {
                what,
                cap,
                requested,
            } => {
                write!(f, "{what} cap is {cap}, requested {requested}; pass the explicit override to proceed")
            }
            Error::HypothesisViolated(msg) => write!(f, "hypothesis violated: {msg}"),
            Error::BadInput(msg) => write!(f, "bad input: {msg}"),
            Error::SolverDiverged { residual } => {
                write!(f, "eigensolver did not converge (residual {residual:.3e})")
            }
            Error::TheoremViolation(msg) => write!(f, "theorem-violation detector fired: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
