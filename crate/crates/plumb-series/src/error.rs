//! Crate-wide error type.
//!
//! Every fallible operation returns [`Error`]; the CLI maps each variant to a
//! stable machine-parsable code (see [`Error::code`]) and exit status 1.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All domain errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Syntax error in the plain-text graph format.
    #[error("parse error at line {line}: {msg}")]
    Parse {
        /// 1-based line number in the input text.
        line: usize,
        /// Human-readable description of the problem.
        msg: String,
    },

    /// Malformed JSON graph document.
    #[error("invalid graph JSON: {0}")]
    GraphJson(String),

    /// A vertex id was declared twice.
    #[error("duplicate vertex id {id:?}")]
    DuplicateVertex {
        /// The repeated id.
        id: String,
    },

    /// An edge or arrow referenced an undeclared vertex id.
    #[error("unknown vertex id {id:?}")]
    UnknownVertex {
        /// The missing id.
        id: String,
    },

    /// The graph has no vertices.
    #[error("graph has no vertices")]
    EmptyGraph,

    /// An edge joins a vertex to itself.
    #[error("self-loop on vertex {id:?}")]
    SelfLoop {
        /// The offending id.
        id: String,
    },

    /// The same unordered edge was declared twice.
    #[error("duplicate edge between {a:?} and {b:?}")]
    DuplicateEdge {
        /// One endpoint.
        a: String,
        /// The other endpoint.
        b: String,
    },

    /// The edge set does not connect all vertices.
    #[error("graph is not connected")]
    NotConnected,

    /// The edge set contains a cycle.
    #[error("graph is not a tree (edge count exceeds vertex count - 1)")]
    NotATree,

    /// The intersection matrix is not negative definite.
    #[error("intersection form is not negative definite: {witness}")]
    NotNegativeDefinite {
        /// Which principal minor failed, and how.
        witness: String,
    },

    /// A cycle had the wrong number of coordinates for the graph.
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch {
        /// Number of vertices in the graph.
        expected: usize,
        /// Number of coordinates supplied.
        got: usize,
    },

    /// A cycle is not in the dual lattice (some pairing with a base element
    /// is non-integral).
    #[error("cycle is not in the dual lattice: pairing with vertex {id:?} is {value}")]
    NotInDualLattice {
        /// Vertex whose pairing is fractional.
        id: String,
        /// The fractional pairing value.
        value: String,
    },

    /// The divisor class specification does not name an element of the
    /// discriminant group.
    #[error("invalid class specification: {msg}")]
    InvalidClassSpec {
        /// What went wrong.
        msg: String,
    },

    /// A cycle specification string could not be parsed.
    #[error("invalid cycle specification: {msg}")]
    InvalidCycleSpec {
        /// What went wrong.
        msg: String,
    },

    /// Series cap too small to certify the requested window.
    #[error("cap too small for requested window: need cap >= {required}")]
    InsufficientCap {
        /// Smallest sufficient cap.
        required: u64,
    },

    /// An operation with exponential fan-out was asked to run on too many
    /// vertices.
    #[error("graph too large for this operation: {got} vertices exceeds limit {limit}")]
    TooManyVertices {
        /// Hard limit for the operation.
        limit: usize,
        /// Vertex count supplied.
        got: usize,
    },

    /// The discriminant group is too large to enumerate.
    #[error("discriminant group too large to enumerate: order {order}")]
    GroupTooLarge {
        /// The group order.
        order: String,
    },

    /// An operation requiring a rational or minimally elliptic graph was
    /// called on something else.
    #[error("operation requires a rational or minimally elliptic graph, got {kind}")]
    UnsupportedClassification {
        /// The actual classification.
        kind: String,
    },

    /// The Laufer-type iteration exceeded its step budget (cannot happen on
    /// a negative-definite graph; guards against internal errors).
    #[error("iteration limit {limit} exceeded in cycle saturation")]
    IterationLimit {
        /// The computed step budget.
        limit: u64,
    },

    /// Relative series requested on a graph without arrows.
    #[error("operation requires at least one arrow on the graph")]
    NoArrows,

    /// Relative series requested with two or more arrows on one vertex.
    #[error("vertex {id:?} carries {count} arrows; the relative series allows at most one per vertex")]
    ArrowRestriction {
        /// The offending vertex.
        id: String,
        /// Its arrow count.
        count: u64,
    },

    /// The divisor multiplicity vector is not integral.
    #[error("multiplicity vector is not integral: coordinate of vertex {id:?} is {value}")]
    NonIntegralMultiplicity {
        /// Vertex with fractional multiplicity.
        id: String,
        /// The fractional value.
        value: String,
    },

    /// A factored rational function cannot be expanded as a series.
    #[error("factor not expandable: {msg}")]
    InvalidFactor {
        /// Which invariant failed.
        msg: String,
    },

    /// Two series over different variable sets were combined.
    #[error("variable mismatch: {left:?} vs {right:?}")]
    VariableMismatch {
        /// Variables of the left operand.
        left: Vec<String>,
        /// Variables of the right operand.
        right: Vec<String>,
    },

    /// Counting polynomial extraction found non-symmetric or non-terminating
    /// data (the degree/characteristic-polynomial input is inconsistent).
    #[error("counting polynomial inconsistency: {msg}")]
    SymmetryViolation {
        /// Details of the failed check.
        msg: String,
    },

    /// Generic invalid argument (bad degree, bad polynomial, ...).
    #[error("invalid input: {msg}")]
    InvalidInput {
        /// What was wrong.
        msg: String,
    },

    /// `verify` was asked for a check name that is not registered.
    #[error("unknown check {name:?}; known checks: {known}")]
    UnknownCheck {
        /// The requested name.
        name: String,
        /// Comma-separated registered names.
        known: String,
    },

    /// The brute-force search box contained no saturation candidate away
    /// from its boundary; the caller must enlarge the box.
    #[error("brute-force box too small: no candidate strictly inside box of size {box_size}")]
    BoxTooSmall {
        /// The box size used.
        box_size: u32,
    },

    /// Filesystem error while reading an input file (CLI only).
    #[error("cannot read {path}: {msg}")]
    Io {
        /// Path that failed.
        path: String,
        /// OS error text.
        msg: String,
    },
}

impl Error {
    /// Stable machine-parsable code for CLI error lines.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse_error",
            Error::GraphJson(_) => "graph_json_error",
            Error::DuplicateVertex { .. } => "duplicate_vertex",
            Error::UnknownVertex { .. } => "unknown_vertex",
            Error::EmptyGraph => "empty_graph",
            Error::SelfLoop { .. } => "self_loop",
            Error::DuplicateEdge { .. } => "duplicate_edge",
            Error::NotConnected => "not_connected",
            Error::NotATree => "not_a_tree",
            Error::NotNegativeDefinite { .. } => "not_negative_definite",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::NotInDualLattice { .. } => "not_in_dual_lattice",
            Error::InvalidClassSpec { .. } => "invalid_class_spec",
            Error::InvalidCycleSpec { .. } => "invalid_cycle_spec",
            Error::InsufficientCap { .. } => "insufficient_cap",
            Error::TooManyVertices { .. } => "too_many_vertices",
            Error::GroupTooLarge { .. } => "group_too_large",
            Error::UnsupportedClassification { .. } => "unsupported_classification",
            Error::IterationLimit { .. } => "iteration_limit",
            Error::NoArrows => "no_arrows",
            Error::ArrowRestriction { .. } => "arrow_restriction",
            Error::NonIntegralMultiplicity { .. } => "non_integral_multiplicity",
            Error::InvalidFactor { .. } => "invalid_factor",
            Error::VariableMismatch { .. } => "variable_mismatch",
            Error::SymmetryViolation { .. } => "symmetry_violation",
            Error::InvalidInput { .. } => "invalid_input",
            Error::UnknownCheck { .. } => "unknown_check",
            Error::BoxTooSmall { .. } => "box_too_small",
            Error::Io { .. } => "io_error",
        }
    }
}
