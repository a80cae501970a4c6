//! Cuts of quivers with cycles.
//!
//! A quiver with cycles is a finite quiver together with a set of
//! distinguished oriented cycles. A *cut* is a set of arrows meeting every
//! distinguished cycle exactly once; it induces a grading in which every
//! cycle has degree one. This crate enumerates cuts, decides the structural
//! properties built on them, mutates cuts at strict sources and sinks,
//! studies the 2-dimensional cell complex spanned by the cycles, and builds
//! tensor products of labelled Dynkin quivers.
//!
//! ```
//! use quiver_cuts::{enumerate_cuts, Arrow, Cycle, Quiver, QuiverWithCycles, VertexId};
//!
//! let quiver = Quiver::new(
//!     ["x", "y", "z"].map(VertexId::from),
//!     [Arrow::new("a", "x", "y"), Arrow::new("b", "y", "z"), Arrow::new("c", "z", "x")],
//! );
//! let q = QuiverWithCycles::new(quiver, [Cycle::new(vec!["a".into(), "b".into(), "c".into()], None)]);
//! assert_eq!(enumerate_cuts(&q).len(), 3);
//! ```

mod bits;
pub mod canvas;
pub mod cuts;
pub mod error;
pub mod io;
pub mod mutation;
pub mod quiver;
pub mod tensor;

pub use canvas::{
    euler_characteristic, h1, is_simply_connected, pi1_presentation, AbelianGroup, GroupPresentation, Status,
    SimplyConnectedVerdict, DEFAULT_COSET_BUDGET,
};
pub use cuts::{
    are_compatible, enumerate_cuts, grading_from_cut, has_enough_cuts, is_covered, is_cut, is_fully_compatible,
    truncated_presentation, truncated_quiver, walk_degree, Cut, Grading, Relation, TruncatedPresentation,
};
pub use error::{Error, Result};
pub use io::{parse_quiver, serialize, ParseError, QuiverDocument};
pub use mutation::{
    is_transitive, mutate, mutate_minus, mutate_plus, mutation_graph, strict_sinks, strict_sources,
    MutationDirection, MutationEdge, MutationGraph,
};
pub use quiver::{
    canonicalize_cycle, cycle_space_basis, is_acyclic, validate, Arrow, ArrowId, Cycle, Direction, Quiver,
    QuiverWithCycles, Sign, Step, VertexId, Violation, Walk,
};
pub use tensor::{
    dynkin_quiver, l_homogeneity, morita_split, standard_cuts, tensor_qwc, DivisionLabel, DynkinType, LabelKind,
    LabeledDynkinSpec, LabeledQuiver, LabeledQuiverWithCycles, VertexLabel,
};
