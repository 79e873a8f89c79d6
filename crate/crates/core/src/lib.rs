//! Online graph algorithms under relaxed irrevocability.
//!
//! The crate pairs online algorithms for Independent Set, Matching, Vertex
//! Cover and Minimum Spanning Forest with adaptive adversaries and exact
//! offline oracles, under four decision models: standard, late accept, late
//! reject, and late accept followed by late reject.
//!
//! - [`stream`]: arrival events, snapshots and the event file format.
//! - [`ledger`]: which accept/reject moves each decision model allows.
//! - [`algorithms`]: the online algorithms, as step functions.
//! - [`adversaries`]: adaptive request generators with certified OPT bounds.
//! - [`oracles`]: exact offline optima.
//! - [`harness`]: experiment runner, generators, sweeps and reports.

pub mod adversaries;
pub mod algorithms;
pub mod bits;
pub mod harness;
pub mod ledger;
pub mod oracles;
pub mod params;
pub mod problem;
pub mod stream;

/// Exact objective value: a cardinality or a total weight.
pub type Value = num_rational::Ratio<i64>;

pub use ledger::{Action, DecisionModel, Item, ItemKind, Move, MoveKind, SolutionLedger};
pub use problem::Problem;
pub use stream::{ArrivalEvent, ArrivalKind, Edge, GraphSnapshot, RequestSequence, Weight};
