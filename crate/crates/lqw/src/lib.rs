//! Spatial search by lackadaisical quantum walk on vertex-transitive graphs.
//!
//! A lackadaisical quantum walk is a discrete-time coined walk with one
//! weighted self-loop per vertex. This crate simulates search for a unique
//! marked vertex with the generalized Grover coin and flip-flop shift, builds
//! the graph families the experiments run on (complete, cycle, periodic
//! lattices, regular complete bipartite, Paley, Latin square, triangular,
//! Johnson, hypercube), implements the exact 4D reduced model for the
//! complete graph, and provides sweep/hypothesis harnesses around the
//! observation that the self-loop weight ℓ = d/N maximizes the peak success
//! probability.
//!
//! The numerical contract everywhere is plain double precision with no
//! renormalization; evolution is deterministic and bit-reproducible.

pub mod experiments;
pub mod graphs;
pub mod io;
pub mod reduced;
pub mod walk;

pub use experiments::{
    default_horizon, find_peak, hypothesis_check, hypothesized_weight, sweep_loop_weight,
    HypothesisReport, PeakMode, PeakSpec, SweepEntry, SweepRecord, Verdict,
};
pub use graphs::{validate_strongly_regular, Family, Graph, GraphError, SrgOutcome, SrgParams};
pub use reduced::{
    compare_full_reduced, perturbation_prediction, reduced_evolve, reduced_initial_state,
    reduced_operator, PerturbationPrediction, ReducedComparison, ReducedOperator, ReducedState,
};
pub use walk::{evolve, evolve_with_peak, RunRecord, SearchConfig, WalkError, WalkState};
