//! The lackadaisical quantum walk search operator, applied step by step.
//!
//! One search step is U = S(I⊗C)(Q⊗I): phase-flip oracle on the marked
//! vertex, Grover diffusion of the weighted (d+1)-dimensional coin at every
//! vertex, then the flip-flop shift. The self-loop slot is a fixed point of
//! the shift (a loop has no opposite direction to hop to).
//!
//! Amplitudes are stored as complex doubles even though U is real: the
//! reduced-model eigenvalues are complex, and complex storage keeps
//! full/reduced comparisons uniform. Norms are never renormalized; drift is
//! monitored by tests, not silently corrected.
//!
//! A single evolution is inherently sequential (step t+1 depends on step t);
//! a [`WalkState`] is exclusively owned by its run. Distinct runs over the
//! same shared immutable [`Graph`] are independent and may execute in
//! parallel with no coordination.

use crate::experiments::{find_peak, PeakSpec};
use crate::graphs::Graph;
use num_complex::Complex64;
use std::fmt;

/// Errors from walk configuration and evolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkError {
    /// Marked vertex index ≥ N.
    MarkedOutOfRange { marked: usize, n_vertices: usize },
    /// Horizon of zero steps (or otherwise unusable config).
    InvalidConfig(&'static str),
}

impl fmt::Display for WalkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalkError::MarkedOutOfRange { marked, n_vertices } => {
                write!(f, "marked vertex {marked} out of range for {n_vertices} vertices")
            }
            WalkError::InvalidConfig(msg) => write!(f, "invalid config: {msg}"),
        }
    }
}

impl std::error::Error for WalkError {}

/// Search parameters: self-loop weight ℓ ≥ 0, marked vertex, step horizon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    pub loop_weight: f64,
    pub marked: usize,
    pub horizon: usize,
}

impl SearchConfig {
    pub fn new(loop_weight: f64, marked: usize, horizon: usize) -> SearchConfig {
        SearchConfig { loop_weight, marked, horizon }
    }

    fn validate(&self, g: &Graph) -> Result<(), WalkError> {
        if !self.loop_weight.is_finite() || self.loop_weight < 0.0 {
            return Err(WalkError::InvalidConfig("loop weight must be finite and ≥ 0"));
        }
        if self.marked >= g.n_vertices() {
            return Err(WalkError::MarkedOutOfRange {
                marked: self.marked,
                n_vertices: g.n_vertices(),
            });
        }
        if self.horizon == 0 {
            return Err(WalkError::InvalidConfig("horizon must be ≥ 1"));
        }
        Ok(())
    }
}

/// Walker state: one complex amplitude per (vertex, coin slot).
///
/// Slot layout per vertex: slots `0..d` follow the sorted neighbor order of
/// the graph, slot `d` is the self-loop.
#[derive(Debug, Clone)]
pub struct WalkState<'g> {
    graph: &'g Graph,
    loop_weight: f64,
    sqrt_loop: f64,
    amplitudes: Vec<Complex64>,
}

impl<'g> WalkState<'g> {
    /// Uniform superposition over vertices with the weighted coin state at
    /// each: edge slots carry 1/√(N(d+ℓ)), the loop slot carries √ℓ/√(N(d+ℓ)).
    pub fn initial(graph: &'g Graph, loop_weight: f64) -> WalkState<'g> {
        assert!(
            loop_weight >= 0.0 && loop_weight.is_finite(),
            "loop weight must be finite and ≥ 0"
        );
        let n = graph.n_vertices() as f64;
        let d = graph.degree() as f64;
        let edge_amp = 1.0 / (n * (d + loop_weight)).sqrt();
        let loop_amp = loop_weight.sqrt() * edge_amp;
        let coin = graph.coin_dim();
        let mut amplitudes = vec![Complex64::new(edge_amp, 0.0); graph.state_len()];
        for v in 0..graph.n_vertices() {
            amplitudes[v * coin + coin - 1] = Complex64::new(loop_amp, 0.0);
        }
        WalkState { graph, loop_weight, sqrt_loop: loop_weight.sqrt(), amplitudes }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn loop_weight(&self) -> f64 {
        self.loop_weight
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Amplitude at (vertex, slot).
    pub fn amplitude(&self, vertex: usize, slot: usize) -> Complex64 {
        self.amplitudes[vertex * self.graph.coin_dim() + slot]
    }

    pub fn set_amplitudes(&mut self, amplitudes: Vec<Complex64>) {
        assert_eq!(amplitudes.len(), self.graph.state_len());
        self.amplitudes = amplitudes;
    }

    /// Squared 2-norm of the state.
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Phase-flip oracle Q ⊗ I: negate all d+1 amplitudes at the marked vertex.
    pub fn apply_oracle(&mut self, marked: usize) {
        assert!(marked < self.graph.n_vertices(), "marked vertex out of range");
        let coin = self.graph.coin_dim();
        for a in &mut self.amplitudes[marked * coin..(marked + 1) * coin] {
            *a = -*a;
        }
    }

    /// Grover coin I ⊗ C with C = 2|s_c⟩⟨s_c| − I: at each vertex, invert the
    /// coin amplitudes about their √ℓ-weighted average
    /// m = (√ℓ·a_loop + Σᵢ aᵢ)/(d+ℓ); edge slots become 2m − aᵢ and the loop
    /// slot becomes 2√ℓ·m − a_loop.
    pub fn apply_coin(&mut self) {
        let coin = self.graph.coin_dim();
        let d = self.graph.degree();
        let denom = d as f64 + self.loop_weight;
        let sqrt_loop = self.sqrt_loop;
        for block in self.amplitudes.chunks_exact_mut(coin) {
            let mut sum = Complex64::new(0.0, 0.0);
            for a in &block[..d] {
                sum += *a;
            }
            let mean = (sum + sqrt_loop * block[d]) / denom;
            for a in &mut block[..d] {
                *a = 2.0 * mean - *a;
            }
            block[d] = 2.0 * sqrt_loop * mean - block[d];
        }
    }

    /// Flip-flop shift S|uv⟩ = |vu⟩: swap each directed-edge amplitude with
    /// its reverse; self-loop slots stay put.
    pub fn apply_shift(&mut self) {
        let coin = self.graph.coin_dim();
        let d = self.graph.degree();
        for u in 0..self.graph.n_vertices() {
            for i in 0..d {
                let v = self.graph.neighbor(u, i);
                // visit each unordered pair once
                if v < u {
                    continue;
                }
                let j = self.graph.inverse_slot(u, i);
                self.amplitudes.swap(u * coin + i, v * coin + j);
            }
        }
    }

    /// One search step U = S(I⊗C)(Q⊗I).
    pub fn step(&mut self, marked: usize) {
        self.apply_oracle(marked);
        self.apply_coin();
        self.apply_shift();
    }

    /// Probability of measuring the walker at `marked`: the squared
    /// amplitude summed over all d+1 coin slots of that vertex.
    pub fn success_probability(&self, marked: usize) -> f64 {
        assert!(marked < self.graph.n_vertices(), "marked vertex out of range");
        let coin = self.graph.coin_dim();
        self.amplitudes[marked * coin..(marked + 1) * coin]
            .iter()
            .map(|a| a.norm_sqr())
            .sum()
    }
}

/// Per-step success probabilities of one run, with the detected peak.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    /// p(0..=horizon); p(t) is the success probability after t steps.
    pub probabilities: Vec<f64>,
    pub peak_time: usize,
    pub peak_probability: f64,
}

impl RunRecord {
    /// CSV export: header `step,success_probability`, probabilities with
    /// 13 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("step,success_probability\n");
        for (t, p) in self.probabilities.iter().enumerate() {
            out.push_str(&format!("{t},{p:.12e}\n"));
        }
        out
    }
}

/// Drive the search from the uniform initial state for `cfg.horizon` steps,
/// recording the success probability at every step, and detect the peak
/// with the given spec. The peak window is clamped to fit short series, so
/// any horizon ≥ 1 works.
pub fn evolve_with_peak(
    g: &Graph,
    cfg: &SearchConfig,
    peak: &PeakSpec,
) -> Result<RunRecord, WalkError> {
    cfg.validate(g)?;
    let mut state = WalkState::initial(g, cfg.loop_weight);
    let mut probabilities = Vec::with_capacity(cfg.horizon + 1);
    probabilities.push(state.success_probability(cfg.marked));
    for _ in 0..cfg.horizon {
        state.step(cfg.marked);
        probabilities.push(state.success_probability(cfg.marked));
    }
    let fitted = PeakSpec {
        window: peak.window.min((probabilities.len() - 1) / 2),
        mode: peak.mode,
    };
    let (peak_time, peak_probability) =
        find_peak(&probabilities, &fitted).expect("window clamped to fit the series");
    Ok(RunRecord { probabilities, peak_time, peak_probability })
}

/// [`evolve_with_peak`] with the default peak spec (global maximum).
pub fn evolve(g: &Graph, cfg: &SearchConfig) -> Result<RunRecord, WalkError> {
    evolve_with_peak(g, cfg, &PeakSpec::default())
}
