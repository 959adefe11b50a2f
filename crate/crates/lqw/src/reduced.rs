//! Exact 4D invariant-subspace evolution for search on the complete graph,
//! plus the closed-form runtime and peak predictions from degenerate
//! perturbation theory.
//!
//! With the marked vertex labeled a and the unmarked vertices b, the walk on
//! the complete graph stays in the span of {|aa⟩, |ab⟩, |ba⟩, |bb⟩}, where
//! the first letter is the vertex and the second the coin direction (|aa⟩ is
//! the marked vertex's self-loop). The search operator restricted to this
//! basis is a real orthogonal 4×4 matrix parameterized by two angles, which
//! makes the reduced model an exact analytic oracle for the full simulator.

use crate::graphs::build_complete;
use crate::walk::SearchConfig;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt;

/// Errors from the reduced model.
#[derive(Debug, Clone, PartialEq)]
pub enum ReducedError {
    /// ℓ ≤ 0: θ = 0 collapses the aa coupling and the perturbative
    /// predictions are undefined.
    DegenerateParameter(f64),
    /// The reduced basis needs at least 3 vertices.
    TooSmall(usize),
}

impl fmt::Display for ReducedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReducedError::DegenerateParameter(lw) => {
                write!(f, "degenerate parameter: loop weight must be > 0, got {lw}")
            }
            ReducedError::TooSmall(n) => write!(f, "reduced model needs n ≥ 3, got {n}"),
        }
    }
}

impl std::error::Error for ReducedError {}

/// Four complex amplitudes over the basis {|aa⟩, |ab⟩, |ba⟩, |bb⟩}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedState {
    pub amplitudes: [Complex64; 4],
}

impl ReducedState {
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Squared weight on the marked vertex's states |aa⟩ and |ab⟩.
    pub fn success_probability(&self) -> f64 {
        self.amplitudes[0].norm_sqr() + self.amplitudes[1].norm_sqr()
    }
}

/// The search operator restricted to the 4D basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedOperator {
    matrix: [[f64; 4]; 4],
    cos_theta: f64,
    sin_theta: f64,
    cos_phi: f64,
    sin_phi: f64,
}

impl ReducedOperator {
    pub fn matrix(&self) -> &[[f64; 4]; 4] {
        &self.matrix
    }

    pub fn cos_theta(&self) -> f64 {
        self.cos_theta
    }

    pub fn sin_theta(&self) -> f64 {
        self.sin_theta
    }

    pub fn cos_phi(&self) -> f64 {
        self.cos_phi
    }

    pub fn sin_phi(&self) -> f64 {
        self.sin_phi
    }

    pub fn apply(&self, s: &ReducedState) -> ReducedState {
        let mut out = [Complex64::new(0.0, 0.0); 4];
        for (row, slot) in self.matrix.iter().zip(out.iter_mut()) {
            for (m, a) in row.iter().zip(s.amplitudes.iter()) {
                *slot += m * a;
            }
        }
        ReducedState { amplitudes: out }
    }
}

/// Build the reduced search operator for the complete graph of n vertices:
///
/// cos θ = (N−ℓ−1)/(N+ℓ−1), sin θ = 2√(ℓ(N−1))/(N+ℓ−1),
/// cos φ = (N+ℓ−3)/(N+ℓ−1), sin φ = 2√(N+ℓ−2)/(N+ℓ−1).
pub fn reduced_operator(n: usize, loop_weight: f64) -> Result<ReducedOperator, ReducedError> {
    if n < 3 {
        return Err(ReducedError::TooSmall(n));
    }
    if !loop_weight.is_finite() || loop_weight <= 0.0 {
        return Err(ReducedError::DegenerateParameter(loop_weight));
    }
    let nf = n as f64;
    let denom = nf + loop_weight - 1.0;
    let cos_theta = (nf - loop_weight - 1.0) / denom;
    let sin_theta = 2.0 * (loop_weight * (nf - 1.0)).sqrt() / denom;
    let cos_phi = (nf + loop_weight - 3.0) / denom;
    let sin_phi = 2.0 * (nf + loop_weight - 2.0).sqrt() / denom;
    let matrix = [
        [cos_theta, -sin_theta, 0.0, 0.0],
        [0.0, 0.0, -cos_phi, sin_phi],
        [-sin_theta, -cos_theta, 0.0, 0.0],
        [0.0, 0.0, sin_phi, cos_phi],
    ];
    Ok(ReducedOperator { matrix, cos_theta, sin_theta, cos_phi, sin_phi })
}

/// The uniform initial state expressed in the 4D basis:
/// (√ℓ, √(N−1), √(N−1), √((N−1)(N+ℓ−2))) / √(N(N+ℓ−1)).
pub fn reduced_initial_state(n: usize, loop_weight: f64) -> Result<ReducedState, ReducedError> {
    if n < 3 {
        return Err(ReducedError::TooSmall(n));
    }
    let nf = n as f64;
    let norm = (nf * (nf + loop_weight - 1.0)).sqrt();
    let amps = [
        loop_weight.sqrt() / norm,
        (nf - 1.0).sqrt() / norm,
        (nf - 1.0).sqrt() / norm,
        ((nf - 1.0) * (nf + loop_weight - 2.0)).sqrt() / norm,
    ];
    Ok(ReducedState { amplitudes: amps.map(|x| Complex64::new(x, 0.0)) })
}

/// Success-probability series from repeated 4×4 multiplication,
/// p(t) = |α_aa|² + |α_ab|² for t = 0..=horizon.
pub fn reduced_evolve(
    n: usize,
    loop_weight: f64,
    horizon: usize,
) -> Result<Vec<f64>, ReducedError> {
    let op = reduced_operator(n, loop_weight)?;
    let mut state = reduced_initial_state(n, loop_weight)?;
    let mut probabilities = Vec::with_capacity(horizon + 1);
    probabilities.push(state.success_probability());
    for _ in 0..horizon {
        state = op.apply(&state);
        probabilities.push(state.success_probability());
    }
    Ok(probabilities)
}

/// Degenerate-perturbation-theory predictions for the complete graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerturbationPrediction {
    /// Phase σ = √(2(ℓ+1)/N) of the rotating eigenvalue pair.
    pub sigma: f64,
    /// Predicted peak step count t* = π/σ (real-valued; round when driving
    /// a discrete run and check the adjacent steps).
    pub t_star: f64,
    /// Predicted peak success probability p* = 4ℓ/(ℓ+1)².
    pub p_star: f64,
    /// False when 2(ℓ+1)/N ≥ 1, i.e. outside the asymptotic regime the
    /// expansion assumes. A warning, not an error.
    pub in_asymptotic_range: bool,
}

/// Evaluate σ, t*, p* for the complete graph of n vertices.
pub fn perturbation_prediction(
    n: usize,
    loop_weight: f64,
) -> Result<PerturbationPrediction, ReducedError> {
    if n < 3 {
        return Err(ReducedError::TooSmall(n));
    }
    if !loop_weight.is_finite() || loop_weight <= 0.0 {
        return Err(ReducedError::DegenerateParameter(loop_weight));
    }
    let ratio = 2.0 * (loop_weight + 1.0) / n as f64;
    let sigma = ratio.sqrt();
    Ok(PerturbationPrediction {
        sigma,
        t_star: PI / sigma,
        p_star: 4.0 * loop_weight / ((loop_weight + 1.0) * (loop_weight + 1.0)),
        in_asymptotic_range: ratio < 1.0,
    })
}

/// The four basis vectors embedded in the full walk state layout of the
/// complete graph of n vertices with marked vertex 0. |bb⟩ depends on ℓ.
///
/// Layout reminder: at any vertex b ≥ 1, edge slot 0 points to vertex 0 and
/// the remaining edge slots point to the unmarked vertices in sorted order.
pub fn basis_vectors(n: usize, loop_weight: f64) -> Result<[Vec<Complex64>; 4], ReducedError> {
    if n < 3 {
        return Err(ReducedError::TooSmall(n));
    }
    let coin = n; // d + 1 = (n − 1) + 1
    let len = n * coin;
    let zero = Complex64::new(0.0, 0.0);
    let nf = n as f64;

    let mut aa = vec![zero; len];
    aa[coin - 1] = Complex64::new(1.0, 0.0);

    let mut ab = vec![zero; len];
    let w_ab = 1.0 / (nf - 1.0).sqrt();
    for slot in ab.iter_mut().take(n - 1) {
        *slot = Complex64::new(w_ab, 0.0);
    }

    let mut ba = vec![zero; len];
    for b in 1..n {
        ba[b * coin] = Complex64::new(w_ab, 0.0);
    }

    let mut bb = vec![zero; len];
    let w_bb = 1.0 / ((nf - 1.0) * (nf + loop_weight - 2.0)).sqrt();
    for b in 1..n {
        for slot in 1..n - 1 {
            bb[b * coin + slot] = Complex64::new(w_bb, 0.0);
        }
        bb[b * coin + coin - 1] = Complex64::new(loop_weight.sqrt() * w_bb, 0.0);
    }

    Ok([aa, ab, ba, bb])
}

/// Inner products ⟨basis_i|amps⟩ for a full state over the complete graph.
pub fn project_onto_basis(
    amplitudes: &[Complex64],
    basis: &[Vec<Complex64>; 4],
) -> [Complex64; 4] {
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for (slot, b) in out.iter_mut().zip(basis.iter()) {
        debug_assert_eq!(b.len(), amplitudes.len());
        for (x, y) in b.iter().zip(amplitudes.iter()) {
            *slot += x.conj() * y;
        }
    }
    out
}

/// Per-step comparison of the full simulator against the reduced model on
/// the complete graph, with the perturbative predictions attached.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedComparison {
    pub n_vertices: usize,
    pub loop_weight: f64,
    pub p_full: Vec<f64>,
    pub p_reduced: Vec<f64>,
    pub max_abs_diff: f64,
    pub prediction: PerturbationPrediction,
}

impl ReducedComparison {
    /// CSV export: `step,p_full,p_reduced,abs_diff`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("step,p_full,p_reduced,abs_diff\n");
        for (t, (pf, pr)) in self.p_full.iter().zip(&self.p_reduced).enumerate() {
            out.push_str(&format!("{t},{pf:.12e},{pr:.12e},{:.12e}\n", (pf - pr).abs()));
        }
        out
    }
}

/// Run both the full walk and the reduced model for `horizon` steps.
pub fn compare_full_reduced(
    n: usize,
    loop_weight: f64,
    horizon: usize,
) -> Result<ReducedComparison, ReducedError> {
    let p_reduced = reduced_evolve(n, loop_weight, horizon)?;
    let g = build_complete(n).expect("n ≥ 3 fits the default cap here");
    let cfg = SearchConfig::new(loop_weight, 0, horizon);
    let record = crate::walk::evolve(&g, &cfg).expect("config validated by reduced_evolve");
    let p_full = record.probabilities;
    let max_abs_diff = p_full
        .iter()
        .zip(&p_reduced)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0_f64, f64::max);
    Ok(ReducedComparison {
        n_vertices: n,
        loop_weight,
        p_full,
        p_reduced,
        max_abs_diff,
        prediction: perturbation_prediction(n, loop_weight)?,
    })
}
