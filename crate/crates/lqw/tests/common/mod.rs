//! Shared test support: dense operator construction from the defining
//! formulas, independent of the simulator's update kernels, plus a small
//! deterministic PRNG for random-state tests.
//!
//! Each integration test target compiles this module separately and uses a
//! different subset of it.
#![allow(dead_code)]

use lqw::{Graph, WalkState};
use num_complex::Complex64;

/// Row-major dim×dim real matrix.
pub struct Dense {
    pub dim: usize,
    pub data: Vec<f64>,
}

impl Dense {
    pub fn zeros(dim: usize) -> Dense {
        Dense { dim, data: vec![0.0; dim * dim] }
    }

    pub fn at(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: f64) {
        self.data[r * self.dim + c] = x;
    }

    pub fn mul(&self, other: &Dense) -> Dense {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Dense::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.at(r, k);
                if a == 0.0 {
                    continue;
                }
                for c in 0..n {
                    out.data[r * n + c] += a * other.at(k, c);
                }
            }
        }
        out
    }
}

/// Q ⊗ I built directly from Q = I_N − 2|w⟩⟨w|: a diagonal sign matrix.
pub fn dense_oracle(g: &Graph, marked: usize) -> Dense {
    let coin = g.coin_dim();
    let dim = g.state_len();
    let mut m = Dense::zeros(dim);
    for v in 0..g.n_vertices() {
        for s in 0..coin {
            let sign = if v == marked { -1.0 } else { 1.0 };
            m.set(v * coin + s, v * coin + s, sign);
        }
    }
    m
}

/// I ⊗ C built directly from C = 2|s_c⟩⟨s_c| − I with the weighted coin
/// state s_c = (1, …, 1, √ℓ)/√(d+ℓ) in the (edges…, loop) slot order.
pub fn dense_coin(g: &Graph, loop_weight: f64) -> Dense {
    let coin = g.coin_dim();
    let d = g.degree();
    let dim = g.state_len();
    let mut sc = vec![1.0; coin];
    sc[d] = loop_weight.sqrt();
    let norm = (d as f64 + loop_weight).sqrt();
    for x in &mut sc {
        *x /= norm;
    }
    let mut m = Dense::zeros(dim);
    for v in 0..g.n_vertices() {
        for i in 0..coin {
            for j in 0..coin {
                let refl = 2.0 * sc[i] * sc[j] - if i == j { 1.0 } else { 0.0 };
                m.set(v * coin + i, v * coin + j, refl);
            }
        }
    }
    m
}

/// Flip-flop shift S|uv⟩ = |vu⟩ as a permutation matrix; the partner slot is
/// found by scanning the neighbor list, not via the precomputed inverse table.
pub fn dense_shift(g: &Graph) -> Dense {
    let coin = g.coin_dim();
    let dim = g.state_len();
    let mut m = Dense::zeros(dim);
    for u in 0..g.n_vertices() {
        for i in 0..g.degree() {
            let v = g.neighbor(u, i);
            let j = g
                .neighbors(v)
                .iter()
                .position(|&w| w == u)
                .expect("symmetric adjacency");
            m.set(v * coin + j, u * coin + i, 1.0);
        }
        m.set(u * coin + coin - 1, u * coin + coin - 1, 1.0);
    }
    m
}

/// The full dense step operator S·(I⊗C)·(Q⊗I).
pub fn dense_step(g: &Graph, marked: usize, loop_weight: f64) -> Dense {
    dense_shift(g).mul(&dense_coin(g, loop_weight).mul(&dense_oracle(g, marked)))
}

/// Apply a dense real matrix to a complex vector.
pub fn apply_dense(m: &Dense, x: &[Complex64]) -> Vec<Complex64> {
    assert_eq!(m.dim, x.len());
    let mut out = vec![Complex64::new(0.0, 0.0); m.dim];
    for (r, slot) in out.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (c, amp) in x.iter().enumerate() {
            let a = m.at(r, c);
            if a != 0.0 {
                acc += a * amp;
            }
        }
        *slot = acc;
    }
    out
}

/// xorshift64* PRNG; deterministic across runs and platforms.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545f4914f6cdd1d)
    }

    /// Uniform in [-1, 1).
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 52) as f64 * 2.0 - 1.0
    }
}

/// A normalized random complex state over the graph's slot space.
pub fn random_state<'g>(g: &'g Graph, loop_weight: f64, rng: &mut Rng) -> WalkState<'g> {
    let mut amps: Vec<Complex64> = (0..g.state_len())
        .map(|_| Complex64::new(rng.uniform(), rng.uniform()))
        .collect();
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amps {
        *a /= norm;
    }
    let mut s = WalkState::initial(g, loop_weight);
    s.set_amplitudes(amps);
    s
}

pub fn max_component_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}
