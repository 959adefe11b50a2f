//! Browser bindings for the walk simulator: build a graph, evolve a search
//! run, sweep the ℓ = c·d/N multiplier grid, and compare the full walk with
//! the 4D reduced model. Results come back as JSON strings for a plain
//! JavaScript page to plot.
//!
//! The `*_impl` functions are ordinary Rust (testable on the host); the
//! `#[wasm_bindgen]` exports only translate errors to `JsValue`.

use lqw::{
    compare_full_reduced, default_horizon, evolve_with_peak, hypothesis_check, hypothesized_weight,
    Family, Graph, PeakMode, PeakSpec, SearchConfig,
};
use wasm_bindgen::prelude::*;

/// Browser-side cap on state size: 2²¹ amplitudes keeps the largest demo
/// instance (complete graph of 1024 vertices, 2²⁰ amplitudes) comfortable.
const DEMO_AMPLITUDE_CAP: usize = 1 << 21;

/// Cap on requested step counts so a mis-typed horizon cannot hang the tab.
const DEMO_HORIZON_CAP: usize = 20_000;

fn parse_family(name: &str, a: u32, b: u32) -> Result<Family, String> {
    let a = a as usize;
    let b = b as usize;
    match name {
        "complete" => Ok(Family::Complete { n: a }),
        "cycle" => Ok(Family::Cycle { n: a }),
        "torus" => Ok(Family::TorusLattice { dimension: a, side: b }),
        "bipartite" => Ok(Family::CompleteBipartite { n: a }),
        "paley" => Ok(Family::Paley { q: a }),
        "latin" => Ok(Family::LatinSquare { order: a }),
        "triangular" => Ok(Family::Triangular { m: a }),
        "johnson" => Ok(Family::Johnson { n: a, k: b }),
        "hypercube" => Ok(Family::Hypercube { dimension: a }),
        other => Err(format!("unknown family '{other}'")),
    }
}

fn build(name: &str, a: u32, b: u32) -> Result<Graph, String> {
    parse_family(name, a, b)?
        .build_with_cap(DEMO_AMPLITUDE_CAP)
        .map_err(|e| e.to_string())
}

fn graph_info_impl(family: &str, a: u32, b: u32) -> Result<String, String> {
    let g = build(family, a, b)?;
    Ok(serde_json::json!({
        "family": g.family_tag(),
        "n_vertices": g.n_vertices(),
        "degree": g.degree(),
        "state_len": g.state_len(),
        "hypothesized_weight": hypothesized_weight(&g),
    })
    .to_string())
}

fn evolve_curve_impl(
    family: &str,
    a: u32,
    b: u32,
    loop_weight: f64,
    horizon: u32,
) -> Result<String, String> {
    if !loop_weight.is_finite() || loop_weight < 0.0 {
        return Err(format!("loop weight must be ≥ 0, got {loop_weight}"));
    }
    let g = build(family, a, b)?;
    let steps = if horizon == 0 {
        default_horizon(&g, loop_weight).min(DEMO_HORIZON_CAP)
    } else {
        (horizon as usize).min(DEMO_HORIZON_CAP)
    };
    let record =
        evolve_with_peak(&g, &SearchConfig::new(loop_weight, 0, steps), &PeakSpec::default())
            .map_err(|e| e.to_string())?;
    Ok(serde_json::json!({
        "family": g.family_tag(),
        "n_vertices": g.n_vertices(),
        "degree": g.degree(),
        "loop_weight": loop_weight,
        "horizon": steps,
        "probabilities": record.probabilities,
        "peak_time": record.peak_time,
        "peak_probability": record.peak_probability,
    })
    .to_string())
}

fn sweep_multiplier_grid_impl(
    family: &str,
    a: u32,
    b: u32,
    multipliers: &[f64],
    horizon: u32,
    first_local_max: bool,
) -> Result<String, String> {
    let g = build(family, a, b)?;
    let peak = PeakSpec {
        window: 5,
        mode: if first_local_max { PeakMode::FirstLocalMax } else { PeakMode::GlobalMax },
    };
    let steps = if horizon == 0 { None } else { Some((horizon as usize).min(DEMO_HORIZON_CAP)) };
    let report =
        hypothesis_check(&g, multipliers, 0.02, steps, &peak).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&report).expect("serializable"))
}

fn reduced_compare_impl(n: u32, loop_weight: f64, horizon: u32) -> Result<String, String> {
    let n = n as usize;
    if n.saturating_mul(n) > DEMO_AMPLITUDE_CAP {
        return Err(format!("complete({n}) exceeds the demo size cap"));
    }
    let steps = if horizon == 0 {
        let base = 4.0 * std::f64::consts::PI * (n as f64 / (2.0 * (loop_weight + 1.0))).sqrt();
        (base.ceil() as usize).clamp(1, DEMO_HORIZON_CAP)
    } else {
        (horizon as usize).min(DEMO_HORIZON_CAP)
    };
    let cmp = compare_full_reduced(n, loop_weight, steps).map_err(|e| e.to_string())?;
    Ok(serde_json::json!({
        "n_vertices": cmp.n_vertices,
        "loop_weight": cmp.loop_weight,
        "p_full": cmp.p_full,
        "p_reduced": cmp.p_reduced,
        "max_abs_diff": cmp.max_abs_diff,
        "sigma": cmp.prediction.sigma,
        "t_star": cmp.prediction.t_star,
        "p_star": cmp.prediction.p_star,
        "in_asymptotic_range": cmp.prediction.in_asymptotic_range,
    })
    .to_string())
}

/// Graph parameters for the UI: N, d, and the hypothesized weight d/N.
#[wasm_bindgen]
pub fn graph_info(family: &str, a: u32, b: u32) -> Result<String, JsValue> {
    graph_info_impl(family, a, b).map_err(|e| JsValue::from_str(&e))
}

/// One search run; `horizon` = 0 means the default heuristic. Returns the
/// per-step success probabilities with the detected peak.
#[wasm_bindgen]
pub fn evolve_curve(
    family: &str,
    a: u32,
    b: u32,
    loop_weight: f64,
    horizon: u32,
) -> Result<String, JsValue> {
    evolve_curve_impl(family, a, b, loop_weight, horizon).map_err(|e| JsValue::from_str(&e))
}

/// Sweep ℓ = c·d/N over a multiplier grid and run the d/N-optimality check.
/// `first_local_max` picks the peak definition (the cycle wants it).
#[wasm_bindgen]
pub fn sweep_multiplier_grid(
    family: &str,
    a: u32,
    b: u32,
    multipliers: Vec<f64>,
    horizon: u32,
    first_local_max: bool,
) -> Result<String, JsValue> {
    sweep_multiplier_grid_impl(family, a, b, &multipliers, horizon, first_local_max)
        .map_err(|e| JsValue::from_str(&e))
}

/// Full walk vs the exact 4D subspace model on the complete graph, plus the
/// perturbative predictions σ, t*, p*.
#[wasm_bindgen]
pub fn reduced_compare(n: u32, loop_weight: f64, horizon: u32) -> Result<String, JsValue> {
    reduced_compare_impl(n, loop_weight, horizon).map_err(|e| JsValue::from_str(&e))
}
