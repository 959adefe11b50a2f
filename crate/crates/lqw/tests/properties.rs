//! Property tests for builder invariants and operator algebra, plus the
//! derived projection checks tying the 4D reduced model to the full walk.

mod common;

use common::{dense_step, max_component_diff};
use lqw::graphs::{build_complete, Family};
use lqw::reduced::{basis_vectors, project_onto_basis, reduced_initial_state, reduced_operator};
use lqw::WalkState;
use num_complex::Complex64;
use proptest::prelude::*;

fn arbitrary_family() -> impl Strategy<Value = Family> {
    prop_oneof![
        (2usize..40).prop_map(|n| Family::Complete { n }),
        (3usize..60).prop_map(|n| Family::Cycle { n }),
        ((1usize..4), (3usize..7)).prop_map(|(dimension, side)| Family::TorusLattice {
            dimension,
            side
        }),
        (2usize..20).prop_map(|h| Family::CompleteBipartite { n: 2 * h }),
        prop::sample::select(vec![5usize, 13, 17, 29, 37, 41]).prop_map(|q| Family::Paley { q }),
        (2usize..8).prop_map(|order| Family::LatinSquare { order }),
        (4usize..10).prop_map(|m| Family::Triangular { m }),
        ((4usize..9), (1usize..4)).prop_map(|(n, k)| Family::Johnson { n, k: k.min(n - 1) }),
        (1usize..7).prop_map(|dimension| Family::Hypercube { dimension }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn builder_invariants_hold(family in arbitrary_family()) {
        let g = family.build().unwrap();
        prop_assert_eq!(g.coin_dim(), g.degree() + 1);
        for v in 0..g.n_vertices() {
            let ns = g.neighbors(v);
            prop_assert_eq!(ns.len(), g.degree());
            prop_assert!(ns.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(!ns.contains(&v));
            for (i, &u) in ns.iter().enumerate() {
                prop_assert!(g.has_edge(u, v));
                prop_assert_eq!(g.neighbor(u, g.inverse_slot(v, i)), v);
            }
        }
    }

    #[test]
    fn operators_are_involutions_on_random_states(
        raw in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 80),
        loop_weight in 0.0f64..3.0,
        marked in 0usize..16,
    ) {
        let g = Family::TorusLattice { dimension: 2, side: 4 }.build().unwrap();
        let mut amps: Vec<Complex64> =
            raw.iter().map(|&(re, im)| Complex64::new(re, im)).collect();
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        prop_assume!(norm > 1e-3);
        for a in &mut amps {
            *a /= norm;
        }
        let mut s = WalkState::initial(&g, loop_weight);
        s.set_amplitudes(amps.clone());

        let mut twice = s.clone();
        twice.apply_oracle(marked);
        twice.apply_oracle(marked);
        prop_assert!(max_component_diff(twice.amplitudes(), &amps) <= 1e-12);

        let mut twice = s.clone();
        twice.apply_coin();
        twice.apply_coin();
        prop_assert!(max_component_diff(twice.amplitudes(), &amps) <= 1e-12);

        let mut twice = s.clone();
        twice.apply_shift();
        twice.apply_shift();
        prop_assert!(max_component_diff(twice.amplitudes(), &amps) == 0.0);

        let before = s.norm_sqr();
        s.step(marked);
        prop_assert!((s.norm_sqr() - before).abs() <= 1e-12);
    }

    #[test]
    fn edge_list_round_trips_structure(family in arbitrary_family()) {
        let g = family.build().unwrap();
        let text = g.to_edge_list();
        let mut lines = text.lines();
        let header: Vec<&str> = lines.next().unwrap().split(' ').collect();
        prop_assert_eq!(header[0].parse::<usize>().unwrap(), g.n_vertices());
        prop_assert_eq!(header[1].parse::<usize>().unwrap(), g.degree());
        prop_assert_eq!(header[2], g.family_tag());
        let mut count = 0usize;
        for line in lines {
            let mut it = line.split(' ');
            let u: usize = it.next().unwrap().parse().unwrap();
            let v: usize = it.next().unwrap().parse().unwrap();
            prop_assert!(u < v);
            prop_assert!(g.has_edge(u, v));
            count += 1;
        }
        prop_assert_eq!(count, g.n_vertices() * g.degree() / 2);
    }
}

/// The reduced 4×4 operator equals the projection of the dense full-space
/// step operator onto the explicitly constructed basis.
#[test]
fn reduced_operator_is_projection_of_full_operator() {
    for (n, lw) in [(4usize, 1.0), (4, 0.5), (6, 2.0), (8, 0.37)] {
        let g = build_complete(n).unwrap();
        let dense = dense_step(&g, 0, lw);
        let basis = basis_vectors(n, lw).unwrap();
        let reduced = reduced_operator(n, lw).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let mut entry = 0.0;
                for r in 0..g.state_len() {
                    for c in 0..g.state_len() {
                        entry += basis[i][r].re * dense.at(r, c) * basis[j][c].re;
                    }
                }
                let expect = reduced.matrix()[i][j];
                assert!(
                    (entry - expect).abs() <= 1e-12,
                    "N={n} ℓ={lw}: projected[{i}][{j}] = {entry} vs {expect}"
                );
            }
        }
    }
}

/// The walk on the complete graph never leaks out of the 4D subspace, and
/// the projected amplitudes match the reduced evolution at every step.
#[test]
fn complete_graph_walk_stays_in_subspace() {
    for n in [4usize, 8, 16, 32, 64] {
        for lw in [0.5, 1.0, 2.0] {
            let g = build_complete(n).unwrap();
            let basis = basis_vectors(n, lw).unwrap();
            let op = reduced_operator(n, lw).unwrap();
            let mut full = WalkState::initial(&g, lw);
            let mut reduced = reduced_initial_state(n, lw).unwrap();
            for t in 0..=60 {
                let projected = project_onto_basis(full.amplitudes(), &basis);
                let projected_norm: f64 = projected.iter().map(|a| a.norm_sqr()).sum();
                assert!(
                    (projected_norm - 1.0).abs() <= 1e-10,
                    "N={n} ℓ={lw} t={t}: subspace leak, projected norm² {projected_norm}"
                );
                for (p, r) in projected.iter().zip(&reduced.amplitudes) {
                    assert!(
                        (p - r).norm() <= 1e-9,
                        "N={n} ℓ={lw} t={t}: projected {p} vs reduced {r}"
                    );
                }
                full.step(0);
                reduced = op.apply(&reduced);
            }
        }
    }
}
