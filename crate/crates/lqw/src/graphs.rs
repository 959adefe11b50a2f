//! Regular graph builders for the families used in lackadaisical-walk search
//! experiments, plus a brute-force strong-regularity checker.
//!
//! Every builder produces an immutable [`Graph`]: a loopless d-regular graph
//! with per-vertex sorted adjacency and a precomputed inverse-slot table used
//! by the flip-flop shift. Vertex labelings are deterministic and canonical
//! (lexicographic subsets, row-major grids, integer bit strings) so that runs
//! are bit-reproducible. The marked vertex is vertex 0 by convention; all
//! families here are vertex transitive, so the choice is without loss of
//! generality.

use std::fmt;

/// Default cap on the walk state size N·(d+1). Builders reject anything
/// larger unless an explicit cap is given via [`Family::build_with_cap`].
pub const DEFAULT_AMPLITUDE_CAP: usize = 1 << 24;

/// Errors from graph construction and validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// A size parameter is below the family's minimum (e.g. complete(1)).
    InvalidSize(String),
    /// A non-size parameter is out of range (e.g. Johnson k ∉ [1, n−1]).
    InvalidParameter(String),
    /// Paley modulus is not prime. Prime powers are deliberately unsupported.
    UnsupportedModulus(usize),
    /// Paley modulus q ≢ 1 (mod 4): −1 is a non-residue, so "difference is a
    /// quadratic residue" would not be a symmetric relation.
    AsymmetricAdjacency(usize),
    /// The walk state N·(d+1) would exceed the amplitude cap.
    TooLarge { amplitudes: u128, cap: usize },
    /// A graph handed to a validator is not regular.
    NotRegular { vertex: usize, expected: usize, found: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::InvalidSize(msg) => write!(f, "invalid size: {msg}"),
            GraphError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            GraphError::UnsupportedModulus(q) => {
                write!(f, "unsupported modulus: {q} is not prime")
            }
            GraphError::AsymmetricAdjacency(q) => {
                write!(f, "asymmetric adjacency: {q} ≢ 1 (mod 4)")
            }
            GraphError::TooLarge { amplitudes, cap } => {
                write!(f, "state too large: {amplitudes} amplitudes exceeds cap {cap}")
            }
            GraphError::NotRegular { vertex, expected, found } => {
                write!(f, "not regular: vertex {vertex} has degree {found}, expected {expected}")
            }
        }
    }
}

impl std::error::Error for GraphError {}

/// A graph family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Complete graph K_n.
    Complete { n: usize },
    /// Cycle C_n.
    Cycle { n: usize },
    /// D-dimensional periodic cubic lattice with `side` vertices per axis.
    TorusLattice { dimension: usize, side: usize },
    /// Regular complete bipartite graph K_{n/2,n/2}.
    CompleteBipartite { n: usize },
    /// Paley graph on a prime q ≡ 1 (mod 4).
    Paley { q: usize },
    /// Latin square graph of the cyclic square of the given order.
    LatinSquare { order: usize },
    /// Triangular graph T_m, the line graph of K_m.
    Triangular { m: usize },
    /// Johnson graph J(n,k).
    Johnson { n: usize, k: usize },
    /// n-dimensional hypercube.
    Hypercube { dimension: usize },
}

impl Family {
    /// Short descriptive label used in output files.
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Complete { .. } => "complete",
            Family::Cycle { .. } => "cycle",
            Family::TorusLattice { .. } => "torus",
            Family::CompleteBipartite { .. } => "bipartite",
            Family::Paley { .. } => "paley",
            Family::LatinSquare { .. } => "latin",
            Family::Triangular { .. } => "triangular",
            Family::Johnson { .. } => "johnson",
            Family::Hypercube { .. } => "hypercube",
        }
    }

    /// Build the graph under the default amplitude cap.
    pub fn build(&self) -> Result<Graph, GraphError> {
        self.build_with_cap(DEFAULT_AMPLITUDE_CAP)
    }

    /// Build the graph, rejecting anything with N·(d+1) > `cap`.
    pub fn build_with_cap(&self, cap: usize) -> Result<Graph, GraphError> {
        let (n, degree) = self.dimensions()?;
        let amplitudes = n as u128 * (degree as u128 + 1);
        if amplitudes > cap as u128 {
            return Err(GraphError::TooLarge { amplitudes, cap });
        }
        let adjacency = self.neighbor_lists(n);
        Graph::from_neighbor_lists(n, degree, adjacency, *self)
    }

    /// Vertex count and loopless degree, after validating the parameters.
    /// No allocation happens before this check passes.
    pub fn dimensions(&self) -> Result<(usize, usize), GraphError> {
        match *self {
            Family::Complete { n } => {
                if n < 2 {
                    return Err(GraphError::InvalidSize(format!("complete graph needs n ≥ 2, got {n}")));
                }
                Ok((n, n - 1))
            }
            Family::Cycle { n } => {
                if n < 3 {
                    return Err(GraphError::InvalidSize(format!("cycle needs n ≥ 3, got {n}")));
                }
                Ok((n, 2))
            }
            Family::TorusLattice { dimension, side } => {
                if dimension < 1 {
                    return Err(GraphError::InvalidSize("torus lattice needs dimension ≥ 1".into()));
                }
                // side = 2 would collapse the +1 and −1 neighbors into one,
                // breaking d = 2D.
                if side < 3 {
                    return Err(GraphError::InvalidSize(format!("torus lattice needs side ≥ 3, got {side}")));
                }
                let n = checked_pow(side, dimension)?;
                Ok((n, 2 * dimension))
            }
            Family::CompleteBipartite { n } => {
                if n < 4 || n % 2 != 0 {
                    return Err(GraphError::InvalidSize(format!(
                        "regular complete bipartite graph needs even n ≥ 4, got {n}"
                    )));
                }
                Ok((n, n / 2))
            }
            Family::Paley { q } => {
                if !is_prime(q) {
                    return Err(GraphError::UnsupportedModulus(q));
                }
                if q % 4 != 1 {
                    return Err(GraphError::AsymmetricAdjacency(q));
                }
                Ok((q, (q - 1) / 2))
            }
            Family::LatinSquare { order } => {
                if order < 2 {
                    return Err(GraphError::InvalidSize(format!("Latin square needs order ≥ 2, got {order}")));
                }
                let n = checked_mul(order, order)?;
                Ok((n, 3 * (order - 1)))
            }
            Family::Triangular { m } => {
                if m < 4 {
                    return Err(GraphError::InvalidSize(format!("triangular graph needs m ≥ 4, got {m}")));
                }
                Ok((m * (m - 1) / 2, 2 * (m - 2)))
            }
            Family::Johnson { n, k } => {
                if k < 1 || k > n.saturating_sub(1) {
                    return Err(GraphError::InvalidParameter(format!(
                        "Johnson graph needs 1 ≤ k ≤ n−1, got J({n},{k})"
                    )));
                }
                let verts = binomial(n, k)?;
                Ok((verts, k * (n - k)))
            }
            Family::Hypercube { dimension } => {
                if dimension < 1 {
                    return Err(GraphError::InvalidSize("hypercube needs dimension ≥ 1".into()));
                }
                let n = checked_pow(2, dimension)?;
                Ok((n, dimension))
            }
        }
    }

    /// Raw neighbor lists. Parameters must already have passed `dimensions`.
    fn neighbor_lists(&self, n: usize) -> Vec<Vec<usize>> {
        match *self {
            Family::Complete { .. } => {
                (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect()
            }
            Family::Cycle { .. } => (0..n)
                .map(|v| {
                    let mut ns = vec![(v + n - 1) % n, (v + 1) % n];
                    ns.sort_unstable();
                    ns.dedup();
                    ns
                })
                .collect(),
            Family::TorusLattice { dimension, side } => {
                // Vertex index = base-`side` digits, coordinate 0 most significant.
                let mut adj = Vec::with_capacity(n);
                let mut strides = vec![1usize; dimension];
                for i in (0..dimension.saturating_sub(1)).rev() {
                    strides[i] = strides[i + 1] * side;
                }
                for v in 0..n {
                    let mut ns = Vec::with_capacity(2 * dimension);
                    for &stride in &strides {
                        let coord = (v / stride) % side;
                        let base = v - coord * stride;
                        ns.push(base + (coord + 1) % side * stride);
                        ns.push(base + (coord + side - 1) % side * stride);
                    }
                    ns.sort_unstable();
                    adj.push(ns);
                }
                adj
            }
            Family::CompleteBipartite { .. } => {
                let half = n / 2;
                (0..n)
                    .map(|v| if v < half { (half..n).collect() } else { (0..half).collect() })
                    .collect()
            }
            Family::Paley { q } => {
                let mut residue = vec![false; q];
                for x in 1..q {
                    residue[x * x % q] = true;
                }
                (0..q)
                    .map(|v| {
                        (0..q).filter(|&u| u != v && residue[(u + q - v) % q]).collect()
                    })
                    .collect()
            }
            Family::LatinSquare { order } => {
                // Cell (r,c) at index r·order + c carries symbol (r+c) mod order.
                (0..n)
                    .map(|v| {
                        let (r, c) = (v / order, v % order);
                        (0..n)
                            .filter(|&u| {
                                let (r2, c2) = (u / order, u % order);
                                u != v && (r2 == r || c2 == c || (r2 + c2) % order == (r + c) % order)
                            })
                            .collect()
                    })
                    .collect()
            }
            Family::Triangular { m } => {
                let verts = k_subsets(m, 2);
                verts
                    .iter()
                    .map(|s| {
                        verts
                            .iter()
                            .enumerate()
                            .filter(|(_, t)| shares_exactly_one(s, t))
                            .map(|(i, _)| i)
                            .collect()
                    })
                    .collect()
            }
            Family::Johnson { n: syms, k } => {
                let verts = k_subsets(syms, k);
                let mut adj = Vec::with_capacity(verts.len());
                for s in &verts {
                    let mut ns = Vec::with_capacity(k * (syms - k));
                    let member = |x: usize| s.binary_search(&x).is_ok();
                    for pos in 0..s.len() {
                        for inn in 0..syms {
                            if member(inn) {
                                continue;
                            }
                            let mut t = s.clone();
                            t.remove(pos);
                            let at = t.binary_search(&inn).unwrap_err();
                            t.insert(at, inn);
                            ns.push(subset_rank(syms, &t));
                        }
                    }
                    ns.sort_unstable();
                    adj.push(ns);
                }
                adj
            }
            Family::Hypercube { dimension } => (0..n)
                .map(|v| {
                    let mut ns: Vec<usize> = (0..dimension).map(|b| v ^ (1 << b)).collect();
                    ns.sort_unstable();
                    ns
                })
                .collect(),
        }
    }
}

/// Immutable loopless d-regular graph with the slot tables the walk needs.
///
/// Coin slot layout at vertex v: slots `0..d` point to the sorted neighbors
/// of v, slot `d` is the weighted self-loop. The `inverse_slot` table maps
/// slot i at u (pointing to v) to the slot j at v with `neighbor(v, j) == u`,
/// which is exactly the pairing the flip-flop shift swaps.
#[derive(Debug, Clone)]
pub struct Graph {
    n_vertices: usize,
    degree: usize,
    adjacency: Vec<usize>,
    inverse_slot: Vec<usize>,
    family: Family,
}

impl Graph {
    /// Validate neighbor lists and assemble the flat tables.
    ///
    /// Checks exact d-regularity, sortedness, looplessness, and symmetry;
    /// any violation is a bug in a builder and panics via `expect` only for
    /// conditions the builders make impossible, otherwise returns an error.
    fn from_neighbor_lists(
        n: usize,
        degree: usize,
        lists: Vec<Vec<usize>>,
        family: Family,
    ) -> Result<Graph, GraphError> {
        debug_assert_eq!(lists.len(), n);
        let mut adjacency = Vec::with_capacity(n * degree);
        for (v, ns) in lists.iter().enumerate() {
            if ns.len() != degree {
                return Err(GraphError::NotRegular {
                    vertex: v,
                    expected: degree,
                    found: ns.len(),
                });
            }
            debug_assert!(ns.windows(2).all(|w| w[0] < w[1]), "unsorted adjacency at {v}");
            debug_assert!(!ns.contains(&v), "self-loop in builder output at {v}");
            adjacency.extend_from_slice(ns);
        }
        // Inverse slots via binary search in the (sorted) partner list; the
        // search failing would mean an asymmetric builder output.
        let mut inverse_slot = vec![0usize; n * degree];
        for v in 0..n {
            for i in 0..degree {
                let u = adjacency[v * degree + i];
                let j = lists[u]
                    .binary_search(&v)
                    .expect("builder produced asymmetric adjacency");
                inverse_slot[v * degree + i] = j;
            }
        }
        Ok(Graph { n_vertices: n, degree, adjacency, inverse_slot, family })
    }

    /// Number of vertices N.
    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Loopless degree d.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coin dimension d + 1 (the extra slot is the self-loop).
    pub fn coin_dim(&self) -> usize {
        self.degree + 1
    }

    /// Walk state length N·(d+1).
    pub fn state_len(&self) -> usize {
        self.n_vertices * self.coin_dim()
    }

    /// The family this graph was built from.
    pub fn family(&self) -> Family {
        self.family
    }

    /// Short family label.
    pub fn family_tag(&self) -> &'static str {
        self.family.tag()
    }

    /// Sorted neighbors of v.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v * self.degree..(v + 1) * self.degree]
    }

    /// Neighbor pointed to by edge slot i at v.
    pub fn neighbor(&self, v: usize, slot: usize) -> usize {
        debug_assert!(slot < self.degree);
        self.adjacency[v * self.degree + slot]
    }

    /// Slot j at `neighbor(v, slot)` that points back to v.
    pub fn inverse_slot(&self, v: usize, slot: usize) -> usize {
        debug_assert!(slot < self.degree);
        self.inverse_slot[v * self.degree + slot]
    }

    /// True if u and v are adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Undirected edges (u, v) with u < v in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n_vertices).flat_map(move |u| {
            self.neighbors(u).iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    /// Plain-text edge list: first line `N d family_tag`, then one `u v`
    /// pair per undirected edge, ascending.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n_vertices, self.degree, self.family_tag());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Strongly regular graph parameters (N, k, λ, μ).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// The standard feasibility identity k(k − λ − 1) = (n − k − 1)μ.
    pub fn satisfies_identity(&self) -> bool {
        self.k * (self.k - self.lambda - 1) == (self.n - self.k - 1) * self.mu
    }
}

/// Outcome of the brute-force strong-regularity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SrgOutcome {
    StronglyRegular(SrgParams),
    /// The first vertex pair whose common-neighbor count disagrees with the
    /// count established by the earlier pairs of the same adjacency class.
    NotStronglyRegular { u: usize, v: usize, adjacent: bool, count: usize, expected: usize },
}

impl SrgOutcome {
    pub fn params(&self) -> Option<SrgParams> {
        match self {
            SrgOutcome::StronglyRegular(p) => Some(*p),
            SrgOutcome::NotStronglyRegular { .. } => None,
        }
    }
}

/// Exhaustively count common neighbors over all vertex pairs and decide
/// whether the graph is strongly regular.
///
/// Pairs are scanned in ascending (u, v) order and the first violation is
/// reported. A graph with no non-adjacent pairs (complete graph) is accepted
/// with μ = 0 by convention.
pub fn validate_strongly_regular(g: &Graph) -> Result<SrgOutcome, GraphError> {
    let n = g.n_vertices();
    let words = n.div_ceil(64);
    let mut rows = vec![0u64; n * words];
    for v in 0..n {
        for &u in g.neighbors(v) {
            rows[v * words + u / 64] |= 1 << (u % 64);
        }
        // Regularity is enforced at construction; re-check cheaply anyway
        // since this validator also serves as the independent oracle.
        let found = g.neighbors(v).len();
        if found != g.degree() {
            return Err(GraphError::NotRegular { vertex: v, expected: g.degree(), found });
        }
    }
    let common = |u: usize, v: usize| -> usize {
        let (a, b) = (&rows[u * words..(u + 1) * words], &rows[v * words..(v + 1) * words]);
        a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
    };
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for u in 0..n {
        for v in (u + 1)..n {
            let c = common(u, v);
            let class = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            match *class {
                None => *class = Some(c),
                Some(expected) if expected != c => {
                    return Ok(SrgOutcome::NotStronglyRegular {
                        u,
                        v,
                        adjacent: g.has_edge(u, v),
                        count: c,
                        expected,
                    });
                }
                Some(_) => {}
            }
        }
    }
    Ok(SrgOutcome::StronglyRegular(SrgParams {
        n,
        k: g.degree(),
        lambda: lambda.unwrap_or(0),
        mu: mu.unwrap_or(0),
    }))
}

/// Complete graph K_n (n ≥ 2).
pub fn build_complete(n: usize) -> Result<Graph, GraphError> {
    Family::Complete { n }.build()
}

/// Cycle C_n (n ≥ 3).
pub fn build_cycle(n: usize) -> Result<Graph, GraphError> {
    Family::Cycle { n }.build()
}

/// D-dimensional periodic cubic lattice, side ≥ 3 vertices per axis.
pub fn build_torus_lattice(dimension: usize, side: usize) -> Result<Graph, GraphError> {
    Family::TorusLattice { dimension, side }.build()
}

/// Regular complete bipartite graph on an even number n ≥ 4 of vertices.
pub fn build_complete_bipartite_regular(n: usize) -> Result<Graph, GraphError> {
    Family::CompleteBipartite { n }.build()
}

/// Paley graph on a prime q ≡ 1 (mod 4).
pub fn build_paley(q: usize) -> Result<Graph, GraphError> {
    Family::Paley { q }.build()
}

/// Latin square graph of the cyclic square (r + c mod order), order ≥ 2.
pub fn build_latin_square(order: usize) -> Result<Graph, GraphError> {
    Family::LatinSquare { order }.build()
}

/// Triangular graph T_m (m ≥ 4), the line graph of K_m.
pub fn build_triangular(m: usize) -> Result<Graph, GraphError> {
    Family::Triangular { m }.build()
}

/// Johnson graph J(n,k), 1 ≤ k ≤ n−1.
pub fn build_johnson(n: usize, k: usize) -> Result<Graph, GraphError> {
    Family::Johnson { n, k }.build()
}

/// n-dimensional hypercube (n ≥ 1).
pub fn build_hypercube(dimension: usize) -> Result<Graph, GraphError> {
    Family::Hypercube { dimension }.build()
}

/// All k-element subsets of {0..n−1} in lexicographic order.
fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = (0..k).collect::<Vec<_>>();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Lexicographic rank of a sorted k-subset of {0..n−1}, matching the
/// enumeration order of [`k_subsets`].
fn subset_rank(n: usize, subset: &[usize]) -> usize {
    let k = subset.len();
    let mut rank = 0usize;
    let mut prev = 0usize;
    for (i, &x) in subset.iter().enumerate() {
        for skipped in prev..x {
            // counts combinations starting with `skipped` at position i
            rank += binomial_unchecked(n - skipped - 1, k - i - 1);
        }
        prev = x + 1;
    }
    rank
}

fn shares_exactly_one(a: &[usize], b: &[usize]) -> bool {
    if a == b {
        return false;
    }
    let mut shared = 0;
    for x in a {
        if b.contains(x) {
            shared += 1;
        }
    }
    shared == 1
}

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    if q.is_multiple_of(2) {
        return q == 2;
    }
    let mut f = 3;
    while f * f <= q {
        if q.is_multiple_of(f) {
            return false;
        }
        f += 2;
    }
    true
}

/// C(n, k) with overflow detection; oversized results become `TooLarge`.
fn binomial(n: usize, k: usize) -> Result<usize, GraphError> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return Err(GraphError::TooLarge { amplitudes: acc, cap: DEFAULT_AMPLITUDE_CAP });
        }
    }
    Ok(acc as usize)
}

/// C(n, k) for internal ranking where the full enumeration already fit in memory.
fn binomial_unchecked(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

fn checked_pow(base: usize, exp: usize) -> Result<usize, GraphError> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc > usize::MAX as u128 {
            return Err(GraphError::TooLarge { amplitudes: acc, cap: DEFAULT_AMPLITUDE_CAP });
        }
    }
    Ok(acc as usize)
}

fn checked_mul(a: usize, b: usize) -> Result<usize, GraphError> {
    a.checked_mul(b).ok_or(GraphError::TooLarge {
        amplitudes: a as u128 * b as u128,
        cap: DEFAULT_AMPLITUDE_CAP,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive invariant scan: symmetry, regularity, sortedness, no
    /// self-entries, inverse-slot round trip.
    fn assert_graph_invariants(g: &Graph) {
        for v in 0..g.n_vertices() {
            let ns = g.neighbors(v);
            assert_eq!(ns.len(), g.degree(), "regularity at {v}");
            assert!(ns.windows(2).all(|w| w[0] < w[1]), "sorted distinct at {v}");
            assert!(!ns.contains(&v), "self-entry at {v}");
            for (i, &u) in ns.iter().enumerate() {
                assert!(g.has_edge(u, v), "symmetry {v}->{u}");
                let j = g.inverse_slot(v, i);
                assert_eq!(g.neighbor(u, j), v, "inverse slot round trip {v} slot {i}");
            }
        }
    }

    #[test]
    fn complete_basics() {
        let g = build_complete(6).unwrap();
        assert_eq!(g.n_vertices(), 6);
        assert_eq!(g.degree(), 5);
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(g.has_edge(u, v), u != v);
            }
        }
        assert_graph_invariants(&g);

        let edge = build_complete(2).unwrap();
        assert_eq!(edge.degree(), 1);
        assert_eq!(edge.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn complete_large_invariants() {
        let g = build_complete(1024).unwrap();
        assert_eq!(g.degree(), 1023);
        assert_graph_invariants(&g);
    }

    #[test]
    fn complete_too_small() {
        assert!(matches!(build_complete(1), Err(GraphError::InvalidSize(_))));
        assert!(matches!(build_complete(0), Err(GraphError::InvalidSize(_))));
    }

    /// BFS 2-coloring; Some(colors) iff the graph is bipartite.
    fn two_color(g: &Graph) -> Option<Vec<u8>> {
        let n = g.n_vertices();
        let mut color = vec![u8::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &u in g.neighbors(v) {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    #[test]
    fn cycle_basics() {
        let g = build_cycle(4).unwrap();
        assert_eq!((g.n_vertices(), g.degree()), (4, 2));
        assert_graph_invariants(&g);

        // C_3 is K_3 with identical labeling.
        let c3 = build_cycle(3).unwrap();
        let k3 = build_complete(3).unwrap();
        for v in 0..3 {
            assert_eq!(c3.neighbors(v), k3.neighbors(v));
        }

        assert!(matches!(build_cycle(2), Err(GraphError::InvalidSize(_))));
    }

    #[test]
    fn cycle_bipartite_iff_even() {
        let even = build_cycle(1024).unwrap();
        assert_graph_invariants(&even);
        assert!(two_color(&even).is_some());
        let odd = build_cycle(1023).unwrap();
        assert!(two_color(&odd).is_none());
    }

    #[test]
    fn torus_basics() {
        let g = build_torus_lattice(3, 3).unwrap();
        assert_eq!((g.n_vertices(), g.degree()), (27, 6));
        assert_graph_invariants(&g);

        let big = build_torus_lattice(2, 32).unwrap();
        assert_eq!((big.n_vertices(), big.degree()), (1024, 4));
        assert_graph_invariants(&big);

        assert!(matches!(build_torus_lattice(2, 2), Err(GraphError::InvalidSize(_))));
        assert!(matches!(build_torus_lattice(0, 5), Err(GraphError::InvalidSize(_))));
    }

    #[test]
    fn torus_1d_is_cycle() {
        for n in [3, 5, 8, 17] {
            let t = build_torus_lattice(1, n).unwrap();
            let c = build_cycle(n).unwrap();
            for v in 0..n {
                assert_eq!(t.neighbors(v), c.neighbors(v));
            }
        }
    }

    #[test]
    fn bipartite_basics() {
        let g = build_complete_bipartite_regular(8).unwrap();
        assert_eq!(g.degree(), 4);
        assert_graph_invariants(&g);
        assert_eq!(
            validate_strongly_regular(&g).unwrap().params(),
            Some(SrgParams { n: 8, k: 4, lambda: 0, mu: 4 })
        );

        // K_{2,2} is a 4-cycle under the relabeling 0,2,1,3.
        let k22 = build_complete_bipartite_regular(4).unwrap();
        let c4 = build_cycle(4).unwrap();
        let relabel = [0usize, 2, 1, 3];
        for v in 0..4 {
            let mut mapped: Vec<usize> = k22.neighbors(v).iter().map(|&u| relabel[u]).collect();
            mapped.sort_unstable();
            assert_eq!(mapped.as_slice(), c4.neighbors(relabel[v]));
        }

        assert!(matches!(
            build_complete_bipartite_regular(5),
            Err(GraphError::InvalidSize(_))
        ));
    }

    #[test]
    fn bipartite_1024_srg() {
        let g = build_complete_bipartite_regular(1024).unwrap();
        assert_eq!(
            validate_strongly_regular(&g).unwrap().params(),
            Some(SrgParams { n: 1024, k: 512, lambda: 0, mu: 512 })
        );
    }

    #[test]
    fn paley_basics() {
        let g = build_paley(13).unwrap();
        assert_eq!(g.degree(), 6);
        assert_graph_invariants(&g);
        assert_eq!(
            validate_strongly_regular(&g).unwrap().params(),
            Some(SrgParams { n: 13, k: 6, lambda: 2, mu: 3 })
        );

        // Quadratic residues mod 5 are {1, 4} = ±1, so Paley(5) is C_5.
        let p5 = build_paley(5).unwrap();
        let c5 = build_cycle(5).unwrap();
        for v in 0..5 {
            assert_eq!(p5.neighbors(v), c5.neighbors(v));
        }

        assert_eq!(build_paley(9).unwrap_err(), GraphError::UnsupportedModulus(9));
        assert_eq!(build_paley(4).unwrap_err(), GraphError::UnsupportedModulus(4));
        assert_eq!(build_paley(7).unwrap_err(), GraphError::AsymmetricAdjacency(7));
        assert_eq!(build_paley(2).unwrap_err(), GraphError::AsymmetricAdjacency(2));
    }

    #[test]
    fn paley_formula_sweep() {
        // (q−1)/2, (q−5)/4, (q−1)/4 for every prime q ≡ 1 (mod 4) up to 101.
        for q in (5..=101).filter(|&q| is_prime(q) && q % 4 == 1) {
            let g = build_paley(q).unwrap();
            assert_graph_invariants(&g);
            let p = validate_strongly_regular(&g).unwrap().params().unwrap();
            assert_eq!(p, SrgParams { n: q, k: (q - 1) / 2, lambda: (q - 5) / 4, mu: (q - 1) / 4 });
            assert!(p.satisfies_identity());
        }
    }

    #[test]
    fn latin_basics() {
        let g = build_latin_square(3).unwrap();
        assert_eq!(
            validate_strongly_regular(&g).unwrap().params(),
            Some(SrgParams { n: 9, k: 6, lambda: 3, mu: 6 })
        );
        assert_graph_invariants(&g);

        // Order 2 collapses to K_4: every pair shares a row, column, or symbol.
        let l2 = build_latin_square(2).unwrap();
        let k4 = build_complete(4).unwrap();
        for v in 0..4 {
            assert_eq!(l2.neighbors(v), k4.neighbors(v));
        }

        assert!(matches!(build_latin_square(1), Err(GraphError::InvalidSize(_))));
    }

    #[test]
    fn latin_formula_sweep() {
        // k = 3(order−1), λ = order, μ = 6 for order ≥ 4.
        for order in 4..=8 {
            let g = build_latin_square(order).unwrap();
            assert_graph_invariants(&g);
            let p = validate_strongly_regular(&g).unwrap().params().unwrap();
            assert_eq!(
                p,
                SrgParams { n: order * order, k: 3 * (order - 1), lambda: order, mu: 6 }
            );
            assert!(p.satisfies_identity());
        }
    }

    #[test]
    fn triangular_basics() {
        let g = build_triangular(4).unwrap();
        assert_eq!(
            validate_strongly_regular(&g).unwrap().params(),
            Some(SrgParams { n: 6, k: 4, lambda: 2, mu: 4 })
        );
        assert_graph_invariants(&g);
        assert!(matches!(build_triangular(3), Err(GraphError::InvalidSize(_))));
    }

    #[test]
    fn triangular_equals_johnson_m_2() {
        for m in 4..=12 {
            let t = build_triangular(m).unwrap();
            let j = build_johnson(m, 2).unwrap();
            assert_eq!(t.n_vertices(), j.n_vertices());
            for v in 0..t.n_vertices() {
                assert_eq!(t.neighbors(v), j.neighbors(v), "T_{m} vs J({m},2) at {v}");
            }
        }
    }

    #[test]
    fn johnson_basics() {
        let g = build_johnson(5, 3).unwrap();
        assert_eq!((g.n_vertices(), g.degree()), (10, 6));
        assert_graph_invariants(&g);

        let big = build_johnson(12, 4).unwrap();
        assert_eq!((big.n_vertices(), big.degree()), (495, 32));

        // J(n,1) is the complete graph with identical labeling.
        for n in 2..=7 {
            let j = build_johnson(n, 1).unwrap();
            let k = build_complete(n).unwrap();
            for v in 0..n {
                assert_eq!(j.neighbors(v), k.neighbors(v));
            }
        }

        assert!(matches!(build_johnson(5, 0), Err(GraphError::InvalidParameter(_))));
        assert!(matches!(build_johnson(5, 5), Err(GraphError::InvalidParameter(_))));
    }

    #[test]
    fn johnson_dimension_sweep() {
        fn choose(n: usize, k: usize) -> usize {
            binomial_unchecked(n, k)
        }
        for n in 4..=12 {
            for k in 1..=n / 2 {
                let g = build_johnson(n, k).unwrap();
                assert_eq!(g.n_vertices(), choose(n, k), "N of J({n},{k})");
                assert_eq!(g.degree(), k * (n - k), "d of J({n},{k})");
                assert_graph_invariants(&g);
            }
        }
    }

    #[test]
    fn subset_rank_matches_enumeration() {
        for (n, k) in [(5, 2), (6, 3), (8, 4), (9, 1)] {
            for (i, s) in k_subsets(n, k).iter().enumerate() {
                assert_eq!(subset_rank(n, s), i);
            }
        }
    }

    #[test]
    fn hypercube_basics() {
        let g = build_hypercube(4).unwrap();
        assert_eq!((g.n_vertices(), g.degree()), (16, 4));
        assert_graph_invariants(&g);

        let edge = build_hypercube(1).unwrap();
        assert_eq!((edge.n_vertices(), edge.degree()), (2, 1));

        let big = build_hypercube(10).unwrap();
        assert_eq!((big.n_vertices(), big.degree()), (1024, 10));
        assert_graph_invariants(&big);
    }

    #[test]
    fn cycle_not_strongly_regular() {
        // In C_6 adjacent pairs share 0 neighbors but non-adjacent pairs
        // share 0 or 1, so the μ class is non-uniform.
        let g = build_cycle(6).unwrap();
        match validate_strongly_regular(&g).unwrap() {
            SrgOutcome::NotStronglyRegular { adjacent, .. } => assert!(!adjacent),
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn size_cap_applies() {
        assert!(matches!(build_complete(5000), Err(GraphError::TooLarge { .. })));
        assert!(matches!(build_johnson(24, 12), Err(GraphError::TooLarge { .. })));
        // Overridable: a small cap rejects what the default accepts.
        assert!(matches!(
            Family::Complete { n: 64 }.build_with_cap(100),
            Err(GraphError::TooLarge { .. })
        ));
        assert!(Family::Complete { n: 64 }.build_with_cap(64 * 64).is_ok());
    }

    #[test]
    fn edge_list_format() {
        let g = build_cycle(4).unwrap();
        assert_eq!(g.to_edge_list(), "4 2 cycle\n0 1\n0 3\n1 2\n2 3\n");
    }

    #[test]
    fn srg_identity_for_accepted_graphs() {
        let instances: Vec<Graph> = vec![
            build_complete_bipartite_regular(16).unwrap(),
            build_paley(17).unwrap(),
            build_latin_square(5).unwrap(),
            build_triangular(7).unwrap(),
        ];
        for g in &instances {
            let p = validate_strongly_regular(g).unwrap().params().unwrap();
            assert!(p.satisfies_identity(), "identity fails for {}", g.family_tag());
        }
    }
}
