//! Seeded random instance generators for tests and benchmarks.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::apps::PolymatrixGame;
use crate::graph::{UndirectedGraph, WeightedDigraph};
use crate::instance::{Instance, InstanceBuilder, Kind};
use crate::matrix::Matrix2x2;
use crate::rational::{int, Rational};
use crate::reductions::Hypergraph3;

/// Rational in `[lo, hi]` with denominator 1 to 4.
pub fn rational<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Rational {
    let q = rng.gen_range(1..=4);
    Rational::new(rng.gen_range(lo * q..=hi * q).into(), q.into())
}

/// Matrix with entries drawn by [`rational`] from `[-5, 5]`.
pub fn matrix<R: Rng>(rng: &mut R) -> Matrix2x2 {
    Matrix2x2::new(
        rational(rng, -5, 5),
        rational(rng, -5, 5),
        rational(rng, -5, 5),
        rational(rng, -5, 5),
    )
}

/// Small integer matrix; these hit ties and equalities often.
pub fn small_int_matrix<R: Rng>(rng: &mut R, bound: i64) -> Matrix2x2 {
    let mut e = || rng.gen_range(-bound..=bound);
    Matrix2x2::from_ints([[e(), e()], [e(), e()]])
}

/// Random matrix with property (a): a violating draw has its diagonal and
/// off-diagonal pairs exchanged, which keeps entries in range.
pub fn matrix_a<R: Rng>(rng: &mut R) -> Matrix2x2 {
    let m = matrix(rng);
    if m.property_a() {
        m
    } else {
        Matrix2x2::new(m.m12, m.m11, m.m22, m.m21)
    }
}

/// Random matrix with property (b): the largest entry is moved to `m11`.
pub fn matrix_b<R: Rng>(rng: &mut R) -> Matrix2x2 {
    let m = matrix(rng);
    let mut e = [m.m11, m.m12, m.m21, m.m22];
    let top = (0..4).max_by(|&i, &j| e[i].cmp(&e[j])).expect("four entries");
    e.swap(0, top);
    let [a, b, c, d] = e;
    Matrix2x2::new(a, b, c, d)
}

/// Random matrix with property (c).
pub fn matrix_c<R: Rng>(rng: &mut R) -> Matrix2x2 {
    matrix_b(rng).flipped()
}

/// Rejection-samples a small integer matrix satisfying `pred`.
pub fn matrix_where<R: Rng>(rng: &mut R, bound: i64, pred: impl Fn(&Matrix2x2) -> bool) -> Matrix2x2 {
    loop {
        let m = small_int_matrix(rng, bound);
        if pred(&m) {
            return m;
        }
    }
}

fn only_b(m: &Matrix2x2) -> bool {
    m.property_b() && !m.property_a() && !m.property_c()
}

/// `(M, R)` for the max-cut reduction with an R of property (c) but not (b),
/// mirrored with probability 1/2.
pub fn bc_pair<R: Rng>(rng: &mut R) -> (Matrix2x2, Matrix2x2) {
    let m = matrix_where(rng, 5, only_b);
    let r = matrix_where(rng, 5, |r| r.property_c() && !r.property_b());
    if rng.gen_bool(0.5) {
        (m.flipped(), r.flipped())
    } else {
        (m, r)
    }
}

/// `(M, R)` for the max-cut reduction with an R of property (a) only,
/// mirrored with probability 1/2.
pub fn ba_pair<R: Rng>(rng: &mut R) -> (Matrix2x2, Matrix2x2) {
    let m = matrix_where(rng, 5, only_b);
    let r = matrix_where(rng, 5, |r| r.property_a() && !r.property_b() && !r.property_c());
    if rng.gen_bool(0.5) {
        (m.flipped(), r)
    } else {
        (m, r)
    }
}

/// Matrix meeting the hypergraph reduction's hypothesis.
pub fn hypergraph_matrix<R: Rng>(rng: &mut R) -> Matrix2x2 {
    matrix_where(rng, 5, |m| {
        !m.property_a() && (&m.m11).max(&m.m22) < (&m.m12).max(&m.m21)
    })
}

/// Instance on `n` vertices `v0..`; each ordered pair (or unordered pair,
/// for oriented and symmetric kinds) becomes an arc with probability `p`,
/// with cost in `[0, 5]` and a matrix drawn uniformly from `family`.
pub fn instance<R: Rng>(rng: &mut R, kind: Kind, n: usize, p: f64, family: &[Matrix2x2]) -> Instance {
    let mut b = InstanceBuilder::new(kind);
    let ids: Vec<usize> = family
        .iter()
        .enumerate()
        .map(|(i, m)| b.matrix(format!("F{i}"), m.clone()))
        .collect();
    for i in 0..n {
        b.vertex(format!("v{i}")).expect("fresh id");
    }
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let pair_once = kind != Kind::General;
            if pair_once && u > v {
                continue;
            }
            if !rng.gen_bool(p) {
                continue;
            }
            let (t, h) = if kind == Kind::Oriented && rng.gen_bool(0.5) {
                (v, u)
            } else {
                (u, v)
            };
            let m = ids[rng.gen_range(0..ids.len())];
            b.arc(t, h, rational(rng, 0, 5), m);
            if kind == Kind::Symmetric {
                let m2 = ids[rng.gen_range(0..ids.len())];
                b.arc(h, t, rational(rng, 0, 5), m2);
            }
        }
    }
    b.build().expect("generated instance is valid")
}

/// Erdős–Rényi graph on `v0..v{n-1}`.
pub fn graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> UndirectedGraph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    UndirectedGraph::with_n(n, &edges).expect("simple graph")
}

/// Digraph with each ordered pair an arc with probability `p`; weights are
/// integers in `[0, max_weight]`, or all 1 when `max_weight` is 1.
pub fn digraph<R: Rng>(rng: &mut R, n: usize, p: f64, max_weight: i64) -> WeightedDigraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                let w = if max_weight == 1 { 1 } else { rng.gen_range(0..=max_weight) };
                arcs.push((u, v, int(w)));
            }
        }
    }
    WeightedDigraph::with_n(n, &arcs).expect("no parallel arcs")
}

/// Polymatrix game on a random graph; payoffs are small integers and
/// importances random rationals in `[0, 3]`.
pub fn game<R: Rng>(rng: &mut R, n: usize, p: f64) -> PolymatrixGame {
    let g = graph(rng, n, p);
    let mut payoffs = HashMap::new();
    let mut importance = HashMap::new();
    for &(u, v) in &g.edges {
        payoffs.insert((u, v), small_int_matrix(rng, 4));
        payoffs.insert((v, u), small_int_matrix(rng, 4));
        if rng.gen_bool(0.5) {
            importance.insert((u, v), rational(rng, 0, 3));
        }
    }
    PolymatrixGame::new(g.vertices, g.edges, payoffs, importance).expect("valid game")
}

/// Linear 3-uniform hypergraph with up to `m` edges on `n` vertices,
/// built greedily from shuffled triples.
pub fn linear_hypergraph<R: Rng>(rng: &mut R, n: usize, m: usize) -> Hypergraph3 {
    let mut triples: Vec<[usize; 3]> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                triples.push([a, b, c]);
            }
        }
    }
    triples.shuffle(rng);
    let mut edges: Vec<[usize; 3]> = Vec::new();
    for t in triples {
        if edges.len() == m {
            break;
        }
        if edges.iter().all(|e| e.iter().filter(|v| t.contains(v)).count() < 2) {
            edges.push(t);
        }
    }
    Hypergraph3::with_n(n, &edges).expect("distinct vertices")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_meet_their_contracts() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            assert!(matrix_a(&mut rng).property_a());
            assert!(matrix_b(&mut rng).property_b());
            assert!(matrix_c(&mut rng).property_c());
            let h = linear_hypergraph(&mut rng, 7, 4);
            assert!(h.is_linear());
        }
        for kind in [Kind::General, Kind::Oriented, Kind::Symmetric] {
            let fam = [matrix(&mut rng), matrix(&mut rng)];
            let inst = instance(&mut rng, kind, 6, 0.5, &fam);
            assert_eq!(inst.kind(), kind);
        }
    }
}
