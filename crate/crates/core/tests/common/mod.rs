//! Independent oracles: plain enumeration and textbook flow, sharing no code
//! with the library's evaluators or solvers.

#![allow(dead_code)]

use std::collections::VecDeque;

use mwdp_core::graph::{UndirectedGraph, WeightedDigraph};
use mwdp_core::reductions::Hypergraph3;
use mwdp_core::{Instance, Rational};
use num_traits::Zero;

/// Weight of the partition whose X1 is the set bits of `mask`.
pub fn weight_of_mask(instance: &Instance, mask: u64) -> Rational {
    let family: Vec<_> = instance.family().values().collect();
    let mut total = Rational::zero();
    for a in instance.arcs() {
        let m = family[a.matrix];
        let tail1 = mask >> a.tail & 1 == 1;
        let head1 = mask >> a.head & 1 == 1;
        let e = match (tail1, head1) {
            (true, true) => &m.m11,
            (true, false) => &m.m12,
            (false, true) => &m.m21,
            (false, false) => &m.m22,
        };
        total += &a.cost * e;
    }
    total
}

/// Optimum over all `2^n` partitions.
pub fn optimum(instance: &Instance) -> Rational {
    let n = instance.num_vertices();
    assert!(n <= 24, "oracle enumeration is for small instances");
    (0..1u64 << n)
        .map(|mask| weight_of_mask(instance, mask))
        .max()
        .unwrap_or_else(Rational::zero)
}

pub fn mask_of(flags: &[bool]) -> u64 {
    flags
        .iter()
        .enumerate()
        .filter(|(_, &f)| f)
        .fold(0, |m, (i, _)| m | 1 << i)
}

pub fn max_cut(g: &UndirectedGraph) -> u64 {
    let n = g.num_vertices();
    (0..1u64 << n)
        .map(|mask| {
            g.edges
                .iter()
                .filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1))
                .count() as u64
        })
        .max()
        .unwrap_or(0)
}

pub fn two_colorable(h: &Hypergraph3) -> bool {
    let n = h.num_vertices();
    assert!(n <= 24);
    (0..1u64 << n).any(|mask| {
        h.edges.iter().all(|e| {
            let ones = e.iter().filter(|&&v| mask >> v & 1 == 1).count();
            ones == 1 || ones == 2
        })
    })
}

/// Maximum average degree `2|E(W)|/|W|` over nonempty `W`.
pub fn max_average_degree(g: &UndirectedGraph) -> Rational {
    let n = g.num_vertices();
    (1..1u64 << n)
        .map(|mask| {
            let e = g
                .edges
                .iter()
                .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
                .count();
            Rational::new((2 * e).into(), (mask.count_ones() as usize).into())
        })
        .max()
        .unwrap_or_else(Rational::zero)
}

/// `max over S of w(S -> V\S) - w(V\S -> S)`.
pub fn balance_by_enumeration(d: &WeightedDigraph) -> Rational {
    let n = d.num_vertices();
    (0..1u64 << n)
        .map(|mask| {
            d.arcs.iter().fold(Rational::zero(), |acc, a| {
                match (mask >> a.tail & 1, mask >> a.head & 1) {
                    (1, 0) => acc + &a.weight,
                    (0, 1) => acc - &a.weight,
                    _ => acc,
                }
            })
        })
        .max()
        .unwrap_or_else(Rational::zero)
}

pub fn max_dicut(d: &WeightedDigraph) -> Rational {
    let n = d.num_vertices();
    (0..1u64 << n)
        .map(|mask| {
            d.arcs
                .iter()
                .filter(|a| mask >> a.tail & 1 == 1 && mask >> a.head & 1 == 0)
                .fold(Rational::zero(), |acc, a| acc + &a.weight)
        })
        .max()
        .unwrap_or_else(Rational::zero)
}

/// Edmonds-Karp max-flow on an adjacency matrix of integer capacities.
pub fn edmonds_karp(cap: &[Vec<i64>], s: usize, t: usize) -> i64 {
    let n = cap.len();
    let mut residual = cap.to_vec();
    let mut flow = 0;
    loop {
        let mut parent = vec![usize::MAX; n];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if parent[v] == usize::MAX && residual[u][v] > 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[t] == usize::MAX {
            return flow;
        }
        let mut push = i64::MAX;
        let mut v = t;
        while v != s {
            push = push.min(residual[parent[v]][v]);
            v = parent[v];
        }
        let mut v = t;
        while v != s {
            let u = parent[v];
            residual[u][v] -= push;
            residual[v][u] += push;
            v = u;
        }
        flow += push;
    }
}

/// Minimum number of arcs separating `s` from `t` (unit capacities).
pub fn min_st_arc_cut(d: &WeightedDigraph, s: usize, t: usize) -> i64 {
    let n = d.num_vertices();
    let mut cap = vec![vec![0; n]; n];
    for a in &d.arcs {
        cap[a.tail][a.head] += 1;
    }
    edmonds_karp(&cap, s, t)
}
