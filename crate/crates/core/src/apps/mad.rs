//! Maximum average degree through min-cut partition instances.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::instance::{Instance, InstanceBuilder, Kind};
use crate::matrix::Matrix2x2;
use crate::partition::{partition_weight, Partition, Side};
use crate::rational::{self, int, Rational};
use crate::solve_poly::solve_mincut;

/// Edges with both ends in `w`, counted once.
pub fn inner_edges(g: &UndirectedGraph, w: &[usize]) -> usize {
    let mut inside = vec![false; g.num_vertices()];
    for &v in w {
        inside[v] = true;
    }
    g.edges.iter().filter(|&&(u, v)| inside[u] && inside[v]).count()
}

/// Average degree `2 e(W, W) / |W|` of the subgraph induced by a nonempty `w`.
pub fn density(g: &UndirectedGraph, w: &[usize]) -> Rational {
    Rational::new((2 * inner_edges(g, w)).into(), w.len().into())
}

/// The decision instance for threshold `k`: graph edges carry `[[0,0],[0,2]]`
/// and each vertex `u` gets a pendant arc `u -> v_u` carrying `[[k,0],[0,0]]`.
/// Graph vertices come first; pendant of vertex `u` has index `n + u`.
pub fn mad_instance(g: &UndirectedGraph, k: &Rational) -> Result<Instance> {
    let mut b = InstanceBuilder::new(Kind::Oriented);
    let zero = Rational::zero();
    let m1 = b.matrix("M1", Matrix2x2::new(k.clone(), zero.clone(), zero.clone(), zero.clone()));
    let m2 = b.matrix("M2", Matrix2x2::new(zero.clone(), zero.clone(), zero, int(2)));
    for id in &g.vertices {
        b.vertex(id.clone())?;
    }
    let n = g.num_vertices();
    for u in 0..n {
        let p = b.fresh_vertex(&format!("pendant.{}", g.vertices[u]));
        debug_assert_eq!(p, n + u);
        b.arc(u, p, int(1), m1);
    }
    for &e in &g.edges {
        let (u, v) = g.oriented(e);
        b.arc(u, v, int(1), m2);
    }
    b.build()
}

/// Decides `mad(g) > k`; when true, returns a vertex set whose average
/// degree exceeds `k` (the densest one relative to `k`).
pub fn mad_decide(g: &UndirectedGraph, k: &Rational) -> Result<(bool, Option<Vec<usize>>)> {
    if k.is_negative() {
        return Err(Error::NegativeK(rational::format(k)));
    }
    let n = g.num_vertices();
    let instance = mad_instance(g, k)?;
    let sol = solve_mincut(&instance)?;
    // co-locating each pendant with its vertex never lowers the weight
    let mut p: Partition = sol.partition.clone();
    for u in 0..n {
        p.set(n + u, p.side(u));
    }
    let weight = partition_weight(&instance, &p);
    if weight != sol.weight {
        return Err(Error::Internal(format!(
            "pendant normalization changed the optimum from {} to {}",
            rational::format(&sol.weight),
            rational::format(&weight)
        )));
    }
    let answer = weight > k * int(n as i64);
    let witness: Vec<usize> = (0..n).filter(|&u| p.side(u) == Side::X2).collect();
    Ok((answer, answer.then_some(witness)))
}

/// Exact maximum average degree with a witness subgraph attaining it.
///
/// Starts from the density of the whole graph and repeatedly asks for a
/// strictly denser subgraph until none exists.
pub fn mad_exact(g: &UndirectedGraph) -> Result<(Rational, Vec<usize>)> {
    if g.edges.is_empty() {
        return Err(Error::NoEdges);
    }
    let mut witness: Vec<usize> = (0..g.num_vertices()).collect();
    let mut k = density(g, &witness);
    while let (true, Some(w)) = mad_decide(g, &k)? {
        let next = density(g, &w);
        if next <= k {
            return Err(Error::Internal("densest-subgraph iteration stalled".into()));
        }
        k = next;
        witness = w;
    }
    Ok((k, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn k4_plus_pendant() -> UndirectedGraph {
        UndirectedGraph::with_n(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn decide_on_k4() {
        let k4 = UndirectedGraph::complete(4);
        assert_eq!(mad_decide(&k4, &ratio(5, 2)).unwrap(), (true, Some(vec![0, 1, 2, 3])));
        assert_eq!(mad_decide(&k4, &int(3)).unwrap(), (false, None));
        let p2 = UndirectedGraph::path(2);
        assert_eq!(mad_decide(&p2, &ratio(1, 2)).unwrap(), (true, Some(vec![0, 1])));
        assert!(matches!(mad_decide(&k4, &int(-1)), Err(Error::NegativeK(_))));
    }

    #[test]
    fn exact_values() {
        assert_eq!(mad_exact(&UndirectedGraph::complete(4)).unwrap().0, int(3));
        assert_eq!(mad_exact(&UndirectedGraph::cycle(5)).unwrap().0, int(2));
        assert_eq!(mad_exact(&k4_plus_pendant()).unwrap(), (int(3), vec![0, 1, 2, 3]));
        let empty = UndirectedGraph::with_n(2, &[]).unwrap();
        assert_eq!(mad_exact(&empty), Err(Error::NoEdges));
    }

    #[test]
    fn decision_identity_on_co_located_partitions() {
        let g = k4_plus_pendant();
        let k = ratio(7, 3);
        let inst = mad_instance(&g, &k).unwrap();
        let n = g.num_vertices();
        for mask in 0u32..1 << n {
            let mut p = Partition::all(2 * n, Side::X1);
            let w: Vec<usize> = (0..n).filter(|&u| mask >> u & 1 == 1).collect();
            for &u in &w {
                p.set(u, Side::X2);
                p.set(n + u, Side::X2);
            }
            let expected = &k * int(n as i64) - &k * int(w.len() as i64) + int(2 * inner_edges(&g, &w) as i64);
            assert_eq!(partition_weight(&inst, &p), expected);
        }
    }
}
