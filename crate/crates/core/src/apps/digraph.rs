//! Weighted digraph problems: balance defect, minimum (s,t)-cut, directed max cut.

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::WeightedDigraph;
use crate::instance::{Instance, InstanceBuilder, Kind};
use crate::matrix::Matrix2x2;
use crate::partition::{partition_weight, Partition};
use crate::rational::{self, int, Rational};
use crate::solve_exact::brute_force;
use crate::solve_poly::{solve_mincut, Solution};

fn digraph_instance(d: &WeightedDigraph, m: Matrix2x2, unit: bool) -> Result<(InstanceBuilder, usize)> {
    let mut b = InstanceBuilder::new(Kind::General);
    let mi = b.matrix("M", m);
    for id in &d.vertices {
        b.vertex(id.clone())?;
    }
    for a in &d.arcs {
        let c = if unit { int(1) } else { a.weight.clone() };
        b.arc(a.tail, a.head, c, mi);
    }
    Ok((b, mi))
}

/// `sum over x of max(0, out-weight(x) - in-weight(x))`.
pub fn excess_sum(d: &WeightedDigraph) -> Rational {
    let mut excess = vec![Rational::zero(); d.num_vertices()];
    for a in &d.arcs {
        excess[a.tail] += &a.weight;
        excess[a.head] -= &a.weight;
    }
    excess
        .into_iter()
        .filter(|e| e > &Rational::zero())
        .fold(Rational::zero(), |a, b| a + b)
}

pub fn balance_instance(d: &WeightedDigraph) -> Result<Instance> {
    digraph_instance(d, Matrix2x2::from_ints([[1, 2], [0, 1]]), false)?.0.build()
}

/// Largest forward-minus-backward cut weight over all bipartitions, with a
/// partition attaining it. Cross-checked against [`excess_sum`].
pub fn balance_defect(d: &WeightedDigraph) -> Result<(Rational, Partition)> {
    let sol = solve_mincut(&balance_instance(d)?)?;
    let total: Rational = d.arcs.iter().map(|a| &a.weight).sum();
    let r_plus = &sol.weight - total;
    let closed = excess_sum(d);
    if r_plus != closed {
        return Err(Error::Internal(format!(
            "balance defect {} disagrees with the excess sum {}",
            rational::format(&r_plus),
            rational::format(&closed)
        )));
    }
    Ok((r_plus, sol.partition))
}

/// Augmented instance for the (s,t)-cut: unit-cost arcs with `[[1,0],[1,1]]`,
/// plus `s' -> s` with `[[|A|,0],[0,0]]` and `t -> t'` with `[[0,0],[0,|A|]]`.
/// Returns the instance and the indices of `s'` and `t'`.
pub fn st_cut_instance(d: &WeightedDigraph, s: usize, t: usize) -> Result<(Instance, usize, usize)> {
    let (mut b, _) = digraph_instance(d, Matrix2x2::from_ints([[1, 0], [1, 1]]), true)?;
    let a = int(d.arcs.len() as i64);
    let z = Rational::zero();
    let si = b.matrix("S", Matrix2x2::new(a.clone(), z.clone(), z.clone(), z.clone()));
    let ti = b.matrix("T", Matrix2x2::new(z.clone(), z.clone(), z, a));
    let s2 = b.fresh_vertex(&format!("{}'", d.vertices[s]));
    let t2 = b.fresh_vertex(&format!("{}'", d.vertices[t]));
    b.arc(s2, s, int(1), si);
    b.arc(t, t2, int(1), ti);
    Ok((b.build()?, s2, t2))
}

/// Fewest arcs leaving an X1 containing `s` for an X2 containing `t`.
///
/// The returned partition covers the augmented instance's vertices; the
/// first `|V|` entries are the digraph's.
pub fn min_st_cut_via_mwdp(d: &WeightedDigraph, s: &str, t: &str) -> Result<(usize, Partition)> {
    let find = |id: &str| {
        d.index_of(id)
            .ok_or_else(|| Error::BadTerminals(format!("{id:?} is not a vertex")))
    };
    let (si, ti) = (find(s)?, find(t)?);
    if si == ti {
        return Err(Error::BadTerminals(format!("source and sink are both {s:?}")));
    }
    let (instance, s2, t2) = st_cut_instance(d, si, ti)?;
    let sol = solve_mincut(&instance)?;
    let arcs = d.arcs.len();
    let cut = (int(3 * arcs as i64) - &sol.weight)
        .to_integer()
        .to_usize()
        .filter(|_| sol.weight.is_integer())
        .ok_or_else(|| Error::Internal(format!("non-integral optimum {}", rational::format(&sol.weight))))?;

    let mut partition = sol.partition;
    if !(partition.in_x1(si) && !partition.in_x1(ti)) {
        // only possible when the cut has |A| arcs, which {s, s'} alone achieves
        partition = Partition::from_x1_set(instance.num_vertices(), [si, s2]);
    }
    let check = partition_weight(&instance, &partition);
    if check != sol.weight || partition.in_x1(t2) {
        return Err(Error::Internal(format!(
            "terminal-respecting partition weighs {}, optimum is {}",
            rational::format(&check),
            rational::format(&sol.weight)
        )));
    }
    Ok((cut, partition))
}

pub fn dicut_instance(d: &WeightedDigraph) -> Result<Instance> {
    digraph_instance(d, Matrix2x2::from_ints([[0, 1], [0, 0]]), false)?.0.build()
}

/// Maximum total weight of arcs from X1 to X2, by exhaustive search.
pub fn max_weighted_dicut(d: &WeightedDigraph, cap: usize) -> Result<(Rational, Partition)> {
    let Solution { partition, weight, .. } = brute_force(&dicut_instance(d)?, cap)?;
    Ok((weight, partition))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dg(n: usize, arcs: &[(usize, usize, i64)]) -> WeightedDigraph {
        let arcs: Vec<_> = arcs.iter().map(|&(t, h, w)| (t, h, int(w))).collect();
        WeightedDigraph::with_n(n, &arcs).unwrap()
    }

    #[test]
    fn balance_examples() {
        assert_eq!(balance_defect(&dg(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)])).unwrap().0, int(0));
        let (r, p) = balance_defect(&dg(2, &[(0, 1, 5)])).unwrap();
        assert_eq!(r, int(5));
        assert!(p.in_x1(0) && !p.in_x1(1));
        assert_eq!(balance_defect(&dg(2, &[(0, 1, 3), (1, 0, 1)])).unwrap().0, int(2));
    }

    #[test]
    fn st_cut_examples() {
        let single = dg(2, &[(0, 1, 1)]);
        assert_eq!(min_st_cut_via_mwdp(&single, "v0", "v1").unwrap().0, 1);
        let two_paths = dg(4, &[(0, 1, 1), (1, 3, 1), (0, 2, 1), (2, 3, 1)]);
        let (cut, p) = min_st_cut_via_mwdp(&two_paths, "v0", "v3").unwrap();
        assert_eq!(cut, 2);
        assert!(p.in_x1(0) && !p.in_x1(3));
        let backwards = dg(2, &[(1, 0, 1)]);
        assert_eq!(min_st_cut_via_mwdp(&backwards, "v0", "v1").unwrap().0, 0);
        assert!(matches!(min_st_cut_via_mwdp(&single, "v0", "v0"), Err(Error::BadTerminals(_))));
        assert!(matches!(min_st_cut_via_mwdp(&single, "v0", "zz"), Err(Error::BadTerminals(_))));
    }

    #[test]
    fn st_cut_with_every_arc_cut() {
        // the only cut is everything leaving s, ties with mislabeled partitions
        let star = dg(3, &[(0, 1, 1), (0, 2, 1)]);
        let (cut, p) = min_st_cut_via_mwdp(&star, "v0", "v2").unwrap();
        assert_eq!(cut, 1);
        assert!(p.in_x1(0) && !p.in_x1(2));
        let no_arcs = dg(2, &[]);
        let (cut, p) = min_st_cut_via_mwdp(&no_arcs, "v0", "v1").unwrap();
        assert_eq!(cut, 0);
        assert!(p.in_x1(0) && !p.in_x1(1));
    }

    #[test]
    fn dicut_examples() {
        assert_eq!(max_weighted_dicut(&dg(2, &[(0, 1, 7)]), 26).unwrap().0, int(7));
        assert_eq!(max_weighted_dicut(&dg(2, &[(0, 1, 1), (1, 0, 1)]), 26).unwrap().0, int(1));
        // only one arc of a directed triangle can cross, so the heaviest wins
        let tri = dg(3, &[(0, 1, 1), (1, 2, 2), (2, 0, 3)]);
        assert_eq!(max_weighted_dicut(&tri, 26).unwrap().0, int(3));
    }
}
