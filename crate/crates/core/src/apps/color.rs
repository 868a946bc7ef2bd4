//! Two-edge-colored graph problems.

use crate::error::Result;
use crate::graph::ColoredGraph;
use crate::instance::{Instance, InstanceBuilder, Kind};
use crate::matrix::Matrix2x2;
use crate::partition::Partition;
use crate::rational::Rational;
use crate::solve_exact::{brute_force_with, TieBreak};
use crate::solve_poly::solve_mincut;

fn colored_instance(g: &ColoredGraph, color1: Matrix2x2, color2: Matrix2x2) -> Result<Instance> {
    let mut b = InstanceBuilder::new(Kind::Oriented);
    let m1 = b.matrix("M1", color1);
    let m2 = b.matrix("M2", color2);
    for id in &g.vertices {
        b.vertex(id.clone())?;
    }
    for e in &g.edges {
        let (u, v) = g.oriented(e);
        b.arc(u, v, e.weight.clone(), if e.color == 1 { m1 } else { m2 });
    }
    b.build()
}

/// Instance for maximizing color-1 weight inside X1 plus color-2 weight inside X2.
pub fn two_color_partition_instance(g: &ColoredGraph) -> Result<Instance> {
    colored_instance(
        g,
        Matrix2x2::from_ints([[1, 0], [0, 0]]),
        Matrix2x2::from_ints([[0, 0], [0, 1]]),
    )
}

/// Partition maximizing the weight of color-1 edges inside X1 plus color-2
/// edges inside X2 (edge counts when weights are omitted).
pub fn two_color_partition(g: &ColoredGraph) -> Result<(Partition, Rational)> {
    let sol = solve_mincut(&two_color_partition_instance(g)?)?;
    Ok((sol.partition, sol.weight))
}

/// Instance for maximizing color-2 weight minus color-1 weight inside X1.
pub fn two_color_difference_instance(g: &ColoredGraph) -> Result<Instance> {
    colored_instance(
        g,
        Matrix2x2::from_ints([[-1, 0], [0, 0]]),
        Matrix2x2::from_ints([[1, 0], [0, 0]]),
    )
}

/// Vertex set `X` maximizing `w2(X) - w1(X)`, the weight of color-2 minus
/// color-1 edges inside `X`. Ties go to the fewest vertices, so a zero
/// optimum yields the empty set.
pub fn two_color_difference(g: &ColoredGraph, cap: usize) -> Result<(Vec<usize>, Rational)> {
    let instance = two_color_difference_instance(g)?;
    let sol = brute_force_with(&instance, cap, TieBreak::FewestX1)?;
    let iso = instance.isolated();
    let x = sol.partition.x1().into_iter().filter(|&v| !iso[v]).collect();
    Ok((x, sol.weight))
}
