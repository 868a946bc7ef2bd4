//! Polynomial-time optimal solvers and the dichotomy dispatcher.
//!
//! Families satisfying (b) or (c) have a trivial optimum (everything in X1,
//! resp. X2). Families satisfying (a) are solved through a minimum
//! (s,t)-cut in an undirected graph `H` on `V(D) + {s, t}` whose cuts are in
//! bijection with partitions and weigh exactly `-w^P(D)` before the shift.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::classify::{classify, Case, Verdict};
use crate::error::{Error, Result};
use crate::flow::{Capacity, FlowNetwork};
use crate::instance::Instance;
use crate::matrix::Property;
use crate::partition::{partition_weight, Partition, Side};
use crate::rational::{self, Rational};
use crate::solve_exact;

/// Default vertex cap for exhaustive search.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    TrivialAllX1,
    TrivialAllX2,
    MinCut,
    BruteForce,
    /// Heuristic: a 1-flip local optimum, not certified optimal.
    LocalSearch,
}

impl Method {
    pub fn is_exact(self) -> bool {
        self != Method::LocalSearch
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub partition: Partition,
    pub weight: Rational,
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub brute_force_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            brute_force_cap: DEFAULT_BRUTE_FORCE_CAP,
        }
    }
}

fn require(instance: &Instance, property: Property) -> Result<()> {
    match instance
        .family()
        .iter()
        .find(|(_, m)| !m.satisfies(property))
    {
        Some((id, _)) => Err(Error::PreconditionViolated {
            property,
            matrix: id.clone(),
        }),
        None => Ok(()),
    }
}

fn trivial(instance: &Instance, side: Side, method: Method) -> Solution {
    let partition = Partition::all(instance.num_vertices(), side);
    let weight = partition_weight(instance, &partition);
    Solution {
        partition,
        weight,
        method,
    }
}

/// All vertices in X1; optimal when every matrix has `m11` as a maximum entry.
pub fn solve_trivial_b(instance: &Instance) -> Result<Solution> {
    require(instance, Property::B)?;
    Ok(trivial(instance, Side::X1, Method::TrivialAllX1))
}

/// All vertices in X2; optimal when every matrix has `m22` as a maximum entry.
pub fn solve_trivial_c(instance: &Instance) -> Result<Solution> {
    require(instance, Property::C)?;
    Ok(trivial(instance, Side::X2, Method::TrivialAllX2))
}

/// The undirected weighted graph whose minimum (s,t)-cut yields an optimal partition.
///
/// Vertices `0..n` are the instance vertices, `n` is `s` and `n + 1` is `t`.
/// Parallel contributions are merged by summation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutGraph {
    n: usize,
    edges: BTreeMap<(usize, usize), Rational>,
    theta: Rational,
}

impl CutGraph {
    pub fn num_instance_vertices(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> usize {
        self.n
    }

    pub fn sink(&self) -> usize {
        self.n + 1
    }

    pub fn theta(&self) -> &Rational {
        &self.theta
    }

    fn key(u: usize, v: usize) -> (usize, usize) {
        (u.min(v), u.max(v))
    }

    fn is_terminal_edge(&self, (u, v): (usize, usize)) -> bool {
        u >= self.n || v >= self.n
    }

    /// Pre-shift weight `w`; absent edges weigh zero.
    pub fn weight(&self, u: usize, v: usize) -> Rational {
        self.edges
            .get(&Self::key(u, v))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Shifted weight `w*`: terminal edges lose `theta`.
    pub fn shifted(&self, u: usize, v: usize) -> Rational {
        let w = self.weight(u, v);
        if self.is_terminal_edge(Self::key(u, v)) {
            w - &self.theta
        } else {
            w
        }
    }

    /// Edges as `(u, v, w, w*)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Rational, Rational)> + '_ {
        self.edges
            .iter()
            .map(move |(&(u, v), w)| (u, v, w, self.shifted(u, v)))
    }

    /// `w` and `w*` of the cut whose source side is `source_side` (indexed `0..n+2`).
    pub fn cut_weights(&self, source_side: &[bool]) -> (Rational, Rational) {
        assert_eq!(source_side.len(), self.n + 2);
        let mut w = Rational::zero();
        let mut w_star = Rational::zero();
        for (u, v, weight, shifted) in self.edges() {
            if source_side[u] != source_side[v] {
                w += weight;
                w_star += shifted;
            }
        }
        (w, w_star)
    }

    /// Source side for a partition of the instance vertices: X1 plus `s`.
    pub fn source_side_of(&self, partition: &Partition) -> Vec<bool> {
        let mut side = partition.x1_flags();
        side.push(true);
        side.push(false);
        side
    }
}

/// Builds `H` for a family where every matrix satisfies (a).
pub fn build_cut_graph(instance: &Instance) -> Result<CutGraph> {
    require(instance, Property::A)?;
    let n = instance.num_vertices();
    let (s, t) = (n, n + 1);
    let mut edges: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    for u in 0..n {
        edges.insert((u, s), Rational::zero());
        edges.insert((u, t), Rational::zero());
    }
    let two = rational::int(2);
    for a in instance.arcs() {
        let m = instance.matrix_of(a);
        let (u, v) = (a.tail, a.head);
        let c = &a.cost;
        let mut add = |x: usize, y: usize, amount: Rational| {
            *edges
                .entry(CutGraph::key(x, y))
                .or_insert_with(Rational::zero) += amount;
        };
        add(u, v, c * m.diagonal_excess() / &two);
        add(s, u, c * -&m.m22 / &two);
        add(s, v, c * -&m.m22 / &two);
        add(t, u, c * (&m.m21 - &m.m11 - &m.m12) / &two);
        add(t, v, c * (&m.m12 - &m.m11 - &m.m21) / &two);
    }
    let theta = edges.values().min().cloned().unwrap_or_else(Rational::zero);
    Ok(CutGraph { n, edges, theta })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCut {
    /// `w*` weight of the cut.
    pub value: Rational,
    /// Residual-reachable side of `s`, indexed `0..n+2`.
    pub source_side: Vec<bool>,
}

fn run_flow<T: Capacity + Into<BigInt>>(
    graph: &CutGraph,
    caps: &[(usize, usize, BigInt)],
    convert: impl Fn(&BigInt) -> T,
) -> (BigInt, Vec<bool>) {
    let mut net = FlowNetwork::<T>::new(graph.n + 2);
    for (u, v, c) in caps {
        net.add_edge(*u, *v, convert(c));
    }
    let flow = net.max_flow(graph.source(), graph.sink());
    (flow.into(), net.residual_reachable(graph.source()))
}

/// Exact minimum (s,t)-cut under `w*` via integer max-flow.
pub fn min_st_cut(graph: &CutGraph) -> Result<MinCut> {
    let shifted: Vec<(usize, usize, Rational)> =
        graph.edges().map(|(u, v, _, ws)| (u, v, ws)).collect();
    if let Some((u, v, w)) = shifted.iter().find(|(_, _, w)| w < &Rational::zero()) {
        return Err(Error::Internal(format!(
            "negative shifted capacity {} on edge ({u}, {v})",
            rational::format(w)
        )));
    }
    let scale = rational::common_denominator(shifted.iter().map(|(_, _, w)| w));
    let caps: Vec<(usize, usize, BigInt)> = shifted
        .iter()
        .map(|(u, v, w)| (*u, *v, rational::scale_to_int(w, &scale)))
        .collect();
    let total: BigInt = caps.iter().map(|(_, _, c)| c).sum::<BigInt>() * 2;
    let (flow, reach) = if total.to_i128().is_some() {
        run_flow::<i128>(graph, &caps, |c| c.to_i128().expect("bounded"))
    } else {
        run_flow::<BigInt>(graph, &caps, |c| c.clone())
    };
    let value = Rational::new(flow, scale);
    let (_, cut) = graph.cut_weights(&reach);
    if cut != value || !reach[graph.source()] || reach[graph.sink()] {
        return Err(Error::Internal(format!(
            "max-flow {} differs from residual cut {}",
            rational::format(&value),
            rational::format(&cut)
        )));
    }
    Ok(MinCut {
        value,
        source_side: reach,
    })
}

/// Optimal partition for families where every matrix satisfies (a).
pub fn solve_mincut(instance: &Instance) -> Result<Solution> {
    let graph = build_cut_graph(instance)?;
    let cut = min_st_cut(&graph)?;
    let n = instance.num_vertices();
    let mut flags: Vec<bool> = cut.source_side[..n].to_vec();
    for (v, iso) in instance.isolated().into_iter().enumerate() {
        if iso {
            flags[v] = true;
        }
    }
    let partition = Partition::from_x1_flags(&flags);
    let weight = -cut.value - rational::int(n as i64) * graph.theta();
    let check = partition_weight(instance, &partition);
    if check != weight {
        return Err(Error::Internal(format!(
            "min-cut weight {} but the partition weighs {}",
            rational::format(&weight),
            rational::format(&check)
        )));
    }
    Ok(Solution {
        partition,
        weight,
        method: Method::MinCut,
    })
}

/// Classifies the family and runs the matching exact solver.
pub fn solve(instance: &Instance, options: &SolveOptions) -> Result<Solution> {
    let verdict = classify(instance.family())?;
    solve_classified(instance, &verdict, options)
}

pub fn solve_classified(
    instance: &Instance,
    verdict: &Verdict,
    options: &SolveOptions,
) -> Result<Solution> {
    match verdict.case {
        Case::PolyB => solve_trivial_b(instance),
        Case::PolyC => solve_trivial_c(instance),
        Case::PolyA => solve_mincut(instance),
        Case::Hard => {
            let n = instance.num_vertices();
            if n > options.brute_force_cap {
                return Err(Error::HardInstanceTooLarge {
                    vertices: n,
                    cap: options.brute_force_cap,
                });
            }
            solve_exact::brute_force(instance, options.brute_force_cap)
        }
    }
}

/// Explicit solver choice, as exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    MinCut,
    TrivialB,
    TrivialC,
    BruteForce,
    LocalSearch { seed: u64, restarts: usize },
}

pub fn solve_with(instance: &Instance, strategy: Strategy, options: &SolveOptions) -> Result<Solution> {
    match strategy {
        Strategy::Auto => solve(instance, options),
        Strategy::MinCut => solve_mincut(instance),
        Strategy::TrivialB => solve_trivial_b(instance),
        Strategy::TrivialC => solve_trivial_c(instance),
        Strategy::BruteForce => solve_exact::brute_force(instance, options.brute_force_cap),
        Strategy::LocalSearch { seed, restarts } => {
            Ok(solve_exact::local_search(instance, seed, restarts))
        }
    }
}
