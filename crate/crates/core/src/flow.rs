//! Exact maximum flow (Dinic) over integer-like capacities.

use std::collections::VecDeque;
use std::ops::{Add, Sub};

use num_traits::Zero;

/// Anything exact enough to push flow with: `i64`, `i128`, `BigInt`.
pub trait Capacity: Clone + Ord + Zero + Add<Output = Self> + Sub<Output = Self> {}

impl<T> Capacity for T where T: Clone + Ord + Zero + Add<Output = T> + Sub<Output = T> {}

#[derive(Debug, Clone)]
struct Edge<T> {
    to: usize,
    residual: T,
    rev: usize,
}

#[derive(Debug, Clone)]
pub struct FlowNetwork<T> {
    graph: Vec<Vec<Edge<T>>>,
    level: Vec<i64>,
    iter: Vec<usize>,
}

impl<T: Capacity> FlowNetwork<T> {
    pub fn new(n: usize) -> Self {
        Self {
            graph: vec![Vec::new(); n],
            level: vec![-1; n],
            iter: vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: T) {
        self.add_pair(from, to, cap, T::zero());
    }

    /// An undirected edge: capacity `cap` in both directions.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: T) {
        self.add_pair(u, v, cap.clone(), cap);
    }

    fn add_pair(&mut self, from: usize, to: usize, forward: T, backward: T) {
        assert!(from != to, "flow network self-loop");
        let rev_from = self.graph[to].len();
        let rev_to = self.graph[from].len();
        self.graph[from].push(Edge {
            to,
            residual: forward,
            rev: rev_from,
        });
        self.graph[to].push(Edge {
            to: from,
            residual: backward,
            rev: rev_to,
        });
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        let mut queue = VecDeque::new();
        self.level[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for e in &self.graph[u] {
                if e.residual > T::zero() && self.level[e.to] < 0 {
                    self.level[e.to] = self.level[u] + 1;
                    queue.push_back(e.to);
                }
            }
        }
    }

    /// Pushes at most `limit` (unbounded when `None`) along a level-increasing path.
    fn dfs(&mut self, u: usize, t: usize, limit: Option<T>) -> T {
        if u == t {
            return limit.expect("sink reached with a finite bottleneck");
        }
        while self.iter[u] < self.graph[u].len() {
            let i = self.iter[u];
            let (to, residual) = {
                let e = &self.graph[u][i];
                (e.to, e.residual.clone())
            };
            if residual > T::zero() && self.level[u] < self.level[to] {
                let bottleneck = match &limit {
                    Some(l) if *l < residual => l.clone(),
                    _ => residual,
                };
                let pushed = self.dfs(to, t, Some(bottleneck));
                if pushed > T::zero() {
                    let rev = self.graph[u][i].rev;
                    let e = &mut self.graph[u][i];
                    e.residual = e.residual.clone() - pushed.clone();
                    let back = &mut self.graph[to][rev];
                    back.residual = back.residual.clone() + pushed.clone();
                    return pushed;
                }
            }
            self.iter[u] += 1;
        }
        T::zero()
    }

    /// Runs Dinic's algorithm to completion and returns the flow value.
    pub fn max_flow(&mut self, s: usize, t: usize) -> T {
        assert!(s != t, "source equals sink");
        let mut flow = T::zero();
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return flow;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, None);
                if f.is_zero() {
                    break;
                }
                flow = flow + f;
            }
        }
    }

    /// Vertices reachable from `s` in the residual network. After
    /// [`max_flow`](Self::max_flow) this is the source side of the canonical
    /// minimum cut.
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            for e in &self.graph[u] {
                if e.residual > T::zero() && !seen[e.to] {
                    seen[e.to] = true;
                    queue.push_back(e.to);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn classic_network() {
        // CLRS figure: max flow 23
        let mut g = FlowNetwork::<i64>::new(6);
        for (u, v, c) in [
            (0, 1, 16),
            (0, 2, 13),
            (1, 3, 12),
            (2, 1, 4),
            (2, 4, 14),
            (3, 2, 9),
            (3, 5, 20),
            (4, 3, 7),
            (4, 5, 4),
        ] {
            g.add_arc(u, v, c);
        }
        assert_eq!(g.max_flow(0, 5), 23);
        let side = g.residual_reachable(0);
        assert!(side[0] && !side[5]);
    }

    #[test]
    fn undirected_path_bottleneck() {
        let mut g = FlowNetwork::<BigInt>::new(3);
        g.add_edge(0, 1, BigInt::from(3));
        g.add_edge(1, 2, BigInt::from(1));
        assert_eq!(g.max_flow(0, 2), BigInt::from(1));
        assert_eq!(g.residual_reachable(0), vec![true, true, false]);
    }

    #[test]
    fn zero_capacity_edge() {
        let mut g = FlowNetwork::<i128>::new(2);
        g.add_edge(0, 1, 0);
        assert_eq!(g.max_flow(0, 1), 0);
        assert_eq!(g.residual_reachable(0), vec![true, false]);
    }
}
