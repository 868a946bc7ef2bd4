//! Binary-action polymatrix games: welfare maximization as a symmetric instance.

use std::collections::HashMap;

use indexmap::IndexMap;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::classify::{classify, Case, Verdict};
use crate::error::{Error, Result};
use crate::instance::{Instance, InstanceBuilder, Kind};
use crate::matrix::Matrix2x2;
use crate::partition::{Partition, Side};
use crate::rational::{self, Rational};
use crate::solve_poly::{solve_classified, Method, SolveOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Action {
    One,
    Two,
}

impl Action {
    fn side(self) -> Side {
        match self {
            Action::One => Side::X1,
            Action::Two => Side::X2,
        }
    }
}

/// One action per player, indexed like the game's players.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyProfile {
    pub actions: Vec<Action>,
}

impl StrategyProfile {
    pub fn from_partition(p: &Partition) -> Self {
        Self {
            actions: p
                .sides()
                .iter()
                .map(|s| if s.is_x1() { Action::One } else { Action::Two })
                .collect(),
        }
    }

    pub fn to_partition(&self) -> Partition {
        Partition::new(self.actions.iter().map(|a| a.side()).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolymatrixGame {
    pub players: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    /// Payoff to the first player of the pair; rows index its own action.
    pub payoffs: HashMap<(usize, usize), Matrix2x2>,
    /// Keyed by `(min, max)`; missing edges default to 1.
    pub importance: HashMap<(usize, usize), Rational>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl PolymatrixGame {
    pub fn new(
        players: Vec<String>,
        edges: Vec<(usize, usize)>,
        payoffs: HashMap<(usize, usize), Matrix2x2>,
        importance: HashMap<(usize, usize), Rational>,
    ) -> Result<Self> {
        crate::graph::UndirectedGraph::new(players.clone(), edges.clone())?;
        let on_edge: std::collections::HashSet<(usize, usize)> =
            edges.iter().map(|&(u, v)| key(u, v)).collect();
        for &(u, v) in &edges {
            for (a, b) in [(u, v), (v, u)] {
                if !payoffs.contains_key(&(a, b)) {
                    return Err(Error::Malformed(format!(
                        "edge {}-{} has no payoff matrix for {}->{}",
                        players[u], players[v], players[a], players[b]
                    )));
                }
            }
        }
        for &(a, b) in payoffs.keys() {
            if !on_edge.contains(&key(a, b)) {
                return Err(Error::Malformed(format!(
                    "payoff {}->{} is not on an edge",
                    players[a], players[b]
                )));
            }
        }
        for (&(a, b), c) in &importance {
            if !on_edge.contains(&(a, b)) {
                return Err(Error::Malformed(format!(
                    "importance {}-{} is not on an edge",
                    players[a], players[b]
                )));
            }
            if c.is_negative() {
                return Err(Error::NegativeWeight {
                    tail: players[a].clone(),
                    head: players[b].clone(),
                    weight: rational::format(c),
                });
            }
        }
        Ok(Self {
            players,
            edges,
            payoffs,
            importance,
        })
    }

    pub fn importance_of(&self, u: usize, v: usize) -> Rational {
        self.importance.get(&key(u, v)).cloned().unwrap_or_else(Rational::one)
    }

    /// Sum over edges of importance times both players' payoffs.
    pub fn welfare(&self, profile: &StrategyProfile) -> Rational {
        let one = |p: usize| profile.actions[p] == Action::One;
        self.edges
            .iter()
            .map(|&(u, v)| {
                let pay = self.payoffs[&(u, v)].entry(one(u), one(v)) + self.payoffs[&(v, u)].entry(one(v), one(u));
                self.importance_of(u, v) * pay
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// JSON: `{"players", "edges": [["i","j"]], "payoffs": {"i->j": [[..],[..]]},
    /// "importance": {"i-j": r}}`; importance is optional.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let doc: Value = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        let mut graph_doc = serde_json::Map::new();
        graph_doc.insert(
            "vertices".into(),
            doc.get("players")
                .cloned()
                .ok_or_else(|| Error::Malformed("missing array field \"players\"".into()))?,
        );
        graph_doc.insert(
            "edges".into(),
            doc.get("edges").cloned().unwrap_or(Value::Array(Vec::new())),
        );
        let graph = crate::graph::UndirectedGraph::from_json_str(&Value::Object(graph_doc).to_string())?;
        let index: HashMap<&str, usize> = graph
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        // ids may themselves contain the separator, so try every split point
        let split = |k: &str, sep: &str| -> Option<(usize, usize)> {
            k.match_indices(sep).find_map(|(at, _)| {
                let (a, b) = (&k[..at], &k[at + sep.len()..]);
                Some((*index.get(a)?, *index.get(b)?))
            })
        };

        let mut payoffs = HashMap::new();
        if let Some(map) = doc.get("payoffs") {
            let map = map
                .as_object()
                .ok_or_else(|| Error::Malformed("\"payoffs\" must be an object".into()))?;
            for (k, m) in map {
                let pair = split(k, "->")
                    .ok_or_else(|| Error::Malformed(format!("payoff key {k:?} is not \"i->j\" over players")))?;
                payoffs.insert(pair, Matrix2x2::from_json(m)?);
            }
        }
        let mut importance = HashMap::new();
        if let Some(map) = doc.get("importance") {
            let map = map
                .as_object()
                .ok_or_else(|| Error::Malformed("\"importance\" must be an object".into()))?;
            for (k, c) in map {
                let (a, b) = split(k, "-")
                    .ok_or_else(|| Error::Malformed(format!("importance key {k:?} is not \"i-j\" over players")))?;
                importance.insert(key(a, b), rational::from_json(c)?);
            }
        }
        Self::new(graph.vertices, graph.edges, payoffs, importance)
    }
}

/// Symmetric instance whose partition weights are the game's welfare values,
/// with action One on X1. Matrix ids are `"i->j"`.
pub fn game_to_mwsdp(game: &PolymatrixGame) -> Result<Instance> {
    let mut b = InstanceBuilder::new(Kind::Symmetric);
    for p in &game.players {
        b.vertex(p.clone())?;
    }
    for &(u, v) in &game.edges {
        let c = game.importance_of(u, v);
        for (t, h) in [(u, v), (v, u)] {
            let id = format!("{}->{}", game.players[t], game.players[h]);
            let m = b.matrix(id, game.payoffs[&(t, h)].clone());
            b.arc(t, h, c.clone(), m);
        }
    }
    b.build()
}

#[derive(Debug, Clone)]
pub struct Welfare {
    pub profile: StrategyProfile,
    pub welfare: Rational,
    pub verdict: Verdict,
    pub method: Method,
}

/// Welfare-optimal pure profile; hard payoff families fall back to exhaustive
/// search within the configured cap.
pub fn max_welfare(game: &PolymatrixGame, options: &SolveOptions) -> Result<Welfare> {
    let instance = game_to_mwsdp(game)?;
    if instance.family().is_empty() {
        // no interactions: every profile has welfare 0
        return Ok(Welfare {
            profile: StrategyProfile {
                actions: vec![Action::One; game.players.len()],
            },
            welfare: Rational::zero(),
            verdict: Verdict {
                case: Case::PolyB,
                per_matrix: IndexMap::new(),
                witnesses: None,
            },
            method: Method::TrivialAllX1,
        });
    }
    let verdict = classify(instance.family())?;
    let sol = solve_classified(&instance, &verdict, options)?;
    let profile = StrategyProfile::from_partition(&sol.partition);
    let welfare = game.welfare(&profile);
    if welfare != sol.weight {
        return Err(Error::Internal(format!(
            "welfare {} differs from partition weight {}",
            rational::format(&welfare),
            rational::format(&sol.weight)
        )));
    }
    Ok(Welfare {
        profile,
        welfare,
        verdict,
        method: sol.method,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partition_weight;
    use crate::rational::int;

    fn uniform(n: usize, edges: &[(usize, usize)], m: [[i64; 2]; 2]) -> PolymatrixGame {
        let payoffs = edges
            .iter()
            .flat_map(|&(u, v)| [((u, v), Matrix2x2::from_ints(m)), ((v, u), Matrix2x2::from_ints(m))])
            .collect();
        PolymatrixGame::new(
            (0..n).map(|i| format!("p{i}")).collect(),
            edges.to_vec(),
            payoffs,
            HashMap::new(),
        )
        .unwrap()
    }

    #[test]
    fn coordination() {
        let g = uniform(2, &[(0, 1)], [[1, 0], [0, 1]]);
        let w = max_welfare(&g, &SolveOptions::default()).unwrap();
        assert_eq!(w.welfare, int(2));
        // the payoff satisfies all three properties; the cheapest branch wins
        assert_eq!(w.verdict.case, Case::PolyB);
        assert!(w.verdict.per_matrix.values().all(|f| f.a && f.b && f.c));
        assert_eq!(w.profile.actions, vec![Action::One, Action::One]);
    }

    #[test]
    fn anti_coordination_triangle() {
        let g = uniform(3, &[(0, 1), (1, 2), (0, 2)], [[0, 1], [1, 0]]);
        let w = max_welfare(&g, &SolveOptions::default()).unwrap();
        assert_eq!(w.welfare, int(4));
        assert_eq!(w.verdict.case, Case::Hard);
        assert_eq!(w.method, Method::BruteForce);
    }

    #[test]
    fn dominant_first_action() {
        let g = uniform(3, &[(0, 1), (1, 2)], [[5, 0], [0, 0]]);
        let w = max_welfare(&g, &SolveOptions::default()).unwrap();
        assert_eq!(w.welfare, int(20));
        assert!(w.profile.actions.iter().all(|&a| a == Action::One));
    }

    #[test]
    fn lonely_player() {
        let g = uniform(1, &[], [[0, 0], [0, 0]]);
        let w = max_welfare(&g, &SolveOptions::default()).unwrap();
        assert_eq!(w.welfare, int(0));
    }

    #[test]
    fn welfare_matches_partition_weight() {
        let g = PolymatrixGame::from_json_str(
            r#"{"players":["a","b","c"],"edges":[["a","b"],["b","c"]],
                "payoffs":{"a->b":[[1,2],[3,4]],"b->a":[[0,-1],[2,"1/2"]],
                           "b->c":[[5,0],[0,1]],"c->b":[[1,1],[0,2]]},
                "importance":{"c-b":"3/2"}}"#,
        )
        .unwrap();
        let inst = game_to_mwsdp(&g).unwrap();
        for mask in 0..8u32 {
            let p = Partition::from_x1_flags(&[mask & 1 == 1, mask & 2 == 2, mask & 4 == 4]);
            let s = StrategyProfile::from_partition(&p);
            assert_eq!(g.welfare(&s), partition_weight(&inst, &p));
        }
    }

    #[test]
    fn rejects_missing_payoff() {
        let err = PolymatrixGame::from_json_str(
            r#"{"players":["a","b"],"edges":[["a","b"]],"payoffs":{"a->b":[[1,0],[0,1]]}}"#,
        );
        assert!(matches!(err, Err(Error::Malformed(_))));
    }
}
