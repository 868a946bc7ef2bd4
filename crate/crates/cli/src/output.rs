//! JSON rendering of core results.

use mwdp_core::classify::Verdict;
use mwdp_core::rational::{self, Rational};
use mwdp_core::{CutGraph, Instance, Partition, Solution};
use serde_json::{json, Value};

pub fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values always serialize")
}

pub fn r(value: &Rational) -> Value {
    rational::to_json(value)
}

pub fn ids(names: &[String], members: impl IntoIterator<Item = usize>) -> Value {
    Value::from(members.into_iter().map(|v| names[v].clone()).collect::<Vec<_>>())
}

pub fn partition(names: &[String], p: &Partition) -> Value {
    json!({
        "x1": ids(names, p.x1().into_iter().filter(|&v| v < names.len())),
        "x2": ids(names, p.x2().into_iter().filter(|&v| v < names.len())),
    })
}

pub fn verdict(v: &Verdict) -> Value {
    serde_json::to_value(v).expect("verdict serializes")
}

pub fn solution(instance: &Instance, sol: &Solution) -> Value {
    let mut out = partition(instance.vertices(), &sol.partition);
    out["weight"] = r(&sol.weight);
    out["method"] = serde_json::to_value(sol.method).expect("method serializes");
    out
}

pub fn cut_graph(instance: &Instance, g: &CutGraph) -> Value {
    let name = |v: usize| {
        if v == g.source() {
            "@s".to_string()
        } else if v == g.sink() {
            "@t".to_string()
        } else {
            instance.vertices()[v].clone()
        }
    };
    let edges: Vec<Value> = g
        .edges()
        .map(|(u, v, w, shifted)| {
            json!({ "u": name(u), "v": name(v), "w": r(w), "w_shifted": r(&shifted) })
        })
        .collect();
    json!({ "source": "@s", "sink": "@t", "theta": r(g.theta()), "edges": edges })
}
