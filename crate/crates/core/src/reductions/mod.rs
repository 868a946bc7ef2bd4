//! Hardness gadget constructions as concrete instance generators.
//!
//! Each construction returns the instance together with a [`GadgetReport`]
//! recording the per-element contributions, so callers can check the
//! arithmetic identities and map an optimum back to the source problem.

mod hyp2col;
mod hypergraph;
mod maxcut;
mod symmetrize;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::Matrix2x2;
use crate::rational::{self, Rational};

pub use hyp2col::hypergraph_to_mwop;
pub use hypergraph::{make_linear, Hypergraph3, FANO_LINES};
pub use maxcut::{maxcut_to_mwop_ba, maxcut_to_mwop_bc};
pub use symmetrize::mwop_to_mwsdp;

/// Contribution bookkeeping for an emitted reduction instance.
///
/// For the max-cut reductions `s` holds `[s_A, s_B, s_C, s_D]`: the weight one
/// source edge contributes when both ends are in X1, both in X2, tail in X1
/// only, head in X1 only. For the hypergraph reduction `s[i]` is the weight
/// contributed by a hyperedge with exactly `i` vertices in X1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetReport {
    pub s: [Rational; 4],
    /// Scale of the connecting arcs (epsilon or theta; zero when unused).
    pub epsilon_or_theta: Rational,
    /// Cost multiplier applied to forcing gadget arcs.
    pub k: Rational,
    /// Total weight of the forcing gadgets in their intended assignment.
    pub base_weight: Rational,
    /// Gadget vertices and the side (`true` = X1) every optimum puts them on.
    pub forced: Vec<(usize, bool)>,
}

impl GadgetReport {
    pub fn to_json(&self) -> Value {
        json!({
            "s": self.s.iter().map(rational::to_json).collect::<Vec<_>>(),
            "epsilon_or_theta": rational::to_json(&self.epsilon_or_theta),
            "k": rational::to_json(&self.k),
            "base_weight": rational::to_json(&self.base_weight),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| {
            v.get(k)
                .ok_or_else(|| Error::Malformed(format!("report is missing {k:?}")))
                .and_then(rational::from_json)
        };
        let s = v
            .get("s")
            .and_then(Value::as_array)
            .filter(|a| a.len() == 4)
            .ok_or_else(|| Error::Malformed("report field \"s\" must hold four values".into()))?;
        Ok(Self {
            s: [
                rational::from_json(&s[0])?,
                rational::from_json(&s[1])?,
                rational::from_json(&s[2])?,
                rational::from_json(&s[3])?,
            ],
            epsilon_or_theta: field("epsilon_or_theta")?,
            k: field("k")?,
            base_weight: field("base_weight")?,
            forced: Vec::new(),
        })
    }

    /// Whether `in_x1` puts every forced gadget vertex on its intended side.
    pub fn respects_forcing(&self, in_x1: &[bool]) -> bool {
        self.forced.iter().all(|&(v, side)| in_x1[v] == side)
    }
}

/// Max-cut size encoded by the optimum of a max-cut reduction instance.
pub fn recover_maxcut(opt_weight: &Rational, report: &GadgetReport, num_edges: usize) -> Result<u64> {
    let [s_a, _, s_c, _] = &report.s;
    let gain = s_c - s_a;
    if !gain.is_positive() {
        return Err(Error::Internal(format!(
            "report has non-positive cut gain {}",
            rational::format(&gain)
        )));
    }
    let value = (opt_weight - &report.base_weight - Rational::from_integer(num_edges.into()) * s_a) / gain;
    if !value.is_integer() {
        return Err(Error::NonIntegralRecovery(rational::format(&value)));
    }
    match value.to_integer().to_u64() {
        Some(k) if k as usize <= num_edges => Ok(k),
        _ => Err(Error::RecoveryOutOfRange {
            value: rational::format(&value),
            edges: num_edges,
        }),
    }
}

/// Arc of a small standalone gadget, in local vertex indices.
pub(crate) struct LocalArc<'a> {
    pub tail: usize,
    pub head: usize,
    pub cost: Rational,
    pub matrix: &'a Matrix2x2,
}

/// Enumerates a gadget on `n` vertices. Returns the best weight among
/// assignments honouring `forced` and its margin over every assignment that
/// does not.
pub(crate) fn gadget_gap(n: usize, arcs: &[LocalArc<'_>], forced: &[(usize, bool)]) -> Result<(Rational, Rational)> {
    let mut best_forced: Option<Rational> = None;
    let mut best_other: Option<Rational> = None;
    for mask in 0u32..(1 << n) {
        let in_x1 = |v: usize| mask >> v & 1 == 1;
        let w: Rational = arcs
            .iter()
            .map(|a| &a.cost * a.matrix.entry(in_x1(a.tail), in_x1(a.head)))
            .sum();
        let slot = if forced.iter().all(|&(v, s)| in_x1(v) == s) {
            &mut best_forced
        } else {
            &mut best_other
        };
        if slot.as_ref().is_none_or(|b| &w > b) {
            *slot = Some(w);
        }
    }
    let best = best_forced.expect("forced assignment exists");
    let delta = match best_other {
        Some(o) => &best - o,
        None => Rational::one(),
    };
    if !delta.is_positive() {
        return Err(Error::Internal(
            "forcing gadget does not have a unique intended optimum".into(),
        ));
    }
    Ok((best, delta))
}

/// Cost multiplier making any gadget violation cost more than `range`.
pub(crate) fn amplifier(range: &Rational, delta: &Rational) -> Rational {
    range / delta + Rational::one()
}

/// `c * (max entry - min entry)` summed: the most these arcs can swing.
pub(crate) fn weight_range<'a>(arcs: impl IntoIterator<Item = (&'a Rational, &'a Matrix2x2)>) -> Rational {
    arcs.into_iter()
        .map(|(c, m)| c * (m.max_entry() - m.min_entry()))
        .fold(Rational::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn report(s_a: i64, s_c: i64, base: i64) -> GadgetReport {
        GadgetReport {
            s: [int(s_a), int(s_a), int(s_c), int(s_c)],
            epsilon_or_theta: int(1),
            k: int(1),
            base_weight: int(base),
            forced: Vec::new(),
        }
    }

    #[test]
    fn recovery_formula() {
        let r = report(4, 6, 10);
        // 3 edges, 2 cut: 10 + 3*4 + 2*2
        assert_eq!(recover_maxcut(&int(26), &r, 3).unwrap(), 2);
        assert_eq!(recover_maxcut(&int(10), &report(4, 6, 10), 0).unwrap(), 0);
    }

    #[test]
    fn recovery_rejects_bad_weights() {
        let r = report(4, 6, 10);
        assert!(matches!(
            recover_maxcut(&(int(26) - ratio(1, 3)), &r, 3),
            Err(Error::NonIntegralRecovery(_))
        ));
        assert!(matches!(
            recover_maxcut(&int(30), &r, 3),
            Err(Error::RecoveryOutOfRange { .. })
        ));
    }

    #[test]
    fn report_json_round_trip() {
        let r = report(4, 6, 10);
        assert_eq!(GadgetReport::from_json(&r.to_json()).unwrap(), r);
    }
}
