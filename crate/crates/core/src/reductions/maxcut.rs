//! Unweighted max-cut as an oriented partition instance over two matrices.
//!
//! Every graph edge `uv` becomes an arc `uv` with `M`, plus a private forcing
//! gadget `D(x, x', y, y')` whose optimum pins `x, x'` to X1 and `y, y'` to X2,
//! plus connecting arcs that make the edge's contribution depend only on
//! whether it is cut.

use indexmap::IndexMap;
use num_traits::Zero;

use super::{amplifier, gadget_gap, weight_range, GadgetReport, LocalArc};
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::instance::{Instance, InstanceBuilder, Kind};
use crate::matrix::Matrix2x2;
use crate::rational::{self, int, ratio, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Which {
    M,
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum End {
    U,
    V,
    /// Gadget vertex by local index: 0 = x, 1 = x', 2 = y, 3 = y'.
    G(usize),
}

struct Gadget {
    names: Vec<&'static str>,
    arcs: Vec<(usize, usize, Which)>,
}

const FORCED: [(usize, bool); 4] = [(0, true), (1, true), (2, false), (3, false)];

struct Plan {
    gadget: Gadget,
    /// Arcs tying the gadget and the edge endpoints together: (tail, head, cost, matrix).
    connect: Vec<(End, End, Rational, Which)>,
    scale: Rational,
    /// Per-edge contributions `[s_A, s_B, s_C, s_D]`.
    s: [Rational; 4],
}

fn flags(m: &Matrix2x2) -> (bool, bool, bool) {
    (m.property_a(), m.property_b(), m.property_c())
}

fn hypothesis_error(m: &Matrix2x2, r: &Matrix2x2, need: &str) -> Error {
    Error::HypothesisViolated(format!("M = {m}, R = {r}: need {need}"))
}

fn half_edge_terms(m: &Matrix2x2) -> [Rational; 4] {
    let (m11, m12, m21, m22) = (&m.m11, &m.m12, &m.m21, &m.m22);
    let half = ratio(1, 2);
    [
        m11 + (int(2) * m11 + m12 + m21) * &half,
        m22 + (int(2) * m22 + m12 + m21) * &half,
        m12 + (int(2) * m21 + m11 + m22) * &half,
        m21 + (int(2) * m12 + m11 + m22) * &half,
    ]
}

fn common_connect() -> Vec<(End, End, Rational, Which)> {
    let half = ratio(1, 2);
    vec![
        (End::U, End::V, int(1), Which::M),
        (End::V, End::G(1), half.clone(), Which::M),
        (End::G(1), End::U, half.clone(), Which::M),
        (End::V, End::G(3), half.clone(), Which::M),
        (End::G(3), End::U, half, Which::M),
    ]
}

fn plan_bc(m: &Matrix2x2, r: &Matrix2x2) -> Plan {
    let m_flat = m.m11 == m.m12 && m.m12 == m.m21;
    let r_flat = r.m22 == r.m12 && r.m12 == r.m21;
    use Which::{M, R};
    let gadget = match (m_flat, r_flat) {
        (false, false) => Gadget {
            names: vec!["x", "x'", "y", "y'", "x''", "y''"],
            arcs: vec![(0, 1, M), (1, 4, M), (4, 0, M), (2, 3, R), (3, 5, R), (5, 2, R)],
        },
        (true, true) => Gadget {
            names: vec!["x", "x'", "y", "y'", "x2", "x3", "y2", "y3"],
            arcs: vec![
                (0, 4, M),
                (0, 5, M),
                (1, 4, M),
                (1, 5, M),
                (6, 7, M),
                (2, 6, R),
                (2, 7, R),
                (3, 6, R),
                (3, 7, R),
                (4, 5, R),
            ],
        },
        // the shared apex z settles on whichever side its flat matrix favours
        _ => Gadget {
            names: vec!["x", "x'", "y", "y'", "z"],
            arcs: vec![(0, 1, M), (1, 4, M), (4, 0, M), (2, 3, R), (3, 4, R), (4, 2, R)],
        },
    };
    let eps = (&m.m11 - &m.m22) / (&r.m22 - &r.m11);
    let mut connect = common_connect();
    for (t, h) in [(End::U, End::G(0)), (End::G(0), End::V), (End::V, End::G(2)), (End::G(2), End::U)] {
        connect.push((t, h, eps.clone(), R));
    }
    let base = half_edge_terms(m);
    let cut = &r.m11 + &r.m22 + &r.m12 + &r.m21;
    let s = [
        &base[0] + &eps * (int(2) * &r.m11 + &r.m12 + &r.m21),
        &base[1] + &eps * (int(2) * &r.m22 + &r.m12 + &r.m21),
        &base[2] + &eps * &cut,
        &base[3] + &eps * &cut,
    ];
    Plan {
        gadget,
        connect,
        scale: eps,
        s,
    }
}

fn plan_ba(m: &Matrix2x2, r: &Matrix2x2) -> Plan {
    use Which::R;
    let forward = r.m12 > r.m21;
    let gadget = Gadget {
        names: vec!["x", "x'", "y", "y'"],
        arcs: if forward {
            vec![(0, 2, R), (1, 3, R)]
        } else {
            vec![(2, 0, R), (3, 1, R)]
        },
    };
    let r_star = (&r.m12).max(&r.m21).clone();
    let eps = (&m.m11 - &m.m22) / (&r_star - &r.m11);
    let mut connect = common_connect();
    for end in [End::U, End::V] {
        if forward {
            connect.push((End::G(0), end, eps.clone(), R));
        } else {
            connect.push((end, End::G(0), eps.clone(), R));
        }
    }
    let base = half_edge_terms(m);
    let s = [
        &base[0] + &eps * int(2) * &r.m11,
        &base[1] + &eps * int(2) * &r_star,
        &base[2] + &eps * (&r_star + &r.m11),
        &base[3] + &eps * (&r_star + &r.m11),
    ];
    Plan {
        gadget,
        connect,
        scale: eps,
        s,
    }
}

fn build(
    g: &UndirectedGraph,
    m: &Matrix2x2,
    r: &Matrix2x2,
    mirrored: bool,
    plan: impl Fn(&Matrix2x2, &Matrix2x2) -> Plan,
) -> Result<(Instance, GadgetReport)> {
    let (mm, rr) = if mirrored {
        (m.flipped(), r.flipped())
    } else {
        (m.clone(), r.clone())
    };
    let plan = plan(&mm, &rr);
    let pick = |w: Which| if w == Which::M { &mm } else { &rr };

    let local: Vec<LocalArc<'_>> = plan
        .gadget
        .arcs
        .iter()
        .map(|&(t, h, w)| LocalArc {
            tail: t,
            head: h,
            cost: int(1),
            matrix: pick(w),
        })
        .collect();
    let (gadget_opt, delta) = gadget_gap(plan.gadget.names.len(), &local, &FORCED)?;

    // with the gadget in its intended state, an edge's connecting arcs must
    // contribute exactly the reported s-value for each endpoint placement
    for (i, (u_in, v_in)) in [(true, true), (false, false), (true, false), (false, true)]
        .into_iter()
        .enumerate()
    {
        let side = |e: End| match e {
            End::U => u_in,
            End::V => v_in,
            End::G(j) => FORCED[j].1,
        };
        let got: Rational = plan
            .connect
            .iter()
            .map(|(t, h, c, w)| c * pick(*w).entry(side(*t), side(*h)))
            .sum();
        if got != plan.s[i] {
            return Err(Error::Internal(format!(
                "edge contribution {} disagrees with the closed form {}",
                rational::format(&got),
                rational::format(&plan.s[i])
            )));
        }
    }

    let per_edge = weight_range(plan.connect.iter().map(|(_, _, c, w)| (c, pick(*w))));
    let range = &per_edge * int(g.edges.len() as i64);
    let k = amplifier(&range, &delta);

    let mut b = InstanceBuilder::new(Kind::Oriented);
    let mi = b.matrix("M", mm.clone());
    let ri = b.matrix("R", rr.clone());
    let index = |w: Which| if w == Which::M { mi } else { ri };
    for id in &g.vertices {
        b.vertex(id.clone())?;
    }
    let mut forced = Vec::new();
    for (e, &edge) in g.edges.iter().enumerate() {
        let (u, v) = g.oriented(edge);
        let ids: Vec<usize> = plan
            .gadget
            .names
            .iter()
            .map(|name| b.fresh_vertex(&format!("e{e}.{name}")))
            .collect();
        let resolve = |end: End| match end {
            End::U => u,
            End::V => v,
            End::G(j) => ids[j],
        };
        for (t, h, c, w) in &plan.connect {
            b.arc(resolve(*t), resolve(*h), c.clone(), index(*w));
        }
        for &(t, h, w) in &plan.gadget.arcs {
            b.arc(ids[t], ids[h], k.clone(), index(w));
        }
        forced.extend(FORCED.iter().map(|&(j, side)| (ids[j], side != mirrored)));
    }

    let mut instance = b.build()?;
    if mirrored {
        let mut family = IndexMap::new();
        family.insert("M".to_string(), m.clone());
        family.insert("R".to_string(), r.clone());
        instance = instance.with_family(family)?;
    }
    let base_weight = if g.edges.is_empty() {
        Rational::zero()
    } else {
        &k * &gadget_opt * int(g.edges.len() as i64)
    };
    let report = GadgetReport {
        s: plan.s,
        epsilon_or_theta: plan.scale,
        k,
        base_weight,
        forced,
    };
    Ok((instance, report))
}

/// Max-cut reduction for `M` with property (b) only (not (a), not (c)) and `R`
/// with (c) but not (b); the mirrored pair ((c) only, (b) not (c)) is also
/// accepted. Graph vertices keep their ids and indices.
pub fn maxcut_to_mwop_bc(g: &UndirectedGraph, m: &Matrix2x2, r: &Matrix2x2) -> Result<(Instance, GadgetReport)> {
    let mirrored = match (flags(m), flags(r)) {
        ((false, true, false), (_, false, true)) => false,
        ((false, false, true), (_, true, false)) => true,
        _ => {
            return Err(hypothesis_error(
                m,
                r,
                "M with (b) but not (a) or (c) and R with (c) but not (b), or the mirror image",
            ))
        }
    };
    build(g, m, r, mirrored, plan_bc)
}

/// Max-cut reduction for `M` with property (b) only and `R` with (a) only;
/// the mirrored pair ((c) only, (a) only) is also accepted.
pub fn maxcut_to_mwop_ba(g: &UndirectedGraph, m: &Matrix2x2, r: &Matrix2x2) -> Result<(Instance, GadgetReport)> {
    let mirrored = match (flags(m), flags(r)) {
        ((false, true, false), (true, false, false)) => false,
        ((false, false, true), (true, false, false)) => true,
        _ => {
            return Err(hypothesis_error(
                m,
                r,
                "M with (b) but not (a) or (c) and R with (a) but not (b) or (c), or the mirror image",
            ))
        }
    };
    build(g, m, r, mirrored, plan_ba)
}
