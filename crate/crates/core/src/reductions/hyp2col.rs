//! Hypergraph 2-coloring as an oriented partition instance over one matrix.

use indexmap::IndexMap;
use num_traits::Zero;

use super::hypergraph::Hypergraph3;
use super::{amplifier, gadget_gap, weight_range, GadgetReport, LocalArc};
use crate::error::{Error, Result};
use crate::instance::{Instance, InstanceBuilder, Kind};
use crate::matrix::Matrix2x2;
use crate::rational::{int, Rational};

fn check_hypothesis(m: &Matrix2x2) -> Result<()> {
    if m.property_a() {
        return Err(Error::HypothesisViolated(format!(
            "{m} satisfies m11 + m22 >= m12 + m21"
        )));
    }
    let diag = (&m.m11).max(&m.m22);
    let off = (&m.m12).max(&m.m21);
    if diag >= off {
        return Err(Error::HypothesisViolated(format!(
            "{m} needs max(m11, m22) < max(m12, m21)"
        )));
    }
    Ok(())
}

/// Builds an oriented instance whose optimum reaches `threshold` exactly when
/// `h` is 2-colorable. Hypergraph vertices keep their ids and indices; the
/// X1 side of an optimum restricted to them is a proper coloring when one exists.
///
/// Each hyperedge becomes a directed 3-cycle. When `m11 != m22`, a forcing
/// gadget pins an apex vertex to one side and apex arcs weighted by vertex
/// degree equalize the monochromatic and bichromatic contributions.
pub fn hypergraph_to_mwop(h: &Hypergraph3, m: &Matrix2x2) -> Result<(Instance, Rational, GadgetReport)> {
    check_hypothesis(m)?;
    if let Some((i, j)) = h.first_overlap() {
        return Err(Error::NotLinear(i, j));
    }
    // the construction assumes m11 >= m22; otherwise build for the flipped
    // matrix, whose weights equal the original's on complemented partitions
    let mirrored = m.m22 > m.m11;
    let mm = if mirrored { m.flipped() } else { m.clone() };
    let edges = int(h.edges.len() as i64);

    let mut b = InstanceBuilder::new(Kind::Oriented);
    let mi = b.matrix("M", mm.clone());
    for id in &h.vertices {
        b.vertex(id.clone())?;
    }
    for e in &h.edges {
        b.arc(e[0], e[1], int(1), mi);
        b.arc(e[1], e[2], int(1), mi);
        b.arc(e[2], e[0], int(1), mi);
    }
    let (m11, m12, m21, m22) = (&mm.m11, &mm.m12, &mm.m21, &mm.m22);

    let (report, threshold) = if m11 == m22 {
        let s = [
            int(3) * m22,
            m22 + m12 + m21,
            m11 + m12 + m21,
            int(3) * m11,
        ];
        let threshold = &edges * &s[2];
        let report = GadgetReport {
            s,
            epsilon_or_theta: Rational::zero(),
            k: int(1),
            base_weight: Rational::zero(),
            forced: Vec::new(),
        };
        (report, threshold)
    } else {
        let m_star = m12.max(m21).clone();
        let theta = (m11 - m22) / (&m_star - m11);

        // forcing gadget in local indices: x = 0, y = 1, optional z = 2
        let (n, local): (usize, Vec<(usize, usize, i64)>) = if m12 > m21 {
            (2, vec![(0, 1, 1)])
        } else if m21 > m12 {
            (2, vec![(1, 0, 1)])
        } else {
            (3, vec![(0, 1, 2), (1, 2, 2), (2, 0, 1)])
        };
        let local_arcs: Vec<LocalArc<'_>> = local
            .iter()
            .map(|&(t, hd, c)| LocalArc {
                tail: t,
                head: hd,
                cost: int(c),
                matrix: &mm,
            })
            .collect();
        let (gadget_opt, delta) = gadget_gap(n, &local_arcs, &[(0, true), (1, false)])?;

        let names = ["gadget.x", "gadget.y", "gadget.z"];
        let ids: Vec<usize> = names[..n].iter().map(|s| b.fresh_vertex(s)).collect();
        let x = ids[0];
        let apex_out = m12 > m21;
        let mut apex = Vec::with_capacity(h.num_vertices());
        for (v, d) in h.degrees().into_iter().enumerate() {
            let c = &theta * int(d as i64);
            if apex_out {
                b.arc(x, v, c.clone(), mi);
            } else {
                b.arc(v, x, c.clone(), mi);
            }
            apex.push(c);
        }

        let one = int(1);
        let range = weight_range(
            std::iter::repeat_n((&one, &mm), 3 * h.edges.len()).chain(apex.iter().map(|c| (c, &mm))),
        );
        let k = amplifier(&range, &delta);
        for &(t, hd, c) in &local {
            b.arc(ids[t], ids[hd], &k * int(c), mi);
        }

        let s = [
            int(3) * m22 + int(3) * &theta * &m_star,
            m22 + m12 + m21 + &theta * (m11 + int(2) * &m_star),
            m11 + m12 + m21 + &theta * (int(2) * m11 + &m_star),
            int(3) * m11 + int(3) * &theta * m11,
        ];
        let base_weight = &k * &gadget_opt;
        let threshold = &base_weight + &edges * &s[1];
        let report = GadgetReport {
            s,
            epsilon_or_theta: theta,
            k,
            base_weight,
            forced: vec![(ids[0], !mirrored), (ids[1], mirrored)],
        };
        (report, threshold)
    };

    let mut instance = b.build()?;
    if mirrored {
        let mut family = IndexMap::new();
        family.insert("M".to_string(), m.clone());
        instance = instance.with_family(family)?;
    }
    Ok((instance, threshold, report))
}
