//! Integer-scaled arc weight tables for the enumeration-heavy solvers.
//!
//! Every `c * m_rc` is multiplied by the common denominator of all of them,
//! so partition weights become integer sums. `i128` is used whenever the
//! total weight range provably fits, `BigInt` otherwise.

use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::instance::Instance;
use crate::rational::{self, Rational};

pub(crate) trait Score:
    Clone + Ord + Zero + Add<Output = Self> + Sub<Output = Self> + Send + Sync
{
    fn to_bigint(&self) -> BigInt;
}

impl Score for i128 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Score for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Index into `[m11, m12, m21, m22]`.
#[inline]
pub(crate) fn entry_index(tail_in_x1: bool, head_in_x1: bool) -> usize {
    (usize::from(!tail_in_x1) << 1) | usize::from(!head_in_x1)
}

pub(crate) struct ScaledArcs<T> {
    pub table: Vec<[T; 4]>,
    pub ends: Vec<(usize, usize)>,
    pub incidence: Vec<Vec<usize>>,
    pub scale: BigInt,
}

pub(crate) enum Scaled {
    Small(ScaledArcs<i128>),
    Big(ScaledArcs<BigInt>),
}

impl Scaled {
    pub fn new(instance: &Instance) -> Self {
        let weights: Vec<[Rational; 4]> = instance
            .arcs()
            .iter()
            .map(|a| {
                let m = instance.matrix_of(a);
                [
                    &a.cost * &m.m11,
                    &a.cost * &m.m12,
                    &a.cost * &m.m21,
                    &a.cost * &m.m22,
                ]
            })
            .collect();
        let scale = rational::common_denominator(weights.iter().flatten());
        let table: Vec<[BigInt; 4]> = weights
            .iter()
            .map(|w| std::array::from_fn(|i| rational::scale_to_int(&w[i], &scale)))
            .collect();
        let ends = instance.arcs().iter().map(|a| (a.tail, a.head)).collect();
        let incidence = instance.incidence();

        // Any partial sum or difference of sums is bounded by twice the
        // total absolute weight.
        let bound: BigInt = table
            .iter()
            .map(|w| w.iter().map(|x| x.abs()).max().unwrap_or_default())
            .sum::<BigInt>()
            * 4;
        if bound.to_i128().is_some() {
            Scaled::Small(ScaledArcs {
                table: table
                    .into_iter()
                    .map(|w| w.map(|x| x.to_i128().expect("bounded")))
                    .collect(),
                ends,
                incidence,
                scale,
            })
        } else {
            Scaled::Big(ScaledArcs {
                table,
                ends,
                incidence,
                scale,
            })
        }
    }
}

impl<T: Score> ScaledArcs<T> {
    pub fn weight(&self, in_x1: &[bool]) -> T {
        self.table
            .iter()
            .zip(&self.ends)
            .fold(T::zero(), |acc, (w, &(t, h))| {
                acc + w[entry_index(in_x1[t], in_x1[h])].clone()
            })
    }

    /// Change in weight if `v` switches sides.
    pub fn flip_delta(&self, in_x1: &[bool], v: usize) -> T {
        let mut delta = T::zero();
        for &a in &self.incidence[v] {
            let (t, h) = self.ends[a];
            let w = &self.table[a];
            let before = w[entry_index(in_x1[t], in_x1[h])].clone();
            let nt = if t == v { !in_x1[t] } else { in_x1[t] };
            let nh = if h == v { !in_x1[h] } else { in_x1[h] };
            delta = delta + w[entry_index(nt, nh)].clone() - before;
        }
        delta
    }

    pub fn to_rational(&self, value: &T) -> Rational {
        Rational::new(value.to_bigint(), self.scale.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{InstanceBuilder, Kind};
    use crate::matrix::Matrix2x2;
    use crate::partition::{partition_weight, Partition};
    use crate::rational::ratio;

    #[test]
    fn scaled_weight_matches_rational() {
        let mut b = InstanceBuilder::new(Kind::General);
        let m = b.matrix("M", Matrix2x2::from_ints([[1, -2], [3, 0]]));
        let v: Vec<usize> = (0..3).map(|i| b.vertex(format!("v{i}")).unwrap()).collect();
        b.arc(v[0], v[1], ratio(1, 3), m);
        b.arc(v[1], v[2], ratio(5, 4), m);
        b.arc(v[2], v[0], ratio(0, 1), m);
        let inst = b.build().unwrap();
        let Scaled::Small(s) = Scaled::new(&inst) else {
            panic!("small instance should use i128")
        };
        for mask in 0..8u32 {
            let flags: Vec<bool> = (0..3).map(|i| mask >> i & 1 == 1).collect();
            let p = Partition::from_x1_flags(&flags);
            assert_eq!(s.to_rational(&s.weight(&flags)), partition_weight(&inst, &p));
            for v in 0..3 {
                let mut flipped = flags.clone();
                flipped[v] = !flipped[v];
                assert_eq!(s.weight(&flags) + s.flip_delta(&flags, v), s.weight(&flipped));
            }
        }
    }
}
