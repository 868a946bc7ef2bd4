//! Bipartitions and their weights.

use num_traits::Zero;

use crate::instance::{Arc, Instance};
use crate::matrix::Matrix2x2;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    X1,
    X2,
}

impl Side {
    pub fn is_x1(self) -> bool {
        self == Side::X1
    }

    pub fn other(self) -> Side {
        match self {
            Side::X1 => Side::X2,
            Side::X2 => Side::X1,
        }
    }

    pub fn from_x1(in_x1: bool) -> Side {
        if in_x1 {
            Side::X1
        } else {
            Side::X2
        }
    }
}

/// A bipartition `(X1, X2)` of an instance's vertices, indexed in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    sides: Vec<Side>,
}

impl Partition {
    pub fn new(sides: Vec<Side>) -> Self {
        Self { sides }
    }

    pub fn all(n: usize, side: Side) -> Self {
        Self {
            sides: vec![side; n],
        }
    }

    pub fn from_x1_flags(flags: &[bool]) -> Self {
        Self::new(flags.iter().map(|&b| Side::from_x1(b)).collect())
    }

    /// Builds from the `X1` members; everything else lands in `X2`.
    pub fn from_x1_set(n: usize, x1: impl IntoIterator<Item = usize>) -> Self {
        let mut p = Self::all(n, Side::X2);
        for v in x1 {
            p.sides[v] = Side::X1;
        }
        p
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn in_x1(&self, v: usize) -> bool {
        self.sides[v].is_x1()
    }

    pub fn set(&mut self, v: usize, side: Side) {
        self.sides[v] = side;
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn x1(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.in_x1(v)).collect()
    }

    pub fn x2(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| !self.in_x1(v)).collect()
    }

    pub fn complement(&self) -> Self {
        Self::new(self.sides.iter().map(|s| s.other()).collect())
    }

    /// Membership flags in declaration order, `true` for X1.
    pub fn x1_flags(&self) -> Vec<bool> {
        self.sides.iter().map(|s| s.is_x1()).collect()
    }

    pub fn names<'a>(&self, instance: &'a Instance) -> (Vec<&'a str>, Vec<&'a str>) {
        let v = instance.vertices();
        (
            self.x1().into_iter().map(|i| v[i].as_str()).collect(),
            self.x2().into_iter().map(|i| v[i].as_str()).collect(),
        )
    }
}

/// `c(uv)` times the matrix entry selected by the sides of the endpoints.
pub fn arc_weight(arc: &Arc, matrix: &Matrix2x2, partition: &Partition) -> Rational {
    &arc.cost * matrix.entry(partition.in_x1(arc.tail), partition.in_x1(arc.head))
}

/// Sum of [`arc_weight`] over all arcs.
pub fn partition_weight(instance: &Instance, partition: &Partition) -> Rational {
    assert_eq!(
        partition.len(),
        instance.num_vertices(),
        "partition does not cover the instance"
    );
    instance
        .arcs()
        .iter()
        .fold(Rational::zero(), |acc, a| {
            acc + arc_weight(a, instance.matrix_of(a), partition)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{InstanceBuilder, Kind};
    use crate::rational::int;

    fn hard_path() -> Instance {
        let mut b = InstanceBuilder::new(Kind::Oriented);
        let m1 = b.matrix("M1", Matrix2x2::from_ints([[4, 2], [2, 6]]));
        let m2 = b.matrix("M2", Matrix2x2::from_ints([[7, 5], [6, 2]]));
        let x = b.vertex("x").unwrap();
        let y = b.vertex("y").unwrap();
        let z = b.vertex("z").unwrap();
        b.arc(x, y, int(1), m1);
        b.arc(y, z, int(2), m2);
        b.build().unwrap()
    }

    #[test]
    fn arc_weight_table() {
        let inst = hard_path();
        let a = &inst.arcs()[0];
        let p = Partition::from_x1_set(3, [0]);
        assert_eq!(arc_weight(a, inst.matrix_of(a), &p), int(2));
        let b = &inst.arcs()[1];
        let p = Partition::from_x1_set(3, [2]);
        assert_eq!(arc_weight(b, inst.matrix_of(b), &p), int(12));
        let zero = Arc {
            cost: int(0),
            ..b.clone()
        };
        assert_eq!(arc_weight(&zero, inst.matrix_of(b), &p), int(0));
    }

    #[test]
    fn hard_path_all_x1() {
        let inst = hard_path();
        assert_eq!(partition_weight(&inst, &Partition::all(3, Side::X1)), int(18));
    }

    #[test]
    fn empty_arc_set_weighs_zero() {
        let mut b = InstanceBuilder::new(Kind::General);
        b.vertex("a").unwrap();
        b.vertex("b").unwrap();
        let inst = b.build().unwrap();
        assert_eq!(partition_weight(&inst, &Partition::from_x1_set(2, [1])), int(0));
    }
}
