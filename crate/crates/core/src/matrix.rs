use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// The three tractability predicates of a 2x2 weight matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    /// `m11 + m22 >= m12 + m21`
    A,
    /// `m11` is a maximum entry.
    B,
    /// `m22` is a maximum entry.
    C,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::A => "a",
            Property::B => "b",
            Property::C => "c",
        })
    }
}

/// A 2x2 weight matrix. Entry `m_rc` is used when the tail of an arc lies in
/// part `X_r` and the head lies in part `X_c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix2x2 {
    pub m11: Rational,
    pub m12: Rational,
    pub m21: Rational,
    pub m22: Rational,
}

impl Matrix2x2 {
    pub fn new(m11: Rational, m12: Rational, m21: Rational, m22: Rational) -> Self {
        Self { m11, m12, m21, m22 }
    }

    /// Row-major integer constructor, handy in tests and gadgets.
    pub fn from_ints(rows: [[i64; 2]; 2]) -> Self {
        Self::new(
            rational::int(rows[0][0]),
            rational::int(rows[0][1]),
            rational::int(rows[1][0]),
            rational::int(rows[1][1]),
        )
    }

    /// Entry for an arc whose tail is in X1 iff `tail_in_x1` and likewise for the head.
    pub fn entry(&self, tail_in_x1: bool, head_in_x1: bool) -> &Rational {
        match (tail_in_x1, head_in_x1) {
            (true, true) => &self.m11,
            (true, false) => &self.m12,
            (false, true) => &self.m21,
            (false, false) => &self.m22,
        }
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.m11, &self.m12, &self.m21, &self.m22]
    }

    pub fn max_entry(&self) -> &Rational {
        self.entries().into_iter().max().expect("four entries")
    }

    pub fn min_entry(&self) -> &Rational {
        self.entries().into_iter().min().expect("four entries")
    }

    pub fn property_a(&self) -> bool {
        &self.m11 + &self.m22 >= &self.m12 + &self.m21
    }

    pub fn property_b(&self) -> bool {
        &self.m11 == self.max_entry()
    }

    pub fn property_c(&self) -> bool {
        &self.m22 == self.max_entry()
    }

    pub fn satisfies(&self, p: Property) -> bool {
        match p {
            Property::A => self.property_a(),
            Property::B => self.property_b(),
            Property::C => self.property_c(),
        }
    }

    /// Swaps the roles of X1 and X2: `m11 <-> m22`, `m12 <-> m21`.
    ///
    /// The weight of any partition under `self` equals the weight of the
    /// complementary partition under `self.flipped()`.
    pub fn flipped(&self) -> Self {
        Self::new(
            self.m22.clone(),
            self.m21.clone(),
            self.m12.clone(),
            self.m11.clone(),
        )
    }

    /// `m11 + m22 - m12 - m21`
    pub fn diagonal_excess(&self) -> Rational {
        &self.m11 + &self.m22 - &self.m12 - &self.m21
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Malformed(format!("expected a 2x2 matrix [[r,r],[r,r]], got {v}"));
        let rows = v.as_array().filter(|r| r.len() == 2).ok_or_else(bad)?;
        let mut cells = Vec::with_capacity(4);
        for row in rows {
            let row = row.as_array().filter(|r| r.len() == 2).ok_or_else(bad)?;
            for cell in row {
                cells.push(rational::from_json(cell)?);
            }
        }
        let mut it = cells.into_iter();
        let mut next = || it.next().expect("four cells");
        Ok(Self::new(next(), next(), next(), next()))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(vec![
            Value::Array(vec![rational::to_json(&self.m11), rational::to_json(&self.m12)]),
            Value::Array(vec![rational::to_json(&self.m21), rational::to_json(&self.m22)]),
        ])
    }

    /// Parses the CLI form `[[0,1],[1,0]]` (entries may be quoted rationals).
    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::Malformed(format!("matrix {text:?}: {e}")))?;
        Self::from_json(&v)
    }
}

impl fmt::Display for Matrix2x2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            rational::format(&self.m11),
            rational::format(&self.m12),
            rational::format(&self.m21),
            rational::format(&self.m22)
        )
    }
}

impl serde::Serialize for Matrix2x2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Matrix2x2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Matrix2x2::from_json(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_family_properties() {
        let m1 = Matrix2x2::from_ints([[4, 2], [2, 6]]);
        assert!(m1.property_a() && !m1.property_b() && m1.property_c());
        let m2 = Matrix2x2::from_ints([[7, 5], [6, 2]]);
        assert!(!m2.property_a() && m2.property_b() && !m2.property_c());
        for r in [[[2, 0], [2, 3]], [[3, 4], [1, 3]], [[4, 2], [5, 5]]] {
            assert!(Matrix2x2::from_ints(r).property_a());
        }
    }

    #[test]
    fn ties_count_as_maximum() {
        let m = Matrix2x2::from_ints([[3, 3], [1, 3]]);
        assert!(m.property_b() && m.property_c() && m.property_a());
    }

    #[test]
    fn negative_entries_are_fine() {
        let m = Matrix2x2::from_ints([[-1, 0], [0, 0]]);
        assert!(!m.property_a() && !m.property_b() && m.property_c());
    }

    #[test]
    fn flip_swaps_b_and_c() {
        let m = Matrix2x2::from_ints([[7, 5], [6, 2]]);
        let f = m.flipped();
        assert_eq!(f, Matrix2x2::from_ints([[2, 6], [5, 7]]));
        assert_eq!(m.property_b(), f.property_c());
        assert_eq!(m.property_a(), f.property_a());
        assert_eq!(f.flipped(), m);
    }

    #[test]
    fn json_parse() {
        let m = Matrix2x2::parse(r#"[[0, "1/2"], ["0.25", -1]]"#).unwrap();
        assert_eq!(m.m12, rational::ratio(1, 2));
        assert_eq!(m.m21, rational::ratio(1, 4));
        assert!(Matrix2x2::parse("[[1,2,3],[4,5]]").is_err());
        assert!(Matrix2x2::parse("[[1,2]]").is_err());
    }
}
