//! Dichotomy classification of a matrix family.
//!
//! A family is polynomial-time solvable when every matrix satisfies the same
//! one of properties (a), (b), (c); otherwise it is NP-hard. When several
//! polynomial branches apply, the cheapest solver wins: (b), then (c), then (a).

use indexmap::IndexMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{Matrix2x2, Property};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    PolyA,
    PolyB,
    PolyC,
    Hard,
}

impl Case {
    pub fn is_poly(self) -> bool {
        self != Case::Hard
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PropertyFlags {
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

impl PropertyFlags {
    pub fn of(m: &Matrix2x2) -> Self {
        Self {
            a: m.property_a(),
            b: m.property_b(),
            c: m.property_c(),
        }
    }

    pub fn get(&self, p: Property) -> bool {
        match p {
            Property::A => self.a,
            Property::B => self.b,
            Property::C => self.c,
        }
    }
}

/// For a hard family: the first matrix (declaration order) violating each property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub a: String,
    pub b: String,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub case: Case,
    pub per_matrix: IndexMap<String, PropertyFlags>,
    pub witnesses: Option<Witnesses>,
}

pub fn classify(family: &IndexMap<String, Matrix2x2>) -> Result<Verdict> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let per_matrix: IndexMap<String, PropertyFlags> = family
        .iter()
        .map(|(id, m)| (id.clone(), PropertyFlags::of(m)))
        .collect();
    let first_violator = |p: Property| {
        per_matrix
            .iter()
            .find(|(_, f)| !f.get(p))
            .map(|(id, _)| id.clone())
    };
    let (va, vb, vc) = (
        first_violator(Property::A),
        first_violator(Property::B),
        first_violator(Property::C),
    );
    let (case, witnesses) = match (va, vb, vc) {
        (_, None, _) => (Case::PolyB, None),
        (_, _, None) => (Case::PolyC, None),
        (None, _, _) => (Case::PolyA, None),
        (Some(a), Some(b), Some(c)) => (Case::Hard, Some(Witnesses { a, b, c })),
    };
    Ok(Verdict {
        case,
        per_matrix,
        witnesses,
    })
}
