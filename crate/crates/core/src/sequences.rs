//! Reference integer sequences with the generator that reproduces each one.

use serde::Serialize;

use crate::catalog::*;
use crate::error::{Error, Result};
use crate::relations::{Budget, ClassPartition, Relation};

#[derive(Debug, Clone, Copy)]
pub enum Source {
    ClassAvoid(Relation, &'static str),
    ClassMatch(Relation, &'static str),
    ClassCount(Relation),
}

#[derive(Debug, Clone, Copy)]
pub struct SequenceTable {
    pub id: &'static str,
    pub description: &'static str,
    /// `n` of the first value.
    pub offset: usize,
    pub values: &'static [u64],
    pub source: Source,
}

impl SequenceTable {
    pub fn value_at(&self, n: usize) -> Option<u64> {
        n.checked_sub(self.offset).and_then(|i| self.values.get(i)).copied()
    }

    pub fn last_n(&self) -> usize {
        self.offset + self.values.len() - 1
    }

    pub fn compute(&self, n: usize, budget: Budget) -> Result<u64> {
        let rel = match self.source {
            Source::ClassAvoid(r, _) | Source::ClassMatch(r, _) | Source::ClassCount(r) => r,
        };
        let part = ClassPartition::new(rel, n, budget)?;
        Ok(match self.source {
            Source::ClassAvoid(_, p) => part.class_avoider_count(&named(p)),
            Source::ClassMatch(_, p) => part.class_matchers(&named(p)).len() as u64,
            Source::ClassCount(_) => part.len() as u64,
        })
    }
}

pub static TABLES: &[SequenceTable] = &[
    SequenceTable {
        id: "A000041",
        description: "conjugacy classes of S_n (partitions of n)",
        offset: 1,
        values: &[1, 2, 3, 5, 7, 11, 15, 22, 30],
        source: Source::ClassCount(Relation::Conjugacy),
    },
    SequenceTable {
        id: "A000166",
        description: "conjugacy class-avoiders of the derangement pattern",
        offset: 1,
        values: &[0, 1, 2, 9, 44, 265, 1854, 14833, 133496],
        source: Source::ClassAvoid(Relation::Conjugacy, DERANGEMENT_PATTERN),
    },
    SequenceTable {
        id: "A000085",
        description: "conjugacy class-avoiders of the involution pattern",
        offset: 1,
        values: &[1, 2, 4, 10, 26, 76, 232, 764, 2620],
        source: Source::ClassAvoid(Relation::Conjugacy, INVOLUTION_PATTERN),
    },
    SequenceTable {
        id: "A000085-knuth",
        description: "Knuth classes of S_n (standard Young tableaux with n cells)",
        offset: 1,
        values: &[1, 2, 4, 10, 26, 76, 232, 764, 2620],
        source: Source::ClassCount(Relation::Knuth),
    },
    SequenceTable {
        id: "transpositions",
        description: "conjugacy class-avoiders of the transposition pattern",
        offset: 1,
        values: &[1, 1, 4, 7, 11, 16, 22, 29, 37],
        source: Source::ClassAvoid(Relation::Conjugacy, TRANSPOSITION_PATTERN),
    },
    SequenceTable {
        id: "A000124",
        description: "conjugacy class-avoiders of the central polygonal pattern",
        offset: 1,
        values: &[1, 2, 4, 7, 11, 16, 22, 29, 37],
        source: Source::ClassAvoid(Relation::Conjugacy, CENTRAL_POLYGONAL_PATTERN),
    },
    SequenceTable {
        id: "fpf-involutions",
        description: "conjugacy class-avoiders of the fixed-point-free involution pattern",
        offset: 1,
        values: &[1, 2, 3, 4, 1, 16, 1, 106, 1],
        source: Source::ClassAvoid(Relation::Conjugacy, FIXED_POINT_FREE_INVOLUTION_PATTERN),
    },
    SequenceTable {
        id: "three-cycles",
        description: "conjugacy class-avoiders of the 3-cycle pattern",
        offset: 1,
        values: &[1, 2, 3, 9, 21, 41, 71, 113, 169],
        source: Source::ClassAvoid(Relation::Conjugacy, THREE_CYCLE_PATTERN),
    },
    SequenceTable {
        id: "two-three-cycles",
        description: "conjugacy class-avoiders of the 2-and-3-cycle pattern",
        offset: 1,
        values: &[1, 2, 4, 15, 31, 56, 92, 141, 205],
        source: Source::ClassAvoid(Relation::Conjugacy, TWO_THREE_CYCLE_PATTERN),
    },
    SequenceTable {
        id: "A009490",
        description: "order classes of S_n (distinct orders)",
        offset: 1,
        values: &[1, 2, 3, 4, 6, 6, 9, 11, 14],
        source: Source::ClassCount(Relation::Order),
    },
    SequenceTable {
        id: "order-derangements",
        description: "order class-avoiders of the derangement pattern",
        offset: 1,
        values: &[0, 1, 2, 6, 44, 0, 1644, 7728, 84384],
        source: Source::ClassAvoid(Relation::Order, DERANGEMENT_PATTERN),
    },
    SequenceTable {
        id: "A000085-order",
        description: "order class-avoiders of the involution pattern",
        offset: 1,
        values: &[1, 2, 4, 10, 26, 76, 232, 764, 2620],
        source: Source::ClassAvoid(Relation::Order, INVOLUTION_PATTERN),
    },
    SequenceTable {
        id: "A000079",
        description: "Knuth class-avoiders of 231",
        offset: 1,
        values: &[1, 2, 4, 8, 16, 32, 64, 128, 256],
        source: Source::ClassAvoid(Relation::Knuth, "231"),
    },
    SequenceTable {
        id: "A112849",
        description: "Knuth class-avoiders of the graph pattern",
        offset: 1,
        values: &[1, 2, 4, 11, 36, 127, 463, 1717, 6436],
        source: Source::ClassAvoid(Relation::Knuth, GRAPH_PATTERN),
    },
    SequenceTable {
        id: "A000108",
        description: "Knuth class-matchers of the first-two pattern (Catalan, shifted)",
        offset: 2,
        values: &[1, 2, 5, 14, 42, 132, 429, 1430],
        source: Source::ClassMatch(Relation::Knuth, FIRST_TWO_PATTERN),
    },
    SequenceTable {
        id: "A002619",
        description: "toric classes of S_n",
        offset: 1,
        values: &[1, 2, 3, 8, 24, 108, 640, 4492],
        source: Source::ClassCount(Relation::Toric),
    },
    SequenceTable {
        id: "A000757",
        description: "toric class-avoiders of the derangement pattern",
        offset: 1,
        values: &[0, 1, 1, 8, 36, 229, 1625, 13208],
        source: Source::ClassAvoid(Relation::Toric, DERANGEMENT_PATTERN),
    },
    SequenceTable {
        id: "A165962",
        description: "toric class-avoiders of the modular 3-sequence pattern",
        offset: 1,
        values: &[1, 1, 5, 18, 95, 600, 4307, 35168],
        source: Source::ClassAvoid(Relation::Toric, MODULAR_THREE_SEQUENCE_PATTERN),
    },
    SequenceTable {
        id: "A000325",
        description: "descent-set class-avoiders of 321",
        offset: 1,
        values: &[1, 2, 5, 12, 27, 58, 121, 248, 503],
        source: Source::ClassAvoid(Relation::Descent, "321"),
    },
];

pub fn table(id: &str) -> Result<&'static SequenceTable> {
    TABLES
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::UnknownSequence(id.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub n: usize,
    pub expected: u64,
    /// `None` when `n` was beyond the budget.
    pub actual: Option<u64>,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceReport {
    pub id: &'static str,
    pub rows: Vec<CheckRow>,
}

impl SequenceReport {
    pub fn all_equal(&self) -> bool {
        self.rows.iter().all(|r| r.equal || r.actual.is_none())
    }

    pub fn mismatches(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| r.actual.is_some() && !r.equal).map(|r| r.n).collect()
    }
}

/// Compares `values`, indexed from the table's offset, against the stored values.
pub fn sequence_check(id: &str, values: &[u64]) -> Result<SequenceReport> {
    let t = table(id)?;
    let rows = t
        .values
        .iter()
        .enumerate()
        .map(|(i, &expected)| {
            let actual = values.get(i).copied();
            CheckRow {
                n: t.offset + i,
                expected,
                actual,
                equal: actual == Some(expected),
            }
        })
        .collect();
    Ok(SequenceReport { id: t.id, rows })
}

/// Recomputes every stored value with `n` inside the budget.
pub fn recompute(id: &str, budget: Budget) -> Result<SequenceReport> {
    let t = table(id)?;
    let last = t.last_n().min(budget.max_n);
    let values: Vec<u64> = (t.offset..=last).map(|n| t.compute(n, budget)).collect::<Result<_>>()?;
    sequence_check(id, &values)
}

/// The first table agreeing with `counts` (starting at `n_from`) on at least four indices.
pub fn identify(n_from: usize, counts: &[u64]) -> Option<&'static str> {
    TABLES.iter().map(|t| t).find_map(|t| {
        let overlap: Vec<(u64, u64)> = counts
            .iter()
            .enumerate()
            .filter_map(|(i, &c)| t.value_at(n_from + i).map(|v| (c, v)))
            .collect();
        (overlap.len() >= 4 && overlap.iter().all(|(c, v)| c == v)).then_some(t.id)
    })
}
