//! The reverse / complement / inverse operations and their compositions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Op {
    Reverse,
    Complement,
    Inverse,
}

impl Op {
    pub fn letter(self) -> char {
        match self {
            Op::Reverse => 'r',
            Op::Complement => 'c',
            Op::Inverse => 'i',
        }
    }
}

/// Anything the three basic operations act on.
pub trait Symmetric: Sized {
    fn reversed(&self) -> Self;
    fn complemented(&self) -> Self;
    fn inverted(&self) -> Self;

    fn apply_op(&self, op: Op) -> Self {
        match op {
            Op::Reverse => self.reversed(),
            Op::Complement => self.complemented(),
            Op::Inverse => self.inverted(),
        }
    }

    fn apply_symmetry(&self, sym: &Symmetry) -> Self
    where
        Self: Clone,
    {
        sym.ops().iter().fold(self.clone(), |acc, &op| acc.apply_op(op))
    }
}

impl Symmetric for Permutation {
    fn reversed(&self) -> Self {
        self.reverse()
    }

    fn complemented(&self) -> Self {
        self.complement()
    }

    fn inverted(&self) -> Self {
        self.inverse()
    }
}

/// A composition of basic operations, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Symmetry(Vec<Op>);

impl Symmetry {
    pub fn identity() -> Self {
        Symmetry(Vec::new())
    }

    pub fn new(ops: impl IntoIterator<Item = Op>) -> Self {
        Symmetry(ops.into_iter().collect())
    }

    pub fn ops(&self) -> &[Op] {
        &self.0
    }

    /// Parses words such as `r`, `rc`, `rci`; `id` or the empty string is the identity.
    pub fn parse(s: &str) -> Option<Self> {
        if s == "id" {
            return Some(Symmetry::identity());
        }
        s.chars()
            .map(|c| match c {
                'r' => Some(Op::Reverse),
                'c' => Some(Op::Complement),
                'i' => Some(Op::Inverse),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Symmetry)
    }

    /// The eight elements of the group generated by r, c and i.
    pub fn dihedral() -> Vec<Symmetry> {
        ["id", "r", "c", "i", "rc", "ri", "ci", "rci"]
            .iter()
            .map(|s| Symmetry::parse(s).unwrap())
            .collect()
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("id");
        }
        for op in &self.0 {
            write!(f, "{}", op.letter())?;
        }
        Ok(())
    }
}
