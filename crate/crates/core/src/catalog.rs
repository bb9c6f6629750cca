//! Named bivincular patterns with a known class-avoidance behaviour.
//!
//! Syntax is `p;x=..;y=..`. An element `0` or `k` of X pins the occurrence to
//! the first or last position, and the same elements of Y pin it to the
//! smallest or largest value.

use crate::pattern::{AdjacencySet, BivincularPattern};
use crate::perm::Permutation;

/// Conjugacy: the whole class avoids it exactly for derangements.
pub const DERANGEMENT_PATTERN: &str = "1;x=0;y=0";

/// Conjugacy: involutions.
pub const INVOLUTION_PATTERN: &str = "231;x=0,1;y=0,1,2";

/// Conjugacy: the identity together with all transpositions (from n = 3 on).
pub const TRANSPOSITION_PATTERN: &str = "21;x=1;y=0,2";

/// Conjugacy: permutations moving at most two letters.
pub const CENTRAL_POLYGONAL_PATTERN: &str = "231;y=3";

/// Conjugacy: meant to pick out the fixed-point-free involutions.
pub const FIXED_POINT_FREE_INVOLUTION_PATTERN: &str = "132;x=3;y=0,1,3";

/// Conjugacy: the identity and the 3-cycles.
pub const THREE_CYCLE_PATTERN: &str = "132;x=3;y=1,2,3";

/// Conjugacy: products of 2-cycles and 3-cycles.
pub const TWO_THREE_CYCLE_PATTERN: &str = "231;x=0;y=1,2,3";

/// Conjugacy: the identity (and 21 when n = 2). Knuth: class-matchers are counted by Catalan numbers.
pub const FIRST_TWO_PATTERN: &str = "12;x=0;y=1,2";

/// Knuth: hook-shaped insertion tableau with 2 in the first row, or the reverse identity.
pub const GRAPH_PATTERN: &str = "231;y=0";

/// Knuth: the consecutive 123, which is not stable.
pub const CONSECUTIVE_123_PATTERN: &str = "123;x=1,2";

/// Toric: whole class avoids it exactly for the natural permutations.
pub const TOTIENT_PATTERN: &str = "213;y=1,3";

/// Toric: whole class avoids it exactly for the divisor permutations.
pub const DIVISOR_PATTERN: &str = "213;y=1";

/// Toric: no modular 3-sequences anywhere in the class.
pub const MODULAR_THREE_SEQUENCE_PATTERN: &str = "12;x=0,1;y=0,1";

/// Pair of Wilf-inequivalent patterns related by a shift whose top value is not in Y.
pub const SHIFT_COUNTEREXAMPLE: (&str, &str) = ("1324;x=2", "1243;x=3");

pub fn named(s: &str) -> BivincularPattern {
    s.parse().expect("catalog patterns are well formed")
}

/// `23…k1`: the k-cycle `(1 2 … k)` written in one-line notation.
fn rotation(k: usize) -> Permutation {
    let word: Vec<u32> = (2..=k as u32).chain(std::iter::once(1)).collect();
    Permutation::new(word).expect("rotation is a permutation")
}

/// Conjugacy: the class avoids it iff the permutation has no k-cycle.
pub fn k_cycle_pattern(k: usize) -> BivincularPattern {
    assert!(k >= 1);
    let all: AdjacencySet = (0..k).collect();
    BivincularPattern::from_sets(rotation(k), all, all).expect("valid sets")
}

/// Conjugacy: the class avoids it iff every cycle is shorter than k.
pub fn bounded_cycle_pattern(k: usize) -> BivincularPattern {
    assert!(k >= 2);
    let x: AdjacencySet = (0..k - 1).collect();
    let y: AdjacencySet = (0..k).collect();
    BivincularPattern::from_sets(rotation(k), x, y).expect("valid sets")
}

/// `12⋯k` with the bottom hook and all inner value adjacencies.
pub fn increasing_bottom_hooked(k: usize) -> BivincularPattern {
    let y: AdjacencySet = (0..k).collect();
    BivincularPattern::from_sets(Permutation::identity(k), AdjacencySet::EMPTY, y).expect("valid sets")
}

/// `12⋯k` with all inner value adjacencies and no hooks.
pub fn increasing_value_consecutive(k: usize) -> BivincularPattern {
    let y: AdjacencySet = (1..k).collect();
    BivincularPattern::from_sets(Permutation::identity(k), AdjacencySet::EMPTY, y).expect("valid sets")
}
