//! Bivincular patterns `(p, X, Y)` and their occurrences.
//!
//! An occurrence of `(p, X, Y)` in `π ∈ S_n` is a position tuple
//! `i_1 < … < i_k` whose letters are order-isomorphic to `p`, such that
//! `i_{x+1} = i_x + 1` for `x ∈ X` and `j_{y+1} = j_y + 1` for `y ∈ Y`, where
//! `j_1 < … < j_k` are the letters of the occurrence sorted. The boundary
//! conventions `i_0 = j_0 = 0` and `i_{k+1} = j_{k+1} = n + 1` turn `0` and
//! `k` in either set into hooks pinning the occurrence to the ends.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::symmetry::Symmetric;

/// Longest pattern the bitset representation supports.
pub const MAX_PATTERN_LEN: usize = 62;

/// A subset of `{0, …, k}` stored as a bitmask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AdjacencySet(u64);

impl AdjacencySet {
    pub const EMPTY: AdjacencySet = AdjacencySet(0);

    pub fn from_bits(bits: u64) -> Self {
        AdjacencySet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// `{k - m : m ∈ self}`.
    fn mirrored(self, k: usize) -> Self {
        self.iter().map(|m| k - m).collect()
    }

    /// `{(m + shift) mod modulus : m ∈ self}`.
    fn rotated(self, shift: usize, modulus: usize) -> Self {
        self.iter().map(|m| (m + shift) % modulus).collect()
    }
}

impl FromIterator<usize> for AdjacencySet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = AdjacencySet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Display for AdjacencySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Position tuple `(i_1, …, i_k)` of an occurrence, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Occurrence {
    pub positions: Vec<usize>,
}

impl Occurrence {
    pub fn values(&self, pi: &Permutation) -> Vec<u32> {
        self.positions.iter().map(|&i| pi.apply(i)).collect()
    }

    /// Distance from the first letter of the occurrence to the last.
    pub fn area(&self) -> usize {
        match (self.positions.first(), self.positions.last()) {
            (Some(a), Some(b)) => b - a,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BivincularPattern {
    p: Permutation,
    x: AdjacencySet,
    y: AdjacencySet,
}

impl BivincularPattern {
    pub fn new(
        p: Permutation,
        x: impl IntoIterator<Item = usize>,
        y: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        Self::from_sets(p, x.into_iter().collect(), y.into_iter().collect())
    }

    pub fn from_sets(p: Permutation, x: AdjacencySet, y: AdjacencySet) -> Result<Self> {
        let k = p.len();
        let bad = |what: &str| Error::ParsePattern {
            input: format!("{p};x={x};y={y}"),
            reason: format!("{what} must be a subset of 0..={k}"),
        };
        if k > MAX_PATTERN_LEN {
            return Err(Error::ParsePattern {
                input: p.to_string(),
                reason: format!("patterns longer than {MAX_PATTERN_LEN} are not supported"),
            });
        }
        if x.max().is_some_and(|m| m > k) {
            return Err(bad("X"));
        }
        if y.max().is_some_and(|m| m > k) {
            return Err(bad("Y"));
        }
        Ok(BivincularPattern { p, x, y })
    }

    pub fn classical(p: Permutation) -> Self {
        BivincularPattern {
            p,
            x: AdjacencySet::EMPTY,
            y: AdjacencySet::EMPTY,
        }
    }

    pub fn perm(&self) -> &Permutation {
        &self.p
    }

    pub fn x(&self) -> AdjacencySet {
        self.x
    }

    pub fn y(&self) -> AdjacencySet {
        self.y
    }

    /// Length `k`, which is also the rank.
    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn is_classical(&self) -> bool {
        self.x.is_empty() && self.y.is_empty()
    }

    /// Whether the largest letter carries a right hook, the condition for
    /// `⊕1` to transport avoidance.
    pub fn rank_in_y(&self) -> bool {
        self.y.contains(self.len())
    }

    /// Calls `visit` on each occurrence (0-based positions) in lexicographic
    /// order until it breaks.
    pub fn for_each_occurrence<F>(&self, pi: &Permutation, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let k = self.len();
        let n = pi.len();
        if k == 0 {
            let ok = (!self.x.contains(0) || n == 0) && (!self.y.contains(0) || n == 0);
            return if ok { visit(&[]) } else { ControlFlow::Continue(()) };
        }
        if k > n {
            return ControlFlow::Continue(());
        }
        let plan = SearchPlan::new(self);
        let mut position_of = vec![0usize; n + 1];
        for (i, &v) in pi.as_slice().iter().enumerate() {
            position_of[v as usize] = i;
        }
        let mut state = SearchState {
            word: pi.as_slice(),
            position_of: &position_of,
            pos: vec![0; k],
            val: vec![0; k],
        };
        plan.extend(&mut state, 0, &mut visit)
    }

    /// All occurrences in lexicographic order of position tuples.
    pub fn occurrences(&self, pi: &Permutation) -> Vec<Occurrence> {
        let mut out = Vec::new();
        let _ = self.for_each_occurrence(pi, |pos| {
            out.push(Occurrence {
                positions: pos.iter().map(|&i| i + 1).collect(),
            });
            ControlFlow::Continue(())
        });
        out
    }

    pub fn matches(&self, pi: &Permutation) -> bool {
        self.for_each_occurrence(pi, |_| ControlFlow::Break(())).is_break()
    }

    pub fn avoids(&self, pi: &Permutation) -> bool {
        !self.matches(pi)
    }

    /// Occurrences of least area; errors when the pattern is avoided.
    pub fn minimal_occurrences(&self, pi: &Permutation) -> Result<Vec<Occurrence>> {
        let all = self.occurrences(pi);
        let best = all.iter().map(Occurrence::area).min().ok_or(Error::NoOccurrence)?;
        Ok(all.into_iter().filter(|o| o.area() == best).collect())
    }

    /// `(p^r, k - X, Y)`.
    pub fn pat_reverse(&self) -> Self {
        let k = self.len();
        BivincularPattern {
            p: self.p.reverse(),
            x: self.x.mirrored(k),
            y: self.y,
        }
    }

    /// `(p^c, X, k - Y)`.
    pub fn pat_complement(&self) -> Self {
        let k = self.len();
        BivincularPattern {
            p: self.p.complement(),
            x: self.x,
            y: self.y.mirrored(k),
        }
    }

    /// `(p^i, Y, X)`.
    pub fn pat_inverse(&self) -> Self {
        BivincularPattern {
            p: self.p.inverse(),
            x: self.y,
            y: self.x,
        }
    }

    /// `p ⊕ 1 = (p ⊕ 1, X ⊖ ℓ, Y ⊕ 1)` with set arithmetic modulo `k + 1`,
    /// where `ℓ` is the position of `k` in `p`.
    pub fn pat_shift(&self) -> Self {
        let k = self.len();
        if k == 0 {
            return self.clone();
        }
        let modulus = k + 1;
        let ell = self.p.position_of(k as u32).unwrap();
        BivincularPattern {
            p: self.p.oplus(1),
            x: self.x.rotated(modulus - ell, modulus),
            y: self.y.rotated(1, modulus),
        }
    }

    /// The `⊕1` orbit, starting with `self`.
    pub fn shift_orbit(&self) -> Vec<Self> {
        let mut orbit = vec![self.clone()];
        let mut cur = self.pat_shift();
        while &cur != self {
            orbit.push(cur.clone());
            cur = cur.pat_shift();
        }
        orbit
    }

    /// Every bivincular pattern of length `k`: `k! · 4^{k+1}` of them,
    /// ordered by `p`, then `X`, then `Y` bitmask.
    pub fn all_of_length(k: usize) -> Vec<BivincularPattern> {
        assert!(k <= 8, "pattern enumeration is limited to k ≤ 8");
        let subsets = 1u64 << (k + 1);
        let mut out = Vec::new();
        for p in Permutation::all(k) {
            for x in 0..subsets {
                for y in 0..subsets {
                    out.push(BivincularPattern {
                        p: p.clone(),
                        x: AdjacencySet(x),
                        y: AdjacencySet(y),
                    });
                }
            }
        }
        out
    }
}

impl Symmetric for BivincularPattern {
    fn reversed(&self) -> Self {
        self.pat_reverse()
    }

    fn complemented(&self) -> Self {
        self.pat_complement()
    }

    fn inverted(&self) -> Self {
        self.pat_inverse()
    }
}

/// `<perm>;x=<ints>;y=<ints>`.
impl fmt::Display for BivincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};x={};y={}", self.p, self.x, self.y)
    }
}

impl FromStr for BivincularPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| Error::ParsePattern {
            input: s.to_string(),
            reason,
        };
        let mut clauses = s.trim().split(';');
        let perm_text = clauses.next().unwrap_or_default();
        let p: Permutation = perm_text.parse().map_err(|e| err(format!("{e}")))?;
        let mut x = None;
        let mut y = None;
        for clause in clauses {
            let clause = clause.trim();
            let (key, list) = clause
                .split_once('=')
                .ok_or_else(|| err(format!("clause `{clause}` is not key=list")))?;
            let set: AdjacencySet = if list.trim().is_empty() {
                AdjacencySet::EMPTY
            } else {
                list.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .ok()
                            .filter(|&v| v <= p.len())
                            .ok_or_else(|| err(format!("`{t}` is not an integer in 0..={}", p.len())))
                    })
                    .collect::<Result<_>>()?
            };
            let slot = match key.trim() {
                "x" | "X" => &mut x,
                "y" | "Y" => &mut y,
                other => return Err(err(format!("unknown clause `{other}`"))),
            };
            if slot.replace(set).is_some() {
                return Err(err(format!("clause `{key}` given twice")));
            }
        }
        BivincularPattern::from_sets(p, x.unwrap_or_default(), y.unwrap_or_default())
    }
}

/// Precomputed constraints for the backtracking search. Step `t` chooses the
/// position of pattern letter `p[t]`.
struct SearchPlan {
    k: usize,
    /// Step holding the nearest smaller / larger pattern value among earlier steps.
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    /// `i_{t+1} = i_t + 1` (the X element `t`, for `t ≥ 1`).
    glued_to_previous: Vec<bool>,
    first_at_start: bool,
    last_at_end: bool,
    /// Value constraints from Y, resolved against earlier steps.
    value_links: Vec<Vec<ValueLink>>,
}

#[derive(Clone, Copy)]
enum ValueLink {
    /// Letter must equal the letter at an earlier step plus `delta`.
    Step { step: usize, delta: i64 },
    Smallest,
    Largest,
}

struct SearchState<'a> {
    word: &'a [u32],
    position_of: &'a [usize],
    pos: Vec<usize>,
    val: Vec<u32>,
}

impl SearchPlan {
    fn new(pat: &BivincularPattern) -> Self {
        let p = pat.p.as_slice();
        let k = p.len();
        let step_of_value = {
            let mut s = vec![0; k + 1];
            for (t, &v) in p.iter().enumerate() {
                s[v as usize] = t;
            }
            s
        };
        let mut below = vec![None; k];
        let mut above = vec![None; k];
        for t in 0..k {
            for s in 0..t {
                if p[s] < p[t] && below[t].is_none_or(|b: usize| p[b] < p[s]) {
                    below[t] = Some(s);
                }
                if p[s] > p[t] && above[t].is_none_or(|a: usize| p[a] > p[s]) {
                    above[t] = Some(s);
                }
            }
        }
        let glued_to_previous = (0..k).map(|t| t >= 1 && pat.x.contains(t)).collect();
        let mut value_links = vec![Vec::new(); k];
        for (t, links) in value_links.iter_mut().enumerate() {
            let a = p[t] as usize;
            if pat.y.contains(a - 1) {
                if a == 1 {
                    links.push(ValueLink::Smallest);
                } else if step_of_value[a - 1] < t {
                    links.push(ValueLink::Step {
                        step: step_of_value[a - 1],
                        delta: 1,
                    });
                }
            }
            if pat.y.contains(a) {
                if a == k {
                    links.push(ValueLink::Largest);
                } else if step_of_value[a + 1] < t {
                    links.push(ValueLink::Step {
                        step: step_of_value[a + 1],
                        delta: -1,
                    });
                }
            }
        }
        SearchPlan {
            k,
            below,
            above,
            glued_to_previous,
            first_at_start: pat.x.contains(0),
            last_at_end: pat.x.contains(k),
            value_links,
        }
    }

    fn extend<F>(&self, st: &mut SearchState<'_>, t: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if t == self.k {
            return visit(&st.pos);
        }
        let n = st.word.len();
        let lo_pos = if t == 0 { 0 } else { st.pos[t - 1] + 1 };
        let hi_pos = n - (self.k - t); // inclusive
        if lo_pos > hi_pos {
            return ControlFlow::Continue(());
        }

        let mut forced_val: Option<u32> = None;
        for link in &self.value_links[t] {
            let v = match *link {
                ValueLink::Smallest => 1,
                ValueLink::Largest => n as i64,
                ValueLink::Step { step, delta } => st.val[step] as i64 + delta,
            };
            if v < 1 || v > n as i64 {
                return ControlFlow::Continue(());
            }
            match forced_val {
                Some(f) if f as i64 != v => return ControlFlow::Continue(()),
                _ => forced_val = Some(v as u32),
            }
        }

        let mut forced_pos: Option<usize> = None;
        if t == 0 && self.first_at_start {
            forced_pos = Some(0);
        }
        if self.glued_to_previous[t] {
            forced_pos = Some(lo_pos);
        }
        if t + 1 == self.k && self.last_at_end {
            if forced_pos.is_some_and(|f| f != n - 1) {
                return ControlFlow::Continue(());
            }
            forced_pos = Some(n - 1);
        }
        if let Some(v) = forced_val {
            let at = st.position_of[v as usize];
            if forced_pos.is_some_and(|f| f != at) {
                return ControlFlow::Continue(());
            }
            forced_pos = Some(at);
        }

        let (start, end) = match forced_pos {
            Some(f) => (f, f),
            None => (lo_pos, hi_pos),
        };
        if start < lo_pos || end > hi_pos {
            return ControlFlow::Continue(());
        }
        let lower = self.below[t].map_or(0, |s| st.val[s]);
        let upper = self.above[t].map_or(u32::MAX, |s| st.val[s]);
        for i in start..=end {
            let v = st.word[i];
            if v <= lower || v >= upper {
                continue;
            }
            st.pos[t] = i;
            st.val[t] = v;
            self.extend(st, t + 1, visit)?;
        }
        ControlFlow::Continue(())
    }
}
