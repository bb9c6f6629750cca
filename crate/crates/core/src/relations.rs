//! Equivalence relations on S_n, each given by a canonical key and a class generator.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{CycleType, Permutation};
use crate::symmetry::Symmetry;
use crate::tableau::{insertion_tableau, knuth_class_of_tableau, YoungTableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Conjugacy,
    Order,
    Knuth,
    Toric,
    Descent,
}

/// Canonical invariant of a class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassKey {
    CycleType(CycleType),
    Order(u64),
    Tableau(YoungTableau),
    /// Lexicographically least member of the toric orbit.
    Toric(Permutation),
    Descents(Vec<usize>),
}

impl Relation {
    pub const ALL: [Relation; 5] = [
        Relation::Conjugacy,
        Relation::Order,
        Relation::Knuth,
        Relation::Toric,
        Relation::Descent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::Conjugacy => "conjugacy",
            Relation::Order => "order",
            Relation::Knuth => "knuth",
            Relation::Toric => "toric",
            Relation::Descent => "descent",
        }
    }

    pub fn key(self, pi: &Permutation) -> ClassKey {
        match self {
            Relation::Conjugacy => ClassKey::CycleType(pi.cycle_type()),
            Relation::Order => ClassKey::Order(pi.order()),
            Relation::Knuth => ClassKey::Tableau(insertion_tableau(pi)),
            Relation::Toric => ClassKey::Toric(toric_representative(pi)),
            Relation::Descent => ClassKey::Descents(pi.descent_set()),
        }
    }

    /// The whole class of `pi` inside S_n, sorted.
    pub fn class_of(self, pi: &Permutation) -> Vec<Permutation> {
        let mut class = match self {
            Relation::Conjugacy => conjugacy_class(&pi.cycle_type()),
            Relation::Order => {
                let order = pi.order();
                CycleType::all(pi.len())
                    .iter()
                    .filter(|c| c.order() == order)
                    .flat_map(conjugacy_class)
                    .collect()
            }
            Relation::Knuth => knuth_class_of_tableau(&insertion_tableau(pi)),
            Relation::Toric => {
                let mut orbit: Vec<Permutation> = (0..=pi.len()).map(|m| pi.oplus(m)).collect();
                orbit.sort();
                orbit.dedup();
                orbit
            }
            Relation::Descent => with_descent_set(pi.len(), &pi.descent_set()),
        };
        class.sort();
        class
    }

    /// Compositions of r, c, i that map classes onto classes.
    pub fn symmetries(self) -> Vec<Symmetry> {
        let words: &[&str] = match self {
            Relation::Conjugacy | Relation::Order => &["id", "i", "rc", "irc"],
            Relation::Knuth | Relation::Descent => &["id", "r", "c", "rc"],
            Relation::Toric => &["id", "r", "c", "i", "rc", "ri", "ci", "rci"],
        };
        words.iter().map(|w| Symmetry::parse(w).expect("valid word")).collect()
    }

    /// Whether the relation has a notion of equivalent patterns.
    pub fn extends_to_patterns(self) -> bool {
        matches!(self, Relation::Knuth | Relation::Toric)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Relation::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::UnknownRelation(s.to_string()))
    }
}

pub fn toric_representative(pi: &Permutation) -> Permutation {
    (1..=pi.len())
        .map(|m| pi.oplus(m))
        .fold(pi.clone(), |best, cand| if cand < best { cand } else { best })
}

/// All permutations of the given cycle type, built cycle by cycle: each new
/// cycle starts at the smallest unused letter and picks a length and an
/// ordered filling.
pub fn conjugacy_class(cycle_type: &CycleType) -> Vec<Permutation> {
    fn fill(
        word: &mut [u32],
        used: &mut [bool],
        remaining: &mut BTreeMap<u32, u32>,
        out: &mut Vec<Permutation>,
    ) {
        let Some(leader) = used.iter().position(|&u| !u) else {
            out.push(Permutation::from_word_unchecked(word.to_vec()));
            return;
        };
        let lengths: Vec<u32> = remaining.keys().copied().collect();
        for len in lengths {
            *remaining.get_mut(&len).unwrap() -= 1;
            if remaining[&len] == 0 {
                remaining.remove(&len);
            }
            used[leader] = true;
            let mut cycle = vec![leader];
            extend(word, used, remaining, &mut cycle, len as usize, out);
            used[leader] = false;
            *remaining.entry(len).or_insert(0) += 1;
        }
    }

    fn extend(
        word: &mut [u32],
        used: &mut [bool],
        remaining: &mut BTreeMap<u32, u32>,
        cycle: &mut Vec<usize>,
        len: usize,
        out: &mut Vec<Permutation>,
    ) {
        if cycle.len() == len {
            for w in 0..len {
                word[cycle[w]] = cycle[(w + 1) % len] as u32 + 1;
            }
            fill(word, used, remaining, out);
            return;
        }
        for next in 0..used.len() {
            if !used[next] {
                used[next] = true;
                cycle.push(next);
                extend(word, used, remaining, cycle, len, out);
                cycle.pop();
                used[next] = false;
            }
        }
    }

    let n = cycle_type.n();
    let mut remaining = BTreeMap::new();
    for &p in cycle_type.parts() {
        *remaining.entry(p).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    fill(&mut vec![0; n], &mut vec![false; n], &mut remaining, &mut out);
    out.sort();
    out
}

/// Permutations of `n` whose descent set is exactly `descents` (1-based).
pub fn with_descent_set(n: usize, descents: &[usize]) -> Vec<Permutation> {
    fn build(n: usize, is_descent: &[bool], word: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
        let i = word.len();
        if i == n {
            out.push(Permutation::from_word_unchecked(word.clone()));
            return;
        }
        for v in 1..=n as u32 {
            if used[v as usize] {
                continue;
            }
            if let Some(&prev) = word.last() {
                if (prev > v) != is_descent[i] {
                    continue;
                }
            }
            used[v as usize] = true;
            word.push(v);
            build(n, is_descent, word, used, out);
            word.pop();
            used[v as usize] = false;
        }
    }
    let mut is_descent = vec![false; n + 1];
    for &d in descents {
        if d < n {
            is_descent[d] = true;
        }
    }
    let mut out = Vec::new();
    build(n, &is_descent, &mut Vec::with_capacity(n), &mut vec![false; n + 1], &mut out);
    out
}

/// Exhaustive-scan cap on `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_n: usize,
}

impl Budget {
    pub const DEFAULT_MAX_N: usize = 9;
    pub const ENV_VAR: &'static str = "PERMLAB_BUDGET_N";

    pub fn new(max_n: usize) -> Self {
        Budget { max_n }
    }

    /// The default cap, overridden by `PERMLAB_BUDGET_N` when set to an integer.
    pub fn from_env() -> Self {
        let max_n = std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(Self::DEFAULT_MAX_N);
        Budget { max_n }
    }

    pub fn check(self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::BudgetExceeded { n, max: self.max_n })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_MAX_N)
    }
}

/// The permutations of S_n starting with `first`, in lexicographic order.
pub fn block_with_first(n: usize, first: u32) -> impl Iterator<Item = Permutation> {
    Permutation::all(n.saturating_sub(1)).map(move |rest| {
        let mut word = Vec::with_capacity(n);
        word.push(first);
        word.extend(rest.as_slice().iter().map(|&v| if v >= first { v + 1 } else { v }));
        Permutation::from_word_unchecked(word)
    })
}

/// S_n as a lexicographically sorted vector, built in parallel by first letter.
pub fn all_sorted(n: usize) -> Vec<Permutation> {
    if n == 0 {
        return vec![Permutation::identity(0)];
    }
    (1..=n as u32)
        .into_par_iter()
        .flat_map_iter(|f| block_with_first(n, f))
        .collect()
}

/// S_n split into the classes of a relation.
#[derive(Debug, Clone)]
pub struct ClassPartition {
    pub relation: Relation,
    pub n: usize,
    classes: Vec<Vec<Permutation>>,
}

impl ClassPartition {
    pub fn new(relation: Relation, n: usize, budget: Budget) -> Result<Self> {
        budget.check(n)?;
        let perms = all_sorted(n);
        let keys: Vec<ClassKey> = perms.par_iter().map(|p| relation.key(p)).collect();
        let mut groups: HashMap<ClassKey, Vec<Permutation>> = HashMap::new();
        for (p, k) in perms.into_iter().zip(keys) {
            groups.entry(k).or_default().push(p);
        }
        // Members arrive in lex order; sort classes by their least member.
        let mut classes: Vec<Vec<Permutation>> = groups.into_values().collect();
        classes.sort_by(|a, b| a[0].cmp(&b[0]));
        Ok(ClassPartition { relation, n, classes })
    }

    pub fn classes(&self) -> &[Vec<Permutation>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn census(&self) -> ClassCensus {
        let mut by_size = BTreeMap::new();
        for c in &self.classes {
            *by_size.entry(c.len() as u64).or_insert(0) += 1;
        }
        ClassCensus { n: self.n, relation: self.relation, by_size }
    }

    /// Union of the classes satisfying `keep`, sorted.
    pub fn select<F>(&self, keep: F) -> Vec<Permutation>
    where
        F: Fn(&[Permutation]) -> bool + Sync,
    {
        let mut out: Vec<Permutation> = self
            .classes
            .par_iter()
            .filter(|c| keep(c))
            .flat_map_iter(|c| c.iter().cloned())
            .collect();
        out.sort();
        out
    }
}

/// Number of classes of each size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCensus {
    pub n: usize,
    pub relation: Relation,
    pub by_size: BTreeMap<u64, u64>,
}

impl ClassCensus {
    pub fn class_count(&self) -> u64 {
        self.by_size.values().sum()
    }

    pub fn total(&self) -> u128 {
        self.by_size.iter().map(|(&s, &c)| s as u128 * c as u128).sum()
    }
}

pub fn census(relation: Relation, n: usize, budget: Budget) -> Result<ClassCensus> {
    Ok(ClassPartition::new(relation, n, budget)?.census())
}
