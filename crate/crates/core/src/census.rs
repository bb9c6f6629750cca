//! Class-level avoidance and matching, stability checks and pattern surveys.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pattern::BivincularPattern;
use crate::perm::Permutation;
use crate::relations::{all_sorted, block_with_first, toric_representative, Budget, ClassPartition, Relation};
use crate::sequences;
use crate::symmetry::Symmetric;
use crate::tableau::knuth_class_bfs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    ClassAvoid,
    ClassMatch,
    Avoid,
    Match,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "class-avoid" => Ok(Mode::ClassAvoid),
            "class-match" => Ok(Mode::ClassMatch),
            "avoid" => Ok(Mode::Avoid),
            "match" => Ok(Mode::Match),
            _ => Err(Error::InvalidArgument(format!("unknown mode {s:?}"))),
        }
    }
}

fn patterns_as_strings<S: Serializer>(pats: &[BivincularPattern], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(pats.iter().map(|p| p.to_string()))
}

fn relation_or_none<S: Serializer>(rel: &Option<Relation>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(rel.map_or("none", Relation::name))
}

fn members_as_strings<S: Serializer>(m: &Option<Vec<Permutation>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match m {
        None => s.serialize_none(),
        Some(v) => s.collect_seq(v.iter().map(|p| p.to_string())),
    }
}

/// Outcome of one enumeration over S_n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationResult {
    pub n: usize,
    #[serde(serialize_with = "patterns_as_strings")]
    pub patterns: Vec<BivincularPattern>,
    #[serde(serialize_with = "relation_or_none")]
    pub relation: Option<Relation>,
    pub mode: Mode,
    pub count: u64,
    #[serde(serialize_with = "members_as_strings", skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<Permutation>>,
}

impl EnumerationResult {
    fn new(n: usize, patterns: Vec<BivincularPattern>, relation: Option<Relation>, mode: Mode, members: Vec<Permutation>) -> Self {
        EnumerationResult {
            n,
            patterns,
            relation,
            mode,
            count: members.len() as u64,
            members: Some(members),
        }
    }

    pub fn members(&self) -> &[Permutation] {
        self.members.as_deref().unwrap_or(&[])
    }

    pub fn without_members(mut self) -> Self {
        self.members = None;
        self
    }
}

impl ClassPartition {
    /// Ã_n: union of the classes all of whose members avoid `pat`.
    pub fn class_avoiders(&self, pat: &BivincularPattern) -> Vec<Permutation> {
        self.select(|class| class.iter().all(|pi| pat.avoids(pi)))
    }

    /// M̃_n: union of the classes all of whose members match `pat`.
    pub fn class_matchers(&self, pat: &BivincularPattern) -> Vec<Permutation> {
        self.select(|class| class.iter().all(|pi| pat.matches(pi)))
    }

    pub fn class_avoider_count(&self, pat: &BivincularPattern) -> u64 {
        self.classes()
            .par_iter()
            .filter(|class| class.iter().all(|pi| pat.avoids(pi)))
            .map(|class| class.len() as u64)
            .sum()
    }
}

/// Toric classes are cheap to generate from any member, so walk S_n and
/// expand only the permutations that are their own orbit representative.
fn toric_select<F>(n: usize, budget: Budget, keep: F) -> Result<Vec<Permutation>>
where
    F: Fn(&[Permutation]) -> bool + Sync,
{
    budget.check(n)?;
    if n == 0 {
        let class = vec![Permutation::identity(0)];
        return Ok(if keep(&class) { class } else { Vec::new() });
    }
    let mut out: Vec<Permutation> = (1..=n as u32)
        .into_par_iter()
        .flat_map_iter(|first| {
            block_with_first(n, first)
                .filter(|pi| toric_representative(pi) == *pi)
                .map(|pi| Relation::Toric.class_of(&pi))
                .filter(|class| keep(class))
                .flatten()
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort();
    Ok(out)
}

fn select_classes<F>(rel: Relation, n: usize, budget: Budget, keep: F) -> Result<Vec<Permutation>>
where
    F: Fn(&[Permutation]) -> bool + Sync,
{
    match rel {
        Relation::Toric => toric_select(n, budget, keep),
        _ => Ok(ClassPartition::new(rel, n, budget)?.select(keep)),
    }
}

pub fn class_avoiders(pat: &BivincularPattern, rel: Relation, n: usize, budget: Budget) -> Result<EnumerationResult> {
    let members = select_classes(rel, n, budget, |class| class.iter().all(|pi| pat.avoids(pi)))?;
    Ok(EnumerationResult::new(n, vec![pat.clone()], Some(rel), Mode::ClassAvoid, members))
}

pub fn class_matchers(pat: &BivincularPattern, rel: Relation, n: usize, budget: Budget) -> Result<EnumerationResult> {
    let members = select_classes(rel, n, budget, |class| class.iter().all(|pi| pat.matches(pi)))?;
    Ok(EnumerationResult::new(n, vec![pat.clone()], Some(rel), Mode::ClassMatch, members))
}

fn filter_sn<F>(n: usize, budget: Budget, keep: F) -> Result<Vec<Permutation>>
where
    F: Fn(&Permutation) -> bool + Sync,
{
    budget.check(n)?;
    Ok(all_sorted(n).into_par_iter().filter(|pi| keep(pi)).collect())
}

/// A_n of a pattern set: permutations avoiding every pattern in `pats`.
pub fn avoid_all(pats: &[BivincularPattern], n: usize, budget: Budget) -> Result<EnumerationResult> {
    let members = filter_sn(n, budget, |pi| pats.iter().all(|p| p.avoids(pi)))?;
    Ok(EnumerationResult::new(n, pats.to_vec(), None, Mode::Avoid, members))
}

/// M_n of a pattern set: permutations matching at least one pattern in `pats`.
pub fn match_any(pats: &[BivincularPattern], n: usize, budget: Budget) -> Result<EnumerationResult> {
    let members = filter_sn(n, budget, |pi| pats.iter().any(|p| p.matches(pi)))?;
    Ok(EnumerationResult::new(n, pats.to_vec(), None, Mode::Match, members))
}

/// σ(n) as the sum of the positions of 1 over the toric class-avoiders of the divisor pattern.
pub fn sigma_via_avoiders(n: usize, budget: Budget) -> Result<u64> {
    let r = class_avoiders(&crate::catalog::named(crate::catalog::DIVISOR_PATTERN), Relation::Toric, n, budget)?;
    Ok(r.members().iter().map(|pi| pi.position_of(1).unwrap_or(0) as u64).sum())
}

/// The patterns equivalent to `pat` under a relation that extends to patterns.
pub fn pattern_class(pat: &BivincularPattern, rel: Relation) -> Result<Vec<BivincularPattern>> {
    let mut out = match rel {
        Relation::Knuth => knuth_class_bfs(pat.perm())
            .into_iter()
            .map(|p| BivincularPattern::from_sets(p, pat.x(), pat.y()).expect("same length"))
            .collect(),
        Relation::Toric => pat.shift_orbit(),
        other => return Err(Error::RelationNotExtendable(other.name())),
    };
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub stable: bool,
    pub checked_up_to: usize,
    /// Smallest `n` at which the two sets differ, with the least permutation in the difference.
    pub witness: Option<(usize, Permutation)>,
}

/// Checks Ã_n(p) == A_n(p̃) for every n ≤ n_max, where p̃ is the pattern class of p.
pub fn is_stable(pat: &BivincularPattern, rel: Relation, n_max: usize, budget: Budget) -> Result<StabilityReport> {
    let class = pattern_class(pat, rel)?;
    budget.check(n_max)?;
    for n in 0..=n_max {
        let lhs: BTreeSet<Permutation> = class_avoiders(pat, rel, n, budget)?.members().iter().cloned().collect();
        let rhs: BTreeSet<Permutation> = avoid_all(&class, n, budget)?.members().iter().cloned().collect();
        if let Some(w) = lhs.symmetric_difference(&rhs).next() {
            return Ok(StabilityReport {
                stable: false,
                checked_up_to: n,
                witness: Some((n, w.clone())),
            });
        }
    }
    Ok(StabilityReport {
        stable: true,
        checked_up_to: n_max,
        witness: None,
    })
}

/// Representative and orbit of patterns under the relation's symmetry group.
fn symmetry_orbit(pat: &BivincularPattern, rel: Relation) -> Vec<BivincularPattern> {
    let mut orbit: Vec<BivincularPattern> = rel.symmetries().iter().map(|s| pat.apply_symmetry(s)).collect();
    orbit.sort();
    orbit.dedup();
    orbit
}

/// Groups `pats` into orbits under the relation's symmetries, each orbit sorted
/// and the list sorted by least member.
pub fn symmetry_classes(pats: &[BivincularPattern], rel: Relation) -> Vec<Vec<BivincularPattern>> {
    let mut seen: BTreeMap<BivincularPattern, Vec<BivincularPattern>> = BTreeMap::new();
    for p in pats {
        let orbit = symmetry_orbit(p, rel);
        seen.entry(orbit[0].clone()).or_insert(orbit);
    }
    seen.into_values().collect()
}

/// Number of classes when toric symmetry orbits are further merged along ⊕1.
pub fn shift_merged_class_count(length: usize) -> usize {
    let pats = BivincularPattern::all_of_length(length);
    let index: HashMap<&BivincularPattern, usize> = pats.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut parent: Vec<usize> = (0..pats.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for (i, p) in pats.iter().enumerate() {
        let neighbours = [p.pat_reverse(), p.pat_complement(), p.pat_inverse(), p.pat_shift()];
        for q in neighbours {
            let j = index[&q];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a] = b;
            }
        }
    }
    (0..pats.len()).filter(|&i| find(&mut parent, i) == i).count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    #[serde(serialize_with = "pattern_as_string")]
    pub representative: BivincularPattern,
    pub orbit_size: usize,
    /// Ã_n for n in the survey range.
    pub counts: Vec<u64>,
    /// Embedded sequence whose printed values match these counts.
    pub sequence: Option<&'static str>,
}

fn pattern_as_string<S: Serializer>(p: &BivincularPattern, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Survey {
    pub relation: Relation,
    pub length: usize,
    pub n_from: usize,
    pub n_to: usize,
    pub total_patterns: usize,
    pub representatives: usize,
    /// Toric only: classes after also merging along ⊕1.
    pub shift_merged: Option<usize>,
    pub rows: Vec<SurveyRow>,
}

/// Ã_n counts for one representative per symmetry orbit of length-`length` patterns.
pub fn survey(rel: Relation, length: usize, n_from: usize, n_to: usize, budget: Budget) -> Result<Survey> {
    budget.check(n_to)?;
    if n_from > n_to {
        return Err(Error::InvalidArgument(format!("empty range {n_from}..={n_to}")));
    }
    let pats = BivincularPattern::all_of_length(length);
    let orbits = symmetry_classes(&pats, rel);
    let partitions: Vec<ClassPartition> = (n_from..=n_to)
        .map(|n| ClassPartition::new(rel, n, budget))
        .collect::<Result<_>>()?;
    let rows: Vec<SurveyRow> = orbits
        .par_iter()
        .map(|orbit| {
            let counts: Vec<u64> = partitions.iter().map(|part| part.class_avoider_count(&orbit[0])).collect();
            SurveyRow {
                representative: orbit[0].clone(),
                orbit_size: orbit.len(),
                sequence: sequences::identify(n_from, &counts),
                counts,
            }
        })
        .collect();
    Ok(Survey {
        relation: rel,
        length,
        n_from,
        n_to,
        total_patterns: pats.len(),
        representatives: rows.len(),
        shift_merged: (rel == Relation::Toric).then(|| shift_merged_class_count(length)),
        rows,
    })
}
