//! Permutations in one-line notation, circular permutations of `0..=n`,
//! cycle types and the toric `⊕` action.
//!
//! Letters of a [`Permutation`] are 1-based (`1..=n`). Letters of a
//! [`CircularPermutation`] are 0-based (`0..=n`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=n` stored as its one-line word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Validates that `word` uses each of `1..=word.len()` exactly once.
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::ParsePermutation {
                    input: format_word(&word),
                    reason: format!("letter {v} out of range 1..={n}"),
                });
            }
            if seen[v] {
                return Err(Error::ParsePermutation {
                    input: format_word(&word),
                    reason: format!("letter {v} repeated"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    /// The decreasing permutation `n…21`.
    pub fn reverse_identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).rev().collect(),
        }
    }

    /// Order-isomorphic standardisation of a word of distinct letters.
    pub fn standardize(letters: &[u32]) -> Result<Self> {
        let mut idx: Vec<usize> = (0..letters.len()).collect();
        idx.sort_by_key(|&i| letters[i]);
        if idx.windows(2).any(|w| letters[w[0]] == letters[w[1]]) {
            return Err(Error::InvalidArgument("word has repeated letters".into()));
        }
        let mut word = vec![0; letters.len()];
        for (rank, &i) in idx.iter().enumerate() {
            word[i] = rank as u32 + 1;
        }
        Ok(Permutation { word })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.word
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.word
    }

    /// `π(i)` for a 1-based position `i`.
    pub fn apply(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    /// 1-based position of letter `v`.
    pub fn position_of(&self, v: u32) -> Option<usize> {
        self.word.iter().position(|&w| w == v).map(|p| p + 1)
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// `(σ ∘ τ)(i) = σ(τ(i))`.
    pub fn compose(&self, tau: &Permutation) -> Result<Permutation> {
        if self.len() != tau.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: tau.len(),
            });
        }
        Ok(Permutation {
            word: tau.word.iter().map(|&t| self.word[t as usize - 1]).collect(),
        })
    }

    pub fn reverse(&self) -> Permutation {
        Permutation {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    pub fn complement(&self) -> Permutation {
        let n = self.len() as u32;
        Permutation {
            word: self.word.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = i as u32 + 1;
        }
        Permutation { word }
    }

    /// Disjoint cycles, each starting at its least element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.word[x - 1] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_parts(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    /// Least `m ≥ 1` with `π^m = id`.
    pub fn order(&self) -> u64 {
        self.cycle_type().order()
    }

    /// 1-based positions `i` with `π_i > π_{i+1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `π°`, the circular permutation `0π`.
    pub fn to_circular(&self) -> CircularPermutation {
        let mut word = Vec::with_capacity(self.len() + 1);
        word.push(0);
        word.extend_from_slice(&self.word);
        CircularPermutation { word }
    }

    /// Reads a circular permutation from 0.
    pub fn from_circular(lambda: &CircularPermutation) -> Permutation {
        Permutation {
            word: lambda.word[1..].to_vec(),
        }
    }

    /// `π ⊕ m = (π° ⊕ m)∘`. `m` is taken modulo `n + 1`.
    pub fn oplus(&self, m: usize) -> Permutation {
        let modulus = self.len() + 1;
        let m = m % modulus;
        if m == 0 {
            return self.clone();
        }
        // Letter `n + 1 - m` of π° becomes 0; read on from its position.
        let target = (modulus - m) as u32;
        let start = self.word.iter().position(|&v| v == target).unwrap() + 1;
        let mut word = Vec::with_capacity(self.len());
        for t in 1..modulus {
            let idx = (start + t) % modulus;
            let letter = if idx == 0 { 0 } else { self.word[idx - 1] };
            word.push(((letter as usize + m) % modulus) as u32);
        }
        Permutation { word }
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> SymmetricGroup {
        SymmetricGroup {
            next: Some(Permutation::identity(n)),
        }
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<u32>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.word
    }
}

fn format_word(word: &[u32]) -> String {
    if word.len() <= 9 && word.iter().all(|&v| v <= 9) {
        word.iter().map(|v| v.to_string()).collect()
    } else {
        word.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Single digits, with multi-digit letters in parentheses: `123456789(10)`.
fn parse_compact(s: &str) -> Result<Vec<u32>> {
    let bad = |reason: String| Error::ParsePermutation {
        input: s.to_string(),
        reason,
    };
    let mut word = Vec::new();
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c == '(' {
            let inner: String = chars.by_ref().take_while(|&c| c != ')').collect();
            word.push(inner.parse().map_err(|_| bad(format!("bad letter `({inner})`")))?);
        } else {
            word.push(c.to_digit(10).ok_or_else(|| bad(format!("unexpected character `{c}`")))?);
        }
    }
    Ok(word)
}

impl Permutation {
    /// One character per letter, letters above 9 in parentheses.
    pub fn to_compact_string(&self) -> String {
        self.word
            .iter()
            .map(|&v| if v <= 9 { v.to_string() } else { format!("({v})") })
            .collect()
    }
}

/// Digit string for `n ≤ 9`, comma-separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.word))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::ParsePermutation {
                    input: s.to_string(),
                    reason: e.to_string(),
                })?
        } else {
            parse_compact(s)?
        };
        Permutation::new(word).map_err(|e| match e {
            Error::ParsePermutation { reason, .. } => Error::ParsePermutation {
                input: s.to_string(),
                reason,
            },
            other => other,
        })
    }
}

/// Lexicographic iterator over `S_n`.
#[derive(Debug, Clone)]
pub struct SymmetricGroup {
    next: Option<Permutation>,
}

impl Iterator for SymmetricGroup {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.word.clone();
        if next_permutation(&mut w) {
            self.next = Some(Permutation { word: w });
        }
        Some(current)
    }
}

pub(crate) fn next_permutation(w: &mut [u32]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// A circular permutation of `0..=n`, stored rotated so that 0 leads.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircularPermutation {
    word: Vec<u32>,
}

impl CircularPermutation {
    /// Accepts any rotation of a word over `0..=n`.
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let len = word.len();
        let mut seen = vec![false; len];
        for &v in &word {
            if v as usize >= len || seen[v as usize] {
                return Err(Error::ParsePermutation {
                    input: word.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
                    reason: "not a bijection on 0..=n".into(),
                });
            }
            seen[v as usize] = true;
        }
        if len == 0 {
            return Err(Error::InvalidArgument(
                "a circular permutation contains at least the letter 0".into(),
            ));
        }
        let zero = word.iter().position(|&v| v == 0).unwrap();
        let mut word = word;
        word.rotate_left(zero);
        Ok(CircularPermutation { word })
    }

    /// Number of non-zero letters.
    pub fn n(&self) -> usize {
        self.word.len() - 1
    }

    /// Canonical word, starting with 0.
    pub fn as_slice(&self) -> &[u32] {
        &self.word
    }

    /// `λ ⊕ m`: add `m` to every letter modulo `n + 1`.
    pub fn oplus(&self, m: usize) -> CircularPermutation {
        let modulus = self.word.len();
        let shifted = self
            .word
            .iter()
            .map(|&v| ((v as usize + m) % modulus) as u32)
            .collect();
        CircularPermutation::new(shifted).expect("shift preserves bijectivity")
    }

    pub fn reverse(&self) -> CircularPermutation {
        CircularPermutation::new(self.word.iter().rev().copied().collect()).unwrap()
    }

    /// Complement modulo `n + 1`; fixes 0.
    pub fn complement(&self) -> CircularPermutation {
        let modulus = self.word.len() as u32;
        CircularPermutation::new(
            self.word
                .iter()
                .map(|&v| (modulus - v) % modulus)
                .collect(),
        )
        .unwrap()
    }

    /// Inverse of the canonical word read as a map on `0..=n`.
    pub fn inverse(&self) -> CircularPermutation {
        let mut word = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize] = i as u32;
        }
        CircularPermutation { word }
    }
}

impl fmt::Display for CircularPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.word))
    }
}

impl FromStr for CircularPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u32>().ok())
                .collect::<Option<Vec<_>>>()
        } else {
            s.chars().map(|c| c.to_digit(10)).collect::<Option<Vec<_>>>()
        };
        let word = word.ok_or_else(|| Error::ParsePermutation {
            input: s.to_string(),
            reason: "expected digits or comma-separated integers".into(),
        })?;
        CircularPermutation::new(word)
    }
}

/// Cycle lengths in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleType {
    parts: Vec<u32>,
}

impl CycleType {
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// lcm of the parts.
    pub fn order(&self) -> u64 {
        self.parts
            .iter()
            .fold(1u64, |acc, &p| crate::arith::lcm(acc, p as u64))
    }

    /// Number of permutations of this cycle type: `n! / ∏ (m_i! · i^{m_i})`.
    pub fn class_size(&self) -> u128 {
        let mut size: u128 = (1..=self.n() as u128).product();
        for (len, group) in &itertools::Itertools::chunk_by(self.parts.iter(), |&&p| p) {
            let m = group.count() as u32;
            size /= (len as u128).pow(m);
            size /= (1..=m as u128).product::<u128>();
        }
        size
    }

    /// All partitions of `n`, each as a cycle type, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<CycleType> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<CycleType>) {
            if rest == 0 {
                out.push(CycleType { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n as u32, n as u32, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn compose_natural_permutations() {
        assert_eq!(p("246135").compose(&p("362514")).unwrap(), p("654321"));
    }

    #[test]
    fn compose_identity_and_mismatch() {
        let pi = p("31524");
        assert_eq!(Permutation::identity(5).compose(&pi).unwrap(), pi);
        assert_eq!(
            pi.compose(&p("21")),
            Err(Error::LengthMismatch { left: 5, right: 2 })
        );
    }

    #[test]
    fn inverse_of_2413() {
        assert_eq!(p("2413").inverse(), p("3142"));
        assert_eq!(Permutation::identity(6).reverse(), p("654321"));
    }

    #[test]
    fn cycle_type_example() {
        let pi = p("948167523");
        assert_eq!(pi.cycles(), vec![vec![1, 9, 3, 8, 2, 4], vec![5, 6, 7]]);
        assert_eq!(pi.cycle_type().parts(), &[6, 3]);
        assert_eq!(pi.order(), 6);
        assert_eq!(Permutation::identity(4).cycle_type().parts(), &[1, 1, 1, 1]);
        assert_eq!(Permutation::identity(4).order(), 1);
    }

    #[test]
    fn order_matches_iterated_composition() {
        let pi = p("415263");
        let id = Permutation::identity(6);
        let mut power = pi.clone();
        let mut m = 1;
        while power != id {
            power = pi.compose(&power).unwrap();
            m += 1;
        }
        assert_eq!(pi.order(), m);
    }

    #[test]
    fn circular_reading() {
        assert_eq!(p("1243").to_circular().to_string(), "01243");
        let lambda: CircularPermutation = "130254".parse().unwrap();
        assert_eq!(Permutation::from_circular(&lambda), p("25413"));
        for pi in Permutation::all(5) {
            assert_eq!(Permutation::from_circular(&pi.to_circular()), pi);
        }
    }

    #[test]
    fn oplus_example() {
        let pi = p("1243");
        assert_eq!(pi.to_circular().oplus(2), "23410".parse().unwrap());
        assert_eq!(pi.oplus(2), p("2341"));
        assert_eq!(pi.oplus(1), p("4123"));
        assert_eq!(pi.oplus(3), p("2134"));
        assert_eq!(pi.oplus(4), p("1324"));
        assert_eq!(pi.oplus(0), pi);
        assert_eq!(pi.oplus(5), pi);
    }

    #[test]
    fn circular_inverse_example() {
        let lambda: CircularPermutation = "04372156".parse().unwrap();
        assert_eq!(lambda.oplus(1), "15403267".parse().unwrap());
        assert_eq!(lambda.oplus(1).inverse(), "63405217".parse().unwrap());
        assert_eq!(lambda.inverse(), "05421673".parse().unwrap());
        assert_eq!(lambda.inverse().oplus(5), "52176340".parse().unwrap());
    }

    #[test]
    fn parse_and_print() {
        let long: Permutation = "5,10,4,9,3,8,2,7,1,6".parse().unwrap();
        assert_eq!(long.len(), 10);
        assert_eq!(long.to_string(), "5,10,4,9,3,8,2,7,1,6");
        assert_eq!(p("2413").to_string(), "2413");
        assert!("2213".parse::<Permutation>().is_err());
        assert!("1243x".parse::<Permutation>().is_err());
        assert!("1,2,4".parse::<Permutation>().is_err());
        assert!("0".parse::<Permutation>().is_err());
        assert_eq!("".parse::<Permutation>().unwrap(), Permutation::identity(0));
    }

    #[test]
    fn symmetric_group_sizes() {
        let counts: Vec<usize> = (0..=6).map(|n| Permutation::all(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 24, 120, 720]);
        let s3: Vec<String> = Permutation::all(3).map(|p| p.to_string()).collect();
        assert_eq!(s3, ["123", "132", "213", "231", "312", "321"]);
    }

    #[test]
    fn partitions_and_class_sizes() {
        let counts: Vec<usize> = (1..=9).map(|n| CycleType::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30]);
        for n in 0..=7 {
            let total: u128 = CycleType::all(n).iter().map(|c| c.class_size()).sum();
            assert_eq!(total, (1..=n as u128).product::<u128>());
        }
    }

    #[test]
    fn compact_form() {
        let pi = p("6,1,7,2,8,3,9,4,10,5");
        assert_eq!(pi.to_compact_string(), "61728394(10)5");
        assert_eq!(p("61728394(10)5"), pi);
        assert!("12(x)".parse::<Permutation>().is_err());
    }

    #[test]
    fn standardize_word() {
        assert_eq!(Permutation::standardize(&[6, 4, 8, 5]).unwrap(), p("3142"));
        assert!(Permutation::standardize(&[1, 1]).is_err());
    }
}
