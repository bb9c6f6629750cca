//! Row-insertion RSK, elementary Knuth transformations and hook shapes.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// An integer partition, parts weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Shape(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `(a, 1, …, 1)`; the empty shape counts as a hook.
    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }

    fn column_lengths(&self) -> Vec<usize> {
        let width = self.0.first().copied().unwrap_or(0);
        (0..width)
            .map(|j| self.0.iter().take_while(|&&r| r > j).count())
            .collect()
    }

    /// Hook-length formula: `n! / ∏ hooks`.
    pub fn count_syt(&self) -> u128 {
        let cols = self.column_lengths();
        let mut num: u128 = (1..=self.size() as u128).product();
        let mut hooks: Vec<u128> = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for (j, &col) in cols.iter().enumerate().take(row) {
                hooks.push((row - j - 1 + col - i - 1 + 1) as u128);
            }
        }
        // Divide as we go to keep intermediate values small.
        for h in hooks {
            num /= h;
        }
        num
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Shape> {
        crate::perm::CycleType::all(n)
            .into_iter()
            .map(|c| Shape(c.parts().iter().map(|&p| p as usize).collect()))
            .collect()
    }

    /// Every standard Young tableau of this shape.
    pub fn standard_tableaux(&self) -> Vec<YoungTableau> {
        fn fill(shape: &[usize], rows: &mut Vec<Vec<u32>>, next: u32, total: u32, out: &mut Vec<YoungTableau>) {
            if next > total {
                out.push(YoungTableau { rows: rows.clone() });
                return;
            }
            for i in 0..shape.len() {
                let len = rows[i].len();
                if len < shape[i] && (i == 0 || rows[i - 1].len() > len) {
                    rows[i].push(next);
                    fill(shape, rows, next + 1, total, out);
                    rows[i].pop();
                }
            }
        }
        let mut out = Vec::new();
        let mut rows = vec![Vec::new(); self.0.len()];
        fill(&self.0, &mut rows, 1, self.size() as u32, &mut out);
        out
    }

    /// The tableau filled row by row, left to right.
    pub fn trivial_filling(&self) -> YoungTableau {
        let mut next = 0u32;
        YoungTableau {
            rows: self
                .0
                .iter()
                .map(|&len| {
                    (0..len)
                        .map(|_| {
                            next += 1;
                            next
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A Young tableau as ragged rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YoungTableau {
    rows: Vec<Vec<u32>>,
}

impl YoungTableau {
    /// Checks that the row lengths form a partition.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let mut rows = rows;
        rows.retain(|r| !r.is_empty());
        Shape::new(rows.iter().map(Vec::len).collect())?;
        Ok(YoungTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Contains `1..=n` once each, rows and columns strictly increasing.
    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for row in &self.rows {
            for &v in row {
                if v == 0 || v as usize > n || seen[v as usize] {
                    return false;
                }
                seen[v as usize] = true;
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| lo > hi))
    }

    pub fn first_row(&self) -> &[u32] {
        self.rows.first().map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Rows on separate lines, entries separated by spaces.
impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

/// One bump during row insertion: `value` leaves row `row` (0-based) for
/// the next row, whose first entry at that moment is `next_row_first`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bump {
    pub row: usize,
    pub value: u32,
    pub next_row_first: Option<u32>,
}

fn row_insert(rows: &mut Vec<Vec<u32>>, value: u32, mut trace: Option<&mut Vec<Bump>>) -> usize {
    let mut x = value;
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![x]);
            return r;
        }
        let row = &mut rows[r];
        match row.iter().position(|&y| y > x) {
            None => {
                row.push(x);
                return r;
            }
            Some(c) => {
                let bumped = std::mem::replace(&mut row[c], x);
                if let Some(t) = trace.as_deref_mut() {
                    t.push(Bump {
                        row: r,
                        value: bumped,
                        next_row_first: rows.get(r + 1).and_then(|n| n.first().copied()),
                    });
                }
                x = bumped;
                r += 1;
            }
        }
    }
}

/// Insertion and recording tableaux `(P(π), Q(π))`.
pub fn rsk(pi: &Permutation) -> (YoungTableau, YoungTableau) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (step, &v) in pi.as_slice().iter().enumerate() {
        let r = row_insert(&mut p, v, None);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(step as u32 + 1);
    }
    (YoungTableau { rows: p }, YoungTableau { rows: q })
}

pub fn insertion_tableau(pi: &Permutation) -> YoungTableau {
    let mut p: Vec<Vec<u32>> = Vec::new();
    for &v in pi.as_slice() {
        row_insert(&mut p, v, None);
    }
    YoungTableau { rows: p }
}

/// Every bump performed while building `P(π)`.
pub fn insertion_trace(pi: &Permutation) -> Vec<Bump> {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut trace = Vec::new();
    for &v in pi.as_slice() {
        row_insert(&mut p, v, Some(&mut trace));
    }
    trace
}

/// The permutation whose RSK pair is `(P, Q)`.
pub fn inverse_rsk(p: &YoungTableau, q: &YoungTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    if !p.is_standard() {
        return Err(Error::NotStandard(format!("P = {:?}", p.rows)));
    }
    if !q.is_standard() {
        return Err(Error::NotStandard(format!("Q = {:?}", q.rows)));
    }
    let n = p.size();
    let mut rows = p.rows.clone();
    let mut where_recorded = vec![0usize; n + 1];
    for (r, row) in q.rows.iter().enumerate() {
        for &v in row {
            where_recorded[v as usize] = r;
        }
    }
    let mut word = vec![0u32; n];
    for step in (1..=n).rev() {
        let mut r = where_recorded[step];
        let mut x = rows[r].pop().expect("shapes agree");
        if rows[r].is_empty() {
            rows.pop();
        }
        while r > 0 {
            r -= 1;
            let row = &mut rows[r];
            let c = row.iter().rposition(|&y| y < x).expect("row below has a smaller entry");
            x = std::mem::replace(&mut row[c], x);
        }
        word[step - 1] = x;
    }
    Ok(Permutation::from_word_unchecked(word))
}

/// Words one elementary Knuth transformation away from `w` (distinct letters).
///
/// On an adjacent triple `abc` the moves are: swap `bc` when `c < a < b` or
/// `b < a < c`; swap `ab` when `a < c < b` or `b < c < a`.
pub fn knuth_neighbors_word(w: &[u32]) -> Vec<Vec<u32>> {
    let mut out = BTreeSet::new();
    for i in 0..w.len().saturating_sub(2) {
        let (a, b, c) = (w[i], w[i + 1], w[i + 2]);
        if (c < a && a < b) || (b < a && a < c) {
            let mut v = w.to_vec();
            v.swap(i + 1, i + 2);
            out.insert(v);
        }
        if (a < c && c < b) || (b < c && c < a) {
            let mut v = w.to_vec();
            v.swap(i, i + 1);
            out.insert(v);
        }
    }
    out.into_iter().collect()
}

pub fn knuth_neighbors(w: &Permutation) -> BTreeSet<Permutation> {
    knuth_neighbors_word(w.as_slice())
        .into_iter()
        .map(Permutation::from_word_unchecked)
        .collect()
}

/// Closure of `w` under elementary Knuth transformations, by breadth-first search.
pub fn knuth_class_bfs(w: &Permutation) -> BTreeSet<Permutation> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(cur) = queue.pop_front() {
        for next in knuth_neighbors(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Knuth class of `P` via `inverse_rsk(P, Q)` for every standard `Q`.
pub fn knuth_class_of_tableau(p: &YoungTableau) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = p
        .shape()
        .standard_tableaux()
        .iter()
        .map(|q| inverse_rsk(p, q).expect("P standard, Q of the same shape"))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn lis(w: &[u32]) -> usize {
        let mut best = vec![1; w.len()];
        for i in 0..w.len() {
            for j in 0..i {
                if w[j] < w[i] {
                    best[i] = best[i].max(best[j] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    #[test]
    fn rsk_of_monotone_permutations() {
        let (pt, qt) = rsk(&Permutation::identity(5));
        assert_eq!(pt.rows(), &[vec![1, 2, 3, 4, 5]]);
        assert_eq!(pt, qt);
        let (pt, qt) = rsk(&Permutation::reverse_identity(4));
        assert_eq!(pt.rows(), &[vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(pt, qt);
    }

    #[test]
    fn rsk_example_and_print() {
        let (pt, qt) = rsk(&p("241635"));
        assert_eq!(pt.to_string(), "1 3 5\n2 4 6");
        assert_eq!(qt.to_string(), "1 2 4\n3 5 6");
    }

    #[test]
    fn first_row_is_longest_increasing_subsequence() {
        for pi in Permutation::all(6) {
            let (pt, qt) = rsk(&pi);
            assert!(pt.is_standard() && qt.is_standard());
            assert_eq!(pt.shape(), qt.shape());
            assert_eq!(pt.first_row().len(), lis(pi.as_slice()), "{pi}");
        }
    }

    #[test]
    fn inverse_rsk_roundtrip_on_s6() {
        for pi in Permutation::all(6) {
            let (pt, qt) = rsk(&pi);
            assert_eq!(inverse_rsk(&pt, &qt).unwrap(), pi);
        }
    }

    #[test]
    fn inverse_rsk_errors() {
        let row = YoungTableau::new(vec![vec![1, 2, 3]]).unwrap();
        let col = YoungTableau::new(vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(inverse_rsk(&row, &col), Err(Error::ShapeMismatch));
        let bad = YoungTableau::new(vec![vec![2, 1, 3]]).unwrap();
        assert!(matches!(inverse_rsk(&bad, &row), Err(Error::NotStandard(_))));
        assert_eq!(inverse_rsk(&row, &row).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn trivially_filled_hook_gives_consecutive_rise() {
        for k in 1..=5 {
            let n = 6;
            let mut parts = vec![k];
            parts.extend(std::iter::repeat_n(1, n - k));
            let shape = Shape::new(parts).unwrap();
            let q = shape.trivial_filling();
            for pt in shape.standard_tableaux() {
                let w = inverse_rsk(&pt, &q).unwrap();
                let w = w.as_slice();
                assert!(w[..k].windows(2).all(|x| x[0] < x[1]), "{w:?}");
            }
        }
    }

    #[test]
    fn knuth_moves() {
        assert!(knuth_neighbors(&p("24135")).contains(&p("21435")));
        assert!(knuth_neighbors(&p("21435")).contains(&p("21453")));
        assert!(knuth_neighbors(&Permutation::identity(6)).is_empty());
        for pi in Permutation::all(5) {
            for nb in knuth_neighbors(&pi) {
                assert!(knuth_neighbors(&nb).contains(&pi));
                assert_eq!(insertion_tableau(&nb), insertion_tableau(&pi));
            }
        }
    }

    #[test]
    fn bfs_closure_equals_equal_insertion_tableau() {
        for w in Permutation::all(5) {
            let bfs: Vec<Permutation> = knuth_class_bfs(&w).into_iter().collect();
            let by_tableau = knuth_class_of_tableau(&insertion_tableau(&w));
            assert_eq!(bfs, by_tableau, "{w}");
        }
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(Shape::new(vec![5]).unwrap().count_syt(), 1);
        assert_eq!(Shape::new(vec![3, 2]).unwrap().count_syt(), 5);
        assert_eq!(Shape::new(vec![3, 2, 1]).unwrap().count_syt(), 16);
        for n in 1..=8 {
            for shape in Shape::all(n) {
                assert_eq!(shape.count_syt(), shape.standard_tableaux().len() as u128);
            }
            let total: u128 = Shape::all(n).iter().map(|s| s.count_syt().pow(2)).sum();
            assert_eq!(total, (1..=n as u128).product::<u128>());
        }
    }

    #[test]
    fn hook_predicate() {
        assert!(Shape::new(vec![3, 1, 1]).unwrap().is_hook());
        assert!(Shape::new(vec![1, 1]).unwrap().is_hook());
        assert!(!Shape::new(vec![2, 2]).unwrap().is_hook());
        assert!(Shape::new(vec![1, 2]).is_err());
    }

    #[test]
    fn hook_insertion_bumps_stay_in_first_column() {
        for pi in Permutation::all(6) {
            if !insertion_tableau(&pi).shape().is_hook() {
                continue;
            }
            for bump in insertion_trace(&pi) {
                if let Some(first) = bump.next_row_first {
                    assert!(bump.value < first, "{pi}: {bump:?}");
                }
            }
        }
    }
}
