//! Slow reference implementations written straight from the definitions.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use itertools::Itertools;
use permlab::{BivincularPattern, Permutation, Relation};

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn pat(s: &str) -> BivincularPattern {
    s.parse().unwrap()
}

/// Every occurrence as 1-based positions, by checking all k-subsets.
pub fn brute_occurrences(p: &BivincularPattern, pi: &Permutation) -> Vec<Vec<usize>> {
    let k = p.len();
    let n = pi.len();
    let w = pi.as_slice();
    let q = p.perm().as_slice();
    let mut out = Vec::new();
    for pos in (1..=n).combinations(k) {
        let vals: Vec<usize> = pos.iter().map(|&i| w[i - 1] as usize).collect();
        let iso = (0..k).all(|a| (0..k).all(|b| (vals[a] < vals[b]) == (q[a] < q[b])));
        if !iso {
            continue;
        }
        let mut i = vec![0];
        i.extend(&pos);
        i.push(n + 1);
        let mut j = vec![0];
        j.extend(vals.iter().copied().sorted());
        j.push(n + 1);
        let x_ok = p.x().iter().all(|x| i[x + 1] == i[x] + 1);
        let y_ok = p.y().iter().all(|y| j[y + 1] == j[y] + 1);
        if x_ok && y_ok {
            out.push(pos);
        }
    }
    out
}

pub fn brute_avoids(p: &BivincularPattern, pi: &Permutation) -> bool {
    brute_occurrences(p, pi).is_empty()
}

pub fn sn(n: usize) -> Vec<Permutation> {
    (1..=n as u32)
        .permutations(n)
        .map(|w| Permutation::new(w).unwrap())
        .sorted()
        .collect()
}

fn cycle_lengths(w: &[u32]) -> Vec<usize> {
    let mut seen = vec![false; w.len()];
    let mut lens = Vec::new();
    for s in 0..w.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = w[i] as usize - 1;
            len += 1;
        }
        if len > 0 {
            lens.push(len);
        }
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Toric orbit from the definition: write 0π on a circle, add m mod n+1, read from 0.
pub fn toric_orbit(pi: &Permutation) -> BTreeSet<Permutation> {
    let n = pi.len();
    let mut circle = vec![0u32];
    circle.extend(pi.as_slice());
    (0..=n)
        .map(|m| {
            let shifted: Vec<u32> = circle.iter().map(|&v| (v + m as u32) % (n as u32 + 1)).collect();
            let zero = shifted.iter().position(|&v| v == 0).unwrap();
            let word: Vec<u32> = (1..=n).map(|s| shifted[(zero + s) % (n + 1)]).collect();
            Permutation::new(word).unwrap()
        })
        .collect()
}

/// Adjacent-triple moves: xzy <-> zxy when x < y < z, and yxz <-> yzx when x < y < z.
fn knuth_moves(w: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for i in 0..w.len().saturating_sub(2) {
        let t = &w[i..i + 3];
        let swap_first = t[2] > t[0].min(t[1]) && t[2] < t[0].max(t[1]);
        let swap_last = t[0] > t[1].min(t[2]) && t[0] < t[1].max(t[2]);
        if swap_first {
            let mut v = w.to_vec();
            v.swap(i, i + 1);
            out.push(v);
        }
        if swap_last {
            let mut v = w.to_vec();
            v.swap(i + 1, i + 2);
            out.push(v);
        }
    }
    out
}

fn knuth_closure(pi: &Permutation) -> BTreeSet<Permutation> {
    let mut seen = BTreeSet::from([pi.as_slice().to_vec()]);
    let mut queue = VecDeque::from([pi.as_slice().to_vec()]);
    while let Some(w) = queue.pop_front() {
        for v in knuth_moves(&w) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen.into_iter().map(|w| Permutation::new(w).unwrap()).collect()
}

/// S_n split into classes using only the definitions above, sorted by least member.
pub fn oracle_classes(rel: Relation, n: usize) -> Vec<Vec<Permutation>> {
    let all = sn(n);
    let mut classes: Vec<Vec<Permutation>> = match rel {
        Relation::Conjugacy | Relation::Order | Relation::Descent => {
            let mut groups: BTreeMap<Vec<usize>, Vec<Permutation>> = BTreeMap::new();
            for pi in &all {
                let key = match rel {
                    Relation::Conjugacy => cycle_lengths(pi.as_slice()),
                    Relation::Order => vec![cycle_lengths(pi.as_slice()).into_iter().fold(1, |a, b| a / gcd(a, b) * b)],
                    _ => (1..n).filter(|&i| pi.as_slice()[i - 1] > pi.as_slice()[i]).collect(),
                };
                groups.entry(key).or_default().push(pi.clone());
            }
            groups.into_values().collect()
        }
        Relation::Knuth | Relation::Toric => {
            let mut seen = BTreeSet::new();
            let mut out = Vec::new();
            for pi in &all {
                if seen.contains(pi) {
                    continue;
                }
                let class = if rel == Relation::Knuth { knuth_closure(pi) } else { toric_orbit(pi) };
                seen.extend(class.iter().cloned());
                out.push(class.into_iter().collect());
            }
            out
        }
    };
    for c in &mut classes {
        c.sort();
    }
    classes.sort();
    classes
}

pub fn oracle_class_avoiders(p: &BivincularPattern, rel: Relation, n: usize) -> Vec<Permutation> {
    oracle_classes(rel, n)
        .into_iter()
        .filter(|c| c.iter().all(|pi| brute_avoids(p, pi)))
        .flatten()
        .sorted()
        .collect()
}

pub fn oracle_class_matchers(p: &BivincularPattern, rel: Relation, n: usize) -> Vec<Permutation> {
    oracle_classes(rel, n)
        .into_iter()
        .filter(|c| c.iter().all(|pi| !brute_avoids(p, pi)))
        .flatten()
        .sorted()
        .collect()
}

pub fn longest_increasing(w: &[u32]) -> usize {
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

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// σ by summing divisors one at a time.
pub fn slow_sigma(n: u64) -> u64 {
    (1..=n).filter(|d| n % d == 0).sum()
}
