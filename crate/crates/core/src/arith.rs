//! Number theory behind toric classes: natural and divisor permutations,
//! counts of toric classes by size, σ(n) read off divisor permutations, and
//! Robin's inequality.
//!
//! Arithmetic functions use trial division and are meant for `n` up to about
//! `10^7`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Prime factorisation as `(prime, exponent)` pairs, primes increasing.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Divisors of `n` in increasing order. `divisors(0)` is empty.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient.
pub fn phi(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Möbius function.
pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sum of divisors.
pub fn sigma(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(p, e)| (0..=e).map(|i| p.pow(i)).sum::<u64>())
        .product()
}

/// Number of divisors.
pub fn num_divisors(n: u64) -> u64 {
    factorize(n).into_iter().map(|(_, e)| e as u64 + 1).product()
}

/// Least positive `x` with `a·x ≡ 1 (mod m)`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// `ν_{k,n}`: the permutation read from 0 after placing `0, 1, …, n` around a
/// circle of `n + 1` slots, each letter `k` steps after the previous one.
///
/// Letter `ℓ` of the result is `ℓ·j mod (n+1)` where `j = k⁻¹ mod (n+1)` is
/// the *increment*, which is also the first letter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NaturalPermutation {
    pub k: u64,
    pub n: usize,
    pub increment: u64,
    pub perm: Permutation,
}

impl NaturalPermutation {
    pub fn is_divisor_permutation(&self) -> bool {
        self.n > 0 && self.n as u64 % self.k == 0
    }

    /// Position of letter 1, computed from the increment alone.
    pub fn position_of_one(&self) -> u64 {
        position_of_one(self.increment, self.n as u64)
    }

    /// `nu_{k,n} = perm [= delta_{k|n}]`.
    pub fn table_line(&self) -> String {
        let mut line = format!("nu_{{{},{}}} = {}", self.k, self.n, self.perm.to_compact_string());
        if self.is_divisor_permutation() {
            line.push_str(&format!(" = delta_{{{}|{}}}", self.k, self.n));
        }
        line
    }
}

fn position_of_one(increment: u64, n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    mod_inverse(increment, n + 1).expect("increment is a unit")
}

pub fn natural_perm(k: u64, n: usize) -> Result<NaturalPermutation> {
    let modulus = n as u64 + 1;
    if n == 0 {
        return Ok(NaturalPermutation {
            k,
            n,
            increment: 0,
            perm: Permutation::identity(0),
        });
    }
    if k == 0 || k > n as u64 || gcd(k, modulus) != 1 {
        return Err(Error::NotCoprime { k, modulus });
    }
    let j = mod_inverse(k, modulus).ok_or(Error::NotCoprime { k, modulus })?;
    let word = (1..=n as u64).map(|l| (l * j % modulus) as u32).collect();
    Ok(NaturalPermutation {
        k,
        n,
        increment: j,
        perm: Permutation::from_word_unchecked(word),
    })
}

/// All natural permutations of `S_n`, by increasing `k`.
pub fn natural_perms(n: usize) -> Vec<NaturalPermutation> {
    if n == 0 {
        return vec![natural_perm(1, 0).unwrap()];
    }
    (1..=n as u64)
        .filter(|&k| gcd(k, n as u64 + 1) == 1)
        .map(|k| natural_perm(k, n).unwrap())
        .collect()
}

/// `δ_{k|n}` for every divisor `k` of `n`.
pub fn divisor_perms(n: usize) -> Vec<NaturalPermutation> {
    divisors(n as u64)
        .into_iter()
        .map(|k| natural_perm(k, n).expect("a divisor of n is coprime to n + 1"))
        .collect()
}

/// `U(m, ℓ)`: permutations of `S_{m-1}` whose circular form is invariant
/// under `⊕ℓ`, zero unless `ℓ | m`.
pub fn cyclic_invariant_count(m: u64, l: u64) -> Result<i128> {
    if l == 0 || m % l != 0 {
        return Ok(0);
    }
    let q = m / l;
    let overflow = || Error::Assertion(format!("U({m}, {l}) overflows 128 bits"));
    let mut u = phi(q) as i128;
    for _ in 0..l {
        u = u.checked_mul(q as i128).ok_or_else(overflow)?;
    }
    for i in 2..=l {
        u = u.checked_mul(i as i128).ok_or_else(overflow)?;
    }
    Ok(u)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SizeCensusEntry {
    pub size: u64,
    pub count: u64,
}

/// Number of toric classes of each size `k | n+1` in `S_n`, by Möbius
/// inversion of [`cyclic_invariant_count`]. Sizes not dividing `n + 1` have
/// no classes and are omitted.
pub fn steggall_census(n: usize) -> Result<Vec<SizeCensusEntry>> {
    let m = n as u64 + 1;
    let mut out = Vec::new();
    for k in divisors(m) {
        let mut sum: i128 = 0;
        for d in divisors(k) {
            let term = cyclic_invariant_count(m, k / d)?;
            sum = sum
                .checked_add(mobius(d) as i128 * term)
                .ok_or_else(|| Error::Assertion("Möbius sum overflows".into()))?;
        }
        let denom = m as i128 * k as i128;
        if sum % denom != 0 || sum < 0 {
            return Err(Error::Assertion(format!(
                "class count for size {k} in S_{n} is not a non-negative integer: {sum}/{denom}"
            )));
        }
        out.push(SizeCensusEntry {
            size: k,
            count: (sum / denom) as u64,
        });
    }
    Ok(out)
}

/// σ(n) as the sum of the positions of 1 in the divisor permutations of `S_n`.
pub fn sigma_via_divisor_perms(n: u64) -> u64 {
    let modulus = n + 1;
    divisors(n)
        .into_iter()
        .map(|k| {
            let increment = mod_inverse(k, modulus).expect("k | n implies gcd(k, n+1) = 1");
            position_of_one(increment, n)
        })
        .sum()
}

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Below this relative margin a comparison is reported as inconclusive.
pub const ROBIN_GUARD: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RobinVerdict {
    Holds,
    Violated,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RobinCheck {
    pub n: u64,
    pub sigma: u64,
    pub bound: f64,
    pub verdict: RobinVerdict,
}

impl RobinCheck {
    pub fn holds(&self) -> bool {
        self.verdict == RobinVerdict::Holds
    }
}

/// Compares σ(n) with `e^γ · n · ln ln n`.
pub fn robin_check(n: u64) -> Result<RobinCheck> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "Robin's bound needs n ≥ 3, got {n}"
        )));
    }
    let s = sigma(n);
    let nf = n as f64;
    let bound = EULER_GAMMA.exp() * nf * nf.ln().ln();
    let margin = (bound - s as f64).abs() / bound;
    let verdict = if margin < ROBIN_GUARD {
        RobinVerdict::Inconclusive
    } else if (s as f64) < bound {
        RobinVerdict::Holds
    } else {
        RobinVerdict::Violated
    };
    Ok(RobinCheck {
        n,
        sigma: s,
        bound,
        verdict,
    })
}
