//! Sieves and counting primitives: Euler's totient function, the Möbius
//! function, the totient summatory function Φ, and interval-restricted
//! coprimality counts φ(n; \[a,b\]).
//!
//! All tables are built once and immutable afterwards; every counting
//! operation borrows them read-only, so they can be shared freely across
//! threads.

use crate::error::{Error, Result};

/// Hard cap on sieve allocations. Each table costs 8 bytes per entry, so
/// this bounds a single table at ~1.6 GB.
const MAX_SIEVE_LIMIT: u64 = 200_000_000;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Sieved values of Euler's totient function φ(n) for 1 ≤ n ≤ limit.
#[derive(Debug, Clone)]
pub struct TotientTable {
    values: Vec<u64>,
}

impl TotientTable {
    /// Builds the table with the classic divide-out sieve,
    /// O(limit · log log limit).
    pub fn new(limit: u64) -> Result<Self> {
        check_limit(limit)?;
        let n = limit as usize;
        let mut values: Vec<u64> = (0..=n as u64).collect();
        for p in 2..=n {
            if values[p] == p as u64 {
                // p is prime: multiply out the (1 - 1/p) factor.
                for multiple in (p..=n).step_by(p) {
                    values[multiple] -= values[multiple] / p as u64;
                }
            }
        }
        Ok(TotientTable { values })
    }

    pub fn limit(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    /// φ(n). Panics if `n` is 0 or beyond the sieve limit.
    pub fn phi(&self, n: u64) -> u64 {
        assert!(n >= 1 && n <= self.limit(), "phi({n}) outside sieve range");
        self.values[n as usize]
    }
}

/// Sieved values of the Möbius function μ(n) ∈ {-1, 0, 1} for 1 ≤ n ≤ limit.
#[derive(Debug, Clone)]
pub struct MobiusTable {
    values: Vec<i8>,
}

impl MobiusTable {
    pub fn new(limit: u64) -> Result<Self> {
        check_limit(limit)?;
        let spf = FactorSieve::new(limit)?;
        let n = limit as usize;
        let mut values = vec![0i8; n + 1];
        if n >= 1 {
            values[1] = 1;
        }
        for m in 2..=n {
            let p = spf.smallest_prime(m as u64) as usize;
            let rest = m / p;
            values[m] = if rest.is_multiple_of(p) {
                0
            } else {
                -values[rest]
            };
        }
        Ok(MobiusTable { values })
    }

    pub fn limit(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    /// μ(n). Panics if `n` is 0 or beyond the sieve limit.
    pub fn mu(&self, n: u64) -> i8 {
        assert!(n >= 1 && n <= self.limit(), "mu({n}) outside sieve range");
        self.values[n as usize]
    }
}

/// Prefix sums Φ(i) = Σ_{j ≤ i} φ(j). Φ(i) equals |F_i| − 1, so this table
/// backs every Farey cardinality query in O(1).
#[derive(Debug, Clone)]
pub struct SummatoryTable {
    values: Vec<u64>,
}

impl SummatoryTable {
    /// Accumulates prefix sums over a totient table, checking for overflow.
    pub fn new(totients: &TotientTable) -> Result<Self> {
        let mut values = Vec::with_capacity(totients.values.len());
        values.push(0u64);
        let mut acc: u64 = 0;
        for n in 1..=totients.limit() {
            acc = acc
                .checked_add(totients.phi(n))
                .ok_or(Error::Overflow("totient summatory accumulation"))?;
            values.push(acc);
        }
        Ok(SummatoryTable { values })
    }

    pub fn limit(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    /// Φ(i). Panics if `i` is 0 or beyond the table limit.
    pub fn phi_sum(&self, i: u64) -> u64 {
        assert!(
            i >= 1 && i <= self.limit(),
            "phi_sum({i}) outside table range"
        );
        self.values[i as usize]
    }
}

/// Smallest-prime-factor sieve. Yields the distinct prime factors of any
/// n ≤ limit in O(log n), which is what the interval-totient evaluation in
/// hot rank loops needs.
#[derive(Debug, Clone)]
pub struct FactorSieve {
    spf: Vec<u32>,
}

impl FactorSieve {
    pub fn new(limit: u64) -> Result<Self> {
        check_limit(limit)?;
        if limit > u32::MAX as u64 {
            return Err(Error::resource(format!(
                "factor sieve limit {limit} exceeds u32 range"
            )));
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut primes: Vec<u32> = Vec::new();
        for m in 2..=n {
            if spf[m] == 0 {
                spf[m] = m as u32;
                primes.push(m as u32);
            }
            for &p in &primes {
                let q = m * p as usize;
                if p > spf[m] || q > n {
                    break;
                }
                spf[q] = p;
            }
        }
        Ok(FactorSieve { spf })
    }

    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    fn smallest_prime(&self, n: u64) -> u64 {
        debug_assert!(n >= 2);
        self.spf[n as usize] as u64
    }

    /// Distinct prime factors of n, ascending. Empty for n = 1.
    pub fn distinct_primes(&self, n: u64) -> Vec<u64> {
        assert!(
            n >= 1 && n <= self.limit(),
            "distinct_primes({n}) outside sieve range"
        );
        let mut rest = n;
        let mut primes = Vec::new();
        while rest > 1 {
            let p = self.smallest_prime(rest);
            primes.push(p);
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        primes
    }

    /// φ(n; \[a,b\]) using the precomputed factorization of n.
    pub fn phi_interval(&self, n: u64, a: u64, b: u64) -> Result<u64> {
        if n == 0 {
            return Err(Error::domain("phi_interval: n must be positive"));
        }
        if a == 0 {
            return Err(Error::domain("phi_interval: a must be positive"));
        }
        if b < a {
            return Ok(0);
        }
        Ok(coprime_count(&self.distinct_primes(n), a, b))
    }
}

fn check_limit(limit: u64) -> Result<()> {
    if limit == 0 {
        return Err(Error::domain("sieve limit must be at least 1"));
    }
    if limit > MAX_SIEVE_LIMIT {
        return Err(Error::resource(format!(
            "sieve limit {limit} exceeds the allocation cap {MAX_SIEVE_LIMIT}"
        )));
    }
    Ok(())
}

/// Number of integers in [a, b] coprime to the product of `primes`, by
/// inclusion–exclusion over the squarefree divisors they span. Cost 2^ω.
fn coprime_count(primes: &[u64], a: u64, b: u64) -> u64 {
    debug_assert!(a >= 1);
    if b < a {
        return 0;
    }
    let lo = a - 1;
    let mut total: i64 = 0;
    // Subset enumeration; ω(n) ≤ 15 for any n within sieve range.
    for mask in 0u32..(1u32 << primes.len()) {
        let mut d: u64 = 1;
        for (idx, &p) in primes.iter().enumerate() {
            if mask & (1 << idx) != 0 {
                d *= p;
            }
        }
        let count = (b / d - lo / d) as i64;
        if mask.count_ones() % 2 == 0 {
            total += count;
        } else {
            total -= count;
        }
    }
    debug_assert!(total >= 0);
    total as u64
}

/// φ(n; \[a,b\]): the number of integers in [a, b] relatively prime to n.
///
/// The interval may be empty (`b < a`), in which case the count is 0.
/// This standalone form factorizes n by trial division; rank loops that
/// query many n use [`FactorSieve::phi_interval`] instead.
pub fn phi_interval(n: u64, a: u64, b: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("phi_interval: n must be positive"));
    }
    if a == 0 {
        return Err(Error::domain("phi_interval: a must be positive"));
    }
    if b < a {
        return Ok(0);
    }
    Ok(coprime_count(&distinct_primes_trial(n), a, b))
}

fn distinct_primes_trial(n: u64) -> Vec<u64> {
    let mut rest = n;
    let mut primes = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            primes.push(p);
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        primes.push(rest);
    }
    primes
}

/// Φ(i) = Σ_{j=1}^{i} φ(j), summed directly from a totient table.
///
/// [`SummatoryTable`] answers the same query in O(1); this direct form is
/// the cross-check route.
pub fn totient_summatory(i: u64, totients: &TotientTable) -> Result<u64> {
    if i == 0 || i > totients.limit() {
        return Err(Error::domain(format!(
            "totient_summatory: i = {i} outside table range 1..={}",
            totients.limit()
        )));
    }
    let mut acc: u64 = 0;
    for j in 1..=i {
        acc = acc
            .checked_add(totients.phi(j))
            .ok_or(Error::Overflow("totient summatory sum"))?;
    }
    Ok(acc)
}
