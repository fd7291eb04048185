//! Census of linear, integral, irreducible polynomials
//! a₁x₁ + … + a_D·x_D − a_{D+1} with Σ|a_i| ≤ N (i ≤ D) and at least one
//! root in the unit D-cube, for D ∈ {0, 1, 2}.
//!
//! D = 0 admits only the null polynomial. D = 1 reproduces the Farey
//! sequence: the census equals |F_N|. D = 2 grows like 2N³/(3ζ(3)).
//!
//! Irreducibility for linear forms means the coefficient tuple is
//! primitive (gcd 1). Polynomials are counted up to overall sign by
//! default — the canonical representative has its first nonzero
//! coefficient positive — because negation preserves the root set; the
//! doubled convention and the exclusion of degenerate (variable-missing)
//! forms are available behind [`PolyCountOptions`].

use crate::arith::{gcd, FactorSieve};
use crate::error::{Error, Result};
use crate::parallel::sum_over_blocks;
use crate::series::Constants;

/// Default ceiling on N for the census loops (O(N²) pairs for D = 2).
pub const COUNT_GUARD: u64 = 2_000;

/// A linear integer polynomial Σ_{i≤D} a_i·x_i − a_{D+1}, stored as the
/// coefficient tuple (a₁, …, a_D, a_{D+1}). Validated to be primitive
/// (gcd 1, unless null) and in canonical sign form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySpec {
    coeffs: Vec<i64>,
}

impl PolySpec {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() > 3 {
            return Err(Error::domain(
                "polynomial: coefficient tuple must have 1 to 3 entries (D ≤ 2)",
            ));
        }
        let is_null = coeffs.iter().all(|&c| c == 0);
        if !is_null {
            let g = coeffs
                .iter()
                .fold(0u64, |acc, &c| gcd(acc, c.unsigned_abs()));
            if g != 1 {
                return Err(Error::domain(format!(
                    "polynomial {coeffs:?} is not primitive (coefficient gcd {g})"
                )));
            }
            let first = coeffs.iter().find(|&&c| c != 0).copied().unwrap();
            if first < 0 {
                return Err(Error::domain(format!(
                    "polynomial {coeffs:?} is not in canonical sign form (first nonzero coefficient must be positive)"
                )));
            }
        }
        Ok(PolySpec { coeffs })
    }

    pub fn dimension(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }
}

/// Whether the polynomial vanishes somewhere on \[0,1\]^D.
///
/// A linear form attains its extrema at cube vertices, so the criterion
/// is Σ min(a_i, 0) ≤ a_{D+1} ≤ Σ max(a_i, 0).
pub fn has_root_in_cube(poly: &PolySpec) -> bool {
    let d = poly.dimension();
    let target = poly.coeffs[d];
    let lo: i64 = poly.coeffs[..d].iter().map(|&c| c.min(0)).sum();
    let hi: i64 = poly.coeffs[..d].iter().map(|&c| c.max(0)).sum();
    lo <= target && target <= hi
}

/// Census conventions left open by the definition; the defaults are the
/// ones whose counts match the published leading constants.
#[derive(Debug, Clone, Copy)]
pub struct PolyCountOptions {
    /// Count ±-related tuples separately (doubles every count for D ≥ 1).
    pub count_both_signs: bool,
    /// Keep polynomials that omit a variable (some a_i = 0, i ≤ D).
    pub include_degenerate: bool,
}

impl Default for PolyCountOptions {
    fn default() -> Self {
        PolyCountOptions {
            count_both_signs: false,
            include_degenerate: true,
        }
    }
}

/// An exact census count next to its asymptotic leading term.
#[derive(Debug, Clone, Copy)]
pub struct PolyCountResult {
    pub d: u8,
    pub n: u64,
    pub count: u128,
    pub leading: f64,
    pub ratio: f64,
}

fn finish(d: u8, n: u64, count: u128) -> PolyCountResult {
    let c = Constants::standard();
    let x = n as f64;
    let leading = match d {
        0 => 1.0,
        1 => 3.0 * x * x / c.pi_sq,
        _ => 2.0 * x * x * x / (3.0 * c.zeta3),
    };
    PolyCountResult {
        d,
        n,
        count,
        leading,
        ratio: count as f64 / leading,
    }
}

fn check_census_inputs(d: u8, n: u64, guard_override: bool) -> Result<()> {
    if d > 2 {
        return Err(Error::domain(format!(
            "polynomial census: dimension {d} is not supported (D ∈ {{0, 1, 2}})"
        )));
    }
    if n == 0 {
        return Err(Error::domain("polynomial census: N must be at least 1"));
    }
    if d >= 1 && n > COUNT_GUARD && !guard_override {
        return Err(Error::resource(format!(
            "polynomial census at N = {n} exceeds the guard {COUNT_GUARD}; pass the override to proceed"
        )));
    }
    Ok(())
}

/// Exact T_N^D with the a₃ ranges batched through Möbius inclusion–
/// exclusion over the prime factors of gcd(a₁, a₂) (D = 2), rather than
/// a per-tuple gcd test. (a₁, a₂) blocks may run on worker threads.
pub fn count_polys(
    d: u8,
    n: u64,
    options: PolyCountOptions,
    guard_override: bool,
) -> Result<PolyCountResult> {
    check_census_inputs(d, n, guard_override)?;
    let count: u128 = match d {
        0 => 1,
        1 => {
            let base = count_dim1(n, options.include_degenerate);
            if options.count_both_signs {
                2 * base
            } else {
                base
            }
        }
        _ => {
            let sieve = FactorSieve::new(n)?;
            let base = sum_over_blocks(0, n, |lo, hi| {
                (lo..=hi)
                    .map(|a1| count_dim2_column(a1 as i64, n as i64, &sieve, options))
                    .sum()
            });
            if options.count_both_signs {
                2 * base
            } else {
                base
            }
        }
    };
    Ok(finish(d, n, count))
}

/// Canonical D = 1 census by direct gcd loop: a₁ ≥ 1, 0 ≤ a₂ ≤ a₁
/// (the root a₂/a₁ must land in [0,1]), gcd(a₁, a₂) = 1. Tuples with
/// a₁ = 0 never have a root, so the degenerate toggle is moot here.
fn count_dim1(n: u64, _include_degenerate: bool) -> u128 {
    let mut count: u128 = 0;
    for a1 in 1..=n {
        for a2 in 0..=a1 {
            if gcd(a1, a2) == 1 {
                count += 1;
            }
        }
    }
    count
}

/// All canonical tuples with the given a₁ ≥ 0: a₂ runs over the ℓ¹ ball,
/// and the whole coprime a₃ range [Σ min, Σ max] is counted at once.
fn count_dim2_column(a1: i64, n: i64, sieve: &FactorSieve, options: PolyCountOptions) -> u128 {
    let mut count: u128 = 0;
    let budget = n - a1;
    let (a2_lo, a2_hi) = if a1 >= 1 {
        (-budget, budget)
    } else {
        (1, budget) // a₁ = 0 forces a₂ > 0 for canonical sign
    };
    for a2 in a2_lo..=a2_hi {
        if a1 == 0 && a2 == 0 {
            continue;
        }
        if !options.include_degenerate && (a1 == 0 || a2 == 0) {
            continue;
        }
        let g = gcd(a1 as u64, a2.unsigned_abs());
        let lo = a1.min(0) + a2.min(0);
        let hi = a1.max(0) + a2.max(0);
        count += coprime_in_signed_range(g, lo, hi, sieve) as u128;
    }
    count
}

/// #{a₃ ∈ [lo, hi] : gcd(g, a₃) = 1} by inclusion–exclusion over the
/// distinct primes of g. Zero counts as divisible by everything.
fn coprime_in_signed_range(g: u64, lo: i64, hi: i64, sieve: &FactorSieve) -> i64 {
    let primes = sieve.distinct_primes(g);
    let mut total: i64 = 0;
    for mask in 0u32..(1u32 << primes.len()) {
        let mut d: i64 = 1;
        for (idx, &p) in primes.iter().enumerate() {
            if mask & (1 << idx) != 0 {
                d *= p as i64;
            }
        }
        let multiples = hi.div_euclid(d) - (lo - 1).div_euclid(d);
        total += if mask.count_ones() % 2 == 0 {
            multiples
        } else {
            -multiples
        };
    }
    total
}

/// The same census by brute force: every sign combination enumerated,
/// every tuple tested one at a time through [`PolySpec`] validation and
/// [`has_root_in_cube`]. The oracle for [`count_polys`].
pub fn count_polys_naive(d: u8, n: u64, options: PolyCountOptions) -> Result<PolyCountResult> {
    check_census_inputs(d, n, false)?;
    let bound = n as i64;
    let mut count: u128 = 0;
    match d {
        0 => count = 1,
        1 => {
            for a1 in -bound..=bound {
                for a2 in -bound..=bound {
                    if admits(&[a1, a2], 1, options) {
                        count += 1;
                    }
                }
            }
        }
        _ => {
            for a1 in -bound..=bound {
                for a2 in -(bound - a1.abs())..=(bound - a1.abs()) {
                    for a3 in -2 * bound..=2 * bound {
                        if admits(&[a1, a2, a3], 2, options) {
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(finish(d, n, count))
}

fn admits(coeffs: &[i64], d: usize, options: PolyCountOptions) -> bool {
    if coeffs.iter().all(|&c| c == 0) {
        return false; // the null polynomial belongs to the D = 0 census only
    }
    if !options.include_degenerate && coeffs[..d].contains(&0) {
        return false;
    }
    let canonical: Vec<i64> = match coeffs.iter().find(|&&c| c != 0) {
        Some(&first) if first < 0 => {
            if !options.count_both_signs {
                return false;
            }
            coeffs.iter().map(|&c| -c).collect()
        }
        _ => coeffs.to_vec(),
    };
    match PolySpec::new(canonical) {
        Ok(poly) => has_root_in_cube(&poly),
        Err(_) => false, // not primitive
    }
}
