//! The totient-weighted rank series S(N) = Σ_{k=1}^{N} φ(k)·I_N(1/k), its
//! N³/(6ζ(3)) leading term, the head/tail split that proves the limit,
//! and the classical summatory asymptotics the proof leans on.
//!
//! S(N) is an exact integer and is accumulated in 128-bit arithmetic; the
//! leading term and ratios are the only floating-point quantities here.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::{FactorSieve, SummatoryTable, TotientTable};
use crate::closed_form::{closed_form_unit_rank, lcm_up_to, ClosedFormInput};
use crate::error::{Error, Result};
use crate::farey::{unit_rank_eq3, FareyIter};
use crate::parallel::sum_over_blocks;

/// Default ceiling for a full enumeration sweep of F_N (≈ 3·10⁸ terms at
/// the cap). Lift it with `guard_override` where supported.
pub const SWEEP_GUARD: u64 = 30_000;

/// Default ceiling for the per-k direct summation, which costs roughly
/// N²/2 interval-totient evaluations.
pub const DIRECT_GUARD: u64 = 5_000;

/// Apéry's constant ζ(3), to 17 significant digits. Obtained from the
/// convergence-accelerated series ζ(3) = (5/2)·Σ_{k≥1} (−1)^{k−1}/(k³·C(2k,k)),
/// whose terms shrink by ~4× each step; the test suite re-derives it from
/// that series and from a direct 1/k³ sum with an integral tail bound.
pub const ZETA3: f64 = 1.202_056_903_159_594_3;

/// π², from the IEEE-754 square of the standard library's π.
pub const PI_SQUARED: f64 = std::f64::consts::PI * std::f64::consts::PI;

/// Reference constants used for leading terms and ratios: ζ(3), π², and
/// ζ(2) = π²/6.
#[derive(Debug, Clone, Copy)]
pub struct Constants {
    pub zeta3: f64,
    pub zeta2: f64,
    pub pi_sq: f64,
}

impl Constants {
    pub fn standard() -> Self {
        Constants {
            zeta3: ZETA3,
            zeta2: PI_SQUARED / 6.0,
            pi_sq: PI_SQUARED,
        }
    }
}

impl Default for Constants {
    fn default() -> Self {
        Constants::standard()
    }
}

/// Exact S(N) next to its leading term N³/(6ζ(3)).
#[derive(Debug, Clone, Copy)]
pub struct SeriesReport {
    pub n: u64,
    /// S(N), exact.
    pub sum: u128,
    /// N³/(6ζ(3)).
    pub leading: f64,
    /// sum / leading.
    pub ratio: f64,
}

/// S(N) split at k = N/i_max into the bounded head and the closed-form
/// tail, with N = lcm(2..i_max).
#[derive(Debug, Clone)]
pub struct SplitReport {
    pub i_max: u64,
    pub n: u64,
    /// Σ_{k ≤ N/i_max} φ(k)·I_N(1/k), exact.
    pub head_sum: u128,
    /// Σ_{k > N/i_max} φ(k)·I_N(1/k), exact, from the enumeration sweep.
    pub tail_sum: u128,
    /// The same tail recomputed through the closed-form rank, nested over
    /// the windows N/(i+1) < k ≤ N/i for i < i_max. Always equals
    /// `tail_sum`; kept separate so callers can assert it.
    pub tail_closed_form: u128,
    /// (N²+N)·Σ_{k ≤ N/i_max} φ(k)/(2k), the exact termwise upper bound
    /// on the head.
    pub head_bound: BigRational,
    /// 3(N³+N²)/(π²·i_max), the asymptotic form the exact head bound
    /// tends to. Reported for context only — it carries an error term, so
    /// nothing asserts it pointwise.
    pub head_asymptotic: f64,
}

impl SplitReport {
    pub fn head_bound_holds(&self) -> bool {
        BigRational::from_integer(BigInt::from(self.head_sum)) <= self.head_bound
    }
}

/// One convergence row: an exact or rational left-hand side against its
/// asymptotic leading term.
#[derive(Debug, Clone)]
pub struct AsymptoticsRow {
    pub name: &'static str,
    pub n: u64,
    /// The left-hand side as a real (exact when `lhs_exact` is set).
    pub lhs: f64,
    /// Present when the left-hand side is an exact integer.
    pub lhs_exact: Option<u128>,
    pub leading: f64,
    pub ratio: f64,
}

/// N³/(6ζ(3)).
pub fn leading_term(n: u64, c: &Constants) -> f64 {
    let x = n as f64;
    x * x * x / (6.0 * c.zeta3)
}

fn check_sweep_guard(n: u64, guard_override: bool) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("series: order must be at least 1"));
    }
    if n > SWEEP_GUARD && !guard_override {
        return Err(Error::resource(format!(
            "series sweep at N = {n} exceeds the guard {SWEEP_GUARD}; pass the override to proceed"
        )));
    }
    Ok(())
}

fn report(n: u64, sum: u128, c: &Constants) -> SeriesReport {
    let leading = leading_term(n, c);
    SeriesReport {
        n,
        sum,
        leading,
        ratio: sum as f64 / leading,
    }
}

/// Exact S(N) from one enumeration pass over F_N.
///
/// The walk meets every unit fraction 1/k exactly once and already knows
/// its 1-based position, so no per-k rank calls are needed.
pub fn series_sum_sweep(
    n: u64,
    totients: &TotientTable,
    guard_override: bool,
) -> Result<SeriesReport> {
    check_sweep_guard(n, guard_override)?;
    if n > totients.limit() {
        return Err(Error::domain(format!(
            "series: order {n} outside totient table range 1..={}",
            totients.limit()
        )));
    }
    let mut sum: u128 = 0;
    let mut position: u64 = 0;
    for frac in FareyIter::new(n) {
        position += 1;
        if frac.is_unit() {
            let term = totients.phi(frac.den()) as u128 * position as u128;
            sum = sum
                .checked_add(term)
                .ok_or(Error::Overflow("series sweep accumulation"))?;
        }
    }
    Ok(report(n, sum, &Constants::standard()))
}

/// Exact S(N) with every I_N(1/k) computed independently through the
/// unit-rank summation formula. Quadratic cost; exists to cross-check the
/// sweep. k-blocks may run on worker threads (`FAREYLAB_THREADS`).
pub fn series_sum_direct(
    n: u64,
    totients: &TotientTable,
    sieve: &FactorSieve,
    guard_override: bool,
) -> Result<SeriesReport> {
    if n == 0 {
        return Err(Error::domain("series: order must be at least 1"));
    }
    if n > DIRECT_GUARD && !guard_override {
        return Err(Error::resource(format!(
            "direct series at N = {n} exceeds the guard {DIRECT_GUARD}; pass the override to proceed"
        )));
    }
    if n > totients.limit() || n > sieve.limit() {
        return Err(Error::domain(format!(
            "series: order {n} outside table range"
        )));
    }
    let sum = sum_over_blocks(1, n, |lo, hi| {
        (lo..=hi)
            .map(|k| {
                let rank = unit_rank_eq3(n, k, sieve)
                    .expect("k ≤ n within sieve range")
                    .index;
                totients.phi(k) as u128 * rank as u128
            })
            .sum()
    });
    Ok(report(n, sum, &Constants::standard()))
}

/// Splits S(N) at k = N/i_max for N = lcm(2..i_max): the head is bounded
/// termwise by (N²+N)·φ(k)/(2k), and the tail is recomputed through the
/// closed-form rank window by window and checked against the sweep.
pub fn split_sums(
    i_max: u64,
    totients: &TotientTable,
    sums: &SummatoryTable,
    guard_override: bool,
) -> Result<SplitReport> {
    if i_max < 2 {
        return Err(Error::domain("split: i_max must be at least 2"));
    }
    let n_big = lcm_up_to(i_max)?;
    let n = u64::try_from(n_big).map_err(|_| Error::Overflow("split order"))?;
    check_sweep_guard(n, guard_override)?;
    if n > totients.limit() || i_max > sums.limit() {
        return Err(Error::domain(format!(
            "split: order {n} outside table range"
        )));
    }

    let boundary = n / i_max;
    let mut head_sum: u128 = 0;
    let mut tail_sum: u128 = 0;
    let mut position: u64 = 0;
    for frac in FareyIter::new(n) {
        position += 1;
        if frac.is_unit() {
            let term = totients.phi(frac.den()) as u128 * position as u128;
            if frac.den() <= boundary {
                head_sum = head_sum
                    .checked_add(term)
                    .ok_or(Error::Overflow("split head accumulation"))?;
            } else {
                tail_sum = tail_sum
                    .checked_add(term)
                    .ok_or(Error::Overflow("split tail accumulation"))?;
            }
        }
    }

    let mut tail_closed_form: u128 = 0;
    for i in 1..i_max {
        for k in n / (i + 1) + 1..=n / i {
            let input = ClosedFormInput::new(n, i, k)?;
            let rank = closed_form_unit_rank(input, totients, sums)?.index;
            tail_closed_form += totients.phi(k) as u128 * rank as u128;
        }
    }
    if tail_closed_form != tail_sum {
        return Err(Error::domain(format!(
            "split: closed-form tail {tail_closed_form} disagrees with swept tail {tail_sum} at i_max = {i_max}"
        )));
    }

    let n128 = n as u128;
    let mut head_bound = BigRational::from_integer(BigInt::from(0));
    for k in 1..=boundary {
        let numerator = (n128 * n128 + n128) * totients.phi(k) as u128;
        head_bound += BigRational::new(BigInt::from(numerator), BigInt::from(2 * k));
    }
    let x = n as f64;
    let head_asymptotic = 3.0 * (x * x * x + x * x) / (Constants::standard().pi_sq * i_max as f64);

    Ok(SplitReport {
        i_max,
        n,
        head_sum,
        tail_sum,
        tail_closed_form,
        head_bound,
        head_asymptotic,
    })
}

/// Convergence rows for the four summatory relations:
/// Σφ(k) vs 3N²/π², Σφ(k)/k vs 6N/π², Σφ(k)·k vs 2N³/π², and the cubic
/// series Σ_{k≤K} φ(k)/k³ vs ζ(2)/ζ(3).
pub fn summatory_checks(
    n_max: u64,
    k3_max: u64,
    totients: &TotientTable,
    c: &Constants,
) -> Result<Vec<AsymptoticsRow>> {
    if n_max == 0 || k3_max == 0 {
        return Err(Error::domain("asymptotics: limits must be at least 1"));
    }
    if n_max > totients.limit() || k3_max > totients.limit() {
        return Err(Error::domain(format!(
            "asymptotics: limit outside totient table range 1..={}",
            totients.limit()
        )));
    }
    let x = n_max as f64;

    let mut phi_sum: u128 = 0;
    let mut phi_over_k: f64 = 0.0;
    let mut phi_times_k: u128 = 0;
    for k in 1..=n_max {
        let phi = totients.phi(k);
        phi_sum += phi as u128;
        phi_over_k += phi as f64 / k as f64;
        phi_times_k += phi as u128 * k as u128;
    }
    let mut phi_over_k_cubed: f64 = 0.0;
    for k in 1..=k3_max {
        let kf = k as f64;
        phi_over_k_cubed += totients.phi(k) as f64 / (kf * kf * kf);
    }

    let row = |name, n, lhs: f64, lhs_exact, leading: f64| AsymptoticsRow {
        name,
        n,
        lhs,
        lhs_exact,
        leading,
        ratio: lhs / leading,
    };
    Ok(vec![
        row(
            "phi_sum",
            n_max,
            phi_sum as f64,
            Some(phi_sum),
            3.0 * x * x / c.pi_sq,
        ),
        row("phi_over_k_sum", n_max, phi_over_k, None, 6.0 * x / c.pi_sq),
        row(
            "phi_times_k_sum",
            n_max,
            phi_times_k as f64,
            Some(phi_times_k),
            2.0 * x * x * x / c.pi_sq,
        ),
        row(
            "phi_over_k_cubed_sum",
            k3_max,
            phi_over_k_cubed,
            None,
            c.zeta2 / c.zeta3,
        ),
    ])
}
