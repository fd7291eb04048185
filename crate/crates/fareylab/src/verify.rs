//! Self-verification suites behind the `verify` subcommand.
//!
//! Each suite replays the cross-method identities at a configurable
//! scale: every formula is compared against the enumeration walk or a
//! brute-force census, exactly. A failed check carries the first
//! offending input in its detail string.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};

use crate::arith::{
    gcd, phi_interval, totient_summatory, FactorSieve, MobiusTable, SummatoryTable, TotientTable,
};
use crate::closed_form::{closed_form_unit_rank, lcm_up_to, rank_by_offset, ClosedFormInput};
use crate::error::{Error, Result};
use crate::farey::{
    complement_rank, farey_cardinality, rank_by_mobius, rank_upper_bound, unit_rank_eq3, FareyIter,
    Fraction,
};
use crate::poly::{count_polys, count_polys_naive, PolyCountOptions};
use crate::segment::{segment_map, verify_bijection, SegmentSpec};
use crate::series::{series_sum_direct, series_sum_sweep, split_sums};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Rank,
    Segment,
    ClosedForm,
    Series,
    Poly,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "rank" => Ok(Suite::Rank),
            "segment" => Ok(Suite::Segment),
            "closedform" => Ok(Suite::ClosedForm),
            "series" => Ok(Suite::Series),
            "poly" => Ok(Suite::Poly),
            "all" => Ok(Suite::All),
            other => Err(Error::domain(format!(
                "unknown suite '{other}' (expected rank|segment|closedform|series|poly|all)"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        CheckResult {
            name,
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        CheckResult {
            name,
            passed: false,
            detail: detail.into(),
        }
    }
}

/// Runs one suite. `max` scales the dominant sweep of each suite (the
/// Farey order for rank/closed-form/series checks, the domain order i
/// for segments, the coefficient bound for the polynomial census).
pub fn run_suite(suite: Suite, max: Option<u64>, guard_override: bool) -> Result<Vec<CheckResult>> {
    let mut results = Vec::new();
    match suite {
        Suite::Rank => rank_suite(max.unwrap_or(64), &mut results)?,
        Suite::Segment => segment_suite(max.unwrap_or(10), &mut results)?,
        Suite::ClosedForm => closed_form_suite(max.unwrap_or(2520), &mut results)?,
        Suite::Series => series_suite(max.unwrap_or(300), guard_override, &mut results)?,
        Suite::Poly => poly_suite(max.unwrap_or(40), guard_override, &mut results)?,
        Suite::All => {
            rank_suite(max.unwrap_or(64), &mut results)?;
            segment_suite(max.map(|m| m.min(16)).unwrap_or(10), &mut results)?;
            closed_form_suite(max.unwrap_or(2520), &mut results)?;
            series_suite(max.unwrap_or(300), guard_override, &mut results)?;
            poly_suite(
                max.map(|m| m.min(60)).unwrap_or(40),
                guard_override,
                &mut results,
            )?;
        }
    }
    Ok(results)
}

fn rank_suite(max_order: u64, out: &mut Vec<CheckResult>) -> Result<()> {
    let totients = TotientTable::new(max_order.max(1))?;
    let sums = SummatoryTable::new(&totients)?;
    let sieve = FactorSieve::new(max_order.max(1))?;
    let mobius = MobiusTable::new(max_order.max(1))?;

    // Sieve identities feeding every rank formula: the Gauss divisor sum
    // for φ, the Möbius divisor sum, interval counts against a direct
    // gcd loop, and prefix sums against the summatory table.
    for n in 1..=max_order {
        let phi_divisor_sum: u64 = (1..=n)
            .filter(|d| n % d == 0)
            .map(|d| totients.phi(d))
            .sum();
        let mu_divisor_sum: i64 = (1..=n)
            .filter(|d| n % d == 0)
            .map(|d| mobius.mu(d) as i64)
            .sum();
        let mut interval_ok = true;
        for (a, b) in [(1, n), (n / 2 + 1, n), (2, 2 * n / 3 + 1)] {
            let direct = (a..=b).filter(|&m| gcd(m, n) == 1).count() as u64;
            interval_ok &= phi_interval(n, a, b)? == direct;
        }
        if phi_divisor_sum != n
            || mu_divisor_sum != i64::from(n == 1)
            || !interval_ok
            || totient_summatory(n, &totients)? != sums.phi_sum(n)
        {
            out.push(CheckResult::fail(
                "sieve_identities",
                format!("φ/μ/Φ identity broken at n = {n}"),
            ));
            return Ok(());
        }
    }
    out.push(CheckResult::pass(
        "sieve_identities",
        format!("φ, μ, φ(n;[a,b]), Φ identities for n ≤ {max_order}"),
    ));

    // Enumeration shape: 0/1 .. 1/1, strictly increasing, |F_N| terms.
    let mut checked = 0u64;
    for n in 1..=max_order {
        let terms: Vec<Fraction> = FareyIter::new(n).collect();
        let expected = farey_cardinality(n, &sums)?;
        let increasing = terms.windows(2).all(|w| w[0] < w[1]);
        if terms.first() != Some(&Fraction::ZERO)
            || terms.last() != Some(&Fraction::ONE)
            || !increasing
            || terms.len() as u64 != expected
        {
            out.push(CheckResult::fail(
                "enumeration_shape",
                format!("F_{n} enumeration malformed"),
            ));
            return Ok(());
        }
        checked += terms.len() as u64;
    }
    out.push(CheckResult::pass(
        "enumeration_shape",
        format!("{checked} terms across N ≤ {max_order}"),
    ));

    // Coprime-counting rank vs the walk, every fraction.
    for n in 1..=max_order {
        let mut position = 0u64;
        for frac in FareyIter::new(n) {
            position += 1;
            let got = rank_by_mobius(n, frac, &sieve)?.index;
            if got != position {
                out.push(CheckResult::fail(
                    "mobius_rank_equals_enumeration",
                    format!("I_{n}({frac}): mobius {got} vs walk {position}"),
                ));
                return Ok(());
            }
        }
    }
    out.push(CheckResult::pass(
        "mobius_rank_equals_enumeration",
        format!("all fractions, N ≤ {max_order}"),
    ));

    // Unit-rank summation and complement symmetry vs the walk.
    let mut bound_checked = 0u64;
    for n in 1..=max_order {
        let mut unit_ranks = vec![0u64; n as usize + 1];
        let mut complement_ranks = vec![0u64; n as usize + 1];
        let mut position = 0u64;
        for frac in FareyIter::new(n) {
            position += 1;
            if frac.is_unit() {
                unit_ranks[frac.den() as usize] = position;
            }
            if frac.num() + 1 == frac.den() {
                complement_ranks[frac.den() as usize] = position;
            }
        }
        for k in 1..=n {
            let eq3 = unit_rank_eq3(n, k, &sieve)?.index;
            if eq3 != unit_ranks[k as usize] {
                out.push(CheckResult::fail(
                    "unit_rank_equals_enumeration",
                    format!(
                        "I_{n}(1/{k}): summation {eq3} vs walk {}",
                        unit_ranks[k as usize]
                    ),
                ));
                return Ok(());
            }
            // (N²+N)/(2k) holds everywhere except (N,k) = (1,1) and (2,2),
            // where the rank instead meets the sharper walk bound
            // 1 + (N²+N+k−k²)/(2k) with equality.
            if rank_upper_bound(n, k)? < Ratio::from_integer(eq3 as u128) {
                let sharper_numer = (n * n + n + k) as i128 - (k * k) as i128;
                let boundary_pair = (n == 1 && k == 1) || (n == 2 && k == 2);
                let sharper_holds = 2 * k as i128 * (eq3 as i128 - 1) <= sharper_numer;
                if !(boundary_pair && sharper_holds) {
                    out.push(CheckResult::fail(
                        "rank_upper_bound",
                        format!("I_{n}(1/{k}) = {eq3} exceeds (N²+N)/(2k)"),
                    ));
                    return Ok(());
                }
            }
            bound_checked += 1;
            if k >= 2 {
                let got = complement_rank(n, k, &sieve, &sums)?.index;
                let expected = complement_ranks[k as usize];
                if got != expected {
                    out.push(CheckResult::fail(
                        "complement_rank_symmetry",
                        format!("I_{n}(({}−1)/{k}): complement {got} vs walk {expected}", k),
                    ));
                    return Ok(());
                }
            }
        }
    }
    out.push(CheckResult::pass(
        "unit_rank_equals_enumeration",
        format!("all k ≤ N ≤ {max_order}"),
    ));
    out.push(CheckResult::pass(
        "complement_rank_symmetry",
        format!("all 2 ≤ k ≤ N ≤ {max_order}"),
    ));
    out.push(CheckResult::pass(
        "rank_upper_bound",
        format!(
            "{bound_checked} (N, k) pairs; boundary pairs (1,1), (2,2) meet the sharper walk bound"
        ),
    ));
    Ok(())
}

fn segment_suite(max_i: u64, out: &mut Vec<CheckResult>) -> Result<()> {
    let totients = TotientTable::new(max_i.max(1))?;
    let sums = SummatoryTable::new(&totients)?;
    let mut specs = 0u64;
    for i in 1..=max_i {
        let lcm = i * (i + 1); // i and i+1 are coprime
        for n in [lcm, 2 * lcm] {
            for q in SegmentSpec::admissible_q(i, n)? {
                let report = verify_bijection(SegmentSpec::new(i, n, q)?)?;
                let expected_size = 1 + sums.phi_sum(i);
                if !report.bijective
                    || !report.order_preserved
                    || report.image_size != expected_size
                {
                    out.push(CheckResult::fail(
                        "segment_bijection",
                        format!(
                            "spec (i={i}, N={n}, q={q}): bijective={}, order_preserved={}, image={} expected {expected_size}",
                            report.bijective, report.order_preserved, report.image_size
                        ),
                    ));
                    return Ok(());
                }
                specs += 1;
            }
        }
    }
    out.push(CheckResult::pass(
        "segment_bijection",
        format!("{specs} specs, i ≤ {max_i}"),
    ));

    for frac in FareyIter::new(10) {
        for q in 2..=20 {
            let image = segment_map(frac, q)?;
            if crate::arith::gcd(image.num(), image.den()) != 1 {
                out.push(CheckResult::fail(
                    "segment_map_reduced",
                    format!("{frac} ↦ {image} not reduced at q = {q}"),
                ));
                return Ok(());
            }
        }
    }
    out.push(CheckResult::pass(
        "segment_map_reduced",
        "all f ∈ F_10, q ≤ 20",
    ));
    Ok(())
}

fn closed_form_suite(max_order: u64, out: &mut Vec<CheckResult>) -> Result<()> {
    let orders: Vec<u64> = [12u64, 60, 420, 840, 2520]
        .into_iter()
        .filter(|&n| n <= max_order.max(12))
        .collect();
    let limit = orders.iter().copied().max().unwrap_or(12);
    let totients = TotientTable::new(limit)?;
    let sums = SummatoryTable::new(&totients)?;
    let sieve = FactorSieve::new(limit)?;

    let mut pairs = 0u64;
    for &n in &orders {
        let mut unit_ranks = vec![0u64; n as usize + 1];
        let mut position = 0u64;
        for frac in FareyIter::new(n) {
            position += 1;
            if frac.is_unit() {
                unit_ranks[frac.den() as usize] = position;
            }
        }
        for i in 1..=n {
            if lcm_up_to(i).map_or(true, |l| !(n as u128).is_multiple_of(l)) {
                break;
            }
            for k in n.div_ceil(i + 1)..=n / i {
                let input = ClosedFormInput::new(n, i, k)?;
                let direct = closed_form_unit_rank(input, &totients, &sums)?.index;
                let offset = rank_by_offset(input, &sums)?.index;
                let walk = unit_ranks[k as usize];
                let eq3 = unit_rank_eq3(n, k, &sieve)?.index;
                if direct != offset || direct != walk || direct != eq3 {
                    out.push(CheckResult::fail(
                        "closed_form_rank",
                        format!(
                            "(N={n}, i={i}, k={k}): closed {direct}, offset {offset}, summation {eq3}, walk {walk}"
                        ),
                    ));
                    return Ok(());
                }
                pairs += 1;
            }
        }
    }
    out.push(CheckResult::pass(
        "closed_form_rank",
        format!("{pairs} (N, i, k) triples over N ∈ {orders:?}"),
    ));
    Ok(())
}

fn series_suite(max_order: u64, guard_override: bool, out: &mut Vec<CheckResult>) -> Result<()> {
    let cross_max = max_order.min(300);
    // The split check always reaches N = lcm(2..9) = 2520.
    let limit = max_order.max(2520);
    let totients = TotientTable::new(limit)?;
    let sums = SummatoryTable::new(&totients)?;
    let sieve = FactorSieve::new(limit)?;

    for n in 1..=cross_max {
        let sweep = series_sum_sweep(n, &totients, guard_override)?.sum;
        let direct = series_sum_direct(n, &totients, &sieve, guard_override)?.sum;
        if sweep != direct {
            out.push(CheckResult::fail(
                "series_cross_method",
                format!("S({n}): sweep {sweep} vs direct {direct}"),
            ));
            return Ok(());
        }
    }
    out.push(CheckResult::pass(
        "series_cross_method",
        format!("S(N) for N ≤ {cross_max}"),
    ));

    for i_max in 2..=9u64 {
        let report = split_sums(i_max, &totients, &sums, guard_override)?;
        let total = series_sum_sweep(report.n, &totients, true)?.sum;
        if report.head_sum + report.tail_sum != total
            || report.tail_closed_form != report.tail_sum
            || !report.head_bound_holds()
        {
            out.push(CheckResult::fail(
                "series_split",
                format!("split at i_max = {i_max} inconsistent"),
            ));
            return Ok(());
        }
    }
    out.push(CheckResult::pass("series_split", "i_max ∈ 2..=9"));

    // Aggregated upper bound S(N) ≤ (N²+N)/2 · Σ φ(k)/k, exact rationals.
    // The termwise (N²+N)/(2k) bound fails at the boundary pairs (1,1) and
    // (2,2), so the aggregate starts holding at N = 3.
    let bound_max = max_order.min(SWEEP_BOUND_MAX);
    let mut weighted = BigRational::from_integer(BigInt::from(0));
    for n in 1..=bound_max {
        weighted += BigRational::new(BigInt::from(totients.phi(n)), BigInt::from(2 * n));
        if n < 3 {
            continue;
        }
        let bound = weighted.clone() * BigRational::from_integer(BigInt::from(n * n + n));
        let s = series_sum_sweep(n, &totients, guard_override)?.sum;
        if BigRational::from_integer(BigInt::from(s)) > bound {
            out.push(CheckResult::fail(
                "series_aggregated_bound",
                format!("S({n}) = {s} exceeds the aggregated bound"),
            ));
            return Ok(());
        }
    }
    out.push(CheckResult::pass(
        "series_aggregated_bound",
        format!("3 ≤ N ≤ {bound_max}; N ∈ {{1, 2}} inherit the pointwise boundary cases"),
    ));

    if max_order >= 1000 {
        let near = series_sum_sweep(max_order, &totients, guard_override)?;
        let far = series_sum_sweep(100, &totients, guard_override)?;
        if (near.ratio - 1.0).abs() >= (far.ratio - 1.0).abs() {
            out.push(CheckResult::fail(
                "series_ratio_trend",
                format!(
                    "ratio at N = {max_order} ({:.4}) is no closer to 1 than at N = 100 ({:.4})",
                    near.ratio, far.ratio
                ),
            ));
            return Ok(());
        }
        out.push(CheckResult::pass(
            "series_ratio_trend",
            format!("ratio {:.4} at N = {max_order}", near.ratio),
        ));
    }
    Ok(())
}

const SWEEP_BOUND_MAX: u64 = 1000;

fn poly_suite(max_bound: u64, guard_override: bool, out: &mut Vec<CheckResult>) -> Result<()> {
    let options = PolyCountOptions::default();
    for n in [1u64, 2, 7, max_bound.max(1)] {
        let count = count_polys(0, n, options, guard_override)?.count;
        if count != 1 {
            out.push(CheckResult::fail(
                "null_polynomial_count",
                format!("T_{n}^0 = {count}"),
            ));
            return Ok(());
        }
    }
    out.push(CheckResult::pass("null_polynomial_count", "T_N^0 = 1"));

    let farey_max = max_bound.clamp(1, 500);
    let totients = TotientTable::new(farey_max)?;
    for n in 1..=farey_max {
        let count = count_polys(1, n, options, guard_override)?.count;
        let expected = 1 + totient_summatory(n, &totients)? as u128;
        if count != expected {
            out.push(CheckResult::fail(
                "linear_census_equals_farey",
                format!("T_{n}^1 = {count}, |F_{n}| = {expected}"),
            ));
            return Ok(());
        }
    }
    out.push(CheckResult::pass(
        "linear_census_equals_farey",
        format!("N ≤ {farey_max}"),
    ));

    let naive_max = max_bound.clamp(1, 60);
    for n in 1..=naive_max {
        let batched = count_polys(2, n, options, guard_override)?.count;
        let naive = count_polys_naive(2, n, options)?.count;
        if batched != naive {
            out.push(CheckResult::fail(
                "planar_census_oracle",
                format!("T_{n}^2: batched {batched} vs naive {naive}"),
            ));
            return Ok(());
        }
    }
    out.push(CheckResult::pass(
        "planar_census_oracle",
        format!("N ≤ {naive_max}"),
    ));

    if max_bound >= 1000 {
        let far = count_polys(2, 200, options, guard_override)?;
        let near = count_polys(2, max_bound, options, guard_override)?;
        let near_err = (near.ratio - 1.0).abs();
        let far_err = (far.ratio - 1.0).abs();
        if near_err > 0.3 || near_err >= far_err {
            out.push(CheckResult::fail(
                "planar_census_trend",
                format!("|ratio − 1| = {near_err:.4} at N = {max_bound}, {far_err:.4} at N = 200"),
            ));
            return Ok(());
        }
        out.push(CheckResult::pass(
            "planar_census_trend",
            format!("ratio {:.4} at N = {max_bound}", near.ratio),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_reduced_scale() {
        for (suite, max) in [
            (Suite::Rank, 24),
            (Suite::Segment, 5),
            (Suite::ClosedForm, 60),
            (Suite::Series, 40),
            (Suite::Poly, 12),
        ] {
            let results = run_suite(suite, Some(max), false).unwrap();
            assert!(!results.is_empty());
            for check in &results {
                assert!(check.passed, "{}: {}", check.name, check.detail);
            }
        }
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!(Suite::parse("all").unwrap(), Suite::All);
        assert_eq!(Suite::parse("closedform").unwrap(), Suite::ClosedForm);
        assert!(Suite::parse("bogus").is_err());
    }
}
