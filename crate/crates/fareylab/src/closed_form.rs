//! Exact closed-form ranks of unit fractions under a divisibility
//! hypothesis: whenever every integer in [2, i] divides N and k lies in
//! the window N/(i+1) ≤ k ≤ N/i,
//!
//!   I_N(1/k) = 2 + N·Σ_{j=1}^{i} φ(j)/j − k·Φ(i).
//!
//! Two intermediate identities are exposed as well: the rank at the
//! subdivision point k = N/i as a sum of segment cardinalities, and the
//! offset form that walks from that point to a general k. All arithmetic
//! is exact: every rational term here is an integer because j | N (and
//! j(j+1) | N where needed), and the code divides before multiplying to
//! keep intermediates small.

use crate::arith::{SummatoryTable, TotientTable};
use crate::error::{Error, Result};
use crate::farey::{Fraction, RankMethod, RankResult};

/// Largest supported i. lcm(2..43) exceeds u64; with 128-bit arithmetic
/// the hypothesis check stays exact far beyond any enumerable scale.
pub const MAX_WINDOW_INDEX: u64 = 40;

/// lcm(2, ..., i), exact in u128. lcm(2..1) is the empty product 1.
pub fn lcm_up_to(i: u64) -> Result<u128> {
    if i > MAX_WINDOW_INDEX {
        return Err(Error::resource(format!(
            "lcm(2..{i}) is not supported beyond i = {MAX_WINDOW_INDEX}"
        )));
    }
    let mut acc: u128 = 1;
    for j in 2..=i.max(1) as u128 {
        let g = gcd_u128(acc, j);
        acc = acc
            .checked_mul(j / g)
            .ok_or(Error::Overflow("lcm accumulation"))?;
    }
    Ok(acc)
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Validated input (N, i, k) for the closed-form rank: every integer in
/// [2, i] divides N, and N/(i+1) ≤ k ≤ N/i with both endpoints inclusive.
///
/// i = 1 imposes no divisibility and the window becomes N/2 ≤ k ≤ N, in
/// which case the formula collapses to I_N(1/k) = 2 + N − k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedFormInput {
    pub n: u64,
    pub i: u64,
    pub k: u64,
}

impl ClosedFormInput {
    pub fn new(n: u64, i: u64, k: u64) -> Result<Self> {
        if n == 0 || i == 0 || k == 0 {
            return Err(Error::domain("closed form: n, i, k must be positive"));
        }
        let lcm = lcm_up_to(i)?;
        if !(n as u128).is_multiple_of(lcm) {
            return Err(Error::domain(format!(
                "closed form: n = {n} is not a multiple of lcm(2..{i}) = {lcm}"
            )));
        }
        // N/(i+1) ≤ k ≤ N/i, as exact cross-multiplications.
        if k * (i + 1) < n {
            return Err(Error::domain(format!(
                "closed form: k = {k} is below the window start n/(i+1) = {}/{}",
                n,
                i + 1
            )));
        }
        if k * i > n {
            return Err(Error::domain(format!(
                "closed form: k = {k} is above the window end n/i = {}/{}",
                n, i
            )));
        }
        Ok(ClosedFormInput { n, i, k })
    }
}

fn to_rank(value: i128, context: &'static str) -> Result<u64> {
    u64::try_from(value).map_err(|_| Error::Overflow(context))
}

/// N·Σ_{j=1}^{i} φ(j)/j, exactly. Each term is (N/j)·φ(j) since j | N.
fn weighted_phi_sum(n: u64, i: u64, totients: &TotientTable) -> i128 {
    (1..=i)
        .map(|j| {
            debug_assert_eq!(n % j, 0, "hypothesis guarantees {j} | {n}");
            (n / j) as i128 * totients.phi(j) as i128
        })
        .sum()
}

/// I_N(1/k) = 2 + N·Σ_{j=1}^{i} φ(j)/j − k·Φ(i), exact.
pub fn closed_form_unit_rank(
    input: ClosedFormInput,
    totients: &TotientTable,
    sums: &SummatoryTable,
) -> Result<RankResult> {
    let ClosedFormInput { n, i, k } = input;
    if i > totients.limit() || i > sums.limit() {
        return Err(Error::domain(format!(
            "closed form: i = {i} outside table range"
        )));
    }
    let index = 2 + weighted_phi_sum(n, i, totients) - k as i128 * sums.phi_sum(i) as i128;
    Ok(RankResult {
        order: n,
        frac: Fraction::unit(k)?,
        index: to_rank(index, "closed-form rank")?,
        method: RankMethod::ClosedForm,
    })
}

/// I_N(1/(N/i)) = 2 + N·Σ_{j=1}^{i−1} Φ(j)/(j(j+1)), the rank at the
/// subdivision point expressed as a sum of segment cardinalities.
pub fn rank_at_subdivision(n: u64, i: u64, sums: &SummatoryTable) -> Result<RankResult> {
    // Reuse the input validation with k pinned to the window end N/i.
    if n == 0 || i == 0 {
        return Err(Error::domain("closed form: n, i must be positive"));
    }
    let lcm = lcm_up_to(i)?;
    if !(n as u128).is_multiple_of(lcm) {
        return Err(Error::domain(format!(
            "closed form: n = {n} is not a multiple of lcm(2..{i}) = {lcm}"
        )));
    }
    if i > 1 && i.saturating_sub(1) > sums.limit() {
        return Err(Error::domain(format!(
            "closed form: i = {i} outside table range"
        )));
    }
    let mut index: i128 = 2;
    for j in 1..i {
        let block = j * (j + 1);
        debug_assert_eq!(n % block, 0, "hypothesis guarantees {block} | {n}");
        index += (n / block) as i128 * sums.phi_sum(j) as i128;
    }
    Ok(RankResult {
        order: n,
        frac: Fraction::unit(n / i)?,
        index: to_rank(index, "subdivision rank")?,
        method: RankMethod::ClosedForm,
    })
}

/// I_N(1/k) = Φ(i)·(N/i − k) + I_N(1/(N/i)): the subdivision rank plus
/// one segment cardinality per step from N/i down to k. Must agree with
/// [`closed_form_unit_rank`] on the whole validity window.
pub fn rank_by_offset(input: ClosedFormInput, sums: &SummatoryTable) -> Result<RankResult> {
    let ClosedFormInput { n, i, k } = input;
    if i > sums.limit() {
        return Err(Error::domain(format!(
            "closed form: i = {i} outside table range"
        )));
    }
    let base = rank_at_subdivision(n, i, sums)?;
    let index = sums.phi_sum(i) as i128 * (n / i - k) as i128 + base.index as i128;
    Ok(RankResult {
        order: n,
        frac: Fraction::unit(k)?,
        index: to_rank(index, "offset rank")?,
        method: RankMethod::ClosedForm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::rank_by_enumeration;

    fn tables(limit: u64) -> (TotientTable, SummatoryTable) {
        let t = TotientTable::new(limit).unwrap();
        let s = SummatoryTable::new(&t).unwrap();
        (t, s)
    }

    #[test]
    fn lcm_values() {
        assert_eq!(lcm_up_to(1).unwrap(), 1);
        assert_eq!(lcm_up_to(2).unwrap(), 2);
        assert_eq!(lcm_up_to(6).unwrap(), 60);
        assert_eq!(lcm_up_to(9).unwrap(), 2520);
        assert_eq!(lcm_up_to(40).unwrap(), 5342931457063200);
        assert!(lcm_up_to(41).is_err());
    }

    #[test]
    fn input_validation_names_the_condition() {
        let err = ClosedFormInput::new(10, 3, 3).unwrap_err().to_string();
        assert!(err.contains("lcm"), "got: {err}");
        let err = ClosedFormInput::new(12, 3, 2).unwrap_err().to_string();
        assert!(err.contains("window start"), "got: {err}");
        let err = ClosedFormInput::new(12, 3, 5).unwrap_err().to_string();
        assert!(err.contains("window end"), "got: {err}");
    }

    #[test]
    fn closed_form_examples() {
        let (t, s) = tables(16);
        let rank = |n, i, k| {
            closed_form_unit_rank(ClosedFormInput::new(n, i, k).unwrap(), &t, &s)
                .unwrap()
                .index
        };
        assert_eq!(rank(12, 3, 3), 16);
        assert_eq!(rank(12, 3, 4), 12);
        assert_eq!(rank(6, 2, 2), 7);
        // Window overlap: the i = 4 evaluation agrees at k = 3.
        assert_eq!(rank(12, 4, 3), 16);
    }

    #[test]
    fn subdivision_examples() {
        let (_, s) = tables(16);
        assert_eq!(rank_at_subdivision(12, 3, &s).unwrap().index, 12);
        assert_eq!(rank_at_subdivision(6, 2, &s).unwrap().index, 5);
        // Empty sum: 1/N is always the second element.
        for n in [5, 7, 12] {
            let r = rank_at_subdivision(n, 1, &s).unwrap();
            assert_eq!(r.index, 2);
            assert_eq!(r.frac, Fraction::unit(n).unwrap());
        }
    }

    #[test]
    fn offset_examples() {
        let (_, s) = tables(16);
        let rank = |n, i, k| {
            rank_by_offset(ClosedFormInput::new(n, i, k).unwrap(), &s)
                .unwrap()
                .index
        };
        assert_eq!(rank(12, 3, 3), 16);
        assert_eq!(rank(12, 2, 5), 10);
        assert_eq!(rank(6, 2, 3), 5);
    }

    #[test]
    fn both_paths_agree_and_match_enumeration_at_small_orders() {
        let (t, s) = tables(64);
        for n in [6u64, 12, 24, 60] {
            for i in 1..=9 {
                if !(n as u128).is_multiple_of(lcm_up_to(i).unwrap()) {
                    continue;
                }
                for k in n.div_ceil(i + 1)..=n / i {
                    let input = ClosedFormInput::new(n, i, k).unwrap();
                    let direct = closed_form_unit_rank(input, &t, &s).unwrap().index;
                    let offset = rank_by_offset(input, &s).unwrap().index;
                    let oracle = rank_by_enumeration(n, Fraction::unit(k).unwrap())
                        .unwrap()
                        .index;
                    assert_eq!(direct, offset, "paths differ at ({n},{i},{k})");
                    assert_eq!(direct, oracle, "oracle differs at ({n},{i},{k})");
                }
            }
        }
    }

    #[test]
    fn i_equal_one_window_collapses_to_two_plus_n_minus_k() {
        let (t, s) = tables(8);
        // Any N qualifies for i = 1; spot check against enumeration.
        let input = ClosedFormInput::new(5, 1, 3).unwrap();
        let r = closed_form_unit_rank(input, &t, &s).unwrap();
        assert_eq!(r.index, 4);
        assert_eq!(
            r.index,
            rank_by_enumeration(5, Fraction::unit(3).unwrap())
                .unwrap()
                .index
        );
        for n in 1..=30u64 {
            for k in n.div_ceil(2)..=n {
                let input = ClosedFormInput::new(n, 1, k).unwrap();
                let got = closed_form_unit_rank(input, &t, &s).unwrap().index;
                assert_eq!(got as i128, 2 + n as i128 - k as i128);
            }
        }
    }
}
