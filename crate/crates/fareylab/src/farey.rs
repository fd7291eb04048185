//! Farey fractions, sequence enumeration, cardinality, and the rank
//! I_N(h/k) of a fraction inside F_N computed by several independent
//! routes.
//!
//! The enumeration walk is the designated oracle: it is the simplest
//! logic, needs O(1) memory, and every other rank formula is tested
//! against it.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::arith::{gcd, FactorSieve, SummatoryTable};
use crate::error::{Error, Result};

/// A reduced fraction h/k with 0 ≤ h ≤ k, the element type of Farey
/// sequences. Validated at construction; operations assume validity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: u64,
    den: u64,
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::domain(format!(
                "fraction {num}/0 has zero denominator"
            )));
        }
        if num > den {
            return Err(Error::domain(format!(
                "fraction {num}/{den} lies outside [0, 1]"
            )));
        }
        let g = gcd(num, den);
        if g != 1 {
            return Err(Error::domain(format!(
                "fraction {num}/{den} is not reduced; write it as {}/{}",
                num / g,
                den / g
            )));
        }
        Ok(Fraction { num, den })
    }

    /// The unit fraction 1/k.
    pub fn unit(k: u64) -> Result<Self> {
        Fraction::new(1, k)
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_unit(&self) -> bool {
        self.num == 1
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Parses strict `H/K` decimal form. Unreduced input is rejected with
    /// a message naming the reduced form, rather than silently reduced.
    fn from_str(s: &str) -> Result<Self> {
        let (num_str, den_str) = s
            .split_once('/')
            .ok_or_else(|| Error::domain(format!("fraction '{s}' must have the form H/K")))?;
        let num: u64 = num_str.parse().map_err(|_| {
            Error::domain(format!(
                "fraction numerator '{num_str}' is not a decimal integer"
            ))
        })?;
        let den: u64 = den_str.parse().map_err(|_| {
            Error::domain(format!(
                "fraction denominator '{den_str}' is not a decimal integer"
            ))
        })?;
        Fraction::new(num, den)
    }
}

/// How a rank was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankMethod {
    Enumeration,
    Eq3,
    Mobius,
    Complement,
    ClosedForm,
}

impl fmt::Display for RankMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            RankMethod::Enumeration => "enumeration",
            RankMethod::Eq3 => "eq3",
            RankMethod::Mobius => "mobius",
            RankMethod::Complement => "complement",
            RankMethod::ClosedForm => "closed_form",
        };
        f.write_str(name)
    }
}

/// A 1-based rank I_N(h/k) together with the inputs and the method that
/// produced it. Rank 1 is always 0/1 and rank |F_N| is always 1/1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankResult {
    pub order: u64,
    pub frac: Fraction,
    pub index: u64,
    pub method: RankMethod,
}

/// The successor of `cur` in F_N, given its predecessor `prev`.
///
/// Uses the standard next-term recurrence
/// h₃ = ⌊(N + k_prev)/k_cur⌋·h_cur − h_prev (same for denominators).
/// Returns `None` once `cur` is 1/1, the end of the sequence.
pub fn farey_next(prev: Fraction, cur: Fraction, order: u64) -> Option<Fraction> {
    if cur == Fraction::ONE {
        return None;
    }
    let step = (order + prev.den) / cur.den;
    Some(Fraction {
        num: step * cur.num - prev.num,
        den: step * cur.den - prev.den,
    })
}

/// Iterator over F_N in increasing order, from 0/1 to 1/1.
#[derive(Debug, Clone)]
pub struct FareyIter {
    order: u64,
    state: IterState,
}

#[derive(Debug, Clone)]
enum IterState {
    Fresh,
    AtStart,
    Walking { prev: Fraction, cur: Fraction },
    Done,
}

impl FareyIter {
    /// Enumeration of F_N. `order` must be at least 1.
    pub fn new(order: u64) -> Self {
        FareyIter {
            order,
            state: if order == 0 {
                IterState::Done
            } else {
                IterState::Fresh
            },
        }
    }

    /// Resumes enumeration from a known consecutive pair, emitting the
    /// terms after `cur`.
    pub fn resume_after(prev: Fraction, cur: Fraction, order: u64) -> Self {
        FareyIter {
            order,
            state: IterState::Walking { prev, cur },
        }
    }
}

impl Iterator for FareyIter {
    type Item = Fraction;

    fn next(&mut self) -> Option<Fraction> {
        match self.state {
            IterState::Fresh => {
                self.state = IterState::AtStart;
                Some(Fraction::ZERO)
            }
            IterState::AtStart => {
                let first = Fraction {
                    num: 1,
                    den: self.order,
                };
                self.state = IterState::Walking {
                    prev: Fraction::ZERO,
                    cur: first,
                };
                Some(first)
            }
            IterState::Walking { prev, cur } => match farey_next(prev, cur, self.order) {
                Some(next) => {
                    self.state = IterState::Walking {
                        prev: cur,
                        cur: next,
                    };
                    Some(next)
                }
                None => {
                    self.state = IterState::Done;
                    None
                }
            },
            IterState::Done => None,
        }
    }
}

/// |F_N| = 1 + Φ(N).
pub fn farey_cardinality(order: u64, sums: &SummatoryTable) -> Result<u64> {
    if order == 0 || order > sums.limit() {
        return Err(Error::domain(format!(
            "cardinality: order {order} outside table range 1..={}",
            sums.limit()
        )));
    }
    Ok(1 + sums.phi_sum(order))
}

fn check_member(order: u64, target: Fraction) -> Result<()> {
    if order == 0 {
        return Err(Error::domain("rank: order must be at least 1"));
    }
    if target.den > order {
        return Err(Error::domain(format!(
            "rank: {target} is not in F_{order} (denominator exceeds the order)"
        )));
    }
    Ok(())
}

/// Rank by walking F_N from 0/1 and counting. O(|F_N|) time, O(1) memory.
pub fn rank_by_enumeration(order: u64, target: Fraction) -> Result<RankResult> {
    check_member(order, target)?;
    for (offset, frac) in FareyIter::new(order).enumerate() {
        if frac == target {
            return Ok(RankResult {
                order,
                frac: target,
                index: offset as u64 + 1,
                method: RankMethod::Enumeration,
            });
        }
        if frac > target {
            break;
        }
    }
    // Unreachable for validated inputs: every reduced h/k with k ≤ N is in F_N.
    Err(Error::domain(format!(
        "rank: {target} was not encountered in F_{order}"
    )))
}

/// Rank of the unit fraction 1/k via the identity
/// I_N(1/k) = 1 + Σ_{j=k}^{N} φ(j; [1, ⌊j/k⌋]).
pub fn unit_rank_eq3(order: u64, k: u64, sieve: &FactorSieve) -> Result<RankResult> {
    if k == 0 || k > order {
        return Err(Error::domain(format!(
            "unit rank: k = {k} outside 1..={order}"
        )));
    }
    if order > sieve.limit() {
        return Err(Error::domain(format!(
            "unit rank: order {order} outside factor sieve range 1..={}",
            sieve.limit()
        )));
    }
    let mut index: u64 = 1;
    for j in k..=order {
        index += sieve.phi_interval(j, 1, j / k)?;
    }
    Ok(RankResult {
        order,
        frac: Fraction::unit(k)?,
        index,
        method: RankMethod::Eq3,
    })
}

/// Rank of an arbitrary fraction h/k via coprime counting:
/// I_N(h/k) = 1 + Σ_{q=1}^{N} #{p ∈ [1, ⌊q·h/k⌋] : gcd(p, q) = 1}.
pub fn rank_by_mobius(order: u64, target: Fraction, sieve: &FactorSieve) -> Result<RankResult> {
    check_member(order, target)?;
    if order > sieve.limit() {
        return Err(Error::domain(format!(
            "rank: order {order} outside factor sieve range 1..={}",
            sieve.limit()
        )));
    }
    let mut index: u64 = 1;
    for q in 1..=order {
        let cutoff = q * target.num / target.den;
        index += sieve.phi_interval(q, 1, cutoff)?;
    }
    Ok(RankResult {
        order,
        frac: target,
        index,
        method: RankMethod::Mobius,
    })
}

/// Rank of (k−1)/k via the complement identity
/// I_N((k−1)/k) = 1 + |F_N| − I_N(1/k).
pub fn complement_rank(
    order: u64,
    k: u64,
    sieve: &FactorSieve,
    sums: &SummatoryTable,
) -> Result<RankResult> {
    if k < 2 {
        return Err(Error::domain(format!(
            "complement rank: k = {k} must be at least 2"
        )));
    }
    let unit = unit_rank_eq3(order, k, sieve)?;
    let cardinality = farey_cardinality(order, sums)?;
    Ok(RankResult {
        order,
        frac: Fraction::new(k - 1, k)?,
        index: 1 + cardinality - unit.index,
        method: RankMethod::Complement,
    })
}

/// The exact upper bound (N² + N)/(2k) on I_N(1/k).
pub fn rank_upper_bound(order: u64, k: u64) -> Result<Ratio<u128>> {
    if k == 0 || k > order {
        return Err(Error::domain(format!(
            "rank bound: k = {k} outside 1..={order}"
        )));
    }
    let n = order as u128;
    Ok(Ratio::new(n * n + n, 2 * k as u128))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::TotientTable;

    /// Brute-force oracle: all reduced fractions with den ≤ order, sorted.
    fn farey_by_sorting(order: u64) -> Vec<Fraction> {
        let mut all = vec![Fraction::ZERO];
        for den in 1..=order {
            for num in 1..=den {
                if gcd(num, den) == 1 {
                    all.push(Fraction { num, den });
                }
            }
        }
        all.sort();
        all
    }

    #[test]
    fn fraction_validation() {
        assert!(Fraction::new(2, 4).is_err());
        assert!(Fraction::new(3, 2).is_err());
        assert!(Fraction::new(1, 0).is_err());
        assert_eq!(Fraction::new(0, 1).unwrap(), Fraction::ZERO);
        assert_eq!(Fraction::new(1, 1).unwrap(), Fraction::ONE);
    }

    #[test]
    fn fraction_parse_names_reduced_form() {
        let err = "2/4".parse::<Fraction>().unwrap_err();
        assert!(err.to_string().contains("1/2"), "got: {err}");
        assert_eq!(
            "3/7".parse::<Fraction>().unwrap(),
            Fraction::new(3, 7).unwrap()
        );
        assert!("3".parse::<Fraction>().is_err());
        assert!("a/b".parse::<Fraction>().is_err());
        assert!("-1/2".parse::<Fraction>().is_err());
    }

    #[test]
    fn next_term_examples_in_f5() {
        let f = |n, d| Fraction::new(n, d).unwrap();
        assert_eq!(farey_next(f(0, 1), f(1, 5), 5), Some(f(1, 4)));
        assert_eq!(farey_next(f(2, 5), f(1, 2), 5), Some(f(3, 5)));
        assert_eq!(farey_next(f(3, 4), f(4, 5), 5), Some(f(1, 1)));
        assert_eq!(farey_next(f(0, 1), f(1, 1), 1), None);
    }

    #[test]
    fn enumeration_matches_sorting_oracle() {
        for order in 1..=40 {
            let walked: Vec<Fraction> = FareyIter::new(order).collect();
            assert_eq!(walked, farey_by_sorting(order), "F_{order}");
        }
    }

    #[test]
    fn enumeration_is_strictly_increasing_with_expected_count() {
        let totients = TotientTable::new(128).unwrap();
        let sums = SummatoryTable::new(&totients).unwrap();
        for order in 1..=128 {
            let terms: Vec<Fraction> = FareyIter::new(order).collect();
            assert_eq!(terms.first(), Some(&Fraction::ZERO));
            assert_eq!(terms.last(), Some(&Fraction::ONE));
            assert!(
                terms.windows(2).all(|w| w[0] < w[1]),
                "not increasing at {order}"
            );
            assert_eq!(
                terms.len() as u64,
                farey_cardinality(order, &sums).unwrap(),
                "cardinality at {order}"
            );
        }
    }

    #[test]
    fn cardinality_examples() {
        let totients = TotientTable::new(64).unwrap();
        let sums = SummatoryTable::new(&totients).unwrap();
        assert_eq!(farey_cardinality(1, &sums).unwrap(), 2);
        assert_eq!(farey_cardinality(5, &sums).unwrap(), 11);
        assert_eq!(farey_cardinality(12, &sums).unwrap(), 47);
        assert!(farey_cardinality(65, &sums).is_err());
    }

    #[test]
    fn enumeration_rank_examples() {
        let f = |n, d| Fraction::new(n, d).unwrap();
        assert_eq!(rank_by_enumeration(5, f(0, 1)).unwrap().index, 1);
        assert_eq!(rank_by_enumeration(5, f(1, 2)).unwrap().index, 6);
        assert_eq!(rank_by_enumeration(5, f(1, 1)).unwrap().index, 11);
        assert!(rank_by_enumeration(5, f(1, 6)).is_err());
    }

    #[test]
    fn eq3_rank_examples() {
        let sieve = FactorSieve::new(200).unwrap();
        assert_eq!(unit_rank_eq3(5, 2, &sieve).unwrap().index, 6);
        assert_eq!(unit_rank_eq3(5, 5, &sieve).unwrap().index, 2);
        assert!(unit_rank_eq3(5, 6, &sieve).is_err());
        // k = 1 gives the full cardinality, consistent with I_N(1/1) = |F_N|.
        let totients = TotientTable::new(100).unwrap();
        let sums = SummatoryTable::new(&totients).unwrap();
        for order in 1..=100 {
            assert_eq!(
                unit_rank_eq3(order, 1, &sieve).unwrap().index,
                farey_cardinality(order, &sums).unwrap()
            );
        }
    }

    #[test]
    fn mobius_rank_examples() {
        let sieve = FactorSieve::new(64).unwrap();
        let f = |n, d| Fraction::new(n, d).unwrap();
        assert_eq!(rank_by_mobius(5, f(2, 5), &sieve).unwrap().index, 5);
        assert_eq!(rank_by_mobius(12, f(1, 6), &sieve).unwrap().index, 8);
        assert_eq!(rank_by_mobius(12, f(1, 1), &sieve).unwrap().index, 47);
    }

    #[test]
    fn mobius_rank_agrees_with_enumeration_everywhere() {
        let sieve = FactorSieve::new(40).unwrap();
        for order in 1..=40 {
            for (offset, frac) in FareyIter::new(order).enumerate() {
                let rank = rank_by_mobius(order, frac, &sieve).unwrap();
                assert_eq!(rank.index, offset as u64 + 1, "I_{order}({frac})");
            }
        }
    }

    #[test]
    fn complement_rank_examples() {
        let sieve = FactorSieve::new(64).unwrap();
        let totients = TotientTable::new(64).unwrap();
        let sums = SummatoryTable::new(&totients).unwrap();
        let r = complement_rank(5, 3, &sieve, &sums).unwrap();
        assert_eq!((r.frac, r.index), (Fraction::new(2, 3).unwrap(), 8));
        let r = complement_rank(5, 2, &sieve, &sums).unwrap();
        assert_eq!((r.frac, r.index), (Fraction::new(1, 2).unwrap(), 6));
        let r = complement_rank(12, 12, &sieve, &sums).unwrap();
        assert_eq!((r.frac, r.index), (Fraction::new(11, 12).unwrap(), 46));
        assert!(complement_rank(5, 1, &sieve, &sums).is_err());
    }

    #[test]
    fn upper_bound_examples() {
        let ge = |bound: Ratio<u128>, rank: u64| bound >= Ratio::from_integer(rank as u128);
        assert_eq!(rank_upper_bound(5, 2).unwrap(), Ratio::new(30u128, 4));
        assert!(ge(rank_upper_bound(5, 2).unwrap(), 6));
        assert_eq!(rank_upper_bound(6, 2).unwrap(), Ratio::new(42u128, 4));
        assert!(ge(rank_upper_bound(6, 2).unwrap(), 7));
        for order in 3..=50 {
            // 1/N is always the second element.
            assert!(ge(rank_upper_bound(order, order).unwrap(), 2));
        }
    }

    #[test]
    fn resume_after_continues_the_walk() {
        let f = |n, d| Fraction::new(n, d).unwrap();
        let tail: Vec<Fraction> = FareyIter::resume_after(f(1, 4), f(1, 3), 5).collect();
        assert_eq!(
            tail,
            vec![
                f(2, 5),
                f(1, 2),
                f(3, 5),
                f(2, 3),
                f(3, 4),
                f(4, 5),
                f(1, 1)
            ]
        );
    }
}
