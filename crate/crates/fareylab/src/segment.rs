//! The bijection between F_i and the Farey segment F_N^{1/q, 1/(q−1)}.
//!
//! When N is a multiple of both i and i+1 and q lies in the window
//! N/(i+1) < q ≤ N/i, the map h/k ↦ k/(kq−h) carries F_i onto exactly the
//! fractions of F_N in [1/q, 1/(q−1)], preserving order. The verifier here
//! checks that claim elementwise rather than trusting it.

use crate::error::{Error, Result};
use crate::farey::{FareyIter, Fraction};

/// Parameters of a segment bijection check: domain order `i`, ambient
/// order `n`, and the segment selector `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SegmentSpec {
    pub i: u64,
    pub n: u64,
    pub q: u64,
}

impl SegmentSpec {
    /// Validates the divisibility hypothesis and the q-window
    /// N/(i+1) < q ≤ N/i (strict below, inclusive above). Errors name the
    /// violated condition.
    pub fn new(i: u64, n: u64, q: u64) -> Result<Self> {
        if i == 0 || n == 0 || q == 0 {
            return Err(Error::domain("segment spec: i, n, q must be positive"));
        }
        if !n.is_multiple_of(i) {
            return Err(Error::domain(format!(
                "segment spec: n = {n} is not a multiple of i = {i}"
            )));
        }
        if !n.is_multiple_of(i + 1) {
            return Err(Error::domain(format!(
                "segment spec: n = {n} is not a multiple of i + 1 = {}",
                i + 1
            )));
        }
        // q > n/(i+1) and q ≤ n/i, kept exact in integers.
        if q * (i + 1) <= n {
            return Err(Error::domain(format!(
                "segment spec: q = {q} must exceed n/(i+1) = {}",
                n / (i + 1)
            )));
        }
        if q * i > n {
            return Err(Error::domain(format!(
                "segment spec: q = {q} must not exceed n/i = {}",
                n / i
            )));
        }
        Ok(SegmentSpec { i, n, q })
    }

    /// All q admitted by the window for the given i and n.
    pub fn admissible_q(i: u64, n: u64) -> Result<Vec<u64>> {
        if i == 0 || n == 0 || !n.is_multiple_of(i) || !n.is_multiple_of(i + 1) {
            return Err(Error::domain(format!(
                "segment spec: n = {n} must be a positive multiple of both {i} and {}",
                i + 1
            )));
        }
        Ok((n / (i + 1) + 1..=n / i).collect())
    }
}

/// Outcome of checking one segment bijection, elementwise.
#[derive(Debug, Clone)]
pub struct BijectionReport {
    pub spec: SegmentSpec,
    /// |F_i|, the number of fractions mapped.
    pub domain_size: u64,
    /// Cardinality of the actual segment F_N^{1/q, 1/(q−1)}.
    pub image_size: u64,
    /// Whether increasing preimages produced strictly increasing images,
    /// the orientation suggested by the mediant construction (0/1 ↦ 1/q,
    /// 1/1 ↦ 1/(q−1)). Observed, not assumed.
    pub order_preserved: bool,
    pub bijective: bool,
    /// Positions where the mapped list and the segment disagree, as
    /// (mapped, expected) pairs.
    pub violations: Vec<(Fraction, Fraction)>,
}

/// The segment map h/k ↦ k/(kq − h).
///
/// For a reduced h/k and q ≥ 2 the image is automatically reduced
/// (gcd(k, kq − h) = gcd(k, h) = 1) and lies in [1/q, 1/(q−1)].
pub fn segment_map(f: Fraction, q: u64) -> Result<Fraction> {
    if q < 2 {
        return Err(Error::domain(format!(
            "segment map: q = {q} must be at least 2"
        )));
    }
    let num = f.den();
    let den = f.den() * q - f.num();
    let image = Fraction::new(num, den)?;
    debug_assert!(image >= Fraction::new(1, q)? && image <= Fraction::new(1, q - 1)?);
    Ok(image)
}

/// F_N^{1/q, 1/(q−1)}: the fractions of F_N in [1/q, 1/(q−1)], ascending,
/// endpoints included.
///
/// Starts the enumeration directly at 1/q by solving for its predecessor
/// in F_N, so the cost is proportional to the segment length.
pub fn segment_slice(n: u64, q: u64) -> Result<Vec<Fraction>> {
    if q < 2 {
        return Err(Error::domain(format!(
            "segment slice: q = {q} must be at least 2"
        )));
    }
    if q > n {
        return Err(Error::domain(format!(
            "segment slice: q = {q} exceeds the order {n}, the range is empty"
        )));
    }
    let lower = Fraction::new(1, q)?;
    let upper = Fraction::new(1, q - 1)?;
    // Predecessor p/s of 1/q in F_N: s − qp = 1 with s ≤ N maximal.
    let p = (n - 1) / q;
    let s = p * q + 1;
    let prev = Fraction::new(p, s)?;
    debug_assert!(prev < lower);

    let mut out = vec![lower];
    for frac in FareyIter::resume_after(prev, lower, n) {
        if frac > upper {
            break;
        }
        out.push(frac);
    }
    Ok(out)
}

/// Maps all of F_i through [`segment_map`] and compares the image,
/// elementwise, against the actual segment of F_N.
pub fn verify_bijection(spec: SegmentSpec) -> Result<BijectionReport> {
    let mapped: Vec<Fraction> = FareyIter::new(spec.i)
        .map(|f| segment_map(f, spec.q))
        .collect::<Result<_>>()?;
    let slice = segment_slice(spec.n, spec.q)?;

    let order_preserved = mapped.windows(2).all(|w| w[0] < w[1]);
    let mut violations = Vec::new();
    for (m, s) in mapped.iter().zip(slice.iter()) {
        if m != s {
            violations.push((*m, *s));
        }
    }
    let bijective = mapped.len() == slice.len() && violations.is_empty();

    Ok(BijectionReport {
        spec,
        domain_size: mapped.len() as u64,
        image_size: slice.len() as u64,
        order_preserved,
        bijective,
        violations,
    })
}
