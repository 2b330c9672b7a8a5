//! Consistency checks tying a Weierstrass semigroup to Hasse–Witt data and
//! to maximal curves over `F_{q²}`.
//!
//! Nothing here computes a Hasse–Witt matrix. The counts are lower bounds for
//! the rank of its iterates and the predicates only say whether given data
//! can be consistent.

use serde::Serialize;

use crate::arith::{checked_add, checked_mul, checked_pow, is_prime, prime_power_exponent};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("p = {p} is not prime")))
    }
}

fn require_prime_power(q: u64) -> Result<()> {
    if crate::arith::as_prime_power(q).is_some() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "q = {q} is not a prime power"
        )))
    }
}

/// Number of gaps divisible by `p^r`, a lower bound for the rank of the
/// `r`-th iterate of the Hasse–Witt matrix.
pub fn gaps_divisible_by(h: &NumericalSemigroup, p: u64, r: u32) -> Result<u64> {
    require_prime(p)?;
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    // Past the conductor there are no gaps, so a saturated power counts nothing.
    let pr = p.checked_pow(r).unwrap_or(u64::MAX);
    Ok(h.gaps().iter().filter(|g| g % pr == 0).count() as u64)
}

/// Whether a vanishing `ℓ`-th iterate is consistent with the semigroup:
/// no gap may be divisible by `p^ℓ`.
pub fn zero_hasse_witt_consistent(h: &NumericalSemigroup, p: u64, ell: u32) -> Result<bool> {
    Ok(gaps_divisible_by(h, p, ell)? == 0)
}

/// `p^ℓ(p^ℓ − 1)/2`, the largest genus of a curve whose Cartier operator
/// satisfies `C^ℓ = 0`.
pub fn nilpotency_genus_bound(p: u64, ell: u32) -> Result<u64> {
    require_prime(p)?;
    if ell == 0 {
        return Err(Error::InvalidArgument(
            "nilpotency order must be at least 1".into(),
        ));
    }
    let pl = checked_pow(p, ell, "p^l")?;
    Ok(checked_mul(pl, pl - 1, "nilpotency bound")? / 2)
}

/// Whether `C^ℓ = 0` forces the curve to be non-classical for the canonical
/// series: `p^ℓ` is a pole number and `p^ℓ ≤ g`.
pub fn forced_non_classical(h: &NumericalSemigroup, p: u64, ell: u32) -> Result<bool> {
    require_prime(p)?;
    match p.checked_pow(ell) {
        Some(pl) => Ok(pl <= h.genus() && h.contains(pl)),
        None => Ok(false),
    }
}

/// `q²·m + 1`, the bound on rational points given a pole number `m` at a
/// rational point.
pub fn maximal_point_bound(q: u64, m: u64) -> Result<u64> {
    require_prime_power(q)?;
    if m == 0 {
        return Err(Error::InvalidArgument(
            "pole number must be positive".into(),
        ));
    }
    let qq = checked_mul(q, q, "q^2")?;
    checked_add(checked_mul(qq, m, "q^2*m")?, 1, "point bound")
}

/// `⌊q(m − 1)/2⌋`, the genus bound for a maximal curve over `F_{q²}` with
/// pole number `m` at a rational point.
pub fn genus_bound_maximal(q: u64, m: u64) -> Result<u64> {
    require_prime_power(q)?;
    if m == 0 {
        return Err(Error::InvalidArgument(
            "pole number must be positive".into(),
        ));
    }
    Ok(checked_mul(q, m - 1, "q(m-1)")? / 2)
}

/// At a rational point of a maximal curve over `F_{q²}` both `q` and `q + 1`
/// are pole numbers.
pub fn rational_point_semigroup_check(h: &NumericalSemigroup, q: u64) -> Result<bool> {
    require_prime_power(q)?;
    Ok(h.contains(q) && h.contains(q + 1))
}

/// Classicality of a curve with zero Cartier operator and a wildly ramified
/// point, from its genus alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassicalityVerdict {
    /// `g > p − 1`.
    NonClassical,
    /// `g = p − 1` is not decided.
    Inconclusive,
    /// `g = (p − 1)/2`, the hyperelliptic curve `y² = x^p − x`, which is
    /// classical.
    HyperellipticException,
    /// Wild ramification needs `g ≥ p − 1` outside the exception.
    NotRealizable,
}

pub fn zero_cartier_classicality(genus: u64, p: u64) -> Result<ClassicalityVerdict> {
    require_prime(p)?;
    Ok(if genus > p - 1 {
        ClassicalityVerdict::NonClassical
    } else if genus == p - 1 {
        ClassicalityVerdict::Inconclusive
    } else if p > 2 && genus == (p - 1) / 2 {
        ClassicalityVerdict::HyperellipticException
    } else {
        ClassicalityVerdict::NotRealizable
    })
}

/// Inputs of a combined check at one point of a curve.
#[derive(Debug, Clone)]
pub struct CurveCheckInput {
    pub semigroup: NumericalSemigroup,
    pub p: u64,
    pub q: Option<u64>,
    pub nilpotency_order: Option<u32>,
    pub claimed_points: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisibilityCount {
    pub r: u32,
    pub modulus: u64,
    pub rank_lower_bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NilpotencyCheck {
    pub order: u32,
    pub genus_bound: u64,
    pub genus_within_bound: bool,
    pub zero_rank_consistent: bool,
    pub forced_non_classical: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalCheck {
    pub q: u64,
    /// Smallest positive pole number, which gives the sharpest bounds.
    pub pole_number: u64,
    pub point_bound: u64,
    pub genus_bound: u64,
    pub genus_within_bound: bool,
    pub q_and_q_plus_one_are_poles: bool,
    /// `q² + 1 + 2gq`.
    pub maximal_point_count: u64,
    pub maximal_count_within_bound: bool,
    pub claimed_points: Option<u64>,
    pub claimed_points_within_bound: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveCheckReport {
    pub genus: u64,
    pub p: u64,
    pub divisibility: Vec<DivisibilityCount>,
    pub zero_hasse_witt_consistent: bool,
    pub zero_cartier_classicality: ClassicalityVerdict,
    pub nilpotency: Option<NilpotencyCheck>,
    pub maximal: Option<MaximalCheck>,
}

impl CurveCheckReport {
    /// Every predicate that can rule the data out holds.
    pub fn consistent(&self) -> bool {
        let nil = self
            .nilpotency
            .as_ref()
            .is_none_or(|n| n.genus_within_bound && n.zero_rank_consistent);
        let max = self.maximal.as_ref().is_none_or(|m| {
            m.genus_within_bound
                && m.q_and_q_plus_one_are_poles
                && m.claimed_points_within_bound.unwrap_or(true)
        });
        nil && max
    }
}

pub fn check(input: &CurveCheckInput) -> Result<CurveCheckReport> {
    let h = &input.semigroup;
    let p = input.p;
    require_prime(p)?;
    let genus = h.genus();

    let mut divisibility = Vec::new();
    let mut r = 1;
    while let Some(modulus) = p.checked_pow(r) {
        if modulus as i64 > h.frobenius() {
            break;
        }
        divisibility.push(DivisibilityCount {
            r,
            modulus,
            rank_lower_bound: gaps_divisible_by(h, p, r)?,
        });
        r += 1;
    }

    let nilpotency = input
        .nilpotency_order
        .map(|ell| -> Result<NilpotencyCheck> {
            let genus_bound = nilpotency_genus_bound(p, ell)?;
            Ok(NilpotencyCheck {
                order: ell,
                genus_bound,
                genus_within_bound: genus <= genus_bound,
                zero_rank_consistent: zero_hasse_witt_consistent(h, p, ell)?,
                forced_non_classical: forced_non_classical(h, p, ell)?,
            })
        })
        .transpose()?;

    let maximal = input
        .q
        .map(|q| -> Result<MaximalCheck> {
            if prime_power_exponent(q, p).is_none() {
                return Err(Error::InvalidArgument(format!(
                    "q = {q} is not a power of p = {p}"
                )));
            }
            let m = h.multiplicity();
            let point_bound = maximal_point_bound(q, m)?;
            let genus_bound = genus_bound_maximal(q, m)?;
            let qq = checked_mul(q, q, "q^2")?;
            let maximal_point_count = checked_add(
                qq + 1,
                checked_mul(2 * q, genus, "2gq")?,
                "maximal point count",
            )?;
            Ok(MaximalCheck {
                q,
                pole_number: m,
                point_bound,
                genus_bound,
                genus_within_bound: genus <= genus_bound,
                q_and_q_plus_one_are_poles: rational_point_semigroup_check(h, q)?,
                maximal_point_count,
                maximal_count_within_bound: maximal_point_count <= point_bound,
                claimed_points: input.claimed_points,
                claimed_points_within_bound: input.claimed_points.map(|n| n <= point_bound),
            })
        })
        .transpose()?;

    Ok(CurveCheckReport {
        genus,
        p,
        divisibility,
        zero_hasse_witt_consistent: zero_hasse_witt_consistent(h, p, 1)?,
        zero_cartier_classicality: zero_cartier_classicality(genus, p)?,
        nilpotency,
        maximal,
    })
}
