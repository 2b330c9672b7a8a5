//! Gap sets and semigroups of wildly ramified covers from closed formulas.
//!
//! * Artin–Schreier covers `y^q − y = G` of a base function field, with `G`
//!   having a single pole of order `m` prime to `p` ([`ArtinSchreierCover`]).
//! * Cyclic covers of degree `p^n` of the projective line described by their
//!   jump data ([`CyclicCoverSpec`], [`cyclic_semigroup`]).
//! * Jump positions for a compositum of two Artin–Schreier covers and the
//!   candidate ramification jumps read off a semigroup.

use serde::Serialize;

use crate::arith::{checked_add, checked_mul, checked_pow, gcd, is_prime, SizeGuard};
use crate::error::{Error, Result};
use crate::semigroup::{GapSet, NumericalSemigroup};

/// Parameters of `y^{p^h} − y = G` where `G` has a unique pole, of order `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArtinSchreierCover {
    p: u64,
    h: u32,
    m: u64,
    base_gaps: GapSet,
    #[serde(skip)]
    q: u64,
}

impl ArtinSchreierCover {
    pub fn new(p: u64, h: u32, m: u64, base_gaps: GapSet) -> Result<Self> {
        Self::with_guard(p, h, m, base_gaps, SizeGuard::default())
    }

    pub fn with_guard(p: u64, h: u32, m: u64, base_gaps: GapSet, guard: SizeGuard) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidCover(format!("p = {p} is not prime")));
        }
        if h == 0 {
            return Err(Error::InvalidCover("h must be at least 1".into()));
        }
        if m == 0 {
            return Err(Error::InvalidCover("pole order m must be positive".into()));
        }
        if m.is_multiple_of(p) {
            return Err(Error::InvalidCover(format!(
                "m = {m} is divisible by p = {p}"
            )));
        }
        let q = checked_pow(p, h, "p^h")?;
        guard.check("p^h", q)?;
        Ok(ArtinSchreierCover {
            p,
            h,
            m,
            base_gaps,
            q,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    /// Degree `q = p^h` of the cover.
    pub fn degree(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn base_gaps(&self) -> &GapSet {
        &self.base_gaps
    }

    pub fn base_genus(&self) -> u64 {
        self.base_gaps.len() as u64
    }

    /// Genus of the cover from Riemann–Hurwitz: `q·g0 + (m − 1)(q − 1)/2`.
    pub fn riemann_hurwitz_genus(&self) -> Result<u64> {
        let lifted = checked_mul(self.q, self.base_genus(), "q*g0")?;
        let new = checked_mul(self.m - 1, self.q - 1, "(m-1)(q-1)")? / 2;
        checked_add(lifted, new, "cover genus")
    }

    /// Gaps at the totally ramified place above the pole of `G`.
    ///
    /// For each `i` the residue class of `m·i` modulo `q` contributes the
    /// values `m·i − j·q` (`1 ≤ j ≤ ⌊m·i/q⌋`, only for `i ≥ 1`) and the
    /// lifted base gaps `m·i + q·h_j` for `0 ≤ i ≤ q − 1`. Residues separate
    /// the families, and the total is checked against Riemann–Hurwitz.
    pub fn lewittes_gaps(&self) -> Result<LewittesGaps> {
        let q = self.q;
        let m = self.m;
        let mut gaps = Vec::new();
        for i in 0..q {
            let mi = checked_mul(m, i, "m*i")?;
            if i >= 1 {
                gaps.extend((1..=mi / q).map(|j| mi - j * q));
            }
            for hj in self.base_gaps.iter() {
                let lifted = checked_mul(q, hj, "q*h_j")?;
                gaps.push(checked_add(mi, lifted, "m*i + q*h_j")?);
            }
        }
        let produced = gaps.len();
        let expected = self.riemann_hurwitz_genus()?;
        let gaps = GapSet::from_unsorted(gaps).map_err(|e| {
            Error::InternalInconsistency(format!("gap family is not a gap set: {e}"))
        })?;
        if gaps.len() != produced {
            return Err(Error::InternalInconsistency(
                "gap families produced repeated values".into(),
            ));
        }
        if gaps.len() as u64 != expected {
            return Err(Error::InternalInconsistency(format!(
                "{} gaps but Riemann-Hurwitz genus is {expected}",
                gaps.len()
            )));
        }
        Ok(LewittesGaps {
            gaps,
            genus: expected,
            base_genus: self.base_genus(),
        })
    }
}

/// Output of [`ArtinSchreierCover::lewittes_gaps`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LewittesGaps {
    pub gaps: GapSet,
    pub genus: u64,
    pub base_genus: u64,
}

impl LewittesGaps {
    /// Number of gaps contributed by the `i = 0` lifted base gaps `q·h_j`.
    /// Restricting `i` to `1..q` would lose exactly these.
    pub fn index_zero_contribution(&self) -> u64 {
        self.base_genus
    }

    pub fn warnings(&self) -> Vec<String> {
        if self.base_genus == 0 {
            return Vec::new();
        }
        vec![format!(
            "lifted base gaps q*h_j (index i = 0) included: a range starting at i = 1 \
             yields {} gaps, {} short of the Riemann-Hurwitz genus {}",
            self.gaps.len() as u64 - self.base_genus,
            self.base_genus,
            self.genus
        )]
    }

    pub fn semigroup(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::from_gaps(&self.gaps)
    }
}

/// Jump data `λ_{i,1}, …, λ_{i,n}` of one totally ramified place.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RamifiedPlace {
    lambdas: Vec<u64>,
}

impl RamifiedPlace {
    pub fn new(lambdas: Vec<u64>) -> Self {
        RamifiedPlace { lambdas }
    }

    pub fn lambdas(&self) -> &[u64] {
        &self.lambdas
    }
}

/// A cyclic cover of degree `p^n` of the projective line, totally ramified
/// at every listed place.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicCoverSpec {
    p: u64,
    n: u32,
    places: Vec<RamifiedPlace>,
    #[serde(skip)]
    degree: u64,
}

impl CyclicCoverSpec {
    pub fn new(p: u64, n: u32, places: Vec<RamifiedPlace>) -> Result<Self> {
        Self::with_guard(p, n, places, SizeGuard::default())
    }

    /// Every `λ_{i,j}` must be positive and prime to `p`.
    pub fn with_guard(
        p: u64,
        n: u32,
        places: Vec<RamifiedPlace>,
        guard: SizeGuard,
    ) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidSpec(format!("p = {p} is not prime")));
        }
        if n == 0 {
            return Err(Error::InvalidSpec("n must be at least 1".into()));
        }
        if places.is_empty() {
            return Err(Error::InvalidSpec(
                "at least one ramified place is required".into(),
            ));
        }
        let degree = checked_pow(p, n, "p^n")?;
        guard.check("p^n", degree)?;
        for (i, place) in places.iter().enumerate() {
            if place.lambdas.len() != n as usize {
                return Err(Error::InvalidSpec(format!(
                    "place {i} has {} jumps, expected {n}",
                    place.lambdas.len()
                )));
            }
            if let Some(&bad) = place.lambdas.iter().find(|&&l| l == 0 || l % p == 0) {
                return Err(Error::InvalidSpec(format!(
                    "place {i}: jump {bad} must be positive and prime to p = {p}"
                )));
            }
        }
        Ok(CyclicCoverSpec {
            p,
            n,
            places,
            degree,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `p^n`.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn places(&self) -> &[RamifiedPlace] {
        &self.places
    }

    pub fn place(&self, index: usize) -> Result<&RamifiedPlace> {
        self.places.get(index).ok_or(Error::PlaceOutOfRange {
            index,
            places: self.places.len(),
        })
    }

    /// `[p^n, p^{n−1}·λ_1, …, λ_n]` for the given place.
    pub fn semigroup_generators(&self, index: usize) -> Result<Vec<u64>> {
        let place = self.place(index)?;
        let mut gens = vec![self.degree];
        for (j, &l) in place.lambdas.iter().enumerate() {
            let weight = checked_pow(self.p, self.n - 1 - j as u32, "p^(n-j)")?;
            gens.push(checked_mul(weight, l, "p^(n-j)*lambda_j")?);
        }
        Ok(gens)
    }
}

/// Whether a semigroup is the Weierstrass semigroup itself or only a
/// semigroup containing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Exactness {
    Exact,
    UpperBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSemigroup {
    pub semigroup: NumericalSemigroup,
    pub exactness: Exactness,
}

/// `⟨p^n, p^{n−1}λ_1, …, λ_n⟩` at the given place. It is the Weierstrass
/// semigroup when the place is the only ramified one; otherwise it only
/// contains it and is flagged [`Exactness::UpperBound`].
pub fn cyclic_semigroup(spec: &CyclicCoverSpec, place_index: usize) -> Result<CyclicSemigroup> {
    cyclic_semigroup_with(spec, place_index, SizeGuard::default())
}

pub fn cyclic_semigroup_with(
    spec: &CyclicCoverSpec,
    place_index: usize,
    guard: SizeGuard,
) -> Result<CyclicSemigroup> {
    let gens = spec.semigroup_generators(place_index)?;
    let semigroup = NumericalSemigroup::from_generators_with(&gens, guard)?;
    let exactness = if spec.places.len() == 1 {
        Exactness::Exact
    } else {
        Exactness::UpperBound
    };
    Ok(CyclicSemigroup {
        semigroup,
        exactness,
    })
}

/// Ramification jumps `(m1, m1 + p(m2 − m1))` of the compositum of the
/// Artin–Schreier covers with conductors `m1 < m2`.
pub fn two_cover_jumps(m1: u64, m2: u64, p: u64) -> Result<(u64, u64)> {
    if !is_prime(p) {
        return Err(Error::InvalidConductors(format!("p = {p} is not prime")));
    }
    if m1 == 0 || m1 >= m2 {
        return Err(Error::InvalidConductors(format!(
            "need 0 < m1 < m2, got {m1}, {m2}"
        )));
    }
    if let Some(bad) = [m1, m2].into_iter().find(|&m| gcd(m, p) != 1) {
        return Err(Error::InvalidConductors(format!(
            "{bad} is divisible by p = {p}"
        )));
    }
    let second = checked_add(m1, checked_mul(p, m2 - m1, "p*(m2-m1)")?, "second jump")?;
    Ok((m1, second))
}

/// Positions where the ramification filtration at the point may jump.
///
/// With `m` the least pole number `> 1` prime to `p`, these are the
/// differences `m − m_k` over the pole numbers `0 ≤ m_k < m`.
pub fn ramification_jump_candidates(h: &NumericalSemigroup, p: u64) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("p = {p} is not prime")));
    }
    // Among any p consecutive integers one is prime to p, and everything from
    // the conductor on is a pole number.
    let search_end = h.conductor().max(2) + p;
    let m = (2..=search_end)
        .find(|&n| h.contains(n) && n % p != 0)
        .ok_or(Error::NoCoprimeMember(p))?;
    let mut out: Vec<u64> = (0..m).filter(|&k| h.contains(k)).map(|k| m - k).collect();
    out.sort_unstable();
    Ok(out)
}
