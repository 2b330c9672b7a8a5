//! Boseck invariants of a cyclic `p^n` cover of the projective line.
//!
//! For `0 ≤ k < p^n` with base-`p` digits `a_1 … a_n` (least significant
//! first), the monomial `w_k = y_1^{a_1} ⋯ y_n^{a_n}` has pole order
//! `Σ_j a_j λ_{i,j} p^{n−j}` at the `i`-th ramified place. Dividing
//! `δ_i − ord(w_k)` by `p^n` gives the quotient `ν_{ik}` and the remainder
//! `ρ_i^(k)`; the Boseck invariant is `Γ_k = Σ_i ν_{ik}`. The gaps at place
//! `i` are `ν·p^n + ρ_i^(k) + 1` for `k ≤ p^n − 2` and `ν ≤ Γ_k − 2`.

use serde::Serialize;

pub use crate::covers::{CyclicCoverSpec, RamifiedPlace};

use crate::arith::{checked_add, checked_mul, checked_pow, digits};
use crate::error::{Error, Result};
use crate::semigroup::{GapSet, NumericalSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoseckTable {
    spec: CyclicCoverSpec,
    /// Different exponent per place.
    deltas: Vec<u64>,
    /// `digits[k][j]` is `a_{j+1}^(k)`.
    digits: Vec<Vec<u64>>,
    /// `nu[i][k]`.
    nu: Vec<Vec<u64>>,
    gamma: Vec<u64>,
    /// `rho[i][k]`.
    rho: Vec<Vec<u64>>,
    genus: u64,
}

impl BoseckTable {
    pub fn build(spec: &CyclicCoverSpec) -> Result<Self> {
        let p = spec.p();
        let n = spec.n() as usize;
        let q = spec.degree();
        // weights[j] = p^{n-1-j}, the multiplier of layer j+1
        let weights: Vec<u64> = (0..n)
            .map(|j| checked_pow(p, (n - 1 - j) as u32, "p^(n-j)"))
            .collect::<Result<_>>()?;

        let mut deltas = Vec::with_capacity(spec.places().len());
        for place in spec.places() {
            let mut sum = 0u64;
            for (&l, &w) in place.lambdas().iter().zip(&weights) {
                sum = checked_add(
                    sum,
                    checked_mul(l + 1, w, "(lambda+1)p^(n-j)")?,
                    "different",
                )?;
            }
            deltas.push(checked_mul(p - 1, sum, "different exponent")?);
        }

        let digits: Vec<Vec<u64>> = (0..q).map(|k| digits(k, p, n)).collect();
        let mut nu = Vec::with_capacity(deltas.len());
        let mut rho = Vec::with_capacity(deltas.len());
        for (place, &delta) in spec.places().iter().zip(&deltas) {
            let mut nu_row = Vec::with_capacity(q as usize);
            let mut rho_row = Vec::with_capacity(q as usize);
            for a in &digits {
                let mut order = 0u64;
                for ((&aj, &l), &w) in a.iter().zip(place.lambdas()).zip(&weights) {
                    order = checked_add(
                        order,
                        checked_mul(aj * w, l, "monomial order")?,
                        "monomial order",
                    )?;
                }
                // order ≤ (p−1)Σλ_j p^{n−j} = δ − (p^n − 1)
                let rest = delta.checked_sub(order).ok_or_else(|| {
                    Error::InternalInconsistency("monomial pole order exceeds different".into())
                })?;
                nu_row.push(rest / q);
                rho_row.push(rest % q);
            }
            nu.push(nu_row);
            rho.push(rho_row);
        }
        let gamma: Vec<u64> = (0..q as usize)
            .map(|k| nu.iter().map(|row| row[k]).sum())
            .collect();

        // 2g − 2 = −2p^n + Σ δ_i
        let total: u64 = deltas.iter().sum();
        let doubled = (total + 2)
            .checked_sub(2 * q)
            .filter(|d| d % 2 == 0)
            .ok_or_else(|| {
                Error::InvalidSpec(format!(
                    "Riemann-Hurwitz gives 2g = {total} + 2 - 2*{q}, not a nonnegative even number"
                ))
            })?;

        Ok(BoseckTable {
            spec: spec.clone(),
            deltas,
            digits,
            nu,
            gamma,
            rho,
            genus: doubled / 2,
        })
    }

    pub fn spec(&self) -> &CyclicCoverSpec {
        &self.spec
    }

    pub fn degree(&self) -> u64 {
        self.spec.degree()
    }

    pub fn place_count(&self) -> usize {
        self.deltas.len()
    }

    pub fn deltas(&self) -> &[u64] {
        &self.deltas
    }

    pub fn digits(&self, k: usize) -> &[u64] {
        &self.digits[k]
    }

    pub fn gamma(&self) -> &[u64] {
        &self.gamma
    }

    pub fn nu(&self, place: usize) -> Result<&[u64]> {
        self.check_place(place)?;
        Ok(&self.nu[place])
    }

    pub fn rho(&self, place: usize) -> Result<&[u64]> {
        self.check_place(place)?;
        Ok(&self.rho[place])
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    fn check_place(&self, index: usize) -> Result<()> {
        if index >= self.place_count() {
            return Err(Error::PlaceOutOfRange {
                index,
                places: self.place_count(),
            });
        }
        Ok(())
    }

    /// `Σ_{k ≤ p^n − 2} (Γ_k − 1)`, which must equal the genus.
    pub fn boseck_genus_sum(&self) -> i64 {
        let q = self.degree() as usize;
        self.gamma[..q - 1].iter().map(|&g| g as i64 - 1).sum()
    }

    /// Gaps at the given place. Indices with `Γ_k ≤ 1` and `k = p^n − 1`
    /// contribute nothing.
    pub fn gap_sequence(&self, place: usize) -> Result<GapSet> {
        self.check_place(place)?;
        let q = self.degree();
        let mut gaps = Vec::with_capacity(self.genus as usize);
        for k in 0..(q - 1) as usize {
            let rho = self.rho[place][k];
            for nu in 0..self.gamma[k].saturating_sub(1) {
                gaps.push(nu * q + rho + 1);
            }
        }
        let produced = gaps.len();
        let set = GapSet::from_unsorted(gaps)
            .map_err(|e| Error::InternalInconsistency(format!("Boseck gaps: {e}")))?;
        if set.len() != produced || set.len() as u64 != self.genus {
            return Err(Error::InternalInconsistency(format!(
                "{produced} Boseck gap values ({} distinct) but genus is {}",
                set.len(),
                self.genus
            )));
        }
        Ok(set)
    }

    /// Gaps below `p^n`: `ρ_i^(k) + 1` for the `k ≤ p^n − 2` with `Γ_k ≥ 2`.
    pub fn small_gaps(&self, place: usize) -> Result<Vec<u64>> {
        self.check_place(place)?;
        let q = self.degree() as usize;
        let mut out: Vec<u64> = (0..q - 1)
            .filter(|&k| self.gamma[k] >= 2)
            .map(|k| self.rho[place][k] + 1)
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Largest gap `δ − 2p^n + 1` when only one place ramifies.
    pub fn max_gap_one_place(&self) -> Result<u64> {
        if self.place_count() != 1 {
            return Err(Error::MultiplePlaces(self.place_count()));
        }
        if self.genus == 0 {
            return Err(Error::GenusZero);
        }
        Ok(self.deltas[0] + 1 - 2 * self.degree())
    }

    /// Symmetry of the semigroup at `place`: every other place must have a
    /// different exponent divisible by `p^n`. Always true for one place.
    pub fn is_symmetric_at(&self, place: usize) -> Result<bool> {
        self.check_place(place)?;
        let q = self.degree();
        Ok(self
            .deltas
            .iter()
            .enumerate()
            .all(|(i, &d)| i == place || d % q == 0))
    }

    /// Whether every jump of every other place is `≡ −1 (mod p^n)`. This
    /// implies [`is_symmetric_at`](Self::is_symmetric_at); for `n = 1` the
    /// two agree.
    pub fn other_jumps_congruent_minus_one(&self, place: usize) -> Result<bool> {
        self.check_place(place)?;
        let q = self.degree();
        Ok(self
            .spec
            .places()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != place)
            .all(|(_, pl)| pl.lambdas().iter().all(|&l| (l + 1) % q == 0)))
    }

    /// The semigroup whose complement is [`gap_sequence`](Self::gap_sequence).
    /// In the symmetric case the pole numbers below `2g` are checked to be
    /// `{2g − 1 − a}` over the gaps `a`.
    pub fn semigroup_from_gaps(&self, place: usize) -> Result<NumericalSemigroup> {
        let gaps = self.gap_sequence(place)?;
        let sg = NumericalSemigroup::from_gaps(&gaps)?;
        if self.genus > 0 && self.is_symmetric_at(place)? {
            let top = 2 * self.genus - 1;
            let mut reflected: Vec<u64> = gaps.iter().map(|a| top - a).collect();
            reflected.sort_unstable();
            if reflected != sg.members_up_to(top) {
                return Err(Error::InternalInconsistency(
                    "symmetric place whose pole numbers are not the reflected gaps".into(),
                ));
            }
        }
        Ok(sg)
    }
}
