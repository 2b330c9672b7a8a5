//! Numerical semigroups: cofinite submonoids of the nonnegative integers.
//!
//! A [`NumericalSemigroup`] stores its membership table below the conductor,
//! so every query is a table lookup. Construction goes through the coin
//! problem dynamic program ([`NumericalSemigroup::from_generators`]) or
//! through an explicit gap list ([`NumericalSemigroup::from_gaps`]).

use serde::Serialize;

use crate::arith::{checked_mul, gcd, SizeGuard};
use crate::error::{Error, Result};

/// Strictly increasing finite list of positive integers, the gaps of a point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct GapSet(Vec<u64>);

impl GapSet {
    /// Validates the list. Besides positivity and strict monotonicity, a gap
    /// set of size `g ≥ 1` must have its largest element at most `2g − 1`.
    pub fn new(gaps: Vec<u64>) -> Result<Self> {
        if gaps.first() == Some(&0) {
            return Err(Error::InvalidGapSet("gaps must be positive".into()));
        }
        if let Some(w) = gaps.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGapSet(format!(
                "not strictly increasing at {} -> {}",
                w[0], w[1]
            )));
        }
        if let Some(&max) = gaps.last() {
            let bound = 2 * gaps.len() as u64 - 1;
            if max > bound {
                return Err(Error::InvalidGapSet(format!(
                    "largest gap {max} exceeds 2g-1 = {bound}"
                )));
            }
        }
        Ok(GapSet(gaps))
    }

    /// Sorts and deduplicates before validating.
    pub fn from_unsorted(mut gaps: Vec<u64>) -> Result<Self> {
        gaps.sort_unstable();
        gaps.dedup();
        Self::new(gaps)
    }

    pub fn empty() -> Self {
        GapSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn contains(&self, n: u64) -> bool {
        self.0.binary_search(&n).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }
}

/// A numerical semigroup `H ⊆ Z≥0` with finite complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    /// `below_conductor[n]` is membership of `n` for `n < conductor`.
    below_conductor: Vec<bool>,
    conductor: u64,
    genus: u64,
}

impl NumericalSemigroup {
    /// The monoid `⟨gens⟩` under the default [`SizeGuard`].
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        Self::from_generators_with(gens, SizeGuard::default())
    }

    /// The monoid `⟨gens⟩`. The input need not be minimal or sorted.
    ///
    /// Membership is filled in increasing order; once the table contains a
    /// run of consecutive members as long as the smallest generator, every
    /// later integer is a member and the start of that run is the conductor.
    pub fn from_generators_with(gens: &[u64], guard: SizeGuard) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let smallest = sorted[0];

        let mut table: Vec<bool> = Vec::new();
        let mut run = 0u64;
        let mut n = 0u64;
        loop {
            guard.check_table("semigroup table length", n)?;
            let member = n == 0
                || sorted
                    .iter()
                    .take_while(|&&g| g <= n)
                    .any(|&g| table[(n - g) as usize]);
            table.push(member);
            run = if member { run + 1 } else { 0 };
            if run == smallest {
                break;
            }
            n += 1;
        }
        let conductor = n + 1 - smallest;
        table.truncate(conductor as usize);
        Ok(Self::from_table(table))
    }

    /// The semigroup whose complement is exactly `gaps`.
    ///
    /// Fails with [`Error::NotASemigroup`] if the complement is not closed
    /// under addition.
    pub fn from_gaps(gaps: &GapSet) -> Result<Self> {
        let conductor = gaps.max().map_or(0, |m| m + 1);
        let mut table = vec![true; conductor as usize];
        for g in gaps.iter() {
            table[g as usize] = false;
        }
        let members: Vec<usize> = (1..conductor as usize).filter(|&n| table[n]).collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i..] {
                let s = a + b;
                if s >= table.len() {
                    break;
                }
                if !table[s] {
                    return Err(Error::NotASemigroup(format!(
                        "{a} + {b} = {s} is listed as a gap"
                    )));
                }
            }
        }
        Ok(Self::from_table(table))
    }

    fn from_table(table: Vec<bool>) -> Self {
        let conductor = table.len() as u64;
        let genus = table.iter().filter(|&&m| !m).count() as u64;
        let mut sg = NumericalSemigroup {
            generators: Vec::new(),
            below_conductor: table,
            conductor,
            genus,
        };
        sg.generators = sg.compute_minimal_generators();
        sg
    }

    /// A member is a minimal generator iff it is not a sum of two positive
    /// members. All of them are at most `conductor + multiplicity`.
    fn compute_minimal_generators(&self) -> Vec<u64> {
        let limit = self.conductor + self.multiplicity();
        let members: Vec<u64> = (1..=limit).filter(|&n| self.contains(n)).collect();
        members
            .iter()
            .copied()
            .filter(|&m| {
                !members
                    .iter()
                    .take_while(|&&a| 2 * a <= m)
                    .any(|&a| self.contains(m - a))
            })
            .collect()
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.conductor || self.below_conductor[n as usize]
    }

    /// Minimal generating set, increasing.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Least `c` with `[c, ∞) ⊆ H`.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Largest gap, or `-1` for the full monoid.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    /// Smallest positive member.
    pub fn multiplicity(&self) -> u64 {
        (1..=self.conductor.max(1))
            .find(|&n| self.contains(n))
            .expect("conductor is a member")
    }

    pub fn gaps(&self) -> GapSet {
        GapSet(
            (1..self.conductor)
                .filter(|&n| !self.below_conductor[n as usize])
                .collect(),
        )
    }

    /// Members in `[0, limit]`, increasing.
    pub fn members_up_to(&self, limit: u64) -> Vec<u64> {
        (0..=limit).filter(|&n| self.contains(n)).collect()
    }

    /// Symmetric means the largest gap is `2g − 1`.
    pub fn is_symmetric(&self) -> Result<bool> {
        if self.genus == 0 {
            return Err(Error::GenusZero);
        }
        let symmetric = self.frobenius() == 2 * self.genus as i64 - 1;
        debug_assert!(!symmetric || self.satisfies_symmetry_relation());
        Ok(symmetric)
    }

    /// Checks `n ∈ H ⇔ 2g − 1 − n ∉ H` for every `0 ≤ n ≤ 2g − 1`.
    pub fn satisfies_symmetry_relation(&self) -> bool {
        if self.genus == 0 {
            return false;
        }
        let top = 2 * self.genus - 1;
        (0..=top).all(|n| self.contains(n) != self.contains(top - n))
    }

    /// Least member in each residue class modulo `d`, indexed by residue.
    pub fn apery_set(&self, d: u64) -> Result<Vec<u64>> {
        if d == 0 {
            return Err(Error::InvalidArgument(
                "Apery modulus must be positive".into(),
            ));
        }
        if !self.contains(d) {
            return Err(Error::NotMember(d));
        }
        Ok((0..d)
            .map(|mu| {
                let mut n = mu;
                while !self.contains(n) {
                    n += d;
                }
                n
            })
            .collect())
    }

    /// The image `c·H`, as a membership view.
    pub fn scale(&self, c: u64) -> Result<ScaledSemigroup<'_>> {
        if c == 0 {
            return Err(Error::InvalidArgument(
                "scale factor must be positive".into(),
            ));
        }
        checked_mul(self.conductor, c, "scaled conductor")?;
        Ok(ScaledSemigroup {
            base: self,
            factor: c,
        })
    }
}

/// `c·H` for a semigroup `H`; not itself numerical when `c > 1`.
#[derive(Debug, Clone, Copy)]
pub struct ScaledSemigroup<'a> {
    base: &'a NumericalSemigroup,
    factor: u64,
}

impl ScaledSemigroup<'_> {
    pub fn factor(&self) -> u64 {
        self.factor
    }

    pub fn contains(&self, n: u64) -> bool {
        n.is_multiple_of(self.factor) && self.base.contains(n / self.factor)
    }

    /// Elements `c·h` with `h ≤ conductor(H)`.
    pub fn elements(&self) -> Vec<u64> {
        self.members_up_to(self.base.conductor * self.factor)
    }

    pub fn members_up_to(&self, limit: u64) -> Vec<u64> {
        (0..=limit / self.factor)
            .filter(|&h| self.base.contains(h))
            .map(|h| h * self.factor)
            .collect()
    }

    /// Whether `c·H ⊆ other`. Checking the scaled generators suffices.
    pub fn is_contained_in(&self, other: &NumericalSemigroup) -> bool {
        self.base
            .generators()
            .iter()
            .all(|&g| other.contains(g * self.factor))
    }
}

fn check_pair(d1: u64, d2: u64) -> Result<()> {
    for d in [d1, d2] {
        if d < 2 {
            return Err(Error::DegenerateGenerator(d));
        }
    }
    if gcd(d1, d2) != 1 {
        return Err(Error::NotCoprime(d1, d2));
    }
    Ok(())
}

/// Largest gap of `⟨d1, d2⟩`: `(d1 − 1)(d2 − 1) − 1`.
pub fn frobenius_two_gen(d1: u64, d2: u64) -> Result<u64> {
    check_pair(d1, d2)?;
    Ok(checked_mul(d1 - 1, d2 - 1, "two-generator conductor")? - 1)
}

/// Genus of `⟨d1, d2⟩`: `(d1 − 1)(d2 − 1) / 2`.
pub fn genus_two_gen(d1: u64, d2: u64) -> Result<u64> {
    check_pair(d1, d2)?;
    Ok(checked_mul(d1 - 1, d2 - 1, "two-generator genus")? / 2)
}
