//! Small integer helpers shared by the other modules.

use crate::error::{Error, Result};

/// Upper limit on sizes that drive allocations: the cover degree `p^n`
/// directly, and membership tables up to [`SizeGuard::table_limit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeGuard(pub u64);

impl SizeGuard {
    pub const DEFAULT_LIMIT: u64 = 1 << 20;

    /// Membership tables may be this many times longer than the degree limit.
    const TABLE_FACTOR: u64 = 16;

    pub fn table_limit(self) -> u64 {
        self.0.saturating_mul(Self::TABLE_FACTOR)
    }

    pub fn check(self, what: &'static str, value: u64) -> Result<()> {
        if value > self.0 {
            return Err(Error::SizeGuard {
                what,
                value,
                limit: self.0,
            });
        }
        Ok(())
    }

    pub fn check_table(self, what: &'static str, value: u64) -> Result<()> {
        let limit = self.table_limit();
        if value > limit {
            return Err(Error::SizeGuard { what, value, limit });
        }
        Ok(())
    }
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard(Self::DEFAULT_LIMIT)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn checked_pow(base: u64, exp: u32, what: &'static str) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow(what))
}

pub fn checked_mul(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

pub fn checked_add(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

/// If `q` is a power `p^e` with `e ≥ 1`, returns `e`.
pub fn prime_power_exponent(q: u64, p: u64) -> Option<u32> {
    if p < 2 || q < p {
        return None;
    }
    let mut q = q;
    let mut e = 0;
    while q.is_multiple_of(p) {
        q /= p;
        e += 1;
    }
    (q == 1).then_some(e)
}

/// Returns `(p, e)` when `q = p^e` for a prime `p` and `e ≥ 1`.
pub fn as_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    let p = if q.is_multiple_of(p) { p } else { q };
    prime_power_exponent(q, p).map(|e| (p, e))
}

/// Base-`p` digits of `k`, least significant first, padded to `len`.
pub fn digits(mut k: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(k % p);
        k /= p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(as_prime_power(8), Some((2, 3)));
        assert_eq!(as_prime_power(25), Some((5, 2)));
        assert_eq!(as_prime_power(7), Some((7, 1)));
        assert_eq!(as_prime_power(12), None);
        assert_eq!(as_prime_power(1), None);
        assert_eq!(prime_power_exponent(9, 3), Some(2));
        assert_eq!(prime_power_exponent(9, 2), None);
    }

    #[test]
    fn digits_round_trip() {
        for k in 0..49 {
            let d = digits(k, 7, 2);
            assert_eq!(d[0] + 7 * d[1], k);
        }
    }

    #[test]
    fn guard_reports_limit() {
        let g = SizeGuard(10);
        assert!(g.check("p^n", 10).is_ok());
        assert_eq!(
            g.check("p^n", 11),
            Err(Error::SizeGuard {
                what: "p^n",
                value: 11,
                limit: 10
            })
        );
        assert!(g.check_table("table", 160).is_ok());
        assert!(g.check_table("table", 161).is_err());
    }
}
