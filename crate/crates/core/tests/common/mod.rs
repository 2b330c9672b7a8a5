//! Test-only oracles. None of these call into the code paths they check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Gaps of ⟨gens⟩ by closing {0} under adding generators, up to
/// `min·max`, which exceeds the Frobenius number when gcd = 1.
pub fn brute_gaps(gens: &[u64]) -> Vec<u64> {
    let lo = *gens.iter().min().unwrap();
    let hi = *gens.iter().max().unwrap();
    let bound = lo * hi + hi;
    let mut reached = BTreeSet::from([0u64]);
    let mut frontier = vec![0u64];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = x + g;
            if y <= bound && reached.insert(y) {
                frontier.push(y);
            }
        }
    }
    (1..=bound).filter(|n| !reached.contains(n)).collect()
}

/// The gap union with the second family starting at i = 1.
pub fn lewittes_printed_range(q: u64, m: u64, base: &[u64]) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for i in 1..q {
        for j in 1..=(m * i / q) {
            out.insert(m * i - j * q);
        }
        for &h in base {
            out.insert(m * i + q * h);
        }
    }
    out
}

/// Jump data of a genuine cyclic p^n cover with one ramified place: upper
/// jumps u_1 < … < u_n prime to p at the bottom, with u_{j+1} ≥ p·u_j and
/// p ∤ u_{j+1} unless u_{j+1} = p·u_j; returned as lower jumps
/// λ_{j+1} = λ_j + p^j (u_{j+1} − u_j).
pub fn realizable_lambdas<R: Rng>(rng: &mut R, p: u64, n: u32, max_first: u64) -> Vec<u64> {
    let mut u = loop {
        let x = rng.gen_range(1..=max_first);
        if x % p != 0 {
            break x;
        }
    };
    let mut lambdas = vec![u];
    for j in 1..n {
        let next = loop {
            let x = rng.gen_range(p * u..=p * u + 3 * p);
            if x == p * u || x % p != 0 {
                break x;
            }
        };
        let last = *lambdas.last().unwrap();
        lambdas.push(last + p.pow(j) * (next - u));
        u = next;
    }
    lambdas
}

/// Random λ ≤ 30 prime to p, without any realizability constraint.
pub fn random_lambdas<R: Rng>(rng: &mut R, p: u64, n: u32) -> Vec<u64> {
    (0..n)
        .map(|_| loop {
            let x = rng.gen_range(1..=30u64);
            if x % p != 0 {
                break x;
            }
        })
        .collect()
}

/// Riemann–Hurwitz genus of a cyclic p^n cover of the line, with the
/// different exponent built up layer by layer through transitivity:
/// d(L_t/L_0) = d(L_t/L_{t−1}) + p·d(L_{t−1}/L_0), d(L_t/L_{t−1}) = (λ_t + 1)(p − 1).
pub fn hilbert_genus(p: u64, n: u32, places: &[Vec<u64>]) -> u64 {
    let q = p.pow(n);
    let mut total = 0u64;
    for lambdas in places {
        let mut d = 0u64;
        for &l in lambdas {
            d = (l + 1) * (p - 1) + p * d;
        }
        total += d;
    }
    (total + 2 - 2 * q) / 2
}
