//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weierstrass::covers::cyclic_semigroup;
use weierstrass::filtration;
use weierstrass::invariants::{gaps_divisible_by, genus_bound_maximal, zero_hasse_witt_consistent};
use weierstrass::semigroup::{frobenius_two_gen, genus_two_gen};
use weierstrass::{
    ArtinSchreierCover, BoseckTable, CyclicCoverSpec, GapSet, NumericalSemigroup, RamifiedPlace,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn spec(p: u64, n: u32, places: &[Vec<u64>]) -> Result<CyclicCoverSpec, String> {
    CyclicCoverSpec::new(
        p,
        n,
        places.iter().cloned().map(RamifiedPlace::new).collect(),
    )
    .map_err(err)
}

fn random_specs() -> Vec<(u64, u32, Vec<Vec<u64>>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    (0..200)
        .map(|_| {
            let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
            let n = rng.gen_range(1..=2u32);
            let places = (0..rng.gen_range(1..=3))
                .map(|_| common::random_lambdas(&mut rng, p, n))
                .collect();
            (p, n, places)
        })
        .collect()
}

fn lewittes_oracle() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25] {
        let (p, h) = weierstrass::arith::as_prime_power(q).ok_or("not a prime power")?;
        for m in (1..=25).filter(|m| m % p != 0) {
            let cover = ArtinSchreierCover::new(p, h, m, GapSet::empty()).map_err(err)?;
            let gaps = cover.lewittes_gaps().map_err(err)?.gaps;
            let oracle = common::brute_gaps(&[m, q]);
            ensure!(
                gaps.as_slice() == oracle.as_slice(),
                "q={q} m={m}: {gaps:?} vs {oracle:?}"
            );
            cases += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("{cases} cases in {elapsed:?}"))
}

fn boseck_example() -> Outcome {
    let t = BoseckTable::build(&spec(5, 1, &[vec![3]])?).map_err(err)?;
    ensure!(t.gamma() == [3, 2, 2, 1, 0], "Γ = {:?}", t.gamma());
    let gaps = t.gap_sequence(0).map_err(err)?;
    ensure!(gaps.as_slice() == [1, 2, 4, 7], "gaps {gaps:?}");
    ensure!(t.genus() == 4, "genus {}", t.genus());
    ensure!(t.max_gap_one_place().map_err(err)? == 7, "max gap");
    ensure!(t.is_symmetric_at(0).map_err(err)?, "not symmetric");
    Ok("Γ = (3,2,2,1), gaps {1,2,4,7}, g = 4, symmetric".into())
}

fn gk_semigroup() -> Outcome {
    let n = 2u64;
    let gens = [n.pow(3) - n.pow(2) + n, n.pow(3), n.pow(3) + 1];
    let h = NumericalSemigroup::from_generators(&gens).map_err(err)?;
    let two_g = (n.pow(3) + 1) * (n.pow(2) - 2) + 2;
    ensure!(
        h.genus() == 10 && 2 * h.genus() == two_g,
        "genus {}",
        h.genus()
    );
    ensure!(common::brute_gaps(&gens).len() == 10, "oracle genus");
    ensure!(h.frobenius() == 19, "max gap {}", h.frobenius());
    ensure!(h.is_symmetric().map_err(err)?, "not symmetric");
    let poles = h.members_up_to(h.conductor() + h.multiplicity());
    let report = filtration::jumps(&poles).map_err(err)?;
    ensure!(
        report.jump_count() == 3,
        "{} generator events",
        report.jump_count()
    );
    Ok(format!(
        "⟨6,8,9⟩: g = 10, 2g = {two_g}, max gap 19, 3 generators"
    ))
}

fn sylvester() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut pairs = 0;
    while pairs < 500 {
        let (a, b) = (rng.gen_range(2..=50u64), rng.gen_range(2..=50u64));
        if common::gcd(a, b) != 1 {
            continue;
        }
        let oracle = common::brute_gaps(&[a, b]);
        let frob = frobenius_two_gen(a, b).map_err(err)?;
        let genus = genus_two_gen(a, b).map_err(err)?;
        ensure!(
            frob == a * b - a - b && Some(&frob) == oracle.last(),
            "Frobenius ({a},{b})"
        );
        ensure!(
            genus == (a - 1) * (b - 1) / 2 && genus == oracle.len() as u64,
            "genus ({a},{b})"
        );
        let h = NumericalSemigroup::from_generators(&[a, b]).map_err(err)?;
        ensure!(
            h.gaps().as_slice() == oracle.as_slice(),
            "gap set ({a},{b})"
        );
        pairs += 1;
    }
    Ok(format!("{pairs} pairs"))
}

fn genus_identity(specs: &[(u64, u32, Vec<Vec<u64>>)]) -> Outcome {
    for (p, n, places) in specs {
        let t = BoseckTable::build(&spec(*p, *n, places)?).map_err(err)?;
        let rh = common::hilbert_genus(*p, *n, places);
        ensure!(
            t.genus() == rh,
            "p={p} n={n} {places:?}: {} vs {rh}",
            t.genus()
        );
        ensure!(
            t.boseck_genus_sum() == rh as i64,
            "p={p} n={n} {places:?}: Σ(Γ−1) = {}",
            t.boseck_genus_sum()
        );
    }
    Ok(format!("{} specs", specs.len()))
}

fn multi_place_symmetry(specs: &[(u64, u32, Vec<Vec<u64>>)]) -> Outcome {
    let t = BoseckTable::build(&spec(3, 1, &[vec![1], vec![2]])?).map_err(err)?;
    let g0 = t.gap_sequence(0).map_err(err)?;
    let g1 = t.gap_sequence(1).map_err(err)?;
    ensure!(
        g0.as_slice() == [1, 2, 5] && t.is_symmetric_at(0).map_err(err)?,
        "place 0: {g0:?}"
    );
    ensure!(
        g1.as_slice() == [1, 2, 4] && !t.is_symmetric_at(1).map_err(err)?,
        "place 1: {g1:?}"
    );
    let mut checked = 0;
    for (p, n, places) in specs {
        let t = BoseckTable::build(&spec(*p, *n, places)?).map_err(err)?;
        if t.genus() == 0 {
            continue;
        }
        for i in 0..places.len() {
            let max = t.gap_sequence(i).map_err(err)?.max().unwrap_or(0);
            let sym = t.is_symmetric_at(i).map_err(err)?;
            ensure!(
                sym == (max == 2 * t.genus() - 1),
                "p={p} n={n} {places:?} at {i}"
            );
            checked += 1;
        }
    }
    Ok(format!("example plus {checked} places"))
}

fn one_place_cross_module() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    for _ in 0..100 {
        let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
        let n = rng.gen_range(1..=2u32);
        let lambdas = common::realizable_lambdas(&mut rng, p, n, 15);
        let s = spec(p, n, std::slice::from_ref(&lambdas))?;
        let from_table = BoseckTable::build(&s)
            .map_err(err)?
            .semigroup_from_gaps(0)
            .map_err(err)?;
        let from_gens = cyclic_semigroup(&s, 0).map_err(err)?.semigroup;
        ensure!(from_table == from_gens, "p={p} n={n} λ={lambdas:?}");
    }
    Ok("100 specs".into())
}

fn lewittes_positive_base() -> Outcome {
    let cover =
        ArtinSchreierCover::new(2, 1, 3, GapSet::new(vec![1]).map_err(err)?).map_err(err)?;
    let out = cover.lewittes_gaps().map_err(err)?;
    ensure!(out.gaps.as_slice() == [1, 2, 5], "gaps {:?}", out.gaps);
    let rh = cover.riemann_hurwitz_genus().map_err(err)?;
    ensure!(rh == 3 && out.gaps.len() as u64 == rh, "genus {rh}");
    ensure!(out.gaps.contains(2), "2 is not a gap");
    ensure!(!out.warnings().is_empty(), "no warning");
    Ok("gaps {1,2,5}, g = 3, warning emitted".into())
}

fn hasse_witt_screening() -> Outcome {
    let h = NumericalSemigroup::from_generators(&[2, 5]).map_err(err)?;
    let count = gaps_divisible_by(&h, 5, 1).map_err(err)?;
    ensure!(count == 0, "{count} gaps divisible by 5");
    ensure!(
        zero_hasse_witt_consistent(&h, 5, 1).map_err(err)?,
        "inconsistent"
    );
    Ok("⟨2,5⟩ at p = 5".into())
}

fn maximal_bound() -> Outcome {
    for q in [2u64, 3, 4, 5, 7, 8, 9, 16] {
        let g = genus_two_gen(q, q + 1).map_err(err)?;
        let bound = genus_bound_maximal(q, q).map_err(err)?;
        ensure!(g == bound, "q={q}: {g} vs {bound}");
    }
    Ok("8 values of q".into())
}

fn main() -> ExitCode {
    let specs = random_specs();
    let start = Instant::now();
    let criteria: Vec<(&str, Outcome)> = vec![
        ("lewittes-oracle", lewittes_oracle()),
        ("boseck-example", boseck_example()),
        ("gk-semigroup", gk_semigroup()),
        ("sylvester", sylvester()),
        ("genus-identity", genus_identity(&specs)),
        ("multi-place-symmetry", multi_place_symmetry(&specs)),
        ("one-place-cross-module", one_place_cross_module()),
        ("lewittes-positive-base", lewittes_positive_base()),
        ("hasse-witt-screening", hasse_witt_screening()),
        ("maximal-bound", maximal_bound()),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in criteria.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:?}",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
