//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p wreathgen-core --test acceptance -- --nocapture --test-threads=1`
//! to see the report lines in order.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::seq::IteratorRandom;
use rand::Rng;
use wreathgen::closure::{dump_partition_maps, generate, generates_s, ClosureOptions, Mode};
use wreathgen::counting::{
    count_min_gensets, idempotents_txp_direct, idempotents_txp_recurrence, rank_exp, scientific,
    size_exp, sum_wnk, wnk,
};
use wreathgen::digraph::brute_force_wnk;
use wreathgen::genset::{
    build_min_genset, extract_minimal_from, howie_check, min_genset_size, random_spec,
    validate_min_genset,
};
use wreathgen::transformation::{all_transformations, rank_deficient_idempotents};
use wreathgen::wreath::{enumerate_idempotents, enumerate_idempotents_exhaustive};
use wreathgen::{rng_from_seed, BigCount, PartitionMap};

use common::*;

/// Prints the report line, then fails the test on a mismatch or overrun.
fn report(id: u32, name: &str, started: Instant, limit: Duration, mismatches: &[String]) {
    let elapsed = started.elapsed();
    let in_time = elapsed <= limit;
    let ok = mismatches.is_empty() && in_time;
    println!(
        "criterion {id:>2} {}: {name} ({:.2?}, limit {:?})",
        if ok { "PASS" } else { "FAIL" },
        elapsed,
        limit
    );
    for m in mismatches.iter().take(10) {
        println!("    mismatch: {m}");
    }
    assert!(mismatches.is_empty(), "criterion {id}: {} mismatches", mismatches.len());
    assert!(in_time, "criterion {id}: took {elapsed:?}, limit {limit:?}");
}

fn check_eq<T: PartialEq + std::fmt::Debug>(
    out: &mut Vec<String>,
    what: impl FnOnce() -> String,
    actual: T,
    expected: T,
) {
    if actual != expected {
        out.push(format!("{}: got {actual:?}, expected {expected:?}", what()));
    }
}

#[test]
fn criterion_01_wnk_values() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for (n, row) in WNK.iter().enumerate() {
        for (k, &expected) in row.iter().enumerate() {
            check_eq(&mut bad, || format!("w({n},{k})"), wnk(n, k), BigCount::from(expected));
        }
    }
    check_eq(&mut bad, || "w(5,3)".into(), wnk(5, 3), BigCount::from(13660u32));
    check_eq(&mut bad, || "w(4,2)".into(), wnk(4, 2), BigCount::from(186u32));
    report(1, "w_nk for n <= 5", t, Duration::from_secs(1), &bad);
}

#[test]
fn criterion_02_sum_wnk_values() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for (n, &expected) in SUM_WNK.iter().enumerate() {
        check_eq(&mut bad, || format!("sum w({n},k)"), sum_wnk(n), BigCount::from(expected));
    }
    report(2, "sum_k w_nk for n <= 8", t, Duration::from_secs(1), &bad);
}

#[test]
fn criterion_03_idempotent_counts() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for (m, row) in IDEMPOTENTS_TXP.iter().enumerate() {
        for (n, &expected) in row.iter().enumerate() {
            let direct = idempotents_txp_direct(m, n);
            let recurrence = idempotents_txp_recurrence(m, n);
            check_eq(&mut bad, || format!("direct ({m},{n})"), &direct, &big(expected));
            check_eq(&mut bad, || format!("recurrence ({m},{n})"), &recurrence, &big(expected));
            check_eq(&mut bad, || format!("direct vs recurrence ({m},{n})"), &direct, &recurrence);
        }
    }
    report(3, "|E(T(X,P))| direct and recurrence, 0 <= m,n <= 5", t, Duration::from_secs(10), &bad);
}

#[test]
fn criterion_04_size_of_s() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for (m, row) in SIZE_S.iter().enumerate() {
        for (n, &expected) in row.iter().enumerate() {
            check_eq(&mut bad, || format!("|S| ({m},{n})"), size_exp(m, n).value, big(expected));
        }
    }
    report(4, "|S| for 0 <= m,n <= 5", t, Duration::from_secs(1), &bad);
}

#[test]
fn criterion_05_rank_of_s() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for (mi, row) in RANK_S.iter().enumerate() {
        for (ni, &expected) in row.iter().enumerate() {
            let (m, n) = (mi + 1, ni + 1);
            check_eq(&mut bad, || format!("rank ({m},{n})"), rank_exp(m, n).value, BigCount::from(expected));
        }
    }
    report(5, "rank(S) for 1 <= m,n <= 10", t, Duration::from_secs(1), &bad);
}

#[test]
fn criterion_06_min_genset_counts() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for (mi, row) in MIN_GENSETS.iter().enumerate() {
        for (ni, expected) in row.iter().enumerate() {
            let (m, n) = (mi + 1, ni + 1);
            let value = count_min_gensets(m, n).value;
            match expected {
                Some(exact) => check_eq(&mut bad, || format!("count ({m},{n})"), value, big(exact)),
                None => check_eq(
                    &mut bad,
                    || format!("count ({m},{n}) rounded"),
                    scientific(&value, 16).as_str(),
                    MIN_GENSETS_4_4_ROUNDED,
                ),
            }
        }
    }
    report(6, "minimal generating set counts, 1 <= m,n <= 4", t, Duration::from_secs(1), &bad);
}

#[test]
fn criterion_07_digraph_census() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for n in 0..=5usize {
        for k in 0..=n * n.saturating_sub(1) / 2 {
            let brute = brute_force_wnk(n, k).expect("census size");
            check_eq(&mut bad, || format!("census w({n},{k})"), BigCount::from(brute), wnk(n, k));
        }
    }
    report(7, "brute-force digraph census equals w_nk, n <= 5", t, Duration::from_secs(30), &bad);
}

#[test]
fn criterion_08_exhaustive_idempotents() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for ((m, n), expected) in [((2, 2), 21usize), ((2, 3), 256), ((3, 2), 189), ((3, 3), 9028)] {
        let found = enumerate_idempotents_exhaustive(m, n);
        check_eq(&mut bad, || format!("exhaustive ({m},{n})"), found.len(), expected);
        check_eq(&mut bad, || format!("constructive ({m},{n})"), enumerate_idempotents(m, n), found);
    }
    report(8, "exhaustive f*f == f enumeration", t, Duration::from_secs(120), &bad);
}

const CLOSURE_SHAPES: [((usize, usize), usize); 3] = [((2, 2), 41), ((3, 2), 1371), ((2, 3), 1942)];

#[test]
fn criterion_09_closure_of_idempotents() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for ((m, n), expected) in CLOSURE_SHAPES {
        let gens = enumerate_idempotents(m, n);
        let c = generate(&gens, (m, n), Mode::Monoid, ClosureOptions::default()).unwrap();
        check_eq(&mut bad, || format!("closure ({m},{n})"), c.cardinality(), expected);
        check_eq(
            &mut bad,
            || format!("|S| formula ({m},{n})"),
            size_exp(m, n).value,
            BigCount::from(expected),
        );
    }
    report(9, "closure of E(T(X,P)) has |S| elements", t, Duration::from_secs(120), &bad);
}

#[test]
fn criterion_10_howie_criterion() {
    let t = Instant::now();
    let mut bad = Vec::new();
    let n = 3;
    let idempotents = rank_deficient_idempotents(n);
    let singular: Vec<_> = all_transformations(n).filter(|f| !f.is_permutation()).collect();
    let mut passing_by_size = [0u64; 7];
    for mask in 0u32..1 << idempotents.len() {
        let chosen: Vec<_> = idempotents
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, p)| p)
            .collect();
        let pairs: Vec<_> = chosen.iter().map(|(p, _)| *p).collect();
        let gens: Vec<_> = chosen.iter().map(|(_, e)| e.clone()).collect();
        let closure = generate(&gens, n, Mode::Semigroup, ClosureOptions::default()).unwrap();
        let covers = singular.iter().all(|f| closure.contains(f));
        let howie = howie_check(&pairs, n).unwrap();
        check_eq(&mut bad, || format!("U = {pairs:?}"), howie, covers);
        if howie {
            passing_by_size[pairs.len()] += 1;
        }
    }
    check_eq(&mut bad, || "passing sets of size 3".into(), passing_by_size[3], 2);
    for k in 1..=3 {
        check_eq(
            &mut bad,
            || format!("passing sets of size {}", 3 + k),
            BigCount::from(passing_by_size[3 + k]),
            wnk(3, k),
        );
    }
    report(10, "Howie criterion equals closure over all U in E(D_3)", t, Duration::from_secs(10), &bad);
}

#[test]
fn criterion_11_genset_round_trip() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for (m, n, verify) in [(2, 2, true), (2, 3, false), (3, 2, true)] {
        for seed in 0..100u64 {
            let spec = random_spec(m, n, &mut rng_from_seed(seed)).unwrap();
            let gens = build_min_genset(&spec).unwrap();
            check_eq(
                &mut bad,
                || format!("size ({m},{n}) seed {seed}"),
                BigCount::from(gens.len()),
                rank_exp(m, n).value,
            );
            match validate_min_genset(&gens) {
                Ok(back) => check_eq(&mut bad, || format!("round trip ({m},{n}) seed {seed}"), back, spec),
                Err(reason) => bad.push(format!("({m},{n}) seed {seed} rejected: {reason}")),
            }
            if verify && !generates_s(&gens, (m, n), ClosureOptions::default()).unwrap() {
                bad.push(format!("({m},{n}) seed {seed} does not generate S"));
            }
        }
    }
    report(11, "seeded specs build, validate and generate", t, Duration::from_secs(300), &bad);
}

#[test]
fn criterion_12_census_of_minimal_gensets() {
    let t = Instant::now();
    let mut bad = Vec::new();
    let (m, n) = (2, 2);
    let idempotents = enumerate_idempotents(m, n);
    check_eq(&mut bad, || "idempotent count".into(), idempotents.len(), 21);
    let size = min_genset_size(m, n);
    let mut generating = Vec::new();
    let mut subsets = 0usize;
    for subset in idempotents.iter().cloned().combinations(size) {
        subsets += 1;
        if generates_s(&subset, (m, n), ClosureOptions::default()).unwrap() {
            generating.push(subset);
        }
    }
    check_eq(&mut bad, || "subsets examined".into(), subsets, 54264);
    check_eq(&mut bad, || "generating subsets".into(), generating.len(), 2);
    check_eq(
        &mut bad,
        || "count formula".into(),
        count_min_gensets(m, n).value,
        BigCount::from(generating.len()),
    );
    for g in &generating {
        if let Err(reason) = validate_min_genset(g) {
            bad.push(format!("generating set rejected: {reason}"));
        }
    }
    report(12, "exactly 2 of the 6-subsets of E(T(X,P)) generate S at (2,2)", t, Duration::from_secs(600), &bad);
}

#[test]
fn criterion_13_containment() {
    let t = Instant::now();
    let mut bad = Vec::new();
    let (m, n) = (2, 2);
    let idempotents = enumerate_idempotents(m, n);
    let mut rng = rng_from_seed(2024);
    for trial in 0..50 {
        let spec = random_spec(m, n, &mut rng).unwrap();
        let mut input: BTreeSet<PartitionMap> = build_min_genset(&spec).unwrap().into_iter().collect();
        let extra = rng.random_range(1..=idempotents.len() - input.len());
        input.extend(idempotents.iter().filter(|e| !input.contains(e)).cloned().choose_multiple(&mut rng, extra));
        let input: Vec<_> = input.into_iter().collect();
        match extract_minimal_from(&input, ClosureOptions::default()) {
            Ok(found) => {
                if !found.iter().all(|e| input.contains(e)) {
                    bad.push(format!("trial {trial}: result not contained in input"));
                }
                if let Err(reason) = validate_min_genset(&found) {
                    bad.push(format!("trial {trial}: result rejected: {reason}"));
                }
                if !generates_s(&found, (m, n), ClosureOptions::default()).unwrap() {
                    bad.push(format!("trial {trial}: result does not generate S"));
                }
            }
            Err(e) => bad.push(format!("trial {trial}: {e}")),
        }
    }
    report(13, "minimal generating set extracted from idempotent supersets", t, Duration::from_secs(300), &bad);
}

#[test]
fn criterion_14_determinism() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for ((m, n), _) in CLOSURE_SHAPES {
        let gens = enumerate_idempotents(m, n);
        let dump = |workers| {
            let options = ClosureOptions { workers, ..Default::default() };
            let c = generate(&gens, (m, n), Mode::Monoid, options).unwrap();
            dump_partition_maps(&c.elements)
        };
        let (one, four) = (dump(1), dump(4));
        if one.as_bytes() != four.as_bytes() {
            bad.push(format!("({m},{n}): dumps differ between 1 and 4 workers"));
        }
    }
    report(14, "closure dumps identical for 1 and 4 workers", t, Duration::from_secs(120), &bad);
}
