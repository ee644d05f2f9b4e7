use clap::ValueEnum;
use serde_json::json;
use wreathgen::closure::{generate, generates_s, ClosureOptions, Mode};
use wreathgen::counting::{
    count_min_gensets, idempotents_txp_direct, idempotents_txp_recurrence, size_exp, wnk,
};
use wreathgen::digraph::brute_force_wnk;
use wreathgen::genset::{build_min_genset, enumerate_min_gensets, random_spec, validate_min_genset};
use wreathgen::wreath::enumerate_idempotents_exhaustive;
use wreathgen::{rng_from_seed, wreath};

use crate::{Format, Global, Outcome, UsageError};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Idempotents,
    Closure,
    Digraphs,
    Gensets,
    All,
}

struct Check {
    suite: &'static str,
    name: String,
    expected: String,
    actual: String,
}

impl Check {
    fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

fn check(out: &mut Vec<Check>, suite: &'static str, name: String, expected: impl ToString, actual: impl ToString) {
    out.push(Check {
        suite,
        name,
        expected: expected.to_string(),
        actual: actual.to_string(),
    });
}

fn idempotents(out: &mut Vec<Check>) {
    for m in 0..=3 {
        for n in 0..=3 {
            let direct = idempotents_txp_direct(m, n);
            let recurrence = idempotents_txp_recurrence(m, n);
            check(out, "idempotents", format!("direct vs recurrence ({m},{n})"), &direct, &recurrence);
            if m >= 1 && n >= 1 {
                let exhaustive = enumerate_idempotents_exhaustive(m, n).len();
                check(out, "idempotents", format!("direct vs exhaustive ({m},{n})"), &direct, exhaustive);
            }
        }
    }
}

fn closure(out: &mut Vec<Check>, options: ClosureOptions) -> Result<(), UsageError> {
    for (m, n) in [(2, 2), (2, 3), (3, 2)] {
        let gens = wreath::enumerate_idempotents(m, n);
        let c = generate(&gens, (m, n), Mode::Monoid, options)?;
        check(out, "closure", format!("|S| vs closure ({m},{n})"), size_exp(m, n).value, c.cardinality());
    }
    Ok(())
}

fn digraphs(out: &mut Vec<Check>) -> Result<(), UsageError> {
    for n in 0..=5usize {
        for k in 0..=n * n.saturating_sub(1) / 2 {
            let brute = brute_force_wnk(n, k)?;
            check(out, "digraphs", format!("w_nk vs census ({n},{k})"), wnk(n, k), brute);
        }
    }
    Ok(())
}

fn gensets(out: &mut Vec<Check>, options: ClosureOptions) -> Result<(), UsageError> {
    for (m, n) in [(2, 2), (2, 3), (3, 2)] {
        let specs = enumerate_min_gensets(m, n, 10_000)?.count();
        check(out, "gensets", format!("count vs enumeration ({m},{n})"), count_min_gensets(m, n).value, specs);
    }
    for (m, n) in [(2, 2), (2, 3), (3, 2)] {
        let mut failures = 0usize;
        for seed in 0..20 {
            let spec = random_spec(m, n, &mut rng_from_seed(seed))?;
            let gens = build_min_genset(&spec)?;
            let round_trip = validate_min_genset(&gens).is_ok_and(|back| back == spec);
            if !round_trip || !generates_s(&gens, (m, n), options)? {
                failures += 1;
            }
        }
        check(out, "gensets", format!("seeded specs build, validate and generate ({m},{n})"), 0, failures);
    }
    Ok(())
}

pub fn run(suite: Suite, g: Global) -> Result<Outcome, UsageError> {
    let options = ClosureOptions {
        budget: g.budget,
        workers: g.workers as usize,
    };
    let mut out = Vec::new();
    let wants = |s: Suite| suite == s || suite == Suite::All;
    if wants(Suite::Idempotents) {
        idempotents(&mut out);
    }
    if wants(Suite::Closure) {
        closure(&mut out, options)?;
    }
    if wants(Suite::Digraphs) {
        digraphs(&mut out)?;
    }
    if wants(Suite::Gensets) {
        gensets(&mut out, options)?;
    }
    let failed = out.iter().filter(|c| !c.passed()).count();
    match g.format {
        Format::Text => {
            for c in &out {
                let verdict = if c.passed() { "PASS" } else { "FAIL" };
                println!("{verdict} [{}] {}: expected {}, actual {}", c.suite, c.name, c.expected, c.actual);
            }
            println!("{} checks, {failed} failed", out.len());
        }
        Format::Csv => {
            println!("suite,check,expected,actual,passed");
            for c in &out {
                println!("{},\"{}\",{},{},{}", c.suite, c.name, c.expected, c.actual, c.passed());
            }
        }
        Format::Json => {
            let checks: Vec<_> = out
                .iter()
                .map(|c| {
                    json!({
                        "suite": c.suite,
                        "check": c.name,
                        "expected": c.expected,
                        "actual": c.actual,
                        "passed": c.passed(),
                    })
                })
                .collect();
            println!("{}", json!({ "checks": checks, "failed": failed }));
        }
    }
    Ok(if failed == 0 { Outcome::Success } else { Outcome::Failure })
}
