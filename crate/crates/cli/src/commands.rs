use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};
use wreathgen::closure::{dump_partition_maps, generate, ClosureOptions, Mode};
use wreathgen::counting::size_exp;
use wreathgen::genset::{build_min_genset, random_spec, validate_min_genset};
use wreathgen::io::{parse_genset_document, GensetDocument};
use wreathgen::{rng_from_seed, wreath, Error, MinGenSetSpec, PartitionMap};

use crate::{Format, Global, Outcome, UsageError};

fn options(g: Global) -> ClosureOptions {
    ClosureOptions {
        budget: g.budget,
        workers: g.workers as usize,
    }
}

fn emit(doc: &Value, g: Global) -> Result<(), UsageError> {
    match g.format {
        Format::Text | Format::Json => println!("{doc}"),
        Format::Csv => return Err(UsageError("csv output is only available for tables and verify".into())),
    }
    Ok(())
}

/// `|⟨gens⟩|` against `|S|`, or `None` when the budget runs out.
fn closure_report(gens: &[PartitionMap], (m, n): (usize, usize), g: Global) -> Result<Option<Value>, UsageError> {
    let c = match generate(gens, (m, n), Mode::Monoid, options(g)) {
        Ok(c) => c,
        Err(Error::BudgetExceeded { budget }) => {
            eprintln!("closure refused: more than {budget} elements");
            return Ok(None);
        }
        Err(e) => return Err(e.into()),
    };
    let expected = size_exp(m, n).value;
    let generates = expected == c.cardinality().into() && c.elements.iter().all(|e| e.classify().in_s);
    Ok(Some(json!({
        "cardinality": c.cardinality().to_string(),
        "expected": expected.to_string(),
        "generates_s": generates,
    })))
}

pub fn construct(m: usize, n: usize, seed: u64, verify_closure: bool, g: Global) -> Result<Outcome, UsageError> {
    if m < 2 || n < 2 {
        return Err(UsageError(format!("construction needs m, n >= 2, got ({m},{n})")));
    }
    let spec = random_spec(m, n, &mut rng_from_seed(seed))?;
    let genset = build_min_genset(&spec)?;
    let mut doc = json!({
        "seed": seed.to_string(),
        "m": m,
        "n": n,
        "size": genset.len().to_string(),
        "spec": spec,
        "genset": genset,
    });
    let mut outcome = Outcome::Success;
    if verify_closure {
        match closure_report(&genset, (m, n), g)? {
            Some(report) => {
                if report["generates_s"] != json!(true) {
                    outcome = Outcome::Failure;
                }
                doc["closure"] = report;
            }
            None => outcome = Outcome::Failure,
        }
    }
    emit(&doc, g)?;
    Ok(outcome)
}

/// The output of `construct`, accepted by `check` and `closure`.
#[derive(Deserialize)]
struct Constructed {
    genset: Vec<PartitionMap>,
}

enum Loaded {
    Spec(MinGenSetSpec),
    Raw(Vec<PartitionMap>),
}

fn load(path: &Path) -> Result<Loaded, UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    let located = |e: serde_json::Error| UsageError(format!("{}: {e}", path.display()));
    let value: Value = serde_json::from_str(&text).map_err(located)?;
    if value.get("genset").is_some() {
        let c: Constructed = serde_json::from_str(&text).map_err(located)?;
        return Ok(Loaded::Raw(c.genset));
    }
    Ok(match parse_genset_document(&text).map_err(located)? {
        GensetDocument::Spec(s) => Loaded::Spec(s),
        GensetDocument::Raw(r) => Loaded::Raw(r),
    })
}

pub fn check(path: &Path, verify_closure: bool, g: Global) -> Result<Outcome, UsageError> {
    let verdict = match load(path)? {
        Loaded::Spec(spec) => match build_min_genset(&spec) {
            Ok(gens) => validate_min_genset(&gens).map(|s| (s, gens)).map_err(|r| r.to_string()),
            Err(e) => Err(e.to_string()),
        },
        Loaded::Raw(gens) => validate_min_genset(&gens).map(|s| (s, gens)).map_err(|r| r.to_string()),
    };
    let (doc, outcome) = match verdict {
        Ok((spec, gens)) => {
            let mut doc = json!({ "verdict": "accept", "size": gens.len().to_string(), "spec": spec });
            let mut outcome = Outcome::Success;
            if verify_closure {
                match closure_report(&gens, (spec.m, spec.n), g)? {
                    Some(report) => {
                        if report["generates_s"] != json!(true) {
                            doc["verdict"] = json!("reject");
                            doc["reason"] = json!("closure is not S");
                            outcome = Outcome::Failure;
                        }
                        doc["closure"] = report;
                    }
                    None => {
                        doc["verdict"] = json!("reject");
                        doc["reason"] = json!("closure exceeded the budget");
                        outcome = Outcome::Failure;
                    }
                }
            }
            (doc, outcome)
        }
        Err(reason) => (json!({ "verdict": "reject", "reason": reason }), Outcome::Failure),
    };
    match g.format {
        Format::Text => {
            print!("{}", doc["verdict"].as_str().unwrap_or_default());
            match doc.get("reason").and_then(Value::as_str) {
                Some(reason) => println!(": {reason}"),
                None => println!(),
            }
            if let Some(c) = doc.get("closure") {
                println!("closure: {} elements (|S| = {})", c["cardinality"].as_str().unwrap_or_default(), c["expected"].as_str().unwrap_or_default());
            }
            if let Some(spec) = doc.get("spec") {
                println!("spec: {spec}");
            }
        }
        _ => emit(&doc, g)?,
    }
    Ok(outcome)
}

pub fn closure(
    m: usize,
    n: usize,
    gens: Option<&Path>,
    semigroup: bool,
    dump: Option<&Path>,
    g: Global,
) -> Result<Outcome, UsageError> {
    let gens = match gens {
        None => wreath::enumerate_idempotents(m, n),
        Some(path) => match load(path)? {
            Loaded::Raw(r) => r,
            Loaded::Spec(s) => build_min_genset(&s)?,
        },
    };
    if let Some(bad) = gens.iter().find(|e| e.shape() != (m, n)) {
        return Err(UsageError(format!("element {bad} does not have shape ({m},{n})")));
    }
    let mode = if semigroup { Mode::Semigroup } else { Mode::Monoid };
    let c = match generate(&gens, (m, n), mode, options(g)) {
        Ok(c) => c,
        Err(Error::BudgetExceeded { budget }) => {
            eprintln!("closure refused: more than {budget} elements");
            return Ok(Outcome::Failure);
        }
        Err(e) => return Err(e.into()),
    };
    if let Some(path) = dump {
        std::fs::write(path, dump_partition_maps(&c.elements))
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?;
    }
    let expected = size_exp(m, n).value;
    let doc = json!({
        "m": m,
        "n": n,
        "mode": if semigroup { "semigroup" } else { "monoid" },
        "generators": gens.len().to_string(),
        "cardinality": c.cardinality().to_string(),
        "round_sizes": c.round_sizes.iter().map(usize::to_string).collect::<Vec<_>>(),
        "size_s": expected.to_string(),
    });
    match g.format {
        Format::Text => {
            println!("generators: {}", gens.len());
            println!("cardinality: {}", c.cardinality());
            println!("rounds: {} {:?}", c.rounds(), c.round_sizes);
            println!("|S|: {expected}");
        }
        _ => emit(&doc, g)?,
    }
    Ok(Outcome::Success)
}
