//! Breadth-first closure of a generating set under right multiplication.
//!
//! Every product `x_1 ⋯ x_k` is reached by extending shorter products on the
//! right, so each round multiplies the previous round's new elements by every
//! generator and keeps what has not been seen. Products within a round can be
//! computed on several workers; deduplication happens on one thread in
//! frontier order, so the element set (and its sorted dump) does not depend
//! on the worker count.

use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

use rayon::prelude::*;

use crate::counting::size_exp;
use crate::error::{Error, Result};
use crate::transformation::Transformation;
use crate::wreath::PartitionMap;

/// Default element budget.
pub const DEFAULT_BUDGET: usize = 10_000_000;

/// An element of a finite monoid with a canonical, hashable encoding.
pub trait Element: Clone + Eq + Hash + Ord + Send + Sync + Debug {
    /// Identifies the monoid the element lives in.
    type Ambient: Copy + Eq + Debug + Send + Sync;

    fn ambient(&self) -> Self::Ambient;
    fn identity_of(ambient: Self::Ambient) -> Self;
    /// Product with `rhs`; both operands share an ambient.
    fn product(&self, rhs: &Self) -> Self;
}

impl Element for Transformation {
    type Ambient = usize;

    fn ambient(&self) -> usize {
        self.degree()
    }

    fn identity_of(degree: usize) -> Self {
        Transformation::identity(degree)
    }

    #[inline]
    fn product(&self, rhs: &Self) -> Self {
        self.then(rhs)
    }
}

impl Element for PartitionMap {
    type Ambient = (usize, usize);

    fn ambient(&self) -> (usize, usize) {
        self.shape()
    }

    fn identity_of((m, n): (usize, usize)) -> Self {
        PartitionMap::identity(m, n)
    }

    #[inline]
    fn product(&self, rhs: &Self) -> Self {
        self.then(rhs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Adjoins the empty product.
    Monoid,
    Semigroup,
}

#[derive(Debug, Clone, Copy)]
pub struct ClosureOptions {
    pub budget: usize,
    pub workers: usize,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            workers: 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClosureResult<E> {
    /// Sorted by canonical encoding.
    pub elements: Vec<E>,
    /// Number of new elements found in each round (round 0 is the seed).
    pub round_sizes: Vec<usize>,
}

impl<E: Element> ClosureResult<E> {
    pub fn cardinality(&self) -> usize {
        self.elements.len()
    }

    pub fn rounds(&self) -> usize {
        self.round_sizes.len()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.elements.binary_search(e).is_ok()
    }
}

/// The subsemigroup or submonoid of the `ambient` monoid generated by `gens`.
pub fn generate<E: Element>(
    gens: &[E],
    ambient: E::Ambient,
    mode: Mode,
    options: ClosureOptions,
) -> Result<ClosureResult<E>> {
    if let Some(bad) = gens.iter().find(|g| g.ambient() != ambient) {
        return Err(mismatch(bad, ambient));
    }
    let mut unique_gens: Vec<E> = gens.to_vec();
    unique_gens.sort();
    unique_gens.dedup();

    let mut known: HashSet<E> = HashSet::new();
    let mut frontier: Vec<E> = Vec::new();
    let seed: Vec<E> = match mode {
        Mode::Monoid => std::iter::once(E::identity_of(ambient))
            .chain(unique_gens.iter().cloned())
            .collect(),
        Mode::Semigroup => unique_gens.clone(),
    };
    for e in seed {
        if known.insert(e.clone()) {
            frontier.push(e);
        }
    }
    let mut round_sizes = vec![frontier.len()];
    check_budget(known.len(), options.budget)?;

    let pool = (options.workers > 1)
        .then(|| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(options.workers)
                .build()
                .ok()
        })
        .flatten();

    while !frontier.is_empty() {
        let products: Vec<E> = match &pool {
            Some(pool) => pool.install(|| {
                frontier
                    .par_iter()
                    .flat_map_iter(|x| unique_gens.iter().map(move |g| x.product(g)))
                    .collect()
            }),
            None => frontier
                .iter()
                .flat_map(|x| unique_gens.iter().map(move |g| x.product(g)))
                .collect(),
        };
        let mut next = Vec::new();
        for p in products {
            if !known.contains(&p) {
                known.insert(p.clone());
                next.push(p);
                check_budget(known.len(), options.budget)?;
            }
        }
        if !next.is_empty() {
            round_sizes.push(next.len());
        }
        frontier = next;
    }

    let mut elements: Vec<E> = known.into_iter().collect();
    elements.sort();
    Ok(ClosureResult {
        elements,
        round_sizes,
    })
}

fn check_budget(size: usize, budget: usize) -> Result<()> {
    if size > budget {
        Err(Error::BudgetExceeded { budget })
    } else {
        Ok(())
    }
}

fn mismatch<E: Element>(bad: &E, ambient: E::Ambient) -> Error {
    Error::AmbientMismatch {
        found: format!("{:?}", bad.ambient()),
        expected: format!("{ambient:?}"),
    }
}

/// Whether `gens` generates `S = ⟨E(T(X,P))⟩`: the monoid closure has
/// `|S|` elements and all of them lie in `S_1 ⊔ S_2`.
pub fn generates_s(
    gens: &[PartitionMap],
    (m, n): (usize, usize),
    options: ClosureOptions,
) -> Result<bool> {
    let closure = generate(gens, (m, n), Mode::Monoid, options)?;
    let target = size_exp(m, n).value;
    Ok(num_bigint::BigUint::from(closure.cardinality()) == target
        && closure.elements.iter().all(|e| e.classify().in_s))
}

/// One JSON array of 1-based images per line, in sorted order.
pub fn dump_transformations(elements: &[Transformation]) -> String {
    elements
        .iter()
        .map(|e| serde_json::to_string(&e.to_one_based()).expect("serializable") + "\n")
        .collect()
}

/// One serialized element of `T(X,P)` per line, in sorted order.
pub fn dump_partition_maps(elements: &[PartitionMap]) -> String {
    elements
        .iter()
        .map(|e| serde_json::to_string(e).expect("serializable") + "\n")
        .collect()
}
