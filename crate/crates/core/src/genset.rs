//! Minimal idempotent generating sets.
//!
//! For `E_n` a set `U ⊆ E(D_n)` generates iff `Γ_U` is strongly connected and
//! complete; it is minimal iff in addition `|U| = ρ_n` (a strongly connected
//! tournament, or the single double edge when `n = 2`).
//!
//! For `S = ⟨E(T(X,P))⟩` every minimal idempotent generating set is
//!
//! ```text
//! U_1^{(1)} ∪ ⋯ ∪ U_m^{(m)} ∪ W
//! ```
//!
//! with each `U_i` minimal for `E_n` and `W` determined by a generating set
//! `V ⊆ E(D_m)` plus, for every double edge `{i, j}` of `Γ_V`, a split of
//! `S_n` into two non-empty parts `(A_ij, B_ij)`: `W` holds `e_{ij;f}` for
//! `f ∈ A_ij` and `e_{ji;f⁻¹}` for `f ∈ B_ij`, and all of `e_{ij;·}` for
//! single edges `i → j`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use num_traits::ToPrimitive;
use rand::Rng;
use thiserror::Error;

use crate::closure::{generates_s, ClosureOptions};
use crate::counting::{count_min_gensets, factorial, rho};
use crate::digraph::{
    enumerate_all_complete, gamma_of, pairs, reduce_to_minimal_scc, CompleteDigraph, PairState,
};
use crate::error::{Error, Result};
use crate::transformation::{all_permutations, Transformation};
use crate::wreath::{MixedRadix, PartitionMap};

/// A split `(A, B)` of `S_n` for one double edge of `Γ_V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Split {
    pub a: BTreeSet<Transformation>,
    pub b: BTreeSet<Transformation>,
}

impl Split {
    /// Completes `a` to a split of `S_n`.
    pub fn from_a(n: usize, a: BTreeSet<Transformation>) -> Self {
        let b = all_permutations(n)
            .into_iter()
            .filter(|f| !a.contains(f))
            .collect();
        Self { a, b }
    }
}

/// The data `(V, U_1..U_m, splits)` determining a minimal idempotent
/// generating set of `S`. Pairs are 0-based and kept sorted; split keys are
/// the pairs `(i, j)`, `i < j`, with both `e_ij` and `e_ji` in `V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinGenSetSpec {
    pub m: usize,
    pub n: usize,
    pub u_locals: Vec<Vec<(usize, usize)>>,
    pub v: Vec<(usize, usize)>,
    pub splits: BTreeMap<(usize, usize), Split>,
}

/// Why a candidate set is not a minimal idempotent generating set.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Rejection {
    #[error("empty generating set has no shape")]
    Empty,
    #[error("elements have different shapes")]
    MixedShapes,
    #[error("duplicate element {0}")]
    Duplicate(PartitionMap),
    #[error("element {0} is not idempotent")]
    NotIdempotent(PartitionMap),
    #[error("element {0} is neither a block idempotent e_ij^(k) nor of the form e_(ij;f)")]
    UnexpectedElement(PartitionMap),
    #[error("split not covering S_n: neither e_({i},{j};{f}) nor its partner is present")]
    SplitNotCovering { i: usize, j: usize, f: String },
    #[error("both e_({i},{j};{f}) and its partner e_({j},{i};f^-1) are present")]
    SplitOverlap { i: usize, j: usize, f: String },
    #[error("the base digraph is not strongly connected, so V does not generate T_m \\ S_m")]
    BaseNotGenerating,
    #[error("block {block}: local set does not generate E_n (digraph not strongly connected and complete)")]
    LocalNotGenerating { block: usize },
    #[error("block {block}: local set generates E_n but is not minimal ({size} elements, rank {rank})")]
    LocalNotMinimal {
        block: usize,
        size: usize,
        rank: usize,
    },
    #[error("wrong size: expected {expected}, got {actual}")]
    WrongSize { expected: usize, actual: usize },
}

/// Howie's criterion: `U ⊆ E(D_n)` generates `E_n` iff `Γ_U` is strongly
/// connected and complete.
pub fn howie_check(pairs: &[(usize, usize)], n: usize) -> Result<bool> {
    let g = gamma_of(pairs, n)?;
    Ok(g.is_complete() && g.is_strongly_connected())
}

fn rho_usize(n: usize) -> usize {
    rho(n).to_usize().expect("small rank")
}

fn factorial_usize(n: usize) -> usize {
    (1..=n).product()
}

fn binomial2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// `m·ρ_n + n!·C(m,2)`, the size of every minimal idempotent generating set
/// (for `m, n >= 2`).
pub fn min_genset_size(m: usize, n: usize) -> usize {
    m * rho_usize(n) + factorial_usize(n) * binomial2(m)
}

type Pairs = Vec<(usize, usize)>;

/// `(Ξ_V, Φ_V)`: the double-edge pairs `(i, j)`, `i < j`, and the ordered
/// pairs `(i, j)` with `e_ij ∈ V` but `e_ji ∉ V`.
pub fn xi_phi_of(
    v: &[(usize, usize)],
    m: usize,
) -> Result<(Pairs, Pairs)> {
    if !howie_check(v, m)? {
        return Err(Error::InvalidSpec(
            "V does not generate T_m \\ S_m: its digraph is not strongly connected and complete"
                .into(),
        ));
    }
    let g = gamma_of(v, m)?;
    let mut xi = Vec::new();
    let mut phi = Vec::new();
    for (i, j) in pairs(m) {
        match (g.has_edge(i, j), g.has_edge(j, i)) {
            (true, true) => xi.push((i, j)),
            (true, false) => phi.push((i, j)),
            (false, true) => phi.push((j, i)),
            (false, false) => unreachable!("complete digraph"),
        }
    }
    phi.sort_unstable();
    Ok((xi, phi))
}

impl MinGenSetSpec {
    /// Checks every structural invariant, naming the first that fails.
    pub fn check(&self) -> Result<()> {
        let (m, n) = (self.m, self.n);
        let fail = |msg: String| Err(Error::InvalidSpec(msg));
        if self.u_locals.len() != m {
            return fail(format!("expected {m} local sets, found {}", self.u_locals.len()));
        }
        for (block, u) in self.u_locals.iter().enumerate() {
            if !howie_check(u, n)? {
                return fail(format!(
                    "U_{} does not generate E_n: digraph not strongly connected and complete",
                    block + 1
                ));
            }
            if u.len() != rho_usize(n) {
                return fail(format!(
                    "U_{} is not minimal: {} elements, expected {}",
                    block + 1,
                    u.len(),
                    rho_usize(n)
                ));
            }
        }
        let (xi, _) = xi_phi_of(&self.v, m)?;
        let keys: Vec<_> = self.splits.keys().copied().collect();
        if keys != xi {
            return fail(format!(
                "split keys {:?} do not match the double edges of V {:?}",
                one_based_pairs(&keys),
                one_based_pairs(&xi)
            ));
        }
        let perms: BTreeSet<Transformation> = all_permutations(n).into_iter().collect();
        for (&(i, j), split) in &self.splits {
            let label = format!("({},{})", i + 1, j + 1);
            if split.a.is_empty() || split.b.is_empty() {
                return fail(format!("split at {label} has an empty side"));
            }
            if !split.a.is_disjoint(&split.b) {
                return fail(format!("split at {label} is not disjoint"));
            }
            let union: BTreeSet<_> = split.a.union(&split.b).cloned().collect();
            if union != perms {
                return fail(format!("split at {label} does not cover S_n"));
            }
        }
        Ok(())
    }

    /// Sorts every component into canonical order.
    pub fn canonicalize(&mut self) {
        for u in &mut self.u_locals {
            u.sort_unstable();
            u.dedup();
        }
        self.v.sort_unstable();
        self.v.dedup();
    }
}

fn one_based_pairs(p: &[(usize, usize)]) -> Vec<(usize, usize)> {
    p.iter().map(|&(i, j)| (i + 1, j + 1)).collect()
}

/// The set `W` of size `n!·C(m,2)` generating `S_3` as a semigroup.
pub fn build_w(spec: &MinGenSetSpec) -> Result<Vec<PartitionMap>> {
    spec.check()?;
    let (m, n) = (spec.m, spec.n);
    let (_, phi) = xi_phi_of(&spec.v, m)?;
    let mut w = BTreeSet::new();
    for &(i, j) in &phi {
        for f in all_permutations(n) {
            w.insert(PartitionMap::eijf(m, n, i, j, &f)?);
        }
    }
    for (&(i, j), split) in &spec.splits {
        for f in &split.a {
            w.insert(PartitionMap::eijf(m, n, i, j, f)?);
        }
        for f in &split.b {
            w.insert(PartitionMap::eijf(m, n, j, i, &f.inverse()?)?);
        }
    }
    debug_assert_eq!(w.len(), factorial_usize(n) * binomial2(m));
    Ok(w.into_iter().collect())
}

/// `U_1^{(1)} ∪ ⋯ ∪ U_m^{(m)} ∪ W`, sorted by encoding.
pub fn build_min_genset(spec: &MinGenSetSpec) -> Result<Vec<PartitionMap>> {
    let mut out: BTreeSet<PartitionMap> = build_w(spec)?.into_iter().collect();
    for (block, u) in spec.u_locals.iter().enumerate() {
        for &(i, j) in u {
            let e = Transformation::eij(spec.n, i, j)?;
            out.insert(PartitionMap::block_embed(spec.m, spec.n, block, &e)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// Recovers the spec of a minimal idempotent generating set, or explains
/// which structural condition fails.
pub fn validate_min_genset(elements: &[PartitionMap]) -> std::result::Result<MinGenSetSpec, Rejection> {
    let first = elements.first().ok_or(Rejection::Empty)?;
    let (m, n) = first.shape();
    if elements.iter().any(|e| e.shape() != (m, n)) {
        return Err(Rejection::MixedShapes);
    }
    let mut seen = HashSet::new();
    for e in elements {
        if !seen.insert(e) {
            return Err(Rejection::Duplicate(e.clone()));
        }
    }
    if let Some(e) = elements.iter().find(|e| !e.is_idempotent()) {
        return Err(Rejection::NotIdempotent(e.clone()));
    }

    let mut u_locals: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    let mut carried: HashMap<(usize, usize), BTreeSet<Transformation>> = HashMap::new();
    for e in elements {
        if let Some((block, g)) = e.as_block_embed() {
            if let Some((i, j)) = as_eij(&g) {
                u_locals[block].push((i, j));
                continue;
            }
        }
        if let Some((i, j, f)) = e.as_eijf() {
            carried.entry((i, j)).or_default().insert(f);
            continue;
        }
        return Err(Rejection::UnexpectedElement(e.clone()));
    }

    // exactly one of e_{ij;f}, e_{ji;f^-1} for every i < j and f
    let perms = all_permutations(n);
    let empty = BTreeSet::new();
    for (i, j) in pairs(m) {
        let forward = carried.get(&(i, j)).unwrap_or(&empty);
        let backward = carried.get(&(j, i)).unwrap_or(&empty);
        for f in &perms {
            let f_inv = f.inverse().expect("permutation");
            match (forward.contains(f), backward.contains(&f_inv)) {
                (false, false) => {
                    return Err(Rejection::SplitNotCovering {
                        i: i + 1,
                        j: j + 1,
                        f: f.to_string(),
                    })
                }
                (true, true) => {
                    return Err(Rejection::SplitOverlap {
                        i: i + 1,
                        j: j + 1,
                        f: f.to_string(),
                    })
                }
                _ => {}
            }
        }
    }

    let mut v: Vec<(usize, usize)> = carried.keys().copied().collect();
    v.sort_unstable();
    if !howie_check(&v, m).expect("valid pairs") {
        return Err(Rejection::BaseNotGenerating);
    }

    for (block, u) in u_locals.iter_mut().enumerate() {
        u.sort_unstable();
        if !howie_check(u, n).expect("valid pairs") {
            return Err(Rejection::LocalNotGenerating { block: block + 1 });
        }
        if u.len() != rho_usize(n) {
            return Err(Rejection::LocalNotMinimal {
                block: block + 1,
                size: u.len(),
                rank: rho_usize(n),
            });
        }
    }

    let expected = min_genset_size(m, n);
    if elements.len() != expected {
        return Err(Rejection::WrongSize {
            expected,
            actual: elements.len(),
        });
    }

    let (xi, _) = xi_phi_of(&v, m).expect("checked above");
    let splits = xi
        .into_iter()
        .map(|(i, j)| {
            let a = carried[&(i, j)].clone();
            let b = carried[&(j, i)]
                .iter()
                .map(|g| g.inverse().expect("permutation"))
                .collect();
            ((i, j), Split { a, b })
        })
        .collect();
    Ok(MinGenSetSpec {
        m,
        n,
        u_locals,
        v,
        splits,
    })
}

/// `(i, j)` when `g = e_ij`.
fn as_eij(g: &Transformation) -> Option<(usize, usize)> {
    let moved: Vec<usize> = (0..g.degree()).filter(|&x| g.apply(x) != x).collect();
    match moved.as_slice() {
        [j] if g.is_idempotent() => Some((g.apply(*j), *j)),
        _ => None,
    }
}

fn complete_to_pairs(g: &CompleteDigraph) -> Vec<(usize, usize)> {
    g.to_digraph().edges()
}

/// Minimal generating sets of `E_n` inside `E(D_n)`, as sorted pair lists.
pub fn minimal_howie_sets(n: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    if n == 2 {
        return Ok(vec![vec![(0, 1), (1, 0)]]);
    }
    let len = binomial2(n);
    if len > 24 {
        return Err(Error::TooLarge {
            what: format!("tournament enumeration on {n} vertices"),
            limit: 7,
        });
    }
    let mut out = Vec::new();
    for code in 0u32..(1u32 << len) {
        let states = (0..len)
            .map(|p| {
                if code >> (len - 1 - p) & 1 == 0 {
                    PairState::Forward
                } else {
                    PairState::Backward
                }
            })
            .collect();
        let g = CompleteDigraph::new(n, states)?;
        if g.is_strongly_connected() {
            out.push(complete_to_pairs(&g));
        }
    }
    Ok(out)
}

/// Generating sets `V ⊆ E(D_m)` of `T_m \ S_m`, as sorted pair lists.
pub fn generating_base_sets(m: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    if m > crate::digraph::CENSUS_LIMIT {
        return Err(Error::TooLarge {
            what: format!("complete digraph census on {m} vertices"),
            limit: crate::digraph::CENSUS_LIMIT,
        });
    }
    Ok(enumerate_all_complete(m)
        .filter(CompleteDigraph::is_strongly_connected)
        .map(|g| complete_to_pairs(&g))
        .collect())
}

/// Non-empty proper subsets of `S_n`, in bitmask order over the sorted permutations.
fn proper_subsets(perms: &[Transformation]) -> Result<Vec<BTreeSet<Transformation>>> {
    if perms.len() > 24 {
        return Err(Error::TooLarge {
            what: format!("split enumeration over {} permutations", perms.len()),
            limit: 24,
        });
    }
    let full = 1u64 << perms.len();
    Ok((1..full.saturating_sub(1))
        .map(|mask| {
            perms
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, f)| f.clone())
                .collect()
        })
        .collect())
}

/// Every minimal idempotent generating set of `S`, as specs. Refuses when
/// the count exceeds `budget`.
///
/// This walks the classification (`V`, then local sets, then splits), which
/// is only proven for `m, n >= 2`.
pub fn enumerate_min_gensets(
    m: usize,
    n: usize,
    budget: usize,
) -> Result<impl Iterator<Item = MinGenSetSpec>> {
    let expected = count_min_gensets(m, n);
    if expected.literal() > &budget.into() {
        return Err(Error::BudgetExceeded { budget });
    }
    let bases = generating_base_sets(m)?;
    let locals = minimal_howie_sets(n)?;
    let perms = all_permutations(n);
    let subsets = proper_subsets(&perms)?;
    Ok(bases.into_iter().flat_map(move |v| {
        let (xi, _) = xi_phi_of(&v, m).expect("generating base");
        let mut radix = vec![locals.len(); m];
        radix.extend(std::iter::repeat_n(subsets.len(), xi.len()));
        let locals = locals.clone();
        let subsets = subsets.clone();
        MixedRadix::new(radix).map(move |choice| {
            let u_locals = choice[..m].iter().map(|&c| locals[c].clone()).collect();
            let splits = xi
                .iter()
                .zip(&choice[m..])
                .map(|(&pair, &c)| (pair, Split::from_a(n, subsets[c].clone())))
                .collect();
            MinGenSetSpec {
                m,
                n,
                u_locals,
                v: v.clone(),
                splits,
            }
        })
    }))
}

/// Draws a spec uniformly at random component by component: `V` and the
/// local sets by rejection sampling, each split as a uniform non-empty
/// proper subset.
pub fn random_spec<R: Rng + ?Sized>(m: usize, n: usize, rng: &mut R) -> Result<MinGenSetSpec> {
    if n == 1 && m >= 2 {
        return Err(Error::InvalidSpec(
            "S_1 has no split into two non-empty parts".into(),
        ));
    }
    let v = loop {
        let states = (0..binomial2(m))
            .map(|_| PairState::ALL[rng.random_range(0..3)])
            .collect();
        let g = CompleteDigraph::new(m, states)?;
        if g.is_strongly_connected() {
            break complete_to_pairs(&g);
        }
    };
    let u_locals = (0..m)
        .map(|_| random_minimal_howie_set(n, rng))
        .collect::<Result<Vec<_>>>()?;
    let perms = all_permutations(n);
    let (xi, _) = xi_phi_of(&v, m)?;
    let splits = xi
        .into_iter()
        .map(|pair| {
            let a = loop {
                let a: BTreeSet<Transformation> =
                    perms.iter().filter(|_| rng.random_bool(0.5)).cloned().collect();
                if !a.is_empty() && a.len() < perms.len() {
                    break a;
                }
            };
            (pair, Split::from_a(n, a))
        })
        .collect();
    Ok(MinGenSetSpec {
        m,
        n,
        u_locals,
        v,
        splits,
    })
}

fn random_minimal_howie_set<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Vec<(usize, usize)>> {
    if n == 2 {
        return Ok(vec![(0, 1), (1, 0)]);
    }
    loop {
        let states = (0..binomial2(n))
            .map(|_| {
                if rng.random_bool(0.5) {
                    PairState::Forward
                } else {
                    PairState::Backward
                }
            })
            .collect();
        let g = CompleteDigraph::new(n, states)?;
        if g.is_strongly_connected() {
            return Ok(complete_to_pairs(&g));
        }
    }
}

/// Key for the pair `{e_{ij;f}, e_{ji;f⁻¹}}`: `(i, j, f)` with `i < j`.
fn partner_key(i: usize, j: usize, f: &Transformation) -> (usize, usize, Transformation) {
    if i < j {
        (i, j, f.clone())
    } else {
        (j, i, f.inverse().expect("permutation"))
    }
}

/// Finds a minimal idempotent generating set of `S` inside the idempotent
/// generating set `gens`.
///
/// The local parts are reduced with [`reduce_to_minimal_scc`]. For the
/// `e_{ij;f}` part one of each partner pair is kept; while the resulting base
/// digraph misses a path `r ⇝ s`, a shortest factorization of `e_{rs;1}`
/// over the `e_{ij;f}` in `gens` is searched breadth-first (within
/// `options.budget` products) and each factor whose base edge is missing is
/// swapped in for its partner.
pub fn extract_minimal_from(
    gens: &[PartitionMap],
    options: ClosureOptions,
) -> Result<Vec<PartitionMap>> {
    let (m, n) = gens.first().ok_or(Error::DoesNotGenerate)?.shape();
    if gens.iter().any(|g| !g.is_idempotent()) {
        return Err(Error::InvalidSpec("input contains a non-idempotent".into()));
    }
    if !generates_s(gens, (m, n), options)? {
        return Err(Error::DoesNotGenerate);
    }

    // local parts
    let mut locals: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    let mut g2: Vec<(usize, usize, Transformation)> = Vec::new();
    for g in gens {
        if let Some((block, h)) = g.as_block_embed() {
            if let Some(pair) = as_eij(&h) {
                locals[block].push(pair);
            }
        } else if let Some(triple) = g.as_eijf() {
            g2.push(triple);
        }
    }
    let mut out = Vec::new();
    for (block, u) in locals.iter_mut().enumerate() {
        u.sort_unstable();
        let g = gamma_of(u, n)?;
        let complete = CompleteDigraph::from_digraph(&g).ok_or(Error::DoesNotGenerate)?;
        let reduced = reduce_to_minimal_scc(&complete)?;
        for (i, j) in complete_to_pairs(&reduced) {
            let e = Transformation::eij(n, i, j)?;
            out.push(PartitionMap::block_embed(m, n, block, &e)?);
        }
    }

    // partner choice: true keeps e_{ij;f} (i < j), false keeps e_{ji;f^-1}
    let available: HashSet<(usize, usize, Transformation)> = g2.iter().cloned().collect();
    let mut choice: BTreeMap<(usize, usize, Transformation), bool> = BTreeMap::new();
    for (i, j) in pairs(m) {
        for f in all_permutations(n) {
            let forward = available.contains(&(i, j, f.clone()));
            let backward = available.contains(&(j, i, f.inverse()?));
            if !forward && !backward {
                return Err(Error::DoesNotGenerate);
            }
            choice.insert((i, j, f), forward);
        }
    }

    let base_pairs = |choice: &BTreeMap<(usize, usize, Transformation), bool>| {
        let mut v: Vec<(usize, usize)> = choice
            .iter()
            .map(|(&(i, j, _), &fwd)| if fwd { (i, j) } else { (j, i) })
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let missing_paths = |v: &[(usize, usize)]| -> Vec<(usize, usize)> {
        let g = gamma_of(v, m).expect("valid pairs");
        let mut out = Vec::new();
        for r in 0..m {
            let reach = g.reachable(r);
            for (s, &ok) in reach.iter().enumerate() {
                if s != r && !ok {
                    out.push((r, s));
                }
            }
        }
        out
    };

    let g2_elements: Vec<PartitionMap> = g2
        .iter()
        .map(|(i, j, f)| PartitionMap::eijf(m, n, *i, *j, f))
        .collect::<Result<_>>()?;
    loop {
        let v = base_pairs(&choice);
        let psi = missing_paths(&v);
        let Some(&(r, s)) = psi.first() else { break };
        let target = PartitionMap::eijf(m, n, r, s, &Transformation::identity(n))?;
        let word = shortest_factorization(&g2_elements, &target, options.budget)?;
        let in_v: HashSet<(usize, usize)> = v.iter().copied().collect();
        for index in word {
            let (a, b, f) = &g2[index];
            if !in_v.contains(&(*a, *b)) {
                let key = partner_key(*a, *b, f);
                choice.insert(key, *a < *b);
            }
        }
        let after = missing_paths(&base_pairs(&choice));
        if after.len() >= psi.len() {
            return Err(Error::FactorizationNotFound(options.budget));
        }
    }
    for ((i, j, f), fwd) in choice {
        out.push(if fwd {
            PartitionMap::eijf(m, n, i, j, &f)?
        } else {
            PartitionMap::eijf(m, n, j, i, &f.inverse()?)?
        });
    }
    out.sort();
    validate_min_genset(&out).map_err(|r| Error::InvalidSpec(r.to_string()))?;
    Ok(out)
}

/// Indices into `gens` of a shortest product equal to `target`.
fn shortest_factorization(
    gens: &[PartitionMap],
    target: &PartitionMap,
    budget: usize,
) -> Result<Vec<usize>> {
    let mut parent: HashMap<PartitionMap, Option<(PartitionMap, usize)>> = HashMap::new();
    let mut queue = VecDeque::new();
    for (k, g) in gens.iter().enumerate() {
        if !parent.contains_key(g) {
            parent.insert(g.clone(), Some((PartitionMap::identity(g.m(), g.n()), k)));
            queue.push_back(g.clone());
        }
    }
    let found = loop {
        let Some(x) = queue.pop_front() else {
            return Err(Error::FactorizationNotFound(budget));
        };
        if x == *target {
            break x;
        }
        for (k, g) in gens.iter().enumerate() {
            let y = x.then(g);
            if !parent.contains_key(&y) {
                if parent.len() >= budget {
                    return Err(Error::FactorizationNotFound(budget));
                }
                parent.insert(y.clone(), Some((x.clone(), k)));
                queue.push_back(y);
            }
        }
    };
    let mut word = Vec::new();
    let mut current = found;
    while let Some(Some((prev, k))) = parent.get(&current) {
        word.push(*k);
        if prev.is_identity() {
            break;
        }
        current = prev.clone();
    }
    word.reverse();
    Ok(word)
}

/// The expected number of minimal generating sets as a machine integer, when it fits.
pub fn expected_min_genset_count(m: usize, n: usize) -> Option<u64> {
    count_min_gensets(m, n).literal().to_u64()
}

/// `n!` as a machine integer.
pub fn permutation_count(n: usize) -> usize {
    factorial(n).to_usize().expect("small factorial")
}
