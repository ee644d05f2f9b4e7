//! Exact counting formulas and recurrences.
//!
//! Everything here is evaluated with arbitrary-precision integers. The
//! structural formulas for `|S|`, the rank and the number of minimal
//! idempotent generating sets are proven for `m, n >= 2`; outside that range
//! they are still evaluated literally and returned as an [`Evaluation`]
//! carrying a [`Validity`] tag, together with the true value where the
//! literal formula is known to be wrong.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Arbitrary-precision non-negative count.
pub type BigCount = BigUint;

/// How far a formula value can be trusted at a given size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    /// `m, n >= 2`: the formula is proven here.
    Proven,
    /// Degenerate size where the literal formula still gives the right value.
    Degenerate,
    /// Degenerate size where the literal formula is wrong; `value` holds the
    /// true count and `literal` the formula's output.
    Exception { literal: BigCount },
}

/// A count together with its validity tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub value: BigCount,
    pub validity: Validity,
}

impl Evaluation {
    fn classify(m: usize, n: usize, literal: BigCount, exception: Option<BigCount>) -> Self {
        match exception {
            Some(value) if value != literal => Self {
                value,
                validity: Validity::Exception { literal },
            },
            _ if m >= 2 && n >= 2 => Self {
                value: literal,
                validity: Validity::Proven,
            },
            _ => Self {
                value: literal,
                validity: Validity::Degenerate,
            },
        }
    }

    /// The literal formula value, whatever the validity.
    pub fn literal(&self) -> &BigCount {
        match &self.validity {
            Validity::Exception { literal } => literal,
            _ => &self.value,
        }
    }
}

pub fn pow(base: u64, exp: usize) -> BigCount {
    num_traits::pow(BigCount::from(base), exp)
}

pub fn big_pow(base: &BigCount, exp: usize) -> BigCount {
    num_traits::pow(base.clone(), exp)
}

pub fn factorial(n: usize) -> BigCount {
    (1..=n as u64).fold(BigCount::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    for i in 0..k {
        acc *= (n - i) as u64;
        acc /= (i + 1) as u64;
    }
    acc
}

/// `total! / (parts_1! ⋯ parts_q!)`; zero unless the parts sum to `total`.
pub fn multinomial(total: usize, parts: &[usize]) -> BigCount {
    if parts.iter().sum::<usize>() != total {
        return BigCount::zero();
    }
    let mut acc = BigCount::one();
    let mut remaining = total;
    for &p in parts {
        acc *= binomial(remaining, p);
        remaining -= p;
    }
    acc
}

/// `|E(D_nk)| = C(n,k) · k^(n-k)`: idempotents of rank `k` in `T_n`.
pub fn idempotents_dnk(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    binomial(n, k) * pow(k as u64, n - k)
}

/// `|E(T_n)|`; the empty map makes this 1 at `n = 0`.
pub fn idempotents_tn(n: usize) -> BigCount {
    if n == 0 {
        return BigCount::one();
    }
    (1..=n).map(|k| idempotents_dnk(n, k)).sum()
}

/// A weak composition of `target()` into `parts().len()` non-negative parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn target(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// All `q`-tuples of non-negative integers summing to `p`, in lexicographic
/// order. There are `C(p+q-1, q-1)` of them.
pub fn compositions(p: usize, q: usize) -> impl Iterator<Item = Composition> {
    let mut next = (q >= 1).then(|| {
        let mut first = vec![0; q];
        first[q - 1] = p;
        first
    });
    std::iter::from_fn(move || {
        let current = next.take()?;
        // lexicographic successor: bump the rightmost non-final position whose
        // suffix is non-empty, then push the remaining mass to the end
        let mut following = current.clone();
        let mut suffix = 0;
        for i in (0..q.saturating_sub(1)).rev() {
            suffix += following[i + 1];
            if suffix > 0 {
                following[i] += 1;
                following[i + 1..].iter_mut().for_each(|x| *x = 0);
                following[q - 1] = suffix - 1;
                next = Some(following);
                break;
            }
        }
        Some(Composition { parts: current })
    })
}

/// `|E(T(X,P))|` from the closed-form sum over base rank `k`, preimage
/// excesses `a ∈ C(m-k, k)` and block ranks `l ∈ {1..n}^k`.
///
/// With `n = 0` the set `X` is empty and the count is 1.
pub fn idempotents_txp_direct(m: usize, n: usize) -> BigCount {
    if m == 0 || n == 0 {
        return BigCount::one();
    }
    let mut total = BigCount::zero();
    for k in 1..=m {
        for a in compositions(m - k, k) {
            // multinomial(m; k, a_1..a_k) = C(m,k) · multinomial(m-k; a)
            let coefficient = binomial(m, k) * multinomial(m - k, a.parts());
            let mut inner = BigCount::zero();
            for l in crate::wreath::MixedRadix::new(vec![n; k]) {
                let mut term = BigCount::one();
                for (i, &li) in l.iter().enumerate() {
                    let li = li + 1;
                    term *= binomial(n, li) * pow(li as u64, (a.parts()[i] + 1) * n - li);
                }
                inner += term;
            }
            total += coefficient * inner;
        }
    }
    total
}

/// `|E(T(X,P))|` via `e_{0n} = 1`,
/// `e_{mn} = Σ_k C(m-1,k-1) · k · e_{m-k,n} · Σ_l C(n,l) · l^(kn-l)`.
///
/// The table is built bottom-up over `m`. With `n = 0` the set `X` is empty
/// and the count is 1.
pub fn idempotents_txp_recurrence(m: usize, n: usize) -> BigCount {
    if n == 0 {
        return BigCount::one();
    }
    let block_sum = |k: usize| -> BigCount {
        (1..=n)
            .map(|l| binomial(n, l) * pow(l as u64, k * n - l))
            .sum()
    };
    // index 0 is never read
    let sums: Vec<BigCount> = std::iter::once(BigCount::zero())
        .chain((1..=m).map(block_sum))
        .collect();
    let mut e = vec![BigCount::one()];
    for mm in 1..=m {
        let value = (1..=mm)
            .map(|k| binomial(mm - 1, k - 1) * BigCount::from(k) * &e[mm - k] * &sums[k])
            .sum();
        e.push(value);
    }
    e.swap_remove(m)
}

/// `|S| = (n^n - n! + 1)^m + n^(mn) · (m^m - m!)`.
///
/// With `n = 0` the semigroup is trivial; the literal formula disagrees
/// once `m >= 2`.
pub fn size_exp(m: usize, n: usize) -> Evaluation {
    let singular_plus_one = pow(n as u64, n) - factorial(n) + BigCount::one();
    let literal = big_pow(&singular_plus_one, m)
        + pow(n as u64, m * n) * (pow(m as u64, m) - factorial(m));
    let exception = (n == 0).then(BigCount::one);
    Evaluation::classify(m, n, literal, exception)
}

/// `ρ_n`, the rank of `E_n`: 2 for `n = 2`, `C(n,2)` otherwise.
pub fn rho(n: usize) -> BigCount {
    if n == 2 {
        BigCount::from(2u32)
    } else {
        binomial(n, 2)
    }
}

/// `σ_n`, the number of minimal idempotent generating sets of `E_n`:
/// 1 for `n = 2`, `w_n` otherwise.
pub fn sigma(n: usize) -> BigCount {
    if n == 2 {
        BigCount::one()
    } else {
        w(n)
    }
}

/// `rank(S) = idrank(S) = m·ρ_n + n!·C(m,2)`.
///
/// Exceptions to the literal formula: `(2,1)`, where `S ≅ E_2` has rank 2,
/// and `n = 0` with `m >= 2`, where `S` is trivial.
pub fn rank_exp(m: usize, n: usize) -> Evaluation {
    let literal = BigCount::from(m) * rho(n) + factorial(n) * binomial(m, 2);
    let exception = match (m, n) {
        (2, 1) => Some(BigCount::from(2u32)),
        (_, 0) => Some(BigCount::zero()),
        _ => None,
    };
    Evaluation::classify(m, n, literal, exception)
}

/// `F_nk = C(C(n,2), k) · 2^(C(n,2) - k)`, the number of complete digraphs
/// on `n` labelled vertices with `k` double edges.
pub fn complete_digraphs_nk(n: usize, k: usize) -> BigCount {
    let pairs = n * n.saturating_sub(1) / 2;
    if k > pairs {
        return BigCount::zero();
    }
    binomial(pairs, k) * pow(2, pairs - k)
}

/// Table of `w_{sk}` for `0 <= s <= n`, each row indexed by `k` up to `C(s,2)`.
///
/// Built bottom-up from
/// `w_nk = F_nk - Σ_{s=1}^{n-1} C(n,s) Σ_{l=0}^{k} w_sl · F_{n-s,k-l}`.
pub fn wnk_table(n: usize) -> Vec<Vec<BigCount>> {
    let mut table: Vec<Vec<BigCount>> = Vec::with_capacity(n + 1);
    table.push(vec![BigCount::one()]);
    for size in 1..=n {
        let pairs = size * (size - 1) / 2;
        let mut row = Vec::with_capacity(pairs + 1);
        for k in 0..=pairs {
            let mut not_strong = BigCount::zero();
            for s in 1..size {
                let mut inner = BigCount::zero();
                for (l, wsl) in table[s].iter().enumerate().take(k + 1) {
                    inner += wsl * complete_digraphs_nk(size - s, k - l);
                }
                not_strong += binomial(size, s) * inner;
            }
            row.push(complete_digraphs_nk(size, k) - not_strong);
        }
        table.push(row);
    }
    table
}

/// Strongly connected complete digraphs on `n` vertices with `k` double edges.
pub fn wnk(n: usize, k: usize) -> BigCount {
    wnk_table(n)
        .swap_remove(n)
        .get(k)
        .cloned()
        .unwrap_or_default()
}

/// Strongly connected tournaments on `n` vertices.
pub fn w(n: usize) -> BigCount {
    wnk(n, 0)
}

/// `Σ_k w_nk`: the number of subsets of `E(D_n)` generating `E_n`.
pub fn sum_wnk(n: usize) -> BigCount {
    wnk_table(n).swap_remove(n).into_iter().sum()
}

/// Number of minimal idempotent generating sets of `S`:
/// `σ_n^m · Σ_k w_mk · (2^(n!) - 2)^k`.
///
/// Exceptions to the literal formula: `(2,1)`, where `S ≅ E_2` has a unique
/// minimal generating set, and `n = 0`, where `S` is trivial and only the
/// empty set is minimal.
pub fn count_min_gensets(m: usize, n: usize) -> Evaluation {
    let splits = pow(2, factorial_usize(n)) - BigCount::from(2u32);
    let row = wnk_table(m).swap_remove(m);
    let sum: BigCount = row
        .iter()
        .enumerate()
        .map(|(k, wmk)| wmk * big_pow(&splits, k))
        .sum();
    let literal = big_pow(&sigma(n), m) * sum;
    let exception = match (m, n) {
        (2, 1) => Some(BigCount::one()),
        (_, 0) => Some(BigCount::one()),
        _ => None,
    };
    Evaluation::classify(m, n, literal, exception)
}

fn factorial_usize(n: usize) -> usize {
    (1..=n).product()
}

/// Number of idempotent generating sets of `E_n` (monoid sense):
/// `Σ_k w_nk · 2^(1 + Σ_{l=1}^{n-2} C(n,l) · l^(n-l))`.
///
/// The exponent counts the idempotents outside `E(D_n)` (including the
/// identity), each of which may be added freely. For semigroup generating
/// sets the identity is forced, halving the count.
pub fn total_idempotent_gensets_en(n: usize, semigroup: bool) -> BigCount {
    let free: BigCount = (1..=n.saturating_sub(2))
        .map(|l| binomial(n, l) * pow(l as u64, n - l))
        .sum();
    let exponent = 1 + usize::try_from(&free).expect("exponent fits in usize");
    let monoid = sum_wnk(n) * pow(2, exponent);
    if semigroup {
        monoid / 2u32
    } else {
        monoid
    }
}

/// Renders `value` in scientific notation with `digits` significant digits,
/// rounding half up, e.g. `7.398852038987696e48`.
pub fn scientific(value: &BigCount, digits: usize) -> String {
    let s = value.to_str_radix(10);
    if s.len() <= digits {
        return format!("{}e{}", with_point(&s), s.len() - 1);
    }
    let mut kept: BigCount = s[..digits].parse().expect("decimal digits");
    if s.as_bytes()[digits] >= b'5' {
        kept += 1u32;
    }
    let kept = kept.to_str_radix(10);
    // rounding may carry into an extra digit
    let exponent = s.len() - 1 + (kept.len() - digits);
    format!("{}e{}", with_point(&kept[..digits]), exponent)
}

fn with_point(digits: &str) -> String {
    let trimmed = digits.trim_end_matches('0');
    let trimmed = if trimmed.is_empty() { "0" } else { trimmed };
    if trimmed.len() == 1 {
        trimmed.to_string()
    } else {
        format!("{}.{}", &trimmed[..1], &trimmed[1..])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(s: &str) -> BigCount {
        s.parse().unwrap()
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(6, 2), BigCount::from(15u32));
        assert_eq!(binomial(2, 3), BigCount::zero());
        assert_eq!(binomial(0, 0), BigCount::one());
        assert_eq!(factorial(5), BigCount::from(120u32));
        assert_eq!(multinomial(4, &[1, 1, 2]), BigCount::from(12u32));
        assert_eq!(multinomial(4, &[1, 1]), BigCount::zero());
    }

    #[test]
    fn idempotents_in_tn() {
        let row: Vec<BigCount> = (0..=5).map(idempotents_tn).collect();
        assert_eq!(row, [1u32, 1, 3, 10, 41, 196].map(BigCount::from).to_vec());
        for n in 1..=6 {
            assert_eq!(idempotents_dnk(n, n), BigCount::one());
            assert_eq!(idempotents_dnk(n, n - 1), BigCount::from(n * (n - 1)));
        }
    }

    #[test]
    fn composition_examples() {
        let v: Vec<_> = compositions(0, 3).map(|c| c.parts().to_vec()).collect();
        assert_eq!(v, vec![vec![0, 0, 0]]);
        let mut v: Vec<_> = compositions(2, 2).map(|c| c.parts().to_vec()).collect();
        v.sort();
        assert_eq!(v, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(compositions(4, 3).count(), 15);
        assert_eq!(compositions(3, 1).count(), 1);
    }

    #[test]
    fn compositions_are_exhaustive_and_distinct() {
        for p in 0..=6 {
            for q in 1..=4 {
                let all: Vec<_> = compositions(p, q).collect();
                let brute: Vec<Vec<usize>> = crate::wreath::MixedRadix::new(vec![p + 1; q])
                    .filter(|v| v.iter().sum::<usize>() == p)
                    .collect();
                let mut got: Vec<Vec<usize>> = all.iter().map(|c| c.parts().to_vec()).collect();
                assert!(all.iter().all(|c| c.target() == p));
                got.sort();
                let before = got.len();
                got.dedup();
                assert_eq!(got.len(), before, "duplicates at p={p} q={q}");
                assert_eq!(got, brute, "p={p} q={q}");
                assert_eq!(BigCount::from(got.len()), binomial(p + q - 1, q - 1));
            }
        }
    }

    #[test]
    fn txp_idempotent_counts() {
        assert_eq!(idempotents_txp_direct(2, 2), BigCount::from(21u32));
        assert_eq!(idempotents_txp_direct(3, 3), BigCount::from(9028u32));
        assert_eq!(
            idempotents_txp_recurrence(5, 5),
            big("977698734939376")
        );
        for n in 0..=5 {
            assert_eq!(idempotents_txp_recurrence(0, n), BigCount::one());
            assert_eq!(idempotents_txp_direct(1, n), idempotents_tn(n));
            assert_eq!(idempotents_txp_recurrence(1, n), idempotents_tn(n));
        }
        for m in 0..=6 {
            assert_eq!(idempotents_txp_recurrence(m, 1), idempotents_tn(m));
        }
    }

    #[test]
    fn size_of_s() {
        assert_eq!(size_exp(2, 2).value, BigCount::from(41u32));
        assert_eq!(size_exp(3, 3).value, BigCount::from(423991u32));
        assert_eq!(size_exp(5, 5).value, big("895805227489703588401"));
        assert_eq!(size_exp(2, 2).validity, Validity::Proven);
        assert_eq!(size_exp(3, 1).validity, Validity::Degenerate);
        let zero = size_exp(3, 0);
        assert_eq!(zero.value, BigCount::one());
        assert_eq!(*zero.literal(), BigCount::from(22u32));
    }

    #[test]
    fn rank_values() {
        assert_eq!(rank_exp(4, 4).value, BigCount::from(168u32));
        assert_eq!(rank_exp(2, 5).value, BigCount::from(140u32));
        assert_eq!(rank_exp(10, 10).value, BigCount::from(163296450u32));
        let edge = rank_exp(2, 1);
        assert_eq!(edge.value, BigCount::from(2u32));
        assert_eq!(*edge.literal(), BigCount::one());
        assert_eq!(rank_exp(1, 1).value, BigCount::zero());
        assert_eq!(rho(1), BigCount::zero());
        assert_eq!(rho(2), BigCount::from(2u32));
        assert_eq!(rho(5), BigCount::from(10u32));
    }

    #[test]
    fn strongly_connected_counts() {
        assert_eq!(wnk(5, 3), BigCount::from(13660u32));
        assert_eq!(sum_wnk(8), big("22709334063807"));
        assert_eq!(wnk(2, 0), BigCount::zero());
        assert_eq!(wnk(2, 1), BigCount::one());
        assert_eq!(wnk(3, 7), BigCount::zero());
        for n in 0..=6 {
            assert_eq!(w(n), wnk(n, 0));
        }
        assert_eq!(w(0), BigCount::one());
        assert_eq!(complete_digraphs_nk(3, 4), BigCount::zero());
    }

    #[test]
    fn min_genset_counts() {
        assert_eq!(count_min_gensets(2, 3).value, BigCount::from(248u32));
        assert_eq!(count_min_gensets(3, 3).value, BigCount::from(2094128u32));
        assert_eq!(count_min_gensets(2, 2).value, BigCount::from(2u32));
        assert_eq!(count_min_gensets(3, 2).value, BigCount::from(46u32));
        let edge = count_min_gensets(2, 1);
        assert_eq!(edge.value, BigCount::one());
        assert_eq!(*edge.literal(), BigCount::zero());
        assert_eq!(count_min_gensets(1, 4).value, BigCount::from(24u32));
    }

    #[test]
    fn total_gensets_of_en() {
        // exponent sums computed by hand: n=2 empty, n=3 C(3,1)·1^2 = 3
        assert_eq!(total_idempotent_gensets_en(2, false), BigCount::from(2u32));
        assert_eq!(total_idempotent_gensets_en(3, false), BigCount::from(240u32));
        for n in 2..=6 {
            assert_eq!(
                total_idempotent_gensets_en(n, true) * 2u32,
                total_idempotent_gensets_en(n, false)
            );
        }
    }

    #[test]
    fn scientific_rendering() {
        assert_eq!(scientific(&big("73988520389876955"), 16), "7.398852038987696e16");
        assert_eq!(scientific(&big("99999"), 2), "1e5");
        assert_eq!(scientific(&big("12"), 16), "1.2e1");
    }
}
