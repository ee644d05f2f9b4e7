//! Transformations of a finite set `{0, .., n-1}`.
//!
//! Points are stored 0-based; everything rendered for humans (the `Display`
//! impl and the JSON form) is 1-based.
//!
//! Maps act on the **right**: `f.compose(&g)` is the map `x ↦ (x·f)·g`, i.e.
//! apply `f` first and then `g`. Many libraries use the opposite convention,
//! so keep this in mind when porting formulas.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A total map on `{0, .., degree-1}`, stored as its image sequence.
///
/// Equality, ordering and hashing all go through the image sequence, which is
/// the canonical encoding used by the closure engine.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Vec<u32>,
}

impl Transformation {
    /// Builds a transformation from 0-based images.
    pub fn new<I>(images: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let images: Vec<usize> = images.into_iter().collect();
        let degree = images.len();
        if let Some(&image) = images.iter().find(|&&x| x >= degree) {
            return Err(Error::ImageOutOfRange { image, degree });
        }
        Ok(Self {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds a transformation from 1-based images, as written in the literature.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        let mut zero_based = Vec::with_capacity(degree);
        for &x in images {
            if x == 0 || x > degree {
                return Err(Error::ImageOutOfRange { image: x, degree });
            }
            zero_based.push(x - 1);
        }
        Self::new(zero_based)
    }

    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!(images.iter().all(|&x| (x as usize) < images.len()));
        Self { images }
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// The constant map with value `c`.
    pub fn constant(degree: usize, c: usize) -> Result<Self> {
        if c >= degree {
            return Err(Error::IndexOutOfRange {
                index: c,
                size: degree,
            });
        }
        Ok(Self {
            images: vec![c as u32; degree],
        })
    }

    /// The idempotent `e_ij`: sends `j` to `i` and fixes every other point.
    pub fn eij(degree: usize, i: usize, j: usize) -> Result<Self> {
        for index in [i, j] {
            if index >= degree {
                return Err(Error::IndexOutOfRange {
                    index,
                    size: degree,
                });
            }
        }
        if i == j {
            return Err(Error::EqualIndices(i));
        }
        let mut t = Self::identity(degree);
        t.images[j] = i as u32;
        Ok(t)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the point `x`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// The image sequence (0-based).
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// The image sequence shifted to 1-based values.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// `x ↦ (x·self)·other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Composition without the degree check; callers guarantee equal degrees.
    #[inline]
    pub(crate) fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    /// Sorted image set.
    pub fn image_set(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        for &x in &self.images {
            seen[x as usize] = true;
        }
        seen.iter()
            .enumerate()
            .filter_map(|(x, &s)| s.then_some(x))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.image_set().len()
    }

    /// Whether `x` and `y` lie in the same kernel class.
    pub fn kernel_relates(&self, x: usize, y: usize) -> bool {
        self.images[x] == self.images[y]
    }

    /// Acts as the identity on its own image.
    pub fn is_idempotent(&self) -> bool {
        self.images
            .iter()
            .all(|&y| self.images[y as usize] == y)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.degree()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_permutation() {
            return Err(Error::NotPermutation);
        }
        let mut images = vec![0u32; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u32;
        }
        Ok(Self { images })
    }

    /// Smallest `q >= 1` with `self^q` idempotent; for a permutation this is its order.
    pub fn order(&self) -> usize {
        let mut power = self.clone();
        let mut q = 1;
        while !power.is_idempotent() {
            power = power.then(self);
            q += 1;
        }
        q
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().map(|x| x + 1).join(","))
    }
}

/// All `n^n` transformations of degree `n`, in lexicographic order of image sequences.
pub fn all_transformations(n: usize) -> impl Iterator<Item = Transformation> {
    let total = (n as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    let mut current = vec![0u32; n];
    let mut first = true;
    std::iter::from_fn(move || {
        if n == 0 {
            return first.then(|| {
                first = false;
                Transformation::identity(0)
            });
        }
        if first {
            first = false;
            return Some(Transformation::from_raw(current.clone()));
        }
        // odometer, last position fastest
        for pos in (0..n).rev() {
            if (current[pos] as usize) + 1 < n {
                current[pos] += 1;
                return Some(Transformation::from_raw(current.clone()));
            }
            current[pos] = 0;
        }
        None
    })
    .take(total as usize)
}

/// All `n!` permutations of degree `n`, in lexicographic order of image sequences.
pub fn all_permutations(n: usize) -> Vec<Transformation> {
    (0..n)
        .permutations(n)
        .map(|p| Transformation::from_raw(p.into_iter().map(|x| x as u32).collect()))
        .collect()
}

/// The idempotents of `T_n`, optionally only those of rank `k`.
///
/// Built constructively: choose the image set, then map every other point
/// into it. The output is sorted by image sequence.
pub fn enumerate_idempotents(n: usize, rank: Option<usize>) -> Vec<Transformation> {
    let mut out = Vec::new();
    if n == 0 {
        if rank.is_none_or(|k| k == 0) {
            out.push(Transformation::identity(0));
        }
        return out;
    }
    let ranks: Vec<usize> = match rank {
        Some(k) if (1..=n).contains(&k) => vec![k],
        Some(_) => return out,
        None => (1..=n).collect(),
    };
    for k in ranks {
        for image in (0..n).combinations(k) {
            let rest: Vec<usize> = (0..n).filter(|x| !image.contains(x)).collect();
            let assignments = k.pow(rest.len() as u32);
            for mut code in 0..assignments {
                let mut images: Vec<u32> = (0..n as u32).collect();
                for &x in &rest {
                    images[x] = image[code % k] as u32;
                    code /= k;
                }
                out.push(Transformation::from_raw(images));
            }
        }
    }
    out.sort();
    out
}

/// The `n(n-1)` idempotents `e_ij` of rank `n-1`, keyed by `(i, j)`.
pub fn rank_deficient_idempotents(n: usize) -> Vec<((usize, usize), Transformation)> {
    (0..n)
        .cartesian_product(0..n)
        .filter(|(i, j)| i != j)
        .map(|(i, j)| ((i, j), Transformation::eij(n, i, j).expect("valid indices")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(images: &[usize]) -> Transformation {
        Transformation::from_one_based(images).unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn identity_is_left_neutral() {
        for f in all_transformations(3) {
            assert_eq!(Transformation::identity(3).compose(&f).unwrap(), f);
        }
    }

    #[test]
    fn e12_then_e21_is_constant_two() {
        let e12 = Transformation::eij(2, 0, 1).unwrap();
        let e21 = Transformation::eij(2, 1, 0).unwrap();
        assert_eq!(e12.to_one_based(), vec![1, 1]);
        // x=1: 1 -> 1 -> 2 ; x=2: 2 -> 1 -> 2
        assert_eq!(e12.compose(&e21).unwrap(), t(&[2, 2]));
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = Transformation::identity(2)
            .compose(&Transformation::identity(3))
            .unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn compose_is_associative_on_t3() {
        let all: Vec<_> = all_transformations(3).collect();
        assert_eq!(all.len(), 27);
        for f in &all {
            for g in &all {
                let fg = f.then(g);
                for h in &all {
                    assert_eq!(fg.then(h), f.then(&g.then(h)));
                }
            }
        }
    }

    #[test]
    fn idempotent_test_matches_squaring() {
        for n in 0..=4 {
            for f in all_transformations(n) {
                assert_eq!(f.is_idempotent(), f.then(&f) == f, "{f}");
            }
        }
    }

    #[test]
    fn kernel_grows_and_rank_shrinks_under_composition() {
        let all: Vec<_> = all_transformations(3).collect();
        for f in &all {
            for g in &all {
                let fg = f.then(g);
                assert!(fg.rank() <= f.rank().min(g.rank()));
                for x in 0..3 {
                    for y in 0..3 {
                        if f.kernel_relates(x, y) {
                            assert!(fg.kernel_relates(x, y));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn eij_examples() {
        assert_eq!(Transformation::eij(3, 0, 1).unwrap().to_one_based(), vec![1, 1, 3]);
        assert_eq!(Transformation::eij(3, 1, 1), Err(Error::EqualIndices(1)));
        assert!(matches!(
            Transformation::eij(3, 0, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        let all = rank_deficient_idempotents(4);
        assert_eq!(all.len(), 12);
        for (_, e) in &all {
            assert!(e.is_idempotent());
            assert_eq!(e.rank(), 3);
        }
        let distinct: std::collections::HashSet<_> = all.iter().map(|(_, e)| e.clone()).collect();
        assert_eq!(distinct.len(), enumerate_idempotents(4, Some(3)).len());
    }

    #[test]
    fn three_cycle_is_not_idempotent() {
        assert!(!t(&[2, 3, 1]).is_idempotent());
        assert!(Transformation::identity(3).is_idempotent());
    }

    #[test]
    fn idempotent_counts_match_binomial_formula() {
        for n in 1..=5 {
            let mut total = 0;
            for k in 1..=n {
                let expected = binomial(n, k) * k.pow((n - k) as u32);
                let got = enumerate_idempotents(n, Some(k));
                assert_eq!(got.len(), expected, "n={n} k={k}");
                // brute force over T_n
                let brute = all_transformations(n)
                    .filter(|f| f.rank() == k && f.then(f) == *f)
                    .count();
                assert_eq!(brute, expected);
                total += expected;
            }
            assert_eq!(enumerate_idempotents(n, None).len(), total);
        }
        assert_eq!(enumerate_idempotents(3, None).len(), 10);
        assert_eq!(
            enumerate_idempotents(2, Some(1)),
            vec![t(&[1, 1]), t(&[2, 2])]
        );
        assert_eq!(enumerate_idempotents(1, None), vec![Transformation::identity(1)]);
    }

    #[test]
    fn inverses() {
        assert_eq!(
            Transformation::identity(3).inverse().unwrap(),
            Transformation::identity(3)
        );
        // (1 2 3) has images [2,3,1]; its inverse (1 3 2) has images [3,1,2]
        assert_eq!(t(&[2, 3, 1]).inverse().unwrap(), t(&[3, 1, 2]));
        for f in all_permutations(3) {
            assert_eq!(f.then(&f.inverse().unwrap()), Transformation::identity(3));
        }
        assert_eq!(all_permutations(3).len(), 6);
        assert_eq!(t(&[1, 1, 2]).inverse(), Err(Error::NotPermutation));
    }

    #[test]
    fn permutation_order() {
        assert_eq!(t(&[2, 3, 1]).order(), 3);
        assert_eq!(t(&[2, 1, 3]).order(), 2);
        assert_eq!(Transformation::identity(4).order(), 1);
    }

    #[test]
    fn one_based_round_trip_and_validation() {
        assert_eq!(t(&[2, 2, 3]).to_one_based(), vec![2, 2, 3]);
        assert_eq!(t(&[2, 2, 3]).to_string(), "[2,2,3]");
        assert!(Transformation::from_one_based(&[0, 1]).is_err());
        assert!(Transformation::from_one_based(&[3, 1]).is_err());
        assert!(Transformation::new([0, 2]).is_err());
    }

    #[test]
    fn all_transformations_counts() {
        assert_eq!(all_transformations(0).count(), 1);
        assert_eq!(all_transformations(1).count(), 1);
        assert_eq!(all_transformations(4).count(), 256);
        let v: Vec<_> = all_transformations(2).collect();
        assert_eq!(v, vec![t(&[1, 1]), t(&[1, 2]), t(&[2, 1]), t(&[2, 2])]);
    }
}
