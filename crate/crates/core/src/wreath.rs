//! Elements of `T(X,P)`, the transformations of `X = {blocks} × {points}`
//! that map every block into some block.
//!
//! An element is written in wreath coordinates `[f_1, .., f_m; base]`: the
//! base map in `T_m` says where each block goes and `f_i ∈ T_n` says how the
//! points of block `i` move. The product follows the right-action rule
//!
//! ```text
//! [f_1, .., f_m; f] [g_1, .., g_m; g] = [f_1 g_{1f}, .., f_m g_{mf}; f g]
//! ```
//!
//! When flattened, block `i` occupies the contiguous points `i*n .. (i+1)*n`.
//!
//! Most structural statements about `S = S_1 ⊔ S_2` only hold for `m, n >= 2`;
//! the predicates here are evaluated literally for any size.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::transformation::{all_permutations, Transformation};

/// An element of `T(X,P)` in wreath coordinates.
///
/// The canonical encoding is the base images followed by the block images,
/// concatenated into one sequence; equality, ordering and hashing use it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionMap {
    m: u32,
    n: u32,
    data: Vec<u32>,
}

/// Membership of an element in the pieces `S_1`, `S_2`, `S_3` and `S = S_1 ⊔ S_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Membership {
    pub in_s1: bool,
    pub in_s2: bool,
    pub in_s3: bool,
    pub in_s: bool,
}

impl PartitionMap {
    pub fn new(base: &Transformation, blocks: &[Transformation]) -> Result<Self> {
        let m = base.degree();
        if blocks.len() != m {
            return Err(Error::DegreeMismatch {
                left: m,
                right: blocks.len(),
            });
        }
        let n = blocks.first().map_or(0, Transformation::degree);
        let mut data = Vec::with_capacity(m + m * n);
        data.extend_from_slice(base.images());
        for block in blocks {
            if block.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: block.degree(),
                });
            }
            data.extend_from_slice(block.images());
        }
        Ok(Self {
            m: m as u32,
            n: n as u32,
            data,
        })
    }

    pub fn identity(m: usize, n: usize) -> Self {
        let mut data: Vec<u32> = (0..m as u32).collect();
        for _ in 0..m {
            data.extend(0..n as u32);
        }
        Self {
            m: m as u32,
            n: n as u32,
            data,
        }
    }

    /// `e_{ij;f}`: base `e_ij`, block `j` carries the permutation `f`, all
    /// other blocks are the identity.
    pub fn eijf(m: usize, n: usize, i: usize, j: usize, f: &Transformation) -> Result<Self> {
        let base = Transformation::eij(m, i, j)?;
        if f.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: f.degree(),
            });
        }
        if !f.is_permutation() {
            return Err(Error::NotPermutation);
        }
        let mut blocks = vec![Transformation::identity(n); m];
        blocks[j] = f.clone();
        Self::new(&base, &blocks)
    }

    /// `g^{(i)}`: identity base, block `i` carries `g`, other blocks identity.
    pub fn block_embed(m: usize, n: usize, i: usize, g: &Transformation) -> Result<Self> {
        if i >= m {
            return Err(Error::IndexOutOfRange { index: i, size: m });
        }
        if g.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: g.degree(),
            });
        }
        let mut out = Self::identity(m, n);
        let start = m + i * n;
        out.data[start..start + n].copy_from_slice(g.images());
        Ok(out)
    }

    pub fn m(&self) -> usize {
        self.m as usize
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.m(), self.n())
    }

    /// The canonical encoding: base images then block images.
    pub fn encoding(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    fn base_images(&self) -> &[u32] {
        &self.data[..self.m()]
    }

    #[inline]
    fn block_images(&self, i: usize) -> &[u32] {
        let n = self.n();
        let start = self.m() + i * n;
        &self.data[start..start + n]
    }

    pub fn base(&self) -> Transformation {
        Transformation::from_raw(self.base_images().to_vec())
    }

    pub fn block(&self, i: usize) -> Transformation {
        Transformation::from_raw(self.block_images(i).to_vec())
    }

    pub fn blocks(&self) -> Vec<Transformation> {
        (0..self.m()).map(|i| self.block(i)).collect()
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(self.then(other))
    }

    /// Product without the shape check.
    #[inline]
    pub(crate) fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.shape(), other.shape());
        let (m, n) = (self.m(), self.n());
        let mut data = Vec::with_capacity(self.data.len());
        let base = self.base_images();
        let other_base = other.base_images();
        data.extend(base.iter().map(|&b| other_base[b as usize]));
        for i in 0..m {
            let target = other.block_images(base[i] as usize);
            data.extend(self.block_images(i).iter().map(|&x| target[x as usize]));
        }
        debug_assert_eq!(data.len(), m + m * n);
        Self {
            m: self.m,
            n: self.n,
            data,
        }
    }

    /// Idempotency through the coordinate characterization: the base is
    /// idempotent, `f_i` is idempotent for every `i` in the base image, and
    /// `im(f_i) ⊆ im(f_{i·base})` for every other `i`.
    pub fn is_idempotent(&self) -> bool {
        let base = self.base();
        if !base.is_idempotent() {
            return false;
        }
        let image = base.image_set();
        (0..self.m()).all(|i| {
            if image.binary_search(&i).is_ok() {
                self.block(i).is_idempotent()
            } else {
                let target = self.block(base.apply(i)).image_set();
                self.block_images(i)
                    .iter()
                    .all(|&x| target.binary_search(&(x as usize)).is_ok())
            }
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.m(), self.n())
    }

    pub fn classify(&self) -> Membership {
        let base = self.base();
        let base_singular = !base.is_permutation();
        let blocks = self.blocks();
        // E_n = {1} ∪ (T_n \ S_n)
        let in_s1 = base.is_identity()
            && blocks
                .iter()
                .all(|b| b.is_identity() || !b.is_permutation());
        let in_s2 = base_singular;
        let in_s3 = base_singular && blocks.iter().all(Transformation::is_permutation);
        Membership {
            in_s1,
            in_s2,
            in_s3,
            in_s: in_s1 || in_s2,
        }
    }

    /// If this is `g^{(i)}` with `g ≠ 1`, returns `(i, g)`.
    pub fn as_block_embed(&self) -> Option<(usize, Transformation)> {
        if !self.base().is_identity() {
            return None;
        }
        let moved: Vec<usize> = (0..self.m())
            .filter(|&i| !self.block(i).is_identity())
            .collect();
        match moved.as_slice() {
            [i] => Some((*i, self.block(*i))),
            _ => None,
        }
    }

    /// If this is `e_{ij;f}`, returns `(i, j, f)`.
    pub fn as_eijf(&self) -> Option<(usize, usize, Transformation)> {
        let base = self.base();
        if base.rank() + 1 != self.m() || !base.is_idempotent() {
            return None;
        }
        let j = (0..self.m()).find(|&x| base.apply(x) != x)?;
        let i = base.apply(j);
        let f = self.block(j);
        let others_identity = (0..self.m())
            .filter(|&x| x != j)
            .all(|x| self.block(x).is_identity());
        (others_identity && f.is_permutation()).then_some((i, j, f))
    }

    /// The map on `X` with block `i` at points `i*n .. (i+1)*n`.
    pub fn flatten(&self) -> Transformation {
        let (m, n) = self.shape();
        let base = self.base_images();
        let mut images = Vec::with_capacity(m * n);
        for i in 0..m {
            let offset = base[i] * n as u32;
            images.extend(self.block_images(i).iter().map(|&x| offset + x));
        }
        Transformation::from_raw(images)
    }

    pub fn unflatten(t: &Transformation, m: usize, n: usize) -> Result<Self> {
        if t.degree() != m * n {
            return Err(Error::DegreeMismatch {
                left: m * n,
                right: t.degree(),
            });
        }
        let mut data = Vec::with_capacity(m + m * n);
        for i in 0..m {
            data.push((t.apply(i * n) / n) as u32);
        }
        for i in 0..m {
            let target = data[i] as usize;
            for x in 0..n {
                let y = t.apply(i * n + x);
                if y / n != target {
                    return Err(Error::NotPartitionPreserving { m, n });
                }
                data.push((y % n) as u32);
            }
        }
        Ok(Self {
            m: m as u32,
            n: n as u32,
            data,
        })
    }

    /// Builds an element directly from its canonical encoding (0-based).
    pub fn from_encoding(m: usize, n: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != m + m * n {
            return Err(Error::DegreeMismatch {
                left: m + m * n,
                right: data.len(),
            });
        }
        for (pos, &x) in data.iter().enumerate() {
            let bound = if pos < m { m } else { n };
            if x as usize >= bound {
                return Err(Error::ImageOutOfRange {
                    image: x as usize,
                    degree: bound,
                });
            }
        }
        Ok(Self {
            m: m as u32,
            n: n as u32,
            data,
        })
    }
}

impl fmt::Debug for PartitionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PartitionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}; {}]",
            self.blocks().iter().join(", "),
            self.base()
        )
    }
}

/// Every element of `T(X,P)`: `m^m · n^(nm)` of them, in encoding order.
pub fn all_partition_maps(m: usize, n: usize) -> impl Iterator<Item = PartitionMap> {
    let len = m + m * n;
    let radix: Vec<u32> = (0..len)
        .map(|pos| if pos < m { m as u32 } else { n as u32 })
        .collect();
    let empty = radix.contains(&0) && len > 0;
    let mut current = if empty { None } else { Some(vec![0u32; len]) };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        let mut advanced = false;
        for pos in (0..len).rev() {
            if next[pos] + 1 < radix[pos] {
                next[pos] += 1;
                advanced = true;
                break;
            }
            next[pos] = 0;
        }
        current = advanced.then_some(next);
        Some(PartitionMap {
            m: m as u32,
            n: n as u32,
            data: out,
        })
    })
}

/// `E(T(X,P))` by exhaustive search over `T(X,P)`, keeping `f` with `f·f = f`.
pub fn enumerate_idempotents_exhaustive(m: usize, n: usize) -> Vec<PartitionMap> {
    all_partition_maps(m, n).filter(|f| f.then(f) == *f).collect()
}

/// `E(T(X,P))` built constructively: idempotent base, then blocks obeying
/// the coordinate characterization. Sorted by encoding.
pub fn enumerate_idempotents(m: usize, n: usize) -> Vec<PartitionMap> {
    let mut out = Vec::new();
    let block_idempotents = crate::transformation::enumerate_idempotents(n, None);
    let all_blocks: Vec<Transformation> = crate::transformation::all_transformations(n).collect();
    for base in crate::transformation::enumerate_idempotents(m, None) {
        let image = base.image_set();
        // choose f_i for i in the image first
        let fixed_choices = image
            .iter()
            .map(|_| block_idempotents.iter())
            .multi_cartesian_product();
        let fixed_choices: Box<dyn Iterator<Item = Vec<&Transformation>>> = if image.is_empty() {
            Box::new(std::iter::once(Vec::new()))
        } else {
            Box::new(fixed_choices)
        };
        for fixed in fixed_choices {
            let mut slots: Vec<Vec<&Transformation>> = Vec::with_capacity(m);
            for i in 0..m {
                if let Ok(pos) = image.binary_search(&i) {
                    slots.push(vec![fixed[pos]]);
                } else {
                    let target = fixed[image.binary_search(&base.apply(i)).unwrap()].image_set();
                    slots.push(
                        all_blocks
                            .iter()
                            .filter(|g| {
                                g.images()
                                    .iter()
                                    .all(|&x| target.binary_search(&(x as usize)).is_ok())
                            })
                            .collect(),
                    );
                }
            }
            let sizes: Vec<usize> = slots.iter().map(Vec::len).collect();
            for choice in MixedRadix::new(sizes) {
                let blocks: Vec<Transformation> = choice
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| slots[i][c].clone())
                    .collect();
                out.push(PartitionMap::new(&base, &blocks).expect("consistent shape"));
            }
        }
    }
    out.sort();
    out
}

/// `G_1 = { e_ij^{(k)} }` over all blocks `k` and ordered pairs `i ≠ j` of points.
pub fn generators_g1(m: usize, n: usize) -> Vec<PartitionMap> {
    let mut out = Vec::new();
    for k in 0..m {
        for ((_, _), e) in crate::transformation::rank_deficient_idempotents(n) {
            out.push(PartitionMap::block_embed(m, n, k, &e).expect("valid block"));
        }
    }
    out
}

/// `G_2 = { e_{ij;f} }` over ordered block pairs `i ≠ j` and `f ∈ S_n`.
pub fn generators_g2(m: usize, n: usize) -> Vec<PartitionMap> {
    let perms = all_permutations(n);
    let mut out = Vec::new();
    for (i, j) in (0..m).cartesian_product(0..m).filter(|(i, j)| i != j) {
        for f in &perms {
            out.push(PartitionMap::eijf(m, n, i, j, f).expect("valid pair"));
        }
    }
    out
}

/// Counter over `∏ [0, radix_i)`, last position fastest. Yields one empty
/// tuple when there are no positions.
#[derive(Debug, Clone)]
pub struct MixedRadix {
    radix: Vec<usize>,
    current: Option<Vec<usize>>,
}

impl MixedRadix {
    pub fn new(radix: Vec<usize>) -> Self {
        let current = (!radix.contains(&0)).then(|| vec![0; radix.len()]);
        Self { radix, current }
    }
}

impl Iterator for MixedRadix {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        for pos in (0..next.len()).rev() {
            if next[pos] + 1 < self.radix[pos] {
                next[pos] += 1;
                self.current = Some(next);
                return Some(out);
            }
            next[pos] = 0;
        }
        Some(out)
    }
}
