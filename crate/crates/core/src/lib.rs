//! Idempotent generation in the monoid `T(X,P)` of transformations that
//! preserve a uniform partition `P` of `X` into `m` blocks of size `n`.
//!
//! - [`transformation`]: maps on `{0..n-1}` acting on the right
//! - [`wreath`]: elements of `T(X,P)` in wreath coordinates
//! - [`digraph`]: complete digraphs, strong connectivity, censuses
//! - [`counting`]: exact counting formulas
//! - [`genset`]: minimal idempotent generating sets
//! - [`closure`]: brute-force closure oracle
//! - [`io`]: JSON forms (1-based)

pub mod closure;
pub mod counting;
pub mod digraph;
pub mod error;
pub mod genset;
pub mod io;
pub mod transformation;
pub mod wreath;

pub use closure::{generate, generates_s, ClosureOptions, ClosureResult, Mode};
pub use counting::{BigCount, Evaluation, Validity};
pub use digraph::{CompleteDigraph, Digraph, PairState};
pub use error::{Error, Result};
pub use genset::{MinGenSetSpec, Rejection, Split};
pub use io::GensetDocument;
pub use transformation::Transformation;
pub use wreath::{Membership, PartitionMap};

use rand::SeedableRng;

/// The deterministic generator used for every seeded choice.
pub type SeededRng = rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    SeededRng::seed_from_u64(seed)
}
