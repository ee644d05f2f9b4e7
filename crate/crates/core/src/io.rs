//! JSON forms. Every index and image is 1-based.
//!
//! - `Transformation`: `[2,2,3]`
//! - `PartitionMap`: `{"m":2,"n":2,"base":[1,2],"blocks":[[1,1],[1,2]]}`
//! - `Digraph`: `{"order":3,"edges":[[1,2],[2,3],[3,1]]}`
//! - `CompleteDigraph`: `{"order":3,"states":{"1-2":"forward",..}}`
//! - `MinGenSetSpec`: `{"m":..,"n":..,"u_locals":[[[1,2],..],..],"v":[[1,2],..],
//!   "splits":[{"pair":[1,2],"a":[[1,2],..]}]}`; `B` is the complement of `A`.
//! - a raw generating set is an array of `PartitionMap`.

use std::collections::{BTreeMap, BTreeSet};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::digraph::{pairs, CompleteDigraph, Digraph, PairState};
use crate::genset::{MinGenSetSpec, Split};
use crate::transformation::Transformation;
use crate::wreath::PartitionMap;

impl Serialize for Transformation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Transformation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Transformation::from_one_based(&images).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionMapJson {
    m: usize,
    n: usize,
    base: Transformation,
    blocks: Vec<Transformation>,
}

impl Serialize for PartitionMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PartitionMapJson {
            m: self.m(),
            n: self.n(),
            base: self.base(),
            blocks: self.blocks(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PartitionMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PartitionMapJson::deserialize(d)?;
        if raw.base.degree() != raw.m || raw.blocks.len() != raw.m {
            return Err(D::Error::custom(format!(
                "expected a base map and {} blocks on {} points",
                raw.m, raw.m
            )));
        }
        if let Some(b) = raw.blocks.iter().find(|b| b.degree() != raw.n) {
            return Err(D::Error::custom(format!(
                "block {b} does not have degree {}",
                raw.n
            )));
        }
        PartitionMap::new(&raw.base, &raw.blocks).map_err(D::Error::custom)
    }
}

type Pair = [usize; 2];

fn to_pair((i, j): (usize, usize)) -> Pair {
    [i + 1, j + 1]
}

fn from_pair<E: serde::de::Error>([i, j]: Pair, order: usize) -> Result<(usize, usize), E> {
    if i == 0 || j == 0 || i > order || j > order {
        return Err(E::custom(format!("pair ({i},{j}) outside 1..={order}")));
    }
    if i == j {
        return Err(E::custom(format!("pair ({i},{j}) has equal entries")));
    }
    Ok((i - 1, j - 1))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DigraphJson {
    order: usize,
    edges: Vec<Pair>,
}

impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DigraphJson {
            order: self.order(),
            edges: self.edges().into_iter().map(to_pair).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = DigraphJson::deserialize(d)?;
        let edges = raw
            .edges
            .into_iter()
            .map(|p| from_pair::<D::Error>(p, raw.order))
            .collect::<Result<Vec<_>, _>>()?;
        Digraph::from_edges(raw.order, edges).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CompleteDigraphJson {
    order: usize,
    states: BTreeMap<String, String>,
}

impl Serialize for CompleteDigraph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CompleteDigraphJson {
            order: self.order(),
            states: self
                .pair_states()
                .map(|((u, v), st)| (format!("{}-{}", u + 1, v + 1), st.as_str().to_owned()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CompleteDigraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CompleteDigraphJson::deserialize(d)?;
        let expected = raw.order * raw.order.saturating_sub(1) / 2;
        if raw.states.len() != expected {
            return Err(D::Error::custom(format!(
                "expected {expected} pair states, found {}",
                raw.states.len()
            )));
        }
        let states = pairs(raw.order)
            .map(|(u, v)| {
                let key = format!("{}-{}", u + 1, v + 1);
                let value = raw
                    .states
                    .get(&key)
                    .ok_or_else(|| D::Error::custom(format!("missing state for pair {key}")))?;
                PairState::parse(value)
                    .ok_or_else(|| D::Error::custom(format!("unknown pair state {value:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        CompleteDigraph::new(raw.order, states).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SplitJson {
    pair: Pair,
    a: Vec<Transformation>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecJson {
    m: usize,
    n: usize,
    u_locals: Vec<Vec<Pair>>,
    v: Vec<Pair>,
    splits: Vec<SplitJson>,
}

impl Serialize for MinGenSetSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SpecJson {
            m: self.m,
            n: self.n,
            u_locals: self
                .u_locals
                .iter()
                .map(|u| u.iter().copied().map(to_pair).collect())
                .collect(),
            v: self.v.iter().copied().map(to_pair).collect(),
            splits: self
                .splits
                .iter()
                .map(|(&pair, split)| SplitJson {
                    pair: to_pair(pair),
                    a: split.a.iter().cloned().collect(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MinGenSetSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = SpecJson::deserialize(d)?;
        let (m, n) = (raw.m, raw.n);
        let u_locals = raw
            .u_locals
            .into_iter()
            .map(|u| {
                u.into_iter()
                    .map(|p| from_pair::<D::Error>(p, n))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let v = raw
            .v
            .into_iter()
            .map(|p| from_pair::<D::Error>(p, m))
            .collect::<Result<Vec<_>, _>>()?;
        let mut splits = BTreeMap::new();
        for s in raw.splits {
            let pair = from_pair::<D::Error>(s.pair, m)?;
            if let Some(f) = s.a.iter().find(|f| f.degree() != n || !f.is_permutation()) {
                return Err(D::Error::custom(format!(
                    "split entry {f} is not a permutation of degree {n}"
                )));
            }
            let a: BTreeSet<Transformation> = s.a.into_iter().collect();
            if splits.insert(pair, Split::from_a(n, a)).is_some() {
                return Err(D::Error::custom(format!(
                    "duplicate split for pair ({},{})",
                    s.pair[0], s.pair[1]
                )));
            }
        }
        let mut spec = MinGenSetSpec {
            m,
            n,
            u_locals,
            v,
            splits,
        };
        spec.canonicalize();
        Ok(spec)
    }
}

/// Either input accepted by the checker.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum GensetDocument {
    Spec(MinGenSetSpec),
    Raw(Vec<PartitionMap>),
}

/// Parses a spec object or an array of elements; errors carry line and column.
pub fn parse_genset_document(text: &str) -> Result<GensetDocument, serde_json::Error> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    // parse again with the concrete type so positions point into the text
    if value.is_array() {
        serde_json::from_str::<Vec<PartitionMap>>(text).map(GensetDocument::Raw)
    } else {
        serde_json::from_str::<MinGenSetSpec>(text).map(GensetDocument::Spec)
    }
}
