//! Loopless digraphs on `{0, .., order-1}`, complete digraphs described by
//! one state per unordered pair, and brute-force census routines.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest order accepted by the exhaustive complete-digraph census.
pub const CENSUS_LIMIT: usize = 5;

/// A digraph without loops or multi-edges, stored as an adjacency matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    order: usize,
    adjacency: Vec<bool>,
}

impl Digraph {
    pub fn empty(order: usize) -> Self {
        Self {
            order,
            adjacency: vec![false; order * order],
        }
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(order);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for index in [u, v] {
            if index >= self.order {
                return Err(Error::IndexOutOfRange {
                    index,
                    size: self.order,
                });
            }
        }
        if u == v {
            return Err(Error::EqualIndices(u));
        }
        self.adjacency[u * self.order + v] = true;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.order && v < self.order {
            self.adjacency[u * self.order + v] = false;
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u * self.order + v]
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.order;
        (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.has_edge(u, v))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().filter(|&&e| e).count()
    }

    /// `seen[v]` iff `v` is reachable from `start` (including `start`).
    pub fn reachable(&self, start: usize) -> Vec<bool> {
        self.reachable_from(start, false)
    }

    /// Every unordered pair of distinct vertices is joined in at least one direction.
    pub fn is_complete(&self) -> bool {
        (0..self.order).all(|u| {
            (u + 1..self.order).all(|v| self.has_edge(u, v) || self.has_edge(v, u))
        })
    }

    /// Number of pairs joined in both directions.
    pub fn double_edge_count(&self) -> usize {
        (0..self.order)
            .map(|u| {
                (u + 1..self.order)
                    .filter(|&v| self.has_edge(u, v) && self.has_edge(v, u))
                    .count()
            })
            .sum()
    }

    fn reachable_from(&self, start: usize, reverse: bool) -> Vec<bool> {
        let n = self.order;
        let mut seen = vec![false; n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                let edge = if reverse {
                    self.has_edge(v, u)
                } else {
                    self.has_edge(u, v)
                };
                if edge && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// True for order `<= 1`, otherwise iff vertex 0 reaches and is reached
    /// by every vertex.
    pub fn is_strongly_connected(&self) -> bool {
        if self.order <= 1 {
            return true;
        }
        self.reachable_from(0, false).iter().all(|&s| s)
            && self.reachable_from(0, true).iter().all(|&s| s)
    }

    /// Strongly connected components via Tarjan's algorithm (iterative),
    /// returned in reverse topological order (sink components first).
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        const UNSEEN: usize = usize::MAX;
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut components = Vec::new();
        let mut next_index = 0;

        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            // (vertex, next neighbour to inspect)
            let mut call: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(&mut (u, ref mut cursor)) = call.last_mut() {
                if let Some(v) = (*cursor..n).find(|&v| self.has_edge(u, v)) {
                    *cursor = v + 1;
                    if index[v] == UNSEEN {
                        index[v] = next_index;
                        low[v] = next_index;
                        next_index += 1;
                        stack.push(v);
                        on_stack[v] = true;
                        call.push((v, 0));
                    } else if on_stack[v] {
                        low[u] = low[u].min(index[v]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[u]);
                }
                if low[u] == index[u] {
                    let mut component = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        component.push(w);
                        if w == u {
                            break;
                        }
                    }
                    component.sort_unstable();
                    components.push(component);
                }
            }
        }
        components
    }

    /// Components ordered maximal-first, where `A > B` iff every edge
    /// between them points from `A` to `B`. Fails when some pair of
    /// components has no edge between them.
    pub fn scc_order(&self) -> Result<Vec<Vec<usize>>> {
        let mut components = self.strongly_connected_components();
        components.reverse();
        for (a, upper) in components.iter().enumerate() {
            for lower in &components[a + 1..] {
                let joined = upper
                    .iter()
                    .any(|&u| lower.iter().any(|&v| self.has_edge(u, v)));
                if !joined {
                    return Err(Error::NoTotalOrder);
                }
                debug_assert!(!lower
                    .iter()
                    .any(|&v| upper.iter().any(|&u| self.has_edge(v, u))));
            }
        }
        Ok(components)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect();
        f.debug_struct("Digraph")
            .field("order", &self.order)
            .field("edges", &edges)
            .finish()
    }
}

/// `Γ_U`: an edge `i → j` for every `e_ij ∈ U`.
pub fn gamma_of(pairs: &[(usize, usize)], order: usize) -> Result<Digraph> {
    Digraph::from_edges(order, pairs.iter().copied())
}

/// Orientation of one unordered pair `{u, v}` with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairState {
    /// `u → v` only.
    Forward,
    /// `v → u` only.
    Backward,
    /// Both directions.
    Double,
}

impl PairState {
    pub const ALL: [PairState; 3] = [PairState::Forward, PairState::Backward, PairState::Double];

    pub fn as_str(self) -> &'static str {
        match self {
            PairState::Forward => "forward",
            PairState::Backward => "backward",
            PairState::Double => "double",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        PairState::ALL.into_iter().find(|p| p.as_str() == s)
    }
}

/// A complete digraph: exactly one [`PairState`] for each unordered pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompleteDigraph {
    order: usize,
    states: Vec<PairState>,
}

/// Unordered pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn pairs(order: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..order).flat_map(move |u| (u + 1..order).map(move |v| (u, v)))
}

impl CompleteDigraph {
    pub fn new(order: usize, states: Vec<PairState>) -> Result<Self> {
        let expected = order * order.saturating_sub(1) / 2;
        if states.len() != expected {
            return Err(Error::DegreeMismatch {
                left: expected,
                right: states.len(),
            });
        }
        Ok(Self { order, states })
    }

    /// Reads the pair states off a complete digraph.
    pub fn from_digraph(g: &Digraph) -> Option<Self> {
        let states = pairs(g.order())
            .map(|(u, v)| match (g.has_edge(u, v), g.has_edge(v, u)) {
                (true, true) => Some(PairState::Double),
                (true, false) => Some(PairState::Forward),
                (false, true) => Some(PairState::Backward),
                (false, false) => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Self {
            order: g.order(),
            states,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn states(&self) -> &[PairState] {
        &self.states
    }

    /// `(pair, state)` in lexicographic pair order.
    pub fn pair_states(&self) -> impl Iterator<Item = ((usize, usize), PairState)> + '_ {
        pairs(self.order).zip(self.states.iter().copied())
    }

    pub fn state_map(&self) -> BTreeMap<(usize, usize), PairState> {
        self.pair_states().collect()
    }

    pub fn double_edge_count(&self) -> usize {
        self.states
            .iter()
            .filter(|&&s| s == PairState::Double)
            .count()
    }

    pub fn is_tournament(&self) -> bool {
        self.double_edge_count() == 0
    }

    pub fn to_digraph(&self) -> Digraph {
        let mut g = Digraph::empty(self.order);
        for ((u, v), state) in self.pair_states() {
            if state != PairState::Backward {
                g.adjacency[u * self.order + v] = true;
            }
            if state != PairState::Forward {
                g.adjacency[v * self.order + u] = true;
            }
        }
        g
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.to_digraph().is_strongly_connected()
    }
}

/// Every complete digraph on `order` vertices with exactly `doubles` double
/// edges. Pairs are taken in lexicographic order with the last pair varying
/// fastest; states run forward < backward < double.
pub fn enumerate_complete_digraphs(
    order: usize,
    doubles: usize,
) -> Result<impl Iterator<Item = CompleteDigraph>> {
    if order > CENSUS_LIMIT {
        return Err(Error::TooLarge {
            what: format!("complete digraph census on {order} vertices"),
            limit: CENSUS_LIMIT,
        });
    }
    Ok(enumerate_all_complete(order).filter(move |g| g.double_edge_count() == doubles))
}

/// All `3^C(order,2)` complete digraphs, without the census size guard.
pub(crate) fn enumerate_all_complete(order: usize) -> impl Iterator<Item = CompleteDigraph> {
    let len = order * order.saturating_sub(1) / 2;
    crate::wreath::MixedRadix::new(vec![3; len]).map(move |code| CompleteDigraph {
        order,
        states: code.into_iter().map(|c| PairState::ALL[c]).collect(),
    })
}

/// Strongly connected complete digraphs on `order` vertices with `doubles` double edges.
pub fn brute_force_wnk(order: usize, doubles: usize) -> Result<u64> {
    Ok(enumerate_complete_digraphs(order, doubles)?
        .filter(CompleteDigraph::is_strongly_connected)
        .count() as u64)
}

/// Strongly connected tournaments on `order` vertices.
pub fn brute_force_w(order: usize) -> Result<u64> {
    brute_force_wnk(order, 0)
}

/// Removes one direction of double edges until none can be removed without
/// losing strong connectivity. For `order != 2` the result is a strongly
/// connected tournament; on two vertices the single double edge is already
/// minimal and is returned as is.
///
/// Double edges are scanned in lexicographic pair order, trying to drop
/// `u → v` before `v → u`.
pub fn reduce_to_minimal_scc(g: &CompleteDigraph) -> Result<CompleteDigraph> {
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let mut current = g.clone();
    'scan: loop {
        for (slot, ((_, _), state)) in current.clone().pair_states().enumerate() {
            if state != PairState::Double {
                continue;
            }
            // dropping u -> v leaves v -> u, i.e. Backward
            for keep in [PairState::Backward, PairState::Forward] {
                let mut candidate = current.clone();
                candidate.states[slot] = keep;
                if candidate.is_strongly_connected() {
                    current = candidate;
                    assert!(current.is_strongly_connected());
                    continue 'scan;
                }
            }
        }
        break;
    }
    debug_assert!(current.order() == 2 || current.is_tournament());
    Ok(current)
}
