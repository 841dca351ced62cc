//! Simple undirected graphs on dense vertex ids `0..n`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::{Error, Result};

mod random;
mod sets;

pub use random::{random_bipartite, random_graph, random_regular, REGULAR_RETRY_BUDGET};
pub use sets::{Bipartition, VertexSet};

/// Largest claw size accepted by [`Graph::is_p_claw_free`].
pub const CLAW_CHECK_CAP: usize = 8;

/// An immutable simple undirected graph.
///
/// Neighbor lists are sorted ascending and symmetric, with no self-loops and
/// no repeated neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are rejected rather than collapsed.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = if u < w[0] { (u, w[0]) } else { (w[0], u) };
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Self { adjacency, edge_count })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self { adjacency: vec![Vec::new(); n], edge_count: 0 }
    }

    pub fn complete(n: usize) -> Result<Self> {
        nonzero(n, "complete graph")?;
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`. `complete_bipartite(1, p)` is
    /// the claw `K_{1,p}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        nonzero(a, "complete bipartite part")?;
        nonzero(b, "complete bipartite part")?;
        Self::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// A path on `n` vertices.
    pub fn path(n: usize) -> Result<Self> {
        nonzero(n, "path")?;
        Self::new(n, (1..n).map(|v| (v - 1, v)))
    }

    /// Center `0` joined to `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Self> {
        Self::complete_bipartite(1, leaves)
    }

    /// The line graph. Vertex `i` of the result is the `i`-th edge of `self`
    /// in [`Graph::edges`] order; two vertices are adjacent iff the edges
    /// share an endpoint.
    pub fn line_graph(&self) -> Result<Self> {
        if self.edge_count == 0 {
            return Err(Error::Edgeless);
        }
        let edges: Vec<(usize, usize)> = self.edges().collect();
        // incident[v] = ids of edges touching v, ascending.
        let mut incident = vec![Vec::new(); self.n()];
        for (id, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(id);
            incident[v].push(id);
        }
        let mut pairs = BTreeSet::new();
        for list in &incident {
            for (i, &a) in list.iter().enumerate() {
                for &b in &list[i + 1..] {
                    pairs.insert((a, b));
                }
            }
        }
        Self::new(edges.len(), pairs)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> Range<usize> {
        0..self.n()
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Panics if `v` is out of range; see [`Graph::checked_degree`].
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn checked_degree(&self, v: usize) -> Result<usize> {
        self.adjacency
            .get(v)
            .map(Vec::len)
            .ok_or(Error::VertexOutOfRange { vertex: v, n: self.n() })
    }

    /// `Δ(G)`; zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `δ(G)`; zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adjacency.iter().all(|l| l.len() == d)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|l| l.binary_search(&v).is_ok())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Checks every structural invariant. Constructors already guarantee
    /// them; this exists for tests and debug assertions.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let mut degree_sum = 0;
        for (u, list) in self.adjacency.iter().enumerate() {
            degree_sum += list.len();
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::InvalidParameter(format!("neighbors of {u} not strictly sorted")));
                }
            }
            for &v in list {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                if !self.has_edge(v, u) {
                    return Err(Error::InvalidParameter(format!("edge {u}-{v} is not symmetric")));
                }
            }
        }
        if degree_sum != 2 * self.edge_count {
            return Err(Error::InvalidParameter(format!(
                "degree sum {degree_sum} != 2m = {}",
                2 * self.edge_count
            )));
        }
        Ok(())
    }

    /// True iff no vertex has `p` pairwise non-adjacent neighbors, i.e. the
    /// graph has no induced `K_{1,p}`.
    pub fn is_p_claw_free(&self, p: usize) -> Result<bool> {
        if p < 2 {
            return Err(Error::InvalidParameter(format!("claw size must be at least 2, got {p}")));
        }
        if p > CLAW_CHECK_CAP {
            return Err(Error::ClawCapExceeded { p, cap: CLAW_CHECK_CAP });
        }
        Ok(self.vertices().all(|v| {
            let nbrs = self.neighbors(v);
            nbrs.len() < p || !self.has_independent_subset(nbrs, p)
        }))
    }

    /// Size of the largest independent set inside any single neighborhood.
    /// The graph is `p`-claw-free exactly for `p > claw_number()`.
    pub fn claw_number(&self) -> usize {
        self.vertices()
            .map(|v| {
                let nbrs = self.neighbors(v);
                let mut best = 0;
                let mut chosen = Vec::new();
                self.max_independent(nbrs, 0, &mut chosen, &mut best);
                best
            })
            .max()
            .unwrap_or(0)
    }

    /// Smallest `p >= 2` for which the graph is `p`-claw-free.
    pub fn min_claw_free_p(&self) -> usize {
        (self.claw_number() + 1).max(2)
    }

    fn has_independent_subset(&self, pool: &[usize], size: usize) -> bool {
        fn go(g: &Graph, pool: &[usize], start: usize, chosen: &mut Vec<usize>, size: usize) -> bool {
            if chosen.len() == size {
                return true;
            }
            if pool.len() - start < size - chosen.len() {
                return false;
            }
            for i in start..pool.len() {
                let c = pool[i];
                if chosen.iter().all(|&x| !g.has_edge(x, c)) {
                    chosen.push(c);
                    if go(g, pool, i + 1, chosen, size) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        go(self, pool, 0, &mut Vec::new(), size)
    }

    fn max_independent(&self, pool: &[usize], start: usize, chosen: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(chosen.len());
        if chosen.len() + (pool.len() - start) <= *best {
            return;
        }
        for i in start..pool.len() {
            let c = pool[i];
            if chosen.iter().all(|&x| !self.has_edge(x, c)) {
                chosen.push(c);
                self.max_independent(pool, i + 1, chosen, best);
                chosen.pop();
            }
        }
    }
}

fn nonzero(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter(format!("{what} needs at least one vertex")))
    } else {
        Ok(())
    }
}
