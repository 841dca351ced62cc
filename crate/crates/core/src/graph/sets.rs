use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::Graph;
use crate::{Error, Result};

/// A set of vertex ids drawn from `0..universe`, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    members: Vec<usize>,
    universe: usize,
}

impl VertexSet {
    /// Rejects ids `>= universe` and repeated ids.
    pub fn new<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Result<Self> {
        let mut members: Vec<usize> = ids.into_iter().collect();
        members.sort_unstable();
        if let Some(&v) = members.iter().find(|&&v| v >= universe) {
            return Err(Error::VertexOutOfRange { vertex: v, n: universe });
        }
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!("vertex {} listed twice", w[0])));
        }
        Ok(Self { members, universe })
    }

    pub fn empty(universe: usize) -> Self {
        Self { members: Vec::new(), universe }
    }

    pub fn full(universe: usize) -> Self {
        Self { members: (0..universe).collect(), universe }
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        Self {
            members: mask.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect(),
            universe: mask.len(),
        }
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.universe];
        for &v in &self.members {
            mask[v] = true;
        }
        mask
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    /// Same members, viewed inside a larger (or equal) universe.
    pub fn widen(&self, universe: usize) -> Self {
        debug_assert!(universe >= self.universe);
        Self { members: self.members.clone(), universe }
    }

    /// Members below `limit`, as a set over `0..limit`.
    pub fn restrict(&self, limit: usize) -> Self {
        Self {
            members: self.members.iter().copied().filter(|&v| v < limit).collect(),
            universe: limit,
        }
    }

    pub fn with(&self, v: usize) -> Self {
        let mut out = self.clone();
        if let Err(pos) = out.members.binary_search(&v) {
            out.members.insert(pos, v);
        }
        out
    }

    pub fn without(&self, v: usize) -> Self {
        let mut out = self.clone();
        if let Ok(pos) = out.members.binary_search(&v) {
            out.members.remove(pos);
        }
        out
    }

    pub fn union(&self, other: &VertexSet) -> Self {
        let universe = self.universe.max(other.universe);
        let mut members: Vec<usize> = self.iter().chain(other.iter()).collect();
        members.sort_unstable();
        members.dedup();
        Self { members, universe }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A two-sided vertex partition; `V₁` is the "left" side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    right: Vec<bool>,
}

impl Bipartition {
    /// Parts `0..n1` and `n1..n`, as declared by a `b <n1>` line.
    pub fn from_prefix(n: usize, n1: usize) -> Result<Self> {
        if n1 > n {
            return Err(Error::InvalidBipartition(format!("left part size {n1} exceeds n = {n}")));
        }
        Ok(Self { right: (0..n).map(|v| v >= n1).collect() })
    }

    pub fn from_sides(right: Vec<bool>) -> Self {
        Self { right }
    }

    /// BFS 2-coloring; each component's lowest vertex goes left.
    pub fn two_color(g: &Graph) -> Option<Self> {
        let mut color: Vec<Option<bool>> = vec![None; g.n()];
        let mut queue = Vec::new();
        for s in g.vertices() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            queue.push(s);
            while let Some(u) = queue.pop() {
                let cu = color[u]?;
                for &w in g.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Self { right: color.into_iter().map(|c| c.unwrap_or(false)).collect() })
    }

    /// Every edge must cross the partition.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.right.len() != g.n() {
            return Err(Error::InvalidBipartition(format!(
                "partition covers {} vertices, graph has {}",
                self.right.len(),
                g.n()
            )));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| self.right[u] == self.right[v]) {
            return Err(Error::InvalidBipartition(format!("edge {u}-{v} lies inside one part")));
        }
        Ok(())
    }

    pub fn is_left(&self, v: usize) -> bool {
        !self.right[v]
    }

    pub fn left(&self) -> impl Iterator<Item = usize> + '_ {
        self.right.iter().enumerate().filter(|(_, &r)| !r).map(|(v, _)| v)
    }

    pub fn right(&self) -> impl Iterator<Item = usize> + '_ {
        self.right.iter().enumerate().filter(|(_, &r)| r).map(|(v, _)| v)
    }

    pub fn len(&self) -> usize {
        self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.right.is_empty()
    }

    /// `Some(n1)` when the left part is exactly `0..n1`.
    pub fn prefix_len(&self) -> Option<usize> {
        let n1 = self.right.iter().take_while(|&&r| !r).count();
        self.right[n1..].iter().all(|&r| r).then_some(n1)
    }

    /// Sides as a vector, `true` meaning right.
    pub fn sides(&self) -> &[bool] {
        &self.right
    }
}
