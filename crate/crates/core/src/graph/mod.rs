//! Simple undirected graphs on vertices `1..=k`, stored as adjacency bitmasks.

mod chordal;
mod froberg;
pub mod generators;
mod io;

use std::fmt;

use crate::error::{Error, Result};

pub use chordal::{is_chordal, perfect_elimination_ordering};
pub use froberg::{component_count, froberg_vector, MAX_FROBERG_VERTICES};
pub use io::{from_graph6, parse_edge_list, to_edge_list, to_graph6};

pub const MAX_VERTICES: usize = 25;

/// A set of vertices of a graph with at most [`MAX_VERTICES`] vertices.
/// Vertex `v` is bit `v − 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSubset(u32);

impl VertexSubset {
    pub const fn empty() -> Self {
        VertexSubset(0)
    }

    /// All of `1..=k`.
    pub fn full(k: usize) -> Self {
        debug_assert!(k <= 32);
        VertexSubset(if k >= 32 { u32::MAX } else { (1u32 << k) - 1 })
    }

    pub const fn from_bits(bits: u32) -> Self {
        VertexSubset(bits)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut bits = 0u32;
        for v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    k: MAX_VERTICES,
                });
            }
            bits |= 1 << (v - 1);
        }
        Ok(VertexSubset(bits))
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=32).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Lowest-labeled member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSubset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSubset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v + 1)
            }
        })
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u32>,
}

impl Graph {
    /// The edgeless graph on `k` vertices.
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Invalid("a graph needs at least one vertex".into()));
        }
        crate::error::guard("vertex count", k, MAX_VERTICES)?;
        Ok(Graph { adj: vec![0; k] })
    }

    pub fn from_edges(k: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(k)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_masks(adj: Vec<u32>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_VERTICES);
        Graph { adj }
    }

    pub(crate) fn masks(&self) -> &[u32] {
        &self.adj
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSubset {
        VertexSubset::full(self.adj.len())
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.adj.len() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                k: self.adj.len(),
            })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Invalid(format!("self-loop at vertex {u}")));
        }
        self.adj[u - 1] |= 1 << (v - 1);
        self.adj[v - 1] |= 1 << (u - 1);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u - 1] &= !(1 << (v - 1));
        self.adj[v - 1] &= !(1 << (u - 1));
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.adj.len() && self.neighbors(u).contains(v)
    }

    /// `N(v)`. Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: usize) -> VertexSubset {
        VertexSubset(self.adj[v - 1])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.adj.len() {
            for v in self.neighbors(u).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let k = self.adj.len();
        (1..=k).all(|v| self.degree(v) == k - 1)
    }

    pub fn is_dominating(&self, v: usize) -> bool {
        self.degree(v) == self.adj.len() - 1
    }

    /// The vertex set of the component containing `v`.
    pub fn component_of(&self, v: usize) -> VertexSubset {
        VertexSubset(flood(&self.adj, 1 << (v - 1), u32::MAX))
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(1) == self.vertices()
    }

    pub fn components(&self) -> Vec<VertexSubset> {
        let mut rest = self.vertices().bits();
        let mut out = Vec::new();
        while rest != 0 {
            let comp = flood(&self.adj, rest & rest.wrapping_neg(), rest);
            out.push(VertexSubset(comp));
            rest &= !comp;
        }
        out
    }

    /// `G ∖ v`, with the remaining vertices relabeled in order.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if self.adj.len() == 1 {
            return Err(Error::Invalid("cannot remove the only vertex".into()));
        }
        let low = (1u32 << (v - 1)) - 1;
        let squeeze = |m: u32| (m & low) | ((m >> 1) & !low);
        Ok(Graph {
            adj: self
                .adj
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != v - 1)
                .map(|(_, &m)| squeeze(m))
                .collect(),
        })
    }

    /// Relabels vertex `v` as `perm[v − 1]`; `perm` is a permutation of `1..=k`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let k = self.adj.len();
        let mut seen = vec![false; k];
        if perm.len() != k
            || perm
                .iter()
                .any(|&p| p == 0 || p > k || std::mem::replace(&mut seen[p - 1], true))
        {
            return Err(Error::Invalid("not a permutation of the vertex set".into()));
        }
        let mut g = Graph::new(k)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u - 1], perm[v - 1])?;
        }
        Ok(g)
    }

    /// `G_{v→w}`: the private neighbours `N(v;w) = N(v) ∖ ({w} ∪ N(w))` of `v`
    /// are detached from `v` and attached to `w`.
    pub fn move_vertex(&self, v: usize, w: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        if v == w {
            return Err(Error::Invalid(format!(
                "cannot move vertex {v} onto itself"
            )));
        }
        let private = self.private_neighbors(v, w);
        let mut g = self.clone();
        for u in private.iter() {
            g.adj[u - 1] &= !(1 << (v - 1));
            g.adj[u - 1] |= 1 << (w - 1);
        }
        g.adj[v - 1] &= !private.bits();
        g.adj[w - 1] |= private.bits();
        Ok(g)
    }

    /// `N(v;w)`.
    pub fn private_neighbors(&self, v: usize, w: usize) -> VertexSubset {
        let nw = self.neighbors(w).bits() | 1 << (w - 1);
        VertexSubset(self.adj[v - 1] & !nw)
    }
}

/// Grows `seed` to the union of the components of `adj[within]` it touches.
pub(crate) fn flood(adj: &[u32], seed: u32, within: u32) -> u32 {
    let mut comp = seed & within;
    let mut frontier = comp;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        next &= within & !comp;
        comp |= next;
        frontier = next;
    }
    comp
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(k={}, edges={:?})", self.adj.len(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_construction() {
        let g = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(2, 1));
        assert!(!g.has_edge(1, 3));
        assert_eq!(g.degree(2), 2);
        assert_eq!(g.edges(), vec![(1, 2), (2, 3), (3, 4)]);
        assert!(g.is_connected());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Graph::new(0).is_err());
        assert!(matches!(Graph::new(26), Err(Error::Range { .. })));
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(matches!(
            Graph::from_edges(3, &[(1, 4)]),
            Err(Error::VertexOutOfRange { vertex: 4, k: 3 })
        ));
    }

    #[test]
    fn components_and_removal() {
        let g = Graph::from_edges(5, &[(1, 2), (3, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[1], VertexSubset::from_vertices([3, 4]).unwrap());
        let h = g.remove_vertex(2).unwrap();
        assert_eq!(h.edges(), vec![(2, 3)]);
        assert_eq!(h.vertex_count(), 4);
    }

    #[test]
    fn move_vertex_path_to_star() {
        let g = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let h = g.move_vertex(3, 2).unwrap();
        assert_eq!(h.edges(), vec![(1, 2), (2, 3), (2, 4)]);
        assert_eq!(g.edges(), vec![(1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn move_vertex_across_components() {
        let g = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        let h = g.move_vertex(1, 3).unwrap();
        assert_eq!(h.edges(), vec![(2, 3), (3, 4)]);
        assert_eq!(h.degree(1), 0);
    }

    #[test]
    fn move_vertex_without_private_neighbors() {
        let g = Graph::from_edges(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g.move_vertex(1, 2).unwrap(), g);
        assert!(g.move_vertex(2, 2).is_err());
    }

    #[test]
    fn subset_iteration() {
        let s = VertexSubset::from_vertices([5, 1, 3]).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(s.first(), Some(1));
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_string(), "{1,3,5}");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (2usize..10).prop_flat_map(|k| {
                prop::collection::vec(any::<bool>(), k * (k - 1) / 2).prop_map(move |bits| {
                    let mut g = Graph::new(k).unwrap();
                    let mut it = bits.into_iter();
                    for v in 2..=k {
                        for u in 1..v {
                            if it.next().unwrap() {
                                g.add_edge(u, v).unwrap();
                            }
                        }
                    }
                    g
                })
            })
        }

        proptest! {
            #[test]
            fn move_vertex_preserves_edge_count(g in arb_graph(), a in 0usize..100, b in 0usize..100) {
                let k = g.vertex_count();
                let v = a % k + 1;
                let w = b % k + 1;
                prop_assume!(v != w);
                let h = g.move_vertex(v, w).unwrap();
                prop_assert_eq!(h.edge_count(), g.edge_count());
                prop_assert!(h.private_neighbors(v, w).is_empty());
            }
        }
    }
}
