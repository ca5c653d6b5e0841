//! Standard graph families used as test instances.

use super::Graph;
use crate::error::{Error, Result};

pub fn empty(k: usize) -> Result<Graph> {
    Graph::new(k)
}

pub fn complete(k: usize) -> Result<Graph> {
    let mut g = Graph::new(k)?;
    for v in 2..=k {
        for u in 1..v {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn path(k: usize) -> Result<Graph> {
    let mut g = Graph::new(k)?;
    for v in 2..=k {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::Invalid("a cycle needs at least 3 vertices".into()));
    }
    let mut g = path(k)?;
    g.add_edge(k, 1)?;
    Ok(g)
}

/// Vertex 1 joined to all others.
pub fn star(k: usize) -> Result<Graph> {
    let mut g = Graph::new(k)?;
    for v in 2..=k {
        g.add_edge(1, v)?;
    }
    Ok(g)
}

/// The labeled tree with the given Prüfer code (entries in `1..=len+2`).
pub fn tree_from_prufer(code: &[usize]) -> Result<Graph> {
    let k = code.len() + 2;
    let mut g = Graph::new(k)?;
    let mut degree = vec![1usize; k + 1];
    for &c in code {
        g.check_vertex(c)?;
        degree[c] += 1;
    }
    for &c in code {
        let leaf = (1..=k).find(|&v| degree[v] == 1).expect("a leaf exists");
        g.add_edge(leaf, c)?;
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (1..=k).filter(|&v| degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1])?;
    Ok(g)
}

/// Polygon `1..=k` triangulated by all diagonals from vertex 1.
pub fn fan_triangulation(k: usize) -> Result<Graph> {
    let mut g = cycle(k)?;
    for v in 3..k {
        g.add_edge(1, v)?;
    }
    Ok(g)
}

/// Polygon `1..=k` triangulated by the zigzag `1, 2, k, 3, k−1, …`.
pub fn snake_triangulation(k: usize) -> Result<Graph> {
    let mut g = cycle(k)?;
    let (mut lo, mut hi) = (2, k);
    let mut order = vec![1, 2];
    let mut take_hi = true;
    while order.len() < k {
        if take_hi {
            order.push(hi);
            hi -= 1;
        } else {
            lo += 1;
            order.push(lo);
        }
        take_hi = !take_hi;
    }
    for w in order.windows(2) {
        g.add_edge(w[0], w[1])?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_chordal;

    #[test]
    fn triangulations_have_2k_minus_3_edges() {
        for k in 3..=12 {
            for g in [
                fan_triangulation(k).unwrap(),
                snake_triangulation(k).unwrap(),
            ] {
                assert_eq!(g.edge_count(), 2 * k - 3, "{g:?}");
                assert!(is_chordal(&g));
            }
        }
    }

    #[test]
    fn snake_is_not_a_fan_for_large_k() {
        let g = snake_triangulation(7).unwrap();
        assert!((1..=7).all(|v| g.degree(v) <= 4));
    }

    #[test]
    fn prufer_trees() {
        let t = tree_from_prufer(&[4, 4, 4]).unwrap();
        assert_eq!(t.edges(), vec![(1, 4), (2, 4), (3, 4), (4, 5)]);
        assert_eq!(tree_from_prufer(&[]).unwrap().edges(), vec![(1, 2)]);
        assert!(tree_from_prufer(&[9]).is_err());
    }
}
