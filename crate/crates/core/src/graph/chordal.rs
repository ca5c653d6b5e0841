use super::Graph;

/// Maximum cardinality search; returns vertices (0-based) in visit order.
/// Ties go to the lowest label.
fn maximum_cardinality_search(adj: &[u32]) -> Vec<usize> {
    let k = adj.len();
    let mut weight = vec![0u32; k];
    let mut numbered = 0u32;
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let v = (0..k)
            .filter(|&v| numbered & (1 << v) == 0)
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("an unnumbered vertex remains");
        numbered |= 1 << v;
        order.push(v);
        let mut nb = adj[v] & !numbered;
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            weight[u] += 1;
        }
    }
    order
}

fn is_perfect_elimination(adj: &[u32], peo: &[usize]) -> bool {
    let mut pos = vec![0usize; adj.len()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let mut later = 0u32;
    for &v in peo.iter().rev() {
        let followers = adj[v] & later;
        if followers != 0 {
            let mut f = followers;
            let mut parent = f.trailing_zeros() as usize;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                if pos[u] < pos[parent] {
                    parent = u;
                }
            }
            let rest = followers & !(1 << parent);
            if rest & !adj[parent] != 0 {
                return false;
            }
        }
        later |= 1 << v;
    }
    true
}

/// A perfect elimination ordering (1-based), or `None` if `g` is not chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let mut order = maximum_cardinality_search(g.masks());
    order.reverse();
    is_perfect_elimination(g.masks(), &order).then(|| order.into_iter().map(|v| v + 1).collect())
}

/// No induced cycle of length four or more.
pub fn is_chordal(g: &Graph) -> bool {
    if g.vertex_count() <= 3 {
        return true;
    }
    perfect_elimination_ordering(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    /// Brute force: some subset of size ≥ 4 induces a cycle.
    fn has_induced_long_cycle(g: &Graph) -> bool {
        let k = g.vertex_count();
        let adj = g.masks();
        (0u32..1 << k).any(|w| {
            w.count_ones() >= 4
                && (0..k)
                    .filter(|v| w & (1 << v) != 0)
                    .all(|v| (adj[v] & w).count_ones() == 2)
                && crate::graph::flood(adj, w & w.wrapping_neg(), w) == w
        })
    }

    #[test]
    fn small_examples() {
        assert!(!is_chordal(&generators::cycle(4).unwrap()));
        assert!(is_chordal(&generators::path(6).unwrap()));
        assert!(is_chordal(
            &Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]).unwrap()
        ));
        assert!(is_chordal(&generators::complete(7).unwrap()));
        assert!(!is_chordal(&generators::cycle(7).unwrap()));
    }

    #[test]
    fn peo_is_returned() {
        let g = generators::fan_triangulation(6).unwrap();
        let peo = perfect_elimination_ordering(&g).unwrap();
        let mut sorted = peo.clone();
        sorted.sort();
        assert_eq!(sorted, (1..=6).collect::<Vec<_>>());
    }

    #[test]
    fn agrees_with_brute_force_on_all_graphs_up_to_six_vertices() {
        for k in 1..=6 {
            let pairs: Vec<(usize, usize)> =
                (2..=k).flat_map(|v| (1..v).map(move |u| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(k, &edges).unwrap();
                assert_eq!(is_chordal(&g), !has_induced_long_cycle(&g), "{g:?}");
            }
        }
    }
}
