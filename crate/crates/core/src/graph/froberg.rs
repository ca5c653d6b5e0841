use rayon::prelude::*;

use super::{flood, Graph, VertexSubset};
use crate::diagram::ReducedBettiVector;
use crate::error::{guard, Error, Result};

/// Largest vertex count accepted by [`froberg_vector`], which visits all
/// `2^k` vertex subsets.
pub const MAX_FROBERG_VERTICES: usize = 22;

const PARALLEL_FROM: usize = 16;

fn count_components(adj: &[u32], mut w: u32) -> u32 {
    let mut count = 0;
    while w != 0 {
        w &= !flood(adj, w & w.wrapping_neg(), w);
        count += 1;
    }
    count
}

/// `κ(G[W])`, the number of connected components of the induced subgraph.
pub fn component_count(g: &Graph, w: VertexSubset) -> Result<usize> {
    if !w.is_subset(g.vertices()) {
        let bad = w.difference(g.vertices()).first().unwrap_or(0);
        return Err(Error::VertexOutOfRange {
            vertex: bad,
            k: g.vertex_count(),
        });
    }
    Ok(count_components(g.masks(), w.bits()) as usize)
}

fn accumulate(adj: &[u32], range: std::ops::Range<u32>, acc: &mut [i64]) {
    for w in range {
        let size = w.count_ones() as usize;
        if size >= 2 {
            acc[size - 2] += i64::from(count_components(adj, w)) - 1;
        }
    }
}

/// `ω_i = Σ_{|W| = i+1} (κ(G[W]) − 1)` for `1 ≤ i ≤ k − 1`.
///
/// This is the reduced Betti vector of `k[G]` when `G` is chordal; for other
/// graphs it is just the value of the formula.
pub fn froberg_vector(g: &Graph) -> Result<ReducedBettiVector> {
    let k = g.vertex_count();
    guard("vertex count", k, MAX_FROBERG_VERTICES)?;
    let adj = g.masks();
    let total = 1u32 << k;
    let omega = if k < PARALLEL_FROM {
        let mut acc = vec![0i64; k - 1];
        accumulate(adj, 0..total, &mut acc);
        acc
    } else {
        let chunk = 1u32 << 12;
        (0..total / chunk)
            .into_par_iter()
            .map(|c| {
                let mut acc = vec![0i64; k - 1];
                accumulate(adj, c * chunk..(c + 1) * chunk, &mut acc);
                acc
            })
            .reduce(
                || vec![0i64; k - 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    };
    Ok(ReducedBettiVector::from_raw(omega))
}
