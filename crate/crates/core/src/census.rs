//! Isomorph-free enumeration of small graphs and the chordal / false chordal
//! / not chordal census.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use crate::diagram::chordality_certificate;
use crate::error::{guard, Error, Result};
use crate::graph::{froberg_vector, is_chordal, Graph};

pub const MAX_CENSUS_VERTICES: usize = 8;

/// Largest vertex count whose adjacency bit-string fits the 64-bit key.
pub const MAX_CANONICAL_VERTICES: usize = 11;

fn pair_count(k: usize) -> usize {
    k * (k.saturating_sub(1)) / 2
}

/// Edge `{q, p}` (0-based, `q < p`) sits at position `p(p−1)/2 + q` of the
/// bit-string; position 0 is the most significant bit of the key.
fn decode(k: usize, key: u64) -> Vec<u32> {
    let n = pair_count(k);
    let mut adj = vec![0u32; k];
    let mut idx = 0;
    for p in 1..k {
        for q in 0..p {
            if key >> (n - 1 - idx) & 1 == 1 {
                adj[p] |= 1 << q;
                adj[q] |= 1 << p;
            }
            idx += 1;
        }
    }
    adj
}

#[cfg(test)]
fn encode(adj: &[u32]) -> u64 {
    let mut key = 0u64;
    for (p, row) in adj.iter().enumerate().skip(1) {
        for q in 0..p {
            key = key << 1 | u64::from(row >> q & 1);
        }
    }
    key
}

/// Isomorphism-invariant vertex colour: degree, then the sorted degrees of
/// the neighbours.
fn colors(adj: &[u32]) -> Vec<u64> {
    let deg: Vec<u64> = adj.iter().map(|m| u64::from(m.count_ones())).collect();
    adj.iter()
        .enumerate()
        .map(|(v, &m)| {
            let mut nd: Vec<u64> = (0..adj.len())
                .filter(|&u| m >> u & 1 == 1)
                .map(|u| deg[u])
                .collect();
            nd.sort_unstable();
            let mut c = deg[v] << 44;
            for (i, d) in nd.into_iter().enumerate() {
                c |= d << (40 - 4 * i);
            }
            c
        })
        .collect()
}

/// Branch-and-bound over colour-respecting relabelings, comparing the
/// bit-string one vertex segment at a time.
struct Search<'a> {
    adj: &'a [u32],
    /// Vertices allowed at each position.
    slots: Vec<u32>,
    perm: Vec<usize>,
    used: u32,
    cur: Vec<u32>,
    best: Option<Vec<u32>>,
    /// Stop at the first relabeling that beats `best`.
    stop_on_improvement: bool,
    improved: bool,
}

impl Search<'_> {
    fn segment(&self, p: usize) -> u32 {
        let v = self.perm[p];
        (0..p).fold(0, |acc, q| acc << 1 | (self.adj[self.perm[q]] >> v & 1))
    }

    fn run(&mut self, p: usize, cmp: Ordering) {
        // `cmp` is the order of the assigned prefix against the current best
        if self.improved {
            return;
        }
        let k = self.adj.len();
        if p == k {
            if cmp == Ordering::Less {
                self.best = Some(self.cur.clone());
            }
            return;
        }
        let mut cand = self.slots[p] & !self.used;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.perm[p] = v;
            self.used |= 1 << v;
            let seg = self.segment(p);
            self.cur[p] = seg;
            let next = match &self.best {
                Some(best) => self.cur[..=p].cmp(&best[..=p]),
                None => Ordering::Less,
            };
            if next == Ordering::Less && self.stop_on_improvement {
                self.improved = true;
            }
            if next != Ordering::Greater {
                self.run(p + 1, next);
            }
            self.used &= !(1 << v);
            if self.improved {
                return;
            }
        }
    }
}

fn slots_for(adj: &[u32], sorted_colors: &[u64], colors: &[u64]) -> Vec<u32> {
    sorted_colors
        .iter()
        .map(|c| {
            (0..adj.len())
                .filter(|&v| colors[v] == *c)
                .fold(0u32, |m, v| m | 1 << v)
        })
        .collect()
}

/// Canonical key: the smallest bit-string over relabelings that list the
/// vertex colours in increasing order.
fn canonical_key(adj: &[u32]) -> u64 {
    let k = adj.len();
    let col = colors(adj);
    let mut sorted = col.clone();
    sorted.sort_unstable();
    let mut s = Search {
        adj,
        slots: slots_for(adj, &sorted, &col),
        perm: vec![0; k],
        used: 0,
        cur: vec![0; k],
        best: None,
        stop_on_improvement: false,
        improved: false,
    };
    s.run(0, Ordering::Less);
    let best = s.best.expect("at least one relabeling");
    let mut key = 0u64;
    for (p, seg) in best.iter().enumerate() {
        key = key << p | u64::from(*seg);
    }
    key
}

/// Whether the labeled graph is its own canonical form.
fn is_canonical(adj: &[u32]) -> bool {
    let k = adj.len();
    if adj
        .windows(2)
        .any(|w| w[0].count_ones() > w[1].count_ones())
    {
        return false;
    }
    let col = colors(adj);
    if col.windows(2).any(|w| w[0] > w[1]) {
        return false;
    }
    let identity: Vec<u32> = (0..k)
        .map(|p| (0..p).fold(0, |acc, q| acc << 1 | (adj[q] >> p & 1)))
        .collect();
    let mut s = Search {
        adj,
        slots: slots_for(adj, &col, &col),
        perm: vec![0; k],
        used: 0,
        cur: vec![0; k],
        best: Some(identity),
        stop_on_improvement: true,
        improved: false,
    };
    s.run(0, Ordering::Equal);
    !s.improved
}

/// A graph in canonical labeling; equal keys on the same vertex count mean
/// isomorphic graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalGraph {
    k: usize,
    key: u64,
}

impl CanonicalGraph {
    pub fn vertex_count(&self) -> usize {
        self.k
    }

    pub fn key(&self) -> u64 {
        self.key
    }

    pub fn graph(&self) -> Graph {
        Graph::from_masks(decode(self.k, self.key))
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalGraph> {
    guard("vertex count", g.vertex_count(), MAX_CANONICAL_VERTICES)?;
    Ok(CanonicalGraph {
        k: g.vertex_count(),
        key: canonical_key(g.masks()),
    })
}

/// One representative per isomorphism class of graphs on `k` vertices, in
/// increasing key order.
pub fn enumerate_graphs(k: usize) -> Result<Vec<CanonicalGraph>> {
    if k == 0 {
        return Err(Error::Invalid("vertex count must be at least 1".into()));
    }
    guard("vertex count", k, MAX_CENSUS_VERTICES)?;
    let total = 1u64 << pair_count(k);
    let chunk = 1u64 << 12;
    let mut out: Vec<CanonicalGraph> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .flat_map_iter(|c| {
            (c * chunk..((c + 1) * chunk).min(total))
                .filter(move |&key| is_canonical(&decode(k, key)))
                .map(move |key| CanonicalGraph { k, key })
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    Chordal,
    /// Not chordal, but its Fröberg vector passes the Boij–Söderberg
    /// certificate.
    FalseChordal,
    NotChordal,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::Chordal => "chordal",
            Class::FalseChordal => "false chordal",
            Class::NotChordal => "not chordal",
        })
    }
}

pub fn classify(g: &Graph) -> Result<Class> {
    if is_chordal(g) {
        return Ok(Class::Chordal);
    }
    let omega = froberg_vector(g)?;
    Ok(if chordality_certificate(&omega)?.is_admissible() {
        Class::FalseChordal
    } else {
        Class::NotChordal
    })
}

/// Counts per vertex number. `false_chordal` is a subset of `not_chordal`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CensusRow {
    pub k: usize,
    pub chordal: u64,
    pub false_chordal: u64,
    pub not_chordal: u64,
}

impl CensusRow {
    pub fn total(&self) -> u64 {
        self.chordal + self.not_chordal
    }
}

pub fn census_row(k: usize) -> Result<CensusRow> {
    let graphs = enumerate_graphs(k)?;
    let classes: Vec<Class> = graphs
        .par_iter()
        .map(|c| classify(&c.graph()))
        .collect::<Result<_>>()?;
    let mut row = CensusRow {
        k,
        ..CensusRow::default()
    };
    for class in classes {
        match class {
            Class::Chordal => row.chordal += 1,
            Class::FalseChordal => {
                row.false_chordal += 1;
                row.not_chordal += 1;
            }
            Class::NotChordal => row.not_chordal += 1,
        }
    }
    Ok(row)
}

pub fn census_table(kmax: usize) -> Result<Vec<CensusRow>> {
    guard("vertex count", kmax, MAX_CENSUS_VERTICES)?;
    (1..=kmax).map(census_row).collect()
}
