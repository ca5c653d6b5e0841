//! Threshold graphs: construction words, their reduced Betti vectors, the
//! inversion from a Betti vector back to a word, and threshold
//! representatives of chordal graphs.

use std::fmt;
use std::str::FromStr;

use crate::diagram::ReducedBettiVector;
use crate::error::{guard, Error, Result};
use crate::exact::eta_vector;
use crate::graph::{is_chordal, Graph};

pub const MAX_SEQUENCE_LEN: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    /// Add an isolated vertex.
    Isolated,
    /// Add a dominating vertex.
    Dominating,
}

impl Op {
    pub fn symbol(self) -> char {
        match self {
            Op::Isolated => 'I',
            Op::Dominating => 'D',
        }
    }
}

/// A word over `{I, D}` applied left to right to a single vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThresholdSequence(Vec<Op>);

impl ThresholdSequence {
    pub fn new(ops: Vec<Op>) -> Self {
        ThresholdSequence(ops)
    }

    pub fn ops(&self) -> &[Op] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.0.len() + 1
    }

    /// All `2^n` words of length `n`, in binary order with `I < D`.
    pub fn all(n: usize) -> impl Iterator<Item = ThresholdSequence> {
        (0u64..1 << n).map(move |bits| {
            ThresholdSequence(
                (0..n)
                    .map(|i| {
                        if bits >> (n - 1 - i) & 1 == 1 {
                            Op::Dominating
                        } else {
                            Op::Isolated
                        }
                    })
                    .collect(),
            )
        })
    }

    /// The word builds a complete graph.
    pub fn is_complete(&self) -> bool {
        self.0.iter().all(|&op| op == Op::Dominating)
    }
}

impl fmt::Display for ThresholdSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0
            .iter()
            .try_for_each(|op| write!(f, "{}", op.symbol()))
    }
}

impl FromStr for ThresholdSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'I' | 'i' => Ok(Op::Isolated),
                'D' | 'd' => Ok(Op::Dominating),
                other => Err(Error::Parse(format!("threshold word contains {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(ThresholdSequence)
    }
}

/// The threshold graph of `s`; the vertex added by step `i` is labeled `i + 1`.
pub fn build_graph(s: &ThresholdSequence) -> Result<Graph> {
    guard("threshold word length", s.len(), MAX_SEQUENCE_LEN)?;
    let mut g = Graph::new(s.vertex_count())?;
    for (i, &op) in s.ops().iter().enumerate() {
        let new = i + 2;
        if op == Op::Dominating {
            for u in 1..new {
                g.add_edge(u, new)?;
            }
        }
    }
    Ok(g)
}

/// Adding an isolated vertex to a graph on `k` vertices: `ω ↦ ωΛ + η_k`.
fn isolated_step(omega: &[i64]) -> Result<Vec<i64>> {
    let k = omega.len() + 1;
    let eta = eta_vector(k)?;
    (0..k)
        .map(|j| {
            let here = omega.get(j).copied().unwrap_or(0);
            let prev = if j > 0 { omega[j - 1] } else { 0 };
            here.checked_add(prev)
                .and_then(|x| x.checked_add(eta[j]))
                .ok_or(Error::Overflow("isolated-vertex step"))
        })
        .collect()
}

/// Reduced Betti vector of the threshold graph of `s`, by the recursion
/// `D: ω ↦ [ω | 0]`, `I: ω ↦ ωΛ + η`.
pub fn threshold_omega(s: &ThresholdSequence) -> Result<ReducedBettiVector> {
    guard("threshold word length", s.len(), MAX_SEQUENCE_LEN)?;
    let mut omega: Vec<i64> = Vec::with_capacity(s.len());
    for &op in s.ops() {
        match op {
            Op::Dominating => omega.push(0),
            Op::Isolated => omega = isolated_step(&omega)?,
        }
    }
    Ok(ReducedBettiVector::from_raw(omega))
}

/// One backward step of [`invert_omega`]: the operation undone and the
/// vector left behind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionStep {
    pub op: Op,
    pub remaining: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdInversion {
    pub sequence: ThresholdSequence,
    pub steps: Vec<InversionStep>,
}

/// Peels operations off the end of `omega`: a trailing zero undoes a
/// dominating vertex, anything else undoes an isolated one via
/// `(ω − η_n)·Λ⁻¹`, checked by re-applying the forward step.
pub fn invert_omega(omega: &[i64]) -> Result<ThresholdInversion> {
    guard("reduced Betti vector length", omega.len(), MAX_SEQUENCE_LEN)?;
    if let Some(pos) = omega.iter().position(|&x| x < 0) {
        return Err(Error::NotRealizable(format!(
            "entry {} is negative",
            pos + 1
        )));
    }
    let mut current = omega.to_vec();
    let mut steps = Vec::with_capacity(omega.len());
    while !current.is_empty() {
        if current.iter().all(|&x| x == 0) {
            while current.pop().is_some() {
                steps.push(InversionStep {
                    op: Op::Dominating,
                    remaining: current.clone(),
                });
            }
            break;
        }
        let n = current.len();
        if current[n - 1] == 0 {
            current.pop();
            steps.push(InversionStep {
                op: Op::Dominating,
                remaining: current.clone(),
            });
            continue;
        }
        let eta = eta_vector(n)?;
        let shifted: Vec<i64> = current
            .iter()
            .zip(&eta)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow("ω − η")))
            .collect::<Result<_>>()?;
        // y_j = Σ_{i ≤ j} (−1)^{i+j} x_i
        let mut prev = Vec::with_capacity(n - 1);
        let mut run = 0i64;
        for &x in &shifted[..n - 1] {
            run = x.checked_sub(run).ok_or(Error::Overflow("(ω − η)Λ⁻¹"))?;
            prev.push(run);
        }
        if let Some(pos) = prev.iter().position(|&x| x < 0) {
            return Err(Error::NotRealizable(format!(
                "undoing an isolated vertex from {current:?} leaves a negative entry at position {}",
                pos + 1
            )));
        }
        if isolated_step(&prev)? != current {
            return Err(Error::NotRealizable(format!(
                "{current:?} is not the image of {prev:?} under an isolated-vertex step"
            )));
        }
        current = prev;
        steps.push(InversionStep {
            op: Op::Isolated,
            remaining: current.clone(),
        });
    }
    let mut ops: Vec<Op> = steps.iter().map(|s| s.op).collect();
    ops.reverse();
    Ok(ThresholdInversion {
        sequence: ThresholdSequence(ops),
        steps,
    })
}

/// The unique threshold word whose graph has reduced Betti vector `omega`.
pub fn omega_to_threshold(omega: &[i64]) -> Result<ThresholdSequence> {
    invert_omega(omega).map(|inv| inv.sequence)
}

/// Reads off the construction word of a threshold graph, or `None` if `g` is
/// not threshold.
pub fn threshold_word(g: &Graph) -> Option<ThresholdSequence> {
    let mut g = g.clone();
    let mut ops = Vec::new();
    while g.vertex_count() > 1 {
        let k = g.vertex_count();
        let (v, op) = (1..=k).find_map(|v| match g.degree(v) {
            0 => Some((v, Op::Isolated)),
            d if d == k - 1 => Some((v, Op::Dominating)),
            _ => None,
        })?;
        ops.push(op);
        g = g.remove_vertex(v).ok()?;
    }
    ops.reverse();
    Some(ThresholdSequence(ops))
}

pub fn is_threshold(g: &Graph) -> bool {
    threshold_word(g).is_some()
}

/// Pivot rule: lowest-labeled vertex of maximum degree.
fn pivot(g: &Graph) -> usize {
    (1..=g.vertex_count())
        .max_by(|&a, &b| g.degree(a).cmp(&g.degree(b)).then(b.cmp(&a)))
        .expect("graph has a vertex")
}

/// Vertices at distance exactly two from `v`.
fn second_neighborhood(g: &Graph, v: usize) -> crate::graph::VertexSubset {
    let nv = g.neighbors(v);
    let reach = nv
        .iter()
        .fold(crate::graph::VertexSubset::empty(), |acc, x| {
            acc.union(g.neighbors(x))
        });
    reach
        .difference(nv)
        .difference(crate::graph::VertexSubset::from_bits(1 << (v - 1)))
}

/// Threshold word of a chordal graph's threshold representative.
pub fn threshold_representative(g: &Graph) -> Result<ThresholdSequence> {
    threshold_representative_traced(g, |_, _| {})
}

/// As [`threshold_representative`], reporting every rewrite `G ↦ G_{x→y}` to
/// `observe(before, after)`.
pub fn threshold_representative_traced(
    g: &Graph,
    mut observe: impl FnMut(&Graph, &Graph),
) -> Result<ThresholdSequence> {
    if !is_chordal(g) {
        return Err(Error::NotChordal);
    }
    let mut g = g.clone();
    let mut ops = Vec::with_capacity(g.vertex_count() - 1);
    while g.vertex_count() > 1 {
        let v = pivot(&g);
        let op = if g.is_connected() {
            while let Some(u) = second_neighborhood(&g, v).first() {
                let w = g
                    .neighbors(v)
                    .intersection(g.neighbors(u))
                    .first()
                    .expect("a vertex at distance two has a common neighbour");
                let next = g.move_vertex(w, v)?;
                debug_check_rewrite(&g, &next);
                observe(&g, &next);
                g = next;
            }
            Op::Dominating
        } else {
            let w = g
                .vertices()
                .difference(g.component_of(v))
                .first()
                .expect("disconnected graph has a second component");
            let next = g.move_vertex(v, w)?;
            debug_check_rewrite(&g, &next);
            observe(&g, &next);
            g = next;
            Op::Isolated
        };
        ops.push(op);
        g = g.remove_vertex(v)?;
    }
    ops.reverse();
    Ok(ThresholdSequence(ops))
}

#[inline]
fn debug_check_rewrite(before: &Graph, after: &Graph) {
    if cfg!(debug_assertions) && before.vertex_count() <= 12 {
        debug_assert!(is_chordal(after), "rewrite broke chordality: {after:?}");
        debug_assert_eq!(
            crate::graph::froberg_vector(before).ok(),
            crate::graph::froberg_vector(after).ok(),
            "rewrite changed the Betti vector"
        );
    }
}
