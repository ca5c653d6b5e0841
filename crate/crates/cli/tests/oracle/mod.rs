//! Reference implementations that share no code with the library. Each one
//! works from a definition, not from the closed forms the library uses.

#![allow(dead_code)]

use betti_core::BigRational as Q;
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn q(x: i64) -> Q {
    Q::from_integer(BigInt::from(x))
}

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

pub type Mat = Vec<Vec<Q>>;

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect()
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let inner = b.len();
    let cols = b[0].len();
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Q::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn inverse(a: &Mat) -> Option<Mat> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(identity(n))
        .map(|(r, e)| r.iter().cloned().chain(e).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Row `l` is the second row of the pure diagram of degrees
/// `(0, 2, 3, …, l+1)` normalised to `β₀,₀ = 1`, padded with zeros.
pub fn pure_rows(n: usize) -> Mat {
    (1..=n)
        .map(|l| {
            let d: Vec<i64> = std::iter::once(0).chain(2..=l as i64 + 1).collect();
            (1..=n)
                .map(|i| {
                    if i > l {
                        return Q::zero();
                    }
                    // β_i = Π_{j ≠ 0, i} d_j / |d_j − d_i|
                    (1..=l)
                        .filter(|&j| j != i)
                        .fold(Q::one(), |acc, j| acc * q(d[j]) / q((d[j] - d[i]).abs()))
                })
                .collect()
        })
        .collect()
}

pub fn pascal(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| q(binom(i as i64, j as i64))).collect())
        .collect()
}

pub fn is_integral(m: &Mat) -> bool {
    m.iter().flatten().all(|x| x.is_integer())
}

pub fn row_times(v: &[i64], m: &Mat) -> Vec<Q> {
    (0..m[0].len())
        .map(|j| {
            v.iter()
                .zip(m)
                .fold(Q::zero(), |acc, (x, r)| acc + q(*x) * &r[j])
        })
        .collect()
}

/// Adjacency bitmasks, vertex `v` at bit `v − 1`.
pub fn masks(g: &betti_core::Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.vertex_count()];
    for (u, v) in g.edges() {
        adj[u - 1] |= 1 << (v - 1);
        adj[v - 1] |= 1 << (u - 1);
    }
    adj
}

/// `Σ_W (κ(G[W]) − 1)` over subsets of each size, by brute force.
pub fn froberg(adj: &[u32]) -> Vec<i64> {
    let k = adj.len();
    let mut omega = vec![0i64; k.saturating_sub(1)];
    for s in 1u32..(1u32 << k) {
        let size = s.count_ones() as usize;
        if size < 2 {
            continue;
        }
        let mut rest = s;
        let mut comps = 0i64;
        while rest != 0 {
            let seed = 1u32 << rest.trailing_zeros();
            let mut comp = seed;
            let mut frontier = seed;
            while frontier != 0 {
                let u = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = adj[u] & s & !comp;
                comp |= new;
                frontier |= new;
            }
            rest &= !comp;
            comps += 1;
        }
        omega[size - 2] += comps - 1;
    }
    omega
}

/// Chordal iff simplicial vertices can be stripped one by one.
pub fn is_chordal(adj: &[u32]) -> bool {
    let mut alive: u32 = if adj.len() == 32 {
        !0
    } else {
        (1 << adj.len()) - 1
    };
    while alive != 0 {
        let simplicial = (0..adj.len()).filter(|&v| alive >> v & 1 == 1).find(|&v| {
            let nb = adj[v] & alive;
            (0..adj.len())
                .filter(|&u| nb >> u & 1 == 1)
                .all(|u| nb & !(1 << u) & !adj[u] == 0)
        });
        match simplicial {
            Some(v) => alive &= !(1 << v),
            None => return false,
        }
    }
    true
}

/// Threshold iff isolated or dominating vertices can be stripped one by one.
pub fn is_threshold(adj: &[u32]) -> bool {
    let mut alive: u32 = (1 << adj.len()) - 1;
    while alive.count_ones() > 1 {
        let others = |v: usize| alive & !(1 << v);
        let next = (0..adj.len())
            .filter(|&v| alive >> v & 1 == 1)
            .find(|&v| adj[v] & alive == 0 || adj[v] & alive == others(v));
        match next {
            Some(v) => alive &= !(1 << v),
            None => return false,
        }
    }
    true
}

/// Builds the threshold graph of a word over `I`/`D`.
pub fn build(word: &str) -> Vec<u32> {
    let mut adj = vec![0u32];
    for (i, ch) in word.chars().enumerate() {
        let v = i + 1;
        let mut row = 0u32;
        if ch == 'D' {
            for (u, r) in adj.iter_mut().enumerate() {
                *r |= 1 << v;
                row |= 1 << u;
            }
        }
        adj.push(row);
    }
    adj
}

/// `t ≥ λ₁/1 ≥ λ₂/2 ≥ ⋯ ≥ λₙ/n ≥ 0`.
pub fn is_alhc(lambda: &[i64], t: i64) -> bool {
    let Some(&first) = lambda.first() else {
        return true;
    };
    if first > t || *lambda.last().unwrap() < 0 {
        return false;
    }
    lambda
        .windows(2)
        .enumerate()
        .all(|(i, w)| w[0] * (i as i64 + 2) >= w[1] * (i as i64 + 1))
}

/// Integer points in a box, filtered by a predicate.
pub fn box_points(lo: &[i64], hi: &[i64], mut keep: impl FnMut(&[i64]) -> bool) -> Vec<Vec<i64>> {
    let n = lo.len();
    let mut out = Vec::new();
    let mut cur = lo.to_vec();
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return out;
    }
    loop {
        if keep(&cur) {
            out.push(cur.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
        }
    }
}

/// Lattice points of `t·conv(rows of the pure-diagram matrix)`, expressed in
/// `λ = ωΨ⁻¹` coordinates. The box comes from the vertices themselves.
pub struct SimplexOracle {
    pub n: usize,
    /// Vertices in λ coordinates.
    pub vertices: Vec<Vec<i64>>,
    /// `L·(ΨΩ⁻¹)` as integers, and `L`.
    scaled: Vec<Vec<i64>>,
    scale: i64,
}

impl SimplexOracle {
    pub fn new(n: usize) -> Self {
        let omega = pure_rows(n);
        let psi = pascal(n);
        let psi_inv = inverse(&psi).expect("Pascal matrix is invertible");
        let omega_inv = inverse(&omega).expect("pure diagrams are independent");
        let vertices: Vec<Vec<i64>> = mul(&omega, &psi_inv)
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_integer().try_into().unwrap())
                    .collect()
            })
            .collect();
        let m = mul(&psi, &omega_inv);
        let scale = m.iter().flatten().fold(BigInt::one(), |acc, x| {
            num_integer::Integer::lcm(&acc, x.denom())
        });
        let scaled = m
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| {
                        (x * Q::from_integer(scale.clone()))
                            .to_integer()
                            .try_into()
                            .unwrap()
                    })
                    .collect()
            })
            .collect();
        SimplexOracle {
            n,
            vertices,
            scaled,
            scale: scale.try_into().unwrap(),
        }
    }

    /// `λ` lies in `t·Qₙ`: barycentric weights `λΨΩ⁻¹` are nonnegative and
    /// sum to `t`.
    pub fn contains(&self, lambda: &[i64], t: i64) -> bool {
        let mut total = 0;
        for j in 0..self.n {
            let c: i64 = lambda.iter().zip(&self.scaled).map(|(x, r)| x * r[j]).sum();
            if c < 0 {
                return false;
            }
            total += c;
        }
        total == t * self.scale
    }

    pub fn points(&self, t: i64) -> Vec<Vec<i64>> {
        let lo: Vec<i64> = (0..self.n)
            .map(|i| t * self.vertices.iter().map(|v| v[i]).min().unwrap().min(0))
            .collect();
        let hi: Vec<i64> = (0..self.n)
            .map(|i| t * self.vertices.iter().map(|v| v[i]).max().unwrap().max(0))
            .collect();
        box_points(&lo, &hi, |p| self.contains(p, t))
    }
}
