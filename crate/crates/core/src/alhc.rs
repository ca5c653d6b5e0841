//! Anti-lecture hall compositions, their bijection with reduced Betti vectors
//! through `Ψ`, and decomposition of module diagrams into threshold graphs.

use std::collections::HashSet;
use std::fmt;

use crate::diagram::ReducedBettiVector;
use crate::error::{guard, Error, Result};
use crate::exact::{binomial, MAX_CLOSED_FORM};
use crate::threshold::{omega_to_threshold, threshold_omega, ThresholdSequence};

/// Enumeration guard for compositions: length and bound.
pub const MAX_ALHC_LEN: usize = 12;
pub const MAX_ALHC_BOUND: i64 = 8;

/// `t ≥ λ₁/1 ≥ λ₂/2 ≥ ⋯ ≥ λ_n/n ≥ 0`, compared by cross-multiplication.
pub fn is_alhc(lambda: &[i64], t: i64) -> bool {
    let Some(&first) = lambda.first() else {
        return t >= 0;
    };
    let within = lambda.windows(2).enumerate().all(|(i, w)| {
        let i = i as i128 + 1;
        // λ_i / i ≥ λ_{i+1} / (i+1)
        (i + 1) * i128::from(w[0]) >= i * i128::from(w[1])
    });
    t >= first && within && *lambda.last().unwrap() >= 0
}

/// An anti-lecture hall composition with its bound.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alhc {
    lambda: Vec<i64>,
    bound: i64,
}

impl Alhc {
    pub fn new(lambda: Vec<i64>, bound: i64) -> Result<Self> {
        if !is_alhc(&lambda, bound) {
            return Err(Error::Invalid(format!(
                "{lambda:?} is not an anti-lecture hall composition bounded by {bound}"
            )));
        }
        Ok(Alhc { lambda, bound })
    }

    pub fn parts(&self) -> &[i64] {
        &self.lambda
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }
}

impl fmt::Display for Alhc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lambda.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

fn checked_dot_binomial(
    values: &[i64],
    coeff: impl Fn(usize, usize) -> Result<i64>,
) -> Result<Vec<i64>> {
    let n = values.len();
    guard("vector length", n, MAX_CLOSED_FORM)?;
    (0..n)
        .map(|j| {
            values.iter().enumerate().try_fold(0i64, |acc, (i, &x)| {
                let term = x
                    .checked_mul(coeff(i, j)?)
                    .ok_or(Error::Overflow("Ψ product"))?;
                acc.checked_add(term).ok_or(Error::Overflow("Ψ product"))
            })
        })
        .collect()
}

/// `λ = ω·Ψ⁻¹`, with `(Ψ⁻¹)_{ij} = (−1)^{i−j} C(i−1, j−1)`.
pub fn omega_to_lambda(omega: &[i64]) -> Result<Vec<i64>> {
    checked_dot_binomial(omega, |i, j| {
        let b = binomial(i as u64, j as u64)?;
        Ok(if (i + j) % 2 == 0 { b } else { -b })
    })
}

/// `ω = λ·Ψ`, with `Ψ_{ij} = C(i−1, j−1)`.
pub fn alhc_to_omega(lambda: &[i64]) -> Result<Vec<i64>> {
    checked_dot_binomial(lambda, |i, j| binomial(i as u64, j as u64))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlhcImage {
    pub lambda: Vec<i64>,
    /// `λ` is an anti-lecture hall composition with `λ₁ = 1`, i.e. `ω` is a
    /// lattice point of the simplex spanned by the rows of `Ω`.
    pub lattice_point: bool,
}

pub fn omega_to_alhc(omega: &[i64]) -> Result<AlhcImage> {
    let lambda = omega_to_lambda(omega)?;
    let lattice_point = lambda.first() == Some(&1) && is_alhc(&lambda, 1);
    Ok(AlhcImage {
        lambda,
        lattice_point,
    })
}

/// Largest `λ_{i+1}` allowed after `λ_i` (1-based `i`): `⌊(i+1)λ_i / i⌋`.
fn next_max(prev: i64, i: usize) -> i64 {
    (prev * (i as i64 + 1)).div_euclid(i as i64)
}

fn check_enumeration(n: usize, t: i64) -> Result<()> {
    guard("composition length", n, MAX_ALHC_LEN)?;
    if t < 0 {
        return Err(Error::Invalid("bound must be non-negative".into()));
    }
    guard("bound", t as usize, MAX_ALHC_BOUND as usize)
}

/// Visits every composition of length `n` bounded by `t` whose first part
/// lies in `first`, in lexicographic order.
fn visit(n: usize, first: std::ops::RangeInclusive<i64>, f: &mut impl FnMut(&[i64])) {
    fn go(buf: &mut Vec<i64>, n: usize, f: &mut impl FnMut(&[i64])) {
        if buf.len() == n {
            f(buf);
            return;
        }
        let i = buf.len();
        let max = next_max(buf[i - 1], i);
        for x in 0..=max {
            buf.push(x);
            go(buf, n, f);
            buf.pop();
        }
    }
    if n == 0 {
        f(&[]);
        return;
    }
    let mut buf = Vec::with_capacity(n);
    for a in first {
        buf.push(a);
        go(&mut buf, n, f);
        buf.pop();
    }
}

/// All compositions of length `n` bounded by `t`.
pub fn enumerate_alhc(n: usize, t: i64) -> Result<Vec<Vec<i64>>> {
    check_enumeration(n, t)?;
    let mut out = Vec::new();
    visit(n, 0..=t, &mut |l| out.push(l.to_vec()));
    Ok(out)
}

/// All compositions of length `n ≥ 1` with first part exactly `t`.
pub fn enumerate_alhc_with_first(n: usize, t: i64) -> Result<Vec<Vec<i64>>> {
    check_enumeration(n, t)?;
    let mut out = Vec::new();
    visit(n, t..=t, &mut |l| out.push(l.to_vec()));
    Ok(out)
}

/// Number of compositions of length `n` bounded by `t`, by summing over the
/// value of the last part one position at a time.
pub fn count_alhc(n: usize, t: i64) -> Result<u128> {
    check_enumeration(n, t)?;
    if n == 0 {
        return Ok(1);
    }
    // ways[x] = number of valid prefixes ending in x
    let mut ways: Vec<u128> = vec![1; t as usize + 1];
    for i in 1..n {
        let max_next = next_max(t * i as i64, i) as usize;
        let mut next = vec![0u128; max_next + 1];
        for (x, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for slot in next.iter_mut().take(next_max(x as i64, i) as usize + 1) {
                *slot += w;
            }
        }
        ways = next;
    }
    Ok(ways.iter().sum())
}

/// One summand of a module decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub sequence: ThresholdSequence,
    pub omega: ReducedBettiVector,
    pub lambda: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecomposition {
    pub summands: Vec<Summand>,
    /// Candidate summands rejected before the search succeeded.
    pub backtracks: u64,
}

struct Search {
    n: usize,
    failed: HashSet<Vec<i64>>,
    backtracks: u64,
}

impl Search {
    /// Splits `lambda` (first part `m`) into `m` compositions with first
    /// part 1, largest parts first.
    fn split(&mut self, lambda: &[i64], m: i64, out: &mut Vec<Vec<i64>>) -> bool {
        if m == 1 {
            out.push(lambda.to_vec());
            return true;
        }
        if self.failed.contains(lambda) {
            return false;
        }
        let mut mu = Vec::with_capacity(self.n);
        mu.push(1);
        if self.choose(lambda, m, &mut mu, out) {
            return true;
        }
        self.failed.insert(lambda.to_vec());
        false
    }

    fn choose(
        &mut self,
        lambda: &[i64],
        m: i64,
        mu: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) -> bool {
        let i = mu.len();
        if i == self.n {
            let rest: Vec<i64> = lambda.iter().zip(mu.iter()).map(|(a, b)| a - b).collect();
            if self.split(&rest, m - 1, out) {
                out.push(mu.clone());
                return true;
            }
            self.backtracks += 1;
            return false;
        }
        let rest_prev = lambda[i - 1] - mu[i - 1];
        for x in (0..=next_max(mu[i - 1], i)).rev() {
            let rest = lambda[i] - x;
            // remainder stays an anti-lecture hall chain at this position
            if rest < 0 || (i as i64 + 1) * rest_prev < i as i64 * rest {
                continue;
            }
            mu.push(x);
            let found = self.choose(lambda, m, mu, out);
            mu.pop();
            if found {
                return true;
            }
        }
        false
    }
}

/// Splits a lattice point `λ` of `m·Qₙ` (an anti-lecture hall composition
/// with first part `m`) into `m` lattice points of `Qₙ`.
pub fn decompose_alhc(lambda: &[i64], m: i64) -> Result<(Vec<Vec<i64>>, u64)> {
    if m < 1 {
        return Err(Error::Invalid("β₀,₀ must be positive".into()));
    }
    if lambda.is_empty() {
        return Err(Error::Invalid("empty composition".into()));
    }
    if lambda[0] != m || !is_alhc(lambda, m) {
        return Err(Error::NotInCone(format!(
            "λ = {lambda:?} is not an anti-lecture hall composition with first part {m}"
        )));
    }
    let mut search = Search {
        n: lambda.len(),
        failed: HashSet::new(),
        backtracks: 0,
    };
    let mut parts = Vec::with_capacity(m as usize);
    if !search.split(lambda, m, &mut parts) {
        return Err(Error::NotInCone(format!(
            "no decomposition of {lambda:?} into {m} compositions was found"
        )));
    }
    parts.reverse();
    let resum: Vec<i64> = (0..lambda.len())
        .map(|j| parts.iter().map(|p| p[j]).sum())
        .collect();
    assert_eq!(resum, lambda, "decomposition does not re-sum");
    Ok((parts, search.backtracks))
}

/// Writes a 2-linear module diagram `(m; ω)` as the diagram of a direct sum
/// of `m` threshold-graph rings.
pub fn decompose_module(omega: &[i64], m: u64) -> Result<ModuleDecomposition> {
    let m = i64::try_from(m).map_err(|_| Error::Overflow("β₀,₀"))?;
    if omega.iter().any(|&x| x < 0) {
        return Err(Error::NotInCone("ω has a negative entry".into()));
    }
    let lambda = omega_to_lambda(omega)?;
    let (parts, backtracks) = decompose_alhc(&lambda, m)?;
    let summands = parts
        .into_iter()
        .map(|mu| {
            let w = alhc_to_omega(&mu)?;
            let sequence = omega_to_threshold(&w)?;
            let omega = threshold_omega(&sequence)?;
            debug_assert_eq!(omega.entries(), &w[..]);
            Ok(Summand {
                sequence,
                omega,
                lambda: mu,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total = vec![0i64; omega.len()];
    for s in &summands {
        for (t, x) in total.iter_mut().zip(s.omega.iter()) {
            *t += x;
        }
    }
    assert_eq!(total, omega, "module decomposition does not re-sum");
    Ok(ModuleDecomposition {
        summands,
        backtracks,
    })
}
