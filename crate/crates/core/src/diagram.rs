//! Betti diagrams, pure diagrams and the Boij–Söderberg decomposition of
//! 2-linear diagrams.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{omega_inverse, sum, ExactScalar};
use crate::Rational;

/// Strictly increasing non-negative degrees `(d₀, …, d_s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeSequence(Vec<u64>);

impl DegreeSequence {
    pub fn new(degrees: Vec<u64>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::Invalid("degree sequence is empty".into()));
        }
        if let Some(w) = degrees.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::Invalid(format!(
                "degree sequence is not strictly increasing at {} >= {}",
                w[0], w[1]
            )));
        }
        Ok(DegreeSequence(degrees))
    }

    /// The sequence `(0, 2, 3, …, l+1)` whose pure diagram is row `l` of `Ω`.
    pub fn linear(l: usize) -> Self {
        let mut d = vec![0];
        d.extend(2..=l as u64 + 1);
        DegreeSequence(d)
    }

    pub fn degrees(&self) -> &[u64] {
        &self.0
    }
}

/// Sparse graded Betti table, keyed by `(i, j)` for `β_{i,j}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BettiTable<T> {
    entries: BTreeMap<(usize, u64), T>,
}

impl<T: ExactScalar> BettiTable<T> {
    pub fn get(&self, i: usize, j: u64) -> T {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, u64), &T)> {
        self.entries.iter()
    }

    /// Every column has at most one nonzero entry.
    pub fn is_pure(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.entries
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .all(|((i, _), _)| seen.insert(*i))
    }

    /// The second row `[β_{1,2}, …, β_{n,n+1}]` padded with zeros to length
    /// `n`, if the table has 2-linear shape.
    pub fn reduced_vector(&self, n: usize) -> Option<Vec<T>> {
        let mut out = vec![T::zero(); n];
        for (&(i, j), v) in &self.entries {
            if v.is_zero() || (i == 0 && j == 0) {
                continue;
            }
            if j != i as u64 + 1 || i == 0 || i > n {
                return None;
            }
            out[i - 1] = v.clone();
        }
        Some(out)
    }
}

/// `π(d)`: entry at `(i, d_i)` is `∏_{k≠0,i} |(d_k − d₀)/(d_k − d_i)|`.
pub fn pure_diagram<T: ExactScalar>(d: &DegreeSequence) -> Result<BettiTable<T>> {
    let d = d.degrees();
    let mut entries = BTreeMap::new();
    for (i, &di) in d.iter().enumerate() {
        let mut value = T::one();
        for (k, &dk) in d.iter().enumerate() {
            if k == 0 || k == i {
                continue;
            }
            let num = i64::try_from(dk.abs_diff(d[0])).map_err(|_| Error::Overflow("π(d)"))?;
            let den = i64::try_from(dk.abs_diff(di)).map_err(|_| Error::Overflow("π(d)"))?;
            let factor = T::from_fraction(num, den).ok_or(Error::Overflow("π(d)"))?;
            value = value.mul_exact(&factor)?;
        }
        entries.insert((i, di), value);
    }
    Ok(BettiTable { entries })
}

/// `ω = [β₁, …, β_n]` with `β_i = β_{i,i+1}`; entries are non-negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ReducedBettiVector(Vec<i64>);

impl ReducedBettiVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if let Some(pos) = entries.iter().position(|&v| v < 0) {
            return Err(Error::Invalid(format!(
                "Betti number at position {} is negative",
                pos + 1
            )));
        }
        Ok(ReducedBettiVector(entries))
    }

    pub(crate) fn from_raw(entries: Vec<i64>) -> Self {
        debug_assert!(entries.iter().all(|&v| v >= 0));
        ReducedBettiVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ReducedBettiVector(vec![0; n])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::Invalid(
                "reduced Betti vectors differ in length".into(),
            ));
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("Betti vector sum")))
            .collect::<Result<Vec<_>>>()
            .map(ReducedBettiVector)
    }
}

impl Deref for ReducedBettiVector {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for ReducedBettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Parses a comma-separated list of integers; the empty string is the empty
/// vector.
pub fn parse_integer_list(s: &str) -> Result<Vec<i64>> {
    let s = s
        .trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("{:?}: {e}", t.trim())))
        })
        .collect()
}

impl FromStr for ReducedBettiVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ReducedBettiVector::new(parse_integer_list(s)?)
    }
}

/// An integer 2-linear Betti diagram: `β_{0,0}` over the single row `ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiDiagram {
    pub beta00: u64,
    pub omega: ReducedBettiVector,
}

impl BettiDiagram {
    pub fn new(beta00: u64, omega: ReducedBettiVector) -> Self {
        BettiDiagram { beta00, omega }
    }
}

impl fmt::Display for BettiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top: Vec<String> = std::iter::once(self.beta00.to_string())
            .chain(self.omega.iter().map(|_| ".".to_string()))
            .collect();
        let bottom: Vec<String> = std::iter::once(".".to_string())
            .chain(self.omega.iter().map(ToString::to_string))
            .collect();
        let widths: Vec<usize> = top
            .iter()
            .zip(&bottom)
            .map(|(a, b)| a.len().max(b.len()))
            .collect();
        for row in [&top, &bottom] {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Boij–Söderberg coefficients `c = ω·Ω⁻¹` with their admissibility flags.
#[derive(Clone, Debug, PartialEq)]
pub struct BsCoefficients<T = Rational> {
    pub c: Vec<T>,
    pub m: u64,
    pub nonneg: bool,
    pub sums_to_m: bool,
}

impl<T: ExactScalar> BsCoefficients<T> {
    pub fn is_admissible(&self) -> bool {
        self.nonneg && self.sums_to_m
    }

    pub fn total(&self) -> Result<T> {
        sum(&self.c)
    }
}

/// Decomposes a 2-linear diagram `(m; ω)` into pure diagrams. Inadmissible
/// coefficients are returned with their flags cleared, not rejected.
pub fn bs_decompose<T: ExactScalar>(omega: &[i64], m: u64) -> Result<BsCoefficients<T>> {
    if omega.is_empty() {
        return Err(Error::Invalid("reduced Betti vector is empty".into()));
    }
    if m == 0 {
        return Err(Error::Invalid("β₀,₀ must be positive".into()));
    }
    let inv = omega_inverse::<T>(omega.len())?;
    let c = inv.left_mul(&crate::exact::lift(omega))?;
    let nonneg = c.iter().all(|x| !x.is_negative());
    let m_i64 = i64::try_from(m).map_err(|_| Error::Overflow("β₀,₀"))?;
    let sums_to_m = sum(&c)? == T::from_i64(m_i64);
    Ok(BsCoefficients {
        c,
        m,
        nonneg,
        sums_to_m,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InadmissibleReason {
    NegativeCoefficient,
    WrongSum,
}

impl fmt::Display for InadmissibleReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InadmissibleReason::NegativeCoefficient => "negative-coefficient",
            InadmissibleReason::WrongSum => "wrong-sum",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    Admissible,
    Inadmissible(InadmissibleReason),
}

impl Certificate {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Certificate::Admissible)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Admissible => f.write_str("admissible"),
            Certificate::Inadmissible(r) => write!(f, "inadmissible ({r})"),
        }
    }
}

/// Tests whether `ω·Ω⁻¹` is a convex combination of pure diagrams. A chordal
/// graph always passes, so failure certifies non-chordality.
///
/// The empty vector (a single vertex) is admissible: its diagram is `π((0))`.
pub fn chordality_certificate(omega: &[i64]) -> Result<Certificate> {
    if omega.is_empty() {
        return Ok(Certificate::Admissible);
    }
    let bs = bs_decompose::<Rational>(omega, 1)?;
    Ok(if !bs.nonneg {
        Certificate::Inadmissible(InadmissibleReason::NegativeCoefficient)
    } else if !bs.sums_to_m {
        Certificate::Inadmissible(InadmissibleReason::WrongSum)
    } else {
        Certificate::Admissible
    })
}
