//! The simplices `Pₙ` (spanned by the rows of `Ω`) and `Qₙ` (anti-lecture
//! hall compositions): lattice points of dilations, Ehrhart counts,
//! truncated coordinates, the dual simplex and the interior lattice point.

use crate::alhc::{alhc_to_omega, decompose_alhc, enumerate_alhc_with_first, is_alhc};
use crate::error::{guard, Error, Result};
use crate::exact::{eta_vector, omega_matrix, ExactScalar, Matrix};
use crate::BigRational;

pub const MAX_DILATION_LEN: usize = 8;
pub const MAX_DILATION: i64 = 8;
pub const MAX_DUAL_SIZE: usize = 12;
pub const MAX_INTERIOR_SIZE: usize = 6;

fn check_dilation(n: usize, t: i64) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("dimension must be at least 1".into()));
    }
    if t < 0 {
        return Err(Error::Invalid("dilation must be non-negative".into()));
    }
    guard("n", n, MAX_DILATION_LEN)?;
    guard("t", t as usize, MAX_DILATION as usize)
}

/// Lattice points of `t·Qₙ`: compositions of length `n` with `λ₁ = t`.
pub fn lattice_points_dilation(n: usize, t: i64) -> Result<Vec<Vec<i64>>> {
    check_dilation(n, t)?;
    enumerate_alhc_with_first(n, t)
}

/// Lattice points of `t·Pₙ`, the images of [`lattice_points_dilation`]
/// under `Ψ`.
pub fn lattice_points_dilation_omega(n: usize, t: i64) -> Result<Vec<Vec<i64>>> {
    lattice_points_dilation(n, t)?
        .iter()
        .map(|l| alhc_to_omega(l))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartReport {
    pub n: usize,
    pub t: i64,
    pub count: u128,
    /// `(t+1)^n − t^n`.
    pub expected: u128,
    pub pass: bool,
}

pub fn ehrhart_check(n: usize, t: i64) -> Result<EhrhartReport> {
    let count = lattice_points_dilation(n, t)?.len() as u128;
    let t_u = t as u128;
    let expected = (t_u + 1).pow(n as u32) - t_u.pow(n as u32);
    Ok(EhrhartReport {
        n,
        t,
        count,
        expected,
        pass: count == expected,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityReport {
    pub n: usize,
    pub t: i64,
    pub points: usize,
    pub decomposed: usize,
    /// Summed over all points.
    pub backtracks: u64,
    pub pass: bool,
}

/// Splits every lattice point of `t·Qₙ` into `t` lattice points of `Qₙ`,
/// verifying each split re-sums.
pub fn normality_check(n: usize, t: i64) -> Result<NormalityReport> {
    if t < 1 {
        return Err(Error::Invalid("dilation must be at least 1".into()));
    }
    let points = lattice_points_dilation(n, t)?;
    let mut decomposed = 0;
    let mut backtracks = 0;
    for p in &points {
        let Ok((parts, bt)) = decompose_alhc(p, t) else {
            continue;
        };
        backtracks += bt;
        let ok = parts.len() == t as usize
            && parts.iter().all(|q| q[0] == 1 && is_alhc(q, 1))
            && (0..n).all(|j| parts.iter().map(|q| q[j]).sum::<i64>() == p[j]);
        if ok {
            decomposed += 1;
        }
    }
    Ok(NormalityReport {
        n,
        t,
        points: points.len(),
        decomposed,
        backtracks,
        pass: decomposed == points.len(),
    })
}

/// `p_t = [p − η_n]_{2 ≤ i ≤ n}`.
pub fn truncate(p: &[i64]) -> Result<Vec<i64>> {
    if p.len() < 2 {
        return Err(Error::Invalid(
            "truncated coordinates need a point of length at least 2".into(),
        ));
    }
    let eta = eta_vector(p.len())?;
    p.iter()
        .zip(&eta)
        .skip(1)
        .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow("truncation")))
        .collect()
}

/// Inverse of [`truncate`] on the hyperplane `Σ c_i = 1` of `Pₙ`: the first
/// coordinate is recovered from the others.
pub fn untruncate(pt: &[i64]) -> Result<Vec<i64>> {
    let n = pt.len() + 1;
    let eta = eta_vector(n)?;
    let mut p: Vec<i64> = std::iter::once(0)
        .chain(pt.iter().zip(&eta[1..]).map(|(a, b)| a + b))
        .collect();
    // the BS coefficients sum to one: Σ_i (−1)^{i+1} ω_i = 1
    let alt: i64 = p[1..]
        .iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x } else { -x })
        .sum();
    p[0] = 1 + alt;
    Ok(p)
}

/// The vertices of `Pₙ` in truncated coordinates, as the rows of an
/// `n × (n−1)` matrix.
pub fn truncated_vertices<T: ExactScalar>(n: usize) -> Result<Matrix<T>> {
    if n < 2 {
        return Err(Error::Invalid("truncated simplex needs n ≥ 2".into()));
    }
    let omega = omega_matrix::<T>(n)?;
    let eta = eta_vector(n)?;
    Matrix::try_from_fn(n, n - 1, |i, j| {
        omega[(i, j + 1)].sub_exact(&T::from_i64(eta[j + 1]))
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReflexiveDual<T> {
    pub n: usize,
    /// `(n−1) × n`; column `j` is the dual vertex opposite facet `j`.
    pub xi: Matrix<T>,
    pub integral: bool,
    /// `vertices · Ξ`, `n × n`.
    pub product: Matrix<T>,
}

impl<T: ExactScalar> ReflexiveDual<T> {
    pub fn off_diagonal_all_minus_one(&self) -> bool {
        let minus_one = -T::one();
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.product[(i, j)] == minus_one))
    }

    /// Diagonal of the product as integers, when integral.
    pub fn diagonal(&self) -> Vec<Option<i64>> {
        (0..self.n)
            .map(|i| self.product[(i, i)].to_i64_exact())
            .collect()
    }
}

fn check_dual(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Invalid("dual simplex needs n ≥ 2".into()));
    }
    guard("n", n, MAX_DUAL_SIZE)
}

/// Solves `v_i · c_j = −1` for all `i ≠ j` to obtain the dual vertices.
pub fn reflexive_dual<T: ExactScalar>(n: usize) -> Result<ReflexiveDual<T>> {
    check_dual(n)?;
    let verts = truncated_vertices::<T>(n)?;
    let mut xi = Matrix::zeros(n - 1, n);
    for j in 0..n {
        let others: Vec<Vec<T>> = (0..n)
            .filter(|&i| i != j)
            .map(|i| verts.row(i).to_vec())
            .collect();
        let system = Matrix::from_rows(others)?;
        let c = system.solve(&vec![-T::one(); n - 1])?;
        for (i, v) in c.into_iter().enumerate() {
            xi.set(i, j, v);
        }
    }
    let product = verts.mul(&xi)?;
    Ok(ReflexiveDual {
        n,
        integral: xi.is_integral(),
        xi,
        product,
    })
}

/// Closed-form candidate for the dual: `Ξ′ + Ξ″ + Ξ‴` with
/// `Ξ′_{ij} = −(i+2)(−1)^{i+j} C(i, j−1)`, `Ξ″` zero except the first column
/// `−2(−1)^i`, and `Ξ‴` zero except `1 − n` in the bottom-right corner.
pub fn closed_form_xi<T: ExactScalar>(n: usize) -> Result<Matrix<T>> {
    check_dual(n)?;
    let mut xi = Matrix::try_from_fn(n - 1, n, |r, c| {
        let (i, j) = (r as i64 + 1, c as u64 + 1);
        let sign = if (r + c) % 2 == 0 { 1 } else { -1 };
        let b = crate::exact::binomial(i as u64, j - 1)?;
        let mut v = -(i + 2) * sign * b;
        if c == 0 {
            v += if i % 2 == 0 { -2 } else { 2 };
        }
        Ok(T::from_i64(v))
    })?;
    let corner = xi[(n - 2, n - 1)].add_exact(&T::from_i64(1 - n as i64))?;
    xi.set(n - 2, n - 1, corner);
    Ok(xi)
}

#[derive(Clone, Debug, PartialEq)]
pub struct XiComparison<T> {
    pub solved: ReflexiveDual<T>,
    pub formula: Matrix<T>,
    pub formula_product: Matrix<T>,
    /// 1-based positions where the closed form differs from the solved dual,
    /// with `(solved, formula)` values.
    pub differences: Vec<((usize, usize), T, T)>,
}

pub fn compare_xi<T: ExactScalar>(n: usize) -> Result<XiComparison<T>> {
    let solved = reflexive_dual::<T>(n)?;
    let formula = closed_form_xi::<T>(n)?;
    let formula_product = truncated_vertices::<T>(n)?.mul(&formula)?;
    let mut differences = Vec::new();
    for i in 0..n - 1 {
        for j in 0..n {
            if solved.xi[(i, j)] != formula[(i, j)] {
                differences.push((
                    (i + 1, j + 1),
                    solved.xi[(i, j)].clone(),
                    formula[(i, j)].clone(),
                ));
            }
        }
    }
    Ok(XiComparison {
        solved,
        formula,
        formula_product,
        differences,
    })
}

/// Barycentric coordinates of `point` (truncated coordinates) with respect
/// to the vertices of `Pₙ`.
pub fn barycentric<T: ExactScalar>(n: usize, point: &[i64]) -> Result<Vec<T>> {
    let verts = truncated_vertices::<T>(n)?;
    if point.len() != n - 1 {
        return Err(Error::Invalid(format!(
            "point has length {}, expected {}",
            point.len(),
            n - 1
        )));
    }
    // columns are (v_i, 1)
    let system = Matrix::from_fn(n, n, |r, c| {
        if r < n - 1 {
            verts[(c, r)].clone()
        } else {
            T::one()
        }
    });
    let rhs: Vec<T> = point
        .iter()
        .map(|&x| T::from_i64(x))
        .chain(std::iter::once(T::one()))
        .collect();
    system.solve(&rhs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InteriorReport {
    pub n: usize,
    /// Lattice points of the closed simplex.
    pub lattice_points: usize,
    pub interior: Vec<Vec<i64>>,
    /// The origin is the only interior lattice point.
    pub pass: bool,
}

/// Scans the bounding box of truncated `Pₙ` and classifies every lattice
/// point by its barycentric coordinates.
pub fn interior_point_check(n: usize) -> Result<InteriorReport> {
    if n < 2 {
        return Err(Error::Invalid("interior check needs n ≥ 2".into()));
    }
    guard("n", n, MAX_INTERIOR_SIZE)?;
    let d = n - 1;
    let verts = truncated_vertices::<BigRational>(n)?
        .to_integer_rows()
        .expect("truncated vertices are integral");
    // barycentric map a = B⁻¹ (x, 1), scaled to integers
    let b = Matrix::<BigRational>::from_fn(n, n, |r, c| {
        if r < d {
            BigRational::from_i64(verts[c][r])
        } else {
            BigRational::from_i64(1)
        }
    });
    let inv = b.inverse()?;
    let scale = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .fold(num_bigint::BigInt::from(1), |acc, (i, j)| {
            num_integer::Integer::lcm(&acc, inv[(i, j)].denom())
        });
    let scale = BigRational::from_integer(scale);
    let forms: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    inv[(i, j)]
                        .mul_exact(&scale)?
                        .to_i64_exact()
                        .ok_or(Error::Overflow("barycentric form"))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let lo: Vec<i64> = (0..d)
        .map(|c| verts.iter().map(|v| v[c]).min().unwrap())
        .collect();
    let hi: Vec<i64> = (0..d)
        .map(|c| verts.iter().map(|v| v[c]).max().unwrap())
        .collect();

    let mut scan = BoxScan {
        forms: &forms,
        lo: &lo,
        hi: &hi,
        x: Vec::with_capacity(d),
        lattice_points: 0,
        interior: Vec::new(),
    };
    scan.run();
    let pass = scan.interior.len() == 1 && scan.interior[0].iter().all(|&v| v == 0);
    Ok(InteriorReport {
        n,
        lattice_points: scan.lattice_points,
        interior: scan.interior,
        pass,
    })
}

/// Odometer over the bounding box. Each affine form `f·(x, 1)` must stay
/// non-negative; a prefix is abandoned once no completion inside the box can
/// satisfy some form, and the last coordinate is solved as an interval.
struct BoxScan<'a> {
    forms: &'a [Vec<i64>],
    lo: &'a [i64],
    hi: &'a [i64],
    x: Vec<i64>,
    lattice_points: usize,
    interior: Vec<Vec<i64>>,
}

impl BoxScan<'_> {
    fn partial(&self, f: &[i64]) -> i64 {
        let d = self.lo.len();
        f[d] + self.x.iter().zip(f).map(|(a, b)| a * b).sum::<i64>()
    }

    fn feasible(&self) -> bool {
        let from = self.x.len();
        self.forms.iter().all(|f| {
            let best: i64 = (from..self.lo.len())
                .map(|c| (f[c] * self.lo[c]).max(f[c] * self.hi[c]))
                .sum();
            self.partial(f) + best >= 0
        })
    }

    fn run(&mut self) {
        let d = self.lo.len();
        let last = d - 1;
        if self.x.len() < last {
            let c = self.x.len();
            for v in self.lo[c]..=self.hi[c] {
                self.x.push(v);
                if self.feasible() {
                    self.run();
                }
                self.x.pop();
            }
            return;
        }
        let (mut lo, mut hi) = (self.lo[last], self.hi[last]);
        let mut terms = Vec::with_capacity(self.forms.len());
        for f in self.forms {
            let rest = self.partial(f);
            let coef = f[last];
            if coef > 0 {
                // smallest x with coef·x + rest ≥ 0
                lo = lo.max((-rest).div_euclid(coef) + i64::from((-rest).rem_euclid(coef) != 0));
            } else if coef < 0 {
                hi = hi.min(rest.div_euclid(-coef));
            } else if rest < 0 {
                return;
            }
            terms.push((coef, rest));
        }
        for xl in lo..=hi {
            self.lattice_points += 1;
            if terms.iter().all(|&(coef, rest)| coef * xl + rest > 0) {
                let mut p = self.x.clone();
                p.push(xl);
                self.interior.push(p);
            }
        }
    }
}
