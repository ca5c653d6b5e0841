//! Closed-form integer and rational matrices attached to 2-linear diagrams.
//!
//! All formulas are stated with 1-based positions `(i, j)`.

use super::matrix::Matrix;
use super::scalar::ExactScalar;
use crate::error::{guard, Error, Result};

/// Largest size accepted by the closed-form constructors.
pub const MAX_CLOSED_FORM: usize = 25;

/// `C(n, k)`, zero when `k > n`. Overflow is reported.
pub fn binomial(n: u64, k: u64) -> Result<i64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > i64::MAX as u128 {
            return Err(Error::Overflow("binomial"));
        }
    }
    Ok(acc as i64)
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("matrix size must be at least 1".into()));
    }
    guard("n", n, MAX_CLOSED_FORM)
}

/// `Ω`: entry `(i, j) = j·C(i+1, j+1)`; row `l` is the reduced Betti vector of
/// the pure diagram of degree sequence `(0, 2, …, l+1)`.
pub fn omega_matrix<T: ExactScalar>(n: usize) -> Result<Matrix<T>> {
    check_size(n)?;
    Matrix::try_from_fn(n, n, |r, c| {
        let (i, j) = (r as u64 + 1, c as u64 + 1);
        Ok(T::from_i64(j as i64 * binomial(i + 1, j + 1)?))
    })
}

/// `Ω⁻¹`: entry `(i, j) = (−1)^{i−j} · C(i+1, j+1) / i`.
pub fn omega_inverse<T: ExactScalar>(n: usize) -> Result<Matrix<T>> {
    check_size(n)?;
    Matrix::try_from_fn(n, n, |r, c| {
        let (i, j) = (r as u64 + 1, c as u64 + 1);
        let b = binomial(i + 1, j + 1)?;
        T::from_fraction(sign(r.abs_diff(c)) * b, i as i64).ok_or(Error::Overflow("Ω⁻¹"))
    })
}

/// `Ψ`: entry `(i, j) = C(i−1, j−1)`, unimodular lower-triangular.
pub fn psi_matrix<T: ExactScalar>(n: usize) -> Result<Matrix<T>> {
    check_size(n)?;
    Matrix::try_from_fn(n, n, |r, c| Ok(T::from_i64(binomial(r as u64, c as u64)?)))
}

/// `Ψ⁻¹`: entry `(i, j) = (−1)^{i−j} · C(i−1, j−1)`.
pub fn psi_inverse<T: ExactScalar>(n: usize) -> Result<Matrix<T>> {
    check_size(n)?;
    Matrix::try_from_fn(n, n, |r, c| {
        Ok(T::from_i64(
            sign(r.abs_diff(c)) * binomial(r as u64, c as u64)?,
        ))
    })
}

/// `Λ`, the `(n−1) × n` matrix with ones at `(i, i)` and `(i, i+1)`.
pub fn lambda_matrix<T: ExactScalar>(n: usize) -> Result<Matrix<T>> {
    check_size(n)?;
    Ok(Matrix::from_fn(n - 1, n, |i, j| {
        if j == i || j == i + 1 {
            T::one()
        } else {
            T::zero()
        }
    }))
}

/// Right inverse of `Λ`, the `n × (n−1)` matrix with `(−1)^{i+j}` for `i ≤ j`.
pub fn lambda_right_inverse<T: ExactScalar>(n: usize) -> Result<Matrix<T>> {
    check_size(n)?;
    Ok(Matrix::from_fn(n, n - 1, |i, j| {
        if i <= j {
            T::from_i64(sign(i + j))
        } else {
            T::zero()
        }
    }))
}

/// `η_n`: entry `i = C(n, i)` for `1 ≤ i ≤ n`.
pub fn eta_vector(n: usize) -> Result<Vec<i64>> {
    guard("n", n, MAX_CLOSED_FORM)?;
    (1..=n as u64).map(|i| binomial(n as u64, i)).collect()
}
