//! Exact solution of overdetermined integer linear systems.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polynom::Rational;

/// Solves `rows · x = rhs` exactly, requiring full column rank and
/// consistency of every equation. Uses fraction-free (Bareiss) elimination
/// with rational back substitution.
pub fn solve_exact(rows: &[Vec<BigInt>], rhs: &[BigInt]) -> Result<Vec<Rational>> {
    let m = rows.len();
    let k = rows.first().map_or(0, Vec::len);
    if rhs.len() != m || rows.iter().any(|r| r.len() != k) {
        return Err(Error::LinearSystem("ragged system".into()));
    }
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();

    let mut prev = BigInt::one();
    for col in 0..k {
        let pivot = (col..m)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::LinearSystem(format!("rank deficient at unknown {col} of {k}; add equations")))?;
        a.swap(col, pivot);
        let (top, rest) = a.split_at_mut(col + 1);
        let p = &top[col];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..=k {
                let v = (&p[col] * &row[j] - &factor * &p[j]) / &prev;
                row[j] = v;
            }
            row[col] = BigInt::zero();
        }
        prev = a[col][col].clone();
    }
    if let Some(r) = (k..m).find(|&r| !a[r][k].is_zero()) {
        return Err(Error::LinearSystem(format!("inconsistent equation {r} after elimination")));
    }

    let mut x = vec![Rational::zero(); k];
    for i in (0..k).rev() {
        let mut acc = Rational::from_integer(a[i][k].clone());
        for j in i + 1..k {
            if !a[i][j].is_zero() {
                acc -= Rational::from_integer(a[i][j].clone()) * &x[j];
            }
        }
        x[i] = acc / Rational::from_integer(a[i][i].clone());
    }
    Ok(x)
}
