use rayon::prelude::*;

use super::gcd::qt_gcd;
use super::poly::QTPoly;
use super::rational::QTRational;
use crate::error::{Error, Result};

fn lcm(a: &QTPoly, b: &QTPoly) -> QTPoly {
    if a == b || b.is_one() {
        return a.clone();
    }
    if a.is_one() {
        return b.clone();
    }
    let g = qt_gcd(a, b);
    (a * b).exact_div(&g).expect("gcd divides product")
}

/// Solves `matrix * x = rhs` exactly over `Q(q,t)`.
///
/// Each row is scaled by the lcm of its denominators, then eliminated with
/// fraction-free Gauss-Jordan steps over `Z[q,t]`. After the last step the
/// left block is `det * I`, so every unknown is a single quotient.
pub fn rational_solve(matrix: &[Vec<QTRational>], rhs: &[QTRational]) -> Result<Vec<QTRational>> {
    let n = matrix.len();
    if rhs.len() != n || matrix.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch {
            rows: n,
            cols: matrix.first().map_or(0, |r| r.len()),
            rhs: rhs.len(),
        });
    }
    if let Some(lower) = triangular(matrix) {
        return substitute(matrix, rhs, lower);
    }
    let mut rows: Vec<Vec<QTPoly>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let scale = row
                .iter()
                .chain(std::iter::once(b))
                .fold(QTPoly::one(), |acc, x| lcm(&acc, x.denominator()));
            row.iter()
                .chain(std::iter::once(b))
                .map(|x| {
                    let factor = scale.exact_div(x.denominator()).expect("lcm is a multiple");
                    x.numerator() * &factor
                })
                .collect()
        })
        .collect();
    let solved = fraction_free_gauss_jordan(&mut rows)?;
    solved.into_iter().map(|(num, den)| QTRational::new(num, den)).collect()
}

/// `Some(true)` for lower triangular, `Some(false)` for upper triangular
/// (diagonal matrices count as lower), `None` otherwise or if a diagonal
/// entry vanishes.
fn triangular(matrix: &[Vec<QTRational>]) -> Option<bool> {
    if matrix.iter().enumerate().any(|(i, row)| row[i].is_zero()) {
        return None;
    }
    let zero_where = |upper: bool| {
        matrix.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| x.is_zero() || if upper { j >= i } else { j <= i })
        })
    };
    if zero_where(false) {
        Some(true)
    } else if zero_where(true) {
        Some(false)
    } else {
        None
    }
}

/// Back or forward substitution. Each row is put over the lcm of the
/// denominators it involves and reduced once at the end, which keeps the
/// number of large gcds to one per unknown.
fn substitute(matrix: &[Vec<QTRational>], rhs: &[QTRational], lower: bool) -> Result<Vec<QTRational>> {
    let n = matrix.len();
    let mut x = vec![QTRational::zero(); n];
    let order: Vec<usize> = if lower {
        (0..n).collect()
    } else {
        (0..n).rev().collect()
    };
    for &i in &order {
        let mut terms = vec![rhs[i].clone()];
        for (j, a) in matrix[i].iter().enumerate() {
            if j != i && !a.is_zero() && !x[j].is_zero() {
                terms.push(-&(a * &x[j]));
            }
        }
        let den = terms.iter().fold(QTPoly::one(), |acc, r| lcm(&acc, r.denominator()));
        let num: QTPoly = terms
            .iter()
            .map(|r| r.numerator() * &den.exact_div(r.denominator()).expect("lcm is a multiple"))
            .sum();
        let pivot = &matrix[i][i];
        x[i] = QTRational::new(&num * pivot.denominator(), &den * pivot.numerator())?;
    }
    Ok(x)
}

/// In-place fraction-free Gauss-Jordan on an `n x (n+1)` augmented matrix.
/// Returns `(numerator, denominator)` for each unknown.
pub(crate) fn fraction_free_gauss_jordan(rows: &mut [Vec<QTPoly>]) -> Result<Vec<(QTPoly, QTPoly)>> {
    let n = rows.len();
    let mut prev = QTPoly::one();
    for k in 0..n {
        // Prefer the sparsest available pivot to limit intermediate growth.
        let pivot = (k..n)
            .filter(|&i| !rows[i][k].is_zero())
            .min_by_key(|&i| rows[i][k].len())
            .ok_or(Error::SingularMatrix)?;
        rows.swap(k, pivot);
        let pivot_row = rows[k].clone();
        let pk = pivot_row[k].clone();
        rows.par_iter_mut().enumerate().try_for_each(|(i, row)| -> Result<()> {
            if i == k {
                return Ok(());
            }
            if i < k {
                row[i] = pk.clone();
            }
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..=n {
                let cross = &(&pk * &row[j]) - &(&factor * &pivot_row[j]);
                row[j] = cross.exact_div(&prev).ok_or(Error::InexactElimination)?;
            }
            Ok(())
        })?;
        prev = pk;
    }
    Ok(rows
        .iter()
        .enumerate()
        .map(|(i, row)| (row[n].clone(), row[i].clone()))
        .collect())
}
