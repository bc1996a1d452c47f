//! Modified Macdonald polynomials at small size, the `Delta'_{e_k}`
//! eigenoperator and the expansion of `e_n` in the `H~_mu` basis.
//!
//! `H~_mu(x;q,t)` is built from the inv/maj formula over all fillings of the
//! French diagram of `mu`, then converted to the Schur basis. In this
//! convention `H~_mu(x;0,t)` is the modified Hall-Littlewood polynomial of
//! `mu` in `t`, and `H~_mu(x;q,0)` the one of the conjugate `mu'` in `q`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::guard;
use crate::partitions::{enumerate_partitions, Partition};
use crate::qt::{rational_solve, QTPoly, QTRational};
use crate::schur::{monomial_to_schur, plethysm_one_minus_q, SchurPoly};

/// Statistics of one cell; rows and columns are 0-based from the corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellStats {
    pub row: usize,
    pub col: usize,
    pub arm: usize,
    pub leg: usize,
    pub coarm: usize,
    pub coleg: usize,
}

pub fn cell_stats(mu: &Partition) -> Vec<CellStats> {
    let conj = mu.conjugate();
    mu.cells()
        .map(|(row, col)| CellStats {
            row,
            col,
            arm: mu.part(row) - col - 1,
            leg: conj.part(col) - row - 1,
            coarm: col,
            coleg: row,
        })
        .collect()
}

/// Precomputed pairs for the inv/maj statistics, with cells indexed in
/// reading order (top row first, left to right).
struct FillingShape {
    size: usize,
    /// `(u, v)` attacking with `u` first in reading order.
    attacking: Vec<(usize, usize)>,
    /// `(cell, cell below, leg + 1, arm)`.
    vertical: Vec<(usize, usize, u32, u32)>,
}

impl FillingShape {
    fn new(mu: &Partition) -> Self {
        let stats = cell_stats(mu);
        let mut order: Vec<usize> = (0..stats.len()).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(stats[i].row), stats[i].col));
        let mut index = HashMap::new();
        for (pos, &i) in order.iter().enumerate() {
            index.insert((stats[i].row, stats[i].col), pos);
        }
        let mut attacking = Vec::new();
        let mut vertical = Vec::new();
        for &i in &order {
            let u = stats[i];
            let ui = index[&(u.row, u.col)];
            for c in u.col + 1..mu.part(u.row) {
                attacking.push((ui, index[&(u.row, c)]));
            }
            if u.row > 0 {
                for c in 0..u.col.min(mu.part(u.row - 1)) {
                    attacking.push((ui, index[&(u.row - 1, c)]));
                }
                vertical.push((ui, index[&(u.row - 1, u.col)], u.leg as u32 + 1, u.arm as u32));
            }
        }
        FillingShape {
            size: stats.len(),
            attacking,
            vertical,
        }
    }

    fn weight(&self, filling: &[usize]) -> (u32, u32) {
        let mut inv = self.attacking.iter().filter(|&&(u, v)| filling[u] > filling[v]).count() as i64;
        let mut maj = 0u32;
        for &(u, below, leg1, arm) in &self.vertical {
            if filling[u] > filling[below] {
                maj += leg1;
                inv -= arm as i64;
            }
        }
        (u32::try_from(inv).expect("inv is nonnegative"), maj)
    }
}

/// Sum of `q^inv t^maj` over fillings with the given content, i.e. the
/// coefficient of the monomial symmetric function `m_content`.
fn monomial_coefficient(shape: &FillingShape, content: &Partition) -> QTPoly {
    let mut counts: Vec<usize> = content.parts().to_vec();
    let mut filling = vec![0; shape.size];
    let mut acc: HashMap<(u32, u32), i64> = HashMap::new();
    fn rec(
        i: usize,
        shape: &FillingShape,
        counts: &mut Vec<usize>,
        filling: &mut Vec<usize>,
        acc: &mut HashMap<(u32, u32), i64>,
    ) {
        if i == shape.size {
            *acc.entry(shape.weight(filling)).or_default() += 1;
            return;
        }
        for letter in 0..counts.len() {
            if counts[letter] == 0 {
                continue;
            }
            counts[letter] -= 1;
            filling[i] = letter + 1;
            rec(i + 1, shape, counts, filling, acc);
            counts[letter] += 1;
        }
    }
    rec(0, shape, &mut counts, &mut filling, &mut acc);
    QTPoly::from_terms(acc)
}

/// Monomial expansion of `H~_mu(x;q,t)`.
pub fn macdonald_monomial(mu: &Partition) -> Result<BTreeMap<Partition, QTPoly>> {
    guard::check(guard::MACDONALD_N, "Macdonald degree", mu.size())?;
    let shape = FillingShape::new(mu);
    Ok(enumerate_partitions(mu.size(), None)?
        .into_iter()
        .map(|nu| {
            let c = monomial_coefficient(&shape, &nu);
            (nu, c)
        })
        .collect())
}

/// `H~_mu(x;q,t)` in the Schur basis.
pub fn macdonald_htilde(mu: &Partition) -> Result<SchurPoly> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, SchurPoly>>> = OnceLock::new();
    let lock = CACHE.get_or_init(Default::default);
    if let Some(f) = lock.read().expect("cache lock").get(mu) {
        return Ok(f.clone());
    }
    let f = monomial_to_schur(&macdonald_monomial(mu)?)?;
    lock.write().expect("cache lock").insert(mu.clone(), f.clone());
    Ok(f)
}

/// `H~_mu` for every `mu` of `n`.
#[derive(Clone, Debug)]
pub struct MacdonaldTable {
    pub n: usize,
    pub polys: BTreeMap<Partition, SchurPoly>,
}

pub fn macdonald_table(n: usize) -> Result<MacdonaldTable> {
    guard::check(guard::MACDONALD_N, "Macdonald degree", n)?;
    let polys = enumerate_partitions(n, None)?
        .into_par_iter()
        .map(|mu| macdonald_htilde(&mu).map(|f| (mu, f)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(MacdonaldTable { n, polys })
}

type Coefficients = Arc<BTreeMap<Partition, QTRational>>;

/// `d_mu` with `e_n = sum_mu d_mu H~_mu`, by an exact solve against the
/// Schur coefficients of the `H~_mu`.
///
/// Both sides are first pushed through `f -> f[X(1-q)]`, an invertible
/// change of rows. `H~_mu[X(1-q)]` only involves `s_lam` with `lam`
/// dominating `mu`, so in reverse-lex order the system is upper triangular
/// and the solve is a back substitution.
pub fn expand_en_in_macdonald(n: usize) -> Result<Coefficients> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Coefficients>>> = OnceLock::new();
    let lock = CACHE.get_or_init(Default::default);
    if let Some(c) = lock.read().expect("cache lock").get(&n) {
        return Ok(c.clone());
    }
    let table = macdonald_table(n)?;
    let basis: Vec<Partition> = table.polys.keys().rev().cloned().collect();
    let columns: Vec<SchurPoly> = basis
        .par_iter()
        .map(|mu| plethysm_one_minus_q(&table.polys[mu]))
        .collect();
    let matrix: Vec<Vec<QTRational>> = basis
        .iter()
        .map(|nu| columns.iter().map(|col| col.coeff(nu).into()).collect())
        .collect();
    let target = plethysm_one_minus_q(&SchurPoly::s(Partition::rectangle(1, n)));
    let rhs: Vec<QTRational> = basis.iter().map(|nu| target.coeff(nu).into()).collect();
    let sol = rational_solve(&matrix, &rhs)?;
    let coeffs = Arc::new(basis.into_iter().zip(sol).collect::<BTreeMap<_, _>>());
    lock.write().expect("cache lock").insert(n, coeffs.clone());
    Ok(coeffs)
}

fn monomial(q: usize, t: usize) -> QTPoly {
    QTPoly::monomial(1, q as u32, t as u32)
}

/// The same coefficients from the closed product formula
/// `d_mu = M B_mu Pi_mu / w_mu` with `M = (1-q)(1-t)`,
/// `Pi_mu = prod_{c != (0,0)} (1 - q^coarm t^coleg)` and
/// `w_mu = prod_c (q^arm - t^(leg+1)) (t^leg - q^(arm+1))`.
pub fn expand_en_closed_form(n: usize) -> Result<BTreeMap<Partition, QTRational>> {
    let one = QTPoly::one();
    let m = &(&one - &QTPoly::q()) * &(&one - &QTPoly::t());
    enumerate_partitions(n, None)?
        .into_iter()
        .map(|mu| {
            let stats = cell_stats(&mu);
            let b = b_mu(&mu);
            let pi = stats
                .iter()
                .filter(|c| c.coarm + c.coleg > 0)
                .fold(QTPoly::one(), |acc, c| &acc * &(&one - &monomial(c.coarm, c.coleg)));
            let w = stats.iter().fold(QTPoly::one(), |acc, c| {
                let f1 = &monomial(c.arm, 0) - &monomial(0, c.leg + 1);
                let f2 = &monomial(0, c.leg) - &monomial(c.arm + 1, 0);
                &acc * &(&f1 * &f2)
            });
            let num = &(&m * &b) * &pi;
            QTRational::new(num, w).map(|r| (mu, r))
        })
        .collect()
}

/// `B_mu = sum_c q^coarm t^coleg`.
pub fn b_mu(mu: &Partition) -> QTPoly {
    cell_stats(mu).iter().map(|c| monomial(c.coarm, c.coleg)).sum()
}

/// `e_k[B_mu - 1]`: the elementary symmetric function of the monomials of
/// the cells other than the corner.
pub fn eigenvalue_e(k: usize, mu: &Partition) -> QTPoly {
    let vars: Vec<QTPoly> = cell_stats(mu)
        .iter()
        .filter(|c| c.coarm + c.coleg > 0)
        .map(|c| monomial(c.coarm, c.coleg))
        .collect();
    // e_j of the first i variables, built up one variable at a time.
    let mut e = vec![QTPoly::zero(); k + 1];
    e[0] = QTPoly::one();
    for x in &vars {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * x;
            e[j] += &add;
        }
    }
    e.swap_remove(k)
}

/// `Delta'_{e_k} e_n = sum_mu d_mu e_k[B_mu - 1] H~_mu`, which must have
/// polynomial coefficients.
pub fn delta_prime_e(k: usize, n: usize) -> Result<SchurPoly> {
    if n == 0 || k >= n {
        return Err(Error::InvalidParams(format!("need 0 <= k < n, got k={k}, n={n}")));
    }
    let d = expand_en_in_macdonald(n)?;
    assemble(k, n, &d)
}

/// As [`delta_prime_e`] with the closed-form coefficients, which skips the
/// linear solve; used past the solve's comfortable size.
pub fn delta_prime_e_closed_form(k: usize, n: usize) -> Result<SchurPoly> {
    if n == 0 || k >= n {
        return Err(Error::InvalidParams(format!("need 0 <= k < n, got k={k}, n={n}")));
    }
    let d = expand_en_closed_form(n)?;
    assemble(k, n, &d)
}

fn assemble(k: usize, n: usize, d: &BTreeMap<Partition, QTRational>) -> Result<SchurPoly> {
    let table = macdonald_table(n)?;
    let weights: Vec<(&Partition, QTRational)> = d
        .iter()
        .map(|(mu, c)| (mu, c * &QTRational::from(eigenvalue_e(k, mu))))
        .collect();
    let shapes: Vec<Partition> = enumerate_partitions(n, None)?;
    let terms = shapes
        .into_par_iter()
        .map(|nu| {
            let mut acc = QTRational::zero();
            for (mu, w) in &weights {
                let c = table.polys[*mu].coeff(&nu);
                if !c.is_zero() {
                    acc = &acc + &(w * &QTRational::from(c));
                }
            }
            acc.to_poly()
                .map(|p| (nu.clone(), p))
                .ok_or_else(|| Error::DenominatorResidue(format!("coefficient of s{nu}: {acc}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SchurPoly::from_terms(terms))
}

/// Drops every term with a positive power of `t`.
pub fn specialize_t0(f: &SchurPoly) -> SchurPoly {
    t_coefficient(f, 0)
}

/// The coefficient of `t^j`, a symmetric function in `q` only.
pub fn t_coefficient(f: &SchurPoly, j: u32) -> SchurPoly {
    f.map_coeffs(|c| c.t_coefficient(j))
}
