//! The shape-preserving bijection between `T+(n, lambda, 2)` and pairs
//! `(alpha, U)` with `U` of content `sort(alpha)`.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{compositions_over, enumerate_partitions, skew_n_stat, Composition, DeltaParams, Partition};
use crate::tableaux::{
    ch_battery, charge, enumerate_battery_tableaux, enumerate_ssyt_content, rsk_insert_word, unbump_horizontal_strip,
    BatteryTableau, Tableau,
};

fn two_row(p: &DeltaParams) -> Result<()> {
    if p.s != 2 {
        return Err(Error::InvalidParams(format!("expected s = 2, got s = {}", p.s)));
    }
    Ok(())
}

fn pair(a: &Composition) -> Result<(usize, usize)> {
    match a.parts() {
        &[x, y] => Ok((x, y)),
        other => Err(Error::InvalidParams(format!("expected two parts, got {other:?}"))),
    }
}

/// `n(alpha/lambda) + coinv(alpha)`.
pub fn shift(alpha: &Composition, lambda: &Partition) -> Result<usize> {
    Ok(skew_n_stat(alpha, lambda)? + alpha.coinv())
}

/// Moves `n(alpha/lambda) + coinv(alpha)` boxes from the bottom row of
/// `sort(alpha)` to the top row.
pub fn phi(alpha: &Composition, lambda: &Partition) -> Result<Composition> {
    let (x, y) = pair(alpha)?;
    let m = shift(alpha, lambda)?;
    let (a, b) = (x.max(y), x.min(y));
    if m > a {
        return Err(Error::DomainViolation(format!("{alpha} does not contain {lambda}")));
    }
    Ok(Composition::new(vec![a - m, b + m]))
}

pub fn phi_inv(beta: &Composition, lambda: &Partition) -> Result<Composition> {
    let (b1, b2) = pair(beta)?;
    if !beta.contains(lambda) {
        return Err(Error::DomainViolation(format!("{beta} does not contain {lambda}")));
    }
    let n = b1 + b2;
    let l1 = lambda.part(0);
    if b2 < l1 {
        return Ok(beta.clone());
    }
    let d = b2 - l1;
    let r = d / 2;
    Ok(if d.is_multiple_of(2) {
        Composition::new(vec![n - l1 - r, l1 + r])
    } else {
        Composition::new(vec![l1 + r, n - l1 - r])
    })
}

/// Turns the rightmost 1s of the bottom row of `U` into 2s until the content
/// is `phi(alpha)`. The result need not be semistandard.
pub fn psi(alpha: &Composition, u: &Tableau, lambda: &Partition) -> Result<Vec<Vec<usize>>> {
    let m = shift(alpha, lambda)?;
    let mut rows = u.rows().to_vec();
    let Some(bottom) = rows.first_mut() else {
        return if m == 0 {
            Ok(rows)
        } else {
            Err(Error::DomainViolation("empty tableau".into()))
        };
    };
    let ones = bottom.iter().take_while(|&&x| x == 1).count();
    if m > ones {
        return Err(Error::DomainViolation(format!("only {ones} ones to change, need {m}")));
    }
    for x in &mut bottom[ones - m..ones] {
        *x = 2;
    }
    Ok(rows)
}

/// `Phi(alpha, U)`.
pub fn phi_map(p: &DeltaParams, alpha: &Composition, u: &Tableau) -> Result<BatteryTableau> {
    two_row(p)?;
    let sorted = alpha.sort();
    let content = u.content();
    if content.first().copied().unwrap_or(0) != sorted.part(0) || content.get(1).copied().unwrap_or(0) != sorted.part(1)
    {
        return Err(Error::InvalidParams(format!("content of U differs from {sorted}")));
    }
    let mut rows = psi(alpha, u, &p.lambda)?;
    let big = p.lambda_rect();
    rows.resize(2, Vec::new());
    let have: Vec<usize> = (1..=2)
        .map(|c| rows.iter().flatten().filter(|&&x| x == c).count())
        .collect();
    for (i, row) in rows.iter_mut().enumerate() {
        let missing = big
            .part(i)
            .checked_sub(have[i])
            .ok_or_else(|| Error::DomainViolation(format!("content exceeds {big}")))?;
        let mut new = vec![i + 1; missing];
        new.append(row);
        *row = new;
    }
    let s = Tableau::new(rows)?;
    let (device, strip) = unbump_horizontal_strip(&s, &u.shape())?;
    BatteryTableau::new(device, Tableau::row(strip)?, p.clone())
}

/// `Phi^{-1}(T)`.
pub fn phi_inv_map(t: &BatteryTableau) -> Result<(Composition, Tableau)> {
    let p = &t.params;
    two_row(p)?;
    let s = rsk_insert_word(&t.device, &t.battery.reading_word());
    let sh = t.shape();
    let mut rows = s.rows().to_vec();
    rows.resize(2, Vec::new());
    for (i, row) in rows.iter_mut().enumerate() {
        let extra = row.len() - sh.part(i);
        if row[..extra].iter().any(|&x| x != i + 1) {
            return Err(Error::DomainViolation(format!(
                "row {} of {s} has too few {}s",
                i + 1,
                i + 1
            )));
        }
        row.drain(..extra);
    }
    rows.retain(|r| !r.is_empty());
    let count = |c: usize| rows.iter().flatten().filter(|&&x| x == c).count();
    let beta = Composition::new(vec![count(1), count(2)]);
    let alpha = phi_inv(&beta, &p.lambda)?;
    let m = alpha.sort().part(0) - count(1);
    if let Some(bottom) = rows.first_mut() {
        let start = bottom.iter().take_while(|&&x| x == 1).count();
        for x in &mut bottom[start..start + m] {
            *x = 1;
        }
    }
    Ok((alpha, Tableau::new(rows)?))
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct S2Report {
    pub cases: usize,
    pub pairs: usize,
    pub tableaux: usize,
    pub failures: Vec<String>,
}

impl S2Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_params(p: &DeltaParams, report: &mut S2Report) -> Result<()> {
    let mut images = HashSet::new();
    let mut failures = Vec::new();
    let mut fail = |msg: String| failures.push(format!("{p}: {msg}"));
    for alpha in compositions_over(p.n, &p.lambda, 2)? {
        let beta = phi(&alpha, &p.lambda)?;
        if phi_inv(&beta, &p.lambda)? != alpha {
            fail(format!("phi_inv(phi({alpha})) != {alpha}"));
        }
        let m = shift(&alpha, &p.lambda)?;
        for u in enumerate_ssyt_content(&alpha.sort()) {
            report.pairs += 1;
            let t = match phi_map(p, &alpha, &u) {
                Ok(t) => t,
                Err(e) => {
                    fail(format!("Phi({alpha}, {u}) failed: {e}"));
                    continue;
                }
            };
            if t.shape() != u.shape() {
                fail(format!("Phi({alpha}, {u}) changed the shape"));
            }
            let cu = charge(&u.reading_word())?;
            if ch_battery(&t) != cu + m {
                fail(format!(
                    "ch(Phi({alpha}, {u})) = {} but ch(U) + {m} = {}",
                    ch_battery(&t),
                    cu + m
                ));
            }
            match phi_inv_map(&t) {
                Ok((a, v)) if a == alpha && v == u => {}
                Ok((a, v)) => fail(format!("Phi^-1(Phi({alpha}, {u})) = ({a}, {v})")),
                Err(e) => fail(format!("Phi^-1 failed on the image of ({alpha}, {u}): {e}")),
            }
            if !images.insert((t.device, t.battery)) {
                fail(format!("Phi is not injective at ({alpha}, {u})"));
            }
        }
    }
    let all = enumerate_battery_tableaux(p);
    report.tableaux += all.len();
    if all.len() != images.len() {
        failures.push(format!("{p}: {} pairs but {} tableaux", images.len(), all.len()));
    }
    report.failures.append(&mut failures);
    report.cases += 1;
    Ok(())
}

/// Runs the bijection for one `n` over every `lambda` with at most two parts
/// and `|lambda| <= n`, checking the properties above.
pub fn s2_report(n: usize) -> Result<S2Report> {
    let mut report = S2Report::default();
    for k in 0..=n {
        for lambda in enumerate_partitions(k, Some(2))? {
            check_params(&DeltaParams::new(n, lambda, 2)?, &mut report)?;
        }
    }
    Ok(report)
}

/// [`s2_report`] for every `1 <= n <= max_n`, merged.
pub fn s2_check(max_n: usize) -> Result<S2Report> {
    let mut total = S2Report::default();
    for n in 1..=max_n {
        let mut r = s2_report(n)?;
        total.cases += r.cases;
        total.pairs += r.pairs;
        total.tableaux += r.tableaux;
        total.failures.append(&mut r.failures);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn running_example() {
        let lam: Partition = "3,1".parse().unwrap();
        assert_eq!(shift(&c(&[5, 6]), &lam).unwrap(), 3);
        assert_eq!(phi(&c(&[5, 6]), &lam).unwrap(), c(&[3, 8]));
        assert_eq!(phi_inv(&c(&[3, 8]), &lam).unwrap(), c(&[5, 6]));
    }

    #[test]
    fn phi_is_a_permutation() {
        for n in 0..=10 {
            for k in 0..=n {
                for lam in enumerate_partitions(k, Some(2)).unwrap() {
                    let all = compositions_over(n, &lam, 2).unwrap();
                    let images: HashSet<_> = all.iter().map(|a| phi(a, &lam).unwrap()).collect();
                    assert_eq!(images.len(), all.len());
                    for a in &all {
                        assert_eq!(&phi_inv(&phi(a, &lam).unwrap(), &lam).unwrap(), a);
                    }
                }
            }
        }
    }

    #[test]
    fn bijection_small() {
        let r = s2_check(6).unwrap();
        assert!(r.ok(), "{:?}", &r.failures[..r.failures.len().min(5)]);
        assert_eq!(r.pairs, r.tableaux);
    }

    #[test]
    fn rejects_other_s() {
        let p = DeltaParams::new(4, "1".parse().unwrap(), 3).unwrap();
        assert!(phi_map(&p, &c(&[3, 1]), &Tableau::row(vec![1, 1, 1, 2]).unwrap()).is_err());
    }
}
