//! Transformed and modified Hall-Littlewood polynomials from charge and
//! cocharge, and q-Kostka polynomials.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::guard;
use crate::partitions::{enumerate_partitions, Partition};
use crate::qt::QTPoly;
use crate::schur::SchurPoly;
use crate::tableaux::{charge, cocharge, for_each_ssyt_with_content, ssyt_shape_weak_content};

/// `(H~_mu, H_mu)`, both from one walk over `SSYT(mu)`.
#[derive(Clone, Debug)]
struct Expansions {
    modified: SchurPoly,
    transformed: SchurPoly,
}

fn expansions(mu: &Partition) -> Result<Arc<Expansions>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<Expansions>>>> = OnceLock::new();
    guard::check(guard::HALL_LITTLEWOOD_SIZE, "Hall-Littlewood size", mu.size())?;
    let lock = CACHE.get_or_init(Default::default);
    if let Some(e) = lock.read().expect("cache lock").get(mu) {
        return Ok(e.clone());
    }
    let mut modified = SchurPoly::zero();
    let mut transformed = SchurPoly::zero();
    for_each_ssyt_with_content(
        mu.parts(),
        None,
        |_| true,
        |t| {
            let w = t.reading_word();
            let shape = t.shape();
            let cc = cocharge(&w).expect("partition content");
            let ch = charge(&w).expect("partition content");
            modified.add_term(shape.clone(), &QTPoly::q_pow(cc as u32));
            transformed.add_term(shape, &QTPoly::q_pow(ch as u32));
        },
    );
    let e = Arc::new(Expansions { modified, transformed });
    Ok(lock.write().expect("cache lock").entry(mu.clone()).or_insert(e).clone())
}

/// `H_mu(x;q) = sum_{T in SSYT(mu)} q^{ch(T)} s_{sh(T)}`.
pub fn hl_transformed(mu: &Partition) -> Result<SchurPoly> {
    Ok(expansions(mu)?.transformed.clone())
}

/// `H~_mu(x;q) = sum_{T in SSYT(mu)} q^{cc(T)} s_{sh(T)}`.
pub fn hl_modified(mu: &Partition) -> Result<SchurPoly> {
    Ok(expansions(mu)?.modified.clone())
}

/// The part of `H~_mu` supported on shapes containing `rect`. Tableaux of
/// other shapes are never generated, which is what makes the skewing route
/// feasible for large `mu`: `s_rect^perp` kills every other term anyway.
pub fn hl_modified_containing(mu: &Partition, rect: &Partition) -> Result<SchurPoly> {
    guard::check(guard::SKEW_ROUTE_SIZE, "skewing route size", mu.size())?;
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Partition), SchurPoly>>> = OnceLock::new();
    let lock = CACHE.get_or_init(Default::default);
    let key = (mu.clone(), rect.clone());
    if let Some(f) = lock.read().expect("cache lock").get(&key) {
        return Ok(f.clone());
    }
    let mut out = SchurPoly::zero();
    for_each_ssyt_with_content(
        mu.parts(),
        None,
        |sh| sh.contains(rect),
        |t| {
            let cc = cocharge(&t.reading_word()).expect("partition content");
            out.add_term(t.shape(), &QTPoly::q_pow(cc as u32));
        },
    );
    lock.write().expect("cache lock").insert(key, out.clone());
    Ok(out)
}

/// Coefficient of `s_nu` in `H~_mu` (`modified`) or `H_mu`.
pub fn q_kostka(nu: &Partition, mu: &Partition, modified: bool) -> Result<QTPoly> {
    if nu.size() != mu.size() {
        return Err(Error::SizeMismatch {
            expected: nu.size(),
            found: mu.size(),
        });
    }
    let stat = if modified { cocharge } else { charge };
    Ok(ssyt_shape_weak_content(nu, mu.parts())
        .iter()
        .map(|t| QTPoly::q_pow(stat(&t.reading_word()).expect("partition content") as u32))
        .sum())
}

/// For every `mu` of size `ab` inside `(a^(b+1))` there is exactly one SSYT
/// of shape `(a^b)` and content `mu`, and its cocharge is `a * C(b,2)`.
pub fn rect_kostka_lemma_check(a: usize, b: usize) -> Result<bool> {
    let rect = Partition::rectangle(a, b);
    let expected = QTPoly::q_pow((a * b * b.saturating_sub(1) / 2) as u32);
    for mu in enumerate_partitions(a * b, Some(b + 1))? {
        if mu.part(0) > a {
            continue;
        }
        if ssyt_shape_weak_content(&rect, mu.parts()).len() != 1 {
            return Ok(false);
        }
        if q_kostka(&rect, &mu, true)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}
