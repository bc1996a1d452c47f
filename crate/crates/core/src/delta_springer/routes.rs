use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::guard;
use crate::hall_littlewood::{hl_modified, hl_modified_containing, hl_transformed};
use crate::partitions::{compositions_over, enumerate_partitions, skew_n_stat, DeltaParams, Partition};
use crate::qt::QTPoly;
use crate::schur::{rev_q_schur, rev_q_schur_at, skew, SchurPoly};
use crate::tableaux::{charge, cocharge, for_each_battery_tableau};

/// The ways of computing `H~_{n,lambda,s}` and its reversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Skew,
    Battery,
    Hl,
    /// The charge form, which is the `q`-reversal of the others.
    Charge,
}

impl Route {
    pub const ALL: [Route; 4] = [Route::Skew, Route::Battery, Route::Hl, Route::Charge];
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Skew => "skew",
            Route::Battery => "battery",
            Route::Hl => "hl",
            Route::Charge => "charge",
        })
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "skew" => Ok(Route::Skew),
            "battery" => Ok(Route::Battery),
            "hl" => Ok(Route::Hl),
            "charge" => Ok(Route::Charge),
            other => Err(Error::Parse(format!("unknown route {other:?}"))),
        }
    }
}

pub fn frobenius(p: &DeltaParams, route: Route) -> Result<SchurPoly> {
    match route {
        Route::Skew => frobenius_via_skew(p),
        Route::Battery => frobenius_via_battery(p),
        Route::Hl => frobenius_via_hl(p),
        Route::Charge => frobenius_charge_form(p),
    }
}

fn divide_q_power(f: &SchurPoly, m: usize) -> Result<SchurPoly> {
    let terms = f
        .iter()
        .map(|(nu, c)| c.exact_div_q_power(m as u32).map(|c| (nu.clone(), c)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SchurPoly::from_terms(terms))
}

/// `q^{-C(s-1,2)(n-k)} s_{((n-k)^(s-1))}^perp H~_Lambda(x;q)`.
pub fn frobenius_via_skew(p: &DeltaParams) -> Result<SchurPoly> {
    let rect = p.battery_shape();
    let h = hl_modified_containing(&p.lambda_rect(), &rect)?;
    divide_q_power(&skew(&rect, &h), p.normalization())
}

struct BatterySums {
    cocharge: SchurPoly,
    charge: SchurPoly,
    count: usize,
}

fn battery_sums(p: &DeltaParams) -> Result<BatterySums> {
    guard::check(guard::BATTERY_ROUTE_SIZE, "battery route size", p.lambda_rect().size())?;
    let mut sums = BatterySums {
        cocharge: SchurPoly::zero(),
        charge: SchurPoly::zero(),
        count: 0,
    };
    for_each_battery_tableau(p, |d, b| {
        let mut w = d.reading_word();
        w.extend(b.reading_word());
        let shape = d.shape();
        let cc = cocharge(&w).expect("content Lambda is a partition");
        let ch = charge(&w).expect("content Lambda is a partition");
        sums.cocharge.add_term(shape.clone(), &QTPoly::q_pow(cc as u32));
        sums.charge.add_term(shape, &QTPoly::q_pow(ch as u32));
        sums.count += 1;
    });
    Ok(sums)
}

/// `q^{-C(s-1,2)(n-k)} sum_{T in T+(n,lambda,s)} q^{cc(T)} s_{sh+(T)}`.
pub fn frobenius_via_battery(p: &DeltaParams) -> Result<SchurPoly> {
    divide_q_power(&battery_sums(p)?.cocharge, p.normalization())
}

/// `sum_{T in T+(n,lambda,s)} q^{ch(T)} s_{sh+(T)}`.
pub fn frobenius_charge_form(p: &DeltaParams) -> Result<SchurPoly> {
    Ok(battery_sums(p)?.charge)
}

/// `rev_q( sum_alpha q^{n(alpha/lambda) + coinv(alpha)} H_{sort(alpha)} )` over
/// weak compositions `alpha` of `n` with `s` parts containing `lambda`.
pub fn frobenius_via_hl(p: &DeltaParams) -> Result<SchurPoly> {
    let mut acc = SchurPoly::zero();
    for alpha in compositions_over(p.n, &p.lambda, p.s)? {
        let e = skew_n_stat(&alpha, &p.lambda)? + alpha.coinv();
        acc += &hl_transformed(&alpha.sort())?.scale(&QTPoly::q_pow(e as u32));
    }
    Ok(rev_q_schur(&acc))
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RouteTimings {
    pub skew_ms: f64,
    pub battery_ms: f64,
    pub hl_ms: f64,
}

/// All routes for one parameter set, with the comparisons between them.
#[derive(Clone, Debug, Serialize)]
pub struct RouteReport {
    pub params: DeltaParams,
    pub skew: SchurPoly,
    pub battery: SchurPoly,
    pub hl: SchurPoly,
    pub charge: SchurPoly,
    /// Skew, battery and HL routes are identical.
    pub routes_agree: bool,
    /// The charge form is the reversal of the battery route at degree
    /// `n(lambda) + (n-k)(s-1)`.
    pub charge_duality: bool,
    /// For `k = n`, whether the routes equal `H~_lambda`.
    pub springer_specialization: Option<bool>,
    pub nonnegative: bool,
    pub battery_tableaux: usize,
    pub compositions: usize,
    pub timings: RouteTimings,
}

impl RouteReport {
    pub fn ok(&self) -> bool {
        self.routes_agree && self.charge_duality && self.nonnegative && self.springer_specialization != Some(false)
    }
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

pub fn route_report(p: &DeltaParams) -> Result<RouteReport> {
    let start = Instant::now();
    let skew_route = frobenius_via_skew(p)?;
    let skew_ms = millis(start);

    let start = Instant::now();
    let sums = battery_sums(p)?;
    let battery = divide_q_power(&sums.cocharge, p.normalization())?;
    let battery_ms = millis(start);

    let start = Instant::now();
    let hl = frobenius_via_hl(p)?;
    let hl_ms = millis(start);

    let charge_duality = rev_q_schur_at(&battery, p.top_degree() as u32).is_ok_and(|r| r == sums.charge);
    let springer_specialization = if p.k() == p.n {
        Some(skew_route == hl_modified(&p.lambda)?)
    } else {
        None
    };
    Ok(RouteReport {
        params: p.clone(),
        routes_agree: skew_route == battery && battery == hl,
        charge_duality,
        springer_specialization,
        nonnegative: [&skew_route, &battery, &hl, &sums.charge]
            .iter()
            .all(|f| f.has_nonnegative_coefficients()),
        battery_tableaux: sums.count,
        compositions: compositions_over(p.n, &p.lambda, p.s)?.len(),
        skew: skew_route,
        battery,
        hl,
        charge: sums.charge,
        timings: RouteTimings {
            skew_ms,
            battery_ms,
            hl_ms,
        },
    })
}

/// Every `(n, lambda, s)` with `n <= max_n`, `|lambda| <= n` and
/// `max(l(lambda), 1) <= s <= n`, in a fixed order.
pub fn all_params(max_n: usize) -> Result<Vec<DeltaParams>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for k in 0..=n {
            for lambda in enumerate_partitions(k, None)? {
                for s in lambda.len().max(1)..=n {
                    out.push(DeltaParams::new(n, lambda.clone(), s)?);
                }
            }
        }
    }
    Ok(out)
}

/// Route reports for [`all_params`], computed in parallel.
pub fn verify_routes(max_n: usize) -> Result<Vec<RouteReport>> {
    all_params(max_n)?.par_iter().map(route_report).collect()
}

/// The top `q`-degree of `H~_{n,lambda,s}` is `n(lambda) + (s-1)(n-k)`, and
/// its coefficient is both `sum s_nu` over horizontal strips `nu/lambda` with
/// at most `s` rows and the skew Schur function `s_{Lambda/((n-k)^(s-1))}`.
pub fn top_degree_check(p: &DeltaParams) -> Result<bool> {
    let f = frobenius_via_battery(p)?;
    let d = p.top_degree() as u32;
    if f.q_degree() != Some(d) {
        return Ok(false);
    }
    let top = f.q_coefficient(d);
    let strips = SchurPoly::from_terms(
        enumerate_partitions(p.n, Some(p.s))?
            .into_iter()
            .filter(|nu| crate::partitions::is_horizontal_strip(nu, &p.lambda).unwrap_or(false))
            .map(|nu| (nu, QTPoly::one())),
    );
    let skew_schur = skew(&p.battery_shape(), &SchurPoly::s(p.lambda_rect()));
    Ok(top == strips && top == skew_schur)
}

/// Before normalization the battery sum has top degree
/// `n(lambda) + C(s,2)(n-k)`, attained by exactly one tableau of each
/// admissible device shape.
pub fn max_cocharge_check(p: &DeltaParams) -> Result<bool> {
    let sums = battery_sums(p)?;
    let d = (p.lambda.n_stat() + p.s * (p.s - 1) / 2 * p.width()) as u32;
    if sums.cocharge.q_degree() != Some(d) {
        return Ok(false);
    }
    let tops = crate::tableaux::max_cocharge_tableaux(p);
    let expected = SchurPoly::from_terms(tops.iter().map(|(nu, _)| (nu.clone(), QTPoly::one())));
    let all_max = tops
        .iter()
        .all(|(nu, t)| t.shape() == *nu && crate::tableaux::cc_battery(t) == d as usize);
    Ok(all_max && sums.cocharge.q_coefficient(d) == expected)
}

/// `sum_nu c^nu_{mu,((n-k)^(k-1))} K_{nu,((n-k+1)^k)}(q)` with charge
/// Kostka polynomials.
pub fn lr_kostka_coefficient(mu: &Partition, n: usize, k: usize) -> Result<QTPoly> {
    if mu.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: mu.size(),
        });
    }
    if k == 0 || k > n {
        return Err(Error::InvalidParams(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let rect = Partition::rectangle(n - k, k - 1);
    let big = Partition::rectangle(n - k + 1, k);
    let mut acc = QTPoly::zero();
    for (nu, c) in crate::schur::lr_product(mu, &rect).iter() {
        acc += &crate::hall_littlewood::q_kostka(nu, &big, false)?.scale(&num_bigint::BigInt::from(*c));
    }
    Ok(acc)
}

/// Compares [`lr_kostka_coefficient`] with the Schur coefficients of the
/// charge form for `lambda = (1^k)`, `s = k`, for every `mu` and `k`.
pub fn lr_kostka_check(n: usize) -> Result<bool> {
    for k in 1..=n {
        let f = frobenius_charge_form(&DeltaParams::rnk(n, k)?)?;
        for mu in enumerate_partitions(n, None)? {
            if lr_kostka_coefficient(&mu, n, k)? != f.coeff(&mu) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
