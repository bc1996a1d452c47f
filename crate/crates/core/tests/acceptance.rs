//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails, except for a failure documented in the
//! criterion's own line (see criterion 9).

use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use delta_springer::delta_springer::conjectures::{
    conjecture_sweep, display_report, k2_report, omega_delta, t0_check, ConjectureOutcome,
};
use delta_springer::delta_springer::golden::{fig1, fig3, s2_example};
use delta_springer::delta_springer::osp::osp_check;
use delta_springer::delta_springer::routes::{
    all_params, lr_kostka_check, max_cocharge_check, top_degree_check, verify_routes, RouteReport,
};
use delta_springer::delta_springer::s2::s2_check;
use delta_springer::hall_littlewood::{hl_modified, q_kostka};
use delta_springer::macdonald::{macdonald_table, specialize_t0};
use delta_springer::partitions::enumerate_partitions;
use delta_springer::qt::QTPoly;
use delta_springer::schur::{hall_inner, schur_mul, skew, SchurPoly};
use delta_springer::tableaux::{
    charge, cocharge, enumerate_battery_tableaux, jdt_rectify, rsk_insert_word, BatteryTableau, Tableau,
};
use delta_springer::{Composition, Error, Partition};

type Res<T> = Result<T, Error>;

static NON_DIVISIBLE: AtomicBool = AtomicBool::new(false);

/// Records a `NonDivisible` error on its way through.
fn watch<T>(r: Res<T>) -> Res<T> {
    if let Err(Error::NonDivisible { .. }) = &r {
        NON_DIVISIBLE.store(true, Ordering::SeqCst);
    }
    r
}

struct Outcome {
    pass: bool,
    detail: String,
    /// A failure explained in `detail` that does not affect the exit status.
    documented: bool,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Outcome {
        Outcome {
            pass,
            detail: detail.into(),
            documented: false,
        }
    }
}

fn p(s: &str) -> Partition {
    s.parse().expect("partition literal")
}

fn golden() -> Res<Outcome> {
    let mut fails = Vec::new();
    let mut slowest = 0.0f64;
    let mut timed = |name: &str, f: &mut dyn FnMut() -> Res<bool>| -> Res<()> {
        let start = Instant::now();
        let ok = f()?;
        slowest = slowest.max(start.elapsed().as_secs_f64());
        if !ok {
            fails.push(name.to_string());
        }
        Ok(())
    };
    timed("fig1 cocharge", &mut || Ok(fig1().cocharge == 12))?;
    timed("fig3 charge and minimaj", &mut || {
        let d = fig3()?;
        Ok(d.charge == 14 && d.minimaj == 14)
    })?;
    timed("s=2 running example", &mut || {
        let d = s2_example()?;
        Ok(d.phi_alpha == Composition::new(vec![3, 8])
            && d.charge_image == 5
            && (d.charge_u, d.n_stat, d.coinv) == (2, 2, 1))
    })?;
    timed("rectangle Kostka", &mut || {
        Ok(q_kostka(&p("5,5,5"), &p("4,4,4,3"), true)? == QTPoly::q_pow(15))
    })?;
    timed("fig1 term", &mut || {
        let params = fig1().params;
        let f = watch(delta_springer::delta_springer::routes::frobenius_via_skew(&params))?;
        Ok(fig1().term_exponent == 6 && f.coeff(&p("6,2,1")).coeff(6, 0) > 0.into())
    })?;
    Ok(Outcome::new(
        fails.is_empty() && slowest < 1.0,
        if fails.is_empty() {
            format!("5 examples exact, slowest {slowest:.3} s")
        } else {
            format!("failed: {}", fails.join(", "))
        },
    ))
}

fn routes(reports: &[RouteReport], secs: f64) -> Outcome {
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| !r.routes_agree)
        .map(|r| r.params.to_string())
        .collect();
    Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} parameter triples, n <= 6, {secs:.1} s", reports.len())
        } else {
            format!("routes disagree at {}", bad.join(", "))
        },
    )
}

fn duality(reports: &[RouteReport]) -> Outcome {
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| !r.charge_duality || r.springer_specialization == Some(false) || !r.nonnegative)
        .map(|r| r.params.to_string())
        .collect();
    let springer = reports.iter().filter(|r| r.springer_specialization.is_some()).count();
    Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            format!(
                "duality on {} triples, k = n specialization on {springer}",
                reports.len()
            )
        } else {
            format!("failed at {}", bad.join(", "))
        },
    )
}

fn t0() -> Res<Outcome> {
    let reports = watch(t0_check(6))?;
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| !r.reversed_matches_skew)
        .map(|r| format!("(n={}, k={})", r.n, r.k))
        .collect();
    Ok(Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} pairs 1 <= k <= n <= 6", reports.len())
        } else {
            format!("failed at {}", bad.join(", "))
        },
    ))
}

fn lr_kostka() -> Res<Outcome> {
    let bad: Vec<usize> = (1..=6)
        .map(|n| watch(lr_kostka_check(n)).map(|ok| (n, ok)))
        .collect::<Res<Vec<_>>>()?
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| n)
        .collect();
    Ok(Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            "all mu |- n <= 6".into()
        } else {
            format!("failed for n in {bad:?}")
        },
    ))
}

fn top_degree() -> Res<Outcome> {
    let params = all_params(6)?;
    let mut bad = Vec::new();
    for q in &params {
        if !(watch(top_degree_check(q))? && watch(max_cocharge_check(q))?) {
            bad.push(q.to_string());
        }
    }
    Ok(Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} triples", params.len())
        } else {
            format!("failed at {}", bad.join(", "))
        },
    ))
}

fn s2() -> Res<Outcome> {
    let r = s2_check(9)?;
    Ok(Outcome::new(
        r.ok(),
        if r.ok() {
            format!(
                "n <= 9: {} triples, {} pairs, {} tableaux",
                r.cases, r.pairs, r.tableaux
            )
        } else {
            r.failures.iter().take(5).cloned().collect::<Vec<_>>().join("; ")
        },
    ))
}

fn osp() -> Res<Outcome> {
    let reports = watch(osp_check(7))?;
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| !r.ok())
        .map(|r| format!("(n={}, k={})", r.n, r.k))
        .collect();
    let value = reports
        .iter()
        .find(|r| (r.n, r.k) == (4, 2))
        .map(|r| r.generating_function.clone());
    let expected = QTPoly::from_q_coeffs(&[0, 1, 1, 1]);
    let value_ok = value.as_ref() == Some(&expected);
    Ok(Outcome::new(
        bad.is_empty() && value_ok,
        if !bad.is_empty() {
            format!("failed at {}", bad.join(", "))
        } else if !value_ok {
            format!("(4,2) value {value:?}, expected {expected}")
        } else {
            format!("{} pairs n <= 7; (4,2) value {expected}", reports.len())
        },
    ))
}

fn k2_conjectures_displays() -> Res<Outcome> {
    let mut notes = Vec::new();
    let mut pass = true;

    let mut k2_bad = Vec::new();
    for n in 2..=8 {
        let r = watch(k2_report(n, n <= 7))?;
        if !r.ok() || (n <= 7 && r.macdonald != Some(true)) {
            k2_bad.push(n);
        }
    }
    let n2 = SchurPoly::from_terms([(p("2"), &QTPoly::q() + &QTPoly::t()), (p("1,1"), QTPoly::one())]);
    let n2_ok = watch(omega_delta(2, 2))? == n2;
    if !k2_bad.is_empty() || !n2_ok {
        pass = false;
        notes.push(format!("k=2 fails for n in {k2_bad:?}, n=2 value ok: {n2_ok}"));
    }

    let sweep = watch(conjecture_sweep(2, 6))?;
    let mut skipped = 0;
    let mut conj_bad = Vec::new();
    for r in &sweep {
        match &r.outcome {
            ConjectureOutcome::Holds => {}
            ConjectureOutcome::Skipped {
                holds_without_term: true,
                ..
            } => skipped += 1,
            _ => conj_bad.push(format!("t^{} (n={}, k={})", r.j, r.n, r.k)),
        }
    }
    if !conj_bad.is_empty() {
        pass = false;
        notes.push(format!("conjectures fail at {}", conj_bad.join(", ")));
    }

    let d = display_report()?;
    if !d.replacement_equal {
        pass = false;
        notes.push("(5,3) alternative replacement differs".into());
    }
    let mut documented = false;
    if !d.ok() {
        pass = false;
        if d.corrected_ok() && d.computed_symmetric && !d.displays_symmetric {
            documented = true;
            notes.push(
                "printed (4,3) and (5,3) displays are not reproduced term-for-term: they lack t^3 s_(1,1)^perp H_(3,3) \
                 and t^2 s_(2,2)^perp H_(4,3,2), without which they are not q<->t symmetric; with those terms both match"
                    .into(),
            );
        } else {
            notes.push(format!("displays: {d:?}"));
        }
    }

    let summary = format!(
        "k=2 n <= 8 (Macdonald n <= 7); {} conjecture cases 2 <= k <= n <= 6, {skipped} with a term outside the partitions",
        sweep.len()
    );
    let detail = if notes.is_empty() {
        summary
    } else {
        format!("{}; {summary}", notes.join("; "))
    };
    Ok(Outcome {
        pass,
        documented: documented && notes.len() == 1,
        detail,
    })
}

/// Multiset permutations in lexicographic order, starting from sorted `w`.
fn next_permutation(w: &mut [usize]) -> bool {
    let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
        return false;
    };
    let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).expect("successor exists");
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

fn charge_sum() -> Res<(bool, usize)> {
    let mut words = 0;
    for len in 0..=8 {
        for mu in enumerate_partitions(len, None)? {
            let mut w: Vec<usize> = mu
                .parts()
                .iter()
                .enumerate()
                .flat_map(|(i, &m)| std::iter::repeat_n(i + 1, m))
                .collect();
            loop {
                words += 1;
                if charge(&w)? + cocharge(&w)? != mu.n_stat() {
                    return Ok((false, words));
                }
                if !next_permutation(&mut w) {
                    break;
                }
            }
        }
    }
    Ok((true, words))
}

fn knuth_invariance() -> Res<bool> {
    let pool: Vec<BatteryTableau> = all_params(5)?.iter().flat_map(enumerate_battery_tableaux).collect();
    let config = Config {
        cases: 500,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let result = runner.run(&any::<prop::sample::Index>(), |idx| {
        let t = idx.get(&pool);
        let w = t.reading_word();
        let rect = jdt_rectify(&t.skew());
        let inserted = rsk_insert_word(&Tableau::empty(), &w);
        prop_assert_eq!(&rect, &inserted);
        let cc = cocharge(&w).expect("partition content");
        prop_assert_eq!(cocharge(&rect.reading_word()).expect("partition content"), cc);
        Ok(())
    });
    Ok(result.is_ok())
}

fn lr_adjoint() -> Res<bool> {
    for d in 0..=6 {
        for lam in enumerate_partitions(d, None)? {
            let f = SchurPoly::s(lam.clone());
            for m in 0..=d {
                for mu in enumerate_partitions(m, None)? {
                    let lhs_op = skew(&mu, &f);
                    for nu in enumerate_partitions(d - m, None)? {
                        let g = SchurPoly::s(nu);
                        if hall_inner(&lhs_op, &g) != hall_inner(&f, &schur_mul(&SchurPoly::s(mu.clone()), &g)) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

fn macdonald_invariants() -> Res<bool> {
    for n in 1..=6 {
        let table = macdonald_table(n)?;
        for (mu, h) in &table.polys {
            let conj = &table.polys[&mu.conjugate()];
            if specialize_t0(h) != hl_modified(&mu.conjugate())?
                || h.swap_qt() != *conj
                || !h.has_nonnegative_coefficients()
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn properties() -> Res<Outcome> {
    let (charge_ok, words) = charge_sum()?;
    let knuth_ok = knuth_invariance()?;
    let lr_ok = lr_adjoint()?;
    let mac_ok = macdonald_invariants()?;
    let nondiv = !NON_DIVISIBLE.load(Ordering::SeqCst);
    let parts = [
        (charge_ok, format!("charge+cocharge on {words} words")),
        (knuth_ok, "Knuth/jdt invariance on 500 tableaux".into()),
        (lr_ok, "LR adjointness to degree 6".into()),
        (mac_ok, "Macdonald invariants n <= 6".into()),
        (nondiv, "no NonDivisible".into()),
    ];
    let pass = parts.iter().all(|(ok, _)| *ok);
    let detail = parts
        .iter()
        .map(|(ok, s)| if *ok { s.clone() } else { format!("FAILED {s}") })
        .collect::<Vec<_>>()
        .join(", ");
    Ok(Outcome::new(pass, detail))
}

fn main() -> ExitCode {
    let mut failed = false;
    let mut report = |num: usize, title: &str, start: Instant, r: Res<Outcome>| {
        let secs = start.elapsed().as_secs_f64();
        let o = match watch(r) {
            Ok(o) => o,
            Err(e) => Outcome::new(false, format!("error: {e}")),
        };
        println!(
            "{} {num:>2} {title} [{secs:.2} s]: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.pass && !o.documented {
            failed = true;
        }
    };

    let start = Instant::now();
    report(1, "golden examples", start, golden());

    let start = Instant::now();
    let reports = watch(verify_routes(6));
    let secs = start.elapsed().as_secs_f64();
    match reports {
        Ok(reports) => {
            report(2, "route agreement", start, Ok(routes(&reports, secs)));
            report(
                3,
                "charge duality and k = n specialization",
                Instant::now(),
                Ok(duality(&reports)),
            );
        }
        Err(e) => {
            report(2, "route agreement", start, Err(e.clone()));
            report(3, "charge duality and k = n specialization", start, Err(e));
        }
    }

    let start = Instant::now();
    report(4, "t = 0 specialization", start, t0());
    let start = Instant::now();
    report(5, "LR-Kostka coefficients", start, lr_kostka());
    let start = Instant::now();
    report(6, "top degree", start, top_degree());
    let start = Instant::now();
    report(7, "s = 2 bijections", start, s2());
    let start = Instant::now();
    report(8, "ordered set partitions", start, osp());
    let start = Instant::now();
    report(
        9,
        "k = 2 proposition, conjectures and displays",
        start,
        k2_conjectures_displays(),
    );
    let start = Instant::now();
    report(10, "property suites", start, properties());

    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
