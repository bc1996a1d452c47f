use anyhow::Result;
use serde_json::{json, Value};

use delta_springer::delta_springer::conjectures::{
    conjecture_sweep, display_report, k2_report, t0_check, ConjectureOutcome,
};
use delta_springer::delta_springer::osp::osp_check;
use delta_springer::delta_springer::routes::{
    all_params, lr_kostka_check, max_cocharge_check, top_degree_check, verify_routes,
};
use delta_springer::delta_springer::s2::s2_report;
use delta_springer::guard;

use crate::{Check, Format, ASSERTION_FAILED};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    /// Not applicable as stated; see the note.
    Skip,
    /// A documented discrepancy, failing exactly as documented.
    Xfail,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Xfail => "XFAIL",
        }
    }

    fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

struct Case {
    name: String,
    status: Status,
    note: Option<String>,
    detail: Value,
    /// Printed in text mode when the case fails.
    diff: Option<String>,
}

impl Case {
    fn new(name: impl Into<String>, ok: bool, detail: Value) -> Case {
        Case {
            name: name.into(),
            status: Status::from_bool(ok),
            note: None,
            detail,
            diff: None,
        }
    }
}

fn routes(max_n: usize) -> Result<Vec<Case>> {
    Ok(verify_routes(max_n)?
        .into_iter()
        .map(|r| {
            let diff = (!r.ok()).then(|| {
                format!(
                    "skew:    {}\nbattery: {}\nhl:      {}\ncharge:  {}",
                    r.skew, r.battery, r.hl, r.charge
                )
            });
            let mut c = Case::new(r.params.to_string(), r.ok(), json!(r));
            c.diff = diff;
            c
        })
        .collect())
}

fn t0(max_n: usize) -> Result<Vec<Case>> {
    let mut out: Vec<Case> = t0_check(max_n)?
        .into_iter()
        .map(|r| Case::new(format!("t=0 n={} k={}", r.n, r.k), r.ok(), json!(r)))
        .collect();
    for n in 1..=max_n {
        let ok = lr_kostka_check(n)?;
        out.push(Case::new(format!("LR-Kostka n={n}"), ok, json!({ "n": n, "ok": ok })));
    }
    Ok(out)
}

fn conjectures(max_n: usize) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for r in conjecture_sweep(2, max_n)? {
        let name = format!("t^{} n={} k={}", r.j, r.n, r.k);
        let mut c = Case::new(name, r.outcome.holds(), json!(r));
        match &r.outcome {
            ConjectureOutcome::Skipped {
                reason,
                holds_without_term,
            } => {
                c.status = if *holds_without_term {
                    Status::Skip
                } else {
                    Status::Fail
                };
                c.note = Some(format!(
                    "{reason}; without that term the identity {}",
                    if *holds_without_term { "holds" } else { "fails" }
                ));
            }
            ConjectureOutcome::Fails { expected, found } => {
                c.diff = Some(format!("conjectured: {expected}\ncomputed:    {found}"));
            }
            ConjectureOutcome::Holds => {}
        }
        out.push(c);
    }
    let d = display_report()?;
    let mut printed = Case::new("displays (4,3) and (5,3) as printed", d.ok(), json!(d));
    if !d.ok() && d.corrected_ok() && d.computed_symmetric && !d.displays_symmetric {
        printed.status = Status::Xfail;
        printed.note = Some(
            "the printed displays omit t^3 H_(3,3) and t^2 H_(4,3,2) respectively (they break q<->t symmetry); \
             with those terms they match exactly"
                .into(),
        );
    }
    out.push(printed);
    out.push(Case::new(
        "display (5,3) alternative t^3 terms",
        d.replacement_equal,
        json!(d.replacement_equal),
    ));
    let macdonald_limit = guard::limit(guard::MACDONALD_N);
    for n in 2..=max_n.max(8) {
        let r = k2_report(n, n <= macdonald_limit)?;
        out.push(Case::new(format!("k=2 proposition n={n}"), r.ok(), json!(r)));
    }
    Ok(out)
}

fn s2(max_n: usize) -> Result<Vec<Case>> {
    (1..=max_n)
        .map(|n| {
            let r = s2_report(n)?;
            let mut c = Case::new(format!("s=2 bijection n={n}"), r.ok(), json!(r));
            if !r.ok() {
                c.diff = Some(r.failures.join("\n"));
            }
            Ok(c)
        })
        .collect()
}

fn osp(max_n: usize) -> Result<Vec<Case>> {
    Ok(osp_check(max_n)?
        .into_iter()
        .map(|r| Case::new(format!("OSP n={} k={}", r.n, r.k), r.ok(), json!(r)))
        .collect())
}

fn topdeg(max_n: usize) -> Result<Vec<Case>> {
    all_params(max_n)?
        .iter()
        .map(|p| {
            let top = top_degree_check(p)?;
            let max = max_cocharge_check(p)?;
            Ok(Case::new(
                p.to_string(),
                top && max,
                json!({ "params": p, "top_degree": top, "max_cocharge": max }),
            ))
        })
        .collect()
}

fn default_max_n(check: Check) -> usize {
    match check {
        Check::S2 => 9,
        Check::Osp => 7,
        _ => 6,
    }
}

pub fn run(check: Check, max_n: Option<usize>, format: Format) -> Result<u8> {
    let max_n = max_n.unwrap_or_else(|| default_max_n(check));
    if matches!(check, Check::T0 | Check::Conjectures) {
        crate::warn_raised_guard(max_n);
    }
    let cases = match check {
        Check::Routes => routes(max_n)?,
        Check::T0 => t0(max_n)?,
        Check::Conjectures => conjectures(max_n)?,
        Check::S2 => s2(max_n)?,
        Check::Osp => osp(max_n)?,
        Check::Topdeg => topdeg(max_n)?,
    };
    let count = |s: Status| cases.iter().filter(|c| c.status == s).count();
    match format {
        Format::Text => {
            for c in &cases {
                match &c.note {
                    Some(note) => println!("{} {} ({note})", c.status.label(), c.name),
                    None => println!("{} {}", c.status.label(), c.name),
                }
                if c.status == Status::Fail {
                    if let Some(diff) = &c.diff {
                        for line in diff.lines() {
                            println!("    {line}");
                        }
                    }
                }
            }
            println!(
                "{} passed, {} failed, {} skipped, {} expected failures",
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Skip),
                count(Status::Xfail)
            );
        }
        Format::Csv => {
            println!("case;status");
            for c in &cases {
                println!("{};{}", c.name, c.status.label());
            }
        }
        Format::Json => {
            let doc: Vec<Value> = cases
                .iter()
                .map(|c| {
                    json!({
                        "case": c.name,
                        "status": c.status.label(),
                        "note": c.note,
                        "detail": c.detail,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
    }
    Ok(if count(Status::Fail) == 0 { 0 } else { ASSERTION_FAILED })
}
