use delta_springer::delta_springer::conjectures::{
    conjecture_report, k2_proposition_check, omega_delta, t0_report, ConjectureOutcome,
};
use delta_springer::delta_springer::routes::{frobenius, route_report, Route};
use delta_springer::hall_littlewood::hl_modified;
use delta_springer::macdonald::{
    delta_prime_e, delta_prime_e_closed_form, expand_en_closed_form, expand_en_in_macdonald,
};
use delta_springer::partitions::enumerate_partitions;
use delta_springer::schur::{e_n, kostka_number, SchurPoly};
use delta_springer::{DeltaParams, Partition};
use num_bigint::BigInt;

#[test]
fn closed_form_matches_solve() {
    for n in 1..=6 {
        assert_eq!(
            expand_en_closed_form(n).unwrap(),
            *expand_en_in_macdonald(n).unwrap(),
            "n={n}"
        );
    }
}

#[test]
fn delta_by_both_expansions() {
    for n in 1..=5 {
        for k in 0..n {
            assert_eq!(
                delta_prime_e(k, n).unwrap(),
                delta_prime_e_closed_form(k, n).unwrap(),
                "k={k} n={n}"
            );
        }
    }
}

#[test]
fn delta_with_k_zero_is_identity() {
    for n in 1..=5 {
        assert_eq!(delta_prime_e(0, n).unwrap(), e_n(n));
    }
}

#[test]
fn top_delta_is_q_t_symmetric_and_positive() {
    for n in 1..=5 {
        for k in 1..=n {
            let f = omega_delta(n, k).unwrap();
            assert_eq!(f.swap_qt(), f, "n={n} k={k}");
            assert!(f.has_nonnegative_coefficients());
        }
    }
}

#[test]
fn full_n_gives_modified_hall_littlewood() {
    for n in 1..=5 {
        for lambda in enumerate_partitions(n, None).unwrap() {
            for s in lambda.len()..=n {
                let p = DeltaParams::new(n, lambda.clone(), s).unwrap();
                assert_eq!(
                    frobenius(&p, Route::Skew).unwrap(),
                    hl_modified(&lambda).unwrap(),
                    "{p}"
                );
            }
        }
    }
}

/// For `lambda` empty the module is `C[x]/(x_i^s)`: trivial for `s = 1`,
/// of dimension `s^n` in general.
#[test]
fn empty_lambda() {
    for n in 1..=5 {
        for s in 1..=n {
            let p = DeltaParams::new(n, Partition::empty(), s).unwrap();
            let f = frobenius(&p, Route::Battery).unwrap();
            if s == 1 {
                assert_eq!(f, SchurPoly::s(Partition::rectangle(n, 1)));
            }
            let one = BigInt::from(1);
            let dim: BigInt = f
                .iter()
                .map(|(lam, c)| c.eval(&one, &one) * kostka_number(lam, &Partition::rectangle(1, n)))
                .sum();
            assert_eq!(dim, BigInt::from(s).pow(n as u32), "{p}");
        }
    }
}

#[test]
fn route_report_fields() {
    let r = route_report(&DeltaParams::new(4, "2,1".parse().unwrap(), 3).unwrap()).unwrap();
    assert!(r.ok());
    assert!(r.battery_tableaux > 0);
    assert!(r.compositions > 0);
    assert_eq!(r.springer_specialization, None);
}

#[test]
fn t0_identities() {
    for n in 1..=5 {
        for k in 1..=n {
            assert!(t0_report(n, k).unwrap().ok(), "n={n} k={k}");
        }
    }
}

#[test]
fn conjectures_small() {
    for n in 2..=5 {
        for k in 2..n {
            for j in [1, 2] {
                let r = conjecture_report(n, k, j).unwrap();
                assert!(matches!(r.outcome, ConjectureOutcome::Holds), "{n} {k} {j}");
            }
        }
    }
}

#[test]
fn k2_proposition() {
    for n in 2..=7 {
        assert!(k2_proposition_check(n).unwrap(), "n={n}");
    }
}
