use proptest::prelude::*;

use delta_springer::delta_springer::osp::{f_inv, f_map, minimaj, OrderedSetPartition};
use delta_springer::delta_springer::s2::{phi, phi_inv};
use delta_springer::partitions::{compositions_over, enumerate_partitions};
use delta_springer::tableaux::{
    ch_battery, charge, cocharge, enumerate_battery_tableaux, jdt_rectify, rsk_insert_word, Tableau,
};
use delta_springer::{Composition, DeltaParams, Partition};

/// A shuffled word whose content is a partition.
fn arb_word(max_len: usize) -> impl Strategy<Value = (Partition, Vec<usize>)> {
    (1..=max_len)
        .prop_flat_map(|n| prop::sample::select(enumerate_partitions(n, None).unwrap()))
        .prop_flat_map(|mu| {
            let w: Vec<usize> = mu
                .parts()
                .iter()
                .enumerate()
                .flat_map(|(i, &m)| std::iter::repeat_n(i + 1, m))
                .collect();
            (Just(mu), Just(w).prop_shuffle())
        })
}

fn arb_params(max_n: usize) -> impl Strategy<Value = DeltaParams> {
    let all = delta_springer::delta_springer::routes::all_params(max_n).unwrap();
    prop::sample::select(all)
}

proptest! {
    #[test]
    fn charge_plus_cocharge((mu, w) in arb_word(11)) {
        prop_assert_eq!(charge(&w).unwrap() + cocharge(&w).unwrap(), mu.n_stat());
    }

    #[test]
    fn insertion_preserves_cocharge((_mu, w) in arb_word(10)) {
        let t = rsk_insert_word(&Tableau::empty(), &w);
        prop_assert_eq!(cocharge(&t.reading_word()).unwrap(), cocharge(&w).unwrap());
        prop_assert_eq!(rsk_insert_word(&Tableau::empty(), &t.reading_word()), t);
    }

    #[test]
    fn rectification_is_insertion(p in arb_params(5), idx in any::<prop::sample::Index>()) {
        let all = enumerate_battery_tableaux(&p);
        prop_assume!(!all.is_empty());
        let t = idx.get(&all);
        let w = t.reading_word();
        prop_assert_eq!(jdt_rectify(&t.skew()), rsk_insert_word(&Tableau::empty(), &w));
    }

    #[test]
    fn phi_round_trip(n in 0usize..10, a in 0usize..4, b in 0usize..3, idx in any::<prop::sample::Index>()) {
        prop_assume!(a >= b && a + b <= n);
        let lambda = Partition::new(vec![a, b]).unwrap();
        let alphas = compositions_over(n, &lambda, 2).unwrap();
        prop_assume!(!alphas.is_empty());
        let alpha = idx.get(&alphas);
        let beta = phi(alpha, &lambda).unwrap();
        prop_assert!(alphas.contains(&beta));
        prop_assert_eq!(&phi_inv(&beta, &lambda).unwrap(), alpha);
    }

    #[test]
    fn osp_f_round_trip(n in 1usize..7, k in 1usize..7, idx in any::<prop::sample::Index>()) {
        prop_assume!(k <= n);
        let all = enumerate_battery_tableaux(&DeltaParams::rnk(n, k).unwrap());
        let one_row: Vec<_> = all.into_iter().filter(|t| t.device.rows().len() == 1).collect();
        prop_assume!(!one_row.is_empty());
        let t = idx.get(&one_row);
        let p = f_map(t).unwrap();
        prop_assert_eq!(p.num_blocks(), k);
        prop_assert_eq!(minimaj(&p), ch_battery(t));
        prop_assert_eq!(&f_inv(&p).unwrap(), t);
        let text = p.to_string();
        prop_assert_eq!(text.parse::<OrderedSetPartition>().unwrap(), p);
    }
}

#[test]
fn composition_statistics() {
    let a = Composition::new(vec![5, 6]);
    assert_eq!(a.coinv(), 1);
    assert_eq!(a.sort(), "6,5".parse().unwrap());
    for n in 0..=6 {
        for s in 1..=3 {
            for a in compositions_over(n, &Partition::empty(), s).unwrap() {
                assert_eq!((a.size(), a.len()), (n, s));
            }
        }
    }
}

#[test]
fn osp_parse_errors() {
    for bad in ["(12|2)", "(1|3)", "(|1)", "12|3", "(0|1)"] {
        assert!(bad.parse::<OrderedSetPartition>().is_err(), "{bad}");
    }
}
