//! Ordered set partitions, minimaj, and the bijection `f` between one-row
//! battery-powered tableaux and highest-weight OSPs.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{DeltaParams, Partition};
use crate::qt::QTPoly;
use crate::tableaux::{
    ch_battery, charge_labels_with_subwords, for_each_battery_tableau, ssyt_shape_weak_content, BatteryTableau, Tableau,
};

use super::routes::frobenius_charge_form;

/// Blocks are kept sorted internally; their order is the partition's order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut blocks = blocks;
        let mut seen: Vec<usize> = blocks.iter().flatten().copied().collect();
        seen.sort_unstable();
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::InvalidParams("empty block".into()));
        }
        if seen.iter().enumerate().any(|(i, &x)| x != i + 1) {
            return Err(Error::InvalidParams(format!(
                "blocks {blocks:?} do not partition 1..{}",
                seen.len()
            )));
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        Ok(OrderedSetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks sorted ascending and concatenated.
    pub fn minimaj_word(&self) -> Vec<usize> {
        self.blocks.concat()
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() >= 10 { "," } else { "" };
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep))
            .collect();
        write!(f, "({})", blocks.join("|"))
    }
}

impl FromStr for OrderedSetPartition {
    type Err = Error;

    /// `(45|367|28|19)`; blocks may use commas when entries exceed 9.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected (..|..), got {s:?}")))?;
        let bad = || Error::Parse(format!("bad entry in {s:?}"));
        let blocks = inner
            .split('|')
            .map(|b| {
                if b.contains(',') {
                    b.split(',')
                        .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
                        .collect()
                } else {
                    b.trim()
                        .chars()
                        .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                        .collect::<Result<Vec<_>>>()
                }
            })
            .collect::<Result<Vec<_>>>()?;
        OrderedSetPartition::new(blocks)
    }
}

pub fn major_index(w: &[usize]) -> usize {
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
        .sum()
}

pub fn minimaj(p: &OrderedSetPartition) -> usize {
    major_index(&p.minimaj_word())
}

/// Block minima from right to left, then the other entries from left to
/// right.
pub fn osp_reading_word(p: &OrderedSetPartition) -> Vec<usize> {
    let mut w: Vec<usize> = p.blocks.iter().rev().map(|b| b[0]).collect();
    w.extend(p.blocks.iter().flat_map(|b| b[1..].iter().copied()));
    w
}

/// Every OSP of `{1..n}` into `k` blocks, by brute force.
pub fn enumerate_osps(n: usize, k: usize) -> Vec<OrderedSetPartition> {
    fn rec(x: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<OrderedSetPartition>) {
        if x > n {
            if blocks.iter().all(|b| !b.is_empty()) {
                out.push(OrderedSetPartition { blocks: blocks.clone() });
            }
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(x);
            rec(x + 1, n, blocks, out);
            blocks[i].pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    rec(1, n, &mut vec![Vec::new(); k], &mut out);
    out
}

fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=n.saturating_sub(k - 1) {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// OSPs of `{1..n}` with `k` blocks whose reading word is `12...n`. For each
/// composition of block sizes, the letters are assigned in increasing order
/// and a placement is abandoned as soon as the reading word can no longer be
/// the identity.
pub fn enumerate_highest_weight_osps(n: usize, k: usize) -> Vec<OrderedSetPartition> {
    struct Search<'a> {
        n: usize,
        k: usize,
        sizes: &'a [usize],
        blocks: Vec<Vec<usize>>,
        out: Vec<OrderedSetPartition>,
    }
    fn rec(s: &mut Search, x: usize, last_block: usize) {
        if x > s.n {
            let p = OrderedSetPartition {
                blocks: s.blocks.clone(),
            };
            if osp_reading_word(&p).iter().enumerate().all(|(i, &y)| y == i + 1) {
                s.out.push(p);
            }
            return;
        }
        for i in 0..s.k {
            let b = &s.blocks[i];
            if b.len() == s.sizes[i] {
                continue;
            }
            let opens = b.is_empty();
            // minima are read right to left, so the x-th minimum sits in block k-x
            if opens != (x <= s.k) || (opens && i != s.k - x) {
                continue;
            }
            // the remaining letters are read left to right
            if !opens && i < last_block {
                continue;
            }
            s.blocks[i].push(x);
            rec(s, x + 1, if opens { last_block } else { i });
            s.blocks[i].pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    for sizes in compositions(n, k) {
        let mut s = Search {
            n,
            k,
            sizes: &sizes,
            blocks: vec![Vec::new(); k],
            out: Vec::new(),
        };
        rec(&mut s, 1, 0);
        out.append(&mut s.out);
    }
    out.sort();
    out
}

fn one_row_domain(t: &BatteryTableau) -> Result<(usize, usize)> {
    let p = &t.params;
    let k = p.k();
    if p.lambda != Partition::rectangle(1, k) || p.s != k || t.device.rows().len() != 1 {
        return Err(Error::DomainViolation(format!(
            "f needs lambda = (1^k), s = k and a one-row device, got {p} with device shape {}",
            t.shape()
        )));
    }
    Ok((p.n, k))
}

/// Block `B_i` starts with `k+1-i`; then `k+1, ..., n` fill the blocks from
/// left to right so that `|B_i|` is the number of `i`s in the device.
pub fn f_map(t: &BatteryTableau) -> Result<OrderedSetPartition> {
    let (n, k) = one_row_domain(t)?;
    let m = t.device.content();
    let mut next = k + 1;
    let mut blocks = Vec::with_capacity(k);
    for i in 0..k {
        let mi = m.get(i).copied().unwrap_or(0);
        if mi == 0 {
            return Err(Error::DomainViolation(format!("device has no {}", i + 1)));
        }
        let mut b = vec![k - i];
        b.extend(next..next + mi - 1);
        next += mi - 1;
        blocks.push(b);
    }
    debug_assert_eq!(next, n + 1);
    OrderedSetPartition::new(blocks)
}

/// The device has `|B_i|` copies of `i`; the battery is the unique SSYT of
/// shape `((n-k)^(k-1))` with the remaining content.
pub fn f_inv(p: &OrderedSetPartition) -> Result<BatteryTableau> {
    let (n, k) = (p.n(), p.num_blocks());
    let params = DeltaParams::rnk(n, k)?;
    let sizes: Vec<usize> = p.blocks.iter().map(Vec::len).collect();
    let device = Tableau::row(
        sizes
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| std::iter::repeat_n(i + 1, m))
            .collect(),
    )?;
    let content = sizes
        .iter()
        .map(|&m| (n - k + 1).checked_sub(m))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::DomainViolation(format!("a block of {p} is too large")))?;
    let mut batteries = ssyt_shape_weak_content(&params.battery_shape(), &content);
    if batteries.len() != 1 {
        return Err(Error::DomainViolation(format!("{} batteries fit {p}", batteries.len())));
    }
    BatteryTableau::new(device, batteries.remove(0), params)
}

fn one_row_tableaux(n: usize, k: usize) -> Result<Vec<BatteryTableau>> {
    let params = DeltaParams::rnk(n, k)?;
    let mut out = Vec::new();
    for_each_battery_tableau(&params, |d, b| {
        if d.rows().len() == 1 {
            out.push(BatteryTableau {
                device: d.clone(),
                battery: b.clone(),
                params: params.clone(),
            });
        }
    });
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct OspReport {
    pub n: usize,
    pub k: usize,
    pub tableaux: usize,
    pub osps: usize,
    pub bijection: bool,
    pub weight_preserving: bool,
    pub labels_lemma: bool,
    pub sn_coefficient: bool,
    pub generating_function: QTPoly,
}

impl OspReport {
    pub fn ok(&self) -> bool {
        self.bijection && self.weight_preserving && self.labels_lemma && self.sn_coefficient
    }
}

/// The `s_(n)` coefficient three ways: minimaj over highest-weight OSPs,
/// charge over one-row tableaux, and the charge form itself.
pub fn sn_coefficient_check(n: usize, k: usize) -> Result<bool> {
    let [a, b, c] = sn_values(n, k)?;
    Ok(a == b && b == c)
}

fn sn_values(n: usize, k: usize) -> Result<[QTPoly; 3]> {
    let osp: QTPoly = enumerate_highest_weight_osps(n, k)
        .iter()
        .map(|p| QTPoly::q_pow(minimaj(p) as u32))
        .sum();
    let tab: QTPoly = one_row_tableaux(n, k)?
        .iter()
        .map(|t| QTPoly::q_pow(ch_battery(t) as u32))
        .sum();
    let form = frobenius_charge_form(&DeltaParams::rnk(n, k)?)?.coeff(&Partition::rectangle(n, 1));
    Ok([osp, tab, form])
}

/// Checks the charge labelling of one tableau: battery labels are 0 or 1 and
/// equal 1 exactly on entries larger than their row index; device labels are
/// 0 outside the last charge subword, which lies in the device and reads
/// `1 2 ... k` with labels `0 1 ... k-1`.
pub fn charge_labels_lemma_holds(t: &BatteryTableau) -> Result<bool> {
    let dw = t.device.reading_word();
    let mut w = dw.clone();
    let mut rows = Vec::new();
    for (r, row) in t.battery.rows().iter().enumerate().rev() {
        w.extend(row);
        rows.extend(std::iter::repeat_n(r + 1, row.len()));
    }
    let (labels, subword) = charge_labels_with_subwords(&w)?;
    let d = dw.len();
    for (j, &r) in rows.iter().enumerate() {
        let expect = usize::from(w[d + j] > r);
        if labels[d + j] != expect {
            return Ok(false);
        }
    }
    let last = subword.iter().copied().max().unwrap_or(0);
    if subword[d..].contains(&last) {
        return Ok(false);
    }
    let mut final_letters = Vec::new();
    for i in 0..d {
        if subword[i] == last {
            final_letters.push(w[i]);
            if labels[i] + 1 != w[i] {
                return Ok(false);
            }
        } else if labels[i] != 0 {
            return Ok(false);
        }
    }
    Ok(final_letters == (1..=t.params.k()).collect::<Vec<_>>())
}

pub fn battery_charge_labels_check(n: usize, k: usize) -> Result<bool> {
    for t in one_row_tableaux(n, k)? {
        if !charge_labels_lemma_holds(&t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn osp_report(n: usize, k: usize) -> Result<OspReport> {
    let tableaux = one_row_tableaux(n, k)?;
    let osps = enumerate_highest_weight_osps(n, k);
    let mut images = Vec::with_capacity(tableaux.len());
    let mut weight_preserving = true;
    let mut inverse = true;
    for t in &tableaux {
        let p = f_map(t)?;
        weight_preserving &= ch_battery(t) == minimaj(&p);
        inverse &= f_inv(&p).is_ok_and(|u| u.device == t.device && u.battery == t.battery);
        images.push(p);
    }
    images.sort();
    let values = sn_values(n, k)?;
    let mut labels_lemma = true;
    for t in &tableaux {
        labels_lemma &= charge_labels_lemma_holds(t)?;
    }
    Ok(OspReport {
        n,
        k,
        tableaux: tableaux.len(),
        osps: osps.len(),
        bijection: inverse && images == osps,
        weight_preserving,
        labels_lemma,
        sn_coefficient: values[0] == values[1] && values[1] == values[2],
        generating_function: values[0].clone(),
    })
}

/// Reports for every `1 <= k <= n <= max_n`.
pub fn osp_check(max_n: usize) -> Result<Vec<OspReport>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for k in 1..=n {
            out.push(osp_report(n, k)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn osp(s: &str) -> OrderedSetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn statistics_of_the_example() {
        let p = osp("(45|367|28|19)");
        assert_eq!(p.minimaj_word(), vec![4, 5, 3, 6, 7, 2, 8, 1, 9]);
        assert_eq!(minimaj(&p), 14);
        assert_eq!(osp_reading_word(&p), (1..=9).collect::<Vec<_>>());
        assert_eq!(p.to_string(), "(45|367|28|19)");
        assert_eq!(minimaj(&osp("(2|134)")), 1);
        assert_eq!(minimaj(&osp("(12345)")), 0);
        assert_eq!(osp_reading_word(&osp("(2|1)")), vec![1, 2]);
    }

    #[test]
    fn parsing() {
        assert!("(12|2)".parse::<OrderedSetPartition>().is_err());
        assert!("(13)".parse::<OrderedSetPartition>().is_err());
        assert!("12".parse::<OrderedSetPartition>().is_err());
        let big = osp("(1,10|2,3,4,5,6,7,8,9)");
        assert_eq!(big.to_string(), "(1,10|2,3,4,5,6,7,8,9)");
        assert_eq!(osp(&big.to_string()), big);
    }

    #[test]
    fn highest_weight_small() {
        let got = enumerate_highest_weight_osps(4, 2);
        let mut want = vec![osp("(234|1)"), osp("(23|14)"), osp("(2|134)")];
        want.sort();
        assert_eq!(got, want);
        let gf: QTPoly = got.iter().map(|p| QTPoly::q_pow(minimaj(p) as u32)).sum();
        assert_eq!(gf, QTPoly::from_q_coeffs(&[0, 1, 1, 1]));
        for n in 1..=6 {
            assert_eq!(enumerate_highest_weight_osps(n, 1).len(), 1);
            let all = enumerate_highest_weight_osps(n, n);
            assert_eq!(all.len(), 1);
            assert_eq!(all[0].minimaj_word(), (1..=n).rev().collect::<Vec<_>>());
        }
    }

    #[test]
    fn pruned_enumeration_matches_brute_force() {
        for n in 1..=7 {
            for k in 1..=n {
                let brute: Vec<_> = enumerate_osps(n, k)
                    .into_iter()
                    .filter(|p| osp_reading_word(p).iter().enumerate().all(|(i, &y)| y == i + 1))
                    .collect();
                let mut brute = brute;
                brute.sort();
                assert_eq!(enumerate_highest_weight_osps(n, k), brute, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn f_on_one_row_example() {
        let t = BatteryTableau::new(
            Tableau::row(vec![1, 1, 2, 2, 2, 3, 3, 4, 4]).unwrap(),
            Tableau::new(vec![vec![1, 1, 1, 1, 2], vec![2, 2, 3, 3, 3], vec![3, 4, 4, 4, 4]]).unwrap(),
            DeltaParams::rnk(9, 4).unwrap(),
        )
        .unwrap();
        let p = f_map(&t).unwrap();
        assert_eq!(p, osp("(45|367|28|19)"));
        assert_eq!(ch_battery(&t), 14);
        let back = f_inv(&p).unwrap();
        assert_eq!((back.device, back.battery), (t.device.clone(), t.battery.clone()));
        assert!(charge_labels_lemma_holds(&t).unwrap());
    }

    #[test]
    fn singletons_when_k_is_n() {
        for n in 1..=6 {
            let r = osp_report(n, n).unwrap();
            assert!(r.ok());
            assert_eq!(r.tableaux, 1);
            assert_eq!(r.generating_function, QTPoly::q_pow((n * (n - 1) / 2) as u32));
        }
    }

    #[test]
    fn sweep_small() {
        for r in osp_check(6).unwrap() {
            assert!(r.ok(), "{r:?}");
        }
        assert!(sn_coefficient_check(4, 2).unwrap());
    }

    #[test]
    fn f_rejects_other_parameters() {
        let params = DeltaParams::new(3, "2".parse().unwrap(), 1).unwrap();
        let t = BatteryTableau::new(Tableau::row(vec![1, 1, 1]).unwrap(), Tableau::empty(), params).unwrap();
        assert!(f_map(&t).is_err());
    }
}
