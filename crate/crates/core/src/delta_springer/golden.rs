//! Worked examples with their statistics, used as golden outputs.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{skew_n_stat, Composition, DeltaParams, Partition};
use crate::tableaux::{cc_battery, ch_battery, charge, format_word, BatteryTableau, Tableau};

use super::osp::{f_map, minimaj, osp_reading_word};
use super::s2::{phi, phi_map, psi};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Golden {
    Fig1,
    Fig3,
    S2,
}

impl Golden {
    pub const ALL: [Golden; 3] = [Golden::Fig1, Golden::Fig3, Golden::S2];
}

impl FromStr for Golden {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig1" => Ok(Golden::Fig1),
            "fig3" => Ok(Golden::Fig3),
            "s2" | "s2_running_example" => Ok(Golden::S2),
            other => Err(Error::Parse(format!("unknown example {other:?}"))),
        }
    }
}

impl fmt::Display for Golden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Golden::Fig1 => "fig1",
            Golden::Fig3 => "fig3",
            Golden::S2 => "s2",
        })
    }
}

fn tableau(rows: &[&[usize]]) -> Tableau {
    Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).expect("example tableau")
}

/// The battery-powered tableau for `n = 9`, `lambda = (3,2,1,1)`, `s = 4`.
pub fn fig1_tableau() -> BatteryTableau {
    BatteryTableau::new(
        tableau(&[&[1, 1, 1, 2, 2, 2], &[3, 3], &[4]]),
        tableau(&[&[1, 1], &[2, 3], &[4, 4]]),
        DeltaParams::new(9, "3,2,1,1".parse().expect("partition"), 4).expect("params"),
    )
    .expect("example tableau")
}

/// The one-row tableau for `n = 9`, `lambda = (1^4)`, `s = 4`.
pub fn fig3_tableau() -> BatteryTableau {
    BatteryTableau::new(
        tableau(&[&[1, 1, 2, 2, 2, 3, 3, 4, 4]]),
        tableau(&[&[1, 1, 1, 1, 2], &[2, 2, 3, 3, 3], &[3, 4, 4, 4, 4]]),
        DeltaParams::rnk(9, 4).expect("params"),
    )
    .expect("example tableau")
}

#[derive(Clone, Debug, Serialize)]
pub struct Fig1 {
    pub params: DeltaParams,
    pub lambda_rect: Partition,
    pub tableau: BatteryTableau,
    pub shape: Partition,
    pub reading_word: String,
    pub cocharge: usize,
    pub normalization: usize,
    /// `cc(T)` minus the normalization: the `q`-exponent of this
    /// tableau's term.
    pub term_exponent: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Fig3 {
    pub tableau: BatteryTableau,
    pub charge: usize,
    pub osp: String,
    pub minimaj: usize,
    pub osp_reading_word: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct S2Example {
    pub params: DeltaParams,
    pub lambda_rect: Partition,
    pub alpha: Composition,
    pub phi_alpha: Composition,
    pub n_stat: usize,
    pub coinv: usize,
    pub u: Tableau,
    pub charge_u: usize,
    pub psi: Vec<Vec<usize>>,
    pub image: BatteryTableau,
    pub charge_image: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum GoldenDocument {
    Fig1(Fig1),
    Fig3(Fig3),
    S2(S2Example),
}

pub fn fig1() -> Fig1 {
    let t = fig1_tableau();
    let cc = cc_battery(&t);
    Fig1 {
        params: t.params.clone(),
        lambda_rect: t.params.lambda_rect(),
        shape: t.shape(),
        reading_word: format_word(&t.reading_word()),
        cocharge: cc,
        normalization: t.params.normalization(),
        term_exponent: cc - t.params.normalization(),
        tableau: t,
    }
}

pub fn fig3() -> Result<Fig3> {
    let t = fig3_tableau();
    let p = f_map(&t)?;
    Ok(Fig3 {
        charge: ch_battery(&t),
        osp: p.to_string(),
        minimaj: minimaj(&p),
        osp_reading_word: format_word(&osp_reading_word(&p)),
        tableau: t,
    })
}

pub fn s2_example() -> Result<S2Example> {
    let lambda: Partition = "3,1".parse()?;
    let params = DeltaParams::new(11, lambda.clone(), 2)?;
    let alpha = Composition::new(vec![5, 6]);
    let u = tableau(&[&[1, 1, 1, 1, 1, 1, 2, 2], &[2, 2, 2]]);
    let image = phi_map(&params, &alpha, &u)?;
    Ok(S2Example {
        lambda_rect: params.lambda_rect(),
        phi_alpha: phi(&alpha, &lambda)?,
        n_stat: skew_n_stat(&alpha, &lambda)?,
        coinv: alpha.coinv(),
        charge_u: charge(&u.reading_word())?,
        psi: psi(&alpha, &u, &lambda)?,
        charge_image: ch_battery(&image),
        image,
        u,
        alpha,
        params,
    })
}

pub fn emit_golden(which: Golden) -> Result<GoldenDocument> {
    Ok(match which {
        Golden::Fig1 => GoldenDocument::Fig1(fig1()),
        Golden::Fig3 => GoldenDocument::Fig3(fig3()?),
        Golden::S2 => GoldenDocument::S2(s2_example()?),
    })
}

fn rows(r: &[Vec<usize>]) -> String {
    r.iter()
        .rev()
        .map(|row| format_word(row))
        .collect::<Vec<_>>()
        .join(" / ")
}

impl fmt::Display for GoldenDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoldenDocument::Fig1(d) => {
                writeln!(f, "params: {}", d.params)?;
                writeln!(f, "Lambda: {}", d.lambda_rect)?;
                writeln!(f, "device: {}", rows(d.tableau.device.rows()))?;
                writeln!(f, "battery: {}", rows(d.tableau.battery.rows()))?;
                writeln!(f, "shape: {}", d.shape)?;
                writeln!(f, "reading word: {}", d.reading_word)?;
                writeln!(f, "cc: {}", d.cocharge)?;
                write!(f, "term: q^{} s{}", d.term_exponent, d.shape)
            }
            GoldenDocument::Fig3(d) => {
                writeln!(f, "device: {}", rows(d.tableau.device.rows()))?;
                writeln!(f, "battery: {}", rows(d.tableau.battery.rows()))?;
                writeln!(f, "ch: {}", d.charge)?;
                writeln!(f, "f(T): {}", d.osp)?;
                writeln!(f, "minimaj: {}", d.minimaj)?;
                write!(f, "rw(f(T)): {}", d.osp_reading_word)
            }
            GoldenDocument::S2(d) => {
                writeln!(f, "params: {}", d.params)?;
                writeln!(f, "Lambda: {}", d.lambda_rect)?;
                writeln!(f, "alpha: {}", d.alpha)?;
                writeln!(f, "phi(alpha): {}", d.phi_alpha)?;
                writeln!(f, "n(alpha/lambda) + coinv(alpha): {} + {}", d.n_stat, d.coinv)?;
                writeln!(f, "U: {}", rows(d.u.rows()))?;
                writeln!(f, "ch(U): {}", d.charge_u)?;
                writeln!(f, "psi(alpha, U): {}", rows(&d.psi))?;
                writeln!(f, "device: {}", rows(d.image.device.rows()))?;
                writeln!(f, "battery: {}", rows(d.image.battery.rows()))?;
                write!(f, "ch(Phi(alpha, U)): {}", d.charge_image)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_box_example() {
        let d = fig1();
        assert_eq!(d.cocharge, 12);
        assert_eq!(d.shape, "6,2,1".parse().unwrap());
        assert_eq!(d.lambda_rect, "5,4,3,3".parse().unwrap());
        assert_eq!(d.term_exponent, 6);
    }

    #[test]
    fn one_row_example() {
        let d = fig3().unwrap();
        assert_eq!((d.charge, d.minimaj), (14, 14));
        assert_eq!(d.osp, "(45|367|28|19)");
        assert_eq!(d.osp_reading_word, "123456789");
    }

    #[test]
    fn running_example() {
        let d = s2_example().unwrap();
        assert_eq!(d.lambda_rect, "10,8".parse().unwrap());
        assert_eq!(d.phi_alpha, Composition::new(vec![3, 8]));
        assert_eq!((d.n_stat, d.coinv, d.charge_u), (2, 1, 2));
        assert_eq!(d.psi, vec![vec![1, 1, 1, 2, 2, 2, 2, 2], vec![2, 2, 2]]);
        assert_eq!(d.image.device, tableau(&[&[1; 8], &[2, 2, 2]]));
        assert_eq!(d.image.battery, tableau(&[&[1, 1, 2, 2, 2, 2, 2]]));
        assert_eq!(d.charge_image, 5);
    }

    #[test]
    fn names() {
        for g in Golden::ALL {
            assert_eq!(g.to_string().parse::<Golden>().unwrap(), g);
            assert!(!emit_golden(g).unwrap().to_string().is_empty());
        }
        assert!("fig2".parse::<Golden>().is_err());
    }
}
