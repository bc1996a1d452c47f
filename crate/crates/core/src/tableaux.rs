//! Semistandard tableaux in French notation (row 0 is the bottom row),
//! reading words, charge and cocharge, insertion, jeu de taquin and the
//! enumerators used by the Frobenius routes.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, horizontal_strip, DeltaParams, Partition};

pub type Word = Vec<usize>;

/// Digits when every letter is at most 9, comma-separated otherwise.
pub fn format_word(w: &[usize]) -> String {
    if w.iter().all(|&x| x <= 9) {
        w.iter().map(|x| x.to_string()).collect()
    } else {
        w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Parses digit strings ("433111") or comma-separated letters.
pub fn parse_word(s: &str) -> Result<Word> {
    let s = s.trim();
    let bad = |e: std::num::ParseIntError| Error::Parse(format!("bad word {s:?}: {e}"));
    if s.contains(',') {
        s.split(',').map(|x| x.trim().parse().map_err(bad)).collect()
    } else {
        s.chars().map(|c| c.to_string().parse().map_err(bad)).collect()
    }
}

/// Straight-shape semistandard tableau, rows listed bottom to top.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let bad = |why: &str| Err(Error::InvalidParams(format!("not a tableau ({why}): {rows:?}")));
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return bad("row lengths increase");
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return bad("zero entry");
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
            return bad("row decreases");
        }
        if rows
            .windows(2)
            .any(|w| w[1].iter().zip(&w[0]).any(|(above, below)| above <= below))
        {
            return bad("column not strict");
        }
        Ok(Tableau { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    /// Row `i` filled with `i+1`.
    pub fn superstandard(shape: &Partition) -> Self {
        Tableau {
            rows: shape
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &len)| vec![i + 1; len])
                .collect(),
        }
    }

    /// A single row.
    pub fn row(letters: Vec<usize>) -> Result<Self> {
        Tableau::new(vec![letters])
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("rows form a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// Multiplicities of letters `1, 2, ...`, indexed from 0.
    pub fn content(&self) -> Vec<usize> {
        content_of(self.rows.iter().flatten().copied())
    }

    pub fn reading_word(&self) -> Word {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Row insertion of `x`; returns the coordinates of the new cell.
    pub fn insert(&mut self, mut x: usize) -> (usize, usize) {
        let mut r = 0;
        loop {
            if r == self.rows.len() {
                self.rows.push(vec![x]);
                return (r, 0);
            }
            let row = &mut self.rows[r];
            let idx = row.partition_point(|&e| e <= x);
            if idx == row.len() {
                row.push(x);
                return (r, idx);
            }
            std::mem::swap(&mut row[idx], &mut x);
            r += 1;
        }
    }
}

impl fmt::Display for Tableau {
    /// Rows top to bottom, one per line, as a French diagram reads on paper.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate().rev() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
            if i > 0 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            rows: Vec<Vec<usize>>,
        }
        let raw = Raw::deserialize(d)?;
        Tableau::new(raw.rows).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn content_of(letters: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut c = Vec::new();
    for x in letters {
        if c.len() < x {
            c.resize(x, 0);
        }
        c[x - 1] += 1;
    }
    c
}

/// A semistandard filling of `outer/inner`. Row `r` holds the entries of
/// columns `inner_r ..`, bottom row first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SkewTableau {
    inner: Partition,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    pub fn new(inner: Partition, mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) && rows.len() > inner.len() {
            rows.pop();
        }
        let st = SkewTableau { inner, rows };
        let outer: Vec<usize> = (0..st.rows.len().max(st.inner.len()))
            .map(|r| st.inner.part(r) + st.rows.get(r).map_or(0, |x| x.len()))
            .collect();
        let bad = |why: &str| Err(Error::InvalidParams(format!("not a skew tableau ({why})")));
        if outer.windows(2).any(|w| w[0] < w[1]) {
            return bad("outer shape is not a partition");
        }
        for r in 0..st.rows.len() {
            let row = &st.rows[r];
            if row.windows(2).any(|w| w[0] > w[1]) || row.contains(&0) {
                return bad("row");
            }
            if r > 0 {
                for (j, &v) in row.iter().enumerate() {
                    let c = st.inner.part(r) + j;
                    if let Some(below) = st.cell(r - 1, c) {
                        if below >= v {
                            return bad("column");
                        }
                    }
                }
            }
        }
        Ok(st)
    }

    /// `b` placed down and to the right of `d`: `b` occupies the lowest rows,
    /// shifted right by the width of `d`, and `d` sits on top.
    pub fn placement(d: &Tableau, b: &Tableau) -> SkewTableau {
        let w = d.rows.first().map_or(0, |r| r.len());
        let inner = Partition::rectangle(w, b.rows.len());
        let rows = b.rows.iter().chain(d.rows.iter()).cloned().collect();
        SkewTableau { inner, rows }
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn outer(&self) -> Partition {
        let len = self.rows.len().max(self.inner.len());
        Partition::new(
            (0..len)
                .map(|r| self.inner.part(r) + self.rows.get(r).map_or(0, |x| x.len()))
                .collect(),
        )
        .expect("outer shape is a partition")
    }

    /// Entry at absolute coordinates, `None` outside the skew diagram.
    pub fn cell(&self, row: usize, col: usize) -> Option<usize> {
        let start = self.inner.part(row);
        if col < start {
            return None;
        }
        self.rows.get(row).and_then(|r| r.get(col - start)).copied()
    }

    pub fn content(&self) -> Vec<usize> {
        content_of(self.rows.iter().flatten().copied())
    }

    pub fn reading_word(&self) -> Word {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

/// A device together with a rectangular battery of shape `((n-k)^(s-1))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BatteryTableau {
    pub device: Tableau,
    pub battery: Tableau,
    #[serde(skip)]
    pub params: DeltaParams,
}

impl BatteryTableau {
    pub fn new(device: Tableau, battery: Tableau, params: DeltaParams) -> Result<Self> {
        let rect = params.battery_shape();
        if battery.shape() != rect {
            return Err(Error::InvalidParams(format!(
                "battery shape {} differs from {rect}",
                battery.shape()
            )));
        }
        let total = add_contents(&device.content(), &battery.content());
        if total != params.lambda_rect().parts() {
            return Err(Error::InvalidParams(format!(
                "content {total:?} differs from {}",
                params.lambda_rect()
            )));
        }
        Ok(BatteryTableau {
            device,
            battery,
            params,
        })
    }

    /// `sh+(T)`, the shape of the device.
    pub fn shape(&self) -> Partition {
        self.device.shape()
    }

    /// Reading word of the device followed by that of the battery.
    pub fn reading_word(&self) -> Word {
        let mut w = self.device.reading_word();
        w.extend(self.battery.reading_word());
        w
    }

    pub fn skew(&self) -> SkewTableau {
        SkewTableau::placement(&self.device, &self.battery)
    }
}

/// A device and a battery of arbitrary fixed shape with joint content `mu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GeneralizedBatteryTableau {
    pub device: Tableau,
    pub battery: Tableau,
    pub content: Partition,
}

impl GeneralizedBatteryTableau {
    pub fn reading_word(&self) -> Word {
        let mut w = self.device.reading_word();
        w.extend(self.battery.reading_word());
        w
    }
}

fn add_contents(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = (0..a.len().max(b.len()))
        .map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn reading_word(t: &Tableau) -> Word {
    t.reading_word()
}

fn check_partition_content(w: &[usize]) -> Result<Vec<usize>> {
    let c = content_of(w.iter().copied());
    if c.windows(2).any(|p| p[0] < p[1]) || c.contains(&0) || w.contains(&0) {
        return Err(Error::NonPartitionContent(format!("{c:?}")));
    }
    Ok(c)
}

/// Labels of the charge (`charge = true`) or cocharge labelling, position by
/// position.
///
/// Subwords are extracted by scanning right to left for a 1, then cyclically
/// leftwards for 2, 3, and so on. For cocharge the label goes up when the next
/// letter lies strictly to the left of the previous one; for charge it goes up
/// when the scan wrapped around, i.e. the next letter lies to the right.
fn labelling(w: &[usize], charge: bool) -> Result<Vec<usize>> {
    Ok(labelling_with_subwords(w, charge)?.0)
}

/// Labels together with the index of the extracted subword each position
/// belongs to (0 for the first subword).
fn labelling_with_subwords(w: &[usize], charge: bool) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut remaining = check_partition_content(w)?;
    let n = w.len();
    let mut used = vec![false; n];
    let mut labels = vec![0; n];
    let mut subword = vec![0; n];
    let mut index = 0;
    let mut left = n;
    while left > 0 {
        let m = remaining.iter().take_while(|&&c| c > 0).count();
        let mut pos = (0..n).rev().find(|&i| !used[i] && w[i] == 1).expect("a 1 remains");
        let mut label = 0;
        used[pos] = true;
        labels[pos] = 0;
        subword[pos] = index;
        for letter in 2..=m {
            let (next, went_left) = match (0..pos).rev().find(|&i| !used[i] && w[i] == letter) {
                Some(i) => (i, true),
                None => (
                    (pos + 1..n)
                        .rev()
                        .find(|&i| !used[i] && w[i] == letter)
                        .expect("partition content guarantees the letter"),
                    false,
                ),
            };
            if went_left != charge {
                label += 1;
            }
            used[next] = true;
            labels[next] = label;
            subword[next] = index;
            pos = next;
        }
        for c in remaining.iter_mut().take(m) {
            *c -= 1;
        }
        left -= m;
        index += 1;
    }
    Ok((labels, subword))
}

/// Charge labels and, for each position, which standard subword it was
/// extracted into.
pub fn charge_labels_with_subwords(w: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    labelling_with_subwords(w, true)
}

pub fn charge_labels(w: &[usize]) -> Result<Vec<usize>> {
    labelling(w, true)
}

pub fn cocharge_labels(w: &[usize]) -> Result<Vec<usize>> {
    labelling(w, false)
}

pub fn charge(w: &[usize]) -> Result<usize> {
    Ok(labelling(w, true)?.iter().sum())
}

pub fn cocharge(w: &[usize]) -> Result<usize> {
    Ok(labelling(w, false)?.iter().sum())
}

pub fn cc_battery(t: &BatteryTableau) -> usize {
    cocharge(&t.reading_word()).expect("battery tableaux have partition content")
}

pub fn ch_battery(t: &BatteryTableau) -> usize {
    charge(&t.reading_word()).expect("battery tableaux have partition content")
}

pub fn rsk_insert_letter(t: &Tableau, x: usize) -> (Tableau, (usize, usize)) {
    let mut t = t.clone();
    let cell = t.insert(x);
    (t, cell)
}

/// `d . b`: the letters of the reading word of `b` inserted into `d`.
pub fn rsk_insert_tableau(d: &Tableau, b: &Tableau) -> Tableau {
    rsk_insert_word(d, &b.reading_word())
}

pub fn rsk_insert_word(d: &Tableau, w: &[usize]) -> Tableau {
    let mut t = d.clone();
    for &x in w {
        t.insert(x);
    }
    t
}

/// Reverse-bumps the cells of `shape(s)/target` from right to left. Returns
/// the tableau of shape `target` and the ejected letters as a weakly
/// increasing word.
pub fn unbump_horizontal_strip(s: &Tableau, target: &Partition) -> Result<(Tableau, Word)> {
    let shape = s.shape();
    if !horizontal_strip(&shape, target) {
        return Err(Error::NotHorizontalStrip {
            inner: target.to_string(),
            outer: shape.to_string(),
        });
    }
    let mut cells: Vec<(usize, usize)> = (0..shape.len())
        .flat_map(|r| (target.part(r)..shape.part(r)).map(move |c| (r, c)))
        .collect();
    cells.sort_by_key(|c| std::cmp::Reverse(c.1));
    let mut rows = s.rows.clone();
    let mut ejected = Vec::with_capacity(cells.len());
    for (r, _) in cells {
        let mut y = rows[r].pop().expect("strip cell ends its row");
        for rr in (0..r).rev() {
            let idx = rows[rr].partition_point(|&e| e < y) - 1;
            std::mem::swap(&mut rows[rr][idx], &mut y);
        }
        ejected.push(y);
    }
    while rows.last().is_some_and(|r| r.is_empty()) {
        rows.pop();
    }
    ejected.reverse();
    Ok((Tableau { rows }, ejected))
}

/// Jeu de taquin rectification. Each slide moves the smaller of the right
/// and upper neighbours into the hole, preferring the upper one on a tie.
pub fn jdt_rectify(st: &SkewTableau) -> Tableau {
    let outer = st.outer();
    let mut grid: Vec<Vec<Option<usize>>> = (0..outer.len())
        .map(|r| {
            let mut row = vec![None; st.inner.part(r)];
            row.extend(st.rows.get(r).into_iter().flatten().map(|&x| Some(x)));
            row
        })
        .collect();
    let mut inner: Vec<usize> = st.inner.parts().to_vec();
    while let Some(top) = inner.iter().rposition(|&x| x > 0) {
        inner[top] -= 1;
        let (mut r, mut c) = (top, inner[top]);
        loop {
            let right = grid[r].get(c + 1).copied().flatten();
            let above = grid.get(r + 1).and_then(|row| row.get(c)).copied().flatten();
            let (nr, nc) = match (right, above) {
                (None, None) => break,
                (Some(_), None) => (r, c + 1),
                (None, Some(_)) => (r + 1, c),
                (Some(x), Some(y)) => {
                    if y <= x {
                        (r + 1, c)
                    } else {
                        (r, c + 1)
                    }
                }
            };
            grid[r][c] = grid[nr][nc].take();
            r = nr;
            c = nc;
        }
        grid[r].pop();
        while grid.last().is_some_and(|row| row.is_empty()) {
            grid.pop();
        }
        inner.truncate(grid.len());
    }
    Tableau {
        rows: grid
            .into_iter()
            .map(|row| row.into_iter().map(|x| x.expect("rectified cell is filled")).collect())
            .collect(),
    }
}

/// Shapes obtained from `shape` by adding a horizontal strip of exactly `m`
/// boxes, with at most `max_rows` rows and inside `bound` when given.
pub(crate) fn strip_extensions(shape: &[usize], m: usize, max_rows: usize, bound: Option<&[usize]>) -> Vec<Vec<usize>> {
    let rows = (shape.len() + 1).min(max_rows.max(shape.len()));
    let mut out = Vec::new();
    let mut cur = shape.to_vec();
    cur.resize(rows, 0);
    fn rec(
        i: usize,
        left: usize,
        shape: &[usize],
        bound: Option<&[usize]>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            let mut v = cur.clone();
            while v.last() == Some(&0) {
                v.pop();
            }
            out.push(v);
            return;
        }
        if i == cur.len() {
            return;
        }
        let base = shape.get(i).copied().unwrap_or(0);
        let mut cap = if i == 0 { left } else { shape[i - 1] - base };
        if let Some(b) = bound {
            cap = cap.min(b.get(i).copied().unwrap_or(0).saturating_sub(base));
        }
        for a in (0..=cap.min(left)).rev() {
            cur[i] = base + a;
            rec(i + 1, left - a, shape, bound, cur, out);
        }
        cur[i] = base;
    }
    rec(0, m, shape, bound, &mut cur, &mut out);
    out
}

/// Enumerates SSYT of content `content` (any weak composition) as chains of
/// horizontal strips, visiting only tableaux whose final shape satisfies
/// `keep`. Shapes that cannot reach an accepted final shape are pruned before
/// the depth-first walk, so the work is proportional to the output.
pub fn for_each_ssyt_with_content<K, F>(content: &[usize], bound: Option<&Partition>, keep: K, mut visit: F)
where
    K: Fn(&Partition) -> bool,
    F: FnMut(&Tableau),
{
    let max_rows = content.len();
    let bound = bound.map(|b| b.parts());
    let mut levels: Vec<HashSet<Vec<usize>>> = vec![HashSet::from([Vec::new()])];
    for &c in content {
        let next: HashSet<Vec<usize>> = levels
            .last()
            .expect("nonempty")
            .iter()
            .flat_map(|sh| strip_extensions(sh, c, max_rows, bound))
            .collect();
        levels.push(next);
    }
    let last = levels.len() - 1;
    levels[last].retain(|sh| keep(&Partition::new(sh.clone()).expect("shape")));
    for i in (0..last).rev() {
        let (head, tail) = levels.split_at_mut(i + 1);
        let good = &tail[0];
        let c = content[i];
        head[i].retain(|sh| {
            strip_extensions(sh, c, max_rows, bound)
                .iter()
                .any(|e| good.contains(e))
        });
    }
    if levels[0].is_empty() {
        return;
    }
    let mut t = Tableau::empty();
    let mut shape = Vec::new();
    chain_walk(0, content, max_rows, bound, &levels, &mut shape, &mut t, &mut visit);
}

#[allow(clippy::too_many_arguments)]
fn chain_walk<F: FnMut(&Tableau)>(
    i: usize,
    content: &[usize],
    max_rows: usize,
    bound: Option<&[usize]>,
    levels: &[HashSet<Vec<usize>>],
    shape: &mut Vec<usize>,
    t: &mut Tableau,
    visit: &mut F,
) {
    if i == content.len() {
        visit(t);
        return;
    }
    let letter = i + 1;
    for next in strip_extensions(shape, content[i], max_rows, bound) {
        if !levels[i + 1].contains(&next) {
            continue;
        }
        let saved = std::mem::replace(shape, next);
        for (r, &len) in shape.iter().enumerate() {
            let old = saved.get(r).copied().unwrap_or(0);
            if r == t.rows.len() {
                t.rows.push(Vec::new());
            }
            t.rows[r].extend(std::iter::repeat_n(letter, len - old));
        }
        chain_walk(i + 1, content, max_rows, bound, levels, shape, t, visit);
        for (r, &old) in saved.iter().enumerate() {
            t.rows[r].truncate(old);
        }
        t.rows.truncate(saved.len());
        *shape = saved;
    }
}

/// Every SSYT of content `mu`.
pub fn enumerate_ssyt_content(mu: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_ssyt_with_content(mu.parts(), None, |_| true, |t| out.push(t.clone()));
    out
}

/// SSYT of shape `nu` and content `mu`.
pub fn enumerate_ssyt_shape_content(nu: &Partition, mu: &Partition) -> Result<Vec<Tableau>> {
    if nu.size() != mu.size() {
        return Err(Error::SizeMismatch {
            expected: nu.size(),
            found: mu.size(),
        });
    }
    Ok(ssyt_shape_weak_content(nu, mu.parts()))
}

/// SSYT of shape `nu` with the given weak-composition content.
pub fn ssyt_shape_weak_content(nu: &Partition, content: &[usize]) -> Vec<Tableau> {
    let mut out = Vec::new();
    if nu.size() != content.iter().sum::<usize>() {
        return out;
    }
    for_each_ssyt_with_content(content, Some(nu), |sh| sh == nu, |t| out.push(t.clone()));
    out
}

/// SSYT of shape `shape` with entries at most `max_letter`.
pub fn enumerate_ssyt_shape_bounded(shape: &Partition, max_letter: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut t = Tableau::empty();
    fn rec(
        letter: usize,
        max_letter: usize,
        target: &Partition,
        cur: &mut Vec<usize>,
        t: &mut Tableau,
        out: &mut Vec<Tableau>,
    ) {
        let placed: usize = cur.iter().sum();
        if placed == target.size() {
            out.push(t.clone());
            return;
        }
        if letter > max_letter {
            return;
        }
        let room = target.size() - placed;
        for m in (0..=room).rev() {
            for next in strip_extensions(cur, m, max_letter, Some(target.parts())) {
                let saved = std::mem::replace(cur, next);
                for (r, &len) in cur.iter().enumerate() {
                    let old = saved.get(r).copied().unwrap_or(0);
                    if r == t.rows.len() {
                        t.rows.push(Vec::new());
                    }
                    t.rows[r].extend(std::iter::repeat_n(letter, len - old));
                }
                rec(letter + 1, max_letter, target, cur, t, out);
                for (r, &old) in saved.iter().enumerate() {
                    t.rows[r].truncate(old);
                }
                t.rows.truncate(saved.len());
                *cur = saved;
            }
        }
    }
    rec(1, max_letter, shape, &mut Vec::new(), &mut t, &mut out);
    out
}

/// Weak content left for the device once `battery` is removed from `total`.
fn remaining_content(total: &Partition, battery: &Tableau) -> Option<Vec<usize>> {
    let bc = battery.content();
    if bc.len() > total.len() {
        return None;
    }
    (0..total.len())
        .map(|i| total.part(i).checked_sub(bc.get(i).copied().unwrap_or(0)))
        .collect()
}

/// Visits every battery-powered tableau of `T+(n, lambda, s)`.
pub fn for_each_battery_tableau<F: FnMut(&Tableau, &Tableau)>(params: &DeltaParams, mut visit: F) {
    let big = params.lambda_rect();
    for battery in enumerate_ssyt_shape_bounded(&params.battery_shape(), big.len().max(1)) {
        let Some(rest) = remaining_content(&big, &battery) else {
            continue;
        };
        for_each_ssyt_with_content(&rest, None, |_| true, |d| visit(d, &battery));
    }
}

pub fn enumerate_battery_tableaux(params: &DeltaParams) -> Vec<BatteryTableau> {
    let mut out = Vec::new();
    for_each_battery_tableau(params, |d, b| {
        out.push(BatteryTableau {
            device: d.clone(),
            battery: b.clone(),
            params: params.clone(),
        })
    });
    out
}

/// Generalized battery-powered tableaux with battery shape `rho` and joint
/// content `mu`.
pub fn enumerate_generalized_battery_tableaux(rho: &Partition, mu: &Partition) -> Vec<GeneralizedBatteryTableau> {
    let mut out = Vec::new();
    for battery in enumerate_ssyt_shape_bounded(rho, mu.len().max(1)) {
        let Some(rest) = remaining_content(mu, &battery) else {
            continue;
        };
        for_each_ssyt_with_content(
            &rest,
            None,
            |_| true,
            |d| {
                out.push(GeneralizedBatteryTableau {
                    device: d.clone(),
                    battery: battery.clone(),
                    content: mu.clone(),
                })
            },
        );
    }
    out
}

/// Littlewood-Richardson tableaux of shape `outer/inner` and content
/// `content`: semistandard fillings whose reverse reading word (bottom row
/// first, each row right to left) is Yamanouchi. Cells are filled in that
/// order so the lattice condition is checked on every prefix.
pub fn enumerate_lr_tableaux(outer: &Partition, inner: &Partition, content: &Partition) -> Result<Vec<SkewTableau>> {
    if !outer.contains(inner) {
        return Err(Error::ContainmentViolation {
            inner: inner.to_string(),
            outer: outer.to_string(),
        });
    }
    if outer.size() - inner.size() != content.size() {
        return Err(Error::SizeMismatch {
            expected: outer.size() - inner.size(),
            found: content.size(),
        });
    }
    let mut out = Vec::new();
    for_each_lr_filling(outer, inner, Some(content), &mut |grid, _| {
        let rows = grid
            .iter()
            .enumerate()
            .map(|(r, row)| row[inner.part(r)..].to_vec())
            .collect();
        out.push(SkewTableau {
            inner: inner.clone(),
            rows,
        });
    });
    Ok(out)
}

/// Depth-first walk over the Littlewood-Richardson fillings of
/// `outer/inner`, with fixed content or, when `content` is `None`, any
/// content. The visitor receives the grid (absolute columns, zeros in the
/// inner shape) and the letter counts.
/// Receives a filled grid and its letter counts.
type FillingVisitor<'a> = dyn FnMut(&[Vec<usize>], &[usize]) + 'a;

pub(crate) fn for_each_lr_filling(
    outer: &Partition,
    inner: &Partition,
    content: Option<&Partition>,
    visit: &mut FillingVisitor<'_>,
) {
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|r| (inner.part(r)..outer.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..outer.len()).map(|r| vec![0; outer.part(r)]).collect();
    let letters = content.map_or(outer.len(), |c| c.len());
    let caps: Vec<usize> = (0..letters)
        .map(|i| content.map_or(usize::MAX, |c| c.part(i)))
        .collect();
    let mut counts = vec![0; letters];
    struct Walk<'a> {
        cells: &'a [(usize, usize)],
        inner: &'a Partition,
        caps: &'a [usize],
        visit: &'a mut FillingVisitor<'a>,
    }
    fn rec(w: &mut Walk<'_>, idx: usize, grid: &mut Vec<Vec<usize>>, counts: &mut Vec<usize>) {
        let Some(&(r, c)) = w.cells.get(idx) else {
            (w.visit)(grid, counts);
            return;
        };
        let hi = grid[r].get(c + 1).copied().unwrap_or(usize::MAX);
        let lo = if r > 0 && c >= w.inner.part(r - 1) {
            grid[r - 1][c]
        } else {
            0
        };
        for v in lo + 1..=w.caps.len().min(hi) {
            let i = v - 1;
            if counts[i] == w.caps[i] || (i > 0 && counts[i] + 1 > counts[i - 1]) {
                continue;
            }
            counts[i] += 1;
            grid[r][c] = v;
            rec(w, idx + 1, grid, counts);
            grid[r][c] = 0;
            counts[i] -= 1;
        }
    }
    let mut walk = Walk {
        cells: &cells,
        inner,
        caps: &caps,
        visit,
    };
    rec(&mut walk, 0, &mut grid, &mut counts);
}

/// For every `nu` with `nu/lambda` a horizontal strip of size `n-k` and at
/// most `s` rows, the unique battery-powered tableau of maximal cocharge:
/// battery row `i` filled with `i`, device the superstandard filling of
/// `lambda` plus the strip filled with `s`.
pub fn max_cocharge_tableaux(params: &DeltaParams) -> Vec<(Partition, BatteryTableau)> {
    let lam = &params.lambda;
    let s = params.s;
    let mut out = Vec::new();
    let Ok(shapes) = enumerate_partitions(params.n, Some(s)) else {
        return out;
    };
    for nu in shapes {
        if !horizontal_strip(&nu, lam) {
            continue;
        }
        let rows = (0..nu.len())
            .map(|r| {
                let mut row = vec![r + 1; lam.part(r)];
                row.extend(std::iter::repeat_n(s, nu.part(r) - lam.part(r)));
                row
            })
            .collect();
        let device = Tableau::from_rows_unchecked(rows);
        let battery = Tableau::superstandard(&params.battery_shape());
        out.push((
            nu,
            BatteryTableau {
                device,
                battery,
                params: params.clone(),
            },
        ));
    }
    out
}
