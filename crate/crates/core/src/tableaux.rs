//! Two-column standard Young tableaux and the maximal orbits they label.
//!
//! A tableau of shape `(n−k, k)*` is stored as its two ascending columns.
//! It corresponds to the crossing-free involution `σ_T` with no fixed point
//! under an arc, whose right endpoints are the second column.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::patterns::{pattern_stats, Involution};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRecord", into = "TableauRecord")]
pub struct TwoColumnTableau {
    n: usize,
    col1: Vec<usize>,
    col2: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TableauRecord {
    n: usize,
    col1: Vec<usize>,
    col2: Vec<usize>,
}

impl TryFrom<TableauRecord> for TwoColumnTableau {
    type Error = Error;

    fn try_from(record: TableauRecord) -> Result<Self> {
        TwoColumnTableau::new(record.n, record.col1, record.col2)
    }
}

impl From<TwoColumnTableau> for TableauRecord {
    fn from(t: TwoColumnTableau) -> Self {
        TableauRecord {
            n: t.n,
            col1: t.col1,
            col2: t.col2,
        }
    }
}

impl TwoColumnTableau {
    /// Checks that the columns partition `1..=n`, ascend, and that row `s`
    /// of the second column exceeds row `s` of the first.
    pub fn new(n: usize, col1: Vec<usize>, col2: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoPoints);
        }
        for col in [&col1, &col2] {
            if !col.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidTableau(format!("column {col:?} is not increasing")));
            }
            if let Some(&p) = col.iter().find(|&&p| p == 0 || p > n) {
                return Err(Error::OutOfRange { point: p, n });
            }
        }
        let all: BTreeSet<usize> = col1.iter().chain(&col2).copied().collect();
        if all.len() != n || col1.len() + col2.len() != n {
            return Err(Error::InvalidTableau("columns do not partition 1..=n".into()));
        }
        if col2.len() > col1.len() {
            return Err(Error::InvalidTableau("second column is longer than the first".into()));
        }
        if let Some(s) = (0..col2.len()).find(|&s| col1[s] > col2[s]) {
            return Err(Error::InvalidTableau(format!(
                "row {} has {} left of {}",
                s + 1,
                col1[s],
                col2[s]
            )));
        }
        Ok(TwoColumnTableau { n, col1, col2 })
    }

    /// Tableau with second column `col2`; the first column is the complement.
    pub fn from_second_column(n: usize, col2: Vec<usize>) -> Result<Self> {
        let taken: BTreeSet<usize> = col2.iter().copied().collect();
        let col1 = (1..=n).filter(|p| !taken.contains(p)).collect();
        Self::new(n, col1, col2)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Length of the second column.
    pub fn k(&self) -> usize {
        self.col2.len()
    }

    pub fn col1(&self) -> &[usize] {
        &self.col1
    }

    pub fn col2(&self) -> &[usize] {
        &self.col2
    }

    pub fn in_first_column(&self, p: usize) -> bool {
        self.col1.binary_search(&p).is_ok()
    }

    pub fn in_second_column(&self, p: usize) -> bool {
        self.col2.binary_search(&p).is_ok()
    }
}

impl fmt::Display for TwoColumnTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, a) in self.col1.iter().enumerate() {
            match self.col2.get(s) {
                Some(b) => writeln!(f, "{a} {b}")?,
                None => writeln!(f, "{a}")?,
            }
        }
        Ok(())
    }
}

/// `n!/(k!(n−k)!) · (n−2k+1)/(n−k+1)`, or 0 when `2k > n`.
pub fn standard_tableau_count(n: usize, k: usize) -> u128 {
    if 2 * k > n {
        return 0;
    }
    let mut binom: u128 = 1;
    for t in 0..k as u128 {
        binom = binom * (n as u128 - t) / (t + 1);
    }
    binom * (n - 2 * k + 1) as u128 / (n - k + 1) as u128
}

/// Every standard tableau of shape `(n−k, k)*`, ordered by second column.
pub fn enumerate_tableaux(n: usize, k: usize) -> Result<Vec<TwoColumnTableau>> {
    if n == 0 {
        return Err(Error::NoPoints);
    }
    if 2 * k > n {
        return Err(Error::ArcCountOutOfRange { n, k });
    }
    fn extend(p: usize, n: usize, k: usize, col2: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if col2.len() == k {
            out.push(col2.clone());
            return;
        }
        if p > n || n - p + 1 < k - col2.len() {
            return;
        }
        let first = p - 1 - col2.len();
        if col2.len() < first {
            col2.push(p);
            extend(p + 1, n, k, col2, out);
            col2.pop();
        }
        extend(p + 1, n, k, col2, out);
    }
    let mut seconds = Vec::new();
    extend(1, n, k, &mut Vec::new(), &mut seconds);
    seconds.sort();
    seconds
        .into_iter()
        .map(|col2| TwoColumnTableau::from_second_column(n, col2))
        .collect()
}

/// `σ_T`: each `j_s` of the second column, in increasing order, is joined to
/// the largest still-unused first-column entry below it.
pub fn sigma_of_tableau(t: &TwoColumnTableau) -> Involution {
    let mut free: BTreeSet<usize> = t.col1.iter().copied().collect();
    let arcs: Vec<(usize, usize)> = t
        .col2
        .iter()
        .map(|&j| {
            let i = *free
                .range(..j)
                .next_back()
                .expect("standard tableau leaves a free entry below each j");
            free.remove(&i);
            (i, j)
        })
        .collect();
    Involution::new(t.n, arcs).expect("greedy matching is an involution")
}

/// Inverse of [`sigma_of_tableau`] on maximal involutions.
pub fn tableau_of_sigma(sigma: &Involution) -> Result<TwoColumnTableau> {
    let stats = pattern_stats(sigma);
    if stats.crossings != 0 || stats.fixed_under != 0 {
        return Err(Error::NotMaximal(sigma.to_string()));
    }
    let mut col2: Vec<usize> = sigma.arcs().iter().map(|&(_, j)| j).collect();
    col2.sort_unstable();
    TwoColumnTableau::from_second_column(sigma.n(), col2)
}

/// `T⟨b⟩`: move `b` from the second column into the first.
pub fn move_to_first_column(t: &TwoColumnTableau, b: usize) -> Result<TwoColumnTableau> {
    if !t.in_second_column(b) {
        return Err(Error::InvalidTableau(format!("{b} is not in the second column")));
    }
    let col2 = t.col2.iter().copied().filter(|&p| p != b).collect();
    TwoColumnTableau::from_second_column(t.n, col2)
}

/// Positions `i` (1-based) of the second column for which `T⟨j_i⟩` lies in
/// the boundary: `i = k`, or `j_s − j_i ≥ 2(s − i)` for every `s > i`.
pub fn closure_indices(t: &TwoColumnTableau) -> Vec<usize> {
    let k = t.k();
    let j = &t.col2;
    (1..=k)
        .filter(|&i| (i + 1..=k).all(|s| j[s - 1] - j[i - 1] >= 2 * (s - i)))
        .collect()
}

/// `N(T)`: the codimension-one orbital varieties of shape `(n−k+1, k−1)*`
/// in the closure of `V_T`.
pub fn closure_tableaux(t: &TwoColumnTableau) -> Result<Vec<TwoColumnTableau>> {
    closure_indices(t)
        .into_iter()
        .map(|i| move_to_first_column(t, t.col2[i - 1]))
        .collect()
}

/// `I(T)`: first-column entries `i` with `i + 1` in the second column.
pub fn descent_set(t: &TwoColumnTableau) -> BTreeSet<usize> {
    t.col1
        .iter()
        .copied()
        .filter(|&i| t.in_second_column(i + 1))
        .collect()
}

/// `T_{i⇄j}` for `i` in the first column and `j` in the second: exchange
/// their columns, `None` if the result is not standard.
pub fn swap_columns(t: &TwoColumnTableau, i: usize, j: usize) -> Option<TwoColumnTableau> {
    if !t.in_first_column(i) || !t.in_second_column(j) {
        return None;
    }
    let mut col2: Vec<usize> = t.col2.iter().copied().filter(|&p| p != j).collect();
    col2.push(i);
    col2.sort_unstable();
    TwoColumnTableau::from_second_column(t.n, col2).ok()
}

/// Shape test for `T_{i⇄j} ≠ ∅` read off the prefixes `π_{1,i}(T)` and
/// `π_{1,j}(T)`: always true when `j < i`; for `j > i`, with `k'` and `k''`
/// the second-column entries up to `i` and `j`, it requires
/// `i − k' > k' + 1` and `j − k'' > k''`.
///
/// This agrees with [`swap_columns`] on the swaps made by [`u_move`] but is
/// not a characterization for arbitrary pairs.
pub fn swap_allowed_by_prefix(t: &TwoColumnTableau, i: usize, j: usize) -> bool {
    if !t.in_first_column(i) || !t.in_second_column(j) {
        return false;
    }
    if j < i {
        return true;
    }
    let k1 = t.col2.iter().filter(|&&p| p <= i).count();
    let k2 = t.col2.iter().filter(|&&p| p <= j).count();
    i - k1 > k1 + 1 && j - k2 > k2
}

/// `u_i(T)` for `i ∉ I(T)`.
///
/// * `i, i+1` in the second column: `T_{σ_T(i)⇄i}`.
/// * `i` in the second, `i+1` in the first: `T_{i+1⇄i}`.
/// * `i, i+1` in the first with `σ_T(i+1) ≠ i+1`: `T_{i+1⇄σ_T(i+1)}`.
/// * otherwise both are fixed by `σ_T` and there is no move.
pub fn u_move(t: &TwoColumnTableau, i: usize) -> Result<Option<TwoColumnTableau>> {
    if i == 0 || i >= t.n {
        return Err(Error::OutOfRange { point: i, n: t.n });
    }
    if t.in_first_column(i) && t.in_second_column(i + 1) {
        return Err(Error::DescentAtI(i));
    }
    let sigma = sigma_of_tableau(t);
    let swapped = match (t.in_second_column(i), t.in_second_column(i + 1)) {
        (true, true) => swap_columns(t, sigma.apply(i), i),
        (true, false) => swap_columns(t, i + 1, i),
        (false, false) => match sigma.partner(i + 1) {
            Some(partner) => swap_columns(t, i + 1, partner),
            None => return Ok(None),
        },
        (false, true) => unreachable!("descent handled above"),
    };
    swapped.map(Some).ok_or_else(|| {
        Error::InvalidTableau(format!("u_{i} swap produced a non-standard array from {t:?}"))
    })
}

/// `dim O_{(n−k,k)*} = 2k(n−k)`.
pub fn two_column_orbit_dim(n: usize, k: usize) -> usize {
    2 * k * (n - k)
}
