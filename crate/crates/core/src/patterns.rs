//! Involutions as link patterns, their statistics and the orbit dimension.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` the exhaustive enumerators accept unless told otherwise.
/// `I(12) = 140152` involutions.
pub const DEFAULT_CAP: usize = 12;

/// An involution of `{1..n}` stored as its disjoint 2-cycles.
///
/// Arcs are kept with the smaller endpoint first and sorted by that endpoint,
/// so structural equality is equality of involutions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "InvolutionRecord", into = "InvolutionRecord")]
pub struct Involution {
    n: usize,
    arcs: Vec<(usize, usize)>,
    // mate[p] == 0 marks a fixed point; index 0 unused
    mate: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct InvolutionRecord {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<InvolutionRecord> for Involution {
    type Error = Error;

    fn try_from(record: InvolutionRecord) -> Result<Self> {
        Involution::new(record.n, record.arcs)
    }
}

impl From<Involution> for InvolutionRecord {
    fn from(sigma: Involution) -> Self {
        InvolutionRecord {
            n: sigma.n,
            arcs: sigma.arcs,
        }
    }
}

impl Involution {
    /// Validates and canonicalizes an arc list. Pairs may be given in either
    /// order.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoPoints);
        }
        let mut mate = vec![0; n + 1];
        let mut normalized = Vec::new();
        for (a, b) in arcs {
            for p in [a, b] {
                if p == 0 || p > n {
                    return Err(Error::OutOfRange { point: p, n });
                }
            }
            if a == b {
                return Err(Error::SelfArc(a));
            }
            for p in [a, b] {
                if mate[p] != 0 {
                    return Err(Error::DuplicateEndpoint(p));
                }
            }
            mate[a] = b;
            mate[b] = a;
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        Ok(Involution {
            n,
            arcs: normalized,
            mate,
        })
    }

    pub fn identity(n: usize) -> Self {
        Involution {
            n,
            arcs: Vec::new(),
            mate: vec![0; n + 1],
        }
    }

    // Caller guarantees the arcs are valid.
    fn from_valid(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Involution::new(n, arcs).expect("arc surgery produced an invalid involution")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Arcs `(i, j)` with `i < j`, ascending by `i`.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Number of arcs, the length of the link pattern.
    pub fn length(&self) -> usize {
        self.arcs.len()
    }

    /// The image of `p`, or `None` when `p` is fixed.
    pub fn partner(&self, p: usize) -> Option<usize> {
        match self.mate.get(p) {
            Some(&q) if q != 0 => Some(q),
            _ => None,
        }
    }

    pub fn apply(&self, p: usize) -> usize {
        self.partner(p).unwrap_or(p)
    }

    pub fn is_fixed(&self, p: usize) -> bool {
        self.partner(p).is_none()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n).filter(|&p| self.is_fixed(p)).collect()
    }

    pub fn contains_arc(&self, arc: (usize, usize)) -> bool {
        self.partner(arc.0) == Some(arc.1)
    }

    /// `σ⁻_(i,j)`: the involution with one arc erased.
    pub fn without_arc(&self, arc: (usize, usize)) -> Involution {
        debug_assert!(self.contains_arc(arc));
        Involution::from_valid(self.n, self.arcs.iter().copied().filter(|&a| a != arc))
    }

    /// Adds an arc between two fixed points.
    pub fn with_arc(&self, arc: (usize, usize)) -> Result<Involution> {
        Involution::new(self.n, self.arcs.iter().copied().chain([arc]))
    }

    /// `σ_{i→f}`: the arc through endpoint `from` is re-attached at the fixed
    /// point `to`.
    pub fn move_endpoint(&self, from: usize, to: usize) -> Involution {
        let other = self.partner(from).expect("moved point must be an endpoint");
        debug_assert!(self.is_fixed(to));
        let arcs = self.arcs.iter().map(|&(a, b)| {
            if a == from || b == from {
                (other, to)
            } else {
                (a, b)
            }
        });
        Involution::from_valid(self.n, arcs)
    }

    /// `σ_{a⇄b}`: endpoints `a` and `b` of two different arcs trade places, so
    /// `((a,p))((b,q))` becomes `((a,q))((b,p))`.
    pub fn swap_endpoints(&self, a: usize, b: usize) -> Involution {
        let p = self.partner(a).expect("swapped point must be an endpoint");
        let q = self.partner(b).expect("swapped point must be an endpoint");
        debug_assert!(p != b, "swapped endpoints must lie on different arcs");
        let arcs = self
            .arcs
            .iter()
            .copied()
            .filter(|&(x, y)| ![a, b].contains(&x) && ![a, b].contains(&y))
            .chain([(a, q), (b, p)]);
        Involution::from_valid(self.n, arcs)
    }

    /// `π_{i,j}` viewed inside `S_n`: keeps the arcs lying in `[i, j]`.
    pub fn restrict(&self, i: usize, j: usize) -> Involution {
        Involution::from_valid(
            self.n,
            self.arcs.iter().copied().filter(|&(a, b)| i <= a && b <= j),
        )
    }

    /// Inline form `1-3,2-6,4-7@7`.
    pub fn to_inline(&self) -> String {
        let body: Vec<String> = self.arcs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        format!("{}@{}", body.join(","), self.n)
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arcs.is_empty() {
            return f.write_str("id");
        }
        for (a, b) in &self.arcs {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in S_{}", self.n)
    }
}

/// Shorthand for [`Involution::new`].
pub fn involution_from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Involution> {
    Involution::new(n, arcs.iter().copied())
}

/// All involutions of `{1..n}` (with exactly `k` arcs when given), sorted.
pub fn enumerate_involutions(n: usize, k: Option<usize>) -> Result<Vec<Involution>> {
    enumerate_involutions_capped(n, k, DEFAULT_CAP)
}

pub fn enumerate_involutions_capped(
    n: usize,
    k: Option<usize>,
    cap: usize,
) -> Result<Vec<Involution>> {
    if n == 0 {
        return Err(Error::NoPoints);
    }
    if n > cap {
        return Err(Error::ResourceCap { n, cap });
    }
    if let Some(k) = k {
        if 2 * k > n {
            return Err(Error::ArcCountOutOfRange { n, k });
        }
    }
    let mut out = Vec::new();
    let mut mate = vec![0usize; n + 1];
    let mut arcs = Vec::new();
    extend_matchings(n, 1, k, &mut mate, &mut arcs, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn extend_matchings(
    n: usize,
    next: usize,
    target: Option<usize>,
    mate: &mut [usize],
    arcs: &mut Vec<(usize, usize)>,
    out: &mut Vec<Involution>,
) {
    let Some(p) = (next..=n).find(|&p| mate[p] == 0) else {
        if target.is_none_or(|k| k == arcs.len()) {
            out.push(Involution::from_valid(n, arcs.iter().copied()));
        }
        return;
    };
    let free_after = (p + 1..=n).filter(|&q| mate[q] == 0).count();
    if let Some(k) = target {
        // arcs still attainable: every free point including p could pair up
        if arcs.len() + free_after.div_ceil(2) < k {
            return;
        }
    }
    // p fixed; mark with a sentinel so later scans skip it
    if target.is_none_or(|k| arcs.len() + free_after / 2 >= k) {
        mate[p] = usize::MAX;
        extend_matchings(n, p + 1, target, mate, arcs, out);
        mate[p] = 0;
    }
    if target.is_none_or(|k| arcs.len() < k) {
        for q in p + 1..=n {
            if mate[q] != 0 {
                continue;
            }
            mate[p] = q;
            mate[q] = p;
            arcs.push((p, q));
            extend_matchings(n, p + 1, target, mate, arcs, out);
            arcs.pop();
            mate[p] = 0;
            mate[q] = 0;
        }
    }
}

/// Crossing and nesting statistics of a link pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternStats {
    /// `ℓ`, the number of arcs.
    pub length: usize,
    /// `c`, the number of crossing pairs of arcs.
    pub crossings: usize,
    /// `f`, fixed points under arcs counted with multiplicity.
    pub fixed_under: usize,
    /// `f_p` for every fixed point `p`.
    pub per_point_fixed: BTreeMap<usize, usize>,
}

/// Arcs `(i,j)`, `(i',j')` with `i < i' < j < j'`. All-pairs test.
pub fn crossings(sigma: &Involution) -> usize {
    let arcs = sigma.arcs();
    let mut count = 0;
    for (s, &(i, j)) in arcs.iter().enumerate() {
        for &(i2, j2) in &arcs[s + 1..] {
            if i < i2 && i2 < j && j < j2 {
                count += 1;
            }
        }
    }
    count
}

/// Number of arcs strictly over point `p`.
pub fn arcs_over_point(sigma: &Involution, p: usize) -> usize {
    sigma.arcs().iter().filter(|&&(i, j)| i < p && p < j).count()
}

pub fn pattern_stats(sigma: &Involution) -> PatternStats {
    let per_point_fixed: BTreeMap<usize, usize> = sigma
        .fixed_points()
        .into_iter()
        .map(|p| (p, arcs_over_point(sigma, p)))
        .collect();
    PatternStats {
        length: sigma.length(),
        crossings: crossings(sigma),
        fixed_under: per_point_fixed.values().sum(),
        per_point_fixed,
    }
}

/// `q_(i,j)(σ) = #{i_p < i | j_p < j} + #{j_p | j_p < i}`.
pub fn q_value(sigma: &Involution, arc: (usize, usize)) -> usize {
    let (i, j) = arc;
    let starts_before = sigma
        .arcs()
        .iter()
        .filter(|&&(ip, jp)| ip < i && jp < j)
        .count();
    let ends_before = sigma.arcs().iter().filter(|&&(_, jp)| jp < i).count();
    starts_before + ends_before
}

/// `dim B_σ = kn − Σ(j_s − i_s) − Σ q_(i_s,j_s)(σ)`.
pub fn dim_via_q(sigma: &Involution) -> usize {
    let k = sigma.length() as i64;
    let n = sigma.n() as i64;
    let spans: i64 = sigma.arcs().iter().map(|&(i, j)| (j - i) as i64).sum();
    let qs: i64 = sigma.arcs().iter().map(|&a| q_value(sigma, a) as i64).sum();
    let dim = k * n - spans - qs;
    debug_assert!(dim >= 0, "negative dimension for {sigma:?}");
    dim as usize
}

/// `dim B_σ = ℓ(n − ℓ) − c − f`.
pub fn dim_via_pattern(sigma: &Involution) -> usize {
    let stats = pattern_stats(sigma);
    dim_from_counts(sigma.n(), stats.length, stats.crossings, stats.fixed_under)
}

pub(crate) fn dim_from_counts(n: usize, length: usize, crossings: usize, fixed_under: usize) -> usize {
    let top = (length * (n - length)) as i64;
    let dim = top - crossings as i64 - fixed_under as i64;
    dim.max(0) as usize
}

/// Orbit dimension; the link-pattern formula.
pub fn dim(sigma: &Involution) -> usize {
    dim_via_pattern(sigma)
}

/// A strictly upper-triangular 0/1 matrix, 1-based accessors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroOneMatrix {
    n: usize,
    entries: Vec<u8>,
}

impl ZeroOneMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.entries.chunks(self.n).map(<[u8]>::to_vec).collect()
    }

    /// Integer matrix square (as a flat row-major vector).
    pub fn square(&self) -> Vec<u32> {
        let n = self.n;
        let mut out = vec![0u32; n * n];
        for r in 0..n {
            for m in 0..n {
                let a = self.entries[r * n + m] as u32;
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    out[r * n + c] += a * self.entries[m * n + c] as u32;
                }
            }
        }
        out
    }

    pub fn ones(&self) -> usize {
        self.entries.iter().filter(|&&e| e == 1).count()
    }
}

/// `N_σ`: ones exactly at the arc positions.
pub fn matrix_n(sigma: &Involution) -> ZeroOneMatrix {
    let n = sigma.n();
    let mut entries = vec![0u8; n * n];
    for &(i, j) in sigma.arcs() {
        entries[(i - 1) * n + (j - 1)] = 1;
    }
    ZeroOneMatrix { n, entries }
}

/// `over_(i,j)`: arcs strictly nesting the given arc.
pub fn arcs_over(sigma: &Involution, arc: (usize, usize)) -> Vec<(usize, usize)> {
    let (i, j) = arc;
    sigma
        .arcs()
        .iter()
        .copied()
        .filter(|&(a, b)| a < i && j < b)
        .collect()
}

/// `under_(i,j)`: arcs strictly nested inside the given arc.
pub fn arcs_under(sigma: &Involution, arc: (usize, usize)) -> Vec<(usize, usize)> {
    let (i, j) = arc;
    sigma
        .arcs()
        .iter()
        .copied()
        .filter(|&(a, b)| i < a && b < j)
        .collect()
}

/// `f'_(i,j)`: fixed points strictly under the arc.
pub fn fixed_under_arc(sigma: &Involution, arc: (usize, usize)) -> usize {
    (arc.0 + 1..arc.1).filter(|&p| sigma.is_fixed(p)).count()
}

/// Arcs with no arc over them.
pub fn external_arcs(sigma: &Involution) -> Vec<(usize, usize)> {
    sigma
        .arcs()
        .iter()
        .copied()
        .filter(|&arc| arcs_over(sigma, arc).is_empty())
        .collect()
}

/// External arcs with every fixed point underneath.
pub fn external_max_arcs(sigma: &Involution) -> Vec<(usize, usize)> {
    let free = sigma.n() - 2 * sigma.length();
    external_arcs(sigma)
        .into_iter()
        .filter(|&arc| fixed_under_arc(sigma, arc) == free)
        .collect()
}
