//! Rank matrices and the closure order on orbits.
//!
//! `σ' ≼ σ` iff `R_σ' ≤ R_σ` entrywise, where `(R_σ)_{i,j}` counts the arcs
//! of `σ` inside the segment `[i, j]`. The orbit closure of `σ` is the union
//! of the orbits below it, and its codimension-one boundary is described by
//! four arc moves plus deletion of "maximal" external arcs.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::patterns::{
    self, arcs_over, enumerate_involutions_capped, external_arcs, external_max_arcs,
    Involution, DEFAULT_CAP,
};

/// An `n × n` nonnegative integer matrix, zero on and below the diagonal.
/// Accessors are 1-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RankMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl RankMatrix {
    pub fn zeros(n: usize) -> Self {
        RankMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    /// Builds a matrix from rows; every row must have `rows.len()` entries.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NoPoints);
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::SizeMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Ok(RankMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.entries[(i - 1) * self.n + (j - 1)] = value;
    }

    // Entries outside 1..=n read as zero.
    fn at(&self, i: usize, j: usize) -> i64 {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            0
        } else {
            self.get(i, j) as i64
        }
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.n).map(<[u32]>::to_vec).collect()
    }

    /// Entrywise `self ≤ other`.
    pub fn le(&self, other: &RankMatrix) -> bool {
        self.n == other.n && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Entrywise minimum.
    pub fn min(&self, other: &RankMatrix) -> RankMatrix {
        debug_assert_eq!(self.n, other.n);
        RankMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// Recovers the involution this matrix would be the rank matrix of, by
    /// reading off the second differences. Returns `None` if the result does
    /// not reproduce the matrix.
    pub fn to_involution(&self) -> Option<Involution> {
        let n = self.n;
        let mut arcs = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let d = self.at(i, j) - self.at(i + 1, j) - self.at(i, j - 1) + self.at(i + 1, j - 1);
                match d {
                    0 => {}
                    1 => arcs.push((i, j)),
                    _ => return None,
                }
            }
        }
        let sigma = Involution::new(n, arcs).ok()?;
        (rank_matrix(&sigma) == *self).then_some(sigma)
    }
}

impl fmt::Debug for RankMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RankMatrix(n={})", self.n)?;
        for row in self.rows() {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl fmt::Display for RankMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for RankMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RankMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<u32>>::deserialize(deserializer)?;
        RankMatrix::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// `(R_σ)_{i,j}`: arcs `(a, b)` with `i ≤ a` and `b ≤ j`.
pub fn rank_matrix(sigma: &Involution) -> RankMatrix {
    let n = sigma.n();
    let mut r = RankMatrix::zeros(n);
    for &(a, b) in sigma.arcs() {
        for i in 1..=a {
            for j in b..=n {
                r.entries[(i - 1) * n + (j - 1)] += 1;
            }
        }
    }
    r
}

fn check_same_n(a: &Involution, b: &Involution) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

/// `a ≼ b`.
pub fn leq(a: &Involution, b: &Involution) -> Result<bool> {
    check_same_n(a, b)?;
    Ok(rank_matrix(a).le(&rank_matrix(b)))
}

/// Membership in the image of [`rank_matrix`], decided by local conditions:
/// zero on and below the diagonal, unit steps along rows and columns, and the
/// corner-propagation rules that force a detected arc `(i, j)` to be the only
/// arc at its endpoints.
pub fn is_rank2_matrix(r: &RankMatrix) -> bool {
    let n = r.n();
    for i in 1..=n {
        for j in 1..=i {
            if r.get(i, j) != 0 {
                return false;
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let here = r.at(i, j);
            let below = r.at(i + 1, j);
            let left = r.at(i, j - 1);
            if !(below <= here && here <= below + 1) || !(left <= here && here <= left + 1) {
                return false;
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let here = r.at(i, j);
            let corner = here == r.at(i + 1, j) + 1
                && here == r.at(i, j - 1) + 1
                && here == r.at(i + 1, j - 1) + 1;
            if !corner {
                continue;
            }
            // (a): row i steps over row i+1 exactly from column j on
            for k in 1..=n {
                let step = r.at(i, k) - r.at(i + 1, k);
                if step != i64::from(k >= j) {
                    return false;
                }
            }
            // (b): column j steps over column j-1 exactly up to row i
            for k in 1..=n {
                let step = r.at(k, j) - r.at(k, j - 1);
                if step != i64::from(k <= i) {
                    return false;
                }
            }
            // (c): no other arc starts at j or ends at i
            for k in 1..=n {
                if r.at(j, k) != r.at(j + 1, k) || r.at(k, i) != r.at(k, i - 1) {
                    return false;
                }
            }
        }
    }
    true
}

/// The four same-length move families generating `D(σ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MoveKind {
    /// Left endpoint jumps to the nearest fixed point on its left (`↶`).
    MoveLeft,
    /// Right endpoint jumps to the nearest fixed point on its right (`↷`).
    MoveRight,
    /// The arc is crossed with an arc to its left (`↬`).
    LeftCross,
    /// The arc is crossed with an arc directly over it (`⇅`).
    ConcentricCross,
}

/// Which move produced a cover element, and from which arc(s).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MoveTag {
    pub kind: MoveKind,
    pub arc: (usize, usize),
    /// The second arc for the crossing moves.
    pub partner: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DMove {
    pub result: Involution,
    pub provenance: Vec<MoveTag>,
}

/// `C(σ) = D(σ) ⊔ {σ⁻_(i,j) | (i,j) ∈ E_max(σ)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSet {
    /// Deletions of `E_max` arcs.
    pub n_moves: Vec<Involution>,
    /// Same-length moves.
    pub d_moves: Vec<DMove>,
}

impl CoverSet {
    /// Every cover element, sorted.
    pub fn members(&self) -> Vec<Involution> {
        let mut all: Vec<Involution> = self
            .n_moves
            .iter()
            .cloned()
            .chain(self.d_moves.iter().map(|m| m.result.clone()))
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    pub fn is_empty(&self) -> bool {
        self.n_moves.is_empty() && self.d_moves.is_empty()
    }
}

/// `σ_↶(i,j)`: move `i` to the nearest fixed point `m < i`, provided every
/// arc over `(i,j)` also covers `m`.
pub fn move_left(sigma: &Involution, arc: (usize, usize)) -> Option<Involution> {
    let (i, _) = arc;
    let m = (1..i).rev().find(|&p| sigma.is_fixed(p))?;
    let blocked = arcs_over(sigma, arc).iter().any(|&(a, _)| a > m);
    (!blocked).then(|| sigma.move_endpoint(i, m))
}

/// `σ_(i,j)↷`: the mirror image of [`move_left`].
pub fn move_right(sigma: &Involution, arc: (usize, usize)) -> Option<Involution> {
    let (_, j) = arc;
    let m = (j + 1..=sigma.n()).find(|&p| sigma.is_fixed(p))?;
    let blocked = arcs_over(sigma, arc).iter().any(|&(_, b)| b < m);
    (!blocked).then(|| sigma.move_endpoint(j, m))
}

/// `L_(i,j)(σ)`: arcs `(a, b)` entirely left of `(i, j)` such that every point
/// strictly between `b` and `i` is an endpoint of an arc inside `[a, j]`.
pub fn left_cross_partners(sigma: &Involution, arc: (usize, usize)) -> Vec<(usize, usize)> {
    let (i, j) = arc;
    sigma
        .arcs()
        .iter()
        .copied()
        .filter(|&(a, b)| {
            b < i
                && (b + 1..i).all(|p| match sigma.partner(p) {
                    Some(q) => a <= p.min(q) && p.max(q) <= j,
                    None => false,
                })
        })
        .collect()
}

/// `Ov_(i,j)(σ)`: arcs over `(i, j)` with no arc nested between the two.
pub fn concentric_partners(sigma: &Involution, arc: (usize, usize)) -> Vec<(usize, usize)> {
    let over = arcs_over(sigma, arc);
    over.iter()
        .copied()
        .filter(|&(a, b)| !over.iter().any(|&(c, d)| a < c && d < b))
        .collect()
}

/// `N(σ)`: delete one external arc.
pub fn cover_n(sigma: &Involution) -> Vec<Involution> {
    external_arcs(sigma)
        .into_iter()
        .map(|arc| sigma.without_arc(arc))
        .collect()
}

/// `D(σ)`: the union of the four move families, deduplicated, sorted by
/// result. Each result carries every move that produced it.
pub fn cover_d(sigma: &Involution) -> Vec<DMove> {
    let mut found: BTreeMap<Involution, Vec<MoveTag>> = BTreeMap::new();
    let mut record = |result: Involution, kind, arc, partner| {
        found.entry(result).or_default().push(MoveTag { kind, arc, partner });
    };
    for &arc in sigma.arcs() {
        if let Some(tau) = move_right(sigma, arc) {
            record(tau, MoveKind::MoveRight, arc, None);
        }
        if let Some(tau) = move_left(sigma, arc) {
            record(tau, MoveKind::MoveLeft, arc, None);
        }
        for left in left_cross_partners(sigma, arc) {
            // ((a,b))((i,j)) -> ((a,i))((b,j))
            record(sigma.swap_endpoints(left.1, arc.0), MoveKind::LeftCross, arc, Some(left));
        }
        for outer in concentric_partners(sigma, arc) {
            // ((a,b))((i,j)) -> ((a,j))((i,b))
            record(sigma.swap_endpoints(outer.0, arc.0), MoveKind::ConcentricCross, arc, Some(outer));
        }
    }
    found
        .into_iter()
        .map(|(result, mut provenance)| {
            provenance.sort();
            DMove { result, provenance }
        })
        .collect()
}

/// `C(σ)`: the cover of `σ` in the closure order.
pub fn cover_c(sigma: &Involution) -> CoverSet {
    let n_moves = external_max_arcs(sigma)
        .into_iter()
        .map(|arc| sigma.without_arc(arc))
        .collect();
    CoverSet {
        n_moves,
        d_moves: cover_d(sigma),
    }
}

/// Orbits in the closure of `B_σ`, found by walking cover moves.
pub fn closure(sigma: &Involution) -> Result<Vec<Involution>> {
    closure_capped(sigma, DEFAULT_CAP)
}

pub fn closure_capped(sigma: &Involution, cap: usize) -> Result<Vec<Involution>> {
    if sigma.n() > cap {
        return Err(Error::ResourceCap { n: sigma.n(), cap });
    }
    let mut seen: HashSet<Involution> = HashSet::from([sigma.clone()]);
    let mut queue = VecDeque::from([sigma.clone()]);
    while let Some(current) = queue.pop_front() {
        for next in cover_c(&current).members() {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Involution> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Same set as [`closure`], by filtering every involution through [`leq`].
pub fn closure_by_filter(sigma: &Involution, cap: usize) -> Result<Vec<Involution>> {
    let top = rank_matrix(sigma);
    Ok(enumerate_involutions_capped(sigma.n(), None, cap)?
        .into_par_iter()
        .filter(|tau| rank_matrix(tau).le(&top))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetNode {
    pub involution: Involution,
    pub dim: usize,
    pub rank: RankMatrix,
}

/// Hasse diagram of the orbits on `n` points (optionally of a fixed length).
/// Edges run parent → child, from an orbit to a codimension-one orbit in its
/// boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPoset {
    pub n: usize,
    pub k: Option<usize>,
    pub nodes: Vec<PosetNode>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct PosetRecord {
    n: usize,
    k: Option<usize>,
    nodes: Vec<NodeRecord>,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct NodeRecord {
    arcs: Vec<(usize, usize)>,
    dim: usize,
}

pub fn build_poset(n: usize, k: Option<usize>) -> Result<OrbitPoset> {
    build_poset_capped(n, k, DEFAULT_CAP)
}

pub fn build_poset_capped(n: usize, k: Option<usize>, cap: usize) -> Result<OrbitPoset> {
    let members = enumerate_involutions_capped(n, k, cap)?;
    let index: HashMap<&Involution, usize> =
        members.iter().enumerate().map(|(at, s)| (s, at)).collect();
    let mut edges: Vec<(usize, usize)> = members
        .par_iter()
        .enumerate()
        .flat_map_iter(|(parent, sigma)| {
            cover_c(sigma)
                .members()
                .into_iter()
                .filter_map(|tau| index.get(&tau).copied())
                .map(move |child| (parent, child))
                .collect::<Vec<_>>()
        })
        .collect();
    edges.sort_unstable();
    let nodes = members
        .into_par_iter()
        .map(|involution| PosetNode {
            dim: patterns::dim(&involution),
            rank: rank_matrix(&involution),
            involution,
        })
        .collect();
    Ok(OrbitPoset { n, k, nodes, edges })
}

impl OrbitPoset {
    pub fn index_of(&self, sigma: &Involution) -> Option<usize> {
        self.nodes
            .binary_search_by(|node| node.involution.cmp(sigma))
            .ok()
    }

    pub fn children(&self, parent: usize) -> impl Iterator<Item = usize> + '_ {
        let start = self.edges.partition_point(|&(p, _)| p < parent);
        self.edges[start..]
            .iter()
            .take_while(move |&&(p, _)| p == parent)
            .map(|&(_, c)| c)
    }

    /// Nodes reachable downward from `from`, including itself.
    pub fn below(&self, from: usize) -> Vec<bool> {
        let mut seen = vec![false; self.nodes.len()];
        seen[from] = true;
        let mut stack = vec![from];
        while let Some(at) = stack.pop() {
            for child in self.children(at) {
                if !seen[child] {
                    seen[child] = true;
                    stack.push(child);
                }
            }
        }
        seen
    }

    /// Nodes without children.
    pub fn sinks(&self) -> Vec<usize> {
        let mut has_child = vec![false; self.nodes.len()];
        for &(p, _) in &self.edges {
            has_child[p] = true;
        }
        (0..self.nodes.len()).filter(|&i| !has_child[i]).collect()
    }

    /// Nodes without parents.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_parent = vec![false; self.nodes.len()];
        for &(_, c) in &self.edges {
            has_parent[c] = true;
        }
        (0..self.nodes.len()).filter(|&i| !has_parent[i]).collect()
    }

    pub fn to_json(&self) -> String {
        let record = PosetRecord {
            n: self.n,
            k: self.k,
            nodes: self
                .nodes
                .iter()
                .map(|node| NodeRecord {
                    arcs: node.involution.arcs().to_vec(),
                    dim: node.dim,
                })
                .collect(),
            edges: self.edges.clone(),
        };
        serde_json::to_string(&record).expect("poset record serializes")
    }

    /// Parses the JSON form and checks it against recomputed data: node
    /// dimensions must match and edge endpoints must exist.
    pub fn from_json(text: &str) -> Result<Self> {
        let record: PosetRecord =
            serde_json::from_str(text).map_err(|e| Error::InvalidPoset(e.to_string()))?;
        let mut nodes = Vec::with_capacity(record.nodes.len());
        for node in record.nodes {
            let involution = Involution::new(record.n, node.arcs)
                .map_err(|e| Error::InvalidPoset(e.to_string()))?;
            let dim = patterns::dim(&involution);
            if dim != node.dim {
                return Err(Error::InvalidPoset(format!(
                    "{involution} recorded with dim {} but has dim {dim}",
                    node.dim
                )));
            }
            if record.k.is_some_and(|k| k != involution.length()) {
                return Err(Error::InvalidPoset(format!("{involution} has the wrong length")));
            }
            nodes.push(PosetNode {
                rank: rank_matrix(&involution),
                involution,
                dim,
            });
        }
        if !nodes.windows(2).all(|w| w[0].involution < w[1].involution) {
            return Err(Error::InvalidPoset("nodes are not in canonical order".into()));
        }
        let count = nodes.len();
        if record.edges.iter().any(|&(p, c)| p >= count || c >= count) {
            return Err(Error::InvalidPoset("edge endpoint out of range".into()));
        }
        if !record.edges.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidPoset("edges are not sorted".into()));
        }
        Ok(OrbitPoset {
            n: record.n,
            k: record.k,
            nodes,
            edges: record.edges,
        })
    }

    /// Graphviz form: one box per orbit labelled with its cycle form and
    /// dimension, rows grouped by dimension, edges pointing down.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph orbits {\n  rankdir=TB;\n  node [shape=box];\n");
        let mut by_dim: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (at, node) in self.nodes.iter().enumerate() {
            by_dim.entry(node.dim).or_default().push(at);
        }
        for (at, node) in self.nodes.iter().enumerate() {
            out.push_str(&format!(
                "  n{at} [label=\"{} d={}\"];\n",
                node.involution, node.dim
            ));
        }
        for (dim, members) in by_dim.iter().rev() {
            let ids: Vec<String> = members.iter().map(|at| format!("n{at};")).collect();
            out.push_str(&format!("  {{ rank=same; /* d={dim} */ {} }}\n", ids.join(" ")));
        }
        for &(p, c) in &self.edges {
            out.push_str(&format!("  n{p} -> n{c};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// `σ_o(k)`: the unique involution with `k` arcs below every other one.
pub fn minimal_involution(n: usize, k: usize) -> Result<Involution> {
    let stratum = enumerate_involutions_capped(n, Some(k), DEFAULT_CAP)?;
    let ranks: Vec<RankMatrix> = stratum.par_iter().map(rank_matrix).collect();
    let floor = ranks
        .iter()
        .skip(1)
        .fold(ranks[0].clone(), |acc, r| acc.min(r));
    let mut hits = stratum
        .into_iter()
        .zip(&ranks)
        .filter(|(_, r)| **r == floor)
        .map(|(s, _)| s);
    match (hits.next(), hits.next()) {
        (Some(sigma), None) => Ok(sigma),
        _ => Err(Error::NoUniqueMinimum { n, k }),
    }
}

/// `σ̄_{k+1}`: the smallest involution with one more arc lying above `σ`.
///
/// With `E_max(σ) = ∅` the extreme fixed points are joined. Otherwise the
/// arcs `(i_1,j_1) … (i_s,j_s)` of `E_max` are replaced by the staircase
/// `(i_1,j_σ)(i_2,j_1)…(i_σ,j_s)`.
pub fn sigma_bar_next(sigma: &Involution) -> Result<Involution> {
    let fixed = sigma.fixed_points();
    if fixed.len() < 2 {
        return Err(Error::NoFixedPoints);
    }
    let lo = fixed[0];
    let hi = fixed[fixed.len() - 1];
    let emax = external_max_arcs(sigma);
    if emax.is_empty() {
        return sigma.with_arc((lo, hi));
    }
    // E_max arcs mutually cross, so left and right endpoints ascend together
    let lefts = emax.iter().map(|&(i, _)| i).chain([lo]);
    let rights = std::iter::once(hi).chain(emax.iter().map(|&(_, j)| j));
    let kept = sigma.arcs().iter().copied().filter(|a| !emax.contains(a));
    Involution::new(sigma.n(), kept.chain(lefts.zip(rights)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::involution_from_arcs;

    fn inv(n: usize, arcs: &[(usize, usize)]) -> Involution {
        involution_from_arcs(n, arcs).unwrap()
    }

    #[test]
    fn rank_matrix_of_worked_example() {
        let r = rank_matrix(&inv(7, &[(1, 3), (2, 6), (4, 7)]));
        let expected: Vec<Vec<u32>> = vec![
            vec![0, 0, 1, 1, 1, 2, 3],
            vec![0, 0, 0, 0, 0, 1, 2],
            vec![0, 0, 0, 0, 0, 0, 1],
            vec![0, 0, 0, 0, 0, 0, 1],
            vec![0; 7],
            vec![0; 7],
            vec![0; 7],
        ];
        assert_eq!(r.rows(), expected);
        assert_eq!(rank_matrix(&Involution::identity(4)), RankMatrix::zeros(4));
    }

    #[test]
    fn order_examples() {
        let s = inv(6, &[(1, 3), (4, 6)]);
        assert!(leq(&s, &s).unwrap());
        assert!(leq(&s, &inv(6, &[(1, 3), (4, 5)])).unwrap());
        assert!(leq(&s, &inv(6, &[(2, 3), (4, 6)])).unwrap());
        let a = inv(4, &[(1, 2)]);
        let b = inv(4, &[(3, 4)]);
        assert!(!leq(&a, &b).unwrap());
        assert!(!leq(&b, &a).unwrap());
        assert!(matches!(
            leq(&a, &Involution::identity(5)),
            Err(Error::SizeMismatch { left: 4, right: 5 })
        ));
    }

    #[test]
    fn rank2_membership_examples() {
        let a = rank_matrix(&inv(6, &[(1, 3), (4, 5)]));
        let b = rank_matrix(&inv(6, &[(2, 3), (4, 6)]));
        let m = a.min(&b);
        assert_eq!(m.rows()[0], vec![0, 0, 1, 1, 1, 2]);
        assert_eq!(m.rows()[1], vec![0, 0, 0, 0, 1, 1]);
        assert!(!is_rank2_matrix(&m));
        assert!(m.to_involution().is_none());
        assert!(is_rank2_matrix(&a));
        assert_eq!(a.to_involution(), Some(inv(6, &[(1, 3), (4, 5)])));

        let mut below_diag = RankMatrix::zeros(3);
        below_diag.set(2, 1, 1);
        assert!(!is_rank2_matrix(&below_diag));
    }

    #[test]
    fn endpoint_moves_worked_example() {
        let s = inv(8, &[(1, 6), (3, 5), (4, 7)]);
        assert_eq!(move_left(&s, (1, 6)), None);
        assert_eq!(move_right(&s, (1, 6)), Some(inv(8, &[(1, 8), (3, 5), (4, 7)])));
        assert_eq!(move_left(&s, (3, 5)), Some(inv(8, &[(1, 6), (2, 5), (4, 7)])));
        assert_eq!(move_right(&s, (3, 5)), None);
        assert_eq!(move_left(&s, (4, 7)), Some(inv(8, &[(1, 6), (3, 5), (2, 7)])));
        assert_eq!(move_right(&s, (4, 7)), Some(inv(8, &[(1, 6), (3, 5), (4, 8)])));
    }

    #[test]
    fn left_cross_worked_example() {
        let s = inv(11, &[(1, 5), (2, 4), (3, 6), (7, 9), (10, 11)]);
        assert!(left_cross_partners(&s, (1, 5)).is_empty());
        assert!(left_cross_partners(&s, (2, 4)).is_empty());
        assert!(left_cross_partners(&s, (3, 6)).is_empty());
        assert_eq!(left_cross_partners(&s, (7, 9)), vec![(1, 5), (3, 6)]);
        assert_eq!(left_cross_partners(&s, (10, 11)), vec![(7, 9)]);
    }

    #[test]
    fn concentric_worked_example() {
        let s = inv(11, &[(1, 11), (2, 6), (3, 9), (4, 5)]);
        assert!(concentric_partners(&s, (1, 11)).is_empty());
        assert_eq!(concentric_partners(&s, (2, 6)), vec![(1, 11)]);
        assert_eq!(concentric_partners(&s, (3, 9)), vec![(1, 11)]);
        assert_eq!(concentric_partners(&s, (4, 5)), vec![(2, 6), (3, 9)]);
        let moved = cover_d(&s);
        assert!(moved
            .iter()
            .any(|m| m.result == inv(11, &[(1, 11), (2, 5), (3, 9), (4, 6)])));
    }

    #[test]
    fn cover_n_examples() {
        let s = inv(7, &[(1, 3), (2, 7), (4, 5)]);
        assert_eq!(
            cover_n(&s),
            vec![inv(7, &[(2, 7), (4, 5)]), inv(7, &[(1, 3), (4, 5)])]
        );
        assert!(cover_n(&Involution::identity(3)).is_empty());
        assert!(cover_c(&Involution::identity(3)).is_empty());
    }

    #[test]
    fn cover_tags_record_provenance() {
        let s = inv(8, &[(1, 6), (3, 5), (4, 7)]);
        let d = cover_d(&s);
        let moved = d
            .iter()
            .find(|m| m.result == inv(8, &[(1, 8), (3, 5), (4, 7)]))
            .unwrap();
        assert_eq!(
            moved.provenance,
            vec![MoveTag {
                kind: MoveKind::MoveRight,
                arc: (1, 6),
                partner: None
            }]
        );
    }

    #[test]
    fn closures_small() {
        let id = Involution::identity(3);
        assert_eq!(closure(&id).unwrap(), vec![id.clone()]);
        let s = inv(2, &[(1, 2)]);
        assert_eq!(closure(&s).unwrap(), vec![Involution::identity(2), s.clone()]);
        assert!(matches!(
            closure(&Involution::identity(13)),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn posets_small() {
        let p = build_poset(2, None).unwrap();
        assert_eq!(p.nodes.len(), 2);
        assert_eq!(p.edges, vec![(1, 0)]);
        let p4 = build_poset(4, None).unwrap();
        assert_eq!(p4.nodes.len(), 10);
        let back = OrbitPoset::from_json(&p4.to_json()).unwrap();
        assert_eq!(back, p4);
        assert!(p4.to_dot().contains("[label=\"(1,4)(2,3) d=4\"]"));
    }

    #[test]
    fn minimal_elements() {
        assert_eq!(minimal_involution(4, 2).unwrap(), inv(4, &[(1, 3), (2, 4)]));
        assert_eq!(minimal_involution(5, 0).unwrap(), Involution::identity(5));
        assert!(minimal_involution(4, 3).is_err());
    }

    #[test]
    fn sigma_bar_next_examples() {
        assert_eq!(
            sigma_bar_next(&Involution::identity(2)).unwrap(),
            inv(2, &[(1, 2)])
        );
        let expected = inv(11, &[(1, 6), (2, 9), (3, 10), (4, 5), (7, 11)]);
        // E_max empty: join the extreme fixed points 3 and 10
        assert_eq!(
            sigma_bar_next(&inv(11, &[(1, 6), (2, 9), (4, 5), (7, 11)])).unwrap(),
            expected
        );
        // E_max = {(2,10)}: staircase (2,9)(3,10)
        assert_eq!(
            sigma_bar_next(&inv(11, &[(1, 6), (2, 10), (4, 5), (7, 11)])).unwrap(),
            expected
        );
        assert_eq!(
            sigma_bar_next(&inv(2, &[(1, 2)])),
            Err(Error::NoFixedPoints)
        );
    }
}
