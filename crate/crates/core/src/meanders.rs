//! Meanders and intersections of orbit closures.
//!
//! Drawing one link pattern above the line and another below it gives a
//! meander: a disjoint union of closed loops and open intervals. For
//! two-column tableaux its shape controls the intersection of the
//! corresponding orbital varieties.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::{is_rank2_matrix, rank_matrix, RankMatrix};
use crate::patterns::{self, enumerate_involutions_capped, Involution, DEFAULT_CAP};
use crate::tableaux::{sigma_of_tableau, TwoColumnTableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "t")]
    Top,
    #[serde(rename = "b")]
    Bottom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Loop,
    Interval,
}

/// One connected piece of a meander, listed in walking order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeanderComponent {
    pub kind: ComponentKind,
    pub length: usize,
    pub arcs: Vec<(Side, (usize, usize))>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meander {
    pub n: usize,
    pub top: Involution,
    pub bottom: Involution,
    pub components: Vec<MeanderComponent>,
    /// Points fixed by both patterns.
    pub isolated: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeanderClass {
    pub even: bool,
    pub loops: usize,
    pub odd_intervals: usize,
    /// Includes isolated points, as intervals of length 0.
    pub even_intervals: usize,
}

fn ordered(p: usize, q: usize) -> (usize, usize) {
    (p.min(q), p.max(q))
}

fn pattern(m: &Meander, side: Side) -> &Involution {
    match side {
        Side::Top => &m.top,
        Side::Bottom => &m.bottom,
    }
}

fn other(side: Side) -> Side {
    match side {
        Side::Top => Side::Bottom,
        Side::Bottom => Side::Top,
    }
}

/// Superposes `top` and `bottom` and splits the picture into components.
///
/// Intervals are walked from their smaller free end; loops start at their
/// smallest point along its top arc. Components are ordered by smallest point.
pub fn build_meander(top: &Involution, bottom: &Involution) -> Result<Meander> {
    if top.n() != bottom.n() {
        return Err(Error::SizeMismatch {
            left: top.n(),
            right: bottom.n(),
        });
    }
    let n = top.n();
    let mut m = Meander {
        n,
        top: top.clone(),
        bottom: bottom.clone(),
        components: Vec::new(),
        isolated: Vec::new(),
    };
    let mut visited = vec![false; n + 1];
    let mut found: Vec<(usize, MeanderComponent)> = Vec::new();

    let walk = |m: &Meander, start: usize, side: Side, visited: &mut Vec<bool>| {
        let mut arcs = Vec::new();
        let mut at = start;
        let mut side = side;
        visited[at] = true;
        while let Some(next) = pattern(m, side).partner(at) {
            arcs.push((side, ordered(at, next)));
            visited[next] = true;
            at = next;
            side = other(side);
            if at == start {
                break;
            }
        }
        arcs
    };

    for p in 1..=n {
        if visited[p] {
            continue;
        }
        match (top.partner(p), bottom.partner(p)) {
            (None, None) => {
                visited[p] = true;
                m.isolated.push(p);
            }
            (Some(_), None) | (None, Some(_)) => {
                let side = if top.partner(p).is_some() { Side::Top } else { Side::Bottom };
                let arcs = walk(&m, p, side, &mut visited);
                found.push((p, interval(arcs)));
            }
            (Some(_), Some(_)) => {}
        }
    }
    for p in 1..=n {
        if !visited[p] {
            let arcs = walk(&m, p, Side::Top, &mut visited);
            found.push((
                p,
                MeanderComponent {
                    kind: ComponentKind::Loop,
                    length: arcs.len(),
                    arcs,
                },
            ));
        }
    }
    found.sort_by_key(|(p, c)| (c.arcs.iter().map(|&(_, (a, _))| a).min().unwrap_or(*p), *p));
    m.components = found.into_iter().map(|(_, c)| c).collect();
    Ok(m)
}

fn interval(arcs: Vec<(Side, (usize, usize))>) -> MeanderComponent {
    MeanderComponent {
        kind: ComponentKind::Interval,
        length: arcs.len(),
        arcs,
    }
}

pub fn classify_meander(m: &Meander) -> MeanderClass {
    let mut class = MeanderClass {
        even: true,
        loops: 0,
        odd_intervals: 0,
        even_intervals: m.isolated.len(),
    };
    for c in &m.components {
        match c.kind {
            ComponentKind::Loop => class.loops += 1,
            ComponentKind::Interval if c.length % 2 == 1 => class.odd_intervals += 1,
            ComponentKind::Interval => class.even_intervals += 1,
        }
    }
    class.even = class.odd_intervals == 0;
    class
}

impl fmt::Display for Meander {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "top    {}", self.top)?;
        writeln!(f, "bottom {}", self.bottom)?;
        for c in &self.components {
            let kind = match c.kind {
                ComponentKind::Loop => "loop",
                ComponentKind::Interval => "interval",
            };
            let arcs: Vec<String> = c
                .arcs
                .iter()
                .map(|(side, (a, b))| {
                    let s = if *side == Side::Top { 't' } else { 'b' };
                    format!("{s}({a},{b})")
                })
                .collect();
            writeln!(f, "{kind:<8} {:>2}  {}", c.length, arcs.join(" "))?;
        }
        if !self.isolated.is_empty() {
            let pts: Vec<String> = self.isolated.iter().map(usize::to_string).collect();
            writeln!(f, "isolated {}", pts.join(" "))?;
        }
        Ok(())
    }
}

impl Meander {
    /// Graphviz drawing: points on a line, top arcs solid, bottom arcs dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph meander {\n  rankdir=LR;\n  node [shape=point];\n");
        let pts: Vec<String> = (1..=self.n).map(|p| format!("p{p}")).collect();
        for p in 1..=self.n {
            out.push_str(&format!("  p{p} [xlabel=\"{p}\"];\n"));
        }
        if self.n > 1 {
            out.push_str(&format!("  {} [style=invis];\n", pts.join(" -- ")));
        }
        for &(a, b) in self.top.arcs() {
            out.push_str(&format!("  p{a} -- p{b} [color=black, constraint=false];\n"));
        }
        for &(a, b) in self.bottom.arcs() {
            out.push_str(&format!(
                "  p{a} -- p{b} [color=gray40, style=dashed, constraint=false];\n"
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// `R_{a,b}`: entrywise minimum of the two rank matrices.
pub fn intersection_matrix(a: &Involution, b: &Involution) -> Result<RankMatrix> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(rank_matrix(a).min(&rank_matrix(b)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionComponent {
    pub involution: Involution,
    pub dim: usize,
    pub codim_in_a: usize,
    pub codim_in_b: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionReport {
    pub min_matrix: RankMatrix,
    pub min_matrix_in_r2: bool,
    /// Ordered by decreasing dimension, then canonically.
    pub components: Vec<IntersectionComponent>,
    pub irreducible: bool,
}

impl IntersectionReport {
    /// Codimension of the largest component inside the first input.
    pub fn codim_in_a(&self) -> Option<usize> {
        self.components.iter().map(|c| c.codim_in_a).min()
    }

    pub fn codim_in_b(&self) -> Option<usize> {
        self.components.iter().map(|c| c.codim_in_b).min()
    }
}

/// Orbits in `B̄_a ∩ B̄_b` (of length `restrict_k` if given), reduced to the
/// maximal ones.
pub fn intersect(a: &Involution, b: &Involution, restrict_k: Option<usize>) -> Result<IntersectionReport> {
    intersect_capped(a, b, restrict_k, DEFAULT_CAP)
}

pub fn intersect_capped(
    a: &Involution,
    b: &Involution,
    restrict_k: Option<usize>,
    cap: usize,
) -> Result<IntersectionReport> {
    let min_matrix = intersection_matrix(a, b)?;
    let candidates = match restrict_k {
        Some(k) if 2 * k > a.n() => Vec::new(),
        Some(k) => enumerate_involutions_capped(a.n(), Some(k), cap)?,
        None => enumerate_involutions_capped(a.n(), None, cap)?
            .into_iter()
            .filter(|s| s.length() <= a.length().min(b.length()))
            .collect(),
    };
    Ok(intersect_among(a, b, &min_matrix, &candidates))
}

/// [`intersect`] over a caller-supplied candidate list, so sweeps can
/// enumerate each stratum once.
pub fn intersect_among(
    a: &Involution,
    b: &Involution,
    min_matrix: &RankMatrix,
    candidates: &[Involution],
) -> IntersectionReport {
    let below: Vec<(Involution, RankMatrix)> = candidates
        .par_iter()
        .filter_map(|s| {
            let r = rank_matrix(s);
            r.le(min_matrix).then(|| (s.clone(), r))
        })
        .collect();
    let (dim_a, dim_b) = (patterns::dim(a), patterns::dim(b));
    let mut components: Vec<IntersectionComponent> = below
        .iter()
        .filter(|(_, r)| !below.iter().any(|(_, other)| r != other && r.le(other)))
        .map(|(s, _)| {
            let dim = patterns::dim(s);
            IntersectionComponent {
                involution: s.clone(),
                dim,
                codim_in_a: dim_a - dim,
                codim_in_b: dim_b - dim,
            }
        })
        .collect();
    components.sort_by(|x, y| y.dim.cmp(&x.dim).then_with(|| x.involution.cmp(&y.involution)));
    IntersectionReport {
        min_matrix_in_r2: is_rank2_matrix(min_matrix),
        irreducible: components.len() == 1,
        min_matrix: min_matrix.clone(),
        components,
    }
}

fn check_shapes(s: &TwoColumnTableau, t: &TwoColumnTableau) -> Result<()> {
    if s.n() != t.n() || s.k() != t.k() {
        return Err(Error::ShapeMismatch {
            n1: s.n(),
            k1: s.k(),
            n2: t.n(),
            k2: t.k(),
        });
    }
    Ok(())
}

/// `M_{S,T}`, with `σ_S` on top.
pub fn tableau_meander(s: &TwoColumnTableau, t: &TwoColumnTableau) -> Result<Meander> {
    check_shapes(s, t)?;
    build_meander(&sigma_of_tableau(s), &sigma_of_tableau(t))
}

/// `V_S ∩ V_T`, computed inside the stratum of length `k`.
pub fn tableau_intersection(s: &TwoColumnTableau, t: &TwoColumnTableau) -> Result<IntersectionReport> {
    check_shapes(s, t)?;
    intersect(&sigma_of_tableau(s), &sigma_of_tableau(t), Some(s.k()))
}

/// The meander test for `codim_{V_T}(V_T ∩ V_S) = 1`: even with `k − 1`
/// loops.
pub fn codim1_criterion(s: &TwoColumnTableau, t: &TwoColumnTableau) -> Result<bool> {
    let class = classify_meander(&tableau_meander(s, t)?);
    Ok(class.even && class.loops + 1 == s.k())
}

/// `r` with `⟨P_S, P_T⟩ = δ^r`, or `None` when the meander is odd.
pub fn tl_inner_exponent(s: &TwoColumnTableau, t: &TwoColumnTableau) -> Result<Option<usize>> {
    let class = classify_meander(&tableau_meander(s, t)?);
    Ok(class.even.then_some(class.loops))
}

/// `k − r` for even meanders: the codimension of the intersection of the
/// corresponding two-row Springer fiber components.
pub fn fung_codim(s: &TwoColumnTableau, t: &TwoColumnTableau) -> Result<Option<usize>> {
    Ok(tl_inner_exponent(s, t)?.map(|r| s.k() - r))
}

/// Minimal segments `[p, q]` on which `R_{a,b}` equals 1, by left endpoint.
pub fn one_segments(a: &Involution, b: &Involution) -> Result<Vec<(usize, usize)>> {
    let r = intersection_matrix(a, b)?;
    Ok(segments_of(&r))
}

fn segments_of(r: &RankMatrix) -> Vec<(usize, usize)> {
    let n = r.n();
    let at = |i: usize, j: usize| if i == 0 || j == 0 || i > n || j > n { 0 } else { r.get(i, j) };
    let mut out = Vec::new();
    for p in 1..=n {
        for q in p + 1..=n {
            if at(p, q) == 1 && at(p + 1, q) == 0 && at(p, q - 1) == 0 {
                out.push((p, q));
            }
        }
    }
    out
}

/// Sufficient condition for reducibility of `B̄_a ∩ B̄_b` read off the
/// 1-segments `[i_s, j_s]`: some consecutive pair touches (`i_{s+1} = j_s`)
/// or overlaps with `R_{i_s, j_{s+1}} = 1`.
pub fn reducible_by_segments(a: &Involution, b: &Involution) -> Result<bool> {
    let r = intersection_matrix(a, b)?;
    let segments = segments_of(&r);
    Ok(segments.windows(2).any(|w| {
        let ((i1, j1), (i2, j2)) = (w[0], w[1]);
        i2 == j1 || (i2 < j1 && r.get(i1, j2) == 1)
    }))
}

pub fn reducibility_sufficient(s: &TwoColumnTableau, t: &TwoColumnTableau) -> Result<bool> {
    check_shapes(s, t)?;
    reducible_by_segments(&sigma_of_tableau(s), &sigma_of_tableau(t))
}
