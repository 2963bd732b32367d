//! Library results against brute-force reference computations written
//! independently of the library internals.

use std::collections::{BTreeSet, HashMap};

use linkpat::meanders::{
    build_meander, classify_meander, intersect, intersect_among, intersection_matrix,
    one_segments, tableau_intersection, tableau_meander, tl_inner_exponent, ComponentKind, Side,
};
use linkpat::order::{
    build_poset, closure, cover_c, cover_n, is_rank2_matrix, leq, minimal_involution, rank_matrix,
    RankMatrix,
};
use linkpat::patterns::{
    dim, enumerate_involutions, involution_from_arcs, matrix_n, pattern_stats, Involution,
};
use linkpat::tableaux::{
    closure_tableaux, descent_set, enumerate_tableaux, sigma_of_tableau, swap_allowed_by_prefix,
    swap_columns, u_move, TwoColumnTableau,
};

fn inv(n: usize, arcs: &[(usize, usize)]) -> Involution {
    involution_from_arcs(n, arcs).unwrap()
}

/// All perfect-or-partial matchings, built from permutations of `1..=n`
/// filtered to `σ² = id`.
fn involutions_by_permutation(n: usize) -> BTreeSet<Vec<(usize, usize)>> {
    fn permute(rest: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for at in 0..rest.len() {
            let x = rest.remove(at);
            prefix.push(x);
            permute(rest, prefix, out);
            prefix.pop();
            rest.insert(at, x);
        }
    }
    let mut perms = Vec::new();
    permute(&mut (1..=n).collect(), &mut Vec::new(), &mut perms);
    perms
        .into_iter()
        .filter(|p| (1..=n).all(|i| p[p[i - 1] - 1] == i))
        .map(|p| (1..=n).filter(|&i| p[i - 1] > i).map(|i| (i, p[i - 1])).collect())
        .collect()
}

/// Rank of an integer matrix by fraction-free elimination.
fn integer_rank(mut m: Vec<Vec<i64>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                let pivot_row = m[rank].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                    *x = *x * a - p * b;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn maximal_below(all: &[Involution], top: &Involution) -> BTreeSet<Involution> {
    let r = rank_matrix(top);
    let below: Vec<(&Involution, RankMatrix)> = all
        .iter()
        .filter(|s| *s != top)
        .map(|s| (s, rank_matrix(s)))
        .filter(|(_, rs)| rs.le(&r))
        .collect();
    below
        .iter()
        .filter(|(_, rs)| !below.iter().any(|(_, other)| rs != other && rs.le(other)))
        .map(|(s, _)| (*s).clone())
        .collect()
}

#[test]
fn enumeration_matches_permutation_filter() {
    for n in 1..=7 {
        let ours: BTreeSet<Vec<(usize, usize)>> = enumerate_involutions(n, None)
            .unwrap()
            .iter()
            .map(|s| s.arcs().to_vec())
            .collect();
        assert_eq!(ours, involutions_by_permutation(n), "n = {n}");
    }
}

#[test]
fn stratum_sizes_follow_matching_count() {
    for n in 1..=10usize {
        for k in 0..=n / 2 {
            let mut expected: usize = 1;
            for t in 0..2 * k {
                expected = expected * (n - t) / (t + 1);
            }
            expected *= (1..=k).map(|t| 2 * t - 1).product::<usize>();
            assert_eq!(enumerate_involutions(n, Some(k)).unwrap().len(), expected);
        }
    }
}

#[test]
fn statistics_match_pointwise_definitions() {
    for n in 1..=8 {
        for sigma in enumerate_involutions(n, None).unwrap() {
            let arcs = sigma.arcs();
            let mut c = 0;
            for &(a, b) in arcs {
                for &(x, y) in arcs {
                    if a < x && x < b && b < y {
                        c += 1;
                    }
                }
            }
            let f: usize = (1..=n)
                .filter(|&p| sigma.is_fixed(p))
                .map(|p| arcs.iter().filter(|&&(a, b)| a < p && p < b).count())
                .sum();
            let stats = pattern_stats(&sigma);
            assert_eq!((stats.crossings, stats.fixed_under), (c, f), "{sigma}");
            let l = arcs.len();
            assert_eq!(dim(&sigma), l * (n - l) - c - f);
            assert!(c <= l * l.saturating_sub(1) / 2);
        }
    }
}

#[test]
fn rank_matrix_counts_ones_and_submatrix_rank() {
    for n in 1..=7 {
        for sigma in enumerate_involutions(n, None).unwrap() {
            let r = rank_matrix(&sigma);
            let m = matrix_n(&sigma);
            for i in 1..=n {
                for j in i + 1..=n {
                    let block: Vec<Vec<i64>> = (i..=j)
                        .map(|a| (i..=j).map(|b| i64::from(m.get(a, b))).collect())
                        .collect();
                    let ones: i64 = block.iter().flatten().sum();
                    assert_eq!(r.get(i, j) as i64, ones, "{sigma} at ({i},{j})");
                    assert_eq!(r.get(i, j) as usize, integer_rank(block));
                }
            }
        }
    }
}

#[test]
fn cover_c_is_the_poset_cover() {
    for n in 1..=7 {
        let all = enumerate_involutions(n, None).unwrap();
        for sigma in &all {
            let cover: BTreeSet<Involution> = cover_c(sigma).members().into_iter().collect();
            assert_eq!(cover, maximal_below(&all, sigma), "{sigma}");
        }
    }
}

#[test]
fn covers_drop_dimension_by_one() {
    for sigma in enumerate_involutions(8, None).unwrap() {
        let d = dim(&sigma);
        for tau in cover_c(&sigma).members() {
            assert_eq!(dim(&tau) + 1, d, "{tau} below {sigma}");
        }
    }
}

#[test]
fn cover_n_members_are_maximal_among_shorter() {
    for n in 1..=7 {
        let all = enumerate_involutions(n, None).unwrap();
        for sigma in &all {
            let r = rank_matrix(sigma);
            let shorter: Vec<(&Involution, RankMatrix)> = all
                .iter()
                .filter(|s| s.length() < sigma.length())
                .map(|s| (s, rank_matrix(s)))
                .filter(|(_, rs)| rs.le(&r))
                .collect();
            let maximal: BTreeSet<&Involution> = shorter
                .iter()
                .filter(|(_, rs)| !shorter.iter().any(|(_, o)| rs != o && rs.le(o)))
                .map(|(s, _)| *s)
                .collect();
            for tau in cover_n(sigma) {
                assert!(maximal.contains(&tau), "{tau} from {sigma}");
            }
        }
    }
}

#[test]
fn closure_of_example_has_thirty_orbits() {
    let sigma = inv(7, &[(1, 3), (2, 6), (4, 7)]);
    let members = closure(&sigma).unwrap();
    assert_eq!(members.len(), 30);
    assert!(members.iter().all(|t| leq(t, &sigma).unwrap()));
}

#[test]
fn poset_edges_are_the_transitive_reduction() {
    for n in 1..=5 {
        let poset = build_poset(n, None).unwrap();
        let all: Vec<Involution> = poset.nodes.iter().map(|x| x.involution.clone()).collect();
        let ranks: Vec<RankMatrix> = all.iter().map(rank_matrix).collect();
        let lt = |a: usize, b: usize| a != b && ranks[a].le(&ranks[b]);
        let mut reduction = Vec::new();
        for p in 0..all.len() {
            for c in 0..all.len() {
                if lt(c, p) && !(0..all.len()).any(|m| lt(c, m) && lt(m, p)) {
                    reduction.push((p, c));
                }
            }
        }
        assert_eq!(poset.edges, reduction, "n = {n}");
        if n == 4 {
            assert_eq!(poset.nodes.len(), 10);
            assert_eq!(poset.edges.len(), 14);
        }
    }
}

#[test]
fn poset_reachability_is_the_order() {
    for n in 1..=6 {
        let poset = build_poset(n, None).unwrap();
        for from in 0..poset.nodes.len() {
            let reach = poset.below(from);
            for (to, node) in poset.nodes.iter().enumerate() {
                let ordered = leq(&node.involution, &poset.nodes[from].involution).unwrap();
                assert_eq!(reach[to], ordered);
            }
        }
        for &(p, c) in &poset.edges {
            assert_eq!(poset.nodes[p].dim, poset.nodes[c].dim + 1);
        }
    }
}

#[test]
fn length_strata_have_unique_minimum() {
    let poset = build_poset(6, Some(2)).unwrap();
    assert_eq!(poset.nodes.len(), 45);
    let sinks = poset.sinks();
    assert_eq!(sinks.len(), 1);
    assert_eq!(poset.nodes[sinks[0]].involution, minimal_involution(6, 2).unwrap());
    assert_eq!(minimal_involution(7, 3).unwrap(), inv(7, &[(1, 5), (2, 6), (3, 7)]));
}

#[test]
fn rank2_test_against_image() {
    for n in 1..=4usize {
        let image: HashMap<RankMatrix, Involution> = enumerate_involutions(n, None)
            .unwrap()
            .into_iter()
            .map(|s| (rank_matrix(&s), s))
            .collect();
        let cells: Vec<(usize, usize)> =
            (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        for code in 0..3u64.pow(cells.len() as u32) {
            let mut r = RankMatrix::zeros(n);
            let mut rest = code;
            for &(i, j) in &cells {
                r.set(i, j, (rest % 3) as u32);
                rest /= 3;
            }
            assert_eq!(is_rank2_matrix(&r), image.contains_key(&r), "{r:?}");
            assert_eq!(r.to_involution().as_ref(), image.get(&r));
        }
    }
}

fn union_find_components(top: &Involution, bottom: &Involution) -> Vec<(bool, usize)> {
    let n = top.n();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        parent[x] = root;
        root
    }
    let arcs: Vec<(usize, usize)> = top.arcs().iter().chain(bottom.arcs()).copied().collect();
    for &(a, b) in &arcs {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let mut groups: HashMap<usize, (usize, usize)> = HashMap::new();
    for p in 1..=n {
        if top.is_fixed(p) && bottom.is_fixed(p) {
            continue;
        }
        let root = find(&mut parent, p);
        let entry = groups.entry(root).or_default();
        entry.0 += 1;
        if top.is_fixed(p) || bottom.is_fixed(p) {
            entry.1 += 1;
        }
    }
    let mut out: Vec<(bool, usize)> = groups
        .values()
        .map(|&(points, ends)| {
            let closed = ends == 0;
            let length = if closed { points } else { points - 1 };
            (closed, length)
        })
        .collect();
    out.sort_unstable();
    out
}

#[test]
fn meander_walk_matches_union_find() {
    for n in 1..=6 {
        let all = enumerate_involutions(n, None).unwrap();
        for top in &all {
            for bottom in &all {
                let m = build_meander(top, bottom).unwrap();
                let mut ours: Vec<(bool, usize)> = m
                    .components
                    .iter()
                    .map(|c| (c.kind == ComponentKind::Loop, c.length))
                    .collect();
                ours.sort_unstable();
                assert_eq!(ours, union_find_components(top, bottom), "{top} / {bottom}");
                let mut seen: Vec<(Side, (usize, usize))> =
                    m.components.iter().flat_map(|c| c.arcs.clone()).collect();
                seen.sort_unstable();
                let mut expected: Vec<(Side, (usize, usize))> = top
                    .arcs()
                    .iter()
                    .map(|&a| (Side::Top, a))
                    .chain(bottom.arcs().iter().map(|&a| (Side::Bottom, a)))
                    .collect();
                expected.sort_unstable();
                assert_eq!(seen, expected);
                let isolated: Vec<usize> =
                    (1..=n).filter(|&p| top.is_fixed(p) && bottom.is_fixed(p)).collect();
                assert_eq!(m.isolated, isolated);
            }
        }
    }
}

#[test]
fn tableau_closure_is_external_arc_deletion() {
    for n in 1..=8 {
        for k in 1..=n / 2 {
            for t in enumerate_tableaux(n, k).unwrap() {
                let ours: BTreeSet<Involution> =
                    closure_tableaux(&t).unwrap().iter().map(sigma_of_tableau).collect();
                let deletions: BTreeSet<Involution> =
                    cover_n(&sigma_of_tableau(&t)).into_iter().collect();
                assert_eq!(ours, deletions, "{t:?}");
            }
        }
    }
}

#[test]
fn tableau_closure_is_top_of_shorter_stratum() {
    for n in 2..=7 {
        for k in 1..=n / 2 {
            for t in enumerate_tableaux(n, k).unwrap() {
                let members: Vec<Involution> = closure(&sigma_of_tableau(&t))
                    .unwrap()
                    .into_iter()
                    .filter(|s| s.length() == k - 1)
                    .collect();
                let ranks: Vec<RankMatrix> = members.iter().map(rank_matrix).collect();
                let top: BTreeSet<Involution> = (0..members.len())
                    .filter(|&a| !(0..members.len()).any(|b| ranks[a] != ranks[b] && ranks[a].le(&ranks[b])))
                    .map(|a| members[a].clone())
                    .collect();
                let expected: BTreeSet<Involution> =
                    closure_tableaux(&t).unwrap().iter().map(sigma_of_tableau).collect();
                assert_eq!(top, expected, "{t:?}");
            }
        }
    }
}

#[test]
fn descent_set_matches_short_arcs() {
    for n in 1..=8 {
        for k in 0..=n / 2 {
            for t in enumerate_tableaux(n, k).unwrap() {
                let sigma = sigma_of_tableau(&t);
                let short: BTreeSet<usize> =
                    sigma.arcs().iter().filter(|&&(i, j)| j == i + 1).map(|&(i, _)| i).collect();
                assert_eq!(descent_set(&t), short);
            }
        }
    }
}

/// The same move described on link patterns.
fn u_move_on_pattern(sigma: &Involution, i: usize) -> Option<Involution> {
    match (sigma.partner(i), sigma.partner(i + 1)) {
        (Some(_), Some(q)) => Some(sigma.swap_endpoints(i, q)),
        (Some(p), None) => Some(sigma.move_endpoint(p, i + 1)),
        (None, Some(q)) => Some(sigma.move_endpoint(q, i)),
        (None, None) => None,
    }
}

#[test]
fn u_moves_agree_with_pattern_moves_and_have_codim_one() {
    for n in 2..=7 {
        for k in 1..=n / 2 {
            for t in enumerate_tableaux(n, k).unwrap() {
                let descents = descent_set(&t);
                let sigma = sigma_of_tableau(&t);
                for i in (1..n).filter(|i| !descents.contains(i)) {
                    let moved = u_move(&t, i).unwrap();
                    let by_pattern = u_move_on_pattern(&sigma, i);
                    assert_eq!(moved.as_ref().map(sigma_of_tableau), by_pattern, "{t:?} i={i}");
                    let Some(u) = moved else { continue };
                    assert!(descent_set(&u).contains(&i));
                    let report = tableau_intersection(&t, &u).unwrap();
                    assert_eq!(report.codim_in_a(), Some(1), "{t:?} i={i}");
                    let m = tableau_meander(&t, &u).unwrap();
                    let loops: Vec<usize> = m
                        .components
                        .iter()
                        .filter(|c| c.kind == ComponentKind::Loop)
                        .map(|c| c.length)
                        .collect();
                    if sigma.partner(i).is_some() && sigma.partner(i + 1).is_some() {
                        let mut sorted = loops.clone();
                        sorted.sort_unstable();
                        let mut expected = vec![2; k - 2];
                        expected.push(4);
                        assert_eq!(sorted, expected);
                    }
                }
            }
        }
    }
}

#[test]
fn prefix_shape_test_agrees_on_u_move_swaps() {
    for n in 2..=7 {
        for k in 1..=n / 2 {
            for t in enumerate_tableaux(n, k).unwrap() {
                let sigma = sigma_of_tableau(&t);
                for i in (1..n).filter(|i| !descent_set(&t).contains(i)) {
                    let pair = match (t.in_second_column(i), t.in_second_column(i + 1)) {
                        (true, true) => Some((sigma.apply(i), i)),
                        (true, false) => Some((i + 1, i)),
                        (false, false) => sigma.partner(i + 1).map(|q| (i + 1, q)),
                        (false, true) => None,
                    };
                    if let Some((a, b)) = pair {
                        assert_eq!(
                            swap_allowed_by_prefix(&t, a, b),
                            swap_columns(&t, a, b).is_some(),
                            "{t:?} swap {a}<->{b}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn prefix_shape_test_is_loose_for_arbitrary_pairs() {
    let t = TwoColumnTableau::new(6, vec![1, 2, 4, 6], vec![3, 5]).unwrap();
    assert!(swap_allowed_by_prefix(&t, 2, 5));
    assert_eq!(swap_columns(&t, 2, 5), None);
}

#[test]
fn overlapping_one_segments_exist() {
    let all = enumerate_involutions(6, Some(2)).unwrap();
    let found = all.iter().any(|a| {
        all.iter().any(|b| {
            let segments = one_segments(a, b).unwrap();
            segments.windows(2).any(|w| w[1].0 < w[0].1)
        })
    });
    assert!(found);
    let a = inv(6, &[(1, 3), (4, 5)]);
    let b = inv(6, &[(2, 3), (4, 6)]);
    assert_eq!(one_segments(&a, &b).unwrap(), vec![(1, 3), (2, 5), (4, 6)]);
}

#[test]
fn same_length_intersections_are_nonempty_and_pure() {
    for n in 2..=7 {
        for k in 1..=n / 2 {
            let stratum = enumerate_involutions(n, Some(k)).unwrap();
            let shorter: Vec<Involution> = enumerate_involutions(n, None)
                .unwrap()
                .into_iter()
                .filter(|s| s.length() <= k)
                .collect();
            for a in &stratum {
                for b in &stratum {
                    let min = intersection_matrix(a, b).unwrap();
                    let restricted = intersect_among(a, b, &min, &stratum);
                    assert!(!restricted.components.is_empty(), "{a} / {b}");
                    if n <= 6 {
                        let full = intersect_among(a, b, &min, &shorter);
                        assert!(full.components.iter().all(|c| c.involution.length() == k));
                        assert_eq!(full.irreducible, full.min_matrix_in_r2, "{a} / {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn irreducible_iff_min_matrix_is_a_rank_matrix() {
    for n in 1..=6 {
        let all = enumerate_involutions(n, None).unwrap();
        for a in &all {
            for b in &all {
                let report = intersect(a, b, None).unwrap();
                assert_eq!(report.irreducible, report.min_matrix_in_r2, "{a} / {b}");
            }
        }
    }
}

#[test]
fn odd_meanders_still_meet() {
    let mut odd = 0;
    for n in 1..=7 {
        for k in 1..=n / 2 {
            let tableaux = enumerate_tableaux(n, k).unwrap();
            for s in &tableaux {
                for t in &tableaux {
                    if tl_inner_exponent(s, t).unwrap().is_none() {
                        odd += 1;
                        assert!(!tableau_intersection(s, t).unwrap().components.is_empty());
                    }
                }
            }
        }
    }
    assert!(odd > 0);
}

#[test]
fn codim_one_pairs_with_isolated_points_occur() {
    let mut with_isolated = 0;
    for n in 3..=8 {
        for k in 1..=n / 2 {
            let tableaux: Vec<TwoColumnTableau> = enumerate_tableaux(n, k).unwrap();
            for s in &tableaux {
                for t in &tableaux {
                    let m = tableau_meander(s, t).unwrap();
                    let class = classify_meander(&m);
                    if class.even && class.loops + 1 == k && !m.isolated.is_empty() {
                        with_isolated += 1;
                        let report = tableau_intersection(s, t).unwrap();
                        assert_eq!(report.codim_in_a(), Some(1));
                    }
                }
            }
        }
    }
    assert!(with_isolated > 0);
}
