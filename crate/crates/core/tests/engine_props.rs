mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use roadcolor::engine::{
    color_k_sync_traced, common_cycle_branch, congruence_closure, find_double_bunch, initial_coloring, lift_coloring,
    loop_branch, quotient, replacement_search, spanning_analysis, tree_pair, EngineOptions, Partition, Terminal,
};
use roadcolor::graph::periodicity_of_graph;
use roadcolor::verifier::{is_stable_pair, min_rank_over_all_colorings, ColoredAutomaton, DEFAULT_GUARD};
use roadcolor::batch::Exec;
use roadcolor::{color_arbitrary, color_k_sync, Coloring, Digraph};

/// Replace every self-loop `v -> v` by `v -> v+1`.
fn drop_loops(g: &Digraph) -> Digraph {
    let n = g.vertex_count();
    let rows = (0..n)
        .map(|v| g.out_edges(v).iter().map(|&t| if t == v { (v + 1) % n } else { t }).collect())
        .collect();
    Digraph::new(n, rows).unwrap()
}

fn stable_by_words(g: &Digraph, col: &Coloring, p: usize, q: usize) -> bool {
    pair_orbit(g, col, p, q).into_iter().all(|(x, y)| syncs_by_words(g, col, x, y))
}

/// Pair stability via orbit closure and pairwise reachability of the diagonal.
fn stable_by_orbit(g: &Digraph, col: &Coloring, p: usize, q: usize) -> bool {
    pair_orbit(g, col, p, q)
        .into_iter()
        .all(|(x, y)| pair_orbit(g, col, x, y).iter().any(|&(a, b)| a == b))
}

#[test]
fn spanning_analysis_matches_iteration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let n = 100;
        let g = random_graph(&mut rng, n, 2);
        let col = random_coloring(&mut rng, &g);
        for c in 0..2 {
            let a = spanning_analysis(&g, &col, c);
            let next: Vec<usize> = (0..n).map(|v| step(&g, &col, v, c)).collect();
            assert_eq!(a.next, next);
            // v is cyclic iff iterating n times from v returns to v somewhere
            for v in 0..n {
                let mut x = v;
                let mut cyclic = false;
                for _ in 0..n {
                    x = next[x];
                    if x == v {
                        cyclic = true;
                        break;
                    }
                }
                assert_eq!(a.cycle_id[v].is_some(), cyclic);
                // level = steps until the first cyclic vertex; root is that vertex
                let mut y = v;
                let mut level = 0;
                while a.cycle_id[y].is_none() {
                    y = next[y];
                    level += 1;
                }
                assert_eq!(a.level[v], level);
                assert_eq!(a.tree_root[v], y);
            }
            let max = *a.level.iter().max().unwrap();
            assert_eq!(a.max_level, max);
            let deepest: Vec<usize> = (0..n).filter(|&v| a.level[v] == max).collect();
            assert_eq!(a.max_level_vertices, deepest);
            let cyc = (0..n).filter(|&v| a.cycle_id[v].is_some()).count();
            assert_eq!(a.cycle_edge_count, cyc);
            for cycle in &a.cycles {
                assert_eq!(cycle[0], *cycle.iter().min().unwrap());
                for i in 0..cycle.len() {
                    assert_eq!(next[cycle[i]], cycle[(i + 1) % cycle.len()]);
                }
            }
        }
    }
}

#[test]
fn double_bunch_matches_quadratic_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for trial in 0..500 {
        let n = 2 + trial % 10;
        let d = 2 + trial % 2;
        let g = random_graph(&mut rng, n, d);
        let bunch = |v: usize| g.out_edges(v).iter().all(|&t| t == g.out_edges(v)[0]);
        // lowest target entered by two distinct bunch vertices
        let expected = (0..n).find(|&r| (0..n).filter(|&v| bunch(v) && g.out_edges(v)[0] == r).count() >= 2);
        let found = find_double_bunch(&g);
        assert_eq!(found.map(|(p, _, _)| p), expected, "{g:?}");
        if let Some((p, q, r)) = found {
            assert!(bunch(q) && bunch(r) && q < r);
            assert_eq!(g.out_edges(q)[0], p);
            assert_eq!(g.out_edges(r)[0], p);
        }
    }
}

#[test]
fn loop_branch_synchronizes() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut seen = 0;
    while seen < 200 {
        let n = 2 + rng.gen_range(0..10);
        let g = random_strongly_connected(&mut rng, n, 2 + seen % 2);
        let Some((v, _)) = g.find_loop() else { continue };
        let c = loop_branch(&g, v).unwrap();
        assert_eq!(min_image(&g, &c), 1, "{g:?}");
        seen += 1;
    }
}

#[test]
fn four_vertex_common_cycle_instance() {
    let g = Digraph::new(4, vec![vec![1, 2], vec![2, 3], vec![3, 0], vec![0, 1]]).unwrap();
    assert!(find_double_bunch(&g).is_none());
    assert!(!g.has_loop());
    let start = initial_coloring(&g).unwrap();
    let a = common_cycle_branch(&g, &start).expect("cycles share a vertex with disjoint returns");
    assert!(a.has_unique_max_tree());
    let col = Coloring::with_spanning(&g, &a.next);
    let (p, q) = tree_pair(&a, a.max_level_vertices[0]);
    assert!(stable_by_words(&g, &col, p, q));
    let (_, k) = color_k_sync(&g).unwrap();
    assert_eq!(k, 1);
}

#[test]
fn tree_pairs_are_stable_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut checked = 0;
    while checked < 200 {
        let n = 4 + rng.gen_range(0..4);
        let g = drop_loops(&random_strongly_connected(&mut rng, n, 2));
        if g.has_loop() || find_double_bunch(&g).is_some() || !g.is_strongly_connected() {
            continue;
        }
        if periodicity_of_graph(&g).unwrap().k == n {
            continue;
        }
        let start = initial_coloring(&g).unwrap();
        if let Some(a) = common_cycle_branch(&g, &start) {
            assert!(a.has_unique_max_tree());
            let col = Coloring::with_spanning(&g, &a.next);
            let (p, q) = tree_pair(&a, a.max_level_vertices[0]);
            assert!(stable_by_orbit(&g, &col, p, q), "{g:?}");
        }
        let (_, w) = replacement_search(&g, &start).unwrap();
        assert!(w.p != w.q);
        assert!(stable_by_orbit(&g, &w.coloring, w.p, w.q), "{g:?}");
        checked += 1;
    }
}

#[test]
fn closure_is_a_congruence() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for trial in 0..300 {
        let n = 2 + trial % 20;
        let g = random_graph(&mut rng, n, 2 + trial % 2);
        let col = random_coloring(&mut rng, &g);
        let p = rng.gen_range(0..n);
        let q = rng.gen_range(0..n);
        let part = congruence_closure(&g, &col, (p, q)).unwrap();
        assert_eq!(part.class_of[p], part.class_of[q]);
        // one full pass over all pairs of each class finds nothing to merge
        for class in &part.classes {
            for &u in class {
                for &v in class {
                    for c in 0..alphabet(&g) {
                        assert_eq!(part.class_of[step(&g, &col, u, c)], part.class_of[step(&g, &col, v, c)]);
                    }
                }
            }
        }
        // minimality: the classes are exactly the fixpoint of merging successors
        let mut label: Vec<usize> = (0..n).collect();
        let find = |l: &Vec<usize>, mut x: usize| {
            while l[x] != x {
                x = l[x];
            }
            x
        };
        let (a, b) = (find(&label, p), find(&label, q));
        label[a.max(b)] = a.min(b);
        loop {
            let mut changed = false;
            for u in 0..n {
                for v in 0..n {
                    if find(&label, u) != find(&label, v) {
                        continue;
                    }
                    for c in 0..alphabet(&g) {
                        let (x, y) = (find(&label, step(&g, &col, u, c)), find(&label, step(&g, &col, v, c)));
                        if x != y {
                            label[x.max(y)] = x.min(y);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        for u in 0..n {
            for v in 0..n {
                assert_eq!(find(&label, u) == find(&label, v), part.class_of[u] == part.class_of[v]);
            }
        }
    }
}

#[test]
fn stable_quotients_keep_strong_connectivity_and_period() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let mut checked = 0;
    while checked < 200 {
        let n = 3 + rng.gen_range(0..8);
        let g = random_strongly_connected(&mut rng, n, 2);
        let k = periodicity_of_graph(&g).unwrap().k;
        let col = random_coloring(&mut rng, &g);
        let aut = ColoredAutomaton::new(&g, &col).unwrap();
        let pair = (0..n).flat_map(|p| (p + 1..n).map(move |q| (p, q))).find(|&(p, q)| is_stable_pair(&aut, p, q));
        let Some((p, q)) = pair else { continue };
        let part = congruence_closure(&g, &col, (p, q)).unwrap();
        let (h, _) = quotient(&g, &col, &part).unwrap();
        assert!(h.vertex_count() < n);
        assert_eq!(h.uniform_outdegree(), Some(2));
        assert!(reach(&h).iter().all(|r| r.iter().all(|&b| b)));
        assert_eq!(cycle_gcd(&h, &(0..h.vertex_count()).collect::<Vec<_>>()), k);
        checked += 1;
    }
}

#[test]
fn lift_through_double_bunch_merge() {
    // 0 and 1 are both bunches into 2.
    let g = Digraph::new(4, vec![vec![2, 2], vec![2, 2], vec![3, 0], vec![1, 0]]).unwrap();
    let col = initial_coloring(&g).unwrap();
    let part = congruence_closure(&g, &col, (0, 1)).unwrap();
    assert_eq!(part.class_count(), 3);
    let (h, part) = quotient(&g, &col, &part).unwrap();
    let child = initial_coloring(&h).unwrap();
    let lifted = lift_coloring(&g, &part, &child).unwrap();
    check_lift(&g, &part, &h, &child, &lifted);
}

#[test]
fn lift_through_two_levels() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut done = 0;
    while done < 50 {
        let n = 6 + rng.gen_range(0..6);
        let g = random_strongly_connected(&mut rng, n, 2);
        let col = random_coloring(&mut rng, &g);
        let p1 = congruence_closure(&g, &col, (0, 1)).unwrap();
        let (h1, p1) = quotient(&g, &col, &p1).unwrap();
        if h1.vertex_count() < 3 {
            continue;
        }
        let c1 = random_coloring(&mut rng, &h1);
        let p2 = congruence_closure(&h1, &c1, (0, 1)).unwrap();
        let (h2, p2) = quotient(&h1, &c1, &p2).unwrap();
        let c2 = random_coloring(&mut rng, &h2);
        let l1 = lift_coloring(&h1, &p2, &c2).unwrap();
        check_lift(&h1, &p2, &h2, &c2, &l1);
        let l0 = lift_coloring(&g, &p1, &l1).unwrap();
        check_lift(&g, &p1, &h1, &l1, &l0);
        done += 1;
    }
}

/// Every lifted edge projects onto the child edge of the same color.
fn check_lift(parent: &Digraph, part: &Partition, child: &Digraph, child_col: &Coloring, lifted: &Coloring) {
    for v in 0..parent.vertex_count() {
        let mut row = lifted.row(v).to_vec();
        row.sort_unstable();
        assert_eq!(row, (0..parent.outdegree(v)).collect::<Vec<_>>());
        for c in 0..parent.outdegree(v) {
            let down = part.class_of[step(parent, lifted, v, c)];
            assert_eq!(down, step(child, child_col, part.class_of[v], c));
        }
    }
}

#[test]
fn engine_matches_brute_force_minimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for trial in 0..120 {
        let n = 2 + trial % 6;
        let g = random_strongly_connected(&mut rng, n, 2);
        let (col, k) = color_k_sync(&g).unwrap();
        let (best, _) = min_rank_over_all_colorings(&g, DEFAULT_GUARD, Exec::default()).unwrap();
        let oracle = all_colorings(&g).iter().map(|c| min_image(&g, c)).min().unwrap();
        assert_eq!(best, oracle);
        assert_eq!(k, oracle, "{g:?}");
        assert_eq!(min_image(&g, &col), k);
    }
}

#[test]
fn recursion_depth_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let opts = EngineOptions {
        record_witnesses: true,
        ..EngineOptions::default()
    };
    for trial in 0..200 {
        let n = 3 + trial % 20;
        let g = drop_loops(&random_strongly_connected(&mut rng, n, 2 + trial % 2));
        if !g.is_strongly_connected() {
            continue;
        }
        let (col, k, trace) = color_k_sync_traced(&g, &opts).unwrap();
        assert!(trace.depth() <= n - k);
        assert!(trace.terminal.is_some());
        for w in trace.steps.iter() {
            assert!(w.vertices_after < w.vertices_before);
        }
        if trace.terminal == Some(Terminal::SizeK) {
            assert_eq!(trace.steps.last().map_or(n, |s| s.vertices_after), k);
        }
        if n <= 12 {
            assert_eq!(min_image(&g, &col), k);
        }
    }
}

#[test]
fn arbitrary_graphs_sum_sink_periods() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..100 {
        // Sinks are random strongly connected blocks; transients point forward.
        let sink_count = rng.gen_range(1..4);
        let transient = rng.gen_range(0..4);
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let mut blocks = Vec::new();
        let mut offset = transient;
        for _ in 0..sink_count {
            let m = rng.gen_range(1..5);
            blocks.push((offset, random_strongly_connected(&mut rng, m, 2)));
            offset += m;
        }
        let total = offset;
        for v in 0..transient {
            let deg = rng.gen_range(1..4);
            rows.push((0..deg).map(|_| rng.gen_range(v + 1..total)).collect());
        }
        let mut expected = 0;
        for (off, b) in &blocks {
            for v in 0..b.vertex_count() {
                rows.push(b.out_edges(v).iter().map(|&t| t + off).collect());
            }
            expected += cycle_gcd(b, &(0..b.vertex_count()).collect::<Vec<_>>());
        }
        let g = Digraph::new(total, rows).unwrap();
        let res = color_arbitrary(&g).unwrap();
        assert_eq!(res.k, expected);
        assert_eq!(res.sinks.len(), sink_count);
        if total <= 12 {
            assert_eq!(min_image(&g, &res.coloring), expected);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn engine_output_is_a_complete_coloring(seed in any::<u64>(), n in 1usize..40, d in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = if d == 1 { Digraph::cycle(n) } else { random_strongly_connected(&mut rng, n, d) };
        let (col, k) = color_k_sync(&g).unwrap();
        prop_assert!(col.is_complete(d));
        prop_assert_eq!(k, periodicity_of_graph(&g).unwrap().k);
    }
}
