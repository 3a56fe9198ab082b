use cfcolor::domination::{cf_from_dominating_set, open_cf_bipartite4, open_cf_planar8, open_degree_constraints};
use cfcolor::exact::{
    chi_cf, exists_cf_k, exists_cf_k_with_hints, gamma_cf_k, min_dominating_set, one_in_three_sat, proper_coloring,
    Formula,
};
use cfcolor::generators::{
    gen_random_bipartite_planar, gen_random_outerplanar, gen_random_outerplanar_sparse, gen_random_planar,
    gen_reduction_1color, ClauseOrders,
};
use cfcolor::heuristic::iterated_elimination;
use cfcolor::io::{parse_coloring, parse_graph, write_coloring, write_graph};
use cfcolor::outerplanar::{compatible, solve_outerplanar, solve_outerplanar_detailed, VertexConfig};
use cfcolor::verify::{cf_neighbors, is_dominating, verify_proper};
use cfcolor::{verify_cf, Graph, Mode, PartialColoring, SearchLimits};
use proptest::prelude::*;

fn lim() -> SearchLimits {
    SearchLimits::unlimited()
}

/// Graph on `n` vertices keeping the pairs whose bit is set.
fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Graph::new(n, pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e)).unwrap()
}

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn outerplanar(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n, 0.0..=1.0f64, 0.0..=0.8f64, any::<u64>())
        .prop_map(|(n, keep, drop, seed)| gen_random_outerplanar_sparse(n, keep, drop, seed).unwrap())
}

/// Adds a subdivided copy of `h` on fresh vertices, joined to vertex 0.
fn plant(g: &Graph, h: &[(usize, usize)], h_n: usize, subdivide: &[bool]) -> Graph {
    let base = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    let mut next = base + h_n;
    for (i, &(a, b)) in h.iter().enumerate() {
        if subdivide.get(i).copied().unwrap_or(false) {
            edges.push((base + a, next));
            edges.push((next, base + b));
            next += 1;
        } else {
            edges.push((base + a, base + b));
        }
    }
    edges.push((0, base));
    Graph::new(next, edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_neighborhood_adds_the_vertex(g in small_graph(9)) {
        for v in 0..g.n() {
            let open = g.neighborhood(v, Mode::Open).unwrap();
            let closed = g.neighborhood(v, Mode::Closed).unwrap();
            prop_assert_eq!(closed.len(), g.degree(v) + 1);
            prop_assert!(closed.contains(v));
            prop_assert!(open.members.iter().all(|&w| closed.contains(w)));
        }
    }

    #[test]
    fn embedding_accepts_outerplanar_and_rejects_planted_minors(
        g in outerplanar(14),
        sub in proptest::collection::vec(any::<bool>(), 6),
    ) {
        prop_assert!(g.outerplanar_embedding().is_ok());
        let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        prop_assert!(!plant(&g, &k4, 4, &sub).is_outerplanar());
        let k23 = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)];
        prop_assert!(!plant(&g, &k23, 5, &sub).is_outerplanar());
    }

    #[test]
    fn contraction_yields_a_minor(g in small_graph(8)) {
        if let Some(&(u, v)) = g.edges().first() {
            let (minor, map) = g.contract_edge(u, v).unwrap();
            prop_assert_eq!(minor.n(), g.n() - 1);
            prop_assert_eq!(map.len(), g.n());
            prop_assert!(minor.m() < g.m());
            prop_assert!(minor.edges().iter().all(|&(a, b)| a < b));
        }
    }

    #[test]
    fn independent_dominating_set_is_both(g in small_graph(10)) {
        let d = g.independent_dominating_set();
        prop_assert!(is_dominating(&g, &d));
        for (i, &a) in d.iter().enumerate() {
            prop_assert!(d[i + 1..].iter().all(|&b| !g.has_edge(a, b)));
        }
    }

    #[test]
    fn proper_colorings_are_conflict_free(g in small_graph(8)) {
        let k = (1..=g.n() as u32).find(|&k| proper_coloring(&g, k, lim()).unwrap().is_found()).unwrap();
        let chi = proper_coloring(&g, k, lim()).unwrap().found().unwrap();
        prop_assert!(verify_proper(&g, &chi));
        prop_assert!(verify_cf(&g, &chi, Mode::Closed).is_valid());
        let cf = chi_cf(&g, Mode::Closed, lim()).unwrap().found().unwrap();
        prop_assert!(cf.0 <= k);
        prop_assert!(verify_cf(&g, &cf.1, Mode::Closed).is_valid());
    }

    #[test]
    fn valid_colorings_dominate(g in small_graph(8), colors in proptest::collection::vec(0u32..=2, 8)) {
        let chi = PartialColoring::with_palette(colors[..g.n()].to_vec(), 2).unwrap();
        if verify_cf(&g, &chi, Mode::Closed).is_valid() {
            prop_assert!(is_dominating(&g, &chi.colored_vertices()));
        }
    }

    #[test]
    fn uncoloring_is_local(g in small_graph(9), colors in proptest::collection::vec(0u32..=3, 9)) {
        let chi = PartialColoring::with_palette(colors[..g.n()].to_vec(), 3).unwrap();
        let before = verify_cf(&g, &chi, Mode::Closed);
        for u in chi.colored_vertices() {
            let mut changed = chi.clone();
            changed.set(u, 0).unwrap();
            let after = verify_cf(&g, &changed, Mode::Closed);
            let dist = g.bfs_distances(&[u]);
            for &(w, reason) in &before.violations {
                if dist[w].is_none_or(|d| d > 2) {
                    prop_assert!(after.violations.contains(&(w, reason)));
                }
            }
        }
    }

    #[test]
    fn gamma_bounds(g in small_graph(8)) {
        let gd = min_dominating_set(&g, lim()).unwrap().found().unwrap();
        prop_assert!(is_dominating(&g, &gd));
        for k in 1..=3 {
            if let Some((count, chi)) = gamma_cf_k(&g, k, Mode::Closed, lim()).unwrap().found() {
                prop_assert!(count >= gd.len());
                prop_assert_eq!(chi.colored_vertices().len(), count);
                prop_assert!(verify_cf(&g, &chi, Mode::Closed).is_valid());
            }
        }
    }

    #[test]
    fn searches_are_deterministic(g in small_graph(8)) {
        prop_assert_eq!(
            gamma_cf_k(&g, 2, Mode::Closed, lim()).unwrap(),
            gamma_cf_k(&g, 2, Mode::Closed, lim()).unwrap()
        );
        prop_assert_eq!(
            solve_outerplanar(&gen_random_outerplanar(g.n().max(3), 0.5, g.m() as u64).unwrap(), 2, true).unwrap(),
            solve_outerplanar(&gen_random_outerplanar(g.n().max(3), 0.5, g.m() as u64).unwrap(), 2, true).unwrap()
        );
    }

    #[test]
    fn open_hints_are_sound(g in small_graph(7)) {
        for k in 1..=3 {
            let plain = exists_cf_k(&g, k, Mode::Open, lim()).unwrap();
            let hinted = exists_cf_k_with_hints(&g, k, Mode::Open, &open_degree_constraints(&g), lim()).unwrap();
            prop_assert_eq!(plain.is_found(), hinted.is_found());
            if let Some(chi) = hinted.found() {
                prop_assert!(verify_cf(&g, &chi, Mode::Open).is_valid());
            }
        }
    }

    #[test]
    fn elimination_is_total(g in small_graph(12)) {
        let out = iterated_elimination(&g);
        prop_assert!(verify_cf(&g, &out.coloring, Mode::Closed).is_valid());
        let mut alive = vec![true; g.n()];
        for path in &out.trace.initial_paths {
            for &v in path {
                alive[v] = false;
            }
        }
        for round in &out.trace.rounds {
            let live: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
            let (residual, old) = g.induced_subgraph(&live);
            let local = |v: usize| old.iter().position(|&x| x == v).unwrap();
            for (i, &a) in round.set.iter().enumerate() {
                let dist = residual.bfs_distances(&[local(a)]);
                for &b in &round.set[i + 1..] {
                    prop_assert!(dist[local(b)].is_none_or(|d| d >= 3));
                }
            }
            for &v in round.removed.iter().chain(round.paths.iter().flatten()) {
                alive[v] = false;
            }
        }
    }

    #[test]
    fn dp_matches_oracle_and_backtracks_consistently(g in outerplanar(10), k in 1u32..=2) {
        let oracle = gamma_cf_k(&g, k, Mode::Closed, lim()).unwrap().found().map(|(c, _)| c);
        let sol = solve_outerplanar(&g, k, true).unwrap();
        prop_assert_eq!(sol.as_ref().map(|s| s.colored), oracle);
        prop_assert_eq!(solve_outerplanar(&g, k, false).unwrap().is_some(), oracle.is_some());
        if let Some(s) = sol {
            prop_assert!(verify_cf(&g, &s.coloring, Mode::Closed).is_valid());
            for (i, &(u, v)) in g.edges().iter().enumerate() {
                prop_assert_eq!(&s.edge_configs[i].0, &s.vertex_configs[u]);
                prop_assert_eq!(&s.edge_configs[i].1, &s.vertex_configs[v]);
                prop_assert!(compatible(&g, &s.vertex_configs[u], &s.vertex_configs[v]).unwrap());
            }
        }
    }

    #[test]
    fn dp_never_deletes_a_realizable_configuration(g in outerplanar(9), k in 1u32..=2) {
        let Some(chi) = exists_cf_k(&g, k, Mode::Closed, lim()).unwrap().found() else {
            return Ok(());
        };
        let witnesses = [chi, gamma_cf_k(&g, k, Mode::Closed, lim()).unwrap().found().unwrap().1];
        let run = solve_outerplanar_detailed(&g, k, true).unwrap();
        prop_assert!(run.solution.is_some());
        for comp in &run.components {
            let local_of = |v: usize| comp.vertices.iter().position(|&x| x == v).unwrap();
            for chi in &witnesses {
                let configs: Vec<VertexConfig> = comp.vertices.iter().map(|&v| {
                    let designated = cf_neighbors(&g, chi, v, Mode::Closed)
                        .unwrap()
                        .into_iter()
                        .map(|w| (local_of(w), chi.get(w)))
                        .collect();
                    VertexConfig { vertex: local_of(v), chi: chi.get(v), designated }
                }).collect();
                let ids: Vec<usize> = configs.iter().map(|c| comp.table.find_vertex_config(c).unwrap()).collect();
                for (lv, &id) in ids.iter().enumerate() {
                    prop_assert!(comp.table.vertex_alive(lv, id));
                }
                for (e, &(a, b)) in comp.graph.edges().iter().enumerate() {
                    let id = comp.table.find_edge_config(e, ids[a], ids[b]);
                    prop_assert!(id.is_some_and(|id| comp.table.edge_alive(e, id)));
                }
            }
        }
    }

    #[test]
    fn dominating_sets_give_colorings(g in small_graph(9)) {
        let d = min_dominating_set(&g, lim()).unwrap().found().unwrap();
        let chi = cf_from_dominating_set(&g, &d, 4, lim());
        if let Ok(chi) = chi {
            prop_assert_eq!(chi.colored_vertices(), d);
            prop_assert!(verify_cf(&g, &chi, Mode::Closed).is_valid());
        }
    }

    #[test]
    fn open_constructions(n in 4usize..30, seed in any::<u64>()) {
        let b = gen_random_bipartite_planar(n, seed).unwrap();
        let chi = open_cf_bipartite4(&b, lim()).unwrap();
        prop_assert!(verify_cf(&b, &chi, Mode::Open).is_valid());
        prop_assert!(chi.colors().iter().all(|&c| c <= 4));
        let p = gen_random_planar(n, seed).unwrap();
        let chi = open_cf_planar8(&p, lim()).unwrap();
        prop_assert!(verify_cf(&p, &chi, Mode::Open).is_valid());
        prop_assert!(chi.colors().iter().all(|&c| c <= 8));
    }

    #[test]
    fn reduction_is_an_equivalence(
        nvars in 3usize..=5,
        raw in proptest::collection::vec((0usize..5, 0usize..5, 0usize..5), 1..=3),
        sides in proptest::collection::vec(any::<bool>(), 15),
    ) {
        let clauses: Vec<[usize; 3]> = raw
            .iter()
            .filter_map(|&(a, b, c)| {
                let v = [a % nvars, b % nvars, c % nvars];
                (v[0] != v[1] && v[1] != v[2] && v[0] != v[2]).then_some(v)
            })
            .collect();
        prop_assume!(!clauses.is_empty());
        let f = Formula::new(nvars, clauses).unwrap();
        let mut orders = ClauseOrders { upper: vec![Vec::new(); nvars], lower: vec![Vec::new(); nvars] };
        for (j, cl) in f.clauses().iter().enumerate() {
            for (t, &x) in cl.iter().enumerate() {
                if sides[3 * j + t] {
                    orders.upper[x].push(j);
                } else {
                    orders.lower[x].push(j);
                }
            }
        }
        let r = gen_reduction_1color(&f, &orders).unwrap();
        let sat = one_in_three_sat(&f).unwrap().is_some();
        prop_assert_eq!(sat, exists_cf_k(&r.graph, 1, Mode::Closed, lim()).unwrap().is_found());
    }

    #[test]
    fn random_generators_stay_in_class(n in 3usize..40, seed in any::<u64>()) {
        prop_assert!(gen_random_outerplanar(n, 0.5, seed).unwrap().outerplanar_embedding().is_ok());
        let p = gen_random_planar(n, seed).unwrap();
        prop_assert!(p.m() <= 3 * n - 6);
        prop_assert_eq!(gen_random_planar(n, seed).unwrap(), p);
    }

    #[test]
    fn text_formats_round_trip(g in small_graph(10), colors in proptest::collection::vec(0u32..=3, 10)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g.clone());
        let chi = PartialColoring::from_colors(colors[..g.n()].to_vec());
        let text = write_coloring(&chi);
        let back = parse_coloring(&text, g.n()).unwrap();
        prop_assert_eq!(back.colors(), chi.colors());
        prop_assert_eq!(write_coloring(&back), text);
    }
}
