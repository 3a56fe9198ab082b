//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`); exits non-zero if any
//! criterion fails. Budget exhaustion on the G_3 search is reported as
//! EXPECTED-SLOW and does not fail the run.

use std::time::{Duration, Instant};

use cfcolor::domination::{open_cf_bipartite4, open_cf_planar8, planar_cf4};
use cfcolor::exact::{
    chi_cf, exists_cf_k, gamma_cf_k, min_dominating_set, one_in_three_sat, proper_coloring, Formula,
};
use cfcolor::generators::{
    fan_triangulation, find_outerplanar_requiring_2, gen_complete, gen_cycle, gen_gk, gen_path,
    gen_random_bipartite_planar, gen_random_outerplanar, gen_random_outerplanar_sparse, gen_random_planar,
    gen_reduction_1color, gk_canonical_coloring, ClauseOrders,
};
use cfcolor::heuristic::iterated_elimination;
use cfcolor::outerplanar::solve_outerplanar;
use cfcolor::verify::count_colored;
use cfcolor::{verify_cf, Graph, Mode, Outcome, SearchLimits};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

enum Status {
    Pass,
    Fail,
    ExpectedSlow,
}

type Check = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> (Status, String)>);

fn lim() -> SearchLimits {
    SearchLimits::unlimited()
}

fn gamma(g: &Graph, k: u32) -> Option<usize> {
    match gamma_cf_k(g, k, Mode::Closed, lim()).unwrap() {
        Outcome::Found((c, _)) => Some(c),
        Outcome::Infeasible => None,
        Outcome::BudgetExceeded(_) => unreachable!("unlimited"),
    }
}

fn chi(g: &Graph) -> u32 {
    chi_cf(g, Mode::Closed, lim()).unwrap().found().unwrap().0
}

fn chromatic(g: &Graph) -> u32 {
    (1..=g.n().max(1) as u32)
        .find(|&k| proper_coloring(g, k, lim()).unwrap().is_found())
        .unwrap()
}

fn dom_number(g: &Graph) -> usize {
    min_dominating_set(g, lim()).unwrap().found().unwrap().len()
}

/// Connected outerplanar graph with `3 <= n <= 12`, ranging from trees to
/// triangulations.
fn small_outerplanar(seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(3..=12);
    let keep = rng.gen_range(0.0..=1.0);
    let drop = if rng.gen_bool(0.5) { rng.gen_range(0.0..=0.8) } else { 0.0 };
    gen_random_outerplanar_sparse(n, keep, drop, seed).unwrap()
}

fn criterion_1() -> Check {
    let mut feasible = [0; 2];
    for seed in 0..200 {
        let g = small_outerplanar(seed);
        for k in 1..=2u32 {
            let dp = solve_outerplanar(&g, k, true).unwrap();
            let decided = solve_outerplanar(&g, k, false).unwrap();
            let oracle = gamma(&g, k);
            let exists = exists_cf_k(&g, k, Mode::Closed, lim()).unwrap().is_found();
            if decided.is_some() != exists || dp.as_ref().map(|s| s.colored) != oracle {
                return Err(format!(
                    "seed {seed}, k = {k}: dp {:?} / {}, oracle {oracle:?} / {exists}",
                    dp.map(|s| s.colored),
                    decided.is_some()
                ));
            }
            if let Some(s) = dp {
                if !verify_cf(&g, &s.coloring, Mode::Closed).is_valid() {
                    return Err(format!("seed {seed}, k = {k}: invalid dp coloring"));
                }
                feasible[k as usize - 1] += 1;
            }
        }
    }
    Ok(format!(
        "200 graphs; feasible instances k=1: {}, k=2: {}",
        feasible[0], feasible[1]
    ))
}

fn criterion_2() -> Check {
    for n in 1..=8 {
        if chi(&gen_complete(n).unwrap()) != 1 {
            return Err(format!("K_{n}"));
        }
    }
    for m in 1..=4 {
        if chi(&gen_path(3 * m).unwrap()) != 1 {
            return Err(format!("P_{}", 3 * m));
        }
    }
    let c4 = chi(&gen_cycle(4).unwrap());
    let g2 = chi(&gen_gk(2).unwrap());
    if c4 != 2 || g2 != 2 {
        return Err(format!("C4 -> {c4}, G_2 -> {g2}"));
    }
    Ok("K_1..K_8 = 1, P_3..P_12 = 1, C4 = 2, G_2 = 2".into())
}

fn criterion_3() -> (Status, String) {
    let g = gen_gk(3).unwrap();
    if !verify_cf(&g, &gk_canonical_coloring(3).unwrap(), Mode::Closed).is_valid() {
        return (Status::Fail, "canonical coloring of G_3 rejected".into());
    }
    let limits = SearchLimits::new(u64::MAX, Duration::from_secs(3600)).unwrap();
    let start = Instant::now();
    match exists_cf_k(&g, 2, Mode::Closed, limits).unwrap() {
        Outcome::Infeasible => (
            Status::Pass,
            format!("canonical 3-coloring valid; no 2-coloring ({:.1?})", start.elapsed()),
        ),
        Outcome::Found(_) => (Status::Fail, "a 2-coloring of G_3 was found".into()),
        Outcome::BudgetExceeded(u) => (
            Status::ExpectedSlow,
            format!("budget exceeded after {} nodes, {:.1?}", u.nodes, u.elapsed),
        ),
    }
}

fn criterion_4() -> Check {
    let mut worst = [0u32; 2];
    for seed in 0..200u64 {
        let n = 3 + (seed as usize * 7) % 38;
        let g = gen_random_outerplanar(n, 0.5, seed).unwrap();
        let out = iterated_elimination(&g);
        if out.colors_used > 2 || !verify_cf(&g, &out.coloring, Mode::Closed).is_valid() {
            return Err(format!("outerplanar seed {seed}: {} colors", out.colors_used));
        }
        worst[0] = worst[0].max(out.colors_used);
        let g = gen_random_planar(n, seed).unwrap();
        let out = iterated_elimination(&g);
        if out.colors_used > 3 || !verify_cf(&g, &out.coloring, Mode::Closed).is_valid() {
            return Err(format!("planar seed {seed}: {} colors", out.colors_used));
        }
        worst[1] = worst[1].max(out.colors_used);
    }
    Ok(format!("max colors: outerplanar {}, planar {}", worst[0], worst[1]))
}

fn criterion_5() -> Check {
    for seed in 0..100u64 {
        let n = 3 + seed as usize % 12;
        let g = gen_random_planar(n, 1000 + seed).unwrap();
        let chi = planar_cf4(&g, lim()).unwrap();
        let gamma_dom = dom_number(&g);
        let g4 = gamma(&g, 4);
        if !verify_cf(&g, &chi, Mode::Closed).is_valid()
            || chi.colors_used() > 4
            || count_colored(&chi) != gamma_dom
            || g4 != Some(gamma_dom)
        {
            return Err(format!(
                "seed {seed}: colored {}, gamma {gamma_dom}, gamma^4_CF {g4:?}",
                count_colored(&chi)
            ));
        }
    }
    Ok("100 planar graphs, n <= 14".into())
}

fn criterion_6() -> Check {
    for seed in 0..100u64 {
        let n = 4 + seed as usize % 30;
        let g = gen_random_bipartite_planar(n, 2000 + seed).unwrap();
        let chi = open_cf_bipartite4(&g, lim()).unwrap();
        if !verify_cf(&g, &chi, Mode::Open).is_valid() || chi.colors().iter().any(|&c| c > 4) {
            return Err(format!("bipartite seed {seed}"));
        }
        let g = gen_random_planar(n, 3000 + seed).unwrap();
        let chi = open_cf_planar8(&g, lim()).unwrap();
        if !verify_cf(&g, &chi, Mode::Open).is_valid() || chi.colors().iter().any(|&c| c > 8) {
            return Err(format!("planar seed {seed}"));
        }
    }
    Ok("100 bipartite planar (<= 4 colors), 100 planar (<= 8 colors)".into())
}

fn random_formula(rng: &mut ChaCha8Rng) -> Formula {
    let nvars = rng.gen_range(3..=6);
    let nclauses = rng.gen_range(nvars..=2 * nvars);
    let clauses = (0..nclauses)
        .map(|_| {
            let mut vars: Vec<usize> = (0..nvars).collect();
            for i in 0..3 {
                let j = rng.gen_range(i..nvars);
                vars.swap(i, j);
            }
            [vars[0], vars[1], vars[2]]
        })
        .collect();
    Formula::new(nvars, clauses).unwrap()
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut sat = 0;
    for i in 0..50 {
        let f = random_formula(&mut rng);
        let r = gen_reduction_1color(&f, &ClauseOrders::all_upper(&f)).unwrap();
        let satisfiable = one_in_three_sat(&f).unwrap().is_some();
        let colorable = exists_cf_k(&r.graph, 1, Mode::Closed, lim()).unwrap().is_found();
        if satisfiable != colorable {
            return Err(format!("formula {i}: satisfiable {satisfiable}, 1-colorable {colorable}"));
        }
        sat += usize::from(satisfiable);
    }
    Ok(format!("50 formulas, {sat} satisfiable"))
}

fn criterion_8() -> Check {
    let found = find_outerplanar_requiring_2(9, lim()).unwrap();
    let fan = chi(&fan_triangulation(9).unwrap());
    match found {
        Some(g) if fan == 1 => {
            if solve_outerplanar(&g, 1, false).unwrap().is_some() {
                return Err("the dynamic program 1-colors the graph found".into());
            }
            let chords: Vec<_> = g.edges().iter().filter(|&&(a, b)| b - a >= 2 && (a, b) != (0, 8)).collect();
            Ok(format!("first triangulation needing 2 colors has chords {chords:?}; fan needs 1"))
        }
        Some(_) => Err(format!("fan needs {fan} colors")),
        None => Err("every triangulation of the 9-gon is 1-colorable".into()),
    }
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.1..0.9);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..2000 {
        let g = random_graph(&mut rng, 7);
        let (c, p) = (chi(&g), chromatic(&g));
        if c > p {
            return Err(format!("graph {i}: chi_CF {c} > chi {p}"));
        }
    }
    for i in 0..100 {
        let g = random_graph(&mut rng, 10);
        let gd = dom_number(&g);
        let values: Vec<usize> = (1..=gd as u32).filter_map(|k| gamma(&g, k)).collect();
        if values.iter().any(|&v| v < gd) || values.iter().min() != Some(&gd) {
            return Err(format!("graph {i}: gamma {gd}, gamma^k_CF {values:?}"));
        }
    }
    Ok("2000 graphs n <= 7 with chi_CF <= chi; 100 graphs n <= 10 with min_k gamma^k_CF = gamma".into())
}

fn main() {
    let checks: Vec<Criterion> = vec![
        ("1 dp oracle equivalence", Box::new(|| status(criterion_1()))),
        ("2 known chromatic values", Box::new(|| status(criterion_2()))),
        ("3 G_3 needs three colors", Box::new(criterion_3)),
        ("4 heuristic color bounds", Box::new(|| status(criterion_4()))),
        ("5 domination equality", Box::new(|| status(criterion_5()))),
        ("6 open-neighborhood constructions", Box::new(|| status(criterion_6()))),
        ("7 reduction equivalence", Box::new(|| status(criterion_7()))),
        ("8 O_9 existence", Box::new(|| status(criterion_8()))),
        ("9 invariant suite", Box::new(|| status(criterion_9()))),
    ];
    let only: Option<String> = std::env::args().nth(1).filter(|a| !a.starts_with('-'));
    let mut failed = 0;
    for (name, run) in checks {
        if only.as_ref().is_some_and(|o| !name.starts_with(o.as_str())) {
            continue;
        }
        let start = Instant::now();
        let (st, detail) = run();
        let tag = match st {
            Status::Pass => "PASS",
            Status::Fail => {
                failed += 1;
                "FAIL"
            }
            Status::ExpectedSlow => "EXPECTED-SLOW",
        };
        println!("{tag} criterion {name}: {detail} [{:.1?}]", start.elapsed());
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

fn status(check: Check) -> (Status, String) {
    match check {
        Ok(d) => (Status::Pass, d),
        Err(d) => (Status::Fail, d),
    }
}
