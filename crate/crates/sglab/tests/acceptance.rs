//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Expected values are recomputed here from closed forms or from
//! independent brute-force oracles rather than read back from the harness.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use sglab::verify::{FalsifyParams, Status, TheoremReport, Verifier};
use sglab_core::constructions::{build_c3minus_k, complete_signed};
use sglab_core::search::improving_moves;
use sglab_core::spectral::spectral_radius;
use sglab_core::{find_negative_cycle_of_length, Sign, SignedGraph, VertexSet};

const RHO_TOL: f64 = 1e-8;
const BOUND_TOL: f64 = 1e-8;
const C3K_MIN_SLACK: f64 = 1e-3;
const HONG_EQUALITY_TOL: f64 = 1e-9;
const ORACLE_GRAPHS: usize = 500;
const SEARCH_BUDGET: u64 = 1_000_000;
const SEARCH_RESTARTS: u32 = 20;

struct Outcome {
    pass: bool,
    detail: String,
    limit: Duration,
}

fn check(cond: bool, what: impl Into<String>, failures: &mut Vec<String>) {
    if !cond {
        failures.push(what.into());
    }
}

fn outcome(failures: Vec<String>, ok_detail: String, limit_secs: u64) -> Outcome {
    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            ok_detail
        } else {
            failures.join("; ")
        },
        limit: Duration::from_secs(limit_secs),
    }
}

fn obs<'a>(r: &'a TheoremReport, key: &str) -> &'a Value {
    &r.observed[key]
}

fn tri(n: usize) -> usize {
    n * (n - 1) / 2
}

fn edge_maximum(v: &Verifier) -> Outcome {
    let mut f = Vec::new();
    let mut seen = Vec::new();
    for n in 4..=7 {
        let r = v.verify_turan_c3(n, None);
        let want = tri(n) - (n - 2);
        check(
            r.status == Status::Pass,
            format!("n={n}: status {:?}", r.status),
            &mut f,
        );
        check(
            obs(&r, "max_edges") == want,
            format!("n={n}: max edges {}", obs(&r, "max_edges")),
            &mut f,
        );
        let mut got: Vec<String> = obs(&r, "extremal")
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s.as_str().unwrap().to_string())
            .collect();
        got.sort();
        let mut expect: Vec<String> = (1..=(n - 2) / 2)
            .map(|s| format!("G_{{{s},{}}}", n - 2 - s))
            .collect();
        expect.sort();
        check(
            got == expect,
            format!("n={n}: extremal {got:?}, want {expect:?}"),
            &mut f,
        );
        seen.push(format!("{want}:{}", got.join("+")));
    }
    outcome(f, format!("max edges and classes {}", seen.join(" ")), 600)
}

fn spectral_maximum(v: &Verifier) -> Outcome {
    let mut f = Vec::new();
    let mut seen = Vec::new();
    for n in 4..=7 {
        let r = v.verify_spectral_c3(n, None);
        let nf = n as f64;
        let want = ((nf * nf - 8.0).sqrt() + nf - 4.0) / 2.0;
        let got = obs(&r, "max_rho").as_f64().unwrap();
        check(
            r.status == Status::Pass,
            format!("n={n}: status {:?}", r.status),
            &mut f,
        );
        check(
            (got - want).abs() <= RHO_TOL,
            format!("n={n}: rho {got} vs {want}"),
            &mut f,
        );
        let ext = obs(&r, "extremal").as_array().unwrap();
        check(
            ext.len() == 1 && ext[0] == format!("G_{{1,{}}}", n - 3),
            format!("n={n}: maximizers {ext:?}"),
            &mut f,
        );
        seen.push(format!("{got:.6}"));
    }
    outcome(
        f,
        format!("max rho {} unique G_{{1,n-3}}", seen.join(" ")),
        600,
    )
}

fn complete_odd_cycles(v: &Verifier) -> Outcome {
    let mut f = Vec::new();
    let mut seen = Vec::new();
    for n in 5..=8 {
        let r = v.verify_complete_odd_cycles(n);
        let unbalanced = (1u64 << (tri(n) - n + 1)) - 1;
        check(
            r.status == Status::Pass,
            format!("n={n}: status {:?}", r.status),
            &mut f,
        );
        check(
            obs(&r, "unbalanced_classes") == unbalanced,
            format!(
                "n={n}: {} classes, want {unbalanced}",
                obs(&r, "unbalanced_classes")
            ),
            &mut f,
        );
        seen.push(format!("n={n}:{unbalanced}"));
    }
    outcome(
        f,
        format!("all unbalanced classes {}", seen.join(" ")),
        1800,
    )
}

fn path_clique_odd_cycles(v: &Verifier) -> Outcome {
    let mut f = Vec::new();
    let (mut checked, mut vacuous, mut classes) = (0, 0, 0u64);
    for a in 3..=5 {
        for n in a + 2..=9 {
            let r = v.verify_path_clique(n, a);
            check(
                r.status == Status::Pass,
                format!("(n,a)=({n},{a}): status {:?}", r.status),
                &mut f,
            );
            let lo = a / 2;
            let hi = (n - a - 1) / 2;
            if lo > hi {
                vacuous += 1;
                check(
                    r.flags.iter().any(|s| s.starts_with("vacuous")),
                    format!("({n},{a}) not flagged vacuous"),
                    &mut f,
                );
            } else {
                checked += 1;
                let m = tri(n - a) + 2 * (n - a) + a - 1 + (a > 2) as usize;
                let want = (1u64 << (m - n + 1)) - 1;
                check(
                    obs(&r, "unbalanced_classes") == want,
                    format!(
                        "({n},{a}): {} classes, want {want}",
                        obs(&r, "unbalanced_classes")
                    ),
                    &mut f,
                );
                classes += want;
            }
        }
    }
    outcome(
        f,
        format!("{checked} non-vacuous (n,a) over {classes} classes, {vacuous} empty k-ranges"),
        900,
    )
}

fn dense_girth(v: &Verifier) -> Outcome {
    let mut f = Vec::new();
    let mut seen = Vec::new();
    for (n, threshold) in [(5, 6), (6, 9), (7, 13)] {
        let r = v.verify_dense_negative_girth(n, None);
        check(
            r.status == Status::Pass,
            format!("n={n}: status {:?}", r.status),
            &mut f,
        );
        check(
            r.expected["min_edges"] == threshold,
            format!("n={n}: threshold"),
            &mut f,
        );
        seen.push(format!(
            "n={n}:e>={threshold}:{}",
            obs(&r, "unbalanced_classes")
        ));
    }
    outcome(
        f,
        format!("negative girth <= 4 for {}", seen.join(" ")),
        1200,
    )
}

fn charpoly(v: &Verifier) -> Outcome {
    let mut f = Vec::new();
    let r = v.verify_charpoly(12);
    check(
        r.status == Status::Pass,
        format!("status {:?}", r.status),
        &mut f,
    );
    for row in r.observed.as_array().unwrap() {
        let n = row["n"].as_u64().unwrap();
        check(
            row["exact_match"] == true,
            format!("n={n}: coefficients differ"),
            &mut f,
        );
        check(
            row["cubic_at_n_minus_3"] == -2,
            format!("n={n}: cubic value"),
            &mut f,
        );
    }
    let mut min_slack = f64::INFINITY;
    for n in 4..=20 {
        let slack = spectral_radius(&build_c3minus_k(n).unwrap()) - (n - 3) as f64;
        min_slack = min_slack.min(slack);
        check(
            slack > C3K_MIN_SLACK,
            format!("n={n}: rho slack {slack}"),
            &mut f,
        );
    }
    outcome(
        f,
        format!("n=4..12 exact, f(n-3)=-2, min rho-(n-3) over n<=20 = {min_slack:.6}"),
        60,
    )
}

fn construction(v: &Verifier) -> Outcome {
    let mut f = Vec::new();
    let mut seen = Vec::new();
    for (n, edges) in [(40, 706), (41, 744)] {
        let r = v.verify_construction(n, 3);
        check(
            r.status == Status::Pass,
            format!("n={n}: status {:?}", r.status),
            &mut f,
        );
        check(
            obs(&r, "free") == true,
            format!("n={n}: has a negative 7-cycle"),
            &mut f,
        );
        check(
            obs(&r, "edges") == edges,
            format!("n={n}: {} edges", obs(&r, "edges")),
            &mut f,
        );
        check(
            r.flags.is_empty(),
            format!("n={n}: flagged {:?}", r.flags),
            &mut f,
        );
        seen.push(format!("n={n}:{edges}"));
    }
    let r = v.verify_spectral_construction(41, 3);
    check(
        r.status == Status::Pass && r.flags.is_empty(),
        "n=41 outside spectral k-range",
        &mut f,
    );
    outcome(
        f,
        format!(
            "C7-free with {} edges; n=41 in spectral k-range",
            seen.join(" ")
        ),
        60,
    )
}

fn falsification(v: &Verifier) -> Outcome {
    let mut f = Vec::new();
    let r = v.falsify(&FalsifyParams {
        n: 40,
        k: 3,
        budget: SEARCH_BUDGET,
        restarts: SEARCH_RESTARTS,
        seed: 1,
        from_construction: false,
        audit: true,
    });
    let best = obs(&r, "best_edges").as_u64().unwrap();
    check(
        r.status == Status::Pass,
        format!("status {:?}", r.status),
        &mut f,
    );
    check(best <= 706, format!("best {best} edges"), &mut f);
    check(obs(&r, "audit_failures") == 0, "audit failures", &mut f);
    let moves = improving_moves(&build_c3minus_k(40).unwrap(), 7).unwrap();
    check(
        moves.is_empty(),
        format!("{} improving moves from the construction", moves.len()),
        &mut f,
    );
    outcome(
        f,
        format!(
            "best {best} <= 706 over {SEARCH_BUDGET} steps / {SEARCH_RESTARTS} restarts, 0 improving moves"
        ),
        1800,
    )
}

fn bounds(v: &Verifier) -> Outcome {
    let mut f = Vec::new();
    let r = v.verify_bounds_random(1000, 7);
    check(
        r.status == Status::Pass,
        format!("status {:?}", r.status),
        &mut f,
    );
    let mins = &obs(&r, "min_slack");
    let mut seen = Vec::new();
    for name in ["hong", "stanic", "wyq"] {
        let s = mins[name].as_f64().unwrap();
        check(s >= -BOUND_TOL, format!("{name} min slack {s}"), &mut f);
        seen.push(format!("{name}={s:.3e}"));
    }
    for n in 4..=12 {
        let g = complete_signed(n, &[]).unwrap();
        let hong = ((2 * tri(n) - n + 1) as f64).sqrt();
        let gap = (hong - spectral_radius(&g)).abs();
        check(
            gap <= HONG_EQUALITY_TOL,
            format!("K_{n}: Hong gap {gap}"),
            &mut f,
        );
    }
    outcome(
        f,
        format!(
            "1000 graphs, min slack {}; equality on K_4..K_12",
            seen.join(" ")
        ),
        120,
    )
}

/// Indexed by length: whether some simple cycle of that length is negative.
/// Each cycle is walked once, from its minimum vertex, in the direction whose
/// second vertex is smaller than its last.
fn naive_negative_lengths(g: &SignedGraph) -> Vec<bool> {
    fn extend(g: &SignedGraph, path: &mut Vec<usize>, sign: Sign, found: &mut [bool]) {
        let start = path[0];
        let last = *path.last().unwrap();
        for w in g.neighbors(last).iter() {
            if w == start && path.len() >= 3 && path[1] < last {
                if (sign * g.sign(last, w).unwrap()).is_negative() {
                    found[path.len()] = true;
                }
            } else if w > start && !path.contains(&w) {
                let s = sign * g.sign(last, w).unwrap();
                path.push(w);
                extend(g, path, s, found);
                path.pop();
            }
        }
    }
    let mut found = vec![false; g.order() + 1];
    for v in 0..g.order() {
        extend(g, &mut vec![v], Sign::Positive, &mut found);
    }
    found
}

fn random_signed(rng: &mut ChaCha8Rng) -> SignedGraph {
    let n = rng.random_range(3..=8);
    let p: f64 = rng.random_range(0.2..0.9);
    let q: f64 = rng.random_range(0.1..0.9);
    let mut g = SignedGraph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                let s = if rng.random_bool(q) {
                    Sign::Negative
                } else {
                    Sign::Positive
                };
                g.add_edge(u, v, s).unwrap();
            }
        }
    }
    g
}

fn oracle_equivalence() -> Outcome {
    let mut f = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut queries, mut positives) = (0, 0);
    for i in 0..ORACLE_GRAPHS {
        let g = random_signed(&mut rng);
        let naive = naive_negative_lengths(&g);
        let set =
            VertexSet::from_vertices(g.order(), (0..g.order()).filter(|_| rng.random_bool(0.5)))
                .unwrap();
        let switched = g.switch(set).unwrap();
        for (l, &expected) in naive.iter().enumerate().skip(3) {
            queries += 1;
            let found = find_negative_cycle_of_length(&g, l).unwrap();
            if let Some(c) = &found {
                positives += 1;
                let valid = c.len() == l && c.sign(&g).unwrap() == Sign::Negative;
                check(
                    valid,
                    format!("graph {i}: invalid witness for l={l}"),
                    &mut f,
                );
            }
            check(
                found.is_some() == expected,
                format!("graph {i}: l={l} disagrees with oracle"),
                &mut f,
            );
            let after = find_negative_cycle_of_length(&switched, l)
                .unwrap()
                .is_some();
            check(
                after == expected,
                format!("graph {i}: l={l} changes under switching"),
                &mut f,
            );
        }
    }
    f.truncate(5);
    outcome(
        f,
        format!("{ORACLE_GRAPHS} graphs, {queries} (graph, l) queries, {positives} with a negative cycle"),
        300,
    )
}

fn main() {
    let jobs = std::thread::available_parallelism().map_or(1, usize::from);
    let v = Verifier::new(jobs);
    let criteria: [(&str, &dyn Fn() -> Outcome); 10] = [
        ("edge maximum without negative triangles, n=4..7", &|| {
            edge_maximum(&v)
        }),
        (
            "spectral maximum without negative triangles, n=4..7",
            &|| spectral_maximum(&v),
        ),
        (
            "unbalanced complete graphs have negative odd cycles, n=5..8",
            &|| complete_odd_cycles(&v),
        ),
        (
            "unbalanced H_(n,a) have negative odd cycles, a=3..5, n<=9",
            &|| path_clique_odd_cycles(&v),
        ),
        (
            "dense unbalanced graphs have negative girth <= 4, n=5..7",
            &|| dense_girth(&v),
        ),
        (
            "closed-form characteristic polynomial of C3- . K_(n-2)",
            &|| charpoly(&v),
        ),
        ("C3- . K_(n-2) construction at n=40,41 and k=3", &|| {
            construction(&v)
        }),
        ("falsification search at n=40, k=3", &|| falsification(&v)),
        (
            "Hong, Stanic and WYQ bounds on random connected graphs",
            &|| bounds(&v),
        ),
        (
            "restricted cycle search vs naive enumeration",
            &oracle_equivalence,
        ),
    ];
    println!("acceptance: {} workers", v.jobs());
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut out = run();
        let elapsed = start.elapsed();
        if elapsed > out.limit {
            out.pass = false;
            out.detail = format!("{} (exceeded {}s limit)", out.detail, out.limit.as_secs());
        }
        failed += !out.pass as usize;
        println!(
            "[{}] {:>2}. {name}: {} ({:.1}s)",
            if out.pass { "PASS" } else { "FAIL" },
            i + 1,
            out.detail,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
