use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use sglab_core::constructions::{build_c3minus_k, build_g_st, complete_signed, underlying_h_na};
use sglab_core::enumerate::{enumerate_underlying_graphs, SignClasses};
use sglab_core::search::{falsify_search, improving_moves, SearchConfig};
use sglab_core::spectral::{
    c3k_cubic_factor, char_poly, char_poly_c3k, eigenvalues, hong_bound, motzkin_straus_bound,
    spectral_radius, stanic_bound, wyq_bound, BoundReport,
};
use sglab_core::{
    find_negative_cycle_of_length, is_balanced, is_cl_minus_free, switching_isomorphic, SignedGraph,
};

use super::report::{Status, TheoremReport, Witness};
use super::{Claim, FalsifyParams, Verifier};

/// Failing classes kept as witnesses per sweep.
const MAX_FAILURES: usize = 16;
/// Spectral radii this close to the maximum count as attaining it.
const RHO_TIE: f64 = 1e-9;
/// Tolerance for the closed-form maximum spectral radius.
const RHO_EXACT: f64 = 1e-8;

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn max_edges_c3_free(n: usize) -> usize {
    n * (n - 1) / 2 - (n - 2)
}

fn max_rho_c3_free(n: usize) -> f64 {
    let n = n as f64;
    (((n * n) - 8.0).sqrt() + n - 4.0) / 2.0
}

fn c3k_edges(n: usize) -> usize {
    n * (n - 1) / 2 - 2 * (n - 3)
}

fn gst_name(s: usize, t: usize) -> String {
    format!("G_{{{s},{t}}}")
}

/// `(s, t)` with `s <= t`, `s + t = n - 2` such that `g` is switching
/// isomorphic to `G_{s,t}`.
fn match_gst(g: &SignedGraph) -> Option<(usize, usize)> {
    let n = g.order();
    (1..=(n - 2) / 2)
        .map(|s| (s, n - 2 - s))
        .find(|&(s, t)| switching_isomorphic(g, &build_g_st(s, t).unwrap()))
}

/// Groups graphs into switching-isomorphism classes, keeping first members.
fn iso_classes(graphs: impl IntoIterator<Item = SignedGraph>) -> Vec<SignedGraph> {
    let mut reps: Vec<SignedGraph> = Vec::new();
    for g in graphs {
        if !reps.iter().any(|r| switching_isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    reps
}

fn classes_of(graphs: &[SignedGraph]) -> Vec<SignClasses> {
    graphs
        .iter()
        .map(|g| SignClasses::new(g).expect("small graphs have few free edges"))
        .collect()
}

/// Connected underlying graphs of order `n`, from the built-in generator
/// (`4 <= n <= 7`) or from a supplied list.
fn connected_population(
    n: usize,
    supplied: Option<&[SignedGraph]>,
    report: &mut TheoremReport,
) -> Option<Vec<SignedGraph>> {
    if n < 4 {
        return None;
    }
    match supplied {
        Some(gs) => {
            let kept: Vec<SignedGraph> = gs
                .iter()
                .filter(|g| g.order() == n && g.is_connected())
                .map(SignedGraph::underlying)
                .collect();
            report.flags.push(format!(
                "population: {} connected order-{n} graphs from {} supplied",
                kept.len(),
                gs.len()
            ));
            Some(kept)
        }
        None if n <= 7 => Some(enumerate_underlying_graphs(n, true).unwrap()),
        None => None,
    }
}

#[derive(Default)]
struct TriangleTask {
    classes: u64,
    population: u64,
    max_edges: Option<usize>,
    edge_maximizers: Vec<(usize, u64)>,
    max_rho: Option<f64>,
    rho_maximizers: Vec<(usize, u64, f64)>,
}

impl TriangleTask {
    fn offer_edges(&mut self, e: usize, at: (usize, u64)) {
        match self.max_edges {
            Some(m) if e < m => {}
            Some(m) if e == m => self.edge_maximizers.push(at),
            _ => {
                self.max_edges = Some(e);
                self.edge_maximizers = vec![at];
            }
        }
    }

    fn offer_rho(&mut self, rho: f64, at: (usize, u64)) {
        if self.max_rho.is_none_or(|m| rho > m) {
            self.max_rho = Some(rho);
            self.rho_maximizers.retain(|&(_, _, r)| r >= rho - RHO_TIE);
        }
        if rho >= self.max_rho.unwrap() - RHO_TIE {
            self.rho_maximizers.push((at.0, at.1, rho));
        }
    }

    fn merge(mut self, other: TriangleTask) -> TriangleTask {
        self.classes += other.classes;
        self.population += other.population;
        if let Some(m) = other.max_edges {
            for at in other.edge_maximizers {
                self.offer_edges(m, at);
            }
        }
        for (gi, p, rho) in other.rho_maximizers {
            self.offer_rho(rho, (gi, p));
        }
        self
    }
}

#[derive(Default)]
struct PropertyTask {
    classes: u64,
    balanced: u64,
    failures: Vec<(usize, u64, String)>,
    failure_count: u64,
}

impl PropertyTask {
    fn merge(mut self, other: PropertyTask) -> PropertyTask {
        self.classes += other.classes;
        self.balanced += other.balanced;
        self.failure_count += other.failure_count;
        let room = MAX_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self
    }
}

impl Verifier {
    fn triangle_sweep(&self, classes: &[SignClasses], with_rho: bool) -> TriangleTask {
        self.sweep(classes, |gi, c, range| {
            let mut t = TriangleTask::default();
            let edges = c.underlying().size();
            for pattern in range {
                t.classes += 1;
                let g = c.representative(pattern);
                if is_balanced(&g) || !is_cl_minus_free(&g, 3).unwrap() {
                    continue;
                }
                t.population += 1;
                t.offer_edges(edges, (gi, pattern));
                if with_rho {
                    t.offer_rho(spectral_radius(&g), (gi, pattern));
                }
            }
            t
        })
        .into_iter()
        .fold(TriangleTask::default(), TriangleTask::merge)
    }

    /// Every unbalanced class is passed to `check`, which describes a
    /// failure or returns `None`.
    fn property_sweep<F>(&self, classes: &[SignClasses], check: F) -> PropertyTask
    where
        F: Fn(&SignedGraph) -> Option<String> + Sync,
    {
        self.sweep(classes, |gi, c, range| {
            let mut t = PropertyTask::default();
            for pattern in range {
                t.classes += 1;
                let g = c.representative(pattern);
                if is_balanced(&g) {
                    t.balanced += 1;
                    continue;
                }
                if let Some(why) = check(&g) {
                    t.failure_count += 1;
                    if t.failures.len() < MAX_FAILURES {
                        t.failures.push((gi, pattern, why));
                    }
                }
            }
            t
        })
        .into_iter()
        .fold(PropertyTask::default(), PropertyTask::merge)
    }

    fn finish_property(
        &self,
        report: &mut TheoremReport,
        classes: &[SignClasses],
        result: PropertyTask,
        start: Instant,
    ) {
        report.observed = json!({
            "unbalanced_classes": result.classes - result.balanced,
            "balanced_skipped": result.balanced,
            "failures": result.failure_count,
        });
        for (gi, pattern, why) in &result.failures {
            report.witnesses.push(Witness::graph(
                why.clone(),
                &classes[*gi].representative(*pattern),
            ));
        }
        if result.failure_count > 0 {
            report.status = Status::Fail;
        }
        report.counters.classes = result.classes;
        report.counters.graphs = classes.len() as u64;
        report.counters.seconds = self.seconds(start);
    }

    /// Maximum size of a connected unbalanced graph without a negative
    /// triangle, and its extremal classes.
    pub fn verify_turan_c3(&self, n: usize, supplied: Option<&[SignedGraph]>) -> TheoremReport {
        let start = Instant::now();
        let mut report = TheoremReport::new(Claim::TuranTriangle.id(), params(&[("n", json!(n))]));
        let Some(graphs) = connected_population(n, supplied, &mut report) else {
            return report.infeasible("exhaustive range is 4 <= n <= 7 without --graphs");
        };
        let expected_classes: Vec<(usize, usize)> =
            (1..=(n - 2) / 2).map(|s| (s, n - 2 - s)).collect();
        report.expected = json!({
            "max_edges": max_edges_c3_free(n),
            "extremal": expected_classes.iter().map(|&(s, t)| gst_name(s, t)).collect::<Vec<_>>(),
        });
        if n == 4 {
            report.flags.push(
                "n = 4: K_{n-2} is a single edge and G_{1,1} is the unbalanced 4-cycle".into(),
            );
        }
        let classes = classes_of(&graphs);
        let result = self.triangle_sweep(&classes, false);
        let maximizers = result
            .edge_maximizers
            .iter()
            .map(|&(gi, p)| classes[gi].representative(p));
        let reps = iso_classes(maximizers);
        let matched: Vec<Option<(usize, usize)>> = reps.iter().map(match_gst).collect();
        let names: Vec<String> = matched
            .iter()
            .map(|m| m.map_or_else(|| "unmatched".to_string(), |(s, t)| gst_name(s, t)))
            .collect();
        let mut found: Vec<(usize, usize)> = matched.iter().flatten().copied().collect();
        found.sort_unstable();
        found.dedup();
        report.observed = json!({
            "max_edges": result.max_edges,
            "extremal": names,
            "population": result.population,
            "maximizing_sign_classes": result.edge_maximizers.len(),
        });
        for (g, name) in reps.iter().zip(&names) {
            report
                .witnesses
                .push(Witness::graph(format!("extremal class {name}"), g));
        }
        let ok = result.max_edges == Some(max_edges_c3_free(n))
            && matched.iter().all(Option::is_some)
            && found == expected_classes;
        if !ok {
            report.status = Status::Fail;
            for &(s, t) in expected_classes.iter().filter(|st| !found.contains(st)) {
                report.witnesses.push(Witness::graph(
                    format!("expected extremal class {} not attained", gst_name(s, t)),
                    &build_g_st(s, t).unwrap(),
                ));
            }
        }
        report.counters.classes = result.classes;
        report.counters.graphs = graphs.len() as u64;
        report.counters.seconds = self.seconds(start);
        report
    }

    /// Maximum spectral radius over the same population.
    pub fn verify_spectral_c3(&self, n: usize, supplied: Option<&[SignedGraph]>) -> TheoremReport {
        let start = Instant::now();
        let mut report =
            TheoremReport::new(Claim::SpectralTriangle.id(), params(&[("n", json!(n))]));
        let Some(graphs) = connected_population(n, supplied, &mut report) else {
            return report.infeasible("exhaustive range is 4 <= n <= 7 without --graphs");
        };
        let target = max_rho_c3_free(n);
        report.expected = json!({
            "max_rho": target,
            "tolerance": RHO_EXACT,
            "extremal": [gst_name(1, n - 3)],
        });
        let classes = classes_of(&graphs);
        let result = self.triangle_sweep(&classes, true);
        let max_rho = result.max_rho.unwrap_or(f64::NAN);
        let maximizers = result
            .rho_maximizers
            .iter()
            .filter(|&&(_, _, r)| r >= max_rho - RHO_TIE)
            .map(|&(gi, p, _)| classes[gi].representative(p));
        let reps = iso_classes(maximizers);
        let names: Vec<String> = reps
            .iter()
            .map(|g| match_gst(g).map_or_else(|| "unmatched".to_string(), |(s, t)| gst_name(s, t)))
            .collect();
        report.observed = json!({
            "max_rho": max_rho,
            "error": (max_rho - target).abs(),
            "extremal": names,
            "population": result.population,
        });
        for (g, name) in reps.iter().zip(&names) {
            report
                .witnesses
                .push(Witness::graph(format!("spectral maximizer {name}"), g));
        }
        let unique =
            reps.len() == 1 && switching_isomorphic(&reps[0], &build_g_st(1, n - 3).unwrap());
        if !((max_rho - target).abs() <= RHO_EXACT && unique) {
            report.status = Status::Fail;
            if reps.is_empty() {
                report.witnesses.push(Witness::graph(
                    "expected maximizer",
                    &build_g_st(1, n - 3).unwrap(),
                ));
            }
        }
        report.counters.classes = result.classes;
        report.counters.graphs = graphs.len() as u64;
        report.counters.seconds = self.seconds(start);
        report
    }

    /// Every unbalanced complete graph `K_n` has negative cycles of every
    /// odd length `2k + 1` with `1 <= k <= (n - 3) / 2`.
    pub fn verify_complete_odd_cycles(&self, n: usize) -> TheoremReport {
        let start = Instant::now();
        let mut report =
            TheoremReport::new(Claim::CompleteOddCycles.id(), params(&[("n", json!(n))]));
        if !(5..=8).contains(&n) {
            return report.infeasible("exhaustive range is 5 <= n <= 8");
        }
        let lengths: Vec<usize> = (1..=(n - 3) / 2).map(|k| 2 * k + 1).collect();
        report.expected = json!({ "lengths": lengths, "failures": 0 });
        let classes = classes_of(&[complete_signed(n, &[]).unwrap()]);
        let result = self.property_sweep(&classes, |g| odd_cycle_failure(g, &lengths));
        self.finish_property(&mut report, &classes, result, start);
        let c = &classes[0];
        for pattern in [1, c.count() - 1] {
            let g = c.representative(pattern);
            for &l in &lengths {
                if let Some(cycle) = find_negative_cycle_of_length(&g, l).unwrap() {
                    report.witnesses.push(Witness::graph_with_cycle(
                        format!("sample: class {pattern}, negative {l}-cycle"),
                        &g,
                        &cycle,
                    ));
                }
            }
        }
        report
    }

    /// Every unbalanced signature of `H_{n,a}` has negative `(2k+1)`-cycles
    /// for `(a - 1) / 2 <= k <= (n - a - 1) / 2`.
    pub fn verify_path_clique(&self, n: usize, a: usize) -> TheoremReport {
        let start = Instant::now();
        let mut report = TheoremReport::new(
            Claim::PathCliqueOddCycles.id(),
            params(&[("n", json!(n)), ("a", json!(a))]),
        );
        if a < 3 || n < a + 2 || n > 9 {
            return report.infeasible("range is a >= 3, a + 2 <= n <= 9");
        }
        let (lo, hi) = (a / 2, (n - a - 1) / 2);
        let lengths: Vec<usize> = (lo..=hi).map(|k| 2 * k + 1).collect();
        report.expected = json!({ "k_range": [lo, hi], "lengths": lengths, "failures": 0 });
        if lengths.is_empty() {
            report.observed = json!({ "unbalanced_classes": 0, "failures": 0 });
            report
                .flags
                .push(format!("vacuous: empty k-range {lo} <= k <= {hi}"));
            report.counters.seconds = self.seconds(start);
            return report;
        }
        let classes = classes_of(&[underlying_h_na(n, a).unwrap()]);
        let result = self.property_sweep(&classes, |g| odd_cycle_failure(g, &lengths));
        self.finish_property(&mut report, &classes, result, start);
        report
    }

    /// Unbalanced graphs with at least `n(n-1)/2 - 2(n-3)` edges have a
    /// negative cycle of length 3 or 4.
    pub fn verify_dense_negative_girth(
        &self,
        n: usize,
        supplied: Option<&[SignedGraph]>,
    ) -> TheoremReport {
        let start = Instant::now();
        let mut report =
            TheoremReport::new(Claim::DenseNegativeGirth.id(), params(&[("n", json!(n))]));
        if n < 5 || (supplied.is_none() && n > 7) {
            return report.infeasible("exhaustive range is 5 <= n <= 7 without --graphs");
        }
        let threshold = c3k_edges(n);
        let graphs: Vec<SignedGraph> = match supplied {
            Some(gs) => gs
                .iter()
                .filter(|g| g.order() == n)
                .map(SignedGraph::underlying)
                .collect(),
            None => enumerate_underlying_graphs(n, false).unwrap(),
        };
        let graphs: Vec<SignedGraph> = graphs
            .into_iter()
            .filter(|g| g.size() >= threshold)
            .collect();
        report.expected = json!({ "min_edges": threshold, "max_negative_girth": 4, "failures": 0 });
        let classes = classes_of(&graphs);
        let result = self.property_sweep(&classes, |g| {
            let short = [3, 4]
                .into_iter()
                .any(|l| find_negative_cycle_of_length(g, l).unwrap().is_some());
            (!short).then(|| "no negative cycle of length 3 or 4".to_string())
        });
        self.finish_property(&mut report, &classes, result, start);
        report
    }

    /// `C3^- . K_{n-2}` is unbalanced, has no negative `(2k+1)`-cycle, has
    /// `n(n-1)/2 - 2(n-3)` edges and spectral radius above `n - 3`.
    pub fn verify_construction(&self, n: usize, k: usize) -> TheoremReport {
        let in_range = k >= 3 && 10 * (k + 1) <= n;
        self.construction_report(
            Claim::EdgeConstruction,
            n,
            k,
            in_range,
            "3 <= k <= n/10 - 1",
        )
    }

    /// The same certificate, with the hypothesis range of the spectral
    /// statement.
    pub fn verify_spectral_construction(&self, n: usize, k: usize) -> TheoremReport {
        let in_range = k >= 3 && 10 * k + 11 <= n;
        self.construction_report(
            Claim::SpectralConstruction,
            n,
            k,
            in_range,
            "3 <= k <= (n-11)/10",
        )
    }

    fn construction_report(
        &self,
        claim: Claim,
        n: usize,
        k: usize,
        in_range: bool,
        range: &str,
    ) -> TheoremReport {
        let start = Instant::now();
        let mut report =
            TheoremReport::new(claim.id(), params(&[("n", json!(n)), ("k", json!(k))]));
        if n < 4 || k == 0 || 2 * k + 1 > n {
            return report.infeasible("needs n >= 4 and 3 <= 2k + 1 <= n");
        }
        let l = 2 * k + 1;
        let g = build_c3minus_k(n).unwrap();
        let cycle = find_negative_cycle_of_length(&g, l).unwrap();
        let rho = spectral_radius(&g);
        let unbalanced = !is_balanced(&g);
        report.expected = json!({
            "edges": c3k_edges(n),
            "unbalanced": true,
            "free": true,
            "rho_exceeds": n - 3,
        });
        report.observed = json!({
            "edges": g.size(),
            "unbalanced": unbalanced,
            "free": cycle.is_none(),
            "rho": rho,
            "rho_slack": rho - (n - 3) as f64,
        });
        if !in_range {
            report
                .flags
                .push(format!("outside stated hypothesis {range}"));
        }
        let ok = unbalanced && cycle.is_none() && g.size() == c3k_edges(n) && rho > (n - 3) as f64;
        if !ok {
            report.status = Status::Fail;
            report.witnesses.push(match &cycle {
                Some(c) => Witness::graph_with_cycle(format!("negative {l}-cycle"), &g, c),
                None => Witness::graph("construction", &g),
            });
        }
        report.counters.graphs = 1;
        report.counters.classes = 1;
        report.counters.seconds = self.seconds(start);
        report
    }

    /// Exact characteristic polynomials of `C3^- . K_{n-2}` for
    /// `n = 4..=n_max` against the closed form.
    pub fn verify_charpoly(&self, n_max: usize) -> TheoremReport {
        let start = Instant::now();
        let mut report =
            TheoremReport::new(Claim::CharPoly.id(), params(&[("nmax", json!(n_max))]));
        if !(4..=12).contains(&n_max) {
            return report.infeasible("range is 4 <= nmax <= 12");
        }
        report.expected = json!({
            "exact_match": true,
            "cubic_at_n_minus_3": -2,
            "rho_exceeds_n_minus_3": true,
        });
        let mut rows = Vec::new();
        for n in 4..=n_max {
            let g = build_c3minus_k(n).unwrap();
            let computed = char_poly(&g).unwrap();
            let closed = char_poly_c3k(n).unwrap();
            let cubic = c3k_cubic_factor(n).eval(n as i128 - 3).unwrap();
            let rho = spectral_radius(&g);
            let ok = computed == closed && cubic == -2 && rho > (n - 3) as f64;
            rows.push(json!({
                "n": n,
                "exact_match": computed == closed,
                "coefficients": computed.coeffs.iter().map(i128::to_string).collect::<Vec<_>>(),
                "cubic_at_n_minus_3": cubic,
                "rho": rho,
                "rho_slack": rho - (n - 3) as f64,
            }));
            if !ok {
                report.status = Status::Fail;
                report.witnesses.push(Witness::graph(
                    format!("n = {n}: computed {computed}, closed form {closed}"),
                    &g,
                ));
            }
        }
        report.observed = Value::Array(rows);
        report.counters.graphs = (n_max - 3) as u64;
        report.counters.classes = (n_max - 3) as u64;
        report.counters.seconds = self.seconds(start);
        report
    }

    /// Hong, Stanic and WYQ (plus the unsigned Motzkin-Straus bound) on
    /// `trials` random connected signed graphs with `4 <= n <= 12`.
    pub fn verify_bounds_random(&self, trials: usize, seed: u64) -> TheoremReport {
        let start = Instant::now();
        let mut report = TheoremReport::new(
            Claim::Bounds.id(),
            params(&[("trials", json!(trials)), ("seed", json!(seed))]),
        );
        if trials == 0 {
            return report.infeasible("needs trials >= 1");
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let samples: Vec<SignedGraph> = (0..trials)
            .map(|_| {
                let n = rng.random_range(4..=12);
                super::random_connected_signed(&mut rng, n)
            })
            .collect();
        let evaluated: Vec<Sample> = self
            .pool
            .install(|| samples.par_iter().map(Sample::of).collect());

        let kinds = ["hong", "stanic", "wyq", "motzkin-straus"];
        let mut min_slack = [f64::INFINITY; 4];
        let mut balanced = 0u64;
        let (mut stanic_balanced, mut hong_l1_balanced) = (f64::INFINITY, f64::INFINITY);
        for (i, s) in evaluated.iter().enumerate() {
            for (j, b) in s.bounds.iter().enumerate() {
                min_slack[j] = min_slack[j].min(b.slack);
                if !b.satisfied {
                    report.status = Status::Fail;
                    if report.witnesses.len() < MAX_FAILURES {
                        report.witnesses.push(Witness::graph(
                            format!("trial {i}: {} slack {:e}", kinds[j], b.slack),
                            &samples[i],
                        ));
                    }
                }
            }
            if s.balanced {
                balanced += 1;
                stanic_balanced = stanic_balanced.min(s.bounds[1].slack);
                hong_l1_balanced = hong_l1_balanced.min(s.hong_on_lambda1);
            }
        }

        let mut equality = Vec::new();
        for n in 4..=12 {
            let b = hong_bound(&complete_signed(n, &[]).unwrap()).unwrap();
            equality.push(json!({ "n": n, "slack": b.slack }));
            if b.slack.abs() <= 1e-9 {
                report.witnesses.push(Witness {
                    label: format!("Hong equality on K_{n} (slack {:e})", b.slack),
                    graph: None,
                    cycle: None,
                });
            }
        }
        let balanced_dominance = balanced == 0 || stanic_balanced >= hong_l1_balanced - 1e-12;
        let min_slack_json: Map<String, Value> = kinds
            .iter()
            .zip(min_slack)
            .map(|(k, s)| (k.to_string(), json!(s)))
            .collect();
        report.expected = json!({ "min_slack_at_least": -sglab_core::spectral::BOUND_SLACK });
        report.observed = json!({
            "min_slack": min_slack_json,
            "balanced_samples": balanced,
            "balanced_min_stanic_slack": (balanced > 0).then_some(stanic_balanced),
            "balanced_min_hong_on_lambda1_slack": (balanced > 0).then_some(hong_l1_balanced),
            "hong_equality_complete": equality,
        });
        if !balanced_dominance {
            report.status = Status::Fail;
            report.witnesses.push(Witness {
                label: "Stanic slack below Hong-on-lambda1 slack".into(),
                graph: None,
                cycle: None,
            });
        }
        report.counters.graphs = trials as u64;
        report.counters.classes = trials as u64;
        report.counters.seconds = self.seconds(start);
        report
    }

    /// Budgeted hill climbing for unbalanced `C_{2k+1}^-`-free graphs with
    /// more than `n(n-1)/2 - 2(n-3)` edges.
    pub fn falsify(&self, p: &FalsifyParams) -> TheoremReport {
        let start = Instant::now();
        let (n, k) = (p.n, p.k);
        let mut report = TheoremReport::new(
            Claim::Falsify.id(),
            params(&[
                ("n", json!(n)),
                ("k", json!(k)),
                ("budget", json!(p.budget)),
                ("restarts", json!(p.restarts)),
                ("seed", json!(p.seed)),
                ("from_construction", json!(p.from_construction)),
                ("audit", json!(p.audit)),
            ]),
        );
        if n < 4 || k == 0 || 2 * k + 1 > n {
            return report.infeasible("needs n >= 4 and 3 <= 2k + 1 <= n");
        }
        let l = 2 * k + 1;
        let construction = build_c3minus_k(n).unwrap();
        let edge_bound = c3k_edges(n);
        let rho_bound = spectral_radius(&construction);
        let edge_range = k >= 3 && 10 * (k + 1) <= n;
        let rho_range = k >= 3 && 10 * k + 11 <= n;
        report.expected = json!({ "max_edges": edge_bound, "max_rho_at_max_edges": rho_bound });

        let mut cfg = SearchConfig::new(n, l, p.budget, p.restarts, p.seed);
        cfg.audit = p.audit;
        let improving = if p.from_construction {
            cfg.start = Some(construction.clone());
            Some(improving_moves(&construction, l).unwrap())
        } else {
            None
        };
        let out = match falsify_search(&cfg) {
            Ok(out) => out,
            Err(e) => return report.infeasible(e.to_string()),
        };
        let at_bound = out.best_edges == edge_bound;
        let is_construction = at_bound && switching_isomorphic(&out.best, &construction);
        report.observed = json!({
            "best_edges": out.best_edges,
            "best_rho": out.best_rho,
            "best_is_construction": is_construction,
            "restart_best": out.restart_best,
            "steps": out.steps,
            "accepted": out.accepted,
            "audit_failures": out.audit_failures,
            "improving_moves_from_construction": improving.as_ref().map(Vec::len),
        });
        if !edge_range {
            report
                .flags
                .push("outside stated hypothesis 3 <= k <= n/10 - 1".into());
        }
        report
            .flags
            .push("property-based search: a pass is not a proof".into());

        let mut contradictions = Vec::new();
        if out.best_edges > edge_bound {
            contradictions.push(format!("{} edges exceed {edge_bound}", out.best_edges));
        } else if at_bound && !is_construction {
            contradictions.push("extremal size attained by another class".to_string());
        } else if at_bound && rho_range && out.best_rho > rho_bound + RHO_EXACT {
            contradictions.push("spectral radius exceeds the construction's".to_string());
        }
        if improving.as_ref().is_some_and(|m| !m.is_empty()) {
            contradictions.push("improving move from the construction".to_string());
        }
        if out.audit_failures > 0 {
            report.status = Status::Fail;
            report
                .witnesses
                .push(Witness::graph("state failed audit", &out.best));
        }
        for why in contradictions {
            if edge_range {
                report.status = Status::Fail;
                report.witnesses.push(Witness::graph(why, &out.best));
            } else {
                report
                    .flags
                    .push(format!("outside stated hypothesis: {why}"));
            }
        }
        if report.status == Status::Pass {
            report
                .witnesses
                .push(Witness::graph("best state", &out.best));
        }
        report.counters.classes = out.steps;
        report.counters.graphs = out.restart_best.len() as u64;
        report.counters.seconds = self.seconds(start);
        report
    }
}

fn odd_cycle_failure(g: &SignedGraph, lengths: &[usize]) -> Option<String> {
    lengths
        .iter()
        .find(|&&l| find_negative_cycle_of_length(g, l).unwrap().is_none())
        .map(|l| format!("no negative {l}-cycle"))
}

struct Sample {
    bounds: [BoundReport; 4],
    hong_on_lambda1: f64,
    balanced: bool,
}

impl Sample {
    fn of(g: &SignedGraph) -> Sample {
        let hong = hong_bound(g).unwrap();
        let lambda1 = eigenvalues(g).lambda_max();
        Sample {
            bounds: [
                hong,
                stanic_bound(g).unwrap(),
                wyq_bound(g).unwrap(),
                motzkin_straus_bound(&g.underlying()).unwrap(),
            ],
            hong_on_lambda1: hong.value - lambda1,
            balanced: is_balanced(g),
        }
    }
}
