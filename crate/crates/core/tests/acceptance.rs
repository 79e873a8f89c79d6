//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! fails. Expected values come from closed forms or from the brute-force
//! references in `common`, never from the library's own solvers.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use lateops::adversaries::BagAdversary;
use lateops::algorithms::{Algorithm1, Algorithm2, GreedyIs, OnlineAlgorithm, VcMatching};
use lateops::harness::generators::{gen_gnp, gen_weights, order_shuffle, sequence_of};
use lateops::harness::sweep::{instances, par_map, sweep_small_graphs, Instance, SweepConfig};
use lateops::harness::{evaluate, run_events, run_experiment, CompetitiveRatio, ExperimentConfig, Feed, Source};
use lateops::ledger::{Action, DecisionModel, Item, ItemKind, SolutionLedger};
use lateops::oracles::{self, OracleCaps};
use lateops::{ArrivalKind, GraphSnapshot, Problem, Value};

const SEED: u64 = 20_240_601;

struct Line {
    id: &'static str,
    pass: bool,
    detail: String,
}

fn line(id: &'static str, pass: bool, detail: impl Into<String>) -> Line {
    Line { id, pass, detail: detail.into() }
}

fn v(x: i64) -> Value {
    Value::from_integer(x)
}

fn sweep_config(problem: Problem, algorithm: &str) -> SweepConfig {
    let mut c = SweepConfig::new(problem, algorithm, 7);
    c.exhaustive_max = 5;
    c.samples_per_n = 10_000;
    c.orders_per_graph = 10;
    c.seed = SEED;
    c
}

/// Per-instance outcome of a sweep run with step checks.
#[derive(Default)]
struct Outcome {
    n: usize,
    alg: i64,
    opt: i64,
    steps_checked: usize,
    step_failure: Option<String>,
    lemmas: Option<[bool; 4]>,
}

#[derive(Default)]
struct Tally {
    instances: usize,
    by_n: [usize; 8],
    steps_checked: usize,
    step_failures: Vec<String>,
    /// Worst instance as (opt, alg) under the problem's orientation.
    worst: Option<(i64, i64)>,
    lemma_checked: usize,
    lemma_failures: [usize; 4],
}

fn tally(outcomes: Vec<Outcome>, maximize: bool, bound_ok: impl Fn(i64, i64) -> bool, bound_failures: &mut usize) -> Tally {
    let mut t = Tally::default();
    for o in outcomes {
        t.instances += 1;
        t.by_n[o.n] += 1;
        t.steps_checked += o.steps_checked;
        if let Some(f) = o.step_failure {
            t.step_failures.push(f);
        }
        if !bound_ok(o.opt, o.alg) {
            *bound_failures += 1;
        }
        let problem = if maximize { Problem::IndependentSet } else { Problem::VertexCover };
        let ratio = CompetitiveRatio::new(problem, v(o.alg), v(o.opt));
        if t.worst.is_none_or(|(opt, alg)| ratio > CompetitiveRatio::new(problem, v(alg), v(opt))) {
            t.worst = Some((o.opt, o.alg));
        }
        if let Some(l) = o.lemmas {
            t.lemma_checked += 1;
            for (i, ok) in l.iter().enumerate() {
                if !ok {
                    t.lemma_failures[i] += 1;
                }
            }
        }
    }
    t
}

fn counts(t: &Tally) -> String {
    (1..=7).filter(|&n| t.by_n[n] > 0).map(|n| format!("n={n}:{}", t.by_n[n])).collect::<Vec<_>>().join(" ")
}

fn library_max_ratio(problem: Problem, algorithm: &str) -> CompetitiveRatio {
    sweep_small_graphs(&sweep_config(problem, algorithm)).expect("library sweep").max_ratio
}

fn ratio_of(maximize: bool, worst: Option<(i64, i64)>) -> CompetitiveRatio {
    let (opt, alg) = worst.unwrap_or((1, 1));
    let problem = if maximize { Problem::IndependentSet } else { Problem::VertexCover };
    CompetitiveRatio::new(problem, v(alg), v(opt))
}

fn alg1_instance(inst: &Instance) -> Outcome {
    let mut alg = Algorithm1::new();
    let mut steps = 0;
    let run = run_events(&mut alg, ArrivalKind::Vertex, Feed::Fixed(&inst.sequence.events), None, false, |a, g, l| {
        let s: Vec<usize> = a.state().s().into_iter().collect();
        if s != l.accepted_ids().collect::<Vec<_>>() {
            return Err("A ∪ B differs from the accepted set".into());
        }
        if !a.state().a.is_disjoint(&a.state().b) {
            return Err("A and B overlap".into());
        }
        steps += 1;
        if brute_admissible_exists(g, &s, &a.state().pending(g.n())) {
            return Err(format!("admissible set remains after step {}", g.n() - 1));
        }
        Ok(())
    });
    let mut out = Outcome { n: inst.n, steps_checked: steps, ..Outcome::default() };
    match run {
        Err(e) => out.step_failure = Some(format!("instance {}: {e}", inst.index)),
        Ok(run) => {
            let accepted: Vec<usize> = run.ledger.accepted_ids().collect();
            let masks = adjacency_masks(&run.graph);
            if !is_independent_mask(&masks, accepted.iter().map(|&x| 1u64 << x).sum()) {
                out.step_failure = Some(format!("instance {}: accepted set not independent", inst.index));
            }
            let o = brute_mis(&run.graph);
            out.alg = accepted.len() as i64;
            out.opt = o.len() as i64;
            if inst.n <= 6 {
                let r = alg.state().lemma_report(run.graph.n(), &o);
                out.lemmas = Some([r.lemma1, r.lemma2, r.lemma3, r.lemma4]);
            }
        }
    }
    out
}

fn alg2_instance(inst: &Instance) -> Outcome {
    let mut alg = Algorithm2::new();
    let mut steps = 0;
    let run = run_events(&mut alg, ArrivalKind::Edge, Feed::Fixed(&inst.sequence.events), None, false, |_, g, l| {
        steps += 1;
        let m: Vec<usize> = l.accepted_ids().collect();
        if !oracles::is_matching(g, &m) {
            return Err("accepted edges are not a matching".into());
        }
        if brute_short_augmenting_path(g, &m) {
            return Err(format!("augmenting path of length <= 3 after edge {}", g.m() - 1));
        }
        Ok(())
    });
    let mut out = Outcome { n: inst.n, steps_checked: steps, ..Outcome::default() };
    match run {
        Err(e) => out.step_failure = Some(format!("instance {}: {e}", inst.index)),
        Ok(run) => {
            out.alg = run.ledger.accepted_count() as i64;
            out.opt = brute_max_matching(&run.graph) as i64;
        }
    }
    out
}

fn vc_instance(inst: &Instance) -> Outcome {
    let mut alg = VcMatching::new(DecisionModel::LateAccept).unwrap();
    let run = run_events(&mut alg, ArrivalKind::Vertex, Feed::Fixed(&inst.sequence.events), None, false, |_, g, l| {
        let c: Vec<usize> = l.accepted_ids().collect();
        if g.edges().iter().any(|e| !c.contains(&e.u) && !c.contains(&e.v)) {
            return Err(format!("uncovered edge after vertex {}", g.n() - 1));
        }
        Ok(())
    });
    let mut out = Outcome { n: inst.n, steps_checked: inst.sequence.len(), ..Outcome::default() };
    match run {
        Err(e) => out.step_failure = Some(format!("instance {}: {e}", inst.index)),
        Ok(run) => {
            out.alg = run.ledger.accepted_count() as i64;
            out.opt = brute_min_vertex_cover(&run.graph) as i64;
        }
    }
    out
}

fn first_failures(f: &[String]) -> String {
    if f.is_empty() {
        String::new()
    } else {
        format!("; first: {}", f[0])
    }
}

/// Criterion 1 (upper bounds) with the per-step checks of criterion 5 and
/// the termination inequalities of criterion 4 on the same runs.
fn upper_bounds(lines: &mut Vec<Line>) {
    let started = Instant::now();
    let all = instances(&sweep_config(Problem::IndependentSet, "is.alg1")).unwrap();
    let mut bad = 0;
    let t = tally(par_map(&all, alg1_instance), true, |opt, alg| 4 * opt * opt <= 27 * alg * alg, &mut bad);
    let worst = ratio_of(true, t.worst);
    let lib = library_max_ratio(Problem::IndependentSet, "is.alg1");
    let secs = started.elapsed().as_secs_f64();
    lines.push(line(
        "1a",
        bad == 0 && t.step_failures.is_empty() && lib == worst && secs < 600.0,
        format!(
            "is.alg1 (LAR) over {} instances [{}]: 4*OPT^2 <= 27*ALG^2 violated {bad} times, max OPT/ALG = {worst} (library sweep: {lib}), {secs:.1}s (limit 600s)",
            t.instances,
            counts(&t)
        ),
    ));
    let lemma_ok = t.lemma_failures.iter().all(|&k| k == 0);
    lines.push(line(
        "4",
        lemma_ok && t.lemma_checked > 0,
        format!(
            "is.alg1 termination inequalities on {} instances with n <= 6: violations L1={} L2={} L3={} L4={} (exact squared comparisons)",
            t.lemma_checked, t.lemma_failures[0], t.lemma_failures[1], t.lemma_failures[2], t.lemma_failures[3]
        ),
    ));
    lines.push(line(
        "5c",
        t.step_failures.is_empty(),
        format!(
            "is.alg1: no admissible set after each of {} steps (brute-force subset search, n <= 7), {} failures{}",
            t.steps_checked,
            t.step_failures.len(),
            first_failures(&t.step_failures)
        ),
    ));

    let all = instances(&sweep_config(Problem::Matching, "match.alg2")).unwrap();
    let mut bad = 0;
    let t = tally(par_map(&all, alg2_instance), true, |opt, alg| 2 * opt <= 3 * alg, &mut bad);
    let worst = ratio_of(true, t.worst);
    let lib = library_max_ratio(Problem::Matching, "match.alg2");
    lines.push(line(
        "1b",
        bad == 0 && t.step_failures.is_empty() && lib == worst,
        format!(
            "match.alg2 (LAR) over {} edge sequences [{}]: 2*OPT <= 3*ALG violated {bad} times, max OPT/ALG = {worst} (library sweep: {lib})",
            t.instances,
            counts(&t)
        ),
    ));
    lines.push(line(
        "5b",
        t.step_failures.is_empty(),
        format!(
            "match.alg2: no augmenting path of length <= 3 after each of {} steps, {} failures{}",
            t.steps_checked,
            t.step_failures.len(),
            first_failures(&t.step_failures)
        ),
    ));

    let all = instances(&sweep_config(Problem::VertexCover, "vc.matching")).unwrap();
    let mut bad = 0;
    let t = tally(par_map(&all, vc_instance), false, |opt, alg| alg <= 2 * opt, &mut bad);
    let worst = ratio_of(false, t.worst);
    let lib = library_max_ratio(Problem::VertexCover, "vc.matching");
    lines.push(line(
        "1c",
        bad == 0 && t.step_failures.is_empty() && lib == worst,
        format!(
            "vc.matching (LA) over {} instances [{}]: ALG <= 2*OPT violated {bad} times, max ALG/OPT = {worst} (library sweep: {lib}){}",
            t.instances,
            counts(&t),
            first_failures(&t.step_failures)
        ),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut mismatches = Vec::new();
    for i in 0..1000 {
        let n = 2 + i % 49;
        let g = gen_gnp(n, rng.gen_range(0.05..0.6), rng.gen()).unwrap();
        let g = gen_weights(&g, 1000, rng.gen()).unwrap();
        let seq = order_shuffle(&sequence_of(&g, ArrivalKind::Edge), rng.gen()).unwrap();
        let expected = prim_weight(&seq.snapshot().unwrap());
        let mut cfg = ExperimentConfig::new(Problem::SpanningForest, "msf.redrule", Source::Sequence(seq));
        cfg.caps = OracleCaps::default();
        let r = run_experiment(&cfg).unwrap();
        if r.evaluation.alg_value != v(expected) || r.evaluation.ratio != CompetitiveRatio::Finite(v(1)) {
            mismatches.push(format!("graph {i}: ALG {} vs Prim {expected}", r.evaluation.alg_value));
        }
    }
    lines.push(line(
        "1d",
        mismatches.is_empty(),
        format!(
            "msf.redrule (LR) on 1000 seeded G(n,p), n in 2..=50, weights 1..=1000: ALG weight = Prim weight exactly, {} mismatches{}",
            mismatches.len(),
            first_failures(&mismatches)
        ),
    ));
}

fn adversary_run(problem: Problem, alg: &str, adv: &str) -> lateops::harness::ExperimentReport {
    run_experiment(&ExperimentConfig::new(problem, alg, Source::parse(adv))).unwrap()
}

fn star_center(g: &GraphSnapshot) -> Option<usize> {
    let first = g.edges().first()?;
    [first.u, first.v].into_iter().find(|&c| g.edges().iter().all(|e| e.touches(c)))
}

fn lower_bounds(lines: &mut Vec<Line>) {
    let r = adversary_run(Problem::IndependentSet, "is.greedy", "adv.is.std:n=20");
    let opt = brute_mis(&r.run.graph).len() as i64;
    lines.push(line(
        "2a",
        r.ratio() == CompetitiveRatio::Finite(v(19)) && opt == 19,
        format!("adv.is.std vs is.greedy, n=20: ratio {} (expected 19), brute-force OPT {opt}", r.ratio()),
    ));

    let r = adversary_run(Problem::IndependentSet, "is.swap", "adv.is.lr:n=20");
    let opt = brute_mis(&r.run.graph).len() as i64;
    let bound = r.evaluation.adversary_bound.unwrap();
    lines.push(line(
        "2b",
        r.evaluation.alg_value == v(1) && bound == v(10) && opt == 10,
        format!("adv.is.lr vs is.swap, n=20: ALG {} (expected 1), bound {bound} (expected 10), brute-force OPT {opt}", r.evaluation.alg_value),
    ));

    let r = adversary_run(Problem::VertexCover, "vc.standard", "adv.vc.std:n=20");
    let opt = brute_min_vertex_cover(&r.run.graph);
    lines.push(line(
        "2c",
        r.ratio() == CompetitiveRatio::Finite(v(19)) && opt == 1,
        format!("adv.vc.std vs vc.standard, n=20: ratio {} (expected 19), brute-force OPT {opt}", r.ratio()),
    ));

    let r = adversary_run(Problem::VertexCover, "vc.reset:b=3", "adv.vc.lr:n=40");
    let star = star_center(&r.run.graph);
    lines.push(line(
        "2d",
        r.evaluation.alg_value == v(36) && r.evaluation.opt_value == v(1) && star.is_some(),
        format!(
            "adv.vc.lr vs vc.reset(b=3), n=40: ALG {} (expected 36), OPT {} (expected 1; final graph is a star centred at {:?})",
            r.evaluation.alg_value, r.evaluation.opt_value, star
        ),
    ));

    let r = adversary_run(Problem::Matching, "match.greedy", "adv.match.ext:m=10");
    let opt = forest_leaf_matching(&r.run.graph) as i64;
    lines.push(line(
        "2e",
        r.ratio() == CompetitiveRatio::Finite(v(2)) && r.evaluation.opt_value == v(opt),
        format!("adv.match.ext vs match.greedy, m=10: ratio {} (expected 2), leaf-matching OPT {opt}", r.ratio()),
    ));

    let r = adversary_run(Problem::Matching, "match.alg2", "adv.match.lar:m=10");
    let opt = forest_leaf_matching(&r.run.graph) as i64;
    lines.push(line(
        "2f",
        r.ratio() == CompetitiveRatio::Finite(Value::new(3, 2)) && r.evaluation.opt_value == v(opt),
        format!("adv.match.lar vs match.alg2, m=10: ratio {} (expected 3/2), leaf-matching OPT {opt}", r.ratio()),
    ));

    let (n, w) = (12i64, 1000i64);
    let r = adversary_run(Problem::SpanningForest, "msf.standard", "adv.msf.hub:n=12,w=1000");
    let expected = Value::new((n - 2) * w + 1, n - 1);
    let prim = prim_weight(&r.run.graph);
    lines.push(line(
        "2g",
        r.ratio() == CompetitiveRatio::Finite(expected) && r.evaluation.opt_value == v(prim),
        format!("adv.msf.hub vs msf.standard, n=12, W=1000: ratio {} (expected {expected}), Prim OPT {prim}", r.ratio()),
    ));
}

struct BagRun {
    reached: bool,
    best: Option<Value>,
    certified: CompetitiveRatio,
    vertices: usize,
    witness_ok: bool,
    holdings_ok: bool,
}

fn bag_run(alg: &mut dyn OnlineAlgorithm, budget: usize) -> BagRun {
    let mut adv = BagAdversary::new(v(2), Value::new(1, 20), 200, budget);
    let run = run_events(alg, ArrivalKind::Vertex, Feed::Adversary(&mut adv), None, false, |_, _, _| Ok(())).unwrap();
    let e = evaluate(Problem::IndependentSet, &run, Some(&adv), OracleCaps::default()).unwrap();
    let w = adv.witness();
    let witness_ok = w.iter().enumerate().all(|(i, &a)| w[i + 1..].iter().all(|&b| !run.graph.has_edge(a, b)));
    BagRun {
        reached: adv.reached(),
        best: adv.best_ratio(),
        certified: e.ratio,
        vertices: run.graph.n(),
        witness_ok: witness_ok && e.adversary_bound == Some(v(w.len() as i64)),
        holdings_ok: !adv.split_holdings() && adv.holdings() == run.ledger.accepted_count(),
    }
}

fn bags(lines: &mut Vec<Line>) {
    let algs: [(&str, fn() -> Box<dyn OnlineAlgorithm>); 2] = [
        ("is.alg1", || Box::new(Algorithm1::new())),
        ("is.greedy (LAR)", || Box::new(GreedyIs::new(DecisionModel::LateAcceptThenReject).unwrap())),
    ];
    for (i, (name, make)) in algs.into_iter().enumerate() {
        let runs: Vec<(usize, BagRun)> = [1_000, 10_000, 100_000].into_iter().map(|b| (b, bag_run(make().as_mut(), b))).collect();
        let main = &runs[1].1;
        let target = main.reached && main.certified > CompetitiveRatio::Finite(v(2)) && main.witness_ok && main.holdings_ok;
        let monotone = runs.windows(2).all(|p| p[0].1.best <= p[1].1.best);
        let trend = runs
            .iter()
            .map(|(b, r)| format!("{b}: {:.4}", r.best.map_or(0.0, |x| *x.numer() as f64 / *x.denom() as f64)))
            .collect::<Vec<_>>()
            .join(", ");
        lines.push(line(
            ["3a", "3b"][i],
            target && monotone,
            format!(
                "adv.is.bags(c=2, eps=1/20, n1=200) vs {name}, budget 10^4: stopped after {} vertices, certified ratio {} ({:.4}) > 2 {}, witness independent {}, holdings in one bag {}; best ratio by budget {{{trend}}} non-decreasing {monotone}",
                main.vertices,
                main.certified,
                main.certified.to_f64(),
                main.reached,
                main.witness_ok,
                main.holdings_ok
            ),
        ));
    }
}

const MODELS: [DecisionModel; 4] =
    [DecisionModel::Standard, DecisionModel::LateAccept, DecisionModel::LateReject, DecisionModel::LateAcceptThenReject];

fn ledger_fuzz(lines: &mut Vec<Line>) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x1ed6e5);
    let (mut attempts, mut silent, mut refused, mut invariant, mut replay, mut accepted_moves) = (0, 0, 0, 0, 0, 0);
    while attempts < 100_000 {
        let model = MODELS[rng.gen_range(0..4)];
        let kind = if rng.gen() { ItemKind::Vertex } else { ItemKind::Edge };
        let mut real = SolutionLedger::new(model, kind);
        let mut reference = ReferenceLedger::new(model, kind);
        let length = rng.gen_range(1..60);
        for _ in 0..length {
            attempts += 1;
            let before = (real.states().to_vec(), real.log().len());
            let revealed = real.revealed();
            let pick = |rng: &mut ChaCha8Rng| -> Item {
                let id = rng.gen_range(0..revealed + 2);
                let k = if rng.gen_bool(0.9) { kind } else if kind == ItemKind::Vertex { ItemKind::Edge } else { ItemKind::Vertex };
                k.item(id)
            };
            let (ok_real, ok_ref) = match rng.gen_range(0..100) {
                0..=19 => (real.begin_step().is_ok(), reference.begin_step()),
                20..=39 => (real.end_step().is_ok(), reference.end_step()),
                40..=54 => (real.apply(Action::AcceptNow).is_ok(), reference.apply(Action::AcceptNow)),
                55..=64 => (real.apply(Action::RejectNow).is_ok(), reference.apply(Action::RejectNow)),
                65..=81 => {
                    let a = Action::LateAccept(pick(&mut rng));
                    (real.apply(a).is_ok(), reference.apply(a))
                }
                82..=98 => {
                    let a = Action::LateReject(pick(&mut rng));
                    (real.apply(a).is_ok(), reference.apply(a))
                }
                _ => (real.finalize().is_ok(), reference.finalize()),
            };
            match (ok_real, ok_ref) {
                (true, false) => silent += 1,
                (false, true) => refused += 1,
                (true, true) => accepted_moves += 1,
                (false, false) => {
                    if (real.states().to_vec(), real.log().len()) != before {
                        silent += 1;
                    }
                }
            }
            let partition = real.accepted_count() + real.rejected_count() + real.pending_count() == real.revealed()
                && real.accepted_ids().count() == real.accepted_count()
                && real.rejected_ids().count() == real.rejected_count();
            if real.states() != reference.states.as_slice() || !partition || real.is_finalized() != reference.finalized {
                invariant += 1;
            }
        }
        // Replay closes every step it opens, which Standard and LR refuse
        // while the current item is undecided.
        let open_undecided = real.current().is_some_and(|c| real.is_pending(c.id()))
            && matches!(model, DecisionModel::Standard | DecisionModel::LateReject);
        match SolutionLedger::replay(model, kind, real.revealed(), real.log()) {
            Ok(copy) if copy.states() == real.states() && copy.log() == real.log() => {}
            Err(_) if open_undecided => {}
            _ => replay += 1,
        }
    }
    lines.push(line(
        "5a",
        silent == 0 && refused == 0 && invariant == 0 && replay == 0,
        format!(
            "ledger fuzz: {attempts} random move attempts over all four models ({accepted_moves} legal): silent illegal transitions {silent}, wrongly refused {refused}, partition/state mismatches {invariant}, replay mismatches {replay}"
        ),
    ));
}

fn oracle_consistency(lines: &mut Vec<Line>) {
    let caps = OracleCaps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x0c1e);
    let specs: Vec<(usize, f64, u64)> = (0..10_000).map(|_| (rng.gen_range(1..=16), rng.gen_range(0.05..0.9), rng.gen())).collect();
    let bad: usize = specs
        .iter()
        .map(|&(n, p, seed)| {
            let g = gen_gnp(n, p, seed).unwrap();
            let is = oracles::opt_independent_set(&g, caps).unwrap();
            let vc = oracles::opt_vertex_cover(&g, caps).unwrap();
            let masks = adjacency_masks(&g);
            let independent = is_independent_mask(&masks, is.witness.iter().map(|&x| 1u64 << x).sum());
            let cover = g.edges().iter().all(|e| vc.witness.contains(&e.u) || vc.witness.contains(&e.v));
            let reference = branch_min_vertex_cover(&masks, if n == 0 { 0 } else { (1u64 << n) - 1 }) as i64;
            let ok = independent
                && cover
                && is.value + vc.value == v(n as i64)
                && vc.value == v(reference)
                && is.witness.len() as i64 == n as i64 - reference;
            usize::from(!ok)
        })
        .sum();
    lines.push(line(
        "6a",
        bad == 0,
        format!("IS + VC = n on 10000 seeded G(n,p), n in 1..=16, with VC checked against an independent branching solver: {bad} failures"),
    ));

    let specs: Vec<(usize, f64, u64)> = (0..1_000).map(|_| (rng.gen_range(1..=12), rng.gen_range(0.05..0.9), rng.gen())).collect();
    let (mut is_bad, mut m_bad, mut m_enum) = (0, 0, 0);
    for &(n, p, seed) in &specs {
        let g = gen_gnp(n, p, seed).unwrap();
        let bb = oracles::opt_independent_set(&g, caps).unwrap().value;
        let en = oracles::opt_independent_set_enumerate(&g).unwrap().value;
        if bb != en || bb != v(brute_mis(&g).len() as i64) {
            is_bad += 1;
        }
        let mb = oracles::opt_matching(&g, OracleCaps::uniform(100)).unwrap().value;
        let reference = if g.m() <= oracles::ENUMERATION_LIMIT {
            m_enum += 1;
            oracles::opt_matching_enumerate(&g).unwrap().value
        } else {
            v(brute_max_matching(&g) as i64)
        };
        if mb != reference {
            m_bad += 1;
        }
    }
    lines.push(line(
        "6b",
        is_bad == 0 && m_bad == 0,
        format!(
            "branch-and-bound vs enumeration on 1000 seeded G(n,p), n in 1..=12: IS mismatches {is_bad}; matching mismatches {m_bad} ({m_enum} against edge-subset enumeration, the rest against vertex recursion)"
        ),
    ));
}

fn main() -> ExitCode {
    let started = Instant::now();
    let mut lines = Vec::new();
    let sections: [(&str, fn(&mut Vec<Line>)); 5] = [
        ("upper bounds", upper_bounds),
        ("lower bounds", lower_bounds),
        ("bag adversary", bags),
        ("ledger fuzz", ledger_fuzz),
        ("oracle consistency", oracle_consistency),
    ];
    for (name, section) in sections {
        let t = Instant::now();
        section(&mut lines);
        eprintln!("acceptance: {name} done in {:.1}s", t.elapsed().as_secs_f64());
    }
    lines.sort_by_key(|l| l.id);
    for l in &lines {
        println!("{} [{}] {}", if l.pass { "PASS" } else { "FAIL" }, l.id, l.detail);
    }
    let failed = lines.iter().filter(|l| !l.pass).count();
    println!("acceptance: {} criteria, {failed} failed, {:.1}s", lines.len(), started.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
