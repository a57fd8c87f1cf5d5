//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use maxcover::combinatorics::{binomial, Combinations};
use maxcover::*;
use num_rational::Ratio;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> bool {
    elapsed < Duration::from_secs(limit_secs)
}

fn random_instance(
    rng: &mut ChaCha8Rng,
    max_n: usize,
    max_m: usize,
    max_k: usize,
    max_p: usize,
) -> Instance {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    let k = rng.gen_range(1..=max_k);
    let p = rng.gen_range(1..=max_p.min(m));
    gen_random(n, m, k, p, rng.gen()).unwrap()
}

fn opt(inst: &Instance) -> usize {
    brute_force(inst).unwrap().opt
}

fn oracle_consistency() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut violations = 0;
    for _ in 0..500 {
        let inst = random_instance(&mut rng, 12, 10, 4, 10);
        let best = opt(&inst);
        let k = inst.effective_k();
        for _ in 0..1000 {
            let subset = sample(&mut rng, inst.m(), k).into_vec();
            if inst.coverage(&subset).unwrap() > best {
                violations += 1;
            }
        }
    }
    let t = start.elapsed();
    outcome(
        violations == 0 && within(t, 30),
        format!("500 instances x 1000 random subsets, {violations} exceed brute force, {t:.2?} (limit 30s)"),
    )
}

fn fpt_guarantee() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let instances: Vec<Instance> = (0..200)
        .map(|_| random_instance(&mut rng, 16, 14, 3, 3))
        .collect();
    let mut violations = 0;
    for beta in [0.5, 0.7, 0.9] {
        for inst in &instances {
            let p = inst.frequency_profile().p_max;
            let (sol, _) = fpt_approx(inst, p, beta).unwrap();
            if (sol.covered as f64) < beta * opt(inst) as f64 {
                violations += 1;
            }
        }
    }
    let t = start.elapsed();
    outcome(
        violations == 0 && within(t, 60),
        format!(
            "beta in {{0.5,0.7,0.9}} x 200 instances, {violations} violations, {t:.2?} (limit 60s)"
        ),
    )
}

fn greedy_guarantee_after_padding() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut ratio_violations, mut trace_violations, mut done) = (0, 0, 0);
    while done < 200 {
        let base = random_instance(&mut rng, 8, 6, 3, 3);
        if base.frequency_profile().p_min == 0 {
            continue;
        }
        let p = rng.gen_range(1..=3);
        let inst = base.pad_frequencies(p).unwrap();
        let p_min = inst.frequency_profile().p_min;
        let (sol, trace) = greedy_cover(&inst);
        let bound = maxcover::greedy_guarantee(p_min, inst.effective_k(), inst.m()).unwrap();
        if (sol.covered as f64) < bound * opt(&inst) as f64 - 1e-9 {
            ratio_violations += 1;
        }
        for (i, &u) in trace.uncovered_after.iter().enumerate() {
            if u as f64 > uncovered_bound(inst.n(), p_min, inst.m(), i + 1) + 1e-9 {
                trace_violations += 1;
            }
        }
        done += 1;
    }
    outcome(
        ratio_violations == 0 && trace_violations == 0,
        format!(
            "200 padded instances, {ratio_violations} ratio violations, {trace_violations} trace-step violations (tolerance 1e-9)"
        ),
    )
}

fn tight_greedy_structure() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (m, k, p) in [(12, 3, 8), (20, 4, 10)] {
        let spec = TightGreedySpec::new(m, k, p).unwrap();
        let inst = gen_tight_greedy(&spec).unwrap();
        let (sol, trace) = greedy_cover(&inst);
        let only_first = trace.picks.iter().all(|&i| i < spec.first_family_len());
        let block = spec.block_size().unwrap() as usize;
        let covered: HashSet<usize> = sol
            .chosen
            .iter()
            .flat_map(|&i| inst.set(i).iter().copied())
            .collect();
        let expected = binomial((m - 2 * k) as u64, (p - 1) as u64).unwrap() as usize;
        let per_block: Vec<usize> = (0..k)
            .map(|b| {
                (b * block..(b + 1) * block)
                    .filter(|e| !covered.contains(e))
                    .count()
            })
            .collect();
        let blocks_ok = per_block.iter().all(|&u| u == expected);
        ok &= only_first && blocks_ok && sol.uncovered == k * expected;
        notes.push(format!(
            "(m={m},K={k},p={p}) S_1-only={only_first} uncovered/block={per_block:?} expected {expected}"
        ));
    }
    outcome(ok, notes.join("; "))
}

fn randomized_success_rate() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = f64::INFINITY;
    let mut rates = Vec::new();
    let mut made = 0;
    while made < 5 {
        let n = rng.gen_range(12..=18);
        let m = rng.gen_range(6..=9);
        let k = rng.gen_range(2..=4);
        let inst = gen_random(n, m, k, 3, rng.gen()).unwrap();
        let best_uncovered = inst.n() - opt(&inst);
        if best_uncovered == 0 {
            continue;
        }
        made += 1;
        let p = inst.frequency_profile().p_max;
        let hits = (0..200u64)
            .filter(|&seed| {
                let run = randomized_min_noncovered(&inst, p, 2.0, 0.1, seed).unwrap();
                run.best.uncovered <= 2 * best_uncovered
            })
            .count();
        let rate = hits as f64 / 200.0;
        worst = worst.min(rate);
        rates.push(format!("{rate:.3}"));
    }
    let t = start.elapsed();
    outcome(
        worst >= 0.85 && within(t, 120),
        format!(
            "success fractions [{}], minimum {worst:.3} (need >= 0.85), {t:.2?} (limit 120s)",
            rates.join(", ")
        ),
    )
}

fn hybrid_guarantees() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut ratio_violations, mut endpoint_mismatches, mut runs) = (0, 0, 0);
    for _ in 0..100 {
        let inst = random_instance(&mut rng, 12, 9, 4, 4);
        let best = opt(&inst) as f64;
        let k = inst.k();
        for x in 0..=k {
            let a = greedy_then_exact(&inst, x, DEFAULT_CEILING).unwrap();
            let b = exact_then_greedy(&inst, x, DEFAULT_CEILING).unwrap();
            let f = x as f64 / k as f64;
            if (a.solution.covered as f64) < (1.0 - f * (-f).exp()) * best - 1e-9 {
                ratio_violations += 1;
            }
            if (b.solution.covered as f64) < (1.0 - f * (-1.0f64).exp()) * best - 1e-9 {
                ratio_violations += 1;
            }
            runs += 2;
        }
        let exact = brute_force(&inst).unwrap().solution;
        let greedy = greedy_cover(&inst).0;
        for (r, want) in [
            (
                greedy_then_exact(&inst, 0, DEFAULT_CEILING).unwrap(),
                &exact,
            ),
            (
                exact_then_greedy(&inst, k, DEFAULT_CEILING).unwrap(),
                &greedy,
            ),
            (
                greedy_then_exact(&inst, k, DEFAULT_CEILING).unwrap(),
                &greedy,
            ),
            (
                exact_then_greedy(&inst, 0, DEFAULT_CEILING).unwrap(),
                &exact,
            ),
        ] {
            if &r.solution != want {
                endpoint_mismatches += 1;
            }
        }
    }
    outcome(
        ratio_violations == 0 && endpoint_mismatches == 0,
        format!(
            "100 instances, {runs} hybrid runs, {ratio_violations} ratio violations (tolerance 1e-9), {endpoint_mismatches} endpoint mismatches"
        ),
    )
}

fn figure_curves() -> Outcome {
    let start = Instant::now();
    let points = curve_points(0.75, 101, Alg5Form::VertexCover).unwrap();
    let beta_a = Ratio::new(3i64, 4);
    let one = Ratio::from_integer(1i64);
    let mut dominated = true;
    let mut float_agrees = true;
    let cp = |t: Ratio<i64>| t + beta_a * (one - t) * (one - t);
    for (i, pt) in points.iter().enumerate() {
        let t = Ratio::new(i as i64, 100);
        // exhaustive share t, so X/K = 1 - t
        let alg5 = one - (one - t) / 4;
        dominated &= alg5 >= cp(t);
        let close =
            |a: f64, b: Ratio<i64>| (a - *b.numer() as f64 / *b.denom() as f64).abs() < 1e-12;
        float_agrees &= close(pt.t, t) && close(pt.ratio_alg5, alg5) && close(pt.ratio_cp, cp(t));
    }
    let dip = cp(Ratio::new(1, 10)) < cp(Ratio::from_integer(0));
    let endpoints =
        points[0].ratio_cp == 0.75 && points[100].ratio_alg5 == 1.0 && points[100].ratio_cp == 1.0;
    let t = start.elapsed();
    outcome(
        points.len() == 101 && dominated && float_agrees && dip && endpoints && t < Duration::from_secs(1),
        format!(
            "101 points, alg5 >= cp everywhere: {dominated}, cp(0.1) = {} < cp(0) = 3/4: {dip}, floats match rationals: {float_agrees}, {t:.2?} (limit 1s)",
            cp(Ratio::new(1, 10))
        ),
    )
}

fn inclusion_exclusion_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut checked, mut mismatches) = (0u64, 0u64);
    for _ in 0..400 {
        let inst = random_instance(&mut rng, 10, 8, 4, 3);
        let p = inst.frequency_profile().p_max;
        for k in 0..=4.min(inst.m()) {
            for combo in Combinations::new(inst.m(), k) {
                if inst.coverage_inclusion_exclusion(&combo, p).unwrap()
                    != inst.coverage(&combo).unwrap()
                {
                    mismatches += 1;
                }
                checked += 1;
            }
        }
    }
    outcome(
        mismatches == 0,
        format!("400 instances, all {checked} subsets with K <= 4, {mismatches} mismatches"),
    )
}

fn dispatcher() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let alpha = 0.4;
    let (mut greedy, mut exact, mut violations) = (0, 0, 0);
    for _ in 0..100 {
        let m = rng.gen_range(5..=10);
        let n = rng.gen_range(4..=14);
        let k = rng.gen_range(1..=5);
        let p_min = (alpha * m as f64).ceil() as usize;
        let inst = gen_random_frequencies(n, m, k, p_min, m, rng.gen()).unwrap();
        let best = opt(&inst) as f64;
        for beta in [0.5, 0.8] {
            let out = ptas_dispatch(&inst, alpha, beta, DEFAULT_CEILING).unwrap();
            match out.branch {
                DispatchBranch::Greedy => greedy += 1,
                DispatchBranch::Exact => exact += 1,
            }
            if (out.solution.covered as f64) < beta * best {
                violations += 1;
            }
        }
    }
    outcome(
        violations == 0 && greedy >= 10 && exact >= 10,
        format!("100 instances x beta in {{0.5,0.8}}, {violations} violations, branches greedy={greedy} exact={exact} (need >= 10 each)"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("oracle consistency", oracle_consistency),
        ("pool solver covers beta*OPT", fpt_guarantee),
        (
            "greedy frequency guarantee and trace bound",
            greedy_guarantee_after_padding,
        ),
        ("greedy tight family structure", tight_greedy_structure),
        (
            "randomized MinNonCovered success rate",
            randomized_success_rate,
        ),
        ("hybrid guarantees and endpoints", hybrid_guarantees),
        ("guarantee curve comparison", figure_curves),
        (
            "inclusion-exclusion coverage identity",
            inclusion_exclusion_identity,
        ),
        ("frequency-ratio dispatcher", dispatcher),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let result = run();
        if !result.ok {
            failed += 1;
        }
        println!(
            "criterion {} {}: {name}: {}",
            i + 1,
            if result.ok { "PASS" } else { "FAIL" },
            result.detail
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
