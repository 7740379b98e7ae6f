//! Acceptance run: one PASS/FAIL line per criterion with its time limit.
//! Exits nonzero when any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;
use terracini_core::constructions::{
    ci_lemma_verify, due2_table, emptiness_probe, example_due001_report, proposition_o1o1_instance, Generator,
};
use terracini_core::{double_scheme, PrimeField, RationalField, ZeroDimScheme, DEFAULT_PRIME};

use common::Check;

const CASES: u64 = 100;

struct Criterion {
    name: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

fn ci_lemma() -> Check {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    for a in 2..=5 {
        for b in a..=5 {
            let r = ci_lemma_verify(&f, a, b, None).map_err(|e| e.to_string())?;
            if !r.pass {
                return Err(format!("a={a} b={b}: {:?}", r.checks));
            }
        }
    }
    Ok(())
}

fn due001() -> Check {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    for d in [8, 9] {
        let r = example_due001_report(&f, d).map_err(|e| e.to_string())?;
        if !r.pass {
            return Err(format!("d={d}: {:?}", r.checks));
        }
    }
    Ok(())
}

fn o1o1_suite() -> Check {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    for (t, d) in [(2, 7), (2, 9), (3, 8), (4, 11)] {
        let r = proposition_o1o1_instance(&f, t, d).map_err(|e| e.to_string())?.report;
        let expected = t * (d + 3 - t);
        let ok = r.pass
            && r.minimal
            && r.points * 2 == expected
            && r.critical_degree == expected
            && r.tau == d as i64
            && r.h1 == 1
            && r.connected
            && r.character.first() == Some(&(d + 2));
        if !ok {
            return Err(format!("(t,d)=({t},{d}): {r:?}"));
        }
    }
    Ok(())
}

fn due2_arithmetic() -> Check {
    for c in 2..=6 {
        for d in 14 * c + 2..=14 * c + 12 {
            let r = due2_table(c, d);
            if !r.pass {
                let failing: Vec<_> = r.checks.iter().filter(|(_, v)| !**v).map(|(k, _)| k).collect();
                return Err(format!("c={c} d={d}: {failing:?}"));
            }
        }
    }
    Ok(())
}

/// `t` with `t(d+3-t)/2 = x` and `t ≤ (d+3)/2`.
fn t_for(x: i64, d: i64) -> Option<usize> {
    (1..=(d + 3) / 2).find(|t| t * (d + 3 - t) == 2 * x).map(|t| t as usize)
}

fn witnesses() -> Check {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    for d in [30i64, 31] {
        let table = due2_table(2, d);
        for &x in &table.xs {
            let t = t_for(x, d).ok_or(format!("x={x} is not t(d+3-t)/2 at d={d}"))?;
            let r = proposition_o1o1_instance(&f, t, d as usize).map_err(|e| e.to_string())?.report;
            if !(r.terracini && r.minimal && r.points as i64 == x) {
                return Err(format!("d={d} x={x} t={t}: terracini {} minimal {}", r.terracini, r.minimal));
            }
        }
    }
    Ok(())
}

fn probe_evidence() -> Check {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    let r = emptiness_probe(&f, 30, 69, 200, 0, Generator::Mixed).map_err(|e| e.to_string())?;
    println!("    evidence: {} of 200 Terracini, {} minimal, by generator {:?}", r.terracini, r.found, r.trials_by_generator);
    if r.label != "evidence" || r.trials_by_generator.len() < 4 {
        return Err(format!("summary malformed: {r:?}"));
    }
    if r.found != 0 {
        return Err(format!("{} minimally Terracini configurations found", r.found));
    }
    Ok(())
}

fn properties() -> Check {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    for seed in 0..CASES {
        let mut rng = common::rng(seed);
        let z = common::random_scheme(&f, &mut rng, 6);
        let w = common::random_subscheme(&f, &mut rng, &z);
        let d = rng.gen_range(0..=6);
        common::euler(&f, &z, d).map_err(|e| format!("euler, seed {seed}: {e}"))?;
        common::monotonicity(&f, &z, &w, 6).map_err(|e| format!("monotonicity, seed {seed}: {e}"))?;
        common::character_invariants(&f, &z).map_err(|e| format!("character, seed {seed}: {e}"))?;
        let count = rng.gen_range(1..=7);
        let pts = common::random_points(&f, &mut rng, count, 12);
        common::double_s_chain(&f, &pts).map_err(|e| format!("s chain, seed {seed}: {e}"))?;
        let jet = common::random_points(&f, &mut rng, 2, 12);
        let rest = ZeroDimScheme::simple(2, &pts).unwrap();
        let rest = ZeroDimScheme::new(2, rest.components().iter().filter(|c| *c.point() != jet[0]).cloned().collect()).unwrap();
        let lambda = rng.gen_range(-5..=5);
        common::jet_invariance(&f, &rest, &jet[0], &jet[1], lambda, 5)
            .map_err(|e| format!("jet invariance, seed {seed}: {e}"))?;
    }
    Ok(())
}

fn rational_reruns() -> Check {
    let p = PrimeField::new(DEFAULT_PRIME).unwrap();
    let q = RationalField;
    for (a, b) in [(2, 2), (3, 4)] {
        let (x, y) = (ci_lemma_verify(&p, a, b, None), ci_lemma_verify(&q, a, b, None));
        if x.as_ref().ok() != y.as_ref().ok() || x.is_err() {
            return Err(format!("ci lemma ({a},{b}) differs"));
        }
    }
    let (x, y) = (example_due001_report(&p, 8), example_due001_report(&q, 8));
    if x.as_ref().ok() != y.as_ref().ok() || x.is_err() {
        return Err("due001 d=8 differs".into());
    }
    for (t, d) in [(2, 7), (3, 8), (2, 31)] {
        let x = proposition_o1o1_instance(&p, t, d).map(|i| i.report);
        let y = proposition_o1o1_instance(&q, t, d).map(|i| i.report);
        if x.as_ref().ok() != y.as_ref().ok() || x.is_err() {
            return Err(format!("o1o1 ({t},{d}) differs"));
        }
    }
    // Criterion 4 never touches a field. Spot-check raw ranks on 2S as well.
    let pts_p = common::random_points(&p, &mut common::rng(7), 6, 12);
    let pts_q = common::random_points(&q, &mut common::rng(7), 6, 12);
    for d in 2..=6 {
        let hp = terracini_core::h1(&p, &double_scheme(2, &pts_p).unwrap(), d).map_err(|e| e.to_string())?;
        let hq = terracini_core::h1(&q, &double_scheme(2, &pts_q).unwrap(), d).map_err(|e| e.to_string())?;
        if hp != hq {
            return Err(format!("h1(2S) at d={d}: {hp} over F_p, {hq} over Q"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { name: "1 ci lemma, 2 <= a <= b <= 5", limit: Duration::from_secs(10), run: ci_lemma },
        Criterion { name: "2 conic example, d = 8, 9", limit: Duration::from_secs(10), run: due001 },
        Criterion { name: "3 complete intersection witnesses", limit: Duration::from_secs(60), run: o1o1_suite },
        Criterion { name: "4 gap arithmetic, 2 <= c <= 6", limit: Duration::from_secs(1), run: due2_arithmetic },
        Criterion { name: "5 witnesses at x_1, x_2 for d = 30, 31", limit: Duration::from_secs(300), run: witnesses },
        Criterion { name: "6 emptiness probe d = 30, y = 69", limit: Duration::from_secs(900), run: probe_evidence },
        Criterion { name: "7 property suites, 100 seeds", limit: Duration::from_secs(600), run: properties },
        Criterion { name: "8 rational reruns match F_p", limit: Duration::from_secs(600), run: rational_reruns },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match (&result, elapsed <= c.limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over the {:?} limit)", c.limit),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("{verdict:<4}  {:<42} {:>8.2}s / {}s", c.name, elapsed.as_secs_f64(), c.limit.as_secs());
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
