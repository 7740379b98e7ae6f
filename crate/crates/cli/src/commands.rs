use std::fmt::Write;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::{json, Value};
use terracini_core::cohomology::{bound_checks, hilbert_profile, NumericalCharacter};
use terracini_core::constructions::{
    ci_lemma_verify, conic_ci, conic_points, default_conic_params, default_grid_params, due2_table, emptiness_probe,
    example_due001_report, grid_complete_intersection, proposition_o1o1_conic, proposition_o1o1_instance, Generator,
    O1o1Instance,
};
use terracini_core::io::{from_json, CurveFile, PointsFile, SchemeFile};
use terracini_core::terracini::{find_critical_scheme, is_minimally_terracini, is_terracini, verify_critical_properties};
use terracini_core::{double_scheme, with_field, Error, Field, FieldSpec, PrimeField, ProjPoint, ZeroDimScheme};

use crate::args::{Command, Construct, SchemeInput, VariantArg, Verify};
use crate::render;

/// What a command produced.
pub struct Outcome {
    pub field: FieldSpec,
    pub result: Value,
    pub table: String,
    /// False when an asserted property failed.
    pub pass: bool,
    /// Points or scheme file for `--out`.
    pub artifact: Option<String>,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
}

fn resolve_field(flag: Option<FieldSpec>, file: Option<FieldSpec>) -> Result<FieldSpec> {
    match (flag, file) {
        (Some(a), Some(b)) if a != b => {
            bail!("--field {a} differs from the input file's field {b}")
        }
        (a, b) => Ok(a.or(b).unwrap_or_default()),
    }
}

enum Loaded {
    Points(PointsFile),
    Scheme(SchemeFile),
}

fn load(input: &SchemeInput) -> Result<Loaded> {
    match (&input.points, &input.scheme) {
        (Some(p), _) => Ok(Loaded::Points(from_json(&read(p)?)?)),
        (None, Some(s)) => Ok(Loaded::Scheme(from_json(&read(s)?)?)),
        (None, None) => bail!("one of --points or --scheme is required"),
    }
}

impl Loaded {
    fn field(&self) -> Option<FieldSpec> {
        match self {
            Loaded::Points(p) => p.field,
            Loaded::Scheme(s) => s.field,
        }
    }

    fn scheme<F: Field>(&self, field: &F, double: bool) -> Result<ZeroDimScheme<F::Element>> {
        Ok(match self {
            Loaded::Points(p) => {
                let pts = p.to_points(field)?;
                if double {
                    double_scheme(p.n, &pts)?
                } else {
                    ZeroDimScheme::simple(p.n, &pts)?
                }
            }
            Loaded::Scheme(s) => {
                if double {
                    bail!("--double applies to --points input only");
                }
                s.to_scheme(field)?
            }
        })
    }
}

pub fn run(command: &Command, flag: Option<FieldSpec>, seed: u64) -> Result<Outcome> {
    match command {
        Command::Hilbert { input, double } => {
            let loaded = load(input)?;
            let spec = resolve_field(flag, loaded.field())?;
            with_field!(terracini_core::field_create(spec)?, |f| hilbert(&f, &loaded.scheme(&f, *double)?))
        }
        Command::Character { input, double } => {
            let loaded = load(input)?;
            let spec = resolve_field(flag, loaded.field())?;
            with_field!(terracini_core::field_create(spec)?, |f| character(&f, &loaded.scheme(&f, *double)?))
        }
        Command::Check { points, degree, minimal } => {
            let file: PointsFile = from_json(&read(points)?)?;
            let spec = resolve_field(flag, file.field)?;
            with_field!(terracini_core::field_create(spec)?, |f| check(&f, &file.to_points(&f)?, *degree, *minimal))
        }
        Command::Critical { points, degree, pool_size } => {
            let file: PointsFile = from_json(&read(points)?)?;
            let spec = resolve_field(flag, file.field)?;
            with_field!(terracini_core::field_create(spec)?, |f| critical(
                &f,
                &file.to_points(&f)?,
                *degree,
                *pool_size,
                seed
            ))
        }
        Command::Construct(c) => {
            let spec = flag.unwrap_or_default();
            match c {
                Construct::ConicCi { b } => match terracini_core::field_create(spec)? {
                    terracini_core::AnyField::Prime(f) => construct_conic_ci(&f, *b, seed),
                    terracini_core::AnyField::Rational(_) => {
                        bail!("conic-ci needs a prime field")
                    }
                },
                Construct::O1o1 { t, d, variant: VariantArg::Conic } => {
                    if *t != 2 {
                        bail!("the conic variant needs t = 2");
                    }
                    match terracini_core::field_create(spec)? {
                        terracini_core::AnyField::Prime(f) => o1o1(&f, proposition_o1o1_conic(&f, *d, seed)?),
                        terracini_core::AnyField::Rational(_) => {
                            bail!("the conic variant needs a prime field")
                        }
                    }
                }
                _ => with_field!(terracini_core::field_create(spec)?, |f| construct(&f, c)),
            }
        }
        Command::Verify(v) => {
            let spec = flag.unwrap_or_default();
            with_field!(terracini_core::field_create(spec)?, |f| verify(&f, v, seed))
        }
    }
}

fn hilbert<F: Field>(f: &F, z: &ZeroDimScheme<F::Element>) -> Result<Outcome> {
    let profile = hilbert_profile(f, z)?;
    let character = NumericalCharacter::from_profile(&profile)?;
    let summary = json!({
        "s": profile.s,
        "tau": profile.tau,
        "character": character.entries(),
        "connected": character.connected(),
    });
    let mut table = String::from("t,H,Δ,h1\n");
    for t in profile.degrees() {
        let _ = writeln!(table, "{t},{},{},{}", profile.hilbert[t], profile.delta[t], profile.h1[t]);
    }
    let _ = writeln!(table, "{summary}");
    Ok(Outcome {
        field: f.spec(),
        result: json!({ "degree": profile.degree, "profile": to_value(&profile), "summary": summary }),
        table,
        pass: true,
        artifact: None,
    })
}

fn character<F: Field>(f: &F, z: &ZeroDimScheme<F::Element>) -> Result<Outcome> {
    let profile = hilbert_profile(f, z)?;
    let character = NumericalCharacter::from_profile(&profile)?;
    let bounds = bound_checks(f, z)?;
    let invariant = character.scheme_degree() == z.degree() && character.entries()[0] as i64 == profile.tau + 2;
    let mut table = String::new();
    let _ = writeln!(table, "degree      {}", z.degree());
    let _ = writeln!(table, "s, tau      {}, {}", profile.s, profile.tau);
    let _ = writeln!(table, "character   {}", render::tuple(character.entries()));
    let _ = writeln!(table, "connected   {}", render::yes_no(character.connected()));
    let _ = writeln!(table, "bounds      {} <= {} <= {}", bounds.lower, bounds.degree, bounds.upper);
    let pass = invariant && bounds.lower_ok && bounds.upper_ok;
    table.push_str(render::verdict(pass));
    Ok(Outcome {
        field: f.spec(),
        result: json!({
            "degree": z.degree(),
            "s": profile.s,
            "tau": profile.tau,
            "character": character.entries(),
            "connected": character.connected(),
            "bounds": to_value(&bounds),
            "invariants_hold": invariant,
        }),
        table,
        pass,
        artifact: None,
    })
}

fn check<F: Field>(f: &F, pts: &[ProjPoint<F::Element>], d: usize, minimal: bool) -> Result<Outcome> {
    let v = if minimal { is_minimally_terracini(f, pts, d)? } else { is_terracini(f, pts, d)? };
    let mut table = String::new();
    let _ = writeln!(table, "points      {}", v.points);
    let _ = writeln!(table, "degree      {}", v.degree);
    let _ = writeln!(table, "h0, h1      {}, {}", v.h0, v.h1);
    let _ = writeln!(table, "spans       {}", render::yes_no(v.spans));
    let _ = writeln!(table, "terracini   {}", render::yes_no(v.terracini));
    if let Some(m) = v.minimal {
        let _ = writeln!(table, "minimal     {}", render::yes_no(m));
        for w in &v.witnesses {
            let _ = writeln!(table, "  without point {}: h1 = {}", w.omitted, w.h1);
        }
    }
    Ok(Outcome { field: f.spec(), result: to_value(&v), table, pass: true, artifact: None })
}

fn critical<F: Field>(f: &F, pts: &[ProjPoint<F::Element>], d: usize, pool: usize, seed: u64) -> Result<Outcome> {
    let crit = find_critical_scheme(f, pts, d, pool, seed)?;
    let report = verify_critical_properties(f, &crit)?;
    let file = SchemeFile::new(f, &crit.scheme);
    let mut table = String::new();
    let _ = writeln!(table, "critical scheme: degree {}, {} components", report.scheme_degree, crit.scheme.components().len());
    for c in crit.scheme.components() {
        let _ = writeln!(table, "  {:<12} ({})", format!("{:?}", c.kind()).to_lowercase(), c.point().to_strings(f).join(" : "));
    }
    let _ = writeln!(table, "h1 {}, tau {}, character {}", report.h1, report.tau, render::tuple(&report.character));
    let _ = writeln!(table, "s(S) {} <= s(Z) {} <= s(2S) {}", report.s_points, report.s_scheme, report.s_double);
    let _ = writeln!(table, "support contains S: {}", render::yes_no(report.contains_all_points));
    table.push_str(&render::checks(&report.checks));
    table.push_str(render::verdict(report.pass));
    Ok(Outcome {
        field: f.spec(),
        result: json!({ "scheme": to_value(&file), "report": to_value(&report) }),
        table,
        pass: report.pass,
        artifact: Some(pretty(&file)),
    })
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn points_outcome<F: Field>(
    f: &F,
    pts: &[ProjPoint<F::Element>],
    curves: &[(&str, &terracini_core::CurveForm<F::Element>)],
    header: String,
) -> Outcome {
    let file = PointsFile::new(f, 2, pts);
    let mut table = header;
    table.push_str(&render::points(&file.points));
    let mut result = json!({ "count": pts.len(), "points": to_value(&file) });
    for (name, c) in curves {
        let _ = writeln!(table, "{name}: degree {}, coefficients [{}]", c.degree(), c.to_strings(f).join(", "));
        result[*name] = to_value(&CurveFile::new(f, c));
    }
    Outcome { field: f.spec(), result, table, pass: true, artifact: Some(pretty(&file)) }
}

fn construct<F: Field>(f: &F, c: &Construct) -> Result<Outcome> {
    match c {
        Construct::Grid { a, b, u, v } => {
            let (du, dv) = default_grid_params(*a, *b);
            let (u, v) = (u.clone().unwrap_or(du), v.clone().unwrap_or(dv));
            if u.len() != *a || v.len() != *b {
                bail!("--u and --v must have a and b entries");
            }
            let g = grid_complete_intersection(f, &u, &v)?;
            Ok(points_outcome(f, &g.points, &[("a", &g.a), ("b", &g.b)], format!("grid {a} x {b}: {} points\n", g.points.len())))
        }
        Construct::Conic { count, params } => {
            let params = params.clone().unwrap_or_else(|| default_conic_params(*count));
            if params.len() != *count {
                bail!("--params must have count entries");
            }
            let pts = conic_points(f, &params)?;
            Ok(points_outcome(f, &pts, &[], format!("{count} points on x0 x2 = x1^2\n")))
        }
        Construct::O1o1 { t, d, .. } => o1o1(f, proposition_o1o1_instance(f, *t, *d)?),
        Construct::ConicCi { .. } => unreachable!("dispatched on the prime field"),
    }
}

fn construct_conic_ci(f: &PrimeField, b: usize, seed: u64) -> Result<Outcome> {
    let ci = conic_ci(f, b, seed)?;
    Ok(points_outcome(
        f,
        &ci.points,
        &[("conic", &ci.conic), ("curve", &ci.curve)],
        format!("conic x degree {b}: {} points\n", ci.points.len()),
    ))
}

fn o1o1<F: Field>(f: &F, inst: O1o1Instance<F::Element>) -> Result<Outcome> {
    let r = &inst.report;
    let mut table = String::new();
    let _ = writeln!(table, "t = {}, d = {}, x = {}  ({:?})", r.t, r.d, r.x, r.variant);
    let _ = writeln!(table, "points              {}", r.points);
    let _ = writeln!(table, "minimally Terracini {}", render::yes_no(r.minimal));
    let _ = writeln!(table, "Z = C ∩ 2S          degree {}, h1 {}, tau {}", r.critical_degree, r.h1, r.tau);
    let _ = writeln!(table, "character(Z)        {}  connected: {}", render::tuple(&r.character), render::yes_no(r.connected));
    table.push_str(&render::checks(&r.checks));
    table.push_str(render::verdict(r.pass));
    let file = PointsFile::new(f, 2, &inst.points);
    Ok(Outcome {
        field: f.spec(),
        result: json!({
            "report": to_value(r),
            "points": to_value(&file),
            "curve": to_value(&CurveFile::new(f, &inst.curve)),
            "critical": to_value(&SchemeFile::new(f, &inst.critical)),
        }),
        table,
        pass: r.pass,
        artifact: Some(pretty(&file)),
    })
}

fn verify<F: Field>(f: &F, v: &Verify, seed: u64) -> Result<Outcome> {
    match v {
        Verify::CiLemma { a, b } => {
            let r = ci_lemma_verify(f, *a, *b, None)?;
            let mut table = String::new();
            let _ = writeln!(table, "grid complete intersection a = {}, b = {}, deg W = {}", r.a, r.b, r.degree);
            match r.h1_at_critical {
                Some(h) => {
                    let _ = writeln!(table, "h1(I_W({})) = {h}", r.critical_degree);
                }
                None => {
                    let _ = writeln!(table, "h1(I_W({})): vacuous", r.critical_degree);
                }
            }
            let ts: Vec<i64> = r.h1_above.iter().map(|p| p.0).collect();
            let hs: Vec<usize> = r.h1_above.iter().map(|p| p.1).collect();
            table.push_str(&render::row("t", &ts, 10, 3));
            table.push_str(&render::row("h1(I_W(t))", &hs, 10, 3));
            let _ = writeln!(
                table,
                "one-point-removed subsets: {} checked, {} with h1 > 0",
                r.subsets_checked,
                r.subsets_failing.len()
            );
            table.push_str(&render::checks(&r.checks));
            table.push_str(render::verdict(r.pass));
            Ok(Outcome { field: f.spec(), result: to_value(&r), table, pass: r.pass, artifact: None })
        }
        Verify::Due2 { c, d, probe_trials } => {
            if *c < 2 {
                bail!("c must be at least 2");
            }
            let mut r = due2_table(*c, *d);
            if *probe_trials > 0 {
                let y = r.ys[0] as usize;
                r.evidence = Some(emptiness_probe(f, *d as usize, y, *probe_trials, seed, Generator::Mixed)?);
            }
            let in_range = r.checks["d_at_least_14c_plus_2"];
            let mut table = String::new();
            let _ = writeln!(table, "c = {}, d = {} ({})", r.c, r.d, to_value(&r.parity).as_str().unwrap_or_default());
            let _ = writeln!(table, "x = {}", render::tuple(&r.xs));
            let _ = writeln!(table, "y = {}", render::tuple(&r.ys));
            let _ = writeln!(table, "{:>3} {:>6} {:>6} {:>4} {:>6} {:>10}", "i", "y", "w", "a", "f(a)", "g(2i+1)");
            for row in &r.rows {
                let _ = writeln!(
                    table,
                    "{:>3} {:>6} {:>6} {:>4} {:>6} {:>10}",
                    row.i, row.y, row.w, row.a, row.f_a, row.g_bound
                );
            }
            table.push_str(&render::checks(&r.checks));
            for (k, v) in &r.notes {
                let _ = writeln!(table, "note: {k} = {v}");
            }
            if let Some(e) = &r.evidence {
                let _ = writeln!(table, "evidence ({} trials at y = {}): found: {}", e.trials, e.y, e.found);
            }
            if !in_range {
                table.push_str("d is below 14c + 2; the checks are informational\n");
            }
            table.push_str(render::verdict(r.pass));
            Ok(Outcome { field: f.spec(), result: to_value(&r), table, pass: r.pass || !in_range, artifact: None })
        }
        Verify::Due001 { d } => {
            let r = example_due001_report(f, *d)?;
            let mut table = String::new();
            let _ = writeln!(table, "d = {}: {} points (1 : t : t^2), t = {}..{}", r.d, r.d + 1, r.params[0], r.params[r.d]);
            table.push_str(&render::row("t", &r.t, 12, 3));
            table.push_str(&render::row("h¹(I_S(t))", &r.h1, 12, 3));
            table.push_str(&render::row("Δ_S(t)", &r.delta, 12, 3));
            let _ = writeln!(table, "τ(S) = {}, character(S) = {}", r.tau, render::tuple(&r.character));
            let hs: Vec<String> = r.double_h1.iter().map(|(t, h)| format!("h¹(I_2S({t})) = {h}")).collect();
            let _ = writeln!(table, "{}", hs.join(", "));
            let _ = writeln!(
                table,
                "s(2S) = {}, character(2S) = {}, connected: {}",
                r.double_s,
                render::tuple(&r.double_character),
                render::yes_no(r.double_connected)
            );
            let _ = writeln!(table, "minimally Terracini: {}", render::yes_no(r.minimal));
            table.push_str(&render::checks(&r.checks));
            table.push_str(render::verdict(r.pass));
            Ok(Outcome { field: f.spec(), result: to_value(&r), table, pass: r.pass, artifact: None })
        }
        Verify::Probe { d, y, trials, generator } => {
            let s = emptiness_probe(f, *d, *y, *trials, seed, *generator)?;
            let mut table = String::new();
            let _ = writeln!(table, "probe ({}): d = {}, y = {}, {} trials, generator {}", s.label, s.d, s.y, s.trials, s.generator);
            for (g, n) in &s.trials_by_generator {
                let _ = writeln!(table, "  {g:<18} {n}");
            }
            let _ = writeln!(table, "terracini: {}", s.terracini);
            let _ = writeln!(table, "found: {}", s.found);
            for (i, pts) in &s.counterexamples {
                let _ = writeln!(table, "trial {i}:");
                table.push_str(&render::points(pts));
            }
            Ok(Outcome { field: f.spec(), result: to_value(&s), table, pass: true, artifact: None })
        }
    }
}

/// Exit status for an error: input problems are 2, a failed search is 1.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<Error>() {
        Some(Error::CriticalSearchFailed(_)) => 1,
        _ => 2,
    }
}
