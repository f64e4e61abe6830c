mod diagram;
mod golden;
mod json;
mod suites;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use dcka::exact_core::{parse_rat, rat, Rat};
use dcka::ladders::{
    band_nilpotency, build_ladders, commutator_polynomial, default_cutoff, expected_commutator, isotonic_ladders,
    kernel_report, reduction_check, spectrum_generating_check,
};
use dcka::numeric_verify::{compare_spectrum, GridSpec};
use dcka::operators::{dcka_potential, OperatorError};
use dcka::schemes::{
    dual, n_infinity, predict_spectrum, reduce_mixed, regularity, Convention, Scheme, SchemeError, SignClass,
};
use serde_json::{json, Value};

use json::Envelope;
use suites::Suite;

#[derive(Parser)]
#[command(name = "dcka", version, about = "Rational deformations of conformal mechanics: potentials, dual schemes, spectra and ladder operators")]
struct Cli {
    /// Energy convention of the output; defaults to the input's own
    /// (`minus` for negative schemes, `plus` otherwise).
    #[arg(long, value_enum, global = true)]
    convention: Option<Conv>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Conv {
    Plus,
    Minus,
}

impl From<Conv> for Convention {
    fn from(c: Conv) -> Self {
        match c {
            Conv::Plus => Convention::Plus,
            Conv::Minus => Convention::Minus,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    ExactJson,
    CsvSamples,
}

#[derive(Clone, Copy, Debug)]
struct Range(f64, f64);

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once(':').ok_or("expected a:b")?;
        let a: f64 = a.trim().parse().map_err(|_| format!("bad bound {a:?}"))?;
        let b: f64 = b.trim().parse().map_err(|_| format!("bad bound {b:?}"))?;
        if !(a < b) {
            return Err("need a < b".into());
        }
        Ok(Range(a, b))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dual scheme, shift and mirror diagram.
    Dual {
        #[arg(allow_hyphen_values = true)]
        scheme: String,
    },
    /// Exact potential, optionally sampled to CSV.
    Potential {
        #[arg(allow_hyphen_values = true)]
        scheme: String,
        #[arg(long, value_enum, default_value = "exact-json")]
        format: Format,
        #[arg(long, default_value = "0.05:6")]
        range: Range,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// CSV destination for `--format csv-samples`.
        output: Option<PathBuf>,
    },
    /// Predicted band structure.
    Spectrum {
        #[arg(allow_hyphen_values = true)]
        scheme: String,
        /// Cross-check with the finite-difference eigensolver.
        #[arg(long)]
        numeric: bool,
        /// List levels up to this energy.
        #[arg(long, allow_hyphen_values = true)]
        cutoff: Option<String>,
    },
    /// Ladder operators with their algebra, kernels and connectivity.
    Ladders {
        #[arg(allow_hyphen_values = true)]
        scheme: String,
        #[arg(long, allow_hyphen_values = true)]
        cutoff: Option<String>,
    },
    /// Run a self-check suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
}

fn parse_scheme(s: &str) -> Result<Scheme> {
    s.parse::<Scheme>().with_context(|| format!("invalid scheme {s:?}"))
}

fn parse_energy(s: &str) -> Result<Rat> {
    parse_rat(s).ok_or_else(|| anyhow!("invalid energy {s:?}"))
}

fn singular_diagnostic(s: &Scheme, e: OperatorError) -> anyhow::Error {
    if let OperatorError::Scheme(SchemeError::Singular(_)) = e {
        let rep = regularity(s);
        let mut msg = format!("scheme ({s}) is singular; zeros of the Wronskian on (0, inf) lie in");
        for (a, b) in &rep.root_intervals {
            let _ = write!(msg, " [{a}, {b}]");
        }
        return anyhow!(msg);
    }
    e.into()
}

fn print(env: &Envelope) -> Result<()> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    writeln!(out, "{}", serde_json::to_string_pretty(env)?)?;
    Ok(())
}

fn resolve(conv: Option<Conv>, s: &Scheme) -> Convention {
    match (conv, s.sign_class()) {
        (Some(c), _) => c.into(),
        (None, Some(SignClass::Negative)) => Convention::Minus,
        (None, _) => Convention::Plus,
    }
}

fn cmd_dual(input: &str, conv: Option<Conv>) -> Result<()> {
    let s = parse_scheme(input)?;
    let conv = resolve(conv, &s);
    let mut notice = Value::Null;
    let target = if s.sign_class() == Some(SignClass::Mixed) {
        let red = reduce_mixed(&s);
        let msg = format!("mixed scheme reduced to ({}) with V shift {}", red.positive, red.shift);
        eprintln!("note: {msg}");
        notice = json!({ "message": msg, "reduced": red.positive.to_string(), "shift": json::r(&red.shift) });
        red.positive
    } else {
        s.clone()
    };
    let d = dual(&target)?;
    let (pos, neg) = if target.sign_class() == Some(SignClass::Negative) { (&d.dual, &target) } else { (&target, &d.dual) };
    let payload = json!({
        "dual": d.dual.to_string(),
        "shift": json::r(&d.shift),
        "gaussian_exponent": d.gaussian_exponent,
        "n_plus": d.n_plus,
        "n_minus": d.n_minus,
        "mirror_diagram": diagram::mirror(pos, neg),
        "notice": notice,
    });
    print(&Envelope::new(Some(s.to_string()), conv, payload))
}

fn cmd_potential(input: &str, format: Format, range: Range, samples: usize, output: Option<PathBuf>, conv: Option<Conv>) -> Result<()> {
    let s = parse_scheme(input)?;
    let conv = resolve(conv, &s);
    let l = dcka_potential(&s).map_err(|e| singular_diagnostic(&s, e))?;
    let mut form = l.decompose().ok_or_else(|| anyhow!("potential has no x^2 + m(m+1)/x^2 form"))?;
    let model = predict_spectrum(&s)?;
    form.constant += model.offset(conv) - model.offset(Convention::Native);
    let mut payload = json!({ "potential": json::potential(&form) });
    if s.sign_class() == Some(SignClass::Mixed) {
        let red = reduce_mixed(&s);
        payload["notice"] = json!(format!("mixed scheme; equivalent to ({}) up to a shift of {}", red.positive, red.shift));
    }
    if let Format::CsvSamples = format {
        let path = output.ok_or_else(|| anyhow!("--format csv-samples needs an output path"))?;
        if samples < 2 {
            bail!("--samples must be at least 2");
        }
        let v = l.potential();
        let mut csv = String::from("x,V\n");
        for i in 0..samples {
            let x = range.0 + (range.1 - range.0) * i as f64 / (samples - 1) as f64;
            writeln!(csv, "{x:.8},{:.10}", v.eval_f64(x))?;
        }
        std::fs::write(&path, csv).with_context(|| format!("writing {}", path.display()))?;
        payload["csv"] = json!({ "path": path.display().to_string(), "samples": samples });
    }
    print(&Envelope::new(Some(s.to_string()), conv, payload))
}

fn cmd_spectrum(input: &str, numeric: bool, cutoff: Option<String>, conv: Option<Conv>) -> Result<()> {
    let s = parse_scheme(input)?;
    let conv = resolve(conv, &s);
    let model = predict_spectrum(&s)?;
    let off = model.offset(conv);
    let cutoff = match cutoff {
        Some(c) => parse_energy(&c)?,
        None => model.infinite_bottom(conv) + rat(24),
    };
    let levels: Vec<Value> = model.levels(conv, &cutoff).iter().map(json::r).collect();
    let mut payload = json!({
        "model": json::spectrum(&model),
        "cutoff": json::r(&cutoff),
        "levels": levels,
        "n_infinity": n_infinity(&s).ok(),
        "offset_from_plus": json::r(&off),
    });
    if numeric {
        let r = compare_spectrum(&s, &GridSpec::standard(), 6, conv, 5e-3)?;
        payload["numeric"] = json!({
            "convention": r.convention.to_string(),
            "computed": r.computed,
            "predicted": r.predicted,
            "max_abs_error": r.max_abs_error,
            "converged": r.converged,
            "gap_counts": r.gap_counts,
            "gap_counts_match": r.gap_counts_match(),
            "elapsed_ms": r.elapsed.as_secs_f64() * 1e3,
        });
    }
    print(&Envelope::new(Some(s.to_string()), conv, payload))
}

fn cmd_ladders(input: &str, cutoff: Option<String>, conv: Option<Conv>) -> Result<()> {
    let s = parse_scheme(input)?;
    let conv = resolve(conv, &s);
    let fam = build_ladders(&s)?;
    let model = predict_spectrum(&s)?;
    let off = model.offset(conv);
    let cutoff_plus = match cutoff {
        Some(c) => parse_energy(&c)? - &off,
        None => default_cutoff(&fam, &model),
    };
    let to_conv = |e: &Rat| json::r(&(e + &off));
    // Polynomials are in L_(-); rewrite in the requested convention.
    let in_conv = |q: &dcka::operators::OperatorPoly| {
        let shift = model.offset(Convention::Minus) - &off;
        json::op_poly(&q.translate(&shift))
    };

    let mut pairs = Vec::new();
    for p in fam.pairs() {
        let comm = commutator_polynomial(&p.lowering, &p.raising)?;
        let expected = expected_commutator(&fam, p.lowering.kind);
        pairs.push(json!({
            "kind": p.lowering.kind.to_string(),
            "order": p.lowering.order(),
            "step": json::r(&p.raising.step),
            "steps_certified": p.lowering.certify_step() && p.raising.certify_step(),
            "commutator": in_conv(&comm),
            "expected_law_holds": expected.map(|e| e == comm),
        }));
    }

    let mut kernels = Vec::new();
    for p in fam.pairs() {
        for op in [&p.lowering, &p.raising] {
            let k = kernel_report(op, &model, &cutoff_plus);
            kernels.push(json!({
                "operator": k.operator,
                "physical": k.physical_members.iter().map(|m| json!({
                    "energy": to_conv(&m.energy), "band": m.band, "position": m.position,
                })).collect::<Vec<_>>(),
                "physical_checked": k.physical_checked,
                "infinite_band_members": k.infinite_band_count(&model),
                "nonphysical": k.nonphysical_members.iter().map(|(e, l)| json!({ "energy": to_conv(e), "state": l })).collect::<Vec<_>>(),
                "nonphysical_checked": k.nonphysical_checked,
                "arrival_rule_holds": k.arrival_rule_holds,
                "closure_holds": k.closure_holds,
            }));
        }
    }

    let conn = spectrum_generating_check(&fam, &model, &cutoff_plus);
    let reductions: Vec<Value> = reduction_check(&fam)
        .entries
        .iter()
        .filter(|r| r.cofactor.is_some())
        .map(|r| json!({ "high": r.high, "low": r.low, "cofactor": r.cofactor.as_ref().map(in_conv) }))
        .collect();

    let mut payload = json!({
        "positive": fam.positive.to_string(),
        "negative": fam.negative.to_string(),
        "shift": json::r(&fam.shift),
        "reference": "L_(-)",
        "n_infinity": n_infinity(&s).ok(),
        "cutoff": to_conv(&cutoff_plus),
        "pairs": pairs,
        "kernels": kernels,
        "connectivity": {
            "bands": conn.bands,
            "levels": conn.levels.iter().map(to_conv).collect::<Vec<_>>(),
            "sets": conn.verdicts.iter().map(|v| json!({
                "set": v.set, "strongly_connected": v.strongly_connected, "components": v.components,
            })).collect::<Vec<_>>(),
            "violations": conn.violations,
        },
        "band_nilpotency": band_nilpotency(&fam, &model),
        "reductions": reductions,
    });

    // Odd prefix 1, 3, ..., 2m-1 alone: the isotonic oscillator.
    let p = fam.positive.positive_part();
    if !p.is_empty() && p.iter().enumerate().all(|(j, &n)| n == 2 * j as u32 + 1) {
        let m = p.len() as u32;
        let (lo, hi) = isotonic_ladders(m);
        let comm = commutator_polynomial(&lo, &hi)?;
        let sl2 = lo.certify_step() && hi.certify_step() && lo.step == rat(-4) && comm.degree() == Some(1);
        payload["isotonic"] = json!({
            "m": m,
            "steps": [json::r(&lo.step), json::r(&hi.step)],
            "commutator": json::op_poly(&comm),
            "sl2_verified": sl2,
        });
    }
    print(&Envelope::new(Some(s.to_string()), conv, payload))
}

fn cmd_verify(suite: Suite, conv: Option<Conv>) -> Result<bool> {
    let conv = conv.map_or(Convention::Plus, Into::into);
    let checks = suites::run(suite);
    let passed = checks.iter().all(|c| c.passed);
    let payload = json!({ "passed": passed, "checks": checks });
    print(&Envelope::new(None, conv, payload))?;
    if let Some(c) = checks.iter().find(|c| !c.passed) {
        eprintln!("FAILED {}: {}: {}", c.suite, c.name, c.detail);
    }
    Ok(passed)
}

fn run(cli: Cli) -> Result<bool> {
    let conv = cli.convention;
    match cli.command {
        Command::Dual { scheme } => cmd_dual(&scheme, conv)?,
        Command::Potential { scheme, format, range, samples, output } => {
            cmd_potential(&scheme, format, range, samples, output, conv)?
        }
        Command::Spectrum { scheme, numeric, cutoff } => cmd_spectrum(&scheme, numeric, cutoff, conv)?,
        Command::Ladders { scheme, cutoff } => cmd_ladders(&scheme, cutoff, conv)?,
        Command::Verify { suite } => return cmd_verify(suite, conv),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
