use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use hyperee::bounds::{check_bounds_with, BoundReport, SumBoundVariant, SuiteOptions};
use hyperee::catalog::{unicyclic_catalog, unicyclic_exhaustive};
use hyperee::extremal::{verify_extremal, ExtremalReport, Scope};
use hyperee::families::random_uniform;
use hyperee::format::{parse_auto, to_json, to_text};
use hyperee::matrix::{trace_power, IntMatrix};
use hyperee::orderings::{verify_ordering_lemmas, OrderingReport};
use hyperee::report::{bounds_csv, fmt_sig, round_sig, spectrum_csv};
use hyperee::{estrada_index, spectrum, FamilySpec, Hypergraph, Uniformity};

#[derive(Parser)]
#[command(name = "hyperee", version, about = "Spectra, Estrada index and bound checks for k-uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct Common {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized sweeps.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    AsWritten,
    ThetaPlusOne,
}

impl From<Variant> for SumBoundVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::AsWritten => SumBoundVariant::AsWritten,
            Variant::ThetaPlusOne => SumBoundVariant::ThetaPlusOne,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScopeArg {
    Catalog,
    Exhaustive,
}

impl From<ScopeArg> for Scope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::Catalog => Scope::Catalog,
            ScopeArg::Exhaustive => Scope::Exhaustive,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family instance, e.g. `cm:3:4,0`, `cycle:3,3`, `fano`.
    Gen { family: String },
    /// Eigenvalues, Estrada index, energy, θ and spectral moments.
    Spectrum {
        /// Hypergraph file or family grammar.
        input: String,
        /// Highest spectral moment M_t = tr(A^t) to report (exact integers).
        #[arg(long, default_value_t = 8)]
        smax: usize,
    },
    /// Run the bound checkers on one hypergraph.
    Check {
        input: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 2)]
        t: usize,
        /// Add the matrix-level t-largest bound in this form.
        #[arg(long, value_enum)]
        variant: Option<Variant>,
        /// Sweep every t and both matrix-level forms.
        #[arg(long)]
        full: bool,
    },
    /// Verification suites.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// List unicyclic k-uniform hypergraphs with `nover` edges by Estrada index.
    Enumerate {
        #[arg(long)]
        nover: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ScopeArg::Catalog)]
        scope: ScopeArg,
    },
    /// k-uniform complement.
    Complement {
        input: String,
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Suite {
    /// Strict Estrada-index orderings between unicyclic hypergraphs.
    Orderings {
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Largest vertex count of any instance.
        #[arg(long, default_value_t = 16)]
        budget: usize,
    },
    /// Maximum and second-maximum Estrada index among unicyclic hypergraphs.
    Extremal {
        #[arg(long)]
        nover: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ScopeArg::Catalog)]
        scope: ScopeArg,
    },
    /// All bound checkers over seeded random k-uniform hypergraphs.
    Bounds {
        /// Uniformity; drawn from 2..=4 per instance when omitted.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Largest order of a random instance.
        #[arg(long, default_value_t = 12)]
        nmax: usize,
    },
}

/// Input problems exit with 2, failed checks with 1.
enum Failure {
    Input(String),
    Check(String),
}

impl From<hyperee::Error> for Failure {
    fn from(e: hyperee::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn load(input: &str) -> Result<(Hypergraph, Option<usize>), Failure> {
    let path = Path::new(input);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{input}: {e}")))?;
        let h = parse_auto(&text).map_err(|e| Failure::Input(format!("{input}: {e}")))?;
        let k = match h.uniformity() {
            Uniformity::Uniform(k) => Some(k),
            _ => None,
        };
        return Ok((h, k));
    }
    match FamilySpec::parse(input) {
        Ok(spec) => Ok((spec.build()?, spec.k())),
        Err(e) if input.contains(['/', '.']) => {
            Err(Failure::Input(format!("{input}: no such file ({e})")))
        }
        Err(e) => Err(Failure::Input(format!("{input}: {e}"))),
    }
}

fn uniformity(h: &Hypergraph, flag: Option<usize>, inferred: Option<usize>) -> Result<usize, Failure> {
    match flag.or(inferred) {
        Some(k) => {
            h.require_uniform(k)?;
            Ok(k)
        }
        None => Err(Failure::Input(
            "cannot infer k (edgeless or mixed input); pass --k".into(),
        )),
    }
}

fn emit(common: &Common, body: &str) -> Outcome {
    match &common.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn gen(common: &Common, family: &str) -> Outcome {
    let spec = FamilySpec::parse(family)?;
    let h = spec.build()?;
    let as_json = match &common.out {
        Some(p) => p.extension().is_some_and(|e| e == "json"),
        None => common.format == Format::Json,
    };
    let body = if as_json {
        format!("{}\n", to_json(&h))
    } else {
        to_text(&h)
    };
    emit(common, &body)
}

/// `M_t` for `t = 1..=smax`, exact as `tr(Aᵗ)`; falls back to the
/// eigenvalue sum once the integer trace overflows.
fn moments(h: &Hypergraph, s: &hyperee::Spectrum, smax: usize) -> Vec<(usize, Value, String)> {
    let a = IntMatrix::adjacency(h);
    (1..=smax)
        .map(|t| match trace_power(&a, t) {
            Ok(exact) => {
                let value = i64::try_from(exact).map_or_else(|_| json!(exact.to_string()), |v| json!(v));
                (t, value, exact.to_string())
            }
            Err(_) => {
                let x = s.moment(t as u32);
                (t, json!(round_sig(x)), fmt_sig(x))
            }
        })
        .collect()
}

fn spectrum_cmd(common: &Common, input: &str, smax: usize) -> Outcome {
    let (h, _) = load(input)?;
    let s = spectrum(&h)?;
    let summary = s.summary([])?;
    let moments = moments(&h, &s, smax);
    let values = s.display_values();
    let body = match common.format {
        Format::Csv => spectrum_csv(&s),
        Format::Json => pretty(&json!({
            "n": h.n(),
            "m": h.m(),
            "eigenvalues": values.iter().map(|&x| round_sig(x)).collect::<Vec<_>>(),
            "lambda1": round_sig(summary.lambda1),
            "estrada": round_sig(summary.estrada),
            "energy": round_sig(summary.energy),
            "theta": summary.negative_count,
            "distinct": summary.distinct_count,
            "moments": moments.iter().map(|(t, v, _)| json!({"t": t, "value": v})).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "n {}", h.n());
            let _ = writeln!(out, "m {}", h.m());
            let shown: Vec<String> = values.iter().map(|&x| fmt_sig(x)).collect();
            let _ = writeln!(out, "eigenvalues {}", shown.join(" "));
            let _ = writeln!(out, "lambda1 {}", fmt_sig(summary.lambda1));
            let _ = writeln!(out, "estrada {}", fmt_sig(summary.estrada));
            let _ = writeln!(out, "energy {}", fmt_sig(summary.energy));
            let _ = writeln!(out, "theta {}", summary.negative_count);
            let _ = writeln!(out, "distinct {}", summary.distinct_count);
            for (t, _, shown) in &moments {
                let _ = writeln!(out, "moment {t} {shown}");
            }
            out
        }
    };
    emit(common, &body)
}

fn bounds_text(reports: &[BoundReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let t = r.t.map(|t| format!(" t={t}")).unwrap_or_default();
        let _ = writeln!(
            out,
            "{}{t}: lhs {} rhs {} slack {} {}{}",
            r.bound_id,
            fmt_sig(r.lhs),
            fmt_sig(r.rhs),
            fmt_sig(r.slack),
            if r.holds { "holds" } else { "VIOLATED" },
            if r.equality { " (equality)" } else { "" }
        );
    }
    out
}

fn summary_line(what: &str, failed: usize, total: usize) -> Outcome {
    eprintln!("{}/{total} {what} hold", total - failed);
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check(format!("{failed} of {total} {what} failed")))
    }
}

fn check(common: &Common, input: &str, k: Option<usize>, t: usize, variant: Option<Variant>, full: bool) -> Outcome {
    let (h, inferred) = load(input)?;
    let k = uniformity(&h, k, inferred)?;
    let mut reports = check_bounds_with(
        &h,
        k,
        SuiteOptions {
            t,
            all_t: full,
            matrix_variants: full,
        },
    )?;
    if let (Some(v), false) = (variant, full) {
        let a = hyperee::DenseSymmetricMatrix::adjacency(&h);
        let mut r = hyperee::bounds::check_sum_t_largest_matrix(&a, t, v.into())?;
        r.m = h.m();
        reports.push(r);
        reports.sort_by(|x, y| x.bound_id.cmp(&y.bound_id).then(x.t.cmp(&y.t)));
    }
    let body = match common.format {
        Format::Json => pretty(&to_value(&reports)),
        Format::Csv => bounds_csv(&reports),
        Format::Text => bounds_text(&reports),
    };
    emit(common, &body)?;
    let failed = reports.iter().filter(|r| !r.holds).count();
    summary_line("bounds", failed, reports.len())
}

fn orderings(common: &Common, k: usize, budget: usize) -> Outcome {
    let reports: Vec<OrderingReport> = verify_ordering_lemmas(k, budget)?;
    let body = match common.format {
        Format::Json => pretty(&to_value(&reports)),
        Format::Csv => {
            let mut out = String::from("lemma_id,left,right,ee_left,ee_right,gap,strict_holds\n");
            for r in &reports {
                for i in &r.instances {
                    let _ = writeln!(
                        out,
                        "{},\"{}\",\"{}\",{},{},{},{}",
                        r.lemma_id,
                        i.left,
                        i.right,
                        fmt_sig(i.ee_left),
                        fmt_sig(i.ee_right),
                        fmt_sig(i.gap),
                        i.strict_holds
                    );
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in &reports {
                let gap = r.min_gap().map(fmt_sig).unwrap_or_else(|| "-".into());
                let _ = writeln!(
                    out,
                    "{}: {} instance(s), {}, min gap {gap}",
                    r.lemma_id,
                    r.instances.len(),
                    if r.all_strict() { "all strict" } else { "NOT all strict" }
                );
                for i in r.failures() {
                    let _ = writeln!(out, "  failed: {} vs {} gap {}", i.left, i.right, fmt_sig(i.gap));
                }
            }
            out
        }
    };
    emit(common, &body)?;
    let total: usize = reports.iter().map(|r| r.instances.len()).sum();
    let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
    summary_line("ordering instances", failed, total)
}

fn extremal_text(r: &ExtremalReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n {} k {} edges {} scope {} ({} candidates)", r.n, r.k, r.n_over, r.scope, r.candidates);
    let _ = writeln!(out, "scope note: {}", r.scope_note);
    for (rank, c) in r.ranking.iter().enumerate() {
        let mut labels = c.labels.iter().take(4).cloned().collect::<Vec<_>>().join(", ");
        if c.labels.len() > 4 {
            let _ = write!(labels, ", ... ({} total)", c.labels.len());
        }
        let _ = writeln!(out, "#{} EE {} diameter {} [{labels}]", rank + 1, fmt_sig(c.ee), c.diameter);
    }
    let _ = writeln!(
        out,
        "max={} {} second={} {} diameters {}",
        r.expected_max,
        if r.max_ok { "ok" } else { "FAILED" },
        r.expected_second,
        if r.second_ok { "ok" } else { "FAILED" },
        if r.diameters_ok { "ok" } else { "FAILED" }
    );
    for f in &r.failures {
        let _ = writeln!(out, "failure: {}", f.message);
        if let Some(h) = &f.hypergraph {
            for line in h.lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
    }
    out
}

fn extremal(common: &Common, nover: usize, k: usize, scope: ScopeArg) -> Outcome {
    let r = verify_extremal(nover, k, scope.into())?;
    let body = match common.format {
        Format::Json => pretty(&to_value(&r)),
        Format::Csv => {
            let mut out = String::from("rank,ee,diameter,labels\n");
            for (i, c) in r.ranking.iter().enumerate() {
                let _ = writeln!(out, "{},{},{},\"{}\"", i + 1, fmt_sig(c.ee), c.diameter, c.labels.join(";"));
            }
            out
        }
        Format::Text => extremal_text(&r),
    };
    emit(common, &body)?;
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} extremal check(s) failed", r.failures.len())))
    }
}

fn bound_sweep(common: &Common, k: Option<usize>, count: usize, nmax: usize) -> Outcome {
    if let Some(k) = k {
        if k < 2 || k > nmax {
            return Err(Failure::Input(format!("need 2 <= k <= nmax, got k={k}, nmax={nmax}")));
        }
    } else if nmax < 4 {
        return Err(Failure::Input(format!("random uniformity needs nmax >= 4, got {nmax}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(common.seed);
    let opts = SuiteOptions {
        all_t: true,
        matrix_variants: true,
        ..Default::default()
    };
    let mut all = Vec::new();
    for _ in 0..count {
        let k = k.unwrap_or_else(|| rng.gen_range(2..=4));
        let n = rng.gen_range(k..=nmax);
        let p = rng.gen_range(0.0..0.6);
        let h = random_uniform(n, k, p, &mut rng)?;
        all.extend(check_bounds_with(&h, k, opts)?);
    }
    let failed: Vec<&BoundReport> = all.iter().filter(|r| !r.holds).collect();
    let body = match common.format {
        Format::Csv => bounds_csv(&all),
        Format::Json => pretty(&json!({
            "seed": common.seed,
            "instances": count,
            "reports": all.len(),
            "failures": to_value(&failed),
        })),
        Format::Text => {
            let mut ids: Vec<&str> = all.iter().map(|r| r.bound_id.as_str()).collect();
            ids.sort_unstable();
            ids.dedup();
            let mut out = String::new();
            let _ = writeln!(out, "seed {} instances {count} reports {}", common.seed, all.len());
            for id in ids {
                let of_id: Vec<&BoundReport> = all.iter().filter(|r| r.bound_id == id).collect();
                let min_slack = of_id.iter().map(|r| r.slack).min_by(f64::total_cmp).unwrap_or(0.0);
                let bad = of_id.iter().filter(|r| !r.holds).count();
                let _ = writeln!(out, "{id}: {} report(s), {bad} violated, min slack {}", of_id.len(), fmt_sig(min_slack));
            }
            out
        }
    };
    emit(common, &body)?;
    summary_line("bound reports", failed.len(), all.len())
}

fn enumerate(common: &Common, nover: usize, k: usize, scope: ScopeArg) -> Outcome {
    let entries = match Scope::from(scope) {
        Scope::Catalog => unicyclic_catalog(nover, k)?,
        Scope::Exhaustive => unicyclic_exhaustive(nover, k)?,
    };
    let mut rows = Vec::with_capacity(entries.len());
    for e in &entries {
        rows.push((e, estrada_index(&e.hypergraph)?, e.hypergraph.diameter()?));
    }
    rows.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.label.cmp(&b.0.label)));
    let body = match common.format {
        Format::Json => pretty(&Value::Array(
            rows.iter()
                .map(|(e, ee, d)| {
                    json!({
                        "label": e.label,
                        "shape": to_value(&e.shape),
                        "ee": round_sig(*ee),
                        "diameter": d,
                        "hypergraph": to_value(&e.hypergraph),
                    })
                })
                .collect(),
        )),
        Format::Csv => {
            let mut out = String::from("label,shape,ee,diameter\n");
            for (e, ee, d) in &rows {
                let shape = to_value(&e.shape);
                let _ = writeln!(out, "\"{}\",{},{},{d}", e.label, shape.as_str().unwrap_or(""), fmt_sig(*ee));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (e, ee, d) in &rows {
                let _ = writeln!(out, "{} EE {} diameter {d}", e.label, fmt_sig(*ee));
            }
            out
        }
    };
    emit(common, &body)
}

fn complement(common: &Common, input: &str, k: Option<usize>) -> Outcome {
    let (h, inferred) = load(input)?;
    let k = uniformity(&h, k, inferred)?;
    let c = h.complement_uniform(k)?;
    let as_json = match &common.out {
        Some(p) => p.extension().is_some_and(|e| e == "json"),
        None => common.format == Format::Json,
    };
    let body = if as_json {
        format!("{}\n", to_json(&c))
    } else {
        to_text(&c)
    };
    emit(common, &body)
}

fn run(cli: Cli) -> Outcome {
    let common = &cli.common;
    match cli.command {
        Command::Gen { family } => gen(common, &family),
        Command::Spectrum { input, smax } => spectrum_cmd(common, &input, smax),
        Command::Check { input, k, t, variant, full } => check(common, &input, k, t, variant, full),
        Command::Verify { suite } => match suite {
            Suite::Orderings { k, budget } => orderings(common, k, budget),
            Suite::Extremal { nover, k, scope } => extremal(common, nover, k, scope),
            Suite::Bounds { k, count, nmax } => bound_sweep(common, k, count, nmax),
        },
        Command::Enumerate { nover, k, scope } => enumerate(common, nover, k, scope),
        Command::Complement { input, k } => complement(common, &input, k),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
