//! Command-line front end. [`run`] parses arguments, dispatches to
//! `superbott-core`, and writes a table or canonical JSON.
//!
//! Exit codes: 0 success, 1 malformed input, 2 violated precondition
//! (error JSON on stderr), 3 `--verify` found a mismatch.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use superbott_core::characters::{lr_coefficient, weyl_dim};
use superbott_core::cohomology::{
    e1_page_detailed, hypothesis_case, main_theorem_char, partial_flag_char, partial_flag_hilbert,
    structure_sheaf_hilbert, verify_main_theorem_with, DEFAULT_MAX_TERMS,
};
use superbott_core::qseries::ci_codim;
use superbott_core::superschur::{rational_schur_char, super_schur_decompose};
use superbott_core::{
    BundleSpec, E1Options, Error, FlagSpec, GLWeight, GradedCharacter, HilbertSeries, Partition, SuperDim,
    VirtualCharacter,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

pub const MAX_TERMS_ENV: &str = "SUPERBOTT_MAX_TERMS";

#[derive(Parser, Debug)]
#[command(name = "superbott", version, about = "Characters and cohomology on super Grassmannians")]
struct Cli {
    /// Emit canonical JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for term expansion (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Character of the rational Schur functor S_[lambda;mu](C^{m|n}).
    CharRational {
        #[arg(long, value_parser = parse_pair)]
        dim: (usize, usize),
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value = "[]")]
        mu: Partition,
    },
    /// Character of the super Schur functor S_lambda(C^{m|n}).
    CharSuper {
        #[arg(long, value_parser = parse_pair)]
        dim: (usize, usize),
        #[arg(long)]
        lambda: Partition,
    },
    /// Closed-form cohomology of S_alpha Q (x) S_beta(R*).
    Cohom {
        #[command(flatten)]
        bundle: BundleArgs,
        /// Also compute the E1 page and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Compare the E1 page with the closed form.
    Verify {
        #[command(flatten)]
        bundle: BundleArgs,
    },
    /// E1 page of the J-adic spectral sequence, term by term.
    E1 {
        #[command(flatten)]
        bundle: BundleArgs,
    },
    /// Hilbert series of the structure sheaf cohomology of Gr(p|q, m|n).
    HilbertGrass {
        #[arg(long, value_parser = parse_pair)]
        grass: (usize, usize),
        #[arg(long, value_parser = parse_pair)]
        dim: (usize, usize),
    },
    /// Hilbert series (and optionally the bundle character) on a partial flag variety.
    HilbertFlag {
        /// One step p_i,q_i of the flag; repeat in increasing order.
        #[arg(long = "step", value_parser = parse_pair, required = true)]
        steps: Vec<(usize, usize)>,
        #[arg(long, value_parser = parse_pair)]
        dim: (usize, usize),
        #[arg(long)]
        alpha: Option<Partition>,
        #[arg(long)]
        beta: Option<Partition>,
    },
    /// Littlewood-Richardson coefficient c^nu_{lambda,mu}.
    Lr {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
    },
    /// Codimension a1*a2 + c1*a2 + a1*c2 of the complete-intersection locus.
    Codim {
        a1: usize,
        a2: usize,
        b: usize,
        c1: usize,
        c2: usize,
    },
}

#[derive(Args, Debug)]
struct BundleArgs {
    #[arg(long, value_parser = parse_pair)]
    grass: (usize, usize),
    #[arg(long, value_parser = parse_pair)]
    dim: (usize, usize),
    #[arg(long, default_value = "[]")]
    alpha: Partition,
    #[arg(long, default_value = "[]")]
    beta: Partition,
}

impl BundleArgs {
    fn spec(&self) -> Result<BundleSpec, Error> {
        BundleSpec::new(
            self.grass.0,
            self.grass.1,
            SuperDim::new(self.dim.0, self.dim.1),
            self.alpha.clone(),
            self.beta.clone(),
        )
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected two comma-separated integers, got {s:?}"))?;
    let a = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    Ok((a, b))
}

enum Failure {
    Malformed(String),
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut buf = Vec::new();
    let result = match cli.jobs {
        Some(0) => Err(Failure::Malformed("--jobs must be at least 1".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, &mut buf)),
            Err(e) => Err(Failure::Malformed(format!("cannot start {n} worker threads: {e}"))),
        },
        None => dispatch(&cli, &mut buf),
    };
    let result = match out.write_all(&buf).and_then(|_| out.flush()) {
        Ok(()) => result,
        Err(e) => Err(Failure::Io(e)),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Malformed(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_MALFORMED
        }
        Err(Failure::Core(e)) if e.is_malformed_input() => {
            let _ = writeln!(err, "error: {e}");
            EXIT_MALFORMED
        }
        Err(Failure::Core(e)) => {
            let body = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
            let _ = writeln!(err, "{}", canonical(&body));
            EXIT_PRECONDITION
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_MALFORMED
        }
    }
}

fn max_terms() -> Result<u128, Failure> {
    match std::env::var(MAX_TERMS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Malformed(format!("{MAX_TERMS_ENV} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_TERMS),
    }
}

/// Pretty-printed JSON with sorted keys; parsing and re-emitting is the identity.
pub fn canonical(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values built here always serialize")
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::CharRational { dim, lambda, mu } => {
            let d = SuperDim::new(dim.0, dim.1);
            let c = rational_schur_char(lambda, mu, d)?;
            let header = format!("S_[{lambda};{mu}](C^{{{d}}})");
            emit_character(out, json, &header, &c)?;
        }
        Command::CharSuper { dim, lambda } => {
            let d = SuperDim::new(dim.0, dim.1);
            let c = super_schur_decompose(lambda, d);
            let header = format!("S_{lambda}(C^{{{d}}})");
            emit_character(out, json, &header, &c)?;
        }
        Command::Cohom { bundle, verify } => {
            let spec = bundle.spec()?;
            if *verify {
                return run_verify(&spec, json, out);
            }
            let h = main_theorem_char(&spec)?;
            if json {
                let v = json!({
                    "bundle": bundle_json(&spec),
                    "case": hypothesis_case(&spec).to_string(),
                    "cohomology": graded_json(&h),
                });
                writeln!(out, "{}", canonical(&v))?;
            } else {
                writeln!(out, "{spec}  [{}]", hypothesis_case(&spec))?;
                write_graded(out, &h)?;
            }
        }
        Command::Verify { bundle } => {
            let spec = bundle.spec()?;
            return run_verify(&spec, json, out);
        }
        Command::E1 { bundle } => {
            let spec = bundle.spec()?;
            let page = e1_page_detailed(&spec, E1Options { max_terms: max_terms()? })?;
            let flag = page.possibly_nondegenerate();
            if json {
                let terms: Vec<Value> = page
                    .terms
                    .iter()
                    .map(|t| {
                        json!({
                            "exterior_degree": t.exterior_degree.to_string(),
                            "degree": t.degree.to_string(),
                            "w0": weight_json(&t.w0),
                            "w1": weight_json(&t.w1),
                            "mult": t.mult.to_string(),
                            "dim": (weyl_dim(&t.w0) * weyl_dim(&t.w1)).to_string(),
                        })
                    })
                    .collect();
                let v = json!({
                    "bundle": bundle_json(&spec),
                    "case": hypothesis_case(&spec).to_string(),
                    "possibly_nondegenerate": flag,
                    "terms": terms,
                    "total": graded_json(&page.total),
                });
                writeln!(out, "{}", canonical(&v))?;
            } else {
                writeln!(out, "{spec}  [{}]", hypothesis_case(&spec))?;
                writeln!(out, "{:>4} {:>4}  {:<28} {:>6} {:>8}", "ext", "deg", "weight", "mult", "dim")?;
                for t in &page.terms {
                    let dim = weyl_dim(&t.w0) * weyl_dim(&t.w1);
                    let w = format!("{}|{}", t.w0, t.w1);
                    writeln!(out, "{:>4} {:>4}  {:<28} {:>6} {:>8}", t.exterior_degree, t.degree, w, t.mult, dim)?;
                }
                if flag {
                    writeln!(out, "odd-degree terms present: spectral sequence possibly nondegenerate")?;
                }
            }
        }
        Command::HilbertGrass { grass, dim } => {
            let spec = BundleSpec::new(
                grass.0,
                grass.1,
                SuperDim::new(dim.0, dim.1),
                Partition::empty(),
                Partition::empty(),
            )?;
            let h = structure_sheaf_hilbert(&spec)?;
            emit_series(out, json, &h)?;
        }
        Command::HilbertFlag {
            steps,
            dim,
            alpha,
            beta,
        } => {
            let with_bundle = alpha.is_some() || beta.is_some();
            let flag = FlagSpec::new(
                steps.clone(),
                SuperDim::new(dim.0, dim.1),
                alpha.clone().unwrap_or_default(),
                beta.clone().unwrap_or_default(),
            )?;
            let h = partial_flag_hilbert(&flag)?;
            if !with_bundle {
                emit_series(out, json, &h)?;
            } else {
                let c = partial_flag_char(&flag)?;
                if json {
                    let v = json!({ "hilbert": series_json(&h), "cohomology": graded_json(&c) });
                    writeln!(out, "{}", canonical(&v))?;
                } else {
                    writeln!(out, "{h}")?;
                    write_graded(out, &c)?;
                }
            }
        }
        Command::Lr { lambda, mu, nu } => {
            let c = lr_coefficient(lambda, mu, nu);
            if json {
                writeln!(out, "{}", canonical(&json!({ "coefficient": c.to_string() })))?;
            } else {
                writeln!(out, "{c}")?;
            }
        }
        Command::Codim { a1, a2, b, c1, c2 } => {
            let c = ci_codim(*a1, *a2, *b, *c1, *c2)?;
            if json {
                writeln!(out, "{}", canonical(&json!({ "codim": c.to_string() })))?;
            } else {
                writeln!(out, "{c}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn run_verify(spec: &BundleSpec, json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let report = verify_main_theorem_with(spec, E1Options { max_terms: max_terms()? })?;
    if json {
        let diffs: Vec<Value> = report
            .diffs
            .iter()
            .map(|(k, c)| json!({ "degree": k.to_string(), "terms": character_json(c) }))
            .collect();
        let v = json!({
            "bundle": bundle_json(spec),
            "case": report.case.to_string(),
            "closed_form": graded_json(&report.closed_form),
            "diffs": diffs,
            "e1": graded_json(&report.e1),
            "passed": report.passed(),
        });
        writeln!(out, "{}", canonical(&v))?;
    } else {
        writeln!(out, "{spec}  [{}]", report.case)?;
        write_graded(out, &report.closed_form)?;
        if report.passed() {
            writeln!(out, "verify: E1 page equals the closed form")?;
        } else {
            writeln!(out, "verify: MISMATCH (E1 minus closed form)")?;
            for (k, c) in &report.diffs {
                writeln!(out, "H^{k}:")?;
                write_character(out, c)?;
            }
        }
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_MISMATCH })
}

fn weight_json(w: &GLWeight) -> Value {
    Value::from(w.entries().to_vec())
}

fn character_json(c: &VirtualCharacter) -> Value {
    Value::Array(
        c.iter()
            .map(|(w0, w1, k)| {
                json!({
                    "w0": weight_json(w0),
                    "w1": weight_json(w1),
                    "mult": k.to_string(),
                    "dim": (weyl_dim(w0) * weyl_dim(w1)).to_string(),
                })
            })
            .collect(),
    )
}

fn graded_json(g: &GradedCharacter) -> Value {
    Value::Array(
        g.iter()
            .map(|(k, c)| {
                json!({
                    "degree": k.to_string(),
                    "dim": c.total_dim().to_string(),
                    "terms": character_json(c),
                })
            })
            .collect(),
    )
}

fn series_json(h: &HilbertSeries) -> Value {
    Value::Array(h.coeffs().iter().map(|c| Value::from(c.to_string())).collect())
}

fn bundle_json(spec: &BundleSpec) -> Value {
    json!({
        "alpha": spec.alpha.parts().to_vec(),
        "beta": spec.beta.parts().to_vec(),
        "dim": [spec.d.m, spec.d.n],
        "grass": [spec.p, spec.q],
    })
}

fn write_character(out: &mut dyn Write, c: &VirtualCharacter) -> std::io::Result<()> {
    for (w0, w1, k) in c.iter() {
        let dim: BigInt = weyl_dim(w0) * weyl_dim(w1);
        writeln!(out, "  {:<28} {:>6} {:>8}", format!("{w0}|{w1}"), k, dim)?;
    }
    Ok(())
}

fn write_graded(out: &mut dyn Write, g: &GradedCharacter) -> std::io::Result<()> {
    if g.is_zero() {
        return writeln!(out, "(zero)");
    }
    for (k, c) in g.iter() {
        writeln!(out, "H^{k}:  dim {}", c.total_dim())?;
        write_character(out, c)?;
    }
    Ok(())
}

fn emit_character(out: &mut dyn Write, json: bool, header: &str, c: &VirtualCharacter) -> Result<(), Failure> {
    if json {
        let v = json!({ "character": character_json(c), "dim": c.total_dim().to_string() });
        writeln!(out, "{}", canonical(&v))?;
    } else {
        writeln!(out, "{header}  dim {}", c.total_dim())?;
        write_character(out, c)?;
    }
    Ok(())
}

fn emit_series(out: &mut dyn Write, json: bool, h: &HilbertSeries) -> Result<(), Failure> {
    if json {
        let v = json!({ "coefficients": series_json(h), "value_at_one": h.eval_at_one().to_string() });
        writeln!(out, "{}", canonical(&v))?;
    } else {
        writeln!(out, "{h}")?;
    }
    Ok(())
}
