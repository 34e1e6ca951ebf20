use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use seqcyclic::claims::{self, ClaimReport, Params, VerifyOptions};
use seqcyclic::code::{CodeRecord, DEFAULT_BUDGET};
use seqcyclic::design::{classify_subset, singer_difference_set, SingerVariant};
use seqcyclic::sequence::{
    characteristic_sequence, dickson_sequence, monomial_sequence, polynomial_sequence, DicksonKind,
};
use seqcyclic::{
    berlekamp_massey, min_distance, sphere_packing_check, BaseField, CosetTable, CyclicCode,
    FieldCtx, PeriodicSequence,
};

/// Cyclic codes from periodic sequences: construction, analysis and claim checks.
#[derive(Parser, Debug)]
#[command(name = "seqcyclic", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Codeword budget for distance computations.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    budget: u64,
    /// Write output to this file instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe GF((p^s)^m): moduli, primitive element, n.
    Field(FieldArgs),
    /// q-cyclotomic cosets modulo n.
    Cosets {
        /// Modulus.
        #[arg(short)]
        n: u64,
        /// Multiplier, coprime to n.
        #[arg(short)]
        q: u64,
        /// Also report ν for each leader (q = 2 only).
        #[arg(short)]
        m: Option<u32>,
    },
    /// Build a cyclic code from a sequence source and report [n, k, d].
    Code(SourceArgs),
    /// Emit a sequence in the sequence file format.
    Seq(SourceArgs),
    /// Classify a subset of Z_n, or build a Singer set.
    Designs(DesignArgs),
    /// Check a registered claim over a grid of parameters.
    Verify(VerifyArgs),
    /// List registered claims.
    ListClaims,
}

#[derive(Args, Debug)]
struct FieldArgs {
    /// Characteristic.
    #[arg(short, default_value_t = 2)]
    p: u64,
    /// Base field degree: q = p^s.
    #[arg(short, default_value_t = 1)]
    s: u32,
    /// Extension degree over GF(q).
    #[arg(short, default_value_t = 1)]
    m: u32,
}

#[derive(Args, Debug)]
struct SourceArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Read the sequence from a file.
    #[arg(long, group = "source")]
    seq_file: Option<PathBuf>,
    /// Subset of Z_n, e.g. "0,3,5,6". `code` builds the classical code
    /// gcd(x^n − 1, Σ_{i∈D} x^i); `seq` emits the characteristic sequence.
    #[arg(long, group = "source", requires = "n")]
    subset: Option<String>,
    /// Length of the subset's ambient group Z_n.
    #[arg(short)]
    n: Option<u64>,
    /// Trace sequence of x^E.
    #[arg(long, group = "source")]
    monomial: Option<u64>,
    /// Trace sequence of a Dickson polynomial: KIND,H,A with KIND 1 or 2 and
    /// A a canonical element encoding.
    #[arg(long, group = "source")]
    dickson: Option<String>,
    /// Trace sequence of f given by coefficients over GF(q^m), lowest first.
    #[arg(long, group = "source")]
    poly: Option<String>,
}

#[derive(Args, Debug)]
struct DesignArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Subset of Z_n to classify.
    #[arg(long, requires = "n", conflicts_with = "singer")]
    subset: Option<String>,
    /// Modulus of Z_n.
    #[arg(short)]
    n: Option<u64>,
    /// Build a Singer set from traces of powers of α.
    #[arg(long, value_enum)]
    singer: Option<Singer>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Singer {
    /// {i : Tr(α^i) = 1} over GF(2).
    TraceOne,
    /// {i < (q^m−1)/(q−1) : Tr(α^i) = 0}.
    Projective,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Claim id, or a group id such as dickson-d5.
    claim: String,
    /// Values are comma-separated lists or inclusive ranges "lo..hi".
    #[arg(short, default_value = "2")]
    p: String,
    /// Base field degree: q = p^s.
    #[arg(short, default_value = "1")]
    s: String,
    /// Extension degree over GF(q).
    #[arg(short)]
    m: String,
    /// Family parameter h.
    #[arg(long)]
    h: Option<String>,
    /// Exponent κ of the planar x^(q^κ+1) family.
    #[arg(long)]
    kappa: Option<String>,
    /// Exponent u of the Dickson D_(p^u) family.
    #[arg(short)]
    u: Option<String>,
    /// Canonical encodings of a ∈ GF(q^m).
    #[arg(short)]
    a: Option<String>,
    /// Evaluate points outside the hypotheses; verdicts become exploratory.
    #[arg(long)]
    no_hypothesis_check: bool,
    /// Include wall time in the output.
    #[arg(long)]
    timing: bool,
}

enum Outcome {
    Ok,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut out = String::new();
    let result = run(&cli, &mut out);
    if let Err(e) = emit(&cli, &out) {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn emit(cli: &Cli, out: &str) -> Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, out).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().write_all(out.as_bytes())?;
            Ok(())
        }
    }
}

fn run(cli: &Cli, out: &mut String) -> Result<Outcome> {
    match &cli.command {
        Command::Field(args) => cmd_field(cli.format, args, out)?,
        Command::Cosets { n, q, m } => cmd_cosets(cli.format, *n, *q, *m, out)?,
        Command::Code(args) => cmd_code(cli.format, cli.budget, args, out)?,
        Command::Seq(args) => cmd_seq(cli.format, args, out)?,
        Command::Designs(args) => cmd_designs(cli.format, args, out)?,
        Command::Verify(args) => return cmd_verify(cli.format, cli.budget, args, out),
        Command::ListClaims => cmd_list(cli.format, out)?,
    }
    Ok(Outcome::Ok)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn push_json(out: &mut String, value: &impl serde::Serialize) -> Result<()> {
    out.push_str(&serde_json::to_string(value)?);
    out.push('\n');
    Ok(())
}

fn cmd_field(format: Format, args: &FieldArgs, out: &mut String) -> Result<()> {
    let ctx = FieldCtx::new(args.p, args.s, args.m)?;
    let base = join(ctx.base_modulus(), ",");
    let ext = ctx.ext_modulus().to_text();
    let alpha = ctx.alpha().enc();
    match format {
        Format::Json => push_json(
            out,
            &json!({
                "p": ctx.p(), "s": ctx.s(), "m": ctx.m(), "q": ctx.q(), "n": ctx.n(),
                "base_modulus": ctx.base_modulus(), "modulus": ext, "alpha": alpha,
            }),
        )?,
        Format::Csv => {
            out.push_str("p,s,m,q,n,base_modulus,modulus,alpha\n");
            out.push_str(&format!(
                "{},{},{},{},{},\"{base}\",\"{ext}\",{alpha}\n",
                ctx.p(),
                ctx.s(),
                ctx.m(),
                ctx.q(),
                ctx.n()
            ));
        }
        Format::Text => {
            out.push_str(&format!(
                "GF(({}^{})^{}) q={} n={}\n",
                ctx.p(),
                ctx.s(),
                ctx.m(),
                ctx.q(),
                ctx.n()
            ));
            out.push_str(&format!("base modulus: {base}\n"));
            out.push_str(&format!("modulus: {ext}\n"));
            out.push_str(&format!("alpha: {alpha}\n"));
        }
    }
    Ok(())
}

fn cmd_cosets(format: Format, n: u64, q: u64, m: Option<u32>, out: &mut String) -> Result<()> {
    let table = CosetTable::new(n, q)?;
    let mut rows = Vec::new();
    for (leader, members) in table.iter() {
        let nu = match m {
            Some(m) => Some(table.nu(leader, m)?),
            None => None,
        };
        rows.push((leader, members.to_vec(), nu));
    }
    match format {
        Format::Json => {
            let cosets: Vec<_> = rows
                .iter()
                .map(|(l, c, nu)| json!({"leader": l, "size": c.len(), "members": c, "nu": nu}))
                .collect();
            push_json(out, &json!({"n": n, "q": q, "cosets": cosets}))?;
        }
        Format::Csv => {
            out.push_str("leader,size,members,nu\n");
            for (l, c, nu) in &rows {
                let nu = nu.map(|v| v.to_string()).unwrap_or_default();
                out.push_str(&format!("{l},{},\"{}\",{nu}\n", c.len(), join(c, ",")));
            }
        }
        Format::Text => {
            for (l, c, nu) in &rows {
                out.push_str(&format!("C_{l} = {{{}}} size {}", join(c, ","), c.len()));
                if let Some(nu) = nu {
                    out.push_str(&format!(" nu {nu}"));
                }
                out.push('\n');
            }
        }
    }
    Ok(())
}

fn parse_list(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .with_context(|| format!("bad integer {t:?}"))
        })
        .collect()
}

/// Builds the sequence named by the source flags, with the extension degree
/// it lives in.
fn build_sequence(args: &SourceArgs) -> Result<(PeriodicSequence, u32)> {
    let f = &args.field;
    let ext = || FieldCtx::new(f.p, f.s, f.m);
    if let Some(path) = &args.seq_file {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        return Ok((PeriodicSequence::parse(&text)?, f.m));
    }
    if let Some(subset) = &args.subset {
        let n = args.n.expect("clap enforces -n");
        let set: BTreeSet<u64> = parse_list(subset)?.into_iter().collect();
        let seq = characteristic_sequence(&set, n, BaseField::new(f.p, f.s)?)?;
        return Ok((seq, f.m));
    }
    if let Some(e) = args.monomial {
        return Ok((monomial_sequence(&ext()?, e), f.m));
    }
    if let Some(text) = &args.dickson {
        let parts = parse_list(text)?;
        let [kind, h, a] = parts[..] else {
            bail!("--dickson expects KIND,H,A");
        };
        let kind = match kind {
            1 => DicksonKind::First,
            2 => DicksonKind::Second,
            _ => bail!("Dickson kind must be 1 or 2"),
        };
        let ctx = ext()?;
        let a = ctx.elem(a)?;
        return Ok((dickson_sequence(&ctx, kind, h as usize, &a)?, f.m));
    }
    if let Some(coeffs) = &args.poly {
        let ctx = ext()?;
        let coeffs = parse_list(coeffs)?
            .into_iter()
            .map(|c| ctx.elem(c))
            .collect::<seqcyclic::Result<Vec<_>>>()?;
        return Ok((polynomial_sequence(&ctx, &coeffs)?, f.m));
    }
    bail!("give one of --seq-file, --subset, --monomial, --dickson, --poly")
}

fn cmd_code(format: Format, budget: u64, args: &SourceArgs, out: &mut String) -> Result<()> {
    let (code, m) = match &args.subset {
        Some(subset) => {
            let set: BTreeSet<u64> = parse_list(subset)?.into_iter().collect();
            let n = args.n.expect("clap enforces -n");
            let field = BaseField::new(args.field.p, args.field.s)?;
            (CyclicCode::classical(&set, n, field)?, args.field.m)
        }
        None => {
            let (seq, m) = build_sequence(args)?;
            (CyclicCode::from_sequence(&seq)?, m)
        }
    };
    let distance = if code.is_zero_code() {
        None
    } else {
        Some(min_distance(&code, budget)?)
    };
    let record = CodeRecord::new(&code, m, distance);
    match format {
        Format::Json => push_json(out, &record)?,
        Format::Csv => {
            out.push_str("p,s,m,n,k,generator,d_lower,d_upper,d_exact,method\n");
            let (lo, hi, exact, method) = match &record.distance {
                Some(d) => (
                    d.lower.to_string(),
                    d.upper.to_string(),
                    d.exact.to_string(),
                    d.method.as_str().to_string(),
                ),
                None => Default::default(),
            };
            out.push_str(&format!(
                "{},{},{},{},{},\"{}\",{lo},{hi},{exact},{method}\n",
                record.p, record.s, record.m, record.n, record.k, record.generator
            ));
        }
        Format::Text => {
            let d = match &record.distance {
                Some(d) if d.exact => d.lower.to_string(),
                Some(d) => format!("{}..{}", d.lower, d.upper),
                None => "-".into(),
            };
            out.push_str(&format!(
                "[{}, {}, {d}] over GF({})\n",
                record.n,
                record.k,
                code.q()
            ));
            out.push_str(&format!("generator: {}\n", record.generator));
            if let Some(dist) = &record.distance {
                out.push_str(&format!("distance method: {}\n", dist.method.as_str()));
                if dist.exact {
                    let sp = sphere_packing_check(record.n, record.k, dist.lower, code.q())?;
                    out.push_str(&format!("sphere packing: {sp}\n"));
                }
            }
        }
    }
    Ok(())
}

fn cmd_seq(format: Format, args: &SourceArgs, out: &mut String) -> Result<()> {
    let (seq, _) = build_sequence(args)?;
    match format {
        Format::Text => out.push_str(&seq.to_text()),
        Format::Json => {
            let profile = berlekamp_massey(&seq);
            push_json(
                out,
                &json!({
                    "p": seq.field().p(), "s": seq.field().s(), "n": seq.period(),
                    "symbols": seq.symbols(), "linear_span": profile.linear_span,
                    "minimal_poly": profile.minimal_poly.to_text(),
                }),
            )?;
        }
        Format::Csv => {
            out.push_str("i,symbol\n");
            for (i, s) in seq.symbols().iter().enumerate() {
                out.push_str(&format!("{i},{s}\n"));
            }
        }
    }
    Ok(())
}

fn cmd_designs(format: Format, args: &DesignArgs, out: &mut String) -> Result<()> {
    let (set, n) = match (&args.subset, args.singer) {
        (Some(subset), _) => {
            let n = args.n.expect("clap enforces -n");
            (
                parse_list(subset)?.into_iter().collect::<BTreeSet<u64>>(),
                n,
            )
        }
        (None, Some(kind)) => {
            let f = &args.field;
            let ctx = FieldCtx::new(f.p, f.s, f.m)?;
            let variant = match kind {
                Singer::TraceOne => SingerVariant::TraceOneBinary,
                Singer::Projective => SingerVariant::TraceZeroProjective,
            };
            singer_difference_set(&ctx, variant)?
        }
        (None, None) => bail!("give --subset with -n, or --singer"),
    };
    let report = classify_subset(&set, n)?;
    match format {
        Format::Json => push_json(
            out,
            &json!({"n": n, "size": set.len(), "set": set, "classification": report}),
        )?,
        Format::Csv => {
            out.push_str("n,size,kind,lambda,t\n");
            let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{n},{},{},{},{}\n",
                set.len(),
                serde_json::to_value(report.kind)?
                    .as_str()
                    .unwrap_or_default(),
                opt(report.lambda),
                opt(report.t)
            ));
        }
        Format::Text => {
            out.push_str(&format!(
                "D = {{{}}} in Z_{n}, size {}\n",
                join(&set, ","),
                set.len()
            ));
            let kind = serde_json::to_value(report.kind)?;
            out.push_str(&format!("kind: {}", kind.as_str().unwrap_or_default()));
            if let Some(l) = report.lambda {
                out.push_str(&format!(" lambda={l}"));
            }
            if let Some(t) = report.t {
                out.push_str(&format!(" t={t}"));
            }
            out.push('\n');
        }
    }
    Ok(())
}

/// Parses "3,5,7" or "3..7" (inclusive).
fn parse_values(text: &str) -> Result<Vec<u64>> {
    let mut values = Vec::new();
    for part in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Some((lo, hi)) = part.split_once("..") {
            let lo: u64 = lo
                .trim()
                .parse()
                .with_context(|| format!("bad range {part:?}"))?;
            let hi: u64 = hi
                .trim()
                .parse()
                .with_context(|| format!("bad range {part:?}"))?;
            if lo > hi {
                bail!("empty range {part:?}");
            }
            values.extend(lo..=hi);
        } else {
            values.push(
                part.parse()
                    .with_context(|| format!("bad integer {part:?}"))?,
            );
        }
    }
    if values.is_empty() {
        bail!("empty parameter list");
    }
    Ok(values)
}

fn parse_opt(text: &Option<String>) -> Result<Vec<Option<u64>>> {
    match text {
        Some(t) => Ok(parse_values(t)?.into_iter().map(Some).collect()),
        None => Ok(vec![None]),
    }
}

fn small(v: u64, name: &str) -> Result<u32> {
    u32::try_from(v).with_context(|| format!("{name} = {v} is too large"))
}

fn small_opt(v: Option<u64>, name: &str) -> Result<Option<u32>> {
    v.map(|x| small(x, name)).transpose()
}

/// Cartesian product of the parameter lists in the order p, s, m, h, κ, u, a.
fn grid(args: &VerifyArgs) -> Result<Vec<Params>> {
    let ps = parse_values(&args.p)?;
    let ss = parse_values(&args.s)?;
    let ms = parse_values(&args.m)?;
    let hs = parse_opt(&args.h)?;
    let ks = parse_opt(&args.kappa)?;
    let us = parse_opt(&args.u)?;
    let as_ = parse_opt(&args.a)?;
    let mut points = Vec::new();
    for &p in &ps {
        for &s in &ss {
            for &m in &ms {
                for &h in &hs {
                    for &k in &ks {
                        for &u in &us {
                            for &a in &as_ {
                                points.push(Params {
                                    p,
                                    s: small(s, "s")?,
                                    m: small(m, "m")?,
                                    h: small_opt(h, "h")?,
                                    kappa: small_opt(k, "kappa")?,
                                    u: small_opt(u, "u")?,
                                    a,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(points)
}

fn cmd_verify(format: Format, budget: u64, args: &VerifyArgs, out: &mut String) -> Result<Outcome> {
    let points = grid(args)?;
    let options = VerifyOptions {
        budget,
        check_hypotheses: !args.no_hypothesis_check,
    };
    let mut reports = Vec::with_capacity(points.len());
    for params in &points {
        let claim = claims::resolve(&args.claim, params)?;
        let mut report = claims::verify_claim(claim, params, options)
            .with_context(|| format!("{} at {params}", claim.id))?;
        if !args.timing {
            report.seconds = None;
        }
        reports.push(report);
    }
    match format {
        Format::Json => {
            for r in &reports {
                push_json(out, r)?;
            }
        }
        Format::Csv => {
            out.push_str(ClaimReport::CSV_HEADER);
            out.push('\n');
            for r in &reports {
                out.push_str(&r.csv_row());
                out.push('\n');
            }
        }
        Format::Text => {
            for r in &reports {
                out.push_str(&report_text(r));
            }
        }
    }
    Ok(if reports.iter().any(ClaimReport::has_mismatch) {
        Outcome::Mismatch
    } else {
        Outcome::Ok
    })
}

fn report_text(r: &ClaimReport) -> String {
    let d = match &r.computed.distance {
        Some(d) if d.exact => d.lower.to_string(),
        Some(d) => format!("{}..{}", d.lower, d.upper),
        None => "-".into(),
    };
    let mut s = format!(
        "{} {}: [{}, {}, {d}] span {}\n",
        r.claim, r.params, r.n, r.computed.dimension, r.computed.span
    );
    if let Some(p) = &r.predicted {
        let open = if r.open_distance { " (open)" } else { "" };
        s.push_str(&format!(
            "  predicted ({}): span {}, k {}, {}{open}\n",
            p.case, p.span, p.dimension, p.distance
        ));
    }
    let v = &r.verdicts;
    s.push_str(&format!(
        "  mpoly {}, span {}, dimension {}, distance {}\n",
        v.mpoly, v.span, v.dimension, v.distance
    ));
    if !r.computed.oracles_agree {
        s.push_str("  berlekamp-massey and gcd disagree\n");
    }
    if let Some(secs) = r.seconds {
        s.push_str(&format!("  {secs:.3} s\n"));
    }
    s
}

fn cmd_list(format: Format, out: &mut String) -> Result<()> {
    let registry = claims::registry();
    match format {
        Format::Json => push_json(out, &registry)?,
        Format::Csv => {
            out.push_str("id,params,open_distance,hypotheses\n");
            for c in registry {
                out.push_str(&format!(
                    "{},{},{},\"{}\"\n",
                    c.id,
                    join(c.params.iter().map(|k| k.name()), " "),
                    c.open_distance,
                    c.hypotheses
                ));
            }
        }
        Format::Text => {
            for c in registry {
                let params = join(c.params.iter().map(|k| k.name()), ",");
                out.push_str(&format!("{:<18} {:<8} {}\n", c.id, params, c.hypotheses));
            }
            for (alias, members) in claims::aliases() {
                out.push_str(&format!("{alias}: group of {}\n", members.join(", ")));
            }
        }
    }
    Ok(())
}
