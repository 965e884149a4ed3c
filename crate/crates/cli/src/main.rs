use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use compound_core::algebra::parse_rational;
use compound_core::characters::{
    verify_denominators, verify_prop_dets, verify_theorem_remark, verify_theorem_schur, CharFamily,
};
use compound_core::combinatorics::{
    enumerate_partitions_in_box, enumerate_z, iota, phi, tau, Composition,
};
use compound_core::compound::{
    verify_gram_structure, verify_leading_term, verify_main, verify_sylvester, ColumnMap, CompoundSpec,
};
use compound_core::macdonald::{verify_corollary_macdonald, QtParams, DEFAULT_DEGREE_BOUND};
use compound_core::report::{Mode, VerifyReport, SCHEMA_VERSION};
use compound_core::rng::Sampler;
use compound_core::Error;

/// Exact verification of compound-determinant identities.
#[derive(Parser, Debug)]
#[command(name = "compound-det", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List compositions, subsets and partitions in their canonical orders.
    Enumerate(EnumerateArgs),
    /// Check an identity and print a report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum What {
    Z,
    Z0,
    Iota,
    Phi,
    Tau,
    Partitions,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    what: What,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    n: usize,
    /// Color for phi and tau.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Identity {
    Main,
    Sylvester,
    Gram,
    Denominators,
    SchurDet,
    SchurRemark,
    Prop12,
    Macdonald,
    LeadingTerm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Symbolic,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    identity: Identity,
    #[arg(long, default_value_t = 2)]
    s: usize,
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Fixed color for the gram check; without it the least maximal color is used.
    #[arg(long)]
    k: Option<usize>,
    /// gl | sp | odd-orth | even-orth; all four when omitted.
    #[arg(long)]
    family: Option<String>,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Numeric runs use seeds seed, seed+1, ...
    #[arg(long, default_value_t = 1)]
    repeats: u64,
    /// Rational such as 2/3.
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    t: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Report elapsed_ms as 0 so that repeated runs are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Enumerate(args) => enumerate(&args).map(|text| {
            print!("{text}");
            ExitCode::SUCCESS
        }),
        Command::Verify(args) => verify(&args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::VerificationFailed(_) | Error::Internal(_) => 1,
        Error::Usage(_) | Error::Capability(_) | Error::Domain(_) | Error::InadmissibleParameter(_) => 2,
    }
}

fn need_k(k: Option<usize>, s: usize) -> compound_core::Result<usize> {
    match k {
        Some(k) if (1..=s).contains(&k) => Ok(k),
        Some(k) => Err(Error::Usage(format!("--k must lie in 1..={s}, got {k}"))),
        None => Err(Error::Usage("--k is required".into())),
    }
}

fn enumerate(args: &EnumerateArgs) -> compound_core::Result<String> {
    let (s, n) = (args.s, args.n);
    if s == 0 || n == 0 {
        return Err(Error::Usage("s and n must be positive".into()));
    }
    let mut out = String::new();
    match args.what {
        What::Z => enumerate_z(s, n, false).iter().for_each(|mu| out += &format!("{mu}\n")),
        What::Z0 => enumerate_z(s, n, true).iter().for_each(|mu| out += &format!("{mu}\n")),
        What::Iota => {
            for mu in enumerate_z(s, n, false) {
                out += &format!("{mu} -> {}\n", iota(&mu, s, n)?);
            }
        }
        What::Phi => {
            let k = need_k(args.k, s)?;
            for mu in enumerate_z(s, n, false).iter().filter(|mu| mu.part(k) > 0) {
                out += &format!("{mu} -> {}\n", phi(mu, k, s, n)?);
            }
        }
        What::Tau => {
            let k = need_k(args.k, s)?;
            for mu in enumerate_z(s, n, false).iter().filter(|mu| mu.part(k) > 0) {
                out += &format!("{mu} -> {}\n", tau(mu, k)?);
            }
        }
        What::Partitions => {
            for lambda in enumerate_partitions_in_box(s - 1, n) {
                out += &format!("{}\n", Composition::new(lambda.padded(n)));
            }
        }
    }
    Ok(out)
}

fn parse_families(family: &Option<String>) -> compound_core::Result<Vec<CharFamily>> {
    match family {
        None => Ok(CharFamily::ALL.to_vec()),
        Some(tag) => Ok(vec![tag.parse()?]),
    }
}

fn parse_qt(args: &VerifyArgs, seed: u64, degree: usize) -> compound_core::Result<QtParams> {
    let value = |v: &Option<String>| v.as_deref().map(parse_rational).transpose();
    match (value(&args.q)?, value(&args.t)?) {
        (Some(q), Some(t)) => Ok(QtParams::new(q, t)),
        (None, None) => QtParams::sample(&mut Sampler::new(seed ^ 0x5157_5f71_7421), degree),
        _ => Err(Error::Usage("give both --q and --t, or neither".into())),
    }
}

fn seeds(args: &VerifyArgs) -> compound_core::Result<Vec<u64>> {
    if args.repeats == 0 {
        return Err(Error::Usage("--repeats must be at least 1".into()));
    }
    Ok((0..args.repeats).map(|r| args.seed.wrapping_add(r)).collect())
}

fn run(args: &VerifyArgs) -> compound_core::Result<Vec<VerifyReport>> {
    let (s, n) = (args.s, args.n);
    let fixed_symbolic = matches!(args.identity, Identity::Denominators | Identity::LeadingTerm);
    let numeric_only = matches!(
        args.identity,
        Identity::SchurDet | Identity::SchurRemark | Identity::Prop12 | Identity::Macdonald
    );
    let mode = match args.mode {
        Some(ModeArg::Numeric) if fixed_symbolic => {
            return Err(Error::Usage(format!("{:?} is checked symbolically only", args.identity)))
        }
        Some(ModeArg::Symbolic) if numeric_only => {
            return Err(Error::Capability(format!("{:?} is checked numerically only", args.identity)))
        }
        Some(m) => m,
        None if fixed_symbolic => ModeArg::Symbolic,
        None => ModeArg::Numeric,
    };
    let modes: Vec<Mode> = match mode {
        ModeArg::Symbolic => vec![Mode::Symbolic],
        ModeArg::Numeric => seeds(args)?.into_iter().map(|seed| Mode::Numeric { seed }).collect(),
    };
    let mut reports = Vec::new();
    for mode in modes {
        match args.identity {
            Identity::Main => reports.push(verify_main(s, n, mode)?),
            Identity::Sylvester => reports.push(verify_sylvester(s, n, mode)?),
            Identity::Gram => {
                let map = match args.k {
                    None => ColumnMap::Lemma1,
                    Some(k0) => ColumnMap::Lemma2 { k0: need_k(Some(k0), s)? },
                };
                let outcome = match mode {
                    Mode::Symbolic => verify_gram_structure(&CompoundSpec::symbolic(s, n)?, map, mode, false)?,
                    Mode::Numeric { seed } => {
                        verify_gram_structure(&CompoundSpec::numeric(s, n, seed)?, map, mode, true)?
                    }
                };
                reports.push(outcome.report);
            }
            Identity::Denominators => reports.extend(verify_denominators(n)?),
            Identity::LeadingTerm => reports.push(verify_leading_term(s, n)?),
            Identity::SchurDet => {
                for family in parse_families(&args.family)? {
                    reports.push(verify_theorem_schur(family, s, n, mode)?);
                }
            }
            Identity::SchurRemark => reports.push(verify_theorem_remark(s, n, mode)?),
            Identity::Prop12 => {
                let families = match &args.family {
                    None => vec![CharFamily::Gl, CharFamily::Sp],
                    Some(_) => parse_families(&args.family)?,
                };
                for family in families {
                    reports.push(verify_prop_dets(family, s, n, mode)?);
                }
            }
            Identity::Macdonald => {
                let seed = mode.seed().expect("numeric");
                let degree = (s.saturating_sub(1) * n).clamp(1, DEFAULT_DEGREE_BOUND);
                let params = parse_qt(args, seed, degree)?;
                reports.extend(verify_corollary_macdonald(s, n, &params, seed)?);
            }
        }
    }
    if args.no_timing {
        reports.iter_mut().for_each(|r| r.elapsed_ms = 0);
    }
    Ok(reports)
}

fn render_text(reports: &[VerifyReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let verdict = if r.equal { "PASS" } else { "FAIL" };
        let mut line = format!("{} {verdict} s={} n={} mode={}", r.identity, r.s, r.n, r.mode);
        if let Some(seed) = r.seed {
            line += &format!(" seed={seed}");
        }
        for (k, v) in &r.params {
            line += &format!(" {k}={v}");
        }
        if let Some(sign) = r.sign {
            line += &format!(" sign={sign}");
        }
        line += &format!(" lhs={} rhs={} {}ms", &r.lhs_hash[..16], &r.rhs_hash[..16], r.elapsed_ms);
        if let Some(d) = &r.detail {
            line += &format!(" ({d})");
        }
        out += &line;
        out.push('\n');
    }
    out
}

fn verify(args: &VerifyArgs) -> compound_core::Result<ExitCode> {
    let reports = run(args)?;
    let verified = reports.iter().all(|r| r.equal);
    let body = match args.format {
        Format::Json => {
            let doc = json!({
                "schema": SCHEMA_VERSION,
                "verified": verified,
                "reports": reports,
            });
            serde_json::to_string_pretty(&doc).map_err(|e| Error::Internal(e.to_string()))? + "\n"
        }
        Format::Text => render_text(&reports),
    };
    match &args.out {
        Some(path) => fs::write(path, body).map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?,
        None => io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| Error::Internal(e.to_string()))?,
    }
    Ok(if verified { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
