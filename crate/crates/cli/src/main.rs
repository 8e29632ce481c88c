use clap::{Args, Parser, Subcommand};
use qdaha::report::Report;
use qdaha::suites::{compute_macdonald, run_suite, ConfigError, Suite, SuiteConfig};
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact verification of cyclotomic DAHA, Macdonald and quantum-algebra identities.
#[derive(Parser, Debug)]
#[command(name = "qdaha", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite and report pass/fail per check.
    Verify(Box<VerifyArgs>),
    /// Compute objects and print them.
    #[command(subcommand)]
    Compute(ComputeCommand),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// daha-presentation, dunkl-commutativity, macdonald, gamma-conjugation, toroidal-relations,
    /// correspondence, r-constants, pbw-audit, morphisms, identity-suite or straightening.
    suite: Option<String>,
    /// JSON config file; flags given on the command line win.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    degree: Option<usize>,
    /// Toroidal mode window as `min,max`.
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
    /// exact, rational-random or modp-random.
    #[arg(long)]
    mode: Option<String>,
    /// Comma-separated seeds.
    #[arg(long, value_delimiter = ',')]
    seed: Option<Vec<u64>>,
    /// `generic` or comma-separated rationals, one per Z-parameter.
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    /// Presentation for pbw-audit and straightening.
    #[arg(long)]
    presentation: Option<String>,
    #[arg(long)]
    slack: Option<usize>,
    /// Number of random words for straightening.
    #[arg(long)]
    words: Option<usize>,
    /// Where to write the JSON report; printed to stdout when absent.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum ComputeCommand {
    /// Exact P_λ(q, t) in the monomial symmetric basis.
    Macdonald {
        #[arg(long)]
        n: usize,
        /// Comma-separated parts of λ.
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<i32>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn parse_window(s: &str) -> Result<[i32; 2], ConfigError> {
    let bad = || ConfigError::Invalid(format!("window must be `min,max`, got `{}`", s));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok([a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?])
}

fn build_config(a: &VerifyArgs) -> Result<SuiteConfig, ConfigError> {
    let mut c = match &a.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| ConfigError::Invalid(format!("cannot read {}: {}", path.display(), e)))?;
            serde_json::from_str(&text).map_err(|e| ConfigError::Invalid(format!("bad config: {}", e)))?
        }
        None => SuiteConfig::default(),
    };
    if let Some(s) = &a.suite {
        c.suite = Some(s.parse::<Suite>()?);
    }
    if let Some(n) = a.n {
        c.n = n;
    }
    if let Some(l) = a.ell {
        c.ell = l;
    }
    if a.degree.is_some() {
        c.degree = a.degree;
    }
    if let Some(w) = &a.window {
        c.mode_window = Some(parse_window(w)?);
    }
    if a.mode.is_some() {
        c.mode = a.mode.clone();
    }
    if let Some(s) = &a.seed {
        c.seeds = s.clone();
    }
    if a.z.is_some() {
        c.z = a.z.clone();
    }
    if a.presentation.is_some() {
        c.presentation = a.presentation.clone();
    }
    if a.slack.is_some() {
        c.slack = a.slack;
    }
    if a.words.is_some() {
        c.words = a.words;
    }
    if let Some(j) = &a.json {
        c.json = Some(j.display().to_string());
    }
    Ok(c)
}

fn write_out(path: Option<&str>, text: &str) -> Result<(), ConfigError> {
    match path {
        Some(p) => std::fs::write(p, format!("{}\n", text))
            .map_err(|e| ConfigError::Invalid(format!("cannot write {}: {}", p, e))),
        None => {
            println!("{}", text);
            Ok(())
        }
    }
}

fn summary_line(r: &Report) -> String {
    let s = &r.summary;
    format!("{}: {} pass, {} fail, {} inconclusive, {} skipped", r.suite, s.pass, s.fail, s.inconclusive, s.skipped)
}

fn verify(a: &VerifyArgs) -> Result<ExitCode, ConfigError> {
    let c = build_config(a)?;
    let r = run_suite(&c)?;
    if c.json.is_some() {
        for f in r.failures() {
            eprintln!("FAIL {}: {}", f.name, f.witness.as_deref().unwrap_or(""));
        }
        println!("{}", summary_line(&r));
    } else {
        eprintln!("{}", summary_line(&r));
    }
    write_out(c.json.as_deref(), &r.to_json())?;
    Ok(if r.summary.fail == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Verify(a) => verify(a),
        Command::Compute(ComputeCommand::Macdonald { n, lambda, json }) => compute_macdonald(*n, lambda).and_then(|e| {
            println!("{}", e.rendered);
            if let Some(p) = json {
                let text = serde_json::to_string_pretty(&e).expect("expansion serializes");
                write_out(Some(&p.display().to_string()), &text)?;
            }
            Ok(ExitCode::SUCCESS)
        }),
    };
    res.unwrap_or_else(|e| {
        eprintln!("error: {}", e);
        ExitCode::from(2)
    })
}
