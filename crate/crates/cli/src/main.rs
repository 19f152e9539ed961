use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use knotpoly::render::{
    ChebyshevReport, DecodeError, ExpansionReport, OutputFormat, PolyReport, QnumReport,
};
use knotpoly::{
    alexander_laurent, alexander_standard, chebyshev, compute_form, decompose_n3, n2_to_t, n2_to_v,
    n3_to_t, n3_to_v, oracle_division, q_expansion, q_number, run_identity_suite, trig_spot_check,
    ChebKind, Error, Expansion, FormulaId, LaurentPoly, QBase, SweepReport, TorusKnotId,
};

const DEFAULT_THETAS: [f64; 8] = [0.1, 0.35, 0.7, 1.0, 1.3, 1.9, 2.4, 2.9];

#[derive(Parser)]
#[command(
    name = "knotpoly",
    version,
    about = "Alexander polynomials of torus knots"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Fmt::Text)]
    fmt: Fmt,
    /// Cross-check the result by an independent route before printing it.
    #[arg(long, global = true)]
    check: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Text,
    Json,
    Latex,
}

impl From<Fmt> for OutputFormat {
    fn from(f: Fmt) -> Self {
        match f {
            Fmt::Text => OutputFormat::Text,
            Fmt::Json => OutputFormat::Json,
            Fmt::Latex => OutputFormat::Latex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Standard,
    Laurent,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    #[value(name = "T")]
    T,
    #[value(name = "V")]
    V,
    #[value(name = "q")]
    Q,
    #[value(name = "delta2")]
    Delta2,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "T")]
    T,
    #[value(name = "V")]
    V,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial of T(n, l).
    Alexander {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        l: u64,
        #[arg(long, value_enum, default_value_t = Form::Standard)]
        form: Form,
    },
    /// Expand D(n, l) over a basis.
    Expand {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        l: u64,
        #[arg(long, value_enum)]
        basis: BasisArg,
    },
    /// Evaluate one of the closed forms, e.g. EQ49 or EQ54_K3.
    ComposeForm {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        formula: FormulaId,
    },
    /// The q-number [n]_q with q = t^(s/2).
    Qnum {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        s: u64,
    },
    /// T_n(x) or V_n(x).
    Chebyshev {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: u64,
    },
    /// D(n, 3) as a signed sum of D(k, 2).
    Decompose {
        #[arg(long)]
        n: u64,
    },
    /// Run the identity sweep.
    Verify {
        #[arg(long, default_value_t = 20)]
        max_n: u64,
        #[arg(long, default_value_t = 20)]
        max_l: u64,
    },
    /// Float spot checks of the cosine forms of D(n, 2).
    TrigCheck {
        #[arg(long)]
        n: u64,
        #[arg(long, value_delimiter = ',')]
        theta: Vec<f64>,
    },
}

enum Failed {
    Usage(String),
    Check(String),
}

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        Failed::Usage(e.to_string())
    }
}

impl From<DecodeError> for Failed {
    fn from(e: DecodeError) -> Self {
        Failed::Usage(e.to_string())
    }
}

fn cross_check(what: &str, expected: &LaurentPoly, actual: &LaurentPoly) -> Result<(), Failed> {
    if expected == actual {
        return Ok(());
    }
    Err(Failed::Check(format!(
        "{what} check failed\n  expected: {expected}\n  actual:   {actual}"
    )))
}

fn expansion_for(n: u64, l: u64, basis: BasisArg) -> Result<Expansion, Failed> {
    TorusKnotId::new(n, l)?;
    let e = match (basis, l) {
        (BasisArg::Q, _) => q_expansion(n, l)?,
        (BasisArg::T, 2) => n2_to_t(n)?,
        (BasisArg::V, 2) => n2_to_v(n)?,
        (BasisArg::T, 3) => n3_to_t(n)?,
        (BasisArg::V, 3) => n3_to_v(n)?,
        (BasisArg::Delta2, 3) => decompose_n3(n)?,
        (BasisArg::Delta2, _) => {
            return Err(Failed::Usage(format!(
                "basis delta2 needs l = 3 (got l={l})"
            )))
        }
        (BasisArg::T | BasisArg::V, _) => {
            return Err(Failed::Usage(format!(
                "Chebyshev expansions need l = 2 or l = 3 (got l={l})"
            )))
        }
    };
    Ok(e)
}

fn sweep_output(report: &SweepReport, fmt: OutputFormat) -> Result<String, Failed> {
    if fmt != OutputFormat::Json {
        eprintln!("elapsed: {:.3}s", report.elapsed.as_secs_f64());
    }
    let out = report.render(fmt);
    if report.passed() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failed::Check(format!(
            "{} check(s) failed",
            report.failures.len()
        )))
    }
}

fn run(cli: Cli) -> Result<String, Failed> {
    let fmt = OutputFormat::from(cli.fmt);
    match cli.command {
        Command::Alexander { n, l, form } => {
            let k = TorusKnotId::new(n, l)?;
            let (name, p) = match form {
                Form::Standard => ("standard", alexander_standard(k).to_laurent()),
                Form::Laurent => ("laurent", alexander_laurent(k)),
            };
            if cli.check {
                let oracle = oracle_division(n, l)?.to_laurent();
                cross_check(
                    "long-division",
                    &oracle,
                    &alexander_standard(k).to_laurent(),
                )?;
            }
            Ok(PolyReport::new(n, l, name, &p).render(fmt)?)
        }
        Command::Expand { n, l, basis } => {
            let e = expansion_for(n, l, basis)?;
            if cli.check {
                cross_check(
                    "expansion",
                    &alexander_laurent(TorusKnotId::new(n, l)?),
                    &e.eval()?,
                )?;
            }
            Ok(ExpansionReport::new(n, l, &e).render(fmt)?)
        }
        Command::Decompose { n } => {
            let e = decompose_n3(n)?;
            if cli.check {
                cross_check(
                    "decomposition",
                    &alexander_laurent(TorusKnotId::new(n, 3)?),
                    &e.eval()?,
                )?;
            }
            Ok(ExpansionReport::new(n, 3, &e).render(fmt)?)
        }
        Command::ComposeForm { n, l, formula } => {
            let p = compute_form(n, l, formula)?;
            if cli.check {
                cross_check(
                    formula.name(),
                    &alexander_laurent(TorusKnotId::new(n, l)?),
                    &p,
                )?;
            }
            Ok(PolyReport::new(n, l, formula.name(), &p).render(fmt)?)
        }
        Command::Qnum { n, s } => {
            let base = QBase::new(s)?;
            let p = q_number(n, base);
            if cli.check {
                let si = s as i64;
                let ni = n as i64;
                let num = &LaurentPoly::t_half_pow(si * ni) - &LaurentPoly::t_half_pow(-si * ni);
                let den = &LaurentPoly::t_half_pow(si) - &LaurentPoly::t_half_pow(-si);
                cross_check("geometric-sum", &num.exact_div(&den)?, &p)?;
            }
            let report = QnumReport {
                n,
                s,
                terms: knotpoly::render::terms_to_json(&p),
            };
            Ok(report.render(fmt)?)
        }
        Command::Chebyshev { kind, n } => {
            let kind = match kind {
                KindArg::T => ChebKind::FirstKind,
                KindArg::V => ChebKind::SecondKind,
            };
            let idx =
                usize::try_from(n).map_err(|_| Failed::Usage(format!("n = {n} too large")))?;
            let p = chebyshev(kind, idx);
            if cli.check {
                let ni = n as i64;
                let closed = match kind {
                    ChebKind::FirstKind => &LaurentPoly::t_pow(ni) + &LaurentPoly::t_pow(-ni),
                    ChebKind::SecondKind => (&LaurentPoly::t_pow(ni + 1)
                        - &LaurentPoly::t_pow(-ni - 1))
                        .exact_div(&(&LaurentPoly::t_pow(1) - &LaurentPoly::t_pow(-1)))?,
                };
                cross_check(
                    "closed-form",
                    &closed,
                    &p.compose(&knotpoly::chebyshev::x_var()),
                )?;
            }
            Ok(ChebyshevReport::new(kind, n, &p).render(fmt)?)
        }
        Command::Verify { max_n, max_l } => sweep_output(&run_identity_suite(max_n, max_l)?, fmt),
        Command::TrigCheck { n, theta } => {
            if n % 2 == 0 {
                return Err(Failed::Usage(format!("n must be odd (got {n})")));
            }
            let thetas = if theta.is_empty() {
                DEFAULT_THETAS.to_vec()
            } else {
                theta
            };
            sweep_output(&trig_spot_check(n, &thetas), fmt)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{}", out.trim_end());
            ExitCode::SUCCESS
        }
        Err(Failed::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failed::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
