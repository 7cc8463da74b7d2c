use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qtop_core::campaigns::{run_campaign, CampaignKind, CampaignReport};
use qtop_core::finmonoid::{P2Verdict, TopMonoid};
use qtop_core::quniform::{canonical_qu, classify_with_normality};
use qtop_core::sorgenfrey::{qball_line, submetrizability_witness, Universe};
use qtop_core::urysohn::{canonical_chain, FiniteModel, Verdict};
use qtop_core::{
    qtop, verify_theorem, Error, IntervalSet, Rational, SorgenfreyModel, UrysohnFunction,
};

/// Exit status for a completed check that found a violation or a witness.
const VIOLATION: u8 = 1;

#[derive(Parser)]
#[command(
    name = "qtop",
    version,
    about = "Finite quasi-uniform spaces and the Sorgenfrey line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Separation axioms of a space, as one TSV row.
    Classify {
        #[arg(long)]
        space: PathBuf,
        /// Print the parsed structure in canonical QTOP form instead.
        #[arg(long)]
        dump: bool,
    },
    /// Properties of the quasi-uniformity generating the topology.
    Qu {
        #[arg(long)]
        space: PathBuf,
        #[arg(long, value_enum, default_value_t = QuCheck::All)]
        check: QuCheck,
    },
    /// Tabulate the Urysohn-type function of a set and verify it.
    Urysohn {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 4)]
        depth: u32,
    },
    /// Checks on a topologized monoid.
    Monoid {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = MonoidCheck::All)]
        check: MonoidCheck,
        /// Source set for `para`.
        #[arg(long)]
        set: Option<String>,
        /// Open neighborhood of the unit for `para`; defaults to the minimal one.
        #[arg(long)]
        nbhd: Option<String>,
        #[arg(long, default_value_t = 4)]
        depth: u32,
        /// Print the parsed structure in canonical QTOP form instead.
        #[arg(long)]
        dump: bool,
    },
    /// Run a campaign over all spaces on n points.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        campaign: SpaceCampaign,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a campaign over all topologized monoids on n points.
    MonoidEnumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        campaign: MonoidCampaign,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The exact Sorgenfrey model.
    Sorgenfrey {
        #[command(subcommand)]
        command: SorgenfreyCommand,
    },
}

#[derive(Subcommand)]
enum SorgenfreyCommand {
    /// Evaluate the function of a set at a point.
    Urysohn {
        #[arg(long)]
        eps: String,
        #[arg(long)]
        z: String,
        #[arg(long, default_value_t = 10)]
        depth: u32,
        /// Source set as an interval union, e.g. "[0,1) U [2,3)".
        #[arg(long, default_value = "[0,0]")]
        set: String,
        #[arg(long, value_enum, default_value_t = UniverseArg::Halfline)]
        universe: UniverseArg,
    },
    /// Basic quasi-Roelcke neighborhood of x in the Sorgenfrey group.
    Qball {
        #[arg(long)]
        x: String,
        #[arg(long)]
        eps: String,
    },
    /// Verify the construction symbolically and check submetrizability.
    Verify {
        #[arg(long)]
        eps: String,
        #[arg(long, default_value_t = 6)]
        depth: u32,
        #[arg(long, default_value = "[0,0]")]
        set: String,
        #[arg(long, value_enum, default_value_t = UniverseArg::Halfline)]
        universe: UniverseArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum QuCheck {
    Normal,
    Separated,
    Uniformity,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MonoidCheck {
    All,
    Openshifts,
    P2,
    Para,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceCampaign {
    Diagram,
    Equi,
    Characterization,
    Count,
}

#[derive(Clone, Copy, ValueEnum)]
enum MonoidCampaign {
    P2,
    Monoreg,
    Qrl,
    Lvr,
}

#[derive(Clone, Copy, ValueEnum)]
enum UniverseArg {
    Halfline,
    Line,
}

impl From<UniverseArg> for Universe {
    fn from(u: UniverseArg) -> Self {
        match u {
            UniverseArg::Halfline => Universe::HalfLine,
            UniverseArg::Line => Universe::Line,
        }
    }
}

/// Input and usage problems; reported on stderr with exit status 2.
#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(Error::Parse {
                line,
                column,
                message,
            }) => write!(f, "parse error at line {line}, column {column}: {message}"),
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Io(p, e) => write!(f, "{}: {e}", p.display()),
            Failure::Usage(m) => f.write_str(m),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn rational(flag: &str, text: &str) -> Result<Rational, Failure> {
    text.trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("--{flag}: {text:?} is not a rational number")))
}

fn status(ok: bool) -> u8 {
    if ok {
        0
    } else {
        VIOLATION
    }
}

fn bit(b: bool) -> u8 {
    u8::from(b)
}

fn file_id(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "space".into())
}

fn classify(space: &Path, dump: bool) -> Outcome {
    let s = qtop::parse_space(&read(space)?)?;
    if dump {
        print!("{}", qtop::dump_space(&s));
        return Ok(0);
    }
    let c = classify_with_normality(&s);
    println!("{}", qtop_core::Classification::tsv_header());
    println!("{}", c.tsv_row(&file_id(space), s.n()));
    Ok(0)
}

fn qu(space: &Path, check: QuCheck) -> Outcome {
    let s = qtop::parse_space(&read(space)?)?;
    let q = canonical_qu(&s);
    let axioms = q.check_axioms(&s);
    let mut ok = true;
    if matches!(check, QuCheck::Normal | QuCheck::All) {
        let w = q.normality_witness(&s);
        println!("normal\t{}", bit(w.is_none()));
        if let Some(w) = &w {
            println!(
                "witness\tA={}\tcl A={}\tint cl B(A;U)={}",
                w.subset, w.closure, w.target
            );
        }
        ok &= w.is_none();
    }
    if matches!(check, QuCheck::Separated | QuCheck::All) {
        println!("separated\t{}", bit(axioms.separated));
        ok &= axioms.separated;
    }
    if matches!(check, QuCheck::Uniformity | QuCheck::All) {
        println!("uniformity\t{}", bit(axioms.is_uniformity));
        ok &= axioms.is_uniformity;
    }
    Ok(status(ok))
}

fn urysohn(space: &Path, set: &str, depth: u32) -> Outcome {
    let s = qtop::parse_space(&read(space)?)?;
    let a = qtop::parse_point_set(set, s.n())?;
    let model = FiniteModel::new(s);
    let q = canonical_qu(&s);
    let chain = canonical_chain(&model, &q, *q.minimal(), depth)?;
    let f = UrysohnFunction::new(&model, chain.clone(), a, depth)?;
    println!("point\tf");
    for z in 0..s.n() {
        println!("{z}\t{}", f.evaluate(&z));
    }
    let report = verify_theorem(&model, &chain, &a, depth)?;
    print!("{report}");
    if let Some((q, r)) = report.failing_pair {
        println!("failing_pair\t{q}\t{r}");
    }
    Ok(match report.verdict() {
        Verdict::Pass | Verdict::HypothesisViolated => 0,
        Verdict::Fail => VIOLATION,
    })
}

fn monoid(
    input: &Path,
    check: MonoidCheck,
    set: Option<&str>,
    nbhd: Option<&str>,
    depth: u32,
    dump: bool,
) -> Outcome {
    let m = qtop::parse_monoid(&read(input)?)?;
    if dump {
        print!("{}", qtop::dump_monoid(&m));
        return Ok(0);
    }
    let mut code = 0;
    if matches!(check, MonoidCheck::Openshifts | MonoidCheck::All) {
        code = code.max(openshifts(&m));
    }
    if check == MonoidCheck::P2 {
        let r = m.check_p2();
        println!("{r}");
        if r.verdict() == P2Verdict::Fail {
            code = VIOLATION;
        }
    }
    if check == MonoidCheck::All {
        // The hypotheses were printed above; show the items and verdict only.
        let r = m.check_p2();
        for line in r.to_string().lines().skip(2) {
            println!("{line}");
        }
        if r.verdict() == P2Verdict::Fail {
            code = VIOLATION;
        }
    }
    if check == MonoidCheck::Para || (check == MonoidCheck::All && set.is_some()) {
        let set = set.ok_or_else(|| Failure::Usage("--check para needs --set".into()))?;
        let a = qtop::parse_point_set(set, m.n())?;
        let u = match nbhd {
            Some(t) => qtop::parse_point_set(t, m.n())?,
            None => m.space().minimal_open(m.unit()),
        };
        match m.para_function(a, u, depth) {
            Ok(f) => {
                println!("{f}");
                code = code.max(status(f.passed()));
            }
            Err(Error::HypothesisNotMet(why)) => {
                println!("verdict\thypothesis-not-met\t{why}");
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(code)
}

fn openshifts(m: &TopMonoid) -> u8 {
    let discontinuity = m.discontinuity();
    println!("continuous\t{}", bit(discontinuity.is_none()));
    if let Some((a, b)) = discontinuity {
        println!("witness\tU_{a}·U_{b} ⊄ U_{}", m.table().mul(a, b));
    }
    let closed = m.closed_shift();
    println!("open_shifts\t{}", bit(closed.is_none()));
    if let Some((a, x, b)) = closed {
        println!("witness\t{a}·U_{x}·{b} is not open");
    }
    status(closed.is_none())
}

fn emit(report: &CampaignReport, out: Option<&Path>) -> Outcome {
    match out {
        Some(path) => {
            fs::write(path, report.to_tsv()).map_err(|e| Failure::Io(path.to_path_buf(), e))?;
            print!("{}", report.summary());
        }
        None => print!("{}", report.to_tsv()),
    }
    eprintln!("elapsed {:.3}s", report.duration.as_secs_f64());
    let found = report.kind.is_exploratory() && !report.findings.is_empty();
    Ok(status(report.passed() && !found))
}

fn enumerate(n: usize, campaign: SpaceCampaign, out: Option<&Path>) -> Outcome {
    let kind = match campaign {
        SpaceCampaign::Diagram => CampaignKind::Diagram,
        SpaceCampaign::Equi => CampaignKind::Equi,
        SpaceCampaign::Characterization => CampaignKind::Characterization,
        SpaceCampaign::Count => CampaignKind::Count,
    };
    emit(&run_campaign(kind, n)?, out)
}

fn monoid_enumerate(n: usize, campaign: MonoidCampaign, out: Option<&Path>) -> Outcome {
    let kind = match campaign {
        MonoidCampaign::P2 => CampaignKind::P2,
        MonoidCampaign::Monoreg => CampaignKind::Monoreg,
        MonoidCampaign::Qrl => CampaignKind::Qrl,
        MonoidCampaign::Lvr => CampaignKind::Lvr,
    };
    emit(&run_campaign(kind, n)?, out)
}

fn sorgenfrey(command: SorgenfreyCommand) -> Outcome {
    match command {
        SorgenfreyCommand::Urysohn {
            eps,
            z,
            depth,
            set,
            universe,
        } => {
            let eps = rational("eps", &eps)?;
            let z = rational("z", &z)?;
            let a: IntervalSet<Rational> = set.parse()?;
            let model = SorgenfreyModel::new(universe.into());
            let chain = model.chain(&eps, depth)?;
            let f = UrysohnFunction::new(&model, chain, a, depth)?;
            let v = f.evaluate(&z);
            println!("z\t{z}");
            println!("f\t{v}");
            println!("approx\t{:.6}", v.to_f64());
            Ok(0)
        }
        SorgenfreyCommand::Qball { x, eps } => {
            let x = rational("x", &x)?;
            let eps = rational("eps", &eps)?;
            println!("{}", qball_line(&x, &eps)?);
            Ok(0)
        }
        SorgenfreyCommand::Verify {
            eps,
            depth,
            set,
            universe,
        } => {
            let eps = rational("eps", &eps)?;
            let a: IntervalSet<Rational> = set.parse()?;
            let model = SorgenfreyModel::new(universe.into());
            let chain = model.chain(&eps, depth)?;
            let report = verify_theorem(&model, &chain, &a, depth)?;
            print!("{report}");
            let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
            let samples = [(r(0, 1), r(1, 1)), (r(1, 3), r(1, 2)), (r(0, 1), r(0, 1))];
            let two = r(2, 1);
            let radii = [eps.clone(), &eps / &two, &eps / (&two * &two)];
            let sub = submetrizability_witness(&samples, &radii)?;
            println!("{sub}");
            Ok(status(report.verdict() == Verdict::Pass && sub.passed()))
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Classify { space, dump } => classify(&space, dump),
        Command::Qu { space, check } => qu(&space, check),
        Command::Urysohn { space, set, depth } => urysohn(&space, &set, depth),
        Command::Monoid {
            input,
            check,
            set,
            nbhd,
            depth,
            dump,
        } => monoid(&input, check, set.as_deref(), nbhd.as_deref(), depth, dump),
        Command::Enumerate { n, campaign, out } => enumerate(n, campaign, out.as_deref()),
        Command::MonoidEnumerate { n, campaign, out } => {
            monoid_enumerate(n, campaign, out.as_deref())
        }
        Command::Sorgenfrey { command } => sorgenfrey(command),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
