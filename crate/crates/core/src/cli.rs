//! The `ruled` command line.
//!
//! Exit codes: 0 ok, 1 input error, 2 property violation (from `verify`).
//! Every command renders either an aligned table or a single JSON object
//! `{"subcommand", "inputs", "results", "status"}`.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::bundle::{destabilizes, BundleNumerics, ExtensionData};
use crate::cohomology::{self, CohomologyTable, ConormalData, SplitBundle};
use crate::geometry::{DivisorClass, SurfaceGeometry};
use crate::literal::{self, format_curve_cycle, format_cycle, format_rational, format_summands};
use crate::splitting::{self, SplittingType};
use crate::verify::{self, GridBounds, Suite};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    InputError,
    PropertyViolation,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::InputError => "input-error",
            Status::PropertyViolation => "property-violation",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::InputError => 1,
            Status::PropertyViolation => 2,
        }
    }
}

type Row = Vec<(String, Value)>;

/// Structured outcome of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub subcommand: String,
    pub inputs: Row,
    pub results: Vec<Row>,
    pub status: Status,
    /// First failing grid point; present exactly when the status is a property violation.
    pub counterexample: Option<String>,
}

/// What `run` hands back to `main`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub output: String,
    /// Set for argument-parsing diagnostics, which belong on stderr.
    pub diagnostic: bool,
}

#[derive(Debug, Parser)]
#[command(name = "ruled", version, about = "Exact numerical geometry of Hirzebruch and ruled surfaces")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Also write the rendered report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Intersection theory, ampleness, Chern and Todd classes.
    #[command(subcommand)]
    Surface(SurfaceCmd),
    /// Line-bundle cohomology and endomorphisms of split bundles.
    #[command(subcommand)]
    Coh(CohCmd),
    /// Splitting types on the projective line.
    #[command(subcommand)]
    Split(SplitCmd),
    /// Numerical vector-bundle calculus.
    #[command(subcommand)]
    Bundle(BundleCmd),
    /// Run a property grid.
    Verify(VerifyArgs),
}

#[derive(Debug, Args, Clone, Copy)]
struct SurfaceArgs {
    /// Invariant e of the ruled surface.
    #[arg(long = "e", allow_negative_numbers = true)]
    e: i64,
    /// Genus of the base curve.
    #[arg(long = "q", default_value_t = 0)]
    q: i64,
}

impl SurfaceArgs {
    fn geometry(&self) -> Result<SurfaceGeometry, String> {
        SurfaceGeometry::new(self.q, self.e).map_err(|e| e.to_string())
    }

    fn inputs(&self) -> Row {
        vec![("e".into(), json!(self.e)), ("q".into(), json!(self.q))]
    }
}

fn divisor(s: &str) -> Result<DivisorClass, literal::ParseError> {
    s.parse()
}

fn splitting_type(s: &str) -> Result<SplittingType, literal::ParseError> {
    s.parse()
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Summands(Vec<DivisorClass>);

fn summands(s: &str) -> Result<Summands, literal::ParseError> {
    literal::parse_summands(s).map(Summands)
}

fn bundle_literal(s: &str) -> Result<BundleNumerics, literal::ParseError> {
    s.parse()
}

fn cycle(s: &str) -> Result<crate::geometry::CycleClass, literal::ParseError> {
    literal::parse_cycle(s)
}

#[derive(Debug, Subcommand)]
enum SurfaceCmd {
    /// Intersection number D1.D2.
    Intersect {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long = "D1", value_parser = divisor, allow_hyphen_values = true)]
        d1: DivisorClass,
        #[arg(long = "D2", value_parser = divisor, allow_hyphen_values = true)]
        d2: DivisorClass,
    },
    /// Canonical class K.
    Canonical {
        #[command(flatten)]
        s: SurfaceArgs,
    },
    /// Ampleness and good-polarization tests.
    Ample {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long = "D", value_parser = divisor, allow_hyphen_values = true)]
        d: DivisorClass,
    },
    /// Smallest t >= 0 making H + t f a good polarization.
    MinTwist {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long = "H", value_parser = divisor, allow_hyphen_values = true)]
        h: DivisorClass,
    },
    /// Chern character of (r, c1, c2).
    Chern {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long = "r")]
        r: i64,
        #[arg(long = "c1", value_parser = divisor, allow_hyphen_values = true)]
        c1: DivisorClass,
        #[arg(long = "c2", allow_negative_numbers = true)]
        c2: i64,
    },
    /// Todd classes of the surface and of the base curve.
    Todd {
        #[command(flatten)]
        s: SurfaceArgs,
    },
    /// Product of two cycles "r0;a;b;p" in the truncated Chow ring.
    Mul {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long = "x", value_parser = cycle, allow_hyphen_values = true)]
        x: crate::geometry::CycleClass,
        #[arg(long = "y", value_parser = cycle, allow_hyphen_values = true)]
        y: crate::geometry::CycleClass,
    },
    /// Pushforward of a cycle "r0;a;b;p" to the base curve.
    Push {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long = "x", value_parser = cycle, allow_hyphen_values = true)]
        x: crate::geometry::CycleClass,
    },
}

#[derive(Debug, Args, Clone)]
struct SplitBundleArgs {
    /// Summands as comma-separated divisors, e.g. "0*h+0*f,1*h+0*f".
    #[arg(long = "E", value_parser = summands, allow_hyphen_values = true)]
    summands: Summands,
}

#[derive(Debug, Args, Clone, Copy)]
struct ConormalArgs {
    #[arg(long = "t", allow_negative_numbers = true)]
    t: i64,
    #[arg(long = "s", allow_negative_numbers = true)]
    s: i64,
}

#[derive(Debug, Subcommand)]
enum CohCmd {
    /// h0, h1, h2 of O(D) on a Hirzebruch surface.
    Line {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long = "D", value_parser = divisor, allow_hyphen_values = true)]
        d: DivisorClass,
    },
    /// Euler characteristic of O(D), any genus.
    Euler {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long = "D", value_parser = divisor, allow_hyphen_values = true)]
        d: DivisorClass,
    },
    /// Serre dual K - D.
    Dual {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long = "D", value_parser = divisor, allow_hyphen_values = true)]
        d: DivisorClass,
    },
    /// Vanishing of h1, h2 of the conormal powers.
    Conormal {
        #[command(flatten)]
        s: SurfaceArgs,
        #[command(flatten)]
        c: ConormalArgs,
        #[arg(long = "n-max", default_value_t = 6)]
        n_max: i64,
    },
    /// Cohomology of End(E)(twist) for a split bundle E.
    End {
        #[command(flatten)]
        s: SurfaceArgs,
        #[command(flatten)]
        bundle: SplitBundleArgs,
        #[arg(long = "twist", value_parser = divisor, allow_hyphen_values = true, default_value = "0*h+0*f")]
        twist: DivisorClass,
    },
    /// h1(End E), the local moduli dimension.
    Moduli {
        #[command(flatten)]
        s: SurfaceArgs,
        #[command(flatten)]
        bundle: SplitBundleArgs,
    },
    /// Index after which h1 of End(E) twisted by conormal powers vanishes.
    Stabilization {
        #[command(flatten)]
        s: SurfaceArgs,
        #[command(flatten)]
        bundle: SplitBundleArgs,
        #[command(flatten)]
        c: ConormalArgs,
        #[arg(long = "y-max", default_value_t = 50)]
        y_max: i64,
    },
    /// Endomorphisms on the n-th infinitesimal neighborhood (split model).
    Growth {
        #[command(flatten)]
        s: SurfaceArgs,
        #[command(flatten)]
        bundle: SplitBundleArgs,
        #[command(flatten)]
        c: ConormalArgs,
        #[arg(long = "n")]
        n: i64,
    },
}

#[derive(Debug, Subcommand)]
#[command(allow_negative_numbers = true)]
enum SplitCmd {
    /// The rigid type of rank r and degree d.
    Rigid {
        #[arg(long = "r", allow_negative_numbers = true)]
        r: i64,
        #[arg(long = "d", allow_negative_numbers = true)]
        d: i64,
    },
    /// Rank, degree, spread, h1(End) and rigidity of a type.
    Info {
        #[arg(long = "T", value_parser = splitting_type)]
        t: SplittingType,
    },
    /// Whether the general type specializes to the special type.
    Specializes {
        #[arg(long = "general", value_parser = splitting_type)]
        general: SplittingType,
        #[arg(long = "special", value_parser = splitting_type)]
        special: SplittingType,
    },
    /// Jumping type (a+1, a, ..., a, a-1).
    Jumping {
        #[arg(long = "r", allow_negative_numbers = true)]
        r: i64,
        #[arg(long = "a", allow_negative_numbers = true)]
        a: i64,
    },
    /// Obstructions to lifting a splitting along a fiber's formal neighborhood.
    Lift {
        #[arg(long = "T", value_parser = splitting_type)]
        t_type: SplittingType,
        #[arg(long = "t", allow_negative_numbers = true)]
        t: i64,
        #[arg(long = "n-max", default_value_t = 10, allow_negative_numbers = true)]
        n_max: i64,
    },
    /// All types of given rank and degree with bounded spread.
    Enumerate {
        #[arg(long = "r", allow_negative_numbers = true)]
        r: i64,
        #[arg(long = "d", allow_negative_numbers = true)]
        d: i64,
        #[arg(long = "max-spread", allow_negative_numbers = true)]
        max_spread: i64,
    },
    /// Chain of elementary specializations from the rigid type to T.
    Chain {
        #[arg(long = "T", value_parser = splitting_type)]
        t: SplittingType,
    },
}

/// Either a bundle literal or separate flags.
#[derive(Debug, Args, Clone)]
struct BundleArgs {
    /// Bundle literal "r=..; c1=..; c2=..; e=..; q=..".
    #[arg(long = "bundle", value_parser = bundle_literal, conflicts_with_all = ["e", "r", "c1", "c2"])]
    bundle: Option<BundleNumerics>,
    #[arg(long = "e", allow_negative_numbers = true)]
    e: Option<i64>,
    #[arg(long = "q")]
    q: Option<i64>,
    #[arg(long = "r")]
    r: Option<i64>,
    #[arg(long = "c1", value_parser = divisor, allow_hyphen_values = true)]
    c1: Option<DivisorClass>,
    #[arg(long = "c2", allow_negative_numbers = true)]
    c2: Option<i64>,
}

impl BundleArgs {
    fn resolve(&self) -> Result<BundleNumerics, String> {
        if let Some(b) = self.bundle {
            return Ok(b);
        }
        let missing: Vec<&str> = [
            ("--e", self.e.is_none()),
            ("--r", self.r.is_none()),
            ("--c1", self.c1.is_none()),
            ("--c2", self.c2.is_none()),
        ]
        .into_iter()
        .filter_map(|(name, absent)| absent.then_some(name))
        .collect();
        if !missing.is_empty() {
            return Err(format!("missing bundle data: {} (or pass --bundle)", missing.join(", ")));
        }
        let g = SurfaceGeometry::new(self.q.unwrap_or(0), self.e.unwrap_or_default()).map_err(|e| e.to_string())?;
        BundleNumerics::new(g, self.r.unwrap_or_default(), self.c1.unwrap_or_default(), self.c2.unwrap_or_default())
            .map_err(|e| e.to_string())
    }
}

#[derive(Debug, Subcommand)]
enum BundleCmd {
    /// Jumping-fiber count z and pushforward degree m, with both oracles.
    Jump {
        #[command(flatten)]
        b: BundleArgs,
        #[arg(long = "a", allow_negative_numbers = true)]
        a: i64,
    },
    /// Twist by a line bundle O(L).
    Twist {
        #[command(flatten)]
        b: BundleArgs,
        #[arg(long = "L", value_parser = divisor, allow_hyphen_values = true)]
        l: DivisorClass,
    },
    /// Euler characteristic and fiber degree.
    Chi {
        #[command(flatten)]
        b: BundleArgs,
    },
    /// Symbolic Grothendieck-Riemann-Roch check along the ruling.
    Grr {
        #[command(flatten)]
        b: BundleArgs,
        #[arg(long = "a", allow_negative_numbers = true)]
        a: i64,
    },
    /// Chern classes of the middle term of an extension.
    Extension {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long = "r")]
        r: i64,
        #[arg(long = "x", allow_negative_numbers = true)]
        x: i64,
        #[arg(long = "a", allow_negative_numbers = true)]
        a: i64,
        #[arg(long = "degH", allow_negative_numbers = true)]
        deg_h: i64,
        #[arg(long = "degM", allow_negative_numbers = true)]
        deg_m: i64,
    },
    /// Recover (deg H, deg M) from Chern classes.
    ExtensionData {
        #[command(flatten)]
        b: BundleArgs,
        #[arg(long = "a", allow_negative_numbers = true)]
        a: i64,
        #[arg(long = "x", allow_negative_numbers = true)]
        x: i64,
    },
    /// Slope c1.R / r.
    Slope {
        #[command(flatten)]
        b: BundleArgs,
        #[arg(long = "R", value_parser = divisor, allow_hyphen_values = true)]
        polarization: DivisorClass,
    },
    /// Whether a subobject's slope reaches the bundle's slope.
    Destabilizes {
        #[command(flatten)]
        b: BundleArgs,
        /// Subobject as a bundle literal.
        #[arg(long = "sub", value_parser = bundle_literal)]
        sub: BundleNumerics,
        #[arg(long = "R", value_parser = divisor, allow_hyphen_values = true)]
        polarization: DivisorClass,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// serre, euler, conormal, theoremC, dominance, rigid, lifting, extension, growth or all.
    suite: String,
    /// Largest invariant e.
    #[arg(long = "e")]
    e: Option<i64>,
    /// Largest rank.
    #[arg(long = "r")]
    r: Option<i64>,
    /// Coefficient bound.
    #[arg(long = "bound")]
    bound: Option<i64>,
    /// Depth bound.
    #[arg(long = "n")]
    n: Option<i64>,
}

fn row<const N: usize>(pairs: [(&str, Value); N]) -> Row {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn cohomology_row(t: CohomologyTable) -> Row {
    row([("h0", json!(t.h0)), ("h1", json!(t.h1)), ("h2", json!(t.h2))])
}

fn type_value(t: &SplittingType) -> Value {
    json!(t.to_string())
}

fn ok(subcommand: &str, inputs: Row, results: Vec<Row>) -> Report {
    Report { subcommand: subcommand.into(), inputs, results, status: Status::Ok, counterexample: None }
}

fn input_error(subcommand: &str, inputs: Row, message: String) -> Report {
    Report {
        subcommand: subcommand.into(),
        inputs,
        results: vec![row([("error", json!(message))])],
        status: Status::InputError,
        counterexample: None,
    }
}

/// Runs a command given the full argument vector (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            return Outcome { exit_code: code, output: err.render().to_string(), diagnostic: code != 0 };
        }
    };
    let report = execute(&cli.command);
    let rendered = match cli.format {
        Format::Json => render_json(&report),
        Format::Table => render_table(&report),
    };
    if let Some(path) = &cli.out {
        if let Err(err) = std::fs::write(path, &rendered) {
            return Outcome {
                exit_code: Status::InputError.exit_code(),
                output: format!("cannot write {}: {err}\n", path.display()),
                diagnostic: true,
            };
        }
    }
    Outcome { exit_code: report.status.exit_code(), output: rendered, diagnostic: false }
}

/// Evaluates a parsed command into a report.
fn execute(command: &Command) -> Report {
    match command {
        Command::Surface(cmd) => surface(cmd),
        Command::Coh(cmd) => coh(cmd),
        Command::Split(cmd) => split(cmd),
        Command::Bundle(cmd) => bundle(cmd),
        Command::Verify(args) => run_verify(args),
    }
}

macro_rules! try_input {
    ($name:expr, $inputs:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return input_error($name, $inputs, err.to_string()),
        }
    };
}

fn surface(cmd: &SurfaceCmd) -> Report {
    match cmd {
        SurfaceCmd::Intersect { s, d1, d2 } => {
            let name = "surface intersect";
            let mut inputs = s.inputs();
            inputs.extend(row([("D1", json!(d1.to_string())), ("D2", json!(d2.to_string()))]));
            let g = try_input!(name, inputs, s.geometry());
            ok(name, inputs, vec![row([("intersection", json!(g.intersect(*d1, *d2)))])])
        }
        SurfaceCmd::Canonical { s } => {
            let name = "surface canonical";
            let inputs = s.inputs();
            let g = try_input!(name, inputs, s.geometry());
            let k = g.canonical_class();
            ok(name, inputs, vec![row([("K", json!(k.to_string())), ("K.K", json!(g.intersect(k, k)))])])
        }
        SurfaceCmd::Ample { s, d } => {
            let name = "surface ample";
            let mut inputs = s.inputs();
            inputs.push(("D".into(), json!(d.to_string())));
            let g = try_input!(name, inputs, s.geometry());
            ok(
                name,
                inputs,
                vec![row([("ample", json!(g.is_ample(*d))), ("good_polarization", json!(g.is_good_polarization(*d)))])],
            )
        }
        SurfaceCmd::MinTwist { s, h } => {
            let name = "surface min-twist";
            let mut inputs = s.inputs();
            inputs.push(("H".into(), json!(h.to_string())));
            let g = try_input!(name, inputs, s.geometry());
            let t = try_input!(name, inputs, g.min_good_twist(*h));
            let polarization = *h + DivisorClass::F * t;
            ok(name, inputs, vec![row([("t", json!(t)), ("polarization", json!(polarization.to_string()))])])
        }
        SurfaceCmd::Chern { s, r, c1, c2 } => {
            let name = "surface chern";
            let mut inputs = s.inputs();
            inputs.extend(row([("r", json!(r)), ("c1", json!(c1.to_string())), ("c2", json!(c2))]));
            let g = try_input!(name, inputs, s.geometry());
            if *r < 0 {
                return input_error(name, inputs, format!("rank must be nonnegative, got {r}"));
            }
            let ch = g.chern_character(*r, *c1, *c2);
            ok(name, inputs, vec![row([("ch", json!(format_cycle(&ch)))])])
        }
        SurfaceCmd::Todd { s } => {
            let name = "surface todd";
            let inputs = s.inputs();
            let g = try_input!(name, inputs, s.geometry());
            ok(
                name,
                inputs,
                vec![row([
                    ("td_surface", json!(format_cycle(&g.todd_surface()))),
                    ("td_curve", json!(format_curve_cycle(&g.todd_curve()))),
                ])],
            )
        }
        SurfaceCmd::Mul { s, x, y } => {
            let name = "surface mul";
            let mut inputs = s.inputs();
            inputs.extend(row([("x", json!(format_cycle(x))), ("y", json!(format_cycle(y)))]));
            let g = try_input!(name, inputs, s.geometry());
            ok(name, inputs, vec![row([("product", json!(format_cycle(&g.cycle_mul(x, y))))])])
        }
        SurfaceCmd::Push { s, x } => {
            let name = "surface push";
            let mut inputs = s.inputs();
            inputs.push(("x".into(), json!(format_cycle(x))));
            let g = try_input!(name, inputs, s.geometry());
            ok(name, inputs, vec![row([("pushforward", json!(format_curve_cycle(&g.pushforward_to_curve(x))))])])
        }
    }
}

fn split_bundle_inputs(s: &SurfaceArgs, b: &SplitBundleArgs) -> Row {
    let mut inputs = s.inputs();
    inputs.push(("E".into(), json!(format_summands(&b.summands.0))));
    inputs
}

fn coh(cmd: &CohCmd) -> Report {
    match cmd {
        CohCmd::Line { s, d } => {
            let name = "coh line";
            let mut inputs = s.inputs();
            inputs.push(("D".into(), json!(d.to_string())));
            let g = try_input!(name, inputs, s.geometry());
            let t = try_input!(name, inputs, cohomology::h_line(&g, *d));
            ok(name, inputs, vec![cohomology_row(t)])
        }
        CohCmd::Euler { s, d } => {
            let name = "coh euler";
            let mut inputs = s.inputs();
            inputs.push(("D".into(), json!(d.to_string())));
            let g = try_input!(name, inputs, s.geometry());
            ok(name, inputs, vec![row([("chi", json!(cohomology::euler_char(&g, *d)))])])
        }
        CohCmd::Dual { s, d } => {
            let name = "coh dual";
            let mut inputs = s.inputs();
            inputs.push(("D".into(), json!(d.to_string())));
            let g = try_input!(name, inputs, s.geometry());
            ok(name, inputs, vec![row([("dual", json!(cohomology::serre_dual(&g, *d).to_string()))])])
        }
        CohCmd::Conormal { s, c, n_max } => {
            let name = "coh conormal";
            let mut inputs = s.inputs();
            inputs.extend(row([("t", json!(c.t)), ("s", json!(c.s)), ("n_max", json!(n_max))]));
            let g = try_input!(name, inputs, s.geometry());
            let data = try_input!(name, inputs, ConormalData::new(&g, c.t, c.s));
            let vanishes = try_input!(name, inputs, cohomology::conormal_vanishing(&g, &data, *n_max));
            let mut results = Vec::new();
            for n in 1..=*n_max {
                let class = data.power(n);
                let t = try_input!(name, inputs, cohomology::h_line(&g, class));
                let mut r = row([("n", json!(n)), ("class", json!(class.to_string()))]);
                r.extend(cohomology_row(t));
                results.push(r);
            }
            results.push(row([("vanishing", json!(vanishes))]));
            ok(name, inputs, results)
        }
        CohCmd::End { s, bundle, twist } => {
            let name = "coh end";
            let mut inputs = split_bundle_inputs(s, bundle);
            inputs.push(("twist".into(), json!(twist.to_string())));
            let g = try_input!(name, inputs, s.geometry());
            let e = try_input!(name, inputs, SplitBundle::new(bundle.summands.0.clone()));
            let t = try_input!(name, inputs, cohomology::h_split_end(&g, &e, *twist));
            ok(name, inputs, vec![cohomology_row(t)])
        }
        CohCmd::Moduli { s, bundle } => {
            let name = "coh moduli";
            let inputs = split_bundle_inputs(s, bundle);
            let g = try_input!(name, inputs, s.geometry());
            let e = try_input!(name, inputs, SplitBundle::new(bundle.summands.0.clone()));
            let dim = try_input!(name, inputs, cohomology::moduli_dimension_split(&g, &e));
            ok(name, inputs, vec![row([("dimension", json!(dim))])])
        }
        CohCmd::Stabilization { s, bundle, c, y_max } => {
            let name = "coh stabilization";
            let mut inputs = split_bundle_inputs(s, bundle);
            inputs.extend(row([("t", json!(c.t)), ("s", json!(c.s)), ("y_max", json!(y_max))]));
            let g = try_input!(name, inputs, s.geometry());
            let e = try_input!(name, inputs, SplitBundle::new(bundle.summands.0.clone()));
            let data = try_input!(name, inputs, ConormalData::new(&g, c.t, c.s));
            let st = try_input!(name, inputs, cohomology::stabilization_index(&g, &e, &data, *y_max));
            ok(name, inputs, vec![row([("index", json!(st.index)), ("certified_from", json!(st.certified_from))])])
        }
        CohCmd::Growth { s, bundle, c, n } => {
            let name = "coh growth";
            let mut inputs = split_bundle_inputs(s, bundle);
            inputs.extend(row([("t", json!(c.t)), ("s", json!(c.s)), ("n", json!(n))]));
            let g = try_input!(name, inputs, s.geometry());
            let e = try_input!(name, inputs, SplitBundle::new(bundle.summands.0.clone()));
            let data = try_input!(name, inputs, ConormalData::new(&g, c.t, c.s));
            if *n < 1 {
                return input_error(name, inputs, format!("n must be at least 1, got {n}"));
            }
            let mut results = Vec::new();
            for k in 1..=*n {
                let v = try_input!(name, inputs, cohomology::endomorphism_growth(&g, &e, &data, k));
                results.push(row([("n", json!(k)), ("h0_end", json!(v))]));
            }
            ok(name, inputs, results)
        }
    }
}

fn split(cmd: &SplitCmd) -> Report {
    match cmd {
        SplitCmd::Rigid { r, d } => {
            let name = "split rigid";
            let inputs = row([("r", json!(r)), ("d", json!(d))]);
            let t = try_input!(name, inputs, splitting::rigid_type(*r, *d));
            ok(name, inputs, vec![row([("type", type_value(&t))])])
        }
        SplitCmd::Info { t } => {
            let name = "split info";
            let inputs = row([("T", type_value(t))]);
            ok(
                name,
                inputs,
                vec![row([
                    ("rank", json!(t.rank())),
                    ("degree", json!(t.degree())),
                    ("spread", json!(t.spread())),
                    ("h1_end", json!(t.h1_end())),
                    ("rigid", json!(t.is_rigid())),
                ])],
            )
        }
        SplitCmd::Specializes { general, special } => {
            let name = "split specializes";
            let inputs = row([("general", type_value(general)), ("special", type_value(special))]);
            let dominance = splitting::specializes(general, special);
            let oracle = match splitting::semicontinuity_oracle(general, special) {
                Ok(v) => json!(v),
                Err(_) => Value::Null,
            };
            ok(name, inputs, vec![row([("specializes", json!(dominance)), ("semicontinuity", oracle)])])
        }
        SplitCmd::Jumping { r, a } => {
            let name = "split jumping";
            let inputs = row([("r", json!(r)), ("a", json!(a))]);
            let t = try_input!(name, inputs, splitting::jumping_type(*r, *a));
            ok(name, inputs, vec![row([("type", type_value(&t)), ("h1_end", json!(t.h1_end()))])])
        }
        SplitCmd::Lift { t_type, t, n_max } => {
            let name = "split lift";
            let inputs = row([("T", type_value(t_type)), ("t", json!(t)), ("n_max", json!(n_max))]);
            let obs = try_input!(name, inputs, splitting::formal_lift_obstructions(t_type, *t, *n_max));
            let results =
                obs.iter().enumerate().map(|(i, o)| row([("n", json!(i + 1)), ("obstruction", json!(o))])).collect();
            ok(name, inputs, results)
        }
        SplitCmd::Enumerate { r, d, max_spread } => {
            let name = "split enumerate";
            let inputs = row([("r", json!(r)), ("d", json!(d)), ("max_spread", json!(max_spread))]);
            let types = try_input!(name, inputs, splitting::enumerate_types(*r, *d, *max_spread));
            let results = types.iter().map(|t| row([("type", type_value(t)), ("h1_end", json!(t.h1_end()))])).collect();
            ok(name, inputs, results)
        }
        SplitCmd::Chain { t } => {
            let name = "split chain";
            let inputs = row([("T", type_value(t))]);
            let results = splitting::specialization_chain(t)
                .iter()
                .enumerate()
                .map(|(i, step)| row([("step", json!(i)), ("type", type_value(step))]))
                .collect();
            ok(name, inputs, results)
        }
    }
}

fn bundle_inputs(b: &BundleNumerics) -> Row {
    row([("bundle", json!(b.to_string()))])
}

fn bundle(cmd: &BundleCmd) -> Report {
    match cmd {
        BundleCmd::Jump { b, a } => {
            let name = "bundle jump";
            let bn = try_input!(name, vec![], b.resolve());
            let mut inputs = bundle_inputs(&bn);
            inputs.push(("a".into(), json!(a)));
            let z = try_input!(name, inputs, bn.jumping_count(*a));
            let m = try_input!(name, inputs, bn.pushforward_degree(*a));
            let chi_z = try_input!(name, inputs, bn.jumping_count_chi_oracle(*a));
            let twist_z = bn.twist(DivisorClass::H * -a).c2();
            ok(
                name,
                inputs,
                vec![row([("z", json!(z)), ("m", json!(m)), ("z_twist", json!(twist_z)), ("z_chi", json!(chi_z))])],
            )
        }
        BundleCmd::Twist { b, l } => {
            let name = "bundle twist";
            let bn = try_input!(name, vec![], b.resolve());
            let mut inputs = bundle_inputs(&bn);
            inputs.push(("L".into(), json!(l.to_string())));
            ok(name, inputs, vec![row([("twisted", json!(bn.twist(*l).to_string()))])])
        }
        BundleCmd::Chi { b } => {
            let name = "bundle chi";
            let bn = try_input!(name, vec![], b.resolve());
            let inputs = bundle_inputs(&bn);
            ok(name, inputs, vec![row([("chi", json!(bn.euler_char())), ("fiber_degree", json!(bn.fiber_degree()))])])
        }
        BundleCmd::Grr { b, a } => {
            let name = "bundle grr";
            let bn = try_input!(name, vec![], b.resolve());
            let mut inputs = bundle_inputs(&bn);
            inputs.push(("a".into(), json!(a)));
            let report = try_input!(name, inputs, bn.grr_verify(*a));
            ok(
                name,
                inputs,
                vec![row([
                    ("rank_ok", json!(report.rank_ok)),
                    ("degree_ok", json!(report.degree_ok)),
                    ("lhs_degree", json!(format_rational(report.lhs_degree))),
                    ("rhs_degree", json!(report.rhs_degree)),
                ])],
            )
        }
        BundleCmd::Extension { s, r, x, a, deg_h, deg_m } => {
            let name = "bundle extension";
            let mut inputs = s.inputs();
            inputs.extend(row([
                ("r", json!(r)),
                ("x", json!(x)),
                ("a", json!(a)),
                ("degH", json!(deg_h)),
                ("degM", json!(deg_m)),
            ]));
            let g = try_input!(name, inputs, s.geometry());
            let data = ExtensionData { g, r: *r, x: *x, a: *a, deg_h: *deg_h, deg_m: *deg_m };
            let bn = try_input!(name, inputs, data.chern());
            ok(
                name,
                inputs,
                vec![row([
                    ("bundle", json!(bn.to_string())),
                    ("c1", json!(bn.c1().to_string())),
                    ("c2", json!(bn.c2())),
                ])],
            )
        }
        BundleCmd::ExtensionData { b, a, x } => {
            let name = "bundle extension-data";
            let bn = try_input!(name, vec![], b.resolve());
            let mut inputs = bundle_inputs(&bn);
            inputs.extend(row([("a", json!(a)), ("x", json!(x))]));
            let data = try_input!(name, inputs, ExtensionData::from_chern(&bn, *a, *x));
            ok(name, inputs, vec![row([("degH", json!(data.deg_h)), ("degM", json!(data.deg_m))])])
        }
        BundleCmd::Slope { b, polarization } => {
            let name = "bundle slope";
            let bn = try_input!(name, vec![], b.resolve());
            let mut inputs = bundle_inputs(&bn);
            inputs.push(("R".into(), json!(polarization.to_string())));
            ok(name, inputs, vec![row([("slope", json!(format_rational(bn.slope(*polarization))))])])
        }
        BundleCmd::Destabilizes { b, sub, polarization } => {
            let name = "bundle destabilizes";
            let bn = try_input!(name, vec![], b.resolve());
            let mut inputs = bundle_inputs(&bn);
            inputs.extend(row([("sub", json!(sub.to_string())), ("R", json!(polarization.to_string()))]));
            let verdict = try_input!(name, inputs, destabilizes(sub, &bn, *polarization));
            ok(
                name,
                inputs,
                vec![row([
                    ("destabilizes", json!(verdict)),
                    ("sub_slope", json!(format_rational(sub.slope(*polarization)))),
                    ("slope", json!(format_rational(bn.slope(*polarization)))),
                ])],
            )
        }
    }
}

fn run_verify(args: &VerifyArgs) -> Report {
    let name = "verify";
    let mut inputs = row([("suite", json!(args.suite))]);
    for (key, value) in [("e", args.e), ("r", args.r), ("bound", args.bound), ("n", args.n)] {
        if let Some(v) = value {
            inputs.push((key.into(), json!(v)));
        }
    }
    let suite: Suite = try_input!(name, inputs, args.suite.parse());
    let bounds = GridBounds { e_max: args.e, r_max: args.r, coeff: args.bound, n_max: args.n };
    let mut results = Vec::new();
    let mut counterexample = None;
    for outcome in verify::run(suite, &bounds) {
        let passed = outcome.passed();
        results.push(row([
            ("suite", json!(outcome.suite.name())),
            ("checked", json!(outcome.checked)),
            ("passed", json!(passed)),
        ]));
        if !passed {
            counterexample = outcome.counterexample.map(|c| format!("{}: {c}", outcome.suite));
            break;
        }
    }
    let status = if counterexample.is_some() { Status::PropertyViolation } else { Status::Ok };
    Report { subcommand: name.into(), inputs, results, status, counterexample }
}

fn to_object(r: &Row) -> Value {
    Value::Object(r.iter().cloned().collect::<Map<String, Value>>())
}

pub fn render_json(report: &Report) -> String {
    let mut obj = Map::new();
    obj.insert("subcommand".into(), json!(report.subcommand));
    obj.insert("inputs".into(), to_object(&report.inputs));
    obj.insert("results".into(), Value::Array(report.results.iter().map(to_object).collect()));
    obj.insert("status".into(), json!(report.status.as_str()));
    if let Some(c) = &report.counterexample {
        obj.insert("counterexample".into(), json!(c));
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("JSON values serialize");
    s.push('\n');
    s
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

pub fn render_table(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&report.subcommand);
    out.push('\n');
    if !report.inputs.is_empty() {
        let inputs: Vec<String> = report.inputs.iter().map(|(k, v)| format!("{k}={}", cell(v))).collect();
        out.push_str(&format!("inputs: {}\n", inputs.join("  ")));
    }

    let mut columns: Vec<&str> = Vec::new();
    for r in &report.results {
        for (k, _) in r {
            if !columns.contains(&k.as_str()) {
                columns.push(k);
            }
        }
    }
    if !columns.is_empty() {
        let cells: Vec<Vec<String>> = report
            .results
            .iter()
            .map(|r| {
                columns.iter().map(|c| r.iter().find(|(k, _)| k == c).map_or(String::new(), |(_, v)| cell(v))).collect()
            })
            .collect();
        let widths: Vec<usize> = columns
            .iter()
            .enumerate()
            .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
            .collect();
        let line = |values: Vec<&str>| -> String {
            let padded: Vec<String> = values.iter().zip(&widths).map(|(v, w)| format!("{v:<w$}")).collect();
            format!("{}\n", padded.join("  ").trim_end())
        };
        out.push_str(&line(columns.clone()));
        for r in &cells {
            out.push_str(&line(r.iter().map(String::as_str).collect()));
        }
    }
    if let Some(c) = &report.counterexample {
        out.push_str(&format!("counterexample: {c}\n"));
    }
    out.push_str(&format!("status: {}\n", report.status.as_str()));
    out
}
