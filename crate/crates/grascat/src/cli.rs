//! The `grascat` command line.
//!
//! Every verb reads its inputs, calls the library and returns an [`Output`]
//! holding both a JSON value and a plain-text table. Unreadable inputs are
//! usage errors (exit status 2); failures inside the library are computation
//! errors (exit status 1) reported as `{"error": {"kind", "message"}}`.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use grascat_core::braid::{braid_property_check, BraidReport, RelationVerdict, Verdict};
use grascat_core::cluster::find_mutation_path;
use grascat_core::cmcat::{
    cyclic_shift_profile, profile_balance_check, tau_inverse_two_interval, tau_two_interval, KSubset,
};
use grascat_core::einv::{FieldChoice, Sampling};
use grascat_core::gvec::{cone_presentation, GVectorSolver};
use grascat_core::hl::{
    hl_mutation_sequence, hl_seed, kernel_parameters, kernel_subset, kr_subset, seed_qp, tau_kernel_subset,
    ColumnOrder, HLContext,
};
use grascat_core::linalg::{Fp, Rational};
use grascat_core::tableaux::{monomial_to_tableau, tableau_to_monomial, Tableau};
use grascat_core::Error;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::fixtures;
use crate::formats::{
    AnyTuple, EReportJson, ErrorJson, FieldName, GVectorJson, MonomialJson, ProfileJson, QpJson, SeedJson, TableauJson,
    TupleJson,
};
use crate::parallel;
use crate::tables::{paper_table, Table, TABLE_NAMES};

/// Computations on Grassmannian cluster categories.
#[derive(Debug, Parser)]
#[command(name = "grascat", version, about)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

/// Output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tableau operations.
    #[command(subcommand)]
    Tableau(TableauCmd),
    /// Seeds, mutation and exploration.
    #[command(subcommand)]
    Seed(SeedCmd),
    /// g-vector of a tableau with respect to a named seed.
    Gvec(GvecArgs),
    /// Sampled generic E-invariants.
    Einv(EinvArgs),
    /// Hernandez–Leclerc quivers and kernel subsets.
    #[command(subcommand)]
    Hl(HlCmd),
    /// Braid group action on vector tuples.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Profiles and the balance check.
    #[command(subcommand)]
    Profile(ProfileCmd),
    /// Regenerate the reference tables.
    PaperTables(PaperTablesArgs),
}

#[derive(Debug, Subcommand)]
pub enum TableauCmd {
    /// Remove all trivial columns.
    Reduce(OneTableau),
    /// Row-wise union of two tableaux.
    Union(TwoTableaux),
    /// Row-wise difference `first / second`.
    Quotient(TwoTableaux),
    /// Dominance comparison of two tableaux.
    Compare(TwoTableaux),
    /// Promotion.
    Promote(OneTableau),
    /// Bender–Knuth move `BK_i`.
    Bk {
        #[command(flatten)]
        input: OneTableau,
        #[arg(long)]
        i: u32,
    },
    /// The dominant monomial of a tableau.
    ToMonomial(OneTableau),
    /// The tableau of a dominant monomial.
    FromMonomial {
        /// Monomial JSON file, or `-` for standard input.
        #[arg(long)]
        monomial: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct OneTableau {
    /// Tableau JSON file, or `-` for standard input.
    #[arg(long)]
    pub tableau: PathBuf,
}

#[derive(Debug, Args)]
pub struct TwoTableaux {
    /// First tableau JSON file.
    #[arg(long)]
    pub tableau: PathBuf,
    /// Second tableau JSON file.
    #[arg(long)]
    pub other: PathBuf,
}

#[derive(Debug, Args)]
pub struct SeedSource {
    /// Named seed: `grK_N` or `hlK_L`.
    #[arg(long, default_value = "gr3_9", conflicts_with = "file")]
    pub seed: String,
    /// Seed JSON file instead of a named seed.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum SeedCmd {
    /// Print a seed.
    Show(SeedSource),
    /// Mutate at the given vertices in order.
    Mutate {
        #[command(flatten)]
        source: SeedSource,
        /// Mutable vertex index; repeat for a sequence.
        #[arg(long = "at", required = true)]
        at: Vec<usize>,
    },
    /// Breadth-first exploration of the exchange graph.
    Explore {
        #[command(flatten)]
        source: SeedSource,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, default_value_t = 100_000)]
        max_seeds: usize,
    },
    /// Shortest mutation sequence to a seed containing a target tableau.
    Path {
        #[command(flatten)]
        source: SeedSource,
        /// Target tableau JSON file.
        #[arg(long)]
        target: PathBuf,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long, default_value_t = 200_000)]
        max_seeds: usize,
    },
}

#[derive(Debug, Args)]
pub struct GvecArgs {
    /// Tableau JSON file, or `-` for standard input.
    #[arg(long)]
    pub tableau: PathBuf,
    /// Named seed: `grK_N` or `hlK_L`.
    #[arg(long, default_value = "gr3_9")]
    pub seed: String,
    /// Also print the cone presentation.
    #[arg(long)]
    pub cone: bool,
}

#[derive(Debug, Args)]
pub struct EinvArgs {
    /// g-vector JSON file.
    #[arg(long)]
    pub g: PathBuf,
    /// Second g-vector for the pair value.
    #[arg(long)]
    pub h: Option<PathBuf>,
    /// Shipped quiver with potential (`qp_gr39`, `qp_gr48`, `qp_hl_gamma`) or
    /// a named seed.
    #[arg(long, default_value = "qp_gr39")]
    pub algebra: String,
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long, value_enum, default_value_t = FieldName::Rational)]
    pub field: FieldName,
}

#[derive(Debug, Subcommand)]
pub enum HlCmd {
    /// The Kirillov–Reshetikhin subset `J_{i,m}`.
    Kr {
        #[arg(long)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
    },
    /// The kernel subset `I^{(v)}_{i,m}` and its translate.
    Kernel {
        #[arg(long)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long)]
        v: i64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
    },
    /// Compatibility of two kernel subsets, each given as `i,m,v`.
    Compat {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// The column-sweep mutation sequence.
    Sequence {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
    },
    /// The quiver with potential of the Hernandez–Leclerc seed.
    Qp {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum BraidCmd {
    /// Relation checks on random tuples, or on one tuple file.
    Check {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 9)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Master seed; defaults to `GRASCAT_SEED`.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = FieldName::Rational)]
        field: FieldName,
        /// Check this tuple instead of random ones.
        #[arg(long)]
        tuple: Option<PathBuf>,
    },
    /// Apply a word `σ_{i1} … ` (applied left to right) to a tuple.
    Apply {
        #[arg(long)]
        tuple: PathBuf,
        /// Generator indices, comma separated.
        #[arg(long, value_delimiter = ',')]
        word: Vec<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ProfileCmd {
    /// Balance check of a profile against the cone presentation of a tableau.
    Check {
        #[arg(long)]
        profile: PathBuf,
        #[arg(long)]
        tableau: PathBuf,
        #[arg(long, default_value = "gr3_9")]
        seed: String,
    },
    /// Balance checks over a shipped tableau/profile list.
    Fixture {
        /// `gr3_9_rank4`, `gr4_8_rank3` or `gr4_8_rank4`.
        #[arg(long)]
        name: String,
    },
    /// Cyclic shift of every factor.
    Shift {
        #[arg(long)]
        profile: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        by: i64,
    },
    /// Auslander–Reiten translate of a two-interval subset.
    Tau {
        #[arg(long)]
        n: u32,
        /// Subset label such as `3678` or `1,2,10`.
        #[arg(long)]
        subset: String,
        /// Apply the inverse translate.
        #[arg(long)]
        inverse: bool,
    },
}

#[derive(Debug, Args)]
pub struct PaperTablesArgs {
    /// Table name, or `all`.
    #[arg(long, default_value = "all")]
    pub which: String,
}

/// The result of a successful command.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub json: Value,
    pub text: String,
}

impl Output {
    fn new(json: Value, table: Table) -> Self {
        Output { json, text: table.render() }
    }

    /// Render in the requested format, newline terminated.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&self.json).expect("JSON values serialize")),
            Format::Table => self.text.clone(),
        }
    }
}

/// Why a command failed.
#[derive(Debug)]
pub enum Failure {
    /// Bad input files or environment; exit status 2.
    Usage(String),
    /// The library rejected the request; exit status 1.
    Computation(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Computation(e)
    }
}

impl Failure {
    /// Process exit status.
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Computation(_) => 1,
        }
    }

    /// Structured error object.
    pub fn to_json(&self) -> Value {
        let e = match self {
            Failure::Usage(m) => ErrorJson { kind: "Usage".into(), message: m.clone() },
            Failure::Computation(e) => ErrorJson::from(e),
        };
        json!({ "error": e })
    }
}

type Outcome = Result<Output, Failure>;

/// Master seed from `GRASCAT_SEED` (default 0).
pub fn env_seed() -> Result<u64, Failure> {
    match std::env::var("GRASCAT_SEED") {
        Ok(s) => {
            s.trim().parse().map_err(|_| Failure::Usage(format!("GRASCAT_SEED must be an unsigned integer, got {s:?}")))
        }
        Err(_) => Ok(0),
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("cannot parse {}: {e}", path.display())))
}

fn read_tableau(path: &Path) -> Result<Tableau, Failure> {
    Ok(read_json::<TableauJson>(path)?.to_tableau()?)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("output types serialize")
}

fn kv(title: &str, pairs: Vec<(&str, String)>) -> Table {
    Table {
        title: title.to_string(),
        header: Vec::new(),
        rows: pairs.into_iter().map(|(k, v)| vec![k.to_string(), v]).collect(),
    }
}

fn tableau_table(title: &str, t: &Tableau) -> Table {
    Table {
        title: format!("{title} (k={}, n={})", t.k(), t.n()),
        header: Vec::new(),
        rows: t.rows().iter().map(|r| r.iter().map(u32::to_string).collect()).collect(),
    }
}

fn tableau_output(title: &str, t: &Tableau) -> Output {
    Output::new(to_value(&TableauJson::from_tableau(t)), tableau_table(title, t))
}

/// Execute a parsed command.
pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Tableau(c) => tableau_cmd(c),
        Command::Seed(c) => seed_cmd(c),
        Command::Gvec(a) => gvec_cmd(a),
        Command::Einv(a) => einv_cmd(a),
        Command::Hl(c) => hl_cmd(c),
        Command::Braid(c) => braid_cmd(c),
        Command::Profile(c) => profile_cmd(c),
        Command::PaperTables(a) => paper_tables_cmd(a),
    }
}

fn tableau_cmd(c: &TableauCmd) -> Outcome {
    match c {
        TableauCmd::Reduce(a) => Ok(tableau_output("reduced", &read_tableau(&a.tableau)?.reduce())),
        TableauCmd::Union(a) => {
            Ok(tableau_output("union", &read_tableau(&a.tableau)?.union(&read_tableau(&a.other)?)?))
        }
        TableauCmd::Quotient(a) => {
            Ok(tableau_output("quotient", &read_tableau(&a.tableau)?.quotient(&read_tableau(&a.other)?)?))
        }
        TableauCmd::Compare(a) => {
            let d = read_tableau(&a.tableau)?.dominance_compare(&read_tableau(&a.other)?);
            let s = format!("{d:?}");
            Ok(Output::new(json!({ "dominance": s }), kv("dominance", vec![("first vs second", s)])))
        }
        TableauCmd::Promote(a) => Ok(tableau_output("promotion", &read_tableau(&a.tableau)?.promote())),
        TableauCmd::Bk { input, i } => {
            Ok(tableau_output(&format!("BK_{i}"), &read_tableau(&input.tableau)?.bender_knuth(*i)))
        }
        TableauCmd::ToMonomial(a) => {
            let m = tableau_to_monomial(&read_tableau(&a.tableau)?)?;
            let j = MonomialJson::from_monomial(&m);
            let rows = j.factors.iter().map(|(i, s, u)| vec![format!("Y_{{{i},{s}}}"), format!("^{u}")]).collect();
            let table = Table { title: format!("monomial (k={}, ell={})", j.k, j.ell), header: Vec::new(), rows };
            Ok(Output::new(to_value(&j), table))
        }
        TableauCmd::FromMonomial { monomial } => {
            let m = read_json::<MonomialJson>(monomial)?.to_monomial()?;
            Ok(tableau_output("tableau", &monomial_to_tableau(&m)?))
        }
    }
}

fn load_seed(s: &SeedSource) -> Result<grascat_core::cluster::Seed, Failure> {
    match &s.file {
        Some(p) => Ok(read_json::<SeedJson>(p)?.to_seed()?),
        None => Ok(fixtures::named_seed(&s.seed)?),
    }
}

fn seed_table(title: &str, seed: &grascat_core::cluster::Seed) -> Table {
    let q = seed.quiver();
    let rows = seed
        .labels()
        .iter()
        .enumerate()
        .map(|(v, t)| {
            let kind = if q.is_frozen(v) { "frozen" } else { "mutable" };
            let out: Vec<String> = (0..q.m()).filter(|&w| q.arrow_count(v, w) > 0).map(|w| w.to_string()).collect();
            vec![v.to_string(), kind.to_string(), t.to_string(), out.join(",")]
        })
        .collect();
    Table {
        title: title.to_string(),
        header: vec!["vertex".into(), "kind".into(), "label".into(), "arrows to".into()],
        rows,
    }
}

fn seed_cmd(c: &SeedCmd) -> Outcome {
    match c {
        SeedCmd::Show(s) => {
            let seed = load_seed(s)?;
            Ok(Output::new(to_value(&SeedJson::from_seed(&seed)), seed_table("seed", &seed)))
        }
        SeedCmd::Mutate { source, at } => {
            let mut seed = load_seed(source)?;
            for &r in at {
                if r >= seed.quiver().m() {
                    return Err(Error::OutOfRange(format!("vertex {r} of {}", seed.quiver().m())).into());
                }
                seed = seed.mutate(r)?;
            }
            Ok(Output::new(to_value(&SeedJson::from_seed(&seed)), seed_table("mutated seed", &seed)))
        }
        SeedCmd::Explore { source, depth, max_seeds } => {
            let seed = load_seed(source)?;
            let e = parallel::explore(&seed, *depth, *max_seeds)?;
            let vars: Vec<Value> =
                e.variables.iter().map(|(t, g)| json!({ "rows": t.rows(), "g": g.coords() })).collect();
            let rows = e.variables.iter().map(|(t, g)| vec![t.to_string(), format!("{:?}", g.coords())]).collect();
            let table = Table {
                title: format!(
                    "{} variables, {} seeds, closed={}, budget_exceeded={}",
                    e.variables.len(),
                    e.seeds,
                    e.closed,
                    e.budget_exceeded
                ),
                header: vec!["tableau".into(), "g".into()],
                rows,
            };
            let j = json!({
                "variables": vars,
                "seeds": e.seeds,
                "closed": e.closed,
                "budget_exceeded": e.budget_exceeded,
            });
            Ok(Output::new(j, table))
        }
        SeedCmd::Path { source, target, depth, max_seeds } => {
            let seed = load_seed(source)?;
            let t = read_tableau(target)?;
            let path = find_mutation_path(&seed, &t, *depth, *max_seeds)?;
            let shown = path.as_ref().map_or("not found".to_string(), |p| format!("{p:?}"));
            Ok(Output::new(json!({ "path": path }), kv("mutation path", vec![("path", shown)])))
        }
    }
}

fn gvec_cmd(a: &GvecArgs) -> Outcome {
    let seed = fixtures::named_seed(&a.seed)?;
    let t = read_tableau(&a.tableau)?;
    let g = GVectorSolver::new(&seed)?.g_vector(&t)?;
    let labels: Vec<String> = match seed.subset_labels() {
        Some(l) => l.iter().map(KSubset::label).collect(),
        None => seed.labels().iter().map(Tableau::to_string).collect(),
    };
    let mut rows: Vec<Vec<String>> =
        labels.iter().zip(g.coords()).map(|(l, c)| vec![l.clone(), c.to_string()]).collect();
    let mut j = to_value(&GVectorJson::from_gvector(&g, labels));
    if a.cone {
        let cone = cone_presentation(&g, &seed)?;
        let names = |v: &[KSubset]| v.iter().map(KSubset::label).collect::<Vec<_>>();
        j["cone"] = json!({ "sub": names(cone.sub()), "quot": names(cone.quot()) });
        rows.push(vec!["sub".into(), names(cone.sub()).join(" ")]);
        rows.push(vec!["quot".into(), names(cone.quot()).join(" ")]);
    }
    Ok(Output::new(j, Table { title: format!("g-vector over {}", a.seed), header: Vec::new(), rows }))
}

fn einv_cmd(a: &EinvArgs) -> Outcome {
    let seed = env_seed()?;
    let algebra = fixtures::named_algebra(&a.algebra)?;
    let g = read_json::<GVectorJson>(&a.g)?.to_gvector()?;
    let s = Sampling { samples: a.samples, field: FieldChoice::from(a.field), seed };
    let report = match &a.h {
        Some(h) => parallel::generic_e_pair(&algebra, &g, &read_json::<GVectorJson>(h)?.to_gvector()?, s)?,
        None => parallel::generic_e(&algebra, &g, s)?,
    };
    let r = EReportJson::new(&report, seed);
    let name = if a.h.is_some() { "e(g,h)" } else { "e(g)" };
    let table = kv(
        name,
        vec![
            ("value", r.value.to_string()),
            ("status", r.status.clone()),
            ("samples", r.samples.to_string()),
            ("witness sample", r.witness.to_string()),
            ("seed", r.seed.to_string()),
        ],
    );
    Ok(Output::new(to_value(&r), table))
}

fn parse_triple(s: &str) -> Result<(i64, i64, i64), Failure> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("expected i,m,v, got {s:?}")))?;
    match parts.as_slice() {
        &[i, m, v] => Ok((i, m, v)),
        _ => Err(Failure::Usage(format!("expected i,m,v, got {s:?}"))),
    }
}

fn hl_cmd(c: &HlCmd) -> Outcome {
    match *c {
        HlCmd::Kr { i, m, k, ell } => {
            let j = kr_subset(i, m, k, ell)?;
            Ok(Output::new(json!({ "subset": j.elements() }), kv("J_(i,m)", vec![("subset", j.label())])))
        }
        HlCmd::Kernel { i, m, v, k, ell } => {
            let ker = kernel_subset(i, m, v, k, ell)?;
            let tau = tau_kernel_subset(i, m, v, k, ell)?;
            let j = json!({ "kernel": ker.elements(), "tau": tau.elements() });
            Ok(Output::new(j, kv("kernel subset", vec![("I", ker.label()), ("tau", tau.label())])))
        }
        HlCmd::Compat { ref a, ref b, k, ell, samples } => {
            let (ta, tb) = (parse_triple(a)?, parse_triple(b)?);
            let seed = env_seed()?;
            let s = Sampling { samples, field: FieldChoice::Rational, seed };
            let (ok, report) = HLContext::new(k, ell)?.kr_compatible(ta, tb, s)?;
            let r = EReportJson::new(&report, seed);
            let table = kv(
                "kernel compatibility",
                vec![("compatible", ok.to_string()), ("e", r.value.to_string()), ("status", r.status.clone())],
            );
            Ok(Output::new(json!({ "compatible": ok, "report": r }), table))
        }
        HlCmd::Sequence { k, ell } => {
            let seq = hl_mutation_sequence(k, ell, ColumnOrder::TopDown);
            Ok(Output::new(json!({ "sequence": seq }), kv("mutation sequence", vec![("vertices", format!("{seq:?}"))])))
        }
        HlCmd::Qp { k, ell } => {
            let qp = seed_qp(&hl_seed(k, ell)?)?;
            let j = QpJson::from_qp(&qp);
            let rows = j.arrows.iter().map(|a| vec![a.id.clone(), a.from.clone(), a.to.clone()]).collect();
            let table = Table {
                title: format!("quiver with potential, k={k}, l={ell}"),
                header: vec!["arrow".into(), "from".into(), "to".into()],
                rows,
            };
            Ok(Output::new(to_value(&j), table))
        }
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::Undefined => "undefined",
    }
}

#[derive(Default)]
struct Tally {
    rows: Vec<(String, [usize; 3], [usize; 3])>,
}

impl Tally {
    fn add(&mut self, family: &str, v: &RelationVerdict) {
        let key = format!("{family} {:?}", v.generators);
        let pos = match self.rows.iter().position(|r| r.0 == key) {
            Some(p) => p,
            None => {
                self.rows.push((key, [0; 3], [0; 3]));
                self.rows.len() - 1
            }
        };
        let idx = |v: Verdict| v as usize;
        self.rows[pos].1[idx(v.tuple)] += 1;
        self.rows[pos].2[idx(v.plucker)] += 1;
    }
}

fn braid_summary(reports: &[Option<BraidReport>]) -> (Value, Table) {
    let mut tally = Tally::default();
    let mut generic = 0;
    let mut preserved = 0;
    for r in reports.iter().flatten() {
        generic += 1;
        preserved += usize::from(r.genericity_preserved);
        for v in &r.periodicity {
            tally.add("periodicity", v);
        }
        for v in &r.commutation {
            tally.add("commutation", v);
        }
        for v in &r.braid {
            tally.add("braid", v);
        }
    }
    let names = [Verdict::Holds, Verdict::Fails, Verdict::Undefined].map(verdict_name);
    let counts = |c: &[usize; 3]| json!({ names[0]: c[0], names[1]: c[1], names[2]: c[2] });
    let relations: Vec<Value> =
        tally.rows.iter().map(|(k, t, p)| json!({ "relation": k, "tuple": counts(t), "plucker": counts(p) })).collect();
    let j = json!({
        "trials": reports.len(),
        "generic": generic,
        "genericity_preserved": preserved,
        "relations": relations,
    });
    let fmt = |c: &[usize; 3]| format!("{}/{}/{}", c[0], c[1], c[2]);
    let mut rows: Vec<Vec<String>> = tally.rows.iter().map(|(k, t, p)| vec![k.clone(), fmt(t), fmt(p)]).collect();
    rows.push(vec!["genericity preserved".into(), format!("{preserved}/{generic}"), String::new()]);
    let table = Table {
        title: format!("braid relations on {} tuples (holds/fails/undefined)", reports.len()),
        header: vec!["relation".into(), "tuple".into(), "plucker".into()],
        rows,
    };
    (j, table)
}

fn braid_cmd(c: &BraidCmd) -> Outcome {
    match c {
        BraidCmd::Check { k, n, trials, seed, field, tuple } => {
            let reports = match tuple {
                Some(p) => {
                    let r = match read_json::<TupleJson>(p)?.to_tuple()? {
                        AnyTuple::Rational(t) => braid_property_check(&t)?,
                        AnyTuple::Prime(t) => braid_property_check(&t)?,
                    };
                    vec![Some(r)]
                }
                None => {
                    let seed = match seed {
                        Some(s) => *s,
                        None => env_seed()?,
                    };
                    match field {
                        FieldName::Rational => parallel::braid_trials::<Rational>(*k, *n, *trials, seed)?,
                        FieldName::Prime => parallel::braid_trials::<Fp>(*k, *n, *trials, seed)?,
                    }
                }
            };
            let (j, t) = braid_summary(&reports);
            Ok(Output::new(j, t))
        }
        BraidCmd::Apply { tuple, word } => {
            let out = match read_json::<TupleJson>(tuple)?.to_tuple()? {
                AnyTuple::Rational(t) => TupleJson::from_rational(&t.sigma_word(word)?),
                AnyTuple::Prime(t) => TupleJson::from_prime(&t.sigma_word(word)?),
            };
            let table = Table { title: format!("sigma word {word:?}"), header: Vec::new(), rows: out.vectors.clone() };
            Ok(Output::new(to_value(&out), table))
        }
    }
}

fn profile_cmd(c: &ProfileCmd) -> Outcome {
    match c {
        ProfileCmd::Check { profile, tableau, seed } => {
            let p = read_json::<ProfileJson>(profile)?.to_profile()?;
            let t = read_tableau(tableau)?;
            let s = fixtures::named_seed(seed)?;
            let g = GVectorSolver::new(&s)?.g_vector(&t)?;
            let ok = profile_balance_check(&p, &cone_presentation(&g, &s)?)?;
            Ok(Output::new(
                json!({ "balanced": ok }),
                kv("balance", vec![("profile", p.to_string()), ("balanced", ok.to_string())]),
            ))
        }
        ProfileCmd::Fixture { name } => {
            let set = fixtures::profile_set(name)?;
            let seed = fixtures::named_seed(&format!("gr{}_{}", set.k, set.n))?;
            let solver = GVectorSolver::new(&seed)?;
            let mut rows = Vec::new();
            let mut results = Vec::new();
            for e in &set.entries {
                let t = set.tableau(e)?;
                let p = set.profile(e)?;
                let ok = profile_balance_check(&p, &cone_presentation(&solver.g_vector(&t)?, &seed)?)?;
                rows.push(vec![t.to_string(), p.to_string(), ok.to_string()]);
                results.push(json!({ "rows": e.rows, "profile": p.to_string(), "balanced": ok }));
            }
            let passed = results.iter().filter(|r| r["balanced"] == true).count();
            let table = Table {
                title: format!("{name}: {passed}/{} balanced", set.entries.len()),
                header: vec!["tableau".into(), "profile".into(), "balanced".into()],
                rows,
            };
            Ok(Output::new(json!({ "name": name, "passed": passed, "entries": results }), table))
        }
        ProfileCmd::Shift { profile, by } => {
            let p = cyclic_shift_profile(&read_json::<ProfileJson>(profile)?.to_profile()?, *by);
            Ok(Output::new(
                to_value(&ProfileJson::from_profile(&p)),
                kv("shifted profile", vec![("profile", p.to_string())]),
            ))
        }
        ProfileCmd::Tau { n, subset, inverse } => {
            let s = KSubset::parse(*n, subset)?;
            let t = if *inverse { tau_inverse_two_interval(&s)? } else { tau_two_interval(&s)? };
            let params = kernel_parameters(&t, t.k(), (*n as usize).saturating_sub(t.k() + 1)).ok();
            let mut j = json!({ "subset": t.elements() });
            if let Some(p) = params {
                j["kernel_parameters"] = json!(p);
            }
            Ok(Output::new(j, kv("translate", vec![("input", s.label()), ("output", t.label())])))
        }
    }
}

fn paper_tables_cmd(a: &PaperTablesArgs) -> Outcome {
    let names: Vec<&str> = if a.which == "all" { TABLE_NAMES.to_vec() } else { vec![a.which.as_str()] };
    let tables = names.iter().map(|n| paper_table(n)).collect::<Result<Vec<_>, _>>()?;
    let j = json!(tables.iter().zip(&names).map(|(t, n)| json!({ "which": n, "table": t })).collect::<Vec<_>>());
    let text = tables.iter().map(Table::render).collect::<Vec<_>>().join("\n");
    Ok(Output { json: if tables.len() == 1 { to_value(&tables[0]) } else { j }, text })
}
