//! Command-line front end.
//!
//! Every subcommand reads one relation, optionally closes it to a
//! quasiorder, and writes a deterministic report to stdout. Exit status is 0
//! on success, 1 when the input fails validation (e.g. it is not a
//! quasiorder) and 2 on I/O, parse or usage errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::approx::{frame_correspondence, ApproxContext, CorrespondenceReport};
use crate::complement::complement_reports;
use crate::error::Error;
use crate::irreducible::{join_irreducibles, Origin};
use crate::lattice::{join_construction, meet_construction, RoughSet, RsLattice};
use crate::mask::SubsetMask;
use crate::relation::{ComponentPartition, PropertyReport, Relation};
use crate::structure::{analyze, is_stone, StoneWitness};
use crate::topology::{topology_down, topology_up, AlexandrovTopology};
use crate::universe::Universe;

pub const DEFAULT_ENUMERATION_CAP: usize = 20;

#[derive(Debug, Parser)]
#[command(name = "roughlattice", version)]
#[command(about = "Rough-set lattices of quasiorders: approximations, meets and joins, complements, irreducibles, Stone test")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Component structure, Stone test and lattice sizes
    Analyze {
        #[command(flatten)]
        common: CommonArgs,
        /// Embed a component-coloured Hasse diagram (DOT) in the report
        #[arg(long)]
        dot: bool,
    },
    /// Approximations of one subset, or the frame correspondence table
    Approx {
        #[command(flatten)]
        common: CommonArgs,
        /// Subset as comma-separated indices, e.g. "0,2"
        #[arg(long, required_unless_present = "frame")]
        set: Option<String>,
        /// Check the four relational properties against their approximation laws
        #[arg(long)]
        frame: bool,
    },
    /// Enumerate the lattice of rough sets
    Lattice {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Completely join- and meet-irreducible elements
    Irreducibles {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// De Morgan map, pseudocomplement and dual pseudocomplement
    Complements {
        #[command(flatten)]
        common: CommonArgs,
        /// Report on A(X) for this subset only
        #[arg(long)]
        set: Option<String>,
    },
    /// Bases and open sets of the two Alexandrov topologies
    Topology {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Witness set realizing the meet or join of a family
    Witness {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, conflicts_with = "join", required_unless_present = "join")]
        meet: bool,
        #[arg(long)]
        join: bool,
        /// Family of subsets: ';' between sets, ',' between indices, e.g. "0,1;2"
        #[arg(long)]
        sets: String,
    },
    /// Decide whether the lattice of rough sets is a Stone lattice
    Stone {
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Relation file
    pub input: PathBuf,
    /// Input format; inferred from the file extension when omitted
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,
    /// Largest universe (or component) size for exhaustive enumeration
    #[arg(long, env = "ROUGHLATTICE_CAP", default_value_t = DEFAULT_ENUMERATION_CAP,
          value_parser = parse_cap)]
    pub cap: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
    /// What to do with a relation that is not a quasiorder
    #[arg(long, value_enum, default_value_t = ClosureMode::Reject)]
    pub closure: ClosureMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Json,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClosureMode {
    Reject,
    ReflexiveTransitiveClose,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Input(_) | CliError::Usage(_) => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptyUniverse
            | Error::DuplicateName(_)
            | Error::IndexOutOfRange { .. }
            | Error::SizeMismatch { .. } => CliError::Input(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

/// Output of a successful run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub stdout: String,
    /// Notes for stderr; never part of the deterministic report.
    pub notes: Vec<String>,
}

#[derive(Debug, Deserialize)]
struct RelationFile {
    universe: Vec<String>,
    pairs: Vec<[usize; 2]>,
}

/// Parses a relation from text.
///
/// `json`: `{"universe": [names...], "pairs": [[i, j], ...]}` with 0-based
/// indices. `edgelist`: one `i j` pair per line; blank lines and lines
/// starting with `#` are skipped; the universe is `0..=max index`, named by
/// decimal index.
pub fn parse_relation_str(text: &str, format: InputFormat) -> Result<Relation, CliError> {
    match format {
        InputFormat::Json => {
            let file: RelationFile = serde_json::from_str(text)
                .map_err(|e| CliError::Input(format!("malformed relation JSON: {e}")))?;
            let universe = Arc::new(Universe::new(file.universe)?);
            let n = universe.size();
            for (k, [i, j]) in file.pairs.iter().enumerate() {
                if let Some(bad) = [*i, *j].into_iter().find(|&v| v >= n) {
                    return Err(CliError::Input(format!(
                        "pair {k} [{i},{j}]: index {bad} out of range for universe of size {n}"
                    )));
                }
            }
            Ok(Relation::from_pairs(universe, file.pairs.iter().map(|&[i, j]| (i, j)))?)
        }
        InputFormat::Edgelist => {
            let mut pairs = Vec::new();
            for (lineno, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let fields: Vec<&str> = line.split_whitespace().collect();
                let parsed: Option<Vec<usize>> = fields.iter().map(|f| f.parse().ok()).collect();
                match parsed.as_deref() {
                    Some(&[i, j]) => pairs.push((i, j)),
                    _ => {
                        return Err(CliError::Input(format!(
                            "line {}: expected two non-negative indices, found {line:?}",
                            lineno + 1
                        )))
                    }
                }
            }
            let size = pairs
                .iter()
                .map(|&(i, j)| i.max(j) + 1)
                .max()
                .ok_or_else(|| CliError::Input("edge list contains no pairs".into()))?;
            let universe = Arc::new(Universe::indexed(size)?);
            Ok(Relation::from_pairs(universe, pairs)?)
        }
    }
}

pub fn parse_relation(path: &Path, format: InputFormat) -> Result<Relation, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_relation_str(&text, format)
}

fn parse_cap(s: &str) -> Result<usize, String> {
    match s.trim().parse::<usize>() {
        Ok(0) => Err("cap must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn infer_format(path: &Path) -> InputFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("json") => InputFormat::Json,
        _ => InputFormat::Edgelist,
    }
}

/// Parses `"0,1;2"` into a family of subsets. Empty segments are empty sets.
pub fn parse_family(text: &str, universe_size: usize) -> Result<Vec<SubsetMask>, CliError> {
    text.split(';')
        .map(|s| parse_subset(s, universe_size))
        .collect()
}

/// Parses `"0,2"` (optionally in braces) into a subset.
pub fn parse_subset(text: &str, universe_size: usize) -> Result<SubsetMask, CliError> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut indices = Vec::new();
    for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let i: usize = tok
            .parse()
            .map_err(|_| CliError::Usage(format!("bad element index {tok:?} in set {text:?}")))?;
        indices.push(i);
    }
    SubsetMask::from_indices(universe_size, indices).map_err(|e| CliError::Usage(e.to_string()))
}

fn load(common: &CommonArgs) -> Result<Relation, CliError> {
    let format = common.format.unwrap_or_else(|| infer_format(&common.input));
    parse_relation(&common.input, format)
}

fn prepare(relation: Relation, mode: ClosureMode) -> Result<(Relation, Vec<String>), CliError> {
    let mut notes = Vec::new();
    let Some(violation) = relation.quasiorder_violation() else {
        return Ok((relation, notes));
    };
    match mode {
        ClosureMode::Reject => Err(CliError::Validation(format!(
            "not a quasiorder: {violation}"
        ))),
        ClosureMode::ReflexiveTransitiveClose => {
            let closed = relation.reflexive_transitive_closure();
            notes.push(format!(
                "input is not a quasiorder ({violation}); reporting on its reflexive-transitive closure ({} pairs added)",
                closed.pair_count() - relation.pair_count()
            ));
            Ok((closed, notes))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoughSetJson {
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
}

impl From<&RoughSet> for RoughSetJson {
    fn from(rs: &RoughSet) -> Self {
        RoughSetJson {
            lower: rs.lower.to_indices(),
            upper: rs.upper.to_indices(),
        }
    }
}

/// The `lattice --output json` document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub universe: Vec<String>,
    pub elements: Vec<RoughSetJson>,
    /// Least subset realizing each element.
    pub representatives: Vec<Vec<usize>>,
    /// Hasse diagram edges `[lower, upper]` by element index.
    pub cover_edges: Vec<[usize; 2]>,
    pub bottom: RoughSetJson,
    pub top: RoughSetJson,
}

impl LatticeJson {
    fn new(universe: &Universe, lattice: &RsLattice) -> Self {
        LatticeJson {
            universe: universe.names().to_vec(),
            elements: lattice.elements().iter().map(RoughSetJson::from).collect(),
            representatives: (0..lattice.len())
                .map(|i| lattice.representative(i).to_indices())
                .collect(),
            cover_edges: lattice.cover_edges().into_iter().map(|(a, b)| [a, b]).collect(),
            bottom: lattice.bottom().into(),
            top: lattice.top().into(),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn named_set(universe: &Universe, set: &SubsetMask) -> String {
    let names: Vec<&str> = set.iter().map(|i| universe.name(i)).collect();
    format!("{{{}}}", names.join(","))
}

fn named_pair(universe: &Universe, rs: &RoughSet) -> String {
    format!(
        "({}, {})",
        named_set(universe, &rs.lower),
        named_set(universe, &rs.upper)
    )
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

const EDGE_COLOURS: [&str; 8] = [
    "black", "red3", "blue3", "green4", "darkorange2", "purple3", "cyan4", "goldenrod3",
];

/// Hasse diagram in DOT. With `components`, each cover edge is coloured by
/// the component in which its endpoints differ.
pub fn hasse_dot(
    universe: &Universe,
    lattice: &RsLattice,
    components: Option<&ComponentPartition>,
) -> String {
    let mut out = String::new();
    out.push_str("digraph rough_sets {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (i, e) in lattice.elements().iter().enumerate() {
        let _ = writeln!(
            out,
            "  n{i} [label=\"{}\"];",
            dot_escape(&named_pair(universe, e))
        );
    }
    for (a, b) in lattice.cover_edges() {
        match components {
            Some(comps) => {
                let (x, y) = (&lattice.elements()[a], &lattice.elements()[b]);
                let diff = y.lower.difference(&x.lower).union(&y.upper.difference(&x.upper));
                let block = diff.first().map(|e| comps.block_of(e)).unwrap_or(0);
                let _ = writeln!(
                    out,
                    "  n{a} -> n{b} [color=\"{}\"];",
                    EDGE_COLOURS[block % EDGE_COLOURS.len()]
                );
            }
            None => {
                let _ = writeln!(out, "  n{a} -> n{b};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct WitnessJson {
    index: usize,
    composed: Vec<usize>,
    component: Vec<usize>,
}

impl From<&StoneWitness> for WitnessJson {
    fn from(w: &StoneWitness) -> Self {
        WitnessJson {
            index: w.element,
            composed: w.composed.to_indices(),
            component: w.component.to_indices(),
        }
    }
}

#[derive(Serialize)]
struct ShapeJson {
    singletons: usize,
    larger: usize,
    predicted_rs_size: Option<u128>,
}

#[derive(Serialize)]
struct AnalyzeJson {
    universe: Vec<String>,
    properties: PropertyReport,
    components: Vec<Vec<usize>>,
    per_component_rs_size: Vec<Option<usize>>,
    rs_size: Option<u128>,
    is_stone: bool,
    stone_witness: Option<WitnessJson>,
    is_directly_indecomposable: bool,
    equivalence_shape: Option<ShapeJson>,
    down_directed_components: Option<Vec<bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hasse_dot: Option<String>,
}

#[derive(Serialize)]
struct ApproxJson {
    universe: Vec<String>,
    set: Vec<usize>,
    lower: Vec<usize>,
    upper: Vec<usize>,
    lower_inv: Vec<usize>,
    upper_inv: Vec<usize>,
    rough_set: RoughSetJson,
}

#[derive(Serialize)]
struct FrameJson {
    universe: Vec<String>,
    correspondence: CorrespondenceReport,
}

#[derive(Serialize)]
struct IrreducibleJson {
    lower: Vec<usize>,
    upper: Vec<usize>,
    origin: Origin,
}

#[derive(Serialize)]
struct IrreduciblesJson {
    universe: Vec<String>,
    join_irreducibles: Vec<IrreducibleJson>,
    meet_irreducibles: Vec<IrreducibleJson>,
}

#[derive(Serialize)]
struct ComplementJson {
    element: RoughSetJson,
    de_morgan: RoughSetJson,
    pseudo: RoughSetJson,
    dual_pseudo: RoughSetJson,
    is_exact: bool,
    is_complemented: bool,
}

#[derive(Serialize)]
struct ComplementsJson {
    universe: Vec<String>,
    reports: Vec<ComplementJson>,
}

#[derive(Serialize)]
struct TopologyPartJson {
    base: Vec<Vec<usize>>,
    /// `None` when the universe exceeds the enumeration cap.
    opens: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize)]
struct TopologyJson {
    universe: Vec<String>,
    up: TopologyPartJson,
    down: TopologyPartJson,
}

#[derive(Serialize)]
struct ConstructionJson {
    defect: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    escaping: Option<Vec<usize>>,
    cofinal_ground: Vec<usize>,
    part_a: Vec<usize>,
    part_b: Vec<usize>,
}

#[derive(Serialize)]
struct WitnessOutJson {
    universe: Vec<String>,
    kind: &'static str,
    sets: Vec<Vec<usize>>,
    witness: Vec<usize>,
    rough_set: RoughSetJson,
    construction: ConstructionJson,
}

#[derive(Serialize)]
struct StoneJson {
    universe: Vec<String>,
    is_stone: bool,
    witness: Option<WitnessJson>,
}

fn unsupported(output: OutputFormat, what: &str) -> CliError {
    CliError::Usage(format!("output format {output:?} is not available for `{what}`"))
}

fn topology_part(t: &AlexandrovTopology, cap: usize) -> TopologyPartJson {
    TopologyPartJson {
        base: t.base().iter().map(SubsetMask::to_indices).collect(),
        opens: t
            .enumerate_opens(cap)
            .ok()
            .map(|v| v.iter().map(SubsetMask::to_indices).collect()),
    }
}

/// Runs one subcommand and renders its report.
pub fn run(cli: &Cli) -> Result<RunOutput, CliError> {
    let common = match &cli.command {
        Command::Analyze { common, .. }
        | Command::Approx { common, .. }
        | Command::Lattice { common }
        | Command::Irreducibles { common }
        | Command::Complements { common, .. }
        | Command::Topology { common }
        | Command::Witness { common, .. }
        | Command::Stone { common } => common,
    };
    let relation = load(common)?;
    // approx reads the relation as given unless closure was asked for; --frame always does
    let (relation, notes) = match &cli.command {
        Command::Approx { frame: true, .. } => (relation, Vec::new()),
        Command::Approx { .. } if common.closure == ClosureMode::Reject => (relation, Vec::new()),
        _ => prepare(relation, common.closure)?,
    };
    let stdout = render(&cli.command, common, relation)?;
    Ok(RunOutput { stdout, notes })
}

fn render(command: &Command, common: &CommonArgs, relation: Relation) -> Result<String, CliError> {
    let universe = relation.universe().clone();
    let names = universe.names().to_vec();
    let n = relation.size();
    let cap = common.cap;
    let output = common.output;
    let ctx = ApproxContext::new(relation.clone());
    match command {
        Command::Analyze { dot, .. } => {
            if output != OutputFormat::Json {
                return Err(unsupported(output, "analyze"));
            }
            let report = analyze(&relation, cap)?;
            let hasse = if *dot && n <= cap {
                let lattice = RsLattice::enumerate_capped(&ctx, cap)?;
                Some(hasse_dot(&universe, &lattice, Some(&report.components)))
            } else {
                None
            };
            Ok(to_json(&AnalyzeJson {
                universe: names,
                properties: report.properties,
                components: report.components.blocks().iter().map(SubsetMask::to_indices).collect(),
                rs_size: report.rs_size(),
                per_component_rs_size: report.per_component_rs_size,
                is_stone: report.is_stone,
                stone_witness: report.stone_witness.as_ref().map(WitnessJson::from),
                is_directly_indecomposable: report.is_directly_indecomposable,
                equivalence_shape: report.equivalence_shape.map(|s| ShapeJson {
                    singletons: s.singletons,
                    larger: s.larger,
                    predicted_rs_size: s.predicted_rs_size(),
                }),
                down_directed_components: report.down_directed_components,
                hasse_dot: hasse,
            }))
        }
        Command::Approx { set, frame, .. } => {
            if *frame {
                let report = frame_correspondence(&relation, cap)?;
                return match output {
                    OutputFormat::Json => Ok(to_json(&FrameJson {
                        universe: names,
                        correspondence: report,
                    })),
                    OutputFormat::Text => Ok(report
                        .rows
                        .iter()
                        .map(|r| {
                            format!(
                                "{:?}: relation={} approximations={}\n",
                                r.property, r.relational, r.approximation
                            )
                        })
                        .collect()),
                    OutputFormat::Dot => Err(unsupported(output, "approx")),
                };
            }
            let x = parse_subset(set.as_deref().unwrap_or_default(), n)?;
            let lower = ctx.lower(&x)?;
            let upper = ctx.upper(&x)?;
            let lower_inv = ctx.lower_inv(&x)?;
            let upper_inv = ctx.upper_inv(&x)?;
            match output {
                OutputFormat::Json => Ok(to_json(&ApproxJson {
                    universe: names,
                    set: x.to_indices(),
                    rough_set: RoughSetJson {
                        lower: lower.to_indices(),
                        upper: upper.to_indices(),
                    },
                    lower: lower.to_indices(),
                    upper: upper.to_indices(),
                    lower_inv: lower_inv.to_indices(),
                    upper_inv: upper_inv.to_indices(),
                })),
                OutputFormat::Text => {
                    let u = &universe;
                    Ok(format!(
                        "X = {}\nlower = {}\nupper = {}\nlower_inv = {}\nupper_inv = {}\n",
                        named_set(u, &x),
                        named_set(u, &lower),
                        named_set(u, &upper),
                        named_set(u, &lower_inv),
                        named_set(u, &upper_inv)
                    ))
                }
                OutputFormat::Dot => Err(unsupported(output, "approx")),
            }
        }
        Command::Lattice { .. } => {
            let lattice = RsLattice::enumerate_capped(&ctx, cap)?;
            match output {
                OutputFormat::Json => Ok(to_json(&LatticeJson::new(&universe, &lattice))),
                OutputFormat::Dot => Ok(hasse_dot(&universe, &lattice, None)),
                OutputFormat::Text => Ok(lattice
                    .elements()
                    .iter()
                    .enumerate()
                    .map(|(i, e)| format!("{i}: {}\n", named_pair(&universe, e)))
                    .collect()),
            }
        }
        Command::Irreducibles { .. } => {
            if output != OutputFormat::Json {
                return Err(unsupported(output, "irreducibles"));
            }
            let cat = join_irreducibles(&ctx)?;
            let entries = |list: &[RoughSet]| {
                list.iter()
                    .zip(&cat.origin)
                    .map(|(rs, o)| IrreducibleJson {
                        lower: rs.lower.to_indices(),
                        upper: rs.upper.to_indices(),
                        origin: *o,
                    })
                    .collect()
            };
            Ok(to_json(&IrreduciblesJson {
                universe: names,
                join_irreducibles: entries(&cat.join_irr),
                meet_irreducibles: entries(&cat.meet_irr),
            }))
        }
        Command::Complements { set, .. } => {
            if output != OutputFormat::Json {
                return Err(unsupported(output, "complements"));
            }
            let elements = match set {
                Some(s) => vec![ctx.rough_pair(&parse_subset(s, n)?)?],
                None => RsLattice::enumerate_capped(&ctx, cap)?.elements().to_vec(),
            };
            let reports = complement_reports(&ctx, &elements)?
                .iter()
                .map(|r| ComplementJson {
                    element: (&r.element).into(),
                    de_morgan: (&r.de_morgan).into(),
                    pseudo: (&r.pseudo).into(),
                    dual_pseudo: (&r.dual_pseudo).into(),
                    is_exact: r.is_exact,
                    is_complemented: r.is_complemented,
                })
                .collect();
            Ok(to_json(&ComplementsJson {
                universe: names,
                reports,
            }))
        }
        Command::Topology { .. } => {
            if output != OutputFormat::Json {
                return Err(unsupported(output, "topology"));
            }
            Ok(to_json(&TopologyJson {
                universe: names,
                up: topology_part(&topology_up(&relation)?, cap),
                down: topology_part(&topology_down(&relation)?, cap),
            }))
        }
        Command::Witness { meet, sets, .. } => {
            let family = parse_family(sets, n)?;
            let (kind, witness, construction) = if *meet {
                let c = meet_construction(&ctx, &family)?;
                (
                    "meet",
                    c.witness.clone(),
                    ConstructionJson {
                        defect: c.defect.to_indices(),
                        escaping: None,
                        cofinal_ground: c.split.ground.to_indices(),
                        part_a: c.split.part_a.to_indices(),
                        part_b: c.split.part_b.to_indices(),
                    },
                )
            } else {
                let c = join_construction(&ctx, &family)?;
                (
                    "join",
                    c.witness.clone(),
                    ConstructionJson {
                        defect: c.defect.to_indices(),
                        escaping: Some(c.escaping.to_indices()),
                        cofinal_ground: c.split.ground.to_indices(),
                        part_a: c.split.part_a.to_indices(),
                        part_b: c.split.part_b.to_indices(),
                    },
                )
            };
            let rough = ctx.rough_pair(&witness)?;
            match output {
                OutputFormat::Json => Ok(to_json(&WitnessOutJson {
                    universe: names,
                    kind,
                    sets: family.iter().map(SubsetMask::to_indices).collect(),
                    witness: witness.to_indices(),
                    rough_set: (&rough).into(),
                    construction,
                })),
                OutputFormat::Text => {
                    let label = if *meet { "W" } else { "V" };
                    Ok(format!(
                        "{label} = {}\nA({label}) = {}\n",
                        named_set(&universe, &witness),
                        named_pair(&universe, &rough)
                    ))
                }
                OutputFormat::Dot => Err(unsupported(output, "witness")),
            }
        }
        Command::Stone { .. } => {
            let verdict = is_stone(&relation)?;
            match output {
                OutputFormat::Json => Ok(to_json(&StoneJson {
                    universe: names,
                    is_stone: verdict.is_stone,
                    witness: verdict.witness.as_ref().map(WitnessJson::from),
                })),
                OutputFormat::Text => Ok(match &verdict.witness {
                    None => "stone: true\n".to_string(),
                    Some(w) => format!(
                        "stone: false\nwitness: {}: (R⁻¹∘R) row {} differs from component {}\n",
                        universe.name(w.element),
                        named_set(&universe, &w.composed),
                        named_set(&universe, &w.component)
                    ),
                }),
                OutputFormat::Dot => Err(unsupported(output, "stone")),
            }
        }
    }
}
