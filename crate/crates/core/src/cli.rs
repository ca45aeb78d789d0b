//! Command-line front end.
//!
//! [`run`] turns a [`CommandConfig`] into an exit status and a report
//! document. The structured format is line-delimited JSON: a header line
//! carrying the schema name and version, then one record per line. Output is
//! a pure function of the configuration.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cyclotomic::CyclotomicNumber;
use crate::dicyclic::{brauer_characters, character_table, CharacterFn, CharacterSelector, DicyclicElement, DicyclicGroup};
use crate::error::{Result, SymclassError};
use crate::harness::{verify, witness_orbit, Claim, OrbitScope, SweepSpec, VerificationRecord, WORK_CEILING_ENV};
use crate::linalg::exact_rank;
use crate::obasis::decide_obasis;
use crate::orbits::{orbit_reps, OrbitData, Space};
use crate::symmetrize::gram_matrix_closed;

pub const SCHEMA: &str = "symclass-report";
pub const SCHEMA_VERSION: u32 = 1;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const DISAGREEMENT: i32 = 1;
    pub const INVALID: i32 = 2;
    pub const WORK_CEILING: i32 = 3;
    pub const INTERNAL: i32 = 4;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Table,
    Brauer,
    Orbits,
    Gram,
    Obasis,
    Verify,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Table => "table",
            Command::Brauer => "brauer",
            Command::Orbits => "orbits",
            Command::Gram => "gram",
            Command::Obasis => "obasis",
            Command::Verify => "verify",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Structured,
    Human,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandConfig {
    pub command: Command,
    pub n: u32,
    pub p: Option<u64>,
    pub degree: Option<u32>,
    pub dim: Option<u32>,
    pub character: Option<CharacterSelector>,
    pub claim: Option<Claim>,
    /// Orbit for `gram`, as any member tuple; defaults to the free orbit of
    /// `(d,0,…,0)` or `(2,1,…,1)`.
    pub orbit: Option<Vec<u32>>,
    pub format: OutputFormat,
    pub work_ceiling: u128,
}

impl CommandConfig {
    pub fn new(command: Command, n: u32) -> Self {
        CommandConfig {
            command,
            n,
            p: None,
            degree: None,
            dim: None,
            character: None,
            claim: None,
            orbit: None,
            format: OutputFormat::Structured,
            work_ceiling: crate::harness::work_ceiling_from_env(),
        }
    }

    fn space(&self) -> Result<Space> {
        match (self.degree, self.dim) {
            (Some(_), Some(_)) => Err(SymclassError::InvalidParameter("give either --d or --dim-v, not both".into())),
            (Some(degree), None) if degree >= 1 => Ok(Space::Polynomial { degree }),
            (None, Some(dim)) if dim >= 1 => Ok(Space::Tensor { dim }),
            (Some(_), None) => Err(SymclassError::InvalidParameter("--d must be >= 1".into())),
            (None, Some(_)) => Err(SymclassError::InvalidParameter("--dim-v must be >= 1".into())),
            (None, None) => Err(SymclassError::InvalidParameter(format!("{} needs --d or --dim-v", self.command.name()))),
        }
    }

    fn character(&self, group: &Arc<DicyclicGroup>) -> Result<CharacterFn> {
        let sel = self
            .character
            .ok_or_else(|| SymclassError::InvalidParameter(format!("{} needs --char psi:j or chi:h", self.command.name())))?;
        sel.resolve(group, self.p)
    }
}

/// Result of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub document: String,
}

/// Exit status for an error.
pub fn status_for(err: &SymclassError) -> i32 {
    match err {
        SymclassError::WorkCeiling { .. } => exit::WORK_CEILING,
        SymclassError::OracleMismatch(_) => exit::INTERNAL,
        _ => exit::INVALID,
    }
}

pub fn run(config: &CommandConfig) -> Outcome {
    let mut doc = Document::new(config);
    let status = match execute(config, &mut doc) {
        Ok(status) => status,
        Err(err) => {
            doc.error(&err);
            status_for(&err)
        }
    };
    Outcome { status, document: doc.finish() }
}

/// Collects records in either output format.
struct Document {
    format: OutputFormat,
    lines: Vec<String>,
}

impl Document {
    fn new(config: &CommandConfig) -> Self {
        let mut doc = Document { format: config.format, lines: Vec::new() };
        match config.format {
            OutputFormat::Structured => {
                let mut header = json!({
                    "schema": SCHEMA,
                    "version": SCHEMA_VERSION,
                    "command": config.command,
                    "n": config.n,
                });
                let obj = header.as_object_mut().unwrap();
                if let Some(p) = config.p {
                    obj.insert("p".into(), json!(p));
                }
                if let Some(d) = config.degree {
                    obj.insert("d".into(), json!(d));
                }
                if let Some(k) = config.dim {
                    obj.insert("dim_v".into(), json!(k));
                }
                if let Some(c) = config.character {
                    obj.insert("character".into(), json!(c.to_string()));
                }
                if let Some(c) = config.claim {
                    obj.insert("claim".into(), json!(c));
                }
                doc.lines.push(header.to_string());
            }
            OutputFormat::Human => {
                doc.lines.push(format!("# symclass {} for T_{}", config.command.name(), 4 * config.n));
            }
        }
        doc
    }

    fn record(&mut self, value: Value) {
        if self.format == OutputFormat::Structured {
            self.lines.push(value.to_string());
        }
    }

    fn text(&mut self, line: impl Into<String>) {
        if self.format == OutputFormat::Human {
            self.lines.push(line.into());
        }
    }

    fn error(&mut self, err: &SymclassError) {
        match self.format {
            OutputFormat::Structured => {
                self.lines.push(json!({"type": "error", "status": status_for(err), "message": err.to_string()}).to_string())
            }
            OutputFormat::Human => self.lines.push(format!("error: {err}")),
        }
    }

    fn finish(self) -> String {
        let mut out = self.lines.join("\n");
        out.push('\n');
        out
    }
}

fn character_json(phi: &CharacterFn) -> Value {
    json!({"name": phi.label(), "hat": phi.is_brauer()})
}

fn short(z: &CyclotomicNumber) -> String {
    if let Some(q) = z.to_rational() {
        return q.to_string();
    }
    let c = z.to_complex();
    let re = if c.re.abs() < 1e-12 { 0.0 } else { c.re };
    let im = if c.im.abs() < 1e-12 { 0.0 } else { c.im };
    if re == 0.0 {
        format!("{im:.4}i")
    } else {
        format!("{re:.4}{im:+.4}i")
    }
}

fn elements_json(xs: &[DicyclicElement]) -> Value {
    Value::Array(xs.iter().map(|g| json!(g.to_string())).collect())
}

fn execute(config: &CommandConfig, doc: &mut Document) -> Result<i32> {
    if config.n == 0 {
        return Err(SymclassError::InvalidParameter("n must be >= 1".into()));
    }
    if let Some(p) = config.p {
        if !crate::dicyclic::is_prime(p) {
            return Err(SymclassError::NotPrime(p));
        }
    }
    if config.command == Command::Verify {
        return run_verify(config, doc);
    }
    let group = DicyclicGroup::new(config.n)?;
    match config.command {
        Command::Table => run_table(config, &group, doc),
        Command::Brauer => run_brauer(config, &group, doc),
        Command::Orbits => run_orbits(config, &group, doc),
        Command::Gram => run_gram(config, &group, doc),
        Command::Obasis => run_obasis(config, &group, doc),
        Command::Verify => unreachable!(),
    }?;
    Ok(exit::OK)
}

fn table_block(doc: &mut Document, classes: &[Vec<DicyclicElement>], chars: &[CharacterFn], title: &str) {
    doc.record(json!({
        "type": "classes",
        "table": title,
        "classes": classes.iter().map(|c| json!({"representative": c[0].to_string(), "size": c.len()})).collect::<Vec<_>>(),
    }));
    for phi in chars {
        let values: Vec<Value> = classes.iter().map(|c| serde_json::to_value(phi.value(&c[0]).unwrap()).unwrap()).collect();
        doc.record(json!({"type": "character", "table": title, "character": character_json(phi), "degree": phi.degree(), "values": values}));
    }
    doc.text(format!("{title}:"));
    let mut header = format!("{:>10}", "");
    for c in classes {
        let _ = write!(header, " {:>16}", format!("{} ({})", c[0], c.len()));
    }
    doc.text(header);
    for phi in chars {
        let mut row = format!("{:>10}", if phi.is_brauer() { format!("^{}", phi.label()) } else { phi.label().to_string() });
        for c in classes {
            let _ = write!(row, " {:>16}", short(phi.value(&c[0]).unwrap()));
        }
        doc.text(row);
    }
}

fn run_table(config: &CommandConfig, group: &Arc<DicyclicGroup>, doc: &mut Document) -> Result<()> {
    table_block(doc, &group.conjugacy_classes(), &character_table(group)?, "ordinary");
    if let Some(p) = config.p {
        table_block(doc, &group.p_regular_classes(p)?, &brauer_characters(group, p)?, "brauer");
    }
    Ok(())
}

fn run_brauer(config: &CommandConfig, group: &Arc<DicyclicGroup>, doc: &mut Document) -> Result<()> {
    let p = config.p.ok_or_else(|| SymclassError::InvalidParameter("brauer needs --p".into()))?;
    let hat = group.p_regular_elements(p)?;
    let classes = group.p_regular_classes(p)?;
    let chars = brauer_characters(group, p)?;
    doc.record(json!({"type": "p-regular-elements", "p": p, "elements": elements_json(&hat)}));
    doc.record(json!({"type": "p-regular-classes", "classes": classes.iter().map(|c| elements_json(c)).collect::<Vec<_>>()}));
    doc.record(json!({"type": "brauer-characters", "characters": chars.iter().map(character_json).collect::<Vec<_>>()}));
    doc.record(json!({"type": "count", "brauer_characters": chars.len(), "p_regular_classes": classes.len()}));
    doc.text(format!("p-regular elements ({}): {}", hat.len(), hat.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ")));
    doc.text(format!("p-regular classes: {}", classes.len()));
    doc.text(format!("Brauer characters: {}", chars.iter().map(|c| format!("^{}", c.label())).collect::<Vec<_>>().join(" ")));
    table_block(doc, &classes, &chars, "brauer");
    Ok(())
}

fn check_ceiling(config: &CommandConfig, group: &DicyclicGroup, space: Space) -> Result<()> {
    let units = (group.order() as u128).saturating_mul(space.tuple_count(group.order()));
    if units > config.work_ceiling {
        return Err(SymclassError::WorkCeiling {
            point: format!("n={} {space}", config.n),
            units,
            ceiling: config.work_ceiling,
        });
    }
    Ok(())
}

fn run_orbits(config: &CommandConfig, group: &Arc<DicyclicGroup>, doc: &mut Document) -> Result<()> {
    let space = config.space()?;
    check_ceiling(config, group, space)?;
    let mut count = 0usize;
    let mut covered = 0u128;
    doc.text(format!("{:<24} {:>6} {:>10}  stabilizer", "representative", "size", "|G_a|"));
    for orbit in orbit_reps(group, space)? {
        count += 1;
        covered += orbit.size() as u128;
        doc.record(json!({
            "type": "orbit",
            "representative": orbit.representative,
            "size": orbit.size(),
            "stabilizer_size": orbit.stabilizer.len(),
            "stabilizer": elements_json(&orbit.stabilizer),
        }));
        doc.text(format!(
            "{:<24} {:>6} {:>10}  {}",
            format!("{:?}", orbit.representative),
            orbit.size(),
            orbit.stabilizer.len(),
            orbit.stabilizer.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ")
        ));
    }
    doc.record(json!({"type": "summary", "orbits": count, "tuples": covered.to_string()}));
    doc.text(format!("{count} orbits covering {covered} tuples"));
    Ok(())
}

fn run_gram(config: &CommandConfig, group: &Arc<DicyclicGroup>, doc: &mut Document) -> Result<()> {
    let space = config.space()?;
    let phi = config.character(group)?;
    let orbit = match &config.orbit {
        Some(tuple) => {
            if let Space::Tensor { dim } = space {
                crate::orbits::Sequence(tuple.clone()).check_range(dim)?;
            } else if tuple.iter().sum::<u32>() != config.degree.unwrap() {
                return Err(SymclassError::InvalidParameter(format!("orbit tuple must have degree {}", config.degree.unwrap())));
            }
            OrbitData::of(group, space, tuple)?
        }
        None => witness_orbit(group, space)?,
    };
    let gram = gram_matrix_closed(&orbit, &phi);
    let rank = exact_rank(&gram);
    doc.record(json!({
        "type": "gram",
        "character": character_json(&phi),
        "representative": orbit.representative,
        "transversal": elements_json(&orbit.transversal),
        "rank": rank,
        "matrix": serde_json::to_value(&gram).unwrap(),
    }));
    doc.text(format!("orbit {:?}, {} translates, rank {rank}", orbit.representative, orbit.size()));
    for (t, row) in orbit.transversal.iter().zip(&gram) {
        let cells: Vec<String> = row.iter().map(|z| format!("{:>14}", short(z))).collect();
        doc.text(format!("{:>8} {}", t.to_string(), cells.join(" ")));
    }
    Ok(())
}

fn run_obasis(config: &CommandConfig, group: &Arc<DicyclicGroup>, doc: &mut Document) -> Result<()> {
    let space = config.space()?;
    check_ceiling(config, group, space)?;
    let phi = config.character(group)?;
    let report = decide_obasis(group, space, &phi)?;
    for rec in &report.orbits {
        doc.record(json!({"type": "orbit-decision", "record": serde_json::to_value(rec).unwrap()}));
    }
    doc.record(json!({
        "type": "verdict",
        "character": character_json(&phi),
        "space": space,
        "verdict": report.verdict,
        "dimension": report.dimension,
        "orbits": report.orbits.len(),
    }));
    doc.text(format!("{:<24} {:>5} {:>5} {:>8}  witness / certificate", "representative", "size", "rank", "o-basis"));
    for rec in &report.orbits {
        let detail = match &rec.witness {
            Some(w) => w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" "),
            None => format!("exhausted, {}", serde_json::to_string(&rec.search).unwrap()),
        };
        doc.text(format!(
            "{:<24} {:>5} {:>5} {:>8}  {detail}",
            format!("{:?}", rec.representative),
            rec.orbit_size,
            rec.rank,
            rec.has_obasis
        ));
    }
    doc.text(format!("verdict: {} (dimension {}, {} orbits)", report.verdict, report.dimension, report.orbits.len()));
    Ok(())
}

fn sweep_for(config: &CommandConfig) -> SweepSpec {
    let claims = match config.claim {
        Some(c) => vec![c],
        None => Claim::ALL.to_vec(),
    };
    let mut spec = SweepSpec::new(claims, vec![config.n]).work_ceiling(config.work_ceiling).scope(OrbitScope::PrecheckThenFull);
    if let Some(p) = config.p {
        spec = spec.primes(vec![p]);
    }
    if let Some(d) = config.degree {
        spec = spec.degrees(vec![d]);
    }
    if let Some(k) = config.dim {
        spec = spec.dims(vec![k]);
    }
    if let Some(c) = config.character {
        spec = spec.characters(vec![c]);
    }
    spec
}

fn run_verify(config: &CommandConfig, doc: &mut Document) -> Result<i32> {
    let records: Vec<VerificationRecord> = verify(&sweep_for(config))?;
    let disagreements = records.iter().filter(|r| !r.agrees).count();
    for rec in &records {
        doc.record(json!({"type": "verification", "record": serde_json::to_value(rec).unwrap()}));
        doc.text(format!(
            "{:<60} predicted {:<5} computed {:<5} {}",
            rec.point.to_string(),
            rec.predicted,
            rec.computed,
            if rec.agrees { "ok" } else { "DISAGREE" }
        ));
    }
    doc.record(json!({"type": "summary", "records": records.len(), "disagreements": disagreements}));
    doc.text(format!("{} records, {} disagreements", records.len(), disagreements));
    Ok(if disagreements == 0 { exit::OK } else { exit::DISAGREEMENT })
}

/// Command-line arguments.
#[derive(Debug, Parser)]
#[command(name = "symclass", version, about = "Symmetry classes of polynomials and tensors for dicyclic groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Ordinary character table, and the Brauer table with --p.
    Table(CommonArgs),
    /// p-regular elements and classes, and the irreducible Brauer characters.
    Brauer(CommonArgs),
    /// Orbit census on exponent tuples (--d) or index sequences (--dim-v).
    Orbits(CommonArgs),
    /// Exact Gram matrix of the translates of one orbit.
    Gram(CommonArgs),
    /// Decide whether the symmetry class has an orthogonal basis.
    Obasis(CommonArgs),
    /// Compare closed-form criteria with exact computation.
    Verify(CommonArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Group parameter: the group is T_{4n}.
    #[arg(long)]
    pub n: u32,
    /// Prime for Brauer characters.
    #[arg(long)]
    pub p: Option<u64>,
    /// Polynomial degree.
    #[arg(long)]
    pub d: Option<u32>,
    /// Dimension of V for tensors.
    #[arg(long = "dim-v")]
    pub dim_v: Option<u32>,
    /// Character, as psi:j or chi:h; restricted to p-regular elements when --p is given.
    #[arg(long = "char")]
    pub character: Option<CharacterSelector>,
    /// Claim to verify (see `symclass verify --help`); all claims when omitted.
    #[arg(long = "theorem")]
    pub claim: Option<Claim>,
    /// Orbit member for `gram`, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub orbit: Option<Vec<u32>>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Structured)]
    pub format: OutputFormat,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Refuse parameter points above this many 4n*|tuples| work units.
    #[arg(long = "work-ceiling", env = WORK_CEILING_ENV, default_value_t = crate::harness::DEFAULT_WORK_CEILING)]
    pub work_ceiling: u128,
}

impl Cli {
    /// The command configuration and the requested output path.
    pub fn into_config(self) -> (CommandConfig, Option<PathBuf>) {
        let (command, a) = match self.command {
            CliCommand::Table(a) => (Command::Table, a),
            CliCommand::Brauer(a) => (Command::Brauer, a),
            CliCommand::Orbits(a) => (Command::Orbits, a),
            CliCommand::Gram(a) => (Command::Gram, a),
            CliCommand::Obasis(a) => (Command::Obasis, a),
            CliCommand::Verify(a) => (Command::Verify, a),
        };
        let config = CommandConfig {
            command,
            n: a.n,
            p: a.p,
            degree: a.d,
            dim: a.dim_v,
            character: a.character,
            claim: a.claim,
            orbit: a.orbit,
            format: a.format,
            work_ceiling: a.work_ceiling,
        };
        (config, a.output)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> CommandConfig {
        Cli::try_parse_from(std::iter::once("symclass").chain(args.iter().copied())).unwrap().into_config().0
    }

    #[test]
    fn parses_flags() {
        let c = parse(&["obasis", "--n", "3", "--d", "2", "--char", "chi:1"]);
        assert_eq!(c.command, Command::Obasis);
        assert_eq!(c.character, Some(CharacterSelector::DegreeTwo(1)));
        let c = parse(&["verify", "--n", "2", "--p", "3", "--d", "2", "--theorem", "degree-two-brauer-poly"]);
        assert_eq!(c.claim, Some(Claim::DegreeTwoBrauerPoly));
        let c = parse(&["gram", "--n", "2", "--d", "2", "--char", "psi:1", "--orbit", "1,1,0,0,0,0,0,0"]);
        assert_eq!(c.orbit, Some(vec![1, 1, 0, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn bad_selector_is_rejected_by_the_parser() {
        assert!(Cli::try_parse_from(["symclass", "gram", "--n", "2", "--char", "phi:1"]).is_err());
    }

    #[test]
    fn header_first() {
        let out = run(&CommandConfig::new(Command::Table, 2));
        assert_eq!(out.status, exit::OK);
        let header: Value = serde_json::from_str(out.document.lines().next().unwrap()).unwrap();
        assert_eq!(header["schema"], SCHEMA);
        assert_eq!(header["version"], SCHEMA_VERSION);
    }

    #[test]
    fn statuses() {
        let mut c = CommandConfig::new(Command::Brauer, 2);
        assert_eq!(run(&c).status, exit::INVALID);
        c.p = Some(4);
        assert_eq!(run(&c).status, exit::INVALID);
        let mut c = CommandConfig::new(Command::Orbits, 6);
        c.degree = Some(4);
        c.work_ceiling = 1000;
        assert_eq!(run(&c).status, exit::WORK_CEILING);
    }
}
