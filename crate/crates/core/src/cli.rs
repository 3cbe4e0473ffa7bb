//! Command-line front end.
//!
//! Problem files are line oriented:
//!
//! ```text
//! # comment
//! ring x, y order grevlex
//! gen 3*x^2
//! gen y
//! shape 2,2
//! ```
//!
//! Exit codes: 0 success, 1 malformed input or usage, 2 violated
//! precondition, 3 resource guard.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::cyclic::{cyclic_violation, to_tensor_coordinates, TensorShape};
use crate::groebner::GroebnerBasis;
use crate::json::{from_json_ints, to_json_ints, JsonInt};
use crate::lattice::embed_ideal;
use crate::lattice_ideal::{
    is_saturated, lattice_ideal_basis, lattice_ideal_generators, saturate, saturation_index,
    smith_normal_form, toric_generators_limited,
};
use crate::poly::is_identifier;
use crate::quotient::{is_finitely_generated, QuotientStructure};
use crate::{Error, IntegerLattice, MonomialOrder, Polynomial, Result, RingContext};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "idlat",
    version,
    about = "Ideal lattices in quotients of Z[x1..xn]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Short reduced Groebner basis of the ideal in FILE.
    Gb {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether the quotient ring is a free Z-module.
    Free {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Embed an ideal of the quotient ring as an integer lattice.
    Embed {
        file: PathBuf,
        /// Ideal generators; may be repeated or separated by `;`.
        #[arg(long = "ideal", required = true)]
        ideal: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Check that an embedded ideal is closed under every cyclic shift.
    CyclicCheck {
        file: PathBuf,
        #[arg(long = "ideal", required = true)]
        ideal: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Binomial generators and bases of the lattice ideal of a lattice.
    LatticeIdeal {
        /// Optional problem file supplying the ring.
        file: Option<PathBuf>,
        /// JSON matrix `[[2,-2]]`, lattice object, or a path to either.
        #[arg(long)]
        lattice: String,
        #[command(flatten)]
        common: Common,
    },
    /// Smith invariants and saturation of a lattice.
    Sat {
        #[arg(long)]
        lattice: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Monomial order, overriding the problem file.
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
    /// Print only the JSON result.
    #[arg(long)]
    json: bool,
    /// Resource guard on Buchberger pair reductions.
    #[arg(long = "max-steps")]
    max_steps: Option<usize>,
    /// Also write the JSON result to this path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Grevlex => MonomialOrder::Grevlex,
        }
    }
}

/// A parsed problem file.
#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub ring: RingContext,
    pub generators: Vec<Polynomial>,
    pub shape: Option<TensorShape>,
}

impl ProblemFile {
    /// Parses the problem file format; error positions are byte offsets
    /// into `text`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut ring: Option<RingContext> = None;
        let mut gen_lines: Vec<(usize, &str)> = Vec::new();
        let mut shape_line: Option<(usize, &str)> = None;
        let mut offset = 0;
        for raw in text.split_inclusive('\n') {
            let start = offset;
            offset += raw.len();
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            };
            let line = line.trim_end();
            let lead = line.len() - line.trim_start().len();
            let body = &line[lead..];
            if body.is_empty() {
                continue;
            }
            let kw_end = body
                .find(|c: char| c.is_ascii_whitespace())
                .unwrap_or(body.len());
            let rest_at = start + lead + kw_end;
            let rest = &body[kw_end..];
            match &body[..kw_end] {
                "ring" => {
                    if ring.is_some() {
                        return Err(syntax(start + lead, "duplicate ring declaration"));
                    }
                    ring = Some(parse_ring(rest, rest_at)?);
                }
                "gen" => {
                    if ring.is_none() {
                        return Err(syntax(start + lead, "generator before ring declaration"));
                    }
                    gen_lines.push((rest_at, rest));
                }
                "shape" => {
                    if shape_line.is_some() {
                        return Err(syntax(start + lead, "duplicate shape declaration"));
                    }
                    shape_line = Some((rest_at, rest));
                }
                kw => {
                    return Err(syntax(start + lead, &format!("unknown keyword `{kw}`")));
                }
            }
        }
        let ring = ring.ok_or_else(|| syntax(text.len(), "missing ring declaration"))?;
        let mut generators = Vec::with_capacity(gen_lines.len());
        for (at, src) in gen_lines {
            let f = ring.parse(src).map_err(|e| shift(e, at))?;
            if f.is_zero() {
                return Err(syntax(at, "generator is zero"));
            }
            generators.push(f);
        }
        let shape = match shape_line {
            Some((at, src)) => Some(parse_shape(src, at, ring.nvars())?),
            None => None,
        };
        Ok(ProblemFile {
            ring,
            generators,
            shape,
        })
    }
}

fn syntax(pos: usize, msg: &str) -> Error {
    Error::Syntax {
        pos,
        msg: msg.to_string(),
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Syntax { pos, msg } => Error::Syntax { pos: pos + by, msg },
        Error::UnknownVariable { name, pos } => Error::UnknownVariable {
            name,
            pos: pos + by,
        },
        Error::ExponentOverflow { pos } => Error::ExponentOverflow { pos: pos + by },
        other => other,
    }
}

fn parse_ring(src: &str, at: usize) -> Result<RingContext> {
    let bytes = src.as_bytes();
    let mut i = 0;
    let skip = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    let word = |i: &mut usize| {
        let s = *i;
        while *i < bytes.len() && (bytes[*i].is_ascii_alphanumeric() || bytes[*i] == b'_') {
            *i += 1;
        }
        &src[s..*i]
    };
    let mut vars: Vec<String> = Vec::new();
    loop {
        skip(&mut i);
        let p = i;
        let name = word(&mut i);
        if !is_identifier(name) {
            return Err(syntax(at + p, "expected a variable name"));
        }
        if vars.iter().any(|v| v == name) {
            return Err(syntax(at + p, &format!("duplicate variable `{name}`")));
        }
        vars.push(name.to_string());
        skip(&mut i);
        if i < bytes.len() && bytes[i] == b',' {
            i += 1;
        } else {
            break;
        }
    }
    let mut order = MonomialOrder::Grevlex;
    if i < bytes.len() {
        let p = i;
        if word(&mut i) != "order" {
            return Err(syntax(at + p, "expected `,` or `order`"));
        }
        skip(&mut i);
        let p = i;
        order = match word(&mut i) {
            "lex" => MonomialOrder::Lex,
            "grevlex" => MonomialOrder::Grevlex,
            _ => return Err(syntax(at + p, "expected `lex` or `grevlex`")),
        };
        skip(&mut i);
        if i < bytes.len() {
            return Err(syntax(at + i, "trailing input after ring declaration"));
        }
    }
    RingContext::new(&vars, order)
}

fn parse_shape(src: &str, at: usize, nvars: usize) -> Result<TensorShape> {
    let mut radices = Vec::new();
    let mut offset = 0;
    for part in src.split(',') {
        let lead = part.len() - part.trim_start().len();
        let tok = part.trim();
        let r: usize = tok
            .parse()
            .map_err(|_| syntax(at + offset + lead, "expected a positive integer radix"))?;
        radices.push(r);
        offset += part.len() + 1;
    }
    if radices.len() != nvars {
        return Err(Error::InvalidShape(format!(
            "shape has {} radices but the ring has {} variables",
            radices.len(),
            nvars
        )));
    }
    TensorShape::new(radices)
}

/// Maps an error onto the exit-code contract.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_parse() {
        EXIT_INPUT
    } else if matches!(e, Error::ResourceLimit { .. }) {
        EXIT_RESOURCE
    } else {
        EXIT_PRECONDITION
    }
}

enum Failure {
    Io(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

struct Report {
    lines: Vec<String>,
    json: Value,
}

/// Runs the command line `args` (program name first) and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_INPUT
                }
            };
        }
    };
    let common = match &cli.command {
        Command::Gb { common, .. }
        | Command::Free { common, .. }
        | Command::Embed { common, .. }
        | Command::CyclicCheck { common, .. }
        | Command::LatticeIdeal { common, .. }
        | Command::Sat { common, .. } => common,
    };
    let result = dispatch(&cli.command, common).and_then(|report| {
        let text = serde_json::to_string(&report.json).expect("serializable") + "\n";
        if let Some(path) = &common.out {
            fs::write(path, &text)
                .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
        }
        Ok((report.lines, text))
    });
    match result {
        Ok((lines, text)) => {
            if !common.json {
                for l in lines {
                    let _ = writeln!(out, "{l}");
                }
            }
            let _ = write!(out, "{text}");
            EXIT_OK
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: &Command, common: &Common) -> std::result::Result<Report, Failure> {
    match cmd {
        Command::Gb { file, .. } => {
            let p = load(file, common)?;
            let g = basis(&p, common)?;
            Ok(gb_report(&p.ring, &g))
        }
        Command::Free { file, .. } => {
            let p = load(file, common)?;
            let g = basis(&p, common)?;
            Ok(free_report(&p.ring, &g)?)
        }
        Command::Embed { file, ideal, .. } => {
            let p = load(file, common)?;
            let g = basis(&p, common)?;
            let gens = parse_ideal(&p.ring, ideal)?;
            Ok(embed_report(&p.ring, &g, &gens)?)
        }
        Command::CyclicCheck { file, ideal, .. } => {
            let p = load(file, common)?;
            let shape = p
                .shape
                .clone()
                .ok_or_else(|| Error::Precondition("problem file declares no shape".into()))?;
            let g = if p.generators.is_empty() {
                let gens = shape.cyclic_generators(&p.ring)?;
                compute_basis(&gens, &p.ring, common.max_steps)?
            } else {
                basis(&p, common)?
            };
            let gens = parse_ideal(&p.ring, ideal)?;
            Ok(cyclic_report(&p.ring, &g, &shape, &gens)?)
        }
        Command::LatticeIdeal { file, lattice, .. } => {
            let l = load_lattice(lattice)?;
            let ring = match file {
                Some(f) => {
                    let p = load(f, common)?;
                    p.ring
                }
                None => {
                    let names: Vec<String> =
                        (1..=l.ambient_dim()).map(|i| format!("x{i}")).collect();
                    let order = common.order.map(Into::into).unwrap_or_default();
                    RingContext::new(&names, order)?
                }
            };
            Ok(lattice_ideal_report(&ring, &l, common.max_steps)?)
        }
        Command::Sat { lattice, .. } => {
            let l = load_lattice(lattice)?;
            Ok(sat_report(&l))
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path, common: &Common) -> std::result::Result<ProblemFile, Failure> {
    let mut p = ProblemFile::parse(&read(path)?)?;
    if let Some(o) = common.order {
        p.ring = p.ring.with_order(o.into());
        p.generators = p
            .generators
            .iter()
            .map(|f| f.with_order(p.ring.order()))
            .collect();
    }
    info!(
        "ring {} ({}), {} generators",
        p.ring.variables().join(", "),
        p.ring.order().name(),
        p.generators.len()
    );
    Ok(p)
}

fn compute_basis(
    gens: &[Polynomial],
    ring: &RingContext,
    max_steps: Option<usize>,
) -> Result<GroebnerBasis> {
    let g = crate::groebner::short_reduce(&crate::groebner::buchberger_limited(
        gens, ring, max_steps,
    )?)?;
    info!("short reduced basis has {} elements", g.len());
    Ok(g)
}

fn basis(p: &ProblemFile, common: &Common) -> Result<GroebnerBasis> {
    if p.generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    compute_basis(&p.generators, &p.ring, common.max_steps)
}

fn parse_ideal(ring: &RingContext, args: &[String]) -> Result<Vec<Polynomial>> {
    let mut gens = Vec::new();
    for a in args {
        let mut at = 0;
        for part in a.split(';') {
            if !part.trim().is_empty() {
                gens.push(ring.parse(part).map_err(|e| shift(e, at))?);
            }
            at += part.len() + 1;
        }
    }
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    Ok(gens)
}

fn load_lattice(arg: &str) -> std::result::Result<IntegerLattice, Failure> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('[') || trimmed.starts_with('{') {
        arg.to_string()
    } else {
        read(Path::new(arg))?
    };
    Ok(parse_lattice(&text)?)
}

/// Reads a lattice from a JSON matrix of generator rows or a lattice
/// object `{"ambient_dim": N, "basis": [...]}`.
pub fn parse_lattice(text: &str) -> Result<IntegerLattice> {
    if text.trim_start().starts_with('{') {
        return IntegerLattice::from_json(text);
    }
    let rows: Vec<Vec<JsonInt>> = serde_json::from_str(text).map_err(|e| Error::Syntax {
        pos: e.column().saturating_sub(1),
        msg: e.to_string(),
    })?;
    let dim = match rows.first() {
        Some(r) if !r.is_empty() => r.len(),
        _ => return Err(syntax(0, "lattice matrix needs at least one nonempty row")),
    };
    if rows.iter().any(|r| r.len() != dim) {
        return Err(syntax(0, "lattice matrix rows differ in length"));
    }
    IntegerLattice::from_rows(dim, rows.into_iter().map(from_json_ints).collect())
}

fn ring_json(ring: &RingContext) -> Value {
    json!({
        "variables": ring.variables(),
        "order": ring.order().name(),
    })
}

fn texts(ring: &RingContext, g: &GroebnerBasis) -> Vec<String> {
    g.elements().iter().map(|p| ring.format(p)).collect()
}

fn ints_json(v: &[BigInt]) -> Value {
    serde_json::to_value(to_json_ints(v)).expect("serializable")
}

fn gb_report(ring: &RingContext, g: &GroebnerBasis) -> Report {
    let basis = texts(ring, g);
    let mut lines = vec![format!(
        "ring {} order {}",
        ring.variables().join(", "),
        ring.order().name()
    )];
    lines.push(format!("short reduced basis ({} elements):", basis.len()));
    lines.extend(basis.iter().map(|b| format!("  {b}")));
    Report {
        lines,
        json: json!({ "ring": ring_json(ring), "basis": basis }),
    }
}

/// First basis element, in ascending order, whose leading coefficient is
/// not a unit.
fn non_monic_element(g: &GroebnerBasis) -> Option<&Polynomial> {
    g.elements().iter().find(|p| !p.lc().is_one())
}

fn not_free(ring: &RingContext, p: &Polynomial) -> Error {
    Error::NotFree {
        monomial: ring.format_monomial(p.lm()),
        coefficient: p.lc().to_string(),
    }
}

fn free_report(ring: &RingContext, g: &GroebnerBasis) -> Result<Report> {
    let fg = is_finitely_generated(g)?;
    if let Some(p) = non_monic_element(g) {
        let monomial = ring.format_monomial(p.lm());
        let coefficient = p.lc().to_string();
        return Ok(Report {
            lines: vec![
                "free: false".into(),
                format!("leading coefficient {coefficient} at monomial {monomial}"),
            ],
            json: json!({
                "free": false,
                "finitely_generated": fg,
                "witness": { "monomial": monomial, "coefficient": JsonInt(p.lc().clone()) },
            }),
        });
    }
    if !fg {
        return Ok(Report {
            lines: vec![
                "free: true".into(),
                "the quotient is not finitely generated; rank is infinite".into(),
            ],
            json: json!({
                "free": true,
                "finitely_generated": false,
                "rank": null,
                "basis_monomials": null,
            }),
        });
    }
    let q = QuotientStructure::new(g)?;
    let monomials: Vec<String> = q
        .basis_monomials()
        .iter()
        .map(|m| ring.format_monomial(m))
        .collect();
    Ok(Report {
        lines: vec![
            "free: true".into(),
            format!("rank: {}", q.rank()),
            format!("basis monomials: {}", monomials.join(", ")),
        ],
        json: json!({
            "free": true,
            "finitely_generated": true,
            "rank": q.rank(),
            "basis_monomials": monomials,
        }),
    })
}

fn free_quotient(ring: &RingContext, g: &GroebnerBasis) -> Result<QuotientStructure> {
    if let Some(p) = non_monic_element(g) {
        return Err(not_free(ring, p));
    }
    if !is_finitely_generated(g)? {
        return Err(Error::NotFinitelyGenerated);
    }
    QuotientStructure::new(g)
}

fn lattice_lines(l: &IntegerLattice) -> Vec<String> {
    let mut lines = vec![format!(
        "rank {} in dimension {}",
        l.rank(),
        l.ambient_dim()
    )];
    for r in l.basis().row_vecs() {
        let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        lines.push(format!("  [{}]", cells.join(", ")));
    }
    lines
}

fn embed_report(ring: &RingContext, g: &GroebnerBasis, gens: &[Polynomial]) -> Result<Report> {
    let q = free_quotient(ring, g)?;
    let l = embed_ideal(gens, g, &q)?;
    let full = l.is_full_rank();
    let det = if full { Some(l.det()?) } else { None };
    let monomials: Vec<String> = q
        .basis_monomials()
        .iter()
        .map(|m| ring.format_monomial(m))
        .collect();
    let mut lines = vec![format!("coordinates: {}", monomials.join(", "))];
    lines.extend(lattice_lines(&l));
    lines.push(format!("full rank: {full}"));
    if let Some(d) = &det {
        lines.push(format!("determinant: {d}"));
    }
    let mut obj = json!({
        "coordinates": monomials,
        "lattice": l.to_json(),
        "rank": l.rank(),
        "full_rank": full,
    });
    if let Some(d) = det {
        obj["determinant"] = json!(JsonInt(d));
    }
    Ok(Report { lines, json: obj })
}

fn cyclic_report(
    ring: &RingContext,
    g: &GroebnerBasis,
    shape: &TensorShape,
    gens: &[Polynomial],
) -> Result<Report> {
    let q = free_quotient(ring, g)?;
    let l = to_tensor_coordinates(&embed_ideal(gens, g, &q)?, &q, shape)?;
    let violation = cyclic_violation(&l, shape)?;
    let mut lines = lattice_lines(&l);
    lines.push(format!("multivariate cyclic: {}", violation.is_none()));
    let witness = match violation {
        Some(v) => {
            lines.push(format!(
                "shift along axis {} moves basis row {} out",
                v.axis, v.row
            ));
            json!({ "row": v.row, "axis": v.axis })
        }
        None => Value::Null,
    };
    Ok(Report {
        lines,
        json: json!({
            "shape": shape.radices(),
            "lattice": l.to_json(),
            "cyclic": violation.is_none(),
            "witness": witness,
        }),
    })
}

fn lattice_ideal_report(
    ring: &RingContext,
    l: &IntegerLattice,
    max_steps: Option<usize>,
) -> Result<Report> {
    let spec = lattice_ideal_generators(l, ring)?;
    let gens: Vec<String> = spec.generators.iter().map(|p| ring.format(p)).collect();
    let own = lattice_ideal_basis(&spec, ring, max_steps)?;
    let toric = toric_generators_limited(&spec, ring, max_steps)?;
    let saturated = is_saturated(l);
    let own_t = texts(ring, &own);
    let toric_t = texts(ring, &toric);
    let mut lines = vec![format!(
        "ring {} order {}",
        ring.variables().join(", "),
        ring.order().name()
    )];
    lines.push(format!("binomial generators: {}", gens.join(", ")));
    lines.push(format!("lattice ideal basis: {}", own_t.join(", ")));
    lines.push(format!("toric basis: {}", toric_t.join(", ")));
    lines.push(format!("saturated: {saturated}"));
    Ok(Report {
        lines,
        json: json!({
            "ring": ring_json(ring),
            "lattice": l.to_json(),
            "generators": gens,
            "lattice_ideal_basis": own_t,
            "toric_basis": toric_t,
            "saturated": saturated,
        }),
    })
}

fn sat_report(l: &IntegerLattice) -> Report {
    let snf = smith_normal_form(l.basis());
    let sat = saturate(l);
    let saturated = is_saturated(l);
    let index = saturation_index(l);
    let factors: Vec<String> = snf
        .invariant_factors
        .iter()
        .map(|d| d.to_string())
        .collect();
    let mut lines = vec![format!("invariant factors: {}", factors.join(", "))];
    lines.push(format!("saturated: {saturated} (index {index})"));
    lines.push("saturation:".into());
    lines.extend(lattice_lines(&sat));
    Report {
        lines,
        json: json!({
            "invariant_factors": ints_json(&snf.invariant_factors),
            "rank": snf.rank,
            "saturated": saturated,
            "index": JsonInt(index),
            "saturation": sat.to_json(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["idlat"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn file(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        f
    }

    fn json_of(out: &str) -> Value {
        serde_json::from_str(out).unwrap()
    }

    const EX: &str = "# worked example\nring x, y order grevlex\ngen 3*x^2\ngen 5*x^2\ngen y\n";

    #[test]
    fn parses_problem_file() {
        let p =
            ProblemFile::parse("ring x, y order lex\ngen x - y # comment\n\nshape 2,3\n").unwrap();
        assert_eq!(p.ring.variables(), &["x".to_string(), "y".to_string()]);
        assert_eq!(p.ring.order(), MonomialOrder::Lex);
        assert_eq!(p.generators.len(), 1);
        assert_eq!(p.shape.unwrap().radices(), &[2, 3]);
        let p = ProblemFile::parse("ring a\n").unwrap();
        assert_eq!(p.ring.order(), MonomialOrder::Grevlex);
    }

    #[test]
    fn problem_file_errors_carry_byte_positions() {
        let e = ProblemFile::parse("ring x, y\ngen x + z\n").unwrap_err();
        assert_eq!(
            e,
            Error::UnknownVariable {
                name: "z".into(),
                pos: 18
            }
        );
        assert!(matches!(
            ProblemFile::parse("ring x\ngen x - x\n"),
            Err(Error::Syntax { pos: 10, .. })
        ));
        assert!(matches!(
            ProblemFile::parse("gen x\n"),
            Err(Error::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            ProblemFile::parse("ring x, 1y\n"),
            Err(Error::Syntax { pos: 8, .. })
        ));
        assert!(matches!(
            ProblemFile::parse("ring x order foo\n"),
            Err(Error::Syntax { pos: 13, .. })
        ));
        assert!(matches!(
            ProblemFile::parse("ring x, x\n"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            ProblemFile::parse("ring x\nshape 2,0\n"),
            Err(Error::InvalidShape(_))
        ));
        assert!(matches!(
            ProblemFile::parse("ring x\nshape 2,2\n"),
            Err(Error::InvalidShape(_))
        ));
        assert!(matches!(
            ProblemFile::parse("ring x\nbogus 1\n"),
            Err(Error::Syntax { pos: 7, .. })
        ));
    }

    #[test]
    fn gb_and_free_on_example() {
        let f = file(EX);
        let path = f.path().to_str().unwrap();
        let (code, out, _) = run_args(&["gb", path, "--json"]);
        assert_eq!(code, 0);
        assert_eq!(json_of(&out)["basis"], json!(["y", "x^2"]));
        let (code, out, _) = run_args(&["free", path, "--json"]);
        assert_eq!(code, 0);
        let v = json_of(&out);
        assert_eq!(v["free"], json!(true));
        assert_eq!(v["rank"], json!(2));
        assert_eq!(v["basis_monomials"], json!(["1", "x"]));
    }

    #[test]
    fn embed_example() {
        let f = file(EX);
        let (code, out, _) = run_args(&[
            "embed",
            f.path().to_str().unwrap(),
            "--ideal",
            "6*x",
            "--json",
        ]);
        assert_eq!(code, 0);
        let v = json_of(&out);
        assert_eq!(v["lattice"]["basis"], json!([[0, 6]]));
        assert_eq!(v["full_rank"], json!(false));
        assert!(v.get("determinant").is_none());
    }

    #[test]
    fn non_free_quotients() {
        let f = file("ring x\ngen 2*x\n");
        let (code, out, _) = run_args(&["free", f.path().to_str().unwrap(), "--json"]);
        assert_eq!(code, 0);
        let v = json_of(&out);
        assert_eq!(v["free"], json!(false));
        assert_eq!(v["witness"], json!({"monomial": "x", "coefficient": 2}));

        let f = file("ring x, y\ngen 2*x\ngen y\n");
        let path = f.path().to_str().unwrap();
        let (code, out, _) = run_args(&["free", path, "--json"]);
        assert_eq!(code, 0);
        assert_eq!(json_of(&out)["free"], json!(false));
        let (code, out, err) = run_args(&["embed", path, "--ideal", "x"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("is an integer lattice"), "{err}");
    }

    #[test]
    fn infinite_rank_quotient() {
        let f = file("ring x, y\ngen x - y\n");
        let path = f.path().to_str().unwrap();
        let (code, out, _) = run_args(&["free", path, "--json"]);
        assert_eq!(code, 0);
        let v = json_of(&out);
        assert_eq!(v["free"], json!(true));
        assert_eq!(v["rank"], Value::Null);
        let (code, _, _) = run_args(&["embed", path, "--ideal", "x"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn cyclic_check_defaults_to_cyclic_ring() {
        let f = file("ring x1, x2, x3\nshape 2,2,3\n");
        let (code, out, _) = run_args(&[
            "cyclic-check",
            f.path().to_str().unwrap(),
            "--ideal",
            "1 + x1*x3 + 2*x2",
            "--json",
        ]);
        assert_eq!(code, 0, "{out}");
        let v = json_of(&out);
        assert_eq!(v["cyclic"], json!(true));
        assert_eq!(v["witness"], Value::Null);
        assert_eq!(v["lattice"]["ambient_dim"], json!(12));
    }

    #[test]
    fn lattice_ideal_and_sat() {
        let (code, out, _) = run_args(&["lattice-ideal", "--lattice", "[[2,-2]]", "--json"]);
        assert_eq!(code, 0);
        let v = json_of(&out);
        assert_eq!(v["generators"], json!(["x1^2 - x2^2"]));
        assert_eq!(v["lattice_ideal_basis"], json!(["x1^2 - x2^2"]));
        assert_eq!(v["toric_basis"], json!(["x1 - x2"]));
        assert_eq!(v["saturated"], json!(false));

        let (code, out, _) = run_args(&["sat", "--lattice", "[[2,0]]", "--json"]);
        assert_eq!(code, 0);
        let v = json_of(&out);
        assert_eq!(v["invariant_factors"], json!([2]));
        assert_eq!(v["saturated"], json!(false));
        assert_eq!(v["saturation"]["basis"], json!([[1, 0]]));

        let (code, out, _) = run_args(&[
            "sat",
            "--lattice",
            r#"{"ambient_dim": 2, "basis": [[1, -1]]}"#,
            "--json",
        ]);
        assert_eq!(code, 0);
        assert_eq!(json_of(&out)["saturated"], json!(true));
    }

    #[test]
    fn exit_codes() {
        let (code, _, err) = run_args(&["frobnicate"]);
        assert_eq!(code, 1);
        assert!(!err.is_empty());
        let (code, _, _) = run_args(&["gb", "/nonexistent/problem.txt"]);
        assert_eq!(code, 1);
        let f = file("ring x\ngen x +\n");
        let (code, _, err) = run_args(&["gb", f.path().to_str().unwrap()]);
        assert_eq!(code, 1);
        assert!(err.contains("byte"), "{err}");
        let (code, _, _) = run_args(&["sat", "--lattice", "[[1,2],[3]]"]);
        assert_eq!(code, 1);
        let f = file("ring x, y, z\ngen x^3 - y*z\ngen y^3 - x*z\ngen z^3 - x*y\n");
        let (code, _, err) = run_args(&["gb", f.path().to_str().unwrap(), "--max-steps", "1"]);
        assert_eq!(code, 3, "{err}");
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("Usage"));
    }

    #[test]
    fn order_override_and_out_file() {
        let f = file("ring y, x order grevlex\ngen y - x\ngen x^2 + 1\n");
        let dir = tempfile::tempdir().unwrap();
        let out_path = dir.path().join("r.json");
        let (code, out, _) = run_args(&[
            "embed",
            f.path().to_str().unwrap(),
            "--order",
            "lex",
            "--ideal",
            "1 + x",
            "--out",
            out_path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("full rank: true"));
        let written = fs::read_to_string(&out_path).unwrap();
        let v = json_of(&written);
        assert_eq!(v["lattice"]["basis"], json!([[1, 1], [0, 2]]));
        assert_eq!(v["determinant"], json!(2));
        assert!(out.ends_with(&written));
    }

    #[test]
    fn text_mode_is_deterministic() {
        let f = file(EX);
        let a = run_args(&["free", f.path().to_str().unwrap()]);
        let b = run_args(&["free", f.path().to_str().unwrap()]);
        assert_eq!(a, b);
        assert!(a.1.starts_with("free: true\n"));
    }
}
