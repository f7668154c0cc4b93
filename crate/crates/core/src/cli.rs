//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when the mathematics refuses (non-units,
//! non-divisors, exhausted budgets), 2 for malformed input.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, CommandFactory, Parser, Subcommand};
use serde::Serialize;

use crate::automorphisms::{self, AutomorphismId, OracleReport};
use crate::error::Error;
use crate::ring::{Classification, PrimeModulus, RingElement};
use crate::skew_cyclic::{self, Codeword, SkewCyclicCode};
use crate::skew_poly::SkewPolynomial;

#[derive(Debug, Parser)]
#[command(
    name = "skewring",
    version,
    about = "Arithmetic, automorphisms, skew polynomials and skew cyclic codes over F_p + vF_p + v^2F_p (v^3 = v)"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Odd prime p
    #[arg(long, value_parser = parse_prime)]
    pub prime: PrimeModulus,
    /// Emit JSON instead of text
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the six automorphisms by their image of v
    Autos {
        #[command(flatten)]
        common: Common,
        /// Cross-check against the exhaustive search (cost grows like p^6)
        #[arg(long)]
        brute_force: bool,
    },
    /// List every t with t^3 = t and whether v -> t is injective
    Endos {
        #[command(flatten)]
        common: Common,
    },
    /// Composition table of the automorphism group
    Table {
        #[command(flatten)]
        common: Common,
    },
    /// Element arithmetic; elements are written `a,b,c` for a + bv + cv^2
    Elem {
        #[command(subcommand)]
        op: ElemOp,
    },
    /// Skew polynomial arithmetic; polynomials are `;`-separated triples, lowest degree first
    Poly {
        #[command(subcommand)]
        op: PolyOp,
    },
    /// Skew cyclic codes
    Code {
        #[command(subcommand)]
        op: CodeOp,
    },
}

#[derive(Debug, Subcommand)]
pub enum ElemOp {
    Mul {
        #[command(flatten)]
        common: Common,
        x: String,
        y: String,
    },
    Inv {
        #[command(flatten)]
        common: Common,
        x: String,
    },
    Classify {
        #[command(flatten)]
        common: Common,
        x: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum PolyOp {
    Mul {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_theta)]
        theta: AutomorphismId,
        f: String,
        g: String,
    },
    /// Right division F = q * G + r
    Divmod {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_theta)]
        theta: AutomorphismId,
        f: String,
        g: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum CodeOp {
    /// Build the code generated by a monic right divisor of x^n - 1
    Build {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_theta)]
        theta: AutomorphismId,
        /// Code length
        #[arg(short = 'n')]
        n: usize,
        /// Generator polynomial
        #[arg(short = 'g')]
        generator: String,
        /// Compute the minimum Hamming distance by exhaustive enumeration
        #[arg(long)]
        min_distance: bool,
        /// Largest number of codewords the enumeration may visit
        #[arg(long, default_value_t = skew_cyclic::DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Apply the theta-cyclic shift to a codeword
    Shift {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_theta)]
        theta: AutomorphismId,
        codeword: String,
    },
}

fn parse_prime(s: &str) -> Result<PrimeModulus, String> {
    let p: u64 = s
        .parse()
        .map_err(|_| format!("`{s}` is not an integer; the modulus must be an odd prime"))?;
    PrimeModulus::new(p).map_err(|e| e.to_string())
}

fn parse_theta(s: &str) -> Result<AutomorphismId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Domain(Error),
    Usage(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e)
        } else {
            Failure::Domain(e)
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(&config.command, out) {
        Ok(()) => 0,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Usage(e)) => {
            let usage = usage_for(&config.command.path());
            let _ = writeln!(err, "error: {e}\n\n{usage}");
            2
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

impl Command {
    fn path(&self) -> [&'static str; 2] {
        match self {
            Command::Autos { .. } => ["autos", ""],
            Command::Endos { .. } => ["endos", ""],
            Command::Table { .. } => ["table", ""],
            Command::Elem { op } => match op {
                ElemOp::Mul { .. } => ["elem", "mul"],
                ElemOp::Inv { .. } => ["elem", "inv"],
                ElemOp::Classify { .. } => ["elem", "classify"],
            },
            Command::Poly { op } => match op {
                PolyOp::Mul { .. } => ["poly", "mul"],
                PolyOp::Divmod { .. } => ["poly", "divmod"],
            },
            Command::Code { op } => match op {
                CodeOp::Build { .. } => ["code", "build"],
                CodeOp::Shift { .. } => ["code", "shift"],
            },
        }
    }
}

fn usage_for(path: &[&str]) -> String {
    let mut cmd = CliConfig::command();
    cmd.build();
    for name in path.iter().filter(|n| !n.is_empty()) {
        match cmd.find_subcommand(name) {
            Some(sub) => cmd = sub.clone(),
            None => break,
        }
    }
    cmd.render_usage().to_string()
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn poly_literal(f: &SkewPolynomial) -> String {
    if f.is_zero() {
        "0,0,0".to_string()
    } else {
        f.literal()
    }
}

#[derive(Serialize)]
struct AutoRow {
    id: AutomorphismId,
    image_of_v: RingElement,
}

#[derive(Serialize)]
struct OracleSummary {
    status: &'static str,
    #[serde(flatten)]
    counts: OracleReport,
}

#[derive(Serialize)]
struct AutosReport {
    prime: u64,
    automorphisms: Vec<AutoRow>,
    oracle: Option<OracleSummary>,
}

#[derive(Serialize)]
struct EndoRow {
    image_of_v: RingElement,
    injective: bool,
    automorphism_id: Option<AutomorphismId>,
    witness: Option<[RingElement; 2]>,
}

#[derive(Serialize)]
struct EndosReport {
    prime: u64,
    candidates: Vec<EndoRow>,
}

#[derive(Serialize)]
struct ClassifyReport {
    element: RingElement,
    class: &'static str,
    conditions: Vec<&'static str>,
}

#[derive(Serialize)]
struct ProductReport {
    prime: u64,
    theta: AutomorphismId,
    product: Vec<RingElement>,
}

#[derive(Serialize)]
struct DivmodReport {
    prime: u64,
    theta: AutomorphismId,
    quotient: Vec<RingElement>,
    remainder: Vec<RingElement>,
}

#[derive(Serialize)]
struct CodeReport {
    prime: u64,
    n: usize,
    k: usize,
    q: String,
    cardinality: Option<String>,
    theta: AutomorphismId,
    generator: Vec<RingElement>,
    right_divides: bool,
    min_distance: Option<usize>,
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Autos {
            common,
            brute_force,
        } => autos(common, *brute_force, out),
        Command::Endos { common } => endos(common, out),
        Command::Table { common } => table(common, out),
        Command::Elem { op } => elem(op, out),
        Command::Poly { op } => poly(op, out),
        Command::Code { op } => code(op, out),
    }
}

fn autos(common: &Common, brute_force: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let p = common.prime;
    let oracle = if brute_force {
        Some(OracleSummary {
            status: "OK",
            counts: automorphisms::cross_check(p)?,
        })
    } else {
        None
    };
    let report = AutosReport {
        prime: p.get(),
        automorphisms: AutomorphismId::ALL
            .iter()
            .map(|&id| AutoRow {
                id,
                image_of_v: id.image_of_v(p),
            })
            .collect(),
        oracle,
    };
    if common.json {
        return emit_json(out, &report);
    }
    writeln!(out, "automorphisms of F_{p}[v]/(v^3 - v)")?;
    writeln!(out, "id  image of v")?;
    for row in &report.automorphisms {
        writeln!(
            out,
            "{:>2}  {}  ({})",
            row.id,
            row.image_of_v.literal(),
            row.image_of_v
        )?;
    }
    if let Some(o) = &report.oracle {
        writeln!(
            out,
            "brute-force oracle: {} ({} candidates with t^3 = t, {} automorphisms, {} non-injective)",
            o.status, o.counts.candidates, o.counts.automorphisms, o.counts.non_injective
        )?;
    }
    Ok(())
}

fn endos(common: &Common, out: &mut dyn Write) -> Result<(), Failure> {
    let p = common.prime;
    let report = EndosReport {
        prime: p.get(),
        candidates: automorphisms::enumerate_endomorphism_candidates(p)
            .into_iter()
            .map(|c| EndoRow {
                image_of_v: c.image_of_v,
                injective: c.injective,
                automorphism_id: c.automorphism_id,
                witness: c.collision.map(|(z, w)| [z, w]),
            })
            .collect(),
    };
    if common.json {
        return emit_json(out, &report);
    }
    writeln!(
        out,
        "{} candidates t with t^3 = t over F_{p}",
        report.candidates.len()
    )?;
    for row in &report.candidates {
        let t = row.image_of_v;
        match (row.automorphism_id, row.witness) {
            (Some(id), _) => writeln!(out, "{}  ({t})  injective  theta_{id}", t.literal())?,
            (None, Some([z, w])) => writeln!(
                out,
                "{}  ({t})  non-injective  witness {} and {}",
                t.literal(),
                z.literal(),
                w.literal()
            )?,
            (None, None) => writeln!(out, "{}  ({t})  injective  unmatched", t.literal())?,
        }
    }
    Ok(())
}

fn table(common: &Common, out: &mut dyn Write) -> Result<(), Failure> {
    let table = automorphisms::group_table(common.prime)?;
    let rows = table.to_ids();
    if common.json {
        return emit_json(out, &rows);
    }
    writeln!(out, "o | 1 2 3 4 5 6")?;
    writeln!(out, "--+------------")?;
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        writeln!(out, "{} | {}", i + 1, cells.join(" "))?;
    }
    Ok(())
}

fn write_element(out: &mut dyn Write, json: bool, z: &RingElement) -> Result<(), Failure> {
    if json {
        return emit_json(out, z);
    }
    writeln!(out, "{}  ({z})", z.literal())?;
    Ok(())
}

fn elem(op: &ElemOp, out: &mut dyn Write) -> Result<(), Failure> {
    match op {
        ElemOp::Mul { common, x, y } => {
            let x = RingElement::parse(x, common.prime)?;
            let y = RingElement::parse(y, common.prime)?;
            write_element(out, common.json, &(x * y))
        }
        ElemOp::Inv { common, x } => {
            let x = RingElement::parse(x, common.prime)?;
            write_element(out, common.json, &x.inv()?)
        }
        ElemOp::Classify { common, x } => {
            let x = RingElement::parse(x, common.prime)?;
            let class = x.classify();
            if common.json {
                let conditions = match class {
                    Classification::ZeroDivisor(c) => c.labels(),
                    _ => Vec::new(),
                };
                return emit_json(
                    out,
                    &ClassifyReport {
                        element: x,
                        class: class.label(),
                        conditions,
                    },
                );
            }
            writeln!(out, "{class}")?;
            Ok(())
        }
    }
}

fn poly(op: &PolyOp, out: &mut dyn Write) -> Result<(), Failure> {
    match op {
        PolyOp::Mul {
            common,
            theta,
            f,
            g,
        } => {
            let p = common.prime;
            let f = SkewPolynomial::parse(f, *theta, p)?;
            let g = SkewPolynomial::parse(g, *theta, p)?;
            let h = f.checked_mul(&g)?;
            if common.json {
                return emit_json(
                    out,
                    &ProductReport {
                        prime: p.get(),
                        theta: *theta,
                        product: h.coeffs().to_vec(),
                    },
                );
            }
            writeln!(out, "product: {}  ({h})", poly_literal(&h))?;
            Ok(())
        }
        PolyOp::Divmod {
            common,
            theta,
            f,
            g,
        } => {
            let p = common.prime;
            let f = SkewPolynomial::parse(f, *theta, p)?;
            let g = SkewPolynomial::parse(g, *theta, p)?;
            let (q, r) = f.right_divmod(&g)?;
            if common.json {
                return emit_json(
                    out,
                    &DivmodReport {
                        prime: p.get(),
                        theta: *theta,
                        quotient: q.coeffs().to_vec(),
                        remainder: r.coeffs().to_vec(),
                    },
                );
            }
            writeln!(out, "quotient: {}  ({q})", poly_literal(&q))?;
            writeln!(out, "remainder: {}  ({r})", poly_literal(&r))?;
            Ok(())
        }
    }
}

fn code(op: &CodeOp, out: &mut dyn Write) -> Result<(), Failure> {
    match op {
        CodeOp::Build {
            common,
            theta,
            n,
            generator,
            min_distance,
            budget,
        } => {
            let p = common.prime;
            let g = SkewPolynomial::parse(generator, *theta, p)?;
            let code = SkewCyclicCode::build(p, *theta, *n, g)?;
            let distance = if *min_distance {
                Some(code.min_hamming_distance(*budget)?)
            } else {
                None
            };
            let report = CodeReport {
                prime: p.get(),
                n: code.n(),
                k: code.k(),
                q: format!("{p}^{}", code.cardinality_exponent()),
                cardinality: code.cardinality().map(|c| c.to_string()),
                theta: *theta,
                generator: code.generator().coeffs().to_vec(),
                right_divides: true,
                min_distance: distance,
            };
            if common.json {
                return emit_json(out, &report);
            }
            writeln!(
                out,
                "generator {} right-divides x^{} - 1 in S[x; theta_{theta}] over F_{p}",
                code.generator(),
                report.n
            )?;
            writeln!(out, "generator: {}", code.generator().literal())?;
            writeln!(out, "n = {}", report.n)?;
            writeln!(out, "k = {}", report.k)?;
            match &report.cardinality {
                Some(c) => writeln!(out, "q = {} = {c}", report.q)?,
                None => writeln!(out, "q = {}", report.q)?,
            }
            match report.min_distance {
                Some(d) => writeln!(out, "min_distance = {d}")?,
                None => writeln!(out, "min_distance = not computed")?,
            }
            Ok(())
        }
        CodeOp::Shift {
            common,
            theta,
            codeword,
        } => {
            let c = Codeword::parse(codeword, common.prime)?;
            let shifted = skew_cyclic::theta_shift(&c, *theta);
            if common.json {
                return emit_json(out, &shifted.entries());
            }
            writeln!(out, "{}", shifted.literal())?;
            Ok(())
        }
    }
}
