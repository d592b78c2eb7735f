//! The `qfc` command line.
//!
//! Every command prints a short human-readable summary followed by a fenced
//! ```` ```json ```` block holding the machine-readable result.
//!
//! Exit codes: 0 yes (or success), 1 no, 2 unknown, 64 usage error,
//! 65 input error, 70 internal error.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cone::DEFAULT_ENUMERATION_BUDGET;
use crate::decide::{self, Effort, SubalgebraSpec, DEFAULT_BASIS_CAP, DEFAULT_WORD_LENGTH};
use crate::error::{Error, Result};
use crate::lattice::ExponentVector;
use crate::laurent::{self, CoefficientDomain};
use crate::monoid::FgMonoid;
use crate::numsgp::NumericalSemigroup;
use crate::oracle::{self, FuzzConfig, DEFAULT_PAIR_BUDGET};
use crate::verdict::{Answer, Verdict};
use crate::verify::{self, Property, Subject, VerdictDocument};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_SOFTWARE: i32 = 70;

/// Overrides the enumeration budget of box and parallelepiped searches.
pub const BUDGET_ENV: &str = "QFC_ENUM_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "qfc", version, about = "Factorial-closure properties of Laurent subalgebras")]
struct Cli {
    /// Print only the JSON document.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide a property of a monoid algebra or subalgebra.
    Decide {
        #[arg(value_enum)]
        property: PropertyArg,
        #[command(flatten)]
        input: Input,
        /// Longest product of generators searched for monomials.
        #[arg(long, default_value_t = DEFAULT_WORD_LENGTH)]
        word_length: usize,
        /// Cap on the number of products spanning the search.
        #[arg(long, default_value_t = DEFAULT_BASIS_CAP)]
        basis_cap: usize,
    },
    /// Gaps Cone(M) ∩ ℤⁿ \ M inside a box.
    Gaps {
        #[command(flatten)]
        input: Input,
        /// `HI` for [0, HI] or `LO..HI`, in every coordinate.
        #[arg(long = "box", allow_hyphen_values = true)]
        bounds: String,
    },
    /// Frobenius number, genus and gaps of a numerical semigroup.
    Frobenius {
        #[command(flatten)]
        input: Input,
    },
    /// Apéry set of a numerical semigroup with respect to an element.
    Apery {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        m: u64,
    },
    /// Certificate utilities.
    Certificate {
        #[command(subcommand)]
        action: CertificateCommand,
    },
    /// Finite-field brute force.
    Oracle {
        #[command(subcommand)]
        action: OracleCommand,
    },
}

#[derive(Subcommand, Debug)]
enum CertificateCommand {
    /// Re-check a verdict document (file, or `-` for stdin).
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Search factorization pairs refuting a property of a monoid algebra.
    Fuzz {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = PropertyArg::Qfc)]
        property: PropertyArg,
        #[arg(long, default_value_t = 2)]
        prime: u64,
        /// `HI` for [0, HI] or `LO..HI`, in every coordinate.
        #[arg(long = "box", allow_hyphen_values = true)]
        bounds: String,
        /// Shift search radius (n ≥ 2); defaults to twice the box width.
        #[arg(long)]
        radius: Option<i64>,
        #[arg(long, default_value_t = DEFAULT_PAIR_BUDGET)]
        pair_budget: u64,
    },
    /// Shift making a Laurent polynomial over F2 a product of elements of
    /// F2[f : f irreducible, deg f >= 2].
    WitnessF2 {
        /// Polynomial in x1.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PropertyArg {
    Qfc,
    Pfc,
    Fc,
    Retract,
    Normal,
}

impl From<PropertyArg> for Property {
    fn from(p: PropertyArg) -> Self {
        match p {
            PropertyArg::Qfc => Property::Qfc,
            PropertyArg::Pfc => Property::Pfc,
            PropertyArg::Fc => Property::Fc,
            PropertyArg::Retract => Property::Retract,
            PropertyArg::Normal => Property::Normal,
        }
    }
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct InputSource {
    /// Monoid generators: `(a,b);(c,d)` or `3,5` for n = 1.
    #[arg(long, allow_hyphen_values = true)]
    monoid: Option<String>,
    /// Subalgebra generators separated by `;`, e.g. `x1 + x2; x1^2`.
    #[arg(long, allow_hyphen_values = true)]
    algebra: Option<String>,
    /// File holding a monoid (`monoid: ...`) or an algebra (`algebra: ...`);
    /// without a prefix, text mentioning a variable is an algebra.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Input {
    #[command(flatten)]
    source: InputSource,
    /// Number of variables (default: inferred).
    #[arg(long)]
    vars: Option<usize>,
    /// Coefficients: Q, Z or Fp (e.g. F2).
    #[arg(long, default_value = "Q")]
    field: String,
}

enum Parsed {
    Monoid(FgMonoid),
    Algebra(SubalgebraSpec, Vec<String>),
}

impl Parsed {
    fn subject(&self) -> Subject {
        match self {
            Parsed::Monoid(m) => Subject::Monoid {
                n: m.ambient(),
                generators: m.generators().to_vec(),
            },
            Parsed::Algebra(spec, texts) => Subject::Algebra {
                domain: spec.domain,
                n: spec.n,
                generators: texts.clone(),
            },
        }
    }

    fn describe(&self) -> String {
        match self {
            Parsed::Monoid(m) => format!("monoid {m} in Z^{}", m.ambient()),
            Parsed::Algebra(spec, texts) => format!(
                "{}[{}] in {} variable(s)",
                spec.domain.label(),
                texts.join(", "),
                spec.n
            ),
        }
    }

    /// A monoid, or the monoid of an algebra generated by monic monomials.
    fn monoid(&self) -> Result<FgMonoid> {
        match self {
            Parsed::Monoid(m) => Ok(m.clone()),
            Parsed::Algebra(spec, _) => match spec.monomial_exponents() {
                Some(e) => FgMonoid::new(spec.n, e),
                None => Err(Error::Invalid("expected a monoid or monic monomial generators".into())),
            },
        }
    }
}

/// Parses `(a,b);(c,d)` or `3,5` (n = 1).
pub fn parse_monoid(text: &str, vars: Option<usize>) -> Result<FgMonoid> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyInput("monoid generators"));
    }
    let syntax = |pos: usize, message: &str| Error::Syntax {
        pos,
        message: message.to_string(),
    };
    let int = |s: &str, pos: usize| -> Result<i64> {
        s.trim()
            .parse::<i64>()
            .map_err(|_| syntax(pos, &format!("expected an integer, found {:?}", s.trim())))
    };
    let mut gens = Vec::new();
    if text.contains('(') {
        let mut offset = 0;
        for part in text.split(';') {
            let t = part.trim();
            let start = offset + part.find(|c: char| !c.is_whitespace()).unwrap_or(0);
            let inner = t
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| syntax(start, "expected a tuple (a,b,...)"))?;
            let entries = inner.split(',').map(|s| int(s, start)).collect::<Result<Vec<i64>>>()?;
            gens.push(ExponentVector::new(entries));
            offset += part.len() + 1;
        }
    } else {
        let mut offset = 0;
        for part in text.split([',', ';']) {
            gens.push(ExponentVector::new(vec![int(part, offset)?]));
            offset += part.len() + 1;
        }
    }
    let n = gens[0].len();
    if let Some(v) = vars {
        if v != n {
            return Err(Error::DimensionMismatch { expected: v, found: n });
        }
    }
    FgMonoid::new(n, gens)
}

/// `Q`, `Z`, `F<p>`, `GF(<p>)` or a bare prime.
pub fn parse_field(text: &str) -> Result<CoefficientDomain> {
    let t = text.trim();
    match t.to_ascii_uppercase().as_str() {
        "Q" | "QQ" | "RATIONALS" => return Ok(CoefficientDomain::Rationals),
        "Z" | "ZZ" | "INTEGERS" => return Ok(CoefficientDomain::Integers),
        _ => {}
    }
    let digits = t
        .strip_prefix(['F', 'f'])
        .or_else(|| t.strip_prefix("GF(").and_then(|s| s.strip_suffix(')')))
        .unwrap_or(t);
    let p: u64 = digits
        .parse()
        .map_err(|_| Error::Invalid(format!("unknown coefficient field {t:?}")))?;
    CoefficientDomain::prime_field(p)
}

fn parse_box(text: &str, n: usize) -> Result<(ExponentVector, ExponentVector)> {
    let bad = || Error::Invalid(format!("box must be HI or LO..HI, found {text:?}"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (
            a.trim().parse::<i64>().map_err(|_| bad())?,
            b.trim().parse::<i64>().map_err(|_| bad())?,
        ),
        None => (0, text.trim().parse::<i64>().map_err(|_| bad())?),
    };
    if hi < lo {
        return Err(bad());
    }
    Ok((ExponentVector::new(vec![lo; n]), ExponentVector::new(vec![hi; n])))
}

fn read_source(path: &PathBuf) -> Result<String> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn parse_algebra(text: &str, input: &Input) -> Result<Parsed> {
    let domain = parse_field(&input.field)?;
    let n = input.vars.unwrap_or_else(|| laurent::infer_nvars(text));
    let spec = SubalgebraSpec::parse(text, domain, n)?;
    let texts = text.split(';').map(|s| s.trim().to_string()).collect();
    Ok(Parsed::Algebra(spec, texts))
}

fn parse_input(input: &Input) -> Result<Parsed> {
    let src = &input.source;
    if let Some(m) = &src.monoid {
        return Ok(Parsed::Monoid(parse_monoid(m, input.vars)?));
    }
    if let Some(a) = &src.algebra {
        return parse_algebra(a, input);
    }
    let path = src.input.as_ref().expect("clap enforces one input source");
    let text = read_source(path)?;
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("monoid:") {
        return Ok(Parsed::Monoid(parse_monoid(rest, input.vars)?));
    }
    if let Some(rest) = text.strip_prefix("algebra:") {
        return parse_algebra(rest.trim(), input);
    }
    if text.contains('x') {
        parse_algebra(text, input)
    } else {
        Ok(Parsed::Monoid(parse_monoid(text, input.vars)?))
    }
}

fn enumeration_budget() -> Result<u64> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("{BUDGET_ENV} must be a positive integer, found {v:?}"))),
        Err(_) => Ok(DEFAULT_ENUMERATION_BUDGET),
    }
}

fn exit_for_error(e: &Error) -> i32 {
    match e {
        Error::Overflow(_) => EXIT_SOFTWARE,
        _ => EXIT_DATA,
    }
}

fn exit_for(answer: Answer) -> i32 {
    match answer {
        Answer::Yes => EXIT_YES,
        Answer::No => EXIT_NO,
        Answer::Unknown => EXIT_UNKNOWN,
    }
}

struct Printer<'a> {
    out: &'a mut dyn Write,
    json_only: bool,
}

impl Printer<'_> {
    fn emit(&mut self, lines: &[String], doc: &impl Serialize) -> std::io::Result<()> {
        let json = serde_json::to_string_pretty(doc).expect("serializable output");
        if self.json_only {
            return writeln!(self.out, "{json}");
        }
        for l in lines {
            writeln!(self.out, "{l}")?;
        }
        writeln!(self.out, "```json\n{json}\n```")
    }
}

/// Runs the decision procedure for `property` on the parsed input.
fn decide(parsed: &Parsed, property: Property, effort: Effort, budget: u64) -> Result<Verdict> {
    let verdict = match (parsed, property) {
        (Parsed::Monoid(m), p) => decide_monoid(m, p, budget),
        (Parsed::Algebra(spec, _), p) => {
            if !spec.domain.is_field() {
                return Err(Error::NotAField);
            }
            if let Some(exps) = spec.monomial_exponents() {
                return Ok(decide_monoid(&FgMonoid::new(spec.n, exps)?, p, budget));
            }
            let spec = spec.clone().with_effort(effort);
            match p {
                Property::Qfc => decide::qfc_general(&spec)?,
                Property::Fc => decide::fc_general(&spec)?,
                Property::Pfc if spec.n == 1 => match decide::one_var_pfc_general(&spec) {
                    Err(Error::HypothesisUnmet(r)) => Verdict::unknown(format!("hypothesis unmet: {r}")),
                    v => v?,
                },
                Property::Pfc => {
                    // pfc implies qfc, so a qfc refutation carries over
                    let q = decide::qfc_general(&spec)?;
                    if q.is_no() {
                        q
                    } else {
                        Verdict::unknown("no pfc criterion known for n >= 2 beyond the monomial cases")
                    }
                }
                Property::Retract => Verdict::unknown("retract test needs monic monomial generators"),
                Property::Normal => Verdict::unknown("normality is tested for monoid algebras only"),
            }
        }
    };
    Ok(verdict)
}

fn decide_monoid(m: &FgMonoid, p: Property, budget: u64) -> Verdict {
    match p {
        Property::Qfc => decide::qfc_monoid(m),
        Property::Pfc => decide::pfc_monoid_with_budget(m, budget),
        Property::Fc => decide::fc_monoid(m),
        Property::Retract => decide::retract_monoid(m),
        Property::Normal => m.normality_with_budget(budget),
    }
}

fn execute(cli: Cli, printer: &mut Printer<'_>) -> Result<i32> {
    let budget = enumeration_budget()?;
    let io = |e: std::io::Error| Error::Invalid(format!("write failed: {e}"));
    match cli.command {
        Command::Decide {
            property,
            input,
            word_length,
            basis_cap,
        } => {
            let parsed = parse_input(&input)?;
            let property = Property::from(property);
            let effort = Effort {
                max_word_length: word_length,
                max_basis: basis_cap,
            };
            let start = Instant::now();
            let verdict = decide(&parsed, property, effort, budget)?;
            let mut doc = VerdictDocument::new(parsed.subject(), property, verdict);
            doc.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            doc.budgets = BTreeMap::from([
                ("enumeration".to_string(), budget),
                ("word_length".to_string(), word_length as u64),
                ("basis_cap".to_string(), basis_cap as u64),
            ]);
            let mut lines = vec![
                format!("subject: {}", parsed.describe()),
                format!("property: {property}"),
                format!("verdict: {}", doc.verdict),
            ];
            lines.extend(doc.verdict.assumptions.iter().map(|a| format!("assumption: {a}")));
            printer.emit(&lines, &doc).map_err(io)?;
            Ok(exit_for(doc.verdict.answer))
        }
        Command::Gaps { input, bounds } => {
            let m = parse_input(&input)?.monoid()?;
            let (lo, hi) = parse_box(&bounds, m.ambient())?;
            let report = m.gap_set(&lo, &hi, budget)?;
            let lines = vec![
                format!("monoid: {m}"),
                format!("status: {}", report.status),
                format!("gaps in box: {}", report.elements.len()),
            ];
            printer.emit(&lines, &report).map_err(io)?;
            Ok(EXIT_YES)
        }
        Command::Frobenius { input } => {
            let s = semigroup(&input)?;
            #[derive(Serialize)]
            struct Out<'a> {
                generators: &'a [u64],
                frobenius: i64,
                genus: usize,
                multiplicity: u64,
                gaps: &'a [u64],
            }
            let out = Out {
                generators: s.generators(),
                frobenius: s.frobenius(),
                genus: s.genus(),
                multiplicity: s.multiplicity(),
                gaps: s.gaps(),
            };
            let lines = vec![format!("frobenius: {}", s.frobenius()), format!("genus: {}", s.genus())];
            printer.emit(&lines, &out).map_err(io)?;
            Ok(EXIT_YES)
        }
        Command::Apery { input, m } => {
            let s = semigroup(&input)?;
            let apery = s.apery_set(m)?;
            #[derive(Serialize)]
            struct Out<'a> {
                m: u64,
                apery: &'a [u64],
            }
            let lines = vec![format!("apery set w.r.t. {m}: {apery:?}")];
            printer.emit(&lines, &Out { m, apery: &apery }).map_err(io)?;
            Ok(EXIT_YES)
        }
        Command::Certificate {
            action: CertificateCommand::Verify { input },
        } => {
            let text = read_source(&input)?;
            let json = extract_json(&text);
            let ok = verify::verify_document(json)?;
            #[derive(Serialize)]
            struct Out {
                valid: bool,
            }
            let lines = vec![format!("certificate: {}", if ok { "valid" } else { "INVALID" })];
            printer.emit(&lines, &Out { valid: ok }).map_err(io)?;
            Ok(if ok { EXIT_YES } else { EXIT_NO })
        }
        Command::Oracle {
            action:
                OracleCommand::Fuzz {
                    input,
                    property,
                    prime,
                    bounds,
                    radius,
                    pair_budget,
                },
        } => {
            let m = parse_input(&input)?.monoid()?;
            let (lo, hi) = parse_box(&bounds, m.ambient())?;
            let mut cfg = FuzzConfig::new(prime, lo, hi, property.into()).with_pair_budget(pair_budget);
            if let Some(r) = radius {
                cfg = cfg.with_radius(r);
            }
            let report = oracle::fuzz_monoid_algebra(&m, &cfg)?;
            let mut lines = vec![
                format!("monoid: {m}, property {}, F_{prime}", cfg.property),
                format!(
                    "pairs: {} checked, {} with product in the algebra",
                    report.pairs_checked, report.pairs_in_algebra
                ),
                format!("counterexamples: {} ({:?})", report.counterexample_count, report.regime),
            ];
            if let Some(c) = report.counterexamples.first() {
                lines.push(format!("first: ({}) * ({}) = {}", c.f, c.g, c.product));
            }
            if !report.complete {
                lines.push("pair budget reached before the enumeration finished".into());
            }
            printer.emit(&lines, &report).map_err(io)?;
            Ok(match (report.counterexample_count > 0, report.complete) {
                (true, _) => EXIT_NO,
                (false, true) => EXIT_YES,
                (false, false) => EXIT_UNKNOWN,
            })
        }
        Command::Oracle {
            action: OracleCommand::WitnessF2 { poly },
        } => {
            let f = laurent::parse(&poly, CoefficientDomain::PrimeField(2), 1)?;
            let w = oracle::strong_qfc_witness_f2(&f)?;
            let ok = oracle::verify_strong_witness(&f, &w)?;
            if !ok {
                return Err(Error::Invalid("witness failed to re-multiply".into()));
            }
            let factors: Vec<String> = w
                .factors
                .iter()
                .map(|fac| format!("({})^{}", fac.poly, fac.multiplicity))
                .collect();
            let lines = vec![format!(
                "x1^{} * ({}) = {}",
                w.shift,
                f.render(),
                if factors.is_empty() {
                    "1".into()
                } else {
                    factors.join(" * ")
                }
            )];
            printer.emit(&lines, &w).map_err(io)?;
            Ok(EXIT_YES)
        }
    }
}

fn semigroup(input: &Input) -> Result<NumericalSemigroup> {
    let m = parse_input(input)?.monoid()?;
    if m.ambient() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: m.ambient(),
        });
    }
    let gens: Vec<u64> = m
        .generators()
        .iter()
        .map(|g| u64::try_from(g.entries()[0]).map_err(|_| Error::Invalid("generators must be positive".into())))
        .collect::<Result<_>>()?;
    NumericalSemigroup::from_generators(&gens)
}

/// The contents of the first fenced json block, or the whole text.
fn extract_json(text: &str) -> &str {
    match text.find("```json") {
        Some(start) => {
            let body = &text[start + "```json".len()..];
            body.find("```").map_or(body, |end| &body[..end])
        }
        None => text,
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_YES
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut printer = Printer {
        out,
        json_only: cli.json,
    };
    match execute(cli, &mut printer) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_for_error(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("qfc").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn monoid_grammar() {
        let m = parse_monoid("(2,0); (0,2);(3,3)", None).unwrap();
        assert_eq!(m.ambient(), 2);
        assert_eq!(parse_monoid("3, 5", None).unwrap().generators().len(), 2);
        assert!(matches!(
            parse_monoid("(1,2);(3)", None),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(parse_monoid("3,x", None), Err(Error::Syntax { .. })));
        assert!(parse_monoid("", None).is_err());
    }

    #[test]
    fn field_grammar() {
        assert_eq!(parse_field("F2").unwrap(), CoefficientDomain::PrimeField(2));
        assert_eq!(parse_field("GF(7)").unwrap(), CoefficientDomain::PrimeField(7));
        assert_eq!(parse_field("q").unwrap(), CoefficientDomain::Rationals);
        assert!(parse_field("F4").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["decide", "qfc", "--monoid", "3,5"]).0, EXIT_YES);
        assert_eq!(run_capture(&["decide", "qfc", "--monoid", "2"]).0, EXIT_NO);
        assert_eq!(
            run_capture(&["decide", "pfc", "--monoid", "(1,0);(1,1);(1,2)"]).0,
            EXIT_UNKNOWN
        );
        assert_eq!(run_capture(&["decide", "bogus", "--monoid", "2"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["decide", "qfc"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["decide", "qfc", "--monoid", "(1,"]).0, EXIT_DATA);
        assert_eq!(run_capture(&["decide", "qfc", "--algebra", "x1 +* 2"]).0, EXIT_DATA);
    }

    #[test]
    fn json_block_extraction() {
        let (code, out, _) = run_capture(&["decide", "qfc", "--monoid", "2"]);
        assert_eq!(code, EXIT_NO);
        let doc: VerdictDocument = serde_json::from_str(extract_json(&out)).unwrap();
        assert!(verify::verify_certificate(&doc).unwrap());
        assert!(out.contains("\"kind\": \"TorsionElement\""));
    }
}
