//! The `crossed` command-line driver.
//!
//! Exit codes: 0 when every check passed, 1 when checks ran and one failed, 2 for
//! usage and input errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::check_algebra;
use crate::corpus::{
    builtin_corpus_over, check_gauge, check_module_algebra, check_pentagon, check_quasi_bialgebra, corpus_instance,
    QuasiBialgebra,
};
use crate::crossed::{build_crossed_product, check_brz_axioms, check_twisting_map, CrossedData};
use crate::error::Error;
use crate::io::{parse, parse_into, report_json, serialize, Object, SpecDocument};
use crate::report::AxiomReport;
use crate::tensor::{Field, LinMap};
use crate::twist::{apply_twist, check_twist_conditions, specialize_ttp, verify_twist_result, TwistPair};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "crossed",
    version,
    about = "Verify crossed products of algebras and their twists"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Scalar field: `rationals` or `gf:<p>`; a rationals document is reduced mod p.
    #[arg(long)]
    field: Option<Field>,
    #[arg(long)]
    input: Option<PathBuf>,
    /// Object to act on; defaults to the only object of the needed kind.
    #[arg(long)]
    object: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the laws of one object, or of every object in the document.
    Validate(Common),
    /// Assemble the crossed-product algebra of a `crossed_data` object.
    Build(Common),
    /// Twist a `crossed_data` object by a `twist_pair` and certify the isomorphism.
    Twist {
        #[command(flatten)]
        common: Common,
        /// Twist pair to use; defaults to the only `twist_pair` in the document.
        #[arg(long)]
        pair: Option<String>,
    },
    /// Re-verify a stored `twist_result`.
    VerifyIso(Common),
    /// List builtin instances, or emit one as a document.
    Corpus {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with = "emit")]
        list: bool,
        /// 1-based position or name.
        #[arg(long)]
        emit: Option<String>,
    },
}

/// What a command produced before formatting.
struct Outcome {
    report: Option<AxiomReport>,
    document: Option<SpecDocument>,
    listing: Option<String>,
}

impl Outcome {
    fn report(report: AxiomReport) -> Outcome {
        Outcome {
            report: Some(report),
            document: None,
            listing: None,
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    let common = match &cli.command {
        Command::Validate(c) | Command::Build(c) | Command::VerifyIso(c) => c,
        Command::Twist { common, .. } | Command::Corpus { common, .. } => common,
    };
    match execute(&cli.command) {
        Ok(outcome) => emit(outcome, common, out, err),
        Err(e) => {
            if let Some(report) = e.report() {
                let failed = Outcome::report(report.clone());
                let _ = writeln!(err, "{e}");
                return emit(failed, common, out, err);
            }
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn emit(outcome: Outcome, common: &Common, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut document_on_stdout = false;
    if let Some(doc) = &outcome.document {
        let text = serialize(doc);
        match &common.output {
            Some(path) => {
                if let Err(e) = std::fs::write(path, text) {
                    let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                    return EXIT_INPUT;
                }
            }
            None => {
                let _ = out.write_all(text.as_bytes());
                document_on_stdout = true;
            }
        }
    }
    if let Some(listing) = &outcome.listing {
        let _ = out.write_all(listing.as_bytes());
    }
    let Some(report) = outcome.report else {
        return EXIT_OK;
    };
    let text = match common.report {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Json => report_json(&report),
    };
    let sink: &mut dyn Write = if document_on_stdout { err } else { out };
    let _ = sink.write_all(text.as_bytes());
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn load(common: &Common) -> Result<SpecDocument, Error> {
    let path = common
        .input
        .as_ref()
        .ok_or_else(|| Error::Domain("--input <path> is required".into()))?;
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
    match common.field {
        Some(field) => parse_into(&text, field),
        None => parse(&text),
    }
}

/// The object named `name`, or the only object of `kind` when no name is given.
fn pick<'a>(doc: &'a SpecDocument, name: Option<&str>, kind: &str) -> Result<(&'a str, &'a Object), Error> {
    if let Some(name) = name {
        let (key, object) = doc
            .objects
            .get_key_value(name)
            .ok_or_else(|| Error::Domain(format!("no object named `{name}`")))?;
        if object.kind() != kind {
            return Err(Error::Domain(format!(
                "object `{name}` is a {}, expected {kind}",
                object.kind()
            )));
        }
        return Ok((key.as_str(), object));
    }
    let mut matches = doc.objects.iter().filter(|(_, o)| o.kind() == kind);
    match (matches.next(), matches.next()) {
        (Some((k, o)), None) => Ok((k.as_str(), o)),
        (None, _) => Err(Error::Domain(format!("document has no {kind} object"))),
        (Some(_), Some(_)) => Err(Error::Domain(format!(
            "document has several {kind} objects; pass --object"
        ))),
    }
}

fn crossed_of<'a>(doc: &'a SpecDocument, name: Option<&str>) -> Result<&'a CrossedData, Error> {
    match pick(doc, name, "crossed_data")?.1 {
        Object::CrossedData(c) => Ok(c),
        _ => unreachable!("kind checked"),
    }
}

fn pair_of<'a>(doc: &'a SpecDocument, name: Option<&str>) -> Result<&'a TwistPair, Error> {
    match pick(doc, name, "twist_pair")?.1 {
        Object::TwistPair(p) => Ok(p),
        _ => unreachable!("kind checked"),
    }
}

fn quasi_of(doc: &SpecDocument) -> Result<&QuasiBialgebra, Error> {
    match pick(doc, None, "quasi_bialgebra")?.1 {
        Object::QuasiBialgebra(q) => Ok(q),
        _ => unreachable!("kind checked"),
    }
}

fn execute(command: &Command) -> Result<Outcome, Error> {
    match command {
        Command::Validate(common) => {
            let doc = load(common)?;
            let report = match &common.object {
                Some(name) => {
                    let object = doc
                        .get(name)
                        .ok_or_else(|| Error::Domain(format!("no object named `{name}`")))?;
                    validate_object(&doc, name, object)?
                }
                None => {
                    let mut report = AxiomReport::new();
                    for (name, object) in &doc.objects {
                        report.extend(validate_object(&doc, name, object)?);
                    }
                    report.extend(validate_ttp(&doc)?);
                    report
                }
            };
            Ok(Outcome::report(report))
        }
        Command::Build(common) => {
            let doc = load(common)?;
            let c = crossed_of(&doc, common.object.as_deref())?;
            let algebra = build_crossed_product(c)?;
            let mut result = SpecDocument::new(doc.field);
            result.insert("product", Object::Algebra(algebra))?;
            Ok(Outcome {
                report: Some(check_brz_axioms(c)),
                document: Some(result),
                listing: None,
            })
        }
        Command::Twist { common, pair } => {
            let doc = load(common)?;
            let c = crossed_of(&doc, common.object.as_deref())?;
            let t = pair_of(&doc, pair.as_deref())?;
            let result = apply_twist(c, t)?;
            let report = result.report().clone();
            let mut out = SpecDocument::new(doc.field);
            out.insert("result", Object::TwistResult(Box::new(result)))?;
            Ok(Outcome {
                report: Some(report),
                document: Some(out),
                listing: None,
            })
        }
        Command::VerifyIso(common) => {
            let doc = load(common)?;
            let Object::TwistResult(result) = pick(&doc, common.object.as_deref(), "twist_result")?.1 else {
                unreachable!("kind checked")
            };
            Ok(Outcome::report(verify_twist_result(result)?))
        }
        Command::Corpus { common, emit, .. } => {
            let field = common.field.unwrap_or(Field::Rationals);
            if let Some(key) = emit {
                return Ok(Outcome {
                    report: None,
                    document: Some(corpus_instance(field, key)?.to_document()),
                    listing: None,
                });
            }
            let mut listing = String::new();
            for (i, inst) in builtin_corpus_over(field)?.iter().enumerate() {
                let (m, n) = inst.crossed.dims();
                listing.push_str(&format!("{} {} {m}x{n} {}\n", i + 1, inst.name, inst.tags.join(",")));
            }
            Ok(Outcome {
                report: None,
                document: None,
                listing: Some(listing),
            })
        }
    }
}

fn validate_object(doc: &SpecDocument, name: &str, object: &Object) -> Result<AxiomReport, Error> {
    Ok(match object {
        Object::LinMap(_) | Object::PointedSpace(_) => AxiomReport::new(),
        Object::Algebra(a) => check_algebra(a),
        Object::CrossedData(c) => check_brz_axioms(c),
        Object::TwistingMap(t) => check_twisting_map(t),
        Object::TwistPair(t) => {
            let c = crossed_of(doc, None)
                .map_err(|e| Error::Domain(format!("twist pair `{name}` needs its crossed data: {e}")))?;
            let brz = check_brz_axioms(c);
            if brz.passed() {
                check_twist_conditions(c, t)?
            } else {
                brz
            }
        }
        Object::QuasiBialgebra(q) => {
            let mut report = check_quasi_bialgebra(q);
            report.extend(check_pentagon(q));
            report
        }
        Object::Gauge(g) => check_gauge(quasi_of(doc)?, g),
        Object::ModuleAlgebra(b) => check_module_algebra(quasi_of(doc)?, b),
        Object::TwistResult(r) => verify_twist_result(r)?,
    })
}

/// Twisted-tensor-product relations when the document holds a twisting map, a
/// `star` product and a twist pair.
fn validate_ttp(doc: &SpecDocument) -> Result<AxiomReport, Error> {
    let (Ok((_, Object::TwistingMap(t))), Some(Object::LinMap(star))) =
        (pick(doc, None, "twisting_map"), doc.get("star"))
    else {
        return Ok(AxiomReport::new());
    };
    let pair = pair_of(doc, None)?;
    if !check_twisting_map(t).passed() {
        return Ok(AxiomReport::new());
    }
    let star: &LinMap = star;
    specialize_ttp(t, star, pair)
}
