use std::fmt::Write as _;
use std::path::Path;

use preleib_core::algebra::{
    check_leibniz, check_leibniz_rep, check_pre_leibniz, check_pre_leibniz_rep, semidirect as semidirect_product,
    totalize_algebra, LeibnizAlgebra, LeibnizRep, PreLeibnizAlgebra, PreLeibnizRep,
};
use preleib_core::cochain::{pl_bracket, ColoredCochain};
use preleib_core::cohomology::{cohomology_dims, is_cocycle};
use preleib_core::deformation::{self, first_failing_order, TruncatedDeformation};
use preleib_core::format::{self, Document};
use preleib_core::homotopy2::{
    check_crossed_module, check_two_term_leibniz, check_two_term_pre, crossed_to_strict, induced_pre_from_rb,
    is_skeletal, is_strict, skeletal_to_triple, strict_to_crossed, triple_to_skeletal,
};
use preleib_core::{CheckReport, Error};

use crate::Mode;

/// Report text and whether every check passed.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

/// An error with its exit code: 2 for unusable input, 1 for an unmet
/// precondition.
pub struct CliError {
    pub code: u8,
    pub message: String,
}

type CliResult<T> = std::result::Result<T, CliError>;

fn input_error(message: impl Into<String>) -> CliError {
    CliError { code: 2, message: message.into() }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Precondition(_) | Error::Inconsistent(_) => 1,
            Error::Shape(_) | Error::OutOfRange { .. } | Error::Format { .. } => 2,
        };
        CliError { code, message: e.to_string() }
    }
}

/// Runs `f`, prefixing any error with the file it concerns.
fn in_file<T>(path: &Path, f: impl FnOnce() -> preleib_core::Result<T>) -> CliResult<T> {
    f().map_err(|e| {
        let mut err = CliError::from(e);
        err.message = format!("{}: {}", path.display(), err.message);
        err
    })
}

fn load(path: &Path) -> CliResult<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    in_file(path, || format::parse_document(&text))
}

fn wrong_kind(path: &Path, want: &str, doc: &Document) -> CliError {
    input_error(format!("{}: expected {want}, found {}", path.display(), doc.kind()))
}

fn load_pre_algebra(path: &Path) -> CliResult<PreLeibnizAlgebra> {
    match load(path)? {
        Document::PreLeibnizAlgebra(p) => Ok(p),
        other => Err(wrong_kind(path, "pre_leibniz_algebra", &other)),
    }
}

fn load_pre_rep(source: &str, p: &PreLeibnizAlgebra) -> CliResult<PreLeibnizRep> {
    if source == "adjoint" {
        return Ok(PreLeibnizRep::adjoint(p));
    }
    let path = Path::new(source);
    match load(path)? {
        Document::PreLeibnizRep(f) => in_file(path, || f.build(p.dim())),
        other => Err(wrong_kind(path, "pre_leibniz_rep", &other)),
    }
}

fn load_leibniz_rep(source: &str, l: &LeibnizAlgebra) -> CliResult<LeibnizRep> {
    if source == "adjoint" {
        return Ok(LeibnizRep::adjoint(l));
    }
    let path = Path::new(source);
    match load(path)? {
        Document::LeibnizRep(f) => in_file(path, || f.build(l.dim())),
        other => Err(wrong_kind(path, "leibniz_rep", &other)),
    }
}

fn load_cochain(path: &Path) -> CliResult<ColoredCochain> {
    match load(path)? {
        Document::Cochain(f) => Ok(f),
        other => Err(wrong_kind(path, "cochain", &other)),
    }
}

fn load_deformation(path: &Path) -> CliResult<TruncatedDeformation> {
    match load(path)? {
        Document::Deformation(d) => Ok(d),
        other => Err(wrong_kind(path, "deformation", &other)),
    }
}

/// Appends `name: OK` or the failure count and one line per failure.
fn summarize(out: &mut String, name: &str, report: &CheckReport) -> bool {
    if report.passed() {
        let _ = writeln!(out, "{name}: OK");
    } else {
        let _ = writeln!(out, "{name}: FAILED ({} of {} instances)", report.failures.len(), report.checked);
        for f in &report.failures {
            let _ = writeln!(out, "  {f}");
        }
    }
    report.passed()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn check(path: &Path, rep: Option<&str>) -> CliResult<Outcome> {
    let doc = load(path)?;
    let takes_rep = matches!(doc, Document::PreLeibnizAlgebra(_) | Document::LeibnizAlgebra(_));
    if rep.is_some() && !takes_rep {
        return Err(input_error(format!("--rep does not apply to {}", doc.kind())));
    }
    let mut out = String::new();
    let passed = match &doc {
        Document::PreLeibnizAlgebra(p) => {
            let base = summarize(&mut out, "pre-Leibniz", &check_pre_leibniz(p)?);
            match rep {
                None => base,
                Some(source) => {
                    let r = load_pre_rep(source, p)?;
                    if base {
                        summarize(&mut out, "representation", &check_pre_leibniz_rep(p, &r)?)
                    } else {
                        out.push_str("representation: not checked, the algebra fails\n");
                        false
                    }
                }
            }
        }
        Document::LeibnizAlgebra(l) => {
            let base = summarize(&mut out, "Leibniz", &check_leibniz(l));
            match rep {
                None => base,
                Some(source) => {
                    let r = load_leibniz_rep(source, l)?;
                    if base {
                        summarize(&mut out, "representation", &check_leibniz_rep(l, &r)?)
                    } else {
                        out.push_str("representation: not checked, the algebra fails\n");
                        false
                    }
                }
            }
        }
        Document::TwoTermPreLeibniz(x) => {
            let ok = summarize(&mut out, "2-term pre-Leibniz∞", &check_two_term_pre(x)?);
            let _ = writeln!(out, "skeletal: {}", yes_no(is_skeletal(x)));
            let _ = writeln!(out, "strict: {}", yes_no(is_strict(x)));
            ok
        }
        Document::TwoTermLeibniz(y) => summarize(&mut out, "2-term Leibniz∞", &check_two_term_leibniz(y)?),
        Document::CrossedModule(c) => summarize(&mut out, "crossed module", &check_crossed_module(c)?),
        Document::Deformation(d) => match first_failing_order(d)? {
            None => {
                let _ = writeln!(out, "deformation of order {}: OK", d.order());
                true
            }
            Some(n) => {
                let _ = writeln!(out, "deformation of order {}: FAILED at order {n}", d.order());
                false
            }
        },
        Document::SkeletalTriple(p, r, theta) => {
            let base = summarize(&mut out, "pre-Leibniz", &check_pre_leibniz(p)?);
            if base {
                let rep_ok = summarize(&mut out, "representation", &check_pre_leibniz_rep(p, r)?);
                let cocycle = is_cocycle(p, r, theta)?;
                let _ = writeln!(out, "3-cocycle: {}", if cocycle { "OK" } else { "FAILED" });
                rep_ok && cocycle
            } else {
                out.push_str("representation: not checked, the algebra fails\n");
                false
            }
        }
        other => return Err(input_error(format!("nothing to check for {}", other.kind()))),
    };
    Ok(Outcome { text: out, passed })
}

/// Fails with the check report when `report` has failures.
fn require(name: &str, report: CheckReport) -> CliResult<Option<Outcome>> {
    let mut out = String::new();
    if summarize(&mut out, name, &report) {
        Ok(None)
    } else {
        Ok(Some(Outcome { text: out, passed: false }))
    }
}

pub fn total(path: &Path) -> CliResult<Outcome> {
    let p = load_pre_algebra(path)?;
    if let Some(failed) = require("pre-Leibniz", check_pre_leibniz(&p)?)? {
        return Ok(failed);
    }
    Ok(Outcome::ok(format::render(&format::leibniz_algebra_value(&totalize_algebra(&p)))))
}

pub fn semidirect(path: &Path, rep: &str) -> CliResult<Outcome> {
    let p = load_pre_algebra(path)?;
    let r = load_pre_rep(rep, &p)?;
    if let Some(failed) = require("pre-Leibniz", check_pre_leibniz(&p)?)? {
        return Ok(failed);
    }
    if let Some(failed) = require("representation", check_pre_leibniz_rep(&p, &r)?)? {
        return Ok(failed);
    }
    Ok(Outcome::ok(format::render(&format::pre_algebra_value(&semidirect_product(&p, &r)?))))
}

pub fn bracket(f: &Path, g: &Path) -> CliResult<Outcome> {
    let (f, g) = (load_cochain(f)?, load_cochain(g)?);
    Ok(Outcome::ok(format::render(&format::cochain_value(&pl_bracket(&f, &g)?))))
}

pub fn cohomology(path: &Path, rep: &str, max: usize) -> CliResult<Outcome> {
    if max == 0 {
        return Err(input_error("--max must be at least 1"));
    }
    let p = load_pre_algebra(path)?;
    let r = load_pre_rep(rep, &p)?;
    if let Some(failed) = require("pre-Leibniz", check_pre_leibniz(&p)?)? {
        return Ok(failed);
    }
    if let Some(failed) = require("representation", check_pre_leibniz_rep(&p, &r)?)? {
        return Ok(failed);
    }
    let mut out = String::new();
    for (n, dim) in cohomology_dims(&p, &r, max)?.iter().enumerate() {
        let _ = writeln!(out, "H^{} = {dim}", n + 1);
    }
    Ok(Outcome::ok(out))
}

pub fn obstruction(path: &Path) -> CliResult<Outcome> {
    let d = load_deformation(path)?;
    let ob = deformation::obstruction(&d)?;
    let entries = ob.nonzero_entries();
    let mut out = String::new();
    let _ = writeln!(out, "obstruction: {} nonzero coefficients", entries.len());
    for (c, args, k, v) in entries {
        let idx: Vec<String> =
            std::iter::once(c).chain(args.iter().map(|a| a + 1)).chain([k + 1]).map(|i| i.to_string()).collect();
        let _ = writeln!(out, "  [{}] = {v}", idx.join(", "));
    }
    let trivial = deformation::extend(&d)?.is_some();
    let _ = writeln!(out, "class: {}", if trivial { "trivial" } else { "nontrivial" });
    Ok(Outcome::ok(out))
}

pub fn extend(path: &Path) -> CliResult<Outcome> {
    let d = load_deformation(path)?;
    Ok(match deformation::extend(&d)? {
        Some(term) => Outcome::ok(format::render(&format::cochain_value(&term))),
        None => Outcome { text: "OBSTRUCTED\n".into(), passed: false },
    })
}

fn single<'a>(files: &[&'a Path]) -> CliResult<&'a Path> {
    match files {
        [one] => Ok(one),
        _ => Err(input_error(format!("expected one input file, got {}", files.len()))),
    }
}

pub fn convert(mode: Mode, files: &[&Path]) -> CliResult<Outcome> {
    let value = match mode {
        Mode::SkeletalToTriple => {
            let path = single(files)?;
            match load(path)? {
                Document::TwoTermPreLeibniz(x) => {
                    let (p, r, theta) = skeletal_to_triple(&x)?;
                    format::skeletal_triple_value(&p, &r, &theta)
                }
                other => return Err(wrong_kind(path, "two_term_pre_leibniz", &other)),
            }
        }
        Mode::TripleToSkeletal => {
            let (p, r, theta) = match files {
                [one] => match load(one)? {
                    Document::SkeletalTriple(p, r, theta) => (p, r, theta),
                    other => return Err(wrong_kind(one, "skeletal_triple", &other)),
                },
                [alg, rep, cochain] => {
                    let p = load_pre_algebra(alg)?;
                    let r = load_pre_rep(&rep.to_string_lossy(), &p)?;
                    (p, r, load_cochain(cochain)?)
                }
                _ => {
                    return Err(input_error(
                        "expected a skeletal_triple file, or algebra, representation and cochain files",
                    ))
                }
            };
            format::two_term_pre_value(&triple_to_skeletal(&p, &r, &theta)?)
        }
        Mode::StrictToCrossed => {
            let path = single(files)?;
            match load(path)? {
                Document::TwoTermPreLeibniz(x) => format::crossed_module_value(&strict_to_crossed(&x)?),
                other => return Err(wrong_kind(path, "two_term_pre_leibniz", &other)),
            }
        }
        Mode::CrossedToStrict => {
            let path = single(files)?;
            match load(path)? {
                Document::CrossedModule(c) => format::two_term_pre_value(&crossed_to_strict(&c)?),
                other => return Err(wrong_kind(path, "crossed_module", &other)),
            }
        }
    };
    Ok(Outcome::ok(format::render(&value)))
}

pub fn rb_induce(two_term: &Path, operator: &Path) -> CliResult<Outcome> {
    let y = match load(two_term)? {
        Document::TwoTermLeibniz(y) => y,
        other => return Err(wrong_kind(two_term, "two_term_leibniz", &other)),
    };
    let t = match load(operator)? {
        Document::TwoTermOperator(f) => in_file(operator, || f.build(y.complex().dim_m1(), y.complex().dim_0()))?,
        other => return Err(wrong_kind(operator, "two_term_operator", &other)),
    };
    Ok(Outcome::ok(format::render(&format::two_term_pre_value(&induced_pre_from_rb(&y, &t)?))))
}
