//! Subcommand implementations. Each returns a report holding the text and
//! JSON renderings, or a [`CliError`] carrying the exit code.

use std::fmt::Write as _;
use std::path::Path;

use monopole_core::cohomotopy::{invariant_group_kd, stable_stem, InvariantTarget};
use monopole_core::james::{james_oracle, JamesQuery};
use monopole_core::ktheory::{
    furuta_bound, furuta_solve, minimal_b_plus, refined_furuta_bound, FurutaDerivation,
    KTheoryError,
};
use monopole_core::manifolds::{
    classify, DescriptorFile, EngineError, FormatError, FourManifold, Library, ManifoldError,
    ManifoldRecord, MonopoleClassDescriptor, Verdict, VerdictKind,
};
use monopole_core::AbelianGroupDesc;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::expr::{parse_pin, parse_t};

pub const EXIT_INCONSISTENT: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn inconsistent(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INCONSISTENT,
            message: message.into(),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        Self::usage(e.to_string())
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Manifold(ManifoldError::NoDesignatedSphere(_))
            | EngineError::MinusTwoArity(_) => Self::usage(e.to_string()),
            e => Self::inconsistent(e.to_string()),
        }
    }
}

/// A computed result. `code` is nonzero when the result itself certifies an
/// inconsistency in the input.
#[derive(Debug)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            code: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingChoice {
    Pin,
    T,
}

pub fn ring(
    choice: RingChoice,
    input: &str,
    restrict: bool,
    eval_j: bool,
) -> Result<Report, CliError> {
    let parse_error = |e: crate::expr::ParseError| CliError::usage(format!("parse error at {e}"));
    match choice {
        RingChoice::T => {
            if restrict || eval_j {
                return Err(CliError::usage(
                    "--restrict-to-t and --eval-j apply to R(Pin(2)) elements (use --pin)",
                ));
            }
            let x = parse_t(input).map_err(parse_error)?;
            let text = x.to_string();
            Ok(Report::ok(
                text.clone(),
                json!({"ring": "T", "input": input, "normal_form": text}),
            ))
        }
        RingChoice::Pin => {
            if restrict && eval_j {
                return Err(CliError::usage(
                    "--restrict-to-t and --eval-j are exclusive",
                ));
            }
            let x = parse_pin(input).map_err(parse_error)?;
            let normal = x.to_string();
            let mut json = json!({"ring": "Pin(2)", "input": input, "normal_form": normal});
            let text = if restrict {
                let r = x.restrict_to_torus().to_string();
                json["restricted_to_t"] = json!(r);
                r
            } else if eval_j {
                let v = x.eval_at_j().to_string();
                json["value_at_j"] = json!(v);
                v
            } else {
                normal
            };
            Ok(Report::ok(text, json))
        }
    }
}

fn ktheory_error(e: KTheoryError) -> CliError {
    match e {
        KTheoryError::NotSpin(_) | KTheoryError::WrongSign(_) => {
            CliError::inconsistent(e.to_string())
        }
        e => CliError::usage(e.to_string()),
    }
}

fn derivation_json(d: &FurutaDerivation) -> Value {
    json!({
        "b_plus": d.b_plus,
        "quaternionic_dim": d.quaternionic_dim,
        "lhs_doubled": d.lhs_doubled.to_string(),
        "quaternion_euler": d.quaternion_euler.to_string(),
        "rhs_unit": d.rhs_unit.to_string(),
        "solution": d.solution.as_ref().map(ToString::to_string),
    })
}

pub fn furuta(sign: i64, b_plus: Option<u32>) -> Result<Report, CliError> {
    let basic = furuta_bound(sign).map_err(ktheory_error)?;
    let refined = refined_furuta_bound(sign).map_err(ktheory_error)?;
    let b_plus = match b_plus {
        Some(b) => b,
        None => minimal_b_plus(sign).map_err(ktheory_error)?,
    };
    let d = furuta_solve(sign, b_plus).map_err(ktheory_error)?;

    let mut text = String::new();
    writeln!(text, "b2 ≥ {basic} (10/8 bound); refined: b2 ≥ {refined}").unwrap();
    writeln!(
        text,
        "character equation at b+ = {}, dH = {}:",
        d.b_plus, d.quaternionic_dim
    )
    .unwrap();
    writeln!(text, "  (1 - λ)^{} = {}", d.b_plus + 1, d.lhs_doubled).unwrap();
    writeln!(
        text,
        "  (2 - h)^{} = {}",
        d.quaternionic_dim, d.quaternion_euler
    )
    .unwrap();
    writeln!(
        text,
        "  (2 - h)^{} (1 - λ) = {}",
        d.quaternionic_dim, d.rhs_unit
    )
    .unwrap();
    match &d.solution {
        Some(a) => write!(
            text,
            "  ½({}) = a · ({})  ⇒  a = {a}",
            d.lhs_doubled, d.rhs_unit
        )
        .unwrap(),
        None => write!(
            text,
            "  ½({}) = a · ({})  ⇒  NoSolution: no spin manifold with sign = {sign} and b+ = {}",
            d.lhs_doubled, d.rhs_unit, d.b_plus
        )
        .unwrap(),
    }
    let json = json!({
        "sign": sign,
        "basic_bound": basic,
        "refined_bound": refined,
        "derivation": derivation_json(&d),
    });
    let code = if d.is_solvable() {
        0
    } else {
        EXIT_INCONSISTENT
    };
    Ok(Report { text, json, code })
}

fn group_report(g: &AbelianGroupDesc, k: i64, d: u32) -> Report {
    let flag = if g.is_complete() { " (complete)" } else { "" };
    let text = format!("{g}{flag}\nk = {k}, d = {d}: Z ⊕ A(k,d) for even k ≥ 0, A(k,d) for odd k");
    let json = json!({
        "k": k,
        "d": d,
        "group": g.to_string(),
        "description": g,
    });
    Report::ok(text, json)
}

pub fn group(b_plus: Option<u32>, k: Option<u32>, d: u32) -> Result<Report, CliError> {
    let k = match (b_plus, k) {
        (Some(b), None) => InvariantTarget::new(b, d).k(),
        (None, Some(k)) => k as i64,
        _ => return Err(CliError::usage("give exactly one of --b-plus and --k")),
    };
    Ok(group_report(&invariant_group_kd(k, d), k, d))
}

pub fn james(m: u32, n: usize) -> Result<Report, CliError> {
    let q = JamesQuery::new(m, n).map_err(|e| CliError::usage(e.to_string()))?;
    let series = q.series();
    let bound = q.lower_bound();
    let oracle = james_oracle(m, n).map_err(|e| CliError::usage(e.to_string()))?;
    let agrees = oracle == bound;
    let text = format!(
        "U ≥ {bound}\n(z/log(1+z))^{m} = {series}\noracle: {}",
        if agrees {
            "agrees".to_string()
        } else {
            format!("DISAGREES ({oracle})")
        }
    );
    let json = json!({
        "m": m,
        "n": n,
        "lower_bound": bound.to_string(),
        "series": series.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "oracle_agrees": agrees,
    });
    Ok(Report {
        text,
        json,
        code: if agrees { 0 } else { EXIT_INCONSISTENT },
    })
}

pub fn stem(n: i64) -> Result<Report, CliError> {
    let g = stable_stem(n).map_err(|e| CliError::usage(e.to_string()))?;
    Ok(Report::ok(
        g.to_string(),
        json!({"n": n, "group": g.to_string(), "description": g}),
    ))
}

fn load(path: &Path, library: &Library) -> Result<DescriptorFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let file = DescriptorFile::parse(&text)?;
    file.check_names(library)?;
    Ok(file)
}

fn selected<'a>(file: &'a DescriptorFile, expr: Option<&'a str>) -> Result<Vec<&'a str>, CliError> {
    match expr {
        Some(name) => {
            file.expression(name)?;
            Ok(vec![name])
        }
        None if file.expressions.is_empty() => Err(CliError::usage("file declares no expressions")),
        None => Ok(file.expressions.iter().map(|e| e.name.as_str()).collect()),
    }
}

fn digest(d: &MonopoleClassDescriptor) -> String {
    let canonical = serde_json::to_string(d).expect("descriptors serialize");
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

fn verdict_json(name: &str, v: &Verdict, d: &MonopoleClassDescriptor) -> Value {
    let mut out = json!({
        "expr": name,
        "verdict": v.kind,
        "rule": v.rule.id(),
        "citation": v.rule.citation(),
        "inputs_digest": digest(d),
    });
    if let Some(note) = &v.note {
        out["note"] = json!(note);
    }
    out
}

pub fn classify_cmd(
    path: &Path,
    expr: Option<&str>,
    library: &Library,
) -> Result<Report, CliError> {
    let file = load(path, library)?;
    let names = selected(&file, expr)?;
    let mut lines = Vec::new();
    let mut records = Vec::new();
    let mut code = 0;
    for name in &names {
        let d = file.build(file.expression(name)?, library)?;
        let v = classify(&d)?;
        if v.kind == VerdictKind::Inconsistent {
            code = EXIT_INCONSISTENT;
        }
        lines.push(if expr.is_some() {
            v.to_string()
        } else {
            format!("{name}: {v}")
        });
        records.push(verdict_json(name, &v, &d));
    }
    let json = if expr.is_some() {
        records.pop().expect("one expression")
    } else {
        Value::Array(records)
    };
    Ok(Report {
        text: lines.join("\n"),
        json,
        code,
    })
}

fn describe(m: &FourManifold) -> String {
    let mut text = format!(
        "{}: b1 = {}, b+ = {}, b- = {}, sign = {}, e = {}",
        m.name,
        m.b1,
        m.b_plus,
        m.b_minus,
        m.sign(),
        m.euler_characteristic()
    );
    let flags: Vec<String> = m.flags.iter().map(|f| format!("{f:?}")).collect();
    write!(
        text,
        "\nflags: {}",
        if flags.is_empty() {
            "none".into()
        } else {
            flags.join(", ")
        }
    )
    .unwrap();
    let c1: Vec<String> = m
        .spinc_list
        .iter()
        .map(|s| s.c1_squared.to_string())
        .collect();
    write!(
        text,
        "\nc1^2 of paired spin^c structures: {}",
        if c1.is_empty() {
            "none".into()
        } else {
            c1.join(", ")
        }
    )
    .unwrap();
    text
}

pub fn sum(path: &Path, expr: Option<&str>, library: &Library) -> Result<Report, CliError> {
    let file = load(path, library)?;
    let names = selected(&file, expr)?;
    let mut texts = Vec::new();
    let mut records = Vec::new();
    for name in &names {
        let d = file.build(file.expression(name)?, library)?;
        let total = d.total()?.manifold;
        total
            .validate()
            .map_err(|e| CliError::inconsistent(format!("{name}: {e}")))?;
        texts.push(describe(&total));
        records.push(ManifoldRecord {
            manifold: total,
            status: Default::default(),
        });
    }
    let json = if expr.is_some() {
        serde_json::to_value(&records[0]).expect("records serialize")
    } else {
        serde_json::to_value(&records).expect("records serialize")
    };
    Ok(Report::ok(texts.join("\n\n"), json))
}
