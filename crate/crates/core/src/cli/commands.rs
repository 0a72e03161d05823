use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::document::{int_value, matrix_value, render, CertificateDocument, MatrixDocument};
use super::{
    MatrixInput, OutputFormat, SweepArgs, CSV_HEADER, EXIT_BAD_INPUT, EXIT_DISAGREEMENT,
    EXIT_INVALID_CERTIFICATE, EXIT_NOT_HOMOLOGY_HOPF, EXIT_OK,
};
use crate::abelian::FgAbelianGroup;
use crate::enumeration::{self, summarize, SweepMode, SweepRecord, SweepSpec};
use crate::error::Error;
use crate::hopf::{
    calibrated_zeta_variant, compose_two_fiber, is_homology_hopf, normalize_to_sl3,
    pi1_single_gluing, pi1_two_log_transforms, reduce_to_normal_form, reduce_to_standard,
    GluingMatrix, LogTransformParams, CONVENTION,
};
use crate::linalg::{IntMatrix, UnimodularMatrix};

pub(super) struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn fail(&mut self, code: i32, msg: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.stderr, "hopf: {msg}");
        code
    }

    fn emit(&mut self, text: &str) -> i32 {
        match self.stdout.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => self.fail(EXIT_BAD_INPUT, format!("cannot write output: {e}")),
        }
    }

    fn read_source(&mut self, file: Option<&Path>) -> Result<String, String> {
        let mut text = String::new();
        match file {
            Some(p) if p != Path::new("-") => {
                text = std::fs::read_to_string(p)
                    .map_err(|e| format!("cannot read {}: {e}", p.display()))?;
            }
            _ => {
                self.stdin
                    .read_to_string(&mut text)
                    .map_err(|e| format!("cannot read stdin: {e}"))?;
            }
        }
        Ok(text)
    }
}

/// Comma-separated integers, e.g. `"1,0,-1"`.
pub fn parse_int_list(s: &str, expected: usize) -> Result<Vec<BigInt>, String> {
    let values = s
        .split(',')
        .map(|t| BigInt::from_str(t.trim()).map_err(|_| format!("{t:?} is not an integer")))
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != expected {
        return Err(format!(
            "expected {expected} comma-separated integers, got {}",
            values.len()
        ));
    }
    Ok(values)
}

fn parse_nine(s: &str) -> Result<IntMatrix, String> {
    let v = parse_int_list(s, 9)?;
    IntMatrix::new(3, 3, v).map_err(|e| e.to_string())
}

fn load_matrix(io: &mut Io<'_>, input: &MatrixInput) -> Result<GluingMatrix, String> {
    if let Some(inline) = &input.matrix {
        let m = parse_nine(inline)?;
        return GluingMatrix::new(m).map_err(|e| e.to_string());
    }
    let text = io.read_source(input.file.as_deref())?;
    MatrixDocument::parse(&text)
        .map(|d| d.matrix)
        .map_err(|e| e.to_string())
}

fn group_value(g: &FgAbelianGroup) -> Value {
    json!({
        "invariant_factors": g.invariant_factors().iter().map(int_value).collect::<Vec<_>>(),
        "rank": g.rank(),
    })
}

/// Classification fields shared by `classify` and `compose`.
fn classification_fields(m: &GluingMatrix) -> serde_json::Map<String, Value> {
    let v = json!({
        "det": m.det(),
        "g": int_value(m.g()),
        "gcd": int_value(&m.meridian_gcd()),
        "group": group_value(&pi1_single_gluing(m)),
        "h": int_value(m.h()),
        "homology_hopf": is_homology_hopf(m),
        "matrix": matrix_value(m.matrix()),
    });
    match v {
        Value::Object(map) => map,
        _ => unreachable!(),
    }
}

/// The `classify` report for a gluing matrix.
pub fn classify_report(m: &GluingMatrix) -> Value {
    let mut map = classification_fields(m);
    map.insert("convention".into(), json!(CONVENTION));
    map.insert(
        "zeta_variant".into(),
        json!(calibrated_zeta_variant().name()),
    );
    Value::Object(map)
}

pub(super) fn classify(io: &mut Io<'_>, input: &MatrixInput) -> i32 {
    match load_matrix(io, input) {
        Ok(m) => io.emit(&render(&classify_report(&m))),
        Err(e) => io.fail(EXIT_BAD_INPUT, e),
    }
}

fn log_transform(
    side: &str,
    triple: Option<&str>,
    completion: Option<&str>,
) -> Result<LogTransformParams, String> {
    let triple = triple
        .map(|t| parse_int_list(t, 3).map_err(|e| format!("--{side}: {e}")))
        .transpose()?;
    match completion {
        Some(text) => {
            let m = parse_nine(text).map_err(|e| format!("--{side}-completion: {e}"))?;
            let m = UnimodularMatrix::new(m).map_err(|e| format!("--{side}-completion: {e}"))?;
            let params = LogTransformParams::with_completion(m)
                .map_err(|e| format!("--{side}-completion: {e}"))?;
            if let Some(t) = triple {
                if params.triple().to_vec() != t {
                    return Err(format!(
                        "--{side}-completion third column does not match --{side}"
                    ));
                }
            }
            Ok(params)
        }
        None => {
            let t = triple.ok_or_else(|| format!("--{side} is required"))?;
            let [a, b, p]: [BigInt; 3] = t.try_into().expect("three entries");
            LogTransformParams::new(a, b, p).map_err(|e| format!("--{side}: {e}"))
        }
    }
}

fn side_value(p: &LogTransformParams) -> Value {
    json!({
        "completion": matrix_value(p.completion().matrix()),
        "multiplicity": int_value(&p.multiplicity()),
        "triple": p.triple().iter().map(int_value).collect::<Vec<_>>(),
    })
}

pub(super) fn compose(
    io: &mut Io<'_>,
    plus: Option<&str>,
    minus: Option<&str>,
    plus_completion: Option<&str>,
    minus_completion: Option<&str>,
) -> i32 {
    let sides = log_transform("plus", plus, plus_completion)
        .and_then(|p| log_transform("minus", minus, minus_completion).map(|m| (p, m)));
    let (plus, minus) = match sides {
        Ok(s) => s,
        Err(e) => return io.fail(EXIT_BAD_INPUT, e),
    };
    let composed = compose_two_fiber(&plus, &minus);
    let direct = match pi1_two_log_transforms(&plus.triple(), &minus.triple()) {
        Ok(g) => g,
        Err(e) => return io.fail(EXIT_BAD_INPUT, e),
    };
    let agreement = pi1_single_gluing(&composed) == direct;
    let mut map = classification_fields(&composed);
    map.insert("agreement".into(), json!(agreement));
    map.insert("convention".into(), json!(CONVENTION));
    map.insert("direct_group".into(), group_value(&direct));
    map.insert("minus".into(), side_value(&minus));
    map.insert("plus".into(), side_value(&plus));
    map.insert(
        "zeta_variant".into(),
        json!(calibrated_zeta_variant().name()),
    );
    let code = io.emit(&render(&Value::Object(map)));
    if !agreement {
        return io.fail(
            EXIT_DISAGREEMENT,
            "composed gluing and direct presentation give different groups (convention bug)",
        );
    }
    code
}

pub(super) fn reduce(io: &mut Io<'_>, input: &MatrixInput, standard: bool) -> i32 {
    let original = match load_matrix(io, input) {
        Ok(m) => m,
        Err(e) => return io.fail(EXIT_BAD_INPUT, e),
    };
    let m = normalize_to_sl3(&original);
    let result = if standard {
        reduce_to_standard(&m)
    } else {
        reduce_to_normal_form(&m).map(|(_, c)| c)
    };
    match result {
        Ok(certificate) => {
            let doc = CertificateDocument {
                certificate,
                zeta_variant: calibrated_zeta_variant(),
                orientation_normalized: original.det() < 0,
            };
            io.emit(&render(&doc.to_value()))
        }
        Err(e @ Error::NotHomologyHopf { .. }) => io.fail(EXIT_NOT_HOMOLOGY_HOPF, e),
        Err(e) => io.fail(EXIT_BAD_INPUT, e),
    }
}

pub(super) fn verify(io: &mut Io<'_>, file: Option<&Path>) -> i32 {
    let doc = match io
        .read_source(file)
        .and_then(|t| CertificateDocument::parse(&t).map_err(|e| e.to_string()))
    {
        Ok(d) => d,
        Err(e) => return io.fail(EXIT_BAD_INPUT, e),
    };
    match doc.certificate.check() {
        Ok(()) => io.emit("VALID\n"),
        Err(fault) => {
            io.emit(&format!("INVALID: {fault}\n"));
            EXIT_INVALID_CERTIFICATE
        }
    }
}

fn parse_range(s: &str, flag: &str) -> Result<std::ops::RangeInclusive<i64>, String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("{flag}: expected LO:HI, got {s:?}"))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("{flag}: bad bound {lo:?}"))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("{flag}: bad bound {hi:?}"))?;
    Ok(lo..=hi)
}

fn parse_direction(s: &str, flag: &str) -> Result<(i64, i64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [a, b] = parts.as_slice() else {
        return Err(format!("{flag}: expected A,B, got {s:?}"));
    };
    let a = a
        .trim()
        .parse()
        .map_err(|_| format!("{flag}: bad entry {a:?}"))?;
    let b = b
        .trim()
        .parse()
        .map_err(|_| format!("{flag}: bad entry {b:?}"))?;
    Ok((a, b))
}

fn sweep_spec(args: &SweepArgs) -> Result<SweepSpec, String> {
    let grid_flags = [
        &args.p_range,
        &args.q_range,
        &args.direction_plus,
        &args.direction_minus,
    ];
    let mode = match args.random {
        Some(n) => {
            if grid_flags.iter().any(|f| f.is_some()) {
                return Err("--random cannot be combined with grid flags".into());
            }
            SweepMode::Matrices {
                sample_count: n,
                seed: args.seed,
                word_length: args.word_length,
            }
        }
        None => {
            let need = |v: &Option<String>, flag: &str| {
                v.clone()
                    .ok_or_else(|| format!("{flag} is required for a grid sweep (or use --random)"))
            };
            let (a, b) = parse_direction(
                &need(&args.direction_plus, "--direction-plus")?,
                "--direction-plus",
            )?;
            let (c, d) = parse_direction(
                &need(&args.direction_minus, "--direction-minus")?,
                "--direction-minus",
            )?;
            let p = parse_range(&need(&args.p_range, "--p-range")?, "--p-range")?;
            let q = parse_range(&need(&args.q_range, "--q-range")?, "--q-range")?;
            SweepMode::Tuples {
                ranges: [a..=a, b..=b, p, c..=c, d..=d, q],
            }
        }
    };
    let spec = SweepSpec {
        mode,
        homology_hopf_only: args.homology_hopf_only,
        parallel: args.parallel,
    };
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

fn join_factors(g: &FgAbelianGroup) -> String {
    g.invariant_factors()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("|")
}

pub(crate) fn render_csv(records: &[SweepRecord]) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        for x in &r.params {
            let _ = write!(out, "{x},");
        }
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.mu,
            r.homology_hopf,
            r.group.rank(),
            join_factors(&r.group)
        );
    }
    out
}

fn record_value(r: &SweepRecord) -> Value {
    let mut v = json!({
        "group": group_value(&r.group),
        "homology_hopf": r.homology_hopf,
        "invariant_factors": r.group.invariant_factors().iter().map(int_value).collect::<Vec<_>>(),
        "mu": int_value(&r.mu),
        "rank": r.group.rank(),
    });
    for (name, x) in ["a", "b", "p", "c", "d", "q"].iter().zip(&r.params) {
        v[*name] = int_value(x);
    }
    if let Some(m) = &r.matrix {
        v["matrix"] = matrix_value(m);
    }
    v
}

pub(super) fn sweep(io: &mut Io<'_>, args: &SweepArgs) -> i32 {
    let spec = match sweep_spec(args) {
        Ok(s) => s,
        Err(e) => return io.fail(EXIT_BAD_INPUT, e),
    };
    let out = match enumeration::sweep(&spec) {
        Ok(o) => o,
        Err(e) => return io.fail(EXIT_BAD_INPUT, e),
    };
    match args.format {
        OutputFormat::Csv => io.emit(&render_csv(&out.records)),
        OutputFormat::Json => {
            let summary = summarize(&out.records);
            let histogram: Vec<Value> = summary
                .by_mu
                .iter()
                .map(|(mu, n)| json!({"count": n, "mu": int_value(mu)}))
                .collect();
            let doc = json!({
                "convention": CONVENTION,
                "records": out.records.iter().map(record_value).collect::<Vec<_>>(),
                "summary": {
                    "filtered": out.filtered,
                    "homology_hopf": summary.homology_hopf,
                    "mu_histogram": histogram,
                    "skipped": out.skipped,
                    "total": summary.total,
                },
                "zeta_variant": calibrated_zeta_variant().name(),
            });
            io.emit(&render(&doc))
        }
    }
}
