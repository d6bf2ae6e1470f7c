//! Each command produces a JSON value first (cached when a cache directory
//! is set) and renders every output format from that value, so a cache hit
//! and a fresh computation print the same bytes.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use tamari_core::counting::{count_row, refined_polynomial_capped, CountRow};
use tamari_core::paths::{from_parking_function, parse_labelled, to_parking_function, Labelling, ParkingFunction};
use tamari_core::poly::{Poly, Var};
use tamari_core::ring::{rat, Ring};
use tamari_core::series::{solve_functional_equation, transformed_series, SeriesJson, TSeries};
use tamari_core::tamari::{enumerate_intervals, parse_dot, TamariPoset};
use tamari_core::verify::{applies, run_check, CheckParams, CHECK_NAMES};

use crate::args::Format;
use crate::cache::Cache;
use crate::error::{CliError, CliResult};

/// What a command prints, plus an optional failure raised after printing.
pub struct Outcome {
    pub stdout: String,
    pub failure: Option<CliError>,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, failure: None }
    }
}

pub struct Ctx {
    pub cache: Option<Cache>,
    pub cap: usize,
    pub format: Option<Format>,
}

impl Ctx {
    fn format(&self, default: Format, allowed: &[Format], command: &str) -> CliResult<Format> {
        let f = self.format.unwrap_or(default);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            Err(CliError::Invalid(format!("{command} does not support --format {}", f.name())))
        }
    }

    fn cached<F>(&self, key: &str, compute: F) -> CliResult<Value>
    where
        F: FnOnce() -> CliResult<Value>,
    {
        if let Some(v) = self.cache.as_ref().and_then(|c| c.get(key)) {
            return Ok(v);
        }
        let v = compute()?;
        if let Some(c) = &self.cache {
            c.put(key, &v);
        }
        Ok(v)
    }
}

fn pretty(v: &Value) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn to_value<T: Serialize>(t: &T) -> CliResult<Value> {
    Ok(serde_json::to_value(t)?)
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value) -> CliResult<T> {
    Ok(serde_json::from_value(v)?)
}

fn poly_text(map: &BTreeMap<String, String>) -> CliResult<String> {
    let p = Poly::from_string_map(map)
        .ok_or_else(|| CliError::Failed(format!("unreadable polynomial {map:?}")))?;
    Ok(if p.is_zero() { "0".into() } else { p.to_string() })
}

pub fn lattice(ctx: &Ctx, m: u32, n: usize) -> CliResult<Outcome> {
    let format = ctx.format(Format::Dot, &[Format::Dot, Format::Json, Format::Text], "lattice")?;
    let poset = TamariPoset::build_capped(m, n, ctx.cap)?;
    let dot = poset.to_dot();
    let round_trip = parse_dot(&dot).map(|g| g.matches(&poset)).unwrap_or(false);
    if !round_trip {
        return Err(CliError::Failed("DOT export does not parse back to the same poset".into()));
    }
    let out = match format {
        Format::Dot => dot,
        Format::Json => pretty(&json!({
            "m": m,
            "n": n,
            "vertices": poset.vertices().iter().map(|p| p.word()).collect::<Vec<_>>(),
            "edges": poset.hasse_edges().map(|(i, j)| [i, j]).collect::<Vec<_>>(),
            "max_chain": poset.max_chain(),
        }))?,
        _ => {
            let mut s = format!(
                "m={m} n={n} vertices={} edges={} max_chain={}\n",
                poset.len(),
                poset.edge_count(),
                poset.max_chain()
            );
            for (i, p) in poset.vertices().iter().enumerate() {
                let succ: Vec<String> = poset.successors(i).iter().map(|j| j.to_string()).collect();
                s.push_str(&format!("{i} {} -> [{}]\n", p.word(), succ.join(",")));
            }
            s
        }
    };
    Ok(Outcome::ok(out))
}

pub fn intervals(ctx: &Ctx, m: u32, n: usize, with_q: bool, list: bool) -> CliResult<Outcome> {
    let format = ctx.format(Format::Text, &[Format::Text, Format::Json, Format::Csv], "intervals")?;
    let key = format!("intervals|m={m}|n={n}|q={with_q}|list={list}|cap={}", ctx.cap);
    let cap = ctx.cap;
    let payload = ctx.cached(&key, || {
        let mut rows = Vec::new();
        for k in 0..=n {
            rows.push(count_row(&refined_polynomial_capped(m, k, with_q, cap)?));
        }
        let mut v = json!({ "m": m, "n": n, "with_q": with_q, "rows": to_value(&rows)? });
        if list {
            let poset = TamariPoset::build_capped(m, n, cap)?;
            let items: Vec<_> = enumerate_intervals(&poset).iter().map(|i| i.to_json()).collect();
            v["intervals"] = to_value(&items)?;
        }
        Ok(v)
    })?;
    let rows: Vec<CountRow> = from_value(payload["rows"].clone())?;
    let out = match format {
        Format::Json => pretty(&payload)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if list {
                w.write_record(["lower", "upper", "contacts", "rise", "dist"])?;
                for it in payload["intervals"].as_array().into_iter().flatten() {
                    let rec: Vec<String> = ["lower", "upper", "contacts", "rise", "dist"]
                        .iter()
                        .map(|f| match &it[*f] {
                            Value::String(s) => s.clone(),
                            other => other.to_string(),
                        })
                        .collect();
                    w.write_record(&rec)?;
                }
            } else {
                w.write_record(["n", "unlabelled", "labelled", "closed_unlabelled", "closed_labelled", "poly"])?;
                for r in &rows {
                    w.write_record([
                        r.n.to_string(),
                        r.unlabelled.clone(),
                        r.labelled.clone(),
                        r.closed_unlabelled.clone(),
                        r.closed_labelled.clone(),
                        poly_text(&r.poly)?,
                    ])?;
                }
            }
            let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
            String::from_utf8(bytes).expect("csv output is utf-8")
        }
        _ => {
            let mut s = format!("m={m} with_q={with_q}\n");
            s.push_str("n\tunlabelled\tlabelled\tclosed\tpoly\n");
            for r in &rows {
                let closed = if r.agrees() { "ok".to_string() } else {
                    format!("MISMATCH {}/{}", r.closed_unlabelled, r.closed_labelled)
                };
                s.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", r.n, r.unlabelled, r.labelled, closed, poly_text(&r.poly)?));
            }
            for it in payload["intervals"].as_array().into_iter().flatten() {
                s.push_str(&format!(
                    "[{}, {}] contacts={} rise={} dist={}\n",
                    it["lower"].as_str().unwrap_or(""),
                    it["upper"].as_str().unwrap_or(""),
                    it["contacts"],
                    it["rise"],
                    it["dist"]
                ));
            }
            s
        }
    };
    let failure = rows.iter().find(|r| !r.agrees()).map(|r| {
        CliError::Failed(format!(
            "n={}: brute force {}/{} against closed forms {}/{}",
            r.n, r.unlabelled, r.labelled, r.closed_unlabelled, r.closed_labelled
        ))
    });
    Ok(Outcome { stdout: out, failure })
}

fn t_stage(ctx: &Ctx, m: u32, order: usize, with_q: bool) -> CliResult<TSeries> {
    let key = format!("series|stage=t|m={m}|N={order}|q={with_q}");
    let v = ctx.cached(&key, || to_value(&solve_functional_equation(m, order, with_q).to_json()))?;
    let json: SeriesJson = from_value(v)?;
    let polys = json
        .polys()
        .filter(|p| !p.is_empty())
        .ok_or_else(|| CliError::Failed("unreadable t-series".into()))?;
    Ok(TSeries::from_coeffs(polys))
}

pub fn series(ctx: &Ctx, m: u32, order: usize, with_q: bool, z: bool, y_one: bool) -> CliResult<Outcome> {
    let format = ctx.format(Format::Json, &[Format::Json, Format::Text], "series")?;
    let stage = if z { "z" } else { "t" };
    let key = format!("series|stage={stage}|y1={y_one}|m={m}|N={order}|q={with_q}");
    let payload = ctx.cached(&key, || {
        let f = t_stage(ctx, m, order, with_q)?;
        let json = if z {
            let g = transformed_series(&f, m, order)?;
            if y_one { g.map(|c| c.eval(Var::Y, &rat(1))) } else { g }.to_json()
        } else if y_one {
            f.eval(Var::Y, &rat(1)).to_json()
        } else {
            f.to_json()
        };
        to_value(&json)
    })?;
    let out = match format {
        Format::Json => pretty(&payload)?,
        _ => {
            let json: SeriesJson = from_value(payload)?;
            let mut s = String::new();
            let what = if json.var == "t" { "n! [t^n]" } else { "[z^n]" };
            for (n, c) in json.coeffs.iter().enumerate() {
                s.push_str(&format!("{what} n={n}: {}\n", poly_text(c)?));
            }
            s
        }
    };
    Ok(Outcome::ok(out))
}

pub fn verify(ctx: &Ctx, m: u32, n: usize, order: usize, checks: &[String], all: bool) -> CliResult<Outcome> {
    let format = ctx.format(Format::Json, &[Format::Json, Format::Text], "verify")?;
    let names: Vec<String> = if all || checks.is_empty() {
        CHECK_NAMES.iter().filter(|c| applies(c, m)).map(|c| c.to_string()).collect()
    } else {
        for c in checks {
            if !CHECK_NAMES.contains(&c.as_str()) {
                return Err(CliError::Invalid(format!(
                    "unknown check {c:?}; known checks: {}",
                    CHECK_NAMES.join(", ")
                )));
            }
            if !applies(c, m) {
                return Err(CliError::Invalid(format!("check {c} does not apply at m={m}")));
            }
        }
        checks.to_vec()
    };
    let params = CheckParams { m, n, order, cap: ctx.cap };
    let mut reports = Vec::new();
    for name in &names {
        let key = format!("verify|{name}|m={m}|n={n}|N={order}|cap={}", ctx.cap);
        reports.push(ctx.cached(&key, || to_value(&run_check(name, &params)?))?);
    }
    let passed = |r: &Value| r["status"] == "pass";
    let out = match format {
        Format::Json => pretty(&Value::Array(reports.clone()))?,
        _ => {
            let mut s = String::new();
            for r in &reports {
                let mark = if passed(r) { "PASS" } else { "FAIL" };
                s.push_str(&format!("[{mark}] {} m={} N={}", r["check"].as_str().unwrap_or("?"), r["m"], r["N"]));
                if let Some(at) = r.get("first_mismatch_order") {
                    s.push_str(&format!(" first mismatch at {at}"));
                }
                if let Some(Value::String(d)) = r.get("detail") {
                    s.push_str(&format!(" ({d})"));
                }
                s.push('\n');
            }
            s
        }
    };
    let failure = reports.iter().find(|r| !passed(r)).map(|r| {
        CliError::Failed(format!("first failing check: {}", r["check"].as_str().unwrap_or("?")))
    });
    Ok(Outcome { stdout: out, failure })
}

/// Accepts `1,2`, `(1, 2)` or `1 2`.
fn parse_parking(text: &str, m: u32) -> CliResult<ParkingFunction> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let values = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u32>()
                .map_err(|_| CliError::Invalid(format!("parking function value {s:?} is not a positive integer")))
        })
        .collect::<CliResult<Vec<u32>>>()?;
    Ok(ParkingFunction { m, values })
}

/// Subscript digits, as in `N₁EN₂E`, are read as plain digits.
fn normalize_labelled(text: &str) -> String {
    text.chars()
        .map(|c| match c {
            '₀'..='₉' => char::from_digit(c as u32 - '₀' as u32, 10).unwrap(),
            _ => c,
        })
        .collect()
}

pub fn bijection(ctx: &Ctx, m: u32, labelled: Option<&str>, parking: Option<&str>) -> CliResult<Outcome> {
    let format = ctx.format(Format::Json, &[Format::Json, Format::Text], "bijection")?;
    let (l, f): (Labelling, ParkingFunction) = match (labelled, parking) {
        (Some(text), _) => {
            let l = parse_labelled(&normalize_labelled(text), m)?;
            let f = to_parking_function(&l);
            (l, f)
        }
        (None, Some(text)) => {
            let f = parse_parking(text, m)?;
            (from_parking_function(&f)?, f)
        }
        (None, None) => return Err(CliError::Invalid("give --labelled or --parking".into())),
    };
    if to_parking_function(&l) != f || from_parking_function(&f)? != l {
        return Err(CliError::Failed("bijection round trip failed".into()));
    }
    let word = l.display_word();
    let out = match format {
        Format::Json => pretty(&json!({
            "m": m,
            "n": f.values.len(),
            "labelled": word,
            "path": l.path().word(),
            "labels": l.labels(),
            "parking": f.values,
        }))?,
        _ => {
            let vals: Vec<String> = f.values.iter().map(u32::to_string).collect();
            format!("{word} <-> ({})\n", vals.join(","))
        }
    };
    Ok(Outcome::ok(out))
}
