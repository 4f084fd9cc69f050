//! Subcommand implementations writing to any `Write`.

use std::fmt;
use std::io::Write;

use hae_k3::{residue_eval, Family, SeriesTable};
use num_rational::BigRational;
use num_traits::Zero;
use qjac_ring::{
    derived_derivative, evaluate, fit_with_margin, generator_expansion, parse_mero, Derivation, MeroQJac, SeriesName,
};
use serde::Deserialize;
use serde_json::json;
use series_core::{arith::parse_rational, to_jet, FourierSeries};

use crate::{suites, Cli, Command, Config};

/// `Usage` covers malformed user input (exit 2); everything else exits 1.
#[derive(Debug)]
pub enum CmdError {
    Usage(String),
    Failed(String),
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Usage(_) => 2,
            CmdError::Failed(_) => 1,
        }
    }
}

impl fmt::Display for CmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmdError::Usage(m) | CmdError::Failed(m) => write!(f, "{m}"),
        }
    }
}

fn usage(e: impl fmt::Display) -> CmdError {
    CmdError::Usage(e.to_string())
}

fn failed(e: impl fmt::Display) -> CmdError {
    CmdError::Failed(e.to_string())
}

fn io(e: std::io::Error) -> CmdError {
    failed(e)
}

pub fn dispatch(cli: &Cli, out: &mut impl Write) -> Result<i32, CmdError> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Gen { name } => gen(name, cfg, out),
        Command::Fit { input } => {
            let text = std::fs::read_to_string(input).map_err(|e| usage(format!("{}: {e}", input.display())))?;
            fit(&text, cfg, out)
        }
        Command::Derive { name, expr } => derive(name, expr, cfg, out),
        Command::Solve { family, max_k, l } => solve(parse_family(family)?, *max_k, *l, cfg, out),
        Command::Residue { family, k, l } => residue(parse_family(family)?, *k, *l, cfg, out),
        Command::Verify { suite } => verify(suite, cfg, out),
    }
}

pub fn parse_family(s: &str) -> Result<Family, CmdError> {
    match s {
        "A" => Ok(Family::A),
        "B" => Ok(Family::B),
        "C" => Ok(Family::C),
        _ => Err(usage(format!("unknown family {s}"))),
    }
}

/// Expansion of a named series or of a ring expression.
pub fn expand(name: &str, qorder: i64) -> Result<FourierSeries, CmdError> {
    match SeriesName::parse(name) {
        Some(s) => generator_expansion(s, qorder).map_err(usage),
        None => Ok(evaluate(&parse_mero(name).map_err(usage)?, qorder)),
    }
}

fn write_series(s: &FourierSeries, cfg: &Config, out: &mut impl Write) -> Result<(), CmdError> {
    let lo = s.qshift();
    if cfg.json {
        let coeffs: Vec<String> = (lo..=s.trunc()).map(|n| s.coeff(n).to_string()).collect();
        let v = json!({"qshift": lo, "trunc": s.trunc(), "coeffs": coeffs});
        writeln!(out, "{v}").map_err(io)
    } else {
        for n in lo..=s.trunc() {
            writeln!(out, "q^{n}: {}", s.coeff(n)).map_err(io)?;
        }
        Ok(())
    }
}

pub fn gen(name: &str, cfg: &Config, out: &mut impl Write) -> Result<i32, CmdError> {
    let s = expand(name, cfg.qorder)?;
    write_series(&s, cfg, out)?;
    Ok(0)
}

#[derive(Deserialize)]
struct FitInput {
    weight: i64,
    #[serde(default)]
    index: Option<serde_json::Value>,
    #[serde(default)]
    theta_pow: u32,
    #[serde(default)]
    delta_pow: u32,
    /// Serialized series, as written by `to_json`.
    #[serde(default)]
    series: Option<FourierSeries>,
    /// Alternatively an expression, expanded to `--qorder`.
    #[serde(default)]
    expr: Option<String>,
}

fn parse_index(v: &Option<serde_json::Value>) -> Result<BigRational, CmdError> {
    match v {
        None => Ok(BigRational::from_integer(0.into())),
        Some(serde_json::Value::Number(n)) => {
            let n = n.as_i64().ok_or_else(|| usage("index must be an integer or a fraction string"))?;
            Ok(BigRational::from_integer(n.into()))
        }
        Some(serde_json::Value::String(s)) => parse_rational(s).map_err(usage),
        Some(_) => Err(usage("index must be an integer or a fraction string")),
    }
}

/// Input: `{"weight", "index"?, "theta_pow"?, "delta_pow"?, "series" | "expr"}`.
pub fn fit(text: &str, cfg: &Config, out: &mut impl Write) -> Result<i32, CmdError> {
    let input: FitInput = serde_json::from_str(text).map_err(usage)?;
    let index = parse_index(&input.index)?;
    let target = match (input.series, input.expr) {
        (Some(s), _) => s,
        (None, Some(e)) => evaluate(&parse_mero(&e).map_err(usage)?, cfg.qorder),
        (None, None) => return Err(usage("fit input needs \"series\" or \"expr\"")),
    };
    let f = fit_with_margin(&target, input.weight, &index, input.theta_pow, input.delta_pow, cfg.margin).map_err(failed)?;
    if cfg.json {
        writeln!(out, "{}", json!({"result": f.to_string(), "mero": f})).map_err(io)?;
    } else {
        writeln!(out, "{f}").map_err(io)?;
    }
    Ok(0)
}

pub fn derive(name: &str, expr: &str, cfg: &Config, out: &mut impl Write) -> Result<i32, CmdError> {
    let f = parse_mero(expr).map_err(usage)?;
    let r = match name {
        "Dp" => derived_derivative(&f, Derivation::Dp).map_err(failed)?,
        "Dtau" => derived_derivative(&f, Derivation::Dtau).map_err(failed)?,
        "dA" => f.d_a(),
        "dG2" => f.d_g2(),
        _ => return Err(usage(format!("unknown derivation {name}; expected Dp, Dtau, dA or dG2"))),
    };
    if cfg.json {
        writeln!(out, "{}", json!({"result": r.to_string(), "mero": r})).map_err(io)?;
    } else {
        writeln!(out, "{r}").map_err(io)?;
    }
    Ok(0)
}

fn entries(family: Family, max_k: i64, l: Option<i64>) -> Vec<(i64, i64)> {
    match (family, l) {
        (Family::C, Some(l)) => (0..=max_k).map(|k| (k, l)).collect(),
        (Family::C, None) => (0..=max_k).flat_map(|s| (0..=s).map(move |k| (k, s - k))).collect(),
        _ => (0..=max_k).map(|k| (k, 0)).collect(),
    }
}

pub fn solve(family: Family, max_k: i64, l: Option<i64>, cfg: &Config, out: &mut impl Write) -> Result<i32, CmdError> {
    if max_k < 0 || l.is_some_and(|l| l < 0) {
        return Err(usage("indices must be nonnegative"));
    }
    let list = entries(family, max_k, l);
    let nc = list.iter().map(|(k, l)| k + l).max().unwrap_or(0);
    let (na, nb, nc) = match family {
        Family::A => (max_k, -1, -1),
        Family::B => (0, max_k, -1),
        Family::C => (0, -1, nc),
    };
    let t = SeriesTable::build(na, nb, nc).map_err(failed)?;
    let name = crate::checks::family_name(family);
    let mut rows = Vec::new();
    for (k, l) in list {
        let p = t.get(family, k, l).map_err(failed)?;
        let label = if family == Family::C { format!("{name}_{k},{l}") } else { format!("{name}_{k}") };
        rows.push((label, p));
    }
    if cfg.json {
        let v: serde_json::Map<String, serde_json::Value> =
            rows.iter().map(|(n, p)| (n.clone(), json!(p.to_string()))).collect();
        writeln!(out, "{}", serde_json::Value::Object(v)).map_err(io)?;
    } else {
        for (n, p) in rows {
            writeln!(out, "{n} = {p}").map_err(io)?;
        }
    }
    Ok(0)
}

pub fn residue(family: Family, k: i64, l: i64, cfg: &Config, out: &mut impl Write) -> Result<i32, CmdError> {
    let jet = residue_eval(family, k, l, cfg.zorder, cfg.qorder).map_err(failed)?;
    let (na, nb, nc) = match family {
        Family::A => (k, -1, -1),
        Family::B => (0, k, -1),
        Family::C => (0, -1, k + l),
    };
    let t = SeriesTable::build(na, nb, nc).map_err(failed)?;
    let p = t.get(family, k, l).map_err(failed)?;
    let want = to_jet(&evaluate(&MeroQJac::poly(p), cfg.qorder), cfg.zorder).map_err(failed)?;
    let lo = jet.lowpow()[0].min(want.lowpow()[0]);
    let matches = (lo..=cfg.zorder).all(|e| jet.coeff(&[e]) == want.coeff(&[e]));
    if cfg.json {
        let coeffs: serde_json::Map<String, serde_json::Value> = (lo..=cfg.zorder)
            .map(|e| {
                let c = jet.coeff(&[e]);
                let v: Vec<String> = (c.qshift()..=c.trunc()).map(|n| c.coeff(n).to_string()).collect();
                (e.to_string(), json!({"qshift": c.qshift(), "coeffs": v}))
            })
            .collect();
        writeln!(out, "{}", json!({"coefficients": coeffs, "matches_table": matches})).map_err(io)?;
    } else {
        for e in lo..=cfg.zorder {
            let c = jet.coeff(&[e]);
            let terms: Vec<String> =
                (c.qshift()..=c.trunc()).filter(|n| !c.coeff(*n).is_zero()).map(|n| format!("({})q^{n}", c.coeff(n))).collect();
            let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            writeln!(out, "z^{e}: {body}").map_err(io)?;
        }
        writeln!(out, "matches table expansion: {matches}").map_err(io)?;
    }
    Ok(if matches { 0 } else { 1 })
}

pub fn verify(names: &[String], cfg: &Config, out: &mut impl Write) -> Result<i32, CmdError> {
    let r = suites::run_all(names, cfg);
    let ok = r.checks.iter().all(|c| c.passed);
    if cfg.json {
        writeln!(out, "{}", json!({"passed": ok, "checks": r.checks, "notes": r.notes})).map_err(io)?;
    } else {
        for c in &r.checks {
            writeln!(out, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail).map_err(io)?;
        }
        for n in &r.notes {
            writeln!(out, "note {n}").map_err(io)?;
        }
    }
    Ok(if ok { 0 } else { 1 })
}
