//! Named groups of checks run by `qjac verify`.

use hae_k3::SeriesTable;

use crate::{checks, Check, Config};

pub const NAMES: [&str; 7] = ["ring", "k3", "residue", "p2e", "partitions", "c2e", "normalization"];

/// Seed of the random polynomials in the commutator check.
pub const COMMUTATOR_SEED: u64 = 20;
pub const COMMUTATOR_COUNT: usize = 100;

/// Results of one suite plus informational lines that do not affect the
/// outcome.
#[derive(Debug, Default)]
pub struct SuiteResult {
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

fn k3_table() -> Result<SeriesTable, Check> {
    SeriesTable::build(5, 4, 5).map_err(|e| Check::failed("k3.build", e))
}

pub fn run_suite(name: &str, cfg: &Config) -> SuiteResult {
    let mut r = SuiteResult::default();
    match name {
        "ring" => {
            r.checks.push(checks::bootstrap(cfg.qorder));
            r.checks.push(checks::commutators(COMMUTATOR_COUNT, COMMUTATOR_SEED));
            r.checks.push(checks::ramanujan(cfg.qorder, cfg.margin));
        }
        "k3" => match k3_table() {
            Ok(t) => {
                r.checks.push(checks::k3_table(&t));
                r.checks.push(checks::leading_terms(&t));
                r.checks.push(checks::kkv_base(&t));
            }
            Err(c) => r.checks.push(c),
        },
        "residue" => match k3_table() {
            Ok(t) => r.checks.push(checks::residues(&t, cfg.zorder, cfg.qorder)),
            Err(c) => r.checks.push(c),
        },
        "p2e" => {
            r.checks.push(checks::p2e_system());
            r.checks.push(checks::correspondence_units());
        }
        "partitions" => {
            r.checks.push(checks::bo_fits(cfg.qorder, 6, cfg.margin));
            for n in 1..=2 {
                r.checks.push(checks::pixton(n, 8, cfg.xorder));
            }
        }
        "c2e" => {
            for n in 1..=3 {
                r.checks.push(checks::c2e_pt(n, 6, cfg.xorder));
            }
            let (c, note) = checks::c2e_pipt(6, cfg.xorder + 1);
            r.checks.push(c);
            r.notes.push(note);
        }
        "normalization" => r.checks.push(checks::normalization(20)),
        other => r.checks.push(Check::new(other, false, "unknown suite")),
    }
    r
}

/// Runs the named suites, or all of them when `names` is empty.
pub fn run_all(names: &[String], cfg: &Config) -> SuiteResult {
    let selected: Vec<&str> = if names.is_empty() { NAMES.to_vec() } else { names.iter().map(String::as_str).collect() };
    let mut out = SuiteResult::default();
    for n in selected {
        let r = run_suite(n, cfg);
        out.checks.extend(r.checks);
        out.notes.extend(r.notes);
    }
    out.checks.sort_by(|a, b| a.name.cmp(&b.name));
    out
}
