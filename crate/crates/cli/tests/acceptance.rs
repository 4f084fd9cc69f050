use std::time::{Duration, Instant};

use hae_k3::SeriesTable;
use qjac::{checks, Check};

struct Row {
    id: usize,
    title: &'static str,
    check: Check,
    elapsed: Duration,
    limit: Option<Duration>,
}

fn timed(id: usize, title: &'static str, limit: Option<u64>, f: impl FnOnce() -> Check) -> Row {
    let start = Instant::now();
    let check = f();
    Row { id, title, check, elapsed: start.elapsed(), limit: limit.map(Duration::from_secs) }
}

fn all_of(name: &str, parts: Vec<Check>) -> Check {
    let ok = parts.iter().all(|c| c.passed);
    let detail = parts.iter().map(|c| format!("{} [{}]", c.name, c.detail)).collect::<Vec<_>>().join("; ");
    Check::new(name, ok, detail)
}

fn main() {
    let mut rows = Vec::new();
    rows.push(timed(1, "generator bootstrap to q^20", Some(5), || checks::bootstrap(20)));
    rows.push(timed(2, "commutation relations on 50 random polynomials", Some(10), || {
        checks::commutators(50, qjac::suites::COMMUTATOR_SEED)
    }));
    rows.push(timed(3, "D_q G2 recognized", None, || checks::ramanujan(12, 10)));

    let start = Instant::now();
    let table = SeriesTable::build(5, 4, 5);
    let build_time = start.elapsed();
    let table = match table {
        Ok(t) => t,
        Err(e) => {
            println!("FAIL 4 K3 table regeneration: {e}");
            std::process::exit(1);
        }
    };
    let mut row = timed(4, "K3 table regeneration", Some(30), || checks::k3_table(&table));
    row.elapsed += build_time;
    rows.push(row);
    rows.push(timed(5, "leading-term identity", None, || checks::leading_terms(&table)));
    rows.push(timed(6, "residue formulas at z^8, q^8", Some(60), || checks::residues(&table, 8, 8)));
    rows.push(timed(7, "Bloch-Okounkov fits and Pixton check", None, || {
        all_of(
            "partitions",
            vec![checks::bo_fits(12, 6, 10), checks::pixton(1, 8, 5), checks::pixton(2, 8, 5)],
        )
    }));
    let mut note = String::new();
    rows.push(timed(8, "C^2 x E stationary and pi-PT closed form", None, || {
        let (pipt, n) = checks::c2e_pipt(6, 6);
        note = n;
        all_of("c2e", vec![checks::c2e_pt(1, 6, 5), checks::c2e_pt(2, 6, 5), checks::c2e_pt(3, 6, 5), pipt])
    }));
    rows.push(timed(9, "P^2 x E anomaly system", None, checks::p2e_system));
    rows.push(timed(10, "correspondence unit vectors", None, checks::correspondence_units));
    rows.push(timed(11, "normalization products to q^20", None, || checks::normalization(20)));
    rows.push(timed(12, "KKV base series", None, || checks::kkv_base(&table)));

    let mut failed = 0;
    for r in &rows {
        let in_time = r.limit.is_none_or(|l| r.elapsed <= l);
        let ok = r.check.passed && in_time;
        if !ok {
            failed += 1;
        }
        let limit = r.limit.map(|l| format!(" (limit {} s)", l.as_secs())).unwrap_or_default();
        println!(
            "{} {:>2} {}: {} [{:.2} s{limit}]",
            if ok { "PASS" } else { "FAIL" },
            r.id,
            r.title,
            r.check.detail,
            r.elapsed.as_secs_f64()
        );
    }
    println!("note {note}");
    println!("{} of {} criteria pass", rows.len() - failed, rows.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
