//! Acceptance gate: one PASS/FAIL line per criterion, exact arithmetic
//! throughout, wall-clock bounds checked alongside correctness.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qchar::verify::{
    check_decomposition, check_gaussian_binomials, check_ic_stalks, check_standard_characters,
    check_strings_and_rigid, check_t_system, CheckReport, SweepConfig,
};

struct Line {
    id: u8,
    title: &'static str,
    ok: bool,
    detail: String,
    elapsed: Duration,
    bound: Duration,
}

impl Line {
    fn passed(&self) -> bool {
        self.ok && self.elapsed < self.bound
    }
}

fn from_report(id: u8, title: &'static str, bound_secs: u64, rep: CheckReport) -> Line {
    let mut detail = format!("{} checks, {} failures", rep.checked, rep.failures.len());
    for (k, v) in &rep.notes {
        detail += &format!(", {k}={v}");
    }
    for f in rep.failures.iter().take(10) {
        detail += &format!("\n    {f}");
    }
    Line { id, title, ok: rep.passed(), detail, elapsed: rep.elapsed, bound: Duration::from_secs(bound_secs) }
}

fn worked_example() -> Line {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_qchar"))
        .args(["mult", "--pi", "0:1,1:3", "--pitilde", "1:2"])
        .env_remove("QCHAR_SWEEP_CAP")
        .output()
        .expect("spawn qchar");
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
    let ok = out.status.success() && stdout.contains("closed=1, oracle=1, AGREE");
    Line {
        id: 1,
        title: "mult --pi 0:1,1:3 --pitilde 1:2",
        ok,
        detail: stdout.lines().last().unwrap_or("").to_string(),
        elapsed,
        bound: Duration::from_secs(1),
    }
}

fn main() -> ExitCode {
    let cfg = SweepConfig::default();
    let t_system = check_t_system(&cfg);
    let t_count_ok = t_system.checked == 45;
    let mut t_line = from_report(2, "T-system, 1 <= n <= 5, -4 <= k <= 4", 1, t_system);
    t_line.ok &= t_count_ok;

    // criterion 8 rides along with the sweep of criterion 3
    let decomp = check_decomposition(&cfg);
    let mut robust = from_report(8, "oracle robustness (tie-break, head, dimension)", 60, decomp.clone());
    robust.detail = "checked inside the closed-vs-oracle sweep".into();

    let lines = vec![
        worked_example(),
        t_line,
        from_report(3, "closed formula vs elimination oracle, window <= 4, deg <= 6", 60, decomp),
        from_report(4, "standard vs geometric character, window <= 4, deg <= 8", 30, check_standard_characters(&cfg)),
        from_report(5, "strings vs rigid representations, n <= 5, |d| <= 8", 60, check_strings_and_rigid(&cfg)),
        from_report(6, "IC stalks on sparse strata, n <= 4, w_i <= 3", 30, check_ic_stalks(&cfg)),
        from_report(7, "Gaussian binomials, a <= 8", 1, check_gaussian_binomials(&cfg)),
        robust,
    ];

    let mut all = true;
    for l in &lines {
        all &= l.passed();
        println!(
            "{} criterion {}: {} [{:.3}s < {}s] {}",
            if l.passed() { "PASS" } else { "FAIL" },
            l.id,
            l.title,
            l.elapsed.as_secs_f64(),
            l.bound.as_secs(),
            l.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
