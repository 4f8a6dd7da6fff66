//! The `qchar` command line.
//!
//! [`run`] renders everything into an [`Outcome`] instead of printing, so the
//! binary and the tests see exactly the same bytes.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::characters::{
    highest_monomial, kr_character, simple_character, standard_character, standard_character_geometric,
    standard_ordering,
};
use crate::decomp::{
    decomposition_row_with, ic_stalk_poly, multiplicity_closed, rank_tuple, MultiplicityQuery, OracleOptions,
    StalkQuery, TieBreak, DEFAULT_ORACLE_CAP,
};
use crate::error::{Error, Result};
use crate::io::{parse_drinfeld, parse_uint_list, row_to_entries, to_json};
use crate::polyring::LaurentPoly;
use crate::qstrings::{decompose, decompose_bruteforce, DrinfeldData, DEFAULT_BRUTEFORCE_CAP};
use crate::quiver::{is_sparse, orbit_dim, rigid_decomposition, stratum};
use crate::verify::{self, cap_from_env, CheckReport, SweepConfig};

#[derive(Parser, Debug)]
#[command(name = "qchar", version, about = "Exact q-characters and decomposition numbers for quantum affine sl2")]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// q-character of the KR module W(n, k)
    KrChar {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// q-character of the standard module M(pi)
    StdChar {
        #[arg(long, allow_hyphen_values = true)]
        pi: String,
        /// use the Grassmannian cell expansion
        #[arg(long)]
        geometric: bool,
    },
    /// q-character of the simple module V(pi)
    SimpleChar {
        #[arg(long, allow_hyphen_values = true)]
        pi: String,
    },
    /// standard ordering of the zeros and the highest monomial
    Ordering {
        #[arg(long, allow_hyphen_values = true)]
        pi: String,
    },
    /// decomposition of pi into q-strings in general position
    Strings {
        #[arg(long, allow_hyphen_values = true)]
        pi: String,
        /// cross-check against exhaustive search
        #[arg(long)]
        bruteforce: bool,
    },
    /// rigid representation of the equioriented quiver with dimension vector d
    Rigid {
        #[arg(long)]
        d: String,
    },
    /// [M(pi) : V(pitilde)] by the closed formula and by elimination
    Mult {
        #[arg(long, allow_hyphen_values = true)]
        pi: String,
        #[arg(long, allow_hyphen_values = true)]
        pitilde: String,
    },
    /// every simple constituent of M(pi)
    Row {
        #[arg(long, allow_hyphen_values = true)]
        pi: String,
        /// eliminate incomparable monomials in reverse order
        #[arg(long)]
        reverse: bool,
    },
    /// Poincaré polynomial of an IC stalk
    IcStalk {
        #[arg(long)]
        w: String,
        #[arg(long)]
        r: String,
        #[arg(long)]
        k: String,
    },
    /// check the T-system on a grid
    TsystemVerify {
        #[arg(long, default_value_t = 5)]
        nmax: u32,
        #[arg(long, allow_hyphen_values = true, default_value_t = -4)]
        kmin: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 4)]
        kmax: i64,
    },
    /// run every invariant sweep
    SweepVerify(SweepArgs),
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 4)]
    pub decomp_window: usize,
    #[arg(long, default_value_t = 6)]
    pub decomp_total: u64,
    #[arg(long, default_value_t = 4)]
    pub char_window: usize,
    #[arg(long, default_value_t = 8)]
    pub char_total: u64,
    #[arg(long, default_value_t = 5)]
    pub strings_n: usize,
    #[arg(long, default_value_t = 8)]
    pub strings_total: u64,
    #[arg(long, default_value_t = 4)]
    pub stalk_n: usize,
    #[arg(long, default_value_t = 3)]
    pub stalk_wmax: u64,
    #[arg(long, default_value_t = 8)]
    pub gauss_amax: u32,
}

/// Rendered result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(out) => out,
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn caps() -> Result<(u64, u64)> {
    Ok(match cap_from_env()? {
        Some(c) => (c, c),
        None => (DEFAULT_ORACLE_CAP, DEFAULT_BRUTEFORCE_CAP),
    })
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => to_json(value),
        Format::Text => text(),
    }
}

fn character_output(format: Format, pi: &DrinfeldData, ch: &LaurentPoly) -> String {
    let value = json!({ "pi": pi, "character": ch, "dimension": ch.dimension() as i64, "terms": ch.len() });
    render(format, &value, || format!("{ch}\nterms: {}\ndimension: {}\n", ch.len(), ch.dimension()))
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::KrChar { n, k } => {
            let ch = kr_character(*n, *k)?;
            let pi = DrinfeldData::from_window(*k, &vec![1; *n as usize]);
            Ok(Outcome::ok(character_output(format, &pi, &ch)))
        }
        Command::StdChar { pi, geometric } => {
            let pi = parse_drinfeld(pi)?;
            let ch = if *geometric { standard_character_geometric(&pi)? } else { standard_character(&pi)? };
            Ok(Outcome::ok(character_output(format, &pi, &ch)))
        }
        Command::SimpleChar { pi } => {
            let pi = parse_drinfeld(pi)?;
            let ch = simple_character(&pi)?;
            Ok(Outcome::ok(character_output(format, &pi, &ch)))
        }
        Command::Ordering { pi } => {
            let pi = parse_drinfeld(pi)?;
            let order = standard_ordering(&pi);
            let top = highest_monomial(&pi);
            let value = json!({ "pi": pi, "ordering": order, "highest_monomial": top });
            let text = || {
                let zeros: Vec<String> = order.iter().map(i64::to_string).collect();
                format!("ordering: {}\nhighest monomial: {top}\n", zeros.join(", "))
            };
            Ok(Outcome::ok(render(format, &value, text)))
        }
        Command::Strings { pi, bruteforce } => {
            let pi = parse_drinfeld(pi)?;
            let fast = decompose(&pi);
            let mut code = 0;
            let mut check = None;
            if *bruteforce {
                let slow = decompose_bruteforce(&pi, caps()?.1)?;
                let agree = slow == fast;
                if !agree {
                    code = 1;
                }
                check = Some((slow, agree));
            }
            let value = json!({
                "pi": pi,
                "strings": fast,
                "bruteforce": check.as_ref().map(|(s, _)| s),
                "agree": check.as_ref().map(|(_, a)| *a),
            });
            let text = || {
                let mut s = format!("{fast}\n");
                if let Some((slow, agree)) = &check {
                    s += &format!("bruteforce: {slow}\n{}\n", if *agree { "AGREE" } else { "DISAGREE" });
                }
                s
            };
            Ok(Outcome { code, stdout: render(format, &value, text), stderr: String::new() })
        }
        Command::Rigid { d } => {
            let d = parse_uint_list(d)?;
            let summands = rigid_decomposition(&d)?;
            let value = json!({ "d": d, "summands": summands });
            let text = || {
                let parts: Vec<String> = summands.iter().map(ToString::to_string).collect();
                format!("{}\n", if parts.is_empty() { "0".to_string() } else { parts.join(" + ") })
            };
            Ok(Outcome::ok(render(format, &value, text)))
        }
        Command::Mult { pi, pitilde } => mult(format, parse_drinfeld(pi)?, parse_drinfeld(pitilde)?),
        Command::Row { pi, reverse } => {
            let pi = parse_drinfeld(pi)?;
            let tie_break = if *reverse { TieBreak::ReverseLexicographic } else { TieBreak::Lexicographic };
            let row = decomposition_row_with(&pi, &OracleOptions { cap: caps()?.0, tie_break })?;
            let entries = row_to_entries(&row);
            let text = || entries.iter().map(|e| format!("{} {}\n", e.mult, e.simple)).collect();
            Ok(Outcome::ok(render(format, &entries, text)))
        }
        Command::IcStalk { w, r, k } => {
            let s = stratum(&parse_uint_list(w)?, &parse_uint_list(r)?)?;
            let q = StalkQuery::new(s, parse_uint_list(k)?)?;
            let p = ic_stalk_poly(&q)?;
            let value = json!({ "query": q, "poly": p });
            Ok(Outcome::ok(render(format, &value, || format!("{p}\n"))))
        }
        Command::TsystemVerify { nmax, kmin, kmax } => {
            if kmin > kmax {
                return Err(Error::InvalidArgument(format!("kmin {kmin} exceeds kmax {kmax}")));
            }
            let cfg = SweepConfig { tsystem_nmax: *nmax, tsystem_kmin: *kmin, tsystem_kmax: *kmax, ..Default::default() };
            Ok(reports_outcome(format, vec![verify::check_t_system(&cfg)]))
        }
        Command::SweepVerify(a) => {
            let mut cfg = SweepConfig::from_env()?;
            cfg.decomp_window = a.decomp_window;
            cfg.decomp_total = a.decomp_total;
            cfg.char_window = a.char_window;
            cfg.char_total = a.char_total;
            cfg.strings_n = a.strings_n;
            cfg.strings_total = a.strings_total;
            cfg.stalk_n = a.stalk_n;
            cfg.stalk_wmax = a.stalk_wmax;
            cfg.gauss_amax = a.gauss_amax;
            Ok(reports_outcome(format, verify::run_all(&cfg)))
        }
    }
}

#[derive(Serialize)]
struct MultReport {
    pi: DrinfeldData,
    pitilde: DrinfeldData,
    rank_tuple: Option<Vec<u64>>,
    sparse: Option<bool>,
    codim: Option<u64>,
    closed: Option<u64>,
    oracle: u64,
    verdict: &'static str,
}

fn mult(format: Format, pi: DrinfeldData, pitilde: DrinfeldData) -> Result<Outcome> {
    let q = MultiplicityQuery::new(pi.clone(), pitilde.clone());
    let closed = multiplicity_closed(&q)?;
    let row = decomposition_row_with(&pi, &OracleOptions { cap: caps()?.0, ..Default::default() })?;
    let oracle = row.get(&pitilde).copied().unwrap_or(0);
    let r = rank_tuple(&q);
    let s = q.stratum();
    let sparse = s.as_ref().map(is_sparse);
    let codim = match (&s, q.aligned()) {
        (Some(s), Some((w, _))) => {
            let top = stratum(&w, &vec![0; w.len().saturating_sub(1)])?;
            Some(orbit_dim(s)?.abs_diff(orbit_dim(&top)?))
        }
        _ => None,
    };
    let verdict = match closed {
        Some(c) if c == oracle => "AGREE",
        Some(_) => "DISAGREE",
        None => "NOT-APPLICABLE",
    };
    let rep = MultReport { pi, pitilde, rank_tuple: r, sparse, codim, closed, oracle, verdict };
    let text = || {
        let closed = rep.closed.map_or("n/a".to_string(), |c| c.to_string());
        let rank = rep.rank_tuple.as_ref().map_or("none".to_string(), |r| format!("{r:?}"));
        format!("rank tuple: {rank}\nclosed={closed}, oracle={}, {}\n", rep.oracle, rep.verdict)
    };
    let stdout = render(format, &rep, text);
    let code = i32::from(verdict == "DISAGREE");
    let stderr = if code != 0 { "closed formula and oracle disagree\n".to_string() } else { String::new() };
    Ok(Outcome { code, stdout, stderr })
}

#[derive(Serialize)]
struct ReportJson<'a> {
    name: &'a str,
    passed: bool,
    checked: u64,
    failures: &'a [String],
    notes: serde_json::Map<String, serde_json::Value>,
}

/// Timings go to stderr so that stdout stays byte-identical across runs.
fn reports_outcome(format: Format, reports: Vec<CheckReport>) -> Outcome {
    let all_pass = reports.iter().all(CheckReport::passed);
    let stdout = match format {
        Format::Json => {
            let items: Vec<ReportJson> = reports
                .iter()
                .map(|r| ReportJson {
                    name: r.name,
                    passed: r.passed(),
                    checked: r.checked,
                    failures: &r.failures,
                    notes: r.notes.iter().map(|(k, v)| (k.clone(), json!(v))).collect(),
                })
                .collect();
            to_json(&json!({ "passed": all_pass, "checks": items }))
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                s += &format!(
                    "{} {}: {} checks, {} failures",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.name,
                    r.checked,
                    r.failures.len()
                );
                for (k, v) in &r.notes {
                    s += &format!(", {k}={v}");
                }
                s.push('\n');
                for f in r.failures.iter().take(20) {
                    s += &format!("  {f}\n");
                }
            }
            s
        }
    };
    let stderr = reports.iter().map(|r| format!("{}: {:.3}s\n", r.name, r.elapsed.as_secs_f64())).collect();
    Outcome { code: i32::from(!all_pass), stdout, stderr }
}
