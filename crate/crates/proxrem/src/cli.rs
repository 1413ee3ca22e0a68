//! Command-line front end: graph metrics, constructors, search oracles,
//! proposition checks, audits, and CSV sweeps.
//!
//! Exit codes: 0 clean; 1 a sequence-certified bound or a proposition is
//! violated (a genuine counterexample or a bug); 2 I/O, parse, or usage
//! error; 3 only a stated closed form is exceeded (`closed_form_discrepancy`).

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde::Serialize;

use crate::audit::{audit, check_propositions, PropMode};
use crate::bounds::{
    bound_pi_c4free, bound_pi_trianglefree, bound_rho_c4free, bound_rho_trianglefree, RatJson,
    Rational,
};
use crate::edgelist::{format_edgelist, parse_edgelist};
use crate::extremal::{
    construct_w, construct_x, construct_y, construct_z, stated_g_w, stated_g_y, stated_g_z,
    Constructed,
};
use crate::family::{ConstraintFamily, FamilyKind};
use crate::graph::Graph;
use crate::layered::{layered_join, palindrome_graph};
use crate::polarity::{chain_graph, polarity_graph, pruned_polarity};
use crate::search::{maximize_g, SearchBudget};
use crate::seq::DistSeq;

#[derive(Parser)]
#[command(
    name = "proxrem",
    version,
    about = "Proximity and remoteness: invariants, extremal sequences, and bound audits"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Basic invariants of an edge-list graph as JSON.
    Metrics { file: PathBuf },
    /// Emit a canonical sequence (x, y, z, w) or a constructed graph
    /// (gx, palindrome, polarity, pruned, chain).
    Construct {
        kind: Kind,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        delta: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
    },
    /// Branch-and-bound search for the g-maximal sequence of a family.
    Maximize {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        delta: u64,
        /// Abort after exploring this many nodes (marks the run truncated).
        #[arg(long, value_name = "N")]
        node_budget: Option<u64>,
        /// Wall-clock limit in seconds.
        #[arg(long, value_name = "SECONDS")]
        time_budget: Option<f64>,
        /// Cap on individual entry values; a capped run is not exhaustive.
        #[arg(long, value_name = "N")]
        cap: Option<u64>,
    },
    /// Check a sequence for single-unit moves that beat it within a family.
    Localopt {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        delta: u64,
        /// Comma-separated entries, e.g. 1,3,2,1,1,2,3,2.
        #[arg(long)]
        seq: DistSeq,
    },
    /// Check the per-vertex / center-vertex structural conditions.
    Props {
        file: PathBuf,
        /// Per-vertex families only (a / c).
        #[arg(long, group = "mode")]
        vertex: bool,
        /// Center families only (b / d).
        #[arg(long, group = "mode")]
        center: bool,
        /// Both (default).
        #[arg(long, group = "mode")]
        all: bool,
    },
    /// Evaluate every applicable bound on an edge-list graph.
    Audit { file: PathBuf },
    /// Audit a parameter range of one constructed kind, as CSV.
    Sweep {
        #[arg(long)]
        kind: Kind,
        /// Order range, inclusive: `18..26` or a single value.
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        delta: Option<u64>,
        /// Field order (single value, or range for polarity / pruned).
        #[arg(long)]
        q: Option<String>,
        /// Copy / block count range.
        #[arg(long)]
        k: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    X,
    Y,
    Z,
    W,
    Gx,
    Palindrome,
    Polarity,
    Pruned,
    Chain,
}

pub fn run() -> i32 {
    match Cli::parse().cmd {
        Cmd::Metrics { file } => cmd_metrics(&file),
        Cmd::Construct { kind, n, delta, q, k } => cmd_construct(kind, n, delta, q, k),
        Cmd::Maximize {
            family,
            n,
            delta,
            node_budget,
            time_budget,
            cap,
        } => cmd_maximize(family, n, delta, node_budget, time_budget, cap),
        Cmd::Localopt {
            family,
            n,
            delta,
            seq,
        } => cmd_localopt(family, n, delta, &seq),
        Cmd::Props {
            file,
            vertex,
            center,
            all: _,
        } => cmd_props(&file, vertex, center),
        Cmd::Audit { file } => cmd_audit(&file),
        Cmd::Sweep { kind, n, delta, q, k } => cmd_sweep(kind, n, delta, q, k),
    }
}

fn fail(msg: impl Display) -> i32 {
    eprintln!("error: {msg}");
    2
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    parse_edgelist(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn print_json(value: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

#[derive(Serialize)]
struct Metrics {
    n: usize,
    m: usize,
    min_degree: usize,
    radius: u32,
    diameter: u32,
    proximity: RatJson,
    remoteness: RatJson,
    triangle_free: bool,
    c4_free: bool,
}

fn cmd_metrics(file: &Path) -> i32 {
    let g = match load_graph(file) {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    let report = (|| -> Result<Metrics, crate::graph::GraphError> {
        Ok(Metrics {
            n: g.order(),
            m: g.edge_count(),
            min_degree: g.min_degree(),
            radius: g.radius()?,
            diameter: g.diameter()?,
            proximity: g.proximity()?.into(),
            remoteness: g.remoteness()?.into(),
            triangle_free: g.is_triangle_free(),
            c4_free: g.is_c4_free(),
        })
    })();
    match report {
        Ok(m) => {
            print_json(&m);
            0
        }
        Err(e) => fail(e),
    }
}

fn need(flag: &str, v: Option<u64>, kind: Kind) -> Result<u64, String> {
    v.ok_or_else(|| format!("construct {kind:?} requires --{flag}").to_lowercase())
}

fn describe(c: &Constructed) {
    eprintln!(
        "# p = {}, n_r = {}, p adjustment = {:+}, relaxed window = {}",
        c.p, c.n_r, c.p_adjustment, c.window_relaxed
    );
}

fn cmd_construct(
    kind: Kind,
    n: Option<u64>,
    delta: Option<u64>,
    q: Option<u64>,
    k: Option<u64>,
) -> i32 {
    let result: Result<(), String> = (|| {
        match kind {
            Kind::X => {
                let seq =
                    construct_x(need("n", n, kind)?, need("delta", delta, kind)?)
                        .map_err(|e| e.to_string())?;
                println!("{seq}");
            }
            Kind::Y => {
                let c = construct_y(need("n", n, kind)?, need("delta", delta, kind)?)
                    .map_err(|e| e.to_string())?;
                describe(&c);
                println!("{}", c.seq);
            }
            Kind::Z => {
                let seq =
                    construct_z(need("n", n, kind)?, need("delta", delta, kind)?)
                        .map_err(|e| e.to_string())?;
                println!("{seq}");
            }
            Kind::W => {
                let c = construct_w(need("n", n, kind)?, need("delta", delta, kind)?)
                    .map_err(|e| e.to_string())?;
                describe(&c);
                println!("{}", c.seq);
            }
            Kind::Gx => {
                let seq =
                    construct_x(need("n", n, kind)?, need("delta", delta, kind)?)
                        .map_err(|e| e.to_string())?;
                let g = layered_join(&seq).map_err(|e| e.to_string())?;
                print!("{}", format_edgelist(&g, &[]));
            }
            Kind::Palindrome => {
                let g = palindrome_graph(need("k", k, kind)?, need("delta", delta, kind)?)
                    .map_err(|e| e.to_string())?;
                print!("{}", format_edgelist(&g, &[]));
            }
            Kind::Polarity => {
                let pol = polarity_graph(need("q", q, kind)?).map_err(|e| e.to_string())?;
                print!("{}", format_edgelist(&pol.graph, &[]));
            }
            Kind::Pruned => {
                let pr = pruned_polarity(need("q", q, kind)?).map_err(|e| e.to_string())?;
                let comments = vec![format!("u {}", pr.u), format!("v {}", pr.v)];
                print!("{}", format_edgelist(&pr.graph, &comments));
            }
            Kind::Chain => {
                let ch = chain_graph(need("k", k, kind)?, need("q", q, kind)?)
                    .map_err(|e| e.to_string())?;
                print!("{}", format_edgelist(&ch.graph, &[]));
            }
        }
        Ok(())
    })();
    match result {
        Ok(()) => 0,
        Err(e) => fail(e),
    }
}

fn cmd_maximize(
    family: FamilyKind,
    n: u64,
    delta: u64,
    node_budget: Option<u64>,
    time_budget: Option<f64>,
    cap: Option<u64>,
) -> i32 {
    let fam = match ConstraintFamily::new(family, n, delta) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let max_time = match time_budget {
        None => None,
        Some(t) if t > 0.0 && t.is_finite() => Some(Duration::from_secs_f64(t)),
        Some(t) => return fail(format!("--time-budget must be a positive number, got {t}")),
    };
    let budget = SearchBudget {
        max_nodes: node_budget,
        max_time,
        entry_cap: cap,
    };
    let result = maximize_g(&fam, &budget);
    print_json(&result);
    0
}

fn cmd_localopt(family: FamilyKind, n: u64, delta: u64, seq: &DistSeq) -> i32 {
    let fam = match ConstraintFamily::new(family, n, delta) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    match crate::search::shift_local_opt(seq, &fam) {
        Ok(report) => {
            print_json(&report);
            0
        }
        Err(e) => fail(e),
    }
}

fn cmd_props(file: &Path, vertex: bool, center: bool) -> i32 {
    let g = match load_graph(file) {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    let mode = if vertex {
        PropMode::Vertex
    } else if center {
        PropMode::Center
    } else {
        PropMode::All
    };
    match check_propositions(&g, mode) {
        Ok(report) => {
            let code = if report.pass { 0 } else { 1 };
            print_json(&report);
            code
        }
        Err(e) => fail(e),
    }
}

fn cmd_audit(file: &Path) -> i32 {
    let g = match load_graph(file) {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    let id = file
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| file.display().to_string());
    match audit(&g, &id) {
        Ok(report) => {
            let code = report.exit_code();
            print_json(&report);
            code
        }
        Err(e) => fail(e),
    }
}

/// Inclusive `a..b` range, or a single value.
fn parse_range(s: &str) -> Result<Vec<u64>, String> {
    let parse_one = |t: &str| -> Result<u64, String> {
        t.trim()
            .parse()
            .map_err(|_| format!("bad range component {t:?}"))
    };
    match s.split_once("..") {
        None => Ok(vec![parse_one(s)?]),
        Some((a, b)) => {
            let (a, b) = (parse_one(a)?, parse_one(b)?);
            if a > b {
                return Err(format!("empty range {s:?}"));
            }
            Ok((a..=b).collect())
        }
    }
}

struct Sweeper {
    has_certified_violation: bool,
    has_discrepancy: bool,
}

fn sign_of(num: i64) -> &'static str {
    match num.signum() {
        -1 => "-",
        0 => "0",
        _ => "+",
    }
}

impl Sweeper {
    fn new() -> Self {
        println!("kind,params,n,delta,invariant,bound_name,bound_num,bound_den,margin_sign");
        Sweeper {
            has_certified_violation: false,
            has_discrepancy: false,
        }
    }

    fn exit_code(&self) -> i32 {
        if self.has_certified_violation {
            1
        } else if self.has_discrepancy {
            3
        } else {
            0
        }
    }

    /// One row per applicable bound of a full graph audit.
    fn graph_rows(&mut self, kind: &str, params: &str, g: &Graph, id: &str) {
        let report = match audit(g, id) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("warning: skipping {id}: {e}");
                return;
            }
        };
        if report.certified_violation || !report.proposition_violations.is_empty() {
            self.has_certified_violation = true;
        }
        if report.closed_form_discrepancy {
            self.has_discrepancy = true;
        }
        for e in report.bounds.iter().filter(|e| e.applicable) {
            let inv = if e.name.starts_with("rho") {
                &report.remoteness
            } else {
                &report.proximity
            };
            let bound = e.bound.as_ref().expect("applicable entries carry a bound");
            let margin = e.margin.as_ref().expect("applicable entries carry a margin");
            println!(
                "{},{},{},{},{}/{},{},{},{},{}",
                kind,
                params,
                report.n,
                report.min_degree,
                inv.num,
                inv.den,
                e.name,
                bound.num,
                bound.den,
                sign_of(margin.num)
            );
        }
    }

    /// A comparison row: measured-or-derived `invariant` against `bound`.
    /// A negative margin marks a discrepancy in the stated closed form.
    fn cmp_row(
        &mut self,
        kind: &str,
        params: &str,
        n: u64,
        delta: u64,
        invariant: Rational,
        bound_name: &str,
        bound: Rational,
    ) {
        let margin = bound - invariant;
        if margin < Ratio::from_integer(0) {
            self.has_discrepancy = true;
        }
        println!(
            "{},{},{},{},{}/{},{},{},{},{}",
            kind,
            params,
            n,
            delta,
            invariant.numer(),
            invariant.denom(),
            bound_name,
            bound.numer(),
            bound.denom(),
            sign_of(*margin.numer())
        );
    }
}

fn cmd_sweep(
    kind: Kind,
    n: Option<String>,
    delta: Option<u64>,
    q: Option<String>,
    k: Option<String>,
) -> i32 {
    let run = |res: Result<Sweeper, String>| match res {
        Ok(s) => s.exit_code(),
        Err(e) => fail(e),
    };
    let range = |name: &str, v: &Option<String>| -> Result<Vec<u64>, String> {
        let s = v
            .as_ref()
            .ok_or_else(|| format!("sweep --kind {kind:?} requires --{name}").to_lowercase())?;
        parse_range(s)
    };
    let single = |name: &str, v: &Option<String>| -> Result<u64, String> {
        let r = range(name, v)?;
        if r.len() != 1 {
            return Err(format!("--{name} must be a single value for this kind"));
        }
        Ok(r[0])
    };
    let need_delta =
        || delta.ok_or_else(|| format!("sweep --kind {kind:?} requires --delta").to_lowercase());

    match kind {
        Kind::X => run((|| {
            let d = need_delta()?;
            let ns = range("n", &n)?;
            let mut s = Sweeper::new();
            for n in ns {
                match construct_x(n, d) {
                    Err(e) => eprintln!("warning: skipping n = {n}: {e}"),
                    Ok(x) => s.cmp_row(
                        "x",
                        "",
                        n,
                        d,
                        Ratio::new(x.g() as i64, n as i64 - 1),
                        "rho_triangle_free",
                        bound_rho_trianglefree(n, d),
                    ),
                }
            }
            Ok(s)
        })()),
        Kind::Y => run((|| {
            let d = need_delta()?;
            let ns = range("n", &n)?;
            let mut s = Sweeper::new();
            for n in ns {
                match construct_y(n, d) {
                    Err(e) => eprintln!("warning: skipping n = {n}: {e}"),
                    Ok(c) => {
                        let g = c.seq.g();
                        s.cmp_row(
                            "y",
                            "",
                            n,
                            d,
                            Ratio::new(g as i64, n as i64 - 1),
                            "pi_triangle_free",
                            bound_pi_trianglefree(n, d),
                        );
                        if d >= 4 {
                            s.cmp_row(
                                "y",
                                &format!("p={};n_r={}", c.p, c.n_r),
                                n,
                                d,
                                Ratio::from_integer(g as i64),
                                "stated_g_y",
                                Ratio::from_integer(stated_g_y(d, c.p, c.n_r) as i64),
                            );
                        }
                    }
                }
            }
            Ok(s)
        })()),
        Kind::Z => run((|| {
            let d = need_delta()?;
            let ns = range("n", &n)?;
            let mut s = Sweeper::new();
            for n in ns {
                match construct_z(n, d) {
                    Err(e) => eprintln!("warning: skipping n = {n}: {e}"),
                    Ok(z) => {
                        let g = z.g();
                        s.cmp_row(
                            "z",
                            "",
                            n,
                            d,
                            Ratio::new(g as i64, n as i64 - 1),
                            "rho_c4_free",
                            bound_rho_c4free(n, d),
                        );
                        s.cmp_row(
                            "z",
                            "",
                            n,
                            d,
                            Ratio::from_integer(g as i64),
                            "stated_g_z",
                            Ratio::from_integer(stated_g_z(n, d)),
                        );
                    }
                }
            }
            Ok(s)
        })()),
        Kind::W => run((|| {
            let d = need_delta()?;
            let ns = range("n", &n)?;
            let mut s = Sweeper::new();
            for n in ns {
                match construct_w(n, d) {
                    Err(e) => eprintln!("warning: skipping n = {n}: {e}"),
                    Ok(c) => {
                        let g = c.seq.g();
                        s.cmp_row(
                            "w",
                            "",
                            n,
                            d,
                            Ratio::new(g as i64, n as i64 - 1),
                            "pi_c4_free",
                            bound_pi_c4free(n, d),
                        );
                        s.cmp_row(
                            "w",
                            &format!("p={};n_r={}", c.p, c.n_r),
                            n,
                            d,
                            Ratio::from_integer(g as i64),
                            "stated_g_w",
                            Ratio::from_integer(stated_g_w(d, c.p, c.n_r)),
                        );
                    }
                }
            }
            Ok(s)
        })()),
        Kind::Gx => run((|| {
            let d = need_delta()?;
            let ns = range("n", &n)?;
            let mut s = Sweeper::new();
            for n in ns {
                match construct_x(n, d).and_then(|x| layered_join(&x)) {
                    Err(e) => eprintln!("warning: skipping n = {n}: {e}"),
                    Ok(g) => s.graph_rows("gx", "", &g, &format!("gx-n{n}-d{d}")),
                }
            }
            Ok(s)
        })()),
        Kind::Palindrome => run((|| {
            let d = need_delta()?;
            let ks = range("k", &k)?;
            let mut s = Sweeper::new();
            for k in ks {
                match palindrome_graph(k, d) {
                    Err(e) => eprintln!("warning: skipping k = {k}: {e}"),
                    Ok(g) => s.graph_rows(
                        "palindrome",
                        &format!("k={k}"),
                        &g,
                        &format!("palindrome-k{k}-d{d}"),
                    ),
                }
            }
            Ok(s)
        })()),
        Kind::Polarity => run((|| {
            let qs = range("q", &q)?;
            let mut s = Sweeper::new();
            for q in qs {
                match polarity_graph(q) {
                    Err(e) => eprintln!("warning: skipping q = {q}: {e}"),
                    Ok(pol) => {
                        s.graph_rows("polarity", &format!("q={q}"), &pol.graph, &format!("hq-{q}"))
                    }
                }
            }
            Ok(s)
        })()),
        Kind::Pruned => run((|| {
            let qs = range("q", &q)?;
            let mut s = Sweeper::new();
            for q in qs {
                match pruned_polarity(q) {
                    Err(e) => eprintln!("warning: skipping q = {q}: {e}"),
                    Ok(pr) => s.graph_rows(
                        "pruned",
                        &format!("q={q}"),
                        &pr.graph,
                        &format!("hq-prime-{q}"),
                    ),
                }
            }
            Ok(s)
        })()),
        Kind::Chain => run((|| {
            let q1 = single("q", &q)?;
            let ks = range("k", &k)?;
            let mut s = Sweeper::new();
            for k in ks {
                match chain_graph(k, q1) {
                    Err(e) => eprintln!("warning: skipping k = {k}: {e}"),
                    Ok(ch) => s.graph_rows(
                        "chain",
                        &format!("q={q1};k={k}"),
                        &ch.graph,
                        &format!("chain-q{q1}-k{k}"),
                    ),
                }
            }
            Ok(s)
        })()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_parse() {
        assert_eq!(parse_range("5").unwrap(), vec![5]);
        assert_eq!(parse_range("2..5").unwrap(), vec![2, 3, 4, 5]);
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("a..b").is_err());
        assert!(parse_range("").is_err());
    }

    #[test]
    fn signs() {
        assert_eq!(sign_of(-3), "-");
        assert_eq!(sign_of(0), "0");
        assert_eq!(sign_of(9), "+");
    }

    #[test]
    fn cli_self_check() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
