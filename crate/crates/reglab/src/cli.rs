//! Command line front end. Every command prints one JSON document.

use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use reglab_core::index::{triple_index, triple_index_simple_pole};
use reglab_core::p1geom::global::{global_triple_index, GlobalAux, ThirdSlot};
use reglab_core::p1geom::{Point, WideOpen, Q};
use reglab_core::polylog::{li2, lmod2, ltwo, Arg, ColemanValue};
use reglab_core::regulator::{check_ccond_numeric, check_ocond, check_special_units, check_tilde, regmap, Formula, PointStatus, RegulatorReport, SymbolElement};
use reglab_core::{Error, Padic, PadicConfig};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::json;
use crate::suites::{self, Sizes};

#[derive(Parser, Debug)]
#[command(name = "reglab", version, about = "p-adic triple indices, dilogarithms and regulators on the projective line")]
pub struct Cli {
    /// Odd prime p.
    #[arg(long, global = true, env = "REGLAB_PRIME", default_value_t = 7)]
    pub prime: u32,
    /// Target absolute precision N.
    #[arg(long, global = true, env = "REGLAB_PRECISION", default_value_t = 20)]
    pub precision: i64,
    /// Value of log p, as a rational or a p-adic literal.
    #[arg(long = "log-branch", global = true, env = "REGLAB_LOG_BRANCH", default_value = "0")]
    pub log_branch: String,
    /// Largest series window used in expansions.
    #[arg(long, global = true, env = "REGLAB_TRUNCATION", default_value_t = 64)]
    pub truncation: i64,
    /// Seed for the randomized suites.
    #[arg(long, global = true, env = "REGLAB_SEED", default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Li₂(z).
    Li2 { z: String },
    /// L₂^mod(z) = Li₂(z) + ½ log z log(1 - z).
    Lmod2 { z: String },
    /// L₂(z) = Li₂(z) + log z log(1 - z).
    Ltwo { z: String },
    /// Local triple index of a triple-data document.
    TripleIndex { data: String },
    /// Global triple index of logs of rational functions.
    GlobalIndex { input: String },
    /// Closedness and boundary checks of a symbol element.
    CheckElement {
        element: String,
        /// Conditions whose failure gives exit status 5.
        #[arg(long, value_enum)]
        require: Vec<Condition>,
    },
    /// One regulator formula on an element and an exact form.
    Regulator {
        #[arg(long, env = "REGLAB_FORMULA")]
        formula: String,
        element: String,
        omega: String,
    },
    /// Randomized self-test suites.
    Selftest {
        #[arg(long, env = "REGLAB_SUITE")]
        suite: Option<String>,
        /// Use small instance counts.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Condition {
    Ocond,
    Tilde,
    Ccond,
    SpecialUnits,
}

/// Tracks the smallest precision among the values written.
struct Out {
    cap: i64,
    achieved: i64,
    /// Set when the result is complete but a requested condition failed.
    failed: Option<String>,
}

impl Out {
    fn p(&mut self, x: &Padic) -> Value {
        self.achieved = self.achieved.min(x.precision().min(self.cap));
        json::padic_out(x, self.cap)
    }

    fn coleman(&mut self, v: &ColemanValue) -> Value {
        json!({"value": self.p(&v.value), "route": v.route.name()})
    }
}

fn config(cli: &Cli) -> Result<PadicConfig, CliError> {
    let base = PadicConfig::new(cli.prime, cli.precision).map_err(|e| CliError::Parse(e.to_string()))?;
    let branch = parse_branch(&cli.log_branch, &base)?;
    base.with_branch(branch).map(|c| c.with_truncation(cli.truncation)).map_err(|e| CliError::Parse(e.to_string()))
}

/// A rational, or a p-adic literal read as the rational of its digits.
fn parse_branch(s: &str, cfg: &PadicConfig) -> Result<Q, CliError> {
    if s.trim_start().starts_with('{') {
        return Ok(json::padic_str(s, cfg)?.to_rational());
    }
    json::parse_rational(s)
}

fn config_echo(cli: &Cli, cfg: &PadicConfig) -> Value {
    json!({
        "prime": cfg.prime,
        "precision": cfg.precision,
        "log_branch": cfg.log_branch.to_string(),
        "truncation": cfg.truncation,
        "seed": cli.seed,
    })
}

/// Reads a JSON document given inline or as a file path (`-` for standard input).
fn document(arg: &str) -> Result<Value, CliError> {
    let t = arg.trim_start();
    let text = if t.starts_with('{') || t.starts_with('[') {
        arg.to_string()
    } else if arg == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Io(e.to_string()))?
    } else {
        std::fs::read_to_string(Path::new(arg)).map_err(|e| CliError::Io(format!("{}: {}", arg, e)))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))
}

fn arg_of(s: &str, cfg: &PadicConfig) -> Result<Arg, CliError> {
    if s.trim() == "inf" {
        return Ok(Arg::Infinity);
    }
    Ok(Arg::Finite(json::padic_str(s, cfg)?))
}

fn points(v: Option<&Value>) -> Result<Vec<Point>, CliError> {
    match v {
        None => Ok(Vec::new()),
        Some(a) => a.as_array().ok_or_else(|| CliError::Parse("points must be an array".into()))?.iter().map(json::point).collect(),
    }
}

/// An element document: a bare term list or `{"element": […], "points": […]}`.
fn element_doc(v: &Value) -> Result<(SymbolElement, Vec<Point>), CliError> {
    if v.is_array() {
        return Ok((json::element(v)?, Vec::new()));
    }
    let e = v.get("element").ok_or_else(|| CliError::Parse("missing field \"element\"".into()))?;
    Ok((json::element(e)?, points(v.get("points"))?))
}

fn hints(a: &SymbolElement, extra: &[Point]) -> Vec<Q> {
    let mut h = a.finite_points();
    h.extend(extra.iter().filter_map(|y| match y {
        Point::Finite(q) => Some(q.clone()),
        Point::Infinity => None,
    }));
    h
}

fn wide_open_for(a: &SymbolElement, extra: &[Point], p: u32) -> Result<WideOpen, CliError> {
    let mut pts: Vec<Point> = extra.to_vec();
    for t in &a.terms {
        pts.extend(t.g.support());
        pts.extend(t.f.support());
    }
    Ok(WideOpen::new(p, pts)?)
}

fn report_json(rep: &RegulatorReport, out: &mut Out) -> Value {
    let terms: Vec<Value> = rep
        .terms
        .iter()
        .map(|t| {
            let locals: Vec<Value> = t
                .locals
                .iter()
                .map(|l| {
                    json!({
                        "kind": format!("{:?}", l.kind).to_lowercase(),
                        "point": json::point_out(&l.point),
                        "label": l.label,
                        "value": out.p(&l.value),
                    })
                })
                .collect();
            json!({"index": t.index, "value": out.p(&t.value), "locals": locals})
        })
        .collect();
    json!({"formula": rep.formula.name(), "total": out.p(&rep.total), "terms": terms})
}

fn execute(cli: &Cli, cfg: &PadicConfig, out: &mut Out) -> Result<Value, CliError> {
    match &cli.command {
        Command::Li2 { z } => Ok(out.coleman(&li2(&arg_of(z, cfg)?, cfg)?)),
        Command::Lmod2 { z } => Ok(out.coleman(&lmod2(&arg_of(z, cfg)?, cfg)?)),
        Command::Ltwo { z } => Ok(out.coleman(&ltwo(&arg_of(z, cfg)?, cfg)?)),
        Command::TripleIndex { data } => {
            let d = json::triple_data(&document(data)?, cfg)?;
            let v = triple_index(&d)?;
            let simple = match triple_index_simple_pole(&d.f, &d.g, &d.h, &d.i_fdh, &d.i_gdh) {
                Ok(s) => out.p(&s),
                Err(Error::NotSimplePole) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            Ok(json!({"value": out.p(&v), "simple_pole_formula": simple, "data": json::triple_data_out(&d, cfg.precision)}))
        }
        Command::GlobalIndex { input } => {
            let s = document(input)?;
            let field = |k: &str| s.get(k).ok_or_else(|| CliError::Parse(format!("missing field \"{}\"", k)));
            let f = json::factored(field("f")?)?;
            let g = json::factored(field("g")?)?;
            let h = json::factored(field("h")?)?;
            let mut pts = points(s.get("points"))?;
            for x in [&f, &g, &h] {
                pts.extend(x.support());
            }
            let u = WideOpen::new(cfg.prime, pts)?;
            let third = ThirdSlot::log(&h, cfg)?;
            let mut aux = GlobalAux::canonical(&f, &g, &third, cfg)?;
            if let Some(sh) = s.get("shift") {
                let sh = sh.as_array().filter(|a| a.len() == 2).ok_or_else(|| CliError::Parse("shift is [c_gdh, c_fdh]".into()))?;
                aux = aux.shifted(&json::padic(&sh[0], cfg)?, &json::padic(&sh[1], cfg)?);
            }
            let gi = global_triple_index(&f, &g, &third, &aux, &u, cfg)?;
            let ends: Vec<Value> = gi.per_end.iter().map(|(y, v)| json!({"end": json::point_out(y), "value": out.p(v)})).collect();
            Ok(json!({"total": out.p(&gi.total), "ends": ends, "nonzero_local_terms": gi.nonzero_terms(cfg.precision)}))
        }
        Command::CheckElement { element, require } => {
            let (a, extra) = element_doc(&document(element)?)?;
            let h = hints(&a, &extra);
            let ocond = check_ocond(&a, &h)?;
            let tilde = check_tilde(&a, &h)?;
            let u = wide_open_for(&a, &extra, cfg.prime)?;
            let units = check_special_units(&a, &u);
            let checks = check_ccond_numeric(&a, cfg);
            let ccond = checks.iter().all(|c| c.status == PointStatus::Passed);
            let per_point: Vec<Value> = checks
                .iter()
                .map(|c| {
                    json!({
                        "point": json::point_out(&c.point),
                        "lmod_sum": c.lmod_sum.as_ref().map(|x| out.p(x)),
                        "wedge_zero": c.wedge_zero,
                        "status": format!("{:?}", c.status).to_lowercase(),
                    })
                })
                .collect();
            let report = json!({
                "ocond": ocond,
                "tilde": tilde,
                "special_units": units,
                "ccond_necessary_conditions": if ccond { "passed" } else { "failed" },
                "points": per_point,
            });
            let failed: Vec<String> = require
                .iter()
                .filter(|c| match c {
                    Condition::Ocond => !ocond,
                    Condition::Tilde => !tilde,
                    Condition::Ccond => !ccond,
                    Condition::SpecialUnits => !units,
                })
                .map(|c| c.to_possible_value().map_or_else(|| "?".to_string(), |v| v.get_name().to_string()))
                .collect();
            if !failed.is_empty() {
                out.failed = Some(format!("required conditions failed: {}", failed.join(", ")));
            }
            Ok(report)
        }
        Command::Regulator { formula, element, omega } => {
            let f = Formula::parse(formula).map_err(|e| CliError::Parse(e.to_string()))?;
            let (a, extra) = element_doc(&document(element)?)?;
            let om = json::omega(&document(omega)?)?;
            let mut pts = extra;
            pts.extend(om.poles());
            let u = wide_open_for(&a, &pts, cfg.prime)?;
            let rep = regmap(f, &a, &om, &u, cfg)?;
            let nz = rep.nonzero_local_terms(cfg.precision);
            let mut v = report_json(&rep, out);
            v["nonzero_local_terms"] = json!(nz);
            v["ends"] = Value::Array(u.ends().iter().map(json::point_out).collect());
            Ok(v)
        }
        Command::Selftest { suite, quick } => {
            let sizes = if *quick { Sizes::quick() } else { Sizes::default() };
            let names: Vec<&str> = match suite {
                None => suites::SUITES.to_vec(),
                Some(s) => vec![s.as_str()],
            };
            let mut reports = Vec::new();
            let mut ok = true;
            for s in names {
                let rep = suites::run(s, cfg, cli.seed, &sizes).ok_or_else(|| CliError::Parse(format!("unknown suite {}", s)))?;
                ok &= rep.ok();
                reports.push(rep.to_json());
            }
            let v = json!({"status": if ok { "pass" } else { "fail" }, "suites": reports});
            if !ok {
                out.failed = Some("some self-test checks failed".into());
            }
            Ok(v)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Li2 { .. } => "li2",
        Command::Lmod2 { .. } => "lmod2",
        Command::Ltwo { .. } => "ltwo",
        Command::TripleIndex { .. } => "triple-index",
        Command::GlobalIndex { .. } => "global-index",
        Command::CheckElement { .. } => "check-element",
        Command::Regulator { .. } => "regulator",
        Command::Selftest { .. } => "selftest",
    }
}

fn error_json(e: &CliError) -> Value {
    json!({"error": {"code": e.code(), "exit": e.exit_code(), "message": e.to_string()}})
}

/// Parses `args` (program name first) and runs the command.
///
/// Returns the exit status and the text to print on standard output.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (0, e.to_string());
            }
            return (2, pretty(&error_json(&CliError::Parse(e.to_string()))));
        }
    };
    let cfg = match config(&cli) {
        Ok(c) => c,
        Err(e) => return (e.exit_code(), pretty(&error_json(&e))),
    };
    let mut out = Out { cap: cfg.precision, achieved: cfg.precision, failed: None };
    let mut doc = json!({"command": command_name(&cli.command), "config": config_echo(&cli, &cfg)});
    match execute(&cli, &cfg, &mut out) {
        Ok(v) => {
            doc["result"] = v;
            doc["achieved_precision"] = json!(out.achieved);
            match out.failed {
                None => (0, pretty(&doc)),
                Some(m) => {
                    let e = CliError::ConditionFailed(m);
                    doc["error"] = error_json(&e)["error"].clone();
                    (e.exit_code(), pretty(&doc))
                }
            }
        }
        Err(e) => {
            doc["error"] = error_json(&e)["error"].clone();
            (e.exit_code(), pretty(&doc))
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}
