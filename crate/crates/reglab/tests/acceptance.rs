//! Acceptance run at p = 7, N = 20, T = 64 with the default instance counts.
//!
//! Prints one PASS/FAIL line per criterion and fails if any is red.

use std::io::Write;
use std::time::Instant;

use reglab::suites::{self, Check, Sizes, SuiteReport};
use reglab_core::PadicConfig;

const SEED: u64 = 20;

struct Criterion {
    title: &'static str,
    checks: Vec<Check>,
    min_instances: usize,
    budget: f64,
    min_terms: Option<usize>,
}

impl Criterion {
    fn new(title: &'static str, report: &SuiteReport, pick: impl Fn(&str) -> bool, min_instances: usize, budget: f64) -> Self {
        let checks = report.checks.iter().filter(|c| pick(&c.name)).cloned().collect();
        Criterion { title, checks, min_instances, budget, min_terms: None }
    }

    fn terms(mut self, n: usize) -> Self {
        self.min_terms = Some(n);
        self
    }

    fn seconds(&self) -> f64 {
        self.checks.iter().map(|c| c.seconds).sum()
    }

    fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.checks.is_empty() {
            out.push("no checks ran".into());
        }
        for c in &self.checks {
            if !c.ok() {
                out.push(format!("{}: {}/{} passed {:?}", c.name, c.passed, c.instances, c.failures));
            }
            if c.instances < self.min_instances {
                out.push(format!("{}: only {} instances", c.name, c.instances));
            }
            if let Some(n) = self.min_terms.filter(|_| c.name != "aux-shift-invariance") {
                match c.min_nonzero_terms {
                    Some(m) if m >= n => {}
                    m => out.push(format!("{}: nonzero local terms {:?} < {}", c.name, m, n)),
                }
            }
        }
        if self.seconds() >= self.budget {
            out.push(format!("runtime {:.2}s over budget {:.0}s", self.seconds(), self.budget));
        }
        out
    }

    fn line(&self) -> String {
        let p = self.problems();
        let worst = match self.checks.iter().map(|c| c.worst).min() {
            Some(w) if w < i64::MAX => w.to_string(),
            _ => "-".into(),
        };
        let threshold = self.checks.iter().map(|c| c.threshold).max().unwrap_or(0);
        let n: usize = self.checks.iter().map(|c| c.instances).sum();
        let mut s = format!(
            "{} {:<34} checks={:<2} instances={:<5} worst_val={:<3} need>={:<3} time={:.2}s/{:.0}s",
            if p.is_empty() { "PASS" } else { "FAIL" },
            self.title,
            self.checks.len(),
            n,
            worst,
            threshold,
            self.seconds(),
            self.budget
        );
        if let Some(m) = self.checks.iter().filter_map(|c| c.min_nonzero_terms).min() {
            s += &format!(" min_nonzero_terms={}", m);
        }
        for q in p {
            s += &format!("\n     {}", q);
        }
        s
    }
}

#[test]
fn acceptance() {
    let cfg = PadicConfig::new(7, 20).unwrap().with_truncation(64);
    let sizes = Sizes::default();
    let start = Instant::now();
    let run = |s: &str| suites::run(s, &cfg, SEED, &sizes).expect("known suite");
    let index = run("index");
    let polylog = run("polylog");
    let global = run("global");
    let regulator = run("regulator");

    let axioms = ["trilinearity", "symmetry", "triple-identity", "double-index-reduction", "ifdg-independence", "change-of-constant-gdh", "change-of-constant-fdh"];
    let identities = ["lmod-inversion", "lmod-reflection", "lmod-multiplication", "lmod-five-term", "ltwo-inversion"];
    let criteria = [
        Criterion::new("triple-index axioms", &index, |n| axioms.contains(&n), sizes.axioms, 10.0),
        Criterion::new("simple-pole formula", &index, |n| n == "simple-pole-formula", sizes.simple_pole, 10.0),
        Criterion::new("polylog identities (both branches)", &polylog, |n| identities.iter().any(|i| n.starts_with(i)), sizes.polylog_points, 30.0),
        Criterion::new("global reciprocity", &global, |n| n == "reciprocity" || n == "constant-third-argument", sizes.reciprocity, 60.0),
        Criterion::new("cyclic three-sum", &global, |n| n == "cyclic-sum", sizes.cyclic, 60.0),
        Criterion::new("constant-term identities", &polylog, |n| n.ends_with("constant-terms") || n.ends_with("parameter-independence"), sizes.constant_terms, 30.0),
        Criterion::new("regulator cross-engine", &regulator, |n| n.starts_with("closed-") || n.starts_with("tilde-") || n == "aux-shift-invariance", sizes.regulator, 120.0)
            .terms(10),
        Criterion::new("condition checkers", &regulator, |n| n == "checkers", sizes.regulator, 10.0),
    ];

    let mut text = format!("\nacceptance p=7 N=20 T=64 seed={}\n", SEED);
    for c in &criteria {
        text += &c.line();
        text.push('\n');
    }
    text += &format!("total {:.2}s\n", start.elapsed().as_secs_f64());
    std::io::stderr().write_all(text.as_bytes()).unwrap();

    let red: Vec<&str> = criteria.iter().filter(|c| !c.problems().is_empty()).map(|c| c.title).collect();
    assert!(red.is_empty(), "failing criteria: {:?}", red);
}
