use std::fmt::Write;

use milnorhp_core::checks::ScanSummary;
use milnorhp_core::concavity::SeqReport;
use serde::Serialize;

use crate::args::{Cli, Command, Format};
use crate::commands::{CiSeriesReport, ClassifyReport, CurveOutput, FixtureResult, LemmaOutput};

pub trait Render: Serialize {
    fn text(&self, cli: &Cli) -> String;

    /// Header plus rows; text output is reused when there is no table shape.
    fn csv(&self, cli: &Cli) -> String {
        self.text(cli)
    }

    fn render(&self, format: Format, cli: &Cli) -> String {
        match format {
            Format::Text => self.text(cli),
            Format::Csv => self.csv(cli),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn seq_line(r: &SeqReport) -> String {
    format!(
        "log-concave {}, strictly {}, unimodal {}, internal zeros {}",
        yes(r.log_concave),
        yes(r.strictly_log_concave),
        yes(r.unimodal),
        yes(r.internal_zeros)
    )
}

impl Render for CiSeriesReport {
    fn text(&self, _: &Cli) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "(a, b, d) = ({}, {}, {})  subcase {}",
            self.a, self.b, self.d, self.subcase
        );
        let _ = writeln!(s, "T = {}  tau = {}  ct = {}", self.top_degree, self.tau, self.ct);
        let _ = writeln!(s, "HP(N)      = {}", self.hp_n);
        let _ = writeln!(s, "HP(smooth) = {}", self.smooth);
        let _ = writeln!(s, "difference = {}", self.difference);
        if !self.q_half.is_empty() {
            let q: Vec<String> = self.q_half.iter().map(i64::to_string).collect();
            let _ = writeln!(s, "q half     = [{}]", q.join(", "));
        }
        let _ = writeln!(s, "HP(N): {}", seq_line(&self.conjecture));
        let _ = writeln!(s, "difference: {}", seq_line(&self.question));
        for v in &self.violations {
            let _ = writeln!(s, "  {v}");
        }
        for e in &self.errata {
            let _ = writeln!(
                s,
                "erratum: {:?} at k = {}: printed {}, expected {}",
                e.formula, e.k, e.printed, e.expected
            );
        }
        s
    }
}

impl Render for ClassifyReport {
    fn text(&self, _: &Cli) -> String {
        let mut s = format!("({}, {}, {}) -> {}\n", self.a, self.b, self.d, self.subcase);
        if self.matches.len() > 1 {
            let _ = writeln!(s, "conditions also hold for: {}", self.matches.join(", "));
        }
        s
    }

    fn csv(&self, _: &Cli) -> String {
        format!("a,b,d,subcase\n{},{},{},{}\n", self.a, self.b, self.d, self.subcase)
    }
}

fn want_rows(cli: &Cli) -> bool {
    matches!(&cli.command, Command::Scan(a) if a.rows)
}

impl Render for ScanSummary {
    fn text(&self, _: &Cli) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "scanned {} triples with d <= {} (checks: {})",
            self.triples_tested,
            self.d_max,
            self.checks.join(", ")
        );
        for (label, n) in &self.subcase_histogram {
            let _ = writeln!(s, "  {label:<12} {n}");
        }
        let _ = writeln!(s, "violations: {}", self.violations.len());
        for v in self.violations.iter().take(50) {
            let _ = writeln!(s, "  [{}] {}: {}", v.check, v.cfg, v.detail);
        }
        let _ = writeln!(s, "errata: {}", self.errata.len());
        for e in self.errata.iter().take(50) {
            let _ = writeln!(
                s,
                "  {} {:?} k = {}: printed {}, expected {}",
                e.cfg, e.formula, e.k, e.printed, e.expected
            );
        }
        let _ = writeln!(s, "notes: {}", self.notes.len());
        for n in self.notes.iter().take(20) {
            let _ = writeln!(s, "  [{}] {}: {}", n.check, n.cfg, n.detail);
        }
        s
    }

    fn csv(&self, _: &Cli) -> String {
        let mut s = String::from("a,b,d,subcase,lc,strict,unimodal,internal_zeros,first_violation\n");
        for r in &self.rows {
            let first = r.report.first_lc_violation.map(|k| k.to_string()).unwrap_or_default();
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{},{},{}",
                r.cfg.a,
                r.cfg.b,
                r.cfg.d,
                r.subcase.label(),
                r.report.log_concave,
                r.report.strictly_log_concave,
                r.report.unimodal,
                r.report.internal_zeros,
                first
            );
        }
        s
    }

    fn render(&self, format: Format, cli: &Cli) -> String {
        match format {
            Format::Text => self.text(cli),
            Format::Csv => self.csv(cli),
            Format::Json => {
                let mut s = if want_rows(cli) {
                    serde_json::to_string_pretty(self)
                } else {
                    let mut slim = self.clone();
                    slim.rows.clear();
                    serde_json::to_string_pretty(&slim)
                }
                .expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

impl Render for CurveOutput {
    fn text(&self, _: &Cli) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "f = {}  (degree {}, variables {})",
            self.poly,
            self.degree,
            self.vars.join(",")
        );
        let _ = writeln!(s, "HP(M) through t^{}: {}", self.k_max, self.hp_m_trunc);
        let _ = writeln!(s, "HP(N) = {}", self.hp_n);
        let _ = writeln!(s, "tau = {}  ct = {}  smooth {}", self.tau, self.ct, yes(self.smooth));
        let _ = writeln!(
            s,
            "saturation ({}, {}): {} generators",
            self.saturation_strategy, self.saturation_certificate, self.sat_gens_count
        );
        for g in &self.sat_gens {
            let _ = writeln!(s, "  {g}");
        }
        match (self.ci_detect, &self.subcase) {
            (Some((a, b)), Some(sc)) => {
                let _ = writeln!(
                    s,
                    "complete intersection of type ({a}, {b}), subcase {sc}, certified {}",
                    yes(self.certified_ci)
                );
            }
            _ => {
                let _ = writeln!(s, "not detected as a complete intersection");
            }
        }
        let _ = writeln!(s, "HP(N): {}", seq_line(&self.seq_report));
        for v in &self.violations {
            let _ = writeln!(s, "  {v}");
        }
        s
    }
}

impl Render for Vec<LemmaOutput> {
    fn text(&self, _: &Cli) -> String {
        let mut s = String::new();
        for r in self {
            let status = if r.violations.is_empty() { "ok" } else { "FAILED" };
            let _ = writeln!(
                s,
                "lemma {} ({}): {} cases, {} checked, {} violations: {status}",
                r.lemma,
                r.scope,
                r.cases,
                r.checked,
                r.violations.len()
            );
            for v in r.violations.iter().take(20) {
                let _ = writeln!(s, "  {v}");
            }
        }
        s
    }

    fn csv(&self, _: &Cli) -> String {
        let mut s = String::from("lemma,cases,checked,violations\n");
        for r in self {
            let _ = writeln!(s, "{},{},{},{}", r.lemma, r.cases, r.checked, r.violations.len());
        }
        s
    }
}

impl Render for Vec<FixtureResult> {
    fn text(&self, _: &Cli) -> String {
        let mut s = String::new();
        for r in self {
            let status = if r.passed { "ok" } else { "FAILED" };
            let hp = r.report.as_ref().map(|c| c.hp_n.to_string()).unwrap_or_default();
            let _ = writeln!(s, "{:<22} {status:<6} HP(N) = {hp}", r.name);
            for m in &r.mismatches {
                let _ = writeln!(s, "  {m}");
            }
            if let Some(e) = &r.error {
                let _ = writeln!(s, "  error: {e}");
            }
        }
        let passed = self.iter().filter(|r| r.passed).count();
        let _ = writeln!(s, "{passed}/{} fixtures passed", self.len());
        s
    }

    fn csv(&self, _: &Cli) -> String {
        let mut s = String::from("name,passed,tau,ct,log_concave\n");
        for r in self {
            let (tau, ct, lc) = r
                .report
                .as_ref()
                .map(|c| (c.tau.to_string(), c.ct.to_string(), c.log_concave.to_string()))
                .unwrap_or_default();
            let _ = writeln!(s, "{},{},{tau},{ct},{lc}", r.name, r.passed);
        }
        s
    }
}
