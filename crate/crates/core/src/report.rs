//! Check reports in a human table or a line protocol.
//!
//! Machine output is a pure function of the results: no timings, lines in
//! catalog order and then instance order, so identical inputs give
//! identical bytes whatever the thread schedule.

use std::fmt::Write as _;
use std::time::Duration;

use crate::checks::{catalog_position, CheckResult, Sampling, Status};
use crate::spectrum::VarietySemantics;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Machine,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "machine" => Ok(Format::Machine),
            _ => Err(format!("unknown format `{s}` (text|machine)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct InstanceReport {
    pub instance: String,
    pub semantics: VarietySemantics,
    pub require_primeful: bool,
    pub results: Vec<CheckResult>,
    pub elapsed: Duration,
}

impl InstanceReport {
    pub fn count(&self, status: Status) -> usize {
        self.results.iter().filter(|r| r.outcome.status == status).count()
    }

    pub fn result(&self, id: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.id == id)
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub sampling: Sampling,
    pub instances: Vec<InstanceReport>,
}

impl Report {
    pub fn any_failed(&self) -> bool {
        self.instances.iter().any(|i| i.count(Status::Fail) > 0)
    }

    fn header(&self) -> Vec<String> {
        let mut h = vec![
            "gzariski verify".to_string(),
            "quotient: I-bar = I/Ann(M) throughout".to_string(),
            "ring basic opens: GX_r is the complement of qp-V(rR)".to_string(),
            format!("sampling: {}", self.sampling.describe()),
        ];
        for i in &self.instances {
            h.push(format!(
                "instance {} semantics={} primeful={}",
                i.instance,
                i.semantics,
                if i.require_primeful { "required" } else { "dropped" }
            ));
        }
        h
    }
}

/// One protocol line: `check <id> <instance> <STATUS> [witness=..] [note=a;b]`.
pub fn machine_line(instance: &str, r: &CheckResult) -> String {
    let mut line = format!("check {} {} {}", r.id, instance, r.outcome.status);
    if let Some(w) = &r.outcome.witness {
        let _ = write!(line, " witness={}", w.replace(' ', "_"));
    }
    if !r.outcome.notes.is_empty() {
        let _ = write!(line, " note={}", r.outcome.notes.join(";").replace(' ', "_"));
    }
    line
}

pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Machine => emit_machine(report),
        Format::Text => emit_text(report),
    }
}

fn emit_machine(report: &Report) -> String {
    let mut out = String::new();
    for h in report.header() {
        let _ = writeln!(out, "# {h}");
    }
    let pos = catalog_position();
    let mut lines: Vec<(usize, usize, String)> = Vec::new();
    for (i, inst) in report.instances.iter().enumerate() {
        for r in &inst.results {
            lines.push((pos[r.id], i, machine_line(&inst.instance, r)));
        }
    }
    lines.sort();
    for (_, _, l) in lines {
        out.push_str(&l);
        out.push('\n');
    }
    out
}

fn emit_text(report: &Report) -> String {
    let mut out = String::new();
    for h in report.header() {
        let _ = writeln!(out, "{h}");
    }
    for inst in &report.instances {
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "{}  ({} pass, {} fail, {} skipped, {:.1} ms)",
            inst.instance,
            inst.count(Status::Pass),
            inst.count(Status::Fail),
            inst.count(Status::Skipped),
            inst.elapsed.as_secs_f64() * 1e3
        );
        for r in &inst.results {
            let mut detail = String::new();
            if let Some(w) = &r.outcome.witness {
                let _ = write!(detail, " witness {w}");
            }
            if !r.outcome.notes.is_empty() {
                let _ = write!(detail, " [{}]", r.outcome.notes.join("; "));
            }
            let _ = writeln!(
                out,
                "  {:<8} {:<7} {:>8.2} ms  {}{}",
                r.id,
                r.outcome.status.name(),
                r.elapsed.as_secs_f64() * 1e3,
                r.title,
                detail
            );
        }
    }
    let total = |s| report.instances.iter().map(|i| i.count(s)).sum::<usize>();
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "total: {} pass, {} fail, {} skipped over {} instances",
        total(Status::Pass),
        total(Status::Fail),
        total(Status::Skipped),
        report.instances.len()
    );
    out
}
