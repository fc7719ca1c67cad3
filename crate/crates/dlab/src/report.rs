//! Check reports and their JSON-lines and table renderings.

use std::fmt;
use std::io::{self, Write};
use std::time::Duration;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The search budget ran out before a conclusion.
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub instance: String,
    pub claimed: String,
    pub computed: String,
    pub verdict: Verdict,
    /// Node budget handed to the solver.
    pub budget: u64,
    /// Unknown is an acceptable outcome for this check.
    pub stretch: bool,
    pub certificates: Vec<String>,
    /// Wall time; not serialized so that JSON output is reproducible.
    #[serde(skip)]
    pub wall: Duration,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, instance: impl Into<String>, claimed: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            instance: instance.into(),
            claimed: claimed.into(),
            computed: String::new(),
            verdict: Verdict::Fail,
            budget: 0,
            stretch: false,
            certificates: Vec::new(),
            wall: Duration::ZERO,
        }
    }

    pub fn computed(mut self, computed: impl Into<String>, verdict: Verdict) -> Self {
        self.computed = computed.into();
        self.verdict = verdict;
        self
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn stretch(mut self) -> Self {
        self.stretch = true;
        self
    }

    /// Pass, or Unknown on a stretch check.
    pub fn acceptable(&self) -> bool {
        self.verdict == Verdict::Pass || (self.verdict == Verdict::Unknown && self.stretch)
    }
}

/// Exit status for a set of reports: 0 only if every one is acceptable.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().all(CheckReport::acceptable) {
        0
    } else {
        1
    }
}

pub fn write_jsonl(out: &mut impl Write, reports: &[CheckReport]) -> io::Result<()> {
    for r in reports {
        serde_json::to_writer(&mut *out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn write_table(out: &mut impl Write, reports: &[CheckReport]) -> io::Result<()> {
    for r in reports {
        writeln!(
            out,
            "{:<7} {:<12} {:<34} claimed {:<22} computed {:<22} {:>8.2}s",
            r.verdict.to_string(),
            r.check,
            r.instance,
            r.claimed,
            r.computed,
            r.wall.as_secs_f64()
        )?;
        for c in &r.certificates {
            writeln!(out, "        certificate {c}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jsonl_is_time_independent() {
        let mut a = CheckReport::new("prop10", "D(A+T2)", "chi = 6").computed("chi = 6", Verdict::Pass);
        let mut b = a.clone();
        a.wall = Duration::from_millis(3);
        b.wall = Duration::from_secs(9);
        let (mut ja, mut jb) = (Vec::new(), Vec::new());
        write_jsonl(&mut ja, &[a]).unwrap();
        write_jsonl(&mut jb, &[b]).unwrap();
        assert_eq!(ja, jb);
        let line = String::from_utf8(ja).unwrap();
        assert!(line.contains("\"verdict\":\"pass\""));
        assert!(line.ends_with("}\n"));
    }

    #[test]
    fn exit_codes() {
        let pass = CheckReport::new("x", "", "").computed("", Verdict::Pass);
        let unknown = CheckReport::new("x", "", "").computed("", Verdict::Unknown);
        assert_eq!(exit_code(std::slice::from_ref(&pass)), 0);
        assert_eq!(exit_code(&[pass.clone(), unknown.clone()]), 1);
        assert_eq!(exit_code(&[pass, unknown.stretch()]), 0);
    }
}
