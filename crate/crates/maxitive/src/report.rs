//! Structured pass/fail reports shared by every checker in the crate.

use std::fmt;

use serde::Serialize;

/// Outcome of a single named check.
///
/// `Inconclusive` means the check had no effective samples to look at
/// (everything fell outside the functional's domain, say); it is never
/// treated as a pass.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

/// Concrete evidence for a failed check: the offending inputs (rendered as
/// text) and the two sides of the violated (in)equality.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub inputs: Vec<(String, String)>,
    pub lhs: f64,
    pub rhs: f64,
}

impl Witness {
    pub fn new(inputs: Vec<(String, String)>, lhs: f64, rhs: f64) -> Self {
        Witness { inputs, lhs, rhs }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lhs={} rhs={}", self.lhs, self.rhs)?;
        for (name, value) in &self.inputs {
            write!(f, ", {name}={value}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    /// Number of effective samples the verdict rests on.
    pub samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, samples: usize) -> Self {
        Check {
            name: name.into(),
            verdict: Verdict::Pass,
            samples,
            witness: None,
            detail: None,
        }
    }

    pub fn fail(name: impl Into<String>, samples: usize, witness: Witness) -> Self {
        Check {
            name: name.into(),
            verdict: Verdict::Fail,
            samples,
            witness: Some(witness),
            detail: None,
        }
    }

    pub fn inconclusive(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            verdict: Verdict::Inconclusive,
            samples: 0,
            witness: None,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ({} samples)", self.name, self.verdict, self.samples)?;
        if let Some(w) = &self.witness {
            write!(f, " [{w}]")?;
        }
        if let Some(d) = &self.detail {
            write!(f, " [{d}]")?;
        }
        Ok(())
    }
}

/// An ordered collection of named checks.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    /// True when every check passed; inconclusive checks do not count.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict == Verdict::Pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn verdict(&self, name: &str) -> Option<Verdict> {
        self.get(name).map(|c| c.verdict)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        Ok(())
    }
}

/// Renders a unit value as a small fraction ("1/3", "1/2", "0", "1") when
/// one matches within 1e-9, falling back to the plain float otherwise.
/// Ascending denominators are tried first, so the result is reduced.
pub fn approx_fraction(x: f64) -> String {
    for q in 1..=60i64 {
        let p = (x * q as f64).round();
        if (x - p / q as f64).abs() <= 1e-9 {
            return if q == 1 {
                format!("{p:.0}")
            } else {
                format!("{p:.0}/{q}")
            };
        }
    }
    x.to_string()
}
