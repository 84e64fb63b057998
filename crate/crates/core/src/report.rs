//! Verdict reports. Every checker returns one of these; failures carry the
//! first counterexample found, never a boolean alone.

use std::fmt;

use crate::error::Result;
use crate::matrix::{maps_equal, Equality, Matrix};
use crate::scalar::Scalar;
use crate::structures::Basis;
use crate::tensor::unflatten;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Labels of the input basis tuple.
    pub input: Vec<String>,
    /// Labels of the output basis component that differs.
    pub output: Vec<String>,
    pub left: Scalar,
    pub right: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { witness: Option<Witness>, note: Option<String> },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn fail_note(note: impl Into<String>) -> Self {
        Verdict::Fail { witness: None, note: Some(note.into()) }
    }

    pub fn from_bool(ok: bool, note: impl Into<String>) -> Self {
        if ok { Verdict::Pass } else { Verdict::fail_note(note) }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fail { witness, .. } => witness.as_ref(),
            Verdict::Pass => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, verdict: Verdict) {
        self.checks.push(Check { name: name.into(), verdict });
    }

    /// Records `lhs == rhs` as maps from `inputs` legs to `outputs` legs.
    pub fn compare(
        &mut self,
        name: impl Into<String>,
        lhs: &Matrix,
        rhs: &Matrix,
        inputs: &[&Basis],
        outputs: &[&Basis],
    ) -> Result<bool> {
        let verdict = compare_maps(lhs, rhs, inputs, outputs)?;
        let ok = verdict.passed();
        self.push(name, verdict);
        Ok(ok)
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            let name = if prefix.is_empty() { c.name } else { format!("{prefix}: {}", c.name) };
            self.checks.push(Check { name, verdict: c.verdict });
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.verdict.passed())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Verdict of the named check; panics if absent (test helper).
    pub fn verdict(&self, name: &str) -> &Verdict {
        &self.get(name).unwrap_or_else(|| panic!("no check named `{name}` in {}", self.subject)).verdict
    }

    /// Deterministic text rendering; `witnesses` adds counterexample lines.
    pub fn render(&self, witnesses: bool) -> String {
        let mut out = format!("== {}\n", self.subject);
        for c in &self.checks {
            let tag = if c.verdict.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag}  {}\n", c.name));
            if let Verdict::Fail { witness, note } = &c.verdict {
                if let Some(n) = note {
                    out.push_str(&format!("      note: {n}\n"));
                }
                if let (true, Some(w)) = (witnesses, witness) {
                    out.push_str(&format!("      witness: {w}\n"));
                }
            }
        }
        let failed = self.failures().count();
        out.push_str(&format!("-- {} checks, {} failed\n", self.checks.len(), failed));
        out
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "input ({}) component [{}]: {} vs {}",
            self.input.join(", "),
            self.output.join(" ⊗ "),
            self.left,
            self.right
        )
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

fn labels(index: usize, legs: &[&Basis]) -> Vec<String> {
    let dims: Vec<usize> = legs.iter().map(|b| b.dim()).collect();
    unflatten(index, &dims)
        .into_iter()
        .zip(legs)
        .map(|(i, b)| b.label(i).to_string())
        .collect()
}

/// Map equality as a verdict, translating the first differing entry into
/// basis labels.
pub fn compare_maps(lhs: &Matrix, rhs: &Matrix, inputs: &[&Basis], outputs: &[&Basis]) -> Result<Verdict> {
    Ok(match maps_equal(lhs, rhs)? {
        Equality::Equal => Verdict::Pass,
        Equality::Differs { row, col, left, right } => Verdict::Fail {
            witness: Some(Witness {
                input: labels(col, inputs),
                output: labels(row, outputs),
                left,
                right,
            }),
            note: None,
        },
    })
}

/// Two reports expected to have the same overall verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence {
    pub left: Report,
    pub right: Report,
}

impl Equivalence {
    pub fn agree(&self) -> bool {
        self.left.passed() == self.right.passed()
    }

    pub fn render(&self, witnesses: bool) -> String {
        let word = |ok: bool| if ok { "true" } else { "false" };
        format!(
            "{}{}== equivalence: {} ⇔ {} ({})\n",
            self.left.render(witnesses),
            self.right.render(witnesses),
            word(self.left.passed()),
            word(self.right.passed()),
            if self.agree() { "agree" } else { "DISAGREE" }
        )
    }
}
