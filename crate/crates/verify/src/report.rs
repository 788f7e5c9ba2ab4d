use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use torsion_mcg::word::IdentityCheck;
use torsion_mcg::SympMatrix;

use crate::VerifyError;

pub const SCOPE_NOTE: &str = "All checks act on first homology through Sp(2g, Z). They are necessary \
conditions only: mapping classes in the Torelli group are invisible, and curve classes are compared \
up to sign rather than up to isotopy.";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// A search cap was reached before a decision.
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    fn all<'a>(vs: impl IntoIterator<Item = &'a Verdict>) -> Self {
        let mut out = Verdict::Pass;
        for v in vs {
            match v {
                Verdict::Fail => return Verdict::Fail,
                Verdict::Inconclusive => out = Verdict::Inconclusive,
                Verdict::Pass => {}
            }
        }
        out
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Both sides of an identity, as words and as matrix rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRecord {
    pub lhs: String,
    pub rhs: String,
    pub lhs_matrix: Vec<Vec<i64>>,
    pub rhs_matrix: Vec<Vec<i64>>,
}

impl IdentityRecord {
    pub fn new(check: &IdentityCheck) -> Self {
        Self {
            lhs: check.lhs.clone(),
            rhs: check.rhs.clone(),
            lhs_matrix: rows(&check.lhs_value),
            rhs_matrix: rows(&check.rhs_value),
        }
    }
}

pub fn rows(m: &SympMatrix) -> Vec<Vec<i64>> {
    m.entries().chunks(m.dim()).map(<[i64]>::to_vec).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Item {
    pub label: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub facts: BTreeMap<String, Value>,
    /// Present when an identity check failed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<IdentityRecord>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<String, Vec<String>>,
}

impl Item {
    pub fn new(label: impl Into<String>, verdict: Verdict) -> Self {
        Self { label: label.into(), verdict, facts: BTreeMap::new(), identity: None, witnesses: BTreeMap::new() }
    }

    /// Passes iff the identity holds; keeps both sides on failure.
    pub fn identity(check: &IdentityCheck) -> Self {
        let mut item = Self::new(check.label.clone(), Verdict::from_bool(check.holds()));
        if !check.holds() {
            item.identity = Some(IdentityRecord::new(check));
        }
        item
    }

    /// Passes iff the identity fails, as a negative control should.
    pub fn negative_control(label: impl Into<String>, check: &IdentityCheck) -> Self {
        let mut item = Self::new(label, Verdict::from_bool(!check.holds()));
        item.facts.insert("control".into(), Value::from(format!("{} = {} must fail", check.lhs, check.rhs)));
        item
    }

    pub fn fact(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.facts.insert(key.into(), value.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub name: String,
    pub verdict: Verdict,
    pub items: Vec<Item>,
}

impl Section {
    pub fn new(name: &str, items: Vec<Item>) -> Self {
        Self { name: name.into(), verdict: Verdict::all(items.iter().map(|i| &i.verdict)), items }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Item> {
        self.items.iter().filter(|i| i.verdict != Verdict::Pass)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub genus: usize,
    pub checks: Vec<String>,
    pub conventions: Vec<String>,
    pub scope: String,
    pub sections: Vec<Section>,
    pub verdict: Verdict,
    /// Wall time per section in microseconds. Not part of the comparable
    /// content; see [`CheckReport::comparable`].
    #[serde(default)]
    pub timings_us: BTreeMap<String, u64>,
}

impl CheckReport {
    pub fn new(genus: usize, checks: Vec<String>, conventions: Vec<String>, sections: Vec<Section>) -> Self {
        let verdict = Verdict::all(sections.iter().map(|s| &s.verdict));
        Self { genus, checks, conventions, scope: SCOPE_NOTE.into(), sections, verdict, timings_us: BTreeMap::new() }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Exit status: 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        u8::from(!self.passed())
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    /// The report with timings removed; identical inputs give identical
    /// comparable reports.
    pub fn comparable(&self) -> Self {
        Self { timings_us: BTreeMap::new(), ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are plain JSON")
    }

    pub fn from_json(s: &str) -> Result<Self, VerifyError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = self.write_text(&mut out);
        out
    }

    fn write_text(&self, out: &mut String) -> fmt::Result {
        writeln!(out, "genus {}  checks: {}", self.genus, self.checks.join(", "))?;
        writeln!(out, "note: {}", self.scope)?;
        writeln!(out, "conventions:")?;
        for c in &self.conventions {
            writeln!(out, "  {c}")?;
        }
        for s in &self.sections {
            writeln!(out)?;
            write!(out, "[{}] {}", s.name, s.verdict)?;
            if let Some(t) = self.timings_us.get(&s.name) {
                write!(out, "  ({:.3} s)", *t as f64 / 1e6)?;
            }
            writeln!(out)?;
            for item in &s.items {
                writeln!(out, "  {:<4} {}", item.verdict, item.label)?;
                for (k, v) in &item.facts {
                    match v {
                        Value::String(s) => writeln!(out, "         {k}: {s}")?,
                        other => writeln!(out, "         {k}: {other}")?,
                    }
                }
                for (k, w) in &item.witnesses {
                    writeln!(out, "         witness {k} = {}", w.join(" "))?;
                }
                if let Some(id) = &item.identity {
                    write_identity(out, id)?;
                }
            }
        }
        writeln!(out)?;
        writeln!(out, "overall: {}", self.verdict)
    }
}

pub fn write_identity(out: &mut String, id: &IdentityRecord) -> fmt::Result {
    writeln!(out, "         lhs: {}", id.lhs)?;
    for r in &id.lhs_matrix {
        writeln!(out, "           {r:?}")?;
    }
    writeln!(out, "         rhs: {}", id.rhs)?;
    for r in &id.rhs_matrix {
        writeln!(out, "           {r:?}")?;
    }
    Ok(())
}
