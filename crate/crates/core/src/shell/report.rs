//! Certification reports: one record per check, printed as aligned text or
//! as JSON lines with a fixed key order.

use std::fmt;
use std::io::{self, Write};

use serde::Serialize;

use crate::exactnum::Status;
use crate::verifier::Decision;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Proved,
    Disproved,
    Inconclusive,
    /// A measurement that makes no claim.
    Info,
}

impl From<Status> for Outcome {
    fn from(s: Status) -> Self {
        match s {
            Status::Proved => Outcome::Proved,
            Status::Disproved => Outcome::Disproved,
            Status::Inconclusive => Outcome::Inconclusive,
        }
    }
}

impl Outcome {
    /// Claim that `d` equals `want`.
    pub fn expect(d: Decision, want: Decision) -> Outcome {
        match d {
            Decision::Inconclusive => Outcome::Inconclusive,
            d if d == want => Outcome::Proved,
            _ => Outcome::Disproved,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Outcome::Proved => "Proved",
            Outcome::Disproved => "Disproved",
            Outcome::Inconclusive => "Inconclusive",
            Outcome::Info => "info",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub check: String,
    pub subject: String,
    pub status: Outcome,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Record {
    pub fn new(check: &str, subject: &str, status: Outcome, value: impl Into<String>) -> Self {
        Record {
            check: check.into(),
            subject: subject.into(),
            status,
            value: value.into(),
            depth: None,
            detail: None,
        }
    }

    pub fn depth(mut self, depth: u32) -> Self {
        self.depth = Some(depth);
        self
    }

    pub fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    JsonLines,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    /// 0 when nothing failed, 1 when some claim was disproved, 2 when some
    /// claim is inconclusive and none disproved.
    pub fn exit_code(&self) -> i32 {
        let has = |o| self.records.iter().any(|r| r.status == o);
        if has(Outcome::Disproved) {
            1
        } else if has(Outcome::Inconclusive) {
            2
        } else {
            0
        }
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        for r in &self.records {
            match format {
                Format::Text => {
                    write!(out, "{:<12} {:<12} {:<12} {}", r.check, r.subject, r.status, r.value)?;
                    if let Some(d) = r.depth {
                        write!(out, " [depth {d}]")?;
                    }
                    if let Some(d) = &r.detail {
                        write!(out, " ({d})")?;
                    }
                    writeln!(out)?;
                }
                Format::JsonLines => {
                    serde_json::to_writer(&mut *out, r)?;
                    writeln!(out)?;
                }
            }
        }
        Ok(())
    }
}
