//! Ordered pass/fail reports for `table`, `verify` and `experiment`.

use std::fmt::Write as _;

use modasc::counting::Caps;
use serde::Serialize;

use crate::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Data that is reported but not asserted.
    Info,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        }
    }
}

/// One named property. For failures `detail` holds the first witness.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub tag: String,
    pub status: Status,
    pub detail: String,
}

/// `Ok` carries a summary, `Err` the first witness of a failure.
pub type Outcome = Result<String, String>;

impl Check {
    pub fn from_outcome(name: impl Into<String>, tag: impl Into<String>, outcome: Outcome) -> Self {
        let (status, detail) = match outcome {
            Ok(d) => (Status::Pass, d),
            Err(d) => (Status::Fail, d),
        };
        Check {
            name: name.into(),
            tag: tag.into(),
            status,
            detail,
        }
    }

    pub fn info(name: impl Into<String>, tag: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            tag: tag.into(),
            status: Status::Info,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub caps: Caps,
    pub seedless: bool,
    pub checks: Vec<Check>,
}

impl RunReport {
    pub fn new(command: String, caps: Caps, seedless: bool) -> Self {
        RunReport {
            command,
            caps,
            seedless,
            checks: Vec::new(),
        }
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut out = String::from("status,check,tag,detail\n");
                for c in &self.checks {
                    let fields = [c.status.label(), &c.name, &c.tag, &c.detail].map(csv_field);
                    writeln!(out, "{}", fields.join(",")).unwrap();
                }
                out
            }
            Format::Text | Format::Bfile => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# {}", self.command).unwrap();
        writeln!(
            out,
            "# caps: oracle n <= {}, paths and partitions n <= {}",
            self.caps.oracle, self.caps.paths
        )
        .unwrap();
        if self.seedless {
            writeln!(out, "# seedless: every check is exhaustive, no randomness").unwrap();
        }
        for c in &self.checks {
            writeln!(out, "{} {} [{}] {}", c.status.label(), c.name, c.tag, c.detail).unwrap();
        }
        writeln!(
            out,
            "# {} passed, {} failed, {} reported",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Info)
        )
        .unwrap();
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
