//! Machine-readable run reports: one entry per executed command, rendered
//! either as versioned JSON or as aligned plain text. Reports are
//! deterministic for a fixed job and version; wall-clock timings are
//! serialized only on request so that default output is byte-identical
//! across runs.

use std::fmt::Write as _;

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Report {
    pub schema_version: u32,
    pub field: String,
    pub commands: Vec<CommandReport>,
    pub all_verifications_passed: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct CommandReport {
    pub command: String,
    pub outcome: CommandOutcome,
    #[serde(skip_serializing)]
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
#[serde(tag = "kind")]
pub enum CommandOutcome {
    Dims { theory: String, degrees: Vec<usize> },
    Center { dim: usize },
    Quotient { objects: Vec<String>, hom_dims: Vec<Vec<usize>>, orbits: Vec<Vec<String>> },
    Pages {
        page: usize,
        filtration: String,
        entries: Vec<PageCell>,
        stabilized_at: Option<usize>,
        abutment: Vec<Option<usize>>,
    },
    Verification { name: String, passed: bool, details: Vec<String> },
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct PageCell {
    pub p: usize,
    pub q: usize,
    pub dim: usize,
    pub reliable: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with per-command wall-clock timings attached.
    pub fn to_json_with_timings(&self) -> String {
        #[derive(Serialize)]
        struct Timed<'a> {
            schema_version: u32,
            field: &'a str,
            commands: Vec<TimedCommand<'a>>,
            all_verifications_passed: bool,
        }
        #[derive(Serialize)]
        struct TimedCommand<'a> {
            command: &'a str,
            outcome: &'a CommandOutcome,
            elapsed_ms: u64,
        }
        let t = Timed {
            schema_version: self.schema_version,
            field: &self.field,
            commands: self
                .commands
                .iter()
                .map(|c| TimedCommand { command: &c.command, outcome: &c.outcome, elapsed_ms: c.elapsed_ms })
                .collect(),
            all_verifications_passed: self.all_verifications_passed,
        };
        serde_json::to_string_pretty(&t).expect("report serializes")
    }

    /// Aligned plain-text rendering.
    pub fn to_text(&self, with_timings: bool) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "field: {}", self.field);
        for c in &self.commands {
            s.push('\n');
            let _ = writeln!(s, "== {}", c.command);
            match &c.outcome {
                CommandOutcome::Dims { theory: _, degrees } => {
                    let _ = writeln!(s, "   degree : {}", column(degrees.len(), |n| n.to_string()));
                    let _ = writeln!(s, "   dim    : {}", column(degrees.len(), |n| degrees[n].to_string()));
                }
                CommandOutcome::Center { dim } => {
                    let _ = writeln!(s, "   dim center = {dim}");
                }
                CommandOutcome::Quotient { objects, hom_dims, orbits } => {
                    let _ = writeln!(s, "   objects: {}", objects.join(", "));
                    for (u, orbit) in orbits.iter().enumerate() {
                        let _ = writeln!(s, "   orbit {} = {{{}}}", objects[u], orbit.join(", "));
                    }
                    let _ = writeln!(s, "   hom dims (target x source):");
                    for row in hom_dims {
                        let cells: Vec<String> = row.iter().map(|d| format!("{d:>3}")).collect();
                        let _ = writeln!(s, "     [{}]", cells.join(" "));
                    }
                }
                CommandOutcome::Pages { page, filtration, entries, stabilized_at, abutment } => {
                    let _ = writeln!(s, "   E^{page} ({filtration} filtration; * marks provisional spots)");
                    let pmax = entries.iter().map(|e| e.p).max().unwrap_or(0);
                    let qmax = entries.iter().map(|e| e.q).max().unwrap_or(0);
                    for q in (0..=qmax).rev() {
                        let mut row = format!("   q={q:<2}|");
                        for p in 0..=pmax {
                            let e = entries.iter().find(|e| e.p == p && e.q == q).expect("full grid");
                            let mark = if e.reliable { ' ' } else { '*' };
                            let _ = write!(row, " {:>3}{mark}", e.dim);
                        }
                        let _ = writeln!(s, "{row}");
                    }
                    let mut footer = String::from("       +");
                    for _ in 0..=pmax {
                        footer.push_str("-----");
                    }
                    let _ = writeln!(s, "{footer}");
                    let mut header = String::from("        ");
                    for p in 0..=pmax {
                        let _ = write!(header, " p={p:<2} ");
                    }
                    let _ = writeln!(s, "{header}");
                    if let Some(r) = stabilized_at {
                        let _ = writeln!(s, "   stabilized from page {r}");
                    }
                    let ab: Vec<String> = abutment
                        .iter()
                        .map(|a| a.map_or("?".to_string(), |d| d.to_string()))
                        .collect();
                    let _ = writeln!(s, "   abutment dims (total complex): [{}]", ab.join(", "));
                }
                CommandOutcome::Verification { name, passed, details } => {
                    let _ = writeln!(s, "   {}: {}", name, if *passed { "PASS" } else { "FAIL" });
                    for d in details {
                        let _ = writeln!(s, "     {d}");
                    }
                }
            }
            if with_timings {
                let _ = writeln!(s, "   ({} ms)", c.elapsed_ms);
            }
        }
        let _ = writeln!(
            s,
            "\nverifications: {}",
            if self.all_verifications_passed { "all passed" } else { "FAILURES PRESENT" }
        );
        s
    }
}

fn column(n: usize, f: impl Fn(usize) -> String) -> String {
    (0..n).map(|i| format!("{:>4}", f(i))).collect::<Vec<_>>().join(" ")
}
