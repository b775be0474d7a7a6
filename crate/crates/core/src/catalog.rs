//! Catalogs of named diagrams with published nullification writhes.
//!
//! A catalog is newline-delimited JSON, one entry per line:
//!
//! ```json
//! {"name":"8_4","code":"X- 1 2 ...","expected":{"w":0,"w_x":-2},"source":"..."}
//! ```
//!
//! `reproduce_table` recomputes the writhe split for every entry and grades
//! it against the expected values: `exact` on a signed match, `mirror` when
//! the computed values are the negation (the other enantiomorph),
//! `mismatch` otherwise, and `computed-only` for entries without expected
//! values.

use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::path::Path;

use crate::diagram::{parse_diagram, CodeFormat};
use crate::error::Error;
use crate::nullification::{report_with_seed, InvariantReport};

/// Published values a computed row is graded against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedValues {
    pub w: i64,
    pub w_x: i64,
}

/// One named diagram in a catalog file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    /// pd-signed diagram code.
    pub code: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedValues>,
    #[serde(default)]
    pub source: String,
}

/// Load and validate a newline-delimited JSON catalog.
pub fn load_catalog(path: impl AsRef<Path>) -> Result<Vec<CatalogEntry>, Error> {
    let text = fs::read_to_string(path)?;
    load_catalog_str(&text)
}

/// As [`load_catalog`], from an in-memory string.
pub fn load_catalog_str(text: &str) -> Result<Vec<CatalogEntry>, Error> {
    let mut entries = Vec::new();
    let mut names = HashSet::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let entry: CatalogEntry = serde_json::from_str(line).map_err(|e| {
            Error::Syntax(format!("catalog line {}: {}", lineno + 1, e))
        })?;
        if !names.insert(entry.name.clone()) {
            return Err(Error::DuplicateName(entry.name));
        }
        parse_diagram(&entry.code, CodeFormat::PdSigned).map_err(|e| {
            Error::Syntax(format!(
                "catalog line {} (`{}`): {}",
                lineno + 1,
                entry.name,
                e
            ))
        })?;
        entries.push(entry);
    }
    Ok(entries)
}

/// How a computed row compares with its expected values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatchStatus {
    /// Signed match of `w` and `w_x`.
    Exact,
    /// Matches the mirror image: both `w` and `w_x` negated.
    Mirror,
    Mismatch,
    /// No expected values to grade against.
    ComputedOnly,
}

impl MatchStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            MatchStatus::Exact => "exact",
            MatchStatus::Mirror => "mirror",
            MatchStatus::Mismatch => "mismatch",
            MatchStatus::ComputedOnly => "computed-only",
        }
    }
}

impl fmt::Display for MatchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One graded catalog row.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub name: String,
    #[serde(flatten)]
    pub report: InvariantReport,
    pub expected_w_x: Option<i64>,
    pub status: MatchStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Graded catalog rows plus summary counts.
#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
    pub exact: usize,
    pub mirror: usize,
    pub mismatch: usize,
    pub computed_only: usize,
}

impl TableReport {
    pub fn has_mismatch(&self) -> bool {
        self.mismatch > 0
    }

    /// Rows as a JSON array (the summary counts are recomputable).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.rows).expect("report serializes")
    }

    /// Aligned-column plain text with a summary line.
    pub fn to_text(&self) -> String {
        let mut lines = Vec::new();
        lines.push(format!(
            "{:<12} {:>3} {:>3} {:>2} {:>2} {:>3} {:>4} {:>4} {:>4} {:>6}  {}",
            "name", "n", "s", "k", "c", "o", "w", "w_x", "w_y", "exp", "status"
        ));
        for row in &self.rows {
            let r = &row.report;
            let exp = row
                .expected_w_x
                .map(|v| v.to_string())
                .unwrap_or_else(|| "-".into());
            lines.push(format!(
                "{:<12} {:>3} {:>3} {:>2} {:>2} {:>3} {:>4} {:>4} {:>4} {:>6}  {}",
                row.name, r.n, r.s, r.k, r.c, r.o, r.w, r.w_x, r.w_y, exp, row.status
            ));
        }
        lines.push(format!(
            "{} rows: {} exact, {} mirror, {} mismatch, {} computed-only",
            self.rows.len(),
            self.exact,
            self.mirror,
            self.mismatch,
            self.computed_only
        ));
        lines.join("\n")
    }

    /// CSV with the stable column set.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,n,s,k,c,o,w,w_x,w_y,expected_w_x,status\n");
        for row in &self.rows {
            let r = &row.report;
            let exp = row
                .expected_w_x
                .map(|v| v.to_string())
                .unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{}\n",
                row.name, r.n, r.s, r.k, r.c, r.o, r.w, r.w_x, r.w_y, exp, row.status
            ));
        }
        out
    }
}

/// Recompute and grade every entry, in input order.
pub fn reproduce_table(entries: &[CatalogEntry]) -> TableReport {
    reproduce_table_with_seed(entries, 0)
}

pub fn reproduce_table_with_seed(entries: &[CatalogEntry], seed: u64) -> TableReport {
    let mut rows = Vec::with_capacity(entries.len());
    let (mut exact, mut mirror, mut mismatch, mut computed_only) = (0, 0, 0, 0);
    for entry in entries {
        let report = parse_diagram(&entry.code, CodeFormat::PdSigned)
            .and_then(|d| report_with_seed(&d, seed));
        match report {
            Ok(report) => {
                let status = match entry.expected {
                    None => MatchStatus::ComputedOnly,
                    Some(e) => {
                        if report.w == e.w && report.w_x == e.w_x {
                            MatchStatus::Exact
                        } else if report.w == -e.w && report.w_x == -e.w_x {
                            MatchStatus::Mirror
                        } else {
                            MatchStatus::Mismatch
                        }
                    }
                };
                match status {
                    MatchStatus::Exact => exact += 1,
                    MatchStatus::Mirror => mirror += 1,
                    MatchStatus::Mismatch => mismatch += 1,
                    MatchStatus::ComputedOnly => computed_only += 1,
                }
                rows.push(TableRow {
                    name: entry.name.clone(),
                    report,
                    expected_w_x: entry.expected.map(|e| e.w_x),
                    status,
                    error: None,
                });
            }
            Err(e) => {
                mismatch += 1;
                rows.push(TableRow {
                    name: entry.name.clone(),
                    report: empty_report(),
                    expected_w_x: entry.expected.map(|e| e.w_x),
                    status: MatchStatus::Mismatch,
                    error: Some(e.to_string()),
                });
            }
        }
    }
    TableReport {
        rows,
        exact,
        mirror,
        mismatch,
        computed_only,
    }
}

fn empty_report() -> InvariantReport {
    InvariantReport {
        n: 0,
        s: 0,
        k: 0,
        c: 0,
        o: 0,
        w: 0,
        w_x: 0,
        w_y: 0,
        alternating: false,
        reduced: false,
        split: false,
        verdict: crate::nullification::Verdict::Undetermined,
        warnings: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn entry(name: &str, code: &str, expected: Option<(i64, i64)>) -> CatalogEntry {
        CatalogEntry {
            name: name.into(),
            code: code.into(),
            expected: expected.map(|(w, w_x)| ExpectedValues { w, w_x }),
            source: String::new(),
        }
    }

    #[test]
    fn empty_catalog_loads_as_empty() {
        assert!(load_catalog_str("").unwrap().is_empty());
        assert!(load_catalog_str("\n  \n").unwrap().is_empty());
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let line = r#"{"name":"t","code":"X+ 1 4 2 5 ; X+ 3 6 4 1 ; X+ 5 2 6 3"}"#;
        let text = format!("{line}\n{line}\n");
        let err = load_catalog_str(&text).unwrap_err();
        assert!(matches!(err, Error::DuplicateName(_)), "got {err:?}");
    }

    #[test]
    fn invalid_code_fails_loading() {
        let text = r#"{"name":"bad","code":"X+ 1 2 3"}"#;
        let err = load_catalog_str(text).unwrap_err();
        assert!(matches!(err, Error::Syntax(_)), "got {err:?}");
    }

    #[test]
    fn grading_statuses() {
        let entries = vec![
            entry("exact", fixtures::RIGHT_TREFOIL, Some((3, 2))),
            entry("mirror", fixtures::RIGHT_TREFOIL, Some((-3, -2))),
            entry("mismatch", fixtures::RIGHT_TREFOIL, Some((3, 0))),
            entry("computed", fixtures::RIGHT_TREFOIL, None),
        ];
        let report = reproduce_table(&entries);
        let statuses: Vec<MatchStatus> = report.rows.iter().map(|r| r.status).collect();
        assert_eq!(
            statuses,
            vec![
                MatchStatus::Exact,
                MatchStatus::Mirror,
                MatchStatus::Mismatch,
                MatchStatus::ComputedOnly
            ]
        );
        assert_eq!(
            (report.exact, report.mirror, report.mismatch, report.computed_only),
            (1, 1, 1, 1)
        );
        assert!(report.has_mismatch());
    }

    #[test]
    fn csv_has_the_stable_columns() {
        let entries = vec![entry("t", fixtures::RIGHT_TREFOIL, Some((3, 2)))];
        let csv = reproduce_table(&entries).to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "name,n,s,k,c,o,w,w_x,w_y,expected_w_x,status"
        );
        assert_eq!(lines.next().unwrap(), "t,3,2,1,1,2,3,2,1,2,exact");
    }

    #[test]
    fn zero_expected_grades_exact_not_mirror() {
        let entries = vec![entry("f8", fixtures::FIGURE_EIGHT, Some((0, 0)))];
        let report = reproduce_table(&entries);
        assert_eq!(report.rows[0].status, MatchStatus::Exact);
    }
}
