//! Compares each theorem's claimed edge labels with the induced ones.

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::error::Result;
use crate::generators::Family;

use super::theorems::{has_modes, label_theorem, TheoremLabeling};
use super::{induce, verify, Mode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRow {
    pub name: String,
    pub edge: (String, String),
    pub claimed: u64,
    pub induced: u64,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub family: Family,
    pub n: usize,
    pub mode: Option<Mode>,
    pub m: usize,
    /// One row per claimed edge, in the theorem's order.
    pub rows: Vec<AuditRow>,
    pub discrepancies: usize,
    /// Edges without a claimed label, in canonical order.
    pub uncovered: Vec<(String, String)>,
    /// Whether the vertex labeling passes every graceful check.
    pub verified: bool,
}

impl AuditReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &AuditRow> {
        self.rows.iter().filter(|r| !r.matches)
    }

    /// Rows whose theorem edge name satisfies `pred`.
    pub fn rows_named<'a>(&'a self, pred: impl Fn(&str) -> bool + 'a) -> impl Iterator<Item = &'a AuditRow> {
        self.rows.iter().filter(move |r| pred(&r.name))
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={} m={}", self.family, self.n, self.m)?;
        if let Some(mode) = self.mode {
            write!(f, " mode={mode}")?;
        }
        writeln!(f)?;
        writeln!(f, "  {:<12} {:<10} {:>8} {:>8}", "edge", "name", "claimed", "induced")?;
        for row in &self.rows {
            writeln!(
                f,
                "{} {:<12} {:<10} {:>8} {:>8}",
                if row.matches { "✓" } else { "✗" },
                format!("{}-{}", row.edge.0, row.edge.1),
                row.name,
                row.claimed,
                row.induced
            )?;
        }
        for (a, b) in &self.uncovered {
            writeln!(
                f,
                "○ {:<12} {:<10} {:>8} {:>8}",
                format!("{a}-{b}"),
                "",
                "-",
                "no formula"
            )?;
        }
        write!(
            f,
            "  {} claimed, {} discrepancies, {} uncovered, labeling {}",
            self.rows.len(),
            self.discrepancies,
            self.uncovered.len(),
            if self.verified { "graceful" } else { "not graceful" }
        )
    }
}

fn audit_labeling(t: &TheoremLabeling) -> Result<AuditReport> {
    let g = &t.instance.graph;
    let induced = induce(g, &t.labels)?;
    let ids = |e| {
        let (a, b) = g.edge_ids(e);
        (a.to_string(), b.to_string())
    };
    let rows: Vec<AuditRow> = t
        .claims
        .iter()
        .map(|c| {
            let got = induced.label(c.edge).expect("claimed edge is in the graph");
            AuditRow {
                name: c.name.clone(),
                edge: ids(c.edge),
                claimed: c.label,
                induced: got,
                matches: got == c.label,
            }
        })
        .collect();
    let discrepancies = rows.iter().filter(|r| !r.matches).count();
    Ok(AuditReport {
        family: t.instance.family,
        n: t.instance.n,
        mode: t.mode,
        m: induced.m,
        rows,
        discrepancies,
        uncovered: t.uncovered().into_iter().map(ids).collect(),
        verified: verify(g, &t.labels).passed(),
    })
}

/// Audits one theorem at one size and mode.
pub fn audit_theorem(family: Family, n: usize, mode: Mode) -> Result<AuditReport> {
    audit_labeling(&label_theorem(family, n, mode)?)
}

/// Audits every variant at size `n`: corrected then literal where the two
/// differ, otherwise the single labeling.
pub fn audit_all_modes(family: Family, n: usize) -> Result<Vec<AuditReport>> {
    if has_modes(family, n) {
        Ok(vec![
            audit_theorem(family, n, Mode::Corrected)?,
            audit_theorem(family, n, Mode::Literal)?,
        ])
    } else {
        Ok(vec![audit_theorem(family, n, Mode::Corrected)?])
    }
}

/// [`audit_all_modes`] over a range of sizes, in parallel. Output is ordered
/// by size, then mode.
pub fn audit_range(family: Family, sizes: RangeInclusive<usize>) -> Result<Vec<AuditReport>> {
    let per_size: Vec<Result<Vec<AuditReport>>> = sizes
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| audit_all_modes(family, n))
        .collect();
    let mut out = Vec::new();
    for reports in per_size {
        out.extend(reports?);
    }
    Ok(out)
}
