//! Text renderings of tables and check reports.

use clap::ValueEnum;
use minrep_core::registry::notation::cell_to_latex;
use minrep_core::tables::{CellKind, Table};
use minrep_core::{CheckReport, Status};
use serde::Serialize;

pub const REPORT_SCHEMA: &str = "minrep-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Markdown,
    Csv,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Md,
}

pub fn table(t: &Table, format: TableFormat) -> Result<String, String> {
    match format {
        TableFormat::Markdown => Ok(markdown(t)),
        TableFormat::Csv => csv_table(t),
        TableFormat::Json => serde_json::to_string_pretty(t).map(|s| s + "\n").map_err(|e| e.to_string()),
        TableFormat::Latex => Ok(latex(t)),
    }
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

fn markdown(t: &Table) -> String {
    let mut out = format!("## {}\n\n", t.title);
    let headers: Vec<&str> = t.columns.iter().map(|c| c.key).chain(["status"]).collect();
    out.push_str(&format!("| {} |\n", headers.join(" | ")));
    out.push_str(&format!("|{}\n", "---|".repeat(headers.len())));
    for row in &t.rows {
        let mut cells: Vec<String> = row
            .cells
            .iter()
            .zip(&t.columns)
            .map(|(c, col)| match col.kind {
                CellKind::Math => format!("`{}`", c.text),
                CellKind::Text => md_escape(&c.text),
            })
            .collect();
        cells.push(md_escape(&row.status_text(&t.columns)));
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
    out
}

fn csv_table(t: &Table) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let headers: Vec<&str> = t.columns.iter().map(|c| c.key).chain(["status"]).collect();
    w.write_record(&headers).map_err(|e| e.to_string())?;
    for row in &t.rows {
        let mut fields: Vec<String> = row.cells.iter().map(|c| c.text.clone()).collect();
        fields.push(row.status_text(&t.columns));
        w.write_record(&fields).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

const LATEX_SYMBOLS: &[(&str, &str)] = &[
    ("\\", "\\textbackslash{}"),
    ("_", "\\_"),
    ("^", "\\^{}"),
    ("&", "\\&"),
    ("%", "\\%"),
    ("#", "\\#"),
    (">=", "$\\ge$"),
    ("⊠", "$\\boxtimes$"),
    ("⊕", "$\\oplus$"),
    ("∧", "$\\wedge$"),
    ("±", "$\\pm$"),
    ("ω", "$\\omega$"),
];

pub fn latex_text(s: &str) -> String {
    let mut out = String::new();
    let mut rest = s;
    'outer: while let Some(ch) = rest.chars().next() {
        for (from, to) in LATEX_SYMBOLS {
            if let Some(tail) = rest.strip_prefix(from) {
                out.push_str(to);
                rest = tail;
                continue 'outer;
            }
        }
        out.push(ch);
        rest = &rest[ch.len_utf8()..];
    }
    out
}

fn latex_header(key: &str) -> String {
    match key {
        "g" => "$\\mathfrak{g}$".into(),
        "K" => "$K$".into(),
        "p" => "$\\mathfrak{p}_{\\mathbb{C}}$".into(),
        "rho" => "$\\rho_{\\mathfrak{k}_{ss}}$".into(),
        "mu0" => "$\\mu_0$".into(),
        "beta" => "$\\beta$".into(),
        "xi0" => "$\\xi_0$".into(),
        "w0" => "$w_0$".into(),
        other => latex_text(other),
    }
}

fn latex(t: &Table) -> String {
    let mut out = format!("% {}\n", t.title);
    out.push_str(&format!("\\begin{{tabular}}{{c|{}|l}}\n\\hline\n", "c".repeat(t.columns.len() - 1)));
    let headers: Vec<String> =
        t.columns.iter().map(|c| latex_header(c.key)).chain(["status".to_string()]).collect();
    out.push_str(&format!("{} \\\\\n\\hline\n", headers.join(" & ")));
    for row in &t.rows {
        let mut cells: Vec<String> = row
            .cells
            .iter()
            .zip(&t.columns)
            .map(|(c, col)| match col.kind {
                CellKind::Math => cell_to_latex(&c.text),
                CellKind::Text => latex_text(&c.text),
            })
            .collect();
        cells.push(latex_text(&row.status_text(&t.columns)));
        out.push_str(&format!("{} \\\\\n", cells.join(" & ")));
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}

#[derive(Serialize)]
struct Summary {
    pass: usize,
    fail: usize,
    skipped: usize,
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    schema: &'static str,
    status: Status,
    summary: Summary,
    reports: &'a [CheckReport],
}

fn summary(reports: &[CheckReport]) -> Summary {
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    Summary { pass: count(Status::Pass), fail: count(Status::Fail), skipped: count(Status::Skipped) }
}

fn overall(reports: &[CheckReport]) -> Status {
    if reports.iter().any(|r| r.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    }
}

pub fn reports(reports: &[CheckReport], format: ReportFormat) -> Result<String, String> {
    match format {
        ReportFormat::Json => {
            let doc = ReportDocument { schema: REPORT_SCHEMA, status: overall(reports), summary: summary(reports), reports };
            serde_json::to_string_pretty(&doc).map(|s| s + "\n").map_err(|e| e.to_string())
        }
        ReportFormat::Md => {
            let timings = reports.iter().any(|r| r.duration_ms.is_some());
            let mut out = String::from(if timings {
                "| record | check | status | evidence | ms |\n|---|---|---|---|---|\n"
            } else {
                "| record | check | status | evidence |\n|---|---|---|---|\n"
            });
            for r in reports {
                out.push_str(&format!("| {} | {} | {} | {} |", md_escape(&r.record), r.check, r.status, md_escape(&r.evidence)));
                if let Some(ms) = r.duration_ms {
                    out.push_str(&format!(" {ms} |"));
                }
                out.push('\n');
            }
            let s = summary(reports);
            out.push_str(&format!(
                "\noverall: {} ({} pass, {} fail, {} skipped)\n",
                overall(reports),
                s.pass,
                s.fail,
                s.skipped
            ));
            Ok(out)
        }
    }
}
