//! Table and CSV rendering of verification reports. Both renderers work
//! from a flat row view so that freshly computed reports and reloaded JSON
//! files go through the same code.

use qcong_core::theorems::Report;

pub const COLUMNS: [&str; 8] = [
    "id",
    "p",
    "m",
    "kind",
    "verdict",
    "oracle",
    "limit_check",
    "millis",
];

pub struct Row {
    pub cells: [String; 8],
}

pub fn report_rows(report: &Report) -> Vec<Row> {
    report
        .records
        .iter()
        .map(|r| Row {
            cells: [
                r.id.to_string(),
                r.p.to_string(),
                r.m.map(|m| m.to_string()).unwrap_or_default(),
                r.kind.to_string(),
                r.verdict.to_string(),
                r.oracle.to_string(),
                r.limit_check.to_string(),
                r.millis.to_string(),
            ],
        })
        .collect()
}

/// Extracts rows from a parsed report file, validating the schema.
pub fn value_rows(value: &serde_json::Value) -> anyhow::Result<Vec<Row>> {
    let version = value
        .get("version")
        .and_then(|v| v.as_str())
        .ok_or_else(|| anyhow::anyhow!("missing report version"))?;
    anyhow::ensure!(version == "1", "unsupported report version {}", version);
    let records = value
        .get("records")
        .and_then(|v| v.as_array())
        .ok_or_else(|| anyhow::anyhow!("missing records array"))?;
    let field = |r: &serde_json::Value, name: &str| -> anyhow::Result<String> {
        let v = r
            .get(name)
            .ok_or_else(|| anyhow::anyhow!("record is missing {}", name))?;
        Ok(match v {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Number(n) => n.to_string(),
            serde_json::Value::Null => String::new(),
            other => anyhow::bail!("unexpected value for {}: {}", name, other),
        })
    };
    records
        .iter()
        .map(|r| {
            Ok(Row {
                cells: [
                    field(r, "id")?,
                    field(r, "p")?,
                    field(r, "m")?,
                    field(r, "kind")?,
                    field(r, "verdict")?,
                    field(r, "oracle")?,
                    field(r, "limit_check")?,
                    field(r, "millis")?,
                ],
            })
        })
        .collect()
}

pub fn render_table(rows: &[Row]) -> String {
    let mut widths: Vec<usize> = COLUMNS.iter().map(|c| c.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(&row.cells) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |cells: &[String], out: &mut String| {
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(cell);
            out.extend(std::iter::repeat(' ').take(w - cell.len()));
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    };
    let header: Vec<String> = COLUMNS.iter().map(|c| c.to_string()).collect();
    line(&header, &mut out);
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    line(&rule, &mut out);
    for row in rows {
        line(&row.cells, &mut out);
    }
    out
}

pub fn render_csv(rows: &[Row]) -> String {
    let mut out = COLUMNS.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.cells.join(","));
        out.push('\n');
    }
    out
}

pub fn render_summary(report: &Report) -> String {
    let s = &report.summary;
    let mut out = format!(
        "{} instances: {} hold, {} violated, {} not applicable, {} errors\n",
        s.total, s.holds, s.violated, s.not_applicable, s.errors
    );
    if s.oracle_disagreements > 0 || s.limit_disagreements > 0 {
        out.push_str(&format!(
            "cross-checks: {} oracle disagreements, {} limit disagreements\n",
            s.oracle_disagreements, s.limit_disagreements
        ));
    }
    for note in &s.notes {
        out.push_str(&format!("note: {}\n", note));
    }
    out
}
