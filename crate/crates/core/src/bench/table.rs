use std::fmt;
use std::str::FromStr;

use super::BenchRow;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
}

impl fmt::Display for TableFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableFormat::Csv => "csv",
            TableFormat::Markdown => "markdown",
        })
    }
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "markdown" | "md" => Ok(TableFormat::Markdown),
            other => Err(Error::InvalidArgument(format!("unknown table format `{other}`"))),
        }
    }
}

/// Renders rows as a table with one column per facet count.
pub fn emit_table(rows: &[BenchRow], format: TableFormat) -> Result<String> {
    if rows.is_empty() {
        return Err(Error::EmptyTable);
    }
    let quantities: [(&str, fn(&BenchRow) -> f64); 7] = [
        ("T_CB", |r| r.t_cb),
        ("T_rho", |r| r.t_rho),
        ("T", |r| r.t),
        ("v1", |r| r.v1),
        ("v2", |r| r.v2),
        ("mean_walk_visits", |r| r.mean_walk_visits),
        ("mean_cb_steps_rho", |r| r.mean_cb_steps_rho),
    ];
    let header: Vec<String> = std::iter::once("N".to_string())
        .chain(rows.iter().map(|r| r.n_facets.to_string()))
        .collect();
    let body: Vec<Vec<String>> = quantities
        .iter()
        .map(|(name, get)| {
            std::iter::once(name.to_string())
                .chain(rows.iter().map(|r| get(r).to_string()))
                .collect()
        })
        .collect();

    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            for line in std::iter::once(&header).chain(&body) {
                out.push_str(&line.join(","));
                out.push('\n');
            }
        }
        TableFormat::Markdown => {
            let pipe = |cells: &[String]| format!("| {} |\n", cells.join(" | "));
            out.push_str(&pipe(&header));
            out.push_str(&pipe(&vec!["---".to_string(); header.len()]));
            for line in &body {
                out.push_str(&pipe(line));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clip::Counters;

    fn row(n: usize) -> BenchRow {
        BenchRow {
            n_facets: n,
            lines: 10,
            t_cb: 2.0,
            t_rho: 1.5,
            t: 0.5,
            v1: 4.0,
            v2: 3.0,
            mean_walk_visits: 7.25,
            mean_cb_steps_rho: 3.0,
            mean_cb_steps_sqrt: 2.0,
            sqrt_fallbacks: 0,
            totals_cb: Counters::default(),
            totals_rho: Counters::default(),
            totals_sqrt: Counters::default(),
        }
    }

    #[test]
    fn csv_has_header_and_seven_rows() {
        let text = emit_table(&[row(10)], TableFormat::Csv).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 8);
        assert_eq!(lines[0], "N,10");
        assert_eq!(lines[1], "T_CB,2");
        assert_eq!(lines[4], "v1,4");
        assert_eq!(lines[6], "mean_walk_visits,7.25");
    }

    #[test]
    fn csv_columns_follow_rows() {
        let text = emit_table(&[row(10), row(50), row(200)], TableFormat::Csv).unwrap();
        assert!(text.starts_with("N,10,50,200\n"));
        assert!(text.lines().all(|l| l.split(',').count() == 4));
    }

    #[test]
    fn markdown_is_a_pipe_table() {
        let text = emit_table(&[row(10), row(50)], TableFormat::Markdown).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 9);
        assert_eq!(lines[0], "| N | 10 | 50 |");
        assert_eq!(lines[1], "| --- | --- | --- |");
        assert!(lines.iter().all(|l| l.starts_with('|') && l.ends_with('|')));
    }

    #[test]
    fn empty_rows_are_rejected() {
        assert_eq!(emit_table(&[], TableFormat::Csv).unwrap_err(), Error::EmptyTable);
    }
}
