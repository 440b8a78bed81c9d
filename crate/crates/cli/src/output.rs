//! Rendering of command results in the four output formats.

use serde::Serialize;

use crate::error::CliError;
use crate::record::ResultRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Jsonl,
    Csv,
    Table,
}

/// Anything that can be laid out as rows of a table or CSV file.
pub trait Tabular {
    fn headers() -> Vec<&'static str>;
    fn row(&self) -> Vec<String>;
}

/// `json` prints a single object when there is exactly one item and an
/// array otherwise.
pub fn render<T: Serialize + Tabular>(items: &[T], format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => {
            let mut s = if items.len() == 1 {
                serde_json::to_string_pretty(&items[0])?
            } else {
                serde_json::to_string_pretty(items)?
            };
            s.push('\n');
            s
        }
        Format::Jsonl => {
            let mut s = String::new();
            for item in items {
                s.push_str(&serde_json::to_string(item)?);
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(T::headers())?;
            for item in items {
                w.write_record(item.row())?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| CliError::Serialize(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| CliError::Serialize(e.to_string()))?
        }
        Format::Table => table(&T::headers(), items.iter().map(Tabular::row).collect()),
    })
}

fn table(headers: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    out.push_str(&line(rule.iter().map(String::as_str).collect()));
    for row in &rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

impl Tabular for ResultRecord {
    fn headers() -> Vec<&'static str> {
        vec![
            "p",
            "p_mod4",
            "case",
            "u",
            "v",
            "identity_ok",
            "gamma_coords",
            "fp",
            "elapsed_ms",
        ]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.p.to_string(),
            self.p_mod4.to_string(),
            self.case_tag.clone(),
            self.u.clone(),
            self.v.clone(),
            self.identity_ok.to_string(),
            self.gamma_coords
                .as_ref()
                .map(|c| c.join(" "))
                .unwrap_or_default(),
            self.fp.clone(),
            format!("{:.3}", self.elapsed_ms),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Row {
        n: u32,
        name: String,
    }

    impl Tabular for Row {
        fn headers() -> Vec<&'static str> {
            vec!["n", "name"]
        }
        fn row(&self) -> Vec<String> {
            vec![self.n.to_string(), self.name.clone()]
        }
    }

    fn rows() -> Vec<Row> {
        vec![
            Row {
                n: 7,
                name: "seven".into(),
            },
            Row {
                n: 13,
                name: "a, b".into(),
            },
        ]
    }

    #[test]
    fn formats() {
        assert_eq!(
            render(&rows(), Format::Jsonl).unwrap(),
            "{\"n\":7,\"name\":\"seven\"}\n{\"n\":13,\"name\":\"a, b\"}\n"
        );
        assert_eq!(
            render(&rows(), Format::Csv).unwrap(),
            "n,name\n7,seven\n13,\"a, b\"\n"
        );
        assert_eq!(
            render(&rows(), Format::Table).unwrap(),
            "n   name\n--  -----\n7   seven\n13  a, b\n"
        );
        let one = render(&rows()[..1], Format::Json).unwrap();
        assert!(one.trim_start().starts_with('{'));
        let many = render(&rows(), Format::Json).unwrap();
        assert!(many.trim_start().starts_with('['));
    }
}
