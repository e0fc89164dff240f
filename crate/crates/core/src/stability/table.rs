//! Plain rectangular tables with text, CSV and LaTeX renderers.

use std::fmt::Write;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub title: Option<String>,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { title: None, headers: headers.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn with_title(mut self, title: impl Into<String>) -> Self {
        self.title = Some(title.into());
        self
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    /// Columns padded to their widest cell, separated by two spaces.
    pub fn to_text(&self) -> String {
        let ncols = self.headers.len();
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (k, cell) in row.iter().enumerate().take(ncols) {
                widths[k] = widths[k].max(cell.chars().count());
            }
        }
        let mut out = String::new();
        if let Some(t) = &self.title {
            writeln!(out, "{t}").unwrap();
        }
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (k, c) in cells.iter().enumerate() {
                if k > 0 {
                    s.push_str("  ");
                }
                s.push_str(c);
                if k + 1 < cells.len() {
                    s.extend(std::iter::repeat_n(' ', widths[k] - c.chars().count()));
                }
            }
            s
        };
        writeln!(out, "{}", line(&self.headers)).unwrap();
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        writeln!(out, "{}", line(&rule)).unwrap();
        for row in &self.rows {
            writeln!(out, "{}", line(row)).unwrap();
        }
        out
    }

    pub fn to_csv(&self) -> String {
        fn field(s: &str) -> String {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&self.headers).chain(&self.rows) {
            let cells: Vec<String> = row.iter().map(|c| field(c)).collect();
            writeln!(out, "{}", cells.join(",")).unwrap();
        }
        out
    }

    pub fn to_latex(&self) -> String {
        fn esc(s: &str) -> String {
            let mut o = String::new();
            for ch in s.chars() {
                match ch {
                    '&' | '%' | '$' | '#' | '_' | '{' | '}' => {
                        o.push('\\');
                        o.push(ch);
                    }
                    '^' => o.push_str("\\^{}"),
                    '~' => o.push_str("\\~{}"),
                    _ => o.push(ch),
                }
            }
            o
        }
        let mut out = String::new();
        if let Some(t) = &self.title {
            writeln!(out, "% {t}").unwrap();
        }
        writeln!(out, "\\begin{{tabular}}{{{}}}", "l".repeat(self.headers.len())).unwrap();
        writeln!(out, "\\hline").unwrap();
        let row = |cells: &[String]| cells.iter().map(|c| esc(c)).collect::<Vec<_>>().join(" & ");
        writeln!(out, "{} \\\\", row(&self.headers)).unwrap();
        writeln!(out, "\\hline").unwrap();
        for r in &self.rows {
            writeln!(out, "{} \\\\", row(r)).unwrap();
        }
        writeln!(out, "\\hline").unwrap();
        writeln!(out, "\\end{{tabular}}").unwrap();
        out
    }
}
