use clap::ValueEnum;
use serde_json::Value;
use symstab::stability::Table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
    Latex,
}

/// One command's result in every rendering.
pub struct Output {
    /// Plain-text rendering; falls back to the table when absent.
    pub text: Option<String>,
    pub table: Table,
    pub json: Value,
    /// Nonzero when the result itself is a failure, e.g. a fixture mismatch.
    pub exit_code: u8,
}

impl Output {
    pub fn new(table: Table, json: Value) -> Self {
        Output { text: None, table, json, exit_code: 0 }
    }

    pub fn with_text(mut self, text: impl Into<String>) -> Self {
        self.text = Some(text.into());
        self
    }

    pub fn with_exit_code(mut self, code: u8) -> Self {
        self.exit_code = code;
        self
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => match &self.text {
                Some(t) => format!("{t}\n"),
                None => self.table.to_text(),
            },
            OutputFormat::Json => format!("{}\n", serde_json::to_string_pretty(&self.json).expect("serializable")),
            OutputFormat::Csv => self.table.to_csv(),
            OutputFormat::Latex => self.table.to_latex(),
        }
    }
}
