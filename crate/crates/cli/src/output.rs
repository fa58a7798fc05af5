use std::fmt;

use qcyclic::Error;

use crate::Format;

/// One command's result in every output format.
pub struct Report {
    pub json: serde_json::Value,
    pub csv: String,
    pub text: String,
    pub default: Format,
}

impl Report {
    pub fn render(&self, format: Option<Format>) -> String {
        match format.unwrap_or(self.default) {
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&self.json).expect("serialisable")),
            Format::Csv => self.csv.clone(),
            Format::Text => self.text.clone(),
        }
    }
}

/// An error with an explicit exit code.
#[derive(Debug)]
pub struct Exit {
    pub code: u8,
    pub msg: String,
}

impl Exit {
    pub fn invalid(msg: impl Into<String>) -> anyhow::Error {
        Exit { code: 2, msg: msg.into() }.into()
    }
}

impl fmt::Display for Exit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.msg)
    }
}

impl std::error::Error for Exit {}

/// 2 invalid input, 3 no applicable construction, 4 internal invariant failure.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    if let Some(x) = e.downcast_ref::<Exit>() {
        return x.code;
    }
    match e.downcast_ref::<Error>() {
        Some(Error::NoConstruction(_)) => 3,
        Some(Error::Invariant(_)) | Some(Error::InconsistentBounds { .. }) => 4,
        _ => 2,
    }
}

/// Quotes a CSV field when needed.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_line(fields: &[String]) -> String {
    let mut line = fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",");
    line.push('\n');
    line
}

pub fn join<T: fmt::Display>(xs: &[T], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}
