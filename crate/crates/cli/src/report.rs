//! Reports: a human table plus a JSON rendering that carries the same lines.

use serde::Serialize;
use sha2::{Digest, Sha256};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs_digest: String,
    pub lines: Vec<String>,
    pub data: serde_json::Value,
    pub exit_status: i32,
}

/// SHA-256 over the command echo and every input document, length-framed.
pub fn digest(command: &str, inputs: &[(String, String)]) -> String {
    let mut h = Sha256::new();
    for part in std::iter::once(command).chain(inputs.iter().flat_map(|(n, t)| [n.as_str(), t.as_str()])) {
        h.update((part.len() as u64).to_le_bytes());
        h.update(part.as_bytes());
    }
    format!("{:x}", h.finalize())
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => {
                let mut out = format!("# idealhom {}\n# inputs sha256:{}\n", self.command, self.inputs_digest);
                for l in &self.lines {
                    out.push_str(l);
                    out.push('\n');
                }
                out.push_str(&format!("# exit {}\n", self.exit_status));
                out
            }
            Format::Machine => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
        }
    }
}

/// Left-aligned columns separated by two spaces; the last column is not padded.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> Vec<String> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let last = cells.len().saturating_sub(1);
        let mut s = String::new();
        for (k, c) in cells.iter().enumerate() {
            s.push_str(c);
            if k < last {
                s.push_str(&" ".repeat(widths[k] - c.chars().count() + 2));
            }
        }
        s.trim_end().to_string()
    };
    let mut out = vec![line(header.to_vec())];
    out.extend(rows.iter().map(|r| line(r.iter().map(String::as_str).collect())));
    out
}
