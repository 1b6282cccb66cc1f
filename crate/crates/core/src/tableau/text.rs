//! Plain text format for fillings: one row per line, cells as base-10
//! integers separated by single spaces, rows top to bottom.
//!
//! ```text
//! 2 1 1 3
//! 3 3 2
//! 4 4
//! ```

use crate::error::{Error, Result};
use crate::tableau::Filling;

/// Parses a filling. Without an explicit `alphabet`, the alphabet size is the
/// larger of the maximum value and the number of rows.
pub fn parse_filling(text: &str, alphabet: Option<u32>) -> Result<Filling> {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "empty filling".into(),
        });
    }
    for (i, line) in body.split('\n').enumerate() {
        let line_no = i + 1;
        let line = line.strip_suffix('\r').unwrap_or(line);
        if line.is_empty() {
            return Err(Error::Parse {
                line: line_no,
                msg: "empty row".into(),
            });
        }
        let mut row = Vec::new();
        for token in line.split(' ') {
            let v: u32 = token.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("{token:?} is not a positive integer (cells are separated by single spaces)"),
            })?;
            if v == 0 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "cell values start at 1".into(),
                });
            }
            row.push(v);
        }
        if let Some(prev) = rows.last() {
            if prev.len() < row.len() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!(
                        "row of length {} below a row of length {}",
                        row.len(),
                        prev.len()
                    ),
                });
            }
        }
        rows.push(row);
    }
    let max = rows.iter().flatten().copied().max().unwrap_or(1);
    let alphabet = alphabet.unwrap_or_else(|| max.max(rows.len() as u32));
    Filling::from_rows(&rows, alphabet)
}

/// Emits the text format, ending with a newline.
pub fn to_text(filling: &Filling) -> String {
    let mut out = String::new();
    for row in filling.rows() {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
