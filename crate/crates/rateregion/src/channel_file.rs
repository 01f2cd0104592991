//! JSON channel files.
//!
//! ```json
//! { "n": 2, "gains": [[10, 1], [4, 10]], "units": "linear", "noise_var": 1, "p_max": 1 }
//! ```
//!
//! `gains` is row-per-receiver: row `i` lists what receiver `i` hears from
//! each transmitter. `units` is `"linear"` (the default) or `"dB"`; only
//! the gains are affected, `noise_var` and `p_max` are always linear.

use std::fmt;
use std::path::Path;

use rateregion_core::{db_to_linear, ChannelInstance};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq)]
pub enum FileError {
    /// The text is not valid JSON, or a field has the wrong JSON type.
    Syntax {
        line: usize,
        column: usize,
        msg: String,
    },
    /// A field parsed but its value is unusable.
    Field {
        field: &'static str,
        line: Option<usize>,
        msg: String,
    },
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FileError::Syntax { line, column, msg } => {
                write!(f, "line {line}, column {column}: {msg}")
            }
            FileError::Field {
                field,
                line: Some(line),
                msg,
            } => write!(f, "line {line}, field `{field}`: {msg}"),
            FileError::Field {
                field,
                line: None,
                msg,
            } => write!(f, "field `{field}`: {msg}"),
        }
    }
}

impl std::error::Error for FileError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Units {
    #[default]
    #[serde(rename = "linear")]
    Linear,
    #[serde(rename = "dB")]
    Db,
}

#[derive(Serialize, Deserialize)]
struct RawChannel {
    n: usize,
    gains: Vec<Vec<f64>>,
    #[serde(default)]
    units: Units,
    noise_var: f64,
    p_max: f64,
}

pub fn parse_channel(text: &str) -> Result<ChannelInstance, FileError> {
    let raw: RawChannel = serde_json::from_str(text).map_err(|e| FileError::Syntax {
        line: e.line(),
        column: e.column(),
        msg: strip_position(&e.to_string()),
    })?;
    let bad = |field: &'static str, msg: String| FileError::Field {
        field,
        line: line_of(text, field),
        msg,
    };

    if raw.n == 0 {
        return Err(bad("n", "must be at least 1".into()));
    }
    if raw.gains.len() != raw.n {
        return Err(bad(
            "gains",
            format!("expected {} rows, found {}", raw.n, raw.gains.len()),
        ));
    }
    if let Some((i, row)) = raw.gains.iter().enumerate().find(|(_, r)| r.len() != raw.n) {
        return Err(bad(
            "gains",
            format!(
                "row {} has {} entries, expected {}",
                i + 1,
                row.len(),
                raw.n
            ),
        ));
    }
    let gains: Vec<Vec<f64>> = match raw.units {
        Units::Linear => raw.gains,
        Units::Db => raw
            .gains
            .into_iter()
            .map(|r| r.into_iter().map(db_to_linear).collect())
            .collect(),
    };
    if gains
        .iter()
        .flatten()
        .any(|g| !(g.is_finite() && *g >= 0.0))
    {
        return Err(bad("gains", "gains must be finite and non-negative".into()));
    }
    if !(raw.noise_var.is_finite() && raw.noise_var > 0.0) {
        return Err(bad("noise_var", "must be finite and positive".into()));
    }
    if !(raw.p_max.is_finite() && raw.p_max > 0.0) {
        return Err(bad("p_max", "must be finite and positive".into()));
    }
    // silent links are kept; operations that need them non-zero reject later
    let silent = (0..raw.n).any(|i| gains[i][i] == 0.0);
    let built = if silent {
        ChannelInstance::new_degenerate(gains, raw.noise_var, raw.p_max)
    } else {
        ChannelInstance::new(gains, raw.noise_var, raw.p_max)
    };
    built.map_err(|e| bad("gains", e.to_string()))
}

pub fn read_channel(path: &Path) -> anyhow::Result<ChannelInstance> {
    use anyhow::Context;
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_channel(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Serializes with linear units; [`parse_channel`] reads it back unchanged.
pub fn write_channel(ch: &ChannelInstance) -> String {
    let raw = RawChannel {
        n: ch.n(),
        gains: ch.gain_rows(),
        units: Units::Linear,
        noise_var: ch.noise_var(),
        p_max: ch.p_max(),
    };
    let mut out = serde_json::to_string_pretty(&raw).expect("channel serializes");
    out.push('\n');
    out
}

fn line_of(text: &str, field: &str) -> Option<usize> {
    let key = format!("\"{field}\"");
    text.lines().position(|l| l.contains(&key)).map(|i| i + 1)
}

// serde_json appends " at line L column C"; the position is reported separately
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(idx) => msg[..idx].to_string(),
        None => msg.to_string(),
    }
}
