//! Input loading, digests, atomic output, and the append-only run manifest.

use std::fmt;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use equilib_core::{IntervalUnion, Measure};
use serde::Serialize;

/// One error type for the whole binary; everything maps to exit code 1
/// except criterion failures, which the handlers turn into exit code 2.
#[derive(Debug)]
pub enum CliError {
    Core(equilib_core::Error),
    Weil(equilib_weil::Error),
    Io(std::io::Error),
    Json(serde_json::Error),
    Csv(csv::Error),
    Msg(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Weil(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Json(e) => write!(f, "{e}"),
            CliError::Csv(e) => write!(f, "{e}"),
            CliError::Msg(m) => write!(f, "{m}"),
        }
    }
}

impl From<equilib_core::Error> for CliError {
    fn from(e: equilib_core::Error) -> Self {
        CliError::Core(e)
    }
}
impl From<equilib_weil::Error> for CliError {
    fn from(e: equilib_weil::Error) -> Self {
        CliError::Weil(e)
    }
}
impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}
impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}
impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Csv(e)
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    use sha2::{Digest, Sha256};
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[derive(Serialize)]
struct InputRecord {
    source: String,
    sha256: String,
}

/// Accumulates the manifest entry for one invocation; appended as a single
/// JSONL line when the command finishes, success or not.
#[derive(Serialize)]
pub struct RunRecord {
    command: String,
    argv: Vec<String>,
    inputs: Vec<InputRecord>,
    config: serde_json::Value,
    outputs: Vec<String>,
    wall_time: f64,
}

impl RunRecord {
    pub fn new(command: &str, argv: Vec<String>) -> Self {
        RunRecord {
            command: command.to_string(),
            argv,
            inputs: Vec::new(),
            config: serde_json::Value::Null,
            outputs: Vec::new(),
            wall_time: 0.0,
        }
    }

    pub fn record_file_input(&mut self, path: &Path, bytes: &[u8]) {
        self.inputs.push(InputRecord {
            source: path.display().to_string(),
            sha256: sha256_hex(bytes),
        });
    }

    pub fn record_inline_input(&mut self, text: &str) {
        self.inputs.push(InputRecord {
            source: "inline".to_string(),
            sha256: sha256_hex(text.as_bytes()),
        });
    }

    pub fn set_config(&mut self, config: serde_json::Value) {
        self.config = config;
    }

    pub fn record_output(&mut self, path: &Path) {
        self.outputs.push(path.display().to_string());
    }

    pub fn set_wall_time(&mut self, seconds: f64) {
        self.wall_time = seconds;
    }

    pub fn append_to(&self, path: &Path) -> std::io::Result<()> {
        let mut line = serde_json::to_string(self).map_err(std::io::Error::other)?;
        line.push('\n');
        let mut f = OpenOptions::new().create(true).append(true).open(path)?;
        f.write_all(line.as_bytes())
    }
}

/// Writes the whole file through a temporary sibling plus rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let parent = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from("."));
    let mut tmp = tempfile::NamedTempFile::new_in(parent)?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| CliError::Io(e.error))?;
    Ok(())
}

pub fn load_measure(path: &Path, rec: &mut RunRecord) -> Result<Measure, CliError> {
    let bytes = fs::read(path)
        .map_err(|e| CliError::Msg(format!("cannot read measure {}: {e}", path.display())))?;
    rec.record_file_input(path, &bytes);
    Ok(serde_json::from_slice(&bytes)?)
}

/// `--compact` accepts either inline JSON (first non-blank byte `{`) or a
/// path to a JSON file.
pub fn load_interval_union(spec: &str, rec: &mut RunRecord) -> Result<IntervalUnion, CliError> {
    if spec.trim_start().starts_with('{') {
        rec.record_inline_input(spec);
        Ok(serde_json::from_str(spec)?)
    } else {
        let bytes = fs::read(spec)
            .map_err(|e| CliError::Msg(format!("cannot read interval union {spec}: {e}")))?;
        rec.record_file_input(Path::new(spec), &bytes);
        Ok(serde_json::from_slice(&bytes)?)
    }
}

/// "-inf" / "inf" literals for infinities, shortest round-trip otherwise.
pub fn fmt_num(v: f64) -> String {
    if v == f64::NEG_INFINITY {
        "-inf".to_string()
    } else if v == f64::INFINITY {
        "inf".to_string()
    } else {
        format!("{v}")
    }
}

/// JSON number when finite, the `fmt_num` literal as a string otherwise.
pub fn json_num(v: f64) -> serde_json::Value {
    if v.is_finite() {
        serde_json::json!(v)
    } else {
        serde_json::Value::String(fmt_num(v))
    }
}

/// Prints the value to stdout and mirrors the same bytes to `out` if given.
pub fn emit_json<T: Serialize>(
    value: &T,
    out: Option<&Path>,
    rec: &mut RunRecord,
) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    print!("{text}");
    if let Some(path) = out {
        write_atomic(path, text.as_bytes())?;
        rec.record_output(path);
    }
    Ok(())
}

/// Finished CSV bytes go to `out` when given, stdout otherwise.
pub fn emit_csv(bytes: Vec<u8>, out: Option<&Path>, rec: &mut RunRecord) -> Result<(), CliError> {
    match out {
        Some(path) => {
            write_atomic(path, &bytes)?;
            rec.record_output(path);
        }
        None => {
            std::io::stdout().write_all(&bytes)?;
        }
    }
    Ok(())
}
