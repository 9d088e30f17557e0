use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;

/// Failure classes mapped onto the exit-code contract.
#[derive(Debug)]
pub enum Failure {
    /// Malformed or missing input: exit 2.
    Input(String),
    /// A hypothesis or certificate check failed: exit 1 with a report.
    Rejected(serde_json::Value),
}

impl Failure {
    pub fn input(e: impl std::fmt::Display) -> Self {
        Failure::Input(e.to_string())
    }
}

pub type CmdResult = Result<Outcome, Failure>;

/// A report and the exit code it carries.
pub struct Outcome {
    pub code: i32,
    pub body: serde_json::Value,
}

impl Outcome {
    pub fn new(code: i32, body: impl Serialize) -> Result<Self, Failure> {
        Ok(Self { code, body: serde_json::to_value(body).map_err(Failure::input)? })
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

pub fn render(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

pub fn emit(out: Option<&Path>, contents: &str) -> std::io::Result<()> {
    match out {
        Some(path) => write_atomic(path, contents),
        None => std::io::stdout().write_all(contents.as_bytes()),
    }
}
