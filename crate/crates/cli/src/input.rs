//! Reading graphs from planar_code or JSON.

use std::path::Path;

use leapfrog_core::planar_code::{parse_planar_code, HEADER};
use leapfrog_core::planar_map::PlanarMap;

use crate::json::MapJson;
use crate::CliError;

pub fn read_bytes(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

/// Parses planar_code (recognized by its header) or JSON holding one map
/// or an array of maps.
pub fn parse_maps(bytes: &[u8]) -> Result<Vec<PlanarMap>, CliError> {
    if bytes.starts_with(HEADER) {
        return parse_planar_code(bytes).map_err(|e| CliError::Parse(e.to_string()));
    }
    let value: serde_json::Value =
        serde_json::from_slice(bytes).map_err(|e| CliError::Parse(format!("neither planar_code nor JSON: {e}")))?;
    let docs: Vec<MapJson> = match value {
        serde_json::Value::Array(_) => serde_json::from_value(value),
        _ => serde_json::from_value(value).map(|m| vec![m]),
    }
    .map_err(|e| CliError::Parse(format!("bad map JSON: {e}")))?;
    docs.iter()
        .enumerate()
        .map(|(index, m)| {
            m.to_map().map_err(|message| CliError::Invalid { index, message })
        })
        .collect()
}

pub fn read_maps(path: &Path) -> Result<Vec<PlanarMap>, CliError> {
    parse_maps(&read_bytes(path)?)
}

/// Fails early if `out` cannot possibly be created.
pub fn check_output(out: Option<&Path>) -> Result<(), CliError> {
    if let Some(p) = out {
        let parent = p.parent().filter(|d| !d.as_os_str().is_empty());
        if parent.is_some_and(|d| !d.is_dir()) {
            return Err(CliError::OutputDir(p.to_path_buf()));
        }
    }
    Ok(())
}

pub fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Write {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Write {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}
