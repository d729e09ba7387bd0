//! The network config file format.
//!
//! Line-oriented `key=value`, one record per line, so it is trivially
//! parseable and diff-friendly:
//!
//! ```text
//! # comment lines and blank lines are ignored
//! lattice L0=250
//! cell m=0 n=0 sectors=6 nodes=100,100,100,100,100,100
//! cell m=1 n=1 L=200 sectors=3 nodes=40,50,60
//! cell m=0 n=-2 sectors=1 nodes=120
//! ```
//!
//! The `lattice` line must come first and sets the reference size `L0`.
//! Each `cell` line takes the five per-cell values: lattice index `m`, `n`,
//! optional size `L` (default `L0`), sector count `sectors` (1, 3, or 6) and
//! the per-sector node counts `nodes` (comma-separated, one per sector,
//! sector 1 first). Unknown keys are errors.

use crate::geometry::LatticeIndex;
use crate::network::{CellSpec, NetworkConfig, NetworkError, Sectoring};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigFileError {
    /// Syntax problem, with the 1-based source line.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// Structurally valid text describing an invalid network.
    #[error(transparent)]
    Invalid(#[from] NetworkError),
}

fn parse_err(line: usize, message: impl Into<String>) -> ConfigFileError {
    ConfigFileError::Parse {
        line,
        message: message.into(),
    }
}

/// Split a record line into (key, value) pairs, rejecting bare words and
/// duplicate keys.
fn key_values<'a>(
    line_no: usize,
    fields: impl Iterator<Item = &'a str>,
) -> Result<Vec<(&'a str, &'a str)>, ConfigFileError> {
    let mut out: Vec<(&str, &str)> = Vec::new();
    for field in fields {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| parse_err(line_no, format!("expected key=value, got `{field}`")))?;
        if out.iter().any(|&(k, _)| k == key) {
            return Err(parse_err(line_no, format!("duplicate key `{key}`")));
        }
        out.push((key, value));
    }
    Ok(out)
}

fn parse_number<T: std::str::FromStr>(
    line_no: usize,
    key: &str,
    value: &str,
) -> Result<T, ConfigFileError> {
    value
        .parse()
        .map_err(|_| parse_err(line_no, format!("invalid value `{value}` for `{key}`")))
}

/// Parse a config document into a validated [`NetworkConfig`].
pub fn parse_config(text: &str) -> Result<NetworkConfig, ConfigFileError> {
    let mut reference_size: Option<f64> = None;
    let mut cells: Vec<CellSpec> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let record = fields.next().expect("non-empty line has a first field");
        match record {
            "lattice" => {
                if reference_size.is_some() {
                    return Err(parse_err(line_no, "repeated `lattice` line"));
                }
                if !cells.is_empty() {
                    return Err(parse_err(line_no, "`lattice` must precede `cell` lines"));
                }
                let mut l0 = None;
                for (key, value) in key_values(line_no, fields)? {
                    match key {
                        "L0" => l0 = Some(parse_number::<f64>(line_no, key, value)?),
                        other => return Err(parse_err(line_no, format!("unknown key `{other}`"))),
                    }
                }
                reference_size =
                    Some(l0.ok_or_else(|| parse_err(line_no, "`lattice` line needs `L0=`"))?);
            }
            "cell" => {
                let l0 = reference_size
                    .ok_or_else(|| parse_err(line_no, "`cell` before the `lattice` line"))?;
                let (mut m, mut n, mut size, mut sectors, mut nodes) =
                    (None, None, None, None, None);
                for (key, value) in key_values(line_no, fields)? {
                    match key {
                        "m" => m = Some(parse_number::<i64>(line_no, key, value)?),
                        "n" => n = Some(parse_number::<i64>(line_no, key, value)?),
                        "L" => size = Some(parse_number::<f64>(line_no, key, value)?),
                        "sectors" => sectors = Some(parse_number::<usize>(line_no, key, value)?),
                        "nodes" => {
                            let counts: Result<Vec<u32>, _> = value
                                .split(',')
                                .map(|v| parse_number::<u32>(line_no, "nodes", v))
                                .collect();
                            nodes = Some(counts?);
                        }
                        other => return Err(parse_err(line_no, format!("unknown key `{other}`"))),
                    }
                }
                let missing =
                    |what: &str| parse_err(line_no, format!("`cell` line needs `{what}=`"));
                let sector_count = sectors.ok_or_else(|| missing("sectors"))?;
                let sectoring = Sectoring::from_count(sector_count)
                    .map_err(|e| ConfigFileError::Invalid(e.into()))?;
                cells.push(CellSpec {
                    idx: LatticeIndex::new(
                        m.ok_or_else(|| missing("m"))?,
                        n.ok_or_else(|| missing("n"))?,
                    ),
                    size: size.unwrap_or(l0),
                    sectoring,
                    nodes_per_sector: nodes.ok_or_else(|| missing("nodes"))?,
                });
            }
            other => {
                return Err(parse_err(
                    line_no,
                    format!("unknown record `{other}` (expected `lattice` or `cell`)"),
                ))
            }
        }
    }

    let cfg = NetworkConfig {
        reference_size: reference_size
            .ok_or_else(|| parse_err(text.lines().count().max(1), "missing `lattice` line"))?,
        cells,
    };
    cfg.validate()?;
    Ok(cfg)
}

/// Render a config back to its file form. `L` is omitted when it equals the
/// reference size. `parse_config(serialize_config(cfg)) == cfg` for any valid
/// config.
pub fn serialize_config(cfg: &NetworkConfig) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "lattice L0={}", cfg.reference_size).unwrap();
    for cell in &cfg.cells {
        let nodes: Vec<String> = cell.nodes_per_sector.iter().map(u32::to_string).collect();
        write!(out, "cell m={} n={}", cell.idx.m, cell.idx.n).unwrap();
        if cell.size != cfg.reference_size {
            write!(out, " L={}", cell.size).unwrap();
        }
        writeln!(
            out,
            " sectors={} nodes={}",
            cell.sectoring.count(),
            nodes.join(",")
        )
        .unwrap();
    }
    out
}
