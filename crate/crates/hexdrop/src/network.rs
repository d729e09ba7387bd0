//! Whole-network assembly: per-cell, per-sector sampling with rotation into
//! the right sector and translation onto the lattice.
//!
//! Each cell is described by five values: its lattice index (m, n), its size
//! L, its sector count (1, 3, or 6), and the node count per sector. Sector 1
//! is the unrotated base shape; ids ascend counterclockwise, sector s being
//! rotated by (s − 1)·360°/S.
//!
//! Network generation derives one substream per cell from the master seed and
//! (m, n), so the output is a pure function of (config, seed) no matter how
//! cells are scheduled across threads.

use crate::geometry::{CellShape, LatticeIndex, ParityError, Point, ShapeKind};
use crate::samplers::{sample_point, RandomStream, UnitSource};
use rayon::prelude::*;
use thiserror::Error;

/// Semantic problem in a network description.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("sector count must be 1, 3, or 6, got {0}")]
    SectorCount(usize),
    #[error("sector id {id} out of range 1..={count}")]
    SectorId { id: usize, count: usize },
    #[error("cell ({m}, {n}): nodes list has {got} entries, expected {expected}")]
    NodeListLength {
        m: i64,
        n: i64,
        got: usize,
        expected: usize,
    },
    #[error("duplicate cell index ({m}, {n})")]
    DuplicateCell { m: i64, n: i64 },
    #[error("cell ({m}, {n}): size {size} exceeds the reference size {reference}")]
    OversizedCell {
        m: i64,
        n: i64,
        size: f64,
        reference: f64,
    },
    #[error("cell ({m}, {n}): size must be positive and finite, got {size}")]
    BadCellSize { m: i64, n: i64, size: f64 },
    #[error("reference size must be positive and finite, got {0}")]
    BadReferenceSize(f64),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NetworkError {
    #[error(transparent)]
    Parity(#[from] ParityError),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

/// How a cell is split among directional antennas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sectoring {
    /// One omni-directional antenna covering the whole hexagon.
    Omni,
    /// Three 120° sectors, each a rhombus.
    Three,
    /// Six 60° sectors, each an equilateral triangle.
    Six,
}

impl Sectoring {
    pub fn count(self) -> usize {
        match self {
            Sectoring::Omni => 1,
            Sectoring::Three => 3,
            Sectoring::Six => 6,
        }
    }

    pub fn from_count(count: usize) -> Result<Self, ConfigError> {
        match count {
            1 => Ok(Sectoring::Omni),
            3 => Ok(Sectoring::Three),
            6 => Ok(Sectoring::Six),
            other => Err(ConfigError::SectorCount(other)),
        }
    }

    /// The shape sampled for one sector of this kind.
    pub fn base_kind(self) -> ShapeKind {
        match self {
            Sectoring::Omni => ShapeKind::Hexagon,
            Sectoring::Three => ShapeKind::Rhombus,
            Sectoring::Six => ShapeKind::Triangle,
        }
    }

    pub fn base_shape(self, side: f64) -> CellShape {
        CellShape::new(self.base_kind(), side)
    }

    /// Counterclockwise rotation that places the base shape into sector
    /// `sector_id` (1-based): (sector_id − 1)·2π/count.
    pub fn sector_angle(self, sector_id: usize) -> Result<f64, ConfigError> {
        let count = self.count();
        if sector_id < 1 || sector_id > count {
            return Err(ConfigError::SectorId {
                id: sector_id,
                count,
            });
        }
        Ok((sector_id - 1) as f64 * std::f64::consts::TAU / count as f64)
    }
}

/// The five values describing one cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellSpec {
    pub idx: LatticeIndex,
    /// Cell size (hexagon circumradius); at most the network reference size.
    pub size: f64,
    pub sectoring: Sectoring,
    /// Node count per sector, sector 1 first. Length must equal the sector count.
    pub nodes_per_sector: Vec<u32>,
}

impl CellSpec {
    pub fn total_nodes(&self) -> usize {
        self.nodes_per_sector.iter().map(|&n| n as usize).sum()
    }

    fn validate(&self, reference_size: f64) -> Result<(), ConfigError> {
        let LatticeIndex { m, n } = self.idx;
        if !(self.size.is_finite() && self.size > 0.0) {
            return Err(ConfigError::BadCellSize {
                m,
                n,
                size: self.size,
            });
        }
        if self.size > reference_size {
            return Err(ConfigError::OversizedCell {
                m,
                n,
                size: self.size,
                reference: reference_size,
            });
        }
        if self.nodes_per_sector.len() != self.sectoring.count() {
            return Err(ConfigError::NodeListLength {
                m,
                n,
                got: self.nodes_per_sector.len(),
                expected: self.sectoring.count(),
            });
        }
        Ok(())
    }
}

/// A whole network: the lattice reference size plus its cells.
///
/// The reference size sets the lattice pitch; individual cells may be smaller
/// but never larger, which would overlap neighbors.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkConfig {
    pub reference_size: f64,
    pub cells: Vec<CellSpec>,
}

impl NetworkConfig {
    pub fn total_nodes(&self) -> usize {
        self.cells.iter().map(CellSpec::total_nodes).sum()
    }

    pub fn validate(&self) -> Result<(), NetworkError> {
        if !(self.reference_size.is_finite() && self.reference_size > 0.0) {
            return Err(ConfigError::BadReferenceSize(self.reference_size).into());
        }
        let mut seen = std::collections::HashSet::new();
        for cell in &self.cells {
            cell.validate(self.reference_size)?;
            if !cell.idx.is_valid() {
                return Err(ParityError {
                    m: cell.idx.m,
                    n: cell.idx.n,
                }
                .into());
            }
            if !seen.insert(cell.idx) {
                return Err(ConfigError::DuplicateCell {
                    m: cell.idx.m,
                    n: cell.idx.n,
                }
                .into());
            }
        }
        Ok(())
    }
}

/// A generated node position tagged with its cell and sector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabeledPoint {
    pub m: i64,
    pub n: i64,
    /// 1-based sector id.
    pub sector_id: u32,
    /// Absolute position (cell frame rotated into the sector, translated to
    /// the cell center).
    pub p: Point,
}

/// Generate all nodes of one cell, sector by sector, from `rng`.
///
/// For sector s the base shape is sampled `nodes_per_sector[s−1]` times,
/// rotated by the sector angle, and translated to the cell center. Output
/// order is (sector ascending, draw order).
pub fn generate_cell<R: UnitSource>(
    spec: &CellSpec,
    reference_size: f64,
    rng: &mut R,
) -> Result<Vec<LabeledPoint>, NetworkError> {
    spec.validate(reference_size)?;
    let center = spec.idx.cell_center(reference_size)?;
    let base = spec.sectoring.base_shape(spec.size);
    let mut out = Vec::with_capacity(spec.total_nodes());
    for (i, &count) in spec.nodes_per_sector.iter().enumerate() {
        let sector_id = i + 1;
        let angle = spec.sectoring.sector_angle(sector_id)?;
        for _ in 0..count {
            let p = sample_point(base, rng).rotated(angle).translated(center);
            out.push(LabeledPoint {
                m: spec.idx.m,
                n: spec.idx.n,
                sector_id: sector_id as u32,
                p,
            });
        }
    }
    Ok(out)
}

fn cell_stream(master_seed: u64, idx: LatticeIndex) -> RandomStream {
    RandomStream::substream(master_seed, idx.m as u64, idx.n as u64)
}

fn collect_cells<I>(cfg: &NetworkConfig, cells: I) -> Result<Vec<LabeledPoint>, NetworkError>
where
    I: IntoIterator<Item = Result<Vec<LabeledPoint>, NetworkError>>,
{
    let mut out = Vec::with_capacity(cfg.total_nodes());
    for cell in cells {
        out.extend(cell?);
    }
    Ok(out)
}

/// Generate the whole network, evaluating cells in parallel.
///
/// Each cell draws from a substream derived from (master_seed, m, n), so the
/// result is identical to [`generate_network_serial`] and independent of the
/// thread schedule. Cells appear in config order.
pub fn generate_network(
    cfg: &NetworkConfig,
    master_seed: u64,
) -> Result<Vec<LabeledPoint>, NetworkError> {
    cfg.validate()?;
    let per_cell: Vec<Result<Vec<LabeledPoint>, NetworkError>> = cfg
        .cells
        .par_iter()
        .map(|spec| {
            let mut rng = cell_stream(master_seed, spec.idx);
            generate_cell(spec, cfg.reference_size, &mut rng)
        })
        .collect();
    collect_cells(cfg, per_cell)
}

/// Single-threaded variant of [`generate_network`]; byte-identical output.
pub fn generate_network_serial(
    cfg: &NetworkConfig,
    master_seed: u64,
) -> Result<Vec<LabeledPoint>, NetworkError> {
    cfg.validate()?;
    collect_cells(
        cfg,
        cfg.cells.iter().map(|spec| {
            let mut rng = cell_stream(master_seed, spec.idx);
            generate_cell(spec, cfg.reference_size, &mut rng)
        }),
    )
}
