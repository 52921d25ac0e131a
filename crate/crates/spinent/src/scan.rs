//! Grid scans over coherent amplitudes, CSV emission and PGM heatmaps.
//!
//! Scans sweep real non-negative amplitudes `z1, z2` over a uniform grid.
//! The concurrence of the state family depends on the amplitudes only
//! through their moduli, so real scans lose nothing. Output is fixed at nine
//! significant digits with `\n` line endings, byte-for-byte reproducible for
//! identical configurations.

use num_complex::Complex64;

use crate::mixed::{
    classify_case, density_matrix, direct_concurrence_sq, simplified_concurrence_sq,
    spectral_rank2, wootters_concurrence, CaseLabel, RankTwoMixture,
};
use crate::pure::{concurrence_pure, EntangledScsParams};
use crate::su2::SpinJ;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    Pure,
    Mixed,
}

/// Scan definition. In mixed mode the first component sweeps the grid while
/// the second is pinned at real amplitudes `(z1b, z2b)` with phase `phi2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    pub mode: ScanMode,
    pub two_j1: u32,
    pub two_j2: u32,
    pub phi: f64,
    pub phi2: f64,
    pub p1: f64,
    pub z1b: f64,
    pub z2b: f64,
    pub zmin: f64,
    pub zmax: f64,
    pub steps: usize,
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.zmin >= 0.0) {
            return Err(Error::InvalidConfig {
                reason: format!("zmin must be >= 0, got {}", self.zmin),
            });
        }
        if !(self.zmax > self.zmin) {
            return Err(Error::InvalidConfig {
                reason: format!("zmax ({}) must exceed zmin ({})", self.zmax, self.zmin),
            });
        }
        if self.steps < 2 {
            return Err(Error::InvalidConfig {
                reason: format!("steps must be >= 2, got {}", self.steps),
            });
        }
        if self.mode == ScanMode::Mixed && !(0.0..=1.0).contains(&self.p1) {
            return Err(Error::InvalidConfig {
                reason: format!("p1 must lie in [0, 1], got {}", self.p1),
            });
        }
        Ok(())
    }

    pub fn grid_value(&self, index: usize) -> f64 {
        self.zmin + (self.zmax - self.zmin) * index as f64 / (self.steps - 1) as f64
    }
}

/// Named reconstructions of the published scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Fig1a,
    Fig1b,
    Fig1c,
    Fig1d,
    Fig2a,
    Fig2b,
    Fig2c,
    Fig3,
    Fig4,
}

impl Preset {
    pub const ALL_NAMES: [&'static str; 9] = [
        "fig1a", "fig1b", "fig1c", "fig1d", "fig2a", "fig2b", "fig2c", "fig3", "fig4",
    ];

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "fig1a" => Preset::Fig1a,
            "fig1b" => Preset::Fig1b,
            "fig1c" => Preset::Fig1c,
            "fig1d" => Preset::Fig1d,
            "fig2a" => Preset::Fig2a,
            "fig2b" => Preset::Fig2b,
            "fig2c" => Preset::Fig2c,
            "fig3" => Preset::Fig3,
            "fig4" => Preset::Fig4,
            _ => return None,
        })
    }

    pub fn config(self) -> ScanConfig {
        let base = ScanConfig {
            mode: ScanMode::Pure,
            two_j1: 1,
            two_j2: 1,
            phi: 0.0,
            phi2: 0.0,
            p1: 0.5,
            z1b: 1.0,
            z2b: 1.0,
            zmin: 0.0,
            zmax: 3.0,
            steps: 151,
        };
        match self {
            Preset::Fig1a => base,
            Preset::Fig1b => ScanConfig { two_j1: 2, two_j2: 2, ..base },
            Preset::Fig1c => ScanConfig { two_j1: 4, two_j2: 4, ..base },
            Preset::Fig1d => ScanConfig { two_j1: 8, two_j2: 8, ..base },
            Preset::Fig2a => ScanConfig { two_j1: 1, two_j2: 2, ..base },
            Preset::Fig2b => ScanConfig { two_j1: 1, two_j2: 8, ..base },
            Preset::Fig2c => ScanConfig { two_j1: 2, two_j2: 8, ..base },
            Preset::Fig3 => ScanConfig { mode: ScanMode::Mixed, ..base },
            Preset::Fig4 => ScanConfig {
                mode: ScanMode::Mixed,
                z1b: 4.0,
                z2b: 4.0,
                ..base
            },
        }
    }
}

/// Per-point results in mixed mode: both concurrence routes, the Wootters
/// value, the squared bounds and the selected case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedPoint {
    /// Direct-route concurrence `√max(0, C²)`, clamped to `[0, 1]`.
    pub concurrence: f64,
    pub wootters: f64,
    /// Spectral-route squared concurrence.
    pub simplified_sq: f64,
    pub lower: f64,
    pub upper: f64,
    pub case_label: CaseLabel,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScanOutcome {
    /// The grid point names a null state; cells stay empty.
    Degenerate,
    Pure(f64),
    Mixed(MixedPoint),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub z1: f64,
    pub z2: f64,
    pub outcome: ScanOutcome,
}

fn pure_params(cfg: &ScanConfig, z1: f64, z2: f64) -> EntangledScsParams {
    EntangledScsParams {
        j1: SpinJ::from_two_j(cfg.two_j1),
        j2: SpinJ::from_two_j(cfg.two_j2),
        z1: Complex64::new(z1, 0.0),
        z2: Complex64::new(z2, 0.0),
        phi: cfg.phi,
    }
}

/// Evaluate one mixed-mode grid point.
pub fn evaluate_mixed(cfg: &ScanConfig, z1: f64, z2: f64) -> Result<MixedPoint> {
    let comp1 = pure_params(cfg, z1, z2);
    let comp2 = EntangledScsParams {
        j1: SpinJ::from_two_j(cfg.two_j1),
        j2: SpinJ::from_two_j(cfg.two_j2),
        z1: Complex64::new(cfg.z1b, 0.0),
        z2: Complex64::new(cfg.z2b, 0.0),
        phi: cfg.phi2,
    };
    let mixture = RankTwoMixture::new(comp1, comp2, cfg.p1, 1.0 - cfg.p1)?;
    let rho = density_matrix(&mixture)?;
    let wootters = wootters_concurrence(&rho);
    let spectral = spectral_rank2(&rho)?;
    let simplified_sq = simplified_concurrence_sq(&spectral);
    let direct_sq = direct_concurrence_sq(&mixture)?;
    let b = crate::mixed::bounds(&mixture)?;
    let (case_label, _) = classify_case(&mixture)?;
    Ok(MixedPoint {
        concurrence: direct_sq.max(0.0).sqrt().clamp(0.0, 1.0),
        wootters,
        simplified_sq,
        lower: b.lower,
        upper: b.upper,
        case_label,
    })
}

/// Run the scan. Degenerate grid points are recorded, not fatal; the second
/// element counts them.
pub fn run_scan(cfg: &ScanConfig) -> Result<(Vec<ScanRow>, usize)> {
    cfg.validate()?;
    let mut rows = Vec::with_capacity(cfg.steps * cfg.steps);
    let mut degenerate = 0usize;
    for i in 0..cfg.steps {
        let z1 = cfg.grid_value(i);
        for k in 0..cfg.steps {
            let z2 = cfg.grid_value(k);
            let outcome = match cfg.mode {
                ScanMode::Pure => match concurrence_pure(&pure_params(cfg, z1, z2)) {
                    Ok(c) => ScanOutcome::Pure(c),
                    Err(Error::DegenerateState { .. }) => {
                        degenerate += 1;
                        ScanOutcome::Degenerate
                    }
                    Err(e) => return Err(e),
                },
                ScanMode::Mixed => match evaluate_mixed(cfg, z1, z2) {
                    Ok(point) => ScanOutcome::Mixed(point),
                    Err(Error::DegenerateState { .. }) => {
                        degenerate += 1;
                        ScanOutcome::Degenerate
                    }
                    Err(e) => return Err(e),
                },
            };
            rows.push(ScanRow { z1, z2, outcome });
        }
    }
    Ok((rows, degenerate))
}

/// Nine significant digits, locale-independent.
pub fn fmt_sig9(x: f64) -> String {
    format!("{x:.8e}")
}

pub fn csv_header(mode: ScanMode) -> &'static str {
    match mode {
        ScanMode::Pure => "z1,z2,concurrence",
        ScanMode::Mixed => "z1,z2,concurrence,wootters,simplified,lower,upper,case_label",
    }
}

/// Render rows as CSV, header first, `\n` endings, deterministic bytes.
pub fn write_csv(mode: ScanMode, rows: &[ScanRow]) -> String {
    let mut out = String::new();
    out.push_str(csv_header(mode));
    out.push('\n');
    for row in rows {
        out.push_str(&fmt_sig9(row.z1));
        out.push(',');
        out.push_str(&fmt_sig9(row.z2));
        match (&row.outcome, mode) {
            (ScanOutcome::Pure(c), ScanMode::Pure) => {
                out.push(',');
                out.push_str(&fmt_sig9(*c));
            }
            (ScanOutcome::Mixed(p), ScanMode::Mixed) => {
                for v in [p.concurrence, p.wootters, p.simplified_sq, p.lower, p.upper] {
                    out.push(',');
                    out.push_str(&fmt_sig9(v));
                }
                out.push(',');
                out.push_str(p.case_label.as_str());
            }
            (ScanOutcome::Degenerate, ScanMode::Pure) => out.push(','),
            (ScanOutcome::Degenerate, ScanMode::Mixed) => out.push_str(",,,,,,"),
            _ => unreachable!("row mode must match scan mode"),
        }
        out.push('\n');
    }
    out
}

/// Convenience: run a scan and serialize it in one go.
pub fn scan_csv(cfg: &ScanConfig) -> Result<(String, usize)> {
    let (rows, degenerate) = run_scan(cfg)?;
    Ok((write_csv(cfg.mode, &rows), degenerate))
}

/// Render the `concurrence` column of a scan CSV as a binary P5 PGM image.
///
/// Width and height equal the number of grid steps, `z2` runs along the
/// x-axis, pixels are `round(255·concurrence)` and empty cells render as 0.
pub fn heatmap_from_csv(csv: &str) -> Result<Vec<u8>> {
    let mut lines = csv.lines();
    let header = lines.next().ok_or_else(|| Error::InvalidConfig {
        reason: "empty CSV".into(),
    })?;
    let columns: Vec<&str> = header.split(',').collect();
    let col = columns
        .iter()
        .position(|&c| c == "concurrence")
        .ok_or_else(|| Error::InvalidConfig {
            reason: "CSV header has no concurrence column".into(),
        })?;

    let mut pixels = Vec::new();
    for (lineno, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != columns.len() {
            return Err(Error::InvalidConfig {
                reason: format!(
                    "row {} has {} cells, header has {}",
                    lineno + 2,
                    cells.len(),
                    columns.len()
                ),
            });
        }
        let cell = cells[col];
        let pixel = if cell.is_empty() {
            0u8
        } else {
            let value: f64 = cell.parse().map_err(|_| Error::InvalidConfig {
                reason: format!("row {}: unparsable concurrence {cell:?}", lineno + 2),
            })?;
            if !value.is_finite() {
                return Err(Error::InvalidConfig {
                    reason: format!("row {}: non-finite concurrence", lineno + 2),
                });
            }
            (255.0 * value).round().clamp(0.0, 255.0) as u8
        };
        pixels.push(pixel);
    }

    let steps = (pixels.len() as f64).sqrt().round() as usize;
    if steps * steps != pixels.len() || steps == 0 {
        return Err(Error::InvalidConfig {
            reason: format!("{} data rows do not form a square grid", pixels.len()),
        });
    }

    let mut out = format!("P5\n{steps} {steps}\n255\n").into_bytes();
    out.extend_from_slice(&pixels);
    Ok(out)
}
