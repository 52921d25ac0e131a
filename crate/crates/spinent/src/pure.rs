//! Entangled spin coherent states and their pure-state concurrence.
//!
//! The state family is
//!
//! ```text
//! |ψ⟩ = N · ( |Z₁,j₁⟩ ⊗ |−Z₂,j₂⟩ + e^{iφ} |−Z₁,j₁⟩ ⊗ |Z₂,j₂⟩ )
//! ```
//!
//! with `N = [2(1 + cos φ · P₁P₂)]^{−1/2}` and `P_k = ⟨Z_k|−Z_k⟩`. Because
//! each subsystem only ever occupies the two-dimensional span of
//! `{|Z_k⟩, |−Z_k⟩}`, the state embeds into a two-qubit space through the
//! orthonormal basis `|0⟩ = |Z_k⟩`, `|1⟩ = (|−Z_k⟩ − P_k|Z_k⟩)/N_k` with
//! `N_k = √(1−|P_k|²)`, giving coordinates
//!
//! ```text
//! |ψ⟩ = N(P₂ + e^{iφ}P₁)|00⟩ + N·N₂|01⟩ + N·e^{iφ}N₁|10⟩.
//! ```
//!
//! The concurrence is then `C = 2N²√((1−|P₁|²)(1−|P₂|²))`, which equals 1
//! exactly on the Bell manifold `|Z₁| = |Z₂| = 1` for any nonzero spins and
//! any relative phase.

use num_complex::Complex64;

use crate::su2::{overlap_minus, SpinCoherentParam, SpinJ};
use crate::{Error, Result};

/// Null-state guard: `1 + cos φ · P₁P₂` at or below this is rejected.
pub const DEGENERACY_FLOOR: f64 = 1e-12;
/// Default tolerance for the Bell-condition test `|Z| = 1`.
pub const DEFAULT_BELL_TOL: f64 = 1e-9;

/// Parameters of one entangled spin coherent state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntangledScsParams {
    pub j1: SpinJ,
    pub j2: SpinJ,
    pub z1: Complex64,
    pub z2: Complex64,
    pub phi: f64,
}

impl EntangledScsParams {
    /// Validating constructor; rejects the null state (reachable only at
    /// `Z₁ = Z₂ = 0, φ = π`, where the two branches cancel).
    pub fn new(j1: SpinJ, j2: SpinJ, z1: Complex64, z2: Complex64, phi: f64) -> Result<Self> {
        let params = Self { j1, j2, z1, z2, phi };
        embedding(&params)?;
        Ok(params)
    }

    pub fn subsystem1(&self) -> SpinCoherentParam {
        SpinCoherentParam::new(self.j1, self.z1)
    }

    pub fn subsystem2(&self) -> SpinCoherentParam {
        SpinCoherentParam::new(self.j2, self.z2)
    }
}

/// Scalars of the two-qubit embedding: overlaps `P₁, P₂`, complement weights
/// `N₁, N₂`, and the normalization factor `N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmbeddingData {
    pub p1: f64,
    pub p2: f64,
    pub n1: f64,
    pub n2: f64,
    pub n: f64,
}

/// Two-qubit amplitudes in the standard basis `{|00⟩, |01⟩, |10⟩, |11⟩}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitPure {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl TwoQubitPure {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self { a, b, c, d }
    }

    pub fn amplitudes(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr() + self.d.norm_sqr()
    }

    pub fn inner(&self, other: &TwoQubitPure) -> Complex64 {
        self.a.conj() * other.a
            + self.b.conj() * other.b
            + self.c.conj() * other.c
            + self.d.conj() * other.d
    }

    /// Equal-weight combination `(self ± other)/√2` (not renormalized).
    pub fn superpose(&self, other: &TwoQubitPure, sign: f64) -> TwoQubitPure {
        let w = Complex64::new(std::f64::consts::FRAC_1_SQRT_2 * sign, 0.0);
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        TwoQubitPure {
            a: self.a * h + other.a * w,
            b: self.b * h + other.b * w,
            c: self.c * h + other.c * w,
            d: self.d * h + other.d * w,
        }
    }
}

/// Overlaps and normalization scalars of the embedding.
pub fn embedding(params: &EntangledScsParams) -> Result<EmbeddingData> {
    let p1 = overlap_minus(params.subsystem1());
    let p2 = overlap_minus(params.subsystem2());
    let denom = 1.0 + params.phi.cos() * p1 * p2;
    if denom <= DEGENERACY_FLOOR {
        return Err(Error::DegenerateState { denom });
    }
    let n = 1.0 / (2.0 * denom).sqrt();
    let n1 = (1.0 - p1 * p1).max(0.0).sqrt();
    let n2 = (1.0 - p2 * p2).max(0.0).sqrt();
    Ok(EmbeddingData { p1, p2, n1, n2, n })
}

/// Two-qubit coordinates of the entangled state:
/// `a = N(P₂ + e^{iφ}P₁)`, `b = N·N₂`, `c = N·e^{iφ}·N₁`, `d = 0`.
pub fn to_two_qubit(params: &EntangledScsParams) -> Result<TwoQubitPure> {
    let emb = embedding(params)?;
    let phase = Complex64::from_polar(1.0, params.phi);
    Ok(TwoQubitPure {
        a: (Complex64::new(emb.p2, 0.0) + phase * emb.p1) * emb.n,
        b: Complex64::new(emb.n * emb.n2, 0.0),
        c: phase * (emb.n * emb.n1),
        d: Complex64::new(0.0, 0.0),
    })
}

/// Concurrence `C = 2|ad − bc|` of a normalized two-qubit state, clamped to `[0, 1]`.
pub fn concurrence_two_qubit(s: &TwoQubitPure) -> f64 {
    (2.0 * (s.a * s.d - s.b * s.c).norm()).clamp(0.0, 1.0)
}

/// Closed-form concurrence `C = 2N²√((1−|P₁|²)(1−|P₂|²))`, clamped to `[0, 1]`.
pub fn concurrence_pure(params: &EntangledScsParams) -> Result<f64> {
    let emb = embedding(params)?;
    Ok((2.0 * emb.n * emb.n * emb.n1 * emb.n2).clamp(0.0, 1.0))
}

/// Bell-manifold test: both amplitudes on the unit circle within `tol`.
/// Whenever this holds the concurrence is 1 (to machine accuracy) for any
/// nonzero spins and any `φ`.
pub fn is_bell(params: &EntangledScsParams, tol: f64) -> bool {
    (params.z1.norm() - 1.0).abs() <= tol && (params.z2.norm() - 1.0).abs() <= tol
}
