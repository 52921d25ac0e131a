//! Entangled spin coherent states and bipartite concurrence.
//!
//! This crate constructs SU(2) (spin) coherent states `|Z, j⟩` for arbitrary
//! half-integer spins, builds entangled superpositions of the form
//!
//! ```text
//! |ψ⟩ = N · ( |Z₁,j₁⟩ ⊗ |−Z₂,j₂⟩ + e^{iφ} |−Z₁,j₁⟩ ⊗ |Z₂,j₂⟩ )
//! ```
//!
//! and quantifies their bipartite entanglement with the concurrence:
//!
//! * closed-form pure-state concurrence through a two-qubit embedding
//!   ([`pure`]),
//! * Wootters concurrence and the simplified rank-2 squared concurrence for
//!   statistical mixtures of two such states, with observable lower/upper
//!   bounds and case classification ([`mixed`]),
//! * an independent brute-force verification path working in the full
//!   `(2j₁+1)(2j₂+1)`-dimensional product space ([`fock`]).
//!
//! Grid scans over the coherent amplitudes, CSV/PGM emission and the
//! invariant suites live in [`scan`] and [`verify`]; the `spinent` binary is a
//! thin front end over those modules. Each major capability also has a
//! runnable example under `examples/`.

pub mod fock;
pub mod linalg;
pub mod mixed;
pub mod pure;
pub mod scan;
pub mod su2;
pub mod verify;

pub use num_complex::Complex64;

pub use fock::{exact_mixture_density, fock_state, oracle_concurrence, reduced_density};
pub use linalg::{antihermitian_exp, hermitian_eigen, psd_sqrt, ComplexMatrix, HermitianEigen};
pub use mixed::{
    bounds, classify_case, complex_concurrence, density_matrix, direct_concurrence_sq,
    mixture_quantities, simplified_concurrence_sq, spectral_rank2, wootters_concurrence,
    CaseLabel, ConcurrenceBounds, DensityMatrix4, MixtureQuantities, RankTwoMixture,
    SpectralPair,
};
pub use pure::{
    concurrence_pure, concurrence_two_qubit, embedding, is_bell, to_two_qubit, EmbeddingData,
    EntangledScsParams, TwoQubitPure,
};
pub use su2::{
    coherent_amplitudes, ladder_matrices, overlap, overlap_minus, rotation_coherent,
    tensor_state, FockVector, SpinCoherentParam, SpinJ,
};

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |A - A^H| = {residual:.3e} exceeds tol {tol:.3e}")]
    NotHermitian { residual: f64, tol: f64 },
    #[error("Jacobi iteration did not converge in {sweeps} sweeps (off-diagonal norm {off:.3e})")]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:.3e}")]
    NotPsd { eigenvalue: f64 },
    #[error("matrix is not anti-Hermitian: max |A + A^H| = {residual:.3e}")]
    NotAntiHermitian { residual: f64 },
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },
    #[error("spin mismatch: 2j = {left} vs 2j = {right}")]
    SpinMismatch { left: u32, right: u32 },
    #[error("theta is within 1e-8 of pi; Z = tan(theta/2) e^(i phi) diverges")]
    ThetaNearPi,
    #[error("degenerate state: 1 + cos(phi) P1 P2 = {denom:.3e} is not positive")]
    DegenerateState { denom: f64 },
    #[error("not a density matrix: {reason}")]
    NotDensityMatrix { reason: String },
    #[error("rank exceeds 2: third eigenvalue {third:.3e}")]
    RankExceeded { third: f64 },
    #[error("invalid mixture: {reason}")]
    InvalidMixture { reason: String },
    #[error("invalid configuration: {reason}")]
    InvalidConfig { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
