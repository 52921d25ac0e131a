//! Brute-force verification path in the full product space.
//!
//! States are assembled literally in the `(2j₁+1)(2j₂+1)`-dimensional tensor
//! basis from coherent amplitudes, reduced by an explicit partial trace, and
//! scored with the purity form of the concurrence. Nothing here touches the
//! two-qubit embedding of [`crate::pure`]; the whole point is an independent
//! route to the same numbers.

use num_complex::Complex64;

use crate::linalg::ComplexMatrix;
use crate::mixed::RankTwoMixture;
use crate::pure::{EntangledScsParams, DEGENERACY_FLOOR};
use crate::su2::{coherent_amplitudes, overlap_minus, FockVector};
use crate::{Error, Result};

/// The entangled state in the full product basis:
/// `N (|Z₁⟩⊗|−Z₂⟩ + e^{iφ}|−Z₁⟩⊗|Z₂⟩)`, not renormalized afterwards, so its
/// norm doubles as a check of the closed-form normalization factor.
pub fn fock_state(params: &EntangledScsParams) -> Result<FockVector> {
    let p1 = overlap_minus(params.subsystem1());
    let p2 = overlap_minus(params.subsystem2());
    let denom = 1.0 + params.phi.cos() * p1 * p2;
    if denom <= DEGENERACY_FLOOR {
        return Err(Error::DegenerateState { denom });
    }
    let n = 1.0 / (2.0 * denom).sqrt();

    let a1 = coherent_amplitudes(params.subsystem1());
    let a1m = coherent_amplitudes(params.subsystem1().negate());
    let a2 = coherent_amplitudes(params.subsystem2());
    let a2m = coherent_amplitudes(params.subsystem2().negate());

    let phase = Complex64::from_polar(1.0, params.phi);
    let branch1 = a1.tensor(&a2m);
    let branch2 = a1m.tensor(&a2).scaled(phase);
    Ok(branch1.add(&branch2).scaled(Complex64::new(n, 0.0)))
}

/// Partial trace over the second subsystem of a pure product-space state.
pub fn reduced_density(state: &FockVector, dim1: usize, dim2: usize) -> Result<ComplexMatrix> {
    if state.dim() != dim1 * dim2 {
        return Err(Error::DimensionMismatch {
            context: format!(
                "state dimension {} != {} x {}",
                state.dim(),
                dim1,
                dim2
            ),
        });
    }
    let mut rho = ComplexMatrix::zeros(dim1, dim1);
    for i in 0..dim1 {
        for ip in 0..dim1 {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..dim2 {
                acc += state.amplitudes[i * dim2 + k] * state.amplitudes[ip * dim2 + k].conj();
            }
            rho[(i, ip)] = acc;
        }
    }
    Ok(rho)
}

/// `Tr ρ²` of a Hermitian matrix, as the squared Frobenius norm.
pub fn purity(rho: &ComplexMatrix) -> f64 {
    rho.entries().iter().map(|z| z.norm_sqr()).sum()
}

/// Brute-force concurrence `C = √(2(1 − Tr ρ_A²))`.
///
/// Valid because the state has Schmidt rank ≤ 2 (two branches), which is
/// asserted on the reduced spectrum before use.
pub fn oracle_concurrence(params: &EntangledScsParams) -> Result<f64> {
    let state = fock_state(params)?;
    let d1 = params.j1.dim();
    let d2 = params.j2.dim();
    let rho = reduced_density(&state, d1, d2)?;
    let eig = crate::linalg::hermitian_eigen(&rho, 1e-10)?;
    if d1 > 2 {
        assert!(
            eig.eigenvalues[2] <= 1e-10,
            "Schmidt rank exceeds 2: third reduced eigenvalue {}",
            eig.eigenvalues[2]
        );
    }
    let c_sq = 2.0 * (1.0 - purity(&rho));
    Ok(c_sq.max(0.0).sqrt().clamp(0.0, 1.0))
}

/// Mixture density matrix in the full product space,
/// `p₁|Ψ₁⟩⟨Ψ₁| + p₂|Ψ₂⟩⟨Ψ₂|` with `|Ψᵢ⟩` from [`fock_state`].
pub fn exact_mixture_density(m: &RankTwoMixture) -> Result<ComplexMatrix> {
    let s1 = fock_state(&m.comp1)?;
    let s2 = fock_state(&m.comp2)?;
    let dim = s1.dim();
    let mut rho = ComplexMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            rho[(i, j)] = s1.amplitudes[i] * s1.amplitudes[j].conj() * m.p1
                + s2.amplitudes[i] * s2.amplitudes[j].conj() * m.p2;
        }
    }
    Ok(rho)
}

/// Von Neumann entropy in bits; diagnostic only.
pub(crate) fn von_neumann_entropy(rho: &ComplexMatrix) -> Result<f64> {
    let eig = crate::linalg::hermitian_eigen(rho, 1e-10)?;
    Ok(eig
        .eigenvalues
        .iter()
        .filter(|&&l| l > 1e-14)
        .map(|&l| -l * l.log2())
        .sum())
}
