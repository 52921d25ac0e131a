//! Rank-2 mixtures of entangled spin coherent states.
//!
//! A mixture `ρ = p₁|ψ₁⟩⟨ψ₁| + p₂|ψ₂⟩⟨ψ₂|` is formed from the two-qubit
//! coordinates of its components, written in one shared abstract basis
//! `{|00⟩, |01⟩, |10⟩, |11⟩}` (each component embedded with its own overlap
//! scalars). Three routes to its entanglement coexist here:
//!
//! * [`wootters_concurrence`]: `C = max(λ₁−λ₂−λ₃−λ₄, 0)` with `λᵢ` the
//!   descending square roots of the spectrum of `ρρ̃`,
//!   `ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`. The spectrum is obtained from the
//!   Hermitian similarity `√ρ · ρ̃ · √ρ`, never from a non-symmetric solve.
//! * the spectral route: eigenvalues and eigenvectors of `ρ` feed the
//!   rank-2 closed form [`simplified_concurrence_sq`].
//! * the direct route: the same closed form with mixture probabilities and
//!   component states substituted for the spectral data
//!   ([`direct_concurrence_sq`], [`classify_case`]). The substitution is
//!   exact when the components are orthogonal (they then coincide with the
//!   eigenvectors); both routes are reported so the regimes can be compared.

use num_complex::Complex64;

use crate::linalg::{hermitian_eigen, psd_sqrt, ComplexMatrix};
use crate::pure::{concurrence_pure, to_two_qubit, EntangledScsParams, TwoQubitPure};
use crate::{Error, Result};

/// Third eigenvalue above this fails the rank-2 precondition.
pub const RANK2_TOL: f64 = 1e-10;
/// Relative imaginary-part tolerance for the case-classification inequalities.
pub const CASE_REALNESS_TOL: f64 = 1e-9;
/// Relative tolerance for the `c₊ = c₋` case test.
pub const CASE_EQUAL_TOL: f64 = 1e-9;
/// Spectrum entries of `√ρ·ρ̃·√ρ` below this fraction of the largest are
/// zeroed before the square root; at exact rank deficiencies the raw values
/// are pure rounding noise and the square root would amplify them to ~1e-8.
const SPECTRUM_NOISE_FLOOR: f64 = 1e-13;

/// Two-component mixture of entangled spin coherent states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankTwoMixture {
    pub comp1: EntangledScsParams,
    pub comp2: EntangledScsParams,
    pub p1: f64,
    pub p2: f64,
}

impl RankTwoMixture {
    pub fn new(
        comp1: EntangledScsParams,
        comp2: EntangledScsParams,
        p1: f64,
        p2: f64,
    ) -> Result<Self> {
        if !(p1 >= 0.0 && p2 >= 0.0 && (p1 + p2 - 1.0).abs() <= 1e-12) {
            return Err(Error::InvalidMixture {
                reason: format!("probabilities ({p1}, {p2}) must be non-negative and sum to 1"),
            });
        }
        if comp1.j1 != comp2.j1 || comp1.j2 != comp2.j2 {
            return Err(Error::InvalidMixture {
                reason: "components must share both subsystem spins".into(),
            });
        }
        Ok(Self { comp1, comp2, p1, p2 })
    }
}

/// Validated 4x4 two-qubit density matrix.
///
/// Construction enforces Hermiticity, unit trace and positive
/// semidefiniteness; it does not restrict the rank (maximally mixed input is
/// legal). The rank-2 requirement is checked where it matters, in
/// [`spectral_rank2`].
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix4 {
    entries: ComplexMatrix,
}

impl DensityMatrix4 {
    pub fn new(entries: ComplexMatrix) -> Result<Self> {
        if entries.rows() != 4 || entries.cols() != 4 {
            return Err(Error::NotDensityMatrix {
                reason: format!("expected 4x4, got {}x{}", entries.rows(), entries.cols()),
            });
        }
        let herm = entries.hermiticity_residual();
        if herm > 1e-13 {
            return Err(Error::NotDensityMatrix {
                reason: format!("Hermiticity residual {herm:.3e}"),
            });
        }
        let tr = entries.trace();
        if (tr.re - 1.0).abs() > 1e-13 || tr.im.abs() > 1e-13 {
            return Err(Error::NotDensityMatrix {
                reason: format!("trace {tr} != 1"),
            });
        }
        let eig = hermitian_eigen(&entries, 1e-12)?;
        if let Some(&low) = eig.eigenvalues.last() {
            if low < -1e-12 {
                return Err(Error::NotDensityMatrix {
                    reason: format!("negative eigenvalue {low:.3e}"),
                });
            }
        }
        Ok(Self { entries })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[(i, j)]
    }
}

/// Spectral data of a rank-2 density matrix: the two nonzero eigenvalues
/// (descending) and their eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralPair {
    pub mu1: f64,
    pub mu2: f64,
    pub vec1: TwoQubitPure,
    pub vec2: TwoQubitPure,
}

/// Squared-concurrence bounds `(p₁C₁ ∓ p₂C₂)²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcurrenceBounds {
    pub lower: f64,
    pub upper: f64,
}

/// Which closed-form case the two-component quantities select.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseLabel {
    /// `(c₊−c₋)² ≥ 4c₁c₂ ≥ 0`: squared concurrence equals the upper bound.
    UpperBound,
    /// `0 ≤ (c₊−c₋)² ≤ 4c₁c₂`: lower bound plus `p₁p₂|c₊−c₋|²`.
    Intermediate,
    /// `c₁c₂ ≤ 0`: squared concurrence equals the lower bound.
    LowerBoundNegProduct,
    /// `c₊ = c₋`: squared concurrence equals the lower bound.
    LowerBoundEqualC,
    /// The tested combinations are not real within tolerance; no ordering of
    /// complex values is assumed.
    Unclassified,
}

impl CaseLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::UpperBound => "upper_bound",
            CaseLabel::Intermediate => "intermediate",
            CaseLabel::LowerBoundNegProduct => "lower_bound_neg_product",
            CaseLabel::LowerBoundEqualC => "lower_bound_equal_c",
            CaseLabel::Unclassified => "unclassified",
        }
    }
}

impl std::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Pure-state concurrences of the components and the complex concurrences of
/// their equal-weight combinations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixtureQuantities {
    pub c1: f64,
    pub c2: f64,
    pub cplus: Complex64,
    pub cminus: Complex64,
}

/// `σ_y ⊗ σ_y` in the standard basis.
fn spin_flip_matrix() -> ComplexMatrix {
    let mut y = ComplexMatrix::zeros(4, 4);
    y[(0, 3)] = Complex64::new(-1.0, 0.0);
    y[(1, 2)] = Complex64::new(1.0, 0.0);
    y[(2, 1)] = Complex64::new(1.0, 0.0);
    y[(3, 0)] = Complex64::new(-1.0, 0.0);
    y
}

/// Mixture density matrix in the shared two-qubit basis.
pub fn density_matrix(m: &RankTwoMixture) -> Result<DensityMatrix4> {
    let s1 = to_two_qubit(&m.comp1)?;
    let s2 = to_two_qubit(&m.comp2)?;
    let a1 = s1.amplitudes();
    let a2 = s2.amplitudes();
    let mut rho = ComplexMatrix::zeros(4, 4);
    for i in 0..4 {
        // Fill the upper triangle, mirror the conjugates: exactly Hermitian.
        for j in i..4 {
            let v = a1[i] * a1[j].conj() * m.p1 + a2[i] * a2[j].conj() * m.p2;
            rho[(i, j)] = v;
            if i != j {
                rho[(j, i)] = v.conj();
            }
        }
    }
    DensityMatrix4::new(rho)
}

/// Wootters concurrence `C(ρ) = max(λ₁ − λ₂ − λ₃ − λ₄, 0)`.
///
/// The `λᵢ` are square roots of the spectrum of `ρρ̃`, computed as the
/// Hermitian eigenvalues of `√ρ · ρ̃ · √ρ` (same spectrum). Works for any
/// two-qubit density matrix, rank restrictions included or not.
pub fn wootters_concurrence(rho: &DensityMatrix4) -> f64 {
    let y = spin_flip_matrix();
    let conj = ComplexMatrix::new(
        4,
        4,
        rho.matrix().entries().iter().map(|z| z.conj()).collect(),
    );
    let rho_tilde = y.mul(&conj).unwrap().mul(&y).unwrap();
    let sqrt_rho = psd_sqrt(rho.matrix()).expect("validated density matrix has a PSD square root");
    let core = sqrt_rho
        .mul(&rho_tilde)
        .unwrap()
        .mul(&sqrt_rho)
        .unwrap();
    let eig = hermitian_eigen(&core, 1e-9).expect("similarity of Hermitian factors");
    let top = eig.eigenvalues[0].max(0.0);
    let floor = SPECTRUM_NOISE_FLOOR * top;
    let lambdas: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|&v| if v > floor { v.sqrt() } else { 0.0 })
        .collect();
    (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).clamp(0.0, 1.0)
}

/// Complex concurrence `c = 2(ad − bc)`; its magnitude is the concurrence of
/// a normalized state.
pub fn complex_concurrence(s: &TwoQubitPure) -> Complex64 {
    (s.a * s.d - s.b * s.c) * 2.0
}

/// Top two eigenpairs of a rank-2 density matrix.
///
/// Errors with `RankExceeded` if the third eigenvalue is above `1e-10`.
/// Eigenvectors come from the deterministic Jacobi solver with canonical
/// phases, so degenerate spectra still resolve reproducibly.
pub fn spectral_rank2(rho: &DensityMatrix4) -> Result<SpectralPair> {
    let eig = hermitian_eigen(rho.matrix(), 1e-12)?;
    if eig.eigenvalues[2] > RANK2_TOL {
        return Err(Error::RankExceeded {
            third: eig.eigenvalues[2],
        });
    }
    let column = |c: usize| {
        TwoQubitPure::new(
            eig.eigenvectors[(0, c)],
            eig.eigenvectors[(1, c)],
            eig.eigenvectors[(2, c)],
            eig.eigenvectors[(3, c)],
        )
    };
    Ok(SpectralPair {
        mu1: eig.eigenvalues[0],
        mu2: eig.eigenvalues[1],
        vec1: column(0),
        vec2: column(1),
    })
}

/// Rank-2 closed form for the squared concurrence from spectral data:
///
/// ```text
/// C² = μ₁²C₁² + μ₂²C₂² + ½μ₁μ₂|c₊−c₋|² − ½μ₁μ₂|(c₊−c₋)² − 4c₁c₂|
/// ```
///
/// with `cᵢ` the complex concurrences of the eigenvectors and `c±` those of
/// `(|μ₁⟩ ± |μ₂⟩)/√2`.
pub fn simplified_concurrence_sq(sp: &SpectralPair) -> f64 {
    rank2_closed_form(
        sp.mu1,
        sp.mu2,
        complex_concurrence(&sp.vec1),
        complex_concurrence(&sp.vec2),
        complex_concurrence(&sp.vec1.superpose(&sp.vec2, 1.0)),
        complex_concurrence(&sp.vec1.superpose(&sp.vec2, -1.0)),
    )
}

fn rank2_closed_form(
    w1: f64,
    w2: f64,
    c1: Complex64,
    c2: Complex64,
    cplus: Complex64,
    cminus: Complex64,
) -> f64 {
    let delta = cplus - cminus;
    let value = w1 * w1 * c1.norm_sqr() + w2 * w2 * c2.norm_sqr()
        + 0.5 * w1 * w2 * delta.norm_sqr()
        - 0.5 * w1 * w2 * (delta * delta - c1 * c2 * 4.0).norm();
    value.max(0.0)
}

/// Component concurrences `C₁, C₂` and the complex concurrences `c±` of the
/// unnormalized combinations `(|ψ₁⟩ ± |ψ₂⟩)/√2`.
pub fn mixture_quantities(m: &RankTwoMixture) -> Result<MixtureQuantities> {
    let s1 = to_two_qubit(&m.comp1)?;
    let s2 = to_two_qubit(&m.comp2)?;
    Ok(MixtureQuantities {
        c1: concurrence_pure(&m.comp1)?,
        c2: concurrence_pure(&m.comp2)?,
        cplus: complex_concurrence(&s1.superpose(&s2, 1.0)),
        cminus: complex_concurrence(&s1.superpose(&s2, -1.0)),
    })
}

/// Observable bounds on the squared concurrence:
/// `(p₁C₁ − p₂C₂)² ≤ C²(ρ) ≤ (p₁C₁ + p₂C₂)²`.
pub fn bounds(m: &RankTwoMixture) -> Result<ConcurrenceBounds> {
    let q = mixture_quantities(m)?;
    let lower = (m.p1 * q.c1 - m.p2 * q.c2).powi(2);
    let upper = (m.p1 * q.c1 + m.p2 * q.c2).powi(2);
    Ok(ConcurrenceBounds { lower, upper })
}

/// Direct route: the rank-2 closed form with mixture probabilities and
/// component states substituted for the spectral data. Exact when
/// `⟨ψ₁|ψ₂⟩ = 0`; reported alongside the spectral route otherwise.
pub fn direct_concurrence_sq(m: &RankTwoMixture) -> Result<f64> {
    let s1 = to_two_qubit(&m.comp1)?;
    let s2 = to_two_qubit(&m.comp2)?;
    let q = mixture_quantities(m)?;
    Ok(rank2_closed_form(
        m.p1,
        m.p2,
        complex_concurrence(&s1),
        complex_concurrence(&s2),
        q.cplus,
        q.cminus,
    ))
}

/// Case classification of the direct route.
///
/// The inequalities compare `(c₊−c₋)²` against `4c₁c₂`; both must be real
/// within `1e-9·(1+magnitude)` or the result is `Unclassified` (value NaN).
/// Matching order: upper bound, negative product, equal combinations,
/// intermediate. Values on overlapping boundaries agree between branches.
pub fn classify_case(m: &RankTwoMixture) -> Result<(CaseLabel, f64)> {
    let s1 = to_two_qubit(&m.comp1)?;
    let s2 = to_two_qubit(&m.comp2)?;
    let q = mixture_quantities(m)?;
    let b = bounds(m)?;

    let c1 = complex_concurrence(&s1);
    let c2 = complex_concurrence(&s2);
    let delta = q.cplus - q.cminus;
    let delta_sq = delta * delta;
    let product = c1 * c2 * 4.0;

    let real_enough = |z: Complex64| z.im.abs() <= CASE_REALNESS_TOL * (1.0 + z.norm());
    if !real_enough(delta_sq) || !real_enough(product) {
        return Ok((CaseLabel::Unclassified, f64::NAN));
    }
    let g = delta_sq.re;
    let h = product.re;

    if g >= h && h >= 0.0 {
        return Ok((CaseLabel::UpperBound, b.upper));
    }
    if h <= 0.0 {
        return Ok((CaseLabel::LowerBoundNegProduct, b.lower));
    }
    let scale = 1.0 + q.cplus.norm() + q.cminus.norm();
    if delta.norm() <= CASE_EQUAL_TOL * scale {
        return Ok((CaseLabel::LowerBoundEqualC, b.lower));
    }
    if g >= 0.0 && g <= h {
        return Ok((CaseLabel::Intermediate, b.lower + m.p1 * m.p2 * delta.norm_sqr()));
    }
    Ok((CaseLabel::Unclassified, f64::NAN))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::su2::SpinJ;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn half_params(z1: Complex64, z2: Complex64, phi: f64) -> EntangledScsParams {
        EntangledScsParams {
            j1: SpinJ::from_two_j(1),
            j2: SpinJ::from_two_j(1),
            z1,
            z2,
            phi,
        }
    }

    fn bell_component(phi: f64) -> EntangledScsParams {
        half_params(c(1.0, 0.0), c(1.0, 0.0), phi)
    }

    fn projector(s: &TwoQubitPure) -> DensityMatrix4 {
        let a = s.amplitudes();
        let mut m = ComplexMatrix::zeros(4, 4);
        for i in 0..4 {
            for j in 0..4 {
                m[(i, j)] = a[i] * a[j].conj();
            }
        }
        DensityMatrix4::new(m).unwrap()
    }

    fn phi_plus() -> TwoQubitPure {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        TwoQubitPure::new(c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(h, 0.0))
    }

    fn psi_plus() -> TwoQubitPure {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        TwoQubitPure::new(c(0.0, 0.0), c(h, 0.0), c(h, 0.0), c(0.0, 0.0))
    }

    #[test]
    fn mixture_validation() {
        let a = bell_component(0.0);
        assert!(RankTwoMixture::new(a, a, 0.6, 0.4).is_ok());
        assert!(RankTwoMixture::new(a, a, 0.6, 0.5).is_err());
        assert!(RankTwoMixture::new(a, a, -0.1, 1.1).is_err());
        let other_spin = EntangledScsParams {
            j1: SpinJ::from_two_j(2),
            ..a
        };
        assert!(RankTwoMixture::new(a, other_spin, 0.5, 0.5).is_err());
    }

    #[test]
    fn density_matrix_pure_cases() {
        let comp = half_params(c(0.5, 0.0), c(0.3, 0.2), 0.4);
        let other = half_params(c(1.2, 0.0), c(0.1, 0.0), 2.0);
        let m = RankTwoMixture::new(comp, other, 1.0, 0.0).unwrap();
        let rho = density_matrix(&m).unwrap();
        let purity: f64 = rho
            .matrix()
            .mul(rho.matrix())
            .unwrap()
            .trace()
            .re;
        assert!((purity - 1.0).abs() < 1e-12);

        // Identical components stay pure at any weight.
        let m = RankTwoMixture::new(comp, comp, 0.3, 0.7).unwrap();
        let rho = density_matrix(&m).unwrap();
        let purity: f64 = rho.matrix().mul(rho.matrix()).unwrap().trace().re;
        assert!((purity - 1.0).abs() < 1e-12);
    }

    #[test]
    fn density_matrix_bell_pair_mixture() {
        let m = RankTwoMixture::new(
            bell_component(0.0),
            bell_component(std::f64::consts::PI),
            0.5,
            0.5,
        )
        .unwrap();
        let rho = density_matrix(&m).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == j && (i == 1 || i == 2) { 0.5 } else { 0.0 };
                assert!(
                    (rho.entry(i, j) - c(expected, 0.0)).norm() < 1e-12,
                    "entry ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn density_matrix_rejects_bad_input() {
        let not_trace_one = ComplexMatrix::from_diag(&[c(1.0, 0.0); 4]);
        assert!(matches!(
            DensityMatrix4::new(not_trace_one),
            Err(Error::NotDensityMatrix { .. })
        ));
        let negative = ComplexMatrix::from_diag(&[c(1.5, 0.0), c(-0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(matches!(
            DensityMatrix4::new(negative),
            Err(Error::NotDensityMatrix { .. })
        ));
    }

    #[test]
    fn wootters_extremes() {
        assert!((wootters_concurrence(&projector(&phi_plus())) - 1.0).abs() < 1e-12);
        let mixed = DensityMatrix4::new(ComplexMatrix::from_diag(&[c(0.25, 0.0); 4])).unwrap();
        assert!(wootters_concurrence(&mixed).abs() < 1e-12);
    }

    #[test]
    fn wootters_phi_plus_with_ground() {
        // rho = 1/2 |Phi+><Phi+| + 1/2 |00><00|, an X state with
        // C = 2 max(0, |rho_03| - sqrt(rho_11 rho_22)) = 1/2.
        let mut m = ComplexMatrix::zeros(4, 4);
        m[(0, 0)] = c(0.75, 0.0);
        m[(0, 3)] = c(0.25, 0.0);
        m[(3, 0)] = c(0.25, 0.0);
        m[(3, 3)] = c(0.25, 0.0);
        let rho = DensityMatrix4::new(m).unwrap();
        assert!((wootters_concurrence(&rho) - 0.5).abs() < 1e-10);
    }

    #[test]
    fn complex_concurrence_signs() {
        assert!((complex_concurrence(&phi_plus()) - c(1.0, 0.0)).norm() < 1e-15);
        assert!((complex_concurrence(&psi_plus()) - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn complex_concurrence_of_embedded_state() {
        // For the embedded form (d = 0): c = -2 N^2 e^{i phi} N1 N2.
        let p = half_params(c(0.5, 0.0), c(0.7, 0.0), 1.3);
        let s = to_two_qubit(&p).unwrap();
        let emb = crate::pure::embedding(&p).unwrap();
        let expected = Complex64::from_polar(1.0, p.phi) * (-2.0 * emb.n * emb.n * emb.n1 * emb.n2);
        assert!((complex_concurrence(&s) - expected).norm() < 1e-14);
        assert!(
            (complex_concurrence(&s).norm() - concurrence_pure(&p).unwrap()).abs() < 1e-15
        );
    }

    #[test]
    fn spectral_of_projector() {
        let sp = spectral_rank2(&projector(&phi_plus())).unwrap();
        assert!((sp.mu1 - 1.0).abs() < 1e-12);
        assert!(sp.mu2.abs() < 1e-12);
        assert!((complex_concurrence(&sp.vec1).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn spectral_of_diagonal_degenerate() {
        let rho = DensityMatrix4::new(ComplexMatrix::from_diag(&[
            c(0.0, 0.0),
            c(0.5, 0.0),
            c(0.5, 0.0),
            c(0.0, 0.0),
        ]))
        .unwrap();
        let sp = spectral_rank2(&rho).unwrap();
        assert!((sp.mu1 - 0.5).abs() < 1e-13);
        assert!((sp.mu2 - 0.5).abs() < 1e-13);
        // Eigenvectors stay inside span{|01>, |10>}.
        for v in [&sp.vec1, &sp.vec2] {
            assert!(v.a.norm() < 1e-13);
            assert!(v.d.norm() < 1e-13);
        }
    }

    #[test]
    fn spectral_rejects_higher_rank() {
        let rho = DensityMatrix4::new(ComplexMatrix::from_diag(&[
            c(0.4, 0.0),
            c(0.3, 0.0),
            c(0.2, 0.0),
            c(0.1, 0.0),
        ]))
        .unwrap();
        assert!(matches!(
            spectral_rank2(&rho),
            Err(Error::RankExceeded { .. })
        ));
    }

    #[test]
    fn simplified_pure_reduction() {
        let sp = SpectralPair {
            mu1: 1.0,
            mu2: 0.0,
            vec1: phi_plus(),
            vec2: psi_plus(),
        };
        assert!((simplified_concurrence_sq(&sp) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn simplified_phi_psi_equal_mixture_is_zero() {
        // c1 = 1, c2 = -1, c+ = c- = 0: value 1/2 - 1/2 = 0.
        let sp = SpectralPair {
            mu1: 0.5,
            mu2: 0.5,
            vec1: phi_plus(),
            vec2: psi_plus(),
        };
        assert!(simplified_concurrence_sq(&sp).abs() < 1e-14);
    }

    #[test]
    fn simplified_matches_wootters_on_bell_diagonal() {
        // rho = w |Phi+><Phi+| + (1-w) |Phi-><Phi-|: C = |2w - 1|.
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let phi_minus = TwoQubitPure::new(c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-h, 0.0));
        for w in [0.5, 0.65, 0.8, 1.0] {
            let sp = SpectralPair {
                mu1: w,
                mu2: 1.0 - w,
                vec1: phi_plus(),
                vec2: phi_minus,
            };
            let expected = (2.0 * w - 1.0).abs();
            let got = simplified_concurrence_sq(&sp);
            assert!(
                (got - expected * expected).abs() < 1e-13,
                "w={w}: got {got}"
            );
        }
    }

    #[test]
    fn mixture_quantities_reference() {
        let m = RankTwoMixture::new(
            half_params(c(0.0, 0.0), c(0.4, 0.0), 0.3),
            bell_component(0.7),
            0.5,
            0.5,
        )
        .unwrap();
        let q = mixture_quantities(&m).unwrap();
        assert!(q.c1.abs() < 1e-15, "Z1 = 0 has no entanglement");
        assert!((q.c2 - 1.0).abs() < 1e-12, "Bell component is maximal");
    }

    #[test]
    fn mixture_quantities_symmetric_components() {
        let comp = half_params(c(0.5, 0.0), c(0.5, 0.0), 0.0);
        let m = RankTwoMixture::new(comp, comp, 0.5, 0.5).unwrap();
        let q = mixture_quantities(&m).unwrap();
        let s = to_two_qubit(&comp).unwrap();
        let c1 = complex_concurrence(&s);
        // (psi + psi)/sqrt(2) doubles the quadratic form; the difference is null.
        assert!((q.cplus - c1 * 2.0).norm() < 1e-13);
        assert!(q.cminus.norm() < 1e-15);
    }

    #[test]
    fn bounds_reference_cases() {
        let a = half_params(c(1.0, 0.0), c(1.0, 0.0), 0.0);
        let b_comp = half_params(c(0.0, 0.0), c(0.5, 0.0), 0.0);

        let m = RankTwoMixture::new(a, b_comp, 1.0, 0.0).unwrap();
        let bd = bounds(&m).unwrap();
        assert!((bd.lower - 1.0).abs() < 1e-12);
        assert!((bd.upper - 1.0).abs() < 1e-12);

        let m = RankTwoMixture::new(a, a, 0.5, 0.5).unwrap();
        let bd = bounds(&m).unwrap();
        assert!(bd.lower.abs() < 1e-12);
        assert!((bd.upper - 1.0).abs() < 1e-12);

        // C1 = 1, C2 = 0 at equal weight: both bounds are 1/4.
        let m = RankTwoMixture::new(a, b_comp, 0.5, 0.5).unwrap();
        let bd = bounds(&m).unwrap();
        assert!((bd.lower - 0.25).abs() < 1e-12);
        assert!((bd.upper - 0.25).abs() < 1e-12);
    }

    #[test]
    fn classify_identical_components_upper_bound() {
        let comp = half_params(c(0.5, 0.0), c(0.5, 0.0), 0.0);
        let m = RankTwoMixture::new(comp, comp, 0.4, 0.6).unwrap();
        let (label, value) = classify_case(&m).unwrap();
        assert_eq!(label, CaseLabel::UpperBound);
        let c1 = concurrence_pure(&comp).unwrap();
        assert!((value - c1 * c1).abs() < 1e-13);
    }

    #[test]
    fn classify_phi_psi_mixture_negative_product() {
        let m = RankTwoMixture::new(
            bell_component(0.0),
            bell_component(std::f64::consts::PI),
            0.5,
            0.5,
        )
        .unwrap();
        let (label, value) = classify_case(&m).unwrap();
        assert_eq!(label, CaseLabel::LowerBoundNegProduct);
        assert!(value.abs() < 1e-12);
        // Against the Wootters route on the same state.
        let w = wootters_concurrence(&density_matrix(&m).unwrap());
        assert!(w.abs() < 1e-10);
    }

    #[test]
    fn classify_equal_combinations() {
        // phi1 = pi/2, phi2 = 3pi/2 with equal embedding factors zeroes
        // c+ - c- while keeping c1 c2 > 0.
        let comp1 = half_params(c(0.5, 0.0), c(0.5, 0.0), std::f64::consts::FRAC_PI_2);
        let comp2 = half_params(c(0.5, 0.0), c(0.5, 0.0), 3.0 * std::f64::consts::FRAC_PI_2);
        let m = RankTwoMixture::new(comp1, comp2, 0.5, 0.5).unwrap();

        let q = mixture_quantities(&m).unwrap();
        assert!((q.cplus - q.cminus).norm() < 1e-12, "combination residual");

        let (label, value) = classify_case(&m).unwrap();
        assert_eq!(label, CaseLabel::LowerBoundEqualC);
        let bd = bounds(&m).unwrap();
        assert!((value - bd.lower).abs() < 1e-14);
    }

    #[test]
    fn classify_unclassified_for_generic_phases() {
        // A generic relative phase leaves (c+ - c-)^2 genuinely complex.
        let comp1 = half_params(c(0.5, 0.0), c(0.6, 0.0), 0.9);
        let comp2 = half_params(c(1.4, 0.0), c(0.3, 0.0), 2.3);
        let m = RankTwoMixture::new(comp1, comp2, 0.5, 0.5).unwrap();
        let (label, value) = classify_case(&m).unwrap();
        assert_eq!(label, CaseLabel::Unclassified);
        assert!(value.is_nan());
    }

    #[test]
    fn direct_route_matches_wootters_for_orthogonal_components() {
        // phi2 = phi1 + pi makes Bell-condition components orthogonal.
        for (phi1, p1) in [(0.0, 0.5), (0.8, 0.3), (2.0, 0.9)] {
            let m = RankTwoMixture::new(
                bell_component(phi1),
                bell_component(phi1 + std::f64::consts::PI),
                p1,
                1.0 - p1,
            )
            .unwrap();
            let direct = direct_concurrence_sq(&m).unwrap();
            let w = wootters_concurrence(&density_matrix(&m).unwrap());
            assert!(
                (direct - w * w).abs() < 1e-8,
                "phi1={phi1}, p1={p1}: direct {direct} vs wootters^2 {}",
                w * w
            );
        }
    }
}
