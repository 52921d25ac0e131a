//! SU(2) ladder operators and spin coherent states.
//!
//! Conventions used throughout the crate:
//!
//! * A spin `j` is stored exactly as the integer `2j`, so `j ∈ {0, ½, 1, …}`.
//! * Fock amplitudes are indexed by `m = −j … +j` in ascending order
//!   (index `k` holds `m = −j + k`); the representation dimension is `2j+1`.
//! * The coherent state is the rotated lowest-weight state
//!
//!   ```text
//!   |Z, j⟩ = (1+|Z|²)^{−j} Σ_m binom(2j, j+m)^{1/2} Z^{j+m} |j, m⟩
//!   ```
//!
//!   with `Z = tan(θ/2) e^{iφ}` (Perelomov convention). The amplitude of
//!   `|j, −j⟩` is real positive.

use num_complex::Complex64;

use crate::linalg::{antihermitian_exp, ComplexMatrix};
use crate::{Error, Result};

/// A spin quantum number, stored exactly as `2j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpinJ {
    two_j: u32,
}

impl SpinJ {
    pub const fn from_two_j(two_j: u32) -> Self {
        Self { two_j }
    }

    /// Parse from a decimal value like `0.5`, `1`, `1.5`. Rejects values that
    /// are not non-negative half-integers.
    pub fn from_f64(j: f64) -> Result<Self> {
        let doubled = 2.0 * j;
        let rounded = doubled.round();
        if !(j.is_finite() && j >= 0.0 && (doubled - rounded).abs() <= 1e-9 && rounded <= u32::MAX as f64)
        {
            return Err(Error::InvalidConfig {
                reason: format!("spin must be a non-negative half-integer, got {j}"),
            });
        }
        Ok(Self {
            two_j: rounded as u32,
        })
    }

    pub const fn two_j(self) -> u32 {
        self.two_j
    }

    pub fn j(self) -> f64 {
        self.two_j as f64 / 2.0
    }

    /// Representation dimension `2j + 1`.
    pub const fn dim(self) -> usize {
        self.two_j as usize + 1
    }

    /// Doubled magnetic quantum numbers `2m`, ascending from `−2j` to `+2j`.
    pub fn two_m_values(self) -> impl Iterator<Item = i64> {
        let two_j = self.two_j as i64;
        (0..=two_j).map(move |k| 2 * k - two_j)
    }
}

impl std::fmt::Display for SpinJ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.two_j % 2 == 0 {
            write!(f, "{}", self.two_j / 2)
        } else {
            write!(f, "{}/2", self.two_j)
        }
    }
}

/// Label of one subsystem's coherent state: the spin and the amplitude `Z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinCoherentParam {
    pub j: SpinJ,
    pub z: Complex64,
}

impl SpinCoherentParam {
    pub fn new(j: SpinJ, z: Complex64) -> Self {
        Self { j, z }
    }

    /// The antipodal label `|−Z, j⟩`.
    pub fn negate(self) -> Self {
        Self { j: self.j, z: -self.z }
    }
}

/// State vector over the `|j, m⟩` basis, `m` ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    pub amplitudes: Vec<Complex64>,
}

impl FockVector {
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// Basis vector `e_k`.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[k] = Complex64::new(1.0, 0.0);
        Self { amplitudes }
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Inner product `⟨self|other⟩` (conjugate-linear in `self`).
    pub fn inner(&self, other: &FockVector) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Product-space vector with index ordering `k₁·dim₂ + k₂`.
    pub fn tensor(&self, other: &FockVector) -> FockVector {
        let mut amplitudes = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        FockVector { amplitudes }
    }

    pub fn scaled(&self, factor: Complex64) -> FockVector {
        FockVector {
            amplitudes: self.amplitudes.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn add(&self, other: &FockVector) -> FockVector {
        FockVector {
            amplitudes: self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Product-space vector; free-function form of [`FockVector::tensor`].
pub fn tensor_state(v1: &FockVector, v2: &FockVector) -> FockVector {
    v1.tensor(v2)
}

fn ln_factorials(n: usize) -> Vec<f64> {
    let mut table = Vec::with_capacity(n + 1);
    table.push(0.0);
    let mut acc = 0.0;
    for i in 1..=n {
        acc += (i as f64).ln();
        table.push(acc);
    }
    table
}

/// Expansion amplitudes of the coherent state `|Z, j⟩`.
///
/// The amplitude at `m` is `(1+|Z|²)^{−j} binom(2j, j+m)^{1/2} Z^{j+m}`.
/// Binomial weights are evaluated in the log domain and exponentiated after
/// subtracting the maximum log amplitude, then the vector is normalized, so
/// the result has unit norm and no intermediate overflow up to `2j = 200` and
/// beyond.
pub fn coherent_amplitudes(p: SpinCoherentParam) -> FockVector {
    let two_j = p.j.two_j() as usize;
    let dim = p.j.dim();
    let r = p.z.norm();
    if r == 0.0 {
        return FockVector::basis(dim, 0);
    }
    let alpha = p.z.arg();
    let ln_r = r.ln();
    let lf = ln_factorials(two_j);

    let mut logs = Vec::with_capacity(dim);
    let mut max_log = f64::NEG_INFINITY;
    for k in 0..dim {
        let log_binom = lf[two_j] - lf[k] - lf[two_j - k];
        let l = 0.5 * log_binom + k as f64 * ln_r;
        max_log = max_log.max(l);
        logs.push(l);
    }

    let mags: Vec<f64> = logs.iter().map(|&l| (l - max_log).exp()).collect();
    let norm = mags.iter().map(|m| m * m).sum::<f64>().sqrt();
    let amplitudes = mags
        .iter()
        .enumerate()
        .map(|(k, &m)| Complex64::from_polar(m / norm, k as f64 * alpha))
        .collect();
    FockVector { amplitudes }
}

/// Closed-form overlap `⟨Z₁, j | Z₂, j⟩`.
///
/// Evaluated as `[(1 + Z̄₁ Z₂) / √((1+|Z₁|²)(1+|Z₂|²))]^{2j}`; the base has
/// magnitude ≤ 1, so the power never overflows.
pub fn overlap(p1: SpinCoherentParam, p2: SpinCoherentParam) -> Result<Complex64> {
    if p1.j != p2.j {
        return Err(Error::SpinMismatch {
            left: p1.j.two_j(),
            right: p2.j.two_j(),
        });
    }
    let two_j = p1.j.two_j();
    if two_j == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let num = Complex64::new(1.0, 0.0) + p1.z.conj() * p2.z;
    let den = ((1.0 + p1.z.norm_sqr()) * (1.0 + p2.z.norm_sqr())).sqrt();
    Ok((num / den).powi(two_j as i32))
}

/// Overlap of a coherent state with its antipode,
/// `P = ⟨Z, j | −Z, j⟩ = [(1−|Z|²)/(1+|Z|²)]^{2j}`, a real number in `[−1, 1]`.
pub fn overlap_minus(p: SpinCoherentParam) -> f64 {
    let two_j = p.j.two_j();
    if two_j == 0 {
        return 1.0;
    }
    let zz = p.z.norm_sqr();
    let base = (1.0 - zz) / (1.0 + zz);
    base.powi(two_j as i32)
}

/// Matrix representations of `J₊`, `J₋`, `J_z` in the ascending-`m` basis.
///
/// `J₊|j,m⟩ = √((j−m)(j+m+1)) |j,m+1⟩` and `J_z|j,m⟩ = m|j,m⟩`; the
/// commutators `[J₊, J₋] = 2J_z` and `[J_z, J±] = ±J±` hold with entries that
/// are square roots of exact integers.
pub fn ladder_matrices(j: SpinJ) -> (ComplexMatrix, ComplexMatrix, ComplexMatrix) {
    let two_j = j.two_j() as usize;
    let dim = j.dim();
    let mut plus = ComplexMatrix::zeros(dim, dim);
    let mut z = ComplexMatrix::zeros(dim, dim);
    for k in 0..dim {
        if k + 1 < dim {
            // (j - m)(j + m + 1) = (2j - k)(k + 1) with m = -j + k.
            let v = ((two_j - k) as f64 * (k + 1) as f64).sqrt();
            plus[(k + 1, k)] = Complex64::new(v, 0.0);
        }
        z[(k, k)] = Complex64::new(k as f64 - j.j(), 0.0);
    }
    let minus = plus.adjoint();
    (plus, minus, z)
}

/// Coherent state built by the explicit rotation
/// `exp[(θ/2)(J₊e^{iφ} − J₋e^{−iφ})] |j,−j⟩`.
///
/// This is the phase convention under which the rotated lowest-weight state
/// reproduces the binomial expansion with `Z = tan(θ/2) e^{iφ}` and a real
/// positive `|j,−j⟩` amplitude; it serves as a matrix-exponential oracle for
/// [`coherent_amplitudes`]. Near `θ = π` the map to `Z` diverges, so such
/// angles are rejected; use the antipodal state directly instead.
pub fn rotation_coherent(j: SpinJ, theta: f64, phi: f64) -> Result<FockVector> {
    if (theta - std::f64::consts::PI).abs() < 1e-8 {
        return Err(Error::ThetaNearPi);
    }
    let (plus, minus, _) = ladder_matrices(j);
    let phase = Complex64::from_polar(1.0, phi);
    let half = Complex64::new(theta / 2.0, 0.0);
    let generator = plus
        .scaled(half * phase)
        .add(&minus.scaled(-half * phase.conj()))?;
    let u = antihermitian_exp(&generator)?;
    let amplitudes = (0..j.dim()).map(|k| u[(k, 0)]).collect();
    Ok(FockVector { amplitudes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn half() -> SpinJ {
        SpinJ::from_two_j(1)
    }

    #[test]
    fn spin_parsing() {
        assert_eq!(SpinJ::from_f64(0.5).unwrap().two_j(), 1);
        assert_eq!(SpinJ::from_f64(4.0).unwrap().two_j(), 8);
        assert!(SpinJ::from_f64(0.3).is_err());
        assert!(SpinJ::from_f64(-0.5).is_err());
        assert_eq!(SpinJ::from_two_j(3).to_string(), "3/2");
        assert_eq!(SpinJ::from_two_j(4).to_string(), "2");
    }

    #[test]
    fn amplitudes_at_zero_is_lowest_weight() {
        let v = coherent_amplitudes(SpinCoherentParam::new(half(), c(0.0, 0.0)));
        assert_eq!(v.amplitudes[0], c(1.0, 0.0));
        assert_eq!(v.amplitudes[1], c(0.0, 0.0));
    }

    #[test]
    fn amplitudes_on_unit_circle_are_uniform() {
        // |Z| = 1 gives magnitude 2^{-j} on every component.
        let v = coherent_amplitudes(SpinCoherentParam::new(half(), c(1.0, 0.0)));
        let inv_sqrt2 = 1.0 / 2.0f64.sqrt();
        assert!((v.amplitudes[0].re - inv_sqrt2).abs() < 1e-14);
        assert!((v.amplitudes[1].re - inv_sqrt2).abs() < 1e-14);
    }

    #[test]
    fn amplitudes_spin_one() {
        let v = coherent_amplitudes(SpinCoherentParam::new(SpinJ::from_two_j(2), c(0.5, 0.0)));
        // Proportional to (1, sqrt(2)*0.5, 0.25) with norm 1.25.
        let expected = [1.0 / 1.25, 2.0f64.sqrt() * 0.5 / 1.25, 0.25 / 1.25];
        for (a, e) in v.amplitudes.iter().zip(expected) {
            assert!((a.re - e).abs() < 1e-14, "got {a}, want {e}");
            assert!(a.im.abs() < 1e-16);
        }
    }

    #[test]
    fn amplitudes_unit_norm_large_spin() {
        for two_j in [1u32, 8, 50, 200] {
            for r in [0.1, 1.0, 10.0] {
                let p = SpinCoherentParam::new(SpinJ::from_two_j(two_j), c(r, 0.7 * r));
                let v = coherent_amplitudes(p);
                assert!(
                    (v.norm() - 1.0).abs() < 1e-12,
                    "norm violated at 2j={two_j}, r={r}"
                );
            }
        }
    }

    #[test]
    fn overlap_of_state_with_itself_is_one() {
        let p = SpinCoherentParam::new(SpinJ::from_two_j(5), c(0.8, -0.3));
        let o = overlap(p, p).unwrap();
        assert!((o - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn overlap_unit_circle_antipodes_are_orthogonal() {
        let z = Complex64::from_polar(1.0, 0.773);
        let p = SpinCoherentParam::new(SpinJ::from_two_j(2), z);
        let o = overlap(p, p.negate()).unwrap();
        assert!(o.norm() < 1e-14);
        assert!(overlap_minus(p).abs() < 1e-14);
    }

    #[test]
    fn overlap_half_spin_reference_value() {
        let p = SpinCoherentParam::new(half(), c(0.5, 0.0));
        let o = overlap(p, p.negate()).unwrap();
        assert!((o.re - 0.6).abs() < 1e-15);
        assert!(o.im.abs() < 1e-15);
        assert!((overlap_minus(p) - 0.6).abs() < 1e-15);
    }

    #[test]
    fn overlap_matches_fock_dot_product() {
        for two_j in [1u32, 4, 9] {
            let j = SpinJ::from_two_j(two_j);
            let p1 = SpinCoherentParam::new(j, c(0.4, 0.9));
            let p2 = SpinCoherentParam::new(j, c(-1.3, 0.2));
            let closed = overlap(p1, p2).unwrap();
            let dot = coherent_amplitudes(p1).inner(&coherent_amplitudes(p2));
            assert!((closed - dot).norm() < 1e-13);
        }
    }

    #[test]
    fn overlap_spin_mismatch() {
        let p1 = SpinCoherentParam::new(half(), c(0.0, 0.0));
        let p2 = SpinCoherentParam::new(SpinJ::from_two_j(2), c(0.0, 0.0));
        assert!(matches!(overlap(p1, p2), Err(Error::SpinMismatch { .. })));
    }

    #[test]
    fn overlap_minus_limits() {
        let p0 = SpinCoherentParam::new(SpinJ::from_two_j(6), c(0.0, 0.0));
        assert_eq!(overlap_minus(p0), 1.0);
        let p1 = SpinCoherentParam::new(SpinJ::from_two_j(6), c(0.0, 1.0));
        assert!(overlap_minus(p1).abs() < 1e-15);
    }

    #[test]
    fn ladder_spin_half() {
        let (plus, minus, z) = ladder_matrices(half());
        assert_eq!(plus[(1, 0)], c(1.0, 0.0));
        assert_eq!(plus[(0, 1)], c(0.0, 0.0));
        assert_eq!(minus[(0, 1)], c(1.0, 0.0));
        assert_eq!(z[(0, 0)], c(-0.5, 0.0));
        assert_eq!(z[(1, 1)], c(0.5, 0.0));
    }

    #[test]
    fn ladder_spin_one_entries() {
        let (plus, _, _) = ladder_matrices(SpinJ::from_two_j(2));
        let s = 2.0f64.sqrt();
        assert!((plus[(1, 0)].re - s).abs() < 1e-15);
        assert!((plus[(2, 1)].re - s).abs() < 1e-15);
    }

    #[test]
    fn ladder_commutators() {
        for two_j in 1..=20u32 {
            let j = SpinJ::from_two_j(two_j);
            let (plus, minus, z) = ladder_matrices(j);
            let comm = plus
                .mul(&minus)
                .unwrap()
                .sub(&minus.mul(&plus).unwrap())
                .unwrap();
            let defect = comm.sub(&z.scaled(c(2.0, 0.0))).unwrap().max_abs();
            assert!(defect < 1e-12, "[J+,J-] defect {defect} at 2j={two_j}");

            let comm_z = z.mul(&plus).unwrap().sub(&plus.mul(&z).unwrap()).unwrap();
            assert!(comm_z.sub(&plus).unwrap().max_abs() < 1e-12);
        }
    }

    #[test]
    fn ladder_commutator_integer_identity() {
        // Squared ladder entries are the integers (2j-k)(k+1), so the diagonal
        // of [J+, J-] is (2j-k+1)k - (2j-k)(k+1) = 2k - 2j = 2m, exactly.
        for two_j in 1..=40i64 {
            for k in 0..=two_j {
                let plus_squared_below = (two_j - k + 1) * k;
                let plus_squared_here = if k < two_j { (two_j - k) * (k + 1) } else { 0 };
                assert_eq!(plus_squared_below - plus_squared_here, 2 * k - two_j);
            }
        }
    }

    #[test]
    fn rotation_identity_at_zero() {
        let v = rotation_coherent(SpinJ::from_two_j(4), 0.0, 0.0).unwrap();
        assert!((v.amplitudes[0] - c(1.0, 0.0)).norm() < 1e-13);
        for a in &v.amplitudes[1..] {
            assert!(a.norm() < 1e-13);
        }
    }

    #[test]
    fn rotation_matches_closed_form() {
        let cases = [
            (1u32, std::f64::consts::FRAC_PI_2, 0.0),
            (4, std::f64::consts::FRAC_PI_3, 1.2),
            (7, 2.2, -0.4),
        ];
        for (two_j, theta, phi) in cases {
            let j = SpinJ::from_two_j(two_j);
            let rotated = rotation_coherent(j, theta, phi).unwrap();
            let z = Complex64::from_polar((theta / 2.0).tan(), phi);
            let closed = coherent_amplitudes(SpinCoherentParam::new(j, z));
            for (a, b) in rotated.amplitudes.iter().zip(&closed.amplitudes) {
                assert!((a - b).norm() < 1e-9, "2j={two_j} theta={theta}");
            }
        }
    }

    #[test]
    fn rotation_rejects_theta_near_pi() {
        let r = rotation_coherent(half(), std::f64::consts::PI - 1e-9, 0.0);
        assert!(matches!(r, Err(Error::ThetaNearPi)));
    }

    #[test]
    fn tensor_state_basis_ordering() {
        let v1 = FockVector {
            amplitudes: vec![c(1.0, 0.0), c(0.0, 0.0)],
        };
        let v2 = FockVector {
            amplitudes: vec![c(0.0, 0.0), c(1.0, 0.0)],
        };
        let t = tensor_state(&v1, &v2);
        assert_eq!(
            t.amplitudes,
            vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]
        );
    }

    proptest! {
        #[test]
        fn overlap_minus_depends_only_on_modulus(
            r in 0.05f64..5.0,
            alpha in 0.0f64..std::f64::consts::TAU,
            two_j in 1u32..16,
        ) {
            let j = SpinJ::from_two_j(two_j);
            let on_axis = overlap_minus(SpinCoherentParam::new(j, c(r, 0.0)));
            let rotated = overlap_minus(SpinCoherentParam::new(j, Complex64::from_polar(r, alpha)));
            prop_assert!((on_axis - rotated).abs() < 1e-15);
        }

        #[test]
        fn overlap_minus_inversion_symmetry(
            r in 0.1f64..8.0,
            two_j in 1u32..16,
        ) {
            let j = SpinJ::from_two_j(two_j);
            let p = overlap_minus(SpinCoherentParam::new(j, c(r, 0.0)));
            let q = overlap_minus(SpinCoherentParam::new(j, c(1.0 / r, 0.0)));
            prop_assert!((p.abs() - q.abs()).abs() < 1e-12);
        }

        #[test]
        fn tensor_inner_product_factorizes(
            a in proptest::collection::vec(-1.0f64..1.0, 8),
            b in proptest::collection::vec(-1.0f64..1.0, 8),
        ) {
            let u1 = FockVector { amplitudes: vec![c(a[0], a[1]), c(a[2], a[3])] };
            let u2 = FockVector { amplitudes: vec![c(a[4], a[5]), c(a[6], a[7])] };
            let v1 = FockVector { amplitudes: vec![c(b[0], b[1]), c(b[2], b[3])] };
            let v2 = FockVector { amplitudes: vec![c(b[4], b[5]), c(b[6], b[7])] };
            let lhs = u1.tensor(&u2).inner(&v1.tensor(&v2));
            let rhs = u1.inner(&v1) * u2.inner(&v2);
            prop_assert!((lhs - rhs).norm() < 1e-13);
        }
    }
}
