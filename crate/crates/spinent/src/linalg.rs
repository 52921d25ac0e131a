//! Minimal dense complex linear algebra.
//!
//! Everything downstream needs only small matrices (dimension ≤ ~100):
//! products, adjoints, Kronecker products, a Hermitian eigensolver, the PSD
//! matrix square root and the anti-Hermitian matrix exponential. The
//! eigensolver is a cyclic complex Jacobi iteration: each rotation absorbs
//! the phase of the pivot entry and then applies a real Givens rotation, so
//! the working matrix stays Hermitian throughout.

use num_complex::Complex64;

use crate::{Error, Result};

/// Sweep budget for the Jacobi iteration.
pub const EIGEN_SWEEP_LIMIT: usize = 100;
/// Off-diagonal Frobenius tolerance, relative to the Frobenius norm of the input.
pub const EIGEN_OFF_TOL: f64 = 1e-13;
/// Eigenvalues of a nominally PSD matrix below this are rejected; values in
/// `[PSD_EIGENVALUE_FLOOR, 0)` are clamped to zero.
pub const PSD_EIGENVALUE_FLOOR: f64 = -1e-10;

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Build from row-major entries. Panics if the length does not match or
    /// an entry is not finite.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        assert!(
            entries.iter().all(|z| z.re.is_finite() && z.im.is_finite()),
            "matrix entries must be finite"
        );
        Self { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_diag(diag: &[Complex64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Convenience constructor from nested rows (testing and small literals).
    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Self {
        let nr = rows.len();
        let nc = if nr == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        Self::new(nr, nc, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Matrix product. Errors with `DimensionMismatch` on non-conforming shapes.
    pub fn mul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "matmul {}x{} by {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self[(i, k)];
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += aik * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// Kronecker product. Index ordering follows the product basis
    /// `|m₁⟩⊗|m₂⟩ ↔ k₁·dim₂ + k₂`, matching [`crate::su2::FockVector::tensor`].
    pub fn tensor(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self[(i1, j1)];
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        out[(i1 * other.rows + i2, j1 * other.cols + j2)] = a * other[(i2, j2)];
                    }
                }
            }
        }
        out
    }

    pub fn scaled(&self, factor: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn add(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "add {}x{} and {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        Ok(ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.add(&other.scaled(Complex64::new(-1.0, 0.0)))
    }

    /// Apply to a vector: `A·v`.
    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: format!("apply {}x{} to vector of length {}", self.rows, self.cols, v.len()),
            });
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.rows];
        for i in 0..self.rows {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..self.cols {
                acc += self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        Ok(out)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Largest entry magnitude, `‖A‖_max`.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `max_ij |A_ij − conj(A_ji)|`, zero for an exactly Hermitian matrix.
    pub fn hermiticity_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols.min(self.rows) {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// `max_ij |A_ij + conj(A_ji)|`, zero for an exactly anti-Hermitian matrix.
    pub fn antihermiticity_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols.min(self.rows) {
                let d = (self[(i, j)] + self[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    fn off_diagonal_frobenius(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j {
                    acc += self[(i, j)].norm_sqr();
                }
            }
        }
        acc.sqrt()
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * self.cols + j]
    }
}

/// Eigendecomposition of a Hermitian matrix: `A = V Λ V†`.
///
/// Eigenvalues are sorted in descending order; ties keep the order produced
/// by the iteration (stable sort). Columns of `eigenvectors` are orthonormal,
/// each with its largest-magnitude entry rotated to the positive real axis.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigen {
    /// `V Λ V†`, for reconstruction checks.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let lambda = ComplexMatrix::from_diag(
            &self
                .eigenvalues
                .iter()
                .map(|&l| Complex64::new(l, 0.0))
                .collect::<Vec<_>>(),
        );
        v.mul(&lambda).unwrap().mul(&v.adjoint()).unwrap()
    }
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// `tol` bounds the allowed Hermiticity defect `max |A_ij − conj(A_ji)|`; the
/// iteration itself runs on the symmetrized matrix `(A + A†)/2`. Convergence
/// target is an off-diagonal Frobenius norm below `1e-13` of the input
/// Frobenius norm, within a budget of 100 sweeps.
pub fn hermitian_eigen(a: &ComplexMatrix, tol: f64) -> Result<HermitianEigen> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            context: format!("hermitian_eigen on {}x{}", a.rows, a.cols),
        });
    }
    let residual = a.hermiticity_residual();
    if residual > tol {
        return Err(Error::NotHermitian { residual, tol });
    }
    let n = a.rows;

    // Symmetrize, so the iteration sees an exactly Hermitian matrix.
    let mut w = a.clone();
    for i in 0..n {
        w[(i, i)] = Complex64::new(w[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let avg = (w[(i, j)] + w[(j, i)].conj()) * 0.5;
            w[(i, j)] = avg;
            w[(j, i)] = avg.conj();
        }
    }

    let mut v = ComplexMatrix::identity(n);
    let fro = w.frobenius();
    let off_tol = EIGEN_OFF_TOL * fro;
    // Pivots below this cannot push the off-diagonal norm back over off_tol.
    let skip = off_tol / (n.max(1) as f64);

    let mut converged = fro == 0.0 || n == 1;
    let mut last_off = w.off_diagonal_frobenius();
    if last_off <= off_tol {
        converged = true;
    }
    let mut sweeps = 0;
    while !converged && sweeps < EIGEN_SWEEP_LIMIT {
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = w[(p, q)];
                let r = apq.norm();
                if r <= skip {
                    continue;
                }
                // Phase factor turning the pivot real, then a real rotation.
                let em = apq.conj() / r; // e^{-i beta}
                let ep = em.conj();
                let app = w[(p, p)].re;
                let aqq = w[(q, q)].re;
                let zeta = (aqq - app) / (2.0 * r);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
                } else {
                    -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;

                // Column update: W <- W R with
                // R_pp = c, R_pq = s, R_qp = -s e^{-i beta}, R_qq = c e^{-i beta}.
                for k in 0..n {
                    let wkp = w[(k, p)];
                    let wkq = w[(k, q)];
                    w[(k, p)] = wkp * c - wkq * (em * s);
                    w[(k, q)] = wkp * s + wkq * (em * c);
                }
                // Row update: W <- R† W.
                for k in 0..n {
                    let wpk = w[(p, k)];
                    let wqk = w[(q, k)];
                    w[(p, k)] = wpk * c - wqk * (ep * s);
                    w[(q, k)] = wpk * s + wqk * (ep * c);
                }
                // Pivot annihilated exactly; diagonals stay real.
                w[(p, q)] = Complex64::new(0.0, 0.0);
                w[(q, p)] = Complex64::new(0.0, 0.0);
                w[(p, p)] = Complex64::new(w[(p, p)].re, 0.0);
                w[(q, q)] = Complex64::new(w[(q, q)].re, 0.0);

                // Accumulate eigenvectors: V <- V R.
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c - vkq * (em * s);
                    v[(k, q)] = vkp * s + vkq * (em * c);
                }
            }
        }
        sweeps += 1;
        last_off = w.off_diagonal_frobenius();
        if last_off <= off_tol {
            converged = true;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            sweeps,
            off: last_off,
        });
    }

    let raw: Vec<f64> = (0..n).map(|i| w[(i, i)].re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    // Stable sort: descending eigenvalues, ties keep original index order.
    order.sort_by(|&i, &j| raw[j].partial_cmp(&raw[i]).unwrap());

    let mut eigenvalues = Vec::with_capacity(n);
    let mut eigenvectors = ComplexMatrix::zeros(n, n);
    for (col, &src) in order.iter().enumerate() {
        eigenvalues.push(raw[src]);
        // Canonical phase: largest-magnitude entry real positive.
        let mut best = 0usize;
        let mut best_mag = 0.0f64;
        for k in 0..n {
            let mag = v[(k, src)].norm();
            if mag > best_mag {
                best_mag = mag;
                best = k;
            }
        }
        let phase = if best_mag > 0.0 {
            v[(best, src)].conj() / best_mag
        } else {
            Complex64::new(1.0, 0.0)
        };
        for k in 0..n {
            eigenvectors[(k, col)] = v[(k, src)] * phase;
        }
    }

    Ok(HermitianEigen {
        eigenvalues,
        eigenvectors,
    })
}

/// Hermitian square root of a positive semidefinite matrix.
///
/// Eigenvalues in `[-1e-10, 0)` are treated as floating-point drift and
/// clamped to zero; anything below that is a genuine PSD violation.
pub fn psd_sqrt(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let tol = 1e-10 * (1.0 + a.max_abs());
    let eig = hermitian_eigen(a, tol)?;
    for &l in &eig.eigenvalues {
        if l < PSD_EIGENVALUE_FLOOR {
            return Err(Error::NotPsd { eigenvalue: l });
        }
    }
    let sqrt_diag: Vec<Complex64> = eig
        .eigenvalues
        .iter()
        .map(|&l| Complex64::new(l.max(0.0).sqrt(), 0.0))
        .collect();
    let v = &eig.eigenvectors;
    let s = v
        .mul(&ComplexMatrix::from_diag(&sqrt_diag))?
        .mul(&v.adjoint())?;
    // Kill rounding asymmetry so S is Hermitian to the last bit.
    let mut sym = s.clone();
    let n = sym.rows();
    for i in 0..n {
        sym[(i, i)] = Complex64::new(sym[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let avg = (s[(i, j)] + s[(j, i)].conj()) * 0.5;
            sym[(i, j)] = avg;
            sym[(j, i)] = avg.conj();
        }
    }
    Ok(sym)
}

/// Unitary exponential `U = exp(A)` of an anti-Hermitian matrix, evaluated
/// through the Hermitian eigendecomposition of `iA`:
/// `exp(A) = V e^{-iΛ} V†` where `iA = V Λ V†`.
pub fn antihermitian_exp(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let residual = a.antihermiticity_residual();
    if residual > 1e-12 {
        return Err(Error::NotAntiHermitian { residual });
    }
    let h = a.scaled(Complex64::new(0.0, 1.0));
    let eig = hermitian_eigen(&h, 1e-11 * (1.0 + h.max_abs()))?;
    let phases: Vec<Complex64> = eig
        .eigenvalues
        .iter()
        .map(|&l| Complex64::from_polar(1.0, -l))
        .collect();
    let v = &eig.eigenvectors;
    v.mul(&ComplexMatrix::from_diag(&phases))?.mul(&v.adjoint())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pauli_y() -> ComplexMatrix {
        ComplexMatrix::from_rows(vec![
            vec![c(0.0, 0.0), c(0.0, -1.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ])
    }

    // Deterministic pseudo-random complex entries, no external RNG needed here.
    fn lcg_matrix(n: usize, seed: &mut u64) -> ComplexMatrix {
        let mut next = || {
            *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((*seed >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        let entries: Vec<Complex64> = (0..n * n).map(|_| c(next(), next())).collect();
        ComplexMatrix::new(n, n, entries)
    }

    fn random_hermitian(n: usize, seed: &mut u64) -> ComplexMatrix {
        let m = lcg_matrix(n, seed);
        m.add(&m.adjoint()).unwrap().scaled(c(0.5, 0.0))
    }

    #[test]
    fn eigen_identity() {
        let eig = hermitian_eigen(&ComplexMatrix::identity(4), 0.0).unwrap();
        for &l in &eig.eigenvalues {
            assert!((l - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn eigen_pauli_y() {
        let eig = hermitian_eigen(&pauli_y(), 1e-14).unwrap();
        assert!((eig.eigenvalues[0] - 1.0).abs() < 1e-14);
        assert!((eig.eigenvalues[1] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn eigen_reconstruction_random() {
        let mut seed = 0x12345678u64;
        for _ in 0..20 {
            let a = random_hermitian(8, &mut seed);
            let eig = hermitian_eigen(&a, 1e-12).unwrap();
            let residual = a.sub(&eig.reconstruct()).unwrap().max_abs();
            assert!(residual <= 1e-11 * a.max_abs(), "residual {residual}");
            let gram = eig.eigenvectors.adjoint().mul(&eig.eigenvectors).unwrap();
            let defect = gram.sub(&ComplexMatrix::identity(8)).unwrap().max_abs();
            assert!(defect <= 1e-11, "gram defect {defect}");
        }
    }

    #[test]
    fn eigen_rejects_non_hermitian() {
        let m = ComplexMatrix::from_rows(vec![
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(0.5, 0.0), c(0.0, 0.0)],
        ]);
        assert!(matches!(
            hermitian_eigen(&m, 1e-12),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn eigen_descending_with_stable_ties() {
        let a = ComplexMatrix::from_diag(&[c(2.0, 0.0), c(5.0, 0.0), c(2.0, 0.0)]);
        let eig = hermitian_eigen(&a, 0.0).unwrap();
        assert_eq!(eig.eigenvalues, vec![5.0, 2.0, 2.0]);
        // Tie between original indices 0 and 2 keeps index order.
        assert!((eig.eigenvectors[(0, 1)].re - 1.0).abs() < 1e-14);
        assert!((eig.eigenvectors[(2, 2)].re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn sqrt_identity_and_diagonal() {
        let s = psd_sqrt(&ComplexMatrix::identity(3)).unwrap();
        assert!(s.sub(&ComplexMatrix::identity(3)).unwrap().max_abs() < 1e-13);

        let a = ComplexMatrix::from_diag(&[c(4.0, 0.0), c(9.0, 0.0)]);
        let s = psd_sqrt(&a).unwrap();
        assert!((s[(0, 0)].re - 2.0).abs() < 1e-12);
        assert!((s[(1, 1)].re - 3.0).abs() < 1e-12);
    }

    #[test]
    fn sqrt_squares_back() {
        let mut seed = 0x9e3779b9u64;
        for _ in 0..20 {
            let b = lcg_matrix(4, &mut seed);
            let a = b.mul(&b.adjoint()).unwrap();
            let s = psd_sqrt(&a).unwrap();
            let back = s.mul(&s).unwrap();
            assert!(back.sub(&a).unwrap().max_abs() < 1e-9);
        }
    }

    #[test]
    fn sqrt_rejects_negative() {
        let a = ComplexMatrix::from_diag(&[c(1.0, 0.0), c(-1e-3, 0.0)]);
        assert!(matches!(psd_sqrt(&a), Err(Error::NotPsd { .. })));
    }

    #[test]
    fn exp_zero_is_identity() {
        let u = antihermitian_exp(&ComplexMatrix::zeros(3, 3)).unwrap();
        assert!(u.sub(&ComplexMatrix::identity(3)).unwrap().max_abs() < 1e-14);
    }

    #[test]
    fn exp_diagonal_phase() {
        // A = i pi sigma_z / 2 -> diag(e^{i pi/2}, e^{-i pi/2})
        let a = ComplexMatrix::from_diag(&[
            c(0.0, std::f64::consts::FRAC_PI_2),
            c(0.0, -std::f64::consts::FRAC_PI_2),
        ]);
        let u = antihermitian_exp(&a).unwrap();
        assert!((u[(0, 0)] - c(0.0, 1.0)).norm() < 1e-13);
        assert!((u[(1, 1)] - c(0.0, -1.0)).norm() < 1e-13);
    }

    #[test]
    fn exp_is_unitary() {
        let mut seed = 0xfeedbeefu64;
        for _ in 0..10 {
            let m = lcg_matrix(5, &mut seed);
            let a = m.sub(&m.adjoint()).unwrap().scaled(c(0.5, 0.0));
            let u = antihermitian_exp(&a).unwrap();
            let defect = u
                .adjoint()
                .mul(&u)
                .unwrap()
                .sub(&ComplexMatrix::identity(5))
                .unwrap()
                .max_abs();
            assert!(defect < 1e-10, "unitarity defect {defect}");
            let inv = antihermitian_exp(&a.scaled(c(-1.0, 0.0))).unwrap();
            let round = u
                .mul(&inv)
                .unwrap()
                .sub(&ComplexMatrix::identity(5))
                .unwrap()
                .max_abs();
            assert!(round < 1e-10, "exp(A) exp(-A) defect {round}");
        }
    }

    #[test]
    fn exp_rejects_hermitian_input() {
        let a = ComplexMatrix::from_diag(&[c(1.0, 0.0), c(2.0, 0.0)]);
        assert!(matches!(
            antihermitian_exp(&a),
            Err(Error::NotAntiHermitian { .. })
        ));
    }

    #[test]
    fn tensor_pauli_y_entry() {
        let yy = pauli_y().tensor(&pauli_y());
        assert!((yy[(0, 3)] - c(-1.0, 0.0)).norm() < 1e-15);
        assert!((yy[(1, 2)] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((yy[(3, 0)] - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn adjoint_is_involutive() {
        let mut seed = 7u64;
        let m = lcg_matrix(4, &mut seed);
        assert_eq!(m.adjoint().adjoint(), m);
    }

    #[test]
    fn matmul_identity() {
        let mut seed = 11u64;
        let m = lcg_matrix(6, &mut seed);
        let prod = m.mul(&ComplexMatrix::identity(6)).unwrap();
        assert_eq!(prod, m);
    }

    #[test]
    fn matmul_dimension_mismatch() {
        let a = ComplexMatrix::zeros(2, 3);
        let b = ComplexMatrix::zeros(2, 3);
        assert!(matches!(a.mul(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn tensor_associativity_exact_on_integer_entries() {
        // Integer-valued entries keep every intermediate product exact, so the
        // two association orders must agree bit for bit.
        let mut seed = 0xabcdefu64;
        let mut int_matrix = |n: usize| {
            let m = lcg_matrix(n, &mut seed);
            let ints: Vec<Complex64> = m
                .entries()
                .iter()
                .map(|z| c((z.re * 3.0).round(), (z.im * 3.0).round()))
                .collect();
            ComplexMatrix::new(n, n, ints)
        };
        let a = int_matrix(2);
        let b = int_matrix(3);
        let d = int_matrix(2);
        assert_eq!(a.tensor(&b).tensor(&d), a.tensor(&b.tensor(&d)));
    }
}
