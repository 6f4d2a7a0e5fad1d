//! Single-slice Hilbert space: bases, Hamiltonians and one-step propagators.
//!
//! Two kinds of slice space are supported. A periodic position grid carries
//! exact DFT momenta, so resolution-of-identity sums and the momentum-basis
//! phase conventions hold to machine precision. A truncated Fock space
//! carries the bosonic ladder operators of a harmonic oscillator with mass
//! `m` and frequency `ω`.
//!
//! Phase convention on the grid: `⟨q_j|p_k⟩ = e^{i p_k q_j}/√M` with
//! `p_k = 2πk/(MΔq)` for `k ∈ {-⌊M/2⌋, …, ⌈M/2⌉-1}`. The continuum factor
//! `1/√(2π)` is absorbed into the unitary `1/√M` normalization; every
//! identity tested downstream is either a normalization-independent ratio or
//! a full trace, so the choice is safe. It is recorded here because the
//! phase-sensitive tests (tensor plane-wave shifts) depend on it.

use crate::error::{CoreError, Result};
use crate::linalg;
use crate::C64;
use nalgebra::DMatrix;

/// What the single-slice space is built from.
#[derive(Debug, Clone, PartialEq)]
pub enum SliceKind {
    /// Periodic position grid with spacing `dq` and origin `q_min`.
    PositionGrid { dq: f64, q_min: f64 },
    /// Truncated Fock space of a harmonic oscillator (`a = √(mω)` sets the
    /// length scale of the ladder operators).
    FockTruncation { mass: f64, omega: f64 },
}

/// A single-time Hilbert space of dimension `M ≥ 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceSpace {
    kind: SliceKind,
    dim: usize,
}

impl SliceSpace {
    /// Periodic position grid with `dim` points.
    pub fn position_grid(dim: usize, dq: f64, q_min: f64) -> Result<Self> {
        if dim < 2 {
            return Err(CoreError::DimensionMismatch { expected: 2, got: dim });
        }
        if !(dq > 0.0 && dq.is_finite() && q_min.is_finite()) {
            return Err(CoreError::OutOfRange(format!("grid dq = {dq}, q_min = {q_min}")));
        }
        Ok(Self { kind: SliceKind::PositionGrid { dq, q_min }, dim })
    }

    /// Truncated Fock space with `dim` levels.
    pub fn fock(dim: usize, mass: f64, omega: f64) -> Result<Self> {
        if dim < 2 {
            return Err(CoreError::DimensionMismatch { expected: 2, got: dim });
        }
        if !(mass > 0.0 && omega > 0.0) {
            return Err(CoreError::OutOfRange(format!("fock mass = {mass}, omega = {omega}")));
        }
        Ok(Self { kind: SliceKind::FockTruncation { mass, omega }, dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> &SliceKind {
        &self.kind
    }

    /// Grid points `q_j = q_min + jΔq` (position grids only).
    pub fn grid_points(&self) -> Result<Vec<f64>> {
        match self.kind {
            SliceKind::PositionGrid { dq, q_min } => {
                Ok((0..self.dim).map(|j| q_min + j as f64 * dq).collect())
            }
            _ => Err(CoreError::OutOfRange("grid_points on a Fock space".into())),
        }
    }

    /// Grid momenta `p_k = 2πk/(MΔq)`, `k ∈ {-⌊M/2⌋, …, ⌈M/2⌉-1}`, in the
    /// column order of [`dft_momentum_basis`].
    pub fn momenta(&self) -> Result<Vec<f64>> {
        match self.kind {
            SliceKind::PositionGrid { dq, .. } => {
                let m = self.dim as i64;
                let lo = -(m / 2);
                Ok((lo..lo + m)
                    .map(|k| 2.0 * std::f64::consts::PI * k as f64 / (m as f64 * dq))
                    .collect())
            }
            _ => Err(CoreError::OutOfRange("momenta on a Fock space".into())),
        }
    }

    /// Annihilation operator, `⟨n-1|a|n⟩ = √n` for `n < M`, zero elsewhere.
    pub fn annihilation(&self) -> SliceOperator {
        let m = self.dim;
        let mat = DMatrix::from_fn(m, m, |r, c| {
            if c >= 1 && r == c - 1 {
                C64::new((c as f64).sqrt(), 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        });
        SliceOperator::new_unchecked(self.clone(), mat, "a")
    }

    /// Creation operator `a†`.
    pub fn creation(&self) -> SliceOperator {
        let a = self.annihilation();
        SliceOperator::new_unchecked(self.clone(), a.matrix().adjoint(), "a^dag")
    }

    /// Position operator. Diagonal `q_j` on a grid; `(a + a†)/√(2mω)` on a
    /// Fock space.
    pub fn position_op(&self) -> SliceOperator {
        match self.kind {
            SliceKind::PositionGrid { .. } => {
                let q = self.grid_points().expect("grid");
                let mat = DMatrix::from_fn(self.dim, self.dim, |r, c| {
                    if r == c { C64::new(q[r], 0.0) } else { C64::new(0.0, 0.0) }
                });
                SliceOperator::new_unchecked(self.clone(), mat, "q")
            }
            SliceKind::FockTruncation { mass, omega } => {
                let scale = 1.0 / (2.0 * mass * omega).sqrt();
                let a = self.annihilation();
                let mat = (a.matrix() + a.matrix().adjoint()) * C64::new(scale, 0.0);
                SliceOperator::new_unchecked(self.clone(), mat, "q")
            }
        }
    }

    /// Harmonic Hamiltonian of a Fock space, exactly diagonal `ω(n + ½)`.
    ///
    /// The diagonal form is used rather than `p²/2m + mω²q²/2` built from
    /// truncated ladder operators: the two differ only in the top level, and
    /// the diagonal form keeps the ground state and all levels below the cut
    /// exact, which the truncation-sweep comparisons rely on.
    pub fn harmonic_hamiltonian(&self) -> Result<SliceOperator> {
        match self.kind {
            SliceKind::FockTruncation { omega, .. } => {
                let mat = DMatrix::from_fn(self.dim, self.dim, |r, c| {
                    if r == c {
                        C64::new(omega * (r as f64 + 0.5), 0.0)
                    } else {
                        C64::new(0.0, 0.0)
                    }
                });
                Ok(SliceOperator::new_unchecked(self.clone(), mat, "H_harmonic"))
            }
            _ => Err(CoreError::OutOfRange("harmonic_hamiltonian on a grid space".into())),
        }
    }

    /// Identity operator on this space.
    pub fn identity_op(&self) -> SliceOperator {
        SliceOperator::new_unchecked(self.clone(), DMatrix::identity(self.dim, self.dim), "1")
    }
}

/// A dense operator on one slice, tagged with the space it acts on.
#[derive(Debug, Clone)]
pub struct SliceOperator {
    space: SliceSpace,
    matrix: DMatrix<C64>,
    label: String,
}

impl SliceOperator {
    /// Wrap a matrix after checking its dimension against the space.
    pub fn new(space: SliceSpace, matrix: DMatrix<C64>, label: impl Into<String>) -> Result<Self> {
        if matrix.nrows() != space.dim() || matrix.ncols() != space.dim() {
            return Err(CoreError::DimensionMismatch {
                expected: space.dim(),
                got: matrix.nrows(),
            });
        }
        Ok(Self { space, matrix, label: label.into() })
    }

    fn new_unchecked(space: SliceSpace, matrix: DMatrix<C64>, label: &str) -> Self {
        Self { space, matrix, label: label.to_string() }
    }

    pub fn space(&self) -> &SliceSpace {
        &self.space
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn adjoint(&self) -> SliceOperator {
        Self {
            space: self.space.clone(),
            matrix: self.matrix.adjoint(),
            label: format!("{}^dag", self.label),
        }
    }

    /// `‖U†U − 1‖_max`.
    pub fn unitarity_defect(&self) -> f64 {
        linalg::unitarity_defect(&self.matrix)
    }

    /// `‖A − A†‖_max`.
    pub fn hermiticity_defect(&self) -> f64 {
        linalg::hermiticity_defect(&self.matrix)
    }
}

/// `H = p²/2m + V(q)` on a position grid, with the kinetic term exact in the
/// DFT momentum basis and `V` diagonal in position.
pub fn build_hamiltonian<F: Fn(f64) -> f64>(
    space: &SliceSpace,
    potential: F,
    mass: f64,
) -> Result<SliceOperator> {
    let q = space.grid_points()?;
    let p = space.momenta()?;
    let m = space.dim();
    let f = dft_momentum_basis(space)?;
    let mut kin_diag = DMatrix::<C64>::zeros(m, m);
    for (k, &pk) in p.iter().enumerate() {
        kin_diag[(k, k)] = C64::new(pk * pk / (2.0 * mass), 0.0);
    }
    let mut h = f.matrix() * kin_diag * f.matrix().adjoint();
    for (j, &qj) in q.iter().enumerate() {
        let v = potential(qj);
        if !v.is_finite() {
            return Err(CoreError::InvalidPotential { index: j, q: qj, value: v });
        }
        h[(j, j)] += C64::new(v, 0.0);
    }
    // Symmetrize away the rounding left by the similarity transform.
    let herm = (&h + h.adjoint()) * C64::new(0.5, 0.0);
    SliceOperator::new(space.clone(), herm, "H")
}

/// `e^{-iH·dt}` through the eigendecomposition of the Hermitian `H`.
///
/// `dt` may be complex; `dt = -iβ` performs the Wick rotation `e^{-βH}`.
/// The result is unitary when `dt` is real.
pub fn propagator_step(h: &SliceOperator, dt: C64) -> Result<SliceOperator> {
    let (vals, vecs) = linalg::hermitian_eig(h.matrix())?;
    let u = linalg::exp_from_eig(&vals, &vecs, C64::new(0.0, -1.0) * dt);
    SliceOperator::new(h.space().clone(), u, format!("exp(-i {} dt)", h.label()))
}

/// Unitary change of basis from grid momenta to grid positions: column `k`
/// is the plane wave `⟨q_j|p_k⟩ = e^{i p_k q_j}/√M`.
pub fn dft_momentum_basis(space: &SliceSpace) -> Result<SliceOperator> {
    let q = space.grid_points()?;
    let p = space.momenta()?;
    let m = space.dim();
    let norm = 1.0 / (m as f64).sqrt();
    let mat = DMatrix::from_fn(m, m, |j, k| (C64::new(0.0, 1.0) * p[k] * q[j]).exp() * norm);
    SliceOperator::new(space.clone(), mat, "F")
}
