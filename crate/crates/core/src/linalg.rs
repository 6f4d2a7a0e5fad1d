//! Small dense linear-algebra helpers shared across modules.

use crate::error::{CoreError, Result};
use crate::C64;
use nalgebra::{DMatrix, DVector};
use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Hermitian eigendecomposition `H = V diag(λ) V†`.
///
/// `H` must be Hermitian; the decomposition itself does not check this.
pub fn hermitian_eig(h: &DMatrix<C64>) -> Result<(DVector<f64>, DMatrix<C64>)> {
    let dim = h.nrows();
    let max_abs = max_abs(h);
    let eig = nalgebra::SymmetricEigen::try_new(h.clone(), f64::EPSILON, 0).ok_or_else(|| {
        CoreError::NumericalFailure {
            context: "hermitian eigendecomposition did not converge".into(),
            dim,
            max_abs,
        }
    })?;
    Ok((eig.eigenvalues, eig.eigenvectors))
}

/// `V diag(exp(factor·λ_j)) V†` for a Hermitian `H` with eigensystem `(λ, V)`.
pub fn exp_from_eig(vals: &DVector<f64>, vecs: &DMatrix<C64>, factor: C64) -> DMatrix<C64> {
    let phases = DVector::from_iterator(vals.len(), vals.iter().map(|&l| (factor * l).exp()));
    let mut scaled = vecs.clone();
    for (j, mut col) in scaled.column_iter_mut().enumerate() {
        col *= phases[j];
    }
    &scaled * vecs.adjoint()
}

/// Largest entry magnitude.
pub fn max_abs(m: &DMatrix<C64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `‖U†U − 1‖_max`.
pub fn unitarity_defect(m: &DMatrix<C64>) -> f64 {
    let g = m.adjoint() * m;
    let n = g.nrows();
    let mut defect = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
            defect = defect.max((g[(i, j)] - target).norm());
        }
    }
    defect
}

/// `‖A − A†‖_max`.
pub fn hermiticity_defect(m: &DMatrix<C64>) -> f64 {
    let d = m - m.adjoint();
    max_abs(&d)
}

/// Dense Kronecker product `a ⊗ b`.
pub fn kron(a: &DMatrix<C64>, b: &DMatrix<C64>) -> DMatrix<C64> {
    a.kronecker(b)
}

/// Seeded random Hermitian matrix `A + A†` with the entries of `A` drawn
/// uniformly from the complex unit square `[0,1) × [0,1)`.
pub fn random_hermitian(dim: usize, seed: u64) -> DMatrix<C64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let unit = Uniform::new(0.0f64, 1.0f64);
    let a = DMatrix::from_fn(dim, dim, |_, _| {
        let re = unit.sample(&mut rng);
        let im = unit.sample(&mut rng);
        C64::new(re, im)
    });
    &a + a.adjoint()
}

/// Deterministic pairwise sum (reduction order independent of chunking).
pub fn pairwise_sum(values: &[C64]) -> C64 {
    match values.len() {
        0 => C64::new(0.0, 0.0),
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
///
/// Newton iteration on the Legendre recurrence; accurate to ~1e-15 for the
/// orders used here (≤ 64).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        // Chebyshev-based initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and its derivative by upward recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Integrate `f` over `[a, b]` with a fixed-order Gauss–Legendre rule.
pub fn integrate_gl<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64, nodes: &[f64], weights: &[f64]) -> C64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = C64::new(0.0, 0.0);
    for (x, w) in nodes.iter().zip(weights) {
        acc += f(mid + half * x) * *w;
    }
    acc * half
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn eig_reconstructs_hermitian_matrix() {
        let h = random_hermitian(8, 3);
        let (vals, vecs) = hermitian_eig(&h).unwrap();
        let mut rebuilt = DMatrix::zeros(8, 8);
        for j in 0..8 {
            let col = vecs.column(j);
            rebuilt += (col * col.adjoint()) * C64::new(vals[j], 0.0);
        }
        assert!(max_abs(&(&rebuilt - &h)) < 1e-12);
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let h = random_hermitian(5, 11);
        let (vals, vecs) = hermitian_eig(&h).unwrap();
        let u = exp_from_eig(&vals, &vecs, C64::new(0.0, 0.0));
        assert!(max_abs(&(&u - &DMatrix::identity(5, 5))) < 1e-13);
    }

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let (nodes, weights) = gauss_legendre(8);
        // Exact for degree <= 15; test x^10 over [-1, 1] = 2/11.
        let val = integrate_gl(&|x| C64::new(x.powi(10), 0.0), -1.0, 1.0, &nodes, &weights);
        assert_relative_eq!(val.re, 2.0 / 11.0, epsilon = 1e-14);
        assert!(val.im.abs() < 1e-16);
    }

    #[test]
    fn pairwise_sum_matches_sequential_on_small_input() {
        let vals: Vec<C64> = (0..17).map(|k| C64::new(k as f64, -(k as f64) / 3.0)).collect();
        let seq: C64 = vals.iter().sum();
        assert!((pairwise_sum(&vals) - seq).norm() < 1e-12);
    }

    #[test]
    fn random_hermitian_is_hermitian_and_seeded() {
        let a = random_hermitian(6, 42);
        let b = random_hermitian(6, 42);
        let c = random_hermitian(6, 43);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(hermiticity_defect(&a) == 0.0);
    }
}
