//! Dense complex linear algebra helpers shared by the whole crate.
//!
//! Everything here is a thin layer over nalgebra: Hermitian eigendecompositions
//! with sorted spectra, singular values, spectral norms, Kronecker products,
//! Gauss-Legendre rules and principal-submatrix compression. All routines are
//! deterministic.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMat = DMatrix<Complex64>;
pub type CVec = DVector<Complex64>;

pub fn czero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

pub fn cone() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

pub fn cre(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

pub fn cim(x: f64) -> Complex64 {
    Complex64::new(0.0, x)
}

/// Hermitian residual ‖M − M†‖_F.
pub fn herm_residual(m: &CMat) -> f64 {
    (m - m.adjoint()).norm()
}

pub fn is_hermitian(m: &CMat, tol: f64) -> bool {
    herm_residual(m) <= tol * (1.0 + m.norm())
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
/// Returns (eigenvalues, eigenvectors as columns).
pub fn hermitian_eigen(m: &CMat) -> (Vec<f64>, CMat) {
    let n = m.nrows();
    if n == 0 {
        return (Vec::new(), CMat::zeros(0, 0));
    }
    let se = nalgebra::SymmetricEigen::new(m.clone());
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| se.eigenvalues[a].partial_cmp(&se.eigenvalues[b]).unwrap());
    let vals: Vec<f64> = idx.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut vecs = CMat::zeros(n, n);
    for (j, &i) in idx.iter().enumerate() {
        vecs.set_column(j, &se.eigenvectors.column(i));
    }
    (vals, vecs)
}

/// Eigenvalues only of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &CMat) -> Vec<f64> {
    let n = m.nrows();
    if n == 0 {
        return Vec::new();
    }
    let mut v: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

/// Apply a scalar function through the eigendecomposition of a Hermitian matrix:
/// U · diag(f(λ)) · U†.
pub fn hermitian_funcalc<F: Fn(f64) -> Complex64>(m: &CMat, f: F) -> CMat {
    let (vals, u) = hermitian_eigen(m);
    let n = m.nrows();
    let mut scaled = u.clone();
    for j in 0..n {
        let fj = f(vals[j]);
        for i in 0..n {
            scaled[(i, j)] *= fj;
        }
    }
    scaled * u.adjoint()
}

/// Singular values, descending.
pub fn singular_values(m: &CMat) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().singular_values().iter().copied().collect();
    s.sort_by(|a, b| b.partial_cmp(a).unwrap());
    s
}

/// Number of singular values strictly above eps.
pub fn eps_rank(svals: &[f64], eps: f64) -> usize {
    svals.iter().filter(|&&s| s > eps).count()
}

/// Largest singular value. Uses a full SVD below `POWER_CUTOFF`, a deterministic
/// power iteration on M†M above it (adequate for the generous certificate
/// tolerances at those sizes).
pub fn spectral_norm(m: &CMat) -> f64 {
    const POWER_CUTOFF: usize = 512;
    let (r, c) = (m.nrows(), m.ncols());
    if r == 0 || c == 0 {
        return 0.0;
    }
    if r.max(c) <= POWER_CUTOFF {
        return singular_values(m).first().copied().unwrap_or(0.0);
    }
    let mut v = CVec::from_fn(c, |i, _| cre(1.0 + (i as f64 * 0.7371).sin() * 0.1));
    let mut est = 0.0f64;
    for _ in 0..160 {
        let w = m * &v;
        let u = m.adjoint() * w;
        let n = u.norm();
        if n == 0.0 {
            return 0.0;
        }
        let new_est = n.sqrt();
        let rel = (new_est - est).abs() / new_est.max(1e-300);
        v = u / cre(n);
        est = new_est;
        if rel < 1e-13 {
            break;
        }
    }
    est
}

/// Solve M X = B by LU; `None` if M is singular to working precision.
pub fn solve_lu(m: &CMat, b: &CMat) -> Option<CMat> {
    m.clone().lu().solve(b)
}

pub fn invert(m: &CMat) -> Option<CMat> {
    m.clone().try_inverse()
}

/// Kronecker product a ⊗ b with block layout (i,j) ↦ a[i,j]·b.
pub fn kron(a: &CMat, b: &CMat) -> CMat {
    let (ar, ac) = (a.nrows(), a.ncols());
    let (br, bc) = (b.nrows(), b.ncols());
    let mut out = CMat::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let s = a[(i, j)];
            if s != czero() {
                for p in 0..br {
                    for q in 0..bc {
                        out[(i * br + p, j * bc + q)] = s * b[(p, q)];
                    }
                }
            }
        }
    }
    out
}

/// Principal submatrix on the given (row = column) index set.
pub fn compress(m: &CMat, idx: &[usize]) -> CMat {
    let k = idx.len();
    CMat::from_fn(k, k, |i, j| m[(idx[i], idx[j])])
}

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on P_n.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // evaluate P_n(x) and P_n'(x) by recurrence
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let pk = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = pk;
            }
            let p = if n == 1 { x } else { p1 };
            let pm1 = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * p - pm1) / (x * x - 1.0);
            let dx = p / dp;
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

/// Deterministic complex matrix with entries from the given RNG.
pub fn random_cmat<R: rand::Rng>(rng: &mut R, rows: usize, cols: usize) -> CMat {
    CMat::from_fn(rows, cols, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
}

/// Deterministic Hermitian matrix.
pub fn random_hermitian<R: rand::Rng>(rng: &mut R, n: usize) -> CMat {
    let m = random_cmat(rng, n, n);
    (&m + m.adjoint()) * cre(0.5)
}
