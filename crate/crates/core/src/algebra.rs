//! Finite-dimensional graded Real C*-algebra backends.
//!
//! Three families are provided: Clifford algebras Cl^{p,q}, full complex matrix
//! algebras, and group algebras of finite groups. Each backend carries exact
//! structure constants, a star map, a grading automorphism α, a Real structure κ
//! and a faithful *-representation through which all norms are computed.
//!
//! In every backend each basis element is represented by a *monomial* matrix
//! (at most one nonzero entry per column), so products and homomorphism checks
//! on basis elements are exact integer-coefficient arithmetic, and the basis
//! representation matrices are pairwise Frobenius-orthogonal. The latter makes
//! reconstruction of an algebra element from its representation a projection
//! rather than a least-squares solve.

use crate::error::Error;
use crate::linalg::{cre, czero, CMat, CVec};
use crate::Result;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Default cap on p+q for Clifford signatures (representation dimension 2^8).
pub const MAX_CLIFFORD_RANK: usize = 8;

/// Cap on finite group order.
pub const MAX_GROUP_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CliffordSignature {
    pub p: usize,
    pub q: usize,
}

impl CliffordSignature {
    pub fn new(p: usize, q: usize) -> Self {
        Self { p, q }
    }
    pub fn rank(&self) -> usize {
        self.p + self.q
    }
}

/// What kind of algebra a descriptor encodes. This is the serialized form:
/// representations and tables are rebuilt deterministically from it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlgebraKind {
    Clifford { p: usize, q: usize },
    Matrix { n: usize },
    Group { table: Vec<Vec<usize>> },
}

/// A matrix with at most one nonzero entry per column: `column c ↦ (row[c], coef[c])`.
/// Products, adjoints and traces of these are exact and O(dim).
#[derive(Debug, Clone, PartialEq)]
pub struct Monomial {
    pub dim: usize,
    pub rows: Vec<usize>,
    pub coefs: Vec<Complex64>,
}

impl Monomial {
    pub fn identity(dim: usize) -> Self {
        Self {
            dim,
            rows: (0..dim).collect(),
            coefs: vec![cre(1.0); dim],
        }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            rows: vec![0; dim],
            coefs: vec![czero(); dim],
        }
    }

    /// self · other (composition of column maps).
    pub fn mul(&self, other: &Self) -> Self {
        let dim = self.dim;
        let mut rows = vec![0; dim];
        let mut coefs = vec![czero(); dim];
        for c in 0..dim {
            let mid = other.rows[c];
            let k = other.coefs[c];
            if k != czero() {
                rows[c] = self.rows[mid];
                coefs[c] = k * self.coefs[mid];
            }
        }
        Self { dim, rows, coefs }
    }

    /// Conjugate transpose. Only valid when nonzero columns hit distinct rows
    /// (true for all basis representations in this crate).
    pub fn adjoint(&self) -> Self {
        let dim = self.dim;
        let mut rows = vec![0; dim];
        let mut coefs = vec![czero(); dim];
        for c in 0..dim {
            if self.coefs[c] != czero() {
                rows[self.rows[c]] = c;
                coefs[self.rows[c]] = self.coefs[c].conj();
            }
        }
        Self { dim, rows, coefs }
    }

    pub fn to_dense(&self) -> CMat {
        let mut m = CMat::zeros(self.dim, self.dim);
        for c in 0..self.dim {
            if self.coefs[c] != czero() {
                m[(self.rows[c], c)] += self.coefs[c];
            }
        }
        m
    }

    /// tr(self† · b) for dense b, in O(dim).
    pub fn adjoint_trace_with(&self, b: &CMat) -> Complex64 {
        let mut t = czero();
        for c in 0..self.dim {
            if self.coefs[c] != czero() {
                t += self.coefs[c].conj() * b[(self.rows[c], c)];
            }
        }
        t
    }

    /// Squared Frobenius norm.
    pub fn frob2(&self) -> f64 {
        self.coefs.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if self.dim != other.dim {
            return false;
        }
        for c in 0..self.dim {
            let a = if self.coefs[c] == czero() { None } else { Some((self.rows[c], self.coefs[c])) };
            let b = if other.coefs[c] == czero() { None } else { Some((other.rows[c], other.coefs[c])) };
            match (a, b) {
                (None, None) => {}
                (Some((ra, ca)), Some((rb, cb))) => {
                    if ra != rb || (ca - cb).norm() > tol {
                        return false;
                    }
                }
                _ => return false,
            }
        }
        true
    }
}

/// Descriptor of a finite-dimensional graded Real C*-algebra.
///
/// `mult[i*dim + j]` is the single term of e_i · e_j (all three backends have
/// monomial structure constants). `star_perm`/`star_coef` give the star map on
/// basis elements; star and κ act conjugate-linearly on coefficients, α
/// linearly. κ fixes every basis element in all backends.
#[derive(Debug)]
pub struct Algebra {
    pub kind: AlgebraKind,
    pub dim: usize,
    pub rep_dim: usize,
    pub basis_names: Vec<String>,
    mult: Vec<Option<(usize, Complex64)>>,
    star_perm: Vec<usize>,
    star_coef: Vec<Complex64>,
    alpha_coef: Vec<Complex64>,
    rep: Vec<Monomial>,
    rep_frob2: Vec<f64>,
    /// basis indices that multiplicatively generate the algebra (with the unit)
    pub generators: Vec<usize>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Algebra {
    /// The Clifford algebra Cl^{p,q}: p generators squaring to −1, q squaring
    /// to +1, all mutually anticommuting. The basis is indexed by subsets of
    /// {1..p+q} as bitmasks; the faithful representation acts on the 2^{p+q}
    /// dimensional exterior algebra by creation/annihilation pairs.
    pub fn clifford(sig: CliffordSignature) -> Result<Arc<Self>> {
        let n = sig.rank();
        if n > MAX_CLIFFORD_RANK {
            return Err(Error::SizeLimit(format!(
                "Cl^{{{},{}}} has rank {} > maximum {}",
                sig.p, sig.q, n, MAX_CLIFFORD_RANK
            )));
        }
        let dim = 1usize << n;
        let p = sig.p;

        // sign of moving the generators of t past those of s, then resolving squares
        let basis_mul = |s: usize, t: usize| -> (usize, f64) {
            let mut sign = 1.0f64;
            for i in 0..n {
                if t & (1 << i) != 0 {
                    // count generators of s strictly above i
                    let above = (s >> (i + 1)).count_ones();
                    if above % 2 == 1 {
                        sign = -sign;
                    }
                }
            }
            let common = s & t;
            for i in 0..n {
                if common & (1 << i) != 0 && i < p {
                    sign = -sign; // e_i^2 = -1 on the V part
                }
            }
            (s ^ t, sign)
        };

        let mut mult = vec![None; dim * dim];
        for s in 0..dim {
            for t in 0..dim {
                let (r, sg) = basis_mul(s, t);
                mult[s * dim + t] = Some((r, cre(sg)));
            }
        }

        // star: reverse the word (sign (-1)^{k(k-1)/2}), star each generator
        let mut star_perm = vec![0usize; dim];
        let mut star_coef = vec![czero(); dim];
        let mut alpha_coef = vec![czero(); dim];
        for s in 0..dim {
            let k = (s as u32).count_ones() as usize;
            let vpart = (s & ((1usize << p).wrapping_sub(1))).count_ones() as usize;
            let mut sg = if (k * (k.saturating_sub(1)) / 2) % 2 == 1 { -1.0 } else { 1.0 };
            if vpart % 2 == 1 {
                sg = -sg;
            }
            star_perm[s] = s;
            star_coef[s] = cre(sg);
            alpha_coef[s] = cre(if k % 2 == 1 { -1.0 } else { 1.0 });
        }

        // generator representations on the exterior algebra
        let m = dim; // 2^n
        let mut gen_rep = Vec::with_capacity(n);
        for i in 0..n {
            let mut rows = vec![0usize; m];
            let mut coefs = vec![czero(); m];
            for t in 0..m {
                let below = (t & ((1usize << i) - 1)).count_ones();
                let sgn = if below % 2 == 1 { -1.0 } else { 1.0 };
                if t & (1 << i) == 0 {
                    rows[t] = t | (1 << i);
                    coefs[t] = cre(sgn); // exterior product
                } else {
                    rows[t] = t & !(1 << i);
                    // interior product; V-part generators act as ε − ι
                    coefs[t] = cre(if i < p { -sgn } else { sgn });
                }
            }
            gen_rep.push(Monomial { dim: m, rows, coefs });
        }

        let mut rep: Vec<Monomial> = Vec::with_capacity(dim);
        for s in 0..dim {
            if s == 0 {
                rep.push(Monomial::identity(m));
                continue;
            }
            let low = s.trailing_zeros() as usize;
            let rest = s & !(1 << low);
            // e_s = e_low · e_rest with low the smallest generator
            let r = gen_rep[low].mul(&rep[rest]);
            rep.push(r);
        }

        let mut basis_names = Vec::with_capacity(dim);
        for s in 0..dim {
            if s == 0 {
                basis_names.push("1".to_string());
                continue;
            }
            let mut parts = Vec::new();
            for i in 0..n {
                if s & (1 << i) != 0 {
                    if i < p {
                        parts.push(format!("e{}", i + 1));
                    } else {
                        parts.push(format!("f{}", i + 1 - p));
                    }
                }
            }
            basis_names.push(parts.join(" "));
        }

        let generators: Vec<usize> = (0..n).map(|i| 1usize << i).collect();
        let rep_frob2 = rep.iter().map(|r| r.frob2()).collect();
        let alg = Self {
            kind: AlgebraKind::Clifford { p: sig.p, q: sig.q },
            dim,
            rep_dim: m,
            basis_names,
            mult,
            star_perm,
            star_coef,
            alpha_coef,
            rep,
            rep_frob2,
            generators,
        };
        alg.verify_representation()?;
        Ok(Arc::new(alg))
    }

    /// The full matrix algebra M_n(ℂ) on the basis of matrix units E_{ij}.
    pub fn matrix(n: usize) -> Result<Arc<Self>> {
        if n == 0 || n > 16 {
            return Err(Error::SizeLimit(format!("matrix algebra size {n} not in 1..=16")));
        }
        let dim = n * n;
        let idx = |i: usize, j: usize| i * n + j;
        let mut mult = vec![None; dim * dim];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        if j == k {
                            mult[idx(i, j) * dim + idx(k, l)] = Some((idx(i, l), cre(1.0)));
                        }
                    }
                }
            }
        }
        let mut star_perm = vec![0; dim];
        let star_coef = vec![cre(1.0); dim];
        let alpha_coef = vec![cre(1.0); dim];
        for i in 0..n {
            for j in 0..n {
                star_perm[idx(i, j)] = idx(j, i);
            }
        }
        let mut rep = Vec::with_capacity(dim);
        let mut basis_names = Vec::with_capacity(dim);
        for i in 0..n {
            for j in 0..n {
                let mut mono = Monomial::zero(n);
                mono.rows[j] = i;
                mono.coefs[j] = cre(1.0);
                rep.push(mono);
                basis_names.push(format!("E{}{}", i + 1, j + 1));
            }
        }
        let rep_frob2 = rep.iter().map(|r| r.frob2()).collect();
        let alg = Self {
            kind: AlgebraKind::Matrix { n },
            dim,
            rep_dim: n,
            basis_names,
            mult,
            star_perm,
            star_coef,
            alpha_coef,
            rep,
            rep_frob2,
            generators: (0..dim).collect(),
        };
        alg.verify_representation()?;
        Ok(Arc::new(alg))
    }

    /// The group algebra ℂ[G] from a multiplication table `table[i][j] = index
    /// of g_i g_j`. The table is checked to be a group; the norm comes from the
    /// left regular representation (reduced = maximal for finite G), g* = g⁻¹,
    /// the grading is trivial and κ conjugates coefficients.
    pub fn group(table: Vec<Vec<usize>>) -> Result<Arc<Self>> {
        let n = table.len();
        if n == 0 || n > MAX_GROUP_ORDER {
            return Err(Error::NotAGroup(format!("order {n} not in 1..={MAX_GROUP_ORDER}")));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&v| v >= n) {
                return Err(Error::NotAGroup("table is not square over valid indices".into()));
            }
        }
        // identity
        let mut identity = None;
        for e in 0..n {
            if (0..n).all(|j| table[e][j] == j && table[j][e] == j) {
                identity = Some(e);
                break;
            }
        }
        let e = identity.ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;
        if e != 0 {
            return Err(Error::NotAGroup("identity must be element 0".into()));
        }
        // inverses
        let mut inv = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                if table[i][j] == e && table[j][i] == e {
                    inv[i] = j;
                }
            }
            if inv[i] == usize::MAX {
                return Err(Error::NotAGroup(format!("element {i} has no inverse")));
            }
        }
        // associativity
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }

        let mut mult = vec![None; n * n];
        for i in 0..n {
            for j in 0..n {
                mult[i * n + j] = Some((table[i][j], cre(1.0)));
            }
        }
        let star_coef = vec![cre(1.0); n];
        let alpha_coef = vec![cre(1.0); n];
        let mut rep = Vec::with_capacity(n);
        for i in 0..n {
            // left regular representation: e_j ↦ e_{ij}
            let mut rows = vec![0; n];
            let coefs = vec![cre(1.0); n];
            for (j, r) in rows.iter_mut().enumerate() {
                *r = table[i][j];
            }
            rep.push(Monomial { dim: n, rows, coefs });
        }
        let rep_frob2 = rep.iter().map(|r| r.frob2()).collect();
        let alg = Self {
            kind: AlgebraKind::Group { table },
            dim: n,
            rep_dim: n,
            basis_names: (0..n).map(|i| if i == 0 { "1".into() } else { format!("g{i}") }).collect(),
            mult,
            star_perm: inv,
            star_coef,
            alpha_coef,
            rep,
            rep_frob2,
            generators: (1..n).collect(),
        };
        alg.verify_representation()?;
        Ok(Arc::new(alg))
    }

    /// Rebuild an algebra from its serialized kind.
    pub fn from_kind(kind: &AlgebraKind) -> Result<Arc<Self>> {
        match kind {
            AlgebraKind::Clifford { p, q } => Self::clifford(CliffordSignature::new(*p, *q)),
            AlgebraKind::Matrix { n } => Self::matrix(*n),
            AlgebraKind::Group { table } => Self::group(table.clone()),
        }
    }

    /// The scalars ℂ, realized as Cl^{0,0}.
    pub fn scalars() -> Arc<Self> {
        Self::clifford(CliffordSignature::new(0, 0)).expect("Cl^{0,0} always builds")
    }

    /// Exact check that the stored representation is a *-homomorphism matching
    /// the structure constants on all basis pairs, and that the basis matrices
    /// are Frobenius-orthogonal (needed by `reconstruct`).
    fn verify_representation(&self) -> Result<()> {
        let tol = 1e-12;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let prod = self.rep[i].mul(&self.rep[j]);
                let expected = match self.mult[i * self.dim + j] {
                    Some((k, c)) => {
                        let mut m = self.rep[k].clone();
                        for x in &mut m.coefs {
                            *x *= c;
                        }
                        m
                    }
                    None => Monomial::zero(self.rep_dim),
                };
                if !prod.approx_eq(&expected, tol) {
                    return Err(Error::RepresentationCheck(format!(
                        "rep(e_{i})·rep(e_{j}) ≠ rep(e_{i}·e_{j})"
                    )));
                }
                if i != j {
                    let t = self.rep[i].adjoint().mul(&self.rep[j]);
                    let tr: Complex64 = (0..self.rep_dim)
                        .filter(|&c| t.coefs[c] != czero() && t.rows[c] == c)
                        .map(|c| t.coefs[c])
                        .sum();
                    if tr.norm() > tol {
                        return Err(Error::RepresentationCheck(format!(
                            "basis representations e_{i}, e_{j} not Frobenius-orthogonal"
                        )));
                    }
                }
            }
            let st = self.rep[i].adjoint();
            let mut expected = self.rep[self.star_perm[i]].clone();
            for x in &mut expected.coefs {
                *x *= self.star_coef[i];
            }
            if !st.approx_eq(&expected, tol) {
                return Err(Error::RepresentationCheck(format!("rep(e_{i})† ≠ rep(e_{i}*)")));
            }
        }
        Ok(())
    }

    pub fn rep_basis(&self, i: usize) -> &Monomial {
        &self.rep[i]
    }

    /// Dense faithful representation of a coefficient vector.
    pub fn rep_of(&self, coeffs: &CVec) -> CMat {
        let m = self.rep_dim;
        let mut out = CMat::zeros(m, m);
        for i in 0..self.dim {
            let x = coeffs[i];
            if x != czero() {
                let mono = &self.rep[i];
                for c in 0..m {
                    if mono.coefs[c] != czero() {
                        out[(mono.rows[c], c)] += x * mono.coefs[c];
                    }
                }
            }
        }
        out
    }

    /// Project a dense rep-space matrix back onto the algebra:
    /// a_i = tr(rep_i† B) / ‖rep_i‖_F², returning the element together with the
    /// Frobenius residual ‖rep(a) − B‖_F (zero iff B lies in the image).
    pub fn reconstruct(self: &Arc<Self>, b: &CMat) -> (AlgebraElement, f64) {
        let mut coeffs = CVec::zeros(self.dim);
        for i in 0..self.dim {
            coeffs[i] = self.rep[i].adjoint_trace_with(b) / cre(self.rep_frob2[i]);
        }
        let residual = (self.rep_of(&coeffs) - b).norm();
        (
            AlgebraElement {
                algebra: Arc::clone(self),
                coeffs,
            },
            residual,
        )
    }

    pub fn star_of_basis(&self, i: usize) -> (usize, Complex64) {
        (self.star_perm[i], self.star_coef[i])
    }

    pub fn alpha_of_basis(&self, i: usize) -> Complex64 {
        self.alpha_coef[i]
    }

    pub fn mult_of_basis(&self, i: usize, j: usize) -> Option<(usize, Complex64)> {
        self.mult[i * self.dim + j]
    }
}

/// An element of a finite-dimensional algebra: a coefficient vector over the basis.
#[derive(Debug, Clone)]
pub struct AlgebraElement {
    pub algebra: Arc<Algebra>,
    pub coeffs: CVec,
}

impl AlgebraElement {
    pub fn new(algebra: Arc<Algebra>, coeffs: CVec) -> Result<Self> {
        if coeffs.len() != algebra.dim {
            return Err(Error::InvalidInput(format!(
                "coefficient length {} ≠ algebra dimension {}",
                coeffs.len(),
                algebra.dim
            )));
        }
        Ok(Self { algebra, coeffs })
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        Self {
            algebra: Arc::clone(algebra),
            coeffs: CVec::zeros(algebra.dim),
        }
    }

    pub fn one(algebra: &Arc<Algebra>) -> Self {
        Self::basis(algebra, 0)
    }

    pub fn basis(algebra: &Arc<Algebra>, i: usize) -> Self {
        let mut coeffs = CVec::zeros(algebra.dim);
        coeffs[i] = cre(1.0);
        Self {
            algebra: Arc::clone(algebra),
            coeffs,
        }
    }

    pub fn scalar(algebra: &Arc<Algebra>, z: Complex64) -> Self {
        let mut coeffs = CVec::zeros(algebra.dim);
        coeffs[0] = z;
        Self {
            algebra: Arc::clone(algebra),
            coeffs,
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.algebra.kind != other.algebra.kind {
            return Err(Error::AlgebraMismatch(format!(
                "{:?} vs {:?}",
                self.algebra.kind, other.algebra.kind
            )));
        }
        Ok(())
    }

    /// Bilinear product via the structure constants.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let d = self.algebra.dim;
        let mut out = CVec::zeros(d);
        for i in 0..d {
            let xi = self.coeffs[i];
            if xi == czero() {
                continue;
            }
            for j in 0..d {
                let yj = other.coeffs[j];
                if yj == czero() {
                    continue;
                }
                if let Some((k, c)) = self.algebra.mult[i * d + j] {
                    out[k] += xi * yj * c;
                }
            }
        }
        Ok(Self {
            algebra: Arc::clone(&self.algebra),
            coeffs: out,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            algebra: Arc::clone(&self.algebra),
            coeffs: &self.coeffs + &other.coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            algebra: Arc::clone(&self.algebra),
            coeffs: &self.coeffs - &other.coeffs,
        })
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self {
            algebra: Arc::clone(&self.algebra),
            coeffs: &self.coeffs * z,
        }
    }

    /// The adjoint x*: conjugate-linear anti-automorphism.
    pub fn star(&self) -> Self {
        let d = self.algebra.dim;
        let mut out = CVec::zeros(d);
        for i in 0..d {
            let (j, c) = self.algebra.star_of_basis(i);
            out[j] += self.coeffs[i].conj() * c;
        }
        Self {
            algebra: Arc::clone(&self.algebra),
            coeffs: out,
        }
    }

    /// The grading automorphism α (linear).
    pub fn alpha(&self) -> Self {
        let d = self.algebra.dim;
        let mut out = CVec::zeros(d);
        for i in 0..d {
            out[i] = self.coeffs[i] * self.algebra.alpha_of_basis(i);
        }
        Self {
            algebra: Arc::clone(&self.algebra),
            coeffs: out,
        }
    }

    /// The Real structure κ (conjugate-linear, fixes every basis element).
    pub fn kappa(&self) -> Self {
        Self {
            algebra: Arc::clone(&self.algebra),
            coeffs: self.coeffs.map(|z| z.conj()),
        }
    }

    /// Dense image in the faithful representation.
    pub fn rep(&self) -> CMat {
        self.algebra.rep_of(&self.coeffs)
    }

    /// C*-norm: operator norm of the faithful representation.
    pub fn norm(&self) -> f64 {
        crate::linalg::spectral_norm(&self.rep())
    }

    /// Positivity test: rep(x) Hermitian within tol and min eigenvalue ≥ −tol.
    pub fn is_positive(&self, tol: f64) -> bool {
        let r = self.rep();
        if crate::linalg::herm_residual(&r) > tol * (1.0 + r.norm()) {
            return false;
        }
        let h = (&r + r.adjoint()) * cre(0.5);
        let vals = crate::linalg::hermitian_eigenvalues(&h);
        vals.first().map(|&v| v >= -tol).unwrap_or(true)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.algebra.kind == other.algebra.kind && (&self.coeffs - &other.coeffs).norm() <= tol
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.coeffs.norm() <= tol
    }
}

pub fn clifford_algebra(sig: CliffordSignature) -> Result<Arc<Algebra>> {
    Algebra::clifford(sig)
}

pub fn matrix_algebra(n: usize) -> Result<Arc<Algebra>> {
    Algebra::matrix(n)
}

pub fn group_algebra(table: Vec<Vec<usize>>) -> Result<Arc<Algebra>> {
    Algebra::group(table)
}

/// Cyclic group multiplication table of order n.
pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{hermitian_eigenvalues, random_cmat};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cl(p: usize, q: usize) -> Arc<Algebra> {
        Algebra::clifford(CliffordSignature::new(p, q)).unwrap()
    }

    fn random_element<R: rand::Rng>(rng: &mut R, a: &Arc<Algebra>) -> AlgebraElement {
        let v = random_cmat(rng, a.dim, 1);
        AlgebraElement::new(Arc::clone(a), CVec::from_iterator(a.dim, v.iter().copied())).unwrap()
    }

    #[test]
    fn unit_algebra_is_one_dimensional() {
        let a = cl(0, 0);
        assert_eq!(a.dim, 1);
        assert!((AlgebraElement::one(&a).norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn generator_squares() {
        let a = cl(1, 0);
        let e1 = AlgebraElement::basis(&a, 1);
        let sq = e1.mul(&e1).unwrap();
        assert!(sq.approx_eq(&AlgebraElement::one(&a).scale(cre(-1.0)), 1e-15));

        let b = cl(0, 1);
        let f1 = AlgebraElement::basis(&b, 1);
        let sq = f1.mul(&f1).unwrap();
        assert!(sq.approx_eq(&AlgebraElement::one(&b), 1e-15));
    }

    #[test]
    fn sign_rule_cl20() {
        let a = cl(2, 0);
        let e1 = AlgebraElement::basis(&a, 0b01);
        let e2 = AlgebraElement::basis(&a, 0b10);
        let e12 = AlgebraElement::basis(&a, 0b11);
        assert!(e1.mul(&e2).unwrap().approx_eq(&e12, 1e-15));
        assert!(e2.mul(&e1).unwrap().approx_eq(&e12.scale(cre(-1.0)), 1e-15));
        let sq = e12.mul(&e12).unwrap();
        assert!(sq.approx_eq(&AlgebraElement::one(&a).scale(cre(-1.0)), 1e-15));
    }

    #[test]
    fn unit_is_neutral_for_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (p, q) in [(1, 0), (2, 1), (0, 3)] {
            let a = cl(p, q);
            let x = random_element(&mut rng, &a);
            let one = AlgebraElement::one(&a);
            assert!(one.mul(&x).unwrap().approx_eq(&x, 1e-14));
            assert!(x.mul(&one).unwrap().approx_eq(&x, 1e-14));
        }
    }

    #[test]
    fn norm_cl10_is_euclidean() {
        // ‖a·1 + b·e₁‖ = √(a²+b²): derived from the operator norm of the 2×2
        // representation on Λ*ℝ (rotation-like matrix [[a,-b],[b,a]]).
        let alg = cl(1, 0);
        for (a, b) in [(1.0, 0.0), (0.3, -0.7), (2.0, 1.5), (-1.0, 1.0)] {
            let x = AlgebraElement::scalar(&alg, cre(a))
                .add(&AlgebraElement::basis(&alg, 1).scale(cre(b)))
                .unwrap();
            let expect = (a * a + b * b).sqrt();
            assert!((x.norm() - expect).abs() < 1e-12, "a={a} b={b}");
        }
    }

    #[test]
    fn norm_cl01_is_max_abs() {
        // ‖a·1 + b·f₁‖ = max(|a+b|, |a−b|): eigenvalues of the self-adjoint
        // representation matrix [[a,b],[b,a]].
        let alg = cl(0, 1);
        for (a, b) in [(1.0, 0.5), (0.2, -0.9), (-1.0, 3.0)] {
            let x = AlgebraElement::scalar(&alg, cre(a))
                .add(&AlgebraElement::basis(&alg, 1).scale(cre(b)))
                .unwrap();
            let expect = (a + b).abs().max((a - b).abs());
            assert!((x.norm() - expect).abs() < 1e-12, "a={a} b={b}");
        }
    }

    #[test]
    fn norm_of_generator_is_one() {
        for (p, q) in [(1, 0), (2, 0), (3, 1), (1, 2)] {
            let a = cl(p, q);
            let e1 = AlgebraElement::basis(&a, 1);
            assert!((e1.norm() - 1.0).abs() < 1e-12, "Cl^{{{p},{q}}}");
        }
    }

    #[test]
    fn cstar_identity_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (p, q) in [(1, 0), (0, 1), (2, 1), (2, 2)] {
            let a = cl(p, q);
            for _ in 0..20 {
                let x = random_element(&mut rng, &a);
                let lhs = x.star().mul(&x).unwrap().norm();
                let rhs = x.norm().powi(2);
                assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs), "Cl^{{{p},{q}}}");
            }
        }
    }

    #[test]
    fn positivity() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let a = cl(1, 1);
        for _ in 0..10 {
            let y = random_element(&mut rng, &a);
            let x = y.star().mul(&y).unwrap();
            assert!(x.is_positive(1e-9));
        }
        let minus_one = AlgebraElement::one(&a).scale(cre(-1.0));
        assert!(!minus_one.is_positive(1e-9));
    }

    #[test]
    fn one_plus_f1_is_positive_with_eigenvalues_0_2() {
        let a = cl(0, 1);
        let x = AlgebraElement::one(&a).add(&AlgebraElement::basis(&a, 1)).unwrap();
        assert!(x.is_positive(1e-9));
        let vals = hermitian_eigenvalues(&x.rep());
        assert!((vals[0] - 0.0).abs() < 1e-12 && (vals[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn grading_and_real_structure_are_isometric_and_commute() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for (p, q) in [(1, 0), (2, 1), (1, 2)] {
            let a = cl(p, q);
            for _ in 0..10 {
                let x = random_element(&mut rng, &a);
                assert!((x.alpha().norm() - x.norm()).abs() < 1e-10);
                assert!((x.kappa().norm() - x.norm()).abs() < 1e-10);
            }
            for i in 0..a.dim {
                let b = AlgebraElement::basis(&a, i);
                assert!(b.kappa().alpha().approx_eq(&b.alpha().kappa(), 1e-15));
            }
        }
    }

    #[test]
    fn star_is_antimultiplicative_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let a = cl(2, 1);
        for _ in 0..10 {
            let x = random_element(&mut rng, &a);
            let y = random_element(&mut rng, &a);
            let lhs = x.mul(&y).unwrap().star();
            let rhs = y.star().mul(&x.star()).unwrap();
            assert!(lhs.approx_eq(&rhs, 1e-12));
        }
    }

    #[test]
    fn sign_rule_matches_representation_oracle_up_to_rank_6() {
        // the constructor runs the exact monomial check; run it again here for
        // every signature with p+q ≤ 6 to pin the acceptance surface
        for p in 0..=6usize {
            for q in 0..=(6 - p) {
                let _ = cl(p, q); // verify_representation() fired inside
            }
        }
    }

    #[test]
    fn signature_above_maximum_rejected() {
        let r = Algebra::clifford(CliffordSignature::new(5, 4));
        assert!(matches!(r, Err(Error::SizeLimit(_))));
    }

    #[test]
    fn group_z2_projection_norm() {
        let a = group_algebra(cyclic_group_table(2)).unwrap();
        let x = AlgebraElement::basis(&a, 0)
            .add(&AlgebraElement::basis(&a, 1))
            .unwrap()
            .scale(cre(0.5));
        assert!((x.norm() - 1.0).abs() < 1e-12);
        // idempotent
        assert!(x.mul(&x).unwrap().approx_eq(&x, 1e-14));
    }

    #[test]
    fn group_trivial_is_scalars() {
        let a = group_algebra(cyclic_group_table(1)).unwrap();
        assert_eq!(a.dim, 1);
        assert!((AlgebraElement::one(&a).norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn group_z3_constant_vector_norm() {
        let a = group_algebra(cyclic_group_table(3)).unwrap();
        let x = AlgebraElement::basis(&a, 0)
            .add(&AlgebraElement::basis(&a, 1))
            .unwrap()
            .add(&AlgebraElement::basis(&a, 2))
            .unwrap();
        assert!((x.norm() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn non_group_tables_rejected() {
        // constant table: no identity
        let t = vec![vec![0, 0], vec![0, 0]];
        assert!(matches!(group_algebra(t), Err(Error::NotAGroup(_))));
        // identity not at 0
        let t = vec![vec![1, 0], vec![0, 1]];
        assert!(group_algebra(t).is_err());
    }

    #[test]
    fn matrix_algebra_units() {
        let a = matrix_algebra(2).unwrap();
        let e12 = AlgebraElement::basis(&a, 1); // E_{12}
        let e21 = AlgebraElement::basis(&a, 2); // E_{21}
        let e11 = AlgebraElement::basis(&a, 0);
        assert!(e12.mul(&e21).unwrap().approx_eq(&e11, 1e-15));
        assert!(e12.mul(&e12).unwrap().is_zero(1e-15));
        assert!(e12.star().approx_eq(&e21, 1e-15));
        assert!((e12.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn algebra_kind_serializes_and_rebuilds() {
        let a = cl(2, 1);
        let json = serde_json::to_string(&a.kind).unwrap();
        let kind: AlgebraKind = serde_json::from_str(&json).unwrap();
        let b = Algebra::from_kind(&kind).unwrap();
        assert_eq!(a.kind, b.kind);
        assert_eq!(a.dim, b.dim);
    }

    #[test]
    fn reconstruct_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let a = cl(2, 1);
        let x = random_element(&mut rng, &a);
        let (y, residual) = a.reconstruct(&x.rep());
        assert!(residual < 1e-12);
        assert!(y.approx_eq(&x, 1e-12));
        // a matrix outside the image reconstructs with visible residual
        let outside = random_cmat(&mut rng, a.rep_dim, a.rep_dim);
        let (_z, res2) = a.reconstruct(&outside);
        assert!(res2 > 1e-3);
    }
}
