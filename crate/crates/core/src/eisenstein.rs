//! Exact arithmetic over the Eisenstein integers Z[ω], ω² = −1 − ω, together
//! with rank-4 Hermitian lattices, their isometries and complex reflections.
//!
//! Form convention, fixed once for the whole crate: a Hermitian form with Gram
//! matrix `G` is **linear in its first argument and conjugate-linear in the
//! second**,
//!
//! ```text
//! h(x, y) = conj(y)ᵀ · G · x,
//! ```
//!
//! so a matrix `M` is an isometry exactly when `conj(M)ᵀ · G · M = G`.
//!
//! All arithmetic is exact on `i128` coefficients; any overflow is detected by
//! checked operations and reported by a panic carrying the offending operation
//! (group words handled here are short, so headroom is enormous — the check is
//! a tripwire, not an expected path).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;
use thiserror::Error;

/// Numerical embedding of ω used everywhere floats are needed: e^{2πi/3}.
pub const OMEGA_C: Complex64 = Complex64::new(-0.5, 0.866_025_403_784_438_6);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("vectors must have 4 entries, got {0}")]
    DimensionMismatch(usize),
    #[error("matrix is not Hermitian for this convention")]
    NotHermitian,
    #[error("root must satisfy h(r,r) = 1, got {0}")]
    NotShortRoot(i128),
    #[error("multiplier must be a unit of Z[ω]")]
    NotUnit,
    #[error("form is numerically degenerate: eigenvalue {0} within tolerance")]
    DegenerateForm(f64),
    #[error("matrix is not invertible over Z[ω] (determinant norm {0})")]
    NotUnimodularMatrix(i128),
}

#[inline]
fn cadd(x: i128, y: i128) -> i128 {
    x.checked_add(y).expect("overflow in Eisenstein addition")
}

#[inline]
fn csub(x: i128, y: i128) -> i128 {
    x.checked_sub(y).expect("overflow in Eisenstein subtraction")
}

#[inline]
fn cmul(x: i128, y: i128) -> i128 {
    x.checked_mul(y).expect("overflow in Eisenstein multiplication")
}

/// An Eisenstein integer a + bω with ω² = −1 − ω.
#[derive(Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct EisensteinInt {
    pub a: i128,
    pub b: i128,
}

impl EisensteinInt {
    pub const fn new(a: i128, b: i128) -> Self {
        Self { a, b }
    }

    pub const ZERO: Self = Self::new(0, 0);
    pub const ONE: Self = Self::new(1, 0);

    /// ω itself.
    pub const fn omega() -> Self {
        Self::new(0, 1)
    }

    /// ω² = −1 − ω.
    pub const fn omega2() -> Self {
        Self::new(-1, -1)
    }

    /// θ = ω − ω̄ = 1 + 2ω, the prime above 3; θ² = −3.
    pub const fn theta() -> Self {
        Self::new(1, 2)
    }

    /// The unit group S = {±1, ±ω, ±ω²}.
    pub fn units() -> [Self; 6] {
        let w = Self::omega();
        let w2 = Self::omega2();
        [Self::ONE, -Self::ONE, w, -w, w2, -w2]
    }

    /// The scalar set S₀ = {1, ω, ω²}.
    pub fn cube_roots_of_unity() -> [Self; 3] {
        [Self::ONE, Self::omega(), Self::omega2()]
    }

    /// Complex conjugate: conj(a + bω) = (a − b) − bω.
    pub fn conj(self) -> Self {
        Self::new(csub(self.a, self.b), -self.b)
    }

    /// Norm N(a + bω) = a² − ab + b² ≥ 0.
    pub fn norm(self) -> i128 {
        cadd(csub(cmul(self.a, self.a), cmul(self.a, self.b)), cmul(self.b, self.b))
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_unit(self) -> bool {
        self.norm() == 1
    }

    /// Inverse of a unit: u⁻¹ = conj(u) since N(u) = 1.
    pub fn unit_inverse(self) -> Result<Self, LatticeError> {
        if !self.is_unit() {
            return Err(LatticeError::NotUnit);
        }
        Ok(self.conj())
    }

    /// Nearest-coefficient Euclidean division: returns (q, r) with
    /// self = q·d + r and N(r) ≤ ¾·N(d).
    pub fn div_rem(self, d: Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero in Z[ω]");
        // self / d = self·conj(d) / N(d); round both coefficients to nearest.
        let num = self * d.conj();
        let n = d.norm();
        let q = Self::new(round_div(num.a, n), round_div(num.b, n));
        let r = self - q * d;
        (q, r)
    }

    pub fn gcd(self, other: Self) -> Self {
        let (mut x, mut y) = (self, other);
        while !y.is_zero() {
            let (_, r) = x.div_rem(y);
            x = y;
            y = r;
        }
        x
    }

    /// Exact division; panics if `d` does not divide `self`.
    pub fn exact_div(self, d: Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "non-exact division in Z[ω]: {self:?} / {d:?}");
        q
    }

    /// Embed into C with ω ↦ e^{2πi/3}.
    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.a as f64, 0.0) + OMEGA_C * self.b as f64
    }

    /// Nearest lattice point to a complex number: b = round(2·Im/√3),
    /// a = round(Re + Im/√3). Returns the point and the rounding residual.
    pub fn round_complex(c: Complex64) -> (Self, f64) {
        let sqrt3 = 3.0_f64.sqrt();
        let b = (2.0 * c.im / sqrt3).round();
        let a = (c.re + c.im / sqrt3).round();
        let z = Self::new(a as i128, b as i128);
        let res = (c - z.to_complex()).norm();
        (z, res)
    }

    pub fn pow(self, mut e: u32) -> Self {
        let mut acc = Self::ONE;
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

/// Round num/den to the nearest integer (ties away from zero).
fn round_div(num: i128, den: i128) -> i128 {
    debug_assert!(den > 0);
    let twice = cmul(2, num);
    if twice >= 0 {
        cadd(twice, den) / cmul(2, den)
    } else {
        -(cadd(-twice, den) / cmul(2, den))
    }
}

impl Add for EisensteinInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(cadd(self.a, o.a), cadd(self.b, o.b))
    }
}

impl Sub for EisensteinInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(csub(self.a, o.a), csub(self.b, o.b))
    }
}

impl Neg for EisensteinInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for EisensteinInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², ω² = −1 − ω.
        let (a, b, c, d) = (self.a, self.b, o.a, o.b);
        let bd = cmul(b, d);
        Self::new(
            csub(cmul(a, c), bd),
            csub(cadd(cmul(a, d), cmul(b, c)), bd),
        )
    }
}

impl fmt::Debug for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}ω"),
            (a, b) if b < 0 => write!(f, "{a}{b}ω"),
            (a, b) => write!(f, "{a}+{b}ω"),
        }
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub type LatticeVector = [EisensteinInt; 4];

pub fn vector_to_complex(v: &LatticeVector) -> [Complex64; 4] {
    [
        v[0].to_complex(),
        v[1].to_complex(),
        v[2].to_complex(),
        v[3].to_complex(),
    ]
}

/// A 4×4 matrix over Z[ω], stored row-major.
#[derive(Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct EisensteinMatrix {
    pub entries: [[EisensteinInt; 4]; 4],
}

impl EisensteinMatrix {
    pub fn new(entries: [[EisensteinInt; 4]; 4]) -> Self {
        Self { entries }
    }

    pub fn zero() -> Self {
        Self::new([[EisensteinInt::ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.entries[i][i] = EisensteinInt::ONE;
        }
        m
    }

    pub fn scalar(c: EisensteinInt) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.entries[i][i] = c;
        }
        m
    }

    pub fn from_diag(d: [EisensteinInt; 4]) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.entries[i][i] = d[i];
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = self.entries[j][i];
            }
        }
        m
    }

    pub fn conj(&self) -> Self {
        let mut m = *self;
        for row in m.entries.iter_mut() {
            for e in row.iter_mut() {
                *e = e.conj();
            }
        }
        m
    }

    pub fn conj_transpose(&self) -> Self {
        self.conj().transpose()
    }

    pub fn scale(&self, c: EisensteinInt) -> Self {
        let mut m = *self;
        for row in m.entries.iter_mut() {
            for e in row.iter_mut() {
                *e = *e * c;
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &LatticeVector) -> LatticeVector {
        let mut out = [EisensteinInt::ZERO; 4];
        for i in 0..4 {
            let mut acc = EisensteinInt::ZERO;
            for j in 0..4 {
                acc = acc + self.entries[i][j] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// Exact determinant by cofactor expansion along the first row.
    pub fn det(&self) -> EisensteinInt {
        let mut acc = EisensteinInt::ZERO;
        for j in 0..4 {
            let minor = self.minor_det(0, j);
            let term = self.entries[0][j] * minor;
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    fn minor_det(&self, row: usize, col: usize) -> EisensteinInt {
        let mut m = [[EisensteinInt::ZERO; 3]; 3];
        let mut r = 0;
        for i in 0..4 {
            if i == row {
                continue;
            }
            let mut c = 0;
            for j in 0..4 {
                if j == col {
                    continue;
                }
                m[r][c] = self.entries[i][j];
                c += 1;
            }
            r += 1;
        }
        det3(&m)
    }

    /// Inverse of a matrix whose determinant is a unit: adj(M)·det(M)⁻¹.
    pub fn inverse(&self) -> Result<Self, LatticeError> {
        let d = self.det();
        if !d.is_unit() {
            return Err(LatticeError::NotUnimodularMatrix(d.norm()));
        }
        let dinv = d.unit_inverse()?;
        let mut adj = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                let cof = self.minor_det(j, i);
                let sign = if (i + j) % 2 == 0 { cof } else { -cof };
                adj.entries[i][j] = sign * dinv;
            }
        }
        Ok(adj)
    }

    pub fn to_complex(&self) -> nalgebra::Matrix4<Complex64> {
        nalgebra::Matrix4::from_fn(|i, j| self.entries[i][j].to_complex())
    }

    pub fn max_coeff_abs(&self) -> i128 {
        let mut m = 0;
        for row in &self.entries {
            for e in row {
                m = m.max(e.a.abs()).max(e.b.abs());
            }
        }
        m
    }
}

fn det3(m: &[[EisensteinInt; 3]; 3]) -> EisensteinInt {
    let d0 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    let d1 = m[1][0] * m[2][2] - m[1][2] * m[2][0];
    let d2 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    m[0][0] * d0 - m[0][1] * d1 + m[0][2] * d2
}

impl Mul for EisensteinMatrix {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = EisensteinInt::ZERO;
                for k in 0..4 {
                    acc = acc + self.entries[i][k] * o.entries[k][j];
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }
}

impl Add for EisensteinMatrix {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.entries[i][j] = out.entries[i][j] + o.entries[i][j];
            }
        }
        out
    }
}

impl Sub for EisensteinMatrix {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.entries[i][j] = out.entries[i][j] - o.entries[i][j];
            }
        }
        out
    }
}

impl fmt::Debug for EisensteinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in &self.entries {
            writeln!(
                f,
                "  [{:>8}, {:>8}, {:>8}, {:>8}]",
                format!("{:?}", row[0]),
                format!("{:?}", row[1]),
                format!("{:?}", row[2]),
                format!("{:?}", row[3])
            )?;
        }
        write!(f, "]")
    }
}

/// Gram matrix of a Hermitian form on the rank-4 lattice.
///
/// `h(x, y) = conj(y)ᵀ · gram · x`; Hermitian means conj(G)ᵀ = G, which forces
/// rational-integer diagonal entries.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub struct HermitianForm {
    pub gram: EisensteinMatrix,
}

impl HermitianForm {
    pub fn new(gram: EisensteinMatrix) -> Result<Self, LatticeError> {
        if gram.conj_transpose() != gram {
            return Err(LatticeError::NotHermitian);
        }
        Ok(Self { gram })
    }

    /// The standard unimodular model diag(1, 1, 1, −1) of signature (3,1).
    pub fn standard() -> Self {
        Self {
            gram: EisensteinMatrix::from_diag([
                EisensteinInt::ONE,
                EisensteinInt::ONE,
                EisensteinInt::ONE,
                -EisensteinInt::ONE,
            ]),
        }
    }

    /// h(x, y), linear in `x`, conjugate-linear in `y`.
    pub fn eval(&self, x: &LatticeVector, y: &LatticeVector) -> EisensteinInt {
        let gx = self.gram.mul_vec(x);
        let mut acc = EisensteinInt::ZERO;
        for i in 0..4 {
            acc = acc + y[i].conj() * gx[i];
        }
        acc
    }

    /// h(v, v); always a rational integer for a Hermitian Gram matrix.
    pub fn norm_of(&self, v: &LatticeVector) -> i128 {
        let n = self.eval(v, v);
        debug_assert_eq!(n.b, 0, "h(v,v) must be a rational integer");
        n.a
    }

    /// Membership in Aut(Λ, h): conj(M)ᵀ · G · M = G exactly.
    pub fn is_isometry(&self, m: &EisensteinMatrix) -> bool {
        m.conj_transpose() * self.gram * *m == self.gram
    }

    /// True iff det(G) is a unit of Z[ω].
    pub fn is_unimodular(&self) -> bool {
        self.gram.det().is_unit()
    }

    /// Signature of the complex Hermitian matrix obtained by embedding ω.
    ///
    /// Eigenvalues smaller than `1e−9` (relative to the largest) make the form
    /// numerically degenerate and are reported as an error.
    pub fn signature(&self) -> Result<(usize, usize), LatticeError> {
        let hc = self.gram.to_complex();
        // Hermitian by construction; symmetric eigensolver yields real spectrum.
        let eig = nalgebra::linalg::SymmetricEigen::new(hc);
        let scale = eig
            .eigenvalues
            .iter()
            .fold(1.0_f64, |m, &l| m.max(l.abs()));
        let tol = 1e-9 * scale;
        let mut pos = 0;
        let mut neg = 0;
        for &l in eig.eigenvalues.iter() {
            if l > tol {
                pos += 1;
            } else if l < -tol {
                neg += 1;
            } else {
                return Err(LatticeError::DegenerateForm(l));
            }
        }
        Ok((pos, neg))
    }

    /// All lattice vectors with h(r, r) = 1 and coefficients bounded by
    /// `height_bound` in both coordinates, in lexicographic order on
    /// (a₁, b₁, …, a₄, b₄).
    pub fn enumerate_short_roots(&self, height_bound: i128) -> Vec<ShortRoot> {
        assert!(height_bound >= 1, "height bound must be at least 1");
        let lo = -height_bound;
        let hi = height_bound;
        let mut out = Vec::new();
        let mut v = [EisensteinInt::ZERO; 4];
        // Lexicographic nested scan; h(v,v) is evaluated exactly.
        for a1 in lo..=hi {
            for b1 in lo..=hi {
                v[0] = EisensteinInt::new(a1, b1);
                for a2 in lo..=hi {
                    for b2 in lo..=hi {
                        v[1] = EisensteinInt::new(a2, b2);
                        for a3 in lo..=hi {
                            for b3 in lo..=hi {
                                v[2] = EisensteinInt::new(a3, b3);
                                for a4 in lo..=hi {
                                    for b4 in lo..=hi {
                                        v[3] = EisensteinInt::new(a4, b4);
                                        if self.norm_of(&v) == 1 {
                                            out.push(ShortRoot { coords: v });
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// A lattice vector r with h(r, r) = 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub struct ShortRoot {
    pub coords: LatticeVector,
}

impl ShortRoot {
    pub fn new(form: &HermitianForm, coords: LatticeVector) -> Result<Self, LatticeError> {
        let n = form.norm_of(&coords);
        if n != 1 {
            return Err(LatticeError::NotShortRoot(n));
        }
        Ok(Self { coords })
    }
}

/// The complex reflection x ↦ x − (1 − μ)·h(x, r)·r for a short root r and a
/// unit multiplier μ. It fixes the orthogonal complement of r pointwise and
/// scales r by μ.
pub fn reflect(
    form: &HermitianForm,
    root: &ShortRoot,
    mu: EisensteinInt,
    x: &LatticeVector,
) -> Result<LatticeVector, LatticeError> {
    if !mu.is_unit() {
        return Err(LatticeError::NotUnit);
    }
    let c = (EisensteinInt::ONE - mu) * form.eval(x, &root.coords);
    let mut out = *x;
    for i in 0..4 {
        out[i] = out[i] - c * root.coords[i];
    }
    Ok(out)
}

/// Matrix of [`reflect`]: I − (1 − μ)·r·(conj(r)ᵀ G).
pub fn reflection_matrix(
    form: &HermitianForm,
    root: &ShortRoot,
    mu: EisensteinInt,
) -> Result<EisensteinMatrix, LatticeError> {
    if !mu.is_unit() {
        return Err(LatticeError::NotUnit);
    }
    let one_minus_mu = EisensteinInt::ONE - mu;
    let mut m = EisensteinMatrix::identity();
    // row functional conj(r)ᵀ G: j-th component Σ_k conj(r_k) G_kj
    let mut functional = [EisensteinInt::ZERO; 4];
    for j in 0..4 {
        let mut acc = EisensteinInt::ZERO;
        for k in 0..4 {
            acc = acc + root.coords[k].conj() * form.gram.entries[k][j];
        }
        functional[j] = acc;
    }
    for i in 0..4 {
        for j in 0..4 {
            m.entries[i][j] = m.entries[i][j] - one_minus_mu * root.coords[i] * functional[j];
        }
    }
    Ok(m)
}
