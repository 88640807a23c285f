//! `l`-dimensional representations of `A_q^1` realizing a point `(a, b)` of
//! the center, and the Burnside span test for the fiber.

#[cfg(test)]
mod tests;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::center::{azumaya_test, MaxIdealPoint};
use crate::error::AlgebraError;
use crate::scalars::{ComplexField, Cyclo, CyclotomicField, Field, Ring};

/// Residual tolerance for numeric representations.
pub const NUMERIC_TOLERANCE: f64 = 1e-9;

/// Fields a representation can be built over.
pub trait RepField: Field {
    /// Embedding into `C`.
    fn approx(&self, a: &Self::Elem) -> Complex64;
    /// Zero exactly, or within [`NUMERIC_TOLERANCE`].
    fn negligible(&self, a: &Self::Elem) -> bool;
    /// Rank of a list of equal-length rows.
    fn rank(&self, rows: &[Vec<Self::Elem>]) -> usize;
}

impl RepField for CyclotomicField {
    fn approx(&self, a: &Cyclo) -> Complex64 {
        self.embed(a)
    }
    fn negligible(&self, a: &Cyclo) -> bool {
        self.is_zero(a)
    }
    fn rank(&self, rows: &[Vec<Cyclo>]) -> usize {
        exact_rank(self, rows)
    }
}

impl RepField for ComplexField {
    fn approx(&self, a: &Complex64) -> Complex64 {
        *a
    }
    fn negligible(&self, a: &Complex64) -> bool {
        a.norm() < NUMERIC_TOLERANCE
    }
    fn rank(&self, rows: &[Vec<Complex64>]) -> usize {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return 0;
        }
        let m = DMatrix::from_fn(rows.len(), cols, |i, j| rows[i][j]);
        let sv = m.svd(false, false).singular_values;
        let top = sv.iter().cloned().fold(0.0, f64::max);
        sv.iter().filter(|&&s| s > NUMERIC_TOLERANCE * top.max(1.0)).count()
    }
}

/// Row reduction over an exact field.
pub fn exact_rank<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m: Vec<Vec<F::Elem>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !field.is_zero(&m[r][c])) else {
            continue;
        };
        m.swap(rank, p);
        let inv = field.try_inv(&m[rank][c]).expect("nonzero pivot");
        let pivot: Vec<F::Elem> = m[rank].iter().map(|e| field.mul(e, &inv)).collect();
        for r in rank + 1..m.len() {
            if field.is_zero(&m[r][c]) {
                continue;
            }
            let factor = m[r][c].clone();
            for (e, p) in m[r].iter_mut().zip(&pivot).skip(c) {
                *e = field.sub(e, &field.mul(&factor, p));
            }
        }
        m[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Dense square matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    pub size: usize,
    pub entries: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<E>> {
        self.entries.chunks(self.size).map(<[E]>::to_vec).collect()
    }
}

fn zeros<F: Ring>(f: &F, l: usize) -> Matrix<F::Elem> {
    Matrix { size: l, entries: vec![f.zero(); l * l] }
}

fn identity<F: Ring>(f: &F, l: usize) -> Matrix<F::Elem> {
    scalar_matrix(f, l, &f.one())
}

fn scalar_matrix<F: Ring>(f: &F, l: usize, c: &F::Elem) -> Matrix<F::Elem> {
    let mut m = zeros(f, l);
    for i in 0..l {
        m.entries[i * l + i] = c.clone();
    }
    m
}

fn mat_mul<F: Ring>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let l = a.size;
    let mut out = zeros(f, l);
    for i in 0..l {
        for k in 0..l {
            let aik = a.get(i, k);
            if f.is_zero(aik) {
                continue;
            }
            for j in 0..l {
                let bkj = b.get(k, j);
                if !f.is_zero(bkj) {
                    f.add_assign(&mut out.entries[i * l + j], &f.mul(aik, bkj));
                }
            }
        }
    }
    out
}

fn mat_sub<F: Ring>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    Matrix { size: a.size, entries: a.entries.iter().zip(&b.entries).map(|(x, y)| f.sub(x, y)).collect() }
}

fn mat_scale<F: Ring>(f: &F, c: &F::Elem, a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    Matrix { size: a.size, entries: a.entries.iter().map(|x| f.mul(c, x)).collect() }
}

fn mat_pow<F: Ring>(f: &F, a: &Matrix<F::Elem>, k: u32) -> Matrix<F::Elem> {
    (0..k).fold(identity(f, a.size), |acc, _| mat_mul(f, &acc, a))
}

/// Which construction produced the matrices.
#[derive(Clone, Debug, PartialEq)]
pub enum RepKind<E> {
    /// `X = diag(lambda q^i)`, `Y` diagonal plus a cyclic band.
    DiagonalX { lambda: E },
    /// `Y = diag(mu q^-i)`, `X` diagonal plus a cyclic band.
    DiagonalY { mu: E },
    /// `C[x]/x^l` with `Y(x^m) = [m]_q x^(m-1)`; the point `a = b = 0`.
    Nilpotent,
}

/// Matrices `X`, `Y` with `YX - qXY = I`, `X^l = a`, `Y^l = b`.
#[derive(Clone, Debug)]
pub struct MatRep<F: RepField> {
    pub field: F,
    pub l: u32,
    pub q: F::Elem,
    pub a: F::Elem,
    pub b: F::Elem,
    pub x: Matrix<F::Elem>,
    pub y: Matrix<F::Elem>,
    pub kind: RepKind<F::Elem>,
}

/// Residuals of the three defining identities.
#[derive(Clone, Debug)]
pub struct RepCheck {
    /// Largest entry, in absolute value, of `YX - qXY - I`, `X^l - a`, `Y^l - b`.
    pub max_residuals: [f64; 3],
    pub holds: bool,
}

/// Diagonal entries `d_i` and a cyclic band with superdiagonal 1 and the
/// corner chosen so the `l`-th power is `target`.
fn band<F: RepField>(field: &F, l: usize, q: &F::Elem, eig: &[F::Elem], target: &F::Elem) -> Result<Matrix<F::Elem>, AlgebraError> {
    let one_minus = field.sub(&field.one(), q);
    let mut m = zeros(field, l);
    let mut d_pow = None;
    for (i, e) in eig.iter().enumerate() {
        let d = field
            .try_inv(&field.mul(e, &one_minus))
            .ok_or_else(|| AlgebraError::Unsupported("q = 1 or a zero eigenvalue".into()))?;
        d_pow.get_or_insert_with(|| field.pow(&d, l as u64));
        m.entries[i * l + i] = d;
        if i + 1 < l {
            m.entries[i * l + i + 1] = field.one();
        }
    }
    // the diagonal and the band q-commute, so the l-th power is D^l + corner
    let corner = field.sub(target, &d_pow.expect("l >= 1"));
    if l == 1 {
        return Err(AlgebraError::Unsupported("level must be >= 2".into()));
    }
    m.entries[(l - 1) * l] = field.add(&m.entries[(l - 1) * l], &corner);
    Ok(m)
}

impl<F: RepField> MatRep<F> {
    /// Builds the representation at `(a, b)` given `q` and, when `a != 0`,
    /// an `l`-th root of `a` (otherwise of `b`).
    pub fn with_root(field: F, l: u32, q: F::Elem, a: F::Elem, b: F::Elem, root: Option<F::Elem>) -> Result<Self, AlgebraError> {
        if l < 2 {
            return Err(AlgebraError::Unsupported(format!("level must be >= 2, got {l}")));
        }
        let n = l as usize;
        if field.is_zero(&a) && field.is_zero(&b) {
            return Ok(Self::nilpotent(field, l, q, a, b));
        }
        let root = root.ok_or_else(|| AlgebraError::NoExactRoot(format!("no root of order {l} supplied")))?;
        let from_a = !field.is_zero(&a);
        let radicand = if from_a { &a } else { &b };
        if !field.negligible(&field.sub(&field.pow(&root, l as u64), radicand)) {
            return Err(AlgebraError::NoExactRoot(format!("the supplied value is not a root of order {l}")));
        }
        let q_inv = field.try_inv(&q).ok_or_else(|| AlgebraError::Unsupported("q = 0".into()))?;
        let ratio = if from_a { q.clone() } else { q_inv };
        let mut eig = Vec::with_capacity(n);
        let mut cur = root.clone();
        for _ in 0..n {
            eig.push(cur.clone());
            cur = field.mul(&cur, &ratio);
        }
        let mut diag = zeros(&field, n);
        for (i, e) in eig.iter().enumerate() {
            diag.entries[i * n + i] = e.clone();
        }
        let (x, y, kind) = if from_a {
            let y = band(&field, n, &q, &eig, &b)?;
            (diag, y, RepKind::DiagonalX { lambda: root })
        } else {
            let x = band(&field, n, &q, &eig, &a)?;
            (x, diag, RepKind::DiagonalY { mu: root })
        };
        let rep = Self { field, l, q, a, b, x, y, kind };
        let check = rep.check();
        if !check.holds {
            return Err(AlgebraError::InconsistentPoint(format!("residuals {:?}", check.max_residuals)));
        }
        Ok(rep)
    }

    fn nilpotent(field: F, l: u32, q: F::Elem, a: F::Elem, b: F::Elem) -> Self {
        let n = l as usize;
        let mut x = zeros(&field, n);
        let mut y = zeros(&field, n);
        for m in 0..n {
            if m + 1 < n {
                x.entries[(m + 1) * n + m] = field.one();
            }
            if m > 0 {
                y.entries[(m - 1) * n + m] = field.qint_at(&q, m as u32);
            }
        }
        Self { field, l, q, a, b, x, y, kind: RepKind::Nilpotent }
    }

    pub fn check(&self) -> RepCheck {
        let f = &self.field;
        let n = self.l as usize;
        let yx = mat_mul(f, &self.y, &self.x);
        let xy = mat_scale(f, &self.q, &mat_mul(f, &self.x, &self.y));
        let rel = mat_sub(f, &mat_sub(f, &yx, &xy), &identity(f, n));
        let xl = mat_sub(f, &mat_pow(f, &self.x, self.l), &scalar_matrix(f, n, &self.a));
        let yl = mat_sub(f, &mat_pow(f, &self.y, self.l), &scalar_matrix(f, n, &self.b));
        let res = [&rel, &xl, &yl];
        let max_residuals = res.map(|m| m.entries.iter().map(|e| f.approx(e).norm()).fold(0.0, f64::max));
        let holds = res.iter().all(|m| m.entries.iter().all(|e| f.negligible(e)));
        RepCheck { max_residuals, holds }
    }

    /// Dimension of the span of `X^i Y^j`, `0 <= i, j < l`.
    pub fn burnside_span_dim(&self) -> usize {
        let f = &self.field;
        let xs: Vec<_> = (0..self.l).map(|i| mat_pow(f, &self.x, i)).collect();
        let ys: Vec<_> = (0..self.l).map(|j| mat_pow(f, &self.y, j)).collect();
        let rows: Vec<Vec<F::Elem>> = xs.iter().flat_map(|xi| ys.iter().map(move |yj| mat_mul(f, xi, yj).entries)).collect();
        f.rank(&rows)
    }

    /// Whether `I, X, ..., X^(l-1)` are linearly independent.
    pub fn x_powers_independent(&self) -> bool {
        let rows: Vec<_> = (0..self.l).map(|i| mat_pow(&self.field, &self.x, i).entries).collect();
        self.field.rank(&rows) == self.l as usize
    }

    /// Whether the diagonal eigenvalues are pairwise distinct; `None` for the nilpotent case.
    pub fn eigenvalues_distinct(&self) -> Option<bool> {
        let diag = match self.kind {
            RepKind::DiagonalX { .. } => &self.x,
            RepKind::DiagonalY { .. } => &self.y,
            RepKind::Nilpotent => return None,
        };
        let n = self.l as usize;
        let eig: Vec<_> = (0..n).map(|i| diag.get(i, i).clone()).collect();
        Some((0..n).all(|i| (i + 1..n).all(|j| !self.field.negligible(&self.field.sub(&eig[i], &eig[j])))))
    }

    pub fn to_json(&self) -> Value {
        let f = &self.field;
        let mat = |m: &Matrix<F::Elem>| -> Value {
            let exact: Vec<Vec<String>> = m.rows().iter().map(|r| r.iter().map(|e| f.format(e)).collect()).collect();
            let approx: Vec<Vec<[f64; 2]>> =
                m.rows().iter().map(|r| r.iter().map(|e| f.approx(e)).map(|z| [z.re, z.im]).collect()).collect();
            json!({"exact": exact, "approx": approx})
        };
        let kind = match &self.kind {
            RepKind::DiagonalX { .. } => "diagonal_x",
            RepKind::DiagonalY { .. } => "diagonal_y",
            RepKind::Nilpotent => "nilpotent",
        };
        let check = self.check();
        json!({
            "schema": 1,
            "l": self.l,
            "q": f.format(&self.q),
            "a": f.format(&self.a),
            "b": f.format(&self.b),
            "kind": kind,
            "X": mat(&self.x),
            "Y": mat(&self.y),
            "relations_hold": check.holds,
            "max_residuals": check.max_residuals,
        })
    }
}

/// Exact construction over `Q(zeta_l)` with `q = zeta_l^k`. The root of `a`
/// (or of `b` when `a = 0`) is `root` if given, else a rational root.
pub fn build_rep_exact(
    field: &CyclotomicField,
    k: u32,
    a: &Cyclo,
    b: &Cyclo,
    root: Option<Cyclo>,
) -> Result<MatRep<CyclotomicField>, AlgebraError> {
    let l = field.level();
    if num_integer::gcd(k, l) != 1 {
        return Err(AlgebraError::Unsupported(format!("zeta^{k} is not a primitive {l}-th root")));
    }
    let radicand = if field.is_zero(a) { b } else { a };
    let root = root.or_else(|| field.rational_root(radicand, l));
    if root.is_none() && !field.is_zero(radicand) {
        return Err(AlgebraError::NoExactRoot(format!("{} has no known root of order {l} in Q(zeta_{l}); try --numeric", field.format(radicand))));
    }
    MatRep::with_root(field.clone(), l, field.zeta_pow(k as i64), a.clone(), b.clone(), root)
}

/// Floating construction with `q = exp(2 pi i k / l)` and principal roots.
pub fn build_rep_numeric(l: u32, k: u32, a: Complex64, b: Complex64) -> Result<MatRep<ComplexField>, AlgebraError> {
    if l < 2 || num_integer::gcd(k, l) != 1 {
        return Err(AlgebraError::Unsupported(format!("exp(2 pi i {k}/{l}) is not a primitive root")));
    }
    let q = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / l as f64);
    let radicand = if a.norm() > NUMERIC_TOLERANCE { a } else { b };
    let root = (radicand.norm() > NUMERIC_TOLERANCE).then(|| radicand.powf(1.0 / l as f64));
    let (a, b) = (zero_if_tiny(a), zero_if_tiny(b));
    MatRep::with_root(ComplexField, l, q, a, b, root)
}

fn zero_if_tiny(z: Complex64) -> Complex64 {
    if z.norm() > NUMERIC_TOLERANCE { z } else { Complex64::new(0.0, 0.0) }
}

/// A sampled point of the center with both verdicts.
#[derive(Clone, Debug)]
pub struct CrossCheckRow {
    pub a: String,
    pub b: String,
    pub azumaya: bool,
    pub span_dim: usize,
    pub agree: bool,
}

impl CrossCheckRow {
    pub fn to_json(&self) -> Value {
        json!({"a": self.a, "b": self.b, "azumaya": self.azumaya, "span_dim": self.span_dim, "agree": self.agree})
    }
}

fn row<F: RepField>(rep: &MatRep<F>, azumaya: bool) -> CrossCheckRow {
    let span_dim = rep.burnside_span_dim();
    let full = (rep.l * rep.l) as usize;
    CrossCheckRow {
        a: rep.field.format(&rep.a),
        b: rep.field.format(&rep.b),
        azumaya,
        span_dim,
        agree: azumaya == (span_dim == full),
    }
}

/// Exact cross check at `q = zeta_l`; `points` must have exact roots available.
pub fn cross_check_exact(field: &CyclotomicField, points: &[(Cyclo, Cyclo)]) -> Result<Vec<CrossCheckRow>, AlgebraError> {
    let l = field.level();
    points
        .iter()
        .map(|(a, b)| {
            let rep = build_rep_exact(field, 1, a, b, None)?;
            let pt = MaxIdealPoint::Exact { field: field.clone(), a: vec![a.clone()], b: vec![b.clone()] };
            Ok(row(&rep, azumaya_test(&pt, l)?))
        })
        .collect()
}

/// Numeric cross check at `q = exp(2 pi i / l)`.
pub fn cross_check_numeric(l: u32, points: &[(Complex64, Complex64)]) -> Result<Vec<CrossCheckRow>, AlgebraError> {
    points
        .iter()
        .map(|&(a, b)| {
            let rep = build_rep_numeric(l, 1, a, b)?;
            let pt = MaxIdealPoint::Numeric { a: vec![a], b: vec![b] };
            Ok(row(&rep, azumaya_test(&pt, l)?))
        })
        .collect()
}
