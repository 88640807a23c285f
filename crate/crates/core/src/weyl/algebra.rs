use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;

use super::monomial::Monomial;
use crate::error::AlgebraError;
use crate::scalars::{
    append_term, ComplexField, CyclotomicField, JetRing, LaurentRing, QLaurent, Rational, RationalField, Ring,
};

struct AlgebraData<R: Ring> {
    n: usize,
    ring: R,
    t: R::Elem,
    t_inv: R::Elem,
}

/// The algebra generated by `x_1..x_n, d_1..d_n` over `ring` with
/// `d_i x_j - t^{delta_ij} x_j d_i = delta_ij` and all other pairs commuting,
/// where `t` is a fixed unit of `ring`.
///
/// With `ring = Q[t, t^-1]` and `t` the variable this is `A_t^n`; with
/// `ring = Q(zeta_l)` and `t = zeta_l` it is `A_q^n`. Cloning is cheap.
pub struct WeylAlgebra<R: Ring> {
    data: Arc<AlgebraData<R>>,
}

impl<R: Ring> Clone for WeylAlgebra<R> {
    fn clone(&self) -> Self {
        Self { data: Arc::clone(&self.data) }
    }
}

impl<R: Ring> PartialEq for WeylAlgebra<R> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.n == other.data.n && self.data.ring == other.data.ring && self.data.t == other.data.t)
    }
}

impl<R: Ring> fmt::Debug for WeylAlgebra<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylAlgebra(n = {}, {:?}, t = {})", self.data.n, self.data.ring, self.data.ring.format(&self.data.t))
    }
}

/// Symbolic `A_t^n` over `Q[t, t^-1]`.
pub type SymbolicAlgebra = WeylAlgebra<QLaurent>;
/// `A_q^n` at `q = zeta_l`.
pub type RootAlgebra = WeylAlgebra<CyclotomicField>;

impl<R: Ring> WeylAlgebra<R> {
    /// Fails when `t` is not a unit of `ring` or `n == 0`.
    pub fn new(n: usize, ring: R, t: R::Elem) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::Unsupported("need at least one variable pair".into()));
        }
        let t_inv = ring
            .try_inv(&t)
            .ok_or_else(|| AlgebraError::Unsupported(format!("parameter {} is not a unit", ring.format(&t))))?;
        Ok(Self { data: Arc::new(AlgebraData { n, ring, t, t_inv }) })
    }

    pub fn n(&self) -> usize {
        self.data.n
    }

    pub fn ring(&self) -> &R {
        &self.data.ring
    }

    /// The deformation parameter (`t`, or its specialization `q`).
    pub fn param(&self) -> &R::Elem {
        &self.data.t
    }

    pub fn param_inv(&self) -> &R::Elem {
        &self.data.t_inv
    }

    pub fn zero(&self) -> WeylElement<R> {
        WeylElement { alg: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> WeylElement<R> {
        self.scalar(self.ring().one())
    }

    pub fn scalar(&self, c: R::Elem) -> WeylElement<R> {
        self.monomial(Monomial::one(self.n()), c)
    }

    pub fn monomial(&self, m: Monomial, c: R::Elem) -> WeylElement<R> {
        assert_eq!(m.n(), self.n(), "monomial arity does not match the algebra");
        let mut terms = BTreeMap::new();
        if !self.ring().is_zero(&c) {
            terms.insert(m, c);
        }
        WeylElement { alg: self.clone(), terms }
    }

    /// Sums `(monomial, coefficient)` pairs.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, R::Elem)>) -> WeylElement<R> {
        let mut acc: BTreeMap<Monomial, R::Elem> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.n(), self.n(), "monomial arity does not match the algebra");
            match acc.get_mut(&m) {
                Some(existing) => self.ring().add_assign(existing, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        acc.retain(|_, c| !self.ring().is_zero(c));
        WeylElement { alg: self.clone(), terms: acc }
    }

    fn unit_vector(&self, i: usize) -> Result<Vec<u32>, AlgebraError> {
        if i == 0 || i > self.n() {
            return Err(AlgebraError::IndexOutOfRange { index: i, n: self.n() });
        }
        let mut v = vec![0; self.n()];
        v[i - 1] = 1;
        Ok(v)
    }

    /// The generator `x_i` (1-based).
    pub fn try_x(&self, i: usize) -> Result<WeylElement<R>, AlgebraError> {
        let e = self.unit_vector(i)?;
        Ok(self.monomial(Monomial::new(&e, &vec![0; self.n()]), self.ring().one()))
    }

    /// The generator `d_i` (1-based).
    pub fn try_d(&self, i: usize) -> Result<WeylElement<R>, AlgebraError> {
        let e = self.unit_vector(i)?;
        Ok(self.monomial(Monomial::new(&vec![0; self.n()], &e), self.ring().one()))
    }

    /// Panics when `i` is out of range; see [`Self::try_x`].
    pub fn x(&self, i: usize) -> WeylElement<R> {
        self.try_x(i).expect("generator index out of range")
    }

    /// Panics when `i` is out of range; see [`Self::try_d`].
    pub fn d(&self, i: usize) -> WeylElement<R> {
        self.try_d(i).expect("generator index out of range")
    }

    /// All generators `x_1..x_n, d_1..d_n`.
    pub fn generators(&self) -> Vec<WeylElement<R>> {
        (1..=self.n()).map(|i| self.x(i)).chain((1..=self.n()).map(|i| self.d(i))).collect()
    }

    /// `f_i = [d_i, x_i] = 1 - (1 - t) x_i d_i`.
    pub fn f_i(&self, i: usize) -> Result<WeylElement<R>, AlgebraError> {
        let e = self.unit_vector(i)?;
        let ring = self.ring();
        let t_minus_one = ring.sub(self.param(), &ring.one());
        Ok(self.from_terms([(Monomial::one(self.n()), ring.one()), (Monomial::new(&e, &e), t_minus_one)]))
    }

    /// `f = f_1 f_2 ... f_n`.
    pub fn f_element(&self) -> WeylElement<R> {
        (1..=self.n()).fold(self.one(), |acc, i| &acc * &self.f_i(i).expect("index in range"))
    }

    /// Maps every coefficient into another algebra on the same generators.
    pub fn map_into<S: Ring>(
        &self,
        a: &WeylElement<R>,
        target: &WeylAlgebra<S>,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> WeylElement<S> {
        assert_eq!(self.n(), target.n(), "algebras have different numbers of variables");
        target.from_terms(a.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// `d^b x^c = sum_k e[k] x^(c-k) d^(b-k)` in one variable pair, for every
    /// `b <= max_b`. Built by applying `d x^m = [m] x^(m-1) + t^m x^m d` once
    /// per power of `d`.
    fn expansion_column(&self, max_b: u32, c: u32, tpow: &[R::Elem], qints: &[R::Elem]) -> Vec<Vec<R::Elem>> {
        let ring = self.ring();
        let mut column = Vec::with_capacity(max_b as usize + 1);
        column.push(vec![ring.one()]);
        for b in 1..=max_b {
            let prev = &column[b as usize - 1];
            let kmax = b.min(c) as usize;
            let mut next = Vec::with_capacity(kmax + 1);
            for k in 0..=kmax {
                let mut acc = ring.zero();
                if k < prev.len() {
                    acc = ring.mul(&prev[k], &tpow[c as usize - k]);
                }
                if k >= 1 && k - 1 < prev.len() {
                    let extra = ring.mul(&prev[k - 1], &qints[c as usize - k + 1]);
                    ring.add_assign(&mut acc, &extra);
                }
                next.push(acc);
            }
            column.push(next);
        }
        column
    }

    fn multiply(&self, a: &BTreeMap<Monomial, R::Elem>, b: &BTreeMap<Monomial, R::Elem>) -> BTreeMap<Monomial, R::Elem> {
        if a.is_empty() || b.is_empty() {
            return BTreeMap::new();
        }
        let ring = self.ring();
        let n = self.n();

        // Which (d-exponent, x-exponent) reorderings are needed.
        let mut need: HashMap<u32, u32> = HashMap::new();
        let mut max_c = 0;
        for ma in a.keys() {
            for mb in b.keys() {
                for i in 0..n {
                    let (bb, cc) = (ma.beta()[i], mb.alpha()[i]);
                    if bb > 0 && cc > 0 {
                        let slot = need.entry(cc).or_insert(0);
                        *slot = (*slot).max(bb);
                        max_c = max_c.max(cc);
                    }
                }
            }
        }
        let mut tpow = Vec::with_capacity(max_c as usize + 2);
        let mut qints = Vec::with_capacity(max_c as usize + 2);
        if !need.is_empty() {
            let mut p = ring.one();
            let mut q = ring.zero();
            for _ in 0..=max_c + 1 {
                qints.push(q.clone());
                q = ring.add(&q, &p);
                tpow.push(p.clone());
                p = ring.mul(&p, self.param());
            }
        }
        let columns: HashMap<u32, Vec<Vec<R::Elem>>> =
            need.iter().map(|(&c, &max_b)| (c, self.expansion_column(max_b, c, &tpow, &qints))).collect();
        let one = vec![ring.one()];
        let expansion = |bb: u32, cc: u32| -> &Vec<R::Elem> {
            if bb == 0 || cc == 0 {
                &one
            } else {
                &columns[&cc][bb as usize]
            }
        };

        let mut acc: HashMap<Monomial, R::Elem> = HashMap::new();
        let mut ks = vec![0usize; n];
        let mut exps = vec![0u32; 2 * n];
        for (ma, ca) in a {
            for (mb, cb) in b {
                let base = ring.mul(ca, cb);
                if ring.is_zero(&base) {
                    continue;
                }
                let factors: Vec<&Vec<R::Elem>> = (0..n).map(|i| expansion(ma.beta()[i], mb.alpha()[i])).collect();
                ks.iter_mut().for_each(|k| *k = 0);
                loop {
                    let mut coeff = base.clone();
                    let mut vanished = false;
                    for i in 0..n {
                        let e = &factors[i][ks[i]];
                        if ring.is_zero(e) {
                            vanished = true;
                            break;
                        }
                        if !ring.is_one(e) {
                            coeff = ring.mul(&coeff, e);
                        }
                    }
                    if !vanished {
                        for i in 0..n {
                            let k = ks[i] as u32;
                            exps[i] = ma.alpha()[i] + mb.alpha()[i] - k;
                            exps[n + i] = ma.beta()[i] + mb.beta()[i] - k;
                        }
                        let m = Monomial::from_exps(exps.clone());
                        match acc.get_mut(&m) {
                            Some(existing) => ring.add_assign(existing, &coeff),
                            None => {
                                acc.insert(m, coeff);
                            }
                        }
                    }
                    // odometer over the per-variable reordering indices
                    let mut i = 0;
                    while i < n {
                        ks[i] += 1;
                        if ks[i] < factors[i].len() {
                            break;
                        }
                        ks[i] = 0;
                        i += 1;
                    }
                    if i == n {
                        break;
                    }
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !ring.is_zero(c)).collect()
    }

    /// `ab - ba`.
    pub fn commutator(&self, a: &WeylElement<R>, b: &WeylElement<R>) -> Result<WeylElement<R>, AlgebraError> {
        Ok(&a.checked_mul(b)? - &b.checked_mul(a)?)
    }

    /// `ab - t ba` (with `t` the algebra's parameter).
    pub fn q_commutator(&self, a: &WeylElement<R>, b: &WeylElement<R>) -> Result<WeylElement<R>, AlgebraError> {
        Ok(&a.checked_mul(b)? - &b.checked_mul(a)?.scale(self.param()))
    }
}

impl SymbolicAlgebra {
    /// `A_t^n` over `Q[t, t^-1]`.
    pub fn symbolic(n: usize) -> Self {
        let ring = QLaurent::default();
        let t = ring.t();
        Self::new(n, ring, t).expect("t is a unit")
    }
}

impl RootAlgebra {
    /// `A_q^n` at the primitive root `q = exp(2 pi i / l)`, `l >= 2`.
    pub fn root_of_unity(n: usize, l: u32) -> Result<Self, AlgebraError> {
        if l < 2 {
            return Err(AlgebraError::Unsupported(format!("root of unity level must be >= 2, got {l}")));
        }
        Self::at_root(n, CyclotomicField::new(l))
    }

    pub fn at_root(n: usize, field: CyclotomicField) -> Result<Self, AlgebraError> {
        let z = field.zeta();
        Self::new(n, field, z)
    }

    pub fn level(&self) -> u32 {
        self.ring().level()
    }
}

impl WeylAlgebra<RationalField> {
    /// The classical Weyl algebra `A_n` (`t = 1`) over `Q`.
    pub fn classical(n: usize) -> Self {
        Self::new(n, RationalField, Rational::from_integer(1.into())).expect("1 is a unit")
    }
}

impl WeylAlgebra<ComplexField> {
    /// `A_q^n` for a floating complex `q`.
    pub fn numeric(n: usize, q: Complex64) -> Result<Self, AlgebraError> {
        Self::new(n, ComplexField, q)
    }
}

impl<R: Ring> WeylAlgebra<LaurentRing<R>> {
    /// `A_t^n` over `K[t, t^-1]` for a coefficient ring `K`.
    pub fn symbolic_over(n: usize, base: R) -> Self {
        let ring = LaurentRing::new(base);
        let t = ring.t();
        Self::new(n, ring, t).expect("t is a unit")
    }
}

impl<R: Ring> WeylAlgebra<JetRing<R>> {
    /// `A_t^n` modulo `(t - point)^2`.
    pub fn jets_at(n: usize, base: R, point: R::Elem) -> Result<Self, AlgebraError> {
        let ring = JetRing::new(base);
        let t = ring.variable_at(point);
        Self::new(n, ring, t)
    }
}

/// An element of a [`WeylAlgebra`] in PBW normal form: a finite sum of
/// `c * x^alpha d^beta` with nonzero coefficients.
pub struct WeylElement<R: Ring> {
    alg: WeylAlgebra<R>,
    terms: BTreeMap<Monomial, R::Elem>,
}

impl<R: Ring> Clone for WeylElement<R> {
    fn clone(&self) -> Self {
        Self { alg: self.alg.clone(), terms: self.terms.clone() }
    }
}

impl<R: Ring> PartialEq for WeylElement<R> {
    fn eq(&self, other: &Self) -> bool {
        self.alg == other.alg && (self - other).is_zero()
    }
}

impl<R: Ring> fmt::Debug for WeylElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl<R: Ring> fmt::Display for WeylElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<R: Ring> WeylElement<R> {
    pub fn algebra(&self) -> &WeylAlgebra<R> {
        &self.alg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> R::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.alg.ring().zero())
    }

    /// The coefficient of the unit monomial.
    pub fn constant_term(&self) -> R::Elem {
        self.coeff(&Monomial::one(self.alg.n()))
    }

    /// `Some(c)` when the element is the scalar `c`.
    pub fn as_scalar(&self) -> Option<R::Elem> {
        match self.terms.len() {
            0 => Some(self.alg.ring().zero()),
            1 => self.terms.iter().next().filter(|(m, _)| m.is_one()).map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    /// Maximal `|alpha| + |beta|` over the terms.
    pub fn bernstein_degree(&self) -> Result<u64, AlgebraError> {
        self.terms.keys().map(Monomial::degree).max().ok_or(AlgebraError::DegreeOfZero)
    }

    fn same_algebra(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_algebra(other)?;
        let ring = self.alg.ring();
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.get_mut(m) {
                Some(existing) => {
                    ring.add_assign(existing, c);
                    if ring.is_zero(existing) {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Ok(Self { alg: self.alg.clone(), terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_algebra(other)?;
        Ok(Self { alg: self.alg.clone(), terms: self.alg.multiply(&self.terms, &other.terms) })
    }

    /// Multiplies every coefficient by the scalar `c`.
    pub fn scale(&self, c: &R::Elem) -> Self {
        let ring = self.alg.ring();
        let terms = self
            .terms
            .iter()
            .map(|(m, x)| (m.clone(), ring.mul(x, c)))
            .filter(|(_, x)| !ring.is_zero(x))
            .collect();
        Self { alg: self.alg.clone(), terms }
    }

    /// `self^k`. Elements with at most two terms are squared repeatedly;
    /// anything larger is built by `k` successive left multiplications,
    /// which keeps each product against a low-degree factor.
    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return self.alg.one();
        }
        if self.terms.len() <= 2 {
            let mut base = self.clone();
            let mut acc = self.alg.one();
            let mut e = k;
            while e > 0 {
                if e & 1 == 1 {
                    acc = &acc * &base;
                }
                e >>= 1;
                if e > 0 {
                    base = &base * &base;
                }
            }
            return acc;
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = self * &acc;
        }
        acc
    }

    /// Applies a ring map to the coefficients, landing in `target`.
    pub fn map_coeffs<S: Ring>(&self, target: &WeylAlgebra<S>, f: impl Fn(&R::Elem) -> S::Elem) -> WeylElement<S> {
        self.alg.map_into(self, target, f)
    }

    /// Canonical text: terms in graded-lex order joined by `+`/`-`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            append_term(&mut out, self.alg.ring(), c, &m.to_text());
        }
        out
    }
}

impl<R: Ring> Add for &WeylElement<R> {
    type Output = WeylElement<R>;
    fn add(self, rhs: Self) -> WeylElement<R> {
        self.checked_add(rhs).expect("elements of different algebras")
    }
}

impl<R: Ring> Sub for &WeylElement<R> {
    type Output = WeylElement<R>;
    fn sub(self, rhs: Self) -> WeylElement<R> {
        self.checked_sub(rhs).expect("elements of different algebras")
    }
}

impl<R: Ring> Mul for &WeylElement<R> {
    type Output = WeylElement<R>;
    fn mul(self, rhs: Self) -> WeylElement<R> {
        self.checked_mul(rhs).expect("elements of different algebras")
    }
}

impl<R: Ring> Neg for &WeylElement<R> {
    type Output = WeylElement<R>;
    fn neg(self) -> WeylElement<R> {
        let ring = self.alg.ring();
        WeylElement { alg: self.alg.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), ring.neg(c))).collect() }
    }
}
