//! The cyclotomic field `Q(zeta_l)`, elements stored as residues modulo the
//! `l`-th cyclotomic polynomial.

use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::{append_term, LaurentPoly};
use super::precise::{to_f64_ratio, unit_circle_table};
use super::ring::{Field, Rational, Ring};

/// An element `num(z) / den` of `Q(zeta_l)`, `num` of degree `< phi(l)`.
///
/// Invariants: `den > 0`, `gcd(den, content(num)) = 1`, `num.len() == phi(l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclo {
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclo {
    /// Coefficients of the residue polynomial in `z` as rationals.
    pub fn coefficients(&self) -> Vec<Rational> {
        self.num.iter().map(|c| Rational::new(c.clone(), self.den.clone())).collect()
    }

    /// Whether the element lies in `Q` (only the constant coefficient is set).
    pub fn as_rational(&self) -> Option<Rational> {
        self.num[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    fn nonzero_count(&self) -> usize {
        self.num.iter().filter(|c| !c.is_zero()).count()
    }
}

struct FieldData {
    level: u32,
    /// Monic `Phi_l`, ascending coefficients.
    phi: Vec<BigInt>,
    degree: usize,
    /// `zeta^k` for `0 <= k < l` as fixed-point complex numbers.
    circle: Vec<(BigInt, BigInt)>,
}

/// `Q(zeta_l)` with the distinguished embedding `zeta_l -> exp(2 pi i / l)`.
#[derive(Clone)]
pub struct CyclotomicField {
    data: Arc<FieldData>,
}

impl std::fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CyclotomicField({})", self.data.level)
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.data.level == other.data.level
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Exact division of integer polynomials by a monic divisor.
fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// `Phi_n` by recursive division `(z^n - 1) / prod_{d | n, d < n} Phi_d`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n > 0, "cyclotomic polynomial index must be positive");
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = BigInt::from(-1);
    poly[n as usize] = BigInt::one();
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        poly = div_monic(&poly, &cyclotomic_polynomial(d));
    }
    poly
}

impl CyclotomicField {
    /// `Q(zeta_l)`; level 1 is `Q` itself with `zeta = 1`.
    pub fn new(level: u32) -> Self {
        assert!(level >= 1, "cyclotomic level must be positive");
        let phi = cyclotomic_polynomial(level);
        let degree = phi.len() - 1;
        Self { data: Arc::new(FieldData { level, phi, degree, circle: unit_circle_table(level) }) }
    }

    pub fn level(&self) -> u32 {
        self.data.level
    }

    /// `phi(l)`, the degree of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.data.degree
    }

    pub fn phi(&self) -> &[BigInt] {
        &self.data.phi
    }

    /// The generator `zeta_l`.
    pub fn zeta(&self) -> Cyclo {
        self.zeta_pow(1)
    }

    /// `zeta_l^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> Cyclo {
        let l = self.data.level as i64;
        let mut cyc = vec![BigInt::zero(); l as usize];
        cyc[k.rem_euclid(l) as usize] = BigInt::one();
        self.from_cyclic(cyc, BigInt::one())
    }

    /// Builds an element from rational coefficients of `1, z, z^2, ...` (any
    /// length).
    pub fn from_coefficients(&self, coeffs: &[Rational]) -> Cyclo {
        let l = self.data.level as usize;
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut cyc = vec![BigInt::zero(); l];
        for (k, c) in coeffs.iter().enumerate() {
            cyc[k % l] += c.numer() * (&den / c.denom());
        }
        self.from_cyclic(cyc, den)
    }

    /// Reduces an integer vector indexed by `z^k` (any length) modulo
    /// `z^l - 1` and then `Phi_l`.
    fn from_cyclic(&self, mut v: Vec<BigInt>, den: BigInt) -> Cyclo {
        let l = self.data.level as usize;
        if v.len() > l {
            let tail = v.split_off(l);
            for (k, c) in tail.into_iter().enumerate() {
                v[k % l] += c;
            }
        }
        let d = self.data.degree;
        let phi = &self.data.phi;
        for k in (d..v.len()).rev() {
            if v[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[k]);
            for (j, p) in phi[..d].iter().enumerate() {
                if !p.is_zero() {
                    v[k - d + j] -= &c * p;
                }
            }
        }
        v.resize(d, BigInt::zero());
        normalized(v, den)
    }

    /// Evaluates a Laurent polynomial over `Q` at `t = zeta_l`.
    pub fn specialize(&self, p: &LaurentPoly<Rational>) -> Cyclo {
        let l = self.data.level as i64;
        let mut coeffs = vec![Rational::zero(); l as usize];
        for (e, c) in p.iter() {
            coeffs[e.rem_euclid(l) as usize] += c;
        }
        self.from_coefficients(&coeffs)
    }

    /// The Galois conjugate `z -> z^k`, `gcd(k, l) = 1`.
    pub fn conjugate(&self, a: &Cyclo, k: u32) -> Cyclo {
        let l = self.data.level as usize;
        let mut cyc = vec![BigInt::zero(); l];
        for (j, c) in a.num.iter().enumerate() {
            cyc[(j * k as usize) % l] += c;
        }
        self.from_cyclic(cyc, a.den.clone())
    }

    /// Field norm to `Q`.
    pub fn norm(&self, a: &Cyclo) -> Rational {
        let l = self.data.level;
        let prod = (1..l)
            .filter(|k| k.gcd(&l) == 1)
            .fold(self.one(), |acc, k| self.mul(&acc, &self.conjugate(a, k)));
        prod.as_rational().expect("norm lies in Q")
    }

    /// The complex embedding `zeta_l -> exp(2 pi i / l)`.
    ///
    /// The sum is formed in high-precision fixed point and rounded once, so
    /// large cancelling coefficients do not lose the small true value.
    pub fn embed(&self, a: &Cyclo) -> Complex64 {
        let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
        for (c, (cr, ci)) in a.num.iter().zip(&self.data.circle) {
            if c.is_zero() {
                continue;
            }
            re += c * cr;
            im += c * ci;
        }
        Complex64::new(to_f64_ratio(&re, &a.den), to_f64_ratio(&im, &a.den))
    }

    /// Best-effort exact `k`-th root for elements of `Q` with rational roots.
    pub fn rational_root(&self, a: &Cyclo, k: u32) -> Option<Cyclo> {
        let r = a.as_rational()?;
        let root = super::precise::rational_nth_root(&r, k)?;
        Some(self.from_rational(&root))
    }
}

fn normalized(mut num: Vec<BigInt>, mut den: BigInt) -> Cyclo {
    if den.is_negative() {
        den = -den;
        for c in &mut num {
            *c = -std::mem::take(c);
        }
    }
    if !den.is_one() {
        let g = num.iter().fold(den.clone(), |g, c| if c.is_zero() { g } else { g.gcd(c) });
        if !g.is_one() {
            for c in &mut num {
                *c /= &g;
            }
            den /= &g;
        }
    }
    if num.iter().all(Zero::is_zero) {
        den = BigInt::one();
    }
    Cyclo { num, den }
}

impl Ring for CyclotomicField {
    type Elem = Cyclo;

    fn zero(&self) -> Cyclo {
        Cyclo { num: vec![BigInt::zero(); self.data.degree], den: BigInt::one() }
    }
    fn one(&self) -> Cyclo {
        self.from_rational(&Rational::one())
    }
    fn is_zero(&self, a: &Cyclo) -> bool {
        a.num.iter().all(Zero::is_zero)
    }
    fn is_one(&self, a: &Cyclo) -> bool {
        a.den.is_one() && a.num[0].is_one() && a.num[1..].iter().all(Zero::is_zero)
    }

    fn add(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        if a.den == b.den {
            let num = a.num.iter().zip(&b.num).map(|(x, y)| x + y).collect();
            return normalized(num, a.den.clone());
        }
        let num = a.num.iter().zip(&b.num).map(|(x, y)| x * &b.den + y * &a.den).collect();
        normalized(num, &a.den * &b.den)
    }

    fn add_assign(&self, a: &mut Cyclo, b: &Cyclo) {
        if a.den == b.den && a.den.is_one() {
            for (x, y) in a.num.iter_mut().zip(&b.num) {
                if !y.is_zero() {
                    *x += y;
                }
            }
        } else {
            *a = self.add(a, b);
        }
    }

    fn sub(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &Cyclo) -> Cyclo {
        Cyclo { num: a.num.iter().map(|c| -c).collect(), den: a.den.clone() }
    }

    fn mul(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        let den = &a.den * &b.den;
        // Scalars from Q act coefficientwise.
        for (s, o) in [(a, b), (b, a)] {
            if s.num[1..].iter().all(Zero::is_zero) {
                let c = &s.num[0];
                return normalized(o.num.iter().map(|x| x * c).collect(), den);
            }
        }
        let d = self.data.degree;
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        let (sparse, dense) = if a.nonzero_count() <= b.nonzero_count() { (a, b) } else { (b, a) };
        for (i, x) in sparse.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in dense.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.from_cyclic(prod, den)
    }

    fn from_rational(&self, r: &Rational) -> Cyclo {
        let mut num = vec![BigInt::zero(); self.data.degree];
        num[0] = r.numer().clone();
        normalized(num, r.denom().clone())
    }

    fn try_inv(&self, a: &Cyclo) -> Option<Cyclo> {
        if self.is_zero(a) {
            return None;
        }
        if let Some(r) = a.as_rational() {
            return Some(self.from_rational(&r.recip()));
        }
        // a^-1 = (product of the other conjugates) / norm(a).
        let l = self.data.level;
        let others = (2..l)
            .filter(|k| k.gcd(&l) == 1)
            .fold(self.one(), |acc, k| self.mul(&acc, &self.conjugate(a, k)));
        let norm = self.mul(a, &others).as_rational().expect("norm lies in Q");
        Some(self.mul(&others, &self.from_rational(&norm.recip())))
    }

    fn format(&self, a: &Cyclo) -> String {
        if self.is_zero(a) {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in a.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{k}"),
            };
            let coeff = Rational::new(c.clone(), a.den.clone());
            append_term(&mut out, &super::ring::RationalField, &coeff, &var);
        }
        out
    }

    fn is_atomic(&self, a: &Cyclo) -> bool {
        a.nonzero_count() <= 1
    }
}

impl Field for CyclotomicField {}

/// The norm of an embedded value, convenient in tests and reports.
pub fn embedded_abs(field: &CyclotomicField, a: &Cyclo) -> f64 {
    field.embed(a).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::laurent::{qfact, qint, QLaurent};
    use crate::scalars::ring::rat;
    use num_traits::ToPrimitive;

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |n| cyclotomic_polynomial(n).iter().map(|c| c.to_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(as_i64(5), vec![1; 5]);
    }

    #[test]
    fn specialize_examples() {
        let ring = QLaurent::default();
        let f2 = CyclotomicField::new(2);
        assert!(f2.is_one(&f2.specialize(&ring.monomial(2, rat(1, 1)))));
        let one_minus_t = ring.sub(&ring.one(), &ring.t());
        assert_eq!(f2.specialize(&one_minus_t), f2.from_int(2));
        for l in 2..=16 {
            let f = CyclotomicField::new(l);
            assert!(f.is_zero(&f.specialize(&qint(l))), "[l] at zeta_{l}");
        }
    }

    #[test]
    fn qfact_vanishes_exactly_from_l() {
        for l in 2..=12u32 {
            let f = CyclotomicField::new(l);
            for k in 1..=l + 2 {
                let v = f.specialize(&qfact(k));
                assert_eq!(f.is_zero(&v), k >= l, "l = {l}, k = {k}");
            }
        }
    }

    #[test]
    fn embedding_examples() {
        let f4 = CyclotomicField::new(4);
        let one = f4.embed(&f4.one());
        assert!((one.re - 1.0).abs() < 1e-15 && one.im.abs() < 1e-15);
        let i = f4.embed(&f4.zeta());
        assert!(i.re.abs() < 1e-12 && (i.im - 1.0).abs() < 1e-12);
        let f3 = CyclotomicField::new(3);
        let s = f3.embed(&f3.add(&f3.zeta(), &f3.zeta_pow(2)));
        assert!((s.re + 1.0).abs() < 1e-12 && s.im.abs() < 1e-12);
    }

    #[test]
    fn zeta_has_order_l() {
        for l in [2u32, 3, 4, 6, 7, 12, 31] {
            let f = CyclotomicField::new(l);
            let z = f.zeta();
            assert!(f.is_one(&f.pow(&z, l as u64)));
            for k in 1..l {
                assert!(!f.is_one(&f.pow(&z, k as u64)));
            }
        }
    }

    #[test]
    fn inverses() {
        for l in [3u32, 5, 8, 12] {
            let f = CyclotomicField::new(l);
            let a = f.sub(&f.one(), &f.zeta());
            let b = f.add(&f.from_coefficients(&[rat(3, 2), rat(0, 1), rat(-5, 7)]), &a);
            for x in [a, b] {
                let inv = f.try_inv(&x).unwrap();
                assert!(f.is_one(&f.mul(&x, &inv)));
            }
        }
        assert!(CyclotomicField::new(5).try_inv(&CyclotomicField::new(5).zero()).is_none());
    }

    #[test]
    fn norm_of_one_minus_zeta_prime() {
        for p in [3u32, 5, 7, 11] {
            let f = CyclotomicField::new(p);
            let n = f.norm(&f.sub(&f.one(), &f.zeta()));
            assert_eq!(n, rat(p as i64, 1));
        }
    }

    #[test]
    fn printing() {
        let f = CyclotomicField::new(3);
        assert_eq!(f.format(&f.sub(&f.one(), &f.zeta())), "1 - q");
        assert_eq!(f.format(&f.zeta_pow(2)), "-1 - q");
        assert_eq!(f.format(&f.from_rational(&rat(-3, 2))), "-3/2");
    }

    #[test]
    fn cancellation_survives_embedding() {
        // (1 - zeta)^31 has integer coefficients around 1e8 but absolute value
        // (2 sin(pi/31))^31 ~ 1e-22.
        let f = CyclotomicField::new(31);
        let x = f.pow(&f.sub(&f.one(), &f.zeta()), 31);
        let expected = (2.0 * (std::f64::consts::PI / 31.0).sin()).powi(31);
        let got = embedded_abs(&f, &x);
        assert!((got - expected).abs() / expected < 1e-12, "{got} vs {expected}");
    }
}
