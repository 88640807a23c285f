//! Fixed-point helpers for the complex embedding of cyclotomic elements.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ring::Rational;

/// Fractional bits of the fixed-point unit-circle table.
pub(crate) const FRAC_BITS: u32 = 320;
const GUARD: u32 = 64;

fn atan_inv(x: u32, bits: u32) -> BigInt {
    // atan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1))
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = (BigInt::one() << bits) / &x;
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

fn pi_fixed(bits: u32) -> BigInt {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    atan_inv(5, bits) * 16 - atan_inv(239, bits) * 4
}

fn mul_fixed(a: &BigInt, b: &BigInt, bits: u32) -> BigInt {
    (a * b) >> bits
}

fn cos_sin_fixed(theta: &BigInt, bits: u32) -> (BigInt, BigInt) {
    let mut cos = BigInt::zero();
    let mut sin = BigInt::zero();
    // term_k = theta^k / k!
    let mut term = BigInt::one() << bits;
    let mut k = 0u32;
    while !term.is_zero() {
        match k % 4 {
            0 => cos += &term,
            1 => sin += &term,
            2 => cos -= &term,
            _ => sin -= &term,
        }
        k += 1;
        term = mul_fixed(&term, theta, bits) / BigInt::from(k);
    }
    (cos, sin)
}

/// `exp(2 pi i k / l)` for `0 <= k < l` with [`FRAC_BITS`] fractional bits.
pub(crate) fn unit_circle_table(l: u32) -> Vec<(BigInt, BigInt)> {
    let bits = FRAC_BITS + GUARD;
    let theta = (pi_fixed(bits) * 2) / BigInt::from(l);
    let (c, s) = cos_sin_fixed(&theta, bits);
    let mut table = Vec::with_capacity(l as usize);
    let (mut re, mut im) = (BigInt::one() << bits, BigInt::zero());
    for _ in 0..l {
        table.push((&re >> GUARD, &im >> GUARD));
        let nre = mul_fixed(&re, &c, bits) - mul_fixed(&im, &s, bits);
        let nim = mul_fixed(&re, &s, bits) + mul_fixed(&im, &c, bits);
        re = nre;
        im = nim;
    }
    table
}

/// `num / (den * 2^FRAC_BITS)` as an `f64`.
pub(crate) fn to_f64_ratio(num: &BigInt, den: &BigInt) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let extra = 64u32;
    let q = (num << extra) / den;
    let scale = 2f64.powi(-((FRAC_BITS + extra) as i32));
    match q.to_f64() {
        Some(v) if v.is_finite() => v * scale,
        _ => {
            // Astronomically large: shift down first.
            let shift = q.bits().saturating_sub(1000);
            (q >> shift).to_f64().unwrap_or(f64::INFINITY) * 2f64.powi(shift as i32) * scale
        }
    }
}

fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k % 2 == 0 {
            return None;
        }
        return exact_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
}

/// The rational `k`-th root of `r`, if there is one.
pub fn rational_nth_root(r: &Rational, k: u32) -> Option<Rational> {
    if k == 0 {
        return None;
    }
    let n = exact_root(r.numer(), k)?;
    let d = exact_root(r.denom(), k)?;
    Some(Rational::new(n, d))
}

/// Closest rational with denominator at most `max_den` (continued fractions).
pub fn nearest_small_rational(x: f64, max_den: i64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let floor = x.floor();
    let (mut p0, mut q0, mut p1, mut q1) = (1i128, 0i128, floor as i128, 1i128);
    let mut frac = x - floor;
    let mut best = Rational::from_integer(BigInt::from(p1));
    for _ in 0..64 {
        if frac.abs() < 1e-15 {
            break;
        }
        let inv = 1.0 / frac;
        let a = inv.floor();
        frac = inv - a;
        let a = a as i128;
        let (p2, q2) = (a * p1 + p0, a * q1 + q0);
        if q2 > max_den as i128 {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        best = Rational::new(BigInt::from(p1), BigInt::from(q1));
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ring::rat;

    #[test]
    fn circle_table_matches_libm() {
        for l in [2u32, 3, 7, 31] {
            for (k, (re, im)) in unit_circle_table(l).iter().enumerate() {
                let angle = 2.0 * std::f64::consts::PI * k as f64 / l as f64;
                let one = BigInt::one();
                assert!((to_f64_ratio(re, &one) - angle.cos()).abs() < 1e-14);
                assert!((to_f64_ratio(im, &one) - angle.sin()).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn rational_roots() {
        assert_eq!(rational_nth_root(&rat(1, 4), 2), Some(rat(1, 2)));
        assert_eq!(rational_nth_root(&rat(-8, 27), 3), Some(rat(-2, 3)));
        assert_eq!(rational_nth_root(&rat(2, 1), 2), None);
        assert_eq!(rational_nth_root(&rat(-4, 1), 2), None);
    }

    #[test]
    fn small_rational_rounding() {
        assert_eq!(nearest_small_rational(0.5000000001, 64), Some(rat(1, 2)));
        assert_eq!(nearest_small_rational(-2.0, 64), Some(rat(-2, 1)));
        assert_eq!(nearest_small_rational(1e-10, 64), Some(rat(0, 1)));
        assert_eq!(nearest_small_rational(0.3333333, 64), Some(rat(1, 3)));
    }
}
