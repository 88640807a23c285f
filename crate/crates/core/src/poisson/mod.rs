//! The Poisson bracket on the center of `A_q^n`: the commutator of two lifts
//! to `A_t^n` vanishes at `t = q`, and its first-order part, scaled by
//! `lambda_q`, is again central.

use crate::center::{is_central, theta, theta_inverse, CenterPoly};
use crate::error::AlgebraError;
use crate::scalars::{qint, Cyclo, CyclotomicField, Field, JetRing, LaurentRing, Rational, Ring};
use crate::weyl::{RootAlgebra, WeylAlgebra, WeylElement};

/// `A_t^n` over `Q(zeta_l)[t, t^-1]`.
pub type LiftAlgebra = WeylAlgebra<LaurentRing<CyclotomicField>>;

/// Data for brackets at `q = zeta_l` in `n` variable pairs.
#[derive(Clone, Debug)]
pub struct PoissonContext {
    alg: RootAlgebra,
    lifts: LiftAlgebra,
    jets: WeylAlgebra<JetRing<CyclotomicField>>,
    lambda: Cyclo,
}

impl PoissonContext {
    pub fn new(n: usize, l: u32) -> Result<Self, AlgebraError> {
        let alg = RootAlgebra::root_of_unity(n, l)?;
        let field = alg.ring().clone();
        let lifts = WeylAlgebra::symbolic_over(n, field.clone());
        let jets = WeylAlgebra::jets_at(n, field.clone(), field.zeta())?;
        let lambda = lambda_q(&field)?;
        Ok(Self { alg, lifts, jets, lambda })
    }

    pub fn algebra(&self) -> &RootAlgebra {
        &self.alg
    }

    pub fn field(&self) -> &CyclotomicField {
        self.alg.ring()
    }

    pub fn level(&self) -> u32 {
        self.alg.level()
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    /// `lambda_q = 1 / (h(q) [l-1]_q!)` with `h = [l]_t / (t - q)`.
    pub fn lambda(&self) -> &Cyclo {
        &self.lambda
    }

    pub fn lift_algebra(&self) -> &LiftAlgebra {
        &self.lifts
    }

    /// The lift with `t`-constant coefficients.
    pub fn lift(&self, a: &WeylElement<CyclotomicField>) -> WeylElement<LaurentRing<CyclotomicField>> {
        let ring = self.lifts.ring().clone();
        a.map_coeffs(&self.lifts, |c| ring.constant(c.clone()))
    }

    /// `pi_q` on lifted elements.
    pub fn project(&self, a: &WeylElement<LaurentRing<CyclotomicField>>) -> WeylElement<CyclotomicField> {
        let ring = self.lifts.ring().clone();
        let z = self.field().zeta();
        a.map_coeffs(&self.alg, |c| ring.eval(c, &z).expect("zeta is a unit"))
    }

    fn check_central(&self, a: &WeylElement<CyclotomicField>) -> Result<(), AlgebraError> {
        if a.algebra() != &self.alg {
            return Err(AlgebraError::ContextMismatch);
        }
        if !is_central(a) {
            return Err(AlgebraError::NotCentral(format!("{} is not central", a.to_text())));
        }
        Ok(())
    }

    /// `{P, Q}_q` for central `P`, `Q`.
    ///
    /// The commutator of the constant lifts is formed modulo `(t - q)^2`;
    /// its value part must vanish and its slope is the divided commutator
    /// at `t = q`.
    pub fn bracket(
        &self,
        p: &WeylElement<CyclotomicField>,
        q: &WeylElement<CyclotomicField>,
    ) -> Result<WeylElement<CyclotomicField>, AlgebraError> {
        self.check_central(p)?;
        self.check_central(q)?;
        let jets = self.jets.ring().clone();
        let field = self.field().clone();
        let pj = p.map_coeffs(&self.jets, |c| jets.constant(c.clone()));
        let qj = q.map_coeffs(&self.jets, |c| jets.constant(c.clone()));
        let comm = self.jets.commutator(&pj, &qj)?;
        let mut terms = Vec::with_capacity(comm.num_terms());
        for (m, c) in comm.terms() {
            if !field.is_zero(&c.value) {
                return Err(AlgebraError::DivisionFailure(crate::error::ScalarError::NotDivisible(format!(
                    "coefficient of {} does not vanish at q",
                    m.to_text()
                ))));
            }
            terms.push((m.clone(), field.mul(&c.slope, &self.lambda)));
        }
        Ok(self.alg.from_terms(terms))
    }

    /// `lambda_q pi_q((t - q)^-1 [P~, Q~])` for arbitrary lifts, by exact
    /// division in `Q(zeta)[t, t^-1]`.
    pub fn bracket_of_lifts(
        &self,
        p: &WeylElement<LaurentRing<CyclotomicField>>,
        q: &WeylElement<LaurentRing<CyclotomicField>>,
    ) -> Result<WeylElement<CyclotomicField>, AlgebraError> {
        let ring = self.lifts.ring().clone();
        let field = self.field().clone();
        let z = field.zeta();
        let comm = self.lifts.commutator(p, q)?;
        let mut terms = Vec::with_capacity(comm.num_terms());
        for (m, c) in comm.terms() {
            let quotient = ring.exact_div(c, &z)?;
            let value = ring.eval(&quotient, &z).expect("zeta is a unit");
            terms.push((m.clone(), field.mul(&value, &self.lambda)));
        }
        Ok(self.alg.from_terms(terms))
    }

    /// The same bracket via exact division, with the constant lifts.
    pub fn bracket_reference(
        &self,
        p: &WeylElement<CyclotomicField>,
        q: &WeylElement<CyclotomicField>,
    ) -> Result<WeylElement<CyclotomicField>, AlgebraError> {
        self.check_central(p)?;
        self.check_central(q)?;
        self.bracket_of_lifts(&self.lift(p), &self.lift(q))
    }

    /// `Theta_l^-1({Theta_l(p), Theta_l(q)}_q)`.
    pub fn transported_bracket(
        &self,
        p: &CenterPoly<CyclotomicField>,
        q: &CenterPoly<CyclotomicField>,
    ) -> Result<CenterPoly<CyclotomicField>, AlgebraError> {
        let l = self.level();
        let b = self.bracket(&theta(p, &self.alg, l)?, &theta(q, &self.alg, l)?)?;
        theta_inverse(&b, l)
    }

    /// `l (q - 1) / [l-1]_q!`, the `x^l d^l` coefficient of `{d^l, x^l}_q`.
    pub fn straight_coefficient(&self) -> Cyclo {
        let field = self.field();
        let l = self.level();
        let q = field.zeta();
        let num = field.mul(&field.from_int(l as i64), &field.sub(&q, &field.one()));
        field.div(&num, &field.qfact_at(&q, l - 1)).expect("[l-1]_q! is nonzero")
    }
}

/// `1 / (h(q) [l-1]_q!)` where `h = [l]_t / (t - q)`, `q = zeta_l`.
pub fn lambda_q(field: &CyclotomicField) -> Result<Cyclo, AlgebraError> {
    let l = field.level();
    let z = field.zeta();
    let ring = LaurentRing::new(field.clone());
    let lifted = ring.from_terms(qint(l).iter().map(|(e, c)| (e, field.from_rational(c))));
    let h = ring.exact_div(&lifted, &z)?;
    let hz = ring.eval(&h, &z).expect("zeta is a unit");
    let denom = field.mul(&hz, &field.qfact_at(&z, l - 1));
    field
        .try_inv(&denom)
        .ok_or_else(|| AlgebraError::Unsupported("lambda_q is undefined".into()))
}

/// `{p, q} = sum_i dp/dr_i dq/ds_i - dq/dr_i dp/ds_i`.
pub fn standard_bracket<R: Ring>(p: &CenterPoly<R>, q: &CenterPoly<R>) -> Result<CenterPoly<R>, AlgebraError> {
    if p.n() != q.n() || p.ring() != q.ring() {
        return Err(AlgebraError::ContextMismatch);
    }
    let mut acc = CenterPoly::zero(p.ring().clone(), p.n());
    for i in 1..=p.n() {
        let a = &p.partial_r(i) * &q.partial_s(i);
        let b = &q.partial_r(i) * &p.partial_s(i);
        acc = &acc + &(&a - &b);
    }
    Ok(acc)
}

/// Embeds a rational center polynomial into `Q(zeta_l)`.
pub fn center_to_field(p: &CenterPoly<crate::scalars::RationalField>, field: &CyclotomicField) -> CenterPoly<CyclotomicField> {
    p.map_coeffs(field.clone(), |c: &Rational| field.from_rational(c))
}

#[cfg(test)]
mod tests;
