use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;

use super::monomial::Monomial;
use super::ring::{Coeff, CoefficientRing};
use super::variable::Variable;

use crate::error::{Error, Result};

/// A sparse multivariate polynomial in canonical form: a term map from
/// monomials to nonzero coefficients, all living in one coefficient ring.
/// Equality is term-map equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: CoefficientRing,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(ring: CoefficientRing) -> Polynomial {
        Polynomial { ring, terms: BTreeMap::new() }
    }

    pub fn one(ring: CoefficientRing) -> Polynomial {
        Polynomial::constant(ring, 1)
    }

    pub fn constant(ring: CoefficientRing, n: i64) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        p.add_term(Monomial::one(), Coeff::from_i64(ring, n));
        p
    }

    pub fn variable(ring: CoefficientRing, v: Variable) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        p.add_term(Monomial::variable(v), Coeff::one(ring));
        p
    }

    /// Integer linear combination of variables.
    pub fn linear(ring: CoefficientRing, form: &[(i64, Variable)]) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        for (a, v) in form {
            p.add_term(Monomial::variable(*v), Coeff::from_i64(ring, *a));
        }
        p
    }

    pub fn from_terms(
        ring: CoefficientRing,
        terms: impl IntoIterator<Item = (Monomial, Coeff)>,
    ) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Coeff> {
        self.terms.get(m)
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms
            .keys()
            .flat_map(|m| m.variables().copied())
            .collect()
    }

    pub fn uses_variable(&self, v: &Variable) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// Accumulate one term, keeping the canonical no-zero-coefficients form.
    pub(crate) fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c, self.ring);
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.tag(), other.ring.tag()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg(self.ring));
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.neg(self.ring)))
            .collect();
        Polynomial { ring: self.ring, terms }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = Polynomial::zero(self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb, self.ring));
            }
        }
        Ok(out)
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let mut out = Polynomial::zero(self.ring);
        for (ma, ca) in &self.terms {
            out.add_term(ma.mul(m), ca.mul(c, self.ring));
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn scale_i64(&self, n: i64) -> Polynomial {
        self.scale(&Coeff::from_i64(self.ring, n))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.ring);
        for _ in 0..e {
            out = out.mul(self).expect("same ring");
        }
        out
    }

    /// Topological degree (all generators in degree 2); zero polynomial
    /// reports degree 0.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// True when all terms share the same topological degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn is_homogeneous_weighted(&self, degrees: &BTreeMap<Variable, usize>) -> bool {
        let mut it = self.terms.keys().map(|m| m.weighted_degree(degrees));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// The degree-`d` graded piece (topological grading).
    pub fn graded_piece(&self, d: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Polynomial { ring: self.ring, terms }
    }

    /// All nonzero graded pieces, in ascending degree.
    pub fn graded_pieces(&self) -> Vec<Polynomial> {
        let degrees: BTreeSet<usize> = self.terms.keys().map(|m| m.degree()).collect();
        degrees.into_iter().map(|d| self.graded_piece(d)).collect()
    }

    /// Simultaneous substitution. Values must be homogeneous of degree 2
    /// (linear forms in the degree-2 generators) or zero; variables absent
    /// from the map are fixed.
    pub fn substitute(&self, map: &BTreeMap<Variable, Polynomial>) -> Result<Polynomial> {
        for (v, val) in map {
            let linear = val.is_zero()
                || (val.is_homogeneous()
                    && val.degree() == 2
                    && val.terms.keys().all(|m| m.exponent_degree() == 1));
            if !linear {
                return Err(Error::InhomogeneousSubstitution { var: v.render() });
            }
        }
        self.substitute_general(map)
    }

    /// Substitution without the linearity requirement. Used internally for
    /// expanding derived generators and applying Weyl actions.
    pub fn substitute_general(&self, map: &BTreeMap<Variable, Polynomial>) -> Result<Polynomial> {
        for val in map.values() {
            if val.ring != self.ring {
                return Err(Error::RingMismatch(self.ring.tag(), val.ring.tag()));
            }
        }
        let mut out = Polynomial::zero(self.ring);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(self.ring, 0);
            term.add_term(Monomial::one(), c.clone());
            for (v, e) in m.iter() {
                match map.get(v) {
                    Some(val) => term = term.mul(&val.pow(*e))?,
                    None => {
                        term = term.mul_term(&Monomial::from_pairs([(*v, *e)]), &Coeff::one(self.ring))
                    }
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Coefficient-wise image of an integer polynomial in a rational or
    /// prime-field ring; terms vanishing in the target are dropped.
    pub fn reduce_coefficients(&self, target: CoefficientRing) -> Result<Polynomial> {
        if self.ring != CoefficientRing::Integers || !target.is_field() {
            return Err(Error::BadReduction);
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let Coeff::Int(a) = c else { unreachable!() };
            out.add_term(m.clone(), Coeff::reduce_int(a, target));
        }
        Ok(out)
    }

    /// Integer content of a rational polynomial cleared into Z; fails if any
    /// coefficient has a nontrivial denominator.
    pub fn try_into_integers(&self) -> Option<Polynomial> {
        if self.ring != CoefficientRing::Rationals {
            return None;
        }
        let mut out = Polynomial::zero(CoefficientRing::Integers);
        for (m, c) in &self.terms {
            let Coeff::Rat(q) = c else { unreachable!() };
            if !num_traits::One::is_one(q.denom()) {
                return None;
            }
            out.add_term(m.clone(), Coeff::Int(q.numer().clone()));
        }
        Some(out)
    }

    /// View in the rationals; only defined for integer polynomials.
    pub fn to_rationals(&self) -> Polynomial {
        assert_eq!(self.ring, CoefficientRing::Integers);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let Coeff::Int(a) = c else { unreachable!() };
                (m.clone(), Coeff::reduce_int(a, CoefficientRing::Rationals))
            })
            .collect();
        Polynomial { ring: CoefficientRing::Rationals, terms }
    }

    /// Leading term in the print order, used for sign normalization.
    pub fn print_leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms
            .iter()
            .max_by(|(ma, _), (mb, _)| ma.cmp_print(mb))
    }

    /// Negate if the print-leading coefficient renders negative, so emitted
    /// relations have a deterministic, positive-leading form.
    pub fn normalize_sign(&self) -> Polynomial {
        match self.print_leading() {
            Some((_, c)) if c.prints_negative(self.ring) => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn from_bigint_terms(
        ring: CoefficientRing,
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        for (m, a) in terms {
            p.add_term(m, Coeff::reduce_int(&a, ring).clone());
        }
        p
    }
}

/// Checked sum; errors on a coefficient-ring mismatch.
pub fn poly_add(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.add(b)
}

/// Checked product; errors on a coefficient-ring mismatch.
pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.mul(b)
}

/// The k-th elementary symmetric polynomial of the given degree-2 forms,
/// with e_0 = 1. Computed through the product expansion
/// prod_i (1 + t*f_i) accumulated degree by degree.
pub fn elementary_symmetric(
    ring: CoefficientRing,
    k: usize,
    forms: &[Polynomial],
) -> Result<Polynomial> {
    if k > forms.len() {
        return Err(Error::SymmetricIndexOutOfRange { k, n: forms.len() });
    }
    // e[j] after processing i forms is the j-th elementary symmetric of them.
    let mut e: Vec<Polynomial> = vec![Polynomial::zero(ring); k + 1];
    e[0] = Polynomial::one(ring);
    for f in forms {
        if f.ring() != ring {
            return Err(Error::RingMismatch(ring.tag(), f.ring().tag()));
        }
        for j in (1..=k).rev() {
            let bump = e[j - 1].mul(f)?;
            e[j] = e[j].add(&bump)?;
        }
    }
    Ok(e[k].clone())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::display::render_polynomial(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> CoefficientRing {
        CoefficientRing::Integers
    }

    fn var(p: CoefficientRing, v: Variable) -> Polynomial {
        Polynomial::variable(p, v)
    }

    #[test]
    fn additive_identity_and_inverse() {
        let y1 = var(z(), Variable::y(1, 1));
        let y2 = var(z(), Variable::y(1, 2));
        let s = y1.add(&y2).unwrap();
        assert_eq!(s.add(&Polynomial::zero(z())).unwrap(), s);
        assert!(y1.add(&y1.neg()).unwrap().is_zero());
    }

    #[test]
    fn like_term_collection() {
        let y1 = var(z(), Variable::y(1, 1));
        let a = y1.add(&Polynomial::one(z())).unwrap();
        let b = y1.sub(&Polynomial::one(z())).unwrap();
        assert_eq!(a.add(&b).unwrap(), y1.scale_i64(2));
    }

    #[test]
    fn binomial_expansion() {
        let y1 = var(z(), Variable::y(1, 1));
        let y2 = var(z(), Variable::y(1, 2));
        let one = Polynomial::one(z());
        let lhs = one.add(&y1).unwrap().mul(&one.add(&y2).unwrap()).unwrap();
        let expected = one
            .add(&y1)
            .unwrap()
            .add(&y2)
            .unwrap()
            .add(&y1.mul(&y2).unwrap())
            .unwrap();
        assert_eq!(lhs, expected);
    }

    #[test]
    fn squares_and_powers() {
        let y1 = var(z(), Variable::y(1, 1));
        let y2 = var(z(), Variable::y(1, 2));
        let d = y1.sub(&y2).unwrap();
        let sq = d.mul(&d).unwrap();
        let expected = y1
            .pow(2)
            .sub(&y1.mul(&y2).unwrap().scale_i64(2))
            .unwrap()
            .add(&y2.pow(2))
            .unwrap();
        assert_eq!(sq, expected);

        let x = var(z(), Variable::x());
        assert_eq!(x.mul(&x.pow(2)).unwrap(), x.pow(3));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Polynomial::one(CoefficientRing::Integers);
        let b = Polynomial::one(CoefficientRing::Rationals);
        assert!(matches!(poly_add(&a, &b), Err(Error::RingMismatch(..))));
        assert!(matches!(poly_mul(&a, &b), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn substitution_examples() {
        let y = Variable::y(1, 1);
        let u = Variable::u(1, 1);
        let p = var(z(), y).pow(2);
        let mut map = BTreeMap::new();
        map.insert(y, var(z(), u));
        assert_eq!(p.substitute(&map).unwrap(), var(z(), u).pow(2));

        // e2(y1, y2) with y1 -> u1, y2 -> u2 becomes u1*u2.
        let y1 = Variable::y(1, 1);
        let y2 = Variable::y(1, 2);
        let e2 = elementary_symmetric(z(), 2, &[var(z(), y1), var(z(), y2)]).unwrap();
        let mut map = BTreeMap::new();
        map.insert(y1, var(z(), Variable::u(1, 1)));
        map.insert(y2, var(z(), Variable::u(1, 2)));
        let expected = var(z(), Variable::u(1, 1))
            .mul(&var(z(), Variable::u(1, 2)))
            .unwrap();
        assert_eq!(e2.substitute(&map).unwrap(), expected);
    }

    #[test]
    fn substitution_rejects_inhomogeneous_values() {
        let y = Variable::y(1, 1);
        let p = var(z(), y);
        let mut map = BTreeMap::new();
        map.insert(y, var(z(), y).pow(2));
        assert!(matches!(
            p.substitute(&map),
            Err(Error::InhomogeneousSubstitution { .. })
        ));
    }

    #[test]
    fn triple_product_substitution() {
        let ys: Vec<Variable> = (1..=3).map(|k| Variable::y(1, k)).collect();
        let xs: Vec<Variable> = (1..=3).map(|k| Variable::x_indexed(k)).collect();
        let prod = ys
            .iter()
            .map(|v| var(z(), *v))
            .reduce(|a, b| a.mul(&b).unwrap())
            .unwrap();
        let map: BTreeMap<Variable, Polynomial> = ys
            .iter()
            .zip(&xs)
            .map(|(y, x)| (*y, var(z(), *x)))
            .collect();
        let expected = xs
            .iter()
            .map(|v| var(z(), *v))
            .reduce(|a, b| a.mul(&b).unwrap())
            .unwrap();
        assert_eq!(prod.substitute(&map).unwrap(), expected);
    }

    #[test]
    fn elementary_symmetric_examples() {
        let ys: Vec<Polynomial> = (1..=3).map(|k| var(z(), Variable::y(1, k))).collect();
        let e1 = elementary_symmetric(z(), 1, &ys).unwrap();
        assert_eq!(e1, ys[0].add(&ys[1]).unwrap().add(&ys[2]).unwrap());
        let e3 = elementary_symmetric(z(), 3, &ys).unwrap();
        assert_eq!(e3, ys[0].mul(&ys[1]).unwrap().mul(&ys[2]).unwrap());
        assert_eq!(
            elementary_symmetric(z(), 0, &ys).unwrap(),
            Polynomial::one(z())
        );
        assert!(matches!(
            elementary_symmetric(z(), 4, &ys),
            Err(Error::SymmetricIndexOutOfRange { k: 4, n: 3 })
        ));
    }

    #[test]
    fn elementary_symmetric_of_shifted_form() {
        // e2(y1 + u, y2) = y1*y2 + u*y2.
        let y1 = var(z(), Variable::y(1, 1));
        let y2 = var(z(), Variable::y(1, 2));
        let u = var(z(), Variable::u(1, 1));
        let e2 = elementary_symmetric(z(), 2, &[y1.add(&u).unwrap(), y2.clone()]).unwrap();
        // Brute-force expansion oracle: (y1 + u) * y2.
        let expected = y1.add(&u).unwrap().mul(&y2).unwrap();
        assert_eq!(e2, expected);
    }

    #[test]
    fn coefficient_reduction() {
        let f3 = CoefficientRing::prime_field(3).unwrap();
        let y1 = var(z(), Variable::y(1, 1));
        let y2 = var(z(), Variable::y(1, 2));
        let p = y1.scale_i64(3).add(&y2).unwrap();
        let reduced = p.reduce_coefficients(f3).unwrap();
        assert_eq!(reduced, Polynomial::variable(f3, Variable::y(1, 2)));

        let q = y1.scale_i64(4).reduce_coefficients(f3).unwrap();
        assert_eq!(q, Polynomial::variable(f3, Variable::y(1, 1)));

        let r = y1.pow(2).reduce_coefficients(CoefficientRing::Rationals).unwrap();
        assert_eq!(
            r,
            Polynomial::variable(CoefficientRing::Rationals, Variable::y(1, 1)).pow(2)
        );
    }

    #[test]
    fn newton_identities_recover_power_sums() {
        // p_k from elementary symmetrics matches direct expansion for n <= 4.
        for n in 1..=4u32 {
            let ys: Vec<Polynomial> = (1..=n).map(|k| var(z(), Variable::y(1, k))).collect();
            let e: Vec<Polynomial> = (0..=n as usize)
                .map(|k| elementary_symmetric(z(), k, &ys).unwrap())
                .collect();
            let mut p: Vec<Polynomial> = vec![Polynomial::zero(z()); n as usize + 1];
            for k in 1..=n as usize {
                // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
                let mut acc = Polynomial::zero(z());
                for i in 1..k {
                    let sign = if (i - 1) % 2 == 0 { 1 } else { -1 };
                    acc = acc
                        .add(&e[i].mul(&p[k - i]).unwrap().scale_i64(sign))
                        .unwrap();
                }
                let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
                acc = acc.add(&e[k].scale_i64(sign * k as i64)).unwrap();
                p[k] = acc;
                let direct = ys
                    .iter()
                    .map(|y| y.pow(k as u32))
                    .reduce(|a, b| a.add(&b).unwrap())
                    .unwrap();
                assert_eq!(p[k], direct, "power sum p_{k} in {n} variables");
            }
        }
    }
}
