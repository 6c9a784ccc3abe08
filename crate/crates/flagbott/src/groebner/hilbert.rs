use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Variable};

use super::buchberger::{buchberger_with_budget, Budget};
use super::order::MonomialOrder;
use super::series::GradedSeries;

/// Graded ranks of the quotient of the weighted polynomial ring on `gens`
/// by homogeneous `relations`, as a generating function in t. Computed from
/// the leading-term ideal of a Groebner basis by staircase recursion.
pub fn hilbert_series(
    gens: &[(Variable, usize)],
    relations: &[Polynomial],
) -> Result<GradedSeries> {
    hilbert_series_with(gens, relations, MonomialOrder::Grevlex, Budget::default())
}

pub fn hilbert_series_with(
    gens: &[(Variable, usize)],
    relations: &[Polynomial],
    order: MonomialOrder,
    budget: Budget,
) -> Result<GradedSeries> {
    let degrees: BTreeMap<Variable, usize> = gens.iter().copied().collect();
    if degrees.len() != gens.len() {
        return Err(Error::Inconsistent("duplicate generator".to_string()));
    }
    for (v, d) in gens {
        if *d == 0 || *d % 2 != 0 {
            return Err(Error::Inconsistent(format!(
                "generator {v} must have positive even degree, got {d}"
            )));
        }
    }
    for rel in relations {
        if !rel.is_homogeneous_weighted(&degrees) {
            return Err(Error::Inconsistent(format!(
                "relation {rel} is not homogeneous in the given grading"
            )));
        }
        for v in rel.variables() {
            if !degrees.contains_key(&v) {
                return Err(Error::Inconsistent(format!(
                    "relation variable {v} is not among the generators"
                )));
            }
        }
    }

    let denom: Vec<usize> = gens.iter().map(|(_, d)| d / 2).collect();
    let nonzero: Vec<Polynomial> = relations.iter().filter(|p| !p.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(GradedSeries::rational(vec![1], &denom));
    }
    let gb = buchberger_with_budget(&nonzero, order, budget)?;
    let leads = minimalize(gb.leading_monomials());
    let numer = staircase_numerator(&leads, &degrees);
    Ok(GradedSeries::rational(numer, &denom))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn half_degree(m: &Monomial, degrees: &BTreeMap<Variable, usize>) -> usize {
    m.weighted_degree(degrees) / 2
}

/// Numerator of the Hilbert series of S/I for a monomial ideal I with the
/// given minimal generators, over the denominator prod (1 - s^{deg/2}).
/// Pivot recursion on the most frequent variable:
///   N(I) = N(I + <v>) + s^{deg v} * N(I : v).
fn staircase_numerator(gens: &[Monomial], degrees: &BTreeMap<Variable, usize>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens.iter().skip(i + 1).all(|b| a.coprime(b)));
    if pairwise_coprime {
        let mut out = vec![1i64];
        for m in gens {
            let d = half_degree(m, degrees);
            let mut factor = vec![0i64; d + 1];
            factor[0] = 1;
            factor[d] = -1;
            out = poly_mul(&out, &factor);
        }
        return out;
    }

    // Most frequent variable among the generators.
    let mut counts: BTreeMap<Variable, usize> = BTreeMap::new();
    for m in gens {
        for v in m.variables() {
            *counts.entry(*v).or_insert(0) += 1;
        }
    }
    let (&pivot, _) = counts
        .iter()
        .max_by_key(|(v, c)| (**c, std::cmp::Reverse(**v)))
        .expect("nonempty generator set");

    // I + <pivot>
    let mut plus: Vec<Monomial> = vec![Monomial::variable(pivot)];
    plus.extend(
        gens.iter()
            .filter(|m| m.exponent(&pivot) == 0)
            .cloned(),
    );
    let plus = minimalize(plus);

    // I : pivot
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            if m.exponent(&pivot) > 0 {
                m.div(&Monomial::variable(pivot)).unwrap()
            } else {
                m.clone()
            }
        })
        .collect();
    let colon = minimalize(colon);

    let mut out = staircase_numerator(&plus, degrees);
    let shifted = staircase_numerator(&colon, degrees);
    let d = degrees.get(&pivot).copied().unwrap_or(2) / 2;
    poly_add_shifted(&mut out, &shifted, d);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::CoefficientRing;

    fn q() -> CoefficientRing {
        CoefficientRing::Rationals
    }

    fn var(v: Variable) -> Polynomial {
        Polynomial::variable(q(), v)
    }

    #[test]
    fn truncated_polynomial_ring() {
        // Q[y]/<y^3> -> 1 + t^2 + t^4
        let y = Variable::y(1, 1);
        let s = hilbert_series(&[(y, 2)], &[var(y).pow(3)]).unwrap();
        assert_eq!(s.polynomial_coeffs(), Some(vec![1, 1, 1]));
    }

    #[test]
    fn point_from_symmetric_relations() {
        // Q[y1,y2]/<y1+y2, y1*y2> -> 1 + t^2
        let y1 = Variable::y(1, 1);
        let y2 = Variable::y(1, 2);
        let rels = vec![
            var(y1).add(&var(y2)).unwrap(),
            var(y1).mul(&var(y2)).unwrap(),
        ];
        let s = hilbert_series(&[(y1, 2), (y2, 2)], &rels).unwrap();
        assert_eq!(s.polynomial_coeffs(), Some(vec![1, 1]));
    }

    #[test]
    fn free_module_over_polynomial_base() {
        // Q[u,y]/<u^2 - y^2> -> (1 + t^2)/(1 - t^2)
        let u = Variable::u(1, 1);
        let y = Variable::y(1, 1);
        let rel = var(u).pow(2).sub(&var(y).pow(2)).unwrap();
        let s = hilbert_series(&[(u, 2), (y, 2)], &[rel]).unwrap();
        let expected = GradedSeries::rational(vec![1, 1], &[1]);
        assert!(s.series_eq(&expected));
        assert!(!s.is_polynomial());
    }

    #[test]
    fn no_relations_gives_free_series() {
        let u = Variable::u(1, 1);
        let s = hilbert_series(&[(u, 2)], &[]).unwrap();
        assert!(s.series_eq(&GradedSeries::rational(vec![1], &[1])));
    }

    #[test]
    fn weighted_generators() {
        // Q[a, b] with deg a = 2, deg b = 4 and relation a^2 = 0:
        // series (1 + t^2) / (1 - t^4).
        let a = Variable::c_staged(2, 1);
        let b = Variable::c_staged(2, 2);
        let s = hilbert_series(&[(a, 2), (b, 4)], &[var(a).pow(2)]).unwrap();
        let expected = GradedSeries::rational(vec![1, 1], &[2]);
        assert!(s.series_eq(&expected));
    }

    #[test]
    fn order_independence() {
        let y1 = Variable::y(1, 1);
        let y2 = Variable::y(1, 2);
        let u1 = Variable::u(1, 1);
        let rels = vec![
            var(y1).pow(2).sub(&var(u1).mul(&var(y2)).unwrap()).unwrap(),
            var(y2).pow(3),
        ];
        let gens = [(u1, 2), (y1, 2), (y2, 2)];
        let a = hilbert_series_with(&gens, &rels, MonomialOrder::Grevlex, Budget::default())
            .unwrap();
        let b =
            hilbert_series_with(&gens, &rels, MonomialOrder::Lex, Budget::default()).unwrap();
        assert!(a.series_eq(&b));
    }

    #[test]
    fn inhomogeneous_relations_are_rejected() {
        let y = Variable::y(1, 1);
        let rel = var(y).pow(2).add(&var(y)).unwrap();
        assert!(hilbert_series(&[(y, 2)], &[rel]).is_err());
    }

    #[test]
    fn unknown_variables_are_rejected() {
        let y = Variable::y(1, 1);
        let z = Variable::y(1, 2);
        assert!(hilbert_series(&[(y, 2)], &[var(z)]).is_err());
    }
}
