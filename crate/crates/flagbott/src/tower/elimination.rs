use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::groebner::{buchberger_with_budget, Budget, MonomialOrder};
use crate::poly::{Coeff, CoefficientRing, Monomial, Polynomial, Variable};

use super::presentation::{Generator, Presentation};

/// Result of eliminating generators: the reduced presentation and the
/// solved substitutions, one per linearly eliminated generator, recorded
/// in elimination order as (generator, expression in the survivors).
#[derive(Debug, Clone)]
pub struct Elimination {
    pub presentation: Presentation,
    pub steps: Vec<(Generator, Polynomial)>,
}

/// Remove the given variables from a presentation. A generator is targeted
/// when its variable is listed or when its defining value involves a listed
/// ambient coordinate. Generators that occur linearly in a relation are
/// solved and substituted away; leftover targets fall back to a Groebner
/// elimination order over field coefficients. The Hilbert series is
/// checked to be unchanged.
pub fn derive_elimination(p: &Presentation, eliminate: &[Variable]) -> Result<Elimination> {
    derive_elimination_with(p, eliminate, Budget::default())
}

pub fn derive_elimination_with(
    p: &Presentation,
    eliminate: &[Variable],
    budget: Budget,
) -> Result<Elimination> {
    let requested: BTreeSet<Variable> = eliminate.iter().copied().collect();
    let mut targets: BTreeSet<Variable> = p
        .generators
        .iter()
        .filter(|g| {
            requested.contains(&g.var)
                || g.value
                    .as_ref()
                    .map(|v| v.variables().iter().any(|x| requested.contains(x)))
                    .unwrap_or(false)
        })
        .map(|g| g.var)
        .collect();

    let before = p.hilbert_series_with(MonomialOrder::Grevlex, budget)?;

    let mut generators = p.generators.clone();
    let mut relations = p.relations.clone();
    let mut steps: Vec<(Generator, Polynomial)> = Vec::new();

    // Linear pass: solve relations of the shape a*v + rest with invertible
    // a and v absent from rest.
    'outer: loop {
        for (ri, rel) in relations.iter().enumerate() {
            let mut candidates: Vec<(Variable, Coeff)> = Vec::new();
            for v in rel.variables() {
                if !targets.contains(&v) {
                    continue;
                }
                let linear_monomial = Monomial::variable(v);
                let Some(coeff) = rel.coefficient(&linear_monomial) else {
                    continue;
                };
                let appears_elsewhere = rel
                    .terms()
                    .any(|(m, _)| m.exponent(&v) > 0 && *m != linear_monomial);
                if appears_elsewhere {
                    continue;
                }
                let invertible = match coeff {
                    Coeff::Int(n) => {
                        n == &num_bigint::BigInt::from(1) || n == &num_bigint::BigInt::from(-1)
                    }
                    _ => !coeff.is_zero(),
                };
                if invertible {
                    candidates.push((v, coeff.clone()));
                }
            }
            if let Some((v, coeff)) = candidates.into_iter().next() {
                // expr = -(rel - coeff * v) / coeff
                let ring = p.ring;
                let v_term = Polynomial::from_terms(ring, [(Monomial::variable(v), coeff.clone())]);
                let rest = rel.sub(&v_term)?;
                let inv = match &coeff {
                    Coeff::Int(n) => Coeff::from_i64(ring, if n.sign() == num_bigint::Sign::Minus { -1 } else { 1 }),
                    c => c.inv(ring).expect("nonzero over a field"),
                };
                let expr = rest.neg().scale(&inv);
                let gen = generators
                    .iter()
                    .find(|g| g.var == v)
                    .expect("target is a generator")
                    .clone();
                steps.push((gen, expr.clone()));
                let map: BTreeMap<Variable, Polynomial> = [(v, expr)].into();
                relations = relations
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != ri)
                    .map(|(_, r)| r.substitute_general(&map))
                    .collect::<Result<Vec<_>>>()?;
                relations.retain(|r| !r.is_zero());
                generators.retain(|g| g.var != v);
                targets.remove(&v);
                continue 'outer;
            }
        }
        break;
    }

    // Groebner fallback for anything the linear pass could not reach.
    if !targets.is_empty() {
        if p.ring == CoefficientRing::Integers {
            return Err(Error::EliminationFailed(format!(
                "variables {:?} do not occur linearly and Groebner elimination needs \
                 field coefficients",
                targets.iter().map(|v| v.render()).collect::<Vec<_>>()
            )));
        }
        let order = MonomialOrder::Elimination(targets.clone());
        let basis = buchberger_with_budget(&relations, order, budget)?;
        relations = basis
            .elements()
            .iter()
            .filter(|g| g.variables().iter().all(|v| !targets.contains(v)))
            .map(|g| g.normalize_sign())
            .collect();
        generators.retain(|g| !targets.contains(&g.var));
    }

    let result = Presentation::new(
        p.ring,
        generators,
        relations,
        format!("{} (eliminated)", p.label),
    )?;
    let after = result.hilbert_series_with(MonomialOrder::Grevlex, budget)?;
    if !before.series_eq(&after) {
        return Err(Error::EliminationFailed(format!(
            "elimination changed the Hilbert series from {} to {}",
            before.render(),
            after.render()
        )));
    }
    Ok(Elimination { presentation: result, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::GroupSpec;
    use crate::tower::builders::equivariant_presentation;
    use crate::tower::model::{Stage, TowerSpec};

    fn z() -> CoefficientRing {
        CoefficientRing::Integers
    }

    #[test]
    fn su2_reduces_to_two_variables() {
        let spec = TowerSpec::new(
            vec![Stage::torus(GroupSpec::SU(2))],
            BTreeMap::new(),
            z(),
        )
        .unwrap();
        let p = equivariant_presentation(&spec).unwrap();
        assert_eq!(p.relations.len(), 3);
        let elim = derive_elimination(&p, &[Variable::y(1, 2), Variable::u(1, 2)]).unwrap();
        let q = &elim.presentation;
        let gens: Vec<String> = q.generators.iter().map(|g| g.var.render()).collect();
        assert_eq!(gens, ["u[1,1]", "y[1,1]"]);
        assert_eq!(q.relations.len(), 1);
        assert_eq!(q.relations[0].to_string(), "u[1,1]^2 - y[1,1]^2");
        assert_eq!(elim.steps.len(), 2);
        // Hilbert series is (1 + t^2)/(1 - t^2).
        let hs = q.hilbert_series().unwrap();
        let expected = crate::groebner::GradedSeries::rational(vec![1, 1], &[1]);
        assert!(hs.series_eq(&expected));
    }

    #[test]
    fn eliminating_nothing_is_the_identity() {
        let spec = TowerSpec::new(
            vec![Stage::torus(GroupSpec::U(2))],
            BTreeMap::new(),
            z(),
        )
        .unwrap();
        let p = equivariant_presentation(&spec).unwrap();
        let elim = derive_elimination(&p, &[]).unwrap();
        assert_eq!(elim.presentation.generators, p.generators);
        assert_eq!(elim.presentation.relations, p.relations);
        assert!(elim.steps.is_empty());
    }

    #[test]
    fn nonlinear_over_z_is_an_error() {
        let y = Variable::y(1, 1);
        let gens = vec![Generator::ambient(y)];
        let rels = vec![Polynomial::variable(z(), y).pow(2)];
        let p = Presentation::new(z(), gens, rels, "t").unwrap();
        assert!(matches!(
            derive_elimination(&p, &[y]),
            Err(Error::EliminationFailed(_))
        ));
    }

    #[test]
    fn hirzebruch_surface_shape() {
        // Two U(2) stages, connection [[1,0],[0,0]]: after eliminating the
        // second coordinates the ordinary ring is
        // Z[y11, y21]/<y11^2, y21^2 - y11 y21>, with Betti numbers 1,2,1.
        let spec = TowerSpec::new(
            vec![Stage::torus(GroupSpec::U(2)), Stage::torus(GroupSpec::U(2))],
            [((2usize, 1usize), vec![vec![1, 0], vec![0, 0]])].into(),
            z(),
        )
        .unwrap();
        let p = crate::tower::builders::ordinary_presentation(&spec).unwrap();
        let elim =
            derive_elimination(&p, &[Variable::y(1, 2), Variable::y(2, 2)]).unwrap();
        let q = &elim.presentation;
        assert_eq!(q.generators.len(), 2);
        assert_eq!(q.relations.len(), 2);
        let hs = q.hilbert_series().unwrap();
        assert_eq!(hs.polynomial_coeffs(), Some(vec![1, 2, 1]));
    }
}
