use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::groebner::{buchberger_with_budget, Budget, GroebnerBasis, MonomialOrder};
use crate::poly::{CoefficientRing, Polynomial, Variable};

use super::presentation::Generator;

/// Rewrites polynomials into the generator variables of a presentation:
/// ambient coordinates absorbed into derived invariant generators are
/// eliminated through a tag-variable Groebner basis (the tag ideal
/// < value_i - var_i > under an elimination order).
pub struct Rewriter {
    ring: CoefficientRing,
    eliminated: BTreeSet<Variable>,
    basis: Option<GroebnerBasis>,
}

impl Rewriter {
    /// Build the rewriter from the derived generators in the list. With no
    /// derived generators rewriting is the identity.
    pub fn new(
        ring: CoefficientRing,
        generators: &[Generator],
        budget: Budget,
    ) -> Result<Rewriter> {
        let derived: Vec<&Generator> = generators.iter().filter(|g| g.value.is_some()).collect();
        if derived.is_empty() {
            return Ok(Rewriter { ring, eliminated: BTreeSet::new(), basis: None });
        }
        let mut eliminated: BTreeSet<Variable> = BTreeSet::new();
        for g in &derived {
            eliminated.extend(g.value.as_ref().unwrap().variables());
        }
        let work_ring = if ring == CoefficientRing::Integers {
            CoefficientRing::Rationals
        } else {
            ring
        };
        let tags: Vec<Polynomial> = derived
            .iter()
            .map(|g| {
                let value = g.value.as_ref().unwrap();
                let value = if ring == CoefficientRing::Integers {
                    value.to_rationals()
                } else {
                    value.clone()
                };
                value.sub(&Polynomial::variable(work_ring, g.var))
            })
            .collect::<Result<Vec<_>>>()?;
        let order = MonomialOrder::Elimination(eliminated.clone());
        let basis = buchberger_with_budget(&tags, order, budget)?;
        Ok(Rewriter { ring, eliminated, basis: Some(basis) })
    }

    /// Normal form of `p` in the generator variables. Errors if some
    /// eliminated coordinate survives, which would mean the input does not
    /// lie in the invariant subalgebra.
    pub fn rewrite(&self, p: &Polynomial) -> Result<Polynomial> {
        let Some(basis) = &self.basis else {
            return Ok(p.clone());
        };
        let lifted = if self.ring == CoefficientRing::Integers {
            p.to_rationals()
        } else {
            p.clone()
        };
        let nf = basis.normal_form(&lifted);
        if let Some(v) = nf.variables().iter().find(|v| self.eliminated.contains(v)) {
            return Err(Error::Inconsistent(format!(
                "rewriting left the block coordinate {v} in {nf}; the input is not \
                 invariant under the stage's centralizer Weyl group"
            )));
        }
        if self.ring == CoefficientRing::Integers {
            nf.try_into_integers().ok_or_else(|| {
                Error::Inconsistent(
                    "rewriting produced non-integral coefficients over Z".to_string(),
                )
            })
        } else {
            Ok(nf)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::elementary_symmetric;

    fn z() -> CoefficientRing {
        CoefficientRing::Integers
    }

    #[test]
    fn rewrites_symmetric_functions_into_block_generators() {
        // Block {y2, y3} with generators b = y2 + y3 and d = y2 y3;
        // e_2(y1,y2,y3) rewrites to d + y1 b.
        let ys: Vec<Polynomial> = (1..=3)
            .map(|k| Polynomial::variable(z(), Variable::y(1, k)))
            .collect();
        let b = Variable::c_staged(2, 1);
        let d = Variable::c_staged(2, 2);
        let gens = vec![
            Generator::ambient(Variable::y(1, 1)),
            Generator::derived(b, ys[1].add(&ys[2]).unwrap()),
            Generator::derived(d, ys[1].mul(&ys[2]).unwrap()),
        ];
        let rw = Rewriter::new(z(), &gens, Budget::default()).unwrap();
        let e2 = elementary_symmetric(z(), 2, &ys).unwrap();
        let got = rw.rewrite(&e2).unwrap();
        let expected = Polynomial::variable(z(), d)
            .add(&ys[0].mul(&Polynomial::variable(z(), b)).unwrap())
            .unwrap();
        assert_eq!(got, expected);

        let e3 = elementary_symmetric(z(), 3, &ys).unwrap();
        let got = rw.rewrite(&e3).unwrap();
        let expected = ys[0].mul(&Polynomial::variable(z(), d)).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn non_invariant_input_is_rejected() {
        let y2 = Polynomial::variable(z(), Variable::y(1, 2));
        let y3 = Polynomial::variable(z(), Variable::y(1, 3));
        let b = Variable::c_staged(2, 1);
        let gens = vec![Generator::derived(b, y2.add(&y3).unwrap())];
        let rw = Rewriter::new(z(), &gens, Budget::default()).unwrap();
        assert!(rw.rewrite(&y2).is_err());
    }

    #[test]
    fn identity_without_derived_generators() {
        let gens = vec![Generator::ambient(Variable::y(1, 1))];
        let rw = Rewriter::new(z(), &gens, Budget::default()).unwrap();
        let p = Polynomial::variable(z(), Variable::y(1, 1)).pow(5);
        assert_eq!(rw.rewrite(&p).unwrap(), p);
    }

    #[test]
    fn signed_block_rewriting() {
        // Twisted A_1 block: generators s = y1 - y2 and q = y1 y2 (up to
        // sign conventions); e_1 of the squares rewrites into them.
        let y1 = Polynomial::variable(z(), Variable::y(1, 1));
        let y2 = Polynomial::variable(z(), Variable::y(1, 2));
        let s = Variable::c_staged(2, 1);
        let q = Variable::c_staged(2, 2);
        let gens = vec![
            Generator::derived(s, y1.sub(&y2).unwrap()),
            Generator::derived(q, y1.mul(&y2).unwrap().neg()),
        ];
        let rw = Rewriter::new(z(), &gens, Budget::default()).unwrap();
        // y1^2 + y2^2 = s^2 - 2q ... with q = -y1 y2: s^2 + 2q would be
        // (y1-y2)^2 - 2 y1y2; verify by substituting back.
        let sum_sq = y1.pow(2).add(&y2.pow(2)).unwrap();
        let got = rw.rewrite(&sum_sq).unwrap();
        let mut back = std::collections::BTreeMap::new();
        back.insert(s, y1.sub(&y2).unwrap());
        back.insert(q, y1.mul(&y2).unwrap().neg());
        assert_eq!(got.substitute_general(&back).unwrap(), sum_sq);
    }
}
