use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::poly::{Monomial, Variable};

/// Monomial orders for the Buchberger engine. All are total well-orders
/// compatible with multiplication over the global variable order
/// (u < c < x < y, within a family by ascending stage then index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic; the default and the canonical term
    /// order of the polynomial store.
    Grevlex,
    /// Lexicographic from the largest variable down.
    Lex,
    /// Block order eliminating the given variables: grevlex on the block,
    /// ties broken by grevlex on the remaining variables.
    Elimination(BTreeSet<Variable>),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a.cmp_grevlex(b),
            MonomialOrder::Lex => a.cmp_lex(b),
            MonomialOrder::Elimination(block) => {
                let ra = restrict(a, block, true);
                let rb = restrict(b, block, true);
                match ra.cmp_grevlex(&rb) {
                    Ordering::Equal => {
                        restrict(a, block, false).cmp_grevlex(&restrict(b, block, false))
                    }
                    ord => ord,
                }
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
            MonomialOrder::Elimination(_) => "elimination",
        }
    }
}

fn restrict(m: &Monomial, block: &BTreeSet<Variable>, inside: bool) -> Monomial {
    Monomial::from_pairs(
        m.iter()
            .filter(|(v, _)| block.contains(v) == inside)
            .map(|(v, e)| (*v, *e)),
    )
}
