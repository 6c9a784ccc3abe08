use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poly::{Coeff, CoefficientRing, Monomial, Polynomial};

use super::order::MonomialOrder;

/// Work limits for the Buchberger loop. Exceeding a limit is a reported
/// error, never a silent truncation.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    /// Maximum number of S-polynomial reductions.
    pub max_pairs: usize,
    /// Optional cap on the topological degree of new basis elements.
    pub max_degree: Option<usize>,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget { max_pairs: 1_000_000, max_degree: None }
    }
}

/// A reduced Groebner basis over a field: monic leading terms, no leading
/// term divides any monomial of another element.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    ring: CoefficientRing,
    elements: Vec<Polynomial>,
}

pub(crate) fn leading_term<'a>(
    p: &'a Polynomial,
    order: &MonomialOrder,
) -> Option<(&'a Monomial, &'a Coeff)> {
    match order {
        // The term map is already sorted by grevlex.
        MonomialOrder::Grevlex => p.terms().next_back(),
        _ => p.terms().max_by(|(a, _), (b, _)| order.cmp(a, b)),
    }
}

fn make_monic(p: &Polynomial, order: &MonomialOrder) -> Polynomial {
    match leading_term(p, order) {
        None => p.clone(),
        Some((_, c)) => {
            let inv = c.inv(p.ring()).expect("field coefficient");
            p.scale(&inv)
        }
    }
}

/// Full reduction of `p` modulo `basis`: no monomial of the result is
/// divisible by any basis leading term.
fn reduce_full(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let ring = p.ring();
    let mut work = p.clone();
    let mut result = Polynomial::zero(ring);
    let leads: Vec<(Monomial, Coeff)> = basis
        .iter()
        .map(|g| {
            let (m, c) = leading_term(g, order).expect("nonzero basis element");
            (m.clone(), c.clone())
        })
        .collect();
    while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = leading_term(&work, order).unwrap();
            (m.clone(), c.clone())
        };
        let mut reduced = false;
        for (g, (gm, gc)) in basis.iter().zip(&leads) {
            if gm.divides(&lm) {
                let t = lm.div(gm).unwrap();
                let c = lc.div(gc, ring).expect("field coefficient");
                work = work
                    .sub(&g.mul_term(&t, &c))
                    .expect("same ring");
                reduced = true;
                break;
            }
        }
        if !reduced {
            // Move the irreducible leading term over to the result.
            result.add_term(lm.clone(), lc.clone());
            work = work
                .sub(&Polynomial::from_terms(ring, [(lm, lc)]))
                .expect("same ring");
        }
    }
    result
}

fn s_polynomial(
    f: &Polynomial,
    g: &Polynomial,
    order: &MonomialOrder,
) -> Polynomial {
    let (fm, fc) = leading_term(f, order).unwrap();
    let (gm, gc) = leading_term(g, order).unwrap();
    let lcm = fm.lcm(gm);
    let tf = lcm.div(fm).unwrap();
    let tg = lcm.div(gm).unwrap();
    let a = f.mul_term(&tf, &gc.clone());
    let b = g.mul_term(&tg, &fc.clone());
    a.sub(&b).expect("same ring")
}

/// Buchberger's algorithm with the normal selection strategy (lowest lcm
/// degree first) and the product and chain criteria. Deterministic for a
/// fixed order and input ordering.
pub fn buchberger_with_budget(
    relations: &[Polynomial],
    order: MonomialOrder,
    budget: Budget,
) -> Result<GroebnerBasis> {
    let ring = relations
        .iter()
        .map(|p| p.ring())
        .next()
        .unwrap_or(CoefficientRing::Rationals);
    if !ring.is_field() {
        return Err(Error::NotAField(ring.tag()));
    }
    for p in relations {
        if p.ring() != ring {
            return Err(Error::RingMismatch(ring.tag(), p.ring().tag()));
        }
    }

    let mut basis: Vec<Polynomial> = Vec::new();
    for p in relations {
        if !p.is_zero() {
            basis.push(make_monic(p, &order));
        }
    }

    // Pair queue ordered by (lcm exponent degree, i, j).
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let lcm_deg = |basis: &[Polynomial], i: usize, j: usize| -> u32 {
        let (mi, _) = leading_term(&basis[i], &order).unwrap();
        let (mj, _) = leading_term(&basis[j], &order).unwrap();
        mi.lcm(mj).exponent_degree()
    };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            queue.insert((lcm_deg(&basis, i, j), i, j));
        }
    }

    let mut reductions = 0usize;
    while let Some(&(d, i, j)) = queue.iter().next() {
        queue.remove(&(d, i, j));
        done.insert((i, j));

        let (mi, _) = leading_term(&basis[i], &order).unwrap();
        let (mj, _) = leading_term(&basis[j], &order).unwrap();
        // Product criterion: coprime leading terms reduce to zero.
        if mi.coprime(mj) {
            continue;
        }
        // Chain criterion: skip when some other lead divides the lcm and
        // both sub-pairs were already treated.
        let lcm = mi.lcm(mj);
        let mut chained = false;
        for k in 0..basis.len() {
            if k == i || k == j {
                continue;
            }
            let (mk, _) = leading_term(&basis[k], &order).unwrap();
            if mk.divides(&lcm)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
            {
                chained = true;
                break;
            }
        }
        if chained {
            continue;
        }

        reductions += 1;
        if reductions > budget.max_pairs {
            return Err(Error::BudgetExceeded(format!(
                "S-pair limit {} reached",
                budget.max_pairs
            )));
        }
        let s = s_polynomial(&basis[i], &basis[j], &order);
        let h = reduce_full(&s, &basis, &order);
        if h.is_zero() {
            continue;
        }
        if let Some(cap) = budget.max_degree {
            if h.degree() > cap {
                return Err(Error::BudgetExceeded(format!(
                    "degree cap {cap} exceeded by an element of degree {}",
                    h.degree()
                )));
            }
        }
        let h = make_monic(&h, &order);
        let new = basis.len();
        basis.push(h);
        for k in 0..new {
            queue.insert((lcm_deg(&basis, k, new), k, new));
        }
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (mi, _) = leading_term(&basis[i], &order).unwrap();
        let mi = mi.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (mj, _) = leading_term(&basis[j], &order).unwrap();
            if mj.divides(&mi) && (mj != &mi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect();

    // Interreduce tails.
    let mut reduced: Vec<Polynomial> = minimal.clone();
    loop {
        let mut changed = false;
        for i in 0..reduced.len() {
            let others: Vec<Polynomial> = reduced
                .iter()
                .enumerate()
                .filter_map(|(j, p)| (j != i).then(|| p.clone()))
                .collect();
            let nf = make_monic(&reduce_full(&reduced[i], &others, &order), &order);
            if nf != reduced[i] {
                reduced[i] = nf;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    reduced.retain(|p| !p.is_zero());
    reduced.sort_by(|a, b| {
        let (ma, _) = leading_term(a, &order).unwrap();
        let (mb, _) = leading_term(b, &order).unwrap();
        order.cmp(ma, mb)
    });

    Ok(GroebnerBasis { order, ring, elements: reduced })
}

/// Buchberger with the default budget.
pub fn buchberger(relations: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with_budget(relations, order, Budget::default())
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// Remainder of `p` with no monomial divisible by any leading term;
    /// `p - normal_form(p)` lies in the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        reduce_full(p, &self.elements, &self.order)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|p| leading_term(p, &self.order).unwrap().0.clone())
            .collect()
    }

    /// Buchberger criterion: every S-polynomial of basis pairs reduces to 0.
    pub fn verify(&self) -> bool {
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                let s = s_polynomial(&self.elements[i], &self.elements[j], &self.order);
                if !self.normal_form(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Two generator lists cut out the same ideal iff each generator of each
/// side reduces to zero modulo the other side's basis.
pub fn ideal_equal_with_budget(
    a: &[Polynomial],
    b: &[Polynomial],
    budget: Budget,
) -> Result<bool> {
    let ga = buchberger_with_budget(a, MonomialOrder::Grevlex, budget)?;
    let gb = buchberger_with_budget(b, MonomialOrder::Grevlex, budget)?;
    Ok(a.iter().all(|p| gb.contains(p)) && b.iter().all(|p| ga.contains(p)))
}

pub fn ideal_equal(a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
    ideal_equal_with_budget(a, b, Budget::default())
}
