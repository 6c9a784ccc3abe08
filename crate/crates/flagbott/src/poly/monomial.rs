use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::variable::Variable;

/// A monomial in the ambient degree-2 generators: a finite exponent map
/// with no explicit zeros. Topological degree is twice the exponent sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exponents: BTreeMap<Variable, u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn variable(v: Variable) -> Monomial {
        let mut exponents = BTreeMap::new();
        exponents.insert(v, 1);
        Monomial { exponents }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Variable, u32)>) -> Monomial {
        let mut exponents = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *exponents.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exponents }
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponent(&self, v: &Variable) -> u32 {
        self.exponents.get(v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Variable, &u32)> {
        self.exponents.iter()
    }

    pub fn variables(&self) -> impl Iterator<Item = &Variable> {
        self.exponents.keys()
    }

    /// Exponent sum; the topological degree is twice this.
    pub fn exponent_degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    /// Topological degree with every variable in degree 2.
    pub fn degree(&self) -> usize {
        2 * self.exponent_degree() as usize
    }

    /// Topological degree under an explicit grading of the variables.
    pub fn weighted_degree(&self, degrees: &BTreeMap<Variable, usize>) -> usize {
        self.exponents
            .iter()
            .map(|(v, e)| degrees.get(v).copied().unwrap_or(2) * *e as usize)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (v, e) in &other.exponents {
            *exponents.entry(*v).or_insert(0) += e;
        }
        Monomial { exponents }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (v, e) in &other.exponents {
            let entry = exponents.entry(*v).or_insert(0);
            *entry = (*entry).max(*e);
        }
        Monomial { exponents }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .all(|(v, e)| other.exponent(v) >= *e)
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exponents = self.exponents.clone();
        for (v, e) in &other.exponents {
            let entry = exponents.get_mut(v).expect("divisor variable present");
            *entry -= e;
            if *entry == 0 {
                exponents.remove(v);
            }
        }
        Some(Monomial { exponents })
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exponents
            .keys()
            .all(|v| !other.exponents.contains_key(v))
    }

    /// Graded reverse lexicographic comparison over the global variable
    /// order: compare exponent sums first; on ties the monomial with the
    /// smaller exponent at the least differing variable is the larger one.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        match self.exponent_degree().cmp(&other.exponent_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a = self.exponents.iter();
        let mut b = other.exponents.iter();
        let mut ax = a.next();
        let mut bx = b.next();
        loop {
            match (ax, bx) {
                (None, None) => return Ordering::Equal,
                // `self` has no more small variables: at the least variable
                // remaining in `other`, self has exponent 0, hence is larger.
                (None, Some(_)) => return Ordering::Greater,
                (Some(_), None) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => {
                        // `self` carries a positive exponent at a variable
                        // smaller than anything left in `other`.
                        let _ = ea;
                        return Ordering::Less;
                    }
                    Ordering::Greater => {
                        let _ = eb;
                        return Ordering::Greater;
                    }
                    Ordering::Equal => {
                        match ea.cmp(eb) {
                            Ordering::Equal => {
                                ax = a.next();
                                bx = b.next();
                            }
                            // Smaller exponent at the least differing
                            // variable wins.
                            Ordering::Less => return Ordering::Greater,
                            Ordering::Greater => return Ordering::Less,
                        }
                    }
                },
            }
        }
    }

    /// Lexicographic comparison scanning from the largest variable down.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        let mut a = self.exponents.iter().rev();
        let mut b = other.exponents.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    },
                },
            }
        }
    }

    /// Comparison used when rendering: descending exponent degree, ties
    /// broken lexicographically along the print order (x, then Chern
    /// symbols, then u, then y, stages and indices ascending).
    pub fn cmp_print(&self, other: &Monomial) -> Ordering {
        match self.exponent_degree().cmp(&other.exponent_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a: Vec<(&Variable, &u32)> = self.exponents.iter().collect();
        let mut b: Vec<(&Variable, &u32)> = other.exponents.iter().collect();
        let by_print = |x: &(&Variable, &u32), y: &(&Variable, &u32)| Variable::cmp_print(y.0, x.0);
        a.sort_by(by_print);
        b.sort_by(by_print);
        let mut a = a.into_iter();
        let mut b = b.into_iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((va, ea)), Some((vb, eb))) => match Variable::cmp_print(va, vb) {
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Less => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    },
                },
            }
        }
    }

    /// Rendered with variables in print order, `^` for powers and
    /// explicit `*` between factors. The empty monomial renders as `1`.
    pub fn render(&self) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut vars: Vec<(&Variable, &u32)> = self.exponents.iter().collect();
        vars.sort_by(|x, y| Variable::cmp_print(y.0, x.0));
        vars.iter()
            .map(|(v, e)| {
                if **e == 1 {
                    v.render()
                } else {
                    format!("{}^{}", v.render(), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.cmp_grevlex(other)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
