use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{hilbert_series_with, Budget, GradedSeries, MonomialOrder};
use crate::poly::{CoefficientRing, Family, Polynomial, Variable};

/// One ring generator of a presentation. Plain generators are ambient
/// degree-2 variables; derived generators stand for invariant polynomials
/// in the ambient fiber coordinates and carry their defining value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub var: Variable,
    pub degree: usize,
    pub value: Option<Polynomial>,
}

impl Generator {
    pub fn ambient(var: Variable) -> Generator {
        Generator { var, degree: 2, value: None }
    }

    pub fn weighted(var: Variable, degree: usize) -> Generator {
        Generator { var, degree, value: None }
    }

    pub fn derived(var: Variable, value: Polynomial) -> Generator {
        let degree = value.degree();
        Generator { var, degree, value: Some(value) }
    }
}

/// A graded commutative ring given by named generators with degrees and a
/// finite list of homogeneous relations, plus the coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub ring: CoefficientRing,
    pub generators: Vec<Generator>,
    pub relations: Vec<Polynomial>,
    pub label: String,
}

impl Presentation {
    pub fn new(
        ring: CoefficientRing,
        generators: Vec<Generator>,
        relations: Vec<Polynomial>,
        label: impl Into<String>,
    ) -> Result<Presentation> {
        let p = Presentation { ring, generators, relations, label: label.into() };
        p.validate()?;
        Ok(p)
    }

    pub fn empty(ring: CoefficientRing, label: impl Into<String>) -> Presentation {
        Presentation { ring, generators: Vec::new(), relations: Vec::new(), label: label.into() }
    }

    fn validate(&self) -> Result<()> {
        let degrees = self.degree_map();
        if degrees.len() != self.generators.len() {
            return Err(Error::Inconsistent("duplicate generator variable".to_string()));
        }
        for rel in &self.relations {
            if rel.ring() != self.ring {
                return Err(Error::RingMismatch(self.ring.tag(), rel.ring().tag()));
            }
            for v in rel.variables() {
                if !degrees.contains_key(&v) {
                    return Err(Error::Inconsistent(format!(
                        "relation variable {v} is not a generator"
                    )));
                }
            }
            if !rel.is_homogeneous_weighted(&degrees) {
                return Err(Error::Inconsistent(format!(
                    "relation {rel} is not homogeneous"
                )));
            }
        }
        Ok(())
    }

    pub fn degree_map(&self) -> BTreeMap<Variable, usize> {
        self.generators.iter().map(|g| (g.var, g.degree)).collect()
    }

    pub fn generator_pairs(&self) -> Vec<(Variable, usize)> {
        self.generators.iter().map(|g| (g.var, g.degree)).collect()
    }

    pub fn generator(&self, var: &Variable) -> Option<&Generator> {
        self.generators.iter().find(|g| g.var == *var)
    }

    pub fn max_stage(&self) -> u32 {
        self.generators
            .iter()
            .flat_map(|g| {
                let mut stages = vec![g.var.stage];
                if let Some(value) = &g.value {
                    stages.extend(value.variables().iter().map(|v| v.stage));
                }
                stages
            })
            .max()
            .unwrap_or(0)
    }

    /// Relations with derived generators expanded to their defining
    /// polynomials in the ambient coordinates; this is the display form.
    pub fn expanded_relations(&self) -> Vec<Polynomial> {
        let map: BTreeMap<Variable, Polynomial> = self
            .generators
            .iter()
            .filter_map(|g| g.value.clone().map(|v| (g.var, v)))
            .collect();
        self.relations
            .iter()
            .map(|r| {
                r.substitute_general(&map)
                    .expect("expansion stays in one ring")
            })
            .collect()
    }

    /// Hilbert series of the quotient. Presentations over Z are evaluated
    /// over Q; the even-cell freeness of the spaces involved makes the
    /// rational ranks faithful.
    pub fn hilbert_series(&self) -> Result<GradedSeries> {
        self.hilbert_series_with(MonomialOrder::Grevlex, Budget::default())
    }

    pub fn hilbert_series_with(
        &self,
        order: MonomialOrder,
        budget: Budget,
    ) -> Result<GradedSeries> {
        let (gens, relations) = self.field_model()?;
        hilbert_series_with(&gens, &relations, order, budget)
    }

    /// Generators and relations over a field: identity for field rings,
    /// a lift to Q for integer presentations.
    pub fn field_model(&self) -> Result<(Vec<(Variable, usize)>, Vec<Polynomial>)> {
        let gens = self.generator_pairs();
        let relations = if self.ring == CoefficientRing::Integers {
            self.relations.iter().map(|r| r.to_rationals()).collect()
        } else {
            self.relations.clone()
        };
        Ok((gens, relations))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("presentation: {}\n", self.label));
        out.push_str(&format!("ring: {}\n", self.ring.tag()));
        out.push_str("generators:\n");
        if self.generators.is_empty() {
            out.push_str("  (none)\n");
        }
        for g in &self.generators {
            match &g.value {
                None => out.push_str(&format!("  {}  (degree {})\n", g.var, g.degree)),
                Some(v) => {
                    out.push_str(&format!("  {} = {}  (degree {})\n", g.var, v, g.degree))
                }
            }
        }
        out.push_str("relations:\n");
        let expanded = self.expanded_relations();
        if expanded.is_empty() {
            out.push_str("  (none)\n");
        }
        for rel in &expanded {
            out.push_str(&format!("  {rel}\n"));
        }
        out
    }

    /// Fresh stage tag for derived generator variables that must not
    /// collide with existing c-family generators.
    pub fn free_c_stage(&self, desired: u32) -> u32 {
        let used: std::collections::BTreeSet<u32> = self
            .generators
            .iter()
            .filter(|g| g.var.family == Family::C)
            .map(|g| g.var.stage)
            .collect();
        let mut stage = desired;
        while used.contains(&stage) {
            stage += 1;
        }
        stage
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}
