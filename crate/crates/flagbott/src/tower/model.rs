use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{Coeff, CoefficientRing, Polynomial, Variable};
use crate::rootdata::{centralizer_weyl, check_admissible, CentralizerSpec, GroupSpec};

/// One stage of a tower: a compact group and the centralizer of a circle
/// in its maximal torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    pub group: GroupSpec,
    pub centralizer: CentralizerSpec,
}

impl Stage {
    pub fn new(group: GroupSpec, cocharacter: Vec<i64>) -> Result<Stage> {
        Ok(Stage { group, centralizer: CentralizerSpec::new(group, cocharacter)? })
    }

    pub fn torus(group: GroupSpec) -> Stage {
        Stage { group, centralizer: CentralizerSpec::torus(group) }
    }
}

/// Declarative description of an m-stage tower: per-stage group and
/// centralizer, connecting integer matrices, and the coefficient ring.
///
/// The connecting matrix A(l,j), for 1 <= j < l <= m, has
/// rank(T_l) x rank(T_j) integer entries; omitted matrices are zero. For an
/// SU source stage the columns address the first rank(T_j) lattice
/// coordinates; for an SU target stage the image of the last coordinate is
/// the negated column sum, which keeps the lattice relation e_1 = 0 intact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerSpec {
    pub stages: Vec<Stage>,
    pub connections: BTreeMap<(usize, usize), Vec<Vec<i64>>>,
    pub ring: CoefficientRing,
}

impl TowerSpec {
    pub fn new(
        stages: Vec<Stage>,
        connections: BTreeMap<(usize, usize), Vec<Vec<i64>>>,
        ring: CoefficientRing,
    ) -> Result<TowerSpec> {
        let m = stages.len();
        for ((ell, j), matrix) in &connections {
            if !(1 <= *j && j < ell && *ell <= m) {
                return Err(Error::InvalidTower(format!(
                    "connection ({ell},{j}) is out of range for {m} stages"
                )));
            }
            let rows = stages[ell - 1].group.rank();
            let cols = stages[j - 1].group.rank();
            if matrix.len() != rows || matrix.iter().any(|r| r.len() != cols) {
                return Err(Error::InvalidTower(format!(
                    "connection ({ell},{j}) must be {rows} x {cols} for {} over {}",
                    stages[ell - 1].group,
                    stages[j - 1].group
                )));
            }
        }
        let groups: Vec<GroupSpec> = stages.iter().map(|s| s.group).collect();
        check_admissible(&groups, ring)?;
        Ok(TowerSpec { stages, connections, ring })
    }

    pub fn m(&self) -> usize {
        self.stages.len()
    }

    pub fn groups(&self) -> Vec<GroupSpec> {
        self.stages.iter().map(|s| s.group).collect()
    }

    /// Total dimension of the acting torus, summing true torus ranks.
    pub fn total_rank(&self) -> usize {
        self.stages.iter().map(|s| s.group.rank()).sum()
    }

    /// The connecting matrix for stage `ell` over stage `j`, zero-filled
    /// when absent.
    pub fn connection(&self, ell: usize, j: usize) -> Vec<Vec<i64>> {
        let rows = self.stages[ell - 1].group.rank();
        let cols = self.stages[j - 1].group.rank();
        self.connections
            .get(&(ell, j))
            .cloned()
            .unwrap_or_else(|| vec![vec![0; cols]; rows])
    }
}

/// The per-stage linear forms substituted for the fiber coordinates:
/// y[l,k] maps to u[l,k] (when the acting torus is kept) plus the
/// connection contributions from lower stages.
#[derive(Debug, Clone)]
pub struct SubstitutionMap {
    /// images[l-1][k-1] is the image of y[l,k].
    pub images: Vec<Vec<Polynomial>>,
}

impl SubstitutionMap {
    pub fn stage_map(&self, ell: usize) -> BTreeMap<Variable, Polynomial> {
        self.images[ell - 1]
            .iter()
            .enumerate()
            .map(|(k, p)| (Variable::y(ell as u32, k as u32 + 1), p.clone()))
            .collect()
    }
}

/// Build the substitution map. Every form is checked to be invariant under
/// the source stage's W(Z), which is what makes the connection a
/// homomorphism out of Z rather than just out of the torus.
pub fn substitution_map(spec: &TowerSpec, include_u: bool) -> Result<SubstitutionMap> {
    let ring = spec.ring;
    let m = spec.m();
    let mut images: Vec<Vec<Polynomial>> = Vec::with_capacity(m);
    for ell in 1..=m {
        let group = spec.stages[ell - 1].group;
        let vars = group.var_count();
        let rank = group.rank();
        let mut stage_rows: Vec<Polynomial> = Vec::with_capacity(vars);
        for k in 0..vars {
            let mut image = if include_u {
                Polynomial::variable(ring, Variable::u(ell as u32, k as u32 + 1))
            } else {
                Polynomial::zero(ring)
            };
            for j in 1..ell {
                let source = spec.stages[j - 1].group;
                let matrix = spec.connection(ell, j);
                let cols = source.rank();
                let row: Vec<i64> = if k < rank {
                    matrix[k].clone()
                } else {
                    // SU target: negated column sums for the last coordinate.
                    (0..cols)
                        .map(|h| -(0..rank).map(|r| matrix[r][h]).sum::<i64>())
                        .collect()
                };
                for (h, entry) in row.iter().enumerate() {
                    if *entry != 0 {
                        let y = Polynomial::variable(ring, Variable::y(j as u32, h as u32 + 1));
                        image = image.add(&y.scale(&Coeff::from_i64(ring, *entry)))?;
                    }
                }
            }
            stage_rows.push(image);
        }
        images.push(stage_rows);
    }

    // Invariance of the forms under each source stage's W(Z).
    for j in 1..=m {
        let subgroup = centralizer_weyl(&spec.stages[j - 1].centralizer);
        if subgroup.is_trivial() {
            continue;
        }
        for ell in (j + 1)..=m {
            for (k, form) in images[ell - 1].iter().enumerate() {
                for w in &subgroup.generators {
                    if !crate::rootdata::is_fixed_by(form, w, j as u32) {
                        return Err(Error::InvalidTower(format!(
                            "connection ({ell},{j}) row {} is not invariant under the \
                             stage-{j} centralizer Weyl group",
                            k + 1
                        )));
                    }
                }
            }
        }
    }
    Ok(SubstitutionMap { images })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> CoefficientRing {
        CoefficientRing::Integers
    }

    #[test]
    fn dimension_validation() {
        let stages = vec![Stage::torus(GroupSpec::U(2)), Stage::torus(GroupSpec::U(2))];
        let mut conns = BTreeMap::new();
        conns.insert((2, 1), vec![vec![1, 0], vec![0, 0]]);
        assert!(TowerSpec::new(stages.clone(), conns, z()).is_ok());
        let mut bad = BTreeMap::new();
        bad.insert((2, 1), vec![vec![1, 0, 3], vec![0, 0, 1]]);
        assert!(matches!(
            TowerSpec::new(stages.clone(), bad, z()),
            Err(Error::InvalidTower(_))
        ));
        let mut out_of_range = BTreeMap::new();
        out_of_range.insert((3, 1), vec![vec![0, 0], vec![0, 0]]);
        assert!(TowerSpec::new(stages, out_of_range, z()).is_err());
    }

    #[test]
    fn admissibility_gate() {
        let stages = vec![Stage::torus(GroupSpec::G2)];
        assert!(matches!(
            TowerSpec::new(stages.clone(), BTreeMap::new(), z()),
            Err(Error::InadmissibleCoefficients { prime: 2, .. })
        ));
        assert!(TowerSpec::new(stages.clone(), BTreeMap::new(), CoefficientRing::Rationals).is_ok());
        assert!(TowerSpec::new(
            stages.clone(),
            BTreeMap::new(),
            CoefficientRing::prime_field(3).unwrap()
        )
        .is_ok());
        assert!(TowerSpec::new(
            stages,
            BTreeMap::new(),
            CoefficientRing::prime_field(2).unwrap()
        )
        .is_err());
    }

    #[test]
    fn su_substitution_extends_rows() {
        // Two SU(2) stages with the 1x1 connection [a]: the image of the
        // second coordinate is the negated image of the first.
        let stages = vec![Stage::torus(GroupSpec::SU(2)), Stage::torus(GroupSpec::SU(2))];
        let mut conns = BTreeMap::new();
        conns.insert((2, 1), vec![vec![3]]);
        let spec = TowerSpec::new(stages, conns, z()).unwrap();
        let sub = substitution_map(&spec, true).unwrap();
        let u21 = Polynomial::variable(z(), Variable::u(2, 1));
        let u22 = Polynomial::variable(z(), Variable::u(2, 2));
        let y11 = Polynomial::variable(z(), Variable::y(1, 1));
        assert_eq!(sub.images[1][0], u21.add(&y11.scale_i64(3)).unwrap());
        assert_eq!(sub.images[1][1], u22.add(&y11.scale_i64(-3)).unwrap());
    }

    #[test]
    fn connection_must_respect_source_invariance() {
        // Stage 1 = U(3) with the S_2 block on coordinates 2,3: a form
        // weighting those coordinates unequally is rejected.
        let stages = vec![
            Stage::new(GroupSpec::U(3), vec![1, 0, 0]).unwrap(),
            Stage::torus(GroupSpec::U(2)),
        ];
        let mut conns = BTreeMap::new();
        conns.insert((2, 1), vec![vec![0, 1, 0], vec![0, 0, 0]]);
        let spec = TowerSpec::new(stages.clone(), conns, z()).unwrap();
        assert!(matches!(
            substitution_map(&spec, true),
            Err(Error::InvalidTower(_))
        ));
        // Equal weights on the block are fine.
        let mut conns = BTreeMap::new();
        conns.insert((2, 1), vec![vec![2, 1, 1], vec![0, 0, 0]]);
        let spec = TowerSpec::new(stages, conns, z()).unwrap();
        assert!(substitution_map(&spec, true).is_ok());
    }
}
