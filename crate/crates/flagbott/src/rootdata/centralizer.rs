use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groebner::GradedSeries;

use super::group::GroupSpec;
use super::weyl::{
    close_under_multiplication, count_inversions, length_series, reflection_matrix, Mat,
    RootDatum,
};

/// A centralizer Z of a circle subgroup of the maximal torus, given by the
/// differential of the circle: an integer cocharacter vector in the lattice
/// coordinates of the group (SU cocharacters must sum to zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerSpec {
    pub group: GroupSpec,
    pub cocharacter: Vec<i64>,
}

impl CentralizerSpec {
    pub fn new(group: GroupSpec, cocharacter: Vec<i64>) -> Result<CentralizerSpec> {
        if cocharacter.len() != group.var_count() {
            return Err(Error::InvalidTower(format!(
                "cocharacter for {} needs {} entries, got {}",
                group,
                group.var_count(),
                cocharacter.len()
            )));
        }
        if group.is_su() && cocharacter.iter().sum::<i64>() != 0 {
            return Err(Error::InvalidTower(format!(
                "SU cocharacter entries must sum to zero, got {cocharacter:?}"
            )));
        }
        Ok(CentralizerSpec { group, cocharacter })
    }

    /// A regular cocharacter: the centralizer is the maximal torus itself.
    pub fn torus(group: GroupSpec) -> CentralizerSpec {
        let k = group.var_count();
        let cocharacter = match group {
            GroupSpec::SU(_) => (1..=k).map(|i| 2 * i as i64 - (k as i64 + 1)).collect(),
            GroupSpec::G2 => vec![1, 2],
            _ => (1..=k as i64).collect(),
        };
        CentralizerSpec { group, cocharacter }
    }
}

/// Irreducible pieces of a supported reflection subgroup. A type A block is
/// a symmetric group permuting the listed coordinates up to the recorded
/// signs; a type C block is a full signed permutation group on its
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockKind {
    TypeA,
    TypeC,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    /// 0-based coordinates with the sign character of the embedding.
    pub members: Vec<(usize, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorStructure {
    /// Disjoint type A / type C blocks; an empty list is the trivial group.
    Blocks(Vec<Block>),
    /// Reflection subgroups without a coordinate block decomposition
    /// (G2 centralizers beyond the torus).
    Unsupported(String),
}

/// The Weyl group W(Z) of a circle centralizer: the reflection subgroup
/// generated by reflections in the roots orthogonal to the cocharacter,
/// materialized as an explicit element list.
#[derive(Debug, Clone)]
pub struct ReflectionSubgroup {
    pub group: GroupSpec,
    pub cocharacter: Vec<i64>,
    pub generators: Vec<Mat>,
    pub elements: Vec<Mat>,
    /// Positive roots of the orthogonal subsystem.
    pub positive_roots: Vec<Vec<i64>>,
    pub factors: FactorStructure,
}

impl ReflectionSubgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Length generating function with respect to the subgroup's own
    /// positive system.
    pub fn poincare(&self) -> GradedSeries {
        length_series(&self.elements, &self.positive_roots)
    }
}

fn pairing(c: &[i64], alpha: &[i64]) -> i64 {
    c.iter().zip(alpha).map(|(a, b)| a * b).sum()
}

/// The reflection subgroup of W fixing the given circle: generated by the
/// reflections in roots orthogonal to the cocharacter.
pub fn centralizer_weyl(spec: &CentralizerSpec) -> ReflectionSubgroup {
    let rd = RootDatum::new(spec.group);
    let orthogonal: Vec<Vec<i64>> = rd
        .positive_roots()
        .iter()
        .filter(|alpha| pairing(&spec.cocharacter, alpha) == 0)
        .cloned()
        .collect();
    let generators: Vec<Mat> = orthogonal
        .iter()
        .map(|alpha| reflection_matrix(spec.group, alpha))
        .collect();
    let elements = close_under_multiplication(spec.group.var_count(), &generators);
    let factors = identify_factors(spec, &orthogonal);
    ReflectionSubgroup {
        group: spec.group,
        cocharacter: spec.cocharacter.clone(),
        generators,
        elements,
        positive_roots: orthogonal,
        factors,
    }
}

fn identify_factors(spec: &CentralizerSpec, orthogonal: &[Vec<i64>]) -> FactorStructure {
    let c = &spec.cocharacter;
    match spec.group {
        GroupSpec::U(_) | GroupSpec::SU(_) => {
            // Coordinates with equal cocharacter values form plain
            // symmetric blocks.
            let mut classes: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
            for (i, v) in c.iter().enumerate() {
                classes.entry(*v).or_default().push(i);
            }
            let mut blocks: Vec<Block> = classes
                .into_values()
                .filter(|coords| coords.len() >= 2)
                .map(|coords| Block {
                    kind: BlockKind::TypeA,
                    members: coords.into_iter().map(|i| (i, 1)).collect(),
                })
                .collect();
            blocks.sort_by_key(|b| b.members[0].0);
            FactorStructure::Blocks(blocks)
        }
        GroupSpec::Sp(_) => {
            // Zero coordinates form a type C block; nonzero coordinates
            // with equal absolute value form a type A block embedded with
            // the sign character.
            let mut blocks: Vec<Block> = Vec::new();
            let zeros: Vec<(usize, i64)> = c
                .iter()
                .enumerate()
                .filter(|(_, v)| **v == 0)
                .map(|(i, _)| (i, 1))
                .collect();
            if !zeros.is_empty() {
                blocks.push(Block { kind: BlockKind::TypeC, members: zeros });
            }
            let mut classes: BTreeMap<i64, Vec<(usize, i64)>> = BTreeMap::new();
            for (i, v) in c.iter().enumerate() {
                if *v != 0 {
                    classes.entry(v.abs()).or_default().push((i, v.signum()));
                }
            }
            for coords in classes.into_values() {
                if coords.len() >= 2 {
                    blocks.push(Block { kind: BlockKind::TypeA, members: coords });
                }
            }
            blocks.sort_by_key(|b| b.members[0].0);
            FactorStructure::Blocks(blocks)
        }
        GroupSpec::G2 => {
            if orthogonal.is_empty() {
                FactorStructure::Blocks(Vec::new())
            } else {
                FactorStructure::Unsupported(
                    "G2 circle centralizers beyond the maximal torus have no \
                     coordinate block structure"
                        .to_string(),
                )
            }
        }
    }
}

/// A dominant representative of the cocharacter under the Weyl action:
/// nonnegative pairing with every positive root. Centralizers of dominant
/// cocharacters are standard parabolic, which is what the coset-length
/// enumeration needs.
pub fn dominant_cocharacter(spec: &CentralizerSpec) -> Result<CentralizerSpec> {
    let rd = RootDatum::new(spec.group);
    let elements = rd.elements()?;
    for w in elements.iter() {
        let image = w.apply(&spec.cocharacter);
        if rd
            .positive_roots()
            .iter()
            .all(|alpha| pairing(&image, alpha) >= 0)
        {
            return Ok(CentralizerSpec { group: spec.group, cocharacter: image });
        }
    }
    Err(Error::Inconsistent(format!(
        "no dominant representative found for cocharacter {:?} of {}",
        spec.cocharacter, spec.group
    )))
}

/// Minimal coset length enumeration for W / W(Z), with W(Z) taken at a
/// dominant representative of the cocharacter.
pub fn coset_length_series(spec: &CentralizerSpec) -> Result<GradedSeries> {
    let dominant = dominant_cocharacter(spec)?;
    let rd = RootDatum::new(spec.group);
    let elements = rd.elements()?;
    let sub = centralizer_weyl(&dominant);
    let mut remaining: std::collections::BTreeSet<&Mat> = elements.iter().collect();
    let mut coeffs: Vec<i64> = Vec::new();
    while let Some(w) = remaining.iter().next().copied() {
        let w = w.clone();
        let mut min_len = usize::MAX;
        for z in &sub.elements {
            let member = w.mul(z);
            min_len = min_len.min(count_inversions(&member, rd.positive_roots()));
            remaining.remove(&member);
        }
        if coeffs.len() <= min_len {
            coeffs.resize(min_len + 1, 0);
        }
        coeffs[min_len] += 1;
    }
    Ok(GradedSeries::from_even_coeffs(&coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u3_projective_centralizer() {
        // Cocharacter (1,0,0): the orthogonal roots give the subgroup
        // generated by the swap of the 2nd and 3rd coordinates, order 2.
        let spec = CentralizerSpec::new(GroupSpec::U(3), vec![1, 0, 0]).unwrap();
        let sub = centralizer_weyl(&spec);
        assert_eq!(sub.order(), 2);
        assert_eq!(sub.generators.len(), 1);
        match &sub.factors {
            FactorStructure::Blocks(blocks) => {
                assert_eq!(blocks.len(), 1);
                assert_eq!(blocks[0].members, vec![(1, 1), (2, 1)]);
            }
            _ => panic!("expected blocks"),
        }
    }

    #[test]
    fn regular_cocharacter_gives_trivial_group() {
        let spec = CentralizerSpec::new(GroupSpec::U(3), vec![1, 2, 3]).unwrap();
        let sub = centralizer_weyl(&spec);
        assert!(sub.is_trivial());
        assert!(matches!(&sub.factors, FactorStructure::Blocks(b) if b.is_empty()));
        let g2 = CentralizerSpec::torus(GroupSpec::G2);
        assert!(centralizer_weyl(&g2).is_trivial());
    }

    #[test]
    fn two_by_two_blocks() {
        let spec = CentralizerSpec::new(GroupSpec::U(4), vec![1, 1, 2, 2]).unwrap();
        let sub = centralizer_weyl(&spec);
        assert_eq!(sub.order(), 4);
        match &sub.factors {
            FactorStructure::Blocks(blocks) => {
                assert_eq!(blocks.len(), 2);
                assert!(blocks.iter().all(|b| b.kind == BlockKind::TypeA));
            }
            _ => panic!("expected blocks"),
        }
    }

    #[test]
    fn subgroup_elements_fix_the_cocharacter_and_live_in_w() {
        for (group, cochar) in [
            (GroupSpec::U(4), vec![1, 1, 2, 2]),
            (GroupSpec::Sp(3), vec![0, 1, -1]),
            (GroupSpec::Sp(2), vec![0, 0]),
        ] {
            let spec = CentralizerSpec::new(group, cochar.clone()).unwrap();
            let sub = centralizer_weyl(&spec);
            let rd = RootDatum::new(group);
            let all = rd.elements().unwrap();
            for m in &sub.elements {
                assert!(all.contains(m), "subgroup element outside W for {group}");
                assert_eq!(m.apply(&cochar), cochar, "cocharacter moved for {group}");
            }
        }
    }

    #[test]
    fn sp_centralizers() {
        // (0,0): the whole C_2 Weyl group.
        let spec = CentralizerSpec::new(GroupSpec::Sp(2), vec![0, 0]).unwrap();
        assert_eq!(centralizer_weyl(&spec).order(), 8);
        // (1,-1): twisted A_1 through the root e1 + e2.
        let spec = CentralizerSpec::new(GroupSpec::Sp(2), vec![1, -1]).unwrap();
        let sub = centralizer_weyl(&spec);
        assert_eq!(sub.order(), 2);
        match &sub.factors {
            FactorStructure::Blocks(blocks) => {
                assert_eq!(blocks.len(), 1);
                assert_eq!(blocks[0].kind, BlockKind::TypeA);
                assert_eq!(blocks[0].members, vec![(0, 1), (1, -1)]);
            }
            _ => panic!("expected blocks"),
        }
    }

    #[test]
    fn g2_non_torus_is_marked_unsupported() {
        // (1,1) pairs to zero with the root y1 - y2.
        let spec = CentralizerSpec::new(GroupSpec::G2, vec![1, 1]).unwrap();
        let sub = centralizer_weyl(&spec);
        assert_eq!(sub.order(), 2);
        assert!(matches!(sub.factors, FactorStructure::Unsupported(_)));
    }

    #[test]
    fn cocharacter_validation() {
        assert!(CentralizerSpec::new(GroupSpec::U(3), vec![1, 2]).is_err());
        assert!(CentralizerSpec::new(GroupSpec::SU(2), vec![1, 1]).is_err());
        assert!(CentralizerSpec::new(GroupSpec::SU(2), vec![1, -1]).is_ok());
        let torus = CentralizerSpec::torus(GroupSpec::SU(4));
        assert_eq!(torus.cocharacter.iter().sum::<i64>(), 0);
        assert!(centralizer_weyl(&torus).is_trivial());
    }

    #[test]
    fn dominant_representative_and_cosets() {
        // Non-contiguous level sets: (1,0,1) has the same coset series as
        // the dominant (1,1,0).
        let spec = CentralizerSpec::new(GroupSpec::U(3), vec![1, 0, 1]).unwrap();
        let dom = dominant_cocharacter(&spec).unwrap();
        assert_eq!(dom.cocharacter, vec![1, 1, 0]);
        let series = coset_length_series(&spec).unwrap();
        assert_eq!(series.polynomial_coeffs(), Some(vec![1, 1, 1]));
    }
}
