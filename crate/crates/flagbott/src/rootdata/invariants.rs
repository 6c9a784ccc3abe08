use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{elementary_symmetric, CoefficientRing, Polynomial, Variable};

use super::centralizer::{BlockKind, FactorStructure, ReflectionSubgroup};
use super::group::{check_admissible, GroupSpec};
use super::weyl::Mat;

/// Generators of the W(K)-invariant polynomial ring in the stage's y
/// coordinates: elementary symmetric polynomials for U, the same without
/// the linear one for SU, elementary symmetrics of the squares for Sp, and
/// the quadratic and degree-12 invariants for G2.
pub fn fundamental_invariants(
    group: GroupSpec,
    ring: CoefficientRing,
    stage: u32,
) -> Result<Vec<Polynomial>> {
    check_admissible(&[group], ring)?;
    let n = group.var_count();
    let ys: Vec<Polynomial> = (1..=n as u32)
        .map(|k| Polynomial::variable(ring, Variable::y(stage, k)))
        .collect();
    let out = match group {
        GroupSpec::U(_) => (1..=n)
            .map(|k| elementary_symmetric(ring, k, &ys))
            .collect::<Result<Vec<_>>>()?,
        GroupSpec::SU(_) => (2..=n)
            .map(|k| elementary_symmetric(ring, k, &ys))
            .collect::<Result<Vec<_>>>()?,
        GroupSpec::Sp(_) => {
            let squares: Vec<Polynomial> = ys.iter().map(|y| y.pow(2)).collect();
            (1..=n)
                .map(|k| elementary_symmetric(ring, k, &squares))
                .collect::<Result<Vec<_>>>()?
        }
        GroupSpec::G2 => {
            let y1 = &ys[0];
            let y2 = &ys[1];
            // Quadratic invariant y1^2 + y1 y2 + y2^2; over F_3 this is the
            // canonical form of (y1 - y2)^2.
            let h2 = y1
                .pow(2)
                .add(&y1.mul(y2)?)?
                .add(&y2.pow(2))?;
            // Degree-12 invariant y1^2 y2^2 (y1 + y2)^2.
            let h12 = y1.pow(2).mul(&y2.pow(2))?.mul(&y1.add(y2)?.pow(2))?;
            vec![h2, h12]
        }
    };
    Ok(out)
}

/// The linear lattice relation of an SU stage: e_1(y) = y_1 + ... + y_k.
/// Other groups have none.
pub fn lattice_relation(
    group: GroupSpec,
    ring: CoefficientRing,
    stage: u32,
) -> Option<Polynomial> {
    if !group.is_su() {
        return None;
    }
    let form: Vec<(i64, Variable)> = (1..=group.var_count() as u32)
        .map(|k| (1, Variable::y(stage, k)))
        .collect();
    Some(Polynomial::linear(ring, &form))
}

/// Generating invariants of a supported reflection subgroup, block by
/// block in coordinate order: untouched coordinates contribute themselves,
/// type A blocks their elementary symmetric polynomials in the signed
/// coordinates, type C blocks elementary symmetrics of the squares.
pub fn invariant_generators(
    subgroup: &ReflectionSubgroup,
    ring: CoefficientRing,
    stage: u32,
) -> Result<Vec<Polynomial>> {
    let blocks = match &subgroup.factors {
        FactorStructure::Blocks(blocks) => blocks,
        FactorStructure::Unsupported(reason) => {
            return Err(Error::UnsupportedCentralizer(format!(
                "{} with cocharacter {:?}: {}",
                subgroup.group, subgroup.cocharacter, reason
            )));
        }
    };
    let n = subgroup.group.var_count();
    let mut by_start: BTreeMap<usize, &super::centralizer::Block> = BTreeMap::new();
    let mut covered: Vec<bool> = vec![false; n];
    for block in blocks {
        by_start.insert(block.members[0].0, block);
        for (i, _) in &block.members {
            covered[*i] = true;
        }
    }
    let mut out = Vec::new();
    for coord in 0..n {
        if let Some(block) = by_start.get(&coord) {
            let forms: Vec<Polynomial> = block
                .members
                .iter()
                .map(|(i, sign)| {
                    let y = Variable::y(stage, *i as u32 + 1);
                    match block.kind {
                        BlockKind::TypeA => {
                            Polynomial::linear(ring, &[(*sign, y)])
                        }
                        BlockKind::TypeC => Polynomial::variable(ring, y).pow(2),
                    }
                })
                .collect();
            for k in 1..=forms.len() {
                let e = elementary_symmetric(ring, k, &forms)?;
                out.push(e.normalize_sign());
            }
        } else if !covered[coord] {
            out.push(Polynomial::variable(ring, Variable::y(stage, coord as u32 + 1)));
        }
    }
    Ok(out)
}

/// The substitution sending each stage-`stage` y variable to its image
/// under the Weyl element `w`.
pub fn weyl_substitution(
    w: &Mat,
    ring: CoefficientRing,
    stage: u32,
) -> BTreeMap<Variable, Polynomial> {
    let n = w.dim();
    (0..n)
        .map(|k| {
            let form: Vec<(i64, Variable)> = w
                .row(k)
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(h, c)| (*c, Variable::y(stage, h as u32 + 1)))
                .collect();
            (
                Variable::y(stage, k as u32 + 1),
                Polynomial::linear(ring, &form),
            )
        })
        .collect()
}

/// True iff the polynomial (in one stage's y variables) is fixed by the
/// substitution action of `w`.
pub fn is_fixed_by(p: &Polynomial, w: &Mat, stage: u32) -> bool {
    let map = weyl_substitution(w, p.ring(), stage);
    match p.substitute_general(&map) {
        Ok(image) => image == *p,
        Err(_) => false,
    }
}
