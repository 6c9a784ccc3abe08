use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::poly::{elementary_symmetric, CoefficientRing, Polynomial, Variable};
use crate::rootdata::{
    centralizer_weyl, check_admissible, fundamental_invariants, invariant_generators,
    lattice_relation, CentralizerSpec, GroupSpec,
};

use super::model::{substitution_map, TowerSpec};
use super::presentation::{Generator, Presentation};
use super::rewrite::Rewriter;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Equivariant,
    Ordinary,
    Effective,
}

/// Classify one stage's invariant generators: a bare coordinate stays an
/// ambient generator; anything else becomes a derived generator tagged
/// c[stage, position].
fn stage_generator_entries(
    spec: &TowerSpec,
    stage: usize,
) -> Result<Vec<Generator>> {
    let subgroup = centralizer_weyl(&spec.stages[stage - 1].centralizer);
    let invgens = invariant_generators(&subgroup, spec.ring, stage as u32)?;
    Ok(invgens
        .into_iter()
        .enumerate()
        .map(|(idx, poly)| match single_variable(&poly) {
            Some(v) => Generator::ambient(v),
            None => Generator::derived(
                Variable::c_staged(stage as u32, idx as u32 + 1),
                poly,
            ),
        })
        .collect())
}

fn single_variable(p: &Polynomial) -> Option<Variable> {
    let mut terms = p.terms();
    let (m, c) = terms.next()?;
    if terms.next().is_some() || !c.is_one() {
        return None;
    }
    let mut vars = m.iter();
    let (v, e) = vars.next()?;
    if vars.next().is_some() || *e != 1 {
        return None;
    }
    Some(*v)
}

fn u_variables(group: GroupSpec, stage: usize, ring: CoefficientRing) -> Vec<Polynomial> {
    (1..=group.var_count() as u32)
        .map(|k| Polynomial::variable(ring, Variable::u(stage as u32, k)))
        .collect()
}

fn build(spec: &TowerSpec, mode: Mode, budget: Budget) -> Result<Presentation> {
    let ring = spec.ring;
    check_admissible(&spec.groups(), ring)?;

    if mode == Mode::Effective {
        for stage in &spec.stages {
            let trivial = centralizer_weyl(&stage.centralizer).is_trivial();
            if !matches!(stage.group, GroupSpec::U(_)) || !trivial {
                return Err(Error::UnsupportedCentralizer(format!(
                    "the effective-torus presentation needs type U stages with torus \
                     centralizers, got {} with cocharacter {:?}",
                    stage.group, stage.centralizer.cocharacter
                )));
            }
        }
    }

    let include_u = mode != Mode::Ordinary;
    let m = spec.m();

    let mut generators: Vec<Generator> = Vec::new();
    if include_u {
        for (j, stage) in spec.stages.iter().enumerate() {
            for k in 1..=stage.group.var_count() as u32 {
                generators.push(Generator::ambient(Variable::u(j as u32 + 1, k)));
            }
        }
    }
    let mut y_entries: Vec<Vec<Generator>> = Vec::new();
    for j in 1..=m {
        y_entries.push(stage_generator_entries(spec, j)?);
    }
    generators.extend(y_entries.iter().flatten().cloned());

    let submap = substitution_map(spec, include_u)?;
    let rewriter = Rewriter::new(ring, &generators, budget)?;

    let mut relations: Vec<Polynomial> = Vec::new();
    for ell in 1..=m {
        let group = spec.stages[ell - 1].group;
        if let Some(e1) = lattice_relation(group, ring, ell as u32) {
            relations.push(rewriter.rewrite(&e1)?.normalize_sign());
            if include_u {
                let e1_u = elementary_symmetric(ring, 1, &u_variables(group, ell, ring))?;
                relations.push(e1_u.normalize_sign());
            }
        }
        let stage_map = submap.stage_map(ell);
        for h in fundamental_invariants(group, ring, ell as u32)? {
            let image = h.substitute_general(&stage_map)?;
            let rel = h.sub(&image)?;
            let rel = rewriter.rewrite(&rel)?.normalize_sign();
            if !rel.is_zero() {
                relations.push(rel);
            }
        }
        if mode == Mode::Effective {
            let last = Variable::u(ell as u32, group.var_count() as u32);
            relations.push(Polynomial::variable(ring, last));
        }
    }

    let kind = match mode {
        Mode::Equivariant => "equivariant",
        Mode::Ordinary => "ordinary",
        Mode::Effective => "effective-torus equivariant",
    };
    Presentation::new(
        ring,
        generators,
        relations,
        format!("{kind} cohomology of a {m}-stage tower over {}", ring.tag()),
    )
}

/// The torus-equivariant presentation: polynomial generators u[j,k] for the
/// acting torus and the W(Z_j)-invariant generators of each fiber, with one
/// relation per fundamental Weyl invariant of each stage,
/// h(y_l) - h(u_l + connection forms), plus the lattice relations e_1(y),
/// e_1(u) for SU stages.
pub fn equivariant_presentation(spec: &TowerSpec) -> Result<Presentation> {
    equivariant_presentation_with(spec, Budget::default())
}

pub fn equivariant_presentation_with(spec: &TowerSpec, budget: Budget) -> Result<Presentation> {
    build(spec, Mode::Equivariant, budget)
}

/// The ordinary (singular) presentation: the same construction with every
/// u[j,k] set to zero.
pub fn ordinary_presentation(spec: &TowerSpec) -> Result<Presentation> {
    ordinary_presentation_with(spec, Budget::default())
}

pub fn ordinary_presentation_with(spec: &TowerSpec, budget: Budget) -> Result<Presentation> {
    build(spec, Mode::Ordinary, budget)
}

/// The presentation for the effective torus action on a tower of type U
/// full flag stages: the equivariant presentation plus the relations
/// u[j, n_j + 1] = 0.
pub fn effective_presentation(spec: &TowerSpec) -> Result<Presentation> {
    effective_presentation_with(spec, Budget::default())
}

pub fn effective_presentation_with(spec: &TowerSpec, budget: Budget) -> Result<Presentation> {
    build(spec, Mode::Effective, budget)
}

/// One flag-bundle step: the base presentation is extended by the new
/// fiber's invariant generators, with one relation per fundamental
/// invariant, h(y) - h(chern_map). The chern_map entries are the images of
/// the fiber coordinates: degree-2 forms over the base generators.
pub fn flag_bundle_step(
    base: &Presentation,
    group: GroupSpec,
    z: &CentralizerSpec,
    chern_map: &[Polynomial],
) -> Result<Presentation> {
    flag_bundle_step_with(base, group, z, chern_map, Budget::default())
}

pub fn flag_bundle_step_with(
    base: &Presentation,
    group: GroupSpec,
    z: &CentralizerSpec,
    chern_map: &[Polynomial],
    budget: Budget,
) -> Result<Presentation> {
    let ring = base.ring;
    check_admissible(&[group], ring)?;
    if z.group != group {
        return Err(Error::InvalidTower(format!(
            "centralizer group {} does not match the fiber group {}",
            z.group, group
        )));
    }
    if chern_map.len() != group.var_count() {
        return Err(Error::InvalidTower(format!(
            "chern_map needs {} entries for {}, got {}",
            group.var_count(),
            group,
            chern_map.len()
        )));
    }
    let degrees = base.degree_map();
    for (k, form) in chern_map.iter().enumerate() {
        if form.ring() != ring {
            return Err(Error::RingMismatch(ring.tag(), form.ring().tag()));
        }
        let ok = form.is_zero()
            || (form.is_homogeneous_weighted(&degrees)
                && form.variables().iter().all(|v| degrees.contains_key(v))
                && form
                    .terms()
                    .next()
                    .map(|(m, _)| m.weighted_degree(&degrees) == 2)
                    .unwrap_or(true));
        if !ok {
            return Err(Error::InhomogeneousSubstitution {
                var: format!("chern_map[{}]", k + 1),
            });
        }
    }
    if group.is_su() {
        let sum = chern_map
            .iter()
            .try_fold(Polynomial::zero(ring), |acc, f| acc.add(f))?;
        if !sum.is_zero() {
            return Err(Error::InvalidTower(
                "chern_map entries for an SU fiber must sum to zero".to_string(),
            ));
        }
    }

    let stage = base.max_stage() as usize + 1;
    let subgroup = centralizer_weyl(z);
    let invgens = invariant_generators(&subgroup, ring, stage as u32)?;
    let mut generators = base.generators.clone();
    for (idx, poly) in invgens.into_iter().enumerate() {
        match single_variable(&poly) {
            Some(v) => generators.push(Generator::ambient(v)),
            None => generators.push(Generator::derived(
                Variable::c_staged(stage as u32, idx as u32 + 1),
                poly,
            )),
        }
    }

    let rewriter = Rewriter::new(ring, &generators, budget)?;
    let mut relations = base.relations.clone();
    if let Some(e1) = lattice_relation(group, ring, stage as u32) {
        relations.push(rewriter.rewrite(&e1)?.normalize_sign());
    }
    let map: BTreeMap<Variable, Polynomial> = chern_map
        .iter()
        .enumerate()
        .map(|(k, f)| (Variable::y(stage as u32, k as u32 + 1), f.clone()))
        .collect();
    for h in fundamental_invariants(group, ring, stage as u32)? {
        let image = h.substitute_general(&map)?;
        let rel = rewriter.rewrite(&h.sub(&image)?)?.normalize_sign();
        if !rel.is_zero() {
            relations.push(rel);
        }
    }

    Presentation::new(
        ring,
        generators,
        relations,
        format!("{} / flag step {} over {}", base.label, group, ring.tag()),
    )
}

/// Iterate `flag_bundle_step` along a tower; agrees with
/// `ordinary_presentation` stage by stage.
pub fn ordinary_from_steps(spec: &TowerSpec) -> Result<Presentation> {
    let submap = substitution_map(spec, false)?;
    let mut p = Presentation::empty(spec.ring, "point");
    for (j, stage) in spec.stages.iter().enumerate() {
        p = flag_bundle_step(&p, stage.group, &stage.centralizer, &submap.images[j])?;
    }
    Ok(p)
}

/// Chern-class symbols c[1], ..., c[n] as polynomials.
pub fn chern_symbols(ring: CoefficientRing, n: usize) -> Vec<Polynomial> {
    (1..=n as u32)
        .map(|k| Polynomial::variable(ring, Variable::c(k)))
        .collect()
}

/// The projectivized-bundle relation
/// x^{n+1} - x^n c_1 + x^{n-1} c_2 - ... for a rank n+1 sum of line
/// bundles, in the generator x and the given Chern classes.
pub fn projective_bundle_relation(
    ring: CoefficientRing,
    n: usize,
    chern: &[Polynomial],
) -> Result<Polynomial> {
    if chern.len() != n + 1 {
        return Err(Error::InvalidTower(format!(
            "projective bundle of rank {} needs {} Chern classes, got {}",
            n + 1,
            n + 1,
            chern.len()
        )));
    }
    let x = Polynomial::variable(ring, Variable::x());
    let mut rel = x.pow((n + 1) as u32);
    for (k, c) in chern.iter().enumerate() {
        let sign = if (k + 1) % 2 == 1 { -1 } else { 1 };
        let term = x.pow((n - k) as u32).mul(c)?.scale_i64(sign);
        rel = rel.add(&term)?;
    }
    Ok(rel)
}

/// The graded pieces of prod (1 + x_k) - c for a full flag bundle: the
/// relations e_k(x_1, ..., x_{n+1}) - c_k.
pub fn full_flag_relation(
    ring: CoefficientRing,
    n: usize,
    chern: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    if chern.len() != n + 1 {
        return Err(Error::InvalidTower(format!(
            "full flag bundle of rank {} needs {} Chern classes, got {}",
            n + 1,
            n + 1,
            chern.len()
        )));
    }
    let xs: Vec<Polynomial> = (1..=(n + 1) as u32)
        .map(|k| Polynomial::variable(ring, Variable::x_indexed(k)))
        .collect();
    (1..=n + 1)
        .map(|k| Ok(elementary_symmetric(ring, k, &xs)?.sub(&chern[k - 1])?))
        .collect()
}
