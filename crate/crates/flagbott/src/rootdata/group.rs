use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::CoefficientRing;

/// Simple Lie families, carried only for their torsion-prime table rows.
/// Root data exist for types A and C and for G2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieFamily {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl LieFamily {
    /// Primes p for which the integral homology of the compact group has
    /// p-torsion.
    pub fn torsion_primes(self) -> BTreeSet<u32> {
        match self {
            LieFamily::A | LieFamily::C => BTreeSet::new(),
            LieFamily::B | LieFamily::D | LieFamily::G2 => [2].into(),
            LieFamily::F4 | LieFamily::E6 | LieFamily::E7 => [2, 3].into(),
            LieFamily::E8 => [2, 3, 5].into(),
        }
    }
}

/// The compact groups with full root-datum support: U(n+1), SU(n+1),
/// Sp(n) and G2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupSpec {
    /// U(k) for k >= 1; maximal torus of dimension k.
    U(u32),
    /// SU(k) for k >= 2; maximal torus of dimension k - 1, modeled on k
    /// lattice coordinates summing to zero.
    SU(u32),
    /// Sp(n) for n >= 1; maximal torus of dimension n.
    Sp(u32),
    /// G2; maximal torus of dimension 2, coordinates from the torus
    /// diag(t1, t2, (t1 t2)^-1) of the SU(3) subgroup.
    G2,
}

impl GroupSpec {
    pub fn from_tag(tag: &str) -> Result<GroupSpec> {
        let bad = |msg: String| Error::InvalidTower(msg);
        if tag == "G2" {
            return Ok(GroupSpec::G2);
        }
        let (name, num) = tag
            .split_once(':')
            .ok_or_else(|| bad(format!("bad group tag {tag:?}")))?;
        let k: u32 = num
            .parse()
            .map_err(|_| bad(format!("bad group tag {tag:?}")))?;
        match name {
            "U" if k >= 1 => Ok(GroupSpec::U(k)),
            "SU" if k >= 2 => Ok(GroupSpec::SU(k)),
            "Sp" if k >= 1 => Ok(GroupSpec::Sp(k)),
            _ => Err(bad(format!("bad group tag {tag:?}"))),
        }
    }

    pub fn tag(self) -> String {
        match self {
            GroupSpec::U(k) => format!("U:{k}"),
            GroupSpec::SU(k) => format!("SU:{k}"),
            GroupSpec::Sp(n) => format!("Sp:{n}"),
            GroupSpec::G2 => "G2".to_string(),
        }
    }

    pub fn family(self) -> LieFamily {
        match self {
            GroupSpec::U(_) | GroupSpec::SU(_) => LieFamily::A,
            GroupSpec::Sp(_) => LieFamily::C,
            GroupSpec::G2 => LieFamily::G2,
        }
    }

    /// Dimension of the maximal torus.
    pub fn rank(self) -> usize {
        match self {
            GroupSpec::U(k) => k as usize,
            GroupSpec::SU(k) => k as usize - 1,
            GroupSpec::Sp(n) => n as usize,
            GroupSpec::G2 => 2,
        }
    }

    /// Number of lattice coordinates in the polynomial model. SU(k) uses k
    /// coordinates subject to the vanishing of their sum; everything else
    /// uses exactly `rank` coordinates.
    pub fn var_count(self) -> usize {
        match self {
            GroupSpec::U(k) | GroupSpec::SU(k) => k as usize,
            GroupSpec::Sp(n) => n as usize,
            GroupSpec::G2 => 2,
        }
    }

    pub fn is_su(self) -> bool {
        matches!(self, GroupSpec::SU(_))
    }

    /// Degrees of the fundamental Weyl invariants; their product is the
    /// Weyl group order.
    pub fn weyl_degrees(self) -> Vec<usize> {
        match self {
            GroupSpec::U(k) => (1..=k as usize).collect(),
            GroupSpec::SU(k) => (2..=k as usize).collect(),
            GroupSpec::Sp(n) => (1..=n as usize).map(|i| 2 * i).collect(),
            GroupSpec::G2 => vec![2, 6],
        }
    }

    pub fn weyl_order(self) -> usize {
        self.weyl_degrees().iter().product::<usize>().max(1)
    }

    pub fn torsion_primes(self) -> BTreeSet<u32> {
        self.family().torsion_primes()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

/// True iff every torsion prime of every listed group is invertible in the
/// coefficient ring.
pub fn admissible_coefficients(groups: &[GroupSpec], ring: CoefficientRing) -> bool {
    groups
        .iter()
        .all(|g| g.torsion_primes().iter().all(|&p| ring.inverts(p)))
}

/// Like `admissible_coefficients` but reporting the first obstruction.
pub fn check_admissible(groups: &[GroupSpec], ring: CoefficientRing) -> Result<()> {
    for g in groups {
        for &p in &g.torsion_primes() {
            if !ring.inverts(p) {
                return Err(Error::InadmissibleCoefficients {
                    ring: ring.tag(),
                    prime: p,
                    group: g.tag(),
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torsion_prime_table() {
        assert!(GroupSpec::U(4).torsion_primes().is_empty());
        assert!(GroupSpec::SU(4).torsion_primes().is_empty());
        assert!(GroupSpec::Sp(3).torsion_primes().is_empty());
        assert_eq!(GroupSpec::G2.torsion_primes(), [2].into());
        assert_eq!(LieFamily::B.torsion_primes(), [2].into());
        assert_eq!(LieFamily::D.torsion_primes(), [2].into());
        assert_eq!(LieFamily::F4.torsion_primes(), [2, 3].into());
        assert_eq!(LieFamily::E6.torsion_primes(), [2, 3].into());
        assert_eq!(LieFamily::E7.torsion_primes(), [2, 3].into());
        assert_eq!(LieFamily::E8.torsion_primes(), [2, 3, 5].into());
    }

    #[test]
    fn admissibility() {
        let z = CoefficientRing::Integers;
        let q = CoefficientRing::Rationals;
        let f2 = CoefficientRing::prime_field(2).unwrap();
        let f3 = CoefficientRing::prime_field(3).unwrap();
        let sp_tower = [GroupSpec::Sp(3), GroupSpec::Sp(3), GroupSpec::Sp(2)];
        assert!(admissible_coefficients(&sp_tower, z));
        let mixed = [GroupSpec::SU(4), GroupSpec::Sp(3), GroupSpec::G2];
        assert!(admissible_coefficients(&mixed, f3));
        assert!(!admissible_coefficients(&[GroupSpec::G2], z));
        assert!(!admissible_coefficients(&[GroupSpec::G2], f2));
        assert!(admissible_coefficients(&[GroupSpec::G2], q));
        assert!(check_admissible(&[GroupSpec::G2], z).is_err());
    }

    #[test]
    fn ranks_and_degrees() {
        assert_eq!(GroupSpec::U(3).rank(), 3);
        assert_eq!(GroupSpec::SU(4).rank(), 3);
        assert_eq!(GroupSpec::SU(4).var_count(), 4);
        assert_eq!(GroupSpec::Sp(2).rank(), 2);
        assert_eq!(GroupSpec::G2.rank(), 2);
        assert_eq!(GroupSpec::U(3).weyl_order(), 6);
        assert_eq!(GroupSpec::SU(2).weyl_order(), 2);
        assert_eq!(GroupSpec::Sp(3).weyl_order(), 48);
        assert_eq!(GroupSpec::G2.weyl_order(), 12);
    }

    #[test]
    fn group_tags() {
        for tag in ["U:3", "SU:4", "Sp:2", "G2"] {
            assert_eq!(GroupSpec::from_tag(tag).unwrap().tag(), tag);
        }
        assert!(GroupSpec::from_tag("SU:1").is_err());
        assert!(GroupSpec::from_tag("E8").is_err());
    }
}
