use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::GradedSeries;

use super::group::GroupSpec;

/// Default bound on the torus rank for explicit Weyl group enumeration.
pub const DEFAULT_RANK_BOUND: usize = 6;

/// Small dense integer matrix, row-major. Row k holds the image of the k-th
/// lattice coordinate under the substitution y_k -> sum_h M[k][h] y_h.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat {
    n: usize,
    a: Vec<i64>,
}

impl Mat {
    pub fn identity(n: usize) -> Mat {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        Mat { n, a }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Mat {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n));
        Mat { n, a: rows.concat() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.a[i * self.n..(i + 1) * self.n]
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut a = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let s = self.a[i * n + k];
                if s == 0 {
                    continue;
                }
                for j in 0..n {
                    a[i * n + j] += s * other.a[k * n + j];
                }
            }
        }
        Mat { n, a }
    }

    /// Image of a character vector: rows are images of the coordinates, so
    /// characters transform by the transpose.
    pub fn apply_to_character(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        let mut out = vec![0i64; n];
        for k in 0..n {
            let c = v[k];
            if c == 0 {
                continue;
            }
            for h in 0..n {
                out[h] += c * self.a[k * n + h];
            }
        }
        out
    }

    /// Direct action on a cocharacter vector.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        let mut out = vec![0i64; n];
        for i in 0..n {
            for j in 0..n {
                out[i] += self.a[i * n + j] * v[j];
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(self.n)
    }
}

/// Root datum of a supported group: positive roots in the lattice
/// coordinates, simple reflections as integer matrices, and the Weyl
/// degrees. Element lists are enumerated on demand and cached per group.
#[derive(Debug, Clone)]
pub struct RootDatum {
    group: GroupSpec,
    positive_roots: Vec<Vec<i64>>,
    simple_reflections: Vec<Mat>,
    weyl_degrees: Vec<usize>,
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Invariant symmetric form on the lattice, scaled to integer entries.
/// Types A and C use the standard form; G2 uses the SU(3)-restricted form.
fn invariant_form(group: GroupSpec) -> Vec<Vec<i64>> {
    let n = group.var_count();
    match group {
        GroupSpec::G2 => vec![vec![2, -1], vec![-1, 2]],
        _ => (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect(),
    }
}

fn form_value(b: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    let mut s = 0;
    for (i, xi) in x.iter().enumerate() {
        if *xi == 0 {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            s += xi * b[i][j] * yj;
        }
    }
    s
}

/// Reflection in the root `alpha` as a substitution matrix.
pub(crate) fn reflection_matrix(group: GroupSpec, alpha: &[i64]) -> Mat {
    let n = group.var_count();
    let b = invariant_form(group);
    let norm = form_value(&b, alpha, alpha);
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|k| {
            let ek = unit(n, k);
            let pairing = 2 * form_value(&b, &ek, alpha);
            assert_eq!(pairing % norm, 0, "non-crystallographic reflection");
            let coef = pairing / norm;
            (0..n).map(|h| ek[h] - coef * alpha[h]).collect()
        })
        .collect();
    Mat::from_rows(&rows)
}

impl RootDatum {
    pub fn new(group: GroupSpec) -> RootDatum {
        let n = group.var_count();
        let mut positive_roots: Vec<Vec<i64>> = Vec::new();
        match group {
            GroupSpec::U(_) | GroupSpec::SU(_) => {
                for i in 0..n {
                    for j in (i + 1)..n {
                        let mut r = vec![0; n];
                        r[i] = 1;
                        r[j] = -1;
                        positive_roots.push(r);
                    }
                }
            }
            GroupSpec::Sp(_) => {
                for i in 0..n {
                    for j in (i + 1)..n {
                        let mut r = vec![0; n];
                        r[i] = 1;
                        r[j] = -1;
                        positive_roots.push(r);
                        let mut r = vec![0; n];
                        r[i] = 1;
                        r[j] = 1;
                        positive_roots.push(r);
                    }
                    let mut r = vec![0; n];
                    r[i] = 2;
                    positive_roots.push(r);
                }
            }
            GroupSpec::G2 => {
                positive_roots = vec![
                    vec![1, 0],
                    vec![0, 1],
                    vec![1, 1],
                    vec![1, -1],
                    vec![2, 1],
                    vec![1, 2],
                ];
            }
        }

        let simple_roots: Vec<Vec<i64>> = match group {
            GroupSpec::U(_) | GroupSpec::SU(_) => (0..n.saturating_sub(1))
                .map(|i| {
                    let mut r = vec![0; n];
                    r[i] = 1;
                    r[i + 1] = -1;
                    r
                })
                .collect(),
            GroupSpec::Sp(_) => {
                let mut s: Vec<Vec<i64>> = (0..n - 1)
                    .map(|i| {
                        let mut r = vec![0; n];
                        r[i] = 1;
                        r[i + 1] = -1;
                        r
                    })
                    .collect();
                let mut last = vec![0; n];
                last[n - 1] = 2;
                s.push(last);
                s
            }
            GroupSpec::G2 => vec![vec![0, 1], vec![1, -1]],
        };
        let simple_reflections = simple_roots
            .iter()
            .map(|alpha| reflection_matrix(group, alpha))
            .collect();

        RootDatum {
            group,
            positive_roots,
            simple_reflections,
            weyl_degrees: group.weyl_degrees(),
        }
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn simple_reflections(&self) -> &[Mat] {
        &self.simple_reflections
    }

    pub fn weyl_degrees(&self) -> &[usize] {
        &self.weyl_degrees
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl_degrees.iter().product::<usize>().max(1)
    }

    /// All Weyl group elements, enumerated by closing the simple
    /// reflections under multiplication. Cached per group; the enumeration
    /// refuses ranks above `DEFAULT_RANK_BOUND`.
    pub fn elements(&self) -> Result<Arc<Vec<Mat>>> {
        self.elements_with_bound(DEFAULT_RANK_BOUND)
    }

    pub fn elements_with_bound(&self, bound: usize) -> Result<Arc<Vec<Mat>>> {
        if self.group.rank() > bound {
            return Err(Error::RankBoundExceeded { rank: self.group.rank(), bound });
        }
        static CACHE: OnceLock<Mutex<BTreeMap<GroupSpec, Arc<Vec<Mat>>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
        {
            let guard = cache.lock().unwrap();
            if let Some(hit) = guard.get(&self.group) {
                return Ok(hit.clone());
            }
        }
        let elements = Arc::new(close_under_multiplication(
            self.group.var_count(),
            &self.simple_reflections,
        ));
        cache
            .lock()
            .unwrap()
            .insert(self.group, elements.clone());
        Ok(elements)
    }

    /// Coxeter length: the number of positive roots sent to negative roots.
    pub fn length(&self, w: &Mat) -> usize {
        count_inversions(w, &self.positive_roots)
    }

    /// Length generating function sum_w t^{2 l(w)}, from the element list.
    pub fn weyl_poincare(&self) -> Result<GradedSeries> {
        let elements = self.elements()?;
        Ok(length_series(&elements, &self.positive_roots))
    }

    /// The same series from the degrees: prod_i (1 + t^2 + ... + t^{2(d_i - 1)}).
    pub fn weyl_poincare_from_degrees(&self) -> GradedSeries {
        degrees_series(&self.weyl_degrees)
    }
}

pub(crate) fn close_under_multiplication(n: usize, generators: &[Mat]) -> Vec<Mat> {
    let mut seen: BTreeSet<Mat> = BTreeSet::new();
    let mut queue: VecDeque<Mat> = VecDeque::new();
    let id = Mat::identity(n);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        for g in generators {
            let next = w.mul(g);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

pub(crate) fn count_inversions(w: &Mat, positive_roots: &[Vec<i64>]) -> usize {
    let negatives: BTreeSet<Vec<i64>> = positive_roots
        .iter()
        .map(|r| r.iter().map(|c| -c).collect())
        .collect();
    positive_roots
        .iter()
        .filter(|alpha| negatives.contains(&w.apply_to_character(alpha)))
        .count()
}

pub(crate) fn length_series(elements: &[Mat], positive_roots: &[Vec<i64>]) -> GradedSeries {
    let mut coeffs: Vec<i64> = Vec::new();
    for w in elements {
        let l = count_inversions(w, positive_roots);
        if coeffs.len() <= l {
            coeffs.resize(l + 1, 0);
        }
        coeffs[l] += 1;
    }
    GradedSeries::from_even_coeffs(&coeffs)
}

pub(crate) fn degrees_series(degrees: &[usize]) -> GradedSeries {
    let mut out = GradedSeries::one();
    for &d in degrees {
        out = out.mul(&GradedSeries::from_even_coeffs(&vec![1; d]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_counts() {
        // |S_3| = 6
        let u3 = RootDatum::new(GroupSpec::U(3));
        assert_eq!(u3.elements().unwrap().len(), 6);
        // Closure of the two C_2 simple reflections: 8 elements.
        let sp2 = RootDatum::new(GroupSpec::Sp(2));
        assert_eq!(sp2.elements().unwrap().len(), 8);
        // Closure of the two G2 simple reflections: 12 elements.
        let g2 = RootDatum::new(GroupSpec::G2);
        assert_eq!(g2.elements().unwrap().len(), 12);
    }

    #[test]
    fn element_count_matches_degree_product() {
        for g in [
            GroupSpec::U(2),
            GroupSpec::U(4),
            GroupSpec::SU(3),
            GroupSpec::Sp(2),
            GroupSpec::Sp(3),
            GroupSpec::G2,
        ] {
            let rd = RootDatum::new(g);
            assert_eq!(rd.elements().unwrap().len(), rd.weyl_order(), "group {g}");
        }
    }

    #[test]
    fn reflections_are_involutions_preserving_roots() {
        for g in [GroupSpec::U(3), GroupSpec::Sp(3), GroupSpec::G2] {
            let rd = RootDatum::new(g);
            let all: BTreeSet<Vec<i64>> = rd
                .positive_roots()
                .iter()
                .cloned()
                .chain(rd.positive_roots().iter().map(|r| r.iter().map(|c| -c).collect()))
                .collect();
            for s in rd.simple_reflections() {
                assert!(s.mul(s).is_identity());
                for alpha in &all {
                    assert!(all.contains(&s.apply_to_character(alpha)));
                }
            }
        }
    }

    #[test]
    fn rank_bound_is_enforced() {
        let u7 = RootDatum::new(GroupSpec::U(7));
        assert!(matches!(
            u7.elements(),
            Err(Error::RankBoundExceeded { rank: 7, bound: 6 })
        ));
        assert!(u7.elements_with_bound(7).is_ok());
    }

    #[test]
    fn poincare_polynomials() {
        // U(2): 1 + t^2
        let u2 = RootDatum::new(GroupSpec::U(2));
        assert_eq!(u2.weyl_poincare().unwrap().polynomial_coeffs(), Some(vec![1, 1]));
        // U(3): 1 + 2 t^2 + 2 t^4 + t^6 from lengths of S_3.
        let u3 = RootDatum::new(GroupSpec::U(3));
        let p = u3.weyl_poincare().unwrap();
        assert_eq!(p.polynomial_coeffs(), Some(vec![1, 2, 2, 1]));
        assert!(p.series_eq(&u3.weyl_poincare_from_degrees()));
        // G2: (1 + t^2)(1 + t^2 + t^4 + t^6 + t^8 + t^10), degrees 2 and 6.
        let g2 = RootDatum::new(GroupSpec::G2);
        let p = g2.weyl_poincare().unwrap();
        let expected = GradedSeries::from_even_coeffs(&[1, 1])
            .mul(&GradedSeries::from_even_coeffs(&[1, 1, 1, 1, 1, 1]));
        assert!(p.series_eq(&expected));
    }

    #[test]
    fn poincare_is_palindromic_with_group_order_at_one() {
        for g in [GroupSpec::U(4), GroupSpec::Sp(3), GroupSpec::G2, GroupSpec::SU(4)] {
            let rd = RootDatum::new(g);
            let p = rd.weyl_poincare().unwrap();
            assert!(p.is_palindromic(), "group {g}");
            assert_eq!(p.eval_at_one(), Some(rd.weyl_order() as i64), "group {g}");
            assert!(p.series_eq(&rd.weyl_poincare_from_degrees()), "group {g}");
        }
    }
}
