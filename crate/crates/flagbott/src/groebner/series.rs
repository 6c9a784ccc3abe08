use std::collections::BTreeMap;
use std::fmt;

/// A graded rank generating function in one variable t, supported in even
/// degrees. Stored as numerator/denominator in s = t^2:
///
///   numer(s) / prod_d (1 - s^d)^mult(d)
///
/// Finite series (palindromic polynomials of compact quotients) have an
/// empty denominator after canonicalization; equivariant series keep
/// denominator factors, one (1 - t^2) per free polynomial generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    /// Coefficients of s^0, s^1, ... (s = t^2).
    numer: Vec<i64>,
    /// Map half-degree -> multiplicity of the factor (1 - s^d).
    denom: BTreeMap<usize, usize>,
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Exact division of polynomials in s; None when the division has a
/// remainder.
fn poly_div_exact(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    let a = trim(a.to_vec());
    let b = trim(b.to_vec());
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let mut quot = vec![0i64; a.len() - b.len() + 1];
    let lead = *b.last().unwrap();
    for k in (0..quot.len()).rev() {
        let top = rem[k + b.len() - 1];
        if top % lead != 0 {
            return None;
        }
        let q = top / lead;
        quot[k] = q;
        for (j, c) in b.iter().enumerate() {
            rem[k + j] -= q * c;
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return None;
    }
    Some(trim(quot))
}

fn one_minus_s_pow(d: usize) -> Vec<i64> {
    let mut v = vec![0i64; d + 1];
    v[0] = 1;
    v[d] = -1;
    v
}

impl GradedSeries {
    pub fn zero() -> GradedSeries {
        GradedSeries { numer: Vec::new(), denom: BTreeMap::new() }
    }

    pub fn one() -> GradedSeries {
        GradedSeries { numer: vec![1], denom: BTreeMap::new() }
    }

    /// Polynomial series from coefficients of t^0, t^2, t^4, ...
    pub fn from_even_coeffs(coeffs: &[i64]) -> GradedSeries {
        GradedSeries { numer: trim(coeffs.to_vec()), denom: BTreeMap::new() }
    }

    /// numer / prod (1 - s^d) over the listed half-degrees.
    pub fn rational(numer: Vec<i64>, denom_half_degrees: &[usize]) -> GradedSeries {
        let mut denom = BTreeMap::new();
        for &d in denom_half_degrees {
            assert!(d >= 1);
            *denom.entry(d).or_insert(0) += 1;
        }
        GradedSeries { numer: trim(numer), denom }.canonical()
    }

    /// Cancel denominator factors that divide the numerator exactly.
    pub fn canonical(&self) -> GradedSeries {
        let mut numer = trim(self.numer.clone());
        if numer.is_empty() {
            return GradedSeries::zero();
        }
        let mut denom = self.denom.clone();
        let degs: Vec<usize> = denom.keys().copied().collect();
        for d in degs.into_iter().rev() {
            while denom.get(&d).copied().unwrap_or(0) > 0 {
                match poly_div_exact(&numer, &one_minus_s_pow(d)) {
                    Some(q) => {
                        numer = q;
                        let m = denom.get_mut(&d).unwrap();
                        *m -= 1;
                        if *m == 0 {
                            denom.remove(&d);
                        }
                    }
                    None => break,
                }
            }
        }
        GradedSeries { numer, denom }
    }

    pub fn is_polynomial(&self) -> bool {
        self.canonical().denom.is_empty()
    }

    /// Coefficients of t^0, t^2, ... for polynomial series.
    pub fn polynomial_coeffs(&self) -> Option<Vec<i64>> {
        let c = self.canonical();
        if c.denom.is_empty() {
            Some(c.numer)
        } else {
            None
        }
    }

    pub fn mul(&self, other: &GradedSeries) -> GradedSeries {
        let mut denom = self.denom.clone();
        for (d, m) in &other.denom {
            *denom.entry(*d).or_insert(0) += m;
        }
        GradedSeries { numer: poly_mul(&self.numer, &other.numer), denom }
    }

    /// Multiply by the polynomial (1 - t^2)^k.
    pub fn mul_one_minus_t2_pow(&self, k: usize) -> GradedSeries {
        let mut numer = self.numer.clone();
        for _ in 0..k {
            numer = poly_mul(&numer, &one_minus_s_pow(1));
        }
        GradedSeries { numer, denom: self.denom.clone() }.canonical()
    }

    /// Exact division of polynomial series; None if either side is not
    /// polynomial or the division is inexact.
    pub fn div_exact(&self, other: &GradedSeries) -> Option<GradedSeries> {
        let a = self.polynomial_coeffs()?;
        let b = other.polynomial_coeffs()?;
        Some(GradedSeries::from_even_coeffs(&poly_div_exact(&a, &b)?))
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn series_eq(&self, other: &GradedSeries) -> bool {
        let mut lhs = self.numer.clone();
        for (d, m) in &other.denom {
            for _ in 0..*m {
                lhs = poly_mul(&lhs, &one_minus_s_pow(*d));
            }
        }
        let mut rhs = other.numer.clone();
        for (d, m) in &self.denom {
            for _ in 0..*m {
                rhs = poly_mul(&rhs, &one_minus_s_pow(*d));
            }
        }
        trim(lhs) == trim(rhs)
    }

    /// Rank in topological degree `degree` (must be even), expanding the
    /// denominator as a power series.
    pub fn coefficient(&self, degree: usize) -> i64 {
        if degree % 2 != 0 {
            return 0;
        }
        let k = degree / 2;
        let mut coeffs = vec![0i64; k + 1];
        for (i, c) in self.numer.iter().enumerate().take(k + 1) {
            coeffs[i] = *c;
        }
        // divide by (1 - s^d) = multiply by 1 + s^d + s^{2d} + ...
        for (d, m) in &self.denom {
            for _ in 0..*m {
                for i in *d..=k {
                    coeffs[i] += coeffs[i - d];
                }
            }
        }
        coeffs[k]
    }

    /// First topological degree (scanning even degrees up to `max`) where
    /// two series have different ranks.
    pub fn first_divergence(&self, other: &GradedSeries, max: usize) -> Option<usize> {
        (0..=max / 2)
            .map(|k| 2 * k)
            .find(|&d| self.coefficient(d) != other.coefficient(d))
    }

    /// Top topological degree for polynomial series.
    pub fn top_degree(&self) -> Option<usize> {
        let c = self.polynomial_coeffs()?;
        if c.is_empty() {
            None
        } else {
            Some(2 * (c.len() - 1))
        }
    }

    pub fn is_palindromic(&self) -> bool {
        match self.polynomial_coeffs() {
            None => false,
            Some(c) => {
                let mut r = c.clone();
                r.reverse();
                r == c
            }
        }
    }

    /// Value at t = 1 for polynomial series (the Euler characteristic of
    /// an even-cell space).
    pub fn eval_at_one(&self) -> Option<i64> {
        Some(self.polynomial_coeffs()?.iter().sum())
    }

    pub fn render(&self) -> String {
        let c = self.canonical();
        let numer = render_poly_t2(&c.numer);
        if c.denom.is_empty() {
            numer
        } else {
            let denom: Vec<String> = c
                .denom
                .iter()
                .map(|(d, m)| {
                    let factor = format!("(1 - t^{})", 2 * d);
                    if *m == 1 {
                        factor
                    } else {
                        format!("{factor}^{m}")
                    }
                })
                .collect();
            format!("({}) / ({})", numer, denom.join("*"))
        }
    }
}

fn render_poly_t2(coeffs: &[i64]) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let mono = match k {
            0 => "1".to_string(),
            _ => format!("t^{}", 2 * k),
        };
        let text = if k == 0 {
            format!("{c}")
        } else if *c == 1 {
            mono
        } else if *c == -1 {
            format!("-{mono}")
        } else {
            format!("{c}*{mono}")
        };
        parts.push(text);
    }
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i == 0 {
            out.push_str(p);
        } else if let Some(stripped) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(p);
        }
    }
    out
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
