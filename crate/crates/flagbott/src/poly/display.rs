use super::polynomial::Polynomial;
use super::ring::Coeff;

/// Render a polynomial with terms in descending print order, explicit `*`
/// between coefficient and monomial, and `^` for powers. This is the
/// golden-file text format.
pub fn render_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&super::monomial::Monomial, &Coeff)> = p.terms().collect();
    terms.sort_by(|(ma, _), (mb, _)| mb.cmp_print(ma));

    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        let neg = c.prints_negative(p.ring());
        let abs = if neg { c.neg(p.ring()) } else { (*c).clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_txt = abs.render();
        if m.is_one() {
            out.push_str(&coeff_txt);
        } else if abs.is_one() {
            out.push_str(&m.render());
        } else {
            out.push_str(&coeff_txt);
            out.push('*');
            out.push_str(&m.render());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use crate::poly::{CoefficientRing, Polynomial, Variable};

    fn z() -> CoefficientRing {
        CoefficientRing::Integers
    }

    #[test]
    fn renders_descending_with_signs() {
        let u = Polynomial::variable(z(), Variable::u(1, 1));
        let y = Polynomial::variable(z(), Variable::y(1, 1));
        let p = u.pow(2).sub(&y.pow(2)).unwrap();
        assert_eq!(p.to_string(), "u[1,1]^2 - y[1,1]^2");
    }

    #[test]
    fn renders_projective_relation_shape() {
        let x = Polynomial::variable(z(), Variable::x());
        let c: Vec<Polynomial> = (1..=3)
            .map(|k| Polynomial::variable(z(), Variable::c(k)))
            .collect();
        let p = x
            .pow(3)
            .sub(&x.pow(2).mul(&c[0]).unwrap())
            .unwrap()
            .add(&x.mul(&c[1]).unwrap())
            .unwrap()
            .sub(&c[2])
            .unwrap();
        assert_eq!(p.to_string(), "x^3 - x^2*c[1] + x*c[2] - c[3]");
    }

    #[test]
    fn renders_constants_and_coefficients() {
        let y = Polynomial::variable(z(), Variable::y(2, 1));
        let p = y.scale_i64(-2).add(&Polynomial::constant(z(), 5)).unwrap();
        assert_eq!(p.to_string(), "-2*y[2,1] + 5");
        assert_eq!(Polynomial::zero(z()).to_string(), "0");
        assert_eq!(Polynomial::constant(z(), -1).to_string(), "-1");
    }

    #[test]
    fn prime_field_uses_canonical_representatives() {
        let f3 = CoefficientRing::prime_field(3).unwrap();
        let y = Polynomial::variable(f3, Variable::y(1, 1));
        let p = y.scale_i64(-1);
        // -1 = 2 in F_3, and 2 > 3/2 so it renders with a minus sign.
        assert_eq!(p.to_string(), "-y[1,1]");
        let q = y.scale_i64(2);
        assert_eq!(q.to_string(), "-y[1,1]");
    }
}
