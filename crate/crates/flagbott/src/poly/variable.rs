use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Generator families. `U` holds the acting-torus classes `u[j,k]`, `Y` the
/// fiber-torus classes `y[j,k]`, `C` Chern-class symbols and derived
/// invariant generators, and `X` the projective/flag bundle generators.
///
/// The derive order `U < C < X < Y` is the global computation order: the
/// default grevlex order puts every y above every u, which keeps leading
/// terms of stage relations inside the fiber variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    U,
    C,
    X,
    Y,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::U => 'u',
            Family::C => 'c',
            Family::X => 'x',
            Family::Y => 'y',
        }
    }
}

/// A polynomial generator, identified by family, stage and index.
/// Every ambient variable sits in topological degree 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    pub family: Family,
    pub stage: u32,
    pub index: u32,
}

impl Variable {
    pub fn new(family: Family, stage: u32, index: u32) -> Variable {
        assert!(stage >= 1 && index >= 1, "stage and index are 1-based");
        Variable { family, stage, index }
    }

    pub fn u(stage: u32, index: u32) -> Variable {
        Variable::new(Family::U, stage, index)
    }

    pub fn y(stage: u32, index: u32) -> Variable {
        Variable::new(Family::Y, stage, index)
    }

    /// Chern-class symbol `c[k]`.
    pub fn c(index: u32) -> Variable {
        Variable::new(Family::C, 1, index)
    }

    /// Stage-tagged invariant generator symbol `c[j,k]`.
    pub fn c_staged(stage: u32, index: u32) -> Variable {
        Variable::new(Family::C, stage, index)
    }

    /// The projective-bundle generator, printed as `x`.
    pub fn x() -> Variable {
        Variable::new(Family::X, 1, 1)
    }

    /// Flag-bundle generators `x`, `x[2]`, `x[3]`, ...
    pub fn x_indexed(index: u32) -> Variable {
        Variable::new(Family::X, 1, index)
    }

    /// Rank in the printing order: x first, then Chern symbols, then u, then
    /// y, each family ordered by ascending stage and index. Earlier rank
    /// means the variable is treated as larger when rendering.
    fn print_key(self) -> (u8, u32, u32) {
        let fam = match self.family {
            Family::X => 0,
            Family::C => 1,
            Family::U => 2,
            Family::Y => 3,
        };
        (fam, self.stage, self.index)
    }

    pub fn cmp_print(a: &Variable, b: &Variable) -> Ordering {
        // Smaller print key = printed earlier = larger in the print order.
        b.print_key().cmp(&a.print_key())
    }

    pub fn render(&self) -> String {
        match self.family {
            Family::U | Family::Y => format!("{}[{},{}]", self.family.letter(), self.stage, self.index),
            Family::C => {
                if self.stage == 1 {
                    format!("c[{}]", self.index)
                } else {
                    format!("c[{},{}]", self.stage, self.index)
                }
            }
            Family::X => {
                if self.index == 1 {
                    "x".to_string()
                } else {
                    format!("x[{}]", self.index)
                }
            }
        }
    }

    pub fn parse(token: &str) -> Result<Variable> {
        let bad = || Error::MachineDoc(format!("bad variable token {token:?}"));
        if token == "x" {
            return Ok(Variable::x());
        }
        let (head, rest) = token.split_at(1);
        let family = match head {
            "u" => Family::U,
            "y" => Family::Y,
            "c" => Family::C,
            "x" => Family::X,
            _ => return Err(bad()),
        };
        let inner = rest
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(',').collect();
        let parse_u32 = |s: &str| s.parse::<u32>().map_err(|_| bad());
        match (family, parts.as_slice()) {
            (Family::U | Family::Y, [j, k]) => {
                Ok(Variable::new(family, parse_u32(j)?, parse_u32(k)?))
            }
            (Family::C, [k]) => Ok(Variable::c(parse_u32(k)?)),
            (Family::C, [j, k]) => {
                let stage = parse_u32(j)?;
                if stage == 1 {
                    return Err(bad());
                }
                Ok(Variable::c_staged(stage, parse_u32(k)?))
            }
            (Family::X, [k]) => {
                let k = parse_u32(k)?;
                if k == 1 {
                    return Err(bad());
                }
                Ok(Variable::x_indexed(k))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
