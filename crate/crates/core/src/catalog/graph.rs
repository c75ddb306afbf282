//! Graphs `(t, u, v) ↦ (t, u, v, P(t, u, v))` of polynomials, differentiated
//! by hyper-dual evaluation. They serve as non-ideal controls.

use std::fmt;
use std::str::FromStr;

use crate::dual::Scalar;
use crate::geom::{ChartBox, CoordinateProgram};
use crate::{Error, Result};

/// One monomial `coeff · t^i u^j v^k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub coeff: f64,
    pub powers: [u32; 3],
}

/// Polynomial in the three chart coordinates.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial {
    pub terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c₀t² + c₁u² + c₂v²`.
    pub fn diagonal_quadratic(c: [f64; 3]) -> Self {
        Self {
            terms: (0..3)
                .map(|i| {
                    let mut powers = [0; 3];
                    powers[i] = 2;
                    Term { coeff: c[i], powers }
                })
                .collect(),
        }
    }

    pub fn eval<S: Scalar>(&self, x: &[S; 3]) -> S {
        self.terms.iter().fold(S::constant(0.0), |acc, term| {
            let mut m = S::constant(term.coeff);
            for (xi, &p) in x.iter().zip(&term.powers) {
                if p > 0 {
                    m = m * xi.powi(p as i32);
                }
            }
            acc + m
        })
    }
}

/// Accepted forms: `c1,c2,c3` for a diagonal quadratic, or
/// `coeff:i,j,k;coeff:i,j,k;...` for general monomials.
impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::zero());
        }
        let bad = |why: &str| Error::parameter(format!("cannot parse polynomial '{s}': {why}"));
        if !s.contains(':') {
            let c: Vec<f64> = s
                .split(',')
                .map(|x| x.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| bad(&e.to_string()))?;
            let c: [f64; 3] = c.try_into().map_err(|_| bad("expected three coefficients"))?;
            if c.iter().any(|x| !x.is_finite()) {
                return Err(bad("coefficients must be finite"));
            }
            return Ok(Self::diagonal_quadratic(c));
        }
        let mut terms = Vec::new();
        for chunk in s.split(';').filter(|c| !c.trim().is_empty()) {
            let (coeff, powers) = chunk.split_once(':').ok_or_else(|| bad("term needs 'coeff:i,j,k'"))?;
            let coeff: f64 = coeff.trim().parse().map_err(|_| bad("bad coefficient"))?;
            if !coeff.is_finite() {
                return Err(bad("coefficients must be finite"));
            }
            let p: Vec<u32> = powers
                .split(',')
                .map(|x| x.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad("bad exponent"))?;
            let powers: [u32; 3] = p.try_into().map_err(|_| bad("expected three exponents"))?;
            if powers.iter().any(|&e| e > 16) {
                return Err(bad("exponents above 16 are not supported"));
            }
            terms.push(Term { coeff, powers });
        }
        Ok(Self { terms })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| format!("{}:{},{},{}", t.coeff, t.powers[0], t.powers[1], t.powers[2]))
            .collect();
        f.write_str(&parts.join(";"))
    }
}

/// Half-width of the cube served for graphs.
pub const GRAPH_HALF_WIDTH: f64 = 1.0;

#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    pub poly: Polynomial,
}

impl CoordinateProgram for Graph {
    fn eval<S: Scalar>(&self, x: [S; 3]) -> [S; 4] {
        [x[0], x[1], x[2], self.poly.eval(&x)]
    }

    fn domain(&self) -> ChartBox {
        ChartBox::new([-GRAPH_HALF_WIDTH; 3], [GRAPH_HALF_WIDTH; 3]).expect("non-empty box")
    }
}
