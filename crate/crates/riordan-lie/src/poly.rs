//! Univariate polynomials over Q, tagged by their formal parameter.
//!
//! Three parameters occur: `s` (the scaling of `Exp(s*a; s*b)` jets),
//! `t` (the variable of the Andre polynomials and the even-tree family)
//! and `u` (the column variable of polynomial matrices). A polynomial
//! knows its parameter so that mixed-parameter arithmetic is rejected.

use std::fmt;

use num_traits::{One, Zero};

use crate::rat::{rati, Rat};

/// Formal parameter name carried by [`Poly`] coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    S,
    T,
    U,
}

impl Param {
    pub fn as_str(self) -> &'static str {
        match self {
            Param::S => "s",
            Param::T => "t",
            Param::U => "u",
        }
    }

    pub fn parse(s: &str) -> Option<Param> {
        match s {
            "s" => Some(Param::S),
            "t" => Some(Param::T),
            "u" => Some(Param::U),
            _ => None,
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Dense polynomial in one parameter; `coeffs[k]` is the degree-`k`
/// coefficient and the last stored coefficient is nonzero (the zero
/// polynomial stores an empty list).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    param: Param,
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(param: Param, mut coeffs: Vec<Rat>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { param, coeffs }
    }

    pub fn zero(param: Param) -> Poly {
        Poly { param, coeffs: Vec::new() }
    }

    pub fn constant(param: Param, c: Rat) -> Poly {
        Poly::new(param, vec![c])
    }

    pub fn one(param: Param) -> Poly {
        Poly::constant(param, rati(1))
    }

    /// `c * param^k`.
    pub fn monomial(param: Param, c: Rat, k: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero(param);
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly { param, coeffs }
    }

    /// The parameter itself as a degree-1 polynomial.
    pub fn var(param: Param) -> Poly {
        Poly::monomial(param, rati(1), 1)
    }

    pub fn param(&self) -> Param {
        self.param
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// True iff the polynomial is a constant (degree <= 0).
    pub fn as_constant(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn same_param(&self, other: &Poly) -> Param {
        assert_eq!(
            self.param, other.param,
            "parameter mismatch: {} vs {}",
            self.param, other.param
        );
        self.param
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let param = self.same_param(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Poly::new(param, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly { param: self.param, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let param = self.same_param(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(param);
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(param, coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.param, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rati(k as i64))
            .collect();
        Poly::new(self.param, coeffs)
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Argument shift `p(u) -> p(u + h)`, exact via Horner in `(u + h)`.
    pub fn shift(&self, h: &Rat) -> Poly {
        let mut acc = Poly::zero(self.param);
        let lin = Poly::new(self.param, vec![h.clone(), rati(1)]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Poly::constant(self.param, c.clone()));
        }
        acc
    }

    /// Truncate to degree <= `m`.
    pub fn truncate_degree(&self, m: usize) -> Poly {
        if self.coeffs.len() <= m + 1 {
            return self.clone();
        }
        Poly::new(self.param, self.coeffs[..=m].to_vec())
    }

    /// Unique polynomial of degree < `points.len()` through the given
    /// points, by Lagrange interpolation over Q. Panics on repeated
    /// abscissae.
    pub fn interpolate(param: Param, points: &[(Rat, Rat)]) -> Poly {
        let mut acc = Poly::zero(param);
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Poly::constant(param, yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let dx = xi - xj;
                assert!(!dx.is_zero(), "interpolation points must be distinct");
                // (u - xj) / (xi - xj)
                let lin = Poly::new(param, vec![-xj / &dx, dx.recip()]);
                basis = basis.mul(&lin);
            }
            acc = acc.add(&basis);
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = if c < &Rat::zero() { -c.clone() } else { c.clone() };
            if first {
                if c < &Rat::zero() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c < &Rat::zero() {
                f.write_str("-")?;
            } else {
                f.write_str("+")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", self.param)?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}
