//! Series coefficients: a tagged union of plain rationals and
//! parameter polynomials.
//!
//! A whole [`crate::series::Series`] carries a single ring tag; mixed
//! Rat/Poly arithmetic promotes the rational side to a constant
//! polynomial, while two distinct parameters are a hard error.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::poly::{Param, Poly};
use crate::rat::{rati, Rat};

/// Coefficient ring tag of a series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ring {
    Rat,
    Poly(Param),
}

impl Ring {
    /// Smallest common ring, panicking on `Poly(s)` vs `Poly(t)`.
    pub fn join(self, other: Ring) -> Ring {
        match (self, other) {
            (Ring::Rat, r) | (r, Ring::Rat) => r,
            (Ring::Poly(p), Ring::Poly(q)) => {
                assert_eq!(p, q, "coefficient ring mismatch: {p} vs {q}");
                Ring::Poly(p)
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rat => f.write_str("Q"),
            Ring::Poly(p) => write!(f, "Q[{p}]"),
        }
    }
}

/// One series coefficient.
#[derive(Clone, Debug)]
pub enum Coef {
    Rat(Rat),
    Poly(Poly),
}

impl Coef {
    pub fn zero() -> Coef {
        Coef::Rat(Rat::zero())
    }

    pub fn one() -> Coef {
        Coef::Rat(rati(1))
    }

    pub fn from_i64(n: i64) -> Coef {
        Coef::Rat(rati(n))
    }

    pub fn ring(&self) -> Ring {
        match self {
            Coef::Rat(_) => Ring::Rat,
            Coef::Poly(p) => Ring::Poly(p.param()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coef::Rat(r) => r.is_zero(),
            Coef::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coef::Rat(r) => r.is_one(),
            Coef::Poly(p) => p.as_constant().is_some_and(|c| c.is_one()),
        }
    }

    /// Underlying rational if the coefficient is (a constant equal to) one.
    pub fn as_rat(&self) -> Option<Rat> {
        match self {
            Coef::Rat(r) => Some(r.clone()),
            Coef::Poly(p) => p.as_constant(),
        }
    }

    /// View in the given ring, promoting rationals to constant polynomials.
    pub fn promote(&self, ring: Ring) -> Coef {
        match (self, ring) {
            (Coef::Rat(r), Ring::Poly(param)) => Coef::Poly(Poly::constant(param, r.clone())),
            _ => {
                self.ring().join(ring);
                self.clone()
            }
        }
    }

    fn as_poly(&self, param: Param) -> Poly {
        match self {
            Coef::Rat(r) => Poly::constant(param, r.clone()),
            Coef::Poly(p) => {
                assert_eq!(p.param(), param, "coefficient ring mismatch");
                p.clone()
            }
        }
    }

    /// Multiplicative inverse; defined for nonzero rationals and nonzero
    /// constant polynomials only.
    pub fn inv(&self) -> Option<Coef> {
        match self {
            Coef::Rat(r) if !r.is_zero() => Some(Coef::Rat(r.recip())),
            Coef::Poly(p) => match p.as_constant() {
                Some(c) if !c.is_zero() => Some(Coef::Poly(Poly::constant(p.param(), c.recip()))),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn scale_rat(&self, c: &Rat) -> Coef {
        match self {
            Coef::Rat(r) => Coef::Rat(r * c),
            Coef::Poly(p) => Coef::Poly(p.scale(c)),
        }
    }

    /// Evaluate a polynomial coefficient at a rational point; rationals
    /// pass through.
    pub fn eval_param(&self, x: &Rat) -> Rat {
        match self {
            Coef::Rat(r) => r.clone(),
            Coef::Poly(p) => p.eval(x),
        }
    }

    /// Drop parameter-degree above `m` (jet discipline for truncated
    /// parameter expansions).
    pub fn truncate_param_degree(&self, m: usize) -> Coef {
        match self {
            Coef::Rat(_) => self.clone(),
            Coef::Poly(p) => Coef::Poly(p.truncate_degree(m)),
        }
    }

    fn binop(&self, other: &Coef, f: impl Fn(&Poly, &Poly) -> Poly, g: impl Fn(&Rat, &Rat) -> Rat) -> Coef {
        match self.ring().join(other.ring()) {
            Ring::Rat => match (self, other) {
                (Coef::Rat(a), Coef::Rat(b)) => Coef::Rat(g(a, b)),
                _ => unreachable!(),
            },
            Ring::Poly(param) => Coef::Poly(f(&self.as_poly(param), &other.as_poly(param))),
        }
    }
}

impl PartialEq for Coef {
    fn eq(&self, other: &Coef) -> bool {
        match (self, other) {
            (Coef::Rat(a), Coef::Rat(b)) => a == b,
            (Coef::Poly(a), Coef::Poly(b)) if a.param() == b.param() => a == b,
            // a constant polynomial equals the plain rational it carries
            _ => match (self.as_rat(), other.as_rat()) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            },
        }
    }
}

impl From<Rat> for Coef {
    fn from(r: Rat) -> Coef {
        Coef::Rat(r)
    }
}

impl From<Poly> for Coef {
    fn from(p: Poly) -> Coef {
        Coef::Poly(p)
    }
}

impl Add for &Coef {
    type Output = Coef;
    fn add(self, rhs: &Coef) -> Coef {
        self.binop(rhs, |a, b| a.add(b), |a, b| a + b)
    }
}

impl Sub for &Coef {
    type Output = Coef;
    fn sub(self, rhs: &Coef) -> Coef {
        self.binop(rhs, |a, b| a.sub(b), |a, b| a - b)
    }
}

impl Mul for &Coef {
    type Output = Coef;
    fn mul(self, rhs: &Coef) -> Coef {
        self.binop(rhs, |a, b| a.mul(b), |a, b| a * b)
    }
}

impl Neg for &Coef {
    type Output = Coef;
    fn neg(self) -> Coef {
        match self {
            Coef::Rat(r) => Coef::Rat(-r.clone()),
            Coef::Poly(p) => Coef::Poly(p.neg()),
        }
    }
}

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coef::Rat(r) => write!(f, "{r}"),
            Coef::Poly(p) => write!(f, "{p}"),
        }
    }
}
