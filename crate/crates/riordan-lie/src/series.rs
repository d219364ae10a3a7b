//! Truncated formal (Laurent) power series over an exact coefficient ring.
//!
//! A [`Series`] stores the coefficients of `x^val .. x^order` and nothing
//! else: the coefficients up to `order` are exact, everything above is
//! unknown. Binary operations compute the largest order the operands
//! justify (never more), so a series never claims spurious digits.
//! Negative `val` gives Laurent jets with finite principal part; they are
//! the same type, not a separate one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::coef::{Coef, Ring};
use crate::error::{Error, Result};
use crate::rat::{factorial, rat, rati, Rat};

#[derive(Clone, Debug)]
pub struct Series {
    val: i64,
    order: i64,
    coeffs: Vec<Coef>, // exponents val..=order
}

impl Series {
    /// Build from explicit coefficients for exponents `val..=order`.
    /// All coefficients are promoted to a common ring; leading zeros at
    /// negative exponents are trimmed away.
    pub fn new(val: i64, order: i64, coeffs: Vec<Coef>) -> Series {
        assert!(val <= order, "series needs val <= order (got {val} > {order})");
        assert_eq!(
            coeffs.len() as i64,
            order - val + 1,
            "coefficient count must equal order - val + 1"
        );
        let ring = coeffs.iter().fold(Ring::Rat, |r, c| r.join(c.ring()));
        let coeffs = coeffs.into_iter().map(|c| c.promote(ring)).collect();
        let mut s = Series { val, order, coeffs };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.val < 0 && self.val < self.order && self.coeffs[0].is_zero() {
            self.coeffs.remove(0);
            self.val += 1;
        }
    }

    pub fn from_rats(val: i64, order: i64, rats: Vec<Rat>) -> Series {
        Series::new(val, order, rats.into_iter().map(Coef::Rat).collect())
    }

    pub fn from_ints(val: i64, order: i64, ints: &[i64]) -> Series {
        Series::from_rats(val, order, ints.iter().map(|&n| rati(n)).collect())
    }

    /// Coefficients given by a function of the exponent.
    pub fn from_fn(val: i64, order: i64, f: impl FnMut(i64) -> Coef) -> Series {
        Series::new(val, order, (val..=order).map(f).collect())
    }

    pub fn zero(order: i64) -> Series {
        let val = order.min(0);
        Series { val, order, coeffs: vec![Coef::zero(); (order - val + 1) as usize] }
    }

    pub fn one(order: i64) -> Series {
        Series::monomial(Coef::one(), 0, order)
    }

    /// The identity of composition, `x`.
    pub fn x(order: i64) -> Series {
        Series::monomial(Coef::one(), 1, order)
    }

    /// `c * x^k`, exact through `order`.
    pub fn monomial(c: Coef, k: i64, order: i64) -> Series {
        assert!(k <= order, "monomial exponent beyond order");
        let val = k.min(0);
        let mut coeffs = vec![Coef::zero(); (order - val + 1) as usize];
        coeffs[(k - val) as usize] = c;
        let mut s = Series { val, order, coeffs };
        s.trim();
        s
    }

    /// Constant series `c`.
    pub fn constant(c: Coef, order: i64) -> Series {
        Series::monomial(c, 0, order)
    }

    /// `1/(1-x) = 1 + x + x^2 + ...`
    pub fn geometric(order: i64) -> Series {
        Series::from_fn(0, order, |_| Coef::one())
    }

    /// `x/(1-x) = x + x^2 + ...`
    pub fn x_over_one_minus_x(order: i64) -> Series {
        Series::from_fn(0, order, |k| if k == 0 { Coef::zero() } else { Coef::one() })
    }

    /// `e^x` jet.
    pub fn exp_x(order: i64) -> Series {
        Series::from_fn(0, order, |k| Coef::Rat(factorial(k as u64).recip()))
    }

    /// `e^x - 1` jet.
    pub fn exp_x_minus_one(order: i64) -> Series {
        Series::from_fn(0, order, |k| {
            if k == 0 {
                Coef::zero()
            } else {
                Coef::Rat(factorial(k as u64).recip())
            }
        })
    }

    /// `x + x^2`.
    pub fn x_plus_x2(order: i64) -> Series {
        Series::from_fn(0, order, |k| if k == 1 || k == 2 { Coef::one() } else { Coef::zero() })
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Lowest stored exponent (may sit below the true valuation).
    pub fn val(&self) -> i64 {
        self.val
    }

    /// Lowest exponent with a nonzero coefficient. For a jet that is zero
    /// through its order this returns `order + 1`: an all-zero jet of
    /// order `N` could still be `x^(N+1) + ...`.
    pub fn valuation(&self) -> i64 {
        for k in self.val..=self.order {
            if !self.coeff(k).is_zero() {
                return k;
            }
        }
        self.order + 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coef::is_zero)
    }

    pub fn ring(&self) -> Ring {
        self.coeffs.iter().fold(Ring::Rat, |r, c| r.join(c.ring()))
    }

    /// Coefficient of `x^k`. Zero below the stored range; reading above
    /// the truncation order is a bug and panics.
    pub fn coeff(&self, k: i64) -> Coef {
        assert!(k <= self.order, "coefficient x^{k} beyond truncation order {}", self.order);
        if k < self.val {
            Coef::zero()
        } else {
            self.coeffs[(k - self.val) as usize].clone()
        }
    }

    /// Rational coefficient of `x^k` (panics on polynomial coefficients).
    pub fn coeff_rat(&self, k: i64) -> Rat {
        self.coeff(k).as_rat().expect("coefficient is not a plain rational")
    }

    /// Restrict to a smaller truncation order.
    pub fn truncate(&self, order: i64) -> Series {
        assert!(order <= self.order, "truncate cannot raise the order");
        let val = self.val.min(order);
        Series::new(val, order, (val..=order).map(|k| self.coeff(k)).collect())
    }

    /// Zero-pad up to a higher order. Private on purpose: claiming
    /// exactness is only legitimate where an explicit order analysis has
    /// been done (compose, reversion).
    fn pad_order(&self, order: i64) -> Series {
        if order <= self.order {
            return self.truncate(order);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(std::iter::repeat_n(Coef::zero(), (order - self.order) as usize));
        Series { val: self.val, order, coeffs }
    }

    /// Exact multiplication by `x^k` (k may be negative).
    pub fn shift_up(&self, k: i64) -> Series {
        let mut s = Series { val: self.val + k, order: self.order + k, coeffs: self.coeffs.clone() };
        s.trim();
        s
    }

    pub fn scale(&self, c: &Coef) -> Series {
        Series::new(self.val, self.order, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rat(&self, c: &Rat) -> Series {
        Series::new(self.val, self.order, self.coeffs.iter().map(|a| a.scale_rat(c)).collect())
    }

    /// Substitution `x -> K*x`: multiplies the coefficient of `x^k` by `K^k`.
    pub fn scale_arg(&self, k_factor: &Rat) -> Series {
        Series::from_fn(self.val, self.order, |k| {
            let p = if k >= 0 {
                num_traits::pow::Pow::pow(k_factor.clone(), k as u64)
            } else {
                num_traits::pow::Pow::pow(k_factor.recip(), (-k) as u64)
            };
            self.coeff(k).scale_rat(&p)
        })
    }

    /// Termwise derivative; the order drops by one.
    pub fn derive(&self) -> Series {
        assert!(self.order > self.val, "derivative needs at least two stored coefficients");
        let coeffs = (self.val..=self.order)
            .map(|k| self.coeff(k).scale_rat(&rati(k)))
            .collect();
        Series::new(self.val - 1, self.order - 1, coeffs)
    }

    /// Primitive with zero constant term. Requires valuation >= 0; the
    /// output order equals the input order (the would-be `x^(order+1)`
    /// coefficient is dropped rather than claimed).
    pub fn integrate0(&self) -> Result<Series> {
        if self.order < 0 {
            return Err(Error::domain("integrate0 needs order >= 0"));
        }
        for k in self.val..0 {
            if !self.coeff(k).is_zero() {
                return Err(Error::domain(format!(
                    "integrate0 of a Laurent jet (nonzero coefficient at x^{k})"
                )));
            }
        }
        Ok(Series::from_fn(0, self.order, |k| {
            if k == 0 {
                Coef::zero()
            } else {
                self.coeff(k - 1).scale_rat(&rati(k).recip())
            }
        }))
    }

    /// Primitive of a Laurent jet together with its residue: returns
    /// `(F, residue)` with `F' = self - residue * x^(-1)` and `F(0)`-part
    /// fixed to 0. The residue is reported, not an error.
    pub fn laurent_primitive(&self) -> Result<(Series, Coef)> {
        if self.order < 0 {
            return Err(Error::domain("laurent_primitive needs order >= 0"));
        }
        let residue = if self.val <= -1 { self.coeff(-1) } else { Coef::zero() };
        let val_out = (self.val + 1).min(0);
        let f = Series::from_fn(val_out, self.order, |k| {
            if k == 0 {
                Coef::zero()
            } else {
                self.coeff(k - 1).scale_rat(&rati(k).recip())
            }
        });
        Ok((f, residue))
    }

    /// Multiplicative inverse. The leading coefficient must be invertible.
    pub fn inverse(&self) -> Result<Series> {
        if self.is_zero() {
            return Err(Error::domain("inverse of (a jet of) the zero series"));
        }
        let v = self.valuation();
        let u = self.shift_up(-v); // unit part, valuation 0
        let n = u.order;
        let u0inv = u
            .coeff(0)
            .inv()
            .ok_or_else(|| Error::domain("leading coefficient is not invertible"))?;
        let mut w: Vec<Coef> = Vec::with_capacity((n + 1) as usize);
        w.push(u0inv.clone());
        for k in 1..=n {
            let mut acc = Coef::zero();
            for j in 1..=k {
                acc = &acc + &(&u.coeff(j) * &w[(k - j) as usize]);
            }
            w.push(&(-&acc) * &u0inv);
        }
        Ok(Series::new(0, n, w).shift_up(-v))
    }

    pub fn div(&self, other: &Series) -> Result<Series> {
        Ok(self * &other.inverse()?)
    }

    /// Composition `self(inner)`; `inner` must have valuation >= 1, and
    /// additionally an invertible leading coefficient when `self` has
    /// Laurent terms. The result order is the largest one the operands
    /// justify (all internal padding below is backed by that analysis).
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if inner.order >= 0 && !inner.coeff(0).is_zero() {
            return Err(Error::domain("composition requires an inner series without constant term"));
        }
        let vi = inner.valuation(); // >= 1, or order+1 for a zero jet
        if vi < 1 {
            return Err(Error::domain("composition requires inner valuation >= 1"));
        }
        let vo = self.valuation();
        if vo > self.order {
            return Ok(Series::zero(self.order)); // zero jet stays zero
        }
        let no = self.order;
        let ni = inner.order;

        // Exactness analysis. The unknown tail of the outer jet enters at
        // exponent vi*(no+1); the inner tail enters each term o_k*inner^k
        // at ni + (k-1)*vi, worst at k = 1 and, for Laurent outers, at
        // the most negative k.
        let mut w = vi.checked_mul(no + 1).expect("order overflow") - 1;
        if no >= 1 {
            w = w.min(ni);
        }
        if self.val < 0 {
            w = w.min(ni + (self.val - 1) * vi);
        }
        if w < 0 {
            return Err(Error::domain("composition leaves no representable coefficients"));
        }

        let ti = if ni >= w { inner.truncate(w) } else { inner.pad_order(w) };

        // Nonnegative powers by Horner; coeff() is zero below the
        // stored range, so starting at no and walking down to 0 is exact.
        let mut result = Series::constant(self.coeff(no), w);
        for k in (0..no).rev() {
            result = (&result * &ti).pad_order(w).truncate(w);
            result = &result + &Series::constant(self.coeff(k), w);
        }

        // Laurent part via powers of inner^{-1} = x^{-vi} u^{-1}.
        if self.val < 0 {
            let depth = -self.val;
            let headroom = w + depth * vi;
            let u = ti.shift_up(-vi).pad_order(headroom);
            let uinv = u.inverse()?.pad_order(headroom);
            let mut p = Series::one(headroom);
            for k in 1..=depth {
                p = (&p * &uinv).pad_order(headroom).truncate(headroom);
                let c = self.coeff(-k);
                if !c.is_zero() {
                    result = &result + &p.scale(&c).shift_up(-k * vi);
                }
            }
        }
        Ok(result.truncate(w.min(result.order)))
    }

    /// Compositional inverse of a valuation-1 series with invertible
    /// linear coefficient: `self(rev) = rev(self) = x` through the order.
    pub fn reversion(&self) -> Result<Series> {
        if self.order >= 0 && !self.coeff(0).is_zero() {
            return Err(Error::domain("reversion requires zero constant term"));
        }
        if self.order < 1 {
            return Err(Error::domain("reversion needs order >= 1"));
        }
        let a1 = self.coeff(1);
        let a1inv = a1
            .inv()
            .ok_or_else(|| Error::domain("reversion requires an invertible linear coefficient"))?;
        if self.valuation() != 1 {
            return Err(Error::domain("reversion requires valuation exactly 1"));
        }
        let n = self.order;
        let mut rv: Vec<Coef> = vec![a1inv.clone()]; // exponents 1..
        for k in 2..=n {
            let guess = Series::new(1, k, {
                let mut c = rv.clone();
                c.push(Coef::zero());
                c
            });
            let comp = self.truncate(k).compose(&guess)?;
            rv.push(&(-&comp.coeff(k)) * &a1inv);
        }
        Ok(Series::new(1, n, rv))
    }

    /// Principal logarithm of a series with constant term exactly 1.
    pub fn log1p(&self) -> Result<Series> {
        if self.order < 0 || !self.coeff(0).is_one() {
            return Err(Error::domain("log1p requires constant term exactly 1"));
        }
        let n = self.order;
        let m = self - &Series::one(n);
        let mut acc = Series::zero(n);
        for k in (1..=n).rev() {
            acc = (&acc * &m).truncate(n);
            acc = &acc + &Series::constant(Coef::Rat(rat(if k % 2 == 1 { 1 } else { -1 }, k)), n);
        }
        Ok((&acc * &m).truncate(n))
    }

    /// Exponential of a series with zero constant term.
    pub fn exps(&self) -> Result<Series> {
        if self.order < 0 {
            return Err(Error::domain("exps needs order >= 0"));
        }
        if !self.coeff(0).is_zero() {
            return Err(Error::domain("exps requires zero constant term"));
        }
        if self.val < 0 {
            return Err(Error::domain("exps of a Laurent jet"));
        }
        let n = self.order;
        let a = self.truncate(n.min(self.order)).pad_order(n);
        let mut acc = Series::zero(n);
        for k in (1..=n).rev() {
            acc = (&acc * &a).truncate(n);
            acc = &acc + &Series::constant(Coef::Rat(factorial(k as u64).recip()), n);
        }
        acc = (&acc * &a).truncate(n);
        Ok(&acc + &Series::one(n))
    }

    /// Rational power of a series with constant term exactly 1:
    /// `A^k = exp(k log A)`.
    pub fn powq(&self, k: &Rat) -> Result<Series> {
        self.log1p()?.scale_rat(k).exps()
    }

    /// Integer power of any series with invertible leading coefficient
    /// (negative exponents go through the inverse).
    pub fn powi(&self, k: i64) -> Result<Series> {
        if k == 0 {
            return Ok(Series::one(self.order));
        }
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = base.clone();
        for _ in 1..k.abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Jet equality through the given order (both operands must carry it).
    pub fn eq_jet(&self, other: &Series, through: i64) -> bool {
        assert!(
            self.order >= through && other.order >= through,
            "eq_jet beyond an operand's order"
        );
        let lo = self.val.min(other.val).min(0);
        (lo..=through).all(|k| self.coeff(k) == other.coeff(k))
    }

    /// Truncate every polynomial coefficient to parameter-degree <= `m`.
    pub fn truncate_param_degree(&self, m: usize) -> Series {
        Series::new(
            self.val,
            self.order,
            self.coeffs.iter().map(|c| c.truncate_param_degree(m)).collect(),
        )
    }

    /// Evaluate polynomial coefficients at a rational parameter value.
    pub fn eval_param(&self, x: &Rat) -> Series {
        Series::from_rats(self.val, self.order, (self.val..=self.order).map(|k| self.coeff(k).eval_param(x)).collect())
    }
}

impl PartialEq for Series {
    /// Jets are equal when they carry the same order and the same
    /// coefficients (storage offsets do not matter).
    fn eq(&self, other: &Series) -> bool {
        self.order == other.order && self.eq_jet(other, self.order)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let order = self.order.min(rhs.order);
        let val = self.val.min(rhs.val).min(order);
        Series::from_fn(val, order, |k| {
            let a = if k <= self.order { self.coeff(k) } else { Coef::zero() };
            let b = if k <= rhs.order { rhs.coeff(k) } else { Coef::zero() };
            &a + &b
        })
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self + &(-rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::new(self.val, self.order, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let va = self.valuation();
        let vb = rhs.valuation();
        let order = (self.order + vb).min(rhs.order + va);
        let val = (self.val + rhs.val).min(order);
        let mut coeffs = vec![Coef::zero(); (order - val + 1) as usize];
        for i in self.val..=self.order {
            let a = self.coeff(i);
            if a.is_zero() {
                continue;
            }
            let jmax = (order - i).min(rhs.order);
            for j in rhs.val..=jmax {
                let b = rhs.coeff(j);
                if b.is_zero() {
                    continue;
                }
                let k = (i + j - val) as usize;
                coeffs[k] = &coeffs[k] + &(&a * &b);
            }
        }
        Series::new(val, order, coeffs)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in self.val..=self.order {
            let c = self.coeff(k);
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = match &c {
                Coef::Rat(r) if r.is_negative() => ("-", Coef::Rat(-r.clone()).to_string()),
                Coef::Poly(_) => ("+", format!("({c})")),
                _ => ("+", c.to_string()),
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if sign == "-" { "-" } else { "+" })?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != "1" {
                    write!(f, "{mag}*")?;
                }
                if k == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{k}")?;
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order + 1)
    }
}
