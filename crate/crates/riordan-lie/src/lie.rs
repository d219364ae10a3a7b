//! The Lie algebra of the interpolation group and its exponential.
//!
//! A series `a` yields two infinite lower-triangular matrices: the
//! Toeplitz matrix `u_a` with entries `a[i-j]` and the column-weighted
//! matrix `d_a` with entries `j * a[i-j]`. Sums `u_a + d_b` form the Lie
//! algebra; brackets close by
//!
//! ```text
//! [u_a, u_b] = 0,   [d_a, u_b] = u_{x a b'},   [d_a, d_b] = d_{x(a b' - a' b)}.
//! ```
//!
//! `Exp(a; b)` is the generating series of column 0 of `exp(u_a + d_b)`.
//! Two engines compute it: a strict one (zero constant terms, exact over
//! Q) and an s-jet engine that handles arbitrary constant terms by
//! keeping the scaling parameter `s` polynomial. The remaining functions
//! verify the differential and algebraic identities satisfied by these
//! series, returning residuals that must vanish identically.

use crate::coef::Coef;
use crate::error::{Error, Result};
use crate::group::GroupElem;
use crate::poly::{Param, Poly};
use crate::rat::{factorial, rati, Rat};
use crate::riordan::{mat_mul, TriMat};
use crate::series::Series;

/// An element `u_a + d_b` of the Lie algebra, stored as the pair of
/// series `(a, b)` at one shared order.
#[derive(Clone, Debug, PartialEq)]
pub struct LieElem {
    a: Series,
    b: Series,
}

impl LieElem {
    pub fn new(a: Series, b: Series) -> Result<LieElem> {
        if a.order() != b.order() {
            return Err(Error::domain(format!(
                "Lie element parts must share one order (got {} and {})",
                a.order(),
                b.order()
            )));
        }
        a.ring().join(b.ring());
        if a.order() < 0 {
            return Err(Error::domain("Lie element needs order >= 0"));
        }
        if a.val() < 0 || b.val() < 0 {
            return Err(Error::domain("Lie element parts must be ordinary power series"));
        }
        Ok(LieElem { a, b })
    }

    pub fn a(&self) -> &Series {
        &self.a
    }

    pub fn b(&self) -> &Series {
        &self.b
    }

    pub fn order(&self) -> i64 {
        self.a.order()
    }

    /// Strict part: both series vanish at 0, so the matrix is strictly
    /// lower triangular.
    pub fn is_strict(&self) -> bool {
        self.a.coeff(0).is_zero() && self.b.coeff(0).is_zero()
    }

    pub fn truncate(&self, order: i64) -> LieElem {
        assert!(order >= 0, "a Lie element needs order >= 0");
        LieElem { a: self.a.truncate(order), b: self.b.truncate(order) }
    }

    pub fn add(&self, other: &LieElem) -> Result<LieElem> {
        LieElem::new(&self.a + &other.a, &self.b + &other.b)
    }

    pub fn scale(&self, c: &Rat) -> LieElem {
        LieElem { a: self.a.scale_rat(c), b: self.b.scale_rat(c) }
    }

    pub fn eq_through(&self, other: &LieElem, order: i64) -> bool {
        self.a.eq_jet(&other.a, order) && self.b.eq_jet(&other.b, order)
    }
}

/// Finite matrix of `u_a + d_b`: entry `(i, j) = a[i-j] + j * b[i-j]`.
pub fn lie_to_matrix(l: &LieElem, n: usize) -> Result<TriMat> {
    if l.order() < n as i64 - 1 {
        return Err(Error::domain(format!(
            "matrix of dimension {n} needs order >= {}, got {}",
            n as i64 - 1,
            l.order()
        )));
    }
    let mut m = TriMat::zero(n);
    for i in 0..n {
        for j in 0..=i {
            let k = (i - j) as i64;
            let e = &l.a.coeff(k) + &l.b.coeff(k).scale_rat(&rati(j as i64));
            m.set(i, j, e);
        }
    }
    Ok(m)
}

/// Lie bracket, assembled by bilinearity from the three closed-form
/// brackets of the generators:
/// `[u_a1 + d_b1, u_a2 + d_b2] = u_{x(b1 a2' - b2 a1')} + d_{x(b1 b2' - b1' b2)}`.
pub fn bracket(l1: &LieElem, l2: &LieElem) -> Result<LieElem> {
    if l1.order() != l2.order() {
        return Err(Error::domain("bracket needs matching orders"));
    }
    let n = l1.order();
    let a = &(&l1.b * &l2.a.derive()) - &(&l2.b * &l1.a.derive());
    let b = &(&l1.b * &l2.b.derive()) - &(&l1.b.derive() * &l2.b);
    LieElem::new(a.shift_up(1).truncate(n), b.shift_up(1).truncate(n))
}

/// Exponential of a strictly lower-triangular matrix (nilpotent, so the
/// sum `sum M^k / k!` is finite).
pub fn mexp_strict(m: &TriMat) -> Result<TriMat> {
    let n = m.dim();
    for i in 0..n {
        if !m.get(i, i).is_zero() {
            return Err(Error::domain("matrix exponential needs a strictly triangular input"));
        }
    }
    let mut sum = TriMat::identity(n);
    let mut pow = TriMat::identity(n);
    for k in 1..n {
        pow = mat_mul(&pow, m)?;
        if pow.is_zero() {
            break;
        }
        sum = sum.add(&pow.scale(&Coef::Rat(factorial(k as u64).recip())))?;
    }
    Ok(sum)
}

/// Logarithm of a unipotent matrix (unit diagonal), again a finite sum.
pub fn mlog_unipotent(m: &TriMat) -> Result<TriMat> {
    let n = m.dim();
    for i in 0..n {
        if !m.get(i, i).is_one() {
            return Err(Error::domain("matrix logarithm needs a unipotent input"));
        }
    }
    let dm = m.sub(&TriMat::identity(n))?;
    let mut sum = TriMat::zero(n);
    let mut pow = TriMat::identity(n);
    for k in 1..n {
        pow = mat_mul(&pow, &dm)?;
        if pow.is_zero() {
            break;
        }
        let c = Rat::new((if k % 2 == 1 { 1 } else { -1 }).into(), (k as i64).into());
        sum = sum.add(&pow.scale(&Coef::Rat(c)))?;
    }
    Ok(sum)
}

fn require_strict(name: &str, s: &Series) -> Result<()> {
    if s.order() < 0 || !s.coeff(0).is_zero() || s.val() < 0 {
        return Err(Error::domain(format!(
            "{name} requires a series with zero constant term"
        )));
    }
    Ok(())
}

/// `Exp(a; b)` for `a, b` with zero constant terms, through order `n`.
///
/// Uses the recursion `g_0 = 1`, `g_{k+1} = a g_k + x b g_k'`; the
/// valuation of `g_k` is at least `k`, so the sum
/// `sum g_k / k!` needs only `k <= n` and every coefficient is an exact
/// rational.
pub fn exp_strict(a: &Series, b: &Series, n: i64) -> Result<Series> {
    require_strict("exp_strict", a)?;
    require_strict("exp_strict", b)?;
    if a.order() < n || b.order() < n {
        return Err(Error::domain(format!(
            "exp_strict at order {n} needs both arguments at order >= {n}"
        )));
    }
    let a = a.truncate(n);
    let xb = b.truncate(n).shift_up(1);
    let mut sum = Series::one(n);
    let mut g = Series::one(n);
    for k in 1..=n {
        g = if g.order() > g.val() {
            &(&a * &g) + &(&xb * &g.derive())
        } else {
            &a * &g
        };
        g = g.truncate(n.min(g.order()));
        if g.is_zero() {
            break;
        }
        sum = &sum + &g.scale_rat(&factorial(k as u64).recip());
    }
    Ok(sum.truncate(n))
}

/// The s-jet engine: `Exp(s a; s b)` as a series in `x` whose
/// coefficients are polynomials in `s` of degree <= `m`. Handles
/// arbitrary constant terms of `a` and `b` exactly.
pub fn exp_spoly(a: &Series, b: &Series, n: i64, m: usize) -> Result<Series> {
    if a.val() < 0 || b.val() < 0 {
        return Err(Error::domain("exp_spoly requires ordinary power series"));
    }
    if a.order() < n || b.order() < n {
        return Err(Error::domain(format!(
            "exp_spoly at order {n} needs both arguments at order >= {n}"
        )));
    }
    let a = a.truncate(n);
    let xb = b.truncate(n).shift_up(1);
    let mut sum = Series::one(n).scale(&Coef::Poly(Poly::one(Param::S)));
    let mut g = Series::one(n);
    for k in 1..=m {
        // the derivative costs one order, multiplying by x*b gives it
        // back; the min-order rules of the ring ops track this exactly
        g = if g.order() > g.val() {
            &(&a * &g) + &(&xb * &g.derive())
        } else {
            &a * &g
        };
        g = g.truncate(n.min(g.order()));
        if g.is_zero() {
            break;
        }
        let spow = Coef::Poly(Poly::monomial(Param::S, factorial(k as u64).recip(), k));
        sum = &sum.truncate(g.order().min(sum.order())) + &g.scale(&spow);
    }
    Ok(sum)
}

/// Expansion of `Exp(s a; s b)` around a shifted basepoint `xi`:
/// the recursion `G_{k+1} = {a o (x+xi)} G_k + (x+xi) {b o (x+xi)} G_k'`
/// run with exact polynomial shifts. Only defined when `a` and `b` are
/// polynomials; the given jets are read as exactly those polynomials.
pub fn exp_spoly_shifted(a: &Series, b: &Series, xi: &Rat, n: i64, m: usize) -> Result<Series> {
    if a.val() < 0 || b.val() < 0 {
        return Err(Error::domain("polynomial arguments required"));
    }
    // the derivative costs one order per step with no valuation to
    // recover it, so work with the polynomials padded to n + m
    let head = n + m as i64;
    let shift = |p: &Series| -> Series {
        // p(x + xi) by Horner in (x + xi), exact for polynomials
        let lin = &Series::x(head) + &Series::constant(Coef::Rat(xi.clone()), head);
        let mut acc = Series::zero(head);
        for k in (0..=p.order()).rev() {
            acc = (&acc * &lin).truncate(head);
            acc = &acc + &Series::constant(p.coeff(k), head);
        }
        acc
    };
    let a_sh = shift(a);
    let mult = {
        let lin = &Series::x(head) + &Series::constant(Coef::Rat(xi.clone()), head);
        (&lin * &shift(b)).truncate(head)
    };
    let mut sum = Series::one(n).scale(&Coef::Poly(Poly::one(Param::S)));
    let mut g = Series::one(head);
    for k in 1..=m {
        g = if g.order() > g.val() {
            &(&a_sh.truncate(g.order()) * &g) + &(&mult.truncate(g.order()) * &g.derive())
        } else {
            &a_sh.truncate(g.order()) * &g
        };
        g = g.truncate((head - k as i64).min(g.order()));
        let spow = Coef::Poly(Poly::monomial(Param::S, factorial(k as u64).recip(), k));
        sum = &sum + &g.truncate(n.min(g.order())).scale(&spow);
    }
    Ok(sum.truncate(n))
}

/// `exp(u_a + d_b)` as a group element
/// `(Exp(a; b), x Exp(b; b))`, both components at order `n`.
pub fn exp_group(a: &Series, b: &Series, n: i64) -> Result<GroupElem> {
    let first = exp_strict(a, b, n)?;
    let z = exp_strict(b, b, n)?;
    GroupElem::new(first, z.shift_up(1).truncate(n))
}

/// Residuals of the autonomous ODE system satisfied by
/// `y = Exp(a; b)`, `z = Exp(b; b)`:
///
/// ```text
/// x b y' - y { a o (x z) - a },   x b z' - z { b o (x z) - b }.
/// ```
///
/// Both residuals vanish identically; they are returned for inspection.
pub fn ode_residual_main(a: &Series, b: &Series, n: i64) -> Result<(Series, Series)> {
    let y = exp_strict(a, b, n)?;
    let z = exp_strict(b, b, n)?;
    ode_residuals_of(a, b, &y, &z)
}

/// Same residuals in the s-jet regime (arbitrary constant terms).
pub fn ode_residual_spoly(a: &Series, b: &Series, n: i64, m: usize) -> Result<(Series, Series)> {
    let y = exp_spoly(a, b, n, m)?;
    let z = exp_spoly(b, b, n, m)?;
    let (r1, r2) = ode_residuals_of(a, b, &y, &z)?;
    Ok((r1.truncate_param_degree(m), r2.truncate_param_degree(m)))
}

fn ode_residuals_of(a: &Series, b: &Series, y: &Series, z: &Series) -> Result<(Series, Series)> {
    let scale = match y.ring() {
        crate::coef::Ring::Poly(p) => Coef::Poly(Poly::var(p)),
        crate::coef::Ring::Rat => Coef::one(),
    };
    // in the jet regime the equations hold for s a, s b in place of a, b
    let a = &a.scale(&scale);
    let b = &b.scale(&scale);
    let xz = (z * &Series::x(z.order() + 1)).truncate(z.order() + 1);
    let r1 = {
        let lhs = (&b.shift_up(1) * &y.derive()).truncate(y.order());
        let rhs = (y * &(&a.compose(&xz)? - a)).truncate(y.order());
        &lhs - &rhs
    };
    let r2 = {
        let lhs = (&b.shift_up(1) * &z.derive()).truncate(z.order());
        let rhs = (z * &(&b.compose(&xz)? - b)).truncate(z.order());
        &lhs - &rhs
    };
    Ok((r1, r2))
}

/// Residual of the flow invariant `F(x Exp(s b; s b)) = F(x) + s` where
/// `F` is the residue-free primitive of `1/(x b)`. The caller states the
/// target x-order `n` and s-degree `m`; `b` must carry enough order for
/// the Laurent inversion (roughly `n + 2 (valuation(b) + 1)`).
pub fn f_invariant_residual(b: &Series, n: i64, m: usize) -> Result<Series> {
    require_strict("f_invariant_residual", b)?;
    let xb = b.shift_up(1);
    let f_prime = xb.inverse()?;
    let (f, residue) = f_prime.laurent_primitive()?;
    if !residue.is_zero() {
        return Err(Error::domain(
            "1/(x b) has a nonzero residue at 0; the log-corrected case is unsupported",
        ));
    }
    let z = exp_spoly(b, b, b.order(), m)?;
    let xz = (&z * &Series::x(z.order() + 1)).truncate(z.order() + 1);
    let lhs = f.compose(&xz)?;
    let s_term = Series::constant(Coef::Poly(Poly::var(Param::S)), lhs.order());
    let resid = &(&lhs - &f.truncate(lhs.order().min(f.order()))) - &s_term;
    if resid.order() < n {
        return Err(Error::domain(format!(
            "beta carries too little order: residual reliable only through {}, need {n}",
            resid.order()
        )));
    }
    Ok(resid.truncate(n).truncate_param_degree(m))
}

/// Horner evaluation of `sum coeff_i * Z^{e_i}`; a zero result certifies
/// the algebraic relation through the truncation carried by the inputs.
pub fn algebraic_residual(relation: &[(Series, u32)], z: &Series) -> Result<Series> {
    let mut exps: Vec<u32> = relation.iter().map(|(_, e)| *e).collect();
    exps.sort_unstable();
    exps.dedup();
    let mut acc = Series::zero(z.order());
    let mut zpow = Series::one(z.order() + exps.iter().max().map_or(0, |&e| e as i64));
    let mut cur = 0u32;
    for &e in &exps {
        while cur < e {
            zpow = &zpow * z;
            cur += 1;
        }
        for (c, ce) in relation {
            if *ce == e {
                let term = (c * &zpow).truncate(acc.order().min((c * &zpow).order()));
                acc = &acc.truncate(term.order()) + &term;
            }
        }
    }
    Ok(acc)
}

/// The family of §10: recursion-built s-jet of
/// `sum G_k s^k / k!` with `G_0 = 1`, `G_{k+1} = ((K/(1-Kx))^a G_k)'`.
pub fn holom_family_sum(k_const: &Rat, a: u32, n: i64, m: usize) -> Result<Series> {
    if a < 1 {
        return Err(Error::domain("the family needs an integer exponent a >= 1"));
    }
    let head = n + m as i64 + 1;
    let w = base_rational(k_const, head).powi(a as i64)?;
    let mut sum = Series::one(n).scale(&Coef::Poly(Poly::one(Param::S)));
    let mut g = Series::one(head);
    for k in 1..=m {
        g = (&w.truncate(g.order()) * &g).truncate(g.order()).derive();
        let spow = Coef::Poly(Poly::monomial(Param::S, factorial(k as u64).recip(), k));
        sum = &sum + &g.truncate(n.min(g.order())).scale(&spow);
    }
    Ok(sum.truncate(n))
}

/// Closed form of the same sum, expanded by the generalized binomial
/// series in `s`: `(1 - s (a+1) Y)^{-a/(a+1)}` with `Y = (K/(1-Kx))^{a+1}`.
pub fn holom_family_closed(k_const: &Rat, a: u32, n: i64, m: usize) -> Result<Series> {
    if a < 1 {
        return Err(Error::domain("the family needs an integer exponent a >= 1"));
    }
    let y = base_rational(k_const, n).powi(a as i64 + 1)?;
    let gamma = Rat::new((a as i64).into(), (a as i64 + 1).into());
    let mut sum = Series::one(n).scale(&Coef::Poly(Poly::one(Param::S)));
    let mut coef = rati(1);
    let mut ypow = Series::one(n);
    for k in 0..m {
        // rising factorial (gamma)(gamma+1)...(gamma+k)/ (k+1)! times (a+1)^{k+1}
        coef = coef * (&gamma + rati(k as i64)) / rati(k as i64 + 1) * rati(a as i64 + 1);
        ypow = (&ypow * &y).truncate(n);
        let spow = Coef::Poly(Poly::monomial(Param::S, coef.clone(), k + 1));
        sum = &sum + &ypow.scale(&spow);
    }
    Ok(sum)
}

/// The explicit product formula for the same `G_k`:
/// `G_k = prod_{j=1..k} (j(a+1) - 1) * (K/(1-Kx))^{k(a+1)}`.
pub fn holom_family_product_term(k_const: &Rat, a: u32, k: usize, n: i64) -> Result<Series> {
    let mut c = rati(1);
    for j in 1..=k {
        c *= rati((j as i64) * (a as i64 + 1) - 1);
    }
    let base = base_rational(k_const, n);
    Ok(base.powi((k as i64) * (a as i64 + 1))?.truncate(n).scale_rat(&c))
}

/// `K/(1-Kx)` at the given order.
fn base_rational(k_const: &Rat, order: i64) -> Series {
    Series::from_fn(0, order, |j| {
        Coef::Rat(num_traits::pow::Pow::pow(k_const.clone(), (j + 1) as u64))
    })
}
