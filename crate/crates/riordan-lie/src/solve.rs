//! Reciprocal functions of the two-variable exponential: recover `a`
//! from `Exp(a; b) = g` (for fixed `b`) and `b` from `Exp(b; b) = g`.
//!
//! The solver is the one-coefficient-per-step bootstrap: the coefficient
//! `a_n` enters `[x^n] Exp(a; b)` linearly with factor `P_n(b_0)` where
//! `P_n(u) = sum_{k=1..n} (n u)^{k-1} / k!`. In the exact regime handled
//! here (`g` unipotent, `b` without constant term) `P_n(0) = 1`, so each
//! step is division-free. The root guard for general `b_0` is kept as an
//! exact predicate.

use crate::error::{Error, Result};
use crate::group::GroupElem;
use crate::lie::{exp_strict, lie_to_matrix, mlog_unipotent, LieElem};
use crate::poly::{Param, Poly};
use crate::rat::{abs_at_least, factorial, rati, Rat};
use crate::riordan::rho;
use crate::series::Series;

/// `P_n(u) = sum_{k=1}^{n} (n u)^{k-1} / k!`; `P_n(0) = 1`, degree `n-1`.
pub fn pn_poly(n: usize) -> Result<Poly> {
    if n < 1 {
        return Err(Error::domain("P_n is defined for n >= 1"));
    }
    let mut coeffs = Vec::with_capacity(n);
    let mut npow = rati(1);
    for k in 1..=n {
        coeffs.push(npow.clone() / factorial(k as u64));
        npow *= rati(n as i64);
    }
    Ok(Poly::new(Param::U, coeffs))
}

/// True iff `P_n(b0) != 0` for all `n <= n_max`. Rationals of absolute
/// value >= 2 short-circuit: all roots of all `P_n` lie in `|z| < 2`.
pub fn pn_roots_guard(b0: &Rat, n_max: usize) -> bool {
    use num_traits::Zero;
    if abs_at_least(b0, 2) {
        return true;
    }
    (1..=n_max).all(|n| !pn_poly(n).expect("n >= 1").eval(b0).is_zero())
}

fn require_unipotent(g: &Series) -> Result<()> {
    if g.order() < 0 || !g.coeff(0).is_one() {
        return Err(Error::domain("the exact solver needs gamma with constant term 1"));
    }
    if g.val() < 0 {
        return Err(Error::domain("gamma must be an ordinary power series"));
    }
    Ok(())
}

/// Solve `Exp(alpha; b) = g` for `alpha` with zero constant term;
/// requires `b` in the maximal ideal and `g` unipotent. The solution is
/// unique in the maximal ideal.
pub fn solve_alpha(b: &Series, g: &Series, n: i64) -> Result<Series> {
    require_unipotent(g)?;
    if b.order() < n || !b.coeff(0).is_zero() || b.val() < 0 {
        return Err(Error::domain(
            "solve_alpha needs beta in the maximal ideal at order >= n",
        ));
    }
    if g.order() < n {
        return Err(Error::domain("gamma carries too few coefficients"));
    }
    let mut alpha = Series::zero(n);
    for step in 1..=n {
        // P_step(0) = 1, so the correction is the defect coefficient itself
        let defect = &g.truncate(n) - &exp_strict(&alpha, b, n)?;
        let e = defect.coeff(step);
        if !e.is_zero() {
            alpha = &alpha + &Series::monomial(e, step, n);
        }
    }
    Ok(alpha)
}

/// Solve `Exp(beta; beta) = g` for `beta` with zero constant term;
/// requires `g` unipotent.
pub fn solve_beta(g: &Series, n: i64) -> Result<Series> {
    require_unipotent(g)?;
    if g.order() < n {
        return Err(Error::domain("gamma carries too few coefficients"));
    }
    let mut beta = Series::zero(n);
    for step in 1..=n {
        let defect = &g.truncate(n) - &exp_strict(&beta, &beta, n)?;
        let e = defect.coeff(step);
        if !e.is_zero() {
            beta = &beta + &Series::monomial(e, step, n);
        }
    }
    Ok(beta)
}

/// Logarithm on the special subgroup: the matrix log of `rho(g)` has the
/// Lie-algebra shape (each diagonal affine in the column index); the
/// extracted pair `(a, b)` satisfies `exp_group(a, b) = g`. A shape
/// violation would falsify the theory and is reported as an internal
/// error.
pub fn group_log(g: &GroupElem) -> Result<LieElem> {
    if !g.is_special() {
        return Err(Error::domain("group_log is defined on the special subgroup"));
    }
    let n = g.order();
    let dim = (n + 1) as usize;
    let logm = mlog_unipotent(&rho(g, dim)?)?;
    // entry (i, j) = a[i-j] + j b[i-j]: read a from column 0, b from the
    // difference along column 1
    let a = Series::from_fn(0, n, |k| logm.get(k as usize, 0));
    let b = Series::from_fn(0, n - 1, |k| {
        &logm.get(k as usize + 1, 1) - &a.coeff(k)
    });
    let elem = LieElem::new(a.truncate(n - 1), b)?;
    let check = lie_to_matrix(&elem, dim - 1)?;
    for i in 0..dim - 1 {
        for j in 0..=i {
            if check.get(i, j) != logm.get(i, j) {
                return Err(Error::internal(format!(
                    "matrix log is not of Lie-algebra shape at entry ({i},{j})"
                )));
            }
        }
    }
    Ok(elem)
}

/// Convenience: the alternating-factorial reading
/// `beta = sum (-1)^n A_n x^(n+1) / n!` of a solved series.
pub fn alternating_factorial_view(beta: &Series) -> Vec<Rat> {
    (1..=beta.order())
        .map(|k| {
            let sign = if (k - 1) % 2 == 0 { rati(1) } else { rati(-1) };
            beta.coeff_rat(k) * factorial((k - 1) as u64) * sign
        })
        .collect()
}
