//! Lower-triangular matrices with polynomial diagonals: entries
//! `M(p)[i][j] = p_{i-j}(j)` for a list of polynomials `p_0..p_K`.
//!
//! Products and brackets stay in this class with controlled diagonal
//! degrees. Rather than symbolic matrix algebra, the product recovers
//! each diagonal polynomial by exact interpolation at integer points and
//! then verifies the fit at extra points — a failure would falsify the
//! closure lemma and is treated as an internal error. The same adaptive
//! fit drives the exponential and logarithm between the strict and
//! unipotent parts.

use num_traits::Zero;

use crate::coef::Coef;
use crate::error::{Error, Result};
use crate::poly::{Param, Poly};
use crate::rat::{rati, Rat};
use crate::riordan::TriMat;
use crate::series::Series;

/// A polynomial matrix known through its first `K + 1` diagonals.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMat {
    polys: Vec<Poly>, // diagonal k -> p_k(u), u = column index
}

impl PolyMat {
    pub fn new(polys: Vec<Poly>) -> Result<PolyMat> {
        if polys.is_empty() {
            return Err(Error::domain("a polynomial matrix needs at least one diagonal"));
        }
        for p in &polys {
            if p.param() != Param::U {
                return Err(Error::domain("diagonal polynomials use the parameter u"));
            }
        }
        Ok(PolyMat { polys })
    }

    /// Identity: `p_0 = 1`, nothing below.
    pub fn identity(cutoff: usize) -> PolyMat {
        let mut polys = vec![Poly::zero(Param::U); cutoff + 1];
        polys[0] = Poly::one(Param::U);
        PolyMat { polys }
    }

    pub fn zero(cutoff: usize) -> PolyMat {
        PolyMat { polys: vec![Poly::zero(Param::U); cutoff + 1] }
    }

    /// Highest known diagonal index.
    pub fn cutoff(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn poly(&self, k: usize) -> &Poly {
        &self.polys[k]
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    /// Entry `(i, j) = p_{i-j}(j)`; `i - j` must be within the cutoff.
    pub fn entry(&self, i: usize, j: usize) -> Rat {
        if j > i {
            return Rat::zero();
        }
        self.polys[i - j].eval(&rati(j as i64))
    }

    pub fn add(&self, other: &PolyMat) -> Result<PolyMat> {
        self.check_cutoff(other)?;
        Ok(PolyMat {
            polys: self.polys.iter().zip(&other.polys).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, other: &PolyMat) -> Result<PolyMat> {
        self.check_cutoff(other)?;
        Ok(PolyMat {
            polys: self.polys.iter().zip(&other.polys).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.polys.iter().all(Poly::is_zero)
    }

    fn check_cutoff(&self, other: &PolyMat) -> Result<()> {
        if self.cutoff() != other.cutoff() {
            return Err(Error::domain(format!(
                "cutoff mismatch: {} vs {}",
                self.cutoff(),
                other.cutoff()
            )));
        }
        Ok(())
    }
}

/// Evaluate as a finite triangular matrix; the dimension may not exceed
/// the known diagonals.
pub fn pm_eval(p: &PolyMat, n: usize) -> Result<TriMat> {
    if n == 0 || n - 1 > p.cutoff() {
        return Err(Error::domain(format!(
            "evaluation at dimension {n} exceeds the {} known diagonals",
            p.cutoff() + 1
        )));
    }
    Ok(pm_eval_trunc(p, n))
}

/// Evaluation that silently treats diagonals beyond the cutoff as zero.
/// Internal: used where only the first `cutoff + 1` diagonals of the
/// result will be read (triangular products never mix them upward).
fn pm_eval_trunc(p: &PolyMat, n: usize) -> TriMat {
    let mut m = TriMat::zero(n);
    for i in 0..n {
        for j in (i.saturating_sub(p.cutoff()))..=i {
            m.set(i, j, Coef::Rat(p.entry(i, j)));
        }
    }
    m
}

/// Interpolate a diagonal from entry values, verifying the fit at three
/// extra points beyond the stated degree bound.
fn fit_diagonal(degree_bound: i64, mut value_at: impl FnMut(usize) -> Rat) -> Result<Poly> {
    if degree_bound < 0 {
        // every sampled value must vanish
        for j in 0..4 {
            if !value_at(j).is_zero() {
                return Err(Error::internal(
                    "diagonal expected to vanish has a nonzero entry".to_string(),
                ));
            }
        }
        return Ok(Poly::zero(Param::U));
    }
    let d = degree_bound as usize;
    let points: Vec<(Rat, Rat)> = (0..=d).map(|j| (rati(j as i64), value_at(j))).collect();
    let poly = Poly::interpolate(Param::U, &points);
    for j in d + 1..=d + 3 {
        if poly.eval(&rati(j as i64)) != value_at(j) {
            return Err(Error::internal(format!(
                "diagonal fit of degree <= {d} fails verification at column {j}"
            )));
        }
    }
    Ok(poly)
}

fn deg_or_neg(p: &Poly) -> i64 {
    p.degree().map_or(i64::MIN / 2, |d| d as i64)
}

/// Product `M(a) M(b) = M(c)`: diagonal `k` of the numeric product is
/// `c_k(j) = sum_h a_{k-h}(j+h) b_h(j)`, a polynomial of degree at most
/// `max_h (deg a_{k-h} + deg b_h)`; it is recovered by interpolation and
/// over-determined verification.
pub fn pm_mul(a: &PolyMat, b: &PolyMat) -> Result<PolyMat> {
    a.check_cutoff(b)?;
    let kmax = a.cutoff();
    let mut polys = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let bound = (0..=k)
            .map(|h| deg_or_neg(a.poly(k - h)) + deg_or_neg(b.poly(h)))
            .max()
            .unwrap_or(i64::MIN / 2);
        let ak: Vec<&Poly> = (0..=k).map(|h| a.poly(k - h)).collect();
        let bk: Vec<&Poly> = (0..=k).map(|h| b.poly(h)).collect();
        let value = |j: usize| -> Rat {
            let mut acc = Rat::zero();
            for h in 0..=k {
                acc += ak[h].eval(&rati((j + h) as i64)) * bk[h].eval(&rati(j as i64));
            }
            acc
        };
        polys.push(fit_diagonal(bound, value)?);
    }
    PolyMat::new(polys)
}

/// Commutator `[M(a), M(b)]`, with the strict degree drop of the closure
/// lemma asserted per diagonal.
pub fn pm_bracket(a: &PolyMat, b: &PolyMat) -> Result<PolyMat> {
    let ab = pm_mul(a, b)?;
    let ba = pm_mul(b, a)?;
    let c = ab.sub(&ba)?;
    for k in 0..=c.cutoff() {
        let bound = (0..=k)
            .map(|h| deg_or_neg(a.poly(k - h)) + deg_or_neg(b.poly(h)))
            .max()
            .unwrap_or(i64::MIN / 2);
        if deg_or_neg(c.poly(k)) >= bound && bound >= 0 && !c.poly(k).is_zero() {
            return Err(Error::internal(format!(
                "bracket diagonal {k} misses the strict degree drop (degree {} vs bound {bound})",
                deg_or_neg(c.poly(k))
            )));
        }
    }
    Ok(c)
}

/// The shift automorphism: `tau_lambda(M)[i][j] = p_{i-j}(j + lambda)`.
/// For natural `lambda` this erases the first `lambda` rows and columns.
pub fn tau_lambda(p: &PolyMat, lambda: &Rat) -> PolyMat {
    PolyMat { polys: p.polys.iter().map(|q| q.shift(lambda)).collect() }
}

/// Decompose into Toeplitz-times-diagonal-power layers: returns the
/// series `alpha(0), alpha(1), ...` with `M(p) = sum_n P_{alpha(n)} D^n`
/// where `alpha(n)_k = [u^n] p_k`.
pub fn pm_to_pd(p: &PolyMat) -> Vec<Series> {
    let max_deg = p.polys.iter().filter_map(Poly::degree).max().unwrap_or(0);
    let order = p.cutoff() as i64;
    (0..=max_deg)
        .map(|n| Series::from_fn(0, order, |k| Coef::Rat(p.poly(k as usize).coeff(n))))
        .collect()
}

/// Inverse of [`pm_to_pd`]: rebuild the diagonal polynomials from the
/// layer series.
pub fn pd_to_pm(alphas: &[Series], cutoff: usize) -> Result<PolyMat> {
    let mut polys = Vec::with_capacity(cutoff + 1);
    for k in 0..=cutoff as i64 {
        let coeffs = alphas
            .iter()
            .map(|a| {
                if k > a.order() {
                    Err(Error::domain("layer series carries too few coefficients"))
                } else {
                    a.coeff(k)
                        .as_rat()
                        .ok_or_else(|| Error::domain("layer series must have rational entries"))
                }
            })
            .collect::<Result<Vec<Rat>>>()?;
        polys.push(Poly::new(Param::U, coeffs));
    }
    PolyMat::new(polys)
}

/// Degree bound for diagonal `k` of products of strict layers:
/// the best sum of input degrees over compositions of `k`.
fn strict_degree_bounds(p: &PolyMat) -> Vec<i64> {
    let kmax = p.cutoff();
    let mut e = vec![i64::MIN / 2; kmax + 1];
    e[0] = 0;
    for k in 1..=kmax {
        for i in 1..=k {
            let d = deg_or_neg(p.poly(i));
            if d > i64::MIN / 4 && e[k - i] > i64::MIN / 4 {
                e[k] = e[k].max(d + e[k - i]);
            }
        }
    }
    e
}

fn fit_from_matrix(
    p: &PolyMat,
    bounds: &[i64],
    transform: impl Fn(&TriMat) -> Result<TriMat>,
) -> Result<PolyMat> {
    let kmax = p.cutoff();
    // one evaluation large enough for every diagonal's sample points
    let mut grow = 0i64;
    'retry: for attempt in 0..6 {
        let need = (0..=kmax)
            .map(|k| bounds[k].max(0) + grow + 3 + k as i64 + 1)
            .max()
            .unwrap_or(4) as usize;
        let big = transform(&pm_eval_trunc(p, need))?;
        let mut polys = Vec::with_capacity(kmax + 1);
        for k in 0..=kmax {
            let bound = if bounds[k] < 0 { bounds[k] } else { bounds[k] + grow };
            match fit_diagonal(bound, |j| {
                big.get(j + k, j).as_rat().expect("rational matrix")
            }) {
                Ok(q) => polys.push(q),
                Err(_) if attempt < 5 => {
                    grow += 2 + grow / 2;
                    continue 'retry;
                }
                Err(e) => return Err(e),
            }
        }
        return PolyMat::new(polys);
    }
    Err(Error::internal("diagonal fit failed to stabilize".to_string()))
}

/// Exponential of a strict polynomial matrix (`p_0 = 0`), diagonal-wise
/// a finite sum; the result is fitted and verified as polynomial
/// diagonals.
pub fn pm_exp(p: &PolyMat) -> Result<PolyMat> {
    if !p.poly(0).is_zero() {
        return Err(Error::domain("pm_exp needs a strict matrix (p_0 = 0)"));
    }
    let bounds = strict_degree_bounds(p);
    fit_from_matrix(p, &bounds, crate::lie::mexp_strict)
}

/// Logarithm of a unipotent polynomial matrix (`p_0 = 1`).
pub fn pm_log(p: &PolyMat) -> Result<PolyMat> {
    if p.poly(0).as_constant() != Some(rati(1)) {
        return Err(Error::domain("pm_log needs a unipotent matrix (p_0 = 1)"));
    }
    let bounds = strict_degree_bounds(p);
    fit_from_matrix(p, &bounds, crate::lie::mlog_unipotent)
}

/// True iff every known diagonal obeys `deg(p_k) <= bound(k)` (the zero
/// polynomial always passes).
pub fn degree_profile_ok(p: &PolyMat, bound: impl Fn(usize) -> i64) -> bool {
    (0..=p.cutoff()).all(|k| p.poly(k).degree().is_none_or(|d| d as i64 <= bound(k)))
}
