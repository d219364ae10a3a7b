//! The interpolation group: pairs `(A, alpha)` of a unit series and a
//! formal diffeomorphism, with the semidirect-product law
//! `(A, alpha)(B, beta) = (A * (B o alpha), beta o alpha)`.
//!
//! The special subgroup consists of pairs with `A(0) = 1` and
//! `alpha'(0) = 1`; on it the endomorphisms `phi_{k,l,m}` are defined for
//! arbitrary rational exponents. Non-special elements are supported for
//! integer exponents only, which keeps all arithmetic inside Q.

use crate::error::{Error, Result};
use crate::rat::{is_integer, to_i64, Rat};
use crate::series::Series;

/// An element `(A, alpha)` of the interpolation group, both components
/// carried at one shared truncation order.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElem {
    a: Series,
    alpha: Series,
}

impl GroupElem {
    /// Validating constructor: `A` must be a unit, `alpha` must have zero
    /// constant term and an invertible linear coefficient, and both parts
    /// must share ring and order.
    pub fn new(a: Series, alpha: Series) -> Result<GroupElem> {
        if a.order() != alpha.order() {
            return Err(Error::domain(format!(
                "group element parts must share one order (got {} and {})",
                a.order(),
                alpha.order()
            )));
        }
        a.ring().join(alpha.ring());
        if a.order() < 0 || a.coeff(0).is_zero() {
            return Err(Error::domain("first component must be a unit (nonzero constant term)"));
        }
        if !alpha.coeff(0).is_zero() {
            return Err(Error::domain("second component must have zero constant term"));
        }
        if alpha.order() < 1 || alpha.coeff(1).inv().is_none() {
            return Err(Error::domain(
                "second component must have an invertible linear coefficient",
            ));
        }
        Ok(GroupElem { a, alpha })
    }

    /// The identity `(1, x)`.
    pub fn identity(order: i64) -> GroupElem {
        GroupElem { a: Series::one(order), alpha: Series::x(order) }
    }

    pub fn a(&self) -> &Series {
        &self.a
    }

    pub fn alpha(&self) -> &Series {
        &self.alpha
    }

    pub fn order(&self) -> i64 {
        self.a.order()
    }

    /// Membership in the special subgroup: `A(0) = 1`, `alpha'(0) = 1`.
    pub fn is_special(&self) -> bool {
        self.a.coeff(0).is_one() && self.alpha.coeff(1).is_one()
    }

    pub fn truncate(&self, order: i64) -> GroupElem {
        assert!(order >= 1, "a group element needs order >= 1");
        GroupElem { a: self.a.truncate(order), alpha: self.alpha.truncate(order) }
    }

    pub fn eq_through(&self, other: &GroupElem, order: i64) -> bool {
        self.a.eq_jet(&other.a, order) && self.alpha.eq_jet(&other.alpha, order)
    }
}

/// Group product `(A, alpha)(B, beta) = (A * (B o alpha), beta o alpha)`.
pub fn gmul(g: &GroupElem, h: &GroupElem) -> Result<GroupElem> {
    if g.order() != h.order() {
        return Err(Error::domain(format!(
            "group product needs matching orders (got {} and {})",
            g.order(),
            h.order()
        )));
    }
    g.a.ring().join(h.a.ring());
    let n = g.order();
    let b_alpha = h.a.compose(&g.alpha)?;
    let beta_alpha = h.alpha.compose(&g.alpha)?;
    GroupElem::new((&g.a * &b_alpha).truncate(n), beta_alpha.truncate(n))
}

/// Group inverse `(A, alpha)^{-1} = (1/(A o rev(alpha)), rev(alpha))`.
pub fn ginv(g: &GroupElem) -> Result<GroupElem> {
    let rev = g.alpha.reversion()?;
    let a_rev = g.a.compose(&rev)?;
    let n = a_rev.order().min(rev.order());
    GroupElem::new(a_rev.inverse()?.truncate(n), rev.truncate(n))
}

fn pow_mixed(base: &Series, e: &Rat, special: bool) -> Result<Series> {
    if is_integer(e) {
        let k = to_i64(e).ok_or_else(|| Error::domain("integer exponent too large"))?;
        base.powi(k)
    } else if special {
        base.powq(e)
    } else {
        Err(Error::domain(
            "fractional phi exponents need a special element (A in 1+m, alpha in x+m^2)",
        ))
    }
}

/// The endomorphism `phi_{k,l,m}(A, alpha) = (A^k (alpha/x)^l (alpha')^m, alpha)`.
///
/// Fractional exponents require a special element; integer exponents work
/// on the whole group. The output order drops by one because `alpha'`
/// enters the first component.
pub fn phi(g: &GroupElem, kappa: &Rat, lambda: &Rat, mu: &Rat) -> Result<GroupElem> {
    let special = g.is_special();
    let n = g.order() - 1;
    if n < 1 {
        return Err(Error::domain("phi needs order >= 2"));
    }
    let a_k = pow_mixed(&g.a, kappa, special)?.truncate(n);
    let over_x = g.alpha.shift_up(-1).truncate(n);
    let ax_l = pow_mixed(&over_x, lambda, special)?.truncate(n);
    let d_m = pow_mixed(&g.alpha.derive(), mu, special)?.truncate(n);
    let first = (&(&a_k * &ax_l) * &d_m).truncate(n);
    GroupElem::new(first, g.alpha.truncate(n))
}

/// Which of the two interpolation families to use: second components
/// `x A^tau` or `integral_0 A^tau`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InterpVariant {
    G,
    Gprime,
}

/// The interpolating family `tau -> 1/(A o gamma_tau^{<-1>})` with
/// `gamma_tau = x A^tau` (variant `G`) or `integral_0 A^tau` (variant
/// `Gprime`). At `tau = 0` this is the multiplicative inverse `1/A`; at
/// `tau = 1` it reproduces the compositional reversion of `x A` resp.
/// `integral_0 A`.
pub fn interp_inverse(a: &Series, tau: &Rat, variant: InterpVariant) -> Result<Series> {
    if a.order() < 0 || !a.coeff(0).is_one() {
        return Err(Error::domain("interpolation requires A with constant term 1"));
    }
    let a_tau = a.powq(tau)?;
    let gamma = match variant {
        InterpVariant::G => a_tau.shift_up(1),
        InterpVariant::Gprime => a_tau.integrate0()?,
    };
    let rev = gamma.reversion()?;
    a.compose(&rev)?.inverse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coef::Coef;
    use crate::rat::{rat, rati};

    fn elem(a: Series, alpha: Series) -> GroupElem {
        GroupElem::new(a, alpha).unwrap()
    }

    fn one_plus_x(n: i64) -> Series {
        Series::from_fn(0, n, |k| if k <= 1 { Coef::one() } else { Coef::zero() })
    }

    #[test]
    fn identity_laws() {
        let e = GroupElem::identity(8);
        let g = elem(one_plus_x(8), Series::x_plus_x2(8));
        assert_eq!(gmul(&e, &g).unwrap(), g);
        assert_eq!(gmul(&g, &e).unwrap(), g);
        assert_eq!(ginv(&e).unwrap(), e);
    }

    #[test]
    fn embedding_and_section_compose() {
        // (1+x, x) * (1, x+x^2) = (1+x, x+x^2)
        let g = elem(one_plus_x(8), Series::x(8));
        let h = elem(Series::one(8), Series::x_plus_x2(8));
        let p = gmul(&g, &h).unwrap();
        assert_eq!(p, elem(one_plus_x(8), Series::x_plus_x2(8)));
    }

    #[test]
    fn inverse_multiplies_to_identity() {
        let g = elem(one_plus_x(10), Series::x_plus_x2(10));
        let gi = ginv(&g).unwrap();
        let n = gi.order();
        // second component of the inverse is rev(x + x^2): 1,-1,2,-5,...
        assert_eq!(
            gi.alpha(),
            &Series::from_ints(1, n, &[1, -1, 2, -5, 14, -42, 132, -429, 1430, -4862])
        );
        let p = gmul(&g.truncate(n), &gi).unwrap();
        assert!(p.eq_through(&GroupElem::identity(n), n));
        let q = gmul(&gi, &g.truncate(n)).unwrap();
        assert!(q.eq_through(&GroupElem::identity(n), n));
    }

    #[test]
    fn inverse_first_component_against_oracle() {
        let g = elem(one_plus_x(10), Series::x_plus_x2(10));
        let gi = ginv(&g).unwrap();
        let rev = Series::x_plus_x2(10).reversion().unwrap();
        let oracle = one_plus_x(10).compose(&rev).unwrap().inverse().unwrap();
        assert!(gi.a().eq_jet(&oracle, gi.order().min(oracle.order())));
    }

    #[test]
    fn phi_identity_exponents() {
        let g = elem(one_plus_x(9), Series::x_plus_x2(9));
        let p = phi(&g, &rati(1), &rati(0), &rati(0)).unwrap();
        assert!(p.eq_through(&g.truncate(p.order()), p.order()));
    }

    #[test]
    fn phi_lambda_only_gives_alpha_over_x_power() {
        // phi((1, alpha), 0, l, 0) = ((alpha/x)^l, alpha)
        let alpha = Series::x_plus_x2(9);
        let g = elem(Series::one(9), alpha.clone());
        let l = rat(1, 3);
        let p = phi(&g, &rati(0), &l, &rati(0)).unwrap();
        let expect = alpha.shift_up(-1).truncate(8).powq(&l).unwrap();
        assert_eq!(p.a(), &expect);
    }

    #[test]
    fn phi_is_homomorphism() {
        let g = elem(one_plus_x(10), Series::x_plus_x2(10));
        let h = elem(
            Series::from_fn(0, 10, |k| if k == 0 { Coef::one() } else { Coef::Rat(rat(1, 1 + k)) }),
            Series::from_fn(0, 10, |k| match k {
                0 => Coef::zero(),
                1 => Coef::one(),
                _ => Coef::Rat(rat(1, k)),
            }),
        );
        let (k, l, m) = (rat(2, 1), rat(-1, 2), rat(1, 3));
        let lhs = phi(&gmul(&g, &h).unwrap(), &k, &l, &m).unwrap();
        let rhs = gmul(&phi(&g, &k, &l, &m).unwrap(), &phi(&h, &k, &l, &m).unwrap()).unwrap();
        assert!(lhs.eq_through(&rhs, lhs.order().min(rhs.order())));
    }

    #[test]
    fn phi_fractional_needs_special() {
        let g = elem(Series::constant(Coef::from_i64(2), 8), Series::x(8));
        assert!(phi(&g, &rat(1, 2), &rati(0), &rati(0)).is_err());
        // integer exponents are fine on non-special elements
        assert!(phi(&g, &rati(2), &rati(-1), &rati(3)).is_ok());
    }

    #[test]
    fn interp_endpoints() {
        let a = one_plus_x(10);
        // tau = 0: the multiplicative inverse 1 - x + x^2 - ...
        let at0 = interp_inverse(&a, &rati(0), InterpVariant::G).unwrap();
        assert!(at0.eq_jet(&a.inverse().unwrap(), at0.order()));
        // tau = 1, variant G: x * result = rev(xA)
        let at1 = interp_inverse(&a, &rati(1), InterpVariant::G).unwrap();
        let rev = a.shift_up(1).reversion().unwrap();
        let through = at1.shift_up(1).order().min(rev.order());
        assert!(at1.shift_up(1).eq_jet(&rev, through));
        // signed Catalan column 1,-1,2,-5,14,...
        assert_eq!(at1.truncate(5), Series::from_ints(0, 5, &[1, -1, 2, -5, 14, -42]));
        // tau = 1, variant Gprime: integrate0(result) = rev(int_0 A)
        let at1p = interp_inverse(&a, &rati(1), InterpVariant::Gprime).unwrap();
        let revp = a.integrate0().unwrap().reversion().unwrap();
        let lhs = at1p.integrate0().unwrap();
        let through = lhs.order().min(revp.order());
        assert!(lhs.eq_jet(&revp, through));
    }

    #[test]
    fn interp_midpoint_matches_defining_formula() {
        // tau = 1/2, variant G, recomputed with independent calls
        let a = one_plus_x(12);
        let tau = rat(1, 2);
        let got = interp_inverse(&a, &tau, InterpVariant::G).unwrap();
        let gamma = a.powq(&tau).unwrap().shift_up(1);
        let oracle = a.compose(&gamma.reversion().unwrap()).unwrap().inverse().unwrap();
        assert!(got.eq_jet(&oracle, got.order().min(oracle.order())));
    }

    #[test]
    fn group_respects_sg_tau_closure() {
        // products of pairs (A, x A^tau) stay of that shape, and likewise
        // pairs (A, integral_0 A^tau)
        let tau = rat(1, 2);
        let a = one_plus_x(12);
        let b = Series::from_fn(0, 12, |k| if k == 0 { Coef::one() } else { Coef::Rat(rat(1, 1 + k)) });
        let ga = GroupElem::new(a.clone(), a.powq(&tau).unwrap().shift_up(1).truncate(12)).unwrap();
        let gb = GroupElem::new(b.clone(), b.powq(&tau).unwrap().shift_up(1).truncate(12)).unwrap();
        let p = gmul(&ga, &gb).unwrap();
        let expect = p.a().powq(&tau).unwrap().shift_up(1);
        assert!(p.alpha().eq_jet(&expect, p.order().min(expect.order())));

        let ha = GroupElem::new(a.clone(), a.powq(&tau).unwrap().integrate0().unwrap()).unwrap();
        let hb = GroupElem::new(b.clone(), b.powq(&tau).unwrap().integrate0().unwrap()).unwrap();
        let q = gmul(&ha, &hb).unwrap();
        let expect = q.a().powq(&tau).unwrap().integrate0().unwrap();
        assert!(q.alpha().eq_jet(&expect, q.order().min(expect.order())));
    }

    #[test]
    fn group_law_specializes_the_exponential_doubling() {
        // (A, xA)^2 for A = Exp(a; a) realizes
        // x Exp(2a; 2a) = (x Exp(a; a)) o (x Exp(a; a)); at a = x this is
        // x/(1-2x) = (x/(1-x)) o (x/(1-x))
        let n = 12i64;
        let a = Series::geometric(n); // Exp(x; x)
        let g = GroupElem::new(a.clone(), a.shift_up(1).truncate(n)).unwrap();
        let sq = gmul(&g, &g).unwrap();
        let doubled = crate::lie::exp_strict(
            &Series::x(n).scale_rat(&rati(2)),
            &Series::x(n).scale_rat(&rati(2)),
            n,
        )
        .unwrap();
        assert!(sq.alpha().eq_jet(&doubled.shift_up(1).truncate(n), n));
        assert!(sq.a().eq_jet(&doubled, n));
    }

    #[test]
    fn domain_errors_are_reported() {
        // order mismatch in the product
        let g = elem(one_plus_x(8), Series::x_plus_x2(8));
        let h = elem(one_plus_x(6), Series::x_plus_x2(6));
        assert!(matches!(gmul(&g, &h), Err(crate::error::Error::Domain(_))));
        // construction: non-unit first component
        assert!(GroupElem::new(Series::x(5), Series::x(5)).is_err());
        // construction: nonzero constant term in the second component
        assert!(GroupElem::new(one_plus_x(5), one_plus_x(5)).is_err());
        // construction: vanishing linear coefficient
        assert!(GroupElem::new(one_plus_x(5), Series::monomial(Coef::one(), 2, 5)).is_err());
        // interpolation needs A with constant term 1
        let two = Series::constant(Coef::from_i64(2), 6);
        assert!(interp_inverse(&two, &rati(0), InterpVariant::G).is_err());
    }

    #[test]
    fn center_commutes() {
        let c = GroupElem::new(Series::constant(Coef::from_i64(5), 9), Series::x(9)).unwrap();
        let g = elem(one_plus_x(9), Series::x_plus_x2(9));
        let lhs = gmul(&c, &g).unwrap();
        let rhs = gmul(&g, &c).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn linear_change_of_variable_conjugation() {
        // (1, Kx) (A, alpha) (1, x/K) = (A o (Kx), alpha o (Kx) / K)
        let k = rati(3);
        let g = elem(one_plus_x(9), Series::x_plus_x2(9));
        let scale = GroupElem::new(Series::one(9), Series::x(9).scale_rat(&k)).unwrap();
        let unscale = GroupElem::new(Series::one(9), Series::x(9).scale_rat(&k.recip())).unwrap();
        let conj = gmul(&gmul(&scale, &g).unwrap(), &unscale).unwrap();
        let expect_a = g.a().scale_arg(&k);
        let expect_alpha = g.alpha().scale_arg(&k).scale_rat(&k.recip());
        assert!(conj.a().eq_jet(&expect_a, 9));
        assert!(conj.alpha().eq_jet(&expect_alpha, 9));
    }
}
