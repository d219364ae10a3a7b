//! The algebra of triangular matrices whose diagonals are polynomial in
//! the column index: products by exact interpolation with built-in
//! verification, the shift automorphism tau, and exp/log between the
//! strict and unipotent parts.
//!
//! ```bash
//! cargo run -p riordan-lie --example polynomial_matrices
//! ```

use riordan_lie::cli::{fmt_polymat, fmt_trimat, Format};
use riordan_lie::poly::{Param, Poly};
use riordan_lie::polymat::{pm_bracket, pm_eval, pm_exp, pm_log, pm_mul, tau_lambda, PolyMat};
use riordan_lie::rat::{rat, rati};

fn p(coeffs: &[i64]) -> Poly {
    Poly::new(Param::U, coeffs.iter().map(|&c| rati(c)).collect())
}

fn main() {
    // the Pascal generator: p_0 = 0, p_1(u) = u + 1
    let strict = PolyMat::new(vec![
        Poly::zero(Param::U),
        p(&[1, 1]),
        Poly::zero(Param::U),
        Poly::zero(Param::U),
        Poly::zero(Param::U),
        Poly::zero(Param::U),
    ])
    .unwrap();
    let e = pm_exp(&strict).unwrap();
    println!("exp of the Pascal generator, as diagonal polynomials:");
    println!("{}\n", fmt_polymat(&e, Format::Pretty));
    println!("evaluated at dimension 6:");
    println!("{}\n", fmt_trimat(&pm_eval(&e, 6).unwrap(), Format::Pretty));
    assert_eq!(pm_log(&e).unwrap(), strict);

    // a product with degree growth, fitted and verified
    let a = PolyMat::new(vec![p(&[1]), p(&[1, 1]), p(&[0, 0, 1])]).unwrap();
    let b = PolyMat::new(vec![p(&[2]), p(&[0, 1]), p(&[1])]).unwrap();
    let c = pm_mul(&a, &b).unwrap();
    println!("product of two degree-2 matrices:");
    println!("{}\n", fmt_polymat(&c, Format::Pretty));

    // the bracket drops one degree per diagonal
    let br = pm_bracket(&a, &b).unwrap();
    println!("their bracket (note the lower degrees):");
    println!("{}\n", fmt_polymat(&br, Format::Pretty));

    // tau_{1/2} shifts the column argument; tau_1 erases a row and column
    println!("tau_(1/2) of the product:");
    println!("{}", fmt_polymat(&tau_lambda(&c, &rat(1, 2)), Format::Pretty));
}
