//! The differential and algebraic equations satisfied by Exp(a; b):
//! the autonomous ODE system, the flow invariant F(x Exp(sb; sb)) =
//! F(x) + s, and the algebraic closed form behind OEIS A4148.
//!
//! ```bash
//! cargo run -p riordan-lie --example ode_and_algebraic_identities
//! ```

use riordan_lie::cli::beta_family;
use riordan_lie::lie::{exp_spoly, f_invariant_residual, ode_residual_main};
use riordan_lie::rat::rati;
use riordan_lie::series::Series;

fn main() {
    // x b y' = y {a o (xz) - a} and its z-twin, exactly
    let b = Series::x_over_one_minus_x(10);
    let (r1, r2) = ode_residual_main(&b, &b, 10).unwrap();
    println!("ODE residuals for a = b = x/(1-x): ({r1}, {r2})");

    // the flow invariant: 1/(x b) = (1 - x^2)/x^2 has primitive -1/x - x
    let beta = beta_family(0, 18).unwrap(); // x/(1 - x^2)
    let resid = f_invariant_residual(&beta, 10, 6).unwrap();
    println!("F(x Exp(sb; sb)) - F(x) - s  for b = x/(1-x^2): {resid}");

    // at s = 1 the series is A4148
    let jet = exp_spoly(&beta.truncate(8), &beta.truncate(8), 8, 8).unwrap();
    println!("Exp(s b; s b) at s = 1: {}", jet.eval_param(&rati(1)));

    // the k = 2 member of the same family, A26671-flavored
    let b2 = beta_family(2, 9).unwrap();
    let jet2 = exp_spoly(&b2, &b2, 9, 9).unwrap();
    let z = (&jet2.eval_param(&rati(1)) * &Series::x(10)).truncate(9);
    println!("x Exp(b_2; b_2) at s = 1: {z}");
    println!("\n(run `rlie alg-check --k 2` to see the quartic certificate vanish)");
}
