//! Inverting the exponential: given a unipotent target gamma, find
//! alpha with Exp(alpha; beta) = gamma, or beta with Exp(beta; beta) =
//! gamma, one exact coefficient per step.
//!
//! ```bash
//! cargo run -p riordan-lie --example reciprocal_solvers
//! ```

use riordan_lie::lie::exp_strict;
use riordan_lie::series::Series;
use riordan_lie::solve::{alternating_factorial_view, group_log, solve_alpha, solve_beta};

fn main() {
    let n = 8i64;

    // Exp(beta; beta) = 1 + x
    let target = Series::from_ints(0, n, &[1, 1, 0, 0, 0, 0, 0, 0, 0]);
    let beta = solve_beta(&target, n).unwrap();
    println!("Exp(b; b) = 1 + x  gives  b = {beta}");
    let view: Vec<String> = alternating_factorial_view(&beta).iter().map(|r| r.to_string()).collect();
    println!("read as (-1)^n A_n x^(n+1)/n!: A = {}", view.join(", "));
    assert_eq!(exp_strict(&beta, &beta, n).unwrap(), target);

    // Exp(beta; beta) = e^x
    let be = solve_beta(&Series::exp_x(n), n).unwrap();
    println!("\nExp(b; b) = e^x    gives  b = {be}");

    // recover the first argument for a fixed second one
    let b = Series::x(n);
    let alpha = solve_alpha(&b, &Series::geometric(n), n).unwrap();
    println!("\nExp(a; x) = 1/(1-x) gives a = {alpha}");

    // the matrix-logarithm route inverts the group exponential
    let g = riordan_lie::lie::exp_group(&Series::x_plus_x2(n), &Series::x(n), n).unwrap();
    let l = group_log(&g).unwrap();
    println!("\ngroup_log(exp_group(x + x^2, x)):");
    println!("  a = {}", l.a());
    println!("  b = {}", l.b());
}
