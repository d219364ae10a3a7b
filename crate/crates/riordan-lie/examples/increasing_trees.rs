//! Counting increasing trees through the partition series Z_0: Euler
//! numbers, Andre polynomials, and the even-degree/binary-tree
//! equinumerosity checked exhaustively.
//!
//! ```bash
//! cargo run -p riordan-lie --example increasing_trees
//! ```

use riordan_lie::coef::Coef;
use riordan_lie::comb::{
    andre_poly, count_e_histogram, count_s_histogram, idcomben_check, tree_from_admissible,
    z0_bruteforce, z0_series, AdmissibleFun,
};
use riordan_lie::rat::factorial;
use riordan_lie::series::Series;

fn main() {
    // admissible functions encode increasing trees
    let f = AdmissibleFun::new(vec![1, 1, 2, 3]).unwrap();
    let t = tree_from_admissible(&f);
    println!("f = (1,1,2,3)  ->  parents of 1..4: {:?}", (1..=4).map(|v| t.parent_of(v)).collect::<Vec<_>>());

    // W = e^X: every function weighs 1, so n! [s^n] Z_0 = n!
    let z = z0_series(&Series::exp_x(8), 8).unwrap();
    println!("\nW = e^X:        Z_0 = {z}");

    // W = 1 + X + X^2/2 (weights 1,1,1): the Euler numbers
    let w = Series::from_fn(0, 8, |k| {
        if k <= 2 {
            Coef::Rat(factorial(k as u64).recip())
        } else {
            Coef::zero()
        }
    });
    let z = z0_series(&w, 8).unwrap();
    let euler: Vec<String> = (0..=8)
        .map(|n| (z.coeff_rat(n) * factorial(n as u64)).to_string())
        .collect();
    println!("W = 1+X+X^2/2:  n! [s^n] Z_0 = {}", euler.join(", "));

    // the same numbers by brute force over all n! admissible functions
    let weights = vec![Coef::one(), Coef::one(), Coef::one(), Coef::zero(), Coef::zero()];
    println!("brute force at n = 4: {}", z0_bruteforce(&weights, 4).unwrap());

    // Andre polynomials refine the count by the number of degree-1 vertices
    for n in 0..=5 {
        println!("A_{n}(t) = {}", andre_poly(n));
    }

    // trees with <= 2 children vs trees with even degrees
    println!("\nleaves of 8-vertex binary increasing trees:   {:?}", count_s_histogram(8).unwrap());
    println!("internal vertices, 9-vertex even-degree trees: {:?}", count_e_histogram(9).unwrap());
    for n in 1..=5 {
        assert!(idcomben_check(n).unwrap());
    }
    println!("equinumerous for all k at 2n = 2, 4, 6, 8, 10");
}
