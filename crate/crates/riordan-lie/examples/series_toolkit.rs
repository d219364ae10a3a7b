//! The exact series layer: arithmetic, composition, reversion, and
//! Laurent primitives.
//!
//! ```bash
//! cargo run -p riordan-lie --example series_toolkit
//! ```

use riordan_lie::coef::Coef;
use riordan_lie::rat::rat;
use riordan_lie::series::Series;

fn main() {
    // geometric series times (1 - x) telescopes to 1
    let geom = Series::geometric(8);
    let one_minus_x = Series::from_ints(0, 8, &[1, -1, 0, 0, 0, 0, 0, 0, 0]);
    println!("(1 + x + x^2 + ...)(1 - x) = {}", &geom * &one_minus_x);

    // composition and reversion
    let xe = Series::x_over_one_minus_x(10);
    println!("rev(x/(1-x))           = {}", xe.reversion().unwrap());
    let catalan = Series::x_plus_x2(10).reversion().unwrap();
    println!("rev(x + x^2)           = {catalan}");

    // the compositional inverse really inverts
    let check = Series::x_plus_x2(10).compose(&catalan).unwrap();
    println!("(x + x^2) o rev        = {check}");

    // unipotent powers: sqrt(1 + x)^2 = 1 + x
    let one_plus_x = Series::from_ints(0, 12, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
    let root = one_plus_x.powq(&rat(1, 2)).unwrap();
    println!("sqrt(1+x)              = {root}");
    println!("sqrt(1+x)^2            = {}", &root * &root);

    // Laurent jets: a primitive of (1 - x^2)/x^2, residue-free
    let f = Series::from_fn(-2, 6, |k| match k {
        -2 => Coef::one(),
        0 => Coef::from_i64(-1),
        _ => Coef::zero(),
    });
    let (prim, residue) = f.laurent_primitive().unwrap();
    println!("primitive of (1-x^2)/x^2 = {prim}   (residue {residue})");
}
