//! The interpolation that gave the group its name: a one-parameter
//! family connecting the multiplicative inverse 1/A (tau = 0) with the
//! compositional reversion of xA (tau = 1).
//!
//! ```bash
//! cargo run -p riordan-lie --example interpolating_inverse_and_reversion
//! ```

use riordan_lie::group::{interp_inverse, InterpVariant};
use riordan_lie::rat::{rat, rati};
use riordan_lie::series::Series;

fn main() {
    // A = 1 + x
    let a = Series::from_ints(0, 10, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]);

    for tau in [rati(0), rat(1, 4), rat(1, 2), rat(3, 4), rati(1)] {
        let g = interp_inverse(&a, &tau, InterpVariant::G).unwrap();
        println!("tau = {tau:<4} {g}");
    }

    println!();
    println!("tau = 0 is 1/(1+x) = 1 - x + x^2 - ...;");
    println!("tau = 1 is rev(x + x^2)/x, the signed Catalan numbers.");

    // the primed variant interpolates toward the reversion of the primitive
    let gp = interp_inverse(&a, &rati(1), InterpVariant::Gprime).unwrap();
    let rev = a.integrate0().unwrap().reversion().unwrap();
    println!();
    println!("variant G' at tau = 1:       {gp}");
    println!("rev(x + x^2/2) for contrast: {rev}");
}
