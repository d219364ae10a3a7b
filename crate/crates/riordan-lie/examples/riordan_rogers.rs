//! Riordan matrices: the faithful matrix picture of the group, the
//! Rogers A-sequence that characterizes it, and the Toeplitz determinant
//! triangle built from the same data.
//!
//! ```bash
//! cargo run -p riordan-lie --example riordan_rogers
//! ```

use riordan_lie::cli::{fmt_trimat, Format};
use riordan_lie::coef::Coef;
use riordan_lie::group::GroupElem;
use riordan_lie::riordan::{
    aseq_extract, aseq_formula, mat_inv_unipotent, rho, rogers_reconstruct, toeplitz_d,
};
use riordan_lie::series::Series;

fn main() {
    // rho(1+x, x+x^2): entries C(j+1, i-j)
    let g = GroupElem::new(
        Series::from_ints(0, 8, &[1, 1, 0, 0, 0, 0, 0, 0, 0]),
        Series::x_plus_x2(8),
    )
    .unwrap();
    let m = rho(&g, 7).unwrap();
    println!("rho(1+x, x+x^2) =\n{}\n", fmt_trimat(&m, Format::Pretty));

    let inv = mat_inv_unipotent(&m).unwrap();
    println!("its inverse (signed Catalans down column 0) =\n{}\n", fmt_trimat(&inv, Format::Pretty));

    // the A-sequence: every entry below row 0 is a fixed window-combination
    // of the row above
    let a = aseq_extract(&m).unwrap();
    let a_str: Vec<String> = a.iter().map(|c| c.to_string()).collect();
    println!("A-sequence of rho(1+x, x+x^2): {}", a_str.join(", "));
    let f = aseq_formula(&Series::x_plus_x2(10)).unwrap();
    println!("x / rev(x + x^2)             = {f}");

    // rebuild the matrix from column 0 and the A-sequence alone
    let rebuilt = rogers_reconstruct(g.a(), &a, 7).unwrap();
    assert_eq!(rebuilt, m);
    println!("reconstruction from (column 0, A-sequence) agrees\n");

    // Toeplitz determinants of a = (1, 1, 1): the Motzkin-flavored triangle
    let aseq = vec![Coef::one(), Coef::one(), Coef::one()];
    for (n, d) in toeplitz_d(&aseq, 6).iter().enumerate() {
        println!("d_{n} = {d}");
    }
}
