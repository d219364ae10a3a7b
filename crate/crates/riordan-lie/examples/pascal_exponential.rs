//! The two-variable exponential at its simplest point: exp(u_x + d_x)
//! is the Pascal triangle, i.e. Exp(x; x) = 1/(1-x) and the second
//! component is x/(1-x).
//!
//! ```bash
//! cargo run -p riordan-lie --example pascal_exponential
//! ```

use riordan_lie::cli::{fmt_trimat, Format};
use riordan_lie::lie::{exp_group, lie_to_matrix, mexp_strict, mlog_unipotent, LieElem};
use riordan_lie::riordan::rho;
use riordan_lie::series::Series;

fn main() {
    let n = 8i64;
    let x = Series::x(n);
    let l = LieElem::new(x.clone(), x.clone()).unwrap();

    let m = lie_to_matrix(&l, 8).unwrap();
    println!("u_x + d_x =\n{}\n", fmt_trimat(&m, Format::Pretty));

    let e = mexp_strict(&m).unwrap();
    println!("exp(u_x + d_x) =\n{}\n", fmt_trimat(&e, Format::Pretty));

    // the same matrix through the group exponential
    let g = exp_group(&x, &x, n).unwrap();
    println!("Exp(x; x)       = {}", g.a());
    println!("x Exp(x; x)     = {}", g.alpha());
    assert_eq!(rho(&g, 8).unwrap(), e);

    // and back down to the algebra
    let log = mlog_unipotent(&e).unwrap();
    assert_eq!(log, m);
    println!("\nmatrix log returns u_x + d_x exactly");
}
