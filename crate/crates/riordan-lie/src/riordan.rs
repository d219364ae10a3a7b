//! The lower-triangular matrix representation of the interpolation
//! group: `rho(A, alpha)[i][j] = [x^i] (A alpha^j)`, together with the
//! Rogers A-sequence characterization and the Toeplitz determinant
//! triangle attached to an A-sequence.

use crate::coef::Coef;
use crate::error::{Error, Result};
use crate::group::GroupElem;
use crate::series::Series;

/// Dense lower-triangular matrix of exact coefficients; row `i` stores
/// entries for columns `0..=i`.
#[derive(Clone, Debug, PartialEq)]
pub struct TriMat {
    rows: Vec<Vec<Coef>>,
}

impl TriMat {
    pub fn from_rows(rows: Vec<Vec<Coef>>) -> Result<TriMat> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::domain(format!(
                    "triangular row {i} must hold {} entries, got {}",
                    i + 1,
                    row.len()
                )));
            }
        }
        Ok(TriMat { rows })
    }

    pub fn identity(n: usize) -> TriMat {
        TriMat {
            rows: (0..n)
                .map(|i| (0..=i).map(|j| if i == j { Coef::one() } else { Coef::zero() }).collect())
                .collect(),
        }
    }

    pub fn zero(n: usize) -> TriMat {
        TriMat { rows: (0..n).map(|i| vec![Coef::zero(); i + 1]).collect() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Entry `(i, j)`; implicit zero above the diagonal.
    pub fn get(&self, i: usize, j: usize) -> Coef {
        if j > i {
            Coef::zero()
        } else {
            self.rows[i][j].clone()
        }
    }

    pub fn set(&mut self, i: usize, j: usize, c: Coef) {
        self.rows[i][j] = c;
    }

    pub fn rows(&self) -> &[Vec<Coef>] {
        &self.rows
    }

    /// Generating series of column `j`, at order `dim - 1`.
    pub fn column_series(&self, j: usize) -> Series {
        let n = self.dim() as i64 - 1;
        Series::from_fn(0, n, |i| self.get(i as usize, j))
    }

    /// Delete the first `k` rows and columns.
    pub fn slice_off(&self, k: usize) -> TriMat {
        TriMat {
            rows: (k..self.dim()).map(|i| (k..=i).map(|j| self.get(i, j)).collect()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(Coef::is_zero))
    }

    pub fn add(&self, other: &TriMat) -> Result<TriMat> {
        self.check_dim(other)?;
        Ok(TriMat {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        })
    }

    pub fn sub(&self, other: &TriMat) -> Result<TriMat> {
        self.check_dim(other)?;
        Ok(TriMat {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
                .collect(),
        })
    }

    pub fn scale(&self, c: &Coef) -> TriMat {
        TriMat { rows: self.rows.iter().map(|r| r.iter().map(|x| x * c).collect()).collect() }
    }

    fn check_dim(&self, other: &TriMat) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::domain(format!(
                "matrix dimension mismatch: {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(())
    }
}

/// Triangular matrix product.
pub fn mat_mul(a: &TriMat, b: &TriMat) -> Result<TriMat> {
    a.check_dim(b)?;
    let n = a.dim();
    let mut out = TriMat::zero(n);
    for i in 0..n {
        for j in 0..=i {
            let mut acc = Coef::zero();
            for k in j..=i {
                let x = a.get(i, k);
                if x.is_zero() {
                    continue;
                }
                acc = &acc + &(&x * &b.get(k, j));
            }
            out.set(i, j, acc);
        }
    }
    Ok(out)
}

/// Inverse of a triangular matrix with invertible diagonal, by forward
/// substitution.
pub fn mat_inv_unipotent(a: &TriMat) -> Result<TriMat> {
    let n = a.dim();
    let mut inv = TriMat::zero(n);
    let mut dinv = Vec::with_capacity(n);
    for i in 0..n {
        let d = a
            .get(i, i)
            .inv()
            .ok_or_else(|| Error::domain(format!("diagonal entry ({i},{i}) is not invertible")))?;
        dinv.push(d);
    }
    for j in 0..n {
        inv.set(j, j, dinv[j].clone());
        for i in j + 1..n {
            // a[i][i] inv[i][j] + sum_{k=j}^{i-1} a[i][k] inv[k][j] = 0
            let mut acc = Coef::zero();
            for k in j..i {
                let x = a.get(i, k);
                if x.is_zero() {
                    continue;
                }
                acc = &acc + &(&x * &inv.get(k, j));
            }
            inv.set(i, j, &(-&acc) * &dinv[i]);
        }
    }
    Ok(inv)
}

/// The representation `rho`: column `j` of the result is the coefficient
/// vector of `A alpha^j`. Requires the element to carry order >= n-1.
pub fn rho(g: &GroupElem, n: usize) -> Result<TriMat> {
    if g.order() < n as i64 - 1 {
        return Err(Error::domain(format!(
            "rho at dimension {n} needs order >= {}, got {}",
            n as i64 - 1,
            g.order()
        )));
    }
    let m = n as i64 - 1;
    let alpha = g.alpha().truncate(m);
    let mut col = g.a().truncate(m);
    let mut out = TriMat::zero(n);
    for j in 0..n {
        for i in j..n {
            out.set(i, j, col.coeff(i as i64));
        }
        if j + 1 < n {
            col = (&col * &alpha).truncate(m);
        }
    }
    Ok(out)
}

/// Extract the Rogers A-sequence of a Riordan matrix: the weights
/// `a_0..a_{n-2}` with `M[r+1][c+1] = sum_j a_j M[r][c+j]`. The sequence
/// is solved from the column-1 equations and then every instance of the
/// recurrence is checked; the first violated `(row, col)` is reported.
pub fn aseq_extract(m: &TriMat) -> Result<Vec<Coef>> {
    let n = m.dim();
    if n < 2 {
        return Err(Error::domain("A-sequence extraction needs dimension >= 2"));
    }
    for i in 0..n {
        if m.get(i, i).is_zero() {
            return Err(Error::domain(format!("zero diagonal entry at ({i},{i})")));
        }
    }
    let mut a: Vec<Coef> = Vec::with_capacity(n - 1);
    for r in 0..n - 1 {
        // equation (row r+1, col 1): M[r+1][1] = sum_{j<=r} a_j M[r][j]
        let mut acc = m.get(r + 1, 1);
        for (j, aj) in a.iter().enumerate() {
            acc = &acc - &(aj * &m.get(r, j));
        }
        let d = m.get(r, r).inv().expect("diagonal checked above");
        a.push(&acc * &d);
    }
    for row in 0..n - 1 {
        for col in 0..=row {
            let mut acc = Coef::zero();
            for j in 0..=(row - col) {
                acc = &acc + &(&a[j] * &m.get(row, col + j));
            }
            if acc != m.get(row + 1, col + 1) {
                return Err(Error::domain(format!(
                    "not a Riordan matrix: recurrence fails at row {}, column {}",
                    row + 1,
                    col + 1
                )));
            }
        }
    }
    Ok(a)
}

/// Generating series of the A-sequence of any element with second
/// component `beta`: `x / rev(beta)`.
pub fn aseq_formula(beta: &Series) -> Result<Series> {
    let rev = beta.reversion()?;
    rev.shift_up(-1).inverse()
}

/// Rebuild a Riordan matrix from its first column and its A-sequence by
/// running the Rogers recurrence.
pub fn rogers_reconstruct(col0: &Series, a: &[Coef], n: usize) -> Result<TriMat> {
    if a.first().is_none_or(Coef::is_zero) {
        return Err(Error::domain("A-sequence must start with a nonzero a_0"));
    }
    if col0.order() < n as i64 - 1 {
        return Err(Error::domain("first column carries too few coefficients"));
    }
    let mut m = TriMat::zero(n);
    for i in 0..n {
        m.set(i, 0, col0.coeff(i as i64));
    }
    for row in 1..n {
        for col in 1..=row {
            let mut acc = Coef::zero();
            for (j, aj) in a.iter().enumerate() {
                if col - 1 + j > row - 1 {
                    break;
                }
                acc = &acc + &(aj * &m.get(row - 1, col - 1 + j));
            }
            m.set(row, col, acc);
        }
    }
    Ok(m)
}

/// Toeplitz determinant triangle of an A-sequence: `d_0 = 1` and
/// `d_{n+1} = sum_j a_j d_{n-j} x^j`; each `d_n` is a polynomial in `x`
/// of degree < n, returned as a series at order `count`.
pub fn toeplitz_d(a: &[Coef], count: usize) -> Vec<Series> {
    let order = count as i64;
    let mut d: Vec<Series> = vec![Series::one(order)];
    for n in 0..count {
        let mut next = Series::zero(order);
        for (j, aj) in a.iter().enumerate() {
            if j > n {
                break;
            }
            if aj.is_zero() {
                continue;
            }
            let term = d[n - j].scale(aj).shift_up(j as i64).truncate(order);
            next = &next + &term;
        }
        d.push(next);
    }
    d
}
