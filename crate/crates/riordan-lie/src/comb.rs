//! Enumerative combinatorics of increasing trees.
//!
//! A weight series `W = sum W_n X^n / n!` turns every function
//! `f: {1..n} -> {1..n}` into an energy `e_W(f) = prod_k W_{#f^-1(k)}`.
//! Restricting to admissible functions (`f(k) <= k`) and summing gives
//! the partition series `Z_0`, which the recursion `G_{k+1} = (W G_k)'`
//! computes efficiently; the brute-force sum over all `n!` admissible
//! functions is kept as the independent oracle. Admissible functions
//! encode rooted trees on `n+1` vertices with increasing labels, which
//! yields the tree-class counts and the Andre polynomials.

use std::collections::BTreeMap;

use crate::coef::Coef;
use crate::error::{Error, Result};
use crate::poly::{Param, Poly};
use crate::rat::{factorial, rati, Rat};
use crate::series::Series;

/// A function `f: {1..n} -> {1..n}` with `f(k) <= k`, stored 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleFun {
    f: Vec<usize>,
}

impl AdmissibleFun {
    pub fn new(f: Vec<usize>) -> Result<AdmissibleFun> {
        for (i, &v) in f.iter().enumerate() {
            if v < 1 || v > i + 1 {
                return Err(Error::domain(format!(
                    "not admissible: f({}) = {v} must lie in 1..={}",
                    i + 1,
                    i + 1
                )));
            }
        }
        Ok(AdmissibleFun { f })
    }

    pub fn size(&self) -> usize {
        self.f.len()
    }

    /// `f(k)` for `1 <= k <= n`.
    pub fn value(&self, k: usize) -> usize {
        self.f[k - 1]
    }

    /// Number of preimages of each value, index 1..=n.
    pub fn preimage_counts(&self) -> Vec<usize> {
        let n = self.size();
        let mut c = vec![0usize; n + 1];
        for &v in &self.f {
            c[v] += 1;
        }
        c.remove(0);
        c
    }

    /// The rank `sum (f(k) - 1) (k-1)!`, a bijection onto `0..n!`
    /// (the factorial number system with digits `f(k) - 1 <= k - 1`).
    pub fn rank(&self) -> Rat {
        self.f
            .iter()
            .enumerate()
            .map(|(i, &v)| rati((v - 1) as i64) * factorial(i as u64))
            .fold(rati(0), |a, b| a + b)
    }
}

/// Rooted tree on `n_vertices` vertices labeled increasingly from the
/// root 0; `parent[j - 1]` is the parent of vertex `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<usize>,
}

impl RootedTree {
    pub fn n_vertices(&self) -> usize {
        self.parent.len() + 1
    }

    pub fn parent_of(&self, v: usize) -> usize {
        self.parent[v - 1]
    }
}

/// The tree bijection: vertex `j > 0` hangs below vertex `f(j) - 1`.
pub fn tree_from_admissible(f: &AdmissibleFun) -> RootedTree {
    RootedTree { parent: (1..=f.size()).map(|j| f.value(j) - 1).collect() }
}

/// Vertex-degree histogram (degree = number of children), including
/// degree 0.
pub fn degrees_histogram(t: &RootedTree) -> BTreeMap<usize, usize> {
    let n = t.n_vertices();
    let mut deg = vec![0usize; n];
    for v in 1..n {
        deg[t.parent_of(v)] += 1;
    }
    let mut hist = BTreeMap::new();
    for d in deg {
        *hist.entry(d).or_insert(0) += 1;
    }
    hist
}

/// Energy `e_W(f) = prod_{k=1}^{n} W_{#f^-1(k)}` for an EGF coefficient
/// list `w[0..=n]`.
pub fn energy(w: &[Coef], f: &AdmissibleFun) -> Coef {
    let counts = f.preimage_counts();
    let mut acc = Coef::one();
    for c in counts {
        acc = &acc * &w[c];
    }
    acc
}

/// Depth-first enumeration of admissible functions of size `n` with
/// incremental preimage counts. `max_count` prunes branches whose counts
/// exceed it; `parity_pruned` prunes branches that can no longer reach
/// all-even counts.
fn for_each_admissible(
    n: usize,
    max_count: Option<usize>,
    parity_pruned: bool,
    visit: &mut impl FnMut(&[usize], &[usize]),
) {
    fn rec(
        k: usize,
        n: usize,
        vals: &mut Vec<usize>,
        counts: &mut Vec<usize>,
        odd: &mut usize,
        max_count: Option<usize>,
        parity_pruned: bool,
        visit: &mut impl FnMut(&[usize], &[usize]),
    ) {
        if k > n {
            visit(vals, counts);
            return;
        }
        let remaining = n - k + 1;
        for v in 1..=k {
            if let Some(mx) = max_count {
                if counts[v] == mx {
                    continue;
                }
            }
            counts[v] += 1;
            let delta: i64 = if counts[v] % 2 == 1 { 1 } else { -1 };
            *odd = (*odd as i64 + delta) as usize;
            let feasible = !parity_pruned
                || (*odd < remaining && (*odd % 2) == ((remaining - 1) % 2));
            if feasible {
                vals.push(v);
                rec(k + 1, n, vals, counts, odd, max_count, parity_pruned, visit);
                vals.pop();
            }
            *odd = (*odd as i64 - delta) as usize;
            counts[v] -= 1;
        }
    }
    let mut vals = Vec::with_capacity(n);
    let mut counts = vec![0usize; n + 1];
    let mut odd = 0usize;
    rec(1, n, &mut vals, &mut counts, &mut odd, max_count, parity_pruned, visit);
}

const BRUTE_LIMIT: usize = 9;

/// Brute-force `sum over admissible f of e_W(f)` — the `n!`-term oracle
/// against which the recursion is tested. `w` lists EGF coefficients
/// `W_0..W_n`.
pub fn z0_bruteforce(w: &[Coef], n: usize) -> Result<Coef> {
    if n > BRUTE_LIMIT {
        return Err(Error::domain(format!("brute force capped at n <= {BRUTE_LIMIT}")));
    }
    if n == 0 {
        return Ok(Coef::one());
    }
    if w.len() <= n {
        return Err(Error::domain("need EGF weights W_0..W_n"));
    }
    let mut total = Coef::zero();
    for_each_admissible(n, None, false, &mut |_, counts| {
        let mut prod = Coef::one();
        for v in 1..=n {
            prod = &prod * &w[counts[v]];
        }
        total = &total + &prod;
    });
    Ok(total)
}

/// The partition series `Z_0 = sum [X^0] G_k s^k / k!` with `G_0 = 1`,
/// `G_{k+1} = (W G_k)'`, exact through s-degree `m`. `W` is an ordinary
/// series in `X` (not the EGF list) and must carry order >= m.
pub fn z0_series(w: &Series, m: i64) -> Result<Series> {
    if w.order() < m {
        return Err(Error::domain(format!(
            "z0_series to degree {m} needs W at order >= {m}, got {}",
            w.order()
        )));
    }
    if w.val() < 0 {
        return Err(Error::domain("W must be an ordinary power series"));
    }
    let mut out: Vec<Coef> = vec![Coef::one()];
    let mut g = Series::one(w.order());
    for k in 1..=m {
        g = (&w.truncate(g.order()) * &g).truncate(g.order());
        if g.order() <= g.val() && g.is_zero() {
            out.push(Coef::zero());
            continue;
        }
        g = g.derive();
        let c = if g.order() >= 0 { g.coeff(0) } else { Coef::zero() };
        out.push(c.scale_rat(&factorial(k as u64).recip()));
    }
    out.resize((m + 1) as usize, Coef::zero());
    Ok(Series::new(0, m, out))
}

/// EGF coefficient list `W_k = k! [X^k] W` of a series, through index `n`.
pub fn egf_coeffs(w: &Series, n: usize) -> Vec<Coef> {
    (0..=n as i64).map(|k| w.coeff(k).scale_rat(&factorial(k as u64))).collect()
}

/// Ordinary series from an EGF coefficient list, at the given order.
pub fn series_from_egf(w: &[Coef], order: i64) -> Series {
    Series::from_fn(0, order, |k| {
        w.get(k as usize).map_or(Coef::zero(), |c| c.scale_rat(&factorial(k as u64).recip()))
    })
}

/// Both sides of the all-functions identity
/// `sum_{f in {n}^{n}} e_W(f) = [X^0] d^n/dX^n (W^n)`; the left sum runs
/// over all `n^n` functions, not only admissible ones.
pub fn derivative_identity_check(w: &Series, n: usize) -> Result<(Coef, Coef)> {
    if n > 7 {
        return Err(Error::domain("all-functions enumeration capped at n <= 7"));
    }
    if n == 0 {
        return Ok((Coef::one(), Coef::one()));
    }
    if w.order() < n as i64 {
        return Err(Error::domain("need W through X^n"));
    }
    let weights = egf_coeffs(w, n);
    // odometer over all n^n functions with incremental counts
    let mut vals = vec![1usize; n];
    let mut counts = vec![0usize; n + 1];
    counts[1] = n;
    let mut lhs = Coef::zero();
    loop {
        let mut prod = Coef::one();
        for v in 1..=n {
            prod = &prod * &weights[counts[v]];
        }
        lhs = &lhs + &prod;
        // advance
        let mut pos = 0;
        loop {
            if pos == n {
                break;
            }
            counts[vals[pos]] -= 1;
            if vals[pos] < n {
                vals[pos] += 1;
                counts[vals[pos]] += 1;
                break;
            }
            vals[pos] = 1;
            counts[1] += 1;
            pos += 1;
        }
        if pos == n {
            break;
        }
    }
    let wn = w.truncate(n as i64).powi(n as i64)?;
    let rhs = wn.coeff(n as i64).scale_rat(&factorial(n as u64));
    Ok((lhs, rhs))
}

/// Residual of the reciprocal ODE `W_0 U' = W o (W_0 U)` where `U` is
/// the primitive of `Z_0` with `U(0) = 0`, through s-degree `m`. When
/// `W_0 = 0` the ODE degenerates and `Z_0 = e^{W_1 s}` is checked
/// instead.
pub fn u_ode_residual(w: &Series, m: i64) -> Result<Series> {
    if w.order() < m + 1 {
        return Err(Error::domain("u_ode_residual needs W at order >= m + 1"));
    }
    let z0 = z0_series(w, m + 1)?;
    let w0 = w.coeff(0);
    if w0.is_zero() {
        // Z_0 = e^{W_1 s}
        let w1 = w.coeff(1); // EGF W_1 = 1! [X^1] W
        let target = Series::monomial(w1, 1, m + 1).exps()?;
        return Ok((&z0 - &target).truncate(m));
    }
    let u = z0.integrate0()?;
    let w0u = u.scale(&w0);
    let lhs = u.derive().scale(&w0);
    let rhs = w.compose(&w0u)?;
    let order = m.min(lhs.order()).min(rhs.order());
    Ok((&lhs.truncate(order) - &rhs.truncate(order)).truncate(order))
}

/// The Andre polynomial `A_n(t)`, by the recurrence
/// `A_{n+1} = (1 - t^2/2) A_n' + t (n+2)/2 A_n`, `A_0 = 1`.
pub fn andre_poly(n: usize) -> Poly {
    let t = Param::T;
    let one_minus = Poly::new(t, vec![rati(1), rati(0), Rat::new((-1).into(), 2.into())]);
    let mut a = Poly::one(t);
    for k in 0..n {
        let lead = Poly::var(t).scale(&Rat::new((k as i64 + 2).into(), 2.into()));
        a = one_minus.mul(&a.derivative()).add(&lead.mul(&a));
    }
    a
}

/// Brute-force Andre coefficient: admissible functions of size `n` with
/// all preimage counts <= 2, tallied by the number of singleton values.
pub fn andre_bruteforce(n: usize) -> Result<Poly> {
    if n > BRUTE_LIMIT {
        return Err(Error::domain(format!("brute force capped at n <= {BRUTE_LIMIT}")));
    }
    let mut tally = vec![0i64; n + 1];
    for_each_admissible(n, Some(2), false, &mut |_, counts| {
        let singles = (1..=n).filter(|&v| counts[v] == 1).count();
        tally[singles] += 1;
    });
    Ok(Poly::new(Param::T, tally.into_iter().map(rati).collect()))
}

const TREE_VERTEX_LIMIT: usize = 11;

/// Leaf-count histogram of increasing trees with `vertices` vertices and
/// every degree <= 2 (key: number of leaves).
pub fn count_s_histogram(vertices: usize) -> Result<BTreeMap<usize, u64>> {
    if vertices == 0 || vertices > TREE_VERTEX_LIMIT {
        return Err(Error::domain(format!(
            "tree enumeration needs 1..={TREE_VERTEX_LIMIT} vertices"
        )));
    }
    let n = vertices - 1; // admissible function size
    let mut hist = BTreeMap::new();
    for_each_admissible(n, Some(2), false, &mut |_, counts| {
        // leaves = last vertex plus unhit values
        let leaves = 1 + (1..=n).filter(|&v| counts[v] == 0).count();
        *hist.entry(leaves).or_insert(0) += 1;
    });
    Ok(hist)
}

/// Internal-vertex histogram of increasing trees with `vertices`
/// vertices and only even degrees (key: number of internal vertices).
pub fn count_e_histogram(vertices: usize) -> Result<BTreeMap<usize, u64>> {
    if vertices == 0 || vertices > TREE_VERTEX_LIMIT {
        return Err(Error::domain(format!(
            "tree enumeration needs 1..={TREE_VERTEX_LIMIT} vertices"
        )));
    }
    let n = vertices - 1;
    let mut hist = BTreeMap::new();
    for_each_admissible(n, None, true, &mut |_, counts| {
        if (1..=n).all(|v| counts[v] % 2 == 0) {
            let internal = (1..=n).filter(|&v| counts[v] >= 2).count();
            *hist.entry(internal).or_insert(0) += 1;
        }
    });
    Ok(hist)
}

/// Number of increasing trees with `n2` vertices, degrees <= 2 and `k`
/// leaves.
pub fn count_s(n2: usize, k: usize) -> Result<u64> {
    Ok(count_s_histogram(n2)?.get(&k).copied().unwrap_or(0))
}

/// Number of increasing trees with `n2p1` vertices, all degrees even and
/// `k` internal vertices.
pub fn count_e(n2p1: usize, k: usize) -> Result<u64> {
    Ok(count_e_histogram(n2p1)?.get(&k).copied().unwrap_or(0))
}

/// Exhaustive check that trees on `2n` vertices with degrees <= 2 and
/// `k` leaves are equinumerous with trees on `2n+1` vertices with even
/// degrees and `k` internal vertices, for every `k`.
pub fn idcomben_check(n: usize) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    let s = count_s_histogram(2 * n)?;
    let e = count_e_histogram(2 * n + 1)?;
    Ok(s.iter().map(|(k, c)| (*k, *c)).collect::<Vec<_>>()
        == e.iter().map(|(k, c)| (*k, *c)).collect::<Vec<_>>())
}

/// `Z_0` for the even-degree weight `W = 1 - t + t cosh(X)` (EGF weights
/// `W_0 = 1`, `W_{2k} = t` for `k >= 1`, odd weights 0), through
/// s-degree `m`, with coefficients polynomial in `t`.
pub fn even_family_z0(m: i64) -> Result<Series> {
    let w = Series::from_fn(0, m.max(1), |k| {
        if k == 0 {
            Coef::one()
        } else if k % 2 == 0 {
            Coef::Poly(Poly::monomial(Param::T, factorial(k as u64).recip(), 1))
        } else {
            Coef::zero()
        }
    });
    z0_series(&w, m)
}

/// The Andre-family `Z_0` for `W = 1 + t X + X^2/2` at an indeterminate
/// `t`, through s-degree `m`.
pub fn andre_family_z0(m: i64) -> Result<Series> {
    let w = Series::from_fn(0, m.max(2), |k| match k {
        0 => Coef::one(),
        1 => Coef::Poly(Poly::var(Param::T)),
        2 => Coef::Rat(Rat::new(1.into(), 2.into())),
        _ => Coef::zero(),
    });
    z0_series(&w, m)
}
