//! Exact search for normalized cocycles when `p^m` is too large to scan.
//!
//! With `X = base + Σ tₖVₖ` the cocycle equation is a system of quadratic
//! polynomials in the `tₖ`. Each search node row-reduces the system with the
//! quadratic monomials ordered first; rows whose leading monomial is linear
//! are then solved for that variable and substituted everywhere. When only
//! quadratic-led rows remain the node branches on one variable over `F_p`.

use crate::error::{Error, Result};
use crate::linalg::{all_vectors, Matrix};
use crate::scalars::{PrimeField, Scalar};

use super::{combine, NormalizedFamily, PreCosimplicialAlgebras};

/// Column layout `[t_k t_l (k ≤ l) ..., t_k ..., 1]` for `m` variables.
#[derive(Clone, Copy)]
struct Layout {
    m: usize,
}

impl Layout {
    fn quad_count(self) -> usize {
        self.m * (self.m + 1) / 2
    }

    fn quad(self, k: usize, l: usize) -> usize {
        let (k, l) = if k <= l { (k, l) } else { (l, k) };
        // Row k of the upper triangle starts after m + (m−1) + … + (m−k+1) entries.
        k * self.m - k * k.saturating_sub(1) / 2 + (l - k)
    }

    fn lin(self, k: usize) -> usize {
        self.quad_count() + k
    }

    fn constant(self) -> usize {
        self.quad_count() + self.m
    }

    fn width(self) -> usize {
        self.quad_count() + self.m + 1
    }
}

/// `t = β + α·s`, with `α` stored sparsely per old variable.
struct Substitution {
    beta: Vec<Scalar>,
    alpha: Vec<Vec<(usize, Scalar)>>,
    new_m: usize,
}

struct Search<'a> {
    d: &'a PreCosimplicialAlgebras,
    field: PrimeField,
    budget: u64,
    nodes: u64,
    out: Vec<Vec<Scalar>>,
}

pub(super) fn solve(d: &PreCosimplicialAlgebras, fam: &NormalizedFamily, budget: u64) -> Result<Vec<Vec<Scalar>>> {
    let f = d.field();
    let rows = initial_rows(d, fam);
    let mut s = Search { d, field: f, budget, nodes: 0, out: Vec::new() };
    s.node(rows, fam.dirs.len(), fam.base.clone(), fam.dirs.clone())?;
    Ok(s.out)
}

/// Coefficients of the cocycle equation `d²(X)d⁰(X) − d¹(X) = 0`.
fn initial_rows(d: &PreCosimplicialAlgebras, fam: &NormalizedFamily) -> Vec<Vec<Scalar>> {
    let f = d.field();
    let a2 = d.a2();
    let [d0, d1, d2] = &d.second;
    let m = fam.dirs.len();
    let lay = Layout { m };
    let n2 = a2.dim();
    let (a, b, c) = (d2.apply_coords(&fam.base), d0.apply_coords(&fam.base), d1.apply_coords(&fam.base));
    let big_a: Vec<_> = fam.dirs.iter().map(|v| d2.apply_coords(v)).collect();
    let big_b: Vec<_> = fam.dirs.iter().map(|v| d0.apply_coords(v)).collect();
    let big_c: Vec<_> = fam.dirs.iter().map(|v| d1.apply_coords(v)).collect();

    let mut rows = vec![vec![Scalar::ZERO; lay.width()]; n2];
    let mut put = |col: usize, v: &[Scalar], negate: bool| {
        for (r, &x) in v.iter().enumerate() {
            let x = if negate { f.neg(x) } else { x };
            rows[r][col] = f.add(rows[r][col], x);
        }
    };
    put(lay.constant(), &a2.mul_coords(&a, &b), false);
    put(lay.constant(), &c, true);
    for k in 0..m {
        put(lay.lin(k), &a2.mul_coords(&big_a[k], &b), false);
        put(lay.lin(k), &a2.mul_coords(&a, &big_b[k]), false);
        put(lay.lin(k), &big_c[k], true);
        for l in k..m {
            put(lay.quad(k, l), &a2.mul_coords(&big_a[k], &big_b[l]), false);
            if l != k {
                put(lay.quad(k, l), &a2.mul_coords(&big_a[l], &big_b[k]), false);
            }
        }
    }
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    rows
}

fn substitute_rows(f: PrimeField, rows: &[Vec<Scalar>], m: usize, sub: &Substitution) -> Vec<Vec<Scalar>> {
    let old = Layout { m };
    let new = Layout { m: sub.new_m };
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let mut nr = vec![Scalar::ZERO; new.width()];
        let cst = new.constant();
        nr[cst] = row[old.constant()];
        for k in 0..m {
            let c = row[old.lin(k)];
            if c.is_zero() {
                continue;
            }
            nr[cst] = f.mul_add(nr[cst], c, sub.beta[k]);
            for &(j, a) in &sub.alpha[k] {
                let col = new.lin(j);
                nr[col] = f.mul_add(nr[col], c, a);
            }
        }
        for k in 0..m {
            for l in k..m {
                let c = row[old.quad(k, l)];
                if c.is_zero() {
                    continue;
                }
                let (bk, bl) = (sub.beta[k], sub.beta[l]);
                nr[cst] = f.mul_add(nr[cst], c, f.mul(bk, bl));
                if !bk.is_zero() {
                    let cb = f.mul(c, bk);
                    for &(j, a) in &sub.alpha[l] {
                        let col = new.lin(j);
                        nr[col] = f.mul_add(nr[col], cb, a);
                    }
                }
                if !bl.is_zero() {
                    let cb = f.mul(c, bl);
                    for &(j, a) in &sub.alpha[k] {
                        let col = new.lin(j);
                        nr[col] = f.mul_add(nr[col], cb, a);
                    }
                }
                for &(i, ai) in &sub.alpha[k] {
                    let cai = f.mul(c, ai);
                    for &(j, aj) in &sub.alpha[l] {
                        let col = new.quad(i, j);
                        nr[col] = f.mul_add(nr[col], cai, aj);
                    }
                }
            }
        }
        if nr.iter().any(|x| !x.is_zero()) {
            out.push(nr);
        }
    }
    out
}

fn substitute_family(
    f: PrimeField,
    base: &[Scalar],
    dirs: &[Vec<Scalar>],
    sub: &Substitution,
) -> (Vec<Scalar>, Vec<Vec<Scalar>>) {
    let new_base = combine(f, base, dirs, &sub.beta);
    let n = base.len();
    let mut new_dirs = vec![vec![Scalar::ZERO; n]; sub.new_m];
    for (k, col) in sub.alpha.iter().enumerate() {
        for &(j, a) in col {
            for (x, v) in new_dirs[j].iter_mut().zip(&dirs[k]) {
                *x = f.mul_add(*x, a, *v);
            }
        }
    }
    (new_base, new_dirs)
}

impl Search<'_> {
    fn tick(&mut self, n: u64) -> Result<()> {
        self.nodes = self.nodes.saturating_add(n);
        if self.nodes > self.budget {
            return Err(Error::budget(self.nodes as u128, self.budget));
        }
        Ok(())
    }

    fn accept(&mut self, x: Vec<Scalar>) {
        if self.d.is_cocycle(&x) {
            self.out.push(x);
        }
    }

    fn node(
        &mut self,
        mut rows: Vec<Vec<Scalar>>,
        mut m: usize,
        mut base: Vec<Scalar>,
        mut dirs: Vec<Vec<Scalar>>,
    ) -> Result<()> {
        self.tick(1)?;
        let f = self.field;
        loop {
            let lay = Layout { m };
            if rows.is_empty() {
                break;
            }
            let mut mat = Matrix::from_rows(lay.width(), &rows);
            let pivots = mat.rref(f);
            if pivots.contains(&lay.constant()) {
                return Ok(());
            }
            rows = (0..pivots.len()).map(|r| mat.row(r).to_vec()).collect();
            let linear: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .filter(|(_, &c)| c >= lay.quad_count() && c < lay.constant())
                .map(|(r, &c)| (r, c - lay.quad_count()))
                .collect();
            if linear.is_empty() {
                break;
            }
            let mut pivot_row = vec![None; m];
            for &(r, k) in &linear {
                pivot_row[k] = Some(r);
            }
            let free: Vec<usize> = (0..m).filter(|&k| pivot_row[k].is_none()).collect();
            let mut new_index = vec![usize::MAX; m];
            for (j, &k) in free.iter().enumerate() {
                new_index[k] = j;
            }
            let mut beta = vec![Scalar::ZERO; m];
            let mut alpha = vec![Vec::new(); m];
            for k in 0..m {
                match pivot_row[k] {
                    None => alpha[k] = vec![(new_index[k], f.one())],
                    Some(r) => {
                        // t_k + Σ_free c_j t_j + c = 0.
                        beta[k] = f.neg(rows[r][lay.constant()]);
                        alpha[k] = free
                            .iter()
                            .filter(|&&j| !rows[r][lay.lin(j)].is_zero())
                            .map(|&j| (new_index[j], f.neg(rows[r][lay.lin(j)])))
                            .collect();
                    }
                }
            }
            let sub = Substitution { beta, alpha, new_m: free.len() };
            rows = substitute_rows(f, &rows, m, &sub);
            (base, dirs) = substitute_family(f, &base, &dirs, &sub);
            m = sub.new_m;
        }
        if m == 0 {
            if rows.is_empty() {
                self.accept(base);
            }
            return Ok(());
        }
        if rows.is_empty() {
            let count = (f.p() as u128).saturating_pow(m as u32);
            if count > u64::MAX as u128 {
                return Err(Error::budget(count, self.budget));
            }
            self.tick(count as u64)?;
            for t in all_vectors(f, m) {
                let x = combine(f, &base, &dirs, &t);
                self.accept(x);
            }
            return Ok(());
        }
        let var = self.branch_variable(&rows, m);
        for v in 0..f.p() {
            let mut beta = vec![Scalar::ZERO; m];
            let mut alpha = vec![Vec::new(); m];
            for k in 0..m {
                if k == var {
                    beta[k] = Scalar(v);
                } else {
                    alpha[k] = vec![(if k < var { k } else { k - 1 }, f.one())];
                }
            }
            let sub = Substitution { beta, alpha, new_m: m - 1 };
            let r = substitute_rows(f, &rows, m, &sub);
            let (b, ds) = substitute_family(f, &base, &dirs, &sub);
            self.node(r, m - 1, b, ds)?;
        }
        Ok(())
    }

    /// The variable in the most quadratic monomials, first on ties.
    fn branch_variable(&self, rows: &[Vec<Scalar>], m: usize) -> usize {
        let lay = Layout { m };
        let mut score = vec![0usize; m];
        for row in rows {
            for k in 0..m {
                for l in k..m {
                    if !row[lay.quad(k, l)].is_zero() {
                        score[k] += 1;
                        if l != k {
                            score[l] += 1;
                        }
                    }
                }
            }
        }
        (0..m).max_by_key(|&k| (score[k], std::cmp::Reverse(k))).unwrap_or(0)
    }
}
