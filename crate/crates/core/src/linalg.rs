//! Based spaces, sparse linear maps between their tensor products, and a
//! small dense Gaussian-elimination kernel.
//!
//! A tensor product is an ordered list of factors (a [`Shape`]); the empty
//! list is the ground field. Multi-indices linearize with the leftmost
//! factor most significant, and every other module relies on that.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalars::{PrimeField, Scalar};

#[derive(Debug, PartialEq, Eq, Hash)]
struct SpaceInner {
    name: String,
    labels: Vec<String>,
}

/// A finite-dimensional vector space with a named, labelled basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasedSpace(Arc<SpaceInner>);

impl BasedSpace {
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Result<Self> {
        let name = name.into();
        if labels.is_empty() {
            return Err(Error::ShapeMismatch(format!("space `{name}` has dimension 0")));
        }
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::ShapeMismatch(format!("space `{name}` repeats a basis label")));
        }
        Ok(BasedSpace(Arc::new(SpaceInner { name, labels })))
    }

    /// Space with labels `prefix0, prefix1, ...`.
    pub fn numbered(name: &str, prefix: &str, dim: usize) -> Self {
        Self::new(name, (0..dim).map(|i| format!("{prefix}{i}")).collect()).expect("numbered labels are distinct")
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn dim(&self) -> usize {
        self.0.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.labels.iter().position(|l| l == label)
    }
}

impl fmt::Display for BasedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Ordered tensor factors. The empty shape is the ground field.
pub type Shape = Vec<BasedSpace>;

pub fn shape_dim(shape: &[BasedSpace]) -> usize {
    shape.iter().map(BasedSpace::dim).product()
}

pub fn shape_name(shape: &[BasedSpace]) -> String {
    if shape.is_empty() {
        return "k".to_string();
    }
    shape.iter().map(BasedSpace::name).collect::<Vec<_>>().join("⊗")
}

/// Concatenation of shapes, i.e. their tensor product.
pub fn concat(a: &[BasedSpace], b: &[BasedSpace]) -> Shape {
    a.iter().chain(b).cloned().collect()
}

pub fn multi_index(shape: &[BasedSpace], mut idx: usize) -> Vec<usize> {
    let mut out = vec![0; shape.len()];
    for (slot, s) in out.iter_mut().zip(shape).rev() {
        *slot = idx % s.dim();
        idx /= s.dim();
    }
    out
}

pub fn linear_index(shape: &[BasedSpace], multi: &[usize]) -> usize {
    shape.iter().zip(multi).fold(0, |acc, (s, &i)| acc * s.dim() + i)
}

/// Human-readable basis label of a multi-index, e.g. `y⊗u1`.
pub fn basis_label(shape: &[BasedSpace], idx: usize) -> String {
    if shape.is_empty() {
        return "1".to_string();
    }
    multi_index(shape, idx).iter().zip(shape).map(|(&i, s)| s.label(i).to_string()).collect::<Vec<_>>().join("⊗")
}

/// `p^dim`, or `BudgetExceeded` if it is larger than `budget`.
pub fn check_budget(field: PrimeField, dim: usize, budget: u64) -> Result<u64> {
    let needed = (field.p() as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(Error::budget(needed, budget));
    }
    Ok(needed as u64)
}

/// A linear map between tensor products of based spaces.
///
/// Column `j` holds the image of the `j`-th basis tensor of the domain as
/// a sorted list of `(codomain index, nonzero scalar)`. Because that form
/// is canonical, two maps are equal exactly when their fields compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    field: PrimeField,
    dom: Shape,
    cod: Shape,
    cols: Vec<Vec<(u32, Scalar)>>,
}

fn normalize_column(field: PrimeField, mut col: Vec<(usize, Scalar)>) -> Vec<(u32, Scalar)> {
    col.sort_unstable_by_key(|e| e.0);
    let mut out: Vec<(u32, Scalar)> = Vec::with_capacity(col.len());
    for (i, v) in col {
        match out.last_mut() {
            Some(last) if last.0 as usize == i => last.1 = field.add(last.1, v),
            _ => out.push((i as u32, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

impl LinearMap {
    /// Builds a map column by column; entries may repeat and are summed.
    pub fn from_columns(
        field: PrimeField,
        dom: Shape,
        cod: Shape,
        mut column: impl FnMut(usize) -> Vec<(usize, Scalar)>,
    ) -> Self {
        let (n, m) = (shape_dim(&dom), shape_dim(&cod));
        let cols = (0..n)
            .map(|j| {
                let col = column(j);
                debug_assert!(col.iter().all(|e| e.0 < m));
                normalize_column(field, col)
            })
            .collect();
        LinearMap { field, dom, cod, cols }
    }

    /// Builds a map from `(cod multi-index, dom multi-index, scalar)` records.
    pub fn from_entries(
        field: PrimeField,
        dom: Shape,
        cod: Shape,
        entries: &[(Vec<usize>, Vec<usize>, Scalar)],
    ) -> Result<Self> {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); shape_dim(&dom)];
        for (c, d, v) in entries {
            check_multi(&cod, c)?;
            check_multi(&dom, d)?;
            if !field.contains(*v) {
                return Err(Error::Parse(format!("scalar {v} is not reduced mod {}", field.p())));
            }
            cols[linear_index(&dom, d)].push((linear_index(&cod, c), *v));
        }
        let cols = cols.into_iter().map(|c| normalize_column(field, c)).collect();
        Ok(LinearMap { field, dom, cod, cols })
    }

    pub fn zero(field: PrimeField, dom: Shape, cod: Shape) -> Self {
        let cols = vec![Vec::new(); shape_dim(&dom)];
        LinearMap { field, dom, cod, cols }
    }

    pub fn identity(field: PrimeField, shape: Shape) -> Self {
        let one = field.one();
        Self::from_columns(field, shape.clone(), shape, |j| vec![(j, one)])
    }

    /// Identity on coordinates between two shapes of equal total dimension.
    pub fn reshape(field: PrimeField, dom: Shape, cod: Shape) -> Result<Self> {
        if shape_dim(&dom) != shape_dim(&cod) {
            return Err(Error::ShapeMismatch(format!("cannot reshape {} into {}", shape_name(&dom), shape_name(&cod))));
        }
        let one = field.one();
        Ok(Self::from_columns(field, dom, cod, |j| vec![(j, one)]))
    }

    /// Factor permutation: output factor `i` is input factor `perm[i]`.
    pub fn permutation(field: PrimeField, dom: Shape, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), dom.len());
        let cod: Shape = perm.iter().map(|&i| dom[i].clone()).collect();
        let one = field.one();
        let dom_c = dom.clone();
        let cod_c = cod.clone();
        Self::from_columns(field, dom, cod, move |j| {
            let m = multi_index(&dom_c, j);
            let out: Vec<usize> = perm.iter().map(|&i| m[i]).collect();
            vec![(linear_index(&cod_c, &out), one)]
        })
    }

    /// `m⊗n ↦ n⊗m` for tensor blocks `m` and `n`.
    pub fn flip_shapes(field: PrimeField, m: &[BasedSpace], n: &[BasedSpace]) -> Self {
        let (a, b) = (m.len(), n.len());
        let perm: Vec<usize> = (a..a + b).chain(0..a).collect();
        Self::permutation(field, concat(m, n), &perm)
    }

    pub fn flip(field: PrimeField, m: &BasedSpace, n: &BasedSpace) -> Self {
        Self::flip_shapes(field, std::slice::from_ref(m), std::slice::from_ref(n))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dom(&self) -> &[BasedSpace] {
        &self.dom
    }

    pub fn cod(&self) -> &[BasedSpace] {
        &self.cod
    }

    pub fn dom_dim(&self) -> usize {
        self.cols.len()
    }

    pub fn cod_dim(&self) -> usize {
        shape_dim(&self.cod)
    }

    pub fn column(&self, j: usize) -> &[(u32, Scalar)] {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Same coefficients with new (dimension-compatible) spaces.
    pub fn with_shapes(&self, dom: Shape, cod: Shape) -> Result<Self> {
        if shape_dim(&dom) != self.dom_dim() || shape_dim(&cod) != self.cod_dim() {
            return Err(Error::ShapeMismatch("relabelling changes dimensions".into()));
        }
        Ok(LinearMap { field: self.field, dom, cod, cols: self.cols.clone() })
    }

    /// True if both maps have the same coefficient table, ignoring space names.
    pub fn same_coefficients(&self, other: &LinearMap) -> bool {
        self.field == other.field && self.cod_dim() == other.cod_dim() && self.cols == other.cols
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinearMap) -> Result<LinearMap> {
        if g.cod != self.dom || g.field != self.field {
            return Err(Error::ShapeMismatch(format!(
                "compose: codomain {} does not match domain {}",
                shape_name(&g.cod),
                shape_name(&self.dom)
            )));
        }
        let field = self.field;
        let m = self.cod_dim();
        let mut acc = vec![Scalar::ZERO; m];
        let mut touched: Vec<usize> = Vec::new();
        let cols = g
            .cols
            .iter()
            .map(|gcol| {
                for &(k, gv) in gcol {
                    for &(i, fv) in &self.cols[k as usize] {
                        let i = i as usize;
                        if acc[i].is_zero() {
                            touched.push(i);
                        }
                        acc[i] = field.mul_add(acc[i], gv, fv);
                    }
                }
                touched.sort_unstable();
                touched.dedup();
                let col: Vec<(u32, Scalar)> =
                    touched.iter().filter(|&&i| !acc[i].is_zero()).map(|&i| (i as u32, acc[i])).collect();
                for &i in &touched {
                    acc[i] = Scalar::ZERO;
                }
                touched.clear();
                col
            })
            .collect();
        Ok(LinearMap { field, dom: g.dom.clone(), cod: self.cod.clone(), cols })
    }

    /// `self ⊗ g`.
    pub fn tensor(&self, g: &LinearMap) -> LinearMap {
        let field = self.field;
        let gm = g.cod_dim() as u32;
        let mut cols = Vec::with_capacity(self.dom_dim() * g.dom_dim());
        for fcol in &self.cols {
            for gcol in &g.cols {
                let mut col = Vec::with_capacity(fcol.len() * gcol.len());
                for &(i, a) in fcol {
                    for &(k, b) in gcol {
                        col.push((i * gm + k, field.mul(a, b)));
                    }
                }
                cols.push(col);
            }
        }
        LinearMap { field, dom: concat(&self.dom, &g.dom), cod: concat(&self.cod, &g.cod), cols }
    }

    fn combine(&self, other: &LinearMap, sign: Scalar) -> Result<LinearMap> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::ShapeMismatch("adding maps of different shapes".into()));
        }
        let field = self.field;
        Ok(Self::from_columns(field, self.dom.clone(), self.cod.clone(), |j| {
            self.cols[j]
                .iter()
                .map(|&(i, v)| (i as usize, v))
                .chain(other.cols[j].iter().map(|&(i, v)| (i as usize, field.mul(sign, v))))
                .collect()
        }))
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.combine(other, self.field.one())
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.combine(other, self.field.neg(self.field.one()))
    }

    pub fn scale(&self, c: Scalar) -> LinearMap {
        let field = self.field;
        Self::from_columns(field, self.dom.clone(), self.cod.clone(), |j| {
            self.cols[j].iter().map(|&(i, v)| (i as usize, field.mul(c, v))).collect()
        })
    }

    /// Matrix-vector product on raw coordinates, no shape checks.
    pub fn apply_coords(&self, x: &[Scalar]) -> Vec<Scalar> {
        let field = self.field;
        let mut out = vec![Scalar::ZERO; self.cod_dim()];
        for (col, &xv) in self.cols.iter().zip(x) {
            if xv.is_zero() {
                continue;
            }
            for &(i, v) in col {
                out[i as usize] = field.mul_add(out[i as usize], xv, v);
            }
        }
        out
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        if x.shape != self.dom {
            return Err(Error::ShapeMismatch(format!(
                "apply: element of {} given to map on {}",
                shape_name(&x.shape),
                shape_name(&self.dom)
            )));
        }
        Ok(Element { shape: self.cod.clone(), coords: self.apply_coords(&x.coords) })
    }

    /// All nonzero entries as `(cod multi-index, dom multi-index, scalar)`,
    /// ordered by domain index then codomain index.
    pub fn entries(&self) -> Vec<(Vec<usize>, Vec<usize>, Scalar)> {
        let mut out = Vec::with_capacity(self.nnz());
        for (j, col) in self.cols.iter().enumerate() {
            let d = multi_index(&self.dom, j);
            for &(i, v) in col {
                out.push((multi_index(&self.cod, i as usize), d.clone(), v));
            }
        }
        out
    }

    /// First domain basis index (lexicographic) where the two maps differ.
    pub fn first_difference(&self, other: &LinearMap) -> Option<Vec<usize>> {
        if self.dom_dim() != other.dom_dim() {
            return Some(Vec::new());
        }
        self.cols.iter().zip(&other.cols).position(|(a, b)| a != b).map(|j| multi_index(&self.dom, j))
    }

    /// Dense `cod_dim × dom_dim` matrix.
    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.cod_dim(), self.dom_dim());
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                m.set(i as usize, j, v);
            }
        }
        m
    }

    pub fn from_matrix(field: PrimeField, dom: Shape, cod: Shape, m: &Matrix) -> Result<Self> {
        if m.rows() != shape_dim(&cod) || m.cols() != shape_dim(&dom) {
            return Err(Error::ShapeMismatch("matrix size does not match shapes".into()));
        }
        Ok(Self::from_columns(field, dom, cod, |j| (0..m.rows()).map(|i| (i, m.get(i, j))).collect()))
    }
}

fn check_multi(shape: &[BasedSpace], multi: &[usize]) -> Result<()> {
    if multi.len() != shape.len() || multi.iter().zip(shape).any(|(&i, s)| i >= s.dim()) {
        return Err(Error::ShapeMismatch(format!("multi-index {multi:?} out of range for {}", shape_name(shape))));
    }
    Ok(())
}

/// A vector in a tensor product, with dense coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub shape: Shape,
    pub coords: Vec<Scalar>,
}

impl Element {
    pub fn new(shape: Shape, coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != shape_dim(&shape) {
            return Err(Error::ShapeMismatch(format!(
                "{} coordinates for a space of dimension {}",
                coords.len(),
                shape_dim(&shape)
            )));
        }
        Ok(Element { shape, coords })
    }

    pub fn zero(shape: Shape) -> Self {
        let n = shape_dim(&shape);
        Element { shape, coords: vec![Scalar::ZERO; n] }
    }

    pub fn basis(field: PrimeField, shape: Shape, idx: usize) -> Self {
        let mut e = Self::zero(shape);
        e.coords[idx] = field.one();
        e
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, field: PrimeField, other: &Element) -> Element {
        let coords = self.coords.iter().zip(&other.coords).map(|(&a, &b)| field.add(a, b)).collect();
        Element { shape: self.shape.clone(), coords }
    }

    pub fn sub(&self, field: PrimeField, other: &Element) -> Element {
        let coords = self.coords.iter().zip(&other.coords).map(|(&a, &b)| field.sub(a, b)).collect();
        Element { shape: self.shape.clone(), coords }
    }

    pub fn scale(&self, field: PrimeField, c: Scalar) -> Element {
        let coords = self.coords.iter().map(|&a| field.mul(c, a)).collect();
        Element { shape: self.shape.clone(), coords }
    }

    /// Raw coordinate values, convenient as hash keys and for reports.
    pub fn values(&self) -> Vec<u32> {
        self.coords.iter().map(|c| c.0).collect()
    }

    /// Readable form such as `2·y + 1·1⊗u`.
    pub fn display(&self) -> String {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}·{}", c, basis_label(&self.shape, i)))
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// Lexicographic stream of every element of a tensor product.
pub struct ElementIter {
    field: PrimeField,
    shape: Shape,
    next: Option<Vec<Scalar>>,
}

impl Iterator for ElementIter {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let p = self.field.p();
        let mut carry = true;
        for c in succ.iter_mut().rev() {
            if c.0 + 1 < p {
                c.0 += 1;
                carry = false;
                break;
            }
            c.0 = 0;
        }
        if !carry {
            self.next = Some(succ);
        }
        Some(Element { shape: self.shape.clone(), coords: cur })
    }
}

/// All `p^dim` elements of `shape` in lexicographic order of coordinates.
pub fn enumerate_elements(field: PrimeField, shape: Shape, budget: u64) -> Result<ElementIter> {
    check_budget(field, shape_dim(&shape), budget)?;
    let n = shape_dim(&shape);
    Ok(ElementIter { field, shape, next: Some(vec![Scalar::ZERO; n]) })
}

/// Lexicographic stream of all vectors in `F_p^n` (no budget check).
pub fn all_vectors(field: PrimeField, n: usize) -> impl Iterator<Item = Vec<Scalar>> {
    let p = field.p();
    let mut next = Some(vec![Scalar::ZERO; n]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        for c in succ.iter_mut().rev() {
            if c.0 + 1 < p {
                c.0 += 1;
                next = Some(succ);
                return Some(cur);
            }
            c.0 = 0;
        }
        Some(cur)
    })
}

/// Dense row-major matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::ZERO; rows * cols] }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, field: PrimeField, x: &[Scalar]) -> Vec<Scalar> {
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(x).fold(Scalar::ZERO, |acc, (&a, &b)| field.mul_add(acc, a, b)))
            .collect()
    }

    pub fn mul(&self, field: PrimeField, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = field.mul_add(out.data[idx], a, other.get(k, j));
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self, field: PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if piv != r {
                for j in 0..self.cols {
                    self.data.swap(piv * self.cols + j, r * self.cols + j);
                }
            }
            let inv = field.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = field.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c);
                if f.is_zero() {
                    continue;
                }
                let nf = field.neg(f);
                for j in c..self.cols {
                    let v = field.mul_add(self.get(i, j), nf, self.get(r, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, field: PrimeField) -> usize {
        self.clone().rref(field).len()
    }

    /// Basis of the null space; vector `k` is 1 on the `k`-th free column.
    pub fn kernel(&self, field: PrimeField) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let mut is_pivot = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        (0..self.cols)
            .filter(|&c| is_pivot[c].is_none())
            .map(|free| {
                let mut v = vec![Scalar::ZERO; self.cols];
                v[free] = field.one();
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = field.neg(m.get(r, free));
                }
                v
            })
            .collect()
    }

    /// Solutions of `self · x = b` as (particular solution, kernel basis).
    pub fn solve_affine(&self, field: PrimeField, b: &[Scalar]) -> Option<(Vec<Scalar>, Vec<Vec<Scalar>>)> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (i, &bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, bi);
        }
        let pivots = aug.rref(field);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::ZERO; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols);
        }
        Some((x, self.kernel(field)))
    }

    pub fn solve(&self, field: PrimeField, b: &[Scalar]) -> Option<Vec<Scalar>> {
        self.solve_affine(field, b).map(|(x, _)| x)
    }
}

/// True if two families of vectors span the same subspace.
pub fn same_span(field: PrimeField, dim: usize, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> bool {
    let ra = Matrix::from_columns(dim, a).rank(field);
    let rb = Matrix::from_columns(dim, b).rank(field);
    let both: Vec<Vec<Scalar>> = a.iter().chain(b).cloned().collect();
    ra == rb && Matrix::from_columns(dim, &both).rank(field) == ra
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::make_prime_field;
    use proptest::prelude::*;

    fn k5() -> PrimeField {
        make_prime_field(5).unwrap()
    }

    fn space(name: &str, dim: usize) -> BasedSpace {
        BasedSpace::numbered(name, name, dim)
    }

    #[test]
    fn space_validation() {
        assert!(BasedSpace::new("V", vec![]).is_err());
        assert!(BasedSpace::new("V", vec!["a".into(), "a".into()]).is_err());
        let v = BasedSpace::new("V", vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(v.dim(), 2);
        assert_eq!(v.index_of("b"), Some(1));
    }

    #[test]
    fn linearization_is_leftmost_major() {
        let shape = vec![space("A", 2), space("B", 3)];
        assert_eq!(linear_index(&shape, &[1, 0]), 3);
        assert_eq!(multi_index(&shape, 5), vec![1, 2]);
        for i in 0..6 {
            assert_eq!(linear_index(&shape, &multi_index(&shape, i)), i);
        }
    }

    #[test]
    fn identity_laws_and_flip() {
        let k = k5();
        let (m, n) = (space("M", 2), space("N", 3));
        let f = LinearMap::from_columns(k, vec![m.clone()], vec![n.clone()], |j| vec![(j, Scalar(2)), (2, Scalar(1))]);
        let idm = LinearMap::identity(k, vec![m.clone()]);
        let idn = LinearMap::identity(k, vec![n.clone()]);
        assert_eq!(idn.compose(&f).unwrap(), f);
        assert_eq!(f.compose(&idm).unwrap(), f);
        let fl = LinearMap::flip(k, &m, &n);
        let back = LinearMap::flip(k, &n, &m);
        assert_eq!(back.compose(&fl).unwrap(), LinearMap::identity(k, vec![m.clone(), n.clone()]));
        assert_eq!(fl.compose(&back).unwrap(), LinearMap::identity(k, vec![n.clone(), m.clone()]));
        let x = Element::basis(k, vec![m.clone(), n.clone()], linear_index(&[m.clone(), n.clone()], &[1, 2]));
        let y = fl.apply(&x).unwrap();
        assert_eq!(y, Element::basis(k, vec![n.clone(), m.clone()], linear_index(&[n, m], &[2, 1])));
    }

    #[test]
    fn flip_with_one_dimensional_factor() {
        let k = k5();
        let (one, d) = (space("L", 1), space("D", 4));
        let fl = LinearMap::flip(k, &one, &d);
        let r = LinearMap::reshape(k, vec![d.clone(), one.clone()], vec![one, d]).unwrap();
        assert!(r.compose(&fl).unwrap().same_coefficients(&LinearMap::identity(k, fl.dom().to_vec())));
    }

    #[test]
    fn tensor_of_identities_and_entry_count() {
        let k = k5();
        let (m, n) = (space("M", 2), space("N", 3));
        let t = LinearMap::identity(k, vec![m.clone()]).tensor(&LinearMap::identity(k, vec![n.clone()]));
        assert_eq!(t, LinearMap::identity(k, vec![m.clone(), n.clone()]));
        let f = LinearMap::from_columns(k, vec![m.clone()], vec![m.clone()], |j| vec![(1 - j, Scalar(3))]);
        let g = LinearMap::from_columns(k, vec![n.clone()], vec![n.clone()], |j| vec![(j, Scalar(4))]);
        assert_eq!(f.tensor(&g).nnz(), f.nnz() * g.nnz());
    }

    #[test]
    fn apply_examples() {
        let k = k5();
        let m = space("M", 3);
        let x = Element::new(vec![m.clone()], vec![Scalar(1), Scalar(4), Scalar(2)]).unwrap();
        assert_eq!(LinearMap::identity(k, vec![m.clone()]).apply(&x).unwrap(), x);
        let z = LinearMap::zero(k, vec![m.clone()], vec![m.clone()]);
        assert!(z.apply(&x).unwrap().is_zero());
        assert!(LinearMap::identity(k, vec![space("W", 3)]).apply(&x).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let k = k5();
        assert_eq!(enumerate_elements(k, vec![space("V", 2)], 10_000_000).unwrap().count(), 25);
        assert_eq!(enumerate_elements(k, vec![space("V", 6)], 10_000_000).unwrap().count(), 15_625);
        assert!(matches!(enumerate_elements(k, vec![space("V", 12)], 10_000_000), Err(Error::BudgetExceeded { .. })));
        let v: Vec<_> = enumerate_elements(k, vec![space("V", 2)], 100).unwrap().map(|e| e.values()).collect();
        assert_eq!(v[0], vec![0, 0]);
        assert_eq!(v[1], vec![0, 1]);
        assert_eq!(v[24], vec![4, 4]);
        assert_eq!(all_vectors(k, 2).count(), 25);
        assert_eq!(all_vectors(k, 0).count(), 1);
    }

    #[test]
    fn compose_rejects_mismatch() {
        let k = k5();
        let f = LinearMap::identity(k, vec![space("A", 2)]);
        let g = LinearMap::identity(k, vec![space("B", 2)]);
        assert!(matches!(f.compose(&g), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn kernel_and_solve() {
        let k = k5();
        let m = Matrix::from_rows(3, &[vec![Scalar(1), Scalar(2), Scalar(3)], vec![Scalar(2), Scalar(4), Scalar(2)]]);
        let ker = m.kernel(k);
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(k, &ker[0]).iter().all(|v| v.is_zero()));
        let b = vec![Scalar(1), Scalar(0)];
        let x = m.solve(k, &b).unwrap();
        assert_eq!(m.mul_vec(k, &x), b);
        let singular = Matrix::from_rows(2, &[vec![Scalar(1), Scalar(1)], vec![Scalar(2), Scalar(2)]]);
        assert!(singular.solve(k, &[Scalar(1), Scalar(1)]).is_none());
    }

    fn arb_map(field: PrimeField, dom: Shape, cod: Shape) -> impl Strategy<Value = LinearMap> {
        let (n, m) = (shape_dim(&dom), shape_dim(&cod));
        prop::collection::vec((0..m, 0..field.p()), 0..=n * 2).prop_flat_map(move |_| {
            let (dom, cod) = (dom.clone(), cod.clone());
            prop::collection::vec(prop::collection::vec((0..m, 0..field.p()), 0..3), n).prop_map(move |cols| {
                LinearMap::from_columns(field, dom.clone(), cod.clone(), |j| {
                    cols[j].iter().map(|&(i, v)| (i, Scalar(v))).collect()
                })
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn compose_is_associative(
            (f, g, h) in {
                let k = k5();
                let (a, b, c, d) = (space("A", 2), space("B", 3), space("C", 2), space("D", 3));
                (arb_map(k, vec![c.clone()], vec![d]), arb_map(k, vec![b.clone()], vec![c]), arb_map(k, vec![a], vec![b]))
            }
        ) {
            let left = f.compose(&g).unwrap().compose(&h).unwrap();
            let right = f.compose(&g.compose(&h).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn tensor_is_functorial(
            (f, f2, g, g2) in {
                let k = k5();
                let (a, b, c) = (space("A", 2), space("B", 3), space("C", 2));
                (
                    arb_map(k, vec![b.clone()], vec![c.clone()]),
                    arb_map(k, vec![a.clone()], vec![b.clone()]),
                    arb_map(k, vec![a.clone()], vec![c.clone()]),
                    arb_map(k, vec![b.clone()], vec![a.clone()]),
                )
            }
        ) {
            let lhs = f.tensor(&g).compose(&f2.tensor(&g2)).unwrap();
            let rhs = f.compose(&f2).unwrap().tensor(&g.compose(&g2).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn add_sub_roundtrip(
            (f, g) in {
                let k = k5();
                let (a, b) = (space("A", 3), space("B", 2));
                (arb_map(k, vec![a.clone()], vec![b.clone()]), arb_map(k, vec![a], vec![b]))
            }
        ) {
            prop_assert_eq!(f.add(&g).unwrap().sub(&g).unwrap(), f);
        }
    }
}
