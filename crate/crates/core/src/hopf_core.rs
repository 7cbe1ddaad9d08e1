//! Algebras, coalgebras and Hopf algebras given by structure constants,
//! with exhaustive axiom checks.

use crate::error::{Error, Result};
use crate::linalg::{concat, enumerate_elements, shape_dim, shape_name, BasedSpace, Element, LinearMap, Matrix, Shape};
use crate::report::CheckReport;
use crate::scalars::{PrimeField, Scalar};

/// An associative unital algebra on a tensor product of based spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    field: PrimeField,
    shape: Shape,
    mult: LinearMap,
    unit: LinearMap,
}

fn expect_shape(map: &LinearMap, dom: &[BasedSpace], cod: &[BasedSpace], what: &str) -> Result<()> {
    if map.dom() != dom || map.cod() != cod {
        return Err(Error::ShapeMismatch(format!(
            "{what} must map {} to {}, got {} to {}",
            shape_name(dom),
            shape_name(cod),
            shape_name(map.dom()),
            shape_name(map.cod())
        )));
    }
    Ok(())
}

impl AlgebraData {
    pub fn new(shape: Shape, mult: LinearMap, unit: LinearMap) -> Result<Self> {
        expect_shape(&mult, &concat(&shape, &shape), &shape, "multiplication")?;
        expect_shape(&unit, &[], &shape, "unit")?;
        Ok(AlgebraData { field: mult.field(), shape, mult, unit })
    }

    /// The ground field as a one-dimensional algebra (empty shape).
    pub fn ground(field: PrimeField) -> Self {
        AlgebraData {
            field,
            shape: Vec::new(),
            mult: LinearMap::identity(field, Vec::new()),
            unit: LinearMap::identity(field, Vec::new()),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn shape(&self) -> &[BasedSpace] {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        shape_dim(&self.shape)
    }

    pub fn mult(&self) -> &LinearMap {
        &self.mult
    }

    pub fn unit(&self) -> &LinearMap {
        &self.unit
    }

    pub fn one_coords(&self) -> Vec<Scalar> {
        self.unit.apply_coords(&[self.field.one()])
    }

    pub fn one(&self) -> Element {
        Element { shape: self.shape.clone(), coords: self.one_coords() }
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element> {
        Element::new(self.shape.clone(), coords)
    }

    /// Product of coordinate vectors.
    pub fn mul_coords(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let f = self.field;
        let mut out = vec![Scalar::ZERO; n];
        for (i, &a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = f.mul(a, b);
                for &(k, c) in self.mult.column(i * n + j) {
                    out[k as usize] = f.mul_add(out[k as usize], ab, c);
                }
            }
        }
        out
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        if x.shape != self.shape || y.shape != self.shape {
            return Err(Error::ShapeMismatch("multiplying elements of another algebra".into()));
        }
        Ok(Element { shape: self.shape.clone(), coords: self.mul_coords(&x.coords, &y.coords) })
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_matrix(&self, x: &[Scalar]) -> Matrix {
        self.mult_matrix(x, true)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_matrix(&self, x: &[Scalar]) -> Matrix {
        self.mult_matrix(x, false)
    }

    fn mult_matrix(&self, x: &[Scalar], left: bool) -> Matrix {
        let n = self.dim();
        let f = self.field;
        let mut m = Matrix::zeros(n, n);
        for (i, &a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..n {
                let col = if left { i * n + j } else { j * n + i };
                for &(k, c) in self.mult.column(col) {
                    let v = f.mul_add(m.get(k as usize, j), a, c);
                    m.set(k as usize, j, v);
                }
            }
        }
        m
    }

    /// Two-sided inverse: solve `x·y = 1`, then confirm `y·x = 1`.
    pub fn inverse_coords(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let one = self.one_coords();
        let y = self.left_matrix(x).solve(self.field, &one).ok_or(Error::NotInvertible)?;
        if self.mul_coords(&y, x) != one {
            return Err(Error::NotInvertible);
        }
        Ok(y)
    }

    pub fn inverse(&self, x: &Element) -> Result<Element> {
        Ok(Element { shape: self.shape.clone(), coords: self.inverse_coords(&x.coords)? })
    }

    pub fn is_unit(&self, x: &[Scalar]) -> bool {
        self.inverse_coords(x).is_ok()
    }

    /// `A⊗B` with componentwise multiplication.
    pub fn tensor(&self, other: &AlgebraData) -> AlgebraData {
        let f = self.field;
        let (a, b) = (&self.shape, &other.shape);
        let middle = LinearMap::identity(f, a.clone())
            .tensor(&LinearMap::flip_shapes(f, b, a))
            .tensor(&LinearMap::identity(f, b.clone()));
        let mult = self.mult.tensor(&other.mult).compose(&middle).expect("tensor algebra shapes");
        let unit = self.unit.tensor(&other.unit);
        AlgebraData { field: f, shape: concat(a, b), mult, unit }
    }

    /// Same structure constants on a different (equal-dimension) shape.
    pub fn relabelled(&self, shape: Shape) -> Result<AlgebraData> {
        let mult = self.mult.with_shapes(concat(&shape, &shape), shape.clone())?;
        let unit = self.unit.with_shapes(Vec::new(), shape.clone())?;
        Ok(AlgebraData { field: self.field, shape, mult, unit })
    }
}

/// Coassociative counital coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    field: PrimeField,
    shape: Shape,
    comult: LinearMap,
    counit: LinearMap,
}

impl CoalgebraData {
    pub fn new(shape: Shape, comult: LinearMap, counit: LinearMap) -> Result<Self> {
        expect_shape(&comult, &shape, &concat(&shape, &shape), "comultiplication")?;
        expect_shape(&counit, &shape, &[], "counit")?;
        Ok(CoalgebraData { field: comult.field(), shape, comult, counit })
    }

    pub fn shape(&self) -> &[BasedSpace] {
        &self.shape
    }

    pub fn comult(&self) -> &LinearMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinearMap {
        &self.counit
    }
}

/// A Hopf algebra given by its five structure maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    pub name: String,
    algebra: AlgebraData,
    coalgebra: CoalgebraData,
    antipode: LinearMap,
}

impl HopfData {
    pub fn new(
        name: impl Into<String>,
        algebra: AlgebraData,
        coalgebra: CoalgebraData,
        antipode: LinearMap,
    ) -> Result<Self> {
        if algebra.shape != coalgebra.shape {
            return Err(Error::ShapeMismatch("algebra and coalgebra live on different spaces".into()));
        }
        expect_shape(&antipode, &algebra.shape, &algebra.shape, "antipode")?;
        Ok(HopfData { name: name.into(), algebra, coalgebra, antipode })
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field
    }

    pub fn shape(&self) -> &[BasedSpace] {
        &self.algebra.shape
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalgebra
    }

    pub fn mult(&self) -> &LinearMap {
        &self.algebra.mult
    }

    pub fn unit(&self) -> &LinearMap {
        &self.algebra.unit
    }

    pub fn comult(&self) -> &LinearMap {
        &self.coalgebra.comult
    }

    pub fn counit(&self) -> &LinearMap {
        &self.coalgebra.counit
    }

    pub fn antipode(&self) -> &LinearMap {
        &self.antipode
    }

    pub fn id(&self) -> LinearMap {
        LinearMap::identity(self.field(), self.shape().to_vec())
    }

    /// Copy with the antipode replaced, used to build broken inputs in tests.
    pub fn with_antipode(&self, antipode: LinearMap) -> Result<HopfData> {
        HopfData::new(self.name.clone(), self.algebra.clone(), self.coalgebra.clone(), antipode)
    }

    /// The same Hopf algebra on a single space with composite labels.
    pub fn flattened(&self, name: &str, sep: &str) -> Result<HopfData> {
        let labels = (0..self.dim())
            .map(|i| {
                let m = crate::linalg::multi_index(self.shape(), i);
                m.iter().zip(self.shape()).map(|(&j, s)| s.label(j).to_string()).collect::<Vec<_>>().join(sep)
            })
            .collect();
        let space = vec![BasedSpace::new(name, labels)?];
        let s2 = concat(&space, &space);
        let algebra = self.algebra.relabelled(space.clone())?;
        let coalgebra = CoalgebraData::new(
            space.clone(),
            self.comult().with_shapes(space.clone(), s2)?,
            self.counit().with_shapes(space.clone(), Vec::new())?,
        )?;
        let antipode = self.antipode.with_shapes(space.clone(), space)?;
        HopfData::new(name, algebra, coalgebra, antipode)
    }
}

/// Associativity and unit laws.
pub fn check_algebra(a: &AlgebraData) -> CheckReport {
    let mut r = CheckReport::new(format!("algebra {}", shape_name(&a.shape)));
    let f = a.field;
    let id = LinearMap::identity(f, a.shape.clone());
    r.maps_equal("associativity", a.mult.compose(&a.mult.tensor(&id)), a.mult.compose(&id.tensor(&a.mult)));
    let left = a.mult.compose(&a.unit.tensor(&id)).and_then(|m| m.with_shapes(a.shape.clone(), a.shape.clone()));
    let right = a.mult.compose(&id.tensor(&a.unit)).and_then(|m| m.with_shapes(a.shape.clone(), a.shape.clone()));
    r.maps_equal("left unit", left, Ok(id.clone()));
    r.maps_equal("right unit", right, Ok(id));
    r
}

/// Coassociativity and counit laws.
pub fn check_coalgebra(c: &CoalgebraData) -> CheckReport {
    let mut r = CheckReport::new(format!("coalgebra {}", shape_name(&c.shape)));
    let f = c.field;
    let id = LinearMap::identity(f, c.shape.clone());
    r.maps_equal("coassociativity", c.comult.tensor(&id).compose(&c.comult), id.tensor(&c.comult).compose(&c.comult));
    let left = c.counit.tensor(&id).compose(&c.comult).and_then(|m| m.with_shapes(c.shape.clone(), c.shape.clone()));
    let right = id.tensor(&c.counit).compose(&c.comult).and_then(|m| m.with_shapes(c.shape.clone(), c.shape.clone()));
    r.maps_equal("left counit", left, Ok(id.clone()));
    r.maps_equal("right counit", right, Ok(id));
    r
}

/// `μ∘(σ⊗id)∘Δ` and `μ∘(id⊗σ)∘Δ` for arbitrary (possibly braided) data.
pub(crate) fn convolution_with_identity(
    mult: &LinearMap,
    comult: &LinearMap,
    sigma: &LinearMap,
    sigma_left: bool,
) -> Result<LinearMap> {
    let id = LinearMap::identity(mult.field(), sigma.dom().to_vec());
    let middle = if sigma_left { sigma.tensor(&id) } else { id.tensor(sigma) };
    mult.compose(&middle)?.compose(comult)
}

/// All bialgebra and antipode axioms; with `require_coop`, also that the
/// antipode is invertible and its inverse is an antipode for `Δ^op`.
pub fn check_hopf(h: &HopfData, require_coop: bool) -> CheckReport {
    let mut r = CheckReport::new(format!("Hopf algebra {}", h.name));
    let f = h.field();
    let s = h.shape().to_vec();
    r.absorb(check_algebra(&h.algebra));
    r.absorb(check_coalgebra(&h.coalgebra));
    let id = h.id();
    let (mu, eta, delta, eps) = (h.mult(), h.unit(), h.comult(), h.counit());
    let middle = id.tensor(&LinearMap::flip_shapes(f, &s, &s)).tensor(&id);
    r.maps_equal(
        "comultiplication is multiplicative",
        delta.compose(mu),
        mu.tensor(mu).compose(&middle).and_then(|m| m.compose(&delta.tensor(delta))),
    );
    r.maps_equal("comultiplication is unital", delta.compose(eta), Ok(eta.tensor(eta)));
    r.maps_equal("counit is multiplicative", eps.compose(mu), Ok(eps.tensor(eps)));
    r.maps_equal("counit is unital", eps.compose(eta), Ok(LinearMap::identity(f, Vec::new())));
    let unit_counit = eta.compose(eps).expect("ε lands in k, η starts there");
    r.maps_equal("left antipode", convolution_with_identity(mu, delta, &h.antipode, true), Ok(unit_counit.clone()));
    r.maps_equal("right antipode", convolution_with_identity(mu, delta, &h.antipode, false), Ok(unit_counit.clone()));
    if require_coop {
        match antipode_inverse(h) {
            Ok(inv) => {
                r.pass("antipode is invertible");
                r.maps_equal("antipode inverse", h.antipode.compose(&inv), Ok(id.clone()));
                let op = LinearMap::flip_shapes(f, &s, &s).compose(delta);
                match op {
                    Ok(op) => {
                        r.maps_equal(
                            "co-opposite left antipode",
                            convolution_with_identity(mu, &op, &inv, true),
                            Ok(unit_counit.clone()),
                        );
                        r.maps_equal(
                            "co-opposite right antipode",
                            convolution_with_identity(mu, &op, &inv, false),
                            Ok(unit_counit),
                        );
                    }
                    Err(e) => r.fail("co-opposite antipode", e.to_string()),
                }
            }
            Err(_) => r.fail("antipode is invertible", "antipode matrix is singular"),
        }
    }
    r
}

/// Inverse of the antipode as a linear map, if it exists.
pub fn antipode_inverse(h: &HopfData) -> Result<LinearMap> {
    invert_map(&h.antipode)
}

/// Inverse of a square linear map.
pub fn invert_map(map: &LinearMap) -> Result<LinearMap> {
    let f = map.field();
    let n = map.dom_dim();
    if map.cod_dim() != n {
        return Err(Error::NotInvertible);
    }
    let m = map.to_matrix();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![Scalar::ZERO; n];
        e[j] = f.one();
        cols.push(m.solve(f, &e).ok_or(Error::NotInvertible)?);
    }
    let inv = Matrix::from_columns(n, &cols);
    LinearMap::from_matrix(f, map.cod().to_vec(), map.dom().to_vec(), &inv)
}

/// All grouplike elements, in lexicographic order of coordinates.
pub fn grouplikes(h: &HopfData, budget: u64) -> Result<Vec<Element>> {
    let f = h.field();
    let n = h.dim();
    let mut out = Vec::new();
    for x in enumerate_elements(f, h.shape().to_vec(), budget)? {
        if h.counit().apply_coords(&x.coords) != vec![f.one()] {
            continue;
        }
        let dx = h.comult().apply_coords(&x.coords);
        let square = (0..n * n).all(|k| dx[k] == f.mul(x.coords[k / n], x.coords[k % n]));
        if square {
            out.push(x);
        }
    }
    Ok(out)
}

/// An invertible element together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unit {
    pub element: Element,
    pub inverse: Element,
}

/// All units of an algebra, in lexicographic order.
pub fn units(a: &AlgebraData, budget: u64) -> Result<Vec<Unit>> {
    let mut out = Vec::new();
    for x in enumerate_elements(a.field, a.shape.clone(), budget)? {
        if let Ok(inv) = a.inverse_coords(&x.coords) {
            let inverse = Element { shape: a.shape.clone(), coords: inv };
            out.push(Unit { element: x, inverse });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::make_prime_field;

    /// k[y]/(y^2) built by hand.
    fn dual_numbers(p: u64) -> AlgebraData {
        let f = make_prime_field(p).unwrap();
        let e = BasedSpace::new("E", vec!["1".into(), "y".into()]).unwrap();
        let s = vec![e.clone()];
        let mult = LinearMap::from_columns(f, concat(&s, &s), s.clone(), |j| match j {
            0 => vec![(0, f.one())],
            1 | 2 => vec![(1, f.one())],
            _ => vec![],
        });
        let unit = LinearMap::from_columns(f, vec![], s.clone(), |_| vec![(0, f.one())]);
        AlgebraData::new(s, mult, unit).unwrap()
    }

    #[test]
    fn dual_numbers_pass_and_units() {
        let a = dual_numbers(5);
        assert!(check_algebra(&a).passed());
        let u = units(&a, 1000).unwrap();
        assert_eq!(u.len(), 20);
        for unit in &u {
            assert_eq!(a.mul(&unit.element, &unit.inverse).unwrap(), a.one());
        }
    }

    #[test]
    fn corrupted_multiplication_reports_associativity_witness() {
        let a = dual_numbers(5);
        let f = a.field();
        let bad = LinearMap::from_columns(f, a.mult().dom().to_vec(), a.shape().to_vec(), |j| match j {
            0 => vec![(1, f.one())],
            1 | 2 => vec![(1, f.one())],
            _ => vec![],
        });
        let b = AlgebraData::new(a.shape().to_vec(), bad, a.unit().clone()).unwrap();
        let r = check_algebra(&b);
        let item = r.item("associativity").unwrap();
        assert!(!item.passed);
        assert!(item.witness.is_some());
    }

    #[test]
    fn ground_field_units() {
        let f = make_prime_field(5).unwrap();
        let k = AlgebraData::ground(f);
        assert!(check_algebra(&k).passed());
        assert_eq!(units(&k, 10).unwrap().len(), 4);
    }

    #[test]
    fn inverse_rejects_nilpotent() {
        let a = dual_numbers(7);
        let y = a.element(vec![Scalar(0), Scalar(1)]).unwrap();
        assert!(matches!(a.inverse(&y), Err(Error::NotInvertible)));
    }

    #[test]
    fn invert_map_roundtrip() {
        let f = make_prime_field(7).unwrap();
        let s = vec![BasedSpace::numbered("V", "v", 3)];
        let m = LinearMap::from_columns(f, s.clone(), s.clone(), |j| vec![(j, Scalar(2)), ((j + 1) % 3, Scalar(1))]);
        let inv = invert_map(&m).unwrap();
        assert_eq!(m.compose(&inv).unwrap(), LinearMap::identity(f, s));
    }
}
