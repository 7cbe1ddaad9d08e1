//! Pre-cosimplicial diagrams of algebras and their non-abelian `H⁰`, `Z¹`
//! and `H¹`.
//!
//! A diagram has three levels `A⁰ → A¹ → A²`. A 1-cocycle is an invertible
//! `X ∈ A¹` with `d²(X)d⁰(X) = d¹(X)`; units `x` of `A⁰` act on the right by
//! `X ⇀ x = d¹(x⁻¹)·X·d⁰(x)` and `H¹` is the orbit set, pointed at `1`.
//!
//! Three diagram builders exist: [`build_c`] (coefficients in an
//! `H`-comodule algebra), [`build_cstar`] (the braided version over `E`)
//! and [`tensor_with_h`] (every level tensored with `H`).

mod decomposition;
mod solver;

use std::collections::HashMap;

use serde::Serialize;

pub use decomposition::{
    assemble_pair, build_box_set, check_coinvariant_levels, coinvariants, split_pair, verify_decomposition,
    verify_exact_sequence, BoxSet, Coinvariants,
};

use crate::error::{Error, Result};
use crate::hopf_core::{units, AlgebraData, HopfData, Unit};
use crate::linalg::{all_vectors, check_budget, Element, LinearMap, Matrix};
use crate::radford::{
    check_plain_comodule_algebra, check_radford_comodule_algebra, star_extension_unchecked, BraidedHopfData,
    ComoduleAlgebraData,
};
use crate::report::CheckReport;
use crate::scalars::{PrimeField, Scalar};

/// `A⁰ ⇉ A¹ ⇶ A²` with codegeneracies `s⁰: A¹ → A⁰`, `s¹: A² → A¹`.
///
/// `s⁰` is the map behind the normalization `s⁰(X) = 1` of cocycles.
#[derive(Clone, Debug)]
pub struct PreCosimplicialAlgebras {
    pub name: String,
    pub levels: [AlgebraData; 3],
    /// `d⁰, d¹: A⁰ → A¹`.
    pub first: [LinearMap; 2],
    /// `d⁰, d¹, d²: A¹ → A²`.
    pub second: [LinearMap; 3],
    pub codegeneracies: [LinearMap; 2],
}

impl PreCosimplicialAlgebras {
    pub fn field(&self) -> PrimeField {
        self.levels[0].field()
    }

    pub fn a0(&self) -> &AlgebraData {
        &self.levels[0]
    }

    pub fn a1(&self) -> &AlgebraData {
        &self.levels[1]
    }

    pub fn a2(&self) -> &AlgebraData {
        &self.levels[2]
    }

    /// `d²(X)·d⁰(X) = d¹(X)`, without the invertibility condition.
    pub fn cocycle_equation(&self, x: &[Scalar]) -> bool {
        let [d0, d1, d2] = &self.second;
        self.a2().mul_coords(&d2.apply_coords(x), &d0.apply_coords(x)) == d1.apply_coords(x)
    }

    /// The full cocycle condition.
    pub fn is_cocycle(&self, x: &[Scalar]) -> bool {
        self.cocycle_equation(x) && self.a1().is_unit(x)
    }

    /// `1 ∈ A¹`, the distinguished cocycle.
    pub fn trivial_cocycle(&self) -> Element {
        self.a1().one()
    }
}

fn algebra_morphism(r: &mut CheckReport, name: &str, map: &LinearMap, src: &AlgebraData, dst: &AlgebraData) {
    r.maps_equal(format!("{name} is multiplicative"), map.compose(src.mult()), dst.mult().compose(&map.tensor(map)));
    r.maps_equal(format!("{name} is unital"), map.compose(src.unit()), Ok(dst.unit().clone()));
}

/// The pre-cosimplicial identities `dⁱdʲ = dʲd^{i−1}` (`i > j`), the
/// codegeneracy identities, and that every structure map is an algebra map.
pub fn check_diagram(d: &PreCosimplicialAlgebras) -> CheckReport {
    let mut r = CheckReport::new(format!("diagram {}", d.name));
    let [a0, a1, a2] = &d.levels;
    let [f0, f1] = &d.first;
    let [g0, g1, g2] = &d.second;
    let [s0, s1] = &d.codegeneracies;
    r.maps_equal("d1 d0 = d0 d0", g1.compose(f0), g0.compose(f0));
    r.maps_equal("d2 d0 = d0 d1", g2.compose(f0), g0.compose(f1));
    r.maps_equal("d2 d1 = d1 d1", g2.compose(f1), g1.compose(f1));
    let id0 = LinearMap::identity(d.field(), a0.shape().to_vec());
    let id1 = LinearMap::identity(d.field(), a1.shape().to_vec());
    r.maps_equal("s0 d0 = id", s0.compose(f0), Ok(id0.clone()));
    r.maps_equal("s0 d1 = id", s0.compose(f1), Ok(id0));
    r.maps_equal("s1 d1 = id", s1.compose(g1), Ok(id1.clone()));
    r.maps_equal("s1 d2 = id", s1.compose(g2), Ok(id1));
    r.maps_equal("s1 d0 = d0 s0", s1.compose(g0), f0.compose(s0));
    for (name, map, src, dst) in [
        ("d0 (level 0)", f0, a0, a1),
        ("d1 (level 0)", f1, a0, a1),
        ("d0 (level 1)", g0, a1, a2),
        ("d1 (level 1)", g1, a1, a2),
        ("d2 (level 1)", g2, a1, a2),
        ("s0", s0, a1, a0),
        ("s1", s1, a2, a1),
    ] {
        algebra_morphism(&mut r, name, map, src, dst);
    }
    r
}

/// `C(H,F)`: `F → F⊗H → F⊗H⊗H` with `d⁰ = ϱ`, `d¹ = id⊗η` and
/// `d⁰ = ϱ⊗id`, `d¹ = id⊗Δ`, `d² = id⊗id⊗η`.
pub fn build_c(h: &HopfData, fa: &ComoduleAlgebraData) -> Result<PreCosimplicialAlgebras> {
    let rho = fa.h_coaction.as_ref().ok_or_else(|| Error::ShapeMismatch("F has no H-coaction".into()))?;
    check_plain_comodule_algebra(h, &fa.algebra, rho).require()?;
    let f = h.field();
    let hopf_alg = h.algebra();
    let a0 = fa.algebra.clone();
    let a1 = a0.tensor(hopf_alg);
    let a2 = a1.tensor(hopf_alg);
    let idf = LinearMap::identity(f, fa.shape().to_vec());
    let idh = h.id();
    let d = PreCosimplicialAlgebras {
        name: format!("C({}, {})", h.name, fa.name),
        first: [rho.clone(), idf.tensor(h.unit())],
        second: [rho.tensor(&idh), idf.tensor(h.comult()), idf.tensor(&idh).tensor(h.unit())],
        codegeneracies: [idf.tensor(h.counit()), idf.tensor(&idh).tensor(h.counit())],
        levels: [a0, a1, a2],
    };
    check_diagram(&d).require()?;
    Ok(d)
}

/// `C⋆(E,F)`: `F → F⋆E → (F⋆E)⋆E`, the faces of [`build_c`] with the
/// braided products on the upper levels.
pub fn build_cstar(e: &BraidedHopfData, fa: &ComoduleAlgebraData) -> Result<PreCosimplicialAlgebras> {
    check_radford_comodule_algebra(fa, e).require()?;
    let f = e.h.field();
    let rho = fa.e_coaction.clone().ok_or_else(|| Error::ShapeMismatch("F has no E-coaction".into()))?;
    let fe = star_extension_unchecked(fa, e)?;
    let fee = star_extension_unchecked(&fe, e)?;
    let idf = LinearMap::identity(f, fa.shape().to_vec());
    let ide = e.id();
    let d = PreCosimplicialAlgebras {
        name: format!("C⋆({}, {})", e.name, fa.name),
        second: [rho.tensor(&ide), idf.tensor(&e.comult), idf.tensor(&ide).tensor(&e.unit)],
        first: [rho, idf.tensor(&e.unit)],
        codegeneracies: [idf.tensor(&e.counit), idf.tensor(&ide).tensor(&e.counit)],
        levels: [fa.algebra.clone(), fe.algebra, fee.algebra],
    };
    check_diagram(&d).require()?;
    Ok(d)
}

/// Every level tensored with `h` (plain tensor algebras), every map `⊗ id_H`.
pub fn tensor_with_h(d: &PreCosimplicialAlgebras, h: &HopfData) -> Result<PreCosimplicialAlgebras> {
    let idh = h.id();
    let t = |m: &LinearMap| m.tensor(&idh);
    let out = PreCosimplicialAlgebras {
        name: format!("{}⊗{}", d.name, h.name),
        levels: [d.levels[0].tensor(h.algebra()), d.levels[1].tensor(h.algebra()), d.levels[2].tensor(h.algebra())],
        first: [t(&d.first[0]), t(&d.first[1])],
        second: [t(&d.second[0]), t(&d.second[1]), t(&d.second[2])],
        codegeneracies: [t(&d.codegeneracies[0]), t(&d.codegeneracies[1])],
    };
    check_diagram(&out).require()?;
    Ok(out)
}

fn sorted_elements(d: &AlgebraData, mut v: Vec<Vec<Scalar>>) -> Vec<Element> {
    v.sort();
    v.dedup();
    v.into_iter().map(|c| Element { shape: d.shape().to_vec(), coords: c }).collect()
}

/// Units of `A⁰` on which `d⁰` and `d¹` agree, in lexicographic order.
///
/// The equalizer is a linear subspace; only its `p^k` points are searched.
pub fn compute_h0(d: &PreCosimplicialAlgebras, budget: u64) -> Result<Vec<Element>> {
    let f = d.field();
    let diff = d.first[0].sub(&d.first[1])?.to_matrix();
    let kernel = diff.kernel(f);
    check_budget(f, kernel.len(), budget)?;
    let n = d.a0().dim();
    let found = all_vectors(f, kernel.len())
        .map(|c| {
            let mut x = vec![Scalar::ZERO; n];
            for (ci, v) in c.iter().zip(&kernel) {
                for (xi, vi) in x.iter_mut().zip(v) {
                    *xi = f.mul_add(*xi, *ci, *vi);
                }
            }
            x
        })
        .filter(|x| d.a0().is_unit(x))
        .collect();
    Ok(sorted_elements(d.a0(), found))
}

/// How [`compute_z1`] searches the normalized cocycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Z1Strategy {
    /// Brute force when `p^m` fits the budget, otherwise the solver.
    #[default]
    Auto,
    BruteForce,
    /// Branch-and-substitute on the quadratic system; the budget bounds
    /// the number of search nodes.
    Solver,
}

/// All 1-cocycles of a diagram, lexicographically ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleSet {
    pub cocycles: Vec<Element>,
    /// Index of `1`.
    pub distinguished: usize,
}

impl CocycleSet {
    pub fn len(&self) -> usize {
        self.cocycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cocycles.is_empty()
    }

    pub fn index_of(&self, x: &[Scalar]) -> Option<usize> {
        self.cocycles.binary_search_by(|c| c.coords.as_slice().cmp(x)).ok()
    }
}

/// `X = base + Σ tₖ dirₖ` describing `{X : s⁰(X) = 1}`.
pub(crate) struct NormalizedFamily {
    pub base: Vec<Scalar>,
    pub dirs: Vec<Vec<Scalar>>,
}

pub(crate) fn normalized_family(d: &PreCosimplicialAlgebras) -> Result<NormalizedFamily> {
    let f = d.field();
    let s = d.codegeneracies[0].to_matrix();
    let (base, dirs) = s
        .solve_affine(f, &d.a0().one_coords())
        .ok_or_else(|| Error::ShapeMismatch("codegeneracy does not reach 1".into()))?;
    Ok(NormalizedFamily { base, dirs })
}

fn combine(f: PrimeField, base: &[Scalar], dirs: &[Vec<Scalar>], t: &[Scalar]) -> Vec<Scalar> {
    let mut x = base.to_vec();
    for (tk, v) in t.iter().zip(dirs) {
        if tk.is_zero() {
            continue;
        }
        for (xi, vi) in x.iter_mut().zip(v) {
            *xi = f.mul_add(*xi, *tk, *vi);
        }
    }
    x
}

/// Normalized 1-cocycles: `s⁰(X) = 1` and the cocycle equation.
///
/// Such `X` are automatically invertible; the check is kept anyway and
/// [`compute_z1_unnormalized`] cross-checks the two descriptions.
pub fn compute_z1(d: &PreCosimplicialAlgebras, budget: u64, strategy: Z1Strategy) -> Result<CocycleSet> {
    let f = d.field();
    let fam = normalized_family(d)?;
    let m = fam.dirs.len();
    let fits = check_budget(f, m, budget).is_ok();
    let found = match strategy {
        Z1Strategy::BruteForce => {
            check_budget(f, m, budget)?;
            brute_force(d, &fam)
        }
        Z1Strategy::Auto if fits => brute_force(d, &fam),
        Z1Strategy::Auto | Z1Strategy::Solver => solver::solve(d, &fam, budget)?,
    };
    finish_cocycles(d, found)
}

fn brute_force(d: &PreCosimplicialAlgebras, fam: &NormalizedFamily) -> Vec<Vec<Scalar>> {
    let f = d.field();
    all_vectors(f, fam.dirs.len()).map(|t| combine(f, &fam.base, &fam.dirs, &t)).filter(|x| d.is_cocycle(x)).collect()
}

fn finish_cocycles(d: &PreCosimplicialAlgebras, found: Vec<Vec<Scalar>>) -> Result<CocycleSet> {
    let cocycles = sorted_elements(d.a1(), found);
    let one = d.a1().one_coords();
    let distinguished = cocycles
        .binary_search_by(|c| c.coords.as_slice().cmp(&one))
        .map_err(|_| Error::ShapeMismatch("1 is not a cocycle; the diagram is malformed".into()))?;
    Ok(CocycleSet { cocycles, distinguished })
}

/// Invertible `X ∈ A¹` with the cocycle equation, searched over all of `A¹`.
pub fn compute_z1_unnormalized(d: &PreCosimplicialAlgebras, budget: u64) -> Result<CocycleSet> {
    let f = d.field();
    check_budget(f, d.a1().dim(), budget)?;
    let found = all_vectors(f, d.a1().dim()).filter(|x| d.is_cocycle(x)).collect();
    finish_cocycles(d, found)
}

/// `X ⇀ x = d¹(x⁻¹)·X·d⁰(x)`.
pub fn act(x_cocycle: &Element, x: &Element, d: &PreCosimplicialAlgebras) -> Result<Element> {
    if x_cocycle.shape != d.a1().shape() || x.shape != d.a0().shape() {
        return Err(Error::ShapeMismatch("act: element of the wrong level".into()));
    }
    let inv = d.a0().inverse_coords(&x.coords)?;
    Ok(Element { shape: x_cocycle.shape.clone(), coords: act_coords(d, &x_cocycle.coords, &x.coords, &inv) })
}

pub(crate) fn act_coords(d: &PreCosimplicialAlgebras, big_x: &[Scalar], x: &[Scalar], inv: &[Scalar]) -> Vec<Scalar> {
    let a1 = d.a1();
    let left = d.first[1].apply_coords(inv);
    let right = d.first[0].apply_coords(x);
    a1.mul_coords(&a1.mul_coords(&left, big_x), &right)
}

/// Matrix of `X ↦ X ⇀ x` on `A¹`.
pub(crate) fn action_matrix(d: &PreCosimplicialAlgebras, u: &Unit) -> Matrix {
    let f = d.field();
    let a1 = d.a1();
    let left = a1.left_matrix(&d.first[1].apply_coords(&u.inverse.coords));
    let right = a1.right_matrix(&d.first[0].apply_coords(&u.element.coords));
    left.mul(f, &right)
}

/// Union–find over item indices.
pub(crate) struct Dsu(Vec<usize>);

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }

    /// Blocks sorted by least member; members ascending.
    pub fn blocks(&mut self) -> Vec<Vec<usize>> {
        let mut map: HashMap<usize, Vec<usize>> = HashMap::new();
        for i in 0..self.0.len() {
            let r = self.find(i);
            map.entry(r).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = map.into_values().collect();
        out.sort();
        out
    }
}

/// Orbit partition of a sorted item list under a family of linear maps.
///
/// Returns the blocks (sorted, so block `i`'s least member is its canonical
/// representative) or the first `(item, map)` pair leaving the set.
pub(crate) fn orbit_blocks(
    field: PrimeField,
    items: &[Vec<Scalar>],
    maps: &[Matrix],
) -> std::result::Result<Vec<Vec<usize>>, (usize, usize)> {
    let index: HashMap<&[Scalar], usize> = items.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    let mut dsu = Dsu::new(items.len());
    for (mi, m) in maps.iter().enumerate() {
        for (i, it) in items.iter().enumerate() {
            let img = m.mul_vec(field, it);
            match index.get(img.as_slice()) {
                Some(&j) => dsu.union(i, j),
                None => return Err((i, mi)),
            }
        }
    }
    Ok(dsu.blocks())
}

/// One point of `H¹`: an orbit of cocycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Class {
    /// Lexicographically least member.
    pub rep: Element,
    /// Indices into [`CohomologyReport::z1`], ascending.
    pub members: Vec<usize>,
    pub distinguished: bool,
}

/// `H⁰`, `Z¹` and the orbit decomposition `H¹`, plus the sanity checks run
/// while computing them.
#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub diagram: String,
    pub h0: Vec<Element>,
    pub z1: CocycleSet,
    pub classes: Vec<H1Class>,
    /// `class_of[i]` is the class of cocycle `i`.
    pub class_of: Vec<usize>,
    pub checks: CheckReport,
}

impl CohomologyReport {
    pub fn distinguished_class(&self) -> usize {
        self.class_of[self.z1.distinguished]
    }

    /// Class of an arbitrary element, if it is a cocycle.
    pub fn class_of_element(&self, x: &[Scalar]) -> Option<usize> {
        self.z1.index_of(x).map(|i| self.class_of[i])
    }

    /// The serialized form `{"h0", "z1_count", "h1_classes"}`.
    pub fn to_json(&self) -> CohomologyJson {
        CohomologyJson {
            diagram: self.diagram.clone(),
            h0: self.h0.iter().map(|e| e.values()).collect(),
            z1_count: self.z1.len(),
            h1_classes: self
                .classes
                .iter()
                .map(|c| ClassJson { rep: c.rep.values(), orbit_size: c.members.len(), distinguished: c.distinguished })
                .collect(),
            checks_passed: self.checks.passed(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassJson {
    pub rep: Vec<u32>,
    pub orbit_size: usize,
    pub distinguished: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyJson {
    pub diagram: String,
    pub h0: Vec<Vec<u32>>,
    pub z1_count: usize,
    pub h1_classes: Vec<ClassJson>,
    pub checks_passed: bool,
}

/// `H⁰`, `Z¹` and `H¹` under the action of every unit of `A⁰`.
pub fn compute_h1(d: &PreCosimplicialAlgebras, budget: u64) -> Result<CohomologyReport> {
    compute_h1_with(d, budget, Z1Strategy::Auto)
}

pub fn compute_h1_with(d: &PreCosimplicialAlgebras, budget: u64, strategy: Z1Strategy) -> Result<CohomologyReport> {
    let f = d.field();
    let h0 = compute_h0(d, budget)?;
    let z1 = compute_z1(d, budget, strategy)?;
    let unit_list = units(d.a0(), budget)?;
    let mut checks = CheckReport::new(format!("cohomology of {}", d.name));
    check_h0_group(&mut checks, d, &h0);
    let maps: Vec<Matrix> = unit_list.iter().map(|u| action_matrix(d, u)).collect();
    let items: Vec<Vec<Scalar>> = z1.cocycles.iter().map(|c| c.coords.clone()).collect();
    let blocks = match orbit_blocks(f, &items, &maps) {
        Ok(b) => {
            checks.pass("Z¹ is stable under the action");
            b
        }
        Err((i, u)) => {
            checks.fail(
                "Z¹ is stable under the action",
                format!("{} ⇀ {}", z1.cocycles[i].display(), unit_list[u].element.display()),
            );
            return Err(Error::prerequisite(checks));
        }
    };
    let mut class_of = vec![0; z1.len()];
    let classes = blocks
        .into_iter()
        .enumerate()
        .map(|(ci, members)| {
            for &m in &members {
                class_of[m] = ci;
            }
            H1Class {
                rep: z1.cocycles[members[0]].clone(),
                distinguished: members.contains(&z1.distinguished),
                members,
            }
        })
        .collect();
    checks.count("units of A0", unit_list.len() as u64);
    checks.count("H0", h0.len() as u64);
    checks.count("Z1", z1.len() as u64);
    let report = CohomologyReport { diagram: d.name.clone(), h0, z1, classes, class_of, checks };
    let n = report.classes.len() as u64;
    let mut report = report;
    report.checks.count("H1", n);
    Ok(report)
}

fn check_h0_group(r: &mut CheckReport, d: &PreCosimplicialAlgebras, h0: &[Element]) {
    let a0 = d.a0();
    let set: std::collections::HashSet<&[Scalar]> = h0.iter().map(|e| e.coords.as_slice()).collect();
    let one = a0.one_coords();
    r.check("H⁰ contains 1", set.contains(one.as_slice()), || "1 missing".into());
    let mut witness = None;
    'outer: for x in h0 {
        match a0.inverse_coords(&x.coords) {
            Ok(inv) if set.contains(inv.as_slice()) => {}
            _ => {
                witness = Some(format!("inverse of {}", x.display()));
                break;
            }
        }
        for y in h0 {
            if !set.contains(a0.mul_coords(&x.coords, &y.coords).as_slice()) {
                witness = Some(format!("{} · {}", x.display(), y.display()));
                break 'outer;
            }
        }
    }
    r.check("H⁰ is a group", witness.is_none(), || witness.clone().unwrap_or_default());
}

/// Whether `a` and `b` in `A¹` are cohomologous: `b = a ⇀ x` for a unit `x`.
///
/// `d¹(x)·b = a·d⁰(x)` is linear in `x`; only its solution space is searched
/// for an invertible point.
pub fn cohomologous(d: &PreCosimplicialAlgebras, a: &[Scalar], b: &[Scalar], budget: u64) -> Result<bool> {
    let f = d.field();
    let a1 = d.a1();
    let lhs = a1.right_matrix(b).mul(f, &d.first[1].to_matrix());
    let rhs = a1.left_matrix(a).mul(f, &d.first[0].to_matrix());
    let mut diff = Matrix::zeros(lhs.rows(), lhs.cols());
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            diff.set(i, j, f.sub(lhs.get(i, j), rhs.get(i, j)));
        }
    }
    let kernel = diff.kernel(f);
    check_budget(f, kernel.len(), budget)?;
    let zero = vec![Scalar::ZERO; d.a0().dim()];
    Ok(all_vectors(f, kernel.len()).any(|c| d.a0().is_unit(&combine(f, &zero, &kernel, &c))))
}
