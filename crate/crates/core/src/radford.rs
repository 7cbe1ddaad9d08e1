//! Hopf algebras in the Yetter–Drinfeld category, Radford comodule
//! algebras, the Radford product `H⋆E`, and the extension `F⋆E`.
//!
//! `H⋆E` lives on the two-factor shape `[H, E]` (h-index major), so the
//! projections `id⊗ε_E` and `ε_H⊗id` are plain tensor maps. Use
//! [`HopfData::flattened`] for a single-space copy with `h⋆e` labels.

use crate::error::{Error, Result};
use crate::hopf_core::{check_algebra, check_hopf, convolution_with_identity, AlgebraData, CoalgebraData, HopfData};
use crate::linalg::{concat, shape_name, BasedSpace, LinearMap, Shape};
use crate::report::CheckReport;
use crate::yd::{
    braiding_tau, check_comodule, check_module, check_yd, comodule_morphism, module_morphism, regular_comodule,
    regular_module, tensor_action, tensor_comodule, trivial_comodule, trivial_module, HComodule, HModule, YdObject,
};

/// A Hopf algebra `E` in the Yetter–Drinfeld category over `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedHopfData {
    pub name: String,
    pub h: HopfData,
    pub yd: YdObject,
    pub mult: LinearMap,
    pub unit: LinearMap,
    pub comult: LinearMap,
    pub counit: LinearMap,
    pub antipode: LinearMap,
}

impl BraidedHopfData {
    pub fn shape(&self) -> &[BasedSpace] {
        self.yd.shape()
    }

    pub fn algebra(&self) -> Result<AlgebraData> {
        AlgebraData::new(self.shape().to_vec(), self.mult.clone(), self.unit.clone())
    }

    pub fn id(&self) -> LinearMap {
        LinearMap::identity(self.h.field(), self.shape().to_vec())
    }

    /// The ground field with trivial structures; `H⋆k` is `H`.
    pub fn trivial(h: &HopfData) -> Self {
        let f = h.field();
        let idk = LinearMap::identity(f, Vec::new());
        BraidedHopfData {
            name: "k".into(),
            h: h.clone(),
            yd: YdObject { module: trivial_module(h, Vec::new()), comodule: trivial_comodule(h, Vec::new()) },
            mult: idk.clone(),
            unit: idk.clone(),
            comult: idk.clone(),
            counit: idk.clone(),
            antipode: idk,
        }
    }

    /// Module structure on `E⊗E`.
    fn module2(&self) -> Result<HModule> {
        tensor_action(&self.h, &self.yd.module, &self.yd.module)
    }

    fn comodule2(&self) -> Result<HComodule> {
        tensor_comodule(&self.h, &self.yd.comodule, &self.yd.comodule)
    }

    /// `τ_{E,E}`.
    pub fn self_braiding(&self) -> Result<LinearMap> {
        braiding_tau(&self.h, &self.yd.module, &self.yd.comodule)
    }
}

/// Every axiom of a Hopf algebra in the Yetter–Drinfeld category.
pub fn check_braided_hopf(e: &BraidedHopfData) -> CheckReport {
    let h = &e.h;
    let f = h.field();
    let mut r = CheckReport::new(format!("braided Hopf algebra {}", e.name));
    r.absorb(check_module(h, &e.yd.module));
    r.absorb(check_comodule(h, &e.yd.comodule));
    r.absorb(check_yd(h, &e.yd));
    match e.algebra() {
        Ok(a) => r.absorb(check_algebra(&a)),
        Err(err) => r.fail("algebra shapes", err.to_string()),
    }
    let s = e.shape().to_vec();
    match CoalgebraData::new(s.clone(), e.comult.clone(), e.counit.clone()) {
        Ok(c) => r.absorb(crate::hopf_core::check_coalgebra(&c)),
        Err(err) => r.fail("coalgebra shapes", err.to_string()),
    }

    // Structure maps are morphisms in the category.
    let k_mod = trivial_module(h, Vec::new());
    let k_com = trivial_comodule(h, Vec::new());
    let (m1, c1) = (&e.yd.module, &e.yd.comodule);
    match (e.module2(), e.comodule2()) {
        (Ok(m2), Ok(c2)) => {
            let cases: [(&str, &LinearMap, &HModule, &HModule, &HComodule, &HComodule); 5] = [
                ("multiplication", &e.mult, &m2, m1, &c2, c1),
                ("unit", &e.unit, &k_mod, m1, &k_com, c1),
                ("comultiplication", &e.comult, m1, &m2, c1, &c2),
                ("counit", &e.counit, m1, &k_mod, c1, &k_com),
                ("antipode", &e.antipode, m1, m1, c1, c1),
            ];
            for (name, map, dm, cm, dc, cc) in cases {
                let lin = module_morphism(h, map, dm, cm).unwrap_or(false);
                let colin = comodule_morphism(h, map, dc, cc).unwrap_or(false);
                r.check(format!("{name} is H-linear"), lin, || format!("{name} does not commute with the action"));
                r.check(format!("{name} is H-colinear"), colin, || {
                    format!("{name} does not commute with the coaction")
                });
            }
        }
        (Err(err), _) | (_, Err(err)) => r.fail("tensor structures", err.to_string()),
    }

    let id = e.id();
    let braided_middle = e.self_braiding().map(|t| id.tensor(&t).tensor(&id));
    r.maps_equal(
        "comultiplication is braided multiplicative",
        e.comult.compose(&e.mult),
        braided_middle
            .and_then(|mid| e.mult.tensor(&e.mult).compose(&mid))
            .and_then(|m| m.compose(&e.comult.tensor(&e.comult))),
    );
    r.maps_equal("comultiplication is unital", e.comult.compose(&e.unit), Ok(e.unit.tensor(&e.unit)));
    r.maps_equal("counit is multiplicative", e.counit.compose(&e.mult), Ok(e.counit.tensor(&e.counit)));
    r.maps_equal("counit is unital", e.counit.compose(&e.unit), Ok(LinearMap::identity(f, Vec::new())));
    let eta_eps = e.unit.compose(&e.counit).expect("ε lands in k, η starts there");
    r.maps_equal(
        "left antipode",
        convolution_with_identity(&e.mult, &e.comult, &e.antipode, true),
        Ok(eta_eps.clone()),
    );
    r.maps_equal("right antipode", convolution_with_identity(&e.mult, &e.comult, &e.antipode, false), Ok(eta_eps));
    r
}

/// Which coaction axioms a [`ComoduleAlgebraData`] is declared to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComoduleKind {
    /// An ordinary comodule algebra over the Hopf algebra(s) present.
    Plain,
    /// A Radford `E`-comodule algebra (which also needs the `H`-coaction).
    Radford,
}

/// An algebra together with any of its coactions over `H`, `E`, `H⋆E`.
///
/// Coaction codomains are `F⊗H`, `F⊗E` and `F⊗H⊗E` respectively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebraData {
    pub name: String,
    pub algebra: AlgebraData,
    pub h_coaction: Option<LinearMap>,
    pub e_coaction: Option<LinearMap>,
    pub he_coaction: Option<LinearMap>,
    pub kind: ComoduleKind,
}

impl ComoduleAlgebraData {
    /// An algebra with a single coaction over `h`.
    pub fn over_h(name: impl Into<String>, algebra: AlgebraData, coaction: LinearMap) -> Self {
        ComoduleAlgebraData {
            name: name.into(),
            algebra,
            h_coaction: Some(coaction),
            e_coaction: None,
            he_coaction: None,
            kind: ComoduleKind::Plain,
        }
    }

    /// `E` itself, coacted on by `H` (its Yetter–Drinfeld coaction) and by `Δ_E`.
    pub fn from_braided(e: &BraidedHopfData) -> Result<Self> {
        Ok(ComoduleAlgebraData {
            name: e.name.clone(),
            algebra: e.algebra()?,
            h_coaction: Some(e.yd.comodule.coaction.clone()),
            e_coaction: Some(e.comult.clone()),
            he_coaction: None,
            kind: ComoduleKind::Radford,
        })
    }

    /// The ground field with trivial coactions over `H` and `E`.
    pub fn trivial(e: &BraidedHopfData) -> Self {
        let f = e.h.field();
        ComoduleAlgebraData {
            name: "k".into(),
            algebra: AlgebraData::ground(f),
            h_coaction: Some(e.h.unit().clone()),
            e_coaction: Some(e.unit.clone()),
            he_coaction: None,
            kind: ComoduleKind::Radford,
        }
    }

    pub fn shape(&self) -> &[BasedSpace] {
        self.algebra.shape()
    }

    pub fn h_comodule(&self) -> Result<HComodule> {
        let c = self.h_coaction.clone().ok_or_else(|| missing("H"))?;
        Ok(HComodule { shape: self.shape().to_vec(), coaction: c })
    }

    fn e_coaction(&self) -> Result<&LinearMap> {
        self.e_coaction.as_ref().ok_or_else(|| missing("E"))
    }

    fn he_coaction(&self) -> Result<&LinearMap> {
        self.he_coaction.as_ref().ok_or_else(|| missing("H⋆E"))
    }
}

fn missing(what: &str) -> Error {
    Error::ShapeMismatch(format!("comodule algebra has no coaction over {what}"))
}

/// Comodule-algebra axioms for `coaction: F → F⊗H` over an ordinary Hopf algebra.
pub fn check_plain_comodule_algebra(h: &HopfData, algebra: &AlgebraData, coaction: &LinearMap) -> CheckReport {
    let mut r = CheckReport::new(format!("{}-comodule algebra {}", h.name, shape_name(algebra.shape())));
    let fs = algebra.shape().to_vec();
    let n = HComodule { shape: fs.clone(), coaction: coaction.clone() };
    r.absorb(check_comodule(h, &n));
    let fh = algebra.tensor(h.algebra());
    r.maps_equal(
        "coaction is multiplicative",
        coaction.compose(algebra.mult()),
        fh.mult().compose(&coaction.tensor(coaction)),
    );
    r.maps_equal("E-coaction is unital", coaction.compose(algebra.unit()), Ok(algebra.unit().tensor(h.unit())));
    r
}

/// The conditions making `F` a Radford `E`-comodule algebra, together with
/// the comodule-algebra axioms for its `H`-coaction.
///
/// * braided multiplicativity: `ϱ_E∘μ_F = (μ_F⊗μ_E)∘(id⊗τ_{E,F}⊗id)∘(ϱ_E⊗ϱ_E)`
/// * unitality: `ϱ_E(1) = 1⊗1`
/// * colinearity: `ϱ_E` is `H`-colinear into `F⊗E` with the tensor coaction.
pub fn check_radford_comodule_algebra(fa: &ComoduleAlgebraData, e: &BraidedHopfData) -> CheckReport {
    let h = &e.h;
    let mut r = CheckReport::new(format!("Radford {}-comodule algebra {}", e.name, fa.name));
    let (Some(rho_h), Some(rho_e)) = (fa.h_coaction.as_ref(), fa.e_coaction.as_ref()) else {
        r.fail("coactions present", "needs both the H- and the E-coaction");
        return r;
    };
    r.absorb(check_plain_comodule_algebra(h, &fa.algebra, rho_h));
    let fs = fa.shape().to_vec();
    let idf = LinearMap::identity(h.field(), fs.clone());
    let ide = e.id();
    r.maps_equal(
        "E-coaction is coassociative",
        rho_e.tensor(&ide).compose(rho_e),
        idf.tensor(&e.comult).compose(rho_e),
    );
    r.maps_equal(
        "E-coaction is counital",
        idf.tensor(&e.counit).compose(rho_e).and_then(|m| m.with_shapes(fs.clone(), fs.clone())),
        Ok(idf.clone()),
    );
    let fcom = HComodule { shape: fs.clone(), coaction: rho_h.clone() };
    r.maps_equal(
        "E-coaction is braided multiplicative",
        rho_e.compose(fa.algebra.mult()),
        braiding_tau(h, &e.yd.module, &fcom)
            .and_then(|t| fa.algebra.mult().tensor(&e.mult).compose(&idf.tensor(&t).tensor(&ide)))
            .and_then(|m| m.compose(&rho_e.tensor(rho_e))),
    );
    r.maps_equal("E-coaction is unital", rho_e.compose(fa.algebra.unit()), Ok(fa.algebra.unit().tensor(&e.unit)));
    let fe = tensor_comodule(h, &fcom, &e.yd.comodule);
    r.maps_equal(
        "E-coaction is H-colinear",
        rho_e.tensor(&LinearMap::identity(h.field(), h.shape().to_vec())).compose(rho_h),
        fe.and_then(|c| c.coaction.compose(rho_e)),
    );
    r
}

/// The Radford product `H⋆E` on the shape `[H, E]`.
///
/// * `(h⋆x)(h'⋆x') = hh'₁ ⋆ (x·h'₂)x'`
/// * `Δ(h⋆x) = (h₁⋆(x₁)₀) ⊗ (h₂(x₁)₁⋆x₂)`
/// * `S(h⋆x) = (1⋆σ_E(x₀))(σ_H(hx₁)⋆1)`
pub fn radford_product(h: &HopfData, e: &BraidedHopfData) -> Result<HopfData> {
    if *h != e.h {
        return Err(Error::ShapeMismatch("E is braided over a different Hopf algebra".into()));
    }
    check_hopf(h, true).require()?;
    check_braided_hopf(e).require()?;
    let out = radford_product_unchecked(e)?;
    check_hopf(&out, false).require()?;
    Ok(out)
}

/// The construction of [`radford_product`] without the surrounding checks.
pub fn radford_product_unchecked(e: &BraidedHopfData) -> Result<HopfData> {
    let h = &e.h;
    let hs = h.shape().to_vec();
    let es = e.shape().to_vec();
    let shape: Shape = concat(&hs, &es);
    let idh = h.id();
    let ide = e.id();

    let tau_eh = braiding_tau(h, &e.yd.module, &regular_comodule(h))?;
    let mult = h.mult().tensor(&e.mult).compose(&idh.tensor(&tau_eh).tensor(&ide))?;
    let unit = h.unit().tensor(&e.unit);
    let tau_he = braiding_tau(h, &regular_module(h), &e.yd.comodule)?;
    let comult = idh.tensor(&tau_he).tensor(&ide).compose(&h.comult().tensor(&e.comult))?;
    let counit = h.counit().tensor(&e.counit);

    let algebra = AlgebraData::new(shape.clone(), mult, unit)?;
    let j_e = h.unit().tensor(&ide);
    let j_h = idh.tensor(&e.unit);
    let antipode =
        algebra.mult().compose(&j_e.tensor(&j_h))?.compose(&e.antipode.tensor(h.antipode()))?.compose(&tau_he)?;
    let coalgebra = CoalgebraData::new(shape, comult, counit)?;
    HopfData::new(format!("{}⋆{}", h.name, e.name), algebra, coalgebra, antipode)
}

/// `H → H⋆E`, `h ↦ h⋆1`.
pub fn inclusion_h(e: &BraidedHopfData) -> LinearMap {
    e.h.id().tensor(&e.unit)
}

/// `H⋆E → H`, `h⋆x ↦ ε(x)h`.
pub fn projection_h(e: &BraidedHopfData) -> LinearMap {
    e.h.id().tensor(&e.counit)
}

/// `H⋆E → E`, `h⋆x ↦ ε(h)x`.
pub fn projection_e(e: &BraidedHopfData) -> LinearMap {
    e.h.counit().tensor(&e.id())
}

/// Split an `H⋆E`-coaction into its `H`- and `E`-parts:
/// `ϱ_H = (id⊗id⊗ε_E)ϱ` and `ϱ_E = (id⊗ε_H⊗id)ϱ`.
pub fn split_coaction(fa: &ComoduleAlgebraData, he: &HopfData, e: &BraidedHopfData) -> Result<ComoduleAlgebraData> {
    let rho = fa.he_coaction()?;
    check_plain_comodule_algebra(he, &fa.algebra, rho).require()?;
    let idf = LinearMap::identity(e.h.field(), fa.shape().to_vec());
    let out = ComoduleAlgebraData {
        name: fa.name.clone(),
        algebra: fa.algebra.clone(),
        h_coaction: Some(idf.tensor(&projection_h(e)).compose(rho)?),
        e_coaction: Some(idf.tensor(&projection_e(e)).compose(rho)?),
        he_coaction: Some(rho.clone()),
        kind: ComoduleKind::Radford,
    };
    check_radford_comodule_algebra(&out, e).require()?;
    Ok(out)
}

/// Assemble `ϱ_{H⋆E} = (ϱ_H⊗id_E)∘ϱ_E` from a Radford pair.
pub fn assemble_coaction(fa: &ComoduleAlgebraData, he: &HopfData, e: &BraidedHopfData) -> Result<ComoduleAlgebraData> {
    check_radford_comodule_algebra(fa, e).require()?;
    let rho_h = fa.h_coaction.as_ref().ok_or_else(|| missing("H"))?;
    let rho = rho_h.tensor(&e.id()).compose(fa.e_coaction()?)?;
    check_plain_comodule_algebra(he, &fa.algebra, &rho).require()?;
    Ok(ComoduleAlgebraData { he_coaction: Some(rho), ..fa.clone() })
}

/// `τ_{E,F}` for the `H`-comodule structure of `F`.
fn tau_e_f(fa: &ComoduleAlgebraData, e: &BraidedHopfData) -> Result<LinearMap> {
    braiding_tau(&e.h, &e.yd.module, &fa.h_comodule()?)
}

/// The Radford `E`-comodule algebra `F⋆E` on `F⊗E`:
/// `(f⊗x)(f'⊗x') = f f'₀ ⊗ (x·f'₁)x'`, the tensor `H`-coaction, and `id_F⊗Δ_E`.
pub fn star_extension(fa: &ComoduleAlgebraData, e: &BraidedHopfData) -> Result<ComoduleAlgebraData> {
    check_radford_comodule_algebra(fa, e).require()?;
    let out = star_extension_unchecked(fa, e)?;
    check_radford_comodule_algebra(&out, e).require()?;
    Ok(out)
}

pub(crate) fn star_extension_unchecked(fa: &ComoduleAlgebraData, e: &BraidedHopfData) -> Result<ComoduleAlgebraData> {
    let h = &e.h;
    let fs = fa.shape().to_vec();
    let idf = LinearMap::identity(h.field(), fs.clone());
    let ide = e.id();
    let mult = fa.algebra.mult().tensor(&e.mult).compose(&idf.tensor(&tau_e_f(fa, e)?).tensor(&ide))?;
    let unit = fa.algebra.unit().tensor(&e.unit);
    let algebra = AlgebraData::new(concat(&fs, e.shape()), mult, unit)?;
    let h_coaction = tensor_comodule(h, &fa.h_comodule()?, &e.yd.comodule)?.coaction;
    let e_coaction = idf.tensor(&e.comult);
    Ok(ComoduleAlgebraData {
        name: format!("{}⋆{}", fa.name, e.name),
        algebra,
        h_coaction: Some(h_coaction),
        e_coaction: Some(e_coaction),
        he_coaction: None,
        kind: ComoduleKind::Radford,
    })
}

/// Bialgebra-morphism checks for `H → H⋆E → H`.
pub fn check_projection_maps(he: &HopfData, e: &BraidedHopfData) -> CheckReport {
    let h = &e.h;
    let mut r = CheckReport::new("inclusion and projection");
    let maps = [("inclusion", inclusion_h(e), h, he), ("projection", projection_h(e), he, h)];
    for (name, map, src, dst) in maps {
        r.maps_equal(
            format!("{name} is multiplicative"),
            map.compose(src.mult()),
            dst.mult().compose(&map.tensor(&map)),
        );
        r.maps_equal(format!("{name} is unital"), map.compose(src.unit()), Ok(dst.unit().clone()));
        r.maps_equal(
            format!("{name} is comultiplicative"),
            dst.comult().compose(&map),
            map.tensor(&map).compose(src.comult()),
        );
        r.maps_equal(format!("{name} is counital"), dst.counit().compose(&map), Ok(src.counit().clone()));
    }
    r
}

/// The extension map `ϱ_{F,E}: F → F⋆E` is an algebra map and `H`-colinear.
pub fn check_extension_face(fa: &ComoduleAlgebraData, fe: &ComoduleAlgebraData, e: &BraidedHopfData) -> CheckReport {
    let mut r = CheckReport::new("coaction into the extension");
    let Some(rho) = fa.e_coaction.as_ref() else {
        r.fail("E-coaction present", "missing");
        return r;
    };
    r.maps_equal("is multiplicative", rho.compose(fa.algebra.mult()), fe.algebra.mult().compose(&rho.tensor(rho)));
    r.maps_equal("is unital", rho.compose(fa.algebra.unit()), Ok(fe.algebra.unit().clone()));
    match (fa.h_comodule(), fe.h_comodule()) {
        (Ok(a), Ok(b)) => {
            let ok = comodule_morphism(&e.h, rho, &a, &b).unwrap_or(false);
            r.check("is H-colinear", ok, || "does not commute with the H-coactions".into());
        }
        _ => r.fail("is H-colinear", "missing H-coaction"),
    }
    r
}
