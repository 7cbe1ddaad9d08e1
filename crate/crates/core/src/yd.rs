//! Right modules and comodules over a Hopf algebra, the Yetter–Drinfeld
//! compatibility, and the braiding `τ(m⊗n) = n₀ ⊗ m·n₁`.
//!
//! Every structure lives on a [`Shape`], so tensor products of modules are
//! again modules without any flattening.

use crate::error::Result;
use crate::hopf_core::HopfData;
use crate::linalg::{concat, shape_name, BasedSpace, LinearMap, Shape};
use crate::report::CheckReport;

/// Right `H`-module: `action: M⊗H → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModule {
    pub shape: Shape,
    pub action: LinearMap,
}

/// Right `H`-comodule: `coaction: N → N⊗H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HComodule {
    pub shape: Shape,
    pub coaction: LinearMap,
}

/// A module and a comodule structure on the same shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdObject {
    pub module: HModule,
    pub comodule: HComodule,
}

impl YdObject {
    pub fn shape(&self) -> &[BasedSpace] {
        &self.module.shape
    }
}

fn id(h: &HopfData, shape: &[BasedSpace]) -> LinearMap {
    LinearMap::identity(h.field(), shape.to_vec())
}

/// `H` acting on itself by right multiplication.
pub fn regular_module(h: &HopfData) -> HModule {
    HModule { shape: h.shape().to_vec(), action: h.mult().clone() }
}

/// `H` coacting on itself by its comultiplication.
pub fn regular_comodule(h: &HopfData) -> HComodule {
    HComodule { shape: h.shape().to_vec(), coaction: h.comult().clone() }
}

/// `m·h = ε(h)m`.
pub fn trivial_module(h: &HopfData, shape: Shape) -> HModule {
    let action = id(h, &shape).tensor(h.counit());
    HModule { shape, action }
}

/// `n ↦ n⊗1`.
pub fn trivial_comodule(h: &HopfData, shape: Shape) -> HComodule {
    let coaction = id(h, &shape).tensor(h.unit());
    HComodule { shape, coaction }
}

/// `(m⊗m')·h = m·h₁ ⊗ m'·h₂`.
pub fn tensor_action(h: &HopfData, a: &HModule, b: &HModule) -> Result<HModule> {
    let f = h.field();
    let hs = h.shape();
    let split = id(h, &concat(&a.shape, &b.shape)).tensor(h.comult());
    let shuffle = id(h, &a.shape).tensor(&LinearMap::flip_shapes(f, &b.shape, hs)).tensor(&id(h, hs));
    let action = a.action.tensor(&b.action).compose(&shuffle)?.compose(&split)?;
    Ok(HModule { shape: concat(&a.shape, &b.shape), action })
}

/// `n⊗n' ↦ n₀ ⊗ n'₀ ⊗ n₁n'₁`.
pub fn tensor_comodule(h: &HopfData, a: &HComodule, b: &HComodule) -> Result<HComodule> {
    let f = h.field();
    let hs = h.shape();
    let shuffle = id(h, &a.shape).tensor(&LinearMap::flip_shapes(f, hs, &b.shape)).tensor(&id(h, hs));
    let merge = id(h, &concat(&a.shape, &b.shape)).tensor(h.mult());
    let coaction = merge.compose(&shuffle)?.compose(&a.coaction.tensor(&b.coaction))?;
    Ok(HComodule { shape: concat(&a.shape, &b.shape), coaction })
}

/// Comodule structure on `N⊗N'`.
///
/// With `braided` set it is assembled as `(id⊗τ_{H,N'})∘(ϱ_N⊗id)`, with `H`
/// acting on itself by multiplication; otherwise it is the formula of
/// [`tensor_comodule`]. The two constructions agree, which the tests pin.
pub fn tensor_coaction(h: &HopfData, a: &HComodule, b: &HComodule, braided: bool) -> Result<HComodule> {
    if !braided {
        return tensor_comodule(h, a, b);
    }
    let tau = braiding_tau(h, &regular_module(h), b)?;
    let coaction = id(h, &a.shape).tensor(&tau).compose(&a.coaction.tensor(&id(h, &b.shape)))?;
    Ok(HComodule { shape: concat(&a.shape, &b.shape), coaction })
}

/// `τ_{M,N}: M⊗N → N⊗M`, `m⊗n ↦ n₀ ⊗ m·n₁`.
pub fn braiding_tau(h: &HopfData, m: &HModule, n: &HComodule) -> Result<LinearMap> {
    let f = h.field();
    let spread = id(h, &m.shape).tensor(&n.coaction);
    let swap = LinearMap::flip_shapes(f, &m.shape, &n.shape).tensor(&id(h, h.shape()));
    id(h, &n.shape).tensor(&m.action).compose(&swap)?.compose(&spread)
}

/// Module axioms.
pub fn check_module(h: &HopfData, m: &HModule) -> CheckReport {
    let mut r = CheckReport::new(format!("module {}", shape_name(&m.shape)));
    let idm = id(h, &m.shape);
    let idh = id(h, h.shape());
    r.maps_equal(
        "action is associative",
        m.action.compose(&m.action.tensor(&idh)),
        m.action.compose(&idm.tensor(h.mult())),
    );
    r.maps_equal(
        "unit acts trivially",
        m.action.compose(&idm.tensor(h.unit())).and_then(|x| x.with_shapes(m.shape.clone(), m.shape.clone())),
        Ok(idm),
    );
    r
}

/// Comodule axioms.
pub fn check_comodule(h: &HopfData, n: &HComodule) -> CheckReport {
    let mut r = CheckReport::new(format!("comodule {}", shape_name(&n.shape)));
    let idn = id(h, &n.shape);
    let idh = id(h, h.shape());
    r.maps_equal(
        "coaction is coassociative",
        n.coaction.tensor(&idh).compose(&n.coaction),
        idn.tensor(h.comult()).compose(&n.coaction),
    );
    r.maps_equal(
        "coaction is counital",
        idn.tensor(h.counit()).compose(&n.coaction).and_then(|x| x.with_shapes(n.shape.clone(), n.shape.clone())),
        Ok(idn),
    );
    r
}

/// `f∘act_M = act_N∘(f⊗id_H)`.
pub fn module_morphism(h: &HopfData, f: &LinearMap, m: &HModule, n: &HModule) -> Result<bool> {
    let lhs = f.compose(&m.action)?;
    let rhs = n.action.compose(&f.tensor(&id(h, h.shape())))?;
    Ok(lhs == rhs)
}

/// `ϱ_N∘f = (f⊗id_H)∘ϱ_M`.
pub fn comodule_morphism(h: &HopfData, f: &LinearMap, m: &HComodule, n: &HComodule) -> Result<bool> {
    let lhs = n.coaction.compose(f)?;
    let rhs = f.tensor(&id(h, h.shape())).compose(&m.coaction)?;
    Ok(lhs == rhs)
}

/// `m₀·h₁ ⊗ m₁h₂ = (m·h₂)₀ ⊗ h₁(m·h₂)₁` as maps `M⊗H → M⊗H`.
pub fn check_yd(h: &HopfData, obj: &YdObject) -> CheckReport {
    let mut r = CheckReport::new(format!("Yetter-Drinfeld {}", shape_name(obj.shape())));
    let f = h.field();
    let hs = h.shape();
    let idm = id(h, obj.shape());
    let idh = id(h, hs);
    let act = &obj.module.action;
    let coact = &obj.comodule.coaction;
    let swap_hh = LinearMap::flip_shapes(f, hs, hs);
    let lhs = (|| {
        let spread = coact.tensor(h.comult());
        let mid = idm.tensor(&swap_hh).tensor(&idh);
        act.tensor(h.mult()).compose(&mid)?.compose(&spread)
    })();
    let rhs = (|| {
        let a = idm.tensor(h.comult());
        let b = idm.tensor(&swap_hh);
        let c = act.tensor(&idh);
        let d = coact.tensor(&idh);
        let e = idm.tensor(&swap_hh);
        let g = idm.tensor(h.mult());
        g.compose(&e)?.compose(&d)?.compose(&c)?.compose(&b)?.compose(&a)
    })();
    r.maps_equal("compatibility", lhs, rhs);
    r
}

/// Naturality and hexagon relations of the braiding, plus the four
/// auxiliary relations involving `η_H` and `ε_H`.
///
/// `phi: M → M'` must be a module map and `psi: N → N'` a comodule map;
/// these are checked first so a failure is attributed to the right input.
/// `M, M'` are used as modules and `N, N'` as comodules.
pub fn check_prebraiding(
    h: &HopfData,
    m: &YdObject,
    m2: &YdObject,
    n: &YdObject,
    n2: &YdObject,
    phi: &LinearMap,
    psi: &LinearMap,
) -> CheckReport {
    let mut r = CheckReport::new("braiding relations");
    let (mm, mm2) = (&m.module, &m2.module);
    let (nc, nc2) = (&n.comodule, &n2.comodule);
    let idsh = |s: &[BasedSpace]| id(h, s);

    let phi_ok = module_morphism(h, phi, mm, mm2).unwrap_or(false);
    let psi_ok = comodule_morphism(h, psi, nc, nc2).unwrap_or(false);
    r.check("phi is a module morphism", phi_ok, || "phi does not commute with the actions".into());
    r.check("psi is a comodule morphism", psi_ok, || "psi does not commute with the coactions".into());

    // τ_{M',N}(φ⊗id) = (id⊗φ)τ_{M,N}
    r.maps_equal(
        "naturality in the module",
        braiding_tau(h, mm2, nc).and_then(|t| t.compose(&phi.tensor(&idsh(&nc.shape)))),
        braiding_tau(h, mm, nc).and_then(|t| idsh(&nc.shape).tensor(phi).compose(&t)),
    );
    // τ_{M,N'}(id⊗ψ) = (ψ⊗id)τ_{M,N}
    r.maps_equal(
        "naturality in the comodule",
        braiding_tau(h, mm, nc2).and_then(|t| t.compose(&idsh(&mm.shape).tensor(psi))),
        braiding_tau(h, mm, nc).and_then(|t| psi.tensor(&idsh(&mm.shape)).compose(&t)),
    );
    // τ_{M⊗M',N} = (τ_{M,N}⊗id)(id⊗τ_{M',N})
    r.maps_equal(
        "hexagon for a tensor product of modules",
        tensor_action(h, mm, mm2).and_then(|mt| braiding_tau(h, &mt, nc)),
        (|| {
            let inner = idsh(&mm.shape).tensor(&braiding_tau(h, mm2, nc)?);
            braiding_tau(h, mm, nc)?.tensor(&idsh(&mm2.shape)).compose(&inner)
        })(),
    );
    // τ_{M,N⊗N'} = (id⊗τ_{M,N'})(τ_{M,N}⊗id)
    r.maps_equal(
        "hexagon for a tensor product of comodules",
        tensor_comodule(h, nc, nc2).and_then(|nt| braiding_tau(h, mm, &nt)),
        (|| {
            let first = braiding_tau(h, mm, nc)?.tensor(&idsh(&nc2.shape));
            idsh(&nc.shape).tensor(&braiding_tau(h, mm, nc2)?).compose(&first)
        })(),
    );

    let hreg_m = regular_module(h);
    let hreg_c = regular_comodule(h);
    // τ_{H,N}∘(η⊗id) = ϱ_N
    r.maps_equal(
        "unit through the braiding gives the coaction",
        braiding_tau(h, &hreg_m, nc).and_then(|t| t.compose(&h.unit().tensor(&idsh(&nc.shape)))),
        Ok(nc.coaction.clone()),
    );
    // τ_{M,H}∘(id⊗η) = η⊗id
    r.maps_equal(
        "braiding past the unit",
        braiding_tau(h, mm, &hreg_c).and_then(|t| t.compose(&idsh(&mm.shape).tensor(h.unit()))),
        Ok(h.unit().tensor(&idsh(&mm.shape))),
    );
    // (ε⊗id)∘τ_{M,H} = action
    r.maps_equal(
        "counit after the braiding gives the action",
        braiding_tau(h, mm, &hreg_c).and_then(|t| h.counit().tensor(&idsh(&mm.shape)).compose(&t)),
        Ok(mm.action.clone()),
    );
    // (id⊗ε)∘τ_{H,N} = ε⊗id
    r.maps_equal(
        "braiding into the counit",
        braiding_tau(h, &hreg_m, nc).and_then(|t| idsh(&nc.shape).tensor(h.counit()).compose(&t)),
        Ok(h.counit().tensor(&idsh(&nc.shape))),
    );
    r
}

/// `τ_{E,N}` is a comodule morphism `E⊗N → N⊗E` for the tensor coactions.
///
/// `E` must be a Yetter–Drinfeld object (in practice the underlying object
/// of a braided bialgebra); `N` is any comodule.
pub fn check_braiding_colinear(h: &HopfData, e: &YdObject, n: &HComodule) -> CheckReport {
    let mut r = CheckReport::new("braiding is colinear");
    let res = (|| {
        let tau = braiding_tau(h, &e.module, n)?;
        let src = tensor_comodule(h, &e.comodule, n)?;
        let dst = tensor_comodule(h, n, &e.comodule)?;
        let lhs = dst.coaction.compose(&tau)?;
        let rhs = tau.tensor(&id(h, h.shape())).compose(&src.coaction)?;
        Ok::<_, crate::error::Error>((lhs, rhs))
    })();
    match res {
        Ok((lhs, rhs)) => r.maps_equal("tau is an H-comodule morphism", Ok(lhs), Ok(rhs)),
        Err(e) => r.fail("tau is an H-comodule morphism", e.to_string()),
    }
    r
}

/// Braiding with everything trivial; used for degenerate inputs.
pub fn trivial_yd(h: &HopfData, shape: Shape) -> YdObject {
    YdObject { module: trivial_module(h, shape.clone()), comodule: trivial_comodule(h, shape) }
}
