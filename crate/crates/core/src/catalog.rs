//! Named instances, addressed by short strings.
//!
//! Hopf instances (`H`, a braided Hopf algebra `E` over `H`, and `H⋆E`):
//!
//! * `taft:<n>:<p>`: `H = k[Z/n]`, `E = k[y]/(yⁿ)`, `H⋆E` the Taft algebra
//! * `kG:cyclic:<n>:<p>`: `H = k[Z/n]`, `E = k`
//! * `kD:cyclic:<n>:<p>`: `H = k^{Z/n}`, `E = k`
//! * `kD:s3:<p>`: `H = k^{Z/2}`, `E = k^{Z/3}`, `H⋆E ≅ k^{S₃}`
//! * `file:<path>`: a Hopf algebra file, `E = k`
//!
//! Group instances (`D` acting on `C`):
//!
//! * `s3:inv`: `Z/2⋉Z/3` on `Z/3`, `Z/2` by inversion and `Z/3` trivially
//! * `s3:triv:<c>`: `Z/2⋉Z/3` acting trivially on `Z/c`
//! * `z2:inv`: `Z/2` on `Z/3` by inversion
//! * `z2:triv:<c>`: `Z/2` acting trivially on `Z/c`
//!
//! Missing trailing `<n>` and `<p>` fields may come from the caller.

use std::fmt;
use std::path::PathBuf;

use crate::cohomology::{build_c, build_cstar, check_diagram, PreCosimplicialAlgebras};
use crate::error::{Error, Result};
use crate::group_cohom::SemidirectAction;
use crate::hopf_core::{check_hopf, HopfData};
use crate::io::read_hopf;
use crate::linalg::{BasedSpace, LinearMap};
use crate::models::{
    check_function_isomorphism, check_taft_isomorphism, function_algebra, group_algebra, ka_in_yd, taft_pair,
    FiniteGroup, FunctionAlgebraPair, GroupAction, TaftPair,
};
use crate::radford::{
    assemble_coaction, check_braided_hopf, check_extension_face, check_plain_comodule_algebra, check_projection_maps,
    check_radford_comodule_algebra, radford_product, split_coaction, star_extension, BraidedHopfData,
    ComoduleAlgebraData,
};
use crate::report::CheckReport;
use crate::scalars::{make_prime_field, PrimeField};
use crate::yd::{
    braiding_tau, check_braiding_colinear, check_comodule, check_module, check_prebraiding, check_yd, regular_comodule,
    tensor_coaction, trivial_comodule, trivial_yd,
};

/// Coefficient algebra for Hopf cohomology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Coefficients {
    /// `E` with `Δ_E` and its Yetter–Drinfeld coaction.
    #[default]
    E,
    /// The ground field with trivial coactions.
    Trivial,
}

impl std::str::FromStr for Coefficients {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "E" | "e" => Ok(Coefficients::E),
            "trivial" | "k" => Ok(Coefficients::Trivial),
            _ => Err(Error::Parse(format!("unknown coefficients `{s}` (expected E or trivial)"))),
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coefficients::E => "E",
            Coefficients::Trivial => "trivial",
        })
    }
}

#[derive(Clone, Debug)]
pub enum Family {
    Taft(Box<TaftPair>),
    GroupAlgebra,
    FunctionAlgebra,
    FunctionPair(Box<FunctionAlgebraPair>),
    File(PathBuf),
}

#[derive(Clone, Debug)]
pub struct HopfInstance {
    pub spec: String,
    pub h: HopfData,
    pub e: BraidedHopfData,
    pub he: HopfData,
    pub family: Family,
}

// Built once per command; boxing the large variant buys nothing.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug)]
pub enum GroupInstance {
    Semidirect(SemidirectAction),
    Plain(GroupAction),
}

impl GroupInstance {
    pub fn action(&self) -> &GroupAction {
        match self {
            GroupInstance::Semidirect(sd) => &sd.combined,
            GroupInstance::Plain(a) => a,
        }
    }
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug)]
pub enum Instance {
    Hopf(Box<HopfInstance>),
    Group(GroupInstance),
}

/// Resolves `spec`, taking absent `<n>`/`<p>` fields from `n`/`p`.
pub fn parse_instance(spec: &str, n: Option<u64>, p: Option<u64>) -> Result<Instance> {
    if let Some(path) = spec.strip_prefix("file:") {
        // Loaded unchecked: `check_all` reports the failures with witnesses.
        let h = read_hopf(path.as_ref())?;
        let e = BraidedHopfData::trivial(&h);
        let family = Family::File(path.into());
        return Ok(Instance::Hopf(Box::new(HopfInstance { spec: spec.into(), he: h.clone(), h, e, family })));
    }
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["taft", rest @ ..] => {
            let (n, f) = numbers(spec, rest, &[n, p])?.into_n_p()?;
            let pair = taft_pair(n as usize, f)?;
            let he = radford_product(&pair.group_algebra, &pair.braided)?;
            let (h, e) = (pair.group_algebra.clone(), pair.braided.clone());
            let canonical = format!("taft:{n}:{}", f.p());
            Ok(Instance::Hopf(Box::new(HopfInstance {
                spec: canonical,
                h,
                e,
                he,
                family: Family::Taft(Box::new(pair)),
            })))
        }
        ["kG", "cyclic", rest @ ..] => {
            let (n, f) = numbers(spec, rest, &[n, p])?.into_n_p()?;
            let h = group_algebra(&FiniteGroup::cyclic(n as usize), f);
            hopf_instance(
                &format!("kG:cyclic:{n}:{}", f.p()),
                h.clone(),
                BraidedHopfData::trivial(&h),
                Family::GroupAlgebra,
            )
        }
        ["kD", "cyclic", rest @ ..] => {
            let (n, f) = numbers(spec, rest, &[n, p])?.into_n_p()?;
            let h = function_algebra(&FiniteGroup::cyclic(n as usize), f);
            hopf_instance(
                &format!("kD:cyclic:{n}:{}", f.p()),
                h.clone(),
                BraidedHopfData::trivial(&h),
                Family::FunctionAlgebra,
            )
        }
        ["kD", "s3", rest @ ..] => {
            let f = make_prime_field(numbers(spec, rest, &[p])?.0[0])?;
            let pair = ka_in_yd(&GroupAction::inversion(FiniteGroup::cyclic(3))?, f)?;
            let he = radford_product(&pair.kg, &pair.braided)?;
            let (h, e) = (pair.kg.clone(), pair.braided.clone());
            let canonical = format!("kD:s3:{}", f.p());
            Ok(Instance::Hopf(Box::new(HopfInstance {
                spec: canonical,
                h,
                e,
                he,
                family: Family::FunctionPair(Box::new(pair)),
            })))
        }
        ["s3", "inv"] => {
            let z3 = FiniteGroup::cyclic(3);
            let sd = SemidirectAction::new(
                GroupAction::inversion(z3.clone())?,
                GroupAction::inversion(z3.clone())?,
                GroupAction::trivial(z3.clone(), z3),
            )?;
            Ok(Instance::Group(GroupInstance::Semidirect(sd)))
        }
        ["s3", "triv", c] => {
            let c = FiniteGroup::cyclic(small(spec, c)?);
            let z3 = FiniteGroup::cyclic(3);
            let sd = SemidirectAction::new(
                GroupAction::inversion(z3.clone())?,
                GroupAction::trivial(FiniteGroup::cyclic(2), c.clone()),
                GroupAction::trivial(z3, c),
            )?;
            Ok(Instance::Group(GroupInstance::Semidirect(sd)))
        }
        ["z2", "inv"] => Ok(Instance::Group(GroupInstance::Plain(GroupAction::inversion(FiniteGroup::cyclic(3))?))),
        ["z2", "triv", c] => {
            let c = FiniteGroup::cyclic(small(spec, c)?);
            Ok(Instance::Group(GroupInstance::Plain(GroupAction::trivial(FiniteGroup::cyclic(2), c))))
        }
        _ => Err(Error::Parse(format!("unknown instance `{spec}`"))),
    }
}

fn small(spec: &str, s: &str) -> Result<usize> {
    match s.parse::<usize>() {
        Ok(c) if (1..=12).contains(&c) => Ok(c),
        _ => Err(Error::Parse(format!("`{spec}`: coefficient order must be in 1..=12"))),
    }
}

struct Numbers(Vec<u64>);

impl Numbers {
    fn into_n_p(self) -> Result<(u64, PrimeField)> {
        let [n, p] = self.0[..] else { unreachable!() };
        if n == 0 {
            return Err(Error::Parse("n must be positive".into()));
        }
        Ok((n, make_prime_field(p)?))
    }
}

/// Fills the trailing numeric fields, preferring the spec and rejecting
/// disagreement with the flags.
fn numbers(spec: &str, given: &[&str], flags: &[Option<u64>]) -> Result<Numbers> {
    if given.len() > flags.len() {
        return Err(Error::Parse(format!("`{spec}` has too many fields")));
    }
    let mut out = Vec::with_capacity(flags.len());
    for (i, flag) in flags.iter().enumerate() {
        let v = match given.get(i) {
            Some(s) => {
                let v: u64 = s.parse().map_err(|_| Error::Parse(format!("`{spec}`: `{s}` is not a number")))?;
                if flag.is_some_and(|f| f != v) {
                    return Err(Error::Parse(format!(
                        "`{spec}` disagrees with the command-line value {}",
                        flag.unwrap()
                    )));
                }
                v
            }
            None => flag.ok_or_else(|| Error::Parse(format!("`{spec}` is missing a field and no flag supplies it")))?,
        };
        out.push(v);
    }
    Ok(Numbers(out))
}

fn hopf_instance(spec: &str, h: HopfData, e: BraidedHopfData, family: Family) -> Result<Instance> {
    check_hopf(&h, true).require()?;
    let he = radford_product(&h, &e)?;
    Ok(Instance::Hopf(Box::new(HopfInstance { spec: spec.into(), h, e, he, family })))
}

impl HopfInstance {
    pub fn field(&self) -> PrimeField {
        self.h.field()
    }

    /// The coefficients as a Radford `E`-comodule algebra.
    pub fn radford_coefficients(&self, c: Coefficients) -> Result<ComoduleAlgebraData> {
        match c {
            Coefficients::E => ComoduleAlgebraData::from_braided(&self.e),
            Coefficients::Trivial => Ok(ComoduleAlgebraData::trivial(&self.e)),
        }
    }

    /// The same coefficients as an `H⋆E`-comodule algebra.
    pub fn product_coefficients(&self, c: Coefficients) -> Result<ComoduleAlgebraData> {
        let fa = assemble_coaction(&self.radford_coefficients(c)?, &self.he, &self.e)?;
        let rho = fa.he_coaction.clone().expect("assembled");
        Ok(ComoduleAlgebraData::over_h(fa.name, fa.algebra, rho))
    }

    /// `C(H⋆E, F)`.
    pub fn diagram(&self, c: Coefficients) -> Result<PreCosimplicialAlgebras> {
        build_c(&self.he, &self.product_coefficients(c)?)
    }

    /// Every structural check that applies to this instance.
    pub fn check_all(&self) -> CheckReport {
        let mut r = CheckReport::new(format!("axioms for {}", self.spec));
        let (h, e) = (&self.h, &self.e);
        r.absorb(check_hopf(h, true));
        if matches!(self.family, Family::File(_)) {
            return r;
        }
        r.absorb(check_hopf(&self.he, true));
        r.absorb(check_module(h, &e.yd.module));
        r.absorb(check_comodule(h, &e.yd.comodule));
        r.absorb(check_yd(h, &e.yd));
        r.absorb(check_braided_hopf(e));
        let tau = e.self_braiding();
        r.check(
            "braiding on E⊗E is invertible",
            tau.as_ref().is_ok_and(|t| t.to_matrix().rank(h.field()) == t.dom_dim()),
            || "rank deficient".into(),
        );

        let ide = e.id();
        r.absorb(check_prebraiding(h, &e.yd, &e.yd, &e.yd, &e.yd, &ide, &ide));
        let aux = trivial_yd(h, vec![BasedSpace::numbered("V", "v", 2)]);
        let idv = LinearMap::identity(h.field(), aux.shape().to_vec());
        let mut mixed = check_prebraiding(h, &e.yd, &e.yd, &aux, &aux, &ide, &idv);
        mixed.name = "braiding relations against a trivial object".into();
        r.absorb(mixed);

        let hreg = regular_comodule(h);
        let triv = trivial_comodule(h, vec![BasedSpace::numbered("V", "v", 2)]);
        for (what, n) in [("regular", &hreg), ("trivial", &triv), ("E", &e.yd.comodule)] {
            let mut l = check_braiding_colinear(h, &e.yd, n);
            l.name = format!("braiding is colinear against the {what} comodule");
            r.absorb(l);
            let same = tensor_coaction(h, &e.yd.comodule, n, true)
                .and_then(|b| tensor_coaction(h, &e.yd.comodule, n, false).map(|u| b == u));
            r.check(format!("braided and plain tensor coactions agree on E⊗{what}"), same.unwrap_or(false), || {
                "coactions differ".into()
            });
        }
        let via_unit = braiding_tau(h, &crate::yd::regular_module(h), &e.yd.comodule)
            .and_then(|t| t.compose(&h.unit().tensor(&ide)));
        r.maps_equal("coaction of E is the braiding past the unit", via_unit, Ok(e.yd.comodule.coaction.clone()));

        r.absorb(check_projection_maps(&self.he, e));
        for c in [Coefficients::E, Coefficients::Trivial] {
            match self.coefficient_checks(c) {
                Ok(sub) => r.absorb(sub),
                Err(err) => r.fail(format!("coefficients {c}"), err.to_string()),
            }
        }
        match &self.family {
            Family::Taft(pair) => {
                r.absorb(check_hopf(&pair.taft, true));
                r.absorb(check_taft_isomorphism(pair));
            }
            Family::FunctionPair(pair) => r.absorb(check_function_isomorphism(pair)),
            _ => {}
        }
        r
    }

    fn coefficient_checks(&self, c: Coefficients) -> Result<CheckReport> {
        let e = &self.e;
        let mut r = CheckReport::new(format!("coefficients {c}"));
        let fa = self.radford_coefficients(c)?;
        r.absorb(check_radford_comodule_algebra(&fa, e));
        let fe = star_extension(&fa, e)?;
        r.absorb(check_radford_comodule_algebra(&fe, e));
        r.absorb(check_extension_face(&fa, &fe, e));
        let assembled = assemble_coaction(&fa, &self.he, e)?;
        let rho = assembled.he_coaction.clone().expect("assembled");
        r.absorb(check_plain_comodule_algebra(&self.he, &fa.algebra, &rho));
        let back = split_coaction(&assembled, &self.he, e)?;
        r.check(
            "splitting the assembled coaction recovers both parts",
            back.h_coaction == fa.h_coaction && back.e_coaction == fa.e_coaction,
            || "coactions differ".into(),
        );
        r.absorb(check_diagram(&build_c(&self.he, &self.product_coefficients(c)?)?));
        r.absorb(check_diagram(&build_cstar(e, &fa)?));
        r.absorb(check_diagram(&build_c(
            &self.h,
            &ComoduleAlgebraData::over_h(
                fa.name.clone(),
                fa.algebra.clone(),
                fa.h_coaction.clone().expect("Radford coefficients carry an H-coaction"),
            ),
        )?));
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hopf(spec: &str) -> HopfInstance {
        match parse_instance(spec, None, None).unwrap() {
            Instance::Hopf(h) => *h,
            Instance::Group(_) => panic!("expected a Hopf instance"),
        }
    }

    #[test]
    fn grammar() {
        assert_eq!(hopf("taft:2:5").he.dim(), 4);
        assert_eq!(hopf("kG:cyclic:3:7").he.dim(), 3);
        assert_eq!(hopf("kD:s3:5").he.dim(), 6);
        match parse_instance("taft", Some(3), Some(7)).unwrap() {
            Instance::Hopf(h) => assert_eq!(h.spec, "taft:3:7"),
            Instance::Group(_) => panic!(),
        }
        assert!(matches!(parse_instance("taft:2:6", None, None), Err(Error::NotPrime(6))));
        assert!(matches!(parse_instance("taft:2:5", None, Some(7)), Err(Error::Parse(_))));
        assert!(matches!(parse_instance("taft:2", None, None), Err(Error::Parse(_))));
        assert!(matches!(parse_instance("nope", None, None), Err(Error::Parse(_))));
        assert!(matches!(parse_instance("taft:2:3:4", None, None), Err(Error::Parse(_))));
        assert!(matches!(parse_instance("s3:inv", None, None), Ok(Instance::Group(GroupInstance::Semidirect(_)))));
        assert!(matches!(parse_instance("z2:triv:2", None, None), Ok(Instance::Group(GroupInstance::Plain(_)))));
    }

    #[test]
    fn taft_axioms() {
        let r = hopf("taft:2:5").check_all();
        assert!(r.passed(), "{}", r.summary());
    }

    #[test]
    fn coefficient_names() {
        assert_eq!("E".parse::<Coefficients>().unwrap(), Coefficients::E);
        assert_eq!("trivial".parse::<Coefficients>().unwrap(), Coefficients::Trivial);
        assert!("x".parse::<Coefficients>().is_err());
    }
}
