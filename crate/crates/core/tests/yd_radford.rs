use hopfcoh::cohomology::build_cstar;
use hopfcoh::hopf_core::{check_algebra, check_hopf, HopfData};
use hopfcoh::linalg::{BasedSpace, LinearMap};
use hopfcoh::models::{function_algebra, ka_in_yd, taft_pair, FiniteGroup, GroupAction, TaftPair};
use hopfcoh::radford::{
    assemble_coaction, check_plain_comodule_algebra, check_radford_comodule_algebra, radford_product, split_coaction,
    star_extension, BraidedHopfData, ComoduleAlgebraData,
};
use hopfcoh::scalars::{make_prime_field, PrimeField, Scalar};
use hopfcoh::yd::{
    braiding_tau, check_braiding_colinear, check_prebraiding, check_yd, regular_comodule, tensor_coaction,
    trivial_comodule, trivial_module, trivial_yd, HComodule, YdObject,
};

fn field(p: u64) -> PrimeField {
    make_prime_field(p).unwrap()
}

fn taft(n: usize, p: u64) -> TaftPair {
    taft_pair(n, field(p)).unwrap()
}

fn column(m: &LinearMap, j: usize) -> Vec<(usize, u32)> {
    m.column(j).iter().map(|&(i, v)| (i as usize, v.value())).collect()
}

fn function_pair(p: u64) -> BraidedHopfData {
    ka_in_yd(&GroupAction::inversion(FiniteGroup::cyclic(3)).unwrap(), field(p)).unwrap().braided
}

#[test]
fn braiding_of_trivial_structures_is_the_flip() {
    let pair = taft(2, 5);
    let h = &pair.group_algebra;
    let v = vec![BasedSpace::numbered("V", "v", 2)];
    let w = vec![BasedSpace::numbered("W", "w", 3)];
    let tau = braiding_tau(h, &trivial_module(h, v.clone()), &trivial_comodule(h, w.clone())).unwrap();
    assert_eq!(tau, LinearMap::flip_shapes(h.field(), &v, &w));
}

#[test]
fn braiding_on_e_by_hand() {
    // τ(y⊗y) = y ⊗ y·u = ζ y⊗y with ζ = −1 in F_5.
    let pair = taft(2, 5);
    let tau = pair.braided.self_braiding().unwrap();
    assert_eq!(column(&tau, 3), vec![(3, 4)]);
    // ϱ(1) = 1⊗1, so τ(y⊗1) = 1⊗y.
    assert_eq!(column(&tau, 2), vec![(1, 1)]);

    // In general τ(y^i⊗y^j) = ζ^{ij} y^j⊗y^i.
    for (n, p) in [(2, 5), (3, 7), (2, 3)] {
        let pair = taft(n, p);
        let f = field(p);
        let tau = pair.braided.self_braiding().unwrap();
        for i in 0..n {
            for j in 0..n {
                let expected = f.pow(pair.zeta, (i * j) as u64).value();
                assert_eq!(column(&tau, i * n + j), vec![(j * n + i, expected)], "n={n} p={p} i={i} j={j}");
            }
        }
    }
}

#[test]
fn braidings_are_invertible() {
    for e in [taft(2, 5).braided, taft(3, 7).braided, function_pair(5)] {
        let f = e.h.field();
        let tau = e.self_braiding().unwrap();
        assert_eq!(tau.to_matrix().rank(f), tau.dom_dim(), "{}", e.name);
        let tau_eh = braiding_tau(&e.h, &e.yd.module, &regular_comodule(&e.h)).unwrap();
        assert_eq!(tau_eh.to_matrix().rank(f), tau_eh.dom_dim());
    }
}

#[test]
fn yetter_drinfeld_objects() {
    for e in [taft(2, 5).braided, taft(3, 7).braided, function_pair(5), function_pair(7)] {
        let r = check_yd(&e.h, &e.yd);
        assert!(r.passed(), "{}", r.summary());
    }
    let h = taft(2, 5).group_algebra;
    let r = check_yd(&h, &trivial_yd(&h, vec![BasedSpace::numbered("V", "v", 3)]));
    assert!(r.passed());
}

#[test]
fn yetter_drinfeld_failure_is_witnessed() {
    // Over the commutative, cocommutative k[Z/2] the compatibility says the
    // coaction is u-equivariant. With ϱ(y) = 1⊗u it is not: y·u = −y maps to
    // −1⊗u while ϱ(y)·u = 1⊗u.
    let e = taft(2, 5).braided;
    let f = e.h.field();
    let mut obj = e.yd.clone();
    obj.comodule.coaction = LinearMap::from_columns(f, e.shape().to_vec(), obj.comodule.coaction.cod().to_vec(), |j| {
        if j == 0 {
            vec![(0, f.one())]
        } else {
            vec![(1, f.one())]
        }
    });
    let r = check_yd(&e.h, &obj);
    assert!(!r.passed());
    assert!(r.failures()[0].witness.as_deref().unwrap_or("").starts_with("differs on"));
}

#[test]
fn prebraiding_relations() {
    for e in [taft(2, 5).braided, taft(3, 7).braided, function_pair(5)] {
        let id = e.id();
        let r = check_prebraiding(&e.h, &e.yd, &e.yd, &e.yd, &e.yd, &id, &id);
        assert!(r.passed(), "{}", r.summary());
    }
    // A linear map that is not a comodule map, used as ψ.
    let e = taft(2, 5).braided;
    let f = e.h.field();
    let swap = LinearMap::from_columns(f, e.shape().to_vec(), e.shape().to_vec(), |j| vec![(1 - j, f.one())]);
    let r = check_prebraiding(&e.h, &e.yd, &e.yd, &e.yd, &e.yd, &e.id(), &swap);
    assert!(!r.item("psi is a comodule morphism").unwrap().passed);
    assert!(!r.item("naturality in the comodule").unwrap().passed);
    assert!(r.item("phi is a module morphism").unwrap().passed);
}

#[test]
fn braiding_is_colinear() {
    for e in [taft(2, 5).braided, taft(3, 7).braided, function_pair(5)] {
        let h = &e.h;
        for n in [regular_comodule(h), trivial_comodule(h, vec![BasedSpace::numbered("V", "v", 2)])] {
            let r = check_braiding_colinear(h, &e.yd, &n);
            assert!(r.passed(), "{}", r.summary());
        }
    }
}

#[test]
fn braiding_colinearity_fails_for_a_corrupted_coaction() {
    // ϱ(y) = y⊗1 + 1⊗u: with N = k[Z/2], τ(y⊗u) = ζ u⊗y, and the two sides
    // differ by (ζ − 1) u⊗1⊗1.
    let e = taft(2, 5).braided;
    let f = e.h.field();
    let one = f.one();
    let coaction = LinearMap::from_columns(f, e.shape().to_vec(), e.yd.comodule.coaction.cod().to_vec(), |j| {
        if j == 0 {
            vec![(0, one)]
        } else {
            vec![(2, one), (1, one)]
        }
    });
    let bad = YdObject { module: e.yd.module.clone(), comodule: HComodule { shape: e.shape().to_vec(), coaction } };
    let r = check_braiding_colinear(&e.h, &bad, &regular_comodule(&e.h));
    assert!(!r.passed());
}

/// `n⊗n' ↦ n₀⊗n'₀⊗n₁n'₁` expanded from the structure constants.
fn sweedler_tensor_coaction(h: &HopfData) -> Vec<Vec<(usize, u32)>> {
    let d = h.dim();
    let f = h.field();
    let mut out = Vec::new();
    for a in 0..d {
        for b in 0..d {
            let mut acc = vec![Scalar::ZERO; d * d * d];
            for &(i, x) in h.comult().column(a) {
                let (a1, a2) = (i as usize / d, i as usize % d);
                for &(k, y) in h.comult().column(b) {
                    let (b1, b2) = (k as usize / d, k as usize % d);
                    for &(m, z) in h.mult().column(a2 * d + b2) {
                        let idx = (a1 * d + b1) * d + m as usize;
                        acc[idx] = f.add(acc[idx], f.mul(f.mul(x, y), z));
                    }
                }
            }
            out.push(acc.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.value())).collect());
        }
    }
    out
}

#[test]
fn tensor_coaction_matches_sweedler_expansion() {
    for h in [taft(2, 5).taft, taft(3, 7).group_algebra, function_algebra(&FiniteGroup::s3(), field(5))] {
        let reg = regular_comodule(&h);
        let expected = sweedler_tensor_coaction(&h);
        for braided in [false, true] {
            let t = tensor_coaction(&h, &reg, &reg, braided).unwrap();
            for (j, col) in expected.iter().enumerate() {
                assert_eq!(&column(&t.coaction, j), col, "{} braided={braided} column {j}", h.name);
            }
        }
    }
}

#[test]
fn tensor_coaction_conventions_agree() {
    for e in [taft(2, 5).braided, function_pair(5)] {
        let h = &e.h;
        let triv = trivial_comodule(h, vec![BasedSpace::numbered("V", "v", 2)]);
        for (a, b) in [(&e.yd.comodule, &triv), (&triv, &triv), (&e.yd.comodule, &e.yd.comodule)] {
            assert_eq!(tensor_coaction(h, a, b, true).unwrap(), tensor_coaction(h, a, b, false).unwrap());
        }
        let tt = tensor_coaction(h, &triv, &triv, false).unwrap();
        assert_eq!(tt, trivial_comodule(h, tt.shape.clone()));
    }
}

#[test]
fn radford_product_multiplication_by_hand() {
    // Basis of k[Z/2]⋆E: 1⋆1, 1⋆y, u⋆1, u⋆y.
    let pair = taft(2, 5);
    let he = radford_product(&pair.group_algebra, &pair.braided).unwrap();
    assert_eq!(column(he.mult(), 2 * 4 + 1), vec![(3, 1)]);
    assert_eq!(column(he.mult(), 4 + 2), vec![(3, 4)]);
    assert!(check_hopf(&he, true).passed());
}

#[test]
fn radford_product_with_trivial_e_is_h() {
    for h in [taft(3, 7).group_algebra, function_algebra(&FiniteGroup::s3(), field(5))] {
        let he = radford_product(&h, &BraidedHopfData::trivial(&h)).unwrap();
        for (a, b) in [(he.mult(), h.mult()), (he.comult(), h.comult()), (he.antipode(), h.antipode())] {
            assert!(a.same_coefficients(b));
        }
    }
}

#[test]
fn projection_onto_e_after_comultiplication() {
    // (ε_H⊗id_E⊗ε_H⊗id_E)Δ(h⋆x) = ε(h) Δ_E(x), read off the coproduct formula.
    for e in [taft(2, 5).braided, taft(3, 7).braided, function_pair(5)] {
        let h = &e.h;
        let he = radford_product(h, &e).unwrap();
        let f = h.field();
        let proj = h.counit().tensor(&e.id());
        let got = proj.tensor(&proj).compose(he.comult()).unwrap();
        let ne = e.shape()[0].dim();
        for hi in 0..h.dim() {
            let eps = h.counit().column(hi).first().map_or(Scalar::ZERO, |e| e.1);
            for x in 0..ne {
                let expected: Vec<(usize, u32)> = e
                    .comult
                    .column(x)
                    .iter()
                    .map(|&(i, v)| (i as usize, f.mul(eps, v).value()))
                    .filter(|e| e.1 != 0)
                    .collect();
                assert_eq!(column(&got, hi * ne + x), expected);
            }
        }
    }
}

#[test]
fn split_and_assemble_round_trip() {
    for e in [taft(2, 5).braided, taft(3, 7).braided, function_pair(5)] {
        let h = &e.h;
        let he = radford_product(h, &e).unwrap();
        for fa in [ComoduleAlgebraData::from_braided(&e).unwrap(), ComoduleAlgebraData::trivial(&e)] {
            let assembled = assemble_coaction(&fa, &he, &e).unwrap();
            let back = split_coaction(&assembled, &he, &e).unwrap();
            assert_eq!(back.h_coaction, fa.h_coaction);
            assert_eq!(back.e_coaction, fa.e_coaction);
        }
        // H⋆E coacting on itself.
        let selfco = ComoduleAlgebraData {
            he_coaction: Some(he.comult().clone()),
            ..ComoduleAlgebraData::over_h("H⋆E", he.algebra().clone(), he.comult().clone())
        };
        let split = split_coaction(&selfco, &he, &e).unwrap();
        assert!(check_radford_comodule_algebra(&split, &e).passed());
        let again = assemble_coaction(&split, &he, &e).unwrap();
        assert_eq!(again.he_coaction.as_ref(), Some(he.comult()));
        assert!(check_plain_comodule_algebra(&he, &again.algebra, he.comult()).passed());
    }
}

#[test]
fn trivial_coefficients_split_trivially() {
    let e = taft(2, 5).braided;
    let he = radford_product(&e.h, &e).unwrap();
    let k = ComoduleAlgebraData::trivial(&e);
    let assembled = assemble_coaction(&k, &he, &e).unwrap();
    assert_eq!(assembled.he_coaction.as_ref(), Some(he.unit()));
}

#[test]
fn star_extensions() {
    let e = taft(2, 5).braided;
    let ee = star_extension(&ComoduleAlgebraData::from_braided(&e).unwrap(), &e).unwrap();
    assert_eq!(ee.algebra.dim(), 4);
    assert!(check_algebra(&ee.algebra).passed());
    let ke = star_extension(&ComoduleAlgebraData::trivial(&e), &e).unwrap();
    assert!(ke.algebra.mult().same_coefficients(&e.mult));
    let eee = star_extension(&ee, &e).unwrap();
    assert_eq!(eee.shape().len(), 3);
    assert!(check_radford_comodule_algebra(&eee, &e).passed());
    // The diagram built on the extensions passes its identities.
    assert!(build_cstar(&e, &ComoduleAlgebraData::from_braided(&e).unwrap()).is_ok());
}

#[test]
fn radford_conditions_fail_for_a_corrupted_e_coaction() {
    let e = taft(2, 5).braided;
    let mut fa = ComoduleAlgebraData::from_braided(&e).unwrap();
    let f = e.h.field();
    // Δ_E with the y⊗1 term dropped: no longer counital.
    fa.e_coaction = Some(LinearMap::from_columns(f, e.shape().to_vec(), e.comult.cod().to_vec(), |j| {
        if j == 0 {
            vec![(0, f.one())]
        } else {
            vec![(1, f.one())]
        }
    }));
    let r = check_radford_comodule_algebra(&fa, &e);
    assert!(!r.passed());
    assert!(star_extension(&fa, &e).is_err());
}
