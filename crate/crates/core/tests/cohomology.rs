//! Hopf cohomology of small diagrams against counts that do not go through
//! the cocycle search, plus algebraic laws on random inputs.

use proptest::prelude::*;

use hopfcoh::catalog::{parse_instance, Coefficients, HopfInstance, Instance};
use hopfcoh::cohomology::{act, build_c, cohomologous, compute_h0, compute_h1, compute_z1, Z1Strategy};
use hopfcoh::hopf_core::{units, AlgebraData, HopfData};
use hopfcoh::linalg::Element;
use hopfcoh::models::{taft_algebra, taft_pair};
use hopfcoh::scalars::{make_prime_field, Scalar};
use hopfcoh::Error;

const BUDGET: u64 = 10_000_000;

fn hopf(spec: &str) -> HopfInstance {
    match parse_instance(spec, None, None).unwrap() {
        Instance::Hopf(h) => *h,
        Instance::Group(_) => unreachable!(),
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn trivial_coefficients_count_grouplikes() {
    // With F = k the cocycles are the grouplikes: the group itself for
    // k[Z/n], the characters Z/n → F_p^× for k^{Z/n}.
    for (n, p) in [(2, 3), (2, 5), (3, 7), (4, 5)] {
        let kg = hopf(&format!("kG:cyclic:{n}:{p}"));
        let r = compute_h1(&kg.diagram(Coefficients::Trivial).unwrap(), BUDGET).unwrap();
        assert_eq!(r.z1.len() as u64, n, "k[Z/{n}] over F_{p}");
        assert_eq!(r.classes.len() as u64, n);
        assert_eq!(r.h0.len() as u64, p - 1);

        let kd = hopf(&format!("kD:cyclic:{n}:{p}"));
        let r = compute_h1(&kd.diagram(Coefficients::Trivial).unwrap(), BUDGET).unwrap();
        assert_eq!(r.z1.len() as u64, gcd(n, p - 1), "k^Z/{n} over F_{p}");
        assert_eq!(r.classes.len() as u64, gcd(n, p - 1));
    }
}

#[test]
fn taft_with_its_coefficient_subalgebra() {
    for (n, p) in [(2, 3), (2, 5), (3, 7)] {
        let pair = taft_pair(n, make_prime_field(p).unwrap()).unwrap();
        let r = compute_h1(&build_c(&pair.taft, &pair.e_n).unwrap(), BUDGET).unwrap();
        assert!(r.checks.passed(), "{}", r.checks.summary());
        assert_eq!(r.h0.len() as u64, p - 1);
        assert_eq!(r.classes.len(), n);
        assert_eq!(r.classes.iter().filter(|c| c.distinguished).count(), 1);
    }
}

#[test]
fn orbit_sizes_divide_the_unit_group() {
    for spec in ["taft:2:5", "kD:s3:5", "kG:cyclic:3:7"] {
        let d = hopf(spec).diagram(Coefficients::E).unwrap();
        let n_units = units(d.a0(), BUDGET).unwrap().len();
        let r = compute_h1(&d, BUDGET).unwrap();
        let total: usize = r.classes.iter().map(|c| c.members.len()).sum();
        assert_eq!(total, r.z1.len());
        for c in &r.classes {
            assert_eq!(n_units % c.members.len(), 0, "{spec}: orbit of size {}", c.members.len());
        }
        // Orbit-stabilizer at the distinguished point: its stabilizer is H⁰.
        let dist = &r.classes[r.distinguished_class()];
        assert_eq!(dist.members.len() * r.h0.len(), n_units, "{spec}");
    }
}

#[test]
fn h0_is_the_invariant_units() {
    let d = hopf("taft:2:5").diagram(Coefficients::E).unwrap();
    let h0 = compute_h0(&d, BUDGET).unwrap();
    let by_hand: Vec<Element> = units(d.a0(), BUDGET)
        .unwrap()
        .into_iter()
        .map(|u| u.element)
        .filter(|x| d.first[0].apply_coords(&x.coords) == d.first[1].apply_coords(&x.coords))
        .collect();
    assert_eq!(h0, by_hand);
}

#[test]
fn strategies_agree_and_budget_is_reported() {
    let d = hopf("kD:s3:5").diagram(Coefficients::Trivial).unwrap();
    let a = compute_z1(&d, BUDGET, Z1Strategy::BruteForce).unwrap();
    let b = compute_z1(&d, BUDGET, Z1Strategy::Solver).unwrap();
    assert_eq!(a, b);
    assert!(matches!(compute_z1(&d, 10, Z1Strategy::BruteForce), Err(Error::BudgetExceeded { .. })));
}

fn coords(p: u32, raw: &[u32]) -> Vec<Scalar> {
    raw.iter().map(|v| Scalar(v % p)).collect()
}

fn mul_in(a: &AlgebraData, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    a.mul_coords(x, y)
}

fn comult_is_multiplicative(h: &HopfData, x: &[Scalar], y: &[Scalar]) -> bool {
    let hh = h.algebra().tensor(h.algebra());
    let lhs = h.comult().apply_coords(&mul_in(h.algebra(), x, y));
    let rhs = mul_in(&hh, &h.comult().apply_coords(x), &h.comult().apply_coords(y));
    lhs == rhs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn taft_comult_is_an_algebra_map(
        raw_x in prop::collection::vec(0u32..7, 9),
        raw_y in prop::collection::vec(0u32..7, 9),
    ) {
        let h = taft_algebra(3, make_prime_field(7).unwrap()).unwrap();
        prop_assert!(comult_is_multiplicative(&h, &coords(7, &raw_x), &coords(7, &raw_y)));
    }

    #[test]
    fn radford_product_comult_is_an_algebra_map(
        raw_x in prop::collection::vec(0u32..5, 12),
        raw_y in prop::collection::vec(0u32..5, 12),
    ) {
        let inst = hopf("kD:s3:5");
        let n = inst.he.dim();
        let (x, y) = (coords(5, &raw_x[..n]), coords(5, &raw_y[..n]));
        prop_assert!(comult_is_multiplicative(&inst.he, &x, &y));
    }

    #[test]
    fn action_is_a_right_action(i in any::<usize>(), a in any::<usize>(), b in any::<usize>()) {
        let d = hopf("taft:2:5").diagram(Coefficients::E).unwrap();
        let z = compute_z1(&d, BUDGET, Z1Strategy::Auto).unwrap();
        let us = units(d.a0(), BUDGET).unwrap();
        let x_big = &z.cocycles[i % z.len()];
        let (x, y) = (&us[a % us.len()].element, &us[b % us.len()].element);
        let xy = d.a0().mul(x, y).unwrap();
        let stepwise = act(&act(x_big, x, &d).unwrap(), y, &d).unwrap();
        prop_assert_eq!(&stepwise, &act(x_big, &xy, &d).unwrap());
        prop_assert!(d.is_cocycle(&stepwise.coords));
        prop_assert_eq!(act(x_big, &d.a0().one(), &d).unwrap(), x_big.clone());
    }

    #[test]
    fn cohomologous_matches_orbits(spec_ix in 0usize..3, i in any::<usize>(), j in any::<usize>()) {
        let spec = ["taft:2:5", "kD:s3:5", "kG:cyclic:2:5"][spec_ix];
        let d = hopf(spec).diagram(Coefficients::E).unwrap();
        let r = compute_h1(&d, BUDGET).unwrap();
        let (i, j) = (i % r.z1.len(), j % r.z1.len());
        let same = cohomologous(&d, &r.z1.cocycles[i].coords, &r.z1.cocycles[j].coords, BUDGET).unwrap();
        prop_assert_eq!(same, r.class_of[i] == r.class_of[j]);
    }
}
