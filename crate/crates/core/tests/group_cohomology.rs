//! Group cohomology against closed-form counts and an independent brute
//! force over `Z/2 ⋉ Z/3` written out by hand.

use proptest::prelude::*;

use hopfcoh::group_cohom::{
    group_act, group_box_set, group_h0, group_h1, group_z1, verify_group_decomposition, SemidirectAction,
};
use hopfcoh::models::{FiniteGroup, GroupAction};
use hopfcoh::Error;

const BUDGET: u64 = 10_000_000;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `Z/m` acting on `Z/c` through multiplication by `u`, with `u^m = 1 mod c`.
fn multiplier_action(m: usize, c: usize, u: usize) -> GroupAction {
    GroupAction::from_fn(FiniteGroup::cyclic(m), FiniteGroup::cyclic(c), |g, a| (0..g).fold(a, |acc, _| acc * u % c))
        .unwrap()
}

/// For cyclic `D = Z/m` and abelian `C = Z/c`, a cocycle is fixed by its
/// value `b` on the generator subject to `b·(1 + u + … + u^{m-1}) = 0`, and
/// the orbit of `b` is `b + (u-1)C`.
fn closed_form(m: usize, c: usize, u: usize) -> (usize, usize, usize) {
    let norm: usize = (0..m).fold((0, 1), |(s, pw), _| ((s + pw) % c, pw * u % c)).0;
    let z1 = (0..c).filter(|b| (b * norm).is_multiple_of(c)).count();
    let h0 = (0..c).filter(|x| (x * u + c - x).is_multiple_of(c)).count();
    (h0, z1, z1 * h0 / c)
}

fn admissible_multipliers(m: usize, c: usize) -> Vec<usize> {
    (1..=c.max(1))
        .map(|u| u % c)
        .filter(|&u| gcd(u, c) == 1 && (0..m).fold(1 % c, |acc, _| acc * u % c) == 1 % c)
        .collect()
}

#[test]
fn inversion_on_z3() {
    let act = GroupAction::inversion(FiniteGroup::cyclic(3)).unwrap();
    assert_eq!(group_h0(&act), vec![0]);
    let h1 = group_h1(&act, BUDGET).unwrap();
    assert_eq!(h1.z1.len(), 3);
    assert_eq!(h1.classes.len(), 1);
    assert_eq!(h1.z1[h1.distinguished].values, vec![0, 0]);
}

#[test]
fn trivial_action_gives_homomorphisms_up_to_conjugacy() {
    // Hom(Z/2, S3): the identity and three transpositions, in two conjugacy classes.
    let s3 = FiniteGroup::s3();
    let involutions = (0..6).filter(|&x| s3.mul(x, x) == s3.identity()).count();
    let act = GroupAction::trivial(FiniteGroup::cyclic(2), s3);
    let h1 = group_h1(&act, BUDGET).unwrap();
    assert_eq!(h1.z1.len(), involutions);
    assert_eq!(h1.z1.len(), 4);
    assert_eq!(h1.classes.len(), 2);
    assert_eq!(group_h0(&act).len(), 6);

    for c in 1..=8 {
        let act = GroupAction::trivial(FiniteGroup::cyclic(2), FiniteGroup::cyclic(c));
        let h1 = group_h1(&act, BUDGET).unwrap();
        assert_eq!(h1.z1.len(), gcd(2, c));
        assert_eq!(h1.classes.len(), gcd(2, c));
    }
}

#[test]
fn budget_is_enforced_before_enumerating() {
    let act = GroupAction::trivial(FiniteGroup::s3(), FiniteGroup::cyclic(12));
    assert!(matches!(group_z1(&act, 1000), Err(Error::BudgetExceeded { .. })));
}

/// `S3` as pairs `(g, a)` with `(g,a)(h,b) = (g+h, (-1)^h a + b)`, acting on
/// `Z/3` through `g` by inversion.
fn s3_cocycles_by_hand() -> usize {
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|g| (0..3).map(move |a| (g, a))).collect();
    let idx = |(g, a): (usize, usize)| g * 3 + a;
    let mul = |(g, a): (usize, usize), (h, b): (usize, usize)| ((g + h) % 2, (if h == 1 { 3 - a } else { a } + b) % 3);
    let act = |(g, _): (usize, usize), x: usize| if g == 1 { (3 - x) % 3 } else { x };
    let mut count = 0;
    for code in 0..3usize.pow(6) {
        let beta: Vec<usize> = (0..6).map(|i| code / 3usize.pow(i) % 3).collect();
        if elems
            .iter()
            .all(|&s| elems.iter().all(|&t| beta[idx(mul(s, t))] == (beta[idx(s)] + act(s, beta[idx(t)])) % 3))
        {
            count += 1;
        }
    }
    count
}

fn s3_on_z3() -> SemidirectAction {
    let z3 = FiniteGroup::cyclic(3);
    SemidirectAction::new(
        GroupAction::inversion(z3.clone()).unwrap(),
        GroupAction::inversion(z3.clone()).unwrap(),
        GroupAction::trivial(z3.clone(), z3),
    )
    .unwrap()
}

#[test]
fn semidirect_counts_match_hand_enumeration() {
    let sd = s3_on_z3();
    let z1 = s3_cocycles_by_hand();
    let r = verify_group_decomposition(&sd, BUDGET).unwrap();
    assert!(r.passed(), "{}", r.summary());
    assert_eq!(r.counts["Z1(G⋉A,C)"], z1 as u64);
    assert_eq!(r.counts["pairs"], z1 as u64);
    // Abelian coefficients: |H¹| = |Z¹|·|H⁰|/|C| with H⁰ = {0}.
    assert_eq!(r.counts["H0(G⋉A,C)"], 1);
    assert_eq!(r.counts["H1(G⋉A,C)"], z1 as u64 / 3);
    assert_eq!(r.counts["H1 pair classes"], z1 as u64 / 3);
}

#[test]
fn trivial_outer_group_reduces_to_the_inner_cocycles() {
    for c in 1..=6 {
        let one = FiniteGroup::trivial();
        let z3 = FiniteGroup::cyclic(3);
        let cc = FiniteGroup::cyclic(c);
        let sd = SemidirectAction::new(
            GroupAction::trivial(one.clone(), z3.clone()),
            GroupAction::trivial(one, cc.clone()),
            GroupAction::trivial(z3, cc),
        )
        .unwrap();
        let pairs = group_box_set(&sd, BUDGET).unwrap().pairs.len();
        assert_eq!(pairs, group_z1(&sd.a_on_c, BUDGET).unwrap().len());
        assert_eq!(pairs, gcd(3, c));
        assert!(verify_group_decomposition(&sd, BUDGET).unwrap().passed());
    }
}

#[test]
fn exact_sequence_items_hold_on_catalog_actions() {
    for c in [1, 2, 3, 4, 6] {
        let z3 = FiniteGroup::cyclic(3);
        let cc = FiniteGroup::cyclic(c);
        let sd = SemidirectAction::new(
            GroupAction::inversion(z3.clone()).unwrap(),
            GroupAction::trivial(FiniteGroup::cyclic(2), cc.clone()),
            GroupAction::trivial(z3, cc),
        )
        .unwrap();
        let r = verify_group_decomposition(&sd, BUDGET).unwrap();
        assert!(r.passed(), "c={c}: {}", r.summary());
        for item in ["ι is injective on classes", "im ι = π⁻¹(point)", "π lands in the invariant classes"] {
            assert!(r.item(item).is_some_and(|i| i.passed), "c={c}: {item}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclic_actions_match_closed_form(m in 1usize..7, c in 1usize..11, pick in any::<usize>()) {
        let us = admissible_multipliers(m, c);
        let u = us[pick % us.len()];
        let act = multiplier_action(m, c, u);
        let (h0, z1, h1) = closed_form(m, c, u);
        prop_assert_eq!(group_h0(&act).len(), h0);
        let res = group_h1(&act, BUDGET).unwrap();
        prop_assert_eq!(res.z1.len(), z1);
        prop_assert_eq!(res.classes.len(), h1);
    }

    #[test]
    fn orbits_are_closed_under_the_action(m in 1usize..5, c in 2usize..9, pick in any::<usize>(), x in any::<usize>()) {
        let us = admissible_multipliers(m, c);
        let act = multiplier_action(m, c, us[pick % us.len()]);
        let res = group_h1(&act, BUDGET).unwrap();
        for (i, beta) in res.z1.iter().enumerate() {
            let moved = group_act(&act, beta, x % c);
            let j = res.index_of(&moved.values);
            prop_assert!(j.is_some());
            prop_assert_eq!(res.class_of[j.unwrap()], res.class_of[i]);
        }
        let total: usize = res.classes.iter().map(Vec::len).sum();
        prop_assert_eq!(total, res.z1.len());
    }
}
