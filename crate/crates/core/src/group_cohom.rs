//! Non-abelian cohomology of finite groups with coefficients in a finite
//! group, used as an independent oracle for the Hopf-algebraic pipeline.
//!
//! A cocycle is a table `β: D → C` with `β(dd') = β(d)·^d β(d')`; the right
//! action is `(β⇀x)(d) = x⁻¹β(d)·^d x`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::cohomology::{build_c, compute_h1, verify_decomposition, verify_exact_sequence, CohomologyReport};
use crate::error::{Error, Result};
use crate::linalg::LinearMap;
use crate::models::{comodule_from_group_action, ka_in_yd, AlgebraAction, FiniteGroup, GroupAction};
use crate::radford::{radford_product, split_coaction, ComoduleAlgebraData};
use crate::report::{CheckReport, VerificationReport};
use crate::scalars::{PrimeField, Scalar};

/// `D` acting on the coefficient group `C` by automorphisms.
pub type GGroupStructure = GroupAction;

/// A crossed homomorphism stored as its value table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GroupCocycle {
    pub domain: String,
    pub values: Vec<usize>,
}

/// Elements of `C` fixed by all of `D`.
pub fn group_h0(act: &GroupAction) -> Vec<usize> {
    (0..act.target.order()).filter(|&x| (0..act.actor.order()).all(|d| act.apply(d, x) == x)).collect()
}

fn is_cocycle(act: &GroupAction, b: &[usize]) -> bool {
    let (d, c) = (&act.actor, &act.target);
    (0..d.order()).all(|x| (0..d.order()).all(|y| b[d.mul(x, y)] == c.mul(b[x], act.apply(x, b[y]))))
}

/// All cocycle tables, lexicographically ordered.
pub fn group_z1(act: &GroupAction, budget: u64) -> Result<Vec<GroupCocycle>> {
    let (nd, nc) = (act.actor.order(), act.target.order());
    let needed = (nc as u128).checked_pow(nd as u32).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(Error::budget(needed, budget));
    }
    let mut out = Vec::new();
    let mut table = vec![usize::MAX; nd];
    backtrack(act, 0, &mut table, &mut out);
    Ok(out)
}

/// Fills `table` in index order, pruning on every fully assigned relation.
fn backtrack(act: &GroupAction, pos: usize, table: &mut Vec<usize>, out: &mut Vec<GroupCocycle>) {
    let (d, c) = (&act.actor, &act.target);
    if pos == table.len() {
        if is_cocycle(act, table) {
            out.push(GroupCocycle { domain: d.name.clone(), values: table.clone() });
        }
        return;
    }
    for v in 0..c.order() {
        table[pos] = v;
        let consistent = (0..=pos).all(|x| {
            (0..=pos).all(|y| {
                let xy = d.mul(x, y);
                xy > pos || table[xy] == c.mul(table[x], act.apply(x, table[y]))
            })
        });
        if consistent {
            backtrack(act, pos + 1, table, out);
        }
    }
    table[pos] = usize::MAX;
}

/// `(β⇀x)(d) = x⁻¹β(d)·^d x`.
pub fn group_act(act: &GroupAction, beta: &GroupCocycle, x: usize) -> GroupCocycle {
    let c = &act.target;
    let values = (0..act.actor.order()).map(|d| c.mul(c.mul(c.inv(x), beta.values[d]), act.apply(d, x))).collect();
    GroupCocycle { domain: beta.domain.clone(), values }
}

/// `Z¹` and its orbit decomposition.
#[derive(Clone, Debug, Serialize)]
pub struct GroupH1 {
    pub z1: Vec<GroupCocycle>,
    /// Orbits as sorted index lists, ordered by least member.
    pub classes: Vec<Vec<usize>>,
    #[serde(skip)]
    pub class_of: Vec<usize>,
    /// Index of the constant cocycle.
    pub distinguished: usize,
}

impl GroupH1 {
    pub fn index_of(&self, beta: &[usize]) -> Option<usize> {
        self.z1.binary_search_by(|c| c.values.as_slice().cmp(beta)).ok()
    }

    pub fn distinguished_class(&self) -> usize {
        self.class_of[self.distinguished]
    }
}

/// Orbits of `Z¹` under the action of `C`; fails if the action leaves `Z¹`.
pub fn group_h1(act: &GroupAction, budget: u64) -> Result<GroupH1> {
    let z1 = group_z1(act, budget)?;
    let items: Vec<Vec<usize>> = z1.iter().map(|b| b.values.clone()).collect();
    let (classes, class_of) = orbits(&items, act.target.order(), |i, x| group_act(act, &z1[i], x).values)?;
    let one = vec![act.target.identity(); act.actor.order()];
    let distinguished = z1
        .binary_search_by(|c| c.values.as_slice().cmp(&one))
        .map_err(|_| Error::NotAnAction("the constant cocycle is missing".into()))?;
    Ok(GroupH1 { z1, classes, class_of, distinguished })
}

type Blocks = (Vec<Vec<usize>>, Vec<usize>);

/// Union–find orbits of sorted `items` under `apply(item, group element)`.
fn orbits(items: &[Vec<usize>], group_order: usize, apply: impl Fn(usize, usize) -> Vec<usize>) -> Result<Blocks> {
    let index: HashMap<&[usize], usize> = items.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    let mut parent: Vec<usize> = (0..items.len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for i in 0..items.len() {
        for x in 0..group_order {
            let img = apply(i, x);
            let j = *index
                .get(img.as_slice())
                .ok_or_else(|| Error::NotAnAction("the action does not preserve cocycles".into()))?;
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..items.len() {
        let r = find(&mut parent, i);
        blocks.entry(r).or_default().push(i);
    }
    let classes: Vec<Vec<usize>> = blocks.into_values().collect();
    let mut class_of = vec![0; items.len()];
    for (ci, b) in classes.iter().enumerate() {
        for &m in b {
            class_of[m] = ci;
        }
    }
    Ok((classes, class_of))
}

/// `C` acted on by `G` and by `A`, with `G` acting on `A`, subject to
/// `^g(^a x) = ^{^g a}(^g x)`; then `G⋉A` acts by `^{(g,a)}x = ^g(^a x)`.
#[derive(Clone, Debug)]
pub struct SemidirectAction {
    pub g_on_a: GroupAction,
    pub g_on_c: GroupAction,
    pub a_on_c: GroupAction,
    pub product: FiniteGroup,
    pub combined: GroupAction,
}

impl SemidirectAction {
    pub fn new(g_on_a: GroupAction, g_on_c: GroupAction, a_on_c: GroupAction) -> Result<Self> {
        let (g, a, c) = (&g_on_a.actor, &g_on_a.target, &g_on_c.target);
        if g_on_c.actor != *g || a_on_c.actor != *a || a_on_c.target != *c {
            return Err(Error::NotAnAction("the three actions do not share G, A and C".into()));
        }
        for gi in 0..g.order() {
            for ai in 0..a.order() {
                for x in 0..c.order() {
                    let lhs = g_on_c.apply(gi, a_on_c.apply(ai, x));
                    let rhs = a_on_c.apply(g_on_a.apply(gi, ai), g_on_c.apply(gi, x));
                    if lhs != rhs {
                        return Err(Error::NotAnAction(format!(
                            "compatibility fails at g={}, a={}, x={}",
                            g.label(gi),
                            a.label(ai),
                            c.label(x)
                        )));
                    }
                }
            }
        }
        let product = FiniteGroup::semidirect(&g_on_a)?;
        let na = a.order();
        let combined =
            GroupAction::from_fn(product.clone(), c.clone(), |d, x| g_on_c.apply(d / na, a_on_c.apply(d % na, x)))?;
        Ok(SemidirectAction { g_on_a, g_on_c, a_on_c, product, combined })
    }

    /// Restricts an action of `G⋉A` to the two factors.
    pub fn from_combined(g_on_a: GroupAction, combined: &GroupAction) -> Result<Self> {
        let (g, a) = (g_on_a.actor.clone(), g_on_a.target.clone());
        let na = a.order();
        let ga = a.identity();
        let gg = g.identity();
        let g_on_c = combined.pullback(g, |gi| gi * na + ga)?;
        let a_on_c = combined.pullback(a, |ai| gg * na + ai)?;
        let out = Self::new(g_on_a, g_on_c, a_on_c)?;
        if out.combined.table() != combined.table() {
            return Err(Error::NotAnAction("restrictions do not recombine to the given action".into()));
        }
        Ok(out)
    }

    fn pair_index(&self, g: usize, a: usize) -> usize {
        g * self.g_on_a.target.order() + a
    }

    /// `γ(g)·^gα(a) = α(^g a)·^{^g a}γ(g)` for all `g`, `a`.
    pub fn compatible(&self, gamma: &[usize], alpha: &[usize]) -> bool {
        let c = &self.g_on_c.target;
        let (ng, na) = (self.g_on_a.actor.order(), self.g_on_a.target.order());
        (0..ng).all(|g| {
            (0..na).all(|a| {
                let ga = self.g_on_a.apply(g, a);
                c.mul(gamma[g], self.g_on_c.apply(g, alpha[a])) == c.mul(alpha[ga], self.a_on_c.apply(ga, gamma[g]))
            })
        })
    }

    /// `β ↦ (γ, α)` with `γ(g) = β(g,1)`, `α(a) = β(1,a)`.
    pub fn split(&self, beta: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let (g, a) = (&self.g_on_a.actor, &self.g_on_a.target);
        let gamma = (0..g.order()).map(|gi| beta[self.pair_index(gi, a.identity())]).collect();
        let alpha = (0..a.order()).map(|ai| beta[self.pair_index(g.identity(), ai)]).collect();
        (gamma, alpha)
    }

    /// `β(g,a) = γ(g)·^gα(a)`.
    pub fn assemble(&self, gamma: &[usize], alpha: &[usize]) -> Vec<usize> {
        let c = &self.g_on_c.target;
        let na = self.g_on_a.target.order();
        (0..self.product.order()).map(|d| c.mul(gamma[d / na], self.g_on_c.apply(d / na, alpha[d % na]))).collect()
    }
}

/// Compatible pairs and their orbits under `[γ,α]⇀x = [γ⇀x, α⇀x]`.
#[derive(Clone, Debug)]
pub struct GroupBoxSet {
    /// Sorted by `(γ, α)`.
    pub pairs: Vec<(Vec<usize>, Vec<usize>)>,
    pub distinguished: usize,
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

pub fn group_box_set(sd: &SemidirectAction, budget: u64) -> Result<GroupBoxSet> {
    let zg = group_z1(&sd.g_on_c, budget)?;
    let za = group_z1(&sd.a_on_c, budget)?;
    let mut pairs = Vec::new();
    for gamma in &zg {
        for alpha in &za {
            if sd.compatible(&gamma.values, &alpha.values) {
                pairs.push((gamma.values.clone(), alpha.values.clone()));
            }
        }
    }
    let c = &sd.g_on_c.target;
    let e = c.identity();
    let one = (vec![e; sd.g_on_a.actor.order()], vec![e; sd.g_on_a.target.order()]);
    let distinguished = pairs.binary_search(&one).map_err(|_| Error::NotAnAction("[1,1] is not compatible".into()))?;
    let items: Vec<Vec<usize>> = pairs.iter().map(|(g, a)| [g.clone(), a.clone()].concat()).collect();
    let ng = sd.g_on_a.actor.order();
    let (classes, class_of) = orbits(&items, c.order(), |i, x| {
        let (g, a) = &pairs[i];
        let gx = group_act(&sd.g_on_c, &GroupCocycle { domain: String::new(), values: g.clone() }, x).values;
        let ax = group_act(&sd.a_on_c, &GroupCocycle { domain: String::new(), values: a.clone() }, x).values;
        debug_assert_eq!(gx.len(), ng);
        [gx, ax].concat()
    })?;
    Ok(GroupBoxSet { pairs, distinguished, classes, class_of })
}

/// `H⁰(G⋉A,C) = H⁰(G,C) ∩ H⁰(A,C)`, the bijection `Z¹(G⋉A,C) ↔` compatible
/// pairs in both directions, and the induced bijection on `H¹`; plus the
/// exact sequence `H¹(G,C^A) → H¹(G⋉A,C) → H¹(A,C)^G`.
pub fn verify_group_decomposition(sd: &SemidirectAction, budget: u64) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(format!(
        "group decomposition over {} with coefficients {}",
        sd.product.name, sd.g_on_c.target.name
    ));
    let h0 = group_h0(&sd.combined);
    let (hg, ha): (BTreeSet<usize>, BTreeSet<usize>) =
        (group_h0(&sd.g_on_c).into_iter().collect(), group_h0(&sd.a_on_c).into_iter().collect());
    let meet: Vec<usize> = hg.intersection(&ha).copied().collect();
    r.check("H⁰ of the product is the intersection", h0 == meet, || format!("{h0:?} against {meet:?}"));

    let big = group_h1(&sd.combined, budget)?;
    let bx = group_box_set(sd, budget)?;
    r.count("H0(G⋉A,C)", h0.len() as u64);
    r.count("Z1(G⋉A,C)", big.z1.len() as u64);
    r.count("pairs", bx.pairs.len() as u64);
    r.count("H1(G⋉A,C)", big.classes.len() as u64);
    r.count("H1 pair classes", bx.classes.len() as u64);

    let mut to_pair = vec![0; big.z1.len()];
    let mut bad = None;
    for (i, beta) in big.z1.iter().enumerate() {
        let (g, a) = sd.split(&beta.values);
        match bx.pairs.binary_search(&(g.clone(), a.clone())) {
            Ok(j) if sd.assemble(&g, &a) == beta.values => to_pair[i] = j,
            _ => {
                bad.get_or_insert(format!("{:?}", beta.values));
            }
        }
    }
    r.check("split lands in the pairs and assemble undoes it", bad.is_none(), || bad.clone().unwrap_or_default());
    let mut bad = None;
    let mut to_beta = vec![0; bx.pairs.len()];
    for (j, (g, a)) in bx.pairs.iter().enumerate() {
        let beta = sd.assemble(g, a);
        match big.index_of(&beta) {
            Some(i) if sd.split(&beta) == (g.clone(), a.clone()) => to_beta[j] = i,
            _ => {
                bad.get_or_insert(format!("{g:?}, {a:?}"));
            }
        }
    }
    r.check("assemble lands in Z¹ and split undoes it", bad.is_none(), || bad.clone().unwrap_or_default());
    r.check("distinguished points correspond", to_pair[big.distinguished] == bx.distinguished, || {
        "split(1) is not [1,1]".into()
    });

    let images: Vec<BTreeSet<usize>> =
        bx.classes.iter().map(|b| b.iter().map(|&j| big.class_of[to_beta[j]]).collect()).collect();
    let well_defined = images.iter().all(|s| s.len() == 1);
    let hit: BTreeSet<usize> = images.iter().flatten().copied().collect();
    r.check("assemble is well defined on classes", well_defined, || "an orbit of pairs meets two classes".into());
    r.check(
        "assemble is bijective on classes",
        well_defined && hit.len() == bx.classes.len() && hit.len() == big.classes.len(),
        || format!("{} pair classes, {} classes", bx.classes.len(), big.classes.len()),
    );

    exact_sequence(sd, &big, &mut r, budget)?;
    Ok(r)
}

/// `ι(γ) = [γ,1]` on `H¹(G, C^A)` and `π[γ,α] = α` into `H¹(A,C)^G`.
fn exact_sequence(sd: &SemidirectAction, big: &GroupH1, r: &mut CheckReport, budget: u64) -> Result<()> {
    let c = &sd.g_on_c.target;
    let fixed = group_h0(&sd.a_on_c);
    // C^A as a group with the restricted G-action.
    let pos: HashMap<usize, usize> = fixed.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let table = fixed.iter().map(|&x| fixed.iter().map(|&y| pos[&c.mul(x, y)]).collect()).collect();
    let labels = fixed.iter().map(|&x| c.label(x).to_string()).collect();
    let ca = FiniteGroup::from_table(format!("{}^{}", c.name, sd.a_on_c.actor.name), labels, table)?;
    let g_on_ca = GroupAction::from_fn(sd.g_on_a.actor.clone(), ca, |g, i| pos[&sd.g_on_c.apply(g, fixed[i])])?;
    let small = group_h1(&g_on_ca, budget)?;
    let fibre_target = group_h1(&sd.a_on_c, budget)?;
    r.count("H1(G,C^A)", small.classes.len() as u64);
    r.count("H1(A,C)", fibre_target.classes.len() as u64);

    let e = c.identity();
    let na = sd.g_on_a.target.order();
    let iota: Option<Vec<usize>> = small
        .classes
        .iter()
        .map(|block| {
            let cls: BTreeSet<usize> = block
                .iter()
                .filter_map(|&i| {
                    let gamma: Vec<usize> = small.z1[i].values.iter().map(|&k| fixed[k]).collect();
                    big.index_of(&sd.assemble(&gamma, &vec![e; na])).map(|j| big.class_of[j])
                })
                .collect();
            (cls.len() == 1 && block.iter().len() > 0).then(|| *cls.iter().next().unwrap())
        })
        .collect();
    let pi: Option<Vec<usize>> = big
        .classes
        .iter()
        .map(|block| {
            let cls: BTreeSet<usize> = block
                .iter()
                .filter_map(|&i| {
                    fibre_target.index_of(&sd.split(&big.z1[i].values).1).map(|j| fibre_target.class_of[j])
                })
                .collect();
            (cls.len() == 1).then(|| *cls.iter().next().unwrap())
        })
        .collect();
    r.check("ι is well defined on classes", iota.is_some(), || "ι is not constant on a class".into());
    r.check("π is well defined on classes", pi.is_some(), || "π is not constant on a class".into());
    let (Some(iota), Some(pi)) = (iota, pi) else { return Ok(()) };
    let image: BTreeSet<usize> = iota.iter().copied().collect();
    r.check("ι is injective on classes", image.len() == iota.len(), || format!("{iota:?}"));
    let fibre: BTreeSet<usize> = (0..pi.len()).filter(|&k| pi[k] == fibre_target.distinguished_class()).collect();
    r.check("im ι = π⁻¹(point)", image == fibre, || format!("image {image:?}, fibre {fibre:?}"));

    // (g·α)(a) = ^g(α(^{g⁻¹}a)); a class is invariant if every g fixes it.
    let g = &sd.g_on_a.actor;
    let invariant: BTreeSet<usize> = (0..fibre_target.classes.len())
        .filter(|&k| {
            let alpha = &fibre_target.z1[fibre_target.classes[k][0]].values;
            (0..g.order()).all(|gi| {
                let moved: Vec<usize> =
                    (0..na).map(|a| sd.g_on_c.apply(gi, alpha[sd.g_on_a.apply(g.inv(gi), a)])).collect();
                fibre_target.index_of(&moved).map(|j| fibre_target.class_of[j]) == Some(k)
            })
        })
        .collect();
    let outside: Vec<usize> = pi.iter().copied().filter(|k| !invariant.contains(k)).collect();
    r.check("π lands in the invariant classes", outside.is_empty(), || format!("{outside:?}"));
    r.count("H1(A,C)^G", invariant.len() as u64);
    Ok(())
}

/// `D` acting on `(k^C)^×` by `(^d u)(c) = u(^{d⁻¹}c)`; returns the action
/// and each unit's value vector.
pub fn induced_unit_action(act: &GroupAction, field: PrimeField) -> Result<(GroupAction, Vec<Vec<Scalar>>)> {
    let (units, values) = FiniteGroup::units_of_function_algebra(&act.target, field);
    let index: HashMap<&[Scalar], usize> = values.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    let d = &act.actor;
    let nc = act.target.order();
    let table: Vec<Vec<usize>> = (0..d.order())
        .map(|di| {
            values
                .iter()
                .map(|u| {
                    let moved: Vec<Scalar> = (0..nc).map(|c| u[act.apply(d.inv(di), c)]).collect();
                    index[moved.as_slice()]
                })
                .collect()
        })
        .collect();
    Ok((GroupAction::new(d.clone(), units, table)?, values))
}

/// The Hopf cocycle `Σ_d β(d)⊗δ_d ∈ k^C⊗k^D` of a group cocycle.
pub fn hopf_cocycle_of(beta: &GroupCocycle, values: &[Vec<Scalar>], nc: usize) -> Vec<Scalar> {
    let nd = beta.values.len();
    let mut x = vec![Scalar::ZERO; nc * nd];
    for (d, &u) in beta.values.iter().enumerate() {
        for c in 0..nc {
            x[c * nd + d] = values[u][c];
        }
    }
    x
}

/// `H⁰`/`H¹` of `k^D` with coefficients `k^C` against `H⁰`/`H¹` of `D` with
/// coefficients `(k^C)^×`, including an explicit bijection of cocycles.
pub fn cross_check_hopf_vs_group(act: &GroupAction, field: PrimeField, budget: u64) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(format!(
        "k^{} with coefficients k^{} over F_{}",
        act.actor.name,
        act.target.name,
        field.p()
    ));
    let alg_act = AlgebraAction::on_function_algebra(act, field)?;
    let (kd, fa) = comodule_from_group_action(&alg_act, &format!("k^{}", act.target.name))?;
    let d = build_c(&kd, &fa)?;
    let hopf = compute_h1(&d, budget)?;
    let (unit_act, values) = induced_unit_action(act, field)?;
    let group = group_h1(&unit_act, budget)?;
    let h0 = group_h0(&unit_act);
    compare(&mut r, &hopf, &group, &h0, &values, act.target.order());
    Ok(r)
}

fn compare(
    r: &mut CheckReport,
    hopf: &CohomologyReport,
    group: &GroupH1,
    h0: &[usize],
    values: &[Vec<Scalar>],
    nc: usize,
) {
    r.count("Hopf H0", hopf.h0.len() as u64);
    r.count("group H0", h0.len() as u64);
    r.count("Hopf H1", hopf.classes.len() as u64);
    r.count("group H1", group.classes.len() as u64);
    r.absorb(hopf.checks.clone());
    r.check("H⁰ cardinalities agree", hopf.h0.len() == h0.len(), || {
        format!("{} against {}", hopf.h0.len(), h0.len())
    });
    let h0_same: BTreeSet<Vec<Scalar>> = h0.iter().map(|&u| values[u].clone()).collect();
    let hopf_h0: BTreeSet<Vec<Scalar>> = hopf.h0.iter().map(|x| x.coords.clone()).collect();
    r.check("H⁰ sets agree", h0_same == hopf_h0, || "invariant units differ".into());
    r.check("Z¹ cardinalities agree", hopf.z1.len() == group.z1.len(), || {
        format!("{} against {}", hopf.z1.len(), group.z1.len())
    });
    let images: Vec<Option<usize>> =
        group.z1.iter().map(|b| hopf.z1.index_of(&hopf_cocycle_of(b, values, nc))).collect();
    r.check("group cocycles are Hopf cocycles", images.iter().all(Option::is_some), || {
        let i = images.iter().position(Option::is_none).unwrap_or(0);
        format!("{:?}", group.z1[i].values)
    });
    r.check("H¹ cardinalities agree", hopf.classes.len() == group.classes.len(), || {
        format!("{} against {}", hopf.classes.len(), group.classes.len())
    });
    if images.iter().all(Option::is_some) {
        let class_map: Vec<BTreeSet<usize>> =
            group.classes.iter().map(|b| b.iter().map(|&i| hopf.class_of[images[i].unwrap()]).collect()).collect();
        let hit: BTreeSet<usize> = class_map.iter().flatten().copied().collect();
        r.check(
            "classes correspond bijectively",
            class_map.iter().all(|s| s.len() == 1)
                && hit.len() == hopf.classes.len()
                && hit.len() == group.classes.len(),
            || "class map is not a bijection".into(),
        );
        r.check(
            "distinguished points match",
            hopf.class_of[images[group.distinguished].unwrap()] == hopf.distinguished_class(),
            || "the constant cocycle does not map to the class of 1".into(),
        );
    }
}

/// For `D = G⋉A`: the group decomposition on `(k^C)^×`, and the Hopf
/// decomposition and exact sequence over `k^G⋆k^A ≅ k^D` obtained by
/// splitting the coaction.
pub fn cross_check_semidirect(sd: &SemidirectAction, field: PrimeField, budget: u64) -> Result<VerificationReport> {
    let mut r = cross_check_hopf_vs_group(&sd.combined, field, budget)?;
    let (unit_act, _) = induced_unit_action(&sd.combined, field)?;
    let units_sd = SemidirectAction::from_combined(sd.g_on_a.clone(), &unit_act)?;
    r.absorb(verify_group_decomposition(&units_sd, budget)?);

    let pair = ka_in_yd(&sd.g_on_a, field)?;
    let he = radford_product(&pair.kg, &pair.braided)?;
    let alg_act = AlgebraAction::on_function_algebra(&sd.combined, field)?;
    let (_, fa) = comodule_from_group_action(&alg_act, &format!("k^{}", sd.combined.target.name))?;
    let coaction = fa.h_coaction.clone().expect("built with a coaction");
    let reshaped: LinearMap = coaction.with_shapes(fa.shape().to_vec(), [fa.shape(), he.shape()].concat())?;
    let with_he = ComoduleAlgebraData { he_coaction: Some(reshaped), h_coaction: None, ..fa };
    let split = split_coaction(&with_he, &he, &pair.braided)?;
    r.absorb(verify_decomposition(&pair.braided, &split, budget)?);
    r.absorb(verify_exact_sequence(&pair.braided, &split, budget)?);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::make_prime_field;

    fn inversion_sd(c_trivial: bool) -> SemidirectAction {
        let g = FiniteGroup::cyclic(2);
        let a = FiniteGroup::cyclic(3);
        let g_on_a = GroupAction::inversion(a.clone()).unwrap();
        let c = FiniteGroup::cyclic(3);
        let g_on_c =
            if c_trivial { GroupAction::trivial(g, c.clone()) } else { GroupAction::inversion(c.clone()).unwrap() };
        SemidirectAction::new(g_on_a, g_on_c, GroupAction::trivial(a, c)).unwrap()
    }

    #[test]
    fn inversion_on_z3() {
        let act = GroupAction::inversion(FiniteGroup::cyclic(3)).unwrap();
        assert_eq!(group_h0(&act), vec![0]);
        let h1 = group_h1(&act, 1000).unwrap();
        assert_eq!(h1.z1.len(), 3);
        assert_eq!(h1.classes.len(), 1);
    }

    #[test]
    fn trivial_cases() {
        let z2 = FiniteGroup::cyclic(2);
        let h1 = group_h1(&GroupAction::trivial(z2.clone(), z2.clone()), 100).unwrap();
        assert_eq!(h1.classes.len(), 2);
        let h1 = group_h1(&GroupAction::trivial(FiniteGroup::trivial(), z2.clone()), 100).unwrap();
        assert_eq!(h1.z1.len(), 1);
        let h1 = group_h1(&GroupAction::trivial(z2, FiniteGroup::trivial()), 100).unwrap();
        assert_eq!(h1.classes.len(), 1);
    }

    #[test]
    fn budget() {
        let act = GroupAction::trivial(FiniteGroup::s3(), FiniteGroup::s3());
        assert!(matches!(group_z1(&act, 1000), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn decomposition_holds() {
        for t in [true, false] {
            let r = verify_group_decomposition(&inversion_sd(t), 100_000).unwrap();
            assert!(r.passed(), "{}", r.summary());
        }
    }

    #[test]
    fn incompatible_actions_rejected() {
        // G swaps the factors of the Klein group, but only the first factor
        // acts on C while G acts trivially on C.
        let klein = FiniteGroup::from_table(
            "V4",
            ["1", "a", "b", "ab"].map(String::from).to_vec(),
            (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect(),
        )
        .unwrap();
        let swap = |g: usize, a: usize| if g == 0 { a } else { ((a & 1) << 1) | (a >> 1) };
        let g_on_a = GroupAction::from_fn(FiniteGroup::cyclic(2), klein.clone(), swap).unwrap();
        let c = FiniteGroup::cyclic(3);
        let a_on_c = GroupAction::from_fn(klein, c.clone(), |a, x| if a & 1 == 1 { (3 - x) % 3 } else { x }).unwrap();
        let g_on_c = GroupAction::trivial(FiniteGroup::cyclic(2), c);
        assert!(matches!(SemidirectAction::new(g_on_a, g_on_c, a_on_c), Err(Error::NotAnAction(_))));
    }

    #[test]
    fn hopf_and_group_agree_on_small_cases() {
        let f3 = make_prime_field(3).unwrap();
        let z2 = FiniteGroup::cyclic(2);
        let r = cross_check_hopf_vs_group(&GroupAction::trivial(z2.clone(), z2), f3, 1_000_000).unwrap();
        assert!(r.passed(), "{}", r.summary());
        let f5 = make_prime_field(5).unwrap();
        let act = GroupAction::inversion(FiniteGroup::cyclic(3)).unwrap();
        let r = cross_check_hopf_vs_group(&act, f5, 1_000_000).unwrap();
        assert!(r.passed(), "{}", r.summary());
    }

    #[test]
    fn semidirect_cross_check() {
        let f3 = make_prime_field(3).unwrap();
        let r = cross_check_semidirect(&inversion_sd(false), f3, 10_000_000).unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert!(r.items.iter().any(|i| i.name.starts_with("decomposition")), "{}", r.summary());
    }
}
