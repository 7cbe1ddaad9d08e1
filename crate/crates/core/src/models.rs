//! Constructors for the example families: finite groups and their actions,
//! group and function Hopf algebras, Taft algebras with their braided
//! factor, `k^A` as a braided Hopf algebra over `k^G`, and comodule
//! algebras coming from group actions.

use std::fmt;

use crate::error::{Error, Result};
use crate::hopf_core::{AlgebraData, CoalgebraData, HopfData};
use crate::linalg::{concat, BasedSpace, LinearMap};
use crate::radford::{radford_product_unchecked, BraidedHopfData, ComoduleAlgebraData, ComoduleKind};
use crate::report::CheckReport;
use crate::scalars::{primitive_root_of_unity, zeta_binomial, PrimeField, Scalar};
use crate::yd::{HComodule, HModule, YdObject};

/// A finite group given by its multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order())
    }
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup("table must be n×n with entries below n".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for (x, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {} has no inverse", labels[x])))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.into(), labels, table, inverse, identity })
    }

    /// `Z/n` generated by `u`; element `i` is `u^i`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "u".to_string(),
                _ => format!("u{i}"),
            })
            .collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::from_table(format!("Z/{n}"), labels, table).expect("cyclic group")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).renamed("1")
    }

    /// Permutations of three points, composed right to left.
    pub fn s3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let labels = vec!["e", "(01)", "(12)", "(02)", "(012)", "(021)"].into_iter().map(String::from).collect();
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms.iter().map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect()).collect();
        Self::from_table("S3", labels, table).expect("symmetric group")
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The semidirect product `G⋉A` with `(g,a)(h,b) = (gh, ^{h⁻¹}a·b)`.
    ///
    /// Elements are ordered g-major, a-minor: `(g,a)` has index `g·|A| + a`.
    pub fn semidirect(act: &GroupAction) -> Result<Self> {
        let (g, a) = (&act.actor, &act.target);
        let na = a.order();
        let n = g.order() * na;
        let labels = (0..n).map(|i| format!("({},{})", g.label(i / na), a.label(i % na))).collect();
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let (g1, a1, g2, a2) = (x / na, x % na, y / na, y % na);
                        let twisted = act.apply(g.inv(g2), a1);
                        g.mul(g1, g2) * na + a.mul(twisted, a2)
                    })
                    .collect()
            })
            .collect();
        Self::from_table(format!("{}⋉{}", g.name, a.name), labels, table)
    }

    /// `(k^C)^×`: functions `C → F_p^×` under pointwise multiplication.
    ///
    /// Returns the group and, for each element, its value vector on `C`;
    /// elements are in lexicographic order of those vectors.
    pub fn units_of_function_algebra(c: &FiniteGroup, field: PrimeField) -> (Self, Vec<Vec<Scalar>>) {
        let q = field.p() as usize - 1;
        let nc = c.order();
        let count = q.pow(nc as u32);
        let values: Vec<Vec<Scalar>> = (0..count)
            .map(|mut idx| {
                let mut v = vec![Scalar(0); nc];
                for slot in v.iter_mut().rev() {
                    *slot = Scalar((idx % q) as u32 + 1);
                    idx /= q;
                }
                v
            })
            .collect();
        let index_of = |v: &[Scalar]| v.iter().fold(0, |acc, s| acc * q + (s.0 as usize - 1));
        let table = values
            .iter()
            .map(|a| {
                values
                    .iter()
                    .map(|b| {
                        let prod: Vec<Scalar> = a.iter().zip(b).map(|(&x, &y)| field.mul(x, y)).collect();
                        index_of(&prod)
                    })
                    .collect()
            })
            .collect();
        let labels = values
            .iter()
            .map(|v| format!("[{}]", v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        let g = Self::from_table(format!("(k^{})^×", c.name), labels, table).expect("pointwise units");
        (g, values)
    }
}

/// A left action of `actor` on `target` by group automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    pub actor: FiniteGroup,
    pub target: FiniteGroup,
    table: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(actor: FiniteGroup, target: FiniteGroup, table: Vec<Vec<usize>>) -> Result<Self> {
        let (ng, na) = (actor.order(), target.order());
        if table.len() != ng || table.iter().any(|r| r.len() != na || r.iter().any(|&x| x >= na)) {
            return Err(Error::NotAnAction("table has the wrong size".into()));
        }
        if table[actor.identity()].iter().enumerate().any(|(a, &x)| x != a) {
            return Err(Error::NotAnAction("identity does not act trivially".into()));
        }
        for g in 0..ng {
            for h in 0..ng {
                for a in 0..na {
                    if table[actor.mul(g, h)][a] != table[g][table[h][a]] {
                        return Err(Error::NotAnAction(format!(
                            "(gh)·a ≠ g·(h·a) at g={}, h={}, a={}",
                            actor.label(g),
                            actor.label(h),
                            target.label(a)
                        )));
                    }
                }
            }
            for a in 0..na {
                for b in 0..na {
                    if table[g][target.mul(a, b)] != target.mul(table[g][a], table[g][b]) {
                        return Err(Error::NotAnAction(format!("{} is not an automorphism", actor.label(g))));
                    }
                }
            }
        }
        Ok(GroupAction { actor, target, table })
    }

    pub fn from_fn(actor: FiniteGroup, target: FiniteGroup, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let table = (0..actor.order()).map(|g| (0..target.order()).map(|a| f(g, a)).collect()).collect();
        Self::new(actor, target, table)
    }

    pub fn trivial(actor: FiniteGroup, target: FiniteGroup) -> Self {
        Self::from_fn(actor, target, |_, a| a).expect("trivial action")
    }

    /// `Z/2` acting on an abelian group by inversion.
    pub fn inversion(target: FiniteGroup) -> Result<Self> {
        if !target.is_abelian() {
            return Err(Error::NotAnAction("inversion is an automorphism only of abelian groups".into()));
        }
        let t = target.clone();
        Self::from_fn(FiniteGroup::cyclic(2), target, move |g, a| if g == 0 { a } else { t.inv(a) })
    }

    /// Restriction along a group homomorphism `phi: new_actor → actor`.
    pub fn pullback(&self, new_actor: FiniteGroup, phi: impl Fn(usize) -> usize) -> Result<Self> {
        Self::from_fn(new_actor, self.target.clone(), |d, a| self.apply(phi(d), a))
    }

    #[inline]
    pub fn apply(&self, g: usize, a: usize) -> usize {
        self.table[g][a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

fn group_space(name: &str, labels: Vec<String>) -> BasedSpace {
    BasedSpace::new(name, labels).expect("group labels are distinct")
}

/// The group Hopf algebra `k[G]`: `Δ(g) = g⊗g`, `ε(g) = 1`, `σ(g) = g⁻¹`.
pub fn group_algebra(g: &FiniteGroup, field: PrimeField) -> HopfData {
    let n = g.order();
    let space = vec![group_space(&format!("k[{}]", g.name), g.labels().to_vec())];
    let s2 = concat(&space, &space);
    let one = field.one();
    let mult = LinearMap::from_columns(field, s2.clone(), space.clone(), |j| vec![(g.mul(j / n, j % n), one)]);
    let unit = LinearMap::from_columns(field, vec![], space.clone(), |_| vec![(g.identity(), one)]);
    let comult = LinearMap::from_columns(field, space.clone(), s2, |j| vec![(j * n + j, one)]);
    let counit = LinearMap::from_columns(field, space.clone(), vec![], |_| vec![(0, one)]);
    let antipode = LinearMap::from_columns(field, space.clone(), space.clone(), |j| vec![(g.inv(j), one)]);
    let alg = AlgebraData::new(space.clone(), mult, unit).expect("shapes");
    let coalg = CoalgebraData::new(space, comult, counit).expect("shapes");
    HopfData::new(format!("k[{}]", g.name), alg, coalg, antipode).expect("shapes")
}

/// The function Hopf algebra `k^D` on the basis `δ_d`.
pub fn function_algebra(d: &FiniteGroup, field: PrimeField) -> HopfData {
    let n = d.order();
    let labels = d.labels().iter().map(|l| format!("δ{l}")).collect();
    let space = vec![group_space(&format!("k^{}", d.name), labels)];
    let s2 = concat(&space, &space);
    let one = field.one();
    let mult = LinearMap::from_columns(field, s2.clone(), space.clone(), |j| {
        if j / n == j % n {
            vec![(j / n, one)]
        } else {
            vec![]
        }
    });
    let unit = LinearMap::from_columns(field, vec![], space.clone(), |_| (0..n).map(|i| (i, one)).collect());
    let comult = LinearMap::from_columns(field, space.clone(), s2, |x| {
        (0..n).map(|u| (u * n + d.mul(d.inv(u), x), one)).collect()
    });
    let counit =
        LinearMap::from_columns(
            field,
            space.clone(),
            vec![],
            |x| {
                if x == d.identity() {
                    vec![(0, one)]
                } else {
                    vec![]
                }
            },
        );
    let antipode = LinearMap::from_columns(field, space.clone(), space.clone(), |x| vec![(d.inv(x), one)]);
    let alg = AlgebraData::new(space.clone(), mult, unit).expect("shapes");
    let coalg = CoalgebraData::new(space, comult, counit).expect("shapes");
    HopfData::new(format!("k^{}", d.name), alg, coalg, antipode).expect("shapes")
}

/// `H_{n²}`, its subalgebra `E_n`, and the braided `E` over `k[Z/n]`.
#[derive(Clone, Debug)]
pub struct TaftPair {
    pub n: usize,
    pub zeta: Scalar,
    /// The Taft algebra on `g^a h^b`, index `a·n + b`.
    pub taft: HopfData,
    /// `span{h^j}` with the coaction `Δ` restricted.
    pub e_n: ComoduleAlgebraData,
    /// `k[Z/n]` generated by `u`.
    pub group_algebra: HopfData,
    /// `k[y]/(y^n)` in the Yetter–Drinfeld category over `k[Z/n]`.
    pub braided: BraidedHopfData,
}

fn gh_label(a: usize, b: usize) -> String {
    let g = match a {
        0 => String::new(),
        1 => "g".into(),
        _ => format!("g{a}"),
    };
    let h = match b {
        0 => String::new(),
        1 => "h".into(),
        _ => format!("h{b}"),
    };
    if a == 0 && b == 0 {
        "1".into()
    } else {
        g + &h
    }
}

fn power_label(var: &str, i: usize) -> String {
    match i {
        0 => "1".into(),
        1 => var.into(),
        _ => format!("{var}{i}"),
    }
}

/// The Taft algebra `H_{n²}`: `g^n = 1`, `h^n = 0`, `hg = ζgh`,
/// `Δ(g) = g⊗g`, `Δ(h) = h⊗g + 1⊗h`, `σ(g) = g^{n−1}`, `σ(h) = −ζ^{−1}g^{n−1}h`.
pub fn taft_algebra(n: usize, field: PrimeField) -> Result<HopfData> {
    let zeta = primitive_root_of_unity(field, n as u64)?;
    Ok(taft_with_root(n, field, zeta))
}

fn taft_with_root(n: usize, field: PrimeField, zeta: Scalar) -> HopfData {
    let dim = n * n;
    let labels = (0..dim).map(|i| gh_label(i / n, i % n)).collect();
    let space = vec![BasedSpace::new(format!("H{dim}"), labels).expect("labels")];
    let s2 = concat(&space, &space);
    let f = field;
    let mult = LinearMap::from_columns(f, s2.clone(), space.clone(), |j| {
        let (x, y) = (j / dim, j % dim);
        let (a, b, c, d) = (x / n, x % n, y / n, y % n);
        if b + d >= n {
            return vec![];
        }
        vec![(((a + c) % n) * n + b + d, f.pow(zeta, (b * c) as u64))]
    });
    let unit = LinearMap::from_columns(f, vec![], space.clone(), |_| vec![(0, f.one())]);
    let algebra = AlgebraData::new(space.clone(), mult, unit).expect("shapes");
    let hh = algebra.tensor(&algebra);

    let basis = |i: usize| {
        let mut v = vec![Scalar(0); dim];
        v[i] = f.one();
        v
    };
    let pow = |alg: &AlgebraData, x: &[Scalar], k: usize| {
        let mut acc = alg.one_coords();
        for _ in 0..k {
            acc = alg.mul_coords(&acc, x);
        }
        acc
    };
    let (g, h) = (basis(n), basis(1));
    let tens = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![Scalar(0); dim * dim];
        for (i, &a) in x.iter().enumerate() {
            for (j, &b) in y.iter().enumerate() {
                out[i * dim + j] = f.mul(a, b);
            }
        }
        out
    };
    let one = basis(0);
    let dg = tens(&g, &g);
    let dh: Vec<Scalar> = tens(&h, &g).iter().zip(tens(&one, &h)).map(|(&a, b)| f.add(a, b)).collect();
    let comult = LinearMap::from_columns(f, space.clone(), s2, |j| {
        let v = hh.mul_coords(&pow(&hh, &dg, j / n), &pow(&hh, &dh, j % n));
        v.into_iter().enumerate().collect()
    });
    let counit =
        LinearMap::from_columns(f, space.clone(), vec![], |j| if j % n == 0 { vec![(0, f.one())] } else { vec![] });
    let sg = pow(&algebra, &g, n - 1);
    let coeff = f.neg(f.inv(zeta).expect("zeta is nonzero"));
    let sh: Vec<Scalar> = algebra.mul_coords(&sg, &h).into_iter().map(|c| f.mul(coeff, c)).collect();
    let antipode = LinearMap::from_columns(f, space.clone(), space.clone(), |j| {
        // σ is an anti-homomorphism: σ(g^a h^b) = σ(h)^b σ(g)^a.
        let v = algebra.mul_coords(&pow(&algebra, &sh, j % n), &pow(&algebra, &sg, j / n));
        v.into_iter().enumerate().collect()
    });
    let coalgebra = CoalgebraData::new(space, comult, counit).expect("shapes");
    HopfData::new(format!("H{dim}"), algebra, coalgebra, antipode).expect("shapes")
}

/// Builds the Taft algebra, `E_n ⊂ H_{n²}`, and the braided factor `E`.
pub fn taft_pair(n: usize, field: PrimeField) -> Result<TaftPair> {
    if n < 2 {
        return Err(Error::Parse("Taft algebras need n ≥ 2".into()));
    }
    let zeta = primitive_root_of_unity(field, n as u64)?;
    let f = field;
    let taft = taft_with_root(n, field, zeta);

    // E_n = span{h^j}; h^j has index j in the Taft basis.
    let en_space = vec![BasedSpace::new("E_n", (0..n).map(|i| power_label("h", i)).collect())?];
    let en_alg = truncated_polynomial(f, &en_space, n);
    let dim = n * n;
    let en_coaction = LinearMap::from_columns(f, en_space.clone(), concat(&en_space, taft.shape()), |j| {
        taft.comult()
            .column(j)
            .iter()
            .map(|&(k, v)| {
                let (left, right) = (k as usize / dim, k as usize % dim);
                debug_assert!(left < n, "Δ(h^j) has its left leg in E_n");
                (left * dim + right, v)
            })
            .collect()
    });
    let e_n = ComoduleAlgebraData::over_h(format!("E{n}"), en_alg, en_coaction);

    let group = FiniteGroup::cyclic(n);
    let kg = group_algebra(&group, field);
    let braided = braided_truncated_polynomial(&kg, n, zeta)?;
    Ok(TaftPair { n, zeta, taft, e_n, group_algebra: kg, braided })
}

/// `k[x]/(x^n)` on the given one-factor shape.
fn truncated_polynomial(f: PrimeField, space: &[BasedSpace], n: usize) -> AlgebraData {
    let s2 = concat(space, space);
    let mult = LinearMap::from_columns(f, s2, space.to_vec(), |j| {
        let (i, k) = (j / n, j % n);
        if i + k < n {
            vec![(i + k, f.one())]
        } else {
            vec![]
        }
    });
    let unit = LinearMap::from_columns(f, vec![], space.to_vec(), |_| vec![(0, f.one())]);
    AlgebraData::new(space.to_vec(), mult, unit).expect("shapes")
}

/// `E = k[y]/(y^n)` over `k[Z/n]`: `y^i·u^j = ζ^{ij}y^i`, `ϱ(y^i) = y^i⊗u^i`,
/// `Δ(y^i) = Σ (i choose s)_ζ y^s⊗y^{i−s}`, `σ(y^i) = (−1)^i ζ^{i(i−1)/2} y^i`.
pub fn braided_truncated_polynomial(kg: &HopfData, n: usize, zeta: Scalar) -> Result<BraidedHopfData> {
    let f = kg.field();
    if kg.dim() != n {
        return Err(Error::ShapeMismatch("group algebra must have dimension n".into()));
    }
    let space = vec![BasedSpace::new("E", (0..n).map(|i| power_label("y", i)).collect())?];
    let s2 = concat(&space, &space);
    let alg = truncated_polynomial(f, &space, n);
    let action = LinearMap::from_columns(f, concat(&space, kg.shape()), space.clone(), |j| {
        let (i, k) = (j / n, j % n);
        vec![(i, f.pow(zeta, (i * k) as u64))]
    });
    let coaction =
        LinearMap::from_columns(f, space.clone(), concat(&space, kg.shape()), |i| vec![(i * n + i, f.one())]);
    let comult = LinearMap::from_columns(f, space.clone(), s2, |i| {
        (0..=i).map(|s| (s * n + (i - s), zeta_binomial(f, i, s, zeta))).collect()
    });
    let counit =
        LinearMap::from_columns(f, space.clone(), vec![], |i| if i == 0 { vec![(0, f.one())] } else { vec![] });
    let antipode = LinearMap::from_columns(f, space.clone(), space.clone(), |i| {
        let sign = if i % 2 == 0 { f.one() } else { f.neg(f.one()) };
        // i(i−1)/2 is an exact integer division.
        let e = (i * i.saturating_sub(1) / 2) as u64;
        vec![(i, f.mul(sign, f.pow(zeta, e)))]
    });
    Ok(BraidedHopfData {
        name: "E".into(),
        h: kg.clone(),
        yd: YdObject {
            module: HModule { shape: space.clone(), action },
            comodule: HComodule { shape: space.clone(), coaction },
        },
        mult: alg.mult().clone(),
        unit: alg.unit().clone(),
        comult,
        counit,
        antipode,
    })
}

/// Compares every structure map of `k[Z/n]⋆E` with the Taft algebra under
/// `u^a⋆y^b ↦ g^a h^b` (the identity on indices), and `E` with `E_n`.
pub fn check_taft_isomorphism(pair: &TaftPair) -> CheckReport {
    let mut r = CheckReport::new(format!("k[Z/{}]⋆E ≅ H{}", pair.n, pair.n * pair.n));
    let prod = match radford_product_unchecked(&pair.braided) {
        Ok(p) => p,
        Err(e) => {
            r.fail("Radford product", e.to_string());
            return r;
        }
    };
    let t = &pair.taft;
    let maps = [
        ("multiplication", prod.mult(), t.mult()),
        ("unit", prod.unit(), t.unit()),
        ("comultiplication", prod.comult(), t.comult()),
        ("counit", prod.counit(), t.counit()),
        ("antipode", prod.antipode(), t.antipode()),
    ];
    for (name, a, b) in maps {
        r.check(format!("{name} matches"), a.same_coefficients(b), || {
            format!("{name} differs at basis {:?}", a.first_difference(b))
        });
    }
    let e_alg = pair.braided.algebra();
    r.check(
        "E ≅ E_n as algebras",
        e_alg.map(|a| a.mult().same_coefficients(pair.e_n.algebra.mult())).unwrap_or(false),
        || "multiplication tables differ".into(),
    );
    r
}

/// `k^A` as a braided Hopf algebra over `k^G`, with the semidirect product
/// it models.
#[derive(Clone, Debug)]
pub struct FunctionAlgebraPair {
    pub action: GroupAction,
    pub kg: HopfData,
    pub braided: BraidedHopfData,
    pub semidirect: FiniteGroup,
    pub k_semidirect: HopfData,
}

/// `k^A` over `k^G`: `δ_a·δ_g = ∂_{g,1}δ_a`, `ϱ(δ_a) = Σ_h δ_{^h a}⊗δ_h`.
pub fn ka_in_yd(act: &GroupAction, field: PrimeField) -> Result<FunctionAlgebraPair> {
    let (g, a) = (&act.actor, &act.target);
    let f = field;
    let kg = function_algebra(g, f);
    let ka = function_algebra(a, f);
    let es = ka.shape().to_vec();
    let ng = g.order();
    let action = ka.id().tensor(kg.counit());
    let coaction = LinearMap::from_columns(f, es.clone(), concat(&es, kg.shape()), |x| {
        (0..ng).map(|h| (act.apply(h, x) * ng + h, f.one())).collect()
    });
    let braided = BraidedHopfData {
        name: ka.name.clone(),
        h: kg.clone(),
        yd: YdObject { module: HModule { shape: es.clone(), action }, comodule: HComodule { shape: es, coaction } },
        mult: ka.mult().clone(),
        unit: ka.unit().clone(),
        comult: ka.comult().clone(),
        counit: ka.counit().clone(),
        antipode: ka.antipode().clone(),
    };
    let semidirect = FiniteGroup::semidirect(act)?;
    let k_semidirect = function_algebra(&semidirect, f);
    Ok(FunctionAlgebraPair { action: act.clone(), kg, braided, semidirect, k_semidirect })
}

/// Compares `k^G⋆k^A` with `k^{G⋉A}` under `δ_g⋆δ_a ↦ δ_{(g,a)}`.
pub fn check_function_isomorphism(pair: &FunctionAlgebraPair) -> CheckReport {
    let mut r = CheckReport::new(format!("{}⋆{} ≅ {}", pair.kg.name, pair.braided.name, pair.k_semidirect.name));
    let prod = match radford_product_unchecked(&pair.braided) {
        Ok(p) => p,
        Err(e) => {
            r.fail("Radford product", e.to_string());
            return r;
        }
    };
    let t = &pair.k_semidirect;
    let maps = [
        ("multiplication", prod.mult(), t.mult()),
        ("unit", prod.unit(), t.unit()),
        ("comultiplication", prod.comult(), t.comult()),
        ("counit", prod.counit(), t.counit()),
        ("antipode", prod.antipode(), t.antipode()),
    ];
    for (name, a, b) in maps {
        r.check(format!("{name} matches"), a.same_coefficients(b), || {
            format!("{name} differs at basis {:?}", a.first_difference(b))
        });
    }
    r
}

/// A group acting on an algebra by algebra automorphisms, one map per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraAction {
    pub group: FiniteGroup,
    pub algebra: AlgebraData,
    pub maps: Vec<LinearMap>,
}

impl AlgebraAction {
    pub fn new(group: FiniteGroup, algebra: AlgebraData, maps: Vec<LinearMap>) -> Result<Self> {
        let s = algebra.shape().to_vec();
        if maps.len() != group.order() || maps.iter().any(|m| m.dom() != s || m.cod() != s) {
            return Err(Error::NotAnAction("need one endomorphism of the algebra per group element".into()));
        }
        let id = LinearMap::identity(algebra.field(), s);
        if maps[group.identity()] != id {
            return Err(Error::NotAnAction("identity does not act trivially".into()));
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                if maps[group.mul(a, b)] != maps[a].compose(&maps[b])? {
                    return Err(Error::NotAnAction("not compatible with the group law".into()));
                }
            }
            let m = &maps[a];
            if m.compose(algebra.mult())? != algebra.mult().compose(&m.tensor(m))?
                || m.compose(algebra.unit())? != *algebra.unit()
            {
                return Err(Error::NotAnAction(format!("{} is not an algebra map", group.label(a))));
            }
        }
        Ok(AlgebraAction { group, algebra, maps })
    }

    /// `D` acting on `k^C` through an action on `C`: `^d δ_c = δ_{^d c}`.
    pub fn on_function_algebra(act: &GroupAction, field: PrimeField) -> Result<Self> {
        let kc = function_algebra(&act.target, field);
        let s = kc.shape().to_vec();
        let maps = (0..act.actor.order())
            .map(|d| LinearMap::from_columns(field, s.clone(), s.clone(), |c| vec![(act.apply(d, c), field.one())]))
            .collect();
        Self::new(act.actor.clone(), kc.algebra().clone(), maps)
    }
}

/// `ϱ(x) = Σ_d {}^d x ⊗ δ_d`, a `k^D`-comodule algebra structure.
pub fn comodule_from_group_action(act: &AlgebraAction, name: &str) -> Result<(HopfData, ComoduleAlgebraData)> {
    let field = act.algebra.field();
    let kd = function_algebra(&act.group, field);
    let fs = act.algebra.shape().to_vec();
    let nd = act.group.order();
    let coaction = LinearMap::from_columns(field, fs.clone(), concat(&fs, kd.shape()), |x| {
        let mut col = Vec::new();
        for (d, m) in act.maps.iter().enumerate() {
            for &(y, v) in m.column(x) {
                col.push((y as usize * nd + d, v));
            }
        }
        col
    });
    let fa = ComoduleAlgebraData {
        name: name.into(),
        algebra: act.algebra.clone(),
        h_coaction: Some(coaction),
        e_coaction: None,
        he_coaction: None,
        kind: ComoduleKind::Plain,
    };
    Ok((kd, fa))
}

/// Recovers `^d x = (id⊗ev_d)ϱ(x)` from a `k^D`-coaction.
pub fn action_from_coaction(group: &FiniteGroup, algebra: &AlgebraData, coaction: &LinearMap) -> Result<AlgebraAction> {
    let field = algebra.field();
    let nd = group.order();
    let s = algebra.shape().to_vec();
    if coaction.dom() != s || coaction.cod_dim() != algebra.dim() * nd {
        return Err(Error::ShapeMismatch("coaction does not land in F⊗k^D".into()));
    }
    let maps = (0..nd)
        .map(|d| {
            LinearMap::from_columns(field, s.clone(), s.clone(), |x| {
                coaction
                    .column(x)
                    .iter()
                    .filter(|&&(k, _)| k as usize % nd == d)
                    .map(|&(k, v)| (k as usize / nd, v))
                    .collect()
            })
        })
        .collect();
    AlgebraAction::new(group.clone(), algebra.clone(), maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf_core::{check_hopf, grouplikes};
    use crate::scalars::make_prime_field;

    #[test]
    fn groups_validate() {
        assert_eq!(FiniteGroup::s3().order(), 6);
        assert!(!FiniteGroup::s3().is_abelian());
        assert!(FiniteGroup::from_table("bad", vec!["a".into(), "b".into()], vec![vec![0, 0], vec![0, 1]]).is_err());
        let z3 = FiniteGroup::cyclic(3);
        assert_eq!(z3.inv(1), 2);
    }

    #[test]
    fn semidirect_inversion_is_nonabelian_of_order_six() {
        let act = GroupAction::inversion(FiniteGroup::cyclic(3)).unwrap();
        let d = FiniteGroup::semidirect(&act).unwrap();
        assert_eq!(d.order(), 6);
        assert!(!d.is_abelian());
        let direct =
            FiniteGroup::semidirect(&GroupAction::trivial(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3))).unwrap();
        assert!(direct.is_abelian());
    }

    #[test]
    fn bad_actions_are_rejected() {
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        // u acts by a non-automorphism (a ↦ a+1 is not a homomorphism).
        assert!(matches!(
            GroupAction::from_fn(z2, z3.clone(), |g, a| if g == 0 { a } else { (a + 1) % 3 }),
            Err(Error::NotAnAction(_))
        ));
        assert!(GroupAction::inversion(FiniteGroup::s3()).is_err());
    }

    #[test]
    fn group_algebra_examples() {
        let f5 = make_prime_field(5).unwrap();
        let h = group_algebra(&FiniteGroup::cyclic(2), f5);
        assert!(check_hopf(&h, true).passed());
        assert_eq!(grouplikes(&h, 1000).unwrap().len(), 2);
        let f7 = make_prime_field(7).unwrap();
        let h3 = group_algebra(&FiniteGroup::cyclic(3), f7);
        assert_eq!(grouplikes(&h3, 1000).unwrap().len(), 3);
        assert_eq!(h3.antipode().compose(h3.antipode()).unwrap(), h3.id());
        let k = group_algebra(&FiniteGroup::trivial(), f7);
        assert_eq!(k.dim(), 1);
        assert!(check_hopf(&k, true).passed());
    }

    #[test]
    fn function_algebra_examples() {
        let f5 = make_prime_field(5).unwrap();
        let h = function_algebra(&FiniteGroup::s3(), f5);
        assert!(check_hopf(&h, true).passed(), "{}", check_hopf(&h, true).summary());
        let a = h.algebra();
        let one = a.one_coords();
        assert!(one.iter().all(|&c| c == f5.one()));
        for d in 0..6 {
            let mut delta = vec![Scalar(0); 6];
            delta[d] = f5.one();
            assert_eq!(a.mul_coords(&delta, &delta), delta);
        }
    }

    #[test]
    fn taft_antipode_of_h_for_n2() {
        let f5 = make_prime_field(5).unwrap();
        let pair = taft_pair(2, f5).unwrap();
        // σ(h) = −ζ⁻¹ g h = g h when ζ = 4 in F_5; g h has index 3.
        assert_eq!(pair.taft.antipode().column(1), &[(3, Scalar(1))]);
        assert!(check_hopf(&pair.taft, true).passed());
    }

    #[test]
    fn taft_n3_passes() {
        let f7 = make_prime_field(7).unwrap();
        let pair = taft_pair(3, f7).unwrap();
        let r = check_hopf(&pair.taft, true);
        assert!(r.passed(), "{}", r.summary());
        // g^a are grouplike; the full search is pinned for n = 2 below.
        for a in 0..3 {
            let dg = pair.taft.comult().column(3 * a);
            assert_eq!(dg, &[((3 * a * 9 + 3 * a) as u32, Scalar(1))]);
        }
    }

    #[test]
    fn taft_n2_grouplikes() {
        let f5 = make_prime_field(5).unwrap();
        let pair = taft_pair(2, f5).unwrap();
        assert_eq!(grouplikes(&pair.taft, 1000).unwrap().len(), 2);
    }

    #[test]
    fn taft_needs_root() {
        let f5 = make_prime_field(5).unwrap();
        assert!(matches!(taft_pair(3, f5), Err(Error::NoSuchRoot { .. })));
    }

    #[test]
    fn action_coaction_roundtrip() {
        let f3 = make_prime_field(3).unwrap();
        let act = GroupAction::inversion(FiniteGroup::cyclic(3)).unwrap();
        let alg_act = AlgebraAction::on_function_algebra(&act, f3).unwrap();
        let (_, fa) = comodule_from_group_action(&alg_act, "k^C").unwrap();
        let back = action_from_coaction(&alg_act.group, &alg_act.algebra, fa.h_coaction.as_ref().unwrap()).unwrap();
        assert_eq!(back, alg_act);
    }

    #[test]
    fn taft_is_a_radford_product() {
        use crate::radford::{check_braided_hopf, radford_product};
        for (n, p) in [(2, 5), (3, 7), (2, 3)] {
            let f = make_prime_field(p).unwrap();
            let pair = taft_pair(n, f).unwrap();
            let r = check_braided_hopf(&pair.braided);
            assert!(r.passed(), "{}", r.summary());
            assert!(radford_product(&pair.group_algebra, &pair.braided).is_ok());
            let iso = check_taft_isomorphism(&pair);
            assert!(iso.passed(), "{}", iso.summary());
        }
    }

    #[test]
    fn function_algebra_pairs_model_semidirect_products() {
        use crate::radford::check_braided_hopf;
        let f5 = make_prime_field(5).unwrap();
        let acts = [
            GroupAction::inversion(FiniteGroup::cyclic(3)).unwrap(),
            GroupAction::trivial(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)),
        ];
        for act in acts {
            let pair = ka_in_yd(&act, f5).unwrap();
            let r = check_braided_hopf(&pair.braided);
            assert!(r.passed(), "{}", r.summary());
            let iso = check_function_isomorphism(&pair);
            assert!(iso.passed(), "{}", iso.summary());
        }
    }
}
