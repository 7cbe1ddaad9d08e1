//! Exact arithmetic in prime fields.
//!
//! A [`PrimeField`] is a small `Copy` handle; [`Scalar`] values are plain
//! canonical representatives in `[0, p)` and carry no reference to their
//! field, so every operation goes through the handle.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted. Products of two representatives must fit in a `u64`.
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

/// The prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

/// An element of some `F_p`, stored as its representative in `[0, p)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Scalar(pub u32);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Builds `F_p`, rejecting composite (or out of range) moduli.
pub fn make_prime_field(p: u64) -> Result<PrimeField> {
    if p > MAX_MODULUS || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(PrimeField { p: p as u32 })
}

impl PrimeField {
    pub fn p(self) -> u32 {
        self.p
    }

    pub fn zero(self) -> Scalar {
        Scalar(0)
    }

    pub fn one(self) -> Scalar {
        Scalar(1 % self.p)
    }

    /// Reduces an arbitrary integer into the field.
    pub fn from_i64(self, v: i64) -> Scalar {
        Scalar(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_u64(self, v: u64) -> Scalar {
        Scalar((v % self.p as u64) as u32)
    }

    /// True if `s` is a canonical representative for this field.
    pub fn contains(self, s: Scalar) -> bool {
        s.0 < self.p
    }

    #[inline]
    pub fn add(self, a: Scalar, b: Scalar) -> Scalar {
        let s = a.0 as u64 + b.0 as u64;
        let p = self.p as u64;
        Scalar(if s >= p { s - p } else { s } as u32)
    }

    #[inline]
    pub fn sub(self, a: Scalar, b: Scalar) -> Scalar {
        if a.0 >= b.0 {
            Scalar(a.0 - b.0)
        } else {
            Scalar((a.0 as u64 + self.p as u64 - b.0 as u64) as u32)
        }
    }

    #[inline]
    pub fn neg(self, a: Scalar) -> Scalar {
        if a.0 == 0 {
            a
        } else {
            Scalar(self.p - a.0)
        }
    }

    #[inline]
    pub fn mul(self, a: Scalar, b: Scalar) -> Scalar {
        Scalar(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    /// `a + b*c`, the inner step of every matrix kernel.
    #[inline]
    pub fn mul_add(self, a: Scalar, b: Scalar, c: Scalar) -> Scalar {
        Scalar(((a.0 as u64 + b.0 as u64 * c.0 as u64) % self.p as u64) as u32)
    }

    pub fn pow(self, a: Scalar, mut e: u64) -> Scalar {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inv(self, a: Scalar) -> Result<Scalar> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }

    pub fn div(self, a: Scalar, b: Scalar) -> Result<Scalar> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(self, a: Scalar) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != self.one() {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// All elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = Scalar> {
        (0..self.p).map(Scalar)
    }
}

/// The smallest representative of exact multiplicative order `n`.
pub fn primitive_root_of_unity(field: PrimeField, n: u64) -> Result<Scalar> {
    let p = field.p() as u64;
    if n < 1 || !(p - 1).is_multiple_of(n) {
        return Err(Error::NoSuchRoot { n, p });
    }
    (1..field.p()).map(Scalar).find(|&z| field.order(z) == Some(n)).ok_or(Error::NoSuchRoot { n, p })
}

/// Gaussian binomial `(i choose s)_zeta`.
///
/// Computed with the recursion `(i,s) = (i-1,s-1) + zeta^s (i-1,s)`. The
/// mirrored recursion with weight `zeta^(i-s)` yields the same polynomial;
/// the tests check both agree.
pub fn zeta_binomial(field: PrimeField, i: usize, s: usize, zeta: Scalar) -> Scalar {
    assert!(s <= i, "zeta_binomial needs s <= i");
    // Row by row, row[s] = (r choose s).
    let mut row = vec![field.one()];
    for r in 1..=i {
        let mut next = vec![field.zero(); r + 1];
        next[0] = field.one();
        next[r] = field.one();
        for t in 1..r {
            let w = field.pow(zeta, t as u64);
            next[t] = field.mul_add(row[t - 1], w, row[t]);
        }
        row = next;
    }
    row[s]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64) -> PrimeField {
        make_prime_field(p).unwrap()
    }

    /// The other Pascal rule, used only as an oracle.
    fn zeta_binomial_mirrored(field: PrimeField, i: usize, s: usize, zeta: Scalar) -> Scalar {
        if s == 0 || s == i {
            return field.one();
        }
        let w = field.pow(zeta, (i - s) as u64);
        field.add(
            field.mul(w, zeta_binomial_mirrored(field, i - 1, s - 1, zeta)),
            zeta_binomial_mirrored(field, i - 1, s, zeta),
        )
    }

    #[test]
    fn field_construction() {
        assert_eq!(f(5).p(), 5);
        assert_eq!(f(7).p(), 7);
        assert!(matches!(make_prime_field(4), Err(Error::NotPrime(4))));
        assert!(matches!(make_prime_field(1), Err(Error::NotPrime(1))));
        assert!(make_prime_field(2).is_ok());
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(primitive_root_of_unity(f(5), 2).unwrap(), Scalar(4));
        assert_eq!(primitive_root_of_unity(f(7), 3).unwrap(), Scalar(2));
        assert!(matches!(primitive_root_of_unity(f(5), 3), Err(Error::NoSuchRoot { n: 3, p: 5 })));
        for (p, n) in [(5, 4), (7, 6), (13, 4), (13, 12)] {
            let z = primitive_root_of_unity(f(p), n).unwrap();
            assert_eq!(f(p).order(z), Some(n));
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(zeta_binomial(f(5), 1, 0, Scalar(3)), Scalar(1));
        assert_eq!(zeta_binomial(f(5), 2, 1, Scalar(4)), Scalar(0));
        assert_eq!(zeta_binomial(f(7), 2, 1, Scalar(2)), Scalar(3));
    }

    #[test]
    fn binomial_conventions_agree() {
        for p in [5u64, 7, 11, 13] {
            let field = f(p);
            for z in 1..p as u32 {
                for i in 0..=12 {
                    for s in 0..=i {
                        assert_eq!(
                            zeta_binomial(field, i, s, Scalar(z)),
                            zeta_binomial_mirrored(field, i, s, Scalar(z)),
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn binomial_pascal_identity() {
        let field = f(13);
        for z in 1..13 {
            let z = Scalar(z);
            for i in 1..=12 {
                for s in 1..i {
                    let lhs = zeta_binomial(field, i, s, z);
                    let rhs = field.add(
                        zeta_binomial(field, i - 1, s - 1, z),
                        field.mul(field.pow(z, s as u64), zeta_binomial(field, i - 1, s, z)),
                    );
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn binomial_vanishes_at_root_order() {
        // (n choose s)_zeta = 0 for 0 < s < n when zeta has order n.
        let field = f(13);
        for n in [2u64, 3, 4, 6] {
            let z = primitive_root_of_unity(field, n).unwrap();
            for s in 1..n as usize {
                assert_eq!(zeta_binomial(field, n as usize, s, z), Scalar(0));
            }
        }
    }

    #[test]
    fn inverse_of_zero_is_error() {
        assert!(matches!(f(7).inv(Scalar(0)), Err(Error::DivisionByZero)));
    }

    fn prime() -> impl Strategy<Value = u64> {
        prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 101, 65_521, 2_147_483_647])
    }

    proptest! {
        #[test]
        fn field_axioms(p in prime(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
            let k = f(p);
            let (a, b, c) = (k.from_u64(a), k.from_u64(b), k.from_u64(c));
            prop_assert_eq!(k.add(a, b), k.add(b, a));
            prop_assert_eq!(k.mul(a, b), k.mul(b, a));
            prop_assert_eq!(k.add(k.add(a, b), c), k.add(a, k.add(b, c)));
            prop_assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
            prop_assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
            prop_assert_eq!(k.add(a, k.neg(a)), k.zero());
            prop_assert_eq!(k.sub(a, b), k.add(a, k.neg(b)));
            prop_assert_eq!(k.mul(a, k.one()), a);
            prop_assert_eq!(k.mul_add(a, b, c), k.add(a, k.mul(b, c)));
            if !a.is_zero() {
                prop_assert_eq!(k.mul(k.inv(a).unwrap(), a), k.one());
            }
        }
    }
}
