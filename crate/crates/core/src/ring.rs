//! Base rings: the integers and the residue rings `Z/m`.
//!
//! Two layers live here. [`Ring`] is the statically typed interface used by
//! every arithmetic engine in the crate ([`Integers`] with big-integer
//! elements, [`ZMod`] with machine-word residues). [`RingSpec`] and
//! [`RingElem`] are the dynamic counterparts used at the API boundary, where
//! the ring is only known at run time (CLI arguments, reports).

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for `Z/m`; products of residues must fit in a `u64`.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

/// Commutative base ring with exact arithmetic and principal annihilators.
pub trait Ring: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn spec(&self) -> RingSpec;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// `acc += a * b`, the inner loop of every dense product.
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, &self.mul(a, b));
    }

    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    /// Canonical integer representative (the residue in `[0, m)` for `Z/m`).
    fn lift(&self, a: &Self::Elem) -> BigInt;

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(v))
    }

    /// Generator `g` of the annihilator ideal `Ann(a) = (g)`.
    fn ann_generator(&self, a: &Self::Elem) -> Self::Elem;

    /// Whether `Ann(a) ∩ Ann(b) = (0)`.
    fn ann_intersection_trivial(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    /// All elements, in increasing canonical order, when the ring is finite.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    fn is_field(&self) -> bool;
}

/// The ring of integers, with arbitrary-precision elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn spec(&self) -> RingSpec {
        RingSpec::Integers
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn add_mul_assign(&self, acc: &mut BigInt, a: &BigInt, b: &BigInt) {
        *acc += a * b;
    }

    fn from_bigint(&self, v: &BigInt) -> BigInt {
        v.clone()
    }

    fn lift(&self, a: &BigInt) -> BigInt {
        a.clone()
    }

    fn ann_generator(&self, a: &BigInt) -> BigInt {
        if a.is_zero() {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    }

    fn ann_intersection_trivial(&self, a: &BigInt, b: &BigInt) -> bool {
        !a.is_zero() || !b.is_zero()
    }

    fn elements(&self) -> Option<Vec<BigInt>> {
        None
    }

    fn is_field(&self) -> bool {
        false
    }
}

/// The residue ring `Z/m`, `2 <= m <= MAX_MODULUS`. Elements are residues in `[0, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZMod {
    m: u64,
}

impl ZMod {
    pub fn new(m: u64) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&m) {
            return Err(Error::InvalidModulus(m.to_string()));
        }
        Ok(ZMod { m })
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.m as i64) as u64
    }

    /// A unit `u` with `u * a ≡ gcd(a, m) (mod m)`.
    pub fn normalizing_unit(&self, a: u64) -> u64 {
        let m = self.m;
        if a == 0 {
            return 1;
        }
        let g = a.gcd(&m);
        let m_red = m / g;
        if m_red == 1 {
            return 1;
        }
        // a/g is invertible mod m/g; lift its inverse to a unit mod m.
        let base = mod_inverse(a / g, m_red).expect("a/g is coprime to m/g");
        let mut u = base;
        while u.gcd(&m) != 1 {
            u += m_red;
        }
        u % m
    }
}

impl Ring for ZMod {
    type Elem = u64;

    fn spec(&self) -> RingSpec {
        RingSpec::IntegersMod(self.m)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.m {
            s - self.m
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.m - b
        }
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.m - a
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.m
    }

    #[inline]
    fn add_mul_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = (*acc + a * b % self.m) % self.m;
    }

    fn from_bigint(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.m))
            .to_u64()
            .expect("residue fits in u64")
    }

    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i64(v)
    }

    fn lift(&self, a: &u64) -> BigInt {
        BigInt::from(*a)
    }

    fn ann_generator(&self, a: &u64) -> u64 {
        (self.m / a.gcd(&self.m)) % self.m
    }

    fn ann_intersection_trivial(&self, a: &u64, b: &u64) -> bool {
        let da = self.m / a.gcd(&self.m);
        let db = self.m / b.gcd(&self.m);
        da.lcm(&db) % self.m == 0
    }

    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.m).collect())
    }

    fn is_field(&self) -> bool {
        is_prime(self.m)
    }
}

fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Extended gcd on signed integers: returns `(g, s, t)` with `s*a + t*b = g >= 0`.
pub fn xgcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (g, s, _) = xgcd(a as i64, m as i64);
    (g == 1).then(|| s.rem_euclid(m as i64) as u64)
}

/// Run-time description of a base ring, as written on the command line: `Z` or `Z/<m>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingSpec {
    Integers,
    IntegersMod(u64),
}

impl RingSpec {
    pub fn modulus(&self) -> Option<u64> {
        match self {
            RingSpec::Integers => None,
            RingSpec::IntegersMod(m) => Some(*m),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, RingSpec::IntegersMod(_))
    }

    /// Canonical element of this ring from an integer.
    pub fn elem(&self, v: impl Into<BigInt>) -> RingElem {
        let value = v.into();
        let value = match self {
            RingSpec::Integers => value,
            RingSpec::IntegersMod(m) => value.mod_floor(&BigInt::from(*m)),
        };
        RingElem { ring: *self, value }
    }

    pub fn zero(&self) -> RingElem {
        self.elem(0)
    }

    pub fn one(&self) -> RingElem {
        self.elem(1)
    }

    pub fn ann_generator(&self, a: &RingElem) -> Result<RingElem> {
        self.check(a)?;
        Ok(match self {
            RingSpec::Integers => self.elem(Integers.ann_generator(&a.value)),
            RingSpec::IntegersMod(m) => {
                let r = ZMod::new(*m)?;
                self.elem(r.ann_generator(&r.from_bigint(&a.value)))
            }
        })
    }

    pub fn ann_intersection_trivial(&self, a: &RingElem, b: &RingElem) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(match self {
            RingSpec::Integers => Integers.ann_intersection_trivial(&a.value, &b.value),
            RingSpec::IntegersMod(m) => {
                let r = ZMod::new(*m)?;
                r.ann_intersection_trivial(&r.from_bigint(&a.value), &r.from_bigint(&b.value))
            }
        })
    }

    /// Every element of a finite ring, in canonical order.
    pub fn elements(&self) -> Option<Vec<RingElem>> {
        self.modulus().map(|m| (0..m).map(|v| self.elem(v)).collect())
    }

    fn check(&self, a: &RingElem) -> Result<()> {
        if a.ring != *self {
            return Err(Error::RingMismatch(*self, a.ring));
        }
        Ok(())
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::IntegersMod(m) => write!(f, "Z/{m}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Z" {
            return Ok(RingSpec::Integers);
        }
        let m = s
            .strip_prefix("Z/")
            .ok_or_else(|| Error::Parse(format!("unknown ring `{s}` (expected `Z` or `Z/<m>`)")))?;
        let m: u64 = m
            .parse()
            .map_err(|_| Error::InvalidModulus(m.to_string()))?;
        ZMod::new(m)?;
        Ok(RingSpec::IntegersMod(m))
    }
}

/// An element of a run-time ring, stored canonically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElem {
    ring: RingSpec,
    value: BigInt,
}

impl RingElem {
    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, other: &RingElem) -> Result<RingElem> {
        self.ring.check(other)?;
        Ok(self.ring.elem(&self.value + &other.value))
    }

    pub fn mul(&self, other: &RingElem) -> Result<RingElem> {
        self.ring.check(other)?;
        Ok(self.ring.elem(&self.value * &other.value))
    }

    pub fn neg(&self) -> RingElem {
        self.ring.elem(-&self.value)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Symmetric representative of a lifted value, used for display of `Z/m` values.
pub fn signed_lift(ring: RingSpec, v: &BigInt) -> BigInt {
    match ring {
        RingSpec::Integers => v.clone(),
        RingSpec::IntegersMod(m) => {
            let m = BigInt::from(m);
            let r = v.mod_floor(&m);
            if (&r * 2u8) > m {
                r - m
            } else {
                r
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z8() -> RingSpec {
        RingSpec::IntegersMod(8)
    }

    #[test]
    fn dynamic_arithmetic() {
        let r = z8();
        assert_eq!(r.elem(5).add(&r.elem(6)).unwrap(), r.elem(3));
        assert_eq!(r.elem(3).neg(), r.elem(5));
        let z = RingSpec::Integers;
        assert_eq!(z.elem(-3).mul(&z.elem(4)).unwrap(), z.elem(-12));
        assert!(matches!(
            r.elem(1).add(&z.elem(1)),
            Err(Error::RingMismatch(..))
        ));
    }

    #[test]
    fn annihilator_generators() {
        let r = z8();
        assert_eq!(r.ann_generator(&r.elem(2)).unwrap(), r.elem(4));
        assert_eq!(r.ann_generator(&r.elem(3)).unwrap(), r.elem(0));
        assert_eq!(r.ann_generator(&r.elem(0)).unwrap(), r.elem(1));
        let z = RingSpec::Integers;
        assert_eq!(z.ann_generator(&z.elem(0)).unwrap(), z.elem(1));
        assert_eq!(z.ann_generator(&z.elem(-7)).unwrap(), z.elem(0));
    }

    #[test]
    fn annihilator_intersections() {
        let z = RingSpec::Integers;
        for psi in [-3, 0, 5] {
            assert!(z.ann_intersection_trivial(&z.elem(psi), &z.elem(2)).unwrap());
        }
        assert!(!z.ann_intersection_trivial(&z.elem(0), &z.elem(0)).unwrap());
        let z2 = RingSpec::IntegersMod(2);
        assert!(!z2.ann_intersection_trivial(&z2.elem(0), &z2.elem(2)).unwrap());
        let z4 = RingSpec::IntegersMod(4);
        assert!(!z4.ann_intersection_trivial(&z4.elem(2), &z4.elem(2)).unwrap());
        // Ann(2) = (3), Ann(3) = (2) in Z/6.
        let z6 = RingSpec::IntegersMod(6);
        assert!(z6.ann_intersection_trivial(&z6.elem(2), &z6.elem(3)).unwrap());
    }

    #[test]
    fn annihilators_exhaustive() {
        for m in 2..=24u64 {
            let r = ZMod::new(m).unwrap();
            for a in 0..m {
                let g = r.ann_generator(&a);
                assert_eq!(r.mul(&g, &a), 0);
                let ideal: Vec<u64> = (0..m).map(|c| r.mul(&c, &g)).collect();
                for x in 0..m {
                    if r.mul(&x, &a) == 0 {
                        assert!(ideal.contains(&x), "m={m} a={a} x={x}");
                    }
                }
                for b in 0..m {
                    let brute = (1..m).all(|x| r.mul(&x, &a) != 0 || r.mul(&x, &b) != 0);
                    assert_eq!(r.ann_intersection_trivial(&a, &b), brute, "m={m} a={a} b={b}");
                    assert_eq!(
                        r.ann_intersection_trivial(&a, &b),
                        r.ann_intersection_trivial(&b, &a)
                    );
                }
            }
        }
    }

    #[test]
    fn normalizing_units() {
        for m in 2..=40u64 {
            let r = ZMod::new(m).unwrap();
            for a in 0..m {
                let u = r.normalizing_unit(a);
                assert_eq!(u.gcd(&m), 1);
                assert_eq!(r.mul(&u, &a), a.gcd(&m) % m);
            }
        }
    }

    #[test]
    fn parse_ring_syntax() {
        assert_eq!("Z".parse::<RingSpec>().unwrap(), RingSpec::Integers);
        assert_eq!("Z/8".parse::<RingSpec>().unwrap(), z8());
        assert!("Z/1".parse::<RingSpec>().is_err());
        assert!("Q".parse::<RingSpec>().is_err());
        assert!("Z/x".parse::<RingSpec>().is_err());
        assert_eq!(z8().to_string(), "Z/8");
    }

    #[test]
    fn xgcd_identity() {
        for a in -30i64..30 {
            for b in -30i64..30 {
                let (g, s, t) = xgcd(a, b);
                assert_eq!(s * a + t * b, g);
                assert_eq!(g, a.gcd(&b));
            }
        }
    }
}
