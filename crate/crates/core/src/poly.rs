use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{Ring, RingSpec};

/// Monic polynomial `t^n + a_1 t^(n-1) + ... + a_n`, stored as `(a_0 = 1, a_1, ..., a_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicPoly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> MonicPoly<R> {
    pub fn new(ring: R, coeffs: Vec<R::Elem>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::ZeroDegree);
        }
        if coeffs[0] != ring.one() {
            return Err(Error::NotMonic);
        }
        Ok(MonicPoly { ring, coeffs })
    }

    /// From integer coefficients `a_0, ..., a_n`, reduced into the ring.
    pub fn from_ints(ring: R, coeffs: &[i64]) -> Result<Self> {
        let c = coeffs.iter().map(|&a| ring.from_i64(a)).collect();
        Self::new(ring, c)
    }

    pub fn from_bigints(ring: R, coeffs: &[BigInt]) -> Result<Self> {
        let c = coeffs.iter().map(|a| ring.from_bigint(a)).collect();
        Self::new(ring, c)
    }

    /// `t^n`.
    pub fn monomial(ring: R, n: usize) -> Result<Self> {
        let mut c = vec![ring.zero(); n + 1];
        c[0] = ring.one();
        Self::new(ring, c)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `(a_0, ..., a_n)`.
    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    /// `a_i`, zero outside `0..=n`.
    pub fn coeff(&self, i: isize) -> R::Elem {
        if i < 0 || i as usize > self.degree() {
            self.ring.zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn lifted_coeffs(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|a| self.ring.lift(a)).collect()
    }
}

impl<R: Ring> fmt::Display for MonicPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lifted_coeffs().iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses `a_0,a_1,...,a_n` (comma separated integers) into lifted coefficients,
/// reduced canonically into `ring`.
pub fn parse_coeffs(ring: RingSpec, s: &str) -> Result<Vec<BigInt>> {
    let coeffs = s
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad coefficient `{t}` in `{s}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    if coeffs.len() < 2 {
        return Err(Error::ZeroDegree);
    }
    let reduced: Vec<BigInt> = coeffs.iter().map(|c| ring.elem(c.clone()).value().clone()).collect();
    if reduced[0] != BigInt::from(1) {
        return Err(Error::NotMonic);
    }
    Ok(reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, ZMod};

    #[test]
    fn rejects_non_monic_and_constants() {
        assert!(matches!(
            MonicPoly::from_ints(Integers, &[2, 1]),
            Err(Error::NotMonic)
        ));
        assert!(matches!(
            MonicPoly::from_ints(Integers, &[1]),
            Err(Error::ZeroDegree)
        ));
        // 9 ≡ 1 mod 8, so this is monic over Z/8.
        let r = ZMod::new(8).unwrap();
        let p = MonicPoly::from_ints(r, &[9, -1, 3]).unwrap();
        assert_eq!(p.coeffs(), &[1, 7, 3]);
        assert_eq!(p.coeff(-1), 0);
        assert_eq!(p.coeff(5), 0);
    }

    #[test]
    fn parse_reduces_modulo() {
        let c = parse_coeffs(RingSpec::IntegersMod(5), "1, -1, 7").unwrap();
        assert_eq!(c, vec![BigInt::from(1), BigInt::from(4), BigInt::from(2)]);
        assert!(parse_coeffs(RingSpec::Integers, "2,1").is_err());
        assert!(parse_coeffs(RingSpec::Integers, "1,x").is_err());
        assert!(parse_coeffs(RingSpec::Integers, "1").is_err());
    }
}
