//! Symmetric functions of the universal roots.
//!
//! `Ψ_p = ∏_{i<j} (ξ_i + ξ_j)` is computed twice: as a product in `Split^n`,
//! and in the base ring as the signed determinant `(-1)^{n(n-1)/2} det(a_{2i-j})`.
//! The Vandermonde element `Δ_p` is likewise available as a product and as the
//! alternating sum of the permuted staircase monomial `ξ_1^{n-1} ⋯ ξ_{n-1}`.

use std::ops::{Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{bareiss_determinant, laplace_determinant};
use crate::perm::Permutation;
use crate::poly::MonicPoly;
use crate::ring::Ring;
use crate::split::{Monomial, SplitContext, SplitElement};

/// Largest degree for which sums over all of `S_n` (or `A_n`) are evaluated.
pub const DEFAULT_PERMUTATION_SUM_CAP: usize = 6;

/// Largest size at which the determinant uses cofactor expansion.
const LAPLACE_MAX: usize = 6;

/// A base-ring value obtained from a computation in `Split^n`, with the
/// normal-form element that was checked to equal `value · 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarResult<R: Ring> {
    pub value: R::Elem,
    pub witness: SplitElement<R>,
}

/// The `n × n` matrix with entry `(i, j) = a_{2i-j}` for `0 <= i, j < n`
/// (`a_k = 0` outside `0..=n`). Its first row is `(a_0, 0, ..., 0)`.
pub fn psi_matrix<T: Clone + Zero>(a: &[T]) -> Vec<Vec<T>> {
    let n = a.len() - 1;
    (0..n as isize)
        .map(|i| {
            (0..n as isize)
                .map(|j| {
                    let k = 2 * i - j;
                    if k < 0 || k > n as isize {
                        T::zero()
                    } else {
                        a[k as usize].clone()
                    }
                })
                .collect()
        })
        .collect()
}

/// `(-1)^{n(n-1)/2} det(a_{2i-j})` over any commutative ring, by cofactor expansion.
pub fn psi_determinant<T>(a: &[T]) -> T
where
    T: Clone + Zero + One + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    let n = a.len() - 1;
    let det = laplace_determinant(&psi_matrix(a));
    if (n * (n.saturating_sub(1)) / 2) % 2 == 1 {
        -det
    } else {
        det
    }
}

/// `Ψ_p` from the coefficients of `p`.
pub fn psi_det<R: Ring>(p: &MonicPoly<R>) -> R::Elem {
    let a = p.lifted_coeffs();
    let n = p.degree();
    let det = if n <= LAPLACE_MAX {
        laplace_determinant(&psi_matrix(&a))
    } else {
        bareiss_determinant(&psi_matrix(&a))
    };
    let signed = if (n * (n - 1) / 2) % 2 == 1 { -det } else { det };
    p.ring().from_bigint(&signed)
}

fn scalar_of<R: Ring>(
    ctx: &SplitContext<R>,
    witness: SplitElement<R>,
    what: &'static str,
) -> Result<ScalarResult<R>> {
    match ctx.as_scalar(&witness) {
        Some(value) => Ok(ScalarResult { value, witness }),
        None => Err(Error::NonScalar(what)),
    }
}

/// `∏_{i<j} (ξ_i ± ξ_j)`; each linear factor is applied as two shifts `acc·ξ_i ± acc·ξ_j`.
fn pairwise_product<R: Ring>(ctx: &SplitContext<R>, plus: bool) -> Result<SplitElement<R>> {
    ctx.require_complete()?;
    let n = ctx.degree();
    let ring = ctx.ring();
    let mut acc = ctx.one().into_coeffs();
    for i in 1..=n {
        for j in i + 1..=n {
            let a = ctx.apply_xi(i, n, &acc);
            let b = ctx.apply_xi(j, n, &acc);
            acc = a
                .iter()
                .zip(&b)
                .map(|(x, y)| if plus { ring.add(x, y) } else { ring.sub(x, y) })
                .collect();
        }
    }
    ctx.element(n, acc)
}

/// `∏_{i<j} (ξ_i + ξ_j)` in `Split^n`, checked to be a scalar.
pub fn psi_product<R: Ring>(ctx: &SplitContext<R>) -> Result<ScalarResult<R>> {
    let w = pairwise_product(ctx, true)?;
    scalar_of(ctx, w, "psi product")
}

/// `Δ_p = ∏_{i<j} (ξ_i - ξ_j)`.
pub fn vandermonde<R: Ring>(ctx: &SplitContext<R>) -> Result<SplitElement<R>> {
    pairwise_product(ctx, false)
}

/// `Discr_p = Δ_p²`, checked to be a scalar.
pub fn discriminant<R: Ring>(ctx: &SplitContext<R>) -> Result<ScalarResult<R>> {
    let d = vandermonde(ctx)?;
    let w = ctx.mul(&d, &d)?;
    scalar_of(ctx, w, "discriminant")
}

fn check_sum_cap<R: Ring>(ctx: &SplitContext<R>, cap: usize) -> Result<()> {
    ctx.require_complete()?;
    if ctx.degree() > cap {
        return Err(Error::CapExceeded {
            what: "permutation sum",
            n: ctx.degree(),
            cap,
            flag: "--cap-n",
        });
    }
    Ok(())
}

/// `σ(ξ_1^{n-1} ξ_2^{n-2} ⋯ ξ_{n-1})`.
pub fn permuted_staircase<R: Ring>(
    ctx: &SplitContext<R>,
    sigma: &Permutation,
) -> Result<SplitElement<R>> {
    let n = ctx.degree();
    let m = ctx.monomial(&Monomial::staircase(n), ctx.ring().one())?;
    ctx.permute(sigma, &m)
}

fn staircase_sum<R: Ring>(
    ctx: &SplitContext<R>,
    perms: impl IntoIterator<Item = Permutation>,
    signed: bool,
) -> Result<SplitElement<R>> {
    let n = ctx.degree();
    let staircase = Monomial::staircase(n);
    let mut acc = ctx.zero();
    for sigma in perms {
        let term = ctx.element(n, ctx.monomial_image(&sigma, &staircase)?)?;
        acc = if signed && sigma.sign() < 0 {
            ctx.sub(&acc, &term)?
        } else {
            ctx.add(&acc, &term)?
        };
    }
    Ok(acc)
}

/// `Σ_σ sign(σ) σ(ξ_1^{n-1} ⋯ ξ_{n-1})`, the alternating-sum form of `Δ_p`.
pub fn vandermonde_alternating<R: Ring>(ctx: &SplitContext<R>) -> Result<SplitElement<R>> {
    vandermonde_alternating_with_cap(ctx, DEFAULT_PERMUTATION_SUM_CAP)
}

pub fn vandermonde_alternating_with_cap<R: Ring>(
    ctx: &SplitContext<R>,
    cap: usize,
) -> Result<SplitElement<R>> {
    check_sum_cap(ctx, cap)?;
    staircase_sum(ctx, Permutation::all(ctx.degree()), true)
}

/// `Δ⁺`: sum of the staircase images over even permutations.
pub fn delta_plus<R: Ring>(ctx: &SplitContext<R>) -> Result<SplitElement<R>> {
    delta_plus_with_cap(ctx, DEFAULT_PERMUTATION_SUM_CAP)
}

pub fn delta_plus_with_cap<R: Ring>(ctx: &SplitContext<R>, cap: usize) -> Result<SplitElement<R>> {
    check_sum_cap(ctx, cap)?;
    staircase_sum(ctx, Permutation::all_even(ctx.degree()), false)
}

/// `Δ⁻`: sum of the staircase images over odd permutations.
pub fn delta_minus<R: Ring>(ctx: &SplitContext<R>) -> Result<SplitElement<R>> {
    check_sum_cap(ctx, DEFAULT_PERMUTATION_SUM_CAP)?;
    let odd = Permutation::all(ctx.degree())
        .into_iter()
        .filter(|p| !p.is_even());
    staircase_sum(ctx, odd, false)
}

/// `e_i(ξ_1, ..., ξ_r)` at the top level of `ctx`.
pub fn elementary_symmetric<R: Ring>(
    ctx: &SplitContext<R>,
    r: usize,
    i: usize,
) -> Result<SplitElement<R>> {
    if i == 0 || i > r || r > ctx.level() {
        return Err(Error::IndexOutOfRange(format!(
            "e_{i} of the first {r} roots at level {}",
            ctx.level()
        )));
    }
    let roots: Vec<SplitElement<R>> = (1..=r).map(|j| ctx.root(j)).collect::<Result<_>>()?;
    let mut acc = ctx.zero();
    for subset in combinations(r, i) {
        let mut term = ctx.one();
        for j in subset {
            term = ctx.mul(&term, &roots[j])?;
        }
        acc = ctx.add(&acc, &term)?;
    }
    Ok(acc)
}

/// All `k`-subsets of `0..n`, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use crate::ring::{Integers, ZMod};

    fn zpoly(c: &[i64]) -> MonicPoly<Integers> {
        MonicPoly::from_ints(Integers, c).unwrap()
    }

    fn mpoly(m: u64, c: &[i64]) -> MonicPoly<ZMod> {
        MonicPoly::from_ints(ZMod::new(m).unwrap(), c).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn psi_low_degree_closed_forms() {
        assert_eq!(psi_det(&zpoly(&[1, 7])), big(1));
        assert_eq!(psi_det(&zpoly(&[1, 3, 8])), big(-3));
        let (a1, a2, a3) = (2, -5, 7);
        assert_eq!(psi_det(&zpoly(&[1, a1, a2, a3])), big(a3 - a1 * a2));
        let (a1, a2, a3, a4) = (3, -2, 5, 4);
        assert_eq!(
            psi_det(&zpoly(&[1, a1, a2, a3, a4])),
            big(a1 * a2 * a3 - a1 * a1 * a4 - a3 * a3)
        );
    }

    #[test]
    fn psi_matrix_layout() {
        let a: Vec<i64> = vec![1, 11, 12, 13];
        let m = psi_matrix(&a);
        assert_eq!(m, vec![vec![1, 0, 0], vec![12, 11, 1], vec![0, 13, 12]]);
    }

    #[test]
    fn psi_product_examples() {
        let ctx = SplitContext::build(&zpoly(&[1, 1, 1]), 2).unwrap();
        assert_eq!(psi_product(&ctx).unwrap().value, big(-1));
        for m in [2u64, 3, 4] {
            let ctx = SplitContext::build(&mpoly(m, &[1, 0, 0, 0]), 3).unwrap();
            assert_eq!(psi_product(&ctx).unwrap().value, 0);
        }
        let ctx = SplitContext::build(&zpoly(&[1, 0, 1, 1]), 3).unwrap();
        assert_eq!(psi_product(&ctx).unwrap().value, big(1));
        assert_eq!(psi_det(ctx.poly()), big(1));
    }

    #[test]
    fn quadratic_vandermonde_and_discriminant() {
        let (a1, a2) = (5, 3);
        let ctx = SplitContext::build(&zpoly(&[1, a1, a2]), 2).unwrap();
        let d = vandermonde(&ctx).unwrap();
        assert_eq!(d.coeffs(), &[big(a1), big(2)][..]);
        assert_eq!(discriminant(&ctx).unwrap().value, big(a1 * a1 - 4 * a2));
        let ctx = SplitContext::build(&zpoly(&[1, 1, 1]), 2).unwrap();
        assert_eq!(discriminant(&ctx).unwrap().value, big(-3));
    }

    #[test]
    fn vandermonde_equals_psi_on_two_torsion() {
        // In characteristic 2, ξ_i - ξ_j = ξ_i + ξ_j.
        let ctx = SplitContext::build(&mpoly(2, &[1, 0, 0, 0]), 3).unwrap();
        assert_eq!(
            vandermonde(&ctx).unwrap(),
            psi_product(&ctx).unwrap().witness
        );
    }

    #[test]
    fn alternating_sum_matches_product() {
        for c in [&[1, 2, -3][..], &[1, 0, 1, 1], &[1, -1, 2, 0, 3]] {
            let ctx = SplitContext::build(&zpoly(c), c.len() - 1).unwrap();
            assert_eq!(
                vandermonde(&ctx).unwrap(),
                vandermonde_alternating(&ctx).unwrap()
            );
            let dp = delta_plus(&ctx).unwrap();
            let dm = delta_minus(&ctx).unwrap();
            assert_eq!(ctx.sub(&dp, &dm).unwrap(), vandermonde(&ctx).unwrap());
        }
    }

    #[test]
    fn delta_plus_quadratic() {
        let ctx = SplitContext::build(&zpoly(&[1, 4, 9]), 2).unwrap();
        assert_eq!(delta_plus(&ctx).unwrap(), ctx.root(1).unwrap());
        assert_eq!(delta_minus(&ctx).unwrap(), ctx.root(2).unwrap());
    }

    #[test]
    fn delta_halves_under_permutations() {
        let ctx = SplitContext::build(&mpoly(6, &[1, 1, 4, 5, 2]), 4).unwrap();
        let dp = delta_plus(&ctx).unwrap();
        let dm = delta_minus(&ctx).unwrap();
        for sigma in Permutation::all(4) {
            let img = ctx.permute(&sigma, &dp).unwrap();
            if sigma.is_even() {
                assert_eq!(img, dp);
            } else {
                assert_eq!(img, dm);
            }
        }
    }

    #[test]
    fn vandermonde_is_alternating() {
        let ctx = SplitContext::build(&zpoly(&[1, 2, 0, -1, 3]), 4).unwrap();
        let d = vandermonde(&ctx).unwrap();
        for sigma in Permutation::all(4) {
            let img = ctx.permute(&sigma, &d).unwrap();
            let expected = if sigma.sign() > 0 { d.clone() } else { ctx.neg(&d).unwrap() };
            assert_eq!(img, expected);
        }
    }

    #[test]
    fn elementary_symmetric_values() {
        let c = [1i64, 3, -2, 5, 7];
        let ctx = SplitContext::build(&zpoly(&c), 4).unwrap();
        for i in 1..=4 {
            let e = elementary_symmetric(&ctx, 4, i).unwrap();
            let sign = if i % 2 == 0 { 1 } else { -1 };
            assert_eq!(ctx.as_scalar(&e), Some(big(sign * c[i])));
        }
        assert_eq!(
            elementary_symmetric(&ctx, 1, 1).unwrap(),
            ctx.root(1).unwrap()
        );
        assert!(elementary_symmetric(&ctx, 2, 3).is_err());
        assert!(elementary_symmetric(&ctx, 2, 0).is_err());

        let ctx = SplitContext::build(&zpoly(&[1, 0, 0, 0]), 3).unwrap();
        let e2 = elementary_symmetric(&ctx, 2, 2).unwrap();
        let m = ctx.monomial(&Monomial::new(vec![1, 1, 0]), big(1)).unwrap();
        assert_eq!(e2, m);
    }

    #[test]
    fn bareiss_route_matches_laplace_for_psi() {
        // Degree 7 and 8 take the Bareiss route; compare with the generic expansion.
        let coeffs: Vec<BigInt> = [1, 2, -1, 3, 0, 5, -4, 2, 1].iter().map(|&x| big(x)).collect();
        for n in 7..=8 {
            let p = MonicPoly::from_bigints(Integers, &coeffs[..=n]).unwrap();
            assert_eq!(psi_det(&p), psi_determinant(&coeffs[..=n]));
        }
    }

    #[test]
    fn combinatorics() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
    }
}
