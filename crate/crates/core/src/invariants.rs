//! Fixed submodules of permutation subgroups acting on `Split^n`, and the
//! checks built on them.
//!
//! A subgroup is given by generators; an element is fixed by the subgroup iff
//! it is fixed by every generator, so the fixed module is the kernel of the
//! stacked matrices `A_g - I`.

use crate::error::{Error, Result};
use crate::linalg::{module_equal, ExactMatrix, LinearRing};
use crate::perm::{Permutation, SubgroupSpec};
use crate::poly::MonicPoly;
use crate::ring::Ring;
use crate::split::{SplitContext, SplitElement};
use crate::symmetric::{self, binomial};

/// Default degree cap for invariant solving (matrix side `n!`).
pub const DEFAULT_INVARIANT_CAP: usize = 6;

/// Largest number of elements `brute_force_invariants` will enumerate.
pub const BRUTE_FORCE_BOUND: u128 = 1 << 20;

/// Matrix of `σ` on the monomial basis of `Split^n`; column `j` is the image of basis monomial `j`.
pub fn action_matrix<R: LinearRing>(
    ctx: &SplitContext<R>,
    sigma: &Permutation,
) -> Result<ExactMatrix<R>> {
    let cols = ctx.permutation_columns(sigma)?;
    ExactMatrix::from_columns(ctx.ring().clone(), ctx.dim(), &cols)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "invariant solving",
            n,
            cap,
            flag: "--cap-n",
        });
    }
    Ok(())
}

/// Rows of `A_g - I` for every generator, stacked.
fn fixed_point_rows<R: LinearRing>(
    ctx: &SplitContext<R>,
    group: &SubgroupSpec,
) -> Result<Vec<Vec<R::Elem>>> {
    if group.n != ctx.degree() {
        return Err(Error::DimensionMismatch(format!(
            "subgroup of S_{} acting on a degree-{} algebra",
            group.n,
            ctx.degree()
        )));
    }
    let r = ctx.ring();
    let dim = ctx.dim();
    let mut rows = Vec::with_capacity(group.generators.len() * dim);
    for g in &group.generators {
        let cols = ctx.permutation_columns(g)?;
        for i in 0..dim {
            let mut row: Vec<R::Elem> = cols.iter().map(|c| c[i].clone()).collect();
            row[i] = r.sub(&row[i], &r.one());
            if row.iter().any(|x| !r.is_zero(x)) {
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

fn to_elements<R: Ring>(
    ctx: &SplitContext<R>,
    rows: Vec<Vec<R::Elem>>,
) -> Result<Vec<SplitElement<R>>> {
    rows.into_iter()
        .map(|v| ctx.element(ctx.level(), v))
        .collect()
}

/// Canonical generating set of the submodule of `Split^n` fixed by `group`.
pub fn fixed_module<R: LinearRing>(
    ctx: &SplitContext<R>,
    group: &SubgroupSpec,
) -> Result<Vec<SplitElement<R>>> {
    fixed_module_with_cap(ctx, group, DEFAULT_INVARIANT_CAP)
}

pub fn fixed_module_with_cap<R: LinearRing>(
    ctx: &SplitContext<R>,
    group: &SubgroupSpec,
    cap: usize,
) -> Result<Vec<SplitElement<R>>> {
    ctx.require_complete()?;
    check_cap(ctx.degree(), cap)?;
    let rows = fixed_point_rows(ctx, group)?;
    let kernel = ctx.ring().kernel_rows(&rows, ctx.dim());
    to_elements(ctx, kernel)
}

/// Whether every element is fixed by every generator, by direct application of `permute`.
pub fn all_fixed<R: Ring>(
    ctx: &SplitContext<R>,
    group: &SubgroupSpec,
    elems: &[SplitElement<R>],
) -> Result<bool> {
    for g in &group.generators {
        for x in elems {
            if ctx.permute(g, x)? != *x {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Unit vectors of the basis monomials of `Split^r` inside `Split^n`, i.e. `k[ξ_1, ..., ξ_r]`.
pub fn monomial_span<R: Ring>(ctx: &SplitContext<R>, r: usize) -> Result<Vec<SplitElement<R>>> {
    let ring = ctx.ring();
    (0..ctx.rank(r))
        .map(|i| {
            let mut v = vec![ring.zero(); ctx.rank(r)];
            v[i] = ring.one();
            ctx.embed(&ctx.element(r, v)?, ctx.level())
        })
        .collect()
}

fn coeff_vectors<R: Ring>(elems: &[SplitElement<R>]) -> Vec<Vec<R::Elem>> {
    elems.iter().map(|e| e.coeffs().to_vec()).collect()
}

/// Whether two lists of elements span the same submodule of `Split^n`.
pub fn same_module<R: LinearRing>(
    ctx: &SplitContext<R>,
    a: &[SplitElement<R>],
    b: &[SplitElement<R>],
) -> Result<bool> {
    let dim = ctx.dim();
    let pad = |v: &[SplitElement<R>]| -> Result<Vec<Vec<R::Elem>>> {
        let embedded: Vec<SplitElement<R>> = v
            .iter()
            .map(|x| ctx.embed(x, ctx.level()))
            .collect::<Result<_>>()?;
        let mut rows = coeff_vectors(&embedded);
        if rows.is_empty() {
            rows.push(vec![ctx.ring().zero(); dim]);
        }
        Ok(rows)
    };
    module_equal(ctx.ring(), &pad(a)?, &pad(b)?)
}

/// Outcome of the four equivalent conditions on `p`, each computed independently.
#[derive(Clone, Debug)]
pub struct InvariantReport<R: Ring> {
    pub poly: MonicPoly<R>,
    pub psi: R::Elem,
    pub discr: R::Elem,
    /// `Ann(Discr_p) ∩ Ann(2) = 0`.
    pub condition_i: bool,
    /// `Ann(Ψ_p) ∩ Ann(2) = 0`.
    pub condition_ii: bool,
    /// Invariants of `S'_2` (fixing `1..n-2`) are exactly `k[ξ_1..ξ_{n-2}]`.
    pub condition_iii: bool,
    /// Invariants of `S'_{n-r}` are exactly `k[ξ_1..ξ_r]` for every `r = 0..n-2`.
    pub condition_iv: bool,
    /// `levels[r]` is the `r`-th equality of condition (iv).
    pub levels: Vec<bool>,
    /// Generating set of the `S_n`-invariants.
    pub invariant_basis: Vec<SplitElement<R>>,
    /// What the invariants would be if they were trivial: `k · 1`.
    pub expected_basis: Vec<SplitElement<R>>,
}

impl<R: Ring> InvariantReport<R> {
    pub fn conditions(&self) -> [bool; 4] {
        [
            self.condition_i,
            self.condition_ii,
            self.condition_iii,
            self.condition_iv,
        ]
    }

    /// Whether the four conditions agree.
    pub fn consistent(&self) -> bool {
        let c = self.conditions();
        c.iter().all(|&x| x == c[0])
    }

    /// `S_n`-invariants are trivial while condition (ii) fails.
    pub fn is_gap_witness(&self) -> bool {
        self.levels.first().copied().unwrap_or(false) && !self.condition_ii
    }
}

/// Evaluates the four conditions for `p` (degree `2 <= n <= cap`).
pub fn check_conditions<R: LinearRing>(
    poly: &MonicPoly<R>,
    cap: usize,
) -> Result<(SplitContext<R>, InvariantReport<R>)> {
    let n = poly.degree();
    if n < 2 {
        return Err(Error::Precondition(format!(
            "the equivalence needs degree >= 2, got {n}"
        )));
    }
    check_cap(n, cap)?;
    let ctx = SplitContext::build(poly, n)?;
    let ring = ctx.ring();
    let two = ring.from_i64(2);
    let psi = symmetric::psi_product(&ctx)?.value;
    let discr = symmetric::discriminant(&ctx)?.value;
    let condition_i = ring.ann_intersection_trivial(&discr, &two);
    let condition_ii = ring.ann_intersection_trivial(&psi, &two);

    let mut levels = Vec::with_capacity(n - 1);
    let mut invariant_basis = Vec::new();
    for r in 0..=n - 2 {
        let fixed = fixed_module_with_cap(&ctx, &SubgroupSpec::fixing_first(n, r), cap)?;
        levels.push(same_module(&ctx, &fixed, &monomial_span(&ctx, r)?)?);
        if r == 0 {
            invariant_basis = fixed;
        }
    }
    let report = InvariantReport {
        poly: poly.clone(),
        psi,
        discr,
        condition_i,
        condition_ii,
        condition_iii: levels[n - 2],
        condition_iv: levels.iter().all(|&b| b),
        levels,
        invariant_basis,
        expected_basis: vec![ctx.one()],
    };
    Ok((ctx, report))
}

/// For an `S_n`-invariant `F`: whether `2F` and `Ψ_p F` are scalars.
pub fn check_scalar_multiples<R: Ring>(ctx: &SplitContext<R>, f: &SplitElement<R>) -> Result<bool> {
    let group = SubgroupSpec::symmetric(ctx.degree());
    if !all_fixed(ctx, &group, std::slice::from_ref(f))? {
        return Err(Error::Precondition("element is not S_n-invariant".into()));
    }
    let ring = ctx.ring();
    let psi = symmetric::psi_det(ctx.poly());
    let two_f = ctx.scale(&ring.from_i64(2), f)?;
    let psi_f = ctx.scale(&psi, f)?;
    Ok(ctx.as_scalar(&two_f).is_some() && ctx.as_scalar(&psi_f).is_some())
}

/// For `n = 2`: whether `F = c + bξ_1` with `2b = Ψ_p b = 0`.
pub fn check_quadratic_form<R: Ring>(ctx: &SplitContext<R>, f: &SplitElement<R>) -> Result<bool> {
    if ctx.degree() != 2 {
        return Err(Error::Precondition("the quadratic case needs n = 2".into()));
    }
    let f = ctx.embed(f, ctx.level())?;
    let ring = ctx.ring();
    // Basis of Split^2 is (1, ξ_1).
    let b = &f.coeffs()[1];
    let psi = symmetric::psi_det(ctx.poly());
    Ok(ring.is_zero(&ring.mul(&ring.from_i64(2), b)) && ring.is_zero(&ring.mul(&psi, b)))
}

/// Generating set of the subalgebra `K ⊆ Split^n` generated by `e_1, ..., e_r` of
/// the first `r` roots.
pub fn fact_module<R: LinearRing>(ctx: &SplitContext<R>, r: usize) -> Result<Vec<SplitElement<R>>> {
    let n = ctx.degree();
    if r == 0 || r > ctx.level() {
        return Err(Error::LevelOutOfRange { level: r, n });
    }
    let ring = ctx.ring();
    let dim = ctx.dim();
    let gens: Vec<SplitElement<R>> = (1..=r)
        .map(|i| symmetric::elementary_symmetric(ctx, r, i))
        .collect::<Result<_>>()?;
    let mut rows = ring.canonical_rows(vec![ctx.one().into_coeffs()], dim);
    let max_iter = (1..=n).product::<usize>() + 1;
    let mut iter = 0;
    loop {
        let mut next = rows.clone();
        for v in &rows {
            let x = ctx.element(ctx.level(), v.clone())?;
            for e in &gens {
                next.push(ctx.mul(&x, e)?.into_coeffs());
            }
        }
        let next = ring.canonical_rows(next, dim);
        if next == rows {
            break;
        }
        rows = next;
        iter += 1;
        if iter > max_iter {
            return Err(Error::Internal(format!(
                "subalgebra closure did not stabilize within {max_iter} rounds"
            )));
        }
    }
    if ring.is_field() || !ring.spec().is_finite() {
        let expected = binomial(n, r);
        if rows.len() != expected {
            return Err(Error::Internal(format!(
                "subalgebra generated by e_1..e_{r} has rank {} instead of C({n},{r}) = {expected}",
                rows.len()
            )));
        }
    }
    to_elements(ctx, rows)
}

/// Outcome of comparing the `S_r`-invariants of `k[ξ_1..ξ_r]` with the subalgebra
/// generated by the elementary symmetric polynomials of the first `r` roots.
#[derive(Clone, Debug)]
pub struct SubalgebraReport<R: Ring> {
    pub r: usize,
    pub holds: bool,
    pub invariants: Vec<SplitElement<R>>,
    pub fact: Vec<SplitElement<R>>,
}

/// Checks `k[ξ_1..ξ_r]^{S_r} = K` for `p`, under the hypothesis `Ann(Ψ_p) ∩ Ann(2) = 0`.
pub fn check_subalgebra<R: LinearRing>(
    poly: &MonicPoly<R>,
    r: usize,
    cap: usize,
) -> Result<SubalgebraReport<R>> {
    let n = poly.degree();
    check_cap(n, cap)?;
    let ctx = SplitContext::build(poly, n)?;
    check_subalgebra_in(&ctx, r)
}

/// As [`check_subalgebra`], inside an existing complete context.
pub fn check_subalgebra_in<R: LinearRing>(ctx: &SplitContext<R>, r: usize) -> Result<SubalgebraReport<R>> {
    ctx.require_complete()?;
    let n = ctx.degree();
    if r == 0 || r > n {
        return Err(Error::LevelOutOfRange { level: r, n });
    }
    let ring = ctx.ring();
    let psi = symmetric::psi_det(ctx.poly());
    if !ring.ann_intersection_trivial(&psi, &ring.from_i64(2)) {
        return Err(Error::Precondition(format!(
            "Ann(Ψ) ∩ Ann(2) is nonzero for {} over {}",
            ctx.poly(),
            ring.spec()
        )));
    }
    let dim = ctx.dim();
    let stride = dim / ctx.rank(r);
    let mut rows = fixed_point_rows(ctx, &SubgroupSpec::permuting_first(n, r))?;
    // Restrict to k[ξ_1..ξ_r]: coordinates outside the embedded level-r basis vanish.
    for i in (0..dim).filter(|i| i % stride != 0) {
        let mut row = vec![ring.zero(); dim];
        row[i] = ring.one();
        rows.push(row);
    }
    let invariants = to_elements(ctx, ring.kernel_rows(&rows, dim))?;
    let fact = fact_module(ctx, r)?;
    let holds = same_module(ctx, &invariants, &fact)?;
    Ok(SubalgebraReport {
        r,
        holds,
        invariants,
        fact,
    })
}

/// Every element of `Split^n` fixed by `group`, by exhaustive enumeration over a finite ring.
pub fn brute_force_invariants<R: Ring>(
    ctx: &SplitContext<R>,
    group: &SubgroupSpec,
) -> Result<Vec<SplitElement<R>>> {
    ctx.require_complete()?;
    let ring = ctx.ring();
    let elems = ring
        .elements()
        .ok_or_else(|| Error::EnumerationBound("the base ring is infinite".into()))?;
    let dim = ctx.dim();
    let total = (elems.len() as u128).checked_pow(dim as u32);
    match total {
        Some(t) if t <= BRUTE_FORCE_BOUND => {}
        _ => {
            return Err(Error::EnumerationBound(format!(
                "{}^{dim} elements exceeds {BRUTE_FORCE_BOUND}",
                elems.len()
            )))
        }
    }
    let q = elems.len();
    let total = q.pow(dim as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let coeffs: Vec<R::Elem> = (0..dim)
            .map(|_| {
                let e = elems[c % q].clone();
                c /= q;
                e
            })
            .collect();
        let x = ctx.element(ctx.level(), coeffs)?;
        if all_fixed(ctx, group, std::slice::from_ref(&x))? {
            out.push(x);
        }
    }
    Ok(out)
}

/// `{c + zΔ⁺ : c ∈ k, z ∈ Ann(2) ∩ Ann(Ψ_p)}` over a finite ring, without duplicates.
pub fn delta_plus_family<R: Ring>(ctx: &SplitContext<R>) -> Result<Vec<SplitElement<R>>> {
    let ring = ctx.ring();
    let elems = ring
        .elements()
        .ok_or_else(|| Error::EnumerationBound("the base ring is infinite".into()))?;
    let two = ring.from_i64(2);
    let psi = symmetric::psi_det(ctx.poly());
    let dp = symmetric::delta_plus(ctx)?;
    let mut out: Vec<SplitElement<R>> = Vec::new();
    for z in elems
        .iter()
        .filter(|z| ring.is_zero(&ring.mul(z, &two)) && ring.is_zero(&ring.mul(z, &psi)))
    {
        let zdp = ctx.scale(z, &dp)?;
        for c in &elems {
            let x = ctx.add(&ctx.scalar(c.clone()), &zdp)?;
            if !out.contains(&x) {
                out.push(x);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, ZMod};
    use crate::split::Monomial;
    use num_bigint::BigInt;

    fn zpoly(c: &[i64]) -> MonicPoly<Integers> {
        MonicPoly::from_ints(Integers, c).unwrap()
    }

    fn mpoly(m: u64, c: &[i64]) -> MonicPoly<ZMod> {
        MonicPoly::from_ints(ZMod::new(m).unwrap(), c).unwrap()
    }

    #[test]
    fn identity_action_matrix() {
        let ctx = SplitContext::build(&zpoly(&[1, 2, 3, 4]), 3).unwrap();
        let m = action_matrix(&ctx, &Permutation::identity(3)).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn quadratic_swap_matrix() {
        let ctx = SplitContext::build(&zpoly(&[1, 7, 3]), 2).unwrap();
        let m = action_matrix(&ctx, &Permutation::transposition(2, 1, 2)).unwrap();
        assert_eq!(m.column(0), vec![BigInt::from(1), BigInt::from(0)]);
        assert_eq!(m.column(1), vec![BigInt::from(-7), BigInt::from(-1)]);
    }

    #[test]
    fn action_matrices_form_a_representation() {
        let ctx = SplitContext::build(&mpoly(6, &[1, 5, 0, 3, 2]), 4).unwrap();
        let all = Permutation::all(4);
        for (a, b) in [(3usize, 17usize), (5, 5), (23, 1), (10, 14)] {
            let (s, t) = (&all[a], &all[b]);
            let lhs = action_matrix(&ctx, &s.compose(t)).unwrap();
            let rhs = action_matrix(&ctx, s)
                .unwrap()
                .mul(&action_matrix(&ctx, t).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
            let inv = action_matrix(&ctx, &s.inverse()).unwrap();
            assert!(action_matrix(&ctx, s).unwrap().mul(&inv).unwrap().is_identity());
        }
    }

    #[test]
    fn integer_invariants_are_trivial() {
        let ctx = SplitContext::build(&zpoly(&[1, 0, 1, 1]), 3).unwrap();
        let fixed = fixed_module(&ctx, &SubgroupSpec::symmetric(3)).unwrap();
        assert!(same_module(&ctx, &fixed, &[ctx.one()]).unwrap());
    }

    #[test]
    fn cube_mod2_has_staircase_invariant() {
        let ctx = SplitContext::build(&mpoly(2, &[1, 0, 0, 0]), 3).unwrap();
        let fixed = fixed_module(&ctx, &SubgroupSpec::symmetric(3)).unwrap();
        let stair = ctx.monomial(&Monomial::staircase(3), 1).unwrap();
        assert!(!same_module(&ctx, &fixed, &[ctx.one()]).unwrap());
        assert!(fixed.contains(&stair));
        assert!(check_scalar_multiples(&ctx, &stair).unwrap());
    }

    #[test]
    fn quadratic_mod4_invariants() {
        // p = t² + 2t + 1 over Z/4: invariants are k·1 + k·2ξ₁.
        let ctx = SplitContext::build(&mpoly(4, &[1, 2, 1]), 2).unwrap();
        let fixed = fixed_module(&ctx, &SubgroupSpec::symmetric(2)).unwrap();
        let expected = vec![ctx.one(), ctx.element(2, vec![0, 2]).unwrap()];
        assert!(same_module(&ctx, &fixed, &expected).unwrap());
        for f in &fixed {
            assert!(check_quadratic_form(&ctx, f).unwrap());
        }
    }

    #[test]
    fn fixed_module_outputs_are_fixed() {
        let ctx = SplitContext::build(&mpoly(12, &[1, 6, 4, 6]), 3).unwrap();
        for g in [
            SubgroupSpec::symmetric(3),
            SubgroupSpec::alternating(3),
            SubgroupSpec::fixing_first(3, 1),
        ] {
            let fixed = fixed_module(&ctx, &g).unwrap();
            assert!(all_fixed(&ctx, &g, &fixed).unwrap());
        }
    }

    #[test]
    fn condition_examples() {
        let (_, rep) = check_conditions(&zpoly(&[1, 0, 1, 1]), 6).unwrap();
        assert_eq!(rep.conditions(), [true; 4]);
        for n in 2..=4 {
            let (_, rep) = check_conditions(&MonicPoly::monomial(ZMod::new(2).unwrap(), n).unwrap(), 6)
                .unwrap();
            assert_eq!(rep.conditions(), [false; 4], "n = {n}");
        }
        let (_, rep) = check_conditions(&mpoly(3, &[1, 0, 0, 0]), 6).unwrap();
        assert_eq!(rep.conditions(), [true; 4]);
        assert!(check_conditions(&zpoly(&[1, 1]), 6).is_err());
        assert!(matches!(
            check_conditions(&zpoly(&[1, 0, 0, 0, 0, 0, 0, 1]), 6),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn fact_module_ranks() {
        let ctx = SplitContext::build(&zpoly(&[1, 0, 0, 0, 0]), 4).unwrap();
        assert_eq!(fact_module(&ctx, 2).unwrap().len(), 6);
        assert_eq!(fact_module(&ctx, 4).unwrap().len(), 1);
        let ctx = SplitContext::build(&zpoly(&[1, 3, 1]), 2).unwrap();
        assert_eq!(fact_module(&ctx, 1).unwrap().len(), 2);
        assert!(fact_module(&ctx, 0).is_err());
    }

    #[test]
    fn subalgebra_examples() {
        assert!(check_subalgebra(&zpoly(&[1, 0, 1, 1]), 2, 6).unwrap().holds);
        assert!(check_subalgebra(&zpoly(&[1, 0, 1, 1]), 3, 6).unwrap().holds);
        assert!(check_subalgebra(&mpoly(3, &[1, 0, 0, 1, 1]), 2, 6).unwrap().holds);
        assert!(matches!(
            check_subalgebra(&mpoly(2, &[1, 0, 0, 0]), 2, 6),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn brute_force_quadratic_mod2() {
        let ctx = SplitContext::build(&mpoly(2, &[1, 0, 0]), 2).unwrap();
        let g = SubgroupSpec::symmetric(2);
        let brute = brute_force_invariants(&ctx, &g).unwrap();
        assert_eq!(brute.len(), 4);
        let family = delta_plus_family(&ctx).unwrap();
        assert_eq!(family.len(), 4);
        for x in &brute {
            assert!(family.contains(x));
        }
    }

    #[test]
    fn brute_force_rejects_large_or_infinite() {
        let ctx = SplitContext::build(&zpoly(&[1, 0, 0]), 2).unwrap();
        assert!(brute_force_invariants(&ctx, &SubgroupSpec::symmetric(2)).is_err());
        let ctx = SplitContext::build(&mpoly(2, &[1, 0, 0, 0, 0]), 4).unwrap();
        assert!(brute_force_invariants(&ctx, &SubgroupSpec::symmetric(4)).is_err());
    }

    #[test]
    fn mod3_quadratics_have_trivial_invariants() {
        for a1 in 0..3 {
            for a2 in 0..3 {
                let ctx = SplitContext::build(&mpoly(3, &[1, a1, a2]), 2).unwrap();
                let brute = brute_force_invariants(&ctx, &SubgroupSpec::symmetric(2)).unwrap();
                assert_eq!(brute.len(), 3);
                assert!(brute.iter().all(|x| ctx.as_scalar(x).is_some()));
            }
        }
    }
}
