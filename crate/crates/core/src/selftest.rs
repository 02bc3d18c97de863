//! Built-in checks of the published worked examples, run by `splitalg selftest`.

use crate::error::Result;
use crate::invariants::{
    brute_force_invariants, check_subalgebra, check_scalar_multiples, check_conditions, delta_plus_family,
    fact_module, fixed_module, same_module, DEFAULT_INVARIANT_CAP,
};
use crate::perm::{Permutation, SubgroupSpec};
use crate::poly::MonicPoly;
use crate::ring::{Integers, RingSpec, ZMod};
use crate::split::{Monomial, SplitContext};
use crate::symmetric;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn() -> Result<bool>;

fn z(c: &[i64]) -> Result<MonicPoly<Integers>> {
    MonicPoly::from_ints(Integers, c)
}

fn zm(m: u64, c: &[i64]) -> Result<MonicPoly<ZMod>> {
    MonicPoly::from_ints(ZMod::new(m)?, c)
}

fn cube_mod2() -> Result<SplitContext<ZMod>> {
    SplitContext::build(&zm(2, &[1, 0, 0, 0])?, 3)
}

fn ann_two_trivial_over_z() -> Result<bool> {
    let z = RingSpec::Integers;
    let mut ok = true;
    for psi in [0, 1, -3, 8] {
        ok &= z.ann_intersection_trivial(&z.elem(psi), &z.elem(2))?;
    }
    Ok(ok)
}

fn cube_of_root_vanishes() -> Result<bool> {
    let ctx = SplitContext::build(&zm(2, &[1, 0, 0, 0])?, 1)?;
    let x = ctx.root(1)?;
    Ok(ctx.mul(&ctx.mul(&x, &x)?, &x)? == ctx.zero())
}

fn distinct_roots_exception() -> Result<bool> {
    let mut ok = true;
    for a2 in 0..2 {
        ok &= !SplitContext::build(&zm(2, &[1, 0, a2])?, 2)?.roots_pairwise_distinct()?;
    }
    for c in [[1, 0, 0], [1, 0, -5], [1, 3, 2], [1, -1, 7]] {
        ok &= SplitContext::build(&z(&c)?, 2)?.roots_pairwise_distinct()?;
    }
    ok &= cube_mod2()?.roots_pairwise_distinct()?;
    Ok(ok)
}

fn psi_low_degrees() -> Result<bool> {
    let mut ok = symmetric::psi_det(&z(&[1, 5])?) == 1.into();
    ok &= symmetric::psi_det(&z(&[1, 4, -3])?) == (-4).into();
    let (a1, a2, a3, a4) = (2i64, -3i64, 5i64, 7i64);
    ok &= symmetric::psi_det(&z(&[1, a1, a2, a3])?) == (a3 - a1 * a2).into();
    ok &= symmetric::psi_det(&z(&[1, a1, a2, a3, a4])?)
        == (a1 * a2 * a3 - a1 * a1 * a4 - a3 * a3).into();
    Ok(ok)
}

fn vandermonde_equals_psi_mod2() -> Result<bool> {
    let ctx = cube_mod2()?;
    let psi = symmetric::psi_product(&ctx)?;
    Ok(symmetric::vandermonde(&ctx)? == psi.witness)
}

fn delta_plus_minus() -> Result<bool> {
    let mut ok = true;
    for c in [&[1i64, 0, 1, 1][..], &[1, 2, -1, 3, 1]] {
        let ctx = SplitContext::build(&z(c)?, c.len() - 1)?;
        let dp = symmetric::delta_plus(&ctx)?;
        let dm = symmetric::delta_minus(&ctx)?;
        ok &= ctx.sub(&dp, &dm)? == symmetric::vandermonde(&ctx)?;
        for sigma in Permutation::all(ctx.degree()).iter().filter(|s| !s.is_even()) {
            ok &= ctx.permute(sigma, &dp)? == dm;
        }
    }
    Ok(ok)
}

fn integer_invariants_trivial() -> Result<bool> {
    let mut ok = true;
    for c in [&[1i64, 0, 1, 1][..], &[1, 0, 0, 0, 0], &[1, -2, 3]] {
        let ctx = SplitContext::build(&z(c)?, c.len() - 1)?;
        let fixed = fixed_module(&ctx, &SubgroupSpec::symmetric(ctx.degree()))?;
        ok &= same_module(&ctx, &fixed, &[ctx.one()])?;
    }
    Ok(ok)
}

fn staircase_invariant_mod2() -> Result<bool> {
    let ctx = cube_mod2()?;
    let fixed = fixed_module(&ctx, &SubgroupSpec::symmetric(3))?;
    let stair = ctx.monomial(&Monomial::staircase(3), 1)?;
    Ok(same_module(&ctx, &fixed, &[ctx.one(), stair.clone()])?
        && !same_module(&ctx, &fixed, &[ctx.one()])?
        && check_scalar_multiples(&ctx, &stair)?)
}

fn conditions_hold_over_z() -> Result<bool> {
    let (_, rep) = check_conditions(&z(&[1, 0, 1, 1])?, DEFAULT_INVARIANT_CAP)?;
    Ok(rep.conditions() == [true; 4])
}

fn conditions_fail_for_powers_mod2() -> Result<bool> {
    let mut ok = true;
    for n in 2..=4 {
        let (_, rep) = check_conditions(&MonicPoly::monomial(ZMod::new(2)?, n)?, DEFAULT_INVARIANT_CAP)?;
        ok &= rep.conditions() == [false; 4];
    }
    Ok(ok)
}

fn fact_rank_4_2() -> Result<bool> {
    let ctx = SplitContext::build(&z(&[1, 1, 0, 2, -1])?, 4)?;
    Ok(fact_module(&ctx, 2)?.len() == 6)
}

fn symmetric_functions_of_two_roots() -> Result<bool> {
    Ok(check_subalgebra(&z(&[1, 0, 1, 1])?, 2, DEFAULT_INVARIANT_CAP)?.holds)
}

fn invariants_match_delta_plus_family() -> Result<bool> {
    let mut ok = true;
    for n in [2, 3] {
        let ctx = SplitContext::build(&MonicPoly::monomial(ZMod::new(2)?, n)?, n)?;
        let brute = brute_force_invariants(&ctx, &SubgroupSpec::symmetric(n))?;
        let family = delta_plus_family(&ctx)?;
        ok &= brute.len() == 4 && family.len() == 4 && brute.iter().all(|x| family.contains(x));
        if n == 2 {
            // Δ⁺ = ξ_1, so every element of Split² is invariant.
            ok &= symmetric::delta_plus(&ctx)? == ctx.root(1)?;
        }
    }
    Ok(ok)
}

const CHECKS: &[(&str, Check)] = &[
    ("ann-two-trivial-over-integers", ann_two_trivial_over_z),
    ("cube-of-root-vanishes-for-t3-mod-2", cube_of_root_vanishes),
    ("distinct-roots-exception-quadratic-mod-2", distinct_roots_exception),
    ("psi-determinant-low-degrees", psi_low_degrees),
    ("vandermonde-equals-psi-for-t3-mod-2", vandermonde_equals_psi_mod2),
    ("delta-plus-minus-difference-and-swap", delta_plus_minus),
    ("integer-symmetric-invariants-are-scalars", integer_invariants_trivial),
    ("staircase-invariant-for-t3-mod-2", staircase_invariant_mod2),
    ("equivalent-conditions-hold-over-integers", conditions_hold_over_z),
    ("equivalent-conditions-fail-for-tn-mod-2", conditions_fail_for_powers_mod2),
    ("fact-rank-n4-r2", fact_rank_4_2),
    ("symmetric-functions-of-two-roots-over-integers", symmetric_functions_of_two_roots),
    ("invariants-are-c-plus-z-delta-plus", invariants_match_delta_plus_family),
];

/// Runs every built-in check; errors count as failures.
pub fn run_all() -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|(name, f)| match f() {
            Ok(passed) => CheckOutcome {
                name,
                passed,
                detail: if passed { "ok".into() } else { "mismatch".into() },
            },
            Err(e) => CheckOutcome {
                name,
                passed: false,
                detail: e.to_string(),
            },
        })
        .collect()
}
