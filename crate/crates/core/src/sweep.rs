//! Batch verification over families of (ring, polynomial) instances.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::invariants::{check_quadratic_form, check_scalar_multiples, check_conditions};
use crate::linalg::LinearRing;
use crate::poly::MonicPoly;
use crate::ring::RingSpec;
use crate::with_ring;

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub rings: Vec<RingSpec>,
    pub degrees: Vec<usize>,
    /// Enumerate every monic polynomial over finite rings instead of sampling.
    pub all_polys: bool,
    /// Polynomials drawn per (ring, degree) when not enumerating.
    pub samples: usize,
    pub seed: u64,
    /// Sampled integer coefficients lie in `[-bound, bound]`.
    pub coeff_bound: i64,
    pub cap: usize,
    pub jobs: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            rings: (2..=12).map(RingSpec::IntegersMod).collect(),
            degrees: vec![2, 3, 4],
            all_polys: true,
            samples: 20,
            seed: 0,
            coeff_bound: 9,
            cap: crate::invariants::DEFAULT_INVARIANT_CAP,
            jobs: 1,
        }
    }
}

/// One (ring, polynomial) instance; ordered by ring, degree, then coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Instance {
    pub ring: RingSpec,
    pub degree: usize,
    pub coeffs: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceResult {
    pub instance: Instance,
    pub psi: BigInt,
    pub discr: BigInt,
    pub conditions: [bool; 4],
    pub levels: Vec<bool>,
    pub invariant_generators: usize,
    pub consistent: bool,
    /// Every computed invariant `F` has `2F, ΨF ∈ k`.
    pub scalar_multiples_ok: bool,
    /// For `n = 2`, every invariant has the form `c + bξ_1` with `2b = Ψb = 0`.
    pub quadratic_form_ok: bool,
    pub roots_distinct: bool,
    /// `n = 2`, `a_1 = 0` and `2 = 0` in `k`.
    pub roots_should_coincide: bool,
    /// Trivial `S_n`-invariants although condition (ii) fails.
    pub gap_witness: bool,
}

impl InstanceResult {
    pub fn all_ok(&self) -> bool {
        self.consistent
            && self.scalar_multiples_ok
            && self.quadratic_form_ok
            && self.roots_distinct != self.roots_should_coincide
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub instances: usize,
    pub condition_true: usize,
    pub condition_false: usize,
    pub equivalence_violations: usize,
    pub scalar_multiple_violations: usize,
    pub quadratic_form_violations: usize,
    pub distinct_roots_violations: usize,
    pub gap_witnesses: usize,
}

impl SweepSummary {
    pub fn from_results(results: &[InstanceResult]) -> Self {
        let mut s = SweepSummary {
            instances: results.len(),
            ..Default::default()
        };
        for r in results {
            if r.consistent {
                if r.conditions[0] {
                    s.condition_true += 1;
                } else {
                    s.condition_false += 1;
                }
            } else {
                s.equivalence_violations += 1;
            }
            s.scalar_multiple_violations += usize::from(!r.scalar_multiples_ok);
            s.quadratic_form_violations += usize::from(!r.quadratic_form_ok);
            s.distinct_roots_violations += usize::from(r.roots_distinct == r.roots_should_coincide);
            s.gap_witnesses += usize::from(r.gap_witness);
        }
        s
    }

    pub fn violations(&self) -> usize {
        self.equivalence_violations
            + self.scalar_multiple_violations
            + self.quadratic_form_violations
            + self.distinct_roots_violations
    }
}

/// Every monic polynomial of degree `n` over `Z/m`, coefficients in lexicographic order.
pub fn all_monic(m: u64, n: usize) -> Vec<Vec<BigInt>> {
    let total = (m as usize).pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut c = vec![BigInt::from(0); n + 1];
            c[0] = BigInt::from(1);
            for slot in c[1..].iter_mut().rev() {
                *slot = BigInt::from(code % m as usize);
                code /= m as usize;
            }
            c
        })
        .collect()
}

/// `count` monic polynomials of degree `n` with coefficients drawn from `[-bound, bound]`,
/// reduced into `ring`.
pub fn sample_monic(ring: RingSpec, n: usize, count: usize, bound: i64, rng: &mut ChaCha8Rng) -> Vec<Vec<BigInt>> {
    (0..count)
        .map(|_| {
            let mut c = vec![BigInt::from(1)];
            for _ in 0..n {
                let a = rng.gen_range(-bound..=bound);
                c.push(ring.elem(a).value().clone());
            }
            c
        })
        .collect()
}

/// The instances of a sweep, sorted and without duplicates.
pub fn instances(cfg: &SweepConfig) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    for &ring in &cfg.rings {
        for &n in &cfg.degrees {
            let polys = match ring.modulus() {
                Some(m) if cfg.all_polys => all_monic(m, n),
                _ => sample_monic(ring, n, cfg.samples, cfg.coeff_bound, &mut rng),
            };
            out.extend(polys.into_iter().map(|coeffs| Instance {
                ring,
                degree: n,
                coeffs,
            }));
        }
    }
    out.sort();
    out.dedup();
    out
}

fn evaluate<R: LinearRing>(ring: R, inst: &Instance, cap: usize) -> Result<InstanceResult> {
    let poly = MonicPoly::from_bigints(ring.clone(), &inst.coeffs)?;
    let (ctx, rep) = check_conditions(&poly, cap)?;
    let mut scalar_multiples_ok = true;
    let mut quadratic_form_ok = true;
    for f in &rep.invariant_basis {
        scalar_multiples_ok &= check_scalar_multiples(&ctx, f)?;
        if inst.degree == 2 {
            quadratic_form_ok &= check_quadratic_form(&ctx, f)?;
        }
    }
    let two_is_zero = ring.is_zero(&ring.from_i64(2));
    Ok(InstanceResult {
        instance: inst.clone(),
        psi: ring.lift(&rep.psi),
        discr: ring.lift(&rep.discr),
        conditions: rep.conditions(),
        levels: rep.levels.clone(),
        invariant_generators: rep.invariant_basis.len(),
        consistent: rep.consistent(),
        scalar_multiples_ok,
        quadratic_form_ok,
        roots_distinct: ctx.roots_pairwise_distinct()?,
        roots_should_coincide: inst.degree == 2 && ring.is_zero(&poly.coeffs()[1]) && two_is_zero,
        gap_witness: rep.is_gap_witness(),
    })
}

/// Evaluates one instance.
pub fn run_instance(inst: &Instance, cap: usize) -> Result<InstanceResult> {
    with_ring!(inst.ring, r => evaluate(r, inst, cap))
}

/// Runs every instance, on `cfg.jobs` threads, and returns results in instance order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<(Vec<InstanceResult>, SweepSummary)> {
    let insts = instances(cfg);
    let jobs = cfg.jobs.max(1).min(insts.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<InstanceResult>>>> = Mutex::new((0..insts.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= insts.len() {
                    break;
                }
                let r = run_instance(&insts[i], cfg.cap);
                slots.lock().expect("worker panicked")[i] = Some(r);
            });
        }
    });
    let results = slots
        .into_inner()
        .map_err(|_| Error::Internal("worker panicked".into()))?
        .into_iter()
        .map(|r| r.unwrap_or_else(|| Err(Error::Internal("instance not evaluated".into()))))
        .collect::<Result<Vec<_>>>()?;
    let summary = SweepSummary::from_results(&results);
    Ok((results, summary))
}
