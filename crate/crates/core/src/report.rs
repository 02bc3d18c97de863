//! JSON reports. Every document carries `"schema": "splitalg.report/v1"`; integers
//! are emitted as exact JSON numbers of arbitrary size.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::Result;
use crate::invariants::{InvariantReport, SubalgebraReport};
use crate::linalg::LinearRing;
use crate::perm::SubgroupSpec;
use crate::poly::MonicPoly;
use crate::ring::{signed_lift, Ring};
use crate::selftest::CheckOutcome;
use crate::split::{SplitContext, SplitElement};
use crate::sweep::{InstanceResult, SweepConfig, SweepSummary};
use crate::symmetric;

pub const SCHEMA: &str = "splitalg.report/v1";

/// Exact JSON number for an integer.
pub fn int(v: &BigInt) -> Value {
    serde_json::from_str(&v.to_string()).expect("integer literal is valid JSON")
}

/// Ring element as its symmetric representative (`-1` rather than `m - 1`).
pub fn elem<R: Ring>(ring: &R, v: &R::Elem) -> Value {
    int(&signed_lift(ring.spec(), &ring.lift(v)))
}

fn poly_value<R: Ring>(p: &MonicPoly<R>) -> Value {
    Value::Array(p.lifted_coeffs().iter().map(int).collect())
}

/// `[[exponents], coefficient]` pairs for the nonzero terms, in basis order.
pub fn element<R: Ring>(ctx: &SplitContext<R>, x: &SplitElement<R>) -> Value {
    Value::Array(
        ctx.terms(x)
            .into_iter()
            .map(|(m, c)| json!([m.exponents(), elem(ctx.ring(), &c)]))
            .collect(),
    )
}

fn elements<R: Ring>(ctx: &SplitContext<R>, xs: &[SplitElement<R>]) -> Value {
    Value::Array(xs.iter().map(|x| element(ctx, x)).collect())
}

fn document(command: &str, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    if let Value::Object(b) = body {
        m.extend(b);
    }
    Value::Object(m)
}

/// Monomial basis of `Split^r`.
pub fn basis<R: Ring>(ctx: &SplitContext<R>, level: usize) -> Value {
    let basis: Vec<Value> = ctx
        .basis(level)
        .iter()
        .map(|m| json!(m.exponents()))
        .collect();
    document(
        "basis",
        json!({
            "ring": ctx.ring().spec().to_string(),
            "poly": poly_value(ctx.poly()),
            "level": level,
            "rank": ctx.rank(level),
            "basis": basis,
            "factorization_verified": ctx.verify_factorization().unwrap_or(false),
        }),
    )
}

/// `Ψ` and `Discr` of `p`; `agree` compares the determinant with the product in `Split^n`.
pub fn psi_discr<R: Ring>(command: &str, poly: &MonicPoly<R>) -> Result<(Value, bool)> {
    let ring = poly.ring();
    let ctx = SplitContext::build(poly, poly.degree())?;
    let det = symmetric::psi_det(poly);
    let prod = symmetric::psi_product(&ctx)?.value;
    let discr = symmetric::discriminant(&ctx)?.value;
    let agree = det == prod;
    let doc = document(
        command,
        json!({
            "ring": ring.spec().to_string(),
            "poly": poly_value(poly),
            "psi_det": elem(ring, &det),
            "psi_product": elem(ring, &prod),
            "discr": elem(ring, &discr),
            "agree": agree,
        }),
    );
    Ok((doc, agree))
}

/// Fixed submodule of a subgroup, with the independent `permute` check.
pub fn invariants<R: LinearRing>(
    ctx: &SplitContext<R>,
    group: &SubgroupSpec,
    fixed: &[SplitElement<R>],
    verified: bool,
) -> Value {
    let gens: Vec<Vec<usize>> = group
        .generators
        .iter()
        .map(|g| g.images_one_based())
        .collect();
    document(
        "invariants",
        json!({
            "ring": ctx.ring().spec().to_string(),
            "poly": poly_value(ctx.poly()),
            "subgroup": group.name,
            "generators": gens,
            "invariant_basis": elements(ctx, fixed),
            "verified_by_permute": verified,
        }),
    )
}

pub fn conditions<R: Ring>(ctx: &SplitContext<R>, rep: &InvariantReport<R>) -> Value {
    let ring = ctx.ring();
    document(
        "check",
        json!({
            "ring": ring.spec().to_string(),
            "poly": poly_value(&rep.poly),
            "psi": elem(ring, &rep.psi),
            "discr": elem(ring, &rep.discr),
            "condition_i": rep.condition_i,
            "condition_ii": rep.condition_ii,
            "condition_iii": rep.condition_iii,
            "condition_iv": rep.condition_iv,
            "levels": rep.levels,
            "consistent": rep.consistent(),
            "invariant_basis": elements(ctx, &rep.invariant_basis),
            "expected_basis": elements(ctx, &rep.expected_basis),
        }),
    )
}

/// `e_1..e_r` subalgebra; the comparison with the `S_r`-invariants is present only
/// when its hypothesis holds, otherwise `skipped` says why.
pub fn fact<R: Ring>(
    ctx: &SplitContext<R>,
    r: usize,
    fact: &[SplitElement<R>],
    subalgebra: Option<&SubalgebraReport<R>>,
    skipped: Option<&str>,
) -> Value {
    let mut body = json!({
        "ring": ctx.ring().spec().to_string(),
        "poly": poly_value(ctx.poly()),
        "level": r,
        "rank": fact.len(),
        "fact_basis": elements(ctx, fact),
    });
    match subalgebra {
        Some(rep) => {
            body["invariant_basis"] = elements(ctx, &rep.invariants);
            body["equal"] = json!(rep.holds);
        }
        None => {
            body["equal"] = Value::Null;
            body["skipped"] = json!(skipped.unwrap_or(""));
        }
    }
    document("fact", body)
}

fn instance_value(r: &InstanceResult) -> Value {
    json!({
        "ring": r.instance.ring.to_string(),
        "poly": r.instance.coeffs.iter().map(int).collect::<Vec<_>>(),
        "psi": int(&signed_lift(r.instance.ring, &r.psi)),
        "discr": int(&signed_lift(r.instance.ring, &r.discr)),
        "conditions": r.conditions,
        "levels": r.levels,
        "invariant_generators": r.invariant_generators,
        "consistent": r.consistent,
        "scalar_multiples_ok": r.scalar_multiples_ok,
        "quadratic_form_ok": r.quadratic_form_ok,
        "roots_distinct": r.roots_distinct,
    })
}

/// Sweep summary; lists only the instances that violate a check or are gap witnesses,
/// unless `full` is set.
pub fn sweep(cfg: &SweepConfig, results: &[InstanceResult], summary: &SweepSummary, full: bool) -> Value {
    let violations: Vec<Value> = results.iter().filter(|r| !r.all_ok()).map(instance_value).collect();
    let witnesses: Vec<Value> = results
        .iter()
        .filter(|r| r.gap_witness)
        .map(instance_value)
        .collect();
    let mut body = json!({
        "rings": cfg.rings.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "degrees": cfg.degrees,
        "all_polys": cfg.all_polys,
        "seed": cfg.seed,
        "summary": {
            "instances": summary.instances,
            "condition_true": summary.condition_true,
            "condition_false": summary.condition_false,
            "equivalence_violations": summary.equivalence_violations,
            "scalar_multiple_violations": summary.scalar_multiple_violations,
            "quadratic_form_violations": summary.quadratic_form_violations,
            "distinct_roots_violations": summary.distinct_roots_violations,
            "gap_witnesses": summary.gap_witnesses,
        },
        "violations": violations,
        "gap_witnesses": witnesses,
    });
    if full {
        body["instances"] = Value::Array(results.iter().map(instance_value).collect());
    }
    document("sweep", body)
}

pub fn selftest(outcomes: &[CheckOutcome]) -> Value {
    let checks: Vec<Value> = outcomes
        .iter()
        .map(|o| json!({"name": o.name, "passed": o.passed, "detail": o.detail}))
        .collect();
    document(
        "selftest",
        json!({
            "passed": outcomes.iter().filter(|o| o.passed).count(),
            "failed": outcomes.iter().filter(|o| !o.passed).count(),
            "checks": checks,
        }),
    )
}

/// Error document, printed alongside a nonzero exit code.
pub fn error(command: &str, message: &str) -> Value {
    document(command, json!({ "error": message }))
}
