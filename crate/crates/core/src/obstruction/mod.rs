//! Decides whether a slope pair `m/n`, `m/n′` on a cable knot `K_{p,q}`
//! can be chirally cosmetic, i.e. `S³_{K_{p,q}}(m/n) ≅ −S³_{K_{p,q}}(m/n′)`.
//!
//! Pairs fall into four cases by `(|npq − m|, |n′pq − m|)`; each case has
//! its own argument, recorded step by step in an [`ObstructionReport`].

mod claims;
mod report;

pub use claims::{
    claim1_certificate, claim_a_analyze, claim_b_analyze, Claim1Certificate, ClaimOutcome,
    Obligation,
};
pub use report::{ObstructionReport, TrailStep, Verdict};

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::alexander::{a2_of, alexander_of, lspace_form};
use crate::arith::{int, Int};
use crate::error::{Error, Result};
use crate::invariants::cw_pair_test;
use crate::surgery::{describe_cable_surgery, Slope};
use crate::topo::{
    jsj_contains, jsj_find, jsj_graph, Containment, JsjPiece, KnotExpr, PiecePattern, TorusType,
};
use report::Trail;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseId {
    /// One of the surgeries is reducible.
    Case1,
    /// Both are surgeries on the companion.
    Case2,
    /// Exactly one is a surgery on the companion.
    Case3,
    /// Both contain the Seifert piece `P_{p,q,m,·}`.
    Case4,
}

impl CaseId {
    pub fn label(self) -> &'static str {
        match self {
            CaseId::Case1 => "case1",
            CaseId::Case2 => "case2",
            CaseId::Case3 => "case3",
            CaseId::Case4 => "case4",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn check_cable_params(p: i64, q: i64) -> Result<()> {
    if q < 2 {
        return Err(Error::WrappingTooSmall(int(q)));
    }
    if !p.gcd(&q).is_one() {
        return Err(Error::NotCoprime(int(p), int(q)));
    }
    Ok(())
}

fn check_pair_params(p: i64, q: i64, m: i64, n: i64, n_prime: i64) -> Result<()> {
    check_cable_params(p, q)?;
    if m == 0 {
        return Err(Error::ZeroSurgery("chirally cosmetic pairs need m ≠ 0"));
    }
    if m < 0 {
        return Err(Error::NegativeSurgery(int(m)));
    }
    if n < 1 || n_prime < 1 {
        return Err(Error::pre(format!(
            "n, n′ ≥ 1 (got n = {n}, n′ = {n_prime})"
        )));
    }
    if n == n_prime {
        return Err(Error::pre(format!("n ≠ n′ (got n = n′ = {n})")));
    }
    for k in [n, n_prime] {
        if !m.gcd(&k).is_one() {
            return Err(Error::NotCoprime(int(m), int(k)));
        }
    }
    Ok(())
}

fn offsets(p: i64, q: i64, m: i64, n: i64, n_prime: i64) -> (Int, Int) {
    let pq = int(p) * int(q);
    (int(n) * &pq - int(m), int(n_prime) * pq - int(m))
}

/// The case of the pair, from `|npq − m|` and `|n′pq − m|`.
pub fn classify_case(p: i64, q: i64, m: i64, n: i64, n_prime: i64) -> Result<CaseId> {
    check_cable_params(p, q)?;
    if n == n_prime {
        return Err(Error::pre(format!("n ≠ n′ (got n = n′ = {n})")));
    }
    let (c, c_prime) = offsets(p, q, m, n, n_prime);
    let (c, c_prime) = (c.abs(), c_prime.abs());
    Ok(if c.is_zero() || c_prime.is_zero() {
        CaseId::Case1
    } else if c.is_one() && c_prime.is_one() {
        CaseId::Case2
    } else if c.is_one() || c_prime.is_one() {
        CaseId::Case3
    } else {
        CaseId::Case4
    })
}

/// `a₂(K)`, or `None` when an opaque companion does not declare it.
fn optional_a2(knot: &KnotExpr) -> Result<Option<Int>> {
    match a2_of(knot) {
        Ok(a2) => Ok(Some(a2)),
        Err(Error::MissingOpaqueData { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn piece_label(piece: &JsjPiece) -> String {
    match piece {
        JsjPiece::TorusExterior(t) => format!("torus_ext{t}"),
        other => other.to_string(),
    }
}

fn a2_json(a2: &Option<Int>) -> Value {
    a2.as_ref()
        .map_or(Value::Null, |v| Value::String(v.to_string()))
}

/// Options shared by the checks.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckOptions {
    pub containment: Containment,
}

/// Checks one pair `m/n`, `m/n′` on `K_{p,q}`.
pub fn check_pair(
    knot: &KnotExpr,
    p: i64,
    q: i64,
    m: i64,
    n: i64,
    n_prime: i64,
) -> Result<ObstructionReport> {
    check_pair_with(knot, p, q, m, n, n_prime, CheckOptions::default())
}

pub fn check_pair_with(
    knot: &KnotExpr,
    p: i64,
    q: i64,
    m: i64,
    n: i64,
    n_prime: i64,
    opts: CheckOptions,
) -> Result<ObstructionReport> {
    if knot.is_unknot() {
        return Err(Error::TrivialCompanion);
    }
    check_pair_params(p, q, m, n, n_prime)?;
    let case = classify_case(p, q, m, n, n_prime)?;
    let (c, c_prime) = offsets(p, q, m, n, n_prime);
    let mut trail = Trail::default();
    trail.push(
        "classify",
        "surgery on a cable splits by |npq − m|: 0 reducible, 1 companion surgery, > 1 graph manifold",
        json!({
            "case": case.label(),
            "npq-m": c.to_string(),
            "n'pq-m": c_prime.to_string(),
        }),
    );
    match case {
        CaseId::Case1 => case1(&mut trail, p, q, m, n, n_prime, &c),
        CaseId::Case2 => case2(&mut trail, knot, q, m, n, n_prime, &c),
        CaseId::Case3 => case3(&mut trail, knot, p, q, m, n, n_prime, &c),
        CaseId::Case4 => case4(&mut trail, knot, p, q, m, n, n_prime, opts),
    }
    .map(|(verdict, fired)| trail.finish(verdict, Some(fired)))
}

type Decision = Result<(Verdict, &'static str)>;

fn case1(trail: &mut Trail, p: i64, q: i64, m: i64, n: i64, n_prime: i64, c: &Int) -> Decision {
    let (reducible, other) = if c.is_zero() {
        (n, n_prime)
    } else {
        (n_prime, n)
    };
    let description = describe_cable_surgery(&int(p), &int(q), &Slope::new(m, reducible)?)?;
    trail.push(
        "case1",
        "a reducible manifold is not homeomorphic to an irreducible one",
        json!({
            "reducible": format!("{m}/{reducible}"),
            "description": description.to_string(),
            "irreducible": format!("{m}/{other}"),
        }),
    );
    Ok((Verdict::Obstructed, "case1"))
}

/// Both slopes become `m/(4n)`, `m/(4n′)` on `K`. Equal Casson–Walker
/// values up to sign force `a₂(K) = 0`, while both slopes being positive
/// makes `K` an L-space knot, which forces `a₂(K) ≠ 0`.
fn case2(
    trail: &mut Trail,
    knot: &KnotExpr,
    q: i64,
    m: i64,
    n: i64,
    n_prime: i64,
    c: &Int,
) -> Decision {
    let q2 = int(q) * int(q);
    let (k, k_prime) = (int(n) * &q2, int(n_prime) * &q2);
    trail.push(
        "companion-slopes",
        "|npq − m| = 1 turns m/n on K_{p,q} into m/(nq²) on K",
        json!({
            "slopes": [format!("{m}/{k}"), format!("{m}/{k_prime}")],
            "sign_of_npq-m": c.signum().to_string(),
        }),
    );
    let a2 = optional_a2(knot)?;
    match &a2 {
        Some(a2) => {
            let passes = cw_pair_test(a2, &int(m), &k, &k_prime)?;
            trail.push(
                "casson-walker",
                "λ(S³_K(m/k)) = −λ(S³_K(m/k′)) is required; the Dedekind parts cancel",
                json!({ "a2": a2.to_string(), "passes": passes }),
            );
            if !passes {
                return Ok((Verdict::Obstructed, "case2"));
            }
        }
        None => trail.push(
            "casson-walker",
            "λ(S³_K(m/k)) = −λ(S³_K(m/k′)) is required; the Dedekind parts cancel",
            json!({ "a2": null, "forces": "a2 = 0" }),
        ),
    }
    let lspace = match alexander_of(knot) {
        Ok(poly) => json!(lspace_form(&poly)?.passes()),
        Err(Error::MissingOpaqueData { .. }) => Value::Null,
        Err(e) => return Err(e),
    };
    trail.push(
        "l-space",
        "two positive slopes with homeomorphic results make K an L-space knot, and nontrivial L-space knots have a₂ ≠ 0",
        json!({ "alexander_lspace_form": lspace, "contradiction": "a2 = 0 and a2 ≠ 0" }),
    );
    Ok((Verdict::Obstructed, "case2"))
}

#[allow(clippy::too_many_arguments)]
fn case3(
    trail: &mut Trail,
    knot: &KnotExpr,
    p: i64,
    q: i64,
    m: i64,
    n: i64,
    n_prime: i64,
    c: &Int,
) -> Decision {
    let (companion_side, graph_side) = if c.abs().is_one() {
        (n, n_prime)
    } else {
        (n_prime, n)
    };
    let outermost = match jsj_graph(knot) {
        Ok(g) => g.outermost().cloned(),
        Err(Error::MissingOpaqueData { .. }) => None,
        Err(e) => return Err(e),
    };
    let (kind, reference) = match &outermost {
        Some(JsjPiece::Hyperbolic(_)) => (
            "hyperbolic",
            "simplicial volume strictly drops under the companion filling but not under the graph gluing",
        ),
        Some(_) => (
            "seifert",
            "the companion surgery has at most k essential tori, the graph manifold has k + 1",
        ),
        None => (
            "undeclared",
            "either simplicial volume or the essential torus count separates the two manifolds",
        ),
    };
    let graph = describe_cable_surgery(&int(p), &int(q), &Slope::new(m, graph_side)?)?;
    trail.push(
        "case3",
        reference,
        json!({
            "outermost_piece": kind,
            "companion_surgery": format!("{m}/{companion_side}"),
            "graph_manifold": graph.to_string(),
        }),
    );
    Ok((Verdict::Obstructed, "case3"))
}

/// Whether `K_{p,q}` is ruled out as an L-space knot by its Alexander
/// polynomial. `None` when the polynomial is not available.
fn cable_is_lspace_candidate(knot: &KnotExpr, p: i64, q: i64) -> Result<Option<bool>> {
    let cable = KnotExpr::cable(knot.clone(), p, q)?;
    match alexander_of(&cable) {
        Ok(poly) => Ok(Some(lspace_form(&poly)?.passes())),
        Err(Error::MissingOpaqueData { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

#[allow(clippy::too_many_arguments)]
fn case4(
    trail: &mut Trail,
    knot: &KnotExpr,
    p: i64,
    q: i64,
    m: i64,
    n: i64,
    n_prime: i64,
    opts: CheckOptions,
) -> Decision {
    let graph = jsj_graph(knot)?;
    let a2 = optional_a2(knot)?;
    trail.push(
        "jsj",
        "JSJ pieces of E(K), innermost first",
        json!({ "pieces": graph.to_string(), "a2": a2_json(&a2) }),
    );

    let cert = claim1_certificate(p, q)?;
    trail.push(
        "claim1",
        "an orientation-reversing map P → P′ must invert the fiber, which the outer-torus bases forbid",
        cert.to_json(),
    );

    let mut open = Vec::new();

    let outcome = claim_a_analyze(p, q, m, n, n_prime)?;
    let mut data = outcome.to_json();
    if let Some(o) = outcome.obligation() {
        let piece = jsj_find(
            &graph,
            &PiecePattern::TorusExterior(o.torus_piece.clone()),
            opts.containment,
        );
        let lspace = cable_is_lspace_candidate(knot, p, q)?;
        data["piece_found"] = json!(piece.map(piece_label));
        data["cable_alexander_lspace_form"] = json!(lspace);
        if let (Some(piece), true) = (piece, lspace != Some(false)) {
            open.push(("claim_a", piece_label(piece)));
        }
    }
    trail.push(
        "claim-a",
        "a piece ≅ −P sent onto −P′ must be a (−p,2)-torus exterior and K_{p,q} an L-space knot",
        data,
    );

    let outcome = claim_b_analyze(p, q, m, n, n_prime)?;
    let mut data = outcome.to_json();
    if let Some(o) = outcome.obligation() {
        let piece = jsj_find(
            &graph,
            &PiecePattern::TorusExterior(o.torus_piece.clone()),
            opts.containment,
        );
        data["piece_found"] = json!(piece.map(piece_label));
        if let (Some(piece), true) = (piece, a2.as_ref().is_none_or(Zero::is_zero)) {
            open.push(("claim_b", piece_label(piece)));
        }
    }
    trail.push(
        "claim-b",
        "a piece ≅ P sent onto −P′ needs q = 2, p = ±1, a₂(K) = 0 and a (±(n − n′),2)-torus exterior",
        data,
    );

    if open.is_empty() {
        trail.push(
            "infinite-jsj",
            "with every matching blocked, E(K) would need infinitely many JSJ pieces",
            Value::Null,
        );
        Ok((Verdict::Obstructed, "case4"))
    } else {
        for (claim, piece) in open {
            trail.witness(claim, json!({ "piece": piece }));
        }
        Ok((Verdict::Inconclusive, "case4"))
    }
}

/// Checks the four sufficient conditions that rule out every pair on
/// `K_{p,q}`:
///
/// 1. `q ≠ 2`;
/// 2. `q = 2`, `p ≠ ±1` and `E(K)` has no `(−p,2)`-torus exterior piece;
/// 3. `q = 2`, `p = ±1` and `E(K)` has no `(r,2)`-torus exterior piece;
/// 4. `q = 2`, `p = ±1` and `a₂(K) ≠ 0`.
pub fn check_theorem1(knot: &KnotExpr, p: i64, q: i64) -> Result<ObstructionReport> {
    check_theorem1_with(knot, p, q, CheckOptions::default())
}

pub fn check_theorem1_with(
    knot: &KnotExpr,
    p: i64,
    q: i64,
    opts: CheckOptions,
) -> Result<ObstructionReport> {
    if knot.is_unknot() {
        return Err(Error::TrivialCompanion);
    }
    check_cable_params(p, q)?;
    let mut trail = Trail::default();
    let obstructed = |mut trail: Trail, label: &str, reference: &str, data: Value| {
        trail.push(label, reference, data);
        Ok(trail.finish(Verdict::Obstructed, Some(label)))
    };
    if q != 2 {
        return obstructed(trail, "i", "q ≠ 2", json!({ "q": q }));
    }
    let graph = jsj_graph(knot)?;
    let pieces = graph.to_string();
    if p.abs() != 1 {
        let target = TorusType::new(-p, 2)?;
        let pattern = PiecePattern::TorusExterior(target.clone());
        if !jsj_contains(&graph, &pattern, opts.containment) {
            return obstructed(
                trail,
                "ii",
                "q = 2, p ≠ ±1 and E(K) has no (−p,2)-torus exterior piece",
                json!({ "needed": format!("torus_ext{target}"), "pieces": pieces }),
            );
        }
        trail.push(
            "ii",
            "E(K) contains the (−p,2)-torus exterior, so condition ii fails",
            json!({ "found": format!("torus_ext{target}"), "pieces": pieces }),
        );
        return Ok(trail.finish(Verdict::Inconclusive, None));
    }
    if !jsj_contains(&graph, &PiecePattern::TwoTorusFamily, opts.containment) {
        return obstructed(
            trail,
            "iii",
            "q = 2, p = ±1 and E(K) has no (r,2)-torus exterior piece",
            json!({ "pieces": pieces }),
        );
    }
    trail.push(
        "iii",
        "E(K) contains an (r,2)-torus exterior, so condition iii fails",
        json!({ "pieces": pieces }),
    );
    match optional_a2(knot)? {
        Some(a2) if !a2.is_zero() => obstructed(
            trail,
            "iv",
            "q = 2, p = ±1 and a₂(K) ≠ 0",
            json!({ "a2": a2.to_string() }),
        ),
        a2 => {
            trail.push(
                "iv",
                "a₂(K) is zero or undeclared, so condition iv cannot fire",
                json!({ "a2": a2_json(&a2) }),
            );
            Ok(trail.finish(Verdict::Inconclusive, None))
        }
    }
}

/// `true` iff all entries share one sign; `[]` is vacuously true.
pub fn hom_sign_check(ps: &[Int]) -> Result<bool> {
    if ps.iter().any(Zero::is_zero) {
        return Err(Error::pre("hom_sign_check needs nonzero entries"));
    }
    Ok(ps
        .windows(2)
        .all(|w| w[0].is_positive() == w[1].is_positive()))
}

/// Unrolls torus and cable layers so that the base is the unknot or an
/// opaque knot, prepending the peeled parameters.
fn flatten_base(params: &[(i64, i64)], base: &KnotExpr) -> (Vec<(i64, i64)>, KnotExpr) {
    let mut prefix = Vec::new();
    let mut k = base.clone();
    loop {
        match k {
            KnotExpr::Cable { companion, p, q } => {
                prefix.push((p, q));
                k = *companion;
            }
            KnotExpr::Torus { p, q } => {
                prefix.push((p, q));
                k = KnotExpr::Unknot;
            }
            other => {
                prefix.reverse();
                prefix.extend_from_slice(params);
                return (prefix, other);
            }
        }
    }
}

/// Checks the iterated cable `K_{(p₁,q₁),…,(p_N,q_N)}` of a non-satellite
/// base `K` (the unknot or a hyperbolic knot).
pub fn check_iterated(params: &[(i64, i64)], base: &KnotExpr) -> Result<ObstructionReport> {
    let (params, base) = flatten_base(params, base);
    let Some(&(p, q)) = params.last() else {
        return Err(Error::pre("at least one cabling parameter (p,q)"));
    };
    for &(pi, qi) in &params {
        check_cable_params(pi, qi)?;
    }
    let listed: Vec<String> = params.iter().map(|(a, b)| format!("({a},{b})")).collect();
    let mut trail = Trail::default();
    trail.push(
        "iterated",
        "iterated cable of a non-satellite base",
        json!({ "base": base.to_string(), "params": listed }),
    );

    match &base {
        KnotExpr::Opaque(o) => {
            let graph = jsj_graph(&base)?;
            if graph.pieces != [JsjPiece::Hyperbolic(o.name.clone())] {
                return Err(Error::pre(format!(
                    "base must be hyperbolic or the unknot (got JSJ {graph})"
                )));
            }
            let companion = params[..params.len() - 1]
                .iter()
                .try_fold(base.clone(), |k, &(a, b)| KnotExpr::cable(k, a, b))?;
            trail.push(
                "hyperbolic-base",
                "E(K*) has no torus-knot exterior piece, so the single-cable conditions apply",
                json!({ "companion": companion.to_string(), "p": p, "q": q }),
            );
            let inner = check_theorem1(&companion, p, q)?;
            let (verdict, fired) = (inner.verdict, inner.fired.clone());
            trail.extend(inner);
            Ok(trail.finish(verdict, fired.as_deref()))
        }
        KnotExpr::Unknot => iterated_torus(trail, &params),
        other => Err(Error::pre(format!(
            "base must be hyperbolic or the unknot (got {other})"
        ))),
    }
}

fn iterated_torus(mut trail: Trail, params: &[(i64, i64)]) -> Result<ObstructionReport> {
    let (p1, q1) = params[0];
    if p1.abs() < 2 {
        return Err(Error::pre(format!(
            "|p₁| ≥ 2 for an unknot base (got p₁ = {p1}); the first layer must be a torus knot"
        )));
    }
    let first = TorusType::new(p1, q1)?;
    if params.len() == 1 {
        let t = format!("T{first}");
        if first.has_multiplicity_two() {
            trail.push(
                "known-family",
                "(2,r)-torus knots carry the chirally cosmetic family 2r²(2k+1)/(r(2k+1) ± 1)",
                json!({ "torus_knot": t }),
            );
            return Ok(trail.finish(Verdict::KnownFamily, Some("known-family")));
        }
        trail.push(
            "known-classification",
            "chirally cosmetic surgeries on torus knots are classified; only (2,r)-torus knots admit them",
            json!({ "torus_knot": t }),
        );
        return Ok(trail.finish(Verdict::Obstructed, Some("known-classification")));
    }

    let (p, q) = *params.last().expect("nonempty");
    trail.push(
        "cases-1-3",
        "Cases 1–3 are excluded for every cable, leaving |npq − m|, |n′pq − m| > 1",
        Value::Null,
    );
    let cert = claim1_certificate(p, q)?;
    trail.push(
        "claim1",
        "P cannot map onto −P′, so it maps to the only one-boundary piece −E(T_{p₁,q₁})",
        cert.to_json(),
    );
    let needed = if q == 2 {
        TorusType::new(-p, 2).ok()
    } else {
        None
    };
    if needed.as_ref() != Some(&first) {
        trail.push(
            "claim-a",
            "E(T_{p₁,q₁}) must be sent onto −P′, forcing q = 2 and (p₁,q₁) = (−p,2)",
            json!({
                "first_layer": format!("T{first}"),
                "needed": needed.map(|t| format!("T{t}")),
            }),
        );
        return Ok(trail.finish(Verdict::Obstructed, Some("claim-a")));
    }
    let mut signs = vec![first.p().clone()];
    signs.extend(params[1..].iter().map(|&(pi, _)| int(pi)));
    let same = hom_sign_check(&signs)?;
    let listed: Vec<String> = signs.iter().map(|s| s.to_string()).collect();
    trail.push(
        "claim-a",
        "E(T_{p₁,q₁}) is the (−p,2)-torus exterior and the knot must be an L-space knot",
        json!({ "first_layer": format!("T{first}") }),
    );
    trail.push(
        "hom-sign",
        "an iterated torus knot is an L-space knot only if all its cabling parameters share one sign",
        json!({ "signs": listed, "same_sign": same }),
    );
    if same {
        return Err(Error::Inconsistent("p₁ = −p yet all signs agree".into()));
    }
    Ok(trail.finish(Verdict::Obstructed, Some("hom-sign")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knot(s: &str) -> KnotExpr {
        s.parse().unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_case(3, 2, 6, 1, 2).unwrap(), CaseId::Case1);
        assert_eq!(classify_case(1, 2, 3, 2, 1).unwrap(), CaseId::Case2);
        assert_eq!(classify_case(3, 2, 1, 1, 2).unwrap(), CaseId::Case4);
        assert_eq!(classify_case(3, 2, 13, 2, 3).unwrap(), CaseId::Case3);
        assert!(classify_case(3, 2, 13, 2, 2).is_err());
    }

    #[test]
    fn check_pair_examples() {
        let hyp = knot("opaque(k; a2=5; hyperbolic)");
        let r = check_pair(&hyp, 3, 2, 9, 2, 1).unwrap();
        assert_eq!(r.verdict, Verdict::Obstructed);
        assert_eq!(r.fired.as_deref(), Some("case4"));

        for (m, n, np) in [(1, 1, 2), (7, 4, 1), (31, 3, 2)] {
            let r = check_pair(&knot("torus(2,3)"), 5, 3, m, n, np).unwrap();
            assert!(r.is_obstructed(), "{m} {n} {np}: {r}");
        }

        let r = check_pair(&knot("torus(-2,3)"), 3, 2, 9, 2, 1).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
        assert_eq!(r.witnesses["claim_a"]["piece"], "torus_ext(-3,2)");
    }

    #[test]
    fn check_pair_cases_1_to_3() {
        let k = knot("torus(2,3)");
        assert_eq!(
            check_pair(&k, 3, 2, 6, 1, 5).unwrap().fired.as_deref(),
            Some("case1")
        );
        assert_eq!(
            check_pair(&k, 1, 2, 3, 2, 1).unwrap().fired.as_deref(),
            Some("case2")
        );
        assert_eq!(
            check_pair(&k, 3, 2, 13, 2, 3).unwrap().fired.as_deref(),
            Some("case3")
        );
        let unknown = knot("opaque(u; a2=0)");
        let r = check_pair(&unknown, 1, 2, 3, 2, 1).unwrap();
        assert!(r.is_obstructed());
    }

    #[test]
    fn check_pair_rejects() {
        assert_eq!(
            check_pair(&KnotExpr::Unknot, 3, 2, 9, 2, 1),
            Err(Error::TrivialCompanion)
        );
        let k = knot("torus(2,3)");
        assert!(matches!(
            check_pair(&k, 3, 2, -9, 2, 1),
            Err(Error::NegativeSurgery(_))
        ));
        assert!(check_pair(&k, 3, 2, 9, 2, 2).is_err());
        assert!(matches!(
            check_pair(&k, 3, 2, 9, 3, 1),
            Err(Error::NotCoprime(..))
        ));
    }

    #[test]
    fn theorem1_examples() {
        let r = check_theorem1(&knot("torus(2,3)"), 3, 5).unwrap();
        assert_eq!(
            (r.verdict, r.fired.as_deref()),
            (Verdict::Obstructed, Some("i"))
        );
        let r = check_theorem1(&knot("torus(2,3)"), 3, 2).unwrap();
        assert_eq!(
            (r.verdict, r.fired.as_deref()),
            (Verdict::Obstructed, Some("ii"))
        );
        let r = check_theorem1(&knot("torus(-2,3)"), 3, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
        let r = check_theorem1(&knot("opaque(h; hyperbolic)"), 1, 2).unwrap();
        assert_eq!(r.fired.as_deref(), Some("iii"));
        let r = check_theorem1(&knot("torus(2,3)"), 1, 2).unwrap();
        assert_eq!(r.fired.as_deref(), Some("iv"));
        let r = check_theorem1(&knot("opaque(x; a2=0; jsj=[torus_ext(3,2), hyp])"), -1, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn theorem1_unoriented_is_weaker() {
        let opts = CheckOptions {
            containment: Containment::Unoriented,
        };
        let r = check_theorem1_with(&knot("torus(2,3)"), 3, 2, opts).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn hom_sign_examples() {
        let v = |xs: &[i64]| xs.iter().map(|&x| int(x)).collect::<Vec<_>>();
        assert!(!hom_sign_check(&v(&[-3, 5, 2])).unwrap());
        assert!(hom_sign_check(&v(&[2, 3, 5])).unwrap());
        assert!(hom_sign_check(&[]).unwrap());
        assert!(hom_sign_check(&v(&[2, 0])).is_err());
    }

    #[test]
    fn iterated_examples() {
        let u = KnotExpr::Unknot;
        let r = check_iterated(&[(5, 3)], &u).unwrap();
        assert_eq!(
            (r.verdict, r.fired.as_deref()),
            (Verdict::Obstructed, Some("known-classification"))
        );
        assert_eq!(
            check_iterated(&[(2, 3)], &u).unwrap().verdict,
            Verdict::KnownFamily
        );
        let r = check_iterated(&[(2, 3), (3, 2)], &u).unwrap();
        assert_eq!(
            (r.verdict, r.fired.as_deref()),
            (Verdict::Obstructed, Some("claim-a"))
        );
        let r = check_iterated(&[(-2, 3), (3, 2)], &u).unwrap();
        assert_eq!(
            (r.verdict, r.fired.as_deref()),
            (Verdict::Obstructed, Some("hom-sign"))
        );
        let r = check_iterated(&[(3, 2)], &knot("torus(-2,3)")).unwrap();
        assert_eq!(r.fired.as_deref(), Some("hom-sign"));
        let r = check_iterated(&[(3, 2), (7, 2)], &knot("opaque(h; hyperbolic)")).unwrap();
        assert!(r.is_obstructed());
        assert!(check_iterated(&[(1, 2), (3, 2)], &u).is_err());
        assert!(check_iterated(&[(3, 2)], &knot("opaque(s; jsj=[torus_ext(3,2)])")).is_err());
    }

    #[test]
    fn report_json_round_trip() {
        let r = check_pair(&knot("torus(-2,3)"), 3, 2, 9, 2, 1).unwrap();
        let json = r.to_json();
        let back: ObstructionReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), json);
    }
}
