//! The three ways a homeomorphism `S³_{K_{p,q}}(m/n) → −S³_{K_{p,q}}(m/n′)`
//! could treat the distinguished piece `P = P_{p,q,m,n}`, and what each one
//! would force.
//!
//! Write `c = npq − m` and `c′ = n′pq − m`. When a torus-knot exterior
//! `E(T_{P,2}) = M(0,1; R/2, S/P)` is matched fiberwise with `P` or `−P′`,
//! comparing the `|c|`-fibers gives linear equations
//!
//! ```text
//! r·c + q·n  + q·i·c = ε        (both claims)
//! r·c − q·n′ + q·j·c = ε        (piece ≅ P′)
//! r·c + q·n′ + q·j·c = ε        (piece ≅ −P′)
//! ```
//!
//! in integers `i, j`, where `ε = ±1` records whether the torus exterior
//! is matched with `P = ε·c`. Each equation is a single divisibility test.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{bezout_rs, int, Int};
use crate::error::{Error, Result};
use crate::surgery::{cable_surgery_piece, Slope};
use crate::topo::{recognize_torus_exterior, TorusType};

/// A torus-exterior piece the companion would need, plus side conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obligation {
    pub torus_piece: TorusType,
    pub lspace_required: bool,
    pub a2_zero_required: bool,
    /// Orientation sign and the integer solution of the fiber equations.
    pub epsilon: i32,
    pub i: Int,
    pub j: Int,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimOutcome {
    Impossible { reason: String },
    Obligation(Obligation),
}

impl ClaimOutcome {
    fn impossible(reason: impl Into<String>) -> Self {
        ClaimOutcome::Impossible {
            reason: reason.into(),
        }
    }

    pub fn obligation(&self) -> Option<&Obligation> {
        match self {
            ClaimOutcome::Obligation(o) => Some(o),
            ClaimOutcome::Impossible { .. } => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ClaimOutcome::Impossible { reason } => {
                json!({ "outcome": "impossible", "reason": reason })
            }
            ClaimOutcome::Obligation(o) => json!({
                "outcome": "obligation",
                "torus_piece": o.torus_piece.to_string(),
                "lspace_required": o.lspace_required,
                "a2_zero_required": o.a2_zero_required,
                "epsilon": o.epsilon,
                "i": o.i.to_string(),
                "j": o.j.to_string(),
            }),
        }
    }
}

/// The linear system obtained by matching `P` with `−P′` directly.
///
/// Writing `f([c₂]) = x[c₂′] + y[h′]` and `f([h]) = −[h′]`, the meridian
/// equation `f(q[c₂] − r[h]) = −q[c₂′] + r[h′]` fixes `x = −1, y = 0`;
/// substituting into the longitude equation
/// `f(p[c₂] + s[h]) = p[c₂′] + s[h′]` leaves `residual = (−2p, −2s)`,
/// which is never zero because `pr + qs = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim1Certificate {
    pub p: Int,
    pub q: Int,
    pub r: Int,
    pub s: Int,
    pub x: Int,
    pub y: Int,
    pub residual: (Int, Int),
}

impl Claim1Certificate {
    pub fn is_inconsistent(&self) -> bool {
        !(self.residual.0.is_zero() && self.residual.1.is_zero())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "bezout": { "r": self.r.to_string(), "s": self.s.to_string() },
            "forced": { "x": self.x.to_string(), "y": self.y.to_string() },
            "residual": [self.residual.0.to_string(), self.residual.1.to_string()],
            "inconsistent": self.is_inconsistent(),
        })
    }
}

pub fn claim1_certificate(p: i64, q: i64) -> Result<Claim1Certificate> {
    let (p, q) = (int(p), int(q));
    let b = bezout_rs(&p, &q)?;
    // meridian equation: q·x = −q and q·y + r = r
    let (x, rem_x) = (-&q).div_rem(&q);
    let (y, rem_y) = Int::zero().div_rem(&q);
    debug_assert!(rem_x.is_zero() && rem_y.is_zero());
    // longitude: p·x[c₂′] + (p·y − s)[h′] against p[c₂′] + s[h′]
    let residual = (&p * &x - &p, &p * &y - &b.s - &b.s);
    let cert = Claim1Certificate {
        p,
        q,
        r: b.r,
        s: b.s,
        x,
        y,
        residual,
    };
    if !cert.is_inconsistent() {
        return Err(Error::Inconsistent(
            "direct P → −P′ matching became solvable".into(),
        ));
    }
    Ok(cert)
}

struct PairInts {
    p: Int,
    q: Int,
    m: Int,
    n: Int,
    n_prime: Int,
    c: Int,
    c_prime: Int,
    r: Int,
}

fn pair_ints(p: i64, q: i64, m: i64, n: i64, n_prime: i64) -> Result<PairInts> {
    let (p, q, m, n, n_prime) = (int(p), int(q), int(m), int(n), int(n_prime));
    let b = bezout_rs(&p, &q)?;
    if n == n_prime {
        return Err(Error::pre(format!("n ≠ n′ (got n = n′ = {n})")));
    }
    if !n.is_positive() || !n_prime.is_positive() {
        return Err(Error::pre(format!(
            "n, n′ ≥ 1 (got n = {n}, n′ = {n_prime})"
        )));
    }
    for k in [&n, &n_prime] {
        if !m.gcd(k).is_one() {
            return Err(Error::NotCoprime(m.clone(), k.clone()));
        }
    }
    let c = &n * &p * &q - &m;
    let c_prime = &n_prime * &p * &q - &m;
    Ok(PairInts {
        p,
        q,
        m,
        n,
        n_prime,
        c,
        c_prime,
        r: b.r,
    })
}

/// `k` with `a + b·k = target`, if one exists.
fn solve_linear(a: &Int, b: &Int, target: i32) -> Option<Int> {
    let (k, rem) = (Int::from(target) - a).div_rem(b);
    rem.is_zero().then_some(k)
}

/// Torus type of `P_{p,q,m,n}` itself, read off its Seifert invariants.
fn recognized_piece(x: &PairInts) -> Result<Option<TorusType>> {
    let slope = Slope::new(x.m.clone(), x.n.clone())?;
    recognize_torus_exterior(&cable_surgery_piece(&x.p, &x.q, &slope)?)
}

fn cross_check(claim: &str, expected: &TorusType, recognized: Option<TorusType>) -> Result<()> {
    if recognized.as_ref() != Some(expected) {
        return Err(Error::Inconsistent(format!(
            "{claim}: fiber equations give {expected:?} but the Seifert invariants give {recognized:?}"
        )));
    }
    Ok(())
}

/// A piece `X ≅ −P` of `E(K)` sent onto `−P′`.
///
/// Possible only if `q = 2`, `c = −c′` and `n − n′ = ±1`; then `X` is the
/// `(−p,2)`-torus knot exterior and `K_{p,q}` must be an L-space knot.
pub fn claim_a_analyze(p: i64, q: i64, m: i64, n: i64, n_prime: i64) -> Result<ClaimOutcome> {
    let x = pair_ints(p, q, m, n, n_prime)?;
    if x.q != int(2) {
        return Ok(ClaimOutcome::impossible("q must be 2"));
    }
    if x.c != -&x.c_prime {
        return Ok(ClaimOutcome::impossible("requires npq − m = −(n′pq − m)"));
    }
    if !(&x.n - &x.n_prime).abs().is_one() {
        return Ok(ClaimOutcome::impossible(
            "the fiber equations force n − n′ = ±1",
        ));
    }
    if x.p.abs().is_one() {
        return Ok(ClaimOutcome::impossible(
            "n − n′ = ±1 with p = ±1 forces |npq − m| = 1",
        ));
    }
    let qc = &x.q * &x.c;
    for epsilon in [1, -1] {
        let i = solve_linear(&(&x.r * &x.c + &x.q * &x.n), &qc, epsilon);
        let j = solve_linear(&(&x.r * &x.c - &x.q * &x.n_prime), &qc, epsilon);
        if let (Some(i), Some(j)) = (i, j) {
            let torus_piece = TorusType::new(-(Int::from(epsilon) * &x.c), x.q.clone())?;
            cross_check(
                "claim A",
                &torus_piece,
                recognized_piece(&x)?.map(|t| t.mirror()),
            )?;
            return Ok(ClaimOutcome::Obligation(Obligation {
                torus_piece,
                lspace_required: true,
                a2_zero_required: false,
                epsilon,
                i,
                j,
            }));
        }
    }
    Ok(ClaimOutcome::impossible(
        "the fiber equations have no integer solution",
    ))
}

/// A piece `X ≅ P` of `E(K)` sent onto `−P′`.
///
/// Possible only if `q = 2`, `p = ±1` and `a₂(K) = 0`; then `X` is the
/// `(±(n − n′), 2)`-torus knot exterior.
pub fn claim_b_analyze(p: i64, q: i64, m: i64, n: i64, n_prime: i64) -> Result<ClaimOutcome> {
    let x = pair_ints(p, q, m, n, n_prime)?;
    if x.q != int(2) {
        return Ok(ClaimOutcome::impossible("q must be 2"));
    }
    if x.c != -&x.c_prime {
        return Ok(ClaimOutcome::impossible("requires npq − m = −(n′pq − m)"));
    }
    if !x.p.abs().is_one() {
        return Ok(ClaimOutcome::impossible("p must be ±1"));
    }
    if x.c.abs() <= Int::one() {
        return Ok(ClaimOutcome::impossible("requires |npq − m| > 1"));
    }
    let qc = &x.q * &x.c;
    for epsilon in [1, -1] {
        let i = solve_linear(&(&x.r * &x.c + &x.q * &x.n), &qc, epsilon);
        let j = solve_linear(&(&x.r * &x.c + &x.q * &x.n_prime), &qc, epsilon);
        if let (Some(i), Some(j)) = (i, j) {
            let torus_piece = TorusType::new(Int::from(epsilon) * &x.c, x.q.clone())?;
            cross_check("claim B", &torus_piece, recognized_piece(&x)?)?;
            return Ok(ClaimOutcome::Obligation(Obligation {
                torus_piece,
                lspace_required: false,
                a2_zero_required: true,
                epsilon,
                i,
                j,
            }));
        }
    }
    Ok(ClaimOutcome::impossible(
        "the fiber equations have no integer solution",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus(p: i64, q: i64) -> TorusType {
        TorusType::new(p, q).unwrap()
    }

    fn reason(o: ClaimOutcome) -> String {
        match o {
            ClaimOutcome::Impossible { reason } => reason,
            other => panic!("expected impossible, got {other:?}"),
        }
    }

    #[test]
    fn claim1_always_blocks() {
        for (p, q) in [(3, 2), (1, 2), (5, 3), (-7, 4), (-1, 9)] {
            let cert = claim1_certificate(p, q).unwrap();
            assert!(cert.is_inconsistent());
            assert_eq!((cert.x.clone(), cert.y.clone()), (int(-1), int(0)));
        }
        let cert = claim1_certificate(1, 2).unwrap();
        assert_eq!(cert.residual, (int(-2), int(0)));
    }

    #[test]
    fn claim_a_examples() {
        assert_eq!(
            reason(claim_a_analyze(4, 3, 9, 2, 1).unwrap()),
            "q must be 2"
        );
        let ClaimOutcome::Obligation(o) = claim_a_analyze(3, 2, 9, 2, 1).unwrap() else {
            panic!()
        };
        assert_eq!(o.torus_piece, torus(-3, 2));
        assert!(o.lspace_required && !o.a2_zero_required);
        assert_eq!((o.epsilon, o.i, o.j), (1, int(-1), int(0)));
        assert!(reason(claim_a_analyze(1, 2, 3, 1, 2).unwrap()).contains("forces |npq − m| = 1"));
    }

    #[test]
    fn claim_a_swapped_pair_gives_same_piece() {
        let ClaimOutcome::Obligation(o) = claim_a_analyze(3, 2, 9, 1, 2).unwrap() else {
            panic!()
        };
        assert_eq!(o.torus_piece, torus(-3, 2));
        assert_eq!(o.epsilon, -1);
    }

    #[test]
    fn claim_b_examples() {
        assert_eq!(
            reason(claim_b_analyze(3, 2, 9, 2, 1).unwrap()),
            "p must be ±1"
        );
        assert_eq!(
            reason(claim_b_analyze(3, 5, 9, 2, 1).unwrap()),
            "q must be 2"
        );
        let ClaimOutcome::Obligation(o) = claim_b_analyze(1, 2, 5, 4, 1).unwrap() else {
            panic!()
        };
        assert_eq!(o.torus_piece, torus(-3, 2));
        assert!(o.a2_zero_required && !o.lspace_required);
        assert_eq!((o.epsilon, o.i, o.j), (-1, int(-2), int(-1)));
        let ClaimOutcome::Obligation(o) = claim_b_analyze(1, 2, 7, 5, 2).unwrap() else {
            panic!()
        };
        assert_eq!(o.torus_piece, torus(3, 2));
    }

    #[test]
    fn rejects_invalid_pairs() {
        assert!(claim_a_analyze(3, 2, 9, 2, 2).is_err());
        assert!(claim_a_analyze(3, 2, 9, 3, 1).is_err());
        assert!(claim_b_analyze(4, 2, 9, 2, 1).is_err());
    }
}
