//! Integer Laurent polynomials and the Alexander-polynomial data built on them.
//!
//! Polynomials are kept as a sparse map from exponent to a nonzero
//! coefficient. The Alexander polynomials returned here are always in
//! symmetric normal form: `Δ(t) = Δ(t⁻¹)` and `Δ(1) = 1`.
//!
//! `a₂` (the `z²` coefficient of the Conway polynomial) is read as
//! `Δ''(1)/2`, the second derivative evaluated at `t = 1`. That is the only
//! reading under which the quantity is an integer for every knot.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{int, Int, Rational};
use crate::error::{Error, Result};
use crate::topo::KnotExpr;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Int>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Int::one())
    }

    pub fn monomial(exp: i64, coeff: impl Into<Int>) -> Self {
        Self::from_terms([(exp, coeff.into())])
    }

    /// Sums repeated exponents and drops zero coefficients.
    pub fn from_terms<C: Into<Int>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    fn add_term(&mut self, exp: i64, coeff: Int) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Int::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Int {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Int)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The substitution `t ↦ t^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "t ↦ t^0 collapses the polynomial");
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    pub fn eval_at_one(&self) -> Int {
        self.terms.values().sum()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        assert!(
            !t.is_zero() || self.min_exp().is_none_or(|e| e >= 0),
            "evaluation at t = 0"
        );
        let inv = if t.is_zero() {
            Rational::zero()
        } else {
            &Rational::one() / t
        };
        self.terms.iter().fold(Rational::zero(), |acc, (e, c)| {
            let base = if *e >= 0 { t } else { &inv };
            let mut pow = Rational::one();
            for _ in 0..e.unsigned_abs() {
                pow = &pow * base;
            }
            acc + pow * Rational::from_int(c.clone())
        })
    }

    pub fn derivative(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e - 1, c * int(*e))))
    }

    /// `f''(1) = Σ c·e·(e−1)`.
    pub fn second_derivative_at_one(&self) -> Int {
        self.terms
            .iter()
            .map(|(e, c)| c * int(*e) * int(e - 1))
            .sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| self.terms.get(&-e) == Some(c))
    }

    pub fn is_normalized(&self) -> bool {
        self.is_symmetric() && self.eval_at_one().is_one()
    }

    /// Exact division; `None` when `divisor` does not divide `self` over ℤ.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (dlo, dhi) = (divisor.min_exp()?, divisor.max_exp()?);
        let lead = divisor.coeff(dhi);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(hi) = rem.max_exp() {
            if hi - rem.min_exp()? < dhi - dlo {
                return None;
            }
            let c = rem.coeff(hi);
            if !c.is_multiple_of(&lead) {
                return None;
            }
            let term = LaurentPoly::monomial(hi - dhi, c / &lead);
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        Some(quot)
    }

    /// Human-readable form, e.g. `t^-1 - 1 + t`.
    pub fn to_pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match *e {
                0 => String::new(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}{mono}"));
            }
        }
        out
    }
}

impl<'a> Add for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

/// Wire form: sorted `exponent:coefficient` pairs, e.g. `-1:1,0:-1,1:1`.
/// The zero polynomial is the empty string.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}:{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.to_pretty())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut terms = Vec::new();
        if s.is_empty() {
            return Ok(LaurentPoly::zero());
        }
        for pair in s.split(',') {
            let bad = || Error::Syntax {
                pos: 0,
                msg: format!("bad polynomial term `{pair}`"),
            };
            let (e, c) = pair.split_once(':').ok_or_else(bad)?;
            let e: i64 = e.trim().parse().map_err(|_| bad())?;
            let c: Int = c.trim().parse().map_err(|_| bad())?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Rescales `f` to `±t^k·f` so that the result is symmetric with value 1 at `t = 1`.
pub fn normalize_symmetric(f: &LaurentPoly) -> Result<LaurentPoly> {
    let at_one = f.eval_at_one();
    let g = if at_one.is_one() {
        f.clone()
    } else if at_one == int(-1) {
        -f
    } else {
        return Err(Error::NotUnitAtOne(at_one));
    };
    let (lo, hi) = (g.min_exp().expect("nonzero"), g.max_exp().expect("nonzero"));
    if (lo + hi).is_odd() {
        return Err(Error::NotSymmetrizable);
    }
    let g = g.shift(-(lo + hi) / 2);
    if g.is_symmetric() {
        Ok(g)
    } else {
        Err(Error::NotSymmetrizable)
    }
}

fn check_torus_params(p: i64, q: i64) -> Result<()> {
    if q < 2 {
        return Err(Error::WrappingTooSmall(int(q)));
    }
    if !p.gcd(&q).is_one() {
        return Err(Error::NotCoprime(int(p), int(q)));
    }
    Ok(())
}

/// Symmetric Alexander polynomial of the torus knot `T_{p,q}`, computed as
/// `(t^{pq} − 1)(t − 1) / ((t^p − 1)(t^q − 1))` by exact division.
pub fn alexander_torus(p: i64, q: i64) -> Result<LaurentPoly> {
    check_torus_params(p, q)?;
    let p = p.abs();
    if p <= 1 {
        return Ok(LaurentPoly::one());
    }
    let binom = |k: i64| LaurentPoly::from_terms([(k, 1), (0, -1)]);
    let num = &binom(p * q) * &binom(1);
    let den = &binom(p) * &binom(q);
    let quot = num
        .div_exact(&den)
        .ok_or_else(|| Error::Inconsistent(format!("torus quotient for ({p},{q}) is not exact")))?;
    normalize_symmetric(&quot)
}

/// Alexander polynomial of a knot expression, built with the cabling
/// formula `Δ_{J_{p,q}}(t) = Δ_J(t^q)·Δ_{T_{p,q}}(t)`.
pub fn alexander_of(knot: &KnotExpr) -> Result<LaurentPoly> {
    match knot {
        KnotExpr::Unknot => Ok(LaurentPoly::one()),
        KnotExpr::Torus { p, q } => alexander_torus(*p, *q),
        KnotExpr::Cable { companion, p, q } => {
            let inner = alexander_of(companion)?.substitute_power(*q);
            normalize_symmetric(&(&inner * &alexander_torus(*p, *q)?))
        }
        KnotExpr::Opaque(o) => match &o.alexander {
            Some(poly) if poly.is_normalized() => Ok(poly.clone()),
            Some(poly) => normalize_symmetric(poly),
            None => Err(Error::MissingOpaqueData {
                name: o.name.clone(),
                what: "an Alexander polynomial",
            }),
        },
    }
}

/// `Δ''(1)/2` for a normalized polynomial.
pub fn a2_from_poly(f: &LaurentPoly) -> Result<Int> {
    if !f.is_normalized() {
        return Err(Error::NotNormalized("a₂ needs Δ(t)=Δ(t⁻¹) and Δ(1)=1"));
    }
    let twice = f.second_derivative_at_one();
    if twice.is_odd() {
        return Err(Error::Inconsistent(format!("Δ''(1) = {twice} is odd")));
    }
    Ok(twice / 2)
}

/// The two independent routes to `a₂` for one knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A2Paths {
    /// `a₂(J_{p,q}) = q²·a₂(J) + a₂(T_{p,q})`, applied recursively.
    pub cabling: Int,
    /// `Δ''(1)/2` of [`alexander_of`], when the polynomial is available.
    pub polynomial: Option<Int>,
}

fn a2_cabling(knot: &KnotExpr) -> Result<Int> {
    match knot {
        KnotExpr::Unknot => Ok(Int::zero()),
        KnotExpr::Torus { p, q } => a2_from_poly(&alexander_torus(*p, *q)?),
        KnotExpr::Cable { companion, p, q } => {
            Ok(int(q * q) * a2_cabling(companion)? + a2_from_poly(&alexander_torus(*p, *q)?)?)
        }
        KnotExpr::Opaque(o) => {
            let from_poly = o
                .alexander
                .as_ref()
                .map(|poly| a2_from_poly(&normalize_symmetric(poly)?))
                .transpose()?;
            match (&o.a2, from_poly) {
                (Some(a), Some(b)) if *a != b => Err(Error::pre(format!(
                    "opaque `{}` declares a2={a} but its Alexander polynomial gives {b}",
                    o.name
                ))),
                (Some(a), _) => Ok(a.clone()),
                (None, Some(b)) => Ok(b),
                (None, None) => Err(Error::MissingOpaqueData {
                    name: o.name.clone(),
                    what: "a2 or an Alexander polynomial",
                }),
            }
        }
    }
}

pub fn a2_paths(knot: &KnotExpr) -> Result<A2Paths> {
    let cabling = a2_cabling(knot)?;
    let polynomial = match alexander_of(knot) {
        Ok(poly) => Some(a2_from_poly(&poly)?),
        Err(Error::MissingOpaqueData { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(A2Paths {
        cabling,
        polynomial,
    })
}

/// The `z²` Conway coefficient. Both routes are evaluated when possible and
/// must agree.
pub fn a2_of(knot: &KnotExpr) -> Result<Int> {
    let paths = a2_paths(knot)?;
    match paths.polynomial {
        Some(poly) if poly != paths.cabling => Err(Error::Inconsistent(format!(
            "a₂({knot}): cabling identity gives {}, Δ''(1)/2 gives {poly}",
            paths.cabling
        ))),
        _ => Ok(paths.cabling),
    }
}

/// Result of matching a polynomial against the L-space Alexander form
/// `(−1)^k + Σ_j (−1)^{k−j}(t^{n_j} + t^{−n_j})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LSpaceForm {
    /// `n₁ < … < n_k` when the form matches.
    pub exponents: Option<Vec<i64>>,
}

impl LSpaceForm {
    pub fn passes(&self) -> bool {
        self.exponents.is_some()
    }

    /// `Σ_j (−1)^{k−j} n_j²`, which equals `Δ''(1)/2` for a matching polynomial.
    pub fn alternating_square_sum(&self) -> Option<Int> {
        let exps = self.exponents.as_ref()?;
        let k = exps.len();
        Some(
            exps.iter()
                .enumerate()
                .map(|(j, n)| {
                    let sq = int(n * n);
                    if (k - 1 - j) % 2 == 0 {
                        sq
                    } else {
                        -sq
                    }
                })
                .sum(),
        )
    }
}

pub fn lspace_form(f: &LaurentPoly) -> Result<LSpaceForm> {
    if !f.is_normalized() {
        return Err(Error::NotNormalized(
            "the L-space form test needs Δ(t)=Δ(t⁻¹) and Δ(1)=1",
        ));
    }
    let mut expected = Int::one();
    let mut last_exp = None;
    let mut exps = Vec::new();
    for (e, c) in f.terms().rev().take_while(|(e, _)| *e >= 0) {
        if *c != expected {
            return Ok(LSpaceForm { exponents: None });
        }
        expected = -expected;
        last_exp = Some(e);
        if e > 0 {
            exps.push(e);
        }
    }
    if last_exp != Some(0) {
        return Ok(LSpaceForm { exponents: None });
    }
    exps.reverse();
    Ok(LSpaceForm {
        exponents: Some(exps),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn wire_format() {
        let f = poly("1:1,-1:1,0:-1");
        assert_eq!(f.to_string(), "-1:1,0:-1,1:1");
        assert_eq!(f.to_pretty(), "t^-1 - 1 + t");
        assert_eq!(poly("").to_string(), "");
        assert!("1:x".parse::<LaurentPoly>().is_err());
        assert_eq!(poly("2:3,2:-3"), LaurentPoly::zero());
    }

    #[test]
    fn torus_examples() {
        assert_eq!(alexander_torus(2, 3).unwrap(), poly("-1:1,0:-1,1:1"));
        assert_eq!(alexander_torus(1, 7).unwrap(), LaurentPoly::one());
        assert_eq!(alexander_torus(-1, 7).unwrap(), LaurentPoly::one());
        assert_eq!(
            alexander_torus(2, 5).unwrap(),
            poly("-2:1,-1:-1,0:1,1:-1,2:1")
        );
        assert_eq!(
            alexander_torus(-2, 5).unwrap(),
            alexander_torus(2, 5).unwrap()
        );
        assert_eq!(
            alexander_torus(3, 2).unwrap(),
            alexander_torus(2, 3).unwrap()
        );
    }

    #[test]
    fn torus_errors() {
        assert_eq!(
            alexander_torus(4, 2),
            Err(Error::NotCoprime(int(4), int(2)))
        );
        assert_eq!(alexander_torus(4, 1), Err(Error::WrappingTooSmall(int(1))));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            normalize_symmetric(&poly("2:1,1:-1")),
            Err(Error::NotUnitAtOne(int(0)))
        );
        assert_eq!(
            normalize_symmetric(&LaurentPoly::one()).unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(
            normalize_symmetric(&poly("2:1,1:-1,0:1")).unwrap(),
            poly("-1:1,0:-1,1:1")
        );
        assert_eq!(
            normalize_symmetric(&poly("2:-1,1:1,0:-1")).unwrap(),
            poly("-1:1,0:-1,1:1")
        );
        assert_eq!(
            normalize_symmetric(&poly("1:1,0:1,-1:-1")),
            Err(Error::NotSymmetrizable)
        );
        assert_eq!(
            normalize_symmetric(&poly("3:1,0:-1,1:1")),
            Err(Error::NotSymmetrizable)
        );
    }

    #[test]
    fn division() {
        let f = poly("0:-1,2:1"); // t² − 1
        let g = poly("0:1,1:1"); // t + 1
        assert_eq!(f.div_exact(&g).unwrap(), poly("0:-1,1:1"));
        assert_eq!(poly("0:1,2:1").div_exact(&g), None);
    }

    #[test]
    fn calculus() {
        let f = poly("-1:1,0:-1,1:1");
        assert_eq!(f.derivative(), poly("-2:-1,0:1"));
        assert_eq!(f.second_derivative_at_one(), int(2));
        assert_eq!(f.eval(&Rational::frac(2, 1)), Rational::frac(3, 2));
    }

    #[test]
    fn a2_examples() {
        let p = |s: &str| s.parse::<KnotExpr>().unwrap();
        assert_eq!(a2_of(&p("unknot")).unwrap(), int(0));
        assert_eq!(a2_of(&p("torus(2,3)")).unwrap(), int(1));
        assert_eq!(a2_of(&p("cable(1,2; torus(2,3))")).unwrap(), int(4));
        assert_eq!(a2_of(&p("opaque(k; a2=5; hyperbolic)")).unwrap(), int(5));
        assert!(matches!(
            a2_of(&p("opaque(k; hyperbolic)")),
            Err(Error::MissingOpaqueData { .. })
        ));
        let paths = a2_paths(&p("opaque(k; a2=5; hyperbolic)")).unwrap();
        assert_eq!(paths.polynomial, None);
    }

    #[test]
    fn declared_a2_must_match_declared_polynomial() {
        let k: KnotExpr = "opaque(k; a2=2; alex=-1:1,0:-1,1:1)".parse().unwrap();
        assert!(matches!(a2_of(&k), Err(Error::Precondition(_))));
        let k: KnotExpr = "opaque(k; a2=-1; alex=-1:-1,0:3,1:-1)".parse().unwrap();
        assert_eq!(a2_of(&k).unwrap(), int(-1));
    }

    #[test]
    fn alexander_of_cables() {
        let k: KnotExpr = "cable(3,2; torus(2,3))".parse().unwrap();
        let expect = &poly("-2:1,0:-1,2:1") * &poly("-1:1,0:-1,1:1");
        assert_eq!(alexander_of(&k).unwrap(), expect);
        let k: KnotExpr = "cable(1,2; torus(2,3))".parse().unwrap();
        assert_eq!(alexander_of(&k).unwrap(), poly("-2:1,0:-1,2:1"));
    }

    #[test]
    fn lspace_examples() {
        let f = lspace_form(&poly("-1:1,0:-1,1:1")).unwrap();
        assert_eq!(f.exponents, Some(vec![1]));
        assert_eq!(
            lspace_form(&LaurentPoly::one()).unwrap().exponents,
            Some(vec![])
        );
        assert!(!lspace_form(&poly("-1:-1,0:3,1:-1")).unwrap().passes());
        assert!(matches!(
            lspace_form(&poly("0:1,1:1")),
            Err(Error::NotNormalized(_))
        ));
        // gaps are allowed; the pattern is t³ − t² + 1 − t⁻² + t⁻³
        let g = poly("-3:1,-2:-1,0:1,2:-1,3:1");
        assert_eq!(lspace_form(&g).unwrap().exponents, Some(vec![2, 3]));
        // a zero constant term breaks the form
        let h = poly("-2:1,-1:-1,1:-1,2:1");
        assert!(!h.is_normalized() || !lspace_form(&h).unwrap().passes());
    }
}
