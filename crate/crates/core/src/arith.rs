//! Exact integer and rational arithmetic.
//!
//! Everything here is arbitrary precision. Rationals are always stored in
//! lowest terms with a positive denominator, and print as `a/b` (or `a`
//! when the denominator is 1).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;

/// Shorthand for building an [`Int`] from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

pub fn coprime(a: &Int, b: &Int) -> bool {
    a.gcd(b).is_one()
}

/// Exact rational number in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: Int, denom: Int) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    /// Panics on a zero denominator; for literals in code and tests.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(int(numer), int(denom)).expect("zero denominator")
    }

    pub fn from_int(v: impl Into<Int>) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &Int {
        self.0.numer()
    }

    pub fn denom(&self) -> &Int {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn floor(&self) -> Int {
        self.0.floor().to_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn signum(&self) -> i32 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(v)
    }
}

impl From<Int> for Rational {
    fn from(v: Int) -> Self {
        Rational::from_int(v)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division by a zero rational panics, like integer division.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Syntax {
            pos: 0,
            msg: format!("{msg}: `{s}`"),
        };
        let s = s.trim();
        match s.split_once('/') {
            None => s
                .parse::<Int>()
                .map(Rational::from_int)
                .map_err(|_| bad("bad integer")),
            Some((n, d)) => {
                let n: Int = n.trim().parse().map_err(|_| bad("bad numerator"))?;
                let d: Int = d.trim().parse().map_err(|_| bad("bad denominator"))?;
                Rational::new(n, d)
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Bézout data `p·r + q·s = 1` with the representative `0 ≤ r < q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutPair {
    pub p: Int,
    pub q: Int,
    pub r: Int,
    pub s: Int,
}

pub fn bezout_rs(p: &Int, q: &Int) -> Result<BezoutPair> {
    if *q < int(2) {
        return Err(Error::WrappingTooSmall(q.clone()));
    }
    let eg = p.mod_floor(q).extended_gcd(q);
    if !eg.gcd.is_one() {
        return Err(Error::NotCoprime(p.clone(), q.clone()));
    }
    let r = eg.x.mod_floor(q);
    let s = (Int::one() - p * &r) / q;
    debug_assert!((p * &r + q * &s).is_one());
    Ok(BezoutPair {
        p: p.clone(),
        q: q.clone(),
        r,
        s,
    })
}

/// The sawtooth `((x))`: zero on integers, `x − ⌊x⌋ − 1/2` elsewhere.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        x - &Rational::from_int(x.floor()) - Rational::frac(1, 2)
    }
}

fn check_dedekind_args(a: &Int, b: &Int) -> Result<()> {
    if !b.is_positive() {
        return Err(Error::NonPositiveModulus(b.clone()));
    }
    if !coprime(a, b) {
        return Err(Error::NotCoprime(a.clone(), b.clone()));
    }
    Ok(())
}

/// Dedekind sum `s(a,b)`, evaluated through the reciprocity law in
/// `O(log b)` integer steps.
pub fn dedekind(a: &Int, b: &Int) -> Result<Rational> {
    dedekind_reciprocity(a, b)
}

/// Reciprocity evaluator.
///
/// Works with `U(a,b) = 12·b·s(a,b)`, which is an integer. Reciprocity reads
/// `a·U(a,b) + b·U(b,a) = a² + b² + 1 − 3ab`, and `U(b,a) = U(b mod a, a)`,
/// so the Euclidean chain of `(a,b)` is walked down to `U(0,1) = 0` and then
/// unwound with exact divisions.
pub fn dedekind_reciprocity(a: &Int, b: &Int) -> Result<Rational> {
    check_dedekind_args(a, b)?;
    if let (Some(x), Some(y)) = (a.mod_floor(b).to_i128(), b.to_i128()) {
        if y < 1 << 40 {
            let (u, b0) = reciprocity_words(x, y);
            return Rational::new(Int::from(u), Int::from(12 * b0));
        }
    }
    let mut chain: Vec<(Int, Int)> = Vec::new();
    let (mut x, mut y) = (a.mod_floor(b), b.clone());
    while !y.is_one() {
        let next = (y.mod_floor(&x), x.clone());
        chain.push((x, y));
        (x, y) = next;
    }
    let mut u = Int::zero();
    for (x, y) in chain.iter().rev() {
        let num: Int = x * x + y * y + 1 - 3 * x * y - y * &u;
        debug_assert!(num.is_multiple_of(x));
        u = num / x;
    }
    let b0 = chain
        .first()
        .map(|(_, y)| y.clone())
        .unwrap_or_else(Int::one);
    Rational::new(u, 12 * b0)
}

/// The same walk on machine words; `|U(x,y)| ≤ y²`, so `y < 2⁴⁰` is safe.
fn reciprocity_words(mut x: i128, mut y: i128) -> (i128, i128) {
    let mut chain = Vec::with_capacity(64);
    while y != 1 {
        chain.push((x, y));
        (x, y) = (y % x, x);
    }
    let mut u = 0;
    for &(x, y) in chain.iter().rev() {
        let num = x * x + y * y + 1 - 3 * x * y - y * u;
        debug_assert_eq!(num % x, 0);
        u = num / x;
    }
    (u, chain.first().map_or(1, |&(_, y)| y))
}

/// Direct `O(b)` evaluation of `Σ_{i=1}^{b−1} ((i/b))((a·i/b))`.
///
/// The sum is `Σ (2i − b)(2ρᵢ − b) / (4b²)` with `ρᵢ = a·i mod b`; every term
/// is bounded by `b²`, so for `b < 2⁴⁰` the numerator fits in an `i128` and
/// the loop runs on machine words. Larger moduli fall back to big integers.
///
/// Since `ρ` permutes `1..b`, the numerator is also `4·Σ i·ρᵢ − b²(b − 1)`,
/// and for `b < 2²⁰` that form stays inside a `u64`.
pub fn dedekind_direct(a: &Int, b: &Int) -> Result<Rational> {
    check_dedekind_args(a, b)?;
    let a = a.mod_floor(b);
    let total = match (a.to_u64(), b.to_u64()) {
        (Some(a), Some(b)) if b < (1 << 20) => {
            let b2 = i128::from(b * b);
            Int::from(4 * i128::from(index_residue_sum(a, b)) - b2 * (i128::from(b) - 1))
        }
        (Some(a), Some(b)) if b < (1 << 40) => Int::from(direct_sum_words(a, b)),
        _ => direct_sum_big(&a, b),
    };
    Rational::new(total, 4 * b * b)
}

fn index_residue_sum(a: u64, b: u64) -> u64 {
    // Four interleaved lanes i ≡ 1, …, 4 (mod 4) break the dependency chain
    // of the running residue; each lane steps by 4a mod b.
    const LANES: u64 = 4;
    let step = (LANES * a) % b;
    let mut rho = [0u64; LANES as usize];
    for (k, r) in (1..).zip(rho.iter_mut()) {
        *r = (k * a) % b;
    }
    let mut acc = [0u64; LANES as usize];
    let full = (b - 1) / LANES;
    for block in 0..full {
        let base = block * LANES + 1;
        for (k, (r, s)) in (0..).zip(rho.iter_mut().zip(acc.iter_mut())) {
            *s += (base + k) * *r;
            let t = *r + step;
            *r = t - b * u64::from(t >= b);
        }
    }
    let tail: u64 = (full * LANES + 1..b).map(|i| i * ((a * i) % b)).sum();
    acc.iter().sum::<u64>() + tail
}

fn direct_sum_words(a: u64, b: u64) -> i128 {
    let (a, b) = (a as i128, b as i128);
    let mut rho = 0i128;
    let mut acc = 0i128;
    for i in 1..b {
        rho += a;
        if rho >= b {
            rho -= b;
        }
        acc += (2 * i - b) * (2 * rho - b);
    }
    acc
}

fn direct_sum_big(a: &Int, b: &Int) -> Int {
    let mut rho = Int::zero();
    let mut acc = Int::zero();
    let mut i = Int::one();
    while &i < b {
        rho += a;
        if &rho >= b {
            rho -= b;
        }
        acc += (2 * &i - b) * (2 * &rho - b);
        i += 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn direct_sum_paths_agree() {
        for b in 1..200u64 {
            for a in (0..b).filter(|a| a.gcd(&b) == 1) {
                let folded = 4 * i128::from(index_residue_sum(a, b))
                    - i128::from(b * b) * (i128::from(b) - 1);
                assert_eq!(folded, direct_sum_words(a, b), "a = {a}, b = {b}");
            }
        }
        assert_eq!(
            dedekind_direct(&Int::from(7), &Int::from(1u64 << 21 | 1)).unwrap(),
            dedekind_reciprocity(&Int::from(7), &Int::from(1u64 << 21 | 1)).unwrap()
        );
    }

    #[test]
    fn big_reciprocity_path_obeys_the_law() {
        let a = Int::from(1u64 << 50) + 3;
        let b = Int::from(3u64 << 48) + 7;
        assert!(coprime(&a, &b));
        let lhs = dedekind_reciprocity(&a, &b).unwrap() + dedekind_reciprocity(&b, &a).unwrap();
        let rhs = Rational::new(&a * &a + &b * &b + 1 - 3 * &a * &b, 12 * &a * &b).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_normalizes_and_prints() {
        assert_eq!(q(6, -4).to_string(), "-3/2");
        assert_eq!(q(8, 4).to_string(), "2");
        assert_eq!("-3/2".parse::<Rational>().unwrap(), q(-3, 2));
        assert_eq!("10/-4".parse::<Rational>().unwrap(), q(-5, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn rational_json_is_a_string() {
        let v = serde_json::to_string(&q(4, 27)).unwrap();
        assert_eq!(v, "\"4/27\"");
        let back: Rational = serde_json::from_str(&v).unwrap();
        assert_eq!(back, q(4, 27));
    }

    #[test]
    fn bezout_examples() {
        let b = bezout_rs(&int(3), &int(2)).unwrap();
        assert_eq!((b.r, b.s), (int(1), int(-1)));
        let b = bezout_rs(&int(5), &int(3)).unwrap();
        assert_eq!((b.r, b.s), (int(2), int(-3)));
        let b = bezout_rs(&int(-3), &int(2)).unwrap();
        assert_eq!((b.r, b.s), (int(1), int(2)));
    }

    #[test]
    fn bezout_errors() {
        assert_eq!(
            bezout_rs(&int(4), &int(2)),
            Err(Error::NotCoprime(int(4), int(2)))
        );
        assert_eq!(
            bezout_rs(&int(3), &int(1)),
            Err(Error::WrappingTooSmall(int(1)))
        );
    }

    #[test]
    fn sawtooth_examples() {
        assert_eq!(sawtooth(&q(1, 2)), Rational::zero());
        assert_eq!(sawtooth(&q(1, 3)), q(-1, 6));
        assert_eq!(sawtooth(&q(-1, 3)), q(1, 6));
        assert_eq!(sawtooth(&q(7, 1)), Rational::zero());
    }

    #[test]
    fn dedekind_examples() {
        for f in [dedekind_direct, dedekind_reciprocity] {
            assert_eq!(f(&int(1), &int(3)).unwrap(), q(1, 18));
            assert_eq!(f(&int(0), &int(1)).unwrap(), Rational::zero());
            assert_eq!(f(&int(2), &int(9)).unwrap(), q(4, 27));
            assert_eq!(f(&int(7), &int(3)).unwrap(), q(1, 18));
            assert_eq!(f(&int(-1), &int(3)).unwrap(), q(-1, 18));
        }
    }

    #[test]
    fn dedekind_errors() {
        assert_eq!(
            dedekind(&int(1), &int(0)),
            Err(Error::NonPositiveModulus(int(0)))
        );
        assert_eq!(
            dedekind(&int(1), &int(-3)),
            Err(Error::NonPositiveModulus(int(-3)))
        );
        assert_eq!(
            dedekind(&int(3), &int(6)),
            Err(Error::NotCoprime(int(3), int(6)))
        );
    }

    #[test]
    fn big_fallback_matches_word_path() {
        for (a, b) in [(2u64, 9u64), (5, 17), (13, 64), (1, 2)] {
            let words = Int::from(direct_sum_words(a, b));
            let big = direct_sum_big(&Int::from(a), &Int::from(b));
            assert_eq!(words, big);
        }
    }

    #[test]
    fn reciprocity_handles_huge_moduli() {
        // s(1,b) = (b−1)(b−2)/(12b)
        let b: Int = "123456789012345678901234567891".parse().unwrap();
        let expect = Rational::new((&b - 1) * (&b - 2), 12 * &b).unwrap();
        assert_eq!(dedekind(&int(1), &b).unwrap(), expect);
    }
}

/// Serde adapter for [`Int`]: a JSON number when it fits in `i64`, a
/// decimal string otherwise. Both shapes are accepted on input.
pub mod int_serde {
    use super::Int;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Int, s: S) -> Result<S::Ok, S::Error> {
        match v.to_i64() {
            Some(small) => s.serialize_i64(small),
            None => s.collect_str(v),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(i64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Int, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(Int::from(v)),
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}
