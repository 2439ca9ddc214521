//! Reference computations used by the integration tests. Each is written
//! from the defining formula, independent of the library's algorithms.

#![allow(dead_code)]

use std::collections::BTreeMap;

use cosmetry::arith::{int, Int, Rational};

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `s(a,b) = Σ_{k=1}^{b−1} ((k/b))((ak/b))` for `b ≥ 1`, `gcd(a,b) = 1`.
///
/// With `ρ = ak mod b ≠ 0` each term is `(2k − b)(2ρ − b)/(4b²)`.
pub fn dedekind_sum(a: i64, b: i64) -> Rational {
    let (a, b) = (a as i128, b as i128);
    let num: i128 = (1..b)
        .map(|k| (2 * k - b) * (2 * (a * k).rem_euclid(b) - b))
        .sum();
    Rational::new(Int::from(num), Int::from(4 * b * b)).unwrap()
}

/// `(a² + b² + 1)/(12ab) − 1/4`.
pub fn reciprocity_rhs(a: i64, b: i64) -> Rational {
    let (a, b) = (a as i128, b as i128);
    Rational::new(
        Int::from(a * a + b * b + 1 - 3 * a * b),
        Int::from(12 * a * b),
    )
    .unwrap()
}

/// `(n/m)·a₂ − ½·s(n,m)`.
pub fn casson_walker(a2: i64, m: i64, n: i64) -> Rational {
    let linear = Rational::new(int(n * a2), int(m)).unwrap();
    linear - dedekind_sum(n, m) / Rational::from(2)
}

/// Integer Laurent polynomials as exponent → coefficient.
pub type Poly = BTreeMap<i64, i64>;

fn trim(mut f: Poly) -> Poly {
    f.retain(|_, c| *c != 0);
    f
}

pub fn mul(f: &Poly, g: &Poly) -> Poly {
    let mut out = Poly::new();
    for (e1, c1) in f {
        for (e2, c2) in g {
            *out.entry(e1 + e2).or_default() += c1 * c2;
        }
    }
    trim(out)
}

pub fn substitute_power(f: &Poly, k: i64) -> Poly {
    f.iter().map(|(e, c)| (e * k, *c)).collect()
}

/// Shifts so that the exponents are symmetric about 0 and the constant
/// sign makes `f(1) = 1`.
pub fn symmetrize(f: &Poly) -> Poly {
    let lo = *f.keys().next().unwrap();
    let hi = *f.keys().next_back().unwrap();
    assert_eq!((lo + hi) % 2, 0, "odd span");
    let shift = (lo + hi) / 2;
    let sign = f.values().sum::<i64>().signum();
    f.iter().map(|(e, c)| (e - shift, sign * c)).collect()
}

/// `Δ_{T(p,q)}` from the semigroup `⟨|p|, q⟩`:
/// `Δ(t)/(1 − t) = Σ_{s ∈ S} t^s`, truncated at the conductor.
pub fn torus_alexander(p: i64, q: i64) -> Poly {
    let (p, q) = (p.abs(), q.abs());
    let conductor = (p - 1) * (q - 1);
    let in_semigroup = |k: i64| (0..=k / p).any(|a| (k - a * p) % q == 0);
    let mut f = Poly::new();
    for k in 0..=conductor {
        let c = in_semigroup(k) as i64 - (k >= 1 && in_semigroup(k - 1)) as i64;
        if c != 0 {
            f.insert(k, c);
        }
    }
    symmetrize(&f)
}

/// `Δ_{J_{p,q}}(t) = Δ_J(t^q) · Δ_{T(p,q)}(t)`, for a chain of cables over
/// the unknot given innermost first.
pub fn iterated_alexander(params: &[(i64, i64)]) -> Poly {
    let mut f: Poly = [(0, 1)].into();
    for &(p, q) in params {
        f = mul(&substitute_power(&f, q), &torus_alexander(p, q));
    }
    symmetrize(&f)
}

/// For symmetric `Δ`, `Δ''(1)/2 = ½ Σ c_k k²`.
pub fn a2_of_poly(f: &Poly) -> i64 {
    let twice: i64 = f.iter().map(|(e, c)| c * e * e).sum();
    assert_eq!(twice % 2, 0);
    twice / 2
}

pub fn torus_a2_closed(p: i64, q: i64) -> i64 {
    (p * p - 1) * (q * q - 1) / 24
}

/// `(r, s)` with `p·r + q·s = 1` by direct search over `0 ≤ r < q`.
pub fn bezout(p: i64, q: i64) -> (i64, i64) {
    let r = (0..q).find(|r| (1 - p * r) % q == 0).expect("coprime");
    (r, (1 - p * r) / q)
}

/// Solutions `(ε, i, j)` with `|i|, |j| ≤ bound` of the fiber equations
/// `r·c + q·n + q·i·c = ε` and `r·c + σ·q·n′ + q·j·c = ε`.
pub fn fiber_solutions(
    p: i64,
    q: i64,
    m: i64,
    n: i64,
    n_prime: i64,
    sigma: i64,
    bound: i64,
) -> Vec<(i64, i64, i64)> {
    let (r, _) = bezout(p, q);
    let c = n * p * q - m;
    let mut out = Vec::new();
    for eps in [1, -1] {
        for i in -bound..=bound {
            if r * c + q * n + q * i * c != eps {
                continue;
            }
            for j in -bound..=bound {
                if r * c + sigma * q * n_prime + q * j * c == eps {
                    out.push((eps, i, j));
                }
            }
        }
    }
    out
}

pub fn laurent(f: &Poly) -> cosmetry::alexander::LaurentPoly {
    cosmetry::alexander::LaurentPoly::from_terms(f.iter().map(|(e, c)| (*e, *c)))
}
