//! Homology order and the Casson–Walker surgery formula
//! `λ(S³_K(m/n)) = (n/m)·a₂(K) − ½·s(n,m)`.
//!
//! Only sums and differences of `λ` feed the obstruction logic, so the
//! absolute normalization against other conventions does not matter here.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{dedekind, Int, Rational};
use crate::error::{Error, Result};
use crate::surgery::Slope;

/// `|H₁(S³_K(m/n))| = |m|`; `0` stands for infinite homology.
pub fn h1_order(slope: &Slope) -> Int {
    slope.m().abs()
}

fn check_modulus(m: &Int) -> Result<()> {
    if m.is_zero() {
        return Err(Error::ZeroSurgery("the Casson–Walker formula needs m ≠ 0"));
    }
    if m.is_negative() {
        return Err(Error::NegativeSurgery(m.clone()));
    }
    Ok(())
}

/// `λ(S³_K(m/n))` for `m > 0`.
pub fn casson_walker(a2: &Int, slope: &Slope) -> Result<Rational> {
    let (m, n) = (slope.m(), slope.n());
    check_modulus(m)?;
    let linear = Rational::new(n * a2, m.clone())?;
    Ok(linear - dedekind(n, m)? / Rational::from(2))
}

/// Whether `λ(S³_K(m/n)) = −λ(S³_K(m/n′))`, i.e.
/// `(n+n′)/m · a₂ = ½(s(n,m) + s(n′,m))`.
pub fn cw_pair_test(a2: &Int, m: &Int, n: &Int, n_prime: &Int) -> Result<bool> {
    check_modulus(m)?;
    if n == n_prime {
        return Err(Error::pre(format!("n ≠ n′ (got n = n′ = {n})")));
    }
    for k in [n, n_prime] {
        if !m.gcd(k).is_one() {
            return Err(Error::NotCoprime(m.clone(), k.clone()));
        }
    }
    let lhs = Rational::new((n + n_prime) * a2, m.clone())?;
    let rhs = (dedekind(n, m)? + dedekind(n_prime, m)?) / Rational::from(2);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{dedekind_direct, int};

    fn slope(m: i64, n: i64) -> Slope {
        Slope::new(m, n).unwrap()
    }

    #[test]
    fn h1_examples() {
        assert_eq!(h1_order(&slope(9, 2)), int(9));
        assert_eq!(h1_order(&slope(-7, 3)), int(7));
        assert_eq!(h1_order(&slope(0, 1)), int(0));
    }

    #[test]
    fn casson_walker_examples() {
        assert_eq!(
            casson_walker(&int(1), &slope(9, 2)).unwrap(),
            Rational::frac(4, 27)
        );
        assert_eq!(
            casson_walker(&int(1), &slope(9, 1)).unwrap(),
            Rational::frac(-4, 27)
        );
        for m in 1..40 {
            let expect = -dedekind_direct(&int(1), &int(m)).unwrap() / Rational::from(2);
            assert_eq!(casson_walker(&int(0), &slope(m, 1)).unwrap(), expect);
        }
    }

    #[test]
    fn casson_walker_rejects_bad_modulus() {
        assert!(matches!(
            casson_walker(&int(1), &slope(0, 1)),
            Err(Error::ZeroSurgery(_))
        ));
        assert!(matches!(
            casson_walker(&int(1), &slope(-9, 2)),
            Err(Error::NegativeSurgery(_))
        ));
    }

    #[test]
    fn pair_test_examples() {
        let t = |a2, m, n, np| cw_pair_test(&int(a2), &int(m), &int(n), &int(np));
        assert!(t(1, 9, 2, 1).unwrap());
        assert!(!t(1, 9, 2, 4).unwrap());
        assert!(t(0, 7, 3, 4).unwrap());
        assert!(t(0, 15, 2, 13).unwrap());
        assert!(t(1, 9, 2, 2).is_err());
        assert!(matches!(t(1, 9, 3, 1), Err(Error::NotCoprime(..))));
        assert!(matches!(t(1, -9, 2, 1), Err(Error::NegativeSurgery(_))));
    }

    #[test]
    fn shift_by_m_adds_a2() {
        for (a2, m, n) in [(1, 9, 2), (-3, 11, 4), (5, 7, 1), (0, 13, 6)] {
            let lo = casson_walker(&int(a2), &slope(m, n)).unwrap();
            let hi = casson_walker(&int(a2), &slope(m, n + m)).unwrap();
            assert_eq!(hi - lo, Rational::from(a2));
        }
    }
}
