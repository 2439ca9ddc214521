use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed};

use crate::arith::{int, Int};
use crate::error::{Error, Result};

/// Oriented torus knot type, used to label torus-knot exteriors.
///
/// `T_{p,q} = T_{q,p} = T_{−p,−q}`, while the mirror `T_{−p,q}` is a
/// different oriented type. The stored pair is canonical: `|p| > q ≥ 2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusType {
    p: Int,
    q: Int,
}

impl TorusType {
    pub fn new(p: impl Into<Int>, q: impl Into<Int>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if !p.gcd(&q).is_one() {
            return Err(Error::NotCoprime(p, q));
        }
        if p.abs() < int(2) || q.abs() < int(2) {
            return Err(Error::pre(format!(
                "torus knot exterior ({p},{q}) needs both multiplicities ≥ 2"
            )));
        }
        let (a, b) = if p.abs() > q.abs() { (p, q) } else { (q, p) };
        let (a, b) = if b.is_negative() { (-a, -b) } else { (a, b) };
        Ok(TorusType { p: a, q: b })
    }

    pub fn p(&self) -> &Int {
        &self.p
    }

    pub fn q(&self) -> &Int {
        &self.q
    }

    pub fn mirror(&self) -> Self {
        TorusType {
            p: -&self.p,
            q: self.q.clone(),
        }
    }

    /// `true` for `(r,2)` types.
    pub fn has_multiplicity_two(&self) -> bool {
        self.q == int(2)
    }

    /// Sign of the canonical `p`, i.e. the handedness.
    pub fn sign(&self) -> i32 {
        if self.p.is_negative() {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for TorusType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

impl fmt::Debug for TorusType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{self}")
    }
}
