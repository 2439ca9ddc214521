//! Slopes, peripheral bases of the cable space, and the three possible
//! outcomes of surgery on a cable knot.
//!
//! For `K_{p,q}` with surgery slope `m/n` and `P = npq − m`:
//!
//! * `P = 0`: `S³_K(p/q) # L(q,p)`, a reducible manifold;
//! * `|P| = 1`: `S³_K(m/(nq²))`, a surgery on the companion;
//! * `|P| > 1`: `E(K) ∪_T M(0,1; r/q, n/P)`, glued along the outer torus.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{bezout_rs, int, Int, Rational};
use crate::error::{Error, Result};
use crate::topo::SeifertPiece;

/// A reduced slope `m/n` with `n ≥ 1`. The sign lives in `m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Slope {
    m: Int,
    n: Int,
}

impl Slope {
    /// Reduces `m/n`; `n = 0` is the slope ∞, which no operation accepts.
    pub fn new(m: impl Into<Int>, n: impl Into<Int>) -> Result<Self> {
        let (m, n) = (m.into(), n.into());
        if m.is_zero() && n.is_zero() {
            return Err(Error::ZeroSlope);
        }
        if n.is_zero() {
            return Err(Error::InfiniteSlope(m));
        }
        let g = m.gcd(&n);
        let sign = if n.is_negative() {
            -Int::one()
        } else {
            Int::one()
        };
        Ok(Slope {
            m: &sign * &m / &g,
            n: sign * n / g,
        })
    }

    pub fn m(&self) -> &Int {
        &self.m
    }

    pub fn n(&self) -> &Int {
        &self.n
    }

    pub fn as_rational(&self) -> Rational {
        Rational::new(self.m.clone(), self.n.clone()).expect("n ≥ 1")
    }
}

/// Divides out the gcd and moves the sign into `m`.
pub fn reduce_slope(m: impl Into<Int>, n: impl Into<Int>) -> Result<Slope> {
    Slope::new(m, n)
}

/// Whether `m/n` is already in lowest terms with `n ≥ 1`.
pub fn is_reduced(m: &Int, n: &Int) -> bool {
    n.is_positive() && m.gcd(n).is_one()
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.m, self.n)
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Accepts `m/n` or a bare integer `m` (meaning `m/1`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Syntax {
            pos: 0,
            msg: format!("expected a slope `m/n`, got `{s}`"),
        };
        let (m, n) = match s.split_once('/') {
            Some((m, n)) => (m.trim(), n.trim()),
            None => (s.trim(), "1"),
        };
        let m: Int = m.parse().map_err(|_| bad())?;
        let n: Int = n.parse().map_err(|_| bad())?;
        Slope::new(m, n)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

fn check_cable(p: &Int, q: &Int) -> Result<()> {
    if *q < int(2) {
        return Err(Error::WrappingTooSmall(q.clone()));
    }
    if !p.gcd(q).is_one() {
        return Err(Error::NotCoprime(p.clone(), q.clone()));
    }
    Ok(())
}

/// `m[μ] + n[λ] = (npq − m)[c₁] + n[h]` in the cable space's section and
/// fiber classes. Returns `(npq − m, n)`.
pub fn peripheral_to_fiber(p: &Int, q: &Int, slope: &Slope) -> Result<(Int, Int)> {
    check_cable(p, q)?;
    Ok((slope.n() * p * q - slope.m(), slope.n().clone()))
}

/// Coordinates of `([M],[L])` of the outer torus in the basis `([c₂],[h])`:
/// `[M] = q[c₂] − r[h]`, `[L] = p[c₂] + s[h]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterBasisMap {
    #[serde(with = "matrix_serde")]
    pub rows: [[Int; 2]; 2],
}

impl OuterBasisMap {
    pub fn det(&self) -> Int {
        let [[a, b], [c, d]] = &self.rows;
        a * d - b * c
    }
}

mod matrix_serde {
    use super::Int;
    use crate::arith::int_serde;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry(#[serde(with = "int_serde")] Int);

    pub fn serialize<S: Serializer>(rows: &[[Int; 2]; 2], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        for row in rows {
            seq.serialize_element(&[Entry(row[0].clone()), Entry(row[1].clone())])?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[[Int; 2]; 2], D::Error> {
        let [[a, b], [c, d]] = <[[Entry; 2]; 2]>::deserialize(d)?;
        Ok([[a.0, b.0], [c.0, d.0]])
    }
}

pub fn outer_basis(p: &Int, q: &Int) -> Result<OuterBasisMap> {
    check_cable(p, q)?;
    let b = bezout_rs(p, q)?;
    Ok(OuterBasisMap {
        rows: [[q.clone(), -b.r], [p.clone(), b.s]],
    })
}

/// `P_{p,q,m,n} = M(0,1; r/q, n/(npq − m))`, the Seifert piece filling the
/// cable space when `|npq − m| > 1`.
pub fn cable_surgery_piece(p: &Int, q: &Int, slope: &Slope) -> Result<SeifertPiece> {
    let (c, n) = peripheral_to_fiber(p, q, slope)?;
    if c.abs() <= Int::one() {
        return Err(Error::pre(format!("|npq − m| > 1 (got npq − m = {c})")));
    }
    let b = bezout_rs(p, q)?;
    Ok(SeifertPiece::disk(vec![
        Rational::new(b.r, q.clone())?,
        Rational::new(n, c)?,
    ]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum SurgeryDescription {
    /// `S³_K(p/q) # L(q,p)`.
    ReducibleSum {
        companion_slope: Slope,
        lens: String,
    },
    /// `S³_K(m/(nq²))`.
    CompanionSurgery { slope: Slope },
    /// `E(K) ∪_T P_{p,q,m,n}`.
    Graph {
        exterior: String,
        piece: SeifertPiece,
        gluing: OuterBasisMap,
    },
}

impl SurgeryDescription {
    pub fn tag(&self) -> &'static str {
        match self {
            SurgeryDescription::ReducibleSum { .. } => "reducible_sum",
            SurgeryDescription::CompanionSurgery { .. } => "companion_surgery",
            SurgeryDescription::Graph { .. } => "graph",
        }
    }
}

impl fmt::Display for SurgeryDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurgeryDescription::ReducibleSum {
                companion_slope,
                lens,
            } => {
                write!(f, "S³_K({companion_slope}) # {lens}")
            }
            SurgeryDescription::CompanionSurgery { slope } => write!(f, "S³_K({slope})"),
            SurgeryDescription::Graph {
                exterior,
                piece,
                gluing,
            } => {
                let [[a, b], [c, d]] = &gluing.rows;
                write!(
                    f,
                    "{exterior} ∪_T {piece}, [M] = {a}[c₂] + ({b})[h], [L] = {c}[c₂] + ({d})[h]"
                )
            }
        }
    }
}

/// Describes `S³_{K_{p,q}}(m/n)` by the value of `|npq − m|`.
pub fn describe_cable_surgery(p: &Int, q: &Int, slope: &Slope) -> Result<SurgeryDescription> {
    let (c, _) = peripheral_to_fiber(p, q, slope)?;
    let (m, n) = (slope.m(), slope.n());
    Ok(if c.is_zero() {
        SurgeryDescription::ReducibleSum {
            companion_slope: Slope::new(p.clone(), q.clone())?,
            lens: format!("L({q},{p})"),
        }
    } else if c.abs().is_one() {
        SurgeryDescription::CompanionSurgery {
            slope: Slope::new(m.clone(), n * q * q)?,
        }
    } else {
        SurgeryDescription::Graph {
            exterior: "E(K)".into(),
            piece: cable_surgery_piece(p, q, slope)?,
            gluing: outer_basis(p, q)?,
        }
    })
}
