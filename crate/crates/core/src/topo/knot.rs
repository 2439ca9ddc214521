//! Knot expressions and their text grammar.
//!
//! ```text
//! knot    := "unknot" | "torus(" int "," int ")" | "cable(" int "," int ";" knot ")" | opaque
//! opaque  := "opaque(" name { ";" attr } ")"
//! attr    := "a2=" int | "hyperbolic" | "jsj=[" piece {"," piece} "]" | "alex=" poly
//! piece   := "torus_ext(" int "," int ")" | "cable_space(" int "," int ")" | "hyp"
//! poly    := exp ":" coeff {"," exp ":" coeff}
//! ```
//!
//! Whitespace is insignificant and integers may be negative.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::jsj::JsjPiece;
use super::torus::TorusType;
use crate::alexander::LaurentPoly;
use crate::arith::{int, Int};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotExpr {
    Unknot,
    Torus {
        p: i64,
        q: i64,
    },
    /// The `(p,q)`-cable of `companion`, with wrapping number `q`.
    Cable {
        companion: Box<KnotExpr>,
        p: i64,
        q: i64,
    },
    Opaque(OpaqueKnot),
}

/// A companion the library cannot analyse itself; everything downstream
/// uses only the declared data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpaqueKnot {
    pub name: String,
    pub a2: Option<Int>,
    pub alexander: Option<LaurentPoly>,
    pub hyperbolic: bool,
    pub declared_jsj: Vec<JsjPiece>,
}

impl OpaqueKnot {
    pub fn new(name: impl Into<String>) -> Self {
        OpaqueKnot {
            name: name.into(),
            a2: None,
            alexander: None,
            hyperbolic: false,
            declared_jsj: vec![],
        }
    }
}

fn check_pair(p: i64, q: i64) -> Result<()> {
    if q < 2 {
        return Err(Error::WrappingTooSmall(int(q)));
    }
    if !p.gcd(&q).is_one() {
        return Err(Error::NotCoprime(int(p), int(q)));
    }
    Ok(())
}

impl KnotExpr {
    /// `T_{p,q}`; collapses to the unknot when `|p| ≤ 1`.
    pub fn torus(p: i64, q: i64) -> Result<Self> {
        check_pair(p, q)?;
        if p.abs() <= 1 {
            Ok(KnotExpr::Unknot)
        } else {
            Ok(KnotExpr::Torus { p, q })
        }
    }

    /// `J_{p,q}`; a cable of the unknot is the torus knot `T_{p,q}`.
    pub fn cable(companion: KnotExpr, p: i64, q: i64) -> Result<Self> {
        check_pair(p, q)?;
        match companion {
            KnotExpr::Unknot => KnotExpr::torus(p, q),
            companion => Ok(KnotExpr::Cable {
                companion: Box::new(companion),
                p,
                q,
            }),
        }
    }

    pub fn opaque(o: OpaqueKnot) -> Self {
        KnotExpr::Opaque(o)
    }

    pub fn is_unknot(&self) -> bool {
        matches!(self, KnotExpr::Unknot)
    }

    /// Oriented torus type when the expression is a torus knot.
    pub fn torus_type(&self) -> Option<TorusType> {
        match self {
            KnotExpr::Torus { p, q } => TorusType::new(*p, *q).ok(),
            _ => None,
        }
    }

    /// Number of `cable(...)` layers above the base knot.
    pub fn cabling_depth(&self) -> usize {
        match self {
            KnotExpr::Cable { companion, .. } => 1 + companion.cabling_depth(),
            _ => 0,
        }
    }

    /// The knot under all cabling layers.
    pub fn base(&self) -> &KnotExpr {
        match self {
            KnotExpr::Cable { companion, .. } => companion.base(),
            other => other,
        }
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Unknot => f.write_str("unknot"),
            KnotExpr::Torus { p, q } => write!(f, "torus({p},{q})"),
            KnotExpr::Cable { companion, p, q } => write!(f, "cable({p},{q}; {companion})"),
            KnotExpr::Opaque(o) => {
                write!(f, "opaque({}", o.name)?;
                if let Some(a2) = &o.a2 {
                    write!(f, "; a2={a2}")?;
                }
                if let Some(poly) = &o.alexander {
                    write!(f, "; alex={poly}")?;
                }
                if o.hyperbolic {
                    f.write_str("; hyperbolic")?;
                }
                if !o.declared_jsj.is_empty() {
                    f.write_str("; jsj=[")?;
                    for (i, piece) in o.declared_jsj.iter().enumerate() {
                        if i > 0 {
                            f.write_str(", ")?;
                        }
                        write!(f, "{piece}")?;
                    }
                    f.write_str("]")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for KnotExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_knot(s)
    }
}

impl Serialize for KnotExpr {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for KnotExpr {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

pub fn parse_knot(src: &str) -> Result<KnotExpr> {
    let mut p = Parser { src, pos: 0 };
    let knot = p.knot()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(knot)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, lit: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{lit}`")))
        }
    }

    /// Consumes a run of characters satisfying `pred`.
    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let len = rest.find(|c: char| !pred(c)).unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn integer(&mut self) -> Result<Int> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.eat("-");
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            self.pos = start;
            return Err(self.err("expected an integer"));
        }
        let v: Int = digits.parse().expect("ascii digits");
        Ok(if neg { -v } else { v })
    }

    fn small_int(&mut self) -> Result<i64> {
        let start = self.pos;
        let v = self.integer()?;
        i64::try_from(v).map_err(|_| Error::Syntax {
            pos: start,
            msg: "integer out of range".into(),
        })
    }

    fn int_pair(&mut self, sep: &str) -> Result<(i64, i64)> {
        let a = self.small_int()?;
        self.expect(",")?;
        let b = self.small_int()?;
        self.expect(sep)?;
        Ok((a, b))
    }

    fn knot(&mut self) -> Result<KnotExpr> {
        if self.eat("unknot") {
            Ok(KnotExpr::Unknot)
        } else if self.eat("torus") {
            self.expect("(")?;
            let (p, q) = self.int_pair(")")?;
            KnotExpr::torus(p, q)
        } else if self.eat("cable") {
            self.expect("(")?;
            let (p, q) = self.int_pair(";")?;
            let companion = self.knot()?;
            self.expect(")")?;
            KnotExpr::cable(companion, p, q)
        } else if self.eat("opaque") {
            self.expect("(")?;
            self.opaque()
        } else {
            Err(self.err("expected `unknot`, `torus(`, `cable(` or `opaque(`"))
        }
    }

    fn opaque(&mut self) -> Result<KnotExpr> {
        let name = self.take_while(|c| c.is_alphanumeric() || "_-.'".contains(c));
        if name.is_empty() {
            return Err(self.err("expected an opaque knot name"));
        }
        let mut o = OpaqueKnot::new(name);
        while self.eat(";") {
            if self.eat("a2") {
                self.expect("=")?;
                o.a2 = Some(self.integer()?);
            } else if self.eat("hyperbolic") {
                o.hyperbolic = true;
            } else if self.eat("jsj") {
                self.expect("=")?;
                self.expect("[")?;
                loop {
                    o.declared_jsj.push(self.piece(&o.name)?);
                    if !self.eat(",") {
                        break;
                    }
                }
                self.expect("]")?;
            } else if self.eat("alex") {
                self.expect("=")?;
                let start = self.pos;
                let text = self.take_while(|c| c != ';' && c != ')');
                let poly: LaurentPoly = text.parse().map_err(|_| Error::Syntax {
                    pos: start,
                    msg: format!("bad polynomial `{text}`"),
                })?;
                o.alexander = Some(poly);
            } else {
                return Err(self.err("expected `a2=`, `hyperbolic`, `jsj=[` or `alex=`"));
            }
        }
        self.expect(")")?;
        Ok(KnotExpr::Opaque(o))
    }

    fn piece(&mut self, owner: &str) -> Result<JsjPiece> {
        if self.eat("torus_ext") {
            self.expect("(")?;
            let (p, q) = self.int_pair(")")?;
            Ok(JsjPiece::TorusExterior(TorusType::new(p, q)?))
        } else if self.eat("cable_space") {
            self.expect("(")?;
            let (p, q) = self.int_pair(")")?;
            check_pair(p, q)?;
            Ok(JsjPiece::CableSpace { p, q })
        } else if self.eat("hyp") {
            Ok(JsjPiece::Hyperbolic(owner.to_string()))
        } else {
            Err(self.err("expected `torus_ext(`, `cable_space(` or `hyp`"))
        }
    }
}
