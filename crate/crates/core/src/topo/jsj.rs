use std::fmt;

use super::knot::KnotExpr;
use super::seifert::{recognize_torus_exterior, SeifertPiece};
use super::torus::TorusType;
use crate::error::{Error, Result};

/// One piece of the JSJ decomposition of a knot exterior.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum JsjPiece {
    /// Oriented torus-knot exterior `E(T_{p,q})`.
    TorusExterior(TorusType),
    /// Cable space `C_{p,q}`; two boundary tori.
    CableSpace {
        p: i64,
        q: i64,
    },
    Hyperbolic(String),
    /// A Seifert piece over the disk given by its invariants.
    SeifertDisk2(SeifertPiece),
}

impl JsjPiece {
    /// Torus-knot type of a one-boundary Seifert piece, if it is one.
    pub fn torus_type(&self) -> Option<TorusType> {
        match self {
            JsjPiece::TorusExterior(t) => Some(t.clone()),
            JsjPiece::SeifertDisk2(piece) => recognize_torus_exterior(piece).ok().flatten(),
            JsjPiece::CableSpace { .. } | JsjPiece::Hyperbolic(_) => None,
        }
    }
}

impl fmt::Display for JsjPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JsjPiece::TorusExterior(t) => write!(f, "torus_ext({},{})", t.p(), t.q()),
            JsjPiece::CableSpace { p, q } => write!(f, "cable_space({p},{q})"),
            JsjPiece::Hyperbolic(_) => f.write_str("hyp"),
            JsjPiece::SeifertDisk2(piece) => write!(f, "seifert({piece})"),
        }
    }
}

/// JSJ pieces ordered from the innermost piece out to the one containing
/// `∂E(K)`; consecutive pieces share a gluing torus.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct JsjGraph {
    pub pieces: Vec<JsjPiece>,
}

impl JsjGraph {
    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// The piece whose boundary includes `∂E(K)`.
    pub fn outermost(&self) -> Option<&JsjPiece> {
        self.pieces.last()
    }
}

impl fmt::Display for JsjGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, piece) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{piece}")?;
        }
        f.write_str("]")
    }
}

pub fn jsj_graph(knot: &KnotExpr) -> Result<JsjGraph> {
    let pieces = match knot {
        KnotExpr::Unknot => vec![],
        KnotExpr::Torus { p, q } => vec![JsjPiece::TorusExterior(TorusType::new(*p, *q)?)],
        KnotExpr::Cable { companion, p, q } => {
            let mut pieces = jsj_graph(companion)?.pieces;
            pieces.push(JsjPiece::CableSpace { p: *p, q: *q });
            pieces
        }
        KnotExpr::Opaque(o) if !o.declared_jsj.is_empty() => o.declared_jsj.clone(),
        KnotExpr::Opaque(o) if o.hyperbolic => vec![JsjPiece::Hyperbolic(o.name.clone())],
        KnotExpr::Opaque(o) => {
            return Err(Error::MissingOpaqueData {
                name: o.name.clone(),
                what: "`hyperbolic` or a declared jsj list",
            })
        }
    };
    Ok(JsjGraph { pieces })
}

/// What [`jsj_contains`] looks for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PiecePattern {
    TorusExterior(TorusType),
    /// Any `(r,2)` torus-knot exterior.
    TwoTorusFamily,
}

/// Whether torus-exterior matching respects orientation. `Unoriented`
/// also accepts the mirror, which is the conservative reading.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Containment {
    #[default]
    Oriented,
    Unoriented,
}

/// First piece matching `pattern`, if any.
pub fn jsj_find<'g>(
    graph: &'g JsjGraph,
    pattern: &PiecePattern,
    mode: Containment,
) -> Option<&'g JsjPiece> {
    graph.pieces.iter().find(|piece| {
        let Some(t) = piece.torus_type() else {
            return false;
        };
        match pattern {
            PiecePattern::TwoTorusFamily => t.has_multiplicity_two(),
            PiecePattern::TorusExterior(target) => {
                t == *target || (mode == Containment::Unoriented && t == target.mirror())
            }
        }
    })
}

pub fn jsj_contains(graph: &JsjGraph, pattern: &PiecePattern, mode: Containment) -> bool {
    jsj_find(graph, pattern, mode).is_some()
}
