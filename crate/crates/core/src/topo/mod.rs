//! Topological model: knot expressions, torus-knot types, Seifert pieces
//! and JSJ graphs of knot exteriors.

mod jsj;
mod knot;
mod seifert;
mod torus;

pub use jsj::{jsj_contains, jsj_find, jsj_graph, Containment, JsjGraph, JsjPiece, PiecePattern};
pub use knot::{parse_knot, KnotExpr, OpaqueKnot};
pub use seifert::{
    recognize_torus_exterior, sfs_equivalent, sfs_normal_form, NormalForm, Orientation,
    SeifertPiece,
};
pub use torus::TorusType;
