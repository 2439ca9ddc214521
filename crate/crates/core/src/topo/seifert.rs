//! Seifert fibered pieces over a disk or planar surface, in Hatcher's
//! notation `M(0,b; ρ₁,…,ρₙ)`.
//!
//! Each `ρ = β/α` is stored exactly. The multiplicity of the fiber is the
//! denominator `α`; the filling slope is `α·c + β·h` in the section/fiber
//! basis. (Hatcher writes the fraction with the multiplicity on top; the
//! cable-space formulas used here all put it in the denominator, and that
//! is the convention adopted.) Reversing orientation negates every `ρ`.

use std::fmt;

use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::torus::TorusType;
use crate::arith::{Int, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeifertPiece {
    pub boundary_components: u32,
    pub fibers: Vec<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Same,
    Reversed,
}

/// Normal form of a bounded piece: sorted `(multiplicity, residue)` pairs.
pub type NormalForm = Vec<(Int, Int)>;

impl SeifertPiece {
    pub fn new(boundary_components: u32, fibers: Vec<Rational>) -> Result<Self> {
        if boundary_components == 0 {
            return Err(Error::UnsupportedShape(
                "closed pieces are not modelled".into(),
            ));
        }
        Ok(SeifertPiece {
            boundary_components,
            fibers,
        })
    }

    /// `M(0,1; ρ₁, …)`.
    pub fn disk(fibers: Vec<Rational>) -> Self {
        SeifertPiece {
            boundary_components: 1,
            fibers,
        }
    }

    pub fn reversed(&self) -> Self {
        SeifertPiece {
            boundary_components: self.boundary_components,
            fibers: self.fibers.iter().map(|r| -r).collect(),
        }
    }

    /// Multiset of `(α, β mod α)`; regular fibers (`α = 1`) are dropped.
    pub fn normal_form(&self) -> NormalForm {
        let mut nf: NormalForm = self
            .fibers
            .iter()
            .filter(|r| !r.denom().is_one())
            .map(|r| (r.denom().clone(), r.numer().mod_floor(r.denom())))
            .collect();
        nf.sort();
        nf
    }

    fn require_disk(&self) -> Result<()> {
        if self.boundary_components != 1 {
            return Err(Error::UnsupportedShape(format!(
                "expected genus 0 with one boundary component, got {} boundary components",
                self.boundary_components
            )));
        }
        Ok(())
    }
}

impl fmt::Display for SeifertPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M(0,{}", self.boundary_components)?;
        for (i, r) in self.fibers.iter().enumerate() {
            f.write_str(if i == 0 { "; " } else { ", " })?;
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for SeifertPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn sfs_normal_form(piece: &SeifertPiece) -> NormalForm {
    piece.normal_form()
}

/// Homeomorphism test for one-boundary pieces over the disk, with the
/// orientation relation requested. Integer parts of the `ρᵢ` are absorbed
/// by section changes, so only residues are compared.
pub fn sfs_equivalent(
    a: &SeifertPiece,
    b: &SeifertPiece,
    orientation: Orientation,
) -> Result<bool> {
    a.require_disk()?;
    b.require_disk()?;
    let b_nf = match orientation {
        Orientation::Same => b.normal_form(),
        Orientation::Reversed => b.reversed().normal_form(),
    };
    Ok(a.normal_form() == b_nf)
}

/// Recognizes `E(T_{P,Q}) ≅ M(0,1; R/Q, S/P)` with `PR + QS = 1`.
///
/// For exceptional fibers `(a, x)` and `(b, y)` the piece is a positive torus
/// knot exterior iff `b·x ≡ 1 (mod a)` and `a·y ≡ 1 (mod b)`; the test is
/// symmetric in which fiber plays `P`. The mirror is detected by running
/// the same test on the negated residues.
pub fn recognize_torus_exterior(piece: &SeifertPiece) -> Result<Option<TorusType>> {
    piece.require_disk()?;
    let nf = piece.normal_form();
    let [(a, x), (b, y)] = nf.as_slice() else {
        return Ok(None);
    };
    if !a.gcd(b).is_one() {
        return Ok(None);
    }
    let fits =
        |x: &Int, y: &Int| (b * x - 1i32).is_multiple_of(a) && (a * y - 1i32).is_multiple_of(b);
    if fits(x, y) {
        Ok(Some(TorusType::new(a.clone(), b.clone())?))
    } else if fits(&-x, &-y) {
        Ok(Some(TorusType::new(-a, b.clone())?))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disk(fracs: &[(i64, i64)]) -> SeifertPiece {
        SeifertPiece::disk(fracs.iter().map(|&(n, d)| Rational::frac(n, d)).collect())
    }

    fn nf(pairs: &[(i64, i64)]) -> NormalForm {
        let mut v: NormalForm = pairs
            .iter()
            .map(|&(a, b)| (Int::from(a), Int::from(b)))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(
            disk(&[(2, 3), (-1, 2)]).normal_form(),
            nf(&[(3, 2), (2, 1)])
        );
        assert_eq!(disk(&[(1, 2), (1, 5)]).normal_form(), nf(&[(2, 1), (5, 1)]));
        assert_eq!(disk(&[(5, 1), (1, 2)]).normal_form(), nf(&[(2, 1)]));
    }

    #[test]
    fn equivalence_examples() {
        // −1/2 and 1/2 have the same residue mod 1, so these agree.
        let a = disk(&[(2, 3), (-1, 2)]);
        let b = disk(&[(2, 3), (1, 2)]);
        assert!(sfs_equivalent(&a, &b, Orientation::Same).unwrap());

        let c = disk(&[(1, 3), (1, 2)]);
        assert!(sfs_equivalent(&b, &c, Orientation::Reversed).unwrap());
        assert!(!sfs_equivalent(&b, &c, Orientation::Same).unwrap());
        assert!(sfs_equivalent(&a, &a, Orientation::Same).unwrap());
    }

    #[test]
    fn equivalence_rejects_other_shapes() {
        let two = SeifertPiece::new(2, vec![Rational::frac(1, 2)]).unwrap();
        assert!(matches!(
            sfs_equivalent(&two, &two, Orientation::Same),
            Err(Error::UnsupportedShape(_))
        ));
        assert!(SeifertPiece::new(0, vec![]).is_err());
    }

    #[test]
    fn recognition_examples() {
        let t = recognize_torus_exterior(&disk(&[(2, 3), (-1, 2)])).unwrap();
        assert_eq!(t, Some(TorusType::new(2, 3).unwrap()));
        let t = recognize_torus_exterior(&disk(&[(1, 3), (1, 2)])).unwrap();
        assert_eq!(t, Some(TorusType::new(-2, 3).unwrap()));
        assert_eq!(
            recognize_torus_exterior(&disk(&[(1, 2), (1, 4)])).unwrap(),
            None
        );
        assert_eq!(recognize_torus_exterior(&disk(&[(1, 2)])).unwrap(), None);
        // residues that fit neither orientation
        assert_eq!(
            recognize_torus_exterior(&disk(&[(1, 5), (1, 2)])).unwrap(),
            None
        );
    }
}
