//! Normal forms of Seifert pieces over the disk and recognition of torus
//! knot exteriors, including the mirror.

use cosmetry::arith::Rational;
use cosmetry::topo::{recognize_torus_exterior, sfs_equivalent, Orientation, SeifertPiece};

fn piece(fibers: &[(i64, i64)]) -> SeifertPiece {
    SeifertPiece::disk(fibers.iter().map(|&(b, a)| Rational::frac(b, a)).collect())
}

fn main() -> cosmetry::Result<()> {
    let samples = [
        piece(&[(2, 3), (-1, 2)]),
        piece(&[(1, 3), (1, 2)]),
        piece(&[(-1, 3), (-1, 2)]),
        piece(&[(1, 5), (1, 3)]),
        piece(&[(2, 5), (1, 3)]),
        piece(&[(1, 2), (1, 3), (1, 5)]),
    ];
    for m in &samples {
        let found = recognize_torus_exterior(m)?;
        println!(
            "{m:<28} normal form {:?} -> {}",
            m.normal_form()
                .iter()
                .map(|(a, b)| format!("({a},{b})"))
                .collect::<Vec<_>>(),
            found.map_or("not a torus exterior".into(), |t| format!("E({t})"))
        );
    }

    let (a, b) = (&samples[1], &samples[2]);
    println!(
        "\n{a} vs {b}: same orientation {}, reversed {}",
        sfs_equivalent(a, b, Orientation::Same)?,
        sfs_equivalent(a, b, Orientation::Reversed)?
    );
    Ok(())
}
