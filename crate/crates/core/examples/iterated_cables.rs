//! Iterated torus knots `T(p₁,q₁)_{p₂,q₂;…}` and iterated cables of a
//! hyperbolic knot.

use cosmetry::obstruction::check_iterated;
use cosmetry::topo::KnotExpr;

fn main() -> cosmetry::Result<()> {
    let unknot = KnotExpr::Unknot;
    let cases: &[&[(i64, i64)]] = &[
        &[(3, 2)],
        &[(3, 5)],
        &[(3, 2), (13, 2)],
        &[(-3, 2), (3, 2)],
        &[(3, 2), (-13, 2)],
        &[(2, 3), (3, 2), (5, 2)],
    ];
    for params in cases {
        let report = check_iterated(params, &unknot)?;
        println!(
            "{params:?}: {} ({})",
            report.verdict,
            report.fired.as_deref().unwrap_or("-")
        );
    }

    let base: KnotExpr = "opaque(k; hyperbolic; a2=1; jsj=[hyp])".parse()?;
    let report = check_iterated(&[(3, 2), (7, 2)], &base)?;
    println!("\nover {base}:\n{report}");
    Ok(())
}
