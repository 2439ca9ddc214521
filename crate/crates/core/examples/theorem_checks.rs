//! The case engine on single slope pairs and on whole cables.

use cosmetry::obstruction::{check_pair, check_theorem1, classify_case};
use cosmetry::topo::{KnotExpr, OpaqueKnot};

fn main() -> cosmetry::Result<()> {
    let trefoil: KnotExpr = "torus(2,3)".parse()?;

    println!("== one pair ==");
    let (p, q, m, n, np) = (3, 2, 9, 2, 1);
    println!("case {}", classify_case(p, q, m, n, np)?);
    println!("{}", check_pair(&trefoil, p, q, m, n, np)?);

    println!("\n== whole cables ==");
    let hyperbolic = KnotExpr::opaque(OpaqueKnot {
        hyperbolic: true,
        ..OpaqueKnot::new("figure8")
    });
    for (knot, p, q) in [
        (&trefoil, 3, 5),
        (&trefoil, 7, 2),
        (&trefoil, -3, 2),
        (&hyperbolic, 5, 2),
    ] {
        let report = check_theorem1(knot, p, q)?;
        println!(
            "cable({knot}, {p}, {q}): {} {}",
            report.verdict,
            report.fired.as_deref().unwrap_or("-")
        );
    }

    println!("\n== JSON ==");
    println!("{}", check_theorem1(&trefoil, 3, 5)?.to_json());
    Ok(())
}
