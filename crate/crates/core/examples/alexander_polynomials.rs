//! Alexander polynomials of torus knots and cables, the second coefficient
//! `a₂` by two routes, and the L-space form test.

use cosmetry::alexander::{a2_paths, alexander_of, lspace_form};
use cosmetry::topo::KnotExpr;

fn main() -> cosmetry::Result<()> {
    let knots = [
        "torus(2,3)",
        "torus(-2,5)",
        "torus(3,4)",
        "cable(7,2; torus(2,3))",
        "cable(5,2; torus(2,3))",
        "cable(53,2; cable(13,2; torus(2,3)))",
    ];
    for src in knots {
        let knot: KnotExpr = src.parse()?;
        let delta = alexander_of(&knot)?;
        let paths = a2_paths(&knot)?;
        let form = lspace_form(&delta)?;
        println!("{knot}");
        println!("  Δ  = {}", delta.to_pretty());
        println!(
            "  a₂ = {} (cabling) / {} (polynomial)",
            paths.cabling,
            paths.polynomial.map_or("n/a".into(), |a| a.to_string())
        );
        match &form.exponents {
            Some(exps) => println!("  L-space form: yes, exponents {exps:?}"),
            None => println!("  L-space form: no"),
        }
    }
    Ok(())
}
