//! The Casson–Walker invariant of `m/n` surgery, and the sign test it gives
//! for a pair of slopes.

use cosmetry::alexander::a2_of;
use cosmetry::arith::int;
use cosmetry::invariants::{casson_walker, cw_pair_test, h1_order};
use cosmetry::surgery::Slope;
use cosmetry::topo::KnotExpr;

fn main() -> cosmetry::Result<()> {
    let knot: KnotExpr = "torus(3,2)".parse()?;
    let a2 = a2_of(&knot)?;
    println!("K = {knot}, a₂ = {a2}");
    for (m, n) in [(1, 1), (5, 1), (9, 2), (9, 4), (9, 5), (18, 7), (18, 11)] {
        let s = Slope::new(m, n)?;
        println!(
            "  λ(S³_K({s:>5})) = {:>10}   |H₁| = {}",
            casson_walker(&a2, &s)?.to_string(),
            h1_order(&s)
        );
    }

    // λ(m/n) = −λ(m/n′) is necessary for an orientation-reversing homeomorphism.
    for (m, n, np) in [(9, 5, 4), (9, 2, 1), (18, 11, 7)] {
        let ok = cw_pair_test(&a2, &int(m), &int(n), &int(np))?;
        println!(
            "  {m}/{n} vs {m}/{np}: {}",
            if ok { "passes" } else { "fails" }
        );
    }
    Ok(())
}
