//! The known chirally cosmetic family on `(r,2)` torus knots, and a parallel
//! search for slope pairs passing the necessary conditions.

use cosmetry::search::{enumerate_candidates, family_b_pair, search_summary, verify_family_b};
use cosmetry::topo::KnotExpr;

fn main() -> cosmetry::Result<()> {
    for k in 0..3 {
        let (plus, minus) = family_b_pair(3, k)?;
        println!("r=3 k={k}: {plus} and {minus}");
    }

    let report = verify_family_b(5, 4)?;
    println!(
        "r=5: {}/{} pairs pass",
        report.passed(),
        report.checks.len()
    );

    let trefoil: KnotExpr = "torus(3,2)".parse()?;
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let found = enumerate_candidates(&trefoil, 60, 30, threads)?;
    for c in &found {
        let tag = c
            .family_b
            .map_or(String::new(), |f| format!("  family r={} k={}", f.r, f.k));
        println!("  {}/{} ~ {}/{}{tag}", c.m, c.n, c.m, c.n_prime);
    }
    let summary = search_summary(&trefoil, 60, 30, &found)?;
    println!("{}", serde_json::to_string_pretty(&summary).unwrap());
    Ok(())
}
