//! Dedekind sums by reciprocity, checked against the defining sum.
//!
//! ```text
//! cargo run --example dedekind_sums
//! ```

use cosmetry::arith::{dedekind, dedekind_direct, int};

fn main() -> cosmetry::Result<()> {
    println!("{:>4} {:>4}  s(a,b)", "a", "b");
    for (a, b) in [(1, 2), (2, 9), (4, 11), (-3, 7), (100, 7), (21, 34)] {
        let (a, b) = (int(a), int(b));
        let fast = dedekind(&a, &b)?;
        assert_eq!(fast, dedekind_direct(&a, &b)?);
        println!("{a:>4} {b:>4}  {fast}");
    }

    // s(a,b) + s(b,a) = (a² + b² + 1)/(12ab) − 1/4
    let (a, b) = (int(89), int(144));
    let lhs = dedekind(&a, &b)? + dedekind(&b, &a)?;
    println!("\ns(89,144) + s(144,89) = {lhs}");

    // Huge arguments stay cheap: reciprocity needs O(log b) steps.
    let big = int(10).pow(40);
    let s = dedekind(&(&big - 1), &big)?;
    println!("s(10^40 − 1, 10^40) = {s}");
    Ok(())
}
