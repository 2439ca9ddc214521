//! How surgery on a cable `K_{p,q}` decomposes, for slopes on each side of
//! the cabling slope `pq`.

use cosmetry::arith::int;
use cosmetry::surgery::{describe_cable_surgery, outer_basis, Slope};

fn main() -> cosmetry::Result<()> {
    let (p, q) = (int(7), int(2));
    let basis = outer_basis(&p, &q)?;
    println!(
        "outer basis for (7,2): {:?}, det {}",
        basis.rows,
        basis.det()
    );

    for slope in ["14", "13", "15", "27/2", "29/2", "9/2", "100/7"] {
        let slope: Slope = slope.parse()?;
        let desc = describe_cable_surgery(&p, &q, &slope)?;
        println!("{slope:>6}: {desc}");
        println!("        {}", serde_json::to_string(&desc).unwrap());
    }
    Ok(())
}
