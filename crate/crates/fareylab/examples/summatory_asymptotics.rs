//! Convergence of the four summatory relations that drive the series
//! limit: Σφ(k), Σφ(k)/k, Σφ(k)·k, and Σφ(k)/k³.
//!
//! ```bash
//! cargo run --release --example summatory_asymptotics
//! ```

use fareylab::arith::TotientTable;
use fareylab::series::{summatory_checks, Constants};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = Constants::standard();
    let totients = TotientTable::new(100_000)?;

    for n in [100u64, 1000, 10_000, 100_000] {
        println!("N = {n}:");
        for row in summatory_checks(n, n.min(10_000), &totients, &c)? {
            println!(
                "  {:<22} lhs {:>16.4}  leading {:>16.4}  ratio {:.5}",
                row.name, row.lhs, row.leading, row.ratio
            );
        }
    }
    println!(
        "\nζ(2)/ζ(3) = {:.9} is the cubic series' limit",
        c.zeta2 / c.zeta3
    );
    Ok(())
}
