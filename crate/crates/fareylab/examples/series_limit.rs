//! Sweeps S(N) = Σ φ(k)·I_N(1/k) and watches the ratio to N³/(6ζ(3))
//! drift toward 1.
//!
//! ```bash
//! cargo run --release --example series_limit
//! ```

use fareylab::arith::TotientTable;
use fareylab::series::series_sum_sweep;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let orders = [10u64, 30, 100, 300, 1000, 3000, 10_000];
    let totients = TotientTable::new(*orders.last().unwrap())?;

    println!(
        "{:>7} {:>16} {:>16} {:>10}",
        "N", "S(N)", "N³/(6ζ(3))", "ratio"
    );
    for n in orders {
        let report = series_sum_sweep(n, &totients, false)?;
        println!(
            "{n:>7} {:>16} {:>16.1} {:>10.6}",
            report.sum, report.leading, report.ratio
        );
    }
    println!("\nthe deviation shrinks roughly like 1/log N, so expect a slow approach");
    Ok(())
}
