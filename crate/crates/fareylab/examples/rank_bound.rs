//! Compares unit-fraction ranks against the exact bound (N² + N)/(2k).
//!
//! ```bash
//! cargo run --example rank_bound
//! ```

use fareylab::arith::FactorSieve;
use fareylab::farey::{rank_upper_bound, unit_rank_eq3};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let order = 100u64;
    let sieve = FactorSieve::new(order)?;

    println!("I_{order}(1/k) against (N²+N)/(2k):\n");
    println!("{:>4} {:>10} {:>12} {:>8}", "k", "rank", "bound", "fill");
    for k in [1u64, 2, 3, 5, 10, 20, 50, 100] {
        let rank = unit_rank_eq3(order, k, &sieve)?.index;
        let bound = rank_upper_bound(order, k)?;
        let bound_real = *bound.numer() as f64 / *bound.denom() as f64;
        println!(
            "{k:>4} {rank:>10} {bound_real:>12.2} {:>7.1}%",
            rank as f64 / bound_real * 100.0
        );
    }
    println!("\nthe bound is tightest at small k, where F_N is densest above 1/k");
    Ok(())
}
