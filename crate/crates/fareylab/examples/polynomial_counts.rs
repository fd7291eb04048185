//! Counts primitive linear polynomials with a root in the unit cube for
//! D = 0, 1, 2, and ties the D = 1 census back to the Farey sequence.
//!
//! ```bash
//! cargo run --release --example polynomial_counts
//! ```

use fareylab::arith::{SummatoryTable, TotientTable};
use fareylab::farey::farey_cardinality;
use fareylab::poly::{count_polys, count_polys_naive, PolyCountOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let options = PolyCountOptions::default();
    let totients = TotientTable::new(500)?;
    let sums = SummatoryTable::new(&totients)?;

    println!(
        "{:>3} {:>5} {:>12} {:>12} {:>8}",
        "D", "N", "count", "leading", "ratio"
    );
    for d in 0..=2u8 {
        for n in [10u64, 100, 500] {
            let result = count_polys(d, n, options, false)?;
            println!(
                "{d:>3} {n:>5} {:>12} {:>12.1} {:>8.4}",
                result.count, result.leading, result.ratio
            );
        }
    }

    // D = 1 is the Farey sequence in disguise: roots a₂/a₁ ∈ [0, 1] in
    // lowest terms with a₁ ≤ N.
    for n in [10u64, 100, 500] {
        assert_eq!(
            count_polys(1, n, options, false)?.count,
            farey_cardinality(n, &sums)? as u128
        );
    }
    println!("\nT_N^1 = |F_N| confirmed at N = 10, 100, 500");

    // And the batched D = 2 count agrees with the brute-force census.
    let batched = count_polys(2, 30, options, false)?.count;
    let naive = count_polys_naive(2, 30, options)?.count;
    assert_eq!(batched, naive);
    println!("T_30^2 = {batched} by both the batched and the brute-force census");
    Ok(())
}
