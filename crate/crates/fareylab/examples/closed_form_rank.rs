//! Evaluates the closed-form rank 2 + N·Σφ(j)/j − k·Φ(i) across its
//! validity windows and checks it against the enumeration walk.
//!
//! ```bash
//! cargo run --example closed_form_rank
//! ```

use fareylab::arith::{SummatoryTable, TotientTable};
use fareylab::closed_form::{
    closed_form_unit_rank, lcm_up_to, rank_at_subdivision, ClosedFormInput,
};
use fareylab::farey::{rank_by_enumeration, Fraction};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 60u64;
    let totients = TotientTable::new(n)?;
    let sums = SummatoryTable::new(&totients)?;

    println!("N = {n} is divisible by every integer in [2, 5]\n");
    for i in 1..=5u64 {
        println!(
            "window i = {i} (k from {} to {}), subdivision rank I({}/{}) = {}",
            n.div_ceil(i + 1),
            n / i,
            1,
            n / i,
            rank_at_subdivision(n, i, &sums)?.index,
        );
        for k in n.div_ceil(i + 1)..=n / i {
            let closed = closed_form_unit_rank(ClosedFormInput::new(n, i, k)?, &totients, &sums)?;
            let walked = rank_by_enumeration(n, Fraction::unit(k)?)?;
            assert_eq!(closed.index, walked.index);
            print!("  I(1/{k})={}", closed.index);
        }
        println!();
    }
    println!(
        "\nevery window value matched the enumeration walk; lcm(2..5) = {}",
        lcm_up_to(5)?
    );
    Ok(())
}
