//! Ranks one fraction by every available method and shows they agree.
//!
//! ```bash
//! cargo run --example rank_methods
//! ```

use fareylab::arith::{FactorSieve, SummatoryTable, TotientTable};
use fareylab::closed_form::{closed_form_unit_rank, ClosedFormInput};
use fareylab::farey::{
    complement_rank, farey_cardinality, rank_by_enumeration, rank_by_mobius, unit_rank_eq3,
    FareyIter, Fraction,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let order = 12u64;
    let totients = TotientTable::new(order)?;
    let sums = SummatoryTable::new(&totients)?;
    let sieve = FactorSieve::new(order)?;

    println!(
        "F_{order} has {} fractions:",
        farey_cardinality(order, &sums)?
    );
    let terms: Vec<String> = FareyIter::new(order).map(|f| f.to_string()).collect();
    println!("  {}\n", terms.join(" "));

    let target = Fraction::new(1, 3)?;
    println!("rank of {target} in F_{order}, by method:");
    println!(
        "  enumeration walk   {}",
        rank_by_enumeration(order, target)?.index
    );
    println!(
        "  unit summation     {}",
        unit_rank_eq3(order, target.den(), &sieve)?.index
    );
    println!(
        "  coprime counting   {}",
        rank_by_mobius(order, target, &sieve)?.index
    );
    // 1/3 sits in the closed-form window for i = ⌊N/k⌋ = 4.
    let input = ClosedFormInput::new(order, order / target.den(), target.den())?;
    println!(
        "  closed form        {}",
        closed_form_unit_rank(input, &totients, &sums)?.index
    );

    // The complement identity ranks 2/3 from the rank of 1/3.
    let complement = complement_rank(order, target.den(), &sieve, &sums)?;
    println!(
        "\nby symmetry, {} sits at position {} of {}",
        complement.frac,
        complement.index,
        farey_cardinality(order, &sums)?
    );
    Ok(())
}
