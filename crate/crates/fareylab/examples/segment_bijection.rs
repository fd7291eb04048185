//! Maps F_i onto a Farey segment of F_N through h/k ↦ k/(kq−h) and
//! verifies the pairing is a bijection that preserves order.
//!
//! ```bash
//! cargo run --example segment_bijection
//! ```

use fareylab::farey::FareyIter;
use fareylab::segment::{segment_map, segment_slice, verify_bijection, SegmentSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (i, n) = (3u64, 12u64);
    println!("N = {n} is a multiple of i = {i} and i+1 = {}", i + 1);
    println!(
        "admissible q window: {:?}\n",
        SegmentSpec::admissible_q(i, n)?
    );

    let q = 4u64;
    println!(
        "q = {q}: F_{i} maps onto the fractions of F_{n} in [1/{q}, 1/{}]",
        q - 1
    );
    for f in FareyIter::new(i) {
        println!("  {f:>4}  ↦  {}", segment_map(f, q)?);
    }
    let slice: Vec<String> = segment_slice(n, q)?.iter().map(|f| f.to_string()).collect();
    println!("segment slice: {}", slice.join(" "));

    let report = verify_bijection(SegmentSpec::new(i, n, q)?)?;
    println!(
        "\nbijective: {}, order preserved: {}, {} ↔ {} elements",
        report.bijective, report.order_preserved, report.domain_size, report.image_size
    );
    Ok(())
}
