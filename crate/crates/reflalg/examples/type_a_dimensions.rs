//! Evaluates the closed-form dimension of the rotation algebra of the
//! symmetric group S_n. The formula sums classical Lie algebra dimensions
//! over the non-hook partitions of n, with self-conjugate shapes split into
//! real and quaternionic type; the example prints the full breakdown for
//! small n and the totals up to n = 12.
//!
//! Run with: cargo run --release --example type_a_dimensions

use reflalg::combinatorics::{type_a_rotation_breakdown, type_a_rotation_dim};

fn main() {
    for n in [5u32, 6, 7] {
        println!("S{n}:");
        let mut total: u128 = 0;
        for term in type_a_rotation_breakdown(n) {
            println!(
                "  {:14} {:16} dim V = {:4}  contributes {}",
                term.partition, term.class, term.dim, term.contribution
            );
            total += term.contribution;
        }
        println!("  total: {total}\n");
    }

    println!("dim A(S_n) for n = 5..12:");
    for n in 5u32..=12 {
        println!("  n = {:2}  {}", n, type_a_rotation_dim(n));
    }
}
