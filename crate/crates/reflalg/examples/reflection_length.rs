//! Computes m(W), the diameter of a 2-reflection group in the word metric
//! of its reflection generating set, by breadth-first search on the Cayley
//! graph, together with the basic invariants of each group.
//!
//! Run with: cargo run --release --example reflection_length

use reflalg::groups::build_named;

fn main() {
    let names = [
        "S3", "S4", "S5", "S6", "B2", "B3", "B4", "D4", "D5", "I2(5)", "I2(6)", "I2(7)", "I2(8)",
        "G(3,3,3)", "G(3,3,4)", "G(4,4,3)", "G(4,4,4)", "G(6,3,2)",
    ];
    println!(
        "{:10} {:>6} {:>12} {:>8} {:>6}",
        "group", "|W|", "reflections", "classes", "m(W)"
    );
    for name in names {
        let group = build_named(name).expect("known group");
        let report = group.describe();
        println!(
            "{:10} {:>6} {:>12} {:>8} {:>6}",
            name,
            report.order,
            report.reflections,
            report.reflection_classes.len(),
            group.reflection_length_diameter()
        );
    }
}
