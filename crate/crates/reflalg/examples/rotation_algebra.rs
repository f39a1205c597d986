//! Closes the span of the commutators [s, u] = su - us (s, u reflections)
//! under the Lie bracket inside the group algebra of the rotation subgroup,
//! reporting the dimension after each round until it stabilizes.
//!
//! For the symmetric groups the final dimension matches the closed-form
//! count from the structure theorem; the example prints both side by side.
//!
//! Run with: cargo run --release --example rotation_algebra

use reflalg::closure::rotation_algebra;
use reflalg::combinatorics::type_a_rotation_dim;
use reflalg::field::FieldSpec;
use reflalg::groups::build_named;

fn main() {
    for (name, field) in [
        ("S4", FieldSpec::Rational),
        ("S5", FieldSpec::Rational),
        ("S6", FieldSpec::Rational),
        ("D4", FieldSpec::Rational),
        ("B3", FieldSpec::Rational),
        ("S7", FieldSpec::Prime(113)),
    ] {
        let group = build_named(name).expect("known group");
        let report = rotation_algebra(&group, field);

        let steps: Vec<String> = report.steps.iter().map(|d| d.to_string()).collect();
        print!(
            "{:3} over {:8} {} generators, steps {} -> dim A = {}",
            name,
            field.to_string(),
            report.generators,
            steps.join(" "),
            report.final_dim
        );
        if name.starts_with('S') {
            let n: u32 = name[1..].parse().unwrap();
            if n >= 5 {
                print!("  (formula: {})", type_a_rotation_dim(n));
            }
        }
        println!("  [{} ms]", report.elapsed_ms);
    }
}
