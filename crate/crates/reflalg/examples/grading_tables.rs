//! Computes the grading of the infinitesimal Hecke algebra for a handful of
//! small 2-reflection groups and prints each row in the shape of the
//! published tables: the homogeneous dimensions H^1, H^2, ..., the stable
//! (even, odd) pair they settle into, and the center dimension.
//!
//! Every run is certified by repeating the computation over two finite
//! fields (and over the rationals when the group is small enough) and
//! asserting that all dimension sequences agree.
//!
//! Run with: cargo run --release --example grading_tables

use reflalg::closure::certified_grading;
use reflalg::groups::build_named;

fn main() {
    for name in ["S3", "S4", "S5", "S6", "B3", "B4", "D4", "I2(5)", "I2(6)"] {
        let group = build_named(name).expect("known group");
        let report = certified_grading(&group, 32, true);

        let dims: Vec<String> = report.dims_hgr.iter().map(|d| d.to_string()).collect();
        println!(
            "{:6} |W| = {:4}  dim Z = {}  H: {}",
            name,
            group.order(),
            report.dim_z,
            dims.join(" ")
        );
        println!(
            "       stable pair ({}, {}) from degree {}, full dim {}",
            report.stable_even.expect("converged"),
            report.stable_odd.expect("converged"),
            report.stabilization_degree.expect("converged"),
            report.full_dim()
        );
        println!("       {}", report.certification.as_deref().unwrap_or(""));
    }
}
