//! Solves for and verifies the polynomial identities satisfied by group
//! elements in the group algebra: for an element x of odd order N, x itself
//! is a polynomial in x - x^{-1}; the example computes that polynomial
//! exactly for several N, checks it in the cyclic group algebra, and then
//! checks it on actual cycles inside symmetric groups. It finishes with the
//! quartic expressing the adjoint action of an order-3 element g as a
//! polynomial in ad(g) - ad(g^{-1}).
//!
//! Run with: cargo run --release --example polynomial_identities

use reflalg::groups::build_named;
use reflalg::identities::{
    ad3_polynomial, odd_order_poly, verify_ad3, verify_in_cyclic, verify_in_group, VerifyMode,
};

fn main() {
    for n in [3u32, 5, 7, 9] {
        let p = odd_order_poly(n).expect("odd order");
        let ok = verify_in_cyclic(n, &p, VerifyMode::SelfElement);
        println!("N = {n}:  x = P(x - x^-1) with P = {p}");
        println!("        cyclic check: {}", if ok { "ok" } else { "FAILED" });
    }

    // The same identities hold for cycles inside a symmetric group.
    let s7 = build_named("S7").expect("S7");
    for order in [3u32, 5, 7] {
        let p = odd_order_poly(order).expect("odd order");
        let g = (0..s7.order() as u32)
            .find(|&x| s7.element_order[x as usize] == order)
            .expect("cycle exists");
        let ok = verify_in_group(&s7, g, &p, VerifyMode::SelfElement);
        println!(
            "order-{order} element of S7: {}",
            if ok { "identity holds" } else { "FAILED" }
        );
    }

    let q = ad3_polynomial();
    println!("\norder-3 adjoint polynomial: Q = {q}");
    let s4 = build_named("S4").expect("S4");
    let g = (0..s4.order() as u32)
        .find(|&x| s4.element_order[x as usize] == 3)
        .expect("3-cycle exists");
    let ok = verify_ad3(&s4, g).expect("element has order 3");
    println!(
        "Ad(g) = Q(ad g - ad g^-1) on a 3-cycle of S4: {}",
        if ok { "holds" } else { "FAILED" }
    );
}
