//! Checks the group-theoretic generation lemmas behind the rotation-algebra
//! results: inside a 2-reflection group, natural families of rotations —
//! products su of noncommuting reflections, products of adjacent simple
//! reflections, rotations of odd order — generate the full rotation
//! subgroup O.
//!
//! Run with: cargo run --release --example generation_lemmas

use reflalg::groups::{build_named, ReflectionGroup};

/// Products su over all pairs of reflections with su != us.
fn noncommuting_products(g: &ReflectionGroup) -> Vec<u32> {
    let mut out = Vec::new();
    for &s in &g.reflections {
        for &u in &g.reflections {
            if g.mul(s, u) != g.mul(u, s) {
                out.push(g.mul(s, u));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Rotations of odd order > 1.
fn odd_order_rotations(g: &ReflectionGroup) -> Vec<u32> {
    g.rotation_subgroup()
        .elems
        .iter()
        .copied()
        .filter(|&x| {
            let k = g.element_order[x as usize];
            k > 1 && k % 2 == 1
        })
        .collect()
}

fn main() {
    for name in ["S4", "S5", "B3", "D4", "G(3,3,3)", "I2(5)", "I2(7)"] {
        let g = build_named(name).expect("known group");
        let rot = g.rotation_subgroup().len();

        let by_products = g.generated_subgroup(&noncommuting_products(&g)).len();
        println!(
            "{:8} |O| = {:3}  <su : su != us> has order {:3}  {}",
            name,
            rot,
            by_products,
            if by_products == rot { "= O" } else { "proper" }
        );

        if let Some(simples) = g.simple_reflections() {
            let pairs: Vec<u32> = simples
                .windows(2)
                .map(|w| g.mul(w[0], w[1]))
                .collect();
            let by_simples = g.generated_subgroup(&pairs).len();
            println!(
                "         adjacent simple products generate order {:3}  {}",
                by_simples,
                if by_simples == rot { "= O" } else { "proper" }
            );
        }

        let odd = odd_order_rotations(&g);
        if !odd.is_empty() {
            let by_odd = g.generated_subgroup(&odd).len();
            println!(
                "         odd-order rotations generate order {:3}  {}",
                by_odd,
                if by_odd == rot { "= O" } else { "proper" }
            );
        }
    }
}
