//! Finite 2-reflection groups of the infinite families.
//!
//! Every group is realized inside the wreath-product family G(m,p,n): pairs of
//! a permutation of {1..n} and a color vector of residues mod m whose sum is
//! divisible by p. Symmetric groups are G(1,1,n), type B is G(2,1,n), type D
//! is G(2,2,n) and dihedral groups are G(m,m,2). No field arithmetic is used
//! anywhere: reflections, the sign character and fixed-space codimensions are
//! all computed combinatorially from the permutation/color data.

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

/// Default ceiling on enumerated group order. Large enough for every group in
/// the verification suites (biggest default: B5, order 3840); D6 and beyond
/// must be requested explicitly.
pub const DEFAULT_ELEMENT_CAP: u64 = 50_000;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("malformed group spec `{0}` (expected S<n> | A<n> | B<n> | D<n> | I2(<m>) | G(<m>,<p>,<n>))")]
    Malformed(String),
    #[error("invalid parameters for `{spec}`: {reason}")]
    BadParams { spec: String, reason: String },
    #[error("group `{0}` contains reflections of order > 2")]
    NotTwoReflection(String),
    #[error("group order {order} exceeds element cap {cap}")]
    CapExceeded { order: u128, cap: u64 },
}

/// Family tag, retained from the parsed spelling for display purposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    Symmetric,
    TypeB,
    TypeD,
    Dihedral,
    General,
}

/// Canonical description of an admissible 2-reflection group, normalized to
/// wreath parameters (m, p, n) with S_n = G(1,1,n).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupDescriptor {
    pub name: String,
    pub family: Family,
    pub m: u32,
    pub p: u32,
    pub n: u32,
}

impl GroupDescriptor {
    pub fn order(&self) -> u128 {
        let mut ord: u128 = 1;
        for k in 1..=self.n as u128 {
            ord *= k;
        }
        ord * (self.m as u128).pow(self.n) / self.p as u128
    }
}

impl std::fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// Admissibility: every reflection of G(m,p,n) has order 2 exactly when p = m
/// or (m even and p = m/2). Otherwise some diagonal element with a single
/// nonzero color p is a reflection of order m/gcd(m,p) > 2.
fn two_reflection_admissible(m: u32, p: u32) -> bool {
    p == m || (m % 2 == 0 && 2 * p == m)
}

/// Parses a group spec. Aliases resolve: A_n is S_{n+1} as an abstract group,
/// B_n is G(2,1,n), D_n is G(2,2,n), I2(m) is G(m,m,2).
pub fn parse_group(spec: &str) -> Result<GroupDescriptor, GroupError> {
    let spec = spec.trim();
    let malformed = || GroupError::Malformed(spec.to_string());
    let bad = |reason: &str| GroupError::BadParams {
        spec: spec.to_string(),
        reason: reason.to_string(),
    };

    let descr = if let Some(rest) = spec.strip_prefix("G(") {
        let inner = rest.strip_suffix(')').ok_or_else(malformed)?;
        let parts: Vec<u32> = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| malformed())?;
        let [m, p, n] = parts[..] else {
            return Err(malformed());
        };
        if m == 0 || p == 0 || n == 0 {
            return Err(bad("parameters must be positive"));
        }
        if m % p != 0 {
            return Err(bad("p must divide m"));
        }
        if !two_reflection_admissible(m, p) {
            return Err(GroupError::NotTwoReflection(spec.to_string()));
        }
        GroupDescriptor {
            name: format!("G({m},{p},{n})"),
            family: Family::General,
            m,
            p,
            n,
        }
    } else if let Some(rest) = spec.strip_prefix("I2(") {
        let m: u32 = rest
            .strip_suffix(')')
            .and_then(|t| t.trim().parse().ok())
            .ok_or_else(malformed)?;
        if m < 2 {
            return Err(bad("I2(m) needs m >= 2"));
        }
        GroupDescriptor {
            name: format!("I2({m})"),
            family: Family::Dihedral,
            m,
            p: m,
            n: 2,
        }
    } else {
        if spec.len() < 2 || !spec.is_char_boundary(1) {
            return Err(malformed());
        }
        let (letter, digits) = spec.split_at(1);
        let k: u32 = digits.parse().map_err(|_| malformed())?;
        if k == 0 {
            return Err(bad("rank must be positive"));
        }
        match letter {
            "S" => GroupDescriptor {
                name: format!("S{k}"),
                family: Family::Symmetric,
                m: 1,
                p: 1,
                n: k,
            },
            "A" => GroupDescriptor {
                name: format!("A{k}"),
                family: Family::Symmetric,
                m: 1,
                p: 1,
                n: k + 1,
            },
            "B" => GroupDescriptor {
                name: format!("B{k}"),
                family: Family::TypeB,
                m: 2,
                p: 1,
                n: k,
            },
            "D" => {
                if k < 2 {
                    return Err(bad("D_n needs n >= 2"));
                }
                GroupDescriptor {
                    name: format!("D{k}"),
                    family: Family::TypeD,
                    m: 2,
                    p: 2,
                    n: k,
                }
            }
            _ => return Err(malformed()),
        }
    };
    Ok(descr)
}

/// (permutation, color vector mod m) pair. The product law is
/// (sigma, c)(tau, d) = (sigma tau, c.tau + d) with (c.tau)_i = c_{tau(i)},
/// matching composition of monomial matrices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub perm: Vec<u8>,
    pub col: Vec<u16>,
}

impl WreathElement {
    pub fn identity(n: usize) -> WreathElement {
        WreathElement {
            perm: (0..n as u8).collect(),
            col: vec![0; n],
        }
    }

    pub fn mul(&self, other: &WreathElement, m: u32) -> WreathElement {
        let n = self.perm.len();
        let mut perm = vec![0u8; n];
        let mut col = vec![0u16; n];
        for i in 0..n {
            let t = other.perm[i] as usize;
            perm[i] = self.perm[t];
            col[i] = ((self.col[t] as u32 + other.col[i] as u32) % m) as u16;
        }
        WreathElement { perm, col }
    }

    pub fn inverse(&self, m: u32) -> WreathElement {
        let n = self.perm.len();
        let mut perm = vec![0u8; n];
        let mut col = vec![0u16; n];
        for i in 0..n {
            perm[self.perm[i] as usize] = i as u8;
        }
        for i in 0..n {
            let j = perm[i] as usize; // sigma^{-1}(i)
            col[i] = ((m - self.col[j] as u32) % m) as u16;
        }
        WreathElement { perm, col }
    }

    fn perm_sign(&self) -> i8 {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut sign = 1i8;
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut j = i;
            let mut len = 0;
            while !seen[j] {
                seen[j] = true;
                j = self.perm[j] as usize;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Dimension of the fixed space in the reflection representation: the
    /// number of permutation cycles whose total color is 0 mod m.
    fn fixed_dim(&self, m: u32) -> u32 {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut fixed = 0;
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut j = i;
            let mut total = 0u32;
            while !seen[j] {
                seen[j] = true;
                total = (total + self.col[j] as u32) % m;
                j = self.perm[j] as usize;
            }
            if total == 0 {
                fixed += 1;
            }
        }
        fixed
    }
}

/// Index pair (subgroup element list, reverse lookup) used to restrict
/// group-algebra vectors to a subgroup basis.
#[derive(Debug, Clone)]
pub struct SubIndex {
    /// Global element indices, in increasing order.
    pub elems: Vec<u32>,
    /// Global index -> local index within `elems`.
    pub index_of: Vec<Option<u32>>,
}

impl SubIndex {
    pub fn from_elems(elems: Vec<u32>, group_order: usize) -> SubIndex {
        let mut index_of = vec![None; group_order];
        for (loc, &g) in elems.iter().enumerate() {
            index_of[g as usize] = Some(loc as u32);
        }
        SubIndex { elems, index_of }
    }

    pub fn full(group_order: usize) -> SubIndex {
        SubIndex {
            elems: (0..group_order as u32).collect(),
            index_of: (0..group_order as u32).map(Some).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

/// Fully enumerated 2-reflection group.
///
/// Elements are sorted lexicographically on (one-line permutation, colors),
/// which puts the identity at index 0 and makes all derived indices and
/// reports byte-stable across runs.
pub struct ReflectionGroup {
    pub descriptor: GroupDescriptor,
    pub elements: Vec<WreathElement>,
    index: HashMap<WreathElement, u32>,
    /// Indices of the reflections (order 2, fixed-space codimension 1).
    pub reflections: Vec<u32>,
    /// Sign character: +1 on rotations, -1 otherwise.
    pub sign: Vec<i8>,
    pub inverse: Vec<u32>,
    pub element_order: Vec<u32>,
}

impl ReflectionGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn index_of(&self, e: &WreathElement) -> u32 {
        self.index[e]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let prod = self.elements[a as usize].mul(&self.elements[b as usize], self.descriptor.m);
        self.index[&prod]
    }

    pub fn conjugate(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inverse[g as usize])
    }

    /// Fixed-space codimension of element `i` in the reflection representation.
    pub fn codim_fixed(&self, i: u32) -> u32 {
        self.descriptor.n - self.elements[i as usize].fixed_dim(self.descriptor.m)
    }

    /// Rotation subgroup O = ker(sign), exactly half the group.
    pub fn rotation_subgroup(&self) -> SubIndex {
        let elems: Vec<u32> = (0..self.order() as u32)
            .filter(|&i| self.sign[i as usize] == 1)
            .collect();
        SubIndex::from_elems(elems, self.order())
    }

    /// Partition of `subset` into orbits under conjugation by the subgroup
    /// generated by `conjugators`, by orbit closure.
    pub fn conjugacy_partition(&self, subset: &[u32], conjugators: &[u32]) -> Vec<Vec<u32>> {
        let in_subset: std::collections::HashSet<u32> = subset.iter().copied().collect();
        let mut assigned: HashMap<u32, usize> = HashMap::new();
        let mut classes: Vec<Vec<u32>> = Vec::new();
        for &x in subset {
            if assigned.contains_key(&x) {
                continue;
            }
            let class_id = classes.len();
            // Orbit may leave the subset; the class is orbit intersect subset.
            let mut orbit: std::collections::HashSet<u32> = [x].into();
            let mut work = vec![x];
            let mut members = Vec::new();
            while let Some(y) = work.pop() {
                if in_subset.contains(&y) {
                    members.push(y);
                    assigned.insert(y, class_id);
                }
                for &g in conjugators {
                    let z = self.conjugate(g, y);
                    if orbit.insert(z) {
                        work.push(z);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    /// Smallest subset containing `gens` and the identity, closed under
    /// multiplication (BFS closure). This is the generated subgroup since the
    /// group is finite.
    pub fn generated_subgroup(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0u32];
        let mut work = vec![0u32];
        while let Some(x) = work.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                    work.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Eccentricity of the identity in the Cayley graph generated by the
    /// reflection set: the maximal reflection length m(W).
    pub fn reflection_length_diameter(&self) -> u32 {
        let mut dist = vec![u32::MAX; self.order()];
        dist[0] = 0;
        let mut frontier = vec![0u32];
        let mut depth = 0;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &x in &frontier {
                for &s in &self.reflections {
                    let y = self.mul(s, x);
                    if dist[y as usize] == u32::MAX {
                        dist[y as usize] = depth + 1;
                        next.push(y);
                    }
                }
            }
            depth += 1;
            frontier = next;
        }
        depth.saturating_sub(1)
    }

    /// Conjugacy classes of the reflection set under the full group.
    pub fn reflection_classes(&self) -> Vec<Vec<u32>> {
        let all: Vec<u32> = (0..self.order() as u32).collect();
        self.conjugacy_partition(&self.reflections, &all)
    }

    /// Standard Coxeter generating sets for the A/B/D/I2 families; `None` for
    /// general G(m,p,n).
    pub fn simple_reflections(&self) -> Option<Vec<u32>> {
        let d = &self.descriptor;
        let n = d.n as usize;
        let adjacent = |i: usize| {
            let mut e = WreathElement::identity(n);
            e.perm.swap(i, i + 1);
            self.index_of(&e)
        };
        match (d.m, d.p, d.n) {
            (1, 1, _) if n >= 2 => Some((0..n - 1).map(adjacent).collect()),
            (2, 1, _) => {
                // Type B: adjacent transpositions plus the sign flip on the
                // last coordinate.
                let mut gens: Vec<u32> = (0..n - 1).map(adjacent).collect();
                let mut flip = WreathElement::identity(n);
                flip.col[n - 1] = 1;
                gens.push(self.index_of(&flip));
                Some(gens)
            }
            (2, 2, _) if n >= 2 => {
                // Type D: adjacent transpositions plus the signed pair
                // generator on the last two coordinates.
                let mut gens: Vec<u32> = (0..n - 1).map(adjacent).collect();
                let mut signed = WreathElement::identity(n);
                signed.perm.swap(n - 2, n - 1);
                signed.col[n - 2] = 1;
                signed.col[n - 1] = 1;
                gens.push(self.index_of(&signed));
                Some(gens)
            }
            (m, p, 2) if m == p && m >= 3 => {
                let s = WreathElement {
                    perm: vec![1, 0],
                    col: vec![0, 0],
                };
                let s_omega = WreathElement {
                    perm: vec![1, 0],
                    col: vec![1, (m - 1) as u16],
                };
                Some(vec![self.index_of(&s), self.index_of(&s_omega)])
            }
            _ => None,
        }
    }

    /// JSON description used by the CLI.
    pub fn describe(&self) -> GroupReport {
        let classes = self.reflection_classes();
        GroupReport {
            family: self.descriptor.family,
            name: self.descriptor.name.clone(),
            params: [self.descriptor.m, self.descriptor.p, self.descriptor.n],
            order: self.order() as u64,
            reflections: self.reflections.len() as u64,
            reflection_classes: classes.iter().map(|c| c.len() as u64).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupReport {
    pub family: Family,
    pub name: String,
    pub params: [u32; 3],
    pub order: u64,
    pub reflections: u64,
    pub reflection_classes: Vec<u64>,
}

/// Enumerates the full element table of an admissible group.
pub fn build(descriptor: &GroupDescriptor, element_cap: u64) -> Result<ReflectionGroup, GroupError> {
    let order = descriptor.order();
    if order > element_cap as u128 {
        return Err(GroupError::CapExceeded {
            order,
            cap: element_cap,
        });
    }
    let (m, p, n) = (descriptor.m, descriptor.p, descriptor.n as usize);

    let mut colors: Vec<Vec<u16>> = Vec::new();
    let mut stack = vec![Vec::with_capacity(n)];
    while let Some(cur) = stack.pop() {
        if cur.len() == n {
            let total: u32 = cur.iter().map(|&c: &u16| c as u32).sum();
            if total % p == 0 {
                colors.push(cur);
            }
            continue;
        }
        for c in (0..m as u16).rev() {
            let mut next = cur.clone();
            next.push(c);
            stack.push(next);
        }
    }

    let mut elements: Vec<WreathElement> = Vec::with_capacity(order as usize);
    for perm in (0..n as u8).permutations(n) {
        for col in &colors {
            elements.push(WreathElement {
                perm: perm.clone(),
                col: col.clone(),
            });
        }
    }
    elements.sort_unstable_by(|a, b| (&a.perm, &a.col).cmp(&(&b.perm, &b.col)));
    assert_eq!(elements.len() as u128, order);
    assert_eq!(elements[0], WreathElement::identity(n));

    let index: HashMap<WreathElement, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i as u32))
        .collect();

    let mut inverse = vec![0u32; elements.len()];
    let mut element_order = vec![0u32; elements.len()];
    let mut sign = vec![0i8; elements.len()];
    let mut reflections = Vec::new();
    let ident = WreathElement::identity(n);
    for (i, e) in elements.iter().enumerate() {
        inverse[i] = index[&e.inverse(m)];

        let mut ord = 1u32;
        let mut acc = e.clone();
        while acc != ident {
            acc = acc.mul(e, m);
            ord += 1;
        }
        element_order[i] = ord;

        // Sign = sign(perm) * (-1)^k where the color sum is k*(m/2) mod m.
        let cs: u32 = e.col.iter().map(|&c| c as u32).sum::<u32>() % m;
        let k = if cs == 0 {
            0
        } else {
            assert_eq!(2 * cs, m, "non-real determinant in admissible group");
            1
        };
        sign[i] = e.perm_sign() * if k == 1 { -1 } else { 1 };

        if ord == 2 && (descriptor.n - e.fixed_dim(m)) == 1 {
            reflections.push(i as u32);
        }
    }

    Ok(ReflectionGroup {
        descriptor: descriptor.clone(),
        elements,
        index,
        reflections,
        sign,
        inverse,
        element_order,
    })
}

/// Convenience: parse and build with the default cap.
pub fn build_named(spec: &str) -> Result<ReflectionGroup, GroupError> {
    build(&parse_group(spec)?, DEFAULT_ELEMENT_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_aliases() {
        let s4 = parse_group("S4").unwrap();
        assert_eq!((s4.m, s4.p, s4.n), (1, 1, 4));
        let a3 = parse_group("A3").unwrap();
        assert_eq!((a3.m, a3.p, a3.n), (1, 1, 4));
        let d5 = parse_group("D5").unwrap();
        assert_eq!((d5.m, d5.p, d5.n), (2, 2, 5));
        let i25 = parse_group("I2(5)").unwrap();
        assert_eq!((i25.m, i25.p, i25.n), (5, 5, 2));
        let b3 = parse_group("B3").unwrap();
        assert_eq!((b3.m, b3.p, b3.n), (2, 1, 3));
    }

    #[test]
    fn parse_rejects_higher_order_reflections() {
        // diag(i,1,1) lies in G(4,1,3) and has order 4.
        assert!(matches!(
            parse_group("G(4,1,3)"),
            Err(GroupError::NotTwoReflection(_))
        ));
        assert!(matches!(
            parse_group("G(8,2,3)"),
            Err(GroupError::NotTwoReflection(_))
        ));
        assert!(parse_group("G(4,2,3)").is_ok());
        assert!(parse_group("G(6,3,2)").is_ok());
        assert!(parse_group("G(3,3,3)").is_ok());
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in ["", "X4", "G(4,3,2)", "G(4,2)", "I2()", "S0", "G(0,1,2)"] {
            assert!(parse_group(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn orders_and_reflection_counts() {
        for (spec, order, nrefl) in [
            ("S4", 24, 6),
            ("B3", 48, 9),
            ("I2(5)", 10, 5),
            ("D4", 192, 12),
            ("G(3,3,3)", 54, 9),
            ("G(4,2,2)", 16, 6),
        ] {
            let g = build_named(spec).unwrap();
            assert_eq!(g.order(), order, "{spec} order");
            assert_eq!(g.reflections.len(), nrefl, "{spec} reflections");
        }
    }

    #[test]
    fn element_cap_enforced() {
        let d = parse_group("S7").unwrap();
        assert!(matches!(
            build(&d, 100),
            Err(GroupError::CapExceeded { order: 5040, .. })
        ));
    }

    #[test]
    fn sign_is_morphism_and_negative_on_reflections() {
        for spec in ["S5", "B3", "D4", "I2(6)", "G(4,2,2)", "G(3,3,3)"] {
            let g = build_named(spec).unwrap();
            for &s in &g.reflections {
                assert_eq!(g.sign[s as usize], -1, "{spec} reflection sign");
            }
            // Deterministic pseudo-random pairs.
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..1000 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = (state >> 33) as usize % g.order();
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let b = (state >> 33) as usize % g.order();
                let prod = g.mul(a as u32, b as u32);
                assert_eq!(
                    g.sign[prod as usize],
                    g.sign[a] * g.sign[b],
                    "{spec} sign morphism"
                );
            }
            let rot = g.rotation_subgroup();
            assert_eq!(rot.len() * 2, g.order(), "{spec} rotation index 2");
        }
    }

    #[test]
    fn codim_fixed_examples() {
        let s5 = build_named("S5").unwrap();
        assert_eq!(s5.codim_fixed(0), 0);
        for &s in &s5.reflections {
            assert_eq!(s5.codim_fixed(s), 1);
        }
        // A 5-cycle has a single cycle with color 0: fixed dim 1, codim 4.
        let coxeter = WreathElement {
            perm: vec![1, 2, 3, 4, 0],
            col: vec![0; 5],
        };
        assert_eq!(s5.codim_fixed(s5.index_of(&coxeter)), 4);
    }

    #[test]
    fn reflection_set_closed_under_conjugation() {
        for spec in ["S4", "B3", "D4", "I2(5)", "G(4,2,2)"] {
            let g = build_named(spec).unwrap();
            let refl: std::collections::HashSet<u32> = g.reflections.iter().copied().collect();
            for &s in &g.reflections {
                for w in 0..g.order() as u32 {
                    assert!(refl.contains(&g.conjugate(w, s)), "{spec}");
                }
            }
        }
    }

    #[test]
    fn rotation_subgroup_sizes() {
        assert_eq!(build_named("S4").unwrap().rotation_subgroup().len(), 12);
        assert_eq!(build_named("I2(3)").unwrap().rotation_subgroup().len(), 3);
        assert_eq!(build_named("D5").unwrap().rotation_subgroup().len(), 960);
    }

    #[test]
    fn generated_subgroup_trivial_and_full() {
        let s4 = build_named("S4").unwrap();
        assert_eq!(s4.generated_subgroup(&[]), vec![0]);
        let all = s4.generated_subgroup(&s4.reflections);
        assert_eq!(all.len(), 24);
    }

    #[test]
    fn transpositions_single_class() {
        let s5 = build_named("S5").unwrap();
        let all: Vec<u32> = (0..s5.order() as u32).collect();
        let classes = s5.conjugacy_partition(&s5.reflections, &all);
        assert_eq!(classes.len(), 1);
    }

    #[test]
    fn diameter_small() {
        assert_eq!(build_named("S5").unwrap().reflection_length_diameter(), 4);
        assert_eq!(
            build_named("G(3,3,3)").unwrap().reflection_length_diameter(),
            4
        );
    }

    #[test]
    fn inverse_and_order_tables() {
        let g = build_named("G(4,4,3)").unwrap();
        for i in 0..g.order() as u32 {
            assert_eq!(g.mul(i, g.inverse[i as usize]), 0);
            assert_eq!(g.element_order[0], 1);
        }
    }
}
