//! Exact group-algebra arithmetic over an indexed element basis.
//!
//! Vectors are dense coefficient arrays over either the full group or a
//! designated subgroup basis (typically the rotation subgroup). Brackets and
//! products against short generators cost O(support * dim) via translation
//! tables; there is never an O(dim^2) convolution.

use serde::Serialize;
use thiserror::Error;

use crate::field::{mod_from_i64, mod_sub, FieldSpec, Rat};
use crate::groups::{ReflectionGroup, SubIndex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("basis mismatch: vector length {left} vs {right}")]
    BasisMismatch { left: usize, right: usize },
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },
    #[error("nonzero coefficient at element {index} outside the subgroup")]
    OutsideSubgroup { index: u32 },
    #[error("element {index} does not normalize the basis subgroup")]
    NotInBasis { index: u32 },
}

/// Dense exact coefficient array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coeffs {
    Rat(Vec<Rat>),
    Mod { p: u64, vals: Vec<u64> },
}

/// Group-algebra vector over an indexed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraVector {
    pub coeffs: Coeffs,
}

impl AlgebraVector {
    pub fn zero(field: FieldSpec, dim: usize) -> AlgebraVector {
        let coeffs = match field {
            FieldSpec::Rational => Coeffs::Rat(vec![Rat::ZERO; dim]),
            FieldSpec::Prime(p) => Coeffs::Mod {
                p,
                vals: vec![0; dim],
            },
        };
        AlgebraVector { coeffs }
    }

    pub fn field(&self) -> FieldSpec {
        match &self.coeffs {
            Coeffs::Rat(_) => FieldSpec::Rational,
            Coeffs::Mod { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn dim(&self) -> usize {
        match &self.coeffs {
            Coeffs::Rat(v) => v.len(),
            Coeffs::Mod { vals, .. } => vals.len(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.coeffs {
            Coeffs::Rat(v) => v.iter().all(Rat::is_zero),
            Coeffs::Mod { vals, .. } => vals.iter().all(|&x| x == 0),
        }
    }

    pub fn support(&self) -> usize {
        match &self.coeffs {
            Coeffs::Rat(v) => v.iter().filter(|c| !c.is_zero()).count(),
            Coeffs::Mod { vals, .. } => vals.iter().filter(|&&x| x != 0).count(),
        }
    }

    /// Adds an integer multiple of a basis element.
    pub fn add_int(&mut self, idx: usize, c: i64) {
        match &mut self.coeffs {
            Coeffs::Rat(v) => v[idx] = v[idx] + Rat::from_int(c as i128),
            Coeffs::Mod { p, vals } => {
                vals[idx] = (vals[idx] + mod_from_i64(c, *p)) % *p;
            }
        }
    }

    /// Indicator vector of basis element `idx`.
    pub fn delta(field: FieldSpec, dim: usize, idx: usize) -> AlgebraVector {
        let mut v = AlgebraVector::zero(field, dim);
        v.add_int(idx, 1);
        v
    }

    /// Sum of basis deltas over a class of local indices.
    pub fn group_sum_class(field: FieldSpec, dim: usize, class: &[u32]) -> AlgebraVector {
        let mut v = AlgebraVector::zero(field, dim);
        for &i in class {
            v.add_int(i as usize, 1);
        }
        v
    }

    /// Reduces a rational vector modulo p. Panics if a denominator vanishes.
    pub fn reduce_mod(&self, p: u64) -> AlgebraVector {
        match &self.coeffs {
            Coeffs::Rat(v) => AlgebraVector {
                coeffs: Coeffs::Mod {
                    p,
                    vals: v.iter().map(|c| c.mod_p(p)).collect(),
                },
            },
            Coeffs::Mod { .. } => self.clone(),
        }
    }

    /// Flat JSON array (rationals rendered as strings).
    pub fn to_json(&self) -> serde_json::Value {
        match &self.coeffs {
            Coeffs::Rat(v) => serde_json::Value::Array(
                v.iter()
                    .map(|c| serde_json::Value::String(c.to_string()))
                    .collect(),
            ),
            Coeffs::Mod { vals, .. } => serde_json::json!(vals),
        }
    }

    fn check_compatible(&self, other: &AlgebraVector) -> Result<(), AlgebraError> {
        if self.dim() != other.dim() {
            return Err(AlgebraError::BasisMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        if self.field() != other.field() {
            return Err(AlgebraError::FieldMismatch {
                left: self.field(),
                right: other.field(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraVector) -> Result<AlgebraVector, AlgebraError> {
        self.check_compatible(other)?;
        let coeffs = match (&self.coeffs, &other.coeffs) {
            (Coeffs::Rat(a), Coeffs::Rat(b)) => {
                Coeffs::Rat(a.iter().zip(b).map(|(&x, &y)| x + y).collect())
            }
            (Coeffs::Mod { p, vals: a }, Coeffs::Mod { vals: b, .. }) => Coeffs::Mod {
                p: *p,
                vals: a.iter().zip(b).map(|(&x, &y)| (x + y) % p).collect(),
            },
            _ => unreachable!(),
        };
        Ok(AlgebraVector { coeffs })
    }

    pub fn sub(&self, other: &AlgebraVector) -> Result<AlgebraVector, AlgebraError> {
        self.check_compatible(other)?;
        let coeffs = match (&self.coeffs, &other.coeffs) {
            (Coeffs::Rat(a), Coeffs::Rat(b)) => {
                Coeffs::Rat(a.iter().zip(b).map(|(&x, &y)| x - y).collect())
            }
            (Coeffs::Mod { p, vals: a }, Coeffs::Mod { vals: b, .. }) => Coeffs::Mod {
                p: *p,
                vals: a.iter().zip(b).map(|(&x, &y)| mod_sub(x, y, *p)).collect(),
            },
            _ => unreachable!(),
        };
        Ok(AlgebraVector { coeffs })
    }

    pub fn scale_int(&self, c: i64) -> AlgebraVector {
        let coeffs = match &self.coeffs {
            Coeffs::Rat(a) => Coeffs::Rat(a.iter().map(|&x| x * Rat::from_int(c as i128)).collect()),
            Coeffs::Mod { p, vals } => {
                let cm = mod_from_i64(c, *p);
                Coeffs::Mod {
                    p: *p,
                    vals: vals
                        .iter()
                        .map(|&x| ((x as u128 * cm as u128) % *p as u128) as u64)
                        .collect(),
                }
            }
        };
        AlgebraVector { coeffs }
    }
}

/// Short signed sum of group elements (local basis indices), support <= 4.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SparseGenerator {
    pub terms: Vec<(u32, i64)>,
}

impl SparseGenerator {
    pub fn new(terms: Vec<(u32, i64)>) -> SparseGenerator {
        assert!(terms.len() <= 4, "generator support exceeds 4");
        assert!(terms.iter().all(|&(_, c)| c != 0), "zero coefficient");
        let mut idxs: Vec<u32> = terms.iter().map(|&(i, _)| i).collect();
        idxs.sort_unstable();
        idxs.dedup();
        assert_eq!(idxs.len(), terms.len(), "repeated support index");
        SparseGenerator { terms }
    }

    pub fn to_vector(&self, field: FieldSpec, dim: usize) -> AlgebraVector {
        let mut v = AlgebraVector::zero(field, dim);
        for &(i, c) in &self.terms {
            v.add_int(i as usize, c);
        }
        v
    }
}

/// Left/right translation of the basis by one group element.
#[derive(Debug, Clone)]
pub struct Translations {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
}

impl Translations {
    /// Builds translation tables for global element `g` over `basis`. Fails
    /// if some translate leaves the basis subgroup.
    pub fn build(
        group: &ReflectionGroup,
        basis: &SubIndex,
        g: u32,
    ) -> Result<Translations, AlgebraError> {
        let mut left = Vec::with_capacity(basis.len());
        let mut right = Vec::with_capacity(basis.len());
        for &x in &basis.elems {
            let lx = group.mul(g, x);
            let xr = group.mul(x, g);
            let (Some(l), Some(r)) = (
                basis.index_of[lx as usize],
                basis.index_of[xr as usize],
            ) else {
                return Err(AlgebraError::NotInBasis { index: g });
            };
            left.push(l);
            right.push(r);
        }
        Ok(Translations { left, right })
    }
}

/// Generator with translation tables for each support element, ready for
/// repeated bracketing against dense vectors.
pub struct GenTables {
    pub gen: SparseGenerator,
    terms: Vec<(Translations, i64)>,
}

impl GenTables {
    pub fn build(
        group: &ReflectionGroup,
        basis: &SubIndex,
        gen: SparseGenerator,
    ) -> Result<GenTables, AlgebraError> {
        let terms = gen
            .terms
            .iter()
            .map(|&(loc, c)| {
                let global = basis.elems[loc as usize];
                Ok((Translations::build(group, basis, global)?, c))
            })
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        Ok(GenTables { gen, terms })
    }

    /// Lie bracket gen*v - v*gen.
    pub fn bracket(&self, v: &AlgebraVector) -> AlgebraVector {
        let mut out = AlgebraVector::zero(v.field(), v.dim());
        for (tr, c) in &self.terms {
            apply_translation(&mut out, v, &tr.left, *c);
            apply_translation(&mut out, v, &tr.right, -*c);
        }
        out
    }

    /// Associative product gen*v.
    pub fn mul_left(&self, v: &AlgebraVector) -> AlgebraVector {
        let mut out = AlgebraVector::zero(v.field(), v.dim());
        for (tr, c) in &self.terms {
            apply_translation(&mut out, v, &tr.left, *c);
        }
        out
    }
}

/// out += c * (translated v): out[table[x]] += c*v[x].
fn apply_translation(out: &mut AlgebraVector, v: &AlgebraVector, table: &[u32], c: i64) {
    match (&mut out.coeffs, &v.coeffs) {
        (Coeffs::Rat(o), Coeffs::Rat(src)) => {
            let cr = Rat::from_int(c as i128);
            for (x, &val) in src.iter().enumerate() {
                if !val.is_zero() {
                    let t = table[x] as usize;
                    o[t] = o[t] + cr * val;
                }
            }
        }
        (Coeffs::Mod { p, vals: o }, Coeffs::Mod { vals: src, .. }) => {
            let cm = mod_from_i64(c, *p);
            for (x, &val) in src.iter().enumerate() {
                if val != 0 {
                    let t = table[x] as usize;
                    o[t] = (o[t] + ((cm as u128 * val as u128) % *p as u128) as u64) % *p;
                }
            }
        }
        _ => panic!("field mismatch in translation"),
    }
}

/// Re-indexes a full-group vector onto a subgroup basis.
pub fn restrict_to_subgroup(
    v: &AlgebraVector,
    sub: &SubIndex,
) -> Result<AlgebraVector, AlgebraError> {
    let pick = |idx: usize| -> Result<usize, AlgebraError> {
        sub.index_of[idx]
            .map(|l| l as usize)
            .ok_or(AlgebraError::OutsideSubgroup { index: idx as u32 })
    };
    let coeffs = match &v.coeffs {
        Coeffs::Rat(a) => {
            let mut out = vec![Rat::ZERO; sub.len()];
            for (i, &c) in a.iter().enumerate() {
                if !c.is_zero() {
                    out[pick(i)?] = c;
                }
            }
            Coeffs::Rat(out)
        }
        Coeffs::Mod { p, vals } => {
            let mut out = vec![0u64; sub.len()];
            for (i, &c) in vals.iter().enumerate() {
                if c != 0 {
                    out[pick(i)?] = c;
                }
            }
            Coeffs::Mod { p: *p, vals: out }
        }
    };
    Ok(AlgebraVector { coeffs })
}

/// Embeds a subgroup-basis vector back into the full group basis.
pub fn expand_to_group(v: &AlgebraVector, sub: &SubIndex, group_order: usize) -> AlgebraVector {
    let mut out = AlgebraVector::zero(v.field(), group_order);
    match (&mut out.coeffs, &v.coeffs) {
        (Coeffs::Rat(o), Coeffs::Rat(a)) => {
            for (loc, &c) in a.iter().enumerate() {
                o[sub.elems[loc] as usize] = c;
            }
        }
        (Coeffs::Mod { vals: o, .. }, Coeffs::Mod { vals: a, .. }) => {
            for (loc, &c) in a.iter().enumerate() {
                o[sub.elems[loc] as usize] = c;
            }
        }
        _ => unreachable!(),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build_named;

    fn bracket_of(
        g: &ReflectionGroup,
        basis: &SubIndex,
        gen_global: u32,
        v: &AlgebraVector,
    ) -> AlgebraVector {
        let loc = basis.index_of[gen_global as usize].unwrap();
        let tables =
            GenTables::build(g, basis, SparseGenerator::new(vec![(loc, 1)])).unwrap();
        tables.bracket(v)
    }

    #[test]
    fn delta_and_sum() {
        let v = AlgebraVector::delta(FieldSpec::Rational, 5, 0);
        assert_eq!(v.support(), 1);
        let w = AlgebraVector::group_sum_class(FieldSpec::Prime(113), 5, &[1, 3]);
        assert_eq!(w.support(), 2);
        assert!(AlgebraVector::group_sum_class(FieldSpec::Rational, 5, &[]).is_zero());
    }

    #[test]
    fn bracket_with_self_vanishes() {
        let g = build_named("S4").unwrap();
        let basis = SubIndex::full(g.order());
        let s = g.reflections[0];
        let v = AlgebraVector::delta(FieldSpec::Rational, g.order(), s as usize);
        assert!(bracket_of(&g, &basis, s, &v).is_zero());
    }

    #[test]
    fn bracket_of_noncommuting_reflections() {
        let g = build_named("S4").unwrap();
        let basis = SubIndex::full(g.order());
        let (mut s, mut u) = (0, 0);
        'outer: for &a in &g.reflections {
            for &b in &g.reflections {
                if g.mul(a, b) != g.mul(b, a) {
                    s = a;
                    u = b;
                    break 'outer;
                }
            }
        }
        let v = AlgebraVector::delta(FieldSpec::Rational, g.order(), u as usize);
        let bv = bracket_of(&g, &basis, s, &v);
        let mut expect = AlgebraVector::zero(FieldSpec::Rational, g.order());
        expect.add_int(g.mul(s, u) as usize, 1);
        expect.add_int(g.mul(u, s) as usize, -1);
        assert_eq!(bv, expect);

        // Commuting pair gives zero.
        let (mut s2, mut u2) = (0, 0);
        'outer2: for &a in &g.reflections {
            for &b in &g.reflections {
                if a != b && g.mul(a, b) == g.mul(b, a) {
                    s2 = a;
                    u2 = b;
                    break 'outer2;
                }
            }
        }
        let v2 = AlgebraVector::delta(FieldSpec::Rational, g.order(), u2 as usize);
        assert!(bracket_of(&g, &basis, s2, &v2).is_zero());
    }

    #[test]
    fn involution_double_bracket_identity() {
        // [s,[s,x]] = 2(x - sxs) for s an involution.
        let g = build_named("B3").unwrap();
        let basis = SubIndex::full(g.order());
        let s = g.reflections[2];
        for x in [1u32, 7, 20] {
            let v = AlgebraVector::delta(FieldSpec::Rational, g.order(), x as usize);
            let double = bracket_of(&g, &basis, s, &bracket_of(&g, &basis, s, &v));
            let mut expect = AlgebraVector::zero(FieldSpec::Rational, g.order());
            expect.add_int(x as usize, 2);
            expect.add_int(g.conjugate(s, x) as usize, -2);
            assert_eq!(double, expect);
        }
    }

    #[test]
    fn reduction_commutes_with_bracket() {
        let g = build_named("S4").unwrap();
        let basis = SubIndex::full(g.order());
        let s = g.reflections[1];
        let mut v = AlgebraVector::zero(FieldSpec::Rational, g.order());
        for (i, c) in [(3usize, 5i64), (10, -7), (17, 2)] {
            v.add_int(i, c);
        }
        for p in [113u64, 10007] {
            let a = bracket_of(&g, &basis, s, &v).reduce_mod(p);
            let b = bracket_of(&g, &basis, s, &v.reduce_mod(p));
            assert_eq!(a, b);
        }
    }

    #[test]
    fn convolution_associativity_random_triples() {
        let g = build_named("S4").unwrap();
        let basis = SubIndex::full(g.order());
        let mut state = 42u64;
        let mut next = |n: usize| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            (state >> 33) as usize % n
        };
        for _ in 0..200 {
            let a = next(g.order()) as u32;
            let b = next(g.order()) as u32;
            let c = next(g.order()) as u32;
            assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        }
        // And on the vector level: s*(u*v) = (s*u)*v for deltas.
        let s = g.reflections[0];
        let u = g.reflections[3];
        let v = AlgebraVector::delta(FieldSpec::Prime(113), g.order(), next(g.order()));
        let ts = GenTables::build(&g, &basis, SparseGenerator::new(vec![(s, 1)])).unwrap();
        let tu = GenTables::build(&g, &basis, SparseGenerator::new(vec![(u, 1)])).unwrap();
        let tsu =
            GenTables::build(&g, &basis, SparseGenerator::new(vec![(g.mul(s, u), 1)])).unwrap();
        assert_eq!(ts.mul_left(&tu.mul_left(&v)), tsu.mul_left(&v));
    }

    #[test]
    fn restriction_to_rotation_subgroup() {
        let g = build_named("S4").unwrap();
        let rot = g.rotation_subgroup();
        // A rotation delta restricts fine.
        let r = rot.elems[5];
        let v = AlgebraVector::delta(FieldSpec::Rational, g.order(), r as usize);
        let w = restrict_to_subgroup(&v, &rot).unwrap();
        assert_eq!(w.dim(), 12);
        assert_eq!(w.support(), 1);
        // A reflection delta does not.
        let s = g.reflections[0];
        let v = AlgebraVector::delta(FieldSpec::Rational, g.order(), s as usize);
        assert_eq!(
            restrict_to_subgroup(&v, &rot),
            Err(AlgebraError::OutsideSubgroup { index: s })
        );
        // [s,u] for su != us restricts with support 2.
        let u = g
            .reflections
            .iter()
            .copied()
            .find(|&u| g.mul(s, u) != g.mul(u, s))
            .unwrap();
        let mut c = AlgebraVector::zero(FieldSpec::Rational, g.order());
        c.add_int(g.mul(s, u) as usize, 1);
        c.add_int(g.mul(u, s) as usize, -1);
        let r = restrict_to_subgroup(&c, &rot).unwrap();
        assert_eq!(r.support(), 2);
        assert_eq!(expand_to_group(&r, &rot, g.order()), c);
    }
}
