//! Span-closure drivers: the grading of the reflection-generated Lie algebra,
//! generic Lie/associative closures, rotation algebras, L_1 spans and
//! centralizers.
//!
//! All drivers share one pattern: keep a row-echelon span, bracket the short
//! generators only against basis rows added in the previous round, and stop
//! when the rank stops growing. Candidate vectors are pre-reduced in parallel
//! by the span engine.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgebraVector, Coeffs, GenTables, SparseGenerator};
use crate::field::FieldSpec;
use crate::groups::{ReflectionGroup, SubIndex};
use crate::span::SpanBasis;

/// Hard ceiling on closure rounds; every space here is finite-dimensional so
/// this only guards against driver bugs.
pub const MAX_ROUNDS: usize = 256;

/// Grading of the Lie algebra generated by the reflections inside the group
/// algebra, following the M_r filtration.
#[derive(Debug, Clone, Serialize)]
pub struct GradingReport {
    pub group: String,
    pub field: String,
    #[serde(rename = "dims_M")]
    pub dims_m: Vec<usize>,
    /// dims_Hgr[r-1] = dim of the degree-r homogeneous component.
    #[serde(rename = "dims_Hgr")]
    pub dims_hgr: Vec<usize>,
    #[serde(rename = "dim_Z")]
    pub dim_z: usize,
    pub stable_even: Option<usize>,
    pub stable_odd: Option<usize>,
    pub stabilization_degree: Option<usize>,
    pub converged: bool,
    pub certification: Option<String>,
    pub elapsed_ms: u128,
}

impl GradingReport {
    /// Total dimension of the generated Lie algebra (final M rank).
    pub fn full_dim(&self) -> usize {
        *self.dims_m.last().unwrap()
    }
}

/// Per-step record of a generic closure run.
#[derive(Debug, Clone, Serialize)]
pub struct ClosureReport {
    pub group: String,
    pub field: String,
    pub generators: usize,
    /// dims of V^(1), V^(2), ... up to stabilization.
    pub steps: Vec<usize>,
    pub final_dim: usize,
    pub converged: bool,
    pub certification: Option<String>,
    pub elapsed_ms: u128,
}

/// One closure round: brackets every generator against the rows added in the
/// previous round (in parallel) and inserts the results. Returns the new rows.
fn bracket_round(
    span: &mut SpanBasis,
    tables: &[GenTables],
    new_rows: &[AlgebraVector],
) -> Vec<AlgebraVector> {
    let candidates: Vec<AlgebraVector> = tables
        .par_iter()
        .flat_map_iter(|t| new_rows.iter().map(move |v| t.bracket(v)))
        .filter(|v| !v.is_zero())
        .collect();
    let before = span.rank();
    span.insert_batch(&candidates);
    span.basis_vectors()[before..].to_vec()
}

/// Computes the grading of the reflection-generated Lie algebra.
///
/// M_1 is the span of the reflection deltas and M_{r+1} = M_r + [R, M_r];
/// the homogeneous dimensions follow by the recursion
/// dim H^2 = dim M_2 - dim M_1 and
/// dim H^n = dim M_n - dim H^{n-1} - dim Z for n >= 3,
/// where dim Z is the number of reflection conjugacy classes.
pub fn grading(group: &ReflectionGroup, field: FieldSpec, max_degree: usize) -> GradingReport {
    assert!(max_degree >= 3, "max_degree must be at least 3");
    let start = Instant::now();
    let basis = SubIndex::full(group.order());
    let dim = group.order();

    let tables: Vec<GenTables> = group
        .reflections
        .iter()
        .map(|&s| {
            GenTables::build(group, &basis, SparseGenerator::new(vec![(s, 1)]))
                .expect("full basis is closed")
        })
        .collect();

    let mut span = SpanBasis::new(field, dim);
    for &s in &group.reflections {
        span.insert(&AlgebraVector::delta(field, dim, s as usize));
    }
    let mut new_rows = span.basis_vectors();
    let mut dims_m = vec![span.rank()];
    let mut converged = false;
    while dims_m.len() < max_degree {
        new_rows = bracket_round(&mut span, &tables, &new_rows);
        dims_m.push(span.rank());
        if new_rows.is_empty() {
            converged = true;
            break;
        }
    }

    let dim_z = group.reflection_classes().len();
    let mut dims_hgr = vec![dims_m[0]];
    if dims_m.len() > 1 {
        dims_hgr.push(dims_m[1] - dims_m[0]);
    }
    for n in 3..=dims_m.len() {
        dims_hgr.push(dims_m[n - 1] - dims_hgr[n - 2] - dim_z);
    }

    // On convergence dims_m ends with a repeat, so the last two H values are
    // the 2-periodic tail; split them by degree parity.
    let (stable_even, stable_odd, stabilization_degree) = if converged && dims_hgr.len() >= 2 {
        let d = dims_hgr.len(); // degree of the last entry
        let (last, prev) = (dims_hgr[d - 1], dims_hgr[d - 2]);
        if d % 2 == 0 {
            (Some(last), Some(prev), Some(d))
        } else {
            (Some(prev), Some(last), Some(d))
        }
    } else {
        (None, None, None)
    };

    GradingReport {
        group: group.descriptor.name.clone(),
        field: field.to_string(),
        dims_m,
        dims_hgr,
        dim_z,
        stable_even,
        stable_odd,
        stabilization_degree,
        converged,
        certification: None,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Runs the grading over both certification primes (and over the rationals
/// when the group is small enough for that to be feasible), checks that all
/// runs agree, and returns the first report annotated with the comparison.
///
/// A prime-field rank can only be smaller than the rational rank, so the
/// agreement of two independent primes with the rational run (when present)
/// certifies the dimensions.
pub fn certified_grading(
    group: &ReflectionGroup,
    max_degree: usize,
    with_rational: bool,
) -> GradingReport {
    let fields = certification_fields(group, with_rational);
    let mut reports: Vec<GradingReport> = fields
        .iter()
        .map(|&f| grading(group, f, max_degree))
        .collect();
    for r in &reports[1..] {
        assert_eq!(r.dims_m, reports[0].dims_m, "field disagreement in grading");
    }
    let note = certification_note(&fields);
    let mut out = reports.remove(0);
    out.certification = Some(note);
    out
}

/// Rational runs are feasible at desk scale up to |W| = 720.
pub fn rational_feasible(group: &ReflectionGroup) -> bool {
    group.order() <= 720
}

fn certification_fields(group: &ReflectionGroup, with_rational: bool) -> Vec<FieldSpec> {
    let mut fields: Vec<FieldSpec> = crate::field::CERTIFICATION_PRIMES
        .iter()
        .map(|&p| FieldSpec::Prime(p))
        .collect();
    if with_rational && rational_feasible(group) {
        fields.push(FieldSpec::Rational);
    }
    fields
}

fn certification_note(fields: &[FieldSpec]) -> String {
    let names: Vec<String> = fields.iter().map(|f| f.to_string()).collect();
    if fields.contains(&FieldSpec::Rational) {
        format!(
            "dimensions agree over {}; rational run certifies the mod-p lower bounds as exact",
            names.join(", ")
        )
    } else {
        format!(
            "dimensions agree over {}; mod-p ranks are lower bounds for the rational ranks",
            names.join(", ")
        )
    }
}

/// Dimension of the Lie subalgebra generated by `gens` over the given basis,
/// with per-step dimensions V^(1), V^(2), ...
pub fn lie_generated(
    group: &ReflectionGroup,
    basis: &SubIndex,
    gens: &[SparseGenerator],
    field: FieldSpec,
) -> ClosureReport {
    let start = Instant::now();
    let dim = basis.len();
    let tables: Vec<GenTables> = gens
        .iter()
        .map(|g| GenTables::build(group, basis, g.clone()).expect("basis not closed under gens"))
        .collect();

    let mut span = SpanBasis::new(field, dim);
    let gen_vectors: Vec<AlgebraVector> =
        gens.iter().map(|g| g.to_vector(field, dim)).collect();
    span.insert_batch(&gen_vectors);
    let mut new_rows = span.basis_vectors();
    let mut steps = vec![span.rank()];
    let mut converged = false;
    for _ in 0..MAX_ROUNDS {
        new_rows = bracket_round(&mut span, &tables, &new_rows);
        if new_rows.is_empty() {
            converged = true;
            break;
        }
        steps.push(span.rank());
    }

    ClosureReport {
        group: group.descriptor.name.clone(),
        field: field.to_string(),
        generators: gens.len(),
        final_dim: span.rank(),
        steps,
        converged,
        certification: None,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Like [`lie_generated`], but returns the closed span itself (for
/// containment, intersection and centralizer computations).
pub fn lie_span(
    group: &ReflectionGroup,
    basis: &SubIndex,
    gens: &[SparseGenerator],
    field: FieldSpec,
) -> SpanBasis {
    let tables: Vec<GenTables> = gens
        .iter()
        .map(|g| GenTables::build(group, basis, g.clone()).expect("basis not closed under gens"))
        .collect();
    let mut span = SpanBasis::new(field, basis.len());
    let gen_vectors: Vec<AlgebraVector> =
        gens.iter().map(|g| g.to_vector(field, basis.len())).collect();
    span.insert_batch(&gen_vectors);
    let mut new_rows = span.basis_vectors();
    for _ in 0..MAX_ROUNDS {
        new_rows = bracket_round(&mut span, &tables, &new_rows);
        if new_rows.is_empty() {
            break;
        }
    }
    span
}

/// Dimension of the Lie algebra generated by the reflection deltas in the
/// full group algebra. Equals the final M rank of the grading.
pub fn full_h_dim(group: &ReflectionGroup, field: FieldSpec) -> usize {
    let basis = SubIndex::full(group.order());
    let gens: Vec<SparseGenerator> = group
        .reflections
        .iter()
        .map(|&s| SparseGenerator::new(vec![(s, 1)]))
        .collect();
    lie_generated(group, &basis, &gens, field).final_dim
}

/// Generators [s,u] = su - us of the rotation algebra, as vectors over the
/// rotation-subgroup basis. Ordered pairs with su = us contribute nothing and
/// the pairs giving {su,us} and {us,su} give opposite generators, so the list
/// is deduplicated by the unordered support pair.
pub fn rotation_generators(group: &ReflectionGroup, rot: &SubIndex) -> Vec<SparseGenerator> {
    let mut seen = std::collections::HashSet::new();
    let mut gens = Vec::new();
    for &s in &group.reflections {
        for &u in &group.reflections {
            let su = group.mul(s, u);
            let us = group.mul(u, s);
            if su == us {
                continue;
            }
            let key = (su.min(us), su.max(us));
            if !seen.insert(key) {
                continue;
            }
            let a = rot.index_of[su as usize].expect("su is a rotation");
            let b = rot.index_of[us as usize].expect("us is a rotation");
            gens.push(SparseGenerator::new(vec![(a, 1), (b, -1)]));
        }
    }
    gens
}

/// Closure run for the rotation algebra A of a group: the Lie algebra
/// generated by the [s,u] inside the group algebra of the rotation subgroup.
pub fn rotation_algebra(group: &ReflectionGroup, field: FieldSpec) -> ClosureReport {
    let rot = group.rotation_subgroup();
    let gens = rotation_generators(group, &rot);
    lie_generated(group, &rot, &gens, field)
}

/// Spans of the homogeneous components: N_1 = span R and
/// N_{r+1} = span [R, N_r], so N_r realizes the degree-r part of the grading
/// (left-normed bracket monomials span each homogeneous component). Returns
/// N_1 ... N_{r_max}.
pub fn homogeneous_spans(
    group: &ReflectionGroup,
    field: FieldSpec,
    r_max: usize,
) -> Vec<SpanBasis> {
    let basis = SubIndex::full(group.order());
    let dim = group.order();
    let tables: Vec<GenTables> = group
        .reflections
        .iter()
        .map(|&s| {
            GenTables::build(group, &basis, SparseGenerator::new(vec![(s, 1)]))
                .expect("full basis is closed")
        })
        .collect();
    let mut first = SpanBasis::new(field, dim);
    for &s in &group.reflections {
        first.insert(&AlgebraVector::delta(field, dim, s as usize));
    }
    let mut out = vec![first];
    for _ in 1..r_max {
        let rows = out.last().unwrap().basis_vectors();
        let candidates: Vec<AlgebraVector> = tables
            .par_iter()
            .flat_map_iter(|t| rows.iter().map(move |v| t.bracket(v)))
            .filter(|v| !v.is_zero())
            .collect();
        let mut next = SpanBasis::new(field, dim);
        next.insert_batch(&candidates);
        out.push(next);
    }
    out
}

/// The stable even component H^{2*inf}: iterate the even homogeneous spans
/// N_2, N_4, ... until the rank stops growing (the containments
/// N_r inside N_{r+2} make rank equality imply span equality).
pub fn stable_even_span(group: &ReflectionGroup, field: FieldSpec) -> SpanBasis {
    let spans = homogeneous_spans(group, field, 2);
    let mut current = spans.into_iter().nth(1).unwrap();
    // Rebuild two degrees at a time from the previous even component.
    let basis = SubIndex::full(group.order());
    let tables: Vec<GenTables> = group
        .reflections
        .iter()
        .map(|&s| {
            GenTables::build(group, &basis, SparseGenerator::new(vec![(s, 1)]))
                .expect("full basis is closed")
        })
        .collect();
    for _ in 0..MAX_ROUNDS {
        let mut next = current.clone();
        let rows = current.basis_vectors();
        let odd: Vec<AlgebraVector> = tables
            .par_iter()
            .flat_map_iter(|t| rows.iter().map(move |v| t.bracket(v)))
            .filter(|v| !v.is_zero())
            .collect();
        let even: Vec<AlgebraVector> = tables
            .par_iter()
            .flat_map_iter(|t| odd.iter().map(move |v| t.bracket(v)))
            .filter(|v| !v.is_zero())
            .collect();
        next.insert_batch(&even);
        if next.rank() == current.rank() {
            return current;
        }
        current = next;
    }
    current
}

/// Which half of the natural Z/2-graded span to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum L1Part {
    Even,
    Odd,
}

/// L_1 spans over the full group-algebra basis: the even part is spanned by
/// g - g^{-1} for rotations g, the odd part by b + b^{-1} for the other coset.
pub fn l1_span(group: &ReflectionGroup, part: L1Part, field: FieldSpec) -> SpanBasis {
    let dim = group.order();
    let mut span = SpanBasis::new(field, dim);
    for g in 0..dim as u32 {
        let rotation = group.sign[g as usize] == 1;
        let inv = group.inverse[g as usize];
        let mut v = AlgebraVector::zero(field, dim);
        match part {
            L1Part::Even if rotation => {
                if g == inv {
                    continue; // g - g^{-1} = 0
                }
                v.add_int(g as usize, 1);
                v.add_int(inv as usize, -1);
            }
            L1Part::Odd if !rotation => {
                v.add_int(g as usize, 1);
                v.add_int(inv as usize, 1);
            }
            _ => continue,
        }
        span.insert(&v);
    }
    span
}

/// Dimension of the unital associative algebra generated by `gens`: the span
/// of all words in the generators (including the empty word), computed by
/// closing the span of the identity under left multiplication.
pub fn associative_closure_dim(
    group: &ReflectionGroup,
    basis: &SubIndex,
    gens: &[SparseGenerator],
    field: FieldSpec,
) -> usize {
    let dim = basis.len();
    let tables: Vec<GenTables> = gens
        .iter()
        .map(|g| GenTables::build(group, basis, g.clone()).expect("basis not closed under gens"))
        .collect();
    let one = basis.index_of[group.identity() as usize].expect("identity in basis") as usize;
    let mut span = SpanBasis::new(field, dim);
    span.insert(&AlgebraVector::delta(field, dim, one));
    let mut new_rows = span.basis_vectors();
    for _ in 0..MAX_ROUNDS {
        let candidates: Vec<AlgebraVector> = tables
            .par_iter()
            .flat_map_iter(|t| new_rows.iter().map(move |v| t.mul_left(v)))
            .filter(|v| !v.is_zero())
            .collect();
        let before = span.rank();
        span.insert_batch(&candidates);
        if span.rank() == before {
            break;
        }
        new_rows = span.basis_vectors()[before..].to_vec();
    }
    span.rank()
}

/// Concatenates vectors over the same field into one long vector.
fn concat(vs: &[AlgebraVector], field: FieldSpec, piece_dim: usize, pieces: usize) -> AlgebraVector {
    assert_eq!(vs.len(), pieces);
    match field {
        FieldSpec::Rational => {
            let mut out = Vec::with_capacity(piece_dim * pieces);
            for v in vs {
                let Coeffs::Rat(c) = &v.coeffs else { unreachable!() };
                out.extend_from_slice(c);
            }
            AlgebraVector {
                coeffs: Coeffs::Rat(out),
            }
        }
        FieldSpec::Prime(p) => {
            let mut out = Vec::with_capacity(piece_dim * pieces);
            for v in vs {
                let Coeffs::Mod { vals, .. } = &v.coeffs else { unreachable!() };
                out.extend_from_slice(vals);
            }
            AlgebraVector {
                coeffs: Coeffs::Mod { p, vals: out },
            }
        }
    }
}

/// Dimension of {x in span : [x,g] = 0 for all g in gens}, via the kernel of
/// the stacked bracket map restricted to the span.
pub fn centralizer_dim_within(
    group: &ReflectionGroup,
    basis: &SubIndex,
    span: &SpanBasis,
    gens: &[SparseGenerator],
    field: FieldSpec,
) -> usize {
    let rows = span.basis_vectors();
    if rows.is_empty() || gens.is_empty() {
        return rows.len();
    }
    let tables: Vec<GenTables> = gens
        .iter()
        .map(|g| GenTables::build(group, basis, g.clone()).expect("basis not closed under gens"))
        .collect();
    let piece = basis.len();
    let mut image = SpanBasis::new(field, piece * tables.len());
    let mut rank = 0usize;
    for v in &rows {
        let pieces: Vec<AlgebraVector> = tables.par_iter().map(|t| t.bracket(v)).collect();
        if image.insert(&concat(&pieces, field, piece, tables.len())) {
            rank += 1;
        }
    }
    rows.len() - rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{expand_to_group, restrict_to_subgroup};
    use crate::groups::build_named;

    const Q: FieldSpec = FieldSpec::Rational;
    const F113: FieldSpec = FieldSpec::Prime(113);

    #[test]
    fn grading_s3_and_s4() {
        let r = grading(&build_named("S3").unwrap(), Q, 12);
        assert_eq!(r.dims_hgr[..3], [3, 1, 2]);
        assert_eq!((r.stable_even, r.stable_odd), (Some(1), Some(2)));
        assert_eq!(r.dim_z, 1);
        assert!(r.converged);
        assert_eq!(r.full_dim(), 4);

        let r = grading(&build_named("S4").unwrap(), Q, 12);
        assert_eq!(r.dims_hgr[..3], [6, 4, 7]);
        assert_eq!((r.stable_even, r.stable_odd), (Some(4), Some(7)));
        assert_eq!(r.full_dim(), 12);
    }

    #[test]
    fn grading_dihedral_closed_forms() {
        // H^1 = m, H^2 = floor((m-1)/2), H^3 = m - dim Z, with dim Z the
        // number of reflection classes (1 for odd m, 2 for even m).
        for m in [5u32, 6, 7, 8] {
            let g = build_named(&format!("I2({m})")).unwrap();
            let r = grading(&g, Q, 12);
            let z = if m % 2 == 0 { 2 } else { 1 };
            assert_eq!(r.dim_z, z, "I2({m}) dim Z");
            assert_eq!(r.dims_hgr[0], m as usize);
            assert_eq!(r.dims_hgr[1], ((m - 1) / 2) as usize);
            assert_eq!(r.dims_hgr[2], (m as usize) - z);
            assert!(r.converged);
        }
    }

    #[test]
    fn certified_grading_b3() {
        let g = build_named("B3").unwrap();
        let r = certified_grading(&g, 12, true);
        assert_eq!(r.dims_hgr[..3], [9, 7, 12]);
        assert_eq!((r.stable_even, r.stable_odd), (Some(7), Some(12)));
        assert!(r.certification.unwrap().contains("rational"));
    }

    #[test]
    fn grading_unconverged_flag() {
        let g = build_named("S5").unwrap();
        let r = grading(&g, F113, 3);
        assert!(!r.converged);
        assert!(r.stable_even.is_none());
    }

    #[test]
    fn full_h_matches_grading_identity() {
        for spec in ["S3", "S4", "B3", "I2(5)", "I2(6)"] {
            let g = build_named(spec).unwrap();
            let r = grading(&g, Q, 20);
            assert!(r.converged, "{spec}");
            assert_eq!(
                full_h_dim(&g, Q),
                r.stable_even.unwrap() + r.stable_odd.unwrap() + r.dim_z,
                "{spec} full dim identity"
            );
        }
    }

    #[test]
    fn rotation_algebra_s4() {
        let g = build_named("S4").unwrap();
        let r = rotation_algebra(&g, Q);
        assert_eq!(r.final_dim, 4);
        assert!(r.converged);
        // Center of A(S4) is one-dimensional (A = C x so_3).
        let rot = g.rotation_subgroup();
        let gens = rotation_generators(&g, &rot);
        let mut span = SpanBasis::new(Q, rot.len());
        let mut new_rows: Vec<AlgebraVector> =
            gens.iter().map(|g| g.to_vector(Q, rot.len())).collect();
        let tables: Vec<GenTables> = gens
            .iter()
            .map(|s| GenTables::build(&g, &rot, s.clone()).unwrap())
            .collect();
        span.insert_batch(&new_rows);
        new_rows = span.basis_vectors();
        loop {
            new_rows = bracket_round(&mut span, &tables, &new_rows);
            if new_rows.is_empty() {
                break;
            }
        }
        assert_eq!(centralizer_dim_within(&g, &rot, &span, &gens, Q), 1);
    }

    #[test]
    fn rotation_algebra_s5_both_fields() {
        let g = build_named("S5").unwrap();
        assert_eq!(rotation_algebra(&g, Q).final_dim, 16);
        assert_eq!(rotation_algebra(&g, F113).final_dim, 16);
    }

    #[test]
    fn lie_generated_single_generator_is_abelian() {
        let g = build_named("S4").unwrap();
        let basis = SubIndex::full(g.order());
        // One delta generator: brackets with itself vanish, dim 1.
        let gens = [SparseGenerator::new(vec![(5, 1)])];
        let r = lie_generated(&g, &basis, &gens, Q);
        assert_eq!(r.final_dim, 1);
        assert_eq!(r.steps, vec![1]);
        assert!(r.converged);
    }

    #[test]
    fn l1_spans_small() {
        let s3 = build_named("S3").unwrap();
        // Only the 3-cycle pair contributes to the even part.
        assert_eq!(l1_span(&s3, L1Part::Even, Q).rank(), 1);
        // Odd part: b + b^{-1} over the 3 reflections (each self-inverse).
        assert_eq!(l1_span(&s3, L1Part::Odd, Q).rank(), 3);
    }

    #[test]
    fn rotation_span_inside_stable_even_l1() {
        // A is contained in L_1(O): its vectors are antisymmetric under
        // inversion, already visible on S4.
        let g = build_named("S4").unwrap();
        let rot = g.rotation_subgroup();
        let gens = rotation_generators(&g, &rot);
        let even = l1_span(&g, L1Part::Even, Q);
        for gen in &gens {
            let local = gen.to_vector(Q, rot.len());
            let global = expand_to_group(&local, &rot, g.order());
            assert!(even.contains(&global));
            // Round trip through restriction is the identity.
            assert_eq!(restrict_to_subgroup(&global, &rot).unwrap(), local);
        }
    }

    #[test]
    fn associative_closure_basics() {
        let g = build_named("S5").unwrap();
        let rot = g.rotation_subgroup();
        // No generators: span of 1.
        assert_eq!(associative_closure_dim(&g, &rot, &[], Q), 1);
        // A single involution in O: span{1, g}.
        let invol = rot
            .elems
            .iter()
            .copied()
            .find(|&e| e != 0 && g.element_order[e as usize] == 2)
            .unwrap();
        let loc = rot.index_of[invol as usize].unwrap();
        let gens = [SparseGenerator::new(vec![(loc, 1)])];
        assert_eq!(associative_closure_dim(&g, &rot, &gens, Q), 2);
        // The rotation-algebra generators generate all of kO.
        let gens = rotation_generators(&g, &rot);
        assert_eq!(associative_closure_dim(&g, &rot, &gens, F113), 60);
    }

    #[test]
    fn centralizer_trivial_cases() {
        let g = build_named("S4").unwrap();
        let basis = SubIndex::full(g.order());
        let empty = SpanBasis::new(Q, g.order());
        assert_eq!(centralizer_dim_within(&g, &basis, &empty, &[], Q), 0);
        // Span of the identity delta commutes with anything.
        let mut span = SpanBasis::new(Q, g.order());
        span.insert(&AlgebraVector::delta(Q, g.order(), 0));
        let gens = [SparseGenerator::new(vec![(3, 1)])];
        assert_eq!(centralizer_dim_within(&g, &basis, &span, &gens, Q), 1);
    }
}
