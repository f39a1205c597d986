//! Incremental linear spans over Q and F_p.
//!
//! Both span types keep a row-echelon basis with unit pivots and distinct
//! pivot columns, so membership testing is a single reduction pass. The
//! prime-field span stores rows as `u32` residues and reduces candidates with
//! lazy `u64` accumulators: entries are only reduced mod p when a pivot
//! decision needs them, which keeps the inner axpy loop free of divisions.

use rayon::prelude::*;

use crate::algebra::{AlgebraVector, Coeffs};
use crate::field::{mod_inv, mod_mul, FieldSpec, Rat};

/// Row-echelon span over F_p.
#[derive(Debug, Clone)]
pub struct ModSpan {
    p: u64,
    dim: usize,
    rows: Vec<Vec<u32>>,
    pivot_cols: Vec<usize>,
    pivot_of_col: Vec<Option<u32>>,
}

impl ModSpan {
    pub fn new(p: u64, dim: usize) -> ModSpan {
        assert!(p > 2 && p < (1 << 31), "modulus out of range");
        ModSpan {
            p,
            dim,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
            pivot_of_col: vec![None; dim],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` against the basis. Returns the normalized remainder and
    /// its pivot column, or `None` when `v` lies in the span.
    ///
    /// Accumulator entries stay below `rank * p^2`, far inside `u64` range
    /// for the group orders this crate handles.
    fn reduce(&self, v: &[u64]) -> Option<(usize, Vec<u32>)> {
        debug_assert_eq!(v.len(), self.dim);
        let p = self.p;
        let mut acc: Vec<u64> = v.to_vec();
        for col in 0..self.dim {
            let r = acc[col] % p;
            acc[col] = r;
            if r == 0 {
                continue;
            }
            match self.pivot_of_col[col] {
                Some(row) => {
                    let c = p - r;
                    let row = &self.rows[row as usize];
                    for j in col..self.dim {
                        acc[j] += c * row[j] as u64;
                    }
                    acc[col] = 0;
                }
                None => {
                    // New pivot: normalize the tail so the pivot entry is 1.
                    let inv = mod_inv(r, p);
                    let out: Vec<u32> = (0..self.dim)
                        .map(|j| {
                            if j < col {
                                0
                            } else {
                                mod_mul(acc[j] % p, inv, p) as u32
                            }
                        })
                        .collect();
                    return Some((col, out));
                }
            }
        }
        None
    }

    /// Inserts a vector; returns whether the rank grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        match self.reduce(v) {
            None => false,
            Some((col, row)) => {
                self.pivot_of_col[col] = Some(self.rows.len() as u32);
                self.pivot_cols.push(col);
                self.rows.push(row);
                true
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).is_none()
    }

    fn basis_rows(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| x as u64).collect())
    }
}

/// Row-echelon span over the rationals.
#[derive(Debug, Clone)]
pub struct RatSpan {
    dim: usize,
    rows: Vec<Vec<Rat>>,
    pivot_cols: Vec<usize>,
    pivot_of_col: Vec<Option<u32>>,
}

impl RatSpan {
    pub fn new(dim: usize) -> RatSpan {
        RatSpan {
            dim,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
            pivot_of_col: vec![None; dim],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &[Rat]) -> Option<(usize, Vec<Rat>)> {
        debug_assert_eq!(v.len(), self.dim);
        let mut acc: Vec<Rat> = v.to_vec();
        for col in 0..self.dim {
            if acc[col].is_zero() {
                continue;
            }
            match self.pivot_of_col[col] {
                Some(row) => {
                    let c = acc[col];
                    let row = &self.rows[row as usize];
                    for j in col..self.dim {
                        if !row[j].is_zero() {
                            acc[j] = acc[j] - c * row[j];
                        }
                    }
                }
                None => {
                    let inv = acc[col].inv();
                    for entry in acc.iter_mut().skip(col) {
                        *entry = *entry * inv;
                    }
                    return Some((col, acc));
                }
            }
        }
        None
    }

    pub fn insert(&mut self, v: &[Rat]) -> bool {
        match self.reduce(v) {
            None => false,
            Some((col, row)) => {
                self.pivot_of_col[col] = Some(self.rows.len() as u32);
                self.pivot_cols.push(col);
                self.rows.push(row);
                true
            }
        }
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).is_none()
    }
}

/// Field-polymorphic span, matching the coefficient variants of
/// [`AlgebraVector`].
#[derive(Debug, Clone)]
pub enum SpanBasis {
    Rat(RatSpan),
    Mod(ModSpan),
}

impl SpanBasis {
    pub fn new(field: FieldSpec, dim: usize) -> SpanBasis {
        match field {
            FieldSpec::Rational => SpanBasis::Rat(RatSpan::new(dim)),
            FieldSpec::Prime(p) => SpanBasis::Mod(ModSpan::new(p, dim)),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            SpanBasis::Rat(s) => s.rank(),
            SpanBasis::Mod(s) => s.rank(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            SpanBasis::Rat(s) => s.dim(),
            SpanBasis::Mod(s) => s.dim(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            SpanBasis::Rat(_) => FieldSpec::Rational,
            SpanBasis::Mod(s) => FieldSpec::Prime(s.p),
        }
    }

    pub fn insert(&mut self, v: &AlgebraVector) -> bool {
        match (self, &v.coeffs) {
            (SpanBasis::Rat(s), Coeffs::Rat(c)) => s.insert(c),
            (SpanBasis::Mod(s), Coeffs::Mod { vals, .. }) => s.insert(vals),
            _ => panic!("field mismatch between span and vector"),
        }
    }

    pub fn contains(&self, v: &AlgebraVector) -> bool {
        match (self, &v.coeffs) {
            (SpanBasis::Rat(s), Coeffs::Rat(c)) => s.contains(c),
            (SpanBasis::Mod(s), Coeffs::Mod { vals, .. }) => s.contains(vals),
            _ => panic!("field mismatch between span and vector"),
        }
    }

    /// Inserts a batch of candidates. Candidates are first reduced against
    /// the frozen basis in parallel; survivors are then inserted
    /// sequentially (in their original order, so the result is
    /// deterministic). Returns the number of vectors that grew the rank.
    pub fn insert_batch(&mut self, batch: &[AlgebraVector]) -> usize {
        match self {
            SpanBasis::Mod(s) => {
                let survivors: Vec<Vec<u64>> = batch
                    .par_iter()
                    .filter_map(|v| {
                        let Coeffs::Mod { vals, .. } = &v.coeffs else {
                            panic!("field mismatch between span and vector");
                        };
                        s.reduce(vals).map(|(col, row)| {
                            let mut out = vec![0u64; row.len()];
                            for (j, &x) in row.iter().enumerate().skip(col) {
                                out[j] = x as u64;
                            }
                            out
                        })
                    })
                    .collect();
                let mut added = 0;
                for rem in survivors {
                    if s.insert(&rem) {
                        added += 1;
                    }
                }
                added
            }
            SpanBasis::Rat(s) => {
                // Rational runs are small; sequential insertion is fine.
                let mut added = 0;
                for v in batch {
                    let Coeffs::Rat(c) = &v.coeffs else {
                        panic!("field mismatch between span and vector");
                    };
                    if s.insert(c) {
                        added += 1;
                    }
                }
                added
            }
        }
    }

    /// Basis rows as algebra vectors (echelon form, unit pivots).
    pub fn basis_vectors(&self) -> Vec<AlgebraVector> {
        match self {
            SpanBasis::Rat(s) => s
                .rows
                .iter()
                .map(|r| AlgebraVector {
                    coeffs: Coeffs::Rat(r.clone()),
                })
                .collect(),
            SpanBasis::Mod(s) => s
                .basis_rows()
                .map(|r| AlgebraVector {
                    coeffs: Coeffs::Mod { p: s.p, vals: r },
                })
                .collect(),
        }
    }

    /// Whether every basis vector of `self` lies in `other`.
    pub fn subspace_leq(&self, other: &SpanBasis) -> bool {
        self.basis_vectors().iter().all(|v| other.contains(v))
    }

    /// dim(self + other), computed without mutating either span.
    pub fn dim_sum(&self, other: &SpanBasis) -> usize {
        let mut joined = self.clone();
        for v in other.basis_vectors() {
            joined.insert(&v);
        }
        joined.rank()
    }

    /// dim(self /\ other) via the rank formula.
    pub fn dim_intersection(&self, other: &SpanBasis) -> usize {
        self.rank() + other.rank() - self.dim_sum(other)
    }
}
