//! Partition combinatorics and the closed-form type-A rotation-algebra
//! dimension.
//!
//! Everything here is pure integer arithmetic: hook-length dimensions in
//! `u128`, the classification of non-hook partitions used by the type-A
//! structure theorem, and the hook-shape family D(a,b).

use serde::Serialize;

/// Integer partition with weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Partition {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must decrease");
        Partition(parts)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0) as usize;
        let parts = (0..cols)
            .map(|j| self.0.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Hooks are the shapes [n-k, 1^k].
    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }

    /// Length b of the main diagonal of the Young diagram.
    pub fn diag_len(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count() as u32
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.transpose()
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Dimension of the irreducible S_n-representation labelled by the partition:
/// the hook-length formula n! / prod(hooks).
pub fn dim_partition(lambda: &Partition) -> u128 {
    let n = lambda.size();
    let t = lambda.transpose();
    let mut numerator: u128 = 1;
    for k in 1..=n as u128 {
        numerator *= k;
    }
    let mut denom: u128 = 1;
    for (i, &row) in lambda.0.iter().enumerate() {
        for j in 0..row as usize {
            let hook = (row as usize - j) + (t.0[j] as usize - i) - 1;
            denom *= hook as u128;
        }
    }
    debug_assert_eq!(numerator % denom, 0);
    numerator / denom
}

/// All partitions of n in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for next in (1..=remaining.min(max)).rev() {
            cur.push(next);
            rec(remaining - next, next, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// Classification of the non-hook partitions of n used in the type-A
/// structure theorem: representatives lambda > lambda' of the non-self-dual
/// pairs, plus the self-conjugate shapes split by the parity of (n - b)/2.
#[derive(Debug, Clone, Serialize)]
pub struct TypeAClassification {
    pub n: u32,
    /// Non-hook, non-self-conjugate representatives with lambda > lambda'
    /// lexicographically.
    pub lambda_n: Vec<Partition>,
    /// Self-conjugate non-hooks of real type: (n - b)/2 even.
    pub s_plus: Vec<Partition>,
    /// Self-conjugate non-hooks of quaternionic type: (n - b)/2 odd.
    pub s_minus: Vec<Partition>,
}

pub fn classify_type_a(n: u32) -> TypeAClassification {
    assert!(n >= 5, "classification needs n >= 5");
    let mut lambda_n = Vec::new();
    let mut s_plus = Vec::new();
    let mut s_minus = Vec::new();
    for lam in partitions_of(n) {
        if lam.is_hook() {
            continue;
        }
        let t = lam.transpose();
        if lam == t {
            // n - b is even for self-conjugate shapes.
            let b = lam.diag_len();
            debug_assert_eq!((n - b) % 2, 0);
            if ((n - b) / 2) % 2 == 0 {
                s_plus.push(lam);
            } else {
                s_minus.push(lam);
            }
        } else if lam.0 > t.0 {
            lambda_n.push(lam);
        }
    }
    TypeAClassification {
        n,
        lambda_n,
        s_plus,
        s_minus,
    }
}

/// One summand of the type-A dimension formula, for reporting.
#[derive(Debug, Clone, Serialize)]
pub struct TypeATerm {
    pub partition: String,
    pub class: &'static str,
    pub dim: u128,
    pub contribution: u128,
}

/// Dimension of the rotation algebra of S_n from the structure theorem:
/// so(n-1) plus so(V) for each representative pair, so(V+) + so(V-) for real
/// self-conjugate shapes and sl(V+) for quaternionic ones.
pub fn type_a_rotation_dim(n: u32) -> u128 {
    type_a_rotation_breakdown(n)
        .iter()
        .map(|t| t.contribution)
        .sum()
}

pub fn type_a_rotation_breakdown(n: u32) -> Vec<TypeATerm> {
    let cls = classify_type_a(n);
    let so = |d: u128| d * (d - 1) / 2;
    let mut terms = vec![TypeATerm {
        partition: format!("[{},1]", n - 1),
        class: "so(n-1)",
        dim: (n - 1) as u128,
        contribution: so((n - 1) as u128),
    }];
    for lam in &cls.lambda_n {
        let d = dim_partition(lam);
        terms.push(TypeATerm {
            partition: lam.to_string(),
            class: "so(V)",
            dim: d,
            contribution: so(d),
        });
    }
    for lam in &cls.s_plus {
        let d = dim_partition(lam);
        debug_assert_eq!(d % 2, 0, "self-conjugate dims are even");
        terms.push(TypeATerm {
            partition: lam.to_string(),
            class: "so(V+) + so(V-)",
            dim: d,
            contribution: 2 * so(d / 2),
        });
    }
    for lam in &cls.s_minus {
        let d = dim_partition(lam);
        debug_assert_eq!(d % 2, 0, "self-conjugate dims are even");
        terms.push(TypeATerm {
            partition: lam.to_string(),
            class: "sl(V+)",
            dim: d,
            contribution: (d / 2) * (d / 2) - 1,
        });
    }
    terms
}

/// The hook-plus-column shape D(a,b) = [a+2, 2, 1^b].
pub fn d_shape(a: u32, b: u32) -> Partition {
    let mut parts = vec![a + 2, 2];
    parts.extend(std::iter::repeat(1).take(b as usize));
    Partition::new(parts)
}

/// Closed-form dimension (b+1)/(a+2) * C(a+b+2, a) * (a+b+4).
pub fn dim_d(a: u32, b: u32) -> u128 {
    let binom = |n: u128, k: u128| -> u128 {
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    };
    let (a, b) = (a as u128, b as u128);
    // (b+1) * C(a+b+2, a) * (a+b+4) is divisible by a+2.
    let prod = (b + 1) * binom(a + b + 2, a) * (a + b + 4);
    debug_assert_eq!(prod % (a + 2), 0);
    prod / (a + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn hook_length_dimensions() {
        assert_eq!(dim_partition(&part(&[5])), 1);
        assert_eq!(dim_partition(&part(&[3, 2])), 5);
        assert_eq!(dim_partition(&part(&[5, 2, 1])), 64);
        assert_eq!(dim_partition(&part(&[3, 3, 2])), 42);
        assert_eq!(dim_partition(&part(&[1, 1, 1, 1])), 1);
    }

    #[test]
    fn transpose_and_shape_predicates() {
        assert_eq!(part(&[4, 2, 1, 1]).transpose(), part(&[4, 2, 1, 1]));
        assert_eq!(part(&[3, 2]).transpose(), part(&[2, 2, 1]));
        assert!(part(&[6, 1, 1]).is_hook());
        assert!(!part(&[3, 2]).is_hook());
        assert_eq!(part(&[3, 2, 1]).diag_len(), 2);
        assert_eq!(part(&[1]).diag_len(), 1);
    }

    #[test]
    fn partition_enumeration_counts() {
        // p(n) for n = 1..10.
        let expected = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &count) in (1u32..=10).zip(&expected) {
            assert_eq!(partitions_of(n).len(), count);
        }
    }

    #[test]
    fn squares_sum_to_factorial() {
        for n in 1u32..=10 {
            let total: u128 = partitions_of(n)
                .iter()
                .map(|l| dim_partition(l).pow(2))
                .sum();
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(total, fact, "n = {n}");
        }
    }

    #[test]
    fn nontrivial_dims_at_least_n_minus_1() {
        for n in 5u32..=10 {
            for lam in partitions_of(n) {
                if lam.0 == [n] || lam.0.iter().all(|&p| p == 1) {
                    continue;
                }
                assert!(dim_partition(&lam) >= (n - 1) as u128, "{lam} at n = {n}");
            }
        }
    }

    #[test]
    fn classification_small_cases() {
        let c5 = classify_type_a(5);
        assert_eq!(c5.lambda_n, vec![part(&[3, 2])]);
        assert!(c5.s_plus.is_empty() && c5.s_minus.is_empty());

        let c6 = classify_type_a(6);
        assert_eq!(c6.s_plus, vec![part(&[3, 2, 1])]);
        assert!(c6.s_minus.is_empty());

        let c7 = classify_type_a(7);
        assert!(c7.s_plus.is_empty() && c7.s_minus.is_empty());

        // Every non-hook appears exactly once among Lambda, its transposes
        // and the self-conjugate lists.
        for n in 5u32..=9 {
            let c = classify_type_a(n);
            let mut seen: Vec<Partition> = c
                .lambda_n
                .iter()
                .flat_map(|l| [l.clone(), l.transpose()])
                .chain(c.s_plus.iter().cloned())
                .chain(c.s_minus.iter().cloned())
                .collect();
            seen.sort();
            let mut nonhooks: Vec<Partition> = partitions_of(n)
                .into_iter()
                .filter(|l| !l.is_hook())
                .collect();
            nonhooks.sort();
            assert_eq!(seen, nonhooks, "n = {n}");
        }
    }

    #[test]
    fn type_a_dimension_series() {
        let expected: [u128; 7] = [16, 112, 1002, 9115, 86949, 892531, 9924091];
        for (n, &d) in (5u32..=11).zip(&expected) {
            assert_eq!(type_a_rotation_dim(n), d, "n = {n}");
        }
    }

    #[test]
    fn d_family_matches_hook_formula() {
        assert_eq!(dim_d(3, 1), 64);
        assert_eq!(dim_d(2, 1), 35);
        assert_eq!(dim_d(0, 0), 2);
        for a in 0..=10 {
            for b in 0..=10 {
                assert_eq!(
                    dim_d(a, b),
                    dim_partition(&d_shape(a, b)),
                    "D({a},{b})"
                );
            }
        }
    }
}
