//! Polynomial identities in group algebras: reconstructing an odd-order
//! element from g - g^{-1}, and the order-3 adjoint identity.
//!
//! All constructions solve exact rational linear systems in the quotient
//! ring Q[x]/(x^N - 1); no cyclotomic arithmetic is ever needed.

use thiserror::Error;

use crate::algebra::{AlgebraVector, Coeffs, GenTables, SparseGenerator};
use crate::field::{FieldSpec, Rat};
use crate::groups::{ReflectionGroup, SubIndex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdentityError {
    #[error("no such polynomial: the order {0} is even")]
    EvenOrder(u32),
    #[error("element has order {got}, expected order {expected}")]
    WrongOrder { expected: u32, got: u32 },
}

/// Dense rational polynomial, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    pub coeffs: Vec<Rat>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rat>) -> RationalPolynomial {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// P(X) + P(-X): kills the odd-degree part, doubles the even part.
    pub fn symmetrize(&self) -> RationalPolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c + c } else { Rat::ZERO })
            .collect();
        RationalPolynomial::new(coeffs)
    }
}

impl std::fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c} X")?,
                _ => write!(f, "{c} X^{k}")?,
            }
        }
        Ok(())
    }
}

/// Elements of Q[x]/(x^N - 1) as coefficient vectors of length N.
fn ring_mul(a: &[Rat], b: &[Rat], n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::ZERO; n];
    for (i, &ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                let k = (i + j) % n;
                out[k] = out[k] + ai * bj;
            }
        }
    }
    out
}

/// x - x^{-1} = x - x^{N-1} in the quotient ring.
fn ring_y(n: usize) -> Vec<Rat> {
    let mut y = vec![Rat::ZERO; n];
    if n == 1 {
        return y; // x = x^{-1}, the difference is zero
    }
    y[1] = Rat::ONE;
    y[n - 1] = y[n - 1] - Rat::ONE;
    y
}

/// Exact Gaussian solve of a square rational system; None if singular.
fn solve_rational(mut m: Vec<Vec<Rat>>, mut rhs: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = rhs.len();
    let mut perm: Vec<usize> = (0..n).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        perm.swap(col, pivot);
        let inv = m[col][col].inv();
        for j in col..n {
            m[col][j] = m[col][j] * inv;
        }
        rhs[col] = rhs[col] * inv;
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let c = m[r][col];
                for j in col..n {
                    m[r][j] = m[r][j] - c * m[col][j];
                }
                rhs[r] = rhs[r] - c * rhs[col];
            }
        }
    }
    Some(rhs)
}

/// The powers (x - x^{-1})^r for r = 0..N-1 in Q[x]/(x^N - 1). For odd N
/// these form a basis of the quotient ring.
fn y_powers(n: usize) -> Vec<Vec<Rat>> {
    let y = ring_y(n);
    let mut powers = Vec::with_capacity(n);
    let mut acc = vec![Rat::ZERO; n];
    acc[0] = Rat::ONE;
    for _ in 0..n {
        powers.push(acc.clone());
        acc = ring_mul(&acc, &y, n);
    }
    powers
}

/// Polynomial P of degree < N with x = P(x - x^{-1}) mod (x^N - 1); exists
/// exactly when N is odd.
pub fn odd_order_poly(n: u32) -> Result<RationalPolynomial, IdentityError> {
    if n % 2 == 0 {
        return Err(IdentityError::EvenOrder(n));
    }
    let n = n as usize;
    if n == 1 {
        return Ok(RationalPolynomial::new(vec![Rat::ONE]));
    }
    // Columns are the powers of y; solve for x in that basis.
    let powers = y_powers(n);
    let matrix: Vec<Vec<Rat>> = (0..n)
        .map(|row| (0..n).map(|col| powers[col][row]).collect())
        .collect();
    let mut rhs = vec![Rat::ZERO; n];
    rhs[1] = Rat::ONE;
    let sol = solve_rational(matrix, rhs).expect("y-powers form a basis for odd N");
    Ok(RationalPolynomial::new(sol))
}

/// Even polynomial with x + x^{-1} = P(x - x^{-1}) mod (x^N - 1), N odd.
pub fn even_sum_poly(n: u32) -> Result<RationalPolynomial, IdentityError> {
    Ok(odd_order_poly(n)?.symmetrize())
}

/// Verification target for [`verify_in_group`] / [`verify_in_cyclic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// x = P(x - x^{-1}).
    SelfElement,
    /// x + x^{-1} = P(x - x^{-1}).
    Sum,
}

/// Checks the identity in the cyclic group algebra Q[x]/(x^N - 1) itself.
pub fn verify_in_cyclic(n: u32, p: &RationalPolynomial, mode: VerifyMode) -> bool {
    let n = n as usize;
    let y = ring_y(n);
    // Horner in the quotient ring.
    let mut acc = vec![Rat::ZERO; n];
    for &c in p.coeffs.iter().rev() {
        acc = ring_mul(&acc, &y, n);
        acc[0] = acc[0] + c;
    }
    let mut target = vec![Rat::ZERO; n];
    match mode {
        VerifyMode::SelfElement => target[1 % n] = target[1 % n] + Rat::ONE,
        VerifyMode::Sum => {
            target[1 % n] = target[1 % n] + Rat::ONE;
            target[(n - 1) % n] = target[(n - 1) % n] + Rat::ONE;
        }
    }
    acc == target
}

fn axpy_rat(acc: &mut AlgebraVector, c: Rat, v: &AlgebraVector) {
    let (Coeffs::Rat(a), Coeffs::Rat(b)) = (&mut acc.coeffs, &v.coeffs) else {
        panic!("identities are verified over the rationals");
    };
    for (x, &y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = *x + c * y;
        }
    }
}

/// Evaluates P on the group-algebra element g - g^{-1} and compares with g
/// (SelfElement) or g + g^{-1} (Sum). Returns false when the identity fails.
pub fn verify_in_group(
    group: &ReflectionGroup,
    g: u32,
    p: &RationalPolynomial,
    mode: VerifyMode,
) -> bool {
    let dim = group.order();
    let field = FieldSpec::Rational;
    let basis = SubIndex::full(dim);
    let inv = group.inverse[g as usize];

    let mut target = AlgebraVector::zero(field, dim);
    target.add_int(g as usize, 1);
    if mode == VerifyMode::Sum {
        target.add_int(inv as usize, 1);
    }

    if g == inv {
        // g - g^{-1} = 0: P evaluates to its constant term times the identity.
        let mut acc = AlgebraVector::zero(field, dim);
        if let Some(&c0) = p.coeffs.first() {
            axpy_rat(&mut acc, c0, &AlgebraVector::delta(field, dim, 0));
        }
        return acc == target;
    }

    let gen = SparseGenerator::new(vec![(g, 1), (inv, -1)]);
    let tables = GenTables::build(group, &basis, gen).expect("full basis");
    // Powers of (g - g^{-1}) applied to the identity delta.
    let mut power = AlgebraVector::delta(field, dim, 0);
    let mut acc = AlgebraVector::zero(field, dim);
    for (k, &c) in p.coeffs.iter().enumerate() {
        if k > 0 {
            power = tables.mul_left(&power);
        }
        if !c.is_zero() {
            axpy_rat(&mut acc, c, &power);
        }
    }
    acc == target
}

/// The quartic of the order-3 adjoint identity:
/// Ad(g) = Q(ad(g) - ad(g^{-1})) with Q = X^4/24 + X^3/12 + 5X^2/8 + 3X/4 + 1.
pub fn ad3_polynomial() -> RationalPolynomial {
    RationalPolynomial::new(vec![
        Rat::ONE,
        Rat::new(3, 4),
        Rat::new(5, 8),
        Rat::new(1, 12),
        Rat::new(1, 24),
    ])
}

/// Verifies the order-3 adjoint identity for `g` by applying both operators
/// to every basis delta of the group algebra.
pub fn verify_ad3(group: &ReflectionGroup, g: u32) -> Result<bool, IdentityError> {
    let ord = group.element_order[g as usize];
    if ord != 3 {
        return Err(IdentityError::WrongOrder { expected: 3, got: ord });
    }
    let dim = group.order();
    let field = FieldSpec::Rational;
    let basis = SubIndex::full(dim);
    let inv = group.inverse[g as usize];
    let gen = SparseGenerator::new(vec![(g, 1), (inv, -1)]);
    let tables = GenTables::build(group, &basis, gen).expect("full basis");
    let q = ad3_polynomial();

    for x in 0..dim as u32 {
        let mut power = AlgebraVector::delta(field, dim, x as usize);
        let mut acc = AlgebraVector::zero(field, dim);
        for (k, &c) in q.coeffs.iter().enumerate() {
            if k > 0 {
                // ad(g) - ad(g^{-1}) applied once more.
                power = tables.bracket(&power);
            }
            if !c.is_zero() {
                axpy_rat(&mut acc, c, &power);
            }
        }
        let conj = AlgebraVector::delta(field, dim, group.conjugate(g, x) as usize);
        if acc != conj {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build_named;
    use crate::span::RatSpan;

    #[test]
    fn odd_poly_small_cases() {
        assert_eq!(
            odd_order_poly(1).unwrap(),
            RationalPolynomial::new(vec![Rat::ONE])
        );
        // N = 3: 1 + X/2 + X^2/2.
        assert_eq!(
            odd_order_poly(3).unwrap(),
            RationalPolynomial::new(vec![Rat::ONE, Rat::new(1, 2), Rat::new(1, 2)])
        );
        assert_eq!(odd_order_poly(2), Err(IdentityError::EvenOrder(2)));
        assert_eq!(odd_order_poly(8), Err(IdentityError::EvenOrder(8)));
    }

    #[test]
    fn even_sum_poly_small_cases() {
        // N = 1: constant 2; N = 3: 2 + X^2.
        assert_eq!(
            even_sum_poly(1).unwrap(),
            RationalPolynomial::new(vec![Rat::from_int(2)])
        );
        assert_eq!(
            even_sum_poly(3).unwrap(),
            RationalPolynomial::new(vec![Rat::from_int(2), Rat::ZERO, Rat::ONE])
        );
        for n in [1u32, 3, 5, 7, 9, 15] {
            let p = even_sum_poly(n).unwrap();
            assert!(
                p.coeffs.iter().skip(1).step_by(2).all(Rat::is_zero),
                "odd coefficient survives at N = {n}"
            );
        }
    }

    #[test]
    fn cyclic_verification_all_odd_orders() {
        for n in [1u32, 3, 5, 7, 9, 11, 13, 15] {
            let p = odd_order_poly(n).unwrap();
            assert!(verify_in_cyclic(n, &p, VerifyMode::SelfElement), "N = {n}");
            let q = even_sum_poly(n).unwrap();
            assert!(verify_in_cyclic(n, &q, VerifyMode::Sum), "N = {n}");
        }
    }

    #[test]
    fn y_powers_have_full_rank_for_odd_orders() {
        for n in [3usize, 5, 7, 9, 11, 13, 15] {
            let mut span = RatSpan::new(n);
            for p in y_powers(n) {
                span.insert(&p);
            }
            assert_eq!(span.rank(), n, "N = {n}");
        }
    }

    #[test]
    fn group_verification_on_cycles() {
        let s5 = build_named("S5").unwrap();
        // A 3-cycle.
        let three = (0..s5.order() as u32)
            .find(|&i| s5.element_order[i as usize] == 3)
            .unwrap();
        let p3 = odd_order_poly(3).unwrap();
        assert!(verify_in_group(&s5, three, &p3, VerifyMode::SelfElement));
        assert!(verify_in_group(
            &s5,
            three,
            &even_sum_poly(3).unwrap(),
            VerifyMode::Sum
        ));
        // A 5-cycle with the N = 5 polynomial.
        let five = (0..s5.order() as u32)
            .find(|&i| s5.element_order[i as usize] == 5)
            .unwrap();
        let p5 = odd_order_poly(5).unwrap();
        assert!(verify_in_group(&s5, five, &p5, VerifyMode::SelfElement));
        // The wrong polynomial fails.
        assert!(!verify_in_group(&s5, five, &p3, VerifyMode::SelfElement));
        // Identity with P = 1.
        let one = RationalPolynomial::new(vec![Rat::ONE]);
        assert!(verify_in_group(&s5, 0, &one, VerifyMode::SelfElement));
        // An involution can never satisfy the self identity.
        let invol = s5.reflections[0];
        assert!(!verify_in_group(&s5, invol, &p3, VerifyMode::SelfElement));
        assert!(!verify_in_group(&s5, invol, &p5, VerifyMode::SelfElement));
    }

    #[test]
    fn ad3_identity() {
        for spec in ["S3", "S4"] {
            let g = build_named(spec).unwrap();
            let elt = (0..g.order() as u32)
                .find(|&i| g.element_order[i as usize] == 3)
                .unwrap();
            assert_eq!(verify_ad3(&g, elt), Ok(true), "{spec}");
        }
        let s4 = build_named("S4").unwrap();
        let invol = s4.reflections[0];
        assert_eq!(
            verify_ad3(&s4, invol),
            Err(IdentityError::WrongOrder { expected: 3, got: 2 })
        );
    }
}
