//! Grover evolution, positive supports, the flip `J` and the generalized
//! Ihara zeta polynomial `det(I - u S(U^n))`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::Rational;
use crate::graph::Graph;
use crate::matrix::{IntMatrix, PositiveSupport, RatMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkOpsError {
    #[error("vertex {0} is isolated; the Grover coin needs degree >= 1")]
    IsolatedVertex(usize),
    #[error("walk power must be at least 1")]
    ZeroPower,
}

/// Which side of `m` the flip `J` multiplies from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn check_degrees(g: &Graph) -> Result<(), WalkOpsError> {
    match (0..g.vertex_count()).find(|&v| g.degree(v) == 0) {
        Some(v) => Err(WalkOpsError::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// The Grover evolution: `U[a][b] = 2/deg(o(a)) - [b = inv(a)]` whenever
/// `t(b) = o(a)`.
pub fn build_grover(g: &Graph) -> Result<RatMatrix, WalkOpsError> {
    check_degrees(g)?;
    let mut u = RatMatrix::zeros(g.arc_count());
    for a in 0..g.arc_count() {
        let v = g.origin(a);
        let trans = Rational::new(BigInt::from(2), BigInt::from(g.degree(v)));
        for b in g.arcs_into(v) {
            let w = if b == g.inverse(a) { &trans - Rational::one() } else { trans.clone() };
            u.set(a, b, w);
        }
    }
    Ok(u)
}

/// `scale * U` as an integer matrix, `scale` = lcm of the vertex degrees
/// (= k on a k-regular graph). Same sign pattern as `U` in every power.
pub fn scaled_grover(g: &Graph) -> Result<(IntMatrix, BigInt), WalkOpsError> {
    check_degrees(g)?;
    let scale = (0..g.vertex_count()).fold(BigInt::one(), |acc, v| acc.lcm(&BigInt::from(g.degree(v))));
    let mut u = IntMatrix::zeros(g.arc_count());
    for a in 0..g.arc_count() {
        let v = g.origin(a);
        let trans = BigInt::from(2) * &scale / BigInt::from(g.degree(v));
        for b in g.arcs_into(v) {
            let w = if b == g.inverse(a) { &trans - &scale } else { trans.clone() };
            u.set(a, b, w);
        }
    }
    Ok((u, scale))
}

/// `S(U)`: the non-backtracking (Hashimoto) matrix.
pub fn support_of_grover(g: &Graph) -> Result<IntMatrix, WalkOpsError> {
    Ok(scaled_grover(g)?.0.positive_support())
}

/// `S(U^n)` through the integer scaled power (exact; no rational
/// normalisation inside the loop).
pub fn support_of_power(g: &Graph, n: usize) -> Result<IntMatrix, WalkOpsError> {
    if n == 0 {
        return Err(WalkOpsError::ZeroPower);
    }
    let (u, _) = scaled_grover(g)?;
    Ok(u.pow(n).positive_support())
}

/// `S(U^n)` through the exact rational power of `U`; slower, kept as an
/// independent route.
pub fn support_of_power_rational(g: &Graph, n: usize) -> Result<IntMatrix, WalkOpsError> {
    if n == 0 {
        return Err(WalkOpsError::ZeroPower);
    }
    Ok(build_grover(g)?.pow(n).positive_support())
}

/// Arc involution as a permutation vector.
pub fn flip_permutation(g: &Graph) -> Vec<usize> {
    (0..g.arc_count()).map(|a| g.inverse(a)).collect()
}

/// `J m` (left) or `m J` (right), with `(J psi)(a) = psi(inv(a))`.
pub fn flip(g: &Graph, m: &IntMatrix, side: Side) -> IntMatrix {
    let perm = flip_permutation(g);
    match side {
        Side::Left => m.permute_rows(&perm),
        Side::Right => m.permute_cols(&perm),
    }
}

/// `J` as an explicit 0/1 matrix.
pub fn flip_matrix(g: &Graph) -> IntMatrix {
    flip(g, &IntMatrix::identity(g.arc_count()), Side::Left)
}

/// Reciprocal of the generalized zeta function: coefficients of
/// `det(I - u S(U^n))`, constant term first.
pub fn zeta_poly(g: &Graph, n: usize) -> Result<Vec<BigInt>, WalkOpsError> {
    let s = support_of_power(g, n)?;
    Ok(reciprocal_charpoly(&s))
}

/// `det(I - u M)` from the characteristic polynomial `det(x I - M)`:
/// reverse the coefficient order and trim trailing zeros.
pub fn reciprocal_charpoly(m: &IntMatrix) -> Vec<BigInt> {
    let mut coeffs = m.charpoly();
    coeffs.reverse();
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// Adjacency matrix (vertex indexed).
pub fn adjacency(g: &Graph) -> IntMatrix {
    IntMatrix::from_fn(g.vertex_count(), |i, j| if g.has_edge(i, j) { BigInt::one() } else { BigInt::zero() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use crate::graph::{builtin, parse_adjlist};

    #[test]
    fn triangle_grover_is_a_permutation() {
        let g = builtin("C3").unwrap();
        let u = build_grover(&g).unwrap();
        for (_, _, v) in u.entries() {
            assert!(v.is_zero() || v.is_one());
        }
        let s = support_of_grover(&g).unwrap();
        assert!(s.pow(3).is_identity());
        assert!(!s.is_identity());
    }

    #[test]
    fn k4_weights() {
        let g = builtin("K4").unwrap();
        let u = build_grover(&g).unwrap();
        for a in 0..g.arc_count() {
            for b in 0..g.arc_count() {
                let expected = if g.terminus(b) != g.origin(a) {
                    rational(0, 1)
                } else if b == g.inverse(a) {
                    rational(-1, 3)
                } else {
                    rational(2, 3)
                };
                assert_eq!(u.get(a, b), &expected);
            }
        }
    }

    #[test]
    fn support_is_hashimoto() {
        let g = builtin("K4").unwrap();
        let s = support_of_grover(&g).unwrap();
        for a in 0..g.arc_count() {
            for b in 0..g.arc_count() {
                let nb = g.terminus(b) == g.origin(a) && b != g.inverse(a);
                assert_eq!(s.get(a, b).is_one(), nb);
            }
        }
        // positive and negative parts never overlap
        let u = build_grover(&g).unwrap();
        let neg = u.map(|v| -v.clone()).positive_support();
        assert!(s.entries().all(|(i, j, v)| !(v.is_one() && neg.get(i, j).is_one())));
    }

    #[test]
    fn flip_identities() {
        let g = builtin("petersen").unwrap();
        let j = flip_matrix(&g);
        assert!(j.mul(&j).is_identity());
        let s = support_of_grover(&g).unwrap();
        assert_eq!(flip(&g, &flip(&g, &s, Side::Left), Side::Right), s.transpose());
        assert_eq!(flip(&g, &s, Side::Left), j.mul(&s));
        assert_eq!(flip(&g, &s, Side::Right), s.mul(&j));
    }

    #[test]
    fn isolated_vertex_rejected() {
        let g = parse_adjlist("0: 1\n1: 0\n2:").unwrap();
        assert_eq!(build_grover(&g), Err(WalkOpsError::IsolatedVertex(2)));
        assert_eq!(support_of_power(&builtin("K4").unwrap(), 0), Err(WalkOpsError::ZeroPower));
    }

    #[test]
    fn integer_and_rational_routes_agree_on_irregular_graph() {
        // triangle with a pendant path closed into a square: degrees 2 and 3
        let g = parse_adjlist("0: 1 2 3\n1: 0 2\n2: 0 1 4\n3: 0 4\n4: 2 3").unwrap();
        for n in 1..=4 {
            assert_eq!(support_of_power(&g, n).unwrap(), support_of_power_rational(&g, n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn zeta_of_triangle() {
        // (1 - u^3)^2 = 1 - 2u^3 + u^6
        let z = zeta_poly(&builtin("C3").unwrap(), 1).unwrap();
        let expected: Vec<BigInt> = [1, 0, 0, -2, 0, 0, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(z, expected);
    }
}
