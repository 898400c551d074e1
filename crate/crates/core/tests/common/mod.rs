//! Oracles shared by the integration tests and the acceptance target.
#![allow(dead_code)]

use gwalk_core::exact::Rational;
use gwalk_core::graph::Graph;
use gwalk_core::matrix::IntMatrix;
use gwalk_core::spectral::Poly;
use gwalk_core::walkops::adjacency;
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn poly(c: Vec<i128>) -> Poly {
    Poly::new(c.into_iter().map(BigInt::from).collect())
}

/// Reference `Q_n` / `P_n` as functions of k, coefficients by power of `μ`.
pub fn q_reference(n: usize, k: i128) -> Poly {
    poly(match n {
        1 => vec![0, 1],
        2 => vec![4 - 2 * k, 0, 1],
        3 => vec![0, 4 - 3 * k, 0, 1],
        4 => vec![6 - 6 * k + 2 * k * k, 0, 5 - 4 * k, 0, 1],
        5 => vec![0, 6 - 11 * k + 5 * k * k, 0, 6 - 5 * k, 0, 1],
        6 => vec![4 - 6 * k + 6 * k * k - 2 * k.pow(3), 0, 10 - 20 * k + 9 * k * k, 0, 7 - 6 * k, 0, 1],
        _ => unreachable!(),
    })
}

pub fn p_reference(n: usize, k: i128) -> Poly {
    let k2 = k * k;
    let k3 = k2 * k;
    let k4 = k3 * k;
    let k5 = k4 * k;
    poly(match n {
        1 => vec![4 - 4 * k, 0, 1],
        2 => vec![0, 0, 4 - 4 * k, 0, 1],
        3 => vec![-8 * (-2 + 4 * k - 3 * k2 + k3), 0, 16 - 24 * k + 13 * k2, 0, 4 - 6 * k, 0, 1],
        4 => vec![0, 0, 12 * (3 - 7 * k + 6 * k2 - 2 * k3), 0, 25 - 44 * k + 24 * k2, 0, 6 - 8 * k, 0, 1],
        5 => vec![
            16 - 48 * k + 76 * k2 - 68 * k3 + 36 * k4 - 8 * k5,
            0,
            48 - 152 * k + 205 * k2 - 146 * k3 + 41 * k4,
            0,
            52 - 156 * k + 174 * k2 - 66 * k3,
            0,
            28 - 66 * k + 39 * k2,
            0,
            8 - 10 * k,
            0,
            1,
        ],
        6 => vec![
            0,
            0,
            -12 * ((k - 1).pow(3) * (3 - 7 * k + 5 * k2)),
            0,
            100 - 428 * k + 704 * k2 - 524 * k3 + 149 * k4,
            0,
            100 - 324 * k + 358 * k2 - 136 * k3,
            0,
            45 - 100 * k + 58 * k2,
            0,
            10 - 12 * k,
            0,
            1,
        ],
        _ => unreachable!(),
    })
}

/// Ihara–Bass: `(1 - u²)^(|E| - |V|) det(I - uA + u²(D - I))`, with the
/// determinant evaluated at integer points by Bareiss and interpolated.
pub type P = Vec<BigInt>;

pub fn trim(mut p: P) -> P {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

pub fn mul(a: &P, b: &P) -> P {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn from_i64(c: &[i64]) -> P {
    c.iter().map(|&v| BigInt::from(v)).collect()
}

/// Lagrange interpolation through `(x_i, y_i)`, exact.
pub fn interpolate(points: &[(i64, BigInt)]) -> P {
    let n = points.len();
    let mut acc = vec![Rational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * Rational::from_integer(BigInt::from(*xj));
            }
            basis = next;
            denom *= Rational::from_integer(BigInt::from(xi - xj));
        }
        let scale = Rational::from_integer(yi.clone()) / denom;
        for (d, c) in basis.iter().enumerate() {
            acc[d] += c * &scale;
        }
    }
    trim(acc.into_iter().map(|c| {
        assert!(c.is_integer());
        c.to_integer()
    }).collect())
}

/// `det(I - u A + u² (D - I))` as a polynomial in `u`.
pub fn bass_determinant(g: &Graph) -> P {
    let a = adjacency(g);
    let nv = g.vertex_count();
    let points: Vec<(i64, BigInt)> = (0..=2 * nv as i64)
        .map(|u| {
            let m = IntMatrix::from_fn(nv, |i, j| {
                let mut v = -BigInt::from(u) * a.get(i, j);
                if i == j {
                    v += BigInt::one() + BigInt::from(u * u) * BigInt::from(g.degree(i) as i64 - 1);
                }
                v
            });
            (u, m.det_bareiss())
        })
        .collect();
    interpolate(&points)
}

pub fn ihara_bass(g: &Graph) -> P {
    let excess = g.edge_count() as i64 - g.vertex_count() as i64;
    assert!(excess >= 0);
    let factor = (0..excess).fold(from_i64(&[1]), |acc, _| mul(&acc, &from_i64(&[1, 0, -1])));
    mul(&factor, &bass_determinant(g))
}

