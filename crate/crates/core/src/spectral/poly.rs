//! Integer polynomials in one indeterminate (`μ` or `λ`), and 2x2
//! matrices over them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::exact::{ExtScalar, Rational};

/// Coefficients constant term first, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::new(vec![c.into()])
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Poly::from_i64(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    pub fn eval_ext(&self, x: &ExtScalar) -> ExtScalar {
        let r = x.radicand();
        self.coeffs.iter().rev().fold(ExtScalar::zero(r), |acc, c| {
            &(&acc * x) + &ExtScalar::from_rational(Rational::from_integer(c.clone()), r)
        })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + big_to_f64(c))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::zero(), |acc, c| acc * z + big_to_f64(c))
    }

    /// `Σ |c_i| r^i`: the natural scale for a residual `|p(z)|` at `|z| = r`.
    pub fn abs_weight(&self, r: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * r + big_to_f64(c).abs())
    }

    /// Quotient and remainder by a monic divisor; exact over the integers.
    pub fn div_rem_monic(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("divisor is nonzero");
        assert!(d.coeffs[dd].is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.div_rem_monic(self).1.is_zero()
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&mono);
        }
        out
    }
}

pub(crate) fn big_to_f64(v: &BigInt) -> f64 {
    v.to_f64().unwrap_or(if v.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

/// JSON number carrying the exact digits of `v`.
pub fn big_to_json(v: &BigInt) -> serde_json::Number {
    v.to_string().parse().expect("integer literal is a valid JSON number")
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&big_to_json(c))?;
        }
        seq.end()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("μ"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// 2x2 matrix of polynomials, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMat2(pub [[Poly; 2]; 2]);

impl PolyMat2 {
    pub fn zero() -> Self {
        PolyMat2([[Poly::zero(), Poly::zero()], [Poly::zero(), Poly::zero()]])
    }

    pub fn identity() -> Self {
        PolyMat2::scalar(Poly::one())
    }

    pub fn scalar(p: Poly) -> Self {
        PolyMat2([[p.clone(), Poly::zero()], [Poly::zero(), p]])
    }

    /// `σ_X = [[0, 1], [1, 0]]`.
    pub fn swap() -> Self {
        PolyMat2([[Poly::zero(), Poly::one()], [Poly::one(), Poly::zero()]])
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.0[i][j]
    }

    pub fn add(&self, o: &Self) -> Self {
        let m = &self.0;
        let n = &o.0;
        PolyMat2([[&m[0][0] + &n[0][0], &m[0][1] + &n[0][1]], [&m[1][0] + &n[1][0], &m[1][1] + &n[1][1]]])
    }

    pub fn mul(&self, o: &Self) -> Self {
        let m = &self.0;
        let n = &o.0;
        let e = |i: usize, j: usize| &(&m[i][0] * &n[0][j]) + &(&m[i][1] * &n[1][j]);
        PolyMat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn scale(&self, p: &Poly) -> Self {
        let m = &self.0;
        PolyMat2([[p * &m[0][0], p * &m[0][1]], [p * &m[1][0], p * &m[1][1]]])
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(PolyMat2::identity(), |acc, _| acc.mul(self))
    }

    /// `σ_X M σ_X`: swaps both rows and columns.
    pub fn conj_swap(&self) -> Self {
        let m = &self.0;
        PolyMat2([[m[1][1].clone(), m[1][0].clone()], [m[0][1].clone(), m[0][0].clone()]])
    }

    pub fn trace(&self) -> Poly {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn det(&self) -> Poly {
        let m = &self.0;
        &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
    }

    pub fn eval_ext(&self, x: &ExtScalar) -> [[ExtScalar; 2]; 2] {
        let e = |i: usize, j: usize| self.0[i][j].eval_ext(x);
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    }

    pub fn eval_f64(&self, x: f64) -> [[f64; 2]; 2] {
        let e = |i: usize, j: usize| self.0[i][j].eval_f64(x);
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    }
}
