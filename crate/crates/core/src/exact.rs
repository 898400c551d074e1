//! Exact scalars: arbitrary-precision rationals and the quadratic field
//! `Q(sqrt(r))` used by the discriminant walk.
//!
//! Rationals come from `num-rational` (always reduced, positive denominator).
//! [`ExtScalar`] adds a single square-root adjoin with a radicand fixed per
//! walk instance, plus exact sign determination.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use num_rational::BigRational as Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("radicand mismatch: {0} vs {1}")]
    RadicandMismatch(u64, u64),
    #[error("radicand must be positive")]
    ZeroRadicand,
}

/// Arithmetic operation selector for [`ExtScalar::apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// `rat + irr * sqrt(radicand)` with rational parts.
///
/// When the radicand is a perfect square the irrational part is folded into
/// `rat`, so `irr == 0` and the value is an ordinary rational.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtScalar {
    rat: Rational,
    irr: Rational,
    radicand: u64,
    // sqrt(radicand) when it is a perfect square
    root: Option<u64>,
}

fn exact_root(radicand: u64) -> Option<u64> {
    let s = radicand.sqrt();
    (s * s == radicand).then_some(s)
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

impl ExtScalar {
    pub fn new(rat: Rational, irr: Rational, radicand: u64) -> Result<Self, ExactError> {
        if radicand == 0 {
            return Err(ExactError::ZeroRadicand);
        }
        let root = exact_root(radicand);
        Ok(Self::normalized(rat, irr, radicand, root))
    }

    fn normalized(rat: Rational, irr: Rational, radicand: u64, root: Option<u64>) -> Self {
        match root {
            Some(s) if !irr.is_zero() => {
                let rat = rat + irr * Rational::from_integer(BigInt::from(s));
                ExtScalar { rat, irr: Rational::zero(), radicand, root }
            }
            _ => ExtScalar { rat, irr, radicand, root },
        }
    }

    pub fn zero(radicand: u64) -> Self {
        Self::from_rational(Rational::zero(), radicand)
    }

    pub fn one(radicand: u64) -> Self {
        Self::from_rational(Rational::one(), radicand)
    }

    pub fn from_rational(rat: Rational, radicand: u64) -> Self {
        assert!(radicand > 0, "radicand must be positive");
        ExtScalar { rat, irr: Rational::zero(), radicand, root: exact_root(radicand) }
    }

    /// `q * sqrt(radicand)`.
    pub fn surd(q: Rational, radicand: u64) -> Self {
        assert!(radicand > 0, "radicand must be positive");
        Self::normalized(Rational::zero(), q, radicand, exact_root(radicand))
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn irr(&self) -> &Rational {
        &self.irr
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    fn check(&self, other: &Self) -> Result<(), ExactError> {
        if self.radicand == other.radicand {
            Ok(())
        } else {
            Err(ExactError::RadicandMismatch(self.radicand, other.radicand))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        Ok(ExtScalar {
            rat: &self.rat + &other.rat,
            irr: &self.irr + &other.irr,
            radicand: self.radicand,
            root: self.root,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        Ok(ExtScalar {
            rat: &self.rat - &other.rat,
            irr: &self.irr - &other.irr,
            radicand: self.radicand,
            root: self.root,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        let r = Rational::from_integer(BigInt::from(self.radicand));
        let rat = &self.rat * &other.rat + &self.irr * &other.irr * r;
        let irr = &self.rat * &other.irr + &self.irr * &other.rat;
        Ok(ExtScalar { rat, irr, radicand: self.radicand, root: self.root })
    }

    /// Dispatches one of the field operations. `Neg` ignores `other` apart
    /// from the radicand check.
    pub fn apply(&self, op: ExtOp, other: &Self) -> Result<Self, ExactError> {
        match op {
            ExtOp::Add => self.try_add(other),
            ExtOp::Sub => self.try_sub(other),
            ExtOp::Mul => self.try_mul(other),
            ExtOp::Neg => {
                self.check(other)?;
                Ok(-self)
            }
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        ExtScalar { rat: &self.rat * q, irr: &self.irr * q, radicand: self.radicand, root: self.root }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Exact sign in {-1, 0, 1}, no floating point involved.
    pub fn sign(&self) -> i8 {
        let a = sign_of(&self.rat);
        let b = sign_of(&self.irr);
        if b == 0 {
            return a;
        }
        if a == 0 || a == b {
            return b;
        }
        // opposite signs: compare rat^2 with irr^2 * radicand
        let lhs = &self.rat * &self.rat;
        let rhs = &self.irr * &self.irr * Rational::from_integer(BigInt::from(self.radicand));
        match lhs.cmp(&rhs) {
            Ordering::Greater => a,
            Ordering::Less => b,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.rat.to_f64().unwrap_or(f64::NAN);
        let i = self.irr.to_f64().unwrap_or(f64::NAN);
        r + i * (self.radicand as f64).sqrt()
    }
}

pub(crate) fn sign_of(q: &Rational) -> i8 {
    match q.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

impl fmt::Debug for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn surd_term(q: &Rational, radicand: u64) -> String {
    if q.is_one() {
        format!("sqrt({radicand})")
    } else if (-q).is_one() {
        format!("-sqrt({radicand})")
    } else {
        format!("{q}*sqrt({radicand})")
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irr.is_zero() {
            write!(f, "{}", self.rat)
        } else if self.rat.is_zero() {
            f.write_str(&surd_term(&self.irr, self.radicand))
        } else if self.irr.is_negative() {
            write!(f, "{} - {}", self.rat, surd_term(&-&self.irr, self.radicand))
        } else {
            write!(f, "{} + {}", self.rat, surd_term(&self.irr, self.radicand))
        }
    }
}

// Operator impls panic on a radicand mismatch; use the `try_*` methods when
// operands come from different walk instances.

impl<'a> Add<&'a ExtScalar> for &'a ExtScalar {
    type Output = ExtScalar;
    fn add(self, rhs: &'a ExtScalar) -> ExtScalar {
        self.try_add(rhs).expect("ExtScalar add")
    }
}

impl<'a> Sub<&'a ExtScalar> for &'a ExtScalar {
    type Output = ExtScalar;
    fn sub(self, rhs: &'a ExtScalar) -> ExtScalar {
        self.try_sub(rhs).expect("ExtScalar sub")
    }
}

impl<'a> Mul<&'a ExtScalar> for &'a ExtScalar {
    type Output = ExtScalar;
    fn mul(self, rhs: &'a ExtScalar) -> ExtScalar {
        self.try_mul(rhs).expect("ExtScalar mul")
    }
}

impl Add for ExtScalar {
    type Output = ExtScalar;
    fn add(self, rhs: ExtScalar) -> ExtScalar {
        &self + &rhs
    }
}

impl Sub for ExtScalar {
    type Output = ExtScalar;
    fn sub(self, rhs: ExtScalar) -> ExtScalar {
        &self - &rhs
    }
}

impl Mul for ExtScalar {
    type Output = ExtScalar;
    fn mul(self, rhs: ExtScalar) -> ExtScalar {
        &self * &rhs
    }
}

impl Neg for &ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        ExtScalar { rat: -&self.rat, irr: -&self.irr, radicand: self.radicand, root: self.root }
    }
}

impl Neg for ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        -&self
    }
}
