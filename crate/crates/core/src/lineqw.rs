//! The discriminant quantum walk on the integer line.
//!
//! Two chiralities `L`, `R` per site, real amplitudes in `Q(sqrt(k - 1))`,
//! and a coin that depends only on the side of the origin:
//!
//! ```text
//!   x >= 0:  [ d  -r ]      x < 0:  [ d   r ]      d = 2 sqrt(k-1) / k
//!            [ r   d ]              [ -r  d ]      r = 1 - 2/k
//! ```
//!
//! One step sends the `L` row of the coin at `x` to `x - 1` and the `R` row
//! to `x + 1`. The walk starts from `delta_0 |R>`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact::{ExtScalar, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("degree parameter k must be >= {min}, got {k}")]
    DegreeTooSmall { k: u64, min: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Chirality {
    L,
    R,
}

impl Chirality {
    pub fn index(self) -> usize {
        match self {
            Chirality::L => 0,
            Chirality::R => 1,
        }
    }
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chirality::L => "L",
            Chirality::R => "R",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoinSide {
    NonNegative,
    Negative,
}

impl CoinSide {
    pub fn of(x: i64) -> Self {
        if x >= 0 {
            CoinSide::NonNegative
        } else {
            CoinSide::Negative
        }
    }
}

/// A 2x2 coin with rows/columns ordered `(L, R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coin(pub [[ExtScalar; 2]; 2]);

impl Coin {
    pub fn det(&self) -> ExtScalar {
        let m = &self.0;
        &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
    }

    /// Row `row` of the coin applied to an `(L, R)` pair.
    pub fn apply_row(&self, row: usize, amp: &[ExtScalar; 2]) -> ExtScalar {
        &(&self.0[row][0] * &amp[0]) + &(&self.0[row][1] * &amp[1])
    }
}

fn check_k(k: u64, min: u64) -> Result<(), WalkError> {
    if k < min {
        Err(WalkError::DegreeTooSmall { k, min })
    } else {
        Ok(())
    }
}

pub fn coin(k: u64, side: CoinSide) -> Result<Coin, WalkError> {
    check_k(k, 2)?;
    let radicand = k - 1;
    let kq = BigInt::from(k);
    let diag = ExtScalar::surd(Rational::new(BigInt::from(2), kq.clone()), radicand);
    let refl = ExtScalar::from_rational(Rational::one() - Rational::new(BigInt::from(2), kq), radicand);
    let (upper, lower) = match side {
        CoinSide::NonNegative => (-&refl, refl),
        CoinSide::Negative => (refl.clone(), -&refl),
    };
    Ok(Coin([[diag.clone(), upper], [lower, diag]]))
}

/// `(a + b sqrt(k - 1)) / k^step` with integer parts; every amplitude of
/// the walk has this form since `k` times either coin is integral over
/// `Z[sqrt(k - 1)]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Scaled {
    a: BigInt,
    b: BigInt,
}

impl Scaled {
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn sign(&self, radicand: u64) -> i8 {
        let (sa, sb) = (int_sign(&self.a), int_sign(&self.b));
        if sb == 0 || sa == sb {
            return if sb == 0 { sa } else { sb };
        }
        if sa == 0 {
            return sb;
        }
        match (&self.a * &self.a).cmp(&(&self.b * &self.b * BigInt::from(radicand))) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    // (2 sqrt(m)) * self, with two_m = 2m
    fn diag(&self, two_m: &BigInt) -> Scaled {
        Scaled { a: &self.b * two_m, b: &self.a * 2 }
    }

    fn times(&self, c: &BigInt) -> Scaled {
        Scaled { a: &self.a * c, b: &self.b * c }
    }

    fn add(&mut self, other: &Scaled) {
        self.a += &other.a;
        self.b += &other.b;
    }
}

fn int_sign(x: &BigInt) -> i8 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Amplitudes after `step` applications of the walk, stored on the light
/// cone `[-step, step]` only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkState {
    k: u64,
    step: usize,
    // k^step
    scale: BigInt,
    cells: Vec<[Scaled; 2]>,
}

impl WalkState {
    pub fn initial(k: u64) -> Result<Self, WalkError> {
        check_k(k, 2)?;
        let one = Scaled { a: BigInt::one(), b: BigInt::zero() };
        Ok(WalkState { k, step: 0, scale: BigInt::one(), cells: vec![[Scaled::default(), one]] })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn step(&self) -> usize {
        self.step
    }

    fn to_ext(&self, s: &Scaled) -> ExtScalar {
        let q = |v: &BigInt| Rational::new(v.clone(), self.scale.clone());
        ExtScalar::new(q(&s.a), q(&s.b), self.k - 1).expect("radicand is positive")
    }

    /// Amplitude at `(x; chirality)`; zero outside the light cone.
    pub fn amplitude(&self, x: i64, c: Chirality) -> ExtScalar {
        match self.offset(x) {
            Some(i) => self.to_ext(&self.cells[i][c.index()]),
            None => ExtScalar::zero(self.k - 1),
        }
    }

    fn offset(&self, x: i64) -> Option<usize> {
        let i = x + self.step as i64;
        (0..self.cells.len() as i64).contains(&i).then_some(i as usize)
    }

    /// Sites `x` in `[-step, step]` paired with `(L, R)` amplitudes.
    pub fn sites(&self) -> impl Iterator<Item = (i64, [ExtScalar; 2])> + '_ {
        let n = self.step as i64;
        self.cells.iter().enumerate().map(move |(i, [l, r])| (i as i64 - n, [self.to_ext(l), self.to_ext(r)]))
    }

    /// `sum |phi(x; N)|^2`, exact.
    pub fn norm_squared(&self) -> ExtScalar {
        let m = BigInt::from(self.k - 1);
        let (mut a, mut b) = (BigInt::zero(), BigInt::zero());
        for s in self.cells.iter().flatten() {
            a += &s.a * &s.a + &s.b * &s.b * &m;
            b += &s.a * &s.b * 2;
        }
        let den = &self.scale * &self.scale;
        ExtScalar::new(Rational::new(a, den.clone()), Rational::new(b, den), self.k - 1).expect("radicand is positive")
    }

    /// One application of the walk operator.
    pub fn advance(&self) -> WalkState {
        let k = BigInt::from(self.k);
        let refl = &k - 2u32;
        let two_m = (&k - 1u32) * 2u32;
        let width = self.cells.len() + 2;
        let mut next = vec![[Scaled::default(), Scaled::default()]; width];
        let n = self.step as i64;
        for (i, [l, r]) in self.cells.iter().enumerate() {
            if l.is_zero() && r.is_zero() {
                continue;
            }
            // off-diagonal sign of the L row: -r for x >= 0, +r for x < 0
            let off = if i as i64 - n >= 0 { -&refl } else { refl.clone() };
            // old offset i = x + n; new offsets of x -/+ 1 are i and i + 2
            next[i][0].add(&l.diag(&two_m));
            next[i][0].add(&r.times(&off));
            next[i + 2][1].add(&l.times(&-&off));
            next[i + 2][1].add(&r.diag(&two_m));
        }
        WalkState { k: self.k, step: self.step + 1, scale: &self.scale * &k, cells: next }
    }
}

/// Iterates the walk from the initial state.
#[derive(Debug, Clone)]
pub struct DiscriminantWalk {
    state: WalkState,
}

impl DiscriminantWalk {
    pub fn new(k: u64) -> Result<Self, WalkError> {
        Ok(DiscriminantWalk { state: WalkState::initial(k)? })
    }

    pub fn state(&self) -> &WalkState {
        &self.state
    }

    pub fn advance(&mut self) -> &WalkState {
        self.state = self.state.advance();
        &self.state
    }
}

/// State after `n` steps. `k = 2` is accepted but degenerate (diagonal coin).
pub fn evolve(k: u64, n: usize) -> Result<WalkState, WalkError> {
    let mut walk = DiscriminantWalk::new(k)?;
    for _ in 0..n {
        walk.advance();
    }
    Ok(walk.state)
}

/// Phase of a real amplitude: `0` for positive, `pi` for negative, empty
/// for exactly zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    Zero,
    Pi,
    Empty,
}

impl Phase {
    pub fn of(amp: &ExtScalar) -> Phase {
        match amp.sign() {
            1 => Phase::Zero,
            -1 => Phase::Pi,
            _ => Phase::Empty,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Phase::Zero => '#',
            Phase::Empty => '.',
            Phase::Pi => 'o',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Phase::Zero => "0",
            Phase::Pi => "pi",
            Phase::Empty => "empty",
        }
    }
}

/// Phases of one walk state on `[-n, n]`, `(L, R)` per site.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseRow {
    pub n: usize,
    pub cells: Vec<[Phase; 2]>,
}

impl PhaseRow {
    pub fn get(&self, x: i64, c: Chirality) -> Phase {
        let i = x + self.n as i64;
        if i < 0 || i as usize >= self.cells.len() {
            Phase::Empty
        } else {
            self.cells[i as usize][c.index()]
        }
    }

    /// Cells with phase `0`, ordered by site then `L` before `R`.
    pub fn zero_cells(&self) -> Vec<(i64, Chirality)> {
        let n = self.n as i64;
        let mut out = Vec::new();
        for (i, pair) in self.cells.iter().enumerate() {
            for c in [Chirality::L, Chirality::R] {
                if pair[c.index()] == Phase::Zero {
                    out.push((i as i64 - n, c));
                }
            }
        }
        out
    }
}

pub fn phase(state: &WalkState) -> PhaseRow {
    let m = state.k - 1;
    let of = |s: &Scaled| match s.sign(m) {
        1 => Phase::Zero,
        -1 => Phase::Pi,
        _ => Phase::Empty,
    };
    let cells = state.cells.iter().map(|[l, r]| [of(l), of(r)]).collect();
    PhaseRow { n: state.step, cells }
}

/// Phase rows for steps `1..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseGrid {
    pub k: u64,
    pub rows: Vec<PhaseRow>,
}

pub fn pattern(k: u64, n_max: usize) -> Result<PhaseGrid, WalkError> {
    check_k(k, 3)?;
    let mut walk = DiscriminantWalk::new(k)?;
    let rows = (0..n_max).map(|_| phase(walk.advance())).collect();
    Ok(PhaseGrid { k, rows })
}

impl PhaseGrid {
    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    fn width_sites(&self) -> i64 {
        self.n_max() as i64
    }

    /// One line per step, `2 (2 n_max + 1)` characters: sites `-n_max..=n_max`
    /// left to right, `L` then `R` at each site. `#` = phase 0, `o` = pi,
    /// `.` = empty.
    pub fn to_ascii(&self) -> String {
        let w = self.width_sites();
        let mut out = String::with_capacity(self.rows.len() * (4 * w as usize + 3));
        for row in &self.rows {
            for x in -w..=w {
                out.push(row.get(x, Chirality::L).symbol());
                out.push(row.get(x, Chirality::R).symbol());
            }
            out.push('\n');
        }
        out
    }

    /// `n,x,chirality,phase` for every cell inside the light cone.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,x,chirality,phase\n");
        for row in &self.rows {
            let n = row.n as i64;
            for x in -n..=n {
                for c in [Chirality::L, Chirality::R] {
                    out.push_str(&format!("{},{},{},{}\n", row.n, x, c, row.get(x, c).name()));
                }
            }
        }
        out
    }

    /// Binary greymap (P5): same layout as [`Self::to_ascii`], black pixel
    /// for phase 0 and white otherwise.
    pub fn to_pgm(&self) -> Vec<u8> {
        let w = self.width_sites();
        let width = 2 * (2 * w as usize + 1);
        let mut out = format!("P5\n{} {}\n255\n", width, self.rows.len()).into_bytes();
        for row in &self.rows {
            for x in -w..=w {
                for c in [Chirality::L, Chirality::R] {
                    out.push(if row.get(x, c) == Phase::Zero { 0 } else { 255 });
                }
            }
        }
        out
    }
}
