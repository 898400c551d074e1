//! Spectral lift of adjacency eigenvalues to eigenvalues of `S(U^n)`.
//!
//! Every term of the structure formula maps to a 2x2 polynomial matrix:
//! `S(U)^j -> K_μ^j`, `J S(U)^j -> σ_X K_μ^j`, `^T(S(U)^j) -> σ_X K_μ^j σ_X`
//! and `J ^T(S(U)^j) -> K_μ^j σ_X`, with `K_μ = [[0, -1], [k-1, μ]]`. An
//! adjacency eigenvalue `μ` (other than `±k`) lifts to the roots of
//! `λ² - tr F_n(μ) λ + det F_n(μ)`.

mod lift;
mod poly;

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::exact::Rational;
use crate::structure::{self, StructureError, StructureFormula};

pub use lift::{
    adjacency_spectrum, lift_eigenvalue, lift_verify, nondiag_from_spectrum, nondiag_predict, recognize_eigenvalue,
    ExactEigenvalue, FlaggedEigenvalue, LiftEntry, LiftReport, LiftRoot, NondiagReport, SpectralError,
    SpectrumEntry, DEFAULT_TOL,
};
pub use poly::{big_to_json, Poly, PolyMat2};

/// `K_μ = [[0, -1], [k-1, μ]]`.
pub fn k_mu(k: u64) -> PolyMat2 {
    PolyMat2([[Poly::zero(), Poly::constant(-1)], [Poly::constant(k - 1), Poly::var()]])
}

/// `F_n(K_μ; σ_X)` for an explicit coefficient set.
pub fn f_from_formula(f: &StructureFormula) -> PolyMat2 {
    let k = k_mu(f.k());
    let sigma = PolyMat2::swap();
    let mut out = PolyMat2::zero();
    for t in f.terms() {
        let kj = k.pow(t.index.unsigned_abs() as usize);
        let m = match (t.index < 0, t.flipped) {
            (false, false) => kj,
            (false, true) => sigma.mul(&kj),
            (true, false) => kj.conj_swap(),
            (true, true) => kj.mul(&sigma),
        };
        out = out.add(&m);
    }
    out
}

pub fn f_n_matrix(k: u64, n: usize) -> Result<PolyMat2, StructureError> {
    Ok(f_from_formula(&structure::coefficients(k, n)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceDetDisc {
    pub trace: Poly,
    pub det: Poly,
    /// `trace² - 4 det`.
    pub disc: Poly,
}

impl TraceDetDisc {
    pub fn of(m: &PolyMat2) -> Self {
        let trace = m.trace();
        let det = m.det();
        let disc = &(&trace * &trace) - &det.scale(&BigInt::from(4));
        TraceDetDisc { trace, det, disc }
    }
}

pub fn trace_det_disc(k: u64, n: usize) -> Result<TraceDetDisc, StructureError> {
    Ok(TraceDetDisc::of(&f_n_matrix(k, n)?))
}

/// `Q_n = tr F_n(μ) - 2x` and `P_n = D_n(μ) + 4y²`, stored as the
/// `μ`-polynomial plus the single `x` / `y²` coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixPolys {
    pub k: u64,
    pub n: usize,
    pub q_mu: Poly,
    pub q_x: i64,
    pub p_mu: Poly,
    pub p_y2: i64,
}

impl AppendixPolys {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "n": self.n,
            "Q": { "mu": self.q_mu, "x": self.q_x },
            "P": { "mu": self.p_mu, "y2": self.p_y2 },
        })
    }

    pub fn q_text(&self) -> String {
        format!("{} - 2x", self.q_mu)
    }

    pub fn p_text(&self) -> String {
        format!("{} + 4y^2", self.p_mu)
    }
}

pub fn appendix_polys(k: u64, n: usize) -> Result<AppendixPolys, StructureError> {
    let tdd = trace_det_disc(k, n)?;
    Ok(AppendixPolys { k, n, q_mu: tdd.trace, q_x: -2, p_mu: tdd.disc, p_y2: 4 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    RealPair,
    ComplexPair,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::RealPair => "real_pair",
            Branch::ComplexPair => "complex_pair",
        }
    }
}

/// One eigenvalue `λ = x ± iy` of `F_n(μ)`; `y >= 0`, conjugates implied.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvePoint {
    pub mu: f64,
    pub x: f64,
    pub y: f64,
    pub branch: Branch,
}

fn rat_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Curve points at `count` evenly spaced `μ` in `[mu_min, mu_max]`.
///
/// The sample points are the exact binary values of the inputs and their
/// rational interpolants, so the branch decision uses the exact sign of
/// `D_n(μ)`. A negative discriminant yields one complex point, a zero one
/// double real root, a positive one two real points (larger first).
pub fn curve_samples(
    k: u64,
    n: usize,
    mu_min: f64,
    mu_max: f64,
    count: usize,
) -> Result<Vec<CurvePoint>, SpectralError> {
    if count < 2 {
        return Err(SpectralError::TooFewSamples(count));
    }
    let lo = Rational::from_float(mu_min).ok_or(SpectralError::NonFinite(mu_min))?;
    let hi = Rational::from_float(mu_max).ok_or(SpectralError::NonFinite(mu_max))?;
    let tdd = trace_det_disc(k, n)?;
    let steps = Rational::from_integer(BigInt::from(count - 1));
    let mut out = Vec::with_capacity(2 * count);
    for i in 0..count {
        let mu = &lo + (&hi - &lo) * Rational::from_integer(BigInt::from(i)) / &steps;
        let tr = tdd.trace.eval_rational(&mu);
        let disc = tdd.disc.eval_rational(&mu);
        let (muf, half_tr, d) = (rat_to_f64(&mu), rat_to_f64(&tr) / 2.0, rat_to_f64(&disc));
        if disc.is_negative() {
            out.push(CurvePoint { mu: muf, x: half_tr, y: (-d).sqrt() / 2.0, branch: Branch::ComplexPair });
        } else if disc.is_zero() {
            out.push(CurvePoint { mu: muf, x: half_tr, y: 0.0, branch: Branch::RealPair });
        } else {
            let h = d.sqrt() / 2.0;
            for x in [half_tr + h, half_tr - h] {
                out.push(CurvePoint { mu: muf, x, y: 0.0, branch: Branch::RealPair });
            }
        }
    }
    Ok(out)
}

/// CSV with header `mu,x,y,branch`.
pub fn curves_to_csv(points: &[CurvePoint]) -> String {
    let mut out = String::from("mu,x,y,branch\n");
    for p in points {
        writeln!(out, "{},{},{},{}", p.mu, p.x, p.y, p.branch.name()).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn cayley_hamilton() {
        for k in [3, 4, 12, 101] {
            let km = k_mu(k);
            let rhs = km.scale(&Poly::var()).add(&PolyMat2::scalar(Poly::constant(-(k as i64 - 1))));
            assert_eq!(km.pow(2), rhs);
        }
    }

    #[test]
    fn swap_conjugation_preserves_trace() {
        let km = k_mu(7);
        for j in 0..8 {
            let kj = km.pow(j);
            assert_eq!(kj.conj_swap().trace(), kj.trace());
            assert_eq!(kj.conj_swap().det(), kj.det());
        }
    }

    #[test]
    fn first_powers() {
        for k in [3u64, 5, 12] {
            let ki = k as i64;
            assert_eq!(f_n_matrix(k, 1).unwrap(), k_mu(k));
            let t = trace_det_disc(k, 1).unwrap();
            assert_eq!(t.trace, p(&[0, 1]));
            assert_eq!(t.det, p(&[ki - 1]));
            assert_eq!(t.disc, p(&[-4 * (ki - 1), 0, 1]));
            let f2 = f_n_matrix(k, 2).unwrap();
            assert_eq!(f2, PolyMat2::identity().add(&k_mu(k).pow(2)));
            assert_eq!(f2.trace(), p(&[4 - 2 * ki, 0, 1]));
            let f3 = f_n_matrix(k, 3).unwrap();
            assert_eq!(f3, k_mu(k).pow(3).add(&k_mu(k).conj_swap()));
            assert_eq!(f3.trace(), p(&[0, 4 - 3 * ki, 0, 1]));
        }
        assert_eq!(trace_det_disc(12, 3).unwrap().trace, p(&[0, -32, 0, 1]));
    }

    #[test]
    fn appendix_encoding() {
        let a = appendix_polys(12, 1).unwrap();
        assert_eq!(a.p_mu, p(&[-44, 0, 1]));
        assert_eq!(a.p_text(), "μ^2 - 44 + 4y^2");
        assert_eq!(a.q_text(), "μ - 2x");
        assert_eq!(appendix_polys(12, 6).unwrap().q_mu.coeff(0), BigInt::from(-2660));
        assert_eq!(
            serde_json::to_string(&a.to_json()).unwrap(),
            r#"{"P":{"mu":[-44,0,1],"y2":4},"Q":{"mu":[0,1],"x":-2},"k":12,"n":1}"#
        );
    }

    #[test]
    fn curve_regimes() {
        let pts = curve_samples(5, 1, 0.0, 5.0, 2).unwrap();
        assert_eq!(pts[0], CurvePoint { mu: 0.0, x: 0.0, y: 2.0, branch: Branch::ComplexPair });
        assert_eq!((pts[1].x, pts[2].x), (4.0, 1.0));
        assert!(pts[1..].iter().all(|q| q.branch == Branch::RealPair && q.y == 0.0));
        let tdd = trace_det_disc(12, 4).unwrap();
        for q in curve_samples(12, 4, -8.0, 8.0, 41).unwrap() {
            let d = tdd.disc.eval_f64(q.mu);
            assert_eq!(q.branch == Branch::ComplexPair, d < 0.0, "μ = {}", q.mu);
            if q.branch == Branch::ComplexPair {
                assert!((4.0 * q.y * q.y + d).abs() <= 1e-9 * d.abs().max(1.0));
                assert!((2.0 * q.x - tdd.trace.eval_f64(q.mu)).abs() < 1e-9);
            }
        }
        assert!(matches!(curve_samples(12, 4, 0.0, 1.0, 1), Err(SpectralError::TooFewSamples(1))));
    }

    #[test]
    fn csv_layout() {
        let csv = curves_to_csv(&curve_samples(5, 1, 0.0, 5.0, 2).unwrap());
        assert_eq!(csv, "mu,x,y,branch\n0,0,2,complex_pair\n5,4,0,real_pair\n5,1,0,real_pair\n");
    }
}
