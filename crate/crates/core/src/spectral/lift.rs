//! Numeric adjacency spectra lifted through `F_n` and checked against the
//! exact characteristic polynomial of `S(U^n)`.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use super::poly::{big_to_f64, Poly};
use super::{f_from_formula, TraceDetDisc};
use crate::exact::{ExtScalar, Rational};
use crate::graph::{analyze, Extent, Graph};
use crate::structure::{self, StructureError};
use crate::walkops::{self, WalkOpsError};

pub const DEFAULT_TOL: f64 = 1e-8;

// eigenvalues closer than this are treated as one
const CLUSTER_TOL: f64 = 1e-7;
// slack when matching a float to an integer candidate
const ROUND_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    WalkOps(#[from] WalkOpsError),
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("need at least 2 samples, got {0}")]
    TooFewSamples(usize),
    #[error("sample bound {0} is not finite")]
    NonFinite(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub mu: f64,
    pub multiplicity: usize,
}

/// Adjacency eigenvalues, ascending, with clustered multiplicities.
pub fn adjacency_spectrum(g: &Graph) -> Vec<SpectrumEntry> {
    let n = g.vertex_count();
    let a = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let mut vals: Vec<f64> = a.symmetric_eigen().eigenvalues.iter().copied().collect();
    vals.sort_by(f64::total_cmp);
    let mut out: Vec<(f64, usize)> = Vec::new();
    for v in vals {
        match out.last_mut() {
            Some((sum, m)) if (v - *sum / *m as f64).abs() <= CLUSTER_TOL * (1.0 + v.abs()) => {
                *sum += v;
                *m += 1;
            }
            _ => out.push((v, 1)),
        }
    }
    out.into_iter().map(|(sum, m)| SpectrumEntry { mu: sum / m as f64, multiplicity: m }).collect()
}

/// An adjacency eigenvalue identified exactly: an integer, or a root of an
/// integer quadratic `x² - sum x + product` dividing the characteristic
/// polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactEigenvalue {
    Integer(BigInt),
    Quadratic { sum: BigInt, product: BigInt, upper: bool },
}

impl ExactEigenvalue {
    pub fn to_ext(&self) -> ExtScalar {
        match self {
            ExactEigenvalue::Integer(m) => ExtScalar::from_rational(Rational::from_integer(m.clone()), 1),
            ExactEigenvalue::Quadratic { sum, product, upper } => {
                let disc = u64::try_from(sum * sum - BigInt::from(4) * product).expect("discriminant fits in u64");
                let (f, r) = square_part(disc);
                let half = Rational::new(BigInt::from(f), BigInt::from(2));
                let irr = if *upper { half } else { -half };
                let rat = Rational::new(sum.clone(), BigInt::from(2));
                ExtScalar::new(rat, irr, r).expect("positive radicand")
            }
        }
    }

    pub fn minimal_poly(&self) -> Poly {
        match self {
            ExactEigenvalue::Integer(m) => Poly::new(vec![-m, BigInt::one()]),
            ExactEigenvalue::Quadratic { sum, product, .. } => Poly::new(vec![product.clone(), -sum, BigInt::one()]),
        }
    }
}

/// `d = f² r` with `r` squarefree.
fn square_part(mut d: u64) -> (u64, u64) {
    let mut f = 1;
    let mut p = 2;
    while p * p <= d {
        while d % (p * p) == 0 {
            d /= p * p;
            f *= p;
        }
        p += 1;
    }
    (f, d)
}

fn near_integer(v: f64) -> Option<BigInt> {
    let r = v.round();
    ((v - r).abs() <= ROUND_TOL * (1.0 + v.abs())).then(|| BigInt::from(r as i64))
}

/// Tries to identify `mu` exactly, using the other eigenvalues as
/// conjugate candidates and `char_poly` (of the adjacency matrix) as the
/// exact witness.
pub fn recognize_eigenvalue(mu: f64, others: &[f64], char_poly: &Poly) -> Option<ExactEigenvalue> {
    if let Some(m) = near_integer(mu) {
        if char_poly.eval_rational(&Rational::from_integer(m.clone())).is_zero() {
            return Some(ExactEigenvalue::Integer(m));
        }
    }
    for &nu in others {
        if (nu - mu).abs() <= CLUSTER_TOL * (1.0 + mu.abs()) {
            continue;
        }
        let (Some(sum), Some(product)) = (near_integer(mu + nu), near_integer(mu * nu)) else {
            continue;
        };
        let disc = &sum * &sum - BigInt::from(4) * &product;
        if !disc.is_positive() || disc.sqrt().pow(2) == disc || u64::try_from(&disc).is_err() {
            continue;
        }
        let cand = ExactEigenvalue::Quadratic { upper: 2.0 * mu > big_to_f64(&sum), sum, product };
        if cand.minimal_poly().divides(char_poly) {
            return Some(cand);
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LiftRoot {
    pub re: f64,
    pub im: f64,
    /// `|p(λ)| / Σ|c_i| max(1, |λ|)^i` with `p` the characteristic
    /// polynomial of `S(U^n)`.
    pub residual: f64,
}

/// Both roots of `λ² - tr F_n(μ) λ + det F_n(μ)` with their residuals.
pub fn lift_eigenvalue(tdd: &TraceDetDisc, char_s: &Poly, mu: f64) -> Vec<LiftRoot> {
    let tr = tdd.trace.eval_f64(mu);
    let disc = Complex64::new(tdd.disc.eval_f64(mu), 0.0).sqrt();
    [(tr + disc) / 2.0, (tr - disc) / 2.0]
        .into_iter()
        .map(|z| {
            let scale = char_s.abs_weight(z.norm().max(1.0));
            LiftRoot { re: z.re, im: z.im, residual: char_s.eval_complex(z).norm() / scale }
        })
        .collect()
}

fn conj(x: &ExtScalar) -> ExtScalar {
    ExtScalar::new(x.rat().clone(), -x.irr().clone(), x.radicand()).expect("radicand is positive")
}

fn ext_integer(x: &ExtScalar) -> Option<BigInt> {
    (x.irr().is_zero() && x.rat().is_integer()).then(|| x.rat().to_integer())
}

/// Exact check that the lifted quadratic (times its conjugate, for a
/// quadratic-irrational `μ`) divides `char_s`.
fn exact_lift_divides(tdd: &TraceDetDisc, char_s: &Poly, mu: &ExactEigenvalue) -> bool {
    let x = mu.to_ext();
    let t = tdd.trace.eval_ext(&x);
    let d = tdd.det.eval_ext(&x);
    let divisor = match mu {
        ExactEigenvalue::Integer(_) => match (ext_integer(&t), ext_integer(&d)) {
            (Some(t), Some(d)) => Poly::new(vec![d, -t, BigInt::one()]),
            _ => return false,
        },
        ExactEigenvalue::Quadratic { .. } => {
            let (tc, dc) = (conj(&t), conj(&d));
            let coeffs = [&d * &dc, -(&(&t * &dc) + &(&tc * &d)), &(&d + &dc) + &(&t * &tc), -(&t + &tc)];
            let ints: Option<Vec<BigInt>> = coeffs.iter().map(ext_integer).collect();
            match ints {
                Some(mut c) => {
                    c.push(BigInt::one());
                    Poly::new(c)
                }
                None => return false,
            }
        }
    };
    divisor.divides(char_s)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LiftEntry {
    pub mu: f64,
    pub multiplicity: usize,
    /// Exact form when recognized, e.g. `3` or `1/2 + 1/2*sqrt(5)`.
    pub exact: Option<String>,
    /// `μ = ±k`: the lift does not apply.
    pub excluded: bool,
    pub trace: f64,
    pub det: f64,
    pub disc: f64,
    pub roots: Vec<LiftRoot>,
    /// Exact divisibility of `char(S(U^n))` by the lifted factor; `None`
    /// when `μ` was not recognized.
    pub exact_divides: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LiftReport {
    pub pass: bool,
    pub n: usize,
    pub k: usize,
    pub tol: f64,
    pub girth: Extent,
    pub max_residual: f64,
    pub char_degree: usize,
    pub entries: Vec<LiftEntry>,
}

fn check_scope(g: &Graph, n: usize, tol: f64) -> Result<(usize, Extent), SpectralError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(SpectralError::InvalidTolerance(tol));
    }
    let report = analyze(g);
    let k = report.regularity_k.ok_or(StructureError::NotRegular)?;
    if k < 3 {
        return Err(StructureError::DegreeTooSmall(k as u64).into());
    }
    if n == 0 {
        return Err(StructureError::ZeroPower.into());
    }
    let need = 2 * (n - 1);
    if !report.girth.exceeds(need) {
        return Err(StructureError::GirthTooSmall { girth: report.girth, n, need }.into());
    }
    Ok((k, report.girth))
}

fn is_trivial(mu: f64, k: usize) -> bool {
    (mu.abs() - k as f64).abs() <= ROUND_TOL * k as f64
}

struct Recognized {
    entry: SpectrumEntry,
    exact: Option<ExactEigenvalue>,
}

fn recognized_spectrum(g: &Graph) -> Vec<Recognized> {
    let spectrum = adjacency_spectrum(g);
    let char_a = Poly::new(walkops::adjacency(g).charpoly());
    let values: Vec<f64> = spectrum.iter().map(|e| e.mu).collect();
    spectrum
        .iter()
        .map(|&entry| Recognized { entry, exact: recognize_eigenvalue(entry.mu, &values, &char_a) })
        .collect()
}

/// Lifts every non-trivial adjacency eigenvalue and evaluates the exact
/// characteristic polynomial of `S(U^n)` at the predicted roots.
///
/// Passes iff every residual is `<= tol` and no exact divisibility check
/// fails. Multiplicities are not compared.
pub fn lift_verify(g: &Graph, n: usize, tol: f64) -> Result<LiftReport, SpectralError> {
    let (k, girth) = check_scope(g, n, tol)?;
    let tdd = TraceDetDisc::of(&f_from_formula(&structure::coefficients(k as u64, n)?));
    let char_s = Poly::new(walkops::support_of_power(g, n)?.charpoly());
    let mut entries = Vec::new();
    for r in recognized_spectrum(g) {
        let mu = r.entry.mu;
        let excluded = is_trivial(mu, k);
        let roots = if excluded { Vec::new() } else { lift_eigenvalue(&tdd, &char_s, mu) };
        let exact_divides = match (&r.exact, excluded) {
            (Some(x), false) => Some(exact_lift_divides(&tdd, &char_s, x)),
            _ => None,
        };
        entries.push(LiftEntry {
            mu,
            multiplicity: r.entry.multiplicity,
            exact: r.exact.as_ref().map(|x| x.to_ext().to_string()),
            excluded,
            trace: tdd.trace.eval_f64(mu),
            det: tdd.det.eval_f64(mu),
            disc: tdd.disc.eval_f64(mu),
            roots,
            exact_divides,
        });
    }
    let max_residual = entries.iter().flat_map(|e| e.roots.iter().map(|r| r.residual)).fold(0.0, f64::max);
    let pass = max_residual <= tol && entries.iter().all(|e| e.exact_divides != Some(false));
    Ok(LiftReport {
        pass,
        n,
        k,
        tol,
        girth,
        max_residual,
        char_degree: char_s.degree().unwrap_or(0),
        entries,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FlaggedEigenvalue {
    pub mu: f64,
    pub exact: Option<String>,
    /// `D_n(μ)` (zero when decided exactly).
    pub disc: f64,
    /// `"exact"` or `"numeric"`.
    pub method: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NondiagReport {
    pub n: usize,
    pub k: usize,
    pub tol: f64,
    pub flagged: Vec<FlaggedEigenvalue>,
    /// No flags: `S(U^n)` is predicted diagonalizable.
    pub diagonalizable: bool,
}

/// Flags `μ` with `D_n(μ) = 0` where `F_n(μ)` is not a scalar matrix.
///
/// Exactly recognized eigenvalues are decided in exact arithmetic; the
/// rest use `|D_n(μ)| <= tol * Σ|d_i||μ|^i` and an off-scalar test at the
/// same relative tolerance.
pub fn nondiag_from_spectrum(
    k: u64,
    n: usize,
    spectrum: &[(f64, Option<ExactEigenvalue>)],
    tol: f64,
) -> Result<Vec<FlaggedEigenvalue>, SpectralError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(SpectralError::InvalidTolerance(tol));
    }
    let f = f_from_formula(&structure::coefficients(k, n)?);
    let tdd = TraceDetDisc::of(&f);
    let mut out = Vec::new();
    for (mu, exact) in spectrum {
        let mu = *mu;
        if is_trivial(mu, k as usize) {
            continue;
        }
        match exact {
            Some(x) => {
                let v = x.to_ext();
                if !tdd.disc.eval_ext(&v).is_zero() {
                    continue;
                }
                let m = f.eval_ext(&v);
                let scalar = m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1];
                if !scalar {
                    out.push(FlaggedEigenvalue { mu, exact: Some(v.to_string()), disc: 0.0, method: "exact" });
                }
            }
            None => {
                let d = tdd.disc.eval_f64(mu);
                if d.abs() > tol * tdd.disc.abs_weight(mu.abs()) {
                    continue;
                }
                let m = f.eval_f64(mu);
                let scale = 1.0 + m.iter().flatten().fold(0.0f64, |a, v| a.max(v.abs()));
                let off = m[0][1].abs().max(m[1][0].abs()).max((m[0][0] - m[1][1]).abs());
                if off > tol * scale {
                    out.push(FlaggedEigenvalue { mu, exact: None, disc: d, method: "numeric" });
                }
            }
        }
    }
    Ok(out)
}

/// Predicts non-diagonalizability of `S(U^n)` from the adjacency spectrum.
pub fn nondiag_predict(g: &Graph, n: usize, tol: f64) -> Result<NondiagReport, SpectralError> {
    let (k, _) = check_scope(g, n, tol)?;
    let spectrum: Vec<(f64, Option<ExactEigenvalue>)> =
        recognized_spectrum(g).into_iter().map(|r| (r.entry.mu, r.exact)).collect();
    let flagged = nondiag_from_spectrum(k as u64, n, &spectrum, tol)?;
    Ok(NondiagReport { n, k, tol, diagonalizable: flagged.is_empty(), flagged })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin;
    use crate::spectral::trace_det_disc;

    fn mus(g: &Graph) -> Vec<(f64, usize)> {
        adjacency_spectrum(g).iter().map(|e| ((e.mu * 1e6).round() / 1e6, e.multiplicity)).collect()
    }

    #[test]
    fn known_spectra() {
        let p = builtin("petersen").unwrap();
        assert_eq!(mus(&p), vec![(-2.0, 4), (1.0, 5), (3.0, 1)]);
        let tc = builtin("tutte_coxeter").unwrap();
        assert_eq!(mus(&tc), vec![(-3.0, 1), (-2.0, 9), (0.0, 10), (2.0, 9), (3.0, 1)]);
        let h = builtin("heawood").unwrap();
        let r2 = (2f64.sqrt() * 1e6).round() / 1e6;
        assert_eq!(mus(&h), vec![(-3.0, 1), (-r2, 6), (r2, 6), (3.0, 1)]);
    }

    #[test]
    fn recognition() {
        let h = builtin("heawood").unwrap();
        let char_a = Poly::new(walkops::adjacency(&h).charpoly());
        let vals: Vec<f64> = adjacency_spectrum(&h).iter().map(|e| e.mu).collect();
        let x = recognize_eigenvalue(2f64.sqrt(), &vals, &char_a).unwrap();
        assert_eq!(x, ExactEigenvalue::Quadratic { sum: 0.into(), product: (-2).into(), upper: true });
        assert_eq!(x.to_ext(), ExtScalar::surd(Rational::one(), 2));
        assert_eq!(recognize_eigenvalue(3.0, &vals, &char_a), Some(ExactEigenvalue::Integer(3.into())));
        assert_eq!(recognize_eigenvalue(1.0, &vals, &char_a), None);
    }

    #[test]
    fn petersen_lifts() {
        let g = builtin("petersen").unwrap();
        for n in 1..=3 {
            let r = lift_verify(&g, n, DEFAULT_TOL).unwrap();
            assert!(r.pass, "n = {n}: {r:?}");
            assert_eq!(r.char_degree, 30);
            let lifted: usize = r.entries.iter().filter(|e| !e.excluded).map(|e| 2 * e.multiplicity).sum();
            assert_eq!(lifted, 18);
            assert!(r.entries.iter().all(|e| e.excluded || e.exact_divides == Some(true)));
        }
        let r = lift_verify(&g, 1, DEFAULT_TOL).unwrap();
        for e in r.entries.iter().filter(|e| !e.excluded) {
            assert!((e.trace - e.mu).abs() < 1e-12 && (e.det - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn perturbed_eigenvalue_fails() {
        let g = builtin("petersen").unwrap();
        let tdd = trace_det_disc(3, 3).unwrap();
        let char_s = Poly::new(walkops::support_of_power(&g, 3).unwrap().charpoly());
        for mu in [1.0, -2.0] {
            assert!(lift_eigenvalue(&tdd, &char_s, mu).iter().all(|r| r.residual < 1e-12));
            let off = lift_eigenvalue(&tdd, &char_s, mu + 0.1);
            assert!(off.iter().any(|r| r.residual > DEFAULT_TOL), "{off:?}");
        }
    }

    #[test]
    fn trivial_eigenvalue_gives_row_sum() {
        // μ = k lifts the constant vector: one root is the row sum of S(U^n)
        for (name, n_max) in [("petersen", 3), ("heawood", 3), ("K4", 2)] {
            let g = builtin(name).unwrap();
            let k = g.regular_degree().unwrap();
            for n in 1..=n_max {
                let s = walkops::support_of_power(&g, n).unwrap();
                let row: BigInt = s.row(0).iter().sum();
                let tdd = trace_det_disc(k as u64, n).unwrap();
                let mu = Rational::from_integer(BigInt::from(k));
                let lam = Rational::from_integer(row);
                let q = &lam * &lam - tdd.trace.eval_rational(&mu) * &lam + tdd.det.eval_rational(&mu);
                assert!(q.is_zero(), "{name} n = {n}");
            }
        }
    }

    #[test]
    fn scope_errors() {
        let k4 = builtin("K4").unwrap();
        assert!(matches!(lift_verify(&k4, 3, 1e-8), Err(SpectralError::Structure(StructureError::GirthTooSmall { .. }))));
        let c5 = builtin("C5").unwrap();
        assert!(matches!(lift_verify(&c5, 1, 1e-8), Err(SpectralError::Structure(StructureError::DegreeTooSmall(2)))));
        assert!(matches!(lift_verify(&k4, 1, 0.0), Err(SpectralError::InvalidTolerance(_))));
    }

    #[test]
    fn petersen_first_power_is_diagonalizable() {
        let r = nondiag_predict(&builtin("petersen").unwrap(), 1, DEFAULT_TOL).unwrap();
        assert!(r.diagonalizable && r.flagged.is_empty());
    }

    #[test]
    fn dodecahedron_third_power_flags_root5() {
        let g = builtin("dodecahedron").unwrap();
        let r = nondiag_predict(&g, 3, DEFAULT_TOL).unwrap();
        let flagged: Vec<f64> = r.flagged.iter().map(|f| f.mu).collect();
        assert_eq!(flagged.len(), 2, "{r:?}");
        assert!(flagged.iter().all(|m| (m.abs() - 5f64.sqrt()).abs() < 1e-9));
        assert!(r.flagged.iter().all(|f| f.method == "exact"));
    }

    #[test]
    fn ramanujan_boundary_is_flagged() {
        // μ* = 2 sqrt(k - 1) is a double root of D_1
        let k = 3;
        let mu = ExactEigenvalue::Quadratic { sum: 0.into(), product: (-8).into(), upper: true };
        let v = mu.to_ext().to_f64();
        let flags = nondiag_from_spectrum(k, 1, &[(v, Some(mu)), (1.0, None)], DEFAULT_TOL).unwrap();
        assert_eq!(flags.len(), 1);
        let numeric = nondiag_from_spectrum(k, 1, &[(v, None)], DEFAULT_TOL).unwrap();
        assert_eq!(numeric[0].method, "numeric");
    }

    #[test]
    fn rook_graph_has_boundary_eigenvalue() {
        // K4 x K8 (Cartesian) is 10-regular with eigenvalue 6 = 2 sqrt(9)
        let idx = |i: usize, j: usize| 8 * i + j;
        let mut edges = Vec::new();
        for i in 0..4 {
            for j in 0..8 {
                for j2 in j + 1..8 {
                    edges.push((idx(i, j), idx(i, j2)));
                }
                for i2 in i + 1..4 {
                    edges.push((idx(i, j), idx(i2, j)));
                }
            }
        }
        let g = Graph::from_edges(32, edges).unwrap();
        let r = nondiag_predict(&g, 1, DEFAULT_TOL).unwrap();
        assert_eq!(r.flagged.len(), 1);
        assert_eq!(r.flagged[0].exact.as_deref(), Some("6"));
    }
}
