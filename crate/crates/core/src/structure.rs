//! Structure formula for `S(U^n)` on k-regular graphs of girth `> 2(n-1)`.
//!
//! `S(U^n)` is a 0/1 combination of the terms
//!
//! ```text
//!   index j >= 0:   S(U)^j        J S(U)^j
//!   index j <  0:   ^T(S(U)^|j|)  J ^T(S(U)^|j|)
//! ```
//!
//! for `j` in `[-(n-1), n]`. The coefficients `eps[j]` (unflipped) and
//! `tau[j]` (flipped) are read off the discriminant walk at step `n`:
//! `eps[j] = 1` iff cell `(j; R)` has phase 0, `tau[j] = 1` iff cell
//! `(j - 1; L)` has phase 0. All index bookkeeping lives in [`Term`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{analyze, Extent, Graph};
use crate::lineqw::{self, Chirality, PhaseRow, WalkError};
use crate::matrix::IntMatrix;
use crate::walkops::{self, Side, WalkOpsError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is {graph_k}-regular but the formula is for k = {formula_k}")]
    DegreeMismatch { graph_k: usize, formula_k: u64 },
    #[error("structure formulas need k >= 3, got {0}")]
    DegreeTooSmall(u64),
    #[error("walk power n must be >= 1")]
    ZeroPower,
    #[error("girth too small: need > 2(n-1) = {need} for n = {n}, graph has girth {girth}")]
    GirthTooSmall { girth: Extent, n: usize, need: usize },
    #[error("assembled entry ({b}, {a}) = {value} is not 0/1 although girth > 2(n-1)")]
    EntryOverflow { b: usize, a: usize, value: BigInt },
    #[error("phase-0 cell ({x}; {chirality}) maps outside the coefficient range at n = {n}")]
    CellOutOfRange { x: i64, chirality: Chirality, n: usize },
    #[error(transparent)]
    Walk(#[from] WalkError),
    #[error(transparent)]
    WalkOps(#[from] WalkOpsError),
}

/// One matrix term of the formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    /// `j`: the power of `S(U)`, negative for transposed powers.
    pub index: i64,
    /// Left-multiplied by `J`.
    pub flipped: bool,
}

impl Term {
    /// Walk cell that decides this term's coefficient.
    pub fn cell(self) -> (i64, Chirality) {
        if self.flipped {
            (self.index - 1, Chirality::L)
        } else {
            (self.index, Chirality::R)
        }
    }

    pub fn from_cell(x: i64, chirality: Chirality) -> Term {
        match chirality {
            Chirality::R => Term { index: x, flipped: false },
            Chirality::L => Term { index: x + 1, flipped: true },
        }
    }

    /// Display order: by cell site, `R` before `L`.
    fn order_key(self) -> (i64, u8) {
        let (x, c) = self.cell();
        (x, if c == Chirality::R { 0 } else { 1 })
    }

    pub fn label(self) -> String {
        let j = self.index.unsigned_abs();
        let base = match (self.index.signum(), j) {
            (0, _) => None,
            (_, 1) => Some("S(U)".to_string()),
            (_, _) => Some(format!("S(U)^{j}")),
        };
        let body = match (base, self.index < 0) {
            (None, _) => None,
            (Some(b), false) => Some(b),
            (Some(b), true) => Some(format!("^T {b}")),
        };
        match (self.flipped, body) {
            (false, None) => "I".into(),
            (true, None) => "J".into(),
            (false, Some(b)) => b,
            (true, Some(b)) => format!("J {b}"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Coefficients `eps[j]`, `tau[j]` for `j` in `[-(n-1), n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureFormula {
    k: u64,
    n: usize,
    eps: Vec<bool>,
    tau: Vec<bool>,
}

impl StructureFormula {
    /// All-zero formula for `(k, n)`; set coefficients with [`Self::set`].
    pub fn empty(k: u64, n: usize) -> Self {
        let len = 2 * n;
        StructureFormula { k, n, eps: vec![false; len], tau: vec![false; len] }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index_range(&self) -> std::ops::RangeInclusive<i64> {
        -(self.n as i64 - 1)..=self.n as i64
    }

    fn slot(&self, j: i64) -> Option<usize> {
        self.index_range().contains(&j).then(|| (j + self.n as i64 - 1) as usize)
    }

    pub fn eps(&self, j: i64) -> bool {
        self.slot(j).is_some_and(|i| self.eps[i])
    }

    pub fn tau(&self, j: i64) -> bool {
        self.slot(j).is_some_and(|i| self.tau[i])
    }

    pub fn coefficient(&self, t: Term) -> bool {
        if t.flipped {
            self.tau(t.index)
        } else {
            self.eps(t.index)
        }
    }

    /// Returns false when the term lies outside the index range.
    pub fn set(&mut self, t: Term, value: bool) -> bool {
        match self.slot(t.index) {
            Some(i) => {
                if t.flipped {
                    self.tau[i] = value;
                } else {
                    self.eps[i] = value;
                }
                true
            }
            None => false,
        }
    }

    /// Terms with coefficient 1, in display order.
    pub fn terms(&self) -> Vec<Term> {
        let mut out: Vec<Term> = self
            .index_range()
            .flat_map(|j| [Term { index: j, flipped: false }, Term { index: j, flipped: true }])
            .filter(|&t| self.coefficient(t))
            .collect();
        out.sort_by_key(|t| t.order_key());
        out
    }

    pub fn eps_map(&self) -> BTreeMap<i64, u8> {
        self.index_range().map(|j| (j, self.eps(j) as u8)).collect()
    }

    pub fn tau_map(&self) -> BTreeMap<i64, u8> {
        self.index_range().map(|j| (j, self.tau(j) as u8)).collect()
    }
}

#[derive(Serialize)]
struct FormulaJson {
    k: u64,
    n: usize,
    eps: BTreeMap<i64, u8>,
    tau: BTreeMap<i64, u8>,
}

impl Serialize for StructureFormula {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FormulaJson { k: self.k, n: self.n, eps: self.eps_map(), tau: self.tau_map() }.serialize(s)
    }
}

impl fmt::Display for StructureFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.terms().iter().map(|t| t.label()).collect();
        if labels.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&labels.join(" + "))
        }
    }
}

fn check_params(k: u64, n: usize) -> Result<(), StructureError> {
    if k < 3 {
        return Err(StructureError::DegreeTooSmall(k));
    }
    if n == 0 {
        return Err(StructureError::ZeroPower);
    }
    Ok(())
}

/// Reads a formula off one phase row of the walk.
pub fn formula_from_phases(k: u64, row: &PhaseRow) -> Result<StructureFormula, StructureError> {
    check_params(k, row.n)?;
    let mut f = StructureFormula::empty(k, row.n);
    for (x, c) in row.zero_cells() {
        if !f.set(Term::from_cell(x, c), true) {
            return Err(StructureError::CellOutOfRange { x, chirality: c, n: row.n });
        }
    }
    Ok(f)
}

/// Runs the discriminant walk for `n` steps and extracts the coefficients.
pub fn coefficients(k: u64, n: usize) -> Result<StructureFormula, StructureError> {
    check_params(k, n)?;
    let state = lineqw::evolve(k, n)?;
    formula_from_phases(k, &lineqw::phase(&state))
}

/// Formulas for every `n` in `1..=n_max` from a single walk run.
pub fn coefficient_table(k: u64, n_max: usize) -> Result<Vec<StructureFormula>, StructureError> {
    check_params(k, 1)?;
    lineqw::pattern(k, n_max)?.rows.iter().map(|row| formula_from_phases(k, row)).collect()
}

/// Matrices for every term up to a fixed power on one graph.
pub struct TermMatrices<'g> {
    graph: &'g Graph,
    powers: Vec<IntMatrix>,
}

impl<'g> TermMatrices<'g> {
    pub fn new(graph: &'g Graph, max_power: usize) -> Result<Self, StructureError> {
        let s = walkops::support_of_grover(graph)?;
        let mut powers = vec![IntMatrix::identity(graph.arc_count())];
        for j in 1..=max_power {
            let next = powers[j - 1].mul(&s);
            powers.push(next);
        }
        Ok(TermMatrices { graph, powers })
    }

    /// `S(U)^j`, `J S(U)^j`, `^T(S(U)^|j|)` or `J ^T(S(U)^|j|)`.
    pub fn matrix(&self, t: Term) -> IntMatrix {
        let p = &self.powers[t.index.unsigned_abs() as usize];
        let base = if t.index < 0 { p.transpose() } else { p.clone() };
        if t.flipped {
            walkops::flip(self.graph, &base, Side::Left)
        } else {
            base
        }
    }
}

/// Sums the formula's terms on `g`; requires `g` to be `f.k()`-regular.
///
/// When the girth exceeds `2(n-1)` every entry must be 0 or 1 (the terms
/// have disjoint supports); anything else is reported as an error.
pub fn assemble_rhs(g: &Graph, f: &StructureFormula) -> Result<IntMatrix, StructureError> {
    let k = g.regular_degree().ok_or(StructureError::NotRegular)?;
    if k as u64 != f.k() {
        return Err(StructureError::DegreeMismatch { graph_k: k, formula_k: f.k() });
    }
    let terms = TermMatrices::new(g, f.n())?;
    let mut sum = IntMatrix::zeros(g.arc_count());
    for t in f.terms() {
        sum = sum.add(&terms.matrix(t));
    }
    if analyze(g).girth.exceeds(2 * (f.n() - 1)) {
        if let Some((b, a, v)) = sum.entries().find(|(_, _, v)| !(v.is_zero() || v.is_one())) {
            return Err(StructureError::EntryOverflow { b, a, value: v.clone() });
        }
    }
    Ok(sum)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub b: usize,
    pub a: usize,
    /// Entry of `S(U^n)`.
    pub support: u8,
    /// Entry of the assembled formula.
    pub assembled: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub n: usize,
    pub k: usize,
    pub girth: Extent,
    pub arcs: usize,
    pub formula: String,
    pub mismatches: Vec<Mismatch>,
}

/// Checks `S(U^n)` against the assembled formula entry by entry.
///
/// Refuses graphs outside the theorem's scope (irregular, `k < 3`, girth
/// `<= 2(n-1)`).
pub fn verify(g: &Graph, n: usize) -> Result<VerificationReport, StructureError> {
    let report = analyze(g);
    let k = report.regularity_k.ok_or(StructureError::NotRegular)?;
    check_params(k as u64, n)?;
    let need = 2 * (n - 1);
    if !report.girth.exceeds(need) {
        return Err(StructureError::GirthTooSmall { girth: report.girth, n, need });
    }
    verify_formula(g, &coefficients(k as u64, n)?)
}

/// [`verify`] against an explicit coefficient set (no girth gate).
pub fn verify_formula(g: &Graph, formula: &StructureFormula) -> Result<VerificationReport, StructureError> {
    let report = analyze(g);
    let n = formula.n();
    let rhs = assemble_rhs(g, formula)?;
    let lhs = walkops::support_of_power(g, n)?;
    let mismatches: Vec<Mismatch> = lhs
        .entries()
        .filter(|&(b, a, v)| v != rhs.get(b, a))
        .map(|(b, a, v)| Mismatch {
            b,
            a,
            support: v.is_one() as u8,
            assembled: u8::try_from(rhs.get(b, a)).unwrap_or(u8::MAX),
        })
        .collect();
    Ok(VerificationReport {
        pass: mismatches.is_empty(),
        n,
        k: formula.k() as usize,
        girth: report.girth,
        arcs: g.arc_count(),
        formula: formula.to_string(),
        mismatches,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaFormat {
    Text,
    Json,
}

pub fn pretty_print(f: &StructureFormula, format: FormulaFormat) -> String {
    match format {
        FormulaFormat::Text => f.to_string(),
        FormulaFormat::Json => serde_json::to_string(f).expect("formula serializes"),
    }
}

/// Whether `S(U)^j` has only 0/1 entries for `1 <= j <= n`.
pub fn unique_paths(terms: &TermMatrices<'_>, n: usize) -> bool {
    (1..=n).all(|j| terms.powers[j].is_binary())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin;

    fn text(k: u64, n: usize) -> String {
        coefficients(k, n).unwrap().to_string()
    }

    #[test]
    fn cell_term_table() {
        // (j; R) <-> eps[j]; (j; L) <-> tau[j + 1]
        for x in -6..=6 {
            for c in [Chirality::L, Chirality::R] {
                assert_eq!(Term::from_cell(x, c).cell(), (x, c));
            }
        }
        assert_eq!(Term::from_cell(2, Chirality::L), Term { index: 3, flipped: true });
        assert_eq!(Term::from_cell(-1, Chirality::L), Term { index: 0, flipped: true });
        assert_eq!(Term::from_cell(-3, Chirality::R), Term { index: -3, flipped: false });
    }

    #[test]
    fn labels() {
        let l = |index, flipped| Term { index, flipped }.label();
        assert_eq!(l(0, false), "I");
        assert_eq!(l(0, true), "J");
        assert_eq!(l(1, false), "S(U)");
        assert_eq!(l(3, true), "J S(U)^3");
        assert_eq!(l(-1, false), "^T S(U)");
        assert_eq!(l(-2, true), "J ^T S(U)^2");
    }

    #[test]
    fn small_n_formulas() {
        for k in [3, 4, 9, 50] {
            assert_eq!(text(k, 1), "S(U)");
            assert_eq!(text(k, 2), "I + S(U)^2");
            assert_eq!(text(k, 3), "^T S(U) + S(U)^3");
            assert_eq!(text(k, 4), "^T S(U)^2 + I + S(U)^4");
        }
        assert_eq!(text(3, 5), "^T S(U)^3 + ^T S(U) + S(U) + S(U)^5");
        assert_eq!(text(7, 5), "^T S(U)^3 + J ^T S(U)^2 + ^T S(U) + S(U) + J S(U)^2 + S(U)^5");
        assert_eq!(text(12, 6), "^T S(U)^4 + J ^T S(U)^3 + I + S(U)^2 + J S(U)^3 + S(U)^6");
    }

    #[test]
    fn extremal_coefficients() {
        for k in [3, 5, 12] {
            for f in coefficient_table(k, 25).unwrap() {
                let n = f.n() as i64;
                assert!(f.eps(n));
                assert!(!f.tau(-(n - 1)));
            }
        }
    }

    #[test]
    fn table_matches_single_runs() {
        let table = coefficient_table(5, 8).unwrap();
        for (i, f) in table.iter().enumerate() {
            assert_eq!(f, &coefficients(5, i + 1).unwrap());
        }
    }

    #[test]
    fn json_layout() {
        let f = coefficients(3, 2).unwrap();
        assert_eq!(
            pretty_print(&f, FormulaFormat::Json),
            r#"{"k":3,"n":2,"eps":{"-1":0,"0":1,"1":0,"2":1},"tau":{"-1":0,"0":0,"1":0,"2":0}}"#
        );
    }

    #[test]
    fn preconditions() {
        assert_eq!(coefficients(2, 3), Err(StructureError::DegreeTooSmall(2)));
        assert_eq!(coefficients(3, 0), Err(StructureError::ZeroPower));
        let k4 = builtin("K4").unwrap();
        assert!(matches!(verify(&k4, 3), Err(StructureError::GirthTooSmall { need: 4, .. })));
        assert!(matches!(verify(&builtin("C5").unwrap(), 2), Err(StructureError::DegreeTooSmall(2))));
        let f = coefficients(4, 2).unwrap();
        assert!(matches!(assemble_rhs(&k4, &f), Err(StructureError::DegreeMismatch { .. })));
    }

    #[test]
    fn identity_only_formula() {
        let g = builtin("petersen").unwrap();
        let mut f = StructureFormula::empty(3, 3);
        f.set(Term { index: 0, flipped: false }, true);
        assert!(assemble_rhs(&g, &f).unwrap().is_identity());
    }

    #[test]
    fn low_girth_assembly_is_unchecked() {
        let g = builtin("K4").unwrap();
        let f = coefficients(3, 3).unwrap();
        let sum = assemble_rhs(&g, &f).unwrap();
        assert_ne!(sum, walkops::support_of_power(&g, 3).unwrap());
    }

    #[test]
    fn verify_small_cases() {
        let r = verify(&builtin("K4").unwrap(), 2).unwrap();
        assert!(r.pass, "{r:?}");
        let r = verify(&builtin("petersen").unwrap(), 3).unwrap();
        assert!(r.pass && r.mismatches.is_empty());
        assert_eq!(r.formula, "^T S(U) + S(U)^3");
    }
}
