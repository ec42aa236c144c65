//! Exact (quasi-)polynomial fitting of length sequences by finite differences,
//! and the degree-bound audit.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::module::Length;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthSequence {
    pub n0: u32,
    pub values: Vec<Length>,
    pub provenance: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FitError {
    #[error("sequence has {found} values, fitting needs at least {needed}")]
    TooShort { needed: usize, found: usize },
    #[error("length is infinite at n = {n}; the finite-length hypothesis fails")]
    Infinite { n: u32 },
}

impl LengthSequence {
    pub fn new(n0: u32, values: Vec<Length>, provenance: impl Into<String>) -> Self {
        LengthSequence {
            n0,
            values,
            provenance: provenance.into(),
        }
    }

    pub fn from_counts(n0: u32, values: &[u64]) -> Self {
        Self::new(n0, values.iter().map(|&v| Length::Finite(v)).collect(), "")
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.values.len() as u32).map(move |k| self.n0 + k)
    }

    /// The values as integers; the first INFINITE entry is an error.
    pub fn finite_values(&self) -> Result<Vec<u64>, FitError> {
        self.values
            .iter()
            .enumerate()
            .map(|(k, v)| v.finite().ok_or(FitError::Infinite { n: self.n0 + k as u32 }))
            .collect()
    }
}

/// A polynomial in n with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficient(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, n: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(n));
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    fn mul_linear(&self, a: &BigRational, b: &BigRational) -> Self {
        // (a·n + b) · self
        let mut out = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] += c * a;
            out[k] += c * b;
        }
        Self::new(out)
    }

    fn add_scaled(&self, other: &Self, s: &BigRational) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coefficient(k) + other.coefficient(k) * s).collect())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "n".into(),
                _ => format!("n^{}", k),
            };
            if k == 0 {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", a, mono)?;
            }
        }
        Ok(())
    }
}

/// The fitted polynomial on the residue class n ≡ residue (mod period).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFit {
    pub residue: u32,
    pub polynomial: RationalPolynomial,
    /// First n of this class from which the polynomial reproduces every value.
    pub stable_from: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundAudit {
    pub dim_value: i64,
    pub spread_value: i64,
    /// Fitted degree, −1 for the zero polynomial.
    pub degree: i64,
    pub bound: i64,
    pub satisfied: bool,
    /// dim ≥ spread, where the bound must be attained by dim.
    pub equality_case: bool,
    /// In the equality case, whether degree = dim.
    pub equality_holds: Option<bool>,
    /// degree = spread − 1.
    pub spread_attained: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthReport {
    pub period: u32,
    pub classes: Vec<ClassFit>,
    pub stable_from: u32,
    /// `None` when every class polynomial is zero.
    pub degree: Option<usize>,
    /// degree! · leading coefficient, when every class has the same one.
    pub normalized_leading_coefficient: Option<BigRational>,
    pub leading_coefficient_integral: Option<bool>,
    pub is_true_polynomial: bool,
    pub bound_audit: Option<BoundAudit>,
}

impl GrowthReport {
    /// Degree as an integer, −1 for zero.
    pub fn signed_degree(&self) -> i64 {
        self.degree.map_or(-1, |d| d as i64)
    }

    pub fn class_for(&self, n: u32) -> &ClassFit {
        &self.classes[(n % self.period) as usize]
    }

    pub fn eval(&self, n: u32) -> BigRational {
        self.class_for(n).polynomial.eval(n as i64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FitOutcome {
    Fitted(GrowthReport),
    NoFit,
}

impl FitOutcome {
    pub fn report(&self) -> Option<&GrowthReport> {
        match self {
            FitOutcome::Fitted(r) => Some(r),
            FitOutcome::NoFit => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FitOptions {
    pub max_degree: usize,
    pub max_period: u32,
    /// Tail points required beyond the degree + 2 that determine a fit.
    pub excess: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions {
            max_degree: 3,
            max_period: 6,
            excess: 1,
        }
    }
}

impl FitOptions {
    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = d;
        self
    }

    pub fn with_max_period(mut self, p: u32) -> Self {
        self.max_period = p;
        self
    }

    pub fn min_values(&self) -> usize {
        2 * (self.max_degree + 2)
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn differences(xs: &[BigInt]) -> Vec<BigInt> {
    xs.windows(2).map(|w| &w[1] - &w[0]).collect()
}

/// Fits one residue class (points at n_k = start + k·step). Returns the
/// polynomial in n and the first tail index.
fn fit_class(start: u32, step: u32, xs: &[BigInt], opts: &FitOptions) -> Option<(RationalPolynomial, usize)> {
    let m = xs.len();
    let mut diffs: Vec<Vec<BigInt>> = vec![xs.to_vec()];
    for d in 0..=opts.max_degree {
        let next = differences(diffs.last().unwrap());
        diffs.push(next);
        let top = &diffs[d + 1];
        let zeros = top.iter().rev().take_while(|v| v.is_zero()).count();
        if zeros == 0 || zeros + d + 1 < d + 2 + opts.excess {
            continue;
        }
        let tail = zeros + d + 1;
        let t = m - tail;
        // Newton forward form at x_t with u = (n − n_t)/step.
        let nt = rat(start as i64 + (t as i64) * step as i64);
        let a = BigRational::new(BigInt::one(), BigInt::from(step));
        let b = -(&nt * &a);
        let mut basis = RationalPolynomial::new(vec![BigRational::one()]);
        let mut poly = RationalPolynomial::new(vec![]);
        for (j, row) in diffs.iter().take(d + 1).enumerate() {
            let coef = BigRational::from_integer(row[t].clone());
            poly = poly.add_scaled(&basis, &coef);
            // basis ← basis · (u − j)/(j + 1)
            let shift = &b - rat(j as i64);
            basis = basis.mul_linear(&a, &shift);
            let inv = BigRational::new(BigInt::one(), BigInt::from(j + 1));
            basis = RationalPolynomial::new(basis.coeffs.iter().map(|c| c * &inv).collect());
        }
        return Some((poly, t));
    }
    None
}

fn factorial(d: usize) -> BigInt {
    (1..=d).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn fit_with_period(n0: u32, values: &[u64], p: u32, opts: &FitOptions) -> Option<GrowthReport> {
    let mut classes: Vec<Option<ClassFit>> = vec![None; p as usize];
    for k in 0..p.min(values.len() as u32) {
        let start = n0 + k;
        let xs: Vec<BigInt> = values.iter().skip(k as usize).step_by(p as usize).map(|&v| BigInt::from(v)).collect();
        let (poly, t) = fit_class(start, p, &xs, opts)?;
        let mut first = t;
        while first > 0 {
            let n = start + (first as u32 - 1) * p;
            if poly.eval(n as i64) == BigRational::from_integer(xs[first - 1].clone()) {
                first -= 1;
            } else {
                break;
            }
        }
        classes[(start % p) as usize] = Some(ClassFit {
            residue: start % p,
            polynomial: poly,
            stable_from: start + first as u32 * p,
        });
    }
    let classes: Vec<ClassFit> = classes.into_iter().collect::<Option<_>>()?;

    let mut stable_from = n0;
    for (k, &v) in values.iter().enumerate() {
        let n = n0 + k as u32;
        let c = &classes[(n % p) as usize];
        if c.polynomial.eval(n as i64) != rat(v as i64) {
            stable_from = n + 1;
        }
    }

    let degree = classes.iter().filter_map(|c| c.polynomial.degree()).max();
    let (nlc, integral) = match degree {
        None => (Some(BigRational::zero()), Some(true)),
        Some(d) => {
            let lcs: Vec<BigRational> = classes.iter().map(|c| c.polynomial.coefficient(d)).collect();
            if lcs.iter().all(|c| *c == lcs[0]) {
                let v = &lcs[0] * BigRational::from_integer(factorial(d));
                let integral = v.is_integer();
                (Some(v), Some(integral))
            } else {
                (None, None)
            }
        }
    };
    Some(GrowthReport {
        period: p,
        classes,
        stable_from,
        degree,
        normalized_leading_coefficient: nlc,
        leading_coefficient_integral: integral,
        is_true_polynomial: p == 1,
        bound_audit: None,
    })
}

fn precheck(seq: &LengthSequence, opts: &FitOptions) -> Result<Vec<u64>, FitError> {
    let values = seq.finite_values()?;
    if values.len() < opts.min_values() {
        return Err(FitError::TooShort {
            needed: opts.min_values(),
            found: values.len(),
        });
    }
    Ok(values)
}

/// Eventual polynomial of degree ≤ opts.max_degree, or `NoFit`.
pub fn fit_polynomial(seq: &LengthSequence, opts: &FitOptions) -> Result<FitOutcome, FitError> {
    let values = precheck(seq, opts)?;
    Ok(match fit_with_period(seq.n0, &values, 1, opts) {
        Some(r) => FitOutcome::Fitted(r),
        None => FitOutcome::NoFit,
    })
}

/// Period p ≤ opts.max_period for which every residue class is eventually
/// polynomial. Among the periods that fit, the earliest stable_from wins and
/// ties go to the smallest p, so a short trailing run cannot masquerade as a
/// lower period.
pub fn fit_quasipolynomial(seq: &LengthSequence, opts: &FitOptions) -> Result<FitOutcome, FitError> {
    let values = precheck(seq, opts)?;
    let best = (1..=opts.max_period.max(1))
        .filter_map(|p| fit_with_period(seq.n0, &values, p, opts))
        .min_by_key(|r| (r.stable_from, r.period));
    Ok(match best {
        Some(r) => FitOutcome::Fitted(r),
        None => FitOutcome::NoFit,
    })
}

/// Checks degree ≤ max(dim, spread − 1), and degree = dim when dim ≥ spread.
pub fn audit_degree_bound(report: &GrowthReport, dim_value: i64, spread_value: i64) -> BoundAudit {
    let degree = report.signed_degree();
    let bound = dim_value.max(spread_value - 1);
    let equality_case = dim_value >= spread_value;
    BoundAudit {
        dim_value,
        spread_value,
        degree,
        bound,
        satisfied: degree <= bound,
        equality_case,
        equality_holds: equality_case.then_some(degree == dim_value),
        spread_attained: degree == spread_value - 1,
    }
}

/// Coefficients whose numerator or denominator is divisible by the
/// characteristic; lengths computed mod p might then differ from char 0.
pub fn characteristic_warnings(report: &GrowthReport, characteristic: u32) -> Vec<String> {
    if characteristic == 0 {
        return Vec::new();
    }
    let p = BigInt::from(characteristic);
    let mut out = Vec::new();
    for c in &report.classes {
        for (k, a) in c.polynomial.coefficients().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if (a.numer() % &p).is_zero() || (a.denom() % &p).is_zero() {
                out.push(format!(
                    "characteristic {} divides the coefficient {} of n^{} in class {}",
                    characteristic, a, k, c.residue
                ));
            }
        }
    }
    out
}
