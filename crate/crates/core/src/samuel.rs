//! Hilbert-Samuel polynomials, GK dimension, multiplicity and growth
//! classification of dimension sequences.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, finite_difference, rat, to_binomial_basis, BigRational, BinomialForm};
use crate::exactnum::{interpolate, Polynomial};
use crate::hilbert::DimensionSequence;
use crate::poincare::{
    denominator_analysis, fit_quasi_polynomial, minimal_recurrence_of, series_from_recurrence_of, DenominatorReport,
    QuasiPolynomial, RadiusClass, RationalSeries, Recurrence,
};

pub const DEFAULT_WINDOW: usize = 6;
pub const DEFAULT_CONFIRM: usize = 8;

/// A binomial-basis polynomial that matches the sequence at every sampled
/// index from `stabilization_index` on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSamuelPolynomial {
    pub form: BinomialForm,
    pub stabilization_index: usize,
}

impl HilbertSamuelPolynomial {
    pub fn eval(&self, n: u64) -> BigRational {
        self.form.eval(n)
    }
}

/// Find the least `k` whose `k`-th difference is constant on the final
/// `window` entries, rebuild the polynomial through the last `k + 1` samples
/// and verify it against every trailing sample. Degrees above
/// `len - 2 window - 1` are not considered.
pub fn detect_polynomial(s: &DimensionSequence, window: usize) -> Result<Option<HilbertSamuelPolynomial>> {
    detect_polynomial_of(&s.to_cumulative().as_rationals(), window)
}

pub fn detect_polynomial_of(f: &[BigRational], window: usize) -> Result<Option<HilbertSamuelPolynomial>> {
    if window < 2 {
        return Err(Error::Precondition("window must be at least 2".into()));
    }
    let len = f.len();
    if len < 2 * window + 4 {
        return Err(Error::SequenceTooShort {
            needed: 2 * window + 4,
            got: len,
        });
    }
    if f.iter().all(Zero::is_zero) {
        return Ok(Some(HilbertSamuelPolynomial {
            form: BinomialForm::new(Vec::new()),
            stabilization_index: 0,
        }));
    }
    let max_degree = len - 2 * window - 1;
    let mut tower = f.to_vec();
    for k in 0..=max_degree {
        let tail = &tower[tower.len() - window..];
        if tail.iter().all(|v| v == &tail[0]) {
            return Ok(reconstruct(f, k));
        }
        tower = finite_difference(&tower)?;
    }
    Ok(None)
}

fn reconstruct(f: &[BigRational], k: usize) -> Option<HilbertSamuelPolynomial> {
    let len = f.len();
    let points: Vec<(BigRational, BigRational)> =
        (len - k - 1..len).map(|n| (rat(n as i64), f[n].clone())).collect();
    let poly = interpolate(&points);
    let form = to_binomial_basis(&poly);
    let mut first = len;
    while first > 0 && poly.eval_int(first as i64 - 1) == f[first - 1] {
        first -= 1;
    }
    assert!(
        (first..len).all(|n| form.eval(n as u64) == f[n]),
        "Hilbert-Samuel form disagrees with a trailing sample"
    );
    if form.leading().is_negative() {
        return None;
    }
    Some(HilbertSamuelPolynomial {
        form,
        stabilization_index: first,
    })
}

/// Binomial-basis degree; `0` for the zero form.
pub fn gk_dimension(h: &HilbertSamuelPolynomial) -> usize {
    h.form.degree().unwrap_or(0)
}

/// The top binomial-basis coefficient (Bernstein number).
pub fn multiplicity(h: &HilbertSamuelPolynomial) -> BigRational {
    h.form.leading()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Trend {
    Converging,
    Diverging,
    Oscillating,
}

impl Trend {
    pub fn name(self) -> &'static str {
        match self {
            Trend::Converging => "converging",
            Trend::Diverging => "diverging",
            Trend::Oscillating => "oscillating",
        }
    }
}

/// Floating-point diagnostic; never used for a classification.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaEstimate {
    pub value: f64,
    pub trend: Trend,
}

fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap_or(f64::INFINITY).ln() + shift as f64 * std::f64::consts::LN_2
}

/// `log_N f(N)` at the last index, with a trend read from the local exponents
/// `u(n) = n ln(f(n+1)/f(n))` over the last five ratios.
pub fn gamma_estimate(s: &DimensionSequence) -> Result<GammaEstimate> {
    let v = &s.values;
    if v.len() < 8 {
        return Err(Error::SequenceTooShort { needed: 8, got: v.len() });
    }
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroSequence);
    }
    let last = v.len() - 1;
    if v[last - 5..].iter().any(Zero::is_zero) {
        return Err(Error::Precondition("sequence must be positive on its last six entries".into()));
    }
    let value = ln_big(&v[last]) / (last as f64).ln();
    let u: Vec<f64> = (last - 5..last)
        .map(|n| n as f64 * (ln_big(&v[n + 1]) - ln_big(&v[n])))
        .collect();
    let delta: Vec<f64> = u.windows(2).map(|w| w[1] - w[0]).collect();
    let trend = if delta.iter().all(|d| d.abs() < 1e-12) {
        Trend::Converging
    } else {
        let signs: Vec<bool> = delta.iter().filter(|d| d.abs() >= 1e-12).map(|d| *d > 0.0).collect();
        let changes = signs.windows(2).filter(|w| w[0] != w[1]).count();
        let scaled: Vec<f64> = delta
            .iter()
            .enumerate()
            .map(|(i, d)| (last - 4 + i) as f64 * d)
            .collect();
        if changes >= 2 {
            Trend::Oscillating
        } else if delta.iter().all(|d| *d > 0.0) && scaled[scaled.len() - 1] > scaled[0] {
            Trend::Diverging
        } else {
            Trend::Converging
        }
    };
    Ok(GammaEstimate { value, trend })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    FiniteDimensional,
    Polynomial,
    Exponential,
    Inconclusive,
}

impl Classification {
    pub fn name(self) -> &'static str {
        match self {
            Classification::FiniteDimensional => "finite_dimensional",
            Classification::Polynomial => "polynomial",
            Classification::Exponential => "exponential",
            Classification::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How a classification was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Evidence {
    /// Every sample is zero.
    ZeroSequence,
    /// Finite differences stabilised.
    DifferenceTower,
    /// A recurrence whose denominator has only roots of unity; the
    /// cumulative sequence is a quasi-polynomial with a common leading term.
    QuasiPolynomial,
    /// A recurrence whose denominator has a root inside the unit disk.
    RecurrenceRoot,
    /// A recurrence was found but the denominator does not decide.
    UndecidedDenominator,
    /// Roots of unity only, but the branches disagree at top degree.
    BranchesDisagree,
    /// No polynomial fit and no recurrence on the sample.
    NoRecurrence,
}

impl Evidence {
    pub fn name(self) -> &'static str {
        match self {
            Evidence::ZeroSequence => "zero_sequence",
            Evidence::DifferenceTower => "difference_tower",
            Evidence::QuasiPolynomial => "quasi_polynomial",
            Evidence::RecurrenceRoot => "recurrence_root_inside_unit_disk",
            Evidence::UndecidedDenominator => "undecided_denominator",
            Evidence::BranchesDisagree => "quasi_polynomial_branches_disagree",
            Evidence::NoRecurrence => "no_recurrence",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthReport {
    pub classification: Classification,
    pub gk: Option<usize>,
    pub multiplicity: Option<BigRational>,
    pub gamma_estimate: Option<GammaEstimate>,
    pub evidence: Evidence,
    pub hilbert_samuel: Option<HilbertSamuelPolynomial>,
    pub recurrence: Option<Recurrence>,
    pub series: Option<RationalSeries>,
    pub denominator: Option<DenominatorReport>,
    pub quasi: Option<QuasiPolynomial>,
}

impl GrowthReport {
    fn bare(classification: Classification, evidence: Evidence) -> Self {
        GrowthReport {
            classification,
            gk: None,
            multiplicity: None,
            gamma_estimate: None,
            evidence,
            hilbert_samuel: None,
            recurrence: None,
            series: None,
            denominator: None,
            quasi: None,
        }
    }
}

/// Classify the cumulative sequence. Polynomial and finite-dimensional
/// verdicts rest on the difference tower (or on a quasi-polynomial fit when
/// the recurrence denominator has only roots of unity); exponential rests on
/// an exact recurrence whose denominator has a root inside the unit disk.
/// Anything else is inconclusive.
pub fn classify_growth(s: &DimensionSequence, window: usize, confirm: usize) -> Result<GrowthReport> {
    let cumulative = s.to_cumulative();
    if cumulative.len() < 12 {
        return Err(Error::SequenceTooShort {
            needed: 12,
            got: cumulative.len(),
        });
    }
    let f = cumulative.as_rationals();
    if f.iter().all(Zero::is_zero) {
        let mut r = GrowthReport::bare(Classification::FiniteDimensional, Evidence::ZeroSequence);
        r.gk = Some(0);
        return Ok(r);
    }
    let gamma = gamma_estimate(&cumulative).ok();

    if let Some(h) = detect_polynomial_of(&f, window)? {
        let d = gk_dimension(&h);
        let e = multiplicity(&h);
        let class = if d == 0 {
            Classification::FiniteDimensional
        } else {
            Classification::Polynomial
        };
        let mut r = GrowthReport::bare(class, Evidence::DifferenceTower);
        r.gk = Some(d);
        r.multiplicity = Some(e);
        r.gamma_estimate = gamma;
        r.hilbert_samuel = Some(h);
        return Ok(r);
    }

    let Some(rec) = minimal_recurrence_of(&f, confirm)? else {
        let mut r = GrowthReport::bare(Classification::Inconclusive, Evidence::NoRecurrence);
        r.gamma_estimate = gamma;
        return Ok(r);
    };
    let series = series_from_recurrence_of(&f, &rec)?;
    let report = denominator_analysis(series.denominator())?;
    let mut r = GrowthReport::bare(Classification::Inconclusive, Evidence::UndecidedDenominator);
    r.gamma_estimate = gamma;
    match report.radius_class {
        RadiusClass::InsideUnitDisk => {
            r.classification = Classification::Exponential;
            r.evidence = Evidence::RecurrenceRoot;
        }
        RadiusClass::AllRootsOnUnitCircle => {
            let dp = series.numerator().degree().unwrap_or(0) as isize;
            let dq = series.denominator().degree().unwrap_or(0) as isize;
            let onset = (dp - dq + 1).max(0) as usize;
            let top = report.max_multiplicity().max(1) - 1;
            match fit_quasi_polynomial(&f, report.period(), top, onset) {
                Ok(qp) => {
                    match (qp.max_degree(), qp.common_leading()) {
                        (Some(d), Some(lc)) if lc.is_positive() => {
                            r.classification = if d == 0 {
                                Classification::FiniteDimensional
                            } else {
                                Classification::Polynomial
                            };
                            r.evidence = Evidence::QuasiPolynomial;
                            r.gk = Some(d);
                            r.multiplicity = Some(lc * BigRational::from_integer(factorial(d)));
                        }
                        _ => r.evidence = Evidence::BranchesDisagree,
                    }
                    r.quasi = Some(qp);
                }
                Err(_) => r.evidence = Evidence::BranchesDisagree,
            }
        }
        RadiusClass::Mixed => {}
    }
    r.recurrence = Some(rec);
    r.series = Some(series);
    r.denominator = Some(report);
    Ok(r)
}

/// Leading coefficient of the form rewritten in the monomial basis.
pub fn leading_monomial_coefficient(h: &HilbertSamuelPolynomial) -> BigRational {
    let p: Polynomial = crate::exactnum::from_binomial_basis(&h.form);
    p.leading()
}
