//! End-to-end analysis of an algebra or module: dimension sequence, growth
//! classification, Hilbert series and quasi-polynomial structure.

use crate::error::{Error, Result};
use crate::hilbert::{module_dim_sequence, module_hilbert_series, DimensionSequence};
use crate::poincare::{denominator_analysis, quasi_polynomial, DenominatorReport, QuasiPolynomial, RationalSeries};
use crate::presentations::{AlgebraSpec, ModuleSpec};
use crate::samuel::{classify_growth, GrowthReport, DEFAULT_CONFIRM, DEFAULT_WINDOW};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisConfig {
    pub max_degree: usize,
    pub window: usize,
    pub confirm: usize,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            max_degree: 30,
            window: DEFAULT_WINDOW,
            confirm: DEFAULT_CONFIRM,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeriesAnalysis {
    /// As computed: the denominator is the product over generators.
    pub series: RationalSeries,
    pub reduced: RationalSeries,
    pub denominator: DenominatorReport,
    /// Present when the reduced denominator is `(1 - t^s)^d`.
    pub quasi: Option<QuasiPolynomial>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Analysis {
    pub cumulative: DimensionSequence,
    pub graded: DimensionSequence,
    pub growth: GrowthReport,
    /// Absent for catalog algebras, which have no presentation to count from.
    pub series: Option<SeriesAnalysis>,
}

/// Graded Hilbert series of `module` with its denominator structure. The
/// quasi-polynomial describes the graded pieces.
pub fn analyze_series(algebra: &AlgebraSpec, module: &ModuleSpec, max_degree: usize) -> Result<SeriesAnalysis> {
    let series = module_hilbert_series(algebra, module)?;
    let reduced = series.reduced();
    let denominator = denominator_analysis(reduced.denominator())?;
    let graded = module_dim_sequence(algebra, module, max_degree)?
        .to_graded()
        .ok_or_else(|| Error::Internal("cumulative dimensions decrease".into()))?;
    let quasi = match (denominator.s, denominator.d) {
        (Some(_), Some(_)) => match quasi_polynomial(&reduced, &graded) {
            Ok(q) => Some(q),
            Err(Error::TooFewSamples { .. }) => None,
            Err(e) => return Err(e),
        },
        _ => None,
    };
    Ok(SeriesAnalysis {
        series,
        reduced,
        denominator,
        quasi,
    })
}

pub fn analyze(algebra: &AlgebraSpec, module: &ModuleSpec, config: &AnalysisConfig) -> Result<Analysis> {
    let cumulative = module_dim_sequence(algebra, module, config.max_degree)?;
    let graded = cumulative
        .to_graded()
        .ok_or_else(|| Error::Internal("cumulative dimensions decrease".into()))?;
    let growth = classify_growth(&cumulative, config.window, config.confirm)?;
    let series = if algebra.is_catalog().is_some() {
        None
    } else {
        Some(analyze_series(algebra, module, config.max_degree)?)
    };
    Ok(Analysis {
        cumulative,
        graded,
        growth,
        series,
    })
}
