//! The fixed set of warnings a report may carry.

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Warning {
    SampledAgreement,
    MixedCyclotomic,
    UndeterminedRoots,
    BranchesDisagree,
    NoRecurrence,
    QuasiTooFewSamples,
    CatalogNoSeries,
    ExpectedInconclusive,
    HolonomyUnknown,
    HolonomyOverride,
    GammaIsFloat,
    DecreasingSequence,
}

impl Warning {
    pub const ALL: [Warning; 12] = [
        Warning::SampledAgreement,
        Warning::MixedCyclotomic,
        Warning::UndeterminedRoots,
        Warning::BranchesDisagree,
        Warning::NoRecurrence,
        Warning::QuasiTooFewSamples,
        Warning::CatalogNoSeries,
        Warning::ExpectedInconclusive,
        Warning::HolonomyUnknown,
        Warning::HolonomyOverride,
        Warning::GammaIsFloat,
        Warning::DecreasingSequence,
    ];

    pub fn text(self) -> &'static str {
        match self {
            Warning::SampledAgreement => "sampled agreement only",
            Warning::MixedCyclotomic => "mixed cyclotomic denominator",
            Warning::UndeterminedRoots => "denominator root location undetermined",
            Warning::BranchesDisagree => "quasi-polynomial branches disagree at top degree",
            Warning::NoRecurrence => "no linear recurrence on the sampled range",
            Warning::QuasiTooFewSamples => "too few samples for a quasi-polynomial fit",
            Warning::CatalogNoSeries => "no hilbert series for catalog algebras",
            Warning::ExpectedInconclusive => "catalog entry has intermediate growth",
            Warning::HolonomyUnknown => "holonomic number unknown for this algebra",
            Warning::HolonomyOverride => "holonomic number taken from --h-override",
            Warning::GammaIsFloat => "gamma_estimate is a floating-point diagnostic",
            Warning::DecreasingSequence => "cumulative sequence decreases",
        }
    }
}

/// Warnings in catalog order, each once.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Warnings(std::collections::BTreeSet<Warning>);

impl Warnings {
    pub fn push(&mut self, w: Warning) {
        self.0.insert(w);
    }

    pub fn iter(&self) -> impl Iterator<Item = Warning> + '_ {
        self.0.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}
