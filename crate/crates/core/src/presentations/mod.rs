//! Presentations of filtered algebras and graded modules.
//!
//! Algebras are described through a normal-monomial basis together with
//! generator degrees; the associated graded algebra is commutative (polynomial,
//! Weyl with the Bernstein filtration) or a quantum affine space (quantum,
//! weighted PBW). Modules are finite direct sums of shifted cyclic quotients of
//! the associated graded algebra by monomial ideals.

mod order;
mod rewrite;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::exactnum::BigRational;

pub use order::{
    check_admissibility, compare, AdmissibilityReport, AdmissibleOrder, Counterexample,
    MonomialOrder, MultiDegree, OrderKind,
};
pub use rewrite::{normal_order_quantum, normal_order_weyl};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Polynomial,
    QuantumAffine,
    /// Weyl algebra `W_n` with generators `x_1..x_n, y_1..y_n` and
    /// `[y_i, x_i] = 1`.
    Weyl,
    PbwWeighted,
    Catalog(CatalogEntry),
}

impl AlgebraKind {
    pub fn name(self) -> String {
        match self {
            AlgebraKind::Polynomial => "polynomial".into(),
            AlgebraKind::QuantumAffine => "quantum_affine".into(),
            AlgebraKind::Weyl => "weyl".into(),
            AlgebraKind::PbwWeighted => "pbw_weighted".into(),
            AlgebraKind::Catalog(e) => format!("catalog:{}", e.id()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: MultiDegree,
}

/// Exponent vector over the generators, in normal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalMonomial(pub Vec<u32>);

impl NormalMonomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        NormalMonomial(exponents)
    }

    pub fn one(num_generators: usize) -> Self {
        NormalMonomial(vec![0; num_generators])
    }

    /// The single generator `x_index`.
    pub fn generator(num_generators: usize, index: usize) -> Self {
        let mut e = vec![0; num_generators];
        e[index] = 1;
        NormalMonomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.0.iter().zip(weights).map(|(&e, w)| e as u64 * w).sum()
    }

    pub fn divides(&self, other: &NormalMonomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &NormalMonomial) -> NormalMonomial {
        NormalMonomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn mul(&self, other: &NormalMonomial) -> NormalMonomial {
        NormalMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if factors.is_empty() {
            "1".into()
        } else {
            factors.join("*")
        }
    }
}

/// Drop generators divisible by another generator and sort; the result
/// generates the same monomial ideal.
pub fn minimalize(ideal: &[NormalMonomial]) -> Vec<NormalMonomial> {
    let mut gens: Vec<NormalMonomial> = ideal.to_vec();
    gens.sort();
    gens.dedup();
    let keep: Vec<NormalMonomial> = gens
        .iter()
        .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
        .cloned()
        .collect();
    keep
}

/// Linear combination of normal monomials with nonzero rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinearCombo {
    terms: BTreeMap<NormalMonomial, BigRational>,
}

impl LinearCombo {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(m: NormalMonomial, c: BigRational) -> Self {
        let mut out = Self::default();
        out.add_term(m, c);
        out
    }

    pub fn add_term(&mut self, m: NormalMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &NormalMonomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalMonomial, &BigRational)> {
        self.terms.iter()
    }
}

/// `x_upper x_lower = leading * x_lower x_upper + tail`, with `upper > lower`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub upper: usize,
    pub lower: usize,
    pub leading: BigRational,
    pub tail: LinearCombo,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub kind: AlgebraKind,
    pub generators: Vec<Generator>,
    /// `lambda[i][j]` with `x_i x_j = lambda[i][j] x_j x_i` (quantum affine).
    pub lambda: Option<Vec<Vec<BigRational>>>,
    /// `n` for `W_n`; zero otherwise.
    pub weyl_rank: usize,
    /// Explicit rewrite rules (weighted PBW only). Pairs without a rule commute.
    pub relations: Vec<Relation>,
}

fn invalid(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::InvalidSpec {
        path: path.into(),
        message: message.into(),
    }
}

fn unit_generators(names: impl IntoIterator<Item = String>) -> Vec<Generator> {
    names
        .into_iter()
        .map(|name| Generator {
            name,
            degree: MultiDegree::scalar(1),
        })
        .collect()
}

impl AlgebraSpec {
    /// `k[x_1..x_d]` with unit degrees. `d = 0` is the base field.
    pub fn polynomial(d: usize) -> Self {
        AlgebraSpec {
            kind: AlgebraKind::Polynomial,
            generators: unit_generators((1..=d).map(|i| format!("x{i}"))),
            lambda: None,
            weyl_rank: 0,
            relations: Vec::new(),
        }
    }

    pub fn base_field() -> Self {
        Self::polynomial(0)
    }

    /// Polynomial ring whose `i`-th generator has degree `weights[i]`.
    pub fn polynomial_weighted(weights: &[u64]) -> Result<Self> {
        let mut a = Self::polynomial(weights.len());
        for (g, &w) in a.generators.iter_mut().zip(weights) {
            g.degree = MultiDegree::scalar(w);
        }
        a.validate()?;
        Ok(a)
    }

    /// `W_n` with the Bernstein filtration.
    pub fn weyl(n: usize) -> Self {
        let names = (1..=n)
            .map(|i| format!("x{i}"))
            .chain((1..=n).map(|i| format!("y{i}")));
        AlgebraSpec {
            kind: AlgebraKind::Weyl,
            generators: unit_generators(names),
            lambda: None,
            weyl_rank: n,
            relations: Vec::new(),
        }
    }

    pub fn quantum_affine(lambda: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = lambda.len();
        let a = AlgebraSpec {
            kind: AlgebraKind::QuantumAffine,
            generators: unit_generators((1..=n).map(|i| format!("x{i}"))),
            lambda: Some(lambda),
            weyl_rank: 0,
            relations: Vec::new(),
        };
        a.validate()?;
        Ok(a)
    }

    pub fn pbw_weighted(generators: Vec<Generator>, relations: Vec<Relation>) -> Result<Self> {
        let a = AlgebraSpec {
            kind: AlgebraKind::PbwWeighted,
            generators,
            lambda: None,
            weyl_rank: 0,
            relations,
        };
        a.validate()?;
        Ok(a)
    }

    pub fn catalog(entry: CatalogEntry) -> Self {
        AlgebraSpec {
            kind: AlgebraKind::Catalog(entry),
            generators: Vec::new(),
            lambda: None,
            weyl_rank: 0,
            relations: Vec::new(),
        }
    }

    /// Replace the generator degrees (one per generator).
    pub fn with_degrees(mut self, degrees: Vec<MultiDegree>) -> Result<Self> {
        if degrees.len() != self.generators.len() {
            return Err(invalid(
                "algebra.generators",
                format!("expected {} degrees, got {}", self.generators.len(), degrees.len()),
            ));
        }
        for (g, d) in self.generators.iter_mut().zip(degrees) {
            g.degree = d;
        }
        self.validate()?;
        Ok(self)
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Number of components in the generator degrees (1 for an N-filtration).
    pub fn arity(&self) -> usize {
        self.generators.first().map_or(1, |g| g.degree.arity())
    }

    /// N-valued generator weights: the total of each multidegree.
    pub fn weights(&self) -> Vec<u64> {
        self.generators.iter().map(|g| g.degree.total()).collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    pub fn is_catalog(&self) -> Option<CatalogEntry> {
        match self.kind {
            AlgebraKind::Catalog(e) => Some(e),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.is_catalog().is_some() {
            if !self.generators.is_empty() {
                return Err(invalid("algebra.generators", "catalog algebras take no generators"));
            }
            return Ok(());
        }
        let n = self.generators.len();
        let arity = self.arity();
        for (i, g) in self.generators.iter().enumerate() {
            let path = format!("algebra.generators[{}]", i + 1);
            if g.name.is_empty() {
                return Err(invalid(format!("{path}.name"), "generator name is empty"));
            }
            if self.generators[..i].iter().any(|h| h.name == g.name) {
                return Err(invalid(format!("{path}.name"), format!("duplicate name {}", g.name)));
            }
            if g.degree.arity() == 0 || g.degree.arity() != arity {
                return Err(invalid(
                    format!("{path}.degree"),
                    format!("expected {arity} components"),
                ));
            }
            if g.degree.is_zero() {
                return Err(invalid(format!("{path}.degree"), "generator degree must be nonzero"));
            }
        }
        match self.kind {
            AlgebraKind::Weyl if n != 2 * self.weyl_rank => {
                return Err(invalid(
                    "algebra.generators",
                    format!("weyl rank {} needs {} generators, got {n}", self.weyl_rank, 2 * self.weyl_rank),
                ));
            }
            AlgebraKind::QuantumAffine => self.validate_lambda()?,
            AlgebraKind::PbwWeighted => self.validate_relations()?,
            _ => {}
        }
        if self.kind != AlgebraKind::QuantumAffine && self.lambda.is_some() {
            return Err(invalid("algebra.lambda", "lambda is only meaningful for quantum_affine"));
        }
        if self.kind != AlgebraKind::PbwWeighted && !self.relations.is_empty() {
            return Err(invalid("algebra.relations", "relations are only meaningful for pbw_weighted"));
        }
        Ok(())
    }

    fn validate_lambda(&self) -> Result<()> {
        let n = self.generators.len();
        let Some(lambda) = &self.lambda else {
            return Err(invalid("algebra.lambda", "quantum_affine requires lambda"));
        };
        if lambda.len() != n {
            return Err(invalid("algebra.lambda", format!("expected {n} rows, got {}", lambda.len())));
        }
        for (i, row) in lambda.iter().enumerate() {
            if row.len() != n {
                return Err(invalid(
                    format!("algebra.lambda[{}]", i + 1),
                    format!("expected {n} entries, got {}", row.len()),
                ));
            }
            for (j, v) in row.iter().enumerate() {
                if v.is_zero() {
                    return Err(invalid(format!("algebra.lambda[{}][{}]", i + 1, j + 1), "entry must be nonzero"));
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                if &lambda[i][j] * &lambda[j][i] != BigRational::one() {
                    return Err(invalid(
                        format!("algebra.lambda[{}][{}]", i + 1, j + 1),
                        format!("lambda[{}][{}] * lambda[{}][{}] must equal 1", i + 1, j + 1, j + 1, i + 1),
                    ));
                }
            }
        }
        Ok(())
    }

    fn validate_relations(&self) -> Result<()> {
        let n = self.generators.len();
        let mut seen = Vec::new();
        for (k, r) in self.relations.iter().enumerate() {
            let path = format!("algebra.relations[{}]", k + 1);
            if r.upper >= n || r.lower >= n {
                return Err(invalid(format!("{path}.lhs"), "generator index out of range"));
            }
            if r.upper <= r.lower {
                return Err(invalid(
                    format!("{path}.lhs"),
                    "left-hand side must be x_j x_i with j after i in the normal order",
                ));
            }
            if seen.contains(&(r.upper, r.lower)) {
                return Err(invalid(format!("{path}.lhs"), "duplicate rule for this pair"));
            }
            seen.push((r.upper, r.lower));
            if r.leading.is_zero() {
                return Err(invalid(format!("{path}.leading"), "leading coefficient must be nonzero"));
            }
            if r.tail.terms().any(|(m, _)| m.len() != n) {
                return Err(invalid(format!("{path}.lower"), format!("monomials need {n} exponents")));
            }
        }
        Ok(())
    }

    /// Commutation rule for every pair of generators (`upper > lower`),
    /// including the implicit ones.
    pub fn effective_relations(&self) -> Vec<Relation> {
        let n = self.generators.len();
        let mut out = Vec::new();
        for upper in 0..n {
            for lower in 0..upper {
                let explicit = self
                    .relations
                    .iter()
                    .find(|r| r.upper == upper && r.lower == lower);
                if let Some(r) = explicit {
                    out.push(r.clone());
                    continue;
                }
                let leading = match (&self.kind, &self.lambda) {
                    (AlgebraKind::QuantumAffine, Some(l)) => l[upper][lower].clone(),
                    _ => BigRational::one(),
                };
                let mut tail = LinearCombo::zero();
                if self.kind == AlgebraKind::Weyl && upper == lower + self.weyl_rank {
                    tail.add_term(NormalMonomial::one(n), BigRational::one());
                }
                out.push(Relation {
                    upper,
                    lower,
                    leading,
                    tail,
                });
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    /// Filtration degree of the summand's generator.
    pub shift: u64,
    pub ideal: Vec<NormalMonomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    pub summands: Vec<Summand>,
    /// Adds a two-sided rank-one part (like `k[x, x^-1]` filtered by
    /// `B_j x^-c`) whose layer `j` has dimension `2j + 1`. The value is `c`.
    pub negative_shift: Option<u64>,
}

impl ModuleSpec {
    pub fn regular() -> Self {
        Self::cyclic(Vec::new())
    }

    pub fn cyclic(ideal: Vec<NormalMonomial>) -> Self {
        ModuleSpec {
            summands: vec![Summand { shift: 0, ideal }],
            negative_shift: None,
        }
    }

    /// `k[x, x^-1]` over `W_1`, filtered by `B_j x^-1`.
    pub fn laurent() -> Self {
        ModuleSpec {
            summands: Vec::new(),
            negative_shift: Some(1),
        }
    }

    pub fn direct_sum(summands: Vec<Summand>) -> Self {
        ModuleSpec {
            summands,
            negative_shift: None,
        }
    }

    pub fn validate(&self, algebra: &AlgebraSpec) -> Result<()> {
        if self.summands.is_empty() && self.negative_shift.is_none() {
            return Err(invalid("module.summands", "module needs at least one summand"));
        }
        if algebra.is_catalog().is_some() && *self != ModuleSpec::regular() {
            return Err(invalid("module", "catalog algebras only support the regular module"));
        }
        let n = algebra.num_generators();
        for (i, s) in self.summands.iter().enumerate() {
            for (j, m) in s.ideal.iter().enumerate() {
                if m.len() != n {
                    return Err(invalid(
                        format!("module.summands[{}].ideal[{}]", i + 1, j + 1),
                        format!("monomial needs {n} exponents, got {}", m.len()),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// True iff every relation's lower-order terms have strictly smaller
/// collapsed weight than its leading q-commutator, so the associated graded
/// algebra for the weights `<w, deg>` is a quantum affine space.
pub fn check_semicommutative_leading(algebra: &AlgebraSpec, collapse: &[u64]) -> Result<bool> {
    if algebra.is_catalog().is_some() {
        return Ok(false);
    }
    if collapse.len() != algebra.arity() {
        return Err(Error::DimensionMismatch {
            expected: algebra.arity(),
            got: collapse.len(),
        });
    }
    let weights: Vec<u64> = algebra.generators.iter().map(|g| g.degree.dot(collapse)).collect();
    Ok(algebra.effective_relations().iter().all(|r| {
        let lead = weights[r.upper] + weights[r.lower];
        !r.leading.is_zero() && r.tail.terms().all(|(m, _)| m.weighted_degree(&weights) < lead)
    }))
}

/// Collapse multidegrees to N-degrees `<w, deg>`, after checking that the
/// collapse keeps the associated graded algebra semi-commutative.
pub fn refilter(algebra: &AlgebraSpec, weights: &[u64]) -> Result<AlgebraSpec> {
    if weights.is_empty() || weights.contains(&0) {
        return Err(Error::NonPositiveWeight);
    }
    if algebra.is_catalog().is_some() {
        return Err(Error::UnsupportedKind {
            kind: algebra.kind.name(),
        });
    }
    if weights.len() != algebra.arity() {
        return Err(Error::DimensionMismatch {
            expected: algebra.arity(),
            got: weights.len(),
        });
    }
    let collapsed: Vec<u64> = algebra.generators.iter().map(|g| g.degree.dot(weights)).collect();
    for (k, r) in algebra.effective_relations().iter().enumerate() {
        let lead = collapsed[r.upper] + collapsed[r.lower];
        if r.leading.is_zero() || r.tail.terms().any(|(m, _)| m.weighted_degree(&collapsed) >= lead) {
            return Err(Error::LeadingTermViolation { relation: k });
        }
    }
    let mut out = algebra.clone();
    for (g, w) in out.generators.iter_mut().zip(collapsed) {
        g.degree = MultiDegree::scalar(w);
    }
    Ok(out)
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            AlgebraKind::Weyl => write!(f, "W_{}", self.weyl_rank),
            AlgebraKind::Catalog(e) => write!(f, "{e}"),
            _ => {
                let gens: Vec<String> = self
                    .generators
                    .iter()
                    .map(|g| format!("{}:{}", g.name, g.degree))
                    .collect();
                write!(f, "{}[{}]", self.kind.name(), gens.join(", "))
            }
        }
    }
}

/// Convenience for building rationals in presentations.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> BigRational {
        ratio(2, 3)
    }

    fn quantum_plane() -> AlgebraSpec {
        AlgebraSpec::quantum_affine(vec![
            vec![ratio(1, 1), q().recip()],
            vec![q(), ratio(1, 1)],
        ])
        .unwrap()
    }

    #[test]
    fn weyl_needs_even_generator_count() {
        let mut w = AlgebraSpec::weyl(2);
        w.generators.pop();
        assert!(matches!(w.validate(), Err(Error::InvalidSpec { .. })));
        assert!(AlgebraSpec::weyl(3).validate().is_ok());
    }

    #[test]
    fn lambda_product_must_be_one() {
        let bad = AlgebraSpec::quantum_affine(vec![
            vec![ratio(1, 1), ratio(2, 3)],
            vec![ratio(2, 3), ratio(1, 1)],
        ]);
        match bad {
            Err(Error::InvalidSpec { path, .. }) => assert_eq!(path, "algebra.lambda[2][1]"),
            other => panic!("unexpected {other:?}"),
        }
        let zero = AlgebraSpec::quantum_affine(vec![vec![ratio(0, 1)]]);
        assert!(matches!(zero, Err(Error::InvalidSpec { .. })));
    }

    #[test]
    fn zero_degree_generator_rejected() {
        let a = AlgebraSpec::polynomial(2).with_degrees(vec![MultiDegree::scalar(1), MultiDegree::scalar(0)]);
        assert!(matches!(a, Err(Error::InvalidSpec { .. })));
    }

    #[test]
    fn weyl_relations_under_bernstein_weights() {
        let w = AlgebraSpec::weyl(1);
        assert!(check_semicommutative_leading(&w, &[1]).unwrap());
        let rels = w.effective_relations();
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].tail.coefficient(&NormalMonomial::one(2)), ratio(1, 1));
    }

    #[test]
    fn pure_q_commutation_is_semicommutative() {
        assert!(check_semicommutative_leading(&quantum_plane(), &[1]).unwrap());
    }

    #[test]
    fn equal_weight_tail_is_rejected() {
        // x2 x1 = x1 x2 + x1 x2
        let tail = LinearCombo::term(NormalMonomial::new(vec![1, 1]), ratio(1, 1));
        let gens = unit_generators(["x1".to_string(), "x2".to_string()]);
        let a = AlgebraSpec::pbw_weighted(
            gens,
            vec![Relation {
                upper: 1,
                lower: 0,
                leading: ratio(1, 1),
                tail,
            }],
        )
        .unwrap();
        assert!(!check_semicommutative_leading(&a, &[1]).unwrap());
        assert_eq!(refilter(&a, &[1]), Err(Error::LeadingTermViolation { relation: 0 }));
    }

    #[test]
    fn refilter_quantum_plane() {
        let a = quantum_plane()
            .with_degrees(vec![MultiDegree::new(vec![1, 0]), MultiDegree::new(vec![0, 1])])
            .unwrap();
        let r = refilter(&a, &[1, 1]).unwrap();
        assert_eq!(r.weights(), vec![1, 1]);
        assert_eq!(r.arity(), 1);
    }

    #[test]
    fn refilter_polynomial_weights() {
        let a = AlgebraSpec::polynomial(2)
            .with_degrees(vec![MultiDegree::new(vec![1, 0]), MultiDegree::new(vec![0, 1])])
            .unwrap();
        let r = refilter(&a, &[2, 3]).unwrap();
        assert_eq!(r.weights(), vec![2, 3]);
        assert_eq!(refilter(&a, &[0, 3]), Err(Error::NonPositiveWeight));
        assert!(matches!(refilter(&a, &[1]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn refilter_pbw_rule_with_lower_term() {
        // x2 x1 = q x1 x2 + x2, degrees (1,0), (0,1)
        let gens = vec![
            Generator {
                name: "x1".into(),
                degree: MultiDegree::new(vec![1, 0]),
            },
            Generator {
                name: "x2".into(),
                degree: MultiDegree::new(vec![0, 1]),
            },
        ];
        let rule = Relation {
            upper: 1,
            lower: 0,
            leading: q(),
            tail: LinearCombo::term(NormalMonomial::new(vec![0, 1]), ratio(1, 1)),
        };
        let a = AlgebraSpec::pbw_weighted(gens, vec![rule]).unwrap();
        assert!(check_semicommutative_leading(&a, &[1, 1]).unwrap());
        let r = refilter(&a, &[1, 1]).unwrap();
        assert_eq!(r.weights(), vec![1, 1]);
    }

    #[test]
    fn pbw_rule_validation() {
        let gens = unit_generators(["a".to_string(), "b".to_string()]);
        let backwards = Relation {
            upper: 0,
            lower: 1,
            leading: ratio(1, 1),
            tail: LinearCombo::zero(),
        };
        assert!(AlgebraSpec::pbw_weighted(gens, vec![backwards]).is_err());
    }

    #[test]
    fn minimalize_drops_multiples() {
        let ideal = vec![
            NormalMonomial::new(vec![2, 1]),
            NormalMonomial::new(vec![1, 0]),
            NormalMonomial::new(vec![0, 3]),
            NormalMonomial::new(vec![1, 0]),
        ];
        assert_eq!(
            minimalize(&ideal),
            vec![NormalMonomial::new(vec![0, 3]), NormalMonomial::new(vec![1, 0])]
        );
    }

    #[test]
    fn module_validation() {
        let a = AlgebraSpec::polynomial(2);
        assert!(ModuleSpec::regular().validate(&a).is_ok());
        let bad = ModuleSpec::cyclic(vec![NormalMonomial::new(vec![1])]);
        assert!(bad.validate(&a).is_err());
        let empty = ModuleSpec::direct_sum(Vec::new());
        assert!(empty.validate(&a).is_err());
        assert!(ModuleSpec::laurent().validate(&AlgebraSpec::weyl(1)).is_ok());
    }

    #[test]
    fn monomial_display() {
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(NormalMonomial::new(vec![2, 1]).display_with(&names), "x^2*y");
        assert_eq!(NormalMonomial::one(2).display_with(&names), "1");
    }
}
