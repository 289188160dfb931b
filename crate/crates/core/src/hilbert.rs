//! Hilbert functions and Hilbert series of monomial quotients.
//!
//! Every count here is of standard monomials: normal monomials not divisible
//! by any generator of a monomial ideal of the associated graded algebra.
//! Small ranges are enumerated directly; large ones go through the
//! Hilbert-series numerator and a knapsack count of all monomials.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{rat_from_uint, BigRational, Polynomial};
use crate::poincare::RationalSeries;
use crate::presentations::{minimalize, AlgebraSpec, ModuleSpec, NormalMonomial};

/// Above this many monomials in the requested range, counts come from the
/// series numerator instead of enumeration.
pub const ENUMERATION_LIMIT: u64 = 1_000_000;

/// Generator count up to which the numerator is computed by inclusion-exclusion.
pub const INCLUSION_EXCLUSION_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// `dim M_n / M_{n-1}`
    GradedPiece,
    /// `dim M_n`
    Cumulative,
}

/// Exact prefix `f(0..=N)` of a dimension function.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DimensionSequence {
    pub values: Vec<BigUint>,
    pub kind: SequenceKind,
}

impl DimensionSequence {
    pub fn cumulative(values: Vec<BigUint>) -> Self {
        DimensionSequence {
            values,
            kind: SequenceKind::Cumulative,
        }
    }

    pub fn graded(values: Vec<BigUint>) -> Self {
        DimensionSequence {
            values,
            kind: SequenceKind::GradedPiece,
        }
    }

    pub fn from_u64s(values: &[u64], kind: SequenceKind) -> Self {
        DimensionSequence {
            values: values.iter().map(|&v| BigUint::from(v)).collect(),
            kind,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Running sums if this is a graded sequence; otherwise a copy.
    pub fn to_cumulative(&self) -> DimensionSequence {
        match self.kind {
            SequenceKind::Cumulative => self.clone(),
            SequenceKind::GradedPiece => {
                let mut acc = BigUint::zero();
                let values = self
                    .values
                    .iter()
                    .map(|v| {
                        acc += v;
                        acc.clone()
                    })
                    .collect();
                DimensionSequence::cumulative(values)
            }
        }
    }

    /// Successive differences of a cumulative sequence. `None` if the
    /// cumulative sequence ever decreases.
    pub fn to_graded(&self) -> Option<DimensionSequence> {
        match self.kind {
            SequenceKind::GradedPiece => Some(self.clone()),
            SequenceKind::Cumulative => {
                let mut prev = BigUint::zero();
                let mut out = Vec::with_capacity(self.values.len());
                for v in &self.values {
                    if v < &prev {
                        return None;
                    }
                    out.push(v - &prev);
                    prev = v.clone();
                }
                Some(DimensionSequence::graded(out))
            }
        }
    }

    pub fn as_rationals(&self) -> Vec<BigRational> {
        self.values.iter().map(rat_from_uint).collect()
    }

    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.values.iter().map(ToPrimitive::to_u64).collect()
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] <= w[1])
    }
}

/// `ways[n]` = number of exponent vectors with `sum e_i w_i = n`.
pub fn monomial_counts(weights: &[u64], max: usize) -> Vec<BigUint> {
    let mut ways = vec![BigUint::zero(); max + 1];
    ways[0] = BigUint::one();
    for &w in weights {
        let w = w as usize;
        if w == 0 || w > max {
            continue;
        }
        for n in w..=max {
            let add = ways[n - w].clone();
            ways[n] += add;
        }
    }
    ways
}

fn total_monomials(weights: &[u64], max: usize) -> BigUint {
    monomial_counts(weights, max).into_iter().sum()
}

/// Numerator `K(t)` of the Hilbert series `K(t) / prod (1 - t^{w_i})` of
/// `k[x]/I`, by inclusion-exclusion over subsets of the minimal generators:
/// `K = sum_S (-1)^{|S|} t^{deg lcm S}`.
pub fn numerator_inclusion_exclusion(ideal: &[NormalMonomial], weights: &[u64]) -> Polynomial {
    let gens = minimalize(ideal);
    let mut acc: Vec<BigInt> = Vec::new();
    fn walk(
        gens: &[NormalMonomial],
        start: usize,
        current: &NormalMonomial,
        odd: bool,
        weights: &[u64],
        acc: &mut Vec<BigInt>,
    ) {
        for i in start..gens.len() {
            let next = current.lcm(&gens[i]);
            let d = next.weighted_degree(weights) as usize;
            if acc.len() <= d {
                acc.resize(d + 1, BigInt::zero());
            }
            if odd {
                acc[d] += 1;
            } else {
                acc[d] -= 1;
            }
            walk(gens, i + 1, &next, !odd, weights, acc);
        }
    }
    acc.push(BigInt::one());
    let one = NormalMonomial::one(weights.len());
    walk(&gens, 0, &one, false, weights, &mut acc);
    Polynomial::from_bigints(&acc)
}

/// Same numerator by pivot recursion:
/// `K(I) = K(I + (x_v)) + t^{w_v} K(I : x_v)`, with the most frequent
/// variable as pivot and coprime generators as the base case.
pub fn numerator_pivot(ideal: &[NormalMonomial], weights: &[u64]) -> Polynomial {
    let gens = minimalize(ideal);
    if gens.is_empty() {
        return Polynomial::one();
    }
    if gens.iter().any(NormalMonomial::is_one) {
        return Polynomial::zero();
    }
    let n = weights.len();
    let mut freq = vec![0usize; n];
    for g in &gens {
        for (v, &e) in g.0.iter().enumerate() {
            if e > 0 {
                freq[v] += 1;
            }
        }
    }
    let (pivot, &count) = freq
        .iter()
        .enumerate()
        .max_by_key(|&(v, c)| (c, std::cmp::Reverse(v)))
        .expect("at least one variable");
    if count <= 1 {
        return gens.iter().fold(Polynomial::one(), |acc, g| {
            &acc * &Polynomial::one_minus_power(g.weighted_degree(weights) as usize)
        });
    }
    let x = NormalMonomial::generator(n, pivot);
    let mut plus: Vec<NormalMonomial> = gens.iter().filter(|g| g.0[pivot] == 0).cloned().collect();
    plus.push(x);
    let colon: Vec<NormalMonomial> = gens
        .iter()
        .map(|g| {
            let mut e = g.0.clone();
            e[pivot] = e[pivot].saturating_sub(1);
            NormalMonomial(e)
        })
        .collect();
    let left = numerator_pivot(&plus, weights);
    let right = numerator_pivot(&colon, weights).shift(weights[pivot] as usize);
    &left + &right
}

pub fn hilbert_numerator(ideal: &[NormalMonomial], weights: &[u64]) -> Polynomial {
    if minimalize(ideal).len() <= INCLUSION_EXCLUSION_LIMIT {
        numerator_inclusion_exclusion(ideal, weights)
    } else {
        numerator_pivot(ideal, weights)
    }
}

/// `prod (1 - t^{w_i})`
pub fn denominator_for(weights: &[u64]) -> Polynomial {
    weights.iter().fold(Polynomial::one(), |acc, &w| {
        &acc * &Polynomial::one_minus_power(w as usize)
    })
}

/// Depth-first walk over the monomials of weighted degree `<= max` that avoid
/// `avoid`, pruning a branch as soon as its partial monomial is divisible.
fn enumerate_standard(
    weights: &[u64],
    avoid: &[NormalMonomial],
    max: u64,
    visit: &mut dyn FnMut(&[u32], u64),
) {
    let n = weights.len();
    let avoid = minimalize(avoid);
    if avoid.iter().any(NormalMonomial::is_one) {
        return;
    }
    // generators grouped by their last variable: those are decided at that level
    let mut by_last: Vec<Vec<&NormalMonomial>> = vec![Vec::new(); n];
    for g in &avoid {
        if let Some(last) = g.0.iter().rposition(|&e| e > 0) {
            by_last[last].push(g);
        }
    }
    let mut exps = vec![0u32; n];
    fn rec(
        level: usize,
        deg: u64,
        exps: &mut Vec<u32>,
        weights: &[u64],
        by_last: &[Vec<&NormalMonomial>],
        max: u64,
        visit: &mut dyn FnMut(&[u32], u64),
    ) {
        if level == weights.len() {
            visit(exps, deg);
            return;
        }
        let w = weights[level];
        let mut e = 0u32;
        loop {
            let d = deg + e as u64 * w;
            if d > max {
                break;
            }
            exps[level] = e;
            if by_last[level].iter().any(|g| g.0.iter().zip(exps.iter()).all(|(a, b)| a <= b)) {
                break;
            }
            rec(level + 1, d, exps, weights, by_last, max, visit);
            e += 1;
        }
        exps[level] = 0;
    }
    rec(0, 0, &mut exps, weights, &by_last, max, visit);
}

fn enumeration_feasible(weights: &[u64], max: usize) -> bool {
    total_monomials(weights, max) <= BigUint::from(ENUMERATION_LIMIT)
}

fn counts_by_enumeration(weights: &[u64], ideal: &[NormalMonomial], max: usize) -> Vec<BigUint> {
    let mut counts = vec![0u64; max + 1];
    enumerate_standard(weights, ideal, max as u64, &mut |_, d| counts[d as usize] += 1);
    counts.into_iter().map(BigUint::from).collect()
}

fn counts_by_series(weights: &[u64], ideal: &[NormalMonomial], max: usize) -> Vec<BigUint> {
    let numerator = hilbert_numerator(ideal, weights);
    let ways = monomial_counts(weights, max);
    (0..=max)
        .map(|n| {
            let mut acc = BigInt::zero();
            for (k, c) in numerator.coeffs().iter().enumerate().take(n + 1) {
                acc += c.to_integer() * BigInt::from(ways[n - k].clone());
            }
            acc.to_biguint().expect("standard monomial count is nonnegative")
        })
        .collect()
}

fn check_ideal(algebra: &AlgebraSpec, ideal: &[NormalMonomial]) -> Result<()> {
    if let Some(entry) = algebra.is_catalog() {
        if !ideal.is_empty() {
            return Err(Error::UnsupportedKind {
                kind: format!("catalog:{} with a nonzero ideal", entry.id()),
            });
        }
    }
    let n = algebra.num_generators();
    match ideal.iter().position(|m| m.len() != n) {
        Some(i) => Err(Error::InvalidSpec {
            path: format!("ideal[{}]", i + 1),
            message: format!("monomial needs {n} exponents"),
        }),
        None => Ok(()),
    }
}

/// Graded pieces `0..=max` of the quotient of the associated graded algebra
/// by a monomial ideal.
pub fn graded_piece_dims(algebra: &AlgebraSpec, ideal: &[NormalMonomial], max: usize) -> Result<Vec<BigUint>> {
    check_ideal(algebra, ideal)?;
    if let Some(entry) = algebra.is_catalog() {
        return Ok(entry.graded_dims(max));
    }
    let weights = algebra.weights();
    if ideal.is_empty() {
        return Ok(monomial_counts(&weights, max));
    }
    if enumeration_feasible(&weights, max) {
        Ok(counts_by_enumeration(&weights, ideal, max))
    } else {
        Ok(counts_by_series(&weights, ideal, max))
    }
}

pub fn graded_piece_dim(algebra: &AlgebraSpec, ideal: &[NormalMonomial], n: usize) -> Result<BigUint> {
    Ok(graded_piece_dims(algebra, ideal, n)?.pop().expect("nonempty"))
}

/// Graded pieces of `J/I` (monomials in `J` but not in `I`).
pub fn relative_graded_dims(
    algebra: &AlgebraSpec,
    ideal: &[NormalMonomial],
    sub_ideal: &[NormalMonomial],
    max: usize,
) -> Result<Vec<BigUint>> {
    check_ideal(algebra, ideal)?;
    check_ideal(algebra, sub_ideal)?;
    let weights = algebra.weights();
    if enumeration_feasible(&weights, max) {
        let mut counts = vec![0u64; max + 1];
        enumerate_standard(&weights, ideal, max as u64, &mut |e, d| {
            if sub_ideal.iter().any(|g| g.0.iter().zip(e).all(|(a, b)| a <= b)) {
                counts[d as usize] += 1;
            }
        });
        return Ok(counts.into_iter().map(BigUint::from).collect());
    }
    let big = counts_by_series(&weights, ideal, max);
    let small = counts_by_series(&weights, sub_ideal, max);
    Ok(big.into_iter().zip(small).map(|(a, b)| a - b).collect())
}

fn running_sum(pieces: &[BigUint]) -> Vec<BigUint> {
    let mut acc = BigUint::zero();
    pieces
        .iter()
        .map(|v| {
            acc += v;
            acc.clone()
        })
        .collect()
}

/// `dim M_n` for `n = 0..=max`.
pub fn module_dim_sequence(algebra: &AlgebraSpec, module: &ModuleSpec, max: usize) -> Result<DimensionSequence> {
    module.validate(algebra)?;
    let mut values = vec![BigUint::zero(); max + 1];
    for s in &module.summands {
        let shift = s.shift as usize;
        if shift > max {
            continue;
        }
        let pieces = graded_piece_dims(algebra, &s.ideal, max - shift)?;
        for (k, v) in running_sum(&pieces).into_iter().enumerate() {
            values[k + shift] += v;
        }
    }
    if module.negative_shift.is_some() {
        for (j, v) in values.iter_mut().enumerate() {
            *v += BigUint::from(2 * j as u64 + 1);
        }
    }
    Ok(DimensionSequence::cumulative(values))
}

pub fn algebra_dim_sequence(algebra: &AlgebraSpec, max: usize) -> Result<DimensionSequence> {
    module_dim_sequence(algebra, &ModuleSpec::regular(), max)
}

/// `dim F_i`: normal monomials of weighted degree at most `i`.
pub fn filtration_layer_dim(algebra: &AlgebraSpec, i: usize) -> BigUint {
    let pieces = match algebra.is_catalog() {
        Some(entry) => entry.graded_dims(i),
        None => monomial_counts(&algebra.weights(), i),
    };
    pieces.into_iter().sum()
}

/// Closed-form Hilbert series `K(t) / prod (1 - t^{w_i})` of the quotient of
/// the associated graded algebra by a monomial ideal. The result is left
/// unreduced so the denominator is exactly the product over generators.
///
/// The expansion is checked against the direct count for every degree up to
/// `2 * (sum of generator degrees) + 10`; when that range is too large to
/// enumerate, the inclusion-exclusion and pivot numerators are compared
/// instead.
pub fn hilbert_series_monomial_quotient(algebra: &AlgebraSpec, ideal: &[NormalMonomial]) -> Result<RationalSeries> {
    if algebra.is_catalog().is_some() {
        return Err(Error::UnsupportedKind {
            kind: algebra.kind.name(),
        });
    }
    check_ideal(algebra, ideal)?;
    let weights = algebra.weights();
    let numerator = hilbert_numerator(ideal, &weights);
    let series = RationalSeries::new(numerator.clone(), denominator_for(&weights))?;

    let bound = 2 * ideal.iter().map(|m| m.weighted_degree(&weights) as usize).sum::<usize>() + 10;
    if ideal.is_empty() || enumeration_feasible(&weights, bound) {
        let direct = graded_piece_dims(algebra, ideal, bound)?;
        let expanded = series.expand(bound + 1);
        for (n, (a, b)) in expanded.iter().zip(&direct).enumerate() {
            if *a != rat_from_uint(b) {
                return Err(Error::Internal(format!(
                    "Hilbert series disagrees with the monomial count at degree {n}"
                )));
            }
        }
    } else if minimalize(ideal).len() <= INCLUSION_EXCLUSION_LIMIT
        && numerator != numerator_pivot(ideal, &weights)
    {
        return Err(Error::Internal("numerator routes disagree".into()));
    }
    Ok(series)
}

/// Hilbert series of a module: shifted summand series plus `(1+t)/(1-t)`
/// for the two-sided part.
pub fn module_hilbert_series(algebra: &AlgebraSpec, module: &ModuleSpec) -> Result<RationalSeries> {
    module.validate(algebra)?;
    let mut acc = RationalSeries::new(Polynomial::zero(), Polynomial::one())?;
    for s in &module.summands {
        let part = hilbert_series_monomial_quotient(algebra, &s.ideal)?;
        let shifted = RationalSeries::new(part.numerator().shift(s.shift as usize), part.denominator().clone())?;
        acc = acc.add(&shifted);
    }
    if module.negative_shift.is_some() {
        let laurent = RationalSeries::new(Polynomial::from_ints(&[1, 1]), Polynomial::from_ints(&[1, -1]))?;
        acc = acc.add(&laurent);
    }
    Ok(acc)
}
