//! Multidegrees and admissible orders on `N^m`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};

/// A point of `N^m`; componentwise addition is the monoid operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree(pub Vec<u64>);

impl MultiDegree {
    pub fn new(components: Vec<u64>) -> Self {
        MultiDegree(components)
    }

    pub fn zero(m: usize) -> Self {
        MultiDegree(vec![0; m])
    }

    /// The single-component degree `d`.
    pub fn scalar(d: u64) -> Self {
        MultiDegree(vec![d])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn dot(&self, weights: &[u64]) -> u64 {
        self.0.iter().zip(weights).map(|(a, w)| a * w).sum()
    }
}

impl Add for &MultiDegree {
    type Output = MultiDegree;
    fn add(self, rhs: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Something that totally orders `N^m` for a fixed `m`.
pub trait MonomialOrder {
    fn arity(&self) -> usize;
    fn compare(&self, a: &MultiDegree, b: &MultiDegree) -> Result<Ordering>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lexicographic,
    DegreeLexicographic,
    WeightLexicographic,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdmissibleOrder {
    kind: OrderKind,
    arity: usize,
    weight: Option<Vec<u64>>,
}

impl AdmissibleOrder {
    pub fn lex(arity: usize) -> Self {
        AdmissibleOrder {
            kind: OrderKind::Lexicographic,
            arity,
            weight: None,
        }
    }

    pub fn deg_lex(arity: usize) -> Self {
        AdmissibleOrder {
            kind: OrderKind::DegreeLexicographic,
            arity,
            weight: None,
        }
    }

    /// Compare by `<w, alpha>` first, ties broken lexicographically.
    pub fn weight_lex(weight: Vec<u64>) -> Result<Self> {
        if weight.is_empty() || weight.contains(&0) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(AdmissibleOrder {
            kind: OrderKind::WeightLexicographic,
            arity: weight.len(),
            weight: Some(weight),
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn weight(&self) -> Option<&[u64]> {
        self.weight.as_deref()
    }
}

impl MonomialOrder for AdmissibleOrder {
    fn arity(&self) -> usize {
        self.arity
    }

    fn compare(&self, a: &MultiDegree, b: &MultiDegree) -> Result<Ordering> {
        for v in [a, b] {
            if v.arity() != self.arity {
                return Err(Error::DimensionMismatch {
                    expected: self.arity,
                    got: v.arity(),
                });
            }
        }
        let lex = a.0.cmp(&b.0);
        Ok(match self.kind {
            OrderKind::Lexicographic => lex,
            OrderKind::DegreeLexicographic => a.total().cmp(&b.total()).then(lex),
            OrderKind::WeightLexicographic => {
                let w = self.weight.as_deref().unwrap_or_default();
                a.dot(w).cmp(&b.dot(w)).then(lex)
            }
        })
    }
}

pub fn compare<O: MonomialOrder>(order: &O, a: &MultiDegree, b: &MultiDegree) -> Result<Ordering> {
    order.compare(a, b)
}

/// A witness against admissibility. For a failure of zero-minimality the
/// triple is `(0, beta, 0)` with `beta` ordered below zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub alpha: MultiDegree,
    pub beta: MultiDegree,
    pub gamma: MultiDegree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

fn box_points(arity: usize, bound: u64) -> Vec<MultiDegree> {
    let mut out = vec![MultiDegree::zero(arity)];
    for i in 0..arity {
        let mut next = Vec::with_capacity(out.len() * (bound as usize + 1));
        for p in &out {
            for v in 0..=bound {
                let mut q = p.clone();
                q.0[i] = v;
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Exhaustively test zero-minimality, antisymmetry and translation
/// invariance (`a < b` implies `a+g <= b+g`) over every vector with
/// components at most `samples`. Stops at the first violation.
pub fn check_admissibility<O: MonomialOrder>(order: &O, samples: u64) -> AdmissibilityReport {
    let arity = order.arity();
    let points = box_points(arity, samples);
    let zero = MultiDegree::zero(arity);
    let fail = |alpha: &MultiDegree, beta: &MultiDegree, gamma: &MultiDegree| AdmissibilityReport {
        passed: false,
        counterexample: Some(Counterexample {
            alpha: alpha.clone(),
            beta: beta.clone(),
            gamma: gamma.clone(),
        }),
    };

    for p in &points {
        if !p.is_zero() && !matches!(order.compare(&zero, p), Ok(Ordering::Less)) {
            return fail(&zero, p, &zero);
        }
    }
    for a in &points {
        for b in &points {
            let Ok(ab) = order.compare(a, b) else {
                return fail(a, b, &zero);
            };
            let consistent = match order.compare(b, a) {
                Ok(ba) => ba == ab.reverse() && ((ab == Ordering::Equal) == (a == b)),
                Err(_) => false,
            };
            if !consistent {
                return fail(a, b, &zero);
            }
            if ab != Ordering::Less {
                continue;
            }
            for g in &points {
                let shifted = order.compare(&(a + g), &(b + g));
                if !matches!(shifted, Ok(Ordering::Less | Ordering::Equal)) {
                    return fail(a, b, g);
                }
            }
        }
    }
    AdmissibilityReport {
        passed: true,
        counterexample: None,
    }
}
