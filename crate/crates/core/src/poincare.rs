//! Rational generating functions: recurrence detection, denominator
//! structure and quasi-polynomial extraction.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{interpolate, rat, BigRational, Polynomial};
use crate::hilbert::DimensionSequence;

/// `p(t) / q(t)` with `q(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalSeries {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if denominator.coeff(0) != BigRational::one() {
            return Err(Error::BadDenominator);
        }
        Ok(RationalSeries {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    /// First `n` power-series coefficients.
    pub fn expand(&self, n: usize) -> Vec<BigRational> {
        let q = self.denominator.coeffs();
        let mut out: Vec<BigRational> = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.numerator.coeff(k);
            for (i, qi) in q.iter().enumerate().skip(1).take(k) {
                if !qi.is_zero() {
                    c -= qi * &out[k - i];
                }
            }
            out.push(c);
        }
        out
    }

    /// Divide out `gcd(p, q)` and renormalise so that `q(0) = 1`.
    pub fn reduced(&self) -> RationalSeries {
        if self.numerator.is_zero() {
            return RationalSeries {
                numerator: Polynomial::zero(),
                denominator: Polynomial::one(),
            };
        }
        let g = self.numerator.gcd(&self.denominator);
        let p = self.numerator.exact_div(&g).expect("gcd divides numerator");
        let q = self.denominator.exact_div(&g).expect("gcd divides denominator");
        let c = q.coeff(0).recip();
        RationalSeries {
            numerator: p.scale(&c),
            denominator: q.scale(&c),
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.numerator.is_zero() && self.denominator == Polynomial::one()
            || self.numerator.gcd(&self.denominator).degree() == Some(0)
    }

    /// Sum over the product of the denominators; not reduced.
    pub fn add(&self, other: &RationalSeries) -> RationalSeries {
        if self.denominator == other.denominator {
            return RationalSeries {
                numerator: &self.numerator + &other.numerator,
                denominator: self.denominator.clone(),
            };
        }
        RationalSeries {
            numerator: &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator),
            denominator: &self.denominator * &other.denominator,
        }
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// `f(n) = a_1 f(n-1) + ... + a_s f(n-s)` for every sampled `n >= onset + s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Recurrence {
    pub order: usize,
    pub coefficients: Vec<BigRational>,
    pub onset: usize,
}

impl Recurrence {
    fn predicts(&self, f: &[BigRational], n: usize) -> bool {
        let mut acc = BigRational::zero();
        for (i, a) in self.coefficients.iter().enumerate() {
            acc += a * &f[n - i - 1];
        }
        acc == f[n]
    }

    /// `1 - a_1 t - ... - a_s t^s`
    pub fn characteristic(&self) -> Polynomial {
        let mut c = vec![BigRational::one()];
        c.extend(self.coefficients.iter().map(|a| -a));
        Polynomial::new(c)
    }
}

/// Particular solution of `m x = rhs` over the rationals, free variables set
/// to zero. `None` if the system is inconsistent.
fn solve(mut m: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        rhs.swap(r, p);
        let inv = m[r][c].recip();
        for j in c..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        rhs[r] = &rhs[r] * &inv;
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..cols {
                    let sub = &factor * &m[r][j];
                    m[i][j] -= sub;
                }
                let sub = &factor * &rhs[r];
                rhs[i] -= sub;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if rhs[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = rhs[row].clone();
    }
    Some(x)
}

/// Least-order recurrence with rational coefficients. Each candidate order
/// `r` is fitted on the `r` equations just before the final `confirm`
/// entries and must then reproduce every one of those entries exactly.
pub fn minimal_recurrence(s: &DimensionSequence, confirm: usize) -> Result<Option<Recurrence>> {
    minimal_recurrence_of(&s.as_rationals(), confirm)
}

pub fn minimal_recurrence_of(f: &[BigRational], confirm: usize) -> Result<Option<Recurrence>> {
    let len = f.len();
    if confirm == 0 || len < confirm + 2 {
        return Err(Error::SequenceTooShort {
            needed: confirm.max(1) + 2,
            got: len,
        });
    }
    let max_order = (len - confirm) / 2;
    let fit_end = len - confirm;
    for r in 0..=max_order {
        let coefficients = if r == 0 {
            Vec::new()
        } else {
            let rows: Vec<Vec<BigRational>> = (fit_end - r..fit_end)
                .map(|n| (1..=r).map(|i| f[n - i].clone()).collect())
                .collect();
            let rhs: Vec<BigRational> = (fit_end - r..fit_end).map(|n| f[n].clone()).collect();
            match solve(rows, rhs) {
                Some(x) => x,
                None => continue,
            }
        };
        let mut rec = Recurrence {
            order: r,
            coefficients,
            onset: 0,
        };
        if !(fit_end..len).all(|n| rec.predicts(f, n)) {
            continue;
        }
        let mut first = fit_end;
        while first > r && rec.predicts(f, first - 1) {
            first -= 1;
        }
        rec.onset = first - r;
        return Ok(Some(rec));
    }
    Ok(None)
}

/// Generating function of the sample: `q = 1 - sum a_i t^i` and
/// `p = (q F) mod t^{onset + s}`, then reduced.
pub fn series_from_recurrence(s: &DimensionSequence, r: &Recurrence) -> Result<RationalSeries> {
    series_from_recurrence_of(&s.as_rationals(), r)
}

pub fn series_from_recurrence_of(f: &[BigRational], r: &Recurrence) -> Result<RationalSeries> {
    let q = r.characteristic();
    let cut = r.onset + r.order;
    if f.len() < cut {
        return Err(Error::SequenceTooShort {
            needed: cut,
            got: f.len(),
        });
    }
    let sample = Polynomial::new(f[..cut].to_vec());
    let p = (&q * &sample).truncate(cut);
    let series = RationalSeries::new(p, q)?.reduced();
    if series.expand(f.len()) != f {
        return Err(Error::Internal("series does not reproduce the sample".into()));
    }
    Ok(series)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RadiusClass {
    /// Some root lies strictly inside the unit disk: radius of convergence
    /// below 1, exponential growth.
    InsideUnitDisk,
    AllRootsOnUnitCircle,
    Mixed,
}

impl RadiusClass {
    pub fn name(self) -> &'static str {
        match self {
            RadiusClass::InsideUnitDisk => "inside_unit_disk",
            RadiusClass::AllRootsOnUnitCircle => "all_roots_on_unit_circle",
            RadiusClass::Mixed => "mixed",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Caveat {
    /// Only roots of unity, but not a single `(1 - t^s)^d`.
    MixedCyclotomic,
    /// The root-location count hit a singular step.
    Undetermined,
}

/// Structure of a denominator over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenominatorReport {
    pub radius_class: RadiusClass,
    pub s: Option<usize>,
    pub d: Option<usize>,
    /// `(k, m)`: the cyclotomic polynomial of order `k` divides `q` exactly `m` times.
    pub cyclotomic: Vec<(usize, usize)>,
    /// Rational roots of the non-cyclotomic part with multiplicities.
    pub rational_roots: Vec<(BigRational, usize)>,
    /// What is left after removing the cyclotomic and linear rational factors.
    pub remainder: Polynomial,
    pub caveat: Option<Caveat>,
}

impl DenominatorReport {
    /// Least common multiple of the cyclotomic orders.
    pub fn period(&self) -> usize {
        self.cyclotomic.iter().fold(1, |acc, &(k, _)| acc.lcm(&k))
    }

    /// Largest multiplicity of any cyclotomic factor.
    pub fn max_multiplicity(&self) -> usize {
        self.cyclotomic.iter().map(|&(_, m)| m).max().unwrap_or(0)
    }
}

pub fn euler_phi(n: usize) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn mobius(n: usize) -> i32 {
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// `Phi_n(t) = prod_{d | n} (t^d - 1)^{mu(n/d)}`.
pub fn cyclotomic(n: usize) -> Polynomial {
    let mut num = Polynomial::one();
    let mut den = Polynomial::one();
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let factor = &Polynomial::monomial(rat(1), d) - &Polynomial::one();
        match mobius(n / d) {
            1 => num = &num * &factor,
            -1 => den = &den * &factor,
            _ => {}
        }
    }
    num.exact_div(&den).expect("cyclotomic quotient is exact")
}

/// Divide out `factor` as often as possible.
fn strip(p: &mut Polynomial, factor: &Polynomial) -> usize {
    let mut count = 0;
    while p.degree().unwrap_or(0) >= factor.degree().unwrap_or(0) {
        match p.exact_div(factor) {
            Some(q) => {
                *p = q;
                count += 1;
            }
            None => break,
        }
    }
    count
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Rational roots of `p` by the rational-root test on its primitive part.
fn rational_roots(p: &Polynomial) -> Vec<BigRational> {
    let Some(ints) = p.primitive_part().to_integer_coeffs() else {
        return Vec::new();
    };
    if ints.len() < 2 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(BigRational::zero());
    }
    let Some(low) = ints.iter().find(|c| !c.is_zero()) else {
        return roots;
    };
    let (Some(nums), Some(dens)) = (divisors(low), divisors(ints.last().expect("nonempty"))) else {
        return roots;
    };
    for a in &nums {
        for b in &dens {
            if a.gcd(b) != BigInt::one() {
                continue;
            }
            for sign in [1, -1] {
                let x = BigRational::new(a * sign, b.clone());
                if p.eval(&x).is_zero() && !roots.contains(&x) {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Number of roots strictly inside the unit circle by the Schur-Cohn
/// recursion; `None` when a step is singular.
///
/// With `T f = a_0 f - a_m f*`, Rouché gives: `T f` has as many roots inside
/// as `f` when `|a_0| > |a_m|`, and as many as `f*` (that is `m - k`) when
/// `|a_0| < |a_m|`.
pub fn roots_inside_unit_disk(p: &Polynomial) -> Option<usize> {
    let n = p.degree()?;
    let mut f: Vec<BigRational> = p.coeffs().to_vec();
    let mut flips = Vec::with_capacity(n);
    for _ in 0..n {
        let m = f.len() - 1;
        let a0 = f[0].clone();
        let am = f[m].clone();
        let delta = &a0 * &a0 - &am * &am;
        if delta.is_zero() {
            return None;
        }
        flips.push((m, delta.is_negative()));
        let next: Vec<BigRational> = (0..m).map(|i| &a0 * &f[i] - &am * &f[m - i]).collect();
        f = next;
    }
    let mut count = 0;
    for &(m, flip) in flips.iter().rev() {
        if flip {
            count = m - count;
        }
    }
    Some(count)
}

/// Roots-of-unity structure of `q` by trial division with cyclotomic
/// polynomials of order at most `2 deg(q)^2 + 16`. Whatever is left over is
/// located relative to the unit circle: for integer `q` a non-cyclotomic
/// remainder must have a root inside the disk; for rational `q` the roots
/// inside are counted exactly.
pub fn denominator_analysis(q: &Polynomial) -> Result<DenominatorReport> {
    if q.coeff(0) != BigRational::one() {
        return Err(Error::BadDenominator);
    }
    let deg = q.degree().unwrap_or(0);
    let bound = 2 * deg * deg + 16;
    let mut rem = q.clone();
    let mut cyclotomic_parts = Vec::new();
    for k in 1..=bound {
        let left = rem.degree().unwrap_or(0);
        if left == 0 {
            break;
        }
        if euler_phi(k) > left {
            continue;
        }
        let m = strip(&mut rem, &cyclotomic(k));
        if m > 0 {
            cyclotomic_parts.push((k, m));
        }
    }

    let mut leftover = rem.clone();
    let mut roots = Vec::new();
    for x in rational_roots(&rem) {
        let linear = Polynomial::new(vec![-x.clone(), BigRational::one()]);
        let m = strip(&mut leftover, &linear);
        roots.push((x, m));
    }

    let mut report = DenominatorReport {
        radius_class: RadiusClass::Mixed,
        s: None,
        d: None,
        cyclotomic: cyclotomic_parts,
        rational_roots: roots,
        remainder: leftover,
        caveat: None,
    };

    if rem.degree().unwrap_or(0) == 0 {
        report.radius_class = RadiusClass::AllRootsOnUnitCircle;
        let s = report.period();
        let d = report.max_multiplicity();
        let pure = report.cyclotomic.iter().all(|&(_, m)| m == d)
            && report.cyclotomic.len() == (1..=s).filter(|k| s.is_multiple_of(*k)).count();
        if pure {
            report.s = Some(s);
            report.d = Some(d);
        } else {
            report.caveat = Some(Caveat::MixedCyclotomic);
        }
        return Ok(report);
    }

    if q.is_integral() {
        report.radius_class = RadiusClass::InsideUnitDisk;
        return Ok(report);
    }
    match roots_inside_unit_disk(&rem) {
        Some(0) => {}
        Some(_) => report.radius_class = RadiusClass::InsideUnitDisk,
        None => report.caveat = Some(Caveat::Undetermined),
    }
    Ok(report)
}

/// `f(n) = branches[n mod period](n)` for `n >= onset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    pub period: usize,
    pub branches: Vec<Polynomial>,
    pub onset: usize,
}

impl QuasiPolynomial {
    pub fn eval(&self, n: usize) -> BigRational {
        self.branches[n % self.period].eval_int(n as i64)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.branches.iter().filter_map(Polynomial::degree).max()
    }

    /// Common leading coefficient of the top-degree branches, if every
    /// branch has the top degree and they agree.
    pub fn common_leading(&self) -> Option<BigRational> {
        let d = self.max_degree()?;
        let first = self.branches[0].coeff(d);
        if first.is_zero() || self.branches.iter().any(|b| b.coeff(d) != first) {
            return None;
        }
        Some(first)
    }
}

/// Fit one polynomial of degree at most `max_degree` per residue class mod
/// `period`, from index `onset` on. Each class needs one sample beyond the
/// `max_degree + 1` used for interpolation; all remaining samples are checked.
pub fn fit_quasi_polynomial(
    values: &[BigRational],
    period: usize,
    max_degree: usize,
    onset: usize,
) -> Result<QuasiPolynomial> {
    if period == 0 {
        return Err(Error::Precondition("period must be positive".into()));
    }
    let needed = max_degree + 2;
    let mut branches = Vec::with_capacity(period);
    for residue in 0..period {
        let start = onset + (residue + period - onset % period) % period;
        let points: Vec<(BigRational, BigRational)> = (start..values.len())
            .step_by(period)
            .map(|n| (rat(n as i64), values[n].clone()))
            .collect();
        if points.len() < needed {
            return Err(Error::TooFewSamples {
                residue,
                got: points.len(),
                needed,
            });
        }
        let branch = interpolate(&points[..=max_degree]);
        if points.iter().any(|(x, y)| &branch.eval(x) != y) {
            return Err(Error::Inconclusive {
                which: format!("residue class {residue}"),
            });
        }
        branches.push(branch);
    }
    Ok(QuasiPolynomial {
        period,
        branches,
        onset,
    })
}

/// Quasi-polynomial coefficients of a series with denominator `(1 - t^s)^d`.
/// The branches have degree below `d` and hold from `deg p - deg q + 1` on.
pub fn quasi_polynomial(series: &RationalSeries, samples: &DimensionSequence) -> Result<QuasiPolynomial> {
    let series = series.reduced();
    let report = denominator_analysis(series.denominator())?;
    let (Some(s), Some(d)) = (report.s, report.d) else {
        return Err(Error::NotPureForm);
    };
    let values = samples.as_rationals();
    if series.expand(values.len()) != values {
        return Err(Error::Precondition("samples are not the coefficients of the series".into()));
    }
    let dp = series.numerator().degree().unwrap_or(0) as isize;
    let dq = series.denominator().degree().unwrap_or(0) as isize;
    let onset = (dp - dq + 1).max(0) as usize;
    if d == 0 {
        return Ok(QuasiPolynomial {
            period: 1,
            branches: vec![Polynomial::zero()],
            onset,
        });
    }
    fit_quasi_polynomial(&values, s, d - 1, onset)
}
