//! Exact arithmetic: binomial coefficients, dense univariate polynomials over
//! the rationals, and the binomial-coefficient basis used to express
//! eventually-polynomial dimension functions.
//!
//! Nothing in here touches floating point.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational;

use crate::error::{Error, Result};

/// `C(n, k)`, zero when `k > n`.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient `C(x, k) = x (x-1) ... (x-k+1) / k!` at a rational point.
pub fn binom_rational(x: &BigRational, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        acc *= x - BigRational::from_integer(BigInt::from(i));
        acc /= BigRational::from_integer(BigInt::from(i + 1));
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_from_uint(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// Dense univariate polynomial with rational coefficients; `coeffs[i]` is the
/// coefficient of `t^i`. The highest stored coefficient is never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^deg`
    pub fn monomial(c: BigRational, deg: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// `1 - t^s`
    pub fn one_minus_power(s: usize) -> Self {
        Self::one() - Self::monomial(BigRational::one(), s)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, n: i64) -> BigRational {
        self.eval(&rat(n))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Keep only the terms of degree `< n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// Euclidean division over the rationals. `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> Option<(Polynomial, Polynomial)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Some((Self::zero(), Self::zero()));
        };
        if sd < dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let c = &rem[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient if `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading();
        a.scale(&lead.recip())
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn to_integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    /// Scale so that all coefficients are coprime integers with positive
    /// leading coefficient.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().is_some_and(Signed::is_negative) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Polynomial::from_bigints(&ints.iter().map(|c| c / &g * &sign).collect::<Vec<_>>())
    }

    /// Render with the given variable name, lowest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let unit = abs.is_one();
            match i {
                0 => out.push_str(&abs.to_string()),
                _ => {
                    if !unit {
                        out.push_str(&abs.to_string());
                        out.push('*');
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push('^');
                        out.push_str(&i.to_string());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// An eventually-polynomial function written as `sum a_i C(n, i)`.
///
/// The top coefficient `a_d` of a Hilbert-Samuel polynomial in this basis is
/// the multiplicity (Bernstein number) of the module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BinomialForm {
    coeffs: Vec<BigRational>,
}

impl BinomialForm {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        BinomialForm { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, n: u64) -> BigRational {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| a * rat_from_uint(&binom(n, i as u64)))
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// Evaluate the underlying polynomial at any rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a * binom_rational(x, i))
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// The form of `f(n+1) - f(n)`: drops `a_0` and shifts the rest down.
    pub fn difference(&self) -> BinomialForm {
        Self::new(self.coeffs.iter().skip(1).cloned().collect())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }
}

impl fmt::Display for BinomialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| format!("{a}*C(n,{i})"))
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Rewrite a polynomial in the binomial basis. Coefficients are the forward
/// differences of `p` at zero: `a_i = (Delta^i p)(0)`.
pub fn to_binomial_basis(p: &Polynomial) -> BinomialForm {
    let Some(d) = p.degree() else {
        return BinomialForm::default();
    };
    let mut row: Vec<BigRational> = (0..=d as i64).map(|n| p.eval_int(n)).collect();
    let mut coeffs = Vec::with_capacity(d + 1);
    while !row.is_empty() {
        coeffs.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    BinomialForm::new(coeffs)
}

/// `C(n, k)` as a polynomial in `n`.
pub fn binomial_polynomial(k: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for i in 0..k {
        acc = &acc * &Polynomial::new(vec![rat(-(i as i64)), BigRational::one()]);
    }
    acc.scale(&BigRational::from_integer(factorial(k)).recip())
}

pub fn from_binomial_basis(b: &BinomialForm) -> Polynomial {
    b.coeffs
        .iter()
        .enumerate()
        .fold(Polynomial::zero(), |acc, (i, a)| {
            &acc + &binomial_polynomial(i).scale(a)
        })
}

/// `out[n] = f(n+1) - f(n)`.
pub fn finite_difference(f: &[BigRational]) -> Result<Vec<BigRational>> {
    if f.len() < 2 {
        return Err(Error::SequenceTooShort {
            needed: 2,
            got: f.len(),
        });
    }
    Ok(f.windows(2).map(|w| &w[1] - &w[0]).collect())
}

/// Interpolating polynomial through `(x_i, y_i)` (Lagrange form, exact).
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Polynomial::one();
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &Polynomial::new(vec![-xj.clone(), BigRational::one()]);
            denom *= xi - xj;
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    acc
}
