//! Normal ordering of words in the generators.

use num_traits::One;

use super::{LinearCombo, NormalMonomial};
use crate::error::{Error, Result};
use crate::exactnum::BigRational;

fn check_range(word: &[usize], count: usize) -> Result<()> {
    match word.iter().find(|&&g| g >= count) {
        Some(&index) => Err(Error::IndexOutOfRange { index, count }),
        None => Ok(()),
    }
}

fn exponents(word: &[usize], count: usize) -> NormalMonomial {
    let mut e = vec![0u32; count];
    for &g in word {
        e[g] += 1;
    }
    NormalMonomial(e)
}

/// Rewrite a word in `W_n` (generator `i < n` is `x_{i+1}`, generator `n + i`
/// is `y_{i+1}`) into the basis `x^a y^b` using `y_i x_i = x_i y_i + 1` and
/// commutation of every other pair.
pub fn normal_order_weyl(word: &[usize], rank: usize) -> Result<LinearCombo> {
    let count = 2 * rank;
    check_range(word, count)?;
    let mut out = LinearCombo::zero();
    let mut pending: Vec<(Vec<usize>, BigRational)> = vec![(word.to_vec(), BigRational::one())];
    while let Some((w, c)) = pending.pop() {
        let Some(p) = (0..w.len().saturating_sub(1)).find(|&p| w[p] > w[p + 1]) else {
            out.add_term(exponents(&w, count), c);
            continue;
        };
        let (a, b) = (w[p], w[p + 1]);
        if a == b + rank && b < rank {
            let mut contracted = w.clone();
            contracted.drain(p..p + 2);
            pending.push((contracted, c.clone()));
        }
        let mut swapped = w;
        swapped.swap(p, p + 1);
        pending.push((swapped, c));
    }
    Ok(out)
}

/// Sort a word in a quantum affine space. Each adjacent swap `x_a x_b -> x_b x_a`
/// with `a > b` contributes the factor `lambda[a][b]`, so the scalar is the
/// product of `lambda[w_p][w_r]` over the inversions `p < r, w_p > w_r`.
pub fn normal_order_quantum(word: &[usize], lambda: &[Vec<BigRational>]) -> Result<LinearCombo> {
    let count = lambda.len();
    check_range(word, count)?;
    let mut scalar = BigRational::one();
    for (p, &a) in word.iter().enumerate() {
        for &b in &word[p + 1..] {
            if a > b {
                scalar *= &lambda[a][b];
            }
        }
    }
    Ok(LinearCombo::term(exponents(word, count), scalar))
}
