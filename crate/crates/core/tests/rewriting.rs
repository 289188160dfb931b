use std::collections::BTreeMap;

use gkgrowth::exactnum::{rat, rat_frac, BigRational};
use gkgrowth::presentations::{normal_order_quantum, normal_order_weyl, LinearCombo, NormalMonomial};
use num_traits::{One, Zero};

fn all_words(alphabet: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in 0..alphabet {
                let mut v = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `x^a y^b` as a word: all x's in index order, then all y's.
fn word_of(m: &NormalMonomial) -> Vec<usize> {
    let mut w = Vec::new();
    for (g, &e) in m.exponents().iter().enumerate() {
        w.extend(std::iter::repeat_n(g, e as usize));
    }
    w
}

fn product_via_rewriting(a: &LinearCombo, b: &LinearCombo, rank: usize) -> LinearCombo {
    let mut out = LinearCombo::zero();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let mut w = word_of(ma);
            w.extend(word_of(mb));
            for (m, c) in normal_order_weyl(&w, rank).unwrap().terms() {
                out.add_term(m.clone(), c * ca * cb);
            }
        }
    }
    out
}

fn binom(n: u32, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        acc = acc * rat((n - i) as i64) / rat((i + 1) as i64);
    }
    acc
}

fn fact(k: u32) -> BigRational {
    (1..=k).fold(BigRational::one(), |acc, i| acc * rat(i as i64))
}

/// Closed-form product in `W_n`: per index,
/// `(x^a y^b)(x^c y^d) = sum_k k! C(b,k) C(c,k) x^{a+c-k} y^{b+d-k}`.
fn weyl_product(a: &[u32], b: &[u32], rank: usize) -> BTreeMap<Vec<u32>, BigRational> {
    let mut acc: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
    acc.insert(vec![0; 2 * rank], BigRational::one());
    for i in 0..rank {
        let (xa, yb, xc, yd) = (a[i], a[rank + i], b[i], b[rank + i]);
        let mut next = BTreeMap::new();
        for (m, c) in &acc {
            for k in 0..=yb.min(xc) {
                let coeff = fact(k) * binom(yb, k) * binom(xc, k);
                let mut e = m.clone();
                e[i] = xa + xc - k;
                e[rank + i] = yb + yd - k;
                *next.entry(e).or_insert_with(BigRational::zero) += c * &coeff;
            }
        }
        acc = next;
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

fn as_map(l: &LinearCombo) -> BTreeMap<Vec<u32>, BigRational> {
    l.terms().map(|(m, c)| (m.exponents().to_vec(), c.clone())).collect()
}

#[test]
fn weyl_normal_order_is_multiplicative() {
    for rank in 1..=2usize {
        for w in all_words(2 * rank, 6) {
            let whole = normal_order_weyl(&w, rank).unwrap();
            for cut in 0..=w.len() {
                let left = normal_order_weyl(&w[..cut], rank).unwrap();
                let right = normal_order_weyl(&w[cut..], rank).unwrap();
                assert_eq!(product_via_rewriting(&left, &right, rank), whole, "word {w:?} cut {cut}");
            }
        }
    }
}

#[test]
fn weyl_normal_order_matches_closed_form_product() {
    for rank in 1..=2usize {
        for w in all_words(2 * rank, 6) {
            // fold the closed-form product over the letters
            let mut acc: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
            acc.insert(vec![0; 2 * rank], BigRational::one());
            for &g in &w {
                let mut letter = vec![0u32; 2 * rank];
                letter[g] = 1;
                let mut next: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
                for (m, c) in &acc {
                    for (e, k) in weyl_product(m, &letter, rank) {
                        *next.entry(e).or_insert_with(BigRational::zero) += c * &k;
                    }
                }
                next.retain(|_, c| !c.is_zero());
                acc = next;
            }
            assert_eq!(as_map(&normal_order_weyl(&w, rank).unwrap()), acc, "word {w:?}");
        }
    }
}

#[test]
fn weyl_output_degree_bounded_by_word_length() {
    for w in all_words(4, 6) {
        for (m, _) in normal_order_weyl(&w, 2).unwrap().terms() {
            assert!(m.exponents().iter().sum::<u32>() as usize <= w.len());
        }
    }
}

/// Adjacent-swap sorter: each swap of `x_a x_b` with `a > b` into `x_b x_a`
/// multiplies by `lambda[a][b]`.
fn bubble_sort_scalar(word: &[usize], lambda: &[Vec<BigRational>]) -> BigRational {
    let mut w = word.to_vec();
    let mut scalar = BigRational::one();
    loop {
        let mut swapped = false;
        for p in 0..w.len().saturating_sub(1) {
            if w[p] > w[p + 1] {
                scalar *= &lambda[w[p]][w[p + 1]];
                w.swap(p, p + 1);
                swapped = true;
            }
        }
        if !swapped {
            return scalar;
        }
    }
}

#[test]
fn quantum_scalar_matches_bubble_sort() {
    let qs = [rat_frac(2, 3), rat(5), rat_frac(-7, 4)];
    let mut lambda = vec![vec![rat(1); 3]; 3];
    let mut k = 0;
    for i in 0..3 {
        for j in 0..i {
            lambda[i][j] = qs[k].clone();
            lambda[j][i] = qs[k].recip();
            k += 1;
        }
    }
    for w in all_words(3, 6) {
        let got = normal_order_quantum(&w, &lambda).unwrap();
        assert_eq!(got.len(), 1);
        let (m, c) = got.terms().next().unwrap();
        assert_eq!(c, &bubble_sort_scalar(&w, &lambda), "word {w:?}");
        assert_eq!(m.exponents().iter().sum::<u32>() as usize, w.len());
    }
}

#[test]
fn quantum_plane_examples() {
    let q = rat_frac(2, 3);
    let lambda = vec![vec![rat(1), q.recip()], vec![q.clone(), rat(1)]];
    let r = normal_order_quantum(&[1, 0, 1, 0], &lambda).unwrap();
    assert_eq!(r.coefficient(&NormalMonomial::new(vec![2, 2])), &q * &q * &q);
}
