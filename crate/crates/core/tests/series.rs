use gkgrowth::exactnum::{rat, BigRational, Polynomial};
use gkgrowth::hilbert::{algebra_dim_sequence, module_dim_sequence, DimensionSequence};
use gkgrowth::poincare::{
    cyclotomic, denominator_analysis, minimal_recurrence, minimal_recurrence_of, series_from_recurrence,
    series_from_recurrence_of, RadiusClass, RationalSeries,
};
use gkgrowth::presentations::{AlgebraSpec, ModuleSpec, NormalMonomial};
use gkgrowth::samuel::detect_polynomial;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Fraction-free determinant of an integer matrix.
fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn hankel(f: &[BigInt], start: usize, size: usize) -> BigInt {
    let m = (0..size)
        .map(|i| (0..size).map(|j| f[start + i + j].clone()).collect())
        .collect();
    bareiss(m)
}

/// Least `s` such that every Hankel determinant of size `s + 1` on the tail
/// vanishes, with at least four determinants checked.
fn hankel_order(f: &[BigInt], tail_from: usize) -> Option<usize> {
    (0..=(f.len() - tail_from).saturating_sub(4) / 2).find(|&s| {
        (tail_from..f.len().saturating_sub(2 * s)).all(|a| hankel(f, a, s + 1).is_zero())
    })
}

fn series_catalog() -> Vec<RationalSeries> {
    let lin = |a: i64| Polynomial::from_ints(&[1, -a]);
    let one_minus = Polynomial::one_minus_power;
    let dens: Vec<Polynomial> = vec![
        lin(2),
        lin(1).pow(3),
        &lin(1) * &lin(2),
        one_minus(2),
        &lin(3) * &lin(-1),
        one_minus(3).pow(2),
        &lin(1).pow(2) * &one_minus(2),
        Polynomial::from_ints(&[1, -1, -1]),
        &lin(2).pow(2) * &lin(1),
        &cyclotomic(5) * &lin(1),
        Polynomial::from_ints(&[1, 0, 0, -2]),
        &lin(-2) * &one_minus(4),
        lin(1).pow(5),
        &one_minus(2) * &one_minus(3),
        &Polynomial::from_ints(&[1, -1, -1]) * &lin(1),
        lin(4),
        &lin(1).pow(4) * &lin(2).pow(2),
        one_minus(6),
        &cyclotomic(7) * &lin(3),
        Polynomial::from_ints(&[1, -2, 0, 1, 3]),
    ];
    let nums = [
        vec![1],
        vec![1, 1],
        vec![2, -1],
        vec![1, 3, 5],
        vec![1, 0, 2],
        vec![3],
    ];
    dens.into_iter()
        .enumerate()
        .map(|(i, q)| {
            let p = Polynomial::from_ints(&nums[i % nums.len()]);
            RationalSeries::new(p, q).unwrap().reduced()
        })
        .collect()
}

fn integers(v: &[BigRational]) -> Vec<BigInt> {
    v.iter().map(|c| c.to_integer()).collect()
}

#[test]
fn recurrence_round_trip_over_catalog() {
    for s in series_catalog() {
        let samples = s.expand(36);
        let rec = minimal_recurrence_of(&samples, 8).unwrap().unwrap();
        assert_eq!(rec.order, s.denominator().degree().unwrap(), "{s}");
        let back = series_from_recurrence_of(&samples, &rec).unwrap();
        assert_eq!(back, s);
        let again = minimal_recurrence_of(&back.expand(36), 8).unwrap().unwrap();
        assert_eq!(again.order, rec.order);
    }
}

#[test]
fn recurrence_order_matches_hankel_oracle() {
    for s in series_catalog() {
        let samples = s.expand(36);
        let rec = minimal_recurrence_of(&samples, 8).unwrap().unwrap();
        let f = integers(&samples);
        // recurrence holds from onset + order on; the Hankel test starts at the onset
        assert_eq!(hankel_order(&f, rec.onset), Some(rec.order), "{s}");
        if rec.order > 0 {
            assert!(
                (rec.onset..f.len() - 2 * rec.order + 1).any(|a| !hankel(&f, a, rec.order).is_zero()),
                "{s}"
            );
        }
    }
}

#[test]
fn non_rational_prefix_has_no_short_recurrence() {
    // partition numbers
    let mut p = vec![BigInt::one()];
    for n in 1..40usize {
        let mut acc = BigInt::zero();
        for k in 1..=n {
            let pent1 = k * (3 * k - 1) / 2;
            let pent2 = k * (3 * k + 1) / 2;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            if pent1 <= n {
                acc += &p[n - pent1] * sign;
            }
            if pent2 <= n {
                acc += &p[n - pent2] * sign;
            }
        }
        p.push(acc);
    }
    let f: Vec<BigRational> = p.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    assert_eq!(minimal_recurrence_of(&f, 8).unwrap(), None);
    assert_eq!(hankel_order(&p, 0), None);
}

fn catalog_cumulative() -> Vec<(String, DimensionSequence)> {
    let mut out = Vec::new();
    for d in 1..=5 {
        out.push((format!("k[x1..x{d}]"), algebra_dim_sequence(&AlgebraSpec::polynomial(d), 30).unwrap()));
    }
    for n in 1..=3 {
        let w = AlgebraSpec::weyl(n);
        out.push((format!("W_{n}"), algebra_dim_sequence(&w, 30).unwrap()));
        let ideal: Vec<_> = (0..n).map(|i| NormalMonomial::generator(2 * n, n + i)).collect();
        out.push((format!("k[x] over W_{n}"), module_dim_sequence(&w, &ModuleSpec::cyclic(ideal), 30).unwrap()));
    }
    out.push(("laurent".into(), module_dim_sequence(&AlgebraSpec::weyl(1), &ModuleSpec::laurent(), 30).unwrap()));
    out.push(("base field".into(), algebra_dim_sequence(&AlgebraSpec::base_field(), 30).unwrap()));
    out
}

#[test]
fn polynomial_fit_agrees_with_recurrence() {
    for (name, s) in catalog_cumulative() {
        let Some(h) = detect_polynomial(&s, 6).unwrap() else {
            panic!("{name}: no polynomial fit");
        };
        let d = h.form.degree().unwrap();
        let rec = minimal_recurrence(&s, 8).unwrap().expect("recurrence");
        let series = series_from_recurrence(&s, &rec).unwrap();
        let bound = Polynomial::one_minus_power(1).pow(d as u32 + 1);
        assert!(bound.exact_div(series.denominator()).is_some(), "{name}: {series}");
        let report = denominator_analysis(series.denominator()).unwrap();
        assert_eq!(report.radius_class, RadiusClass::AllRootsOnUnitCircle);
        assert_eq!(report.d, Some(d + 1), "{name}");
    }
}

#[test]
fn eventually_polynomial_prefix() {
    // 7, 7, then n + 1 from n = 2 on
    let mut v: Vec<u64> = vec![7, 7];
    v.extend((2..30u64).map(|n| n + 1));
    let s = DimensionSequence::from_u64s(&v, gkgrowth::hilbert::SequenceKind::Cumulative);
    let h = detect_polynomial(&s, 6).unwrap().unwrap();
    assert_eq!(h.stabilization_index, 2);
    let rec = minimal_recurrence(&s, 8).unwrap().unwrap();
    let series = series_from_recurrence(&s, &rec).unwrap();
    assert_eq!(series.expand(30), s.as_rationals());
    assert_eq!(series.denominator(), &Polynomial::one_minus_power(1).pow(2));
    assert_eq!(series.numerator().coeff(0), rat(7));
}
