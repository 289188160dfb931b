use gkgrowth::axioms::{
    check_multiplicity_axioms, dimension_balance, filtration_equivalent, holonomic_defect, HolonomyCatalog, SESSpec,
    SesCase,
};
use gkgrowth::catalog::CatalogEntry;
use gkgrowth::exactnum::{factorial, rat, BigRational, BinomialForm};
use gkgrowth::hilbert::{algebra_dim_sequence, module_dim_sequence, DimensionSequence};
use gkgrowth::presentations::{AlgebraSpec, ModuleSpec, NormalMonomial, Summand};
use gkgrowth::samuel::{
    classify_growth, detect_polynomial, gk_dimension, leading_monomial_coefficient, multiplicity, Classification,
};
use num_bigint::BigUint;

fn sample(form: &BinomialForm, len: usize) -> DimensionSequence {
    DimensionSequence::cumulative(
        (0..len as u64)
            .map(|n| form.eval(n).to_integer().to_biguint().unwrap())
            .collect(),
    )
}

#[test]
fn detection_recovers_every_small_form() {
    let window = 6;
    for deg in 0..=5usize {
        let count = 4usize.pow(deg as u32) * 3;
        for code in 0..count {
            let mut c = code;
            let mut coeffs = Vec::with_capacity(deg + 1);
            for _ in 0..deg {
                coeffs.push((c % 4) as i64);
                c /= 4;
            }
            coeffs.push((c % 3) as i64 + 1);
            let form = BinomialForm::from_ints(&coeffs);
            let len = (deg + 2 * window + 1).max(2 * window + 4);
            let h = detect_polynomial(&sample(&form, len), window).unwrap().unwrap();
            assert_eq!(h.form, form);
            assert_eq!(
                leading_monomial_coefficient(&h) * BigRational::from_integer(factorial(deg)),
                multiplicity(&h)
            );
        }
    }
}

fn shifted(s: &DimensionSequence, c: usize) -> DimensionSequence {
    let mut v = vec![BigUint::from(0u8); c];
    v.extend(s.values[..s.len() - c].iter().cloned());
    DimensionSequence::cumulative(v)
}

#[test]
fn equivalent_filtrations_share_degree_and_multiplicity() {
    let sequences = [
        algebra_dim_sequence(&AlgebraSpec::weyl(1), 40).unwrap(),
        algebra_dim_sequence(&AlgebraSpec::polynomial(3), 40).unwrap(),
        module_dim_sequence(&AlgebraSpec::weyl(1), &ModuleSpec::laurent(), 40).unwrap(),
    ];
    for s in &sequences {
        let base = detect_polynomial(s, 6).unwrap().unwrap();
        for c in 1..=4 {
            let t = shifted(s, c);
            let h = detect_polynomial(&t, 6).unwrap().unwrap();
            assert_eq!(gk_dimension(&h), gk_dimension(&base));
            assert_eq!(multiplicity(&h), multiplicity(&base));
            let found = filtration_equivalent(s, &t, 6).unwrap();
            assert!(found <= c);
        }
    }
}

#[test]
fn holonomic_defect_ignores_shift() {
    let w = AlgebraSpec::weyl(2);
    let ideal: Vec<_> = (0..2).map(|i| NormalMonomial::generator(4, 2 + i)).collect();
    let cat = HolonomyCatalog::standard();
    let plain = holonomic_defect(&w, &ModuleSpec::cyclic(ideal.clone()), &cat, 30, 6).unwrap();
    for shift in 1..=4 {
        let m = ModuleSpec::direct_sum(vec![Summand { shift, ideal: ideal.clone() }]);
        let r = holonomic_defect(&w, &m, &cat, 30, 6).unwrap();
        assert_eq!((r.gk, r.defect), (plain.gk, plain.defect));
    }
}

fn monomials_up_to(vars: usize, max_deg: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..vars {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=max_deg).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .filter(|p| p.iter().sum::<u32>() <= max_deg)
            .collect();
    }
    out
}

#[test]
fn additivity_on_two_variable_family() {
    let a = AlgebraSpec::polynomial(2);
    let monos: Vec<NormalMonomial> = monomials_up_to(2, 3)
        .into_iter()
        .filter(|m| m.iter().sum::<u32>() > 0)
        .map(NormalMonomial::new)
        .collect();
    let mut cases = 0;
    for (i, g) in monos.iter().enumerate() {
        for h in &monos[i..] {
            let ideal = gkgrowth::presentations::minimalize(&[g.clone(), h.clone()]);
            for m in &monos {
                let mut sub = ideal.clone();
                sub.push(m.clone());
                let s = SESSpec::new(a.clone(), ModuleSpec::cyclic(ideal.clone()), vec![sub]).unwrap();
                assert!(dimension_balance(&s, 25).unwrap());
                let r = check_multiplicity_axioms(&s, 25, 6).unwrap();
                assert!(r.exactness_ok);
                assert_ne!(r.case, SesCase::ExactnessViolated);
                assert_eq!(r.additivity_ok, Some(true), "{ideal:?} + {m:?}");
                assert_eq!(r.zero_clause_ok, Some(true));
                cases += 1;
            }
        }
    }
    assert_eq!(cases, 45 * 9);
}

#[test]
fn free_flags_respect_chain_bound() {
    use gkgrowth::axioms::chain_bound_check;
    let a = AlgebraSpec::polynomial(1);
    let one = NormalMonomial::one(1);
    for r in 1..=4usize {
        let base = ModuleSpec::direct_sum((0..r).map(|_| Summand { shift: 0, ideal: vec![] }).collect());
        let flag: Vec<Vec<Vec<NormalMonomial>>> = (1..=r)
            .map(|k| (0..r).map(|i| if i < r - k { vec![one.clone()] } else { vec![] }).collect())
            .collect();
        let rep = chain_bound_check(&a, &base, &flag, 25, 6).unwrap();
        assert_eq!(rep.n, r);
        assert_eq!(rep.e_m, rat(r as i64));
        assert!(rep.bound_ok);
    }
}

#[test]
fn catalog_growth_classes() {
    let free = algebra_dim_sequence(&AlgebraSpec::catalog(CatalogEntry::FreeAlgebra2), 30).unwrap();
    assert_eq!(classify_growth(&free, 6, 8).unwrap().classification, Classification::Exponential);
    let smith = algebra_dim_sequence(&AlgebraSpec::catalog(CatalogEntry::SmithLie), 30).unwrap();
    assert_eq!(classify_growth(&smith, 6, 8).unwrap().classification, Classification::Inconclusive);
    for d in 1..=5 {
        let s = algebra_dim_sequence(&AlgebraSpec::polynomial(d), 30).unwrap();
        let r = classify_growth(&s, 6, 8).unwrap();
        assert_eq!((r.classification, r.gk), (Classification::Polynomial, Some(d)));
        assert_eq!(r.multiplicity, Some(rat(1)));
    }
}
