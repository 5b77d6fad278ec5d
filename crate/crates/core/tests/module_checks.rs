use uwf_core::representations::*;
use uwf_core::weight::default_ceiling;

fn modules() -> Vec<EvalModule> {
    vec![EvalModule::spin_half(), EvalModule::spin_one()]
}

#[test]
fn factorization_small() {
    for m1 in modules() {
        for m2 in modules() {
            for n in 1..=2 {
                let r = check_factorization(&m1, &m2, n, &default_ceiling(n), Factorization::Full).unwrap();
                assert!(r.passed(), "{:?}⊗{:?} n={n}: {:?}", m1.spin(), m2.spin(), r.first_failure);
                assert!(r.checked_coefficients > 0);
            }
        }
    }
}

#[test]
fn factorization_three_variables() {
    for m1 in modules() {
        for m2 in modules() {
            let r = check_factorization(&m1, &m2, 3, &default_ceiling(3), Factorization::Full).unwrap();
            assert!(r.passed(), "{:?}⊗{:?}: {:?}", m1.spin(), m2.spin(), r.first_failure);
        }
    }
}

#[test]
fn factorization_needs_exchange_factor() {
    let (a, b) = (EvalModule::spin_one(), EvalModule::spin_half());
    let r = check_factorization(&a, &b, 2, &default_ceiling(2), Factorization::WithoutExchange).unwrap();
    assert!(!r.passed());
}

#[test]
fn bethe_identity() {
    let m = EvalModule::spin_one();
    for n in 1..=3 {
        let r = bethe_check(&m, n, 12, Bethe::Full).unwrap();
        assert!(r.passed(), "n={n}: {:?}", r.first_failure);
    }
    assert!(bethe_check(&EvalModule::spin_half(), 1, 12, Bethe::Full).unwrap().passed());
}

#[test]
fn bethe_needs_prefactor() {
    let r = bethe_check(&EvalModule::spin_one(), 2, 12, Bethe::WithoutPrefactor).unwrap();
    assert!(!r.passed());
}

#[test]
fn spin_one_pair_is_rational() {
    let rec = reconstruct_spin_one_pair(&[6, 12], 20).unwrap();
    assert!(rec.report.passed(), "{:?}", rec.report.first_failure);
    println!("{:?} {}", rec.report.notes, rec.surplus);
}

#[test]
fn module_antisymmetry() {
    for m in modules() {
        let r = check_module_antisymmetry(&m, &default_ceiling(2)).unwrap();
        assert!(r.passed(), "{:?}: {:?}", m.spin(), r.first_failure);
        assert_eq!(r.checked_coefficients, 36);
    }
}

#[test]
fn spin_half_single_variable_reconstructs() {
    let m = EvalModule::spin_half();
    let v = SingularVector::highest(&m, 3).unwrap();
    let w = weight_vector(&m, &v, vec!["t".into()], "z", &[30]).unwrap();
    let vars: Vec<String> = vec!["t".into(), "z".into()];
    let one = uwf_core::coeffs::QRational::one();
    let den = uwf_core::coeffs::NestedSeries::polynomial(vars.clone(), [(vec![1, 0], one.clone()), (vec![0, 1], -&one)]);
    let rec = rational_reconstruct(&w, &[PoleFactor { label: "t - z".into(), poly: den }], 1, 20).unwrap();
    assert!(rec.report.passed(), "{:?}", rec.report.first_failure);
    let terms: Vec<_> = rec.numerator.terms().collect();
    assert_eq!(terms, vec![(&vec![0, 1], &ModVec::basis(2, 1))]);
}

#[test]
fn constant_series_reconstructs_to_constant() {
    let vars: Vec<String> = vec!["t".into(), "z".into()];
    let c = ModVec(vec![uwf_core::coeffs::QRational::q_pow(3)]);
    let s = uwf_core::coeffs::NestedSeries::monomial(vars, vec![0, 0], c.clone())
        .truncate(&[Some(25), None]);
    let rec = rational_reconstruct(&s, &[], 0, 20).unwrap();
    assert!(rec.report.passed(), "{:?}", rec.report.first_failure);
    assert_eq!(rec.numerator.terms().collect::<Vec<_>>(), vec![(&vec![0, 0], &c)]);
}

#[test]
fn wrong_ansatz_is_a_failed_report() {
    let m = EvalModule::spin_half();
    let v = SingularVector::highest(&m, 3).unwrap();
    let w = weight_vector(&m, &v, vec!["t".into()], "z", &[30]).unwrap();
    let rec = rational_reconstruct(&w, &[], 0, 20).unwrap();
    assert!(!rec.report.passed());
}
