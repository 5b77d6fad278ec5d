use num_bigint::BigInt;
use proptest::prelude::*;
use uwf_core::algebra::{principal_degree, project, project_f_word, separate, AlgebraElement, Gen, Word};
use uwf_core::coeffs::{expand_rational, exponent_from_depth, NestedSeries, QPoly, QRational};
use uwf_core::representations::{EvalModule, Mat, Op};
use uwf_core::roots::{AffineCartanData, AffineRoot};

fn poly() -> impl Strategy<Value = QPoly> {
    (-2i64..=2, prop::collection::vec(-3i64..=3, 0..4)).prop_map(|(low, c)| QPoly::from_coeffs(low, c.into_iter().map(BigInt::from).collect()))
}

fn rational() -> impl Strategy<Value = QRational> {
    (poly(), poly().prop_filter("nonzero", |p| !p.is_zero())).prop_map(|(n, d)| QRational::new(n, d).unwrap())
}

fn vars() -> Vec<String> {
    vec!["x".into(), "y".into()]
}

/// Polynomial in two variables whose terms have nonnegative depth.
fn small_poly(constant: bool) -> impl Strategy<Value = NestedSeries<QRational>> {
    prop::collection::vec(((0i64..=2, 0i64..=3), -3i64..=3), 0..4).prop_map(move |terms| {
        let mut ts: Vec<(Vec<i64>, QRational)> = terms
            .into_iter()
            .filter(|((a, b), _)| (*a, *b) != (0, 0))
            .map(|((a, b), c)| (exponent_from_depth(&[a, a + b]), QRational::from_int(c)))
            .collect();
        if constant {
            ts.push((vec![0, 0], QRational::from_int(2)));
        }
        NestedSeries::polynomial(vars(), ts)
    })
}

fn f_word() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=4, 0..4)
}

fn mixed_word() -> impl Strategy<Value = Word> {
    prop::collection::vec(prop_oneof![(-3i64..=3).prop_map(Gen::F), (0i64..=3).prop_map(Gen::Psi)], 0..6)
}

fn operator(m: &EvalModule, x: &AlgebraElement) -> Vec<Op> {
    let mut out: Vec<Op> = x
        .terms()
        .map(|(w, c)| {
            let op = m.word_operator(w);
            Op { power: op.power, mat: op.mat.scale(c) }
        })
        .collect();
    out.sort_by_key(|o| o.power);
    let mut merged: Vec<Op> = Vec::new();
    for o in out {
        match merged.last_mut() {
            Some(l) if l.power == o.power => {
                use uwf_core::coeffs::Coefficient;
                l.mat.add_assign(&o.mat)
            }
            _ => merged.push(o),
        }
    }
    use uwf_core::coeffs::Coefficient;
    merged.retain(|o| !o.mat.is_zero());
    merged
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn expansion_multiplies_back(num in small_poly(false), den in small_poly(true)) {
        let target = [5, 7];
        let s = expand_rational(&num, &den, &target).unwrap();
        let back = s.mul(&den).unwrap();
        prop_assert_eq!(back.first_difference(&num).unwrap(), None);
    }

    #[test]
    fn series_product_is_associative(a in small_poly(true), b in small_poly(false), c in small_poly(true)) {
        let cap = [Some(4), Some(6)];
        let (a, b, c) = (a.truncate(&cap), b.truncate(&cap), c.truncate(&cap));
        let l = a.mul(&b).unwrap().mul(&c).unwrap();
        let r = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l.first_difference(&r).unwrap(), None);
    }

    #[test]
    fn projection_properties(modes in f_word(), m in -3i64..=0) {
        let p = project_f_word(&modes).unwrap();
        prop_assert_eq!(project(&p).unwrap(), p.clone());
        let deg: i64 = modes.iter().sum();
        for (w, _) in p.terms() {
            prop_assert_eq!(principal_degree(w), deg);
        }
        let mut left = vec![m];
        left.extend(&modes);
        prop_assert!(project_f_word(&left).unwrap().is_zero());
    }

    #[test]
    fn normal_form_acts_like_the_word(w in mixed_word()) {
        let x = AlgebraElement::word(w.clone());
        let s = separate(&x).unwrap();
        for m in [EvalModule::spin_half(), EvalModule::spin_one()] {
            prop_assert_eq!(operator(&m, &s), operator(&m, &x), "word {:?}", w);
        }
    }

    #[test]
    fn reflections_preserve_the_form(i in 0usize..3, x in prop::collection::vec(-3i64..=3, 3), y in prop::collection::vec(-3i64..=3, 3)) {
        let c = AffineCartanData::untwisted('A', 2).unwrap();
        let (x, y) = (AffineRoot(x), AffineRoot(y));
        prop_assert_eq!(c.form(&c.reflect(i, &x), &c.reflect(i, &y)), c.form(&x, &y));
    }
}

#[test]
fn identity_operator_is_unit() {
    let m = EvalModule::spin_one();
    assert_eq!(m.word_operator(&[]).mat, Mat::identity(3));
}
