use uwf_core::weight::*;

#[test]
fn closed_form_matches() {
    let r = check_closed_form(&default_ceiling(2)).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.checked_coefficients, 66);
}

#[test]
fn antisymmetry_n2() {
    let r = check_antisymmetry(2, &default_ceiling(2)).unwrap();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn antisymmetry_n3() {
    let r = check_antisymmetry(3, &default_ceiling(3)).unwrap();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn classical_partitions() {
    for colors in [vec![1], vec![1, 1], vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1], vec![1, 2, 2], vec![2, 1, 2], vec![2, 2, 1]] {
        let r = check_classical(&colors, &default_ceiling(colors.len())).unwrap();
        assert!(r.passed(), "{colors:?}: {r:?}");
    }
}

#[test]
fn q1_limit() {
    for n in 1..=3 {
        let r = check_q1_limit(n, &default_ceiling(n)).unwrap();
        assert!(r.passed(), "n={n}: {r:?}");
    }
}

#[test]
fn classical_rank3_probe() {
    for colors in [vec![1, 2, 3], vec![3, 1, 2], vec![2, 3, 1]] {
        let r = check_classical(&colors, &default_ceiling(3)).unwrap();
        assert!(r.passed(), "{colors:?}: {r:?}");
    }
}

fn literal_agrees(colors: &[usize], plus_from: i64) -> bool {
    use uwf_core::classical::{BlockFactor, ClassicalEngine};
    use uwf_core::coeffs::var_names;
    let n = colors.len();
    let mut palette = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let engine = ClassicalEngine::with_split(&palette, n, plus_from);
    let ceiling: Vec<i64> = (1..=n as i64).map(|k| 4 * k).collect();
    let direct = engine.direct_series(colors, var_names("t", n), &ceiling).unwrap();
    let literal = engine.partition_series(colors, var_names("t", n), &ceiling, BlockFactor::Literal).unwrap();
    direct.first_difference(&literal).unwrap().is_none()
}

#[test]
fn literal_block_form_only_matches_two_variables_with_zero_mode_positive() {
    assert!(!literal_agrees(&[1, 2], 1));
    assert!(literal_agrees(&[1, 2], 0));
    for colors in [[1, 2, 3], [1, 1, 2], [1, 2, 1]] {
        assert!(!literal_agrees(&colors, 1));
        assert!(!literal_agrees(&colors, 0));
    }
}
