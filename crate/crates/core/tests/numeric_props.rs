mod common;

use common::{case_rng, config};
use lcw::exppoly::{ExpPoly, ExpScalar, Frequency};
use lcw::numeric::{fit, tensor_grid, FitModel, SampleGrid};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

/// Plain exponential polynomial with up to two unit frequencies and degree ≤ 1.
fn target(case: u64) -> (ExpPoly, FitModel) {
    let mut r = case_rng(case);
    let d = r.gen_range(1..=2);
    let mut freqs = vec![Frequency::zero(d)];
    let extra = common::frequency(&mut r, d, true, common::UNIT_FREQUENCIES);
    if !extra.is_zero() && r.gen_bool(0.7) {
        freqs.push(extra);
    }
    let degrees: Vec<u32> = freqs.iter().map(|_| r.gen_range(0..=1)).collect();
    let model = FitModel::new(freqs.clone(), degrees).unwrap();
    let mut f = ExpPoly::zero(d);
    for (l, a) in model.basis() {
        if r.gen_bool(0.8) {
            f.add_term(l, a, ExpScalar::from_gauss(common::gauss(&mut r, 9)));
        }
    }
    (f, model)
}

fn grid_points(d: usize) -> Vec<Vec<f64>> {
    if d == 1 {
        tensor_grid(1, 41, -2.0, 2.0)
    } else {
        tensor_grid(2, 13, -2.0, 2.0)
    }
}

proptest! {
    #![proptest_config(config(60))]

    #[test]
    fn fit_recovers_sampled_coefficients(case in any::<u64>()) {
        let (f, model) = target(case);
        let grid = SampleGrid::sample(&f, grid_points(f.dim())).unwrap();
        let out = fit(&grid, &model).unwrap();
        for (l, a, c) in &out.coefficients {
            let want = f.coefficient(l, a).evaluate();
            prop_assert!((c - want).norm() <= 1e-7 * want.norm().max(1.0), "{} at {:?}: {} vs {}", f, a, c, want);
        }
        prop_assert!(out.unrounded.is_empty());
        prop_assert_eq!(out.poly, f);
        prop_assert!(out.residual < 1e-8);
    }

    #[test]
    fn translates_sample_as_shifted_grids(case in any::<u64>()) {
        let (f, _) = target(case);
        let mut r = case_rng(case ^ 0x71);
        let d = f.dim();
        let y = common::vector(&mut r, d, 3);
        let yf = y.to_f64();
        let mut points = grid_points(d);
        points.shuffle(&mut r);
        points.truncate(30);
        let shifted: Vec<Vec<f64>> = points.iter().map(|p| p.iter().zip(&yf).map(|(a, b)| a + b).collect()).collect();
        let moved = SampleGrid::sample(&f.translate(&y).unwrap(), points).unwrap();
        let direct = SampleGrid::sample(&f, shifted).unwrap();
        for (a, b) in moved.values().iter().zip(direct.values()) {
            prop_assert!((a - b).norm() <= 1e-11 * b.norm().max(1.0), "{} vs {}", a, b);
        }
    }
}

#[test]
fn too_few_points_is_underdetermined() {
    let model = FitModel::new(vec![Frequency::zero(1)], vec![3]).unwrap();
    let grid = SampleGrid::sample(&ExpPoly::monomial(&[1]), tensor_grid(1, 3, 0.0, 1.0)).unwrap();
    assert!(matches!(fit(&grid, &model), Err(lcw::Error::Underdetermined { points: 3, coefficients: 4 })));
}

#[test]
fn collinear_columns_are_ill_conditioned() {
    let model = FitModel::new(vec![Frequency::zero(1)], vec![12]).unwrap();
    let grid = SampleGrid::sample(&ExpPoly::monomial(&[1]), tensor_grid(1, 40, 0.0, 0.1)).unwrap();
    assert!(matches!(fit(&grid, &model), Err(lcw::Error::IllConditioned(_))));
}
