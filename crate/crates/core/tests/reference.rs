use std::f64::consts::PI;

use tritospec_core::applications::{positive_definite_projection_check, project, traceless_analysis};
use tritospec_core::conditioning::{condition_table, eigvec_condition_general, max_eigvec_condition_normal};
use tritospec_core::lab::eigvec_condition;
use tritospec_core::matrix::{DenseMatrix, TridiagonalMatrix};
use tritospec_core::structured::{
    hermitian_structured_rayleigh, structured_eig_condition, structured_pseudospectrum, PseudospectrumBoundary,
    PseudospectrumMode, Subspace,
};
use tritospec_core::toeplitz::{eigenvalues_toeplitz, Family};
use tritospec_core::{c64, Error, TriToeplitz, C64};

#[test]
fn spectrum_of_strongly_nonnormal_matrix() {
    let t = TriToeplitz::real(25, 1.0, 0.0, 0.01).unwrap();
    for (h, l) in eigenvalues_toeplitz(&t).iter().enumerate() {
        let want = 0.2 * ((h + 1) as f64 * PI / 26.0).cos();
        assert!((l - c64(want, 0.0)).norm() < 1e-15);
    }
}

#[test]
fn unimodular_eigenvector_conditions_are_symmetric_in_h() {
    let t = TriToeplitz::new(100, C64::from_polar(1.0, 0.4), c64(0.3, -0.2), C64::from_polar(1.0, 2.1)).unwrap();
    let k: Vec<f64> = (1..=100).map(|h| eigvec_condition(&t, Family::Toeplitz, h).unwrap()).collect();
    for h in 0..50 {
        assert!((k[h] - k[99 - h]).abs() <= 1e-9 * k[h]);
    }
    let max = max_eigvec_condition_normal(&t, Family::Toeplitz).unwrap();
    let direct = k.iter().cloned().fold(0.0, f64::max);
    assert!((max - direct).abs() <= 1e-12 * direct);
}

#[test]
fn symmetric_structured_conditions_do_not_depend_on_sigma() {
    let a = TriToeplitz::real(100, 1.0, 0.0, 1.0).unwrap();
    let b = TriToeplitz::real(100, -37.5, 4.0, -37.5).unwrap();
    for h in 1..=100 {
        let ka = structured_eig_condition(&a, h, Subspace::Symmetric).unwrap();
        let kb = structured_eig_condition(&b, h, Subspace::Symmetric).unwrap();
        assert!((ka - kb).abs() < 1e-15);
    }
}

#[test]
fn skew_condition_is_constant() {
    let t = TriToeplitz::real(16, 2.0, 1.0, -2.0).unwrap();
    let rows = condition_table(&t, Family::Toeplitz, Some(Subspace::Skew)).unwrap();
    for r in rows {
        assert!((r.kappa_structured.unwrap() - 0.25).abs() < 1e-15);
    }
}

#[test]
fn deflation_condition_of_diagonal() {
    let a = DenseMatrix::from_real_rows(&[[0.0, 0.0], [0.0, 3.0]]);
    let k = eigvec_condition_general(&a, c64(0.0, 0.0), &[c64(1.0, 0.0), c64(0.0, 0.0)]).unwrap();
    assert!((k - 1.0 / 3.0).abs() < 1e-14);
}

#[test]
fn ellipse_collapses_for_real_symmetric_symbol() {
    let t = TriToeplitz::real(5, 0.75, 1.0, 0.75).unwrap();
    let PseudospectrumBoundary::Ellipse(points) =
        structured_pseudospectrum(&t, 0.1, PseudospectrumMode::Ellipse { points: 64 }).unwrap()
    else {
        panic!("expected ellipse");
    };
    assert_eq!(points.len(), 64);
    for z in points {
        assert!(z.im.abs() < 1e-15 && z.re >= -0.5 - 1e-15 && z.re <= 2.5 + 1e-15);
    }
}

#[test]
fn quarter_turn_rayleigh_quotient_is_delta() {
    let t = TriToeplitz::new(9, c64(0.0, 1.2), c64(0.4, 0.0), c64(0.0, -1.2)).unwrap();
    let r = hermitian_structured_rayleigh(&t, c64(1.0, 0.0), 3).unwrap();
    assert!((r.lambda_tilde - 0.4).abs() < 1e-15);
    let same = hermitian_structured_rayleigh(&t, c64(0.0, 5.0), 3).unwrap();
    assert_eq!((same.lower, same.upper), (0.0, 0.0));
}

#[test]
fn traceless_projection_report() {
    let t = TriToeplitz::real(4, 1.0, 0.0, 1.0).unwrap();
    let a = t.with_corners(c64(1.0, 0.0), c64(-1.0, 0.0));
    let p = project(&a).unwrap();
    assert!(p.traceless);
    assert!((p.kappa2.unwrap() - (PI / 5.0).cos() / (2.0 * PI / 5.0).cos()).abs() < 1e-14);
    assert!(p.hw_lhs.unwrap() <= p.hw_rhs.unwrap());
    let odd = TriToeplitz::real(3, 1.0, 0.0, 1.0).unwrap();
    assert!(traceless_analysis(&odd).unwrap().singular);
    assert_eq!(project(&odd.with_corners(c64(0.5, 0.0), c64(-0.5, 0.0))).unwrap().kappa2, None);
}

#[test]
fn definiteness_of_projection() {
    let a = TridiagonalMatrix::real_symmetric(&[3.0; 5], &[1.0; 4]).unwrap();
    assert!(positive_definite_projection_check(&a).unwrap());
    let b = TridiagonalMatrix::real_symmetric(&[1.0; 60], &[1.0; 59]).unwrap();
    assert!(!positive_definite_projection_check(&b).unwrap());
    let c = TridiagonalMatrix::new(vec![c64(1.0, 0.0)], vec![c64(1.0, 0.0); 2], vec![c64(2.0, 0.0)]).unwrap();
    assert_eq!(positive_definite_projection_check(&c), Err(Error::NotSymmetric));
}
