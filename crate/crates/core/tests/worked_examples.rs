//! Small worked examples, computed by hand.

use motcell_core::parabolic::flag_torus_model;
use motcell_core::toric::{hirzebruch, projective_space};
use motcell_core::{
    bb_cells, build_root_system, cofiber_ledger, motivic_decomposition, order_filtration,
    poincare_polynomial, qplus_report, quadric_torus_model, sa1_homology_report, schubert_cells,
    toric_torus_model, Fan, Family, ParabolicSubset, QuadricSpec, RootSystemSpec, SphereSymbol,
    DEFAULT_WEYL_CAP,
};

fn mult(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

#[test]
fn p2_with_lambda_1_2() {
    let m = toric_torus_model(&projective_space(2));
    assert_eq!(bb_cells(&m, &[1, 2]).unwrap().dimension_multiset(), vec![0, 1, 2]);
    let c = order_filtration(bb_cells(&m, &[1, 2]).unwrap()).0;
    assert_eq!(motivic_decomposition(&c).to_string(), "Z ⊕ Z(1)[2] ⊕ Z(2)[4]");
    assert_eq!(sa1_homology_report(&c).shift_multiset(), vec![0, 1, 2]);
}

#[test]
fn hirzebruch_f1() {
    let f = hirzebruch(1);
    assert_eq!(f.rays(), &[vec![1, 0], vec![0, 1], vec![-1, 1], vec![0, -1]]);
    let m = toric_torus_model(&f);
    assert_eq!(m.fixed_points().len(), 4);
    assert_eq!(bb_cells(&m, &[1, 10]).unwrap().dimension_multiset(), vec![0, 1, 1, 2]);
}

#[test]
fn non_primitive_ray() {
    let e = Fan::new("bad", 2, vec![vec![2, 0], vec![0, 1], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![2, 0]])
        .unwrap_err();
    assert_eq!(e.kind(), "NonPrimitiveRay");
}

#[test]
fn a2_borel_bb_matches_lengths() {
    let rs = build_root_system(RootSystemSpec::new(Family::A, 2).unwrap());
    let m = flag_torus_model(&rs, &ParabolicSubset::borel(), DEFAULT_WEYL_CAP).unwrap();
    let c = bb_cells(&m, &[1, 1]).unwrap();
    assert_eq!(c.dimension_multiset(), vec![0, 1, 1, 2, 2, 3]);
    assert_eq!(c.cells[0].fixed_point, "e");
    assert_eq!(sa1_homology_report(&c).shift_multiset(), vec![0, 1, 1, 2, 2, 3]);
}

#[test]
fn a3_flag_poincare() {
    let rs = build_root_system(RootSystemSpec::new(Family::A, 3).unwrap());
    let c = schubert_cells(&rs, &ParabolicSubset::borel(), DEFAULT_WEYL_CAP).unwrap();
    // (1+t)(1+t+t^2)(1+t+t^2+t^3)
    assert_eq!(poincare_polynomial(&c), vec![1, 3, 5, 6, 5, 3, 1]);
}

#[test]
fn q4_reports() {
    let m = quadric_torus_model(QuadricSpec::new(2).unwrap());
    let c = bb_cells(&m, &[1, 3, 9]).unwrap();
    let ledger = cofiber_ledger(&c);
    let spheres = ledger.sphere_multiset().unwrap();
    let want: Vec<SphereSymbol> = [0, 1, 2, 2, 3, 4].iter().map(|&d| SphereSymbol::tate(d)).collect();
    assert_eq!(spheres, want);

    let q = qplus_report(&c);
    let count: usize = q.spheres.iter().map(|(_, m)| m).sum();
    assert_eq!(count, 6);
    let twists = motivic_decomposition(&c).twists();
    let weights: Vec<usize> =
        q.spheres.iter().flat_map(|(s, m)| std::iter::repeat_n(s.q as usize, *m)).collect();
    assert_eq!(mult(weights), twists);
}

#[test]
fn p1_ledger_and_qplus() {
    let m = toric_torus_model(&projective_space(1));
    let c = bb_cells(&m, &[1]).unwrap();
    let spheres = cofiber_ledger(&c).sphere_multiset().unwrap();
    assert_eq!(spheres, vec![SphereSymbol { p: 0, q: 0 }, SphereSymbol { p: 2, q: 1 }]);
    assert_eq!(qplus_report(&c).expression, "X ≃_Q+ S^{0,0} ∨ S^{2,1}");
}
