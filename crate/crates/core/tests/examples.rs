//! Worked examples for each layer of the engine.

use std::sync::Arc;

use lindef_core::algebra::{associated_graded, build_algebra, LocalAlgebra};
use lindef_core::invariants::{
    golod_check, is_complete_intersection, koszul_check, koszul_complex_homology, yoneda_report, YonedaVerdict,
};
use lindef_core::linalg::Fp;
use lindef_core::lindefect::{
    analyze_defect, lin_homology, lin_nu_crosscheck, linearity_defect, nu_table, nu_vanishes_cycle_criterion,
    nu_vanishes_homology, LinearityDefect,
};
use lindef_core::poly::{parse_poly, PolySpace};
use lindef_core::report::{analyze, AnalyzeOptions};
use lindef_core::resolution::{resolve, syzygy_step, FinModule, FreeMap, ResolveOptions};
use lindef_core::ringspec::{parse_ring_spec, SpecErrorCode};

fn ring(vars: &str, rels: &str) -> Arc<LocalAlgebra> {
    let spec = parse_ring_spec(&format!("field: 101\nvars: {vars}\nrelations: {rels}\n")).unwrap();
    Arc::new(build_algebra(&spec.presentation().unwrap()).unwrap())
}

fn k1() -> Arc<LocalAlgebra> {
    ring("x, y", "x^2; y^2")
}
fn h3() -> Arc<LocalAlgebra> {
    ring("x", "x^3")
}
fn t2() -> Arc<LocalAlgebra> {
    ring("x, y", "x^2; x*y; y^2")
}

fn names(a: &LocalAlgebra) -> Vec<String> {
    a.basis().iter().map(|b| b.display_with(a.var_names())).collect()
}

#[test]
fn polynomials() {
    let f = Fp::new(101).unwrap();
    let xy = vec!["x".to_string(), "y".to_string()];
    let l = parse_poly("x + y", &xy, f, 2).unwrap();
    let p = lindef_core::poly::poly_mul(&l, &l).unwrap();
    assert_eq!(p.display_with(&xy), "x^2 + 2*x*y + y^2");

    let x = vec!["x".to_string()];
    let space = PolySpace::new(f, 1, 4);
    assert_eq!(space.ideal_span(&[parse_poly("x^2", &x, f, 4).unwrap()]).dim(), 3);
}

#[test]
fn algebras() {
    let a = k1();
    assert_eq!(
        (a.dim(), names(&a), a.hilbert_series().to_vec()),
        (4, vec!["1".into(), "x".into(), "y".into(), "x*y".into()], vec![1, 2, 1])
    );
    assert_eq!((a.multiplicity(), a.edim(), a.socle_degree()), (4, 2, 2));
    let a = h3();
    assert_eq!((a.dim(), a.hilbert_series().to_vec()), (3, vec![1, 1, 1]));
    assert_eq!((a.multiplicity(), a.edim(), a.socle_degree()), (3, 1, 2));
    let a = t2();
    assert_eq!((a.dim(), a.hilbert_series().to_vec()), (3, vec![1, 2]));
    assert_eq!((a.edim(), a.socle_degree()), (2, 1));
}

#[test]
fn associated_graded_rings() {
    let a = k1();
    let g = associated_graded(&a).unwrap();
    assert!(g.is_graded());
    assert_eq!(g.hilbert_series(), a.hilbert_series());
    assert_eq!(names(&g), names(&a));

    // x^2 = y^3 and y^4 = 0: free over F[y]/(y^4) on 1, x
    let a = ring("x, y", "x^2 - y^3; y^4");
    assert!(!a.is_graded());
    let g = associated_graded(&a).unwrap();
    assert_eq!(g.hilbert_series(), &[1, 2, 2, 2, 1]);
    assert_eq!(g.dim(), 8);
}

#[test]
fn syzygies() {
    let a = h3();
    let x = a.normal_form(&parse_poly("x", a.var_names(), Fp::new(101).unwrap(), 4).unwrap()).unwrap();
    let g = syzygy_step(&a, &FreeMap::from_columns(a.dim(), 1, vec![x]).unwrap());
    assert_eq!(g.src_rank(), 1);
    assert_eq!(a.display_element(g.column(0)), "x^2");

    let a = k1();
    let f = Fp::new(101).unwrap();
    let el = |s: &str| a.normal_form(&parse_poly(s, a.var_names(), f, 4).unwrap()).unwrap();
    let map = FreeMap::from_columns(a.dim(), 1, vec![el("x^2"), el("y^2")]).unwrap();
    let m = map.to_matrix(&a);
    let ker = lindef_core::linalg::kernel_basis(&m);
    assert_eq!(ker.dim(), 2 * 4 - m.rank());
}

#[test]
fn resolutions_of_the_residue_field() {
    let r = resolve(&FinModule::residue_field(&k1()), 6).unwrap();
    assert_eq!(r.betti(), vec![1, 2, 3, 4, 5, 6, 7]);
    let t = r.graded_betti().unwrap();
    assert!(t.is_linear());
    assert_eq!(r.regularity_up_to().unwrap(), 0);

    let a = h3();
    let r = resolve(&FinModule::residue_field(&a), 6).unwrap();
    assert_eq!(r.betti(), vec![1; 7]);
    for i in 1..=6 {
        let want = if i % 2 == 1 { "x" } else { "x^2" };
        assert_eq!(a.display_element(r.differential(i).column(0)), want, "∂_{i}");
    }
    assert_eq!(r.graded_betti().unwrap().get(2, 3), 1);
    assert!(r.regularity_up_to().unwrap() >= 3);

    let r = resolve(&FinModule::residue_field(&t2()), 5).unwrap();
    assert_eq!(r.betti(), vec![1, 2, 4, 8, 16, 32]);
}

#[test]
fn maximal_ideal_modules() {
    let m = FinModule::power(&h3(), 1).unwrap();
    let r = resolve(&m, 3).unwrap();
    assert_eq!(r.betti(), vec![1, 1, 1, 1]);
    assert_eq!(h3().display_element(r.differential(1).column(0)), "x^2");
    assert_eq!(FinModule::power(&k1(), 1).unwrap().generators(), 2);
}

#[test]
fn lin_complexes_and_defect() {
    let r = resolve(&FinModule::residue_field(&k1()), 6).unwrap();
    let lin = lin_homology(&r);
    assert!((1..=5).all(|j| lin.row_is_zero(j)));
    assert_eq!(linearity_defect(&r).unwrap(), LinearityDefect::Exact(0));

    let r = resolve(&FinModule::residue_field(&h3()), 6).unwrap();
    let lin = lin_homology(&r);
    assert_ne!(lin.rows[2][0], 0);
    assert!((2..=5).all(|j| !lin.row_is_zero(j)));
    assert_eq!(linearity_defect(&r).unwrap(), LinearityDefect::AtLeast(6));
}

#[test]
fn nu_maps() {
    let h = resolve(&FinModule::residue_field(&h3()), 8).unwrap();
    assert!(!nu_vanishes_homology(&h, 2, 1).unwrap().0);
    assert!(!nu_vanishes_cycle_criterion(&h, 2, 1).unwrap());
    let nu = nu_table(&h).unwrap();
    assert!((1..=nu.max_i()).all(|i| nu.vanishes(i, 1) == (i % 2 == 1)));
    let lin = lin_homology(&h);
    assert!(!lin.row_is_zero(2) && !nu.vanishes(2, 1));
    assert!(lin_nu_crosscheck(&lin, &nu, 2));
    assert_eq!(yoneda_report(&nu, 8).verdict, YonedaVerdict::NoFiniteGenerationDetected);

    let k = resolve(&FinModule::residue_field(&k1()), 8).unwrap();
    assert!(nu_vanishes_homology(&k, 2, 1).unwrap().0);
    let d = analyze_defect(&k).unwrap();
    assert!((1..=d.nu.max_i()).all(|i| d.nu.row_vanishes(i)));
    assert!(d.crosscheck_holds());
    assert_eq!(yoneda_report(&d.nu, 8).verdict, YonedaVerdict::EqualsDual);
}

#[test]
fn koszul_and_golod() {
    let opts = ResolveOptions::default();
    assert!(koszul_check(&k1(), 6, &opts).unwrap().holds);
    assert!(!koszul_check(&h3(), 6, &opts).unwrap().holds);
    assert!(koszul_check(&t2(), 6, &opts).unwrap().holds);

    assert_eq!(koszul_complex_homology(&h3())[1], 1);
    assert_eq!(koszul_complex_homology(&k1())[1], 2);

    for (a, golod) in [(h3(), true), (t2(), true), (k1(), false)] {
        let betti = resolve(&FinModule::residue_field(&a), 8).unwrap().betti();
        assert_eq!(golod_check(&a, &betti, &koszul_complex_homology(&a)).holds, golod);
    }
}

#[test]
fn complete_intersections() {
    let spec = parse_ring_spec("field: 101\nvars: x, y\nrelations: x^2; y^2\n").unwrap();
    let ci = is_complete_intersection(&spec.presentation().unwrap()).unwrap();
    assert!(ci.is_ci && ci.codim == 2);
    let spec = parse_ring_spec("field: 101\nvars: x, y\nrelations: x^2; x*y; y^2\n").unwrap();
    assert!(!is_complete_intersection(&spec.presentation().unwrap()).unwrap().is_ci);
}

#[test]
fn ring_specs() {
    let s = parse_ring_spec("field: 101\nvars: x, y\nrelations: x^2; y^2\n").unwrap();
    assert_eq!((s.vars.len(), s.relations.len()), (2, 2));
    let s = parse_ring_spec("field: 101\nvars: x, y\nrelations: x + y\n");
    let code = match s {
        Err(e) => e.code,
        Ok(s) => s.presentation().unwrap_err().code,
    };
    assert_eq!(code, SpecErrorCode::RelationOrderError);
    assert_eq!(parse_ring_spec("field: 10\nvars: x\n").unwrap_err().code, SpecErrorCode::FieldError);
}

#[test]
fn analyses() {
    let run = |rels: &str, vars: &str, depth| {
        let spec = parse_ring_spec(&format!("field: 101\nvars: {vars}\nrelations: {rels}\n")).unwrap();
        analyze(&spec, &AnalyzeOptions { depth: Some(depth), ..Default::default() }).unwrap()
    };
    let r = run("x^2; y^2", "x, y", 6);
    assert_eq!(r.ld("k"), Some(LinearityDefect::Exact(0)));
    assert!(r.clean());
    let r = run("x^3", "x", 8);
    assert_eq!(r.ld("k"), Some(LinearityDefect::AtLeast(8)));
    assert!(r.verdicts.golod_up_to.holds);
    assert_eq!(r.verdicts.s, lindef_core::invariants::SInvariant::Exact(2));
    let r = run("x^2; x*y; y^2", "x, y", 6);
    assert_eq!(r.resolutions["k"].betti, vec![1, 2, 4, 8, 16, 32, 64]);
}
