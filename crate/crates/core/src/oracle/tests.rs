use super::*;
use crate::exactalg::int;
use crate::par::Exec;
use crate::realization::{realize_all, su3_realization, Convention, OrbitContext, Weight};
use crate::rootsys::{Family, LieType};

fn ctx(f: Family, n: usize, excluded: &[usize]) -> OrbitContext {
    OrbitContext::new(LieType::new(f, n).unwrap(), excluded, Weight::Symbolic).unwrap()
}

#[test]
fn a2_bracket_pairs() {
    let c = ctx(Family::A, 2, &[]);
    for conv in [Convention::Formal, Convention::Fock] {
        let real = realize_all(&c, conv, Exec::Parallel).unwrap();
        let report = bracket_check(&real, c.algebra(), Exec::Parallel);
        assert_eq!(report.summary(), "64/64 bracket pairs pass", "{:?}", report.failures().next());
    }
}

#[test]
fn matrix_fixtures() {
    let a1 = ctx(Family::A, 1, &[]);
    let a2 = ctx(Family::A, 2, &[]);
    let reps = [
        (&a1, MatrixRep::sl2_spin_half(a1.root_system(), a1.constants()).unwrap()),
        (&a1, MatrixRep::sl2_spin_one(a1.root_system(), a1.constants()).unwrap()),
        (&a2, MatrixRep::sl3_defining(a2.root_system(), a2.constants()).unwrap()),
        (&a2, MatrixRep::adjoint(a2.root_system(), a2.algebra()).unwrap()),
    ];
    assert_eq!(reps[0].1.weight, vec![int(-1)]);
    assert_eq!(reps[1].1.weight, vec![int(-2)]);
    assert_eq!(reps[2].1.weight, vec![int(0), int(-1)]);
    assert_eq!(reps[3].1.weight, vec![int(-1), int(-1)]);
    for (c, rep) in &reps {
        assert!(rep.validate(c.algebra()).all_passed(), "{}", rep.name);
        for conv in [Convention::Formal, Convention::Fock] {
            let real = realize_all(c, conv, Exec::Sequential).unwrap();
            let report = matrix_check(c, &real, rep).unwrap();
            assert!(report.all_passed(), "{} {conv}: {:?}", rep.name, report.failures().collect::<Vec<_>>());
        }
    }
}

#[test]
fn numeric_weight_mismatch_is_rejected() {
    let c = OrbitContext::new(LieType::new(Family::A, 1).unwrap(), &[], Weight::Numeric(vec![int(3)])).unwrap();
    let rep = MatrixRep::sl2_spin_half(c.root_system(), c.constants()).unwrap();
    let real = realize_all(&c, Convention::Formal, Exec::Sequential).unwrap();
    assert!(matrix_check(&c, &real, &rep).is_err());
}

#[test]
fn closed_forms_small_types() {
    for (f, n, ex) in [
        (Family::A, 1, vec![]),
        (Family::A, 3, vec![]),
        (Family::A, 3, vec![1]),
        (Family::A, 2, vec![1]),
        (Family::B, 2, vec![]),
        (Family::C, 3, vec![0]),
        (Family::G, 2, vec![]),
        (Family::G, 2, vec![1]),
    ] {
        let c = ctx(f, n, &ex);
        let report = cross_check(&c, Exec::Parallel).unwrap();
        assert!(report.all_passed(), "{f:?}{n} {ex:?}: {:?}", report.failures().collect::<Vec<_>>());
        let real = realize_all(&c, Convention::Formal, Exec::Parallel).unwrap();
        let br = bracket_check(&real, c.algebra(), Exec::Parallel);
        assert!(br.all_passed(), "{f:?}{n} {ex:?}: {}", br.summary());
    }
}

#[test]
fn su3_table_preserves_brackets() {
    let real = su3_realization(Exec::Sequential).unwrap();
    let report = bracket_check(&real, &crate::realization::gl3_algebra(), Exec::Sequential);
    assert_eq!(report.summary(), "81/81 bracket pairs pass");
}
