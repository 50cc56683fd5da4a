use lieop::exactalg::{int, rat, LiePoly, Polynomial};
use lieop::oracle::{bracket_check, cross_check, matrix_check, MatrixRep};
use lieop::realization::{
    adjoint_basis, coordinate_change_su3, coordinate_change_su3_inverse, operator_from_json,
    realize_all, realize_general, realize_orthogonal, realize_product_coordinates, realize_raising,
    su3_frame, su3_kernel, Convention, ExtremeKind, OrbitContext, OperatorDocument, Side, Weight,
};
use lieop::rootsys::{Family, LieType, Root};
use lieop::{Error, Exec};

fn lt(f: Family, n: usize) -> LieType {
    LieType::new(f, n).unwrap()
}

#[test]
fn coefficient_degree_bounds() {
    // raising: <= nu; simple lowering: between nu + 1 and nu + 2 (A1 and A2 reach nu + 2)
    for t in LieType::all_up_to_rank(3).into_iter().chain([lt(Family::G, 2)]) {
        let ctx = OrbitContext::new(t, &[], Weight::Symbolic).unwrap();
        let rs = ctx.root_system();
        let nu = rs.nu_degree() as u32;
        let coords = ctx.vars().coord_range();
        let real = realize_all(&ctx, Convention::Formal, Exec::Parallel).unwrap();
        let mut lowering_max = 0;
        for b in 0..ctx.nroots() {
            let h = rs.root(b).height();
            let bound = match h {
                1.. => nu,
                -1 => nu + 2,
                _ => continue,
            };
            for q in real.operators[b].derivatives().values() {
                let d = q.degree_in(coords.clone()).unwrap_or(0);
                assert!(d <= bound, "{t} {}", real.labels[b]);
                if h == -1 {
                    lowering_max = lowering_max.max(d);
                }
            }
        }
        assert!(lowering_max > nu, "{t}");
    }
}

#[test]
fn abelian_nilradicals_give_pure_derivatives() {
    // Grassmannians, Lagrangian Grassmannian, quadric
    let cases = [
        (lt(Family::A, 3), vec![0, 2]),
        (lt(Family::A, 4), vec![0, 1, 3]),
        (lt(Family::C, 3), vec![0, 1]),
        (lt(Family::D, 4), vec![1, 2, 3]),
        (lt(Family::B, 3), vec![1, 2]),
    ];
    for (t, excluded) in cases {
        let ctx = OrbitContext::new(t, &excluded, Weight::Symbolic).unwrap();
        let rs = ctx.root_system();
        let roots: Vec<usize> = ctx.coordinate_roots().collect();
        let abelian = roots
            .iter()
            .all(|&a| roots.iter().all(|&b| rs.sum_index(a, b).is_none()));
        assert!(abelian, "{t} {excluded:?}");
        for r in roots {
            let op = realize_raising(&ctx, rs.root(r)).unwrap();
            assert_eq!(op, lieop::exactalg::DiffOp::partial(ctx.nvars(), ctx.var_of_root(r).unwrap()));
        }
    }
}

#[test]
fn fock_is_formal_of_adjoint() {
    let ctx = OrbitContext::new(lt(Family::B, 2), &[], Weight::Symbolic).unwrap();
    let formal = realize_all(&ctx, Convention::Formal, Exec::Parallel).unwrap();
    let fock = realize_all(&ctx, Convention::Fock, Exec::Parallel).unwrap();
    for b in 0..formal.dim() {
        assert_eq!(fock.operators[b], formal.operators[adjoint_basis(&ctx, b)]);
    }
    assert!(bracket_check(&fock, ctx.algebra(), Exec::Parallel).all_passed());
}

#[test]
fn right_single_exponential_matches_series() {
    for t in [lt(Family::A, 2), lt(Family::B, 2), lt(Family::G, 2)] {
        let ctx = OrbitContext::new(t, &[], Weight::Symbolic).unwrap();
        let frame = ctx.frame();
        let ordering = vec![frame.coordinates.clone()];
        for b in 0..ctx.algebra().dim() {
            let x = frame.basis(b);
            let product = realize_product_coordinates(frame, &ordering, Side::Right, &x).unwrap();
            assert_eq!(product, realize_general(frame, &x).unwrap(), "{t} {}", ctx.algebra().label(b));
        }
    }
}

#[test]
fn left_single_exponential_preserves_brackets() {
    let ctx = OrbitContext::new(lt(Family::A, 2), &[], Weight::Symbolic).unwrap();
    let frame = ctx.frame();
    let ordering = vec![frame.coordinates.clone()];
    let operators = (0..ctx.algebra().dim())
        .map(|b| realize_product_coordinates(frame, &ordering, Side::Left, &frame.basis(b)).unwrap())
        .collect();
    let real = lieop::realization::Realization {
        vars: ctx.vars().clone(),
        labels: ctx.algebra().labels().to_vec(),
        operators,
        convention: Convention::Formal,
        sense: lieop::realization::BracketSense::Preserved,
    };
    assert!(bracket_check(&real, ctx.algebra(), Exec::Sequential).all_passed());
}

#[test]
fn bad_orderings_are_rejected() {
    let frame = su3_frame();
    let x = frame.basis(0);
    let missing = vec![vec![(0, 1), (1, 2)]];
    assert!(matches!(
        realize_product_coordinates(&frame, &missing, Side::Left, &x),
        Err(Error::Ordering(_))
    ));
    let not_raising = vec![vec![(0, 1), (1, 2), (2, 3)]];
    assert!(matches!(
        realize_product_coordinates(&frame, &not_raising, Side::Left, &x),
        Err(Error::Ordering(_))
    ));
}

#[test]
fn orthogonal_case() {
    let ctx = OrbitContext::new(lt(Family::A, 2), &[1], Weight::Symbolic).unwrap();
    let op = realize_orthogonal(&ctx, &Root::new(vec![0, 1])).unwrap();
    let frame = ctx.frame();
    let b = ctx.root_system().index_of(&Root::new(vec![0, 1])).unwrap();
    assert_eq!(op, realize_general(frame, &frame.basis(b)).unwrap());
    assert!(!op.is_zero());

    let borel = OrbitContext::new(lt(Family::A, 1), &[], Weight::Numeric(vec![int(0)])).unwrap();
    assert!(realize_orthogonal(&borel, &Root::new(vec![1])).unwrap().is_zero());
    let charged = OrbitContext::new(lt(Family::A, 1), &[], Weight::Symbolic).unwrap();
    assert!(matches!(
        realize_orthogonal(&charged, &Root::new(vec![1])),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn excluded_weight_must_vanish() {
    let r = OrbitContext::new(lt(Family::A, 2), &[1], Weight::Numeric(vec![int(1), int(1)]));
    assert!(matches!(r, Err(Error::Argument(_))));
    assert!(OrbitContext::new(lt(Family::A, 2), &[1], Weight::Numeric(vec![int(1), int(0)])).is_ok());
}

#[test]
fn highest_weight_mode() {
    for (t, ex) in [(lt(Family::A, 2), vec![]), (lt(Family::B, 2), vec![]), (lt(Family::A, 3), vec![1])] {
        let ctx = OrbitContext::with_kind(t, &ex, Weight::Symbolic, ExtremeKind::Highest).unwrap();
        assert!(ctx.coordinate_roots().all(|r| !ctx.root_system().root(r).is_positive()));
        let real = realize_all(&ctx, Convention::Formal, Exec::Parallel).unwrap();
        assert!(bracket_check(&real, ctx.algebra(), Exec::Parallel).all_passed(), "{t}");
        assert!(cross_check(&ctx, Exec::Parallel).unwrap().all_passed(), "{t}");
    }
}

#[test]
fn trivial_representation() {
    let ctx = OrbitContext::new(lt(Family::A, 1), &[], Weight::Numeric(vec![int(0)])).unwrap();
    let real = realize_all(&ctx, Convention::Formal, Exec::Sequential).unwrap();
    let rep = MatrixRep {
        name: "trivial".into(),
        matrices: vec![vec![vec![int(0)]]; 3],
        extreme: vec![int(1)],
        weight: vec![int(0)],
    };
    assert!(matrix_check(&ctx, &real, &rep).unwrap().all_passed());
    let one = Polynomial::one(ctx.nvars());
    for op in &real.operators {
        assert!(op.apply(&one).is_zero());
    }
}

#[test]
fn spin_one_and_adjoint_fixtures() {
    let a1 = OrbitContext::new(lt(Family::A, 1), &[], Weight::Symbolic).unwrap();
    let real = realize_all(&a1, Convention::Formal, Exec::Sequential).unwrap();
    let rep = MatrixRep::sl2_spin_one(a1.root_system(), a1.constants()).unwrap();
    assert!(matrix_check(&a1, &real, &rep).unwrap().all_passed());
    let g2 = OrbitContext::new(lt(Family::G, 2), &[], Weight::Symbolic).unwrap();
    let rep = MatrixRep::adjoint(g2.root_system(), g2.algebra()).unwrap();
    assert!(rep.validate(g2.algebra()).all_passed());
    let real = realize_all(&g2, Convention::Formal, Exec::Parallel).unwrap();
    assert!(matrix_check(&g2, &real, &rep).unwrap().all_passed());
}

#[test]
fn coordinate_change_examples() {
    let nv = 1;
    let c = Polynomial::var(nv, 0);
    let zero = Polynomial::zero(nv);
    let fixed = coordinate_change_su3(&[zero.clone(), c.clone(), zero.clone()]);
    assert_eq!(fixed, [zero.clone(), c, zero]);
    let one = Polynomial::one(nv);
    let z = coordinate_change_su3(&[one.clone(), Polynomial::zero(nv), one.clone()]);
    assert_eq!(z[1], Polynomial::constant(nv, rat(1, 2)));
    assert_eq!(coordinate_change_su3_inverse(&z), [one.clone(), Polynomial::zero(nv), one]);
}

#[test]
fn su3_kernel_values() {
    let (vars, k) = su3_kernel(1, 0);
    let zeros: Vec<Option<Polynomial>> = (0..6).map(|_| Some(Polynomial::zero(6))).collect();
    assert_eq!(k.substitute_all(&zeros), Polynomial::one(6));
    assert_eq!(k.display(&vars).to_string(), "z12*zb12 + z13*zb13 + 1");

    // z23 = 0: Δ2 = 1 + |z13|²
    let (vars, k) = su3_kernel(1, 1);
    let on_plane = k
        .substitute(2, &Polynomial::zero(6))
        .substitute(5, &Polynomial::zero(6));
    assert_eq!(
        on_plane.display(&vars).to_string(),
        "z12*z13*zb12*zb13 + z13^2*zb13^2 + z12*zb12 + 2*z13*zb13 + 1"
    );
}

#[test]
fn json_documents_round_trip() {
    let ctx = OrbitContext::new(lt(Family::G, 2), &[], Weight::Symbolic).unwrap();
    let real = realize_all(&ctx, Convention::Formal, Exec::Parallel).unwrap();
    for (label, op) in real.labels.iter().zip(&real.operators) {
        let doc = OperatorDocument::new(&ctx, label, Convention::Formal, op);
        let text = serde_json::to_string(&doc).unwrap();
        let back: OperatorDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(&operator_from_json(&back.operator, ctx.vars()).unwrap(), op);
    }
}

#[test]
fn operator_of_is_linear() {
    let ctx = OrbitContext::new(lt(Family::A, 2), &[], Weight::Symbolic).unwrap();
    let real = realize_all(&ctx, Convention::Formal, Exec::Sequential).unwrap();
    let nv = ctx.nvars();
    let x = LiePoly::from_terms(nv, [(0, Polynomial::constant(nv, int(3))), (7, Polynomial::constant(nv, rat(-1, 2)))]);
    let want = &real.operators[0].scale(&int(3)) + &real.operators[7].scale(&rat(-1, 2));
    assert_eq!(real.operator_of(&x), want);
    assert_eq!(realize_general(ctx.frame(), &x).unwrap(), want);
}
