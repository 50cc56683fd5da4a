use super::*;
use crate::exactalg::{int, Polynomial};
use crate::rootsys::{Family, LieType, Root};

fn a(n: usize) -> LieType {
    LieType::new(Family::A, n).unwrap()
}

fn render(ctx: &OrbitContext, op: &DiffOp) -> String {
    op.display(ctx.vars()).to_string()
}

#[test]
fn sl2_formal_operators() {
    let ctx = OrbitContext::new(a(1), &[], Weight::Symbolic).unwrap();
    let real = realize_all(&ctx, Convention::Formal, Exec::Sequential).unwrap();
    let z = Polynomial::var(ctx.nvars(), 0);
    let j1 = Polynomial::var(ctx.nvars(), 1);
    let e = real.operator_by_label("E[1]").unwrap();
    assert_eq!(*e, DiffOp::partial(ctx.nvars(), 0));
    let h = real.operator_by_label("H1").unwrap();
    assert_eq!(*h, DiffOp::new(j1.clone(), [(0, z.scale(&int(2)))]));
    let f = real.operator_by_label("E[-1]").unwrap();
    assert_eq!(*f, DiffOp::new(-(&j1 * &z), [(0, -(&z * &z))]));
}

#[test]
fn closed_forms_match_on_a2() {
    let ctx = OrbitContext::new(a(2), &[], Weight::Symbolic).unwrap();
    let frame = ctx.frame();
    for g in ctx.coordinate_roots().collect::<Vec<_>>() {
        let r = ctx.root_system().root(g).clone();
        let closed = realize_raising(&ctx, &r).unwrap();
        let general = realize_general(frame, &frame.basis(g)).unwrap();
        assert_eq!(closed, general, "raising {r}: {}", render(&ctx, &closed));
        if r.height() == 1 {
            let low = Root::new(r.neg().coords().to_vec());
            let closed = realize_lowering_simple(&ctx, &low).unwrap();
            let b = ctx.root_system().index_of(&low).unwrap();
            let general = realize_general(frame, &frame.basis(b)).unwrap();
            assert_eq!(closed, general, "lowering {low}: {} vs {}", render(&ctx, &closed), render(&ctx, &general));
        }
    }
    for k in 0..2 {
        let closed = realize_cartan(&ctx, k).unwrap();
        let general = realize_general(frame, &frame.basis(ctx.cartan_basis(k))).unwrap();
        assert_eq!(closed, general);
    }
}

#[test]
fn raising_first_order_term_on_a2() {
    let ctx = OrbitContext::new(a(2), &[], Weight::Symbolic).unwrap();
    let op = realize_raising(&ctx, &Root::new(vec![1, 0])).unwrap();
    let s = render(&ctx, &op);
    assert_eq!(s, "d/dz[1,0] + ((1/2)*z[0,1])*d/dz[1,1]");
}

#[test]
fn su3_product_table() {
    let real = su3_realization(Exec::Sequential).unwrap();
    for (l, op) in real.labels.iter().zip(&real.operators) {
        println!("{l}: {}", op.display(&real.vars));
    }
}
