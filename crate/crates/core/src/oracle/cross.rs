use super::report::{CheckResult, VerificationReport};
use crate::error::Result;
use crate::exactalg::DiffOp;
use crate::par::Exec;
use crate::realization::{
    realize_cartan, realize_general, realize_lowering_simple, realize_orthogonal, realize_raising,
    OrbitContext,
};
use crate::rootsys::RootClass;

enum Case {
    Raising(usize),
    Cartan(usize),
    Lowering(usize),
    Levi(usize),
}

/// Every closed form that applies to the context against [`realize_general`].
pub fn cross_check(ctx: &OrbitContext, exec: Exec) -> Result<VerificationReport> {
    let rs = ctx.root_system();
    let mut cases: Vec<Case> = ctx.coordinate_roots().map(Case::Raising).collect();
    cases.extend((0..rs.rank()).map(Case::Cartan));
    for r in ctx.coordinate_roots() {
        if rs.root(r).height().abs() == 1 {
            cases.push(Case::Lowering(rs.negative_index(r)));
        }
    }
    cases.extend(ctx.parabolic().roots_in(RootClass::Zero).map(Case::Levi));

    let frame = ctx.frame();
    let results = exec.map(&cases, |case| -> Result<CheckResult> {
        let (name, basis, closed): (String, usize, DiffOp) = match *case {
            Case::Raising(r) => (
                format!("raising E{}", rs.root(r).bracket_form()),
                r,
                realize_raising(ctx, rs.root(r))?,
            ),
            Case::Cartan(k) => (format!("cartan H{}", k + 1), ctx.cartan_basis(k), realize_cartan(ctx, k)?),
            Case::Lowering(r) => (
                format!("lowering E{}", rs.root(r).bracket_form()),
                r,
                realize_lowering_simple(ctx, rs.root(r))?,
            ),
            Case::Levi(r) => (
                format!("levi E{}", rs.root(r).bracket_form()),
                r,
                realize_orthogonal(ctx, rs.root(r))?,
            ),
        };
        let general = realize_general(frame, &frame.basis(basis))?;
        let diff = &closed - &general;
        Ok(if diff.is_zero() {
            CheckResult::pass(name)
        } else {
            CheckResult::fail(name, diff.display(ctx.vars()).to_string())
        })
    });
    let mut report = VerificationReport::new("closed forms", rs.lie_type().to_string());
    report.checks = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(report)
}
