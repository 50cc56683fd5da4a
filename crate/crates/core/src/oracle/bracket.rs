use super::report::{CheckResult, VerificationReport};
use crate::exactalg::{LieAlgebra, LiePoly};
use crate::par::Exec;
use crate::realization::{BracketSense, Realization};

/// `[D_a, D_b] = D_{[e_a,e_b]}` (or `D_{[e_b,e_a]}` for a bracket-reversing
/// realization) for every ordered pair of basis elements.
pub fn bracket_check(real: &Realization, alg: &LieAlgebra, exec: Exec) -> VerificationReport {
    let dim = alg.dim();
    let nv = real.vars.len();
    let pairs: Vec<(usize, usize)> = (0..dim).flat_map(|a| (0..dim).map(move |b| (a, b))).collect();
    let checks = exec.map(&pairs, |&(a, b)| {
        let lhs = real.operators[a].commutator(&real.operators[b]);
        let (x, y) = match real.sense {
            BracketSense::Preserved => (a, b),
            BracketSense::Reversed => (b, a),
        };
        let br = LiePoly::basis(nv, x).bracket(&LiePoly::basis(nv, y), alg);
        let residual = &lhs - &real.operator_of(&br);
        let name = format!("[{}, {}]", alg.label(a), alg.label(b));
        if residual.is_zero() {
            CheckResult::pass(name)
        } else {
            CheckResult::fail(name, residual.display(&real.vars).to_string())
        }
    });
    let mut report = VerificationReport::new("bracket pairs", format!("{} operators", real.convention));
    report.checks = checks;
    report
}
