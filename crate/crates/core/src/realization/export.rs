//! JSON form of operators.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::context::{OrbitContext, Weight};
use super::Convention;
use crate::error::{Error, Result};
use crate::exactalg::{parse_rational, DiffOp, Monomial, Polynomial, VarSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub monomial: BTreeMap<String, u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub scalar: Vec<TermJson>,
    /// Keyed by the orbit direction of the partial derivative.
    pub derivatives: BTreeMap<String, Vec<TermJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightDoc {
    Symbolic(String),
    Numeric(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorDocument {
    pub algebra: String,
    pub parabolic: Vec<String>,
    pub weight: WeightDoc,
    pub convention: Convention,
    pub generator: String,
    pub operator: OperatorJson,
}

impl OperatorDocument {
    pub fn new(ctx: &OrbitContext, generator: &str, convention: Convention, op: &DiffOp) -> Self {
        OperatorDocument {
            algebra: ctx.root_system().lie_type().to_string(),
            parabolic: ctx.parabolic_names(),
            weight: match ctx.weight() {
                Weight::Symbolic => WeightDoc::Symbolic("symbolic".into()),
                Weight::Numeric(w) => WeightDoc::Numeric(w.iter().map(|q| q.to_string()).collect()),
            },
            convention,
            generator: generator.to_string(),
            operator: operator_to_json(op, ctx.vars()),
        }
    }
}

fn poly_to_json(p: &Polynomial, vars: &VarSet) -> Vec<TermJson> {
    p.terms()
        .map(|(m, c)| TermJson {
            coeff: c.to_string(),
            monomial: m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (vars.name(i).to_string(), e))
                .collect(),
        })
        .collect()
}

fn poly_from_json(terms: &[TermJson], vars: &VarSet) -> Result<Polynomial> {
    let nv = vars.len();
    let mut p = Polynomial::zero(nv);
    for t in terms {
        let mut exps = vec![0u32; nv];
        for (name, &e) in &t.monomial {
            let i = vars
                .index_of_name(name)
                .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
            exps[i] += e;
        }
        p.add_term(Monomial::from_exponents(exps), parse_rational(&t.coeff)?);
    }
    Ok(p)
}

pub fn operator_to_json(op: &DiffOp, vars: &VarSet) -> OperatorJson {
    OperatorJson {
        scalar: poly_to_json(op.scalar(), vars),
        derivatives: op
            .derivatives()
            .iter()
            .map(|(&i, q)| (vars.key(i).to_string(), poly_to_json(q, vars)))
            .collect(),
    }
}

pub fn operator_from_json(json: &OperatorJson, vars: &VarSet) -> Result<DiffOp> {
    let scalar = poly_from_json(&json.scalar, vars)?;
    let mut derivs = Vec::new();
    for (key, terms) in &json.derivatives {
        let i = vars
            .index_of_key(key)
            .ok_or_else(|| Error::Parse(format!("unknown coordinate {key:?}")))?;
        derivs.push((i, poly_from_json(terms, vars)?));
    }
    Ok(DiffOp::new(scalar, derivs))
}
