//! JSON forms of symmetric functions, verifier reports and matrix bundles.
//! Coefficients are scalar strings in the `q`, `t` expression grammar.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use fockbridge_core::heisenberg::HeisenbergParams;
use fockbridge_core::identities::{ConverseReport, VerifyReport};
use fockbridge_core::linalg::Matrix;
use fockbridge_core::partition::Partition;
use fockbridge_core::reps::{BundleOperator, LadderKind, MatrixBundle};
use fockbridge_core::symfunc::{Basis, SymFunc};
use fockbridge_core::{Error, Result, Scalar};

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct TermJson {
    pub partition: Vec<u32>,
    pub coeff: String,
}

/// `{"basis":"p","terms":[{"partition":[2,1],"coeff":"(1 - t)/(1 - q)"}]}`,
/// terms in reverse lexicographic order.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct SymFuncJson {
    pub basis: String,
    pub terms: Vec<TermJson>,
}

impl From<&SymFunc> for SymFuncJson {
    fn from(f: &SymFunc) -> Self {
        let mut terms: Vec<TermJson> = f
            .terms()
            .map(|(p, c)| TermJson {
                partition: p.parts().to_vec(),
                coeff: c.to_string(),
            })
            .collect();
        terms.sort_by(|a, b| b.partition.cmp(&a.partition));
        SymFuncJson {
            basis: f.basis().symbol().into(),
            terms,
        }
    }
}

impl TryFrom<&SymFuncJson> for SymFunc {
    type Error = Error;

    fn try_from(j: &SymFuncJson) -> Result<SymFunc> {
        let basis: Basis = j.basis.parse()?;
        let mut seen = BTreeMap::new();
        for t in &j.terms {
            let p = Partition::new(t.partition.clone())?;
            let c: Scalar = t.coeff.parse()?;
            if seen.insert(p.clone(), c).is_some() {
                return Err(Error::InvalidArgument(format!("partition {p} listed twice")));
            }
        }
        Ok(SymFunc::from_terms(basis, seen))
    }
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct FailureJson {
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct DegreeFlag {
    pub degree: i64,
    pub independent: bool,
}

/// Extra detail attached to the report of the converse diagnostic.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ConverseJson {
    pub independence: Vec<DegreeFlag>,
    pub heisenberg_action: bool,
    pub pieri: bool,
    pub cauchy: bool,
    pub equivalent: bool,
    pub reports: Vec<ReportJson>,
}

/// `{"identity":"genPieri","passed":true,"checked":N,"failures":[...]}`
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ReportJson {
    pub identity: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<FailureJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub converse: Option<Box<ConverseJson>>,
}

impl From<&VerifyReport> for ReportJson {
    fn from(r: &VerifyReport) -> Self {
        ReportJson {
            identity: r.identity.clone(),
            passed: r.passed(),
            checked: r.checked.len(),
            failures: r
                .failures
                .iter()
                .map(|f| FailureJson {
                    instance: f.instance.clone(),
                    lhs: f.lhs.clone(),
                    rhs: f.rhs.clone(),
                })
                .collect(),
            converse: None,
        }
    }
}

impl From<&ConverseReport> for ReportJson {
    /// Passes when all three conditions hold; failures of the parts are
    /// listed with the part's name in front.
    fn from(c: &ConverseReport) -> Self {
        let reports: Vec<ReportJson> = c.reports().into_iter().map(ReportJson::from).collect();
        let failures = reports
            .iter()
            .flat_map(|r| {
                r.failures.iter().map(|f| FailureJson {
                    instance: format!("{}: {}", r.identity, f.instance),
                    ..f.clone()
                })
            })
            .collect();
        ReportJson {
            identity: "converse".into(),
            passed: c.heisenberg_action() && c.pieri_holds() && c.cauchy_holds(),
            checked: reports.iter().map(|r| r.checked).sum(),
            failures,
            converse: Some(Box::new(ConverseJson {
                independence: c
                    .independence
                    .iter()
                    .map(|&(degree, independent)| DegreeFlag { degree, independent })
                    .collect(),
                heisenberg_action: c.heisenberg_action(),
                pieri: c.pieri_holds(),
                cauchy: c.cauchy_holds(),
                equivalent: c.equivalent(),
                reports,
            })),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct DegreeJson {
    pub degree: i64,
    pub labels: Vec<String>,
}

/// One matrix: `op` is `"U"` or `"D"`, rows follow the target degree.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct OperatorJson {
    pub op: String,
    pub k: u32,
    pub degree: i64,
    pub matrix: Vec<Vec<String>>,
}

/// A truncated representation given by the matrices of `U_k` and `D_k`.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct BundleJson {
    pub degree_step: i64,
    pub k_max: u32,
    /// `a_k` as an expression in `q`, `t` and `k`.
    pub params: String,
    pub highest: String,
    pub basis: Vec<DegreeJson>,
    pub operators: Vec<OperatorJson>,
}

impl From<&MatrixBundle> for BundleJson {
    fn from(b: &MatrixBundle) -> Self {
        BundleJson {
            degree_step: b.degree_step,
            k_max: b.k_max,
            params: b.params.to_text(),
            highest: b.highest.clone(),
            basis: b
                .basis
                .iter()
                .map(|(&degree, labels)| DegreeJson {
                    degree,
                    labels: labels.clone(),
                })
                .collect(),
            operators: b
                .operators
                .iter()
                .map(|op| OperatorJson {
                    op: op.kind.to_string(),
                    k: op.k,
                    degree: op.degree,
                    matrix: (0..op.matrix.rows())
                        .map(|i| op.matrix.row(i).iter().map(|c| c.to_string()).collect())
                        .collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&BundleJson> for MatrixBundle {
    type Error = Error;

    fn try_from(j: &BundleJson) -> Result<MatrixBundle> {
        let mut basis = BTreeMap::new();
        for d in &j.basis {
            if basis.insert(d.degree, d.labels.clone()).is_some() {
                return Err(Error::Bundle(format!("degree {} listed twice", d.degree)));
            }
        }
        let operators = j
            .operators
            .iter()
            .map(|op| {
                let kind = match op.op.as_str() {
                    "U" => LadderKind::U,
                    "D" => LadderKind::D,
                    other => return Err(Error::Bundle(format!("unknown operator `{other}`, expected U or D"))),
                };
                let rows = op
                    .matrix
                    .iter()
                    .map(|row| row.iter().map(|c| c.parse()).collect::<Result<Vec<Scalar>>>())
                    .collect::<Result<Vec<_>>>()?;
                let matrix = if rows.is_empty() {
                    Matrix::zeros(0, basis.get(&op.degree).map_or(0, Vec::len))
                } else {
                    Matrix::from_rows(rows)?
                };
                Ok(BundleOperator {
                    kind,
                    k: op.k,
                    degree: op.degree,
                    matrix,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let bundle = MatrixBundle {
            degree_step: j.degree_step,
            k_max: j.k_max,
            params: HeisenbergParams::parse(&j.params)?,
            highest: j.highest.clone(),
            basis,
            operators,
        };
        bundle.validate()?;
        Ok(bundle)
    }
}
