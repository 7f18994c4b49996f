use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::heisenberg::{Generator, HModule, HeisenbergParams, Native, Representation, StateVec};
use crate::linalg::Matrix;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LadderKind {
    U,
    D,
}

impl fmt::Display for LadderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LadderKind::U => "U",
            LadderKind::D => "D",
        })
    }
}

/// The matrix of `U_k` or `D_k` restricted to one source degree. Columns follow
/// the basis of `degree`, rows the basis of the degree it lands in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BundleOperator {
    pub kind: LadderKind,
    pub k: u32,
    pub degree: i64,
    pub matrix: Matrix,
}

/// A truncated ladder representation given by explicit matrices.
#[derive(Clone, Debug)]
pub struct MatrixBundle {
    pub degree_step: i64,
    pub k_max: u32,
    pub params: HeisenbergParams,
    /// Label of the highest weight vector.
    pub highest: String,
    /// Basis labels per degree, in matrix order.
    pub basis: BTreeMap<i64, Vec<String>>,
    pub operators: Vec<BundleOperator>,
}

impl MatrixBundle {
    pub fn lowest_degree(&self) -> i64 {
        self.basis.keys().next().copied().unwrap_or(0)
    }

    pub fn top_degree(&self) -> i64 {
        self.basis.keys().next_back().copied().unwrap_or(0)
    }

    fn target(&self, kind: LadderKind, k: u32, degree: i64) -> i64 {
        match kind {
            LadderKind::U => degree + self.degree_step * k as i64,
            LadderKind::D => degree - self.degree_step * k as i64,
        }
    }

    fn dim(&self, d: i64) -> usize {
        self.basis.get(&d).map_or(0, Vec::len)
    }

    /// Checks labels, dimensions and that `highest` is present.
    pub fn validate(&self) -> Result<()> {
        if self.degree_step <= 0 {
            return Err(Error::Bundle("degree step must be positive".into()));
        }
        let mut seen = BTreeMap::new();
        for (d, labels) in &self.basis {
            for l in labels {
                if seen.insert(l.as_str(), *d).is_some() {
                    return Err(Error::Bundle(format!("label `{l}` appears twice")));
                }
            }
        }
        if !seen.contains_key(self.highest.as_str()) {
            return Err(Error::Bundle(format!(
                "highest weight label `{}` is not in the basis",
                self.highest
            )));
        }
        let mut keys = BTreeMap::new();
        for op in &self.operators {
            if op.k == 0 || op.k > self.k_max {
                return Err(Error::Bundle(format!(
                    "{}_{} is outside 1..={}",
                    op.kind, op.k, self.k_max
                )));
            }
            if keys.insert((op.kind, op.k, op.degree), ()).is_some() {
                return Err(Error::Bundle(format!(
                    "{}_{} on degree {} given twice",
                    op.kind, op.k, op.degree
                )));
            }
            let rows = self.dim(self.target(op.kind, op.k, op.degree));
            let cols = self.dim(op.degree);
            if op.matrix.rows() != rows || op.matrix.cols() != cols {
                return Err(Error::Bundle(format!(
                    "{}_{} on degree {} should be {rows}x{cols}, got {}x{}",
                    op.kind,
                    op.k,
                    op.degree,
                    op.matrix.rows(),
                    op.matrix.cols()
                )));
            }
        }
        Ok(())
    }
}

/// A basis vector of a [`BundleRep`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Label {
    pub degree: i64,
    pub pos: usize,
    pub name: String,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// A [`MatrixBundle`] as a ladder representation. `U_k` is available while its
/// target degree stays within the bundle; operators missing between nonempty
/// degrees are an error rather than silently zero.
pub struct BundleRep {
    bundle: MatrixBundle,
    ops: BTreeMap<(LadderKind, u32, i64), Matrix>,
    labels: BTreeMap<String, Label>,
}

impl BundleRep {
    pub fn new(bundle: MatrixBundle) -> Result<Self> {
        bundle.validate()?;
        let ops = bundle
            .operators
            .iter()
            .map(|op| ((op.kind, op.k, op.degree), op.matrix.clone()))
            .collect();
        let mut labels = BTreeMap::new();
        for (&degree, names) in &bundle.basis {
            for (pos, name) in names.iter().enumerate() {
                labels.insert(
                    name.clone(),
                    Label {
                        degree,
                        pos,
                        name: name.clone(),
                    },
                );
            }
        }
        Ok(BundleRep { bundle, ops, labels })
    }

    pub fn bundle(&self) -> &MatrixBundle {
        &self.bundle
    }

    fn label(&self, degree: i64, pos: usize) -> Label {
        Label {
            degree,
            pos,
            name: self.bundle.basis[&degree][pos].clone(),
        }
    }
}

impl Representation for BundleRep {
    type Index = Label;

    fn name(&self) -> String {
        "bundle".into()
    }

    fn params(&self) -> &HeisenbergParams {
        &self.bundle.params
    }

    fn degree_step(&self) -> i64 {
        self.bundle.degree_step
    }

    fn degree(&self, s: &Label) -> i64 {
        s.degree
    }

    fn basis_of_degree(&self, d: i64) -> Vec<Label> {
        (0..self.bundle.dim(d)).map(|pos| self.label(d, pos)).collect()
    }

    fn lowest_degree(&self) -> i64 {
        self.bundle.lowest_degree()
    }

    fn top_degree(&self) -> Option<i64> {
        Some(self.bundle.top_degree())
    }

    fn highest(&self) -> Option<Label> {
        self.labels.get(&self.bundle.highest).cloned()
    }

    fn native(&self) -> Native {
        Native::Ladder
    }

    fn act(&self, g: Generator, s: &Label) -> Result<StateVec<Label>> {
        let (kind, k) = match g {
            Generator::U(k) => (LadderKind::U, k),
            Generator::D(k) => (LadderKind::D, k),
            Generator::B(_) => unreachable!("ladder representations are only asked for U and D"),
        };
        let target = self.bundle.target(kind, k, s.degree);
        if target < self.bundle.lowest_degree() {
            return Ok(StateVec::zero());
        }
        if target > self.bundle.top_degree() || k > self.bundle.k_max {
            return Err(Error::Bundle(format!(
                "{g} on degree {} leaves the truncation",
                s.degree
            )));
        }
        let Some(m) = self.ops.get(&(kind, k, s.degree)) else {
            if self.bundle.dim(target) == 0 {
                return Ok(StateVec::zero());
            }
            return Err(Error::Bundle(format!("{g} on degree {} is not supplied", s.degree)));
        };
        let mut out = StateVec::zero();
        for r in 0..m.rows() {
            out.add_term(self.label(target, r), m.get(r, s.pos));
        }
        Ok(out)
    }

    fn parse_index(&self, text: &str) -> Result<Label> {
        self.labels.get(text.trim()).cloned().ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("unknown basis label `{text}`"),
        })
    }
}

/// Reads off the matrices of `U_k`, `D_k` for `k ≤ k_max` on every degree up
/// to `d_max`, keeping only those landing within the truncation.
pub fn extract_bundle<R: Representation>(module: &HModule<R>, d_max: i64, k_max: u32) -> Result<MatrixBundle> {
    let rep = module.rep();
    let step = module.degree_step();
    let highest = rep.highest().ok_or(Error::NoHighestWeight)?;
    let mut basis = BTreeMap::new();
    let mut indices = BTreeMap::new();
    for d in rep.lowest_degree()..=d_max {
        let b = rep.basis_of_degree(d);
        if !b.is_empty() {
            basis.insert(d, b.iter().map(|s| s.to_string()).collect::<Vec<_>>());
            indices.insert(d, b);
        }
    }
    let mut operators = Vec::new();
    for (&d, source) in &indices {
        for k in 1..=k_max {
            for (kind, target) in [
                (LadderKind::U, d + step * k as i64),
                (LadderKind::D, d - step * k as i64),
            ] {
                let Some(rows) = indices.get(&target) else { continue };
                let mut matrix = Matrix::zeros(rows.len(), source.len());
                for (j, s) in source.iter().enumerate() {
                    let g = match kind {
                        LadderKind::U => Generator::U(k),
                        LadderKind::D => Generator::D(k),
                    };
                    let v = module.act(g, s)?;
                    for (i, t) in rows.iter().enumerate() {
                        matrix.set(i, j, v.coeff(t));
                    }
                }
                operators.push(BundleOperator {
                    kind,
                    k,
                    degree: d,
                    matrix,
                });
            }
        }
    }
    Ok(MatrixBundle {
        degree_step: step,
        k_max,
        params: module.params().clone(),
        highest: highest.to_string(),
        basis,
        operators,
    })
}
