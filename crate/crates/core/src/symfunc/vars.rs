//! Restriction of symmetric functions to finitely many variables.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{Basis, SymFunc};
use crate::error::Result;
use crate::scalar::Scalar;

/// A named, indexed variable such as `x3`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var {
    pub name: char,
    pub index: u32,
}

impl Var {
    pub fn new(name: char, index: u32) -> Self {
        Var { name, index }
    }

    /// `name1, name2, …, name{count}`
    pub fn family(name: char, count: usize) -> Vec<Var> {
        (1..=count as u32).map(|i| Var::new(name, i)).collect()
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.name, self.index)
    }
}

/// Sorted `(variable, exponent)` pairs with positive exponents.
pub type Monomial = Vec<(Var, u32)>;

fn total_degree(m: &Monomial) -> u32 {
    m.iter().map(|(_, e)| e).sum()
}

fn mul_monomials(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push(b[j]);
            j += 1;
        } else {
            out.push((a[i].0, a[i].1 + b[j].1));
            i += 1;
            j += 1;
        }
    }
    out
}

/// A polynomial in [`Var`]s with [`Scalar`] coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VarPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl VarPoly {
    pub fn zero() -> Self {
        VarPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = VarPoly::zero();
        p.add_term(Vec::new(), &c);
        p
    }

    pub fn one() -> Self {
        VarPoly::constant(Scalar::one())
    }

    pub fn var(v: Var) -> Self {
        let mut p = VarPoly::zero();
        p.add_term(alloc::vec![(v, 1)], &Scalar::one());
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_default();
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Scalar) -> VarPoly {
        let mut out = VarPoly::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), &(x * c));
        }
        out
    }

    /// Drops monomials of total degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> VarPoly {
        VarPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| total_degree(m) <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product with monomials of total degree above `max_degree` discarded.
    pub fn mul_truncated(&self, other: &VarPoly, max_degree: u32) -> VarPoly {
        let mut out = VarPoly::zero();
        for (a, x) in &self.terms {
            let da = total_degree(a);
            if da > max_degree {
                continue;
            }
            for (b, y) in &other.terms {
                if da + total_degree(b) <= max_degree {
                    out.add_term(mul_monomials(a, b), &(x * y));
                }
            }
        }
        out
    }

    pub fn specialize(&self, bindings: &crate::scalar::Bindings) -> Result<VarPoly> {
        let mut out = VarPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.specialize(bindings)?);
        }
        Ok(out)
    }
}

impl Add for &VarPoly {
    type Output = VarPoly;
    fn add(self, rhs: &VarPoly) -> VarPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Neg for &VarPoly {
    type Output = VarPoly;
    fn neg(self) -> VarPoly {
        self.scale(&-Scalar::one())
    }
}

impl Sub for &VarPoly {
    type Output = VarPoly;
    fn sub(self, rhs: &VarPoly) -> VarPoly {
        self + &-rhs
    }
}

impl Mul for &VarPoly {
    type Output = VarPoly;
    fn mul(self, rhs: &VarPoly) -> VarPoly {
        self.mul_truncated(rhs, u32::MAX)
    }
}

/// Terms by descending exponent vector, e.g. `x1^2 + x1*x2 + x2^2`.
impl fmt::Display for VarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut vars: Vec<Var> = self.terms.keys().flat_map(|m| m.iter().map(|(v, _)| *v)).collect();
        vars.sort_unstable();
        vars.dedup();
        let exps = |m: &Monomial| -> Vec<u32> {
            vars.iter()
                .map(|v| m.iter().find(|(w, _)| w == v).map_or(0, |(_, e)| *e))
                .collect()
        };
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by_key(|t| core::cmp::Reverse(exps(t.0)));
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let text = alloc::format!("{c}");
            let coeff = if text.contains(' ') {
                alloc::format!("({text})")
            } else {
                text
            };
            if m.is_empty() {
                f.write_str(&coeff)?;
                continue;
            }
            if !c.is_one() {
                write!(f, "{coeff}*")?;
            }
            for (j, (v, e)) in m.iter().enumerate() {
                if j > 0 {
                    f.write_str("*")?;
                }
                if *e == 1 {
                    write!(f, "{v}")?;
                } else {
                    write!(f, "{v}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Distinct rearrangements of `parts` padded with zeros to `n` slots.
fn distinct_arrangements(parts: &[u32], n: usize) -> Vec<Vec<u32>> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &p in parts {
        *counts.entry(p).or_insert(0) += 1;
    }
    *counts.entry(0).or_insert(0) += n - parts.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(counts: &mut BTreeMap<u32, usize>, n: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let keys: Vec<u32> = counts.iter().filter(|(_, &c)| c > 0).map(|(&k, _)| k).collect();
        for k in keys {
            *counts.get_mut(&k).expect("key present") -= 1;
            cur.push(k);
            go(counts, n, cur, out);
            cur.pop();
            *counts.get_mut(&k).expect("key present") += 1;
        }
    }
    go(&mut counts, n, &mut cur, &mut out);
    out
}

/// `f(x_1, …, x_n, 0, 0, …)` with `x_i = vars[i - 1]`.
pub fn evaluate_vars(f: &SymFunc, vars: &[Var]) -> Result<VarPoly> {
    let fm = f.convert(Basis::M)?;
    let mut out = VarPoly::zero();
    for (mu, c) in fm.terms() {
        if mu.len() > vars.len() {
            continue;
        }
        for exps in distinct_arrangements(mu.parts(), vars.len()) {
            let mut m: Monomial = vars.iter().copied().zip(exps).filter(|(_, e)| *e > 0).collect();
            m.sort_unstable();
            out.add_term(m, c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn el(basis: Basis, parts: &[u32]) -> SymFunc {
        SymFunc::basis_element(basis, Partition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn finite_variable_restriction() {
        let x = Var::family('x', 2);
        assert!(evaluate_vars(&el(Basis::M, &[1, 1]), &x[..1]).unwrap().is_zero());
        assert_eq!(
            alloc::format!("{}", evaluate_vars(&el(Basis::P, &[2]), &x).unwrap()),
            "x1^2 + x2^2"
        );
        assert_eq!(
            alloc::format!("{}", evaluate_vars(&el(Basis::S, &[2]), &x).unwrap()),
            "x1^2 + x1*x2 + x2^2"
        );
    }

    #[test]
    fn truncated_products() {
        let x = VarPoly::var(Var::new('x', 1));
        let y = VarPoly::var(Var::new('y', 1));
        let s = &VarPoly::one() + &(&x * &y);
        let sq = s.mul_truncated(&s, 2);
        assert_eq!(alloc::format!("{sq}"), "2*x1*y1 + 1");
        assert_eq!(&sq - &sq, VarPoly::zero());
    }
}
