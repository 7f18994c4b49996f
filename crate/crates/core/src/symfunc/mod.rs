//! The ring `Λ_K` of symmetric functions over `K = ℚ(q, t)`.
//!
//! Elements are sparse maps from partitions to scalars tagged with one of the
//! bases `p`, `h`, `m`, `s`. Changes of basis go through cached per-degree
//! matrices; products, the Hall inner product and `⊥` operators work in `p`.

mod transition;
mod vars;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::heisenberg::HeisenbergParams;
use crate::partition::{horizontal_strips, partitions_of, z_of, Partition, SkewShape};
use crate::scalar::{Bindings, Scalar};

pub use transition::{degree_cap, set_degree_cap, Index, TransitionCache, DEFAULT_DEGREE_CAP};
pub use vars::{evaluate_vars, Var, VarPoly};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Basis {
    /// power sums
    P,
    /// complete homogeneous
    H,
    /// monomial
    M,
    /// Schur
    S,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::P, Basis::H, Basis::M, Basis::S];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::H => "h",
            Basis::M => "m",
            Basis::S => "s",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Basis> {
        match s.trim() {
            "p" => Ok(Basis::P),
            "h" => Ok(Basis::H),
            "m" => Ok(Basis::M),
            "s" => Ok(Basis::S),
            other => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown basis `{other}`, expected one of p, h, m, s"),
            }),
        }
    }
}

/// A finite linear combination of basis elements of `Λ_K`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, Scalar>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        SymFunc::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Scalar::one());
        SymFunc { basis, terms }
    }

    /// Sums repeated partitions and drops zero coefficients.
    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, Scalar)>) -> Self {
        let mut f = SymFunc::zero(basis);
        for (p, c) in terms {
            f.add_term(p, &c);
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Terms in reverse lexicographic order of their partitions.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, lambda: &Partition) -> Scalar {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees of the nonzero homogeneous components.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Partition::size).collect()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|p| p.size() == d)
    }

    pub fn homogeneous_part(&self, d: usize) -> SymFunc {
        self.filter(|p| p.size() == d)
    }

    /// Drops the components of degree above `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> SymFunc {
        self.filter(|p| p.size() <= max_degree)
    }

    fn filter(&self, keep: impl Fn(&Partition) -> bool) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&-Scalar::one())
    }

    /// Sum, expressed in the basis of `self`.
    pub fn checked_add(&self, other: &SymFunc) -> Result<SymFunc> {
        let other = other.convert(self.basis)?;
        let mut out = self.clone();
        for (p, c) in other.terms {
            out.add_term(p, &c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.checked_add(&other.neg())
    }

    /// Equality as ring elements, regardless of basis.
    pub fn same_element(&self, other: &SymFunc) -> Result<bool> {
        Ok(*self == other.convert(self.basis)?)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<SymFunc> {
        let mut out = SymFunc::zero(self.basis);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &f(c)?);
        }
        Ok(out)
    }

    pub fn specialize(&self, bindings: &Bindings) -> Result<SymFunc> {
        self.map_coeffs(|c| c.specialize(bindings))
    }

    /// Re-expresses the same element in `target`.
    pub fn convert(&self, target: Basis) -> Result<SymFunc> {
        if target == self.basis || self.is_zero() {
            return Ok(SymFunc {
                basis: target,
                terms: self.terms.clone(),
            });
        }
        let cache = TransitionCache::global();
        let mut out = SymFunc::zero(target);
        for d in self.degrees() {
            let ix = cache.index(d);
            let m = cache.matrix(d, self.basis, target)?;
            for (p, c) in self.terms.iter().filter(|(p, _)| p.size() == d) {
                let row = ix.position[p];
                for (j, x) in m.row(row).iter().enumerate() {
                    if !x.is_zero() {
                        out.add_term(ix.list[j].clone(), &(c * x));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Free function form of [`SymFunc::convert`].
pub fn convert(f: &SymFunc, target: Basis) -> Result<SymFunc> {
    f.convert(target)
}

/// Product, returned in the `p` basis.
pub fn multiply(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    let (f, g) = (f.convert(Basis::P)?, g.convert(Basis::P)?);
    let mut out = SymFunc::zero(Basis::P);
    for (a, x) in &f.terms {
        for (b, y) in &g.terms {
            out.add_term(a.union(b), &(x * y));
        }
    }
    Ok(out)
}

/// `⟨f, g⟩` with `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ`.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> Result<Scalar> {
    if f.basis == Basis::S && g.basis == Basis::S {
        return Ok(f.terms.iter().map(|(p, x)| x * &g.coeff(p)).sum());
    }
    let (f, g) = (f.convert(Basis::P)?, g.convert(Basis::P)?);
    let mut acc = Scalar::zero();
    for (p, x) in &f.terms {
        if let Some(y) = g.terms.get(p) {
            acc = &acc + &(&(x * y) * &z_of(p));
        }
    }
    Ok(acc)
}

/// `g^⊥ f`, the adjoint of multiplication by `g`, in the basis of `f`.
pub fn perp_apply(g: &SymFunc, f: &SymFunc) -> Result<SymFunc> {
    let gp = g.convert(Basis::P)?;
    let fp = f.convert(Basis::P)?;
    let mut out = SymFunc::zero(Basis::P);
    for (mu, x) in &gp.terms {
        for (nu, y) in &fp.terms {
            if let Some((factor, rest)) = power_sum_perp(mu, nu) {
                out.add_term(rest, &(&(x * y) * &Scalar::from_int(factor)));
            }
        }
    }
    out.convert(f.basis)
}

/// `p_μ^⊥ p_ν = ∏_k k^{m_k(μ)} m_k(ν)!/(m_k(ν) − m_k(μ))! · p_{ν∖μ}`, or
/// `None` when `μ` is not a sub-multiset of `ν`.
fn power_sum_perp(mu: &Partition, nu: &Partition) -> Option<(i64, Partition)> {
    let mut rest = nu.clone();
    let mut factor = 1i64;
    for &k in mu.parts() {
        factor *= k as i64 * rest.multiplicity(k) as i64;
        rest = rest.without_part(k)?;
    }
    Some((factor, rest))
}

/// `θ(f)` for the homomorphism `p_k ↦ a_k p_k`, in the `p` basis.
pub fn theta_apply(f: &SymFunc, a: &HeisenbergParams) -> Result<SymFunc> {
    let fp = f.convert(Basis::P)?;
    let mut out = SymFunc::zero(Basis::P);
    for (p, c) in &fp.terms {
        out.add_term(p.clone(), &(c * &a.a_product(p.parts())?));
    }
    Ok(out)
}

/// `κ(f)` for the homomorphism `p_k ↦ a_k` into `K`.
pub fn kappa_eval(f: &SymFunc, a: &HeisenbergParams) -> Result<Scalar> {
    let fp = f.convert(Basis::P)?;
    let mut acc = Scalar::zero();
    for (p, c) in &fp.terms {
        acc = &acc + &(c * &a.a_product(p.parts())?);
    }
    Ok(acc)
}

/// `h_k` as a basis element.
pub fn h(k: u32) -> SymFunc {
    SymFunc::basis_element(Basis::H, Partition::from_unsorted(alloc::vec![k]))
}

/// The skew Schur function `s_{λ/μ}` in the `m` basis, by counting chains
/// `μ = λ⁰ ⊂ λ¹ ⊂ … = λ` of horizontal strips (semistandard tableaux).
pub fn schur_tableaux(shape: &SkewShape) -> Result<SymFunc> {
    let d = shape.size();
    transition::check_degree(d)?;
    let mut out = SymFunc::zero(Basis::M);
    for mu in partitions_of(d) {
        let count = strip_chains(shape, mu.parts()).len();
        out.add_term(mu, &Scalar::from_int(count as i64));
    }
    Ok(out)
}

/// All chains from `shape.inner()` to `shape.outer()` whose successive strips
/// have the given sizes; each chain lists the intermediate shapes.
pub fn strip_chains(shape: &SkewShape, weight: &[u32]) -> Vec<Vec<Partition>> {
    let mut chains: Vec<Vec<Partition>> = alloc::vec![alloc::vec![shape.inner().clone()]];
    for &w in weight {
        let mut next = Vec::new();
        for chain in &chains {
            let last = chain.last().expect("chains are nonempty");
            for bigger in horizontal_strips(last, w as usize) {
                if shape.outer().contains(&bigger) {
                    let mut c = chain.clone();
                    c.push(bigger);
                    next.push(c);
                }
            }
        }
        chains = next;
    }
    chains.retain(|c| c.last() == Some(shape.outer()));
    chains
}

fn coeff_text(c: &Scalar) -> String {
    let s = format!("{c}");
    if s.contains(' ') {
        format!("({s})")
    } else {
        s
    }
}

/// `2*s[2,1] - s[1,1,1] + ((1 - t)/(1 - q))*p[1]`; zero prints as `0`.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            let (neg, mag) = if c.as_rational().is_some_and(|(n, _)| n < 0.into()) {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{}*", coeff_text(&mag))?;
            }
            write!(f, "{}{}", self.basis, p)?;
        }
        Ok(())
    }
}
