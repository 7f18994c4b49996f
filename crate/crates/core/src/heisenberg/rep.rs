use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::HeisenbergParams;
use crate::error::Result;
use crate::scalar::Scalar;

/// A generator of the Heisenberg algebra or one of the derived families.
///
/// `B(k)` for `k ≠ 0`; `U(k)` and `D(k)` are the analogues of `h_k` built from
/// the `B_{-j}` and the `B_j` respectively. `U(0)` and `D(0)` are the identity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Generator {
    B(i64),
    U(u32),
    D(u32),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::B(k) => write!(f, "B_{k}"),
            Generator::U(k) => write!(f, "U_{k}"),
            Generator::D(k) => write!(f, "D_{k}"),
        }
    }
}

/// Which generators a representation implements directly; the rest are
/// derived by [`super::HModule`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Native {
    /// `B(k)` for all `k ≠ 0`
    Bosonic,
    /// `U(k)` and `D(k)` for `k ≥ 1`
    Ladder,
}

/// A graded representation of `H[a_k]` with an orthonormal distinguished
/// basis.
///
/// `B_k` has degree `-m k` where `m` is [`Representation::degree_step`], so
/// `B_{-k}` and `U_k` raise the degree by `m k`.
pub trait Representation: Send + Sync {
    type Index: Clone + Ord + fmt::Debug + fmt::Display + Send + Sync;

    fn name(&self) -> String;

    fn params(&self) -> &HeisenbergParams;

    fn degree_step(&self) -> i64 {
        1
    }

    fn degree(&self, s: &Self::Index) -> i64;

    /// The distinguished basis of the degree-`d` component, in a fixed order.
    fn basis_of_degree(&self, d: i64) -> Vec<Self::Index>;

    /// Smallest degree with a nonzero component.
    fn lowest_degree(&self) -> i64 {
        0
    }

    /// Largest degree on which the action is available, if bounded.
    fn top_degree(&self) -> Option<i64> {
        None
    }

    /// The designated highest weight vector.
    fn highest(&self) -> Option<Self::Index>;

    fn native(&self) -> Native;

    /// The action of a native generator on a basis vector.
    fn act(&self, g: Generator, s: &Self::Index) -> Result<StateVec<Self::Index>>;

    fn parse_index(&self, text: &str) -> Result<Self::Index>;
}

/// A finite linear combination of basis vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StateVec<I: Ord> {
    terms: BTreeMap<I, Scalar>,
}

impl<I: Ord> Default for StateVec<I> {
    fn default() -> Self {
        StateVec { terms: BTreeMap::new() }
    }
}

impl<I: Ord + Clone> StateVec<I> {
    pub fn zero() -> Self {
        StateVec::default()
    }

    pub fn basis(i: I) -> Self {
        let mut v = StateVec::zero();
        v.terms.insert(i, Scalar::one());
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (I, Scalar)>) -> Self {
        let mut v = StateVec::zero();
        for (i, c) in terms {
            v.add_term(i, &c);
        }
        v
    }

    pub fn add_term(&mut self, i: I, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(i) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, other: &StateVec<I>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (i, x) in &other.terms {
            self.add_term(i.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &Scalar) -> StateVec<I> {
        let mut out = StateVec::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn plus(&self, other: &StateVec<I>) -> StateVec<I> {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn minus(&self, other: &StateVec<I>) -> StateVec<I> {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    /// `⟨self, v_i⟩`
    pub fn coeff(&self, i: &I) -> Scalar {
        self.terms.get(i).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&I, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<StateVec<I>> {
        let mut out = StateVec::zero();
        for (i, c) in &self.terms {
            out.add_term(i.clone(), &f(c)?);
        }
        Ok(out)
    }

    pub fn map_index<J: Ord + Clone>(&self, f: impl Fn(&I) -> J) -> StateVec<J> {
        StateVec::from_terms(self.terms.iter().map(|(i, c)| (f(i), c.clone())))
    }
}

impl<I: Ord + Clone + fmt::Display> fmt::Display for StateVec<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (i, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "v{i}")?;
            } else {
                write!(f, "({c})*v{i}")?;
            }
        }
        Ok(())
    }
}
