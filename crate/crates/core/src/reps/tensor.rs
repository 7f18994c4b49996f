use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::split_tuple;
use crate::error::{Error, Result};
use crate::heisenberg::{Generator, HModule, HeisenbergParams, Native, Representation, StateVec};
use crate::scalar::Scalar;

/// A basis index `(s1,s2)` of `V_1 ⊗ V_2`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Pair<A, B>(pub A, pub B);

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// `V_1 ⊗ V_2` for `H[2a_k]`, with `B̃_k = B_k ⊗ 1 + 1 ⊗ B_k`, or equivalently
/// `Ũ_k = Σ_{i=0}^{k} U_i ⊗ U_{k-i}` and likewise for `D̃_k`.
pub struct Tensor<R1: Representation, R2: Representation> {
    left: Arc<HModule<R1>>,
    right: Arc<HModule<R2>>,
    params: HeisenbergParams,
}

impl<R1: Representation, R2: Representation> Tensor<R1, R2> {
    pub fn new(left: Arc<HModule<R1>>, right: Arc<HModule<R2>>) -> Result<Self> {
        if !left.params().same_as(right.params()) {
            return Err(Error::Mismatch(format!(
                "parameters differ: {} vs {}",
                left.params(),
                right.params()
            )));
        }
        if left.degree_step() != right.degree_step() {
            return Err(Error::Mismatch("degree steps differ".into()));
        }
        let params = left.params().scaled(&Scalar::from_int(2));
        Ok(Tensor { left, right, params })
    }
}

fn outer<A: Ord + Clone, B: Ord + Clone>(x: &StateVec<A>, y: &StateVec<B>, out: &mut StateVec<Pair<A, B>>) {
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_term(Pair(a.clone(), b.clone()), &(c * d));
        }
    }
}

impl<R1: Representation, R2: Representation> Representation for Tensor<R1, R2> {
    type Index = Pair<R1::Index, R2::Index>;

    fn name(&self) -> String {
        format!("{}*{}", self.left.rep().name(), self.right.rep().name())
    }

    fn params(&self) -> &HeisenbergParams {
        &self.params
    }

    fn degree_step(&self) -> i64 {
        self.left.degree_step()
    }

    fn degree(&self, s: &Self::Index) -> i64 {
        self.left.rep().degree(&s.0) + self.right.rep().degree(&s.1)
    }

    fn basis_of_degree(&self, d: i64) -> Vec<Self::Index> {
        let (l, r) = (self.left.rep(), self.right.rep());
        let mut out = Vec::new();
        for d1 in l.lowest_degree()..=d - r.lowest_degree() {
            let rights = r.basis_of_degree(d - d1);
            if rights.is_empty() {
                continue;
            }
            for a in l.basis_of_degree(d1) {
                out.extend(rights.iter().map(|b| Pair(a.clone(), b.clone())));
            }
        }
        out
    }

    fn lowest_degree(&self) -> i64 {
        self.left.rep().lowest_degree() + self.right.rep().lowest_degree()
    }

    fn highest(&self) -> Option<Self::Index> {
        Some(Pair(self.left.rep().highest()?, self.right.rep().highest()?))
    }

    fn native(&self) -> Native {
        if self.left.rep().native() == Native::Bosonic && self.right.rep().native() == Native::Bosonic {
            Native::Bosonic
        } else {
            Native::Ladder
        }
    }

    fn act(&self, g: Generator, s: &Self::Index) -> Result<StateVec<Self::Index>> {
        let mut out = StateVec::zero();
        let (a, b) = (StateVec::basis(s.0.clone()), StateVec::basis(s.1.clone()));
        match g {
            Generator::B(_) => {
                outer(&self.left.act(g, &s.0)?, &b, &mut out);
                outer(&a, &self.right.act(g, &s.1)?, &mut out);
            }
            Generator::U(k) | Generator::D(k) => {
                let ladder = if matches!(g, Generator::U(_)) {
                    Generator::U
                } else {
                    Generator::D
                };
                for i in 0..=k {
                    let x = self.left.act(ladder(i), &s.0)?;
                    if x.is_zero() {
                        continue;
                    }
                    outer(&x, &self.right.act(ladder(k - i), &s.1)?, &mut out);
                }
            }
        }
        Ok(out)
    }

    fn parse_index(&self, text: &str) -> Result<Self::Index> {
        let parts = split_tuple(text)?;
        if parts.len() != 2 {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("expected a pair `(a,b)`, got `{text}`"),
            });
        }
        Ok(Pair(
            self.left.rep().parse_index(parts[0])?,
            self.right.rep().parse_index(parts[1])?,
        ))
    }
}

/// A basis index `(s1,…,sn)` of `V^{⊗n}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word<A>(pub Vec<A>);

impl<A: fmt::Display> fmt::Display for Word<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// `V^{⊗n}` for `H[n a_k]`.
pub struct TensorPower<R: Representation> {
    factor: Arc<HModule<R>>,
    n: usize,
    params: HeisenbergParams,
}

impl<R: Representation> TensorPower<R> {
    pub fn new(factor: Arc<HModule<R>>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("tensor power needs n >= 1".into()));
        }
        let params = if n == 1 {
            factor.params().clone()
        } else {
            factor.params().scaled(&Scalar::from_int(n as i64))
        };
        Ok(TensorPower { factor, n, params })
    }

    pub fn factor(&self) -> &Arc<HModule<R>> {
        &self.factor
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Multiplies out `Σ_i ⊗_j v_{ij}` into words.
fn tensor_words<A: Ord + Clone>(slots: &[StateVec<A>]) -> StateVec<Word<A>> {
    let mut acc: Vec<(Vec<A>, Scalar)> = vec![(Vec::new(), Scalar::one())];
    for slot in slots {
        let mut next = Vec::new();
        for (word, c) in &acc {
            for (a, d) in slot.iter() {
                let mut w = word.clone();
                w.push(a.clone());
                next.push((w, c * d));
            }
        }
        acc = next;
    }
    StateVec::from_terms(acc.into_iter().map(|(w, c)| (Word(w), c)))
}

/// Weak compositions of `k` into `n` parts.
fn weak_compositions(k: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![k]];
    }
    let mut out = Vec::new();
    for first in 0..=k {
        for mut rest in weak_compositions(k - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl<R: Representation> Representation for TensorPower<R> {
    type Index = Word<R::Index>;

    fn name(&self) -> String {
        format!("tensor:{}^{}", self.factor.rep().name(), self.n)
    }

    fn params(&self) -> &HeisenbergParams {
        &self.params
    }

    fn degree_step(&self) -> i64 {
        self.factor.degree_step()
    }

    fn degree(&self, s: &Self::Index) -> i64 {
        s.0.iter().map(|a| self.factor.rep().degree(a)).sum()
    }

    fn basis_of_degree(&self, d: i64) -> Vec<Self::Index> {
        let rep = self.factor.rep();
        let low = rep.lowest_degree();
        let mut out = Vec::new();
        fn go<R: Representation>(
            rep: &R,
            low: i64,
            slots: usize,
            rest: i64,
            cur: &mut Vec<R::Index>,
            out: &mut Vec<Word<R::Index>>,
        ) {
            if slots == 1 {
                for a in rep.basis_of_degree(rest) {
                    cur.push(a);
                    out.push(Word(cur.clone()));
                    cur.pop();
                }
                return;
            }
            for d1 in low..=rest - low * (slots as i64 - 1) {
                for a in rep.basis_of_degree(d1) {
                    cur.push(a);
                    go(rep, low, slots - 1, rest - d1, cur, out);
                    cur.pop();
                }
            }
        }
        go(rep, low, self.n, d, &mut Vec::new(), &mut out);
        out
    }

    fn lowest_degree(&self) -> i64 {
        self.factor.rep().lowest_degree() * self.n as i64
    }

    fn highest(&self) -> Option<Self::Index> {
        let h = self.factor.rep().highest()?;
        Some(Word(vec![h; self.n]))
    }

    fn native(&self) -> Native {
        self.factor.rep().native()
    }

    fn act(&self, g: Generator, s: &Self::Index) -> Result<StateVec<Self::Index>> {
        let mut out = StateVec::zero();
        let basis: Vec<StateVec<R::Index>> = s.0.iter().map(|a| StateVec::basis(a.clone())).collect();
        match g {
            Generator::B(_) => {
                for j in 0..self.n {
                    let mut slots = basis.clone();
                    slots[j] = self.factor.act(g, &s.0[j])?;
                    out.add_scaled(&tensor_words(&slots), &Scalar::one());
                }
            }
            Generator::U(k) | Generator::D(k) => {
                let ladder = if matches!(g, Generator::U(_)) {
                    Generator::U
                } else {
                    Generator::D
                };
                'outer: for comp in weak_compositions(k, self.n) {
                    let mut slots = Vec::with_capacity(self.n);
                    for (a, &c) in s.0.iter().zip(&comp) {
                        let x = self.factor.act(ladder(c), a)?;
                        if x.is_zero() {
                            continue 'outer;
                        }
                        slots.push(x);
                    }
                    out.add_scaled(&tensor_words(&slots), &Scalar::one());
                }
            }
        }
        Ok(out)
    }

    fn parse_index(&self, text: &str) -> Result<Self::Index> {
        let parts = split_tuple(text)?;
        if parts.len() != self.n {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("expected {} components, got `{text}`", self.n),
            });
        }
        Ok(Word(
            parts
                .into_iter()
                .map(|p| self.factor.rep().parse_index(p))
                .collect::<Result<Vec<_>>>()?,
        ))
    }
}
