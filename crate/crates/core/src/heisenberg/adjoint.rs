use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::module::HModule;
use super::rep::{Generator, Native, Representation, StateVec};
use super::HeisenbergParams;
use crate::error::Result;

/// The adjoint action: `B_k` acts as the transpose of `B_{-k}`, `U_k` as the
/// transpose of `D_k` and `D_k` as the transpose of `U_k`. It satisfies the
/// same relations, and its `F` and `G` families are the `G` and `F` families
/// of the original representation.
pub struct AdjointRep<R: Representation> {
    inner: Arc<HModule<R>>,
}

impl<R: Representation> AdjointRep<R> {
    pub fn new(inner: Arc<HModule<R>>) -> Self {
        AdjointRep { inner }
    }

    fn transposed(&self, g: Generator) -> Generator {
        match g {
            Generator::B(k) => Generator::B(-k),
            Generator::U(k) => Generator::D(k),
            Generator::D(k) => Generator::U(k),
        }
    }
}

impl<R: Representation> Representation for AdjointRep<R> {
    type Index = R::Index;

    fn name(&self) -> String {
        format!("adjoint({})", self.inner.rep().name())
    }

    fn params(&self) -> &HeisenbergParams {
        self.inner.params()
    }

    fn degree_step(&self) -> i64 {
        self.inner.degree_step()
    }

    fn degree(&self, s: &R::Index) -> i64 {
        self.inner.rep().degree(s)
    }

    fn basis_of_degree(&self, d: i64) -> Vec<R::Index> {
        self.inner.rep().basis_of_degree(d)
    }

    fn lowest_degree(&self) -> i64 {
        self.inner.rep().lowest_degree()
    }

    fn top_degree(&self) -> Option<i64> {
        self.inner.rep().top_degree()
    }

    fn highest(&self) -> Option<R::Index> {
        self.inner.rep().highest()
    }

    fn native(&self) -> Native {
        self.inner.rep().native()
    }

    /// `Σ_t ⟨g* v_t, v_s⟩ v_t` over the degree the new operator lands in.
    fn act(&self, g: Generator, s: &R::Index) -> Result<StateVec<R::Index>> {
        let source = self.transposed(g);
        let target = self.degree(s) + self.inner.shift(g);
        let mut out = StateVec::zero();
        if target < self.lowest_degree() {
            return Ok(out);
        }
        for t in self.basis_of_degree(target) {
            let c = self.inner.act(source, &t)?.coeff(s);
            out.add_term(t, &c);
        }
        Ok(out)
    }

    fn parse_index(&self, text: &str) -> Result<R::Index> {
        self.inner.rep().parse_index(text)
    }
}
