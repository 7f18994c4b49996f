use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::Result;
use crate::heisenberg::{Generator, HModule, HeisenbergParams, Native, Representation, StateVec};
use crate::scalar::Bindings;

/// A representation with `q` and/or `t` bound to values, e.g. `q = 0` for the
/// Hall–Littlewood case of the Macdonald module.
pub struct Specialized<R: Representation> {
    inner: Arc<HModule<R>>,
    bindings: Bindings,
    params: HeisenbergParams,
}

impl<R: Representation> Specialized<R> {
    pub fn new(inner: Arc<HModule<R>>, bindings: Bindings) -> Result<Self> {
        let params = inner.params().specialize(&bindings)?;
        Ok(Specialized {
            inner,
            bindings,
            params,
        })
    }

    pub fn bindings(&self) -> &Bindings {
        &self.bindings
    }
}

impl<R: Representation> Representation for Specialized<R> {
    type Index = R::Index;

    fn name(&self) -> String {
        format!("{}[{}]", self.inner.rep().name(), self.bindings)
    }

    fn params(&self) -> &HeisenbergParams {
        &self.params
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

    fn act(&self, g: Generator, s: &R::Index) -> Result<StateVec<R::Index>> {
        self.inner.act(g, s)?.map_coeffs(|c| c.specialize(&self.bindings))
    }

    fn parse_index(&self, text: &str) -> Result<R::Index> {
        self.inner.rep().parse_index(text)
    }
}
