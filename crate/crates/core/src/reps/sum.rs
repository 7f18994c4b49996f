use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::heisenberg::{Generator, HModule, HeisenbergParams, Native, Representation, StateVec};

/// A basis index of `V_1 ⊕ V_2`, written `1:s` or `2:s`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Summand<A, B> {
    First(A),
    Second(B),
}

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Summand<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::First(a) => write!(f, "1:{a}"),
            Summand::Second(b) => write!(f, "2:{b}"),
        }
    }
}

/// Direct sum of two representations of the same Heisenberg algebra.
pub struct DirectSum<R1: Representation, R2: Representation> {
    first: Arc<HModule<R1>>,
    second: Arc<HModule<R2>>,
}

impl<R1: Representation, R2: Representation> DirectSum<R1, R2> {
    pub fn new(first: Arc<HModule<R1>>, second: Arc<HModule<R2>>) -> Result<Self> {
        if !first.params().same_as(second.params()) {
            return Err(Error::Mismatch(format!(
                "parameters differ: {} vs {}",
                first.params(),
                second.params()
            )));
        }
        if first.degree_step() != second.degree_step() {
            return Err(Error::Mismatch("degree steps differ".into()));
        }
        Ok(DirectSum { first, second })
    }
}

impl<R1: Representation, R2: Representation> Representation for DirectSum<R1, R2> {
    type Index = Summand<R1::Index, R2::Index>;

    fn name(&self) -> String {
        format!("{}+{}", self.first.rep().name(), self.second.rep().name())
    }

    fn params(&self) -> &HeisenbergParams {
        self.first.params()
    }

    fn degree_step(&self) -> i64 {
        self.first.degree_step()
    }

    fn degree(&self, s: &Self::Index) -> i64 {
        match s {
            Summand::First(a) => self.first.rep().degree(a),
            Summand::Second(b) => self.second.rep().degree(b),
        }
    }

    fn basis_of_degree(&self, d: i64) -> Vec<Self::Index> {
        let mut out: Vec<Self::Index> = self
            .first
            .rep()
            .basis_of_degree(d)
            .into_iter()
            .map(Summand::First)
            .collect();
        out.extend(self.second.rep().basis_of_degree(d).into_iter().map(Summand::Second));
        out
    }

    fn lowest_degree(&self) -> i64 {
        self.first.rep().lowest_degree().min(self.second.rep().lowest_degree())
    }

    fn top_degree(&self) -> Option<i64> {
        match (self.first.rep().top_degree(), self.second.rep().top_degree()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    fn highest(&self) -> Option<Self::Index> {
        self.first.rep().highest().map(Summand::First)
    }

    fn native(&self) -> Native {
        if self.first.rep().native() == Native::Bosonic && self.second.rep().native() == Native::Bosonic {
            Native::Bosonic
        } else {
            Native::Ladder
        }
    }

    fn act(&self, g: Generator, s: &Self::Index) -> Result<StateVec<Self::Index>> {
        Ok(match s {
            Summand::First(a) => self.first.act(g, a)?.map_index(|x| Summand::First(x.clone())),
            Summand::Second(b) => self.second.act(g, b)?.map_index(|x| Summand::Second(x.clone())),
        })
    }

    fn parse_index(&self, text: &str) -> Result<Self::Index> {
        match text.trim().split_once(':') {
            Some(("1", rest)) => Ok(Summand::First(self.first.rep().parse_index(rest)?)),
            Some(("2", rest)) => Ok(Summand::Second(self.second.rep().parse_index(rest)?)),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("expected `1:<index>` or `2:<index>`, got `{text}`"),
            }),
        }
    }
}
