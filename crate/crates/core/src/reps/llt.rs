use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::tensor::{TensorPower, Word};
use super::FermionicRep;
use crate::error::{Error, Result};
use crate::heisenberg::{Generator, HModule, HeisenbergParams, Native, Representation, StateVec};
use crate::partition::{core_quotient, from_core_quotient, partitions_of, Partition};

/// The level-one Fock space at `q = 1`: the block of each `n`-core is a copy
/// of `(F^{(0)})^{⊗n}`, matched through the `n`-quotient. Parameters `a_k = n`,
/// degree step `n`.
pub struct LltRep {
    n: usize,
    power: Arc<HModule<TensorPower<FermionicRep>>>,
}

impl LltRep {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("llt1 needs n >= 2, got {n}")));
        }
        let power = TensorPower::new(Arc::new(HModule::new(FermionicRep::new())), n)?;
        Ok(LltRep {
            n,
            power: Arc::new(HModule::new(power)),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl Representation for LltRep {
    type Index = Partition;

    fn name(&self) -> String {
        format!("llt1:{}", self.n)
    }

    fn params(&self) -> &HeisenbergParams {
        self.power.params()
    }

    fn degree_step(&self) -> i64 {
        self.n as i64
    }

    fn degree(&self, s: &Partition) -> i64 {
        s.size() as i64
    }

    fn basis_of_degree(&self, d: i64) -> Vec<Partition> {
        if d < 0 {
            return Vec::new();
        }
        partitions_of(d as usize)
    }

    fn highest(&self) -> Option<Partition> {
        Some(Partition::empty())
    }

    fn native(&self) -> Native {
        Native::Bosonic
    }

    fn act(&self, g: Generator, s: &Partition) -> Result<StateVec<Partition>> {
        let (core, quotient) = core_quotient(s, self.n)?;
        let image = self.power.act(g, &Word(quotient))?;
        let mut out = StateVec::zero();
        for (w, c) in image.iter() {
            out.add_term(from_core_quotient(&core, &w.0, self.n)?, c);
        }
        Ok(out)
    }

    fn parse_index(&self, text: &str) -> Result<Partition> {
        text.parse()
    }
}
