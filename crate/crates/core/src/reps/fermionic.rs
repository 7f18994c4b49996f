use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Result;
use crate::heisenberg::{Generator, HeisenbergParams, Native, Representation, StateVec};
use crate::partition::{partitions_of, Partition};
use crate::scalar::Scalar;

/// The Fermionic Fock space of semi-infinite wedges `v_{i_0} ∧ v_{i_{-1}} ∧ ⋯`
/// with `i_{-j} = λ_{j+1} − j`, acted on by `H[1]`.
#[derive(Clone, Debug)]
pub struct FermionicRep {
    params: HeisenbergParams,
}

impl Default for FermionicRep {
    fn default() -> Self {
        FermionicRep {
            params: HeisenbergParams::ones(),
        }
    }
}

impl FermionicRep {
    pub fn new() -> Self {
        FermionicRep::default()
    }
}

/// `B_k` on a single wedge: every way of moving one index `i` to `i − k`,
/// dropping wedges with a repeated index, sorted back with the sign of the
/// reordering.
///
/// Only the first `ℓ(λ) + |k|` indices can move without colliding with the
/// frozen tail `−N, −N − 1, …`, so the computation is finite.
pub fn wedge_shift(lambda: &Partition, k: i64) -> Vec<(Partition, i64)> {
    let n = lambda.len() + k.unsigned_abs() as usize;
    let entries: Vec<i64> = (0..n).map(|j| lambda.part(j + 1) as i64 - j as i64).collect();
    let floor = -(n as i64);
    let mut out = Vec::new();
    for j in 0..n {
        let moved = entries[j] - k;
        if moved <= floor || entries.contains(&moved) {
            continue;
        }
        let mut w = entries.clone();
        w.remove(j);
        // entries stay strictly decreasing; count the ones `moved` must pass
        let pos = w.iter().take_while(|&&x| x > moved).count();
        w.insert(pos, moved);
        let sign = if (pos as i64 - j as i64).unsigned_abs().is_multiple_of(2) {
            1
        } else {
            -1
        };
        let parts = w.iter().enumerate().map(|(i, &x)| (x + i as i64) as u32).collect();
        out.push((Partition::from_unsorted(parts), sign));
    }
    out
}

impl Representation for FermionicRep {
    type Index = Partition;

    fn name(&self) -> String {
        "fermionic".into()
    }

    fn params(&self) -> &HeisenbergParams {
        &self.params
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
        let Generator::B(k) = g else {
            unreachable!("bosonic representations are only asked for B");
        };
        Ok(StateVec::from_terms(
            wedge_shift(s, k)
                .into_iter()
                .map(|(p, sign)| (p, Scalar::from_int(sign))),
        ))
    }

    fn parse_index(&self, text: &str) -> Result<Partition> {
        text.parse()
    }
}
