//! Per-degree change-of-basis matrices, computed once and shared.
//!
//! Rows are indexed by the source basis and columns by the target basis, both
//! in the order of [`partitions_of`]. A symmetric function with coefficient row
//! vector `c` in the source basis has coefficients `c · M` in the target.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicUsize, Ordering};

use spin::{LazyLock, RwLock};

use super::Basis;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::partition::{horizontal_strips, partitions_of, z_of, Partition};
use crate::scalar::Scalar;

pub const DEFAULT_DEGREE_CAP: usize = 8;

static DEGREE_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_DEGREE_CAP);

/// Largest degree for which transition matrices are built.
pub fn degree_cap() -> usize {
    DEGREE_CAP.load(Ordering::Relaxed)
}

pub fn set_degree_cap(cap: usize) {
    DEGREE_CAP.store(cap, Ordering::Relaxed);
}

pub(crate) fn check_degree(degree: usize) -> Result<()> {
    let cap = degree_cap();
    if degree > cap {
        return Err(Error::DegreeCapExceeded { degree, cap });
    }
    Ok(())
}

type Key = (usize, Basis, Basis);

/// Shared store of transition matrices keyed by degree and basis pair.
pub struct TransitionCache {
    matrices: RwLock<BTreeMap<Key, Arc<Matrix>>>,
    indices: RwLock<BTreeMap<usize, Arc<Index>>>,
}

/// Partitions of one degree and their positions.
pub struct Index {
    pub list: Vec<Partition>,
    pub position: BTreeMap<Partition, usize>,
}

static CACHE: LazyLock<TransitionCache> = LazyLock::new(|| TransitionCache {
    matrices: RwLock::new(BTreeMap::new()),
    indices: RwLock::new(BTreeMap::new()),
});

impl TransitionCache {
    pub fn global() -> &'static TransitionCache {
        &CACHE
    }

    pub fn index(&self, degree: usize) -> Arc<Index> {
        if let Some(ix) = self.indices.read().get(&degree) {
            return ix.clone();
        }
        let list = partitions_of(degree);
        let position = list.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let ix = Arc::new(Index { list, position });
        self.indices.write().entry(degree).or_insert(ix).clone()
    }

    /// The matrix taking `from`-coefficients to `to`-coefficients in `degree`.
    pub fn matrix(&self, degree: usize, from: Basis, to: Basis) -> Result<Arc<Matrix>> {
        check_degree(degree)?;
        if let Some(m) = self.matrices.read().get(&(degree, from, to)) {
            return Ok(m.clone());
        }
        let m = Arc::new(self.build(degree, from, to)?);
        // a concurrent builder may have won; keep whichever was published first
        Ok(self.matrices.write().entry((degree, from, to)).or_insert(m).clone())
    }

    fn build(&self, d: usize, from: Basis, to: Basis) -> Result<Matrix> {
        use Basis::*;
        let n = self.index(d).list.len();
        Ok(match (from, to) {
            _ if from == to => Matrix::identity(n),
            (P, M) => self.p_to_m(d),
            (S, M) => self.s_to_m(d),
            (H, P) => self.h_to_p(d)?,
            (M, P) | (M, S) | (P, H) => self.matrix(d, to, from)?.inverse()?,
            (S, P) => self.matrix(d, S, M)?.mul(&*self.matrix(d, M, P)?)?,
            (P, S) => self.matrix(d, P, M)?.mul(&*self.matrix(d, M, S)?)?,
            (a, b) => self.matrix(d, a, P)?.mul(&*self.matrix(d, P, b)?)?,
        })
    }

    /// `p_λ = Σ_μ c_{λμ} m_μ` where `c_{λμ}` counts the ways to distribute the
    /// parts of `λ` into bins of sizes `μ_1, μ_2, …`.
    fn p_to_m(&self, d: usize) -> Matrix {
        let ix = self.index(d);
        let mut m = Matrix::zeros(ix.list.len(), ix.list.len());
        for (i, lambda) in ix.list.iter().enumerate() {
            let mut memo = BTreeMap::new();
            for (j, mu) in ix.list.iter().enumerate() {
                let count = fill_count(lambda.parts(), 0, mu.parts().to_vec(), &mut memo);
                if count > 0 {
                    m.set(i, j, Scalar::from_int(count as i64));
                }
            }
        }
        m
    }

    /// Kostka numbers `K_{λμ}`: chains `∅ ⊂ … ⊂ λ` of horizontal strips of
    /// sizes `μ_1, μ_2, …`.
    fn s_to_m(&self, d: usize) -> Matrix {
        let ix = self.index(d);
        let mut m = Matrix::zeros(ix.list.len(), ix.list.len());
        for (j, mu) in ix.list.iter().enumerate() {
            let mut layer: BTreeMap<Partition, u64> = BTreeMap::new();
            layer.insert(Partition::empty(), 1);
            for &part in mu.parts() {
                let mut next = BTreeMap::new();
                for (shape, count) in &layer {
                    for bigger in horizontal_strips(shape, part as usize) {
                        *next.entry(bigger).or_insert(0) += count;
                    }
                }
                layer = next;
            }
            for (lambda, count) in layer {
                m.set(ix.position[&lambda], j, Scalar::from_int(count as i64));
            }
        }
        m
    }

    /// `h_λ = ∏ h_{λ_i}` with `h_n = Σ_{ν ⊢ n} z_ν^{-1} p_ν`.
    fn h_to_p(&self, d: usize) -> Result<Matrix> {
        let ix = self.index(d);
        let mut m = Matrix::zeros(ix.list.len(), ix.list.len());
        for (i, lambda) in ix.list.iter().enumerate() {
            let mut acc: BTreeMap<Partition, Scalar> = BTreeMap::new();
            acc.insert(Partition::empty(), Scalar::one());
            for &part in lambda.parts() {
                let mut next: BTreeMap<Partition, Scalar> = BTreeMap::new();
                for nu in partitions_of(part as usize) {
                    let c = z_of(&nu).inv()?;
                    for (rho, a) in &acc {
                        let e = next.entry(rho.union(&nu)).or_default();
                        *e = &*e + &(a * &c);
                    }
                }
                acc = next;
            }
            for (rho, c) in acc {
                m.set(i, ix.position[&rho], c);
            }
        }
        Ok(m)
    }
}

/// Ways to place `parts[from..]` into bins with the remaining `caps` so that
/// every bin is filled exactly. Bins are interchangeable for counting purposes
/// only up to their capacities, so the memo key sorts them.
fn fill_count(parts: &[u32], from: usize, caps: Vec<u32>, memo: &mut BTreeMap<(usize, Vec<u32>), u64>) -> u64 {
    if from == parts.len() {
        return u64::from(caps.iter().all(|&c| c == 0));
    }
    let mut key_caps = caps.clone();
    key_caps.sort_unstable();
    let key = (from, key_caps);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for b in 0..caps.len() {
        if caps[b] >= parts[from] {
            let mut next = caps.clone();
            next[b] -= parts[from];
            total += fill_count(parts, from + 1, next, memo);
        }
    }
    memo.insert(key, total);
    total
}
