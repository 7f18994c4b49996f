//! Partitions, skew shapes and the combinatorics built on them: horizontal
//! strips, arm and leg lengths, `z_λ`, and the abacus decomposition into an
//! `n`-core and `n`-quotient.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A weakly decreasing sequence of positive integers.
///
/// The derived order is lexicographic on the parts; listings in this crate use
/// the reverse of it (largest first), which refines the dominance order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Partition(Vec<u32>);

/// A box of a Young diagram, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }
}

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates the parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Part `λ_i` for 1-based `i`, zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// `m_i(λ)`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// `z_λ = ∏ i^{m_i} m_i!`
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let mut m = 0u32;
            while i < self.0.len() && self.0[i] == part {
                m += 1;
                i += 1;
                acc *= part;
                acc *= m;
            }
        }
        acc
    }

    /// `D(inner) ⊆ D(self)`
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && self.part(c.row as usize) >= c.col
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i as u32 + 1, j)))
    }

    /// `(a_λ(s), l_λ(s)) = (λ_i − j, λ′_j − i)` for `s = (i, j) ∈ λ`.
    pub fn arm_leg(&self, s: Cell) -> Result<(u32, u32)> {
        if !self.contains_cell(s) {
            return Err(Error::CellOutside {
                row: s.row,
                col: s.col,
                partition: format!("{self}"),
            });
        }
        let arm = self.part(s.row as usize) - s.col;
        let col_len = self.0.iter().take_while(|&&p| p >= s.col).count() as u32;
        Ok((arm, col_len - s.row))
    }

    /// Multiset union of the parts, i.e. the index of `p_λ p_μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j >= other.len() || (i < self.len() && self.0[i] >= other.0[j]) {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        Partition(parts)
    }

    /// Removes one part equal to `k`, if present.
    pub fn without_part(&self, k: u32) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == k)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    /// Dominance order `self ⊵ other` on partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0u64, 0u64);
        let n = self.len().max(other.len());
        for i in 1..=n {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return false;
            }
        }
        true
    }
}

/// `z_λ` as a scalar.
pub fn z_of(lambda: &Partition) -> Scalar {
    Scalar::from_bigint(lambda.z())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Accepts `[3,1,1]`, `[]`, or the bare list `3,1,1`.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        let body = s.trim();
        let body = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("`{s}` is not a list of nonnegative integers")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }
}

/// `outer / inner` with `D(inner) ⊆ D(outer)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells of `outer − inner`, row-major.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.outer.cells().filter(|c| !self.inner.contains_cell(*c))
    }

    /// At most one cell in each column.
    pub fn is_horizontal_strip(&self) -> bool {
        (2..=self.outer.len()).all(|i| self.outer.part(i) <= self.inner.part(i - 1))
    }

    /// Columns meeting the skew cells.
    pub fn columns(&self) -> BTreeSet<u32> {
        self.cells().map(|c| c.col).collect()
    }

    /// Rows meeting the skew cells.
    pub fn rows(&self) -> BTreeSet<u32> {
        self.cells().map(|c| c.row).collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// All partitions of `d`, largest first (reverse lexicographic).
pub fn partitions_of(d: usize) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d as u32, d as u32, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `d` (ordered sequences of positive parts).
pub fn compositions_of(d: usize) -> Vec<Vec<u32>> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=d {
        for mut rest in compositions_of(d - first) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

/// All `μ ⊇ λ` with `μ/λ` a horizontal strip of size `k`, largest first.
pub fn horizontal_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    let l = lambda.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(l + 1);
    fn go(lambda: &Partition, i: usize, rows: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i > rows {
            if rest == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let low = lambda.part(i);
        let high = if i == 1 {
            low + rest
        } else {
            lambda.part(i - 1).min(low + rest)
        };
        for v in (low..=high).rev() {
            cur.push(v);
            go(lambda, i + 1, rows, rest - (v - low), cur, out);
            cur.pop();
        }
    }
    go(lambda, 1, l + 1, k as u32, &mut cur, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// All `μ ⊆ λ` with `λ/μ` a horizontal strip of size `k`, largest first.
pub fn horizontal_strips_below(lambda: &Partition, k: usize) -> Vec<Partition> {
    let l = lambda.len();
    let mut out = Vec::new();
    fn go(lambda: &Partition, i: usize, rows: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i > rows {
            if rest == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let high = lambda.part(i);
        let low = lambda.part(i + 1).max(high.saturating_sub(rest));
        for v in (low..=high).rev() {
            cur.push(v);
            go(lambda, i + 1, rows, rest - (high - v), cur, out);
            cur.pop();
        }
    }
    go(lambda, 1, l, k as u32, &mut Vec::with_capacity(l), &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn beads_to_partition(mut beads: Vec<u32>) -> Partition {
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let n = beads.len() as u32;
    Partition::from_unsorted(beads.iter().enumerate().map(|(i, &b)| b - (n - 1 - i as u32)).collect())
}

/// Positions on one runner (in runner coordinates) to a partition.
fn runner_partition(mut positions: Vec<u32>) -> Partition {
    positions.sort_unstable_by(|a, b| b.cmp(a));
    let c = positions.len() as u32;
    Partition::from_unsorted(
        positions
            .iter()
            .enumerate()
            .map(|(i, &j)| j - (c - 1 - i as u32))
            .collect(),
    )
}

/// The `n`-core and `n`-quotient of `λ`.
///
/// Beta-numbers are `λ_i + N − i` where `N` is the least multiple of `n` that is
/// at least the length of `λ`; runner `r` holds the beta-numbers congruent to
/// `r` mod `n`, and quotient component `r` is read off runner `r`.
pub fn core_quotient(lambda: &Partition, n: usize) -> Result<(Partition, Vec<Partition>)> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("core/quotient needs n >= 2, got {n}")));
    }
    let n32 = n as u32;
    let beads_count = lambda.len().div_ceil(n) * n;
    let mut runners: Vec<Vec<u32>> = vec![Vec::new(); n];
    for i in 1..=beads_count {
        let beta = lambda.part(i) + (beads_count - i) as u32;
        runners[(beta % n32) as usize].push(beta / n32);
    }
    let quotient = runners.iter().map(|r| runner_partition(r.clone())).collect();
    let mut core_beads = Vec::with_capacity(beads_count);
    for (r, on_runner) in runners.iter().enumerate() {
        for j in 0..on_runner.len() as u32 {
            core_beads.push(r as u32 + n32 * j);
        }
    }
    Ok((beads_to_partition(core_beads), quotient))
}

pub fn is_core(lambda: &Partition, n: usize) -> bool {
    core_quotient(lambda, n).is_ok_and(|(core, _)| &core == lambda)
}

/// Inverse of [`core_quotient`].
pub fn from_core_quotient(core: &Partition, quotient: &[Partition], n: usize) -> Result<Partition> {
    if n < 2 || quotient.len() != n {
        return Err(Error::InvalidArgument(format!(
            "expected {n} >= 2 quotient components, got {}",
            quotient.len()
        )));
    }
    if !is_core(core, n) {
        return Err(Error::InvalidArgument(format!("{core} is not a {n}-core")));
    }
    let n32 = n as u32;
    let mut beads_count = core.len().div_ceil(n) * n;
    loop {
        let mut counts = vec![0usize; n];
        for i in 1..=beads_count {
            let beta = core.part(i) + (beads_count - i) as u32;
            counts[(beta % n32) as usize] += 1;
        }
        if counts.iter().zip(quotient).all(|(&c, q)| c >= q.len()) {
            let mut beads = Vec::with_capacity(beads_count);
            for (r, q) in quotient.iter().enumerate() {
                let c = counts[r];
                for i in 1..=c {
                    let j = q.part(i) + (c - i) as u32;
                    beads.push(r as u32 + n32 * j);
                }
            }
            return Ok(beads_to_partition(beads));
        }
        beads_count += n;
    }
}

/// Partitions of every size up to and including `d`.
pub fn partitions_up_to(d: usize) -> Vec<Partition> {
    (0..=d).flat_map(partitions_of).collect()
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Writes a sequence of partitions as `[a]|[b]|…`.
pub fn format_sequence(parts: &[Partition]) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            out.push('|');
        }
        out.push_str(&format!("{p}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn z_values() {
        assert_eq!(z_of(&p(&[])), Scalar::one());
        assert_eq!(z_of(&p(&[2, 1])), Scalar::from_int(2));
        assert_eq!(z_of(&p(&[2, 2])), Scalar::from_int(8));
        assert_eq!(z_of(&p(&[1, 1, 1])), Scalar::from_int(6));
    }

    #[test]
    fn strips_examples() {
        assert_eq!(horizontal_strips(&p(&[]), 3), vec![p(&[3])]);
        assert_eq!(horizontal_strips(&p(&[1]), 2), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(horizontal_strips(&p(&[2, 2]), 1), vec![p(&[3, 2]), p(&[2, 2, 1])]);
        assert_eq!(horizontal_strips_below(&p(&[2, 1]), 1), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(horizontal_strips_below(&p(&[1, 1]), 2), vec![]);
    }

    #[test]
    fn arm_leg_examples() {
        assert_eq!(p(&[1]).arm_leg(Cell::new(1, 1)), Ok((0, 0)));
        assert_eq!(p(&[3, 2]).arm_leg(Cell::new(1, 1)), Ok((2, 1)));
        assert_eq!(p(&[2]).arm_leg(Cell::new(1, 1)), Ok((1, 0)));
        assert!(p(&[2]).arm_leg(Cell::new(2, 1)).is_err());
    }

    #[test]
    fn core_quotient_examples() {
        assert_eq!(
            core_quotient(&p(&[2, 1]), 2).unwrap(),
            (p(&[2, 1]), vec![p(&[]), p(&[])])
        );
        assert_eq!(core_quotient(&p(&[2]), 2).unwrap(), (p(&[]), vec![p(&[]), p(&[1])]));
        assert_eq!(core_quotient(&p(&[1, 1]), 2).unwrap(), (p(&[]), vec![p(&[1]), p(&[])]));
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(0), vec![p(&[])]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(8).len(), 22);
        assert_eq!(compositions_of(4).len(), 8);
    }

    #[test]
    fn parsing() {
        assert_eq!("[3,1,1]".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), p(&[]));
        assert_eq!("2, 1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
        assert_eq!(alloc::format!("{}", p(&[3, 1, 1])), "[3,1,1]");
    }

    #[test]
    fn skew_shapes() {
        let s = SkewShape::new(p(&[3, 1]), p(&[1])).unwrap();
        assert!(s.is_horizontal_strip());
        assert_eq!(s.size(), 3);
        assert!(!SkewShape::new(p(&[2, 2]), p(&[1])).unwrap().is_horizontal_strip());
        assert!(SkewShape::new(p(&[1]), p(&[2])).is_err());
    }
}
