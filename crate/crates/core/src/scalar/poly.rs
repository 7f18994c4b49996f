//! Sparse polynomials in `q` and `t` with integer coefficients.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exponent pair `(deg_q, deg_t)`. The derived tuple order is the lexicographic
/// order used to pick leading terms.
pub type Exponent = (u32, u32);

/// A polynomial in `ℤ[q, t]`, stored as terms sorted by ascending exponent with
/// no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    terms: Vec<(Exponent, BigInt)>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, deg_q: u32, deg_t: u32) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            terms: alloc::vec![((deg_q, deg_t), c)],
        }
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from arbitrary terms, merging repeated exponents.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, BigInt)>,
    {
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(acc)
    }

    /// Row-major coefficients with `width` columns of `t`-degrees; the slot order
    /// is already the ascending exponent order.
    pub(crate) fn from_dense(width: usize, coeffs: impl Iterator<Item = BigInt>) -> Self {
        IntPoly {
            terms: coeffs
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (((i / width) as u32, (i % width) as u32), c))
                .collect(),
        }
    }

    fn from_map(map: BTreeMap<Exponent, BigInt>) -> Self {
        IntPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> &[(Exponent, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// The constant value, if the polynomial has no `q` or `t` dependence.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [((0, 0), c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self.terms.as_slice(), [] | [((0, 0), _)])
    }

    /// Leading term under the lexicographic `(deg_q, deg_t)` order.
    pub fn leading(&self) -> Option<&(Exponent, BigInt)> {
        self.terms.last()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.iter().map(|((a, _), _)| *a).max().unwrap_or(0)
    }

    pub fn degree_t(&self) -> u32 {
        self.terms.iter().map(|((_, b), _)| *b).max().unwrap_or(0)
    }

    /// Smallest exponents of `q` and `t` over all terms.
    pub fn min_exponents(&self) -> Exponent {
        let mq = self.terms.iter().map(|((a, _), _)| *a).min().unwrap_or(0);
        let mt = self.terms.iter().map(|((_, b), _)| *b).min().unwrap_or(0);
        (mq, mt)
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide them exactly.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        IntPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x / c)).collect(),
        }
    }

    pub fn shift(&self, dq: u32, dt: u32) -> Self {
        IntPoly {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a + dq, b + dt), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let ((lq, lt), lc) = divisor.leading()?.clone();
        if divisor.terms.len() == 1 {
            let mut out = Vec::with_capacity(self.terms.len());
            for ((a, b), c) in &self.terms {
                if *a < lq || *b < lt {
                    return None;
                }
                let (quo, rem) = c.div_rem(&lc);
                if !rem.is_zero() {
                    return None;
                }
                out.push(((a - lq, b - lt), quo));
            }
            return Some(IntPoly { terms: out });
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        // A dense remainder suffices: partial quotients never push a term past
        // the dividend's t-degree unless the division is inexact.
        let width = self.degree_t() as usize + 1;
        let height = self.degree_q() as usize + 1;
        if divisor.degree_t() as usize >= width || lq as usize >= height {
            return None;
        }
        let mut rem = vec![BigInt::zero(); width * height];
        for ((a, b), c) in &self.terms {
            rem[*a as usize * width + *b as usize] = c.clone();
        }
        let mut quot = Vec::new();
        let mut top = rem.len();
        loop {
            while top > 0 && rem[top - 1].is_zero() {
                top -= 1;
            }
            if top == 0 {
                break;
            }
            let (a, b) = ((top - 1) / width, (top - 1) % width);
            if a < lq as usize || b < lt as usize {
                return None;
            }
            let (m, r) = rem[top - 1].div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let shift = (a - lq as usize, b - lt as usize);
            for ((da, db), dc) in &divisor.terms {
                let (x, y) = (*da as usize + shift.0, *db as usize + shift.1);
                if y >= width {
                    return None;
                }
                rem[x * width + y] -= dc * &m;
            }
            quot.push(((shift.0 as u32, shift.1 as u32), m));
        }
        quot.reverse();
        Some(IntPoly { terms: quot })
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(mut self) -> IntPoly {
        for (_, c) in self.terms.iter_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

fn merge(a: &IntPoly, b: &IntPoly, negate_b: bool) -> IntPoly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() || j < b.terms.len() {
        let take_a = j >= b.terms.len() || (i < a.terms.len() && a.terms[i].0 < b.terms[j].0);
        let take_b = i >= a.terms.len() || (j < b.terms.len() && b.terms[j].0 < a.terms[i].0);
        if take_a {
            out.push(a.terms[i].clone());
            i += 1;
        } else if take_b {
            let (e, c) = &b.terms[j];
            out.push((*e, if negate_b { -c } else { c.clone() }));
            j += 1;
        } else {
            let c = if negate_b {
                &a.terms[i].1 - &b.terms[j].1
            } else {
                &a.terms[i].1 + &b.terms[j].1
            };
            if !c.is_zero() {
                out.push((a.terms[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    IntPoly { terms: out }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        merge(self, rhs, false)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        merge(self, rhs, true)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        if self.terms.len() == 1 {
            let ((a, b), c) = &self.terms[0];
            return rhs.shift(*a, *b).scale(c);
        }
        if rhs.terms.len() == 1 {
            let ((a, b), c) = &rhs.terms[0];
            return self.shift(*a, *b).scale(c);
        }
        let width = (self.degree_t() + rhs.degree_t() + 1) as usize;
        let height = (self.degree_q() + rhs.degree_q() + 1) as usize;
        let slot = |(a, b): Exponent| a as usize * width + b as usize;
        let small = |p: &IntPoly| p.terms.iter().map(|(_, c)| c.to_i64()).collect::<Option<Vec<i64>>>();
        // products of i64s summed fewer than 2^62 times cannot overflow i128
        if let (Some(xs), Some(ys)) = (small(self), small(rhs)) {
            let mut acc = vec![0i128; width * height];
            for ((e1, _), x) in self.terms.iter().zip(&xs) {
                for ((e2, _), y) in rhs.terms.iter().zip(&ys) {
                    acc[slot((e1.0 + e2.0, e1.1 + e2.1))] += *x as i128 * *y as i128;
                }
            }
            return IntPoly::from_dense(width, acc.into_iter().map(BigInt::from));
        }
        let mut acc = vec![BigInt::zero(); width * height];
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                acc[slot((e1.0 + e2.0, e1.1 + e2.1))] += c1 * c2;
            }
        }
        IntPoly::from_dense(width, acc.into_iter())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn write_monomial(f: &mut fmt::Formatter<'_>, a: u32, b: u32) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("q", a), ("t", b)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Expanded form with terms in descending `(deg_q, deg_t)` order, e.g.
/// `q^2*t - 3*q + 1`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if *a == 0 && *b == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write_monomial(f, *a, *b)?;
            } else {
                write!(f, "{abs}*")?;
                write_monomial(f, *a, *b)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((u32, u32), i64)]) -> IntPoly {
        IntPoly::from_terms(terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    #[test]
    fn arithmetic_cancels_to_zero() {
        let a = p(&[((1, 0), 1), ((0, 0), -1)]);
        assert!((&a - &a).is_zero());
        assert_eq!(&a + &(-&a), IntPoly::zero());
    }

    #[test]
    fn product_and_exact_division() {
        let one_minus_q = p(&[((0, 0), 1), ((1, 0), -1)]);
        let one_plus_q = p(&[((0, 0), 1), ((1, 0), 1)]);
        let prod = &one_minus_q * &one_plus_q;
        assert_eq!(prod, p(&[((0, 0), 1), ((2, 0), -1)]));
        assert_eq!(prod.div_exact(&one_minus_q), Some(one_plus_q));
        assert_eq!(IntPoly::q().div_exact(&one_minus_q), None);
    }

    #[test]
    fn bivariate_division_with_remainder_is_rejected() {
        let a = p(&[((1, 1), 1), ((0, 0), -1)]);
        let b = p(&[((1, 0), 1), ((0, 1), -1)]);
        assert_eq!(a.div_exact(&b), None);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a));
    }

    #[test]
    fn display_is_descending() {
        let a = p(&[((0, 0), 1), ((1, 0), -3), ((2, 1), 1), ((0, 2), 2)]);
        assert_eq!(alloc::format!("{a}"), "q^2*t - 3*q + 2*t^2 + 1");
        assert_eq!(alloc::format!("{}", IntPoly::zero()), "0");
        assert_eq!(alloc::format!("{}", -IntPoly::t()), "-t");
    }
}
