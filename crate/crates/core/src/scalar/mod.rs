//! The coefficient field `ℚ(q, t)`.
//!
//! A [`Scalar`] is a reduced fraction of two [`IntPoly`]s. The canonical form
//! has coprime numerator and denominator (polynomial gcd and integer content
//! both removed) and a denominator whose lexicographically leading coefficient
//! is positive, so structural equality decides equality in the field.

mod gcd;
mod parse;
mod poly;

use alloc::format;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};

pub use gcd::gcd;
pub use parse::{parse_expr, Expr};
pub use poly::{Exponent, IntPoly};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: IntPoly,
    den: IntPoly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_poly(IntPoly::constant(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar::from_poly(IntPoly::constant(n))
    }

    pub fn from_poly(num: IntPoly) -> Self {
        Scalar {
            num,
            den: IntPoly::one(),
        }
    }

    pub fn q() -> Self {
        Scalar::from_poly(IntPoly::q())
    }

    pub fn t() -> Self {
        Scalar::from_poly(IntPoly::t())
    }

    /// The rational number `n/d`.
    pub fn ratio(n: i64, d: i64) -> Result<Self> {
        Scalar::new(IntPoly::constant(n), IntPoly::constant(d))
    }

    /// `num/den` in canonical form.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(canonical(num, den))
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in `ℤ[q, t]`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `(numerator, denominator)` when the value is a plain rational number.
    pub fn as_rational(&self) -> Option<(BigInt, BigInt)> {
        Some((self.num.as_constant()?, self.den.as_constant()?))
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(fix_sign(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        // powers of a reduced fraction stay reduced
        Ok(fix_sign(base.num.pow(e), base.den.pow(e)))
    }

    /// Substitutes the bound variables and re-canonicalizes. Fails when the
    /// denominator vanishes under the substitution.
    pub fn specialize(&self, bindings: &Bindings) -> Result<Scalar> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let num = bindings.substitute(&self.num)?;
        let den = bindings.substitute(&self.den)?;
        if den.is_zero() {
            return Err(Error::Pole {
                binding: format!("{bindings}"),
            });
        }
        num.checked_div(&den)
    }
}

fn fix_sign(num: IntPoly, den: IntPoly) -> Scalar {
    if den.leading_coeff().is_some_and(|c| c.is_negative()) {
        Scalar { num: -num, den: -den }
    } else {
        Scalar { num, den }
    }
}

fn canonical(num: IntPoly, den: IntPoly) -> Scalar {
    if num.is_zero() {
        return Scalar::zero();
    }
    if den.is_one() {
        return Scalar { num, den };
    }
    if let (Some(n), Some(d)) = (num.as_constant(), den.as_constant()) {
        let g = n.gcd(&d);
        let (mut n, mut d) = (n / &g, d / &g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        return Scalar {
            num: IntPoly::constant(n),
            den: IntPoly::constant(d),
        };
    }
    let g = gcd::gcd(&num, &den);
    if g.is_one() {
        return fix_sign(num, den);
    }
    let n = num.div_exact(&g).expect("gcd divides numerator");
    let d = den.div_exact(&g).expect("gcd divides denominator");
    fix_sign(n, d)
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::from_bigint(n)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -self.num,
            den: self.den,
        }
    }
}

fn add_impl(a: &Scalar, b: &Scalar, negate_b: bool) -> Scalar {
    let combine = |x: &IntPoly, y: &IntPoly| if negate_b { x - y } else { x + y };
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    if a.den == b.den {
        let num = combine(&a.num, &b.num);
        if a.den.is_one() {
            return Scalar {
                num,
                den: IntPoly::one(),
            };
        }
        return canonical(num, a.den.clone());
    }
    if a.den.is_one() {
        return fix_sign(combine(&(&a.num * &b.den), &b.num), b.den.clone());
    }
    if b.den.is_one() {
        return fix_sign(combine(&a.num, &(&b.num * &a.den)), a.den.clone());
    }
    let g = gcd::gcd(&a.den, &b.den);
    if g.is_one() {
        // coprime denominators keep the sum reduced
        let num = combine(&(&a.num * &b.den), &(&b.num * &a.den));
        if num.is_zero() {
            return Scalar::zero();
        }
        return fix_sign(num, &a.den * &b.den);
    }
    let ad = a.den.div_exact(&g).expect("gcd divides");
    let bd = b.den.div_exact(&g).expect("gcd divides");
    let num = combine(&(&a.num * &bd), &(&b.num * &ad));
    if num.is_zero() {
        return Scalar::zero();
    }
    let g2 = gcd::gcd(&num, &g);
    if g2.is_one() {
        return fix_sign(num, &(&ad * &bd) * &g);
    }
    let num = num.div_exact(&g2).expect("gcd divides");
    let gd = g.div_exact(&g2).expect("gcd divides");
    fix_sign(num, &(&ad * &bd) * &gd)
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        add_impl(self, rhs, false)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        add_impl(self, rhs, true)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar {
                num: &self.num * &rhs.num,
                den: IntPoly::one(),
            };
        }
        // cross-cancel so that the product of reduced fractions stays reduced
        let g1 = gcd::gcd(&self.num, &rhs.den);
        let g2 = gcd::gcd(&rhs.num, &self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (
                self.num.div_exact(&g1).expect("gcd divides"),
                rhs.den.div_exact(&g1).expect("gcd divides"),
            )
        };
        let (n2, d1) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (
                rhs.num.div_exact(&g2).expect("gcd divides"),
                self.den.div_exact(&g2).expect("gcd divides"),
            )
        };
        fix_sign(&n1 * &n2, &d1 * &d2)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl core::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| &acc + &x)
    }
}

impl core::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| &acc * &x)
    }
}

fn needs_parens(p: &IntPoly) -> bool {
    match p.terms() {
        [((0, 0), _)] => false,
        [((a, b), c)] => !(c.is_one() && (*a == 0 || *b == 0)),
        _ => true,
    }
}

/// Deterministic expanded form, e.g. `(t - 1)/(q - 1)`. The output parses
/// back to the same value.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.terms().len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_parens(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl core::str::FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Scalar> {
        parse_expr(s)?.eval(None)
    }
}

/// Values to substitute for `q` and/or `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bindings {
    pub q: Option<Scalar>,
    pub t: Option<Scalar>,
}

impl Bindings {
    pub fn is_empty(&self) -> bool {
        self.q.is_none() && self.t.is_none()
    }

    pub fn q(value: Scalar) -> Self {
        Bindings {
            q: Some(value),
            t: None,
        }
    }

    pub fn t(value: Scalar) -> Self {
        Bindings {
            q: None,
            t: Some(value),
        }
    }

    /// Parses a single `name=value` binding and merges it in.
    pub fn bind(&mut self, spec: &str) -> Result<()> {
        let (name, value) = spec.split_once('=').ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("expected name=value, got `{spec}`"),
        })?;
        let value: Scalar = value.trim().parse()?;
        match name.trim() {
            "q" => self.q = Some(value),
            "t" => self.t = Some(value),
            other => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("unknown variable `{other}`"),
                })
            }
        }
        Ok(())
    }

    fn substitute(&self, p: &IntPoly) -> Result<Scalar> {
        let qv = self.q.clone().unwrap_or_else(Scalar::q);
        let tv = self.t.clone().unwrap_or_else(Scalar::t);
        let mut acc = Scalar::zero();
        for ((a, b), c) in p.terms() {
            let term = &(&qv.pow(*a as i64)? * &tv.pow(*b as i64)?) * &Scalar::from_bigint(c.clone());
            acc = &acc + &term;
        }
        Ok(acc)
    }
}

impl fmt::Display for Bindings {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: alloc::vec::Vec<String> = alloc::vec::Vec::new();
        if let Some(q) = &self.q {
            parts.push(format!("q={q}"));
        }
        if let Some(t) = &self.t {
            parts.push(format!("t={t}"));
        }
        f.write_str(&parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn rational_addition() {
        assert_eq!(&s("1/2") + &s("1/2"), Scalar::one());
    }

    #[test]
    fn reciprocal_cancellation() {
        assert_eq!(&s("(1-t)/(1-q)") * &s("(1-q)/(1-t)"), Scalar::one());
    }

    #[test]
    fn polynomial_gcd_reduction() {
        assert_eq!(s("1-q^2").checked_div(&s("1-q")).unwrap(), s("1+q"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(s("q").checked_div(&Scalar::zero()), Err(Error::DivisionByZero));
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_sign_uses_leading_denominator_coefficient() {
        let x = s("(1-t)/(1-q)");
        assert_eq!(alloc::format!("{x}"), "(t - 1)/(q - 1)");
        assert!(x.den().leading_coeff().unwrap().is_positive());
        assert_eq!(alloc::format!("{}", s("-1/2")), "-1/2");
        assert_eq!(alloc::format!("{}", s("1/(2*q)")), "1/(2*q)");
    }

    #[test]
    fn specialization_examples() {
        assert_eq!(
            s("(1-t)/(1-q)").specialize(&Bindings::q(Scalar::zero())).unwrap(),
            s("1-t")
        );
        assert_eq!(
            s("(1-t^2)/(1-q^2)").specialize(&Bindings::t(Scalar::q())).unwrap(),
            Scalar::one()
        );
        assert!(matches!(
            s("1/(1-q)").specialize(&Bindings::q(Scalar::one())),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        for text in ["(1-t)/(1-q)", "q^3*t - 2", "-q/(1+t)", "7/3", "(q-t)/(q*t)", "1/q^2"] {
            let x = s(text);
            assert_eq!(s(&alloc::format!("{x}")), x, "{text}");
        }
    }

    #[test]
    fn bindings_parse() {
        let mut b = Bindings::default();
        b.bind("q=0").unwrap();
        b.bind("t = 1/2").unwrap();
        assert_eq!(alloc::format!("{b}"), "q=0,t=1/2");
        assert!(b.bind("x=1").is_err());
    }
}
