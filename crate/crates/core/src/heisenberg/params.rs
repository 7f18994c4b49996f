use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use core::fmt;

use spin::RwLock;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, z_of};
use crate::scalar::{parse_expr, Bindings, Expr, Scalar};

/// How many indices are compared when deciding whether two parameter
/// families agree.
pub const PARAM_SAMPLE: u32 = 8;

/// The sequence `a_k`, `k ≥ 1`, of a Heisenberg algebra with
/// `[B_k, B_{-k}] = k a_k`.
///
/// The family is a closed-form expression in the index `k`; values are
/// computed on first use and cached.
#[derive(Clone)]
pub struct HeisenbergParams {
    inner: Arc<Inner>,
}

struct Inner {
    expr: Expr,
    values: RwLock<BTreeMap<u32, Scalar>>,
    kernel: RwLock<BTreeMap<u32, Scalar>>,
}

impl HeisenbergParams {
    pub fn from_expr(expr: Expr) -> Self {
        HeisenbergParams {
            inner: Arc::new(Inner {
                expr,
                values: RwLock::new(BTreeMap::new()),
                kernel: RwLock::new(BTreeMap::new()),
            }),
        }
    }

    /// Parses an expression in `q`, `t` and the index `k`.
    pub fn parse(s: &str) -> Result<Self> {
        let expr = parse_expr(s)?;
        let params = HeisenbergParams::from_expr(expr);
        params.a(1)?;
        Ok(params)
    }

    /// `a_k = c` for every `k`.
    pub fn constant(c: &Scalar) -> Self {
        HeisenbergParams::from_expr(parse_expr(&format!("{c}")).expect("scalar display parses"))
    }

    /// `a_k = 1`, the parameters of the Fermionic Fock space.
    pub fn ones() -> Self {
        HeisenbergParams::constant(&Scalar::one())
    }

    /// `a_k = (1 - t^k)/(1 - q^k)`
    pub fn macdonald() -> Self {
        HeisenbergParams::parse("(1 - t^k)/(1 - q^k)").expect("valid expression")
    }

    /// `a_k = (1 - q^{2nk})/(1 - q^{2k})`
    pub fn ribbon(n: u32) -> Self {
        HeisenbergParams::parse(&format!("(1 - q^({}k))/(1 - q^(2k))", 2 * n)).expect("valid expression")
    }

    /// `c · a_k`
    pub fn scaled(&self, c: &Scalar) -> Self {
        let c = parse_expr(&format!("{c}")).expect("scalar display parses");
        HeisenbergParams::from_expr(Expr::Mul(c.into(), self.inner.expr.clone().into()))
    }

    /// Substitutes `q` and/or `t` in every `a_k`.
    pub fn specialize(&self, bindings: &Bindings) -> Result<Self> {
        let params = HeisenbergParams::from_expr(self.inner.expr.substitute(bindings));
        for k in 1..=PARAM_SAMPLE {
            params.a(k)?;
        }
        Ok(params)
    }

    pub fn expr(&self) -> &Expr {
        &self.inner.expr
    }

    /// `a_k`; fails for `k = 0` or a vanishing value.
    pub fn a(&self, k: u32) -> Result<Scalar> {
        if k == 0 {
            return Err(Error::ZeroGenerator);
        }
        if let Some(v) = self.inner.values.read().get(&k) {
            return Ok(v.clone());
        }
        let v = self.inner.expr.eval(Some(k as i64))?;
        if v.is_zero() {
            return Err(Error::ZeroParameter { k });
        }
        self.inner.values.write().insert(k, v.clone());
        Ok(v)
    }

    /// `∏ a_{λ_i}` over the parts of `λ`.
    pub fn a_product(&self, parts: &[u32]) -> Result<Scalar> {
        let mut acc = Scalar::one();
        for &p in parts {
            acc = &acc * &self.a(p)?;
        }
        Ok(acc)
    }

    /// `h_k⟨a⟩ = Σ_{λ ⊢ k} z_λ^{-1} ∏ a_{λ_i}`, the image of `h_k` under
    /// `p_j ↦ a_j`. These are the Cauchy kernel coefficients.
    pub fn h_bracket(&self, k: u32) -> Result<Scalar> {
        if k == 0 {
            return Ok(Scalar::one());
        }
        if let Some(v) = self.inner.kernel.read().get(&k) {
            return Ok(v.clone());
        }
        let mut acc = Scalar::zero();
        for lambda in partitions_of(k as usize) {
            let term = self.a_product(lambda.parts())?.checked_div(&z_of(&lambda))?;
            acc = &acc + &term;
        }
        self.inner.kernel.write().insert(k, acc.clone());
        Ok(acc)
    }

    /// Agreement on `a_1 … a_8`.
    pub fn same_as(&self, other: &HeisenbergParams) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (1..=PARAM_SAMPLE).all(|k| match (self.a(k), other.a(k)) {
                (Ok(x), Ok(y)) => x == y,
                _ => false,
            })
    }

    /// Textual form, parseable by [`HeisenbergParams::parse`].
    pub fn to_text(&self) -> String {
        format!("{}", self.inner.expr)
    }
}

impl fmt::Debug for HeisenbergParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeisenbergParams({})", self.inner.expr)
    }
}

impl fmt::Display for HeisenbergParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a_k = {}", self.inner.expr)
    }
}

impl PartialEq for HeisenbergParams {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn families() {
        assert_eq!(HeisenbergParams::ones().a(5).unwrap(), Scalar::one());
        assert_eq!(HeisenbergParams::macdonald().a(2).unwrap(), s("(1-t^2)/(1-q^2)"));
        assert_eq!(HeisenbergParams::ribbon(2).a(1).unwrap(), s("1+q^2"));
        assert_eq!(
            HeisenbergParams::ones().scaled(&Scalar::from_int(2)).a(3).unwrap(),
            Scalar::from_int(2)
        );
        assert!(matches!(HeisenbergParams::ones().a(0), Err(Error::ZeroGenerator)));
    }

    #[test]
    fn zero_parameter_is_rejected() {
        let p = HeisenbergParams::from_expr(parse_expr("k - 2").unwrap());
        assert_eq!(p.a(2), Err(Error::ZeroParameter { k: 2 }));
        assert!(HeisenbergParams::parse("0").is_err());
    }

    #[test]
    fn kernel_coefficients() {
        for k in 0..=6 {
            assert_eq!(HeisenbergParams::ones().h_bracket(k).unwrap(), Scalar::one());
        }
        assert_eq!(HeisenbergParams::ribbon(2).h_bracket(2).unwrap(), s("1 + q^2 + q^4"));
    }

    #[test]
    fn specialization_and_text() {
        let hl = HeisenbergParams::macdonald()
            .specialize(&Bindings::q(Scalar::zero()))
            .unwrap();
        assert_eq!(hl.a(3).unwrap(), s("1 - t^3"));
        let reparsed = HeisenbergParams::parse(&hl.to_text()).unwrap();
        assert_eq!(reparsed, hl);
        assert!(HeisenbergParams::macdonald()
            .specialize(&Bindings::q(Scalar::one()))
            .is_err());
        assert_ne!(HeisenbergParams::macdonald(), HeisenbergParams::ones());
    }
}
