use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use spin::RwLock;

use super::rep::{Generator, Native, Representation, StateVec};
use super::HeisenbergParams;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, z_of, Partition};
use crate::scalar::Scalar;
use crate::symfunc::{Basis, SymFunc};

/// How `F` and `G` are extracted from the action.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    /// `Σ_λ z_λ^{-1} ⟨B_{-λ} t, s⟩ p_λ`
    PowerSum,
    /// `Σ_μ ⟨U_μ t, s⟩ m_μ`
    Monomial,
}

type Cache<I> = RwLock<BTreeMap<(Generator, I), StateVec<I>>>;

/// A representation together with the derived operators and the generating
/// functions `F_{s/t}`, `G_{s/t}`.
///
/// Whatever the representation implements natively, every generator is
/// available here: `U_k`, `D_k` from the `B`s as `Σ_{λ ⊢ k} z_λ^{-1} B_{∓λ}`,
/// or `B_{∓k}` from the `U`s/`D`s by Newton's identities. Actions on basis
/// vectors are memoized.
pub struct HModule<R: Representation> {
    rep: R,
    cache: Cache<R::Index>,
}

impl<R: Representation> HModule<R> {
    pub fn new(rep: R) -> Self {
        HModule {
            rep,
            cache: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn rep(&self) -> &R {
        &self.rep
    }

    pub fn params(&self) -> &HeisenbergParams {
        self.rep.params()
    }

    pub fn degree_step(&self) -> i64 {
        self.rep.degree_step()
    }

    /// Degree shift of a generator.
    pub fn shift(&self, g: Generator) -> i64 {
        let m = self.rep.degree_step();
        match g {
            Generator::B(k) => -m * k,
            Generator::U(k) => m * k as i64,
            Generator::D(k) => -m * k as i64,
        }
    }

    /// `g · v_s`
    pub fn act(&self, g: Generator, s: &R::Index) -> Result<StateVec<R::Index>> {
        match g {
            Generator::B(0) => return Err(Error::ZeroGenerator),
            Generator::U(0) | Generator::D(0) => return Ok(StateVec::basis(s.clone())),
            _ => {}
        }
        let key = (g, s.clone());
        if let Some(v) = self.cache.read().get(&key) {
            return Ok(v.clone());
        }
        let v = self.derive(g, s)?;
        self.cache.write().insert(key, v.clone());
        Ok(v)
    }

    fn derive(&self, g: Generator, s: &R::Index) -> Result<StateVec<R::Index>> {
        match (self.rep.native(), g) {
            (Native::Bosonic, Generator::B(_)) | (Native::Ladder, Generator::U(_) | Generator::D(_)) => {
                self.rep.act(g, s)
            }
            (Native::Bosonic, Generator::U(k)) => self.h_from_b(k, -1, s),
            (Native::Bosonic, Generator::D(k)) => self.h_from_b(k, 1, s),
            (Native::Ladder, Generator::B(k)) => {
                let n = k.unsigned_abs() as u32;
                let ladder = if k < 0 { Generator::U } else { Generator::D };
                let sign = k.signum();
                // p_n = n h_n - Σ_{i<n} h_{n-i} p_i
                let mut out = self.act(ladder(n), s)?.scale(&Scalar::from_int(n as i64));
                for i in 1..n {
                    let inner = self.act(Generator::B(sign * i as i64), s)?;
                    let outer = self.apply(ladder(n - i), &inner)?;
                    out.add_scaled(&outer, &-Scalar::one());
                }
                Ok(out)
            }
        }
    }

    /// `Σ_{λ ⊢ k} z_λ^{-1} B_{sign·λ_1} ⋯ B_{sign·λ_l} v_s`, rightmost first.
    fn h_from_b(&self, k: u32, sign: i64, s: &R::Index) -> Result<StateVec<R::Index>> {
        let mut out = StateVec::zero();
        for lambda in partitions_of(k as usize) {
            let mut v = StateVec::basis(s.clone());
            for &part in lambda.parts().iter().rev() {
                v = self.apply(Generator::B(sign * part as i64), &v)?;
                if v.is_zero() {
                    break;
                }
            }
            out.add_scaled(&v, &z_of(&lambda).inv()?);
        }
        Ok(out)
    }

    /// Linear extension of [`HModule::act`].
    pub fn apply(&self, g: Generator, v: &StateVec<R::Index>) -> Result<StateVec<R::Index>> {
        let mut out = StateVec::zero();
        for (i, c) in v.iter() {
            out.add_scaled(&self.act(g, i)?, c);
        }
        Ok(out)
    }

    pub fn apply_b(&self, k: i64, v: &StateVec<R::Index>) -> Result<StateVec<R::Index>> {
        self.apply(Generator::B(k), v)
    }

    pub fn apply_u(&self, k: u32, v: &StateVec<R::Index>) -> Result<StateVec<R::Index>> {
        self.apply(Generator::U(k), v)
    }

    pub fn apply_d(&self, k: u32, v: &StateVec<R::Index>) -> Result<StateVec<R::Index>> {
        self.apply(Generator::D(k), v)
    }

    /// Applies `ops[0]` first, then `ops[1]`, and so on.
    pub fn apply_seq(&self, ops: &[Generator], v: &StateVec<R::Index>) -> Result<StateVec<R::Index>> {
        let mut v = v.clone();
        for &g in ops {
            if v.is_zero() {
                break;
            }
            v = self.apply(g, &v)?;
        }
        Ok(v)
    }

    /// `[g, h] v = g(h v) − h(g v)`
    pub fn commutator(&self, g: Generator, h: Generator, v: &StateVec<R::Index>) -> Result<StateVec<R::Index>> {
        let gh = self.apply(g, &self.apply(h, v)?)?;
        let hg = self.apply(h, &self.apply(g, v)?)?;
        Ok(gh.minus(&hg))
    }

    /// `(deg s − deg t)/m` when it is a nonnegative integer.
    pub fn skew_degree(&self, s: &R::Index, t: &R::Index) -> Option<usize> {
        let diff = self.rep.degree(s) - self.rep.degree(t);
        let m = self.rep.degree_step();
        (diff % m == 0 && diff / m >= 0).then(|| (diff / m) as usize)
    }

    /// Vectors `X_{λ_l} ⋯ X_{λ_1} v_start` for every partition `λ ⊢ d`,
    /// where `X_j = op(j)`. Partitions sharing a prefix share the work.
    fn partition_words(
        &self,
        start: &R::Index,
        d: usize,
        op: impl Fn(u32) -> Generator + Copy,
    ) -> Result<Vec<(Partition, StateVec<R::Index>)>> {
        fn go<R: Representation>(
            module: &HModule<R>,
            v: &StateVec<R::Index>,
            rest: u32,
            max: u32,
            parts: &mut Vec<u32>,
            op: impl Fn(u32) -> Generator + Copy,
            out: &mut Vec<(Partition, StateVec<R::Index>)>,
        ) -> Result<()> {
            if rest == 0 {
                out.push((Partition::new(parts.clone())?, v.clone()));
                return Ok(());
            }
            for p in (1..=max.min(rest)).rev() {
                let w = module.apply(op(p), v)?;
                if w.is_zero() {
                    continue;
                }
                parts.push(p);
                go(module, &w, rest - p, p, parts, op, out)?;
                parts.pop();
            }
            Ok(())
        }
        let mut out = Vec::new();
        let d = d as u32;
        go(
            self,
            &StateVec::basis(start.clone()),
            d,
            d,
            &mut Vec::new(),
            op,
            &mut out,
        )?;
        Ok(out)
    }

    fn assemble(words: &[(Partition, StateVec<R::Index>)], target: &R::Index, route: Route) -> Result<SymFunc> {
        let mut f = SymFunc::zero(match route {
            Route::PowerSum => Basis::P,
            Route::Monomial => Basis::M,
        });
        for (lambda, v) in words {
            let c = v.coeff(target);
            if c.is_zero() {
                continue;
            }
            let c = match route {
                Route::PowerSum => c.checked_div(&z_of(lambda))?,
                Route::Monomial => c,
            };
            f.add_term(lambda.clone(), &c);
        }
        f.convert(Basis::P)
    }

    fn default_route(&self) -> Route {
        match self.rep.native() {
            Native::Bosonic => Route::PowerSum,
            Native::Ladder => Route::Monomial,
        }
    }

    /// `F_{s/t}` in the `p` basis.
    pub fn compute_f(&self, s: &R::Index, t: &R::Index) -> Result<SymFunc> {
        self.compute_f_via(s, t, self.default_route())
    }

    pub fn compute_f_via(&self, s: &R::Index, t: &R::Index, route: Route) -> Result<SymFunc> {
        let Some(d) = self.skew_degree(s, t) else {
            return Ok(SymFunc::zero(Basis::P));
        };
        let words = match route {
            Route::PowerSum => self.partition_words(t, d, |j| Generator::B(-(j as i64)))?,
            Route::Monomial => self.partition_words(t, d, Generator::U)?,
        };
        Self::assemble(&words, s, route)
    }

    /// `G_{s/t}` in the `p` basis.
    pub fn compute_g(&self, s: &R::Index, t: &R::Index) -> Result<SymFunc> {
        self.compute_g_via(s, t, self.default_route())
    }

    pub fn compute_g_via(&self, s: &R::Index, t: &R::Index, route: Route) -> Result<SymFunc> {
        let Some(d) = self.skew_degree(s, t) else {
            return Ok(SymFunc::zero(Basis::P));
        };
        let words = match route {
            Route::PowerSum => self.partition_words(s, d, |j| Generator::B(j as i64))?,
            Route::Monomial => self.partition_words(s, d, Generator::D)?,
        };
        Self::assemble(&words, t, route)
    }

    /// Every nonzero `F_{s/t}` with `s` in degree `deg t + m d`.
    pub fn f_family(&self, t: &R::Index, d: usize) -> Result<Vec<(R::Index, SymFunc)>> {
        let route = self.default_route();
        let words = match route {
            Route::PowerSum => self.partition_words(t, d, |j| Generator::B(-(j as i64)))?,
            Route::Monomial => self.partition_words(t, d, Generator::U)?,
        };
        let target = self.rep.degree(t) + self.rep.degree_step() * d as i64;
        let mut out = Vec::new();
        for s in self.rep.basis_of_degree(target) {
            let f = Self::assemble(&words, &s, route)?;
            if !f.is_zero() {
                out.push((s, f));
            }
        }
        Ok(out)
    }

    /// Every nonzero `G_{s/t}` with `s` in degree `deg t + m d`.
    pub fn g_family(&self, t: &R::Index, d: usize) -> Result<Vec<(R::Index, SymFunc)>> {
        let target = self.rep.degree(t) + self.rep.degree_step() * d as i64;
        let mut out = Vec::new();
        for s in self.rep.basis_of_degree(target) {
            let g = self.compute_g(&s, t)?;
            if !g.is_zero() {
                out.push((s, g));
            }
        }
        Ok(out)
    }

    /// `⟨U_{α_l} ⋯ U_{α_1} v_t, v_s⟩`, the coefficient of `x^α` in `F_{s/t}`.
    pub fn monomial_coeff(&self, s: &R::Index, t: &R::Index, alpha: &[u32]) -> Result<Scalar> {
        if alpha.contains(&0) {
            return Err(Error::InvalidArgument("composition parts must be positive".into()));
        }
        let ops: Vec<Generator> = alpha.iter().map(|&a| Generator::U(a)).collect();
        Ok(self.apply_seq(&ops, &StateVec::basis(t.clone()))?.coeff(s))
    }

    /// `Φ(v) = Σ_s ⟨v, v_s⟩ G_s` with `G_s = G_{s/b}`.
    pub fn phi_map(&self, v: &StateVec<R::Index>) -> Result<SymFunc> {
        let b = self.rep.highest().ok_or(Error::NoHighestWeight)?;
        let mut out = SymFunc::zero(Basis::P);
        for (s, c) in v.iter() {
            let g = self.compute_g(s, &b)?;
            out = out.checked_add(&g.scale(c))?;
        }
        Ok(out)
    }

    /// Basis vectors of every degree from the lowest up to `d_max`.
    pub fn basis_up_to(&self, d_max: i64) -> Vec<R::Index> {
        let mut out = Vec::new();
        for d in self.rep.lowest_degree()..=d_max {
            out.extend(self.rep.basis_of_degree(d));
        }
        out
    }
}

/// The Bosonic action on `Λ_K`: `B_{-k}` multiplies by `a_k p_k` and `B_k`
/// acts as `k ∂/∂p_k`. The result is in the `p` basis.
pub fn act_on_lambda(params: &HeisenbergParams, k: i64, f: &SymFunc) -> Result<SymFunc> {
    if k == 0 {
        return Err(Error::ZeroGenerator);
    }
    let n = k.unsigned_abs() as u32;
    let fp = f.convert(Basis::P)?;
    let mut out = SymFunc::zero(Basis::P);
    if k < 0 {
        let a = params.a(n)?;
        let pk = Partition::from_unsorted(alloc::vec![n]);
        for (lambda, c) in fp.terms() {
            out.add_term(lambda.union(&pk), &(c * &a));
        }
    } else {
        for (lambda, c) in fp.terms() {
            let m = lambda.multiplicity(n);
            if let Some(rest) = lambda.without_part(n) {
                out.add_term(rest, &(c * &Scalar::from_int(n as i64 * m as i64)));
            }
        }
    }
    Ok(out)
}
