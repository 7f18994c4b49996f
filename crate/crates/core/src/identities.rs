//! Executable checks of the identities satisfied by any representation of a
//! Heisenberg algebra. Mismatches are collected in a [`VerifyReport`]; only
//! genuine computation failures surface as errors.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::Result;
use crate::heisenberg::{act_on_lambda, Generator, HModule, HeisenbergParams, Representation, StateVec};
use crate::linalg::Matrix;
use crate::partition::Partition;
use crate::reps::{BundleRep, MatrixBundle};
use crate::scalar::Scalar;
use crate::symfunc::{evaluate_vars, h, multiply, perp_apply, theta_apply, Basis, SymFunc, Var, VarPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Failure {
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one verifier run.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    pub identity: String,
    pub checked: Vec<String>,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn new(identity: &str) -> Self {
        VerifyReport {
            identity: identity.into(),
            checked: Vec::new(),
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record<T: PartialEq + core::fmt::Display>(&mut self, instance: String, lhs: &T, rhs: &T) {
        if lhs != rhs {
            self.failures.push(Failure {
                instance: instance.clone(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        self.checked.push(instance);
    }

    fn record_sym(&mut self, instance: String, lhs: &SymFunc, rhs: &SymFunc) -> Result<()> {
        let (l, r) = (lhs.convert(Basis::P)?, rhs.convert(Basis::P)?);
        self.record(instance, &l, &r);
        Ok(())
    }
}

/// Whether degree `d` lies inside the part of the representation where the
/// action is available.
fn available<R: Representation>(module: &HModule<R>, d: i64) -> bool {
    module.rep().top_degree().is_none_or(|top| d <= top)
}

/// Memoized `F_s`, `G_s` relative to the highest weight vector.
struct Families<'a, R: Representation> {
    module: &'a HModule<R>,
    b: R::Index,
    f: BTreeMap<R::Index, SymFunc>,
    g: BTreeMap<R::Index, SymFunc>,
}

impl<'a, R: Representation> Families<'a, R> {
    fn new(module: &'a HModule<R>) -> Result<Self> {
        let b = module.rep().highest().ok_or(crate::Error::NoHighestWeight)?;
        Ok(Families {
            module,
            b,
            f: BTreeMap::new(),
            g: BTreeMap::new(),
        })
    }

    fn f(&mut self, s: &R::Index) -> Result<SymFunc> {
        if let Some(v) = self.f.get(s) {
            return Ok(v.clone());
        }
        let v = self.module.compute_f(s, &self.b)?;
        self.f.insert(s.clone(), v.clone());
        Ok(v)
    }

    fn g(&mut self, s: &R::Index) -> Result<SymFunc> {
        if let Some(v) = self.g.get(s) {
            return Ok(v.clone());
        }
        let v = self.module.compute_g(s, &self.b)?;
        self.g.insert(s.clone(), v.clone());
        Ok(v)
    }

    /// `Σ_t c_t X_t` with `X = F` or `G`.
    fn combine(&mut self, v: &StateVec<R::Index>, use_g: bool) -> Result<SymFunc> {
        let mut out = SymFunc::zero(Basis::P);
        for (t, c) in v.iter() {
            let x = if use_g { self.g(t)? } else { self.f(t)? };
            out = out.checked_add(&x.scale(c))?;
        }
        Ok(out)
    }
}

/// The four Pieri identities
/// `h_k[a]·G_s = Σ_t ⟨U_k s, t⟩ G_t`, `h_k[a]·F_s = Σ_t ⟨D_k t, s⟩ F_t`,
/// `h_k^⊥ G_s = Σ_t ⟨D_k s, t⟩ G_t`, `h_k^⊥ F_s = Σ_t ⟨U_k t, s⟩ F_t`
/// for `k ≤ k_max` and basis vectors of degree at most `d_max`.
pub fn verify_pieri<R: Representation>(module: &HModule<R>, k_max: u32, d_max: i64) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("genPieri");
    let mut fam = Families::new(module)?;
    let rep = module.rep();
    let params = module.params();
    for s in module.basis_up_to(d_max) {
        let deg = rep.degree(&s);
        for k in 1..=k_max {
            let hk = h(k);
            let hk_a = theta_apply(&hk, params)?;
            let up = deg + module.shift(Generator::U(k));
            let down = deg + module.shift(Generator::D(k));
            if available(module, up) {
                let lhs = multiply(&hk_a, &fam.g(&s)?)?;
                let rhs = fam.combine(&module.act(Generator::U(k), &s)?, true)?;
                report.record_sym(format!("k={k} s={s}: h_k[a] G_s"), &lhs, &rhs)?;

                let mut coeffs = StateVec::zero();
                for t in rep.basis_of_degree(up) {
                    coeffs.add_term(t.clone(), &module.act(Generator::D(k), &t)?.coeff(&s));
                }
                let lhs = multiply(&hk_a, &fam.f(&s)?)?;
                let rhs = fam.combine(&coeffs, false)?;
                report.record_sym(format!("k={k} s={s}: h_k[a] F_s"), &lhs, &rhs)?;
            }

            let lhs = perp_apply(&hk, &fam.g(&s)?)?;
            let rhs = fam.combine(&module.act(Generator::D(k), &s)?, true)?;
            report.record_sym(format!("k={k} s={s}: h_k^perp G_s"), &lhs, &rhs)?;

            let mut coeffs = StateVec::zero();
            if down >= rep.lowest_degree() {
                for t in rep.basis_of_degree(down) {
                    coeffs.add_term(t.clone(), &module.act(Generator::U(k), &t)?.coeff(&s));
                }
            }
            let lhs = perp_apply(&hk, &fam.f(&s)?)?;
            let rhs = fam.combine(&coeffs, false)?;
            report.record_sym(format!("k={k} s={s}: h_k^perp F_s"), &lhs, &rhs)?;
        }
    }
    Ok(report)
}

/// `D_b U_a v = Σ_{j=0}^{min(a,b)} h_j⟨a⟩ U_{a-j} D_{b-j} v` for `a, b ≤ ab_max`.
pub fn verify_du<R: Representation>(module: &HModule<R>, ab_max: u32, d_max: i64) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("du");
    let params = module.params();
    for s in module.basis_up_to(d_max) {
        let deg = module.rep().degree(&s);
        let v = StateVec::basis(s.clone());
        for a in 1..=ab_max {
            if !available(module, deg + module.shift(Generator::U(a))) {
                continue;
            }
            for b in 1..=ab_max {
                let lhs = module.apply_seq(&[Generator::U(a), Generator::D(b)], &v)?;
                let mut rhs = StateVec::zero();
                for j in 0..=a.min(b) {
                    let term = module.apply_seq(&[Generator::D(b - j), Generator::U(a - j)], &v)?;
                    rhs.add_scaled(&term, &params.h_bracket(j)?);
                }
                report.record(format!("a={a} b={b} v={s}"), &lhs, &rhs);
            }
        }
    }
    Ok(report)
}

/// `[B_k, B_{-l}] = k a_k δ_{kl}` and `[B_k, B_l] = [B_{-k}, B_{-l}] = 0` on
/// basis vectors of degree at most `d_max`.
pub fn verify_heisenberg<R: Representation>(module: &HModule<R>, k_max: u32, d_max: i64) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("heisenberg");
    let params = module.params();
    for s in module.basis_up_to(d_max) {
        let deg = module.rep().degree(&s);
        let v = StateVec::basis(s.clone());
        for k in 1..=k_max as i64 {
            for l in 1..=k_max as i64 {
                if available(module, deg + module.shift(Generator::B(-k.max(l)))) {
                    let lhs = module.commutator(Generator::B(k), Generator::B(-l), &v)?;
                    let rhs = if k == l {
                        v.scale(&(&params.a(k as u32)? * &Scalar::from_int(k)))
                    } else {
                        StateVec::zero()
                    };
                    report.record(format!("[B_{k},B_-{l}] v={s}"), &lhs, &rhs);
                }
                if k < l {
                    if available(module, deg + module.shift(Generator::B(-(k + l)))) {
                        let lhs = module.commutator(Generator::B(-k), Generator::B(-l), &v)?;
                        report.record(format!("[B_-{k},B_-{l}] v={s}"), &lhs, &StateVec::zero());
                    }
                    let lhs = module.commutator(Generator::B(k), Generator::B(l), &v)?;
                    report.record(format!("[B_{k},B_{l}] v={s}"), &lhs, &StateVec::zero());
                }
            }
        }
    }
    Ok(report)
}

/// The `U_k` pairwise commute and so do the `D_k`.
pub fn verify_commutation<R: Representation>(module: &HModule<R>, k_max: u32, d_max: i64) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("commutation");
    for s in module.basis_up_to(d_max) {
        let deg = module.rep().degree(&s);
        let v = StateVec::basis(s.clone());
        for a in 1..=k_max {
            for b in a + 1..=k_max {
                if available(module, deg + module.shift(Generator::U(a + b))) {
                    let lhs = module.commutator(Generator::U(a), Generator::U(b), &v)?;
                    report.record(format!("[U_{a},U_{b}] v={s}"), &lhs, &StateVec::zero());
                }
                let lhs = module.commutator(Generator::D(a), Generator::D(b), &v)?;
                report.record(format!("[D_{a},D_{b}] v={s}"), &lhs, &StateVec::zero());
            }
        }
    }
    Ok(report)
}

/// `Φ(B_l v_s) = B_l Φ(v_s)` with the Bosonic action on the ring.
pub fn verify_bf<R: Representation>(module: &HModule<R>, d_max: i64, l_set: &[i64]) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("BF");
    let mut fam = Families::new(module)?;
    for s in module.basis_up_to(d_max) {
        let deg = module.rep().degree(&s);
        for &l in l_set {
            if !available(module, deg + module.shift(Generator::B(l))) {
                continue;
            }
            let lhs = fam.combine(&module.act(Generator::B(l), &s)?, true)?;
            let rhs = act_on_lambda(module.params(), l, &fam.g(&s)?)?;
            report.record_sym(format!("l={l} s={s}"), &lhs, &rhs)?;
        }
    }
    Ok(report)
}

/// `∏_{j,k} Σ_i h_i⟨a⟩ (x_j y_k)^i`, truncated at total degree `d_max`.
pub fn cauchy_kernel(params: &HeisenbergParams, xs: &[Var], ys: &[Var], d_max: u32) -> Result<VarPoly> {
    let mut out = VarPoly::one();
    for x in xs {
        for y in ys {
            let xy = &VarPoly::var(*x) * &VarPoly::var(*y);
            let mut factor = VarPoly::zero();
            let mut power = VarPoly::one();
            for i in 0..=d_max / 2 {
                factor = &factor + &power.scale(&params.h_bracket(i)?);
                power = power.mul_truncated(&xy, d_max);
            }
            out = out.mul_truncated(&factor, d_max);
        }
    }
    Ok(out)
}

/// The skew Cauchy identity
/// `Σ_s F_{s/t}(x) G_{s/r}(y) = K(x, y) Σ_s F_{r/s}(x) G_{t/s}(y)`
/// in `x_count + y_count` variables, up to total degree `d_max`.
pub fn verify_cauchy<R: Representation>(
    module: &HModule<R>,
    x_count: usize,
    y_count: usize,
    d_max: u32,
    t: &R::Index,
    r: &R::Index,
) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("genCauchy");
    let rep = module.rep();
    let (xs, ys) = (Var::family('x', x_count), Var::family('y', y_count));
    let (dt, dr) = (rep.degree(t), rep.degree(r));
    let m = module.degree_step();

    let mut lhs = VarPoly::zero();
    let mut d = dt.max(dr);
    while (d - dt) / m + (d - dr) / m <= d_max as i64 && available(module, d) {
        for s in rep.basis_of_degree(d) {
            let f = module.compute_f(&s, t)?;
            if f.is_zero() {
                continue;
            }
            let g = module.compute_g(&s, r)?;
            lhs = &lhs + &evaluate_vars(&f, &xs)?.mul_truncated(&evaluate_vars(&g, &ys)?, d_max);
        }
        d += 1;
    }

    let mut tail = VarPoly::zero();
    for d in rep.lowest_degree()..=dt.min(dr) {
        if (dt - d) / m + (dr - d) / m > d_max as i64 {
            continue;
        }
        for s in rep.basis_of_degree(d) {
            let f = module.compute_f(r, &s)?;
            if f.is_zero() {
                continue;
            }
            let g = module.compute_g(t, &s)?;
            tail = &tail + &evaluate_vars(&f, &xs)?.mul_truncated(&evaluate_vars(&g, &ys)?, d_max);
        }
    }
    let rhs = cauchy_kernel(module.params(), &xs, &ys, d_max)?.mul_truncated(&tail, d_max);
    report.record(
        format!("t={t} r={r} with {x_count}+{y_count} variables, degree <= {d_max}"),
        &lhs.truncate(d_max),
        &rhs,
    );
    Ok(report)
}

/// Which conditions of the converse hold on a truncated operator family.
#[derive(Clone, Debug)]
pub struct ConverseReport {
    /// Whether the `G'_s` of each degree are linearly independent.
    pub independence: Vec<(i64, bool)>,
    pub commutation: VerifyReport,
    pub heisenberg: VerifyReport,
    pub du: VerifyReport,
    pub pieri: VerifyReport,
}

impl ConverseReport {
    pub fn independent(&self) -> bool {
        self.independence.iter().all(|(_, ok)| *ok)
    }

    /// The operators generate an action of `H[a]`.
    pub fn heisenberg_action(&self) -> bool {
        self.commutation.passed() && self.heisenberg.passed()
    }

    /// The `G'_s` satisfy the Pieri rules.
    pub fn pieri_holds(&self) -> bool {
        self.pieri.passed()
    }

    /// The Cauchy identities hold, checked in their operator form
    /// `D_b U_a = Σ_j h_j⟨a⟩ U_{a-j} D_{b-j}` on commuting families.
    pub fn cauchy_holds(&self) -> bool {
        self.commutation.passed() && self.du.passed()
    }

    /// The three conditions agree, as they must when the `G'_s` are independent.
    pub fn equivalent(&self) -> bool {
        let a = self.heisenberg_action();
        a == self.pieri_holds() && a == self.cauchy_holds()
    }

    pub fn reports(&self) -> [&VerifyReport; 4] {
        [&self.commutation, &self.heisenberg, &self.du, &self.pieri]
    }
}

/// Runs every converse condition on `bundle` with parameters `params`,
/// checking degrees up to `d_max`.
pub fn diagnose_converse(bundle: &MatrixBundle, params: &HeisenbergParams, d_max: i64) -> Result<ConverseReport> {
    let mut bundle = bundle.clone();
    bundle.params = params.clone();
    let k_max = bundle.k_max;
    let module = HModule::new(BundleRep::new(bundle)?);
    let rep = module.rep();
    let b = rep.highest().ok_or(crate::Error::NoHighestWeight)?;

    let mut independence = Vec::new();
    for d in rep.lowest_degree()..=d_max {
        let basis = rep.basis_of_degree(d);
        if basis.is_empty() {
            continue;
        }
        let gs: Vec<SymFunc> = basis.iter().map(|s| module.compute_g(s, &b)).collect::<Result<_>>()?;
        let mut support: Vec<Partition> = gs.iter().flat_map(|g| g.terms().map(|(p, _)| p.clone())).collect();
        support.sort();
        support.dedup();
        let rows = gs
            .iter()
            .map(|g| support.iter().map(|p| g.coeff(p)).collect())
            .collect();
        let rank = if support.is_empty() {
            0
        } else {
            Matrix::from_rows(rows)?.rank()
        };
        independence.push((d, rank == basis.len()));
    }

    let k = k_max.min(3);
    Ok(ConverseReport {
        independence,
        commutation: verify_commutation(&module, k, d_max)?,
        heisenberg: verify_heisenberg(&module, k, d_max)?,
        du: verify_du(&module, k, d_max)?,
        pieri: verify_pieri(&module, k, d_max)?,
    })
}
