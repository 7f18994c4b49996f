use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::heisenberg::{Generator, HeisenbergParams, Native, Representation, StateVec};
use crate::partition::{horizontal_strips, horizontal_strips_below, partitions_of, z_of, Cell, Partition, SkewShape};
use crate::scalar::{IntPoly, Scalar};
use crate::symfunc::{Basis, SymFunc};

/// `b_λ(s) = (1 − q^{a} t^{l+1})/(1 − q^{a+1} t^{l})` for `s ∈ λ` with arm `a`
/// and leg `l`, and `1` otherwise.
pub fn macdonald_b(lambda: &Partition, s: Cell) -> Scalar {
    let Ok((arm, leg)) = lambda.arm_leg(s) else {
        return Scalar::one();
    };
    let num = IntPoly::one() - IntPoly::monomial(1, arm, leg + 1);
    let den = IntPoly::one() - IntPoly::monomial(1, arm + 1, leg);
    Scalar::new(num, den).expect("denominator has a nonzero monomial")
}

/// `(φ_{λ/μ}, ψ_{λ/μ})` for a horizontal strip `λ/μ`.
///
/// `φ` multiplies `b_λ(s)/b_μ(s)` over the cells in columns meeting the strip;
/// `ψ` multiplies `b_μ(s)/b_λ(s)` over the cells in rows meeting the strip but
/// not in those columns.
pub fn macdonald_phi_psi(shape: &SkewShape) -> Result<(Scalar, Scalar)> {
    if !shape.is_horizontal_strip() {
        return Err(Error::NotHorizontalStrip(format!("{shape}")));
    }
    let (outer, inner) = (shape.outer(), shape.inner());
    let cols: BTreeSet<u32> = shape.columns();
    let rows: BTreeSet<u32> = shape.rows();
    let mut phi = Scalar::one();
    let mut psi = Scalar::one();
    for s in outer.cells() {
        if cols.contains(&s.col) {
            phi = &phi * &macdonald_b(outer, s).checked_div(&macdonald_b(inner, s))?;
        } else if rows.contains(&s.row) {
            psi = &psi * &macdonald_b(inner, s).checked_div(&macdonald_b(outer, s))?;
        }
    }
    Ok((phi, psi))
}

/// Partitions with `U_k λ = Σ φ_{μ/λ} μ` and `D_k λ = Σ ψ_{λ/μ} μ` over
/// horizontal strips of size `k`; here `a_k = (1 − t^k)/(1 − q^k)`, `F_λ` is
/// `Q_λ` and `G_λ` is `P_λ`.
#[derive(Clone, Debug)]
pub struct MacdonaldRep {
    params: HeisenbergParams,
}

impl Default for MacdonaldRep {
    fn default() -> Self {
        MacdonaldRep {
            params: HeisenbergParams::macdonald(),
        }
    }
}

impl MacdonaldRep {
    pub fn new() -> Self {
        MacdonaldRep::default()
    }

    /// The same operators paired with a different parameter family; used to
    /// probe what goes wrong with the wrong `a_k`.
    pub fn with_params(params: HeisenbergParams) -> Self {
        MacdonaldRep { params }
    }
}

impl Representation for MacdonaldRep {
    type Index = Partition;

    fn name(&self) -> String {
        "macdonald".into()
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
        Native::Ladder
    }

    fn act(&self, g: Generator, s: &Partition) -> Result<StateVec<Partition>> {
        let mut out = StateVec::zero();
        match g {
            Generator::U(k) => {
                for mu in horizontal_strips(s, k as usize) {
                    let (phi, _) = macdonald_phi_psi(&SkewShape::new(mu.clone(), s.clone())?)?;
                    out.add_term(mu, &phi);
                }
            }
            Generator::D(k) => {
                for mu in horizontal_strips_below(s, k as usize) {
                    let (_, psi) = macdonald_phi_psi(&SkewShape::new(s.clone(), mu.clone())?)?;
                    out.add_term(mu, &psi);
                }
            }
            Generator::B(_) => unreachable!("ladder representations are only asked for U and D"),
        }
        Ok(out)
    }

    fn parse_index(&self, text: &str) -> Result<Partition> {
        text.parse()
    }
}

/// `⟨f, g⟩_{q,t}` with `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ ∏_i (1 − q^{λ_i})/(1 − t^{λ_i})`.
pub fn qt_inner(f: &SymFunc, g: &SymFunc) -> Result<Scalar> {
    let (f, g) = (f.convert(Basis::P)?, g.convert(Basis::P)?);
    let mut acc = Scalar::zero();
    for (lambda, x) in f.terms() {
        let y = g.coeff(lambda);
        if y.is_zero() {
            continue;
        }
        let mut z = z_of(lambda);
        for &part in lambda.parts() {
            let num = IntPoly::one() - IntPoly::monomial(1, part, 0);
            let den = IntPoly::one() - IntPoly::monomial(1, 0, part);
            z = &z * &Scalar::new(num, den)?;
        }
        acc = &acc + &(&(x * &y) * &z);
    }
    Ok(acc)
}

/// Macdonald `P_λ` for every `λ ⊢ d`, in the `m` basis, by orthogonalizing the
/// `m_λ` from the smallest partition up under [`qt_inner`].
pub fn gram_schmidt_p(d: usize) -> Result<Vec<(Partition, SymFunc)>> {
    let mut done: Vec<(Partition, SymFunc, Scalar)> = Vec::new();
    for lambda in partitions_of(d).into_iter().rev() {
        let m = SymFunc::basis_element(Basis::M, lambda.clone());
        let mut p = m.clone();
        for (_, prev, norm) in &done {
            let c = qt_inner(&m, prev)?.checked_div(norm)?;
            p = p.checked_sub(&prev.scale(&c))?;
        }
        let norm = qt_inner(&p, &p)?;
        done.push((lambda, p, norm));
    }
    Ok(done.into_iter().rev().map(|(l, p, _)| (l, p)).collect())
}
