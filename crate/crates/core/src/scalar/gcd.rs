//! Exact gcd in `ℤ[q, t]`.
//!
//! The first attempt is the heuristic gcd: evaluate one variable at a large
//! integer, take the gcd of the images one variable down, lift it back
//! `ξ`-adically and keep it only if it divides both inputs. When that keeps
//! failing the polynomials are viewed recursively as elements of `ℤ[q][t]`:
//! the gcd of the `t`-contents times the gcd of the primitive parts from a
//! primitive pseudo-remainder sequence.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;

/// Dense univariate polynomial in `q`, index = degree, no trailing zeros.
type Dense = Vec<BigInt>;
/// Polynomial in `t` whose coefficients are dense polynomials in `q`.
type Rec = Vec<Dense>;

fn trim(v: &mut Dense) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn trim_rec(v: &mut Rec) {
    while v.last().is_some_and(|c| c.is_empty()) {
        v.pop();
    }
}

fn dense_content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn dense_mul(a: &[BigInt], b: &[BigInt]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn dense_sub(a: &[BigInt], b: &[BigInt]) -> Dense {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i);
        out.push(match y {
            Some(y) => x - y,
            None => x,
        });
    }
    trim(&mut out);
    out
}

fn dense_scale_div(a: &[BigInt], c: &BigInt) -> Dense {
    a.iter().map(|x| x / c).collect()
}

/// Primitive part with positive leading coefficient.
fn dense_primitive(a: &[BigInt]) -> Dense {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = dense_content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    dense_scale_div(a, &c)
}

fn dense_prem(a: &[BigInt], b: &[BigInt]) -> Dense {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Dense = a.to_vec();
    while !r.is_empty() && r.len() > db {
        let shift = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, y) in b.iter().enumerate() {
            r[j + shift] -= &lr * y;
        }
        trim(&mut r);
    }
    r
}

/// Exact division in `ℤ[q]`; the divisor must divide.
fn dense_div_exact(a: &[BigInt], b: &[BigInt]) -> Dense {
    if a.is_empty() {
        return Vec::new();
    }
    if b.len() == 1 {
        return dense_scale_div(a, &b[0]);
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Dense = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    while !r.is_empty() && r.len() > db {
        let shift = r.len() - 1 - db;
        let m = r.last().unwrap() / lb;
        for (j, y) in b.iter().enumerate() {
            r[j + shift] -= &m * y;
        }
        quot[shift] = m;
        trim(&mut r);
    }
    debug_assert!(r.is_empty(), "inexact division in Z[q]");
    trim(&mut quot);
    quot
}

/// Gcd in `ℤ[q]` with positive leading coefficient.
fn dense_gcd(a: &[BigInt], b: &[BigInt]) -> Dense {
    if a.is_empty() {
        return dense_normalize(b);
    }
    if b.is_empty() {
        return dense_normalize(a);
    }
    let c = dense_content(a).gcd(&dense_content(b));
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let mut p = dense_primitive(a);
    let mut r = dense_primitive(b);
    if p.len() < r.len() {
        core::mem::swap(&mut p, &mut r);
    }
    while !r.is_empty() {
        if r.len() == 1 {
            p = vec![BigInt::one()];
            break;
        }
        let rem = dense_prem(&p, &r);
        p = r;
        r = dense_primitive(&rem);
    }
    let g = dense_primitive(&p);
    g.into_iter().map(|x| x * &c).collect()
}

fn dense_normalize(a: &[BigInt]) -> Dense {
    match a.last() {
        Some(l) if l.is_negative() => a.iter().map(|x| -x).collect(),
        _ => a.to_vec(),
    }
}

fn to_rec(p: &IntPoly) -> Rec {
    let mut rec: Rec = vec![Vec::new(); p.degree_t() as usize + 1];
    for ((dq, dt), c) in p.terms() {
        let row = &mut rec[*dt as usize];
        if row.len() <= *dq as usize {
            row.resize(*dq as usize + 1, BigInt::zero());
        }
        row[*dq as usize] = c.clone();
    }
    trim_rec(&mut rec);
    rec
}

fn from_rec(r: &Rec) -> IntPoly {
    IntPoly::from_terms(r.iter().enumerate().flat_map(|(dt, row)| {
        row.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(dq, c)| ((dq as u32, dt as u32), c.clone()))
    }))
}

fn rec_content(a: &Rec) -> Dense {
    let mut g: Dense = Vec::new();
    for c in a.iter().filter(|c| !c.is_empty()) {
        g = dense_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn rec_primitive(a: &Rec) -> Rec {
    let c = rec_content(a);
    if c.len() == 1 && c[0].is_one() {
        return a.clone();
    }
    a.iter().map(|x| dense_div_exact(x, &c)).collect()
}

fn rec_prem(a: &Rec, b: &Rec) -> Rec {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    while !r.is_empty() && r.len() > db {
        let shift = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for x in r.iter_mut() {
            *x = dense_mul(x, lb);
        }
        for (j, y) in b.iter().enumerate() {
            let sub = dense_mul(&lr, y);
            r[j + shift] = dense_sub(&r[j + shift], &sub);
        }
        trim_rec(&mut r);
    }
    r
}

/// Makes the lexicographically leading coefficient positive.
pub(crate) fn normalize_sign(p: IntPoly) -> IntPoly {
    match p.leading_coeff() {
        Some(c) if c.is_negative() => -p,
        _ => p,
    }
}

/// Variables are numbered `0 = q`, `1 = t`.
fn evaluate(p: &IntPoly, var: usize, x: &BigInt) -> IntPoly {
    let keep = |e: (u32, u32)| if var == 0 { e.1 } else { e.0 };
    let drop = |e: (u32, u32)| if var == 0 { e.0 } else { e.1 };
    let len = p.terms().iter().map(|(e, _)| keep(*e)).max().unwrap_or(0) as usize + 1;
    let top = p.terms().iter().map(|(e, _)| drop(*e)).max().unwrap_or(0) as usize;
    let mut powers: Vec<BigInt> = Vec::with_capacity(top + 1);
    powers.push(BigInt::one());
    for i in 0..top {
        let next = &powers[i] * x;
        powers.push(next);
    }
    let mut acc = vec![BigInt::zero(); len];
    for (e, c) in p.terms() {
        acc[keep(*e) as usize] += c * &powers[drop(*e) as usize];
    }
    IntPoly::from_dense(if var == 0 { len } else { 1 }, acc.into_iter())
}

fn max_norm(p: &IntPoly) -> BigInt {
    p.terms().iter().map(|(_, c)| c.abs()).max().unwrap_or_default()
}

/// Reads each coefficient of `image` in balanced base `x` and puts digit `i`
/// on `var^i`.
fn lift(image: &IntPoly, var: usize, x: &BigInt) -> IntPoly {
    let half = x / 2;
    let mut terms = Vec::new();
    for (e, c) in image.terms() {
        let mut c = c.clone();
        let mut i = 0u32;
        while !c.is_zero() {
            let mut r = c.mod_floor(x);
            if r > half {
                r -= x;
            }
            c = (c - &r) / x;
            if !r.is_zero() {
                let exp = if var == 0 { (i, e.1) } else { (e.0, i) };
                terms.push((exp, r));
            }
            i += 1;
        }
    }
    IntPoly::from_terms(terms)
}

const HEURISTIC_ATTEMPTS: usize = 6;

/// Heuristic gcd of `a` and `b` in the variables `0..vars`, content included.
fn heuristic(a: &IntPoly, b: &IntPoly, vars: usize) -> Option<IntPoly> {
    if a.is_zero() || b.is_zero() {
        return Some(normalize_sign(if a.is_zero() { b.clone() } else { a.clone() }));
    }
    if vars == 0 || a.is_constant() || b.is_constant() {
        return Some(IntPoly::constant(a.content().gcd(&b.content())));
    }
    let var = vars - 1;
    let used = |p: &IntPoly| p.terms().iter().any(|(e, _)| if var == 0 { e.0 > 0 } else { e.1 > 0 });
    if !used(a) && !used(b) {
        return heuristic(a, b, var);
    }
    let (ca, cb) = (a.content(), b.content());
    let c = ca.gcd(&cb);
    let pa = a.div_scalar_exact(&ca);
    let pb = b.div_scalar_exact(&cb);
    let mut x = BigInt::from(2) * max_norm(&pa).min(max_norm(&pb)) + 29;
    for _ in 0..HEURISTIC_ATTEMPTS {
        let image = heuristic(&evaluate(&pa, var, &x), &evaluate(&pb, var, &x), var);
        if let Some(image) = image.filter(|g| !g.is_zero()) {
            let g = lift(&image, var, &x);
            if !g.is_zero() {
                let g = g.div_scalar_exact(&g.content());
                if g.is_one() {
                    return Some(IntPoly::constant(c));
                }
                if pa.div_exact(&g).is_some() && pb.div_exact(&g).is_some() {
                    return Some(normalize_sign(g.scale(&c)));
                }
            }
        }
        x = x * 73794 / 27011;
    }
    None
}

/// Greatest common divisor in `ℤ[q, t]`, normalized to a positive leading
/// coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if let Some(g) = quick(a, b) {
        return g;
    }
    heuristic(a, b, 2).unwrap_or_else(|| prs_gcd(a, b))
}

fn quick(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    if a.is_zero() {
        return Some(normalize_sign(b.clone()));
    }
    if b.is_zero() {
        return Some(normalize_sign(a.clone()));
    }
    if a.is_constant() || b.is_constant() {
        return Some(IntPoly::constant(a.content().gcd(&b.content())));
    }
    if a == b {
        return Some(normalize_sign(a.clone()));
    }
    if a.terms().len() == 1 || b.terms().len() == 1 {
        let (ma, mb) = (a.min_exponents(), b.min_exponents());
        let c = a.content().gcd(&b.content());
        return Some(IntPoly::monomial(c, ma.0.min(mb.0), ma.1.min(mb.1)));
    }
    None
}

/// The pseudo-remainder route; always succeeds.
pub(crate) fn prs_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if let Some(g) = quick(a, b) {
        return g;
    }
    prs_gcd_inner(a, b)
}

fn prs_gcd_inner(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let ra = to_rec(a);
    let rb = to_rec(b);
    let ca = rec_content(&ra);
    let cb = rec_content(&rb);
    let content = dense_gcd(&ca, &cb);
    let mut p = if ca.len() == 1 && ca[0].is_one() {
        ra
    } else {
        ra.iter().map(|x| dense_div_exact(x, &ca)).collect()
    };
    let mut r = if cb.len() == 1 && cb[0].is_one() {
        rb
    } else {
        rb.iter().map(|x| dense_div_exact(x, &cb)).collect()
    };
    if p.len() < r.len() {
        core::mem::swap(&mut p, &mut r);
    }
    while !r.is_empty() {
        if r.len() == 1 {
            p = vec![vec![BigInt::one()]];
            break;
        }
        let rem = rec_prem(&p, &r);
        p = r;
        r = rec_primitive(&rem);
    }
    let prim = rec_primitive(&p);
    let g: Rec = prim.iter().map(|x| dense_mul(x, &content)).collect();
    normalize_sign(from_rec(&g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((u32, u32), i64)]) -> IntPoly {
        IntPoly::from_terms(terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    #[test]
    fn gcd_of_product_recovers_common_factor() {
        let f = p(&[((1, 1), 1), ((0, 0), -1)]); // qt - 1
        let g = p(&[((1, 0), 2), ((0, 2), 1), ((0, 0), 3)]); // 2q + t^2 + 3
        let h = p(&[((2, 0), 1), ((0, 1), -1)]); // q^2 - t
        let a = &f * &g;
        let b = &f * &h;
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn gcd_includes_integer_content() {
        let a = p(&[((1, 0), 6), ((0, 0), 6)]);
        let b = p(&[((1, 0), 4), ((0, 0), 4)]);
        assert_eq!(gcd(&a, &b), p(&[((1, 0), 2), ((0, 0), 2)]));
    }

    #[test]
    fn coprime_polynomials() {
        let a = p(&[((1, 0), 1), ((0, 0), -1)]);
        let b = p(&[((0, 1), 1), ((0, 0), -1)]);
        assert_eq!(gcd(&a, &b), IntPoly::one());
    }

    #[test]
    fn gcd_of_cyclotomic_style_factors() {
        // (1 - q^6) and (1 - q^4) share 1 - q^2.
        let a = p(&[((0, 0), 1), ((6, 0), -1)]);
        let b = p(&[((0, 0), 1), ((4, 0), -1)]);
        assert_eq!(gcd(&a, &b), p(&[((2, 0), 1), ((0, 0), -1)]));
    }

    #[test]
    fn both_routes_agree() {
        let f = p(&[((1, 1), 3), ((0, 0), -1), ((2, 0), 1)]);
        let g = p(&[((0, 3), 1), ((1, 0), -2)]);
        let h = p(&[((3, 1), 1), ((0, 0), 5)]);
        for (a, b) in [
            (&f * &g, &f * &h),
            (&(&f * &f) * &g, &f * &(&g * &h)),
            (g.clone(), h.clone()),
        ] {
            assert_eq!(gcd(&a, &b), prs_gcd(&a, &b));
        }
    }

    #[test]
    fn monomial_shortcut() {
        let a = p(&[((2, 1), 4)]);
        let b = p(&[((1, 3), 6), ((3, 0), 2)]);
        assert_eq!(gcd(&a, &b), p(&[((1, 0), 2)]));
    }
}
