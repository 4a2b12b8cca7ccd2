//! Independent nested-loop implementations of the formulas under test, written
//! directly in Sweedler notation from structure constants, with no map composition.
#![allow(dead_code)]

use crossed_core::corpus::{GaugeTransformation, QuasiBialgebra, RightModuleAlgebra};
use crossed_core::{Algebra, CrossedData, Field, LinMap, Scalar, TwistPair};

/// Structure constant `c^x_{jk}` of `e_j e_k = Σ_x c^x_{jk} e_x`.
pub fn c(a: &Algebra, x: usize, j: usize, k: usize) -> Scalar {
    a.mult().get(x, j * a.dim() + k).clone()
}

fn add_to(out: &mut [Scalar], at: usize, value: Scalar) {
    out[at] = &out[at] + &value;
}

/// Nonzero `(j, s, coefficient)` with `θ(e_q) = Σ coefficient e_j ⊗ e_s`.
fn legs(map: &LinMap, q: usize, n: usize) -> Vec<(usize, usize, Scalar)> {
    (0..map.codomain_total())
        .filter(|&row| !map.get(row, q).is_zero())
        .map(|row| (row / n, row % n, map.get(row, q).clone()))
        .collect()
}

/// `R'(v⊗a) = v_{<-1>} a_R v_{<0>_{R_{-1}}} ⊗ v_{<0>_{R_0}}`.
pub fn r_prime(cd: &CrossedData, t: &TwistPair) -> LinMap {
    let (m, n) = cd.dims();
    let a = cd.a();
    let field = a.field();
    let mut cols = Vec::new();
    for q in 0..n {
        for i in 0..m {
            let mut out = vec![field.zero(); m * n];
            for (j, s, th) in legs(t.theta(), q, n) {
                for (k, u, r) in legs(cd.r(), s * m + i, n) {
                    for (l, w, g) in legs(t.gamma(), u, n) {
                        let coef = &(&th * &r) * &g;
                        for y in 0..m {
                            let cjk = c(a, y, j, k);
                            if cjk.is_zero() {
                                continue;
                            }
                            for x in 0..m {
                                let v = &(&coef * &cjk) * &c(a, x, y, l);
                                add_to(&mut out, x * n + w, v);
                            }
                        }
                    }
                }
            }
            cols.push(out);
        }
    }
    LinMap::from_images(field, &[n, m], &[m, n], &cols).unwrap()
}

/// `σ'(v, v') = v_{<-1>} (v'_{<-1>})_R σ¹ γ¹ ⊗ γ⁰` with `σ¹⊗σ² = σ((v_{<0>})_R, v'_{<0>})`
/// and `γ¹⊗γ⁰ = γ(σ²)`.
pub fn sigma_prime(cd: &CrossedData, t: &TwistPair) -> LinMap {
    let (m, n) = cd.dims();
    let a = cd.a();
    let field = a.field();
    let mut cols = Vec::new();
    for p in 0..n {
        for q in 0..n {
            let mut acc = vec![field.zero(); m * n];
            for (a1, s1, th1) in legs(t.theta(), p, n) {
                for (a2, s2, th2) in legs(t.theta(), q, n) {
                    // R(v_{<0>} ⊗ v'_{<-1>})
                    for (ar, vr, r) in legs(cd.r(), s1 * m + a2, n) {
                        for (as_, w, sg) in legs(cd.sigma(), vr * n + s2, n) {
                            for (ag, z, g) in legs(t.gamma(), w, n) {
                                let coef = &(&(&(&th1 * &th2) * &r) * &sg) * &g;
                                let word = [a1, ar, as_, ag];
                                for (x, e) in product_of(a, &word).into_iter().enumerate() {
                                    if !e.is_zero() {
                                        add_to(&mut acc, x * n + z, &coef * &e);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            cols.push(acc);
        }
    }
    LinMap::from_images(field, &[n, n], &[m, n], &cols).unwrap()
}

/// Coordinates of `e_{w_0} e_{w_1} ⋯` by repeated structure-constant contraction.
pub fn product_of(a: &Algebra, word: &[usize]) -> Vec<Scalar> {
    let m = a.dim();
    let field = a.field();
    let mut cur: Vec<Scalar> = (0..m)
        .map(|x| if x == word[0] { field.one() } else { field.zero() })
        .collect();
    for &next in &word[1..] {
        let mut out = vec![field.zero(); m];
        for (y, cy) in cur.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            for (x, slot) in out.iter_mut().enumerate() {
                *slot = &*slot + &(cy * &c(a, x, y, next));
            }
        }
        cur = out;
    }
    cur
}

/// `(a⊗v)(b⊗w) = a b_R σ¹ ⊗ σ²` with `b_R⊗v_R = R(v⊗b)`, `σ¹⊗σ² = σ(v_R, w)`,
/// as a map on `A⊗V⊗A⊗V`.
pub fn crossed_mult(cd: &CrossedData) -> LinMap {
    let (m, n) = cd.dims();
    let a = cd.a();
    let field = a.field();
    let mut cols = Vec::new();
    for ia in 0..m {
        for v in 0..n {
            for ib in 0..m {
                for w in 0..n {
                    let mut out = vec![field.zero(); m * n];
                    for (br, vr, r) in legs(cd.r(), v * m + ib, n) {
                        for (s1, s2, s) in legs(cd.sigma(), vr * n + w, n) {
                            let coef = &r * &s;
                            for (x, e) in product_of(a, &[ia, br, s1]).into_iter().enumerate() {
                                if !e.is_zero() {
                                    add_to(&mut out, x * n + s2, &coef * &e);
                                }
                            }
                        }
                    }
                    cols.push(out);
                }
            }
        }
    }
    LinMap::from_images(field, &[m * n, m * n], &[m * n], &cols).unwrap()
}

/// `b·h` on basis vectors, read from the action matrix.
fn act(b: &RightModuleAlgebra, p: usize, i: usize) -> Vec<Scalar> {
    let n = b.algebra().dim();
    let m = b.action().domain_total() / n;
    (0..n).map(|r| b.action().get(r, p * m + i).clone()).collect()
}

fn act_vec(b: &RightModuleAlgebra, v: &[Scalar], i: usize) -> Vec<Scalar> {
    let n = b.algebra().dim();
    let mut out = vec![b.algebra().field().zero(); n];
    for (p, vp) in v.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
        for (r, x) in act(b, p, i).into_iter().enumerate() {
            out[r] = &out[r] + &(vp * &x);
        }
    }
    out
}

fn mult_vec(a: &Algebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let m = a.dim();
    let mut out = vec![a.field().zero(); m];
    for (j, xj) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
        for (k, yk) in y.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            for (z, slot) in out.iter_mut().enumerate() {
                *slot = &*slot + &(&(xj * yk) * &c(a, z, j, k));
            }
        }
    }
    out
}

/// `(h#b)(h'#b') = h h'_1 x¹ # (b·h'_2 x²)(b'·x³)` with `Φ⁻¹ = x¹⊗x²⊗x³`.
pub fn smash_mult(q: &QuasiBialgebra, b: &RightModuleAlgebra) -> LinMap {
    let h = q.algebra();
    let bb = b.algebra();
    let (m, n) = (h.dim(), bb.dim());
    let field = h.field();
    let mut cols = Vec::new();
    for ih in 0..m {
        for pb in 0..n {
            for jh in 0..m {
                for qb in 0..n {
                    let mut out = vec![field.zero(); m * n];
                    for d in 0..m * m {
                        let dc = q.comult().get(d, jh).clone();
                        if dc.is_zero() {
                            continue;
                        }
                        let (h1, h2) = (d / m, d % m);
                        for (xi, xc) in q.associator_inverse().iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                            let (x1, x2, x3) = (xi / (m * m), (xi / m) % m, xi % m);
                            let left = product_of(h, &[ih, h1, x1]);
                            let moved_h = product_of(h, &[h2, x2]);
                            let mut bl = vec![field.zero(); n];
                            for (y, e) in moved_h.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                                for (r, z) in act(b, pb, y).into_iter().enumerate() {
                                    bl[r] = &bl[r] + &(e * &z);
                                }
                            }
                            let br = act(b, qb, x3);
                            let right = mult_vec(bb, &bl, &br);
                            let coef = &dc * xc;
                            for (x, lx) in left.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                                for (y, ry) in right.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                                    add_to(&mut out, x * n + y, &(&coef * lx) * ry);
                                }
                            }
                        }
                    }
                    cols.push(out);
                }
            }
        }
    }
    LinMap::from_images(field, &[m * n, m * n], &[m * n], &cols).unwrap()
}

/// `φ(h⊗b) = hF¹ ⊗ b·F²`.
pub fn gauge_phi(h: &Algebra, b: &RightModuleAlgebra, f: &GaugeTransformation) -> LinMap {
    let (m, n) = (h.dim(), b.algebra().dim());
    let field = h.field();
    let mut cols = Vec::new();
    for ih in 0..m {
        for pb in 0..n {
            let mut out = vec![field.zero(); m * n];
            for (ij, fc) in f.f().iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                let (f1, f2) = (ij / m, ij % m);
                let left = product_of(h, &[ih, f1]);
                let right = act_vec(b, &unit_vec(field, n, pb), f2);
                for (x, lx) in left.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                    for (y, ry) in right.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                        add_to(&mut out, x * n + y, &(fc * lx) * ry);
                    }
                }
            }
            cols.push(out);
        }
    }
    LinMap::from_images(field, &[m, n], &[m, n], &cols).unwrap()
}

pub fn unit_vec(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    (0..n)
        .map(|x| if x == i { field.one() } else { field.zero() })
        .collect()
}

/// Schoolbook product of two matrices, row-major.
pub fn matmul(f: &LinMap, g: &LinMap) -> Vec<Scalar> {
    let (rows, inner, cols) = (f.codomain_total(), f.domain_total(), g.domain_total());
    assert_eq!(inner, g.codomain_total());
    let mut out = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for col in 0..cols {
            let mut acc = f.field().zero();
            for k in 0..inner {
                acc = &acc + &(f.get(r, k) * g.get(k, col));
            }
            out.push(acc);
        }
    }
    out
}
