//! Example families: smash products of (quasi-)bialgebras with right module algebras,
//! Drinfeld twists by gauge transformations, the induced twist pairs, and the builtin
//! list of named instances.
//!
//! Elements of `H^{⊗k}` are flat coordinate vectors in the row-major basis.

use crate::algebra::{algebra_from_group, check_algebra, Algebra};
use crate::crossed::{check_brz_axioms, twisted_tensor_product, CrossedData, TwistingMapData};
use crate::error::{Error, Result};
use crate::report::{AxiomReport, Check, Law};
use crate::tensor::{basis_vector, kron_vectors, unflatten, Field, LinMap, Scalar};
use crate::twist::TwistPair;

/// Sparse multiplication and factorwise maps on tensor powers of one algebra.
struct Powers<'a> {
    h: &'a Algebra,
    table: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl<'a> Powers<'a> {
    fn new(h: &'a Algebra) -> Powers<'a> {
        let m = h.dim();
        let table = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        h.multiply(&h.basis(i), &h.basis(j))
                            .into_iter()
                            .enumerate()
                            .filter(|(_, s)| !s.is_zero())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Powers { h, table }
    }

    fn zero(&self, k: usize) -> Vec<Scalar> {
        vec![self.h.field().zero(); self.h.dim().pow(k as u32)]
    }

    fn unit(&self, k: usize) -> Vec<Scalar> {
        (1..k).fold(self.h.unit().to_vec(), |acc, _| kron_vectors(&acc, self.h.unit()))
    }

    fn dims(&self, k: usize) -> Vec<usize> {
        vec![self.h.dim(); k]
    }

    fn mult(&self, k: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let m = self.h.dim();
        let dims = self.dims(k);
        let mut out = self.zero(k);
        for (i, xi) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            let ii = unflatten(i, &dims).expect("index");
            for (j, yj) in y.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                let jj = unflatten(j, &dims).expect("index");
                let mut partial = vec![(0usize, xi * yj)];
                for t in 0..k {
                    partial = partial
                        .iter()
                        .flat_map(|(idx, c)| self.table[ii[t]][jj[t]].iter().map(move |(l, s)| (idx * m + l, c * s)))
                        .collect();
                }
                for (idx, c) in partial {
                    out[idx] = &out[idx] + &c;
                }
            }
        }
        out
    }

    fn product(&self, k: usize, factors: &[&[Scalar]]) -> Vec<Scalar> {
        factors.iter().fold(self.unit(k), |acc, x| self.mult(k, &acc, x))
    }

    /// Applies `f: H → H^{⊗r}` to tensor factor `pos` of `x ∈ H^{⊗k}`.
    fn apply_factor(&self, x: &[Scalar], k: usize, pos: usize, f: &LinMap) -> Vec<Scalar> {
        let m = self.h.dim();
        let dims = self.dims(k);
        let width = f.codomain_total();
        let suffix = m.pow((k - pos - 1) as u32);
        let mut out = vec![self.h.field().zero(); x.len() / m * width];
        for (i, xi) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            let ii = unflatten(i, &dims).expect("index");
            let prefix = ii[..pos].iter().fold(0, |acc, &d| acc * m + d);
            let rest = ii[pos + 1..].iter().fold(0, |acc, &d| acc * m + d);
            for (l, s) in f.column(ii[pos]).iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                let idx = (prefix * width + l) * suffix + rest;
                out[idx] = &out[idx] + &(xi * s);
            }
        }
        out
    }
}

/// A quasi-bialgebra `(H, Δ, ε, Φ)` together with `Φ⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiBialgebra {
    h: Algebra,
    comult: LinMap,
    counit: LinMap,
    associator: Vec<Scalar>,
    associator_inverse: Vec<Scalar>,
}

impl QuasiBialgebra {
    pub fn new(
        h: Algebra,
        comult: LinMap,
        counit: LinMap,
        associator: Vec<Scalar>,
        associator_inverse: Vec<Scalar>,
    ) -> Result<QuasiBialgebra> {
        let m = h.dim();
        if comult.domain_total() != m || comult.codomain_total() != m * m {
            return Err(Error::Shape(format!("Δ must map H (dim {m}) to H⊗H")));
        }
        if counit.domain_total() != m || counit.codomain_total() != 1 {
            return Err(Error::Shape(format!("ε must map H (dim {m}) to k")));
        }
        if associator.len() != m * m * m || associator_inverse.len() != m * m * m {
            return Err(Error::Shape(format!(
                "associator must lie in H⊗H⊗H (dim {})",
                m * m * m
            )));
        }
        Ok(QuasiBialgebra {
            comult: comult.reshape(&[m], &[m, m])?,
            counit: counit.reshape(&[m], &[1])?,
            h,
            associator,
            associator_inverse,
        })
    }

    /// Group algebra with `Δ(g) = g⊗g`, `ε(g) = 1`, trivial associator.
    pub fn from_group(algebra: Algebra) -> Result<QuasiBialgebra> {
        let f = algebra.field();
        let m = algebra.dim();
        let comult = LinMap::from_fn(f, &[m], &[m, m], |r, c| if r == c * m + c { f.one() } else { f.zero() });
        let counit = LinMap::from_fn(f, &[m], &[1], |_, _| f.one());
        let powers = Powers::new(&algebra);
        let phi = powers.unit(3);
        QuasiBialgebra::new(algebra.clone(), comult, counit, phi.clone(), phi)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.h
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    pub fn associator(&self) -> &[Scalar] {
        &self.associator
    }

    pub fn associator_inverse(&self) -> &[Scalar] {
        &self.associator_inverse
    }

    pub fn field(&self) -> Field {
        self.h.field()
    }

    fn delta(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.comult.apply(x).expect("element of H")
    }

    fn epsilon(&self, x: &[Scalar]) -> Scalar {
        self.counit.apply(x).expect("element of H").remove(0)
    }
}

/// The laws the smash-product construction relies on: `Δ` and `ε` are unital algebra
/// maps, the counit laws, `ΦΦ⁻¹ = Φ⁻¹Φ = 1`, quasi-coassociativity and counitality of
/// `Φ`. The pentagon is reported by [`check_pentagon`].
pub fn check_quasi_bialgebra(q: &QuasiBialgebra) -> AxiomReport {
    let h = &q.h;
    let m = h.dim();
    let p = Powers::new(h);
    let pairs = || (0..m).flat_map(move |i| (0..m).map(move |j| (i, j)));
    let mut report = AxiomReport::new();

    report.push(
        Check::slices(
            Law::ComultMult,
            "Δ(xy) = Δ(x)Δ(y)",
            pairs().map(|(i, j)| {
                let lhs = q.delta(&h.multiply(&h.basis(i), &h.basis(j)));
                let rhs = p.mult(2, &q.delta(&h.basis(i)), &q.delta(&h.basis(j)));
                (vec![i, j], lhs, rhs)
            }),
        )
        .and(Check::slices(
            Law::ComultMult,
            "Δ(1) = 1⊗1",
            [(vec![0], q.delta(h.unit()), p.unit(2))],
        )),
    );

    report.push(
        Check::slices(
            Law::CounitMult,
            "ε(xy) = ε(x)ε(y)",
            pairs().map(|(i, j)| {
                let lhs = q.epsilon(&h.multiply(&h.basis(i), &h.basis(j)));
                let rhs = &q.epsilon(&h.basis(i)) * &q.epsilon(&h.basis(j));
                (vec![i, j], vec![lhs], vec![rhs])
            }),
        )
        .and(Check::slices(
            Law::CounitMult,
            "ε(1) = 1",
            [(vec![0], vec![q.epsilon(h.unit())], vec![h.field().one()])],
        )),
    );

    report.push(Check::slices(
        Law::CounitLaws,
        "(ε⊗id)Δ = id = (id⊗ε)Δ",
        (0..m).map(|i| {
            let d = q.delta(&h.basis(i));
            let left = p.apply_factor(&d, 2, 0, &q.counit);
            let right = p.apply_factor(&d, 2, 1, &q.counit);
            (vec![i], [left, right].concat(), [h.basis(i), h.basis(i)].concat())
        }),
    ));

    let (phi, phi_inv) = (&q.associator, &q.associator_inverse);
    report.push(Check::slices(
        Law::AssociatorInverse,
        "ΦΦ⁻¹ = Φ⁻¹Φ = 1⊗1⊗1",
        [(
            vec![0],
            [p.mult(3, phi, phi_inv), p.mult(3, phi_inv, phi)].concat(),
            [p.unit(3), p.unit(3)].concat(),
        )],
    ));

    report.push(Check::slices(
        Law::QuasiCoassoc,
        "Φ·(Δ⊗id)Δ(h) = (id⊗Δ)Δ(h)·Φ",
        (0..m).map(|i| {
            let d = q.delta(&h.basis(i));
            let left_assoc = p.apply_factor(&d, 2, 0, &q.comult);
            let right_assoc = p.apply_factor(&d, 2, 1, &q.comult);
            (vec![i], p.mult(3, phi, &left_assoc), p.mult(3, &right_assoc, phi))
        }),
    ));

    report.push(Check::slices(
        Law::AssociatorCounital,
        "ε applied to any leg of Φ gives 1⊗1",
        (0..3).map(|pos| (vec![pos], p.apply_factor(phi, 3, pos, &q.counit), p.unit(2))),
    ));
    report
}

/// `(1⊗Φ)(id⊗Δ⊗id)(Φ)(Φ⊗1) = (id⊗id⊗Δ)(Φ)(Δ⊗id⊗id)(Φ)`.
pub fn check_pentagon(q: &QuasiBialgebra) -> AxiomReport {
    let p = Powers::new(&q.h);
    let phi = &q.associator;
    let one = q.h.unit();
    let lhs = p.product(
        4,
        &[
            &kron_vectors(one, phi),
            &p.apply_factor(phi, 3, 1, &q.comult),
            &kron_vectors(phi, one),
        ],
    );
    let rhs = p.product(
        4,
        &[
            &p.apply_factor(phi, 3, 2, &q.comult),
            &p.apply_factor(phi, 3, 0, &q.comult),
        ],
    );
    [Check::slices(
        Law::Pentagon,
        "pentagon identity for Φ",
        [(vec![0], lhs, rhs)],
    )]
    .into_iter()
    .collect()
}

/// An invertible `F ∈ H⊗H` with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeTransformation {
    f: Vec<Scalar>,
    f_inverse: Vec<Scalar>,
}

impl GaugeTransformation {
    pub fn new(f: Vec<Scalar>, f_inverse: Vec<Scalar>) -> Result<GaugeTransformation> {
        if f.len() != f_inverse.len() {
            return Err(Error::Shape("F and F⁻¹ must have the same length".into()));
        }
        let m = (f.len() as f64).sqrt().round() as usize;
        if m == 0 || m * m != f.len() {
            return Err(Error::Shape(format!(
                "gauge element of length {} is not in H⊗H",
                f.len()
            )));
        }
        Ok(GaugeTransformation { f, f_inverse })
    }

    /// `F = 1⊗1`.
    pub fn trivial(h: &Algebra) -> GaugeTransformation {
        let one = kron_vectors(h.unit(), h.unit());
        GaugeTransformation::new(one.clone(), one).expect("square length")
    }

    pub fn f(&self) -> &[Scalar] {
        &self.f
    }

    pub fn f_inverse(&self) -> &[Scalar] {
        &self.f_inverse
    }

    /// `(F⁻¹, F)`, a gauge transformation of the Drinfeld twist by `self`.
    pub fn inverse(&self) -> GaugeTransformation {
        GaugeTransformation {
            f: self.f_inverse.clone(),
            f_inverse: self.f.clone(),
        }
    }

    /// The product gauge `self · first`: twisting by `first` and then by `self` equals
    /// twisting once by the product.
    pub fn after(&self, first: &GaugeTransformation, h: &Algebra) -> GaugeTransformation {
        let p = Powers::new(h);
        GaugeTransformation {
            f: p.mult(2, &self.f, &first.f),
            f_inverse: p.mult(2, &first.f_inverse, &self.f_inverse),
        }
    }

    fn dim(&self) -> usize {
        (self.f.len() as f64).sqrt().round() as usize
    }
}

pub fn check_gauge(q: &QuasiBialgebra, f: &GaugeTransformation) -> AxiomReport {
    let p = Powers::new(&q.h);
    let mut report = AxiomReport::new();
    if f.dim() != q.h.dim() {
        report.push(Check::fail(
            Law::GaugeInverse,
            vec![],
            1,
            "gauge element does not lie in H⊗H",
        ));
        return report;
    }
    report.push(Check::slices(
        Law::GaugeInverse,
        "FF⁻¹ = F⁻¹F = 1⊗1",
        [(
            vec![0],
            [p.mult(2, &f.f, &f.f_inverse), p.mult(2, &f.f_inverse, &f.f)].concat(),
            [p.unit(2), p.unit(2)].concat(),
        )],
    ));
    report.push(Check::slices(
        Law::GaugeCounital,
        "(ε⊗id)(F) = 1 = (id⊗ε)(F)",
        (0..2).map(|pos| (vec![pos], p.apply_factor(&f.f, 2, pos, &q.counit), q.h.unit().to_vec())),
    ));
    report
}

/// An algebra in right `H`-modules: structure constants for `B` (not necessarily
/// associative) and the action `B ⊗ H → B`, `b ⊗ h ↦ b·h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModuleAlgebra {
    b: Algebra,
    action: LinMap,
}

impl RightModuleAlgebra {
    pub fn new(b: Algebra, action: LinMap) -> Result<RightModuleAlgebra> {
        let n = b.dim();
        if action.codomain_total() != n || !action.domain_total().is_multiple_of(n) || action.domain_total() == 0 {
            return Err(Error::Shape(format!("action must map B⊗H to B (dim {n})")));
        }
        let m = action.domain_total() / n;
        Ok(RightModuleAlgebra {
            action: action.reshape(&[n, m], &[n])?,
            b,
        })
    }

    /// Action of a group algebra through one `B → B` matrix per group element.
    pub fn from_group_action(b: Algebra, matrices: &[LinMap]) -> Result<RightModuleAlgebra> {
        let (n, m) = (b.dim(), matrices.len());
        if matrices
            .iter()
            .any(|g| g.domain_total() != n || g.codomain_total() != n)
        {
            return Err(Error::Shape(format!("group element acts by an {n}x{n} matrix")));
        }
        let f = b.field();
        let action = LinMap::from_fn(f, &[n, m], &[n], |r, c| matrices[c % m].get(r, c / m).clone());
        RightModuleAlgebra::new(b, action)
    }

    /// Trivial action `b·h = ε(h)b`.
    pub fn trivial(b: Algebra, q: &QuasiBialgebra) -> Result<RightModuleAlgebra> {
        let (n, m) = (b.dim(), q.h.dim());
        let f = b.field();
        let action = LinMap::from_fn(f, &[n, m], &[n], |r, c| {
            if c / m == r {
                q.counit.get(0, c % m).clone()
            } else {
                f.zero()
            }
        });
        RightModuleAlgebra::new(b, action)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.b
    }

    pub fn action(&self) -> &LinMap {
        &self.action
    }

    fn h_dim(&self) -> usize {
        self.action.domain_total() / self.b.dim()
    }

    pub fn act(&self, b: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
        self.action.apply(&kron_vectors(b, h)).expect("element lengths")
    }

    /// Right action of `h` as a map `B → B`.
    pub fn acting(&self, h: &[Scalar]) -> LinMap {
        let n = self.b.dim();
        let images: Vec<_> = (0..n).map(|p| self.act(&self.b.basis(p), h)).collect();
        LinMap::from_images(self.b.field(), &[n], &[n], &images).expect("square")
    }

    /// Right action of `x ∈ H^{⊗k}` on `B^{⊗k}`, factor by factor.
    pub fn acting_tensor(&self, x: &[Scalar], k: usize) -> LinMap {
        let (n, m) = (self.b.dim(), self.h_dim());
        let f = self.b.field();
        let basis: Vec<LinMap> = (0..m).map(|i| self.acting(&basis_vector(f, m, i))).collect();
        let mut out = LinMap::zero(f, &vec![n; k], &vec![n; k]);
        for (i, xi) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            let ii = unflatten(i, &vec![m; k]).expect("index");
            let factors: Vec<&LinMap> = ii.iter().map(|&t| &basis[t]).collect();
            out = out.add(&LinMap::tensor_all(&factors).scale(xi)).expect("same shape");
        }
        out
    }
}

/// Unit laws of `B`, unitality and associativity of the action, `H`-linearity of the
/// product, and associativity of `B` up to the associator: `(bb')b'' = (b·x¹)((b'·x²)(b''·x³))`.
pub fn check_module_algebra(q: &QuasiBialgebra, b: &RightModuleAlgebra) -> AxiomReport {
    let mut report = AxiomReport::new();
    let (h, alg) = (&q.h, &b.b);
    let (m, n) = (h.dim(), alg.dim());
    if b.h_dim() != m {
        report.push(Check::fail(Law::ActionUnital, vec![], 1, "action is not by this H"));
        return report;
    }
    for check in check_algebra(alg).checks {
        if check.law != Law::Assoc {
            report.push(check);
        }
    }
    report.push(
        Check::slices(
            Law::ActionUnital,
            "b·1 = b",
            (0..n).map(|p| (vec![p], b.act(&alg.basis(p), h.unit()), alg.basis(p))),
        )
        .and(Check::slices(
            Law::ActionUnital,
            "1·h = ε(h)1",
            (0..m).map(|i| {
                let e = q.epsilon(&h.basis(i));
                (
                    vec![i],
                    b.act(alg.unit(), &h.basis(i)),
                    alg.unit().iter().map(|u| u * &e).collect(),
                )
            }),
        )),
    );
    let triples = |a: usize, c: usize, d: usize| {
        (0..a).flat_map(move |x| (0..c).flat_map(move |y| (0..d).map(move |z| (x, y, z))))
    };
    report.push(Check::slices(
        Law::ActionModule,
        "(b·h)·h' = b·(hh')",
        triples(n, m, m).map(|(p, i, j)| {
            let lhs = b.act(&b.act(&alg.basis(p), &h.basis(i)), &h.basis(j));
            let rhs = b.act(&alg.basis(p), &h.multiply(&h.basis(i), &h.basis(j)));
            (vec![p, i, j], lhs, rhs)
        }),
    ));
    report.push(Check::slices(
        Law::ActionMult,
        "(bb')·h = (b·h₁)(b'·h₂)",
        triples(n, n, m).map(|(p, r, i)| {
            let lhs = b.act(&alg.multiply(&alg.basis(p), &alg.basis(r)), &h.basis(i));
            let moved = b
                .acting_tensor(&q.delta(&h.basis(i)), 2)
                .apply(&kron_vectors(&alg.basis(p), &alg.basis(r)));
            let rhs = alg.mult().apply(&moved.expect("shape")).expect("shape");
            (vec![p, r, i], lhs, rhs)
        }),
    ));
    let id_b = alg.identity_map();
    let lhs = LinMap::chain(&[alg.mult(), &alg.mult().tensor(&id_b)]);
    let rhs = LinMap::chain(&[
        alg.mult(),
        &id_b.tensor(alg.mult()),
        &b.acting_tensor(&q.associator_inverse, 3),
    ]);
    report.push(Check::maps(
        Law::ModuleAssoc,
        "(bb')b'' = (b·x¹)((b'·x²)(b''·x³))",
        &lhs,
        &rhs,
    ));
    report
}

fn require(report: AxiomReport) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::precondition(report))
    }
}

fn ensure(report: AxiomReport) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::theorem_violation(report))
    }
}

/// Crossed-product data of the smash product `H # B`:
/// `R(b⊗h) = h₁ ⊗ b·h₂` and `σ(b, b') = x¹ ⊗ (b·x²)(b'·x³)`.
pub fn smash_product_data(q: &QuasiBialgebra, b: &RightModuleAlgebra) -> Result<CrossedData> {
    require(check_quasi_bialgebra(q))?;
    require(check_module_algebra(q, b))?;
    let (h, alg) = (&q.h, &b.b);
    let (m, n) = (h.dim(), alg.dim());
    let f = h.field();
    let p = Powers::new(h);

    let mut r_images = Vec::with_capacity(n * m);
    for bp in 0..n {
        for i in 0..m {
            let mut image = vec![f.zero(); m * n];
            for (st, c) in q.delta(&h.basis(i)).iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                let (s, t) = (st / m, st % m);
                let moved = b.act(&alg.basis(bp), &h.basis(t));
                accumulate(&mut image, &kron_vectors(&h.basis(s), &moved), c);
            }
            r_images.push(image);
        }
    }
    let r = LinMap::from_images(f, &[n, m], &[m, n], &r_images)?;

    let mut sigma_images = Vec::with_capacity(n * n);
    let dims3 = p.dims(3);
    for bp in 0..n {
        for bq in 0..n {
            let mut image = vec![f.zero(); m * n];
            for (idx, c) in q.associator_inverse.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                let ijk = unflatten(idx, &dims3)?;
                let left = b.act(&alg.basis(bp), &h.basis(ijk[1]));
                let right = b.act(&alg.basis(bq), &h.basis(ijk[2]));
                accumulate(
                    &mut image,
                    &kron_vectors(&h.basis(ijk[0]), &alg.multiply(&left, &right)),
                    c,
                );
            }
            sigma_images.push(image);
        }
    }
    let sigma = LinMap::from_images(f, &[n, n], &[m, n], &sigma_images)?;
    let data = CrossedData::new(h.clone(), alg.underlying_space(), r, sigma)?;
    ensure(check_brz_axioms(&data))?;
    Ok(data)
}

fn accumulate(acc: &mut [Scalar], v: &[Scalar], c: &Scalar) {
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(x * c);
        }
    }
}

/// The Drinfeld twist `H_F`: same algebra and counit, `Δ_F(h) = FΔ(h)F⁻¹` and
/// `Φ_F = (1⊗F)(id⊗Δ)(F)Φ(Δ⊗id)(F⁻¹)(F⁻¹⊗1)`.
pub fn drinfeld_twist(q: &QuasiBialgebra, gauge: &GaugeTransformation) -> Result<QuasiBialgebra> {
    require(check_quasi_bialgebra(q))?;
    require(check_gauge(q, gauge))?;
    let h = &q.h;
    let m = h.dim();
    let p = Powers::new(h);
    let (f, g) = (&gauge.f, &gauge.f_inverse);
    let images: Vec<_> = (0..m).map(|i| p.product(2, &[f, &q.delta(&h.basis(i)), g])).collect();
    let comult = LinMap::from_images(h.field(), &[m], &[m, m], &images)?;
    let one = h.unit();
    let associator = p.product(
        3,
        &[
            &kron_vectors(one, f),
            &p.apply_factor(f, 2, 1, &q.comult),
            &q.associator,
            &p.apply_factor(g, 2, 0, &q.comult),
            &kron_vectors(g, one),
        ],
    );
    let associator_inverse = p.product(
        3,
        &[
            &kron_vectors(f, one),
            &p.apply_factor(f, 2, 0, &q.comult),
            &q.associator_inverse,
            &p.apply_factor(g, 2, 1, &q.comult),
            &kron_vectors(one, g),
        ],
    );
    let twisted = QuasiBialgebra::new(h.clone(), comult, q.counit.clone(), associator, associator_inverse)?;
    ensure(check_quasi_bialgebra(&twisted))?;
    Ok(twisted)
}

/// `_F B`: product `b ∗ b' = (b·F¹)(b'·F²)`, same unit and action; a module algebra over `H_F`.
pub fn module_algebra_twist(
    q: &QuasiBialgebra,
    b: &RightModuleAlgebra,
    gauge: &GaugeTransformation,
) -> Result<RightModuleAlgebra> {
    require(check_module_algebra(q, b))?;
    let star = LinMap::chain(&[b.b.mult(), &b.acting_tensor(&gauge.f, 2)]);
    let twisted = RightModuleAlgebra::new(b.b.with_mult(b.b.label(), star)?, b.action.clone())?;
    let q_f = drinfeld_twist(q, gauge)?;
    ensure(check_module_algebra(&q_f, &twisted))?;
    Ok(twisted)
}

/// `θ(b) = F¹ ⊗ b·F²`, `γ(b) = G¹ ⊗ b·G²` where `F⁻¹ = G¹ ⊗ G²`.
pub fn gauge_twist_pair(b: &RightModuleAlgebra, gauge: &GaugeTransformation) -> Result<TwistPair> {
    let (n, m) = (b.b.dim(), b.h_dim());
    if gauge.dim() != m {
        return Err(Error::Shape(format!(
            "gauge element lies in H⊗H for dim H = {}, action needs {m}",
            gauge.dim()
        )));
    }
    let f = b.b.field();
    let leg = |element: &[Scalar]| -> Result<LinMap> {
        let images: Vec<_> = (0..n)
            .map(|bp| {
                let mut image = vec![f.zero(); m * n];
                for (ij, c) in element.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                    let (i, j) = (ij / m, ij % m);
                    let moved = b.act(&b.b.basis(bp), &basis_vector(f, m, j));
                    accumulate(&mut image, &kron_vectors(&basis_vector(f, m, i), &moved), c);
                }
                image
            })
            .collect();
        LinMap::from_images(f, &[n], &[m, n], &images)
    };
    TwistPair::new(leg(&gauge.f)?, leg(&gauge.f_inverse)?)
}

// ---------------------------------------------------------------------------
// Group-theoretic building blocks

pub fn cyclic_table(order: usize) -> Vec<Vec<usize>> {
    (0..order)
        .map(|i| (0..order).map(|j| (i + j) % order).collect())
        .collect()
}

/// `(Z/2)^rank` with elements indexed by bit patterns.
pub fn elementary_abelian_table(rank: u32) -> Vec<Vec<usize>> {
    let n = 1usize << rank;
    (0..n).map(|i| (0..n).map(|j| i ^ j).collect()).collect()
}

/// S3 as permutations of `{0,1,2}` in the order id, (01), (12), (02), (012), (021).
pub fn symmetric3_table() -> Vec<Vec<usize>> {
    let perms = s3_elements();
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
    perms
        .iter()
        .map(|p| perms.iter().map(|q| index([p[q[0]], p[q[1]], p[q[2]]])).collect())
        .collect()
}

fn s3_elements() -> [[usize; 3]; 6] {
    [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]]
}

fn s3_sign(index: usize) -> i64 {
    if (1..=3).contains(&index) {
        -1
    } else {
        1
    }
}

/// Diagonal action: group element `i` multiplies basis vector `p` by `signs[i][p]`.
pub fn diagonal_action(b: Algebra, signs: &[Vec<i64>]) -> Result<RightModuleAlgebra> {
    let f = b.field();
    let n = b.dim();
    let matrices: Vec<LinMap> = signs
        .iter()
        .map(|row| LinMap::from_fn(f, &[n], &[n], |r, c| if r == c { f.int(row[r]) } else { f.zero() }))
        .collect();
    RightModuleAlgebra::from_group_action(b, &matrices)
}

/// `F = ½(e⊗e + e⊗g + g⊗e − g⊗g)` for an element `g` of order 2 in a group algebra;
/// `F⁻¹ = F`. Needs characteristic ≠ 2.
pub fn order_two_gauge(h: &Algebra, g: usize) -> Result<GaugeTransformation> {
    let field = h.field();
    let half = field
        .ratio(1, 2)
        .map_err(|_| Error::Domain("gauge element ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) is undefined in characteristic 2".into()))?;
    let (e, g) = (h.unit().to_vec(), h.basis(g));
    let mut f = vec![field.zero(); h.dim() * h.dim()];
    accumulate(&mut f, &kron_vectors(&e, &e), &half);
    accumulate(&mut f, &kron_vectors(&e, &g), &half);
    accumulate(&mut f, &kron_vectors(&g, &e), &half);
    accumulate(&mut f, &kron_vectors(&g, &g), &-&half);
    GaugeTransformation::new(f.clone(), f)
}

/// Primitive idempotents `p_s = 2^{-r} Σ_g (-1)^{s·g} g` of the group algebra of `(Z/2)^r`.
pub fn character_idempotents(h: &Algebra, rank: u32) -> Result<Vec<Vec<Scalar>>> {
    let n = 1usize << rank;
    if h.dim() != n {
        return Err(Error::Shape(format!("group algebra of (Z/2)^{rank} has dimension {n}")));
    }
    let scale = h
        .field()
        .ratio(1, n as i64)
        .map_err(|_| Error::Domain("character idempotents need 1/2, undefined in characteristic 2".into()))?;
    Ok((0..n)
        .map(|s| {
            (0..n)
                .map(|g| {
                    if (s & g).count_ones() % 2 == 0 {
                        scale.clone()
                    } else {
                        -&scale
                    }
                })
                .collect()
        })
        .collect())
}

/// Gauge element `Σ f(s, t) p_s ⊗ p_t` diagonal in the character idempotents of `(Z/2)^r`,
/// with inverse `Σ f(s, t)⁻¹ p_s ⊗ p_t`. Counital iff `f(0, t) = f(s, 0) = 1`.
pub fn character_gauge(h: &Algebra, rank: u32, values: &[Vec<i64>]) -> Result<GaugeTransformation> {
    let idempotents = character_idempotents(h, rank)?;
    let field = h.field();
    let n = idempotents.len();
    let mut f = vec![field.zero(); n * n];
    let mut f_inverse = vec![field.zero(); n * n];
    for s in 0..n {
        for t in 0..n {
            let value = field.int(values[s][t]);
            let inv = value
                .inv()
                .ok_or_else(|| Error::Domain(format!("gauge value f({s},{t}) vanishes in {field}")))?;
            let term = kron_vectors(&idempotents[s], &idempotents[t]);
            accumulate(&mut f, &term, &value);
            accumulate(&mut f_inverse, &term, &inv);
        }
    }
    GaugeTransformation::new(f, f_inverse)
}

/// Non-cocycle values on `(Z/2)^2`, giving a nontrivial associator after twisting.
pub const KLEIN_GAUGE_VALUES: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, 2, 1, -1], [1, 1, -1, 2], [1, 2, 1, 1]];

// ---------------------------------------------------------------------------
// Builtin corpus

pub mod tags {
    pub const CROSSED_PRODUCT: &str = "crossed_product";
    pub const TWISTED_TENSOR_PRODUCT: &str = "twisted_tensor_product";
    pub const SMASH_PRODUCT: &str = "smash_product";
    pub const TWIST: &str = "invariance_under_twisting";
    pub const TTP_TWIST: &str = "ttp_invariance_under_twisting";
    pub const GAUGE: &str = "quasi_hopf_gauge_twist";
    pub const NONTRIVIAL_ASSOCIATOR: &str = "nontrivial_associator";
}

/// Quasi-bialgebra, module algebra and gauge behind a smash-product instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeData {
    pub quasi: QuasiBialgebra,
    pub module: RightModuleAlgebra,
    pub gauge: GaugeTransformation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusInstance {
    pub name: String,
    pub tags: Vec<String>,
    pub crossed: CrossedData,
    pub pair: TwistPair,
    /// Present for twisted tensor products, with the second product on `B`.
    pub twisting_map: Option<TwistingMapData>,
    pub star: Option<LinMap>,
    pub gauge: Option<GaugeData>,
}

impl CorpusInstance {
    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }
}

pub const CORPUS_NAMES: [&str; 6] = [
    "flip_c2_c2",
    "smash_c2_sign",
    "gauge_c2",
    "ttp_s3_sign",
    "associator_klein_c2",
    "associator_klein_klein",
];

/// Builtin instances over the rationals.
pub fn builtin_corpus() -> Result<Vec<CorpusInstance>> {
    builtin_corpus_over(Field::Rationals)
}

/// Builtin instances over `field`; fails in characteristic 2, where the gauge
/// elements are undefined.
pub fn builtin_corpus_over(field: Field) -> Result<Vec<CorpusInstance>> {
    CORPUS_NAMES.iter().map(|name| corpus_instance(field, name)).collect()
}

/// One builtin instance by 1-based position or by name.
pub fn corpus_instance(field: Field, key: &str) -> Result<CorpusInstance> {
    let name = match key.parse::<usize>() {
        Ok(i) if (1..=CORPUS_NAMES.len()).contains(&i) => CORPUS_NAMES[i - 1],
        Ok(i) => {
            return Err(Error::Domain(format!(
                "corpus has {} instances, no instance {i}",
                CORPUS_NAMES.len()
            )))
        }
        Err(_) => CORPUS_NAMES
            .iter()
            .copied()
            .find(|n| *n == key)
            .ok_or_else(|| Error::Domain(format!("no corpus instance named `{key}`")))?,
    };
    let c2 = || algebra_from_group(field, &cyclic_table(2), 0).map(|a| a.with_label("k[C2]"));
    let klein = || algebra_from_group(field, &elementary_abelian_table(2), 0).map(|a| a.with_label("k[C2xC2]"));
    let tag_list = |t: &[&str]| t.iter().map(|s| s.to_string()).collect::<Vec<_>>();

    match name {
        "flip_c2_c2" => {
            let t = TwistingMapData::flip(c2()?, c2()?);
            let crossed = twisted_tensor_product(&t)?;
            Ok(CorpusInstance {
                name: name.into(),
                tags: tag_list(&[
                    tags::CROSSED_PRODUCT,
                    tags::TWISTED_TENSOR_PRODUCT,
                    tags::TWIST,
                    tags::TTP_TWIST,
                ]),
                pair: TwistPair::trivial(&crossed),
                star: Some(t.b().mult().clone()),
                crossed,
                twisting_map: Some(t),
                gauge: None,
            })
        }
        "smash_c2_sign" => {
            let quasi = QuasiBialgebra::from_group(c2()?)?;
            let module = diagonal_action(c2()?, &[vec![1, 1], vec![1, -1]])?;
            let crossed = smash_product_data(&quasi, &module)?;
            let gauge = GaugeTransformation::trivial(quasi.algebra());
            Ok(CorpusInstance {
                name: name.into(),
                tags: tag_list(&[tags::CROSSED_PRODUCT, tags::SMASH_PRODUCT, tags::TWIST, tags::GAUGE]),
                pair: gauge_twist_pair(&module, &gauge)?,
                crossed,
                twisting_map: None,
                star: None,
                gauge: Some(GaugeData { quasi, module, gauge }),
            })
        }
        "gauge_c2" => {
            let quasi = QuasiBialgebra::from_group(c2()?)?;
            let module = diagonal_action(c2()?, &[vec![1, 1], vec![1, -1]])?;
            let gauge = order_two_gauge(quasi.algebra(), 1)?;
            let crossed = smash_product_data(&quasi, &module)?;
            Ok(CorpusInstance {
                name: name.into(),
                tags: tag_list(&[tags::CROSSED_PRODUCT, tags::SMASH_PRODUCT, tags::TWIST, tags::GAUGE]),
                pair: gauge_twist_pair(&module, &gauge)?,
                crossed,
                twisting_map: None,
                star: None,
                gauge: Some(GaugeData { quasi, module, gauge }),
            })
        }
        "ttp_s3_sign" => {
            let s3 = algebra_from_group(field, &symmetric3_table(), 0)?.with_label("k[S3]");
            let quasi = QuasiBialgebra::from_group(s3)?;
            let signs: Vec<Vec<i64>> = (0..6).map(|g| vec![1, s3_sign(g)]).collect();
            let module = diagonal_action(c2()?, &signs)?;
            let gauge = order_two_gauge(quasi.algebra(), 1)?;
            let smash = smash_product_data(&quasi, &module)?;
            let t = TwistingMapData::new(quasi.algebra().clone(), module.algebra().clone(), smash.r().clone())?;
            let crossed = twisted_tensor_product(&t)?;
            let star = module_algebra_twist(&quasi, &module, &gauge)?.algebra().mult().clone();
            Ok(CorpusInstance {
                name: name.into(),
                tags: tag_list(&[
                    tags::CROSSED_PRODUCT,
                    tags::TWISTED_TENSOR_PRODUCT,
                    tags::SMASH_PRODUCT,
                    tags::TWIST,
                    tags::TTP_TWIST,
                    tags::GAUGE,
                ]),
                pair: gauge_twist_pair(&module, &gauge)?,
                crossed,
                twisting_map: Some(t),
                star: Some(star),
                gauge: Some(GaugeData { quasi, module, gauge }),
            })
        }
        "associator_klein_c2" | "associator_klein_klein" => {
            let base = QuasiBialgebra::from_group(klein()?)?;
            let base_module = if name == "associator_klein_c2" {
                // both generators act on C2 by the sign character
                let signs: Vec<Vec<i64>> = (0..4)
                    .map(|g: usize| vec![1, if g.count_ones() % 2 == 1 { -1 } else { 1 }])
                    .collect();
                diagonal_action(c2()?, &signs)?
            } else {
                // C2xC2 graded by its characters: u_s · g = (-1)^{s·g} u_s
                let signs: Vec<Vec<i64>> = (0..4usize)
                    .map(|g| {
                        (0..4usize)
                            .map(|s| if (s & g).count_ones() % 2 == 0 { 1 } else { -1 })
                            .collect()
                    })
                    .collect();
                diagonal_action(klein()?, &signs)?
            };
            let values: Vec<Vec<i64>> = KLEIN_GAUGE_VALUES.iter().map(|r| r.to_vec()).collect();
            let first = character_gauge(base.algebra(), 2, &values)?;
            let quasi = drinfeld_twist(&base, &first)?;
            let module = module_algebra_twist(&base, &base_module, &first)?;
            let gauge = first.inverse();
            let crossed = smash_product_data(&quasi, &module)?;
            Ok(CorpusInstance {
                name: name.into(),
                tags: tag_list(&[
                    tags::CROSSED_PRODUCT,
                    tags::SMASH_PRODUCT,
                    tags::TWIST,
                    tags::GAUGE,
                    tags::NONTRIVIAL_ASSOCIATOR,
                ]),
                pair: gauge_twist_pair(&module, &gauge)?,
                crossed,
                twisting_map: None,
                star: None,
                gauge: Some(GaugeData { quasi, module, gauge }),
            })
        }
        _ => unreachable!("names come from CORPUS_NAMES"),
    }
}
