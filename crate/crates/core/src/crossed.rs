//! Crossed-product data `(A, V, R, σ)`, its five axioms, and the crossed-product algebra
//! on `A ⊗ V`. Twisted tensor products of algebras are the special case `σ(b, b') = 1 ⊗ bb'`.

use crate::algebra::{mu2, opposite_unit_insertion, Algebra, PointedSpace};
use crate::error::{Error, Result};
use crate::report::{AxiomReport, Check, Law};
use crate::tensor::{kron_vectors, LinMap};

/// `R: V ⊗ A → A ⊗ V` written `R(v ⊗ a) = a_R ⊗ v_R`, and
/// `σ: V ⊗ V → A ⊗ V` written `σ(v, v') = σ_1(v, v') ⊗ σ_2(v, v')`.
///
/// Holding a `CrossedData` says nothing about the axioms; see [`check_brz_axioms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedData {
    a: Algebra,
    v: PointedSpace,
    r: LinMap,
    sigma: LinMap,
}

impl CrossedData {
    pub fn new(a: Algebra, v: PointedSpace, r: LinMap, sigma: LinMap) -> Result<CrossedData> {
        let (m, n) = (a.dim(), v.dim());
        if a.field() != v.field() || r.field() != a.field() || sigma.field() != a.field() {
            return Err(Error::Shape("crossed data mixes ground fields".into()));
        }
        if r.domain_total() != n * m || r.codomain_total() != m * n {
            return Err(Error::Shape(format!(
                "R must map V⊗A ({n}x{m}) to A⊗V ({m}x{n}), got {:?} -> {:?}",
                r.domain_dims(),
                r.codomain_dims()
            )));
        }
        if sigma.domain_total() != n * n || sigma.codomain_total() != m * n {
            return Err(Error::Shape(format!(
                "σ must map V⊗V ({n}x{n}) to A⊗V ({m}x{n}), got {:?} -> {:?}",
                sigma.domain_dims(),
                sigma.codomain_dims()
            )));
        }
        let r = r.reshape(&[n, m], &[m, n])?;
        let sigma = sigma.reshape(&[n, n], &[m, n])?;
        Ok(CrossedData { a, v, r, sigma })
    }

    pub fn a(&self) -> &Algebra {
        &self.a
    }

    pub fn v(&self) -> &PointedSpace {
        &self.v
    }

    pub fn r(&self) -> &LinMap {
        &self.r
    }

    pub fn sigma(&self) -> &LinMap {
        &self.sigma
    }

    /// Same `A` and `V`, new maps.
    pub fn with_maps(&self, r: LinMap, sigma: LinMap) -> Result<CrossedData> {
        CrossedData::new(self.a.clone(), self.v.clone(), r, sigma)
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.a.dim(), self.v.dim())
    }
}

/// A candidate twisting map `R: B ⊗ A → A ⊗ B` between two algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistingMapData {
    a: Algebra,
    b: Algebra,
    r: LinMap,
}

impl TwistingMapData {
    pub fn new(a: Algebra, b: Algebra, r: LinMap) -> Result<TwistingMapData> {
        let (m, n) = (a.dim(), b.dim());
        if r.domain_total() != n * m || r.codomain_total() != m * n {
            return Err(Error::Shape(format!(
                "R must map B⊗A ({n}x{m}) to A⊗B ({m}x{n}), got {:?} -> {:?}",
                r.domain_dims(),
                r.codomain_dims()
            )));
        }
        if a.field() != b.field() || r.field() != a.field() {
            return Err(Error::Shape("twisting map data mixes ground fields".into()));
        }
        let r = r.reshape(&[n, m], &[m, n])?;
        Ok(TwistingMapData { a, b, r })
    }

    /// The flip `b ⊗ a ↦ a ⊗ b`, whose twisted tensor product is the ordinary one.
    pub fn flip(a: Algebra, b: Algebra) -> TwistingMapData {
        let r = LinMap::swap(a.field(), b.dim(), a.dim());
        TwistingMapData::new(a, b, r).expect("flip shape")
    }

    pub fn a(&self) -> &Algebra {
        &self.a
    }

    pub fn b(&self) -> &Algebra {
        &self.b
    }

    pub fn r(&self) -> &LinMap {
        &self.r
    }

    pub fn with_r(&self, r: LinMap) -> Result<TwistingMapData> {
        TwistingMapData::new(self.a.clone(), self.b.clone(), r)
    }
}

/// The four twisting-map conditions: the two unit conditions, then compatibility
/// with the products of `A` and of `B`.
pub fn check_twisting_map(t: &TwistingMapData) -> AxiomReport {
    let (a, b, r) = (&t.a, &t.b, &t.r);
    let (id_a, id_b) = (a.identity_map(), b.identity_map());
    let mut report = AxiomReport::new();
    report.push(Check::slices(
        Law::Tw1,
        "R(1⊗a) = a⊗1",
        (0..a.dim()).map(|i| {
            let lhs = r.apply(&kron_vectors(b.unit(), &a.basis(i))).expect("shape");
            (vec![i], lhs, kron_vectors(&a.basis(i), b.unit()))
        }),
    ));
    report.push(Check::slices(
        Law::Tw2,
        "R(b⊗1) = 1⊗b",
        (0..b.dim()).map(|j| {
            let lhs = r.apply(&kron_vectors(&b.basis(j), a.unit())).expect("shape");
            (vec![j], lhs, kron_vectors(a.unit(), &b.basis(j)))
        }),
    ));
    let lhs = LinMap::chain(&[r, &id_b.tensor(a.mult())]);
    let rhs = LinMap::chain(&[&a.mult().tensor(&id_b), &id_a.tensor(r), &r.tensor(&id_a)]);
    report.push(Check::maps(Law::Tw3, "R∘(id⊗μ_A) = (μ_A⊗id)∘(id⊗R)∘(R⊗id)", &lhs, &rhs));
    let lhs = LinMap::chain(&[r, &b.mult().tensor(&id_a)]);
    let rhs = LinMap::chain(&[&id_a.tensor(b.mult()), &r.tensor(&id_b), &id_b.tensor(r)]);
    report.push(Check::maps(Law::Tw4, "R∘(μ_B⊗id) = (id⊗μ_B)∘(R⊗id)∘(id⊗R)", &lhs, &rhs));
    report
}

/// Crossed-product data of the twisted tensor product `A ⊗_R B`: `V = B` pointed at
/// `1_B` and `σ(b, b') = 1_A ⊗ bb'`.
pub fn twisted_tensor_product(t: &TwistingMapData) -> Result<CrossedData> {
    let report = check_twisting_map(t);
    if !report.passed() {
        return Err(Error::precondition(report));
    }
    let v = t.b.underlying_space();
    let sigma = LinMap::chain(&[&opposite_unit_insertion(&t.a, &v), t.b.mult()]);
    CrossedData::new(t.a.clone(), v, t.r.clone(), sigma)
}

/// The crossed-product conditions on `(R, σ)`, in order `brz1` to `brz5`.
pub fn check_brz_axioms(c: &CrossedData) -> AxiomReport {
    let (a, v) = (&c.a, &c.v);
    let (r, sigma) = (&c.r, &c.sigma);
    let (id_a, id_v) = (a.identity_map(), v.identity_map());
    let mu = a.mult();
    let mu_v = mu.tensor(&id_v);
    let mut report = AxiomReport::new();

    let point_side = Check::slices(
        Law::Brz1,
        "R(1_V⊗a) = a⊗1_V",
        (0..a.dim()).map(|i| {
            let lhs = r.apply(&kron_vectors(v.point(), &a.basis(i))).expect("shape");
            (vec![i], lhs, kron_vectors(&a.basis(i), v.point()))
        }),
    );
    let unit_side = Check::slices(
        Law::Brz1,
        "R(v⊗1_A) = 1_A⊗v",
        (0..v.dim()).map(|j| {
            let lhs = r.apply(&kron_vectors(&v.basis(j), a.unit())).expect("shape");
            (vec![j], lhs, kron_vectors(a.unit(), &v.basis(j)))
        }),
    );
    report.push(point_side.and(unit_side));

    let left_point = Check::slices(
        Law::Brz2,
        "σ(1_V, v) = 1_A⊗v",
        (0..v.dim()).map(|j| {
            let lhs = sigma.apply(&kron_vectors(v.point(), &v.basis(j))).expect("shape");
            (vec![j], lhs, kron_vectors(a.unit(), &v.basis(j)))
        }),
    );
    let right_point = Check::slices(
        Law::Brz2,
        "σ(v, 1_V) = 1_A⊗v",
        (0..v.dim()).map(|j| {
            let lhs = sigma.apply(&kron_vectors(&v.basis(j), v.point())).expect("shape");
            (vec![j], lhs, kron_vectors(a.unit(), &v.basis(j)))
        }),
    );
    report.push(left_point.and(right_point));

    let lhs = LinMap::chain(&[r, &id_v.tensor(mu)]);
    let rhs = LinMap::chain(&[&mu_v, &id_a.tensor(r), &r.tensor(&id_a)]);
    report.push(Check::maps(Law::Brz3, "R∘(id⊗μ) = (μ⊗id)∘(id⊗R)∘(R⊗id)", &lhs, &rhs));

    let id_a_sigma = id_a.tensor(sigma);
    let lhs = LinMap::chain(&[&mu_v, &id_a_sigma, &r.tensor(&id_v), &id_v.tensor(sigma)]);
    let rhs = LinMap::chain(&[&mu_v, &id_a_sigma, &sigma.tensor(&id_v)]);
    report.push(Check::maps(
        Law::Brz4,
        "(μ⊗id)(id⊗σ)(R⊗id)(id⊗σ) = (μ⊗id)(id⊗σ)(σ⊗id)",
        &lhs,
        &rhs,
    ));

    let lhs = LinMap::chain(&[&mu_v, &id_a_sigma, &r.tensor(&id_v), &id_v.tensor(r)]);
    let rhs = LinMap::chain(&[&mu_v, &id_a.tensor(r), &sigma.tensor(&id_a)]);
    report.push(Check::maps(
        Law::Brz5,
        "(μ⊗id)(id⊗σ)(R⊗id)(id⊗R) = (μ⊗id)(id⊗R)(σ⊗id)",
        &lhs,
        &rhs,
    ));

    report
}

/// `μ_{A⊗V} = (μ₂⊗id_V)∘(id_A⊗id_A⊗σ)∘(id_A⊗R⊗id_V)` as a map `A⊗V⊗A⊗V → A⊗V`,
/// without checking the axioms.
pub(crate) fn crossed_product_mult(c: &CrossedData) -> Result<LinMap> {
    let (id_a, id_v) = (c.a.identity_map(), c.v.identity_map());
    let mu2 = mu2(&c.a)?;
    Ok(LinMap::chain(&[
        &mu2.tensor(&id_v),
        &LinMap::tensor_all(&[&id_a, &id_a, &c.sigma]),
        &LinMap::tensor_all(&[&id_a, &c.r, &id_v]),
    ]))
}

/// The crossed product `A ⊗_{R,σ} V`, refusing data that fails an axiom.
pub fn build_crossed_product(c: &CrossedData) -> Result<Algebra> {
    let report = check_brz_axioms(c);
    if !report.passed() {
        return Err(Error::precondition(report));
    }
    let (m, n) = c.dims();
    let mult = crossed_product_mult(c)?.reshape(&[m * n, m * n], &[m * n])?;
    let label = format!("{} ⊗_(R,σ) {}", c.a.label(), c.v.label());
    Algebra::new(label, mult, kron_vectors(c.a.unit(), c.v.point()))
}
