//! Invariance under twisting for crossed products.
//!
//! Given crossed-product data `(A, V, R, σ)` and maps `θ, γ: V → A ⊗ V`, written
//! `θ(v) = v_{<-1>} ⊗ v_{<0>}` and `γ(v) = v_{-1} ⊗ v_{0}`, the twisted data is
//!
//! ```text
//! R' = (μ₂⊗id_V)∘(id_A⊗id_A⊗γ)∘(id_A⊗R)∘(θ⊗id_A)
//! σ' = (μ⊗id_V)∘(id_A⊗γ)∘(μ₂⊗id_V)∘(id_A⊗id_A⊗σ)∘(id_A⊗R⊗id_V)∘(θ⊗θ)
//! ```
//!
//! and under conditions `cros1`–`cros4` the map `φ(a ⊗ v) = a·v_{<-1>} ⊗ v_{<0>}` is an
//! algebra isomorphism `A ⊗_{R',σ'} V → A ⊗_{R,σ} V` with inverse `a ⊗ v ↦ a·v_{-1} ⊗ v_{0}`.
//! Every conclusion is re-verified here as an exact matrix identity.

use rand::Rng;

use crate::algebra::{check_algebra, induced_endomorphism, mu2, opposite_unit_insertion, Algebra};
use crate::crossed::{check_brz_axioms, crossed_product_mult, twisted_tensor_product, CrossedData, TwistingMapData};
use crate::error::{Error, Result};
use crate::report::{AxiomReport, Check, Law};
use crate::tensor::{kron_vectors, unflatten, LinMap, Scalar};

/// The pair `θ, γ: V → A ⊗ V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistPair {
    theta: LinMap,
    gamma: LinMap,
}

impl TwistPair {
    pub fn new(theta: LinMap, gamma: LinMap) -> Result<TwistPair> {
        let n = theta.domain_total();
        if gamma.domain_total() != n || theta.codomain_total() != gamma.codomain_total() {
            return Err(Error::Shape("θ and γ must have the same shape".into()));
        }
        if n == 0 || !theta.codomain_total().is_multiple_of(n) {
            return Err(Error::Shape(format!(
                "θ must map V (dim {n}) to A⊗V, got codomain of dimension {}",
                theta.codomain_total()
            )));
        }
        let m = theta.codomain_total() / n;
        Ok(TwistPair {
            theta: theta.reshape(&[n], &[m, n])?,
            gamma: gamma.reshape(&[n], &[m, n])?,
        })
    }

    /// `θ = γ = ι`.
    pub fn trivial(c: &CrossedData) -> TwistPair {
        let iota = opposite_unit_insertion(c.a(), c.v());
        TwistPair::new(iota.clone(), iota).expect("insertion shape")
    }

    pub fn theta(&self) -> &LinMap {
        &self.theta
    }

    pub fn gamma(&self) -> &LinMap {
        &self.gamma
    }

    /// `(γ, θ)`.
    pub fn swapped(&self) -> TwistPair {
        TwistPair {
            theta: self.gamma.clone(),
            gamma: self.theta.clone(),
        }
    }

    fn check_against(&self, c: &CrossedData) -> Result<()> {
        let (m, n) = c.dims();
        if self.theta.domain_total() != n || self.theta.codomain_total() != m * n {
            return Err(Error::Shape(format!(
                "twist pair maps a {}-dimensional space into dimension {}, data needs V (dim {n}) -> A⊗V (dim {})",
                self.theta.domain_total(),
                self.theta.codomain_total(),
                m * n
            )));
        }
        if self.theta.field() != c.a().field() {
            return Err(Error::Shape("twist pair over a different field".into()));
        }
        Ok(())
    }
}

/// Φ_θ: `a ⊗ v ↦ a·v_{<-1>} ⊗ v_{<0>}`, the endomorphism of `A ⊗ V` induced by `θ`.
pub fn induced_map(a: &Algebra, theta: &LinMap) -> LinMap {
    induced_endomorphism(a, theta)
}

fn point_check(law: Law, what: &str, lhs: &[Scalar], rhs: &[Scalar], dims: &[usize]) -> Check {
    match lhs.iter().zip(rhs).position(|(x, y)| x != y) {
        None => Check::pass(law, what),
        Some(pos) => Check::fail(
            law,
            unflatten(pos, dims).expect("coordinate in range"),
            1,
            format!(
                "{what}: differs at output coordinate {:?} ({} vs {})",
                unflatten(pos, dims).unwrap_or_default(),
                lhs[pos],
                rhs[pos]
            ),
        ),
    }
}

/// Conditions `cros1`–`cros4`.
///
/// `cros4` is stated in terms of σ', so σ' is computed (via [`make_sigma_prime`]) before
/// it is evaluated.
pub fn check_twist_conditions(c: &CrossedData, t: &TwistPair) -> Result<AxiomReport> {
    t.check_against(c)?;
    let (a, v) = (c.a(), c.v());
    let (m, n) = c.dims();
    let (id_a, id_v) = (a.identity_map(), v.identity_map());
    let unit_point = kron_vectors(a.unit(), v.point());
    let iota = opposite_unit_insertion(a, v);
    let mut report = AxiomReport::new();

    let theta_point = t.theta.apply(v.point())?;
    let gamma_point = t.gamma.apply(v.point())?;
    report.push(
        point_check(Law::Cros1, "θ(1_V) = 1_A⊗1_V", &theta_point, &unit_point, &[m, n]).and(point_check(
            Law::Cros1,
            "γ(1_V) = 1_A⊗1_V",
            &gamma_point,
            &unit_point,
            &[m, n],
        )),
    );

    let phi_theta = induced_map(a, &t.theta);
    let phi_gamma = induced_map(a, &t.gamma);
    report.push(Check::maps(
        Law::Cros2,
        "Φ_γ∘θ = ι",
        &LinMap::chain(&[&phi_gamma, &t.theta]),
        &iota,
    ));
    report.push(Check::maps(
        Law::Cros3,
        "Φ_θ∘γ = ι",
        &LinMap::chain(&[&phi_theta, &t.gamma]),
        &iota,
    ));

    let sigma_prime = make_sigma_prime(c, t)?;
    let mu = a.mult();
    let lhs = LinMap::chain(&[
        &mu.tensor(&id_v),
        &mu.tensor(&sigma_prime),
        &LinMap::tensor_all(&[&id_a, &t.gamma, &id_v]),
        &c.r().tensor(&id_v),
        &id_v.tensor(&t.gamma),
    ]);
    let rhs = LinMap::chain(&[&mu.tensor(&id_v), &id_a.tensor(&t.gamma), c.sigma()]);
    report.push(Check::maps(
        Law::Cros4,
        "(μ⊗id)(μ⊗σ')(id⊗γ⊗id)(R⊗id)(id⊗γ) = (μ⊗id)(id⊗γ)σ",
        &lhs,
        &rhs,
    ));
    Ok(report)
}

/// R' as the displayed composite.
pub fn make_r_prime(c: &CrossedData, t: &TwistPair) -> Result<LinMap> {
    t.check_against(c)?;
    let (id_a, id_v) = (c.a().identity_map(), c.v().identity_map());
    let mu2 = mu2(c.a())?;
    let (m, n) = c.dims();
    LinMap::chain(&[
        &mu2.tensor(&id_v),
        &LinMap::tensor_all(&[&id_a, &id_a, &t.gamma]),
        &id_a.tensor(c.r()),
        &t.theta.tensor(&id_a),
    ])
    .reshape(&[n, m], &[m, n])
}

/// σ' as the displayed six-map composite.
pub fn make_sigma_prime(c: &CrossedData, t: &TwistPair) -> Result<LinMap> {
    t.check_against(c)?;
    let (id_a, id_v) = (c.a().identity_map(), c.v().identity_map());
    let mu2 = mu2(c.a())?;
    let (m, n) = c.dims();
    LinMap::chain(&[
        &c.a().mult().tensor(&id_v),
        &id_a.tensor(&t.gamma),
        &mu2.tensor(&id_v),
        &LinMap::tensor_all(&[&id_a, &id_a, c.sigma()]),
        &LinMap::tensor_all(&[&id_a, c.r(), &id_v]),
        &t.theta.tensor(&t.theta),
    ])
    .reshape(&[n, n], &[m, n])
}

/// Output of [`apply_twist`]: the twisted data and the certified isomorphism
/// `φ: A ⊗_{R',σ'} V → A ⊗_{R,σ} V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistResult {
    source: CrossedData,
    data_prime: CrossedData,
    phi: LinMap,
    phi_inverse: LinMap,
    report: AxiomReport,
}

impl TwistResult {
    /// Reassembles a stored result; consistency is checked by [`verify_twist_result`].
    pub fn from_parts(
        source: CrossedData,
        data_prime: CrossedData,
        phi: LinMap,
        phi_inverse: LinMap,
    ) -> Result<TwistResult> {
        if source.a() != data_prime.a() || source.v() != data_prime.v() {
            return Err(Error::Shape("twisted data must share A and V with its source".into()));
        }
        let (m, n) = source.dims();
        Ok(TwistResult {
            phi: phi.reshape(&[m, n], &[m, n])?,
            phi_inverse: phi_inverse.reshape(&[m, n], &[m, n])?,
            source,
            data_prime,
            report: AxiomReport::new(),
        })
    }

    pub fn source(&self) -> &CrossedData {
        &self.source
    }

    pub fn data_prime(&self) -> &CrossedData {
        &self.data_prime
    }

    pub fn r_prime(&self) -> &LinMap {
        self.data_prime.r()
    }

    pub fn sigma_prime(&self) -> &LinMap {
        self.data_prime.sigma()
    }

    pub fn phi(&self) -> &LinMap {
        &self.phi
    }

    pub fn phi_inverse(&self) -> &LinMap {
        &self.phi_inverse
    }

    /// Twist conditions followed by the verification of every conclusion.
    pub fn report(&self) -> &AxiomReport {
        &self.report
    }
}

/// Checks that `data_prime` is crossed-product data and that `phi` is a unital,
/// multiplicative bijection `A ⊗_{data_prime} V → A ⊗_{source} V` with inverse `phi_inverse`.
pub fn verify_isomorphism(
    source: &CrossedData,
    data_prime: &CrossedData,
    phi: &LinMap,
    phi_inverse: &LinMap,
) -> Result<AxiomReport> {
    let (m, n) = source.dims();
    if data_prime.dims() != (m, n) || phi.domain_total() != m * n || phi.codomain_total() != m * n {
        return Err(Error::Shape("isomorphism data does not match A⊗V".into()));
    }
    if phi_inverse.domain_total() != m * n || phi_inverse.codomain_total() != m * n {
        return Err(Error::Shape("inverse does not match A⊗V".into()));
    }
    let phi = phi.reshape(&[m, n], &[m, n])?;
    let phi_inverse = phi_inverse.reshape(&[m, n], &[m, n])?;
    let mut report = check_brz_axioms(data_prime);

    let id = LinMap::identity(phi.field(), &[m, n]);
    report.push(
        Check::maps(
            Law::PhiInvertible,
            "φ∘φ⁻¹ = id",
            &LinMap::chain(&[&phi, &phi_inverse]),
            &id,
        )
        .and(Check::maps(
            Law::PhiInvertible,
            "φ⁻¹∘φ = id",
            &LinMap::chain(&[&phi_inverse, &phi]),
            &id,
        )),
    );

    let one = kron_vectors(source.a().unit(), source.v().point());
    report.push(point_check(
        Law::PhiUnital,
        "φ(1⊗1) = 1⊗1",
        &phi.apply(&one)?,
        &one,
        &[m, n],
    ));

    let mu = crossed_product_mult(source)?;
    let mu_prime = crossed_product_mult(data_prime)?;
    let lhs = LinMap::chain(&[&mu, &phi.tensor(&phi)]);
    let rhs = LinMap::chain(&[&phi, &mu_prime]);
    report.push(Check::maps(Law::PhiMult, "μ_(R,σ)∘(φ⊗φ) = φ∘μ_(R',σ')", &lhs, &rhs));
    Ok(report)
}

/// Re-checks a stored [`TwistResult`] from its matrices alone.
pub fn verify_twist_result(result: &TwistResult) -> Result<AxiomReport> {
    verify_isomorphism(&result.source, &result.data_prime, &result.phi, &result.phi_inverse)
}

/// Twists `c` by `t` and certifies the isomorphism.
///
/// Rejects inputs failing the crossed-product axioms or the twist conditions with
/// [`Error::Precondition`]; any failure of the verification after that is reported
/// as [`Error::TheoremViolation`].
pub fn apply_twist(c: &CrossedData, t: &TwistPair) -> Result<TwistResult> {
    let brz = check_brz_axioms(c);
    if !brz.passed() {
        return Err(Error::precondition(brz));
    }
    let conditions = check_twist_conditions(c, t)?;
    if !conditions.passed() {
        return Err(Error::precondition(conditions));
    }
    let data_prime = c.with_maps(make_r_prime(c, t)?, make_sigma_prime(c, t)?)?;
    let phi = induced_map(c.a(), &t.theta);
    let phi_inverse = induced_map(c.a(), &t.gamma);
    let verification = verify_isomorphism(c, &data_prime, &phi, &phi_inverse)?;
    if !verification.passed() {
        return Err(Error::theorem_violation(verification));
    }
    let mut report = conditions;
    report.extend(verification);
    Ok(TwistResult {
        source: c.clone(),
        data_prime,
        phi,
        phi_inverse,
        report,
    })
}

/// Completes `θ` with `γ := Φ_θ⁻¹∘ι`; `None` when Φ_θ is singular.
///
/// When `θ(1_V) = 1_A ⊗ 1_V` the result satisfies `cros1`–`cros3` by construction.
pub fn complete_pair(c: &CrossedData, theta: LinMap) -> Option<TwistPair> {
    let inverse = induced_map(c.a(), &theta).inverse()?;
    let gamma = LinMap::chain(&[&inverse, &opposite_unit_insertion(c.a(), c.v())]);
    TwistPair::new(theta, gamma).ok()
}

/// Random `θ` with small integer entries and `θ(1_V) = 1_A ⊗ 1_V`, completed by
/// [`complete_pair`]. Draws until Φ_θ is invertible, at most `attempts` times.
pub fn random_twist_pair<R: Rng>(c: &CrossedData, rng: &mut R, attempts: usize) -> Option<TwistPair> {
    let (m, n) = c.dims();
    let field = c.a().field();
    let point = c.v().point();
    let pivot = point.iter().position(|s| !s.is_zero())?;
    let target = kron_vectors(c.a().unit(), point);
    for _ in 0..attempts {
        let raw = LinMap::from_fn(field, &[n], &[m, n], |_, _| field.int(rng.gen_range(-2..=2)));
        // rank-one correction on the pivot column so that θ(1_V) hits the target
        let defect: Vec<Scalar> = target.iter().zip(raw.apply(point).ok()?).map(|(t, x)| t - &x).collect();
        let scale = point[pivot].inv()?;
        let theta = LinMap::from_fn(field, &[n], &[m, n], |r, col| {
            if col == pivot {
                raw.get(r, col) + &(&defect[r] * &scale)
            } else {
                raw.get(r, col).clone()
            }
        });
        if let Some(pair) = complete_pair(c, theta) {
            return Some(pair);
        }
    }
    None
}

fn relabel(law: Law, report: &AxiomReport, ok: &str) -> Check {
    match report.failures().next() {
        None => Check::pass(law, ok),
        Some(first) => Check {
            law,
            passed: false,
            first_counterexample: first.first_counterexample.clone(),
            failures: report.failures().map(|c| c.failures).sum(),
            detail: format!("{}: {}", first.law, first.detail),
        },
    }
}

/// Checks the twisted-tensor-product form of the twisting theorem for a second
/// product `star` on `B`: θ is an algebra map `(B, star) → A ⊗_R B`, `γ(1) = 1⊗1`,
/// `rel1`–`rel3`, and σ'(b, b') = 1_A ⊗ (b ∗ b') for the induced crossed-product data.
pub fn specialize_ttp(t: &TwistingMapData, star: &LinMap, pair: &TwistPair) -> Result<AxiomReport> {
    let (a, b) = (t.a(), t.b());
    let n = b.dim();
    if star.domain_total() != n * n || star.codomain_total() != n {
        return Err(Error::Shape(format!("star must be a product on B (dim {n})")));
    }
    let star = star.reshape(&[n, n], &[n])?;
    let b_star = b.with_mult(format!("{} (star)", b.label()), star.clone())?;
    let c = twisted_tensor_product(t)?;
    pair.check_against(&c)?;
    let (id_a, id_b) = (a.identity_map(), b.identity_map());
    let iota = opposite_unit_insertion(a, c.v());
    let mut report = AxiomReport::new();

    report.push(relabel(
        Law::StarAlgebra,
        &check_algebra(&b_star),
        "star is associative with unit 1_B",
    ));

    let unit_pair = kron_vectors(a.unit(), b.unit());
    let mu_ttp = crossed_product_mult(&c)?;
    let theta = pair.theta();
    report.push(
        Check::maps(
            Law::ThetaAlg,
            "θ∘∗ = μ_(A⊗_R B)∘(θ⊗θ)",
            &LinMap::chain(&[theta, &star]),
            &LinMap::chain(&[&mu_ttp, &theta.tensor(theta)]),
        )
        .and(point_check(
            Law::ThetaAlg,
            "θ(1) = 1⊗1",
            &theta.apply(b.unit())?,
            &unit_pair,
            &[a.dim(), n],
        )),
    );
    let gamma = pair.gamma();
    report.push(point_check(
        Law::GammaUnital,
        "γ(1) = 1⊗1",
        &gamma.apply(b.unit())?,
        &unit_pair,
        &[a.dim(), n],
    ));

    let lhs = LinMap::chain(&[gamma, b.mult()]);
    let rhs = LinMap::chain(&[
        &a.mult().tensor(&star),
        &LinMap::tensor_all(&[&id_a, gamma, &id_b]),
        &t.r().tensor(&id_b),
        &id_b.tensor(gamma),
    ]);
    report.push(Check::maps(
        Law::Rel1,
        "γ∘μ_B = (μ_A⊗∗)(id⊗γ⊗id)(R⊗id)(id⊗γ)",
        &lhs,
        &rhs,
    ));

    let phi_theta = induced_map(a, theta);
    let phi_gamma = induced_map(a, gamma);
    report.push(Check::maps(
        Law::Rel2,
        "Φ_γ∘θ = ι",
        &LinMap::chain(&[&phi_gamma, theta]),
        &iota,
    ));
    report.push(Check::maps(
        Law::Rel3,
        "Φ_θ∘γ = ι",
        &LinMap::chain(&[&phi_theta, gamma]),
        &iota,
    ));

    let sigma_prime = make_sigma_prime(&c, pair)?;
    report.push(Check::maps(
        Law::SigmaStar,
        "σ'(b, b') = 1⊗(b∗b')",
        &sigma_prime,
        &LinMap::chain(&[&iota, &star]),
    ));
    Ok(report)
}
