//! Finite-dimensional unital algebras given by structure constants, and pointed spaces.

use crate::error::{Error, Result};
use crate::report::{AxiomReport, Check, Law};
use crate::tensor::{basis_vector, kron_vectors, Field, LinMap, Scalar};

/// An algebra `(A, μ, 1_A)`: `mult` is `A ⊗ A → A`, `unit` the coordinates of `1_A`.
///
/// Construction only validates shapes; associativity and the unit laws are checked by
/// [`check_algebra`], so invalid algebras can be held and reported on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    label: String,
    mult: LinMap,
    unit: Vec<Scalar>,
}

impl Algebra {
    pub fn new(label: impl Into<String>, mult: LinMap, unit: Vec<Scalar>) -> Result<Algebra> {
        let m = unit.len();
        if m == 0 {
            return Err(Error::Shape("algebra must have positive dimension".into()));
        }
        if mult.domain_total() != m * m || mult.codomain_total() != m {
            return Err(Error::Shape(format!(
                "multiplication of a {m}-dimensional algebra must be {m}x{}, got {}x{}",
                m * m,
                mult.codomain_total(),
                mult.domain_total()
            )));
        }
        if unit.iter().any(|s| s.field() != mult.field()) {
            return Err(Error::Shape("unit and multiplication over different fields".into()));
        }
        let mult = mult.reshape(&[m, m], &[m])?;
        Ok(Algebra {
            label: label.into(),
            mult,
            unit,
        })
    }

    /// The ground field itself.
    pub fn one_dimensional(field: Field) -> Algebra {
        let mult = LinMap::identity(field, &[1]).reshape(&[1, 1], &[1]).expect("1x1");
        Algebra::new("k", mult, vec![field.one()]).expect("1-dimensional algebra")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Algebra {
        self.label = label.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn identity_map(&self) -> LinMap {
        LinMap::identity(self.field(), &[self.dim()])
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        basis_vector(self.field(), self.dim(), i)
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.mult
            .apply(&kron_vectors(x, y))
            .expect("element lengths match algebra dimension")
    }

    /// Product of a list of elements, associated from the left.
    pub fn product(&self, factors: &[&[Scalar]]) -> Vec<Scalar> {
        factors.iter().fold(self.unit.clone(), |acc, x| self.multiply(&acc, x))
    }

    /// Left multiplication `y ↦ x·y`.
    pub fn left_mult(&self, x: &[Scalar]) -> LinMap {
        let images: Vec<_> = (0..self.dim()).map(|j| self.multiply(x, &self.basis(j))).collect();
        LinMap::from_images(self.field(), &[self.dim()], &[self.dim()], &images).expect("square")
    }

    /// Right multiplication `y ↦ y·x`.
    pub fn right_mult(&self, x: &[Scalar]) -> LinMap {
        let images: Vec<_> = (0..self.dim()).map(|j| self.multiply(&self.basis(j), x)).collect();
        LinMap::from_images(self.field(), &[self.dim()], &[self.dim()], &images).expect("square")
    }

    /// Ordinary tensor product algebra `A ⊗ B` with `(a⊗b)(a'⊗b') = aa' ⊗ bb'`.
    pub fn tensor_product(&self, other: &Algebra) -> Algebra {
        let (m, n) = (self.dim(), other.dim());
        let f = self.field();
        let middle = LinMap::tensor_all(&[&self.identity_map(), &LinMap::swap(f, n, m), &other.identity_map()]);
        let mult = LinMap::chain(&[&self.mult.tensor(&other.mult), &middle]);
        Algebra::new(
            format!("{} ⊗ {}", self.label, other.label),
            mult,
            kron_vectors(&self.unit, &other.unit),
        )
        .expect("tensor product shape")
    }

    /// `a^{⊗k}` for `k ≥ 1`.
    pub fn tensor_power(&self, k: usize) -> Algebra {
        (1..k).fold(self.clone(), |acc, _| acc.tensor_product(self))
    }

    /// `V` with `1_V = 1_A`.
    pub fn underlying_space(&self) -> PointedSpace {
        PointedSpace::new(self.label.clone(), self.unit.clone()).expect("unit is nonzero")
    }

    /// Same basis, new multiplication; used by builders that deform a product.
    pub fn with_mult(&self, label: impl Into<String>, mult: LinMap) -> Result<Algebra> {
        Algebra::new(label, mult, self.unit.clone())
    }
}

/// A vector space with a distinguished nonzero element `1_V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedSpace {
    label: String,
    point: Vec<Scalar>,
}

impl PointedSpace {
    pub fn new(label: impl Into<String>, point: Vec<Scalar>) -> Result<PointedSpace> {
        if point.is_empty() {
            return Err(Error::Shape("pointed space must have positive dimension".into()));
        }
        if point.iter().all(Scalar::is_zero) {
            return Err(Error::Domain(
                "distinguished element of a pointed space must be nonzero".into(),
            ));
        }
        Ok(PointedSpace {
            label: label.into(),
            point,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.point.len()
    }

    pub fn point(&self) -> &[Scalar] {
        &self.point
    }

    pub fn field(&self) -> Field {
        self.point[0].field()
    }

    pub fn identity_map(&self) -> LinMap {
        LinMap::identity(self.field(), &[self.dim()])
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        basis_vector(self.field(), self.dim(), i)
    }
}

/// Associativity and both unit laws.
pub fn check_algebra(a: &Algebra) -> AxiomReport {
    let id = a.identity_map();
    let mu = a.mult();
    let left = LinMap::chain(&[mu, &mu.tensor(&id)]);
    let right = LinMap::chain(&[mu, &id.tensor(mu)]);
    let mut report = AxiomReport::new();
    report.push(Check::maps(Law::Assoc, "μ∘(μ⊗id) = μ∘(id⊗μ)", &left, &right));
    report.push(Check::slices(
        Law::UnitLeft,
        "1·x = x",
        (0..a.dim()).map(|i| (vec![i], a.multiply(a.unit(), &a.basis(i)), a.basis(i))),
    ));
    report.push(Check::slices(
        Law::UnitRight,
        "x·1 = x",
        (0..a.dim()).map(|i| (vec![i], a.multiply(&a.basis(i), a.unit()), a.basis(i))),
    ));
    report
}

/// The triple product `μ∘(id⊗μ)`, asserted equal to `μ∘(μ⊗id)`.
pub fn mu2(a: &Algebra) -> Result<LinMap> {
    let id = a.identity_map();
    let right = LinMap::chain(&[a.mult(), &id.tensor(a.mult())]);
    let left = LinMap::chain(&[a.mult(), &a.mult().tensor(&id)]);
    if let Some(d) = right.first_difference(&left)? {
        let at = crate::tensor::unflatten(d.column, right.domain_dims())?;
        return Err(Error::Consistency(format!(
            "algebra `{}` is not associative: μ∘(id⊗μ) and μ∘(μ⊗id) differ on basis triple {at:?}",
            a.label()
        )));
    }
    Ok(right)
}

/// Group algebra from a Cayley table `table[i][j] = index of g_i g_j`.
pub fn algebra_from_group(field: Field, cayley_table: &[Vec<usize>], identity_index: usize) -> Result<Algebra> {
    let n = cayley_table.len();
    if n == 0 {
        return Err(Error::Domain("not a group: empty table".into()));
    }
    if let Some(i) = (0..n).find(|&i| cayley_table[i].len() != n) {
        return Err(Error::Domain(format!(
            "not a group: row {i} of the Cayley table has the wrong length"
        )));
    }
    if let Some((i, j)) = pairs(n).find(|&(i, j)| cayley_table[i][j] >= n) {
        return Err(Error::Domain(format!(
            "not a group: closure fails, product ({i},{j}) out of range"
        )));
    }
    if identity_index >= n {
        return Err(Error::Domain("not a group: identity index out of range".into()));
    }
    let e = identity_index;
    if let Some(i) = (0..n).find(|&i| cayley_table[e][i] != i || cayley_table[i][e] != i) {
        return Err(Error::Domain(format!("not a group: identity fails on element {i}")));
    }
    for (i, j) in pairs(n) {
        for k in 0..n {
            if cayley_table[cayley_table[i][j]][k] != cayley_table[i][cayley_table[j][k]] {
                return Err(Error::Domain(format!(
                    "not a group: associativity fails on ({i},{j},{k})"
                )));
            }
        }
    }
    if let Some(i) = (0..n).find(|&i| !(0..n).any(|j| cayley_table[i][j] == e && cayley_table[j][i] == e)) {
        return Err(Error::Domain(format!("not a group: element {i} has no inverse")));
    }
    let mult = LinMap::from_fn(field, &[n, n], &[n], |r, c| {
        if cayley_table[c / n][c % n] == r {
            field.one()
        } else {
            field.zero()
        }
    });
    Algebra::new(format!("k[G{n}]"), mult, basis_vector(field, n, e))
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

/// The insertion `ι: V → A ⊗ V`, `v ↦ 1_A ⊗ v`.
pub fn opposite_unit_insertion(a: &Algebra, v: &PointedSpace) -> LinMap {
    let n = v.dim();
    LinMap::from_fn(a.field(), &[n], &[a.dim(), n], |r, c| {
        if r % n == c {
            a.unit()[r / n].clone()
        } else {
            a.field().zero()
        }
    })
}

/// `a ⊗ v ↦ a·x ⊗ w` where `t(v) = x ⊗ w`; the left `A`-linear extension of `t: V → A⊗V`.
pub(crate) fn induced_endomorphism(a: &Algebra, t: &LinMap) -> LinMap {
    let id_a = a.identity_map();
    let n = t.domain_total();
    let id_v = LinMap::identity(a.field(), &[n]);
    LinMap::chain(&[&a.mult().tensor(&id_v), &id_a.tensor(t)])
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn c2() -> Algebra {
        algebra_from_group(Q, &[vec![0, 1], vec![1, 0]], 0).unwrap()
    }

    fn s3_table() -> Vec<Vec<usize>> {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        perms
            .iter()
            .map(|p| perms.iter().map(|q| index([p[q[0]], p[q[1]], p[q[2]]])).collect())
            .collect()
    }

    #[test]
    fn group_algebra_of_c2_passes() {
        let a = c2();
        assert!(check_algebra(&a).passed());
        assert_eq!(a.multiply(&a.basis(1), &a.basis(1)), a.basis(0));
    }

    #[test]
    fn one_dimensional_algebra() {
        let k = Algebra::one_dimensional(Q);
        assert!(check_algebra(&k).passed());
        let m = mu2(&k).unwrap();
        assert_eq!(m.codomain_total(), 1);
        assert!(m.get(0, 0).is_one());
    }

    #[test]
    fn c2_with_idempotent_g_is_still_an_algebra() {
        // g·g := g gives the monoid algebra of {e, g} with g idempotent, which is
        // associative and unital, so no law fails.
        let a = c2();
        let mult = a.mult().with_entry(0, 3, Q.zero()).with_entry(1, 3, Q.one());
        let mutated = Algebra::new("mutated", mult, a.unit().to_vec()).unwrap();
        assert!(check_algebra(&mutated).passed());
    }

    #[test]
    fn klein_mutation_breaks_associativity() {
        let table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        let a = algebra_from_group(Q, &table, 0).unwrap();
        // g1·g2 := g1 instead of g3; column (1,2) is flat index 6
        let mult = a.mult().with_entry(3, 6, Q.zero()).with_entry(1, 6, Q.one());
        let mutated = Algebra::new("mutated", mult, a.unit().to_vec()).unwrap();
        let report = check_algebra(&mutated);
        assert_eq!(report.failed_laws(), vec![Law::Assoc]);
        assert_eq!(
            report.get(Law::Assoc).unwrap().first_counterexample,
            Some(vec![1, 1, 2])
        );
        assert!(mu2(&mutated).is_err());
    }

    #[test]
    fn mu2_on_c2() {
        let a = c2();
        let m = mu2(&a).unwrap();
        let ggg = kron_vectors(&kron_vectors(&a.basis(1), &a.basis(1)), &a.basis(1));
        assert_eq!(m.apply(&ggg).unwrap(), a.basis(1));
    }

    #[test]
    fn s3_is_noncommutative() {
        let a = algebra_from_group(Q, &s3_table(), 0).unwrap();
        assert_eq!(a.dim(), 6);
        assert!(check_algebra(&a).passed());
        let (transposition, three_cycle) = (a.basis(1), a.basis(4));
        assert_ne!(
            a.multiply(&transposition, &three_cycle),
            a.multiply(&three_cycle, &transposition)
        );
    }

    #[test]
    fn klein_four() {
        let table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        let a = algebra_from_group(Q, &table, 0).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.unit(), a.basis(0).as_slice());
    }

    #[test]
    fn non_groups_rejected() {
        let err = algebra_from_group(Q, &[vec![0, 1], vec![1, 1]], 0).unwrap_err();
        assert!(err.to_string().contains("not a group"), "{err}");
        let err = algebra_from_group(Q, &[vec![0, 2], vec![1, 0]], 0).unwrap_err();
        assert!(err.to_string().contains("closure"), "{err}");
        let err = algebra_from_group(Q, &[vec![1, 0], vec![0, 1]], 0).unwrap_err();
        assert!(err.to_string().contains("identity"), "{err}");
    }

    #[test]
    fn unit_insertion() {
        let a = c2();
        let v = PointedSpace::new("V", vec![Q.one(), Q.int(2), Q.zero()]).unwrap();
        let iota = opposite_unit_insertion(&a, &v);
        assert_eq!(iota.apply(v.point()).unwrap(), kron_vectors(a.unit(), v.point()));
        // (μ⊗id)∘(id⊗ι) is the identity of A⊗V
        assert!(induced_endomorphism(&a, &iota).is_identity());

        let k = Algebra::one_dimensional(Q);
        assert!(opposite_unit_insertion(&k, &v).is_identity());
    }

    #[test]
    fn zero_point_rejected() {
        assert!(PointedSpace::new("V", vec![Q.zero(), Q.zero()]).is_err());
    }

    #[test]
    fn tensor_product_of_group_algebras() {
        let a = c2().tensor_product(&c2());
        assert!(check_algebra(&a).passed());
        let table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        let klein = algebra_from_group(Q, &table, 0).unwrap();
        assert_eq!(a.mult(), klein.mult());
    }
}
