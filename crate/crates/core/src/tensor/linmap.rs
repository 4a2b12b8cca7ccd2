use std::fmt;

use super::{Field, Scalar};
use crate::error::{Error, Result};

/// A linear map between tensor products of coordinate spaces, stored as a dense
/// `codomain_total × domain_total` matrix (row-major; one row per codomain basis vector).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinMap {
    field: Field,
    domain_dims: Vec<usize>,
    codomain_dims: Vec<usize>,
    entries: Vec<Scalar>,
}

/// First place where two maps disagree, scanning domain basis vectors in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    /// Flat index of the first domain basis vector whose images differ.
    pub column: usize,
    /// Flat codomain index of the first differing coordinate of that image.
    pub row: usize,
    /// Number of domain basis vectors whose images differ.
    pub differing_columns: usize,
}

fn total(dims: &[usize]) -> usize {
    dims.iter().product()
}

fn check_dims(dims: &[usize], what: &str) -> Result<()> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::Shape(format!(
            "{what} factor dimensions {dims:?} must be nonempty and positive"
        )));
    }
    Ok(())
}

impl LinMap {
    pub fn new(
        field: Field,
        domain_dims: Vec<usize>,
        codomain_dims: Vec<usize>,
        entries: Vec<Scalar>,
    ) -> Result<LinMap> {
        check_dims(&domain_dims, "domain")?;
        check_dims(&codomain_dims, "codomain")?;
        let expected = total(&domain_dims) * total(&codomain_dims);
        if entries.len() != expected {
            return Err(Error::Shape(format!(
                "matrix has {} entries, expected {} x {}",
                entries.len(),
                total(&codomain_dims),
                total(&domain_dims)
            )));
        }
        if let Some(bad) = entries.iter().find(|s| s.field() != field) {
            return Err(Error::Shape(format!(
                "entry over {} in a map over {field}",
                bad.field()
            )));
        }
        Ok(LinMap {
            field,
            domain_dims,
            codomain_dims,
            entries,
        })
    }

    pub fn zero(field: Field, domain_dims: &[usize], codomain_dims: &[usize]) -> LinMap {
        let n = total(domain_dims) * total(codomain_dims);
        LinMap::new(
            field,
            domain_dims.to_vec(),
            codomain_dims.to_vec(),
            vec![field.zero(); n],
        )
        .expect("zero map dimensions")
    }

    pub fn identity(field: Field, dims: &[usize]) -> LinMap {
        LinMap::from_fn(
            field,
            dims,
            dims,
            |r, c| if r == c { field.one() } else { field.zero() },
        )
    }

    /// Builds the map entry by entry; `entry(row, col)` is the coefficient of codomain
    /// basis vector `row` in the image of domain basis vector `col`.
    pub fn from_fn(
        field: Field,
        domain_dims: &[usize],
        codomain_dims: &[usize],
        mut entry: impl FnMut(usize, usize) -> Scalar,
    ) -> LinMap {
        let (rows, cols) = (total(codomain_dims), total(domain_dims));
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(entry(r, c));
            }
        }
        LinMap::new(field, domain_dims.to_vec(), codomain_dims.to_vec(), entries).expect("from_fn dimensions")
    }

    pub fn from_rows(
        field: Field,
        domain_dims: &[usize],
        codomain_dims: &[usize],
        rows: Vec<Vec<Scalar>>,
    ) -> Result<LinMap> {
        let cols = total(domain_dims);
        if rows.len() != total(codomain_dims) {
            return Err(Error::Shape(format!(
                "{} rows given for codomain of total dimension {}",
                rows.len(),
                total(codomain_dims)
            )));
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::Shape(format!(
                "row {i} has length {}, expected {cols}",
                row.len()
            )));
        }
        LinMap::new(
            field,
            domain_dims.to_vec(),
            codomain_dims.to_vec(),
            rows.into_iter().flatten().collect(),
        )
    }

    /// The map sending domain basis vector `j` to `images[j]`.
    pub fn from_images(
        field: Field,
        domain_dims: &[usize],
        codomain_dims: &[usize],
        images: &[Vec<Scalar>],
    ) -> Result<LinMap> {
        let (rows, cols) = (total(codomain_dims), total(domain_dims));
        if images.len() != cols {
            return Err(Error::Shape(format!(
                "{} images given for {cols} basis vectors",
                images.len()
            )));
        }
        if let Some((j, img)) = images.iter().enumerate().find(|(_, v)| v.len() != rows) {
            return Err(Error::Shape(format!(
                "image {j} has length {}, expected {rows}",
                img.len()
            )));
        }
        check_dims(domain_dims, "domain")?;
        check_dims(codomain_dims, "codomain")?;
        Ok(LinMap::from_fn(field, domain_dims, codomain_dims, |r, c| {
            images[c][r].clone()
        }))
    }

    /// The flip `X ⊗ Y → Y ⊗ X`.
    pub fn swap(field: Field, left: usize, right: usize) -> LinMap {
        LinMap::from_fn(field, &[left, right], &[right, left], |r, c| {
            let (x, y) = (c / right, c % right);
            if r == y * left + x {
                field.one()
            } else {
                field.zero()
            }
        })
    }

    /// The map `k → X` sending 1 to `vector`.
    pub fn from_vector(field: Field, vector: &[Scalar], dims: &[usize]) -> Result<LinMap> {
        LinMap::from_images(field, &[1], dims, &[vector.to_vec()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn domain_dims(&self) -> &[usize] {
        &self.domain_dims
    }

    pub fn codomain_dims(&self) -> &[usize] {
        &self.codomain_dims
    }

    pub fn domain_total(&self) -> usize {
        total(&self.domain_dims)
    }

    pub fn codomain_total(&self) -> usize {
        total(&self.codomain_dims)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.domain_total() + col]
    }

    pub fn row(&self, row: usize) -> &[Scalar] {
        let cols = self.domain_total();
        &self.entries[row * cols..(row + 1) * cols]
    }

    /// Image of domain basis vector `col`.
    pub fn column(&self, col: usize) -> Vec<Scalar> {
        (0..self.codomain_total()).map(|r| self.get(r, col).clone()).collect()
    }

    /// Copy with one entry replaced.
    pub fn with_entry(&self, row: usize, col: usize, value: Scalar) -> LinMap {
        let mut out = self.clone();
        let cols = out.domain_total();
        out.entries[row * cols + col] = value;
        out
    }

    /// Same matrix with different factor lists of equal totals.
    pub fn reshape(&self, domain_dims: &[usize], codomain_dims: &[usize]) -> Result<LinMap> {
        if total(domain_dims) != self.domain_total() || total(codomain_dims) != self.codomain_total() {
            return Err(Error::Shape(format!(
                "cannot reshape {:?} -> {:?} as {:?} -> {:?}",
                self.domain_dims, self.codomain_dims, domain_dims, codomain_dims
            )));
        }
        LinMap::new(
            self.field,
            domain_dims.to_vec(),
            codomain_dims.to_vec(),
            self.entries.clone(),
        )
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap> {
        if self.domain_total() != g.codomain_total() {
            return Err(Error::Shape(format!(
                "cannot compose {:?} -> {:?} after {:?} -> {:?}",
                self.domain_dims, self.codomain_dims, g.domain_dims, g.codomain_dims
            )));
        }
        let (rows, inner, cols) = (self.codomain_total(), self.domain_total(), g.domain_total());
        let sparse_g: Vec<Vec<(usize, &Scalar)>> = (0..inner)
            .map(|k| g.row(k).iter().enumerate().filter(|(_, s)| !s.is_zero()).collect())
            .collect();
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            let mut acc = vec![self.field.zero(); cols];
            for (k, fik) in self.row(i).iter().enumerate() {
                if fik.is_zero() {
                    continue;
                }
                for &(j, gkj) in &sparse_g[k] {
                    acc[j] = &acc[j] + &(fik * gkj);
                }
            }
            entries.extend(acc);
        }
        LinMap::new(self.field, g.domain_dims.clone(), self.codomain_dims.clone(), entries)
    }

    /// Kronecker product `self ⊗ g`; factor lists concatenate.
    pub fn tensor(&self, g: &LinMap) -> LinMap {
        let (gr, gc) = (g.codomain_total(), g.domain_total());
        let cols = self.domain_total() * gc;
        let mut entries = vec![self.field.zero(); self.codomain_total() * gr * cols];
        for i in 0..self.codomain_total() {
            for j in 0..self.domain_total() {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..gr {
                    for l in 0..gc {
                        let b = g.get(k, l);
                        if !b.is_zero() {
                            entries[(i * gr + k) * cols + j * gc + l] = a * b;
                        }
                    }
                }
            }
        }
        let domain = [self.domain_dims.as_slice(), g.domain_dims.as_slice()].concat();
        let codomain = [self.codomain_dims.as_slice(), g.codomain_dims.as_slice()].concat();
        LinMap::new(self.field, domain, codomain, entries).expect("kronecker dimensions")
    }

    /// `maps[0] ⊗ maps[1] ⊗ ...`.
    pub fn tensor_all(maps: &[&LinMap]) -> LinMap {
        let (first, rest) = maps.split_first().expect("tensor_all needs at least one map");
        rest.iter().fold((*first).clone(), |acc, m| acc.tensor(m))
    }

    /// `maps[0] ∘ maps[1] ∘ ...`, in the order the composite is written.
    ///
    /// Only for composites whose shapes follow from already-validated data; a
    /// mismatch here is a bug in the caller.
    pub(crate) fn chain(maps: &[&LinMap]) -> LinMap {
        let (last, rest) = maps.split_last().expect("chain needs at least one map");
        rest.iter().rev().fold((*last).clone(), |acc, f| {
            f.compose(&acc)
                .unwrap_or_else(|e| panic!("composite shape invariant violated: {e}"))
        })
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.domain_total() {
            return Err(Error::Shape(format!(
                "vector of length {} applied to map with domain dimension {}",
                v.len(),
                self.domain_total()
            )));
        }
        Ok((0..self.codomain_total())
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    /// Exact entrywise equality; shapes must agree in flat totals.
    pub fn equals(&self, g: &LinMap) -> Result<bool> {
        Ok(self.first_difference(g)?.is_none())
    }

    pub fn first_difference(&self, g: &LinMap) -> Result<Option<Difference>> {
        if self.domain_total() != g.domain_total() || self.codomain_total() != g.codomain_total() {
            return Err(Error::Shape(format!(
                "cannot compare {}x{} with {}x{}",
                self.codomain_total(),
                self.domain_total(),
                g.codomain_total(),
                g.domain_total()
            )));
        }
        let mut first = None;
        let mut differing = 0;
        for c in 0..self.domain_total() {
            let bad_row = (0..self.codomain_total()).find(|&r| self.get(r, c) != g.get(r, c));
            if let Some(r) = bad_row {
                differing += 1;
                first.get_or_insert((c, r));
            }
        }
        Ok(first.map(|(column, row)| Difference {
            column,
            row,
            differing_columns: differing,
        }))
    }

    pub fn add(&self, g: &LinMap) -> Result<LinMap> {
        self.zip_with(g, |a, b| a + b)
    }

    pub fn sub(&self, g: &LinMap) -> Result<LinMap> {
        self.zip_with(g, |a, b| a - b)
    }

    fn zip_with(&self, g: &LinMap, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<LinMap> {
        if self.domain_total() != g.domain_total() || self.codomain_total() != g.codomain_total() {
            return Err(Error::Shape("entrywise operation on maps of different shapes".into()));
        }
        let entries = self.entries.iter().zip(&g.entries).map(|(a, b)| op(a, b)).collect();
        LinMap::new(
            self.field,
            self.domain_dims.clone(),
            self.codomain_dims.clone(),
            entries,
        )
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        LinMap {
            entries: self.entries.iter().map(|a| a * s).collect(),
            ..self.clone()
        }
    }

    pub fn is_identity(&self) -> bool {
        self.domain_total() == self.codomain_total()
            && (0..self.codomain_total()).all(|r| {
                self.row(r)
                    .iter()
                    .enumerate()
                    .all(|(c, s)| if r == c { s.is_one() } else { s.is_zero() })
            })
    }

    /// Exact inverse by Gauss-Jordan elimination; `None` if singular or not square.
    pub fn inverse(&self) -> Option<LinMap> {
        let n = self.domain_total();
        if n != self.codomain_total() {
            return None;
        }
        let zero = self.field.zero();
        let one = self.field.one();
        let mut left: Vec<Vec<Scalar>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut right: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { one.clone() } else { zero.clone() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !left[r][col].is_zero())?;
            left.swap(col, pivot);
            right.swap(col, pivot);
            let inv = left[col][col].inv().expect("nonzero pivot");
            for c in 0..n {
                left[col][c] = &left[col][c] * &inv;
                right[col][c] = &right[col][c] * &inv;
            }
            for r in 0..n {
                if r == col || left[r][col].is_zero() {
                    continue;
                }
                let factor = left[r][col].clone();
                for c in 0..n {
                    left[r][c] = &left[r][c] - &(&factor * &left[col][c]);
                    right[r][c] = &right[r][c] - &(&factor * &right[col][c]);
                }
            }
        }
        LinMap::from_rows(self.field, &self.codomain_dims, &self.domain_dims, right).ok()
    }
}

/// Coordinates of `x ⊗ y` in the row-major basis.
pub fn kron_vectors(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(a * b);
        }
    }
    out
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "LinMap {:?} -> {:?} over {}",
            self.domain_dims, self.codomain_dims, self.field
        )?;
        for r in 0..self.codomain_total() {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::Rationals.int(n)
    }

    fn square(rows: &[&[i64]]) -> LinMap {
        let n = rows.len();
        let rows = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        LinMap::from_rows(Field::Rationals, &[n], &[n], rows).unwrap()
    }

    #[test]
    fn identity_laws() {
        let f = square(&[&[1, 2], &[3, 4]]);
        let id = LinMap::identity(Field::Rationals, &[2]);
        assert_eq!(id.compose(&f).unwrap(), f);
        assert_eq!(f.compose(&id).unwrap(), f);
    }

    #[test]
    fn identity_tensor_identity() {
        let id2 = LinMap::identity(Field::Rationals, &[2]);
        let id3 = LinMap::identity(Field::Rationals, &[3]);
        let id6 = id2.tensor(&id3);
        assert!(id6.is_identity());
        assert_eq!(id6.domain_dims(), &[2, 3]);
        assert!(id6.equals(&LinMap::identity(Field::Rationals, &[6])).unwrap());
    }

    #[test]
    fn scalar_tensor() {
        let a = LinMap::from_rows(Field::Rationals, &[1], &[1], vec![vec![q(3)]]).unwrap();
        let b = LinMap::from_rows(
            Field::Rationals,
            &[1],
            &[1],
            vec![vec![Field::Rationals.ratio(-1, 2).unwrap()]],
        )
        .unwrap();
        assert_eq!(a.tensor(&b).get(0, 0), &Field::Rationals.ratio(-3, 2).unwrap());
    }

    #[test]
    fn compose_shape_mismatch() {
        let f = LinMap::zero(Field::Rationals, &[2], &[3]);
        let g = LinMap::zero(Field::Rationals, &[2], &[2]);
        assert!(f.compose(&g).is_ok());
        assert!(matches!(g.compose(&f), Err(Error::Shape(_))));
    }

    #[test]
    fn apply_identity_and_zero() {
        let v = vec![q(1), q(-2), q(5)];
        assert_eq!(LinMap::identity(Field::Rationals, &[3]).apply(&v).unwrap(), v);
        assert_eq!(
            LinMap::zero(Field::Rationals, &[3], &[2]).apply(&v).unwrap(),
            vec![q(0), q(0)]
        );
        assert!(LinMap::identity(Field::Rationals, &[2]).apply(&v).is_err());
    }

    #[test]
    fn identity_differs_from_zero() {
        let id = LinMap::identity(Field::Rationals, &[2]);
        let zero = LinMap::zero(Field::Rationals, &[2], &[2]);
        assert!(id.equals(&id).unwrap());
        assert!(!id.equals(&zero).unwrap());
        let diff = id.first_difference(&zero).unwrap().unwrap();
        assert_eq!((diff.column, diff.row, diff.differing_columns), (0, 0, 2));
    }

    #[test]
    fn swap_flips_factors() {
        let s = LinMap::swap(Field::Rationals, 2, 3);
        let x = vec![q(1), q(2)];
        let y = vec![q(3), q(4), q(5)];
        assert_eq!(s.apply(&kron_vectors(&x, &y)).unwrap(), kron_vectors(&y, &x));
    }

    #[test]
    fn inverse_of_triangular() {
        let f = square(&[&[1, 2, 0], &[0, 1, 3], &[0, 0, 2]]);
        let inv = f.inverse().unwrap();
        assert!(f.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&f).unwrap().is_identity());
        assert!(square(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn inverse_over_prime_field() {
        let f5 = Field::Prime(5);
        let m = LinMap::from_fn(f5, &[2], &[2], |r, c| f5.int((r * 2 + c + 1) as i64));
        let inv = m.inverse().unwrap();
        assert!(m.compose(&inv).unwrap().is_identity());
    }
}
