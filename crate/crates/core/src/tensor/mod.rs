//! Exact scalars and the basis-indexed linear-map calculus.
//!
//! A basis of `X1 ⊗ X2 ⊗ ... ⊗ Xk` is indexed row-major: the multi-index
//! `(i1, ..., ik)` maps to `((i1 * d2 + i2) * d3 + i3) ...`. Kronecker products of
//! matrices follow the same convention, so `(f ⊗ g)(x ⊗ y) = f(x) ⊗ g(y)` holds on
//! flat coordinates.

mod linmap;
mod scalar;

pub use linmap::{kron_vectors, Difference, LinMap};
pub use scalar::{Field, Scalar};

use crate::error::{Error, Result};

/// Row-major flat index of `multi_index` in a tensor product with factor dimensions `dims`.
pub fn flat_index(multi_index: &[usize], dims: &[usize]) -> Result<usize> {
    if multi_index.len() != dims.len() {
        return Err(Error::Domain(format!(
            "multi-index has {} components but there are {} factors",
            multi_index.len(),
            dims.len()
        )));
    }
    let mut flat = 0usize;
    for (factor, (&i, &d)) in multi_index.iter().zip(dims).enumerate() {
        if i >= d {
            return Err(Error::Domain(format!(
                "index {i} out of range for factor {factor} of dimension {d}"
            )));
        }
        flat = flat * d + i;
    }
    Ok(flat)
}

/// Inverse of [`flat_index`].
pub fn unflatten(index: usize, dims: &[usize]) -> Result<Vec<usize>> {
    let total: usize = dims.iter().product();
    if index >= total {
        return Err(Error::Domain(format!(
            "flat index {index} out of range for total dimension {total}"
        )));
    }
    let mut out = vec![0; dims.len()];
    let mut rest = index;
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = rest % d;
        rest /= d;
    }
    Ok(out)
}

/// Coordinate vector of the `i`-th basis element of a `dim`-dimensional space.
pub fn basis_vector(field: Field, dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); dim];
    v[i] = field.one();
    v
}
