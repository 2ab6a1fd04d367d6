//! Exact rational scalars, dense and row-sparse matrices.

mod matrix;
mod rational;

pub use matrix::{rref, Matrix, SparseMatrix, Vector};
pub use rational::{ParseRationalError, Rational};

/// Zero vector of the given length.
pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}
