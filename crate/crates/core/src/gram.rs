//! Gram data of the functions `phi_0, phi_1, ..., phi_n` on two shells.
//!
//! `phi_0 = 1` and `phi_i(x) = n - 2 d(e_i, x)`. The inner product is the
//! shell-averaged one: `<f, g> = sum_nu W_nu / |X_{r_nu}| * sum_{x in X_{r_nu}} f(x) g(x)`.
//! All matrices here use the basis order `[phi_1, ..., phi_n, phi_0]`.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct GramParameters<T> {
    pub n: usize,
    pub r1: usize,
    pub r2: usize,
    pub w1: T,
    pub w2: T,
    /// `<phi_i, phi_0>`
    pub d0: T,
    /// `<phi_i, phi_i>`
    pub c0: T,
    /// `<phi_i, phi_j>`, `i != j`
    pub c2: T,
}

impl<T: Scalar> GramParameters<T> {
    pub fn total_weight(&self) -> T {
        self.w1.clone() + self.w2.clone()
    }
}

fn int<T: Scalar>(v: i64) -> T {
    T::from_i64(v)
}

/// Closed forms for `d0`, `c0`, `c2` given total shell weights `w1`, `w2`.
pub fn gram_closed_form<T: Scalar>(n: usize, r1: usize, r2: usize, w1: T, w2: T) -> Result<GramParameters<T>> {
    if !(1 <= r1 && r1 < r2 && r2 < n) {
        return Err(Error::DegenerateShells { n, r1, r2 });
    }
    let ni = n as i64;
    let mut d0 = T::zero();
    let mut c0 = T::zero();
    let mut c2 = T::zero();
    for (r, w) in [(r1 as i64, &w1), (r2 as i64, &w2)] {
        d0 = d0 + w.clone() * int(ni - 2 * r);
        let p0 = 4 * (ni - 4) * r * r - 4 * ni * (ni - 4) * r + ni * (ni - 2) * (ni - 2);
        c0 = c0 + w.clone() * int(p0);
        let q = ni * ni - 5 * ni + 8;
        let p2 = 4 * q * r * r - 4 * ni * q * r + ni * (ni - 1) * (ni - 2) * (ni - 2);
        c2 = c2 + w.clone() * int(p2);
    }
    let d0 = d0 * int(ni - 2) / int(ni);
    let c0 = c0 / int(ni);
    let c2 = c2 / int(ni * (ni - 1));
    Ok(GramParameters { n, r1, r2, w1, w2, d0, c0, c2 })
}

/// The `(n+1) x (n+1)` Gram matrix in basis order `[phi_1, ..., phi_n, phi_0]`.
pub fn gram_matrix<T: Scalar>(g: &GramParameters<T>) -> Matrix<T> {
    let n = g.n;
    Matrix::from_fn(n + 1, n + 1, |i, j| match (i == n, j == n) {
        (true, true) => g.total_weight(),
        (true, false) | (false, true) => g.d0.clone(),
        (false, false) if i == j => g.c0.clone(),
        _ => g.c2.clone(),
    })
}

/// Result of orthogonalising a basis: row `i` of `coefficients` expresses `h_i`
/// in the original basis; `norms[i] = <h_i, h_i>`.
#[derive(Debug, Clone, PartialEq)]
pub struct Orthogonalization<T> {
    pub coefficients: Matrix<T>,
    pub norms: Vec<T>,
}

/// Gram-Schmidt for the basis `[phi_1, ..., phi_n, phi_0]` using the closed forms.
pub fn gram_schmidt_closed_form<T: Scalar>(g: &GramParameters<T>) -> Result<Orthogonalization<T>> {
    let n = g.n;
    let (c0, c2, d0) = (g.c0.clone(), g.c2.clone(), g.d0.clone());
    if c0 == c2 {
        return Err(Error::DegenerateGram("c0 equals c2".into()));
    }
    // denominators c0 + (i-2) c2 for i = 2..=n+1, indexed by i
    let denom = |i: usize| c0.clone() + c2.clone() * int(i as i64 - 2);
    for i in 2..=n + 1 {
        if denom(i).is_zero() {
            return Err(Error::DegenerateGram(format!("c0 + {}*c2 vanishes", i - 2)));
        }
    }
    let mut coefficients = Matrix::identity(n + 1);
    let mut norms = Vec::with_capacity(n + 1);
    norms.push(c0.clone());
    for i in 2..=n {
        let f = -(c2.clone() / denom(i));
        for j in 0..i - 1 {
            coefficients.set(i - 1, j, f.clone());
        }
        norms.push((c0.clone() - c2.clone()) * denom(i + 1) / denom(i));
    }
    let f = -(d0.clone() / denom(n + 1));
    for j in 0..n {
        coefficients.set(n, j, f.clone());
    }
    norms.push(g.total_weight() - int::<T>(n as i64) * d0.clone() * d0 / denom(n + 1));
    Ok(Orthogonalization { coefficients, norms })
}

/// Classical Gram-Schmidt on an arbitrary symmetric Gram matrix.
pub fn gram_schmidt_generic<T: Scalar>(gram: &Matrix<T>) -> Result<Orthogonalization<T>> {
    if !gram.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let m = gram.rows();
    let mut coefficients = Matrix::<T>::identity(m);
    let mut norms: Vec<T> = Vec::with_capacity(m);
    for i in 0..m {
        for j in 0..i {
            // <phi_i, h_j> = sum_k L[j][k] G[i][k]
            let mut ip = T::zero();
            for k in 0..=j {
                ip = ip + coefficients.get(j, k).clone() * gram.get(i, k).clone();
            }
            let f = ip / norms[j].clone();
            for k in 0..=j {
                let v = coefficients.get(i, k).clone() - f.clone() * coefficients.get(j, k).clone();
                coefficients.set(i, k, v);
            }
        }
        let mut norm = T::zero();
        for k in 0..=i {
            norm = norm + coefficients.get(i, k).clone() * gram.get(i, k).clone();
        }
        if norm.is_zero() {
            return Err(Error::SingularLeadingMinor(i + 1));
        }
        norms.push(norm);
    }
    Ok(Orthogonalization { coefficients, norms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{integer, rational};
    use crate::Rational;

    #[test]
    fn small_closed_form_values() {
        let g = gram_closed_form(6, 2, 3, integer(3), integer(4)).unwrap();
        assert_eq!((g.d0, g.c0, g.c2), (integer(4), integer(32), integer(0)));
    }

    #[test]
    fn mirrored_shells_cancel_d0() {
        let g = gram_closed_form(11, 3, 8, rational(5, 2), rational(5, 2)).unwrap();
        assert_eq!(g.d0, integer(0));
    }

    #[test]
    fn rejects_bad_shells() {
        assert!(gram_closed_form(6, 0, 3, integer(1), integer(1)).is_err());
        assert!(gram_closed_form(6, 3, 3, integer(1), integer(1)).is_err());
        assert!(gram_closed_form(6, 2, 6, integer(1), integer(1)).is_err());
    }

    #[test]
    fn orthogonal_basis_is_left_alone() {
        let g = gram_closed_form(6, 2, 3, integer(3), integer(4)).unwrap();
        let o = gram_schmidt_closed_form(&g).unwrap();
        for i in 0..6 {
            assert_eq!(o.norms[i], g.c0);
            for j in 0..i {
                assert_eq!(*o.coefficients.get(i, j), integer(0));
            }
        }
    }

    #[test]
    fn two_by_two_second_norm() {
        let (c0, c2) = (integer(7), integer(3));
        let gram = Matrix::from_rows(vec![vec![c0.clone(), c2.clone()], vec![c2.clone(), c0.clone()]]);
        let o = gram_schmidt_generic(&gram).unwrap();
        let expected: Rational = (c0.clone() - c2.clone()) * (c0.clone() + c2) / c0;
        assert_eq!(o.norms[1], expected);
    }

    #[test]
    fn identity_has_unit_norms() {
        let o = gram_schmidt_generic(&Matrix::<Rational>::identity(5)).unwrap();
        assert!(o.norms.iter().all(|v| *v == integer(1)));
    }

    #[test]
    fn singular_minor_is_reported() {
        let gram = Matrix::from_rows(vec![vec![integer(1), integer(1)], vec![integer(1), integer(1)]]);
        assert_eq!(gram_schmidt_generic(&gram), Err(Error::SingularLeadingMinor(2)));
    }

    #[test]
    fn closed_form_matches_generic_on_small_row() {
        // total weights of the 7-point design with shells 2 and 3 in H(6,2)
        let g = gram_closed_form(6, 2, 3, integer(3), integer(4)).unwrap();
        let a = gram_schmidt_closed_form(&g).unwrap();
        let b = gram_schmidt_generic(&gram_matrix(&g)).unwrap();
        assert_eq!(a, b);
    }
}
