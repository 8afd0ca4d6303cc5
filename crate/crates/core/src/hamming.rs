//! Binomials, Krawtchouk values and shell intersection numbers of H(n,2).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Machine-word binomial for the small arguments used in search code.
pub fn binomial_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// `Q_k(u) = sum_i (-1)^i C(n-u, k-i) C(u, i)`.
pub fn krawtchouk(n: usize, k: usize, u: usize) -> Result<BigInt> {
    if k > n || u > n {
        return Err(Error::OutOfRange(format!("krawtchouk(n={n}, k={k}, u={u})")));
    }
    let mut acc = BigInt::zero();
    for i in 0..=k.min(u) {
        let term = binomial((n - u) as u64, (k - i) as i64) * binomial(u as u64, i as i64);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// All `Q_k(u)` for one `n`, computed once.
#[derive(Debug, Clone)]
pub struct KrawtchoukTable {
    n: usize,
    values: Vec<BigInt>,
}

impl KrawtchoukTable {
    pub fn new(n: usize) -> Self {
        let mut values = Vec::with_capacity((n + 1) * (n + 1));
        for k in 0..=n {
            for u in 0..=n {
                values.push(krawtchouk(n, k, u).expect("indices in range"));
            }
        }
        Self { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize, u: usize) -> &BigInt {
        assert!(k <= self.n && u <= self.n, "krawtchouk index out of range");
        &self.values[k * (self.n + 1) + u]
    }
}

/// Number of weight-`r` words at distance `nu` from a fixed word of weight `j`.
pub fn shell_intersection(n: usize, j: usize, r: usize, nu: usize) -> BigInt {
    // distance = j + r - 2i where i = size of the common support
    let s = j + r;
    if nu > s || (s - nu) % 2 != 0 {
        return BigInt::zero();
    }
    let i = (s - nu) / 2;
    if i > j.min(r) || r < i || n < j {
        return BigInt::zero();
    }
    binomial(j as u64, i as i64) * binomial((n - j) as u64, (r - i) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(9, 0), BigInt::from(1));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial_u64(30, 15), 155117520);
    }

    #[test]
    fn binomial_agrees_with_pascal_triangle() {
        let mut row = vec![BigInt::one()];
        for n in 1..=40u64 {
            let mut next = vec![BigInt::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for k in 0..=n {
                assert_eq!(binomial(n, k as i64), row[k as usize]);
            }
        }
        assert_eq!(binomial(30, 15), BigInt::from(155117520u64));
    }

    #[test]
    fn krawtchouk_small_values() {
        assert_eq!(krawtchouk(6, 1, 2).unwrap(), BigInt::from(2));
        assert_eq!(krawtchouk(6, 2, 2).unwrap(), BigInt::from(-1));
        for u in 0..=9 {
            assert_eq!(krawtchouk(9, 0, u).unwrap(), BigInt::one());
            assert_eq!(krawtchouk(9, 1, u).unwrap(), BigInt::from(9 - 2 * u as i64));
        }
        assert!(krawtchouk(6, 7, 0).is_err());
    }

    #[test]
    fn quadratic_krawtchouk_closed_form() {
        for n in 2..=20usize {
            for u in 0..=n {
                let d = n as i64 - 2 * u as i64;
                assert_eq!(krawtchouk(n, 2, u).unwrap(), BigInt::from((d * d - n as i64) / 2));
            }
        }
    }

    #[test]
    fn shell_intersection_counts_by_enumeration() {
        let n = 6;
        let base: u64 = 0b1;
        for (nu, expect) in [(1usize, 5u64), (3, 10)] {
            let count = (0u64..1 << n)
                .filter(|x| x.count_ones() == 2 && (x ^ base).count_ones() as usize == nu)
                .count() as u64;
            assert_eq!(count, expect);
            assert_eq!(shell_intersection(n, 1, 2, nu), BigInt::from(expect));
        }
        for r in 0..=n {
            assert_eq!(shell_intersection(n, 0, r, r), binomial(n as u64, r as i64));
        }
    }
}
