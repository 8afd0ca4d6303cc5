//! Small finite fields `GF(p^k)` with table arithmetic.
//!
//! An element is stored as its index: the base-`p` digits of the index are the
//! coefficients of a polynomial of degree `< k`, least significant first.

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: usize,
    k: usize,
    q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

/// `(p, k)` with `q = p^k`, or `None` if `q` is not a prime power.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

fn digits(x: usize, p: usize, k: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut x = x;
    for _ in 0..k {
        out.push(x % p);
        x /= p;
    }
    out
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Product of two polynomials reduced modulo the monic `modulus` (low
/// coefficients first, leading 1 implicit).
fn poly_mul_mod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let k = modulus.len();
    let mut prod = vec![0; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (k..2 * k).rev() {
        let c = prod[deg];
        if c != 0 {
            // x^deg = x^(deg-k) * (-modulus)
            for (i, &m) in modulus.iter().enumerate() {
                prod[deg - k + i] = (prod[deg - k + i] + c * (p - m)) % p;
            }
            prod[deg] = 0;
        }
    }
    prod.truncate(k);
    prod
}

impl FiniteField {
    /// The field of order `q`; `None` unless `q` is a prime power.
    pub fn new(q: usize) -> Option<Self> {
        let (p, k) = prime_power(q)?;
        let add = (0..q * q)
            .map(|ab| {
                let (a, b) = (digits(ab / q, p, k), digits(ab % q, p, k));
                let s: Vec<usize> = a.iter().zip(&b).map(|(x, y)| (x + y) % p).collect();
                undigits(&s, p)
            })
            .collect();
        // first monic modulus of degree k without zero divisors
        for m in 0..q {
            let modulus = digits(m, p, k);
            let mul: Vec<usize> = (0..q * q)
                .map(|ab| {
                    let prod = poly_mul_mod(&digits(ab / q, p, k), &digits(ab % q, p, k), &modulus, p);
                    undigits(&prod, p)
                })
                .collect();
            let integral = (1..q).all(|a| (1..q).all(|b| mul[a * q + b] != 0));
            if integral {
                return Some(Self { p, k, q, add, mul });
            }
        }
        None
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).expect("additive inverse exists")
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Nonzero squares.
    pub fn squares(&self) -> Vec<bool> {
        let mut sq = vec![false; self.q];
        for x in 1..self.q {
            sq[self.mul(x, x)] = true;
        }
        sq
    }

    /// Quadratic character: 0, 1 or -1.
    pub fn chi(&self, squares: &[bool], x: usize) -> i8 {
        if x == 0 {
            0
        } else if squares[x] {
            1
        } else {
            -1
        }
    }
}
