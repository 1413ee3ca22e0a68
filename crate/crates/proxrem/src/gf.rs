//! Small finite fields GF(q).
//!
//! Elements are encoded as integers `0..q`. For prime q this is plain
//! modular arithmetic. For the supported prime powers the integer's base-p
//! digits are the coefficients of a polynomial over GF(p), multiplied
//! modulo a fixed irreducible:
//!
//! * GF(4): t^2 + t + 1 over GF(2)
//! * GF(8): t^3 + t + 1 over GF(2)
//! * GF(9): t^2 + 1 over GF(3) (irreducible there since -1 is not a
//!   square mod 3)

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GfError {
    #[error("no field of order {0}: not a prime and not one of 4, 8, 9")]
    Unsupported(u64),
}

#[derive(Debug, Clone)]
pub struct Gf {
    q: u64,
    p: u64,
    k: u32,
    /// Digits of the reduction image of t^k, lowest degree first (k > 1).
    red: Vec<u64>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Gf {
    pub fn new(q: u64) -> Result<Gf, GfError> {
        if is_prime(q) {
            return Ok(Gf {
                q,
                p: q,
                k: 1,
                red: Vec::new(),
            });
        }
        let (p, k, red) = match q {
            4 => (2, 2, vec![1, 1]),
            8 => (2, 3, vec![1, 1, 0]),
            9 => (3, 2, vec![2, 0]),
            _ => return Err(GfError::Unsupported(q)),
        };
        Ok(Gf { q, p, k, red })
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }

    fn digits(&self, a: u64) -> Vec<u64> {
        let mut d = Vec::with_capacity(self.k as usize);
        let mut a = a;
        for _ in 0..self.k {
            d.push(a % self.p);
            a /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da
            .iter()
            .zip(&db)
            .map(|(x, y)| (x + y) % self.p)
            .collect();
        self.undigits(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        debug_assert!(a < self.q);
        if self.k == 1 {
            return (self.p - a) % self.p;
        }
        let d: Vec<u64> = self
            .digits(a)
            .iter()
            .map(|&x| (self.p - x) % self.p)
            .collect();
        self.undigits(&d)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        if self.k == 1 {
            return a * b % self.p;
        }
        let k = self.k as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        for i in (k..2 * k - 1).rev() {
            let c = prod[i] % self.p;
            prod[i] = 0;
            for (j, &r) in self.red.iter().enumerate() {
                prod[i - k + j] += c * r;
            }
        }
        let low: Vec<u64> = prod[..k].iter().map(|&x| x % self.p).collect();
        self.undigits(&low)
    }

    /// Multiplicative inverse; `None` for 0.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }

    /// Dot product of two coordinate triples.
    pub fn dot3(&self, u: &[u64; 3], v: &[u64; 3]) -> u64 {
        let mut acc = 0;
        for i in 0..3 {
            acc = self.add(acc, self.mul(u[i], v[i]));
        }
        acc
    }
}
