//! Small finite fields used by the catalog constructors.
//!
//! An element of `F_q`, `q = p^f`, is numbered by its coefficient vector
//! over the fixed defining polynomial: `c_0 + c_1 p + ... + c_{f-1} p^{f-1}`
//! for the element `c_0 + c_1 t + ... + c_{f-1} t^{f-1}`. So `0` and `1`
//! are numbered `0` and `1`.

use crate::error::{Error, Result};

/// Monic defining polynomials for the non-prime fields, low coefficients
/// first and the leading one omitted.
const DEFINING_POLYNOMIALS: &[(u32, u32, &[u32])] = &[
    (4, 2, &[1, 1]),          // t^2 + t + 1
    (8, 2, &[1, 1, 0]),       // t^3 + t + 1
    (9, 3, &[1, 0]),          // t^2 + 1
    (16, 2, &[1, 1, 0, 0]),   // t^4 + t + 1
    (25, 5, &[2, 1]),         // t^2 + t + 2
    (27, 3, &[1, 2, 0]),      // t^3 - t + 1
    (32, 2, &[1, 0, 1, 0, 0]), // t^5 + t^2 + 1
    (49, 7, &[3, 1]),         // t^2 + t + 3
];

const MAX_PRIME: u32 = 251;

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    f: u32,
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    primitive: u32,
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Splits `q` as `p^f` when `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut f = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        f += 1;
    }
    (r == 1).then_some((p, f))
}

impl FiniteField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, f) = prime_power(q).ok_or(Error::UnsupportedField(q))?;
        let modulus: Vec<u32> = if f == 1 {
            if !is_prime(p) || p > MAX_PRIME {
                return Err(Error::UnsupportedField(q));
            }
            vec![]
        } else {
            DEFINING_POLYNOMIALS
                .iter()
                .find(|(qq, _, _)| *qq == q)
                .map(|(_, _, m)| m.to_vec())
                .ok_or(Error::UnsupportedField(q))?
        };
        let digits = |mut x: u32| -> Vec<u32> {
            (0..f)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let number = |v: &[u32]| -> u32 { v.iter().rev().fold(0, |acc, &d| acc * p + d) };
        let qs = q as usize;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = number(&s);
                // schoolbook product, then reduce t^k for k >= f
                let mut prod = vec![0u32; (2 * f) as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for k in (f as usize..prod.len()).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    // t^f = -(m_0 + m_1 t + ...)
                    for (i, m) in modulus.iter().enumerate() {
                        let idx = k - f as usize + i;
                        prod[idx] = (prod[idx] + (p - (c * m) % p)) % p;
                    }
                }
                mul[(a * q + b) as usize] = number(&prod[..f as usize]);
            }
        }
        let mut neg = vec![0; qs];
        let mut inv = vec![0; qs];
        for a in 0..q {
            neg[a as usize] = (0..q).find(|&b| add[(a * q + b) as usize] == 0).unwrap();
            if a != 0 {
                inv[a as usize] = (1..q)
                    .find(|&b| mul[(a * q + b) as usize] == 1)
                    .ok_or(Error::UnsupportedField(q))?;
            }
        }
        let mut field = FiniteField {
            p,
            f,
            q,
            add,
            mul,
            neg,
            inv,
            primitive: 0,
        };
        field.primitive = (1..q)
            .find(|&g| field.multiplicative_order(g) == q - 1)
            .ok_or(Error::UnsupportedField(q))?;
        Ok(field)
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    /// Smallest-numbered generator of the multiplicative group.
    pub fn primitive(&self) -> u32 {
        self.primitive
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `inv(0)` is `0`.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u32, k: u32) -> u32 {
        (0..k).fold(1, |acc, _| self.mul(acc, a))
    }

    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p)
    }

    fn multiplicative_order(&self, a: u32) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49] {
            let k = FiniteField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(k.add(a, k.neg(a)), 0);
                if a != 0 {
                    assert_eq!(k.mul(a, k.inv(a)), 1);
                }
                for b in 0..q {
                    assert_eq!(k.mul(a, b), k.mul(b, a));
                    for c in [0, 1, q - 1] {
                        let lhs = k.mul(a, k.add(b, c));
                        let rhs = k.add(k.mul(a, b), k.mul(a, c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
            assert_eq!(k.multiplicative_order(k.primitive()), q - 1);
        }
    }

    #[test]
    fn frobenius_is_additive() {
        let k = FiniteField::new(27).unwrap();
        for a in 0..27 {
            for b in 0..27 {
                assert_eq!(k.frobenius(k.add(a, b)), k.add(k.frobenius(a), k.frobenius(b)));
            }
        }
        assert_eq!(k.pow(k.frobenius(5), 1), k.mul(k.mul(5, 5), 5));
    }

    #[test]
    fn unsupported_orders() {
        assert!(FiniteField::new(6).is_err());
        assert!(FiniteField::new(1).is_err());
        assert!(FiniteField::new(81).is_err());
        assert_eq!(prime_power(27), Some((3, 3)));
    }
}
