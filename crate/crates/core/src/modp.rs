//! Arithmetic and dense linear algebra over a prime field `F_p`.

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    p: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(is_prime(p));
        Fp { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut a: u64, mut k: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while k > 0 {
            if k & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            k >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    /// Smallest generator of `F_p^*`.
    pub fn primitive_root(&self) -> u64 {
        let n = self.p - 1;
        let mut factors = Vec::new();
        let mut m = n;
        let mut d = 2;
        while d * d <= m {
            if m.is_multiple_of(d) {
                factors.push(d);
                while m.is_multiple_of(d) {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, n / q) != 1))
            .unwrap_or(1)
    }

    /// Characteristic polynomial of a square matrix, low coefficients
    /// first, via reduction to upper Hessenberg form.
    pub fn charpoly(&self, m: &[Vec<u64>]) -> Vec<u64> {
        let n = m.len();
        let mut h: Vec<Vec<u64>> = m.to_vec();
        for col in 0..n.saturating_sub(2) {
            let pivot = (col + 1..n).find(|&i| h[i][col] != 0);
            let Some(piv) = pivot else { continue };
            if piv != col + 1 {
                h.swap(piv, col + 1);
                for row in h.iter_mut() {
                    row.swap(piv, col + 1);
                }
            }
            let inv = self.inv(h[col + 1][col]);
            for i in col + 2..n {
                let u = self.mul(h[i][col], inv);
                if u == 0 {
                    continue;
                }
                for k in 0..n {
                    let t = self.mul(u, h[col + 1][k]);
                    h[i][k] = self.sub(h[i][k], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[i]);
                    row[col + 1] = self.add(row[col + 1], t);
                }
            }
        }
        // p_k = (x - h_kk) p_{k-1} - Σ_{i<k} h_ik (Π_{j=i+1..k} h_{j,j-1}) p_{i-1}
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let prev = &polys[k];
            let mut next = vec![0u64; k + 2];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                next[d] = self.sub(next[d], self.mul(h[k][k], c));
            }
            let mut prod = 1u64;
            for i in (0..k).rev() {
                prod = self.mul(prod, h[i + 1][i]);
                let coef = self.mul(h[i][k], prod);
                if coef == 0 {
                    continue;
                }
                for (d, &c) in polys[i].iter().enumerate() {
                    next[d] = self.sub(next[d], self.mul(coef, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    pub fn eval(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// All roots in `F_p`, by exhaustive evaluation.
    pub fn roots(&self, poly: &[u64]) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(poly, x) == 0).collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, piv);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for k in 0..ncols {
                        let t = self.mul(f, rows[r][k]);
                        rows[i][k] = self.sub(rows[i][k], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of `{v : A v = 0}`.
    pub fn nullspace(&self, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = a.first().map_or(0, |r| r.len());
        let mut rows = a.to_vec();
        let pivots = self.rref(&mut rows);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; n];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.sub(0, rows[r][f]);
                }
                v
            })
            .collect()
    }
}
