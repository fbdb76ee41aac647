//! Exact arithmetic in the cyclotomic fields `Q(ζ_e)`.
//!
//! A value is stored in the power basis `1, ζ, .., ζ^{φ(e)-1}` obtained by
//! reducing modulo the cyclotomic polynomial `Φ_e`, with integer
//! numerators over one positive common denominator. That form is unique,
//! so equality is coefficient comparison once conductors agree.
//!
//! Text form: `E(e)[k:c,...]` lists the nonzero coefficients by increasing
//! power, each `c` an integer or `p/q` in lowest terms. Zero is `E(e)[]`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};

/// Reduction data for one conductor: `ζ^k` in the power basis for every
/// `k < e`.
struct Basis {
    phi: usize,
    powers: Vec<Vec<i32>>,
}

fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // Φ_n = Π_{d | n} (x^d - 1)^{μ(n/d)}
    let divisors: Vec<u32> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mobius = |mut m: u32| -> i32 {
        let mut mu = 1;
        let mut p = 2;
        while p * p <= m {
            if m.is_multiple_of(p) {
                m /= p;
                if m.is_multiple_of(p) {
                    return 0;
                }
                mu = -mu;
            }
            p += 1;
        }
        if m > 1 {
            mu = -mu;
        }
        mu
    };
    let mut poly = vec![1i64];
    for &d in &divisors {
        if mobius(n / d) == 1 {
            let d = d as usize;
            let mut next = vec![0i64; poly.len() + d];
            for (i, &c) in poly.iter().enumerate() {
                next[i + d] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &d in &divisors {
        if mobius(n / d) == -1 {
            // exact division by x^d - 1, from the top
            let d = d as usize;
            let deg = poly.len() - 1;
            let mut quot = vec![0i64; deg - d + 1];
            let mut rem = poly.clone();
            for k in (d..=deg).rev() {
                let c = rem[k];
                quot[k - d] = c;
                rem[k] = 0;
                rem[k - d] += c;
            }
            debug_assert!(rem.iter().all(|&c| c == 0));
            poly = quot;
        }
    }
    poly
}

fn basis(e: u32) -> Arc<Basis> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Basis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().unwrap().get(&e) {
        return b.clone();
    }
    let phi_poly = cyclotomic_polynomial(e);
    let phi = phi_poly.len() - 1;
    let mut powers = Vec::with_capacity(e as usize);
    let mut cur = vec![0i64; phi];
    if phi > 0 {
        cur[0] = 1;
    }
    for _ in 0..e {
        powers.push(
            cur.iter()
                .map(|&c| i32::try_from(c).expect("reduction coefficient fits in i32"))
                .collect(),
        );
        // multiply by ζ: shift up, then fold the x^φ term back
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..phi {
                cur[i] -= top * phi_poly[i];
            }
        }
    }
    let b = Arc::new(Basis { phi, powers });
    cache.lock().unwrap().insert(e, b.clone());
    b
}

/// Euler's totient of the conductor.
pub fn phi(e: u32) -> usize {
    basis(e).phi
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("cyclotomic coefficient overflow")
}

/// An element of `Q(ζ_e)` in canonical reduced form.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    num: Vec<i64>,
    den: i64,
}

impl Cyclotomic {
    pub fn zero(e: u32) -> Self {
        assert!(e > 0, "conductor must be positive");
        Cyclotomic {
            conductor: e,
            num: vec![0; phi(e)],
            den: 1,
        }
    }

    pub fn from_int(e: u32, k: i64) -> Self {
        let mut z = Self::zero(e);
        z.num[0] = k;
        z
    }

    pub fn one(e: u32) -> Self {
        Self::from_int(e, 1)
    }

    pub fn from_rational(e: u32, r: Ratio<i64>) -> Self {
        let mut z = Self::zero(e);
        z.num[0] = *r.numer();
        z.den = *r.denom();
        z.normalized()
    }

    /// `ζ_e^k`.
    pub fn root_of_unity(e: u32, k: i64) -> Self {
        Self::from_terms(e, [(k.rem_euclid(e as i64) as u32, 1)], 1)
    }

    /// `(Σ c_k ζ_e^k) / den` for arbitrary exponents `k` (taken mod `e`).
    pub fn from_terms<I>(e: u32, terms: I, den: i64) -> Self
    where
        I: IntoIterator<Item = (u32, i64)>,
    {
        let b = basis(e);
        let mut acc = vec![0i128; b.phi];
        for (k, c) in terms {
            if c == 0 {
                continue;
            }
            let row = &b.powers[(k % e) as usize];
            for (a, &r) in acc.iter_mut().zip(row) {
                *a += c as i128 * r as i128;
            }
        }
        Self::from_wide(e, &acc, den as i128)
    }

    fn from_wide(e: u32, acc: &[i128], den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = acc.iter().fold(den.abs(), |g, &c| g.gcd(&c));
        let sign = if den < 0 { -1 } else { 1 };
        Cyclotomic {
            conductor: e,
            num: acc.iter().map(|&c| narrow(sign * c / g)).collect(),
            den: narrow(den.abs() / g),
        }
    }

    fn normalized(mut self) -> Self {
        let g = self.num.iter().fold(self.den.abs(), |g, &c| g.gcd(&c));
        if self.den < 0 {
            self.den = -self.den;
            self.num.iter_mut().for_each(|c| *c = -*c);
        }
        if g > 1 {
            self.den /= g;
            self.num.iter_mut().for_each(|c| *c /= g);
        }
        self
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis numerators; divide by [`Cyclotomic::denominator`].
    pub fn numerators(&self) -> &[i64] {
        &self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    /// Nonzero coefficients as `(power, numerator)`, over the common
    /// denominator.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.num
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k as u32, c))
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&c| c == 0)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|&c| c == 0)
    }

    /// Whether the value lies in `Z[ζ_e]`; the power basis is an integral
    /// basis, so this is just whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.den == 1
    }

    pub fn to_rational(&self) -> Option<Ratio<i64>> {
        self.is_rational().then(|| Ratio::new(self.num[0], self.den))
    }

    pub fn to_integer(&self) -> Option<i64> {
        (self.is_rational() && self.den == 1).then_some(self.num[0])
    }

    /// Same value seen in `Q(ζ_target)`; `target` must be a multiple of the
    /// conductor.
    pub fn embed(&self, target: u32) -> Self {
        assert!(
            target.is_multiple_of(self.conductor),
            "cannot embed conductor {} into {target}",
            self.conductor
        );
        if target == self.conductor {
            return self.clone();
        }
        let step = target / self.conductor;
        Self::from_terms(target, self.terms().map(|(k, c)| (k * step, c)), self.den)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone());
        }
        let l = self.conductor.lcm(&other.conductor);
        (self.embed(l), other.embed(l))
    }

    pub fn conj(&self) -> Self {
        self.galois(self.conductor - 1)
    }

    /// Image under `ζ_e ↦ ζ_e^j`; `j` must be coprime to the conductor.
    pub fn galois(&self, j: u32) -> Self {
        let e = self.conductor;
        debug_assert!(j.gcd(&e) == 1, "{j} is not a unit mod {e}");
        let j = j as u64 % e as u64;
        Self::from_terms(e, self.terms().map(|(k, c)| ((k as u64 * j % e as u64) as u32, c)), self.den)
    }

    pub fn abs_square(&self) -> Self {
        self * &self.conj()
    }

    pub fn scale(&self, k: i64) -> Self {
        let acc: Vec<i128> = self.num.iter().map(|&c| c as i128 * k as i128).collect();
        Self::from_wide(self.conductor, &acc, self.den as i128)
    }

    pub fn div_int(&self, k: i64) -> Self {
        let acc: Vec<i128> = self.num.iter().map(|&c| c as i128).collect();
        Self::from_wide(self.conductor, &acc, self.den as i128 * k as i128)
    }

    /// Parses the bare coefficient list `[k:c,...]` for conductor `e`.
    pub fn parse_sparse(e: u32, s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| format!("expected `[..]`, found `{s}`"))?;
        let n = phi(e);
        let mut coeffs: Vec<Ratio<i128>> = vec![Ratio::from_integer(0); n];
        let mut last: Option<usize> = None;
        if !inner.trim().is_empty() {
            for entry in inner.split(',') {
                let (k, c) = entry
                    .split_once(':')
                    .ok_or_else(|| format!("expected `power:coefficient`, found `{entry}`"))?;
                let k: usize = k.trim().parse().map_err(|_| format!("bad power `{k}`"))?;
                if k >= n {
                    return Err(format!("power {k} is not below φ({e}) = {n}"));
                }
                if last.is_some_and(|l| l >= k) {
                    return Err("powers must be strictly increasing".into());
                }
                last = Some(k);
                let c = parse_rational(c.trim())?;
                if *c.numer() == 0 {
                    return Err("zero coefficients are not listed".into());
                }
                coeffs[k] = c;
            }
        }
        let den = coeffs.iter().fold(1i128, |l, c| l.lcm(c.denom()));
        let acc: Vec<i128> = coeffs.iter().map(|c| c.numer() * (den / c.denom())).collect();
        if acc.iter().any(|c| i64::try_from(*c).is_err()) || i64::try_from(den).is_err() {
            return Err("coefficient out of range".into());
        }
        Ok(Self::from_wide(e, &acc, den))
    }

    /// The bare coefficient list, as used inside character-table files.
    pub fn sparse_string(&self) -> String {
        let mut s = String::from("[");
        for (i, (k, c)) in self.terms().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let r = Ratio::new(c, self.den);
            if *r.denom() == 1 {
                s.push_str(&format!("{k}:{}", r.numer()));
            } else {
                s.push_str(&format!("{k}:{}/{}", r.numer(), r.denom()));
            }
        }
        s.push(']');
        s
    }
}

fn parse_rational(s: &str) -> std::result::Result<Ratio<i128>, String> {
    let parse_int = |t: &str| -> std::result::Result<i128, String> {
        let ok = !t.is_empty()
            && t.strip_prefix('-')
                .unwrap_or(t)
                .chars()
                .all(|c| c.is_ascii_digit());
        if !ok {
            return Err(format!("bad integer `{t}`"));
        }
        t.parse::<i64>()
            .map(|v| v as i128)
            .map_err(|_| format!("integer `{t}` out of range"))
    };
    match s.split_once('/') {
        None => Ok(Ratio::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q <= 0 {
                return Err("denominator must be positive".into());
            }
            Ok(Ratio::new(parse_int(p)?, q))
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = self.common(other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for Cyclotomic {}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cyclotomic {
    /// Lexicographic on power-basis coefficients, after moving both values
    /// to a common conductor.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = self.common(other);
        for (x, y) in a.num.iter().zip(&b.num) {
            let lhs = *x as i128 * b.den as i128;
            let rhs = *y as i128 * a.den as i128;
            match lhs.cmp(&rhs) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl<'a> Add for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, other: &'a Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(other);
        let acc: Vec<i128> = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(&x, &y)| x as i128 * b.den as i128 + y as i128 * a.den as i128)
            .collect();
        Cyclotomic::from_wide(a.conductor, &acc, a.den as i128 * b.den as i128)
    }
}

impl<'a> Sub for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, other: &'a Cyclotomic) -> Cyclotomic {
        self + &(-other)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den,
        }
    }
}

impl<'a> Mul for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, other: &'a Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(other);
        let e = a.conductor;
        let bs = basis(e);
        let mut prod = vec![0i128; 2 * bs.phi];
        for (i, x) in a.terms() {
            for (j, y) in b.terms() {
                prod[(i + j) as usize] += x as i128 * y as i128;
            }
        }
        let mut acc = vec![0i128; bs.phi];
        for (k, &c) in prod.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let row = &bs.powers[k % e as usize];
            for (a, &r) in acc.iter_mut().zip(row) {
                *a += c * r as i128;
            }
        }
        Cyclotomic::from_wide(e, &acc, a.den as i128 * b.den as i128)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, other: Cyclotomic) -> Cyclotomic {
                (&self).$m(&other)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({}){}", self.conductor, self.sparse_string())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Cyclotomic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fail = |message: String| Error::Parse {
            line: 1,
            column: 1,
            message,
        };
        let rest = s
            .trim()
            .strip_prefix("E(")
            .ok_or_else(|| fail("expected `E(`".into()))?;
        let (e, list) = rest
            .split_once(')')
            .ok_or_else(|| fail("expected `)`".into()))?;
        let e: u32 = e.parse().map_err(|_| fail(format!("bad conductor `{e}`")))?;
        if e == 0 || e > MAX_CONDUCTOR {
            return Err(fail(format!("conductor {e} out of range")));
        }
        Cyclotomic::parse_sparse(e, list).map_err(fail)
    }
}

/// Largest conductor accepted from text input.
pub const MAX_CONDUCTOR: u32 = 10_000;

impl serde::Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Sums of products of root-of-unity sums, accumulated in
/// `Z[x]/(x^e - 1)` and reduced modulo `Φ_e` once at the end. Reduction is
/// a ring map, so the result is exact.
#[derive(Clone, Debug)]
pub struct CycAccumulator {
    e: u32,
    acc: Vec<i128>,
}

/// Sparse `Σ c_k ζ^k` with exponents in `0..e`.
pub type Terms = Vec<(u32, i64)>;

impl CycAccumulator {
    pub fn new(e: u32) -> Self {
        CycAccumulator {
            e,
            acc: vec![0; e as usize],
        }
    }

    pub fn add_term(&mut self, k: u32, c: i128) {
        self.acc[(k % self.e) as usize] += c;
    }

    /// Adds `scale · a · b`, with `b` conjugated when `conj_b` is set.
    pub fn add_product(&mut self, scale: i128, a: &[(u32, i64)], b: &[(u32, i64)], conj_b: bool) {
        let e = self.e;
        for &(i, x) in a {
            for &(j, y) in b {
                let j = if conj_b { (e - j) % e } else { j };
                self.acc[((i + j) % e) as usize] += scale * x as i128 * y as i128;
            }
        }
    }

    pub fn finish(&self, den: i128) -> Cyclotomic {
        let b = basis(self.e);
        let mut out = vec![0i128; b.phi];
        for (k, &c) in self.acc.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(&b.powers[k]) {
                *o += c * r as i128;
            }
        }
        Cyclotomic::from_wide(self.e, &out, den)
    }
}

/// Pointwise product of two sparse root sums.
pub fn multiply_terms(e: u32, a: &[(u32, i64)], b: &[(u32, i64)]) -> Terms {
    let mut map: HashMap<u32, i64> = HashMap::new();
    for &(i, x) in a {
        for &(j, y) in b {
            *map.entry((i + j) % e).or_default() += x * y;
        }
    }
    let mut out: Terms = map.into_iter().filter(|&(_, c)| c != 0).collect();
    out.sort_unstable();
    out
}
