//! Named constructors for the groups used throughout the toolkit.
//!
//! Spec strings:
//!
//! ```text
//! cyclic:3  sym:4  alt:5  dihedral:4  q8  sl:2:3  agl1:8  agammal1:8
//! psl:2:9  pgl:2:9  pgammal:2:9  direct:(cyclic:2),(alt:4)
//! ```
//!
//! `dihedral:n` is the symmetry group of the regular `n`-gon, of order
//! `2n`. Groups over `F_q` act on the projective line with `∞` as point 0
//! and field element `k` as point `k + 1`; affine groups act on `F_q`
//! directly; `sl:2:q` acts on the nonzero vectors of `F_q²` in
//! lexicographic order of coordinate numbers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{prime_power, FiniteField};
use crate::group::PermGroup;
use crate::perm::Permutation;

const MAX_SYM_DEGREE: u32 = 12;
const MAX_CYCLIC: u32 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupSpec {
    Cyclic(u32),
    Sym(u32),
    Alt(u32),
    Dihedral(u32),
    Q8,
    Sl(u32, u32),
    Agl1(u32),
    Agammal1(u32),
    Psl(u32, u32),
    Pgl(u32, u32),
    Pgammal(u32, u32),
    Direct(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn direct(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec::Direct(Box::new(a), Box::new(b))
    }

    /// Group order predicted by the standard formulas, without building
    /// the group.
    pub fn expected_order(&self) -> u128 {
        let lie = |q: u32| {
            let q = q as u128;
            q * (q * q - 1)
        };
        let field_degree = |q: u32| prime_power(q).map(|(_, f)| f as u128).unwrap_or(1);
        match self {
            GroupSpec::Cyclic(n) => *n as u128,
            GroupSpec::Sym(n) => (1..=*n as u128).product(),
            GroupSpec::Alt(n) => {
                let f: u128 = (1..=*n as u128).product();
                if *n >= 2 {
                    f / 2
                } else {
                    1
                }
            }
            GroupSpec::Dihedral(n) => 2 * *n as u128,
            GroupSpec::Q8 => 8,
            GroupSpec::Sl(_, q) => lie(*q),
            GroupSpec::Agl1(q) => (*q as u128) * (*q as u128 - 1),
            GroupSpec::Agammal1(q) => (*q as u128) * (*q as u128 - 1) * field_degree(*q),
            GroupSpec::Psl(_, q) => lie(*q) / if q % 2 == 1 { 2 } else { 1 },
            GroupSpec::Pgl(_, q) => lie(*q),
            GroupSpec::Pgammal(_, q) => lie(*q) * field_degree(*q),
            GroupSpec::Direct(a, b) => a.expected_order() * b.expected_order(),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |reason: &str| {
            Err(Error::BadSpec {
                spec: self.to_string(),
                reason: reason.to_string(),
            })
        };
        match self {
            GroupSpec::Cyclic(n) if *n == 0 || *n > MAX_CYCLIC => bad("order out of range"),
            GroupSpec::Sym(n) | GroupSpec::Alt(n) if *n == 0 || *n > MAX_SYM_DEGREE => {
                bad("degree out of range")
            }
            GroupSpec::Dihedral(n) if *n < 3 || *n > MAX_CYCLIC => bad("need n >= 3"),
            GroupSpec::Sl(d, _) | GroupSpec::Psl(d, _) | GroupSpec::Pgl(d, _) | GroupSpec::Pgammal(d, _)
                if *d != 2 =>
            {
                bad("only dimension 2 is supported")
            }
            GroupSpec::Sl(_, q)
            | GroupSpec::Psl(_, q)
            | GroupSpec::Pgl(_, q)
            | GroupSpec::Pgammal(_, q)
            | GroupSpec::Agl1(q)
            | GroupSpec::Agammal1(q) => FiniteField::new(*q).map(|_| ()).or_else(|_| bad("unsupported field order")),
            GroupSpec::Direct(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    /// Builds the group as explicit permutations.
    pub fn make(&self) -> Result<PermGroup> {
        self.validate()?;
        let gens = self.generators()?;
        let group = PermGroup::new(gens)?;
        debug_assert_eq!(group.order() as u128, self.expected_order());
        Ok(group)
    }

    fn generators(&self) -> Result<Vec<Permutation>> {
        Ok(match self {
            GroupSpec::Cyclic(n) => vec![cycle(*n as usize)],
            GroupSpec::Sym(n) => {
                let n = *n as usize;
                if n == 1 {
                    vec![Permutation::identity(1)]
                } else {
                    vec![transposition(n, 0, 1), cycle(n)]
                }
            }
            GroupSpec::Alt(n) => {
                let n = *n as usize;
                if n < 3 {
                    vec![Permutation::identity(n)]
                } else {
                    (2..n as u32)
                        .map(|i| Permutation::from_cycles(n, &[&[0, 1, i]]))
                        .collect::<Result<_>>()?
                }
            }
            GroupSpec::Dihedral(n) => {
                let n = *n;
                let refl = (0..n).map(|i| (n - i) % n).collect();
                vec![cycle(n as usize), Permutation::from_images(refl)?]
            }
            GroupSpec::Q8 => quaternion_generators(),
            GroupSpec::Sl(_, q) => sl2_generators(&FiniteField::new(*q)?),
            GroupSpec::Agl1(q) => affine_generators(&FiniteField::new(*q)?, false),
            GroupSpec::Agammal1(q) => affine_generators(&FiniteField::new(*q)?, true),
            GroupSpec::Psl(_, q) => projective_generators(&FiniteField::new(*q)?, Projective::Special),
            GroupSpec::Pgl(_, q) => projective_generators(&FiniteField::new(*q)?, Projective::General),
            GroupSpec::Pgammal(_, q) => {
                projective_generators(&FiniteField::new(*q)?, Projective::Semilinear)
            }
            GroupSpec::Direct(a, b) => {
                let ga = a.generators()?;
                let gb = b.generators()?;
                let da = ga[0].degree();
                let db = gb[0].degree();
                let mut out = Vec::new();
                for g in &ga {
                    let mut imgs = g.images().to_vec();
                    imgs.extend(da as u32..(da + db) as u32);
                    out.push(Permutation::from_images(imgs)?);
                }
                for g in &gb {
                    let mut imgs: Vec<u32> = (0..da as u32).collect();
                    imgs.extend(g.images().iter().map(|&i| i + da as u32));
                    out.push(Permutation::from_images(imgs)?);
                }
                out
            }
        })
    }
}

fn cycle(n: usize) -> Permutation {
    let imgs = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    Permutation::from_images(imgs).expect("cycle")
}

fn transposition(n: usize, a: u32, b: u32) -> Permutation {
    Permutation::from_cycles(n, &[&[a, b]]).expect("transposition")
}

/// Left regular representation of `Q8`. Element `4s + u` is `(-1)^s` times
/// the unit `u` in `1, i, j, k`.
fn quaternion_generators() -> Vec<Permutation> {
    // unit products: (sign, unit) for u * v
    const TABLE: [[(u8, u8); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mult = |a: u32, b: u32| -> u32 {
        let (sa, ua) = (a / 4, a % 4);
        let (sb, ub) = (b / 4, b % 4);
        let (s, u) = TABLE[ua as usize][ub as usize];
        ((sa + sb + s as u32) % 2) * 4 + u as u32
    };
    [1u32, 2]
        .iter()
        .map(|&a| Permutation::from_images((0..8).map(|x| mult(a, x)).collect()).unwrap())
        .collect()
}

fn sl2_generators(k: &FiniteField) -> Vec<Permutation> {
    let q = k.order();
    // points are (a, b) != (0, 0), numbered a * q + b - 1
    let point = |a: u32, b: u32| a * q + b - 1;
    let act = |m: [u32; 4]| {
        let mut imgs = Vec::with_capacity((q * q - 1) as usize);
        for a in 0..q {
            for b in 0..q {
                if a == 0 && b == 0 {
                    continue;
                }
                let x = k.add(k.mul(m[0], a), k.mul(m[1], b));
                let y = k.add(k.mul(m[2], a), k.mul(m[3], b));
                imgs.push(point(x, y));
            }
        }
        Permutation::from_images(imgs).expect("invertible matrix")
    };
    let w = k.primitive();
    vec![
        act([1, 1, 0, 1]),
        act([0, k.neg(1), 1, 0]),
        act([w, 0, 0, k.inv(w)]),
    ]
}

fn affine_generators(k: &FiniteField, semilinear: bool) -> Vec<Permutation> {
    let q = k.order();
    let map = |f: &dyn Fn(u32) -> u32| Permutation::from_images((0..q).map(f).collect()).unwrap();
    let w = k.primitive();
    let mut gens = vec![map(&|x| k.add(x, 1)), map(&|x| k.mul(w, x))];
    if semilinear && k.degree() > 1 {
        gens.push(map(&|x| k.frobenius(x)));
    }
    gens
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Projective {
    Special,
    General,
    Semilinear,
}

fn projective_generators(k: &FiniteField, kind: Projective) -> Vec<Permutation> {
    let q = k.order();
    const INF: u32 = 0;
    // x -> (a x + b) / (c x + d) on points 0 = ∞, x + 1 = field element x
    let mobius = |a: u32, b: u32, c: u32, d: u32| {
        let mut imgs = Vec::with_capacity(q as usize + 1);
        imgs.push(if c == 0 { INF } else { k.mul(a, k.inv(c)) + 1 });
        for x in 0..q {
            let den = k.add(k.mul(c, x), d);
            let num = k.add(k.mul(a, x), b);
            imgs.push(if den == 0 { INF } else { k.mul(num, k.inv(den)) + 1 });
        }
        Permutation::from_images(imgs).expect("invertible Möbius map")
    };
    let w = k.primitive();
    let mut gens = vec![
        mobius(1, 1, 0, 1),
        mobius(0, k.neg(1), 1, 0),
        mobius(k.mul(w, w), 0, 0, 1),
    ];
    if kind != Projective::Special {
        gens.push(mobius(w, 0, 0, 1));
    }
    if kind == Projective::Semilinear && k.degree() > 1 {
        let mut imgs = vec![INF];
        imgs.extend((0..q).map(|x| k.frobenius(x) + 1));
        gens.push(Permutation::from_images(imgs).unwrap());
    }
    gens
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Sym(n) => write!(f, "sym:{n}"),
            GroupSpec::Alt(n) => write!(f, "alt:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Q8 => write!(f, "q8"),
            GroupSpec::Sl(d, q) => write!(f, "sl:{d}:{q}"),
            GroupSpec::Agl1(q) => write!(f, "agl1:{q}"),
            GroupSpec::Agammal1(q) => write!(f, "agammal1:{q}"),
            GroupSpec::Psl(d, q) => write!(f, "psl:{d}:{q}"),
            GroupSpec::Pgl(d, q) => write!(f, "pgl:{d}:{q}"),
            GroupSpec::Pgammal(d, q) => write!(f, "pgammal:{d}:{q}"),
            GroupSpec::Direct(a, b) => write!(f, "direct:({a}),({b})"),
        }
    }
}

struct SpecParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> SpecParser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            column: self.src[..self.pos].chars().count() + 1,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.error("expected a group name"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn number(&mut self) -> Result<u32> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error("expected a number"))
    }

    fn params(&mut self, count: usize) -> Result<Vec<u32>> {
        (0..count)
            .map(|_| {
                self.expect(':')?;
                self.number()
            })
            .collect()
    }

    fn spec(&mut self, depth: usize) -> Result<GroupSpec> {
        if depth > 16 {
            return Err(self.error("nesting too deep"));
        }
        let start = self.pos;
        let name = self.ident()?;
        let spec = match name {
            "q8" => GroupSpec::Q8,
            "cyclic" => GroupSpec::Cyclic(self.params(1)?[0]),
            "sym" => GroupSpec::Sym(self.params(1)?[0]),
            "alt" => GroupSpec::Alt(self.params(1)?[0]),
            "dihedral" => GroupSpec::Dihedral(self.params(1)?[0]),
            "agl1" => GroupSpec::Agl1(self.params(1)?[0]),
            "agammal1" => GroupSpec::Agammal1(self.params(1)?[0]),
            "sl" | "psl" | "pgl" | "pgammal" => {
                let p = self.params(2)?;
                match name {
                    "sl" => GroupSpec::Sl(p[0], p[1]),
                    "psl" => GroupSpec::Psl(p[0], p[1]),
                    "pgl" => GroupSpec::Pgl(p[0], p[1]),
                    _ => GroupSpec::Pgammal(p[0], p[1]),
                }
            }
            "direct" => {
                self.expect(':')?;
                self.expect('(')?;
                let a = self.spec(depth + 1)?;
                self.expect(')')?;
                self.expect(',')?;
                self.expect('(')?;
                let b = self.spec(depth + 1)?;
                self.expect(')')?;
                GroupSpec::direct(a, b)
            }
            other => {
                self.pos = start;
                return Err(self.error(format!("unknown group name `{other}`")));
            }
        };
        Ok(spec)
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = SpecParser { src: s.trim(), pos: 0 };
        let spec = parser.spec(0)?;
        if parser.pos != parser.src.len() {
            return Err(parser.error("trailing input"));
        }
        spec.validate()?;
        Ok(spec)
    }
}

/// Every spec the sweeps know about.
fn catalog() -> Vec<GroupSpec> {
    use GroupSpec::*;
    let mut all: Vec<GroupSpec> = Vec::new();
    all.extend((1..=12).map(Cyclic));
    all.extend((3..=6).map(Sym));
    all.extend((4..=6).map(Alt));
    all.extend((3..=10).map(Dihedral));
    all.push(Q8);
    all.extend([3, 5, 7].map(|q| Sl(2, q)));
    all.extend([3, 4, 5, 7, 8, 9, 11].map(Agl1));
    all.extend([4, 8, 9, 16].map(Agammal1));
    all.extend([4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 25, 27].map(|q| Psl(2, q)));
    all.extend([5, 7, 9, 11, 13].map(|q| Pgl(2, q)));
    all.extend([4, 8, 9, 25, 27].map(|q| Pgammal(2, q)));
    let c = Cyclic;
    let pairs = [
        (c(2), c(2)),
        (c(2), c(4)),
        (c(2), Sym(3)),
        (c(3), Sym(3)),
        (Sym(3), Sym(3)),
        (c(2), Alt(4)),
        (c(3), Alt(4)),
        (c(2), Q8),
        (c(2), Dihedral(4)),
        (c(2), Sym(4)),
        (c(2), Sl(2, 3)),
        (c(2), Alt(5)),
    ];
    all.extend(pairs.into_iter().map(|(a, b)| GroupSpec::direct(a, b)));
    all.push(GroupSpec::direct(c(2), GroupSpec::direct(c(2), c(2))));
    all
}

/// Catalog specs of order at most `max_order`, sorted by order and then by
/// spec string.
pub fn catalog_sweep_list(max_order: u64) -> Vec<GroupSpec> {
    let mut specs: Vec<_> = catalog()
        .into_iter()
        .filter(|s| s.expected_order() <= max_order as u128)
        .collect();
    specs.sort_by_cached_key(|s| (s.expected_order(), s.to_string()));
    specs
}
