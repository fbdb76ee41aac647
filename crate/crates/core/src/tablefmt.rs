//! Plain-text character tables.
//!
//! ```text
//! cosetlab-chartable 1
//! group sym:3
//! order 6
//! exponent 6
//! sizes 1 3 2
//! orders 1 2 3
//! power 0 : 0
//! power 1 : 0 1
//! power 2 : 0 2 2
//! chi 1 : [0:1] [0:1] [0:1]
//! chi 1 : [0:1] [0:-1] [0:1]
//! chi 2 : [0:2] [] [0:-1]
//! ```
//!
//! `power i` lists the class of `g_i^k` for `k = 0 .. ord(g_i) - 1`. Each
//! value is the list of nonzero coefficients `k:c` of `ζ_e^k` in the basis
//! reduced modulo `Φ_e`; `c` may be a fraction `p/q`. Lines starting with
//! `#` and blank lines are ignored.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::chartable::{CharTable, Character, TableHeader};
use crate::cyclotomic::{Cyclotomic, MAX_CONDUCTOR};
use crate::error::{Error, Result};

pub const MAGIC: &str = "cosetlab-chartable 1";

/// Largest group order accepted from text input.
pub const MAX_ORDER: u64 = 1 << 32;

/// Largest coefficient magnitude accepted from text input; keeps every
/// orthogonality sum inside `i128`.
const MAX_COEFFICIENT: u64 = 1 << 24;

pub fn export(t: &CharTable) -> String {
    let h = t.header();
    let mut s = String::new();
    let join = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(" ");
    writeln!(s, "{MAGIC}").unwrap();
    writeln!(s, "group {}", h.group).unwrap();
    writeln!(s, "order {}", h.order).unwrap();
    writeln!(s, "exponent {}", h.exponent).unwrap();
    writeln!(s, "sizes {}", join(&mut h.class_sizes.iter().map(|x| x.to_string()))).unwrap();
    writeln!(s, "orders {}", join(&mut h.element_orders.iter().map(|x| x.to_string()))).unwrap();
    for (i, pm) in h.power_maps.iter().enumerate() {
        writeln!(s, "power {i} : {}", join(&mut pm.iter().map(|x| x.to_string()))).unwrap();
    }
    for ch in t.rows() {
        let vals = join(&mut ch.values().iter().map(|v| v.sparse_string()));
        writeln!(s, "chi {} : {vals}", ch.degree()).unwrap();
    }
    s
}

struct Line<'a> {
    number: usize,
    tokens: Vec<(usize, &'a str)>,
}

impl<'a> Line<'a> {
    fn split(number: usize, text: &'a str) -> Self {
        let mut tokens = Vec::new();
        let mut start = None;
        for (i, c) in text.char_indices() {
            match (c.is_whitespace(), start) {
                (true, Some(s)) => {
                    tokens.push((s, &text[s..i]));
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        if let Some(s) = start {
            tokens.push((s, &text[s..]));
        }
        Line { number, tokens }
    }

    fn err(&self, token: usize, message: impl Into<String>) -> Error {
        let column = self
            .tokens
            .get(token)
            .map_or_else(|| self.tokens.last().map_or(1, |t| t.0 + t.1.len() + 1), |t| t.0 + 1);
        Error::Parse {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    fn keyword(&self) -> &'a str {
        self.tokens[0].1
    }

    fn int<T: std::str::FromStr>(&self, token: usize) -> Result<T> {
        let raw = self
            .tokens
            .get(token)
            .ok_or_else(|| self.err(token, "missing value"))?
            .1;
        raw.parse()
            .map_err(|_| self.err(token, format!("expected a nonnegative integer, found `{raw}`")))
    }

    fn ints<T: std::str::FromStr>(&self, from: usize) -> Result<Vec<T>> {
        (from..self.tokens.len()).map(|t| self.int(t)).collect()
    }

    fn expect_colon(&self, token: usize) -> Result<()> {
        match self.tokens.get(token) {
            Some((_, ":")) => Ok(()),
            _ => Err(self.err(token, "expected `:`")),
        }
    }
}

/// Parses a table without checking any character-theoretic invariant.
/// Rows come back in canonical order, principal character first.
pub fn parse(text: &str) -> Result<CharTable> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| Line::split(i + 1, l))
        .filter(|l| !l.tokens.is_empty() && !l.tokens[0].1.starts_with('#'));
    let eof = |what: &str| Error::Parse {
        line: text.lines().count() + 1,
        column: 1,
        message: format!("unexpected end of input, expected {what}"),
    };

    let magic = lines.next().ok_or_else(|| eof("header"))?;
    let words: Vec<&str> = magic.tokens.iter().map(|t| t.1).collect();
    if words.join(" ") != MAGIC {
        return Err(magic.err(0, format!("expected `{MAGIC}`")));
    }

    let mut field = |name: &str| -> Result<Line> {
        let l = lines.next().ok_or_else(|| eof(name))?;
        if l.keyword() != name {
            return Err(l.err(0, format!("expected `{name}`")));
        }
        Ok(l)
    };
    let g = field("group")?;
    if g.tokens.len() != 2 {
        return Err(g.err(2.min(g.tokens.len()), "expected one group name"));
    }
    let group = g.tokens[1].1.to_string();
    let ordl = field("order")?;
    let order: u64 = ordl.int(1)?;
    if order == 0 || order > MAX_ORDER {
        return Err(ordl.err(1, format!("order {order} out of range")));
    }
    let el = field("exponent")?;
    let exponent: u32 = el.int(1)?;
    if exponent == 0 || exponent > MAX_CONDUCTOR || exponent as u64 > order {
        return Err(el.err(1, format!("exponent {exponent} out of range")));
    }
    let sl = field("sizes")?;
    let class_sizes: Vec<u64> = sl.ints(1)?;
    let r = class_sizes.len();
    if r == 0 || r as u64 > order {
        return Err(sl.err(1, format!("{r} classes for a group of order {order}")));
    }
    if let Some(t) = class_sizes.iter().position(|&c| c == 0 || c > order) {
        return Err(sl.err(t + 1, "class size out of range"));
    }
    let ol = field("orders")?;
    let element_orders: Vec<u64> = ol.ints(1)?;
    if element_orders.len() != r {
        return Err(ol.err(0, format!("{} orders for {r} classes", element_orders.len())));
    }
    if let Some(t) = element_orders.iter().position(|&o| o == 0 || !(exponent as u64).is_multiple_of(o)) {
        return Err(ol.err(t + 1, "element order does not divide the exponent"));
    }

    let mut power_maps = Vec::with_capacity(r);
    for i in 0..r {
        let l = field("power")?;
        let idx: usize = l.int(1)?;
        if idx != i {
            return Err(l.err(1, format!("expected power map of class {i}")));
        }
        l.expect_colon(2)?;
        let pm: Vec<usize> = l.ints(3)?;
        if pm.len() as u64 != element_orders[i] {
            return Err(l.err(0, format!("{} entries for an element of order {}", pm.len(), element_orders[i])));
        }
        if let Some(t) = pm.iter().position(|&c| c >= r) {
            return Err(l.err(t + 3, "class index out of range"));
        }
        if pm[0] != 0 || (pm.len() > 1 && pm[1] != i) {
            return Err(l.err(3, "power map must send k = 0 to class 0 and k = 1 to the class itself"));
        }
        power_maps.push(pm);
    }

    let mut rows = Vec::new();
    for l in lines {
        if l.keyword() != "chi" {
            return Err(l.err(0, "expected `chi`"));
        }
        let degree: i64 = l.int(1)?;
        l.expect_colon(2)?;
        let n = l.tokens.len().saturating_sub(3);
        if n != r {
            return Err(l.err(3 + n.min(r), format!("{n} values for {r} classes")));
        }
        let mut values = Vec::with_capacity(r);
        for t in 3..l.tokens.len() {
            let v = Cyclotomic::parse_sparse(exponent, l.tokens[t].1).map_err(|m| l.err(t, m))?;
            if !v.is_integral() {
                return Err(l.err(t, "character values are algebraic integers"));
            }
            if v.numerators().iter().any(|c| c.unsigned_abs() > MAX_COEFFICIENT) {
                return Err(l.err(t, "coefficient out of range"));
            }
            values.push(v);
        }
        if values[0] != Cyclotomic::from_int(1, degree) {
            return Err(l.err(3, "value on the identity differs from the stated degree"));
        }
        rows.push(Character::from_values(values));
    }
    let header = TableHeader {
        group,
        order,
        exponent,
        class_sizes,
        element_orders,
        power_maps,
    };
    let mut t = CharTable::from_parts(header, rows);
    t.sort_rows();
    Ok(t)
}

/// Parses and re-validates a table.
pub fn ingest(text: &str) -> Result<CharTable> {
    let t = parse(text)?;
    t.validate()?;
    Ok(t)
}

/// Differences between two tables, compared class by class and up to a
/// permutation of rows. Empty when they agree.
pub fn diff(expected: &CharTable, found: &CharTable) -> Vec<String> {
    let (a, b) = (expected.header(), found.header());
    let mut out = Vec::new();
    if a.order != b.order {
        out.push(format!("order {} != {}", a.order, b.order));
    }
    if a.class_sizes != b.class_sizes {
        out.push(format!("class sizes {:?} != {:?}", a.class_sizes, b.class_sizes));
    }
    if a.element_orders != b.element_orders {
        out.push(format!("element orders {:?} != {:?}", a.element_orders, b.element_orders));
    }
    if a.power_maps != b.power_maps {
        out.push("power maps differ".into());
    }
    if !out.is_empty() {
        return out;
    }
    let mut count: BTreeMap<&[Cyclotomic], i64> = BTreeMap::new();
    for r in expected.rows() {
        *count.entry(r.values()).or_default() += 1;
    }
    for r in found.rows() {
        *count.entry(r.values()).or_default() -= 1;
    }
    for (row, c) in count {
        let shown: Vec<String> = row.iter().map(|v| v.sparse_string()).collect();
        match c {
            0 => {}
            c if c > 0 => out.push(format!("missing row {}", shown.join(" "))),
            _ => out.push(format!("unexpected row {}", shown.join(" "))),
        }
    }
    out
}
