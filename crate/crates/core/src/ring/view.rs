use std::fmt;

use super::{decode, encode, join_product, split_product, Digits, Elem, FiniteRing, RingKind};
use crate::error::{Error, Result};
use crate::parse::{Cursor, Tok};

/// Structured form of an element, mirroring the ring constructor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementView {
    /// Residue in `0..n`.
    Residue(u64),
    /// Coefficients `c_0..c_{k-1}` of `Σ c_i a^i` in `GF(p,k)`.
    Field(Vec<u64>),
    /// Base-ring coefficients of `Σ a_i t^i`.
    Skew(Vec<Elem>),
    /// Rows of entry-ring elements.
    Matrix(Vec<Vec<Elem>>),
    /// Components of a direct product.
    Tuple(Vec<Elem>),
    /// Base-ring coefficient of each group element.
    GroupVector(Vec<Elem>),
    /// Carrier index of a ring with no structured form.
    Opaque(Elem),
}

impl fmt::Display for ElementView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FiniteRing {
    pub fn view(&self, x: Elem) -> ElementView {
        match self.kind() {
            RingKind::Zn(_) => ElementView::Residue(x),
            RingKind::Field(g) => ElementView::Field(g.digits(x).into_vec()),
            RingKind::SkewTrunc { base, len, .. } => {
                ElementView::Skew(decode(x, base.size(), *len).into_vec())
            }
            RingKind::Matrix { dim, entries } => {
                let d = decode(x, entries.size(), dim * dim);
                ElementView::Matrix(d.chunks(*dim).map(|r| r.to_vec()).collect())
            }
            RingKind::Product(fs) => ElementView::Tuple(split_product(fs, x).into_vec()),
            RingKind::GroupRing { base, group } => {
                ElementView::GroupVector(decode(x, base.size(), group.order()).into_vec())
            }
            _ => ElementView::Opaque(x),
        }
    }

    /// Inverse of [`FiniteRing::view`]; validates shape and digit ranges.
    pub fn from_view(&self, v: &ElementView) -> Result<Elem> {
        let bad = |what: &str| {
            Err(Error::precondition(format!(
                "{what} does not describe an element of {}",
                self.label()
            )))
        };
        let digits_ok =
            |d: &[Elem], radix: u64, len: usize| d.len() == len && d.iter().all(|&c| c < radix);
        let x = match (self.kind(), v) {
            (RingKind::Zn(n), ElementView::Residue(r)) if r < n => *r,
            (RingKind::Field(g), ElementView::Field(d)) if digits_ok(d, g.p, g.k) => {
                g.from_digits(d)
            }
            (RingKind::SkewTrunc { base, len, .. }, ElementView::Skew(d))
                if digits_ok(d, base.size(), *len) =>
            {
                encode(d, base.size())
            }
            (RingKind::Matrix { dim, entries }, ElementView::Matrix(rows))
                if rows.len() == *dim
                    && rows.iter().all(|r| digits_ok(r, entries.size(), *dim)) =>
            {
                let flat: Digits = rows.iter().flatten().copied().collect();
                encode(&flat, entries.size())
            }
            (RingKind::Product(fs), ElementView::Tuple(parts))
                if parts.len() == fs.len() && fs.iter().zip(parts).all(|(f, &p)| p < f.size()) =>
            {
                join_product(fs, parts)
            }
            (RingKind::GroupRing { base, group }, ElementView::GroupVector(d))
                if digits_ok(d, base.size(), group.order()) =>
            {
                encode(d, base.size())
            }
            (_, ElementView::Opaque(x)) if !self.has_structured_view() && *x < self.size() => *x,
            (_, v) => return bad(&format!("{v:?}")),
        };
        Ok(x)
    }

    fn has_structured_view(&self) -> bool {
        matches!(
            self.kind(),
            RingKind::Zn(_)
                | RingKind::Field(_)
                | RingKind::SkewTrunc { .. }
                | RingKind::Matrix { .. }
                | RingKind::Product(_)
                | RingKind::GroupRing { .. }
        )
    }

    /// Human-readable form of an element.
    pub fn render(&self, x: Elem) -> String {
        match self.kind() {
            RingKind::Zn(_) => x.to_string(),
            RingKind::Field(g) => {
                if g.k == 1 {
                    return x.to_string();
                }
                let d = g.digits(x);
                let terms: Vec<String> = d
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| {
                        let mono = match i {
                            0 => String::new(),
                            1 => "a".into(),
                            _ => format!("a^{i}"),
                        };
                        match (c, mono.is_empty()) {
                            (_, true) => c.to_string(),
                            (1, false) => mono,
                            _ => format!("{c}{mono}"),
                        }
                    })
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join(" + ")
                }
            }
            RingKind::SkewTrunc { base, len, .. } => {
                let d = decode(x, base.size(), *len);
                render_sum(base, &d, |i| match i {
                    0 => None,
                    1 => Some("t".into()),
                    _ => Some(format!("t^{i}")),
                })
            }
            RingKind::Matrix { dim, entries } => {
                let d = decode(x, entries.size(), dim * dim);
                let rows: Vec<String> = d
                    .chunks(*dim)
                    .map(|r| {
                        let cells: Vec<String> = r.iter().map(|&e| entries.render(e)).collect();
                        format!("[{}]", cells.join(", "))
                    })
                    .collect();
                format!("[{}]", rows.join(", "))
            }
            RingKind::Product(fs) => {
                let parts = split_product(fs, x);
                let cells: Vec<String> = fs.iter().zip(&parts).map(|(f, &p)| f.render(p)).collect();
                format!("({})", cells.join(", "))
            }
            RingKind::GroupRing { base, group } => {
                let d = decode(x, base.size(), group.order());
                let cyclic = group.designated_generator().is_some()
                    && matches!(group.spec(), Some(crate::group::GroupSpec::Cyclic(_)));
                render_sum(base, &d, |g| {
                    if g == group.identity() {
                        None
                    } else if cyclic {
                        Some(format!("g^{g}"))
                    } else {
                        Some(format!("[{g}]"))
                    }
                })
            }
            _ => format!("#{x}"),
        }
    }

    /// Parses an element literal.
    ///
    /// Integers denote multiples of 1. Group ring literals are sums of
    /// terms `c*g^k` (cyclic groups, `g^k` the k-th power of the
    /// generator) or `c*[i]` (group element of index `i`); a bare integer is
    /// a multiple of the identity. Outside group rings `[i]` names the
    /// carrier index `i` directly.
    pub fn parse_element(&self, text: &str) -> Result<Elem> {
        let mut cur = Cursor::new(text)?;
        let mut acc = self.zero();
        let mut first = true;
        loop {
            let negate = if cur.eat('-') {
                true
            } else if first || cur.eat('+') {
                false
            } else {
                break;
            };
            first = false;
            let term = self.parse_term(&mut cur)?;
            acc = if negate {
                self.sub(acc, term)
            } else {
                self.add(acc, term)
            };
            if cur.peek().is_none() {
                break;
            }
        }
        if cur.peek().is_some() {
            return cur.error("unexpected input in element literal");
        }
        Ok(acc)
    }

    fn parse_term(&self, cur: &mut Cursor) -> Result<Elem> {
        let group_ring = self.group_ring_parts();
        let coeff = match cur.peek() {
            Some(Tok::Int(_)) => {
                let n = cur.int()?;
                Some(n)
            }
            _ => None,
        };
        let basis = match (cur.peek(), group_ring) {
            (Some(Tok::Sym('*')), _) if coeff.is_some() => {
                cur.next();
                Some(self.parse_basis(cur)?)
            }
            (Some(Tok::Ident(_)) | Some(Tok::Sym('[')), _) if coeff.is_none() => {
                Some(self.parse_basis(cur)?)
            }
            _ => None,
        };
        let c = coeff.unwrap_or(1);
        match (basis, group_ring) {
            (None, _) if coeff.is_some() => Ok(self.from_int(c as i64)),
            (None, _) => cur.error("expected a term"),
            (Some(b), Some((base, group))) => {
                let mut d: Digits = smallvec::SmallVec::from_elem(base.zero(), group.order());
                d[b as usize] = base.from_int(c as i64);
                Ok(encode(&d, base.size()))
            }
            (Some(idx), None) => Ok(self.mul(self.from_int(c as i64), idx)),
        }
    }

    /// Returns a group element (group rings) or a carrier index (otherwise).
    fn parse_basis(&self, cur: &mut Cursor) -> Result<Elem> {
        if cur.eat('[') {
            let i = cur.int()?;
            cur.expect(']')?;
            let bound = match self.group_ring_parts() {
                Some((_, g)) => g.order() as u64,
                None => self.size(),
            };
            if i >= bound {
                return cur.error(format!("index {i} out of range 0..{bound}"));
            }
            return Ok(i);
        }
        let name = cur.ident()?;
        let Some((_, group)) = self.group_ring_parts() else {
            return cur.error(format!("unknown symbol `{name}`"));
        };
        let Some(gen) = group.designated_generator() else {
            return cur.error("group has no designated generator; use [i]");
        };
        if name != "g" {
            return cur.error(format!("unknown symbol `{name}` (expected g)"));
        }
        let k = if cur.eat('^') { cur.int()? } else { 1 };
        Ok(group.pow(gen, k as usize) as Elem)
    }
}

fn render_sum(base: &FiniteRing, d: &[Elem], basis: impl Fn(usize) -> Option<String>) -> String {
    let terms: Vec<String> = d
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != base.zero())
        .map(|(i, &c)| match basis(i) {
            None => base.render(c),
            Some(b) if c == base.one() => b,
            Some(b) => {
                let cs = base.render(c);
                if cs.contains(' ') {
                    format!("({cs})*{b}")
                } else {
                    format!("{cs}*{b}")
                }
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
