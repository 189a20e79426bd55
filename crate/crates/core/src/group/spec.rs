use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::parse::{Cursor, Tok};

/// Textual description of a finite group.
///
/// Grammar: `Cyclic(6)`, `Dihedral(4)`, `Sym(3)`,
/// `DirectProduct(Cyclic(2),Cyclic(2))`, `Table(n; row-major entries)`.
/// `Dihedral(n)` is the symmetry group of the n-gon, of order `2n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Sym(usize),
    DirectProduct(Vec<GroupSpec>),
    Table { order: usize, entries: Vec<usize> },
}

/// Largest group order accepted from a spec.
pub const MAX_GROUP_ORDER: usize = 4096;

impl GroupSpec {
    pub fn order(&self) -> Result<usize> {
        let order = match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::Dihedral(n) => n.checked_mul(2).unwrap_or(usize::MAX),
            GroupSpec::Sym(n) => (1..=*n).product(),
            GroupSpec::DirectProduct(fs) => {
                let mut acc: usize = 1;
                for f in fs {
                    acc = acc.saturating_mul(f.order()?);
                }
                acc
            }
            GroupSpec::Table { order, .. } => *order,
        };
        if order > MAX_GROUP_ORDER {
            return Err(Error::GroupSpec {
                node: self.to_string(),
                reason: format!("order {order} exceeds the supported maximum {MAX_GROUP_ORDER}"),
            });
        }
        Ok(order)
    }

    pub(crate) fn parse_from(cur: &mut Cursor) -> Result<Self> {
        let (line, column) = cur.position();
        let name = cur.ident()?;
        cur.expect('(')?;
        let spec = match name.as_str() {
            "Cyclic" => GroupSpec::Cyclic(positive(cur, "Cyclic order")?),
            "Dihedral" => GroupSpec::Dihedral(positive(cur, "Dihedral parameter")?),
            "Sym" => {
                let n = positive(cur, "Sym degree")?;
                if n > 4 {
                    return Err(Error::Parse {
                        line,
                        column,
                        message: format!("Sym({n}) is not supported (degree must be at most 4)"),
                    });
                }
                GroupSpec::Sym(n)
            }
            "DirectProduct" => {
                let mut factors = vec![GroupSpec::parse_from(cur)?];
                while cur.eat(',') {
                    factors.push(GroupSpec::parse_from(cur)?);
                }
                GroupSpec::DirectProduct(factors)
            }
            "Table" => {
                let order = positive(cur, "table order")?;
                cur.expect(';')?;
                let mut entries = Vec::new();
                while let Some(Tok::Int(_)) = cur.peek() {
                    entries.push(cur.int()? as usize);
                    cur.eat(',');
                }
                GroupSpec::Table { order, entries }
            }
            other => {
                return Err(Error::Parse {
                    line,
                    column,
                    message: format!("unknown group constructor `{other}`"),
                })
            }
        };
        cur.expect(')')?;
        Ok(spec)
    }
}

fn positive(cur: &mut Cursor, what: &str) -> Result<usize> {
    let v = cur.int()?;
    if v == 0 {
        return cur.error(format!("{what} must be at least 1"));
    }
    Ok(v as usize)
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s)?;
        let spec = GroupSpec::parse_from(&mut cur)?;
        cur.finish()?;
        Ok(spec)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Cyclic({n})"),
            GroupSpec::Dihedral(n) => write!(f, "Dihedral({n})"),
            GroupSpec::Sym(n) => write!(f, "Sym({n})"),
            GroupSpec::DirectProduct(fs) => {
                write!(f, "DirectProduct(")?;
                for (i, g) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, ")")
            }
            GroupSpec::Table { order, entries } => {
                write!(f, "Table({order};")?;
                for (i, e) in entries.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
        }
    }
}
