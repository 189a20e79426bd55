use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{is_prime, prime_divisors, GroupSpec};
use crate::parse::{Cursor, Tok};

/// Constructor expression for a finite unital ring.
///
/// Grammar (whitespace-insensitive, case-sensitive keywords):
/// `Zn(4)`, `GF(2,2)`, `SkewTrunc(GF(2,2), frob^1, 2)`, `Mat(2, Zn(4))`,
/// `Prod(GF(2,1), Mat(2,GF(3,1)))`, `GroupRing(Zn(4), Cyclic(3))`.
/// The automorphism slot of `SkewTrunc` accepts `id`, `identity`, `frob`
/// or `frob^j`, meaning `x ↦ x^(p^j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Zn(u64),
    Gf {
        p: u64,
        k: u32,
    },
    SkewTrunc {
        base: Box<RingSpec>,
        frob: u32,
        len: usize,
    },
    Mat {
        dim: usize,
        inner: Box<RingSpec>,
    },
    Prod(Vec<RingSpec>),
    GroupRing {
        base: Box<RingSpec>,
        group: GroupSpec,
    },
}

/// Largest carrier a spec may describe; element indices must fit in `u64`.
pub const MAX_CARRIER: u64 = 1 << 62;

/// One factor `Mat(matrix_size, local)` of a canonical product decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSpec {
    pub matrix_size: usize,
    pub local: RingSpec,
}

impl RingSpec {
    /// Checks leaf bounds and returns the carrier size implied by the tree.
    pub fn size(&self) -> Result<u64> {
        let err = |reason: String| Error::RingSpec {
            node: self.to_string(),
            reason,
        };
        let too_big = || err(format!("carrier exceeds {MAX_CARRIER} elements"));
        let size = match self {
            RingSpec::Zn(n) => {
                if *n < 2 {
                    return Err(err("modulus must be at least 2".into()));
                }
                *n
            }
            RingSpec::Gf { p, k } => {
                if !is_prime(*p) {
                    return Err(err(format!("{p} is not prime")));
                }
                if *k == 0 {
                    return Err(err("extension degree must be at least 1".into()));
                }
                p.checked_pow(*k).ok_or_else(too_big)?
            }
            RingSpec::SkewTrunc { base, frob, len } => {
                let RingSpec::Gf { k, .. } = base.as_ref() else {
                    return Err(err("base of SkewTrunc must be a field GF(p,k)".into()));
                };
                if frob >= k {
                    return Err(err(format!(
                        "automorphism index frob^{frob} out of range 0..{k}"
                    )));
                }
                if *len < 2 {
                    return Err(err("truncation length must be at least 2".into()));
                }
                base.size()?.checked_pow(*len as u32).ok_or_else(too_big)?
            }
            RingSpec::Mat { dim, inner } => {
                if *dim == 0 {
                    return Err(err("matrix size must be at least 1".into()));
                }
                let e = dim.checked_mul(*dim).ok_or_else(too_big)?;
                inner.size()?.checked_pow(e as u32).ok_or_else(too_big)?
            }
            RingSpec::Prod(factors) => {
                if factors.is_empty() {
                    return Err(err("empty product".into()));
                }
                let mut acc: u64 = 1;
                for f in factors {
                    acc = acc.checked_mul(f.size()?).ok_or_else(too_big)?;
                }
                acc
            }
            RingSpec::GroupRing { base, group } => {
                let n = group.order()?;
                base.size()?.checked_pow(n as u32).ok_or_else(too_big)?
            }
        };
        if size > MAX_CARRIER {
            return Err(too_big());
        }
        Ok(size)
    }

    /// Splits the spec into `Mat(k_i, S_i)` factors with every `S_i` a
    /// candidate local ring: products are flattened, matrix sizes multiply
    /// through nested `Mat`, and `Zn(n)` splits into prime-power residues.
    /// Leaves that are not obviously local (group rings) are returned as is;
    /// callers validate locality.
    pub fn canonical_factors(&self) -> Vec<FactorSpec> {
        match self {
            RingSpec::Prod(fs) => fs.iter().flat_map(|f| f.canonical_factors()).collect(),
            RingSpec::Mat { dim, inner } => inner
                .canonical_factors()
                .into_iter()
                .map(|f| FactorSpec {
                    matrix_size: f.matrix_size * dim,
                    local: f.local,
                })
                .collect(),
            RingSpec::Zn(n) => prime_divisors(*n)
                .into_iter()
                .map(|p| {
                    let mut q = p;
                    while n % (q * p) == 0 {
                        q *= p;
                    }
                    FactorSpec {
                        matrix_size: 1,
                        local: RingSpec::Zn(q),
                    }
                })
                .collect(),
            other => vec![FactorSpec {
                matrix_size: 1,
                local: other.clone(),
            }],
        }
    }

    /// Leaves whose locality follows from the constructor alone.
    pub fn is_local_by_construction(&self) -> bool {
        match self {
            RingSpec::Zn(n) => prime_divisors(*n).len() == 1,
            RingSpec::Gf { .. } | RingSpec::SkewTrunc { .. } => true,
            _ => false,
        }
    }

    fn parse_from(cur: &mut Cursor) -> Result<Self> {
        let (line, column) = cur.position();
        let name = cur.ident()?;
        cur.expect('(')?;
        let spec = match name.as_str() {
            "Zn" => RingSpec::Zn(cur.int()?),
            "GF" => {
                let p = cur.int()?;
                cur.expect(',')?;
                let k = cur.int()?;
                RingSpec::Gf {
                    p,
                    k: u32::try_from(k).or_else(|_| cur.error("degree too large"))?,
                }
            }
            "SkewTrunc" => {
                let base = RingSpec::parse_from(cur)?;
                cur.expect(',')?;
                let frob = parse_auto(cur)?;
                cur.expect(',')?;
                let len = cur.int()? as usize;
                RingSpec::SkewTrunc {
                    base: Box::new(base),
                    frob,
                    len,
                }
            }
            "Mat" => {
                let dim = cur.int()? as usize;
                cur.expect(',')?;
                RingSpec::Mat {
                    dim,
                    inner: Box::new(RingSpec::parse_from(cur)?),
                }
            }
            "Prod" => {
                let mut fs = vec![RingSpec::parse_from(cur)?];
                while cur.eat(',') {
                    fs.push(RingSpec::parse_from(cur)?);
                }
                RingSpec::Prod(fs)
            }
            "GroupRing" => {
                let base = RingSpec::parse_from(cur)?;
                cur.expect(',')?;
                let group = GroupSpec::parse_from(cur)?;
                RingSpec::GroupRing {
                    base: Box::new(base),
                    group,
                }
            }
            other => {
                return Err(Error::Parse {
                    line,
                    column,
                    message: format!("unknown ring constructor `{other}`"),
                })
            }
        };
        cur.expect(')')?;
        Ok(spec)
    }
}

fn parse_auto(cur: &mut Cursor) -> Result<u32> {
    match cur.ident()?.as_str() {
        "id" | "identity" => Ok(0),
        "frob" => {
            if cur.eat('^') {
                let j = cur.int()?;
                u32::try_from(j).or_else(|_| cur.error("automorphism index too large"))
            } else {
                Ok(1)
            }
        }
        other => cur.error(format!(
            "unknown automorphism `{other}` (expected id or frob^j)"
        )),
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s)?;
        let spec = RingSpec::parse_from(&mut cur)?;
        if let Some(Tok::Sym(_) | Tok::Ident(_) | Tok::Int(_)) = cur.peek() {
            return cur.error("unexpected trailing input");
        }
        spec.size()?;
        Ok(spec)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zn(n) => write!(f, "Zn({n})"),
            RingSpec::Gf { p, k } => write!(f, "GF({p},{k})"),
            RingSpec::SkewTrunc { base, frob, len } => {
                if *frob == 0 {
                    write!(f, "SkewTrunc({base},id,{len})")
                } else {
                    write!(f, "SkewTrunc({base},frob^{frob},{len})")
                }
            }
            RingSpec::Mat { dim, inner } => write!(f, "Mat({dim},{inner})"),
            RingSpec::Prod(fs) => {
                write!(f, "Prod(")?;
                for (i, r) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{r}")?;
                }
                write!(f, ")")
            }
            RingSpec::GroupRing { base, group } => write!(f, "GroupRing({base},{group})"),
        }
    }
}
