use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Pir,
    NotPir,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    /// Every factor is a matrix ring over a field and `G` has the required
    /// normal subgroup.
    SemisimpleGroupOk,
    AdmissibleOk,
    /// No normal `π'`-subgroup with cyclic `π`-quotient.
    NotPiStructure,
    /// `|G|` is not invertible in some non-semisimple factor.
    GroupOrderNotUnit,
    NotAdmissible,
}

impl Decision {
    pub fn is_pir(self) -> bool {
        self == Decision::Pir
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Pir => "PIR",
            Decision::NotPir => "NotPIR",
        })
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::SemisimpleGroupOk => "Semisimple_GroupOK",
            Reason::AdmissibleOk => "Admissible_OK",
            Reason::NotPiStructure => "NotPiStructure",
            Reason::GroupOrderNotUnit => "GroupOrderNotUnit",
            Reason::NotAdmissible => "NotAdmissible",
        })
    }
}

impl FromStr for Decision {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "PIR" => Ok(Decision::Pir),
            "NotPIR" => Ok(Decision::NotPir),
            _ => Err(record_error(format!("unknown decision {s:?}"))),
        }
    }
}

impl FromStr for Reason {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "Semisimple_GroupOK" => Reason::SemisimpleGroupOk,
            "Admissible_OK" => Reason::AdmissibleOk,
            "NotPiStructure" => Reason::NotPiStructure,
            "GroupOrderNotUnit" => Reason::GroupOrderNotUnit,
            "NotAdmissible" => Reason::NotAdmissible,
            _ => return Err(record_error(format!("unknown reason {s:?}"))),
        })
    }
}

/// Per-factor evidence. Admissibility fields are `None` when the check was
/// not reached or does not apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport {
    pub spec: String,
    pub matrix_size: usize,
    pub residue_char: u64,
    pub residue_size: u64,
    pub division: bool,
    pub group_order_unit: bool,
    pub sigma: Option<String>,
    pub admissible: Option<bool>,
    /// Number of centrally primitive idempotents of the residue group algebra.
    pub idempotents: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub ring: String,
    pub group: String,
    pub decision: Decision,
    pub reason: Reason,
    pub pi: Vec<u64>,
    /// Elements of the normal subgroup `N` with `G/N` a cyclic `π`-group.
    pub witness_subgroup: Option<Vec<usize>>,
    pub violated_factor: Option<usize>,
    pub factors: Vec<FactorReport>,
}

fn record_error(message: String) -> Error {
    Error::Parse {
        line: 0,
        column: 0,
        message,
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "none".to_string(), T::to_string)
}

impl Verdict {
    /// Line-oriented `key=value` rendering, stable across runs.
    pub fn to_record(&self) -> String {
        let mut out = vec![
            format!("ring={}", self.ring),
            format!("group={}", self.group),
            format!("decision={}", self.decision),
            format!("reason={}", self.reason),
            format!("pi={}", join(&self.pi)),
            format!(
                "witness_subgroup={}",
                self.witness_subgroup
                    .as_ref()
                    .map_or("none".into(), |w| join(w))
            ),
            format!("violated_factor={}", opt(&self.violated_factor)),
            format!("factors={}", self.factors.len()),
        ];
        for (i, f) in self.factors.iter().enumerate() {
            let mut kv = |k: &str, v: String| out.push(format!("factor.{i}.{k}={v}"));
            kv("spec", f.spec.clone());
            kv("matrix_size", f.matrix_size.to_string());
            kv("residue_char", f.residue_char.to_string());
            kv("residue_size", f.residue_size.to_string());
            kv("division", f.division.to_string());
            kv("group_order_unit", f.group_order_unit.to_string());
            kv("sigma", opt(&f.sigma));
            kv("admissible", opt(&f.admissible));
            kv("idempotents", opt(&f.idempotents));
        }
        let mut s = out.join("\n");
        s.push('\n');
        s
    }

    pub fn from_record(text: &str) -> Result<Verdict> {
        let mut map: HashMap<&str, &str> = HashMap::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| record_error(format!("missing '=' in {line:?}")))?;
            if map.insert(k, v).is_some() {
                return Err(record_error(format!("duplicate key {k}")));
            }
        }
        let get = |k: &str| {
            map.get(k)
                .copied()
                .ok_or_else(|| record_error(format!("missing key {k}")))
        };
        fn num<T: FromStr>(k: &str, v: &str) -> Result<T> {
            v.parse()
                .map_err(|_| record_error(format!("bad value {v:?} for {k}")))
        }
        fn maybe<T: FromStr>(k: &str, v: &str) -> Result<Option<T>> {
            if v == "none" {
                Ok(None)
            } else {
                num(k, v).map(Some)
            }
        }
        fn list<T: FromStr>(k: &str, v: &str) -> Result<Vec<T>> {
            if v.is_empty() {
                return Ok(Vec::new());
            }
            v.split(',').map(|x| num(k, x)).collect()
        }
        let n: usize = num("factors", get("factors")?)?;
        let mut factors = Vec::with_capacity(n);
        for i in 0..n {
            let f = |k: &str| get(&format!("factor.{i}.{k}"));
            factors.push(FactorReport {
                spec: f("spec")?.to_string(),
                matrix_size: num("matrix_size", f("matrix_size")?)?,
                residue_char: num("residue_char", f("residue_char")?)?,
                residue_size: num("residue_size", f("residue_size")?)?,
                division: num("division", f("division")?)?,
                group_order_unit: num("group_order_unit", f("group_order_unit")?)?,
                sigma: maybe("sigma", f("sigma")?)?,
                admissible: maybe("admissible", f("admissible")?)?,
                idempotents: maybe("idempotents", f("idempotents")?)?,
            });
        }
        let witness = get("witness_subgroup")?;
        Ok(Verdict {
            ring: get("ring")?.to_string(),
            group: get("group")?.to_string(),
            decision: get("decision")?.parse()?,
            reason: get("reason")?.parse()?,
            pi: list("pi", get("pi")?)?,
            witness_subgroup: if witness == "none" {
                None
            } else {
                Some(list("witness_subgroup", witness)?)
            },
            violated_factor: maybe("violated_factor", get("violated_factor")?)?,
            factors,
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} over {}: {} ({})",
            self.ring, self.group, self.decision, self.reason
        )?;
        if let Some(i) = self.violated_factor {
            write!(f, ", factor {i} {}", self.factors[i].spec)?;
        }
        Ok(())
    }
}
