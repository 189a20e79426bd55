//! The decision procedure run side by side with the exhaustive oracle.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::classify::{decide, Verdict};
use crate::corpus::NamedGroup;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::oracle::{self, MorphicReport, OracleConfig, PirReport};
use crate::ring::{FiniteRing, RingSpec};

#[derive(Debug, Clone)]
pub struct Comparison {
    pub verdict: Verdict,
    pub pir: PirReport,
    pub morphic: MorphicReport,
}

impl Comparison {
    /// Decision, ideal scan and morphic scan all say the same thing.
    pub fn agree(&self) -> bool {
        self.verdict.decision.is_pir() == self.pir.principal
            && self.pir.principal == self.morphic.morphic
    }
}

/// Builds `RG` for a coefficient ring given by spec.
pub fn group_ring(spec: &RingSpec, group: &FiniteGroup) -> Result<FiniteRing> {
    FiniteRing::group_ring(FiniteRing::build(spec)?, group.clone())
}

/// Runs `decide` and both oracle scans on `RG`.
pub fn compare(spec: &RingSpec, group: &FiniteGroup, cfg: &OracleConfig) -> Result<Comparison> {
    let verdict = decide(spec, group, cfg)?;
    let rg = group_ring(spec, group)?;
    cfg.admit(&rg)?;
    Ok(Comparison {
        verdict,
        pir: oracle::is_principal_ideal_ring(&rg, cfg)?,
        morphic: oracle::is_morphic_ring(&rg, cfg)?,
    })
}

#[derive(Debug, Clone)]
pub enum RowOutcome {
    Agree(Comparison),
    Disagree(Comparison),
    /// Over a size cap; nothing was concluded.
    Refused(String),
    Failed(String),
}

#[derive(Debug, Clone)]
pub struct CorpusRow {
    pub ring: String,
    pub group: String,
    pub outcome: RowOutcome,
    pub elapsed: Duration,
}

impl CorpusRow {
    pub fn status(&self) -> &'static str {
        match self.outcome {
            RowOutcome::Agree(_) => "AGREE",
            RowOutcome::Disagree(_) => "DISAGREE",
            RowOutcome::Refused(_) => "REFUSED",
            RowOutcome::Failed(_) => "ERROR",
        }
    }
}

/// Compares every pair on `workers` threads; rows come back in input order.
pub fn run_corpus(
    pairs: &[(RingSpec, NamedGroup)],
    cfg: &OracleConfig,
    workers: usize,
) -> Result<Vec<CorpusRow>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::precondition(format!("cannot start workers: {e}")))?;
    Ok(pool.install(|| {
        pairs
            .par_iter()
            .map(|(r, g)| {
                let start = Instant::now();
                let outcome = match compare(r, &g.group, cfg) {
                    Ok(c) if c.agree() => RowOutcome::Agree(c),
                    Ok(c) => RowOutcome::Disagree(c),
                    Err(e) if e.is_cap_refusal() => RowOutcome::Refused(e.to_string()),
                    Err(e) => RowOutcome::Failed(e.to_string()),
                };
                CorpusRow {
                    ring: r.to_string(),
                    group: g.name.clone(),
                    outcome,
                    elapsed: start.elapsed(),
                }
            })
            .collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::corpus_groups;

    #[test]
    fn small_pairs_agree() {
        let groups = corpus_groups().unwrap();
        let pick = |n: &str| groups.iter().find(|g| g.name == n).unwrap().clone();
        let pairs = vec![
            ("Zn(4)".parse().unwrap(), pick("Cyclic(2)")),
            ("Zn(4)".parse().unwrap(), pick("Cyclic(3)")),
            ("GF(2,1)".parse().unwrap(), pick("Q8")),
            ("GF(3,1)".parse().unwrap(), pick("Cyclic(7)")),
        ];
        let rows = run_corpus(&pairs, &OracleConfig::default(), 2).unwrap();
        assert_eq!(rows.len(), 4);
        for row in &rows {
            assert_eq!(row.status(), "AGREE", "{} {}", row.ring, row.group);
        }
        assert_eq!(rows[3].ring, "GF(3,1)");
    }

    #[test]
    fn over_cap_is_refused() {
        let g = FiniteGroup::build(&"Cyclic(13)".parse().unwrap()).unwrap();
        let err = compare(&"GF(2,1)".parse().unwrap(), &g, &OracleConfig::default()).unwrap_err();
        assert!(err.is_cap_refusal());
    }
}
