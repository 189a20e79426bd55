use std::time::Instant;

use morphic_core::corpus::{coefficient_rings, corpus_groups, decide_pairs, NamedGroup};
use morphic_core::crosscheck::{run_corpus, CorpusRow, RowOutcome};
use morphic_core::oracle::{self, OracleConfig};
use morphic_core::{decide, Error, FiniteRing, RingSpec};

use crate::{Args, Format, Status};

/// Every canonical factor is a matrix ring over a field.
fn semisimple(spec: &RingSpec) -> Result<bool, Error> {
    for f in spec.canonical_factors() {
        if !oracle::is_division_ring(&FiniteRing::build(&f.local)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn keep(filter: &str, spec: &RingSpec, group: &NamedGroup) -> Result<bool, Error> {
    let ring = spec.to_string();
    for term in filter.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let hit = match term {
            "semisimple" => semisimple(spec)?,
            _ => ring.contains(term) || group.name.contains(term),
        };
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

fn fits(spec: &RingSpec, group: &NamedGroup, cap: u64) -> Result<bool, Error> {
    Ok((spec.size()? as u128)
        .checked_pow(group.group.order() as u32)
        .is_some_and(|n| n <= cap as u128))
}

struct Line {
    ring: String,
    group: String,
    decision: String,
    reason: String,
    oracle: String,
    status: &'static str,
    millis: u128,
}

fn line(row: CorpusRow) -> Line {
    let (decision, reason, oracle) = match &row.outcome {
        RowOutcome::Agree(c) | RowOutcome::Disagree(c) => (
            c.verdict.decision.to_string(),
            c.verdict.reason.to_string(),
            format!("pir={} morphic={}", c.pir.principal, c.morphic.morphic),
        ),
        RowOutcome::Refused(e) | RowOutcome::Failed(e) => ("-".into(), "-".into(), e.clone()),
    };
    Line {
        status: row.status(),
        millis: row.elapsed.as_millis(),
        ring: row.ring,
        group: row.group,
        decision,
        reason,
        oracle,
    }
}

/// Decision only, for pairs whose group ring is over the cap.
fn decide_only(spec: &RingSpec, group: &NamedGroup, cfg: &OracleConfig) -> Line {
    let start = Instant::now();
    let (decision, reason, status) = match decide(spec, &group.group, cfg) {
        Ok(v) => (v.decision.to_string(), v.reason.to_string(), "REFUSED"),
        Err(e) if e.is_cap_refusal() => ("-".into(), e.to_string(), "REFUSED"),
        Err(e) => ("-".into(), e.to_string(), "ERROR"),
    };
    Line {
        ring: spec.to_string(),
        group: group.name.clone(),
        decision,
        reason,
        oracle: "over cap".into(),
        status,
        millis: start.elapsed().as_millis(),
    }
}

pub fn run(args: &Args, cfg: &OracleConfig) -> Result<(Status, String), Error> {
    let pairs = if args.run_all {
        let groups = corpus_groups()?;
        let mut all = Vec::new();
        for r in coefficient_rings() {
            for g in &groups {
                all.push((r.clone(), g.clone()));
            }
        }
        all
    } else {
        decide_pairs(args.cap)?
    };
    let mut selected = Vec::new();
    for (r, g) in pairs {
        if args
            .filter
            .as_deref()
            .map_or(Ok(true), |f| keep(f, &r, &g))?
        {
            selected.push((r, g));
        }
    }

    let mut in_cap = Vec::new();
    let mut slots: Vec<Option<Line>> = Vec::with_capacity(selected.len());
    for (r, g) in &selected {
        if fits(r, g, cfg.cap)? {
            in_cap.push((r.clone(), g.clone()));
            slots.push(None);
        } else {
            slots.push(Some(decide_only(r, g, cfg)));
        }
    }
    let mut rows = run_corpus(&in_cap, cfg, args.workers)?
        .into_iter()
        .map(line);
    let lines: Vec<Line> = slots
        .into_iter()
        .map(|s| s.unwrap_or_else(|| rows.next().expect("one row per in-cap pair")))
        .collect();

    let count = |s: &str| lines.iter().filter(|l| l.status == s).count();
    let (agree, disagree, refused, errors) = (
        count("AGREE"),
        count("DISAGREE"),
        count("REFUSED"),
        count("ERROR"),
    );
    let mut out = String::new();
    match args.format {
        Format::Text => {
            out.push_str(&format!(
                "{:<44} {:<38} {:<7} {:<19} {:<26} {:<8} {:>8}\n",
                "ring", "group", "decide", "reason", "oracle", "status", "ms"
            ));
            for l in &lines {
                out.push_str(&format!(
                    "{:<44} {:<38} {:<7} {:<19} {:<26} {:<8} {:>8}\n",
                    l.ring, l.group, l.decision, l.reason, l.oracle, l.status, l.millis
                ));
            }
        }
        Format::Structured => {
            for l in &lines {
                out.push_str(&format!(
                    "ring={}\tgroup={}\tdecision={}\treason={}\toracle={}\tstatus={}\tms={}\n",
                    l.ring, l.group, l.decision, l.reason, l.oracle, l.status, l.millis
                ));
            }
        }
    }
    out.push_str(&format!(
        "pairs={} agree={agree} disagree={disagree} refused={refused} errors={errors}\n",
        lines.len()
    ));
    let status = if disagree + errors > 0 {
        Status::Disagreement
    } else {
        Status::Ok
    };
    Ok((status, out))
}
