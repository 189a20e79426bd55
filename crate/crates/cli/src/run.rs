use morphic_core::corpus::named_group;
use morphic_core::crosscheck;
use morphic_core::oracle::{self, OracleConfig};
use morphic_core::{
    decide, Elem, Error, FiniteGroup, FiniteRing, GroupRingView, IdealSet, RingSpec, Verdict,
};

use crate::report::{list, Report};
use crate::{corpus, Args, Format, Mode, Status};

pub fn status_of(e: &Error) -> Status {
    match e {
        Error::CapExceeded { .. } => Status::Refused,
        Error::Inconsistent(_) => Status::Disagreement,
        _ => Status::Usage,
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

/// Runs one invocation; returns the exit status and everything for stdout.
/// Errors are written to stderr here.
pub fn run(args: &Args) -> (Status, String) {
    let mode = match (args.command, args.mode_flag) {
        (Some(a), Some(b)) if a != b => {
            eprintln!("error: mode given twice: {a:?} and {b:?}");
            return (Status::Usage, String::new());
        }
        (Some(m), _) | (None, Some(m)) => m,
        (None, None) => {
            eprintln!("error: no mode given; try `morphic --help`");
            return (Status::Usage, String::new());
        }
    };
    let cfg = OracleConfig::with_cap(args.cap);
    let result = match mode {
        Mode::Corpus => corpus::run(args, &cfg),
        _ => run_job(mode, args, &cfg),
    };
    match result {
        Ok(r) => r,
        Err(e) => {
            let status = status_of(&e);
            match status {
                Status::Refused => eprintln!("{e}"),
                _ => eprintln!("error: {e}"),
            }
            (status, String::new())
        }
    }
}

fn ring_spec(args: &Args) -> Result<RingSpec, Error> {
    args.ring
        .as_deref()
        .ok_or_else(|| usage("--ring is required"))?
        .parse()
}

/// A group spec, or failing that a corpus group name.
pub fn parse_group(text: &str) -> Result<FiniteGroup, Error> {
    match text.parse() {
        Ok(spec) => FiniteGroup::build(&spec),
        Err(parse_err) => named_group(text.trim())?.ok_or(parse_err),
    }
}

fn group(args: &Args) -> Result<FiniteGroup, Error> {
    parse_group(
        args.group
            .as_deref()
            .ok_or_else(|| usage("--group is required"))?,
    )
}

/// `R`, or `RG` when a group is given.
fn target_ring(args: &Args) -> Result<FiniteRing, Error> {
    let r = FiniteRing::build(&ring_spec(args)?)?;
    match &args.group {
        Some(_) => FiniteRing::group_ring(r, group(args)?),
        None => Ok(r),
    }
}

fn verdict_report(v: &Verdict) -> Report {
    Report::from_record(&v.to_record())
}

fn ideal_summary(ring: &FiniteRing, ideal: &IdealSet) -> String {
    let gens: Vec<String> = ideal
        .additive_generators()
        .iter()
        .map(|&x| ring.render(x))
        .collect();
    format!(
        "{} ideal of {} elements spanned by [{}]",
        ideal.side(),
        ideal.len(),
        gens.join("; ")
    )
}

fn axioms(ring: &FiniteRing, args: &Args, report: &mut Report) -> Result<(), Error> {
    ring.verify_axioms(args.samples, args.seed)?;
    let how = if ring.size() <= 256 {
        "exhaustive".to_string()
    } else {
        format!("{} samples, seed {}", args.samples, args.seed)
    };
    report.push("axioms", format!("ok ({how})"));
    Ok(())
}

fn run_job(mode: Mode, args: &Args, cfg: &OracleConfig) -> Result<(Status, String), Error> {
    let mut status = Status::Ok;
    let report = match mode {
        Mode::Decide => {
            let v = decide(&ring_spec(args)?, &group(args)?, cfg)?;
            match args.format {
                Format::Structured => return Ok((Status::Ok, v.to_record())),
                Format::Text => {
                    let mut r = Report::new();
                    r.push("verdict", &v);
                    r.extend(verdict_report(&v));
                    r
                }
            }
        }
        Mode::Compare => {
            let c = crosscheck::compare(&ring_spec(args)?, &group(args)?, cfg)?;
            let mut r = verdict_report(&c.verdict);
            r.push("oracle.principal", c.pir.principal);
            r.push("oracle.morphic", c.morphic.morphic);
            if c.agree() {
                r.push("agreement", format!("AGREE: {}", c.verdict.decision));
            } else {
                status = Status::Disagreement;
                r.push(
                    "agreement",
                    format!(
                        "DISAGREE: decide={} oracle_principal={} oracle_morphic={}",
                        c.verdict.decision, c.pir.principal, c.morphic.morphic
                    ),
                );
            }
            r
        }
        Mode::Oracle => {
            let ring = target_ring(args)?;
            let mut r = Report::new();
            r.push("ring", ring.label());
            r.push("size", ring.size());
            axioms(&ring, args, &mut r)?;
            let pir = oracle::is_principal_ideal_ring(&ring, cfg)?;
            let morphic = oracle::is_morphic_ring(&ring, cfg)?;
            r.push("principal", pir.principal);
            r.push(
                "principal_witness",
                pir.witness
                    .as_ref()
                    .map_or("none".into(), |w| ideal_summary(&ring, w)),
            );
            r.push("principal_left_ideals", pir.left_principal_count);
            r.push("principal_right_ideals", pir.right_principal_count);
            r.push("morphic", morphic.morphic);
            r.push(
                "morphic_witness",
                morphic.witness.map_or("none".into(), |(side, a)| {
                    format!("{side} {}", ring.render(a))
                }),
            );
            r
        }
        Mode::Radical => {
            let ring = target_ring(args)?;
            let j = oracle::jacobson_radical(&ring)?;
            let mut r = Report::new();
            r.push("ring", ring.label());
            r.push("size", ring.size());
            r.push("radical_size", j.len());
            r.push(
                "nilpotency_index",
                j.nilpotency_index()?
                    .map_or("none".into(), |k| k.to_string()),
            );
            let gens: Vec<String> = j
                .additive_generators()
                .iter()
                .map(|&x| ring.render(x))
                .collect();
            r.push("radical_generators", list(&gens));
            r.push("local", oracle::is_local(&ring)?);
            r.push("division", oracle::is_division_ring(&ring));
            r
        }
        Mode::Idempotents => {
            let ring = target_ring(args)?;
            let es = oracle::central_primitive_idempotents(&ring, cfg)?;
            let mut r = Report::new();
            r.push("ring", ring.label());
            r.push("count", es.len());
            for (i, &e) in es.iter().enumerate() {
                r.push(format!("idempotent.{i}"), ring.render(e));
            }
            r
        }
        Mode::Morphic => {
            let ring = target_ring(args)?;
            let mut r = Report::new();
            r.push("ring", ring.label());
            match &args.element {
                Some(text) => {
                    let a = ring.parse_element(text)?;
                    let show = |w: Option<Elem>| w.map_or("none".to_string(), |b| ring.render(b));
                    let left = oracle::is_left_morphic_element(&ring, a, cfg)?;
                    let right = oracle::is_right_morphic_element(&ring, a, cfg)?;
                    r.push("element", ring.render(a));
                    r.push("left_morphic", left.is_some());
                    r.push("left_witness", show(left));
                    r.push("right_morphic", right.is_some());
                    r.push("right_witness", show(right));
                }
                None => {
                    let m = oracle::is_morphic_ring(&ring, cfg)?;
                    r.push("morphic", m.morphic);
                    r.push(
                        "witness",
                        m.witness.map_or("none".into(), |(side, a)| {
                            format!("{side} {}", ring.render(a))
                        }),
                    );
                }
            }
            r
        }
        Mode::DimensionSubgroups => {
            let base = FiniteRing::build(&ring_spec(args)?)?;
            let g = group(args)?;
            let view = GroupRingView::build(&base, &g)?;
            let mut r = Report::new();
            r.push("ring", view.ring().label());
            for (i, d) in view.dimension_subgroups(args.depth)?.iter().enumerate() {
                r.push(format!("D{}", i + 1), format!("[{}]", list(d.elements())));
            }
            r
        }
        Mode::Princrings => {
            let ring = target_ring(args)?;
            let p = oracle::check_princrings(&ring, cfg)?;
            let mut r = Report::new();
            r.push("ring", ring.label());
            r.push("principal", p.pir.principal);
            r.push("morphic", p.morphic.morphic);
            r.push("block_shape", p.block_shape());
            r.push(
                "spec_shape",
                p.spec_shape.map_or("none".into(), |s| s.to_string()),
            );
            r.push("blocks", p.blocks.len());
            for (i, b) in p.blocks.iter().enumerate() {
                r.push(
                    format!("block.{i}"),
                    format!(
                        "matrix_size={} corner_size={} corner_local={} corner_principal={}",
                        b.matrix_size.map_or("none".into(), |k| k.to_string()),
                        b.corner_size,
                        b.corner_local,
                        b.corner_principal
                    ),
                );
            }
            r
        }
        Mode::Corpus => unreachable!("handled by corpus::run"),
    };
    Ok((status, report.render(args.format)))
}
