//! Three computed characterizations of finite principal ideal rings that
//! must agree: the ideal scan, the morphic scan, and a decomposition into
//! matrix rings over local principal ideal rings.

use super::census::{is_morphic_ring, is_principal_ideal_ring, MorphicReport, PirReport};
use super::idempotents::{central_primitive_idempotents, idempotents, is_primitive_idempotent};
use super::radical::is_local;
use super::OracleConfig;
use crate::error::{Error, Result};
use crate::ideal::{IdealSet, Side};
use crate::ring::{Elem, FiniteRing};

/// One block `Re` of the ring, examined through a primitive idempotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockReport {
    pub central_idempotent: Elem,
    /// Least primitive idempotent `f` below the block idempotent.
    pub primitive_idempotent: Elem,
    /// `k` with `Re ≅ Mat(k, fRf)`, when `RfR = Re`.
    pub matrix_size: Option<usize>,
    pub corner_size: u64,
    pub corner_local: bool,
    pub corner_principal: bool,
}

impl BlockReport {
    /// The block is a matrix ring over a local principal ideal ring.
    pub fn holds(&self) -> bool {
        self.matrix_size.is_some() && self.corner_local && self.corner_principal
    }
}

#[derive(Debug, Clone)]
pub struct PrincringsReport {
    pub pir: PirReport,
    pub morphic: MorphicReport,
    /// Decomposition read off the ring spec's canonical factors; `None` when
    /// the ring has no spec or some factor is not local.
    pub spec_shape: Option<bool>,
    pub blocks: Vec<BlockReport>,
}

impl PrincringsReport {
    pub fn block_shape(&self) -> bool {
        self.blocks.iter().all(BlockReport::holds)
    }

    pub fn holds(&self) -> bool {
        self.pir.principal
    }
}

/// Evaluates all characterizations and fails hard if they disagree.
pub fn check_princrings(ring: &FiniteRing, cfg: &OracleConfig) -> Result<PrincringsReport> {
    cfg.admit(ring)?;
    let pir = is_principal_ideal_ring(ring, cfg)?;
    let morphic = is_morphic_ring(ring, cfg)?;
    let spec_shape = spec_shape(ring, cfg)?;
    let blocks = blocks(ring, cfg)?;
    let report = PrincringsReport {
        pir,
        morphic,
        spec_shape,
        blocks,
    };
    let p = report.pir.principal;
    if report.morphic.morphic != p
        || report.block_shape() != p
        || report.spec_shape.is_some_and(|s| s != p)
    {
        return Err(Error::inconsistent(format!(
            "{}: principal={p} morphic={} blocks={} spec_shape={:?}",
            ring.label(),
            report.morphic.morphic,
            report.block_shape(),
            report.spec_shape
        )));
    }
    Ok(report)
}

fn spec_shape(ring: &FiniteRing, cfg: &OracleConfig) -> Result<Option<bool>> {
    let Some(spec) = ring.spec() else {
        return Ok(None);
    };
    let mut all = true;
    for factor in spec.canonical_factors() {
        let local = FiniteRing::build(&factor.local)?;
        if !is_local(&local)? {
            return Ok(None);
        }
        all &= is_principal_ideal_ring(&local, cfg)?.principal;
    }
    Ok(Some(all))
}

fn blocks(ring: &FiniteRing, cfg: &OracleConfig) -> Result<Vec<BlockReport>> {
    let central = central_primitive_idempotents(ring, cfg)?;
    let all = idempotents(ring, cfg)?;
    let mut out = Vec::new();
    for &e in &central {
        let f = all
            .iter()
            .copied()
            .find(|&f| ring.mul(e, f) == f && is_primitive_idempotent(ring, f, &all))
            .ok_or_else(|| Error::inconsistent("block without a primitive idempotent"))?;
        let block = IdealSet::principal(ring, e, Side::TwoSided)?;
        let generated = IdealSet::principal(ring, f, Side::TwoSided)?;
        let corner = FiniteRing::corner(ring, f)?;
        let matrix_size = if generated == block {
            exact_matrix_size(block.len() as u64, corner.size())
        } else {
            None
        };
        out.push(BlockReport {
            central_idempotent: e,
            primitive_idempotent: f,
            matrix_size,
            corner_size: corner.size(),
            corner_local: is_local(&corner)?,
            corner_principal: is_principal_ideal_ring(&corner, cfg)?.principal,
        });
    }
    Ok(out)
}

/// `k` with `corner^(k²) = block`.
fn exact_matrix_size(block: u64, corner: u64) -> Option<usize> {
    (1..=64usize).find(|&k| (corner as u128).checked_pow((k * k) as u32) == Some(block as u128))
}
