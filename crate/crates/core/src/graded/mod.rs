//! Associated graded rings of local rings, and automorphisms of matrix rings
//! over finite fields.

mod conj;
mod iso;

pub use conj::{decompose_matrix_automorphism, skew_matrix_iso, AutoDecomposition, SkewMatrixIso};
pub use iso::{find_ring_isomorphism, ISOMORPHISM_CAP};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ideal::IdealSet;
use crate::oracle::{self, OracleConfig};
use crate::ring::{Elem, FiniteRing, GradedData};

/// `gr_J S = ⊕ J^i/J^(i+1)` realized on the direct-sum carrier, degree 0
/// least significant.
#[derive(Clone, Debug)]
pub struct GradedRing {
    source: FiniteRing,
    ring: FiniteRing,
    /// Least coset representatives, per degree.
    reps: Vec<Vec<Elem>>,
}

impl GradedRing {
    pub fn source(&self) -> &FiniteRing {
        &self.source
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    /// Least `m` with `J^m = 0`.
    pub fn nilpotency_index(&self) -> usize {
        self.reps.len()
    }

    /// `|J^i/J^(i+1)|` for `i < m`.
    pub fn piece_sizes(&self) -> Vec<u64> {
        self.reps.iter().map(|r| r.len() as u64).collect()
    }

    /// The element of degree `degree` whose class has representative
    /// `self.representatives(degree)[class]`.
    pub fn homogeneous(&self, degree: usize, class: usize) -> Elem {
        let mut x = 0;
        for (i, r) in self.reps.iter().enumerate().rev() {
            x *= r.len() as u64;
            if i == degree {
                x += class as u64;
            }
        }
        x
    }

    pub fn representatives(&self, degree: usize) -> &[Elem] {
        &self.reps[degree]
    }

    /// Degree of a nonzero homogeneous element.
    pub fn degree(&self, mut x: Elem) -> Option<usize> {
        let mut found = None;
        for (i, r) in self.reps.iter().enumerate() {
            let d = x % r.len() as u64;
            x /= r.len() as u64;
            if d != 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

/// Builds `gr_J S` for a local ring `S`.
pub fn associated_graded(source: &FiniteRing) -> Result<GradedRing> {
    if !oracle::is_local(source)? {
        return Err(Error::precondition(format!(
            "{} is not local",
            source.label()
        )));
    }
    let j = oracle::jacobson_radical(source)?;
    let mut powers = vec![IdealSet::whole(source)?, j];
    while !powers.last().expect("nonempty").is_zero() {
        let next = powers.last().expect("nonempty").product(&powers[1])?;
        if next == *powers.last().expect("nonempty") {
            return Err(Error::inconsistent("radical is not nilpotent"));
        }
        powers.push(next);
    }
    let m = powers.len() - 1;
    let mut reps = Vec::with_capacity(m);
    let mut proj = Vec::with_capacity(m);
    for i in 0..m {
        let below = powers[i + 1].elements();
        let mut classes: HashMap<Elem, u32> = HashMap::with_capacity(powers[i].len());
        let mut r = Vec::new();
        for x in powers[i].elements() {
            if classes.contains_key(&x) {
                continue;
            }
            let c = r.len() as u32;
            r.push(x);
            for &y in &below {
                classes.insert(source.add(x, y), c);
            }
        }
        reps.push(r);
        proj.push(classes);
    }
    let data = GradedData {
        source: source.clone(),
        reps: reps.clone(),
        proj,
    };
    let ring = FiniteRing::graded(data, format!("gr({})", source.label()));
    Ok(GradedRing {
        source: source.clone(),
        ring,
        reps,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GradedLiftReport {
    pub source_principal: bool,
    pub graded_principal: bool,
}

/// Compares the principal ideal property of `S` and of `gr_J S`; a
/// mismatch is an error.
pub fn graded_lift_check(source: &FiniteRing, cfg: &OracleConfig) -> Result<GradedLiftReport> {
    cfg.admit(source)?;
    let gr = associated_graded(source)?;
    let report = GradedLiftReport {
        source_principal: oracle::is_principal_ideal_ring(source, cfg)?.principal,
        graded_principal: oracle::is_principal_ideal_ring(gr.ring(), cfg)?.principal,
    };
    if report.source_principal != report.graded_principal {
        return Err(Error::inconsistent(format!(
            "{}: principal={} but graded principal={}",
            source.label(),
            report.source_principal,
            report.graded_principal
        )));
    }
    Ok(report)
}
