//! Full analysis of one spec: Gray image parameters, N-matrix lifts,
//! reversibility and the DNA code.

use skewdna_core::dna::{check_sufficient, construction2};
use skewdna_core::{CodeParams, Error, GrayVariant, NMatrix, ReversibilityReport, RowMode};

use crate::formats::{ParamsJson, ParsedSpec, ReportJson, SpecJson};
use crate::parallel::params_or_bound;
use crate::store::{now, toolchain, CodeRecord, LiftEntry};

/// Codewords scanned for an upper bound when a code exceeds the budget.
pub const PARTIAL_SCAN: u64 = 1 << 20;

#[derive(Clone, Debug)]
pub struct Analysis {
    pub params: CodeParams,
    pub lifts: Vec<(NMatrix, RowMode, CodeParams)>,
    pub report: ReversibilityReport,
    pub dna: Option<CodeParams>,
}

/// Distances are exact within `budget` and upper bounds beyond it.
pub fn analyze(p: &ParsedSpec, budget: u64, with_lifts: bool) -> Analysis {
    let params = params_or_bound(&p.spec.gray_image(p.variant), budget, PARTIAL_SCAN);
    let mut lifts = Vec::new();
    if with_lifts {
        for mode in RowMode::ALL {
            for nm in NMatrix::PRESETS {
                let c = p.spec.construction1(nm, mode);
                lifts.push((nm, mode, params_or_bound(&c, budget, PARTIAL_SCAN)));
            }
        }
    }
    let report = check_sufficient(&p.spec);
    let dna = match construction2(&p.spec, GrayVariant::AAb) {
        Ok(d) => Some(params_or_bound(&d, budget, PARTIAL_SCAN)),
        Err(Error::NotReversible) => None,
        Err(e) => unreachable!("{e}"),
    };
    Analysis {
        params,
        lifts,
        report,
        dna,
    }
}

pub fn to_record(p: &ParsedSpec, a: &Analysis) -> CodeRecord {
    let spec = SpecJson::from(p);
    CodeRecord {
        spec_hash: spec.hash().expect("printed spec parses"),
        spec,
        params: ParamsJson::from(&a.params),
        construction1: a
            .lifts
            .iter()
            .map(|(nm, mode, params)| LiftEntry {
                nmatrix: nm.to_string(),
                row_mode: mode.to_string(),
                params: ParamsJson::from(params),
            })
            .collect(),
        reversibility: ReportJson::from(&a.report),
        dna_params: a.dna.as_ref().map(ParamsJson::from),
        timestamp: now(),
        toolchain: toolchain(),
    }
}
