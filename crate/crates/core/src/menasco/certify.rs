use std::time::Instant;

use serde::Serialize;

use super::{adjacency_pairing, find_qualifying_loop, MenascoLoop, Pairing};
use crate::pdcode::PlanarDiagram;
use crate::reduce::{hypothesis_report, HypothesisReport};

#[derive(Debug, Clone, Default)]
pub struct CertifyOptions {
    /// Require each adjacent pair's chord to run along the adjacency arc.
    pub strict_adjacency: bool,
    pub max_states: Option<u64>,
    /// Below `2C` the search is not exhaustive and cannot certify.
    pub max_length: Option<usize>,
    pub parallel: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Exhaustive search found no qualifying loop: the knot is non-trivial.
    NonTrivial,
    /// A qualifying loop exists; nothing is concluded.
    LoopFound,
    HypothesesNotMet,
    NotAKnot,
    /// The search stopped at a resource cap before exhausting all loops.
    UnknownCapped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub sign: crate::diagram::Sign,
    #[serde(rename = "loop")]
    pub menasco_loop: MenascoLoop,
    pub pairing: Pairing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub states: u64,
    pub max_length_reached: usize,
    pub length_bound: usize,
    pub exhaustive: bool,
    /// Wall-clock time; kept out of serialized reports.
    #[serde(skip)]
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertReport {
    pub hypotheses: HypothesisReport,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub search: Option<SearchStats>,
}

pub fn certify(d: &PlanarDiagram, opts: &CertifyOptions) -> CertReport {
    let hypotheses = hypothesis_report(d);
    let mut report = CertReport {
        hypotheses,
        verdict: Verdict::HypothesesNotMet,
        witness: None,
        search: None,
    };
    if d.component_count() != 1 {
        report.verdict = Verdict::NotAKnot;
        return report;
    }
    if !report.hypotheses.all_hold() {
        return report;
    }
    let full = 2 * d.crossing_count();
    let bound = opts.max_length.unwrap_or(full).min(full);
    let started = Instant::now();
    let result = find_qualifying_loop(
        d,
        Some(bound),
        opts.max_states,
        opts.strict_adjacency,
        opts.parallel,
    );
    let exhaustive = !result.capped && bound == full;
    report.search = Some(SearchStats {
        states: result.states,
        max_length_reached: result.max_length_reached,
        length_bound: bound,
        exhaustive: exhaustive && result.found.is_none(),
        elapsed_ms: started.elapsed().as_millis(),
    });
    report.verdict = match result.found {
        Some(l) => {
            let pairing = adjacency_pairing(&l, d, opts.strict_adjacency)
                .expect("search only returns loops meeting the pairing condition");
            report.witness = Some(Witness {
                sign: l.sign,
                menasco_loop: l,
                pairing,
            });
            Verdict::LoopFound
        }
        None if exhaustive => Verdict::NonTrivial,
        None => Verdict::UnknownCapped,
    };
    report
}
