//! JSON report layout shared by the CLI subcommands.

use serde::Serialize;

use crate::diagram::{Corner, Sign};
use crate::menasco::{MenascoLoop, Pairing, SearchStats, Verdict};
use crate::oracle::SearchOutcome;
use crate::pdcode::ValidationReport;
use crate::reduce::HypothesisReport;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

impl Default for Tool {
    fn default() -> Self {
        Tool {
            name: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputEcho {
    pub format: &'static str,
    pub text: String,
    pub pd: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct LoopEntry {
    pub crossing: usize,
    pub side: u8,
    pub face: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChordEntry {
    pub face: usize,
    pub from: Corner,
    pub to: Corner,
}

#[derive(Debug, Clone, Serialize)]
pub struct LoopReport {
    pub sign: Sign,
    pub length: usize,
    pub sequence: Vec<LoopEntry>,
    pub chords: Vec<ChordEntry>,
    pub pairing: Option<Pairing>,
}

impl LoopReport {
    pub fn new(l: &MenascoLoop, pairing: Option<Pairing>) -> Self {
        LoopReport {
            sign: l.sign,
            length: l.length(),
            sequence: l
                .key()
                .into_iter()
                .map(|(crossing, side, face)| LoopEntry {
                    crossing,
                    side,
                    face,
                })
                .collect(),
            chords: l
                .chords()
                .into_iter()
                .map(|c| ChordEntry {
                    face: c.face,
                    from: c.from,
                    to: c.to,
                })
                .collect(),
            pairing,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Options {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_states: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_crossings: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qualifying_only: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict_adjacency: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub moves: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Options {
    pub fn none() -> Self {
        Options {
            sign: None,
            max_length: None,
            max_states: None,
            max_crossings: None,
            qualifying_only: None,
            strict_adjacency: None,
            moves: None,
            seed: None,
        }
    }
}

/// One report object; sections irrelevant to a subcommand are omitted.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub report_version: u32,
    pub tool: Tool,
    pub command: &'static str,
    pub options: Options,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<HypothesisReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LoopReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub loops: Option<Vec<LoopReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<SearchOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated: Option<InputEcho>,
}

impl Report {
    pub fn new(command: &'static str, options: Options) -> Self {
        Report {
            report_version: REPORT_VERSION,
            tool: Tool::default(),
            command,
            options,
            input: None,
            validation: None,
            hypotheses: None,
            verdict: None,
            witness: None,
            search: None,
            loops: None,
            oracle: None,
            generated: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
