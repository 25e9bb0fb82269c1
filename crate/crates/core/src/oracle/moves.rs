//! Reidemeister moves as edits of signed Gauss codes.
//!
//! Site ids (crossings, arcs, faces) refer to the diagram built from the
//! code: crossing `k` is label `k` and arc `p` is the gap after visit `p`.

use serde::Serialize;

use crate::diagram::{arc_kind, trace_faces, AdjacencyKind, ArcSide};
use crate::pdcode::{GaussCode, PlanarDiagram, Visit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MoveKind {
    #[serde(rename = "RI-remove")]
    RIRemove,
    #[serde(rename = "RI-add")]
    RIAdd,
    #[serde(rename = "RII-remove")]
    RIIRemove,
    #[serde(rename = "RII-add")]
    RIIAdd,
    #[serde(rename = "RIII")]
    RIII,
}

impl MoveKind {
    pub fn crossing_delta(self) -> i64 {
        match self {
            MoveKind::RIRemove => -1,
            MoveKind::RIAdd => 1,
            MoveKind::RIIRemove => -2,
            MoveKind::RIIAdd => 2,
            MoveKind::RIII => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "site", rename_all = "snake_case")]
pub enum MoveSite {
    Monogon {
        face: usize,
        crossing: usize,
    },
    Bigon {
        face: usize,
        crossings: (usize, usize),
    },
    /// A kink on one side of an arc (no arc for the crossing-free diagram).
    Kink {
        arc: Option<usize>,
        side: Option<ArcSide>,
        over_first: bool,
        sign: i8,
    },
    /// `finger` is pushed across `target` through `face`.
    FacePair {
        face: usize,
        finger: usize,
        target: usize,
        finger_over: bool,
    },
    Triangle {
        face: usize,
        crossings: [usize; 3],
    },
}

/// Which move families to generate.
#[derive(Debug, Clone, Copy)]
pub(crate) struct MoveFilter {
    pub removes: bool,
    pub adds: bool,
    pub r3: bool,
    pub max_crossings: usize,
}

impl MoveFilter {
    pub const ALL: MoveFilter = MoveFilter {
        removes: true,
        adds: true,
        r3: true,
        max_crossings: usize::MAX,
    };
}

#[derive(Debug, Clone)]
pub(crate) struct RawMove {
    pub kind: MoveKind,
    pub site: MoveSite,
    pub result: GaussCode,
}

fn delete_crossings(code: &GaussCode, gone: &[usize]) -> GaussCode {
    let n = code.signs.len();
    let mut relabel = vec![usize::MAX; n];
    let mut signs = Vec::with_capacity(n - gone.len());
    for c in 0..n {
        if !gone.contains(&c) {
            relabel[c] = signs.len();
            signs.push(code.signs[c]);
        }
    }
    let visits = code
        .visits
        .iter()
        .filter(|v| relabel[v.crossing] != usize::MAX)
        .map(|v| Visit {
            crossing: relabel[v.crossing],
            over: v.over,
        })
        .collect();
    GaussCode { visits, signs }
}

/// Inserts visit runs after the given gaps.
fn insert_after(code: &GaussCode, inserts: &[(usize, Vec<Visit>)], new_signs: &[i8]) -> GaussCode {
    let mut visits = Vec::with_capacity(code.visits.len() + 4);
    for (p, v) in code.visits.iter().enumerate() {
        visits.push(*v);
        for (gap, run) in inserts {
            if *gap == p {
                visits.extend_from_slice(run);
            }
        }
    }
    let mut signs = code.signs.clone();
    signs.extend_from_slice(new_signs);
    GaussCode { visits, signs }
}

fn kink_side(over_first: bool, sign: i8) -> ArcSide {
    // Over-first negative and under-first positive curl to the left.
    if over_first == (sign < 0) {
        ArcSide::Left
    } else {
        ArcSide::Right
    }
}

pub(crate) fn raw_neighbors(code: &GaussCode, filter: MoveFilter) -> Vec<RawMove> {
    let mut out = Vec::new();
    let n = code.signs.len();
    let can_add = |k: usize| filter.adds && n + k <= filter.max_crossings;

    if n == 0 {
        if can_add(1) {
            for over_first in [true, false] {
                for sign in [1i8, -1] {
                    out.push(RawMove {
                        kind: MoveKind::RIAdd,
                        site: MoveSite::Kink {
                            arc: None,
                            side: None,
                            over_first,
                            sign,
                        },
                        result: GaussCode {
                            visits: vec![
                                Visit {
                                    crossing: 0,
                                    over: over_first,
                                },
                                Visit {
                                    crossing: 0,
                                    over: !over_first,
                                },
                            ],
                            signs: vec![sign],
                        },
                    });
                }
            }
        }
        return out;
    }

    let d = PlanarDiagram::from_gauss_unchecked(code);
    let faces = trace_faces(&d);

    if filter.removes {
        for f in &faces.faces {
            if f.len() == 1 {
                let c = f.corners[0].crossing;
                out.push(RawMove {
                    kind: MoveKind::RIRemove,
                    site: MoveSite::Monogon {
                        face: f.id,
                        crossing: c,
                    },
                    result: delete_crossings(code, &[c]),
                });
            }
        }
        for f in faces.faces.iter().filter(|f| f.len() == 2) {
            let (a, b) = (f.corners[0].crossing, f.corners[1].crossing);
            let kinds = (arc_kind(&d, f.arcs[0].0), arc_kind(&d, f.arcs[1].0));
            let reducible = matches!(
                kinds,
                (AdjacencyKind::Plus, AdjacencyKind::Minus)
                    | (AdjacencyKind::Minus, AdjacencyKind::Plus)
            );
            if a != b && reducible {
                out.push(RawMove {
                    kind: MoveKind::RIIRemove,
                    site: MoveSite::Bigon {
                        face: f.id,
                        crossings: (a, b),
                    },
                    result: delete_crossings(code, &[a, b]),
                });
            }
        }
    }

    if can_add(1) {
        for gap in 0..code.visits.len() {
            for over_first in [true, false] {
                for sign in [1i8, -1] {
                    let run = vec![
                        Visit {
                            crossing: n,
                            over: over_first,
                        },
                        Visit {
                            crossing: n,
                            over: !over_first,
                        },
                    ];
                    out.push(RawMove {
                        kind: MoveKind::RIAdd,
                        site: MoveSite::Kink {
                            arc: Some(gap),
                            side: Some(kink_side(over_first, sign)),
                            over_first,
                            sign,
                        },
                        result: insert_after(code, &[(gap, run)], &[sign]),
                    });
                }
            }
        }
    }

    if can_add(2) {
        for f in &faces.faces {
            let m = f.len();
            for i in 0..m {
                for j in 0..m {
                    let (finger, finger_side) = f.arcs[i];
                    let (target, target_side) = f.arcs[j];
                    if finger == target {
                        continue;
                    }
                    for finger_over in [true, false] {
                        out.push(RawMove {
                            kind: MoveKind::RIIAdd,
                            site: MoveSite::FacePair {
                                face: f.id,
                                finger,
                                target,
                                finger_over,
                            },
                            result: finger_move(
                                code,
                                finger,
                                finger_side,
                                target,
                                target_side,
                                finger_over,
                            ),
                        });
                    }
                }
            }
        }
    }

    if filter.r3 {
        for f in faces.faces.iter().filter(|f| f.len() == 3) {
            let cs = [
                f.corners[0].crossing,
                f.corners[1].crossing,
                f.corners[2].crossing,
            ];
            if cs[0] == cs[1] || cs[1] == cs[2] || cs[0] == cs[2] {
                continue;
            }
            let kinds: Vec<AdjacencyKind> = f.arcs.iter().map(|&(a, _)| arc_kind(&d, a)).collect();
            let admissible =
                kinds.contains(&AdjacencyKind::Plus) && kinds.contains(&AdjacencyKind::Minus);
            if !admissible {
                continue;
            }
            let len = code.visits.len();
            let mut visits = code.visits.clone();
            for &(gap, _) in &f.arcs {
                visits.swap(gap, (gap + 1) % len);
            }
            out.push(RawMove {
                kind: MoveKind::RIII,
                site: MoveSite::Triangle {
                    face: f.id,
                    crossings: cs,
                },
                result: GaussCode {
                    visits,
                    signs: code.signs.clone(),
                },
            });
        }
    }
    out
}

/// Pushes a finger of arc `finger` across arc `target` through a face they
/// both bound, creating crossings `a` then `b` along the finger.
///
/// Locally the face is a strip with the finger's arc along the bottom and the
/// target's along the top; the face walk runs west along the bottom and east
/// along the top. The finger crosses the top going up at `a` and down at `b`.
fn finger_move(
    code: &GaussCode,
    finger: usize,
    finger_side: ArcSide,
    target: usize,
    target_side: ArcSide,
    finger_over: bool,
) -> GaussCode {
    let n = code.signs.len();
    let (a, b) = (n, n + 1);
    let finger_east = finger_side == ArcSide::Left;
    let target_east = target_side == ArcSide::Right;
    let target_dir: i8 = if target_east { 1 } else { -1 };
    // Over-strand up at `a` across an under-strand heading east is negative.
    let sign_a = if finger_over { -target_dir } else { target_dir };
    let finger_run = vec![
        Visit {
            crossing: a,
            over: finger_over,
        },
        Visit {
            crossing: b,
            over: finger_over,
        },
    ];
    let target_order = if finger_east == target_east {
        [a, b]
    } else {
        [b, a]
    };
    let target_run = target_order
        .iter()
        .map(|&c| Visit {
            crossing: c,
            over: !finger_over,
        })
        .collect();
    insert_after(
        code,
        &[(finger, finger_run), (target, target_run)],
        &[sign_a, -sign_a],
    )
}
