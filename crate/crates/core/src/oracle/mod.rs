//! Independent checks by Reidemeister-move search.
//!
//! States are knot diagrams identified by canonical signed Gauss codes. The
//! search never claims non-triviality; it either reaches the crossing-free
//! diagram or gives up at its caps.

mod moves;

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use moves::{raw_neighbors, MoveFilter, RawMove};
pub use moves::{MoveKind, MoveSite};

use crate::diagram::{trace_faces, Corner};
use crate::pdcode::{GaussCode, PlanarDiagram, Traversal, Visit};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("diagram has {0} components; only knots are supported")]
    NotAKnot(usize),
}

/// One applicable Reidemeister move and the diagram it produces.
#[derive(Debug, Clone)]
pub struct MoveApplication {
    pub kind: MoveKind,
    pub site: MoveSite,
    pub result: PlanarDiagram,
}

fn knot_code(d: &PlanarDiagram) -> Result<(GaussCode, Traversal), OracleError> {
    d.to_gauss()
        .ok_or(OracleError::NotAKnot(d.component_count()))
}

/// Rewrites a site from the Gauss-derived diagram's ids to `d`'s ids.
fn map_site(site: MoveSite, d: &PlanarDiagram, code: &GaussCode, t: &Traversal) -> MoveSite {
    if d.is_crossing_free() {
        return site;
    }
    let faces = trace_faces(d);
    let local = trace_faces(&PlanarDiagram::from_gauss_unchecked(code));
    let face = |f: usize| {
        let c = local.faces[f].corners[0];
        faces.face_of(Corner::new(t.crossing_of_label[c.crossing], c.index))
    };
    let cross = |c: usize| t.crossing_of_label[c];
    let arc = |a: usize| t.arc_of_gap[a];
    match site {
        MoveSite::Monogon { face: f, crossing } => MoveSite::Monogon {
            face: face(f),
            crossing: cross(crossing),
        },
        MoveSite::Bigon { face: f, crossings } => MoveSite::Bigon {
            face: face(f),
            crossings: (cross(crossings.0), cross(crossings.1)),
        },
        MoveSite::Kink {
            arc: a,
            side,
            over_first,
            sign,
        } => MoveSite::Kink {
            arc: a.map(arc),
            side,
            over_first,
            sign,
        },
        MoveSite::FacePair {
            face: f,
            finger,
            target,
            finger_over,
        } => MoveSite::FacePair {
            face: face(f),
            finger: arc(finger),
            target: arc(target),
            finger_over,
        },
        MoveSite::Triangle { face: f, crossings } => MoveSite::Triangle {
            face: face(f),
            crossings: crossings.map(cross),
        },
    }
}

/// All single Reidemeister moves applicable to a knot diagram. Sites use the
/// ids of `d`.
pub fn neighbors(d: &PlanarDiagram) -> Result<Vec<MoveApplication>, OracleError> {
    let (code, traversal) = knot_code(d)?;
    Ok(raw_neighbors(&code, MoveFilter::ALL)
        .into_iter()
        .map(|m| MoveApplication {
            kind: m.kind,
            site: map_site(m.site, d, &code, &traversal),
            result: PlanarDiagram::from_gauss_unchecked(&m.result),
        })
        .collect())
}

fn token(v: Visit, label: usize, sign: i8) -> u32 {
    ((label as u32) << 2) | ((v.over as u32) << 1) | (sign > 0) as u32
}

/// Least code over all starting visits and both directions, with crossings
/// relabeled by first appearance. Tokens compare by (label, over, sign).
pub(crate) fn canonical_gauss(code: &GaussCode) -> GaussCode {
    let n = code.visits.len();
    if n == 0 {
        return code.clone();
    }
    let reversed: Vec<Visit> = code.visits.iter().rev().copied().collect();
    let mut best: Option<(Vec<u32>, &[Visit], usize)> = None;
    let mut label = vec![usize::MAX; code.signs.len()];
    let mut tokens = Vec::with_capacity(n);
    for seq in [&code.visits[..], &reversed[..]] {
        for start in 0..n {
            label.iter_mut().for_each(|l| *l = usize::MAX);
            tokens.clear();
            let mut next = 0;
            let mut order = Ordering::Equal;
            for i in 0..n {
                let v = seq[(start + i) % n];
                if label[v.crossing] == usize::MAX {
                    label[v.crossing] = next;
                    next += 1;
                }
                let t = token(v, label[v.crossing], code.signs[v.crossing]);
                if let Some((b, _, _)) = &best {
                    if order == Ordering::Equal {
                        order = t.cmp(&b[i]);
                        if order == Ordering::Greater {
                            break;
                        }
                    }
                }
                tokens.push(t);
            }
            if best.is_none() || order == Ordering::Less {
                best = Some((tokens.clone(), seq, start));
            }
        }
    }
    let (_, seq, start) = best.unwrap();
    let mut label = vec![usize::MAX; code.signs.len()];
    let mut signs = Vec::with_capacity(code.signs.len());
    let mut visits = Vec::with_capacity(n);
    for i in 0..n {
        let v = seq[(start + i) % n];
        if label[v.crossing] == usize::MAX {
            label[v.crossing] = signs.len();
            signs.push(code.signs[v.crossing]);
        }
        visits.push(Visit {
            crossing: label[v.crossing],
            over: v.over,
        });
    }
    GaussCode { visits, signs }
}

fn state_key(code: &GaussCode) -> Vec<u32> {
    code.visits
        .iter()
        .map(|&v| token(v, v.crossing, code.signs[v.crossing]))
        .collect()
}

/// Canonical signed Gauss code of a knot diagram; equal for two diagrams
/// exactly when they are isomorphic as oriented-sphere maps.
pub fn canonical_code(d: &PlanarDiagram) -> Result<String, OracleError> {
    let (code, _) = knot_code(d)?;
    Ok(canonical_gauss(&code).to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SearchStatus {
    Unknot,
    Unknown,
}

/// One step of a simplification path; the site refers to the canonical
/// diagram of the previous state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoveRecord {
    pub kind: MoveKind,
    #[serde(flatten)]
    pub site: MoveSite,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub path: Option<Vec<MoveRecord>>,
    pub states_explored: usize,
}

/// Search over canonical codes for the crossing-free diagram. States are
/// expanded fewest crossings first, ties in discovery order, so with ample
/// caps this is breadth-first within each crossing count.
pub fn unknot_search(
    d: &PlanarDiagram,
    max_crossings: usize,
    max_states: usize,
) -> Result<SearchOutcome, OracleError> {
    let (code, _) = knot_code(d)?;
    let start = canonical_gauss(&code);
    if start.visits.is_empty() {
        return Ok(SearchOutcome {
            status: SearchStatus::Unknot,
            path: Some(Vec::new()),
            states_explored: 1,
        });
    }
    let filter = MoveFilter {
        max_crossings,
        ..MoveFilter::ALL
    };
    // (state, parent index, move that produced it)
    let mut states: Vec<(GaussCode, Option<(usize, MoveKind, MoveSite)>)> =
        vec![(start.clone(), None)];
    let mut seen: HashMap<Vec<u32>, usize> = HashMap::from([(state_key(&start), 0)]);
    let mut queue = BinaryHeap::from([Reverse((start.signs.len(), 0usize))]);
    while let Some(Reverse((_, idx))) = queue.pop() {
        let current = states[idx].0.clone();
        for RawMove { kind, site, result } in raw_neighbors(&current, filter) {
            let canon = canonical_gauss(&result);
            let key = state_key(&canon);
            if seen.contains_key(&key) {
                continue;
            }
            if seen.len() >= max_states {
                return Ok(SearchOutcome {
                    status: SearchStatus::Unknown,
                    path: None,
                    states_explored: seen.len(),
                });
            }
            let id = states.len();
            seen.insert(key, id);
            let done = canon.visits.is_empty();
            let crossings = canon.signs.len();
            states.push((canon, Some((idx, kind, site))));
            if done {
                return Ok(SearchOutcome {
                    status: SearchStatus::Unknot,
                    path: Some(trace_path(&states, id)),
                    states_explored: seen.len(),
                });
            }
            queue.push(Reverse((crossings, id)));
        }
    }
    Ok(SearchOutcome {
        status: SearchStatus::Unknown,
        path: None,
        states_explored: seen.len(),
    })
}

fn trace_path(
    states: &[(GaussCode, Option<(usize, MoveKind, MoveSite)>)],
    mut id: usize,
) -> Vec<MoveRecord> {
    let mut path = Vec::new();
    while let Some((parent, kind, site)) = &states[id].1 {
        path.push(MoveRecord {
            kind: *kind,
            site: site.clone(),
            result: states[id].0.to_string(),
        });
        id = *parent;
    }
    path.reverse();
    path
}

/// Diagram of the trivial knot made by `move_count` uniformly chosen
/// crossing-increasing or Reidemeister III moves from the crossing-free
/// diagram.
pub fn random_unknot(move_count: usize, seed: u64) -> PlanarDiagram {
    PlanarDiagram::from_gauss_unchecked(&random_unknot_code(move_count, seed))
}

pub(crate) fn random_unknot_code(move_count: usize, seed: u64) -> GaussCode {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let filter = MoveFilter {
        removes: false,
        ..MoveFilter::ALL
    };
    let mut code = GaussCode {
        visits: Vec::new(),
        signs: Vec::new(),
    };
    for _ in 0..move_count {
        let mut options = raw_neighbors(&code, filter);
        let pick = rng.random_range(0..options.len());
        code = options.swap_remove(pick).result;
    }
    code
}
