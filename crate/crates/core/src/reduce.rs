//! Reducedness and primeness of a diagram, with re-checkable witnesses.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::diagram::{arc_kind, trace_faces, AdjacencyKind, Faces};
use crate::pdcode::PlanarDiagram;

/// A bigon face whose over-arc is over at both ends and whose under-arc is
/// under at both ends, so a Reidemeister II move removes its two crossings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BigonWitness {
    pub face: usize,
    pub crossings: (usize, usize),
    pub over_arc: usize,
    pub under_arc: usize,
}

/// Why a diagram fails to be prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum PrimeFailure {
    NoCrossing,
    Disconnected {
        parts: Vec<Vec<usize>>,
    },
    /// An arc with the same face on both sides.
    SameFaceArc {
        arc: usize,
        face: usize,
    },
    /// Two arcs flanked by the same pair of faces whose removal splits the
    /// crossings into the two given sets.
    CutPair {
        arcs: (usize, usize),
        faces: (usize, usize),
        parts: (Vec<usize>, Vec<usize>),
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Witnesses {
    pub monogon: Option<usize>,
    pub reducible_bigon: Option<BigonWitness>,
    pub prime_failure: Option<PrimeFailure>,
    pub nugatory_crossing: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub connected: bool,
    pub has_crossing: bool,
    pub i_reduced: bool,
    pub ii_reduced: bool,
    pub prime: bool,
    pub nugatory_free: bool,
    /// Always true for connected diagrams on the sphere.
    pub checkerboard_colorable: bool,
    pub witnesses: Witnesses,
}

impl HypothesisReport {
    /// Connected, I-reduced, II-reduced and prime.
    pub fn all_hold(&self) -> bool {
        self.connected && self.has_crossing && self.i_reduced && self.ii_reduced && self.prime
    }
}

/// Lowest-id face with a single corner, if any.
pub fn find_monogon(faces: &Faces) -> Option<usize> {
    faces.faces.iter().find(|f| f.len() == 1).map(|f| f.id)
}

#[allow(non_snake_case)]
pub fn is_I_reduced(d: &PlanarDiagram) -> (bool, Option<usize>) {
    let m = find_monogon(&trace_faces(d));
    (m.is_none(), m)
}

pub fn find_reducible_bigon(d: &PlanarDiagram, faces: &Faces) -> Option<BigonWitness> {
    faces.faces.iter().filter(|f| f.len() == 2).find_map(|f| {
        let (e1, e2) = (f.arcs[0].0, f.arcs[1].0);
        let (over_arc, under_arc) = match (arc_kind(d, e1), arc_kind(d, e2)) {
            (AdjacencyKind::Plus, AdjacencyKind::Minus) => (e1, e2),
            (AdjacencyKind::Minus, AdjacencyKind::Plus) => (e2, e1),
            _ => return None,
        };
        Some(BigonWitness {
            face: f.id,
            crossings: (f.corners[0].crossing, f.corners[1].crossing),
            over_arc,
            under_arc,
        })
    })
}

#[allow(non_snake_case)]
pub fn is_II_reduced(d: &PlanarDiagram) -> (bool, Option<BigonWitness>) {
    let w = find_reducible_bigon(d, &trace_faces(d));
    (w.is_none(), w)
}

/// Crossing sets left after deleting two arcs, when deletion disconnects
/// the projection graph.
fn split_by(d: &PlanarDiagram, e1: usize, e2: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = d.crossing_count();
    let mut adj = vec![Vec::new(); n];
    for (i, a) in d.arcs().iter().enumerate() {
        if i != e1 && i != e2 {
            adj[a.tail.crossing].push(a.head.crossing);
            adj[a.head.crossing].push(a.tail.crossing);
        }
    }
    let start = d.arcs()[e1].tail.crossing;
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(c) = stack.pop() {
        for &x in &adj[c] {
            if !seen[x] {
                seen[x] = true;
                stack.push(x);
            }
        }
    }
    let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&c| seen[c]);
    if b.is_empty() {
        None
    } else {
        Some((a, b))
    }
}

pub fn find_prime_failure(d: &PlanarDiagram, faces: &Faces) -> Option<PrimeFailure> {
    if d.is_crossing_free() {
        return Some(PrimeFailure::NoCrossing);
    }
    let (label, pieces) = d.projection_components();
    if pieces > 1 {
        let mut parts = vec![Vec::new(); pieces];
        for (c, &l) in label.iter().enumerate() {
            parts[l].push(c);
        }
        return Some(PrimeFailure::Disconnected { parts });
    }
    let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for arc in 0..d.arc_count() {
        let (r, l) = faces.flanking(arc);
        if r == l {
            if d.crossing_count() >= 2 {
                return Some(PrimeFailure::SameFaceArc { arc, face: r });
            }
            continue;
        }
        by_pair.entry((r.min(l), r.max(l))).or_default().push(arc);
    }
    let mut best: Option<PrimeFailure> = None;
    for (&pair, arcs) in &by_pair {
        for (i, &e1) in arcs.iter().enumerate() {
            for &e2 in &arcs[i + 1..] {
                if let Some(parts) = split_by(d, e1, e2) {
                    let candidate = PrimeFailure::CutPair {
                        arcs: (e1, e2),
                        faces: pair,
                        parts,
                    };
                    let better = match &best {
                        Some(PrimeFailure::CutPair { arcs, .. }) => (e1, e2) < *arcs,
                        _ => true,
                    };
                    if better {
                        best = Some(candidate);
                    }
                }
            }
        }
    }
    best
}

pub fn is_prime(d: &PlanarDiagram) -> (bool, Option<PrimeFailure>) {
    let w = if d.is_crossing_free() {
        Some(PrimeFailure::NoCrossing)
    } else {
        find_prime_failure(d, &trace_faces(d))
    };
    (w.is_none(), w)
}

fn nugatory_with(faces: &Faces, n: usize) -> Vec<usize> {
    use crate::diagram::Corner;
    (0..n)
        .filter(|&c| {
            (0..2u8)
                .any(|k| faces.face_of(Corner::new(c, k)) == faces.face_of(Corner::new(c, k + 2)))
        })
        .collect()
}

/// Crossings with two diagonally opposite corners in the same face.
pub fn nugatory_crossings(d: &PlanarDiagram) -> Vec<usize> {
    if d.is_crossing_free() {
        return Vec::new();
    }
    nugatory_with(&trace_faces(d), d.crossing_count())
}

pub fn hypothesis_report(d: &PlanarDiagram) -> HypothesisReport {
    if d.is_crossing_free() {
        return HypothesisReport {
            connected: true,
            has_crossing: false,
            i_reduced: true,
            ii_reduced: true,
            prime: false,
            nugatory_free: true,
            checkerboard_colorable: true,
            witnesses: Witnesses {
                prime_failure: Some(PrimeFailure::NoCrossing),
                ..Witnesses::default()
            },
        };
    }
    let faces = trace_faces(d);
    let monogon = find_monogon(&faces);
    let reducible_bigon = find_reducible_bigon(d, &faces);
    let prime_failure = find_prime_failure(d, &faces);
    let nugatory = nugatory_with(&faces, d.crossing_count());
    let colorable = crate::diagram::checkerboard(d, &faces).is_ok();
    HypothesisReport {
        connected: d.is_connected(),
        has_crossing: true,
        i_reduced: monogon.is_none(),
        ii_reduced: reducible_bigon.is_none(),
        prime: prime_failure.is_none(),
        nugatory_free: nugatory.is_empty(),
        checkerboard_colorable: colorable,
        witnesses: Witnesses {
            monogon,
            reducible_bigon,
            prime_failure,
            nugatory_crossing: nugatory.first().copied(),
        },
    }
}
