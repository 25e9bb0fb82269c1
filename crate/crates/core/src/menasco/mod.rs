//! Menasco loops on the upper and lower bubble spheres.
//!
//! For a sign ±, the strand lying on the ± hemisphere of a crossing bubble
//! splits that hemisphere into two halves, the two *sides* of the crossing.
//! A loop on the ± sphere alternates between passing through a side (from
//! one of its corners to the other) and running through a region as a chord
//! between two corners of that region. The loop is recorded as the cyclic
//! sequence of sides it passes, each with the corner it enters and leaves by.

mod certify;
mod search;

pub use certify::{certify, CertReport, CertifyOptions, SearchStats, Verdict, Witness};
pub use search::{enumerate_loops, find_qualifying_loop, EnumerateOptions, QualifyingSearch};

use serde::Serialize;

use crate::diagram::{corners_of_side, trace_faces, AdjacencyMatrix, Corner, Faces, Sign};
use crate::pdcode::PlanarDiagram;

/// A corner of a side together with the face that contains it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Port {
    pub corner: Corner,
    pub face: usize,
}

/// One side of one crossing on the chosen hemisphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Passage {
    pub crossing: usize,
    pub side: u8,
    pub ports: [Port; 2],
}

impl Passage {
    /// A loop may only cross a side between two different regions.
    pub fn is_passable(&self) -> bool {
        self.ports[0].face != self.ports[1].face
    }

    pub fn index(&self) -> usize {
        2 * self.crossing + self.side as usize
    }
}

#[derive(Debug, Clone)]
pub struct PassageStructure {
    pub sign: Sign,
    /// Indexed by `2 * crossing + side`.
    pub passages: Vec<Passage>,
    /// For every corner, the passage it belongs to and its port number.
    port_of_corner: Vec<[(usize, u8); 4]>,
}

impl PassageStructure {
    pub fn port_of(&self, corner: Corner) -> (usize, u8) {
        self.port_of_corner[corner.crossing][corner.index as usize]
    }
}

pub fn build_passages(d: &PlanarDiagram, faces: &Faces, sign: Sign) -> PassageStructure {
    let sides = corners_of_side(sign);
    let n = d.crossing_count();
    let mut passages = Vec::with_capacity(2 * n);
    let mut port_of_corner = vec![[(0usize, 0u8); 4]; n];
    for c in 0..n {
        for (side, idx) in sides.iter().enumerate() {
            let ports = idx.map(|k| {
                let corner = Corner::new(c, k);
                Port {
                    corner,
                    face: faces.face_of(corner),
                }
            });
            for (p, &k) in idx.iter().enumerate() {
                port_of_corner[c][k as usize] = (2 * c + side, p as u8);
            }
            passages.push(Passage {
                crossing: c,
                side: side as u8,
                ports,
            });
        }
    }
    PassageStructure {
        sign,
        passages,
        port_of_corner,
    }
}

/// The loop passing through one side of a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LoopStep {
    pub crossing: usize,
    pub side: u8,
    pub entry: Corner,
    pub exit: Corner,
    pub entry_face: usize,
    pub exit_face: usize,
}

impl LoopStep {
    fn reversed(self) -> Self {
        LoopStep {
            crossing: self.crossing,
            side: self.side,
            entry: self.exit,
            exit: self.entry,
            entry_face: self.exit_face,
            exit_face: self.entry_face,
        }
    }
}

/// Segment of a loop inside one region, between two of its corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Chord {
    pub face: usize,
    pub from: Corner,
    pub to: Corner,
}

/// Canonical sequence entry: crossing, side, and the face of the chord that
/// follows the passage.
pub type LoopKey = Vec<(usize, u8, usize)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MenascoLoop {
    pub sign: Sign,
    pub steps: Vec<LoopStep>,
}

impl MenascoLoop {
    pub fn new(sign: Sign, steps: Vec<LoopStep>) -> Self {
        MenascoLoop { sign, steps }
    }

    /// Number of crossings passed, with multiplicity.
    pub fn length(&self) -> usize {
        self.steps.len()
    }

    /// `chords()[k]` joins step `k` to step `k + 1` (cyclically).
    pub fn chords(&self) -> Vec<Chord> {
        let n = self.steps.len();
        (0..n)
            .map(|k| {
                let s = &self.steps[k];
                Chord {
                    face: s.exit_face,
                    from: s.exit,
                    to: self.steps[(k + 1) % n].entry,
                }
            })
            .collect()
    }

    pub fn crossings(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.crossing).collect()
    }

    pub fn key(&self) -> LoopKey {
        self.steps
            .iter()
            .map(|s| (s.crossing, s.side, s.exit_face))
            .collect()
    }

    pub fn rotated(&self, r: usize) -> MenascoLoop {
        let mut steps = self.steps.clone();
        let n = steps.len().max(1);
        steps.rotate_left(r % n);
        MenascoLoop::new(self.sign, steps)
    }

    pub fn reversed(&self) -> MenascoLoop {
        let steps = self.steps.iter().rev().map(|s| s.reversed()).collect();
        MenascoLoop::new(self.sign, steps)
    }

    /// Least rotation or reflection by [`MenascoLoop::key`].
    pub fn canonical(&self) -> MenascoLoop {
        let n = self.steps.len();
        let rev = self.reversed();
        let mut best = self.clone();
        let mut best_key = best.key();
        for base in [self, &rev] {
            for r in 0..n {
                let cand = base.rotated(r);
                let key = cand.key();
                if key < best_key {
                    best_key = key;
                    best = cand;
                }
            }
        }
        best
    }
}

/// How a qualifying loop's crossings pair up: read the loop from `start`
/// (backwards when `reversed`), and consecutive crossings pair off.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pairing {
    pub start: usize,
    pub reversed: bool,
    /// Sign-adjacent pairs `(c1, c2), (c3, c4), ...`.
    pub pairs: Vec<(usize, usize)>,
    /// The final pair, which carries no adjacency requirement.
    pub free_pair: (usize, usize),
}

/// Decides whether two consecutive loop passages count as a sign-adjacent
/// pair.
pub(crate) struct PairRule<'a> {
    pub d: &'a PlanarDiagram,
    pub faces: &'a Faces,
    pub sign: Sign,
    pub adjacency: AdjacencyMatrix,
    pub strict: bool,
}

impl<'a> PairRule<'a> {
    pub fn new(d: &'a PlanarDiagram, faces: &'a Faces, sign: Sign, strict: bool) -> Self {
        PairRule {
            d,
            faces,
            sign,
            adjacency: AdjacencyMatrix::new(d, sign),
            strict,
        }
    }

    /// `first` is followed by `second` along the loop through a chord from
    /// `first.exit` to `second.entry`.
    pub fn pair_ok(&self, first: &LoopStep, second: &LoopStep) -> bool {
        if !self.adjacency.contains(first.crossing, second.crossing) {
            return false;
        }
        if !self.strict {
            return true;
        }
        // The chord must run alongside a sign-adjacency arc joining the two
        // corners it connects.
        let face = &self.faces.faces[first.exit_face];
        let m = face.len();
        let px = self.faces.position_of(first.exit);
        let py = self.faces.position_of(second.entry);
        let arc = if (px + 1) % m == py {
            face.arcs[px].0
        } else if (py + 1) % m == px {
            face.arcs[py].0
        } else {
            return false;
        };
        crate::diagram::arc_kind(self.d, arc) == self.sign.kind()
    }
}

/// Every rotation/direction of the loop that meets the pairing condition,
/// in order of start position, forward before backward.
pub fn adjacency_pairings(l: &MenascoLoop, d: &PlanarDiagram, strict: bool) -> Vec<Pairing> {
    let n = l.length();
    if n < 4 || n % 2 != 0 {
        return Vec::new();
    }
    let faces = trace_faces(d);
    let rule = PairRule::new(d, &faces, l.sign, strict);
    let rev = l.reversed();
    let mut out = Vec::new();
    for start in 0..n {
        for reversed in [false, true] {
            let seq = if reversed {
                // start at the same step, walking the other way
                rev.rotated(n - 1 - start)
            } else {
                l.rotated(start)
            };
            let ok = (0..n / 2 - 1).all(|i| rule.pair_ok(&seq.steps[2 * i], &seq.steps[2 * i + 1]));
            if ok {
                let cs = seq.crossings();
                out.push(Pairing {
                    start,
                    reversed,
                    pairs: (0..n / 2 - 1).map(|i| (cs[2 * i], cs[2 * i + 1])).collect(),
                    free_pair: (cs[n - 2], cs[n - 1]),
                });
            }
        }
    }
    out
}

/// Length is 2n with n >= 2 and, for some rotation and direction, the
/// first n - 1 consecutive pairs of crossings are sign-adjacent.
pub fn adjacency_pairing(l: &MenascoLoop, d: &PlanarDiagram, strict: bool) -> Option<Pairing> {
    adjacency_pairings(l, d, strict).into_iter().next()
}
