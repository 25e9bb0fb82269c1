//! Regions, checkerboard coloring, corners and the ±-adjacency relation.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::pdcode::{Endpoint, PlanarDiagram};

/// Which hemisphere of the crossing bubbles a construction lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// The angular sector of a crossing between slot `index` and slot
/// `index + 1` (mod 4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Corner {
    pub crossing: usize,
    pub index: u8,
}

impl Corner {
    pub fn new(crossing: usize, index: u8) -> Self {
        Corner { crossing, index }
    }
}

/// Side of an oriented arc. A face walk keeps its face on the right, so a
/// walk running along the arc from tail to head sees the arc's right side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ArcSide {
    Right,
    Left,
}

/// A region of the diagram complement, stored as its boundary walk.
///
/// `arcs[i]` is the arc walked from `corners[i]` to `corners[i + 1]`, with
/// the side of it that faces this region.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    pub id: usize,
    pub corners: Vec<Corner>,
    pub arcs: Vec<(usize, ArcSide)>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }
}

/// All faces of a diagram together with reverse lookups.
#[derive(Debug, Clone)]
pub struct Faces {
    pub faces: Vec<Face>,
    face_of_corner: Vec<[usize; 4]>,
    position_of_corner: Vec<[usize; 4]>,
    face_of_side: Vec<[usize; 2]>,
}

impl Faces {
    pub fn face_of(&self, corner: Corner) -> usize {
        self.face_of_corner[corner.crossing][corner.index as usize]
    }

    /// Position of a corner within its face's boundary walk.
    pub fn position_of(&self, corner: Corner) -> usize {
        self.position_of_corner[corner.crossing][corner.index as usize]
    }

    pub fn face_on(&self, arc: usize, side: ArcSide) -> usize {
        self.face_of_side[arc][side as usize]
    }

    /// The two faces flanking an arc, right side first.
    pub fn flanking(&self, arc: usize) -> (usize, usize) {
        (self.face_of_side[arc][0], self.face_of_side[arc][1])
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

/// Traces every face by walking corners: from corner (c, k) leave along
/// slot k + 1 and arrive at the corner whose first slot is the arrival slot.
pub fn trace_faces(d: &PlanarDiagram) -> Faces {
    let n = d.crossing_count();
    let mut face_of_corner = vec![[usize::MAX; 4]; n];
    let mut position_of_corner = vec![[usize::MAX; 4]; n];
    let mut face_of_side = vec![[usize::MAX; 2]; d.arc_count()];
    let mut faces = Vec::new();
    for c in 0..n {
        for k in 0..4u8 {
            if face_of_corner[c][k as usize] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut corners = Vec::new();
            let mut arcs = Vec::new();
            let mut cur = Corner::new(c, k);
            loop {
                face_of_corner[cur.crossing][cur.index as usize] = id;
                position_of_corner[cur.crossing][cur.index as usize] = corners.len();
                corners.push(cur);
                let leave = Endpoint::new(cur.crossing, (cur.index + 1) % 4);
                let arc = d.arc_at(leave);
                let side = if d.arcs()[arc].tail == leave {
                    ArcSide::Right
                } else {
                    ArcSide::Left
                };
                face_of_side[arc][side as usize] = id;
                arcs.push((arc, side));
                let arrive = d.across(leave);
                cur = Corner::new(arrive.crossing, arrive.slot);
                if cur == Corner::new(c, k) {
                    break;
                }
            }
            faces.push(Face { id, corners, arcs });
        }
    }
    Faces {
        faces,
        face_of_corner,
        position_of_corner,
        face_of_side,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Color {
    #[serde(rename = "black")]
    Black,
    #[serde(rename = "white")]
    White,
}

impl Color {
    pub fn other(self) -> Self {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("faces {0} and {1} share an arc but received the same color")]
pub struct ColoringConflict(pub usize, pub usize);

/// Proper 2-coloring of the faces by breadth-first search on the dual.
pub fn checkerboard(d: &PlanarDiagram, faces: &Faces) -> Result<Vec<Color>, ColoringConflict> {
    let mut neighbors = vec![Vec::new(); faces.len()];
    for arc in 0..d.arc_count() {
        let (r, l) = faces.flanking(arc);
        neighbors[r].push(l);
        neighbors[l].push(r);
    }
    let mut color: Vec<Option<Color>> = vec![None; faces.len()];
    for root in 0..faces.len() {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(Color::Black);
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            let cf = color[f].unwrap();
            for &g in &neighbors[f] {
                match color[g] {
                    None => {
                        color[g] = Some(cf.other());
                        queue.push_back(g);
                    }
                    Some(cg) if cg == cf => return Err(ColoringConflict(f.min(g), f.max(g))),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(Option::unwrap).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AdjacencyKind {
    #[serde(rename = "plain")]
    Plain,
    #[serde(rename = "plus")]
    Plus,
    #[serde(rename = "minus")]
    Minus,
}

/// An arc joining two crossings, classified by the strands at its ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AdjacencyEdge {
    pub arc: usize,
    pub crossings: (usize, usize),
    pub kind: AdjacencyKind,
}

pub fn arc_kind(d: &PlanarDiagram, arc: usize) -> AdjacencyKind {
    let a = &d.arcs()[arc];
    match (a.over_at_tail(), a.over_at_head()) {
        (true, true) => AdjacencyKind::Plus,
        (false, false) => AdjacencyKind::Minus,
        _ => AdjacencyKind::Plain,
    }
}

impl Sign {
    pub fn kind(self) -> AdjacencyKind {
        match self {
            Sign::Plus => AdjacencyKind::Plus,
            Sign::Minus => AdjacencyKind::Minus,
        }
    }
}

/// Arcs that are over (plus) or under (minus) at both of their ends.
pub fn adjacency_pairs(d: &PlanarDiagram, sign: Sign) -> Vec<AdjacencyEdge> {
    (0..d.arc_count())
        .filter(|&a| arc_kind(d, a) == sign.kind())
        .map(|a| {
            let arc = &d.arcs()[a];
            AdjacencyEdge {
                arc: a,
                crossings: (arc.tail.crossing, arc.head.crossing),
                kind: sign.kind(),
            }
        })
        .collect()
}

/// Symmetric crossing-by-crossing lookup of sign-adjacency.
#[derive(Debug, Clone)]
pub struct AdjacencyMatrix {
    n: usize,
    bits: Vec<bool>,
}

impl AdjacencyMatrix {
    pub fn new(d: &PlanarDiagram, sign: Sign) -> Self {
        let n = d.crossing_count();
        let mut bits = vec![false; n * n];
        for e in adjacency_pairs(d, sign) {
            let (i, j) = e.crossings;
            bits[i * n + j] = true;
            bits[j * n + i] = true;
        }
        AdjacencyMatrix { n, bits }
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j]
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }
}

/// Corner indices on each side of the strand that lies on the given
/// hemisphere. The over-strand (slots 1, 3) splits the upper hemisphere,
/// the under-strand (slots 0, 2) the lower one.
pub fn corners_of_side(sign: Sign) -> [[u8; 2]; 2] {
    match sign {
        Sign::Plus => [[1, 2], [3, 0]],
        Sign::Minus => [[0, 1], [2, 3]],
    }
}
