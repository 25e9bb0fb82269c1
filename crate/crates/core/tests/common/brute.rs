//! Unpruned reference enumeration of Menasco loops: every cyclic sequence
//! of distinct bubble sides with a direction is generated, then filtered by
//! the loop conditions checked one at a time.

use std::collections::BTreeSet;

use knotcert::diagram::{corners_of_side, trace_faces, Corner, Faces, Sign};
use knotcert::menasco::MenascoLoop;
use knotcert::pdcode::PlanarDiagram;

/// (crossing, side, entry corner index, exit corner index)
pub type Step = (usize, u8, u8, u8);

pub fn canonical(seq: &[Step]) -> Vec<Step> {
    let n = seq.len();
    let rev: Vec<Step> = seq.iter().rev().map(|&(c, s, a, b)| (c, s, b, a)).collect();
    let mut best: Option<Vec<Step>> = None;
    for base in [seq, &rev[..]] {
        for r in 0..n {
            let cand: Vec<Step> = (0..n).map(|i| base[(r + i) % n]).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

pub fn keys_of(loops: &[MenascoLoop]) -> BTreeSet<Vec<Step>> {
    loops
        .iter()
        .map(|l| {
            let seq: Vec<Step> = l
                .steps
                .iter()
                .map(|s| (s.crossing, s.side, s.entry.index, s.exit.index))
                .collect();
            canonical(&seq)
        })
        .collect()
}

fn interleaved(a: (usize, usize), b: (usize, usize)) -> bool {
    let (lo, hi) = (a.0.min(a.1), a.0.max(a.1));
    let inside = |x: usize| lo < x && x < hi;
    inside(b.0) != inside(b.1)
}

pub fn is_loop(faces: &Faces, seq: &[Step]) -> bool {
    let n = seq.len();
    let corner = |c: usize, k: u8| Corner {
        crossing: c,
        index: k,
    };
    for &(c, _, a, b) in seq {
        if faces.face_of(corner(c, a)) == faces.face_of(corner(c, b)) {
            return false;
        }
    }
    let mut chords: Vec<(usize, usize, usize)> = Vec::new();
    for k in 0..n {
        let (c1, _, _, out) = seq[k];
        let (c2, _, inn, _) = seq[(k + 1) % n];
        let (p, q) = (corner(c1, out), corner(c2, inn));
        let f = faces.face_of(p);
        if faces.face_of(q) != f || p == q {
            return false;
        }
        chords.push((f, faces.position_of(p), faces.position_of(q)));
    }
    for i in 0..n {
        for j in i + 1..n {
            let (f, a, b) = chords[i];
            let (g, c, d) = chords[j];
            if f != g {
                continue;
            }
            if a == c || a == d || b == c || b == d || interleaved((a, b), (c, d)) {
                return false;
            }
        }
    }
    true
}

/// All loops of the given sign, as canonical step sequences.
pub fn brute_force_loops(d: &PlanarDiagram, sign: Sign) -> BTreeSet<Vec<Step>> {
    let faces = trace_faces(d);
    let sides = corners_of_side(sign);
    let all: Vec<(usize, u8)> = (0..d.crossing_count())
        .flat_map(|c| [(c, 0u8), (c, 1u8)])
        .collect();
    let mut out = BTreeSet::new();
    let mut seq: Vec<Step> = Vec::new();
    let mut used = vec![false; all.len()];

    fn extend(
        first: usize,
        all: &[(usize, u8)],
        sides: &[[u8; 2]; 2],
        faces: &Faces,
        seq: &mut Vec<Step>,
        used: &mut [bool],
        out: &mut BTreeSet<Vec<Step>>,
    ) {
        if is_loop(faces, seq) {
            out.insert(canonical(seq));
        }
        for i in first + 1..all.len() {
            if used[i] {
                continue;
            }
            let (c, s) = all[i];
            let [k1, k2] = sides[s as usize];
            used[i] = true;
            for (a, b) in [(k1, k2), (k2, k1)] {
                seq.push((c, s, a, b));
                extend(first, all, sides, faces, seq, used, out);
                seq.pop();
            }
            used[i] = false;
        }
    }

    // every cyclic sequence has a rotation starting at its least side
    for first in 0..all.len() {
        let (c, s) = all[first];
        let [k1, k2] = sides[s as usize];
        used[first] = true;
        for (a, b) in [(k1, k2), (k2, k1)] {
            seq.push((c, s, a, b));
            extend(first, &all, &sides, &faces, &mut seq, &mut used, &mut out);
            seq.pop();
        }
        used[first] = false;
    }
    out
}
