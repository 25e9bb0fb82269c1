//! Backtracking search for embedded Menasco loops.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{build_passages, LoopKey, LoopStep, MenascoLoop, PairRule, PassageStructure};
use crate::diagram::{trace_faces, Corner, Faces, Sign};
use crate::pdcode::PlanarDiagram;

#[derive(Debug, Clone, Default)]
pub struct EnumerateOptions {
    /// Defaults to `2C`, the bound forced by using each side at most once.
    pub max_length: Option<usize>,
    pub qualifying_only: bool,
    pub strict_adjacency: bool,
    pub parallel: bool,
}

/// Chords already drawn inside each face, as pairs of walk positions.
struct ChordLayout {
    per_face: Vec<Vec<(usize, usize)>>,
}

impl ChordLayout {
    fn new(face_count: usize) -> Self {
        ChordLayout {
            per_face: vec![Vec::new(); face_count],
        }
    }

    /// `c` lies strictly inside the cyclic interval running from `a` to `b`.
    fn inside(a: usize, b: usize, c: usize) -> bool {
        if a < b {
            a < c && c < b
        } else {
            c > a || c < b
        }
    }

    fn fits(&self, face: usize, a: usize, b: usize) -> bool {
        self.per_face[face].iter().all(|&(c, d)| {
            c != a && c != b && d != a && d != b && Self::inside(a, b, c) == Self::inside(a, b, d)
        })
    }

    fn push(&mut self, face: usize, a: usize, b: usize) {
        self.per_face[face].push((a, b));
    }

    fn pop(&mut self, face: usize) {
        self.per_face[face].pop();
    }
}

/// Shared, read-only search data for one sign.
struct Space<'a> {
    faces: &'a Faces,
    structure: PassageStructure,
}

impl<'a> Space<'a> {
    fn new(d: &PlanarDiagram, faces: &'a Faces, sign: Sign) -> Self {
        Space {
            faces,
            structure: build_passages(d, faces, sign),
        }
    }

    fn step_through(&self, passage: usize, entry_port: u8) -> LoopStep {
        let p = &self.structure.passages[passage];
        let (a, b) = (
            p.ports[entry_port as usize],
            p.ports[1 - entry_port as usize],
        );
        LoopStep {
            crossing: p.crossing,
            side: p.side,
            entry: a.corner,
            exit: b.corner,
            entry_face: a.face,
            exit_face: b.face,
        }
    }

    /// Search roots in (crossing, side) order, both entry ports.
    fn roots(&self) -> Vec<(usize, u8)> {
        self.structure
            .passages
            .iter()
            .filter(|p| p.is_passable())
            .flat_map(|p| [(p.index(), 0u8), (p.index(), 1u8)])
            .collect()
    }

    /// Corners of `face` after `from` in walk order, ending before `from`.
    fn corners_after(&self, face: usize, from: Corner) -> impl Iterator<Item = Corner> + '_ {
        let walk = &self.faces.faces[face].corners;
        let m = walk.len();
        let p = self.faces.position_of(from);
        (1..m).map(move |i| walk[(p + i) % m])
    }
}

struct Walker<'s, 'a> {
    space: &'s Space<'a>,
    used: Vec<bool>,
    steps: Vec<LoopStep>,
    chords: ChordLayout,
    max_length: usize,
}

impl<'s, 'a> Walker<'s, 'a> {
    fn new(space: &'s Space<'a>, max_length: usize) -> Self {
        Walker {
            space,
            used: vec![false; space.structure.passages.len()],
            steps: Vec::new(),
            chords: ChordLayout::new(space.faces.len()),
            max_length,
        }
    }

    fn chord_fits(&self, face: usize, from: Corner, to: Corner) -> bool {
        let f = self.space.faces;
        from != to
            && self
                .chords
                .fits(face, f.position_of(from), f.position_of(to))
    }

    fn enter(&mut self, passage: usize, entry: u8, chord_face: Option<(usize, Corner, Corner)>) {
        if let Some((face, from, to)) = chord_face {
            let f = self.space.faces;
            self.chords
                .push(face, f.position_of(from), f.position_of(to));
        }
        self.used[passage] = true;
        let step = self.space.step_through(passage, entry);
        self.steps.push(step);
    }

    fn leave(&mut self, passage: usize, had_chord: Option<usize>) {
        self.steps.pop();
        self.used[passage] = false;
        if let Some(face) = had_chord {
            self.chords.pop(face);
        }
    }

    /// Candidate next passages from the current exit: (passage, entry port,
    /// entry corner), in face-walk order.
    fn candidates(&self) -> Vec<(usize, u8, Corner)> {
        let last = *self.steps.last().expect("walk has a first step");
        self.space
            .corners_after(last.exit_face, last.exit)
            .filter_map(|y| {
                let (q, port) = self.space.structure.port_of(y);
                let ok = !self.used[q]
                    && self.space.structure.passages[q].is_passable()
                    && self.chord_fits(last.exit_face, last.exit, y);
                ok.then_some((q, port, y))
            })
            .collect()
    }

    fn can_close(&self) -> bool {
        let first = self.steps[0];
        let last = *self.steps.last().unwrap();
        last.exit_face == first.entry_face
            && self.chord_fits(last.exit_face, last.exit, first.entry)
    }

    /// All admissible loops whose least passage index is the root.
    fn enumerate(&mut self, root: usize, out: &mut BTreeMap<LoopKey, MenascoLoop>, sign: Sign) {
        if self.steps.len() >= 2 && self.can_close() {
            let l = MenascoLoop::new(sign, self.steps.clone()).canonical();
            out.entry(l.key()).or_insert(l);
        }
        if self.steps.len() >= self.max_length {
            return;
        }
        let last = *self.steps.last().unwrap();
        for (q, port, y) in self.candidates() {
            if q <= root {
                continue;
            }
            self.enter(q, port, Some((last.exit_face, last.exit, y)));
            self.enumerate(root, out, sign);
            self.leave(q, Some(last.exit_face));
        }
    }
}

fn collect_roots<F>(space: &Space<'_>, parallel: bool, f: F) -> Vec<MenascoLoop>
where
    F: Fn(usize, u8) -> BTreeMap<LoopKey, MenascoLoop> + Sync + Send,
{
    let roots = space.roots();
    let parts: Vec<BTreeMap<LoopKey, MenascoLoop>> = if parallel {
        roots.par_iter().map(|&(p, e)| f(p, e)).collect()
    } else {
        roots.iter().map(|&(p, e)| f(p, e)).collect()
    };
    let mut merged = BTreeMap::new();
    for part in parts {
        for (k, v) in part {
            merged.entry(k).or_insert(v);
        }
    }
    merged.into_values().collect()
}

/// All admissible loops of the given sign up to rotation and reversal,
/// sorted by canonical key.
pub fn enumerate_loops(d: &PlanarDiagram, sign: Sign, opts: &EnumerateOptions) -> Vec<MenascoLoop> {
    if d.crossing_count() == 0 {
        return Vec::new();
    }
    let faces = trace_faces(d);
    let space = Space::new(d, &faces, sign);
    let max_length = opts
        .max_length
        .unwrap_or(2 * d.crossing_count())
        .min(2 * d.crossing_count());
    let loops = collect_roots(&space, opts.parallel, |root, entry| {
        let mut w = Walker::new(&space, max_length);
        let mut out = BTreeMap::new();
        w.enter(root, entry, None);
        w.enumerate(root, &mut out, sign);
        out
    });
    if !opts.qualifying_only {
        return loops;
    }
    loops
        .into_iter()
        .filter(|l| !super::adjacency_pairings(l, d, opts.strict_adjacency).is_empty())
        .collect()
}

/// Outcome of searching one root for a qualifying loop.
#[derive(Debug, Clone)]
struct RootOutcome {
    found: Option<Vec<LoopStep>>,
    states: u64,
    max_depth: usize,
    capped: bool,
    skipped: bool,
}

struct PairedWalker<'s, 'a, 'r> {
    walker: Walker<'s, 'a>,
    rule: &'r PairRule<'r>,
    states: u64,
    budget: u64,
    max_depth: usize,
    capped: bool,
}

impl PairedWalker<'_, '_, '_> {
    /// Depth-first extension; odd positions are free, even positions pair
    /// with the previous step and may only break the pairing to close.
    fn search(&mut self) -> Option<Vec<LoopStep>> {
        let len = self.walker.steps.len();
        self.max_depth = self.max_depth.max(len);
        if len >= self.walker.max_length {
            return None;
        }
        let last = *self.walker.steps.last().unwrap();
        for (q, port, y) in self.walker.candidates() {
            self.states += 1;
            if self.states > self.budget {
                self.capped = true;
                return None;
            }
            let k = len + 1;
            let step = self.walker.space.step_through(q, port);
            let paired = k % 2 == 1 || self.rule.pair_ok(&last, &step);
            let may_close = k % 2 == 0 && k >= 4;
            if !paired && !may_close {
                continue;
            }
            self.walker
                .enter(q, port, Some((last.exit_face, last.exit, y)));
            if may_close && self.walker.can_close() {
                let found = self.walker.steps.clone();
                self.walker.leave(q, Some(last.exit_face));
                self.max_depth = self.max_depth.max(k);
                return Some(found);
            }
            if paired {
                if let Some(found) = self.search() {
                    return Some(found);
                }
                if self.capped {
                    return None;
                }
            }
            self.walker.leave(q, Some(last.exit_face));
        }
        None
    }
}

/// Result of [`find_qualifying_loop`].
#[derive(Debug, Clone)]
pub struct QualifyingSearch {
    pub found: Option<MenascoLoop>,
    pub states: u64,
    pub max_length_reached: usize,
    pub capped: bool,
}

/// Depth-first search for a loop meeting the pairing condition, both signs,
/// plus first. Roots are tried in (sign, crossing, side, entry) order and
/// the first witness in that order is returned, with or without threads.
pub fn find_qualifying_loop(
    d: &PlanarDiagram,
    max_length: Option<usize>,
    max_states: Option<u64>,
    strict: bool,
    parallel: bool,
) -> QualifyingSearch {
    let mut result = QualifyingSearch {
        found: None,
        states: 0,
        max_length_reached: 0,
        capped: false,
    };
    if d.crossing_count() == 0 {
        return result;
    }
    let faces = trace_faces(d);
    let cap = max_states.unwrap_or(u64::MAX);
    let max_length = max_length
        .unwrap_or(2 * d.crossing_count())
        .min(2 * d.crossing_count());
    for sign in Sign::BOTH {
        let rule = PairRule::new(d, &faces, sign, strict);
        // Without a single sign-adjacent pair no loop of this sign qualifies.
        if rule.adjacency.is_empty() {
            continue;
        }
        let space = Space::new(d, &faces, sign);
        let roots = space.roots();
        let first_hit = AtomicUsize::new(usize::MAX);
        let run = |(i, &(root, entry)): (usize, &(usize, u8))| -> RootOutcome {
            if i > first_hit.load(Ordering::Relaxed) {
                return RootOutcome {
                    found: None,
                    states: 0,
                    max_depth: 0,
                    capped: false,
                    skipped: true,
                };
            }
            let mut walker = Walker::new(&space, max_length);
            walker.enter(root, entry, None);
            let mut pw = PairedWalker {
                walker,
                rule: &rule,
                states: 1,
                budget: cap,
                max_depth: 1,
                capped: false,
            };
            let found = pw.search();
            if found.is_some() {
                first_hit.fetch_min(i, Ordering::Relaxed);
            }
            RootOutcome {
                found,
                states: pw.states,
                max_depth: pw.max_depth,
                capped: pw.capped,
                skipped: false,
            }
        };
        let outcomes: Vec<RootOutcome> = if parallel {
            roots.par_iter().enumerate().map(run).collect()
        } else {
            let mut v = Vec::new();
            for item in roots.iter().enumerate() {
                let o = run(item);
                let stop = o.found.is_some() || o.capped;
                v.push(o);
                if stop {
                    break;
                }
            }
            v
        };
        for o in outcomes {
            debug_assert!(!o.skipped, "roots before the first hit always run");
            result.states = result.states.saturating_add(o.states);
            result.max_length_reached = result.max_length_reached.max(o.max_depth);
            if o.capped || result.states > cap {
                result.capped = true;
                result.states = cap;
                result.found = None;
                return result;
            }
            if let Some(steps) = o.found {
                result.found = Some(MenascoLoop::new(sign, steps).canonical());
                return result;
            }
        }
    }
    result
}
