//! Planar diagram codes: parsing, validation and serialization.
//!
//! A crossing is written `X[a,b,c,d]`: the four arc labels around the
//! crossing in counterclockwise order, starting from the incoming
//! under-strand. Slots 0 and 2 therefore carry the under-strand and slots
//! 1 and 3 the over-strand. The crossing-free diagram is the token `U`.
//!
//! Signed Gauss codes list the crossing visits along the knot, e.g.
//! `O1+ U2+ O3+ U1+ O2+ U3+`. A crossing is positive when the over-strand
//! runs from slot 3 to slot 1.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::diagram;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("crossing term {term} has {found} labels, expected 4")]
    Arity { term: String, found: usize },
    #[error("arc label {label} is used {count} times, expected exactly 2")]
    LabelMultiplicity { label: u64, count: usize },
    #[error("crossing {label} in Gauss code: {reason}")]
    GaussLabel { label: u64, reason: String },
    #[error("diagram is not realizable on the sphere (Euler characteristic {euler}, expected {expected})")]
    NonRealizable { euler: i64, expected: i64 },
}

/// A position on a crossing: the crossing index and one of its four slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Endpoint {
    pub crossing: usize,
    pub slot: u8,
}

impl Endpoint {
    pub fn new(crossing: usize, slot: u8) -> Self {
        Endpoint { crossing, slot }
    }

    pub fn is_over(self) -> bool {
        self.slot % 2 == 1
    }

    /// The endpoint on the far side of the crossing along the same strand.
    pub fn opposite(self) -> Self {
        Endpoint::new(self.crossing, (self.slot + 2) % 4)
    }
}

/// An oriented edge of the projection between two crossing slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Arc {
    pub tail: Endpoint,
    pub head: Endpoint,
}

impl Arc {
    pub fn over_at_tail(&self) -> bool {
        self.tail.is_over()
    }

    pub fn over_at_head(&self) -> bool {
        self.head.is_over()
    }

    pub fn other_end(&self, end: Endpoint) -> Endpoint {
        if end == self.tail {
            self.head
        } else {
            self.tail
        }
    }
}

/// Arc ids occupying the four slots of a crossing, counterclockwise from
/// the incoming under-strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub slots: [usize; 4],
}

/// A knot or link diagram as a 4-valent map on the sphere.
///
/// Arcs are oriented along their component, and every crossing is
/// normalized so that its under-strand enters at slot 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    arcs: Vec<Arc>,
    component_count: usize,
}

/// One visit of the knot to a crossing in a Gauss code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Visit {
    pub crossing: usize,
    pub over: bool,
}

/// A signed oriented Gauss code of a single-component diagram.
///
/// Arc `p` of the corresponding diagram runs from visit `p` to visit
/// `p + 1` (cyclically). An empty code is the crossing-free diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussCode {
    pub visits: Vec<Visit>,
    /// +1 or -1 for every crossing label.
    pub signs: Vec<i8>,
}

/// Correspondence between a diagram and the Gauss code read off from it.
#[derive(Debug, Clone)]
pub struct Traversal {
    /// `arc_of_gap[p]` is the diagram arc traversed after visit `p`.
    pub arc_of_gap: Vec<usize>,
    /// `crossing_of_label[k]` is the diagram crossing that received label `k`.
    pub crossing_of_label: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub crossings: usize,
    pub arcs: usize,
    pub faces: usize,
    pub connected: bool,
    pub projection_components: usize,
    pub component_count: usize,
    pub euler_characteristic: i64,
    pub sphere_realizable: bool,
}

impl PlanarDiagram {
    /// The crossing-free diagram of the unknot.
    pub fn unknot() -> Self {
        PlanarDiagram {
            crossings: Vec::new(),
            arcs: Vec::new(),
            component_count: 1,
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn is_crossing_free(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Arc occupying the given crossing slot.
    pub fn arc_at(&self, end: Endpoint) -> usize {
        self.crossings[end.crossing].slots[end.slot as usize]
    }

    /// The endpoint reached by following the arc that leaves `end`.
    pub fn across(&self, end: Endpoint) -> Endpoint {
        self.arcs[self.arc_at(end)].other_end(end)
    }

    /// Builds a diagram from raw slot incidences (arc ids `0..E`). Arc
    /// orientation and crossing normalization are derived here.
    pub fn from_slots(slots: Vec<[usize; 4]>) -> Result<Self, ParseError> {
        let arc_count = slots.len() * 2;
        let mut ends: Vec<Vec<Endpoint>> = vec![Vec::new(); arc_count];
        for (c, s) in slots.iter().enumerate() {
            for (k, &a) in s.iter().enumerate() {
                if a >= arc_count {
                    return Err(ParseError::LabelMultiplicity {
                        label: a as u64 + 1,
                        count: 1,
                    });
                }
                ends[a].push(Endpoint::new(c, k as u8));
            }
        }
        for (a, e) in ends.iter().enumerate() {
            if e.len() != 2 {
                return Err(ParseError::LabelMultiplicity {
                    label: a as u64 + 1,
                    count: e.len(),
                });
            }
        }
        let (arcs, crossings, component_count) = orient(&slots, &ends);
        let d = PlanarDiagram {
            crossings,
            arcs,
            component_count,
        };
        d.check_realizable()?;
        Ok(d)
    }

    fn check_realizable(&self) -> Result<(), ParseError> {
        let report = validate(self);
        if report.sphere_realizable {
            Ok(())
        } else {
            Err(ParseError::NonRealizable {
                euler: report.euler_characteristic,
                expected: 2 * report.projection_components as i64,
            })
        }
    }

    /// Labels of the crossings reached by each projection component, plus
    /// the number of those components.
    pub fn projection_components(&self) -> (Vec<usize>, usize) {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for arc in &self.arcs {
            let a = find(&mut parent, arc.tail.crossing);
            let b = find(&mut parent, arc.head.crossing);
            if a != b {
                parent[a] = b;
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut roots = BTreeMap::new();
        for c in 0..n {
            let r = find(&mut parent, c);
            let next = roots.len();
            let id = *roots.entry(r).or_insert(next);
            label[c] = id;
        }
        (label, roots.len().max(1))
    }

    pub fn is_connected(&self) -> bool {
        self.projection_components().1 == 1
    }

    /// Sign of a crossing: +1 when the over-strand runs from slot 3 to slot 1.
    pub fn crossing_sign(&self, c: usize) -> i8 {
        let over_in = self.arcs[self.crossings[c].slots[3]].head == Endpoint::new(c, 3);
        if over_in {
            1
        } else {
            -1
        }
    }

    /// Same diagram with every crossing changed.
    pub fn mirror(&self) -> PlanarDiagram {
        let slots = self
            .crossings
            .iter()
            .map(|x| [x.slots[1], x.slots[2], x.slots[3], x.slots[0]])
            .collect::<Vec<_>>();
        if slots.is_empty() {
            return self.clone();
        }
        PlanarDiagram::from_slots(slots).expect("mirror of a valid diagram is valid")
    }

    /// Gauss code of a single-component diagram, starting at arc 0.
    pub fn to_gauss(&self) -> Option<(GaussCode, Traversal)> {
        if self.component_count != 1 {
            return None;
        }
        if self.crossings.is_empty() {
            return Some((
                GaussCode {
                    visits: Vec::new(),
                    signs: Vec::new(),
                },
                Traversal {
                    arc_of_gap: Vec::new(),
                    crossing_of_label: Vec::new(),
                },
            ));
        }
        let mut label_of = vec![usize::MAX; self.crossings.len()];
        let mut crossing_of_label = Vec::new();
        let mut visits = Vec::new();
        let mut arc_of_gap = Vec::new();
        let mut arc = 0usize;
        loop {
            let head = self.arcs[arc].head;
            let c = head.crossing;
            if label_of[c] == usize::MAX {
                label_of[c] = crossing_of_label.len();
                crossing_of_label.push(c);
            }
            visits.push(Visit {
                crossing: label_of[c],
                over: head.is_over(),
            });
            arc = self.arc_at(head.opposite());
            arc_of_gap.push(arc);
            if arc == 0 {
                break;
            }
        }
        let signs = crossing_of_label
            .iter()
            .map(|&c| self.crossing_sign(c))
            .collect();
        Some((
            GaussCode { visits, signs },
            Traversal {
                arc_of_gap,
                crossing_of_label,
            },
        ))
    }

    /// Diagram determined by a signed Gauss code. Arc `p` is the gap after
    /// visit `p` and crossing `k` is label `k`.
    pub fn from_gauss(code: &GaussCode) -> Result<Self, ParseError> {
        let d = Self::from_gauss_unchecked(code);
        d.check_realizable()?;
        Ok(d)
    }

    /// As [`PlanarDiagram::from_gauss`], for codes known to be planar.
    pub(crate) fn from_gauss_unchecked(code: &GaussCode) -> Self {
        let n = code.visits.len();
        if n == 0 {
            return PlanarDiagram::unknot();
        }
        let slots = gauss_slots(code);
        // Gauss-derived slots are already oriented; build directly.
        let mut arcs = Vec::with_capacity(n);
        for p in 0..n {
            let q = (p + 1) % n;
            let tail_visit = code.visits[p];
            let head_visit = code.visits[q];
            let tail_slot = out_slot(tail_visit, code.signs[tail_visit.crossing]);
            let head_slot = in_slot(head_visit, code.signs[head_visit.crossing]);
            arcs.push(Arc {
                tail: Endpoint::new(tail_visit.crossing, tail_slot),
                head: Endpoint::new(head_visit.crossing, head_slot),
            });
        }
        PlanarDiagram {
            crossings: slots.into_iter().map(|slots| Crossing { slots }).collect(),
            arcs,
            component_count: 1,
        }
    }

    /// Isomorphism of maps: a crossing bijection carrying slots to slots
    /// (up to the half-turn that reverses a component with no under-passes)
    /// and arcs to arcs.
    pub fn is_isomorphic(&self, other: &PlanarDiagram) -> bool {
        if self.crossings.len() != other.crossings.len()
            || self.component_count != other.component_count
        {
            return false;
        }
        let n = self.crossings.len();
        if n == 0 {
            return true;
        }
        let mut map: Vec<Option<(usize, u8)>> = vec![None; n];
        let mut used = vec![false; n];
        self.iso_extend(other, &mut map, &mut used)
    }

    fn iso_extend(
        &self,
        other: &PlanarDiagram,
        map: &mut Vec<Option<(usize, u8)>>,
        used: &mut Vec<bool>,
    ) -> bool {
        let Some(seed) = map.iter().position(|m| m.is_none()) else {
            return true;
        };
        for target in 0..other.crossings.len() {
            if used[target] {
                continue;
            }
            for rot in [0u8, 2] {
                let saved_map = map.clone();
                let saved_used = used.clone();
                if self.iso_propagate(other, seed, target, rot, map, used)
                    && self.iso_extend(other, map, used)
                {
                    return true;
                }
                *map = saved_map;
                *used = saved_used;
            }
        }
        false
    }

    fn iso_propagate(
        &self,
        other: &PlanarDiagram,
        seed: usize,
        target: usize,
        rot: u8,
        map: &mut [Option<(usize, u8)>],
        used: &mut [bool],
    ) -> bool {
        let mut stack = vec![(seed, target, rot)];
        while let Some((c, t, r)) = stack.pop() {
            match map[c] {
                Some((t0, r0)) => {
                    if t0 != t || r0 != r {
                        return false;
                    }
                    continue;
                }
                None => {
                    if used[t] {
                        return false;
                    }
                    map[c] = Some((t, r));
                    used[t] = true;
                }
            }
            for k in 0..4u8 {
                let here = Endpoint::new(c, k);
                let there = Endpoint::new(t, (k + r) % 4);
                let far = self.across(here);
                let far_img = other.across(there);
                // Rotation at the far crossing is fixed by slot offset.
                let r2 = (far_img.slot + 4 - far.slot) % 4;
                if r2 % 2 != 0 {
                    return false;
                }
                stack.push((far.crossing, far_img.crossing, r2));
            }
        }
        true
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit_pd(self))
    }
}

fn in_slot(v: Visit, sign: i8) -> u8 {
    match (v.over, sign > 0) {
        (false, _) => 0,
        (true, true) => 3,
        (true, false) => 1,
    }
}

fn out_slot(v: Visit, sign: i8) -> u8 {
    (in_slot(v, sign) + 2) % 4
}

fn gauss_slots(code: &GaussCode) -> Vec<[usize; 4]> {
    let n = code.visits.len();
    let mut slots = vec![[usize::MAX; 4]; code.signs.len()];
    for (p, v) in code.visits.iter().enumerate() {
        let sign = code.signs[v.crossing];
        let incoming = (p + n - 1) % n;
        slots[v.crossing][in_slot(*v, sign) as usize] = incoming;
        slots[v.crossing][out_slot(*v, sign) as usize] = p;
    }
    slots
}

/// Orients every component by strand-following and normalizes each crossing
/// so that its under-strand enters at slot 0.
fn orient(slots: &[[usize; 4]], ends: &[Vec<Endpoint>]) -> (Vec<Arc>, Vec<Crossing>, usize) {
    let arc_count = ends.len();
    let at = |e: Endpoint| slots[e.crossing][e.slot as usize];
    let mut arcs: Vec<Option<Arc>> = vec![None; arc_count];
    let mut components = 0;
    for start in 0..arc_count {
        if arcs[start].is_some() {
            continue;
        }
        components += 1;
        // Trace the component from `start`, leaving its first endpoint.
        let mut path = Vec::new();
        let mut arc = start;
        let mut from = ends[start][0];
        loop {
            let to = if ends[arc][0] == from {
                ends[arc][1]
            } else {
                ends[arc][0]
            };
            path.push(Arc {
                tail: from,
                head: to,
            });
            let next_from = to.opposite();
            arc = at(next_from);
            from = next_from;
            if arc == start && from == ends[start][0] {
                break;
            }
        }
        // Reverse if the first under-pass enters at slot 2.
        let reverse = path
            .iter()
            .find(|a| !a.head.is_over())
            .map(|a| a.head.slot == 2)
            .unwrap_or(false);
        for a in path {
            let a = if reverse {
                Arc {
                    tail: a.head,
                    head: a.tail,
                }
            } else {
                a
            };
            let id = at(a.tail);
            arcs[id] = Some(a);
        }
    }
    let mut arcs: Vec<Arc> = arcs
        .into_iter()
        .map(|a| a.expect("every arc traced"))
        .collect();
    let mut crossings: Vec<Crossing> = slots.iter().map(|&slots| Crossing { slots }).collect();
    // Half-turn crossings whose under-strand enters at slot 2.
    for c in 0..crossings.len() {
        let a0 = crossings[c].slots[0];
        let enters_at_zero = arcs[a0].head == Endpoint::new(c, 0);
        if !enters_at_zero {
            let s = crossings[c].slots;
            crossings[c].slots = [s[2], s[3], s[0], s[1]];
            for arc in arcs.iter_mut() {
                for end in [&mut arc.tail, &mut arc.head] {
                    if end.crossing == c {
                        end.slot = (end.slot + 2) % 4;
                    }
                }
            }
        }
    }
    (arcs, crossings, components)
}

/// Parses PD notation: whitespace- or comma-separated `X[a,b,c,d]` terms,
/// optionally wrapped in `PD[...]`, or the single token `U`.
pub fn parse_pd(text: &str) -> Result<PlanarDiagram, ParseError> {
    let mut body = text.trim();
    if let Some(rest) = body.strip_prefix("PD[") {
        body = rest
            .strip_suffix(']')
            .ok_or_else(|| ParseError::Syntax("unterminated PD[...] wrapper".into()))?
            .trim();
    }
    if body == "U" {
        return Ok(PlanarDiagram::unknot());
    }
    if body.is_empty() {
        return Err(ParseError::Syntax(
            "empty diagram (use U for the crossing-free diagram)".into(),
        ));
    }

    let mut terms: Vec<Vec<u64>> = Vec::new();
    let mut rest = body;
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        if rest.is_empty() {
            break;
        }
        let Some(after) = rest.strip_prefix("X[") else {
            return Err(ParseError::Syntax(format!(
                "expected X[...] at `{}`",
                rest.chars().take(12).collect::<String>()
            )));
        };
        let close = after
            .find(']')
            .ok_or_else(|| ParseError::Syntax("unterminated X[...] term".into()))?;
        let inner = &after[..close];
        let labels = inner
            .split(',')
            .map(|s| s.trim())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<u64>()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| ParseError::Syntax(format!("bad arc label `{s}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if labels.len() != 4 {
            return Err(ParseError::Arity {
                term: format!("X[{inner}]"),
                found: labels.len(),
            });
        }
        terms.push(labels);
        rest = &after[close + 1..];
    }

    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for t in &terms {
        for &l in t {
            *counts.entry(l).or_default() += 1;
        }
    }
    if let Some((&label, &count)) = counts.iter().find(|(_, &c)| c != 2) {
        return Err(ParseError::LabelMultiplicity { label, count });
    }
    let index: BTreeMap<u64, usize> = counts.keys().enumerate().map(|(i, &l)| (l, i)).collect();
    let slots = terms
        .iter()
        .map(|t| [index[&t[0]], index[&t[1]], index[&t[2]], index[&t[3]]])
        .collect();
    PlanarDiagram::from_slots(slots)
}

/// Serializes a diagram as PD text with labels `arc id + 1`.
pub fn emit_pd(d: &PlanarDiagram) -> String {
    if d.crossings.is_empty() {
        return "U".to_string();
    }
    d.crossings
        .iter()
        .map(|x| {
            format!(
                "X[{},{},{},{}]",
                x.slots[0] + 1,
                x.slots[1] + 1,
                x.slots[2] + 1,
                x.slots[3] + 1
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses a signed oriented Gauss code such as `O1+ U2- ...`.
pub fn parse_gauss(text: &str) -> Result<PlanarDiagram, ParseError> {
    let code = parse_gauss_code(text)?;
    PlanarDiagram::from_gauss(&code)
}

pub fn parse_gauss_code(text: &str) -> Result<GaussCode, ParseError> {
    let body = text.trim();
    if body.is_empty() || body == "U" {
        return Ok(GaussCode {
            visits: Vec::new(),
            signs: Vec::new(),
        });
    }
    // label -> (over visits, under visits, sign)
    let mut seen: BTreeMap<u64, (usize, usize, i8)> = BTreeMap::new();
    let mut raw = Vec::new();
    for tok in body
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
    {
        let mut chars = tok.chars();
        let over = match chars.next() {
            Some('O') | Some('o') => true,
            Some('U') | Some('u') => false,
            _ => return Err(ParseError::Syntax(format!("bad Gauss token `{tok}`"))),
        };
        let rest: String = chars.collect();
        let (num, sign) = if let Some(n) = rest.strip_suffix('+') {
            (n, 1i8)
        } else if let Some(n) = rest
            .strip_suffix('-')
            .or_else(|| rest.strip_suffix('\u{2212}'))
        {
            (n, -1i8)
        } else {
            return Err(ParseError::Syntax(format!(
                "Gauss token `{tok}` lacks a sign"
            )));
        };
        let label: u64 = num
            .parse()
            .map_err(|_| ParseError::Syntax(format!("bad crossing label in `{tok}`")))?;
        let entry = seen.entry(label).or_insert((0, 0, sign));
        if entry.2 != sign {
            return Err(ParseError::GaussLabel {
                label,
                reason: "inconsistent signs".into(),
            });
        }
        if over {
            entry.0 += 1;
        } else {
            entry.1 += 1;
        }
        raw.push((label, over));
    }
    for (&label, &(o, u, _)) in &seen {
        if o != 1 || u != 1 {
            return Err(ParseError::GaussLabel {
                label,
                reason: format!(
                    "expected one over and one under visit, found {o} over and {u} under"
                ),
            });
        }
    }
    let index: BTreeMap<u64, usize> = seen.keys().enumerate().map(|(i, &l)| (l, i)).collect();
    let signs = seen.values().map(|v| v.2).collect();
    let visits = raw
        .into_iter()
        .map(|(l, over)| Visit {
            crossing: index[&l],
            over,
        })
        .collect();
    Ok(GaussCode { visits, signs })
}

impl GaussCode {
    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.visits.is_empty() {
            return f.write_str("U");
        }
        let mut first = true;
        for v in &self.visits {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let sign = if self.signs[v.crossing] > 0 { '+' } else { '-' };
            write!(
                f,
                "{}{}{}",
                if v.over { 'O' } else { 'U' },
                v.crossing + 1,
                sign
            )?;
        }
        Ok(())
    }
}

/// Connectivity, component count and Euler characteristic of a diagram.
pub fn validate(d: &PlanarDiagram) -> ValidationReport {
    if d.crossings.is_empty() {
        return ValidationReport {
            crossings: 0,
            arcs: 0,
            faces: 2,
            connected: true,
            projection_components: 1,
            component_count: d.component_count,
            euler_characteristic: 2,
            sphere_realizable: true,
        };
    }
    let faces = diagram::trace_faces(d).faces.len();
    let (_, pieces) = d.projection_components();
    let euler = d.crossings.len() as i64 - d.arcs.len() as i64 + faces as i64;
    ValidationReport {
        crossings: d.crossings.len(),
        arcs: d.arcs.len(),
        faces,
        connected: pieces == 1,
        projection_components: pieces,
        component_count: d.component_count,
        euler_characteristic: euler,
        sphere_realizable: euler == 2 * pieces as i64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

    #[test]
    fn parses_standard_trefoil() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.arc_count(), 6);
        assert_eq!(d.component_count(), 1);
        for a in d.arcs() {
            // alternating: over at exactly one end
            assert_ne!(a.over_at_tail(), a.over_at_head());
        }
    }

    #[test]
    fn parses_wrapped_and_comma_separated() {
        let d = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]").unwrap();
        assert!(d.is_isomorphic(&parse_pd(TREFOIL).unwrap()));
    }

    #[test]
    fn unknot_token() {
        let d = parse_pd("U").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.arc_count(), 0);
        assert_eq!(d.component_count(), 1);
        assert_eq!(emit_pd(&d), "U");
    }

    #[test]
    fn arity_error() {
        assert!(matches!(
            parse_pd("X[1,2,3]"),
            Err(ParseError::Arity { found: 3, .. })
        ));
    }

    #[test]
    fn label_multiplicity_error() {
        assert!(matches!(
            parse_pd("X[1,2,3,4]"),
            Err(ParseError::LabelMultiplicity { .. })
        ));
        assert!(matches!(
            parse_pd("X[1,1,1,2] X[2,3,3,4]"),
            Err(ParseError::LabelMultiplicity { label: 1, count: 3 })
        ));
    }

    #[test]
    fn torus_only_code_rejected() {
        // one crossing of two circles, Euler characteristic 0
        assert!(matches!(
            parse_pd("X[1,2,1,2]"),
            Err(ParseError::NonRealizable {
                euler: 0,
                expected: 2
            })
        ));
    }

    #[test]
    fn reversed_labels_normalize() {
        // under strand listed as entering at slot 2
        let d = parse_pd("X[2,5,1,4] X[4,1,3,6] X[6,3,5,2]").unwrap();
        assert!(d.is_isomorphic(&parse_pd(TREFOIL).unwrap()));
        for (c, x) in d.crossings().iter().enumerate() {
            assert_eq!(d.arcs()[x.slots[0]].head, Endpoint::new(c, 0));
        }
    }

    #[test]
    fn gauss_trefoil_matches_pd() {
        let pd = parse_pd(TREFOIL).unwrap();
        let neg = parse_gauss("O1- U2- O3- U1- O2- U3-").unwrap();
        let pos = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        assert!(pd.is_isomorphic(&neg));
        assert!(!pd.is_isomorphic(&pos));
        assert!(pd.mirror().is_isomorphic(&pos));
    }

    #[test]
    fn gauss_kink() {
        let d = parse_gauss("O1+ U1+").unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.arc_count(), 2);
    }

    #[test]
    fn gauss_label_errors() {
        assert!(matches!(
            parse_gauss("O1+ O1+"),
            Err(ParseError::GaussLabel { label: 1, .. })
        ));
        assert!(matches!(
            parse_gauss("O1+ U1-"),
            Err(ParseError::GaussLabel { label: 1, .. })
        ));
        assert!(parse_gauss("O1 U1").is_err());
    }

    #[test]
    fn gauss_interleaved_pair_is_not_planar() {
        // O1 O2 U1 U2 is the virtual trefoil shadow; no sign choice is planar.
        for s1 in ['+', '-'] {
            for s2 in ['+', '-'] {
                let text = format!("O1{s1} O2{s2} U1{s1} U2{s2}");
                assert!(matches!(
                    parse_gauss(&text),
                    Err(ParseError::NonRealizable { .. })
                ));
            }
        }
    }

    #[test]
    fn gauss_round_trip() {
        let d = parse_pd(TREFOIL).unwrap();
        let (code, _) = d.to_gauss().unwrap();
        let back = PlanarDiagram::from_gauss(&code).unwrap();
        assert!(back.is_isomorphic(&d));
        let text = code.to_string();
        assert!(parse_gauss(&text).unwrap().is_isomorphic(&d));
    }

    #[test]
    fn validation_reports() {
        let r = validate(&parse_pd(TREFOIL).unwrap());
        assert!(r.connected);
        assert_eq!(r.component_count, 1);
        assert_eq!((r.crossings, r.arcs, r.faces), (3, 6, 5));
        assert_eq!(r.euler_characteristic, 2);
        assert!(r.sphere_realizable);

        let u = validate(&PlanarDiagram::unknot());
        assert!(u.connected && u.sphere_realizable);
        assert_eq!(u.faces, 2);

        let split = parse_pd("X[1,1,2,2] X[3,3,4,4]").unwrap();
        let r = validate(&split);
        assert!(!r.connected);
        assert_eq!(r.component_count, 2);
        assert_eq!(r.projection_components, 2);
        assert!(r.sphere_realizable);
    }
}
