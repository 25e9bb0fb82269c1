//! Fixture corpus access and diagram constructions used across tests.

use std::path::PathBuf;

use knotcert::oracle::{unknot_search, SearchStatus};
use knotcert::pdcode::{parse_gauss, parse_pd, GaussCode, PlanarDiagram};
use knotcert::reduce::hypothesis_report;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::jones::{is_one, jones};

pub struct Fixture {
    pub file: String,
    pub verdict: String,
    pub note: String,
    pub text: String,
    pub diagram: PlanarDiagram,
}

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn load(file: &str) -> PlanarDiagram {
    let text = std::fs::read_to_string(fixtures_dir().join(file)).unwrap();
    parse_pd(text.trim()).unwrap_or_else(|e| panic!("{file}: {e}"))
}

pub fn corpus() -> Vec<Fixture> {
    let manifest = std::fs::read_to_string(fixtures_dir().join("manifest.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&manifest).unwrap();
    v["fixtures"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            let file = e["file"].as_str().unwrap().to_string();
            let text = std::fs::read_to_string(fixtures_dir().join(&file))
                .unwrap()
                .trim()
                .to_string();
            Fixture {
                diagram: load(&file),
                verdict: e["verdict"].as_str().unwrap().to_string(),
                note: e["note"].as_str().unwrap().to_string(),
                text,
                file,
            }
        })
        .collect()
}

pub const TABLE: [&str; 14] = [
    "3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_1", "7_2", "7_3", "7_4", "7_5", "7_6",
    "7_7",
];

/// Alternating diagram from a Dowker-Thistlethwaite code (even labels
/// paired with 1, 3, 5, ...), or `None` when no sign choice is planar.
pub fn dt_alternating(dt: &[usize], over_first: &[bool]) -> Option<PlanarDiagram> {
    let n = dt.len();
    let mut crossing_at = vec![0usize; 2 * n + 1];
    for (i, &e) in dt.iter().enumerate() {
        crossing_at[2 * i + 1] = i + 1;
        crossing_at[e] = i + 1;
    }
    for mask in 0u32..(1 << n) {
        let tokens: Vec<String> = (1..=2 * n)
            .map(|p| {
                let c = crossing_at[p];
                let over = (p % 2 == 1) == over_first[c - 1];
                let sign = if mask >> (c - 1) & 1 == 1 { '-' } else { '+' };
                format!("{}{c}{sign}", if over { 'O' } else { 'U' })
            })
            .collect();
        if let Ok(d) = parse_gauss(&tokens.join(" ")) {
            return Some(d);
        }
    }
    None
}

/// Switches over and under at every crossing in `mask`.
pub fn crossing_change(d: &PlanarDiagram, mask: u64) -> PlanarDiagram {
    let (mut code, _): (GaussCode, _) = d.to_gauss().expect("knot diagram");
    for v in code.visits.iter_mut() {
        if mask >> v.crossing & 1 == 1 {
            v.over = !v.over;
        }
    }
    for (i, s) in code.signs.iter_mut().enumerate() {
        if mask >> i & 1 == 1 {
            *s = -*s;
        }
    }
    PlanarDiagram::from_gauss(&code).expect("crossing changes keep the shadow")
}

/// Band sum along arc `x` of `a` and arc `y` of `b`: the two arcs are cut
/// and their heads exchanged.
pub fn connected_sum(a: &PlanarDiagram, x: usize, b: &PlanarDiagram, y: usize) -> PlanarDiagram {
    let offset = a.arc_count();
    let shift = a.crossing_count();
    let mut slots: Vec<[usize; 4]> = a.crossings().iter().map(|c| c.slots).collect();
    slots.extend(b.crossings().iter().map(|c| c.slots.map(|s| s + offset)));
    let ha = a.arcs()[x].head;
    let hb = b.arcs()[y].head;
    slots[ha.crossing][ha.slot as usize] = y + offset;
    slots[hb.crossing + shift][hb.slot as usize] = x;
    PlanarDiagram::from_slots(slots).expect("connected sum is planar")
}

/// Reduced prime diagrams of the trivial knot: crossing changes of random
/// alternating shadows, kept when the Jones polynomial is trivial and the
/// move search reaches the crossing-free diagram.
pub fn reduced_unknots(count: usize) -> Vec<(u64, u64, PlanarDiagram)> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        seed += 1;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(6..=8usize);
        let mut evens: Vec<usize> = (1..=n).map(|i| 2 * i).collect();
        evens.shuffle(&mut rng);
        let Some(base) = dt_alternating(&evens, &vec![true; n]) else {
            continue;
        };
        if !hypothesis_report(&base).all_hold() {
            continue;
        }
        for mask in 1u64..(1 << n) - 1 {
            let d = crossing_change(&base, mask);
            if !hypothesis_report(&d).all_hold() || !is_one(&jones(&d)) {
                continue;
            }
            let o = unknot_search(&d, n + 2, 100_000).unwrap();
            if o.status == SearchStatus::Unknot {
                out.push((seed, mask, d));
                if out.len() == count {
                    break;
                }
            }
        }
    }
    out
}
