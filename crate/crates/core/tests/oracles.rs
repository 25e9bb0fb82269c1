mod common;

use std::collections::BTreeMap;

use knotcert::menasco::{certify, CertifyOptions, Verdict};
use knotcert::oracle::{canonical_code, neighbors, random_unknot, unknot_search, SearchStatus};
use knotcert::pdcode::{parse_gauss, parse_pd, PlanarDiagram};

use common::corpus::{corpus, dt_alternating, load, TABLE};
use common::jones::{achiral_key, is_one, jones, mirror_poly, span, Laurent};

fn poly(terms: &[(i32, i64)]) -> Laurent {
    terms.iter().copied().collect()
}

/// Replays a search path through `neighbors`, checking every step.
fn replay(d: &PlanarDiagram, max_crossings: usize) {
    let outcome = unknot_search(d, max_crossings, 100_000).unwrap();
    assert_eq!(outcome.status, SearchStatus::Unknot);
    let mut current = d.clone();
    for step in outcome.path.unwrap() {
        let next = neighbors(&current)
            .unwrap()
            .into_iter()
            .find(|m| m.kind == step.kind && canonical_code(&m.result).unwrap() == step.result)
            .unwrap_or_else(|| panic!("no {:?} move to {}", step.kind, step.result));
        assert!(next.result.crossing_count() <= max_crossings);
        current = next.result;
    }
    assert!(current.is_crossing_free());
}

#[test]
fn jones_of_small_knots() {
    // left-handed trefoil and the figure-eight
    assert_eq!(
        jones(&load("trefoil.pd")),
        poly(&[(-4, -1), (-3, 1), (-1, 1)])
    );
    assert_eq!(
        jones(&load("table/4_1.pd")),
        poly(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)])
    );
    assert_eq!(
        jones(&load("trefoil4.pd")),
        poly(&[(1, 1), (3, 1), (4, -1)])
    );
    assert!(is_one(&jones(&load("unknot7.pd"))));
    assert!(is_one(&jones(&load("reducible/kink.pd"))));
}

#[test]
fn table_diagrams_are_distinct_knots() {
    let mut seen = BTreeMap::new();
    for name in TABLE {
        let d = load(&format!("table/{name}.pd"));
        let crossings: usize = name[..1].parse().unwrap();
        assert_eq!(d.crossing_count(), crossings);
        let j = jones(&d);
        // reduced alternating: span equals the crossing count
        assert_eq!(span(&j), crossings as i32, "{name}");
        assert!(seen.insert(achiral_key(&j), name).is_none(), "{name}");
    }
}

#[test]
fn recalled_codes_match_dt_codes() {
    let cases: [(&str, &[usize]); 5] = [
        ("3_1", &[4, 6, 2]),
        ("4_1", &[4, 6, 8, 2]),
        ("5_1", &[6, 8, 10, 2, 4]),
        ("5_2", &[4, 8, 10, 2, 6]),
        ("6_1", &[4, 8, 12, 10, 2, 6]),
    ];
    for (name, dt) in cases {
        let over = vec![true; dt.len()];
        let from_dt = dt_alternating(dt, &over).unwrap();
        let a = achiral_key(&jones(&from_dt));
        let b = achiral_key(&jones(&load(&format!("table/{name}.pd"))));
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn mirror_trefoils_differ() {
    let t = load("trefoil.pd");
    let m = t.mirror();
    assert_ne!(canonical_code(&t).unwrap(), canonical_code(&m).unwrap());
    assert_eq!(jones(&m), mirror_poly(&jones(&t)));
    assert_ne!(jones(&m), jones(&t));
}

#[test]
fn trefoil_is_not_simplified() {
    let out = unknot_search(&load("trefoil.pd"), 5, 100_000).unwrap();
    assert_eq!(out.status, SearchStatus::Unknown);
    assert!(out.path.is_none());
}

#[test]
fn search_paths_replay() {
    for seed in 0..6 {
        let d = random_unknot(8, seed);
        replay(&d, d.crossing_count() + 2);
    }
    for file in [
        "unknot7.pd",
        "reducible/clasp.pd",
        "unknots/6_2_x1.pd",
        "reducible/kink.pd",
    ] {
        let d = load(file);
        replay(&d, d.crossing_count() + 2);
    }
}

#[test]
fn manifest_verdicts_agree_with_jones() {
    for f in corpus() {
        let d = &f.diagram;
        let verdict = certify(d, &CertifyOptions::default()).verdict;
        assert_eq!(format!("{verdict:?}"), f.verdict, "{}", f.file);
        if d.component_count() != 1 {
            assert_eq!(verdict, Verdict::NotAKnot);
            continue;
        }
        let trivial = is_one(&jones(d));
        if verdict == Verdict::NonTrivial {
            assert!(!trivial, "{} certified but has trivial Jones", f.file);
        }
        if trivial && d.crossing_count() <= 7 {
            // no nontrivial knot of at most 7 crossings has trivial Jones
            let out = unknot_search(d, d.crossing_count() + 2, 100_000).unwrap();
            assert_eq!(out.status, SearchStatus::Unknot, "{}", f.file);
        }
    }
}

#[test]
fn gauss_and_pd_inputs_agree() {
    let pd = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
    let (code, _) = pd.to_gauss().unwrap();
    let g = parse_gauss(&code.to_string()).unwrap();
    assert!(g.is_isomorphic(&pd));
    assert_eq!(canonical_code(&g).unwrap(), canonical_code(&pd).unwrap());
}
