//! Jones polynomial by the Kauffman bracket state sum. Exponential in the
//! crossing count; fine for the small fixtures used here.

use std::collections::BTreeMap;

use knotcert::pdcode::PlanarDiagram;

/// Laurent polynomial, exponent -> coefficient, zero terms dropped.
pub type Laurent = BTreeMap<i32, i64>;

fn add_term(p: &mut Laurent, e: i32, c: i64) {
    let v = p.entry(e).or_insert(0);
    *v += c;
    if *v == 0 {
        p.remove(&e);
    }
}

fn mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (&ea, &ca) in a {
        for (&eb, &cb) in b {
            add_term(&mut out, ea + eb, ca * cb);
        }
    }
    out
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Jones polynomial in `t`. Unknot is `1`.
pub fn jones(d: &PlanarDiagram) -> Laurent {
    let n = d.crossing_count();
    if n == 0 {
        return Laurent::from([(0, 1)]);
    }
    let arcs = d.arc_count();
    // loop-count histogram keyed by (A-exponent, loops)
    let mut bracket = Laurent::new();
    let delta = Laurent::from([(2, -1), (-2, -1)]);
    for state in 0u64..(1u64 << n) {
        let mut parent: Vec<usize> = (0..arcs).collect();
        let mut a_exp = 0i32;
        for (c, x) in d.crossings().iter().enumerate() {
            let s = x.slots;
            let (p, q) = if state >> c & 1 == 0 {
                a_exp += 1;
                ((s[0], s[1]), (s[2], s[3]))
            } else {
                a_exp -= 1;
                ((s[0], s[3]), (s[1], s[2]))
            };
            for (u, v) in [p, q] {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                parent[ru] = rv;
            }
        }
        let loops = (0..arcs).filter(|&i| find(&mut parent, i) == i).count();
        let mut term = Laurent::from([(a_exp, 1)]);
        for _ in 1..loops {
            term = mul(&term, &delta);
        }
        for (e, c) in term {
            add_term(&mut bracket, e, c);
        }
    }
    let writhe: i32 = (0..n).map(|c| d.crossing_sign(c) as i32).sum();
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let mut out = Laurent::new();
    for (e, c) in bracket {
        // (-A^3)^(-w) <K>, then t = A^-4
        let total = e - 3 * writhe;
        assert_eq!(total % 4, 0, "bracket exponent not a multiple of 4");
        add_term(&mut out, -total / 4, c * sign);
    }
    out
}

pub fn mirror_poly(p: &Laurent) -> Laurent {
    p.iter().map(|(&e, &c)| (-e, c)).collect()
}

pub fn span(p: &Laurent) -> i32 {
    match (p.keys().next(), p.keys().next_back()) {
        (Some(lo), Some(hi)) => hi - lo,
        _ => 0,
    }
}

pub fn is_one(p: &Laurent) -> bool {
    p.len() == 1 && p.get(&0) == Some(&1)
}

/// Same polynomial up to `t <-> 1/t`, as an order-independent key.
pub fn achiral_key(p: &Laurent) -> Vec<(i32, i64)> {
    let a: Vec<_> = p.iter().map(|(&e, &c)| (e, c)).collect();
    let b: Vec<_> = mirror_poly(p).into_iter().collect();
    a.min(b)
}
