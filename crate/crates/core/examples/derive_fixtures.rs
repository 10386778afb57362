//! Regenerates the stored cycle colorings that are not printed as explicit
//! data: small cycles outside the block decompositions (found by exact
//! search) and the 2-tone 5-color blocks. Prints Rust literals for `constructions/cycle_data.rs`.
//!
//!     cargo run --release -p ttone-core --example derive_fixtures

use ttone::coloring::Color;
use ttone::exact::{exact_decide, Decision, SearchBudget};
use ttone::graph::Graph;
use ttone::verify::is_valid;

const EXCEPTIONAL: &[(usize, usize, usize)] = &[
    (2, 3, 6),
    (2, 4, 6),
    (2, 7, 6),
    (3, 3, 9),
    (3, 4, 10),
    (3, 5, 10),
    (3, 7, 9),
    (4, 3, 12),
    (4, 4, 14),
    (4, 5, 15),
    (4, 7, 13),
    (5, 3, 15),
    (5, 4, 18),
    (5, 5, 20),
    (5, 6, 18),
    (5, 7, 17),
];

fn literal(labels: &[Vec<Color>]) -> String {
    let parts: Vec<String> = labels
        .iter()
        .map(|l| format!("&[{}]", l.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("&[{}]", parts.join(", "))
}

/// Labels of `C_n` in cyclic order, rotated so vertex 0 comes first.
fn cycle_labels(g: &Graph, c: &ttone::Coloring) -> Vec<Vec<Color>> {
    let order = g.cycle_order().expect("cycle");
    order.iter().map(|&v| c.get(v).unwrap().colors().to_vec()).collect()
}

fn main() {
    println!("pub(super) const EXCEPTIONAL: &[Exceptional] = &[");
    for &(t, n, k) in EXCEPTIONAL {
        let g = Graph::cycle(n).unwrap();
        let below = exact_decide(&g, t, k - 1, SearchBudget::default()).unwrap();
        assert_eq!(below, Decision::Infeasible, "C{} t={} k={}", n, t, k - 1);
        let Decision::Colorable(c) = exact_decide(&g, t, k, SearchBudget::default()).unwrap() else {
            panic!("C{} t={} k={} not colorable", n, t, k);
        };
        assert!(is_valid(&g, &c));
        println!(
            "    Exceptional {{ t: {}, n: {}, k: {}, labels: {} }},",
            t,
            n,
            k,
            literal(&cycle_labels(&g, &c))
        );
    }
    println!("];");

    println!("pub(super) const BLOCKS_T2: &[&[&[Color]]] = &[");
    for len in [5, 6, 8, 9] {
        let block = two_tone_block(len).expect("2-tone block exists");
        println!("    {},", literal(&block));
    }
    println!("];");
}

/// The least 2-tone 5-coloring of `C_len` starting `{1,2}, {3,4}`. The
/// shared start makes every ordered pair of blocks glue.
fn two_tone_block(len: usize) -> Option<Vec<Vec<Color>>> {
    let all: Vec<Vec<Color>> = (1..=5)
        .flat_map(|a| (a + 1..=5).map(move |b| vec![a, b]))
        .collect();
    let mut seq = vec![vec![1, 2], vec![3, 4]];
    fn shared(a: &[Color], b: &[Color]) -> usize {
        a.iter().filter(|c| b.contains(c)).count()
    }
    fn ok(seq: &[Vec<Color>], cand: &[Color], len: usize) -> bool {
        let i = seq.len();
        for (j, l) in seq.iter().enumerate() {
            let d = (i - j).min(len - (i - j));
            if d <= 2 && shared(l, cand) >= d {
                return false;
            }
        }
        true
    }
    fn go(seq: &mut Vec<Vec<Color>>, all: &[Vec<Color>], len: usize) -> bool {
        if seq.len() == len {
            return true;
        }
        for cand in all {
            if ok(seq, cand, len) {
                seq.push(cand.clone());
                if go(seq, all, len) {
                    return true;
                }
                seq.pop();
            }
        }
        false
    }
    go(&mut seq, &all, len).then_some(seq)
}
