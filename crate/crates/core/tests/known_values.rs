//! Published values and colorings, checked against the library.

use ttone::bounds::{c4_lower, c9_t5_counting, cycle_counting_t3, h_t_bounds, p2p3_lower, path_tau, star_lower};
use ttone::constructions::cycle::stored_cycle;
use ttone::constructions::{block_table, color_cycle, color_grid, color_path, decompose};
use ttone::exact::{tau, LowerCertificate};
use ttone::greedy::{can_extend_2tone, greedy_color};
use ttone::{best_lower_bound, exact_decide, is_valid, Coloring, Decision, Graph, Label, SearchBudget};

/// Parses `"123-456-178"` (single-digit colors) into labels.
fn digits(s: &str) -> Vec<Vec<u32>> {
    s.split('-').map(|l| l.chars().map(|c| c.to_digit(10).unwrap()).collect()).collect()
}

/// Parses `"1,2,3-4,5,6"` into labels.
fn commas(s: &str) -> Vec<Vec<u32>> {
    s.split('-').map(|l| l.split(',').map(|c| c.trim().parse().unwrap()).collect()).collect()
}

fn coloring(t: usize, k: usize, labels: &[Vec<u32>]) -> Coloring {
    let labels = labels.iter().enumerate().map(|(v, l)| Label::new(l.clone(), v).unwrap()).collect();
    Coloring::from_labels(t, k, labels).unwrap()
}

fn block(t: usize, len: usize) -> Vec<Vec<u32>> {
    block_table(t).unwrap().block(len).unwrap().iter().map(|l| l.colors().to_vec()).collect()
}

#[test]
fn concatenation_figure_colorings() {
    let c4 = commas("4,5,6-1,2,3-4,9,10-1,7,8");
    let c5 = commas("1,7,8-4,5,6-1,2,3-5,7,10-2,4,9");
    let c13 = commas("5,7,10-2,4,9-1,7,8-4,5,6-1,2,3-4,9,10-1,7,8-4,5,6-1,2,3-4,9,10-1,7,8-4,5,6-1,2,3");
    for (n, labels) in [(4, c4), (5, c5), (13, c13)] {
        assert!(is_valid(&Graph::cycle(n).unwrap(), &coloring(3, 10, &labels)), "C{}", n);
    }
}

#[test]
fn three_tone_blocks_match_printed_table() {
    assert_eq!(block(3, 6), digits("123-456-178-234-156-478"));
    assert_eq!(block(3, 8), digits("123-456-178-234-568-127-345-678"));
    assert_eq!(block(3, 11), digits("123-456-178-234-568-127-346-578-126-345-678"));
    // printed as 174, 238: labels are sets
    let mut nine = digits("123-456-178-234-568-147-238-156-478");
    nine.iter_mut().for_each(|l| l.sort());
    assert_eq!(block(3, 9), nine);
    assert_eq!(block_table(3).unwrap().lengths(), vec![6, 8, 9, 11]);
}

#[test]
fn four_and_five_tone_blocks_match_printed_table() {
    assert_eq!(block(4, 6), commas("1,2,3,4-5,6,7,8-1,9,10,11-2,3,5,12-4,6,7,9-8,10,11,12"));
    assert_eq!(
        block(5, 8),
        commas("1,2,3,4,5-6,7,8,9,10-1,11,12,13,14-2,3,6,15,16-4,5,9,10,14-1,3,7,8,13-2,6,10,11,12-9,13,14,15,16")
    );
}

#[test]
fn exceptional_printed_colorings() {
    let c10 = digits("123-456-178-369-458-279-368-245-169-578");
    let c13 = digits("123-456-178-369-458-279-368-459-278-369-245-168-579");
    let c9 = commas(
        "1,2,3,4,5-6,7,8,9,10-1,11,12,13,14-6,2,3,15,16-4,5,7,9,12-1,8,10,11,15-2,4,6,13,14-3,7,8,12,16-9,11,13,15,17",
    );
    for (t, n, k, labels) in [(3, 10, 9, c10), (3, 13, 9, c13), (5, 9, 17, c9)] {
        let printed = coloring(t, k, &labels);
        assert!(is_valid(&Graph::cycle(n).unwrap(), &printed), "t={} n={}", t, n);
        assert_eq!(stored_cycle(n, t).unwrap(), printed);
    }
}

#[test]
fn closed_forms() {
    assert_eq!(star_lower(7), 7);
    assert_eq!(path_tau(3, 3), 8);
    assert_eq!(path_tau(4, 5), 16);
    for n in 4..40 {
        assert_eq!(path_tau(n, 2), 5);
    }
    assert_eq!((c4_lower(3), c4_lower(4), c4_lower(5)), (10, 14, 18));
    assert_eq!(p2p3_lower(5).unwrap(), 20);
    assert!(p2p3_lower(4).is_err());
    assert_eq!(cycle_counting_t3(10).unwrap().bound, 9);
    assert_eq!(cycle_counting_t3(13).unwrap().bound, 9);
    assert_eq!(c9_t5_counting().bound, 17);
    let (lo, hi) = h_t_bounds(33);
    assert!(hi - lo <= 1);
    let (lo, hi) = h_t_bounds(1);
    assert_eq!(lo, 3);
    assert!((lo..=hi).contains(&5));
    assert!(can_extend_2tone(7, 1, 5));
}

#[test]
fn lower_bound_selection() {
    assert_eq!(best_lower_bound(&Graph::grid(4, 4).unwrap(), 3).bound, 10);
    assert_eq!(best_lower_bound(&Graph::star(7).unwrap(), 2).bound, 7);
}

#[test]
fn exact_decisions() {
    let budget = SearchBudget::default;
    let c4 = Graph::cycle(4).unwrap();
    assert_eq!(exact_decide(&c4, 2, 5, budget()).unwrap(), Decision::Infeasible);
    assert!(matches!(exact_decide(&c4, 2, 6, budget()).unwrap(), Decision::Colorable(_)));
    let c7 = Graph::cycle(7).unwrap();
    assert_eq!(exact_decide(&c7, 3, 8, budget()).unwrap(), Decision::Infeasible);
    assert!(matches!(exact_decide(&c7, 3, 9, budget()).unwrap(), Decision::Colorable(_)));
}

#[test]
fn exact_tau_values() {
    for (g, t, want) in [
        (Graph::cycle(5).unwrap(), 4, 15),
        (Graph::cycle(3).unwrap(), 5, 15),
        (Graph::path(5).unwrap(), 2, 5),
        (Graph::cycle(4).unwrap(), 4, 14),
    ] {
        let r = tau(&g, t, SearchBudget::default()).unwrap();
        assert_eq!(r.value, Some(want));
        let witness = r.coloring.unwrap();
        assert!(is_valid(&g, &witness));
        assert_eq!(witness.k() as u64, want);
        match r.lower_certificate {
            LowerCertificate::Exhausted { k } => assert_eq!(k, want - 1),
            LowerCertificate::Bound { certificate } => assert_eq!(certificate.bound, want),
        }
    }
}

#[test]
fn decompositions() {
    assert_eq!(decompose(13, &[4, 5]), Some(vec![4, 4, 5]));
    assert_eq!(decompose(7, &[6, 8, 9, 11]), None);
    assert_eq!(decompose(19, &[6, 8, 9, 11]), Some(vec![8, 11]));
}

#[test]
fn constructions() {
    assert_eq!(color_cycle(13, 3).unwrap().k(), 9);
    assert_eq!(color_cycle(14, 3).unwrap().k(), 8);
    assert_eq!(color_cycle(9, 5).unwrap().k(), 17);
    let c = color_cycle(100, 5).unwrap();
    assert_eq!((c.k(), c.colors_used()), (16, 16));
    assert_eq!(color_path(3, 3).unwrap().colors_used(), 8);
    let g = Graph::grid(2, 2).unwrap();
    let c = color_grid(2, 2, 3).unwrap();
    assert_eq!(c.k(), 10);
    assert!(is_valid(&g, &c));
    let c = color_grid(4, 7, 5).unwrap();
    assert!(c.k() == 22 && is_valid(&Graph::grid(4, 7).unwrap(), &c));
}

#[test]
fn greedy_examples() {
    let p4 = Graph::path(4).unwrap();
    let c = greedy_color(&p4, 2, 5, &[0, 1, 2, 3]).unwrap();
    assert!(is_valid(&p4, &c));
    assert_eq!(c.colors_used(), 5);
    for g in [Graph::grid(8, 8).unwrap(), Graph::fat_triangle(6).unwrap(), Graph::star(12).unwrap()] {
        assert!(g.max_degree() <= 12);
        let order: Vec<_> = (0..g.n()).collect();
        assert!(is_valid(&g, &greedy_color(&g, 2, 41, &order).unwrap()));
    }
}
