//! Worked examples: known ideals, decompositions, duals and bases.

mod common;

use std::collections::BTreeSet;

use common::{brute_irreducibles, component_set, ideal};
use monideal::cones::{
    check_symbolic_rees_normal, cones_equal, hilbert_basis, integral_closure, is_normal, rees_cone,
    simis_cone, symbolic_rees_generators,
};
use monideal::decomposition::{
    alexander_dual, associated_primes, irreducible_decomposition, is_unmixed, minimal_primes,
    star_dual,
};
use monideal::digraphs::{edge_ideal, prt_decomposition, structure, WeightedDigraph};
use monideal::symbolic::{
    ntf_probe, symbolic_power_ass, symbolic_power_min, symbolic_vs_ordinary_certificate,
    PowersCertificate,
};
use monideal::MonomialIdeal;

fn five_var() -> MonomialIdeal {
    // (x2x3, x4x5, x3x4, x2x5, x1^2x3, x1x2^2)
    ideal(
        5,
        &[
            &[0, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1],
            &[0, 0, 1, 1, 0],
            &[0, 1, 0, 0, 1],
            &[2, 0, 1, 0, 0],
            &[1, 2, 0, 0, 0],
        ],
    )
}

fn oriented() -> WeightedDigraph {
    WeightedDigraph::with_default_names(
        vec![2, 2, 1, 2, 1],
        vec![(2, 0), (0, 1), (2, 1), (2, 3), (4, 3), (4, 1)],
    )
    .unwrap()
}

fn oriented_ideal() -> MonomialIdeal {
    ideal(
        5,
        &[
            &[2, 0, 1, 0, 0],
            &[1, 2, 0, 0, 0],
            &[0, 2, 1, 0, 0],
            &[0, 0, 1, 2, 0],
            &[0, 0, 0, 2, 1],
            &[0, 2, 0, 0, 1],
        ],
    )
}

fn set(rows: &[&[u32]]) -> BTreeSet<Vec<u32>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

#[test]
fn second_symbolic_power_adds_two_generators() {
    let i = five_var();
    let extra = ideal(5, &[&[1, 2, 0, 0, 1], &[1, 2, 1, 0, 0]]);
    let expected = i.power(2).unwrap().sum(&extra).unwrap();
    assert_eq!(symbolic_power_min(&i, 2).unwrap(), expected);
    assert_eq!(ntf_probe(&i, 3).unwrap().first_failure(), Some(2));
    assert_eq!(
        symbolic_vs_ordinary_certificate(&i).unwrap(),
        PowersCertificate::Unequal
    );
    assert!(!cones_equal(&simis_cone(&i).unwrap(), &rees_cone(&i).unwrap()).unwrap());
}

#[test]
fn symbolic_variants_differ_with_embedded_primes() {
    let i = ideal(3, &[&[1, 2, 0], &[2, 0, 1], &[0, 1, 2]]);
    let with_cube = i.sum(&ideal(3, &[&[1, 1, 1]])).unwrap();
    assert_eq!(symbolic_power_min(&i, 1).unwrap(), with_cube);
    assert_eq!(symbolic_power_ass(&i, 1).unwrap(), i);
}

#[test]
fn simis_hilbert_basis_has_eighteen_elements() {
    let printed: Vec<[i64; 6]> = vec![
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 1, 1],
        [0, 0, 1, 1, 0, 1],
        [0, 1, 0, 0, 1, 1],
        [0, 1, 1, 0, 0, 1],
        [1, 2, 0, 0, 0, 1],
        [2, 0, 1, 0, 0, 1],
        [1, 2, 0, 0, 1, 2],
        [1, 2, 1, 0, 0, 2],
        [2, 2, 1, 0, 1, 3],
        [2, 2, 2, 0, 0, 3],
        [2, 4, 1, 0, 2, 5],
        [2, 4, 2, 0, 1, 5],
        [2, 4, 3, 0, 0, 5],
    ];
    let i = five_var();
    let cone = simis_cone(&i).unwrap();
    // coordinate order (x1..x5, t): each printed vector must lie in the cone
    for v in &printed {
        assert!(cone.contains(v).unwrap(), "{v:?}");
    }
    let hb = hilbert_basis(&cone).unwrap();
    let got: BTreeSet<Vec<i64>> = hb.elements().iter().cloned().collect();
    let want: BTreeSet<Vec<i64>> = printed.iter().map(|v| v.to_vec()).collect();
    assert_eq!(got, want);
    assert!(check_symbolic_rees_normal(&i).unwrap());
    assert_eq!(symbolic_rees_generators(&i).unwrap().len(), 18);
}

#[test]
fn oriented_edge_ideal_and_decompositions() {
    let d = oriented();
    assert_eq!(edge_ideal(&d), oriented_ideal());
    let printed = set(&[
        &[2, 2, 0, 2, 0],
        &[1, 0, 1, 0, 1],
        &[0, 2, 1, 2, 0],
        &[0, 2, 1, 0, 1],
    ]);
    assert_eq!(component_set(&prt_decomposition(&d).unwrap()), printed);
    assert_eq!(
        component_set(&irreducible_decomposition(&oriented_ideal()).unwrap()),
        printed
    );
    assert_eq!(brute_irreducibles(&oriented_ideal()), printed);
    assert!(is_unmixed(&oriented_ideal()).unwrap());
}

#[test]
fn oriented_integral_closure() {
    let extra = ideal(
        5,
        &[
            &[1, 1, 1, 0, 0],
            &[1, 0, 1, 1, 0],
            &[0, 1, 1, 1, 0],
            &[0, 1, 0, 1, 1],
        ],
    );
    let expected = oriented_ideal().sum(&extra).unwrap();
    assert_eq!(integral_closure(&oriented_ideal()).unwrap(), expected);
}

#[test]
fn reversing_one_arc_makes_oriented_mixed() {
    let reversed = oriented().with_arc_reversed(4, 1).unwrap();
    let i = edge_ideal(&reversed);
    assert!(i
        .generators()
        .iter()
        .any(|g| g.exponents() == [0, 1, 0, 0, 1]));
    assert!(!is_unmixed(&i).unwrap());
}

#[test]
fn duality_where_duals_agree() {
    let i = ideal(3, &[&[1, 2, 0], &[1, 0, 2], &[0, 1, 2]]);
    let dual = ideal(3, &[&[1, 1, 0], &[1, 0, 2], &[0, 2, 2]]);
    assert_eq!(alexander_dual(&i).unwrap(), dual);
    assert_eq!(star_dual(&i).unwrap(), dual);
}

#[test]
fn duality_with_strict_containment() {
    let i = ideal(3, &[&[1, 2, 0], &[2, 0, 1], &[0, 1, 2]]);
    let vee = alexander_dual(&i).unwrap();
    let star = star_dual(&i).unwrap();
    assert_eq!(vee, ideal(3, &[&[2, 1, 0], &[1, 0, 2], &[0, 2, 1]]));
    assert!(vee.is_subset(&star).unwrap());
    assert_ne!(vee, star);
}

#[test]
fn duality_with_reverse_containment() {
    let i = ideal(3, &[&[1, 2, 0], &[2, 0, 1]]);
    let vee = alexander_dual(&i).unwrap();
    let star = star_dual(&i).unwrap();
    assert_eq!(vee, ideal(3, &[&[1, 0, 0], &[0, 2, 1]]));
    assert_eq!(star, ideal(3, &[&[2, 0, 0], &[1, 0, 1], &[0, 2, 1]]));
    assert!(star.is_subset(&vee).unwrap());
    assert_ne!(vee, star);
}

#[test]
fn transitive_example_satisfies_duality() {
    let d =
        WeightedDigraph::with_default_names(vec![1, 2, 1, 1], vec![(1, 0), (2, 1), (2, 3), (2, 0)])
            .unwrap();
    assert!(structure(&d).transitive);
    let i = edge_ideal(&d);
    assert_eq!(alexander_dual(&i).unwrap(), star_dual(&i).unwrap());
}

#[test]
fn radical_example_is_mixed() {
    let d = WeightedDigraph::with_default_names(vec![1, 2, 1, 1], vec![(1, 0), (2, 1), (2, 3)])
        .unwrap();
    let i = edge_ideal(&d);
    assert_eq!(i, ideal(4, &[&[1, 1, 0, 0], &[0, 2, 1, 0], &[0, 0, 1, 1]]));
    let expected = set(&[&[1, 0, 1, 0], &[0, 1, 1, 0], &[1, 2, 0, 1], &[0, 1, 0, 1]]);
    assert_eq!(
        component_set(&irreducible_decomposition(&i).unwrap()),
        expected
    );
    assert_eq!(component_set(&prt_decomposition(&d).unwrap()), expected);
    assert!(!is_unmixed(&i).unwrap());
}

#[test]
fn prime_squares_intersection_is_unmixed() {
    let p = |a: usize, b: usize| {
        let mut r1 = [0u32; 4];
        r1[a] = 1;
        let mut r2 = [0u32; 4];
        r2[b] = 1;
        ideal(4, &[&r1, &r2]).power(2).unwrap()
    };
    let i = MonomialIdeal::intersect_all(&[p(0, 1), p(1, 2), p(2, 3)])
        .unwrap()
        .unwrap();
    assert!(is_unmixed(&i).unwrap());
    assert_eq!(minimal_primes(&i).unwrap(), associated_primes(&i).unwrap());
}

#[test]
fn squares_are_torsion_free_but_not_normal() {
    let i = ideal(2, &[&[2, 0], &[0, 2]]);
    assert!(!is_normal(&i).unwrap());
    assert!(ntf_probe(&i, 4).unwrap().all_equal());
}
