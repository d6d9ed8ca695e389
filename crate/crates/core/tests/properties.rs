//! Invariants checked against brute-force oracles.

mod common;

use std::collections::{BTreeSet, HashMap};

use common::*;
use monideal::cones::{
    cones_equal, dual_description, hilbert_basis, is_normal, rees_cone, simis_cone, RationalCone,
};
use monideal::decomposition::{
    alexander_dual, associated_primes, irreducible_decomposition, is_primary, minimal_primes,
    primary_decomposition, star_dual,
};
use monideal::digraphs::{
    cm_classify, depth_reduction_step, edge_ideal, is_strong_cover, minimal_vertex_covers,
    polarize, prt_decomposition, strong_covers, weight_reduce, CmVerdict, WeightedDigraph,
};
use monideal::symbolic::{
    ntf_probe, symbolic_power_ass, symbolic_power_by_localization,
    symbolic_power_by_primary_powers, symbolic_power_min,
};
use monideal::{Limits, Monomial, MonomialIdeal};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ideal_strategy(n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens)
        .prop_filter("needs a non-unit generator", |rows| {
            rows.iter().any(|r| r.iter().any(|&e| e > 0))
        })
        .prop_map(move |rows| {
            let rows: Vec<&[u32]> = rows
                .iter()
                .filter(|r| r.iter().any(|&e| e > 0))
                .map(Vec::as_slice)
                .collect();
            MonomialIdeal::from_exponents(&context(n), &rows).unwrap()
        })
}

fn squarefree_strategy(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    ideal_strategy(n, 1, 5)
}

fn seeded() -> impl Strategy<Value = ChaCha8Rng> {
    any::<u64>().prop_map(ChaCha8Rng::seed_from_u64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn decomposition_matches_exhaustion(i in ideal_strategy(3, 3, 4)) {
        let d = irreducible_decomposition(&i).unwrap();
        prop_assert_eq!(component_set(&d), brute_irreducibles(&i));
        prop_assert_eq!(d.intersection().unwrap().unwrap(), i);
    }

    #[test]
    fn component_exponents_come_from_generators(i in ideal_strategy(4, 4, 4)) {
        let from_gens: BTreeSet<(usize, u32)> = i
            .generators()
            .iter()
            .flat_map(|g| g.support().into_iter().map(move |v| (v, g.exponent(v))))
            .collect();
        let from_components: BTreeSet<(usize, u32)> = irreducible_decomposition(&i)
            .unwrap()
            .iter()
            .flat_map(|c| c.exponents().into_iter())
            .collect();
        prop_assert_eq!(from_gens, from_components);
    }

    #[test]
    fn primary_components_are_primary(i in ideal_strategy(3, 3, 4)) {
        let d = primary_decomposition(&i).unwrap();
        for c in d.iter() {
            prop_assert_eq!(is_primary(&c.ideal), Some(c.radical.clone()));
            prop_assert!(i.is_subset(&c.ideal).unwrap());
        }
        prop_assert_eq!(d.intersection().unwrap().unwrap(), i.clone());
        let radicals: BTreeSet<_> = d.iter().map(|c| c.radical.clone()).collect();
        prop_assert_eq!(radicals.len(), d.len());
        prop_assert_eq!(radicals.into_iter().collect::<Vec<_>>(), associated_primes(&i).unwrap());
    }

    #[test]
    fn squarefree_duals_agree(i in squarefree_strategy(4)) {
        prop_assert_eq!(alexander_dual(&i).unwrap(), star_dual(&i).unwrap());
    }

    #[test]
    fn graph_primes_are_minimal_covers(mut rng in seeded()) {
        let d = random_digraph(&mut rng, 7, 1);
        let i = edge_ideal(&d);
        let primes: BTreeSet<Vec<usize>> = associated_primes(&i)
            .unwrap()
            .iter()
            .map(|p| p.variables().to_vec())
            .collect();
        let oracle = brute_minimal_covers(d.n(), d.arcs());
        prop_assert_eq!(&primes, &oracle);
        let listed: BTreeSet<Vec<usize>> = minimal_vertex_covers(&d, &Limits::default())
            .unwrap()
            .into_iter()
            .collect();
        prop_assert_eq!(listed, oracle);
    }

    #[test]
    fn strong_covers_decompose_edge_ideals(mut rng in seeded()) {
        let d = random_digraph(&mut rng, 6, 3);
        let i = edge_ideal(&d);
        prop_assert_eq!(
            component_set(&prt_decomposition(&d).unwrap()),
            brute_irreducibles(&i)
        );
        // minimal vertex covers are always strong
        for c in minimal_vertex_covers(&d, &Limits::default()).unwrap() {
            prop_assert!(is_strong_cover(&d, &c).unwrap());
        }
    }

    #[test]
    fn weight_reduction_keeps_strong_covers(mut rng in seeded()) {
        let d = random_digraph(&mut rng, 6, 4);
        let before: Vec<_> = strong_covers(&d).unwrap().into_iter().map(|c| c.cover).collect();
        let reduced = weight_reduce(&d);
        let after: Vec<_> = strong_covers(&reduced).unwrap().into_iter().map(|c| c.cover).collect();
        prop_assert_eq!(before, after);
        prop_assert_eq!(cm_classify(&d).verdict, cm_classify(&reduced).verdict);
    }

    #[test]
    fn depth_steps_reach_weight_two(mut rng in seeded()) {
        let d = random_digraph(&mut rng, 5, 5);
        for v in 0..d.n() {
            let has_in = !d.in_neighbors(v).is_empty();
            let has_out = !d.out_neighbors(v).is_empty();
            if !(has_in && has_out) || d.weight(v) < 3 {
                continue;
            }
            let mut i = edge_ideal(&d);
            while let Ok(next) = depth_reduction_step(&i, v) {
                i = next;
            }
            let mut w = d.weights().to_vec();
            w[v] = 2;
            let target = WeightedDigraph::new(d.context(), w, d.arcs().to_vec()).unwrap();
            prop_assert_eq!(i, edge_ideal(&target));
        }
    }

    #[test]
    fn polarization_is_squarefree_lift(i in ideal_strategy(3, 3, 4)) {
        let p = polarize(&i).unwrap();
        prop_assert!(p.ideal.is_squarefree());
        prop_assert_eq!(p.ideal.len(), i.len());
        // setting every copy x_i_j to x_i recovers I
        let back: Vec<Monomial> = p
            .ideal
            .generators()
            .iter()
            .map(|g| {
                let mut e = vec![0u32; i.n()];
                for (k, &a) in g.exponents().iter().enumerate() {
                    e[p.variable_map[k].0] += a;
                }
                Monomial::new(e)
            })
            .collect();
        prop_assert_eq!(MonomialIdeal::new(i.context(), back).unwrap(), i);
    }

    #[test]
    fn whiskered_graphs_classify_like_unmixedness(mut rng in seeded()) {
        use rand::Rng;
        // a random core graph with one whisker hung on each core vertex
        let core = random_digraph(&mut rng, 4, 3);
        let m = core.n();
        let mut arcs = core.arcs().to_vec();
        let mut weights = core.weights().to_vec();
        for v in 0..m {
            arcs.push(if rng.gen_bool(0.5) { (v, m + v) } else { (m + v, v) });
            weights.push(rng.gen_range(1..=3));
        }
        let d = WeightedDigraph::with_default_names(weights, arcs).unwrap();
        let class = cm_classify(&d);
        prop_assert_ne!(class.verdict, CmVerdict::CriterionInapplicable);
        let unmixed = monideal::decomposition::is_unmixed(&edge_ideal(&d)).unwrap();
        prop_assert_eq!(unmixed, class.verdict == CmVerdict::CohenMacaulay);
    }

    #[test]
    fn acyclic_tournaments_are_cohen_macaulay(mut rng in seeded()) {
        use rand::seq::SliceRandom;
        use rand::Rng;
        let n = rng.gen_range(3..=6);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let arcs = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .map(|(a, b)| (order[a], order[b]))
            .collect();
        let weights = (0..n).map(|_| rng.gen_range(1..=3)).collect();
        let d = WeightedDigraph::with_default_names(weights, arcs).unwrap();
        prop_assert_eq!(cm_classify(&d).verdict, CmVerdict::CohenMacaulay);
        let all: Vec<usize> = (0..n).collect();
        prop_assert!(!is_strong_cover(&d, &all).unwrap());
        prop_assert!(monideal::decomposition::is_unmixed(&edge_ideal(&d)).unwrap());
    }

    #[test]
    fn forest_classifier_matches_unmixedness(mut rng in seeded()) {
        let d = random_forest(&mut rng, 9, 3);
        let unmixed = monideal::decomposition::is_unmixed(&edge_ideal(&d)).unwrap();
        let verdict = cm_classify(&d).verdict;
        prop_assert_eq!(unmixed, verdict == CmVerdict::CohenMacaulay);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn symbolic_routes_and_chain(i in ideal_strategy(3, 3, 3), k in 1u32..=3) {
        let ordinary = i.power(k).unwrap();
        let ass = symbolic_power_ass(&i, k).unwrap();
        let min = symbolic_power_min(&i, k).unwrap();
        prop_assert!(ordinary.is_subset(&ass).unwrap());
        prop_assert!(ass.is_subset(&min).unwrap());
        prop_assert_eq!(&min, &symbolic_power_by_localization(&i, k).unwrap());
        if minimal_primes(&i).unwrap() == associated_primes(&i).unwrap() {
            prop_assert_eq!(&min, &symbolic_power_by_primary_powers(&i, k).unwrap());
            prop_assert_eq!(&ass, &min);
        }
    }

    #[test]
    fn squarefree_symbolic_powers_are_prime_power_intersections(i in squarefree_strategy(4), k in 1u32..=3) {
        let powers: Vec<MonomialIdeal> = minimal_primes(&i)
            .unwrap()
            .iter()
            .map(|p| {
                let gens = p.variables().iter().map(|&v| Monomial::pure_power(i.n(), v, 1)).collect();
                MonomialIdeal::new(i.context(), gens).unwrap().power(k).unwrap()
            })
            .collect();
        let expected = MonomialIdeal::intersect_all(&powers).unwrap().unwrap();
        prop_assert_eq!(symbolic_power_min(&i, k).unwrap(), expected);
    }

    #[test]
    fn disjoint_supports_give_equal_powers(mut rng in seeded()) {
        use rand::Rng;
        // split 4 variables into blocks, one generator per block
        let n = 4;
        let mut rows = Vec::new();
        let mut start = 0;
        while start < n {
            let len = rng.gen_range(1..=n - start);
            let mut r = vec![0u32; n];
            for e in &mut r[start..start + len] {
                *e = rng.gen_range(1..=3);
            }
            rows.push(r);
            start += len;
        }
        let refs: Vec<&[u32]> = rows.iter().map(Vec::as_slice).collect();
        let i = MonomialIdeal::from_exponents(&context(n), &refs).unwrap();
        prop_assert!(ntf_probe(&i, 4).unwrap().all_equal());
    }

    #[test]
    fn simis_slices_are_symbolic_powers(i in squarefree_strategy(3)) {
        let cone = simis_cone(&i).unwrap();
        for k in 1..=3u32 {
            let sym = symbolic_power_min(&i, k).unwrap();
            for a in box_points(3, k + 1) {
                let mut v: Vec<i64> = a.iter().map(|&e| i64::from(e)).collect();
                v.push(i64::from(k));
                prop_assert_eq!(cone.contains(&v).unwrap(), member(&sym, &a), "{:?} at level {}", a, k);
            }
        }
    }

    #[test]
    fn cone_criterion_implies_equal_powers(i in ideal_strategy(3, 2, 3)) {
        if minimal_primes(&i).unwrap() != associated_primes(&i).unwrap() {
            return Ok(());
        }
        let normal_components = primary_decomposition(&i)
            .unwrap()
            .iter()
            .all(|c| is_normal(&c.ideal).unwrap());
        if !normal_components {
            return Ok(());
        }
        if cones_equal(&simis_cone(&i).unwrap(), &rees_cone(&i).unwrap()).unwrap() && is_normal(&i).unwrap() {
            prop_assert!(ntf_probe(&i, 3).unwrap().all_equal());
        }
    }

    #[test]
    fn dual_description_round_trip(mut rng in seeded(), dim in 2usize..=4) {
        let rays = random_pointed_rays(&mut rng, dim, 4);
        let cone = RationalCone::from_rays(dim, rays.clone()).unwrap();
        let full = dual_description(&cone).unwrap();
        let extreme = full.rays().unwrap().to_vec();
        let facets = full.inequalities().unwrap().to_vec();
        // extreme rays are among the (primitive) inputs and generate them all
        for r in &rays {
            prop_assert!(in_cone_by_rays(&extreme, r));
        }
        let back = dual_description(&RationalCone::from_inequalities(dim, facets).unwrap()).unwrap();
        prop_assert_eq!(back.rays().unwrap(), extreme.as_slice());
    }

    #[test]
    fn hilbert_basis_elements_are_in_the_cone_and_irreducible(mut rng in seeded(), dim in 2usize..=3) {
        let rays = random_pointed_rays(&mut rng, dim, 3);
        let hb = hilbert_basis(&RationalCone::from_rays(dim, rays.clone()).unwrap()).unwrap();
        for h in hb.elements() {
            prop_assert!(in_cone_by_rays(&rays, h));
            let others: Vec<Vec<i64>> = hb.elements().iter().filter(|g| *g != h).cloned().collect();
            prop_assert!(!representable(&others, h, &mut HashMap::new()));
        }
    }
}
