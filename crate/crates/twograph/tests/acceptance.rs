//! End-to-end acceptance checks: the catalog sizes, the bitangent
//! classification at n = 5 and 6, the excluded classes, the published
//! witness data, and the randomized invariants, each as one test with a
//! printed pass line (run with `--nocapture` to see them).

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use twograph::{
    canonical_key, classify_subsets, enumerate_classes, equivalent, graph_from_vectors,
    parse_vector_list, reduction_bound_report, verify_switching_parity, verify_unique_tetrad,
    verify_witness_lists, BitangentModel, Graph, RealizabilityReport, TwoGraph, CLASS_COUNTS,
    REALIZABLE_N5, REALIZABLE_N6, UNREALIZABLE_N5, UNREALIZABLE_N6,
};

fn classification() -> &'static (RealizabilityReport, RealizabilityReport, Duration, Duration) {
    static REPORTS: OnceLock<(RealizabilityReport, RealizabilityReport, Duration, Duration)> =
        OnceLock::new();
    REPORTS.get_or_init(|| {
        let model = BitangentModel::new();
        let catalog5 = enumerate_classes(5).expect("n = 5 is in range");
        let catalog6 = enumerate_classes(6).expect("n = 6 is in range");
        let t5 = Instant::now();
        let five = classify_subsets(5, &catalog5, &model).expect("n = 5 is in range");
        let t5 = t5.elapsed();
        let t6 = Instant::now();
        let six = classify_subsets(6, &catalog6, &model).expect("n = 6 is in range");
        let t6 = t6.elapsed();
        (five, six, t5, t6)
    })
}

#[test]
fn class_catalogs_match_the_known_counts() {
    let start = Instant::now();
    for (n, &want) in CLASS_COUNTS.iter().enumerate().take(8).skip(1) {
        let catalog = enumerate_classes(n).unwrap();
        assert_eq!(
            catalog.len() as u64,
            want,
            "[FAIL] two-graph catalog at n = {n}"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(10),
        "[FAIL] catalogs up to n = 7 took {elapsed:?}"
    );
    println!("[PASS] catalogs n = 1..=7 have sizes 1, 1, 2, 3, 7, 16, 54 ({elapsed:.2?})");
}

#[test]
fn bitangent_subsets_attain_exactly_the_published_classes() {
    let (five, six, t5, t6) = classification();
    assert_eq!(
        five.realizable_labels(),
        REALIZABLE_N5,
        "[FAIL] classes attained by 5-subsets"
    );
    assert_eq!(
        six.realizable_labels(),
        REALIZABLE_N6,
        "[FAIL] classes attained by 6-subsets"
    );
    for (report, budget) in [(five, *t5), (six, *t6)] {
        assert!(
            budget < Duration::from_secs(60),
            "[FAIL] classifying n = {} took {budget:?}",
            report.n
        );
        for c in &report.classes {
            println!(
                "       n = {}: {:<10} {:>6} subsets{}",
                report.n,
                c.label,
                c.count,
                if c.realizable { "" } else { " (none)" }
            );
        }
    }
    println!("[PASS] 5 of 7 classes attained at n = 5 ({t5:.2?}), 9 of 16 at n = 6 ({t6:.2?})");
}

#[test]
fn excluded_classes_are_exactly_the_published_ones() {
    let (five, six, ..) = classification();
    let unattained = |report: &RealizabilityReport| -> Vec<String> {
        report
            .classes
            .iter()
            .filter(|c| !c.realizable)
            .map(|c| c.label.clone())
            .collect()
    };
    assert_eq!(unattained(five), UNREALIZABLE_N5, "[FAIL] n = 5 exclusions");
    assert_eq!(unattained(six), UNREALIZABLE_N6, "[FAIL] n = 6 exclusions");
    for report in [five, six] {
        for c in &report.classes {
            assert_eq!(
                c.realizable,
                c.count > 0,
                "[FAIL] {} has count {} but realizable = {}",
                c.label,
                c.count,
                c.realizable
            );
        }
    }
    println!(
        "[PASS] excluded classes are exactly (5,7), (5,10) and {}",
        UNREALIZABLE_N6.join(", ")
    );
}

#[test]
fn published_witness_lists_land_in_their_classes() {
    let model = BitangentModel::new();
    let catalog5 = enumerate_classes(5).unwrap();
    let catalog6 = enumerate_classes(6).unwrap();
    let report = verify_witness_lists(&model, &catalog5, &catalog6).unwrap();
    assert!(
        report.pass(),
        "[FAIL] witness lists: {:?}",
        report.violations
    );
    assert_eq!(report.instances, 14);
    println!("[PASS] all 14 published witness lists land in their named classes");
}

#[test]
fn four_bitangent_example_matches_its_drawing_up_to_equivalence() {
    // The four bitangents u14, u18, u28, u38: u14 is disjoint from u28 and
    // u38 only, so the computed graph is the path 3 - 1 - 4 centered at the
    // first vertex and the member triples are the two containing u14 and
    // u18. The documented drawing of this example (a triangle with a
    // pendant edge) is a different graph in the same switching class.
    let vectors = parse_vector_list("u14 u18 u28 u38").unwrap();
    let computed = graph_from_vectors(&vectors).unwrap();
    assert_eq!(
        computed.edges(),
        vec![(0, 2), (0, 3)],
        "[FAIL] edges of the four-bitangent example"
    );
    let computed_tg = TwoGraph::from_graph(&computed);
    assert_eq!(
        computed_tg.triples(),
        vec![(0, 1, 2), (0, 1, 3)],
        "[FAIL] member triples of the four-bitangent example"
    );
    let drawn = Graph::new(4, &[(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap();
    let drawn_tg = TwoGraph::from_graph(&drawn);
    assert!(
        equivalent(&computed_tg, &drawn_tg).unwrap(),
        "[FAIL] computed and drawn graphs are not switching-equivalent"
    );
    let catalog = enumerate_classes(4).unwrap();
    assert_eq!(catalog.class_of(&computed_tg).unwrap().label, "(4,2)");
    assert_eq!(catalog.class_of(&drawn_tg).unwrap().label, "(4,2)");
    println!(
        "[PASS] the four-bitangent example computes to class (4,2), equivalent to its drawing"
    );
}

#[test]
fn every_syzygetic_triple_completes_to_one_tetrad() {
    let model = BitangentModel::new();
    let start = Instant::now();
    let report = verify_unique_tetrad(&model);
    let elapsed = start.elapsed();
    assert_eq!(report.instances, 1260, "[FAIL] syzygetic triple count");
    assert!(
        report.pass(),
        "[FAIL] tetrad completion: {:?}",
        report.violations
    );
    assert!(
        elapsed < Duration::from_secs(10),
        "[FAIL] tetrad completion took {elapsed:?}"
    );
    println!(
        "[PASS] each of the 1260 syzygetic triples completes to exactly one tetrad ({elapsed:.2?})"
    );
}

#[test]
fn randomized_invariants_hold() {
    let model = BitangentModel::new();

    // 10,000 switching trials, 10,000 validity trials, 100 sign
    // assignments on the full model.
    let switching = verify_switching_parity(&model, 0);
    assert_eq!(switching.instances, 20_100);
    assert!(
        switching.pass(),
        "[FAIL] switching invariants: {:?}",
        switching.violations
    );

    // 1,000 random two-graphs satisfy the vertex-deletion counting bound.
    let bound = reduction_bound_report(0);
    assert_eq!(bound.instances, 1_000);
    assert!(
        bound.pass(),
        "[FAIL] reduction bound: {:?}",
        bound.violations
    );

    // Every catalog class round-trips: its representative graph induces a
    // two-graph whose own representative graph induces it again, and that
    // two-graph keys back to the class.
    for n in 1..=7 {
        let catalog = enumerate_classes(n).unwrap();
        for class in catalog.classes() {
            let tg = TwoGraph::from_graph(&class.representative);
            assert_eq!(
                TwoGraph::from_graph(&tg.representative_graph()),
                tg,
                "[FAIL] {} does not round-trip through its representative",
                class.label
            );
            assert_eq!(
                canonical_key(&tg).unwrap(),
                class.key,
                "[FAIL] representative of {} does not key to its class",
                class.label
            );
        }
    }

    // 1,000 random pairs at n <= 6: the canonical-form equivalence test
    // agrees with brute force over all vertex bijections.
    let mut rng = StdRng::seed_from_u64(1);
    let random_graph = |rng: &mut StdRng, n: usize| {
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if rng.random() {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(n, &edges).unwrap()
    };
    let mut equivalent_pairs = 0u32;
    for _ in 0..1_000 {
        let n = rng.random_range(4..=6usize);
        let a = random_graph(&mut rng, n);
        let b = if rng.random() {
            // A relabeled switch of a, guaranteed equivalent.
            let set: Vec<usize> = (0..n).filter(|_| rng.random()).collect();
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.random_range(0..=i));
            }
            a.switch(&set).unwrap().relabel(&perm).unwrap()
        } else {
            random_graph(&mut rng, n)
        };
        let tga = TwoGraph::from_graph(&a);
        let tgb = TwoGraph::from_graph(&b);
        let brute = (0..n)
            .permutations(n)
            .any(|perm| TwoGraph::from_graph(&a.relabel(&perm).unwrap()) == tgb);
        let fast = equivalent(&tga, &tgb).unwrap();
        assert_eq!(
            fast, brute,
            "[FAIL] equivalence disagrees with brute force on {a:?} vs {b:?}"
        );
        if fast {
            equivalent_pairs += 1;
        }
    }
    assert!(
        (200..800).contains(&equivalent_pairs),
        "[FAIL] equivalence trial mix is degenerate: {equivalent_pairs} of 1000"
    );

    println!(
        "[PASS] 20,100 switching/validity/sign trials, 1,000 bound trials, \
         all representatives round-trip, 1,000 equivalence trials agree with brute force"
    );
}

#[test]
fn attained_six_classes_keep_delta_below_fourteen() {
    let (_, six, ..) = classification();
    let max = six
        .classes
        .iter()
        .filter(|c| c.realizable)
        .map(|c| c.delta_count)
        .max()
        .unwrap();
    for c in &six.classes {
        if c.realizable {
            assert!(
                c.delta_count < 14,
                "[FAIL] {} is attained with {} member triples",
                c.label,
                c.delta_count
            );
        }
    }
    println!("[PASS] attained n = 6 classes have at most {max} member triples (< 14)");
}
