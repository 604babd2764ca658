//! Which two-graph classes appear among n-subsets of the 28 bitangents,
//! and the structural checks behind the class tables.
//!
//! [`classify_subsets`] scans every n-subset of bitangents, canonicalizes
//! the induced two-graph, and reports per class how many subsets attain it
//! together with the first witness in colex order. The scan is parallel but
//! merges only with sums and minima, so its output is identical for any
//! worker count.
//!
//! The `verify_*` functions re-derive the facts the tables rest on: the
//! unique completion of syzygetic triples to tetrads, the vertex-deletion
//! descent that excludes classes, the published witness lists, and the
//! switching invariance that makes "the two-graph of a vector list"
//! well-defined in the first place.

use crate::canon::{canonical_bits, canonical_key, CanonicalKey};
use crate::catalog::ClassCatalog;
use crate::comb::{
    binomial, lex_triples, next_subset, subset_elements, subset_rank, subset_unrank,
};
use crate::e7::{graph_from_vectors, parse_vector_list, BitangentModel, MinimalVector, BITANGENTS};
use crate::error::Error;
use crate::graph::Graph;
use crate::two_graph::TwoGraph;
use crate::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::HashMap;
use std::time::{Duration, Instant};

/// Classes attained by 5-subsets of bitangents.
pub const REALIZABLE_N5: [&str; 5] = ["(5,0)", "(5,3)", "(5,4)", "(5,5)", "(5,6)"];

/// Classes no 5-subset of bitangents attains.
pub const UNREALIZABLE_N5: [&str; 2] = ["(5,7)", "(5,10)"];

/// Classes attained by 6-subsets of bitangents.
pub const REALIZABLE_N6: [&str; 9] = [
    "(6,0)", "(6,4)", "(6,6)", "(6,8)_1", "(6,8)_2", "(6,8)_3", "(6,10)_1", "(6,10)_4", "(6,12)_3",
];

/// Classes no 6-subset of bitangents attains.
pub const UNREALIZABLE_N6: [&str; 7] = [
    "(6,10)_2", "(6,10)_3", "(6,12)_1", "(6,12)_2", "(6,14)", "(6,16)", "(6,20)",
];

/// One explicit signed vector list per realizable class, in catalog order.
pub const WITNESS_LISTS: [(&str, &str); 14] = [
    ("(5,0)", "u18 u28 u38 u48 u58"),
    ("(5,3)", "u18 u28 u38 u48 -u15"),
    ("(5,4)", "u18 u28 u38 u48 -u12"),
    ("(5,5)", "u18 u28 u38 u23 -u24"),
    ("(5,6)", "u18 u28 u13 u23 u12"),
    ("(6,0)", "u18 u28 u38 u48 u58 u68"),
    ("(6,4)", "u18 u28 u38 u48 u58 -u16"),
    ("(6,6)", "u18 u28 u38 u48 u58 -u12"),
    ("(6,8)_1", "u18 u28 u38 u48 -u15 -u25"),
    ("(6,8)_2", "u18 u28 u38 u48 -u15 -u26"),
    ("(6,8)_3", "u18 u28 u38 -u14 u23 u48"),
    ("(6,10)_1", "u18 u28 u38 u48 -u14 -u34"),
    ("(6,10)_4", "u18 u28 u38 u23 -u24 u35"),
    ("(6,12)_3", "u18 u28 u38 u12 u13 u23"),
];

/// Fate of one catalog class under the subset scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassOutcome {
    pub label: String,
    pub key: CanonicalKey,
    pub delta_count: u32,
    /// Whether any scanned subset induces this class.
    pub realizable: bool,
    /// How many subsets induce it.
    pub count: u64,
    /// For realizable classes, the colex-first witness subset as the
    /// 1-based frame index pairs of its bitangents.
    pub witness: Option<Vec<(usize, usize)>>,
}

/// Full result of classifying all n-subsets of the 28 bitangents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizabilityReport {
    pub n: usize,
    pub total_subsets: u64,
    /// One outcome per catalog class, in catalog order.
    pub classes: Vec<ClassOutcome>,
}

impl RealizabilityReport {
    pub fn realizable_labels(&self) -> Vec<&str> {
        self.classes
            .iter()
            .filter(|c| c.realizable)
            .map(|c| c.label.as_str())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let classes: Vec<Value> = self
            .classes
            .iter()
            .map(|c| {
                json!({
                    "label": c.label,
                    "key_hex": c.key.hex(),
                    "realizable": c.realizable,
                    "count": c.count,
                    "witness_pairs": c.witness,
                })
            })
            .collect();
        json!({
            "n": self.n,
            "total_subsets": self.total_subsets,
            "classes": classes,
        })
    }
}

/// Subsets scanned per parallel work item. Fixed so the block partition —
/// and with it every intermediate — is independent of the worker count.
const SCAN_BLOCK: u64 = 4096;

/// Classify every n-subset of the 28 bitangents (3 <= n <= 7) by the
/// equivalence class of its induced two-graph, against the given catalog
/// for the same n.
pub fn classify_subsets(
    n: usize,
    catalog: &ClassCatalog,
    model: &BitangentModel,
) -> Result<RealizabilityReport> {
    if !(3..=7).contains(&n) {
        return Err(Error::ClassificationRange(n));
    }
    if catalog.n() != n {
        return Err(Error::CatalogMismatch {
            catalog: catalog.n(),
            expected: n,
        });
    }
    let total = binomial(BITANGENTS, n);
    let blocks = total.div_ceil(SCAN_BLOCK);

    // Per class: (number of subsets, colex rank of the first one). Summing
    // counts and taking the min rank are associative and commutative, so
    // the merge order cannot show through in the result.
    let merged: HashMap<u64, (u64, u64)> = (0..blocks)
        .into_par_iter()
        .fold(
            || (HashMap::new(), HashMap::new()),
            |(mut acc, mut memo): (HashMap<u64, (u64, u64)>, HashMap<u64, u64>), block| {
                let lo = block * SCAN_BLOCK;
                let hi = total.min(lo + SCAN_BLOCK);
                let mut mask = subset_unrank(lo, n);
                let mut elems = [0usize; 8];
                for rank in lo..hi {
                    debug_assert_eq!(subset_rank(mask), rank);
                    let m = subset_elements(mask, &mut elems);
                    debug_assert_eq!(m, n);
                    let word = model.induced_delta_word(&elems[..n]);
                    let canon = *memo.entry(word).or_insert_with(|| canonical_bits(n, word));
                    // Ranks ascend within a block, so the rank stored at
                    // insertion is already the block minimum.
                    acc.entry(canon).or_insert((0, rank)).0 += 1;
                    mask = next_subset(mask);
                }
                (acc, memo)
            },
        )
        .map(|(acc, _memo)| acc)
        .reduce(HashMap::new, |mut into, from| {
            for (key, (count, rank)) in from {
                let slot = into.entry(key).or_insert((0, rank));
                slot.0 += count;
                slot.1 = slot.1.min(rank);
            }
            into
        });

    let mut covered = 0u64;
    for (&bits, &(count, _)) in &merged {
        covered += count;
        if catalog
            .class_by_key(&CanonicalKey::from_parts(n, bits))
            .is_none()
        {
            return Err(Error::UnknownKey(CanonicalKey::from_parts(n, bits).hex()));
        }
    }
    assert_eq!(covered, total, "every subset lands in exactly one class");

    let classes = catalog
        .classes()
        .iter()
        .map(|class| match merged.get(&class.key.bits()) {
            Some(&(count, rank)) => {
                let mask = subset_unrank(rank, n);
                let mut elems = [0usize; 8];
                let m = subset_elements(mask, &mut elems);
                let witness = elems[..m]
                    .iter()
                    .map(|&i| BitangentModel::pair_of(i))
                    .collect();
                ClassOutcome {
                    label: class.label.clone(),
                    key: class.key,
                    delta_count: class.delta_count,
                    realizable: true,
                    count,
                    witness: Some(witness),
                }
            }
            None => ClassOutcome {
                label: class.label.clone(),
                key: class.key,
                delta_count: class.delta_count,
                realizable: false,
                count: 0,
                witness: None,
            },
        })
        .collect();

    Ok(RealizabilityReport {
        n,
        total_subsets: total,
        classes,
    })
}

/// Result of one verification pass.
#[derive(Debug, Clone)]
pub struct LemmaReport {
    pub id: &'static str,
    /// How many individual checks ran.
    pub instances: u64,
    /// Human-readable description of every failed check.
    pub violations: Vec<String>,
    /// Wall time of the pass. Not serialized: JSON output stays identical
    /// across runs.
    pub elapsed: Duration,
}

impl LemmaReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "instances": self.instances,
            "pass": self.pass(),
            "violations": self.violations,
        })
    }
}

/// Every syzygetic triple of bitangents extends to exactly one syzygetic
/// tetrad (all four of whose triples are syzygetic).
pub fn verify_unique_tetrad(model: &BitangentModel) -> LemmaReport {
    let start = Instant::now();
    let mut instances = 0u64;
    let mut violations = Vec::new();
    for (a, b, c) in lex_triples(BITANGENTS) {
        if !model.contains_triple(a, b, c) {
            continue;
        }
        instances += 1;
        let completions = (0..BITANGENTS)
            .filter(|&d| {
                d != a
                    && d != b
                    && d != c
                    && model.contains_triple(a, b, d)
                    && model.contains_triple(a, c, d)
                    && model.contains_triple(b, c, d)
            })
            .count();
        if completions != 1 {
            let vs = model.vectors();
            violations.push(format!(
                "{} {} {}: {} completions",
                vs[a], vs[b], vs[c], completions
            ));
        }
    }
    LemmaReport {
        id: "tetrad-completion",
        instances,
        violations,
        elapsed: start.elapsed(),
    }
}

/// The descent that excludes n = 6 classes: a class is in the unrealizable
/// table exactly when deleting some vertex of its representative lands in
/// (5,7) or (5,10) — the two classes the n = 5 scan rules out. Realizable
/// classes must survive every deletion, since induced sub-two-graphs of an
/// attained subset are themselves attained.
pub fn verify_excluded_by_subgraph(
    catalog6: &ClassCatalog,
    catalog5: &ClassCatalog,
) -> Result<LemmaReport> {
    let start = Instant::now();
    if catalog6.n() != 6 {
        return Err(Error::CatalogMismatch {
            catalog: catalog6.n(),
            expected: 6,
        });
    }
    if catalog5.n() != 5 {
        return Err(Error::CatalogMismatch {
            catalog: catalog5.n(),
            expected: 5,
        });
    }
    let mut obstructions = Vec::new();
    for label in UNREALIZABLE_N5 {
        let class = catalog5
            .class_by_label(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        obstructions.push(class.key.bits());
    }

    let mut instances = 0u64;
    let mut violations = Vec::new();
    for class in catalog6.classes() {
        instances += 1;
        let tg = TwoGraph::from_graph(&class.representative);
        let mut blocked_at = None;
        for v in 0..6 {
            let rest: Vec<usize> = (0..6).filter(|&u| u != v).collect();
            let key = canonical_key(&tg.induced(&rest)?)?;
            if obstructions.contains(&key.bits()) {
                blocked_at = Some(v);
                break;
            }
        }
        let expected_unrealizable = UNREALIZABLE_N6.contains(&class.label.as_str());
        match (expected_unrealizable, blocked_at) {
            (true, None) => violations.push(format!(
                "{}: no vertex deletion reaches (5,7) or (5,10)",
                class.label
            )),
            (false, Some(v)) => violations.push(format!(
                "{}: deleting vertex {} reaches an unattainable class",
                class.label, v
            )),
            _ => {}
        }
    }

    Ok(LemmaReport {
        id: "exclusion-descent",
        instances,
        violations,
        elapsed: start.elapsed(),
    })
}

/// Every published witness list lands in the class it is named for — both
/// read directly off its dot products and re-induced, signs forgotten,
/// inside the full 28-vertex model. Mismatches are reported with both keys.
pub fn verify_witness_lists(
    model: &BitangentModel,
    catalog5: &ClassCatalog,
    catalog6: &ClassCatalog,
) -> Result<LemmaReport> {
    let start = Instant::now();
    if catalog5.n() != 5 {
        return Err(Error::CatalogMismatch {
            catalog: catalog5.n(),
            expected: 5,
        });
    }
    if catalog6.n() != 6 {
        return Err(Error::CatalogMismatch {
            catalog: catalog6.n(),
            expected: 6,
        });
    }
    let mut violations = Vec::new();
    for &(label, list) in WITNESS_LISTS.iter() {
        let vectors = parse_vector_list(list)?;
        let catalog = match vectors.len() {
            5 => catalog5,
            6 => catalog6,
            _ => unreachable!("witness lists have 5 or 6 vectors"),
        };
        let expected = catalog
            .class_by_label(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        let graph = graph_from_vectors(&vectors)?;
        let direct = catalog.class_of(&TwoGraph::from_graph(&graph))?;
        let mut subset: Vec<usize> = vectors.iter().map(MinimalVector::bitangent_index).collect();
        subset.sort_unstable();
        let via_model = catalog.class_of(&model.two_graph().induced(&subset)?)?;
        if direct.label != label {
            violations.push(format!(
                "{label}: list keys to {} ({}), expected {}",
                direct.key.hex(),
                direct.label,
                expected.key.hex()
            ));
        } else if via_model.label != label {
            violations.push(format!(
                "{label}: unsigned model subset keys to {} ({}), expected {}",
                via_model.key.hex(),
                via_model.label,
                expected.key.hex()
            ));
        }
    }
    Ok(LemmaReport {
        id: "witness-lists",
        instances: WITNESS_LISTS.len() as u64,
        violations,
        elapsed: start.elapsed(),
    })
}

fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.random_range(4..=8usize);
    let mask = rng.random_range(0..1u64 << binomial(n, 2));
    Graph::from_edge_mask(n, mask)
}

/// Randomized re-check of the invariances everything else assumes: Seidel
/// switching never moves a two-graph, graphs only ever produce valid triple
/// sets, and every sign assignment on the 28 bitangents cuts out the same
/// syzygy two-graph.
pub fn verify_switching_parity(model: &BitangentModel, seed: u64) -> LemmaReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instances = 0u64;
    let mut violations = Vec::new();

    for trial in 0..10_000u32 {
        instances += 1;
        let g = random_graph(&mut rng);
        let set: Vec<usize> = (0..g.n()).filter(|_| rng.random()).collect();
        let switched = g.switch(&set).expect("switch set vertices are in range");
        if TwoGraph::from_graph(&g) != TwoGraph::from_graph(&switched) {
            violations.push(format!("trial {trial}: switching moved the two-graph"));
        }
    }

    for trial in 0..10_000u32 {
        instances += 1;
        let g = random_graph(&mut rng);
        let tg = TwoGraph::from_graph(&g);
        if !TwoGraph::is_valid_delta(g.n(), tg.delta()) {
            violations.push(format!(
                "trial {trial}: graph induced an invalid triple set"
            ));
        }
    }

    for trial in 0..100u32 {
        instances += 1;
        let signed: Vec<MinimalVector> = model
            .vectors()
            .iter()
            .map(|v| if rng.random() { *v } else { v.negated() })
            .collect();
        let g = graph_from_vectors(&signed).expect("the 28 bitangents are distinct");
        if &TwoGraph::from_graph(&g) != model.two_graph() {
            violations.push(format!(
                "trial {trial}: a sign assignment moved the syzygy two-graph"
            ));
        }
    }

    LemmaReport {
        id: "switching-parity",
        instances,
        violations,
        elapsed: start.elapsed(),
    }
}

/// Randomized re-check of [`verify_reduction_bound`] over arbitrary
/// two-graphs.
pub fn reduction_bound_report(seed: u64) -> LemmaReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    for trial in 0..1_000u32 {
        let g = random_graph(&mut rng);
        let tg = TwoGraph::from_graph(&g);
        if !verify_reduction_bound(&tg).expect("random graphs have n >= 4") {
            violations.push(format!("trial {trial}: counting bound failed on {tg:?}"));
        }
    }
    LemmaReport {
        id: "reduction-bound",
        instances: 1_000,
        violations,
        elapsed: start.elapsed(),
    }
}

/// The counting identity behind the descent step. Deleting vertex v from a
/// two-graph with d member triples leaves d minus the triple degree of v;
/// summed over v that is (n - 3)d, so the largest deleted subgraph keeps at
/// least (n - 3)d / n members. Both sides are computed from scratch —
/// degrees by iterating triples, deletions by actually inducing them — so
/// this doubles as a cross-check of the induced-subgraph code. Needs at
/// least 4 vertices (there is nothing to delete below that).
pub fn verify_reduction_bound(tg: &TwoGraph) -> Result<bool> {
    let n = tg.n();
    if n < 4 {
        return Err(Error::ReductionRange(n));
    }
    let d = tg.delta_count() as u64;
    let mut degree = vec![0u64; n];
    for (a, b, c) in tg.triples() {
        degree[a] += 1;
        degree[b] += 1;
        degree[c] += 1;
    }
    let mut sum = 0u64;
    let mut max = 0u64;
    for (v, &deg) in degree.iter().enumerate() {
        let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
        let sub = tg.induced(&rest).expect("at least 3 vertices remain");
        let remaining = sub.delta_count() as u64;
        if remaining != d - deg {
            return Ok(false);
        }
        sum += remaining;
        max = max.max(remaining);
    }
    Ok(sum == (n as u64 - 3) * d && (n as u64) * max >= (n as u64 - 3) * d)
}
