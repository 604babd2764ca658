//! The catalog of two-graph classes on n vertices.
//!
//! Every switching class contains exactly one graph whose last vertex is
//! isolated, so sweeping the 2^C(n-1,2) edge masks on the first n-1 vertices
//! visits each labeled two-graph once; canonicalizing and deduplicating
//! yields the classes. The counts are 1, 1, 2, 3, 7, 16, 54, 243 for
//! n = 1..=8.
//!
//! Classes are named "(n,d)" with d the triple count, subscripted when
//! several classes share d. For n = 5 and 6 the subscripts follow the
//! conventional drawn representatives below (bound by graph identity, not by
//! catalog order); elsewhere they follow catalog order.

use crate::canon::{canonical_bits, canonical_key, CanonicalKey};
use crate::comb::{binomial, lex_triples, pair_rank};
use crate::error::Error;
use crate::graph::Graph;
use crate::two_graph::TwoGraph;
use crate::Result;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::{HashMap, HashSet};

/// Number of two-graph classes on n vertices, indexed by n (entry 0 unused).
/// The values through n = 7 gate the CLI's enumerate subcommand; n = 8 is
/// covered by the slow catalog test.
pub const CLASS_COUNTS: [u64; 9] = [0, 1, 1, 2, 3, 7, 16, 54, 243];

/// One class: its label, canonical key, triple count, and the
/// isolated-vertex representative graph of the canonical delta.
#[derive(Clone, Debug)]
pub struct CatalogClass {
    pub label: String,
    pub key: CanonicalKey,
    pub delta_count: u32,
    pub representative: Graph,
}

/// All classes on n vertices, sorted by (triple count, key).
#[derive(Clone, Debug)]
pub struct ClassCatalog {
    n: u8,
    classes: Vec<CatalogClass>,
    by_key: HashMap<u64, usize>,
}

/// Drawn representatives pinning the subscript labels at n = 5.
const FIGURE_REPS_5: &[(&str, &[(usize, usize)])] = &[
    ("(5,0)", &[]),
    ("(5,3)", &[(0, 1)]),
    ("(5,4)", &[(0, 1), (1, 2)]),
    ("(5,5)", &[(0, 1), (1, 2), (2, 3)]),
    ("(5,6)", &[(0, 1), (2, 3)]),
    ("(5,7)", &[(0, 1), (1, 2), (0, 2)]),
    (
        "(5,10)",
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 4),
        ],
    ),
];

/// Drawn representatives pinning the subscript labels at n = 6.
const FIGURE_REPS_6: &[(&str, &[(usize, usize)])] = &[
    ("(6,0)", &[]),
    ("(6,4)", &[(0, 1)]),
    ("(6,6)", &[(0, 1), (1, 2)]),
    ("(6,8)_1", &[(0, 1), (2, 3)]),
    ("(6,8)_2", &[(0, 1), (1, 2), (2, 3)]),
    ("(6,8)_3", &[(0, 1), (1, 2), (2, 3), (0, 3)]),
    ("(6,10)_1", &[(0, 1), (1, 2), (2, 3), (3, 4)]),
    ("(6,10)_2", &[(0, 1), (1, 2), (0, 2)]),
    ("(6,10)_3", &[(0, 1), (1, 2), (3, 4)]),
    ("(6,10)_4", &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
    ("(6,12)_1", &[(0, 1), (1, 2), (2, 3), (0, 3), (4, 5)]),
    ("(6,12)_2", &[(0, 1), (1, 2), (2, 3), (4, 5)]),
    ("(6,12)_3", &[(0, 1), (2, 3), (4, 5)]),
    ("(6,14)", &[(0, 1), (1, 2), (0, 2), (3, 4)]),
    ("(6,16)", &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)]),
    ("(6,20)", &[(0, 1), (1, 2), (0, 2), (3, 4), (3, 5), (4, 5)]),
];

/// Labeled drawings: class label and the edge list read off the figure.
type FigureReps = &'static [(&'static str, &'static [(usize, usize)])];

pub(crate) fn figure_representatives(n: usize) -> Option<FigureReps> {
    match n {
        5 => Some(FIGURE_REPS_5),
        6 => Some(FIGURE_REPS_6),
        _ => None,
    }
}

/// Delta word of the graph encoded by an edge mask (colex pair ranks), with
/// no intermediate allocations — the enumeration sweeps millions of these at
/// n = 8.
fn delta_word_of_mask(n: usize, mask: u64) -> u64 {
    let mut word = 0u64;
    for (rank, (i, j, k)) in lex_triples(n).enumerate() {
        let edges = (mask >> pair_rank(i, j) & 1)
            + (mask >> pair_rank(i, k) & 1)
            + (mask >> pair_rank(j, k) & 1);
        word |= (edges & 1) << rank;
    }
    word
}

/// Enumerate all two-graph classes on n vertices, 1 <= n <= 8. The sweep is
/// parallel; the result is fully deterministic (classes sorted by triple
/// count, then key).
pub fn enumerate_classes(n: usize) -> Result<ClassCatalog> {
    if n == 0 || n > 8 {
        return Err(Error::EnumerationRange(n));
    }
    let edge_bits = if n >= 2 { binomial(n - 1, 2) } else { 0 };
    let keys: HashSet<u64> = (0..1u64 << edge_bits)
        .into_par_iter()
        .map(|mask| canonical_bits(n, delta_word_of_mask(n, mask)))
        .collect();
    let mut bits: Vec<u64> = keys.into_iter().collect();
    bits.sort_by_key(|&b| (b.count_ones(), b));

    let mut classes: Vec<CatalogClass> = bits
        .into_iter()
        .map(|b| {
            let key = CanonicalKey::from_parts(n, b);
            let tg = TwoGraph::from_delta_u64_unchecked(n, b);
            CatalogClass {
                label: String::new(),
                key,
                delta_count: b.count_ones(),
                representative: tg.representative_graph(),
            }
        })
        .collect();

    match figure_representatives(n) {
        Some(reps) => {
            if reps.len() != classes.len() {
                return Err(Error::LabelBinding(format!(
                    "{} drawn representatives for {} classes at n={n}",
                    reps.len(),
                    classes.len()
                )));
            }
            for (label, edges) in reps {
                let g = Graph::new(n, edges).expect("drawn representatives are in range");
                let key = canonical_key(&TwoGraph::from_graph(&g)).expect("n is 5 or 6 here");
                let class = classes.iter_mut().find(|c| c.key == key).ok_or_else(|| {
                    Error::LabelBinding(format!("no class matches the drawing for {label}"))
                })?;
                if !class.label.is_empty() {
                    return Err(Error::LabelBinding(format!(
                        "{label} and {} draw equivalent graphs",
                        class.label
                    )));
                }
                class.label = label.to_string();
            }
        }
        None => {
            // Subscripts in catalog order, only where a triple count repeats.
            let mut start = 0;
            while start < classes.len() {
                let d = classes[start].delta_count;
                let end = classes[start..]
                    .iter()
                    .position(|c| c.delta_count != d)
                    .map_or(classes.len(), |p| start + p);
                for (k, class) in classes[start..end].iter_mut().enumerate() {
                    class.label = if end - start == 1 {
                        format!("({n},{d})")
                    } else {
                        format!("({n},{d})_{}", k + 1)
                    };
                }
                start = end;
            }
        }
    }

    let by_key = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.key.bits(), i))
        .collect();
    Ok(ClassCatalog {
        n: n as u8,
        classes,
        by_key,
    })
}

impl ClassCatalog {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn classes(&self) -> &[CatalogClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_by_key(&self, key: &CanonicalKey) -> Option<&CatalogClass> {
        if key.n() != self.n as usize {
            return None;
        }
        self.by_key.get(&key.bits()).map(|&i| &self.classes[i])
    }

    pub fn class_by_label(&self, label: &str) -> Option<&CatalogClass> {
        self.classes.iter().find(|c| c.label == label)
    }

    /// The class a two-graph belongs to.
    pub fn class_of(&self, tg: &TwoGraph) -> Result<&CatalogClass> {
        if tg.n() != self.n as usize {
            return Err(Error::CatalogMismatch {
                catalog: self.n as usize,
                expected: tg.n(),
            });
        }
        let key = canonical_key(tg)?;
        self.class_by_key(&key)
            .ok_or_else(|| Error::UnknownKey(key.hex()))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "classes": self.classes.iter().map(|c| json!({
                "label": c.label,
                "delta_popcount": c.delta_count,
                "key_hex": c.key.hex(),
                "representative_edges": c.representative.edges(),
            })).collect::<Vec<_>>(),
        })
    }

    /// Rebuild a catalog from its JSON form, re-verifying everything: keys
    /// must decode, be canonical, match their popcount, and agree with the
    /// stored representative. A cache that fails any of this is rejected.
    pub fn from_json(v: &Value) -> Result<ClassCatalog> {
        let bad = |msg: &str| Error::CatalogFormat(msg.to_string());
        let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        if n == 0 || n > 8 {
            return Err(Error::EnumerationRange(n));
        }
        let arr = v["classes"]
            .as_array()
            .ok_or_else(|| bad("missing classes"))?;
        let mut classes = Vec::with_capacity(arr.len());
        for entry in arr {
            let label = entry["label"]
                .as_str()
                .ok_or_else(|| bad("class without label"))?
                .to_string();
            let hex = entry["key_hex"]
                .as_str()
                .ok_or_else(|| bad("class without key_hex"))?;
            let key =
                CanonicalKey::from_hex(n, hex).ok_or_else(|| bad("key_hex does not decode"))?;
            if canonical_bits(n, key.bits()) != key.bits() {
                return Err(bad("key is not canonical"));
            }
            let d = entry["delta_popcount"]
                .as_u64()
                .ok_or_else(|| bad("class without delta_popcount"))? as u32;
            if d != key.bits().count_ones() {
                return Err(bad("delta_popcount disagrees with key"));
            }
            let edges_json = entry["representative_edges"]
                .as_array()
                .ok_or_else(|| bad("class without representative_edges"))?;
            let mut edges = Vec::with_capacity(edges_json.len());
            for e in edges_json {
                let pair = e.as_array().filter(|p| p.len() == 2);
                let (i, j) = match pair {
                    Some(p) => match (p[0].as_u64(), p[1].as_u64()) {
                        (Some(i), Some(j)) => (i as usize, j as usize),
                        _ => return Err(bad("edge is not an index pair")),
                    },
                    None => return Err(bad("edge is not an index pair")),
                };
                edges.push((i, j));
            }
            let representative = Graph::new(n, &edges)?;
            let rep_key = canonical_key(&TwoGraph::from_graph(&representative))?;
            if rep_key != key {
                return Err(bad("representative does not lie in its class"));
            }
            classes.push(CatalogClass {
                label,
                key,
                delta_count: d,
                representative,
            });
        }
        let mut by_key = HashMap::with_capacity(classes.len());
        for (i, c) in classes.iter().enumerate() {
            if by_key.insert(c.key.bits(), i).is_some() {
                return Err(bad("duplicate key"));
            }
        }
        let mut labels: Vec<&str> = classes.iter().map(|c| c.label.as_str()).collect();
        labels.sort_unstable();
        labels.dedup();
        if labels.len() != classes.len() {
            return Err(bad("duplicate label"));
        }
        Ok(ClassCatalog {
            n: n as u8,
            classes,
            by_key,
        })
    }
}
