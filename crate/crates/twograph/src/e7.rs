//! The 28 bitangents of a smooth plane quartic, modeled by minimal vectors
//! of the dual E7 root lattice.
//!
//! In a frame f1..f8 the 56 minimal vectors (norm 3/2) are the antipodal
//! pairs ±u_jk for 1 <= j < k <= 8, where u_jk has coordinate 3/4 at j and k
//! and -1/4 elsewhere. Entries are stored scaled by 4, so every coordinate
//! is 3 or -1 and every dot product is exact: 24 with itself, -24 with the
//! antipode, +8 when two index pairs share one index, -8 when they are
//! disjoint.
//!
//! A bitangent is an antipodal pair; picking a sign gives a graph on any
//! vector list (edge iff scaled dot = -8), and flipping signs is exactly
//! Seidel switching, so the two-graph of the list is sign-independent. The
//! 28 positive representatives u_jk in lex (j,k) order give the full
//! 28-vertex two-graph whose triples are the syzygetic bitangent triples.

use crate::comb::triple_rank;
use crate::error::Error;
use crate::graph::Graph;
use crate::two_graph::TwoGraph;
use crate::Result;
use std::fmt;
use std::str::FromStr;

/// Number of bitangents / antipodal minimal-vector pairs.
pub const BITANGENTS: usize = 28;

/// A minimal vector ±u_jk of the dual E7 lattice, 4-scaled. The (j,k) pair
/// uses the conventional 1-based frame indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MinimalVector {
    j: u8,
    k: u8,
    sign: i8,
}

impl MinimalVector {
    pub fn new(j: usize, k: usize, sign: i8) -> Result<MinimalVector> {
        if j < 1 || k <= j || k > 8 {
            return Err(Error::BadIndexPair { j, k });
        }
        if sign != 1 && sign != -1 {
            return Err(Error::BadSign(sign));
        }
        Ok(MinimalVector {
            j: j as u8,
            k: k as u8,
            sign,
        })
    }

    pub fn j(&self) -> usize {
        self.j as usize
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// Coordinates scaled by 4: ±(3 at j and k, -1 elsewhere).
    pub fn entries(&self) -> [i8; 8] {
        let mut e = [-self.sign; 8];
        e[self.j as usize - 1] = 3 * self.sign;
        e[self.k as usize - 1] = 3 * self.sign;
        e
    }

    /// Dot product of the 4-scaled coordinates, i.e. 16 times the lattice
    /// inner product. Always one of ±24 and ±8.
    pub fn dot16(&self, other: &MinimalVector) -> i32 {
        self.entries()
            .iter()
            .zip(other.entries())
            .map(|(&a, b)| a as i32 * b as i32)
            .sum()
    }

    pub fn negated(&self) -> MinimalVector {
        MinimalVector {
            j: self.j,
            k: self.k,
            sign: -self.sign,
        }
    }

    /// Index of the underlying bitangent: the lex rank of (j,k) among the 28
    /// pairs, ignoring sign. u12 is 0, u78 is 27.
    pub fn bitangent_index(&self) -> usize {
        let j = self.j as usize;
        let k = self.k as usize;
        (j - 1) * (16 - j) / 2 + (k - j - 1)
    }

    /// Positive representative of the idx-th bitangent pair, optionally
    /// negated.
    pub fn from_bitangent_index(idx: usize, sign: i8) -> Result<MinimalVector> {
        let mut j = 1usize;
        let mut base = 0usize;
        while j < 8 && base + (8 - j) <= idx {
            base += 8 - j;
            j += 1;
        }
        let k = j + 1 + idx - base;
        MinimalVector::new(j, k, sign)
    }

    /// Parse a token of the grammar `sign? "u" digit digit` with digits in
    /// 1..=8 and the first strictly smaller: "u18", "-u15", "+u27".
    pub fn parse(token: &str) -> Result<MinimalVector> {
        let bad = || Error::VectorSyntax(token.to_string());
        let (sign, rest) = match token.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, token.strip_prefix('+').unwrap_or(token)),
        };
        let digits = rest.strip_prefix('u').ok_or_else(bad)?;
        let mut chars = digits.chars();
        let (a, b) = match (chars.next(), chars.next(), chars.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(bad()),
        };
        let j = a.to_digit(10).ok_or_else(bad)? as usize;
        let k = b.to_digit(10).ok_or_else(bad)? as usize;
        MinimalVector::new(j, k, sign).map_err(|_| bad())
    }
}

impl FromStr for MinimalVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<MinimalVector> {
        MinimalVector::parse(s)
    }
}

impl fmt::Display for MinimalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        write!(f, "u{}{}", self.j, self.k)
    }
}

impl fmt::Debug for MinimalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parse one comma- or whitespace-separated list of vector tokens; a `#`
/// starts a comment running to the end of the line.
pub fn parse_vector_list(line: &str) -> Result<Vec<MinimalVector>> {
    let text = line.split('#').next().unwrap_or("");
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(MinimalVector::parse)
        .collect()
}

/// Parse a whole file of vector lists, one list per line; blank and
/// comment-only lines are skipped.
pub fn parse_vector_lists(text: &str) -> Result<Vec<Vec<MinimalVector>>> {
    let mut lists = Vec::new();
    for line in text.lines() {
        let list = parse_vector_list(line)?;
        if !list.is_empty() {
            lists.push(list);
        }
    }
    Ok(lists)
}

/// Graph on a list of signed minimal vectors: vertex i is `vectors[i]`, with
/// an edge where the scaled dot product is -8 (lattice inner product -1/2).
/// Listing the same bitangent twice — even with opposite signs — is an
/// error: a sign flip is a switch of the same point, not a new one.
pub fn graph_from_vectors(vectors: &[MinimalVector]) -> Result<Graph> {
    let mut seen = 0u32;
    for v in vectors {
        let idx = v.bitangent_index();
        if seen >> idx & 1 == 1 {
            return Err(Error::DuplicateBitangent(format!("u{}{}", v.j, v.k)));
        }
        seen |= 1 << idx;
    }
    let mut edges = Vec::new();
    for (b, w) in vectors.iter().enumerate() {
        for (a, v) in vectors.iter().enumerate().take(b) {
            let dot = v.dot16(w);
            debug_assert!(dot == 8 || dot == -8, "distinct bitangents meet at ±8");
            if dot == -8 {
                edges.push((a, b));
            }
        }
    }
    Graph::new(vectors.len(), &edges)
}

/// The full 28-bitangent model: the positive representatives u_jk in lex
/// (j,k) order and the two-graph they cut out (1260 syzygetic triples).
#[derive(Clone)]
pub struct BitangentModel {
    vectors: [MinimalVector; BITANGENTS],
    two_graph: TwoGraph,
}

impl BitangentModel {
    pub fn new() -> BitangentModel {
        let mut vectors = [MinimalVector {
            j: 1,
            k: 2,
            sign: 1,
        }; BITANGENTS];
        for (idx, v) in vectors.iter_mut().enumerate() {
            *v = MinimalVector::from_bitangent_index(idx, 1).expect("idx < 28");
        }
        let g = graph_from_vectors(&vectors).expect("28 distinct bitangents");
        BitangentModel {
            vectors,
            two_graph: TwoGraph::from_graph(&g),
        }
    }

    pub fn vectors(&self) -> &[MinimalVector; BITANGENTS] {
        &self.vectors
    }

    /// The syzygy two-graph on all 28 bitangents.
    pub fn two_graph(&self) -> &TwoGraph {
        &self.two_graph
    }

    /// 1-based frame index pair of a bitangent index.
    pub fn pair_of(idx: usize) -> (usize, usize) {
        let v = MinimalVector::from_bitangent_index(idx, 1).expect("idx < 28");
        (v.j(), v.k())
    }

    /// Is the bitangent triple {a,b,c} syzygetic (a member of the model
    /// two-graph)? Indices in any order.
    #[inline]
    pub fn contains_triple(&self, a: usize, b: usize, c: usize) -> bool {
        debug_assert!(a != b && a != c && b != c);
        let (mut x, mut y, mut z) = (a, b, c);
        if x > y {
            std::mem::swap(&mut x, &mut y);
        }
        if y > z {
            std::mem::swap(&mut y, &mut z);
        }
        if x > y {
            std::mem::swap(&mut x, &mut y);
        }
        self.two_graph.delta().get(triple_rank(BITANGENTS, x, y, z))
    }

    /// Induced delta word of an ascending subset of 3..=8 bitangents. The
    /// loop order is local lex order, so the running bit index is the local
    /// triple rank — this is the scan's hot path.
    pub(crate) fn induced_delta_word(&self, subset: &[usize]) -> u64 {
        let m = subset.len();
        debug_assert!((3..=8).contains(&m));
        debug_assert!(subset.windows(2).all(|w| w[0] < w[1]));
        let mut word = 0u64;
        let mut bit = 0u32;
        for p in 0..m {
            for q in p + 1..m {
                for r in q + 1..m {
                    if self.contains_triple(subset[p], subset[q], subset[r]) {
                        word |= 1u64 << bit;
                    }
                    bit += 1;
                }
            }
        }
        word
    }

    /// Verification hook: silently drop the first member triple, leaving a
    /// triple set that is not a two-graph. Only the negative-control tests
    /// and the CLI's hidden flag use this.
    #[doc(hidden)]
    pub fn poison_first_triple(&mut self) {
        self.two_graph.clear_first_triple_for_tests();
    }
}

impl Default for BitangentModel {
    fn default() -> Self {
        BitangentModel::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comb::lex_triples;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn entries_and_negation() {
        let v = MinimalVector::new(1, 4, 1).unwrap();
        assert_eq!(v.entries(), [3, -1, -1, 3, -1, -1, -1, -1]);
        assert_eq!(v.negated().entries(), [-3, 1, 1, -3, 1, 1, 1, 1]);
        assert_eq!(
            MinimalVector::new(4, 1, 1),
            Err(Error::BadIndexPair { j: 4, k: 1 })
        );
        assert_eq!(
            MinimalVector::new(1, 9, 1),
            Err(Error::BadIndexPair { j: 1, k: 9 })
        );
        assert_eq!(MinimalVector::new(1, 4, 0), Err(Error::BadSign(0)));
    }

    #[test]
    fn dot_products() {
        let u18: MinimalVector = "u18".parse().unwrap();
        let u28: MinimalVector = "u28".parse().unwrap();
        let u23: MinimalVector = "u23".parse().unwrap();
        assert_eq!(u18.dot16(&u18), 24);
        assert_eq!(u18.dot16(&u18.negated()), -24);
        assert_eq!(u18.dot16(&u28), 8, "pairs share the index 8");
        assert_eq!(u18.dot16(&u23), -8, "disjoint pairs");
        assert_eq!(u18.negated().dot16(&u23), 8);
    }

    #[test]
    fn parse_and_display() {
        for tok in ["u18", "-u15", "+u27", "u12", "u78"] {
            let v = MinimalVector::parse(tok).unwrap();
            let canonical = tok.strip_prefix('+').unwrap_or(tok);
            assert_eq!(v.to_string(), canonical);
        }
        for bad in [
            "u81", "u11", "u9", "u1", "v18", "u188", "", "-", "18", "--u18",
        ] {
            assert_eq!(
                MinimalVector::parse(bad),
                Err(Error::VectorSyntax(bad.to_string())),
                "{bad:?} must not parse"
            );
        }
    }

    #[test]
    fn bitangent_indexing_round_trips() {
        for idx in 0..BITANGENTS {
            let v = MinimalVector::from_bitangent_index(idx, 1).unwrap();
            assert_eq!(v.bitangent_index(), idx);
        }
        assert_eq!(
            MinimalVector::from_bitangent_index(0, 1)
                .unwrap()
                .to_string(),
            "u12"
        );
        assert_eq!(
            MinimalVector::from_bitangent_index(27, -1)
                .unwrap()
                .to_string(),
            "-u78"
        );
        assert!(MinimalVector::from_bitangent_index(28, 1).is_err());
    }

    #[test]
    fn list_parsing() {
        let lists =
            parse_vector_lists("u18, u28 u38\n# comment only\n\nu12 -u13 # trailing words\n")
                .unwrap();
        assert_eq!(lists.len(), 2);
        assert_eq!(lists[0].len(), 3);
        assert_eq!(lists[1][1].to_string(), "-u13");
        assert!(parse_vector_list("u18 u99").is_err());
    }

    #[test]
    fn four_vector_graph() {
        // u14 is disjoint from u28 and u38; every other pair shares an
        // index. So the edges are exactly {0,2} and {0,3}, and the member
        // triples are the two containing both u14 and u18.
        let vs = parse_vector_list("u14 u18 u28 u38").unwrap();
        let g = graph_from_vectors(&vs).unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (0, 3)]);
        let tg = TwoGraph::from_graph(&g);
        assert_eq!(tg.triples(), vec![(0, 1, 2), (0, 1, 3)]);
    }

    #[test]
    fn common_index_lists_are_edgeless() {
        let vs = parse_vector_list("u18 u28 u38 u48 u58").unwrap();
        let g = graph_from_vectors(&vs).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn duplicates_rejected() {
        let vs = parse_vector_list("u18 -u18 u23").unwrap();
        assert_eq!(
            graph_from_vectors(&vs),
            Err(Error::DuplicateBitangent("u18".to_string()))
        );
        assert!(graph_from_vectors(&[]).is_err(), "empty list has no graph");
    }

    #[test]
    fn model_two_graph_is_valid_and_has_1260_triples() {
        let model = BitangentModel::new();
        let tg = model.two_graph();
        assert!(TwoGraph::is_valid_delta(BITANGENTS, tg.delta()));
        assert_eq!(tg.delta_count(), 1260);
    }

    #[test]
    fn syzygy_matches_index_pair_combinatorics() {
        // Independent route: a triple of bitangents is a member iff the
        // number of disjoint index-pair relations among the three is odd.
        // (1 disjoint relation: 840 triples; all 3 disjoint: 420.)
        let model = BitangentModel::new();
        let mut odd = 0u32;
        let mut by_disjoint = [0u32; 4];
        for (a, b, c) in lex_triples(BITANGENTS) {
            let pairs = [
                BitangentModel::pair_of(a),
                BitangentModel::pair_of(b),
                BitangentModel::pair_of(c),
            ];
            let disjoint = |x: (usize, usize), y: (usize, usize)| {
                x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1
            };
            let count = disjoint(pairs[0], pairs[1]) as u32
                + disjoint(pairs[0], pairs[2]) as u32
                + disjoint(pairs[1], pairs[2]) as u32;
            by_disjoint[count as usize] += 1;
            let member = count % 2 == 1;
            if member {
                odd += 1;
            }
            assert_eq!(model.contains_triple(a, b, c), member, "{pairs:?}");
        }
        assert_eq!(odd, 1260);
        assert_eq!(by_disjoint[1], 840);
        assert_eq!(by_disjoint[3], 420);
    }

    #[test]
    fn induced_word_matches_two_graph_induced() {
        let model = BitangentModel::new();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let m = rng.random_range(3..=8usize);
            let mut subset: Vec<usize> = Vec::new();
            while subset.len() < m {
                let v = rng.random_range(0..BITANGENTS);
                if !subset.contains(&v) {
                    subset.push(v);
                }
            }
            subset.sort_unstable();
            let word = model.induced_delta_word(&subset);
            let via_induced = model.two_graph().induced(&subset).unwrap();
            assert_eq!(word, via_induced.delta_u64());
        }
    }

    #[test]
    fn sign_flips_do_not_move_the_two_graph() {
        let model = BitangentModel::new();
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..5 {
            let signed: Vec<MinimalVector> = model
                .vectors()
                .iter()
                .map(|v| if rng.random() { *v } else { v.negated() })
                .collect();
            let g = graph_from_vectors(&signed).unwrap();
            assert_eq!(&TwoGraph::from_graph(&g), model.two_graph());
        }
    }

    #[test]
    fn poisoned_model_fails_validation() {
        let mut model = BitangentModel::new();
        model.poison_first_triple();
        assert_eq!(model.two_graph().delta_count(), 1259);
        assert!(!TwoGraph::is_valid_delta(
            BITANGENTS,
            model.two_graph().delta()
        ));
    }
}
