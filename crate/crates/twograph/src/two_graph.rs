//! Two-graphs: triple sets in which every 4-subset contains an even number
//! of members. These are exactly the switching invariants of graphs — a
//! triple belongs to the two-graph of a graph iff it spans an odd number of
//! edges — and that correspondence is a bijection once a normal form is
//! fixed (here: the unique graph in each switching class with the last
//! vertex isolated).

use crate::bits::Bits;
use crate::comb::{binomial, lex_triples, triple_rank, MAX_VERTICES};
use crate::error::Error;
use crate::graph::Graph;
use crate::Result;
use std::fmt;

/// A two-graph on vertices 0..n: the member triples as a bitset over all
/// C(n,3) triples in lexicographic rank order. Construction always validates
/// or derives the even-4-subset condition, so a value of this type is a
/// genuine two-graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwoGraph {
    n: u8,
    delta: Bits,
}

impl TwoGraph {
    /// The two-graph of a graph: all triples spanning an odd number of
    /// edges. Total — every graph yields a valid two-graph.
    pub fn from_graph(g: &Graph) -> TwoGraph {
        let n = g.n();
        let mut delta = Bits::new(binomial(n, 3) as usize);
        for (rank, (i, j, k)) in lex_triples(n).enumerate() {
            let count = g.has_edge(i, j) as u32 + g.has_edge(i, k) as u32 + g.has_edge(j, k) as u32;
            if count % 2 == 1 {
                delta.set(rank, true);
            }
        }
        TwoGraph { n: n as u8, delta }
    }

    /// Wrap an explicit triple set, rejecting it unless every 4-subset
    /// contains an even number of members.
    pub fn new(n: usize, delta: Bits) -> Result<TwoGraph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        if delta.len() != binomial(n, 3) as usize {
            return Err(Error::InvalidDelta);
        }
        if !Self::is_valid_delta(n, &delta) {
            return Err(Error::InvalidDelta);
        }
        Ok(TwoGraph { n: n as u8, delta })
    }

    /// The defining condition, checked directly: for every 4-subset
    /// {a,b,c,d}, an even number of its four triples are members.
    pub fn is_valid_delta(n: usize, delta: &Bits) -> bool {
        if delta.len() != binomial(n, 3) as usize {
            return false;
        }
        let member = |a: usize, b: usize, c: usize| delta.get(triple_rank(n, a, b, c)) as u32;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let count =
                            member(a, b, c) + member(a, b, d) + member(a, c, d) + member(b, c, d);
                        if count % 2 == 1 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The member-triple bitset, lex rank order.
    pub fn delta(&self) -> &Bits {
        &self.delta
    }

    /// Number of member triples.
    pub fn delta_count(&self) -> u32 {
        self.delta.count_ones()
    }

    /// Is {a,b,c} a member? The vertices may come in any order.
    pub fn contains(&self, a: usize, b: usize, c: usize) -> Result<bool> {
        let n = self.n as usize;
        for v in [a, b, c] {
            if v >= n {
                return Err(Error::Vertex { index: v, n });
            }
        }
        if a == b || a == c || b == c {
            return Err(Error::DegenerateTriple);
        }
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
        Ok(self.delta.get(triple_rank(n, x, y, z)))
    }

    /// Member triples (i < j < k), lex order.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        lex_triples(self.n as usize)
            .enumerate()
            .filter(|&(rank, _)| self.delta.get(rank))
            .map(|(_, t)| t)
            .collect()
    }

    /// Sub-two-graph induced on an ordered, duplicate-free subset of at
    /// least 3 vertices: local triple {p,q,r} is a member iff
    /// `{subset[p], subset[q], subset[r]}` is one here.
    pub fn induced(&self, subset: &[usize]) -> Result<TwoGraph> {
        let n = self.n as usize;
        let m = subset.len();
        if m < 3 {
            return Err(Error::SubsetTooSmall(m));
        }
        let mut seen = 0u32;
        for &v in subset {
            if v >= n {
                return Err(Error::Vertex { index: v, n });
            }
            if seen >> v & 1 == 1 {
                return Err(Error::DuplicateVertex);
            }
            seen |= 1 << v;
        }
        let mut delta = Bits::new(binomial(m, 3) as usize);
        for (rank, (p, q, r)) in lex_triples(m).enumerate() {
            if self.contains(subset[p], subset[q], subset[r])? {
                delta.set(rank, true);
            }
        }
        Ok(TwoGraph { n: m as u8, delta })
    }

    /// The unique graph in this two-graph's switching class whose last
    /// vertex is isolated: edge {i,j} iff {i,j,n-1} is a member. Composing
    /// with [`TwoGraph::from_graph`] is the identity, which is the
    /// graph/two-graph bijection in normal form.
    pub fn representative_graph(&self) -> Graph {
        let n = self.n as usize;
        if n < 3 {
            return Graph::empty(n).expect("n validated at construction");
        }
        let mut edges = Vec::new();
        for j in 1..n - 1 {
            for i in 0..j {
                if self.delta.get(triple_rank(n, i, j, n - 1)) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(n, &edges).expect("edges are in range by construction")
    }

    /// The triple set as a single word; only for n <= 8 (C(8,3) = 56 bits).
    pub(crate) fn delta_u64(&self) -> u64 {
        self.delta.as_u64()
    }

    /// Build from a packed word, trusting the caller that it encodes a valid
    /// two-graph (used where the delta came from a graph or the catalog).
    pub(crate) fn from_delta_u64_unchecked(n: usize, delta: u64) -> TwoGraph {
        let t = binomial(n, 3) as usize;
        debug_assert!(t <= 64);
        let tg = TwoGraph {
            n: n as u8,
            delta: Bits::from_u64(t, delta),
        };
        debug_assert!(TwoGraph::is_valid_delta(n, &tg.delta));
        tg
    }

    /// Deliberately break the even-four-subset invariant by dropping the
    /// first member triple. Exists only so negative-control checks can see
    /// a corrupt structure fail validation.
    pub(crate) fn clear_first_triple_for_tests(&mut self) {
        let first = self.delta.ones().next();
        if let Some(t) = first {
            self.delta.flip(t);
        }
    }
}

impl fmt::Debug for TwoGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoGraph(n={}, delta={:?})", self.n, self.triples())
    }
}
