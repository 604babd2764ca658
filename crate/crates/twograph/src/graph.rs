//! Graphs on up to 28 vertices as triangular edge bitsets, together with the
//! Seidel operations that the rest of the crate is built on: switching,
//! relabeling, triple parity, and the {0, -1, +1} Seidel matrix.

use crate::bits::Bits;
use crate::comb::{binomial, pair_rank, MAX_VERTICES};
use crate::error::Error;
use crate::Result;
use std::fmt;

/// Parity of the edge count inside a vertex triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    #[inline]
    pub fn is_odd(self) -> bool {
        matches!(self, Parity::Odd)
    }

    #[inline]
    pub(crate) fn of(count: u32) -> Parity {
        if count % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// Simple undirected graph on vertices 0..n, n <= 28. Edges live in a
/// triangular bitset indexed by colex pair rank, so the whole graph is a few
/// words and all the operations below are branch-light bit work.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    edges: Bits,
}

impl Graph {
    /// Graph with the given edges. Duplicate pairs collapse; a pair out of
    /// range or a self-loop is an error, as is n outside 1..=28.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(i, j) in edges {
            g.check_vertex(i)?;
            g.check_vertex(j)?;
            if i == j {
                return Err(Error::SelfLoop(i));
            }
            g.edges.set(pair_rank(i, j), true);
        }
        Ok(g)
    }

    /// Edgeless graph on n vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph {
            n: n as u8,
            edges: Bits::new(binomial(n, 2) as usize),
        })
    }

    /// Graph whose edge bitset is the low bits of `mask` (colex pair rank
    /// order). Only usable while C(n,2) <= 64, i.e. n <= 11; the class
    /// enumeration uses it to sweep all graphs with the last vertex isolated.
    pub(crate) fn from_edge_mask(n: usize, mask: u64) -> Graph {
        let pairs = binomial(n, 2) as usize;
        debug_assert!(pairs <= 64);
        Graph {
            n: n as u8,
            edges: Bits::from_u64(pairs, mask),
        }
    }

    #[inline]
    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n as usize {
            return Err(Error::Vertex {
                index: v,
                n: self.n as usize,
            });
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n as usize && j < self.n as usize && i != j);
        self.edges.get(pair_rank(i, j))
    }

    pub fn edge_count(&self) -> u32 {
        self.edges.count_ones()
    }

    /// Edges as (i, j) with i < j, in colex rank order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count() as usize);
        for j in 1..self.n as usize {
            for i in 0..j {
                if self.edges.get(pair_rank(i, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Seidel switch at the vertex set `s`: every edge across the cut
    /// (s, complement) flips, everything else stays. Switching at the empty
    /// set or the full vertex set is the identity; switching is an involution
    /// and switches at s and at its complement agree.
    pub fn switch(&self, s: &[usize]) -> Result<Graph> {
        let mut in_s = 0u32;
        for &v in s {
            self.check_vertex(v)?;
            in_s |= 1 << v;
        }
        let mut out = self.clone();
        for j in 1..self.n as usize {
            for i in 0..j {
                if (in_s >> i ^ in_s >> j) & 1 == 1 {
                    out.edges.flip(pair_rank(i, j));
                }
            }
        }
        Ok(out)
    }

    /// Relabeled copy: vertex v of `self` becomes `perm[v]`. `perm` must be a
    /// permutation of 0..n.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n as usize;
        let mut seen = 0u32;
        if perm.len() != n {
            return Err(Error::NotAPermutation(n));
        }
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::NotAPermutation(n));
            }
            seen |= 1 << p;
        }
        let mut out = Graph::empty(n)?;
        for j in 1..n {
            for i in 0..j {
                if self.edges.get(pair_rank(i, j)) {
                    out.edges.set(pair_rank(perm[i], perm[j]), true);
                }
            }
        }
        Ok(out)
    }

    /// Parity of the number of edges among the three vertices. Odd triples
    /// are exactly the members of this graph's two-graph, and the parity is
    /// invariant under switching.
    pub fn triple_parity(&self, a: usize, b: usize, c: usize) -> Result<Parity> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        self.check_vertex(c)?;
        if a == b || a == c || b == c {
            return Err(Error::DegenerateTriple);
        }
        let count =
            self.has_edge(a, b) as u32 + self.has_edge(a, c) as u32 + self.has_edge(b, c) as u32;
        Ok(Parity::of(count))
    }

    /// The Seidel matrix: 0 on the diagonal, -1 between adjacent vertices,
    /// +1 between non-adjacent ones. Switching at s conjugates it by the
    /// diagonal sign matrix of s.
    pub fn seidel_matrix(&self) -> SeidelMatrix {
        let n = self.n as usize;
        let mut entries = vec![0i8; n * n];
        for j in 0..n {
            for i in 0..n {
                if i != j {
                    entries[i * n + j] = if self.has_edge(i, j) { -1 } else { 1 };
                }
            }
        }
        SeidelMatrix { n, entries }
    }

    /// Graphviz source for the graph, vertices named v1..vn. Isolated
    /// vertices are declared so they render too.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph \"{name}\" {{\n");
        for v in 0..self.n as usize {
            s.push_str(&format!("  v{};\n", v + 1));
        }
        for (i, j) in self.edges() {
            s.push_str(&format!("  v{} -- v{};\n", i + 1, j + 1));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Symmetric {0, -1, +1} matrix view of a graph. Rows and columns follow the
/// graph's vertex order.
#[derive(Clone, PartialEq, Eq)]
pub struct SeidelMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl SeidelMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }
}

impl fmt::Debug for SeidelMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SeidelMatrix {}x{}:", self.n, self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{:3}", self.entry(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn construction_and_errors() {
        let g = Graph::new(4, &[(0, 1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 2, "duplicate pair collapses");
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0) && g.has_edge(2, 3));
        assert!(!g.has_edge(0, 2));
        assert_eq!(Graph::new(0, &[]), Err(Error::VertexCount(0)));
        assert_eq!(Graph::new(29, &[]), Err(Error::VertexCount(29)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::Vertex { index: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn switch_examples() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.switch(&[]).unwrap(), g);
        assert_eq!(g.switch(&[0, 1, 2, 3]).unwrap(), g);
        // Switching the empty triangle at one vertex joins it to the rest.
        let e3 = Graph::empty(3).unwrap();
        let star = e3.switch(&[0]).unwrap();
        assert_eq!(star.edges(), vec![(0, 1), (0, 2)]);
        assert_eq!(g.switch(&[4]), Err(Error::Vertex { index: 4, n: 4 }));
    }

    #[test]
    fn relabel_examples() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let r = g.relabel(&[2, 1, 0]).unwrap();
        assert_eq!(r.edges(), vec![(1, 2)]);
        assert_eq!(g.relabel(&[0, 0, 1]), Err(Error::NotAPermutation(3)));
        assert_eq!(g.relabel(&[0, 1]), Err(Error::NotAPermutation(3)));
        assert_eq!(g.relabel(&[0, 1, 3]), Err(Error::NotAPermutation(3)));
    }

    #[test]
    fn triple_parity_examples() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.triple_parity(0, 1, 2).unwrap(), Parity::Odd);
        assert_eq!(g.triple_parity(0, 1, 3).unwrap(), Parity::Odd);
        assert_eq!(g.triple_parity(0, 2, 3).unwrap(), Parity::Odd);
        assert_eq!(g.triple_parity(1, 2, 3).unwrap(), Parity::Odd);
        let h = Graph::new(4, &[(0, 1)]).unwrap();
        assert_eq!(h.triple_parity(2, 1, 0).unwrap(), Parity::Odd);
        assert_eq!(h.triple_parity(1, 2, 3).unwrap(), Parity::Even);
        assert_eq!(h.triple_parity(1, 1, 2), Err(Error::DegenerateTriple));
    }

    #[test]
    fn seidel_matrix_signs() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let m = g.seidel_matrix();
        assert_eq!(m.entry(0, 0), 0);
        assert_eq!(m.entry(0, 1), -1);
        assert_eq!(m.entry(1, 0), -1);
        assert_eq!(m.entry(0, 2), 1);
    }

    #[test]
    fn dot_output_shape() {
        let g = Graph::new(3, &[(0, 2)]).unwrap();
        let dot = g.to_dot("demo");
        assert_eq!(
            dot,
            "graph \"demo\" {\n  v1;\n  v2;\n  v3;\n  v1 -- v3;\n}\n"
        );
    }

    /// Strategy: a random graph on 1..=12 vertices with each edge tossed
    /// independently.
    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=12).prop_flat_map(|n| {
            let pairs = binomial(n, 2) as usize;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |flags| {
                let mut g = Graph::empty(n).unwrap();
                for (r, &on) in flags.iter().enumerate() {
                    if on {
                        g.edges.set(r, true);
                    }
                }
                g
            })
        })
    }

    fn arb_vertex_set(n: usize) -> impl Strategy<Value = Vec<usize>> {
        proptest::collection::vec(0..n, 0..=n)
    }

    proptest! {
        #[test]
        fn switch_is_involution((g, s) in arb_graph().prop_flat_map(|g| {
            let n = g.n();
            (Just(g), arb_vertex_set(n))
        })) {
            let once = g.switch(&s).unwrap();
            prop_assert_eq!(once.switch(&s).unwrap(), g);
        }

        #[test]
        fn switch_at_complement_agrees((g, s) in arb_graph().prop_flat_map(|g| {
            let n = g.n();
            (Just(g), arb_vertex_set(n))
        })) {
            let comp: Vec<usize> = (0..g.n()).filter(|v| !s.contains(v)).collect();
            prop_assert_eq!(g.switch(&s).unwrap(), g.switch(&comp).unwrap());
        }

        #[test]
        fn switch_composes_by_symmetric_difference((g, s, t) in arb_graph().prop_flat_map(|g| {
            let n = g.n();
            (Just(g), arb_vertex_set(n), arb_vertex_set(n))
        })) {
            let sym: Vec<usize> = (0..g.n())
                .filter(|v| s.contains(v) != t.contains(v))
                .collect();
            let two_steps = g.switch(&s).unwrap().switch(&t).unwrap();
            prop_assert_eq!(two_steps, g.switch(&sym).unwrap());
        }

        #[test]
        fn triple_parity_survives_switching((g, s) in arb_graph().prop_flat_map(|g| {
            let n = g.n();
            (Just(g), arb_vertex_set(n))
        })) {
            prop_assume!(g.n() >= 3);
            let h = g.switch(&s).unwrap();
            for a in 0..g.n() {
                for b in a + 1..g.n() {
                    for c in b + 1..g.n() {
                        prop_assert_eq!(
                            g.triple_parity(a, b, c).unwrap(),
                            h.triple_parity(a, b, c).unwrap()
                        );
                    }
                }
            }
        }

        #[test]
        fn relabel_commutes_with_switching((g, s, perm) in arb_graph().prop_flat_map(|g| {
            let n = g.n();
            (Just(g), arb_vertex_set(n), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        })) {
            let mapped_s: Vec<usize> = s.iter().map(|&v| perm[v]).collect();
            let a = g.switch(&s).unwrap().relabel(&perm).unwrap();
            let b = g.relabel(&perm).unwrap().switch(&mapped_s).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn seidel_conjugation_matches_switching((g, s) in arb_graph().prop_flat_map(|g| {
            let n = g.n();
            (Just(g), arb_vertex_set(n))
        })) {
            let m = g.seidel_matrix();
            let sw = g.switch(&s).unwrap().seidel_matrix();
            let sign = |v: usize| if s.contains(&v) { -1i8 } else { 1 };
            for i in 0..g.n() {
                for j in 0..g.n() {
                    prop_assert_eq!(sw.entry(i, j), sign(i) * m.entry(i, j) * sign(j));
                }
            }
        }
    }
}
