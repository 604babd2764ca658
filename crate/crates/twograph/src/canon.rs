//! Canonical forms for two-graphs on up to 8 vertices.
//!
//! The key of a two-graph is the minimum, over all n! relabelings, of its
//! triple bitset read as an integer (lex triple rank t is bit t, so the
//! highest-rank triple — the one inside the last three vertices — is most
//! significant). Two two-graphs are equivalent iff their keys agree.
//!
//! The minimization walks assignments of vertices to positions n-1 down
//! to 0. With lex triple ranks, the triples inside the last m positions
//! occupy the top C(m,3) bits of every completion, so each partial
//! assignment pins a prefix of the final word and branches that already
//! lose against the incumbent are cut. The worst inputs (empty and full
//! deltas) degenerate to a plain sweep of all n! orders, which at n = 8 is
//! still only 40320 cheap paths.

use crate::comb::{binomial, lex_triples};
use crate::error::Error;
use crate::two_graph::TwoGraph;
use crate::Result;

/// Canonical keys are computed for up to this many vertices. Everything the
/// crate classifies lives at n <= 8; beyond that the n! search would need a
/// different algorithm altogether.
pub const MAX_CANONICAL_VERTICES: usize = 8;

/// Canonical key of a two-graph: the vertex count and the minimal delta
/// word. Ordering is (n, word), which the catalog uses as a tiebreak.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalKey {
    n: u8,
    bits: u64,
}

impl CanonicalKey {
    pub(crate) fn from_parts(n: usize, bits: u64) -> CanonicalKey {
        CanonicalKey { n: n as u8, bits }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The minimal delta word, bit t = lex triple rank t.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Hex form: ceil(C(n,3)/8) bytes, lowest-rank bits in the first byte's
    /// low end. Stable across runs; the catalog and reports embed it.
    pub fn hex(&self) -> String {
        let nbytes = (binomial(self.n as usize, 3) as usize).div_ceil(8);
        let mut s = String::with_capacity(nbytes * 2);
        for b in 0..nbytes {
            s.push_str(&format!("{:02x}", self.bits >> (8 * b) & 0xff));
        }
        s
    }

    /// Inverse of [`hex`](CanonicalKey::hex); `None` when the string does
    /// not decode to a C(n,3)-bit word.
    pub fn from_hex(n: usize, s: &str) -> Option<CanonicalKey> {
        if n == 0 || n > MAX_CANONICAL_VERTICES {
            return None;
        }
        let b = crate::bits::Bits::from_hex(binomial(n, 3) as usize, s)?;
        Some(CanonicalKey {
            n: n as u8,
            bits: b.as_u64(),
        })
    }
}

/// triple_rank(m, p, q, r) for every m <= 8, as a flat lookup. Positions the
/// search touches are always p < q < r < m.
static RANK3_SMALL: [[[[u8; 8]; 8]; 8]; 9] = build_rank3_small();

const fn build_rank3_small() -> [[[[u8; 8]; 8]; 8]; 9] {
    let mut table = [[[[0xffu8; 8]; 8]; 8]; 9];
    let mut m = 3;
    while m <= 8 {
        let mut rank = 0u8;
        let mut p = 0;
        while p < m {
            let mut q = p + 1;
            while q < m {
                let mut r = q + 1;
                while r < m {
                    table[m][p][q][r] = rank;
                    rank += 1;
                    r += 1;
                }
                q += 1;
            }
            p += 1;
        }
        m += 1;
    }
    table
}

#[inline(always)]
fn sort3(a: usize, b: usize, c: usize) -> (usize, usize, usize) {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    let (b, c) = if b < c { (b, c) } else { (c, b) };
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    (a, b, c)
}

/// Word spanned by the placed suffix: `order[d]` is the vertex at position
/// n-1-d, so local position p (inside the m placed) holds `order[m-1-p]`,
/// and the bit layout is exactly the top C(m,3) ranks shifted down.
#[inline]
fn partial_word(m: usize, cube: &[bool; 512], order: &[u8; 8]) -> u64 {
    let mut word = 0u64;
    for p in 0..m {
        let wp = order[m - 1 - p] as usize;
        for q in p + 1..m {
            let wq = order[m - 1 - q] as usize;
            for r in q + 1..m {
                let wr = order[m - 1 - r] as usize;
                let (a, b, c) = sort3(wp, wq, wr);
                if cube[a << 6 | b << 3 | c] {
                    word |= 1 << RANK3_SMALL[m][p][q][r];
                }
            }
        }
    }
    word
}

#[allow(clippy::too_many_arguments)] // recursion state, deliberately explicit
fn dfs(
    n: usize,
    t: u32,
    cube: &[bool; 512],
    cands: &[u8],
    depth: usize,
    used: u32,
    order: &mut [u8; 8],
    best: &mut u64,
) {
    if depth >= 3 {
        let word = partial_word(depth, cube, order);
        let incumbent = *best >> (t - binomial(depth, 3) as u32);
        if word > incumbent {
            return;
        }
        if depth == n {
            *best = word;
            return;
        }
    }
    for &c in cands {
        if used >> c & 1 == 0 {
            order[depth] = c;
            dfs(n, t, cube, cands, depth + 1, used | 1 << c, order, best);
        }
    }
}

/// Minimal delta word over all relabelings, for a packed delta on n <= 8
/// vertices. This is the scan-facing entry point; callers memoize on the
/// input word.
pub(crate) fn canonical_bits(n: usize, delta: u64) -> u64 {
    debug_assert!(n <= MAX_CANONICAL_VERTICES);
    let t = binomial(n, 3) as u32;
    if t == 0 {
        return 0;
    }
    let mut cube = [false; 512];
    let mut deg = [0u32; 8];
    for (rank, (i, j, k)) in lex_triples(n).enumerate() {
        if delta >> rank & 1 == 1 {
            cube[i << 6 | j << 3 | k] = true;
            deg[i] += 1;
            deg[j] += 1;
            deg[k] += 1;
        }
    }
    // Low-degree vertices late in the vertex order tend to clear the most
    // significant bits, so offer them first and let pruning bite early.
    let mut cands = [0u8; 8];
    for (slot, v) in (0..n as u8).enumerate() {
        cands[slot] = v;
    }
    cands[..n].sort_by_key(|&v| (deg[v as usize], v));
    let mut order = [0u8; 8];
    let mut best = delta;
    dfs(n, t, &cube, &cands[..n], 0, 0, &mut order, &mut best);
    best
}

/// Canonical key of a two-graph on up to 8 vertices.
pub fn canonical_key(tg: &TwoGraph) -> Result<CanonicalKey> {
    let n = tg.n();
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::TooLargeForCanonical(n));
    }
    Ok(CanonicalKey {
        n: n as u8,
        bits: canonical_bits(n, tg.delta_u64()),
    })
}

/// Are two two-graphs related by a vertex bijection? Decided through
/// canonical keys, after the cheap screens (different vertex or triple
/// counts can never match).
pub fn equivalent(a: &TwoGraph, b: &TwoGraph) -> Result<bool> {
    if a.n() != b.n() || a.delta_count() != b.delta_count() {
        return Ok(false);
    }
    Ok(canonical_key(a)? == canonical_key(b)?)
}
