//! Exact combinatorics shared by the whole crate: binomial coefficients, the
//! pair and triple rank encodings, and colex iteration over k-subset masks.

/// Largest vertex count any graph or two-graph in this crate supports.
/// 28 is the number of bitangents, and nothing here needs more.
pub const MAX_VERTICES: usize = 28;

/// Binomial coefficient C(n, k). Exact for every size used in this crate
/// (n <= 32); the running product stays divisible at each step.
pub const fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = if k > n - k { n - k } else { k };
    let mut acc = 1u64;
    let mut i = 0;
    while i < k {
        acc = acc * ((n - k + i + 1) as u64) / ((i + 1) as u64);
        i += 1;
    }
    acc
}

/// Colex rank of the unordered pair {i, j}: C(hi, 2) + lo. Pairs inside
/// {0..m} occupy ranks 0..C(m,2) for every m, so the edge bits of a graph
/// whose last vertices are isolated form a contiguous low block.
#[inline(always)]
pub const fn pair_rank(i: usize, j: usize) -> usize {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    hi * (hi - 1) / 2 + lo
}

/// Lexicographic rank of the triple i < j < k among all triples of {0..n}.
/// Triples inside the last m vertices occupy the top C(m,3) ranks, which is
/// what the canonical-form search in `canon` leans on.
#[inline]
pub const fn triple_rank(n: usize, i: usize, j: usize, k: usize) -> usize {
    // Triples before (i,j,k) in lex order: all that start below i, all that
    // start at i with middle below j, then (i,j,*) with last below k.
    (binomial(n, 3) - binomial(n - i, 3) + binomial(n - 1 - i, 2) - binomial(n - j, 2)) as usize + k
        - j
        - 1
}

/// All triples i < j < k of {0..n} in lexicographic order. The position in
/// the stream equals [`triple_rank`].
pub fn lex_triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| ((i + 1)..n).flat_map(move |j| ((j + 1)..n).map(move |k| (i, j, k))))
}

/// Next k-subset mask in colex order (Gosper's hack). Numeric order on
/// indicator masks is colex order on the subsets they encode.
#[inline(always)]
pub fn next_subset(mask: u32) -> u32 {
    debug_assert!(mask != 0);
    let c = mask & mask.wrapping_neg();
    let r = mask + c;
    r | (((mask ^ r) >> 2) / c)
}

/// Colex rank of a subset mask: sum of C(element_i, i+1) over ascending
/// elements.
pub fn subset_rank(mask: u32) -> u64 {
    let mut rank = 0u64;
    let mut m = mask;
    let mut slot = 1usize;
    while m != 0 {
        rank += binomial(m.trailing_zeros() as usize, slot);
        slot += 1;
        m &= m - 1;
    }
    rank
}

/// Inverse of [`subset_rank`] for k-subsets: the mask at the given colex
/// rank.
pub fn subset_unrank(rank: u64, k: usize) -> u32 {
    let mut r = rank;
    let mut mask = 0u32;
    for slot in (1..=k).rev() {
        let mut c = slot - 1;
        while binomial(c + 1, slot) <= r {
            c += 1;
        }
        mask |= 1 << c;
        r -= binomial(c, slot);
    }
    debug_assert_eq!(r, 0, "rank out of range for k={k}");
    mask
}

/// Decode a subset mask into `out` (ascending); returns the element count.
#[inline]
pub fn subset_elements(mask: u32, out: &mut [usize]) -> usize {
    let mut m = mask;
    let mut c = 0;
    while m != 0 {
        out[c] = m.trailing_zeros() as usize;
        c += 1;
        m &= m - 1;
    }
    c
}
