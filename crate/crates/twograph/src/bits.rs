//! A fixed-length bitset backed by u64 words. Used for triangular edge sets
//! (up to C(28,2) = 378 bits) and triple sets (up to C(28,3) = 3276 bits).

use std::fmt;

/// Fixed-length bitset. Bits past `len` are kept zero so that `Eq` and
/// `Hash` see only the payload.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    /// All-zero bitset of the given length.
    pub fn new(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// Bitset of length `len <= 64` holding `value` (bit i of the value is
    /// bit i of the set). Panics if the value has bits past `len`.
    pub fn from_u64(len: usize, value: u64) -> Self {
        assert!(len <= 64, "from_u64 needs len <= 64, got {len}");
        assert!(
            len == 64 || value >> len == 0,
            "value 0x{value:x} wider than {len} bits"
        );
        let mut b = Bits::new(len);
        if len > 0 {
            b.words[0] = value;
        }
        b
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline(always)]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline(always)]
    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len, "bit {i} out of range {}", self.len);
        if v {
            self.words[i >> 6] |= 1 << (i & 63);
        } else {
            self.words[i >> 6] &= !(1 << (i & 63));
        }
    }

    #[inline(always)]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i >> 6] ^= 1 << (i & 63);
    }

    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// The whole set as one word; only valid when `len <= 64`.
    pub fn as_u64(&self) -> u64 {
        debug_assert!(self.len <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    /// Hex encoding: ceil(len/8) bytes, byte b holding bits 8b..8b+8 with the
    /// lowest-index bit least significant, two lowercase digits per byte.
    pub fn hex(&self) -> String {
        let nbytes = self.len.div_ceil(8);
        let mut s = String::with_capacity(nbytes * 2);
        for b in 0..nbytes {
            let byte = (self.words[b >> 3] >> ((b & 7) * 8)) & 0xff;
            s.push_str(&format!("{byte:02x}"));
        }
        s
    }

    /// Inverse of [`hex`](Bits::hex) for a set of known length.
    pub fn from_hex(len: usize, s: &str) -> Option<Bits> {
        let nbytes = len.div_ceil(8);
        if s.len() != nbytes * 2 || !s.is_ascii() {
            return None;
        }
        let mut bits = Bits::new(len);
        for b in 0..nbytes {
            let byte = u8::from_str_radix(&s[b * 2..b * 2 + 2], 16).ok()?;
            bits.words[b >> 3] |= (byte as u64) << ((b & 7) * 8);
        }
        // Reject payload past the declared length.
        for (wi, &w) in bits.words.iter().enumerate() {
            let hi = (wi + 1) * 64;
            if hi > len {
                let live = len.saturating_sub(wi * 64);
                if live < 64 && w >> live != 0 {
                    return None;
                }
            }
        }
        Some(bits)
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bits[{}; {}]", self.len, self.hex())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_flip_count() {
        let mut b = Bits::new(130);
        b.set(0, true);
        b.set(64, true);
        b.set(129, true);
        assert!(b.get(0) && b.get(64) && b.get(129) && !b.get(1));
        assert_eq!(b.count_ones(), 3);
        b.flip(64);
        assert!(!b.get(64));
        assert_eq!(b.ones().collect::<Vec<_>>(), vec![0, 129]);
    }

    #[test]
    fn hex_round_trip() {
        let mut b = Bits::new(10);
        b.set(0, true);
        b.set(9, true);
        assert_eq!(b.hex(), "0102");
        assert_eq!(Bits::from_hex(10, "0102"), Some(b.clone()));
        assert_eq!(Bits::from_hex(10, "01"), None, "wrong width");
        assert_eq!(Bits::from_hex(10, "01ff"), None, "payload past len");
        let full = Bits::from_u64(10, 0x3ff);
        assert_eq!(full.hex(), "ff03");
        assert_eq!(Bits::from_hex(10, "ff03"), Some(full));
    }

    #[test]
    fn from_u64_round_trip() {
        let b = Bits::from_u64(56, 0x00_ff00_ff00_ff00);
        assert_eq!(b.as_u64(), 0x00_ff00_ff00_ff00);
        assert_eq!(b.count_ones(), 24);
        let empty = Bits::from_u64(0, 0);
        assert_eq!(empty.as_u64(), 0);
        assert_eq!(empty.hex(), "");
    }

    #[test]
    #[should_panic]
    fn from_u64_rejects_wide_values() {
        let _ = Bits::from_u64(3, 0b1000);
    }
}
