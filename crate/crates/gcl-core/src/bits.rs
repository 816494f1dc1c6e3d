//! Fixed-width bit vectors backing truth tables, extent masks and object sets.

use std::fmt;

const BLOCK_BITS: usize = 64;

/// A bit vector of fixed length. Unused bits of the last block are kept zero,
/// so equality and hashing work on the raw blocks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    len: usize,
    blocks: Vec<u64>,
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Bits {
            len,
            blocks: vec![0; len.div_ceil(BLOCK_BITS)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut b = Bits {
            len,
            blocks: vec![!0u64; len.div_ceil(BLOCK_BITS)],
        };
        b.mask_tail();
        b
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Bits::zeros(len);
        for i in indices {
            b.set(i, true);
        }
        b
    }

    /// Low `len` bits of `value`, bit 0 first.
    pub fn from_u64(value: u64, len: usize) -> Self {
        assert!(len <= BLOCK_BITS, "from_u64 supports at most 64 bits");
        let mut b = Bits::zeros(len);
        if len > 0 {
            b.blocks[0] = if len == BLOCK_BITS {
                value
            } else {
                value & ((1u64 << len) - 1)
            };
        }
        b
    }

    pub fn to_u64(&self) -> u64 {
        assert!(self.len <= BLOCK_BITS, "to_u64 supports at most 64 bits");
        self.blocks.first().copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, index: usize) -> bool {
        assert!(
            index < self.len,
            "bit index {index} out of range {}",
            self.len
        );
        self.blocks[index / BLOCK_BITS] >> (index % BLOCK_BITS) & 1 == 1
    }

    pub fn set(&mut self, index: usize, value: bool) {
        assert!(
            index < self.len,
            "bit index {index} out of range {}",
            self.len
        );
        let mask = 1u64 << (index % BLOCK_BITS);
        if value {
            self.blocks[index / BLOCK_BITS] |= mask;
        } else {
            self.blocks[index / BLOCK_BITS] &= !mask;
        }
    }

    pub fn count_ones(&self) -> u64 {
        self.blocks.iter().map(|b| b.count_ones() as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn and(&self, other: &Bits) -> Bits {
        self.binary(other, |a, b| a & b)
    }

    pub fn or(&self, other: &Bits) -> Bits {
        self.binary(other, |a, b| a | b)
    }

    pub fn xor(&self, other: &Bits) -> Bits {
        self.binary(other, |a, b| a ^ b)
    }

    /// Set difference: bits of `self` not in `other`.
    pub fn minus(&self, other: &Bits) -> Bits {
        self.binary(other, |a, b| a & !b)
    }

    pub fn not(&self) -> Bits {
        let mut out = Bits {
            len: self.len,
            blocks: self.blocks.iter().map(|&b| !b).collect(),
        };
        out.mask_tail();
        out
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        assert_eq!(self.len, other.len, "bit length mismatch");
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let mut rest = block;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let tz = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(bi * BLOCK_BITS + tz)
                }
            })
        })
    }

    fn binary(&self, other: &Bits, op: impl Fn(u64, u64) -> u64) -> Bits {
        assert_eq!(self.len, other.len, "bit length mismatch");
        Bits {
            len: self.len,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    fn mask_tail(&mut self) {
        let rem = self.len % BLOCK_BITS;
        if rem != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
        if self.len == 0 {
            self.blocks.clear();
        }
    }
}

/// Numeric order with bit 0 least significant; lengths compare first.
impl Ord for Bits {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.blocks.iter().rev().cmp(other.blocks.iter().rev()))
    }
}

impl PartialOrd for Bits {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bits[")?;
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        write!(f, "]")
    }
}
