use alloc::vec::Vec;

use sha3::{Digest as _, Sha3_256};

use super::{CommitError, Digest};

const LEAF_PREFIX: u8 = 0x00;
const NODE_PREFIX: u8 = 0x01;

pub fn hash_leaf(data: &[u8]) -> Digest {
    let mut h = Sha3_256::new();
    h.update([LEAF_PREFIX]);
    h.update(data);
    h.finalize().into()
}

pub fn hash_node(left: &Digest, right: &Digest) -> Digest {
    let mut h = Sha3_256::new();
    h.update([NODE_PREFIX]);
    h.update(left);
    h.update(right);
    h.finalize().into()
}

/// Binary SHA3-256 Merkle tree with `0x00`/`0x01` leaf/node prefixes.
///
/// The leaf-hash level is padded to a power of two by repeating the last
/// leaf hash. `levels[0]` holds the padded leaf hashes and the last level
/// holds only the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MerkleTree {
    leaf_count: usize,
    levels: Vec<Vec<Digest>>,
}

impl MerkleTree {
    pub fn commit<L: AsRef<[u8]>>(leaves: &[L]) -> Result<Self, CommitError> {
        if leaves.is_empty() {
            return Err(CommitError::EmptyTree);
        }
        let mut level: Vec<Digest> = leaves.iter().map(|l| hash_leaf(l.as_ref())).collect();
        let padded = level.len().next_power_of_two();
        let last = *level.last().expect("non-empty");
        level.resize(padded, last);

        let mut levels = Vec::with_capacity(padded.trailing_zeros() as usize + 1);
        while level.len() > 1 {
            let next = level
                .chunks_exact(2)
                .map(|pair| hash_node(&pair[0], &pair[1]))
                .collect();
            levels.push(core::mem::replace(&mut level, next));
        }
        levels.push(level);
        Ok(MerkleTree {
            leaf_count: leaves.len(),
            levels,
        })
    }

    pub fn root(&self) -> Digest {
        self.levels.last().expect("at least one level")[0]
    }

    /// Number of hashing levels above the leaves; equals every path length.
    pub fn height(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_count
    }

    pub fn levels(&self) -> &[Vec<Digest>] {
        &self.levels
    }

    pub fn open(&self, index: usize) -> Result<MerklePath, CommitError> {
        if index >= self.leaf_count {
            return Err(CommitError::IndexOutOfRange {
                index,
                len: self.leaf_count,
            });
        }
        let mut siblings = Vec::with_capacity(self.height());
        let mut i = index;
        for level in &self.levels[..self.height()] {
            siblings.push(level[i ^ 1]);
            i >>= 1;
        }
        Ok(MerklePath {
            leaf_index: index,
            siblings,
        })
    }
}

/// Authentication path, siblings ordered from the leaf level upwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MerklePath {
    pub leaf_index: usize,
    pub siblings: Vec<Digest>,
}

impl MerklePath {
    pub fn len(&self) -> usize {
        self.siblings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.siblings.is_empty()
    }

    /// Root obtained by hashing `leaf` up along this path.
    pub fn compute_root(&self, leaf: &[u8]) -> Digest {
        let mut acc = hash_leaf(leaf);
        let mut i = self.leaf_index;
        for sib in &self.siblings {
            acc = if i & 1 == 0 {
                hash_node(&acc, sib)
            } else {
                hash_node(sib, &acc)
            };
            i >>= 1;
        }
        acc
    }

    pub fn verify(&self, root: &Digest, leaf: &[u8]) -> bool {
        // an index with bits above the path height cannot come from `open`
        if self.siblings.len() < usize::BITS as usize && self.leaf_index >> self.siblings.len() != 0
        {
            return false;
        }
        &self.compute_root(leaf) == root
    }

    /// `index (u32, big-endian) || siblings`.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.encoded_len());
        self.write_to(&mut out);
        out
    }

    pub fn encoded_len(&self) -> usize {
        4 + 32 * self.siblings.len()
    }

    pub fn write_to(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&(self.leaf_index as u32).to_be_bytes());
        for s in &self.siblings {
            out.extend_from_slice(s);
        }
    }

    /// Parses a path of known `height` from the front of `bytes`, returning
    /// the path and the number of bytes consumed.
    pub fn from_bytes(bytes: &[u8], height: usize) -> Result<(Self, usize), CommitError> {
        let need = 4 + 32 * height;
        if bytes.len() < need {
            return Err(CommitError::Truncated {
                needed: need,
                available: bytes.len(),
            });
        }
        let leaf_index = u32::from_be_bytes(bytes[..4].try_into().expect("4 bytes")) as usize;
        let siblings = bytes[4..need]
            .chunks_exact(32)
            .map(|c| c.try_into().expect("32 bytes"))
            .collect();
        Ok((
            MerklePath {
                leaf_index,
                siblings,
            },
            need,
        ))
    }
}

/// Free-function form of [`MerklePath::verify`].
pub fn merkle_verify(root: &Digest, leaf: &[u8], path: &MerklePath) -> bool {
    path.verify(root, leaf)
}
