use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// A partition of a ground set into non-empty, pairwise disjoint blocks.
///
/// Blocks are kept sorted by their smallest member, so two partitions with
/// the same blocks compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    ground: VertexSet,
    blocks: Vec<VertexSet>,
}

impl Partition {
    pub fn new(ground: VertexSet, blocks: Vec<VertexSet>) -> Result<Self> {
        let mut covered = VertexSet::empty(ground.capacity());
        for block in &blocks {
            if block.capacity() != ground.capacity() {
                return Err(Error::InvalidPartition("block over a different host".into()));
            }
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if block.intersects(&covered) {
                return Err(Error::InvalidPartition(format!("blocks overlap at {:?}", block.intersection(&covered))));
            }
            covered.union_with(block);
        }
        if covered != ground {
            return Err(Error::InvalidPartition("blocks do not cover the ground set exactly".into()));
        }
        Ok(Self::from_canonical_blocks(ground, blocks))
    }

    pub(crate) fn from_canonical_blocks(ground: VertexSet, mut blocks: Vec<VertexSet>) -> Self {
        blocks.sort_by_key(|b| b.first());
        Self { ground, blocks }
    }

    pub fn singletons(ground: VertexSet) -> Self {
        let n = ground.capacity();
        let blocks = ground.iter().map(|v| VertexSet::singleton(n, v)).collect();
        Self { ground, blocks }
    }

    pub fn ground(&self) -> &VertexSet {
        &self.ground
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(v))
    }

    /// `self ⊑ other`: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> Result<bool> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch);
        }
        Ok(self.blocks.iter().all(|a| other.blocks.iter().any(|b| a.is_subset(b))))
    }

    /// Replaces every block contained in `union` by `union` itself. `union`
    /// must be a union of blocks.
    pub fn merge(&self, union: &VertexSet) -> Result<Partition> {
        if union.is_empty() {
            return Ok(self.clone());
        }
        let mut blocks = Vec::with_capacity(self.blocks.len());
        let mut absorbed = VertexSet::empty(self.ground.capacity());
        for block in &self.blocks {
            if block.is_subset(union) {
                absorbed.union_with(block);
            } else if block.intersects(union) {
                return Err(Error::InvalidPartition("merge target cuts through a block".into()));
            } else {
                blocks.push(block.clone());
            }
        }
        if &absorbed != union {
            return Err(Error::InvalidPartition("merge target leaves the ground set".into()));
        }
        blocks.push(absorbed);
        Ok(Self::from_canonical_blocks(self.ground.clone(), blocks))
    }
}

/// `a ⊑ b`; errors when the partitions have different ground sets.
pub fn refines(a: &Partition, b: &Partition) -> Result<bool> {
    a.refines(b)
}
