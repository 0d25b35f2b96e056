//! Recognizing Boolean lattices and addressing their elements as subsets.

use std::sync::{Arc, OnceLock};

use crate::birkhoff::{birkhoff_embed, BirkhoffEmbedding};
use crate::error::{Error, Result};
use crate::lattice::{Lattice, MAX_BOOLEAN_N};

/// Identifies a lattice with `P(n)` through its Birkhoff embedding. A
/// distributive lattice is Boolean exactly when it has `2^n` elements for
/// `n` join-irreducibles.
#[derive(Clone, Debug)]
pub struct BooleanView {
    n: usize,
    mask: Vec<u64>,
    element: Vec<usize>,
}

impl BooleanView {
    pub fn of(l: &Lattice) -> Result<Self> {
        let emb = birkhoff_embed(l).map_err(|_| Error::NotBoolean)?;
        Self::from_embedding(l, &emb)
    }

    pub fn from_embedding(l: &Lattice, emb: &BirkhoffEmbedding) -> Result<Self> {
        let n = emb.n();
        if n >= 32 || l.len() != 1 << n {
            return Err(Error::NotBoolean);
        }
        let mask: Vec<u64> = l.elements().map(|a| emb.mask(a)).collect();
        let mut element = vec![usize::MAX; 1 << n];
        for (a, &m) in mask.iter().enumerate() {
            element[m as usize] = a;
        }
        Ok(BooleanView { n, mask, element })
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full_mask(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn mask(&self, x: usize) -> u64 {
        self.mask[x]
    }

    pub fn element(&self, mask: u64) -> usize {
        self.element[mask as usize]
    }

    pub fn complement(&self, x: usize) -> usize {
        self.element(!self.mask[x] & self.full_mask())
    }

    pub fn size(&self, x: usize) -> usize {
        self.mask[x].count_ones() as usize
    }
}

/// Shared catalog `P(n)` with its subset view.
pub fn shared_boolean(n: usize) -> Result<(Arc<Lattice>, Arc<BooleanView>)> {
    type Slot = OnceLock<(Arc<Lattice>, Arc<BooleanView>)>;
    static CACHE: [Slot; MAX_BOOLEAN_N + 1] = [const { OnceLock::new() }; MAX_BOOLEAN_N + 1];
    let slot = CACHE.get(n).ok_or_else(|| {
        Error::Param(format!("boolean lattice size n={n} exceeds {MAX_BOOLEAN_N}"))
    })?;
    if let Some(v) = slot.get() {
        return Ok(v.clone());
    }
    let l = Arc::new(crate::lattice::boolean(n)?);
    let view = Arc::new(BooleanView::of(&l)?);
    Ok(slot.get_or_init(|| (l, view)).clone())
}
