//! Non-negative exact weight functions on a lattice, quadruples of them, and
//! element selections.

use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::rational::Rational;

/// A map from the elements of a lattice to non-negative rationals.
#[derive(Clone, Debug)]
pub struct WeightFunction {
    carrier: Arc<Lattice>,
    values: Vec<Rational>,
}

impl PartialEq for WeightFunction {
    fn eq(&self, other: &Self) -> bool {
        same_carrier(&self.carrier, &other.carrier) && self.values == other.values
    }
}

pub(crate) fn same_carrier(a: &Arc<Lattice>, b: &Arc<Lattice>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl WeightFunction {
    /// Values are given in element order.
    pub fn new(carrier: Arc<Lattice>, values: Vec<Rational>) -> Result<Self> {
        if values.len() != carrier.len() {
            return Err(Error::WeightCount {
                expected: carrier.len(),
                got: values.len(),
            });
        }
        if let Some(x) = values.iter().position(Signed::is_negative) {
            return Err(Error::NegativeWeight {
                element: carrier.name(x).to_string(),
                value: values[x].to_string(),
            });
        }
        Ok(WeightFunction { carrier, values })
    }

    pub fn from_fn(carrier: Arc<Lattice>, f: impl FnMut(usize) -> Rational) -> Result<Self> {
        let values = carrier.elements().map(f).collect();
        Self::new(carrier, values)
    }

    /// Small-integer values in element order; handy in tests.
    pub fn from_ints(carrier: Arc<Lattice>, values: &[i64]) -> Result<Self> {
        Self::new(carrier, values.iter().map(|&v| crate::rational::int(v)).collect())
    }

    pub fn constant(carrier: Arc<Lattice>, c: Rational) -> Result<Self> {
        let values = vec![c; carrier.len()];
        Self::new(carrier, values)
    }

    pub fn zero(carrier: Arc<Lattice>) -> Self {
        let values = vec![Rational::zero(); carrier.len()];
        WeightFunction { carrier, values }
    }

    pub fn carrier(&self) -> &Arc<Lattice> {
        &self.carrier
    }

    pub fn value(&self, x: usize) -> &Rational {
        &self.values[x]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Sum of the weights of the selected elements.
    pub fn total(&self, s: &FamilySelection) -> Rational {
        s.iter().map(|x| &self.values[x]).sum()
    }

    /// Pointwise product.
    pub fn product(&self, other: &WeightFunction) -> Result<WeightFunction> {
        if !same_carrier(&self.carrier, &other.carrier) {
            return Err(Error::CarrierMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .collect();
        Ok(WeightFunction {
            carrier: self.carrier.clone(),
            values,
        })
    }
}

/// Four weight functions `(α, β, γ, δ)` on one carrier.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightQuadruple {
    pub alpha: WeightFunction,
    pub beta: WeightFunction,
    pub gamma: WeightFunction,
    pub delta: WeightFunction,
}

impl WeightQuadruple {
    pub fn new(
        alpha: WeightFunction,
        beta: WeightFunction,
        gamma: WeightFunction,
        delta: WeightFunction,
    ) -> Result<Self> {
        let c = alpha.carrier();
        if [&beta, &gamma, &delta]
            .iter()
            .any(|w| !same_carrier(c, w.carrier()))
        {
            return Err(Error::CarrierMismatch);
        }
        Ok(WeightQuadruple {
            alpha,
            beta,
            gamma,
            delta,
        })
    }

    pub fn from_ints(carrier: &Arc<Lattice>, rows: [&[i64]; 4]) -> Result<Self> {
        let [a, b, c, d] = rows.map(|r| WeightFunction::from_ints(carrier.clone(), r));
        Self::new(a?, b?, c?, d?)
    }

    pub fn carrier(&self) -> &Arc<Lattice> {
        self.alpha.carrier()
    }

    pub fn functions(&self) -> [&WeightFunction; 4] {
        [&self.alpha, &self.beta, &self.gamma, &self.delta]
    }
}

/// A set of elements of one lattice, kept sorted by element index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FamilySelection {
    members: Vec<usize>,
}

impl FamilySelection {
    pub fn new(carrier: &Lattice, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        if let Some(&x) = members.iter().find(|&&x| x >= carrier.len()) {
            return Err(Error::ElementOutOfRange(x));
        }
        members.sort_unstable();
        members.dedup();
        Ok(FamilySelection { members })
    }

    pub fn all(carrier: &Lattice) -> Self {
        FamilySelection {
            members: carrier.elements().collect(),
        }
    }

    pub fn empty() -> Self {
        FamilySelection::default()
    }

    /// Members as a bitmask over element indices; the caller guarantees fewer
    /// than 64 elements.
    pub fn from_mask(carrier: &Lattice, mask: u64) -> Self {
        FamilySelection {
            members: carrier.elements().filter(|&x| mask >> x & 1 == 1).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// `X ∨ Y = {x ∨ y : x ∈ X, y ∈ Y}` as a set.
    pub fn join_with(&self, other: &FamilySelection, l: &Lattice) -> FamilySelection {
        self.combine(other, |x, y| l.join(x, y))
    }

    /// `X ∧ Y = {x ∧ y : x ∈ X, y ∈ Y}` as a set.
    pub fn meet_with(&self, other: &FamilySelection, l: &Lattice) -> FamilySelection {
        self.combine(other, |x, y| l.meet(x, y))
    }

    fn combine(&self, other: &FamilySelection, op: impl Fn(usize, usize) -> usize) -> Self {
        let mut members: Vec<usize> = self
            .iter()
            .flat_map(|x| other.iter().map(move |y| (x, y)))
            .map(|(x, y)| op(x, y))
            .collect();
        members.sort_unstable();
        members.dedup();
        FamilySelection { members }
    }

    pub fn names<'a>(&self, l: &'a Lattice) -> Vec<&'a str> {
        self.iter().map(|x| l.name(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean, chain};
    use crate::rational::int;

    #[test]
    fn rejects_negative_and_miscounted_weights() {
        let l = Arc::new(chain(2).unwrap());
        assert!(matches!(
            WeightFunction::from_ints(l.clone(), &[1, -1]),
            Err(Error::NegativeWeight { .. })
        ));
        assert!(matches!(
            WeightFunction::from_ints(l.clone(), &[1]),
            Err(Error::WeightCount { .. })
        ));
    }

    #[test]
    fn carriers_must_agree() {
        let a = Arc::new(chain(2).unwrap());
        let b = Arc::new(boolean(1).unwrap());
        let w = WeightFunction::constant(a.clone(), int(1)).unwrap();
        let v = WeightFunction::constant(b, int(1)).unwrap();
        assert!(WeightQuadruple::new(w.clone(), w.clone(), w.clone(), v).is_err());
        // structurally equal carriers are the same carrier
        let a2 = Arc::new(chain(2).unwrap());
        let w2 = WeightFunction::constant(a2, int(1)).unwrap();
        assert!(WeightQuadruple::new(w.clone(), w.clone(), w, w2).is_ok());
    }

    #[test]
    fn family_joins_are_sets() {
        let l = boolean(2).unwrap();
        let all = FamilySelection::all(&l);
        assert_eq!(all.join_with(&all, &l), all);
        assert_eq!(all.meet_with(&all, &l), all);
        let atoms = FamilySelection::new(&l, [1, 2]).unwrap();
        assert_eq!(atoms.join_with(&atoms, &l).members(), &[1, 2, 3]);
        assert_eq!(atoms.meet_with(&atoms, &l).members(), &[0, 1, 2]);
        assert!(FamilySelection::empty().join_with(&all, &l).is_empty());
        assert!(FamilySelection::new(&l, [7]).is_err());
    }
}
