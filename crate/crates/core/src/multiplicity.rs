//! Finitely supported multiplicity functions from a carrier into `Card_k`.

use std::fmt;
use std::sync::Arc;

use crate::cardinal::{Cardinal, CardinalBound, CardinalValue};
use crate::carrier::Carrier;
use crate::error::{Error, Result};

/// A function `carrier -> Card_bound`, stored sparsely: entries hold the
/// nonzero values sorted by element index. Absent elements map to zero.
#[derive(Debug, Clone)]
pub struct MultiplicityFunction {
    carrier: Arc<Carrier>,
    bound: CardinalBound,
    entries: Vec<(u32, CardinalValue)>,
}

impl MultiplicityFunction {
    pub fn zero(carrier: Arc<Carrier>, bound: CardinalBound) -> Self {
        MultiplicityFunction {
            carrier,
            bound,
            entries: Vec::new(),
        }
    }

    /// The indicator function of `x`: 1 at `x`, 0 elsewhere.
    pub fn indicator(carrier: Arc<Carrier>, bound: CardinalBound, x: &str) -> Result<Self> {
        let i = carrier.require(x)?;
        Ok(MultiplicityFunction {
            carrier,
            bound,
            entries: vec![(i as u32, CardinalValue::Nat(1))],
        })
    }

    pub fn from_named_values<'a, I>(
        carrier: Arc<Carrier>,
        bound: CardinalBound,
        values: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, CardinalValue)>,
    {
        let mut entries = Vec::new();
        for (name, value) in values {
            let i = carrier.require(name)?;
            if !value.fits(bound) {
                return Err(Error::ValueOutOfBound { value, bound });
            }
            if !value.is_zero() {
                entries.push((i as u32, value));
            }
        }
        entries.sort_by_key(|&(i, _)| i);
        for w in entries.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateElement(
                    carrier.name(w[0].0 as usize).to_string(),
                ));
            }
        }
        Ok(MultiplicityFunction {
            carrier,
            bound,
            entries,
        })
    }

    /// Build from a sorted list of nonzero `(index, value)` pairs. Internal
    /// constructors are expected to uphold sortedness and nonzeroness.
    pub(crate) fn from_sorted_entries(
        carrier: Arc<Carrier>,
        bound: CardinalBound,
        entries: Vec<(u32, CardinalValue)>,
    ) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|&(_, v)| !v.is_zero() && v.fits(bound)));
        MultiplicityFunction {
            carrier,
            bound,
            entries,
        }
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn bound(&self) -> CardinalBound {
        self.bound
    }

    pub fn get(&self, name: &str) -> Result<Cardinal> {
        let i = self.carrier.require(name)?;
        Cardinal::new(self.value_at(i), self.bound)
    }

    pub fn value_at(&self, i: usize) -> CardinalValue {
        match self.entries.binary_search_by_key(&(i as u32), |&(j, _)| j) {
            Ok(pos) => self.entries[pos].1,
            Err(_) => CardinalValue::Nat(0),
        }
    }

    /// Nonzero entries in carrier order.
    pub fn support(&self) -> impl Iterator<Item = (usize, CardinalValue)> + '_ {
        self.entries.iter().map(|&(i, v)| (i as usize, v))
    }

    pub fn support_names(&self) -> Vec<&str> {
        self.entries
            .iter()
            .map(|&(i, _)| self.carrier.name(i as usize))
            .collect()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn require_compatible(&self, other: &Self) -> Result<()> {
        if !self.carrier.same_as(&other.carrier) {
            return Err(Error::CarrierMismatch);
        }
        if self.bound != other.bound {
            return Err(Error::BoundMismatch {
                left: self.bound,
                right: other.bound,
            });
        }
        Ok(())
    }

    /// Pointwise sum in `Card_bound`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.require_compatible(other)?;
        let mut acc = SparseAccumulator::new(self.carrier.len());
        acc.add_scaled(CardinalValue::Nat(1), self, self.bound);
        acc.add_scaled(CardinalValue::Nat(1), other, self.bound);
        Ok(acc.take_function(self.carrier.clone(), self.bound))
    }

    /// Pointwise scaling by a cardinal of the same bound.
    pub fn scale(&self, coefficient: Cardinal) -> Result<Self> {
        if coefficient.bound() != self.bound {
            return Err(Error::BoundMismatch {
                left: coefficient.bound(),
                right: self.bound,
            });
        }
        let c = coefficient.value();
        let entries = self
            .entries
            .iter()
            .map(|&(i, v)| (i, v.mul_in(c, self.bound)))
            .filter(|&(_, v)| !v.is_zero())
            .collect();
        Ok(MultiplicityFunction::from_sorted_entries(
            self.carrier.clone(),
            self.bound,
            entries,
        ))
    }

    /// Truncate every value to a smaller bound.
    pub fn reduce(&self, target: CardinalBound) -> Result<Self> {
        if !target.is_valid() {
            return Err(Error::InvalidBound);
        }
        if !target.le(self.bound) {
            return Err(Error::BoundMismatch {
                left: target,
                right: self.bound,
            });
        }
        let entries = self
            .entries
            .iter()
            .map(|&(i, v)| (i, v.clamp(target)))
            .filter(|&(_, v)| !v.is_zero())
            .collect();
        Ok(MultiplicityFunction::from_sorted_entries(
            self.carrier.clone(),
            target,
            entries,
        ))
    }

    /// Named nonzero values, for serialization and display.
    pub fn to_named_values(&self) -> Vec<(&str, CardinalValue)> {
        self.entries
            .iter()
            .map(|&(i, v)| (self.carrier.name(i as usize), v))
            .collect()
    }
}

impl PartialEq for MultiplicityFunction {
    fn eq(&self, other: &Self) -> bool {
        self.carrier.same_as(&other.carrier)
            && self.bound == other.bound
            && self.entries == other.entries
    }
}

impl Eq for MultiplicityFunction {}

impl fmt::Display for MultiplicityFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, &(i, v)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {}", self.carrier.name(i as usize), v)?;
        }
        write!(f, "}}")
    }
}

/// A dense scratch buffer with a touched-index list, for accumulating sparse
/// sums without scanning the whole carrier per operation.
pub(crate) struct SparseAccumulator {
    dense: Vec<CardinalValue>,
    touched: Vec<u32>,
}

impl SparseAccumulator {
    pub fn new(len: usize) -> Self {
        SparseAccumulator {
            dense: vec![CardinalValue::Nat(0); len],
            touched: Vec::new(),
        }
    }

    pub fn clear(&mut self) {
        for &i in &self.touched {
            self.dense[i as usize] = CardinalValue::Nat(0);
        }
        self.touched.clear();
    }

    /// `self += coefficient * f`, computed in `Card_bound`.
    pub fn add_scaled(
        &mut self,
        coefficient: CardinalValue,
        f: &MultiplicityFunction,
        bound: CardinalBound,
    ) {
        if coefficient.is_zero() {
            return;
        }
        for &(i, v) in &f.entries {
            let term = coefficient.mul_in(v, bound);
            if term.is_zero() {
                continue;
            }
            let cell = &mut self.dense[i as usize];
            if cell.is_zero() {
                self.touched.push(i);
            }
            *cell = cell.add_in(term, bound);
        }
    }

    pub fn value_at(&self, i: usize) -> CardinalValue {
        self.dense[i]
    }

    /// Compare with another accumulator; returns the smallest index where
    /// they differ, if any.
    pub fn first_difference(&self, other: &SparseAccumulator) -> Option<usize> {
        let mut indices: Vec<u32> = self
            .touched
            .iter()
            .chain(other.touched.iter())
            .copied()
            .collect();
        indices.sort_unstable();
        indices.dedup();
        indices
            .into_iter()
            .find(|&i| self.dense[i as usize] != other.dense[i as usize])
            .map(|i| i as usize)
    }

    /// Drain into a sparse function and reset the buffer.
    pub fn take_function(
        &mut self,
        carrier: Arc<Carrier>,
        bound: CardinalBound,
    ) -> MultiplicityFunction {
        self.touched.sort_unstable();
        let entries = self
            .touched
            .iter()
            .map(|&i| (i, self.dense[i as usize]))
            .filter(|&(_, v)| !v.is_zero())
            .collect();
        let f = MultiplicityFunction::from_sorted_entries(carrier, bound, entries);
        self.clear();
        f
    }
}
