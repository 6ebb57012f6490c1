//! Plain multisemigroups: a multivalued operation `S x S -> 2^S` with the
//! union-associativity axiom, and the multiplicity-free linearization that
//! motivates keeping multiplicities around in the first place.

use std::fmt;
use std::sync::Arc;

use crate::carrier::Carrier;
use crate::error::{Error, Result};

/// A subset of a carrier, stored as a bitset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElemSet {
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(carrier_len: usize) -> Self {
        ElemSet {
            words: vec![0; carrier_len.div_ceil(64)],
        }
    }

    pub fn from_indices(carrier_len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = ElemSet::empty(carrier_len);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn is_subset_of(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(w, o)| w & !o == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(k * 64 + b)
                }
            })
        })
    }
}

/// First failing triple of the union-associativity axiom, with the element
/// sets produced by each grouping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MsCounterexample {
    pub a: String,
    pub b: String,
    pub c: String,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

/// Coefficient domain for [`Multisemigroup::linearized_product`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficients {
    /// Ordinary integer coefficients.
    Integer,
    /// Boolean coefficients: addition saturates at 1.
    Boolean,
}

/// A formal non-negative combination of carrier elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Combination {
    carrier: Arc<Carrier>,
    coefficients: Vec<u64>,
}

impl Combination {
    pub fn zero(carrier: Arc<Carrier>) -> Self {
        let n = carrier.len();
        Combination {
            carrier,
            coefficients: vec![0; n],
        }
    }

    pub fn basis(carrier: Arc<Carrier>, x: &str) -> Result<Self> {
        let i = carrier.require(x)?;
        let mut c = Combination::zero(carrier);
        c.coefficients[i] = 1;
        Ok(c)
    }

    pub fn coefficient(&self, name: &str) -> Result<u64> {
        Ok(self.coefficients[self.carrier.require(name)?])
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !self.carrier.same_as(&other.carrier) {
            return Err(Error::CarrierMismatch);
        }
        let coefficients = self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Combination {
            carrier: self.carrier.clone(),
            coefficients,
        })
    }

    pub fn scale(&self, k: u64) -> Self {
        Combination {
            carrier: self.carrier.clone(),
            coefficients: self.coefficients.iter().map(|c| c * k).collect(),
        }
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c == 1 {
                write!(f, "{}", self.carrier.name(i))?;
            } else {
                write!(f, "{}*{}", c, self.carrier.name(i))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct Multisemigroup {
    carrier: Arc<Carrier>,
    table: Vec<ElemSet>, // row-major over (s, t)
}

impl Multisemigroup {
    /// Build from a total table of subsets, row-major over `(s, t)`.
    pub fn from_sets(carrier: Arc<Carrier>, table: Vec<ElemSet>) -> Result<Self> {
        let n = carrier.len();
        if table.len() != n * n {
            return Err(Error::InvalidParameter(format!(
                "multisemigroup table must have {} entries, got {}",
                n * n,
                table.len()
            )));
        }
        Ok(Multisemigroup { carrier, table })
    }

    /// Build from named products; pairs not listed get the empty set.
    pub fn from_named_table(
        carrier: Arc<Carrier>,
        products: &[(&str, &str, &[&str])],
    ) -> Result<Self> {
        let n = carrier.len();
        let mut table = vec![ElemSet::empty(n); n * n];
        for &(s, t, elems) in products {
            let si = carrier.require(s)?;
            let ti = carrier.require(t)?;
            for &r in elems {
                let ri = carrier.require(r)?;
                table[si * n + ti].insert(ri);
            }
        }
        Multisemigroup::from_sets(carrier, table)
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub(crate) fn product_idx(&self, s: usize, t: usize) -> &ElemSet {
        &self.table[s * self.carrier.len() + t]
    }

    /// The product `s * t` as a list of element names in carrier order.
    pub fn product(&self, s: &str, t: &str) -> Result<Vec<String>> {
        let si = self.carrier.require(s)?;
        let ti = self.carrier.require(t)?;
        Ok(self
            .product_idx(si, ti)
            .iter()
            .map(|i| self.carrier.name(i).to_string())
            .collect())
    }

    /// Check the axiom: the union of `x * c` over `x` in `a * b` equals the
    /// union of `a * y` over `y` in `b * c`, for all triples. Returns the
    /// first violation in lexicographic order.
    pub fn check_associativity(&self) -> Option<MsCounterexample> {
        let n = self.carrier.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut left = ElemSet::empty(n);
                    for x in self.product_idx(a, b).iter() {
                        left.union_with(self.product_idx(x, c));
                    }
                    let mut right = ElemSet::empty(n);
                    for y in self.product_idx(b, c).iter() {
                        right.union_with(self.product_idx(a, y));
                    }
                    if left != right {
                        let names = |set: &ElemSet| {
                            set.iter()
                                .map(|i| self.carrier.name(i).to_string())
                                .collect()
                        };
                        return Some(MsCounterexample {
                            a: self.carrier.name(a).to_string(),
                            b: self.carrier.name(b).to_string(),
                            c: self.carrier.name(c).to_string(),
                            left: names(&left),
                            right: names(&right),
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.check_associativity().is_none()
    }

    /// The bilinear extension of the multioperation that forgets
    /// multiplicities: on basis elements, `x * y` maps to the plain sum of the
    /// elements of the product set. Over integer coefficients this operation
    /// is in general **not** associative; over Boolean coefficients it is
    /// whenever the multisemigroup axiom holds.
    pub fn linearized_product(
        &self,
        x: &Combination,
        y: &Combination,
        coefficients: Coefficients,
    ) -> Result<Combination> {
        if !self.carrier.same_as(&x.carrier) || !self.carrier.same_as(&y.carrier) {
            return Err(Error::CarrierMismatch);
        }
        let n = self.carrier.len();
        let mut out = vec![0u64; n];
        for (s, &xs) in x.coefficients.iter().enumerate() {
            if xs == 0 {
                continue;
            }
            for (t, &yt) in y.coefficients.iter().enumerate() {
                if yt == 0 {
                    continue;
                }
                let term = match coefficients {
                    Coefficients::Integer => xs * yt,
                    Coefficients::Boolean => 1,
                };
                for z in self.product_idx(s, t).iter() {
                    match coefficients {
                        Coefficients::Integer => out[z] += term,
                        Coefficients::Boolean => out[z] = 1,
                    }
                }
            }
        }
        Ok(Combination {
            carrier: self.carrier.clone(),
            coefficients: out,
        })
    }
}

impl PartialEq for Multisemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.carrier.same_as(&other.carrier) && self.table == other.table
    }
}

impl Eq for Multisemigroup {}
