//! The Catalan monoid: order-preserving, order-decreasing self-maps of a
//! finite chain under composition. Its size is the Catalan number of the
//! chain length, and its multiplication table has only 0/1 multiplicities.

use crate::cardinal::CardinalBound;
use crate::carrier::Carrier;
use crate::error::{Error, Result};
use crate::mms::MultiMultisemigroup;

/// A map `f` on the chain `1..=m` with `f(i) <= i` and `f` weakly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CatalanMap {
    images: Vec<u8>, // images[i] = f(i+1), 1-based values
}

impl CatalanMap {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        for (i, &v) in images.iter().enumerate() {
            if v == 0 || v as usize > i + 1 {
                return Err(Error::InvalidParameter(format!(
                    "map is not order-decreasing: f({}) = {}",
                    i + 1,
                    v
                )));
            }
            if i > 0 && v < images[i - 1] {
                return Err(Error::InvalidParameter(format!(
                    "map is not order-preserving: f({}) = {} < f({}) = {}",
                    i + 1,
                    v,
                    i,
                    images[i - 1]
                )));
            }
        }
        Ok(CatalanMap { images })
    }

    pub fn identity(m: usize) -> Self {
        CatalanMap {
            images: (1..=m as u8).collect(),
        }
    }

    pub fn chain_len(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.images[i as usize - 1]
    }

    /// `self` after `other`: `(self . other)(i) = self(other(i))`.
    pub fn compose(&self, other: &CatalanMap) -> CatalanMap {
        CatalanMap {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    /// The images concatenated as digits, e.g. `"112"` for f = (1, 1, 2).
    pub fn name(&self) -> String {
        self.images.iter().map(|v| (b'0' + v) as char).collect()
    }
}

/// All Catalan maps on the chain `1..=m`, in lexicographic order of their
/// image tuples.
pub fn enumerate_maps(m: usize) -> Vec<CatalanMap> {
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(m);
    fn rec(m: usize, images: &mut Vec<u8>, out: &mut Vec<CatalanMap>) {
        if images.len() == m {
            out.push(CatalanMap {
                images: images.clone(),
            });
            return;
        }
        let lo = images.last().copied().unwrap_or(1);
        let hi = images.len() as u8 + 1;
        for v in lo..=hi {
            images.push(v);
            rec(m, images, out);
            images.pop();
        }
    }
    rec(m, &mut images, &mut out);
    out
}

/// The multiplicity table of the Catalan monoid on a chain of `m` elements:
/// `mu[f,g]` is the indicator of the composite `f . g`, so all multiplicities
/// are 0 or 1 and the table is just the monoid's multiplication.
pub fn catalan_monoid_mms(m: u64) -> Result<MultiMultisemigroup> {
    if !(2..=7).contains(&m) {
        return Err(Error::ParameterOutOfRange {
            name: "m",
            value: m,
            min: 2,
            max: 7,
        });
    }
    let maps = enumerate_maps(m as usize);
    let carrier = Carrier::new(maps.iter().map(|f| f.name()))?;
    let n = maps.len();
    let mut table = Vec::with_capacity(n * n);
    for f in &maps {
        for g in &maps {
            let h = f.compose(g);
            table.push(crate::multiplicity::MultiplicityFunction::indicator(
                carrier.clone(),
                CardinalBound::Omega,
                &h.name(),
            )?);
        }
    }
    MultiMultisemigroup::from_table(carrier, CardinalBound::Omega, table)
}
