//! Composition tables of projective endofunctors.
//!
//! For an algebra with `k` primitive idempotents `e_1..e_k`, the
//! indecomposable projective functors are the identity plus the functors
//! `F[i,j]`, and composition is `F[i,j] . F[i',j'] = F[i,j']` with
//! multiplicity `d[j][i']`, the dimension of `e_j A e_{i'}`. Only the
//! dimension matrix enters the table, and the table satisfies the
//! associativity law for every matrix since the inner indices just chain.

use crate::cardinal::CardinalBound;
use crate::carrier::Carrier;
use crate::error::{Error, Result};
use crate::mms::MultiMultisemigroup;

/// A square matrix of non-negative integers, `d[j][i] = dim e_j A e_i`.
/// Diagonal entries are at least 1 because `e_i` itself lives in `e_i A e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionMatrix {
    k: usize,
    entries: Vec<u64>, // row-major
}

impl DimensionMatrix {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::InvalidParameter(
                "dimension matrix must be nonempty".to_string(),
            ));
        }
        let mut entries = Vec::with_capacity(k * k);
        for (j, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidParameter(format!(
                    "dimension matrix row {} has {} entries, expected {}",
                    j,
                    row.len(),
                    k
                )));
            }
            if row[j] == 0 {
                return Err(Error::InvalidParameter(format!(
                    "dimension matrix diagonal entry ({j}, {j}) must be at least 1"
                )));
            }
            entries.extend_from_slice(row);
        }
        Ok(DimensionMatrix { k, entries })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `d[j][i]`, 0-based.
    pub fn get(&self, j: usize, i: usize) -> u64 {
        self.entries[j * self.k + i]
    }
}

fn functor_name(i: usize, j: usize) -> String {
    format!("F{}_{}", i + 1, j + 1)
}

/// The multiplicity table on `{id} U {F[i,j]}` determined by a dimension
/// matrix: the identity is a strict unit and
/// `mu[F[i,j], F[i',j']](F[i,j']) = d[j][i']`.
pub fn projective_functor_mms(d: &DimensionMatrix) -> Result<MultiMultisemigroup> {
    let k = d.k();
    let mut names = vec!["id".to_string()];
    for i in 0..k {
        for j in 0..k {
            names.push(functor_name(i, j));
        }
    }
    let carrier = Carrier::new(names)?;
    let fidx = |i: usize, j: usize| 1 + i * k + j;
    let n = carrier.len();
    let mut rows = vec![Vec::new(); n * n];
    // Unit row and column.
    for x in 0..n {
        rows[x] = vec![(x, 1)];
        if x != 0 {
            rows[x * n] = vec![(x, 1)];
        }
    }
    for i in 0..k {
        for j in 0..k {
            for ip in 0..k {
                for jp in 0..k {
                    let c = d.get(j, ip);
                    if c > 0 {
                        rows[fidx(i, j) * n + fidx(ip, jp)] = vec![(fidx(i, jp), c)];
                    }
                }
            }
        }
    }
    MultiMultisemigroup::from_index_rows(carrier, CardinalBound::Omega, rows)
}
