//! Integer structure-constant algebras.
//!
//! A finitary multiplicity table is the same data as the structure constants
//! of an associative ring on the free module over the carrier. This module
//! holds that integer-side view, with its own associativity check over the
//! integers, independent of the cardinal arithmetic path.

use std::sync::Arc;

use crate::carrier::Carrier;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstantAlgebra {
    basis: Arc<Carrier>,
    // One sparse row per (s, t) pair, row-major; entries (r, c) sorted by r, c > 0.
    rows: Vec<Vec<(u32, u64)>>,
}

impl StructureConstantAlgebra {
    pub(crate) fn from_rows(basis: Arc<Carrier>, rows: Vec<Vec<(u32, u64)>>) -> Self {
        debug_assert_eq!(rows.len(), basis.len() * basis.len());
        StructureConstantAlgebra { basis, rows }
    }

    /// Build from named nonzero constants `(s, t, r, c)`; omitted triples are zero.
    pub fn from_constants(
        basis: Arc<Carrier>,
        constants: &[(&str, &str, &str, u64)],
    ) -> Result<Self> {
        let n = basis.len();
        let mut rows = vec![Vec::new(); n * n];
        for &(s, t, r, c) in constants {
            let si = basis.require(s)?;
            let ti = basis.require(t)?;
            let ri = basis.require(r)? as u32;
            if c > 0 {
                rows[si * n + ti].push((ri, c));
            }
        }
        for row in &mut rows {
            row.sort_by_key(|&(r, _)| r);
        }
        Ok(StructureConstantAlgebra { basis, rows })
    }

    pub fn basis(&self) -> &Arc<Carrier> {
        &self.basis
    }

    pub fn constant(&self, s: &str, t: &str, r: &str) -> Result<u64> {
        let si = self.basis.require(s)?;
        let ti = self.basis.require(t)?;
        let ri = self.basis.require(r)? as u32;
        let row = &self.rows[si * self.basis.len() + ti];
        Ok(row
            .binary_search_by_key(&ri, |&(j, _)| j)
            .map(|pos| row[pos].1)
            .unwrap_or(0))
    }

    pub(crate) fn row(&self, s: usize, t: usize) -> &[(u32, u64)] {
        &self.rows[s * self.basis.len() + t]
    }

    /// Bilinear product of two integer coefficient vectors over the basis.
    pub fn multiply(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let n = self.basis.len();
        assert_eq!(x.len(), n);
        assert_eq!(y.len(), n);
        let mut out = vec![0i64; n];
        for (s, &xs) in x.iter().enumerate() {
            if xs == 0 {
                continue;
            }
            for (t, &yt) in y.iter().enumerate() {
                if yt == 0 {
                    continue;
                }
                for &(r, c) in self.row(s, t) {
                    out[r as usize] += xs * yt * c as i64;
                }
            }
        }
        out
    }

    /// Brute-force integer associativity: compare `(e_s e_t) e_r` with
    /// `e_s (e_t e_r)` for all basis triples. Returns the first failing triple.
    pub fn check_associativity(&self) -> Option<(String, String, String)> {
        let n = self.basis.len();
        let mut left = vec![0i64; n];
        let mut right = vec![0i64; n];
        for s in 0..n {
            for t in 0..n {
                for r in 0..n {
                    left.iter_mut().for_each(|v| *v = 0);
                    right.iter_mut().for_each(|v| *v = 0);
                    for &(j, c) in self.row(s, t) {
                        for &(k, d) in self.row(j as usize, r) {
                            left[k as usize] += c as i64 * d as i64;
                        }
                    }
                    for &(j, c) in self.row(t, r) {
                        for &(k, d) in self.row(s, j as usize) {
                            right[k as usize] += c as i64 * d as i64;
                        }
                    }
                    if left != right {
                        return Some((
                            self.basis.name(s).to_string(),
                            self.basis.name(t).to_string(),
                            self.basis.name(r).to_string(),
                        ));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.check_associativity().is_none()
    }
}
