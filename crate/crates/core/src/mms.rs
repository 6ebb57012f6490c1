//! Multisemigroups with multiplicities.
//!
//! The central object: a finite carrier `S`, a cardinal bound `k`, and a
//! total table assigning to each pair `(s, t)` a multiplicity function
//! `S -> Card_k`. The table must satisfy the associativity law
//!
//! ```text
//! sum_i mu[s,t](i) * mu[r,i]  =  sum_j mu[r,s](j) * mu[j,t]      (all r, s, t)
//! ```
//!
//! as an equation between functions, computed in `Card_k`. The law makes
//! iterated products independent of bracketing, so words evaluate to a single
//! well-defined multiplicity function.
//!
//! Constructors accept unvalidated tables and mark them as such; call
//! [`MultiMultisemigroup::validate`] (or check [`verify_associativity`]) to
//! establish the law. Corrupted tables are first-class values here: the
//! verifier, the word evaluators and the deformation search all need them.
//!
//! [`verify_associativity`]: MultiMultisemigroup::verify_associativity

use std::sync::Arc;

use crate::algebra::StructureConstantAlgebra;
use crate::cardinal::{Cardinal, CardinalBound, CardinalValue};
use crate::carrier::Carrier;
use crate::error::{Error, Result};
use crate::multiplicity::{MultiplicityFunction, SparseAccumulator};
use crate::multisemigroup::{ElemSet, Multisemigroup};

/// A named table row for literal fixtures: left element, right element, and
/// the nonzero target values.
pub type NamedEntry<'a> = (&'a str, &'a str, &'a [(&'a str, u64)]);

/// First triple where the associativity law fails, together with the element
/// where the two sides disagree and the two values there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocCounterexample {
    pub r: String,
    pub s: String,
    pub t: String,
    pub element: String,
    pub lhs: Cardinal,
    pub rhs: Cardinal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AssocVerdict {
    Valid,
    Counterexample(AssocCounterexample),
}

impl AssocVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, AssocVerdict::Valid)
    }
}

/// Outcome of the finitarity check, with one reason per failed condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitaryReport {
    pub finitary: bool,
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct MultiMultisemigroup {
    carrier: Arc<Carrier>,
    bound: CardinalBound,
    table: Vec<MultiplicityFunction>, // row-major over (s, t)
    validated: bool,
}

impl MultiMultisemigroup {
    /// Build from a total table, row-major over `(s, t)`. The result is
    /// unvalidated; the associativity law is not checked here.
    pub fn from_table(
        carrier: Arc<Carrier>,
        bound: CardinalBound,
        table: Vec<MultiplicityFunction>,
    ) -> Result<Self> {
        if !bound.is_valid() {
            return Err(Error::InvalidBound);
        }
        let n = carrier.len();
        if table.len() != n * n {
            return Err(Error::InvalidParameter(format!(
                "multiplicity table must have {} entries, got {}",
                n * n,
                table.len()
            )));
        }
        for f in &table {
            if !f.carrier().same_as(&carrier) {
                return Err(Error::CarrierMismatch);
            }
            if f.bound() != bound {
                return Err(Error::BoundMismatch {
                    left: f.bound(),
                    right: bound,
                });
            }
        }
        Ok(MultiMultisemigroup {
            carrier,
            bound,
            table,
            validated: false,
        })
    }

    /// Build from named nonzero values; pairs not listed get the zero function.
    pub fn from_named_entries(
        carrier: Arc<Carrier>,
        bound: CardinalBound,
        entries: &[NamedEntry<'_>],
    ) -> Result<Self> {
        let n = carrier.len();
        let mut values: Vec<Vec<(&str, CardinalValue)>> = vec![Vec::new(); n * n];
        for &(s, t, pairs) in entries {
            let si = carrier.require(s)?;
            let ti = carrier.require(t)?;
            values[si * n + ti] =
                pairs.iter().map(|&(r, v)| (r, CardinalValue::Nat(v))).collect();
        }
        let table = values
            .into_iter()
            .map(|pairs| MultiplicityFunction::from_named_values(carrier.clone(), bound, pairs))
            .collect::<Result<Vec<_>>>()?;
        MultiMultisemigroup::from_table(carrier, bound, table)
    }

    /// Build from row-major integer rows indexed by carrier position: entry
    /// `rows[s * n + t]` lists the nonzero `(target index, value)` pairs of
    /// the pair `(s, t)`. The convenient form for computed generators.
    pub fn from_index_rows(
        carrier: Arc<Carrier>,
        bound: CardinalBound,
        rows: Vec<Vec<(usize, u64)>>,
    ) -> Result<Self> {
        let n = carrier.len();
        if rows.len() != n * n {
            return Err(Error::InvalidParameter(format!(
                "multiplicity table must have {} rows, got {}",
                n * n,
                rows.len()
            )));
        }
        let mut table = Vec::with_capacity(n * n);
        for mut row in rows {
            row.sort_by_key(|&(r, _)| r);
            if let Some(w) = row.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::DuplicateElement(carrier.name(w[0].0).to_string()));
            }
            let mut entries = Vec::with_capacity(row.len());
            for &(r, c) in &row {
                if r >= n {
                    return Err(Error::InvalidParameter(format!(
                        "target index {r} out of range for carrier of size {n}"
                    )));
                }
                let value = CardinalValue::Nat(c);
                if !value.fits(bound) {
                    return Err(Error::ValueOutOfBound { value, bound });
                }
                if c > 0 {
                    entries.push((r as u32, value));
                }
            }
            table.push(MultiplicityFunction::from_sorted_entries(
                carrier.clone(),
                bound,
                entries,
            ));
        }
        MultiMultisemigroup::from_table(carrier, bound, table)
    }

    /// View integer structure constants as a multiplicity table at bound
    /// omega. The table is valid exactly when the constants are associative;
    /// the result is returned unvalidated.
    pub fn from_structure_constants(algebra: &StructureConstantAlgebra) -> Self {
        let carrier = algebra.basis().clone();
        let n = carrier.len();
        let mut table = Vec::with_capacity(n * n);
        for s in 0..n {
            for t in 0..n {
                let entries = algebra
                    .row(s, t)
                    .iter()
                    .map(|&(r, c)| (r, CardinalValue::Nat(c)))
                    .collect();
                table.push(MultiplicityFunction::from_sorted_entries(
                    carrier.clone(),
                    CardinalBound::Omega,
                    entries,
                ));
            }
        }
        MultiMultisemigroup {
            carrier,
            bound: CardinalBound::Omega,
            table,
            validated: false,
        }
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn bound(&self) -> CardinalBound {
        self.bound
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub(crate) fn mu_idx(&self, s: usize, t: usize) -> &MultiplicityFunction {
        &self.table[s * self.carrier.len() + t]
    }

    /// The table entry for the pair `(s, t)`.
    pub fn mu(&self, s: &str, t: &str) -> Result<&MultiplicityFunction> {
        let si = self.carrier.require(s)?;
        let ti = self.carrier.require(t)?;
        Ok(self.mu_idx(si, ti))
    }

    pub fn indicator(&self, x: &str) -> Result<MultiplicityFunction> {
        MultiplicityFunction::indicator(self.carrier.clone(), self.bound, x)
    }

    /// Check the associativity law over all triples in lexicographic carrier
    /// order; the first violation is reported with the first disagreeing
    /// element.
    pub fn verify_associativity(&self) -> AssocVerdict {
        let n = self.carrier.len();
        let mut lhs = SparseAccumulator::new(n);
        let mut rhs = SparseAccumulator::new(n);
        for r in 0..n {
            for s in 0..n {
                for t in 0..n {
                    for (i, w) in self.mu_idx(s, t).support() {
                        lhs.add_scaled(w, self.mu_idx(r, i), self.bound);
                    }
                    for (j, w) in self.mu_idx(r, s).support() {
                        rhs.add_scaled(w, self.mu_idx(j, t), self.bound);
                    }
                    if let Some(u) = lhs.first_difference(&rhs) {
                        let cx = AssocCounterexample {
                            r: self.carrier.name(r).to_string(),
                            s: self.carrier.name(s).to_string(),
                            t: self.carrier.name(t).to_string(),
                            element: self.carrier.name(u).to_string(),
                            lhs: Cardinal::new(lhs.value_at(u), self.bound)
                                .expect("accumulator value fits bound"),
                            rhs: Cardinal::new(rhs.value_at(u), self.bound)
                                .expect("accumulator value fits bound"),
                        };
                        return AssocVerdict::Counterexample(cx);
                    }
                    lhs.clear();
                    rhs.clear();
                }
            }
        }
        AssocVerdict::Valid
    }

    /// Run the verifier and mark the table as validated on success.
    #[allow(clippy::result_large_err)]
    pub fn validate(mut self) -> std::result::Result<Self, AssocCounterexample> {
        match self.verify_associativity() {
            AssocVerdict::Valid => {
                self.validated = true;
                Ok(self)
            }
            AssocVerdict::Counterexample(cx) => Err(cx),
        }
    }

    fn word_indices(&self, word: &[&str]) -> Result<Vec<usize>> {
        if word.len() < 2 {
            return Err(Error::WordTooShort(word.len()));
        }
        word.iter().map(|s| self.carrier.require(s)).collect()
    }

    /// Evaluate a word of length at least two by peeling the first letter:
    /// the word `s x` evaluates to `t -> sum_a eval(x)(a) * mu[s,a](t)`.
    pub fn evaluate_word_prefix(&self, word: &[&str]) -> Result<MultiplicityFunction> {
        let idx = self.word_indices(word)?;
        let n = self.carrier.len();
        let k = idx.len();
        let mut current = self.mu_idx(idx[k - 2], idx[k - 1]).clone();
        let mut acc = SparseAccumulator::new(n);
        for &s in idx[..k - 2].iter().rev() {
            for (a, v) in current.support() {
                acc.add_scaled(v, self.mu_idx(s, a), self.bound);
            }
            current = acc.take_function(self.carrier.clone(), self.bound);
        }
        Ok(current)
    }

    /// Evaluate a word of length at least two by peeling the last letter:
    /// the word `x s` evaluates to `t -> sum_a eval(x)(a) * mu[a,s](t)`.
    /// On a table satisfying the associativity law this agrees with
    /// [`evaluate_word_prefix`]; on a corrupted table the two can differ.
    ///
    /// [`evaluate_word_prefix`]: MultiMultisemigroup::evaluate_word_prefix
    pub fn evaluate_word_suffix(&self, word: &[&str]) -> Result<MultiplicityFunction> {
        let idx = self.word_indices(word)?;
        let n = self.carrier.len();
        let mut current = self.mu_idx(idx[0], idx[1]).clone();
        let mut acc = SparseAccumulator::new(n);
        for &s in &idx[2..] {
            for (a, v) in current.support() {
                acc.add_scaled(v, self.mu_idx(a, s), self.bound);
            }
            current = acc.take_function(self.carrier.clone(), self.bound);
        }
        Ok(current)
    }

    /// Truncate every multiplicity to a smaller bound. Reduction preserves
    /// the associativity law, so the validated flag carries over.
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
        let table = self
            .table
            .iter()
            .map(|f| f.reduce(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiMultisemigroup {
            carrier: self.carrier.clone(),
            bound: target,
            table,
            validated: self.validated,
        })
    }

    /// Forget multiplicities: `s * t` is the support of `mu[s,t]`.
    pub fn underlying_multisemigroup(&self) -> Multisemigroup {
        let n = self.carrier.len();
        let mut sets = Vec::with_capacity(n * n);
        for f in &self.table {
            sets.push(ElemSet::from_indices(n, f.support().map(|(i, _)| i)));
        }
        Multisemigroup::from_sets(self.carrier.clone(), sets)
            .expect("table sizes agree by construction")
    }

    /// Lift a plain multisemigroup to bound `target` by sending membership to
    /// the largest element of the target bound. The base must satisfy its own
    /// associativity axiom; the lifted table then satisfies the law, and
    /// reducing back to bound 1 recovers the base.
    pub fn lift(ms: &Multisemigroup, target: CardinalBound) -> Result<Self> {
        if !target.is_valid() {
            return Err(Error::InvalidBound);
        }
        if let Some(cx) = ms.check_associativity() {
            return Err(Error::NotAssociative {
                a: cx.a,
                b: cx.b,
                c: cx.c,
            });
        }
        let carrier = ms.carrier().clone();
        let n = carrier.len();
        let top = target.max_value();
        let mut table = Vec::with_capacity(n * n);
        for s in 0..n {
            for t in 0..n {
                let entries = ms
                    .product_idx(s, t)
                    .iter()
                    .map(|r| (r as u32, top))
                    .collect();
                table.push(MultiplicityFunction::from_sorted_entries(
                    carrier.clone(),
                    target,
                    entries,
                ));
            }
        }
        Ok(MultiMultisemigroup {
            carrier,
            bound: target,
            table,
            validated: false,
        })
    }

    /// Finitary means: bound omega, no multiplicity equal to omega, and every
    /// table entry finitely supported (automatic over a finite carrier, still
    /// reported for completeness).
    pub fn is_finitary(&self) -> FinitaryReport {
        let mut reasons = Vec::new();
        if self.bound != CardinalBound::Omega {
            reasons.push(format!("bound is {}, must be omega", self.bound));
        }
        let n = self.carrier.len();
        'scan: for s in 0..n {
            for t in 0..n {
                for (r, v) in self.mu_idx(s, t).support() {
                    if v == CardinalValue::Omega {
                        reasons.push(format!(
                            "mu[{}, {}]({}) is omega",
                            self.carrier.name(s),
                            self.carrier.name(t),
                            self.carrier.name(r)
                        ));
                        break 'scan;
                    }
                }
            }
        }
        // Supports are finite by construction over a finite carrier; nothing to add.
        FinitaryReport {
            finitary: reasons.is_empty(),
            reasons,
        }
    }

    /// Extract the integer structure constants. Requires a finitary table.
    pub fn structure_constants(&self) -> Result<StructureConstantAlgebra> {
        let report = self.is_finitary();
        if !report.finitary {
            return Err(Error::NotFinitary(report.reasons.join("; ")));
        }
        let n = self.carrier.len();
        let mut rows = Vec::with_capacity(n * n);
        for f in &self.table {
            rows.push(
                f.support()
                    .map(|(r, v)| match v {
                        CardinalValue::Nat(c) => (r as u32, c),
                        CardinalValue::Omega => unreachable!("finitary table has no omega"),
                    })
                    .collect(),
            );
        }
        Ok(StructureConstantAlgebra::from_rows(
            self.carrier.clone(),
            rows,
        ))
    }

    /// The bilinear product on multiplicity functions determined by the
    /// table: `(f . g)(t) = sum over s, u of f(s) * g(u) * mu[s,u](t)`,
    /// computed in `Card_k`. Indicator inputs reproduce the table itself.
    pub fn function_multiply(
        &self,
        f: &MultiplicityFunction,
        g: &MultiplicityFunction,
    ) -> Result<MultiplicityFunction> {
        for h in [f, g] {
            if !h.carrier().same_as(&self.carrier) {
                return Err(Error::CarrierMismatch);
            }
            if h.bound() != self.bound {
                return Err(Error::BoundMismatch {
                    left: h.bound(),
                    right: self.bound,
                });
            }
        }
        let n = self.carrier.len();
        let mut acc = SparseAccumulator::new(n);
        for (s, fs) in f.support() {
            for (u, gu) in g.support() {
                let coefficient = fs.mul_in(gu, self.bound);
                acc.add_scaled(coefficient, self.mu_idx(s, u), self.bound);
            }
        }
        Ok(acc.take_function(self.carrier.clone(), self.bound))
    }
}

impl PartialEq for MultiMultisemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.carrier.same_as(&other.carrier)
            && self.bound == other.bound
            && self.table == other.table
    }
}

impl Eq for MultiMultisemigroup {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn singleton2() -> MultiMultisemigroup {
        catalog::singleton(Cardinal::nat(2, CardinalBound::Omega).unwrap()).unwrap()
    }

    #[test]
    fn singleton_word_evaluation_multiplies_scalars() {
        let m = singleton2();
        let f = m.evaluate_word_prefix(&["a", "a", "a"]).unwrap();
        assert_eq!(f.get("a").unwrap().value(), CardinalValue::Nat(4));
        let g = m.evaluate_word_suffix(&["a", "a", "a"]).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn length_two_word_is_the_table_entry() {
        let m = singleton2();
        assert_eq!(
            m.evaluate_word_prefix(&["a", "a"]).unwrap(),
            *m.mu("a", "a").unwrap()
        );
        assert!(matches!(
            m.evaluate_word_prefix(&["a"]),
            Err(Error::WordTooShort(1))
        ));
        assert!(matches!(
            m.evaluate_word_prefix(&["a", "zz"]),
            Err(Error::UnknownElement(_))
        ));
    }

    #[test]
    fn table_lookup_rejects_unknown_elements() {
        let m = singleton2();
        assert!(matches!(m.mu("a", "b"), Err(Error::UnknownElement(name)) if name == "b"));
        assert!(matches!(m.indicator("b"), Err(Error::UnknownElement(_))));
    }

    #[test]
    fn singleton_reduces_to_bound_one() {
        let m = singleton2();
        let r = m.reduce(CardinalBound::Finite(1)).unwrap();
        assert_eq!(
            r.mu("a", "a").unwrap().get("a").unwrap().value(),
            CardinalValue::Nat(1)
        );
        // Identity reduction returns an equal table.
        assert_eq!(m.reduce(m.bound()).unwrap(), m);
    }

    #[test]
    fn naive_unit_lift_of_obstructed_table_breaks_word_consistency() {
        // The two-element table where a*a = {a} and every product involving b
        // is {a, b}, with every nonzero multiplicity set to 1. Peeling the
        // word a a b from either end gives different functions; they first
        // disagree at element a.
        let carrier = Carrier::new(["a", "b"]).unwrap();
        let m = MultiMultisemigroup::from_named_entries(
            carrier,
            CardinalBound::Omega,
            &[
                ("a", "a", &[("a", 1)]),
                ("a", "b", &[("a", 1), ("b", 1)]),
                ("b", "a", &[("a", 1), ("b", 1)]),
                ("b", "b", &[("a", 1), ("b", 1)]),
            ],
        )
        .unwrap();
        let prefix = m.evaluate_word_prefix(&["a", "a", "b"]).unwrap();
        let suffix = m.evaluate_word_suffix(&["a", "a", "b"]).unwrap();
        assert_ne!(prefix, suffix);
        assert_eq!(prefix.get("a").unwrap().value(), CardinalValue::Nat(2));
        assert_eq!(suffix.get("a").unwrap().value(), CardinalValue::Nat(1));
        assert!(!m.verify_associativity().is_valid());
    }

    #[test]
    fn lift_requires_associativity_and_uses_the_top_value() {
        let carrier = Carrier::new(["a"]).unwrap();
        let ms = Multisemigroup::from_named_table(carrier, &[("a", "a", &["a"])]).unwrap();
        let lifted = MultiMultisemigroup::lift(&ms, CardinalBound::Finite(3)).unwrap();
        assert_eq!(
            lifted.mu("a", "a").unwrap().get("a").unwrap().value(),
            CardinalValue::Nat(3)
        );
        let omega_lift = MultiMultisemigroup::lift(&ms, CardinalBound::Omega).unwrap();
        assert_eq!(
            omega_lift.mu("a", "a").unwrap().get("a").unwrap().value(),
            CardinalValue::Omega
        );
        assert!(!omega_lift.is_finitary().finitary);
        assert_eq!(omega_lift.underlying_multisemigroup(), ms);
    }

    #[test]
    fn finitary_requires_omega_bound() {
        let m = singleton2().reduce(CardinalBound::Finite(2)).unwrap();
        let report = m.is_finitary();
        assert!(!report.finitary);
        assert!(report.reasons[0].contains("bound"));
        assert!(matches!(
            m.structure_constants(),
            Err(Error::NotFinitary(_))
        ));
    }

    #[test]
    fn structure_constants_round_trip() {
        let m = singleton2();
        let alg = m.structure_constants().unwrap();
        assert_eq!(alg.constant("a", "a", "a").unwrap(), 2);
        let back = MultiMultisemigroup::from_structure_constants(&alg);
        assert_eq!(back, m);
    }

    #[test]
    fn indicators_multiply_to_table_entries() {
        let m = singleton2();
        let chi = m.indicator("a").unwrap();
        let prod = m.function_multiply(&chi, &chi).unwrap();
        assert_eq!(prod, *m.mu("a", "a").unwrap());
    }

    #[test]
    fn zero_function_annihilates() {
        let m = singleton2();
        let zero = MultiplicityFunction::zero(m.carrier().clone(), m.bound());
        let chi = m.indicator("a").unwrap();
        assert!(m.function_multiply(&zero, &chi).unwrap().is_zero());
        assert!(m.function_multiply(&chi, &zero).unwrap().is_zero());
    }
}
