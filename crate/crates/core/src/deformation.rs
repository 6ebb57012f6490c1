//! Deformation search for finite multisemigroups.
//!
//! A deformation of a multisemigroup `(S, *)` is a finitary multiplicity
//! table whose support pattern is exactly `*`. Not every multisemigroup
//! admits one; the search below decides existence within a multiplicity
//! bound `M`. Entries inside the base supports range over `1..=M`, entries
//! outside are fixed at zero, and the associativity law prunes partial
//! assignments: a triple is checked as soon as every entry it mentions has
//! been assigned.
//!
//! `NoneWithinBound` is evidence, not proof: multiplicities above `M` are
//! never tried. `Obstructed` is a proof of non-deformability at any bound,
//! via the obstruction pair of [`find_obstruction`].

use std::thread;

use crate::cardinal::CardinalBound;
use crate::error::{Error, Result};
use crate::mms::{AssocVerdict, MultiMultisemigroup};
use crate::multiplicity::MultiplicityFunction;
use crate::multisemigroup::Multisemigroup;

pub const DEFAULT_CARRIER_CAP: usize = 6;
pub const DEFAULT_MULTIPLICITY_CAP: u64 = 8;

/// Scan for a pair of distinct elements `(a, b)` with `a*a = {a}` and
/// `{a, b}` contained in `a*b` or in `b*a`. Such a pair makes the two
/// evaluations of the word `a a b` (or `b a a`) disagree at `a` for every
/// candidate table, so the multisemigroup admits no finitary deformation.
/// Returns the first such pair in lexicographic order; `None` is
/// inconclusive.
pub fn find_obstruction(ms: &Multisemigroup) -> Option<(String, String)> {
    let carrier = ms.carrier();
    let n = carrier.len();
    for a in 0..n {
        let aa = ms.product_idx(a, a);
        if !(aa.len() == 1 && aa.contains(a)) {
            continue;
        }
        for b in 0..n {
            if a == b {
                continue;
            }
            let ab = ms.product_idx(a, b);
            let ba = ms.product_idx(b, a);
            let pair_in = |set: &crate::multisemigroup::ElemSet| set.contains(a) && set.contains(b);
            if pair_in(ab) || pair_in(ba) {
                return Some((carrier.name(a).to_string(), carrier.name(b).to_string()));
            }
        }
    }
    None
}

/// Whether `candidate` is a deformation of `base`, with one reason per
/// failed condition: the candidate must be finitary, must satisfy the
/// associativity law, and the support of every table entry must equal the
/// base product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationCheck {
    pub is_deformation: bool,
    pub reasons: Vec<String>,
}

pub fn is_deformation(
    candidate: &MultiMultisemigroup,
    base: &Multisemigroup,
) -> Result<DeformationCheck> {
    if !candidate.carrier().same_as(base.carrier()) {
        return Err(Error::CarrierMismatch);
    }
    let mut reasons = Vec::new();
    let finitary = candidate.is_finitary();
    if !finitary.finitary {
        reasons.extend(finitary.reasons);
    }
    if let AssocVerdict::Counterexample(cx) = candidate.verify_associativity() {
        reasons.push(format!(
            "associativity law fails at ({}, {}, {}): element {} has {} vs {}",
            cx.r, cx.s, cx.t, cx.element, cx.lhs, cx.rhs
        ));
    }
    let carrier = candidate.carrier();
    let n = carrier.len();
    'support: for s in 0..n {
        for t in 0..n {
            let mu = candidate.mu(carrier.name(s), carrier.name(t))?;
            let base_set = base.product_idx(s, t);
            let support_matches = mu.support().all(|(r, _)| base_set.contains(r))
                && base_set.iter().all(|r| !mu.value_at(r).is_zero());
            if !support_matches {
                reasons.push(format!(
                    "support mismatch at ({}, {}): table supports {{{}}}, base product {{{}}}",
                    carrier.name(s),
                    carrier.name(t),
                    mu.support_names().join(", "),
                    base_set
                        .iter()
                        .map(|r| carrier.name(r))
                        .collect::<Vec<_>>()
                        .join(", ")
                ));
                break 'support;
            }
        }
    }
    Ok(DeformationCheck {
        is_deformation: reasons.is_empty(),
        reasons,
    })
}

#[derive(Debug, Clone)]
pub struct DeformationProblem {
    base: Multisemigroup,
    max_multiplicity: u64,
    obstruction_check: bool,
    parallelism: usize,
    carrier_cap: usize,
    multiplicity_cap: u64,
}

impl DeformationProblem {
    pub fn new(base: Multisemigroup, max_multiplicity: u64) -> Self {
        DeformationProblem {
            base,
            max_multiplicity,
            obstruction_check: true,
            parallelism: 1,
            carrier_cap: DEFAULT_CARRIER_CAP,
            multiplicity_cap: DEFAULT_MULTIPLICITY_CAP,
        }
    }

    /// Skip the obstruction scan and search exhaustively even when a proof of
    /// non-deformability exists.
    pub fn without_obstruction_check(mut self) -> Self {
        self.obstruction_check = false;
        self
    }

    /// Split the top-level value choices across this many workers. Results
    /// are deterministic for a fixed worker count; node counts are only
    /// comparable between runs with the same worker count.
    pub fn with_parallelism(mut self, workers: usize) -> Self {
        self.parallelism = workers.max(1);
        self
    }

    pub fn with_carrier_cap(mut self, cap: usize) -> Self {
        self.carrier_cap = cap;
        self
    }

    pub fn with_multiplicity_cap(mut self, cap: u64) -> Self {
        self.multiplicity_cap = cap;
        self
    }

    pub fn base(&self) -> &Multisemigroup {
        &self.base
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.max_multiplicity
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeformationOutcome {
    Found(MultiMultisemigroup),
    NoneWithinBound,
    Obstructed { a: String, b: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationResult {
    pub outcome: DeformationOutcome,
    pub max_multiplicity: u64,
    /// Number of value assignments attempted.
    pub nodes: u64,
}

struct SearchSpace {
    n: usize,
    max_multiplicity: u64,
    /// Support of each pair, pairs row-major, supports ascending.
    supports: Vec<Vec<usize>>,
    /// Variables in assignment order: (pair, target element).
    vars: Vec<(usize, usize)>,
    /// Triples to check once the variable at this index is assigned.
    triggers: Vec<Vec<(usize, usize, usize)>>,
}

impl SearchSpace {
    fn build(base: &Multisemigroup, max_multiplicity: u64) -> Self {
        let n = base.carrier().len();
        let mut supports = Vec::with_capacity(n * n);
        let mut vars = Vec::new();
        let mut pair_last_var = vec![None; n * n];
        for s in 0..n {
            for t in 0..n {
                let support: Vec<usize> = base.product_idx(s, t).iter().collect();
                for &r in &support {
                    vars.push((s * n + t, r));
                    pair_last_var[s * n + t] = Some(vars.len() - 1);
                }
                supports.push(support);
            }
        }
        let mut triggers = vec![Vec::new(); vars.len()];
        for r in 0..n {
            for s in 0..n {
                for t in 0..n {
                    // The law at (r, s, t) mentions the pairs (s,t), (r,i) for
                    // i in supp(s,t), (r,s), and (j,t) for j in supp(r,s).
                    let mut latest: Option<usize> = None;
                    let mut note = |pair: usize| {
                        if let Some(v) = pair_last_var[pair] {
                            latest = Some(latest.map_or(v, |old: usize| old.max(v)));
                        }
                    };
                    note(s * n + t);
                    note(r * n + s);
                    for &i in &supports[s * n + t] {
                        note(r * n + i);
                    }
                    for &j in &supports[r * n + s] {
                        note(j * n + t);
                    }
                    // Triples that mention no variables are identically 0 = 0.
                    if let Some(v) = latest {
                        triggers[v].push((r, s, t));
                    }
                }
            }
        }
        SearchSpace {
            n,
            max_multiplicity,
            supports,
            vars,
            triggers,
        }
    }
}

struct Searcher<'a> {
    space: &'a SearchSpace,
    /// Dense value table, indexed (pair * n + r); unassigned entries are 0.
    values: Vec<u64>,
    nodes: u64,
}

impl<'a> Searcher<'a> {
    fn new(space: &'a SearchSpace) -> Self {
        Searcher {
            space,
            values: vec![0; space.n * space.n * space.n],
            nodes: 0,
        }
    }

    fn value(&self, pair: usize, r: usize) -> u64 {
        self.values[pair * self.space.n + r]
    }

    fn law_holds(&self, (r, s, t): (usize, usize, usize)) -> bool {
        let n = self.space.n;
        for u in 0..n {
            let mut lhs = 0u64;
            for &i in &self.space.supports[s * n + t] {
                lhs += self.value(s * n + t, i) * self.value(r * n + i, u);
            }
            let mut rhs = 0u64;
            for &j in &self.space.supports[r * n + s] {
                rhs += self.value(r * n + s, j) * self.value(j * n + t, u);
            }
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    /// Depth-first search over variables from `depth` on, values ascending.
    /// `top_values` restricts the choices of the first variable; deeper
    /// variables always range over `1..=M`.
    fn dfs(&mut self, depth: usize, top_values: &[u64]) -> bool {
        if depth == self.space.vars.len() {
            return true;
        }
        let (pair, r) = self.space.vars[depth];
        let n = self.space.n;
        let choices: Vec<u64> = if depth == 0 && !top_values.is_empty() {
            top_values.to_vec()
        } else {
            (1..=self.space.max_multiplicity).collect()
        };
        for v in choices {
            self.values[pair * n + r] = v;
            self.nodes += 1;
            if self.space.triggers[depth].iter().all(|&t| self.law_holds(t))
                && self.dfs(depth + 1, top_values)
            {
                return true;
            }
        }
        self.values[pair * n + r] = 0;
        false
    }
}

fn assignment_to_mms(
    base: &Multisemigroup,
    space: &SearchSpace,
    values: &[u64],
) -> Result<MultiMultisemigroup> {
    let carrier = base.carrier().clone();
    let n = space.n;
    let mut table = Vec::with_capacity(n * n);
    for pair in 0..n * n {
        let entries = space.supports[pair]
            .iter()
            .map(|&r| {
                (
                    r as u32,
                    crate::cardinal::CardinalValue::Nat(values[pair * n + r]),
                )
            })
            .collect();
        table.push(MultiplicityFunction::from_sorted_entries(
            carrier.clone(),
            CardinalBound::Omega,
            entries,
        ));
    }
    MultiMultisemigroup::from_table(carrier, CardinalBound::Omega, table)
}

/// Decide whether the base admits a deformation with multiplicities at most
/// `M`. Returns the lexicographically first table found (variables ordered by
/// `(s, t, r)` in carrier order, values ascending), or `NoneWithinBound`, or
/// an obstruction certificate. Identical problems yield identical results and
/// node counts.
pub fn search_deformation(problem: &DeformationProblem) -> Result<DeformationResult> {
    if problem.max_multiplicity == 0 {
        return Err(Error::InvalidMaxMultiplicity);
    }
    let n = problem.base.carrier().len();
    if n > problem.carrier_cap {
        return Err(Error::CarrierTooLarge {
            size: n,
            cap: problem.carrier_cap,
        });
    }
    if problem.max_multiplicity > problem.multiplicity_cap {
        return Err(Error::MultiplicityTooLarge {
            value: problem.max_multiplicity,
            cap: problem.multiplicity_cap,
        });
    }
    if let Some(cx) = problem.base.check_associativity() {
        return Err(Error::NotAssociative {
            a: cx.a,
            b: cx.b,
            c: cx.c,
        });
    }
    if problem.obstruction_check {
        if let Some((a, b)) = find_obstruction(&problem.base) {
            return Ok(DeformationResult {
                outcome: DeformationOutcome::Obstructed { a, b },
                max_multiplicity: problem.max_multiplicity,
                nodes: 0,
            });
        }
    }

    let space = SearchSpace::build(&problem.base, problem.max_multiplicity);
    let (solution, nodes) = if space.vars.is_empty() {
        // Nothing to assign: the all-zero table is the unique candidate.
        (Some(vec![0; space.n * space.n * space.n]), 0)
    } else if problem.parallelism <= 1 || space.vars.len() < 2 {
        let mut searcher = Searcher::new(&space);
        let found = searcher.dfs(0, &[]);
        (found.then_some(searcher.values), searcher.nodes)
    } else {
        // Partition the first variable's values round-robin across workers.
        // Workers do not communicate, so results and node counts are
        // deterministic for a fixed worker count.
        let workers = problem.parallelism.min(problem.max_multiplicity as usize);
        // Per worker: the first top value that led to a solution (with the
        // full assignment), plus the nodes explored.
        type WorkerResult = (Option<(u64, Vec<u64>)>, u64);
        let results: Vec<WorkerResult> = thread::scope(|scope| {
            let space = &space;
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    scope.spawn(move || {
                        let values: Vec<u64> = (1..=space.max_multiplicity)
                            .filter(|v| (v - 1) as usize % workers == w)
                            .collect();
                        let mut searcher = Searcher::new(space);
                        let mut found = None;
                        for &v in &values {
                            if searcher.dfs(0, &[v]) {
                                found = Some((v, searcher.values.clone()));
                                break;
                            }
                        }
                        (found, searcher.nodes)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .collect()
        });
        let nodes = results.iter().map(|(_, n)| n).sum();
        let best = results
            .into_iter()
            .filter_map(|(found, _)| found)
            .min_by_key(|(top, _)| *top);
        (best.map(|(_, values)| values), nodes)
    };

    match solution {
        Some(values) => {
            let mms = assignment_to_mms(&problem.base, &space, &values)?;
            let mms = mms.validate().map_err(|cx| {
                Error::Internal(format!(
                    "search produced a table violating the law at ({}, {}, {})",
                    cx.r, cx.s, cx.t
                ))
            })?;
            let check = is_deformation(&mms, &problem.base)?;
            if !check.is_deformation {
                return Err(Error::Internal(format!(
                    "search produced a non-deformation: {}",
                    check.reasons.join("; ")
                )));
            }
            Ok(DeformationResult {
                outcome: DeformationOutcome::Found(mms),
                max_multiplicity: problem.max_multiplicity,
                nodes,
            })
        }
        None => Ok(DeformationResult {
            outcome: DeformationOutcome::NoneWithinBound,
            max_multiplicity: problem.max_multiplicity,
            nodes,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::Carrier;
    use crate::catalog;

    #[test]
    fn obstruction_found_on_the_two_element_fixture() {
        let ms = catalog::obstructed_fixture();
        assert_eq!(find_obstruction(&ms), Some(("a".into(), "b".into())));
    }

    #[test]
    fn no_obstruction_on_the_s3_table() {
        assert_eq!(find_obstruction(&catalog::s3_multisemigroup()), None);
    }

    #[test]
    fn groups_as_multisemigroups_are_unobstructed() {
        // Z/3 with singleton products: no pair can contain two elements.
        let carrier = Carrier::new(["0", "1", "2"]).unwrap();
        let ms = Multisemigroup::from_named_table(
            carrier,
            &[
                ("0", "0", &["0"]),
                ("0", "1", &["1"]),
                ("0", "2", &["2"]),
                ("1", "0", &["1"]),
                ("1", "1", &["2"]),
                ("1", "2", &["0"]),
                ("2", "0", &["2"]),
                ("2", "1", &["0"]),
                ("2", "2", &["1"]),
            ],
        )
        .unwrap();
        assert!(ms.is_associative());
        assert_eq!(find_obstruction(&ms), None);
    }

    #[test]
    fn obstructed_base_short_circuits() {
        let problem = DeformationProblem::new(catalog::obstructed_fixture(), 4);
        let result = search_deformation(&problem).unwrap();
        assert_eq!(
            result.outcome,
            DeformationOutcome::Obstructed {
                a: "a".into(),
                b: "b".into()
            }
        );
        assert_eq!(result.nodes, 0);
    }

    #[test]
    fn exhaustive_search_confirms_the_obstruction() {
        let problem =
            DeformationProblem::new(catalog::obstructed_fixture(), 4).without_obstruction_check();
        let result = search_deformation(&problem).unwrap();
        assert_eq!(result.outcome, DeformationOutcome::NoneWithinBound);
        assert!(result.nodes > 0);
    }

    #[test]
    fn is_deformation_accepts_the_s3_pair() {
        let candidate = catalog::s3_kl_table();
        let base = catalog::s3_multisemigroup();
        let check = is_deformation(&candidate, &base).unwrap();
        assert!(check.is_deformation, "{:?}", check.reasons);
    }

    #[test]
    fn omega_lift_is_not_a_deformation() {
        let base = catalog::s3_multisemigroup();
        let lifted = MultiMultisemigroup::lift(&base, CardinalBound::Omega).unwrap();
        let check = is_deformation(&lifted, &base).unwrap();
        assert!(!check.is_deformation);
        assert!(check.reasons.iter().any(|r| r.contains("omega")));
    }

    #[test]
    fn zeroed_support_is_reported() {
        let base = catalog::s3_multisemigroup();
        // Copy the S3 table but drop one support element from mu[s, ts].
        let full = catalog::s3_kl_table();
        let carrier = full.carrier().clone();
        let n = carrier.len();
        let s_idx = carrier.index_of("s").unwrap();
        let ts_idx = carrier.index_of("ts").unwrap();
        let mut rows = Vec::with_capacity(n * n);
        for s in 0..n {
            for t in 0..n {
                let mut row: Vec<(usize, u64)> = full
                    .mu(carrier.name(s), carrier.name(t))
                    .unwrap()
                    .support()
                    .map(|(r, v)| match v {
                        crate::cardinal::CardinalValue::Nat(m) => (r, m),
                        crate::cardinal::CardinalValue::Omega => unreachable!(),
                    })
                    .collect();
                if s == s_idx && t == ts_idx {
                    row.retain(|&(r, _)| r != s_idx);
                }
                rows.push(row);
            }
        }
        let candidate =
            MultiMultisemigroup::from_index_rows(carrier, CardinalBound::Omega, rows).unwrap();
        let check = is_deformation(&candidate, &base).unwrap();
        assert!(!check.is_deformation);
        assert!(check.reasons.iter().any(|r| r.contains("support mismatch")));
    }

    #[test]
    fn carrier_cap_is_enforced() {
        let problem = DeformationProblem::new(catalog::s3_multisemigroup(), 6).with_carrier_cap(4);
        assert!(matches!(
            search_deformation(&problem),
            Err(Error::CarrierTooLarge { .. })
        ));
    }

    #[test]
    fn found_solution_on_the_s3_base() {
        let problem = DeformationProblem::new(catalog::s3_multisemigroup(), 6);
        let result = search_deformation(&problem).unwrap();
        match result.outcome {
            DeformationOutcome::Found(m) => {
                let check = is_deformation(&m, &catalog::s3_multisemigroup()).unwrap();
                assert!(check.is_deformation, "{:?}", check.reasons);
            }
            other => panic!("expected Found, got {other:?}"),
        }
    }

    #[test]
    fn parallel_search_agrees_with_sequential() {
        let base = catalog::s3_multisemigroup();
        let seq = search_deformation(&DeformationProblem::new(base.clone(), 3)).unwrap();
        let par =
            search_deformation(&DeformationProblem::new(base, 3).with_parallelism(3)).unwrap();
        match (&seq.outcome, &par.outcome) {
            (DeformationOutcome::Found(a), DeformationOutcome::Found(b)) => assert_eq!(a, b),
            (a, b) => assert_eq!(a, b),
        }
    }

    #[test]
    fn determinism_of_results_and_node_counts() {
        let problem =
            DeformationProblem::new(catalog::obstructed_fixture(), 3).without_obstruction_check();
        let first = search_deformation(&problem).unwrap();
        let second = search_deformation(&problem).unwrap();
        assert_eq!(first, second);
    }
}
