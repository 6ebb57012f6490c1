//! A fixed family of complete semiring instances and an axiom checker.
//!
//! The shipped instances are the Boolean semiring, its dual, the saturating
//! cardinal semirings `Card_k`, the min-plus tropical semiring on the
//! naturals with infinity, and the max-plus semiring on the naturals with
//! both infinities (max-plus needs a bottom element as additive identity,
//! otherwise absorption fails).
//!
//! The checker verifies the unital-semiring axioms: commutative additive
//! monoid, multiplicative monoid, two-sided distributivity, absorbing zero,
//! and zero != one. Carriers with at most 64 elements are checked
//! exhaustively; infinite carriers are sampled deterministically from a seed.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::fmt;

use crate::cardinal::{CardinalBound, CardinalValue};
use crate::error::{Error, Result};

/// An element of one of the shipped carriers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SemiringElem {
    NegInf,
    Fin(u64),
    Inf,
}

impl fmt::Display for SemiringElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemiringElem::NegInf => write!(f, "-inf"),
            SemiringElem::Fin(m) => write!(f, "{m}"),
            SemiringElem::Inf => write!(f, "inf"),
        }
    }
}

/// Operations and carrier description; implemented by the shipped instances
/// and by test tables with injected faults.
pub trait SemiringOps {
    fn name(&self) -> String;
    fn add(&self, a: SemiringElem, b: SemiringElem) -> SemiringElem;
    fn mul(&self, a: SemiringElem, b: SemiringElem) -> SemiringElem;
    fn zero(&self) -> SemiringElem;
    fn one(&self) -> SemiringElem;
    /// All elements, if the carrier is finite.
    fn elements(&self) -> Option<Vec<SemiringElem>>;
    /// A deterministic sample pool for infinite carriers.
    fn sample_pool(&self, max_fin: u64) -> Vec<SemiringElem>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemiringInstance {
    Boolean,
    DualBoolean,
    Card(CardinalBound),
    TropicalMin,
    TropicalMaxPlus,
}

impl SemiringInstance {
    /// Parse `boolean`, `dual-boolean`, `card:<n>`, `card:omega`,
    /// `tropical-min`, or `tropical-max-plus`.
    pub fn parse(token: &str) -> Result<Self> {
        match token {
            "boolean" => Ok(SemiringInstance::Boolean),
            "dual-boolean" => Ok(SemiringInstance::DualBoolean),
            "tropical-min" => Ok(SemiringInstance::TropicalMin),
            "tropical-max-plus" => Ok(SemiringInstance::TropicalMaxPlus),
            _ => {
                if let Some(bound) = token.strip_prefix("card:") {
                    Ok(SemiringInstance::Card(CardinalBound::parse(bound)?))
                } else {
                    Err(Error::Parse(format!(
                        "unknown semiring `{token}`; expected boolean, dual-boolean, \
                         card:<n>, card:omega, tropical-min or tropical-max-plus"
                    )))
                }
            }
        }
    }

    fn card_value(e: SemiringElem) -> CardinalValue {
        match e {
            SemiringElem::Fin(m) => CardinalValue::Nat(m),
            SemiringElem::Inf => CardinalValue::Omega,
            SemiringElem::NegInf => unreachable!("-inf is not a cardinal"),
        }
    }

    fn card_elem(v: CardinalValue) -> SemiringElem {
        match v {
            CardinalValue::Nat(m) => SemiringElem::Fin(m),
            CardinalValue::Omega => SemiringElem::Inf,
        }
    }
}

impl SemiringOps for SemiringInstance {
    fn name(&self) -> String {
        match self {
            SemiringInstance::Boolean => "boolean".to_string(),
            SemiringInstance::DualBoolean => "dual-boolean".to_string(),
            SemiringInstance::Card(bound) => format!("card:{bound}"),
            SemiringInstance::TropicalMin => "tropical-min".to_string(),
            SemiringInstance::TropicalMaxPlus => "tropical-max-plus".to_string(),
        }
    }

    fn add(&self, a: SemiringElem, b: SemiringElem) -> SemiringElem {
        match self {
            SemiringInstance::Boolean => a.max(b),
            SemiringInstance::DualBoolean => a.min(b),
            SemiringInstance::Card(bound) => {
                Self::card_elem(Self::card_value(a).add_in(Self::card_value(b), *bound))
            }
            SemiringInstance::TropicalMin => a.min(b),
            SemiringInstance::TropicalMaxPlus => a.max(b),
        }
    }

    fn mul(&self, a: SemiringElem, b: SemiringElem) -> SemiringElem {
        use SemiringElem::*;
        match self {
            SemiringInstance::Boolean => a.min(b),
            SemiringInstance::DualBoolean => a.max(b),
            SemiringInstance::Card(bound) => Self::card_elem(
                Self::card_value(a).mul_in(Self::card_value(b), *bound),
            ),
            // Saturating addition: inf absorbs.
            SemiringInstance::TropicalMin => match (a, b) {
                (Inf, _) | (_, Inf) => Inf,
                (Fin(x), Fin(y)) => Fin(x + y),
                (NegInf, _) | (_, NegInf) => unreachable!("-inf is not in the min-plus carrier"),
            },
            // Saturating addition with -inf absorbing (it is the zero).
            SemiringInstance::TropicalMaxPlus => match (a, b) {
                (NegInf, _) | (_, NegInf) => NegInf,
                (Inf, _) | (_, Inf) => Inf,
                (Fin(x), Fin(y)) => Fin(x + y),
            },
        }
    }

    fn zero(&self) -> SemiringElem {
        match self {
            SemiringInstance::Boolean => SemiringElem::Fin(0),
            SemiringInstance::DualBoolean => SemiringElem::Fin(1),
            SemiringInstance::Card(_) => SemiringElem::Fin(0),
            SemiringInstance::TropicalMin => SemiringElem::Inf,
            SemiringInstance::TropicalMaxPlus => SemiringElem::NegInf,
        }
    }

    fn one(&self) -> SemiringElem {
        match self {
            SemiringInstance::Boolean => SemiringElem::Fin(1),
            SemiringInstance::DualBoolean => SemiringElem::Fin(0),
            SemiringInstance::Card(_) => SemiringElem::Fin(1),
            SemiringInstance::TropicalMin => SemiringElem::Fin(0),
            SemiringInstance::TropicalMaxPlus => SemiringElem::Fin(0),
        }
    }

    fn elements(&self) -> Option<Vec<SemiringElem>> {
        match self {
            SemiringInstance::Boolean | SemiringInstance::DualBoolean => {
                Some(vec![SemiringElem::Fin(0), SemiringElem::Fin(1)])
            }
            SemiringInstance::Card(CardinalBound::Finite(n)) => {
                Some((0..=*n).map(SemiringElem::Fin).collect())
            }
            _ => None,
        }
    }

    fn sample_pool(&self, max_fin: u64) -> Vec<SemiringElem> {
        let mut pool: Vec<SemiringElem> = (0..=max_fin).map(SemiringElem::Fin).collect();
        match self {
            SemiringInstance::Card(CardinalBound::Omega) | SemiringInstance::TropicalMin => {
                pool.push(SemiringElem::Inf);
            }
            SemiringInstance::TropicalMaxPlus => {
                pool.push(SemiringElem::Inf);
                pool.push(SemiringElem::NegInf);
            }
            _ => {}
        }
        pool
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    AddCommutative,
    AddAssociative,
    AddIdentity,
    MulAssociative,
    MulIdentity,
    LeftDistributive,
    RightDistributive,
    ZeroAbsorbing,
    ZeroNeqOne,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::AddCommutative => "add_commutative",
            Axiom::AddAssociative => "add_associative",
            Axiom::AddIdentity => "add_identity",
            Axiom::MulAssociative => "mul_associative",
            Axiom::MulIdentity => "mul_identity",
            Axiom::LeftDistributive => "left_distributive",
            Axiom::RightDistributive => "right_distributive",
            Axiom::ZeroAbsorbing => "zero_absorbing",
            Axiom::ZeroNeqOne => "zero_neq_one",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: Vec<SemiringElem>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub instance: String,
    pub exhaustive: bool,
    pub pool_size: usize,
    pub checks: u64,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Sampling parameters for infinite carriers; ignored when the carrier is
/// small enough to enumerate.
#[derive(Debug, Clone, Copy)]
pub struct SamplingBudget {
    /// Finite values 0..=max_fin enter the sample pool.
    pub max_fin: u64,
    /// Number of random triples per ternary axiom.
    pub triples: usize,
    pub seed: u64,
}

impl Default for SamplingBudget {
    fn default() -> Self {
        SamplingBudget {
            max_fin: 12,
            triples: 4096,
            seed: 0x6d75_6c74,
        }
    }
}

const EXHAUSTIVE_LIMIT: usize = 64;

/// Check the unital-semiring axioms over the carrier (exhaustively when it
/// has at most 64 elements, sampled otherwise). The report records one
/// witness per failed axiom.
pub fn check_semiring_axioms<S: SemiringOps>(sr: &S, budget: &SamplingBudget) -> AxiomReport {
    let (pool, exhaustive) = match sr.elements() {
        Some(elems) if elems.len() <= EXHAUSTIVE_LIMIT => (elems, true),
        Some(elems) => (elems, false),
        None => (sr.sample_pool(budget.max_fin), false),
    };
    let mut checks: u64 = 0;
    let mut failures: Vec<AxiomFailure> = Vec::new();
    let record = |axiom: Axiom, witness: Vec<SemiringElem>, failures: &mut Vec<AxiomFailure>| {
        if !failures.iter().any(|f| f.axiom == axiom) {
            failures.push(AxiomFailure { axiom, witness });
        }
    };

    let zero = sr.zero();
    let one = sr.one();
    checks += 1;
    if zero == one {
        record(Axiom::ZeroNeqOne, vec![zero], &mut failures);
    }

    // Unary and binary axioms over the whole pool.
    for &a in &pool {
        checks += 4;
        if sr.add(zero, a) != a || sr.add(a, zero) != a {
            record(Axiom::AddIdentity, vec![a], &mut failures);
        }
        if sr.mul(one, a) != a || sr.mul(a, one) != a {
            record(Axiom::MulIdentity, vec![a], &mut failures);
        }
        if sr.mul(zero, a) != zero || sr.mul(a, zero) != zero {
            record(Axiom::ZeroAbsorbing, vec![a], &mut failures);
        }
        for &b in &pool {
            checks += 1;
            if sr.add(a, b) != sr.add(b, a) {
                record(Axiom::AddCommutative, vec![a, b], &mut failures);
            }
        }
    }

    let ternary = |a: SemiringElem, b: SemiringElem, c: SemiringElem,
                       checks: &mut u64,
                       failures: &mut Vec<AxiomFailure>| {
        *checks += 4;
        if sr.add(sr.add(a, b), c) != sr.add(a, sr.add(b, c)) {
            record(Axiom::AddAssociative, vec![a, b, c], failures);
        }
        if sr.mul(sr.mul(a, b), c) != sr.mul(a, sr.mul(b, c)) {
            record(Axiom::MulAssociative, vec![a, b, c], failures);
        }
        if sr.mul(a, sr.add(b, c)) != sr.add(sr.mul(a, b), sr.mul(a, c)) {
            record(Axiom::LeftDistributive, vec![a, b, c], failures);
        }
        if sr.mul(sr.add(a, b), c) != sr.add(sr.mul(a, c), sr.mul(b, c)) {
            record(Axiom::RightDistributive, vec![a, b, c], failures);
        }
    };

    if exhaustive {
        for &a in &pool {
            for &b in &pool {
                for &c in &pool {
                    ternary(a, b, c, &mut checks, &mut failures);
                }
            }
        }
    } else {
        let mut rng = StdRng::seed_from_u64(budget.seed);
        for _ in 0..budget.triples {
            let a = pool[rng.random_range(0..pool.len())];
            let b = pool[rng.random_range(0..pool.len())];
            let c = pool[rng.random_range(0..pool.len())];
            ternary(a, b, c, &mut checks, &mut failures);
        }
    }

    AxiomReport {
        instance: sr.name(),
        exhaustive,
        pool_size: pool.len(),
        checks,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    #[test]
    fn all_shipped_instances_pass() {
        let budget = SamplingBudget::default();
        let mut instances = vec![
            SemiringInstance::Boolean,
            SemiringInstance::DualBoolean,
            SemiringInstance::Card(CardinalBound::Omega),
            SemiringInstance::TropicalMin,
            SemiringInstance::TropicalMaxPlus,
        ];
        for n in 1..=6 {
            instances.push(SemiringInstance::Card(CardinalBound::Finite(n)));
        }
        for instance in instances {
            let report = check_semiring_axioms(&instance, &budget);
            assert!(
                report.passed(),
                "{} failed: {:?}",
                report.instance,
                report.failures
            );
        }
    }

    #[test]
    fn finite_carriers_are_checked_exhaustively() {
        let report = check_semiring_axioms(
            &SemiringInstance::Card(CardinalBound::Finite(4)),
            &SamplingBudget::default(),
        );
        assert!(report.exhaustive);
        assert_eq!(report.pool_size, 5);
    }

    /// A finite table with explicit operation maps, for fault injection.
    struct TableSemiring {
        elements: Vec<SemiringElem>,
        add: HashMap<(SemiringElem, SemiringElem), SemiringElem>,
        mul: HashMap<(SemiringElem, SemiringElem), SemiringElem>,
        zero: SemiringElem,
        one: SemiringElem,
    }

    impl TableSemiring {
        fn from_instance(instance: SemiringInstance) -> Self {
            let elements = instance.elements().expect("finite instance");
            let mut add = HashMap::new();
            let mut mul = HashMap::new();
            for &a in &elements {
                for &b in &elements {
                    add.insert((a, b), instance.add(a, b));
                    mul.insert((a, b), instance.mul(a, b));
                }
            }
            TableSemiring {
                elements,
                add,
                mul,
                zero: instance.zero(),
                one: instance.one(),
            }
        }
    }

    impl SemiringOps for TableSemiring {
        fn name(&self) -> String {
            "table".to_string()
        }
        fn add(&self, a: SemiringElem, b: SemiringElem) -> SemiringElem {
            self.add[&(a, b)]
        }
        fn mul(&self, a: SemiringElem, b: SemiringElem) -> SemiringElem {
            self.mul[&(a, b)]
        }
        fn zero(&self) -> SemiringElem {
            self.zero
        }
        fn one(&self) -> SemiringElem {
            self.one
        }
        fn elements(&self) -> Option<Vec<SemiringElem>> {
            Some(self.elements.clone())
        }
        fn sample_pool(&self, _max_fin: u64) -> Vec<SemiringElem> {
            self.elements.clone()
        }
    }

    #[test]
    fn corrupting_one_plus_one_in_card_two_breaks_distributivity() {
        // In Card_2, setting 1 + 1 = 0 makes 2*(1+1) = 0 while 2*1 + 2*1 = 2.
        let mut table =
            TableSemiring::from_instance(SemiringInstance::Card(CardinalBound::Finite(2)));
        table
            .add
            .insert((SemiringElem::Fin(1), SemiringElem::Fin(1)), SemiringElem::Fin(0));
        let report = check_semiring_axioms(&table, &SamplingBudget::default());
        assert!(!report.passed());
        let axioms: Vec<Axiom> = report.failures.iter().map(|f| f.axiom).collect();
        assert!(
            axioms.contains(&Axiom::LeftDistributive)
                || axioms.contains(&Axiom::RightDistributive),
            "expected a distributivity failure, got {axioms:?}"
        );
        // Witnesses really violate the recorded axiom.
        for failure in &report.failures {
            if failure.axiom == Axiom::LeftDistributive {
                let [a, b, c] = failure.witness[..] else {
                    panic!("ternary witness expected")
                };
                assert_ne!(
                    table.mul(a, table.add(b, c)),
                    table.add(table.mul(a, b), table.mul(a, c))
                );
            }
        }
    }

    #[test]
    fn corrupting_the_additive_identity_is_caught() {
        let mut table = TableSemiring::from_instance(SemiringInstance::Boolean);
        table
            .add
            .insert((SemiringElem::Fin(0), SemiringElem::Fin(1)), SemiringElem::Fin(0));
        let report = check_semiring_axioms(&table, &SamplingBudget::default());
        let axioms: Vec<Axiom> = report.failures.iter().map(|f| f.axiom).collect();
        assert!(axioms.contains(&Axiom::AddIdentity), "got {axioms:?}");
    }

    #[test]
    fn boolean_tables_match_card_one() {
        let boolean = SemiringInstance::Boolean;
        let card1 = SemiringInstance::Card(CardinalBound::Finite(1));
        let elems = [SemiringElem::Fin(0), SemiringElem::Fin(1)];
        for a in elems {
            for b in elems {
                assert_eq!(boolean.add(a, b), card1.add(a, b));
                assert_eq!(boolean.mul(a, b), card1.mul(a, b));
            }
        }
        assert_eq!(boolean.zero(), card1.zero());
        assert_eq!(boolean.one(), card1.one());
    }

    #[test]
    fn instance_names_round_trip() {
        for token in [
            "boolean",
            "dual-boolean",
            "card:4",
            "card:omega",
            "tropical-min",
            "tropical-max-plus",
        ] {
            let instance = SemiringInstance::parse(token).unwrap();
            assert_eq!(instance.name(), token);
        }
        assert!(SemiringInstance::parse("card:0").is_err());
        assert!(SemiringInstance::parse("yes").is_err());
    }
}
