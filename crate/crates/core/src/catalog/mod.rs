//! Generators for the concrete example families.
//!
//! Each family is built from first principles (group-algebra arithmetic,
//! transformation composition, dimension counting) rather than from stored
//! tables. The one hard-coded table, [`s3_kl_table`], exists as an
//! independent cross-check for the computed dihedral route.

pub mod catalan;
pub mod dihedral;
pub mod projective;

pub use catalan::{catalan_monoid_mms, enumerate_maps, CatalanMap};
pub use dihedral::{kl_multisemigroup, DihedralElement, DihedralGroup, GroupAlgebraElement};
pub use projective::{projective_functor_mms, DimensionMatrix};

use crate::cardinal::{Cardinal, CardinalValue};
use crate::carrier::Carrier;
use crate::error::Result;
use crate::mms::{MultiMultisemigroup, NamedEntry};
use crate::multiplicity::MultiplicityFunction;
use crate::multisemigroup::Multisemigroup;

/// The one-element table `{a}` with `mu[a,a](a)` equal to a chosen
/// multiplicity. Always satisfies the associativity law: both sides of every
/// instance equal the square of the multiplicity.
pub fn singleton(lambda: Cardinal) -> Result<MultiMultisemigroup> {
    let carrier = Carrier::new(["a"])?;
    let bound = lambda.bound();
    let f = if lambda.is_zero() {
        MultiplicityFunction::zero(carrier.clone(), bound)
    } else {
        MultiplicityFunction::from_named_values(carrier.clone(), bound, [("a", lambda.value())])?
    };
    MultiMultisemigroup::from_table(carrier, bound, vec![f])
}

/// The two-element multisemigroup with `a*a = {a}` and every product
/// involving `b` equal to `{a, b}`. It satisfies the multisemigroup axiom but
/// admits no finitary deformation: evaluating the word `a a b` from the two
/// ends forces contradictory multiplicities at `a`.
pub fn obstructed_fixture() -> Multisemigroup {
    let carrier = Carrier::new(["a", "b"]).expect("fixed carrier");
    Multisemigroup::from_named_table(
        carrier,
        &[
            ("a", "a", &["a"]),
            ("a", "b", &["a", "b"]),
            ("b", "a", &["a", "b"]),
            ("b", "b", &["a", "b"]),
        ],
    )
    .expect("fixed table")
}

/// The Kazhdan-Lusztig structure-constant table of the symmetric group `S3`
/// (the dihedral group of order 6), transcribed literally. This is the
/// ground-truth cross-check: [`kl_multisemigroup`]`(3)` must reproduce it
/// entry for entry.
pub fn s3_kl_table() -> MultiMultisemigroup {
    let carrier = Carrier::new(["e", "s", "t", "st", "ts", "sts"]).expect("fixed carrier");
    let entries: &[NamedEntry] = &[
        ("e", "e", &[("e", 1)]),
        ("e", "s", &[("s", 1)]),
        ("e", "t", &[("t", 1)]),
        ("e", "st", &[("st", 1)]),
        ("e", "ts", &[("ts", 1)]),
        ("e", "sts", &[("sts", 1)]),
        ("s", "e", &[("s", 1)]),
        ("s", "s", &[("s", 2)]),
        ("s", "t", &[("st", 1)]),
        ("s", "st", &[("st", 2)]),
        ("s", "ts", &[("sts", 1), ("s", 1)]),
        ("s", "sts", &[("sts", 2)]),
        ("t", "e", &[("t", 1)]),
        ("t", "s", &[("ts", 1)]),
        ("t", "t", &[("t", 2)]),
        ("t", "st", &[("sts", 1), ("t", 1)]),
        ("t", "ts", &[("ts", 2)]),
        ("t", "sts", &[("sts", 2)]),
        ("st", "e", &[("st", 1)]),
        ("st", "s", &[("sts", 1), ("s", 1)]),
        ("st", "t", &[("st", 2)]),
        ("st", "st", &[("sts", 2), ("st", 1)]),
        ("st", "ts", &[("sts", 2), ("s", 2)]),
        ("st", "sts", &[("sts", 4)]),
        ("ts", "e", &[("ts", 1)]),
        ("ts", "s", &[("ts", 2)]),
        ("ts", "t", &[("sts", 1), ("t", 1)]),
        ("ts", "st", &[("sts", 2), ("t", 2)]),
        ("ts", "ts", &[("sts", 2), ("ts", 1)]),
        ("ts", "sts", &[("sts", 4)]),
        ("sts", "e", &[("sts", 1)]),
        ("sts", "s", &[("sts", 2)]),
        ("sts", "t", &[("sts", 2)]),
        ("sts", "st", &[("sts", 4)]),
        ("sts", "ts", &[("sts", 4)]),
        ("sts", "sts", &[("sts", 6)]),
    ];
    MultiMultisemigroup::from_named_entries(carrier, crate::cardinal::CardinalBound::Omega, entries)
        .expect("fixed table")
}

/// The multioperation obtained from [`s3_kl_table`] by forgetting
/// multiplicities, as a plain multisemigroup.
pub fn s3_multisemigroup() -> Multisemigroup {
    s3_kl_table().underlying_multisemigroup()
}

/// Named generator dispatch used by the CLI and the language bindings.
pub fn is_singleton_top(lambda: Cardinal) -> bool {
    lambda.value() == lambda.bound().max_value() && lambda.value() != CardinalValue::Nat(0)
}
