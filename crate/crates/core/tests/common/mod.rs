//! Shared fixtures and independent oracles for the integration suites.
//!
//! The oracles here deliberately avoid the library's accumulator-based
//! evaluation paths: word closed forms are written as literal nested sums
//! over the public cardinal API, associativity of assignments is a plain
//! integer triple loop, and random valid tables come from constructions that
//! are associative for structural reasons (unit chains of inner indices,
//! constant scalings of transformation semigroups).

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::Rng;

use multimult::algebra::StructureConstantAlgebra;
use multimult::cardinal::{Cardinal, CardinalBound};
use multimult::catalog;
use multimult::mms::MultiMultisemigroup;
use multimult::multiplicity::MultiplicityFunction;
use multimult::multisemigroup::Multisemigroup;
use multimult::Carrier;

/// The named fixture set used by the word-evaluation and function-algebra
/// suites: dihedral KL tables for n = 3..6, Catalan monoids for m = 3..5,
/// projective functors with k <= 3, and a singleton.
pub fn fixtures() -> Vec<(String, MultiMultisemigroup)> {
    let mut out = Vec::new();
    for n in 3..=6 {
        out.push((
            format!("dihedral-{n}"),
            catalog::kl_multisemigroup(n).unwrap(),
        ));
    }
    for m in 3..=5 {
        out.push((
            format!("catalan-{m}"),
            catalog::catalan_monoid_mms(m).unwrap(),
        ));
    }
    let dims = [
        vec![vec![2]],
        vec![vec![1, 2], vec![0, 1]],
        vec![vec![1, 1, 0], vec![2, 3, 1], vec![0, 1, 1]],
    ];
    for (k, rows) in dims.into_iter().enumerate() {
        let d = catalog::DimensionMatrix::new(rows).unwrap();
        out.push((
            format!("projective-{}", k + 1),
            catalog::projective_functor_mms(&d).unwrap(),
        ));
    }
    out.push((
        "singleton".to_string(),
        catalog::singleton(Cardinal::nat(2, CardinalBound::Omega).unwrap()).unwrap(),
    ));
    out
}

/// A random word over the carrier, length in `2..=max_len`.
pub fn random_word(rng: &mut StdRng, mms: &MultiMultisemigroup, max_len: usize) -> Vec<String> {
    let len = rng.random_range(2..=max_len);
    let names = mms.carrier().names();
    (0..len)
        .map(|_| names[rng.random_range(0..names.len())].clone())
        .collect()
}

fn get(m: &MultiMultisemigroup, s: &str, t: &str, r: &str) -> Cardinal {
    m.mu(s, t).unwrap().get(r).unwrap()
}

/// Closed form for a length-4 word, peeling from the front: the nested sum
/// over two inner indices, written out literally over the public cardinal
/// API.
pub fn closed_form_length4_front(m: &MultiMultisemigroup, w: &[&str]) -> BTreeMap<String, Cardinal> {
    assert_eq!(w.len(), 4);
    let bound = m.bound();
    let names = m.carrier().names();
    let mut out = BTreeMap::new();
    for t in names {
        let mut total = Cardinal::zero(bound);
        for i1 in names {
            for i2 in names {
                let term = get(m, w[0], i1, t)
                    .mul(get(m, w[1], i2, i1))
                    .unwrap()
                    .mul(get(m, w[2], w[3], i2))
                    .unwrap();
                total = total.add(term).unwrap();
            }
        }
        out.insert(t.clone(), total);
    }
    out
}

/// Closed form for a length-4 word, peeling from the back.
pub fn closed_form_length4_back(m: &MultiMultisemigroup, w: &[&str]) -> BTreeMap<String, Cardinal> {
    assert_eq!(w.len(), 4);
    let bound = m.bound();
    let names = m.carrier().names();
    let mut out = BTreeMap::new();
    for t in names {
        let mut total = Cardinal::zero(bound);
        for j1 in names {
            for j2 in names {
                let term = get(m, w[0], w[1], j1)
                    .mul(get(m, j1, w[2], j2))
                    .unwrap()
                    .mul(get(m, j2, w[3], t))
                    .unwrap();
                total = total.add(term).unwrap();
            }
        }
        out.insert(t.clone(), total);
    }
    out
}

pub fn function_as_map(f: &MultiplicityFunction) -> BTreeMap<String, Cardinal> {
    let bound = f.bound();
    f.carrier()
        .names()
        .iter()
        .map(|name| (name.clone(), Cardinal::new(f.value_at(f.carrier().index_of(name).unwrap()), bound).unwrap()))
        .collect()
}

/// A random multiplicity function with support size up to `max_support` and
/// values in `1..=max_value`.
pub fn random_function(
    rng: &mut StdRng,
    mms: &MultiMultisemigroup,
    max_support: usize,
    max_value: u64,
) -> MultiplicityFunction {
    let names = mms.carrier().names();
    let support = rng.random_range(0..=max_support.min(names.len()));
    let mut values: Vec<(&str, multimult::CardinalValue)> = Vec::new();
    let mut used = std::collections::HashSet::new();
    for _ in 0..support {
        let i = rng.random_range(0..names.len());
        if used.insert(i) {
            values.push((
                names[i].as_str(),
                multimult::CardinalValue::Nat(rng.random_range(1..=max_value)),
            ));
        }
    }
    MultiplicityFunction::from_named_values(mms.carrier().clone(), mms.bound(), values).unwrap()
}

/// A random transformation semigroup on a small chain: close a couple of
/// random self-maps of {0..=2} under composition. Elements are named by
/// their image tuples.
pub fn random_transformation_semigroup(rng: &mut StdRng) -> Multisemigroup {
    let deg = 3usize;
    let gens: Vec<Vec<usize>> = (0..rng.random_range(1..=2))
        .map(|_| (0..deg).map(|_| rng.random_range(0..deg)).collect())
        .collect();
    let mut elems: Vec<Vec<usize>> = Vec::new();
    for g in &gens {
        if !elems.contains(g) {
            elems.push(g.clone());
        }
    }
    loop {
        let mut new = Vec::new();
        for f in &elems {
            for g in &elems {
                let fg: Vec<usize> = (0..deg).map(|i| f[g[i]]).collect();
                if !elems.contains(&fg) && !new.contains(&fg) {
                    new.push(fg);
                }
            }
        }
        if new.is_empty() {
            break;
        }
        elems.extend(new);
    }
    elems.sort();
    let name = |f: &Vec<usize>| -> String { f.iter().map(|v| v.to_string()).collect() };
    let carrier = Carrier::new(elems.iter().map(name)).unwrap();
    let named: Vec<(String, String, Vec<String>)> = elems
        .iter()
        .flat_map(|f| {
            elems.iter().map(move |g| {
                let fg: Vec<usize> = (0..deg).map(|i| f[g[i]]).collect();
                (name(f), name(g), vec![name(&fg)])
            })
        })
        .collect();
    let borrowed: Vec<(&str, &str, Vec<&str>)> = named
        .iter()
        .map(|(s, t, r)| (s.as_str(), t.as_str(), r.iter().map(String::as_str).collect()))
        .collect();
    let slices: Vec<(&str, &str, &[&str])> = borrowed
        .iter()
        .map(|(s, t, r)| (*s, *t, r.as_slice()))
        .collect();
    Multisemigroup::from_named_table(carrier, &slices).unwrap()
}

/// A random valid table at bound omega, built through the
/// structure-constant constructor: either a projective-functor table for a
/// random dimension matrix (inner indices chain, so the law holds for any
/// matrix) or a transformation semigroup scaled by a constant (both sides of
/// every law instance scale by the constant squared).
pub fn random_valid_mms(rng: &mut StdRng) -> MultiMultisemigroup {
    let algebra: StructureConstantAlgebra = if rng.random_bool(0.5) {
        let k = rng.random_range(1..=3);
        let rows: Vec<Vec<u64>> = (0..k)
            .map(|j| {
                (0..k)
                    .map(|i| {
                        if i == j {
                            rng.random_range(1..=5)
                        } else {
                            rng.random_range(0..=5)
                        }
                    })
                    .collect()
            })
            .collect();
        let d = catalog::DimensionMatrix::new(rows).unwrap();
        catalog::projective_functor_mms(&d)
            .unwrap()
            .structure_constants()
            .unwrap()
    } else {
        let ms = random_transformation_semigroup(rng);
        let scale = rng.random_range(1..=3);
        let carrier = ms.carrier().clone();
        let names = carrier.names().to_vec();
        let mut constants = Vec::new();
        for s in &names {
            for t in &names {
                for r in ms.product(s, t).unwrap() {
                    constants.push((s.clone(), t.clone(), r, scale));
                }
            }
        }
        let borrowed: Vec<(&str, &str, &str, u64)> = constants
            .iter()
            .map(|(s, t, r, c)| (s.as_str(), t.as_str(), r.as_str(), *c))
            .collect();
        StructureConstantAlgebra::from_constants(carrier, &borrowed).unwrap()
    };
    MultiMultisemigroup::from_structure_constants(&algebra)
}

/// Plain integer check of the associativity law for an explicit assignment
/// of multiplicities, written as a literal triple loop. Independent of the
/// library's verifier.
pub fn law_holds_integer(n: usize, values: &dyn Fn(usize, usize, usize) -> u64) -> bool {
    for r in 0..n {
        for s in 0..n {
            for t in 0..n {
                for u in 0..n {
                    let lhs: u64 = (0..n).map(|i| values(s, t, i) * values(r, i, u)).sum();
                    let rhs: u64 = (0..n).map(|j| values(r, s, j) * values(j, t, u)).sum();
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Brute-force deformation existence: enumerate every assignment of the
/// support entries to `1..=max` and test the law with the integer oracle.
/// No pruning, no shared code with the search.
pub fn brute_force_deformation_exists(base: &Multisemigroup, max: u64) -> bool {
    let carrier = base.carrier();
    let n = carrier.len();
    let mut vars: Vec<(usize, usize, usize)> = Vec::new();
    for s in 0..n {
        for t in 0..n {
            for r in base.product(carrier.name(s), carrier.name(t)).unwrap() {
                vars.push((s, t, carrier.index_of(&r).unwrap()));
            }
        }
    }
    let mut assignment = vec![1u64; vars.len()];
    loop {
        let table = |s: usize, t: usize, r: usize| -> u64 {
            vars.iter()
                .position(|&(a, b, c)| (a, b, c) == (s, t, r))
                .map(|i| assignment[i])
                .unwrap_or(0)
        };
        if law_holds_integer(n, &table) {
            return true;
        }
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == assignment.len() {
                return false;
            }
            if assignment[i] < max {
                assignment[i] += 1;
                break;
            }
            assignment[i] = 1;
            i += 1;
        }
    }
}
