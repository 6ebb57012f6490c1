//! Canonical JSON interchange format.
//!
//! ```text
//! {
//!   "carrier": ["e", "s", "t", "st", "ts", "sts"],
//!   "bound": "omega",
//!   "mu": {
//!     "s|t": {"st": 1},
//!     "st|st": {"st": 1, "sts": 2}
//!   }
//! }
//! ```
//!
//! Keys of `mu` are `left|right` pairs; omitted pairs mean the all-zero
//! function and omitted targets mean zero. Multiplicities and the bound are
//! decimal integers or the string `"omega"` (the only accepted spelling).
//! Plain multisemigroups use the same format with all values 1.
//!
//! Serialization is canonical: carrier order as declared, object keys in
//! carrier order, fixed layout. Parsing a serialized table and serializing
//! it again is byte-identical, which golden-file tests rely on.

use std::fmt::Write as _;

use serde_json::Value;

use crate::algebra::StructureConstantAlgebra;
use crate::cardinal::{CardinalBound, CardinalValue};
use crate::carrier::Carrier;
use crate::deformation::{DeformationOutcome, DeformationResult};
use crate::error::{Error, Result};
use crate::mms::MultiMultisemigroup;
use crate::multiplicity::MultiplicityFunction;
use crate::multisemigroup::{ElemSet, Multisemigroup};

fn syntax_error(e: serde_json::Error) -> Error {
    Error::JsonSyntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn parse_root(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(syntax_error)
}

fn escape(name: &str) -> String {
    serde_json::to_string(name).expect("strings always serialize")
}

fn value_to_json(v: CardinalValue) -> String {
    match v {
        CardinalValue::Nat(m) => m.to_string(),
        CardinalValue::Omega => "\"omega\"".to_string(),
    }
}

fn bound_to_json(b: CardinalBound) -> String {
    match b {
        CardinalBound::Finite(n) => n.to_string(),
        CardinalBound::Omega => "\"omega\"".to_string(),
    }
}

fn cardinal_from_value(v: &Value, context: &str) -> Result<CardinalValue> {
    match v {
        Value::Number(n) => n
            .as_u64()
            .map(CardinalValue::Nat)
            .ok_or_else(|| Error::Parse(format!("{context}: expected a non-negative integer"))),
        Value::String(s) if s == "omega" => Ok(CardinalValue::Omega),
        _ => Err(Error::Parse(format!(
            "{context}: expected a non-negative integer or \"omega\""
        ))),
    }
}

fn bound_from_value(v: &Value) -> Result<CardinalBound> {
    match v {
        Value::Number(n) => {
            let n = n
                .as_u64()
                .ok_or_else(|| Error::Parse("bound: expected a positive integer".to_string()))?;
            CardinalBound::finite(n)
        }
        Value::String(s) if s == "omega" => Ok(CardinalBound::Omega),
        _ => Err(Error::Parse(
            "bound: expected a positive integer or \"omega\"".to_string(),
        )),
    }
}

fn table_from_value(root: &Value) -> Result<MultiMultisemigroup> {
    let obj = root
        .as_object()
        .ok_or_else(|| Error::Parse("top level must be a JSON object".to_string()))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "carrier" | "bound" | "mu") {
            return Err(Error::Parse(format!("unknown top-level key \"{key}\"")));
        }
    }
    let carrier_value = obj
        .get("carrier")
        .ok_or_else(|| Error::Parse("missing \"carrier\"".to_string()))?;
    let names = carrier_value
        .as_array()
        .ok_or_else(|| Error::Parse("carrier: expected an array of strings".to_string()))?
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Parse("carrier: expected an array of strings".to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let carrier = Carrier::new(names)?;
    let bound = bound_from_value(
        obj.get("bound")
            .ok_or_else(|| Error::Parse("missing \"bound\"".to_string()))?,
    )?;
    let mu = obj
        .get("mu")
        .ok_or_else(|| Error::Parse("missing \"mu\"".to_string()))?
        .as_object()
        .ok_or_else(|| Error::Parse("mu: expected an object".to_string()))?;

    let n = carrier.len();
    let mut table: Vec<MultiplicityFunction> = (0..n * n)
        .map(|_| MultiplicityFunction::zero(carrier.clone(), bound))
        .collect();
    for (key, inner) in mu {
        let (left, right) = key
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("mu key \"{key}\" is not a left|right pair")))?;
        let s = carrier.require(left)?;
        let t = carrier.require(right)?;
        let inner = inner
            .as_object()
            .ok_or_else(|| Error::Parse(format!("mu[\"{key}\"]: expected an object")))?;
        let mut values = Vec::new();
        for (target, v) in inner {
            let value = cardinal_from_value(v, &format!("mu[\"{key}\"][\"{target}\"]"))?;
            if !value.fits(bound) {
                return Err(Error::ValueOutOfBound { value, bound });
            }
            values.push((target.as_str(), value));
        }
        table[s * n + t] = MultiplicityFunction::from_named_values(carrier.clone(), bound, values)?;
    }
    MultiMultisemigroup::from_table(carrier, bound, table)
}

/// Parse a multiplicity table. Syntax errors carry a line and column.
pub fn parse_mms(text: &str) -> Result<MultiMultisemigroup> {
    table_from_value(&parse_root(text)?)
}

/// Parse a plain multisemigroup: same format, every multiplicity must be 1.
pub fn parse_multisemigroup(text: &str) -> Result<Multisemigroup> {
    multisemigroup_from_value(&parse_root(text)?)
}

fn multisemigroup_from_value(root: &Value) -> Result<Multisemigroup> {
    let mms = table_from_value(root)?;
    mms_to_multisemigroup(&mms)
}

/// Reinterpret a 0/1 multiplicity table as a multisemigroup.
pub fn mms_to_multisemigroup(mms: &MultiMultisemigroup) -> Result<Multisemigroup> {
    let carrier = mms.carrier().clone();
    let n = carrier.len();
    let mut sets = Vec::with_capacity(n * n);
    for s in 0..n {
        for t in 0..n {
            let f = mms.mu(carrier.name(s), carrier.name(t))?;
            let mut set = ElemSet::empty(n);
            for (r, v) in f.support() {
                if v != CardinalValue::Nat(1) {
                    return Err(Error::Parse(format!(
                        "multisemigroup values must all be 1, found {} at mu[{}, {}]({})",
                        v,
                        carrier.name(s),
                        carrier.name(t),
                        carrier.name(r)
                    )));
                }
                set.insert(r);
            }
            sets.push(set);
        }
    }
    Multisemigroup::from_sets(carrier, sets)
}

fn push_function_object(out: &mut String, f: &MultiplicityFunction) {
    out.push('{');
    for (k, (name, v)) in f.to_named_values().into_iter().enumerate() {
        if k > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{}: {}", escape(name), value_to_json(v));
    }
    out.push('}');
}

/// A multiplicity function as a compact JSON object, targets in carrier order.
pub fn serialize_function(f: &MultiplicityFunction) -> String {
    let mut out = String::new();
    push_function_object(&mut out, f);
    out
}

/// Canonical serialization of a multiplicity table.
pub fn serialize_mms(m: &MultiMultisemigroup) -> String {
    let carrier = m.carrier();
    let n = carrier.len();
    let mut out = String::new();
    out.push_str("{\n  \"carrier\": [");
    for (i, name) in carrier.names().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&escape(name));
    }
    out.push_str("],\n");
    let _ = writeln!(out, "  \"bound\": {},", bound_to_json(m.bound()));
    let mut lines = Vec::new();
    for s in 0..n {
        for t in 0..n {
            let f = m.mu(carrier.name(s), carrier.name(t)).expect("total table");
            if f.is_zero() {
                continue;
            }
            let mut line = format!(
                "    {}: ",
                escape(&format!("{}|{}", carrier.name(s), carrier.name(t)))
            );
            push_function_object(&mut line, f);
            lines.push(line);
        }
    }
    if lines.is_empty() {
        out.push_str("  \"mu\": {}\n");
    } else {
        out.push_str("  \"mu\": {\n");
        out.push_str(&lines.join(",\n"));
        out.push_str("\n  }\n");
    }
    out.push_str("}\n");
    out
}

/// Canonical serialization of a multisemigroup: bound 1, all values 1.
/// Works on any table, associative or not.
pub fn serialize_multisemigroup(ms: &Multisemigroup) -> String {
    let carrier = ms.carrier().clone();
    let n = carrier.len();
    let one = CardinalBound::Finite(1);
    let mut table = Vec::with_capacity(n * n);
    for s in 0..n {
        for t in 0..n {
            let values: Vec<(&str, CardinalValue)> = ms
                .product_idx(s, t)
                .iter()
                .map(|r| (carrier.name(r), CardinalValue::Nat(1)))
                .collect();
            table.push(
                MultiplicityFunction::from_named_values(carrier.clone(), one, values)
                    .expect("membership values fit bound 1"),
            );
        }
    }
    let mms = MultiMultisemigroup::from_table(carrier, one, table).expect("total table");
    serialize_mms(&mms)
}

/// Structure constants as a JSON tensor: `{"basis": [...], "constants":
/// {"s|t": {"r": c}}}`, canonical ordering throughout.
pub fn serialize_structure_constants(alg: &StructureConstantAlgebra) -> String {
    let basis = alg.basis();
    let n = basis.len();
    let mut out = String::new();
    out.push_str("{\n  \"basis\": [");
    for (i, name) in basis.names().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&escape(name));
    }
    out.push_str("],\n");
    let mut lines = Vec::new();
    for s in 0..n {
        for t in 0..n {
            let row = alg.row(s, t);
            if row.is_empty() {
                continue;
            }
            let mut line = format!(
                "    {}: {{",
                escape(&format!("{}|{}", basis.name(s), basis.name(t)))
            );
            for (k, &(r, c)) in row.iter().enumerate() {
                if k > 0 {
                    line.push_str(", ");
                }
                let _ = write!(line, "{}: {}", escape(basis.name(r as usize)), c);
            }
            line.push('}');
            lines.push(line);
        }
    }
    if lines.is_empty() {
        out.push_str("  \"constants\": {}\n");
    } else {
        out.push_str("  \"constants\": {\n");
        out.push_str(&lines.join(",\n"));
        out.push_str("\n  }\n");
    }
    out.push_str("}\n");
    out
}

/// Parse `{"base": <multisemigroup>, "max_multiplicity": M}`.
pub fn parse_deformation_problem(text: &str) -> Result<(Multisemigroup, u64)> {
    let root = parse_root(text)?;
    let obj = root
        .as_object()
        .ok_or_else(|| Error::Parse("top level must be a JSON object".to_string()))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "base" | "max_multiplicity") {
            return Err(Error::Parse(format!("unknown top-level key \"{key}\"")));
        }
    }
    let base = multisemigroup_from_value(
        obj.get("base")
            .ok_or_else(|| Error::Parse("missing \"base\"".to_string()))?,
    )?;
    let max = obj
        .get("max_multiplicity")
        .ok_or_else(|| Error::Parse("missing \"max_multiplicity\"".to_string()))?
        .as_u64()
        .ok_or_else(|| Error::Parse("max_multiplicity: expected a positive integer".to_string()))?;
    Ok((base, max))
}

/// Whether a JSON text looks like a deformation problem rather than a table.
pub fn is_deformation_problem(text: &str) -> bool {
    matches!(
        serde_json::from_str::<Value>(text),
        Ok(Value::Object(obj)) if obj.contains_key("base")
    )
}

/// Canonical serialization of a search result.
pub fn serialize_deformation_result(result: &DeformationResult) -> String {
    match &result.outcome {
        DeformationOutcome::Found(mms) => {
            let mut out = String::from("{\n  \"outcome\": \"found\",\n");
            let _ = writeln!(out, "  \"nodes\": {},", result.nodes);
            let table = serialize_mms(mms);
            let indented: Vec<String> = table
                .trim_end()
                .lines()
                .enumerate()
                .map(|(i, l)| if i == 0 { l.to_string() } else { format!("  {l}") })
                .collect();
            let _ = write!(out, "  \"witness\": {}", indented.join("\n"));
            out.push_str("\n}\n");
            out
        }
        DeformationOutcome::NoneWithinBound => format!(
            "{{\n  \"outcome\": \"none_within_bound\",\n  \"max_multiplicity\": {},\n  \"nodes\": {}\n}}\n",
            result.max_multiplicity, result.nodes
        ),
        DeformationOutcome::Obstructed { a, b } => format!(
            "{{\n  \"outcome\": \"obstructed\",\n  \"witness\": [{}, {}],\n  \"nodes\": {}\n}}\n",
            escape(a),
            escape(b),
            result.nodes
        ),
    }
}
