//! Ordered finite carrier sets.
//!
//! Elements are opaque names with a fixed total order given by declaration
//! order. All "first counterexample" contracts in this crate refer to this
//! order. Names must be nonempty and must not contain `|`, which is reserved
//! as the pair separator in the JSON interchange format.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug)]
pub struct Carrier {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Carrier {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.contains('|') {
                return Err(Error::InvalidElementName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        Ok(Arc::new(Carrier { names, index }))
    }

    /// Number of elements; always at least 1, so there is no `is_empty`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// Content equality; two separately built carriers with the same names in
    /// the same order are the same carrier.
    pub fn same_as(&self, other: &Carrier) -> bool {
        std::ptr::eq(self, other) || self.names == other.names
    }
}

impl PartialEq for Carrier {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Carrier {}
