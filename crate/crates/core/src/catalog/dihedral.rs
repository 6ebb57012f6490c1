//! Dihedral groups, their Kazhdan-Lusztig bases, and the multiplicity tables
//! of the KL structure constants.
//!
//! The group `D_n` (n >= 3) is generated by two involutions `s`, `t` with
//! `(st)^n = e`. Elements are the alternating words in `s`, `t` of length at
//! most `n`; the two words of length `n` are the same element `w0`. For each
//! `w` the KL basis element is the sum, in the integral group ring, of `w`
//! and every element of strictly smaller length. The KL multiplication table
//! has non-negative integer structure constants; those constants are the
//! multiplicity table produced by [`kl_multisemigroup`].
//!
//! Group multiplication here is plain word rewriting (concatenate, cancel
//! `ss` and `tt`, fold alternating words longer than `n` back using the
//! relation), independent of any KL machinery, so it can serve as the oracle
//! for the KL computation.

use std::fmt;

use crate::cardinal::CardinalBound;
use crate::carrier::Carrier;
use crate::error::{Error, Result};
use crate::mms::MultiMultisemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    S,
    T,
}

impl Letter {
    fn other(self) -> Letter {
        match self {
            Letter::S => Letter::T,
            Letter::T => Letter::S,
        }
    }

    fn char(self) -> char {
        match self {
            Letter::S => 's',
            Letter::T => 't',
        }
    }
}

/// An element of `D_n` in canonical form: the length of its reduced word and
/// the first letter. The identity has length 0 and the longest element has
/// length `n`; both get a fixed canonical first letter so that each element
/// has exactly one representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    first: Letter,
    len: u64,
}

impl DihedralElement {
    pub fn identity() -> Self {
        DihedralElement {
            first: Letter::S,
            len: 0,
        }
    }

    pub fn length(self) -> u64 {
        self.len
    }

    pub fn first_letter(self) -> Option<Letter> {
        if self.len == 0 {
            None
        } else {
            Some(self.first)
        }
    }

    fn letters(self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.len as usize);
        let mut l = self.first;
        for _ in 0..self.len {
            out.push(l);
            l = l.other();
        }
        out
    }

    /// The canonical spelling: `"e"` for the identity, otherwise the
    /// alternating word.
    pub fn name(self) -> String {
        if self.len == 0 {
            "e".to_string()
        } else {
            self.letters().iter().map(|l| l.char()).collect()
        }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// An integer-coefficient vector over the elements of a dihedral group, in
/// the group's listing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    pub coefficients: Vec<i64>,
}

impl GroupAlgebraElement {
    pub fn zero(order: usize) -> Self {
        GroupAlgebraElement {
            coefficients: vec![0; order],
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        GroupAlgebraElement {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DihedralGroup {
    n: u64,
    elements: Vec<DihedralElement>,
}

impl DihedralGroup {
    pub fn new(n: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::ParameterOutOfRange {
                name: "n",
                value: n,
                min: 3,
                max: u64::MAX,
            });
        }
        // Listing order: e, then both elements of each length 1..n-1 with the
        // s-leading word first, then the longest element.
        let mut elements = vec![DihedralElement::identity()];
        for len in 1..n {
            elements.push(DihedralElement {
                first: Letter::S,
                len,
            });
            elements.push(DihedralElement {
                first: Letter::T,
                len,
            });
        }
        elements.push(DihedralElement {
            first: Letter::S,
            len: n,
        });
        Ok(DihedralGroup { n, elements })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn order(&self) -> usize {
        2 * self.n as usize
    }

    /// Elements in listing order: `e, s, t, st, ts, ..., w0`.
    pub fn elements(&self) -> &[DihedralElement] {
        &self.elements
    }

    pub fn index_of(&self, e: DihedralElement) -> usize {
        let e = self.canonicalize(e);
        if e.len == 0 {
            0
        } else if e.len == self.n {
            self.order() - 1
        } else {
            let base = 2 * (e.len as usize - 1) + 1;
            match e.first {
                Letter::S => base,
                Letter::T => base + 1,
            }
        }
    }

    fn canonicalize(&self, e: DihedralElement) -> DihedralElement {
        if e.len == 0 || e.len == self.n {
            DihedralElement {
                first: Letter::S,
                len: e.len,
            }
        } else {
            e
        }
    }

    /// Parse a canonical word: `"e"` or an alternating word of length <= n.
    pub fn element_by_name(&self, name: &str) -> Result<DihedralElement> {
        if name == "e" {
            return Ok(DihedralElement::identity());
        }
        let mut letters = Vec::new();
        for c in name.chars() {
            match c {
                's' => letters.push(Letter::S),
                't' => letters.push(Letter::T),
                _ => return Err(Error::UnknownElement(name.to_string())),
            }
        }
        let alternating = letters.windows(2).all(|w| w[0] != w[1]);
        if !alternating || letters.len() as u64 > self.n {
            return Err(Error::UnknownElement(name.to_string()));
        }
        Ok(self.canonicalize(DihedralElement {
            first: letters[0],
            len: letters.len() as u64,
        }))
    }

    /// Multiply by concatenating reduced words and rewriting with the group
    /// relations until the word is reduced again.
    pub fn multiply(&self, x: DihedralElement, y: DihedralElement) -> DihedralElement {
        let mut word = x.letters();
        word.extend(y.letters());
        // Cancel adjacent equal letters (s^2 = t^2 = e), cascading.
        let mut stack: Vec<Letter> = Vec::with_capacity(word.len());
        for l in word {
            if stack.last() == Some(&l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        // The stack is now alternating. Fold with (st)^n = e if it is too long:
        // an alternating word of length L > n equals the alternating word of
        // length 2n - L starting with the other letter.
        let len = stack.len() as u64;
        let reduced = if len > self.n {
            DihedralElement {
                first: stack[0].other(),
                len: 2 * self.n - len,
            }
        } else if len == 0 {
            DihedralElement::identity()
        } else {
            DihedralElement {
                first: stack[0],
                len,
            }
        };
        self.canonicalize(reduced)
    }

    /// The KL basis element of `w`: the sum of `w` and every group element of
    /// strictly smaller length.
    pub fn kl_basis_element(&self, w: DihedralElement) -> GroupAlgebraElement {
        let mut v = GroupAlgebraElement::zero(self.order());
        let w = self.canonicalize(w);
        for (i, &u) in self.elements.iter().enumerate() {
            if u.len < w.len || u == w {
                v.coefficients[i] = 1;
            }
        }
        v
    }

    /// Multiply two group algebra elements bilinearly.
    pub fn algebra_multiply(
        &self,
        x: &GroupAlgebraElement,
        y: &GroupAlgebraElement,
    ) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(self.order());
        for (i, &xi) in x.coefficients.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.coefficients.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let k = self.index_of(self.multiply(self.elements[i], self.elements[j]));
                out.coefficients[k] += xi * yj;
            }
        }
        out
    }

    /// Express a group algebra element in the KL basis by back-substitution
    /// in decreasing length order. The basis change is unitriangular with
    /// respect to length, so this terminates with integer coefficients.
    fn expand_in_kl_basis(&self, v: &GroupAlgebraElement) -> Result<Vec<i64>> {
        let order = self.order();
        let mut remainder = v.clone();
        let mut coefficients = vec![0i64; order];
        for i in (0..order).rev() {
            let c = remainder.coefficients[i];
            if c == 0 {
                continue;
            }
            coefficients[i] = c;
            let kl = self.kl_basis_element(self.elements[i]);
            for (k, &b) in kl.coefficients.iter().enumerate() {
                remainder.coefficients[k] -= c * b;
            }
        }
        if remainder.coefficients.iter().any(|&c| c != 0) {
            return Err(Error::Internal(
                "KL back-substitution left a nonzero remainder".to_string(),
            ));
        }
        Ok(coefficients)
    }
}

/// The multiplicity table of the KL structure constants of `D_n`, computed
/// from scratch: multiply KL basis elements in the group ring, then re-expand
/// the product in the KL basis. All coefficients must come out as
/// non-negative integers; a negative coefficient is an internal error, never
/// a valid output. The result is verified against the associativity law
/// before it is returned.
pub fn kl_multisemigroup(n: u64) -> Result<MultiMultisemigroup> {
    if !(3..=12).contains(&n) {
        return Err(Error::ParameterOutOfRange {
            name: "n",
            value: n,
            min: 3,
            max: 12,
        });
    }
    let group = DihedralGroup::new(n)?;
    let order = group.order();
    let carrier = Carrier::new(group.elements().iter().map(|e| e.name()))?;
    let kl: Vec<GroupAlgebraElement> = group
        .elements()
        .iter()
        .map(|&w| group.kl_basis_element(w))
        .collect();
    let mut rows = Vec::with_capacity(order * order);
    for v in 0..order {
        for w in 0..order {
            let product = group.algebra_multiply(&kl[v], &kl[w]);
            let coefficients = group.expand_in_kl_basis(&product)?;
            let mut row = Vec::new();
            for (u, &c) in coefficients.iter().enumerate() {
                if c < 0 {
                    return Err(Error::NegativeCoefficient {
                        s: group.elements()[v].name(),
                        t: group.elements()[w].name(),
                        r: group.elements()[u].name(),
                        value: c,
                    });
                }
                if c > 0 {
                    row.push((u, c as u64));
                }
            }
            rows.push(row);
        }
    }
    let mms = MultiMultisemigroup::from_index_rows(carrier, CardinalBound::Omega, rows)?;
    mms.validate().map_err(|cx| {
        Error::Internal(format!(
            "KL table failed the associativity law at ({}, {}, {})",
            cx.r, cx.s, cx.t
        ))
    })
}
