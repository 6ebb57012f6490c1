//! Saturating cardinal arithmetic.
//!
//! `Card_k` is the set of cardinals not exceeding a bound `k`, which is either
//! a positive natural number or omega (the first infinite cardinal). Addition
//! is disjoint union and multiplication is Cartesian product, with every
//! result above the bound identified with the bound itself. For a finite
//! bound this is truncation arithmetic on the naturals; at bound omega the
//! symbol omega absorbs addition and positive multiplication while zero
//! annihilates everything.
//!
//! Between two bounds `l <= k` there is a reduction homomorphism (truncate at
//! `l`) and, from bound 1, a lifting that sends 1 to the top of the target
//! bound. Cardinals carry their bound so that mixing arithmetic across bounds
//! is a reported error instead of a silent coercion.

use std::fmt;

use crate::error::{Error, Result};

/// The multiplicity bound: a positive natural number or omega.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CardinalBound {
    Finite(u64),
    Omega,
}

impl CardinalBound {
    /// A finite bound; must be at least 1.
    pub fn finite(n: u64) -> Result<Self> {
        if n == 0 {
            Err(Error::InvalidBound)
        } else {
            Ok(CardinalBound::Finite(n))
        }
    }

    pub fn is_valid(self) -> bool {
        !matches!(self, CardinalBound::Finite(0))
    }

    /// Bound comparison: every bound is `<= Omega`, finite bounds compare by value.
    pub fn le(self, other: Self) -> bool {
        match (self, other) {
            (_, CardinalBound::Omega) => true,
            (CardinalBound::Omega, CardinalBound::Finite(_)) => false,
            (CardinalBound::Finite(a), CardinalBound::Finite(b)) => a <= b,
        }
    }

    /// The largest value of `Card_k`: `n` for a finite bound, omega otherwise.
    pub fn max_value(self) -> CardinalValue {
        match self {
            CardinalBound::Finite(n) => CardinalValue::Nat(n),
            CardinalBound::Omega => CardinalValue::Omega,
        }
    }

    /// Parse `"omega"` or a decimal integer.
    pub fn parse(token: &str) -> Result<Self> {
        if token == "omega" {
            Ok(CardinalBound::Omega)
        } else {
            let n: u64 = token
                .parse()
                .map_err(|_| Error::Parse(format!("invalid bound `{token}`: expected a positive integer or \"omega\"")))?;
            CardinalBound::finite(n)
        }
    }
}

impl fmt::Display for CardinalBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CardinalBound::Finite(n) => write!(f, "{n}"),
            CardinalBound::Omega => write!(f, "omega"),
        }
    }
}

/// A cardinal value without its bound: a natural number or omega.
///
/// The derived order puts `Nat(a) < Nat(b)` for `a < b` and every natural
/// below `Omega`, which is the cardinal order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CardinalValue {
    Nat(u64),
    Omega,
}

impl CardinalValue {
    pub fn is_zero(self) -> bool {
        self == CardinalValue::Nat(0)
    }

    pub fn fits(self, bound: CardinalBound) -> bool {
        match (self, bound) {
            (_, CardinalBound::Omega) => true,
            (CardinalValue::Omega, CardinalBound::Finite(_)) => false,
            (CardinalValue::Nat(m), CardinalBound::Finite(n)) => m <= n,
        }
    }

    /// Truncate to a bound: values above the bound become the bound itself.
    pub fn clamp(self, bound: CardinalBound) -> CardinalValue {
        match bound {
            CardinalBound::Omega => self,
            CardinalBound::Finite(n) => match self {
                CardinalValue::Omega => CardinalValue::Nat(n),
                CardinalValue::Nat(m) => CardinalValue::Nat(m.min(n)),
            },
        }
    }

    /// Disjoint-union addition inside `Card_bound`.
    pub fn add_in(self, other: Self, bound: CardinalBound) -> Self {
        let raw = match (self, other) {
            (CardinalValue::Omega, _) | (_, CardinalValue::Omega) => CardinalValue::Omega,
            (CardinalValue::Nat(a), CardinalValue::Nat(b)) => {
                CardinalValue::Nat(a.checked_add(b).expect("cardinal addition overflow"))
            }
        };
        raw.clamp(bound)
    }

    /// Cartesian-product multiplication inside `Card_bound`; zero annihilates omega.
    pub fn mul_in(self, other: Self, bound: CardinalBound) -> Self {
        let raw = match (self, other) {
            (CardinalValue::Nat(0), _) | (_, CardinalValue::Nat(0)) => CardinalValue::Nat(0),
            (CardinalValue::Omega, _) | (_, CardinalValue::Omega) => CardinalValue::Omega,
            (CardinalValue::Nat(a), CardinalValue::Nat(b)) => {
                CardinalValue::Nat(a.checked_mul(b).expect("cardinal multiplication overflow"))
            }
        };
        raw.clamp(bound)
    }

    /// Parse `"omega"` or a decimal integer.
    pub fn parse(token: &str) -> Result<Self> {
        if token == "omega" {
            Ok(CardinalValue::Omega)
        } else {
            let n: u64 = token
                .parse()
                .map_err(|_| Error::Parse(format!("invalid cardinal `{token}`: expected a non-negative integer or \"omega\"")))?;
            Ok(CardinalValue::Nat(n))
        }
    }
}

impl fmt::Display for CardinalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CardinalValue::Nat(m) => write!(f, "{m}"),
            CardinalValue::Omega => write!(f, "omega"),
        }
    }
}

/// An element of `Card_k`: a value together with the bound it lives under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cardinal {
    value: CardinalValue,
    bound: CardinalBound,
}

impl Cardinal {
    pub fn new(value: CardinalValue, bound: CardinalBound) -> Result<Self> {
        if !bound.is_valid() {
            return Err(Error::InvalidBound);
        }
        if !value.fits(bound) {
            return Err(Error::ValueOutOfBound { value, bound });
        }
        Ok(Cardinal { value, bound })
    }

    pub fn nat(m: u64, bound: CardinalBound) -> Result<Self> {
        Cardinal::new(CardinalValue::Nat(m), bound)
    }

    /// Omega as an element of `Card_omega`.
    pub fn omega() -> Self {
        Cardinal {
            value: CardinalValue::Omega,
            bound: CardinalBound::Omega,
        }
    }

    pub fn zero(bound: CardinalBound) -> Self {
        Cardinal {
            value: CardinalValue::Nat(0),
            bound,
        }
    }

    pub fn one(bound: CardinalBound) -> Self {
        // Every valid bound is >= 1, so 1 always fits.
        Cardinal {
            value: CardinalValue::Nat(1),
            bound,
        }
    }

    pub fn value(self) -> CardinalValue {
        self.value
    }

    pub fn bound(self) -> CardinalBound {
        self.bound
    }

    pub fn is_zero(self) -> bool {
        self.value.is_zero()
    }

    fn require_same_bound(self, other: Self) -> Result<()> {
        if self.bound == other.bound {
            Ok(())
        } else {
            Err(Error::BoundMismatch {
                left: self.bound,
                right: other.bound,
            })
        }
    }

    /// Disjoint-union addition, clamped at the common bound. Fallible (the
    /// bounds must match), so this is a named method rather than `ops::Add`.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Self) -> Result<Self> {
        self.require_same_bound(other)?;
        Ok(Cardinal {
            value: self.value.add_in(other.value, self.bound),
            bound: self.bound,
        })
    }

    /// Cartesian-product multiplication, clamped at the common bound.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Self) -> Result<Self> {
        self.require_same_bound(other)?;
        Ok(Cardinal {
            value: self.value.mul_in(other.value, self.bound),
            bound: self.bound,
        })
    }

    /// Sum of a finite list; the empty sum is zero at the given bound.
    ///
    /// The result does not depend on the order of the list or on any
    /// partition of it into sublists.
    pub fn sum<I>(bound: CardinalBound, items: I) -> Result<Self>
    where
        I: IntoIterator<Item = Cardinal>,
    {
        if !bound.is_valid() {
            return Err(Error::InvalidBound);
        }
        let mut acc = Cardinal::zero(bound);
        for item in items {
            acc = acc.add(item)?;
        }
        Ok(acc)
    }

    /// The reduction homomorphism `Card_k -> Card_l` for `l <= k`: values not
    /// exceeding the target pass through, everything else becomes the target.
    pub fn reduce(self, target: CardinalBound) -> Result<Self> {
        if !target.is_valid() {
            return Err(Error::InvalidBound);
        }
        if !target.le(self.bound) {
            return Err(Error::BoundMismatch {
                left: target,
                right: self.bound,
            });
        }
        Ok(Cardinal {
            value: self.value.clamp(target),
            bound: target,
        })
    }

    /// The lifting homomorphism `Card_1 -> Card_k`: 0 maps to 0 and 1 maps to
    /// the largest element of the target bound. Reducing the result back to
    /// bound 1 recovers the input.
    pub fn lift(target: CardinalBound, b: Cardinal) -> Result<Self> {
        if !target.is_valid() {
            return Err(Error::InvalidBound);
        }
        if b.bound != CardinalBound::Finite(1) {
            return Err(Error::BoundMismatch {
                left: b.bound,
                right: CardinalBound::Finite(1),
            });
        }
        let value = if b.is_zero() {
            CardinalValue::Nat(0)
        } else {
            target.max_value()
        };
        Ok(Cardinal {
            value,
            bound: target,
        })
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}
