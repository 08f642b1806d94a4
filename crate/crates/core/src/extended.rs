use std::cmp::Ordering;
use std::fmt;

/// A value that may be `+∞`.
///
/// Degrees of the zero polynomial, colengths of ideals that miss an axis,
/// Rees' mixed multiplicities and Łojasiewicz exponents all live here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Extended<T> {
    Finite(T),
    Infinity,
}

impl<T> Extended<T> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    pub fn finite(self) -> Option<T> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinity => None,
        }
    }

    pub fn as_finite(&self) -> Option<&T> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinity => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Extended<U> {
        match self {
            Extended::Finite(v) => Extended::Finite(f(v)),
            Extended::Infinity => Extended::Infinity,
        }
    }
}

impl<T> From<Option<T>> for Extended<T> {
    fn from(v: Option<T>) -> Self {
        match v {
            Some(v) => Extended::Finite(v),
            None => Extended::Infinity,
        }
    }
}

impl<T: Ord> PartialOrd for Extended<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Ord> Ord for Extended<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Extended::Finite(a), Extended::Finite(b)) => a.cmp(b),
            (Extended::Finite(_), Extended::Infinity) => Ordering::Less,
            (Extended::Infinity, Extended::Finite(_)) => Ordering::Greater,
            (Extended::Infinity, Extended::Infinity) => Ordering::Equal,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Extended<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => v.fmt(f),
            Extended::Infinity => f.write_str("∞"),
        }
    }
}
