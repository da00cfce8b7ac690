use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A nonnegative integer or `+∞`.
///
/// Used for degree sums over independent sets: when a graph has fewer than
/// `k` independent vertices the minimum over an empty family is `+∞`.
/// `Infinity` is greater than every finite value and absorbs addition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedNat {
    Finite(u64),
    Infinity,
}

impl ExtendedNat {
    pub fn is_infinite(self) -> bool {
        matches!(self, ExtendedNat::Infinity)
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedNat::Finite(v) => Some(v),
            ExtendedNat::Infinity => None,
        }
    }
}

impl From<u64> for ExtendedNat {
    fn from(v: u64) -> Self {
        ExtendedNat::Finite(v)
    }
}

impl PartialOrd for ExtendedNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedNat {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedNat::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinity) => Ordering::Less,
            (Infinity, Finite(_)) => Ordering::Greater,
            (Infinity, Infinity) => Ordering::Equal,
        }
    }
}

impl Add for ExtendedNat {
    type Output = ExtendedNat;

    fn add(self, rhs: ExtendedNat) -> ExtendedNat {
        match (self, rhs) {
            (ExtendedNat::Finite(a), ExtendedNat::Finite(b)) => ExtendedNat::Finite(a + b),
            _ => ExtendedNat::Infinity,
        }
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(v) => write!(f, "{v}"),
            ExtendedNat::Infinity => f.write_str("inf"),
        }
    }
}

// JSON: finite values are numbers, infinity is the string "inf".
impl Serialize for ExtendedNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(v) => s.serialize_u64(*v),
            ExtendedNat::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedNat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(ExtendedNat::Finite(v)),
            Repr::Str(s) if s == "inf" => Ok(ExtendedNat::Infinity),
            Repr::Str(s) => Err(serde::de::Error::custom(format!(
                "expected a number or \"inf\", got {s:?}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::ExtendedNat::*;
    use super::*;

    #[test]
    fn infinity_dominates_and_absorbs() {
        assert!(Infinity > Finite(u64::MAX));
        assert_eq!(Finite(3) + Infinity, Infinity);
        assert_eq!(Finite(3) + Finite(4), Finite(7));
        assert_eq!(Infinity.cmp(&Infinity), Ordering::Equal);
    }

    #[test]
    fn json_shape() {
        assert_eq!(serde_json::to_string(&Infinity).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&Finite(4)).unwrap(), "4");
        let back: ExtendedNat = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(back, Infinity);
        assert!(serde_json::from_str::<ExtendedNat>("\"nan\"").is_err());
    }
}
