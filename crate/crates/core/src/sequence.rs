use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered list of 1-based mutation directions, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MutationSequence(Vec<usize>);

impl MutationSequence {
    pub fn new(directions: Vec<usize>) -> Self {
        Self(directions)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn directions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, k: usize) {
        self.0.push(k);
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Checks every direction against `1..=n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&k| k == 0 || k > n) {
            Some(&index) => Err(Error::IndexOutOfRange { index, n }),
            None => Ok(()),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// All sequences over `1..=n` of length exactly `len` with no immediate repeat,
    /// in lexicographic order.
    pub fn all_without_repeats(n: usize, len: usize) -> Vec<MutationSequence> {
        let mut level = vec![MutationSequence::empty()];
        for _ in 0..len {
            level = level
                .into_iter()
                .flat_map(|s| {
                    let last = s.last();
                    (1..=n).filter(move |&k| last != Some(k)).map(move |k| {
                        let mut next = s.clone();
                        next.push(k);
                        next
                    })
                })
                .collect();
        }
        level
    }
}

impl From<Vec<usize>> for MutationSequence {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

impl<const N: usize> From<[usize; N]> for MutationSequence {
    fn from(v: [usize; N]) -> Self {
        Self(v.to_vec())
    }
}

/// Comma-separated directions, e.g. `1,2,3`; the empty sequence prints as `()`.
impl fmt::Display for MutationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for MutationSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Self::empty());
        }
        let mut column = 1;
        let mut out = Vec::new();
        for part in s.split(',') {
            let k = part.trim().parse::<usize>().map_err(|_| Error::Parse {
                line: 1,
                column,
                message: format!("`{}` is not a 1-based direction", part.trim()),
            })?;
            if k == 0 {
                return Err(Error::Parse {
                    line: 1,
                    column,
                    message: "directions are 1-based".into(),
                });
            }
            out.push(k);
            column += part.len() + 1;
        }
        Ok(Self(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let s: MutationSequence = "1, 2,3".parse().unwrap();
        assert_eq!(s.directions(), &[1, 2, 3]);
        assert_eq!(s.to_string(), "1,2,3");
        assert_eq!("".parse::<MutationSequence>().unwrap(), MutationSequence::empty());
        assert!(matches!(
            "1,0".parse::<MutationSequence>(),
            Err(Error::Parse { column: 3, .. })
        ));
        assert!("1,a".parse::<MutationSequence>().is_err());
    }

    #[test]
    fn validation() {
        assert!(MutationSequence::from([1, 3]).validate(3).is_ok());
        assert_eq!(
            MutationSequence::from([1, 4]).validate(3),
            Err(Error::IndexOutOfRange { index: 4, n: 3 })
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(MutationSequence::all_without_repeats(4, 0).len(), 1);
        assert_eq!(MutationSequence::all_without_repeats(4, 3).len(), 36);
        let two = MutationSequence::all_without_repeats(2, 3);
        assert_eq!(two, vec![MutationSequence::from([1, 2, 1]), MutationSequence::from([2, 1, 2])]);
    }
}
