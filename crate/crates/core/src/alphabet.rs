use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A finite, linearly ordered set of generators.
///
/// Generators are listed smallest-first: the rank of a generator is its
/// position in the list.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    rank: HashMap<String, usize>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut rank = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidAlphabet("empty generator name".into()));
            }
            if rank.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidAlphabet(format!(
                    "duplicate generator `{name}`"
                )));
            }
        }
        Ok(Alphabet { names, rank })
    }

    /// Generators `prefix1 < prefix2 < ... < prefixN`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        Self::new((1..=n).map(|i| format!("{prefix}{i}"))).expect("indexed names are distinct")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn rank(&self, name: &str) -> Option<usize> {
        self.rank.get(name).copied()
    }

    pub(crate) fn check_letter(&self, letter: u32) -> Result<()> {
        if (letter as usize) < self.len() {
            Ok(())
        } else {
            Err(Error::InvalidWord {
                index: letter as usize,
                size: self.len(),
            })
        }
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.names).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_follow_listing_order() {
        let a = Alphabet::new(["x", "y", "z"]).unwrap();
        assert_eq!(a.rank("x"), Some(0));
        assert_eq!(a.rank("z"), Some(2));
        assert_eq!(a.rank("w"), None);
    }

    #[test]
    fn rejects_duplicates_and_empty_names() {
        assert!(matches!(
            Alphabet::new(["x", "x"]),
            Err(Error::InvalidAlphabet(_))
        ));
        assert!(Alphabet::new(["x", ""]).is_err());
    }
}
