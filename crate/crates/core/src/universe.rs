use std::collections::HashSet;

use crate::error::{Error, Result};

/// An indexed finite carrier set with stable, distinct element names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    names: Vec<String>,
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut seen = HashSet::with_capacity(names.len());
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        Ok(Universe { names })
    }

    /// Universe `{0, 1, ..., size-1}` named by decimal indices.
    pub fn indexed(size: usize) -> Result<Self> {
        Self::new((0..size).map(|i| i.to_string()))
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_duplicates() {
        assert_eq!(Universe::new(Vec::<String>::new()), Err(Error::EmptyUniverse));
        assert_eq!(
            Universe::new(["a", "b", "a"]),
            Err(Error::DuplicateName("a".into()))
        );
    }

    #[test]
    fn indexed_names() {
        let u = Universe::indexed(3).unwrap();
        assert_eq!(u.size(), 3);
        assert_eq!(u.name(2), "2");
        assert_eq!(u.index_of("1"), Some(1));
    }
}
