//! Finite monoids given by multiplication tables.

use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    name: String,
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteMonoid {
    /// Checks closure, associativity and the identity laws.
    pub fn new(
        name: impl Into<String>,
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        identity: usize,
    ) -> Result<Self> {
        let n = elements.len();
        if n == 0 || identity >= n {
            return Err(Error::Invalid("a monoid needs an identity element".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
            return Err(Error::Invalid("multiplication table is not closed".into()));
        }
        for a in 0..n {
            if table[identity][a] != a || table[a][identity] != a {
                return Err(Error::Invalid(format!("`{}` is not an identity", elements[identity])));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Invalid("multiplication is not associative".into()));
                    }
                }
            }
        }
        Ok(Self {
            name: name.into(),
            elements,
            table,
            identity,
        })
    }

    pub fn trivial() -> Self {
        Self::new("1", vec!["1".into()], vec![vec![0]], 0).expect("valid table")
    }

    /// `ℤ/n` under addition.
    pub fn cyclic(n: usize) -> Self {
        let n = n.max(1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(
            format!("Z/{n}"),
            (0..n).map(|a| a.to_string()).collect(),
            table,
            0,
        )
        .expect("valid table")
    }

    /// `({0,1}, max)`, identity 0.
    pub fn boolean_or() -> Self {
        Self::new(
            "({0,1},max)",
            vec!["0".into(), "1".into()],
            vec![vec![0, 1], vec![1, 1]],
            0,
        )
        .expect("valid table")
    }

    /// `({0,1}, min)`, identity 1.
    pub fn boolean_and() -> Self {
        Self::new(
            "({0,1},min)",
            vec!["0".into(), "1".into()],
            vec![vec![0, 0], vec![0, 1]],
            1,
        )
        .expect("valid table")
    }

    /// The symmetric group on `n` letters, elements as value sequences.
    pub fn symmetric_group(n: usize) -> Self {
        let perms = crate::combinatorics::Permutation::all(n);
        let index = |p: &crate::combinatorics::Permutation| {
            perms.iter().position(|q| q == p).expect("closed under products")
        };
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index(&a.then(b).expect("same length"))).collect())
            .collect();
        let identity = index(&crate::combinatorics::Permutation::identity(n));
        Self::new(
            format!("S{n}"),
            perms.iter().map(|p| format!("{p:?}")).collect(),
            table,
            identity,
        )
        .expect("valid table")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element_name(&self, a: usize) -> &str {
        &self.elements[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn product(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.identity, |acc, x| self.mul(acc, x))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.order()).find(|&b| self.mul(a, b) == self.identity && self.mul(b, a) == self.identity)
    }

    pub fn is_group(&self) -> bool {
        (0..self.order()).all(|a| self.inverse(a).is_some())
    }
}

/// Accepts `Z/n`, `Sn`, `trivial`, `max` and `min`, plus the monoid names
/// produced by the constructors above.
impl FromStr for FiniteMonoid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownKind(format!("monoid `{s}`"));
        match s {
            "trivial" | "1" => return Ok(Self::trivial()),
            "max" | "({0,1},max)" => return Ok(Self::boolean_or()),
            "min" | "({0,1},min)" => return Ok(Self::boolean_and()),
            _ => {}
        }
        if let Some(n) = s.strip_prefix("Z/").or_else(|| s.strip_prefix("ℤ/")) {
            let n: usize = n.parse().map_err(|_| unknown())?;
            if n == 0 {
                return Err(unknown());
            }
            return Ok(Self::cyclic(n));
        }
        if let Some(n) = s.strip_prefix('S') {
            let n: usize = n.parse().map_err(|_| unknown())?;
            if n > 5 {
                return Err(unknown());
            }
            return Ok(Self::symmetric_group(n));
        }
        Err(unknown())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_examples() {
        assert!(FiniteMonoid::cyclic(3).is_group());
        assert!(FiniteMonoid::cyclic(3).is_commutative());
        assert!(!FiniteMonoid::boolean_or().is_group());
        let s3 = FiniteMonoid::symmetric_group(3);
        assert_eq!(s3.order(), 6);
        assert!(s3.is_group() && !s3.is_commutative());
    }

    #[test]
    fn parses_names() {
        assert_eq!("Z/3".parse::<FiniteMonoid>().unwrap(), FiniteMonoid::cyclic(3));
        assert_eq!("max".parse::<FiniteMonoid>().unwrap(), FiniteMonoid::boolean_or());
        assert_eq!("S3".parse::<FiniteMonoid>().unwrap().order(), 6);
        assert!("Z/0".parse::<FiniteMonoid>().is_err());
        assert!("Q8".parse::<FiniteMonoid>().is_err());
    }

    #[test]
    fn rejects_bad_identity() {
        let t = vec![vec![0, 1], vec![1, 0]];
        assert!(FiniteMonoid::new("x", vec!["a".into(), "b".into()], t, 0).is_ok());
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteMonoid::new("x", vec!["a".into(), "b".into()], bad, 1).is_err());
    }
}
