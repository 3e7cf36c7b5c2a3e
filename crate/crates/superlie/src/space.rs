//! Parity-graded spaces and sparse vectors over the Gaussian rationals.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::scalar::Scalar;

/// Z/2 degree of a homogeneous element. Governs every sign in the crate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_usize(n: usize) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Addition in Z/2.
    pub fn plus(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `(-1)^{p(self)·p(other)}` as a machine sign.
    pub fn koszul_sign(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// An ordered, labeled basis with a parity per basis element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperSpace {
    labels: Vec<String>,
    parities: Vec<Parity>,
}

impl SuperSpace {
    pub fn new(labels: Vec<String>, parities: Vec<Parity>) -> Result<Self, Error> {
        if labels.len() != parities.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels vs {} parities",
                labels.len(),
                parities.len()
            )));
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::InvalidParameters(format!("duplicate basis label `{l}`")));
            }
        }
        Ok(SuperSpace { labels, parities })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Sparse coordinate vector; zero coefficients are never stored, so
/// structural equality is semantic equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Vector {
    coords: BTreeMap<usize, Scalar>,
}

impl Vector {
    pub fn zero() -> Vector {
        Vector::default()
    }

    pub fn unit(i: usize) -> Vector {
        Vector::from_terms([(i, Scalar::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Scalar)>>(terms: I) -> Vector {
        let mut v = Vector::zero();
        for (i, c) in terms {
            v.add_term(i, &c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coords.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords.iter().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.coords.get(&i)
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coords.get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Smallest index with nonzero coefficient.
    pub fn leading_index(&self) -> Option<usize> {
        self.coords.keys().next().copied()
    }

    pub fn add_term(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coords.get_mut(&i) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.coords.remove(&i);
                }
            }
            None => {
                self.coords.insert(i, c.clone());
            }
        }
    }

    /// `self += c · other`, the elimination workhorse.
    pub fn add_scaled(&mut self, other: &Vector, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (i, x) in other.iter() {
            self.add_term(i, &(x * c));
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Vector {
        let mut v = Vector::zero();
        v.add_scaled(self, c);
        v
    }

    pub fn negated(&self) -> Vector {
        self.scaled(&Scalar::from_int(-1))
    }

    pub fn add(&self, other: &Vector) -> Vector {
        let mut v = self.clone();
        v.add_scaled(other, &Scalar::one());
        v
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        let mut v = self.clone();
        v.add_scaled(other, &Scalar::from_int(-1));
        v
    }

    /// Checks every index lies below `dim`.
    pub fn fits(&self, dim: usize) -> bool {
        self.coords.keys().next_back().map_or(true, |&i| i < dim)
    }

    /// Parity of the vector if homogeneous, `None` for zero or mixed.
    pub fn homogeneous_parity(&self, space: &SuperSpace) -> Option<Parity> {
        let mut parity = None;
        for (i, _) in self.iter() {
            let p = space.parity(i);
            match parity {
                None => parity = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        parity
    }

    /// Splits into (even part, odd part).
    pub fn parity_split(&self, space: &SuperSpace) -> (Vector, Vector) {
        let mut even = Vector::zero();
        let mut odd = Vector::zero();
        for (i, c) in self.iter() {
            match space.parity(i) {
                Parity::Even => even.add_term(i, c),
                Parity::Odd => odd.add_term(i, c),
            }
        }
        (even, odd)
    }

    /// Renders on the labels of `space`, e.g. `E(1,2) - 1/2·E(2,1)`.
    pub fn display(&self, space: &SuperSpace) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.iter() {
            let label = space.label(i);
            if c.is_one() {
                parts.push(label.to_string());
            } else {
                parts.push(format!("{c}·{label}"));
            }
        }
        parts.join(" + ")
    }
}

impl FromIterator<(usize, Scalar)> for Vector {
    fn from_iter<I: IntoIterator<Item = (usize, Scalar)>>(iter: I) -> Self {
        Vector::from_terms(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space2() -> SuperSpace {
        SuperSpace::new(
            vec!["e1".into(), "e2".into()],
            vec![Parity::Even, Parity::Odd],
        )
        .unwrap()
    }

    #[test]
    fn no_stored_zeros() {
        let mut v = Vector::unit(0);
        v.add_term(0, &Scalar::from_int(-1));
        assert!(v.is_zero());
        assert_eq!(v.support_len(), 0);
    }

    #[test]
    fn add_scaled_cancels() {
        let v = Vector::from_terms([(0, Scalar::from_int(2)), (1, Scalar::i())]);
        let mut w = v.clone();
        w.add_scaled(&v, &Scalar::from_int(-1));
        assert!(w.is_zero());
    }

    #[test]
    fn homogeneity() {
        let s = space2();
        assert_eq!(Vector::unit(0).homogeneous_parity(&s), Some(Parity::Even));
        assert_eq!(Vector::unit(1).homogeneous_parity(&s), Some(Parity::Odd));
        let mixed = Vector::from_terms([(0, Scalar::one()), (1, Scalar::one())]);
        assert_eq!(mixed.homogeneous_parity(&s), None);
        let (e, o) = mixed.parity_split(&s);
        assert_eq!(e, Vector::unit(0));
        assert_eq!(o, Vector::unit(1));
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(SuperSpace::new(
            vec!["a".into(), "a".into()],
            vec![Parity::Even, Parity::Even]
        )
        .is_err());
    }

    #[test]
    fn koszul_sign_table() {
        assert_eq!(Parity::Even.koszul_sign(Parity::Even), 1);
        assert_eq!(Parity::Even.koszul_sign(Parity::Odd), 1);
        assert_eq!(Parity::Odd.koszul_sign(Parity::Odd), -1);
    }
}
