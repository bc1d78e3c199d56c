//! Exact coefficients and generic linear combinations.
//!
//! Every element of the kernel is a finite formal sum of monomials with
//! rational coefficients. `LinComb` keeps the invariants all other modules
//! rely on: no zero coefficients are stored, each monomial appears once,
//! and iteration follows the monomial order of the key type.

use num::{BigInt, BigRational, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exact rational coefficient, always in lowest terms with positive
/// denominator (maintained by `BigRational` itself).
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Rational from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// A finite formal sum of monomials of kind `K` with nonzero rational
/// coefficients. Iteration order is the `Ord` of `K`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rat>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord> LinComb<K> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    /// A single monomial with coefficient `c` (empty sum if `c = 0`).
    pub fn term(key: K, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(key, c);
        }
        LinComb { terms }
    }

    /// A single monomial with coefficient 1.
    pub fn monomial(key: K) -> Self {
        Self::term(key, rat(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &K) -> Rat {
        self.terms.get(key).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn contains(&self, key: &K) -> bool {
        self.terms.contains_key(key)
    }

    /// The greatest monomial with its coefficient, if any.
    pub fn leading(&self) -> Option<(&K, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Adds `c * key` in place.
    pub fn add_term(&mut self, key: K, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, c: &Rat, other: &Self)
    where
        K: Clone,
    {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), c * v);
        }
    }

    /// Coefficient-wise sum; zero coefficients are dropped.
    pub fn add(&self, other: &Self) -> Self
    where
        K: Clone,
    {
        let mut out = self.clone();
        out.add_scaled(&rat(1), other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self
    where
        K: Clone,
    {
        let mut out = self.clone();
        out.add_scaled(&rat(-1), other);
        out
    }

    /// Every coefficient multiplied by `c`; empty if `c = 0`.
    pub fn scale(&self, c: &Rat) -> Self
    where
        K: Clone,
    {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), c * v))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self
    where
        K: Clone,
    {
        self.scale(&rat(-1))
    }

    /// Maps every monomial through `f`, collecting coefficients exactly.
    pub fn map_terms<L: Ord>(&self, mut f: impl FnMut(&K) -> L) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Bilinear extension of a product on monomials.
    pub fn mul_with(&self, other: &Self, mut prod: impl FnMut(&K, &K) -> K) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add_term(prod(a, b), ca * cb);
            }
        }
        out
    }
}

impl<K: Ord + Clone> std::ops::Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: Self) -> LinComb<K> {
        LinComb::add(self, rhs)
    }
}

impl<K: Ord + Clone> std::ops::Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: Self) -> LinComb<K> {
        LinComb::sub(self, rhs)
    }
}

impl<K: Ord> FromIterator<(K, Rat)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rat)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

/// Rank over the rationals of the span of `vectors`, by exact Gaussian
/// elimination on the coefficient matrix (monomials as columns).
pub fn lc_rank<K: Ord + Clone>(vectors: &[LinComb<K>]) -> usize {
    let mut columns: Vec<&K> = Vec::new();
    for v in vectors {
        for (k, _) in v.iter() {
            columns.push(k);
        }
    }
    columns.sort();
    columns.dedup();
    let col_index: BTreeMap<&K, usize> = columns.iter().enumerate().map(|(i, k)| (*k, i)).collect();

    let ncols = columns.len();
    let mut rows: Vec<Vec<Rat>> = vectors
        .iter()
        .map(|v| {
            let mut row = vec![Rat::zero(); ncols];
            for (k, c) in v.iter() {
                row[col_index[k]] = c.clone();
            }
            row
        })
        .collect();

    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &lead;
            for c in col..ncols {
                let delta = &factor * &rows[rank][c];
                rows[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag == rat(1) {
                write!(f, "{k}")?;
            } else {
                write!(f, "{mag}*{k}")?;
            }
        }
        Ok(())
    }
}
