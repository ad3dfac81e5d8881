use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector of a monomial `z_1^e_1 ... z_n^e_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    /// `z_index^power`
    pub fn power(nvars: usize, index: usize, power: u32) -> Self {
        let mut e = vec![0; nvars];
        e[index] = power;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect())
    }

    pub fn times_variable(&self, index: usize) -> Monomial {
        let mut e = self.0.clone();
        e[index] += 1;
        Monomial(e)
    }

    /// Largest index with a nonzero exponent.
    pub fn max_variable(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Index of the single variable when the monomial is a pure power.
    pub fn pure_power_variable(&self) -> Option<usize> {
        let mut support = self.support();
        let first = support.next()?;
        support.next().is_none().then_some(first)
    }

    /// Monomial with one more variable appended (exponent `e`).
    pub fn extend(&self, e: u32) -> Monomial {
        let mut v = self.0.clone();
        v.push(e);
        Monomial(v)
    }

    /// Sets every variable in `0..count` to zero; `None` when one of them
    /// occurs (the monomial maps to zero).
    pub fn kill_first(&self, count: usize) -> Option<Monomial> {
        self.0[..count].iter().all(|&e| e == 0).then(|| self.clone())
    }

    /// The element `sum e_i * columns[i]` of the semigroup.
    pub fn evaluate(&self, columns: &[crate::semigroup::Point]) -> Result<crate::semigroup::Point> {
        if columns.len() != self.0.len() {
            return Err(Error::LengthMismatch(columns.len(), self.0.len()));
        }
        let dim = columns.first().map_or(0, |c| c.dim());
        let mut out = vec![0u64; dim];
        for (col, &e) in columns.iter().zip(&self.0) {
            for (o, &c) in out.iter_mut().zip(col.coords()) {
                *o = c
                    .checked_mul(e as u64)
                    .and_then(|x| o.checked_add(x))
                    .ok_or(Error::Overflow("monomial evaluation"))?;
            }
        }
        Ok(crate::semigroup::Point::new(out))
    }

    pub fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        let parts: Vec<String> = self
            .support()
            .map(|i| match self.0[i] {
                1 => name(i),
                e => format!("{}^{}", name(i), e),
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Variable names `z1, z2, ...` (1-based, matching the usual notation).
pub fn default_name(i: usize) -> String {
    format!("z{}", i + 1)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_name))
    }
}

impl From<Vec<u32>> for Monomial {
    fn from(v: Vec<u32>) -> Self {
        Monomial(v)
    }
}
