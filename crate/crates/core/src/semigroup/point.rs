use std::fmt;

use serde::{Deserialize, Serialize};

/// An element of `ℕ^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<u64>);

impl Point {
    pub fn new(coords: Vec<u64>) -> Self {
        Point(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Point(vec![0; dim])
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = vec![0; dim];
        v[index] = 1;
        Point(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn coord_sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn checked_add(&self, other: &Point) -> Option<Point> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(Point)
    }

    /// `self - other` when it stays in `ℕ^d`.
    pub fn checked_sub(&self, other: &Point) -> Option<Point> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Point)
    }

    pub fn checked_scale(&self, k: u64) -> Option<Point> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k))
            .collect::<Option<Vec<_>>>()
            .map(Point)
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &Point) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub(crate) fn to_i64(&self) -> Vec<i64> {
        self.0
            .iter()
            .map(|&c| i64::try_from(c).expect("coordinates are validated to fit in i64"))
            .collect()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl From<Vec<u64>> for Point {
    fn from(v: Vec<u64>) -> Self {
        Point(v)
    }
}
