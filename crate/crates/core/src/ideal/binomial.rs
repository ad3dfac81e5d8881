use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::monomial::default_name;
use super::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::semigroup::Point;

/// A pure difference `z^lead - z^tail`, or a monomial `z^lead` when `tail`
/// is absent. All coefficients are `+1`/`-1`, which is closed under
/// S-polynomials and reductions, so no coefficient field is needed.
///
/// Inside an algorithm `lead` is the leading monomial for the active order;
/// [`Binomial::oriented`] restores that after a change of order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    lead: Monomial,
    tail: Option<Monomial>,
}

impl Binomial {
    /// `z^plus - z^minus`; the terms must differ.
    pub fn new(plus: Monomial, minus: Monomial) -> Result<Self> {
        if plus.nvars() != minus.nvars() {
            return Err(Error::LengthMismatch(plus.nvars(), minus.nvars()));
        }
        if plus == minus {
            return Err(Error::InvalidArgument(format!("binomial {plus} - {plus} is zero")));
        }
        Ok(Binomial {
            lead: plus,
            tail: Some(minus),
        })
    }

    pub fn monomial(m: Monomial) -> Self {
        Binomial { lead: m, tail: None }
    }

    /// `a - b` oriented by `order`; `None` when the difference is zero.
    pub(crate) fn from_terms<O: MonomialOrder + ?Sized>(
        a: Option<Monomial>,
        b: Option<Monomial>,
        order: &O,
    ) -> Option<Self> {
        match (a, b) {
            (None, None) => None,
            (Some(m), None) | (None, Some(m)) => Some(Binomial::monomial(m)),
            (Some(a), Some(b)) => match order.compare(&a, &b) {
                Ordering::Equal => None,
                Ordering::Greater => Some(Binomial { lead: a, tail: Some(b) }),
                Ordering::Less => Some(Binomial { lead: b, tail: Some(a) }),
            },
        }
    }

    /// Binomial `z^{u+} - z^{u-}` of an integer vector.
    pub fn from_lattice_vector(v: &[i64]) -> Result<Option<Self>> {
        let conv = |x: i64| u32::try_from(x).map_err(|_| Error::Overflow("lattice exponent"));
        let plus = v.iter().map(|&x| conv(x.max(0))).collect::<Result<Vec<_>>>()?;
        let minus = v.iter().map(|&x| conv((-x).max(0))).collect::<Result<Vec<_>>>()?;
        if v.iter().all(|&x| x == 0) {
            return Ok(None);
        }
        Ok(Some(Binomial {
            lead: Monomial::new(plus),
            tail: Some(Monomial::new(minus)),
        }))
    }

    pub fn oriented<O: MonomialOrder + ?Sized>(&self, order: &O) -> Self {
        match &self.tail {
            Some(t) if order.compare(t, &self.lead) == Ordering::Greater => Binomial {
                lead: t.clone(),
                tail: Some(self.lead.clone()),
            },
            _ => self.clone(),
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn tail(&self) -> Option<&Monomial> {
        self.tail.as_ref()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        std::iter::once(&self.lead).chain(self.tail.iter())
    }

    pub fn nvars(&self) -> usize {
        self.lead.nvars()
    }

    pub fn is_monomial(&self) -> bool {
        self.tail.is_none()
    }

    /// Homogeneous in the standard grading.
    pub fn is_homogeneous(&self) -> bool {
        self.tail.as_ref().is_none_or(|t| t.degree() == self.lead.degree())
    }

    /// `deg(f) - deg(LM(f))`, for a binomial oriented by a local degree order.
    pub fn ecart(&self) -> u64 {
        self.tail
            .as_ref()
            .map_or(0, |t| t.degree().saturating_sub(self.lead.degree()))
    }

    /// Lowest-degree homogeneous summand.
    pub fn initial_form(&self) -> Binomial {
        match &self.tail {
            Some(t) if t.degree() < self.lead.degree() => Binomial::monomial(t.clone()),
            Some(t) if t.degree() > self.lead.degree() => Binomial::monomial(self.lead.clone()),
            _ => self.clone(),
        }
    }

    /// Variables occurring in either term.
    pub fn support(&self) -> BTreeSet<usize> {
        self.terms().flat_map(|m| m.support()).collect()
    }

    pub fn has_coprime_terms(&self) -> bool {
        self.tail.as_ref().is_none_or(|t| t.is_coprime(&self.lead))
    }

    /// Both terms have the same image under `z_i -> columns[i]`.
    pub fn is_balanced(&self, columns: &[Point]) -> Result<bool> {
        match &self.tail {
            Some(t) => Ok(self.lead.evaluate(columns)? == t.evaluate(columns)?),
            None => Ok(false),
        }
    }

    pub fn degree_in(&self, columns: &[Point]) -> Result<Point> {
        self.lead.evaluate(columns)
    }

    /// Removes the largest power of `z_index` dividing both terms.
    pub fn divide_out_variable(&self, index: usize) -> Binomial {
        let Some(t) = &self.tail else {
            let mut e = self.lead.exponents().to_vec();
            e[index] = 0;
            return Binomial::monomial(Monomial::new(e));
        };
        let k = self.lead.exponents()[index].min(t.exponents()[index]);
        if k == 0 {
            return self.clone();
        }
        let strip = |m: &Monomial| {
            let mut e = m.exponents().to_vec();
            e[index] -= k;
            Monomial::new(e)
        };
        Binomial {
            lead: strip(&self.lead),
            tail: Some(strip(t)),
        }
    }

    /// Image under `z_j -> 0` for `j < count`; `None` when it vanishes.
    pub fn kill_first(&self, count: usize) -> Option<Binomial> {
        let lead = self.lead.kill_first(count);
        let tail = self.tail.as_ref().and_then(|t| t.kill_first(count));
        match (lead, tail) {
            (None, None) => None,
            (Some(m), None) | (None, Some(m)) => Some(Binomial::monomial(m)),
            (Some(lead), Some(tail)) => Some(Binomial { lead, tail: Some(tail) }),
        }
    }

    /// Appends variables with zero exponent.
    pub fn extend_vars(&self, extra: usize) -> Binomial {
        let pad = |m: &Monomial| {
            let mut e = m.exponents().to_vec();
            e.extend(std::iter::repeat_n(0, extra));
            Monomial::new(e)
        };
        Binomial {
            lead: pad(&self.lead),
            tail: self.tail.as_ref().map(pad),
        }
    }

    /// Equality as elements of the ideal, i.e. up to sign.
    pub fn same_up_to_sign(&self, other: &Binomial) -> bool {
        match (&self.tail, &other.tail) {
            (None, None) => self.lead == other.lead,
            (Some(a), Some(b)) => {
                (self.lead == other.lead && a == b) || (&self.lead == b && a == &other.lead)
            }
            _ => false,
        }
    }

    pub fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        match &self.tail {
            Some(t) => format!("{} - {}", self.lead.render(name), t.render(name)),
            None => self.lead.render(name),
        }
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_name))
    }
}

impl Serialize for Binomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Binomial", 3)?;
        s.serialize_field("lead", &self.lead)?;
        s.serialize_field("tail", &self.tail)?;
        s.serialize_field("text", &self.to_string())?;
        s.end()
    }
}
