use num_integer::Integer;
use serde::Serialize;

use super::{is_complete_intersection, CiCertificate};
use crate::error::{Error, Result};
use crate::ideal::{buchberger, toric_ideal, Binomial, Monomial, MonomialOrder, TermOrder};
use crate::limits::Limits;
use crate::semigroup::{apery_set, is_cohen_macaulay_ring, AffineSemigroup, AperySet, Point};

/// `⟨a^r, a^{r-1}b, ..., b^r⟩` with the data it is known to have.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeometricInstance {
    pub a: u64,
    pub b: u64,
    pub r: u32,
    pub semigroup: AffineSemigroup,
    /// `z_{i+1}^a - z_i^b` for `i = 1..r`.
    pub expected_ideal: Vec<Binomial>,
    /// `C(r, i)`.
    pub expected_betti: Vec<usize>,
    /// `dim_k A/(I + (z_1)) = a^r`.
    pub gastinger_dimension: u64,
}

fn binomial_coefficient(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn geometric_semigroup(a: u64, b: u64, r: u32) -> Result<GeometricInstance> {
    if a.gcd(&b) != 1 {
        return Err(Error::GcdViolation(a, b));
    }
    if a >= b {
        return Err(Error::OrderViolation(a, b));
    }
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let overflow = || Error::Overflow("geometric generator");
    let gens: Vec<u64> = (0..=r)
        .map(|i| {
            let x = a.checked_pow(r - i).ok_or_else(overflow)?;
            x.checked_mul(b.checked_pow(i).ok_or_else(overflow)?).ok_or_else(overflow)
        })
        .collect::<Result<_>>()?;
    let semigroup = AffineSemigroup::numerical(&gens)?;
    let n = gens.len();
    let ea = u32::try_from(a).map_err(|_| overflow())?;
    let eb = u32::try_from(b).map_err(|_| overflow())?;
    let expected_ideal = (1..n)
        .map(|i| Binomial::new(Monomial::power(n, i, ea), Monomial::power(n, i - 1, eb)))
        .collect::<Result<_>>()?;
    let expected_betti = (0..=u64::from(r))
        .map(|i| binomial_coefficient(u64::from(r), i) as usize)
        .collect();
    Ok(GeometricInstance {
        a,
        b,
        r,
        semigroup,
        expected_ideal,
        expected_betti,
        gastinger_dimension: gens[0],
    })
}

/// Parameters `(a, b, r)` with `a ∈ {2, 3}`, `a < b <= 7` coprime and
/// `r ∈ {1, 2, 3}`.
pub fn geometric_corpus() -> Vec<(u64, u64, u32)> {
    let mut out = Vec::new();
    for a in [2u64, 3] {
        for b in a + 1..=7 {
            if a.gcd(&b) != 1 {
                continue;
            }
            for r in 1..=3 {
                out.push((a, b, r));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectiveClosure {
    /// Homogenized degrevlex basis; `z_0` is variable 0.
    pub ideal: Vec<Binomial>,
    /// The semigroup of the projective curve in `ℕ^2`, with generators
    /// `(0, m)` for `z_0` and `(m_i, m - m_i)` for `z_i`, in variable order.
    pub semigroup: AffineSemigroup,
    /// The homogenized ideal is the toric ideal of `semigroup`.
    pub ideal_matches: bool,
    pub cohen_macaulay: bool,
    /// Cohen–Macaulay with a unique maximal Apéry element.
    pub gorenstein: bool,
    pub ci: CiCertificate,
}

fn homogenize(f: &Binomial) -> Binomial {
    let Some(t) = f.tail() else {
        return Binomial::monomial(Monomial::new([vec![0], f.lead().exponents().to_vec()].concat()));
    };
    let top = f.lead().degree().max(t.degree());
    let lift = |m: &Monomial| {
        let mut e = vec![(top - m.degree()) as u32];
        e.extend_from_slice(m.exponents());
        Monomial::new(e)
    };
    Binomial::new(lift(f.lead()), lift(t)).expect("distinct terms stay distinct")
}

/// Unique maximal element of `Ap` for `s <= t  iff  t - s ∈ S`.
fn has_unique_maximal(s: &AffineSemigroup, ap: &AperySet) -> bool {
    let points = ap.points();
    let maximal = points
        .iter()
        .filter(|p| {
            !points
                .iter()
                .any(|q| q != *p && q.checked_sub(p).is_some_and(|diff| s.contains(&diff)))
        })
        .count();
    maximal == 1
}

pub fn projective_closure(s: &AffineSemigroup, limits: &Limits) -> Result<ProjectiveClosure> {
    let gens = s.numerical_generators()?;
    let top = *gens.iter().max().expect("semigroups are nonempty");
    let toric = toric_ideal(s, limits)?;
    let mut ideal: Vec<Binomial> = if toric.is_empty() {
        Vec::new()
    } else {
        buchberger(toric.generators(), &TermOrder::DegRevLex, limits)?
            .binomials
            .iter()
            .map(homogenize)
            .collect()
    };
    ideal.sort_by(|x, y| TermOrder::DegRevLex.compare(x.lead(), y.lead()).then_with(|| x.cmp(y)));

    let mut columns = vec![Point::new(vec![0, top])];
    columns.extend(gens.iter().map(|&m| Point::new(vec![m, top - m])));
    let semigroup = AffineSemigroup::new(columns.clone(), 2)?;
    // variable k of `ideal` is generator perm[k] of `semigroup`
    let perm: Vec<usize> = columns
        .iter()
        .map(|c| semigroup.generators().iter().position(|g| g == c).expect("same generators"))
        .collect();
    let reorder = |m: &Monomial| {
        let mut e = vec![0u32; perm.len()];
        for (k, &x) in m.exponents().iter().enumerate() {
            e[perm[k]] = x;
        }
        Monomial::new(e)
    };
    let permuted: Vec<Binomial> = ideal
        .iter()
        .map(|b| match b.tail() {
            Some(t) => Binomial::new(reorder(b.lead()), reorder(t)),
            None => Ok(Binomial::monomial(reorder(b.lead()))),
        })
        .collect::<Result<_>>()?;
    let closure_ideal = toric_ideal(&semigroup, limits)?;
    let order = TermOrder::DegRevLex;
    let reduced = |g: &[Binomial]| -> Result<Vec<Binomial>> {
        if g.is_empty() {
            Ok(Vec::new())
        } else {
            Ok(buchberger(g, &order, limits)?.binomials)
        }
    };
    let ideal_matches = reduced(&permuted)? == reduced(closure_ideal.generators())?;
    let ap = apery_set(&semigroup, limits)?;
    let cohen_macaulay = is_cohen_macaulay_ring(&semigroup, &ap);
    Ok(ProjectiveClosure {
        ideal,
        ideal_matches,
        cohen_macaulay,
        gorenstein: cohen_macaulay && has_unique_maximal(&semigroup, &ap),
        ci: is_complete_intersection(&semigroup, limits)?,
        semigroup,
    })
}
