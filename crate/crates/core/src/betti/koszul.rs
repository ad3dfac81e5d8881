//! Graded Betti numbers of `k[z]/I` for homogeneous binomial ideals, from
//! the homology of the Koszul complex on the variables.

use std::collections::{BTreeSet, HashMap};

use super::{taylor_lcms, BettiTable};
use crate::error::{Error, Result};
use crate::ideal::{
    buchberger, ideal_contains, minimal_monomial_generators, normal_form_monomial, Binomial,
    Monomial, TermOrder,
};
use crate::limits::Limits;
use crate::linalg::{combinations, rank};
use crate::semigroup::Point;

/// Grading key of a monomial: total degree, then the optional multidegree.
struct Grading<'a> {
    columns: Option<&'a [Point]>,
}

impl Grading<'_> {
    fn key(&self, m: &Monomial) -> Result<Point> {
        let mut k = vec![m.degree()];
        if let Some(cols) = self.columns {
            k.extend_from_slice(m.evaluate(cols)?.coords());
        }
        Ok(Point::new(k))
    }

    fn face_key(&self, face: &[usize], nvars: usize) -> Result<Point> {
        let mut e = vec![0u32; nvars];
        for &v in face {
            e[v] = 1;
        }
        self.key(&Monomial::new(e))
    }
}

/// Number of minimal generators of a homogeneous ideal: scanning by degree,
/// keep each generator not already in the ideal of those kept.
pub fn minimal_generator_count(gens: &[Binomial], limits: &Limits) -> Result<usize> {
    let mut sorted: Vec<Binomial> = gens.to_vec();
    sorted.sort_by_key(|g| (g.lead().degree(), g.clone()));
    let mut kept: Vec<Binomial> = Vec::new();
    let order = TermOrder::DegRevLex;
    for g in sorted {
        let inside = !kept.is_empty() && {
            let gb = buchberger(&kept, &order, limits)?;
            ideal_contains(&gb.binomials, &g, &order)
        };
        if !inside {
            kept.push(g);
        }
    }
    Ok(kept.len())
}

/// Graded Betti numbers of `k[z_1..z_n]/I` for `I` generated by standard
/// homogeneous binomials and monomials. Degrees are the total degree.
pub fn betti_standard_graded(gens: &[Binomial], nvars: usize, limits: &Limits) -> Result<BettiTable> {
    betti_standard_graded_with_grading(gens, nvars, None, limits)
}

/// As [`betti_standard_graded`], additionally split by the multidegree
/// `z_i ↦ columns[i]` when given (the generators must be homogeneous for
/// it too). Degrees are then `(total degree, multidegree...)`.
pub fn betti_standard_graded_with_grading(
    gens: &[Binomial],
    nvars: usize,
    columns: Option<&[Point]>,
    limits: &Limits,
) -> Result<BettiTable> {
    for (i, g) in gens.iter().enumerate() {
        if g.nvars() != nvars {
            return Err(Error::LengthMismatch(g.nvars(), nvars));
        }
        let graded = match (columns, g.tail()) {
            (Some(cols), Some(_)) => g.is_balanced(cols)?,
            _ => true,
        };
        if !g.is_homogeneous() || !graded {
            return Err(Error::NonHomogeneousInput(i));
        }
    }
    let grading = Grading { columns };
    let order = TermOrder::DegRevLex;
    let gb = if gens.is_empty() {
        Vec::new()
    } else {
        buchberger(gens, &order, limits)?.binomials
    };
    let lms = minimal_monomial_generators(&gb.iter().map(|b| b.lead().clone()).collect::<Vec<_>>());
    let candidates: BTreeSet<Point> = taylor_lcms(&lms, nvars, limits)?
        .iter()
        .map(|l| grading.key(l))
        .collect::<Result<_>>()?;
    let top = candidates.iter().map(|k| k.coords()[0]).max().unwrap_or(0);
    if top > limits.max_betti_degree as u64 {
        return Err(Error::resource("Koszul degree", limits.max_betti_degree));
    }

    // standard monomials of degree <= top, grouped by grading key
    let standard = |m: &Monomial| !lms.iter().any(|l| l.divides(m));
    let mut by_key: HashMap<Point, Vec<Monomial>> = HashMap::new();
    let mut layer = vec![Monomial::one(nvars)];
    let mut count = 0usize;
    for _ in 0..=top {
        let mut next = Vec::new();
        for m in &layer {
            by_key.entry(grading.key(m)?).or_default().push(m.clone());
            for v in m.max_variable().unwrap_or(0)..nvars {
                let w = m.times_variable(v);
                if standard(&w) {
                    next.push(w);
                }
            }
        }
        count += layer.len();
        if count > limits.max_standard_monomials {
            return Err(Error::resource("standard monomials", limits.max_standard_monomials));
        }
        layer = next;
    }

    let faces: Vec<Vec<Vec<usize>>> = (0..=nvars).map(|i| combinations(nvars, i)).collect();
    let face_keys: Vec<Vec<Point>> = faces
        .iter()
        .map(|fs| fs.iter().map(|f| grading.face_key(f, nvars)).collect::<Result<_>>())
        .collect::<Result<_>>()?;

    let mut table = BettiTable::default();
    for alpha in &candidates {
        // basis[i]: pairs (face, standard monomial) of total key alpha
        let basis: Vec<Vec<(&Vec<usize>, &Monomial)>> = (0..=nvars)
            .map(|i| {
                let mut out = Vec::new();
                for (f, fk) in faces[i].iter().zip(&face_keys[i]) {
                    let Some(rest) = alpha.checked_sub(fk) else { continue };
                    if let Some(ms) = by_key.get(&rest) {
                        out.extend(ms.iter().map(|m| (f, m)));
                    }
                }
                out
            })
            .collect();
        // ranks[i]: rank of d_i : K_i -> K_{i-1}
        let mut ranks = vec![0usize; nvars + 2];
        for i in 1..=nvars {
            if basis[i].is_empty() || basis[i - 1].is_empty() {
                continue;
            }
            let index: HashMap<(&Vec<usize>, &Monomial), usize> =
                basis[i - 1].iter().enumerate().map(|(k, &e)| (e, k)).collect();
            let rows: Vec<Vec<i64>> = basis[i]
                .iter()
                .map(|(f, m)| {
                    let mut row = vec![0i64; basis[i - 1].len()];
                    for (p, &v) in f.iter().enumerate() {
                        let Some(image) = normal_form_monomial(&m.times_variable(v), &gb) else {
                            continue;
                        };
                        let mut smaller = (*f).clone();
                        smaller.remove(p);
                        let col = *index
                            .get(&(&smaller, &image))
                            .expect("Koszul differential stays in its degree");
                        row[col] += if p % 2 == 0 { 1 } else { -1 };
                    }
                    row
                })
                .collect();
            ranks[i] = rank(&rows);
        }
        for i in 0..=nvars {
            let h = basis[i].len() - ranks[i] - ranks[i + 1];
            table.insert(i, alpha.clone(), h);
        }
    }
    let beta1: usize = table.totals().get(1).copied().unwrap_or(0);
    let mingens = minimal_generator_count(gens, limits)?;
    if beta1 != mingens {
        return Err(Error::InvariantViolation(format!(
            "Koszul homology gives {beta1} minimal generators, direct count gives {mingens}"
        )));
    }
    Ok(table)
}
