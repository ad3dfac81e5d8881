//! Independent oracles and corpora shared by the integration tests.
//!
//! Nothing here calls the algorithms under test except to read the
//! generators and extremal rays of a semigroup.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use apery_core::extension::{geometric_corpus, geometric_semigroup, nice_extension, GeometricInstance, NiceExtension};
use apery_core::{AffineSemigroup, Limits, Point};

pub type Vector = Vec<u64>;

pub fn limits() -> Limits {
    Limits::default()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd_i128(b, a % b) }
}

pub fn coords(s: &AffineSemigroup) -> Vec<Vector> {
    s.generators().iter().map(|p| p.coords().to_vec()).collect()
}

pub fn rays(s: &AffineSemigroup) -> Vec<Vector> {
    s.extremal_rays().iter().map(|p| p.coords().to_vec()).collect()
}

fn sum(v: &[u64]) -> u64 {
    v.iter().sum()
}

fn add(a: &[u64], b: &[u64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[u64], b: &[u64]) -> Option<Vector> {
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
}

/// Every element of the semigroup with coordinate sum at most `bound`,
/// by breadth-first search from zero.
pub fn elements_up_to(gens: &[Vector], bound: u64) -> BTreeSet<Vector> {
    let dim = gens[0].len();
    let mut seen = BTreeSet::from([vec![0; dim]]);
    let mut queue = vec![vec![0; dim]];
    while let Some(v) = queue.pop() {
        for g in gens {
            let w = add(&v, g);
            if sum(&w) <= bound && seen.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    seen
}

/// Cofactor determinant; the matrices here are at most 3 x 3 in practice.
fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

/// Smallest `c >= 1` with `c * g` a non-negative integer combination of the
/// rays. By Cramer's rule `c * g` has coordinates `c * adj(E) g / D`.
fn ray_order(rays: &[Vector], g: &[u64]) -> u64 {
    let d = rays.len();
    let e: Vec<Vec<i128>> = (0..d).map(|row| rays.iter().map(|r| r[row] as i128).collect()).collect();
    let big_d = det(&e);
    let mut content = big_d;
    for i in 0..d {
        let mut m = e.clone();
        for (row, x) in m.iter_mut().zip(g) {
            row[i] = *x as i128;
        }
        content = gcd_i128(content, det(&m));
    }
    (big_d / content).unsigned_abs() as u64
}

/// Apéry set by brute force: elements `w` with `w - a_i` outside the
/// semigroup for every extremal ray. An element whose factorization uses
/// a non-ray generator `g` at least `ray_order(g)` times is never in the
/// Apéry set, which bounds the search.
pub fn apery_oracle(s: &AffineSemigroup) -> BTreeSet<Vector> {
    let gens = coords(s);
    let rays = rays(s);
    let bound: u64 = gens
        .iter()
        .filter(|g| !rays.contains(g))
        .map(|g| (ray_order(&rays, g) - 1) * sum(g))
        .sum();
    let elements = elements_up_to(&gens, bound);
    elements
        .iter()
        .filter(|w| rays.iter().all(|a| sub(w, a).is_none_or(|x| !elements.contains(&x))))
        .cloned()
        .collect()
}

/// Maximal factorization length by exhaustive enumeration of multiplicity
/// vectors.
pub fn naive_order(gens: &[Vector], v: &[u64]) -> Option<u64> {
    fn go(gens: &[Vector], rest: &[u64]) -> Option<u64> {
        let Some((g, others)) = gens.split_first() else {
            return rest.iter().all(|&x| x == 0).then_some(0);
        };
        let mut best = None;
        let mut used = 0;
        let mut remaining = rest.to_vec();
        loop {
            if let Some(l) = go(others, &remaining) {
                best = best.max(Some(l + used));
            }
            match sub(&remaining, g) {
                Some(r) => {
                    remaining = r;
                    used += 1;
                }
                None => return best,
            }
        }
    }
    go(gens, v)
}

/// Orders of all elements up to `bound` by dynamic programming over the
/// BFS element set.
pub fn order_table(gens: &[Vector], bound: u64) -> BTreeMap<Vector, u64> {
    let mut elements: Vec<Vector> = elements_up_to(gens, bound).into_iter().collect();
    elements.sort_by_key(|v| sum(v));
    let mut ord: BTreeMap<Vector, u64> = BTreeMap::new();
    for v in elements {
        let o = gens
            .iter()
            .filter_map(|g| sub(&v, g))
            .filter_map(|w| ord.get(&w).map(|x| x + 1))
            .max()
            .unwrap_or(0);
        ord.insert(v, o);
    }
    ord
}

/// Elements `b` with `ord(b + a) > ord(b) + 1` for an extremal ray `a`,
/// among `b` with coordinate sum at most `bound`.
pub fn obstruction_oracle(s: &AffineSemigroup, bound: u64) -> Vec<(Vector, usize)> {
    let gens = coords(s);
    let rays = rays(s);
    let reach = rays.iter().map(|r| sum(r)).max().unwrap_or(0);
    let ord = order_table(&gens, bound + reach);
    let mut out = Vec::new();
    for (b, ob) in ord.iter().filter(|(b, _)| sum(b) <= bound) {
        for (i, a) in rays.iter().enumerate() {
            if ord[&add(b, a)] > ob + 1 {
                out.push((b.clone(), i));
            }
        }
    }
    out
}

/// Elements of each S-degree among monomials of total degree at most
/// `max_degree`, keyed by S-degree.
pub fn fibers(gens: &[Vector], max_degree: u32) -> BTreeMap<Vector, Vec<Vec<u32>>> {
    let n = gens.len();
    let mut out: BTreeMap<Vector, Vec<Vec<u32>>> = BTreeMap::new();
    let mut exps = vec![vec![0u32; n]];
    let mut all = Vec::new();
    for _ in 0..=max_degree {
        let mut next = BTreeSet::new();
        for e in &exps {
            all.push(e.clone());
            for i in 0..n {
                let mut f = e.clone();
                f[i] += 1;
                next.insert(f);
            }
        }
        exps = next.into_iter().collect();
    }
    let all: BTreeSet<Vec<u32>> = all.into_iter().collect();
    for e in all {
        out.entry(degree_of(gens, &e)).or_default().push(e);
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Numerical semigroups with at most three minimal generators, each at
/// most `max`.
pub fn small_numerical(max: u64) -> Vec<AffineSemigroup> {
    let mut out = vec![AffineSemigroup::numerical(&[1]).unwrap()];
    for a in 2..=max {
        for b in a + 1..=max {
            let mut sets = vec![vec![a, b]];
            sets.extend((b + 1..=max).map(|c| vec![a, b, c]));
            for g in sets {
                if g.iter().fold(0, |x, &y| gcd(x, y)) != 1 {
                    continue;
                }
                let minimal = g.iter().enumerate().all(|(i, &x)| {
                    let others: Vec<Vector> =
                        g.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &y)| vec![y]).collect();
                    !elements_up_to(&others, x).contains(&vec![x])
                });
                if minimal {
                    out.push(AffineSemigroup::numerical(&g).unwrap());
                }
            }
        }
    }
    out
}

pub fn geometric() -> Vec<GeometricInstance> {
    geometric_corpus()
        .into_iter()
        .map(|(a, b, r)| geometric_semigroup(a, b, r).unwrap())
        .collect()
}

/// Nice extensions of the geometric corpus and of `N^1`, `N^2`: for
/// `lambda` in {2, 3}, `b` is `(lambda - 1 + extra) a_1 + a_k` with the
/// smallest `extra` making the content of `b` coprime to `lambda`.
pub fn extensions() -> Vec<NiceExtension> {
    let mut bases: Vec<AffineSemigroup> = geometric().into_iter().map(|g| g.semigroup).collect();
    bases.push(AffineSemigroup::free(1).unwrap());
    bases.push(AffineSemigroup::free(2).unwrap());
    let mut out = Vec::new();
    for s in &bases {
        for lambda in [2u64, 3] {
            for extra in 0..lambda {
                let mut alpha = vec![0; s.len()];
                alpha[0] += lambda - 1 + extra;
                alpha[s.len() - 1] += 1;
                let b: Vector = (0..s.dim())
                    .map(|c| s.generators().iter().zip(&alpha).map(|(g, k)| g.coords()[c] * k).sum())
                    .collect();
                if b.iter().fold(0, |x, &y| gcd(x, y)) % lambda == 0 {
                    continue;
                }
                out.push(nice_extension(s, &Point::new(b), lambda, 1, &alpha).unwrap());
                break;
            }
        }
    }
    out
}

pub fn planar_example() -> AffineSemigroup {
    AffineSemigroup::new(
        [[0, 2], [2, 1], [0, 3], [1, 2]].iter().map(|p| Point::new(p.to_vec())).collect(),
        2,
    )
    .unwrap()
}

/// Two-dimensional members: the planar example, `N^2`, a normal semigroup,
/// the two-dimensional extensions, and the projective closures of the
/// geometric corpus with `r <= 2`.
pub fn planar() -> Vec<AffineSemigroup> {
    let p = |v: &[[u64; 2]]| AffineSemigroup::new(v.iter().map(|x| Point::new(x.to_vec())).collect(), 2).unwrap();
    let mut out = vec![
        planar_example(),
        AffineSemigroup::free(2).unwrap(),
        p(&[[3, 0], [0, 3], [1, 2], [2, 1]]),
    ];
    out.extend(extensions().into_iter().filter(|e| e.result.dim() == 2).map(|e| e.result));
    for g in geometric().into_iter().filter(|g| g.r <= 2) {
        let n = g.semigroup.numerical_generators().unwrap();
        let m = *n.last().unwrap();
        let pts: Vec<Point> = n.iter().map(|&x| Point::new(vec![x, m - x])).chain([Point::new(vec![0, m])]).collect();
        out.push(AffineSemigroup::new(pts, 2).unwrap());
    }
    out
}

/// A semigroup whose ring is not Cohen-Macaulay: `(2,2)` is missing
/// although `2 (2,2) = (4,0) + (0,4)`. Outside the scope of the obstruction
/// criterion, which presupposes a Cohen-Macaulay ring.
pub fn non_cm_ring() -> AffineSemigroup {
    let pts = [[4, 0], [0, 4], [1, 3], [3, 1]].iter().map(|x| Point::new(x.to_vec())).collect();
    AffineSemigroup::new(pts, 2).unwrap()
}

/// The first numerical semigroup `<a, b, c>` with `a < b < c <= 30` in
/// lexicographic order that has an order obstruction, i.e. a non-CM
/// tangent cone. Obstructions are searched up to `b = 4 a c`.
pub fn first_non_cm_triple() -> [u64; 3] {
    for a in 2..=30 {
        for b in a + 1..=30 {
            for c in b + 1..=30 {
                if gcd(gcd(a, b), c) != 1
                    || elements_up_to(&[vec![a], vec![b]], c).contains(&vec![c])
                    || b % a == 0
                {
                    continue;
                }
                let s = AffineSemigroup::numerical(&[a, b, c]).unwrap();
                if !obstruction_oracle(&s, 4 * a * c).is_empty() {
                    return [a, b, c];
                }
            }
        }
    }
    panic!("no non-CM triple below 30");
}

pub const NON_CM_FIXTURE: [u64; 3] = [4, 5, 11];

pub fn degree_of(gens: &[Vector], e: &[u32]) -> Vector {
    let mut deg = vec![0; gens[0].len()];
    for (g, &k) in gens.iter().zip(e) {
        for (d, x) in deg.iter_mut().zip(g) {
            *d += x * k as u64;
        }
    }
    deg
}

/// All factorizations of `v`, by exhaustive enumeration.
pub fn naive_factorizations(gens: &[Vector], v: &[u64]) -> Vec<Vec<u32>> {
    fn go(gens: &[Vector], rest: Vector, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let Some((g, others)) = gens.split_first() else {
            if rest.iter().all(|&x| x == 0) {
                out.push(prefix.clone());
            }
            return;
        };
        let mut remaining = Some(rest);
        let mut k = 0;
        while let Some(r) = remaining {
            prefix.push(k);
            go(others, r.clone(), prefix, out);
            prefix.pop();
            remaining = sub(&r, g);
            k += 1;
        }
    }
    let mut out = Vec::new();
    go(gens, v.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Number of minimal generators of `I(S)` in each S-degree with coordinate
/// sum at most `bound`: one less than the number of connected components of
/// the fiber, where two monomials are adjacent when they share a variable.
pub fn minimal_generator_degrees(s: &AffineSemigroup, bound: u64) -> BTreeMap<Vector, usize> {
    let gens = coords(s);
    let mut out = BTreeMap::new();
    for b in elements_up_to(&gens, bound) {
        let fiber = naive_factorizations(&gens, &b);
        let mut parent: Vec<usize> = (0..fiber.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for i in 0..fiber.len() {
            for j in 0..i {
                if fiber[i].iter().zip(&fiber[j]).any(|(x, y)| *x > 0 && *y > 0) {
                    let (a, c) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = c;
                }
            }
        }
        let comps = (0..fiber.len()).filter(|&i| find(&mut parent, i) == i).count();
        if comps > 1 {
            out.insert(b, comps - 1);
        }
    }
    out
}
