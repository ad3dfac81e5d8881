mod common;

use std::cmp::Ordering;

use apery_core::extension::projective_closure;
use apery_core::ideal::{buchberger, toric_ideal, Binomial, Monomial, MonomialOrder, TermOrder};
use apery_core::local::{
    cm_check, compare_negdegrevlex, homogeneity_gb_check, mora_normal_form, project_basis, standard_basis,
    standard_basis_of, HomogeneityCheck, RefutationReason,
};
use apery_core::semigroup::{apery_set, is_homogeneous_semigroup};
use apery_core::{AffineSemigroup, Error};
use proptest::prelude::*;

use common::*;

fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

fn bin(p: &[u32], q: &[u32]) -> Binomial {
    Binomial::new(mono(p), mono(q)).unwrap()
}

/// Reference comparator written directly from the definition.
fn reference(p: &[u32], q: &[u32]) -> Ordering {
    let (dp, dq): (u32, u32) = (p.iter().sum(), q.iter().sum());
    if dp != dq {
        return dq.cmp(&dp);
    }
    for (a, b) in p.iter().zip(q) {
        if a != b {
            // the smaller exponent of the lowest variable wins
            return b.cmp(a);
        }
    }
    Ordering::Equal
}

fn exponents_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|e: Vec<u32>| (0..=d).map(move |k| [e.clone(), vec![k]].concat()))
            .collect();
    }
    out.into_iter().filter(|e| e.iter().sum::<u32>() <= d).collect()
}

#[test]
fn comparison_examples() {
    assert_eq!(compare_negdegrevlex(&[0, 2, 0], &[3, 0, 0]).unwrap(), Ordering::Greater);
    assert_eq!(compare_negdegrevlex(&[1, 2], &[1, 2]).unwrap(), Ordering::Equal);
    assert_eq!(compare_negdegrevlex(&[0, 2], &[1, 1]).unwrap(), Ordering::Greater);
    assert!(matches!(compare_negdegrevlex(&[1], &[1, 0]), Err(Error::LengthMismatch(1, 2))));
}

#[test]
fn comparison_matches_reference_up_to_degree_three() {
    let all = exponents_up_to(3, 3);
    assert_eq!(all.len(), 20);
    for p in &all {
        for q in &all {
            assert_eq!(compare_negdegrevlex(p, q).unwrap(), reference(p, q), "{p:?} vs {q:?}");
        }
    }
}

#[test]
fn normal_form_examples() {
    let f = bin(&[0, 2], &[3, 0]);
    let nf = mora_normal_form(&Binomial::monomial(mono(&[0, 2])), std::slice::from_ref(&f)).unwrap();
    assert_eq!(nf, Some(Binomial::monomial(mono(&[3, 0]))));
    let nf = mora_normal_form(&Binomial::monomial(mono(&[3, 0])), std::slice::from_ref(&f)).unwrap();
    assert_eq!(nf, Some(Binomial::monomial(mono(&[3, 0]))));
    assert_eq!(mora_normal_form(&f, std::slice::from_ref(&f)).unwrap(), None);
}

/// `lcm / LM(f) * f - lcm / LM(g) * g`, built from the terms directly.
fn s_pair(f: &Binomial, g: &Binomial) -> Option<Binomial> {
    let l = f.lead().lcm(g.lead());
    let a = f.tail().map(|t| l.div(f.lead()).mul(t));
    let b = g.tail().map(|t| l.div(g.lead()).mul(t));
    match (a, b) {
        (Some(a), Some(b)) if a != b => Some(Binomial::new(a, b).unwrap()),
        (Some(m), None) | (None, Some(m)) => Some(Binomial::monomial(m)),
        _ => None,
    }
}

#[test]
fn geometric_s_pairs_reduce_to_zero() {
    let basis = vec![bin(&[0, 2, 0], &[3, 0, 0]), bin(&[0, 0, 2], &[0, 3, 0])];
    let s = s_pair(&basis[0], &basis[1]).unwrap();
    assert_eq!(mora_normal_form(&s, &basis).unwrap(), None);
}

#[test]
fn standard_basis_examples() {
    let l = limits();
    let sb = standard_basis_of(&AffineSemigroup::numerical(&[4, 6, 9]).unwrap(), &l).unwrap();
    assert_eq!(sb.basis, vec![bin(&[0, 2, 0], &[3, 0, 0]), bin(&[0, 0, 2], &[0, 3, 0])]);
    assert_eq!(sb.leading_monomials, vec![mono(&[0, 2, 0]), mono(&[0, 0, 2])]);
    assert_eq!(sb.nonhomogeneous_part, vec![0, 1]);
    assert_eq!(sb.tangent_cone_generators, vec![Binomial::monomial(mono(&[0, 2, 0])), Binomial::monomial(mono(&[0, 0, 2]))]);

    let sb = standard_basis_of(&planar_example(), &l).unwrap();
    for lm in &sb.leading_monomials {
        assert_eq!(&lm.exponents()[..2], &[0, 0], "{lm}");
    }
    assert!(standard_basis(&[], &l).unwrap().is_empty());
}

fn corpus() -> Vec<AffineSemigroup> {
    let mut v = small_numerical(13);
    v.extend(planar());
    v.push(non_cm_ring());
    v.extend(geometric().into_iter().map(|g| g.semigroup));
    v
}

#[test]
fn standard_bases_are_minimal_and_generate() {
    let l = limits();
    for s in corpus() {
        let t = toric_ideal(&s, &l).unwrap();
        let sb = standard_basis(t.generators(), &l).unwrap();
        for (i, a) in sb.leading_monomials.iter().enumerate() {
            for (j, b) in sb.leading_monomials.iter().enumerate() {
                assert!(i == j || !a.divides(b), "{:?}: {a} divides {b}", coords(&s));
            }
        }
        for (f, star) in sb.basis.iter().zip(&sb.tangent_cone_generators) {
            assert_eq!(star.lead(), f.lead());
            assert!(star.is_homogeneous());
        }
        for g in t.generators() {
            assert_eq!(mora_normal_form(g, &sb.basis).unwrap(), None, "{g}");
        }
        for (i, f) in sb.basis.iter().enumerate() {
            for g in &sb.basis[..i] {
                if let Some(h) = s_pair(f, g) {
                    assert_eq!(mora_normal_form(&h, &sb.basis).unwrap(), None);
                }
            }
        }
    }
}

#[test]
fn homogeneous_input_has_the_degrevlex_leading_ideal() {
    let l = limits();
    for g in geometric().into_iter().filter(|g| g.r <= 2) {
        let c = projective_closure(&g.semigroup, &l).unwrap();
        let sb = standard_basis(&c.ideal, &l).unwrap();
        let gb = buchberger(&c.ideal, &TermOrder::DegRevLex, &l).unwrap();
        let mut a = sb.leading_monomials.clone();
        let mut b = gb.leading_monomials();
        a.sort();
        b.sort();
        assert_eq!(a, b, "({}, {}, {})", g.a, g.b, g.r);
    }
}

#[test]
fn cm_examples() {
    let l = limits();
    let sb = standard_basis_of(&AffineSemigroup::numerical(&[4, 6, 9]).unwrap(), &l).unwrap();
    assert!(cm_check(&sb, 1).cohen_macaulay);
    assert!(cm_check(&standard_basis_of(&planar_example(), &l).unwrap(), 2).cohen_macaulay);

    let s = AffineSemigroup::numerical(&NON_CM_FIXTURE).unwrap();
    let sb = standard_basis_of(&s, &l).unwrap();
    let v = cm_check(&sb, 1);
    assert!(!v.cohen_macaulay);
    assert!(!v.offending.is_empty());
    for &(j, i) in &v.offending {
        assert_eq!(j, 0);
        assert!(sb.leading_monomials[i].exponents()[0] > 0);
    }
    assert!(!obstruction_oracle(&s, 60).is_empty());
}

#[test]
fn homogeneity_examples() {
    let l = limits();
    let check = |s: &AffineSemigroup| {
        let sb = standard_basis_of(s, &l).unwrap();
        homogeneity_gb_check(s, &sb, &apery_set(s, &l).unwrap()).unwrap()
    };
    assert_eq!(check(&planar_example()).label(), "verified");
    match check(&AffineSemigroup::numerical(&[4, 6, 9]).unwrap()) {
        HomogeneityCheck::Verified { variable, basis, rewritten } => {
            assert!(rewritten);
            assert_eq!(variable, Some(0));
            assert_eq!(basis, vec![bin(&[0, 2, 0], &[3, 0, 0]), bin(&[0, 0, 2], &[3, 1, 0])]);
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(
        check(&AffineSemigroup::free(2).unwrap()),
        HomogeneityCheck::Verified { variable: None, basis: vec![], rewritten: false }
    );
    assert_eq!(
        check(&AffineSemigroup::numerical(&NON_CM_FIXTURE).unwrap()),
        HomogeneityCheck::Refuted { reason: RefutationReason::NotCohenMacaulay }
    );
}

#[test]
fn homogeneity_verdicts_agree_with_the_definition() {
    let l = limits();
    let mut definitive = 0;
    for s in corpus() {
        let sb = standard_basis_of(&s, &l).unwrap();
        let ap = apery_set(&s, &l).unwrap();
        let truth = is_homogeneous_semigroup(&s, &l).unwrap().homogeneous;
        match homogeneity_gb_check(&s, &sb, &ap).unwrap() {
            HomogeneityCheck::Verified { .. } => {
                assert!(truth);
                definitive += 1;
            }
            HomogeneityCheck::Refuted { reason: RefutationReason::NotHomogeneous } => {
                assert!(!truth);
                definitive += 1;
            }
            HomogeneityCheck::Refuted { reason: RefutationReason::NotCohenMacaulay } => {
                assert!(!cm_check(&sb, s.dim()).cohen_macaulay)
            }
            HomogeneityCheck::Inconclusive { .. } => assert!(truth),
        }
    }
    assert!(definitive > 100);
}

#[test]
fn projection_examples() {
    let l = limits();
    let sb = standard_basis_of(&AffineSemigroup::numerical(&[4, 6, 9]).unwrap(), &l).unwrap();
    let p = project_basis(&sb, 1).unwrap();
    assert_eq!(p, vec![Some(Binomial::monomial(mono(&[0, 2, 0]))), Some(bin(&[0, 0, 2], &[0, 3, 0]))]);
    let id = project_basis(&sb, 0).unwrap();
    assert_eq!(id, sb.basis.iter().cloned().map(Some).collect::<Vec<_>>());

    let sb = standard_basis_of(&planar_example(), &l).unwrap();
    for b in project_basis(&sb, 2).unwrap().into_iter().flatten() {
        assert!(b.is_homogeneous(), "{b}");
    }
    let sb = standard_basis_of(&AffineSemigroup::numerical(&NON_CM_FIXTURE).unwrap(), &l).unwrap();
    assert!(matches!(project_basis(&sb, 1), Err(Error::PreconditionViolated(_))));
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn local_order_is_total_and_multiplicative(
        p in prop::collection::vec(0u32..5, 4),
        q in prop::collection::vec(0u32..5, 4),
        r in prop::collection::vec(0u32..5, 4),
        m in prop::collection::vec(0u32..5, 4),
    ) {
        let c = |a: &[u32], b: &[u32]| compare_negdegrevlex(a, b).unwrap();
        prop_assert_eq!(c(&p, &q), c(&q, &p).reverse());
        prop_assert_eq!(c(&p, &q) == Ordering::Equal, p == q);
        if c(&p, &q) == Ordering::Greater && c(&q, &r) == Ordering::Greater {
            prop_assert_eq!(c(&p, &r), Ordering::Greater);
        }
        let add = |a: &[u32]| a.iter().zip(&m).map(|(x, y)| x + y).collect::<Vec<_>>();
        prop_assert_eq!(c(&add(&p), &add(&q)), c(&p, &q));
        let one = vec![0u32; 4];
        if p != one {
            prop_assert_eq!(c(&one, &p), Ordering::Greater);
        }
        prop_assert_eq!(TermOrder::NegDegRevLex.compare(&mono(&p), &mono(&q)), c(&p, &q));
    }

    #[test]
    fn monomial_multiples_reduce_to_zero(
        (a, x, y) in (2u64..9, 1u64..8, 1u64..8),
        t in prop::collection::vec(0u32..3, 3),
    ) {
        let g = [a, a + x, a + x + y];
        if let Ok(s) = AffineSemigroup::numerical(&g) {
            let sb = standard_basis_of(&s, &limits()).unwrap();
            let m = mono(&t);
            for f in &sb.basis {
                let lifted = Binomial::new(f.lead().mul(&m), f.tail().unwrap().mul(&m)).unwrap();
                prop_assert_eq!(mora_normal_form(&lifted, &sb.basis).unwrap(), None);
            }
        }
    }
}
