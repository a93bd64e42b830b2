use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::construct::require_busby;
use super::*;
use crate::algebra::{AlgebraElement, BasisIdeal, FdStarAlgebra};
use crate::congruence::{quotient_by, NormalClifford, Quotient};
use crate::cross_section::{find_order_preserving, CrossSection};
use crate::linalg::Matrix;
use crate::scalar::{GaussRat, Scalar, C64};
use crate::semigroup::{cyclic_group, symmetric_inverse_monoid, FiniteInverseSemigroup, Group};

type Q = GaussRat;

struct Z4 {
    t: FiniteInverseSemigroup,
    n: NormalClifford,
    q: Quotient,
    c: CrossSection,
    d: CrossSection,
}

fn z4() -> Z4 {
    let t = cyclic_group(4);
    let n = NormalClifford::new(&t, &[0, 2]).unwrap();
    let q = quotient_by(&t, &n);
    let mut rc = vec![0; 2];
    let mut rd = vec![0; 2];
    rc[q.project(1)] = 1;
    rd[q.project(3)] = 3;
    let c = CrossSection::new(&q, rc).unwrap();
    let d = CrossSection::new(&q, rd).unwrap();
    Z4 { t, n, q, c, d }
}

fn z4_action<F: Scalar>() -> BusbySmithAction<F> {
    let z = z4();
    action_from_cross_section(&z.t, &z.n, &z.q, &z.c).unwrap()
}

/// A random family with `V_f = 1_{E_f}` on idempotents.
fn random_family<F: Scalar>(act: &BusbySmithAction<F>, rng: &mut ChaCha8Rng) -> Vec<AlgebraElement<F>> {
    (0..act.size())
        .map(|s| {
            let e = &act.ideals[s];
            if act.semigroup.is_idempotent(s) {
                act.algebra.ideal_identity(e).unwrap()
            } else {
                act.algebra.random_unitary(e, rng).unwrap()
            }
        })
        .collect()
}

fn identity_family<F: Scalar>(act: &BusbySmithAction<F>) -> Vec<AlgebraElement<F>> {
    ideal_units(&act.algebra, &act.ideals).unwrap()
}

#[test]
fn z4_mod_z2_action_is_twisted() {
    let act = z4_action::<Q>();
    let rep = verify_busby_smith(&act);
    assert!(rep.passed(), "{rep}");
    let g = act.semigroup.find_label("1").unwrap_or(1);
    let two = AlgebraElement::basis(2, 1);
    assert_eq!(act.w(g, g), &two);
    assert_eq!(act.w(0, 0), &AlgebraElement::basis(2, 0));
}

#[test]
fn cocycle_on_an_idempotent_must_be_trivial() {
    let mut act = z4_action::<Q>();
    act.w[1] = AlgebraElement::basis(2, 1);
    let rep = verify_busby_smith(&act);
    assert!(!rep.clause("def_c_trivial_on_idempotents").unwrap().passed);
}

#[test]
fn non_unitary_cocycle_is_rejected_by_shape() {
    let mut act = z4_action::<Q>();
    act.w[3] = AlgebraElement::zero(2);
    let rep = verify_busby_smith(&act);
    assert!(!rep.passed());
    assert!(require_busby(&act).is_err());
}

#[test]
fn canonical_action_on_idempotents_is_untwisted() {
    let t = symmetric_inverse_monoid(2).semigroup;
    let n = NormalClifford::idempotents(&t);
    let (q, search) = find_order_preserving(&t, &n);
    let c = search.section().expect("trivial quotient has a section").clone();
    let act = action_from_cross_section::<Q>(&t, &n, &q, &c).unwrap();
    assert!(verify_busby_smith(&act).passed());
    let plain = BusbySmithAction::trivially_twisted(
        act.algebra.clone(),
        act.semigroup.clone(),
        act.ideals.clone(),
        act.beta.clone(),
    )
    .unwrap();
    assert!(act.approx_eq(&plain));
}

#[test]
fn group_quotient_by_itself_is_identity_on_group_algebra() {
    let t = cyclic_group(3);
    let n = NormalClifford::new(&t, &[0, 1, 2]).unwrap();
    let q = quotient_by(&t, &n);
    assert_eq!(q.semigroup.size(), 1);
    let c = CrossSection::new(&q, vec![0]).unwrap();
    let act = action_from_cross_section::<Q>(&t, &n, &q, &c).unwrap();
    assert_eq!(act.algebra.dim(), 3);
    assert!(act.beta[0].approx_eq(&Psa::identity(&BasisIdeal::full(3)), 0.0));
    assert!(verify_busby_smith(&act).passed());
}

#[test]
fn green_canonical_verifies_and_matches_the_section_action() {
    let z = z4();
    let green = green_canonical::<Q>(&z.t, &z.n).unwrap();
    assert!(verify_green(&green).passed());
    let from_green = green_to_busby(&green, &z.q, &z.c).unwrap();
    let direct = action_from_cross_section::<Q>(&z.t, &z.n, &z.q, &z.c).unwrap();
    assert!(from_green.approx_eq(&direct));

    let t = symmetric_inverse_monoid(2).semigroup;
    let n = NormalClifford::idempotents(&t);
    let green = green_canonical::<Q>(&t, &n).unwrap();
    assert!(verify_green(&green).passed());
    for f in t.idempotents() {
        assert!(green.tau(f).is_some());
    }
    let (q, search) = find_order_preserving(&t, &n);
    let c = search.section().unwrap();
    let a = green_to_busby(&green, &q, c).unwrap();
    let b = action_from_cross_section::<Q>(&t, &n, &q, c).unwrap();
    assert!(a.approx_eq(&b));
}

#[test]
fn perturbed_tau_breaks_green_c() {
    let z = z4();
    let mut green = green_canonical::<Q>(&z.t, &z.n).unwrap();
    green.tau[2] = Some(AlgebraElement::basis(2, 1).scale(&Q::i()));
    let rep = verify_green(&green);
    assert!(!rep.passed());
}

#[test]
fn green_without_unit_is_refused() {
    let t =
        FiniteInverseSemigroup::from_tables(vec![vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 2]], vec![0, 1, 2]).unwrap();
    assert!(green_canonical::<Q>(&t, &NormalClifford::idempotents(&t)).is_err());
}

#[test]
fn two_sections_are_exterior_equivalent() {
    let z = z4();
    let (v, rep) = cross_section_equivalence_witness::<Q>(&z.t, &z.n, &z.q, &z.c, &z.d).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(v.len(), 2);

    let green = green_canonical::<Q>(&z.t, &z.n).unwrap();
    let from = green_to_busby(&green, &z.q, &z.c).unwrap();
    let to = green_to_busby(&green, &z.q, &z.d).unwrap();
    let w = green_section_witness(&green, &z.q, &z.c, &z.d).unwrap();
    assert!(is_exterior_equivalence(&from, &to, &w).unwrap().passed());
}

#[test]
fn conjugated_witness_entry_fails_cocycle_clause() {
    let z = z4();
    let (mut v, _) = cross_section_equivalence_witness::<Q>(&z.t, &z.n, &z.q, &z.c, &z.d).unwrap();
    let from = action_from_cross_section::<Q>(&z.t, &z.n, &z.q, &z.c).unwrap();
    let to = action_from_cross_section::<Q>(&z.t, &z.n, &z.q, &z.d).unwrap();
    let k = z.q.project(1);
    v[k] = v[k].scale(&Q::i());
    let rep = is_exterior_equivalence(&from, &to, &v).unwrap();
    assert!(rep.clause("a_maps").unwrap().passed);
    let b = rep.clause("b_cocycles").unwrap();
    assert!(!b.passed);
    assert!(b.witness.is_some());
}

#[test]
fn mismatched_carriers_are_an_error() {
    let a = z4_action::<Q>();
    let t = symmetric_inverse_monoid(2).semigroup;
    let n = NormalClifford::idempotents(&t);
    let (q, search) = find_order_preserving(&t, &n);
    let b = action_from_cross_section::<Q>(&t, &n, &q, search.section().unwrap()).unwrap();
    let v = identity_family(&a);
    assert!(is_exterior_equivalence(&a, &b, &v).is_err());
}

#[test]
fn exterior_equivalence_is_an_equivalence_relation() {
    let act = z4_action::<C64>();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    assert!(is_exterior_equivalence(&act, &act, &identity_family(&act)).unwrap().passed());
    for _ in 0..10 {
        let v = random_family(&act, &mut rng);
        let b = exterior_transform(&act, &v).unwrap();
        assert!(verify_busby_smith(&b).passed());
        assert!(is_exterior_equivalence(&act, &b, &v).unwrap().passed());
        let back = witness_inverse(&act.algebra, &v);
        assert!(is_exterior_equivalence(&b, &act, &back).unwrap().passed());
        let x = random_family(&b, &mut rng);
        let c = exterior_transform(&b, &x).unwrap();
        let xv = witness_product(&act.algebra, &x, &v);
        assert!(is_exterior_equivalence(&act, &c, &xv).unwrap().passed());
    }
}

fn s_z2_tpa() -> TwistedPartialAction<Q> {
    let alg = FdStarAlgebra::<Q>::from_multimatrix(&[1, 1, 1]);
    let full = BasisIdeal::full(3);
    let d1 = BasisIdeal::new(vec![0, 1]);
    let swap = Matrix::from_rows(vec![vec![Q::zero(), Q::one()], vec![Q::one(), Q::zero()]]);
    let one = alg.unit().unwrap();
    let one1 = alg.ideal_identity(&d1).unwrap();
    TwistedPartialAction {
        group: Group::cyclic(2),
        ideals: vec![full.clone(), d1.clone()],
        alpha: vec![Psa::identity(&full), Psa::new(d1.clone(), d1, swap).unwrap()],
        u: vec![one, one1.clone(), one1.clone(), one1],
        algebra: alg,
    }
}

#[test]
fn partial_action_of_z2_gives_action_of_s_z2() {
    let tpa = s_z2_tpa();
    assert!(verify_twisted_partial(&tpa).passed());
    let (act, sg) = partial_to_exel(&tpa).unwrap();
    assert_eq!(sg.semigroup.size(), 3);
    assert!(verify_busby_smith(&act).passed());
    assert!(act.ideals.iter().all(|e| !e.is_empty()));
    let back = exel_to_partial(&act, &tpa.group).unwrap();
    assert!(back.approx_eq(&tpa));
}

#[test]
fn trivial_partial_action_is_trivially_twisted() {
    let alg = FdStarAlgebra::<Q>::from_multimatrix(&[2]);
    let tpa = trivial_partial_action(alg, Group::cyclic(3)).unwrap();
    assert!(verify_twisted_partial(&tpa).passed());
    let (act, _) = partial_to_exel(&tpa).unwrap();
    let plain = BusbySmithAction::trivially_twisted(
        act.algebra.clone(),
        act.semigroup.clone(),
        act.ideals.clone(),
        act.beta.clone(),
    )
    .unwrap();
    assert!(act.approx_eq(&plain));
}

#[test]
fn unverified_partial_action_is_refused() {
    let mut tpa = s_z2_tpa();
    tpa.u[3] = tpa.u[3].scale(&Q::from_i64(2));
    assert!(matches!(partial_to_exel(&tpa), Err(crate::Error::Unverified(_))));
}

#[test]
fn exel_to_partial_rejects_other_semigroups() {
    let act = z4_action::<Q>();
    assert!(exel_to_partial(&act, &Group::cyclic(2)).is_err());
}

#[test]
fn random_partial_actions_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in [Group::cyclic(2), Group::cyclic(3)] {
        for _ in 0..3 {
            let tpa = random_twisted_partial::<Q, _>(&g, 1, &mut rng).unwrap();
            assert!(verify_twisted_partial(&tpa).passed(), "{}", verify_twisted_partial(&tpa));
            let (act, _) = partial_to_exel(&tpa).unwrap();
            assert!(verify_busby_smith(&act).passed());
            assert!(exel_to_partial(&act, &g).unwrap().approx_eq(&tpa));
        }
    }
}

#[test]
fn identity_is_a_conjugacy_and_a_wrong_phi_is_not() {
    let act = z4_action::<Q>();
    let id = Matrix::identity(act.algebra.dim());
    assert!(is_conjugacy(&act, &act, &id, &[0, 1]).unwrap().passed());
    let t = symmetric_inverse_monoid(2).semigroup;
    let n = NormalClifford::idempotents(&t);
    let (q, search) = find_order_preserving(&t, &n);
    let b = action_from_cross_section::<Q>(&t, &n, &q, search.section().unwrap()).unwrap();
    let size = b.size();
    let idm = Matrix::identity(b.algebra.dim());
    let ident: Vec<usize> = (0..size).collect();
    assert!(is_conjugacy(&b, &b, &idm, &ident).unwrap().passed());
    let s = &b.semigroup;
    let sigma = (0..size).find(|&x| !s.is_idempotent(x) && Some(s.mul(x, x)) == s.unit()).unwrap();
    let phi: Vec<usize> = (0..size).map(|x| s.mul3(sigma, x, sigma)).collect();
    assert_ne!(phi, ident);
    let rep = is_conjugacy(&b, &b, &idm, &phi).unwrap();
    assert!(!rep.clause("maps_intertwined").unwrap().passed);
}

#[test]
fn fell_semigroup_sampled_axioms_hold() {
    let act = z4_action::<C64>();
    let fs = FellSemigroup::new(&act).unwrap();
    let rep = fs.verify_sampled(50, 1);
    assert!(rep.passed(), "{rep}");

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let tpa = random_twisted_partial::<C64, _>(&Group::cyclic(2), 2, &mut rng).unwrap();
    let (act, _) = partial_to_exel(&tpa).unwrap();
    let fs = FellSemigroup::new(&act).unwrap();
    let rep = fs.verify_sampled(30, 2);
    assert!(rep.passed(), "{rep}");
}

#[test]
fn fell_idempotents_are_exactly_units() {
    let act = z4_action::<Q>();
    let fs = FellSemigroup::new(&act).unwrap();
    let one = fs.one(0);
    assert_eq!(fs.mul(&one, &one).unwrap(), one);
    let minus = FellElement { t: 0, u: one.u.scale(&Q::from_i64(-1)) };
    assert_ne!(fs.mul(&minus, &minus).unwrap(), minus);
}

#[test]
fn fell_generated_is_conjugate_to_the_original() {
    let act = z4_action::<Q>();
    let fg = fell_generated(&act, 1000).unwrap();
    assert!(verify_green(&fg.green).passed());
    let rebuilt = green_to_busby(&fg.green, &fg.quotient, &fg.section).unwrap();
    assert!(verify_busby_smith(&rebuilt).passed());
    let id = Matrix::identity(act.algebra.dim());
    let rep = is_conjugacy(&act, &rebuilt, &id, &fg.phi).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn fell_refuses_unverified_actions() {
    let mut act = z4_action::<Q>();
    act.w[1] = AlgebraElement::basis(2, 1);
    assert!(FellSemigroup::new(&act).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]
    #[test]
    fn constructors_pass_their_verifiers(seed in 0u64..1000, n in 2usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = Group::cyclic(n);
        let tpa = random_twisted_partial::<Q, _>(&g, 1, &mut rng).unwrap();
        prop_assert!(verify_twisted_partial(&tpa).passed());
        let (act, _) = partial_to_exel(&tpa).unwrap();
        prop_assert!(verify_busby_smith(&act).passed());
        let t = cyclic_group(2 * n);
        let evens: Vec<usize> = (0..2 * n).step_by(2).collect();
        let nc = NormalClifford::new(&t, &evens).unwrap();
        let green = green_canonical::<Q>(&t, &nc).unwrap();
        prop_assert!(verify_green(&green).passed());
    }
}
