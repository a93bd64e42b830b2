//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twistcross_core::actions::{
    action_from_cross_section, cross_section_equivalence_witness, exel_to_partial, exterior_transform, green_canonical,
    green_to_busby, is_exterior_equivalence, partial_to_exel, random_twisted_partial, verify_busby_smith,
    verify_twisted_partial, BusbySmithAction,
};
use twistcross_core::algebra::{AlgebraElement, FdStarAlgebra};
use twistcross_core::catalog::{counterexample, z4_over_z2, COUNTEREXAMPLE_GENERATORS};
use twistcross_core::congruence::{
    congruence_from_normal_clifford, is_congruence, is_idempotent_separating, kernel_normal_system, quotient_by,
    NormalClifford, Quotient,
};
use twistcross_core::cross_section::{find_order_preserving, CrossSection, SectionSearch};
use twistcross_core::crossed::{
    decompose_busby, decompose_green, left_regular, quotient_crossed_product, rep_from_algebra_rep,
    semigroup_cstar_reports, semigroup_section_map, verify_covariant, verify_explicit_iso, verify_round_trip,
};
use twistcross_core::exel::enumerate_sg;
use twistcross_core::report::Report;
use twistcross_core::semigroup::{cyclic_group, symmetric_inverse_monoid, FiniteInverseSemigroup, Group};
use twistcross_core::{Error, GaussRat, Scalar, C64};

type Q = GaussRat;
type Res = Result<String, String>;
type Criterion = (&'static str, fn() -> Res);

macro_rules! check {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn passes(r: &Report, what: &str) -> Result<(), String> {
    match r.failures().next() {
        None => Ok(()),
        Some(c) => Err(format!("{what}: {} failed ({})", c.name, c.witness.clone().unwrap_or_default())),
    }
}

fn ok<T, E: std::fmt::Debug>(x: Result<T, E>, what: &str) -> Result<T, String> {
    x.map_err(|e| format!("{what}: {e:?}"))
}

fn i2() -> FiniteInverseSemigroup {
    symmetric_inverse_monoid(2).semigroup
}

/// The counterexample with a unit adjoined, so that crossed products exist.
fn ex20() -> FiniteInverseSemigroup {
    counterexample().semigroup().adjoin_unit()
}

fn section(t: &FiniteInverseSemigroup, n: &NormalClifford) -> Result<(Quotient, CrossSection), String> {
    match find_order_preserving(t, n) {
        (q, SectionSearch::Found(c)) => Ok((q, c)),
        _ => Err("no order-preserving section".into()),
    }
}

/// Closure of partial bijections of `{1..6}` as image arrays, 0 for undefined.
fn closure_oracle(gens: &[[u8; 6]]) -> BTreeSet<[u8; 6]> {
    let inv = |f: &[u8; 6]| {
        let mut g = [0u8; 6];
        for (i, &x) in f.iter().enumerate() {
            if x > 0 {
                g[x as usize - 1] = i as u8 + 1;
            }
        }
        g
    };
    let mul = |f: &[u8; 6], g: &[u8; 6]| {
        let mut h = [0u8; 6];
        for i in 0..6 {
            if g[i] > 0 {
                h[i] = f[g[i] as usize - 1];
            }
        }
        h
    };
    let mut gens: Vec<[u8; 6]> = gens.to_vec();
    gens.extend(gens.clone().iter().map(inv));
    let mut all: BTreeSet<[u8; 6]> = gens.iter().copied().collect();
    loop {
        let next: BTreeSet<[u8; 6]> = all.iter().flat_map(|a| gens.iter().map(move |g| mul(a, g))).collect();
        let before = all.len();
        all.extend(next);
        if all.len() == before {
            return all;
        }
    }
}

fn criterion_1() -> Res {
    let oracle = closure_oracle(&[[1, 4, 5, 0, 0, 0], [0, 5, 4, 0, 0, 6]]);
    let e = counterexample();
    let s = e.semigroup();
    check!(oracle.len() == 19 && s.size() == 19, "closure has {} elements, oracle {}", s.size(), oracle.len());
    check!(COUNTEREXAMPLE_GENERATORS == ["(1,4,5,0,0,0)", "(0,5,4,0,0,6)"], "generators changed");
    check!(!is_congruence(s, &e.naive_partition()).passed(), "the singleton partition is unexpectedly compatible");
    let c = congruence_from_normal_clifford(s, &e.kernel());
    passes(&is_congruence(s, &c), "kernel congruence")?;
    check!(is_idempotent_separating(s, &c), "kernel congruence merges idempotents");
    let kns = kernel_normal_system(s, &c);
    let pair = |a: usize, b: usize| if a < b { vec![a, b] } else { vec![b, a] };
    let mut expected: Vec<Vec<usize>> = vec![pair(e.sr, e.srsr), pair(e.rs, e.rsrs)];
    for f in s.idempotents() {
        if ![e.srsr, e.rsrs].contains(&f) {
            expected.push(vec![f]);
        }
    }
    expected.sort();
    let mut got = kns.clone();
    got.sort();
    check!(got == expected, "kernel normal system {got:?}, expected {expected:?}");
    let (q, search) = find_order_preserving(s, &e.kernel());
    let SectionSearch::Exhausted { obstructions } = search else {
        return Err("an order-preserving section was found".into());
    };
    let (r, t, ssr) = (q.project(e.r), q.project(e.s), q.project(e.ssr));
    check!(
        obstructions.iter().any(|o| o.lower == ssr && o.uppers.contains(&r) && o.uppers.contains(&t)),
        "no obstruction [ss*r] ≤ [r], [ss*r] ≤ [s]"
    );
    Ok(format!("19 elements, {} classes, obstruction [ss*r] ≤ [r], [s]", c.num_classes()))
}

fn busby_clauses(r: &Report, what: &str) -> Result<(), String> {
    passes(r, what)?;
    let count = |p: &str| r.clauses.iter().filter(|c| c.name.starts_with(p)).count();
    check!(
        count("def_") == 4 && count("lemma_") == 11,
        "{what}: {} axioms, {} lemma clauses",
        count("def_"),
        count("lemma_")
    );
    Ok(())
}

fn section_and_green<F: Scalar>(t: &FiniteInverseSemigroup, n: &NormalClifford, what: &str) -> Result<(), String> {
    let (q, c) = section(t, n)?;
    let act = ok(action_from_cross_section::<F>(t, n, &q, &c), what)?;
    busby_clauses(&verify_busby_smith(&act), &format!("{what} section"))?;
    let g = ok(green_canonical::<F>(t, n), what)?;
    busby_clauses(&verify_busby_smith(&ok(green_to_busby(&g, &q, &c), what)?), &format!("{what} green"))
}

fn criterion_2() -> Res {
    let z4 = cyclic_group(4);
    let mut count = 0;
    for (name, t, n) in [
        ("z4/z2", z4.clone(), NormalClifford::new(&z4, &[0, 2]).unwrap()),
        ("z4/1", z4.clone(), NormalClifford::new(&z4, &[0]).unwrap()),
        ("z4/z4", z4.clone(), NormalClifford::new(&z4, &[0, 1, 2, 3]).unwrap()),
        ("i2/e", i2(), NormalClifford::idempotents(&i2())),
        ("ex20/e", ex20(), NormalClifford::idempotents(&ex20())),
    ] {
        section_and_green::<Q>(&t, &n, name)?;
        count += 2;
        if t.size() <= 7 {
            section_and_green::<C64>(&t, &n, &format!("{name} float"))?;
            count += 2;
        }
    }
    for seed in 0..4u64 {
        let g = Group::cyclic(2 + (seed as usize % 2));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = ok(random_twisted_partial::<Q, _>(&g, 1 + seed as usize / 2, &mut rng), "random")?;
        busby_clauses(&verify_busby_smith(&ok(partial_to_exel(&p), "exel")?.0), "exel")?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = ok(random_twisted_partial::<C64, _>(&g, 1, &mut rng), "random float")?;
        busby_clauses(&verify_busby_smith(&ok(partial_to_exel(&p), "exel float")?.0), "exel float")?;
        count += 2;
    }
    Ok(format!("{count} actions, 4 axioms and 11 lemma clauses each"))
}

fn criterion_3() -> Res {
    let (t, n, q, c) = z4_over_z2();
    let act = ok(action_from_cross_section::<Q>(&t, &n, &q, &c), "action")?;
    let one = q.project(1);
    // c(1̄)c(1̄)c(1̄1̄)* = 1 + 1 - 0 = 2, the second basis vector of C*({0, 2}).
    let w11 = act.w(one, one);
    check!(*w11 == AlgebraElement::basis(2, 1), "w_(1,1) = {:?}", w11.coeffs());
    let cp = ok(quotient_crossed_product(&act), "crossed product")?;
    // Oracle: each of the two classes carries all of C*(N).
    let dim_l_oracle = q.semigroup.size() * n.len();
    check!(cp.l.dim() == dim_l_oracle && dim_l_oracle == 4, "dim L = {}", cp.l.dim());
    check!(cp.dim() == t.size(), "quotient dim {}", cp.dim());
    let target = ok(FdStarAlgebra::<Q>::from_semigroup_algebra(&t, None), "target")?;
    let map = ok(semigroup_section_map(&t, &n, &q, c.reps(), &cp.l), "map")?;
    passes(&verify_explicit_iso(&map, &cp.l.algebra, &cp.quotient.relations, &target), "iso")?;
    Ok("w nontrivial, dim L 4, quotient 4, isomorphic to C*(Z_4)".into())
}

/// `Σ_s |{f ∈ E : f ≤ ss*}|`, the dimension of L for the canonical action over E.
fn dim_l_over_idempotents(s: &FiniteInverseSemigroup) -> usize {
    let e = s.idempotents();
    (0..s.size())
        .map(|x| {
            let r = s.mul(x, s.star(x));
            e.iter().filter(|&&f| s.mul(f, r) == f).count()
        })
        .sum()
}

fn criterion_4() -> Res {
    let t = i2();
    let n = NormalClifford::idempotents(&t);
    let (q, c) = section(&t, &n)?;
    let act = ok(action_from_cross_section::<Q>(&t, &n, &q, &c), "action")?;
    let cp = ok(quotient_crossed_product(&act), "crossed product")?;
    check!(cp.l.dim() == dim_l_over_idempotents(&t), "dim L {}", cp.l.dim());
    check!(cp.dim() == 7, "quotient dim {}", cp.dim());
    let target = ok(FdStarAlgebra::<Q>::from_semigroup_algebra(&t, None), "target")?;
    let map = ok(semigroup_section_map(&t, &n, &q, c.reps(), &cp.l), "map")?;
    passes(&verify_explicit_iso(&map, &cp.l.algebra, &cp.quotient.relations, &target), "iso")?;
    let rep = ok(semigroup_cstar_reports::<Q>(&t, &n), "reports")?;
    passes(&rep, "C*-algebra identities")?;
    for name in ["canonical", "green_semigroup_algebra", "green_group_image"] {
        check!(rep.clauses.iter().any(|c| c.name == name && c.passed), "{name} missing");
    }
    Ok(format!("dim L {}, quotient 7, isomorphic to C*(I_2)", cp.l.dim()))
}

fn criterion_5() -> Res {
    let z4 = cyclic_group(4);
    for (t, n) in [
        (z4.clone(), NormalClifford::new(&z4, &[0, 2]).unwrap()),
        (i2(), NormalClifford::idempotents(&i2())),
        (ex20(), NormalClifford::idempotents(&ex20())),
    ] {
        let (q, c) = section(&t, &n)?;
        let via_green = ok(green_to_busby(&ok(green_canonical::<Q>(&t, &n), "green")?, &q, &c), "green_to_busby")?;
        let direct = ok(action_from_cross_section::<Q>(&t, &n, &q, &c), "section")?;
        check!(via_green == direct, "round trip differs on a {}-element semigroup", t.size());
    }
    let (t, n, q, c) = z4_over_z2();
    let one = q.project(1);
    let mut reps = c.reps().to_vec();
    reps[one] = 3;
    let d = ok(CrossSection::new(&q, reps), "second section")?;
    check!(d.reps() != c.reps(), "sections coincide");
    let (v, rep) = ok(cross_section_equivalence_witness::<Q>(&t, &n, &q, &c, &d), "witness")?;
    passes(&rep, "exterior equivalence")?;
    // V_1̄ = d(1̄)c(1̄)* = 3 - 1 = 2.
    check!(v[one] == AlgebraElement::basis(2, 1), "V = {:?}", v[one].coeffs());
    Ok("3 round trips exact, sections 1 and 3 of Z_4/Z_2 exterior equivalent".into())
}

/// `|S(G)|` for a group of order `n`: pairs `(P, s)` with `e, s ∈ P ⊆ G`.
fn sg_count_oracle(n: usize) -> usize {
    (0..n).map(|s| 1usize << (n - if s == 0 { 1 } else { 2 })).sum()
}

fn criterion_6() -> Res {
    for (n, want) in [(2, 3), (3, 8)] {
        let got = ok(enumerate_sg(&Group::cyclic(n)), "S(G)")?.semigroup.size();
        check!(got == want && sg_count_oracle(n) == want, "|S(Z_{n})| = {got}");
    }
    for k in 0..20u64 {
        let g = Group::cyclic(2 + (k as usize % 2));
        let mut rng = ChaCha8Rng::seed_from_u64(100 + k);
        let block = rng.gen_range(1..=2);
        let p = ok(random_twisted_partial::<Q, _>(&g, block, &mut rng), "random")?;
        passes(&verify_twisted_partial(&p), "partial side")?;
        let (act, _) = ok(partial_to_exel(&p), "partial_to_exel")?;
        passes(&verify_busby_smith(&act), "S(G) side")?;
        let back = ok(exel_to_partial(&act, &g), "exel_to_partial")?;
        check!(back == p, "round trip {k} differs");
    }
    Ok("|S(Z_2)| 3, |S(Z_3)| 8, 20 round trips exact".into())
}

fn covariant(act: &BusbySmithAction<Q>, what: &str) -> Result<(), String> {
    let cp = ok(quotient_crossed_product(act), what)?;
    check!(cp.cstar.certified && cp.cstar.radical_dim == 0, "{what}: uncertified");
    let (big_pi, gram) = ok(left_regular(&cp.quotient.algebra), what)?;
    let rep = ok(rep_from_algebra_rep(&cp, act, &big_pi, gram), what)?;
    passes(&verify_covariant(&rep, act), &format!("{what} covariance"))?;
    passes(&verify_round_trip(&rep, &cp, &big_pi), &format!("{what} round trip"))
}

fn criterion_7() -> Res {
    let z4 = cyclic_group(4);
    let mut count = 0;
    for (name, t, n) in [
        ("z4/z2", z4.clone(), NormalClifford::new(&z4, &[0, 2]).unwrap()),
        ("z4/1", z4.clone(), NormalClifford::new(&z4, &[0]).unwrap()),
        ("i2/e", i2(), NormalClifford::idempotents(&i2())),
        ("ex20/e", ex20(), NormalClifford::idempotents(&ex20())),
    ] {
        let (q, c) = section(&t, &n)?;
        covariant(&ok(action_from_cross_section::<Q>(&t, &n, &q, &c), name)?, name)?;
        count += 1;
    }
    for seed in 0..2u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = ok(random_twisted_partial::<Q, _>(&Group::cyclic(3), 1, &mut rng), "random")?;
        covariant(&ok(partial_to_exel(&p), "exel")?.0, "S(Z_3)")?;
        count += 1;
    }
    Ok(format!("{count} crossed products, covariant and round-tripping"))
}

fn phase<R: Rng>(rng: &mut R) -> C64 {
    let t: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    C64::new(t.cos(), t.sin())
}

/// A unitary of `C[Z_2]` in the basis `{e, g}`: `z₁(1+g)/2 + z₂(1-g)/2`.
fn unitary_z2<R: Rng>(rng: &mut R) -> AlgebraElement<C64> {
    let (a, b) = (phase(rng), phase(rng));
    AlgebraElement::new(vec![(a + b) / 2.0, (a - b) / 2.0])
}

fn star_z2(x: &AlgebraElement<C64>) -> AlgebraElement<C64> {
    AlgebraElement::new(x.coeffs().iter().map(|c| c.conj()).collect())
}

fn mul_z2(x: &AlgebraElement<C64>, y: &AlgebraElement<C64>) -> AlgebraElement<C64> {
    let (a, b, c, d) = (x.coeffs()[0], x.coeffs()[1], y.coeffs()[0], y.coeffs()[1]);
    AlgebraElement::new(vec![a * c + b * d, a * d + b * c])
}

fn criterion_8() -> Res {
    let (t, n, q, c) = z4_over_z2();
    let alpha = ok(action_from_cross_section::<C64>(&t, &n, &q, &c), "action")?;
    check!(alpha.tol() == 1e-9, "tolerance {}", alpha.tol());
    let m = q.semigroup.size();
    let ones = vec![AlgebraElement::basis(2, 0); m];
    passes(&ok(is_exterior_equivalence(&alpha, &alpha, &ones), "reflexive")?, "reflexivity")?;
    let mut discriminated = 0;
    for seed in 0..50u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v: Vec<_> = (0..m).map(|_| unitary_z2(&mut rng)).collect();
        let x: Vec<_> = (0..m).map(|_| unitary_z2(&mut rng)).collect();
        let beta = ok(exterior_transform(&alpha, &v), "transform")?;
        let gamma = ok(exterior_transform(&beta, &x), "transform")?;
        passes(&ok(is_exterior_equivalence(&alpha, &beta, &v), "forward")?, &format!("seed {seed} forward"))?;
        passes(&ok(is_exterior_equivalence(&beta, &beta, &ones), "reflexive")?, &format!("seed {seed} reflexivity"))?;
        let vs: Vec<_> = v.iter().map(star_z2).collect();
        passes(&ok(is_exterior_equivalence(&beta, &alpha, &vs), "symmetric")?, &format!("seed {seed} symmetry"))?;
        let xv: Vec<_> = x.iter().zip(&v).map(|(a, b)| mul_z2(a, b)).collect();
        passes(&ok(is_exterior_equivalence(&alpha, &gamma, &xv), "transitive")?, &format!("seed {seed} transitivity"))?;
        if !ok(is_exterior_equivalence(&alpha, &beta, &x), "control")?.passed() {
            discriminated += 1;
        }
    }
    check!(discriminated == 50, "a wrong witness was accepted {} times", 50 - discriminated);
    Ok("50 families: reflexive, symmetric, transitive at 1e-9".into())
}

fn decomposition_ok(direct: usize, iterated: Option<usize>, r: &Report, what: &str) -> Result<(), String> {
    passes(r, what)?;
    check!(iterated == Some(direct), "{what}: direct {direct}, iterated {iterated:?}");
    check!(r.clauses.iter().any(|c| c.name.starts_with("iso.")), "{what}: no isomorphism certified");
    Ok(())
}

fn criterion_9() -> Res {
    let t = i2();
    let e = NormalClifford::idempotents(&t);
    let d = ok(decompose_green(&ok(green_canonical::<Q>(&t, &e), "green")?, &e), "i2")?;
    decomposition_ok(d.direct.dim(), d.iterated_product.as_ref().map(|p| p.dim()), &d.report, "green I_2")?;
    let z4 = cyclic_group(4);
    let triv = NormalClifford::new(&z4, &[0]).unwrap();
    let z2 = NormalClifford::new(&z4, &[0, 2]).unwrap();
    let d = ok(decompose_green(&ok(green_canonical::<Q>(&z4, &triv), "green")?, &z2), "z4")?;
    decomposition_ok(d.direct.dim(), d.iterated_product.as_ref().map(|p| p.dim()), &d.report, "green Z_4")?;
    let (q, c) = section(&z4, &triv)?;
    let act = ok(action_from_cross_section::<Q>(&z4, &triv, &q, &c), "action")?;
    let l = ok(NormalClifford::new(&act.semigroup, &[q.project(0), q.project(2)]), "L")?;
    let d = ok(decompose_busby(&act, &l, None, 100_000), "busby z4")?;
    decomposition_ok(d.direct.dim(), d.iterated_product.as_ref().map(|p| p.dim()), &d.report, "busby Z_4")?;

    let ce = counterexample();
    let t = ex20();
    let e = NormalClifford::idempotents(&t);
    let (q, c) = section(&t, &e)?;
    let act = ok(action_from_cross_section::<Q>(&t, &e, &q, &c), "action")?;
    let mut sub: Vec<usize> = ce.kernel().elements().iter().map(|&x| q.project(x)).collect();
    sub.push(q.project(t.unit().expect("adjoined")));
    sub.sort_unstable();
    let l = ok(NormalClifford::new(&act.semigroup, &sub), "kernel")?;
    match decompose_busby(&act, &l, None, 100_000) {
        Err(Error::NoOrderPreservingSection(why)) => check!(!why.is_empty(), "empty diagnosis"),
        Err(other) => return Err(format!("counterexample: unexpected error {other}")),
        Ok(_) => return Err("counterexample: a decomposition was produced".into()),
    }
    Ok("green I_2 7 = 7, green Z_4 4 = 4, busby Z_4 4 = 4, counterexample refused".into())
}

/// `Σ_D n_D² |G_D|` over the D-classes of `s`.
fn wedderburn_oracle(s: &FiniteInverseSemigroup) -> usize {
    let e = s.idempotents();
    let d_related = |f: usize, g: usize| (0..s.size()).any(|x| s.mul(x, s.star(x)) == f && s.mul(s.star(x), x) == g);
    let mut seen = vec![false; e.len()];
    let mut total = 0;
    for i in 0..e.len() {
        if seen[i] {
            continue;
        }
        let class: Vec<usize> = (0..e.len()).filter(|&j| d_related(e[i], e[j])).collect();
        for &j in &class {
            seen[j] = true;
        }
        let f = e[i];
        let h = (0..s.size()).filter(|&x| s.mul(x, s.star(x)) == f && s.mul(s.star(x), x) == f).count();
        total += class.len() * class.len() * h;
    }
    total
}

fn criterion_10() -> Res {
    let ce = counterexample();
    let suite = [
        cyclic_group(1),
        symmetric_inverse_monoid(1).semigroup,
        cyclic_group(2),
        enumerate_sg(&Group::cyclic(2)).unwrap().semigroup,
        cyclic_group(3),
        cyclic_group(4),
        i2(),
        enumerate_sg(&Group::cyclic(3)).unwrap().semigroup,
        quotient_by(ce.semigroup(), &ce.kernel()).semigroup,
        ce.semigroup().clone(),
    ];
    let mut sizes = Vec::new();
    for s in &suite {
        let cs = ok(FdStarAlgebra::<Q>::from_semigroup_algebra(s, None), "algebra")?.cstar_dimension();
        let w = wedderburn_oracle(s);
        check!(
            cs.radical_dim == 0 && cs.certified && cs.dim == s.size() && w == s.size(),
            "size {}: radical {}, certified {}, dim {}, oracle {w}",
            s.size(),
            cs.radical_dim,
            cs.certified,
            cs.dim
        );
        sizes.push(s.size());
    }
    Ok(format!("semisimple and certified for sizes {sizes:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("counterexample reproduction", criterion_1),
        ("Busby-Smith axiom suite", criterion_2),
        ("twisted decomposition, group case", criterion_3),
        ("canonical-action decomposition", criterion_4),
        ("Green and Busby-Smith round trip", criterion_5),
        ("S(G) correspondence", criterion_6),
        ("representation bijection", criterion_7),
        ("exterior equivalence is an equivalence relation", criterion_8),
        ("Green decomposition at desk scale", criterion_9),
        ("semisimplicity oracle", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {:>2}. {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}. {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
