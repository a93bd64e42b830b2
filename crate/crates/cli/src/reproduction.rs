//! `paper-example`: the 19-element counterexample and a quick acceptance table.

use anyhow::Result;
use serde_json::{json, Value};
use twistcross_core::actions::{action_from_cross_section, green_canonical, green_to_busby, verify_busby_smith};
use twistcross_core::algebra::FdStarAlgebra;
use twistcross_core::catalog::{counterexample, z4_over_z2, Counterexample};
use twistcross_core::congruence::{
    congruence_from_normal_clifford, is_congruence, is_idempotent_separating, kernel_normal_system, quotient_by,
    NormalClifford,
};
use twistcross_core::cross_section::{find_order_preserving, SectionSearch};
use twistcross_core::crossed::{
    decompose_busby, decompose_green, left_regular, quotient_crossed_product, rep_from_algebra_rep,
    semigroup_cstar_reports, semigroup_section_map, verify_covariant, verify_explicit_iso, verify_round_trip,
};
use twistcross_core::exel::enumerate_sg;
use twistcross_core::report::{ClauseKind, Report};
use twistcross_core::semigroup::{cyclic_group, symmetric_inverse_monoid, FiniteInverseSemigroup, Group};
use twistcross_core::{Error as CoreError, GaussRat};

use crate::commands::Outcome;
use crate::Opts;

type Q = GaussRat;

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn counterexample_report(e: &Counterexample) -> (Report, Value) {
    let s = e.semigroup();
    let mut r = Report::new("19-element counterexample");
    r.assert("size", ClauseKind::Check, s.size() == 19, || format!("{} elements", s.size()));
    r.assert("naive_partition_rejected", ClauseKind::Check, !is_congruence(s, &e.naive_partition()).passed(), || {
        "the two-pair partition is compatible".into()
    });
    let n = e.kernel();
    let c = congruence_from_normal_clifford(s, &n);
    r.absorb("congruence", is_congruence(s, &c));
    r.assert("idempotent_separating", ClauseKind::Check, is_idempotent_separating(s, &c), String::new);
    let kns = kernel_normal_system(s, &c);
    let pairs = [sorted(vec![e.sr, e.srsr]), sorted(vec![e.rs, e.rsrs])];
    let singles = kns.iter().filter(|k| k.len() == 1).count();
    let kns_ok = pairs.iter().all(|p| kns.contains(p)) && singles + 2 == kns.len();
    r.assert("kernel_normal_system", ClauseKind::Check, kns_ok, || format!("{kns:?}"));
    r.assert("quotient_size", ClauseKind::Check, c.num_classes() == 15, || format!("{} classes", c.num_classes()));
    let (q, search) = find_order_preserving(s, &n);
    let (r_class, s_class, ssr_class) = (q.project(e.r), q.project(e.s), q.project(e.ssr));
    let mut obstruction = Value::Null;
    match &search {
        SectionSearch::Found(_) => r.assert("no_section", ClauseKind::Check, false, || "a section was found".into()),
        SectionSearch::Exhausted { obstructions } => {
            let hit = obstructions
                .iter()
                .find(|o| o.lower == ssr_class && o.uppers.contains(&r_class) && o.uppers.contains(&s_class));
            r.assert("no_section", ClauseKind::Check, hit.is_some(), || {
                "no obstruction [ss*r] ≤ [r], [ss*r] ≤ [s]".into()
            });
            if let Some(o) = hit {
                obstruction = json!(o.describe(&q));
            }
        }
    }
    let doc = json!({
        "size": s.size(),
        "quotient_size": c.num_classes(),
        "kernel_normal_system": kns.iter().map(|k| k.iter().map(|&a| s.label(a)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "section_found": search.section().is_some(),
        "obstruction": obstruction,
    });
    (r, doc)
}

fn i2() -> FiniteInverseSemigroup {
    symmetric_inverse_monoid(2).semigroup
}

fn canonical_rows(r: &mut Report, name: &str, t: &FiniteInverseSemigroup, n: &NormalClifford) -> Result<()> {
    let (q, search) = find_order_preserving(t, n);
    let Some(c) = search.section() else {
        r.assert(name, ClauseKind::Check, false, || "no section".into());
        return Ok(());
    };
    let act = action_from_cross_section::<Q>(t, n, &q, c)?;
    r.absorb(&format!("{name}.section"), verify_busby_smith(&act));
    let g = green_canonical::<Q>(t, n)?;
    r.absorb(&format!("{name}.green_to_busby"), verify_busby_smith(&green_to_busby(&g, &q, c)?));
    Ok(())
}

fn axioms_row() -> Result<Report> {
    let mut r = Report::new("2. Busby-Smith axioms");
    let (t, n, q, c) = z4_over_z2();
    r.absorb("z4", verify_busby_smith(&action_from_cross_section::<Q>(&t, &n, &q, &c)?));
    let t = i2();
    canonical_rows(&mut r, "i2", &t, &NormalClifford::idempotents(&t))?;
    Ok(r)
}

fn z4_row() -> Result<Report> {
    let mut r = Report::new("3. Z_4 over Z_2");
    let (t, n, q, c) = z4_over_z2();
    let act = action_from_cross_section::<Q>(&t, &n, &q, &c)?;
    let cp = quotient_crossed_product(&act)?;
    r.value("dim_l", cp.l.dim());
    r.value("dim_quotient", cp.dim());
    r.assert("dims", ClauseKind::Check, cp.l.dim() == 4 && cp.dim() == 4, String::new);
    let target = FdStarAlgebra::<Q>::from_semigroup_algebra(&t, None)?;
    let map = semigroup_section_map(&t, &n, &q, c.reps(), &cp.l)?;
    r.absorb("iso", verify_explicit_iso(&map, &cp.l.algebra, &cp.quotient.relations, &target));
    Ok(r)
}

fn i2_row() -> Result<Report> {
    let mut r = Report::new("4. I_2 over its idempotents");
    let t = i2();
    let n = NormalClifford::idempotents(&t);
    let q = quotient_by(&t, &n);
    let (_, search) = find_order_preserving(&t, &n);
    let c = search.section().ok_or_else(|| anyhow::anyhow!("I_2 has a section"))?;
    let act = action_from_cross_section::<Q>(&t, &n, &q, c)?;
    let cp = quotient_crossed_product(&act)?;
    r.value("dim_quotient", cp.dim());
    r.assert("dim", ClauseKind::Check, cp.dim() == 7, String::new);
    let target = FdStarAlgebra::<Q>::from_semigroup_algebra(&t, None)?;
    let map = semigroup_section_map(&t, &n, &q, c.reps(), &cp.l)?;
    r.absorb("iso", verify_explicit_iso(&map, &cp.l.algebra, &cp.quotient.relations, &target));
    r.absorb("cstar", semigroup_cstar_reports::<Q>(&t, &n)?);
    Ok(r)
}

fn sg_row() -> Result<Report> {
    let mut r = Report::new("6. S(G) sizes");
    for (n, want) in [(2, 3), (3, 8)] {
        let got = enumerate_sg(&Group::cyclic(n))?.semigroup.size();
        r.assert(&format!("s_z{n}"), ClauseKind::Check, got == want, || format!("{got} elements"));
    }
    Ok(r)
}

fn rep_row() -> Result<Report> {
    let mut r = Report::new("7. Left-regular covariant representations");
    let (t, n, q, c) = z4_over_z2();
    let t2 = i2();
    let n2 = NormalClifford::idempotents(&t2);
    let (q2, search) = find_order_preserving(&t2, &n2);
    let c2 = search.section().ok_or_else(|| anyhow::anyhow!("I_2 has a section"))?;
    for (name, act) in [
        ("z4", action_from_cross_section::<Q>(&t, &n, &q, &c)?),
        ("i2", action_from_cross_section::<Q>(&t2, &n2, &q2, c2)?),
    ] {
        let cp = quotient_crossed_product(&act)?;
        let (big_pi, gram) = left_regular(&cp.quotient.algebra)?;
        let rep = rep_from_algebra_rep(&cp, &act, &big_pi, gram)?;
        r.absorb(&format!("{name}.covariant"), verify_covariant(&rep, &act));
        r.absorb(&format!("{name}.round_trip"), verify_round_trip(&rep, &cp, &big_pi));
    }
    Ok(r)
}

fn decompose_row(e: &Counterexample, max_size: usize) -> Result<Report> {
    let mut r = Report::new("9. Decompositions");
    let t = i2();
    let en = NormalClifford::idempotents(&t);
    r.absorb("green_i2", decompose_green(&green_canonical::<Q>(&t, &en)?, &en)?.report);
    let z4 = cyclic_group(4);
    let triv = NormalClifford::new(&z4, &[0])?;
    let z2 = NormalClifford::new(&z4, &[0, 2])?;
    r.absorb("green_z4", decompose_green(&green_canonical::<Q>(&z4, &triv)?, &z2)?.report);
    let (q, search) = find_order_preserving(&z4, &triv);
    let c = search.section().ok_or_else(|| anyhow::anyhow!("Z_4 has a section"))?;
    let act = action_from_cross_section::<Q>(&z4, &triv, &q, c)?;
    let l = NormalClifford::new(&act.semigroup, &[q.project(0), q.project(2)])?;
    r.absorb("busby_z4", decompose_busby(&act, &l, None, max_size)?.report);

    let t = e.semigroup().adjoin_unit();
    let en = NormalClifford::idempotents(&t);
    let (q, search) = find_order_preserving(&t, &en);
    let c = search.section().ok_or_else(|| anyhow::anyhow!("the idempotent quotient has a section"))?;
    let act = action_from_cross_section::<Q>(&t, &en, &q, c)?;
    let mut sub: Vec<usize> = e.kernel().elements().iter().map(|&x| q.project(x)).collect();
    sub.push(q.project(t.unit().expect("adjoined")));
    let l = NormalClifford::new(&act.semigroup, &sorted(sub))?;
    let refused = matches!(decompose_busby(&act, &l, None, max_size), Err(CoreError::NoOrderPreservingSection(_)));
    r.assert("busby_counterexample_refused", ClauseKind::Check, refused, || "a decomposition was produced".into());
    Ok(r)
}

fn semisimple_row(e: &Counterexample) -> Result<Report> {
    let mut r = Report::new("10. Semisimplicity");
    let q19 = quotient_by(e.semigroup(), &e.kernel()).semigroup;
    let suite = [
        ("z1", cyclic_group(1)),
        ("z2", cyclic_group(2)),
        ("z4", cyclic_group(4)),
        ("i1", symmetric_inverse_monoid(1).semigroup),
        ("i2", i2()),
        ("s_z3", enumerate_sg(&Group::cyclic(3))?.semigroup),
        ("quotient15", q19),
        ("ex19", e.semigroup().clone()),
    ];
    for (name, s) in suite {
        let cs = FdStarAlgebra::<Q>::from_semigroup_algebra(&s, None)?.cstar_dimension();
        r.assert(name, ClauseKind::Check, cs.radical_dim == 0 && cs.certified && cs.dim == s.size(), || {
            format!("radical {}, certified {}, dim {} of {}", cs.radical_dim, cs.certified, cs.dim, s.size())
        });
    }
    Ok(r)
}

pub fn run(o: &Opts) -> Result<Outcome> {
    let e = counterexample();
    let (mut first, doc) = counterexample_report(&e);
    first.title = "1. Counterexample".into();
    let reports = vec![
        first,
        axioms_row()?,
        z4_row()?,
        i2_row()?,
        sg_row()?,
        rep_row()?,
        decompose_row(&e, o.max_size)?,
        semisimple_row(&e)?,
    ];
    let table: Vec<Value> = reports.iter().map(|r| json!({"row": r.title, "passed": r.passed()})).collect();
    Ok(Outcome::checked(json!({"counterexample": doc, "table": table}), reports))
}
