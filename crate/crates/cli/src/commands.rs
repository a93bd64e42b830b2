//! Subcommand bodies. Each returns an [`Outcome`]; `main` turns it into
//! output and an exit status.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, ensure, Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde_json::{json, Map, Value};
use twistcross_core::actions::{
    action_from_cross_section, exel_to_partial, green_canonical, green_to_busby, is_exterior_equivalence,
    partial_to_exel, random_twisted_partial, trivial_partial_action, verify_busby_smith, verify_green,
    verify_twisted_partial, BusbySmithAction, FellSemigroup, GreenAction,
};
use twistcross_core::algebra::FdStarAlgebra;
use twistcross_core::congruence::{
    enumerate_normal_clifford, is_normal_clifford, quotient_by, NormalClifford, Quotient,
};
use twistcross_core::cross_section::{find_order_preserving, is_order_preserving, CrossSection, SectionSearch};
use twistcross_core::crossed::{
    decompose_busby, decompose_green, green_crossed_product, green_group_image, left_regular, quotient_crossed_product,
    rep_from_algebra_rep, semigroup_section_map, verify_covariant, verify_explicit_iso, verify_round_trip,
    CrossedProduct,
};
use twistcross_core::exel::{enumerate_sg, sg_size, Exel};
use twistcross_core::report::{ClauseKind, Report};
use twistcross_core::semigroup::{
    cyclic_group, from_partial_bijections, symmetric_inverse_monoid, verify_inverse_semigroup, FTilde,
    FiniteInverseSemigroup, Group, VerifyOptions,
};
use twistcross_core::{Error as CoreError, GaussRat, C64};

use crate::format::{
    element_from_json, group_from_json, normal_from_json, section_from_json, section_to_json, Action, ActionJson,
    AlgebraJson, Cx, JsonScalar, ReportJson, SectionJson, SemigroupJson,
};
use crate::{ActionCommand, Backend, BuildKind, Cli, Command, DecomposeArgs, GroupArgs, Mode, Opts, OutputFormat};

/// A result document, the verifier reports behind it, and the overall verdict.
pub struct Outcome {
    pub doc: Value,
    pub reports: Vec<Report>,
    pub passed: bool,
}

impl Outcome {
    pub fn data(doc: Value) -> Self {
        Outcome { doc, reports: Vec::new(), passed: true }
    }

    pub fn checked(doc: Value, reports: Vec<Report>) -> Self {
        let passed = reports.iter().all(Report::passed);
        Outcome { doc, reports, passed }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let o = &cli.opts;
    ensure!(o.tol > 0.0 && o.tol.is_finite(), "--tol must be positive");
    match &cli.command {
        Command::Gen(a) => gen(a, o),
        Command::Analyze(a) => analyze(&a.input, o),
        Command::Nclifford(a) => nclifford(&a.input, a.check.as_deref(), a.guard, o),
        Command::Section(a) => section(&a.input, &a.subsemigroup, a.section.as_deref(), o),
        Command::Exel(a) => exel(a, o),
        Command::Action { command } => match command {
            ActionCommand::Build { kind } => match o.backend {
                Backend::Exact => build::<GaussRat>(kind, o),
                Backend::Float => build::<C64>(kind, o),
            },
            ActionCommand::Verify(a) => match o.backend {
                Backend::Exact => verify::<GaussRat>(&a.input, a.against.as_deref(), a.witness.as_deref(), o),
                Backend::Float => verify::<C64>(&a.input, a.against.as_deref(), a.witness.as_deref(), o),
            },
        },
        Command::Xprod(a) => match o.backend {
            Backend::Exact => xprod::<GaussRat>(a, o),
            Backend::Float => xprod::<C64>(a, o),
        },
        Command::Decompose(a) => decompose(a, o),
        Command::PaperExample => crate::reproduction::run(o),
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn verify_options(o: &Opts) -> VerifyOptions {
    VerifyOptions { seed: o.seed, ..VerifyOptions::default() }
}

/// Cayley tables are checked; closures of partial bijections are inverse by
/// construction.
fn checked(j: &SemigroupJson, o: &Opts) -> Result<FiniteInverseSemigroup> {
    let s = j.to_semigroup(o.max_size)?;
    if matches!(j, SemigroupJson::Cayley { .. }) {
        let rep = verify_inverse_semigroup(&s, verify_options(o));
        let failure = rep
            .failures()
            .next()
            .map(|c| format!("{} fails ({})", c.name, c.witness.as_deref().unwrap_or("no witness")));
        if let Some(f) = failure {
            bail!("not an inverse semigroup: {f}");
        }
    }
    Ok(s)
}

pub fn load_semigroup(path: &Path, o: &Opts) -> Result<FiniteInverseSemigroup> {
    checked(&read_json::<SemigroupJson>(path)?, o)
}

fn load_normal(s: &FiniteInverseSemigroup, path: Option<&Path>) -> Result<NormalClifford> {
    match path {
        Some(p) => normal_from_json(s, &read_json::<Vec<usize>>(p)?),
        None => Ok(NormalClifford::idempotents(s)),
    }
}

/// Either an action bundle or a semigroup.
enum Input {
    Action(ActionJson),
    Semigroup(SemigroupJson),
}

fn load_input(path: &Path) -> Result<Input> {
    let v: Value = read_json(path)?;
    if v.get("kind").is_some() {
        Ok(Input::Action(serde_json::from_value(v).with_context(|| format!("decoding action {}", path.display()))?))
    } else {
        Ok(Input::Semigroup(
            serde_json::from_value(v).with_context(|| format!("decoding semigroup {}", path.display()))?,
        ))
    }
}

/// The given section of `T/N`, or the first order-preserving one found.
fn section_of(t: &FiniteInverseSemigroup, n: &NormalClifford, path: Option<&Path>) -> Result<(Quotient, CrossSection)> {
    match path {
        Some(p) => {
            let q = quotient_by(t, n);
            let c = section_from_json(&q, &read_json(p)?)?;
            Ok((q, c))
        }
        None => match find_order_preserving(t, n) {
            (q, SectionSearch::Found(c)) => Ok((q, c)),
            (q, SectionSearch::Exhausted { obstructions }) => {
                let why: Vec<String> = obstructions.iter().map(|x| x.describe(&q)).collect();
                Err(CoreError::NoOrderPreservingSection(why.join("; ")).into())
            }
        },
    }
}

fn symmetric_inverse_size(n: usize) -> usize {
    if n > 30 {
        return usize::MAX;
    }
    let (mut total, mut binom, mut fact) = (1usize, 1u128, 1usize);
    for k in 1..=n {
        binom = binom * (n - k + 1) as u128 / k as u128;
        fact = fact.saturating_mul(k);
        let b = usize::try_from(binom).unwrap_or(usize::MAX);
        total = total.saturating_add(b.saturating_mul(b).saturating_mul(fact));
    }
    total
}

fn gen(a: &crate::GenArgs, o: &Opts) -> Result<Outcome> {
    let s = if let Some(n) = a.cyclic {
        ensure!(n >= 1, "--cyclic needs a positive order");
        ensure!(n <= o.max_size, "order {n} exceeds --max-size {}", o.max_size);
        cyclic_group(n)
    } else if let Some(n) = a.symmetric_inverse {
        ensure!(n >= 1, "--symmetric-inverse needs a positive degree");
        let size = symmetric_inverse_size(n);
        ensure!(size <= o.max_size, "I_{n} has {size} elements, above --max-size {}", o.max_size);
        symmetric_inverse_monoid(n).semigroup
    } else {
        ensure!(!a.gens.is_empty(), "give --gens, --cyclic or --symmetric-inverse");
        let gens = a
            .gens
            .iter()
            .map(|g| g.parse().map_err(anyhow::Error::from))
            .collect::<Result<Vec<twistcross_core::partial_bijection::PartialBijection>>>()?;
        if let Some(d) = a.degree {
            if let Some(bad) = gens.iter().find(|g| g.degree() != d) {
                bail!("generator {bad} has degree {}, expected {d}", bad.degree());
            }
        }
        from_partial_bijections(&gens, o.max_size)?.semigroup
    };
    Ok(Outcome::data(serde_json::to_value(SemigroupJson::from_semigroup(&s))?))
}

/// Semigroup algebras above this size are not certified by `analyze`.
const ALGEBRA_LIMIT: usize = 200;

fn analyze(path: &Path, o: &Opts) -> Result<Outcome> {
    let s = read_json::<SemigroupJson>(path)?.to_semigroup(o.max_size)?;
    let n = s.size();
    let axioms = verify_inverse_semigroup(&s, verify_options(o));
    if !axioms.passed() {
        return Ok(Outcome::checked(json!({"size": n}), vec![axioms]));
    }
    let mut order = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && s.leq(a, b) {
                order.push([a, b]);
            }
        }
    }
    let ftilde = match s.is_ftilde() {
        FTilde::Yes { majorant, .. } => json!({"holds": true, "majorant": majorant}),
        FTilde::No { witness, maximal_above } => {
            json!({"holds": false, "witness": witness, "maximal_above": maximal_above})
        }
        FTilde::NotUnital => json!({"holds": false, "reason": "no unit"}),
    };
    let (g, proj) = s.max_group_image();
    let mut doc = json!({
        "size": n,
        "unit": s.unit(),
        "zero": s.zero(),
        "labels": s.labels(),
        "idempotents": s.idempotents(),
        "is_group": s.is_group(),
        "natural_order": order,
        "ftilde": ftilde,
        "max_group_image": {"order": g.order(), "projection": proj},
    });
    let mut reports = vec![axioms];
    if n <= ALGEBRA_LIMIT {
        let cs = FdStarAlgebra::<GaussRat>::from_semigroup_algebra(&s, None)?.cstar_dimension();
        let mut r = Report::new("semigroup algebra");
        r.value("radical_dim", cs.radical_dim);
        r.value("cstar_dim", cs.dim);
        r.assert("radical_zero", ClauseKind::Check, cs.radical_dim == 0, || {
            format!("radical of dimension {}", cs.radical_dim)
        });
        r.assert("trace_form_certified", ClauseKind::Check, cs.certified, String::new);
        doc["semigroup_algebra"] =
            json!({"dim": n, "radical_dim": cs.radical_dim, "cstar_dim": cs.dim, "certified": cs.certified});
        reports.push(r);
    }
    Ok(Outcome::checked(doc, reports))
}

fn nclifford(path: &Path, check: Option<&Path>, guard: usize, o: &Opts) -> Result<Outcome> {
    let s = load_semigroup(path, o)?;
    if let Some(p) = check {
        let subset: Vec<usize> = read_json(p)?;
        let rep = is_normal_clifford(&s, &subset);
        return Ok(Outcome::checked(json!({"subset": subset}), vec![rep]));
    }
    let all = enumerate_normal_clifford(&s, guard)?;
    let subs: Vec<&[usize]> = all.iter().map(|n| n.elements()).collect();
    Ok(Outcome::data(json!({"count": all.len(), "subsemigroups": subs})))
}

fn section(path: &Path, sub: &Path, given: Option<&Path>, o: &Opts) -> Result<Outcome> {
    let s = load_semigroup(path, o)?;
    let n = load_normal(&s, Some(sub))?;
    if let Some(p) = given {
        let q = quotient_by(&s, &n);
        let c = section_from_json(&q, &read_json(p)?)?;
        let rep = is_order_preserving(&s, &q, &c);
        let doc = json!({"classes": q.semigroup.size(), "section": section_to_json(&c)});
        return Ok(Outcome::checked(doc, vec![rep]));
    }
    let (q, search) = find_order_preserving(&s, &n);
    let doc = match search {
        SectionSearch::Found(c) => json!({
            "found": true,
            "classes": q.semigroup.size(),
            "projection": q.projection(),
            "section": section_to_json(&c),
        }),
        SectionSearch::Exhausted { obstructions } => {
            let obs: Vec<Value> = obstructions
                .iter()
                .map(|x| {
                    let members = |k: usize| -> Vec<usize> { (0..s.size()).filter(|&a| q.project(a) == k).collect() };
                    json!({
                        "lower": x.lower,
                        "uppers": x.uppers,
                        "lower_members": members(x.lower),
                        "upper_members": x.uppers.iter().map(|&u| members(u)).collect::<Vec<_>>(),
                        "description": x.describe(&q),
                    })
                })
                .collect();
            json!({
                "found": false,
                "classes": q.semigroup.size(),
                "projection": q.projection(),
                "obstructions": obs,
            })
        }
    };
    Ok(Outcome::data(doc))
}

fn load_group(a: &GroupArgs, o: &Opts) -> Result<Group> {
    match (a.cyclic, &a.group) {
        (Some(n), None) => {
            ensure!(n >= 1, "--cyclic needs a positive order");
            Ok(Group::cyclic(n))
        }
        (None, Some(p)) => group_from_json(&read_json(p)?, o.max_size),
        _ => bail!("give exactly one of --cyclic and --group"),
    }
}

fn exel(a: &GroupArgs, o: &Opts) -> Result<Outcome> {
    let g = load_group(a, o)?;
    let sg = enumerate_sg(&g)?;
    let ex = Exel::new(g.clone())?;
    let n = g.order();
    let elements: Vec<Value> =
        sg.elements.iter().map(|x| json!({"P": x.set(), "s": x.tail(), "form": ex.to_canonical_string(x)})).collect();
    let mut rep = Report::new("S(G)");
    let size = sg.semigroup.size();
    rep.assert("size_formula", ClauseKind::Check, size == sg_size(n), || {
        format!("{size} elements, formula gives {}", sg_size(n))
    });
    rep.absorb("axioms", verify_inverse_semigroup(&sg.semigroup, VerifyOptions::default()));
    let doc = json!({
        "group_order": n,
        "size": size,
        "elements": elements,
        "semigroup": SemigroupJson::from_semigroup(&sg.semigroup),
    });
    Ok(Outcome::checked(doc, vec![rep]))
}

fn decode<F: JsonScalar>(path: &Path, o: &Opts) -> Result<Action<F>> {
    read_json::<ActionJson>(path)?.decode(o.tol, o.max_size)
}

fn decode_busby<F: JsonScalar>(path: &Path, o: &Opts) -> Result<BusbySmithAction<F>> {
    match decode(path, o)? {
        Action::Busby(a) => Ok(a),
        _ => bail!("{} is not a Busby-Smith action", path.display()),
    }
}

fn decode_green<F: JsonScalar>(path: &Path, o: &Opts) -> Result<GreenAction<F>> {
    match decode(path, o)? {
        Action::Green(a) => Ok(a),
        _ => bail!("{} is not a Green action", path.display()),
    }
}

fn build<F: JsonScalar>(kind: &BuildKind, o: &Opts) -> Result<Outcome> {
    let doc = match kind {
        BuildKind::Section(a) => {
            let t = load_semigroup(&a.semigroup, o)?;
            let n = load_normal(&t, a.normal.as_deref())?;
            let (q, c) = section_of(&t, &n, a.section.as_deref())?;
            ActionJson::from_busby(&action_from_cross_section::<F>(&t, &n, &q, &c)?)
        }
        BuildKind::Green(a) => {
            let t = load_semigroup(&a.semigroup, o)?;
            let n = load_normal(&t, a.normal.as_deref())?;
            ActionJson::from_green(&green_canonical::<F>(&t, &n)?)
        }
        BuildKind::GroupImage(a) => {
            let t = load_semigroup(&a.semigroup, o)?;
            let n = load_normal(&t, a.normal.as_deref())?;
            ActionJson::from_green(&green_group_image::<F>(&t, &n)?)
        }
        BuildKind::GreenToBusby { input, section } => {
            let g = decode_green::<F>(input, o)?;
            let (q, c) = section_of(&g.semigroup, &g.normal, section.as_deref())?;
            ActionJson::from_busby(&green_to_busby(&g, &q, &c)?)
        }
        BuildKind::Exel { input } => match decode::<F>(input, o)? {
            Action::Partial(p) => ActionJson::from_busby(&partial_to_exel(&p)?.0),
            _ => bail!("{} is not a twisted partial action", input.display()),
        },
        BuildKind::Partial { input, group } => {
            let act = decode_busby::<F>(input, o)?;
            ActionJson::from_partial(&exel_to_partial(&act, &load_group(group, o)?)?)
        }
        BuildKind::RandomPartial { cyclic, block } => {
            ensure!(*cyclic >= 1, "--cyclic needs a positive order");
            let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
            ActionJson::from_partial(&random_twisted_partial::<F, _>(&Group::cyclic(*cyclic), *block, &mut rng)?)
        }
        BuildKind::TrivialPartial { cyclic, blocks } => {
            ensure!(*cyclic >= 1, "--cyclic needs a positive order");
            ensure!(!blocks.is_empty() && blocks.iter().all(|&b| b > 0), "block sizes must be positive");
            let alg = FdStarAlgebra::<F>::from_multimatrix(blocks).with_tol(o.tol);
            ActionJson::from_partial(&trivial_partial_action(alg, Group::cyclic(*cyclic))?)
        }
    };
    Ok(Outcome::data(serde_json::to_value(doc)?))
}

fn verify<F: JsonScalar>(path: &Path, against: Option<&Path>, witness: Option<&Path>, o: &Opts) -> Result<Outcome> {
    let (kind, reports) = match decode::<F>(path, o)? {
        Action::Busby(a) => {
            let rep = verify_busby_smith(&a);
            let mut reports = vec![rep];
            if o.samples > 0 && reports[0].passed() {
                reports.push(FellSemigroup::new(&a)?.verify_sampled(o.samples, o.seed));
            }
            if let (Some(to), Some(v)) = (against, witness) {
                let b = decode_busby::<F>(to, o)?;
                let vs: Vec<Vec<Cx>> = read_json(v)?;
                let fam = vs.iter().map(|x| element_from_json(x, a.algebra.dim())).collect::<Result<Vec<_>>>()?;
                reports.push(is_exterior_equivalence(&a, &b, &fam)?);
            }
            ("busby_smith", reports)
        }
        Action::Green(g) => ("green", vec![verify_green(&g)]),
        Action::Partial(p) => ("twisted_partial", vec![verify_twisted_partial(&p)]),
    };
    if against.is_some() && kind != "busby_smith" {
        bail!("--against needs Busby-Smith actions");
    }
    Ok(Outcome::checked(json!({"kind": kind}), reports))
}

fn cp_doc<F: JsonScalar>(cp: &CrossedProduct<F>, dump: bool) -> Value {
    let mut doc = json!({
        "dim_l": cp.l.dim(),
        "dim_quotient": cp.dim(),
        "radical_dim": cp.cstar.radical_dim,
        "cstar_dim": cp.cstar.dim,
        "certified": cp.cstar.certified,
    });
    if dump {
        doc["algebra"] = serde_json::to_value(AlgebraJson::from_algebra(&cp.quotient.algebra)).expect("serializable");
    }
    doc
}

fn covariant_reports<F: JsonScalar>(cp: &CrossedProduct<F>, act: &BusbySmithAction<F>) -> Result<Vec<Report>> {
    let (big_pi, gram) = left_regular(&cp.quotient.algebra)?;
    let rep = rep_from_algebra_rep(cp, act, &big_pi, gram)?;
    Ok(vec![verify_covariant(&rep, act), verify_round_trip(&rep, cp, &big_pi)])
}

fn xprod<F: JsonScalar>(a: &crate::XprodArgs, o: &Opts) -> Result<Outcome> {
    match load_input(&a.input)? {
        Input::Action(j) => {
            let (cp, busby) = match j.decode::<F>(o.tol, o.max_size)? {
                Action::Busby(act) => (quotient_crossed_product(&act)?, Some(act)),
                Action::Green(g) => (green_crossed_product(&g)?, None),
                Action::Partial(p) => {
                    let (act, _) = partial_to_exel(&p)?;
                    (quotient_crossed_product(&act)?, Some(act))
                }
            };
            let mut reports = vec![cp.summary("crossed product")];
            if a.rep {
                let act =
                    busby.as_ref().ok_or_else(|| anyhow!("--rep needs a Busby-Smith or twisted partial action"))?;
                reports.extend(covariant_reports(&cp, act)?);
            }
            Ok(Outcome::checked(cp_doc(&cp, a.dump), reports))
        }
        Input::Semigroup(sj) => {
            let t = checked(&sj, o)?;
            let n = load_normal(&t, a.normal.as_deref())?;
            let (q, c) = match section_of(&t, &n, a.section.as_deref()) {
                Ok(qc) => qc,
                Err(e) => match e.downcast::<CoreError>() {
                    Ok(e @ CoreError::NoOrderPreservingSection(_)) => return Ok(refused("xprod", &e)),
                    Ok(e) => return Err(e.into()),
                    Err(e) => return Err(e),
                },
            };
            let act = action_from_cross_section::<F>(&t, &n, &q, &c)?;
            let cp = quotient_crossed_product(&act)?;
            let target = FdStarAlgebra::<F>::from_semigroup_algebra(&t, None)?;
            let map = semigroup_section_map(&t, &n, &q, c.reps(), &cp.l)?;
            let iso = verify_explicit_iso(&map, &cp.l.algebra, &cp.quotient.relations, &target);
            let mut doc = cp_doc(&cp, a.dump);
            doc["dim_target"] = json!(target.dim());
            doc["iso"] = json!(iso.passed());
            doc["section"] = json!(section_to_json(&c));
            let mut reports = vec![cp.summary("crossed product"), iso];
            if a.rep {
                reports.extend(covariant_reports(&cp, &act)?);
            }
            Ok(Outcome::checked(doc, reports))
        }
    }
}

fn iso_passed(r: &Report) -> bool {
    let mut iso = r.clauses.iter().filter(|c| c.name.starts_with("iso.")).peekable();
    iso.peek().is_some() && iso.all(|c| c.passed)
}

fn refused(command: &str, e: &CoreError) -> Outcome {
    let mut r = Report::new("decomposition");
    r.assert("section_available", ClauseKind::Check, false, || e.to_string());
    Outcome::checked(json!({"command": command, "refused": true, "reason": e.to_string()}), vec![r])
}

fn decompose(a: &DecomposeArgs, o: &Opts) -> Result<Outcome> {
    match a.mode {
        Mode::Busby => decompose_busby_cmd(a, o),
        Mode::Green => match o.backend {
            Backend::Exact => decompose_green_cmd::<GaussRat>(a, o),
            Backend::Float => decompose_green_cmd::<C64>(a, o),
        },
    }
}

/// Busby-Smith decompositions enumerate the unitary semigroup, which needs
/// totally ordered scalars, so they always run exactly.
fn decompose_busby_cmd(a: &DecomposeArgs, o: &Opts) -> Result<Outcome> {
    let sub: Vec<usize> = read_json(&a.sub)?;
    let given: Option<SectionJson> = a.section.as_deref().map(read_json).transpose()?;
    let (act, sub, given) = match load_input(&a.input)? {
        Input::Action(j) => match j.decode::<GaussRat>(o.tol, o.max_size)? {
            Action::Busby(act) => (act, sub, given),
            _ => bail!("{} is not a Busby-Smith action", a.input.display()),
        },
        Input::Semigroup(sj) => {
            let t = checked(&sj, o)?;
            let n = load_normal(&t, a.normal.as_deref())?;
            let (q, c) = section_of(&t, &n, None)?;
            let act = action_from_cross_section::<GaussRat>(&t, &n, &q, &c)?;
            let mut projected: Vec<usize> = sub.iter().map(|&x| q.project(x)).collect();
            projected.sort_unstable();
            projected.dedup();
            let given = given.map(|m| m.into_iter().map(|(k, x)| (k, q.project(x))).collect());
            (act, projected, given)
        }
    };
    let l = NormalClifford::new(&act.semigroup, &sub)?;
    let c = match &given {
        Some(m) => Some(section_from_json(&quotient_by(&act.semigroup, &l), m)?),
        None => None,
    };
    let d = match decompose_busby(&act, &l, c.as_ref(), o.max_size) {
        Ok(d) => d,
        Err(e @ (CoreError::NoOrderPreservingSection(_) | CoreError::NotOrderPreserving(_))) => {
            return Ok(refused("decompose", &e));
        }
        Err(e) => return Err(e.into()),
    };
    let doc = json!({
        "mode": "busby",
        "dims": {
            "direct": d.direct.dim(),
            "inner": d.inner.dim(),
            "iterated": d.iterated_product.as_ref().map(|p| p.dim()),
            "iso": iso_passed(&d.report),
        },
        "quotient_size": d.quotient.semigroup.size(),
        "section": section_to_json(&d.section),
    });
    Ok(Outcome::checked(doc, vec![d.report]))
}

fn decompose_green_cmd<F: JsonScalar>(a: &DecomposeArgs, o: &Opts) -> Result<Outcome> {
    let sub: Vec<usize> = read_json(&a.sub)?;
    let g = match load_input(&a.input)? {
        Input::Action(j) => match j.decode::<F>(o.tol, o.max_size)? {
            Action::Green(g) => g,
            _ => bail!("{} is not a Green action", a.input.display()),
        },
        Input::Semigroup(sj) => {
            let t = checked(&sj, o)?;
            let n = load_normal(&t, a.normal.as_deref())?;
            green_canonical::<F>(&t, &n)?
        }
    };
    let k = NormalClifford::new(&g.semigroup, &sub)?;
    let d = decompose_green(&g, &k)?;
    let doc = json!({
        "mode": "green",
        "dims": {
            "direct": d.direct.dim(),
            "inner": d.inner.dim(),
            "iterated": d.iterated_product.as_ref().map(|p| p.dim()),
            "iso": iso_passed(&d.report),
        },
    });
    Ok(Outcome::checked(doc, vec![d.report]))
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, indent + 2, out);
                    }
                    Value::Array(xs) if xs.iter().any(|y| y.is_object()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for y in xs {
                            out.push_str(&format!("{pad}  -\n"));
                            render_text(y, indent + 4, out);
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {x}\n")),
                }
            }
        }
        other => out.push_str(&format!("{pad}{other}\n")),
    }
}

/// The document with reports attached, as written by `--format json`.
pub fn document(outcome: &Outcome) -> Value {
    if outcome.reports.is_empty() {
        return outcome.doc.clone();
    }
    let mut m = match &outcome.doc {
        Value::Object(m) => m.clone(),
        other => {
            let mut m = Map::new();
            m.insert("result".into(), other.clone());
            m
        }
    };
    m.insert("passed".into(), Value::Bool(outcome.passed));
    let reports: Vec<ReportJson> = outcome.reports.iter().map(ReportJson::from_report).collect();
    m.insert("reports".into(), serde_json::to_value(reports).expect("serializable"));
    Value::Object(m)
}

pub fn emit(outcome: &Outcome, o: &Opts) -> Result<()> {
    let text = match o.format {
        OutputFormat::Json => serde_json::to_string_pretty(&document(outcome))? + "\n",
        OutputFormat::Text => {
            let mut s = String::new();
            render_text(&outcome.doc, 0, &mut s);
            for r in &outcome.reports {
                s.push('\n');
                s.push_str(&r.to_string());
            }
            if !outcome.reports.is_empty() {
                s.push_str(if outcome.passed { "\nverdict: PASS\n" } else { "\nverdict: FAIL\n" });
            }
            s
        }
    };
    match &o.output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn emit_error(e: &anyhow::Error, o: &Opts) {
    let parse = e.chain().find_map(|c| c.downcast_ref::<serde_json::Error>());
    match o.format {
        OutputFormat::Json => {
            let mut doc = json!({"error": format!("{e:#}")});
            if let Some(p) = parse.filter(|p| p.line() > 0) {
                doc["line"] = json!(p.line());
                doc["column"] = json!(p.column());
            }
            eprintln!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        OutputFormat::Text => eprintln!("error: {e:#}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_inverse_sizes() {
        let sizes: Vec<usize> = (1..=4).map(symmetric_inverse_size).collect();
        assert_eq!(sizes, vec![2, 7, 34, 209]);
        assert_eq!(symmetric_inverse_size(1000), usize::MAX);
        assert_eq!(symmetric_inverse_size(3), symmetric_inverse_monoid(3).semigroup.size());
    }

    #[test]
    fn text_rendering_nests() {
        let mut s = String::new();
        render_text(&json!({"a": 1, "b": {"c": [1, 2]}, "d": [{"e": true}]}), 0, &mut s);
        assert_eq!(s, "a: 1\nb:\n  c: [1,2]\nd:\n  -\n    e: true\n");
    }

    #[test]
    fn reports_attach_to_documents() {
        let mut r = Report::new("r");
        r.assert("x", ClauseKind::Check, false, || "w".into());
        let out = Outcome::checked(json!({"k": 1}), vec![r]);
        let d = document(&out);
        assert_eq!(d["passed"], json!(false));
        assert_eq!(d["reports"][0]["clauses"][0]["witness"], json!("w"));
        assert_eq!(document(&Outcome::data(json!([1]))), json!([1]));
    }
}
