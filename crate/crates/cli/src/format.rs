//! JSON schemas for semigroups, subsets, sections, algebras, actions and
//! reports, with conversions to and from the core types.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, ensure, Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use twistcross_core::actions::{BusbySmithAction, GreenAction, TwistedPartialAction};
use twistcross_core::algebra::{AlgebraElement, BasisIdeal, FdStarAlgebra, PartialStarAutomorphism, Sparse};
use twistcross_core::congruence::{NormalClifford, Quotient};
use twistcross_core::cross_section::CrossSection;
use twistcross_core::linalg::Matrix;
use twistcross_core::partial_bijection::PartialBijection;
use twistcross_core::report::Report;
#[cfg(test)]
use twistcross_core::report::{Clause, ClauseKind};
use twistcross_core::semigroup::{from_partial_bijections, FiniteInverseSemigroup, Group};
use twistcross_core::{GaussRat, Scalar, C64};

/// One part of a complex scalar: a JSON number, or a string `p/q`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(untagged)]
pub enum Part {
    Num(f64),
    Text(String),
}

/// `[re, im]`.
pub type Cx = [Part; 2];

/// Scalars with a JSON form.
pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Cx;
    fn from_json(c: &Cx) -> Result<Self>;
}

fn part_f64(p: &Part) -> Result<f64> {
    match p {
        Part::Num(x) => Ok(*x),
        Part::Text(t) => match t.split_once('/') {
            Some((n, d)) => Ok(n.trim().parse::<f64>()? / d.trim().parse::<f64>()?),
            None => Ok(t.trim().parse()?),
        },
    }
}

impl JsonScalar for C64 {
    fn to_json(&self) -> Cx {
        [Part::Num(self.re), Part::Num(self.im)]
    }

    fn from_json(c: &Cx) -> Result<Self> {
        C64::from_parts(part_f64(&c[0])?, part_f64(&c[1])?).ok_or_else(|| anyhow!("non-finite scalar"))
    }
}

impl JsonScalar for GaussRat {
    fn to_json(&self) -> Cx {
        self.part_strings().map(|s| match s.parse::<i32>() {
            Ok(n) => Part::Num(n as f64),
            Err(_) => Part::Text(s),
        })
    }

    fn from_json(c: &Cx) -> Result<Self> {
        let part = |p: &Part| -> Result<GaussRat> {
            match p {
                Part::Num(x) => GaussRat::from_parts(*x, 0.0).ok_or_else(|| anyhow!("non-finite scalar")),
                Part::Text(t) => GaussRat::parse_parts(t, "0").ok_or_else(|| anyhow!("bad rational {t:?}")),
            }
        };
        Ok(GaussRat::gaussian(part(&c[0])?, part(&c[1])?))
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(untagged)]
pub enum Generator {
    Image(Vec<u32>),
    Tuple(String),
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SemigroupJson {
    Cayley {
        size: usize,
        product: Vec<Vec<usize>>,
        star: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        unit: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    PartialBijections {
        degree: usize,
        generators: Vec<Generator>,
    },
}

impl SemigroupJson {
    pub fn from_semigroup(s: &FiniteInverseSemigroup) -> Self {
        SemigroupJson::Cayley {
            size: s.size(),
            product: s.product_table(),
            star: s.star_table().to_vec(),
            unit: s.unit(),
            labels: s.labels().map(|l| l.to_vec()),
        }
    }

    /// Builds the table, enumerating the closure for generator input.
    pub fn to_semigroup(&self, cap: usize) -> Result<FiniteInverseSemigroup> {
        match self {
            SemigroupJson::Cayley { size, product, star, unit, labels } => {
                ensure!(product.len() == *size, "size {size} but {} product rows", product.len());
                let mut s = FiniteInverseSemigroup::from_tables(product.clone(), star.clone())?;
                if let Some(l) = labels {
                    s = s.with_labels(l.clone())?;
                }
                if unit.is_some() && *unit != s.unit() {
                    bail!("declared unit {:?} is not the unit {:?} of the table", unit, s.unit());
                }
                Ok(s)
            }
            SemigroupJson::PartialBijections { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|g| {
                        let p = match g {
                            Generator::Image(v) => PartialBijection::new(v.clone())?,
                            Generator::Tuple(t) => t.parse()?,
                        };
                        ensure!(p.degree() == *degree, "generator {p} has degree {}, expected {degree}", p.degree());
                        Ok(p)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(from_partial_bijections(&gens, cap)?.semigroup)
            }
        }
    }
}

pub fn group_from_json(g: &SemigroupJson, cap: usize) -> Result<Group> {
    Ok(Group::new(g.to_semigroup(cap)?)?)
}

/// A normal Clifford subsemigroup given as an index array.
pub fn normal_from_json(s: &FiniteInverseSemigroup, subset: &[usize]) -> Result<NormalClifford> {
    Ok(NormalClifford::new(s, subset)?)
}

/// A section as a map from class index to element index.
pub type SectionJson = BTreeMap<usize, usize>;

pub fn section_to_json(c: &CrossSection) -> SectionJson {
    c.reps().iter().copied().enumerate().collect()
}

pub fn section_from_json(q: &Quotient, m: &SectionJson) -> Result<CrossSection> {
    let k = q.semigroup.size();
    let mut reps = vec![usize::MAX; k];
    for (&class, &x) in m {
        ensure!(class < k, "class {class} out of range (quotient has {k} classes)");
        reps[class] = x;
    }
    if let Some(missing) = reps.iter().position(|&r| r == usize::MAX) {
        bail!("no representative for class {missing}");
    }
    Ok(CrossSection::new(q, reps)?)
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct AlgebraJson {
    pub labels: Vec<String>,
    /// `[i, j, k, c]`: `b_i b_j` has coefficient `c` on `b_k`.
    pub structure: Vec<(usize, usize, usize, Cx)>,
    /// `[i, k, c]`: `b_i*` has coefficient `c` on `b_k`.
    pub star: Vec<(usize, usize, Cx)>,
}

impl AlgebraJson {
    pub fn from_algebra<F: JsonScalar>(a: &FdStarAlgebra<F>) -> Self {
        let d = a.dim();
        let mut structure = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in a.basis_product(i, j) {
                    structure.push((i, j, *k, c.to_json()));
                }
            }
        }
        let star = (0..d).flat_map(|i| a.basis_star(i).iter().map(move |(k, c)| (i, *k, c.to_json()))).collect();
        AlgebraJson { labels: a.labels().to_vec(), structure, star }
    }

    pub fn to_algebra<F: JsonScalar>(&self, tol: f64) -> Result<FdStarAlgebra<F>> {
        let d = self.labels.len();
        let mut table: Vec<Sparse<F>> = vec![Vec::new(); d * d];
        for (i, j, k, c) in &self.structure {
            ensure!(*i < d && *j < d && *k < d, "structure entry ({i}, {j}, {k}) out of range");
            table[i * d + j].push((*k, F::from_json(c)?));
        }
        let mut stars: Vec<Sparse<F>> = vec![Vec::new(); d];
        for (i, k, c) in &self.star {
            ensure!(*i < d && *k < d, "star entry ({i}, {k}) out of range");
            stars[*i].push((*k, F::from_json(c)?));
        }
        Ok(FdStarAlgebra::new(self.labels.clone(), table, stars, tol)?)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct MapJson {
    pub domain: Vec<usize>,
    pub range: Vec<usize>,
    /// Row-major, `range.len()` rows by `domain.len()` columns.
    pub matrix: Vec<Vec<Cx>>,
}

impl MapJson {
    pub fn from_map<F: JsonScalar>(m: &PartialStarAutomorphism<F>) -> Self {
        let mat = m.matrix();
        MapJson {
            domain: m.domain().indices().to_vec(),
            range: m.range().indices().to_vec(),
            matrix: (0..mat.rows()).map(|i| mat.row(i).iter().map(JsonScalar::to_json).collect()).collect(),
        }
    }

    pub fn to_map<F: JsonScalar>(&self) -> Result<PartialStarAutomorphism<F>> {
        let rows = self
            .matrix
            .iter()
            .map(|r| r.iter().map(F::from_json).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        ensure!(rows.len() == self.range.len(), "matrix has {} rows, range has {}", rows.len(), self.range.len());
        ensure!(
            rows.iter().all(|r| r.len() == self.domain.len()),
            "matrix rows must have {} entries",
            self.domain.len()
        );
        let m = if rows.is_empty() { Matrix::zeros(0, self.domain.len()) } else { Matrix::from_rows(rows) };
        Ok(PartialStarAutomorphism::new(BasisIdeal::new(self.domain.clone()), BasisIdeal::new(self.range.clone()), m)?)
    }
}

pub fn element_to_json<F: JsonScalar>(x: &AlgebraElement<F>) -> Vec<Cx> {
    x.coeffs().iter().map(JsonScalar::to_json).collect()
}

pub fn element_from_json<F: JsonScalar>(v: &[Cx], dim: usize) -> Result<AlgebraElement<F>> {
    ensure!(v.len() == dim, "coefficient vector of length {}, expected {dim}", v.len());
    Ok(AlgebraElement::new(v.iter().map(F::from_json).collect::<Result<Vec<_>>>()?))
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ActionJson {
    BusbySmith {
        semigroup: SemigroupJson,
        algebra: AlgebraJson,
        ideals: Vec<Vec<usize>>,
        maps: Vec<MapJson>,
        /// `w_{r,s}` at position `r·|S| + s`.
        cocycle: Vec<Vec<Cx>>,
    },
    Green {
        semigroup: SemigroupJson,
        algebra: AlgebraJson,
        normal: Vec<usize>,
        ideals: Vec<Vec<usize>>,
        maps: Vec<MapJson>,
        twist: Vec<Option<Vec<Cx>>>,
    },
    TwistedPartial {
        group: SemigroupJson,
        algebra: AlgebraJson,
        ideals: Vec<Vec<usize>>,
        maps: Vec<MapJson>,
        cocycle: Vec<Vec<Cx>>,
    },
}

/// A decoded action bundle.
pub enum Action<F> {
    Busby(BusbySmithAction<F>),
    Green(GreenAction<F>),
    Partial(TwistedPartialAction<F>),
}

fn ideals_from(v: &[Vec<usize>]) -> Vec<BasisIdeal> {
    v.iter().map(|i| BasisIdeal::new(i.clone())).collect()
}

fn ideals_to(v: &[BasisIdeal]) -> Vec<Vec<usize>> {
    v.iter().map(|i| i.indices().to_vec()).collect()
}

fn maps_from<F: JsonScalar>(v: &[MapJson]) -> Result<Vec<PartialStarAutomorphism<F>>> {
    v.iter().enumerate().map(|(i, m)| m.to_map().with_context(|| format!("map {i}"))).collect()
}

fn elements_from<F: JsonScalar>(v: &[Vec<Cx>], dim: usize) -> Result<Vec<AlgebraElement<F>>> {
    v.iter().map(|x| element_from_json(x, dim)).collect()
}

impl ActionJson {
    pub fn from_busby<F: JsonScalar>(a: &BusbySmithAction<F>) -> Self {
        ActionJson::BusbySmith {
            semigroup: SemigroupJson::from_semigroup(&a.semigroup),
            algebra: AlgebraJson::from_algebra(&a.algebra),
            ideals: ideals_to(&a.ideals),
            maps: a.beta.iter().map(MapJson::from_map).collect(),
            cocycle: a.w.iter().map(element_to_json).collect(),
        }
    }

    pub fn from_green<F: JsonScalar>(a: &GreenAction<F>) -> Self {
        ActionJson::Green {
            semigroup: SemigroupJson::from_semigroup(&a.semigroup),
            algebra: AlgebraJson::from_algebra(&a.algebra),
            normal: a.normal.elements().to_vec(),
            ideals: ideals_to(&a.ideals),
            maps: a.gamma.iter().map(MapJson::from_map).collect(),
            twist: a.tau.iter().map(|t| t.as_ref().map(element_to_json)).collect(),
        }
    }

    pub fn from_partial<F: JsonScalar>(a: &TwistedPartialAction<F>) -> Self {
        ActionJson::TwistedPartial {
            group: SemigroupJson::from_semigroup(a.group.semigroup()),
            algebra: AlgebraJson::from_algebra(&a.algebra),
            ideals: ideals_to(&a.ideals),
            maps: a.alpha.iter().map(MapJson::from_map).collect(),
            cocycle: a.u.iter().map(element_to_json).collect(),
        }
    }

    pub fn decode<F: JsonScalar>(&self, tol: f64, cap: usize) -> Result<Action<F>> {
        Ok(match self {
            ActionJson::BusbySmith { semigroup, algebra, ideals, maps, cocycle } => {
                let alg = algebra.to_algebra::<F>(tol)?;
                let d = alg.dim();
                Action::Busby(BusbySmithAction::new(
                    alg,
                    semigroup.to_semigroup(cap)?,
                    ideals_from(ideals),
                    maps_from(maps)?,
                    elements_from(cocycle, d)?,
                )?)
            }
            ActionJson::Green { semigroup, algebra, normal, ideals, maps, twist } => {
                let alg = algebra.to_algebra::<F>(tol)?;
                let d = alg.dim();
                let s = semigroup.to_semigroup(cap)?;
                let normal = normal_from_json(&s, normal)?;
                ensure!(twist.len() == s.size(), "one twist entry per element expected");
                let tau = twist
                    .iter()
                    .map(|t| t.as_ref().map(|x| element_from_json(x, d)).transpose())
                    .collect::<Result<Vec<_>>>()?;
                ensure!(
                    ideals.len() == s.size() && maps.len() == s.size(),
                    "one ideal and one map per element expected"
                );
                Action::Green(GreenAction {
                    algebra: alg,
                    semigroup: s,
                    normal,
                    ideals: ideals_from(ideals),
                    gamma: maps_from(maps)?,
                    tau,
                })
            }
            ActionJson::TwistedPartial { group, algebra, ideals, maps, cocycle } => {
                let alg = algebra.to_algebra::<F>(tol)?;
                let d = alg.dim();
                let g = group_from_json(group, cap)?;
                let n = g.order();
                ensure!(
                    ideals.len() == n && maps.len() == n && cocycle.len() == n * n,
                    "partial action data does not match a group of order {n}"
                );
                Action::Partial(TwistedPartialAction {
                    algebra: alg,
                    group: g,
                    ideals: ideals_from(ideals),
                    alpha: maps_from(maps)?,
                    u: elements_from(cocycle, d)?,
                })
            }
        })
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ClauseJson {
    pub name: String,
    pub kind: String,
    pub passed: bool,
    pub checked: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ReportJson {
    pub title: String,
    pub passed: bool,
    pub clauses: Vec<ClauseJson>,
    pub values: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn typed(v: &str) -> Value {
    if let Ok(n) = v.parse::<i64>() {
        return Value::from(n);
    }
    match v {
        "true" => Value::Bool(true),
        "false" => Value::Bool(false),
        _ => Value::String(v.to_string()),
    }
}

#[cfg(test)]
fn untyped(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl ReportJson {
    pub fn from_report(r: &Report) -> Self {
        ReportJson {
            title: r.title.clone(),
            passed: r.passed(),
            clauses: r
                .clauses
                .iter()
                .map(|c| ClauseJson {
                    name: c.name.clone(),
                    kind: c.kind.as_str().to_string(),
                    passed: c.passed,
                    checked: c.checked,
                    witness: c.witness.clone(),
                })
                .collect(),
            values: r.values.iter().map(|(k, v)| (k.clone(), typed(v))).collect(),
            notes: r.notes.clone(),
        }
    }

    /// Values come back in key order.
    #[cfg(test)]
    pub fn to_report(&self) -> Result<Report> {
        let mut r = Report::new(&self.title);
        for c in &self.clauses {
            let kind = match c.kind.as_str() {
                "axiom" => ClauseKind::Axiom,
                "derived" => ClauseKind::Derived,
                "check" => ClauseKind::Check,
                other => bail!("unknown clause kind {other:?}"),
            };
            r.push(Clause {
                name: c.name.clone(),
                kind,
                passed: c.passed,
                checked: c.checked,
                witness: c.witness.clone(),
            });
        }
        for (k, v) in &self.values {
            r.value(k, untyped(v));
        }
        for n in &self.notes {
            r.note(n.clone());
        }
        Ok(r)
    }
}
