//! Scenario documents.
//!
//! A scenario is a JSON object:
//!
//! ```text
//! scenario   := { "torus_rank": int, "space": space,
//!                 "auxiliary_spaces"?: { name: space, ... },
//!                 "bundles"?: [ { "name": str, "kind": bundle }, ... ],
//!                 "polynomial"?: [ term, ... ],
//!                 "mode": mode, "description"?: str }
//! space      := { "projective": { "weights": [[int, ...], ...] } }
//!             | { "flag": { "n": int } }
//! bundle     := "tangent"
//!             | { "line": { "degree": int, "weight": [int, ...] } }
//!             | { "pullback": { "source_space": name, "bundle"?: bundle,
//!                               "point_map": { id: id, ... } } }
//!             | { "explicit": { "weights": { id: [[int, ...], ...], ... } } }
//! term       := { "coeff": rational, "factors": [ { "bundle": name,
//!                 "chern_index": int, "power"?: int }, ... ] }
//! mode       := "smooth"
//!             | { "singular": { "class": class, "on_x": [id, ...], "dim_x": int } }
//!             | { "localize": { "class": class } }
//!             | { "schubert": { "n": int, "v": perm } }
//! class      := { "hypersurfaces": [ { "degree": int, "weight": [int, ...] }, ... ] }
//!             | { "terms": [ { "coeff": rational, "h": int, "t": [int, ...] }, ... ] }
//! rational   := "p" | "p/q"
//! ```
//!
//! Projective fixed points are `p0..pn` in weight order and flag fixed points
//! are permutations in one-line notation. A pullback with no `bundle` pulls
//! back the source's tangent bundle. In singular mode every bundle is taken
//! at the points of `on_x`; `tangent` there means the ambient tangent bundle.
//!
//! Symbolic weight parameters are encoded by extra torus coordinates: the
//! cone over a conic with weights `(1, -1, 0, a)` becomes the rank-2 action
//! `(1,0), (-1,0), (0,0), (0,1)` with `t -> t1` and `a t -> t2`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use equiloc_core::symalg::{format_rational, parse_rational};
use equiloc_core::{Character, ProjectiveSpaceAction, Rational};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{describe, CliError};

/// An exact rational written as a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exact(pub Rational);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map(Exact).ok_or_else(|| {
            serde::de::Error::custom(format!(
                "invalid rational \"{s}\", expected \"p\" or \"p/q\""
            ))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub torus_rank: usize,
    pub space: SpaceSpec,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub auxiliary_spaces: BTreeMap<String, SpaceSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bundles: Vec<BundleSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub polynomial: Vec<TermSpec>,
    pub mode: ModeSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum SpaceSpec {
    Projective { weights: Vec<Vec<i64>> },
    Flag { n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleSpec {
    pub name: String,
    pub kind: BundleKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum BundleKind {
    Tangent,
    Line {
        degree: i64,
        weight: Vec<i64>,
    },
    Pullback {
        source_space: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bundle: Option<Box<BundleKind>>,
        point_map: BTreeMap<String, String>,
    },
    Explicit {
        weights: BTreeMap<String, Vec<Vec<i64>>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub coeff: Exact,
    pub factors: Vec<FactorSpec>,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorSpec {
    pub bundle: String,
    pub chern_index: usize,
    #[serde(default = "one")]
    pub power: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ModeSpec {
    Smooth,
    Singular {
        class: ClassSpec,
        on_x: Vec<String>,
        dim_x: usize,
    },
    Localize {
        class: ClassSpec,
    },
    Schubert {
        n: usize,
        v: String,
    },
}

impl ModeSpec {
    pub fn name(&self) -> &'static str {
        match self {
            ModeSpec::Smooth => "smooth",
            ModeSpec::Singular { .. } => "singular",
            ModeSpec::Localize { .. } => "localize",
            ModeSpec::Schubert { .. } => "schubert",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ClassSpec {
    Hypersurfaces(Vec<HypersurfaceSpec>),
    Terms(Vec<ClassTerm>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypersurfaceSpec {
    pub degree: u32,
    pub weight: Vec<i64>,
}

/// `coeff * h^h * t1^t[0] * ... * tr^t[r-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassTerm {
    pub coeff: Exact,
    pub h: u32,
    pub t: Vec<u32>,
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceSpec::Projective { weights } => {
                let w: Vec<String> = weights
                    .iter()
                    .map(|c| Character::new(c.clone()).to_string())
                    .collect();
                write!(
                    f,
                    "P^{} with weights [{}]",
                    weights.len().saturating_sub(1),
                    w.join(", ")
                )
            }
            SpaceSpec::Flag { n } => write!(f, "Fl_{n}"),
        }
    }
}

/// Parses a scenario document; syntax and schema errors carry line and
/// column.
pub fn parse_scenario(text: &str) -> Result<Scenario, CliError> {
    let s: Scenario = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    validate(&s)?;
    Ok(s)
}

pub fn to_json(s: &Scenario) -> String {
    serde_json::to_string_pretty(s).expect("scenarios serialize")
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

fn check_char(rank: usize, c: &[i64], what: &str) -> Result<(), CliError> {
    if c.len() != rank {
        return Err(invalid(format!(
            "{what}: character {c:?} has {} entries, torus_rank is {rank}",
            c.len()
        )));
    }
    Ok(())
}

impl SpaceSpec {
    pub fn point_ids(&self) -> Vec<String> {
        match self {
            SpaceSpec::Projective { weights } => (0..weights.len())
                .map(ProjectiveSpaceAction::point_id)
                .collect(),
            SpaceSpec::Flag { n } => equiloc_core::schubert::Permutation::all(*n)
                .iter()
                .map(|w| w.to_string())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            SpaceSpec::Projective { weights } => weights.len().saturating_sub(1),
            SpaceSpec::Flag { n } => n * n.saturating_sub(1) / 2,
        }
    }

    fn validate(&self, rank: usize, what: &str) -> Result<(), CliError> {
        match self {
            SpaceSpec::Projective { weights } => {
                if weights.len() < 2 {
                    return Err(invalid(format!(
                        "{what}: projective space needs at least two weights"
                    )));
                }
                for w in weights {
                    check_char(rank, w, what)?;
                }
                let chars: Vec<Character> =
                    weights.iter().map(|w| Character::new(w.clone())).collect();
                ProjectiveSpaceAction::new(rank, chars)
                    .and_then(|a| a.check_distinct())
                    .map_err(|e| invalid(format!("{what}: {}", describe(&e))))
            }
            SpaceSpec::Flag { n } => {
                if *n < 2 {
                    return Err(invalid(format!("{what}: flag variety needs n >= 2")));
                }
                if *n > 6 {
                    return Err(invalid(format!(
                        "{what}: flag variety with n = {n} is too large (n <= 6)"
                    )));
                }
                if *n != rank {
                    return Err(invalid(format!(
                        "{what}: Fl_{n} needs torus_rank {n}, got {rank}"
                    )));
                }
                Ok(())
            }
        }
    }
}

fn validate_class(rank: usize, class: &ClassSpec) -> Result<(), CliError> {
    match class {
        ClassSpec::Hypersurfaces(hs) => {
            for h in hs {
                check_char(rank, &h.weight, "class")?;
            }
        }
        ClassSpec::Terms(ts) => {
            for t in ts {
                if t.t.len() != rank {
                    return Err(invalid(format!(
                        "class term exponent vector {:?} needs {rank} entries",
                        t.t
                    )));
                }
            }
        }
    }
    Ok(())
}

fn validate_bundle(
    s: &Scenario,
    space: &SpaceSpec,
    needed: &[String],
    kind: &BundleKind,
    what: &str,
) -> Result<usize, CliError> {
    let rank = s.torus_rank;
    match kind {
        BundleKind::Tangent => Ok(space.dim()),
        BundleKind::Line { weight, .. } => {
            check_char(rank, weight, what)?;
            if !matches!(space, SpaceSpec::Projective { .. }) {
                return Err(invalid(format!(
                    "{what}: line bundles are defined on projective spaces only"
                )));
            }
            Ok(1)
        }
        BundleKind::Explicit { weights } => {
            let mut r = None;
            for id in needed {
                let w = weights
                    .get(id)
                    .ok_or_else(|| invalid(format!("{what}: no weights at point {id}")))?;
                for c in w {
                    check_char(rank, c, what)?;
                }
                if *r.get_or_insert(w.len()) != w.len() {
                    return Err(invalid(format!("{what}: fibers of different ranks")));
                }
            }
            Ok(r.unwrap_or(0))
        }
        BundleKind::Pullback {
            source_space,
            bundle,
            point_map,
        } => {
            let src = s
                .auxiliary_spaces
                .get(source_space)
                .ok_or_else(|| invalid(format!("{what}: unknown source space '{source_space}'")))?;
            let src_ids: BTreeSet<String> = src.point_ids().into_iter().collect();
            let mut images = Vec::new();
            for id in needed {
                let y = point_map
                    .get(id)
                    .ok_or_else(|| invalid(format!("{what}: point {id} is not mapped")))?;
                if !src_ids.contains(y) {
                    return Err(invalid(format!(
                        "{what}: {y} is not a point of '{source_space}'"
                    )));
                }
                images.push(y.clone());
            }
            let inner = bundle.as_deref().unwrap_or(&BundleKind::Tangent);
            validate_bundle(s, src, &images, inner, what)
        }
    }
}

/// Points at which bundles must be defined for this scenario.
pub fn evaluation_points(s: &Scenario) -> Vec<String> {
    match &s.mode {
        ModeSpec::Singular { on_x, .. } => on_x.clone(),
        _ => s.space.point_ids(),
    }
}

/// Semantic checks; all failures map to exit code 1.
pub fn validate(s: &Scenario) -> Result<(), CliError> {
    let rank = s.torus_rank;
    if rank == 0 {
        return Err(invalid("torus_rank must be positive"));
    }
    s.space.validate(rank, "space")?;
    for (name, sp) in &s.auxiliary_spaces {
        sp.validate(rank, &format!("auxiliary space '{name}'"))?;
    }

    let ids: BTreeSet<String> = s.space.point_ids().into_iter().collect();
    let needed = match &s.mode {
        ModeSpec::Singular { class, on_x, dim_x } => {
            if !matches!(s.space, SpaceSpec::Projective { .. }) {
                return Err(invalid("singular mode needs a projective ambient space"));
            }
            validate_class(rank, class)?;
            let mut seen = BTreeSet::new();
            for id in on_x {
                if !ids.contains(id) {
                    return Err(invalid(format!("on_x: unknown point {id}")));
                }
                if !seen.insert(id) {
                    return Err(invalid(format!("on_x: point {id} listed twice")));
                }
            }
            if on_x.is_empty() {
                return Err(invalid("on_x is empty"));
            }
            if *dim_x > s.space.dim() {
                return Err(invalid(format!(
                    "dim_x = {dim_x} exceeds the ambient dimension"
                )));
            }
            on_x.clone()
        }
        ModeSpec::Localize { class } => {
            if !matches!(s.space, SpaceSpec::Projective { .. }) {
                return Err(invalid("localize mode needs a projective space"));
            }
            validate_class(rank, class)?;
            s.space.point_ids()
        }
        ModeSpec::Schubert { n, v } => {
            if s.space != (SpaceSpec::Flag { n: *n }) {
                return Err(invalid(format!(
                    "schubert mode needs space {{\"flag\": {{\"n\": {n}}}}}"
                )));
            }
            let p =
                equiloc_core::schubert::Permutation::parse(v).map_err(|e| invalid(describe(&e)))?;
            if p.size() != *n {
                return Err(invalid(format!("{v} is not a permutation of 1..{n}")));
            }
            s.space.point_ids()
        }
        ModeSpec::Smooth => s.space.point_ids(),
    };

    let mut ranks = BTreeMap::new();
    for b in &s.bundles {
        let what = format!("bundle '{}'", b.name);
        let r = validate_bundle(s, &s.space, &needed, &b.kind, &what)?;
        if ranks.insert(b.name.clone(), r).is_some() {
            return Err(invalid(format!("duplicate bundle name '{}'", b.name)));
        }
    }

    let mut degree = None;
    for (k, t) in s.polynomial.iter().enumerate() {
        let mut d = 0;
        for f in &t.factors {
            let r = ranks.get(&f.bundle).ok_or_else(|| {
                invalid(format!(
                    "polynomial term {k}: unknown bundle '{}'",
                    f.bundle
                ))
            })?;
            if f.chern_index > *r {
                return Err(invalid(format!(
                    "polynomial term {k}: c_{} of '{}' exceeds its rank {r}",
                    f.chern_index, f.bundle
                )));
            }
            d += f.chern_index * f.power as usize;
        }
        if *degree.get_or_insert(d) != d {
            return Err(invalid(format!(
                "polynomial term {k} has weighted degree {d}, not homogeneous"
            )));
        }
    }
    let required = match &s.mode {
        ModeSpec::Smooth => Some(s.space.dim()),
        ModeSpec::Singular { dim_x, .. } => Some(*dim_x),
        _ => None,
    };
    if let Some(req) = required {
        match degree {
            None => {
                return Err(invalid(format!(
                    "{} mode needs a polynomial",
                    s.mode.name()
                )))
            }
            Some(d) if d != req => {
                return Err(invalid(describe(&equiloc_core::Error::DegreeMismatch(
                    format!("polynomial has weighted degree {d}, expected {req}"),
                ))))
            }
            _ => {}
        }
    }
    Ok(())
}
