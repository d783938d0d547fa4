//! Scenario execution and reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use equiloc_core::bundles::{ChernFactor, ChernPolynomial, ChernTerm, EquivariantBundle};
use equiloc_core::localize::{self, LocalizationTable};
use equiloc_core::schubert::{self, Permutation};
use equiloc_core::symalg::{format_rational, rat, DEFAULT_SEED, MAX_RESAMPLES, SAMPLE_RANGE};
use equiloc_core::{
    Character, EquivariantClass, FixedPointSpace, LocalizedClass, MultiPoly, ProjectiveSpaceAction,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CliError;
use crate::scenario::{evaluation_points, BundleKind, ClassSpec, ModeSpec, Scenario, SpaceSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// Extra generic integer points at which the contribution sum is checked
    /// against the result.
    pub check_substitutions: usize,
    pub seed: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            check_substitutions: 0,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contribution {
    pub point: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub mode: String,
    pub space: String,
    /// Present iff every validation passed.
    pub result: Option<String>,
    pub contributions: Vec<Contribution>,
    pub validations: Vec<Validation>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.validations.iter().all(|v| v.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "mode: {}", self.mode);
        let _ = writeln!(out, "space: {}", self.space);
        let _ = writeln!(
            out,
            "result: {}",
            self.result.as_deref().unwrap_or("(none)")
        );
        let _ = writeln!(out, "contributions:");
        for c in &self.contributions {
            let _ = writeln!(out, "  {}: {}", c.point, c.value);
        }
        let _ = writeln!(out, "validations:");
        for v in &self.validations {
            let tag = if v.passed { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "  [{tag}] {}: {}", v.check, v.detail);
        }
        out
    }
}

fn chars(rank: usize, ws: &[Vec<i64>]) -> Result<Vec<Character>, CliError> {
    ws.iter()
        .map(|w| {
            if w.len() != rank {
                return Err(CliError::Validation(format!(
                    "character {w:?} has wrong rank"
                )));
            }
            Ok(Character::new(w.clone()))
        })
        .collect()
}

enum Space {
    Projective(ProjectiveSpaceAction),
    Flag(usize),
}

impl Space {
    fn build(rank: usize, spec: &SpaceSpec) -> Result<Self, CliError> {
        Ok(match spec {
            SpaceSpec::Projective { weights } => {
                Space::Projective(ProjectiveSpaceAction::new(rank, chars(rank, weights)?)?)
            }
            SpaceSpec::Flag { n } => Space::Flag(*n),
        })
    }

    fn fixed_points(&self) -> Result<FixedPointSpace, CliError> {
        Ok(match self {
            Space::Projective(a) => a.fixed_points()?,
            Space::Flag(n) => schubert::flag_fixed_points(*n)?,
        })
    }

    fn projective(&self) -> Result<&ProjectiveSpaceAction, CliError> {
        match self {
            Space::Projective(a) => Ok(a),
            Space::Flag(_) => Err(CliError::Validation("expected a projective space".into())),
        }
    }
}

/// Builds `kind` on `space`, defined at `points`.
fn build_bundle(
    s: &Scenario,
    space: &Space,
    points: &[String],
    kind: &BundleKind,
) -> Result<EquivariantBundle, CliError> {
    let rank = s.torus_rank;
    let ids = points.iter().map(String::as_str);
    Ok(match kind {
        BundleKind::Tangent => {
            EquivariantBundle::tangent(&space.fixed_points()?).restrict_to(ids)?
        }
        BundleKind::Line { degree, weight } => {
            let chi = chars(rank, std::slice::from_ref(weight))?.remove(0);
            EquivariantBundle::line(space.projective()?, *degree, &chi)?.restrict_to(ids)?
        }
        BundleKind::Explicit { weights } => {
            let mut w = BTreeMap::new();
            for id in points {
                let fiber = weights
                    .get(id)
                    .ok_or_else(|| CliError::Validation(format!("no weights at point {id}")))?;
                w.insert(id.clone(), chars(rank, fiber)?);
            }
            let r = w.values().next().map_or(0, Vec::len);
            EquivariantBundle::explicit(r, w)?
        }
        BundleKind::Pullback {
            source_space,
            bundle,
            point_map,
        } => {
            let src_spec = s.auxiliary_spaces.get(source_space).ok_or_else(|| {
                CliError::Validation(format!("unknown source space '{source_space}'"))
            })?;
            let src = Space::build(rank, src_spec)?;
            let mut images: Vec<String> = points
                .iter()
                .map(|p| {
                    point_map
                        .get(p)
                        .cloned()
                        .ok_or_else(|| CliError::Validation(format!("point {p} is not mapped")))
                })
                .collect::<Result<_, _>>()?;
            images.sort();
            images.dedup();
            let inner = bundle.as_deref().unwrap_or(&BundleKind::Tangent);
            let on_src = build_bundle(s, &src, &images, inner)?;
            EquivariantBundle::pullback(ids, point_map, &on_src)?
        }
    })
}

struct Resolved {
    space: Space,
    bundles: Vec<EquivariantBundle>,
    poly: ChernPolynomial,
}

fn resolve(s: &Scenario) -> Result<Resolved, CliError> {
    let space = Space::build(s.torus_rank, &s.space)?;
    let points = evaluation_points(s);
    let mut index = BTreeMap::new();
    let mut bundles = Vec::new();
    for b in &s.bundles {
        index.insert(b.name.as_str(), bundles.len());
        bundles.push(build_bundle(s, &space, &points, &b.kind)?);
    }
    let mut terms = Vec::new();
    for t in &s.polynomial {
        let factors = t
            .factors
            .iter()
            .map(|f| {
                Ok(ChernFactor {
                    bundle: *index.get(f.bundle.as_str()).ok_or_else(|| {
                        CliError::Validation(format!("unknown bundle '{}'", f.bundle))
                    })?,
                    index: f.chern_index,
                    power: f.power,
                })
            })
            .collect::<Result<_, CliError>>()?;
        terms.push(ChernTerm {
            coeff: t.coeff.0.clone(),
            factors,
        });
    }
    let poly = if terms.is_empty() {
        ChernPolynomial::constant(rat(0))
    } else {
        ChernPolynomial::homogeneous(terms)?
    };
    Ok(Resolved {
        space,
        bundles,
        poly,
    })
}

fn build_class(
    action: &ProjectiveSpaceAction,
    class: &ClassSpec,
) -> Result<EquivariantClass, CliError> {
    Ok(match class {
        ClassSpec::Hypersurfaces(hs) => {
            let ds: Vec<(u32, Character)> = hs
                .iter()
                .map(|h| (h.degree, Character::new(h.weight.clone())))
                .collect();
            action.hypersurface_class(&ds)?
        }
        ClassSpec::Terms(ts) => {
            let poly = MultiPoly::from_terms(
                action.class_vars(),
                ts.iter().map(|t| {
                    let mut m = t.t.clone();
                    m.push(t.h);
                    (m, t.coeff.0.clone())
                }),
            );
            EquivariantClass::new(action, poly)?
        }
    })
}

fn ok(check: &str, detail: impl Into<String>) -> Validation {
    Validation {
        check: check.to_string(),
        passed: true,
        detail: detail.into(),
    }
}

/// Compares the total against the sum of contributions at generic integer
/// points.
fn substitution_checks(
    parts: &[(String, LocalizedClass)],
    total: &LocalizedClass,
    rank: usize,
    opts: &RunOptions,
) -> Vec<Validation> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();
    for k in 0..opts.check_substitutions {
        let mut found = None;
        for _ in 0..=MAX_RESAMPLES {
            let pt: Vec<i64> = (0..rank)
                .map(|_| rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE))
                .collect();
            let vals: Option<Vec<_>> = parts.iter().map(|(_, v)| v.evaluate(&pt)).collect();
            if let (Some(vals), Some(t)) = (vals, total.evaluate(&pt)) {
                found = Some((pt, vals.into_iter().fold(rat(0), |a, b| a + b), t));
                break;
            }
        }
        let check = format!("substitution {}", k + 1);
        out.push(match found {
            Some((pt, sum, t)) => Validation {
                check,
                passed: sum == t,
                detail: format!(
                    "t = {pt:?}: sum of contributions {} vs total {}",
                    format_rational(&sum),
                    format_rational(&t)
                ),
            },
            None => Validation {
                check,
                passed: false,
                detail: format!(
                    "no point avoiding the denominators in {} tries",
                    MAX_RESAMPLES + 1
                ),
            },
        });
    }
    out
}

fn contributions(parts: &[(String, LocalizedClass)]) -> Vec<Contribution> {
    parts
        .iter()
        .map(|(p, v)| Contribution {
            point: p.clone(),
            value: v.to_string(),
        })
        .collect()
}

fn finish(
    s: &Scenario,
    parts: &[(String, LocalizedClass)],
    total: &LocalizedClass,
    result: String,
    mut validations: Vec<Validation>,
    opts: &RunOptions,
) -> RunReport {
    validations.extend(substitution_checks(parts, total, s.torus_rank, opts));
    let passed = validations.iter().all(|v| v.passed);
    RunReport {
        mode: s.mode.name().to_string(),
        space: s.space.to_string(),
        result: passed.then_some(result),
        contributions: contributions(parts),
        validations,
    }
}

fn table_total(t: &LocalizationTable) -> Result<LocalizedClass, CliError> {
    Ok(LocalizedClass::try_sum(t.entries().iter().map(|(_, v)| v))?)
}

/// Runs a validated scenario.
pub fn run_scenario(s: &Scenario, opts: &RunOptions) -> Result<RunReport, CliError> {
    crate::scenario::validate(s)?;
    let r = resolve(s)?;
    let constancy = |v: &equiloc_core::Rational| {
        ok(
            "constancy",
            format!(
                "numerator is exactly {} times the denominator; 2 random substitutions agree",
                format_rational(v)
            ),
        )
    };
    match &s.mode {
        ModeSpec::Smooth => {
            let space = r.space.fixed_points()?;
            let res = localize::bott_residue_detailed(&space, &r.bundles, &r.poly)?;
            let v = vec![
                ok(
                    "degree",
                    format!("weighted degree {} = dim {}", r.poly.degree(), space.dim()),
                ),
                constancy(&res.value),
            ];
            Ok(finish(
                s,
                &res.contributions,
                &res.total,
                format_rational(&res.value),
                v,
                opts,
            ))
        }
        ModeSpec::Singular { class, on_x, dim_x } => {
            let action = r.space.projective()?;
            let gamma = build_class(action, class)?;
            let idx: Vec<usize> = on_x
                .iter()
                .map(|id| action.point_index(id))
                .collect::<Result<_, _>>()?;
            let res = localize::singular_residue_detailed(
                action, &gamma, &idx, &r.bundles, &r.poly, *dim_x,
            )?;
            let mut v = vec![
                ok(
                    "degree",
                    format!("weighted degree {} = dim X {}", r.poly.degree(), dim_x),
                ),
                ok(
                    "class degree",
                    format!(
                        "pushed-forward class {} has codimension {}",
                        gamma,
                        action.dim() - dim_x
                    ),
                ),
            ];
            for rec in &res.vanishing {
                v.push(ok(
                    "vanishing",
                    format!(
                        "restriction at {} outside X is {} (necessary condition)",
                        rec.point, rec.restriction
                    ),
                ));
            }
            v.push(constancy(&res.residue.value));
            Ok(finish(
                s,
                &res.residue.contributions,
                &res.residue.total,
                format_rational(&res.residue.value),
                v,
                opts,
            ))
        }
        ModeSpec::Localize { class } => {
            let action = r.space.projective()?;
            let alpha = build_class(action, class)?;
            let table = localize::localize_class(action, &alpha)?;
            let check = localize::verify_localization(action, &alpha, &table)?;
            let total = table_total(&table)?;
            let v = vec![Validation {
                check: "reconstruction".into(),
                passed: check.passed,
                detail: if check.passed {
                    format!("sum of table entries times point classes equals {alpha}")
                } else {
                    format!("residual {}", check.residual)
                },
            }];
            Ok(finish(
                s,
                table.entries(),
                &total,
                total.to_string(),
                v,
                opts,
            ))
        }
        ModeSpec::Schubert { n, v } => {
            let perm = Permutation::parse(v)?;
            let conv = schubert::calibrated()?;
            let table = schubert::schubert_localize(*n, &perm)?;
            let total = table_total(&table)?;
            let support = table.entries().iter().filter(|(_, b)| !b.is_zero()).count();
            let vs = vec![
                ok("calibration", format!("{conv}")),
                ok(
                    "support",
                    format!("{support} nonzero entries, all at points u <= {perm}"),
                ),
            ];
            Ok(finish(
                s,
                table.entries(),
                &total,
                total.to_string(),
                vs,
                opts,
            ))
        }
    }
}

/// Parses, validates and runs a scenario document.
pub fn run_text(text: &str, opts: &RunOptions) -> Result<RunReport, CliError> {
    let s = crate::scenario::parse_scenario(text)?;
    run_scenario(&s, opts)
}
