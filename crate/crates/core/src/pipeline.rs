//! End-to-end driver: choose a frame, project, parametrize the plane curve,
//! lift, then check and measure the result. Produces one JSON document.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;

use crate::assumptions::{check_general_assumptions_frame, check_projected_hypotheses, AssumptionReport, ProjectedReport};
use crate::curve::{PlaneCurve, SpaceCurve};
use crate::error::{Error, Result};
use crate::io::read_curve;
use crate::lift::{assemble, lift, lift_checks, LiftMode, RationalParam3, RootTarget, LiftChecks};
use crate::plane_param::{
    load_oracle_param, parametrize_baseline, BaselineConfig, NegativeReason, OracleParam, PlaneOutcome, PlaneParam,
    Provenance,
};
use crate::poly::rat::{parse_rat, to_f64};
use crate::poly::{MPoly, Rat, UPoly};
use crate::projection::{candidate_frames, project_affine_frame, Axis, ProjectionFrame};
use crate::verify::{
    asymptotes_implicit, asymptotes_parametric, pair_asymptotes, sampled_hausdorff, Asymptote, DistanceReport,
    HausdorffConfig,
};

/// Which projection to use; `Auto` tries `z`, `y`, `x`, then a rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxisChoice {
    Auto,
    Fixed(Axis),
}

impl std::str::FromStr for AxisChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(AxisChoice::Auto),
            other => Axis::parse(other).map(AxisChoice::Fixed).ok_or_else(|| Error::Config(format!("unknown axis `{other}`"))),
        }
    }
}

impl std::fmt::Display for AxisChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxisChoice::Auto => write!(f, "auto"),
            AxisChoice::Fixed(a) => write!(f, "{a}"),
        }
    }
}

/// A tolerance in `(0, 1)`, kept exactly as given.
#[derive(Clone, Debug, PartialEq)]
pub struct Epsilon(Rat);

impl Epsilon {
    pub fn new(value: Rat) -> Result<Self> {
        let v = to_f64(&value);
        if !(0.0 < v && v < 1.0) {
            return Err(Error::Config(format!("tolerance {value} outside (0, 1)")));
        }
        Ok(Epsilon(value))
    }

    pub fn value(&self) -> f64 {
        to_f64(&self.0)
    }

    pub fn exact(&self) -> &Rat {
        &self.0
    }
}

impl std::str::FromStr for Epsilon {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Epsilon::new(parse_rat(s).ok_or_else(|| Error::Config(format!("cannot read tolerance `{s}`")))?)
    }
}

#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub epsilon: Epsilon,
    pub axis: AxisChoice,
    pub mode: LiftMode,
    pub oracle: Option<PathBuf>,
    pub seed: u64,
    /// Parameter samples for the residual and projection checks.
    pub check_samples: usize,
    /// Samples per side of the distance estimate; 0 skips it.
    pub distance_samples: usize,
    pub box_half_width: f64,
    /// Continue past failed assumption checks.
    pub force: bool,
    /// Under automatic frame choice, report the first negative plane
    /// outcome instead of trying the next frame.
    pub stop_on_negative: bool,
}

impl PipelineConfig {
    pub fn new(epsilon: Epsilon) -> Self {
        PipelineConfig {
            epsilon,
            axis: AxisChoice::Auto,
            mode: LiftMode::Exact,
            oracle: None,
            seed: 1,
            check_samples: 100,
            distance_samples: 2000,
            box_half_width: 10.0,
            force: false,
            stop_on_negative: false,
        }
    }
}

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    InputError,
    NotEpsilonRational,
    AssumptionFailure,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::InputError => 1,
            Status::NotEpsilonRational => 2,
            Status::AssumptionFailure => 3,
        }
    }
}

/// A univariate polynomial, coefficients from the constant term up.
#[derive(Clone, Debug, Serialize)]
pub struct UPolyDoc {
    pub text: String,
    pub exact: Vec<String>,
    pub float: Vec<f64>,
}

impl From<&UPoly<Rat>> for UPolyDoc {
    fn from(p: &UPoly<Rat>) -> Self {
        UPolyDoc {
            text: p.to_string(),
            exact: p.coeffs().iter().map(|c| c.to_string()).collect(),
            float: p.coeffs().iter().map(to_f64).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TermDoc {
    pub monomial: String,
    pub exact: String,
    pub float: f64,
}

/// A multivariate polynomial, terms by decreasing order.
#[derive(Clone, Debug, Serialize)]
pub struct MPolyDoc {
    pub vars: Vec<String>,
    pub text: String,
    pub terms: Vec<TermDoc>,
}

impl From<&MPoly> for MPolyDoc {
    fn from(p: &MPoly) -> Self {
        let vars = p.vars().to_vec();
        let terms = p
            .terms()
            .rev()
            .map(|(m, c)| {
                let mono: Vec<String> = m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(j, &e)| if e == 1 { vars[j].clone() } else { format!("{}^{e}", vars[j]) })
                    .collect();
                TermDoc {
                    monomial: if mono.is_empty() { "1".into() } else { mono.join("*") },
                    exact: c.to_string(),
                    float: to_f64(c),
                }
            })
            .collect();
        MPolyDoc { vars, text: p.to_string(), terms }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FrameAttempt {
    pub frame: String,
    pub assumptions: Option<AssumptionReport>,
    pub projected: Option<MPolyDoc>,
    pub projected_hypotheses: Option<ProjectedReport>,
    pub plane_source: Option<Provenance>,
    pub outcome: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PlaneDoc {
    pub provenance: Provenance,
    /// Labels of the two numerators in original coordinates.
    pub labels: [String; 2],
    pub first: UPolyDoc,
    pub second: UPolyDoc,
    pub denominator: UPolyDoc,
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct LiftDoc {
    pub requested_mode: LiftMode,
    pub mode: LiftMode,
    /// Label of the lifted numerator in original coordinates.
    pub label: String,
    pub numerator: UPolyDoc,
    pub targets: Vec<RootTarget>,
    pub interpolation_defect: f64,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpaceParamDoc {
    pub x: UPolyDoc,
    pub y: UPolyDoc,
    pub z: UPolyDoc,
    pub denominator: UPolyDoc,
}

impl From<&RationalParam3> for SpaceParamDoc {
    fn from(p: &RationalParam3) -> Self {
        SpaceParamDoc {
            x: (&p.components[0]).into(),
            y: (&p.components[1]).into(),
            z: (&p.components[2]).into(),
            denominator: (&p.denominator).into(),
        }
    }
}

/// Clauses fixed by construction; a violation aborts before this point.
#[derive(Clone, Debug, Serialize)]
pub struct StructuralChecks {
    pub q_square_free: bool,
    pub deg_lifted_below_deg_q: bool,
    pub gcd_trivial: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AsymptoteDoc {
    pub curve: std::result::Result<Vec<Asymptote>, String>,
    pub parametrization: std::result::Result<Vec<Asymptote>, String>,
    /// `(curve index, parametrization index, parallel defect)`.
    pub pairing: std::result::Result<Vec<(usize, usize, f64)>, String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigDoc {
    pub epsilon: String,
    pub epsilon_float: f64,
    pub axis: String,
    pub mode: LiftMode,
    pub oracle: Option<String>,
    pub seed: u64,
    pub check_samples: usize,
    pub distance_samples: usize,
    pub box_half_width: f64,
    pub force: bool,
    pub stop_on_negative: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Document {
    pub status: Status,
    pub exit_code: i32,
    pub input: String,
    pub config: ConfigDoc,
    pub frames: Vec<FrameAttempt>,
    pub selected_frame: Option<String>,
    pub projection: Option<MPolyDoc>,
    pub plane_parametrization: Option<PlaneDoc>,
    pub negative: Option<NegativeReason>,
    pub lift: Option<LiftDoc>,
    pub parametrization_in_frame: Option<SpaceParamDoc>,
    pub parametrization: Option<SpaceParamDoc>,
    pub structural: Option<StructuralChecks>,
    pub postconditions: Option<LiftChecks>,
    pub asymptotes: Option<AsymptoteDoc>,
    pub distance: Option<std::result::Result<DistanceReport, String>>,
    pub error: Option<String>,
    pub notes: Vec<String>,
    /// The output curve in original coordinates.
    #[serde(skip)]
    pub result: Option<RationalParam3>,
}

impl Document {
    fn new(input: &str, cfg: &PipelineConfig) -> Self {
        Document {
            status: Status::Ok,
            exit_code: 0,
            input: input.to_string(),
            config: ConfigDoc {
                epsilon: cfg.epsilon.exact().to_string(),
                epsilon_float: cfg.epsilon.value(),
                axis: cfg.axis.to_string(),
                mode: cfg.mode,
                oracle: cfg.oracle.as_ref().map(|p| p.display().to_string()),
                seed: cfg.seed,
                check_samples: cfg.check_samples,
                distance_samples: cfg.distance_samples,
                box_half_width: cfg.box_half_width,
                force: cfg.force,
                stop_on_negative: cfg.stop_on_negative,
            },
            frames: Vec::new(),
            selected_frame: None,
            projection: None,
            plane_parametrization: None,
            negative: None,
            lift: None,
            parametrization_in_frame: None,
            parametrization: None,
            structural: None,
            postconditions: None,
            asymptotes: None,
            distance: None,
            error: None,
            notes: Vec::new(),
            result: None,
        }
    }

    fn finish(mut self, status: Status) -> Self {
        self.status = status;
        self.exit_code = status.exit_code();
        self
    }

    /// Pretty JSON with every float rounded to 10 significant digits.
    pub fn to_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("document serializes");
        round_floats(&mut v);
        let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
        s.push('\n');
        s
    }
}

/// Rounds to 10 significant digits.
pub fn round10(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.9e}").parse().unwrap_or(x)
}

fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n.as_f64().map(round10).and_then(serde_json::Number::from_f64) {
                *n = r;
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_floats),
        Value::Object(o) => o.values_mut().for_each(round_floats),
        _ => {}
    }
}

/// Everything computed for the frame that produced a parametrization.
struct Accepted {
    frame: ProjectionFrame,
    frame_curve: SpaceCurve,
    projected: PlaneCurve,
    report: AssumptionReport,
    param: PlaneParam,
    labels: [String; 2],
}

enum FrameResult {
    Accepted(Box<Accepted>),
    Negative(NegativeReason),
    Assumption(String),
}

fn original_label(frame: &ProjectionFrame, k: usize) -> String {
    if frame.rotation.is_some() {
        ["u", "v", "e"][k].to_string()
    } else {
        format!("p{}", frame.axis.permutation()[k] + 1)
    }
}

fn try_frame(
    curve: &SpaceCurve,
    frame: &ProjectionFrame,
    oracle: Option<&OracleParam>,
    cfg: &PipelineConfig,
    doc: &mut Document,
) -> Result<FrameResult> {
    let mut attempt = FrameAttempt {
        frame: frame.describe(),
        assumptions: None,
        projected: None,
        projected_hypotheses: None,
        plane_source: None,
        outcome: String::new(),
    };
    let result = frame_steps(curve, frame, oracle, cfg, &mut attempt);
    attempt.outcome = match &result {
        Ok(FrameResult::Accepted(_)) => "parametrized".into(),
        Ok(FrameResult::Negative(r)) => format!("not ε-rational ({r})"),
        Ok(FrameResult::Assumption(why)) => format!("assumptions not met: {why}"),
        Err(e) => format!("error: {e}"),
    };
    doc.frames.push(attempt);
    result
}

fn frame_steps(
    curve: &SpaceCurve,
    frame: &ProjectionFrame,
    oracle: Option<&OracleParam>,
    cfg: &PipelineConfig,
    attempt: &mut FrameAttempt,
) -> Result<FrameResult> {
    let fc = frame.curve_in_frame(curve)?;
    let projected = project_affine_frame(&fc, frame).ok();
    attempt.projected = projected.as_ref().map(|f| (&f.poly).into());
    let report = check_general_assumptions_frame(&fc, frame, projected.as_ref(), cfg.seed)?;
    let failures = report.failures();
    attempt.assumptions = Some(report.clone());
    let Some(projected) = projected else {
        return Ok(FrameResult::Assumption("projection unavailable".into()));
    };
    let hyp = check_projected_hypotheses(&projected)?;
    let hyp_pass = hyp.pass;
    attempt.projected_hypotheses = Some(hyp);
    if !cfg.force && !failures.is_empty() {
        return Ok(FrameResult::Assumption(failures.join("; ")));
    }
    if !cfg.force && !hyp_pass {
        return Ok(FrameResult::Assumption("projected curve fails the hypotheses at infinity".into()));
    }
    let eps = cfg.epsilon.value();
    let matching = oracle.filter(|o| frame.rotation.is_none() && o.axis == Some(frame.axis));
    let (param, labels) = if let Some(o) = matching {
        attempt.plane_source = Some(Provenance::Oracle);
        o.param.validate_for(&projected)?;
        let residual = o.param.residual_on(&projected, cfg.check_samples)?;
        if residual >= eps {
            return Ok(FrameResult::Negative(NegativeReason::ResidualAboveTolerance(residual)));
        }
        (o.param.clone().with_tolerance(eps), o.labels.clone())
    } else {
        attempt.plane_source = Some(Provenance::Baseline);
        let bcfg = BaselineConfig { samples: cfg.check_samples, ..BaselineConfig::default() };
        match parametrize_baseline(&projected, eps, &bcfg)? {
            PlaneOutcome::Param(p) => (p, [original_label(frame, 0), original_label(frame, 1)]),
            PlaneOutcome::NotEpsilonRational(r) => return Ok(FrameResult::Negative(r)),
        }
    };
    Ok(FrameResult::Accepted(Box::new(Accepted { frame: frame.clone(), frame_curve: fc, projected, report, param, labels })))
}

/// Runs all steps on a curve file. Only unreadable input is an `Err`.
pub fn run_pipeline(curve_path: &Path, cfg: &PipelineConfig) -> Result<Document> {
    let curve = read_curve(curve_path)?;
    let name = curve_path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    run_pipeline_on(&curve, &name, cfg)
}

pub fn run_pipeline_on(curve: &SpaceCurve, name: &str, cfg: &PipelineConfig) -> Result<Document> {
    let mut doc = Document::new(name, cfg);
    let oracle = cfg.oracle.as_deref().map(load_oracle_param).transpose()?;
    let frames = match cfg.axis {
        AxisChoice::Auto => candidate_frames(cfg.seed),
        AxisChoice::Fixed(a) => vec![ProjectionFrame::axis(a)],
    };
    if let (Some(o), AxisChoice::Fixed(a)) = (&oracle, cfg.axis) {
        if o.axis != Some(a) {
            doc.notes.push(format!(
                "oracle components {}/{} do not belong to axis {a}; the baseline parametrizer is used",
                o.labels[0], o.labels[1]
            ));
        }
    }
    let mut last_negative = None;
    let mut accepted = None;
    for frame in &frames {
        match try_frame(curve, frame, oracle.as_ref(), cfg, &mut doc) {
            Ok(FrameResult::Accepted(a)) => {
                accepted = Some(a);
                break;
            }
            Ok(FrameResult::Negative(r)) => {
                last_negative = Some(r);
                if cfg.stop_on_negative {
                    break;
                }
            }
            Ok(FrameResult::Assumption(_)) => {}
            Err(e @ (Error::Parse { .. } | Error::Io(_))) => return Err(e),
            Err(_) => {}
        }
    }
    let Some(acc) = accepted else {
        return Ok(match last_negative {
            Some(r) => {
                doc.negative = Some(r);
                doc.finish(Status::NotEpsilonRational)
            }
            None => {
                doc.error = Some("no frame satisfies the assumptions".into());
                doc.finish(Status::AssumptionFailure)
            }
        });
    };
    if frames.first().is_some_and(|f| *f != acc.frame) {
        doc.notes.push(format!("fell back to {}", acc.frame.describe()));
    }
    finish_with(doc, curve, *acc, cfg)
}

fn finish_with(mut doc: Document, curve: &SpaceCurve, acc: Accepted, cfg: &PipelineConfig) -> Result<Document> {
    doc.selected_frame = Some(acc.frame.describe());
    doc.projection = Some((&acc.projected.poly).into());
    let residual = acc.param.residual_on(&acc.projected, cfg.check_samples)?;
    doc.plane_parametrization = Some(PlaneDoc {
        provenance: acc.param.provenance,
        labels: acc.labels.clone(),
        first: (&acc.param.numerators[0]).into(),
        second: (&acc.param.numerators[1]).into(),
        denominator: (&acc.param.denominator).into(),
        residual,
    });
    let lifted = match lift(&acc.frame_curve, &acc.param, cfg.mode) {
        Ok(l) => l,
        Err(e) => {
            doc.error = Some(e.to_string());
            return Ok(doc.finish(Status::AssumptionFailure));
        }
    };
    let (in_frame, original) = match assemble(&acc.param, &lifted.lifted, &acc.frame, lifted.mode) {
        Ok(p) => p,
        Err(e) => {
            doc.error = Some(e.to_string());
            return Ok(doc.finish(Status::AssumptionFailure));
        }
    };
    doc.lift = Some(LiftDoc {
        requested_mode: cfg.mode,
        mode: lifted.mode,
        label: original_label(&acc.frame, 2),
        numerator: (&lifted.lifted).into(),
        targets: lifted.roots.clone(),
        interpolation_defect: lifted.interpolation_defect,
        warnings: lifted.warnings.clone(),
    });
    doc.structural = Some(StructuralChecks { q_square_free: true, deg_lifted_below_deg_q: true, gcd_trivial: true });
    doc.parametrization_in_frame = Some((&in_frame).into());
    doc.parametrization = Some((&original).into());
    doc.result = Some(original.clone());
    let postconditions = lift_checks(
        &in_frame,
        &acc.param,
        &acc.projected,
        acc.report.degree,
        &acc.report.infinity_points,
        lifted.interpolation_defect,
        cfg.check_samples,
    )?;
    if !postconditions.all_pass() {
        doc.notes.extend(postconditions.failures().into_iter().map(|f| format!("postcondition failed: {f}")));
    }
    doc.postconditions = Some(postconditions);

    let a = asymptotes_implicit(curve).map_err(|e| e.to_string());
    let b = asymptotes_parametric(&original).map_err(|e| e.to_string());
    let pairing = match (&a, &b) {
        (Ok(a), Ok(b)) => pair_asymptotes(a, b).map_err(|e| e.to_string()),
        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
    };
    doc.asymptotes = Some(AsymptoteDoc { curve: a, parametrization: b, pairing });
    if cfg.distance_samples > 0 {
        let hc = HausdorffConfig { half_width: cfg.box_half_width, samples: cfg.distance_samples, seed: cfg.seed };
        doc.distance = Some(sampled_hausdorff(curve, &original, &hc).map_err(|e| e.to_string()));
    }
    Ok(doc.finish(Status::Ok))
}

/// Sample source for plot export.
pub enum SampleSource<'a> {
    /// `n` parameter values evenly spread over `[lo, hi]`.
    Param { param: &'a RationalParam3, lo: f64, hi: f64 },
    /// Real points of an implicit curve inside `[-r, r]³`.
    Curve { curve: &'a SpaceCurve, half_width: f64, seed: u64 },
}

/// Parameter values closer than this to a real pole are pushed away.
pub const EXPORT_POLE_MARGIN: f64 = 1e-3;

/// Up to `n` real points; a parametrization always yields exactly `n`.
pub fn sample_points(source: &SampleSource, n: usize) -> Result<Vec<[f64; 3]>> {
    match *source {
        SampleSource::Param { param, lo, hi } => {
            let poles: Vec<f64> = param.poles()?.into_iter().filter(|z| z.im.abs() < 1e-9).map(|z| z.re).collect();
            Ok((0..n)
                .map(|k| {
                    let mut t = if n == 1 { lo } else { lo + (hi - lo) * k as f64 / (n - 1) as f64 };
                    for &xi in &poles {
                        if (t - xi).abs() < EXPORT_POLE_MARGIN {
                            t = xi + if t < xi { -EXPORT_POLE_MARGIN } else { EXPORT_POLE_MARGIN };
                        }
                    }
                    param.eval(t)
                })
                .collect())
        }
        SampleSource::Curve { curve, half_width, seed } => {
            let per_axis = n.div_ceil(3).max(1);
            let mut pts = crate::slice::sample_real_points(curve, half_width, per_axis, seed)?;
            pts.truncate(n);
            Ok(pts)
        }
    }
}

/// CSV text with an `x,y,z` header.
pub fn samples_csv(points: &[[f64; 3]]) -> String {
    let mut s = String::from("x,y,z\n");
    for p in points {
        let _ = writeln!(s, "{},{},{}", p[0], p[1], p[2]);
    }
    s
}

pub fn export_samples(source: &SampleSource, n: usize, path: &Path) -> Result<usize> {
    let pts = sample_points(source, n)?;
    std::fs::write(path, samples_csv(&pts))?;
    Ok(pts.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_upoly;

    fn up(s: &str) -> UPoly<Rat> {
        parse_upoly(s, "t").unwrap()
    }

    #[test]
    fn epsilon_must_lie_in_the_open_unit_interval() {
        assert!("1/100".parse::<Epsilon>().is_ok());
        assert!("0.01".parse::<Epsilon>().is_ok());
        assert!("0".parse::<Epsilon>().is_err());
        assert!("1".parse::<Epsilon>().is_err());
        assert!("abc".parse::<Epsilon>().is_err());
    }

    #[test]
    fn axis_choice_parsing() {
        assert_eq!("auto".parse::<AxisChoice>().unwrap(), AxisChoice::Auto);
        assert_eq!("y".parse::<AxisChoice>().unwrap(), AxisChoice::Fixed(Axis::Y));
        assert!("w".parse::<AxisChoice>().is_err());
    }

    #[test]
    fn rounding_keeps_ten_digits() {
        assert_eq!(round10(-0.27837592493317), -0.2783759249);
        assert_eq!(round10(1.0), 1.0);
        assert_eq!(round10(0.0), 0.0);
    }

    #[test]
    fn line_export_rows() {
        let line = RationalParam3 { components: [up("t"), up("2*t"), up("1")], denominator: up("1"), mode: LiftMode::Exact };
        let src = SampleSource::Param { param: &line, lo: 0.0, hi: 1.0 };
        let pts = sample_points(&src, 3).unwrap();
        assert_eq!(pts, vec![[0.0, 0.0, 1.0], [0.5, 1.0, 1.0], [1.0, 2.0, 1.0]]);
        assert_eq!(samples_csv(&sample_points(&src, 0).unwrap()), "x,y,z\n");
    }

    #[test]
    fn export_avoids_poles() {
        let p = RationalParam3 { components: [up("1"), up("t"), up("0")], denominator: up("t"), mode: LiftMode::Exact };
        let pts = sample_points(&SampleSource::Param { param: &p, lo: -1.0, hi: 1.0 }, 3).unwrap();
        assert_eq!(pts.len(), 3);
        assert!(pts.iter().all(|q| q.iter().all(|c| c.is_finite())));
    }
}
