use std::str::FromStr;
use std::time::Instant;

use serde_json::{json, Value};

use super::report::{scalars_json, Report};
use super::spec::SpecFile;
use crate::crossed::{build_partial_crossed, canonical_map, comodule_coaction, verify_assoc_unital, verify_coaction};
use crate::error::{Error, Result};
use crate::gauge::{gauge_action, gauge_cocycle, gauged, theorem54_iso, verify_equisatisfiability, weak_conv_inverse};
use crate::globalization::{globalize_group_partial, round_trip, verify_enveloping, EnvelopingActionData};
use crate::hopf::{verify_algebra, verify_hopf};
use crate::linalg::Matrix;
use crate::morita::{build_morita_context, verify_module_structures, verify_morita_pairings};
use crate::partial::{
    induce_partial, is_trivial_cocycle, verify_crossed_conditions, verify_global, verify_lemma31, verify_symmetric,
    verify_twisted_partial,
};
use crate::separability::{separability_idempotent, verify_lemma62, verify_partially_cleft, CleftData};
use crate::tensor::Tensor3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Verify,
    BuildCrossed,
    Globalize,
    Morita,
    Gauge,
    Separability,
    Report,
}

impl Command {
    pub const ALL: [Command; 7] = [
        Command::Verify,
        Command::BuildCrossed,
        Command::Globalize,
        Command::Morita,
        Command::Gauge,
        Command::Separability,
        Command::Report,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Verify => "verify",
            Command::BuildCrossed => "build-crossed",
            Command::Globalize => "globalize",
            Command::Morita => "morita",
            Command::Gauge => "gauge",
            Command::Separability => "separability",
            Command::Report => "report",
        }
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::PreconditionFailed(format!("unknown command {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// Worker threads for the verification sweeps; `None` uses the default pool.
    pub parallel: Option<usize>,
    /// Records wall time in the report, which makes output run-dependent.
    pub timing: bool,
}

/// Runs `command` on `spec`. Input problems (missing objects, shapes) are
/// returned as errors; failures of the mathematics are recorded in the report.
pub fn run(command: Command, spec: &SpecFile, options: &Options) -> Result<Report> {
    let start = Instant::now();
    let mut report = match options.parallel {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::PreconditionFailed(format!("cannot build thread pool: {e}")))?
            .install(|| dispatch(command, spec)),
        None => dispatch(command, spec),
    }?;
    if options.timing {
        report.wall_time = Some(start.elapsed().as_secs_f64());
    }
    Ok(report)
}

fn dispatch(command: Command, spec: &SpecFile) -> Result<Report> {
    let mut report = Report::new(command.name());
    let body = match command {
        Command::Verify => verify(spec, &mut report),
        Command::BuildCrossed => build_crossed(spec, &mut report),
        Command::Globalize => globalize(spec, &mut report),
        Command::Morita => morita(spec, &mut report),
        Command::Gauge => gauge(spec, &mut report),
        Command::Separability => separability(spec, &mut report),
        Command::Report => return full_report(spec),
    };
    absorb_error(body, command.name(), &mut report)?;
    Ok(report)
}

/// Input errors propagate; mathematical ones become report entries.
fn absorb_error(r: Result<()>, stage: &str, report: &mut Report) -> Result<()> {
    match r {
        Err(e) if e.is_input_error() => Err(e),
        Err(e) => {
            report.error(stage, &e);
            Ok(())
        }
        Ok(()) => Ok(()),
    }
}

fn tensor_json(t: &Tensor3) -> Value {
    let (d1, d2, _) = t.dims();
    Value::Array((0..d1).map(|i| Value::Array((0..d2).map(|j| scalars_json(t.fibre(i, j))).collect())).collect())
}

fn images_json(m: &Matrix) -> Value {
    Value::Array((0..m.cols()).map(|j| scalars_json(&m.column(j))).collect())
}

fn verify(spec: &SpecFile, report: &mut Report) -> Result<()> {
    let t = spec.partial()?;
    report.derive("dim_h", t.dim_h());
    report.derive("dim_a", t.dim_a());
    report.derive("trivial_cocycle", is_trivial_cocycle(&t));
    report.check(verify_hopf(t.hopf()));
    report.check(verify_algebra(t.algebra()));
    report.check(verify_twisted_partial(&t));
    report.check(verify_lemma31(&t));
    report.check(verify_crossed_conditions(&t));
    match verify_symmetric(&t) {
        Ok(s) => report.derive("symmetric", s.passed()),
        Err(e) => report.derive("symmetric", e.to_string()),
    }
    Ok(())
}

fn build_crossed(spec: &SpecFile, report: &mut Report) -> Result<()> {
    let t = spec.partial()?;
    let cp = build_partial_crossed(&t)?;
    report.derive("dim", cp.dim());
    report.derive("basis", Value::Array(cp.basis().vectors().iter().map(|v| scalars_json(v)).collect()));
    report.check(verify_assoc_unital(&cp));
    let rho = comodule_coaction(&cp)?;
    let mut coaction = verify_coaction(&cp, &rho);
    coaction.name = "coaction".into();
    report.check(coaction);
    report.derive("coinvariants_dim", rho.coinvariants.dim());
    report.derive("coinvariants_are_a", rho.coinvariants_are_a);
    match canonical_map(&cp) {
        Ok(can) => {
            report.derive("can_rank", can.rank);
            report.derive("can_bijective", can.bijective);
            report.derive("can_bijective_onto_partial_target", can.bijective_onto_partial_target);
            report.derive("balanced_dim", can.balanced.dim());
        }
        Err(e) => report.derive("can", e.to_string()),
    }
    Ok(())
}

/// Enveloping data from the spec (global action and θ) or, failing that,
/// the standard construction for group algebras.
fn enveloping(spec: &SpecFile) -> Result<EnvelopingActionData> {
    let t = spec.partial()?;
    match (&spec.global, &spec.theta) {
        (Some(_), Some(theta)) => EnvelopingActionData::new(t, spec.global_action()?, theta.clone()),
        _ => globalize_group_partial(&t),
    }
}

fn globalize(spec: &SpecFile, report: &mut Report) -> Result<()> {
    if let (Some(_), Some(idem), None) = (&spec.global, &spec.idempotent, &spec.theta) {
        let g = spec.global_action()?;
        report.check(verify_global(&g));
        let (induced, _) = induce_partial(&g, idem)?;
        report.derive("induced_dim_a", induced.dim_a());
        report.derive("induced_action", tensor_json(induced.action()));
        report.derive("induced_cocycle", tensor_json(induced.cocycle()));
        return Ok(());
    }
    let env = enveloping(spec)?;
    report.derive("dim_b", env.global.algebra().dim());
    report.derive("theta", images_json(&env.theta));
    report.check(verify_enveloping(&env));
    report.check(round_trip(&env)?);
    Ok(())
}

fn morita(spec: &SpecFile, report: &mut Report) -> Result<()> {
    let env = enveloping(spec)?;
    let ctx = build_morita_context(&env)?;
    report.derive("dim_r", ctx.r.dim());
    report.derive("dim_s", ctx.s.dim());
    report.derive("dim_m", ctx.m.dim());
    report.derive("dim_n", ctx.n.dim());
    report.derive("phi_rank", ctx.phi.rank());
    let (_, phi) = crate::morita::phi_embed(&env, &ctx.r, &ctx.s);
    report.check(phi);
    report.check(verify_module_structures(&ctx));
    let pairings = verify_morita_pairings(&ctx);
    report.derive("sigma_rank", pairings.sigma_rank);
    report.derive("tau_rank", pairings.tau_rank);
    report.derive("sigma_surjective", pairings.sigma_surjective);
    report.derive("tau_surjective", pairings.tau_surjective);
    report.check(pairings.report);
    Ok(())
}

fn gauge(spec: &SpecFile, report: &mut Report) -> Result<()> {
    let v = spec.gauge.as_ref().ok_or_else(|| Error::MissingObject("gauge".into()))?;
    let t = spec.partial()?;
    let pair = weak_conv_inverse(v, &t)?
        .ok_or_else(|| Error::PreconditionFailed("the gauge map has no weak convolution inverse".into()))?;
    report.derive("inverse", images_json(pair.v_inv.matrix()));
    report.derive("fully_invertible", pair.fully_invertible);
    report.derive("gauged_action", tensor_json(&gauge_action(&t, &pair)));
    report.derive("gauged_cocycle", tensor_json(&gauge_cocycle(&t, &pair)));
    let mut gauged_checks = verify_twisted_partial(&gauged(&t, &pair));
    gauged_checks.name = "gauged_twisted_partial".into();
    report.derive("original_passes", verify_twisted_partial(&t).passed());
    report.derive("gauged_passes", gauged_checks.passed());
    let (iso, iso_report) = theorem54_iso(&t, &pair)?;
    report.derive("isomorphism", images_json(&iso));
    report.check(iso_report);
    report.check(verify_equisatisfiability(&t, &pair));
    Ok(())
}

fn separability(spec: &SpecFile, report: &mut Report) -> Result<()> {
    let t = spec.partial()?;
    let integral = spec.integral_t.as_ref().ok_or_else(|| Error::MissingObject("integral_t".into()))?;
    let cp = build_partial_crossed(&t)?;
    let cd = match (&spec.gamma, &spec.gamma_prime) {
        (Some(g), Some(gp)) => CleftData::new(cp, g.clone(), gp.clone())?,
        (None, None) => CleftData::standard(cp)?,
        (Some(_), None) => return Err(Error::MissingObject("gamma_prime".into())),
        (None, Some(_)) => return Err(Error::MissingObject("gamma".into())),
    };
    report.check(verify_partially_cleft(&cd)?);
    let (e, sep) = separability_idempotent(&cd, integral, spec.center_c.as_deref())?;
    report.derive("e_lift", scalars_json(&e.lift));
    report.derive("e_coords", scalars_json(&e.coords));
    report.derive("balanced_dim", cd.balanced().dim());
    if let Ok(can) = canonical_map(cd.crossed()) {
        report.derive("can_rank", can.rank);
        report.derive("can_bijective", can.bijective);
    }
    report.check(sep);
    if let Some(c) = &spec.center_c {
        report.check(verify_lemma62(&cd, &cd.crossed().embed(c))?);
    }
    Ok(())
}

/// Every command whose objects are present.
fn full_report(spec: &SpecFile) -> Result<Report> {
    let mut report = Report::new("report");
    let t = spec.partial()?;
    let mut commands = vec![Command::Verify, Command::BuildCrossed];
    let envelopable = (spec.global.is_some() && spec.theta.is_some()) || crate::hopf::groups::group_of(t.hopf()).is_ok();
    if envelopable || (spec.global.is_some() && spec.idempotent.is_some()) {
        commands.push(Command::Globalize);
    }
    if envelopable {
        commands.push(Command::Morita);
    }
    if spec.gauge.is_some() {
        commands.push(Command::Gauge);
    }
    if spec.integral_t.is_some() {
        commands.push(Command::Separability);
    }
    for c in commands {
        report.absorb(dispatch(c, spec)?);
    }
    report.derive("commands", json!(report.checks.iter().map(|c| c.name.clone()).collect::<Vec<_>>()));
    Ok(report)
}
