//! Inequality harness: each catalog entry evaluated as a (lhs, rhs) pair on a
//! radial test function, with reports, empirical constants and suites.

mod catalog;
mod checks;
mod suite;

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::geometry::{AnalyticFn, DeformationParams, ParamsSummary, RadialFn, RadialProfile};
use crate::transform::QuadratureSpec;
use crate::{FkaError, Result};

pub use catalog::{CheckId, Direction, InequalityDef, Mode, CATALOG};
pub use checks::{
    check_donoho_stark, check_entropy, dilation_ratios, estimate_empirical_constant, estimate_jt_constant,
    gauss_damp_decay, hy_failure_probe, kernel_bounded_case, random_mixtures, transform_of, DecayFit,
    EmpiricalEstimate,
};
pub use suite::{run_suite, CheckEntry, MixtureSpec, Skipped, SuiteConfig, SuiteReport};

pub const DEFAULT_TOLERANCE: f64 = 1e-5;

pub type Exponents = BTreeMap<String, f64>;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CheckReport {
    pub check: CheckId,
    pub anchor: String,
    pub function: String,
    pub params: ParamsSummary,
    pub exponents: Exponents,
    #[serde(with = "real")]
    pub lhs: f64,
    #[serde(with = "real")]
    pub rhs: f64,
    #[serde(with = "real")]
    pub ratio: f64,
    pub mode: Mode,
    pub pass: bool,
    pub tolerance: f64,
    pub notes: String,
    /// named intermediate quantities (entropies, epsilon/delta, B_1, ...)
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, f64>,
}

/// Non-finite reals are written as the strings "inf", "-inf" and "nan".
mod real {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else if v.is_nan() {
            s.serialize_str("nan")
        } else if *v > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_str("-inf")
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(f64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(v),
            Repr::Text(t) => match t.as_str() {
                "inf" => Ok(f64::INFINITY),
                "-inf" => Ok(f64::NEG_INFINITY),
                "nan" => Ok(f64::NAN),
                _ => Err(serde::de::Error::custom(format!("not a real: {t}"))),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOptions {
    pub tolerance: f64,
    pub spec: QuadratureSpec,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { tolerance: DEFAULT_TOLERANCE, spec: QuadratureSpec::default() }
    }
}

/// A test function bound to parameters with its transform built on first use,
/// so several checks on the same input share one set of Hankel values.
pub struct Prepared<'a> {
    pub params: &'a DeformationParams,
    pub profile: RadialProfile,
    pub f: Arc<AnalyticFn>,
    ff: OnceLock<Result<Arc<dyn RadialFn>>>,
    spec: QuadratureSpec,
}

impl<'a> Prepared<'a> {
    pub fn new(params: &'a DeformationParams, profile: &RadialProfile, spec: &QuadratureSpec) -> Result<Self> {
        Ok(Prepared {
            params,
            profile: profile.clone(),
            f: Arc::new(profile.bind(params)?),
            ff: OnceLock::new(),
            spec: *spec,
        })
    }

    /// Radial factor of F f.
    pub fn ff(&self) -> Result<Arc<dyn RadialFn>> {
        self.ff.get_or_init(|| transform_of(self.params, &self.profile, &self.spec)).clone()
    }
}

/// Pass rule: exact checks compare in the catalog direction with relative
/// slack, empirical checks need a finite ratio, report-only checks pass.
pub fn passes(def: &InequalityDef, lhs: f64, rhs: f64, tol: f64) -> bool {
    match def.mode {
        Mode::ReportOnly => true,
        Mode::EmpiricalConstant => (lhs / rhs).is_finite(),
        Mode::ExactConstant => {
            if lhs.is_nan() || rhs.is_nan() {
                return false;
            }
            let scale = if def.additive { rhs.abs().max(1.0) } else { rhs.abs() };
            match def.direction {
                Direction::Le => lhs <= rhs + tol * scale,
                Direction::Ge => lhs >= rhs - tol * scale,
            }
        }
    }
}

/// Evaluate one catalog inequality on one test function.
pub fn run_check(
    id: CheckId,
    params: &DeformationParams,
    profile: &RadialProfile,
    exponents: &Exponents,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let prep = Prepared::new(params, profile, &opts.spec)?;
    run_prepared(id, &prep, exponents, opts)
}

/// As `run_check`, reusing a prepared input.
pub fn run_prepared(
    id: CheckId,
    prep: &Prepared<'_>,
    exponents: &Exponents,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let def = id.def();
    for k in exponents.keys() {
        if !def.exponents.contains(&k.as_str()) {
            return Err(FkaError::Config(format!("{id} takes exponents {:?}, got '{k}'", def.exponents)));
        }
    }
    let out = checks::evaluate(id, prep, exponents)?;
    let ratio = out.lhs / out.rhs;
    Ok(CheckReport {
        check: id,
        anchor: def.anchor.to_string(),
        function: out.function.unwrap_or_else(|| prep.profile.to_string()),
        params: prep.params.summary(),
        exponents: out.exponents,
        lhs: out.lhs,
        rhs: out.rhs,
        ratio,
        mode: def.mode,
        pass: passes(def, out.lhs, out.rhs, opts.tolerance),
        tolerance: opts.tolerance,
        notes: out.notes,
        values: out.values,
    })
}
