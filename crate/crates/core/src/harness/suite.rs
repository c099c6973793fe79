//! Batch runs over (params, profile, check) from a JSON configuration.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{
    random_mixtures, run_prepared, CheckId, CheckOptions, CheckReport, Exponents, Prepared, DEFAULT_TOLERANCE,
};
use crate::geometry::{DeformationParams, ParamsSummary, RadialProfile};
use crate::par::prelude::*;
use crate::transform::QuadratureSpec;
use crate::{FkaError, Result};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default)]
    pub seed: u64,
    pub params: Vec<ParamsSummary>,
    #[serde(default)]
    pub profiles: Vec<String>,
    pub checks: Vec<CheckEntry>,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default)]
    pub output: Option<String>,
    #[serde(default)]
    pub random_mixtures: Option<MixtureSpec>,
}

fn default_tolerance() -> f64 {
    DEFAULT_TOLERANCE
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MixtureSpec {
    pub count: usize,
    pub l_max: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CheckEntry {
    pub id: CheckId,
    #[serde(default)]
    pub exponents: ExponentSets,
}

/// One exponent set or a list of them.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ExponentSets {
    One(Exponents),
    Many(Vec<Exponents>),
}

impl Default for ExponentSets {
    fn default() -> Self {
        ExponentSets::One(Exponents::new())
    }
}

impl ExponentSets {
    pub fn sets(&self) -> Vec<Exponents> {
        match self {
            ExponentSets::One(e) => vec![e.clone()],
            ExponentSets::Many(v) if v.is_empty() => vec![Exponents::new()],
            ExponentSets::Many(v) => v.clone(),
        }
    }
}

/// A check that could not be evaluated on an input, with the reason.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Skipped {
    pub check: CheckId,
    pub params: ParamsSummary,
    pub function: String,
    pub exponents: Exponents,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Default)]
pub struct SuiteReport {
    pub reports: Vec<CheckReport>,
    pub skipped: Vec<Skipped>,
}

impl SuiteReport {
    /// Exact checks that failed.
    pub fn exact_failures(&self) -> usize {
        self.reports.iter().filter(|r| r.mode == super::Mode::ExactConstant && !r.pass).count()
    }

    /// (passed, total) per check, in catalog order.
    pub fn tally(&self) -> BTreeMap<CheckId, (usize, usize)> {
        let mut t = BTreeMap::new();
        for r in &self.reports {
            let e = t.entry(r.check).or_insert((0, 0));
            e.1 += 1;
            if r.pass {
                e.0 += 1;
            }
        }
        t
    }
}

impl SuiteConfig {
    pub fn from_json(s: &str) -> Result<Self> {
        let cfg: SuiteConfig = serde_json::from_str(s).map_err(|e| FkaError::Config(e.to_string()))?;
        if !(cfg.tolerance > 0.0) {
            return Err(FkaError::Config(format!("tolerance must be positive, got {}", cfg.tolerance)));
        }
        Ok(cfg)
    }

    fn all_profiles(&self) -> Result<Vec<RadialProfile>> {
        let mut out = self.profiles.iter().map(|s| RadialProfile::parse(s)).collect::<Result<Vec<_>>>()?;
        if let Some(m) = &self.random_mixtures {
            out.extend(random_mixtures(self.seed, m.count, m.l_max, 0));
        }
        Ok(out)
    }
}

/// Errors that mean "not applicable here" rather than a numerical failure.
fn is_skip(e: &FkaError) -> bool {
    matches!(
        e,
        FkaError::Constraint(_)
            | FkaError::Inadmissible(_)
            | FkaError::Unsupported(_)
            | FkaError::UnsupportedA(_)
            | FkaError::Divergent(_)
            | FkaError::Domain(_)
    )
}

enum Entry {
    Report(CheckReport),
    Skip(Skipped),
}

/// Sort key: catalog index, exponent set, params, profile.
type Key = (usize, usize, usize, usize);

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let params = cfg.params.iter().map(|p| DeformationParams::new(p.n, p.k, p.a)).collect::<Result<Vec<_>>>()?;
    let profiles = cfg.all_profiles()?;
    let opts = CheckOptions { tolerance: cfg.tolerance, spec: QuadratureSpec::default() };
    let checks: Vec<(CheckId, Vec<Exponents>)> = cfg.checks.iter().map(|c| (c.id, c.exponents.sets())).collect();
    for (id, sets) in &checks {
        for e in sets {
            for k in e.keys() {
                if !id.def().exponents.contains(&k.as_str()) {
                    return Err(FkaError::Config(format!("{id} takes exponents {:?}, got '{k}'", id.def().exponents)));
                }
            }
        }
    }

    let mut jobs = Vec::new();
    for pi in 0..params.len() {
        for fi in 0..profiles.len() {
            jobs.push((pi, Some(fi)));
        }
        // the probe builds its own family
        jobs.push((pi, None));
    }

    let results: Vec<Vec<(Key, Entry)>> = jobs
        .par_iter()
        .map(|&(pi, fi)| {
            let p = &params[pi];
            let mut out = Vec::new();
            let probe = RadialProfile::laguerre_mode(0);
            let profile = fi.map(|i| &profiles[i]).unwrap_or(&probe);
            let prep = match Prepared::new(p, profile, &opts.spec) {
                Ok(x) => x,
                Err(e) => {
                    for (id, sets) in &checks {
                        if (*id == CheckId::HyFailProbe) != fi.is_none() {
                            continue;
                        }
                        for (ei, ex) in sets.iter().enumerate() {
                            let key = (*id as usize, ei, pi, fi.unwrap_or(0));
                            out.push((key, skip(*id, p, profile.to_string(), ex, &e)));
                        }
                    }
                    return out;
                }
            };
            for (id, sets) in &checks {
                if (*id == CheckId::HyFailProbe) != fi.is_none() {
                    continue;
                }
                for (ei, ex) in sets.iter().enumerate() {
                    let key = (*id as usize, ei, pi, fi.unwrap_or(0));
                    let entry = match run_prepared(*id, &prep, ex, &opts) {
                        Ok(r) => Entry::Report(r),
                        Err(e) if is_skip(&e) => skip(*id, p, profile.to_string(), ex, &e),
                        Err(e) => Entry::Report(failed(*id, p, profile, ex, &opts, &e)),
                    };
                    out.push((key, entry));
                }
            }
            out
        })
        .collect();

    let mut all: Vec<(Key, Entry)> = results.into_iter().flatten().collect();
    all.sort_by_key(|(k, _)| *k);
    let mut rep = SuiteReport::default();
    for (_, e) in all {
        match e {
            Entry::Report(r) => rep.reports.push(r),
            Entry::Skip(s) => rep.skipped.push(s),
        }
    }
    Ok(rep)
}

fn skip(id: CheckId, p: &DeformationParams, function: String, ex: &Exponents, e: &FkaError) -> Entry {
    Entry::Skip(Skipped { check: id, params: p.summary(), function, exponents: ex.clone(), reason: e.to_string() })
}

fn failed(
    id: CheckId,
    p: &DeformationParams,
    f: &RadialProfile,
    ex: &Exponents,
    opts: &CheckOptions,
    e: &FkaError,
) -> CheckReport {
    let def = id.def();
    CheckReport {
        check: id,
        anchor: def.anchor.to_string(),
        function: f.to_string(),
        params: p.summary(),
        exponents: ex.clone(),
        lhs: f64::NAN,
        rhs: f64::NAN,
        ratio: f64::NAN,
        mode: def.mode,
        pass: false,
        tolerance: opts.tolerance,
        notes: format!("evaluation failed: {e}"),
        values: BTreeMap::new(),
    }
}
