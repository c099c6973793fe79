//! The inequality catalog: identifiers, constant modes, directions, anchors
//! and accepted exponents.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::FkaError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Hy,
    HyPaley,
    HlWeighted,
    HlYoung,
    HlDual,
    Pitt,
    WeightedGen,
    HpwSharp,
    HpwAb,
    HpwFrac,
    HpwLp,
    GaussDamp,
    Nash,
    Clarkson,
    L1L2,
    Entropy,
    EntropyGen,
    EntropyVar,
    GlobalUp,
    Ds,
    Ms,
    Bab,
    HyFailProbe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    ExactConstant,
    EmpiricalConstant,
    ReportOnly,
}

/// Which side is expected to be larger.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// lhs <= rhs
    Le,
    /// lhs >= rhs
    Ge,
}

#[derive(Debug, Clone, Copy)]
pub struct InequalityDef {
    pub id: CheckId,
    pub mode: Mode,
    pub direction: Direction,
    pub anchor: &'static str,
    /// accepted exponent names
    pub exponents: &'static [&'static str],
    /// both sides are sums of logarithms, so the slack is absolute near zero
    pub additive: bool,
}

use CheckId::*;
use Direction::*;
use Mode::*;

const fn def(
    id: CheckId,
    mode: Mode,
    direction: Direction,
    anchor: &'static str,
    exponents: &'static [&'static str],
) -> InequalityDef {
    InequalityDef { id, mode, direction, anchor, exponents, additive: false }
}

const fn additive(d: InequalityDef) -> InequalityDef {
    InequalityDef { additive: true, ..d }
}

pub const CATALOG: [InequalityDef; 23] = [
    def(Hy, ExactConstant, Le, "prop.HY: follows from the Riesz–Thorin interpolation theorem", &["p"]),
    def(HyPaley, EmpiricalConstant, Le, "corollary after thm.lorentz-inter: continuous mapping from L^p_{k,a}", &["p"]),
    def(HlWeighted, EmpiricalConstant, Le, "§4 Prop.: for some p∈(1,2)", &["p"]),
    def(HlYoung, EmpiricalConstant, Le, "thm.HY-qlarge: Let q>2 and f∈L^{(q)}_ψ", &["q"]),
    def(HlDual, EmpiricalConstant, Le, "prop.Dunkl-RS: where 1/r = 1−(q′−1)/p′", &["p", "q"]),
    def(Pitt, EmpiricalConstant, Le, "§8 corollary: Pitt's inequality for F_{k,a}", &["p", "q", "alpha", "l"]),
    def(WeightedGen, EmpiricalConstant, Le, "thm.weighted: holds in the following ranges", &["p", "q", "u", "v"]),
    def(HpwSharp, ExactConstant, Ge, "thm.Heisenberg-BSKO: saturated by functions of the form", &[]),
    def(HpwAb, ExactConstant, Ge, "prop.HPW: is not squared; this is due to scaling", &["alpha", "beta"]),
    def(HpwFrac, EmpiricalConstant, Ge, "§5 theorem: there exists a finite constant c=c(α,β)", &["alpha", "beta"]),
    def(HpwLp, EmpiricalConstant, Le, "§5 theorem: at two different scales", &["p", "alpha", "beta"]),
    def(GaussDamp, ExactConstant, Le, "lemma-tech: is the exponent −α/a", &["p", "alpha", "t"]),
    def(Nash, ExactConstant, Le, "§6: Nash-type inequality", &["s"]),
    def(Clarkson, ExactConstant, Le, "§6: Clarkson-type inequality for ϑ_{k,a}(x)dx", &["s"]),
    def(L1L2, EmpiricalConstant, Ge, "§6 Prop.: there exists a constant C′>0", &["s"]),
    additive(def(Entropy, ExactConstant, Ge, "thm.Shannon: with ‖f‖_{L²_{k,a}}=1", &[])),
    additive(def(EntropyGen, ExactConstant, Ge, "ineq.general: If we drop the requirement", &[])),
    additive(def(
        EntropyVar,
        ExactConstant,
        Le,
        "eqn.entropy-variance: is a generalized variance of the probability density",
        &["alpha", "c"],
    )),
    def(GlobalUp, EmpiricalConstant, Ge, "§9 corollary: Global uncertainty principle", &["s", "beta"]),
    def(Ds, ExactConstant, Ge, "§9 theorem: ε-concentrated on S and δ-bandlimited", &["s_radius", "v_radius"]),
    def(Ms, ReportOnly, Ge, "§9 Prop.: then μ_{k,a}(A_f)·μ_{k,a}(A_{F_{k,a}f}) ≥ 1", &["tau"]),
    def(Bab, EmpiricalConstant, Le, "§9 theorem: There exists a constant C=C(k,a,S,V)", &["s_radius", "v_radius"]),
    def(HyFailProbe, ReportOnly, Le, "prop.no-HY: there exists no finite constant D_p", &["p", "n"]),
];

impl CheckId {
    pub const ALL: [CheckId; 23] = [
        Hy,
        HyPaley,
        HlWeighted,
        HlYoung,
        HlDual,
        Pitt,
        WeightedGen,
        HpwSharp,
        HpwAb,
        HpwFrac,
        HpwLp,
        GaussDamp,
        Nash,
        Clarkson,
        L1L2,
        Entropy,
        EntropyGen,
        EntropyVar,
        GlobalUp,
        Ds,
        Ms,
        Bab,
        HyFailProbe,
    ];

    pub fn def(self) -> &'static InequalityDef {
        &CATALOG[self as usize]
    }

    /// Upper-case catalog name, e.g. `HPW_SHARP`.
    pub fn name(self) -> &'static str {
        match self {
            Hy => "HY",
            HyPaley => "HY_PALEY",
            HlWeighted => "HL_WEIGHTED",
            HlYoung => "HL_YOUNG",
            HlDual => "HL_DUAL",
            Pitt => "PITT",
            WeightedGen => "WEIGHTED_GEN",
            HpwSharp => "HPW_SHARP",
            HpwAb => "HPW_AB",
            HpwFrac => "HPW_FRAC",
            HpwLp => "HPW_LP",
            GaussDamp => "GAUSS_DAMP",
            Nash => "NASH",
            Clarkson => "CLARKSON",
            L1L2 => "L1L2",
            Entropy => "ENTROPY",
            EntropyGen => "ENTROPY_GEN",
            EntropyVar => "ENTROPY_VAR",
            GlobalUp => "GLOBAL_UP",
            Ds => "DS",
            Ms => "MS",
            Bab => "BAB",
            HyFailProbe => "HY_FAIL_PROBE",
        }
    }

    /// Command-line spelling, e.g. `hpw-sharp`.
    pub fn slug(self) -> String {
        self.name().to_ascii_lowercase().replace('_', "-")
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = FkaError;

    /// Accepts `HPW_SHARP`, `hpw_sharp` and `hpw-sharp`.
    fn from_str(s: &str) -> Result<Self, FkaError> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        CheckId::ALL
            .iter()
            .copied()
            .find(|c| c.name() == norm)
            .ok_or_else(|| FkaError::Config(format!("unknown check '{s}'")))
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for CheckId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
