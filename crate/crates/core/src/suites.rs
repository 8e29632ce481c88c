//! Named verification suites behind one configuration record.
//!
//! A [`SuiteConfig`] picks a suite, sizes and a scalar mode. [`run_suite`]
//! draws parameters once per seed, runs the module suite in the matching
//! backend and merges the per-seed reports. Computation errors inside a suite
//! become failed checks; only configuration problems are returned as errors.

use crate::daha::{verify_daha_presentation, verify_dunkl_commutativity, verify_symmetrizer, Daha};
use crate::laurent::Weight;
use crate::macdonald::{
    monomial_expansion, render_expansion, verify_determinant_twist, verify_gamma_conjugation, verify_macdonald,
    verify_specialization, verify_y_spectrum, MacdonaldTable,
};
use crate::ncverify::audit::straightening_suite;
use crate::ncverify::{
    build_presentation, check_morphism, check_r_constants, graded_dimension_audit, identity_suite, MorphismName,
    PresentationName,
};
use crate::qdo::Dro;
use crate::report::{Check, Report};
use crate::scalars::{draw_params, parse_rational, Field, Fp, Mode, ParamContext, Params, RatFunc, MAX_ELL, Q};
use crate::toroidal::{verify_correspondence, verify_toroidal_relations, GkloContext, ModeWindow};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown scalar mode `{0}`")]
    UnknownMode(String),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    DahaPresentation,
    DunklCommutativity,
    Macdonald,
    GammaConjugation,
    ToroidalRelations,
    Correspondence,
    RConstants,
    PbwAudit,
    Morphisms,
    IdentitySuite,
    Straightening,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::DahaPresentation,
        Suite::DunklCommutativity,
        Suite::Macdonald,
        Suite::GammaConjugation,
        Suite::ToroidalRelations,
        Suite::Correspondence,
        Suite::RConstants,
        Suite::PbwAudit,
        Suite::Morphisms,
        Suite::IdentitySuite,
        Suite::Straightening,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::DahaPresentation => "daha-presentation",
            Suite::DunklCommutativity => "dunkl-commutativity",
            Suite::Macdonald => "macdonald",
            Suite::GammaConjugation => "gamma-conjugation",
            Suite::ToroidalRelations => "toroidal-relations",
            Suite::Correspondence => "correspondence",
            Suite::RConstants => "r-constants",
            Suite::PbwAudit => "pbw-audit",
            Suite::Morphisms => "morphisms",
            Suite::IdentitySuite => "identity-suite",
            Suite::Straightening => "straightening",
        }
    }

    /// Scalar mode used when the configuration does not name one.
    pub fn default_mode(self) -> Mode {
        match self {
            Suite::DahaPresentation | Suite::Macdonald | Suite::Correspondence | Suite::RConstants => Mode::Exact,
            _ => Mode::ModpRandom,
        }
    }

    pub fn default_degree(self) -> Option<usize> {
        match self {
            Suite::Macdonald | Suite::Correspondence => Some(4),
            Suite::GammaConjugation => Some(3),
            Suite::PbwAudit => Some(2),
            Suite::Morphisms => Some(6),
            Suite::IdentitySuite | Suite::Straightening => Some(5),
            _ => None,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        Suite::ALL.into_iter().find(|x| x.as_str() == s).ok_or_else(|| ConfigError::UnknownSuite(s.to_string()))
    }
}

/// Everything a suite run depends on. Unset fields take per-suite defaults.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields, rename_all = "kebab-case")]
pub struct SuiteConfig {
    pub suite: Option<Suite>,
    pub n: usize,
    pub ell: usize,
    pub degree: Option<usize>,
    /// Inclusive mode window `[min, max]` for the toroidal suite.
    pub mode_window: Option<[i32; 2]>,
    /// `exact`, `rational-random` or `modp-random`.
    pub mode: Option<String>,
    pub seeds: Vec<u64>,
    /// `generic` or a comma list of rational literals.
    pub z: Option<String>,
    pub presentation: Option<String>,
    pub slack: Option<usize>,
    /// Random words for the straightening suite.
    pub words: Option<usize>,
    pub json: Option<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: None,
            n: 2,
            ell: 0,
            degree: None,
            mode_window: None,
            mode: None,
            seeds: vec![1],
            z: None,
            presentation: None,
            slack: None,
            words: None,
            json: None,
        }
    }
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig { suite: Some(suite), ..Default::default() }
    }

    pub fn suite(&self) -> Result<Suite, ConfigError> {
        self.suite.ok_or_else(|| ConfigError::Invalid("no suite given".into()))
    }

    pub fn scalar_mode(&self) -> Result<Mode, ConfigError> {
        match &self.mode {
            None => Ok(self.suite()?.default_mode()),
            Some(m) => Mode::parse(m).ok_or_else(|| ConfigError::UnknownMode(m.clone())),
        }
    }

    /// Fixed Z values, or `None` for generic/drawn ones.
    pub fn z_values(&self) -> Result<Option<Vec<BigRational>>, ConfigError> {
        match self.z.as_deref().map(str::trim) {
            None | Some("generic") | Some("") => Ok(None),
            Some(list) => list
                .split(',')
                .map(|s| parse_rational(s.trim()).ok_or_else(|| ConfigError::Invalid(format!("bad rational `{}`", s))))
                .collect::<Result<Vec<_>, _>>()
                .map(Some),
        }
    }

    /// Checks bounds and fills defaults.
    pub fn validate(&self) -> Result<SuiteConfig, ConfigError> {
        let suite = self.suite()?;
        let mode = self.scalar_mode()?;
        let bad = |m: String| Err(ConfigError::Invalid(m));
        let mut c = self.clone();
        c.mode = Some(mode.as_str().to_string());
        if c.degree.is_none() {
            c.degree = suite.default_degree();
        }
        let max_n = match suite {
            Suite::RConstants => 6,
            Suite::PbwAudit | Suite::Morphisms | Suite::IdentitySuite | Suite::Straightening => 3,
            _ => crate::laurent::MAXN,
        };
        if c.n == 0 || c.n > max_n {
            return bad(format!("n must lie in 1..={} for {}", max_n, suite));
        }
        if c.ell > MAX_ELL {
            return bad(format!("ell must be at most {}", MAX_ELL));
        }
        if let Some(d) = c.degree {
            if d == 0 || d > 8 {
                return bad("degree must lie in 1..=8".into());
            }
        }
        if mode.is_random() && c.seeds.is_empty() {
            return bad("random modes need at least one seed".into());
        }
        if let Some(z) = c.z_values()? {
            if z.len() != c.ell {
                return bad(format!("{} Z values given for ell = {}", z.len(), c.ell));
            }
            if z.iter().any(|r| r == &BigRational::from_integer(0.into())) {
                return bad("Z values must be nonzero".into());
            }
        }
        if let Some([lo, hi]) = c.mode_window {
            if lo > hi || lo < -4 || hi > 4 {
                return bad("mode window must be a nonempty range inside [-4, 4]".into());
            }
        }
        if let Some(p) = &c.presentation {
            PresentationName::parse(p).map_err(|e| ConfigError::Invalid(e.to_string()))?;
        }
        if c.slack.is_some_and(|s| s > 2) {
            return bad("slack must be at most 2".into());
        }
        if c.words.is_some_and(|w| w == 0 || w > 10_000) {
            return bad("words must lie in 1..=10000".into());
        }
        Ok(c)
    }
}

fn error_check(suite: Suite, e: impl fmt::Display) -> Report {
    let mut r = Report::new(suite.as_str());
    r.push(Check::fail("error", e.to_string()));
    r.finish()
}

fn lift<E: fmt::Display>(suite: Suite, r: Result<Report, E>) -> Report {
    r.unwrap_or_else(|e| error_check(suite, e))
}

fn presentation_name(c: &SuiteConfig, default: PresentationName) -> PresentationName {
    c.presentation.as_deref().map(|p| PresentationName::parse(p).expect("validated")).unwrap_or(default)
}

/// One run of `c.suite` at fixed parameters.
fn run_with<F: Field>(c: &SuiteConfig, p: &Params<F>, seed: u64) -> Report {
    let suite = c.suite.expect("validated");
    let n = c.n;
    let deg = c.degree.unwrap_or(0);
    match suite {
        Suite::DahaPresentation => {
            let mut r = Report::new(suite.as_str());
            r.absorb("", verify_daha_presentation(n, p));
            r.absorb("symmetrizer/", verify_symmetrizer(n, p));
            r.finish()
        }
        Suite::DunklCommutativity => lift(suite, verify_dunkl_commutativity(n, p)),
        Suite::Macdonald => {
            let mut r = Report::new(suite.as_str());
            let d = deg as i32;
            let parts = (|| {
                r.absorb("", verify_macdonald(n, d, p)?);
                r.absorb("y-spectrum/", verify_y_spectrum(n, d, p)?);
                r.absorb("twist/", verify_determinant_twist(n, d.min(3), p)?);
                Ok::<_, crate::macdonald::MacdonaldError>(())
            })();
            if let Err(e) = parts {
                r.push(Check::fail("error", e.to_string()));
            }
            r.finish()
        }
        Suite::GammaConjugation => {
            let daha = Daha::from_params(n, p);
            let ds: Result<Vec<Dro<F>>, _> = (1..=n).map(|i| daha.dunkl(i, &p.z)).collect();
            match ds {
                Ok(ds) => lift(suite, verify_gamma_conjugation(n, p, deg as i32, &ds)),
                Err(e) => error_check(suite, e),
            }
        }
        Suite::ToroidalRelations => {
            let [lo, hi] = c.mode_window.unwrap_or([-2, 2]);
            let w = ModeWindow::new(lo, hi).expect("validated");
            verify_toroidal_relations(&GkloContext::new(n, p), w)
        }
        Suite::Correspondence => {
            let closed = (n == 1 && p.ell() == 0).then(|| {
                let one = F::one();
                (one.sub(&p.q.pow(2)), p.q.pow(-2).sub(&one))
            });
            lift(suite, verify_correspondence(n, p, deg as i32, closed))
        }
        Suite::RConstants => check_r_constants(n, &p.q),
        Suite::PbwAudit => {
            let name = presentation_name(c, PresentationName::D1);
            match build_presentation(name, n, &p.q) {
                Ok(pres) => graded_dimension_audit(&pres, deg, c.slack.unwrap_or(1)),
                Err(e) => error_check(suite, e),
            }
        }
        Suite::Morphisms => {
            let z = p.z.first().cloned().unwrap_or_else(F::one);
            let mut r = Report::new(suite.as_str());
            for m in [MorphismName::PhiEll(c.ell.max(2)), MorphismName::Psi1Z] {
                match check_morphism(m, n, deg, &p.q, &z) {
                    Ok(x) => r.absorb("", x),
                    Err(e) => r.push(Check::fail(format!("{}.error", m), e.to_string())),
                }
            }
            r.finish()
        }
        Suite::IdentitySuite => lift(suite, identity_suite(n, &p.q, deg)),
        Suite::Straightening => {
            let name = presentation_name(c, PresentationName::D1);
            match build_presentation(name, n, &p.q) {
                Ok(pres) => lift(suite, straightening_suite(&pres, c.words.unwrap_or(100), deg, seed)),
                Err(e) => error_check(suite, e),
            }
        }
    }
}

fn params_for<F: Field>(c: &SuiteConfig, mode: Mode, seed: u64) -> Result<(Params<F>, Value), ConfigError> {
    let mut ctx = ParamContext::new(c.ell, mode, seed).with_degree_bound(c.degree.unwrap_or(4).max(4) as u32, c.n);
    if let Some(z) = c.z_values()? {
        ctx = ctx.with_fixed_z(z);
    }
    if mode.is_random() {
        ctx = draw_params(&ctx).map_err(|e| ConfigError::Invalid(e.to_string()))?;
    }
    let p = Params::<F>::from_context(&ctx).ok_or_else(|| ConfigError::Invalid("parameters unavailable in this mode".into()))?;
    let drawn: serde_json::Map<String, Value> =
        ctx.assignments.iter().map(|(k, v)| (k.clone(), Value::String(v.to_string()))).collect();
    Ok((p, Value::Object(drawn)))
}

fn run_mode<F: Field>(c: &SuiteConfig, mode: Mode) -> Result<Report, ConfigError> {
    let suite = c.suite()?;
    let seeds: Vec<u64> = if mode.is_random() || suite == Suite::Straightening { c.seeds.clone() } else { vec![0] };
    let mut out = Report::new(suite.as_str());
    let mut drawn = Vec::new();
    for &seed in &seeds {
        let (p, values) = params_for::<F>(c, mode, seed)?;
        let r = run_with(c, &p, seed);
        for (k, v) in &r.params {
            out.set_param(k, v.clone());
        }
        let prefix = if seeds.len() > 1 { format!("seed{}/", seed) } else { String::new() };
        out.absorb(&prefix, r);
        drawn.push(json!({ "seed": seed, "values": values }));
    }
    out.set_param("n", c.n);
    out.set_param("ell", c.ell);
    out.set_param("mode", mode.as_str());
    if let Some(d) = c.degree {
        out.set_param("degree", d);
    }
    if mode.is_random() {
        out.set_param("seeds", json!(seeds));
        out.set_param("draws", Value::Array(drawn));
    }
    if let Some(z) = &c.z {
        out.set_param("z", z.as_str());
    }
    Ok(out.finish())
}

/// Runs the configured suite; configuration problems are the only errors.
pub fn run_suite(config: &SuiteConfig) -> Result<Report, ConfigError> {
    let c = config.validate()?;
    match c.scalar_mode()? {
        Mode::Exact => run_mode::<RatFunc>(&c, Mode::Exact),
        Mode::RationalRandom => run_mode::<Q>(&c, Mode::RationalRandom),
        Mode::ModpRandom => run_mode::<Fp>(&c, Mode::ModpRandom),
    }
}

/// Exact `P_λ` in the monomial basis.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MacdonaldExpansion {
    pub schema: u32,
    pub n: usize,
    pub lambda: Vec<i32>,
    pub rendered: String,
    pub terms: Vec<MacdonaldTerm>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MacdonaldTerm {
    pub mu: Vec<i32>,
    pub coeff: String,
}

/// `P_λ(q, t)` with symbolic q, t, leading term first.
pub fn compute_macdonald(n: usize, lambda: &[i32]) -> Result<MacdonaldExpansion, ConfigError> {
    if n == 0 || n > crate::laurent::MAXN {
        return Err(ConfigError::Invalid(format!("n must lie in 1..={}", crate::laurent::MAXN)));
    }
    if lambda.len() > n {
        return Err(ConfigError::Invalid(format!("λ has more than {} parts", n)));
    }
    let mut parts = lambda.to_vec();
    parts.resize(n, 0);
    let w = Weight(parts);
    let p = Params::<RatFunc>::generic(0).expect("symbolic parameters");
    let mut tab = MacdonaldTable::new(n, p.q, p.t);
    let poly = tab.poly(&w).map_err(|e| ConfigError::Invalid(e.to_string()))?;
    let coeffs = monomial_expansion(&poly);
    let terms = coeffs.iter().rev().map(|(mu, c)| MacdonaldTerm { mu: mu.0.clone(), coeff: c.to_string() }).collect();
    Ok(MacdonaldExpansion { schema: 1, n, lambda: w.0, rendered: render_expansion(&coeffs), terms })
}

/// Exact specialisation check `t = q^k` for the Macdonald table, used by the acceptance run.
pub fn macdonald_specialization(n: usize, d: usize, ks: &[i64]) -> Report {
    lift(Suite::Macdonald, verify_specialization(n, d as i32, ks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
            let j = serde_json::to_string(&s).unwrap();
            assert_eq!(j, format!("\"{}\"", s.as_str()));
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn validation_rejects_out_of_range() {
        let mut c = SuiteConfig::new(Suite::RConstants);
        c.n = 0;
        assert!(c.validate().is_err());
        let mut c = SuiteConfig::new(Suite::DunklCommutativity);
        c.seeds.clear();
        assert!(c.validate().is_err());
        let mut c = SuiteConfig::new(Suite::DunklCommutativity);
        c.ell = 1;
        c.z = Some("1/2,3".into());
        assert!(c.validate().is_err());
        c.mode = Some("fuzzy".into());
        assert_eq!(c.validate(), Err(ConfigError::UnknownMode("fuzzy".into())));
    }

    #[test]
    fn config_json_uses_kebab_case() {
        let c: SuiteConfig =
            serde_json::from_str(r#"{"suite": "pbw-audit", "presentation": "D1", "mode-window": [-1, 1]}"#).unwrap();
        assert_eq!(c.suite, Some(Suite::PbwAudit));
        assert_eq!(c.mode_window, Some([-1, 1]));
        assert_eq!(c.n, 2);
        assert!(serde_json::from_str::<SuiteConfig>(r#"{"sweet": 1}"#).is_err());
    }

    #[test]
    fn r_constants_suite_passes() {
        let r = run_suite(&SuiteConfig::new(Suite::RConstants)).unwrap();
        assert!(r.all_pass(), "{}", r.to_json());
        assert_eq!(r.params["mode"], "exact");
    }

    #[test]
    fn pbw_audit_reports_dimension_45() {
        let mut c = SuiteConfig::new(Suite::PbwAudit);
        c.presentation = Some("D1".into());
        let r = run_suite(&c).unwrap();
        assert!(r.all_pass(), "{}", r.to_json());
        assert_eq!(r.params["dimension"], 45);
    }

    #[test]
    fn small_macdonald_expansions() {
        assert_eq!(compute_macdonald(2, &[1, 1]).unwrap().rendered, "m[1,1]");
        assert_eq!(compute_macdonald(2, &[1]).unwrap().rendered, "m[1]");
        let e = compute_macdonald(2, &[2, 0]).unwrap();
        assert!(e.rendered.starts_with("m[2] + ("), "{}", e.rendered);
        assert!(e.rendered.ends_with(")·m[1,1]"), "{}", e.rendered);
        assert!(compute_macdonald(2, &[0, 1]).is_err());
    }
}
