use super::{Field, Fp, ScalarError, P61};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// At most four Z-parameters fit the exact backend.
pub const MAX_ELL: usize = 4;

const MAX_DRAWS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exact,
    RationalRandom,
    ModpRandom,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::RationalRandom => "rational-random",
            Mode::ModpRandom => "modp-random",
        }
    }

    pub fn parse(s: &str) -> Option<Mode> {
        match s {
            "exact" => Some(Mode::Exact),
            "rational-random" => Some(Mode::RationalRandom),
            "modp-random" => Some(Mode::ModpRandom),
            _ => None,
        }
    }

    pub fn is_random(self) -> bool {
        self != Mode::Exact
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldValue {
    Modp(u64),
    Rational(BigRational),
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldValue::Modp(v) => write!(f, "{}", v),
            FieldValue::Rational(r) => f.write_str(&super::rational_string(r)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamContext {
    pub ell: usize,
    pub mode: Mode,
    pub seed: u64,
    /// Only 2^61 - 1 is supported in modp mode.
    pub prime: Option<u64>,
    pub assignments: BTreeMap<String, FieldValue>,
    /// Exponent bound B for the blacklist `q^a t^b != 1`, `|a|,|b| <= B`.
    pub blacklist_bound: u32,
    /// Z-values fixed by the caller instead of drawn.
    pub fixed_z: Option<Vec<BigRational>>,
}

impl ParamContext {
    pub fn new(ell: usize, mode: Mode, seed: u64) -> Self {
        ParamContext {
            ell,
            mode,
            seed,
            prime: (mode == Mode::ModpRandom).then_some(P61),
            assignments: BTreeMap::new(),
            blacklist_bound: 48,
            fixed_z: None,
        }
    }

    /// Sets the blacklist bound from a maximal degree and rank as `4 * degree * n`.
    pub fn with_degree_bound(mut self, degree: u32, n: usize) -> Self {
        self.blacklist_bound = 4 * degree.max(1) * n.max(1) as u32;
        self
    }

    pub fn with_fixed_z(mut self, z: Vec<BigRational>) -> Self {
        self.fixed_z = Some(z);
        self
    }

    pub fn param_names(&self) -> Vec<String> {
        let mut v = vec!["q".to_string(), "t".to_string()];
        v.extend((1..=self.ell).map(|a| format!("Z{}", a)));
        v
    }
}

fn to_fp(v: &FieldValue) -> Option<Fp> {
    Fp::from_value(v)
}

/// `true` when the draw avoids every blacklisted coincidence.
fn passes_blacklist(q: Fp, t: Fp, zs: &[Fp], bound: u32) -> bool {
    let one = Fp::one();
    if q.is_zero() || t.is_zero() || q == one || t == one {
        return false;
    }
    if zs.iter().any(|z| z.is_zero() || *z == one) {
        return false;
    }
    let b = bound as i64;
    let qi = q.invf().expect("nonzero");
    let ti = t.invf().expect("nonzero");
    let powers = |x: Fp, xi: Fp| -> Vec<Fp> {
        // index k holds x^(k - b)
        let mut v = vec![Fp::one(); (2 * b + 1) as usize];
        for k in 1..=b as usize {
            v[b as usize + k] = v[b as usize + k - 1].mulf(x);
            v[b as usize - k] = v[b as usize - k + 1].mulf(xi);
        }
        v
    };
    let qp = powers(q, qi);
    let tp = powers(t, ti);
    // q^a t^b = 1 iff q^a = t^-b
    let mut tmap: HashMap<Fp, Vec<i64>> = HashMap::new();
    for (k, v) in tp.iter().enumerate() {
        tmap.entry(*v).or_default().push(k as i64 - b);
    }
    for (k, v) in qp.iter().enumerate() {
        let a = k as i64 - b;
        let target = v.invf().expect("nonzero");
        if let Some(bs) = tmap.get(&target) {
            if bs.iter().any(|&bb| a != 0 || bb != 0) {
                return false;
            }
        }
    }
    // Z_a must avoid q^a t^b and pairwise ratios of that form, with a smaller bound
    if !zs.is_empty() {
        let small = b.min(12);
        let mut prods = HashMap::new();
        for a in -small..=small {
            for bb in -small..=small {
                prods.insert(qp[(a + b) as usize].mulf(tp[(bb + b) as usize]), ());
            }
        }
        for (i, z) in zs.iter().enumerate() {
            if prods.contains_key(z) || prods.contains_key(&z.invf().expect("nonzero")) {
                return false;
            }
            for w in &zs[i + 1..] {
                if prods.contains_key(&z.mulf(w.invf().expect("nonzero"))) {
                    return false;
                }
            }
        }
    }
    true
}

fn draw_value(mode: Mode, rng: &mut ChaCha8Rng) -> FieldValue {
    match mode {
        Mode::ModpRandom => FieldValue::Modp(rng.gen_range(2..=P61 - 2)),
        _ => {
            let n: i64 = rng.gen_range(2..=9973);
            let d: i64 = rng.gen_range(1..=997);
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            FieldValue::Rational(BigRational::new(BigInt::from(sign * n), BigInt::from(d)))
        }
    }
}

/// Draws q, t, Z1..Zl deterministically from the seed, redrawing on blacklist hits.
pub fn draw_params(ctx: &ParamContext) -> Result<ParamContext, ScalarError> {
    if !ctx.mode.is_random() {
        return Err(ScalarError::WrongMode("exact"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let names = ctx.param_names();
    for _ in 0..MAX_DRAWS {
        let mut vals: Vec<FieldValue> = Vec::with_capacity(names.len());
        for (k, _) in names.iter().enumerate() {
            let fixed = if k >= 2 { ctx.fixed_z.as_ref().and_then(|z| z.get(k - 2)) } else { None };
            vals.push(match fixed {
                Some(r) if ctx.mode == Mode::ModpRandom => FieldValue::Modp(
                    to_fp(&FieldValue::Rational(r.clone())).map(|f| f.value()).unwrap_or(0),
                ),
                Some(r) => FieldValue::Rational(r.clone()),
                None => draw_value(ctx.mode, &mut rng),
            });
        }
        let fps: Option<Vec<Fp>> = vals.iter().map(to_fp).collect();
        let Some(fps) = fps else { continue };
        let zs = &fps[2..];
        let z_ok = ctx.fixed_z.is_some() || passes_blacklist(fps[0], fps[1], zs, ctx.blacklist_bound);
        if z_ok && passes_blacklist(fps[0], fps[1], &[], ctx.blacklist_bound) {
            let mut out = ctx.clone();
            out.assignments = names.iter().cloned().zip(vals).collect();
            return Ok(out);
        }
    }
    Err(ScalarError::ExhaustedDraws(MAX_DRAWS))
}

/// Concrete parameter values q, t, Z in a chosen backend.
#[derive(Clone, Debug, PartialEq)]
pub struct Params<F> {
    pub q: F,
    pub t: F,
    pub z: Vec<F>,
}

impl<F: Field> Params<F> {
    /// Symbolic parameters (exact backend).
    pub fn generic(ell: usize) -> Option<Self> {
        assert!(ell <= MAX_ELL, "at most {} Z-parameters", MAX_ELL);
        Some(Params {
            q: F::variable(0)?,
            t: F::variable(1)?,
            z: (0..ell).map(|a| F::variable(2 + a)).collect::<Option<Vec<_>>>()?,
        })
    }

    /// Parameters from a context: drawn values in random modes, indeterminates in exact mode.
    pub fn from_context(ctx: &ParamContext) -> Option<Self> {
        if ctx.mode == Mode::Exact {
            let mut p = Self::generic(ctx.ell)?;
            if let Some(fz) = &ctx.fixed_z {
                for (a, r) in fz.iter().enumerate().take(ctx.ell) {
                    p.z[a] = F::from_value(&FieldValue::Rational(r.clone()))?;
                }
            }
            return Some(p);
        }
        let get = |k: &str| ctx.assignments.get(k).and_then(F::from_value);
        Some(Params {
            q: get("q")?,
            t: get("t")?,
            z: (1..=ctx.ell).map(|a| get(&format!("Z{}", a))).collect::<Option<Vec<_>>>()?,
        })
    }

    pub fn ell(&self) -> usize {
        self.z.len()
    }

    /// Same q, t with the Z-parameters inverted.
    pub fn z_inverted(&self) -> Self {
        Params {
            q: self.q.clone(),
            t: self.t.clone(),
            z: self.z.iter().map(|z| z.inv().expect("nonzero Z")).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_deterministic() {
        let c = ParamContext::new(2, Mode::ModpRandom, 1);
        assert_eq!(draw_params(&c).unwrap(), draw_params(&c).unwrap());
        let r = ParamContext::new(1, Mode::RationalRandom, 1);
        assert_eq!(draw_params(&r).unwrap(), draw_params(&r).unwrap());
    }

    #[test]
    fn draws_respect_blacklist_and_range() {
        for seed in 0..20 {
            let c = draw_params(&ParamContext::new(2, Mode::ModpRandom, seed)).unwrap();
            for v in c.assignments.values() {
                let FieldValue::Modp(x) = v else { panic!("modp value expected") };
                assert!((2..=P61 - 2).contains(x));
            }
            let p = Params::<Fp>::from_context(&c).unwrap();
            assert_ne!(p.q, Fp::one());
        }
    }

    #[test]
    fn exact_mode_has_no_assignments() {
        let c = ParamContext::new(1, Mode::Exact, 0);
        assert!(c.assignments.is_empty());
        assert!(draw_params(&c).is_err());
    }

    #[test]
    fn blacklist_rejects_roots_of_unity() {
        let q = Fp::from_i64(-1);
        assert!(!passes_blacklist(q, Fp::new(7), &[], 4));
        // t = q^-2 gives q^2 t = 1
        let q = Fp::new(5);
        let t = q.mulf(q).invf().unwrap();
        assert!(!passes_blacklist(q, t, &[], 4));
        assert!(passes_blacklist(Fp::new(5), Fp::new(7), &[], 4));
    }
}
