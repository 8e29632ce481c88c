//! Coefficient field arithmetic for Q(q, t, Z1..Zl).
//!
//! Three backends share the [`Field`] interface: exact reduced rational
//! functions, specialisation at random rationals, and specialisation at random
//! residues modulo the Mersenne prime 2^61 - 1.

mod mpoly;
mod params;
mod ratfunc;

pub use mpoly::{mono_cmp, MPoly, Mono, NVARS};
pub use params::{draw_params, Mode, ParamContext, Params, FieldValue, MAX_ELL};
pub use ratfunc::RatFunc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parameter draw exhausted after {0} attempts")]
    ExhaustedDraws(usize),
    #[error("mode {0} cannot host this backend")]
    WrongMode(&'static str),
}

pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(c: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, ScalarError>;
    fn is_zero(&self) -> bool;

    /// Indeterminate number `i` (q, t, Z1, ...) when the backend is symbolic.
    fn variable(_i: usize) -> Option<Self> {
        None
    }

    fn from_value(v: &FieldValue) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, o: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&o.inv()?))
    }

    fn from_ratio(n: i64, d: i64) -> Result<Self, ScalarError> {
        Self::from_i64(n).div(&Self::from_i64(d))
    }

    /// Integer power; a negative exponent on zero is a caller bug.
    fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut r = Self::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        r
    }
}

/// The prime 2^61 - 1.
pub const P61: u64 = (1u64 << 61) - 1;

/// Residue modulo [`P61`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Fp(u64);

impl Fp {
    pub fn new(v: u64) -> Self {
        Fp(v % P61)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn from_bigint(b: &BigInt) -> Self {
        let m = BigInt::from(P61);
        let r = ((b % &m) + &m) % &m;
        Fp(r.to_u64().expect("reduced residue"))
    }

    #[inline]
    pub fn mulf(self, o: Fp) -> Fp {
        let p = (self.0 as u128) * (o.0 as u128);
        let lo = (p as u64) & P61;
        let hi = (p >> 61) as u64;
        let s = lo + hi;
        Fp(if s >= P61 { s - P61 } else { s })
    }

    #[inline]
    pub fn addf(self, o: Fp) -> Fp {
        let s = self.0 + o.0;
        Fp(if s >= P61 { s - P61 } else { s })
    }

    #[inline]
    pub fn subf(self, o: Fp) -> Fp {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P61 - o.0 })
    }

    #[inline]
    pub fn negf(self) -> Fp {
        Fp(if self.0 == 0 { 0 } else { P61 - self.0 })
    }

    pub fn invf(self) -> Option<Fp> {
        if self.0 == 0 {
            return None;
        }
        let mut r = Fp(1);
        let mut b = self;
        let mut e = P61 - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mulf(b);
            }
            b = b.mulf(b);
            e >>= 1;
        }
        Some(r)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for Fp {
    const NAME: &'static str = "modp";

    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_i64(c: i64) -> Self {
        if c >= 0 {
            Fp::new(c as u64)
        } else {
            Fp::new(c.unsigned_abs()).negf()
        }
    }
    fn add(&self, o: &Self) -> Self {
        self.addf(*o)
    }
    fn sub(&self, o: &Self) -> Self {
        self.subf(*o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.mulf(*o)
    }
    fn neg(&self) -> Self {
        self.negf()
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        self.invf().ok_or(ScalarError::DivisionByZero)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn from_value(v: &FieldValue) -> Option<Self> {
        match v {
            FieldValue::Modp(x) => Some(Fp::new(*x)),
            FieldValue::Rational(r) => {
                let d = Fp::from_bigint(r.denom()).invf()?;
                Some(Fp::from_bigint(r.numer()).mulf(d))
            }
        }
    }
}

/// Exact rational number.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Q(pub BigRational);

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for Q {
    const NAME: &'static str = "rational";

    fn zero() -> Self {
        Q(BigRational::zero())
    }
    fn one() -> Self {
        Q(BigRational::one())
    }
    fn from_i64(c: i64) -> Self {
        Q(BigRational::from_integer(BigInt::from(c)))
    }
    fn add(&self, o: &Self) -> Self {
        Q(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        Q(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        Q(&self.0 * &o.0)
    }
    fn neg(&self) -> Self {
        Q(-&self.0)
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        if self.0.is_zero() {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(Q(self.0.recip()))
        }
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn from_value(v: &FieldValue) -> Option<Self> {
        match v {
            FieldValue::Rational(r) => Some(Q(r.clone())),
            FieldValue::Modp(_) => None,
        }
    }
}

impl Field for RatFunc {
    const NAME: &'static str = "exact";

    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_i64(c: i64) -> Self {
        RatFunc::from_int(c)
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFunc::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc::mul(self, o)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        RatFunc::inv(self).ok_or(ScalarError::DivisionByZero)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn variable(i: usize) -> Option<Self> {
        (i < NVARS).then(|| RatFunc::var(i))
    }
    fn from_value(v: &FieldValue) -> Option<Self> {
        match v {
            FieldValue::Rational(r) => {
                let n = MPoly::constant(r.numer().clone());
                let d = MPoly::constant(r.denom().clone());
                RatFunc::new(n, d)
            }
            FieldValue::Modp(_) => None,
        }
    }
}

/// Specialises an exact scalar at residues for q, t, Z1.. (missing entries are taken as 1).
pub fn eval_fp(x: &RatFunc, vals: &[Fp]) -> Result<Fp, ScalarError> {
    let mut v = [Fp(1); NVARS];
    v[..vals.len()].copy_from_slice(vals);
    let (n, d) = x.eval(&v, Fp::from_bigint, |a, b| a.addf(b), |a, b| a.mulf(b));
    Ok(n.mulf(d.invf().ok_or(ScalarError::DivisionByZero)?))
}

/// Renders a rational for reports: integers without a slash.
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let n: BigInt = a.trim().parse().ok()?;
        let d: BigInt = b.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::var(0)
    }

    #[test]
    fn inverse_and_negation() {
        let a = q().sub(&q());
        assert!(Field::is_zero(&a));
        assert!(Field::mul(&q(), &Field::inv(&q()).unwrap()).is_one());
    }

    #[test]
    fn difference_of_squares_in_q() {
        let qi = Field::inv(&q()).unwrap();
        let lhs = Field::mul(&Field::sub(&q(), &qi), &Field::add(&q(), &qi));
        let rhs = Field::sub(&q().pow(2), &q().pow(-2));
        assert_eq!(lhs, rhs);
        // independent: at q = 3 the value is 9 - 1/9 = 80/9
        let v = eval_fp(&lhs, &[Fp::new(3)]).unwrap();
        assert_eq!(v, Fp::from_ratio(80, 9).unwrap());
    }

    #[test]
    fn sign_convention_on_denominator() {
        let a = RatFunc::new(MPoly::one(), MPoly::constant(BigInt::from(-2))).unwrap();
        assert_eq!(a.den().leading().unwrap().1, BigInt::from(2));
        assert_eq!(a.num().constant_value().unwrap(), BigInt::from(-1));
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert_eq!(Fp::zero().inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(Field::inv(&RatFunc::zero()), Err(ScalarError::DivisionByZero));
        assert_eq!(Q::one().div(&Q::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn fp_reduction_is_correct() {
        let a = Fp::new(P61 - 1);
        assert_eq!(a.mulf(a), Fp::new(1));
        assert_eq!(Fp::from_i64(-1), a);
        assert_eq!(Fp::new(12345).mulf(Fp::new(12345).invf().unwrap()), Fp::one());
    }
}
