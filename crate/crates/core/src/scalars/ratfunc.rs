use super::mpoly::{MPoly, NVARS};
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;

/// Reduced quotient of integer polynomials in q, t, Z1..Z4.
///
/// `num/den` is coprime and the leading coefficient of `den` is positive, so
/// structural equality is equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: MPoly::zero(), den: MPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: MPoly::one(), den: MPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc { num: MPoly::constant(BigInt::from(c)), den: MPoly::one() }
    }

    pub fn from_poly(p: MPoly) -> Self {
        RatFunc { num: p, den: MPoly::one() }
    }

    pub fn var(i: usize) -> Self {
        assert!(i < NVARS);
        Self::from_poly(MPoly::var(i))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    /// Builds a reduced fraction; `None` if `den` is zero.
    pub fn new(num: MPoly, den: MPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if d.leading().map(|(_, c)| c.sign() == num_bigint::Sign::Minus).unwrap_or(false) {
            n = n.neg();
            d = d.neg();
        }
        Some(RatFunc { num: n, den: d })
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone()).expect("nonzero den");
        }
        let g = self.den.gcd(&o.den);
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = o.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&b).add(&o.num.mul(&a));
        let den = a.mul(&o.den);
        Self::new(num, den).expect("nonzero den")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        if den.leading().map(|(_, c)| c.sign() == num_bigint::Sign::Minus).unwrap_or(false) {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().map(|(_, c)| c.sign() == num_bigint::Sign::Minus).unwrap_or(false) {
            num = num.neg();
            den = den.neg();
        }
        Some(RatFunc { num, den })
    }

    /// Substitutes exact values for the variables.
    pub fn eval<T: Clone>(
        &self,
        vals: &[T; NVARS],
        from_int: impl Fn(&BigInt) -> T + Copy,
        add: impl Fn(T, T) -> T + Copy,
        mul: impl Fn(T, T) -> T + Copy,
    ) -> (T, T) {
        let one = from_int(&BigInt::one());
        let n = self.num.eval_with(vals, one.clone(), from_int, add, mul);
        let d = self.den.eval_with(vals, one, from_int, add, mul);
        (n, d)
    }

    /// Substitutes rational functions for the variables; `None` if the
    /// denominator vanishes.
    pub fn substitute(&self, vals: &[RatFunc; NVARS]) -> Option<RatFunc> {
        let from_int = |c: &BigInt| RatFunc::from_poly(MPoly::constant(c.clone()));
        let (n, d) = self.eval(vals, from_int, |a, b| a.add(&b), |a, b| a.mul(&b));
        Some(n.mul(&d.inv()?))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.terms().len() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
